#include "qcat/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {
namespace surj {

Monotone from_degens(std::span<const int> degens, int gdim) {
  const int n = gdim + static_cast<int>(degens.size());
  Monotone s(n + 1);
  // s(i) = i - #{j in degens : j < i}
  for (int i = 0; i <= n; ++i) {
    int below = 0;
    for (int j : degens) below += (j < i) ? 1 : 0;
    s[i] = i - below;
  }
  return s;
}

std::vector<int> to_degens(std::span<const int> s) {
  std::vector<int> out;
  for (int j = static_cast<int>(s.size()) - 2; j >= 0; --j)
    if (s[j] == s[j + 1]) out.push_back(j);
  return out;
}

Monotone compose(std::span<const int> a, std::span<const int> b) {
  Monotone out(b.size());
  for (std::size_t t = 0; t < b.size(); ++t) out[t] = a[b[t]];
  return out;
}

Monotone identity(int n) {
  Monotone s(n + 1);
  for (int i = 0; i <= n; ++i) s[i] = i;
  return s;
}

Monotone coface(int n, int i) {
  Monotone s(n);
  for (int t = 0; t < n; ++t) s[t] = t < i ? t : t + 1;
  return s;
}

Monotone codegeneracy(int n, int j) {
  Monotone s(n + 2);
  for (int t = 0; t <= n + 1; ++t) s[t] = t <= j ? t : t - 1;
  return s;
}

bool is_monotone(std::span<const int> s, int target_dim) {
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (s[t] < 0 || s[t] > target_dim) return false;
    if (t > 0 && s[t] < s[t - 1]) return false;
  }
  return true;
}

}  // namespace surj

Simplex degenerate_by(const Simplex& x, std::span<const int> s) {
  if (static_cast<int>(s.size()) == x.dim() + 1 && x.nondegenerate()) {
    return Simplex{x.gdim, x.gen, surj::to_degens(s)};
  }
  Monotone inner = surj::from_degens(x.degens, x.gdim);
  Monotone total = surj::compose(inner, s);
  return Simplex{x.gdim, x.gen, surj::to_degens(total)};
}

Simplex degeneracy(const Simplex& x, int j) {
  if (j < 0 || j > x.dim()) throw InvalidInput("degeneracy index out of range");
  return degenerate_by(x, surj::codegeneracy(x.dim(), j));
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  for (int j : s.degens) os << 's' << j;
  os << (s.degens.empty() ? "" : "(") << 'g' << s.gdim << '.' << s.gen
     << (s.degens.empty() ? "" : ")");
  return os.str();
}

}  // namespace qcat
