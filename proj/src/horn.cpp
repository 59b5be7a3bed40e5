#include "qcat/horn.hpp"

#include <sstream>

#include "qcat/enumerate.hpp"
#include "qcat/errors.hpp"
#include "qcat/standard.hpp"

namespace qcat {

HornFiller::HornFiller(const SimplexIndex& x, int n, int k) : x_(x), n_(n), k_(k) {
  if (n < 1 || k < 0 || k > n) throw InvalidInput("HornFiller: bad horn");
  if (n > x.max_dim()) throw BoundError("HornFiller: dimension above the index");
  for (int id = 0; id < static_cast<int>(x.size(n)); ++id) table_[key(x.face_ids(n, id))].push_back(id);
}

std::string HornFiller::key(std::span<const int> faces) const {
  std::vector<int> f(faces.begin(), faces.end());
  f[k_] = -1;
  return face_key(f);
}

std::span<const int> HornFiller::fillers(std::span<const int> faces) const {
  static const std::vector<int> none;
  auto it = table_.find(key(faces));
  if (it == table_.end()) return none;
  return it->second;
}

std::optional<int> HornFiller::first(std::span<const int> faces) const {
  auto f = fillers(faces);
  if (f.empty()) return std::nullopt;
  return f.front();
}

std::vector<int> horn_face_ids(const SimplicialMap& h, const SimplexIndex& x, int n, int k) {
  std::vector<int> out(n + 1, -1);
  const SimplicialSet& src = *h.source;
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v)
      if (v != i) verts.push_back(v);
    out[i] = x.id(h(ordered_simplex(src, verts)));
  }
  return out;
}

std::optional<Simplex> inner_horn_filler(const SimplexIndex& x, const SimplicialMap& h, int n, int k) {
  HornFiller hf(x, n, k);
  auto f = hf.first(horn_face_ids(h, x, n, k));
  if (!f) return std::nullopt;
  return x.at(n, *f);
}

std::string HornCheck::describe(const SimplexIndex& x) const {
  if (pass) return "all " + std::to_string(horns) + " horns fill";
  std::ostringstream os;
  os << "Lambda^" << k << "[" << n << "] with faces";
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    os << " d" << i << "=" << to_string(x.at(n - 1, witness[i]));
  }
  os << " has no filler";
  return os.str();
}

HornCheck horn_fill_class_check(const SimplexIndex& x, HornClass cls, int max_n) {
  HornCheck out;
  std::vector<std::pair<int, int>> shapes;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) {
      bool want = false;
      switch (cls) {
        case HornClass::Right3: want = (n == 3 && k == 3); break;
        case HornClass::Left3: want = (n == 3 && k == 0); break;
        case HornClass::Inner: want = (k > 0 && k < n); break;
        case HornClass::All: want = true; break;
      }
      if (want) shapes.emplace_back(n, k);
    }
  for (auto [n, k] : shapes) {
    if (n > x.max_dim()) throw BoundError("horn_fill_class_check: index too shallow");
    Subobject hin = horn_in(n, k);
    HornFiller hf(x, n, k);
    EnumOptions opt;
    opt.budget = 50000000;
    enumerate_maps(*hin.sset, x, opt, [&](const Assignment& a) {
      ++out.horns;
      SimplicialMap h = to_map(hin.sset, x, a);
      std::vector<int> f = horn_face_ids(h, x, n, k);
      if (!hf.first(f)) {
        out.pass = false;
        out.n = n;
        out.k = k;
        out.witness = f;
        return false;
      }
      return true;
    });
    if (!out.pass) break;
  }
  return out;
}

}  // namespace qcat
