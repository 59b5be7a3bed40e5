#include "qcat/standard.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qcat/errors.hpp"

namespace qcat {

std::string tuple_name(const std::vector<int>& verts) {
  bool small = true;
  for (int v : verts) small &= (v >= 0 && v < 10);
  std::string s;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!small && i > 0) s += ',';
    s += std::to_string(verts[i]);
  }
  return s;
}

SSetPtr ordered_complex(int nverts, const std::vector<std::vector<int>>& simplices) {
  std::set<std::vector<int>> all;
  for (int v = 0; v < nverts; ++v) all.insert({v});
  for (const auto& s : simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= nverts || (i > 0 && s[i] <= s[i - 1]))
        throw InvalidInput("ordered_complex: tuple is not strictly increasing in range");
    }
    const int m = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      all.insert(sub);
    }
  }
  int top = 0;
  for (const auto& s : all) top = std::max(top, static_cast<int>(s.size()) - 1);
  std::vector<std::vector<std::vector<int>>> by_dim(top + 1);
  for (const auto& s : all) by_dim[s.size() - 1].push_back(s);
  SimplicialSet x;
  std::map<std::vector<int>, int> index;
  for (int n = 0; n <= top; ++n) {
    for (const auto& s : by_dim[n]) {
      std::vector<Simplex> faces;
      if (n > 0) {
        for (int i = 0; i <= n; ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + i);
          faces.push_back(Simplex::generator(n - 1, index.at(f)));
        }
      }
      index[s] = x.add(n, tuple_name(s), std::move(faces));
    }
  }
  x.set_bound(std::max(top, 0), true);
  return share(std::move(x));
}

std::vector<int> vertex_tuple(const SimplicialSet& x, const Simplex& s) { return x.vertices(s); }

Simplex ordered_simplex(const SimplicialSet& x, const std::vector<int>& verts) {
  if (verts.empty()) throw InvalidInput("ordered_simplex: empty tuple");
  std::vector<int> distinct;
  Monotone sigma;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i > 0 && verts[i] < verts[i - 1]) throw InvalidInput("ordered_simplex: tuple not monotone");
    if (i == 0 || verts[i] != verts[i - 1]) distinct.push_back(verts[i]);
    sigma.push_back(static_cast<int>(distinct.size()) - 1);
  }
  const int m = static_cast<int>(distinct.size()) - 1;
  if (auto hit = x.find(tuple_name(distinct)); hit && hit->gdim == m && x.vertices(*hit) == distinct)
    return degenerate_by(*hit, sigma);
  for (int g = 0; g < static_cast<int>(x.count(m)); ++g) {
    const Simplex s = Simplex::generator(m, g);
    if (x.vertices(s) == distinct) return degenerate_by(s, sigma);
  }
  throw InvalidInput("ordered_simplex: no simplex on vertices " + tuple_name(distinct));
}

bool is_ordered_complex(const SimplicialSet& x) {
  std::set<std::vector<int>> seen;
  for (int n = 0; n <= x.top_dim(); ++n) {
    for (int g = 0; g < static_cast<int>(x.count(n)); ++g) {
      std::vector<int> v = x.vertices(Simplex::generator(n, g));
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return false;
      std::vector<int> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      if (!seen.insert(sorted).second) return false;
    }
  }
  return true;
}

SSetPtr empty_set() {
  SimplicialSet x;
  x.set_bound(0, true);
  return share(std::move(x));
}

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

SSetPtr delta(int n) {
  if (n < 0) throw InvalidInput("delta: negative dimension");
  return ordered_complex(n + 1, {iota_vec(n + 1)});
}

SSetPtr boundary(int n) {
  if (n < 0) throw InvalidInput("boundary: negative dimension");
  if (n == 0) return empty_set();
  std::vector<std::vector<int>> faces;
  for (int i = 0; i <= n; ++i) {
    auto f = iota_vec(n + 1);
    f.erase(f.begin() + i);
    faces.push_back(f);
  }
  return ordered_complex(n + 1, faces);
}

SSetPtr horn(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw InvalidInput("horn: need 0 <= k <= n and n >= 1");
  std::vector<std::vector<int>> faces;
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    auto f = iota_vec(n + 1);
    f.erase(f.begin() + i);
    faces.push_back(f);
  }
  return ordered_complex(n + 1, faces);
}

SSetPtr spine(int n) {
  if (n < 0) throw InvalidInput("spine: negative dimension");
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i - 1, i});
  return ordered_complex(n + 1, edges);
}

SimplicialMap vertex_map(const SSetPtr& source, const SSetPtr& target, const std::vector<int>& on_vertices) {
  SimplicialMap m{source, target, {}};
  m.assign.resize(std::max(0, source->top_dim() + 1));
  for (int n = 0; n <= source->top_dim(); ++n) {
    for (int g = 0; g < static_cast<int>(source->count(n)); ++g) {
      std::vector<int> v = source->vertices(Simplex::generator(n, g));
      for (int& t : v) t = on_vertices.at(t);
      m.assign[n].push_back(ordered_simplex(*target, v));
    }
  }
  return m;
}

SimplicialMap delta_map(int m, int n, const Monotone& theta) {
  if (static_cast<int>(theta.size()) != m + 1 || !surj::is_monotone(theta, n))
    throw InvalidInput("delta_map: not a monotone map");
  return vertex_map(delta(m), delta(n), theta);
}

namespace {

Subobject sub_of_delta(int n, const SSetPtr& part) {
  SSetPtr d = delta(n);
  std::set<std::string> keep;
  for (int m = 0; m <= part->top_dim(); ++m)
    for (int g = 0; g < static_cast<int>(part->count(m)); ++g) keep.insert(part->name(m, g));
  return subobject(d, [&](int m, int g) { return keep.count(d->name(m, g)) > 0; });
}

}  // namespace

Subobject boundary_in(int n) { return sub_of_delta(n, boundary(n)); }
Subobject horn_in(int n, int k) { return sub_of_delta(n, horn(n, k)); }
Subobject spine_in(int n) { return sub_of_delta(n, spine(n)); }

}  // namespace qcat
