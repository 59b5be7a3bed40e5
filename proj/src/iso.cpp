#include "qcat/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

// Per-vertex signature: number of generators of each dimension containing it.
std::vector<std::vector<int>> signatures(const SimplicialSet& x, int d) {
  std::vector<std::vector<int>> sig(x.count(0), std::vector<int>(d + 1, 0));
  for (int n = 0; n <= d; ++n)
    for (int g = 0; g < static_cast<int>(x.count(n)); ++g) {
      std::vector<int> v = x.vertices(Simplex::generator(n, g));
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      for (int t : v) ++sig[t][n];
    }
  return sig;
}

}  // namespace

std::optional<SimplicialMap> iso_check(const SSetPtr& x, const SSetPtr& y, int d, std::size_t budget) {
  if (d < 0) d = std::max({x->top_dim(), y->top_dim(), 0});
  for (int n = 0; n <= d; ++n)
    if (x->count(n) != y->count(n)) return std::nullopt;
  const auto sx = signatures(*x, d), sy = signatures(*y, d);
  {
    auto a = sx, b = sy;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Generators of y by face tuple.
  std::vector<std::map<std::vector<Simplex>, std::vector<int>>> by_faces(d + 1);
  for (int n = 1; n <= d; ++n)
    for (int g = 0; g < static_cast<int>(y->count(n)); ++g) {
      auto f = y->faces(n, g);
      by_faces[n][std::vector<Simplex>(f.begin(), f.end())].push_back(g);
    }
  std::vector<std::vector<int>> image(d + 1), used(d + 1);
  for (int n = 0; n <= d; ++n) {
    image[n].assign(x->count(n), -1);
    used[n].assign(y->count(n), 0);
  }
  std::size_t tried = 0;
  auto map_simplex = [&](const Simplex& s) { return Simplex{s.gdim, image[s.gdim][s.gen], s.degens}; };

  // Higher generators are determined greedily dimension by dimension with backtracking.
  std::vector<std::pair<int, int>> higher;
  for (int n = 1; n <= d; ++n)
    for (int g = 0; g < static_cast<int>(x->count(n)); ++g) higher.emplace_back(n, g);

  std::function<bool(std::size_t)> place_higher = [&](std::size_t pos) -> bool {
    if (pos == higher.size()) return true;
    auto [n, g] = higher[pos];
    std::vector<Simplex> f;
    for (const Simplex& s : x->faces(n, g)) f.push_back(map_simplex(s));
    auto it = by_faces[n].find(f);
    if (it == by_faces[n].end()) return false;
    for (int c : it->second) {
      if (used[n][c]) continue;
      if (++tried > budget) throw BudgetExceeded("iso_check", tried);
      used[n][c] = 1;
      image[n][g] = c;
      if (place_higher(pos + 1)) return true;
      used[n][c] = 0;
    }
    image[n][g] = -1;
    return false;
  };

  const int nv = static_cast<int>(x->count(0));
  std::function<bool(int)> place_vertex = [&](int v) -> bool {
    if (v == nv) return place_higher(0);
    for (int c = 0; c < nv; ++c) {
      if (used[0][c] || sx[v] != sy[c]) continue;
      if (++tried > budget) throw BudgetExceeded("iso_check", tried);
      used[0][c] = 1;
      image[0][v] = c;
      if (place_vertex(v + 1)) return true;
      used[0][c] = 0;
    }
    image[0][v] = -1;
    return false;
  };
  if (!place_vertex(0)) return std::nullopt;
  SimplicialMap m{x, y, {}};
  m.assign.resize(d + 1);
  for (int n = 0; n <= d; ++n)
    for (int g = 0; g < static_cast<int>(x->count(n)); ++g) m.assign[n].push_back(Simplex::generator(n, image[n][g]));
  return m;
}

}  // namespace qcat
