#pragma once

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/enumerate.hpp"
#include "qcat/product.hpp"

namespace qcat::testing {

// k objects, hom(i, j) = Z/m for all i, j, composition by addition.
inline FinCategory codiscrete_times_cyclic(int k, int m) {
  FinCategory c;
  for (int i = 0; i < k; ++i) c.add_object("x" + std::to_string(i));
  std::map<std::tuple<int, int, int>, int> mor;
  std::map<int, std::tuple<int, int, int>> label;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int g = 0; g < m; ++g) {
        const int id = (i == j && g == 0) ? c.id(i)
                                          : c.add_morphism(i, j, std::to_string(i) + std::to_string(j) + "." +
                                                                     std::to_string(g));
        mor[{i, j, g}] = id;
        label[id] = {i, j, g};
      }
  c.fill_compose([&](int g, int f) {
    auto [i, j, a] = label[f];
    auto [j2, l, b] = label[g];
    return mor[{i, l, (a + b) % m}];
  });
  return c;
}

struct Transformation {
  std::vector<int> f, g, comp;  // F(i -> i+1), G(i -> i+1), components
};

// The map I[n] x Delta[1] -> N C of a transformation.
inline Assignment as_assignment(const FinCategory& c, const Nerve& nc, const SimplexIndex& idx, const ProductSet& sq,
                         const Transformation& t) {
  auto obj = [&](int i, int s) { return s == 1 ? c.tgt(t.comp[i]) : c.src(t.comp[i]); };
  auto mor = [&](std::pair<int, int> u, std::pair<int, int> v) {
    if (u.first == v.first) return u.second == v.second ? c.id(obj(u.first, u.second)) : t.comp[u.first];
    if (u.second == v.second) return u.second == 0 ? t.f[u.first] : t.g[u.first];
    return c.compose(t.comp[v.first], t.f[u.first]);
  };
  Assignment a(sq.sset->top_dim() + 1);
  for (int n = 0; n <= sq.sset->top_dim(); ++n)
    for (int gen = 0; gen < static_cast<int>(sq.sset->count(n)); ++gen) {
      std::vector<std::pair<int, int>> vs;
      for (int v : sq.sset->vertices(Simplex::generator(n, gen)))
        vs.emplace_back(sq.pr1.assign[0][v].gen, sq.pr2.assign[0][v].gen);
      if (n == 0) {
        a[n].push_back(idx.id(Simplex::generator(0, obj(vs[0].first, vs[0].second))));
        continue;
      }
      std::vector<int> str;
      for (int i = 0; i < n; ++i) str.push_back(mor(vs[i], vs[i + 1]));
      a[n].push_back(idx.id(nc.simplex_of(c, str)));
    }
  return a;
}

// Random transformation in a groupoid: F random, components random, G determined.
inline Transformation random_transformation(std::mt19937& rng, const FinCategory& c, int n) {
  auto pick = [&](const std::vector<int>& v) { return v[std::uniform_int_distribution<int>(0, v.size() - 1)(rng)]; };
  auto any_out = [&](int x) {
    std::vector<int> v;
    for (int y = 0; y < c.objects(); ++y)
      for (int m : c.hom(x, y)) v.push_back(m);
    return pick(v);
  };
  Transformation t;
  int x = std::uniform_int_distribution<int>(0, c.objects() - 1)(rng);
  std::vector<int> xs{x};
  for (int i = 0; i < n; ++i) {
    t.f.push_back(any_out(xs.back()));
    xs.push_back(c.tgt(t.f.back()));
  }
  for (int i = 0; i <= n; ++i) t.comp.push_back(any_out(xs[i]));
  for (int i = 0; i < n; ++i)
    t.g.push_back(c.compose(c.compose(t.comp[i + 1], t.f[i]), *c.inverse(t.comp[i])));
  return t;
}

}  // namespace qcat::testing
