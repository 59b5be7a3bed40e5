#include "qcat/product.hpp"

#include <algorithm>
#include <functional>

#include "qcat/errors.hpp"

namespace qcat {

std::vector<int> collapse_set(const Simplex& s) {
  std::vector<int> c(s.degens.rbegin(), s.degens.rend());
  return c;
}

namespace {

std::string simplex_label(const SimplicialSet& x, const Simplex& s) {
  std::string out;
  for (int j : s.degens) out += "s" + std::to_string(j);
  if (s.degens.empty()) return x.name(s.gdim, s.gen);
  return out + "(" + x.name(s.gdim, s.gen) + ")";
}

void subsets(int n, int len, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int j = start; j < n; ++j) {
      cur.push_back(j);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

Simplex ProductSet::pair(const Simplex& x, const Simplex& y) const {
  if (x.dim() != y.dim()) throw InvalidInput("product pair: dimensions differ");
  const int n = x.dim();
  std::vector<int> cx = collapse_set(x), cy = collapse_set(y), common;
  std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(common));
  if (common.empty()) return gen_of.at({x, y});
  // Section skipping j+1 for each common collapse j.
  std::vector<int> theta;
  for (int t = 0; t <= n; ++t)
    if (!std::binary_search(common.begin(), common.end(), t - 1)) theta.push_back(t);
  const Simplex xs = pr1.target->act(x, theta);
  const Simplex ys = pr2.target->act(y, theta);
  const Simplex& g = gen_of.at({xs, ys});
  return Simplex{g.gdim, g.gen, std::vector<int>(common.rbegin(), common.rend())};
}

ProductSet product(const SSetPtr& x, const SSetPtr& y, int d) {
  bool complete = false;
  if (d < 0) {
    if (!x->complete() || !y->complete()) throw BoundError("product: unbounded product of incomplete sets");
    d = std::max(0, x->top_dim()) + std::max(0, y->top_dim());
    complete = true;
  } else {
    x->require(d, "product");
    y->require(d, "product");
    complete = x->complete() && y->complete() && d >= std::max(0, x->top_dim()) + std::max(0, y->top_dim());
  }
  ProductSet out;
  SimplicialSet p;
  std::vector<std::vector<Simplex>> a1, a2;
  for (int n = 0; n <= d; ++n) {
    std::vector<std::pair<Simplex, Simplex>> pairs;
    for (int px = 0; px <= std::min(n, x->top_dim()); ++px) {
      for (int py = std::max(0, n - px); py <= std::min(n, y->top_dim()); ++py) {
        // degeneracy sets Jx (size n-px), Jy (size n-py), disjoint
        std::vector<std::vector<int>> jxs, jys;
        subsets(n, n - px, jxs);
        subsets(n, n - py, jys);
        for (const auto& jx : jxs)
          for (const auto& jy : jys) {
            bool disjoint = true;
            for (int j : jx) disjoint &= !std::binary_search(jy.begin(), jy.end(), j);
            if (!disjoint) continue;
            for (int gx = 0; gx < static_cast<int>(x->count(px)); ++gx)
              for (int gy = 0; gy < static_cast<int>(y->count(py)); ++gy)
                pairs.emplace_back(Simplex{px, gx, std::vector<int>(jx.rbegin(), jx.rend())},
                                   Simplex{py, gy, std::vector<int>(jy.rbegin(), jy.rend())});
          }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs.empty()) continue;
    a1.resize(n + 1);
    a2.resize(n + 1);
    for (const auto& [sx, sy] : pairs) {
      std::vector<Simplex> faces;
      if (n > 0) {
        for (int i = 0; i <= n; ++i) {
          const Simplex fx = x->face(sx, i), fy = y->face(sy, i);
          std::vector<int> cx = collapse_set(fx), cy = collapse_set(fy), common;
          std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(), std::back_inserter(common));
          std::vector<int> theta;
          for (int t = 0; t <= n - 1; ++t)
            if (!std::binary_search(common.begin(), common.end(), t - 1)) theta.push_back(t);
          const Simplex& g = out.gen_of.at({x->act(fx, theta), y->act(fy, theta)});
          faces.push_back(Simplex{g.gdim, g.gen, std::vector<int>(common.rbegin(), common.rend())});
        }
      }
      const int id = p.add(n, "(" + simplex_label(*x, sx) + "," + simplex_label(*y, sy) + ")", std::move(faces));
      out.gen_of.emplace(std::make_pair(sx, sy), Simplex::generator(n, id));
      a1[n].push_back(sx);
      a2[n].push_back(sy);
    }
  }
  p.set_bound(std::max(d, p.top_dim()), complete);
  out.sset = share(std::move(p));
  out.pr1 = SimplicialMap{out.sset, x, std::move(a1)};
  out.pr2 = SimplicialMap{out.sset, y, std::move(a2)};
  return out;
}

SimplicialMap product_map(const ProductSet& source, const ProductSet& target, const SimplicialMap& f,
                          const SimplicialMap& g) {
  SimplicialMap m{source.sset, target.sset, {}};
  m.assign.resize(source.pr1.assign.size());
  for (std::size_t n = 0; n < source.pr1.assign.size(); ++n)
    for (std::size_t k = 0; k < source.pr1.assign[n].size(); ++k)
      m.assign[n].push_back(target.pair(f(source.pr1.assign[n][k]), g(source.pr2.assign[n][k])));
  return m;
}

PullbackSet pullback(const SimplicialMap& f, const SimplicialMap& g, int d) {
  if (f.target != g.target && !(f.target && g.target && *f.target == *g.target))
    throw InvalidInput("pullback: maps have different targets");
  ProductSet p = product(f.source, g.source, d);
  Subobject sub = subobject(p.sset, [&](int n, int k) { return f(p.pr1.assign[n][k]) == g(p.pr2.assign[n][k]); });
  PullbackSet out{sub.sset, compose(p.pr1, sub.inclusion), compose(p.pr2, sub.inclusion)};
  return out;
}

}  // namespace qcat
