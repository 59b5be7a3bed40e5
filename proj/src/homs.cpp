#include "qcat/homs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qcat/errors.hpp"
#include "qcat/standard.hpp"

namespace qcat {

Subdivision subdivision(const SSetPtr& x) {
  if (!x->complete()) throw BoundError("subdivision: input must be finite");
  if (!is_ordered_complex(*x)) throw InvalidInput("subdivision: input is not a regular (ordered) complex");
  Subdivision out;
  std::vector<std::set<int>> vsets;
  for (int n = 0; n <= x->top_dim(); ++n)
    for (int g = 0; g < static_cast<int>(x->count(n)); ++g) {
      out.barycenters.push_back(Simplex::generator(n, g));
      auto v = x->vertices(Simplex::generator(n, g));
      vsets.emplace_back(v.begin(), v.end());
    }
  const int nv = static_cast<int>(out.barycenters.size());
  // Maximal chains suffice: enumerate all chains by DFS and let ordered_complex close.
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int last) {
    bool extended = false;
    for (int w = last + 1; w < nv; ++w) {
      if (vsets[w].size() <= vsets[last].size()) continue;
      if (!std::includes(vsets[w].begin(), vsets[w].end(), vsets[last].begin(), vsets[last].end())) continue;
      extended = true;
      cur.push_back(w);
      rec(w);
      cur.pop_back();
    }
    if (!extended) chains.push_back(cur);
  };
  for (int v = 0; v < nv; ++v) {
    cur = {v};
    rec(v);
  }
  SSetPtr raw = ordered_complex(nv, chains);
  // Rename vertices after their barycenters.
  SimplicialSet named;
  for (int n = 0; n <= raw->top_dim(); ++n)
    for (int g = 0; g < static_cast<int>(raw->count(n)); ++g) {
      std::string nm = "<";
      auto v = raw->vertices(Simplex::generator(n, g));
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Simplex& b = out.barycenters[v[i]];
        nm += (i ? "," : "") + x->name(b.gdim, b.gen);
      }
      nm += ">";
      auto f = raw->faces(n, g);
      named.add(n, nm, std::vector<Simplex>(f.begin(), f.end()));
    }
  named.set_bound(std::max(0, named.top_dim()), true);
  out.sset = share(std::move(named));
  return out;
}

SimplicialMap sd_map(const Subdivision& source, const Subdivision& target, const SimplicialMap& f) {
  std::map<Simplex, int> tindex;
  for (int v = 0; v < static_cast<int>(target.barycenters.size()); ++v) tindex[target.barycenters[v]] = v;
  std::vector<int> on_vertices;
  for (const Simplex& b : source.barycenters) {
    const Simplex img = f(b);
    on_vertices.push_back(tindex.at(Simplex::generator(img.gdim, img.gen)));
  }
  SimplicialMap m{source.sset, target.sset, {}};
  const SimplicialSet& s = *source.sset;
  m.assign.resize(std::max(0, s.top_dim() + 1));
  for (int n = 0; n <= s.top_dim(); ++n)
    for (int g = 0; g < static_cast<int>(s.count(n)); ++g) {
      auto v = s.vertices(Simplex::generator(n, g));
      for (int& t : v) t = on_vertices[t];
      m.assign[n].push_back(ordered_simplex(*target.sset, v));
    }
  return m;
}

namespace {

Monotone codegen_theta(int k, int j) { return surj::codegeneracy(k, j); }

}  // namespace

HomSet ex(const SSetPtr& x, int d, std::size_t budget) {
  std::vector<Subdivision> sd;
  for (int k = 0; k <= d + 1; ++k) sd.push_back(subdivision(delta(k)));
  auto idxp = std::make_shared<const SimplexIndex>(x, d);
  const SimplexIndex& idx = *idxp;
  HomShape hs;
  hs.shape = [&](int k) { return sd[k].sset; };
  hs.coface = [&](int k, int i) { return sd_map(sd[k - 1], sd[k], delta_map(k - 1, k, surj::coface(k, i))); };
  hs.codegeneracy = [&](int k, int j) {
    return sd_map(sd[k + 1], sd[k], delta_map(k + 1, k, codegen_theta(k, j)));
  };
  hs.options = [&](int, const SSetPtr&) {
    EnumOptions o;
    o.budget = budget;
    return o;
  };
  HomSet h = build_hom(hs, idx, d, "ex");
  h.index = idxp;
  return h;
}

namespace {

struct ProductShapes {
  std::vector<ProductSet> prods;
  SimplicialMap id_a;
  SimplicialMap coface(int k, int i) const {
    return product_map(prods[k - 1], prods[k], id_a, delta_map(k - 1, k, surj::coface(k, i)));
  }
  SimplicialMap codegeneracy(int k, int j) const {
    return product_map(prods[k + 1], prods[k], id_a, delta_map(k + 1, k, surj::codegeneracy(k, j)));
  }
};

int shape_top(const SSetPtr& a, int d) { return std::max(0, a->top_dim()) + d; }

}  // namespace

HomSet internal_hom(const SSetPtr& a, const SSetPtr& x, int d, std::size_t budget) {
  ProductShapes ps;
  ps.id_a = SimplicialMap::identity(a);
  for (int k = 0; k <= d; ++k) ps.prods.push_back(product(a, delta(k)));
  auto idxp = std::make_shared<const SimplexIndex>(x, shape_top(a, d));
  const SimplexIndex& idx = *idxp;
  HomShape hs;
  hs.shape = [&](int k) { return ps.prods[k].sset; };
  hs.coface = [&](int k, int i) { return ps.coface(k, i); };
  hs.codegeneracy = [&](int k, int j) { return ps.codegeneracy(k, j); };
  hs.options = [&](int, const SSetPtr&) {
    EnumOptions o;
    o.budget = budget;
    return o;
  };
  HomSet h = build_hom(hs, idx, d, "f");
  h.index = idxp;
  return h;
}

HomSet mapping_space(const SSetPtr& x, int a, int b, int d, std::size_t budget) {
  return mapping_space(std::make_shared<const SimplexIndex>(x, d + 1), a, b, d, budget);
}

HomSet mapping_space(const std::shared_ptr<const SimplexIndex>& idxp, int a, int b, int d, std::size_t budget) {
  if (idxp->max_dim() < d + 1) throw BoundError("mapping_space: index too shallow");
  const SimplexIndex& idx = *idxp;
  SSetPtr d1 = delta(1);
  ProductShapes ps;
  ps.id_a = SimplicialMap::identity(d1);
  for (int k = 0; k <= d; ++k) ps.prods.push_back(product(d1, delta(k)));
  HomShape hs;
  hs.shape = [&](int k) { return ps.prods[k].sset; };
  hs.coface = [&](int k, int i) { return ps.coface(k, i); };
  hs.codegeneracy = [&](int k, int j) { return ps.codegeneracy(k, j); };
  hs.options = [&](int k, const SSetPtr& s) {
    EnumOptions o;
    o.budget = budget;
    o.fixed.resize(s->top_dim() + 1);
    const ProductSet& p = ps.prods[k];
    for (int n = 0; n <= s->top_dim(); ++n) {
      o.fixed[n].assign(s->count(n), -1);
      for (int g = 0; g < static_cast<int>(s->count(n)); ++g) {
        const Simplex& first = p.pr1.assign[n][g];
        if (first.gdim != 0) continue;
        const int end = first.gen == 0 ? a : b;
        Simplex v = Simplex::generator(0, end);
        for (int t = 0; t < n; ++t) v = degeneracy(v, 0);
        o.fixed[n][g] = idx.id(v);
      }
    }
    return o;
  };
  HomSet h = build_hom(hs, idx, d, "h");
  h.index = idxp;
  return h;
}

SimplicialMap restrict_hom(const HomSet& from, const SSetPtr& a, const HomSet& to, const SSetPtr& b,
                           const SimplicialMap& i, const SimplexIndex& target) {
  SimplicialMap m{from.sset, to.sset, {}};
  m.assign.resize(from.maps.size());
  for (int k = 0; k < static_cast<int>(from.maps.size()); ++k) {
    ProductSet pa = product(a, delta(k)), pb = product(b, delta(k));
    SimplicialMap phi = product_map(pb, pa, i, SimplicialMap::identity(delta(k)));
    for (const Assignment& f : from.maps[k]) {
      auto img = to.find(k, precompose(f, phi, target));
      if (!img) throw InvalidInput("restrict_hom: restricted map is not a simplex of the target hom");
      m.assign[k].push_back(*img);
    }
  }
  return m;
}

}  // namespace qcat

namespace qcat {

HomSet full_internal_hom(const SSetPtr& a, const std::shared_ptr<const SimplexIndex>& x, int d,
                         const std::function<bool(const Assignment&)>& vertex_ok, std::size_t budget,
                         const std::function<bool(const Simplex&, int)>& local_ok) {
  if (x->max_dim() < shape_top(a, d)) throw BoundError("full_internal_hom: index too shallow");
  const SimplexIndex& idx = *x;
  ProductShapes ps;
  ps.id_a = SimplicialMap::identity(a);
  for (int k = 0; k <= d + 1; ++k) ps.prods.push_back(product(a, delta(k)));
  // A -> A x Delta[0]
  SimplicialMap to_a{a, ps.prods[0].sset, {}};
  for (int n = 0; n <= a->top_dim(); ++n) {
    to_a.assign.emplace_back();
    Simplex v = Simplex::generator(0, 0);
    for (int t = 0; t < n; ++t) v = degeneracy(v, 0);
    for (int g = 0; g < static_cast<int>(a->count(n)); ++g)
      to_a.assign[n].push_back(ps.prods[0].pair(Simplex::generator(n, g), v));
  }
  std::vector<std::vector<SimplicialMap>> at_vertex(d + 2);
  for (int k = 0; k <= d + 1; ++k)
    for (int t = 0; t <= k; ++t)
      at_vertex[k].push_back(compose(product_map(ps.prods[0], ps.prods[k], ps.id_a, delta_map(0, k, {t})), to_a));
  HomShape hs;
  hs.shape = [&](int k) { return ps.prods[k].sset; };
  hs.coface = [&](int k, int i) { return ps.coface(k, i); };
  hs.codegeneracy = [&](int k, int j) { return ps.codegeneracy(k, j); };
  hs.options = [&](int k, const SSetPtr&) {
    EnumOptions o;
    o.budget = budget;
    if (local_ok)
      o.filter = [&, k](int n, int g, int target) {
        const Simplex& t = ps.prods[k].pr2.assign[n][g];
        if (t.gdim != 0) return true;
        return local_ok(ps.prods[k].pr1.assign[n][g], target);
      };
    o.accept = [&, k](const Assignment& m) {
      for (const SimplicialMap& inc : at_vertex[k])
        if (!vertex_ok(precompose(m, inc, idx))) return false;
      return true;
    };
    return o;
  };
  HomSet h = build_hom(hs, idx, d, "f");
  h.index = x;
  return h;
}

}  // namespace qcat
