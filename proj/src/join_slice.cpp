#include "qcat/join_slice.hpp"

#include <map>
#include <sstream>

#include "qcat/errors.hpp"
#include "qcat/homology.hpp"
#include "qcat/homs.hpp"
#include "qcat/standard.hpp"

namespace qcat {

namespace {

SliceSet build_slice(const SimplicialMap& a, int d, std::size_t budget, bool under) {
  const SSetPtr& fixed_part = a.source;
  const SSetPtr& x = a.target;
  SliceSet out;
  for (int k = 0; k <= d + 1; ++k)
    out.joins.push_back(under ? join(fixed_part, delta(k)) : join(delta(k), fixed_part));
  const int top = std::max(0, fixed_part->top_dim()) + d + 1;
  auto idxp = std::make_shared<const SimplexIndex>(x, top);
  const SimplexIndex& idx = *idxp;
  const SimplicialMap id_a = SimplicialMap::identity(fixed_part);
  auto jm = [&](int from, int to, const SimplicialMap& theta) {
    return under ? join_map(out.joins[from], out.joins[to], id_a, theta)
                 : join_map(out.joins[from], out.joins[to], theta, id_a);
  };
  HomShape hs;
  hs.shape = [&](int k) { return out.joins[k].sset; };
  hs.coface = [&](int k, int i) { return jm(k - 1, k, delta_map(k - 1, k, surj::coface(k, i))); };
  hs.codegeneracy = [&](int k, int j) { return jm(k + 1, k, delta_map(k + 1, k, surj::codegeneracy(k, j))); };
  hs.options = [&](int k, const SSetPtr& s) {
    EnumOptions o;
    o.budget = budget;
    o.fixed.resize(std::max(0, s->top_dim() + 1));
    const JoinSet& j = out.joins[k];
    for (int n = 0; n <= s->top_dim(); ++n) {
      o.fixed[n].assign(s->count(n), -1);
      for (int g = 0; g < static_cast<int>(s->count(n)); ++g) {
        const auto& [l, r] = j.parts[n][g];
        const auto& part = under ? l : r;
        const auto& other = under ? r : l;
        if (part && !other) o.fixed[n][g] = idx.id(a(*part));
      }
    }
    return o;
  };
  out.hom = build_hom(hs, idx, d, under ? "u" : "o");
  out.hom.index = idxp;
  return out;
}

}  // namespace

SliceSet slice_under(const SimplicialMap& a, int d, std::size_t budget) { return build_slice(a, d, budget, true); }
SliceSet slice_over(const SimplicialMap& b, int d, std::size_t budget) { return build_slice(b, d, budget, false); }

OverSet over_quasicategory(const SSetPtr& y, int vertex, int d) {
  SimplexIndex idx(y, d + 1);
  OverSet out;
  SimplicialSet x;
  std::vector<std::map<int, Simplex>> level(d + 1);
  std::vector<std::vector<Simplex>> qa(d + 1);
  out.in_y.resize(d + 1);
  for (int n = 0; n <= d; ++n) {
    if (n > 0)
      for (const auto& [wid, ws] : level[n - 1])
        for (int j = 0; j <= n - 1; ++j)
          level[n].emplace(idx.degeneracy_id(n, wid, j), degeneracy(ws, j));
    for (int id = 0; id < static_cast<int>(idx.size(n + 1)); ++id) {
      const Simplex& z = idx.at(n + 1, id);
      const int last[1] = {n + 1};
      if (y->act(z, last).gen != vertex || level[n].count(id)) continue;
      std::vector<Simplex> faces;
      auto fids = idx.face_ids(n + 1, id);
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(level[n - 1].at(fids[i]));
      const int g = x.add(n, "z" + std::to_string(n) + "." + std::to_string(x.count(n)), std::move(faces));
      level[n].emplace(id, Simplex::generator(n, g));
      out.in_y[n].push_back(z);
      qa[n].push_back(y->face(z, n + 1));
    }
  }
  x.set_bound(d, false);
  out.sset = share(std::move(x));
  while (!qa.empty() && qa.back().empty()) qa.pop_back();
  out.q = SimplicialMap{out.sset, y, std::move(qa)};
  return out;
}

PullbackSet comma(const SimplicialMap& g, int vertex, int d) {
  OverSet o = over_quasicategory(g.target, vertex, d);
  return pullback(o.q, g, d);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Refuted: return "refuted";
    default: return "inconclusive";
  }
}

ContractibleReport contractible(const SimplicialSet& x) {
  ContractibleReport r;
  if (x.count(0) == 0) {
    r.verdict = Verdict::Refuted;
    r.detail = "empty";
    return r;
  }
  const int comps = pi0_count(x);
  if (comps > 1) {
    r.verdict = Verdict::Refuted;
    r.detail = std::to_string(comps) + " components";
    return r;
  }
  auto h1 = h1_invariant_factors(x);
  if (!h1.empty()) {
    r.verdict = Verdict::Refuted;
    r.detail = "H1 nonzero";
    return r;
  }
  r.verdict = Verdict::Confirmed;
  r.detail = "connected, H1 = 0 (bound 2)";
  return r;
}

ContractibleReport is_initial(const SSetPtr& x, int i, int d, std::size_t budget) {
  if (d < 2) d = 2;
  auto idx = std::make_shared<const SimplexIndex>(x, d + 1);
  ContractibleReport out;
  out.d = d;
  out.verdict = Verdict::Confirmed;
  for (int v = 0; v < static_cast<int>(x->count(0)); ++v) {
    HomSet m;
    try {
      m = mapping_space(idx, i, v, d, budget);
    } catch (const BudgetExceeded&) {
      out.verdict = Verdict::Inconclusive;
      out.detail = "budget exceeded at X(" + x->name(0, i) + ", " + x->name(0, v) + ")";
      continue;
    }
    ContractibleReport r = contractible(*m.sset);
    if (r.verdict == Verdict::Refuted) {
      out.verdict = Verdict::Refuted;
      out.detail = "X(" + x->name(0, i) + ", " + x->name(0, v) + ") " + r.detail;
      return out;
    }
  }
  if (out.verdict == Verdict::Confirmed) out.detail = "all mapping spaces contractible to bound " + std::to_string(d);
  return out;
}

std::vector<CoconeData> colimiting_cocones(const SimplicialMap& a, int d, std::size_t budget) {
  SliceSet s = slice_under(a, d + 1, budget);
  std::vector<CoconeData> out;
  for (int v = 0; v < static_cast<int>(s.sset()->count(0)); ++v) {
    if (is_initial(s.sset(), v, d, budget).verdict != Verdict::Confirmed) continue;
    out.push_back({to_map(s.joins[0].sset, *s.hom.index, s.hom.maps[0][v]), Simplex::generator(0, v)});
  }
  return out;
}

namespace {

// J -> J * [0] on objects and morphisms.
Functor join_inclusion(const FinCategory& j, const FinCategory& jc) {
  Functor f;
  for (int x = 0; x < j.objects(); ++x) f.on_objects.push_back(x);
  for (int m = 0; m < j.morphisms(); ++m)
    f.on_morphisms.push_back(j.is_identity(m) ? jc.id(j.src(m)) : *jc.find_morphism("L" + j.morphism(m).name));
  return f;
}

}  // namespace

RestrictionReport restriction_equivalence_check(const FinCategory& c, const FinCategory& j) {
  RestrictionReport rep;
  const FinCategory jc = join_category(j, ordinal(0));
  const int apex = j.objects();
  const Functor inc = join_inclusion(j, jc);
  const auto diagrams = all_functors(j, c);
  rep.diagrams = static_cast<int>(diagrams.size());
  std::map<Functor, int> diagram_index;
  for (std::size_t i = 0; i < diagrams.size(); ++i) diagram_index[diagrams[i]] = static_cast<int>(i);
  // colimiting cocones per diagram
  std::vector<std::vector<Cocone>> colims(diagrams.size());
  for (std::size_t i = 0; i < diagrams.size(); ++i) colims[i] = colimits(j, c, diagrams[i]);
  const auto cocone_functors = all_functors(jc, c, [&](const Functor& k) {
    const Functor a = compose(k, inc);
    Cocone co{k.on_objects[apex], {}};
    for (int x = 0; x < j.objects(); ++x) co.legs.push_back(k.on_morphisms[*jc.find_morphism(j.object_name(x) + "->0")]);
    const auto& cl = colims[diagram_index.at(a)];
    return std::find(cl.begin(), cl.end(), co) != cl.end();
  });
  rep.colimiting = static_cast<int>(cocone_functors.size());
  for (std::size_t i = 0; i < diagrams.size(); ++i)
    if (colims[i].empty()) {
      rep.hypothesis = false;
      rep.detail = "diagram " + std::to_string(i) + " has no colimit";
      break;
    }
  const FunctorCategory fa = functor_category(j, c, diagrams);
  const FunctorCategory fb = functor_category(jc, c, cocone_functors);
  Functor r;
  for (const Functor& k : cocone_functors) r.on_objects.push_back(diagram_index.at(compose(k, inc)));
  std::map<std::vector<int>, int> fa_by_key;
  for (int m = 0; m < fa.cat.morphisms(); ++m) {
    std::vector<int> key{fa.cat.src(m), fa.cat.tgt(m)};
    key.insert(key.end(), fa.components[m].begin(), fa.components[m].end());
    fa_by_key[key] = m;
  }
  for (int m = 0; m < fb.cat.morphisms(); ++m) {
    std::vector<int> key{r.on_objects[fb.cat.src(m)], r.on_objects[fb.cat.tgt(m)]};
    for (int x = 0; x < j.objects(); ++x) key.push_back(fb.components[m][x]);
    r.on_morphisms.push_back(fa_by_key.at(key));
  }
  if (auto err = check_functor(fb.cat, fa.cat, r)) throw std::logic_error("restriction is not a functor: " + *err);
  rep.essentially_surjective = essentially_surjective(fb.cat, fa.cat, r);
  rep.fully_faithful = fully_faithful(fb.cat, fa.cat, r);
  // fibers: colimiting cocones over one diagram are uniquely isomorphic over it
  rep.fibers_contractible = true;
  for (int k = 0; k < fb.cat.objects() && rep.fibers_contractible; ++k)
    for (int l = 0; l < fb.cat.objects(); ++l) {
      if (r.on_objects[k] != r.on_objects[l]) continue;
      int over_id = 0;
      for (int m : fb.cat.hom(k, l))
        if (fa.cat.is_identity(r.on_morphisms[m])) {
          ++over_id;
          if (!fb.cat.is_iso(m)) over_id = 99;
        }
      if (over_id != 1) {
        rep.fibers_contractible = false;
        rep.detail = "fiber over diagram " + std::to_string(r.on_objects[k]) + " is not contractible";
        break;
      }
    }
  return rep;
}

std::vector<std::vector<std::vector<char>>> all_posets(int k) {
  std::vector<std::vector<std::vector<char>>> out;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b) pairs.emplace_back(a, b);
  const std::size_t np = pairs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
    std::vector<std::vector<char>> le(k, std::vector<char>(k, 0));
    for (int a = 0; a < k; ++a) le[a][a] = 1;
    for (std::size_t p = 0; p < np; ++p)
      if (mask >> p & 1) le[pairs[p].first][pairs[p].second] = 1;
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = 0; b < k && ok; ++b) {
        if (a != b && le[a][b] && le[b][a]) ok = false;
        for (int c = 0; c < k && ok; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) ok = false;
      }
    if (ok) out.push_back(le);
  }
  return out;
}

ConeExtensionReport cone_extension_check(const SSetPtr& x, int max_poset, std::size_t budget) {
  ConeExtensionReport rep;
  SimplexIndex idx(x, std::max(0, max_poset));
  for (int k = 0; k <= max_poset && rep.pass; ++k) {
    for (const auto& le : all_posets(k)) {
      ++rep.posets;
      SSetPtr np = k == 0 ? empty_set() : nerve(poset(k, [&](int a, int b) { return le[a][b] != 0; }), k).sset;
      JoinSet cone = join(np, delta(0));
      EnumOptions opt;
      opt.budget = budget;
      enumerate_maps(*np, idx, opt, [&](const Assignment& m) {
        ++rep.maps;
        EnumOptions ext;
        ext.budget = budget;
        ext.fixed.resize(std::max(0, cone.sset->top_dim() + 1));
        for (int n = 0; n <= cone.sset->top_dim(); ++n) {
          ext.fixed[n].assign(cone.sset->count(n), -1);
          for (int g = 0; g < static_cast<int>(cone.sset->count(n)); ++g) {
            const auto& [l, r] = cone.parts[n][g];
            if (l && !r) ext.fixed[n][g] = m[l->gdim][l->gen];
          }
        }
        const std::size_t found = enumerate_maps(*cone.sset, idx, ext, [](const Assignment&) { return false; });
        if (found == 0) {
          rep.pass = false;
          std::ostringstream os;
          os << "poset of size " << k << " with vertex images";
          for (int v : m.empty() ? std::vector<int>{} : m[0]) os << ' ' << x->name(0, v);
          os << " has no cone";
          rep.witness = os.str();
          return false;
        }
        return true;
      });
      if (!rep.pass) break;
    }
  }
  return rep;
}

}  // namespace qcat
