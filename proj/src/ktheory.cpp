#include "qcat/ktheory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qcat/errors.hpp"
#include "qcat/homotopy.hpp"

namespace qcat {

SSetPtr diagonal(const BisimplicialTruncation& b, int d) {
  if (static_cast<int>(b.levels.size()) <= d) throw InvalidInput("diagonal: missing level");
  SimplicialSet out;
  std::vector<std::vector<Simplex>> elems(d + 1);
  std::vector<std::map<Simplex, Simplex>> as_diag(d + 1);
  for (int k = 0; k <= d; ++k) {
    const SimplicialSet& x = *b.levels[k];
    x.require(k, "diagonal");
    elems[k] = x.simplices(k);
    if (k > 0)
      for (const Simplex& y : elems[k - 1])
        for (int j = 0; j < k; ++j) {
          const Simplex img = b.degens[k - 1][j](degeneracy(y, j));
          as_diag[k].emplace(img, degeneracy(as_diag[k - 1].at(y), j));
        }
    for (const Simplex& s : elems[k]) {
      if (as_diag[k].count(s)) continue;
      std::vector<Simplex> faces;
      for (int i = 0; k > 0 && i <= k; ++i) faces.push_back(as_diag[k - 1].at(b.faces[k][i](x.face(s, i))));
      std::string name = std::to_string(k) + ":" + (s.nondegenerate() ? x.name(s.gdim, s.gen) : to_string(s));
      const int g = out.add(k, std::move(name), std::move(faces));
      as_diag[k].emplace(s, Simplex::generator(k, g));
    }
  }
  out.set_bound(d, false);
  return share(std::move(out));
}

BisimplicialTruncation constant_bisimplicial(const SSetPtr& x, int d) {
  BisimplicialTruncation b;
  const SimplicialMap id = SimplicialMap::identity(x);
  for (int n = 0; n <= d; ++n) {
    b.levels.push_back(x);
    b.faces.emplace_back(n == 0 ? 0 : n + 1, id);
    if (n < d) b.degens.emplace_back(n + 1, id);
  }
  return b;
}

namespace {

// The functor core(S_n) -> core(S_m) induced by theta.
Functor core_functor(const Core& from, const Core& to, const Functor& f) {
  std::map<int, int> back;
  for (int m = 0; m < to.cat.morphisms(); ++m) back[to.morphism_in_c[m]] = m;
  Functor out;
  out.on_objects = f.on_objects;
  for (int m = 0; m < from.cat.morphisms(); ++m) out.on_morphisms.push_back(back.at(f.on_morphisms[from.morphism_in_c[m]]));
  return out;
}

Monotone coface_theta(int n, int i) { return surj::coface(n, i); }

}  // namespace

SEquiv s_equiv(const WaldhausenData& w, int d) {
  SEquiv out;
  std::vector<Nerve> nerves;
  for (int n = 0; n <= d; ++n) {
    out.s.push_back(s_n(w, n));
    out.cores.push_back(core(out.s[n].w.cat));
  }
  for (int n = 0; n <= d; ++n) {
    nerves.push_back(nerve(out.cores[n].cat, d));
    out.bisimplicial.levels.push_back(nerves[n].sset);
  }
  for (int n = 0; n <= d; ++n) {
    out.bisimplicial.faces.emplace_back();
    for (int i = 0; n > 0 && i <= n; ++i) {
      Functor f = core_functor(out.cores[n], out.cores[n - 1],
                               s_simplicial_map(out.s[n], out.s[n - 1], coface_theta(n, i)));
      out.bisimplicial.faces[n].push_back(nerve_map(out.cores[n].cat, nerves[n], out.cores[n - 1].cat, nerves[n - 1], f));
    }
    if (n < d) {
      out.bisimplicial.degens.emplace_back();
      for (int j = 0; j <= n; ++j) {
        Functor f = core_functor(out.cores[n], out.cores[n + 1],
                                 s_simplicial_map(out.s[n], out.s[n + 1], surj::codegeneracy(n, j)));
        out.bisimplicial.degens[n].push_back(
            nerve_map(out.cores[n].cat, nerves[n], out.cores[n + 1].cat, nerves[n + 1], f));
      }
    }
  }
  out.zero_vertex = out.s[0].w.zero;
  return out;
}

AbelianGroupPresentation k0_presentation_oracle(const WaldhausenData& w) {
  const FinCategory& c = w.cat;
  AbelianGroupPresentation p;
  p.generators = c.objects();
  std::set<std::vector<std::int64_t>> seen;
  auto add = [&](std::vector<std::int64_t> row) {
    bool zero = std::all_of(row.begin(), row.end(), [](std::int64_t v) { return v == 0; });
    auto lead = std::find_if(row.begin(), row.end(), [](std::int64_t v) { return v != 0; });
    if (lead != row.end() && *lead < 0)
      for (auto& v : row) v = -v;
    if (!zero && seen.insert(row).second) p.relations.push_back(std::move(row));
  };
  std::vector<std::int64_t> z(p.generators, 0);
  z[w.zero] = 1;
  add(z);
  SLevel s2 = s_n(w, 2);
  for (const Functor& a : s2.diagrams) {
    std::vector<std::int64_t> row(p.generators, 0);
    row[a.on_objects[s2.ar.index(0, 2)]] += 1;
    row[a.on_objects[s2.ar.index(0, 1)]] -= 1;
    row[a.on_objects[s2.ar.index(1, 2)]] -= 1;
    add(row);
  }
  for (int f = 0; f < c.morphisms(); ++f)
    if (c.is_iso(f) && c.src(f) != c.tgt(f)) {
      std::vector<std::int64_t> row(p.generators, 0);
      row[c.src(f)] = 1;
      row[c.tgt(f)] = -1;
      add(row);
    }
  return p;
}

AbelianGroupPresentation k0_via_diagonal(const WaldhausenData& w, int d) {
  if (d < 2) throw InvalidInput("k0_via_diagonal: d must be at least 2");
  SEquiv se = s_equiv(w, d);
  SSetPtr diag = diagonal(se.bisimplicial, d);
  return pi1_abelianized(*diag, se.zero_vertex);
}

K0Comparison compare_k0(const WaldhausenData& w, int d) {
  K0Comparison r;
  AbelianGroupPresentation oracle = k0_presentation_oracle(w);
  r.oracle = oracle.invariant_factors();
  SEquiv se = s_equiv(w, d);
  SSetPtr diag = diagonal(se.bisimplicial, d);
  for (int k = 0; k <= 2; ++k) r.diagonal_simplices[k] = diag->count(k);
  r.diagonal = pi1_abelianized(*diag, se.zero_vertex).invariant_factors();
  r.agree = r.oracle == r.diagonal;
  for (std::size_t row = 0; row < oracle.relations.size(); ++row) {
    AbelianGroupPresentation q = oracle;
    q.relations.erase(q.relations.begin() + static_cast<std::ptrdiff_t>(row));
    const auto changed = q.invariant_factors();
    if (changed != r.oracle) {
      r.control_row = static_cast<int>(row);
      r.control_detected = changed != r.diagonal;
      break;
    }
  }
  return r;
}

HomotopyComparison compare_pi0_pi1(const SimplicialMap& g) {
  HomotopyComparison r;
  const SimplicialSet& x = *g.source;
  const SimplicialSet& y = *g.target;
  const auto cx = pi0(x), cy = pi0(y);
  r.pi0_source = pi0_count(x);
  r.pi0_target = pi0_count(y);
  std::map<int, int> comp_map;
  std::set<int> hit;
  bool well_defined = true;
  std::vector<int> base(r.pi0_source, -1);
  for (int v = 0; v < static_cast<int>(x.count(0)); ++v) {
    const int img = cy[g(Simplex::generator(0, v)).gen];
    auto [it, fresh] = comp_map.emplace(cx[v], img);
    if (!fresh && it->second != img) well_defined = false;
    hit.insert(img);
    if (base[cx[v]] < 0) base[cx[v]] = v;
  }
  r.pi0_bijection = well_defined && r.pi0_source == r.pi0_target && static_cast<int>(hit.size()) == r.pi0_target;
  r.pi1_agree = true;
  std::ostringstream detail;
  for (int c = 0; c < r.pi0_source; ++c) {
    const int v = base[c];
    const auto a = pi1_abelianized(x, v).invariant_factors();
    const auto b = pi1_abelianized(y, g(Simplex::generator(0, v)).gen).invariant_factors();
    if (a != b) {
      r.pi1_agree = false;
      detail << "pi1 differs at " << x.name(0, v) << "; ";
    }
  }
  if (!r.pi0_bijection) detail << "pi0 " << r.pi0_source << " -> " << r.pi0_target << " is not a bijection; ";
  r.detail = detail.str();
  return r;
}

QuillenAReport quillen_a_verify(const SimplicialMap& g, int d) {
  QuillenAReport r;
  r.d = d;
  r.hypothesis = true;
  for (int y = 0; y < static_cast<int>(g.target->count(0)); ++y) {
    PullbackSet c = comma(g, y, d);
    ContractibleReport cr = contractible(*c.sset);
    cr.d = d;
    if (cr.verdict != Verdict::Confirmed && r.hypothesis) {
      r.hypothesis = false;
      r.witness = "comma at " + g.target->name(0, y) + ": " + cr.detail;
    }
    r.commas.push_back(cr);
  }
  r.corroboration = compare_pi0_pi1(g);
  return r;
}

MainTechnicalReport main_technical_verify(const FinCategory& a, const FinCategory& b, const Functor& f,
                                          int max_poset) {
  MainTechnicalReport r;
  std::ostringstream witness;
  r.essentially_surjective = essentially_surjective(a, b, f);
  if (!r.essentially_surjective) witness << "not essentially surjective; ";
  r.reflects_equivalences = true;
  for (int m = 0; m < a.morphisms(); ++m)
    if (b.is_iso(f.on_morphisms[m]) && !a.is_iso(m)) {
      if (r.reflects_equivalences) witness << a.morphism(m).name << " is inverted but not an equivalence; ";
      r.reflects_equivalences = false;
    }
  Core ca = core(a);
  r.colimits_exist = r.colimits_preserved = true;
  for (int k = 1; k <= max_poset; ++k)
    for (const auto& le : all_posets(k)) {
      FinCategory p = poset(k, [&](int x, int y) { return le[x][y] != 0; });
      for (const Functor& dcore : all_functors(p, ca.cat)) {
        ++r.diagrams;
        Functor da{dcore.on_objects, {}};
        for (int m : dcore.on_morphisms) da.on_morphisms.push_back(ca.morphism_in_c[m]);
        const auto cols = colimits(p, a, da);
        if (cols.empty()) {
          if (r.colimits_exist) witness << "a diagram on a " << k << "-element poset has no colimit; ";
          r.colimits_exist = false;
          continue;
        }
        const Cocone& col = cols[0];
        const Functor db = compose(f, da);
        Cocone image{f.on_objects[col.apex], {}};
        for (int leg : col.legs) image.legs.push_back(f.on_morphisms[leg]);
        const auto bcols = colimits(p, b, db);
        if (std::find(bcols.begin(), bcols.end(), image) == bcols.end()) {
          if (r.colimits_preserved) witness << "a colimit on a " << k << "-element poset is not preserved; ";
          r.colimits_preserved = false;
        }
      }
    }
  Core cb = core(b);
  Nerve na = nerve(ca.cat, 2), nb = nerve(cb.cat, 2);
  std::map<int, int> back;
  for (int m = 0; m < cb.cat.morphisms(); ++m) back[cb.morphism_in_c[m]] = m;
  Functor fc{f.on_objects, {}};
  for (int m = 0; m < ca.cat.morphisms(); ++m) fc.on_morphisms.push_back(back.at(f.on_morphisms[ca.morphism_in_c[m]]));
  r.conclusion = compare_pi0_pi1(nerve_map(ca.cat, na, cb.cat, nb, fc));
  r.witness = witness.str();
  return r;
}

Functor s_functor(const ExactFunctorData& g, const SLevel& a, const SLevel& b) {
  Functor out;
  for (const Functor& d : a.diagrams) out.on_objects.push_back(b.find(compose(g.f, d)));
  for (int m = 0; m < a.w.cat.morphisms(); ++m) {
    const int s = out.on_objects[a.w.cat.src(m)], t = out.on_objects[a.w.cat.tgt(m)];
    std::vector<int> comps;
    for (int c : a.components[m]) comps.push_back(g.f.on_morphisms[c]);
    out.on_morphisms.push_back(s < 0 || t < 0 ? -1 : b.find_morphism(s, t, comps));
  }
  return out;
}

bool ApproximationReport::conclusion() const {
  if (!k0_agree) return false;
  for (const auto& l : levels)
    if (!l.pass()) return false;
  return true;
}

ApproximationReport approximation_verify(const ExactFunctorData& g, int d) {
  ApproximationReport r;
  r.d = d;
  r.exact = validate_exact(g).pass();
  r.reflects = reflects_cofibrations(g);
  r.ho_equivalence = ho_equivalence(g);
  r.cof_ho_equivalence = cof_ho_equivalence(g);
  r.all_cofibrations = std::all_of(g.source.cof.begin(), g.source.cof.end(), [](char c) { return c != 0; });
  r.factorization = admits_factorization(g.source);
  if (r.exact) {
    if (r.cof_ho_equivalence)
      r.theorem = "equivalence of cofibration homotopy categories";
    else if (r.reflects && r.ho_equivalence)
      r.theorem = "reflects cofibrations and equivalence of homotopy categories";
    else if (r.all_cofibrations && r.ho_equivalence)
      r.theorem = "all maps of the source are cofibrations";
    else if (r.factorization && r.ho_equivalence)
      r.theorem = "source admits factorization";
  }
  std::ostringstream detail;
  for (int n = 0; n <= 2; ++n) {
    SLevel sa = s_n(g.source, n), sb = s_n(g.target, n);
    Functor sg = s_functor(g, sa, sb);
    bool defined = std::none_of(sg.on_objects.begin(), sg.on_objects.end(), [](int v) { return v < 0; }) &&
                   std::none_of(sg.on_morphisms.begin(), sg.on_morphisms.end(), [](int v) { return v < 0; });
    if (!defined) {
      detail << "S_" << n << " G is not defined on every object; ";
      r.levels.push_back({});
      continue;
    }
    Core ca = core(sa.w.cat), cb = core(sb.w.cat);
    std::map<int, int> back;
    for (int m = 0; m < cb.cat.morphisms(); ++m) back[cb.morphism_in_c[m]] = m;
    Functor fc{sg.on_objects, {}};
    for (int m = 0; m < ca.cat.morphisms(); ++m) fc.on_morphisms.push_back(back.at(sg.on_morphisms[ca.morphism_in_c[m]]));
    Nerve na = nerve(ca.cat, 2), nb = nerve(cb.cat, 2);
    r.levels.push_back(compare_pi0_pi1(nerve_map(ca.cat, na, cb.cat, nb, fc)));
    if (!r.levels.back().pass()) detail << "level " << n << ": " << r.levels.back().detail;
  }
  r.k0_source = k0_via_diagonal(g.source, d).invariant_factors();
  r.k0_target = k0_via_diagonal(g.target, d).invariant_factors();
  r.k0_agree = r.k0_source == r.k0_target;
  if (!r.k0_agree) detail << "K0 differs; ";
  r.detail = detail.str();
  return r;
}

}  // namespace qcat
