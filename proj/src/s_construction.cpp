#include "qcat/s_construction.hpp"

#include <functional>
#include <sstream>

#include "qcat/errors.hpp"
#include "qcat/homs.hpp"
#include "qcat/standard.hpp"

namespace qcat {

int ArPoset::index(int i, int j) const {
  // lexicographic position of (i, j)
  int pos = 0;
  for (int a = 0; a < i; ++a) pos += n - a + 1;
  return pos + (j - i);
}

int ArPoset::arrow(int i, int j, int k, int l) const {
  const int a = index(i, j), b = index(k, l);
  if (a == b) return cat.id(a);
  return *cat.find_morphism(cat.object_name(a) + "<" + cat.object_name(b));
}

ArPoset ar_poset(int n) {
  ArPoset out;
  out.n = n;
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      out.elements.emplace_back(i, j);
      names.push_back(tuple_name({i, j}));
    }
  out.cat = poset(
      static_cast<int>(out.elements.size()),
      [&](int a, int b) {
        return out.elements[a].first <= out.elements[b].first && out.elements[a].second <= out.elements[b].second;
      },
      names);
  return out;
}

SSetPtr restricted_grid(int n) {
  ArPoset ar = ar_poset(n);
  const int m = static_cast<int>(ar.elements.size());
  std::vector<std::vector<int>> tops;
  // chains inside one unit square of I[n] x I[n]
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& chain) {
    bool maximal = true;
    for (int v = chain.back() + 1; v < m; ++v) {
      const auto [i, j] = ar.elements[v];
      const auto [i0, j0] = ar.elements[chain.front()];
      const auto [ib, jb] = ar.elements[chain.back()];
      if (i < ib || j < jb || i > i0 + 1 || j > j0 + 1) continue;
      chain.push_back(v);
      rec(chain);
      chain.pop_back();
      maximal = false;
    }
    if (maximal) tops.push_back(chain);
  };
  for (int v = 0; v < m; ++v) {
    std::vector<int> chain{v};
    rec(chain);
  }
  return ordered_complex(m, tops);
}

int SLevel::find(const Functor& f) const {
  auto it = by_diagram.find(f);
  return it == by_diagram.end() ? -1 : it->second;
}

int SLevel::find_morphism(int src, int tgt, const std::vector<int>& comps) const {
  std::vector<int> key{src, tgt};
  key.insert(key.end(), comps.begin(), comps.end());
  auto it = by_components.find(key);
  return it == by_components.end() ? -1 : it->second;
}

namespace {

bool is_pushout_square(const FinCategory& c, int f, int g, int leg_b, int leg_c, bool& exists) {
  const auto po = pushouts(c, {f, g});
  exists = !po.empty();
  for (const Cocone& k : po)
    if (k.legs[1] == leg_b && k.legs[2] == leg_c) return true;
  return false;
}

// Conditions on a functor Ar[n] -> C. Sets `missing` when a required pushout
// does not exist at all.
std::optional<std::string> ar_violation(const WaldhausenData& w, const ArPoset& ar, bool restricted,
                                        const Functor& a, bool& missing) {
  const FinCategory& c = w.cat;
  const int n = ar.n;
  missing = false;
  auto obj = [&](int i, int j) { return a.on_objects[ar.index(i, j)]; };
  auto mor = [&](int i, int j, int k, int l) { return a.on_morphisms[ar.arrow(i, j, k, l)]; };
  for (int i = 0; i <= n; ++i)
    if (obj(i, i) != w.zero) return "A(" + std::to_string(i) + "," + std::to_string(i) + ") is not the zero object";
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j + (restricted ? 1 : 0); k <= (restricted ? std::min(n, j + 1) : n); ++k)
        if (!w.is_cof(mor(i, j, i, k)))
          return "A(" + std::to_string(i) + std::to_string(j) + ") -> A(" + std::to_string(i) + std::to_string(k) +
                 ") is not a cofibration";
  auto square = [&](int i, int j, int k, int l) -> std::optional<std::string> {
    // A(i,j) -> A(i,l), A(i,j) -> A(k,j), to A(k,l)
    bool exists = true;
    if (!is_pushout_square(c, mor(i, j, i, l), mor(i, j, k, j), mor(i, l, k, l), mor(k, j, k, l), exists)) {
      if (!exists) missing = true;
      std::ostringstream os;
      os << "square at (" << i << "," << j << ")-(" << k << "," << l << ") is not a pushout";
      return os.str();
    }
    return std::nullopt;
  };
  if (restricted) {
    for (int i = 0; i + 1 <= n; ++i)
      for (int j = i + 1; j + 1 <= n; ++j)
        if (auto e = square(i, j, i + 1, j + 1)) return e;
  } else {
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        for (int k = j; k <= n; ++k)
          if (auto e = square(i, j, j, k)) return e;
  }
  return std::nullopt;
}

std::optional<std::string> string_violation(const WaldhausenData& w, const Functor& a, int n) {
  FinCategory dom = ordinal(n);
  for (int m = 0; m < dom.morphisms(); ++m)
    if (!w.is_cof(a.on_morphisms[m])) return "morphism " + dom.morphism(m).name + " is not a cofibration";
  return std::nullopt;
}

// Functors Ar[n] -> C with zeros on the diagonal and cofibrations along rows,
// squares commuting. Objects visited by increasing j, then i.
std::vector<Functor> ar_candidates(const WaldhausenData& w, const ArPoset& ar) {
  const FinCategory& c = w.cat;
  const int n = ar.n;
  std::vector<std::pair<int, int>> order;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= j; ++i) order.emplace_back(i, j);
  const int m = static_cast<int>(ar.elements.size());
  std::vector<int> obj(m, -1), h(m, -1), v(m, -1);
  std::vector<Functor> out;
  auto path = [&](int i, int j, int k, int l) {
    // horizontal (i,j) -> (i,l), then vertical (i,l) -> (k,l)
    int f = c.id(obj[ar.index(i, j)]);
    for (int t = j + 1; t <= l; ++t) f = c.compose(h[ar.index(i, t)], f);
    for (int t = i + 1; t <= k; ++t) f = c.compose(v[ar.index(t, l)], f);
    return f;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      Functor f;
      f.on_objects = obj;
      f.on_morphisms.assign(ar.cat.morphisms(), -1);
      for (int mm = 0; mm < ar.cat.morphisms(); ++mm) {
        const auto [i, j] = ar.elements[ar.cat.src(mm)];
        const auto [k, l] = ar.elements[ar.cat.tgt(mm)];
        f.on_morphisms[mm] = path(i, j, k, l);
      }
      out.push_back(std::move(f));
      return;
    }
    const auto [i, j] = order[pos];
    const int x = ar.index(i, j);
    if (i == j) {
      obj[x] = w.zero;
      if (i > 0) v[x] = c.hom(obj[ar.index(i - 1, j)], w.zero).at(0);
      rec(pos + 1);
      return;
    }
    const int left = obj[ar.index(i, j - 1)];
    for (int o = 0; o < c.objects(); ++o) {
      obj[x] = o;
      for (int hh : c.hom(left, o)) {
        if (!w.is_cof(hh)) continue;
        h[x] = hh;
        if (i == 0) {
          rec(pos + 1);
          continue;
        }
        for (int vv : c.hom(obj[ar.index(i - 1, j)], o)) {
          if (c.compose(vv, h[ar.index(i - 1, j)]) != c.compose(hh, v[ar.index(i, j - 1)])) continue;
          v[x] = vv;
          rec(pos + 1);
        }
      }
    }
    obj[x] = -1;
  };
  rec(0);
  return out;
}

std::vector<Functor> f_candidates(const WaldhausenData& w, int n) {
  const FinCategory& c = w.cat;
  FinCategory dom = ordinal(n);
  std::vector<Functor> out;
  std::vector<int> obj(n + 1), step(n + 1, -1);
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      Functor f;
      f.on_objects = obj;
      f.on_morphisms.assign(dom.morphisms(), -1);
      for (int mm = 0; mm < dom.morphisms(); ++mm) {
        int g = c.id(obj[dom.src(mm)]);
        for (int t = dom.src(mm) + 1; t <= dom.tgt(mm); ++t) g = c.compose(step[t], g);
        f.on_morphisms[mm] = g;
      }
      out.push_back(std::move(f));
      return;
    }
    for (int o = 0; o < c.objects(); ++o) {
      obj[j] = o;
      if (j == 0) {
        rec(1);
        continue;
      }
      for (int s : c.hom(obj[j - 1], o))
        if (w.is_cof(s)) {
          step[j] = s;
          rec(j + 1);
        }
    }
  };
  rec(0);
  return out;
}

// Cofibration rule: components along the first row are cofibrations and so is
// every induced map from the pushout A_j u_{A_{j-1}} B_{j-1} to B_j. A missing
// pushout makes the morphism a non-cofibration.
bool level_cofibration(const WaldhausenData& w, const FinCategory& dom, const std::vector<int>& row,
                       const Functor& a, const Functor& b, const std::vector<int>& comp) {
  const FinCategory& c = w.cat;
  for (int x : row)
    if (!w.is_cof(comp[x])) return false;
  for (std::size_t j = 1; j < row.size(); ++j) {
    const int step = *dom.find_morphism(dom.object_name(row[j - 1]) + "<" + dom.object_name(row[j]));
    const auto po = pushouts(c, {a.on_morphisms[step], comp[row[j - 1]]});
    if (po.empty()) return false;
    const Cocone& k = po[0];
    int u = -1;
    for (int cand : c.hom(k.apex, b.on_objects[row[j]]))
      if (c.compose(cand, k.legs[1]) == comp[row[j]] && c.compose(cand, k.legs[2]) == b.on_morphisms[step]) u = cand;
    if (u < 0 || !w.is_cof(u)) return false;
  }
  return true;
}

void finish_level(const WaldhausenData& w, SLevel& level) {
  FunctorCategory fc = functor_category(level.domain, w.cat, level.diagrams);
  level.w.cat = std::move(fc.cat);
  level.components = std::move(fc.components);
  for (std::size_t i = 0; i < level.diagrams.size(); ++i) level.by_diagram[level.diagrams[i]] = static_cast<int>(i);
  for (int m = 0; m < level.w.cat.morphisms(); ++m) {
    std::vector<int> key{level.w.cat.src(m), level.w.cat.tgt(m)};
    key.insert(key.end(), level.components[m].begin(), level.components[m].end());
    level.by_components[key] = m;
  }
  level.w.cof.assign(level.w.cat.morphisms(), 0);
  for (int m = 0; m < level.w.cat.morphisms(); ++m)
    level.w.cof[m] = level_cofibration(w, level.domain, level.row, level.diagrams[level.w.cat.src(m)],
                                       level.diagrams[level.w.cat.tgt(m)], level.components[m]);
  level.w.zero = -1;
  for (std::size_t i = 0; i < level.diagrams.size(); ++i) {
    bool all_zero = true;
    for (int o : level.diagrams[i].on_objects) all_zero = all_zero && o == w.zero;
    if (all_zero) level.w.zero = static_cast<int>(i);
  }
  if (level.w.zero < 0) throw InvalidInput("level has no zero diagram");
  level.w.bounded = w.bounded;
  level.w.universe = w.universe;
}

SLevel ar_level(const WaldhausenData& w, int n, bool restricted) {
  SLevel level;
  level.kind = restricted ? SLevel::Kind::SBar : SLevel::Kind::S;
  level.n = n;
  level.ar = ar_poset(n);
  level.domain = level.ar.cat;
  for (int j = 0; j <= n; ++j) level.row.push_back(level.ar.index(0, j));
  for (Functor& f : ar_candidates(w, level.ar)) {
    bool missing = false;
    if (!ar_violation(w, level.ar, restricted, f, missing))
      level.diagrams.push_back(std::move(f));
    else if (missing)
      ++level.dropped;
  }
  finish_level(w, level);
  return level;
}

}  // namespace

SLevel s_n(const WaldhausenData& w, int n) { return ar_level(w, n, false); }
SLevel s_bar_n(const WaldhausenData& w, int n) { return ar_level(w, n, true); }

SLevel f_n(const WaldhausenData& w, int n) {
  SLevel level;
  level.kind = SLevel::Kind::F;
  level.n = n;
  level.domain = ordinal(n);
  for (int j = 0; j <= n; ++j) level.row.push_back(j);
  level.diagrams = f_candidates(w, n);
  finish_level(w, level);
  return level;
}

std::optional<std::string> level_witness(const WaldhausenData& w, const SLevel& level) {
  for (std::size_t i = 0; i < level.diagrams.size(); ++i) {
    if (auto err = check_functor(level.domain, w.cat, level.diagrams[i]))
      return "diagram " + std::to_string(i) + ": " + *err;
    bool missing = false;
    auto e = level.kind == SLevel::Kind::F
                 ? string_violation(w, level.diagrams[i], level.n)
                 : ar_violation(w, level.ar, level.kind == SLevel::Kind::SBar, level.diagrams[i], missing);
    if (e) return "diagram " + std::to_string(i) + ": " + *e;
  }
  return std::nullopt;
}

Functor s_simplicial_map(const SLevel& sn, const SLevel& sm, const Monotone& theta) {
  const ArPoset& an = sn.ar;
  const ArPoset& am = sm.ar;
  if (static_cast<int>(theta.size()) != am.n + 1 || !surj::is_monotone(theta, an.n))
    throw InvalidInput("s_simplicial_map: theta is not a monotone map [m] -> [n]");
  std::vector<int> on_obj, on_mor;
  for (const auto& [i, j] : am.elements) on_obj.push_back(an.index(theta[i], theta[j]));
  for (int m = 0; m < am.cat.morphisms(); ++m) {
    const auto [i, j] = am.elements[am.cat.src(m)];
    const auto [k, l] = am.elements[am.cat.tgt(m)];
    on_mor.push_back(an.arrow(theta[i], theta[j], theta[k], theta[l]));
  }
  Functor out;
  for (const Functor& a : sn.diagrams) {
    Functor b;
    for (int x : on_obj) b.on_objects.push_back(a.on_objects[x]);
    for (int m : on_mor) b.on_morphisms.push_back(a.on_morphisms[m]);
    const int id = sm.find(b);
    if (id < 0) throw std::logic_error("s_simplicial_map: image is not an [m]-complex");
    out.on_objects.push_back(id);
  }
  for (int m = 0; m < sn.w.cat.morphisms(); ++m) {
    std::vector<int> comps;
    for (int x : on_obj) comps.push_back(sn.components[m][x]);
    const int id = sm.find_morphism(out.on_objects[sn.w.cat.src(m)], out.on_objects[sn.w.cat.tgt(m)], comps);
    if (id < 0) throw std::logic_error("s_simplicial_map: image is not a transformation");
    out.on_morphisms.push_back(id);
  }
  return out;
}

namespace {

Functor restrict_level(const SLevel& from, const SLevel& to, const std::vector<int>& on_obj,
                       const std::vector<int>& on_mor) {
  Functor out;
  for (const Functor& a : from.diagrams) {
    Functor b;
    for (int x : on_obj) b.on_objects.push_back(a.on_objects[x]);
    for (int m : on_mor) b.on_morphisms.push_back(a.on_morphisms[m]);
    out.on_objects.push_back(to.find(b));
  }
  for (int m = 0; m < from.w.cat.morphisms(); ++m) {
    const int s = out.on_objects[from.w.cat.src(m)], t = out.on_objects[from.w.cat.tgt(m)];
    std::vector<int> comps;
    for (int x : on_obj) comps.push_back(from.components[m][x]);
    out.on_morphisms.push_back(s < 0 || t < 0 ? -1 : to.find_morphism(s, t, comps));
  }
  return out;
}

bool total(const Functor& f) {
  for (int x : f.on_objects)
    if (x < 0) return false;
  for (int x : f.on_morphisms)
    if (x < 0) return false;
  return true;
}

}  // namespace

ForgetfulReport forgetful_maps(const SLevel& s, const SLevel& sbar, const SLevel& f) {
  ForgetfulReport r;
  const ArPoset& ar = s.ar;
  const int n = ar.n;
  std::vector<int> same_obj, same_mor;
  for (int x = 0; x < ar.cat.objects(); ++x) same_obj.push_back(x);
  for (int m = 0; m < ar.cat.morphisms(); ++m) same_mor.push_back(m);
  r.s_to_sbar = restrict_level(s, sbar, same_obj, same_mor);
  std::vector<int> row_obj, row_mor;
  for (int j = 1; j <= n; ++j) row_obj.push_back(ar.index(0, j));
  for (int m = 0; m < f.domain.morphisms(); ++m)
    row_mor.push_back(ar.arrow(0, f.domain.src(m) + 1, 0, f.domain.tgt(m) + 1));
  r.sbar_to_f = restrict_level(sbar, f, row_obj, row_mor);
  std::ostringstream detail;
  if (!total(r.s_to_sbar)) {
    detail << "S_" << n << " -> restricted S_" << n << " is not defined on every simplex; ";
  } else {
    ExactFunctorData g{s.w, sbar.w, r.s_to_sbar};
    r.s_sbar_equivalence = is_equivalence(s.w.cat, sbar.w.cat, r.s_to_sbar);
    r.s_sbar_reflects = reflects_cofibrations(g);
    r.s_sbar_exact = validate_exact(g).pass();
  }
  if (!total(r.sbar_to_f)) {
    detail << "restricted S_" << n << " -> F_" << n - 1 << " is not defined on every simplex; ";
  } else {
    ExactFunctorData g{sbar.w, f.w, r.sbar_to_f};
    r.sbar_f_equivalence = is_equivalence(sbar.w.cat, f.w.cat, r.sbar_to_f);
    r.sbar_f_reflects = reflects_cofibrations(g);
    r.sbar_f_exact = validate_exact(g).pass();
    if (!r.sbar_f_equivalence) {
      if (!essentially_surjective(sbar.w.cat, f.w.cat, r.sbar_to_f))
        detail << "restricted S_" << n << " -> F_" << n - 1 << " is not essentially surjective; ";
      else
        detail << "restricted S_" << n << " -> F_" << n - 1 << " is not fully faithful; ";
    }
  }
  r.detail = detail.str();
  return r;
}

ForgetfulReport forgetful_maps(const WaldhausenData& w, int n) {
  if (n < 1) throw InvalidInput("forgetful_maps: n must be at least 1");
  return forgetful_maps(s_n(w, n), s_bar_n(w, n), f_n(w, n - 1));
}

HomSet s_n_generic(const WaldhausenData& w, int n, int d, std::size_t budget) {
  ArPoset ar = ar_poset(n);
  Nerve na = nerve(ar.cat, 2 * n + 1);
  const int top = 2 * n + d;
  Nerve nc = w.nerve(top + 1);
  auto idx = std::make_shared<const SimplexIndex>(nc.sset, top);
  // edge generator of N Ar[n] for each non-identity morphism
  std::vector<int> edge_of(ar.cat.morphisms(), -1);
  for (int g = 0; g < static_cast<int>(na.sset->count(1)); ++g) edge_of[na.strings[1][g][0]] = g;
  auto vertex_ok = [&](const Assignment& m) {
    Functor f;
    for (int x = 0; x < ar.cat.objects(); ++x) f.on_objects.push_back(idx->at(0, m[0][x]).gen);
    for (int mm = 0; mm < ar.cat.morphisms(); ++mm) {
      if (ar.cat.is_identity(mm)) {
        f.on_morphisms.push_back(w.cat.id(f.on_objects[ar.cat.src(mm)]));
        continue;
      }
      const Simplex& e = idx->at(1, m[1][edge_of[mm]]);
      f.on_morphisms.push_back(e.nondegenerate() ? nc.strings[1][e.gen][0] : w.cat.id(e.gen));
    }
    bool missing = false;
    return !ar_violation(w, ar, false, f, missing);
  };
  auto local_ok = [&](const Simplex& a, int target) {
    if (a.dim() == 0) {
      const auto [i, j] = ar.elements[a.gen];
      return i != j || idx->at(0, target).gen == w.zero;
    }
    if (a.dim() != 1 || !a.nondegenerate()) return true;
    const int mm = na.strings[1][a.gen][0];
    if (ar.elements[ar.cat.src(mm)].first != ar.elements[ar.cat.tgt(mm)].first) return true;
    const Simplex& e = idx->at(1, target);
    return !e.nondegenerate() || w.is_cof(nc.strings[1][e.gen][0]);
  };
  return full_internal_hom(na.sset, idx, d, vertex_ok, budget, local_ok);
}

}  // namespace qcat
