#include "qcat/lifting_checks.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "qcat/errors.hpp"
#include "qcat/homotopy.hpp"
#include "qcat/ktheory.hpp"
#include "qcat/s_construction.hpp"
#include "qcat/standard.hpp"

namespace qcat {

const char* outcome_name(Outcome v) {
  switch (v) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

SSetPtr spine_product(const std::vector<int>& shape) {
  if (shape.empty()) return delta(0);
  SSetPtr acc = spine(shape[0]);
  for (std::size_t i = 1; i < shape.size(); ++i) acc = product(acc, spine(shape[i])).sset;
  return acc;
}

int spine_product_dim(const std::vector<int>& shape) {
  int d = 0;
  for (int n : shape) d += n > 0 ? 1 : 0;
  return d;
}

ProductSet transformation_shape(int n) { return product(spine(n), delta(1)); }
ProductSet prism_shape(int n) { return product(spine(n), delta(2)); }

Assignment prism_face(const ProductSet& prism, const ProductSet& square, const Assignment& h, int i,
                      const SimplexIndex& x) {
  SimplicialMap phi = product_map(square, prism, SimplicialMap::identity(square.pr1.target),
                                  delta_map(1, 2, surj::coface(2, i)));
  return precompose(h, phi, x);
}

namespace {

using Vertex = std::pair<int, int>;  // (spine vertex, Delta coordinate)
using Tuple = std::vector<Vertex>;

Tuple tuple_of(const ProductSet& p, int n, int g) {
  Tuple t;
  for (int v : p.sset->vertices(Simplex::generator(n, g)))
    t.emplace_back(p.pr1.assign[0][v].gen, p.pr2.assign[0][v].gen);
  return t;
}

Tuple drop(const Tuple& t, int i) {
  Tuple out = t;
  out.erase(out.begin() + i);
  return out;
}

class PrismBuilder {
 public:
  explicit PrismBuilder(const SimplexIndex& x) : x_(x) {}

  void record(const Tuple& t, int id) {
    auto [it, fresh] = values_.emplace(t, id);
    if (!fresh) {
      if (it->second != id) throw InvalidInput("prism: boundary data disagree (alpha and beta must share source and target)");
      return;
    }
    const int n = static_cast<int>(t.size()) - 1;
    if (n == 0) return;
    auto f = x_.face_ids(n, id);
    for (int i = 0; i <= n; ++i) record(drop(t, i), f[i]);
  }

  /// Records the square map m : I[n] x Delta[1] -> X along Delta[1] -> Delta[2], t -> e[t].
  void record_square(const ProductSet& sq, const Assignment& m, const int e[2]) {
    for (int n = 0; n < static_cast<int>(m.size()); ++n)
      for (int g = 0; g < static_cast<int>(m[n].size()); ++g) {
        Tuple t = tuple_of(sq, n, g);
        for (auto& v : t) v.second = e[v.second];
        record(t, m[n][g]);
      }
  }

  std::optional<int> value(const Tuple& t) const {
    auto it = values_.find(t);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  const SimplexIndex& x_;
  std::map<Tuple, int> values_;
};

int square_vertex(const ProductSet& sq, const Assignment& m, int i, int t) {
  return m[0][sq.pair(Simplex::generator(0, i), Simplex::generator(0, t)).gen];
}

int square_component(const ProductSet& sq, const Assignment& m, int i) {
  return m[1][sq.pair(degeneracy(Simplex::generator(0, i), 0), Simplex::generator(1, 0)).gen];
}

PrismResult build_prism(const SimplexIndex& x, int n, const Assignment& alpha, const Assignment& beta, bool last) {
  if (x.max_dim() < 3) throw BoundError("prism: index must reach dimension 3");
  PrismResult r;
  r.prism = prism_shape(n);
  ProductSet sq = transformation_shape(n);
  if (alpha.size() != sq.sset->top_dim() + 1u || beta.size() != alpha.size())
    throw InvalidInput("prism: transformations must be maps I[n] x Delta[1] -> X");
  SimplicialMap idw = SimplicialMap::identity(sq.pr1.target);
  PrismBuilder b(x);
  const int e01[2] = {0, 1}, e02[2] = {0, 2}, e12[2] = {1, 2};
  const int c = last ? n : 0;
  int sigma_faces[3];
  if (last) {
    Assignment id_src = precompose(alpha, product_map(sq, sq, idw, delta_map(1, 1, {0, 0})), x);
    b.record_square(sq, id_src, e01);
    b.record_square(sq, alpha, e02);
    b.record_square(sq, beta, e12);
    sigma_faces[0] = square_component(sq, beta, c);
    sigma_faces[1] = square_component(sq, alpha, c);
    sigma_faces[2] = x.degeneracy_id(0, square_vertex(sq, alpha, c, 0), 0);
  } else {
    Assignment id_tgt = precompose(alpha, product_map(sq, sq, idw, delta_map(1, 1, {1, 1})), x);
    b.record_square(sq, alpha, e01);
    b.record_square(sq, beta, e02);
    b.record_square(sq, id_tgt, e12);
    sigma_faces[0] = x.degeneracy_id(0, square_vertex(sq, alpha, c, 1), 0);
    sigma_faces[1] = square_component(sq, beta, c);
    sigma_faces[2] = square_component(sq, alpha, c);
  }
  auto sigmas = x.with_faces(2, sigma_faces);
  if (sigmas.empty()) {
    r.reason = last ? "last components are not right homotopic" : "first components are not left homotopic";
    return r;
  }
  b.record({{c, 0}, {c, 1}, {c, 2}}, sigmas.front());

  std::vector<std::unique_ptr<HornFiller>> fillers(4);
  auto fill = [&](int seg, const std::string& label, const Tuple& t) -> bool {
    std::vector<int> faces(4, -1);
    int k = -1;
    for (int i = 0; i < 4; ++i) {
      auto v = b.value(drop(t, i));
      if (v) faces[i] = *v;
      else if (k < 0) k = i;
      else throw std::logic_error("prism: two faces missing in " + label);
    }
    if (k < 0) throw std::logic_error("prism: simplex " + label + " already determined");
    if (!fillers[k]) fillers[k] = std::make_unique<HornFiller>(x, 3, k);
    auto f = fillers[k]->first(faces);
    if (!f) {
      r.stuck_segment = seg;
      r.stuck_simplex = label;
      r.stuck_k = k;
      r.stuck_faces = faces;
      std::ostringstream os;
      os << "segment " << seg << "-" << seg + 1 << ": Lambda^" << k << "[3] on " << label << " has no filler (faces";
      for (int i = 0; i < 4; ++i)
        if (i != k) os << " d" << i << "=" << to_string(x.at(2, faces[i]));
      os << ")";
      r.reason = os.str();
      return false;
    }
    b.record(t, *f);
    ++r.fillers;
    return true;
  };

  for (int s = 0; s < n; ++s) {
    const int i = last ? n - 1 - s : s;
    const Vertex a{i, 0}, bb{i, 1}, cc{i, 2}, p{i + 1, 0}, q{i + 1, 1}, rr{i + 1, 2};
    std::vector<std::pair<std::string, Tuple>> order = {
        {"apqr", {a, p, q, rr}}, {"abqr", {a, bb, q, rr}}, {"abcr", {a, bb, cc, rr}}};
    if (!last) std::swap(order[0], order[2]);
    for (const auto& [label, t] : order)
      if (!fill(i, label, t)) return r;
  }

  const SimplicialSet& ps = *r.prism.sset;
  r.homotopy.resize(ps.top_dim() + 1);
  for (int m = 0; m <= ps.top_dim(); ++m)
    for (int g = 0; g < static_cast<int>(ps.count(m)); ++g) {
      auto v = b.value(tuple_of(r.prism, m, g));
      if (!v) throw std::logic_error("prism: generator left undefined");
      r.homotopy[m].push_back(*v);
    }
  r.found = true;
  return r;
}

}  // namespace

PrismResult homotopy_from_last_component(const SimplexIndex& x, int n, const Assignment& alpha,
                                         const Assignment& beta) {
  return build_prism(x, n, alpha, beta, true);
}

PrismResult homotopy_from_first_component(const SimplexIndex& x, int n, const Assignment& alpha,
                                          const Assignment& beta) {
  return build_prism(x, n, alpha, beta, false);
}

namespace {

/// Fixes the images of s's generators that come from faces of shape `from` via phi.
void fix_along(EnumOptions& o, const SimplicialMap& phi, const Assignment& values) {
  for (int m = 0; m < static_cast<int>(values.size()); ++m)
    for (int g = 0; g < static_cast<int>(values[m].size()); ++g) {
      const Simplex& s = phi.assign[m][g];
      if (!s.degens.empty()) throw std::logic_error("fix_along: face inclusion is degenerate");
      o.fixed[s.gdim][s.gen] = values[m][g];
    }
}

void init_fixed(EnumOptions& o, const SimplicialSet& s) {
  o.fixed.assign(s.top_dim() + 1, {});
  for (int m = 0; m <= s.top_dim(); ++m) o.fixed[m].assign(s.count(m), -1);
}

}  // namespace

ComponentsReport components_hypothesis_check(const SSetPtr& x, const std::vector<int>& shape, std::size_t budget) {
  ComponentsReport r;
  r.shape = shape;
  r.budget = budget;
  SSetPtr w = spine_product(shape);
  const int dw = spine_product_dim(shape);
  x->require(dw + 2, "components_hypothesis_check");
  ProductSet p0 = product(w, delta(0)), p1 = product(w, delta(1)), p2 = product(w, delta(2));
  SimplexIndex idx(x, dw + 2);
  HoCategory ho = ho_category(x);
  SimplicialMap idw = SimplicialMap::identity(w);
  SimplicialMap at0 = product_map(p0, p1, idw, delta_map(0, 1, {0}));
  SimplicialMap at1 = product_map(p0, p1, idw, delta_map(0, 1, {1}));
  SimplicialMap const0 = product_map(p1, p1, idw, delta_map(1, 1, {0, 0}));
  std::vector<SimplicialMap> cof;
  for (int i = 0; i < 3; ++i) cof.push_back(product_map(p1, p2, idw, delta_map(1, 2, surj::coface(2, i))));
  std::vector<int> comp_gen;
  for (int v = 0; v < static_cast<int>(w->count(0)); ++v)
    comp_gen.push_back(p1.pair(degeneracy(Simplex::generator(0, v), 0), Simplex::generator(1, 0)).gen);

  // right homotopy from a to b: d_0 = b, d_1 = a, d_2 = the identity of the source
  auto homotopic = [&](const Assignment& a, const Assignment& b) {
    EnumOptions o;
    o.budget = budget;
    init_fixed(o, *p2.sset);
    fix_along(o, cof[0], b);
    fix_along(o, cof[1], a);
    fix_along(o, cof[2], precompose(a, const0, idx));
    bool found = false;
    enumerate_maps(*p2.sset, idx, o, [&](const Assignment&) {
      found = true;
      return false;
    });
    return found;
  };

  try {
    EnumOptions o;
    o.budget = budget;
    std::vector<Assignment> all = all_maps(*p1.sset, idx, o);
    r.transformations = all.size();
    std::map<std::tuple<Assignment, Assignment, std::vector<int>>, std::vector<int>> groups;
    for (int t = 0; t < static_cast<int>(all.size()); ++t) {
      std::vector<int> classes;
      for (int g : comp_gen) classes.push_back(ho.class_of_edge[all[t][1][g]]);
      groups[{precompose(all[t], at0, idx), precompose(all[t], at1, idx), classes}].push_back(t);
    }
    for (const auto& [key, members] : groups)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ++r.pairs;
          const Assignment &a = all[members[i]], &b = all[members[j]];
          if (homotopic(a, b) || homotopic(b, a)) continue;
          r.verdict = Outcome::Fail;
          std::ostringstream os;
          os << "transformations " << members[i] << " and " << members[j]
             << " have homotopic components but no homotopy; components";
          for (int g : comp_gen)
            os << " " << to_string(idx.at(1, a[1][g])) << "~" << to_string(idx.at(1, b[1][g]));
          r.witness = os.str();
          return r;
        }
  } catch (const BudgetExceeded& e) {
    r.verdict = Outcome::Inconclusive;
    r.witness = e.what();
  }
  return r;
}

LiftReport rlp_check(const FinCategory& a, const FinCategory& b, const Functor& g, const std::vector<int>& shape,
                     LiftKind kind, std::size_t budget) {
  LiftReport r;
  r.kind = kind;
  r.shape = shape;
  r.budget = budget;
  SSetPtr w = spine_product(shape);
  ProductSet p = product(w, delta(2));
  const int top = p.sset->top_dim();
  Subobject sub = subobject(p.sset, [&](int n, int gen) {
    if (p.pr2.assign[n][gen].gdim < 2) return true;
    return kind == LiftKind::StrongReplacement && p.pr1.assign[n][gen].gdim == 0;
  });
  Nerve nb = nerve(b, top);
  SimplexIndex ib(nb.sset, top);

  auto describe = [&](const Assignment& u, const SimplexIndex& idx) {
    std::ostringstream os;
    for (int e = 0; e < static_cast<int>(sub.sset->count(1)); ++e) {
      const Simplex& s = idx.at(1, u[1][e]);
      if (e) os << ", ";
      os << sub.sset->name(1, e) << " -> " << (s.nondegenerate() ? idx.sset().name(1, s.gen) : "id");
    }
    return os.str();
  };

  try {
    if (kind == LiftKind::StrongReplacement) {
      EnumOptions o;
      o.budget = budget;
      enumerate_maps(*sub.sset, ib, o, [&](const Assignment& u) {
        ++r.problems;
        EnumOptions e;
        e.budget = budget;
        init_fixed(e, *p.sset);
        fix_along(e, sub.inclusion, u);
        bool found = false;
        enumerate_maps(*p.sset, ib, e, [&](const Assignment&) {
          found = true;
          return false;
        });
        if (!found) {
          r.verdict = Outcome::Fail;
          r.witness = "no extension of " + describe(u, ib);
        }
        return found;
      });
      return r;
    }
    if (auto err = check_functor(a, b, g)) throw InvalidInput("rlp_check: " + *err);
    Nerve na = nerve(a, top);
    SimplexIndex ia(na.sset, top);
    SimplicialMap ng = nerve_map(a, na, b, nb, g);
    std::vector<std::vector<int>> gid(top + 1);
    for (int n = 0; n <= top; ++n)
      for (int t = 0; t < static_cast<int>(ia.size(n)); ++t) gid[n].push_back(ib.id(ng(ia.at(n, t))));
    EnumOptions o;
    o.budget = budget;
    enumerate_maps(*sub.sset, ia, o, [&](const Assignment& u) {
      Assignment gu = u;
      for (int n = 0; n < static_cast<int>(u.size()); ++n)
        for (auto& t : gu[n]) t = gid[n][t];
      EnumOptions ov;
      ov.budget = budget;
      init_fixed(ov, *p.sset);
      fix_along(ov, sub.inclusion, gu);
      bool ok = true;
      enumerate_maps(*p.sset, ib, ov, [&](const Assignment& v) {
        ++r.problems;
        EnumOptions ol;
        ol.budget = budget;
        init_fixed(ol, *p.sset);
        fix_along(ol, sub.inclusion, u);
        ol.filter = [&](int n, int gen, int t) { return gid[n][t] == v[n][gen]; };
        bool found = false;
        enumerate_maps(*p.sset, ia, ol, [&](const Assignment&) {
          found = true;
          return false;
        });
        if (!found) {
          ok = false;
          r.verdict = Outcome::Fail;
          r.witness = "no lift of " + describe(u, ia);
        }
        return found;
      });
      return ok;
    });
  } catch (const BudgetExceeded& e) {
    r.verdict = Outcome::Inconclusive;
    r.witness = e.what();
  }
  return r;
}

bool HigherIterateReport::components_hold() const {
  for (const auto* v : {&components_source, &components_target})
    for (const auto& c : *v)
      if (c.verdict != Outcome::Pass) return false;
  return true;
}

HigherIterateReport higher_iterate_verify(const ExactFunctorData& g, const std::vector<int>& shape, int d,
                                          std::size_t budget) {
  if (shape.size() > 2) throw InvalidInput("higher_iterate_verify: at most two iterates");
  if (d < 2) throw InvalidInput("higher_iterate_verify: d must be at least 2");
  HigherIterateReport r;
  r.shape = shape;
  r.d = d;
  r.exact = validate_exact(g).pass();
  r.reflects = reflects_cofibrations(g);
  r.ho_equivalence = ho_equivalence(g);
  r.cof_ho_equivalence = cof_ho_equivalence(g);

  std::vector<std::vector<int>> shapes{shape};
  if (shape != std::vector<int>{1}) shapes.push_back({1});
  for (const auto& s : shapes) {
    const int dim = spine_product_dim(s) + 2;
    r.components_source.push_back(components_hypothesis_check(nerve(g.source.cat, dim).sset, s, budget));
    r.components_target.push_back(components_hypothesis_check(nerve(g.target.cat, dim).sset, s, budget));
  }

  WaldhausenData wa = g.source, wb = g.target;
  Functor f = g.f;
  r.functor_defined = true;
  for (int n : shape) {
    SLevel la = f_n(wa, n), lb = f_n(wb, n);
    Functor h = s_functor(ExactFunctorData{wa, wb, f}, la, lb);
    for (const auto* v : {&h.on_objects, &h.on_morphisms})
      for (int e : *v) r.functor_defined = r.functor_defined && e >= 0;
    wa = std::move(la.w);
    wb = std::move(lb.w);
    f = std::move(h);
    if (!r.functor_defined) break;
  }
  r.source_objects = wa.cat.objects();
  r.target_objects = wb.cat.objects();
  std::ostringstream os;
  os << "F";
  for (int n : shape) os << "_" << n;
  os << ": " << r.source_objects << " -> " << r.target_objects << " objects";
  if (r.functor_defined) {
    ExactFunctorData top{wa, wb, f};
    r.direct_reflects = reflects_cofibrations(top);
    r.direct_equivalence = is_equivalence(wa.cat, wb.cat, f);
    try {
      r.direct_cof_equivalence = cof_ho_equivalence(top);
    } catch (const InvalidInput& e) {
      // a bounded universe can miss the pushout a composite needs
      os << "; cofibration variant not checked: " << e.what() << " in the iterate";
    }
  } else {
    os << "; the iterate of G leaves the target level";
  }
  r.detail = os.str();
  return r;
}

}  // namespace qcat
