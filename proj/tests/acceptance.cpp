#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qcat/category.hpp"
#include "qcat/enumerate.hpp"
#include "qcat/homotopy.hpp"
#include "qcat/iso.hpp"
#include "qcat/join.hpp"
#include "qcat/join_slice.hpp"
#include "qcat/ktheory.hpp"
#include "qcat/lifting_checks.hpp"
#include "qcat/s_construction.hpp"
#include "qcat/standard.hpp"
#include "qcat/waldhausen.hpp"
#include "support.hpp"

using namespace qcat;
using namespace qcat::testing;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

SimplicialMap point_at(const SSetPtr& x, int v) { return SimplicialMap{delta(0), x, {{Simplex::generator(0, v)}}}; }

FinCategory lattice() { return poset(4, [](int x, int y) { return x == y || x == 0 || y == 3; }); }
FinCategory discrete(int n) { return poset(n, [](int x, int y) { return x == y; }); }

void join_identity(Result& r) {
  auto t0 = std::chrono::steady_clock::now();
  int count = 0;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      r.require(iso_check(join(delta(m), delta(n)).sset, delta(m + n + 1)).has_value(),
                "Delta[" + std::to_string(m) + "]*Delta[" + std::to_string(n) + "]");
      ++count;
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.require(secs < 10, "time limit");
  r.note << count << " pairs in " << secs << " s";
}

void nerve_join_slice(Result& r) {
  std::mt19937 rng(2024);
  int joins = 0, slices = 0;
  for (int t = 0; t < 20; ++t) {
    FinCategory p = random_poset(rng, 2), q = random_poset(rng, 2);
    FinCategory pq = join_category(p, q);
    r.require(iso_check(nerve(pq, pq.objects()).sset, join(nerve(p, 4).sset, nerve(q, 4).sset).sset).has_value(),
              "N(P*Q)");
    ++joins;
  }
  for (int t = 0; t < 20; ++t) {
    FinCategory c = random_category(rng, 4, 8);
    Nerve n = nerve(c, 3);
    for (int obj = 0; obj < c.objects(); ++obj) {
      SliceSet s = slice_over(point_at(n.sset, obj), 2);
      r.require(iso_check(nerve(over_category(c, obj).cat, 2).sset, s.sset(), 2).has_value(), "N(C/c)");
      ++slices;
    }
  }
  r.note << joins << " joins, " << slices << " slices over 20 categories";
}

// Composition tables of tau_1 N C and C agree under the class map f -> [f].
bool tau1_recovers(const FinCategory& c) {
  Nerve n = nerve(c, 3);
  HoCategory ho = ho_category(n.sset);
  if (ho.cat.morphisms() != c.morphisms() || ho.cat.objects() != c.objects()) return false;
  std::vector<int> cls(c.morphisms());
  std::set<int> seen;
  for (int f = 0; f < c.morphisms(); ++f) {
    cls[f] = ho.class_of(n.edge(c, f));
    seen.insert(cls[f]);
    if (ho.cat.src(cls[f]) != c.src(f) || ho.cat.tgt(cls[f]) != c.tgt(f)) return false;
  }
  if (static_cast<int>(seen.size()) != c.morphisms()) return false;
  for (int g = 0; g < c.morphisms(); ++g)
    for (int f = 0; f < c.morphisms(); ++f)
      if (c.tgt(f) == c.src(g) && cls[c.compose(g, f)] != ho.cat.compose(cls[g], cls[f])) return false;
  return true;
}

void tau1_nerve(Result& r) {
  std::mt19937 rng(77);
  int count = 0;
  for (int t = 0; t < 25; ++t) {
    r.require(tau1_recovers(random_category(rng, 4, 12)), "tau1 N C = C");
    ++count;
  }
  r.note << count << " categories";
}

void spine_rigidity(Result& r) {
  std::mt19937 rng(31);
  int categories = 0;
  std::size_t spines = 0;
  std::vector<FinCategory> cats{ordinal(2), monoid({{0, 1}, {1, 1}}, {"1", "e"}), codiscrete_times_cyclic(2, 2)};
  while (cats.size() < 12) {
    FinCategory c = random_category(rng, 3, 8);
    if (c.morphisms() <= 8) cats.push_back(c);
  }
  for (const FinCategory& c : cats) {
    if (c.morphisms() > 8) continue;
    ++categories;
    Nerve nc = nerve(c, 4);
    SimplexIndex idx(nc.sset, 4);
    for (int n = 1; n <= 4; ++n) {
      Subobject sp = spine_in(n);
      SSetPtr dn = delta(n);
      std::size_t strings = 0;
      enumerate_maps(*sp.sset, idx, {}, [&](const Assignment& u) {
        ++strings;
        EnumOptions o;
        o.budget = 100000;
        o.fixed.resize(n + 1);
        for (int k = 0; k <= n; ++k) o.fixed[k].assign(dn->count(k), -1);
        for (int k = 0; k <= 1; ++k)
          for (int g = 0; g < static_cast<int>(sp.sset->count(k)); ++g) {
            const Simplex& s = sp.inclusion.assign[k][g];
            o.fixed[s.gdim][s.gen] = u[k][g];
          }
        const std::size_t ext = enumerate_maps(*dn, idx, o, [](const Assignment&) { return true; });
        r.require(ext == 1, "unique extension");
        return true;
      });
      // independent count: composable strings of length n
      std::size_t composable = 0;
      std::function<void(int, int)> walk = [&](int obj, int left) {
        if (left == 0) {
          ++composable;
          return;
        }
        for (int f = 0; f < c.morphisms(); ++f)
          if (c.src(f) == obj) walk(c.tgt(f), left - 1);
      };
      for (int x = 0; x < c.objects(); ++x) walk(x, n);
      r.require(strings == composable, "spine count");
      spines += strings;
    }
  }
  r.note << categories << " categories, " << spines << " spine maps, n <= 4";
}

void restriction(Result& r) {
  struct Case {
    const char* name;
    FinCategory c, j;
  };
  std::vector<Case> cases{{"lattice/pair", lattice(), discrete(2)},
                          {"[2]/pair", ordinal(2), discrete(2)},
                          {"[2]/[1]", ordinal(2), ordinal(1)},
                          {"[3]/pair", ordinal(3), discrete(2)},
                          {"lattice/[1]", lattice(), ordinal(1)},
                          {"[3]/[1]", ordinal(3), ordinal(1)}};
  for (const Case& k : cases) {
    RestrictionReport rep = restriction_equivalence_check(k.c, k.j);
    r.require(rep.hypothesis && rep.essentially_surjective && rep.fully_faithful, k.name);
  }
  r.note << cases.size() << " instances";
}

void s_f_comparison(Result& r) {
  auto t0 = std::chrono::steady_clock::now();
  PointedSets p = pointed_sets({0, 1, 2});
  for (int n = 1; n <= 2; ++n) {
    SLevel s = s_n(p.w, n), sb = s_bar_n(p.w, n), f = f_n(p.w, n - 1);
    ForgetfulReport fr = forgetful_maps(s, sb, f);
    Functor sf = compose(fr.sbar_to_f, fr.s_to_sbar);
    r.require(is_equivalence(s.w.cat, f.w.cat, sf), "tau1 S_" + std::to_string(n) + " -> tau1 F_" + std::to_string(n - 1));
    r.note << "n=" << n << ": " << s.w.cat.objects() << " -> " << f.w.cat.objects() << " objects; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.require(secs < 60, "time limit");
  r.note << secs << " s";
}

void k0(Result& r) {
  struct Case {
    const char* name;
    WaldhausenData w;
  };
  std::vector<Case> cases{{"pointed {0,1,2}", pointed_sets({0, 1, 2}).w},
                          {"pointed {0,1}", pointed_sets({0, 1}).w},
                          {"duplicated {0,1,2,1}", pointed_sets({0, 1, 2, 1}).w},
                          {"trivial", trivial_waldhausen()}};
  for (const Case& k : cases) {
    K0Comparison c = compare_k0(k.w);
    r.require(c.agree, k.name);
    r.note << k.name << " [";
    for (std::size_t i = 0; i < c.diagonal.size(); ++i) r.note << (i ? "," : "") << c.diagonal[i];
    r.note << "]; ";
    if (std::string(k.name) == "pointed {0,1,2}") {
      r.require(c.diagonal == std::vector<std::int64_t>{0}, "pointed sets give Z");
      r.require(c.control_row >= 0 && c.control_detected, "negative control");
    }
  }
}

void approximation(Result& r) {
  ApproximationReport sk = approximation_verify(skeleton_inclusion({0, 1, 2, 1}));
  r.require(sk.exact && sk.reflects && sk.cof_ho_equivalence && sk.hypotheses(), "skeleton hypotheses");
  bool pi0 = !sk.levels.empty();
  for (const auto& l : sk.levels) pi0 = pi0 && l.pi0_bijection;
  r.require(pi0, "pi0 bijection");
  r.require(sk.k0_agree && sk.k0_source == sk.k0_target, "K0 isomorphism");
  ApproximationReport bad = approximation_verify(non_reflecting_control());
  r.require(!bad.reflects && !bad.hypotheses(), "control rejected");
  r.note << "skeleton: " << sk.theorem << "; control: " << bad.detail;
}

void quillen_a(Result& r) {
  int passed = 0;
  for (const FinCategory& c : {ordinal(2), lattice(), codiscrete_times_cyclic(2, 1)}) {
    Nerve n = nerve(c, 3);
    QuillenAReport id = quillen_a_verify(SimplicialMap::identity(n.sset));
    r.require(id.hypothesis && id.corroboration.pass(), "identity");
    ++passed;
  }
  ExactFunctorData sk = skeleton_inclusion({0, 1, 2, 1});
  Nerve a = nerve(sk.source.cat, 3), b = nerve(sk.target.cat, 3);
  QuillenAReport eq = quillen_a_verify(nerve_map(sk.source.cat, a, sk.target.cat, b, sk.f));
  r.require(eq.hypothesis && eq.corroboration.pass(), "skeleton inclusion");
  ++passed;
  // codiscrete groupoid on two objects -> point
  FinCategory g = codiscrete_times_cyclic(2, 1);
  FinCategory pt = ordinal(0);
  Functor collapse{{0, 0}, std::vector<int>(g.morphisms(), pt.id(0))};
  Nerve ng = nerve(g, 3), npt = nerve(pt, 3);
  QuillenAReport eq2 = quillen_a_verify(nerve_map(g, ng, pt, npt, collapse));
  r.require(eq2.hypothesis && eq2.corroboration.pass(), "groupoid collapse");
  ++passed;
  SimplicialMap inc{delta(0), delta(1), {{Simplex::generator(0, 1)}}};
  QuillenAReport bad = quillen_a_verify(inc);
  r.require(!bad.hypothesis && !bad.witness.empty(), "endpoint inclusion");
  r.note << passed << " equivalences pass; endpoint: " << bad.witness;
}

void prism(Result& r) {
  std::mt19937 rng(99);
  int instances = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const int k = 1 + trial % 3, m = 1 + trial % 3, n = 1 + trial % 3;
    FinCategory c = codiscrete_times_cyclic(k, m);
    Nerve nc = nerve(c, 3);
    SimplexIndex idx(nc.sset, 3);
    ProductSet sq = transformation_shape(n);
    Transformation t = random_transformation(rng, c, n);
    Assignment a = as_assignment(c, nc, idx, sq, t);
    PrismResult p = homotopy_from_last_component(idx, n, a, a);
    r.require(p.found, "prism found");
    if (!p.found) continue;
    SimplicialMap idw = SimplicialMap::identity(sq.pr1.target);
    r.require(!to_map(p.prism.sset, idx, p.homotopy).check(), "prism is a map");
    r.require(prism_face(p.prism, sq, p.homotopy, 1, idx) == a, "d1 = alpha");
    r.require(prism_face(p.prism, sq, p.homotopy, 0, idx) == a, "d0 = beta");
    r.require(prism_face(p.prism, sq, p.homotopy, 2, idx) ==
                  precompose(a, product_map(sq, sq, idw, delta_map(1, 1, {0, 0})), idx),
              "d2 = identity");
    ++instances;
  }
  r.require(instances >= 10, "at least 10 instances");
  FinCategory c = monoid({{0, 1}, {1, 1}}, {"1", "e"});
  Nerve nc = nerve(c, 3);
  SimplexIndex idx(nc.sset, 3);
  ProductSet sq = transformation_shape(1);
  const int one = c.id(0), e = 1;
  Assignment a = as_assignment(c, nc, idx, sq, {{one}, {e}, {one, e}});
  Assignment b = as_assignment(c, nc, idx, sq, {{one}, {e}, {e, e}});
  PrismResult stuck = homotopy_from_last_component(idx, 1, a, b);
  r.require(!stuck.found && !stuck.stuck_simplex.empty(), "stuck witness");
  r.note << instances << " groupoid instances; control: " << stuck.reason;
}

void structural(Result& r) {
  std::vector<std::pair<std::string, WaldhausenData>> cases{
      {"pointed {0,1,2}", pointed_sets({0, 1, 2}).w},
      {"pointed {0,1,2} all marked", pointed_sets({0, 1, 2}, true).w},
      {"pointed {0,1,2,1}", pointed_sets({0, 1, 2, 1}).w},
      {"pointed {0,1}", pointed_sets({0, 1}).w},
      {"trivial", trivial_waldhausen()}};
  WaldhausenData z2;
  z2.cat = monoid({{0, 1}, {1, 0}});
  z2.cof = {1, 1};
  cases.emplace_back("Z/2 all marked", z2);
  for (const auto& [name, w] : cases) {
    bool all = true;
    for (char x : w.cof) all = all && x;
    r.require(admits_factorization(w) == all, name + ": factorization <=> all maps");
    r.require(factorization_by_definition(w) == admits_factorization(w), name + ": definitions agree");
    r.require(homotopy_closed(w), name + ": homotopy closure");
    CofData cd = cof_subquasicategory(w, 3);
    r.require(six_for_two(cd.ho.cat), name + ": 6-for-2");
  }
  r.note << cases.size() << " instances";
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Result&)> run;
  };
  const std::vector<Criterion> criteria{
      {"join identity Delta[m]*Delta[n] = Delta[m+n+1]", join_identity},
      {"nerve commutes with join and slice", nerve_join_slice},
      {"tau1 N = Id", tau1_nerve},
      {"spine rigidity in nerves", spine_rigidity},
      {"restriction equivalence", restriction},
      {"S/F comparison on pointed sets", s_f_comparison},
      {"K0 oracle equivalence", k0},
      {"approximation desk check", approximation},
      {"Quillen A sanity", quillen_a},
      {"prism construction", prism},
      {"structural consequences", structural},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s - %s (%.1f s) %s\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].title, secs,
                r.note.str().c_str());
    std::fflush(stdout);
    failures += !r.pass;
  }
  return failures == 0 ? 0 : 1;
}
