#include <random>

#include "doctest.h"
#include "qcat/homotopy.hpp"
#include "qcat/lifting_checks.hpp"
#include "qcat/standard.hpp"
#include "support.hpp"

using namespace qcat;
using namespace qcat::testing;

namespace {

void check_boundary(const PrismResult& r, const SimplexIndex& idx, int n, const Assignment& alpha,
                    const Assignment& beta, bool last) {
  ProductSet sq = transformation_shape(n);
  CHECK_FALSE(to_map(r.prism.sset, idx, r.homotopy).check());
  SimplicialMap idw = SimplicialMap::identity(sq.pr1.target);
  if (last) {
    CHECK(prism_face(r.prism, sq, r.homotopy, 1, idx) == alpha);
    CHECK(prism_face(r.prism, sq, r.homotopy, 0, idx) == beta);
    CHECK(prism_face(r.prism, sq, r.homotopy, 2, idx) ==
          precompose(alpha, product_map(sq, sq, idw, delta_map(1, 1, {0, 0})), idx));
  } else {
    CHECK(prism_face(r.prism, sq, r.homotopy, 2, idx) == alpha);
    CHECK(prism_face(r.prism, sq, r.homotopy, 1, idx) == beta);
    CHECK(prism_face(r.prism, sq, r.homotopy, 0, idx) ==
          precompose(alpha, product_map(sq, sq, idw, delta_map(1, 1, {1, 1})), idx));
  }
}

FinCategory idempotent() { return monoid({{0, 1}, {1, 1}}, {"1", "e"}); }

}  // namespace

TEST_CASE("horn classes") {
  Nerve g = nerve(codiscrete_times_cyclic(2, 2), 3);
  SimplexIndex ig(g.sset, 3);
  CHECK(horn_fill_class_check(ig, HornClass::All).pass);
  Nerve m = nerve(idempotent(), 3);
  SimplexIndex im(m.sset, 3);
  CHECK(horn_fill_class_check(im, HornClass::Inner).pass);
  HornCheck r = horn_fill_class_check(im, HornClass::Right3);
  CHECK_FALSE(r.pass);
  CHECK(r.n == 3);
  CHECK(r.k == 3);
  CHECK(r.describe(im).find("no filler") != std::string::npos);
  CHECK(horn_fill_class_check(SimplexIndex(delta(0), 3), HornClass::All).pass);
}

TEST_CASE("prism homotopy in groupoid nerves") {
  std::mt19937 rng(11);
  int instances = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const int k = 1 + trial % 3, m = 1 + trial % 2 + (trial % 5 == 0);
    const int n = trial % 4;
    FinCategory c = codiscrete_times_cyclic(k, m);
    Nerve nc = nerve(c, 3);
    SimplexIndex idx(nc.sset, 3);
    ProductSet sq = transformation_shape(n);
    Transformation t = random_transformation(rng, c, n);
    Assignment a = as_assignment(c, nc, idx, sq, t);
    REQUIRE_FALSE(to_map(sq.sset, idx, a).check());
    PrismResult r = homotopy_from_last_component(idx, n, a, a);
    REQUIRE(r.found);
    CHECK(r.fillers == 3 * n);
    check_boundary(r, idx, n, a, a, true);
    PrismResult l = homotopy_from_first_component(idx, n, a, a);
    REQUIRE(l.found);
    check_boundary(l, idx, n, a, a, false);
    ++instances;
  }
  CHECK(instances >= 10);
}

TEST_CASE("equal transformations give the degenerate homotopy") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    FinCategory c = random_category(rng, 3, 6);
    Nerve nc = nerve(c, 3);
    SimplexIndex idx(nc.sset, 3);
    ProductSet sq = transformation_shape(1);
    SimplicialMap idw = SimplicialMap::identity(sq.pr1.target);
    // any transformation: pick the first map
    EnumOptions o;
    Assignment a;
    enumerate_maps(*sq.sset, idx, o, [&](const Assignment& x) {
      a = x;
      return false;
    });
    PrismResult r = homotopy_from_last_component(idx, 1, a, a);
    REQUIRE(r.found);
    ProductSet pr = prism_shape(1);
    CHECK(r.homotopy == precompose(a, product_map(pr, sq, idw, delta_map(2, 1, {0, 0, 1})), idx));
  }
}

TEST_CASE("prism construction gets stuck at the right horn in a non-groupoid nerve") {
  FinCategory c = idempotent();
  Nerve nc = nerve(c, 3);
  SimplexIndex idx(nc.sset, 3);
  ProductSet sq = transformation_shape(1);
  const int one = c.id(0), e = 1;
  Assignment a = as_assignment(c, nc, idx, sq, {{one}, {e}, {one, e}});
  Assignment b = as_assignment(c, nc, idx, sq, {{one}, {e}, {e, e}});
  PrismResult r = homotopy_from_last_component(idx, 1, a, b);
  CHECK_FALSE(r.found);
  CHECK(r.stuck_simplex == "abcr");
  CHECK(r.stuck_k == 3);
  CHECK(r.fillers == 2);
  CHECK(r.reason.find("Lambda^3[3]") != std::string::npos);
  PrismResult l = homotopy_from_first_component(idx, 1, a, b);
  CHECK_FALSE(l.found);
  CHECK(l.stuck_k == -1);
}

TEST_CASE("components hypothesis on nerves") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    FinCategory c = random_category(rng, 3, 5);
    for (const std::vector<int>& shape : {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{2}}) {
      ComponentsReport r = components_hypothesis_check(nerve(c, spine_product_dim(shape) + 2).sset, shape);
      CHECK(r.verdict == Outcome::Pass);
      CHECK(r.pairs == 0);  // equal classes force equal transformations in a nerve
    }
  }
  ComponentsReport r = components_hypothesis_check(nerve(idempotent(), 3).sset, {1}, 0);
  CHECK(r.verdict == Outcome::Inconclusive);
}

TEST_CASE("components hypothesis fails on a target without 3-simplices") {
  // f ~ f' in both directions, but nothing in dimension 3
  SimplicialSet x;
  x.add(0, "0");
  x.add(0, "1");
  const Simplex v0 = Simplex::generator(0, 0), v1 = Simplex::generator(0, 1);
  x.add(1, "f", {v1, v0});
  x.add(1, "f'", {v1, v0});
  const Simplex f = Simplex::generator(1, 0), fp = Simplex::generator(1, 1), i0 = degeneracy(v0, 0);
  x.add(2, "t", {fp, f, i0});
  x.add(2, "t'", {f, fp, i0});
  const Simplex i1 = degeneracy(v1, 0);
  x.add(2, "u", {i1, f, fp});
  x.add(2, "u'", {i1, fp, f});
  x.set_bound(3, true);
  SSetPtr xp = share(std::move(x));
  CHECK(components_hypothesis_check(xp, {}).verdict == Outcome::Pass);
  ComponentsReport r = components_hypothesis_check(xp, {1});
  CHECK(r.verdict == Outcome::Fail);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("right lifting property") {
  FinCategory g = codiscrete_times_cyclic(2, 2);
  Functor id;
  for (int o = 0; o < g.objects(); ++o) id.on_objects.push_back(o);
  for (int m = 0; m < g.morphisms(); ++m) id.on_morphisms.push_back(m);
  CHECK(rlp_check(g, g, id, {}, LiftKind::Prism).verdict == Outcome::Pass);
  CHECK(rlp_check(g, g, id, {1}, LiftKind::Prism).verdict == Outcome::Pass);

  // {1, e} -> terminal is not faithful; the triangle (1, 1, e) has no lift
  FinCategory m = idempotent();
  FinCategory t = ordinal(0);
  Functor bang{{0}, {0, 0}};
  LiftReport r = rlp_check(m, t, bang, {}, LiftKind::Prism);
  CHECK(r.verdict == Outcome::Fail);
  CHECK(r.witness.find("e") != std::string::npos);
  CHECK(rlp_check(m, t, bang, {1}, LiftKind::Prism).verdict == Outcome::Fail);

  // faithful but not full: [0] u [0] -> [1]
  FinCategory two = poset(2, [](int i, int j) { return i == j; });
  FinCategory one = ordinal(1);
  Functor ff{{0, 1}, {one.id(0), one.id(1)}};
  CHECK(rlp_check(two, one, ff, {1}, LiftKind::Prism).verdict == Outcome::Pass);

  CHECK(rlp_check(t, m, {}, {1}, LiftKind::StrongReplacement).verdict == Outcome::Pass);
  CHECK(rlp_check(g, g, id, {}, LiftKind::Prism, 0).verdict == Outcome::Inconclusive);
}

TEST_CASE("higher iterates: identity and skeleton inclusion") {
  HigherIterateReport id = higher_iterate_verify(identity_exact(pointed_sets({0, 1, 2}).w), {1});
  CHECK(id.hypotheses());
  CHECK(id.direct_equivalence);
  CHECK(id.direct_reflects);
  CHECK(id.agree());

  HigherIterateReport sk = higher_iterate_verify(skeleton_inclusion({0, 1, 2, 1}), {1});
  CHECK(sk.exact);
  CHECK(sk.reflects);
  CHECK(sk.ho_equivalence);
  CHECK(sk.components_hold());
  CHECK(sk.functor_defined);
  CHECK(sk.direct_equivalence);
  CHECK(sk.direct_cof_equivalence);
  CHECK(sk.agree());

  HigherIterateReport two = higher_iterate_verify(identity_exact(pointed_sets({0, 1}).w), {1, 1});
  CHECK(two.hypotheses());
  CHECK(two.direct_equivalence);
  CHECK(two.agree());
}

TEST_CASE("higher iterates: the non-reflecting control") {
  HigherIterateReport r = higher_iterate_verify(non_reflecting_control(), {1});
  CHECK_FALSE(r.reflects);
  CHECK_FALSE(r.hypotheses());
  CHECK_FALSE(r.detail.empty());
  CHECK(r.agree());
}
