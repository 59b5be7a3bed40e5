#include <random>

#include "doctest.h"
#include "qcat/category.hpp"
#include "qcat/iso.hpp"
#include "qcat/join_slice.hpp"
#include "qcat/standard.hpp"

using namespace qcat;

namespace {

SimplicialMap point_at(const SSetPtr& x, int v) { return SimplicialMap{delta(0), x, {{Simplex::generator(0, v)}}}; }

}  // namespace

TEST_CASE("joins of simplices are simplices") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(iso_check(join(delta(m), delta(n)).sset, delta(m + n + 1)));
}

TEST_CASE("join with the empty set") {
  CHECK(iso_check(join(empty_set(), boundary(2)).sset, boundary(2)));
  CHECK(iso_check(join(horn(2, 1), empty_set()).sset, horn(2, 1)));
}

TEST_CASE("join is associative on small instances") {
  auto a = boundary(1), b = delta(1), c = spine(2);
  auto ab_c = join(join(a, b).sset, c).sset;
  auto a_bc = join(a, join(b, c).sset).sset;
  CHECK(iso_check(ab_c, a_bc));
}

TEST_CASE("nerve of a join of posets") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    FinCategory p = random_poset(rng, 2), q = random_poset(rng, 2);
    FinCategory pq = join_category(p, q);
    auto npq = nerve(pq, pq.objects()).sset;
    auto j = join(nerve(p, 4).sset, nerve(q, 4).sset).sset;
    CHECK(iso_check(npq, j));
  }
}

TEST_CASE("slices of Delta[1]") {
  SliceSet s = slice_under(point_at(delta(1), 0), 1);
  CHECK(s.sset()->count(0) == 2);
  SliceSet t = slice_under(point_at(delta(1), 1), 1);
  CHECK(t.sset()->count(0) == 1);
  SliceSet u = slice_under(point_at(delta(0), 0), 2);
  CHECK(u.sset()->count(0) == 1);
  CHECK(u.sset()->count(1) == 0);
}

TEST_CASE("over Delta[2] at its last vertex") {
  OverSet o = over_quasicategory(delta(2), 2, 2);
  CHECK(o.sset->count(0) == 3);
  CHECK(o.sset->count(1) == 3);
  CHECK(o.sset->count(2) == 1);
  CHECK_FALSE(o.q.check());
  CHECK_FALSE(o.sset->check_identities());
}

TEST_CASE("overcategory and slice agree") {
  std::mt19937 rng(17);
  for (int t = 0; t < 12; ++t) {
    FinCategory c = random_category(rng, 3, 7);
    Nerve n = nerve(c, 4);
    for (int obj = 0; obj < c.objects(); ++obj) {
      OverSet o = over_quasicategory(n.sset, obj, 2);
      SliceSet s = slice_over(point_at(n.sset, obj), 2);
      CHECK(iso_check(o.sset, s.sset(), 2));
      SliceCategory sc = over_category(c, obj);
      CHECK(iso_check(nerve(sc.cat, 2).sset, o.sset, 2));
    }
  }
}

TEST_CASE("comma along the identity is the overcategory") {
  Nerve n = nerve(ordinal(2), 3);
  PullbackSet p = comma(SimplicialMap::identity(n.sset), 1, 2);
  OverSet o = over_quasicategory(n.sset, 1, 2);
  CHECK(iso_check(p.sset, o.sset, 2));
}

TEST_CASE("initial objects") {
  auto d1 = delta(1);
  CHECK(is_initial(d1, 0).verdict == Verdict::Confirmed);
  CHECK(is_initial(d1, 1).verdict == Verdict::Refuted);
  Nerve n = nerve(poset(3, [](int a, int b) { return a == b || a == 0; }), 3);
  CHECK(is_initial(n.sset, 0).verdict == Verdict::Confirmed);
  CHECK(is_initial(n.sset, 1).verdict == Verdict::Refuted);
}

TEST_CASE("contractibility verdicts") {
  CHECK(contractible(*delta(2)).verdict == Verdict::Confirmed);
  CHECK(contractible(*boundary(2)).verdict == Verdict::Refuted);
  CHECK(contractible(*boundary(1)).verdict == Verdict::Refuted);
  CHECK(contractible(*empty_set()).verdict == Verdict::Refuted);
}

TEST_CASE("colimits of a discrete pair in a lattice are joins") {
  // 0 < a, b < 1
  FinCategory c = poset(4, [](int x, int y) { return x == y || x == 0 || y == 3; });
  Nerve n = nerve(c, 4);
  auto pair = boundary(1);
  SimplicialMap a{pair, n.sset, {{Simplex::generator(0, 1), Simplex::generator(0, 2)}}};
  auto cocones = colimiting_cocones(a, 2);
  REQUIRE(cocones.size() == 1);
  CHECK(cocones[0].extension(Simplex::generator(0, 2)) == Simplex::generator(0, 3));
}

TEST_CASE("colimit of a constant point") {
  Nerve n = nerve(ordinal(2), 4);
  auto cocones = colimiting_cocones(point_at(n.sset, 1), 2);
  REQUIRE(cocones.size() == 1);
  CHECK(cocones[0].extension(Simplex::generator(0, 1)) == Simplex::generator(0, 1));
}

TEST_CASE("restriction equivalence on lattices") {
  FinCategory lattice = poset(4, [](int x, int y) { return x == y || x == 0 || y == 3; });
  FinCategory chain = ordinal(2);
  FinCategory pair = poset(2, [](int x, int y) { return x == y; });
  CHECK(restriction_equivalence_check(lattice, pair).pass());
  CHECK(restriction_equivalence_check(chain, pair).pass());
  CHECK(restriction_equivalence_check(chain, ordinal(1)).pass());
  RestrictionReport bad = restriction_equivalence_check(poset(2, [](int x, int y) { return x == y; }), pair);
  CHECK_FALSE(bad.hypothesis);
}

TEST_CASE("cone extension") {
  CHECK(cone_extension_check(delta(0), 3).pass);
  CHECK(cone_extension_check(nerve(ordinal(2), 4).sset, 2).pass);
  ConeExtensionReport r = cone_extension_check(boundary(1), 2);
  CHECK_FALSE(r.pass);
  CHECK(all_posets(3).size() == 19);
}
