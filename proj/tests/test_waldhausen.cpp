#include "doctest.h"
#include "qcat/waldhausen.hpp"

using namespace qcat;

TEST_CASE("pointed sets universe") {
  PointedSets p = pointed_sets({0, 1, 2});
  CHECK(p.w.cat.objects() == 3);
  CHECK(p.w.cat.morphisms() == 23);
  CHECK_FALSE(p.w.cat.validate());
  int cofs = 0;
  for (char c : p.w.cof) cofs += c;
  // injections: 1 + 1 + 1 + 1 + 2 + 2 (P0->all, P1->P1, P1->P2, P2->P2 bijections)
  CHECK(cofs == 8);
  WaldhausenReport r = validate_waldhausen(p.w);
  CHECK(r.pass());
  CHECK_FALSE(r.local.empty());
}

TEST_CASE("maximal marking and the trivial structure validate") {
  CHECK(validate_waldhausen(pointed_sets({0, 1, 2}, true).w).pass());
  CHECK(validate_waldhausen(trivial_waldhausen()).pass());
  CHECK_FALSE(validate_waldhausen(pointed_sets({0, 1}).w).local.empty());
}

TEST_CASE("unmarking an identity breaks axiom (i)") {
  PointedSets p = pointed_sets({0, 1, 2});
  p.w.cof[p.w.cat.id(1)] = 0;
  WaldhausenReport r = validate_waldhausen(p.w);
  CHECK_FALSE(r.pass());
  CHECK(r.fatal[0].rfind("(i)", 0) == 0);
}

TEST_CASE("unmarking a map out of zero breaks axiom (ii)") {
  PointedSets p = pointed_sets({0, 1});
  const int f = p.w.cat.hom(0, 1)[0];
  p.w.cof[f] = 0;
  bool found = false;
  for (const auto& e : validate_waldhausen(p.w).fatal) found = found || e.rfind("(ii)", 0) == 0;
  CHECK(found);
}

TEST_CASE("cofibration homotopy category is the injections") {
  PointedSets p = pointed_sets({0, 1, 2});
  CofData d = cof_subquasicategory(p.w);
  CHECK(d.ho_co.cat.morphisms() == 8);
  CHECK_FALSE(check_functor(d.ho_co.cat, d.ho.cat, d.inclusion));
  CHECK(fully_faithful(d.ho_co.cat, d.ho.cat, d.inclusion) == false);
  for (int m = 0; m < d.ho_co.cat.morphisms(); ++m) {
    const Simplex e = d.co.inclusion(d.ho_co.index->at(1, d.ho_co.representative[m]));
    if (e.nondegenerate()) CHECK(p.w.is_cof(d.nerve.strings[1][e.gen][0]));
  }
  for (int f = 0; f < d.ho.cat.morphisms(); ++f)
    if (d.ho.cat.is_iso(f)) {
      bool hit = false;
      for (int m : d.inclusion.on_morphisms) hit = hit || m == f;
      CHECK(hit);
    }
}

TEST_CASE("factorization tests agree") {
  CHECK_FALSE(admits_factorization(pointed_sets({0, 1, 2}).w));
  CHECK(admits_factorization(pointed_sets({0, 1, 2}, true).w));
  CHECK(admits_factorization(trivial_waldhausen()));
  // a groupoid with every map marked
  WaldhausenData g;
  g.cat = monoid({{0, 1}, {1, 0}});
  g.cof = {1, 1};
  CHECK(admits_factorization(g));
}

TEST_CASE("homotopy closure and 6-for-2") {
  for (auto sizes : {std::vector<int>{0, 1, 2}, std::vector<int>{0, 1, 2, 1}}) {
    PointedSets p = pointed_sets(sizes);
    CHECK(homotopy_closed(p.w));
    CHECK(six_for_two(p.w.cat));
  }
}

TEST_CASE("exact functors") {
  PointedSets p = pointed_sets({0, 1, 2});
  ExactFunctorData id = identity_exact(p.w);
  CHECK(validate_exact(id).pass());
  CHECK(reflects_cofibrations(id));
  CHECK(cof_ho_equivalence(id));
  ExactFunctorData sk = skeleton_inclusion({0, 1, 2, 1});
  CHECK(validate_exact(sk).pass());
  CHECK(reflects_cofibrations(sk));
  CHECK(ho_equivalence(sk));
  CHECK(cof_ho_equivalence(sk));
  ExactFunctorData bad = non_reflecting_control();
  CHECK(validate_exact(bad).pass());
  CHECK_FALSE(reflects_cofibrations(bad));
  CHECK(cofibration_reflection_witness(bad));
  CHECK_FALSE(cof_ho_equivalence(bad));
}

TEST_CASE("homotopy cocartesian squares") {
  PointedSets p = pointed_sets({0, 1});
  const FinCategory& c = p.w.cat;
  const int z = 0, one = 1;
  const int in = c.hom(z, one)[0];
  const int collapse = c.hom(one, z)[0];
  // P0 -> P1 pushed out along P0 -> P0
  Square sq{in, c.id(z), c.id(one), in};
  CHECK(homotopy_cocartesian_check(p.w, sq));
  CHECK(homotopy_cocartesian_check_generic(p.w, sq));
  // identities
  Square ids{c.id(one), c.id(one), c.id(one), c.id(one)};
  CHECK(homotopy_cocartesian_check(p.w, ids));
  CHECK(homotopy_cocartesian_check_generic(p.w, ids));
  // P0 -> P1, P0 -> P1 into P1: commutes but the pushout is P2 (absent), so not a pushout
  Square no{in, in, c.id(one), c.id(one)};
  CHECK_FALSE(homotopy_cocartesian_check(p.w, no));
  CHECK_FALSE(homotopy_cocartesian_check_generic(p.w, no));
  // P1 -> P1 -> P0 collapse square with a marked leg is a pushout
  Square q{c.id(one), collapse, collapse, c.id(z)};
  CHECK(homotopy_cocartesian_check(p.w, q) == homotopy_cocartesian_check_generic(p.w, q));
}
