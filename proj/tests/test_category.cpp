#include <random>
#include <set>

#include "doctest.h"
#include "qcat/category.hpp"
#include "qcat/errors.hpp"
#include "qcat/horn.hpp"
#include "qcat/homotopy.hpp"
#include "qcat/standard.hpp"

using namespace qcat;

namespace {

// tau_1 N C = C: the class map f -> [f] is a bijection preserving composition.
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

FinCategory idempotent_monoid() { return monoid({{0, 1}, {1, 1}}, {"1", "e"}); }

}  // namespace

TEST_CASE("random categories are valid") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    FinCategory c = random_category(rng, 4, 12);
    CHECK_FALSE(c.validate());
  }
}

TEST_CASE("nerve of [2] is Delta[2]") {
  Nerve n = nerve(ordinal(2), 3);
  CHECK(n.sset->complete());
  CHECK(n.sset->count(0) == 3);
  CHECK(n.sset->count(1) == 3);
  CHECK(n.sset->count(2) == 1);
  CHECK(n.sset->count(3) == 0);
  CHECK_FALSE(n.sset->check_identities());
}

TEST_CASE("nerve of the idempotent monoid") {
  FinCategory m = idempotent_monoid();
  Nerve n = nerve(m, 2);
  CHECK(n.sset->count(1) == 1);
  CHECK(n.sset->count(2) == 1);
  CHECK_FALSE(n.sset->complete());
  CHECK_FALSE(n.sset->check_identities());
}

TEST_CASE("nerve identities and string round trip on random categories") {
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    FinCategory c = random_category(rng, 4, 10);
    Nerve n = nerve(c, 3);
    CHECK_FALSE(n.sset->check_identities());
    for (int d = 1; d <= 3; ++d)
      for (const Simplex& s : n.sset->simplices(d)) CHECK(n.simplex_of(c, n.string_of(c, s)) == s);
  }
}

TEST_CASE("tau1 of a nerve recovers the category") {
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) CHECK(tau1_recovers(random_category(rng, 4, 12)));
}

TEST_CASE("inner horns in nerves fill uniquely through dimension 4") {
  std::mt19937 rng(9);
  for (int t = 0; t < 6; ++t) {
    FinCategory c = random_category(rng, 3, 6);
    Nerve n = nerve(c, 4);
    SimplexIndex idx(n.sset, 4);
    HornCheck h = horn_fill_class_check(idx, HornClass::Inner, 4);
    CHECK(h.pass);
  }
}

TEST_CASE("Lambda^1[2] in the boundary of Delta[2] has no filler") {
  SSetPtr b = boundary(2);
  SimplexIndex idx(b, 2);
  Subobject h = horn_in(2, 1);
  SimplicialMap m{h.sset, b, {}};
  m.assign.resize(2);
  for (int v = 0; v < 3; ++v) m.assign[0].push_back(Simplex::generator(0, v));
  for (int e = 0; e < static_cast<int>(h.sset->count(1)); ++e)
    m.assign[1].push_back(*b->find(h.sset->name(1, e)));
  CHECK_FALSE(m.check());
  CHECK_FALSE(inner_horn_filler(idx, m, 2, 1).has_value());
  CHECK_THROWS_AS(ho_category(b), NotAQuasicategory);
}

TEST_CASE("degenerate horn has a degenerate filler") {
  SSetPtr p = delta(1);
  SimplexIndex idx(p, 2);
  Subobject h = horn_in(2, 1);
  SimplicialMap m{h.sset, p, {}};
  m.assign.resize(2);
  for (int v = 0; v < 3; ++v) m.assign[0].push_back(Simplex::generator(0, 0));
  for (int e = 0; e < 2; ++e) m.assign[1].push_back(degeneracy(Simplex::generator(0, 0), 0));
  auto f = inner_horn_filler(idx, m, 2, 1);
  REQUIRE(f);
  CHECK(f->gdim == 0);
}

TEST_CASE("homotopy category of Delta[1] with two parallel edges glued") {
  SimplicialSet x;
  x.add(0, "a");
  x.add(0, "b");
  x.add(1, "f", {Simplex::generator(0, 1), Simplex::generator(0, 0)});
  x.add(1, "g", {Simplex::generator(0, 1), Simplex::generator(0, 0)});
  // (s0 b, g, f)
  x.add(2, "h", {degeneracy(Simplex::generator(0, 1), 0), Simplex::generator(1, 1), Simplex::generator(1, 0)});
  x.set_bound(2, true);
  CHECK_FALSE(x.check_identities());
  SSetPtr p = share(std::move(x));
  HoCategory ho = ho_category(p);
  CHECK(ho.cat.morphisms() == 3);
  CHECK(homotopic_edges(p, Simplex::generator(1, 0), Simplex::generator(1, 1)));
  CHECK(ho_category(delta(0)).cat.morphisms() == 1);
}

TEST_CASE("equivalences in nerves are isomorphisms and the core is the maximal Kan complex") {
  // an isomorphic pair a <-> b, both mapping to t
  FinCategory c;
  c.add_object("a");
  c.add_object("b");
  c.add_object("t");
  const int f = c.add_morphism(0, 1, "f");
  const int g = c.add_morphism(1, 0, "g");
  const int u = c.add_morphism(0, 2, "u");
  const int v = c.add_morphism(1, 2, "v");
  c.set_compose(g, f, c.id(0));
  c.set_compose(f, g, c.id(1));
  c.set_compose(v, f, u);
  c.set_compose(u, g, v);
  REQUIRE_FALSE(c.validate());
  Nerve n = nerve(c, 3);
  HoCategory ho = ho_category(n.sset);
  for (int m = 0; m < c.morphisms(); ++m) CHECK(ho.is_equivalence(n.edge(c, m)) == c.is_iso(m));
  Subobject k = maximal_kan(n.sset, ho);
  Core cr = core(c);
  Nerve nk = nerve(cr.cat, 3);
  for (int d = 0; d <= 3; ++d) CHECK(k.sset->count(d) == nk.sset->count(d));
}
