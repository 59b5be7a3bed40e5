#include <random>

#include "doctest.h"
#include "qcat/errors.hpp"
#include "qcat/join.hpp"
#include "qcat/product.hpp"
#include "qcat/standard.hpp"

using namespace qcat;

namespace {

std::vector<std::size_t> counts(const SimplicialSet& x) {
  std::vector<std::size_t> c;
  for (int n = 0; n <= x.top_dim(); ++n) c.push_back(x.count(n));
  return c;
}

}  // namespace

TEST_CASE("degenerate vertex normal form") {
  SSetPtr p = delta(0);
  Simplex v = Simplex::generator(0, 0);
  Simplex s0v = degeneracy(v, 0);
  CHECK(s0v.dim() == 1);
  CHECK(s0v.degens == std::vector<int>{0});
  // d1 s1 s0 v = s0 v
  Simplex w = degeneracy(s0v, 1);
  CHECK(p->face(w, 1) == s0v);
  CHECK(degeneracy(degeneracy(v, 0), 0) == w);
}

TEST_CASE("face of a nondegenerate edge is the stored face") {
  SSetPtr d1 = delta(1);
  Simplex e = Simplex::generator(1, 0);
  CHECK(d1->face(e, 0) == Simplex::generator(0, 1));
  CHECK(d1->face(e, 1) == Simplex::generator(0, 0));
}

TEST_CASE("standard objects") {
  CHECK(counts(*spine(2)) == std::vector<std::size_t>{3, 2});
  CHECK(counts(*delta(0)) == std::vector<std::size_t>{1});
  CHECK(counts(*boundary(2)) == std::vector<std::size_t>{3, 3});
  CHECK(counts(*delta(3)) == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(counts(*horn(3, 1)) == std::vector<std::size_t>{4, 6, 3});
  CHECK_THROWS_AS(horn(2, 3), InvalidInput);
  for (auto x : {delta(4), boundary(4), horn(4, 2), spine(4)}) CHECK_FALSE(x->check_identities());
}

TEST_CASE("simplicial identities on random degenerate simplices") {
  std::mt19937 rng(7);
  SSetPtr x = delta(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> pick_dim(0, 3);
    int gd = pick_dim(rng);
    std::uniform_int_distribution<int> pick_gen(0, static_cast<int>(x->count(gd)) - 1);
    Simplex s = Simplex::generator(gd, pick_gen(rng));
    int extra = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int t = 0; t < extra; ++t) s = degeneracy(s, std::uniform_int_distribution<int>(0, s.dim())(rng));
    const int n = s.dim();
    if (n < 2) continue;
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) CHECK(x->face(x->face(s, j), i) == x->face(x->face(s, i), j - 1));
    for (int j = 0; j <= n; ++j) {
      Simplex sj = degeneracy(s, j);
      CHECK(x->face(sj, j) == s);
      CHECK(x->face(sj, j + 1) == s);
    }
    // act agrees with iterated faces
    std::vector<int> theta{0, n};
    Simplex e = s;
    for (int k = n - 1; k >= 1; --k) e = x->face(e, k);
    CHECK(x->act(s, theta) == e);
    CHECK(degenerate_by(s, surj::identity(n)) == s);
  }
}

TEST_CASE("products") {
  ProductSet p = product(delta(1), delta(1));
  CHECK(counts(*p.sset) == std::vector<std::size_t>{4, 5, 2});
  CHECK_FALSE(p.sset->check_identities());
  CHECK_FALSE(p.pr1.check());
  CHECK_FALSE(p.pr2.check());
  ProductSet q = product(spine(2), delta(1));
  CHECK(q.sset->count(2) == 4);
  ProductSet r = product(delta(2), delta(0));
  CHECK(counts(*r.sset) == counts(*delta(2)));
  ProductSet s = product(delta(2), delta(2));
  CHECK(s.sset->count(4) == 6);
  CHECK_FALSE(s.sset->check_identities());
}

TEST_CASE("joins") {
  JoinSet j = join(delta(1), delta(2));
  CHECK(counts(*j.sset) == counts(*delta(4)));
  CHECK_FALSE(j.sset->check_identities());
  JoinSet b = join(boundary(1), boundary(1));
  CHECK(counts(*b.sset) == std::vector<std::size_t>{4, 4});
  JoinSet e = join(empty_set(), delta(2));
  CHECK(counts(*e.sset) == counts(*delta(2)));
  for (int n = 0; n <= j.sset->top_dim(); ++n)
    for (int g = 0; g < static_cast<int>(j.sset->count(n)); ++g) {
      Simplex s = Simplex::generator(n, g);
      auto [a, c] = j.split(s);
      CHECK(j.pair(a, c) == s);
      for (int k = 0; k <= n; ++k) {
        Simplex d = degeneracy(s, k);
        auto [a2, c2] = j.split(d);
        CHECK(j.pair(a2, c2) == d);
      }
    }
}
