#include "doctest.h"
#include "qcat/homotopy.hpp"
#include "qcat/iso.hpp"
#include "qcat/s_construction.hpp"
#include "qcat/standard.hpp"

using namespace qcat;

namespace {

// Independent count of [2]-complexes in pointed sets: a cofibration A -> B
// (an injection) and a quotient B -> Q with the same cofiber. For a skeleton
// with objects P0..Pk the quotient object is forced and the quotient map is
// any surjection collapsing exactly the image of A, up to a bijection of Q.
int count_two_complexes(const PointedSets& p) {
  const FinCategory& c = p.w.cat;
  int total = 0;
  for (int f = 0; f < c.morphisms(); ++f) {
    if (!p.w.is_cof(f)) continue;
    const auto& inj = p.maps[f];
    const int b = c.tgt(f);
    for (int q = 0; q < c.morphisms(); ++q) {
      if (c.src(q) != b) continue;
      const auto& map = p.maps[q];
      const int bs = p.sizes[b];
      std::vector<char> in_image(bs + 1, 0);
      for (std::size_t i = 1; i < inj.size(); ++i) in_image[inj[i]] = 1;
      bool ok = p.sizes[c.tgt(q)] == bs - static_cast<int>(inj.size() - 1);
      std::vector<char> hit(p.sizes[c.tgt(q)] + 1, 0);
      for (int t = 1; t <= bs && ok; ++t) {
        if (in_image[t]) ok = map[t] == 0;
        else if (map[t] == 0 || hit[map[t]]) ok = false;
        else hit[map[t]] = 1;
      }
      total += ok;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("arrow posets and restricted grids") {
  CHECK(ar_poset(1).elements.size() == 3);
  ArPoset a2 = ar_poset(2);
  CHECK(a2.elements.size() == 6);
  CHECK_FALSE(a2.cat.validate());
  SSetPtr g2 = restricted_grid(2);
  CHECK(g2->count(0) == 6);
  CHECK(g2->count(2) == 4);
  CHECK(g2->count(3) == 0);
  CHECK(iso_check(restricted_grid(1), nerve(ar_poset(1).cat, 3).sset));
  CHECK(restricted_grid(3)->count(2) == 9);
}

TEST_CASE("low levels of S") {
  PointedSets p = pointed_sets({0, 1, 2});
  SLevel s0 = s_n(p.w, 0);
  CHECK(s0.w.cat.objects() == 1);
  SLevel s1 = s_n(p.w, 1);
  CHECK(s1.w.cat.objects() == p.w.cat.objects());
  CHECK(iso_check(nerve(s1.w.cat, 3).sset, nerve(p.w.cat, 3).sset));
  SLevel s2 = s_n(p.w, 2);
  CHECK(s2.w.cat.objects() == count_two_complexes(p));
  CHECK(s2.w.cat.objects() == 9);
  CHECK_FALSE(level_witness(p.w, s2));
  CHECK(validate_waldhausen(s2.w).pass());
  WaldhausenData t = trivial_waldhausen();
  for (int n = 0; n <= 3; ++n) CHECK(s_n(t, n).w.cat.morphisms() == 1);
}

TEST_CASE("F levels") {
  PointedSets p = pointed_sets({0, 1, 2});
  CHECK(f_n(p.w, 0).w.cat.objects() == 3);
  int cofs = 0;
  for (char c : p.w.cof) cofs += c;
  CHECK(f_n(p.w, 1).w.cat.objects() == cofs);
  CHECK(iso_check(nerve(s_bar_n(p.w, 1).w.cat, 3).sset, nerve(s_n(p.w, 1).w.cat, 3).sset));
}

TEST_CASE("simplicial identities of S") {
  PointedSets p = pointed_sets({0, 1, 2});
  std::vector<SLevel> s;
  for (int n = 0; n <= 3; ++n) s.push_back(s_n(p.w, n));
  // all monotone maps [m] -> [n] for m, n <= 3
  auto monotone = [](int m, int n) {
    std::vector<Monotone> out;
    Monotone t(m + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int lo) {
      if (i > m) {
        out.push_back(t);
        return;
      }
      for (int v = lo; v <= n; ++v) {
        t[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 0);
    return out;
  };
  int checked = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const Monotone& th : monotone(a, b))
          for (const Monotone& ph : monotone(c, a)) {
            // (th o ph)^* = ph^* o th^*
            Functor lhs = s_simplicial_map(s[b], s[c], surj::compose(th, ph));
            Functor rhs = compose(s_simplicial_map(s[a], s[c], ph), s_simplicial_map(s[b], s[a], th));
            CHECK(lhs == rhs);
            ++checked;
          }
  CHECK(checked > 100);
  Functor id = s_simplicial_map(s[2], s[2], {0, 1, 2});
  for (int x = 0; x < s[2].w.cat.objects(); ++x) CHECK(id.on_objects[x] == x);
  // d0 : S_2 -> S_1 keeps the quotient A(1,2); s0 : S_1 -> S_2 puts the zero row first
  Functor d0 = s_simplicial_map(s[2], s[1], {1, 2});
  Functor s0 = s_simplicial_map(s[1], s[2], {0, 0, 1});
  for (int x = 0; x < s[2].w.cat.objects(); ++x)
    CHECK(s[1].diagrams[d0.on_objects[x]].on_objects[1] == s[2].diagrams[x].on_objects[s[2].ar.index(1, 2)]);
  for (int x = 0; x < s[1].w.cat.objects(); ++x)
    CHECK(s[2].diagrams[s0.on_objects[x]].on_objects[s[2].ar.index(0, 1)] == p.w.zero);
}

TEST_CASE("equivalences of S_2 are levelwise") {
  PointedSets p = pointed_sets({0, 1, 2});
  SLevel s2 = s_n(p.w, 2);
  for (int m = 0; m < s2.w.cat.morphisms(); ++m) {
    bool levelwise = true, first_row = true;
    for (int x = 0; x < s2.ar.cat.objects(); ++x) levelwise = levelwise && p.w.cat.is_iso(s2.components[m][x]);
    for (int j = 0; j <= 2; ++j) first_row = first_row && p.w.cat.is_iso(s2.components[m][s2.ar.index(0, j)]);
    CHECK(s2.w.cat.is_iso(m) == levelwise);
    CHECK(levelwise == first_row);
  }
  CHECK(homotopy_closed(s2.w));
}

TEST_CASE("forgetful maps are equivalences") {
  PointedSets p = pointed_sets({0, 1, 2});
  for (int n = 1; n <= 2; ++n) {
    ForgetfulReport r = forgetful_maps(p.w, n);
    CHECK(r.pass());
  }
  CHECK(forgetful_maps(trivial_waldhausen(), 2).pass());
}

TEST_CASE("corrupted pushout witness is caught") {
  PointedSets p = pointed_sets({0, 1, 2});
  SLevel s2 = s_n(p.w, 2);
  // send A(0,2) -> A(1,2) somewhere else so the square stops being a pushout
  for (Functor& a : s2.diagrams) {
    const int m = s2.ar.arrow(0, 2, 1, 2);
    const int src = p.w.cat.src(a.on_morphisms[m]), tgt = p.w.cat.tgt(a.on_morphisms[m]);
    for (int alt : p.w.cat.hom(src, tgt))
      if (alt != a.on_morphisms[m] && p.w.cat.src(alt) == src && tgt != p.w.zero) {
        a.on_morphisms[m] = alt;
        auto w = level_witness(p.w, s2);
        CHECK(w);
        return;
      }
  }
  FAIL("no corruption found");
}

TEST_CASE("generic S agrees with the functor-category construction") {
  PointedSets p = pointed_sets({0, 1});
  HomSet g1 = s_n_generic(p.w, 1, 2);
  CHECK(iso_check(g1.sset, nerve(s_n(p.w, 1).w.cat, 2).sset, 2));
  HomSet g2 = s_n_generic(p.w, 2, 1);
  CHECK(iso_check(g2.sset, nerve(s_n(p.w, 2).w.cat, 1).sset, 1));
  HomSet t = s_n_generic(trivial_waldhausen(), 2, 2);
  CHECK(t.sset->count(0) == 1);
  CHECK(t.sset->count(1) == 0);
}
