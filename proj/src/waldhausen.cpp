#include "qcat/waldhausen.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcat/errors.hpp"
#include "qcat/join_slice.hpp"
#include "qcat/standard.hpp"

namespace qcat {

namespace {

const FinCategory& span_shape() {
  static const FinCategory j = poset(3, [](int a, int b) { return a == b || a == 0; }, {"a", "b", "c"});
  return j;
}

Functor span_diagram(const FinCategory& c, const Span& s) {
  const FinCategory& j = span_shape();
  Functor d;
  d.on_objects = {c.src(s.f), c.tgt(s.f), c.tgt(s.g)};
  d.on_morphisms.assign(j.morphisms(), -1);
  for (int x = 0; x < 3; ++x) d.on_morphisms[j.id(x)] = c.id(d.on_objects[x]);
  d.on_morphisms[*j.find_morphism("a<b")] = s.f;
  d.on_morphisms[*j.find_morphism("a<c")] = s.g;
  return d;
}

std::string mname(const FinCategory& c, int f) { return c.morphism(f).name; }

}  // namespace

std::vector<Cocone> pushouts(const FinCategory& c, const Span& s) {
  return colimits(span_shape(), c, span_diagram(c, s));
}

WaldhausenReport validate_waldhausen(const WaldhausenData& w) {
  WaldhausenReport r;
  const FinCategory& c = w.cat;
  if (static_cast<int>(w.cof.size()) != c.morphisms()) {
    r.fatal.push_back("cofibration flags do not match the morphisms");
    return r;
  }
  for (int x = 0; x < c.objects(); ++x)
    if (c.hom(w.zero, x).size() != 1 || c.hom(x, w.zero).size() != 1)
      r.fatal.push_back("(ii) " + c.object_name(w.zero) + " is not a zero object (at " + c.object_name(x) + ")");
  // (i): a subcategory containing the equivalences
  for (int f = 0; f < c.morphisms(); ++f) {
    if (c.is_iso(f) && !w.is_cof(f)) r.fatal.push_back("(i) equivalence " + mname(c, f) + " is not a cofibration");
    for (int g : c.out(c.tgt(f)))
      if (w.is_cof(f) && w.is_cof(g) && !w.is_cof(c.compose(g, f)))
        r.fatal.push_back("(i) composite " + mname(c, g) + " o " + mname(c, f) + " is not a cofibration");
  }
  // (ii)
  for (int x = 0; x < c.objects(); ++x)
    for (int f : c.hom(w.zero, x))
      if (!w.is_cof(f)) r.fatal.push_back("(ii) " + mname(c, f) + " out of the zero object is not a cofibration");
  // (iii)
  for (int g = 0; g < c.morphisms(); ++g) {
    if (!w.is_cof(g)) continue;
    for (int f : c.out(c.src(g))) {
      ++r.spans;
      const auto po = pushouts(c, {f, g});
      const std::string span = mname(c, f) + " <- . -> " + mname(c, g);
      if (po.empty()) {
        (w.bounded ? r.local : r.fatal).push_back("(iii) no pushout of " + span);
        continue;
      }
      for (const Cocone& k : po)
        if (!w.is_cof(k.legs[1])) {
          r.fatal.push_back("(iii) pushout leg " + mname(c, k.legs[1]) + " of " + span + " is not a cofibration");
          break;
        }
    }
  }
  return r;
}

CofData cof_subquasicategory(const WaldhausenData& w, int d) {
  CofData out;
  out.nerve = w.nerve(d);
  const Nerve& n = out.nerve;
  out.co = one_full(n.sset, [&](const Simplex& e) {
    if (!e.nondegenerate()) return true;
    return w.is_cof(n.strings[1][e.gen][0]);
  });
  out.ho = ho_category(n.sset);
  out.ho_co = ho_category(out.co.sset);
  for (int x = 0; x < out.ho_co.cat.objects(); ++x)
    out.inclusion.on_objects.push_back(out.co.inclusion(Simplex::generator(0, x)).gen);
  for (int m = 0; m < out.ho_co.cat.morphisms(); ++m) {
    const Simplex& e = out.ho_co.index->at(1, out.ho_co.representative[m]);
    out.inclusion.on_morphisms.push_back(out.ho.class_of(out.co.inclusion(e)));
  }
  return out;
}

bool factorization_by_definition(const WaldhausenData& w) {
  const FinCategory& c = w.cat;
  for (int f = 0; f < c.morphisms(); ++f) {
    bool found = false;
    for (int cf : c.out(c.src(f))) {
      if (!w.is_cof(cf)) continue;
      for (int e : c.hom(c.tgt(cf), c.tgt(f)))
        if (c.is_iso(e) && c.compose(e, cf) == f) found = true;
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

bool admits_factorization(const WaldhausenData& w) {
  bool all = true;
  for (char m : w.cof) all = all && m;
  if (all != factorization_by_definition(w))
    throw std::logic_error("admits_factorization: the two tests disagree");
  return all;
}

bool homotopy_closed(const WaldhausenData& w) {
  const FinCategory& c = w.cat;
  for (int r = 0; r < c.morphisms(); ++r)
    for (int u = 0; u < c.morphisms(); ++u) {
      if (!c.is_iso(u) || c.tgt(u) != c.src(r)) continue;
      for (int v = 0; v < c.morphisms(); ++v) {
        if (!c.is_iso(v) || c.src(v) != c.tgt(r)) continue;
        const int r2 = c.compose(v, c.compose(r, u));
        if (w.is_cof(r) != w.is_cof(r2)) return false;
      }
    }
  return true;
}

bool six_for_two(const FinCategory& c) {
  for (int u = 0; u < c.morphisms(); ++u)
    for (int v : c.out(c.tgt(u)))
      for (int w : c.out(c.tgt(v))) {
        if (!c.is_iso(c.compose(v, u)) || !c.is_iso(c.compose(w, v))) continue;
        if (!c.is_iso(u) || !c.is_iso(v) || !c.is_iso(w) || !c.is_iso(c.compose(w, c.compose(v, u)))) return false;
      }
  return true;
}

ExactReport validate_exact(const ExactFunctorData& g) {
  ExactReport r;
  const FinCategory& a = g.source.cat;
  const FinCategory& b = g.target.cat;
  if (auto err = check_functor(a, b, g.f)) {
    r.fatal.push_back("not a functor: " + *err);
    return r;
  }
  if (g.f.on_objects[g.source.zero] != g.target.zero) r.fatal.push_back("zero object is not preserved");
  for (int f = 0; f < a.morphisms(); ++f)
    if (g.source.is_cof(f) && !g.target.is_cof(g.f.on_morphisms[f]))
      r.fatal.push_back("cofibration " + mname(a, f) + " is sent to a non-cofibration");
  for (int c = 0; c < a.morphisms(); ++c) {
    if (!g.source.is_cof(c)) continue;
    for (int f : a.out(a.src(c)))
      for (const Cocone& k : pushouts(a, {f, c})) {
        const Span image{g.f.on_morphisms[f], g.f.on_morphisms[c]};
        const auto po = pushouts(b, image);
        const std::string what = mname(a, f) + " <- . -> " + mname(a, c);
        if (po.empty()) {
          (g.target.bounded ? r.local : r.fatal).push_back("image of the pushout of " + what + " has no pushout");
          continue;
        }
        // the image cocone is colimiting iff it differs from a pushout by an iso
        const int apex = g.f.on_objects[k.apex];
        const int l1 = g.f.on_morphisms[k.legs[1]], l2 = g.f.on_morphisms[k.legs[2]];
        bool ok = false;
        for (int u : b.hom(po[0].apex, apex))
          if (b.is_iso(u) && b.compose(u, po[0].legs[1]) == l1 && b.compose(u, po[0].legs[2]) == l2) ok = true;
        if (!ok) r.fatal.push_back("pushout of " + what + " is not preserved");
      }
  }
  return r;
}

std::optional<std::string> cofibration_reflection_witness(const ExactFunctorData& g) {
  for (int f = 0; f < g.source.cat.morphisms(); ++f)
    if (!g.source.is_cof(f) && g.target.is_cof(g.f.on_morphisms[f]))
      return "non-cofibration " + mname(g.source.cat, f) + " is sent to the cofibration " +
             mname(g.target.cat, g.f.on_morphisms[f]);
  return std::nullopt;
}

bool reflects_cofibrations(const ExactFunctorData& g) { return !cofibration_reflection_witness(g); }

CofCategory cof_category(const WaldhausenData& w) {
  CofCategory out;
  const FinCategory& c = w.cat;
  for (int x = 0; x < c.objects(); ++x) out.cat.add_object(c.object_name(x));
  std::vector<int> to_sub(c.morphisms(), -1);
  out.in_c.assign(out.cat.morphisms(), -1);
  for (int x = 0; x < c.objects(); ++x) {
    to_sub[c.id(x)] = out.cat.id(x);
    out.in_c[out.cat.id(x)] = c.id(x);
  }
  for (int f = 0; f < c.morphisms(); ++f)
    if (w.is_cof(f) && !c.is_identity(f)) {
      to_sub[f] = out.cat.add_morphism(c.src(f), c.tgt(f), c.morphism(f).name);
      out.in_c.push_back(f);
    }
  out.cat.fill_compose([&](int g, int f) {
    const int gf = to_sub[c.compose(out.in_c[g], out.in_c[f])];
    if (gf < 0) throw InvalidInput("cofibrations are not closed under composition");
    return gf;
  });
  return out;
}

bool cof_ho_equivalence(const ExactFunctorData& g) {
  CofCategory a = cof_category(g.source), b = cof_category(g.target);
  std::map<int, int> b_of;
  for (int m = 0; m < b.cat.morphisms(); ++m) b_of[b.in_c[m]] = m;
  Functor r;
  r.on_objects = g.f.on_objects;
  for (int m = 0; m < a.cat.morphisms(); ++m) {
    auto it = b_of.find(g.f.on_morphisms[a.in_c[m]]);
    if (it == b_of.end()) return false;
    r.on_morphisms.push_back(it->second);
  }
  return is_equivalence(a.cat, b.cat, r);
}

bool ho_equivalence(const ExactFunctorData& g) { return is_equivalence(g.source.cat, g.target.cat, g.f); }

bool homotopy_cocartesian_check(const WaldhausenData& w, const Square& s) {
  const FinCategory& c = w.cat;
  if (c.compose(s.right, s.top) != c.compose(s.bottom, s.left)) return false;
  if (!w.is_cof(s.top) && !w.is_cof(s.left)) return false;
  for (const Cocone& k : pushouts(c, {s.top, s.left}))
    if (k.apex == c.tgt(s.right) && k.legs[1] == s.right && k.legs[2] == s.bottom) return true;
  return false;
}

bool homotopy_cocartesian_check_generic(const WaldhausenData& w, const Square& s, std::size_t budget) {
  const FinCategory& c = w.cat;
  if (c.compose(s.right, s.top) != c.compose(s.bottom, s.left)) return false;
  if (!w.is_cof(s.top) && !w.is_cof(s.left)) return false;
  Nerve n = w.nerve(6);
  auto h = horn(2, 0);
  SimplicialMap a{h, n.sset, {}};
  a.assign.push_back({Simplex::generator(0, c.src(s.top)), Simplex::generator(0, c.tgt(s.top)),
                      Simplex::generator(0, c.tgt(s.left))});
  a.assign.push_back({n.edge(c, s.top), n.edge(c, s.left)});
  JoinSet cone = join(h, delta(0));
  const Simplex pt = Simplex::generator(0, 0);
  const Simplex b_pt = cone.pair(Simplex::generator(0, 1), pt), c_pt = cone.pair(Simplex::generator(0, 2), pt);
  for (const CoconeData& k : colimiting_cocones(a, 2, budget))
    if (k.extension(cone.pair(std::nullopt, pt)) == Simplex::generator(0, c.tgt(s.right)) &&
        k.extension(b_pt) == n.edge(c, s.right) && k.extension(c_pt) == n.edge(c, s.bottom))
      return true;
  return false;
}

PointedSets pointed_sets(const std::vector<int>& sizes, bool mark_all) {
  PointedSets out;
  out.sizes = sizes;
  FinCategory& c = out.w.cat;
  std::map<std::string, int> count_of_size;
  for (int s : sizes) {
    std::string name = "P" + std::to_string(s);
    if (count_of_size[name]++) name += std::string(count_of_size[name] - 1, '\'');
    c.add_object(name);
  }
  const int no = static_cast<int>(sizes.size());
  out.maps.resize(c.morphisms());
  for (int x = 0; x < no; ++x) {
    out.maps[c.id(x)].resize(sizes[x] + 1);
    for (int i = 0; i <= sizes[x]; ++i) out.maps[c.id(x)][i] = i;
  }
  std::map<std::tuple<int, int, std::vector<int>>, int> by_map;
  for (int x = 0; x < no; ++x) by_map[{x, x, out.maps[c.id(x)]}] = c.id(x);
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y) {
      std::vector<int> f(sizes[x] + 1, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i > sizes[x]) {
          if (x == y && by_map.count({x, y, f})) return;
          std::string name = c.object_name(x) + ">" + c.object_name(y) + ":";
          for (int t = 1; t <= sizes[x]; ++t) name += std::to_string(f[t]);
          const int m = c.add_morphism(x, y, name);
          out.maps.push_back(f);
          by_map[{x, y, f}] = m;
          return;
        }
        for (int v = 0; v <= sizes[y]; ++v) {
          f[i] = v;
          rec(i + 1);
        }
      };
      rec(1);
    }
  c.fill_compose([&](int g, int f) {
    std::vector<int> gf(out.maps[f].size());
    for (std::size_t i = 0; i < gf.size(); ++i) gf[i] = out.maps[g][out.maps[f][i]];
    return by_map.at({c.src(f), c.tgt(g), gf});
  });
  out.w.zero = 0;
  for (int x = 0; x < no; ++x)
    if (sizes[x] == 0) {
      out.w.zero = x;
      break;
    }
  out.w.cof.assign(c.morphisms(), 0);
  for (int m = 0; m < c.morphisms(); ++m) {
    const auto& f = out.maps[m];
    std::set<int> image;
    bool inj = true;
    for (std::size_t i = 1; i < f.size(); ++i) inj = inj && f[i] != 0 && image.insert(f[i]).second;
    out.w.cof[m] = mark_all || inj;
  }
  out.w.bounded = true;
  int top = 0;
  for (int s : sizes) top = std::max(top, s);
  out.w.universe = "pointed finite sets with at most " + std::to_string(top) + " non-base points";
  return out;
}

WaldhausenData trivial_waldhausen() {
  WaldhausenData w;
  w.cat.add_object("0");
  w.cof = {1};
  w.universe = "one object";
  return w;
}

ExactFunctorData skeleton_inclusion(const std::vector<int>& target_sizes) {
  PointedSets a = pointed_sets({0, 1, 2});
  PointedSets b = pointed_sets(target_sizes);
  ExactFunctorData g{a.w, b.w, {}};
  for (int x = 0; x < a.w.cat.objects(); ++x) g.f.on_objects.push_back(x);
  for (int m = 0; m < a.w.cat.morphisms(); ++m) {
    const FinCategory& c = a.w.cat;
    const int s = c.src(m), t = c.tgt(m);
    int found = -1;
    for (int n : b.w.cat.hom(s, t))
      if (b.maps[n] == a.maps[m]) found = n;
    g.f.on_morphisms.push_back(found);
  }
  return g;
}

ExactFunctorData non_reflecting_control() {
  PointedSets a = pointed_sets({0, 1, 2});
  PointedSets b = pointed_sets({0, 1, 2}, true);
  ExactFunctorData g{a.w, b.w, {}};
  for (int x = 0; x < a.w.cat.objects(); ++x) g.f.on_objects.push_back(x);
  for (int m = 0; m < a.w.cat.morphisms(); ++m) g.f.on_morphisms.push_back(m);
  return g;
}

ExactFunctorData identity_exact(const WaldhausenData& w) {
  ExactFunctorData g{w, w, {}};
  for (int x = 0; x < w.cat.objects(); ++x) g.f.on_objects.push_back(x);
  for (int m = 0; m < w.cat.morphisms(); ++m) g.f.on_morphisms.push_back(m);
  return g;
}

}  // namespace qcat
