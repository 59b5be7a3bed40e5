#include "qcat/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcat/errors.hpp"

namespace qcat {

int FinCategory::add_object(std::string name) {
  if (by_name_.count(name)) throw InvalidInput("duplicate object '" + name + "'");
  const int x = objects();
  by_name_[name] = x;
  obj_names_.push_back(name);
  out_.emplace_back();
  ids_.push_back(-1);
  ids_[x] = add_morphism(x, x, "id_" + name);
  return x;
}

int FinCategory::add_morphism(int src, int tgt, std::string name) {
  if (src < 0 || src >= objects() || tgt < 0 || tgt >= objects()) throw InvalidInput("morphism endpoints out of range");
  if (mor_by_name_.count(name)) throw InvalidInput("duplicate morphism '" + name + "'");
  const int f = morphisms();
  mor_by_name_[name] = f;
  mors_.push_back({src, tgt, std::move(name)});
  out_[src].push_back(f);
  for (auto& row : table_) row.push_back(-1);
  table_.emplace_back(morphisms(), -1);
  hom_.clear();
  return f;
}

void FinCategory::set_compose(int g, int f, int gf) {
  if (mors_[f].tgt != mors_[g].src) throw InvalidInput("set_compose: not composable");
  if (mors_[gf].src != mors_[f].src || mors_[gf].tgt != mors_[g].tgt)
    throw InvalidInput("set_compose: composite has the wrong endpoints");
  table_[g][f] = gf;
}

void FinCategory::fill_compose(const std::function<int(int, int)>& comp) {
  for (int g = 0; g < morphisms(); ++g)
    for (int f = 0; f < morphisms(); ++f)
      if (mors_[f].tgt == mors_[g].src && !is_identity(f) && !is_identity(g)) set_compose(g, f, comp(g, f));
}

int FinCategory::compose(int g, int f) const {
  if (mors_[f].tgt != mors_[g].src) return -1;
  if (is_identity(g)) return f;
  if (is_identity(f)) return g;
  return table_[g][f];
}

const std::vector<int>& FinCategory::hom(int a, int b) const {
  auto it = hom_.find({a, b});
  if (it != hom_.end()) return it->second;
  std::vector<int> h;
  for (int f : out_[a])
    if (mors_[f].tgt == b) h.push_back(f);
  return hom_.emplace(std::make_pair(a, b), std::move(h)).first->second;
}

std::optional<int> FinCategory::find_object(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCategory::find_morphism(const std::string& name) const {
  auto it = mor_by_name_.find(name);
  if (it == mor_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> FinCategory::validate() const {
  const int m = morphisms();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (mors_[f].tgt != mors_[g].src) continue;
      const int gf = compose(g, f);
      if (gf < 0) return "composite " + mors_[g].name + " o " + mors_[f].name + " is undefined";
      if (mors_[gf].src != mors_[f].src || mors_[gf].tgt != mors_[g].tgt)
        return "composite " + mors_[g].name + " o " + mors_[f].name + " has the wrong endpoints";
    }
  for (int h = 0; h < m; ++h)
    for (int g : out_[mors_[h].tgt])
      for (int f : out_[mors_[g].tgt])
        if (compose(f, compose(g, h)) != compose(compose(f, g), h))
          return "associativity fails on " + mors_[f].name + ", " + mors_[g].name + ", " + mors_[h].name;
  return std::nullopt;
}

std::optional<int> FinCategory::inverse(int f) const {
  for (int g : hom(mors_[f].tgt, mors_[f].src))
    if (compose(g, f) == id(mors_[f].src) && compose(f, g) == id(mors_[f].tgt)) return g;
  return std::nullopt;
}

bool FinCategory::operator==(const FinCategory& o) const {
  if (objects() != o.objects() || morphisms() != o.morphisms()) return false;
  for (int f = 0; f < morphisms(); ++f)
    if (mors_[f].src != o.mors_[f].src || mors_[f].tgt != o.mors_[f].tgt) return false;
  for (int g = 0; g < morphisms(); ++g)
    for (int f = 0; f < morphisms(); ++f)
      if (compose(g, f) != o.compose(g, f)) return false;
  return ids_ == o.ids_;
}

std::optional<std::string> check_functor(const FinCategory& c, const FinCategory& d, const Functor& f) {
  if (static_cast<int>(f.on_objects.size()) != c.objects() || static_cast<int>(f.on_morphisms.size()) != c.morphisms())
    return "functor data has the wrong size";
  for (int m = 0; m < c.morphisms(); ++m) {
    const int fm = f.on_morphisms[m];
    if (fm < 0 || fm >= d.morphisms()) return "morphism image out of range";
    if (d.src(fm) != f.on_objects[c.src(m)] || d.tgt(fm) != f.on_objects[c.tgt(m)])
      return "image of " + c.morphism(m).name + " has the wrong endpoints";
  }
  for (int x = 0; x < c.objects(); ++x)
    if (f.on_morphisms[c.id(x)] != d.id(f.on_objects[x])) return "identity not preserved";
  for (int g = 0; g < c.morphisms(); ++g)
    for (int h : c.out(c.tgt(g)))
      if (f.on_morphisms[c.compose(h, g)] != d.compose(f.on_morphisms[h], f.on_morphisms[g]))
        return "composition not preserved";
  return std::nullopt;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor out;
  for (int x : f.on_objects) out.on_objects.push_back(g.on_objects[x]);
  for (int m : f.on_morphisms) out.on_morphisms.push_back(g.on_morphisms[m]);
  return out;
}

std::vector<Functor> all_functors(const FinCategory& c, const FinCategory& d,
                                  const std::function<bool(const Functor&)>& accept, std::size_t budget) {
  std::vector<Functor> out;
  Functor f;
  f.on_objects.assign(c.objects(), -1);
  f.on_morphisms.assign(c.morphisms(), -1);
  std::vector<int> order;  // non-identity morphisms
  for (int m = 0; m < c.morphisms(); ++m)
    if (!c.is_identity(m)) order.push_back(m);
  std::size_t tried = 0;
  std::function<void(std::size_t)> mors = [&](std::size_t pos) {
    if (pos == order.size()) {
      if (!accept || accept(f)) out.push_back(f);
      return;
    }
    const int m = order[pos];
    for (int cand : d.hom(f.on_objects[c.src(m)], f.on_objects[c.tgt(m)])) {
      if (++tried > budget) throw BudgetExceeded("functor enumeration", tried);
      f.on_morphisms[m] = cand;
      bool ok = true;
      // Check every composite among assigned morphisms involving m.
      for (std::size_t q = 0; q <= pos && ok; ++q) {
        const int h = order[q];
        for (auto [g, k] : {std::pair{m, h}, std::pair{h, m}}) {
          if (c.tgt(k) != c.src(g)) continue;
          const int gk = c.compose(g, k);
          const int img = f.on_morphisms[gk];
          if (img < 0) continue;
          if (img != d.compose(f.on_morphisms[g], f.on_morphisms[k])) ok = false;
        }
      }
      // composites landing on m
      for (std::size_t q = 0; q < pos && ok; ++q)
        for (std::size_t r = 0; r < pos && ok; ++r) {
          const int g = order[q], k = order[r];
          if (c.tgt(k) == c.src(g) && c.compose(g, k) == m &&
              d.compose(f.on_morphisms[g], f.on_morphisms[k]) != cand)
            ok = false;
        }
      if (ok) mors(pos + 1);
    }
    f.on_morphisms[m] = -1;
  };
  std::function<void(int)> objs = [&](int x) {
    if (x == c.objects()) {
      for (int y = 0; y < c.objects(); ++y) f.on_morphisms[c.id(y)] = d.id(f.on_objects[y]);
      mors(0);
      return;
    }
    for (int y = 0; y < d.objects(); ++y) {
      if (++tried > budget) throw BudgetExceeded("functor enumeration", tried);
      f.on_objects[x] = y;
      objs(x + 1);
    }
  };
  objs(0);
  return out;
}

std::vector<std::vector<int>> natural_transformations(const FinCategory& c, const FinCategory& d, const Functor& f,
                                                      const Functor& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> comp(c.objects(), -1);
  std::function<void(int)> rec = [&](int x) {
    if (x == c.objects()) {
      out.push_back(comp);
      return;
    }
    for (int cand : d.hom(f.on_objects[x], g.on_objects[x])) {
      comp[x] = cand;
      bool ok = true;
      for (int m = 0; m < c.morphisms() && ok; ++m) {
        const int a = c.src(m), b = c.tgt(m);
        if (a > x || b > x) continue;
        if (a != x && b != x) continue;
        if (d.compose(g.on_morphisms[m], comp[a]) != d.compose(comp[b], f.on_morphisms[m])) ok = false;
      }
      if (ok) rec(x + 1);
    }
    comp[x] = -1;
  };
  rec(0);
  return out;
}

FunctorCategory functor_category(const FinCategory& c, const FinCategory& d, const std::vector<Functor>& functors) {
  FunctorCategory out;
  out.functors = functors;
  for (std::size_t i = 0; i < functors.size(); ++i) out.cat.add_object("F" + std::to_string(i));
  out.components.resize(functors.size());
  std::map<std::vector<int>, int> by_comp;  // key: src, tgt, components
  for (std::size_t i = 0; i < functors.size(); ++i) {
    std::vector<int> idc;
    for (int x = 0; x < c.objects(); ++x) idc.push_back(d.id(functors[i].on_objects[x]));
    out.components[out.cat.id(static_cast<int>(i))] = idc;
    std::vector<int> key{static_cast<int>(i), static_cast<int>(i)};
    key.insert(key.end(), idc.begin(), idc.end());
    by_comp[key] = out.cat.id(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < functors.size(); ++i)
    for (std::size_t j = 0; j < functors.size(); ++j)
      for (const auto& t : natural_transformations(c, d, functors[i], functors[j])) {
        std::vector<int> key{static_cast<int>(i), static_cast<int>(j)};
        key.insert(key.end(), t.begin(), t.end());
        if (by_comp.count(key)) continue;
        const int m = out.cat.add_morphism(static_cast<int>(i), static_cast<int>(j),
                                           "t" + std::to_string(out.cat.morphisms()));
        if (static_cast<int>(out.components.size()) <= m) out.components.resize(m + 1);
        out.components[m] = t;
        by_comp[key] = m;
      }
  out.cat.fill_compose([&](int g, int f) {
    std::vector<int> key{out.cat.src(f), out.cat.tgt(g)};
    for (int x = 0; x < c.objects(); ++x) key.push_back(d.compose(out.components[g][x], out.components[f][x]));
    return by_comp.at(key);
  });
  return out;
}

bool fully_faithful(const FinCategory& c, const FinCategory& d, const Functor& f) {
  for (int a = 0; a < c.objects(); ++a)
    for (int b = 0; b < c.objects(); ++b) {
      std::set<int> img;
      for (int m : c.hom(a, b)) img.insert(f.on_morphisms[m]);
      if (img.size() != c.hom(a, b).size()) return false;
      if (img.size() != d.hom(f.on_objects[a], f.on_objects[b]).size()) return false;
    }
  return true;
}

bool essentially_surjective(const FinCategory& c, const FinCategory& d, const Functor& f) {
  for (int y = 0; y < d.objects(); ++y) {
    bool hit = false;
    for (int x = 0; x < c.objects() && !hit; ++x)
      for (int m : d.hom(f.on_objects[x], y))
        if (d.is_iso(m)) {
          hit = true;
          break;
        }
    if (!hit) return false;
  }
  return true;
}

bool is_equivalence(const FinCategory& c, const FinCategory& d, const Functor& f) {
  return fully_faithful(c, d, f) && essentially_surjective(c, d, f);
}

FinCategory poset(int n, const std::function<bool(int, int)>& leq, const std::vector<std::string>& names) {
  FinCategory c;
  for (int i = 0; i < n; ++i) c.add_object(names.empty() ? std::to_string(i) : names[i]);
  std::map<std::pair<int, int>, int> arrow;
  for (int i = 0; i < n; ++i) arrow[{i, i}] = c.id(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq(i, j)) {
        if (leq(j, i)) throw InvalidInput("poset: relation is not antisymmetric");
        arrow[{i, j}] = c.add_morphism(i, j, c.object_name(i) + "<" + c.object_name(j));
      }
  c.fill_compose([&](int g, int f) {
    auto it = arrow.find({c.src(f), c.tgt(g)});
    if (it == arrow.end()) throw InvalidInput("poset: relation is not transitive");
    return it->second;
  });
  return c;
}

FinCategory ordinal(int n) {
  return poset(n + 1, [](int i, int j) { return i <= j; });
}

FinCategory monoid(const std::vector<std::vector<int>>& table, const std::vector<std::string>& names) {
  FinCategory c;
  c.add_object("*");
  const int n = static_cast<int>(table.size());
  std::vector<int> mor(n);
  mor[0] = c.id(0);
  for (int i = 1; i < n; ++i) mor[i] = c.add_morphism(0, 0, names.empty() ? "m" + std::to_string(i) : names[i]);
  std::map<int, int> elem;
  for (int i = 0; i < n; ++i) elem[mor[i]] = i;
  // table[a][b] = a * b, read as a o b
  c.fill_compose([&](int g, int f) { return mor[table[elem[g]][elem[f]]]; });
  return c;
}

FinCategory product_category(const FinCategory& a, const FinCategory& b) {
  FinCategory c;
  for (int x = 0; x < a.objects(); ++x)
    for (int y = 0; y < b.objects(); ++y) c.add_object("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  std::map<std::pair<int, int>, int> mor;
  for (int f = 0; f < a.morphisms(); ++f)
    for (int g = 0; g < b.morphisms(); ++g) {
      const int s = a.src(f) * b.objects() + b.src(g), t = a.tgt(f) * b.objects() + b.tgt(g);
      if (a.is_identity(f) && b.is_identity(g)) {
        mor[{f, g}] = c.id(s);
        continue;
      }
      mor[{f, g}] = c.add_morphism(s, t, "(" + a.morphism(f).name + "," + b.morphism(g).name + ")");
    }
  std::vector<std::pair<int, int>> parts(c.morphisms());
  for (auto& [k, v] : mor) parts[v] = k;
  c.fill_compose([&](int g, int f) {
    return mor.at({a.compose(parts[g].first, parts[f].first), b.compose(parts[g].second, parts[f].second)});
  });
  return c;
}

FinCategory join_category(const FinCategory& a, const FinCategory& b) {
  FinCategory c;
  const int na = a.objects();
  for (int x = 0; x < na; ++x) c.add_object("L" + a.object_name(x));
  for (int y = 0; y < b.objects(); ++y) c.add_object("R" + b.object_name(y));
  // kind: 0 = from a, 1 = from b, 2 = cross
  struct Info {
    int kind, m, s, t;
  };
  std::vector<Info> info(c.morphisms());
  for (int x = 0; x < na; ++x) info[c.id(x)] = {0, a.id(x), x, x};
  for (int y = 0; y < b.objects(); ++y) info[c.id(na + y)] = {1, b.id(y), na + y, na + y};
  std::map<int, int> from_a, from_b;
  std::map<std::pair<int, int>, int> cross;
  for (int x = 0; x < na; ++x) from_a[a.id(x)] = c.id(x);
  for (int y = 0; y < b.objects(); ++y) from_b[b.id(y)] = c.id(na + y);
  for (int f = 0; f < a.morphisms(); ++f)
    if (!a.is_identity(f)) {
      from_a[f] = c.add_morphism(a.src(f), a.tgt(f), "L" + a.morphism(f).name);
      info.push_back({0, f, a.src(f), a.tgt(f)});
    }
  for (int g = 0; g < b.morphisms(); ++g)
    if (!b.is_identity(g)) {
      from_b[g] = c.add_morphism(na + b.src(g), na + b.tgt(g), "R" + b.morphism(g).name);
      info.push_back({1, g, na + b.src(g), na + b.tgt(g)});
    }
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < b.objects(); ++y) {
      cross[{x, na + y}] = c.add_morphism(x, na + y, a.object_name(x) + "->" + b.object_name(y));
      info.push_back({2, -1, x, na + y});
    }
  c.fill_compose([&](int g, int f) {
    const Info& ig = info[g];
    const Info& inf = info[f];
    if (ig.kind == 0 && inf.kind == 0) return from_a.at(a.compose(ig.m, inf.m));
    if (ig.kind == 1 && inf.kind == 1) return from_b.at(b.compose(ig.m, inf.m));
    return cross.at({inf.s, ig.t});
  });
  return c;
}

SliceCategory over_category(const FinCategory& c, int obj) {
  SliceCategory out;
  std::vector<int> objs;
  for (int f = 0; f < c.morphisms(); ++f)
    if (c.tgt(f) == obj) {
      objs.push_back(f);
      out.cat.add_object(c.morphism(f).name);
      out.forget.on_objects.push_back(c.src(f));
    }
  std::map<std::tuple<int, int, int>, int> mor;
  std::vector<int> under(0);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    mor[{static_cast<int>(i), static_cast<int>(i), c.id(c.src(objs[i]))}] = out.cat.id(static_cast<int>(i));
  }
  std::vector<int> base(out.cat.morphisms(), -1);
  for (std::size_t i = 0; i < objs.size(); ++i) base[out.cat.id(static_cast<int>(i))] = c.id(c.src(objs[i]));
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (int h : c.hom(c.src(objs[i]), c.src(objs[j]))) {
        if (c.compose(objs[j], h) != objs[i]) continue;
        if (i == j && h == c.id(c.src(objs[i]))) continue;
        const int m = out.cat.add_morphism(static_cast<int>(i), static_cast<int>(j),
                                           c.morphism(h).name + "/" + std::to_string(i) + "," + std::to_string(j));
        mor[{static_cast<int>(i), static_cast<int>(j), h}] = m;
        base.push_back(h);
      }
  out.cat.fill_compose([&](int g, int f) {
    return mor.at({out.cat.src(f), out.cat.tgt(g), c.compose(base[g], base[f])});
  });
  out.forget.on_morphisms = base;
  return out;
}

Core core(const FinCategory& c) {
  Core out;
  for (int x = 0; x < c.objects(); ++x) out.cat.add_object(c.object_name(x));
  out.morphism_in_c.resize(c.objects());
  std::map<int, int> back;
  for (int x = 0; x < c.objects(); ++x) {
    out.morphism_in_c[out.cat.id(x)] = c.id(x);
    back[c.id(x)] = out.cat.id(x);
  }
  for (int f = 0; f < c.morphisms(); ++f)
    if (!c.is_identity(f) && c.is_iso(f)) {
      back[f] = out.cat.add_morphism(c.src(f), c.tgt(f), c.morphism(f).name);
      out.morphism_in_c.push_back(f);
    }
  out.cat.fill_compose([&](int g, int f) { return back.at(c.compose(out.morphism_in_c[g], out.morphism_in_c[f])); });
  return out;
}

std::vector<Cocone> cocones(const FinCategory& j, const FinCategory& c, const Functor& diagram) {
  std::vector<Cocone> out;
  for (int apex = 0; apex < c.objects(); ++apex) {
    std::vector<int> legs(j.objects(), -1);
    std::function<void(int)> rec = [&](int x) {
      if (x == j.objects()) {
        out.push_back({apex, legs});
        return;
      }
      for (int cand : c.hom(diagram.on_objects[x], apex)) {
        legs[x] = cand;
        bool ok = true;
        for (int m = 0; m < j.morphisms() && ok; ++m) {
          const int a = j.src(m), b = j.tgt(m);
          if (a > x || b > x || (a != x && b != x)) continue;
          if (c.compose(legs[b], diagram.on_morphisms[m]) != legs[a]) ok = false;
        }
        if (ok) rec(x + 1);
      }
      legs[x] = -1;
    };
    rec(0);
  }
  return out;
}

std::vector<Cocone> colimits(const FinCategory& j, const FinCategory& c, const Functor& diagram) {
  const auto all = cocones(j, c, diagram);
  std::vector<Cocone> out;
  for (const Cocone& k : all) {
    bool initial = true;
    for (const Cocone& o : all) {
      int factorizations = 0;
      for (int u : c.hom(k.apex, o.apex)) {
        bool ok = true;
        for (int x = 0; x < j.objects() && ok; ++x) ok = c.compose(u, k.legs[x]) == o.legs[x];
        factorizations += ok;
      }
      if (factorizations != 1) {
        initial = false;
        break;
      }
    }
    if (initial) out.push_back(k);
  }
  return out;
}

std::vector<int> initial_objects(const FinCategory& c) {
  std::vector<int> out;
  for (int x = 0; x < c.objects(); ++x) {
    bool ok = true;
    for (int y = 0; y < c.objects() && ok; ++y) ok = c.hom(x, y).size() == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

FinCategory random_poset(std::mt19937& rng, int max_objects) {
  const int n = std::uniform_int_distribution<int>(1, max_objects)(rng);
  // random DAG on a random linear order, then transitive closure
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) le[i][i] = 1;
  std::bernoulli_distribution coin(0.45);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) le[perm[a]][perm[b]] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = 1;
  return poset(n, [&](int i, int j) { return le[i][j] != 0; });
}

namespace {

// Transformation monoid generated by random self-maps of {0, .., k-1}.
FinCategory random_transformation_monoid(std::mt19937& rng, int max_morphisms) {
  const int k = std::uniform_int_distribution<int>(2, 3)(rng);
  std::vector<int> idv(k);
  std::iota(idv.begin(), idv.end(), 0);
  std::vector<std::vector<int>> elems{idv};
  std::uniform_int_distribution<int> val(0, k - 1);
  const int gens = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int g = 0; g < gens; ++g) {
    std::vector<int> t(k);
    for (int& v : t) v = val(rng);
    if (std::find(elems.begin(), elems.end(), t) == elems.end()) elems.push_back(t);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [p, q] : {std::pair{i, j}, std::pair{j, i}}) {
        std::vector<int> t(k);
        for (int x = 0; x < k; ++x) t[x] = elems[p][elems[q][x]];
        if (std::find(elems.begin(), elems.end(), t) == elems.end()) {
          elems.push_back(t);
          if (static_cast<int>(elems.size()) > max_morphisms) return random_transformation_monoid(rng, max_morphisms);
        }
      }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::vector<int> t(k);
      for (int x = 0; x < k; ++x) t[x] = elems[p][elems[q][x]];
      table[p][q] = static_cast<int>(std::find(elems.begin(), elems.end(), t) - elems.begin());
    }
  return monoid(table);
}

}  // namespace

FinCategory random_category(std::mt19937& rng, int max_objects, int max_morphisms) {
  for (;;) {
    const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
    FinCategory c;
    if (kind == 0) {
      c = random_poset(rng, max_objects);
    } else if (kind == 1) {
      c = random_transformation_monoid(rng, max_morphisms);
    } else if (kind == 2) {
      FinCategory p = random_poset(rng, std::max(1, max_objects / 2));
      FinCategory m = random_transformation_monoid(rng, 4);
      c = product_category(p, m);
    } else {
      FinCategory p = random_poset(rng, std::max(1, max_objects / 2));
      FinCategory q = random_poset(rng, std::max(1, max_objects / 2));
      c = join_category(p, q);
    }
    if (c.objects() <= max_objects && c.morphisms() <= max_morphisms) return c;
  }
}

Simplex Nerve::simplex_of(const FinCategory& c, const std::vector<int>& string) const {
  std::vector<int> nondeg;
  std::vector<int> degens;
  for (int p = static_cast<int>(string.size()) - 1; p >= 0; --p)
    if (c.is_identity(string[p])) degens.push_back(p);
  for (int f : string)
    if (!c.is_identity(f)) nondeg.push_back(f);
  Simplex base;
  if (nondeg.empty()) {
    base = Simplex::generator(0, c.src(string.front()));
  } else {
    auto it = gen_of_string.find(nondeg);
    if (it == gen_of_string.end()) throw BoundError("nerve: string longer than the computed dimension");
    base = Simplex::generator(static_cast<int>(nondeg.size()), it->second);
  }
  base.degens = degens;
  return base;
}

std::vector<int> Nerve::string_of(const FinCategory& c, const Simplex& s) const {
  const int n = s.dim();
  std::vector<int> out;
  for (int t = 1; t <= n; ++t) {
    const int a = object_of(c, s, t - 1), b = object_of(c, s, t);
    if (s.gdim == 0) {
      out.push_back(c.id(a));
      continue;
    }
    const Monotone sigma = surj::from_degens(s.degens, s.gdim);
    if (sigma[t] == sigma[t - 1])
      out.push_back(c.id(b));
    else
      out.push_back(strings[s.gdim][s.gen][sigma[t] - 1]);
  }
  return out;
}

int Nerve::object_of(const FinCategory& c, const Simplex& s, int i) const {
  if (s.gdim == 0) return s.gen;
  const auto& str = strings[s.gdim][s.gen];
  const int v = surj::from_degens(s.degens, s.gdim)[i];
  return v == 0 ? c.src(str[0]) : c.tgt(str[v - 1]);
}

Nerve nerve(const FinCategory& c, int d) {
  Nerve out;
  SimplicialSet x;
  out.strings.resize(1);
  for (int o = 0; o < c.objects(); ++o) {
    x.add(0, c.object_name(o));
    out.strings[0].push_back({});
  }
  std::vector<int> nonid;
  for (int f = 0; f < c.morphisms(); ++f)
    if (!c.is_identity(f)) nonid.push_back(f);
  std::vector<std::vector<int>> level;
  for (int f : nonid) level.push_back({f});
  bool complete = true;
  for (int n = 1; !level.empty(); ++n) {
    if (n > d) {
      complete = false;
      break;
    }
    out.strings.emplace_back();
    for (const auto& s : level) {
      std::vector<Simplex> faces;
      for (int i = 0; i <= n; ++i) {
        if (n == 1) {
          faces.push_back(Simplex::generator(0, i == 0 ? c.tgt(s[0]) : c.src(s[0])));
          continue;
        }
        std::vector<int> f;
        if (i == 0) {
          f.assign(s.begin() + 1, s.end());
        } else if (i == n) {
          f.assign(s.begin(), s.end() - 1);
        } else {
          f.assign(s.begin(), s.begin() + i - 1);
          f.push_back(c.compose(s[i], s[i - 1]));
          f.insert(f.end(), s.begin() + i + 1, s.end());
        }
        faces.push_back(out.simplex_of(c, f));
      }
      std::string name;
      for (std::size_t t = 0; t < s.size(); ++t) name += (t ? "|" : "") + c.morphism(s[t]).name;
      const int g = x.add(n, name, std::move(faces));
      out.gen_of_string[s] = g;
      out.strings[n].push_back(s);
    }
    std::vector<std::vector<int>> next;
    for (const auto& s : level)
      for (int f : c.out(c.tgt(s.back())))
        if (!c.is_identity(f)) {
          auto t = s;
          t.push_back(f);
          next.push_back(std::move(t));
        }
    level = std::move(next);
  }
  x.set_bound(std::max(d, x.top_dim()), complete);
  out.sset = share(std::move(x));
  return out;
}

SimplicialMap nerve_map(const FinCategory& c, const Nerve& nc, const FinCategory& d, const Nerve& nd, const Functor& f) {
  SimplicialMap m{nc.sset, nd.sset, {}};
  m.assign.resize(nc.strings.size());
  for (int o = 0; o < c.objects(); ++o) m.assign[0].push_back(Simplex::generator(0, f.on_objects[o]));
  for (std::size_t n = 1; n < nc.strings.size(); ++n)
    for (const auto& s : nc.strings[n]) {
      std::vector<int> img;
      for (int g : s) img.push_back(f.on_morphisms[g]);
      m.assign[n].push_back(nd.simplex_of(d, img));
    }
  return m;
}

}  // namespace qcat
