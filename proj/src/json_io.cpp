#include "qcat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace qcat {

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at_key(const std::string& at, const std::string& key) { return at + "/" + escape(key); }
std::string at_index(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw SchemaError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at_key(at, key), "missing field");
  return *it;
}

std::string as_string(const Json& j, const std::string& at) {
  if (!j.is_string()) throw SchemaError(at, "expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
  return j.get<int>();
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

Json simplex_to_json(const SimplicialSet& x, const Simplex& s) {
  if (s.degens.empty()) return x.name(s.gdim, s.gen);
  return Json{{"gen", x.name(s.gdim, s.gen)}, {"degens", s.degens}};
}

Simplex simplex_from_json(const SimplicialSet& x, const Json& j, const std::string& at) {
  std::string name;
  std::vector<int> degens;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else {
    name = as_string(field(j, "gen", at), at_key(at, "gen"));
    if (j.contains("degens")) {
      const Json& d = j["degens"];
      if (!d.is_array()) throw SchemaError(at_key(at, "degens"), "expected an array");
      for (std::size_t i = 0; i < d.size(); ++i) degens.push_back(as_int(d[i], at_index(at_key(at, "degens"), i)));
    }
  }
  auto s = x.find(name);
  if (!s) throw SchemaError(at, "unknown generator '" + name + "'");
  const int len = static_cast<int>(degens.size());
  for (int i = 0; i < len; ++i) {
    if (degens[i] < 0 || degens[i] > s->gdim + (len - 1 - i) || (i > 0 && degens[i] >= degens[i - 1]))
      throw SchemaError(at_key(at, "degens"), "degeneracy word is not in normal form");
  }
  s->degens = degens;
  return *s;
}

Json sset_to_json(const SimplicialSet& x) {
  Json gens = Json::array(), faces = Json::object();
  for (int n = 0; n <= x.top_dim(); ++n) {
    Json row = Json::array();
    for (int g = 0; g < static_cast<int>(x.count(n)); ++g) {
      row.push_back(x.name(n, g));
      if (n == 0) continue;
      Json f = Json::array();
      for (const Simplex& s : x.faces(n, g)) f.push_back(simplex_to_json(x, s));
      faces[x.name(n, g)] = f;
    }
    gens.push_back(row);
  }
  return Json{{"bound", x.bound()}, {"complete", x.complete()}, {"generators", gens}, {"faces", faces}};
}

SSetPtr sset_from_json(const Json& j, const std::string& at) {
  const int bound = as_int(field(j, "bound", at), at_key(at, "bound"));
  const bool complete = j.contains("complete") ? j["complete"].get<bool>() : false;
  const Json& gens = field(j, "generators", at);
  if (!gens.is_array()) throw SchemaError(at_key(at, "generators"), "expected an array of arrays");
  const Json empty = Json::object();
  const Json& faces = j.contains("faces") ? j["faces"] : empty;
  if (!faces.is_object()) throw SchemaError(at_key(at, "faces"), "expected an object");
  SimplicialSet x;
  std::set<std::string> seen;
  for (std::size_t n = 0; n < gens.size(); ++n) {
    const std::string rowp = at_index(at_key(at, "generators"), n);
    if (!gens[n].is_array()) throw SchemaError(rowp, "expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens[n].size(); ++i) names.push_back(as_string(gens[n][i], at_index(rowp, i)));
    std::sort(names.begin(), names.end());
    for (const std::string& name : names) {
      if (!seen.insert(name).second) throw SchemaError(rowp, "duplicate generator '" + name + "'");
      std::vector<Simplex> fs;
      if (n > 0) {
        const std::string fp = at_key(at_key(at, "faces"), name);
        if (!faces.contains(name)) throw SchemaError(fp, "missing faces");
        const Json& f = faces[name];
        if (!f.is_array() || f.size() != n + 1)
          throw SchemaError(fp, "a generator of dimension " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                    " faces");
        for (std::size_t i = 0; i <= n; ++i) {
          Simplex s = simplex_from_json(x, f[i], at_index(fp, i));
          if (s.dim() != static_cast<int>(n) - 1)
            throw SchemaError(at_index(fp, i), "face has dimension " + std::to_string(s.dim()) + ", expected " +
                                                   std::to_string(n - 1));
          fs.push_back(s);
        }
      }
      x.add(static_cast<int>(n), name, fs);
      if (n < 2) continue;
      const Simplex g = x.find(name).value();
      for (int b = 1; b <= static_cast<int>(n); ++b)
        for (int a = 0; a < b; ++a)
          if (x.face(x.face(g, b), a) != x.face(x.face(g, a), b - 1))
            throw SchemaError(at_key(at_key(at, "faces"), name), "simplicial identity d" + std::to_string(a) + " d" +
                                                                     std::to_string(b) + " = d" + std::to_string(b - 1) +
                                                                     " d" + std::to_string(a) + " fails");
    }
  }
  for (const auto& [name, f] : faces.items())
    if (!seen.count(name)) throw SchemaError(at_key(at_key(at, "faces"), name), "faces of an unknown generator");
  x.set_bound(bound, complete);
  if (auto err = x.check_identities()) throw SchemaError(at_key(at, "faces"), "simplicial identity fails: " + *err);
  return share(std::move(x));
}

Json canonical_sset_json(const Json& j) {
  Json out = j;
  if (!out.contains("complete")) out["complete"] = false;
  for (auto& row : out["generators"]) std::sort(row.begin(), row.end());
  if (!out.contains("faces")) out["faces"] = Json::object();
  for (auto& [name, fs] : out["faces"].items())
    for (auto& f : fs)
      if (f.is_object() && (!f.contains("degens") || f["degens"].empty())) f = f["gen"];
  return out;
}

Json map_to_json(const SimplicialMap& m) {
  Json assign = Json::object();
  for (int n = 0; n < static_cast<int>(m.assign.size()); ++n)
    for (int g = 0; g < static_cast<int>(m.assign[n].size()); ++g)
      assign[m.source->name(n, g)] = simplex_to_json(*m.target, m.assign[n][g]);
  return Json{{"source", sset_to_json(*m.source)}, {"target", sset_to_json(*m.target)}, {"assign", assign}};
}

SimplicialMap map_from_json(const Json& j, const std::string& at) {
  SimplicialMap m;
  m.source = sset_from_json(field(j, "source", at), at_key(at, "source"));
  m.target = sset_from_json(field(j, "target", at), at_key(at, "target"));
  const Json& assign = field(j, "assign", at);
  const std::string ap = at_key(at, "assign");
  m.assign.resize(std::max(0, m.source->top_dim() + 1));
  for (int n = 0; n <= m.source->top_dim(); ++n)
    for (int g = 0; g < static_cast<int>(m.source->count(n)); ++g) {
      const std::string& name = m.source->name(n, g);
      if (!assign.contains(name)) throw SchemaError(at_key(ap, name), "generator not assigned");
      Simplex s = simplex_from_json(*m.target, assign[name], at_key(ap, name));
      if (s.dim() != n) throw SchemaError(at_key(ap, name), "image has the wrong dimension");
      m.assign[n].push_back(s);
    }
  if (auto err = m.check()) throw SchemaError(ap, "not a simplicial map: " + *err);
  return m;
}

Json category_to_json(const FinCategory& c) {
  Json objects = Json::array(), homs = Json::object(), compose = Json::object();
  for (int x = 0; x < c.objects(); ++x) objects.push_back(c.object_name(x));
  for (int f = 0; f < c.morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    homs[c.morphism(f).name] = {c.object_name(c.src(f)), c.object_name(c.tgt(f))};
  }
  for (int g = 0; g < c.morphisms(); ++g)
    for (int f = 0; f < c.morphisms(); ++f)
      if (!c.is_identity(f) && !c.is_identity(g) && c.tgt(f) == c.src(g))
        compose[c.morphism(g).name][c.morphism(f).name] = c.morphism(c.compose(g, f)).name;
  return Json{{"objects", objects}, {"homs", homs}, {"compose", compose}};
}

FinCategory category_from_json(const Json& j, const std::string& at) {
  FinCategory c;
  const Json& objects = field(j, "objects", at);
  if (!objects.is_array()) throw SchemaError(at_key(at, "objects"), "expected an array");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string name = as_string(objects[i], at_index(at_key(at, "objects"), i));
    if (c.find_object(name)) throw SchemaError(at_index(at_key(at, "objects"), i), "duplicate object");
    c.add_object(name);
  }
  const Json empty = Json::object();
  const Json& homs = j.contains("homs") ? j["homs"] : empty;
  const std::string hp = at_key(at, "homs");
  for (const auto& [name, ends] : homs.items()) {
    const std::string p = at_key(hp, name);
    if (!ends.is_array() || ends.size() != 2) throw SchemaError(p, "expected [source, target]");
    auto s = c.find_object(as_string(ends[0], at_index(p, 0)));
    auto t = c.find_object(as_string(ends[1], at_index(p, 1)));
    if (!s || !t) throw SchemaError(p, "unknown object");
    if (c.find_morphism(name)) throw SchemaError(p, "duplicate morphism name");
    c.add_morphism(*s, *t, name);
  }
  const Json& comp = j.contains("compose") ? j["compose"] : empty;
  const std::string cp = at_key(at, "compose");
  c.fill_compose([&](int g, int f) {
    const std::string& gn = c.morphism(g).name;
    const std::string& fn = c.morphism(f).name;
    const std::string p = at_key(at_key(cp, gn), fn);
    if (!comp.contains(gn) || !comp[gn].contains(fn)) throw SchemaError(p, "composite missing");
    auto gf = c.find_morphism(as_string(comp[gn][fn], p));
    if (!gf) throw SchemaError(p, "unknown morphism");
    if (c.src(*gf) != c.src(f) || c.tgt(*gf) != c.tgt(g)) throw SchemaError(p, "composite has the wrong endpoints");
    return *gf;
  });
  if (auto err = c.validate()) throw SchemaError(cp, *err);
  return c;
}

Json functor_to_json(const FinCategory& c, const FinCategory& d, const Functor& f) {
  Json objects = Json::object(), morphisms = Json::object();
  for (int x = 0; x < c.objects(); ++x) objects[c.object_name(x)] = d.object_name(f.on_objects[x]);
  for (int m = 0; m < c.morphisms(); ++m)
    if (!c.is_identity(m)) morphisms[c.morphism(m).name] = d.morphism(f.on_morphisms[m]).name;
  return Json{{"objects", objects}, {"morphisms", morphisms}};
}

Functor functor_from_json(const FinCategory& c, const FinCategory& d, const Json& j, const std::string& at) {
  Functor f;
  const Json& objects = field(j, "objects", at);
  const std::string op = at_key(at, "objects");
  for (int x = 0; x < c.objects(); ++x) {
    const std::string& name = c.object_name(x);
    if (!objects.contains(name)) throw SchemaError(at_key(op, name), "object not mapped");
    auto y = d.find_object(as_string(objects[name], at_key(op, name)));
    if (!y) throw SchemaError(at_key(op, name), "unknown target object");
    f.on_objects.push_back(*y);
  }
  const Json empty = Json::object();
  const Json& mors = j.contains("morphisms") ? j["morphisms"] : empty;
  const std::string mp = at_key(at, "morphisms");
  for (int m = 0; m < c.morphisms(); ++m) {
    if (c.is_identity(m)) {
      f.on_morphisms.push_back(d.id(f.on_objects[c.src(m)]));
      continue;
    }
    const std::string& name = c.morphism(m).name;
    if (!mors.contains(name)) throw SchemaError(at_key(mp, name), "morphism not mapped");
    auto g = d.find_morphism(as_string(mors[name], at_key(mp, name)));
    if (!g) throw SchemaError(at_key(mp, name), "unknown target morphism");
    f.on_morphisms.push_back(*g);
  }
  if (auto err = check_functor(c, d, f)) throw SchemaError(at, "not a functor: " + *err);
  return f;
}

Json waldhausen_to_json(const WaldhausenData& w) {
  Json cofs = Json::array();
  for (int f = 0; f < w.cat.morphisms(); ++f)
    if (w.is_cof(f)) cofs.push_back(w.cat.morphism(f).name);
  std::sort(cofs.begin(), cofs.end());
  return Json{{"category", category_to_json(w.cat)},
              {"zero", w.cat.object_name(w.zero)},
              {"cofibrations", cofs},
              {"universe", {{"bounded", w.bounded}, {"name", w.universe}}}};
}

WaldhausenData waldhausen_from_json(const Json& j, const std::string& at) {
  if (j.is_object() && j.contains("builtin")) {
    const std::string b = as_string(j["builtin"], at_key(at, "builtin"));
    if (b == "trivial") return trivial_waldhausen();
    if (b == "pointed_sets") {
      const Json& s = field(j, "sizes", at);
      std::vector<int> sizes;
      for (std::size_t i = 0; i < s.size(); ++i) sizes.push_back(as_int(s[i], at_index(at_key(at, "sizes"), i)));
      return pointed_sets(sizes, j.value("mark_all", false)).w;
    }
    throw SchemaError(at_key(at, "builtin"), "unknown builtin '" + b + "'");
  }
  WaldhausenData w;
  w.cat = category_from_json(field(j, "category", at), at_key(at, "category"));
  const std::string zp = at_key(at, "zero");
  auto z = w.cat.find_object(as_string(field(j, "zero", at), zp));
  if (!z) throw SchemaError(zp, "unknown object");
  w.zero = *z;
  w.cof.assign(w.cat.morphisms(), 0);
  const Json& cofs = field(j, "cofibrations", at);
  const std::string cp = at_key(at, "cofibrations");
  if (!cofs.is_array()) throw SchemaError(cp, "expected an array");
  for (std::size_t i = 0; i < cofs.size(); ++i) {
    auto f = w.cat.find_morphism(as_string(cofs[i], at_index(cp, i)));
    if (!f) throw SchemaError(at_index(cp, i), "unknown morphism");
    w.cof[*f] = 1;
  }
  for (int x = 0; x < w.cat.objects(); ++x)
    if (!w.cof[w.cat.id(x)])
      throw SchemaError(cp, "axiom (i): the degenerate edge " + w.cat.morphism(w.cat.id(x)).name + " is not marked");
  if (j.contains("universe")) {
    const Json& u = j["universe"];
    w.bounded = u.value("bounded", false);
    w.universe = u.value("name", std::string());
  }
  return w;
}

Json exact_to_json(const ExactFunctorData& g) {
  return Json{{"source", waldhausen_to_json(g.source)},
              {"target", waldhausen_to_json(g.target)},
              {"functor", functor_to_json(g.source.cat, g.target.cat, g.f)}};
}

ExactFunctorData exact_from_json(const Json& j, const std::string& at) {
  if (j.is_object() && j.contains("builtin")) {
    const std::string b = as_string(j["builtin"], at_key(at, "builtin"));
    if (b == "non_reflecting_control") return non_reflecting_control();
    if (b == "skeleton_inclusion") {
      const Json& s = field(j, "sizes", at);
      std::vector<int> sizes;
      for (std::size_t i = 0; i < s.size(); ++i) sizes.push_back(as_int(s[i], at_index(at_key(at, "sizes"), i)));
      return skeleton_inclusion(sizes);
    }
    if (b == "identity") return identity_exact(waldhausen_from_json(field(j, "waldhausen", at), at_key(at, "waldhausen")));
    throw SchemaError(at_key(at, "builtin"), "unknown builtin '" + b + "'");
  }
  ExactFunctorData g;
  g.source = waldhausen_from_json(field(j, "source", at), at_key(at, "source"));
  g.target = waldhausen_from_json(field(j, "target", at), at_key(at, "target"));
  g.f = functor_from_json(g.source.cat, g.target.cat, field(j, "functor", at), at_key(at, "functor"));
  return g;
}

}  // namespace qcat
