#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcat/errors.hpp"
#include "qcat/homology.hpp"
#include "qcat/homotopy.hpp"
#include "qcat/homs.hpp"
#include "qcat/horn.hpp"
#include "qcat/iso.hpp"
#include "qcat/join.hpp"
#include "qcat/join_slice.hpp"
#include "qcat/json_io.hpp"
#include "qcat/ktheory.hpp"
#include "qcat/lifting_checks.hpp"
#include "qcat/s_construction.hpp"
#include "qcat/standard.hpp"
#include "qcat/waldhausen.hpp"

using namespace qcat;

namespace {

enum Exit { kPass = 0, kFinding = 1, kBudget = 2, kInput = 3 };

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  int dim = 2;
  std::size_t budget = 10000000;
  unsigned seed = 0;
  std::string out;
  // command options
  std::string vertex, from, to, side = "under", shape = "prism";
  int n = 1;
  std::vector<int> nbar;
  bool check_assoc = false, canonical = false, generic = false;
};

std::vector<std::string> split(const std::string& s, char c) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == c) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// "delta:n", "boundary:n", "horn:n:k", "spine:n", "ordinal:n" or a JSON file
// holding a simplicial set, a category or Waldhausen data (nerves through dim).
SSetPtr sset_input(const std::string& arg, int dim) {
  auto parts = split(arg, ':');
  if (parts.size() >= 2 && !std::ifstream(arg)) {
    const std::string& k = parts[0];
    const int a = std::stoi(parts[1]);
    if (k == "delta") return delta(a);
    if (k == "boundary") return boundary(a);
    if (k == "spine") return spine(a);
    if (k == "horn" && parts.size() == 3) return horn(a, std::stoi(parts[2]));
    if (k == "ordinal") return nerve(ordinal(a), dim).sset;
    throw InvalidInput("unknown builtin simplicial set '" + arg + "'");
  }
  Json j = load_json(arg);
  if (j.contains("generators")) return sset_from_json(j);
  if (j.contains("homs") || j.contains("objects")) return nerve(category_from_json(j), dim).sset;
  return nerve(waldhausen_from_json(j).cat, dim).sset;
}

int vertex_input(const SimplicialSet& x, const std::string& v) {
  if (auto s = x.find(v); s && s->gdim == 0) return s->gen;
  try {
    const int i = std::stoi(v);
    if (i >= 0 && i < static_cast<int>(x.count(0))) return i;
  } catch (const std::exception&) {
  }
  throw InvalidInput("unknown vertex '" + v + "'");
}

Json counts(const SimplicialSet& x) {
  Json c = Json::array();
  for (int n = 0; n <= x.top_dim(); ++n) c.push_back(x.count(n));
  return c;
}

Json contractible_json(const ContractibleReport& r) {
  return Json{{"verdict", to_string(r.verdict)}, {"bound", r.d}, {"detail", r.detail}};
}

Json comparison_json(const HomotopyComparison& h) {
  return Json{{"pi0_source", h.pi0_source},
              {"pi0_target", h.pi0_target},
              {"pi0_bijection", h.pi0_bijection},
              {"pi1_agree", h.pi1_agree},
              {"detail", h.detail}};
}

Json components_json(const ComponentsReport& c) {
  return Json{{"verdict", outcome_name(c.verdict)},
              {"shape", c.shape},
              {"budget", c.budget},
              {"transformations", c.transformations},
              {"pairs", c.pairs},
              {"witness", c.witness}};
}

Json contractible_or_skip(const SimplicialSet& x, int d) {
  try {
    ContractibleReport k = contractible(x);
    k.d = d;
    return contractible_json(k);
  } catch (const BoundError& e) {
    return Json{{"verdict", "not checked"}, {"bound", d}, {"detail", e.what()}};
  }
}

ExactFunctorData exact_input(const std::string& path) { return exact_from_json(load_json(path)); }

// Each command fills the report and returns its exit code.
int run(const Config& c, Json& r) {
  auto need = [&](std::size_t k) {
    if (c.inputs.size() < k) throw InvalidInput(c.command + ": expected " + std::to_string(k) + " input(s)");
  };
  auto ho_bound = [&] {
    if (c.dim < 2) throw InvalidInput(c.command + ": --dim must be at least 2");
  };

  if (c.command == "validate") {
    need(1);
    Json j = load_json(c.inputs[0]);
    auto is_exact = j.contains("functor") ||
                    (j.contains("builtin") && j["builtin"] != "pointed_sets" && j["builtin"] != "trivial");
    if (is_exact) {
      r["kind"] = "exact_functor";
      ExactReport e = validate_exact(exact_from_json(j));
      r["fatal"] = e.fatal;
      r["pass"] = e.pass();
    } else if (j.contains("cofibrations") || j.contains("builtin")) {
      r["kind"] = "waldhausen";
      WaldhausenReport w = validate_waldhausen(waldhausen_from_json(j));
      r["fatal"] = w.fatal;
      r["local"] = w.local;
      r["spans"] = w.spans;
      r["pass"] = w.pass();
    } else if (j.contains("assign")) {
      r["kind"] = "map";
      map_from_json(j);
      r["pass"] = true;
    } else if (j.contains("homs") || j.contains("objects")) {
      r["kind"] = "category";
      FinCategory cat = category_from_json(j);
      r["objects"] = cat.objects();
      r["morphisms"] = cat.morphisms();
      if (c.canonical) r["canonical"] = category_to_json(cat);
      r["pass"] = true;
    } else {
      r["kind"] = "sset";
      SSetPtr x = sset_from_json(j);
      r["generators"] = counts(*x);
      if (c.canonical) r["canonical"] = sset_to_json(*x);
      const int top = std::min(3, x->complete() ? std::max(x->top_dim() + 1, 2) : x->bound());
      if (top >= 2) {
        HornCheck h = horn_fill_class_check(SimplexIndex(x, top), HornClass::Inner, top);
        r["inner_horns"] = Json{{"through", top}, {"pass", h.pass}, {"horns", h.horns}};
      }
      r["pass"] = true;
    }
    return r["pass"].get<bool>() ? kPass : kFinding;
  }

  if (c.command == "nerve") {
    need(1);
    FinCategory cat = c.inputs[0].rfind("ordinal:", 0) == 0 ? ordinal(std::stoi(c.inputs[0].substr(8)))
                                                            : category_from_json(load_json(c.inputs[0]));
    Nerve nv = nerve(cat, c.dim);
    r["sset"] = sset_to_json(*nv.sset);
    r["generators"] = counts(*nv.sset);
    r["pass"] = true;
    return kPass;
  }

  if (c.command == "tau1") {
    need(1);
    SSetPtr x = sset_input(c.inputs[0], c.dim);
    Tau1Presentation p = tau1_presentation(*x);
    Json gens = Json::array(), rels = Json::array();
    for (auto& [n, s, t] : p.generators) gens.push_back({n, s, t});
    for (auto& [a, b, f] : p.relations) rels.push_back({a, b, f});
    r["objects"] = p.objects;
    r["generators"] = gens;
    r["relations"] = rels;
    r["pass"] = true;
    return kPass;
  }

  if (c.command == "ho") {
    need(1);
    ho_bound();
    SSetPtr x = sset_input(c.inputs[0], c.dim);
    try {
      HoCategory ho = ho_category(x);
      r["category"] = category_to_json(ho.cat);
      Json classes = Json::object();
      for (int g = 0; g < static_cast<int>(x->count(1)); ++g)
        classes[x->name(1, g)] = ho.cat.morphism(ho.class_of(Simplex::generator(1, g))).name;
      r["edge_classes"] = classes;
      r["pass"] = true;
      return kPass;
    } catch (const NotAQuasicategory& e) {
      r["witness"] = e.what();
      r["pass"] = false;
      return kFinding;
    }
  }

  if (c.command == "mapspace") {
    need(1);
    SSetPtr x = sset_input(c.inputs[0], c.dim + 1);
    HomSet h = mapping_space(x, vertex_input(*x, c.from), vertex_input(*x, c.to), c.dim, c.budget);
    r["sset"] = sset_to_json(*h.sset);
    r["generators"] = counts(*h.sset);
    r["attempted"] = h.attempted;
    r["contractible"] = contractible_or_skip(*h.sset, c.dim);
    r["pass"] = true;
    return kPass;
  }

  if (c.command == "join") {
    need(2);
    SSetPtr a = sset_input(c.inputs[0], c.dim), b = sset_input(c.inputs[1], c.dim);
    JoinSet ab = join(a, b);
    r["sset"] = sset_to_json(*ab.sset);
    r["generators"] = counts(*ab.sset);
    bool pass = true;
    if (c.check_assoc) {
      SSetPtr k = c.inputs.size() > 2 ? sset_input(c.inputs[2], c.dim) : b;
      JoinSet left = join(ab.sset, k), right = join(a, join(b, k).sset);
      const bool assoc = iso_check(left.sset, right.sset, -1, c.budget).has_value();
      r["associative"] = assoc;
      pass = assoc;
    }
    r["pass"] = pass;
    return pass ? kPass : kFinding;
  }

  if (c.command == "slice") {
    need(1);
    SSetPtr x = sset_input(c.inputs[0], c.dim + 1);
    const int v = vertex_input(*x, c.vertex);
    SimplicialMap pt{delta(0), x, {{Simplex::generator(0, v)}}};
    SliceSet s = c.side == "over" ? slice_over(pt, c.dim, c.budget) : slice_under(pt, c.dim, c.budget);
    r["side"] = c.side;
    r["sset"] = sset_to_json(*s.sset());
    r["generators"] = counts(*s.sset());
    r["pass"] = true;
    return kPass;
  }

  if (c.command == "overcat") {
    need(1);
    SSetPtr y = sset_input(c.inputs[0], c.dim + 1);
    OverSet o = over_quasicategory(y, vertex_input(*y, c.vertex), c.dim);
    r["sset"] = sset_to_json(*o.sset);
    r["generators"] = counts(*o.sset);
    r["pass"] = true;
    return kPass;
  }

  if (c.command == "comma") {
    need(1);
    SimplicialMap g = map_from_json(load_json(c.inputs[0]));
    PullbackSet p = comma(g, vertex_input(*g.target, c.vertex), c.dim);
    r["sset"] = sset_to_json(*p.sset);
    r["generators"] = counts(*p.sset);
    r["contractible"] = contractible_or_skip(*p.sset, c.dim);
    r["pass"] = true;
    return kPass;
  }

  if (c.command == "contractible") {
    need(1);
    SSetPtr x = sset_input(c.inputs[0], c.dim);
    ContractibleReport k = contractible(*x);
    k.d = c.dim;
    r["contractible"] = contractible_json(k);
    r["pass"] = k.verdict == Verdict::Confirmed;
    return k.verdict == Verdict::Confirmed ? kPass : k.verdict == Verdict::Refuted ? kFinding : kBudget;
  }

  if (c.command == "waldhausen-check") {
    need(1);
    WaldhausenData w = waldhausen_from_json(load_json(c.inputs[0]));
    WaldhausenReport v = validate_waldhausen(w);
    r["fatal"] = v.fatal;
    r["local"] = v.local;
    r["spans"] = v.spans;
    r["bounded"] = w.bounded;
    r["universe"] = w.universe;
    if (v.pass()) {
      r["factorization"] = admits_factorization(w);
      r["homotopy_closed"] = homotopy_closed(w);
      r["six_for_two"] = six_for_two(w.cat);
    }
    r["pass"] = v.pass();
    return v.pass() ? kPass : kFinding;
  }

  if (c.command == "sconstruct") {
    need(1);
    WaldhausenData w = waldhausen_from_json(load_json(c.inputs[0]));
    auto level_json = [&](const SLevel& l) {
      int cofs = 0;
      for (char x : l.w.cof) cofs += x;
      Json diagrams = Json::array();
      for (const Functor& d : l.diagrams) {
        Json obj = Json::object();
        for (int x = 0; x < l.domain.objects(); ++x) obj[l.domain.object_name(x)] = w.cat.object_name(d.on_objects[x]);
        diagrams.push_back(obj);
      }
      auto wit = level_witness(w, l);
      return Json{{"objects", l.w.cat.objects()}, {"morphisms", l.w.cat.morphisms()}, {"cofibrations", cofs},
                  {"dropped", l.dropped}, {"diagrams", diagrams}, {"witness", wit ? *wit : ""}};
    };
    SLevel s = s_n(w, c.n);
    r["n"] = c.n;
    r["S"] = level_json(s);
    bool pass = !level_witness(w, s);
    if (c.n >= 1) {
      SLevel sb = s_bar_n(w, c.n), f = f_n(w, c.n - 1);
      r["S_restricted"] = level_json(sb);
      r["F"] = level_json(f);
      ForgetfulReport fr = forgetful_maps(s, sb, f);
      r["forgetful"] = Json{{"s_sbar_equivalence", fr.s_sbar_equivalence}, {"s_sbar_reflects", fr.s_sbar_reflects},
                            {"s_sbar_exact", fr.s_sbar_exact}, {"sbar_f_equivalence", fr.sbar_f_equivalence},
                            {"sbar_f_reflects", fr.sbar_f_reflects}, {"sbar_f_exact", fr.sbar_f_exact},
                            {"detail", fr.detail}};
      pass = pass && fr.pass();
    }
    if (c.generic) {
      HomSet h = s_n_generic(w, c.n, c.dim, c.budget);
      Nerve nv = nerve(s.w.cat, c.dim);
      const bool iso = iso_check(h.sset, nv.sset, c.dim, c.budget).has_value();
      r["generic"] = Json{{"generators", counts(*h.sset)}, {"iso_to_nerve", iso}};
      pass = pass && iso;
    }
    r["pass"] = pass;
    return pass ? kPass : kFinding;
  }

  if (c.command == "k0") {
    need(1);
    ho_bound();
    WaldhausenData w = waldhausen_from_json(load_json(c.inputs[0]));
    K0Comparison k = compare_k0(w, c.dim);
    r["invariant_factors"] = k.diagonal;
    r["oracle"] = k.oracle;
    r["agree"] = k.agree;
    r["diagonal_simplices"] = {k.diagonal_simplices[0], k.diagonal_simplices[1], k.diagonal_simplices[2]};
    r["control"] = Json{{"row", k.control_row}, {"detected", k.control_detected}};
    r["pass"] = k.agree;
    return k.agree ? kPass : kFinding;
  }

  if (c.command == "approx") {
    need(1);
    ho_bound();
    ApproximationReport a = approximation_verify(exact_input(c.inputs[0]), c.dim);
    Json levels = Json::array();
    for (const auto& l : a.levels) levels.push_back(comparison_json(l));
    r["hypotheses"] = Json{{"exact", a.exact}, {"reflects_cofibrations", a.reflects},
                           {"ho_equivalence", a.ho_equivalence}, {"cof_ho_equivalence", a.cof_ho_equivalence},
                           {"all_cofibrations", a.all_cofibrations}, {"factorization", a.factorization},
                           {"theorem", a.theorem}, {"hold", a.hypotheses()}};
    r["conclusion"] = Json{{"levels", levels}, {"k0_source", a.k0_source}, {"k0_target", a.k0_target},
                           {"k0_agree", a.k0_agree}, {"hold", a.conclusion()}};
    r["detail"] = a.detail;
    const bool pass = a.hypotheses() && a.conclusion();
    r["pass"] = pass;
    return pass ? kPass : kFinding;
  }

  if (c.command == "lift") {
    need(1);
    Json j = load_json(c.inputs[0]);
    ExactFunctorData g;
    if (j.contains("source") && j["source"].is_object() && j["source"].contains("homs")) {
      g.source.cat = category_from_json(j["source"], "/source");
      g.target.cat = category_from_json(j["target"], "/target");
      g.f = functor_from_json(g.source.cat, g.target.cat, j.value("functor", Json::object()), "/functor");
    } else {
      g = exact_from_json(j);
    }
    const LiftKind kind = c.shape == "strong" ? LiftKind::StrongReplacement : LiftKind::Prism;
    LiftReport l = rlp_check(g.source.cat, g.target.cat, g.f, c.nbar, kind, c.budget);
    r["shape"] = c.shape;
    r["nbar"] = c.nbar;
    r["verdict"] = outcome_name(l.verdict);
    r["problems"] = l.problems;
    r["witness"] = l.witness;
    r["pass"] = l.verdict == Outcome::Pass;
    return l.verdict == Outcome::Pass ? kPass : l.verdict == Outcome::Fail ? kFinding : kBudget;
  }

  if (c.command == "iterate") {
    need(1);
    ho_bound();
    HigherIterateReport h = higher_iterate_verify(exact_input(c.inputs[0]), c.nbar, c.dim, c.budget);
    Json cs = Json::array(), ct = Json::array();
    for (const auto& x : h.components_source) cs.push_back(components_json(x));
    for (const auto& x : h.components_target) ct.push_back(components_json(x));
    r["nbar"] = c.nbar;
    r["hypotheses"] = Json{{"exact", h.exact}, {"reflects_cofibrations", h.reflects},
                           {"ho_equivalence", h.ho_equivalence}, {"cof_ho_equivalence", h.cof_ho_equivalence},
                           {"components_source", cs}, {"components_target", ct},
                           {"hold", h.hypotheses()}, {"hold_cofibration_variant", h.hypotheses_cof()}};
    r["direct"] = Json{{"source_objects", h.source_objects}, {"target_objects", h.target_objects},
                       {"functor_defined", h.functor_defined}, {"reflects_cofibrations", h.direct_reflects},
                       {"equivalence", h.direct_equivalence}, {"cof_equivalence", h.direct_cof_equivalence}};
    r["agree"] = h.agree();
    r["detail"] = h.detail;
    const bool pass = h.agree() && h.hypotheses();
    r["pass"] = pass;
    if (!h.agree()) return kFinding;
    return pass ? kPass : kFinding;
  }

  throw InvalidInput("unknown command " + c.command);
}

void emit(const Json& r, const std::string& out) {
  const std::string text = r.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidInput("cannot write " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcat: finite quasicategory and Waldhausen K-theory checks"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App* s) {
    s->add_option("inputs", c.inputs, "input files or builtins (delta:n, horn:n:k, boundary:n, spine:n, ordinal:n)");
    s->add_option("--dim", c.dim, "dimension bound d")->capture_default_str();
    s->add_option("--budget", c.budget, "enumeration budget")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "seed recorded in the report")->capture_default_str();
    s->add_option("--out", c.out, "report path (default stdout)");
    return s;
  };
  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {"validate", "schema and axiom validation of any input"},
      {"nerve", "nerve of a category"},
      {"tau1", "presentation of the fundamental category"},
      {"ho", "homotopy category"},
      {"mapspace", "mapping space between two vertices"},
      {"join", "join of simplicial sets"},
      {"slice", "slice under or over a vertex"},
      {"overcat", "overquasicategory (Y | y)"},
      {"comma", "comma (G | y) of a map"},
      {"contractible", "weak contractibility within the bound"},
      {"waldhausen-check", "Waldhausen axioms and structural consequences"},
      {"sconstruct", "S_n, restricted S_n and F_{n-1}"},
      {"k0", "K0 via the diagonal against the presentation oracle"},
      {"approx", "approximation hypotheses and desk-scale conclusion"},
      {"lift", "right lifting property of a functor"},
      {"iterate", "higher F-iterates of an exact functor"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = common(app.add_subcommand(s.name, s.help));
    sub->callback([&c, name = std::string(s.name)] { c.command = name; });
    const std::string name = s.name;
    if (name == "validate") sub->add_flag("--canonical", c.canonical, "include the canonical form");
    if (name == "mapspace") {
      sub->add_option("--from", c.from, "source vertex")->required();
      sub->add_option("--to", c.to, "target vertex")->required();
    }
    if (name == "slice" || name == "overcat" || name == "comma")
      sub->add_option("--vertex", c.vertex, "vertex name or index")->required();
    if (name == "slice") sub->add_option("--side", c.side, "under or over")->check(CLI::IsMember({"under", "over"}));
    if (name == "join") sub->add_flag("--check-assoc", c.check_assoc, "check (A*B)*C = A*(B*C)");
    if (name == "sconstruct") {
      sub->add_option("--n", c.n, "level")->capture_default_str();
      sub->add_flag("--generic", c.generic, "cross-check against the enumerated construction");
    }
    if (name == "lift") {
      sub->add_option("--shape", c.shape, "prism or strong")->check(CLI::IsMember({"prism", "strong"}));
      sub->add_option("--nbar", c.nbar, "spine shape n_1 .. n_k");
    }
    if (name == "iterate") sub->add_option("--n", c.nbar, "iterate shape n_1 [n_2]");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInput;
  }

  Json r{{"command", c.command}, {"bound", c.dim}, {"budget", c.budget}, {"seed", c.seed}, {"inputs", c.inputs}};
  int code = kPass;
  try {
    code = run(c, r);
  } catch (const BudgetExceeded& e) {
    r["pass"] = false;
    r["error"] = e.what();
    code = kBudget;
  } catch (const SchemaError& e) {
    r["pass"] = false;
    r["error"] = e.what();
    r["pointer"] = e.pointer();
    code = kInput;
  } catch (const NotAQuasicategory& e) {
    r["pass"] = false;
    r["witness"] = e.what();
    code = kFinding;
  } catch (const std::exception& e) {
    r["pass"] = false;
    r["error"] = e.what();
    code = kInput;
  }
  r["status"] = code == kPass ? "pass" : code == kFinding ? "finding" : code == kBudget ? "budget" : "error";
  try {
    emit(r, c.out);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInput;
  }
  if (code == kInput) std::cerr << r["error"].get<std::string>() << "\n";
  return code;
}
