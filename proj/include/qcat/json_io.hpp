#pragma once

#include <string>

#include "json.hpp"
#include "qcat/category.hpp"
#include "qcat/errors.hpp"
#include "qcat/simplicial_set.hpp"
#include "qcat/waldhausen.hpp"

namespace qcat {

using Json = nlohmann::json;

/// A schema violation, located by a JSON pointer into the input.
class SchemaError : public InvalidInput {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : InvalidInput(what + " at " + (pointer.empty() ? "/" : pointer)), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

Json load_json(const std::string& path);

/// {"bound": n, "complete": b, "generators": [[names per dim]], "faces": {name: [keys]}}.
/// A simplex key is a generator name, or {"gen": name, "degens": [j, ...]} for a
/// degenerate simplex. Parsing sorts the generators of each dimension by name.
Json sset_to_json(const SimplicialSet& x);
SSetPtr sset_from_json(const Json& j, const std::string& at = "");
/// Generator lists sorted and nondegenerate keys written as plain names.
Json canonical_sset_json(const Json& j);

Json simplex_to_json(const SimplicialSet& x, const Simplex& s);
Simplex simplex_from_json(const SimplicialSet& x, const Json& j, const std::string& at);

/// {"source": sset, "target": sset, "assign": {generator: key}}.
Json map_to_json(const SimplicialMap& m);
SimplicialMap map_from_json(const Json& j, const std::string& at = "");

/// {"objects": [...], "homs": {f: [src, tgt]}, "compose": {g: {f: "g o f"}}}.
/// Identities are implicit and named id_x.
Json category_to_json(const FinCategory& c);
FinCategory category_from_json(const Json& j, const std::string& at = "");

/// {"objects": {x: y}, "morphisms": {f: g}} over the non-identity morphisms.
Json functor_to_json(const FinCategory& c, const FinCategory& d, const Functor& f);
Functor functor_from_json(const FinCategory& c, const FinCategory& d, const Json& j, const std::string& at = "");

/// {"category": ..., "zero": x, "cofibrations": [names], "universe": {"bounded": b, "name": s}},
/// or {"builtin": "pointed_sets", "sizes": [...], "mark_all": b} / {"builtin": "trivial"}.
/// Every identity must be listed among the cofibrations.
Json waldhausen_to_json(const WaldhausenData& w);
WaldhausenData waldhausen_from_json(const Json& j, const std::string& at = "");

/// {"source": W, "target": W, "functor": {...}}, or a builtin: "skeleton_inclusion"
/// (with "sizes"), "non_reflecting_control", "identity" (with "waldhausen").
Json exact_to_json(const ExactFunctorData& g);
ExactFunctorData exact_from_json(const Json& j, const std::string& at = "");

}  // namespace qcat
