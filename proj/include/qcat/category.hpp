#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A finite category with a dense composition table.
class FinCategory {
 public:
  struct Morphism {
    int src, tgt;
    std::string name;
  };

  int add_object(std::string name);
  /// Adds a non-identity morphism. Identities exist automatically.
  int add_morphism(int src, int tgt, std::string name);
  /// Sets g o f. Both must be composable.
  void set_compose(int g, int f, int gf);
  /// Fills the table from a function (called for composable non-identity pairs).
  void fill_compose(const std::function<int(int g, int f)>& comp);

  int objects() const { return static_cast<int>(obj_names_.size()); }
  int morphisms() const { return static_cast<int>(mors_.size()); }
  const std::string& object_name(int x) const { return obj_names_[x]; }
  const Morphism& morphism(int f) const { return mors_[f]; }
  int src(int f) const { return mors_[f].src; }
  int tgt(int f) const { return mors_[f].tgt; }
  int id(int x) const { return ids_[x]; }
  bool is_identity(int f) const { return ids_[mors_[f].src] == f; }
  /// g o f, or -1 if not composable.
  int compose(int g, int f) const;
  const std::vector<int>& hom(int a, int b) const;
  const std::vector<int>& out(int a) const { return out_[a]; }
  std::optional<int> find_object(const std::string& name) const;
  std::optional<int> find_morphism(const std::string& name) const;

  /// Checks associativity, units and that the table is total on composable pairs.
  std::optional<std::string> validate() const;
  bool is_iso(int f) const { return inverse(f).has_value(); }
  std::optional<int> inverse(int f) const;

  bool operator==(const FinCategory& o) const;

 private:
  std::vector<std::string> obj_names_;
  std::vector<Morphism> mors_;
  std::vector<int> ids_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> table_;  // table_[g][f] = g o f
  mutable std::map<std::pair<int, int>, std::vector<int>> hom_;
  std::map<std::string, int> by_name_, mor_by_name_;
};

struct Functor {
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
  bool operator==(const Functor&) const = default;
  auto operator<=>(const Functor&) const = default;
};

std::optional<std::string> check_functor(const FinCategory& c, const FinCategory& d, const Functor& f);
Functor compose(const Functor& g, const Functor& f);

/// All functors C -> D in lexicographic order (objects first, then morphisms).
std::vector<Functor> all_functors(const FinCategory& c, const FinCategory& d,
                                  const std::function<bool(const Functor&)>& accept = {},
                                  std::size_t budget = 10000000);
/// All natural transformations F => G as component lists.
std::vector<std::vector<int>> natural_transformations(const FinCategory& c, const FinCategory& d, const Functor& f,
                                                      const Functor& g);

/// Full subcategory of Fun(C, D) on the given functors; morphisms are natural
/// transformations. `components[m]` gives the components of morphism m.
struct FunctorCategory {
  FinCategory cat;
  std::vector<Functor> functors;
  std::vector<std::vector<int>> components;
};
FunctorCategory functor_category(const FinCategory& c, const FinCategory& d, const std::vector<Functor>& functors);

bool fully_faithful(const FinCategory& c, const FinCategory& d, const Functor& f);
bool essentially_surjective(const FinCategory& c, const FinCategory& d, const Functor& f);
bool is_equivalence(const FinCategory& c, const FinCategory& d, const Functor& f);

/// Poset on 0..n-1 with i <= j given by leq.
FinCategory poset(int n, const std::function<bool(int, int)>& leq, const std::vector<std::string>& names = {});
/// The ordinal [n].
FinCategory ordinal(int n);
/// One-object category from a monoid table (element 0 is the unit).
FinCategory monoid(const std::vector<std::vector<int>>& table, const std::vector<std::string>& names = {});
FinCategory product_category(const FinCategory& a, const FinCategory& b);
/// Join of categories: A, B and exactly one morphism a -> b for each pair.
FinCategory join_category(const FinCategory& a, const FinCategory& b);
/// C / c: objects are morphisms into c.
struct SliceCategory {
  FinCategory cat;
  Functor forget;
};
SliceCategory over_category(const FinCategory& c, int obj);
/// Maximal subgroupoid (same objects, isomorphisms).
struct Core {
  FinCategory cat;
  std::vector<int> morphism_in_c;
};
Core core(const FinCategory& c);

/// Cocones over a diagram (objects and morphism images of an indexing
/// category J) and the initial ones among them.
struct Cocone {
  int apex;
  std::vector<int> legs;
  bool operator==(const Cocone&) const = default;
};
std::vector<Cocone> cocones(const FinCategory& j, const FinCategory& c, const Functor& diagram);
std::vector<Cocone> colimits(const FinCategory& j, const FinCategory& c, const Functor& diagram);
std::vector<int> initial_objects(const FinCategory& c);

/// Random categories for property tests.
FinCategory random_poset(std::mt19937& rng, int max_objects);
FinCategory random_category(std::mt19937& rng, int max_objects, int max_morphisms);

/// The nerve through dimension d, with string bookkeeping.
struct Nerve {
  SSetPtr sset;
  /// Composable non-identity strings (f1, ..., fn) of each generator; a vertex
  /// generator's string is empty and its object is its index.
  std::vector<std::vector<std::vector<int>>> strings;
  std::map<std::vector<int>, int> gen_of_string;

  /// Simplex for a string of morphisms (identities allowed) of length n >= 1.
  Simplex simplex_of(const FinCategory& c, const std::vector<int>& string) const;
  /// The string (with identities) of an n-simplex, n >= 1.
  std::vector<int> string_of(const FinCategory& c, const Simplex& s) const;
  /// The object at vertex i of a simplex.
  int object_of(const FinCategory& c, const Simplex& s, int i) const;
  Simplex edge(const FinCategory& c, int f) const { return simplex_of(c, {f}); }
};
Nerve nerve(const FinCategory& c, int d);

/// N(F) : N C -> N D through the common dimension.
SimplicialMap nerve_map(const FinCategory& c, const Nerve& nc, const FinCategory& d, const Nerve& nd, const Functor& f);

}  // namespace qcat
