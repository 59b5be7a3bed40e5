#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/homotopy.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A Waldhausen structure on the nerve of a finite category. Cofibrations are
/// stored extensionally, one flag per morphism. A bounded universe is a size
/// truncation: pushouts falling outside it are reported as local failures.
struct WaldhausenData {
  FinCategory cat;
  int zero = 0;
  std::vector<char> cof;
  bool bounded = false;
  std::string universe;

  bool is_cof(int f) const { return cof[f] != 0; }
  Nerve nerve(int d) const { return qcat::nerve(cat, d); }
};

struct WaldhausenReport {
  std::vector<std::string> fatal;
  std::vector<std::string> local;
  int spans = 0;
  bool pass() const { return fatal.empty(); }
};

WaldhausenReport validate_waldhausen(const WaldhausenData& w);

/// The spans B <- A -> C (first leg listed first) with the given apex data, and
/// their pushouts computed in the category.
struct Span {
  int f, g;  // A -> B, A -> C
};
std::vector<Cocone> pushouts(const FinCategory& c, const Span& s);

/// The 1-full subobject of the nerve on the cofibrations and its homotopy
/// category, with the inclusion of classes into ho of the whole nerve.
struct CofData {
  Nerve nerve;
  Subobject co;
  HoCategory ho_co;
  HoCategory ho;
  Functor inclusion;  // ho_co -> ho
};
CofData cof_subquasicategory(const WaldhausenData& w, int d = 3);

/// Every morphism is a cofibration. Also runs the definitional test (a 2-simplex
/// with boundary (equivalence, f, cofibration) for every f) and throws
/// std::logic_error if the two disagree.
bool admits_factorization(const WaldhausenData& w);
bool factorization_by_definition(const WaldhausenData& w);

/// Marked classes are closed under pre- and postcomposition with isomorphisms
/// in ho (weak cofibrations are cofibrations).
bool homotopy_closed(const WaldhausenData& w);

/// 6-for-2 for isomorphisms of ho over every composable triple.
bool six_for_two(const FinCategory& ho);

struct ExactFunctorData {
  WaldhausenData source, target;
  Functor f;
};

struct ExactReport {
  std::vector<std::string> fatal;
  std::vector<std::string> local;
  bool pass() const { return fatal.empty(); }
};
ExactReport validate_exact(const ExactFunctorData& g);
/// nullopt when G reflects cofibrations, otherwise a witness.
std::optional<std::string> cofibration_reflection_witness(const ExactFunctorData& g);
bool reflects_cofibrations(const ExactFunctorData& g);

/// Subcategory of cofibrations and its inclusion.
struct CofCategory {
  FinCategory cat;
  std::vector<int> in_c;  // morphism of cat -> morphism of C
};
CofCategory cof_category(const WaldhausenData& w);
/// tau_1(co G) is an equivalence of categories.
bool cof_ho_equivalence(const ExactFunctorData& g);
/// tau_1 G is an equivalence.
bool ho_equivalence(const ExactFunctorData& g);

/// A commutative square Delta[1] x Delta[1] -> N C is homotopy cocartesian if
/// one leg out of (0,0) is a cofibration and the square is a pushout.
struct Square {
  int top, left, right, bottom;  // A->B, A->C, B->D, C->D
};
bool homotopy_cocartesian_check(const WaldhausenData& w, const Square& s);
/// The same verdict decided through colimiting cocones in the slice of the nerve.
bool homotopy_cocartesian_check_generic(const WaldhausenData& w, const Square& s, std::size_t budget = 10000000);

/// Finite pointed sets with the given numbers of non-base points; morphisms
/// are all pointed maps, cofibrations the injections.
struct PointedSets {
  WaldhausenData w;
  std::vector<int> sizes;
  std::vector<std::vector<int>> maps;  // per morphism: image of 0..size
};
PointedSets pointed_sets(const std::vector<int>& sizes, bool mark_all = false);
WaldhausenData trivial_waldhausen();
/// The full subcategory inclusion of pointed_sets({0, 1, 2}) into
/// pointed_sets(target_sizes); target sizes must start with 0, 1, 2.
ExactFunctorData skeleton_inclusion(const std::vector<int>& target_sizes);
/// Identity of pointed sets, injections marked in the source, all maps in the target.
ExactFunctorData non_reflecting_control();
ExactFunctorData identity_exact(const WaldhausenData& w);

}  // namespace qcat
