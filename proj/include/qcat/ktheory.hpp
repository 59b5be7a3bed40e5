#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/homology.hpp"
#include "qcat/join_slice.hpp"
#include "qcat/s_construction.hpp"
#include "qcat/waldhausen.hpp"

namespace qcat {

/// Levels X_0..X_d of a bisimplicial set with the horizontal structure maps.
struct BisimplicialTruncation {
  std::vector<SSetPtr> levels;
  std::vector<std::vector<SimplicialMap>> faces;   // faces[n][i] : X_n -> X_{n-1}
  std::vector<std::vector<SimplicialMap>> degens;  // degens[n][j] : X_n -> X_{n+1}, n < d
};

/// diag_n = n-simplices of X_n with d_i = d_i^h d_i^v and s_j = s_j^h s_j^v.
SSetPtr diagonal(const BisimplicialTruncation& b, int d);

/// The constant bisimplicial set on X.
BisimplicialTruncation constant_bisimplicial(const SSetPtr& x, int d);

/// n -> N(core S_n) for n <= d, each through simplicial dimension d.
struct SEquiv {
  std::vector<SLevel> s;
  std::vector<Core> cores;
  BisimplicialTruncation bisimplicial;
  int zero_vertex = 0;  // the zero [0]-complex
};
SEquiv s_equiv(const WaldhausenData& w, int d);

/// Free abelian group on the objects with [zero] = 0, [B] = [A] + [B/A] for
/// every [2]-complex and [X] = [Y] for every equivalence. Rows are deduplicated.
AbelianGroupPresentation k0_presentation_oracle(const WaldhausenData& w);
/// Abelianized pi1 of the diagonal 2-truncation of N(core S_.) at the zero basepoint.
AbelianGroupPresentation k0_via_diagonal(const WaldhausenData& w, int d = 2);

struct K0Comparison {
  std::vector<std::int64_t> oracle, diagonal;
  bool agree = false;
  std::size_t diagonal_simplices[3] = {0, 0, 0};
  /// Negative control: the first relation whose removal changes the oracle
  /// answer, and whether the comparison notices it.
  int control_row = -1;
  bool control_detected = false;
};
K0Comparison compare_k0(const WaldhausenData& w, int d = 2);

/// Per-component comparison of pi0 and abelianized pi1 along a map.
struct HomotopyComparison {
  int pi0_source = 0, pi0_target = 0;
  bool pi0_bijection = false;
  bool pi1_agree = false;
  std::string detail;
  bool pass() const { return pi0_bijection && pi1_agree; }
};
HomotopyComparison compare_pi0_pi1(const SimplicialMap& g);

struct QuillenAReport {
  std::vector<ContractibleReport> commas;  // per vertex of Y
  bool hypothesis = false;                 // every comma confirmed contractible
  HomotopyComparison corroboration;
  std::string witness;
  int d = 2;
};
QuillenAReport quillen_a_verify(const SimplicialMap& g, int d = 2);

struct MainTechnicalReport {
  bool essentially_surjective = false;
  bool reflects_equivalences = false;
  bool colimits_exist = false;
  bool colimits_preserved = false;
  int diagrams = 0;
  HomotopyComparison conclusion;
  std::string witness;
  bool hypotheses() const {
    return essentially_surjective && reflects_equivalences && colimits_exist && colimits_preserved;
  }
};
/// F : A -> B between finite categories; diagrams are indexed by posets with at most max_poset elements.
MainTechnicalReport main_technical_verify(const FinCategory& a, const FinCategory& b, const Functor& f,
                                          int max_poset = 3);

struct ApproximationReport {
  bool exact = false;
  bool reflects = false;
  bool ho_equivalence = false;
  bool cof_ho_equivalence = false;
  bool all_cofibrations = false;
  bool factorization = false;
  std::string theorem;  // which statement applies, empty if none
  bool hypotheses() const { return !theorem.empty(); }
  // desk-scale conclusion
  std::vector<HomotopyComparison> levels;  // (S_n G)_equiv for n <= 2
  std::vector<std::int64_t> k0_source, k0_target;
  bool k0_agree = false;
  bool conclusion() const;
  std::string detail;
  int d = 2;
};
ApproximationReport approximation_verify(const ExactFunctorData& g, int d = 2);

/// S_n G : S_n A -> S_n B by postcomposition (entries -1 where the image is
/// not an [n]-complex of B).
Functor s_functor(const ExactFunctorData& g, const SLevel& a, const SLevel& b);

}  // namespace qcat
