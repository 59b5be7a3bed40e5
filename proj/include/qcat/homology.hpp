#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qcat/simplicial_set.hpp"

namespace qcat {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// U * A * V = D with U, V unimodular (their inverses are tracked too) and D
/// diagonal with each entry dividing the next. Throws std::overflow_error.
struct SmithForm {
  IntMatrix D, U, V, U_inv, V_inv;
  std::vector<std::int64_t> diagonal;  // nonzero diagonal entries, positive
  /// Recomputes U A V, U U^-1 and V V^-1 with checked arithmetic.
  bool verify(const IntMatrix& A) const;
};
SmithForm smith_normal_form(const IntMatrix& A);

/// Checked integer matrix product.
IntMatrix checked_product(const IntMatrix& a, const IntMatrix& b);

/// Abelian group Z^generators / (row span of relations).
struct AbelianGroupPresentation {
  int generators = 0;
  std::vector<std::vector<std::int64_t>> relations;

  IntMatrix matrix() const;
  /// Invariant factors d_i > 1 in divisibility order followed by one 0 per free
  /// summand. The trivial group gives [], Z gives [0].
  std::vector<std::int64_t> invariant_factors() const;
};

/// Integral homology of the normalized chain complex through dimension 1.
std::vector<std::int64_t> h1_invariant_factors(const SimplicialSet& x);
int h0_rank(const SimplicialSet& x);

/// Connected components: component id per vertex.
std::vector<int> pi0(const SimplicialSet& x);
int pi0_count(const SimplicialSet& x);

/// Abelianized edge-path group of the 2-skeleton at a basepoint. `tie_break`
/// selects the spanning tree: 0 = breadth first in id order, 1 = depth first
/// in reverse id order.
AbelianGroupPresentation pi1_abelianized(const SimplicialSet& x, int basepoint, int tie_break = 0);

}  // namespace qcat
