#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/enumerate.hpp"
#include "qcat/horn.hpp"
#include "qcat/product.hpp"
#include "qcat/waldhausen.hpp"

namespace qcat {

enum class Outcome { Pass, Fail, Inconclusive };
const char* outcome_name(Outcome v);

/// I[n_1] x ... x I[n_k]; a point for the empty shape.
SSetPtr spine_product(const std::vector<int>& shape);
int spine_product_dim(const std::vector<int>& shape);

/// I[n] x Delta[1], the shape of a natural transformation between functors I[n] -> X.
ProductSet transformation_shape(int n);
/// I[n] x Delta[2].
ProductSet prism_shape(int n);

/// The 2-simplex of X^{W} seen from W x Delta[1]: precompose h : W x Delta[2] -> X
/// with W x delta_i.
Assignment prism_face(const ProductSet& prism, const ProductSet& square, const Assignment& h, int i,
                      const SimplexIndex& x);

struct PrismResult {
  bool found = false;
  ProductSet prism;
  Assignment homotopy;  // on prism.sset
  int fillers = 0;      // 3-simplices obtained by horn filling
  // where the construction got stuck
  int stuck_segment = -1;
  std::string stuck_simplex;  // vertex labels such as "abcr"
  int stuck_k = -1;
  std::vector<int> stuck_faces;  // face ids, entry stuck_k = -1
  std::string reason;
};

/// Right homotopy h : I[n] x Delta[2] -> X from alpha to beta (d_1 h = alpha,
/// d_0 h = beta, d_2 h the identity of the source functor), built from a right
/// homotopy of the last components by filling, segment by segment from the
/// last one, the 3-simplices a<p<q<r (inner), a<b<q<r (inner) and a<b<c<r
/// (right horn). `x` must reach dimension 3.
PrismResult homotopy_from_last_component(const SimplexIndex& x, int n, const Assignment& alpha,
                                         const Assignment& beta);
/// The dual: d_2 h = alpha, d_1 h = beta, d_0 h the identity of the target
/// functor; filled from the first segment on, top down, ending in Lambda^0[3].
PrismResult homotopy_from_first_component(const SimplexIndex& x, int n, const Assignment& alpha,
                                          const Assignment& beta);

struct ComponentsReport {
  Outcome verdict = Outcome::Pass;
  std::vector<int> shape;
  std::size_t budget = 0;
  std::size_t transformations = 0;
  std::size_t pairs = 0;  // distinct pairs with homotopic components
  std::string witness;
};

/// Any two transformations W x Delta[1] -> X (W = spine_product(shape)) with the
/// same source and target and homotopic components are homotopic in X^W.
/// Exhaustive within the budget; `x` must reach dim W + 2.
ComponentsReport components_hypothesis_check(const SSetPtr& x, const std::vector<int>& shape,
                                             std::size_t budget = 2000000);

enum class LiftKind { Prism, StrongReplacement };

struct LiftReport {
  Outcome verdict = Outcome::Pass;
  LiftKind kind = LiftKind::Prism;
  std::vector<int> shape;
  std::size_t budget = 0;
  std::size_t problems = 0;
  std::string witness;
};

/// Prism: N g has the right lifting property against W x dDelta[2] -> W x Delta[2].
/// StrongReplacement: every map (Obj W x Delta[2]) u (W x dDelta[2]) -> N b extends
/// to W x Delta[2] (a and g are ignored).
LiftReport rlp_check(const FinCategory& a, const FinCategory& b, const Functor& g, const std::vector<int>& shape,
                     LiftKind kind, std::size_t budget = 2000000);

struct HigherIterateReport {
  std::vector<int> shape;
  int d = 2;
  bool exact = false;
  bool reflects = false;            // hypothesis (i)
  bool ho_equivalence = false;      // hypothesis (ii)
  bool cof_ho_equivalence = false;  // hypothesis (ii), cofibration variant
  std::vector<ComponentsReport> components_source, components_target;  // (iii), (iv)
  bool components_hold() const;
  bool hypotheses() const { return exact && reflects && ho_equivalence && components_hold(); }
  bool hypotheses_cof() const { return exact && reflects && cof_ho_equivalence && components_hold(); }

  // direct table checks on F_{shape} of both sides
  int source_objects = 0, target_objects = 0;
  bool functor_defined = false;
  bool direct_reflects = false;
  bool direct_equivalence = false;
  bool direct_cof_equivalence = false;
  /// The conclusions hold wherever the corresponding hypotheses do.
  bool agree() const {
    return (!hypotheses() || (direct_reflects && direct_equivalence)) &&
           (!hypotheses_cof() || (direct_reflects && direct_cof_equivalence));
  }
  std::string detail;
};

/// Iterated F-construction F_{n_k} ... F_{n_1} G for |shape| <= 2. Components
/// hypotheses are checked on the nerves for W = I[shape] and W = I[1].
HigherIterateReport higher_iterate_verify(const ExactFunctorData& g, const std::vector<int>& shape, int d = 2,
                                          std::size_t budget = 20000000);

}  // namespace qcat
