#pragma once

#include <map>
#include <utility>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Product of two simplicial sets through a dimension, with projections.
/// Nondegenerate n-simplices are pairs (x, y) of n-simplices sharing no
/// collapse position.
struct ProductSet {
  SSetPtr sset;
  SimplicialMap pr1, pr2;
  std::map<std::pair<Simplex, Simplex>, Simplex> gen_of;

  /// The simplex (x, y) of the product, in normal form.
  Simplex pair(const Simplex& x, const Simplex& y) const;
};

/// X x Y. When d < 0 the product is taken through dim X + dim Y (both must be
/// complete) and the result is complete.
ProductSet product(const SSetPtr& x, const SSetPtr& y, int d = -1);

/// f x g : A x B -> C x D between two product sets.
SimplicialMap product_map(const ProductSet& source, const ProductSet& target, const SimplicialMap& f,
                          const SimplicialMap& g);

/// Fiber product of f : X -> Z and g : Y -> Z with its projections.
struct PullbackSet {
  SSetPtr sset;
  SimplicialMap pr1, pr2;
};

PullbackSet pullback(const SimplicialMap& f, const SimplicialMap& g, int d = -1);

/// Collapse positions {j : s(j) = s(j+1)} of a simplex.
std::vector<int> collapse_set(const Simplex& s);

}  // namespace qcat
