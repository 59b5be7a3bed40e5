#pragma once

#include "qcat/enumerate.hpp"
#include "qcat/product.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Barycentric subdivision of an ordered simplicial complex: the nerve of its
/// poset of nondegenerate simplices. Vertex v of the result is the generator
/// `barycenters[v]` of x. Throws InvalidInput on non-regular input.
struct Subdivision {
  SSetPtr sset;
  std::vector<Simplex> barycenters;
};
Subdivision subdivision(const SSetPtr& x);
/// Sd f for a map of ordered complexes.
SimplicialMap sd_map(const Subdivision& source, const Subdivision& target, const SimplicialMap& f);

/// Ex X through dimension d: k-simplices are maps Sd Delta[k] -> X.
HomSet ex(const SSetPtr& x, int d, std::size_t budget = 1000000);

/// X^A through dimension d: k-simplices are maps A x Delta[k] -> X.
HomSet internal_hom(const SSetPtr& a, const SSetPtr& x, int d, std::size_t budget = 1000000);

/// The full sub-simplicial set of X^A through dimension d on the vertices
/// (maps A -> X, as assignments on A) accepted by vertex_ok. The index must
/// reach dim A + d. `local_ok(a, target)` prunes generators (a, constant) of
/// A x Delta[k] early.
HomSet full_internal_hom(const SSetPtr& a, const std::shared_ptr<const SimplexIndex>& x, int d,
                         const std::function<bool(const Assignment&)>& vertex_ok, std::size_t budget = 1000000,
                         const std::function<bool(const Simplex&, int)>& local_ok = {});

/// The pullback of X^{Delta[1]} -> X x X along (a, b): k-simplices are maps
/// Delta[1] x Delta[k] -> X constant at a on {0} x Delta[k] and at b on {1} x Delta[k].
HomSet mapping_space(const SSetPtr& x, int a, int b, int d, std::size_t budget = 1000000);
HomSet mapping_space(const std::shared_ptr<const SimplexIndex>& x, int a, int b, int d,
                     std::size_t budget = 1000000);

/// Restriction X^A -> X^B along i : B -> A, on the generators of two hom sets
/// built by internal_hom. Generators whose image is missing raise InvalidInput.
SimplicialMap restrict_hom(const HomSet& from, const SSetPtr& a, const HomSet& to, const SSetPtr& b,
                           const SimplicialMap& i, const SimplexIndex& target);

}  // namespace qcat
