#pragma once

#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Builds the ordered simplicial complex on vertices 0..nverts-1 generated by
/// the given increasing vertex tuples (all their faces are added). Generators
/// are sorted by dimension, then lexicographically.
SSetPtr ordered_complex(int nverts, const std::vector<std::vector<int>>& simplices);

/// Vertex tuple of a simplex of an ordered complex (repeats for degenerate ones).
std::vector<int> vertex_tuple(const SimplicialSet& x, const Simplex& s);
/// The simplex of an ordered complex with the given weakly increasing vertex
/// tuple. Throws InvalidInput if the underlying face is missing.
Simplex ordered_simplex(const SimplicialSet& x, const std::vector<int>& verts);
/// True when every generator has distinct vertices and distinct generators
/// have distinct vertex sets, i.e. x is an ordered simplicial complex.
bool is_ordered_complex(const SimplicialSet& x);

SSetPtr empty_set();
SSetPtr delta(int n);
SSetPtr boundary(int n);
SSetPtr horn(int n, int k);
SSetPtr spine(int n);

/// The standard subobjects of delta(n) with their inclusions.
Subobject boundary_in(int n);
Subobject horn_in(int n, int k);
Subobject spine_in(int n);

/// Map of ordered complexes given on vertices (must send simplices to simplices).
SimplicialMap vertex_map(const SSetPtr& source, const SSetPtr& target, const std::vector<int>& on_vertices);
/// theta_* : Delta[m] -> Delta[n] for a monotone theta : [m] -> [n].
SimplicialMap delta_map(int m, int n, const Monotone& theta);

std::string tuple_name(const std::vector<int>& verts);

}  // namespace qcat
