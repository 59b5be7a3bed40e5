#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Images of all source generators as simplex ids of the target index.
using Assignment = std::vector<std::vector<int>>;

struct EnumOptions {
  /// Optional fixed image (target simplex id) per source generator.
  std::vector<std::vector<int>> fixed;  // -1 = free
  /// Optional per-generator candidate filter.
  std::function<bool(int n, int g, int target_id)> filter;
  /// Called on each complete assignment; return false to reject it.
  std::function<bool(const Assignment&)> accept;
  /// Maximum number of candidate placements tried before BudgetExceeded.
  std::size_t budget = 1000000;
};

/// Enumerates all maps source -> target compatible with the options, in
/// lexicographic order of the assignment (generators in dimension order).
/// `visit` returns false to stop early. Returns the number of maps visited.
std::size_t enumerate_maps(const SimplicialSet& source, const SimplexIndex& target, const EnumOptions& opt,
                           const std::function<bool(const Assignment&)>& visit);

std::vector<Assignment> all_maps(const SimplicialSet& source, const SimplexIndex& target,
                                 const EnumOptions& opt = {});

SimplicialMap to_map(const SSetPtr& source, const SimplexIndex& target, const Assignment& a);
Assignment to_assignment(const SimplicialMap& m, const SimplexIndex& target);

/// A family of shapes S_k with coface maps S_{k-1} -> S_k and codegeneracy
/// maps S_{k+1} -> S_k. The k-simplices of the resulting simplicial set are the
/// maps S_k -> X allowed by `options(k)`.
struct HomShape {
  std::function<SSetPtr(int k)> shape;
  std::function<SimplicialMap(int k, int i)> coface;        // S_{k-1} -> S_k
  std::function<SimplicialMap(int k, int j)> codegeneracy;  // S_{k+1} -> S_k
  std::function<EnumOptions(int k, const SSetPtr& shape)> options;
};

struct HomSet {
  SSetPtr sset;
  /// The map S_k -> X of every generator of dimension k.
  std::vector<std::vector<Assignment>> maps;
  std::vector<SSetPtr> shapes;
  std::shared_ptr<const SimplexIndex> index;  // target index the assignments refer to
  std::size_t attempted = 0;

  /// Normal form of an arbitrary map S_k -> X, if it is a simplex of the set.
  std::optional<Simplex> find(int k, const Assignment& a) const;
  std::vector<std::map<Assignment, Simplex>> lookup;
};

HomSet build_hom(const HomShape& hs, const SimplexIndex& target, int d, const std::string& prefix = "m");

/// Precomposition f o phi for phi : S' -> S, as an assignment on S'.
Assignment precompose(const Assignment& f, const SimplicialMap& phi, const SimplexIndex& target);

}  // namespace qcat
