#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A join simplex is a pair (a, b) where either side may be absent; the
/// vertices of a come first.
struct JoinSet {
  SSetPtr sset;
  SSetPtr left, right;
  SimplicialMap inc_left, inc_right;
  /// For every generator: the nondegenerate parts it is built from.
  std::vector<std::vector<std::pair<std::optional<Simplex>, std::optional<Simplex>>>> parts;

  Simplex pair(const std::optional<Simplex>& a, const std::optional<Simplex>& b) const;
  std::pair<std::optional<Simplex>, std::optional<Simplex>> split(const Simplex& s) const;

 private:
  friend JoinSet join(const SSetPtr&, const SSetPtr&, int);
  std::map<std::pair<Simplex, Simplex>, int> pair_gen_;
};

/// A * B through dimension d (d < 0: everything; both must be complete).
JoinSet join(const SSetPtr& a, const SSetPtr& b, int d = -1);

/// f * g between two joins.
SimplicialMap join_map(const JoinSet& source, const JoinSet& target, const SimplicialMap& f, const SimplicialMap& g);

}  // namespace qcat
