#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Lookup of n-simplices of an indexed simplicial set by all faces except the k-th.
class HornFiller {
 public:
  HornFiller(const SimplexIndex& x, int n, int k);

  /// `faces` holds n + 1 face ids; entry k is ignored. Returns filler ids in
  /// lexicographic order.
  std::span<const int> fillers(std::span<const int> faces) const;
  std::optional<int> first(std::span<const int> faces) const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  std::string key(std::span<const int> faces) const;
  const SimplexIndex& x_;
  int n_, k_;
  std::unordered_map<std::string, std::vector<int>> table_;
};

/// Face ids (n + 1 entries, entry k = -1) of the horn h : Lambda^k[n] -> X.
std::vector<int> horn_face_ids(const SimplicialMap& h, const SimplexIndex& x, int n, int k);

/// First filler of h : Lambda^k[n] -> X in lexicographic order, if any.
std::optional<Simplex> inner_horn_filler(const SimplexIndex& x, const SimplicialMap& h, int n, int k);

enum class HornClass { Right3, Left3, Inner, All };

struct HornCheck {
  bool pass = true;
  std::size_t horns = 0;
  int n = 0, k = 0;
  std::vector<int> witness;  // face ids of the first unfillable horn
  std::string describe(const SimplexIndex& x) const;
};

/// Enumerates every horn of the class (dimensions up to max_n) and searches a filler.
HornCheck horn_fill_class_check(const SimplexIndex& x, HornClass cls, int max_n = 3);

}  // namespace qcat
