#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qcat {

/// Monotone map [k] -> [m] stored as its value list (length k + 1).
using Monotone = std::vector<int>;

/// A simplex in Eilenberg-Zilber normal form: a nondegenerate generator of
/// dimension `gdim` and index `gen`, with the degeneracy word
/// s_{degens[0]} s_{degens[1]} ... applied to it (entries strictly decreasing).
///
/// The defaulted ordering (generator dimension, index, degeneracy word) is the
/// lexicographic order used for every deterministic tie-break in the library.
struct Simplex {
  int gdim = 0;
  int gen = 0;
  std::vector<int> degens;

  int dim() const { return gdim + static_cast<int>(degens.size()); }
  bool nondegenerate() const { return degens.empty(); }

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

  static Simplex generator(int gdim, int gen) { return Simplex{gdim, gen, {}}; }
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = static_cast<std::size_t>(s.gdim) * 0x9E3779B97F4A7C15ULL ^
                    static_cast<std::size_t>(s.gen) * 0xC2B2AE3D27D4EB4FULL;
    for (int d : s.degens) h = (h ^ static_cast<std::size_t>(d + 1)) * 0x100000001B3ULL;
    return h;
  }
};

/// Degeneracy operators and their surjections [n] -> [m].
namespace surj {

/// Surjection encoded by a strictly decreasing degeneracy word on an m-simplex.
Monotone from_degens(std::span<const int> degens, int gdim);
/// Collapse positions {j : s(j) == s(j+1)} of a surjection, strictly decreasing.
std::vector<int> to_degens(std::span<const int> s);
/// (a o b)(t) = a(b(t)).
Monotone compose(std::span<const int> a, std::span<const int> b);
Monotone identity(int n);
/// The coface delta_i : [n-1] -> [n] skipping i.
Monotone coface(int n, int i);
/// The codegeneracy sigma_j : [n+1] -> [n] hitting j twice.
Monotone codegeneracy(int n, int j);
bool is_monotone(std::span<const int> s, int target_dim);

}  // namespace surj

/// Applies a surjection to a simplex: theta^*(x) for surjective theta.
Simplex degenerate_by(const Simplex& x, std::span<const int> s);
/// s_j x.
Simplex degeneracy(const Simplex& x, int j);

std::string to_string(const Simplex& s);

}  // namespace qcat
