#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/enumerate.hpp"
#include "qcat/waldhausen.hpp"

namespace qcat {

/// Ar[n]: pairs (i, j) with i <= j, ordered componentwise. Elements are listed
/// lexicographically and named "ij".
struct ArPoset {
  int n = 0;
  FinCategory cat;
  std::vector<std::pair<int, int>> elements;
  int index(int i, int j) const;
  /// The unique morphism (i, j) -> (k, l).
  int arrow(int i, int j, int k, int l) const;
};
ArPoset ar_poset(int n);
/// N Ar[n] intersected with I[n] x I[n]; vertices in the order of ar_poset(n).
SSetPtr restricted_grid(int n);

/// One level of S, restricted S or F as a Waldhausen category: objects are
/// diagrams (functors out of Ar[n], or out of [n] for F), morphisms natural
/// transformations, cofibrations as in the definition.
struct SLevel {
  enum class Kind { S, SBar, F };
  Kind kind = Kind::S;
  int n = 0;
  FinCategory domain;
  ArPoset ar;            // the domain for S and restricted S
  std::vector<int> row;  // domain objects of the first row, used by the cofibration rule
  WaldhausenData w;
  std::vector<Functor> diagrams;
  std::vector<std::vector<int>> components;
  int dropped = 0;  // candidates whose required pushout is missing from the universe

  int find(const Functor& f) const;
  int find_morphism(int src, int tgt, const std::vector<int>& comps) const;

  std::map<Functor, int> by_diagram;
  std::map<std::vector<int>, int> by_components;
};

SLevel s_n(const WaldhausenData& w, int n);
SLevel s_bar_n(const WaldhausenData& w, int n);
SLevel f_n(const WaldhausenData& w, int n);

/// Re-checks the defining conditions of every object; returns the first violation.
std::optional<std::string> level_witness(const WaldhausenData& w, const SLevel& level);

/// theta^* : S_n -> S_m for a monotone theta : [m] -> [n].
Functor s_simplicial_map(const SLevel& sn, const SLevel& sm, const Monotone& theta);

struct ForgetfulReport {
  Functor s_to_sbar, sbar_to_f;
  bool s_sbar_equivalence = false, s_sbar_reflects = false, s_sbar_exact = false;
  bool sbar_f_equivalence = false, sbar_f_reflects = false, sbar_f_exact = false;
  std::string detail;
  bool pass() const {
    return s_sbar_equivalence && s_sbar_reflects && s_sbar_exact && sbar_f_equivalence && sbar_f_reflects &&
           sbar_f_exact;
  }
};
/// S_n -> restricted S_n -> F_{n-1}, n >= 1.
ForgetfulReport forgetful_maps(const WaldhausenData& w, int n);
ForgetfulReport forgetful_maps(const SLevel& s, const SLevel& sbar, const SLevel& f);

/// S_n through dimension d as the full sub-simplicial set of the internal hom
/// Map(N Ar[n], N C) on the [n]-complexes, built by map enumeration.
HomSet s_n_generic(const WaldhausenData& w, int n, int d, std::size_t budget = 10000000);

}  // namespace qcat
