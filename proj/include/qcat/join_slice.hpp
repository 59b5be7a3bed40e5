#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/enumerate.hpp"
#include "qcat/join.hpp"
#include "qcat/product.hpp"

namespace qcat {

/// a \ X: k-simplices are maps A * Delta[k] -> X restricting to a on A.
struct SliceSet {
  HomSet hom;
  std::vector<JoinSet> joins;  // A * Delta[k] (or Delta[k] * B)
  SSetPtr sset() const { return hom.sset; }
};
SliceSet slice_under(const SimplicialMap& a, int d, std::size_t budget = 1000000);
SliceSet slice_over(const SimplicialMap& b, int d, std::size_t budget = 1000000);

/// (Y | y): n-simplices are (n+1)-simplices of Y with last vertex y, with the
/// projection q(z) = d_{n+1} z.
struct OverSet {
  SSetPtr sset;
  SimplicialMap q;
  /// The simplex of Y representing each generator.
  std::vector<std::vector<Simplex>> in_y;
};
OverSet over_quasicategory(const SSetPtr& y, int vertex, int d);
/// (G | y): the pullback of q against G.
PullbackSet comma(const SimplicialMap& g, int vertex, int d);

enum class Verdict { Confirmed, Refuted, Inconclusive };
std::string to_string(Verdict v);

struct ContractibleReport {
  Verdict verdict = Verdict::Inconclusive;
  int d = 2;
  std::string detail;
};
/// Weak contractibility at desk scale: nonempty, connected, H1 of the
/// 2-truncation vanishes.
ContractibleReport contractible(const SimplicialSet& x);

/// Initiality of a vertex via contractibility of every mapping space X(i, x).
ContractibleReport is_initial(const SSetPtr& x, int i, int d = 2, std::size_t budget = 1000000);

struct CoconeData {
  SimplicialMap extension;  // A * Delta[0] -> X
  Simplex vertex;           // the 0-simplex of a \ X
};
/// Cocones of a whose initiality in a \ X is confirmed.
std::vector<CoconeData> colimiting_cocones(const SimplicialMap& a, int d = 2, std::size_t budget = 1000000);

/// Restriction r : colim(X^{A*1}) -> X^A for X = N C and A = N J, decided on
/// the functor categories.
struct RestrictionReport {
  bool hypothesis = true;  // every diagram has a colimit
  bool essentially_surjective = false;
  bool fully_faithful = false;
  bool fibers_contractible = false;
  int diagrams = 0, colimiting = 0;
  std::string detail;
  bool pass() const { return hypothesis && essentially_surjective && fully_faithful && fibers_contractible; }
};
RestrictionReport restriction_equivalence_check(const FinCategory& c, const FinCategory& j);

/// Every map N P -> X for posets with at most max_poset elements extends to
/// (N P) * Delta[0].
struct ConeExtensionReport {
  bool pass = true;
  int posets = 0;
  std::size_t maps = 0;
  std::string witness;
};
ConeExtensionReport cone_extension_check(const SSetPtr& x, int max_poset = 3, std::size_t budget = 10000000);

/// All partial orders on {0, .., k-1}, as leq matrices.
std::vector<std::vector<std::vector<char>>> all_posets(int k);

}  // namespace qcat
