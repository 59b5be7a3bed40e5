#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcat/category.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Homotopy category of a simplicial set that is a quasicategory through
/// dimension 2. Objects are vertices; morphisms are classes of edges.
struct HoCategory {
  FinCategory cat;
  /// Class (morphism of `cat`) of every edge id of the index (dimension 1).
  std::vector<int> class_of_edge;
  /// Representative edge id for every class.
  std::vector<int> representative;
  std::shared_ptr<const SimplexIndex> index;

  int class_of(const Simplex& edge) const { return class_of_edge[index->id(edge)]; }
  bool homotopic(const Simplex& f, const Simplex& g) const { return class_of(f) == class_of(g); }
  bool is_equivalence(const Simplex& f) const { return cat.is_iso(class_of(f)); }
};

/// Throws NotAQuasicategory (with the first unfillable Lambda^1[2] horn) when a
/// composable pair has no composite, or when 2-simplices give conflicting
/// composites of classes.
HoCategory ho_category(const SSetPtr& x);

/// Presentation of the fundamental category: generators are edges, relations
/// d1 = d0 o d2 for each nondegenerate 2-simplex.
struct Tau1Presentation {
  std::vector<std::string> objects;
  std::vector<std::tuple<std::string, std::string, std::string>> generators;  // name, src, tgt
  std::vector<std::tuple<std::string, std::string, std::string>> relations;   // composite = second o first
};
Tau1Presentation tau1_presentation(const SimplicialSet& x);

bool homotopic_edges(const SSetPtr& x, const Simplex& f, const Simplex& g);
bool is_equivalence_edge(const HoCategory& ho, const Simplex& f);

/// The 1-full subobject on equivalence edges.
Subobject maximal_kan(const SSetPtr& x, const HoCategory& ho);
Subobject maximal_kan(const SSetPtr& x);

/// 1-full subobject on the edges accepted by `keep_edge` (all higher
/// generators whose edges are all kept).
Subobject one_full(const SSetPtr& x, const std::function<bool(const Simplex& edge)>& keep_edge);
/// 0-full subobject on the vertices accepted by `keep`.
Subobject zero_full(const SSetPtr& x, const std::function<bool(int vertex)>& keep);

/// A natural transformation alpha : A x Delta[1] -> X is an equivalence iff
/// every component alpha(a, -) is an equivalence edge.
bool natural_equivalence_check(const SimplicialMap& alpha, const SimplicialMap& pr_a, const SimplicialMap& pr_t,
                               const HoCategory& ho);

}  // namespace qcat
