#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcat/simplex.hpp"

namespace qcat {

/// A finitely generated simplicial set stored as nondegenerate generators per
/// dimension together with their faces in normal form.
///
/// The data is exact through `bound()`. When `complete()` holds there are no
/// nondegenerate simplices above the stored ones, so every dimension is
/// available. Degenerate simplices are never stored.
class SimplicialSet {
 public:
  SimplicialSet() = default;

  /// Appends a generator of dimension n. `faces` must have n + 1 entries of
  /// dimension n - 1 referring to already-added generators.
  int add(int n, std::string name, std::vector<Simplex> faces = {});
  void set_bound(int bound, bool complete);

  int bound() const { return bound_; }
  bool complete() const { return complete_; }
  bool covers(int d) const { return complete_ || d <= bound_; }
  /// Throws BoundError unless the data is exact through dimension d.
  void require(int d, const char* what) const;

  /// Highest dimension holding a generator, -1 when empty.
  int top_dim() const;
  std::size_t count(int n) const {
    return n >= 0 && n < static_cast<int>(names_.size()) ? names_[n].size() : 0;
  }
  std::size_t total_generators() const;
  const std::string& name(int n, int g) const { return names_[n][g]; }
  std::optional<Simplex> find(const std::string& name) const;
  std::span<const Simplex> faces(int n, int g) const { return faces_[n][g]; }

  /// theta^* x for a monotone theta : [k] -> [dim x].
  Simplex act(const Simplex& x, std::span<const int> theta) const;
  Simplex face(const Simplex& x, int i) const;
  /// Vertex generator indices of x, in order.
  std::vector<int> vertices(const Simplex& x) const;
  /// The edge of x spanned by its vertices i < j (or a degenerate edge if i == j).
  Simplex edge(const Simplex& x, int i, int j) const;

  /// All simplices of dimension n (nondegenerate and degenerate), sorted.
  std::vector<Simplex> simplices(int n) const;

  /// Checks d_i d_j = d_{j-1} d_i on every generator and that all face
  /// references exist. Returns a description of the first violation.
  std::optional<std::string> check_identities() const;

  bool operator==(const SimplicialSet&) const = default;

 private:
  void ensure_dim(int n);

  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;
  std::unordered_map<std::string, Simplex> by_name_;
  int bound_ = 0;
  bool complete_ = true;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr share(SimplicialSet x) { return std::make_shared<const SimplicialSet>(std::move(x)); }

/// A map of simplicial sets given by the image of every source generator.
struct SimplicialMap {
  SSetPtr source;
  SSetPtr target;
  std::vector<std::vector<Simplex>> assign;

  Simplex operator()(const Simplex& x) const;
  /// Verifies that assignments commute with faces. Returns the first violation.
  std::optional<std::string> check() const;

  static SimplicialMap identity(SSetPtr x);
  bool operator==(const SimplicialMap& o) const { return assign == o.assign; }
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// A sub-simplicial set on the generators accepted by `keep`, together with
/// the inclusion and the index translation old -> new (-1 when dropped).
struct Subobject {
  SSetPtr sset;
  SimplicialMap inclusion;
  std::vector<std::vector<int>> reindex;

  Simplex restrict(const Simplex& x) const {
    return Simplex{x.gdim, reindex[x.gdim][x.gen], x.degens};
  }
  bool contains(const Simplex& x) const { return reindex[x.gdim][x.gen] >= 0; }
};

/// Throws InvalidInput if the kept generators are not closed under faces.
Subobject subobject(const SSetPtr& x, const std::function<bool(int, int)>& keep);

/// Dense numbering of every simplex of a simplicial set through a dimension,
/// with face tables and lookups by face tuple. The workhorse of enumeration.
class SimplexIndex {
 public:
  SimplexIndex(SSetPtr x, int max_dim);

  const SimplicialSet& sset() const { return *x_; }
  const SSetPtr& ptr() const { return x_; }
  int max_dim() const { return max_dim_; }
  std::size_t size(int n) const { return all_[n].size(); }
  const Simplex& at(int n, int id) const { return all_[n][id]; }
  int id(const Simplex& s) const;
  std::span<const int> face_ids(int n, int id) const {
    return {faces_[n].data() + static_cast<std::size_t>(id) * (n + 1), static_cast<std::size_t>(n + 1)};
  }
  /// Ids of n-simplices with exactly the given faces, ascending (lex order).
  std::span<const int> with_faces(int n, std::span<const int> face_ids) const;
  /// s_j of an (n-1)-simplex id, as an n-simplex id (needs n <= max_dim).
  int degeneracy_id(int n_minus_1, int id, int j) const;

 private:
  SSetPtr x_;
  int max_dim_;
  std::vector<std::vector<Simplex>> all_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> ids_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::unordered_map<std::string, std::vector<int>>> by_faces_;
  static const std::vector<int> kEmpty;
};

std::string face_key(std::span<const int> ids);

}  // namespace qcat
