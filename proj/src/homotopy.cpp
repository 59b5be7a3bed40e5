#include "qcat/homotopy.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

HoCategory ho_category(const SSetPtr& x) {
  auto idx = std::make_shared<const SimplexIndex>(x, 2);
  const int ne = static_cast<int>(idx->size(1)), nt = static_cast<int>(idx->size(2)), nv = static_cast<int>(idx->size(0));
  // left homotopy: 2-simplex (s0 b, g, f) gives f ~ g
  UnionFind uf(ne);
  for (int t = 0; t < nt; ++t) {
    auto f = idx->face_ids(2, t);
    const Simplex& d0 = idx->at(1, f[0]);
    if (!d0.degens.empty()) uf.unite(f[2], f[1]);
  }
  // Composable pairs must have a filler.
  std::vector<std::vector<int>> out_edges(nv);
  std::vector<int> esrc(ne), etgt(ne);
  for (int e = 0; e < ne; ++e) {
    auto f = idx->face_ids(1, e);
    esrc[e] = f[1];
    etgt[e] = f[0];
    out_edges[f[1]].push_back(e);
  }
  std::map<std::pair<int, int>, int> has_composite;  // (f, g) -> composite edge
  for (int t = 0; t < nt; ++t) {
    auto f = idx->face_ids(2, t);
    has_composite.emplace(std::make_pair(f[2], f[0]), f[1]);
  }
  for (int f = 0; f < ne; ++f)
    for (int g : out_edges[etgt[f]])
      if (!has_composite.count({f, g})) {
        std::ostringstream os;
        os << "Lambda^1[2] horn (" << to_string(idx->at(1, f)) << ", " << to_string(idx->at(1, g))
           << ") has no filler";
        throw NotAQuasicategory(os.str());
      }
  HoCategory ho;
  ho.index = idx;
  for (int v = 0; v < nv; ++v) ho.cat.add_object(x->name(0, v));
  ho.class_of_edge.assign(ne, -1);
  std::map<int, int> root_to_class;
  for (int v = 0; v < nv; ++v) {
    const int e = idx->id(degeneracy(Simplex::generator(0, v), 0));
    const int r = uf.find(e);
    root_to_class[r] = ho.cat.id(v);
  }
  ho.representative.assign(ho.cat.morphisms(), -1);
  for (int e = 0; e < ne; ++e) {
    const int r = uf.find(e);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end()) {
      const Simplex& s = idx->at(1, e);
      const int m = ho.cat.add_morphism(esrc[e], etgt[e], "[" + x->name(s.gdim, s.gen) + "]");
      it = root_to_class.emplace(r, m).first;
      ho.representative.push_back(e);
    }
    ho.class_of_edge[e] = it->second;
    if (ho.representative[it->second] < 0) ho.representative[it->second] = e;
  }
  // Composition from all 2-simplices, checking consistency.
  const int nm = ho.cat.morphisms();
  std::vector<int> table(static_cast<std::size_t>(nm) * nm, -1);
  for (int t = 0; t < nt; ++t) {
    auto f = idx->face_ids(2, t);
    const int cf = ho.class_of_edge[f[2]], cg = ho.class_of_edge[f[0]], ch = ho.class_of_edge[f[1]];
    int& slot = table[static_cast<std::size_t>(cg) * nm + cf];
    if (slot >= 0 && slot != ch) {
      std::ostringstream os;
      os << "composition of classes is not well defined at 2-simplex " << to_string(idx->at(2, t));
      throw NotAQuasicategory(os.str());
    }
    slot = ch;
  }
  ho.cat.fill_compose([&](int g, int f) {
    const int c = table[static_cast<std::size_t>(g) * nm + f];
    if (c < 0) throw NotAQuasicategory("no composite for a composable pair of classes");
    return c;
  });
  if (auto err = ho.cat.validate()) throw NotAQuasicategory("homotopy category: " + *err);
  return ho;
}

Tau1Presentation tau1_presentation(const SimplicialSet& x) {
  Tau1Presentation p;
  auto label = [&](const Simplex& s) {
    if (s.degens.empty()) return x.name(s.gdim, s.gen);
    return "id_" + x.name(s.gdim, s.gen);
  };
  for (int v = 0; v < static_cast<int>(x.count(0)); ++v) p.objects.push_back(x.name(0, v));
  for (int e = 0; e < static_cast<int>(x.count(1)); ++e) {
    auto f = x.faces(1, e);
    p.generators.emplace_back(x.name(1, e), x.name(0, f[1].gen), x.name(0, f[0].gen));
  }
  for (int t = 0; t < static_cast<int>(x.count(2)); ++t) {
    auto f = x.faces(2, t);
    p.relations.emplace_back(label(f[1]), label(f[2]), label(f[0]));
  }
  return p;
}

bool homotopic_edges(const SSetPtr& x, const Simplex& f, const Simplex& g) {
  return ho_category(x).homotopic(f, g);
}

bool is_equivalence_edge(const HoCategory& ho, const Simplex& f) { return ho.is_equivalence(f); }

Subobject one_full(const SSetPtr& x, const std::function<bool(const Simplex&)>& keep_edge) {
  return subobject(x, [&](int n, int g) {
    if (n == 0) return true;
    const Simplex s = Simplex::generator(n, g);
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!keep_edge(x->edge(s, i, j))) return false;
    return true;
  });
}

Subobject zero_full(const SSetPtr& x, const std::function<bool(int)>& keep) {
  return subobject(x, [&](int n, int g) {
    for (int v : x->vertices(Simplex::generator(n, g)))
      if (!keep(v)) return false;
    return true;
  });
}

Subobject maximal_kan(const SSetPtr& x, const HoCategory& ho) {
  return one_full(x, [&](const Simplex& e) { return !e.degens.empty() || ho.is_equivalence(e); });
}

Subobject maximal_kan(const SSetPtr& x) { return maximal_kan(x, ho_category(x)); }

bool natural_equivalence_check(const SimplicialMap& alpha, const SimplicialMap& pr_a, const SimplicialMap& pr_t,
                               const HoCategory& ho) {
  // Components: edges of A x Delta[1] of the form (s0 a, 01).
  const SimplicialSet& src = *alpha.source;
  for (int g = 0; g < static_cast<int>(src.count(1)); ++g) {
    const Simplex& a = pr_a.assign[1][g];
    const Simplex& t = pr_t.assign[1][g];
    if (a.gdim == 0 && t.degens.empty() && !ho.is_equivalence(alpha(Simplex::generator(1, g)))) return false;
  }
  return true;
}

}  // namespace qcat
