#include "qcat/enumerate.hpp"

#include "qcat/errors.hpp"

namespace qcat {

namespace {

int image_id(const SimplexIndex& target, const Assignment& a, const Simplex& f) {
  const int base = a[f.gdim][f.gen];
  if (f.degens.empty()) return base;
  return target.id(degenerate_by(target.at(f.gdim, base), surj::from_degens(f.degens, f.gdim)));
}

}  // namespace

std::size_t enumerate_maps(const SimplicialSet& source, const SimplexIndex& target, const EnumOptions& opt,
                           const std::function<bool(const Assignment&)>& visit) {
  const int top = source.top_dim();
  if (top > target.max_dim())
    throw BoundError("enumerate_maps: source has generators above the indexed target dimension");
  std::vector<std::pair<int, int>> order;
  for (int n = 0; n <= top; ++n)
    for (int g = 0; g < static_cast<int>(source.count(n)); ++g) order.emplace_back(n, g);
  Assignment a(std::max(0, top + 1));
  for (int n = 0; n <= top; ++n) a[n].assign(source.count(n), -1);
  std::size_t tried = 0, visited = 0;
  bool stop = false;
  std::vector<int> fids;
  std::vector<int> all_vertices(target.size(0));
  for (int i = 0; i < static_cast<int>(all_vertices.size()); ++i) all_vertices[i] = i;

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (stop) return;
    if (pos == order.size()) {
      if (opt.accept && !opt.accept(a)) return;
      ++visited;
      if (!visit(a)) stop = true;
      return;
    }
    const auto [n, g] = order[pos];
    std::span<const int> cands;
    std::vector<int> local;
    if (n == 0) {
      cands = all_vertices;
    } else {
      local.clear();
      for (const Simplex& f : source.faces(n, g)) local.push_back(image_id(target, a, f));
      cands = target.with_faces(n, local);
    }
    int fixed = -1;
    if (n < static_cast<int>(opt.fixed.size()) && g < static_cast<int>(opt.fixed[n].size())) fixed = opt.fixed[n][g];
    for (int c : cands) {
      if (fixed >= 0 && c != fixed) continue;
      if (++tried > opt.budget) throw BudgetExceeded("map enumeration", tried);
      if (opt.filter && !opt.filter(n, g, c)) continue;
      a[n][g] = c;
      rec(pos + 1);
      if (stop) return;
    }
    a[n][g] = -1;
  };
  rec(0);
  return visited;
}

std::vector<Assignment> all_maps(const SimplicialSet& source, const SimplexIndex& target, const EnumOptions& opt) {
  std::vector<Assignment> out;
  enumerate_maps(source, target, opt, [&](const Assignment& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

SimplicialMap to_map(const SSetPtr& source, const SimplexIndex& target, const Assignment& a) {
  SimplicialMap m{source, target.ptr(), {}};
  m.assign.resize(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (int id : a[n]) m.assign[n].push_back(target.at(static_cast<int>(n), id));
  return m;
}

Assignment to_assignment(const SimplicialMap& m, const SimplexIndex& target) {
  Assignment a(m.assign.size());
  for (std::size_t n = 0; n < m.assign.size(); ++n)
    for (const Simplex& s : m.assign[n]) a[n].push_back(target.id(s));
  return a;
}

Assignment precompose(const Assignment& f, const SimplicialMap& phi, const SimplexIndex& target) {
  Assignment out(phi.assign.size());
  for (std::size_t n = 0; n < phi.assign.size(); ++n)
    for (const Simplex& s : phi.assign[n]) out[n].push_back(image_id(target, f, s));
  return out;
}

std::optional<Simplex> HomSet::find(int k, const Assignment& a) const {
  if (k < 0 || k >= static_cast<int>(lookup.size())) return std::nullopt;
  auto it = lookup[k].find(a);
  if (it == lookup[k].end()) return std::nullopt;
  return it->second;
}

HomSet build_hom(const HomShape& hs, const SimplexIndex& target, int d, const std::string& prefix) {
  HomSet out;
  out.index = std::shared_ptr<const SimplexIndex>(std::shared_ptr<const SimplexIndex>{}, &target);
  SimplicialSet x;
  out.lookup.resize(d + 1);
  out.maps.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    SSetPtr s = hs.shape(k);
    out.shapes.push_back(s);
    // Degenerate k-simplices: s_j of every (k-1)-simplex.
    if (k > 0) {
      for (int j = 0; j < k; ++j) {
        const SimplicialMap sig = hs.codegeneracy(k - 1, j);
        for (const auto& [a, simp] : out.lookup[k - 1])
          out.lookup[k].emplace(precompose(a, sig, target), degeneracy(simp, j));
      }
    }
    std::vector<SimplicialMap> cof;
    for (int i = 0; k > 0 && i <= k; ++i) cof.push_back(hs.coface(k, i));
    EnumOptions opt = hs.options ? hs.options(k, s) : EnumOptions{};
    std::size_t attempted = 0;
    std::vector<Assignment> fresh;
    try {
      enumerate_maps(*s, target, opt, [&](const Assignment& a) {
        ++attempted;
        if (!out.lookup[k].count(a)) fresh.push_back(a);
        return true;
      });
    } catch (BudgetExceeded& e) {
      throw BudgetExceeded("hom enumeration in dimension " + std::to_string(k), out.attempted + e.attempted());
    }
    out.attempted += attempted;
    for (const Assignment& a : fresh) {
      std::vector<Simplex> faces;
      for (int i = 0; k > 0 && i <= k; ++i) {
        auto it = out.lookup[k - 1].find(precompose(a, cof[i], target));
        if (it == out.lookup[k - 1].end())
          throw InvalidInput("build_hom: face of an admissible map is not admissible");
        faces.push_back(it->second);
      }
      const int id = x.add(k, prefix + std::to_string(k) + "." + std::to_string(x.count(k)), std::move(faces));
      out.lookup[k].emplace(a, Simplex::generator(k, id));
      out.maps[k].push_back(a);
    }
  }
  x.set_bound(d, false);
  out.sset = share(std::move(x));
  return out;
}

}  // namespace qcat
