#include "qcat/simplicial_set.hpp"

#include <algorithm>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

// All strictly decreasing words of length len with entries in [0, n-1].
void degeneracy_words(int n, int len, std::vector<std::vector<int>>& out) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == len) {
      std::vector<int> w(pick.rbegin(), pick.rend());
      out.push_back(std::move(w));
      return;
    }
    for (int j = start; j < n; ++j) {
      pick.push_back(j);
      rec(j + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

void SimplicialSet::ensure_dim(int n) {
  if (static_cast<int>(names_.size()) <= n) {
    names_.resize(n + 1);
    faces_.resize(n + 1);
  }
}

int SimplicialSet::add(int n, std::string name, std::vector<Simplex> faces) {
  if (n < 0) throw InvalidInput("negative generator dimension");
  if (static_cast<int>(faces.size()) != (n == 0 ? 0 : n + 1))
    throw InvalidInput("generator '" + name + "' of dimension " + std::to_string(n) + " needs " +
                       std::to_string(n == 0 ? 0 : n + 1) + " faces");
  for (const Simplex& f : faces) {
    if (f.dim() != n - 1 || f.gdim >= n || f.gen < 0 || f.gen >= static_cast<int>(count(f.gdim)))
      throw InvalidInput("face of '" + name + "' does not reference an existing (n-1)-simplex");
  }
  if (by_name_.count(name)) throw InvalidInput("duplicate generator name '" + name + "'");
  ensure_dim(n);
  const int g = static_cast<int>(names_[n].size());
  by_name_.emplace(name, Simplex::generator(n, g));
  names_[n].push_back(std::move(name));
  faces_[n].push_back(std::move(faces));
  if (n > bound_) bound_ = n;
  return g;
}

void SimplicialSet::set_bound(int bound, bool complete) {
  if (bound < top_dim()) throw InvalidInput("bound below the stored generators");
  bound_ = bound;
  complete_ = complete;
}

void SimplicialSet::require(int d, const char* what) const {
  if (!covers(d))
    throw BoundError(std::string(what) + ": needs simplices through dimension " + std::to_string(d) +
                     " but the data is only exact through " + std::to_string(bound_));
}

int SimplicialSet::top_dim() const {
  for (int n = static_cast<int>(names_.size()) - 1; n >= 0; --n)
    if (!names_[n].empty()) return n;
  return -1;
}

std::size_t SimplicialSet::total_generators() const {
  std::size_t t = 0;
  for (const auto& v : names_) t += v.size();
  return t;
}

std::optional<Simplex> SimplicialSet::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Simplex SimplicialSet::face(const Simplex& x, int i) const {
  const int n = x.dim();
  if (n == 0 || i < 0 || i > n) throw InvalidInput("face index out of range");
  if (x.nondegenerate()) return faces_[x.gdim][x.gen][i];
  const Monotone sigma = surj::from_degens(x.degens, x.gdim);
  const int p = x.gdim;
  Monotone rho(n);
  for (int t = 0; t < n; ++t) rho[t] = sigma[t < i ? t : t + 1];
  const int v = sigma[i];
  bool hit = false;
  for (int t : rho) hit |= (t == v);
  if (hit) return Simplex{x.gdim, x.gen, surj::to_degens(rho)};
  for (int& t : rho)
    if (t > v) --t;
  return degenerate_by(faces_[p][x.gen][v], rho);
}

Simplex SimplicialSet::act(const Simplex& x, std::span<const int> theta) const {
  const int n = x.dim();
  if (!surj::is_monotone(theta, n)) throw InvalidInput("act: operator is not monotone into [dim x]");
  const Monotone sigma = surj::from_degens(x.degens, x.gdim);
  const int m = x.gdim;
  std::vector<char> hit(m + 1, 0);
  std::vector<int> c(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    c[t] = sigma[theta[t]];
    hit[c[t]] = 1;
  }
  Simplex cur = Simplex::generator(x.gdim, x.gen);
  for (int v = m; v >= 0; --v)
    if (!hit[v]) cur = face(cur, v);
  std::vector<int> rank(m + 1, 0);
  int r = 0;
  for (int v = 0; v <= m; ++v) {
    rank[v] = r;
    r += hit[v];
  }
  Monotone rho(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) rho[t] = rank[c[t]];
  return degenerate_by(cur, rho);
}

std::vector<int> SimplicialSet::vertices(const Simplex& x) const {
  std::vector<int> out;
  out.reserve(x.dim() + 1);
  for (int i = 0; i <= x.dim(); ++i) {
    const int th[1] = {i};
    out.push_back(act(x, th).gen);
  }
  return out;
}

Simplex SimplicialSet::edge(const Simplex& x, int i, int j) const {
  const int th[2] = {i, j};
  return act(x, th);
}

std::vector<Simplex> SimplicialSet::simplices(int n) const {
  std::vector<Simplex> out;
  for (int m = 0; m <= n && m < static_cast<int>(names_.size()); ++m) {
    if (names_[m].empty()) continue;
    std::vector<std::vector<int>> words;
    degeneracy_words(n, n - m, words);
    for (int g = 0; g < static_cast<int>(names_[m].size()); ++g)
      for (const auto& w : words) out.push_back(Simplex{m, g, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> SimplicialSet::check_identities() const {
  for (int n = 1; n < static_cast<int>(names_.size()); ++n) {
    for (int g = 0; g < static_cast<int>(names_[n].size()); ++g) {
      const Simplex x = Simplex::generator(n, g);
      for (const Simplex& f : faces_[n][g]) {
        if (f.dim() != n - 1 || f.gen >= static_cast<int>(count(f.gdim)))
          return "generator '" + names_[n][g] + "' has a dangling face";
        for (std::size_t t = 0; t < f.degens.size(); ++t) {
          if (f.degens[t] < 0 || f.degens[t] > n - 2 || (t > 0 && f.degens[t] >= f.degens[t - 1]))
            return "generator '" + names_[n][g] + "' has a face with a malformed degeneracy word";
        }
      }
      if (n < 2) continue;
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          if (face(face(x, j), i) != face(face(x, i), j - 1)) {
            std::ostringstream os;
            os << "simplicial identity d" << i << " d" << j << " = d" << j - 1 << " d" << i
               << " fails on '" << names_[n][g] << "'";
            return os.str();
          }
        }
    }
  }
  return std::nullopt;
}

Simplex SimplicialMap::operator()(const Simplex& x) const {
  const Simplex& y = assign[x.gdim][x.gen];
  if (x.nondegenerate()) return y;
  return degenerate_by(y, surj::from_degens(x.degens, x.gdim));
}

std::optional<std::string> SimplicialMap::check() const {
  for (int n = 0; n <= source->top_dim(); ++n) {
    if (static_cast<int>(assign.size()) <= n || assign[n].size() != source->count(n))
      return "assignment missing generators in dimension " + std::to_string(n);
    for (int g = 0; g < static_cast<int>(source->count(n)); ++g) {
      const Simplex& y = assign[n][g];
      if (y.dim() != n) return "image of '" + source->name(n, g) + "' has the wrong dimension";
      if (y.gen < 0 || y.gen >= static_cast<int>(target->count(y.gdim)))
        return "image of '" + source->name(n, g) + "' is not a simplex of the target";
      if (n == 0) continue;
      for (int i = 0; i <= n; ++i) {
        if ((*this)(source->faces(n, g)[i]) != target->face(y, i))
          return "map does not commute with d" + std::to_string(i) + " on '" + source->name(n, g) + "'";
      }
    }
  }
  return std::nullopt;
}

SimplicialMap SimplicialMap::identity(SSetPtr x) {
  SimplicialMap m{x, x, {}};
  m.assign.resize(std::max(0, x->top_dim() + 1));
  for (int n = 0; n <= x->top_dim(); ++n)
    for (int g = 0; g < static_cast<int>(x->count(n)); ++g) m.assign[n].push_back(Simplex::generator(n, g));
  return m;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap m{f.source, g.target, {}};
  m.assign.resize(f.assign.size());
  for (std::size_t n = 0; n < f.assign.size(); ++n)
    for (const Simplex& y : f.assign[n]) m.assign[n].push_back(g(y));
  return m;
}

Subobject subobject(const SSetPtr& x, const std::function<bool(int, int)>& keep) {
  SimplicialSet out;
  std::vector<std::vector<int>> reindex(std::max(0, x->top_dim() + 1));
  SimplicialMap inc;
  inc.target = x;
  for (int n = 0; n <= x->top_dim(); ++n) {
    reindex[n].assign(x->count(n), -1);
    for (int g = 0; g < static_cast<int>(x->count(n)); ++g) {
      if (!keep(n, g)) continue;
      std::vector<Simplex> fs;
      if (n > 0) {
        for (const Simplex& f : x->faces(n, g)) {
          const int r = reindex[f.gdim][f.gen];
          if (r < 0)
            throw InvalidInput("subobject not closed under faces at '" + x->name(n, g) + "'");
          fs.push_back(Simplex{f.gdim, r, f.degens});
        }
      }
      reindex[n][g] = out.add(n, x->name(n, g), std::move(fs));
    }
  }
  out.set_bound(std::max(out.top_dim(), x->bound()), x->complete());
  inc.source = share(std::move(out));
  inc.assign.resize(reindex.size());
  for (int n = 0; n < static_cast<int>(reindex.size()); ++n)
    for (int g = 0; g < static_cast<int>(reindex[n].size()); ++g)
      if (reindex[n][g] >= 0) inc.assign[n].push_back(Simplex::generator(n, g));
  while (!inc.assign.empty() && inc.assign.back().empty()) inc.assign.pop_back();
  return Subobject{inc.source, std::move(inc), std::move(reindex)};
}

const std::vector<int> SimplexIndex::kEmpty{};

std::string face_key(std::span<const int> ids) {
  std::string k;
  k.reserve(ids.size() * 4);
  for (int i : ids) {
    k.append(reinterpret_cast<const char*>(&i), sizeof(int));
  }
  return k;
}

SimplexIndex::SimplexIndex(SSetPtr x, int max_dim) : x_(std::move(x)), max_dim_(max_dim) {
  x_->require(max_dim, "SimplexIndex");
  all_.resize(max_dim + 1);
  ids_.resize(max_dim + 1);
  faces_.resize(max_dim + 1);
  by_faces_.resize(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n) {
    all_[n] = x_->simplices(n);
    ids_[n].reserve(all_[n].size());
    for (int i = 0; i < static_cast<int>(all_[n].size()); ++i) ids_[n].emplace(all_[n][i], i);
    if (n == 0) continue;
    faces_[n].resize(all_[n].size() * (n + 1));
    for (int i = 0; i < static_cast<int>(all_[n].size()); ++i) {
      for (int k = 0; k <= n; ++k)
        faces_[n][static_cast<std::size_t>(i) * (n + 1) + k] = ids_[n - 1].at(x_->face(all_[n][i], k));
      by_faces_[n][face_key(face_ids(n, i))].push_back(i);
    }
  }
}

int SimplexIndex::id(const Simplex& s) const {
  const int n = s.dim();
  if (n > max_dim_) throw BoundError("SimplexIndex: simplex above indexed dimension");
  auto it = ids_[n].find(s);
  if (it == ids_[n].end()) throw InvalidInput("SimplexIndex: unknown simplex " + to_string(s));
  return it->second;
}

std::span<const int> SimplexIndex::with_faces(int n, std::span<const int> fids) const {
  auto it = by_faces_[n].find(face_key(fids));
  if (it == by_faces_[n].end()) return kEmpty;
  return it->second;
}

int SimplexIndex::degeneracy_id(int n_minus_1, int id, int j) const {
  return ids_[n_minus_1 + 1].at(degeneracy(all_[n_minus_1][id], j));
}

}  // namespace qcat
