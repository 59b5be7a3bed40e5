#include "qcat/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "qcat/errors.hpp"

namespace qcat {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}

// row_i += k * row_j on M; the inverse column update on Minv: col_j -= k * col_i.
void add_row(IntMatrix& m, IntMatrix& minv, IntMatrix* a, int i, int j, std::int64_t k) {
  if (k == 0) return;
  for (int c = 0; c < m.cols(); ++c) m(i, c) = add(m(i, c), mul(k, m(j, c)));
  if (a)
    for (int c = 0; c < a->cols(); ++c) (*a)(i, c) = add((*a)(i, c), mul(k, (*a)(j, c)));
  for (int r = 0; r < minv.rows(); ++r) minv(r, j) = add(minv(r, j), mul(-k, minv(r, i)));
}

void add_col(IntMatrix& m, IntMatrix& minv, IntMatrix* a, int i, int j, std::int64_t k) {
  if (k == 0) return;
  for (int r = 0; r < m.rows(); ++r) m(r, i) = add(m(r, i), mul(k, m(r, j)));
  if (a)
    for (int r = 0; r < a->rows(); ++r) (*a)(r, i) = add((*a)(r, i), mul(k, (*a)(r, j)));
  for (int c = 0; c < minv.cols(); ++c) minv(j, c) = add(minv(j, c), mul(-k, minv(i, c)));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix checked_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = IntMatrix::Zero(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = add(c(i, j), mul(a(i, k), b(k, j)));
    }
  return c;
}

SmithForm smith_normal_form(const IntMatrix& A) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  SmithForm s;
  s.D = A;
  s.U = IntMatrix::Identity(m, m);
  s.U_inv = IntMatrix::Identity(m, m);
  s.V = IntMatrix::Identity(n, n);
  s.V_inv = IntMatrix::Identity(n, n);
  IntMatrix& D = s.D;
  for (int t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the lower-right block
      int pi = -1, pj = -1;
      std::int64_t best = 0;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || std::llabs(D(i, j)) < best)) {
            best = std::llabs(D(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;
      if (pi != t) {
        D.row(t).swap(D.row(pi));
        s.U.row(t).swap(s.U.row(pi));
        s.U_inv.col(t).swap(s.U_inv.col(pi));
      }
      if (pj != t) {
        D.col(t).swap(D.col(pj));
        s.V.col(t).swap(s.V.col(pj));
        s.V_inv.row(t).swap(s.V_inv.row(pj));
      }
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const std::int64_t q = floor_div(D(i, t), D(t, t));
        add_row(D, s.U_inv, &s.U, i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const std::int64_t q = floor_div(D(t, j), D(t, t));
        add_col(D, s.V_inv, &s.V, j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold any non-divisible entry into row t
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(D, s.U_inv, &s.U, t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.row(t) *= -1;
      s.U.row(t) *= -1;
      s.U_inv.col(t) *= -1;
    }
  }
done:
  for (int t = 0; t < std::min(m, n); ++t)
    if (D(t, t) != 0) s.diagonal.push_back(D(t, t));
  return s;
}

bool SmithForm::verify(const IntMatrix& A) const {
  if (checked_product(checked_product(U, A), V) != D) return false;
  if (checked_product(U, U_inv) != IntMatrix::Identity(U.rows(), U.cols())) return false;
  if (checked_product(V, V_inv) != IntMatrix::Identity(V.rows(), V.cols())) return false;
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      if (i != j && D(i, j) != 0) return false;
  for (std::size_t k = 1; k < diagonal.size(); ++k)
    if (diagonal[k] % diagonal[k - 1] != 0) return false;
  return true;
}

IntMatrix AbelianGroupPresentation::matrix() const {
  IntMatrix a = IntMatrix::Zero(static_cast<int>(relations.size()), generators);
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (int g = 0; g < generators; ++g) a(static_cast<int>(r), g) = relations[r][g];
  return a;
}

std::vector<std::int64_t> AbelianGroupPresentation::invariant_factors() const {
  std::vector<std::int64_t> out;
  if (generators == 0) return out;
  const IntMatrix a = matrix();
  int rank = 0;
  if (a.rows() > 0) {
    SmithForm s = smith_normal_form(a);
    if (!s.verify(a)) throw std::logic_error("Smith normal form failed verification");
    for (std::int64_t d : s.diagonal)
      if (d > 1) out.push_back(d);
    rank = static_cast<int>(s.diagonal.size());
  }
  for (int f = 0; f < generators - rank; ++f) out.push_back(0);
  return out;
}

namespace {

IntMatrix boundary_matrix(const SimplicialSet& x, int n) {
  // rows: (n-1)-generators, cols: n-generators
  IntMatrix b = IntMatrix::Zero(static_cast<int>(x.count(n - 1)), static_cast<int>(x.count(n)));
  for (int g = 0; g < static_cast<int>(x.count(n)); ++g) {
    auto f = x.faces(n, g);
    for (int i = 0; i <= n; ++i)
      if (f[i].degens.empty()) b(f[i].gen, g) += (i % 2 == 0) ? 1 : -1;
  }
  return b;
}

int rank_of(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(smith_normal_form(m).diagonal.size());
}

}  // namespace

std::vector<std::int64_t> h1_invariant_factors(const SimplicialSet& x) {
  x.require(2, "h1");
  const IntMatrix d1 = boundary_matrix(x, 1), d2 = boundary_matrix(x, 2);
  const int n1 = static_cast<int>(x.count(1));
  const int r1 = rank_of(d1);
  std::vector<std::int64_t> out;
  int r2 = 0;
  if (d2.rows() > 0 && d2.cols() > 0) {
    SmithForm s = smith_normal_form(d2);
    if (!s.verify(d2)) throw std::logic_error("Smith normal form failed verification");
    for (std::int64_t d : s.diagonal)
      if (d > 1) out.push_back(d);
    r2 = static_cast<int>(s.diagonal.size());
  }
  for (int f = 0; f < n1 - r1 - r2; ++f) out.push_back(0);
  return out;
}

std::vector<int> pi0(const SimplicialSet& x) {
  const int nv = static_cast<int>(x.count(0));
  std::vector<int> p(nv);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int v) { return p[v] == v ? v : p[v] = find(p[v]); };
  for (int e = 0; e < static_cast<int>(x.count(1)); ++e) {
    auto f = x.faces(1, e);
    int a = find(f[0].gen), b = find(f[1].gen);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(nv);
  std::vector<int> label(nv, -1);
  int next = 0;
  for (int v = 0; v < nv; ++v) {
    int r = find(v);
    if (label[r] < 0) label[r] = next++;
    comp[v] = label[r];
  }
  return comp;
}

int pi0_count(const SimplicialSet& x) {
  auto c = pi0(x);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

int h0_rank(const SimplicialSet& x) { return pi0_count(x); }

AbelianGroupPresentation pi1_abelianized(const SimplicialSet& x, int basepoint, int tie_break) {
  x.require(2, "pi1_abelianized");
  const int nv = static_cast<int>(x.count(0)), ne = static_cast<int>(x.count(1));
  if (basepoint < 0 || basepoint >= nv) throw InvalidInput("pi1_abelianized: basepoint absent");
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, edge)
  for (int e = 0; e < ne; ++e) {
    auto f = x.faces(1, e);
    adj[f[1].gen].push_back({f[0].gen, e});
    adj[f[0].gen].push_back({f[1].gen, e});
  }
  if (tie_break == 1)
    for (auto& a : adj) std::reverse(a.begin(), a.end());
  std::vector<char> seen(nv, 0), tree(ne, 0);
  seen[basepoint] = 1;
  if (tie_break == 0) {
    std::vector<int> queue{basepoint};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (auto [w, e] : adj[queue[q]])
        if (!seen[w]) {
          seen[w] = 1;
          tree[e] = 1;
          queue.push_back(w);
        }
  } else {
    std::function<void(int)> dfs = [&](int v) {
      for (auto [w, e] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          tree[e] = 1;
          dfs(w);
        }
    };
    dfs(basepoint);
  }
  std::vector<int> gen_of(ne, -1);
  AbelianGroupPresentation p;
  for (int e = 0; e < ne; ++e) {
    auto f = x.faces(1, e);
    if (seen[f[0].gen] && !tree[e]) gen_of[e] = p.generators++;
  }
  for (int t = 0; t < static_cast<int>(x.count(2)); ++t) {
    auto f = x.faces(2, t);
    if (!seen[x.vertices(Simplex::generator(2, t))[0]]) continue;
    std::vector<std::int64_t> row(p.generators, 0);
    const int sign[3] = {1, -1, 1};
    bool nonzero = false;
    for (int i = 0; i < 3; ++i)
      if (f[i].degens.empty() && gen_of[f[i].gen] >= 0) {
        row[gen_of[f[i].gen]] += sign[i];
        nonzero = true;
      }
    if (nonzero) p.relations.push_back(std::move(row));
  }
  return p;
}

}  // namespace qcat
