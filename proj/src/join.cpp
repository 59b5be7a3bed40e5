#include "qcat/join.hpp"

#include <algorithm>

#include "qcat/errors.hpp"

namespace qcat {

Simplex JoinSet::pair(const std::optional<Simplex>& a, const std::optional<Simplex>& b) const {
  if (!a && !b) throw InvalidInput("join pair: both sides empty");
  if (!b) return inc_left(*a);
  if (!a) return inc_right(*b);
  auto it = pair_gen_.find({Simplex::generator(a->gdim, a->gen), Simplex::generator(b->gdim, b->gen)});
  if (it == pair_gen_.end()) throw BoundError("join pair: simplex above the computed dimension");
  const int n = a->gdim + b->gdim + 1;
  std::vector<int> degens;
  for (int j : b->degens) degens.push_back(j + a->dim() + 1);
  for (int j : a->degens) degens.push_back(j);
  return Simplex{n, it->second, std::move(degens)};
}

std::pair<std::optional<Simplex>, std::optional<Simplex>> JoinSet::split(const Simplex& s) const {
  const auto& [ga, gb] = parts[s.gdim][s.gen];
  if (!gb) return {Simplex{ga->gdim, ga->gen, s.degens}, std::nullopt};
  if (!ga) return {std::nullopt, Simplex{gb->gdim, gb->gen, s.degens}};
  const Monotone sigma = surj::from_degens(s.degens, s.gdim);
  int last_a = -1;
  for (int t = 0; t < static_cast<int>(sigma.size()); ++t)
    if (sigma[t] <= ga->gdim) last_a = t;
  Simplex a{ga->gdim, ga->gen, {}}, b{gb->gdim, gb->gen, {}};
  for (int j : s.degens) {
    if (j < last_a)
      a.degens.push_back(j);
    else
      b.degens.push_back(j - last_a - 1);
  }
  return {a, b};
}

JoinSet join(const SSetPtr& a, const SSetPtr& b, int d) {
  const int ta = a->top_dim(), tb = b->top_dim();
  const int full = (ta < 0) ? tb : (tb < 0 ? ta : ta + tb + 1);
  bool complete;
  if (d < 0) {
    if (!a->complete() || !b->complete()) throw BoundError("join: unbounded join of incomplete sets");
    d = std::max(0, full);
    complete = true;
  } else {
    a->require(d, "join");
    b->require(d, "join");
    complete = a->complete() && b->complete() && d >= full;
  }
  JoinSet out;
  out.left = a;
  out.right = b;
  SimplicialSet x;
  std::vector<std::vector<Simplex>> la(std::max(0, ta + 1)), rb(std::max(0, tb + 1));
  // generator id of a pure-left / pure-right generator
  std::vector<std::vector<int>> left_id(std::max(0, ta + 1)), right_id(std::max(0, tb + 1));
  out.parts.resize(d + 1);
  auto as_pair = [&](const Simplex& fa, const Simplex& gb_) {
    const int id = out.pair_gen_.at({Simplex::generator(fa.gdim, fa.gen), gb_});
    std::vector<int> degens;
    for (int j : fa.degens) degens.push_back(j);
    return Simplex{fa.gdim + gb_.gdim + 1, id, degens};
  };
  auto as_pair_b = [&](const Simplex& ga_, const Simplex& fb) {
    const int id = out.pair_gen_.at({ga_, Simplex::generator(fb.gdim, fb.gen)});
    std::vector<int> degens;
    for (int j : fb.degens) degens.push_back(j + ga_.gdim + 1);
    return Simplex{ga_.gdim + fb.gdim + 1, id, degens};
  };
  auto lift_left = [&](const Simplex& s) { return Simplex{s.gdim, left_id[s.gdim][s.gen], s.degens}; };
  auto lift_right = [&](const Simplex& s) { return Simplex{s.gdim, right_id[s.gdim][s.gen], s.degens}; };
  for (int n = 0; n <= d; ++n) {
    if (n <= ta) {
      for (int g = 0; g < static_cast<int>(a->count(n)); ++g) {
        std::vector<Simplex> faces;
        for (const Simplex& f : a->faces(n, g)) faces.push_back(lift_left(f));
        left_id[n].push_back(x.add(n, "L" + a->name(n, g), std::move(faces)));
        out.parts[n].push_back({Simplex::generator(n, g), std::nullopt});
      }
    }
    if (n <= tb) {
      for (int g = 0; g < static_cast<int>(b->count(n)); ++g) {
        std::vector<Simplex> faces;
        for (const Simplex& f : b->faces(n, g)) faces.push_back(lift_right(f));
        right_id[n].push_back(x.add(n, "R" + b->name(n, g), std::move(faces)));
        out.parts[n].push_back({std::nullopt, Simplex::generator(n, g)});
      }
    }
    for (int i = 0; i <= std::min(n - 1, ta); ++i) {
      const int j = n - 1 - i;
      if (j > tb) continue;
      for (int ga = 0; ga < static_cast<int>(a->count(i)); ++ga)
        for (int gb = 0; gb < static_cast<int>(b->count(j)); ++gb) {
          const Simplex sa = Simplex::generator(i, ga), sb = Simplex::generator(j, gb);
          std::vector<Simplex> faces;
          for (int k = 0; k <= n; ++k) {
            if (k <= i)
              faces.push_back(i == 0 ? lift_right(sb) : as_pair(a->face(sa, k), sb));
            else
              faces.push_back(j == 0 ? lift_left(sa) : as_pair_b(sa, b->face(sb, k - i - 1)));
          }
          const int id = x.add(n, "(" + a->name(i, ga) + "*" + b->name(j, gb) + ")", std::move(faces));
          out.pair_gen_.emplace(std::make_pair(sa, sb), id);
          out.parts[n].push_back({sa, sb});
        }
    }
  }
  while (!out.parts.empty() && out.parts.back().empty()) out.parts.pop_back();
  x.set_bound(std::max(d, x.top_dim()), complete);
  out.sset = share(std::move(x));
  for (int n = 0; n <= ta && n < static_cast<int>(left_id.size()); ++n)
    for (int id : left_id[n]) la[n].push_back(Simplex::generator(n, id));
  for (int n = 0; n <= tb && n < static_cast<int>(right_id.size()); ++n)
    for (int id : right_id[n]) rb[n].push_back(Simplex::generator(n, id));
  out.inc_left = SimplicialMap{a, out.sset, std::move(la)};
  out.inc_right = SimplicialMap{b, out.sset, std::move(rb)};
  return out;
}

SimplicialMap join_map(const JoinSet& source, const JoinSet& target, const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap m{source.sset, target.sset, {}};
  m.assign.resize(source.parts.size());
  for (std::size_t n = 0; n < source.parts.size(); ++n)
    for (const auto& [pa, pb] : source.parts[n])
      m.assign[n].push_back(target.pair(pa ? std::optional<Simplex>(f(*pa)) : std::nullopt,
                                        pb ? std::optional<Simplex>(g(*pb)) : std::nullopt));
  return m;
}

}  // namespace qcat
