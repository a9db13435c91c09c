#include "qorders/factor_engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qorders/errors.hpp"

namespace qorders {

namespace {

long long multiset_distance(const Factorization& z1, const Factorization& z2) {
  // Both atom vectors are sorted; count the common part with multiplicity.
  std::size_t i = 0, j = 0, common = 0;
  while (i < z1.atoms.size() && j < z2.atoms.size()) {
    if (z1.atoms[i] == z2.atoms[j]) {
      ++common;
      ++i;
      ++j;
    } else if (atom_order_less(z1.atoms[i], z2.atoms[j])) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::max<long long>(static_cast<long long>(z1.atoms.size() - common),
                             static_cast<long long>(z2.atoms.size() - common));
}

LocalTriple product_of(const Factorization& z, long long p, const OrderContext& ctx) {
  LocalTriple acc = identity_triple(p);
  for (const LocalTriple& a : z.atoms) acc = star(acc, a, ctx);
  return acc;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<LocalTriple> enumerate_elements(const OrderContext& ctx, long long p, long long bound,
                                            bool invertible_only, const SweepLimits& limits) {
  if (ctx.vp_f(p) == 0) throw std::invalid_argument("enumerate_elements: p does not divide the conductor");
  if (bound < 0) throw std::invalid_argument("enumerate_elements: negative bound");

  long long ymax = bound;
  if (auto cap = max_norm_valuation(ctx, p)) ymax = std::min(ymax, *cap);

  std::vector<LocalTriple> out;
  for (long long y = 0; y <= ymax; ++y) {
    const Int py = ipow(p, y);
    if (py > Int(limits.max_ppow))
      throw resource_error("enumerate_elements: p^y exceeds limit " + std::to_string(limits.max_ppow));
    const long long zbound = py.to_long_long();
    for (long long z = 0; z < zbound; ++z) {
      const Valuation v = vp(norm_form(ctx, Int(z)), p);
      if (!(v >= y)) continue;
      if (invertible_only && y > 0 && !(v == Valuation::finite(y))) continue;
      for (long long x = 0; 2 * x + y <= bound; ++x) out.push_back(LocalTriple{p, x, y, z});
    }
  }
  std::sort(out.begin(), out.end(), [](const LocalTriple& a, const LocalTriple& b) {
    const long long ea = norm_exponent(a), eb = norm_exponent(b);
    if (ea != eb) return ea < eb;
    if (a.x != b.x) return a.x < b.x;
    return a.z < b.z;
  });
  return out;
}

FactorizationSet enumerate_factorizations(const LocalTriple& target, const OrderContext& ctx,
                                          bool invertible_only, const SweepLimits& limits) {
  require_valid_triple(target, ctx);
  if (is_identity(target)) throw std::invalid_argument("enumerate_factorizations: identity has no factorizations");
  if (invertible_only && !is_invertible(target, ctx))
    throw std::invalid_argument("enumerate_factorizations: invertible-only search needs an invertible target");

  const long long p = target.p;
  const long long budget = norm_exponent(target);
  const NormalForm nf = normal_form(target);
  const long long maxlen = nf.n + 1;

  // Candidate atoms of norm exponent <= budget, canonical ascending order.
  // Members of M_{f,p} have y bounded by the largest norm-form valuation, so
  // the per-m enumeration can stop early for non-split p.
  std::vector<LocalTriple> atoms;
  long long mmax = budget;
  if (auto cap = max_norm_valuation(ctx, p)) mmax = std::min(mmax, *cap);
  for (long long m = 1; m <= mmax; ++m)
    for (const LocalTriple& a : enumerate_atoms(ctx, p, m, invertible_only, limits.max_ppow)) atoms.push_back(a);
  if (budget >= 2) atoms.push_back(LocalTriple{p, 1, 0, 0});
  std::sort(atoms.begin(), atoms.end(), atom_order_less);

  FactorizationSet fs;
  fs.target = target;
  fs.restricted_to_invertible = invertible_only;

  std::vector<LocalTriple> chosen;
  auto record = [&](const std::vector<LocalTriple>& seq) {
    if (static_cast<long long>(fs.factorizations.size()) >= limits.max_factorizations)
      throw resource_error("enumerate_factorizations: factorization cap exceeded");
    fs.factorizations.push_back(Factorization{seq});
  };

  // Depth-first over multisets: indices never decrease, so each multiset is
  // produced exactly once, already sorted.
  auto rec = [&](auto&& self, std::size_t first, const LocalTriple& prod, long long exp_sum) -> void {
    for (std::size_t i = first; i < atoms.size(); ++i) {
      const long long ae = norm_exponent(atoms[i]);
      if (exp_sum + ae > budget) break;  // atoms sorted by norm exponent
      if (static_cast<long long>(chosen.size()) + 1 > maxlen) break;
      const LocalTriple next = star(prod, atoms[i], ctx);
      if (norm_exponent(next) > budget) continue;
      chosen.push_back(atoms[i]);
      if (next == target)
        record(chosen);
      else
        self(self, i, next, exp_sum + ae);
      chosen.pop_back();
    }
  };
  rec(rec, 0, identity_triple(p), 0);

  std::sort(fs.factorizations.begin(), fs.factorizations.end(),
            [](const Factorization& a, const Factorization& b) {
              if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
              return std::lexicographical_compare(a.atoms.begin(), a.atoms.end(), b.atoms.begin(),
                                                  b.atoms.end(), atom_order_less);
            });
  if (fs.factorizations.empty())
    throw internal_error("enumerate_factorizations: no factorization found for a non-identity element");
  return fs;
}

std::vector<long long> length_set(const FactorizationSet& fs) {
  std::set<long long> lengths;
  for (const Factorization& z : fs.factorizations) lengths.insert(z.length());
  return {lengths.begin(), lengths.end()};
}

std::set<long long> delta_of_lengths(const std::vector<long long>& lengths) {
  std::set<long long> out;
  for (std::size_t i = 1; i < lengths.size(); ++i) out.insert(lengths[i] - lengths[i - 1]);
  return out;
}

long long distance(const Factorization& z1, const Factorization& z2, const OrderContext& ctx) {
  if (z1.atoms.empty() || z2.atoms.empty()) throw std::invalid_argument("distance: empty factorization");
  const long long p = z1.atoms.front().p;
  if (product_of(z1, p, ctx) != product_of(z2, p, ctx))
    throw std::invalid_argument("distance: factorizations have different targets");
  return multiset_distance(z1, z2);
}

long long catenary_degree(const FactorizationSet& fs) {
  const int n = static_cast<int>(fs.factorizations.size());
  if (n <= 1) return 0;
  struct Edge {
    long long w;
    int a, b;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({multiset_distance(fs.factorizations[i], fs.factorizations[j]), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.w < b.w; });
  DisjointSet ds(n);
  long long bottleneck = 0;
  int joined = 0;
  for (const Edge& e : edges) {
    if (ds.unite(e.a, e.b)) {
      bottleneck = std::max(bottleneck, e.w);
      if (++joined == n - 1) break;
    }
  }
  return bottleneck;
}

namespace {

// Largest gap in the set of invertible-atom norm exponents, sharpened by the
// v_2(f) >= 4 split-2 bound; empty (0) in the half-factorial case.
long long predicted_sup_delta(const OrderContext& ctx, long long p) {
  const int v = ctx.vp_f(p);
  const SplittingType s = splitting(ctx.d_K, p);
  if (v == 1 && s == SplittingType::Inert) return 0;
  if (p == 2 && s == SplittingType::Split && (v == 2 || v == 3)) return 3;
  return v >= 2 ? 2 : 1;
}

}  // namespace

WindowReport window_sweep(const OrderContext& ctx, long long p, long long bound, bool invertible_only,
                          const SweepLimits& limits) {
  WindowReport rep;
  rep.d = ctx.d;
  rep.f = ctx.f;
  rep.p = p;
  rep.norm_bound = bound;
  rep.invertible_only = invertible_only;
  rep.max_atom_norm_exp = max_norm_valuation(ctx, p);
  // A length-l factorization forces norm exponent >= 2l - 1 in the full
  // monoid (P has norm p) and >= 2l in the invertible one (no invertible
  // atom has norm exponent 1).
  rep.max_length_cap = invertible_only ? bound / 2 : (bound + 1) / 2;

  for (const LocalTriple& a : enumerate_elements(ctx, p, bound, invertible_only, limits)) {
    if (is_identity(a)) continue;
    const FactorizationSet fs = enumerate_factorizations(a, ctx, invertible_only, limits);
    const std::vector<long long> lengths = length_set(fs);
    for (long long gap : delta_of_lengths(lengths)) rep.delta.insert(gap);
    const long long c = catenary_degree(fs);
    if (c > 0) rep.ca.insert(c);
    for (long long k : lengths) {
      if (k < 2) continue;
      rep.unions[k].insert(lengths.begin(), lengths.end());
    }
  }
  rep.catenary = rep.ca.empty() ? 0 : *rep.ca.rbegin();

  for (const auto& [k, uk] : rep.unions) {
    (void)uk;
    rep.unions_complete[k] =
        rep.max_atom_norm_exp.has_value() && (k * *rep.max_atom_norm_exp) / 2 <= rep.max_length_cap;
  }

  const long long sup = predicted_sup_delta(ctx, p);
  rep.predicted_half_factorial = (sup == 0);
  if (sup == 0) {
    rep.predicted_ca = invertible_only ? std::set<long long>{2} : std::set<long long>{1, 2};
    rep.predicted_catenary = 2;
  } else {
    for (long long g = 1; g <= sup; ++g) rep.predicted_delta.insert(g);
    for (long long c = invertible_only ? 2 : 1; c <= 2 + sup; ++c) rep.predicted_ca.insert(c);
    rep.predicted_catenary = 2 + sup;
  }
  rep.delta_match = rep.delta == rep.predicted_delta;
  rep.ca_match = rep.ca == rep.predicted_ca;
  return rep;
}

UnionInterval unions_closed_form(const OrderContext& ctx, long long p, long long ell) {
  if (ell < 2) throw std::invalid_argument("unions_closed_form: need l >= 2");
  UnionInterval out;
  const auto cap = max_norm_valuation(ctx, p);
  if (!cap) {
    out.all_integers_ge_2 = true;
    return out;
  }
  out.lo = ell;
  out.hi = (ell * *cap) / 2;
  return out;
}

}  // namespace qorders
