#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qorders/local_monoid.hpp"

namespace qorders {

// A factorization of a fixed target into atoms, stored as a multiset sorted
// by atom_order_less. Every member passes is_atom and the star-product over
// the members equals the target.
struct Factorization {
  std::vector<LocalTriple> atoms;
  long long length() const { return static_cast<long long>(atoms.size()); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// The complete set of factorizations of one element, canonically ordered.
struct FactorizationSet {
  LocalTriple target;
  bool restricted_to_invertible;
  std::vector<Factorization> factorizations;
};

struct SweepLimits {
  long long max_ppow = kDefaultMaxPrimePower;
  long long max_factorizations = 1'000'000;
};

// All triples with norm exponent 2x + y <= bound, sorted by
// (norm exponent, x, z). Includes the identity.
std::vector<LocalTriple> enumerate_elements(const OrderContext& ctx, long long p, long long bound,
                                            bool invertible_only, const SweepLimits& limits = {});

// Complete factorization search for a non-identity target. When
// invertible_only is set the target must be invertible and only invertible
// atoms are used (the result then coincides with the unrestricted set, the
// invertible submonoid being divisor-closed). The depth-first search picks
// atoms in canonical non-decreasing order, pruned by norm divisibility
// (sum of atom norm exponents <= norm exponent of the target) and by the
// maximal length n + 1 from the normal form (p O)^n v.
FactorizationSet enumerate_factorizations(const LocalTriple& target, const OrderContext& ctx,
                                          bool invertible_only, const SweepLimits& limits = {});

// Sorted set of factorization lengths.
std::vector<long long> length_set(const FactorizationSet& fs);

// Distances between consecutive members of a sorted length set.
std::set<long long> delta_of_lengths(const std::vector<long long>& lengths);

// Distance between two factorizations of the same target: cancel the common
// multiset part, then take the larger residual cardinality. Throws when the
// two products differ.
long long distance(const Factorization& z1, const Factorization& z2, const OrderContext& ctx);

// Catenary degree c(a): the least N such that any two factorizations are
// joined by a chain with successive distances <= N; equivalently the largest
// edge of a minimum-bottleneck spanning tree on the complete distance graph
// over Z(a). Zero when |Z(a)| <= 1.
long long catenary_degree(const FactorizationSet& fs);

// Exhaustively computed invariants of one window plus the closed-form
// predictions for the ambient monoid.
struct WindowReport {
  long long d = 0;
  long long f = 0;
  long long p = 0;  // 0 for an aggregated (global) report
  long long norm_bound = 0;
  bool invertible_only = false;

  std::set<long long> delta;                         // union of Delta(L(a))
  std::set<long long> ca;                            // positive catenary degrees
  long long catenary = 0;                            // max of ca (0 if empty)
  std::map<long long, std::set<long long>> unions;   // k -> window U_k, k >= 2
  // k -> whether floor(kN/2), the top of U_k, fits under the window's length
  // cap; false means the window certainly cannot exhibit all of U_k.
  std::map<long long, bool> unions_complete;

  std::optional<long long> max_atom_norm_exp;  // N; nullopt when p splits
  long long max_length_cap = 0;                // largest length any windowed factorization can have

  bool predicted_half_factorial = false;
  std::set<long long> predicted_delta;
  std::set<long long> predicted_ca;
  long long predicted_catenary = 0;

  bool delta_match = false;
  bool ca_match = false;
};

// Exhaustive sweep over every element of norm exponent <= bound. Predictions
// come from the local half-factoriality criterion (v_p(f) = 1 and p inert)
// and the atom-census gap structure.
WindowReport window_sweep(const OrderContext& ctx, long long p, long long bound, bool invertible_only,
                          const SweepLimits& limits = {});

// Closed form for the union of sets of lengths U_l over the p-primary
// monoid: all of N>=2 for split p, otherwise the interval
// [l, floor(l*N/2)] (intersected with N>=l), N = 2 v_p(f) (inert) or
// 2 v_p(f) + 1 (ramified).
struct UnionInterval {
  bool all_integers_ge_2 = false;
  long long lo = 0;
  long long hi = 0;
};
UnionInterval unions_closed_form(const OrderContext& ctx, long long p, long long ell);

}  // namespace qorders
