#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "qorders/order.hpp"

namespace qorders {

// Default ceiling for any enumeration that walks residues mod p^m.
inline constexpr long long kDefaultMaxPrimePower = 1LL << 24;

// The p-primary ideal p^x (p^y Z + (z + tau) Z) of O_f, encoded as the
// integer triple (x, y, z) with 0 <= z < p^y and v_p(N(z + tau)) >= y.
// The identity (the whole order) is (0, 0, 0).
struct LocalTriple {
  long long p;
  long long x;
  long long y;
  long long z;

  friend bool operator==(const LocalTriple&, const LocalTriple&) = default;
  friend auto operator<=>(const LocalTriple&, const LocalTriple&) = default;
};

LocalTriple identity_triple(long long p);
bool is_identity(const LocalTriple& t);

// v_p of the ideal norm: N = p^(2x + y).
long long norm_exponent(const LocalTriple& t);

// Total order used for canonical atom listings and factorization multisets:
// by norm exponent, then y, then z. (p O_f sorts before the nontrivial
// norm-p^2 atoms.)
bool atom_order_less(const LocalTriple& a, const LocalTriple& b);

bool is_valid_triple(const LocalTriple& t, const OrderContext& ctx);
void require_valid_triple(const LocalTriple& t, const OrderContext& ctx);

// The monoid product. Both operands must lie in the same M_{f,p}; the result
// does too (checked). Throws std::invalid_argument on invalid input.
LocalTriple star(const LocalTriple& lhs, const LocalTriple& rhs, const OrderContext& ctx);

// Invertible iff y = 0 (a power of p O_f) or v_p(N(z + tau)) = y exactly.
bool is_invertible(const LocalTriple& t, const OrderContext& ctx);

// Atom of the full primary-ideal monoid: p O_f itself, or any (0, m, r) with
// m >= 1. Throws on the identity.
bool is_atom(const LocalTriple& t);

// Conjugate ideal: (x, y, rem(p^y - z - eps, p^y)). An involution; for an
// invertible atom A, star(A, conjugate(A)) = (norm_exponent(A), 0, 0).
LocalTriple conjugate(const LocalTriple& t, const OrderContext& ctx);

// All nontrivial atoms (0, m, r) of norm p^m, ascending in r. The trivial
// atom p O_f (norm p^2) is never included. Throws resource_error when
// p^m > max_ppow.
std::vector<LocalTriple> enumerate_atoms(const OrderContext& ctx, long long p, long long m,
                                         bool invertible_only,
                                         long long max_ppow = kDefaultMaxPrimePower);

// Closed-form count of nontrivial invertible atoms of norm p^m (m >= 1):
//   m = 2h, 1 <= h < v         : phi(p^h)            (any splitting type)
//   m = 2v                     : p^v (inert), phi(p^v) (ramified), p^(v-1)(p-2) (split)
//   m = 2v + 1                 : 0 (inert), p^v (ramified), 2 phi(p^v) (split)
//   m > 2v + 1                 : 0 (inert, ramified), 2 phi(p^v) (split)
// with v = v_p(f); every other m gives 0.
long long atom_count_closed_form(const OrderContext& ctx, long long p, long long m);

// Largest y admissible for a member of M_{f,p} (equivalently the largest
// atom norm exponent): 2v for inert p, 2v + 1 for ramified p, unbounded for
// split p.
std::optional<long long> max_norm_valuation(const OrderContext& ctx, long long p);

// Unique decomposition t = (p O_f)^n * v with v an atom or the identity:
// n = x when y >= 1, and (x - 1, p O_f) when y = 0, x >= 1.
struct NormalForm {
  long long n;
  LocalTriple v;
};
NormalForm normal_form(const LocalTriple& t);

// Classification record for an atom.
struct AtomClass {
  enum class Kind { TrivialPO, Nontrivial };
  Kind kind;
  bool invertible;
  long long norm_exp;
};
AtomClass classify_atom(const LocalTriple& t, const OrderContext& ctx);

// Image of t under the conductor-reduction isomorphism
// M_{f,p} -> M_{f',p} with f' = p^(v_p(f)): the triple (x, y, z') where
//   z' = c^{-1} (z + (eps - c eps')/2)  mod p^y,   c = f / f'.
// Preserves norm exponent, invertibility and atom status, and is a monoid
// isomorphism (property-tested).
LocalTriple reduce_conductor(const LocalTriple& t, const OrderContext& from, const OrderContext& to);

// Independent oracle for star: multiplies the two ideals as rank-2 lattices
// in the basis (1, tau) using tau^2 = eps*tau - eta, reduces the four
// generator products to Hermite normal form, and reads the standard form
// back off. Shares no code path with star.
LocalTriple lattice_oracle_mul(const LocalTriple& lhs, const LocalTriple& rhs, const OrderContext& ctx);

}  // namespace qorders
