#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qorders/checked_int.hpp"

namespace qorders {

// p-adic valuation value; v_p(0) is the distinguished infinite element, kept
// apart from every finite value so that min-expressions treat it correctly.
class Valuation {
 public:
  static constexpr Valuation infinite() { return Valuation(true, 0); }
  static constexpr Valuation finite(long long k) { return Valuation(false, k); }

  constexpr bool is_finite() const { return !inf_; }
  constexpr bool is_infinite() const { return inf_; }
  long long get() const;  // throws std::domain_error when infinite

  // Infinite absorbs: inf - k = inf.
  Valuation minus(long long k) const { return inf_ ? *this : finite(v_ - k); }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr bool operator<(Valuation a, Valuation b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator>=(Valuation a, Valuation b) { return !(a < b); }
  friend constexpr bool operator>=(Valuation a, long long b) { return a.inf_ || a.v_ >= b; }
  friend constexpr Valuation min(Valuation a, Valuation b) { return a < b ? a : b; }

 private:
  constexpr Valuation(bool inf, long long v) : inf_(inf), v_(v) {}
  bool inf_;
  long long v_;
};

// A validated prime power p^n. Construction checks that p is prime (by a
// deterministic Miller-Rabin valid for 64-bit inputs), n >= 0, and that p^n
// is representable.
struct PrimePower {
  long long p;
  int n;
  PrimePower(long long p_, int n_);
  Int value() const;
};

bool is_prime(long long n);

// Largest k with p^k | x; Valuation::infinite() for x = 0.
Valuation vp(Int x, long long p);

// Unique residue of x in [0, y-1]; correct for negative x. Requires y >= 1.
Int rem(Int x, Int y);

// Inverse of t modulo m in [0, m-1], or nullopt when gcd(t, m) != 1.
// By convention mod_inverse(t, 1) = 0. Requires m >= 1.
std::optional<Int> mod_inverse(Int t, Int m);

// Kronecker symbol (a/p) for prime p. For odd p this is the Legendre symbol;
// for p = 2 it is 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
int kronecker(Int a, long long p);

// Whether a is a square modulo p^n. Writing a = p^k c with gcd(c, p) = 1,
// this holds iff k >= n, or k is even and c is a square modulo p^(n-k):
//   odd p : (c/p) = 1
//   p = 2 : n-k = 1, or (n-k = 2 and c = 1 mod 4), or (n-k >= 3 and c = 1 mod 8)
bool is_square_mod_ppow(Int a, const PrimePower& modulus);

// |{y in [0, p^l - 1] : y^2 = c mod p^l}| for gcd(c, p) = 1, via the closed
// form table {4, 2, 1, 0}.
long long count_roots_gl(Int c, long long p, int ell);

// |{x in [0, p^m - 1] : v_p(x^2 - a) = m}| for a >= 1, m >= 1, computed by
// the closed-form case split on m versus v_p(a).
long long count_valuation_exact(Int a, long long p, int m);

// base^exp with overflow checking; exp >= 0.
Int ipow(long long base, long long exp);

// Euler phi of p^h (phi(1) = 1).
Int euler_phi_prime_power(long long p, long long h);

Int gcd(Int a, Int b);

// a / b, throwing internal_error unless b | a.
Int exact_div(Int a, Int b);

// Floor of sqrt(n) for n >= 0.
Int isqrt(Int n);

// Trial-division factorization of n >= 1 into (prime, exponent) pairs,
// ascending. Adequate for desk-scale conductors and discriminants.
std::vector<std::pair<long long, int>> factorize(long long n);

}  // namespace qorders
