#include "qorders/arith.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qorders/errors.hpp"

namespace qorders {

std::string Int::to_string() const {
  if (v_ == 0) return "0";
  __int128 v = v_;
  bool neg = v < 0;
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    if (d < 0) d = -d;
    digits.push_back(static_cast<char>('0' + d));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(Int v) { return v.to_string(); }

std::ostream& operator<<(std::ostream& os, Int v) { return os << v.to_string(); }

long long Valuation::get() const {
  if (inf_) throw std::domain_error("Valuation: infinite valuation has no finite value");
  return v_;
}

namespace {

using u128 = unsigned __int128;

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<u128>(a) * static_cast<u128>(b) % static_cast<u128>(m));
}

long long powmod(long long base, long long exp, long long m) {
  long long r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

void require_prime(long long p, const char* who) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p = " + std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  // Deterministic witness set for all 64-bit inputs.
  static constexpr long long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long long q : kWitnesses) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (long long a : kWitnesses) {
    long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Valuation vp(Int x, long long p) {
  require_prime(p, "vp");
  if (x.is_zero()) return Valuation::infinite();
  long long k = 0;
  Int q(p);
  while ((x % q).is_zero()) {
    x /= q;
    ++k;
  }
  return Valuation::finite(k);
}

Int rem(Int x, Int y) {
  if (y < Int(1)) throw std::invalid_argument("rem: modulus must be >= 1");
  Int r = x % y;
  if (r < Int(0)) r += y;
  return r;
}

std::optional<Int> mod_inverse(Int t, Int m) {
  if (m < Int(1)) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == Int(1)) return Int(0);
  // Extended Euclid on (t mod m, m).
  Int a = rem(t, m), b = m;
  Int x0(1), x1(0);
  while (!b.is_zero()) {
    Int q = a / b;
    Int a2 = b;
    b = a - q * b;
    a = a2;
    Int x2 = x0 - q * x1;
    x0 = x1;
    x1 = x2;
  }
  if (a != Int(1)) return std::nullopt;
  return rem(x0, m);
}

int kronecker(Int a, long long p) {
  require_prime(p, "kronecker");
  if (p == 2) {
    Int r = rem(a, Int(8));
    if (r.is_even()) return 0;
    return (r == Int(1) || r == Int(7)) ? 1 : -1;
  }
  long long r = rem(a, Int(p)).to_long_long();
  if (r == 0) return 0;
  long long e = powmod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

PrimePower::PrimePower(long long p_, int n_) : p(p_), n(n_) {
  require_prime(p, "PrimePower");
  if (n < 0) throw std::invalid_argument("PrimePower: exponent must be >= 0");
  (void)ipow(p, n);  // representability check
}

Int PrimePower::value() const { return ipow(p, n); }

bool is_square_mod_ppow(Int a, const PrimePower& modulus) {
  const long long p = modulus.p;
  const int n = modulus.n;
  if (n == 0) return true;
  if (a.is_zero()) return true;
  Valuation va = vp(a, p);
  long long k = va.get();
  if (k >= n) return true;
  if (k % 2 != 0) return false;
  Int c = exact_div(a, ipow(p, k));
  long long l = n - k;  // need c to be a square mod p^l
  if (p != 2) return kronecker(c, p) == 1;
  if (l == 1) return true;
  if (l == 2) return rem(c, Int(4)) == Int(1);
  return rem(c, Int(8)) == Int(1);
}

long long count_roots_gl(Int c, long long p, int ell) {
  require_prime(p, "count_roots_gl");
  if (ell < 1) throw std::invalid_argument("count_roots_gl: exponent must be >= 1");
  if ((rem(c, Int(p))).is_zero()) throw std::invalid_argument("count_roots_gl: c must be coprime to p");
  if (p == 2) {
    if (ell == 1) return 1;
    if (ell == 2) return rem(c, Int(4)) == Int(1) ? 2 : 0;
    return rem(c, Int(8)) == Int(1) ? 4 : 0;
  }
  return kronecker(c, p) == 1 ? 2 : 0;
}

long long count_valuation_exact(Int a, long long p, int m) {
  require_prime(p, "count_valuation_exact");
  if (a < Int(1)) throw std::invalid_argument("count_valuation_exact: a must be >= 1");
  if (m < 1) throw std::invalid_argument("count_valuation_exact: m must be >= 1");
  const long long va = vp(a, p).get();
  const Int c = exact_div(a, ipow(p, va));
  if (m < va) {
    if (m % 2 != 0) return 0;
    return euler_phi_prime_power(p, m / 2).to_long_long();
  }
  if (m == va) {
    if (is_square_mod_ppow(a, PrimePower(p, m + 1))) {
      // m is even in this branch
      if (p == 2) return ipow(2, m / 2 - 1).to_long_long();
      return (ipow(p, m / 2 - 1) * Int(p - 2)).to_long_long();
    }
    return ipow(p, m / 2).to_long_long();
  }
  // m > v_p(a)
  if (!is_square_mod_ppow(a, PrimePower(p, m))) return 0;
  const long long k = m - va;  // va is even here
  const long long gk = count_roots_gl(c, p, static_cast<int>(k));
  const long long gk1 = count_roots_gl(c, p, static_cast<int>(k + 1));
  if (va >= 2) return (ipow(p, va / 2 - 1) * Int(p * gk - gk1)).to_long_long();
  // v_p(a) = 0. For p = 2 the division by p is exact and the closed form
  // survives; for odd p the count is not a function of the g's alone, so the
  // two square roots mod p^(m+1) are lifted explicitly (Hensel) and
  // N = g_m - |{x in [0, p^m) : x^2 = a mod p^(m+1)}|.
  if (p == 2) return exact_div(Int(2 * gk - gk1), Int(2)).to_long_long();
  Int root(0);
  for (long long r = 1; r < p; ++r)
    if (rem(Int(r) * Int(r) - a, Int(p)).is_zero()) {
      root = Int(r);
      break;
    }
  Int mod(p);
  for (int i = 1; i <= m; ++i) {
    // root^2 = a mod p^i; adjust to hold mod p^(i+1)
    const Int step = exact_div(rem(a - root * root, mod * Int(p)), mod);
    const Int t = rem(step * *mod_inverse(Int(2) * root, Int(p)), Int(p));
    root += t * mod;
    mod *= Int(p);
  }
  const Int pm = ipow(p, m);
  long long in_range = 0;
  if (root < pm) ++in_range;
  if (mod - root < pm) ++in_range;
  return gk - in_range;
}

Int ipow(long long base, long long exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  Int r(1), b(base);
  while (exp > 0) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return r;
}

Int euler_phi_prime_power(long long p, long long h) {
  if (h < 0) throw std::invalid_argument("euler_phi_prime_power: negative exponent");
  if (h == 0) return Int(1);
  return ipow(p, h) - ipow(p, h - 1);
}

Int gcd(Int a, Int b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int exact_div(Int a, Int b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (!(a % b).is_zero()) throw internal_error("exact_div: " + to_string(a) + " not divisible by " + to_string(b));
  return a / b;
}

Int isqrt(Int n) {
  if (n < Int(0)) throw std::invalid_argument("isqrt: negative input");
  if (n.is_zero()) return Int(0);
  // Newton iteration with a floating seed, then exact fixup.
  long double approx = sqrtl(static_cast<long double>(n.value()));
  Int x = Int::raw(static_cast<__int128>(approx));
  if (x < Int(1)) x = Int(1);
  for (int i = 0; i < 64; ++i) {
    Int nx = (x + n / x) / Int(2);
    if (nx >= x) break;
    x = nx;
  }
  while (x * x > n) x -= Int(1);
  while ((x + Int(1)) * (x + Int(1)) <= n) x += Int(1);
  return x;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: input must be >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace qorders
