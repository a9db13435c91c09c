#include "qorders/local_monoid.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "qorders/errors.hpp"

namespace qorders {

LocalTriple identity_triple(long long p) { return LocalTriple{p, 0, 0, 0}; }

bool is_identity(const LocalTriple& t) { return t.x == 0 && t.y == 0 && t.z == 0; }

long long norm_exponent(const LocalTriple& t) { return 2 * t.x + t.y; }

bool atom_order_less(const LocalTriple& a, const LocalTriple& b) {
  long long ea = norm_exponent(a), eb = norm_exponent(b);
  if (ea != eb) return ea < eb;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

bool is_valid_triple(const LocalTriple& t, const OrderContext& ctx) {
  if (t.x < 0 || t.y < 0 || t.z < 0) return false;
  if (ctx.vp_f(t.p) == 0) return false;
  if (Int(t.z) >= ipow(t.p, t.y)) return false;
  return vp(norm_form(ctx, Int(t.z)), t.p) >= t.y;
}

void require_valid_triple(const LocalTriple& t, const OrderContext& ctx) {
  if (!is_valid_triple(t, ctx))
    throw std::invalid_argument("triple (" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
                                std::to_string(t.z) + ") is not in M_{f,p} for f=" + std::to_string(ctx.f) +
                                ", p=" + std::to_string(t.p));
}

// Product (a, b, c) of (x1, y1, z1) and (x2, y2, z2):
//   g = min(y1, y2, v_p(z1 + z2 + eps))
//   e = min(g, v_p(z1 - z2), v_p(N(z1)) - y1, v_p(N(z2)) - y2)
//   a = x1 + x2 + g,  b = y1 + y2 + e - 2g
//   c = (h - t N(h)/p^g) mod p^b, with h the z of the component of larger y
//   and t any solution of t (z1 + z2 + eps)/p^g = 1 mod p^(min(y1,y2) - g).
// The result does not depend on the choice of t.
LocalTriple star(const LocalTriple& lhs, const LocalTriple& rhs, const OrderContext& ctx) {
  if (lhs.p != rhs.p) throw std::invalid_argument("star: operands live over different primes");
  require_valid_triple(lhs, ctx);
  require_valid_triple(rhs, ctx);
  const long long p = lhs.p;
  const Int eps(ctx.eps);

  const long long v1 = vp(norm_form(ctx, Int(lhs.z)), p).get();
  const long long v2 = vp(norm_form(ctx, Int(rhs.z)), p).get();
  const Int zsum = Int(lhs.z) + Int(rhs.z) + eps;
  const Valuation vsum = vp(zsum, p);

  const long long g = min(Valuation::finite(std::min(lhs.y, rhs.y)), vsum).get();

  Valuation e_val = Valuation::finite(g);
  e_val = min(e_val, vp(Int(lhs.z) - Int(rhs.z), p));
  e_val = min(e_val, Valuation::finite(v1 - lhs.y));
  e_val = min(e_val, Valuation::finite(v2 - rhs.y));
  const long long e = e_val.get();

  const long long a = lhs.x + rhs.x + g;
  const long long b = lhs.y + rhs.y + e - 2 * g;
  const long long h = (rhs.y >= lhs.y) ? rhs.z : lhs.z;
  const long long k = std::min(lhs.y, rhs.y) - g;

  const Int pg = ipow(p, g);
  Int t(0);
  if (k > 0) {
    const Int pk = ipow(p, k);
    // k > 0 forces g = v_p(z1 + z2 + eps), so the quotient is a unit mod p^k.
    auto inv = mod_inverse(rem(exact_div(zsum, pg), pk), pk);
    if (!inv) throw internal_error("star: product coefficient is not invertible");
    t = *inv;
  }
  const Int c = rem(Int(h) - t * exact_div(norm_form(ctx, Int(h)), pg), ipow(p, b));

  LocalTriple out{p, a, b, c.to_long_long()};
  if (!is_valid_triple(out, ctx)) throw internal_error("star: product left M_{f,p}");
  return out;
}

bool is_invertible(const LocalTriple& t, const OrderContext& ctx) {
  if (t.y == 0) return true;
  return vp(norm_form(ctx, Int(t.z)), t.p) == Valuation::finite(t.y);
}

bool is_atom(const LocalTriple& t) {
  if (is_identity(t)) throw std::invalid_argument("is_atom: identity is not a candidate atom");
  if (t.x == 1 && t.y == 0) return true;
  return t.x == 0 && t.y >= 1;
}

LocalTriple conjugate(const LocalTriple& t, const OrderContext& ctx) {
  const Int py = ipow(t.p, t.y);
  const Int s = rem(py - Int(t.z) - Int(ctx.eps), py);
  LocalTriple out{t.p, t.x, t.y, s.to_long_long()};
  if (!is_valid_triple(out, ctx)) throw internal_error("conjugate: image left M_{f,p}");
  return out;
}

std::vector<LocalTriple> enumerate_atoms(const OrderContext& ctx, long long p, long long m,
                                         bool invertible_only, long long max_ppow) {
  if (ctx.vp_f(p) == 0) throw std::invalid_argument("enumerate_atoms: p does not divide the conductor");
  if (m < 1) throw std::invalid_argument("enumerate_atoms: norm exponent must be >= 1");
  const Int pm = ipow(p, m);
  if (pm > Int(max_ppow))
    throw resource_error("enumerate_atoms: p^m = " + to_string(pm) + " exceeds limit " + std::to_string(max_ppow));
  std::vector<LocalTriple> out;
  const long long bound = pm.to_long_long();
  for (long long r = 0; r < bound; ++r) {
    const Valuation v = vp(norm_form(ctx, Int(r)), p);
    const bool member = v >= m;
    if (!member) continue;
    if (invertible_only && !(v == Valuation::finite(m))) continue;
    out.push_back(LocalTriple{p, 0, m, r});
  }
  return out;
}

long long atom_count_closed_form(const OrderContext& ctx, long long p, long long m) {
  const int v = ctx.vp_f(p);
  if (v == 0) throw std::invalid_argument("atom_count_closed_form: p does not divide the conductor");
  if (m < 1) throw std::invalid_argument("atom_count_closed_form: norm exponent must be >= 1");
  const SplittingType s = splitting(ctx.d_K, p);
  if (m < 2 * v) {
    if (m % 2 != 0) return 0;
    return euler_phi_prime_power(p, m / 2).to_long_long();
  }
  if (m == 2 * v) {
    switch (s) {
      case SplittingType::Inert: return ipow(p, v).to_long_long();
      case SplittingType::Ramified: return euler_phi_prime_power(p, v).to_long_long();
      case SplittingType::Split: return (ipow(p, v - 1) * Int(p - 2)).to_long_long();
    }
  }
  // m >= 2v + 1
  if (s == SplittingType::Split) return (Int(2) * euler_phi_prime_power(p, v)).to_long_long();
  if (s == SplittingType::Ramified && m == 2 * v + 1) return ipow(p, v).to_long_long();
  return 0;
}

std::optional<long long> max_norm_valuation(const OrderContext& ctx, long long p) {
  const int v = ctx.vp_f(p);
  if (v == 0) throw std::invalid_argument("max_norm_valuation: p does not divide the conductor");
  switch (splitting(ctx.d_K, p)) {
    case SplittingType::Inert: return 2LL * v;
    case SplittingType::Ramified: return 2LL * v + 1;
    case SplittingType::Split: return std::nullopt;
  }
  return std::nullopt;
}

NormalForm normal_form(const LocalTriple& t) {
  if (t.y >= 1) return NormalForm{t.x, LocalTriple{t.p, 0, t.y, t.z}};
  if (t.x >= 1) return NormalForm{t.x - 1, LocalTriple{t.p, 1, 0, 0}};
  return NormalForm{0, identity_triple(t.p)};
}

AtomClass classify_atom(const LocalTriple& t, const OrderContext& ctx) {
  if (!is_atom(t)) throw std::invalid_argument("classify_atom: not an atom");
  AtomClass c;
  c.kind = (t.y == 0) ? AtomClass::Kind::TrivialPO : AtomClass::Kind::Nontrivial;
  c.invertible = is_invertible(t, ctx);
  c.norm_exp = norm_exponent(t);
  return c;
}

LocalTriple reduce_conductor(const LocalTriple& t, const OrderContext& from, const OrderContext& to) {
  const long long p = t.p;
  const int v = from.vp_f(p);
  if (v == 0) throw std::invalid_argument("reduce_conductor: p does not divide the source conductor");
  if (to.d != from.d || Int(to.f) != ipow(p, v))
    throw std::invalid_argument("reduce_conductor: target order must have conductor p^(v_p(f)) in the same field");
  require_valid_triple(t, from);

  const Int c = exact_div(Int(from.f), Int(to.f));
  const Int py = ipow(p, t.y);
  // tau = c tau' + (eps - c eps')/2; the parenthesized quantity is always even.
  const Int shift = exact_div(Int(from.eps) - c * Int(to.eps), Int(2));
  auto cinv = mod_inverse(rem(c, py), py);
  if (!cinv) throw internal_error("reduce_conductor: cofactor not invertible mod p^y");
  const Int zp = rem(*cinv * (Int(t.z) + shift), py);

  LocalTriple out{p, t.x, t.y, zp.to_long_long()};
  if (!is_valid_triple(out, to)) throw internal_error("reduce_conductor: image left target monoid");
  return out;
}

namespace {

// Element a + b*tau of the order, for the lattice oracle.
struct Vec2 {
  Int a;
  Int b;
};

Vec2 mul_vec(const Vec2& u, const Vec2& v, const OrderContext& ctx) {
  // (a1 + b1 tau)(a2 + b2 tau), reduced by tau^2 = eps*tau - eta.
  const Int bb = u.b * v.b;
  return Vec2{u.a * v.a - bb * ctx.eta, u.a * v.b + u.b * v.a + bb * Int(ctx.eps)};
}

// Extended gcd: returns g = gcd(a, b) >= 0 with g = s*a + t*b.
void xgcd(Int a, Int b, Int& g, Int& s, Int& t) {
  Int old_r = a, r = b;
  Int old_s(1), s1(0);
  Int old_t(0), t1(1);
  while (!r.is_zero()) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < Int(0)) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

bool prime_power_exponent(Int value, long long p, long long& exp_out) {
  long long e = 0;
  while (value > Int(1)) {
    if (!(value % Int(p)).is_zero()) return false;
    value /= Int(p);
    ++e;
  }
  exp_out = e;
  return value == Int(1);
}

}  // namespace

LocalTriple lattice_oracle_mul(const LocalTriple& lhs, const LocalTriple& rhs, const OrderContext& ctx) {
  if (lhs.p != rhs.p) throw std::invalid_argument("lattice_oracle_mul: operands live over different primes");
  require_valid_triple(lhs, ctx);
  require_valid_triple(rhs, ctx);
  const long long p = lhs.p;

  const Int px1 = ipow(p, lhs.x), px2 = ipow(p, rhs.x);
  const std::array<Vec2, 2> gen1 = {Vec2{px1 * ipow(p, lhs.y), Int(0)}, Vec2{px1 * Int(lhs.z), px1}};
  const std::array<Vec2, 2> gen2 = {Vec2{px2 * ipow(p, rhs.y), Int(0)}, Vec2{px2 * Int(rhs.z), px2}};

  std::array<Vec2, 4> prod;
  int n = 0;
  for (const Vec2& u : gen1)
    for (const Vec2& v : gen2) prod[n++] = mul_vec(u, v, ctx);

  // Hermite normal form of the four generators: basis {(n0, 0), (A, m)} with
  // m = gcd of tau-coordinates, upper triangular in the basis order (1, tau),
  // positive diagonal, 0 <= A < n0.
  Vec2 pivot{Int(0), Int(0)};
  for (const Vec2& w : prod) {
    if (w.b.is_zero()) continue;
    if (pivot.b.is_zero()) {
      pivot = w;
      continue;
    }
    Int g, s, t;
    xgcd(pivot.b, w.b, g, s, t);
    pivot = Vec2{s * pivot.a + t * w.a, g};
  }
  if (pivot.b.is_zero()) throw internal_error("lattice_oracle_mul: degenerate product lattice");
  if (pivot.b < Int(0)) pivot = Vec2{-pivot.a, -pivot.b};

  Int n0(0);
  for (const Vec2& w : prod) {
    const Int q = exact_div(w.b, pivot.b);
    n0 = gcd(n0, w.a - q * pivot.a);
  }
  if (n0.is_zero()) throw internal_error("lattice_oracle_mul: product lattice has rank < 2");
  pivot.a = rem(pivot.a, n0);

  // Read the standard form p^x (p^y Z + (z + tau) Z) back off.
  long long x_exp = 0, y_exp = 0;
  if (!prime_power_exponent(pivot.b, p, x_exp))
    throw internal_error("lattice_oracle_mul: tau-content is not a p-power");
  if (!prime_power_exponent(exact_div(n0, pivot.b), p, y_exp))
    throw internal_error("lattice_oracle_mul: lattice index is not a p-power");
  const Int z = exact_div(pivot.a, pivot.b);

  LocalTriple out{p, x_exp, y_exp, z.to_long_long()};
  if (!is_valid_triple(out, ctx)) throw internal_error("lattice_oracle_mul: result is not a standard ideal");
  return out;
}

}  // namespace qorders
