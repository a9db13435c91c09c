#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qorders/factor_engine.hpp"
#include "qorders/local_monoid.hpp"
#include "qorders/order.hpp"

namespace qorders {

// Coproduct presentation of an ideal supported on the conductor primes:
// one local component per prime dividing f, identity components omitted.
// Primes away from the conductor generate a free monoid and are carried
// only as an abstract exponent vector elsewhere, never here.
struct GlobalIdeal {
  std::map<long long, LocalTriple> components;

  friend bool operator==(const GlobalIdeal&, const GlobalIdeal&) = default;
};

GlobalIdeal make_global(const OrderContext& ctx, const std::vector<LocalTriple>& components);
GlobalIdeal global_mul(const GlobalIdeal& a, const GlobalIdeal& b, const OrderContext& ctx);
std::map<long long, long long> global_norm_exponents(const GlobalIdeal& g);

enum class OrderCase { HalfFactorial, Squarefree, NonSquarefreeI, NonSquarefreeII };
const char* to_string(OrderCase c);

// The distance/catenary classification of the full and invertible ideal
// monoids of O_f by conductor shape:
//   HalfFactorial  : f squarefree, every prime divisor inert
//   Squarefree     : f squarefree, not half-factorial
//   NonSquarefreeI : f not squarefree, v_2(f) not in {2,3} or d_K != 1 mod 8
//   NonSquarefreeII: f not squarefree, v_2(f) in {2,3} and d_K = 1 mod 8
struct Classification {
  OrderCase kind = OrderCase::HalfFactorial;
  bool half_factorial = false;
  std::set<long long> predicted_delta;
  std::set<long long> predicted_ca_full;
  std::set<long long> predicted_ca_invertible;
  long long predicted_catenary = 0;
};
Classification classify(const OrderContext& ctx);  // requires f >= 2

// Merge per-prime window reports into a global one: distances and catenary
// sets are unions over the components, the catenary degree is the maximum.
// Unions of sets of lengths do not aggregate componentwise and are left
// empty here; use rho_k_closed_form for global elasticities.
WindowReport aggregate(const OrderContext& ctx, const std::vector<WindowReport>& per_prime);

// rho_k and the elasticity for the global ideal monoids. Unbounded as soon
// as a split prime divides f; otherwise with M = max v_p(f):
//   some ramified prime attains M : rho_k = k M + floor(k/2), rho = M + 1/2
//   otherwise                     : rho_k = k M,               rho = M
struct ElasticityResult {
  bool unbounded = false;
  long long rho_k = 0;
  long long rho_num = 0;  // rho = rho_num / rho_den
  long long rho_den = 1;
};
ElasticityResult rho_k_closed_form(const OrderContext& ctx, long long k);

// gamma = gen_one + gen_tau * tau.
struct PrincipalityResult {
  bool principal = false;
  Int gen_one = 0;
  Int gen_tau = 0;
};

// Exact principality decision for an invertible primary ideal of an
// imaginary quadratic order: the positive-definite norm form bounds the
// tau-coordinate of any generator, so the search is finite and complete.
// The budget only guards pathological inputs whose exact bound is huge.
PrincipalityResult principality_search_imaginary(const OrderContext& ctx, const LocalTriple& atom,
                                                 long long search_budget = 10'000'000);

// Verifies |u^2 - v^2 d| = target_norm exactly and that u + v sqrt(d) lies
// in the ideal target_norm Z + tau Z (which must be an invertible ideal of
// O_f). With both facts the element generates that ideal.
bool generator_identity_check(long long d, long long f, Int u, Int v, Int target_norm);

// An externally supplied principal-generator fact u + v sqrt(d), verified
// with generator_identity_check before use.
struct GeneratorClaim {
  Int u;
  Int v;
  Int target_norm;
};

struct Certificate {
  std::string kind;
  std::string detail;
};

enum class MinDeltaValue { One, Two, HalfFactorial, Unknown };
const char* to_string(MinDeltaValue v);

struct MinDeltaVerdict {
  MinDeltaValue value = MinDeltaValue::Unknown;
  std::vector<Certificate> certificates;
};

// Decides min Delta(O_f) in {1, 2} for non-half-factorial orders, under the
// structural characterization: the answer is 2 exactly when |Pic(O)| = 2,
// f is a squarefree product of ramified and inert primes with at least one
// ramified, every norm-p^3 atom at each ramified p is non-principal, and
// every invertible atom at each inert p is principal. Non-principality at a
// ramified p is certified by the quadratic-residue criterion
//   (p = 1 mod 4 and (d/p | p) = -1)  or
//   (exists prime q = 1 mod 4, q | d f, with (p | q) = -1),
// by exhaustive search when d < 0, or refuted by a verified generator claim.
// Real-quadratic principality beyond these routes is reported as unknown.
// The verdict presupposes that O itself is not half-factorial; when even the
// ideal monoid is half-factorial this is flagged instead of answered.
MinDeltaVerdict min_delta_check(const OrderContext& ctx, std::optional<PicEntry> pic,
                                long long search_budget = 10'000'000,
                                const std::vector<GeneratorClaim>& known_generators = {});

}  // namespace qorders
