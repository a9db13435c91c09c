#include "qorders/global_monoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "qorders/errors.hpp"

namespace qorders {

GlobalIdeal make_global(const OrderContext& ctx, const std::vector<LocalTriple>& components) {
  GlobalIdeal g;
  for (const LocalTriple& t : components) {
    if (ctx.vp_f(t.p) == 0) throw std::invalid_argument("make_global: component prime does not divide f");
    require_valid_triple(t, ctx);
    if (is_identity(t)) continue;
    if (!g.components.emplace(t.p, t).second)
      throw std::invalid_argument("make_global: duplicate component for p = " + std::to_string(t.p));
  }
  return g;
}

GlobalIdeal global_mul(const GlobalIdeal& a, const GlobalIdeal& b, const OrderContext& ctx) {
  GlobalIdeal out = a;
  for (const auto& [p, t] : b.components) {
    auto it = out.components.find(p);
    if (it == out.components.end()) {
      out.components.emplace(p, t);
    } else {
      LocalTriple prod = star(it->second, t, ctx);
      if (is_identity(prod))
        out.components.erase(it);
      else
        it->second = prod;
    }
  }
  return out;
}

std::map<long long, long long> global_norm_exponents(const GlobalIdeal& g) {
  std::map<long long, long long> out;
  for (const auto& [p, t] : g.components) out[p] = norm_exponent(t);
  return out;
}

const char* to_string(OrderCase c) {
  switch (c) {
    case OrderCase::HalfFactorial: return "half_factorial";
    case OrderCase::Squarefree: return "squarefree";
    case OrderCase::NonSquarefreeI: return "nonsquarefree_i";
    case OrderCase::NonSquarefreeII: return "nonsquarefree_ii";
  }
  return "?";
}

namespace {

std::set<long long> interval(long long lo, long long hi) {
  std::set<long long> s;
  for (long long v = lo; v <= hi; ++v) s.insert(v);
  return s;
}

}  // namespace

Classification classify(const OrderContext& ctx) {
  if (ctx.f < 2) throw std::invalid_argument("classify: conductor must be >= 2");
  Classification c;

  bool squarefree = true;
  bool all_inert = true;
  for (const auto& [p, e] : ctx.conductor_primes) {
    if (e >= 2) squarefree = false;
    if (splitting(ctx.d_K, p) != SplittingType::Inert) all_inert = false;
  }

  if (squarefree && all_inert) {
    c.kind = OrderCase::HalfFactorial;
    c.half_factorial = true;
    c.predicted_ca_full = {1, 2};
    c.predicted_ca_invertible = {2};
    c.predicted_catenary = 2;
    return c;
  }
  long long sup = 0;
  if (squarefree) {
    c.kind = OrderCase::Squarefree;
    sup = 1;
  } else {
    const int v2 = ctx.vp_f(2);
    const bool wide = (v2 == 2 || v2 == 3) && rem(Int(ctx.d_K), Int(8)) == Int(1);
    c.kind = wide ? OrderCase::NonSquarefreeII : OrderCase::NonSquarefreeI;
    sup = wide ? 3 : 2;
  }
  c.predicted_delta = interval(1, sup);
  c.predicted_ca_full = interval(1, 2 + sup);
  c.predicted_ca_invertible = interval(2, 2 + sup);
  c.predicted_catenary = 2 + sup;
  return c;
}

WindowReport aggregate(const OrderContext& ctx, const std::vector<WindowReport>& per_prime) {
  if (per_prime.empty()) throw std::invalid_argument("aggregate: no component reports");
  std::set<long long> primes;
  for (const auto& [p, e] : ctx.conductor_primes) {
    (void)e;
    primes.insert(p);
  }
  WindowReport g;
  g.d = ctx.d;
  g.f = ctx.f;
  g.p = 0;
  g.norm_bound = per_prime.front().norm_bound;
  g.invertible_only = per_prime.front().invertible_only;
  g.max_length_cap = per_prime.front().max_length_cap;

  std::set<long long> seen;
  for (const WindowReport& r : per_prime) {
    if (r.norm_bound != g.norm_bound || r.invertible_only != g.invertible_only)
      throw std::invalid_argument("aggregate: component reports use different windows");
    if (!seen.insert(r.p).second) throw std::invalid_argument("aggregate: duplicate component report");
    g.delta.insert(r.delta.begin(), r.delta.end());
    g.ca.insert(r.ca.begin(), r.ca.end());
  }
  if (seen != primes) throw std::invalid_argument("aggregate: need exactly one report per conductor prime");
  g.catenary = g.ca.empty() ? 0 : *g.ca.rbegin();

  const Classification cls = classify(ctx);
  g.predicted_half_factorial = cls.half_factorial;
  g.predicted_delta = cls.predicted_delta;
  g.predicted_ca = g.invertible_only ? cls.predicted_ca_invertible : cls.predicted_ca_full;
  g.predicted_catenary = cls.predicted_catenary;
  g.delta_match = g.delta == g.predicted_delta;
  g.ca_match = g.ca == g.predicted_ca;
  return g;
}

ElasticityResult rho_k_closed_form(const OrderContext& ctx, long long k) {
  if (ctx.f < 2) throw std::invalid_argument("rho_k_closed_form: conductor must be >= 2");
  if (k < 2) throw std::invalid_argument("rho_k_closed_form: need k >= 2");
  ElasticityResult r;
  long long M = 0;
  bool ramified_at_max = false;
  for (const auto& [p, e] : ctx.conductor_primes) {
    if (splitting(ctx.d_K, p) == SplittingType::Split) {
      r.unbounded = true;
      return r;
    }
    if (e > M) {
      M = e;
      ramified_at_max = false;
    }
    if (e == M && splitting(ctx.d_K, p) == SplittingType::Ramified) ramified_at_max = true;
  }
  if (ramified_at_max) {
    r.rho_k = k * M + k / 2;
    r.rho_num = 2 * M + 1;
    r.rho_den = 2;
  } else {
    r.rho_k = k * M;
    r.rho_num = M;
    r.rho_den = 1;
  }
  return r;
}

PrincipalityResult principality_search_imaginary(const OrderContext& ctx, const LocalTriple& atom,
                                                 long long search_budget) {
  if (ctx.d >= 0) throw std::invalid_argument("principality_search_imaginary: needs an imaginary field");
  require_valid_triple(atom, ctx);
  if (is_identity(atom)) return PrincipalityResult{true, Int(1), Int(0)};
  if (!is_invertible(atom, ctx))
    throw std::invalid_argument("principality_search_imaginary: ideal must be invertible");
  if (atom.y == 0) {
    // p^x O_f is principal with generator p^x.
    return PrincipalityResult{true, ipow(atom.p, atom.x), Int(0)};
  }
  if (atom.x != 0) throw std::invalid_argument("principality_search_imaginary: expected an atom (x = 0)");

  const long long p = atom.p;
  const Int N = ipow(p, atom.y);
  const Int py = N;
  // 4 N(u + b tau) = (2u + eps b)^2 + D b^2 with D = -f^2 d_K > 0, so any
  // generator has |b| <= sqrt(4N/D).
  const Int D = Int(4) * ctx.eta - Int(ctx.eps) * Int(ctx.eps);
  const Int fourN = Int(4) * N;
  if (isqrt(fourN / D) > Int(search_budget))
    throw resource_error("principality_search_imaginary: generator bound exceeds the search budget");
  for (Int b(0); b * b * D <= fourN; b += Int(1)) {
    const Int square = fourN - D * b * b;
    const Int s = isqrt(square);
    if (s * s != square) continue;
    for (int sign = 0; sign < (s.is_zero() ? 1 : 2); ++sign) {
      const Int signed_s = sign == 0 ? s : -s;
      const Int twice_u = signed_s - Int(ctx.eps) * b;
      if (!twice_u.is_even()) continue;
      const Int u = twice_u / Int(2);
      // u + b tau lies in p^y Z + (z + tau) Z iff u = b z mod p^y.
      if (!rem(u - b * Int(atom.z), py).is_zero()) continue;
      if (b.is_zero() && u <= Int(0)) continue;  // rational generator must be positive
      return PrincipalityResult{true, u, b};
    }
  }
  return PrincipalityResult{false, Int(0), Int(0)};
}

namespace {

// Coordinates of u + v sqrt(d) in the basis (1, tau); nullopt when the
// element does not lie in O_f.
std::optional<std::pair<Int, Int>> coords_in_order(const OrderContext& ctx, Int u, Int v) {
  if (((ctx.d % 4) + 4) % 4 == 1) {
    // tau = (eps + f sqrt(d))/2
    const Int twice_v = Int(2) * v;
    if (!(twice_v % Int(ctx.f)).is_zero()) return std::nullopt;
    const Int c2 = twice_v / Int(ctx.f);
    const Int num = Int(2) * u - c2 * Int(ctx.eps);
    if (!num.is_even()) return std::nullopt;
    return std::make_pair(num / Int(2), c2);
  }
  // tau = f sqrt(d)
  if (!(v % Int(ctx.f)).is_zero()) return std::nullopt;
  return std::make_pair(u, v / Int(ctx.f));
}

}  // namespace

bool generator_identity_check(long long d, long long f, Int u, Int v, Int target_norm) {
  const OrderContext ctx = make_order(d, f);
  if (target_norm < Int(1)) throw std::invalid_argument("generator_identity_check: norm must be >= 1");

  const Int norm = u * u - v * v * Int(d);
  if (norm.abs() != target_norm) return false;

  const auto coords = coords_in_order(ctx, u, v);
  if (!coords) return false;  // element is not in O_f

  if (target_norm == Int(1)) return true;  // the stated ideal is O_f itself

  // The stated ideal is p^m Z + tau Z with p^m = target_norm, p | f.
  long long p = 0, m = 0;
  for (const auto& [q, e] : ctx.conductor_primes) {
    (void)e;
    Valuation w = vp(target_norm, q);
    if (w.is_finite() && ipow(q, w.get()) == target_norm) {
      p = q;
      m = w.get();
      break;
    }
  }
  if (p == 0)
    throw std::invalid_argument("generator_identity_check: norm is not a conductor prime power");
  const LocalTriple ideal{p, 0, m, 0};
  if (!is_valid_triple(ideal, ctx) || !is_invertible(ideal, ctx)) return false;
  // Membership of c1 + c2 tau in p^m Z + (0 + tau) Z: p^m | c1.
  return rem(coords->first, ipow(p, m)).is_zero();
}

const char* to_string(MinDeltaValue v) {
  switch (v) {
    case MinDeltaValue::One: return "1";
    case MinDeltaValue::Two: return "2";
    case MinDeltaValue::HalfFactorial: return "half_factorial";
    case MinDeltaValue::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::vector<long long> primes_of(long long n) {
  std::vector<long long> out;
  for (const auto& [p, e] : factorize(n < 0 ? -n : n)) {
    (void)e;
    out.push_back(p);
  }
  return out;
}

// Quadratic-residue criterion certifying that every norm-p^3 atom at a
// ramified prime p with v_p(f) = 1 is non-principal.
std::optional<std::string> residue_criterion(const OrderContext& ctx, long long p) {
  if (p % 4 == 1 && ctx.d % p == 0) {
    if (kronecker(Int(ctx.d / p), p) == -1)
      return "p=" + std::to_string(p) + " = 1 mod 4 and (d/p | p) = -1";
  }
  std::set<long long> qs;
  for (long long q : primes_of(ctx.d)) qs.insert(q);
  for (long long q : primes_of(ctx.f)) qs.insert(q);
  for (long long q : qs) {
    if (q % 4 != 1) continue;
    if (kronecker(Int(p), q) == -1)
      return "q=" + std::to_string(q) + " = 1 mod 4, q | d*f, (p | q) = -1";
  }
  return std::nullopt;
}

std::string triple_str(const LocalTriple& t) {
  return "(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + ")";
}

}  // namespace

MinDeltaVerdict min_delta_check(const OrderContext& ctx, std::optional<PicEntry> pic,
                                long long search_budget, const std::vector<GeneratorClaim>& known_generators) {
  if (ctx.f < 2) throw std::invalid_argument("min_delta_check: conductor must be >= 2");
  MinDeltaVerdict verdict;
  auto cert = [&](const std::string& kind, const std::string& detail) {
    verdict.certificates.push_back(Certificate{kind, detail});
  };

  const Classification cls = classify(ctx);
  if (cls.half_factorial) {
    verdict.value = MinDeltaValue::HalfFactorial;
    cert("structure", "ideal monoid is half-factorial (f squarefree, all conductor primes inert); "
                      "half-factoriality of the order itself is not decided here; "
                      "if the order is not half-factorial then min Delta = 1");
    return verdict;
  }
  cert("assumption", "verdict presupposes the order is not half-factorial");

  if (!pic) {
    verdict.value = MinDeltaValue::Unknown;
    cert("pic", "missing Picard data (need h_K and unit index)");
    return verdict;
  }
  const long long h_O = picard_number(ctx, pic->h_K, pic->unit_index);
  cert("pic", "|Pic(O)| = " + std::to_string(h_O) + " from h_K = " + std::to_string(pic->h_K) +
                  ", unit index = " + std::to_string(pic->unit_index));
  if (h_O != 2) {
    verdict.value = MinDeltaValue::One;
    cert("structure", "|Pic(O)| != 2");
    return verdict;
  }

  std::vector<long long> ramified, inert;
  for (const auto& [p, e] : ctx.conductor_primes) {
    if (e >= 2) {
      verdict.value = MinDeltaValue::One;
      cert("structure", "f is not squarefree (v_" + std::to_string(p) + "(f) = " + std::to_string(e) + ")");
      return verdict;
    }
    switch (splitting(ctx.d_K, p)) {
      case SplittingType::Split:
        verdict.value = MinDeltaValue::One;
        cert("structure", "split prime " + std::to_string(p) + " divides f");
        return verdict;
      case SplittingType::Ramified: ramified.push_back(p); break;
      case SplittingType::Inert: inert.push_back(p); break;
    }
  }
  if (ramified.empty()) throw internal_error("min_delta_check: non-half-factorial squarefree f without ramified primes");

  // Verified generator claims: a principal norm-p^3 atom refutes the min
  // Delta > 1 structure outright.
  for (const GeneratorClaim& claim : known_generators) {
    if (!generator_identity_check(ctx.d, ctx.f, claim.u, claim.v, claim.target_norm)) {
      cert("generator-claim", "claim " + to_string(claim.u) + " + " + to_string(claim.v) +
                                  " sqrt(d) with norm " + to_string(claim.target_norm) +
                                  " failed verification; ignored");
      continue;
    }
    for (long long p : ramified) {
      if (claim.target_norm == ipow(p, 3)) {
        verdict.value = MinDeltaValue::One;
        cert("generator-claim", "norm-p^3 atom at p = " + std::to_string(p) + " is principal, generator " +
                                    to_string(claim.u) + " + " + to_string(claim.v) + " sqrt(d)");
        return verdict;
      }
    }
    cert("generator-claim", "verified claim with norm " + to_string(claim.target_norm) +
                                " does not concern a ramified norm-p^3 atom; ignored");
  }

  for (long long p : ramified) {
    if (auto hit = residue_criterion(ctx, p)) {
      cert("residue-criterion", "all norm-" + std::to_string(p) + "^3 atoms non-principal: " + *hit);
      continue;
    }
    if (ctx.d < 0) {
      const auto atoms = enumerate_atoms(ctx, p, 3, true);
      for (const LocalTriple& atom : atoms) {
        const PrincipalityResult r = principality_search_imaginary(ctx, atom, search_budget);
        if (r.principal) {
          verdict.value = MinDeltaValue::One;
          cert("principality-search", "atom " + triple_str(atom) + " at p = " + std::to_string(p) +
                                          " is principal, generator " + to_string(r.gen_one) + " + " +
                                          to_string(r.gen_tau) + " tau");
          return verdict;
        }
      }
      cert("principality-search",
           "all " + std::to_string(atoms.size()) + " norm-" + std::to_string(p) + "^3 atoms non-principal (exhaustive)");
      continue;
    }
    verdict.value = MinDeltaValue::Unknown;
    cert("unknown", "ramified p = " + std::to_string(p) +
                        ": residue criterion misses, field is real, and no verified generator claim applies");
    return verdict;
  }

  if (!inert.empty()) {
    if (pic->h_K != 2) {
      verdict.value = MinDeltaValue::Unknown;
      cert("unknown", "inert prime present but h_K != 2: cannot transfer principality from Pic(O_K)");
      return verdict;
    }
    cert("inert-principality", "|Pic(O)| = |Pic(O_K)| = 2: every invertible atom at an inert prime is principal");
  }

  // Every ramified norm-p^3 atom is non-principal; with |Pic(O)| = 2 this
  // forces every norm-p^2 atom to be principal.
  cert("norm-p2-branch", "with |Pic(O)| = 2 and all norm-p^3 atoms non-principal, "
                         "every norm-p^2 atom at each ramified prime is principal");
  if (ctx.d < 0)
    throw internal_error("min_delta_check: min Delta = 2 verdict in an imaginary field");
  cert("field", "real quadratic field (required for min Delta = 2)");

  long long inert_part = 1;
  for (long long q : inert) inert_part *= q;
  const bool shape_ok =
      inert_part == 1 || is_prime(inert_part) ||
      (inert_part % 2 == 0 && inert_part / 2 > 2 && is_prime(inert_part / 2));
  cert("consistency", "inert part of f is " + std::to_string(inert_part) +
                          (shape_ok ? " (in {1} U P U {2p})" : " (OUTSIDE {1} U P U {2p} - inconsistent!)"));
  if (!shape_ok) throw internal_error("min_delta_check: inert part violates the half-factorial shape constraint");

  verdict.value = MinDeltaValue::Two;
  return verdict;
}

}  // namespace qorders
