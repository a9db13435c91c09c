#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qorders/arith.hpp"
#include "qorders/checked_int.hpp"

namespace qorders {

enum class SplittingType { Inert, Split, Ramified };

const char* to_string(SplittingType s);

// The order of conductor f in Q(sqrt(d)), presented through the integers
// (d, f, d_K, eps, eta). The quadratic generator tau = (eps + f*sqrt(d_K))/2
// is never materialized; everything routes through its minimal polynomial
// tau^2 = eps*tau - eta and the norm form N(r + tau) = r^2 + eps*r + eta.
struct OrderContext {
  long long d;    // squarefree, not in {0, 1}
  long long f;    // conductor, >= 1
  long long d_K;  // field discriminant: d if d = 1 mod 4, else 4d
  int eps;        // in {0, 1}, eps = f*d_K mod 2
  Int eta;        // (eps - f^2 d_K) / 4
  std::vector<std::pair<long long, int>> conductor_primes;  // factorization of f

  int vp_f(long long p) const;  // exponent of p in f (0 if p does not divide f)
};

// Validates d squarefree and not 0/1, f >= 1, and fills in all invariants.
OrderContext make_order(long long d, long long f);

// N(r + tau) = r^2 + eps*r + eta. Never zero for a valid context.
Int norm_form(const OrderContext& ctx, Int r);

// Behavior of the rational prime p in the maximal order, read off d_K.
SplittingType splitting(long long d_K, long long p);

// |Pic(O_f)| from externally supplied |Pic(O_K)| = h_K and unit index
// (O_K^x : O_f^x), via the exact product formula
//   h_K * f / unit_index * prod_{p | f} (1 - (d_K/p)/p).
// Throws data_error when the inputs do not yield a positive integer.
long long picard_number(const OrderContext& ctx, long long h_K, long long unit_index);

// External Picard data, one whitespace-separated line per order:
//   d f h_K unit_index
// with '#' starting a comment.
struct PicEntry {
  long long h_K;
  long long unit_index;
};

class PicTable {
 public:
  static PicTable parse(std::istream& in);
  static PicTable load_file(const std::string& path);

  std::optional<PicEntry> lookup(long long d, long long f) const;
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::pair<long long, long long>, PicEntry> rows_;
};

}  // namespace qorders
