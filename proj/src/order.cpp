#include "qorders/order.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "qorders/errors.hpp"

namespace qorders {

const char* to_string(SplittingType s) {
  switch (s) {
    case SplittingType::Inert: return "inert";
    case SplittingType::Split: return "split";
    case SplittingType::Ramified: return "ramified";
  }
  return "?";
}

int OrderContext::vp_f(long long p) const {
  for (const auto& [q, e] : conductor_primes)
    if (q == p) return e;
  return 0;
}

namespace {

bool is_squarefree(long long d) {
  long long n = d < 0 ? -d : d;
  for (const auto& [p, e] : factorize(n))
    if (e >= 2) return false;
  return true;
}

}  // namespace

OrderContext make_order(long long d, long long f) {
  if (d == 0 || d == 1) throw std::invalid_argument("make_order: d must not be 0 or 1");
  if (!is_squarefree(d)) throw std::invalid_argument("make_order: d = " + std::to_string(d) + " is not squarefree");
  if (f < 1) throw std::invalid_argument("make_order: conductor must be >= 1");

  OrderContext ctx;
  ctx.d = d;
  ctx.f = f;
  long long dm4 = ((d % 4) + 4) % 4;
  ctx.d_K = (dm4 == 1) ? d : 4 * d;
  ctx.eps = static_cast<int>(rem(Int(f) * Int(ctx.d_K), Int(2)).to_long_long());
  ctx.eta = exact_div(Int(ctx.eps) - Int(f) * Int(f) * Int(ctx.d_K), Int(4));
  ctx.conductor_primes = factorize(f);
  return ctx;
}

Int norm_form(const OrderContext& ctx, Int r) { return r * r + Int(ctx.eps) * r + ctx.eta; }

SplittingType splitting(long long d_K, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("splitting: p must be prime");
  if (p == 2) {
    if (d_K % 2 == 0) return SplittingType::Ramified;
    long long r = ((d_K % 8) + 8) % 8;
    return r == 5 ? SplittingType::Inert : SplittingType::Split;
  }
  switch (kronecker(Int(d_K), p)) {
    case -1: return SplittingType::Inert;
    case 1: return SplittingType::Split;
    default: return SplittingType::Ramified;
  }
}

long long picard_number(const OrderContext& ctx, long long h_K, long long unit_index) {
  if (h_K < 1 || unit_index < 1)
    throw std::invalid_argument("picard_number: class number and unit index must be >= 1");
  Int num = Int(h_K) * Int(ctx.f);
  Int den(unit_index);
  for (const auto& [p, e] : ctx.conductor_primes) {
    (void)e;
    num *= Int(p) - Int(kronecker(Int(ctx.d_K), p));
    den *= Int(p);
  }
  if (!(num % den).is_zero())
    throw data_error("picard_number: formula does not evaluate to an integer (inconsistent Pic data)");
  Int h = num / den;
  if (h < Int(1)) throw data_error("picard_number: non-positive class number");
  return h.to_long_long();
}

PicTable PicTable::parse(std::istream& in) {
  PicTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    long long d, f, h_K, unit_index;
    if (!(row >> d)) continue;  // blank or comment-only line
    if (!(row >> f >> h_K >> unit_index))
      throw data_error("PicTable: malformed line " + std::to_string(lineno) + " (want: d f h_K unit_index)");
    long long extra;
    if (row >> extra)
      throw data_error("PicTable: trailing fields on line " + std::to_string(lineno));
    table.rows_[{d, f}] = PicEntry{h_K, unit_index};
  }
  return table;
}

PicTable PicTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("PicTable: cannot open " + path);
  return parse(in);
}

std::optional<PicEntry> PicTable::lookup(long long d, long long f) const {
  auto it = rows_.find({d, f});
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

}  // namespace qorders
