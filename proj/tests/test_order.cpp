#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "qorders/errors.hpp"
#include "qorders/order.hpp"

using namespace qorders;

TEST_CASE("make_order fills discriminant data") {
  OrderContext a = make_order(-2, 2);
  CHECK(a.d_K == -8);
  CHECK(a.eps == 0);
  CHECK(a.eta == Int(8));
  REQUIRE(a.conductor_primes.size() == 1);
  CHECK(a.conductor_primes[0] == std::pair<long long, int>{2, 1});

  OrderContext b = make_order(17, 4);
  CHECK(b.d_K == 17);
  CHECK(b.eps == 0);
  CHECK(b.eta == Int(-68));

  OrderContext c = make_order(5, 1);
  CHECK(c.d_K == 5);
  CHECK(c.eps == 1);
  CHECK(c.eta == Int(-1));
  CHECK(c.conductor_primes.empty());
}

TEST_CASE("make_order rejects bad d") {
  CHECK_THROWS_AS(make_order(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_order(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_order(12, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_order(-4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_order(5, 0), std::invalid_argument);
}

TEST_CASE("make_order agrees with a squarefree sieve up to 10^4") {
  const long long N = 10'000;
  std::vector<bool> squarefree(N + 1, true);
  for (long long q = 2; q * q <= N; ++q)
    for (long long m = q * q; m <= N; m += q * q) squarefree[m] = false;
  for (long long a = 2; a <= N; ++a) {
    for (long long d : {a, -a}) {
      bool accepted = true;
      try {
        make_order(d, 3);
      } catch (const std::invalid_argument&) {
        accepted = false;
      }
      CAPTURE(d);
      CHECK(accepted == squarefree[a]);
    }
  }
}

TEST_CASE("norm_form examples") {
  OrderContext a = make_order(-2, 2);
  CHECK(norm_form(a, Int(0)) == Int(8));
  CHECK(norm_form(a, Int(2)) == Int(12));
  OrderContext b = make_order(17, 4);
  CHECK(norm_form(b, Int(6)) == Int(-32));
}

TEST_CASE("4N identity") {
  std::mt19937_64 rng(5);
  const long long ds[] = {-2, -1, 5, 17, 30, -15, 42, 3};
  for (long long d : ds) {
    for (long long f : {1, 2, 4, 6, 9, 12}) {
      OrderContext ctx = make_order(d, f);
      for (int i = 0; i < 50; ++i) {
        long long r = static_cast<long long>(rng() % 20001) - 10000;
        CHECK(Int(4) * norm_form(ctx, Int(r)) ==
              (Int(2) * Int(r) + Int(ctx.eps)) * (Int(2) * Int(r) + Int(ctx.eps)) -
                  Int(f) * Int(f) * Int(ctx.d_K));
      }
      // tau^2 = eps*tau - eta, symbolically: N(tau) = eta and tr(tau) = eps
      CHECK(norm_form(ctx, Int(0)) == ctx.eta);
    }
  }
}

TEST_CASE("splitting") {
  CHECK(splitting(60, 2) == SplittingType::Ramified);
  CHECK(splitting(17, 2) == SplittingType::Split);
  CHECK(splitting(-8, 2) == SplittingType::Ramified);
  CHECK(splitting(5, 2) == SplittingType::Inert);
  CHECK(splitting(5, 3) == SplittingType::Inert);
  CHECK(splitting(28, 3) == SplittingType::Split);

  // Odd p dividing d_K is always ramified.
  for (long long dk : {60, -8, 12, 105}) {
    for (long long p : {3, 5, 7}) {
      if (dk % p == 0) CHECK(splitting(dk, p) == SplittingType::Ramified);
    }
  }
}

TEST_CASE("picard_number") {
  CHECK(picard_number(make_order(15, 2), 2, 2) == 2);
  CHECK(picard_number(make_order(30, 5), 2, 5) == 2);
  CHECK(picard_number(make_order(42, 7), 2, 7) == 2);
  CHECK(picard_number(make_order(-2, 2), 1, 1) == 2);
  CHECK(picard_number(make_order(7, 1), 9, 1) == 9);  // empty product
  // (d=17, f=4): 2 splits, formula gives h_K * 4 * (1 - 1/2) = 2 h_K.
  CHECK(picard_number(make_order(17, 4), 1, 1) == 2);
  CHECK_THROWS_AS(picard_number(make_order(17, 4), 1, 3), data_error);
}

TEST_CASE("PicTable parses the documented format") {
  std::istringstream in(
      "# d f h_K unit_index\n"
      "15 2 2 2\n"
      "30 5 2 5   # example\n"
      "\n"
      "-2 2 1 1\n");
  PicTable t = PicTable::parse(in);
  CHECK(t.size() == 3);
  auto e = t.lookup(30, 5);
  REQUIRE(e.has_value());
  CHECK(e->h_K == 2);
  CHECK(e->unit_index == 5);
  CHECK_FALSE(t.lookup(30, 7).has_value());

  std::istringstream bad("15 2 2\n");
  CHECK_THROWS_AS(PicTable::parse(bad), data_error);
}
