#include <doctest.h>

#include <random>

#include "arbordyn/error.hpp"
#include "arbordyn/factor.hpp"

using namespace arbordyn;

namespace {

// p_n(0) for (z^2+1)/(z^2+3) by iterating the forms directly from [0 : 1].
Int example_term(int n) {
  Int x = 0, y = 1;
  for (int i = 0; i < n; ++i) {
    Int nx = x * x + y * y;
    Int ny = x * x + 3 * y * y;
    x = nx;
    y = ny;
  }
  return x;
}

std::vector<std::pair<long, unsigned long>> small_factors(const Factorization& f) {
  std::vector<std::pair<long, unsigned long>> out;
  for (const auto& pp : f.factors) out.emplace_back(pp.prime.get_si(), pp.exponent);
  return out;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(primality(Int(2)) == Primality::prime);
  CHECK(primality(Int(1)) == Primality::composite);
  CHECK(primality(Int(0)) == Primality::composite);
  CHECK(primality(Int(-7)) == Primality::composite);
  CHECK(primality(Int(9311)) == Primality::prime);
  CHECK(primality(Int(561)) == Primality::composite);
  CHECK(primality(Int("3215031751", 10)) == Primality::composite);  // strong pseudoprime to 2,3,5,7
  CHECK(primality(Int("18446744073709551557", 10)) == Primality::prime);
  // below the deterministic bound
  CHECK(primality(ipow(Int(2), 61) - 1) == Primality::prime);
  CHECK(primality(ipow(Int(2), 61) + 1) == Primality::composite);
  // 2^127 - 1 is above it.
  CHECK(primality(ipow(Int(2), 127) - 1) == Primality::probable_prime);
  CHECK(primality((ipow(Int(2), 127) - 1) * 3) == Primality::composite);
}

TEST_CASE("primality agrees with a sieve below 10^5") {
  const auto& primes = primes_up_to(100000);
  std::vector<bool> is_p(100001, false);
  for (auto p : primes)
    if (p <= 100000) is_p[p] = true;
  for (long n = 0; n <= 100000; ++n) REQUIRE((primality(Int(n)) != Primality::composite) == is_p[n]);
}

TEST_CASE("small factorizations") {
  auto f = factor_integer(Int(884));
  CHECK(small_factors(f) == std::vector<std::pair<long, unsigned long>>{{2, 2}, {13, 1}, {17, 1}});
  CHECK(f.cofactor == 1);
  CHECK(f.cofactor_status == CofactorStatus::unit);

  auto one = factor_integer(Int(1));
  CHECK(one.factors.empty());
  CHECK(one.cofactor == 1);

  auto neg = factor_integer(Int(-97));
  CHECK(neg.sign == -1);
  CHECK(small_factors(neg) == std::vector<std::pair<long, unsigned long>>{{97, 1}});

  CHECK_THROWS_AS(factor_integer(Int(0)), Error);
}

TEST_CASE("example table rows through n = 6") {
  using Row = std::vector<std::pair<long, unsigned long>>;
  const std::vector<Row> expected = {
      {},
      {{2, 1}, {5, 1}},
      {{2, 2}, {13, 1}, {17, 1}},
      {{2, 5}, {5, 1}, {42461, 1}},
      {{2, 10}, {109, 1}, {13337, 1}, {268897, 1}},
      {{2, 21}, {5, 1}, {13, 1}, {17, 1}, {193, 1}, {11969, 1}, {3144217, 1}, {82530809, 1}},
  };
  for (int n = 1; n <= 6; ++n) {
    Int term = example_term(n);
    auto f = factor_integer(term);
    CHECK(f.reconstruct() == term);
    CHECK(f.cofactor == 1);
    CHECK(small_factors(f) == expected[n - 1]);
  }
}

TEST_CASE("example table rows 7 and 8 leave one large probable prime") {
  auto f7 = factor_integer(example_term(7));
  CHECK(small_factors(f7) == std::vector<std::pair<long, unsigned long>>{{2, 42}, {157, 1}, {15170009, 1}});
  CHECK(f7.cofactor_status == CofactorStatus::probable_prime);
  CHECK(f7.cofactor.get_str().size() == 40);  // about 10^39

  auto f8 = factor_integer(example_term(8));
  CHECK(small_factors(f8) == std::vector<std::pair<long, unsigned long>>{
                                 {2, 85}, {5, 1}, {521, 1}, {7297, 1}, {7841, 1}, {42461, 1}, {697121, 1}, {207272581, 1}});
  CHECK(f8.cofactor_status == CofactorStatus::probable_prime);
  CHECK(f8.cofactor.get_str().size() == 68);  // 68 digits, about 10^68
  CHECK(f8.reconstruct() == example_term(8));
}

TEST_CASE("rho splits products of two mid-sized primes") {
  Int p("1000000007", 10), q("998244353", 10);
  auto f = factor_integer(p * q, FactorBudget{1000, 100000000, 3});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == q);
  CHECK(f.factors[1].prime == p);
  // prime squares and cubes
  auto g = factor_integer(p * p * p * q, FactorBudget{1000, 100000000, 0});
  CHECK(g.factors[1].exponent == 3);
  CHECK(g.reconstruct() == p * p * p * q);
}

TEST_CASE("large probable prime becomes the cofactor") {
  Int big = ipow(Int(2), 127) - 1;
  auto f = factor_integer(big * 12);
  CHECK(f.cofactor == big);
  CHECK(f.cofactor_status == CofactorStatus::probable_prime);
  CHECK(f.reconstruct() == big * 12);
}

TEST_CASE("exhausted budget leaves a composite cofactor") {
  Int p("1000000007", 10), q("998244353", 10);
  auto f = factor_integer(p * q * 10, FactorBudget{100, 50, 0});
  CHECK(f.cofactor_status == CofactorStatus::composite_unfactored);
  CHECK(f.cofactor == p * q);
  CHECK(f.budget_exhausted);
  CHECK(f.reconstruct() == p * q * 10);
}

TEST_CASE("factorization reconstructs 10^3 random 64-bit integers") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t v = rng();
    if (v == 0) continue;
    Int n = from_u64(v);
    if (i % 2) n = -n;
    auto f = factor_integer(n);
    REQUIRE(f.reconstruct() == n);
    REQUIRE(f.cofactor_status != CofactorStatus::composite_unfactored);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      CHECK(primality(f.factors[k].prime) == Primality::prime);
      if (k) CHECK(f.factors[k - 1].prime < f.factors[k].prime);
    }
  }
}
