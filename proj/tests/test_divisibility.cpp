#include <doctest.h>

#include <numeric>

#include "arbordyn/divisibility.hpp"
#include "arbordyn/error.hpp"
#include "oracles.hpp"

using namespace arbordyn;

namespace {

// Trial-division factorization for the oracle side.
std::vector<std::pair<Int, unsigned long>> trial_factor(Int n) {
  std::vector<std::pair<Int, unsigned long>> out;
  n = abs(n);
  for (Int p = 2; p * p <= n; ++p) {
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius_oracle(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

bool squarefree(unsigned long n) { return mobius_oracle(n) != 0; }

std::vector<Int> example_terms(std::size_t N) {
  std::vector<Int> out;
  Int x = 0, y = 1;
  for (std::size_t i = 0; i < N; ++i) {
    Int nx = x * x + y * y, ny = x * x + 3 * y * y;
    x = nx;
    y = ny;
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("Mobius function and divisors") {
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(1) == 1);
  CHECK(divisors(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
  CHECK(radical(72) == 6);
  for (unsigned long n = 1; n <= 300; ++n) CHECK(mobius(n) == mobius_oracle(n));
  for (unsigned long n = 2; n <= 50; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += mobius(n / d);
    CHECK(s == 0);
  }
  // the odd-divisor identity used for the sign of beta_n
  for (unsigned long n = 3; n <= 50; ++n) {
    int s = 0;
    for (auto d : divisors(n))
      if (d % 2) s += mobius(n / d);
    CHECK(s == 0);
  }
}

TEST_CASE("f sequence") {
  auto f = f_sequence(Int(-98), 5);
  CHECK(f[1] == 1);
  CHECK(f[2] == 1);
  CHECK(f[3] == -97);
  CHECK(f[4] == 9311);
  CHECK(f[5] == Int("-8589174817", 10));
  for (long a : {-2L, -6L, -98L, 10L, 3L}) CHECK(f_sequence(Int(a), 12) == oracle::f_seq(Int(a), 12));
  CHECK_THROWS_AS(f_sequence(Int(-98), 40, 1 << 16), Error);
}

TEST_CASE("power of a lemma") {
  CHECK(verify_power_of_a(Int(-98), 8).pass);
  CHECK(verify_power_of_a(Int(-2), 10).pass);
  CHECK(verify_power_of_a(Int(10), 7).pass);
  CHECK(verify_power_of_a(Int(7), 6).pass);
}

TEST_CASE("leading coefficient and value at 1") {
  for (long a : {-2L, -6L, -98L, 10L}) {
    auto f = oracle::f_seq(Int(a), 10);
    IterateLadder lad(main_family_map(Int(a)));
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(lad.at(n).first.lead() == f[n + 1]);
      CHECK(lad.at(n).first.eval(Int(1)) == f[n + 2]);
    }
  }
}

TEST_CASE("congruences and gcds of f_n") {
  for (long a : {-2L, -6L, -98L, 10L, 2L, -10L}) {
    auto f = oracle::f_seq(Int(a), 12);
    for (std::size_t n = 3; n <= 12; ++n) {
      Int r = (f[n] - 1 - a) % 8;
      CHECK(r == 0);
    }
    for (std::size_t n = 2; n <= 12; ++n) CHECK(gcd(f[n], f[n - 1]) == 1);
    for (std::size_t k = 3; k + 1 <= 11; ++k) {
      Int A = a_k(f, k);
      CHECK(A == f[k] * f[k] * f[k] + f[k + 1] * f[k - 1] * f[k - 1]);
      Int B = f[k] * f[k] * f[k - 1] * f[k - 1];
      CHECK(gcd(A, B) == 1);
      Int m8 = A % 8;
      if (m8 < 0) m8 += 8;
      CHECK(m8 == 6);
    }
  }
}

TEST_CASE("theta") {
  CHECK(theta(Int(-98), 1) == 1);
  CHECK(theta(Int(-98), 3) == -97);
  CHECK(theta(Int(-98), 4) == 9311);
  CHECK_FALSE(is_perfect_square(Int(9311)));
  CHECK(isqrt(Int(9311)) == 96);
  // f_6 / (f_3 f_2) * f_1
  auto f = oracle::f_seq(Int(-98), 6);
  CHECK(theta(Int(-98), 6) == f[6] * f[1] / (f[3] * f[2]));
  // every theta_n is an integer
  for (long a : {-2L, -6L, -98L, 10L, -3L})
    for (std::size_t n = 1; n <= 12; ++n) CHECK_NOTHROW(theta(Int(a), n));
  // a = -1: f_3 = 0
  CHECK_THROWS_AS(theta(Int(-1), 3), Error);
}

TEST_CASE("beta") {
  auto phi = main_family_map(Int(-98));
  CHECK(beta(phi, P1Point(5), 1) == Rat(25 - 98));
  auto b4 = beta(phi, P1Point(0), 4);
  auto terms = oracle::f_seq(Int(-98), 4);
  CHECK(b4 == Rat(ipow(Int(-98), 8) * terms[4]) / Rat(ipow(Int(-98), 2) * terms[2]));
  CHECK(b4 > 0);

  // alpha = 7/2: phi(alpha) = -7, phi^2(alpha) = -1
  auto vals = ladder_values(phi, Rat(7, 2), 2);
  CHECK(vals[1] == Rat(-343, 4));
  CHECK(vals[1] == Rat(-7) * Rat(7, 2) * Rat(7, 2));
  CHECK(vals[2] == -vals[1] * vals[1]);
  CHECK(beta(phi, P1Point(Rat(7, 2)), 2) == vals[2] / vals[1]);
  CHECK_THROWS_AS(beta(main_family_map(Int(-1)), P1Point(0), 3), Error);
}

TEST_CASE("sign lemma") {
  CHECK(sign_check(Int(-98), 10).pass);
  CHECK(sign_check(Int(-3), 8).pass);
  CHECK(sign_check(Int(-4), 9).pass);
  CHECK_THROWS_AS(sign_check(Int(-2), 5), Error);
  auto forms = iterate_forms(main_family_map(Int(-98)), Int(0), Int(1), 3);
  CHECK(P1Point(forms[2].first, forms[2].second) == P1Point(1));
  CHECK(P1Point(forms[3].first, forms[3].second) == P1Point(-97));
}

TEST_CASE("beta and theta agree up to squares") {
  for (long a : {-3L, -6L, -10L, -98L}) {
    auto f = oracle::f_seq(Int(a), 10);
    auto phi = main_family_map(Int(a));
    auto vals = ladder_values(phi, Rat(0), 10);
    for (std::size_t n = 3; n <= 10; ++n) {
      Rat th = abs(theta_from(f, n));
      Rat b = beta_from(vals, n);
      if (squarefree(n))
        CHECK(is_rational_square(th * Rat(-a) * b));
      else
        CHECK(is_rational_square(th * b));
    }
  }
}

TEST_CASE("rigid divisibility of the example sequence") {
  auto terms = example_terms(8);
  auto rep = verify_rigid_divisibility(terms, {Int(2)}, 6, 1000000);
  CHECK(rep.pass());
  CHECK(std::find(rep.checked_primes.begin(), rep.checked_primes.end(), Int(5)) != rep.checked_primes.end());
  for (std::size_t n : {2, 4, 6, 8}) CHECK(*valuation(terms[n - 1], Int(5)) == 1);

  auto bad = verify_rigid_divisibility(terms, {}, 6, 1000000);
  CHECK_FALSE(bad.pass());
  CHECK(bad.violating_primes() == std::vector<Int>{2});
  bool cond1 = false;
  for (const auto& v : bad.violations) cond1 |= v.condition == 1;
  CHECK(cond1);

  // f_n for a = -98 with S empty
  auto f = oracle::f_seq(Int(-98), 10);
  std::vector<Int> fs(f.begin() + 1, f.end());
  auto frep = verify_rigid_divisibility(fs, {}, 6, 100000);
  CHECK(frep.pass());
}

TEST_CASE("rigid divisibility detects planted violations") {
  // 3 | c_2 but 9 | c_4
  std::vector<Int> c = {1, 3, 1, 9, 1, 3};
  auto rep = verify_rigid_divisibility(c, {}, 6, 100);
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.violations.size() >= 1);
  CHECK(rep.violations[0].prime == 3);
  CHECK(rep.violations[0].condition == 1);
  // 5 | c_2 and 5 | c_3 but not c_1
  std::vector<Int> d = {1, 5, 5, 5, 1, 5};
  auto rep2 = verify_rigid_divisibility(d, {}, 6, 100);
  bool cond2 = false;
  for (const auto& v : rep2.violations) cond2 |= v.condition == 2;
  CHECK(cond2);
}

TEST_CASE("primitive part valuations") {
  auto r3 = primitive_part_valuations(Int(-98), 3);
  REQUIRE(r3.valuations.size() == 1);
  CHECK(r3.valuations[0] == std::make_pair(Int(97), 1UL));
  CHECK(r3.coprime_to_earlier);
  auto r4 = primitive_part_valuations(Int(-98), 4);
  CHECK(r4.valuations == trial_factor(Int(9311)));
  CHECK(r4.valuations_match);
  CHECK(r4.coprime_to_earlier);
  CHECK(primitive_part_valuations(Int(-98), 1).valuations.empty());
  for (std::size_t n = 5; n <= 9; ++n) {
    auto r = primitive_part_valuations(Int(-98), n);
    CHECK(r.valuations_match);
    CHECK(r.coprime_to_earlier);
  }
}

TEST_CASE("rad-divisibility conditions") {
  auto phi = main_family_map(Int(-98));
  auto ev = rad_divisibility_conditions(phi, P1Point(0), 4, Int(4));
  CHECK(ev.k == 2);
  CHECK(ev.phi_k == 1);
  CHECK(ev.phi_k1 == -97);
  CHECK(ev.condition1);
  CHECK(ev.condition2);
  CHECK(ev.condition3);
  CHECK(ev.certified);
  CHECK_FALSE(is_rational_square(beta(phi, P1Point(0), 4)));

  auto ev5 = rad_divisibility_conditions(phi, P1Point(0), 4, Int(5));
  CHECK_FALSE(ev5.condition3);
  CHECK_FALSE(ev5.certified);

  CHECK_THROWS_AS(rad_divisibility_conditions(RationalMap::create(IntPoly{1, 0, 1}, IntPoly{3, 0, 1}), P1Point(0), 4, Int(4)),
                  Error);
  CHECK_THROWS_AS(rad_divisibility_conditions(RationalMap::create(IntPoly{1, 1, 1}, IntPoly{0, 0, 1}), P1Point(0), 4, Int(4)),
                  Error);
  CHECK_FALSE(minus_one_is_square_mod(Int(4)));
  CHECK(minus_one_is_square_mod(Int(5)));
  CHECK_FALSE(minus_one_is_square_mod(Int(1000003)));  // prime, 3 mod 4
}

TEST_CASE("certified rad-divisibility implies beta is not a square") {
  int certified = 0;
  for (long a = -150; a <= 150; a += 4) {  // a = 2 mod 4
    if (a == 2 || a == -2) continue;
    auto phi = main_family_map(Int(a));
    auto vals = ladder_values(phi, Rat(0), 12);
    for (std::size_t n : {4, 8, 9, 12}) {
      for (long m : {4L, 3L, 7L, 11L}) {
        RadDivisibilityEvidence ev;
        try {
          ev = rad_divisibility_conditions(phi, P1Point(0), n, Int(m));
        } catch (const Error&) {
          continue;
        }
        if (!ev.certified) continue;
        ++certified;
        CHECK_FALSE(is_rational_square(beta_from(vals, n)));
      }
    }
  }
  CHECK(certified > 50);
}
