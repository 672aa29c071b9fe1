#include <doctest.h>

#include <random>

#include "arbordyn/bigint.hpp"
#include "arbordyn/error.hpp"
#include "arbordyn/int_poly.hpp"
#include "oracles.hpp"

using namespace arbordyn;

TEST_CASE("construction trims leading zeros") {
  IntPoly f{1, 2, 0, 0};
  CHECK(f.degree() == 1);
  CHECK(IntPoly{0, 0}.is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{3}.is_constant());
}

TEST_CASE("to_string") {
  CHECK(IntPoly{-98, 0, 1}.to_string() == "z^2-98");
  CHECK(IntPoly{2, 2, 1}.to_string() == "z^2+2z+2");
  CHECK(IntPoly{0, -2}.to_string() == "-2z");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly{-1}.to_string() == "-1");
}

TEST_CASE("kronecker and schoolbook products agree") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> deg(0, 70);
    IntPoly a = oracle::random_poly(rng, deg(rng), 1000000);
    IntPoly b = oracle::random_poly(rng, deg(rng), 3);
    if (trial % 3 == 0) a = a * IntPoly::constant(ipow(Int(10), 90));
    CHECK(multiply_kronecker(a, b) == multiply_schoolbook(a, b));
    CHECK(multiply_kronecker(a, -b) == multiply_schoolbook(a, -b));
  }
  CHECK(multiply_kronecker(IntPoly{}, IntPoly{1, 1}).is_zero());
}

TEST_CASE("eval and homogeneous eval") {
  IntPoly f{-98, 0, 1};
  CHECK(f.eval(Int(1)) == -97);
  CHECK(f.eval(Rat(7, 2)) == Rat(-343, 4));
  // z^2 - 98 w^2 at [7 : 2]
  CHECK(f.eval_homogeneous(Int(7), Int(2), 2) == 49 - 98 * 4);
  // degree-3 form: (z^2 - 98 w^2) w
  CHECK(f.eval_homogeneous(Int(7), Int(2), 3) == (49 - 98 * 4) * 2);
  CHECK(f.reversed(2) == IntPoly{1, 0, -98});
  CHECK(IntPoly{1, 1}.scale_argument(Int(3)) == IntPoly{1, 3});
}

TEST_CASE("resultant examples") {
  CHECK(resultant(IntPoly{-98, 0, 1}, IntPoly{0, 0, 1}) == 9604);
  CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{3, 0, 1}) == 4);
  CHECK(oracle::sylvester_resultant(IntPoly{1, 0, 1}, IntPoly{3, 0, 1}) == 4);
  IntPoly f{5, -3, 0, 2};
  CHECK(resultant(f, f) == 0);
  CHECK_THROWS_AS(resultant(IntPoly{}, f), Error);
  // constant operands
  CHECK(resultant(IntPoly{3}, f) == 27);
  CHECK(resultant(f, IntPoly{-2}) == -8);
}

TEST_CASE("resultant matches the Sylvester determinant") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly f = oracle::random_poly(rng, deg(rng), 9);
    IntPoly g = oracle::random_poly(rng, deg(rng), 9);
    if (trial % 5 == 0) g = g * f.primitive_part();  // force a common factor sometimes
    REQUIRE(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant vanishes iff the gcd is nonconstant") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    IntPoly f = oracle::random_poly(rng, deg(rng), 3);
    IntPoly g = oracle::random_poly(rng, deg(rng), 3);
    if (trial % 4 == 0) {
      IntPoly h = oracle::random_poly(rng, 1, 3);
      f = f * h;
      g = g * h;
    }
    CHECK((resultant(f, g) == 0) == (gcd(f, g).degree() > 0));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(IntPoly{-98, 0, 1}) == 392);
  CHECK(discriminant(IntPoly{-2, 0, 1}) == 8);
  CHECK(discriminant(IntPoly{5, 0, 1}) == -20);
  CHECK_THROWS_AS(discriminant(IntPoly{7}), Error);
  // cubic z^3 + p z + q: -4p^3 - 27q^2
  CHECK(discriminant(IntPoly{2, -3, 0, 1}) == -4 * -27 - 27 * 4);
}

TEST_CASE("discriminant of a product") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> deg(1, 4);
  int checked = 0;
  while (checked < 100) {
    IntPoly f = oracle::random_poly(rng, deg(rng), 6);
    IntPoly g = oracle::random_poly(rng, deg(rng), 6);
    Int r = resultant(f, g);
    if (r == 0) continue;
    CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * Rat(r * r));
    ++checked;
  }
}

TEST_CASE("squarefree part") {
  IntPoly zm1{-1, 1}, zp2{2, 1};
  CHECK(squarefree_part(zm1 * zm1 * zp2) == zm1 * zp2);
  CHECK(squarefree_part(IntPoly{0, 196}) == IntPoly{0, 1});  // -2az with a = -98
  CHECK(squarefree_part(IntPoly{-2, 0, 1}) == IntPoly{-2, 0, 1});
  CHECK(squarefree_part(IntPoly{2, 0, -1}) == IntPoly{-2, 0, 1});
  CHECK(squarefree_part(IntPoly{5}) == IntPoly{1});
  CHECK_THROWS(squarefree_part(IntPoly{}));
}

TEST_CASE("gcd and exact division") {
  IntPoly a = IntPoly{1, 1} * IntPoly{-3, 2};
  IntPoly b = IntPoly{1, 1} * IntPoly{5, 0, 1};
  CHECK(gcd(a * IntPoly::constant(Int(6)), b) == IntPoly{1, 1});
  IntPoly q;
  CHECK(divides(IntPoly{1, 1}, a, &q));
  CHECK(q == IntPoly{-3, 2});
  CHECK_FALSE(divides(IntPoly{1, 2}, IntPoly{1, 1}));
  CHECK_THROWS_AS(divexact(IntPoly{1, 0, 1}, IntPoly{1, 1}), Error);
}

TEST_CASE("pseudo remainder identity") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    IntPoly a = oracle::random_poly(rng, 6, 20);
    IntPoly b = oracle::random_poly(rng, 3, 20);
    IntPoly r = pseudo_remainder(a, b);
    CHECK(r.degree() < b.degree());
    IntPoly scaled = a * ipow(b.lead(), 4);
    CHECK(divides(b, scaled - r));
  }
}

TEST_CASE("exact square root") {
  IntPoly h{3, 0, -2, 1};
  auto r = exact_sqrt(h * h);
  REQUIRE(r.has_value());
  CHECK(*r == h);
  CHECK(exact_sqrt(IntPoly{0, 0, 1}) == IntPoly{0, 1});
  CHECK_FALSE(exact_sqrt(IntPoly{1, 0, 1}).has_value());
  CHECK_FALSE(exact_sqrt(IntPoly{0, 0, 0, 1}).has_value());
  CHECK_FALSE(exact_sqrt(IntPoly{0, 0, 2}).has_value());
}

TEST_CASE("perfect squares") {
  Int root;
  CHECK(is_perfect_square(Int(9604), &root));
  CHECK(root == 98);
  CHECK_FALSE(is_perfect_square(Int(9311)));
  CHECK_FALSE(is_perfect_square(Int(-4)));
  CHECK(is_perfect_square(Int(0)));
}

TEST_CASE("perfect square test agrees with exhaustive squaring up to 10^6") {
  std::vector<bool> square(1000001, false);
  for (long k = 0; k * k <= 1000000; ++k) square[k * k] = true;
  for (long n = 0; n <= 1000000; ++n) {
    if (is_perfect_square(Int(n)) != square[n]) FAIL("mismatch at " << n);
  }
}

TEST_CASE("valuations and residues") {
  CHECK(*valuation(Int(9604), Int(7)) == 4);
  CHECK_FALSE(valuation(Int(0), Int(7)).has_value());
  CHECK(*valuation(Rat(17, 3), Int(3)) == -1);
  CHECK(*rat_mod(Rat(1, 2), Int(5)) == 3);
  CHECK_FALSE(rat_mod(Rat(1, 5), Int(5)).has_value());
  CHECK(parse_rat("-7/2") == Rat(-7, 2));
  CHECK_THROWS_AS(parse_int("12a"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
}
