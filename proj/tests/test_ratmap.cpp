#include <doctest.h>

#include <random>

#include "arbordyn/error.hpp"
#include "arbordyn/ratmap.hpp"
#include "oracles.hpp"

using namespace arbordyn;

namespace {

RationalMap main_family(long a) { return RationalMap::create(IntPoly{a, 0, 1}, IntPoly{0, 0, 1}); }
RationalMap example_map() { return RationalMap::create(IntPoly{1, 0, 1}, IntPoly{3, 0, 1}); }

RationalMap random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(2, 3);
  for (;;) {
    int d = deg(rng);
    IntPoly p = oracle::random_poly(rng, d, 5);
    IntPoly q = oracle::random_poly(rng, d - (rng() % 2), 5);
    try {
      return RationalMap::create(p, q);
    } catch (const Error&) {
    }
  }
}

P1Point random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  return P1Point(Int(num(rng)), Int(den(rng)));
}

// phi^n(pt) from the ladder level.
P1Point eval_level(const std::pair<IntPoly, IntPoly>& lv, std::size_t dn, const P1Point& pt) {
  return P1Point(lv.first.eval_homogeneous(pt.num(), pt.den(), dn), lv.second.eval_homogeneous(pt.num(), pt.den(), dn));
}

}  // namespace

TEST_CASE("P1Point normalization") {
  P1Point a(Int(6), Int(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(P1Point(a.num(), a.den()) == a);
  CHECK(P1Point(Int(-5), Int(0)) == P1Point::infinity());
  CHECK_THROWS_AS(P1Point(Int(0), Int(0)), Error);
  CHECK(P1Point::parse("inf").is_infinity());
  CHECK(P1Point::parse("oo").is_infinity());
  CHECK(P1Point::parse("-7/2") == P1Point(Rat(-7, 2)));
  CHECK(P1Point(Rat(-7, 2)).to_string() == "-7/2");
  CHECK(P1Point::infinity().to_string() == "inf");
  CHECK_THROWS(P1Point::infinity().value());
}

TEST_CASE("P1Point normalization is idempotent") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    Int n = dist(rng), d = dist(rng);
    if (n == 0 && d == 0) continue;
    P1Point x(n, d);
    P1Point y(x.num(), x.den());
    CHECK(x == y);
    CHECK(P1PointHash{}(x) == P1PointHash{}(y));
    P1Point z(n * 7, d * 7);
    CHECK(z == x);
  }
}

TEST_CASE("map construction") {
  auto phi = main_family(-98);
  CHECK(phi.degree() == 2);
  CHECK(example_map().degree() == 2);
  CHECK_THROWS_AS(RationalMap::create(IntPoly{0, 0, 1}, IntPoly{0, 1}), Error);
  try {
    RationalMap::create(IntPoly{0, 0, 1}, IntPoly{0, 1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_map);
  }
  try {
    RationalMap::create(IntPoly{0, 1}, IntPoly{1});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degree_too_small);
  }
  auto scaled = RationalMap::create(IntPoly{-6, 0, -6}, IntPoly{-2, 0, -2 * 3});
  CHECK(scaled.p() == IntPoly{3, 0, 3});
  CHECK(scaled.q() == IntPoly{1, 0, 3});
  CHECK(phi.to_string() == "(z^2-98)/(z^2)");
}

TEST_CASE("evaluation examples") {
  auto phi = main_family(-98);
  CHECK(phi.eval(P1Point(0)) == P1Point::infinity());
  CHECK(phi.eval(P1Point::infinity()) == P1Point(1));
  CHECK(phi.eval(P1Point(1)) == P1Point(-97));
  auto psi = example_map();
  CHECK(psi.eval(P1Point(0)) == P1Point(Rat(1, 3)));
}

TEST_CASE("homogeneous resultant") {
  CHECK(homogeneous_resultant(main_family(-98)) == 9604);
  CHECK(abs(homogeneous_resultant(example_map())) == 4);
  // deg q < d: agrees with the Sylvester resultant of the forms
  auto phi = RationalMap::create(IntPoly{1, 0, 1}, IntPoly{0, 2});
  CHECK(abs(homogeneous_resultant(phi)) == 4);
}

TEST_CASE("ladder examples") {
  IterateLadder lad(main_family(-98));
  const auto& l1 = lad.at(1);
  CHECK(l1.first == IntPoly{-98, 0, 1});
  CHECK(l1.second == IntPoly{0, 0, 1});
  const long a = -98;
  const auto& l2 = lad.at(2);
  CHECK(l2.first == IntPoly{a * a, 0, 2 * a, 0, 1 + a});
  CHECK(l2.second == IntPoly{a * a, 0, 2 * a, 0, 1});

  IterateLadder ex(example_map());
  CHECK(ex.at(3).first.eval(Int(0)) == 884);
  CHECK(ex.size() == 3);
  ex.extend_to(2);
  CHECK(ex.size() == 3);
}

TEST_CASE("ladder invariants on random maps") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto phi = random_map(rng);
    IterateLadder lad(phi);
    std::size_t dn = 1;
    for (std::size_t n = 1; n <= 3; ++n) {
      dn *= phi.degree();
      const auto& lv = lad.at(n);
      CHECK(static_cast<std::size_t>(std::max(lv.first.degree(), lv.second.degree())) == dn);
      // the homogeneous resultant of the level is nonzero
      CHECK(homogeneous_resultant(RationalMap::create(lv.first, lv.second)) != 0);
    }
  }
}

TEST_CASE("semigroup law: ladder level n equals n-fold evaluation") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto phi = random_map(rng);
    IterateLadder lad(phi);
    for (int s = 0; s < 4; ++s) {
      P1Point x = random_point(rng);
      P1Point iter = x;
      std::size_t dn = 1;
      for (std::size_t n = 1; n <= 4; ++n) {
        iter = phi.eval(iter);
        dn *= phi.degree();
        CHECK(eval_level(lad.at(n), dn, x) == iter);
        // phi^n = phi^(n-1) o phi
        if (n >= 2) CHECK(eval_level(lad.at(n - 1), dn / phi.degree(), phi.eval(x)) == iter);
      }
    }
  }
}

TEST_CASE("evaluation agrees with naive rational iteration") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    auto phi = random_map(rng);
    P1Point x = random_point(rng);
    Rat out;
    P1Point it = x;
    for (int k = 0; k < 3; ++k) it = phi.eval(it);
    if (oracle::naive_iterate(phi.p(), phi.q(), x.value(), 3, out)) {
      CHECK(it == P1Point(out));
    }
  }
}

TEST_CASE("iterate_forms matches the ladder") {
  auto phi = example_map();
  IterateLadder lad(phi);
  auto forms = iterate_forms(phi, Int(0), Int(1), 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(P1Point(forms[n].first, forms[n].second) == eval_level(lad.at(n), 1u << n, P1Point(0)));
  CHECK(forms[3].first == 884);
  auto f2 = iterate_forms(main_family(-98), Int(7), Int(2), 3);
  CHECK(P1Point(f2[1].first, f2[1].second) == P1Point(Rat(49 - 392, 49)));
}

TEST_CASE("growth cap") {
  IterateLadder lad(main_family(-98), 64);
  CHECK_NOTHROW(lad.extend_to(2));
  try {
    lad.extend_to(10);
    FAIL("expected growth cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::growth_cap);
  }
}

TEST_CASE("orbits") {
  auto sq = RationalMap::create(IntPoly{0, 0, 1}, IntPoly{1});
  auto r = orbit(sq, P1Point(1), 10);
  CHECK(r.status == OrbitStatus::preperiodic);
  CHECK(r.preperiod == 0);
  CHECK(r.period == 1);

  auto r2 = orbit(sq, P1Point(-1), 10);
  CHECK(r2.status == OrbitStatus::preperiodic);
  CHECK(r2.preperiod == 1);
  CHECK(r2.period == 1);

  auto phi = main_family(-98);
  auto r3 = orbit(phi, P1Point(0), 12, 1 << 12);
  CHECK(r3.status != OrbitStatus::preperiodic);
  REQUIRE(r3.points.size() >= 4);
  CHECK(r3.points[1] == P1Point::infinity());
  CHECK(r3.points[2] == P1Point(1));
  CHECK(r3.points[3] == P1Point(-97));

  auto r4 = orbit(phi, P1Point(0), 5);
  CHECK(r4.status == OrbitStatus::budget_exhausted);
  auto r5 = orbit(phi, P1Point(0), 1000, 256);
  CHECK(r5.status == OrbitStatus::escaped);

  auto bic = RationalMap::create(IntPoly{2, 0, 1}, IntPoly{2, 2, 1});
  auto r6 = orbit(bic, P1Point(Rat(2, 3)), 200);
  CHECK(r6.points.front() == P1Point(Rat(2, 3)));
  for (std::size_t i = 1; i < r6.points.size(); ++i) CHECK(r6.points[i] == bic.eval(r6.points[i - 1]));
}

TEST_CASE("mobius transforms") {
  auto mu = MobiusTransform{2, 1, 1, 1};
  auto inv = mu.inverse();
  CHECK(mu.compose(inv).equivalent(MobiusTransform::identity()));
  ExtPoint x = ExtPoint::finite(Rat(3, 5));
  CHECK(inv.apply(mu.apply(x)) == x);
  CHECK(mu.apply(ExtPoint::infinity()) == ExtPoint::finite(2));
  CHECK(mu.apply(ExtPoint::finite(-1)) == ExtPoint::infinity());
  auto r = QuadExt::sqrt_of(Int(2));
  auto m2 = MobiusTransform::translation(r);
  CHECK_FALSE(m2.is_rational());
  CHECK(m2.apply(ExtPoint::finite(QuadExt(Rat(1)))) == ExtPoint::finite(QuadExt(1) + r));
}

TEST_CASE("conjugation examples") {
  // (z^2 + a)/(z^2 + b) conjugated by z -> (a/b)/z
  const long a = 3, b = 5;
  auto phi = RationalMap::create(IntPoly{a, 0, 1}, IntPoly{b, 0, 1});
  auto psi = conjugate(phi, MobiusTransform::inversion(Rat(a, b)));
  // z^2 + a^2/b^3 over z^2 + a/b^2, cleared: (125 z^2 + 9)/(125 z^2 + 15)
  CHECK(psi == RationalMap::create(IntPoly{9, 0, 125}, IntPoly{15, 0, 125}));
  CHECK(conjugate(phi, MobiusTransform::identity()) == phi);

  auto irr = MobiusTransform::translation(QuadExt::sqrt_of(Int(2)));
  CHECK_THROWS_AS(conjugate(phi, irr), Error);
}

TEST_CASE("conjugation round trip and equivariance") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> c(-4, 4);
  int done = 0;
  while (done < 40) {
    auto phi = random_map(rng);
    MobiusTransform mu{c(rng), c(rng), c(rng), c(rng)};
    if (mu.det().is_zero()) continue;
    auto psi = conjugate(phi, mu);
    CHECK(conjugate(psi, mu.inverse()) == phi);
    for (int k = 0; k < 3; ++k) {
      ExtPoint x = random_point(rng).to_ext();
      CHECK(psi.eval(mu.apply(x)) == mu.apply(phi.eval(x)));
    }
    ++done;
  }
}

TEST_CASE("conjugation over a quadratic extension") {
  auto phi = example_map();
  auto r = QuadExt::sqrt_of(Int(3));
  MobiusTransform mu{1, r, 1, 1};
  auto psi = conjugate(ExtMap::from(phi), mu);
  CHECK_FALSE(psi.is_rational());
  auto back = conjugate(psi, mu.inverse());
  CHECK(back.to_rational() == phi);
  ExtPoint x = ExtPoint::finite(QuadExt(Rat(1, 2), Rat(1), Int(3)));
  CHECK(psi.eval(mu.apply(x)) == mu.apply(ExtMap::from(phi).eval(x)));
}
