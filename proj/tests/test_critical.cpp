#include <doctest.h>

#include <random>

#include "arbordyn/critical.hpp"
#include "arbordyn/error.hpp"
#include "oracles.hpp"

using namespace arbordyn;

namespace {

RationalMap make(IntPoly p, IntPoly q) { return RationalMap::create(std::move(p), std::move(q)); }
RationalMap collision_map() { return make(IntPoly{2, 0, 1}, IntPoly{2, 2, 1}); }
ExtPoint at(long x) { return ExtPoint::finite(QuadExt(x)); }
ExtPoint at(const Rat& x) { return ExtPoint::finite(QuadExt(x)); }

RationalMap random_map(std::mt19937_64& rng, int d, long bound) {
  for (;;) {
    IntPoly p = oracle::random_poly(rng, d, bound);
    IntPoly q = oracle::random_poly(rng, d - static_cast<int>(rng() % 2), bound);
    try {
      return make(p, q);
    } catch (const Error&) {
    }
  }
}

MobiusTransform random_mobius(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  for (;;) {
    MobiusTransform mu{c(rng), c(rng), c(rng), c(rng)};
    if (!mu.det().is_zero()) return mu;
  }
}

// ord_alpha of an integer polynomial at a finite point, by repeated
// evaluation of derivatives (independent of the synthetic division code).
int order_by_derivatives(IntPoly f, const QuadExt& alpha) {
  int k = 0;
  while (!f.is_zero()) {
    QuadExt v = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) v = v * alpha + QuadExt(Rat(f[i]));
    if (!v.is_zero()) return k;
    f = f.derivative();
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("wronskian") {
  const long a = -98;
  CHECK(wronskian(make(IntPoly{a, 0, 1}, IntPoly{0, 0, 1})) == IntPoly{0, -2 * a});
  CHECK(wronskian(make(IntPoly{0, 0, 1}, IntPoly{1})) == IntPoly{0, 2});
  auto w = wronskian(collision_map());
  CHECK(w == IntPoly{-4, 0, 2});
  CHECK(squarefree_part(w) == IntPoly{-2, 0, 1});
}

TEST_CASE("ramification index examples") {
  auto phi = make(IntPoly{-98, 0, 1}, IntPoly{0, 0, 1});
  CHECK(ramification_index(phi, at(0)) == 2);
  CHECK(ramification_index(phi, ExtPoint::infinity()) == 2);
  CHECK(ramification_index(phi, at(5)) == 1);
  auto sqrt2 = ExtPoint::finite(QuadExt::sqrt_of(Int(2)));
  CHECK(ramification_index(collision_map(), sqrt2) == 2);
  CHECK(ramification_index(collision_map(), sqrt2.conj()) == 2);
  CHECK(ramification_index(collision_map(), at(1)) == 1);
  auto cube = make(IntPoly{0, 0, 0, 7}, IntPoly{1});
  CHECK(ramification_index(cube, at(0)) == 3);
  CHECK(ramification_index(cube, ExtPoint::infinity()) == 3);
}

TEST_CASE("critical point examples") {
  auto c = critical_points(collision_map());
  REQUIRE(c.points.size() == 2);
  CHECK(c.s == 2);
  CHECK(c.points[0].location == ExtPoint::finite(QuadExt::sqrt_of(Int(2))));
  CHECK(c.points[1].location == ExtPoint::finite(-QuadExt::sqrt_of(Int(2))));

  auto m = critical_points(make(IntPoly{-98, 0, 1}, IntPoly{0, 0, 1}));
  REQUIRE(m.points.size() == 2);
  CHECK_FALSE(m.quadratic());
  CHECK(m.points[0].location == at(0));
  CHECK(m.points[1].location.inf);

  auto p = critical_points(make(IntPoly{0, 0, 0, 5}, IntPoly{1}));
  REQUIRE(p.points.size() == 2);
  CHECK(p.points[0].ram_index == 3);
  CHECK(p.points[1].ram_index == 3);

  // z^3 + z: 3z^2 + 1 plus infinity
  auto t = critical_points(make(IntPoly{0, 1, 0, 1}, IntPoly{1}));
  CHECK(t.points.size() == 3);
  CHECK(t.s == -3);
  CHECK(t.ramification_total() == 4);

  // z^4 + 4z has critical points at the cube roots of -1 plus infinity:
  // z^3 + 1 = (z + 1)(z^2 - z + 1)
  auto q = critical_points(make(IntPoly{0, 4, 0, 0, 1}, IntPoly{1}));
  CHECK(q.points.size() == 4);
  CHECK(q.points[0].location == at(-1));
  // z^4 + 4 z^... with an irreducible cubic in the Wronskian
  CHECK_THROWS_AS(critical_points(make(IntPoly{0, 2, 0, 0, 1}, IntPoly{1})), Error);
}

TEST_CASE("bicriticality") {
  CHECK(is_bicritical(make(IntPoly{1, 0, 1}, IntPoly{3, 0, 1})));
  CHECK_FALSE(is_bicritical(make(IntPoly{0, 1, 0, 1}, IntPoly{1})));
  auto cubic = make(IntPoly{1, 0, 0, 1}, IntPoly{2, 0, 0, 1});
  CHECK(is_bicritical(cubic));
  auto c = critical_points(cubic);
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0].location == at(0));
  CHECK(c.points[1].location.inf);
  CHECK_FALSE(is_bicritical(make(IntPoly{0, 2, 0, 0, 1}, IntPoly{1})));
}

TEST_CASE("Riemann-Hurwitz and the Wronskian order formula") {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto phi = random_map(rng, 2 + trial % 3, 6);
    CriticalData data;
    try {
      data = critical_points(phi);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_bicritical);
      continue;
    }
    const int d = static_cast<int>(phi.degree());
    CHECK(data.ramification_total() == 2 * d - 2);
    const IntPoly w = wronskian(phi);
    for (const auto& c : data.points) {
      if (c.location.inf)
        CHECK(c.ram_index - 1 == 2 * d - 2 - w.degree());
      else
        CHECK(c.ram_index - 1 == order_by_derivatives(w, c.location.v));
    }
    CHECK(is_bicritical(phi) == (data.points.size() == 2));
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("degree 2 maps over Q have critical field of degree at most 2") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    auto phi = random_map(rng, 2, 5);
    REQUIRE(is_bicritical(phi));
    auto data = critical_points(phi);
    CHECK(data.points.size() == 2);
    if (data.quadratic()) CHECK(data.points[0].location.conj() == data.points[1].location);
  }
}

TEST_CASE("ramification index is conjugation invariant") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    auto phi = random_map(rng, 2 + trial % 2, 5);
    auto mu = random_mobius(rng);
    auto psi = conjugate(phi, mu);
    std::vector<ExtPoint> pts = {ExtPoint::infinity(), at(0), at(1), at(Rat(-2, 3))};
    try {
      for (const auto& c : critical_points(phi).points) pts.push_back(c.location);
    } catch (const Error&) {
    }
    for (const auto& x : pts) CHECK(ramification_index(phi, x) == ramification_index(psi, mu.apply(x)));
  }
}

TEST_CASE("normal form examples") {
  auto nf = to_normal_form(make(IntPoly{7, 0, 1}, IntPoly{0, 0, 1}));
  CHECK(nf.kind == NormalFormKind::bicritical);
  CHECK(nf.a == QuadExt(7));
  CHECK(nf.b.is_zero());
  CHECK(nf.mu.equivalent(MobiusTransform::identity()));

  auto pw = to_normal_form(make(IntPoly{0, 0, 5}, IntPoly{1}));
  CHECK(pw.kind == NormalFormKind::power);
  CHECK(pw.c == QuadExt(5));

  auto ip = to_normal_form(make(IntPoly{3}, IntPoly{0, 0, 1}));
  CHECK(ip.kind == NormalFormKind::inverse_power);
  CHECK(ip.c == QuadExt(3));

  auto col = to_normal_form(collision_map());
  CHECK(col.kind == NormalFormKind::bicritical);
  CHECK(col.s == 2);
  CHECK_FALSE(col.a == col.b);
  CHECK(conjugate(col.form(), col.mu.inverse()).equivalent(ExtMap::from(collision_map())));

  CHECK_THROWS_AS(to_normal_form(make(IntPoly{0, 1, 0, 1}, IntPoly{1})), Error);
}

TEST_CASE("normal form round trip on random bicritical maps") {
  std::mt19937_64 rng(74);
  int done = 0;
  for (int trial = 0; trial < 120; ++trial) {
    RationalMap phi = random_map(rng, 2, 6);
    if (trial % 3 == 0) {
      // degree 3 bicritical map moved off 0 and infinity
      long a = static_cast<long>(rng() % 7) - 3, b = static_cast<long>(rng() % 7) - 3;
      if (a == b) continue;
      phi = conjugate(make(IntPoly{a, 0, 0, 1}, IntPoly{b, 0, 0, 1}), random_mobius(rng));
    }
    auto nf = to_normal_form(phi);
    CHECK(conjugate(nf.form(), nf.mu.inverse()).equivalent(ExtMap::from(phi)));
    CHECK(conjugate(ExtMap::from(phi), nf.mu).equivalent(nf.form()));
    if (nf.kind == NormalFormKind::bicritical) CHECK_FALSE(nf.a == nf.b);
    ++done;
  }
  CHECK(done > 80);
}

TEST_CASE("quadratic conjugate form") {
  auto qf = quadratic_conjugate_form(collision_map());
  CHECK(squarefree_kernel(qf.r.get_num() * qf.r.get_den()) == 2);
  CHECK(qf.mu.is_rational());
  CHECK(conjugate(collision_map(), qf.mu) == qf.map);
  CHECK(qf.map.eval(P1Point::infinity()) == P1Point(1));
  auto crit = critical_points(qf.map);
  CHECK(crit.points[0].location.v * crit.points[0].location.v == QuadExt(qf.r));

  // already in the target shape: identity
  auto shaped = make(IntPoly{2, 1, 1}, IntPoly{2, 3, 1});
  auto same = quadratic_conjugate_form(shaped);
  CHECK(same.map == shaped);
  CHECK(same.mu.equivalent(MobiusTransform::identity()));
  CHECK(same.a == 1);
  CHECK(same.b == 3);
  CHECK(same.r == 2);

  // (z^2 + 2)/z fixes infinity, so the c_2 search runs
  auto fixes_inf = make(IntPoly{2, 0, 1}, IntPoly{0, 1});
  auto moved = quadratic_conjugate_form(fixes_inf);
  REQUIRE(moved.c2.has_value());
  CHECK(conjugate(fixes_inf, moved.mu) == moved.map);
  CHECK(moved.map.eval(P1Point::infinity()) == P1Point(1));

  CHECK_THROWS_AS(quadratic_conjugate_form(make(IntPoly{1, 0, 1}, IntPoly{3, 0, 1})), Error);
}

TEST_CASE("quadratic conjugate form on random maps") {
  std::mt19937_64 rng(75);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 50; ++trial) {
    auto phi = random_map(rng, 2, 6);
    if (!critical_points(phi).quadratic()) continue;
    auto qf = quadratic_conjugate_form(phi);
    CHECK(conjugate(phi, qf.mu) == qf.map);
    CHECK(qf.map.p()[0] == qf.map.q()[0]);
    CHECK(qf.map.p()[2] == qf.map.q()[2]);
    CHECK(squarefree_kernel(qf.r.get_num() * qf.r.get_den()) == critical_points(phi).s);
    ++done;
  }
  CHECK(done == 50);
}

TEST_CASE("normal form conjugacy test") {
  CHECK(normal_forms_conjugate(2, 1, 2, Rat(1, 8), Rat(1, 4)));
  CHECK(normal_forms_conjugate(2, 1, 2, 1, 2));
  CHECK_FALSE(normal_forms_conjugate(2, 1, 2, 1, 3));
  std::mt19937_64 rng(76);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    QuadExt a = c(rng), b = c(rng);
    if (a.is_zero() || b.is_zero() || a == b) continue;
    unsigned d = 2 + trial % 3;
    QuadExt ad1 = 1, bd = 1;
    for (unsigned i = 0; i + 1 < d; ++i) ad1 *= a;
    for (unsigned i = 0; i < d; ++i) bd *= b;
    QuadExt a1 = ad1 * a / (bd * b), b1 = ad1 / bd;
    CHECK(normal_forms_conjugate(d, a, b, a1, b1));
    CHECK(normal_forms_conjugate(d, a1, b1, a, b));
    // the conjugacy z -> (a/b)/z carries one form to the other
    ExtMap f(FieldPoly<QuadExt>(std::vector<QuadExt>(d + 1)) + FieldPoly<QuadExt>::constant(a), FieldPoly<QuadExt>::constant(b));
    std::vector<QuadExt> zd(d + 1);
    zd[d] = 1;
    ExtMap g(FieldPoly<QuadExt>(zd) + FieldPoly<QuadExt>::constant(a), FieldPoly<QuadExt>(zd) + FieldPoly<QuadExt>::constant(b));
    ExtMap g1(FieldPoly<QuadExt>(zd) + FieldPoly<QuadExt>::constant(a1), FieldPoly<QuadExt>(zd) + FieldPoly<QuadExt>::constant(b1));
    CHECK(conjugate(g, MobiusTransform::inversion(a / b)).equivalent(g1));
    (void)f;
  }
}

TEST_CASE("critical orbit relation examples") {
  auto tr = critical_orbit_relation(make(IntPoly{-98, 0, 1}, IntPoly{0, 0, 1}), 10);
  CHECK(tr.kind == RelationKind::trailing);
  CHECK(tr.n == 1);
  CHECK(tr.m == 0);
  CHECK(tr.i == 0);
  CHECK(tr.value.inf);

  auto col = critical_orbit_relation(collision_map(), 10);
  CHECK(col.kind == RelationKind::collision);
  CHECK(col.n == 2);
  CHECK(col.value == at(Rat(2, 3)));
  CHECK(col.galois_consistent);

  auto pw = critical_orbit_relation(make(IntPoly{0, 0, 1}, IntPoly{1}), 10);
  CHECK(pw.kind == RelationKind::single_orbit_preperiodic);
  CHECK(pw.preperiod == 0);
  CHECK(pw.period == 1);

  // (z^2 + 1)/(z^2 + 3): check the search ran to the bound or hit the cap
  auto none = critical_orbit_relation(make(IntPoly{1, 0, 1}, IntPoly{3, 0, 1}), 6);
  CHECK(none.kind == RelationKind::none_found);
  CHECK(none.search_bound == 6);
}

TEST_CASE("relations over quadratic fields are Galois consistent") {
  int found = 0;
  for (long a = -4; a <= 4; ++a) {
    for (long b = -4; b <= 4; ++b) {
      for (long r : {-3, -2, -1, 2, 3, 5}) {
        if (a == b) continue;
        RationalMap phi = make(IntPoly{r, a, 1}, IntPoly{r, b, 1});
        auto rel = critical_orbit_relation(phi, 8, 4096);
        if (rel.kind == RelationKind::none_found) continue;
        ++found;
        CHECK(rel.galois_consistent);
        // trichotomy: a trailing relation forces preperiodicity
        if (rel.kind == RelationKind::collision) CHECK(rel.value.is_rational());
      }
    }
  }
  CHECK(found > 0);
}
