#include "arbordyn/critical.hpp"

#include <algorithm>

#include "arbordyn/error.hpp"
#include "arbordyn/factor.hpp"

namespace arbordyn {

IntPoly wronskian(const RationalMap& phi) {
  return phi.p().derivative() * phi.q() - phi.q().derivative() * phi.p();
}

int ramification_index(const ExtMap& phi, const ExtPoint& alpha) {
  if (alpha.inf) {
    const unsigned d = phi.degree();
    std::vector<QuadExt> rp(d + 1), rq(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
      rp[i] = phi.q()[d - i];
      rq[i] = phi.p()[d - i];
    }
    return ramification_index(ExtMap(FieldPoly<QuadExt>(std::move(rp)), FieldPoly<QuadExt>(std::move(rq))),
                              ExtPoint::finite(QuadExt(0)));
  }
  const QuadExt pa = phi.p().eval(alpha.v);
  const QuadExt qa = phi.q().eval(alpha.v);
  const auto h = phi.p() * qa - phi.q() * pa;
  if (h.is_zero()) throw Error(ErrorKind::degenerate_map, "ramification index of a constant map");
  return h.root_multiplicity(alpha.v);
}

int ramification_index(const RationalMap& phi, const ExtPoint& alpha) {
  return ramification_index(ExtMap::from(phi), alpha);
}

int CriticalData::ramification_total() const {
  int t = 0;
  for (const auto& c : points) t += c.ram_index - 1;
  return t;
}

namespace {

std::vector<Int> positive_divisors(const Int& n) {
  Factorization f = factor_integer(n);
  if (f.cofactor_status == CofactorStatus::composite_unfactored)
    throw Error(ErrorKind::budget_exhausted, "could not factor " + to_string(n) + " for the rational root search");
  std::vector<PrimePower> pps = f.factors;
  if (f.cofactor != 1) pps.push_back({f.cofactor, 1, false});
  std::vector<Int> out{Int(1)};
  for (const auto& pp : pps) {
    const std::size_t k = out.size();
    Int pw = 1;
    for (unsigned long e = 1; e <= pp.exponent; ++e) {
      pw *= pp.prime;
      for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Splits a squarefree primitive polynomial into its rational roots and the
// product of the remaining irreducible factors.
void split_rational_roots(IntPoly f, std::vector<Rat>& roots, IntPoly& rest) {
  while (f.degree() >= 1 && f[0] == 0) {
    roots.emplace_back(0);
    f = divexact(f, IntPoly::z());
  }
  if (f.degree() == 1) {
    roots.push_back(make_rat(-f[0], f[1]));
    rest = IntPoly{1};
    return;
  }
  if (f.degree() == 2) {
    Int disc = f[1] * f[1] - 4 * f[0] * f[2], root;
    if (is_perfect_square(disc, &root)) {
      roots.push_back(make_rat(-f[1] - root, 2 * f[2]));
      roots.push_back(make_rat(-f[1] + root, 2 * f[2]));
      rest = IntPoly{1};
    } else {
      rest = f;
    }
    return;
  }
  if (f.degree() >= 3) {
    const auto us = positive_divisors(abs(f[0]));
    const auto vs = positive_divisors(abs(f.lead()));
    for (const auto& v : vs) {
      for (const auto& u : us) {
        if (f.degree() < 1) break;
        if (gcd(u, v) != 1) continue;
        for (int sign : {-1, 1}) {
          const Int num = sign * u;
          if (f.eval_homogeneous(num, v, f.degree()) == 0) {
            roots.push_back(make_rat(num, v));
            f = divexact(f, IntPoly(std::vector<Int>{-num, v}));
          }
        }
      }
    }
    if (f.degree() <= 2) {
      split_rational_roots(f, roots, rest);
      return;
    }
  }
  rest = f;
}


}  // namespace

CriticalData critical_points(const RationalMap& phi) {
  const int d = static_cast<int>(phi.degree());
  const IntPoly w = wronskian(phi);
  CriticalData out;
  std::vector<Rat> roots;
  IntPoly rest{1};
  if (w.degree() >= 1) split_rational_roots(squarefree_part(w), roots, rest);
  if (rest.degree() >= 3)
    throw Error(ErrorKind::not_bicritical, "critical points outside quadratic extensions: factor " + rest.to_string());
  std::sort(roots.begin(), roots.end());
  const ExtMap ext = ExtMap::from(phi);
  for (const auto& r : roots) {
    ExtPoint pt = ExtPoint::finite(QuadExt(r));
    out.points.push_back({pt, ramification_index(ext, pt)});
  }
  if (2 * d - 2 - w.degree() > 0) out.points.push_back({ExtPoint::infinity(), ramification_index(ext, ExtPoint::infinity())});
  if (rest.degree() == 2) {
    const Int A = rest[2], B = rest[1], C = rest[0];
    const Int disc = B * B - 4 * A * C;
    const Int s = squarefree_kernel(disc);
    Int k;
    is_perfect_square(Int(disc / s), &k);
    const Rat x = make_rat(-B, 2 * A);
    const Rat y = abs(make_rat(k, 2 * A));
    for (const Rat& yy : {y, Rat(-y)}) {
      ExtPoint pt = ExtPoint::finite(QuadExt(x, yy, s));
      out.points.push_back({pt, ramification_index(ext, pt)});
    }
    out.s = s;
  }
  for (const auto& c : out.points)
    if (c.ram_index < 2)
      throw Error(ErrorKind::invariant_violation, "listed critical point " + c.location.to_string() + " is unramified");
  return out;
}

bool is_bicritical(const RationalMap& phi) {
  const int d = static_cast<int>(phi.degree());
  const IntPoly w = wronskian(phi);
  int count = 2 * d - 2 - w.degree() > 0 ? 1 : 0;
  if (w.degree() >= 1) count += squarefree_part(w).degree();
  return count == 2;
}

const char* to_string(NormalFormKind k) {
  switch (k) {
    case NormalFormKind::power: return "power";
    case NormalFormKind::inverse_power: return "inverse_power";
    case NormalFormKind::bicritical: return "bicritical";
  }
  return "?";
}

ExtMap NormalForm::form() const {
  std::vector<QuadExt> zd(degree + 1);
  zd[degree] = 1;
  const auto zpow = FieldPoly<QuadExt>(zd);
  const auto one = FieldPoly<QuadExt>::constant(1);
  switch (kind) {
    case NormalFormKind::power: return ExtMap(zpow * c, one);
    case NormalFormKind::inverse_power: return ExtMap(one * c, zpow);
    case NormalFormKind::bicritical:
      return ExtMap(zpow + FieldPoly<QuadExt>::constant(a), zpow + FieldPoly<QuadExt>::constant(b));
  }
  return ExtMap(one, one);
}

namespace {

struct MonomialShape {
  QuadExt c1, a, c2, b;
};

// (c1 z^d + a) / (c2 z^d + b); anything else means the critical points are
// not at 0 and infinity.
MonomialShape monomial_shape(const ExtMap& m) {
  const unsigned d = m.degree();
  for (unsigned i = 1; i < d; ++i)
    if (!m.p()[i].is_zero() || !m.q()[i].is_zero())
      throw Error(ErrorKind::invariant_violation, "conjugated map is not of the form (c1 z^d + a)/(c2 z^d + b): " + m.to_string());
  return {m.p()[d], m.p()[0], m.q()[d], m.q()[0]};
}

}  // namespace

NormalForm to_normal_form(const RationalMap& phi) {
  const CriticalData data = critical_points(phi);
  if (data.points.size() != 2)
    throw Error(ErrorKind::not_bicritical, "map has " + std::to_string(data.points.size()) + " critical points");
  const ExtPoint& g1 = data.points[0].location;
  const ExtPoint& g2 = data.points[1].location;
  NormalForm nf;
  nf.degree = phi.degree();
  nf.s = data.s;
  if (g2.inf)
    nf.mu = MobiusTransform::translation(-g1.v);
  else if (g1.inf)
    nf.mu = MobiusTransform{0, 1, 1, -g2.v};
  else
    nf.mu = MobiusTransform{1, -g1.v, 1, -g2.v};

  ExtMap m = conjugate(ExtMap::from(phi), nf.mu).normalized();
  MonomialShape sh = monomial_shape(m);
  if (sh.a.is_zero() && sh.c2.is_zero()) {
    nf.kind = NormalFormKind::power;
    nf.c = sh.c1 / sh.b;
    return nf;
  }
  if (sh.b.is_zero() && sh.c1.is_zero()) {
    nf.kind = NormalFormKind::inverse_power;
    nf.c = sh.a / sh.c2;
    return nf;
  }
  if (sh.c1.is_zero() || sh.c2.is_zero()) {
    const auto inv = MobiusTransform::inversion();
    nf.mu = inv.compose(nf.mu);
    m = conjugate(m, inv).normalized();
    sh = monomial_shape(m);
  }
  const QuadExt c3 = sh.c1 / sh.c2;
  const auto scale = MobiusTransform::scaling(QuadExt(1) / c3);
  nf.mu = scale.compose(nf.mu);
  m = conjugate(m, scale).normalized();
  sh = monomial_shape(m);
  if (!(sh.c1 == QuadExt(1)) || !(sh.c2 == QuadExt(1)) || sh.a == sh.b)
    throw Error(ErrorKind::invariant_violation, "normal form pipeline produced " + m.to_string());
  nf.kind = NormalFormKind::bicritical;
  nf.a = sh.a;
  nf.b = sh.b;
  return nf;
}

QuadraticForm quadratic_conjugate_form(const RationalMap& phi) {
  if (phi.degree() != 2) throw Error(ErrorKind::precondition, "quadratic_conjugate_form needs a degree 2 map");
  const CriticalData data = critical_points(phi);
  if (!data.quadratic()) throw Error(ErrorKind::precondition, "critical points are rational; use to_normal_form");
  const QuadExt& g = data.points[0].location.v;
  const Rat c0 = g.x(), c1 = g.y();
  const Int s = data.s;

  QuadraticForm out{0, 0, 0, MobiusTransform{Rat(Rat(1) / c1), Rat(-c0 / c1), 0, 1}, phi, std::nullopt};
  RationalMap cur = conjugate(phi, out.mu);
  auto bad_infinity = [](const RationalMap& m) {
    P1Point v = m.eval(P1Point::infinity());
    return v.is_infinity() || v.num() == 0;
  };
  if (bad_infinity(cur)) {
    bool found = false;
    for (long c2 = 0; c2 <= 6 && !found; ++c2) {
      MobiusTransform mu{c2, Int(-s), 1, -c2};
      RationalMap next = conjugate(cur, mu);
      if (bad_infinity(next)) continue;
      out.mu = mu.compose(out.mu);
      out.c2 = c2;
      cur = next;
      found = true;
    }
    if (!found) throw Error(ErrorKind::invariant_violation, "no c_2 in 0..6 moves infinity off {0, infinity}");
  }
  const Rat c3 = Rat(1) / cur.eval(P1Point::infinity()).value();
  const auto scale = MobiusTransform::scaling(c3);
  out.mu = scale.compose(out.mu);
  cur = conjugate(cur, scale);
  out.r = c3 * c3 * Rat(s);
  const Rat lp(cur.p()[2]), lq(cur.q()[2]);
  if (lp != lq) throw Error(ErrorKind::invariant_violation, "scaled map does not send infinity to 1");
  out.a = Rat(cur.p()[1]) / lp;
  out.b = Rat(cur.q()[1]) / lp;
  if (Rat(cur.p()[0]) / lp != out.r || Rat(cur.q()[0]) / lp != out.r)
    throw Error(ErrorKind::invariant_violation, "constant terms differ from r in " + cur.to_string());
  out.map = cur;
  return out;
}

bool normal_forms_conjugate(unsigned d, const QuadExt& a, const QuadExt& b, const QuadExt& a1, const QuadExt& b1) {
  if (a == a1 && b == b1) return true;
  if (b.is_zero()) return false;
  QuadExt ad1 = 1, bd = 1;
  for (unsigned i = 0; i + 1 < d; ++i) ad1 *= a;
  for (unsigned i = 0; i < d; ++i) bd *= b;
  return a1 == ad1 * a / (bd * b) && b1 == ad1 / bd;
}

const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::trailing: return "trailing";
    case RelationKind::collision: return "collision";
    case RelationKind::single_orbit_preperiodic: return "single_orbit_preperiodic";
    case RelationKind::none_found: return "none_found";
  }
  return "?";
}

namespace {

// First (t, s) with orbit[s] == orbit[t], s minimal.
std::optional<std::pair<std::size_t, std::size_t>> first_repeat(const std::vector<ExtPoint>& orb, std::size_t upto) {
  for (std::size_t s = 1; s <= upto && s < orb.size(); ++s)
    for (std::size_t t = 0; t < s; ++t)
      if (orb[s] == orb[t]) return std::make_pair(t, s);
  return std::nullopt;
}

}  // namespace

OrbitRelation critical_orbit_relation(const RationalMap& phi, std::size_t bound, std::size_t height_cap_bits) {
  const CriticalData data = critical_points(phi);
  if (data.points.size() != 2)
    throw Error(ErrorKind::not_bicritical, "map has " + std::to_string(data.points.size()) + " critical points");
  const ExtMap ext = ExtMap::from(phi);
  OrbitRelation rel;
  rel.search_bound = bound;
  std::vector<ExtPoint> orb[2];
  for (int i = 0; i < 2; ++i) {
    orb[i].push_back(data.points[i].location);
    while (orb[i].size() <= bound) {
      ExtPoint next = ext.eval(orb[i].back());
      if (next.height_bits() > height_cap_bits) {
        rel.height_capped = true;
        break;
      }
      orb[i].push_back(next);
    }
    rel.depth[i] = orb[i].size() - 1;
  }
  auto has = [&](int i, std::size_t k) { return k < orb[i].size(); };

  for (std::size_t total = 1; total <= rel.depth[0] + rel.depth[1]; ++total) {
    for (std::size_t n = total / 2 + 1; n <= total; ++n) {
      const std::size_t m = total - n;
      for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        if (has(i, n) && has(j, m) && orb[i][n] == orb[j][m]) {
          rel.kind = RelationKind::trailing;
          rel.n = n;
          rel.m = m;
          rel.i = i;
          rel.j = j;
          rel.value = orb[i][n];
          if (data.quadratic() && has(j, n) && has(i, m)) rel.galois_consistent = orb[j][n] == orb[i][m];
          return rel;
        }
      }
    }
  }
  for (std::size_t n = 1; n <= std::min(rel.depth[0], rel.depth[1]); ++n) {
    if (orb[0][n] == orb[1][n]) {
      rel.kind = RelationKind::collision;
      rel.n = rel.m = n;
      rel.value = orb[0][n];
      if (data.quadratic()) rel.galois_consistent = orb[0][n].is_rational();
      return rel;
    }
  }
  const std::size_t deepest = std::max(rel.depth[0], rel.depth[1]);
  for (std::size_t s = 1; s <= deepest; ++s) {
    for (int i = 0; i < 2; ++i) {
      if (!has(i, s)) continue;
      for (std::size_t t = 0; t < s; ++t) {
        if (!(orb[i][s] == orb[i][t])) continue;
        rel.kind = RelationKind::single_orbit_preperiodic;
        rel.i = rel.j = i;
        rel.preperiod = t;
        rel.period = s - t;
        rel.value = orb[i][t];
        if (data.quadratic()) {
          auto other = first_repeat(orb[1 - i], s);
          rel.galois_consistent = other && other->first == t && other->second == s;
        }
        return rel;
      }
    }
  }
  return rel;
}

}  // namespace arbordyn
