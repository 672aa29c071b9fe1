#include "arbordyn/ratmap.hpp"

#include <algorithm>
#include <unordered_map>

#include "arbordyn/error.hpp"

namespace arbordyn {

P1Point::P1Point(const Int& num, const Int& den) : num_(num), den_(den) {
  if (num_ == 0 && den_ == 0) throw Error(ErrorKind::invalid_argument, "[0 : 0] is not a point of P^1");
  if (den_ == 0) {
    num_ = 1;
    return;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rat P1Point::value() const {
  if (is_infinity()) throw Error(ErrorKind::invalid_argument, "point at infinity has no finite value");
  Rat r(num_, den_);
  return r;
}

ExtPoint P1Point::to_ext() const {
  return is_infinity() ? ExtPoint::infinity() : ExtPoint::finite(QuadExt(value()));
}

std::string P1Point::to_string() const {
  if (is_infinity()) return "inf";
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

P1Point P1Point::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "inf" || t == "oo" || t == "infinity" || t == "∞") return infinity();
  return P1Point(parse_rat(t));
}

std::size_t P1PointHash::operator()(const P1Point& p) const noexcept {
  std::size_t h = mpz_size(p.num().get_mpz_t()) * 1315423911u;
  h ^= static_cast<std::size_t>(mpz_getlimbn(p.num().get_mpz_t(), 0)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(mpz_getlimbn(p.den().get_mpz_t(), 0)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(mpz_sgn(p.num().get_mpz_t()) + 1);
  return h;
}

RationalMap RationalMap::create(IntPoly p, IntPoly q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::degenerate_map, "degenerate map: zero numerator or denominator");
  const int d = std::max(p.degree(), q.degree());
  if (resultant(p, q) == 0) throw Error(ErrorKind::degenerate_map, "degenerate map: numerator and denominator share a root");
  if (d < 2) throw Error(ErrorKind::degree_too_small, "degree too small: " + std::to_string(d) + " < 2");
  Int g;
  Int cp = p.content();
  Int cq = q.content();
  mpz_gcd(g.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
  const Int& top = p.degree() == d ? p.lead() : q.lead();
  if (top < 0) g = -g;
  if (g != 1) {
    p = p.divexact(g);
    q = q.divexact(g);
  }
  return RationalMap(std::move(p), std::move(q), static_cast<unsigned>(d));
}

P1Point RationalMap::eval(const P1Point& pt) const {
  Int x = p_.eval_homogeneous(pt.num(), pt.den(), d_);
  Int y = q_.eval_homogeneous(pt.num(), pt.den(), d_);
  return P1Point(x, y);
}

ExtPoint RationalMap::eval(const ExtPoint& pt) const { return ExtMap::from(*this).eval(pt); }

std::string RationalMap::to_string() const { return "(" + p_.to_string() + ")/(" + q_.to_string() + ")"; }

Int homogeneous_resultant(const RationalMap& phi) {
  const IntPoly& p = phi.p();
  const IntPoly& q = phi.q();
  const auto d = static_cast<unsigned long>(phi.degree());
  const Int r = resultant(p, q);
  if (static_cast<unsigned long>(q.degree()) < d) {
    // Extra leading zeros in the second form: expand along the first column.
    return ipow(p.lead(), d - q.degree()) * r;
  }
  if (static_cast<unsigned long>(p.degree()) < d) {
    const unsigned long j = p.degree();
    // Res_{d,d}(P, Q) = (-1)^(d d) Res_{d,d}(Q, P) = (-1)^d lc(q)^(d-j) Res_{d,j}(q, p)
    // and Res_{d,j}(q, p) = (-1)^(d j) Res(p, q).
    Int out = ipow(q.lead(), d - j) * r;
    if ((d + d * j) % 2 == 1) out = -out;
    return out;
  }
  return r;
}

IterateLadder::IterateLadder(RationalMap base, std::size_t growth_cap_bits)
    : base_(std::move(base)), cap_(growth_cap_bits) {
  if (cap_ == 0) throw Error(ErrorKind::invalid_argument, "growth cap must be positive");
  levels_.emplace_back(base_.p(), base_.q());
}

void IterateLadder::extend_to(std::size_t n) {
  const unsigned d = base_.degree();
  const std::size_t base_bits = std::max(base_.p().max_coeff_bits(), base_.q().max_coeff_bits());
  while (levels_.size() < n) {
    const auto& [pp, qq] = levels_.back();
    const std::size_t prev_bits = std::max(pp.max_coeff_bits(), qq.max_coeff_bits());
    const std::size_t prev_len = static_cast<std::size_t>(std::max(pp.degree(), qq.degree())) + 1;
    const std::size_t projected =
        d * prev_bits + base_bits + d * bit_length(Int(static_cast<unsigned long>(prev_len))) + bit_length(Int(d + 1UL));
    if (projected > cap_) {
      throw Error(ErrorKind::growth_cap, "growth cap exceeded: level " + std::to_string(levels_.size() + 1) +
                                             " projects to " + std::to_string(projected) + " bits > cap " +
                                             std::to_string(cap_));
    }
    std::vector<IntPoly> ppow(d + 1), qpow(d + 1);
    ppow[0] = qpow[0] = IntPoly::constant(Int(1));
    for (unsigned i = 1; i <= d; ++i) {
      ppow[i] = ppow[i - 1] * pp;
      qpow[i] = qpow[i - 1] * qq;
    }
    IntPoly np, nq;
    for (unsigned i = 0; i <= d; ++i) {
      const Int& ai = base_.p()[i];
      const Int& bi = base_.q()[i];
      if (ai == 0 && bi == 0) continue;
      IntPoly term = ppow[i] * qpow[d - i];
      if (ai != 0) np += term * ai;
      if (bi != 0) nq += term * bi;
    }
    levels_.emplace_back(std::move(np), std::move(nq));
  }
}

const std::pair<IntPoly, IntPoly>& IterateLadder::level(std::size_t n) const {
  if (n == 0 || n > levels_.size())
    throw Error(ErrorKind::invalid_argument, "ladder level " + std::to_string(n) + " not computed");
  return levels_[n - 1];
}

const std::pair<IntPoly, IntPoly>& IterateLadder::at(std::size_t n) {
  extend_to(n);
  return level(n);
}

std::vector<std::pair<Int, Int>> iterate_forms(const RationalMap& phi, const Int& u, const Int& v, std::size_t n) {
  if (u == 0 && v == 0) throw Error(ErrorKind::invalid_argument, "[0 : 0] is not a point of P^1");
  std::vector<std::pair<Int, Int>> out;
  out.reserve(n + 1);
  out.emplace_back(u, v);
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& [x, y] = out.back();
    Int nx = phi.p().eval_homogeneous(x, y, phi.degree());
    Int ny = phi.q().eval_homogeneous(x, y, phi.degree());
    out.emplace_back(std::move(nx), std::move(ny));
  }
  return out;
}

const char* to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::preperiodic: return "preperiodic";
    case OrbitStatus::escaped: return "escaped";
    case OrbitStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

OrbitRecord orbit(const RationalMap& phi, const P1Point& start, std::size_t max_steps, std::size_t height_cap_bits) {
  OrbitRecord rec;
  std::unordered_map<P1Point, std::size_t, P1PointHash> seen;
  P1Point cur = start;
  rec.points.push_back(cur);
  seen.emplace(cur, 0);
  if (cur.height_bits() > height_cap_bits) {
    rec.status = OrbitStatus::escaped;
    return rec;
  }
  for (std::size_t step = 1; step <= max_steps; ++step) {
    cur = phi.eval(cur);
    auto it = seen.find(cur);
    if (it != seen.end()) {
      rec.status = OrbitStatus::preperiodic;
      rec.preperiod = it->second;
      rec.period = step - it->second;
      return rec;
    }
    rec.points.push_back(cur);
    seen.emplace(cur, step);
    if (cur.height_bits() > height_cap_bits) {
      rec.status = OrbitStatus::escaped;
      return rec;
    }
  }
  rec.status = OrbitStatus::budget_exhausted;
  return rec;
}

MobiusTransform MobiusTransform::compose(const MobiusTransform& in) const {
  return {a * in.a + b * in.c, a * in.b + b * in.e, c * in.a + e * in.c, c * in.b + e * in.e};
}

ExtPoint MobiusTransform::apply(const ExtPoint& pt) const {
  if (pt.inf) return c.is_zero() ? ExtPoint::infinity() : ExtPoint::finite(a / c);
  QuadExt den = c * pt.v + e;
  QuadExt num = a * pt.v + b;
  if (den.is_zero()) return ExtPoint::infinity();
  return ExtPoint::finite(num / den);
}

bool MobiusTransform::is_rational() const {
  return a.is_rational() && b.is_rational() && c.is_rational() && e.is_rational();
}

bool MobiusTransform::equivalent(const MobiusTransform& o) const {
  const QuadExt v[4] = {a, b, c, e};
  const QuadExt w[4] = {o.a, o.b, o.c, o.e};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(v[i] * w[j] == v[j] * w[i])) return false;
  return true;
}

MobiusTransform MobiusTransform::normalized() const {
  const QuadExt k = c.is_zero() ? e : c;
  return {a / k, b / k, c / k, e / k};
}

std::string MobiusTransform::to_string() const {
  return "z -> ((" + a.to_string() + ")*z + (" + b.to_string() + "))/((" + c.to_string() + ")*z + (" +
         e.to_string() + "))";
}

ExtMap::ExtMap(FieldPoly<QuadExt> p, FieldPoly<QuadExt> q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero() && q_.is_zero()) throw Error(ErrorKind::degenerate_map, "degenerate map: 0/0");
  d_ = static_cast<unsigned>(std::max(p_.degree(), q_.degree()));
}

ExtMap ExtMap::from(const RationalMap& phi) {
  return ExtMap(FieldPoly<QuadExt>::from(phi.p()), FieldPoly<QuadExt>::from(phi.q()));
}

ExtPoint ExtMap::eval(const ExtPoint& pt) const {
  QuadExt x, y;
  if (pt.inf) {
    x = p_[d_];
    y = q_[d_];
  } else {
    x = p_.eval_homogeneous(pt.v, QuadExt(1), d_);
    y = q_.eval_homogeneous(pt.v, QuadExt(1), d_);
  }
  if (y.is_zero()) {
    if (x.is_zero()) throw Error(ErrorKind::degenerate_map, "degenerate map: 0/0 at " + pt.to_string());
    return ExtPoint::infinity();
  }
  return ExtPoint::finite(x / y);
}

bool ExtMap::equivalent(const ExtMap& o) const {
  return d_ == o.d_ && (p_ * o.q_ - o.p_ * q_).is_zero();
}

ExtMap ExtMap::normalized() const {
  const QuadExt k = p_.degree() == static_cast<int>(d_) ? p_.lead() : q_.lead();
  const QuadExt inv = QuadExt(1) / k;
  return ExtMap(p_ * inv, q_ * inv);
}

bool ExtMap::is_rational() const {
  ExtMap n = normalized();
  for (const auto& c : n.p_.coeffs())
    if (!c.is_rational()) return false;
  for (const auto& c : n.q_.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

RationalMap ExtMap::to_rational() const {
  ExtMap n = normalized();
  Int lcm = 1;
  auto collect = [&](const FieldPoly<QuadExt>& f) {
    for (const auto& c : f.coeffs()) {
      if (!c.is_rational()) throw Error(ErrorKind::not_rational, "result not defined over Q: " + to_string());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.x().get_den().get_mpz_t());
    }
  };
  collect(n.p_);
  collect(n.q_);
  auto to_int = [&](const FieldPoly<QuadExt>& f) {
    std::vector<Int> v;
    for (const auto& c : f.coeffs()) {
      Rat scaled = c.x() * Rat(lcm);
      v.push_back(scaled.get_num());
    }
    return IntPoly(std::move(v));
  };
  return RationalMap::create(to_int(n.p_), to_int(n.q_));
}

namespace {

std::string field_poly_string(const FieldPoly<QuadExt>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const QuadExt& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    if (k == 0) {
      out += "(" + cs + ")";
    } else {
      if (!(c == QuadExt(1))) out += "(" + cs + ")*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace

std::string ExtMap::to_string() const { return "(" + field_poly_string(p_) + ")/(" + field_poly_string(q_) + ")"; }

ExtMap conjugate(const ExtMap& phi, const MobiusTransform& mu) {
  if (mu.det().is_zero()) throw Error(ErrorKind::invalid_argument, "Mobius transform is not invertible");
  const unsigned d = phi.degree();
  // mu^(-1)(z) = (e z - b) / (-c z + a); substitute into the degree-d forms.
  const auto zf = FieldPoly<QuadExt>::linear(mu.e, -mu.b);
  const auto wf = FieldPoly<QuadExt>::linear(-mu.c, mu.a);
  std::vector<FieldPoly<QuadExt>> zp(d + 1), wp(d + 1);
  zp[0] = wp[0] = FieldPoly<QuadExt>::constant(QuadExt(1));
  for (unsigned i = 1; i <= d; ++i) {
    zp[i] = zp[i - 1] * zf;
    wp[i] = wp[i - 1] * wf;
  }
  FieldPoly<QuadExt> P, Q;
  for (unsigned i = 0; i <= d; ++i) {
    const QuadExt pi = phi.p()[i];
    const QuadExt qi = phi.q()[i];
    if (pi.is_zero() && qi.is_zero()) continue;
    const auto term = zp[i] * wp[d - i];
    if (!pi.is_zero()) P = P + term * pi;
    if (!qi.is_zero()) Q = Q + term * qi;
  }
  return ExtMap(P * mu.a + Q * mu.b, P * mu.c + Q * mu.e);
}

RationalMap conjugate(const RationalMap& phi, const MobiusTransform& mu) {
  return conjugate(ExtMap::from(phi), mu).to_rational();
}

}  // namespace arbordyn
