#include "arbordyn/int_poly.hpp"

#include <algorithm>
#include <cstring>

#include "arbordyn/error.hpp"

namespace arbordyn {

namespace {

// Below this many coefficients in the shorter operand the schoolbook loop is
// faster than packing into one big integer.
constexpr std::size_t kKroneckerMinLength = 16;

const Int& zero_int() {
  static const Int z(0);
  return z;
}

// Packs signed coefficients into slots of `slot_limbs` limbs each:
// sum c_i 2^(64 slot_limbs i).
Int pack(std::span<const Int> coeffs, std::size_t slot_limbs) {
  const std::size_t total = coeffs.size() * slot_limbs;
  Int pos, neg;
  mp_limb_t* pos_limbs = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mp_limb_t* neg_limbs = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill(pos_limbs, pos_limbs + total, mp_limb_t{0});
  std::fill(neg_limbs, neg_limbs + total, mp_limb_t{0});
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpz_srcptr c = coeffs[i].get_mpz_t();
    const std::size_t n = mpz_size(c);
    if (n == 0) continue;
    mp_limb_t* dst = (mpz_sgn(c) > 0 ? pos_limbs : neg_limbs) + i * slot_limbs;
    std::memcpy(dst, mpz_limbs_read(c), n * sizeof(mp_limb_t));
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  return pos - neg;
}

std::vector<Int> unpack(const Int& packed, std::size_t slot_limbs, std::size_t count) {
  const mpz_srcptr h = packed.get_mpz_t();
  const int sign = mpz_sgn(h);
  const std::size_t size = mpz_size(h);
  const mp_limb_t* limbs = mpz_limbs_read(h);
  const std::size_t slot_bits = 64 * slot_limbs;
  Int half, full;
  mpz_setbit(half.get_mpz_t(), slot_bits - 1);
  mpz_setbit(full.get_mpz_t(), slot_bits);

  std::vector<Int> out(count);
  bool carry = false;
  for (std::size_t i = 0; i < count; ++i) {
    Int v;
    const std::size_t begin = i * slot_limbs;
    if (begin < size) {
      const std::size_t n = std::min(slot_limbs, size - begin);
      mp_limb_t* dst = mpz_limbs_write(v.get_mpz_t(), static_cast<mp_size_t>(n));
      std::memcpy(dst, limbs + begin, n * sizeof(mp_limb_t));
      mpz_limbs_finish(v.get_mpz_t(), static_cast<mp_size_t>(n));
    }
    if (carry) v += 1;
    if (v >= half) {
      v -= full;
      carry = true;
    } else {
      carry = false;
    }
    if (sign < 0) v = -v;
    out[i] = std::move(v);
  }
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t power) {
  std::vector<Int> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_int();
}

const Int& IntPoly::lead() const {
  if (coeffs_.empty()) throw Error(ErrorKind::invalid_argument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  std::vector<Int> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t shorter = std::min(a.coeffs().size(), b.coeffs().size());
  // |c_k| <= shorter * max|a| * max|b|, plus one bit for the sign.
  const std::size_t bound_bits =
      a.max_coeff_bits() + b.max_coeff_bits() + bit_length(Int(static_cast<unsigned long>(shorter))) + 2;
  const std::size_t slot_limbs = (bound_bits + 63) / 64;
  Int pa = pack(a.coeffs(), slot_limbs);
  Int pb = pack(b.coeffs(), slot_limbs);
  Int prod = pa * pb;
  return IntPoly(unpack(prod, slot_limbs, a.coeffs().size() + b.coeffs().size() - 1));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (std::min(a.coeffs_.size(), b.coeffs_.size()) >= kKroneckerMinLength)
    return multiply_kronecker(a, b);
  return multiply_schoolbook(a, b);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int c = content();
  if (lead() < 0) c = -c;
  return divexact(c);
}

IntPoly IntPoly::divexact(const Int& d) const {
  if (d == 0) throw Error(ErrorKind::invalid_argument, "division by zero");
  IntPoly r = *this;
  for (auto& c : r.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw Error(ErrorKind::invariant_violation, "inexact scalar division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

std::size_t IntPoly::max_coeff_bits() const {
  std::size_t m = 0;
  for (const auto& c : coeffs_) m = std::max(m, bit_length(c));
  return m;
}

bool IntPoly::is_even() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  if (coeffs_.empty()) return Rat(0);
  const auto n = static_cast<unsigned>(degree());
  Int num = eval_homogeneous(x.get_num(), x.get_den(), n);
  return make_rat(num, ipow(x.get_den(), n));
}

Int IntPoly::eval_homogeneous(const Int& zv, const Int& wv, unsigned deg_h) const {
  if (coeffs_.empty()) return Int(0);
  const auto n = static_cast<unsigned>(degree());
  if (deg_h < n) throw Error(ErrorKind::invalid_argument, "homogeneous degree below polynomial degree");
  Int acc = coeffs_[n];
  Int wp = 1;
  for (unsigned i = n; i-- > 0;) {
    wp *= wv;
    acc *= zv;
    mpz_addmul(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), wp.get_mpz_t());
  }
  if (deg_h > n) acc *= ipow(wv, deg_h - n);
  return acc;
}

IntPoly IntPoly::reversed(unsigned n) const {
  if (is_zero()) return {};
  if (static_cast<int>(n) < degree()) throw Error(ErrorKind::invalid_argument, "reversal degree too small");
  std::vector<Int> r(n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[n - i] = coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scale_argument(const Int& c) const {
  IntPoly r = *this;
  Int cp = 1;
  for (auto& x : r.coeffs_) {
    x *= cp;
    cp *= c;
  }
  r.trim();
  return r;
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = IntPoly::constant(Int(1));
  IntPoly b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const int steps = a.degree() - db + 1;
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  const Int& lb = b.lead();
  int done = 0;
  int dr = a.degree();
  while (dr >= db) {
    Int lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) mpz_submul(r[dr - db + i].get_mpz_t(), lr.get_mpz_t(), b[i].get_mpz_t());
    ++done;
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(dr + 1);
  }
  IntPoly rem(std::move(r));
  if (done < steps) rem *= ipow(lb, static_cast<unsigned long>(steps - done));
  return rem;
}

bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
  if (b.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<Int> q(a.degree() - db + 1);
  const Int& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return false;
    Int t;
    mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) mpz_submul(r[k - db + i].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    q[k - db] = std::move(t);
  }
  for (int k = 0; k < db; ++k)
    if (r[k] != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!divides(b, a, &q)) throw Error(ErrorKind::invariant_violation, "inexact polynomial division");
  return q;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::invalid_argument, "resultant of zero polynomial");
  if (f.degree() == 0) return ipow(f.lead(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return ipow(g.lead(), static_cast<unsigned long>(f.degree()));

  IntPoly A = f;
  IntPoly B = g;
  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
  }
  const Int ca = A.content();
  const Int cb = B.content();
  A = A.divexact(ca);
  B = B.divexact(cb);
  const Int scale = ipow(ca, static_cast<unsigned long>(B.degree())) * ipow(cb, static_cast<unsigned long>(A.degree()));

  Int g_coef = 1;
  Int h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.divexact(g_coef * ipow(h, static_cast<unsigned long>(delta)));
    g_coef = A.lead();
    if (delta > 0) {
      Int num = ipow(g_coef, static_cast<unsigned long>(delta));
      Int den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.is_zero()) return Int(0);
    if (B.degree() == 0) break;
  }
  const auto da = static_cast<unsigned long>(A.degree());
  Int num = ipow(B.lead(), da);
  Int den = ipow(h, da - 1);
  Int res;
  mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return sign * scale * res;
}

Rat discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::invalid_argument, "discriminant of constant polynomial");
  const long n = f.degree();
  Int res = resultant(f, f.derivative());
  if (((n * (n - 1)) / 2) % 2 != 0) res = -res;
  return make_rat(res, f.lead());
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::invalid_argument, "squarefree part of zero polynomial");
  if (f.degree() == 0) return IntPoly::constant(Int(1));
  IntPoly g = gcd(f, f.derivative());
  IntPoly q;
  if (!divides(g, f.primitive_part(), &q)) throw Error(ErrorKind::invariant_violation, "gcd does not divide input");
  return q.primitive_part();
}

std::optional<IntPoly> exact_sqrt(const IntPoly& f) {
  if (f.is_zero()) return IntPoly{};
  if (f.degree() % 2 != 0) return std::nullopt;
  Int top;
  if (!is_perfect_square(f.lead(), &top)) return std::nullopt;
  const int m = f.degree() / 2;
  std::vector<Int> h(m + 1);
  h[m] = top;
  const Int two_top = 2 * top;
  for (int k = 1; k <= m; ++k) {
    // coefficient of z^(2m-k): 2 h_m h_{m-k} + sum_{i=m-k+1}^{m-1} h_i h_{2m-k-i}
    Int acc = f[2 * m - k];
    for (int i = m - k + 1; i <= m - 1; ++i) mpz_submul(acc.get_mpz_t(), h[i].get_mpz_t(), h[2 * m - k - i].get_mpz_t());
    if (!mpz_divisible_p(acc.get_mpz_t(), two_top.get_mpz_t())) return std::nullopt;
    mpz_divexact(h[m - k].get_mpz_t(), acc.get_mpz_t(), two_top.get_mpz_t());
  }
  IntPoly root(std::move(h));
  if (root * root != f) return std::nullopt;
  return root;
}

}  // namespace arbordyn
