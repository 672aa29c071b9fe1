#include "arbordyn/prime_field.hpp"

#include <algorithm>

#include "arbordyn/error.hpp"
#include "arbordyn/factor.hpp"

namespace arbordyn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addm(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 powm(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, b, p);
    b = mulm(b, b, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorKind::invalid_argument, "zero has no inverse");
  return powm(a % p, p - 2, p);
}

PrimeFieldPoly::PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : p_(modulus), c_(std::move(coeffs)) {
  if (modulus >= (u64{1} << 63) || !is_probable_prime(from_u64(modulus)))
    throw Error(ErrorKind::invalid_argument, "modulus " + std::to_string(modulus) + " is not a prime below 2^63");
  for (auto& c : c_) c %= p_;
  trim();
}

PrimeFieldPoly::PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs, bool)
    : p_(modulus), c_(std::move(coeffs)) {
  trim();
}

PrimeFieldPoly PrimeFieldPoly::reduce(const IntPoly& f, std::uint64_t modulus) {
  const Int m = from_u64(modulus);
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  Int r;
  for (const auto& x : f.coeffs()) {
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    c.push_back(to_u64(r));
  }
  return PrimeFieldPoly(modulus, std::move(c));
}

void PrimeFieldPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PrimeFieldPoly::eval(std::uint64_t x) const {
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addm(mulm(acc, x, p_), *it, p_);
  return acc;
}

std::uint64_t PrimeFieldPoly::eval_homogeneous(std::uint64_t x, std::uint64_t w, unsigned deg_h) const {
  if (c_.empty()) return 0;
  const auto n = static_cast<unsigned>(degree());
  u64 acc = c_[n];
  u64 wp = 1;
  for (unsigned i = n; i-- > 0;) {
    wp = mulm(wp, w, p_);
    acc = addm(mulm(acc, x, p_), mulm(c_[i], wp, p_), p_);
  }
  return mulm(acc, powm(w, deg_h - n, p_), p_);
}

PrimeFieldPoly PrimeFieldPoly::operator+(const PrimeFieldPoly& o) const {
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = addm((*this)[i], o[i], p_);
  return PrimeFieldPoly(p_, std::move(r), true);
}

PrimeFieldPoly PrimeFieldPoly::operator-(const PrimeFieldPoly& o) const {
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = subm((*this)[i], o[i], p_);
  return PrimeFieldPoly(p_, std::move(r), true);
}

PrimeFieldPoly PrimeFieldPoly::operator*(const PrimeFieldPoly& o) const {
  if (c_.empty() || o.c_.empty()) return PrimeFieldPoly(p_, {}, true);
  std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = addm(r[i + j], mulm(c_[i], o.c_[j], p_), p_);
  return PrimeFieldPoly(p_, std::move(r), true);
}

PrimeFieldPoly PrimeFieldPoly::mod(const PrimeFieldPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::invalid_argument, "division by zero polynomial");
  if (degree() < divisor.degree()) return *this;
  std::vector<u64> r = c_;
  const int db = divisor.degree();
  const u64 inv = mod_inverse(divisor.lead(), p_);
  for (int k = degree(); k >= db; --k) {
    const u64 t = mulm(r[k], inv, p_);
    if (t == 0) continue;
    for (int i = 0; i <= db; ++i) r[k - db + i] = subm(r[k - db + i], mulm(t, divisor.c_[i], p_), p_);
  }
  r.resize(db);
  return PrimeFieldPoly(p_, std::move(r), true);
}

PrimeFieldPoly PrimeFieldPoly::monic() const {
  if (c_.empty()) return *this;
  const u64 inv = mod_inverse(lead(), p_);
  std::vector<u64> r = c_;
  for (auto& x : r) x = mulm(x, inv, p_);
  return PrimeFieldPoly(p_, std::move(r), true);
}

std::string PrimeFieldPoly::to_string() const {
  std::vector<Int> c;
  for (u64 x : c_) c.push_back(from_u64(x));
  return IntPoly(std::move(c)).to_string() + " mod " + std::to_string(p_);
}

PrimeFieldPoly gcd(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  PrimeFieldPoly x = a, y = b;
  while (!y.is_zero()) {
    PrimeFieldPoly r = x.mod(y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PrimeFieldPoly powmod(const PrimeFieldPoly& base, const Int& e, const PrimeFieldPoly& m) {
  const u64 p = m.modulus();
  PrimeFieldPoly result(p, {1}, true);
  result = result.mod(m);
  PrimeFieldPoly b = base.mod(m);
  for (std::size_t bit = bit_length(e); bit-- > 0;) {
    result = (result * result).mod(m);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = (result * b).mod(m);
  }
  return result;
}

bool is_irreducible(const PrimeFieldPoly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::invalid_argument, "irreducibility of a constant");
  const u64 p = f.modulus();
  const auto n = static_cast<unsigned long>(f.degree());
  if (n == 1) return true;
  const PrimeFieldPoly z(p, {0, 1});
  const Int P = from_u64(p);

  if (!(powmod(z, ipow(P, n), f) - z).mod(f).is_zero()) return false;
  for (const auto& pp : factor_integer(Int(n)).factors) {
    const unsigned long l = pp.prime.get_ui();
    PrimeFieldPoly h = powmod(z, ipow(P, n / l), f) - z;
    if (gcd(h, f).degree() != 0) return false;
  }
  return true;
}

}  // namespace arbordyn
