#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arbordyn/int_poly.hpp"

namespace arbordyn {

/// Polynomial over F_p with p < 2^63, coefficients low to high in [0, p).
class PrimeFieldPoly {
 public:
  /// Throws Error(invalid_argument) unless `modulus` is prime.
  PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
  static PrimeFieldPoly reduce(const IntPoly& f, std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  std::uint64_t eval(std::uint64_t x) const;
  /// Homogeneous evaluation at [x : w] for a form of degree deg_h.
  std::uint64_t eval_homogeneous(std::uint64_t x, std::uint64_t w, unsigned deg_h) const;

  PrimeFieldPoly operator+(const PrimeFieldPoly& o) const;
  PrimeFieldPoly operator-(const PrimeFieldPoly& o) const;
  PrimeFieldPoly operator*(const PrimeFieldPoly& o) const;
  /// Monic remainder by a nonzero divisor.
  PrimeFieldPoly mod(const PrimeFieldPoly& divisor) const;
  PrimeFieldPoly monic() const;

  friend bool operator==(const PrimeFieldPoly&, const PrimeFieldPoly&) = default;

  std::string to_string() const;

 private:
  PrimeFieldPoly(std::uint64_t modulus, std::vector<std::uint64_t> coeffs, bool /*trusted*/);
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
  friend PrimeFieldPoly gcd(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly powmod(const PrimeFieldPoly& base, const Int& e, const PrimeFieldPoly& m);
};

/// Monic gcd (zero if both inputs are zero).
PrimeFieldPoly gcd(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
/// base^e mod m.
PrimeFieldPoly powmod(const PrimeFieldPoly& base, const Int& e, const PrimeFieldPoly& m);

/// Rabin's test: f of degree n is irreducible iff z^(p^n) = z mod f and
/// gcd(z^(p^(n/l)) - z, f) = 1 for every prime l | n.
bool is_irreducible(const PrimeFieldPoly& f);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace arbordyn
