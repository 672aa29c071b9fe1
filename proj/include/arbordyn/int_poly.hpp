#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arbordyn/bigint.hpp"

namespace arbordyn {

/// Dense polynomial in Z[z], coefficient i belongs to z^i. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t power);
  static IntPoly z() { return monomial(Int(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of z^i (zero past the degree).
  const Int& operator[](std::size_t i) const;
  const Int& lead() const;
  std::span<const Int> coeffs() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Int& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly derivative() const;
  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  Int content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;
  /// Exact division by a scalar; throws if inexact.
  IntPoly divexact(const Int& d) const;
  /// Largest bit length among the coefficients.
  std::size_t max_coeff_bits() const;
  /// True when every monomial with nonzero coefficient has even exponent.
  bool is_even() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  /// Homogeneous evaluation of z^i w^(deg_h - i) summed against the
  /// coefficients, for a form of total degree deg_h >= degree().
  Int eval_homogeneous(const Int& zv, const Int& wv, unsigned deg_h) const;
  /// z^n f(1/z) for n >= degree().
  IntPoly reversed(unsigned n) const;
  /// f(c z)
  IntPoly scale_argument(const Int& c) const;

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Schoolbook product, kept public so tests can compare it against the
/// packed-integer multiplication used for large operands.
IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b);
IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lead(b)^(deg a - deg b + 1) a = q b + r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Exact quotient a / b in Z[z]; throws Error(invariant_violation) if b does
/// not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
/// Returns true and writes the quotient if b | a in Z[z].
bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);

/// gcd in Z[z] normalized to content 1 and positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Res(f, g) by the subresultant pseudo-remainder sequence.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lead(f).
Rat discriminant(const IntPoly& f);

/// f / gcd(f, f'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

/// h with h^2 = f (h has positive leading coefficient), if one exists.
std::optional<IntPoly> exact_sqrt(const IntPoly& f);

}  // namespace arbordyn
