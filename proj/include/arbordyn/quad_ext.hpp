#pragma once

#include <string>

#include "arbordyn/bigint.hpp"

namespace arbordyn {

/// x + y sqrt(s) with x, y rational and s a squarefree non-square integer.
/// Rational values carry s = 0 so they mix freely with any extension; mixing
/// two different nonzero s values throws.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rat& x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Int& x) : x_(x) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long x) : x_(x) {}        // NOLINT(google-explicit-constructor)
  QuadExt(const Rat& x, const Rat& y, const Int& s);

  static QuadExt sqrt_of(const Int& s) { return QuadExt(Rat(0), Rat(1), s); }

  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  const Int& s() const { return s_; }

  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  /// Throws Error(not_rational) when y != 0.
  const Rat& to_rat() const;

  QuadExt conj() const { return QuadExt(x_, -y_, s_); }
  /// x^2 - s y^2
  Rat norm() const { return x_ * x_ - Rat(s_) * y_ * y_; }

  QuadExt operator-() const { return QuadExt(-x_, -y_, s_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.s_ == b.s_;
  }

  /// Largest bit length among the numerators and denominators of x and y.
  std::size_t height_bits() const;

  /// "x", "y*sqrt(s)" or "x+y*sqrt(s)" with rationals written n/d.
  std::string to_string() const;

 private:
  void adopt(const QuadExt& o);
  Rat x_, y_;
  Int s_;
};

/// A point of P^1 over Q(sqrt s): either infinity or a finite value.
struct ExtPoint {
  bool inf = false;
  QuadExt v;

  static ExtPoint infinity() { return {true, QuadExt()}; }
  static ExtPoint finite(const QuadExt& v) { return {false, v}; }

  bool is_rational() const { return inf || v.is_rational(); }
  ExtPoint conj() const { return inf ? *this : finite(v.conj()); }
  std::size_t height_bits() const { return inf ? 0 : v.height_bits(); }
  std::string to_string() const { return inf ? "inf" : v.to_string(); }
  friend bool operator==(const ExtPoint& a, const ExtPoint& b) {
    return a.inf == b.inf && (a.inf || a.v == b.v);
  }
};

/// Squarefree part of a nonzero integer, keeping the sign (e.g. -12 -> -3).
Int squarefree_kernel(const Int& n);

}  // namespace arbordyn
