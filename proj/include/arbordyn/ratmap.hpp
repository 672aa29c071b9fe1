#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arbordyn/field_poly.hpp"
#include "arbordyn/int_poly.hpp"
#include "arbordyn/quad_ext.hpp"

namespace arbordyn {

inline constexpr std::size_t kDefaultGrowthCapBits = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultHeightCapBits = std::size_t{1} << 16;

/// Point of P^1(Q) as a reduced pair [num : den] with den >= 0.
/// Infinity is [1 : 0].
class P1Point {
 public:
  P1Point() : num_(0), den_(1) {}
  /// Normalizes by the gcd and the sign of den; throws on (0, 0).
  P1Point(const Int& num, const Int& den);
  P1Point(const Rat& x) : P1Point(Int(x.get_num()), Int(x.get_den())) {}  // NOLINT(google-explicit-constructor)
  P1Point(long x) : num_(x), den_(1) {}                            // NOLINT(google-explicit-constructor)
  static P1Point infinity() { return P1Point(Int(1), Int(0)); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_infinity() const { return den_ == 0; }
  /// Throws Error(invalid_argument) at infinity.
  Rat value() const;
  ExtPoint to_ext() const;
  std::size_t height_bits() const { return std::max(bit_length(num_), bit_length(den_)); }

  /// "inf", "n" or "n/d".
  std::string to_string() const;
  /// Accepts "inf", "oo", "n", "n/d".
  static P1Point parse(std::string_view text);

  friend bool operator==(const P1Point& a, const P1Point& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  Int num_, den_;
};

struct P1PointHash {
  std::size_t operator()(const P1Point& p) const noexcept;
};

/// phi = p/q with p, q coprime in Z[z], joint content 1, and positive leading
/// coefficient on the degree-d member (p when both have degree d).
class RationalMap {
 public:
  /// Canonicalizes and validates. Throws degenerate_map when p, q share a
  /// root (or p = 0) and degree_too_small when max(deg p, deg q) < 2.
  static RationalMap create(IntPoly p, IntPoly q);

  const IntPoly& p() const { return p_; }
  const IntPoly& q() const { return q_; }
  unsigned degree() const { return d_; }

  P1Point eval(const P1Point& pt) const;
  ExtPoint eval(const ExtPoint& pt) const;

  /// "(p)/(q)" in the polynomial grammar accepted by parse_map.
  std::string to_string() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

 private:
  RationalMap(IntPoly p, IntPoly q, unsigned d) : p_(std::move(p)), q_(std::move(q)), d_(d) {}
  IntPoly p_, q_;
  unsigned d_ = 0;
};

/// Res(P, Q) of the degree-d binary forms attached to the map. Zero exactly
/// when p and q share a root in P^1; agrees with Res(p, q) up to sign and a
/// power of the leading coefficient when the degrees differ.
Int homogeneous_resultant(const RationalMap& phi);

/// The pair (p_n, q_n) from the homogeneous recursion
///   p_n = sum a_i p_{n-1}^i q_{n-1}^(d-i),  q_n = sum b_i p_{n-1}^i q_{n-1}^(d-i).
/// Levels are stored append-only; extend_to reuses what is already there.
class IterateLadder {
 public:
  explicit IterateLadder(RationalMap base, std::size_t growth_cap_bits = kDefaultGrowthCapBits);

  const RationalMap& base() const { return base_; }
  std::size_t size() const { return levels_.size(); }
  std::size_t growth_cap_bits() const { return cap_; }

  /// Computes levels up to n. Throws Error(growth_cap) before computing a
  /// level whose projected coefficient size exceeds the cap.
  void extend_to(std::size_t n);
  /// Level n >= 1 (must already be computed).
  const std::pair<IntPoly, IntPoly>& level(std::size_t n) const;
  /// Level n, extending as needed.
  const std::pair<IntPoly, IntPoly>& at(std::size_t n);

 private:
  RationalMap base_;
  std::size_t cap_;
  std::vector<std::pair<IntPoly, IntPoly>> levels_;
};

/// (P_k(u, v), Q_k(u, v)) for k = 0..n without any gcd reduction, so that
/// p_k(u/v) = P_k(u, v) / v^(d^k). Entry 0 is (u, v).
std::vector<std::pair<Int, Int>> iterate_forms(const RationalMap& phi, const Int& u, const Int& v, std::size_t n);

enum class OrbitStatus { preperiodic, escaped, budget_exhausted };
const char* to_string(OrbitStatus s);

struct OrbitRecord {
  /// phi^0(start), phi^1(start), ... with no repeats.
  std::vector<P1Point> points;
  OrbitStatus status = OrbitStatus::budget_exhausted;
  /// Set when status is preperiodic: phi^(preperiod + period)(start) = phi^preperiod(start).
  std::size_t preperiod = 0;
  std::size_t period = 0;
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// Iterates at most max_steps times. A point whose numerator or denominator
/// exceeds height_cap_bits ends the orbit as escaped; running out of steps is
/// budget_exhausted. Neither is a claim that the orbit is infinite.
OrbitRecord orbit(const RationalMap& phi, const P1Point& start, std::size_t max_steps,
                  std::size_t height_cap_bits = kDefaultHeightCapBits);

/// z -> (a z + b) / (c z + e).
struct MobiusTransform {
  QuadExt a = 1, b = 0, c = 0, e = 1;

  static MobiusTransform identity() { return {}; }
  static MobiusTransform scaling(const QuadExt& k) { return {k, 0, 0, 1}; }
  static MobiusTransform translation(const QuadExt& t) { return {1, t, 0, 1}; }
  /// z -> k / z
  static MobiusTransform inversion(const QuadExt& k = 1) { return {0, k, 1, 0}; }

  QuadExt det() const { return a * e - b * c; }
  MobiusTransform inverse() const { return {e, -b, -c, a}; }
  /// (*this) o inner
  MobiusTransform compose(const MobiusTransform& inner) const;
  ExtPoint apply(const ExtPoint& pt) const;
  bool is_rational() const;
  /// Same transformation up to a common scalar.
  bool equivalent(const MobiusTransform& o) const;
  /// Scaled so that c = 1, or e = 1 when c = 0.
  MobiusTransform normalized() const;
  std::string to_string() const;
  friend bool operator==(const MobiusTransform&, const MobiusTransform&) = default;
};

/// Rational map with coefficients in Q(sqrt s): p/q with max degree d.
class ExtMap {
 public:
  ExtMap(FieldPoly<QuadExt> p, FieldPoly<QuadExt> q);
  static ExtMap from(const RationalMap& phi);

  const FieldPoly<QuadExt>& p() const { return p_; }
  const FieldPoly<QuadExt>& q() const { return q_; }
  unsigned degree() const { return d_; }

  ExtPoint eval(const ExtPoint& pt) const;
  /// Same map (p q' = p' q and equal degree).
  bool equivalent(const ExtMap& o) const;
  /// Scaled so the degree-d coefficient of p (or of q if deg p < d) is 1.
  ExtMap normalized() const;
  bool is_rational() const;
  /// Clears denominators and canonicalizes; throws Error(not_rational) when
  /// some coefficient has a sqrt(s) part after normalization.
  RationalMap to_rational() const;
  std::string to_string() const;

 private:
  FieldPoly<QuadExt> p_, q_;
  unsigned d_ = 0;
};

/// mu o phi o mu^(-1).
ExtMap conjugate(const ExtMap& phi, const MobiusTransform& mu);
/// Rational result; throws Error(not_rational) ("result not defined over Q")
/// when the conjugate has irrational coefficients.
RationalMap conjugate(const RationalMap& phi, const MobiusTransform& mu);

}  // namespace arbordyn
