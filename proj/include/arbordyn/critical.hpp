#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arbordyn/ratmap.hpp"

namespace arbordyn {

/// p'q - q'p.
IntPoly wronskian(const RationalMap& phi);

/// e_alpha(phi) = ord_alpha(p(z) q(alpha) - q(z) p(alpha)); at infinity,
/// e_0 of (z^d q(1/z)) / (z^d p(1/z)).
int ramification_index(const ExtMap& phi, const ExtPoint& alpha);
int ramification_index(const RationalMap& phi, const ExtPoint& alpha);

struct CriticalPoint {
  ExtPoint location;
  int ram_index = 1;
  friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

/// Critical points ordered as: rational points ascending, then infinity,
/// then a conjugate pair x + y sqrt(s) with y > 0 first.
struct CriticalData {
  std::vector<CriticalPoint> points;
  /// 0 when every point is rational, else the squarefree s of Q(sqrt s).
  Int s = 0;
  bool quadratic() const { return s != 0; }
  /// sum of (e - 1) over the listed points
  int ramification_total() const;
  friend bool operator==(const CriticalData&, const CriticalData&) = default;
};

/// Throws not_bicritical ("critical points outside quadratic extensions")
/// when the squarefree Wronskian has an irreducible factor of degree >= 3.
CriticalData critical_points(const RationalMap& phi);

/// Exactly two critical points. Decided from root counts, so it does not
/// need to resolve the points themselves.
bool is_bicritical(const RationalMap& phi);

enum class NormalFormKind { power, inverse_power, bicritical };
const char* to_string(NormalFormKind k);

struct NormalForm {
  NormalFormKind kind = NormalFormKind::bicritical;
  unsigned degree = 0;
  /// power: c z^d; inverse_power: c / z^d
  QuadExt c;
  /// bicritical: (z^d + a) / (z^d + b)
  QuadExt a, b;
  /// mu o phi o mu^(-1) is the named form.
  MobiusTransform mu;
  /// Field of the coefficients: 0 for Q, else Q(sqrt s).
  Int s = 0;

  ExtMap form() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Conjugates a bicritical map to c z^d, c / z^d or (z^d + a)/(z^d + b) by
/// moving the critical points to 0 and infinity, inverting if the image of
/// infinity is 0 or infinity, then scaling so infinity maps to 1.
NormalForm to_normal_form(const RationalMap& phi);

struct QuadraticForm {
  Rat a, b, r;
  /// Rational transform with mu o phi o mu^(-1) = (z^2 + a z + r)/(z^2 + b z + r).
  MobiusTransform mu;
  RationalMap map;
  /// The c_2 used to move infinity off {0, infinity}, if any.
  std::optional<long> c2;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Degree 2 maps with conjugate quadratic critical points. Throws
/// precondition ("use to_normal_form") when the critical points are rational.
QuadraticForm quadratic_conjugate_form(const RationalMap& phi);

/// (a1, b1) = (a, b), or b != 0 and (a1, b1) = (a^d / b^(d+1), a^(d-1) / b^d).
bool normal_forms_conjugate(unsigned d, const QuadExt& a, const QuadExt& b, const QuadExt& a1, const QuadExt& b1);

enum class RelationKind { trailing, collision, single_orbit_preperiodic, none_found };
const char* to_string(RelationKind k);

struct OrbitRelation {
  RelationKind kind = RelationKind::none_found;
  /// trailing: phi^n(gamma_i) = phi^m(gamma_j) with n > m and i != j (0-based
  /// i, j). collision: phi^n(gamma_1) = phi^n(gamma_2).
  std::size_t n = 0, m = 0;
  int i = 0, j = 1;
  /// single_orbit_preperiodic: gamma_i has this preperiod and period.
  std::size_t preperiod = 0, period = 0;
  /// The common value of the relation.
  ExtPoint value;
  std::size_t search_bound = 0;
  /// Depth actually reached for each orbit (less than the bound when the
  /// height cap stopped it).
  std::size_t depth[2] = {0, 0};
  bool height_capped = false;
  /// Quadratic critical field: the Galois-conjugate relation also holds.
  bool galois_consistent = true;
  friend bool operator==(const OrbitRelation&, const OrbitRelation&) = default;
};

/// Searches trailing relations first (n + m ascending, then n ascending),
/// then collisions (n ascending), then single-orbit preperiodicity (s
/// ascending, gamma_1 before gamma_2).
OrbitRelation critical_orbit_relation(const RationalMap& phi, std::size_t bound,
                                      std::size_t height_cap_bits = kDefaultHeightCapBits);

}  // namespace arbordyn
