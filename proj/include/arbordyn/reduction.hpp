#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arbordyn/factor.hpp"
#include "arbordyn/prime_field.hpp"
#include "arbordyn/ratmap.hpp"

namespace arbordyn {

/// Divides out the joint content of the coefficients of p and q. The result
/// is normalized at every prime. Throws when both are zero.
std::pair<IntPoly, IntPoly> normalize_pair(const IntPoly& p, const IntPoly& q);

/// Coefficient-wise reduction of a canonical pair. P^1(F_p) is encoded as
/// 0..p with p standing for infinity.
struct ReducedMap {
  std::uint64_t modulus = 0;
  PrimeFieldPoly p, q;
  unsigned degree = 0;       // d of the map over Q
  unsigned degree_drop = 0;  // d - max(deg p~, deg q~)
  bool numerator_vanishes = false;
  bool denominator_vanishes = false;
  /// No common root of the reduced forms in P^1 over the algebraic closure.
  bool good = false;

  /// Image of an encoded point. Throws precondition at a common root of the forms.
  std::uint64_t eval(std::uint64_t pt) const;
};

ReducedMap reduce_mod_p(const RationalMap& phi, std::uint64_t p);

/// deg phi~ = deg phi. For primes beyond 64 bits this is decided by p not
/// dividing the homogeneous resultant. Throws on composite p.
bool has_good_reduction(const RationalMap& phi, const Int& p);

struct BadPrimes {
  std::vector<Int> primes;
  /// False when the resultant was not fully factored within the budget;
  /// the unfactored part is then in `cofactor`.
  bool complete = true;
  Int cofactor = 1;
  friend bool operator==(const BadPrimes&, const BadPrimes&) = default;
};
/// Primes of bad reduction from a factorization of the homogeneous
/// resultant. Cached per map.
BadPrimes bad_reduction_primes(const RationalMap& phi, const FactorBudget& budget = {});

/// Encoded image of a rational point mod p.
std::uint64_t reduce_point(const P1Point& pt, std::uint64_t p);

struct ModOrbit {
  std::uint64_t modulus = 0;
  std::size_t tail_length = 0;
  std::size_t cycle_length = 0;
  /// visited[0..tail+cycle], the last entry repeating visited[tail].
  std::vector<std::uint64_t> visited;
};

/// Exhaustive forward iteration. Throws precondition unless rmap.good.
ModOrbit orbit_mod_p(const ReducedMap& rmap, std::uint64_t start);

struct OriginValuation {
  std::size_t n = 0;
  /// nullopt when the value is 0.
  std::optional<unsigned long> vp, vq;
};

/// v_p(p_n(0)) and v_p(q_n(0)) for n = 1..N. Throws invariant_violation if
/// both are positive at some level and precondition at a bad prime.
std::vector<OriginValuation> good_reduction_origin_valuations(const RationalMap& phi, const Int& p, std::size_t N);

}  // namespace arbordyn
