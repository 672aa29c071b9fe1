#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbordyn/factor.hpp"
#include "arbordyn/ratmap.hpp"

namespace arbordyn {

int mobius(unsigned long n);
/// Sorted positive divisors.
std::vector<unsigned long> divisors(unsigned long n);
/// Product of the distinct primes dividing n.
unsigned long radical(unsigned long n);

/// (z^2 + a)/z^2.
RationalMap main_family_map(const Int& a);

/// f_1 = f_2 = 1, f_n = f_{n-1}^2 + a f_{n-2}^4. Entry n holds f_n; entry 0
/// is unused (0). Throws growth_cap if a term would exceed the bit cap.
std::vector<Int> f_sequence(const Int& a, std::size_t N, std::size_t growth_cap_bits = kDefaultGrowthCapBits);

/// prod_{d | n} f_d^mu(n/d) from a precomputed f (entry n = f_n). Throws
/// invalid_argument ("theta undefined (vanishing term)") when some f_d = 0
/// and invariant_violation when the quotient is not an integer.
Int theta_from(const std::vector<Int>& f, std::size_t n);
Int theta(const Int& a, std::size_t n);

/// A_k = f_k^3 + f_{k+1} f_{k-1}^2 (k >= 2).
Int a_k(const std::vector<Int>& f, std::size_t k);

/// p_n(alpha) for n = 1..N, where p_n is the ladder numerator.
std::vector<Rat> ladder_values(const RationalMap& phi, const Rat& alpha, std::size_t N);

/// beta_{alpha,n} = prod_{d | n} p_d(alpha)^mu(n/d). Throws invalid_argument
/// ("beta undefined") when some p_d(alpha) vanishes.
Rat beta(const RationalMap& phi, const P1Point& alpha, std::size_t n);
Rat beta_from(const std::vector<Rat>& values, std::size_t n);

/// A named pass/fail report for the lemma checkers.
struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  void fail(std::string why) {
    pass = false;
    failures.push_back(std::move(why));
  }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// p_n(0) = a^(2^(n-1)) f_n from the ladder of (z^2+a)/z^2, and f_n = 1 mod |a|.
CheckReport verify_power_of_a(const Int& a, std::size_t N);

/// For a <= -3: sgn p_n(0) = (-1)^n, phi^n(0) > 0 for even n >= 2,
/// phi^n(0) <= 1 - b for odd n >= 3 (b = -a), and beta_n > 0 for 3 <= n <= N.
/// Throws precondition for a > -3.
CheckReport sign_check(const Int& a, std::size_t N);

struct RigidityViolation {
  Int prime;
  int condition = 1;  // 1: v_p(c_n) != v_p(c_kn); 2: gcd index not divisible
  std::size_t m = 0, n = 0;  // indices involved: (n, kn) or (m, n)
  friend bool operator==(const RigidityViolation&, const RigidityViolation&) = default;
};

struct RigidityReport {
  std::vector<Int> S;
  std::vector<Int> checked_primes;
  std::size_t depth = 0;
  std::size_t full_factor_depth = 0;
  std::uint64_t trial_bound = 0;
  /// Some term up to full_factor_depth kept an unfactored composite part.
  bool pool_incomplete = false;
  std::vector<RigidityViolation> violations;
  bool pass() const { return violations.empty(); }
  std::vector<Int> violating_primes() const;
  friend bool operator==(const RigidityReport&, const RigidityReport&) = default;
};

/// terms[i] = c_{i+1}. The prime pool is every prime of c_n for n <= n0
/// (full factorization) plus primes up to B dividing later terms.
RigidityReport verify_rigid_divisibility(const std::vector<Int>& terms, const std::vector<Int>& S, std::size_t n0,
                                         std::uint64_t B, const FactorBudget& budget = {});

struct PrimitivePartReport {
  std::size_t n = 0;
  Int theta;
  /// (p, v_p(theta_n)) for the primes found
  std::vector<std::pair<Int, unsigned long>> valuations;
  /// Unfactored composite part of |theta_n| (1 when complete).
  Int unfactored = 1;
  bool complete = true;
  /// v_p(theta_n) = v_p(f_n) and p does not divide f_i for i < n, for every found p
  bool valuations_match = true;
  bool coprime_to_earlier = true;
  friend bool operator==(const PrimitivePartReport&, const PrimitivePartReport&) = default;
};

PrimitivePartReport primitive_part_valuations(const Int& a, std::size_t n, const FactorBudget& budget = {});

struct RadDivisibilityEvidence {
  std::size_t n = 0, k = 0;
  Int m;
  Rat phi_k, phi_k1;
  bool condition1 = false, condition2 = false, condition3 = false;
  /// phi^i(alpha) is finite for k <= i <= n+1 and nonzero for 1 <= i <= n+1
  bool orbit_hypotheses = false;
  /// All hypotheses and conditions hold, so beta_{alpha,n} is not a square.
  bool certified = false;
  friend bool operator==(const RadDivisibilityEvidence&, const RadDivisibilityEvidence&) = default;
};

/// Throws hypotheses_unmet when p or q is not even or q is not a square in
/// Z[z]; precondition for n < 2, alpha = infinity, or m < 2; and
/// precondition when m > 10^6 is composite (condition 3 is then unchecked).
RadDivisibilityEvidence rad_divisibility_conditions(const RationalMap& phi, const P1Point& alpha, std::size_t n,
                                                    const Int& m);

/// -1 is a square mod m (exhaustive for m <= 10^6, Euler's criterion for prime m).
bool minus_one_is_square_mod(const Int& m);

}  // namespace arbordyn
