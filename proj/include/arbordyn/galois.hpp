#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbordyn/divisibility.hpp"
#include "arbordyn/factor.hpp"
#include "arbordyn/ratmap.hpp"

namespace arbordyn {

/// Values above this many bits are stored in certificates as a digest.
inline constexpr std::size_t kDigestThresholdBits = 2048;

/// FNV-1a 64 of the decimal string, as 16 hex digits.
std::string fnv1a64_hex(const Int& n);
/// The 64 most significant bits of |n|.
std::uint64_t top_word(const Int& n);

/// |value| lies strictly between root^2 and (root+1)^2, or value < 0.
struct SquareWitness {
  Int value;
  Int root;  // isqrt(|value|)
  static SquareWitness of(const Int& value);
  bool negative() const { return value < 0; }
  bool nonsquare() const;
  /// Recomputes the bracket from `value`.
  bool recheck() const;
  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

/// Smallest prime p < bound, p not dividing the leading coefficient, with f
/// irreducible over F_p. f irreducible mod such a p implies f irreducible
/// over Q. Scans in parallel when threads > 1.
std::optional<std::uint64_t> irreducible_mod_prime(const IntPoly& f, std::uint64_t bound = 10000,
                                                   unsigned threads = 1);

enum class IrreducibilityWitness { base_nonsquare, cascade, mod_p_oracle, none };
const char* to_string(IrreducibilityWitness w);

enum class IrreducibilityVerdict { certified, reducible, unknown };
const char* to_string(IrreducibilityVerdict v);

/// Evidence that p_n (numerator of the n-th iterate of (z^2+a)/z^2) is irreducible.
struct CascadeLevel {
  std::size_t n = 0;
  IrreducibilityWitness witness = IrreducibilityWitness::none;
  /// -a for n = 1, p_{n-1}(1) for n >= 2.
  SquareWitness value;
  /// value = 3 mod 4 (the congruence route available when a = 2 mod 4).
  bool three_mod_4 = false;
  std::optional<std::uint64_t> oracle_prime;
  IrreducibilityVerdict verdict = IrreducibilityVerdict::unknown;
  friend bool operator==(const CascadeLevel&, const CascadeLevel&) = default;
};

struct CascadeOptions {
  /// Fall back to the mod-p scan when the square test fails and deg p_n <= this.
  unsigned oracle_max_degree = 8;
  std::uint64_t oracle_bound = 10000;
  unsigned threads = 1;
};

/// Levels 1..N. Only level 1 can be `reducible` (z^2 + a with -a a square);
/// later levels that cannot be certified are `unknown`.
std::vector<CascadeLevel> irreducibility_cascade(const Int& a, std::size_t N, const CascadeOptions& opts = {});

struct DiscRecursion {
  std::size_t n = 0;
  Int a;
  /// |Disc(p_n)| from |Disc(p_1)| = |4a| and
  /// |Disc(p_n)| = 2^(2^n) |a|^(2^(2n-1) - 2^(n-1)) Disc(p_{n-1})^2 |f_{n+1} f_n|.
  Int abs_value;
  /// Direct discriminant, when n <= direct_max_n.
  std::optional<Int> direct;
  std::optional<int> sign;
  std::optional<bool> matches;
  friend bool operator==(const DiscRecursion&, const DiscRecursion&) = default;
};

/// Throws hypotheses_unmet when phi^n(inf) or phi^(n-1)(inf) is 0, and
/// precondition for n < 1 or a = 0.
DiscRecursion disc_recursion(const Int& a, std::size_t n, std::size_t direct_max_n = 3);

enum class LevelVerdict { maximal, unknown };
const char* to_string(LevelVerdict v);

struct LevelEvidence {
  std::size_t n = 0;
  /// Irreducibility of p_n.
  CascadeLevel irreducibility;
  /// theta_{n+1}; absent at level 1.
  std::optional<SquareWitness> theta;
  LevelVerdict verdict = LevelVerdict::unknown;
  friend bool operator==(const LevelEvidence&, const LevelEvidence&) = default;
};

enum class OverallVerdict { all_maximal, partial, hypotheses_unmet };
const char* to_string(OverallVerdict v);

struct MaximalityCertificate {
  Int a;
  std::size_t depth = 0;
  bool a_two_mod_4 = false;
  bool a_le_minus_3 = false;
  std::vector<LevelEvidence> levels;
  OverallVerdict overall = OverallVerdict::hypotheses_unmet;
  std::vector<std::size_t> unknown_levels;
  friend bool operator==(const MaximalityCertificate&, const MaximalityCertificate&) = default;
};

/// Level 1 is maximal when p_1 is irreducible; level n >= 2 when p_{n-1} is
/// certified irreducible and |theta_{n+1}| is not a square. Requires
/// a = 2 mod 4 and a <= -3, otherwise overall = hypotheses_unmet with no
/// levels. Throws growth_cap when f_{N+1} is out of reach.
MaximalityCertificate maximality_certificate(const Int& a, std::size_t N, const CascadeOptions& opts = {},
                                             std::size_t growth_cap_bits = kDefaultGrowthCapBits);

/// Recomputes every witness and verdict; true iff all agree with `cert`.
bool recheck_certificate(const MaximalityCertificate& cert, const CascadeOptions& opts = {});

enum class ThmAStatus { certified, no_such_prime, budget_exhausted, conditions_failed };
const char* to_string(ThmAStatus s);

/// Evidence that beta_n (hence |theta_n|) is not a square for non-square-free n.
struct ThmAEvidence {
  Int a;
  std::size_t n = 0, k = 0;
  /// k > 2 only.
  std::optional<Int> A, B;
  bool gcd_one = true;
  bool six_mod_8 = true;
  /// Primes of A_k found by factoring (k > 2).
  std::vector<Int> a_k_primes;
  bool a_k_complete = true;
  /// 4 when k = 2, otherwise the smallest prime 3 mod 4 dividing A_k (0 if none).
  Int modulus;
  std::optional<RadDivisibilityEvidence> rad;
  ThmAStatus status = ThmAStatus::conditions_failed;
  friend bool operator==(const ThmAEvidence&, const ThmAEvidence&) = default;
};

/// Throws precondition unless a = 2 mod 4, a <= -3 and n is not square-free.
ThmAEvidence thmA_nonsquarefree_evidence(const Int& a, std::size_t n, const FactorBudget& budget = {});

struct CongruenceWitness {
  Int prime;
  std::string divides;  // "m-1", "m", "m+1", "2m-1" or "2m+1"
  friend bool operator==(const CongruenceWitness&, const CongruenceWitness&) = default;
};

struct HypothesisReport {
  Int m;
  /// Prime 3 mod 4 dividing m-1, m or m+1.
  std::optional<CongruenceWitness> s1;
  /// Prime 5 or 7 mod 8 dividing 2m-1 or 2m+1.
  std::optional<CongruenceWitness> s2;
  /// m > 0 and m != 1 mod 4.
  bool shortcut = false;
  /// Some factorization stopped early, so a missing witness is inconclusive.
  bool incomplete = false;
  bool satisfied() const { return s1.has_value() && s2.has_value(); }
  friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

/// Smallest witness primes first. Throws precondition for m in {-1, 0, 1}.
HypothesisReport thmB_hypotheses(const Int& m, const FactorBudget& budget = {});

struct AlphaParametrization {
  Int m, a;
  Rat alpha;
  Rat phi1, phi2, phi3;
  friend bool operator==(const AlphaParametrization&, const AlphaParametrization&) = default;
};

/// a = -2(2m^2-1)^2, alpha = (2m^2-1)/m, checked against exact iteration
/// (phi^i(alpha) = phi^i(0) for i = 3, 4, 5). Throws precondition for
/// m in {-1, 0, 1}; invariant_violation if a check fails.
AlphaParametrization alpha_parametrization(const Int& m);

enum class ThmBCase { odd, even_m_pm1, even_m };
const char* to_string(ThmBCase c);

struct ThmBEvidence {
  Int m;
  std::size_t n = 0;
  std::uint64_t p = 0;
  ThmBCase kase = ThmBCase::odd;
  /// phi^j(alpha) mod p for j = 0..n, p encoding infinity.
  std::vector<std::uint64_t> residues;
  bool pattern_holds = false;
  /// prod_{d | n} phi^d(alpha)^mu(n/d) mod p.
  std::uint64_t product = 0;
  /// 2m^2 - 1 (odd n) or 1 - 2m^2 (even n) mod p.
  std::uint64_t prefactor = 0;
  /// |theta_n| = theta_class * X^2 mod p.
  std::uint64_t theta_class = 0;
  bool nonresidue = false;
  /// The class identity only holds from index 3 on (theta_2 = 1).
  bool index_applies = false;
  bool certified = false;
  std::optional<bool> direct_nonsquare;
  /// |theta_n| / (prefactor * beta_{alpha,n}) is a rational square.
  std::optional<bool> class_identity;
  friend bool operator==(const ThmBEvidence&, const ThmBEvidence&) = default;
};

/// Congruence route for |theta_n| with square-free n >= 2. p must be prime,
/// 5 or 7 mod 8 dividing 2m-1 or 2m+1 for odd n, 3 mod 4 dividing m-1, m or
/// m+1 for even n; precondition otherwise. The direct checks run when
/// theta_n fits under `direct_cap_bits`.
ThmBEvidence thmB_squarefree_evidence(const Int& m, std::size_t n, std::uint64_t p,
                                      std::size_t direct_cap_bits = 1 << 20);

struct MFamilyCertificate {
  HypothesisReport hypotheses;
  AlphaParametrization parametrization;
  MaximalityCertificate certificate;
  /// Congruence evidence for |theta_i|, square-free i in 3..N+1.
  std::vector<ThmBEvidence> squarefree;
  /// Rad-divisibility evidence for non-square-free i in 4..N+1.
  std::vector<ThmAEvidence> nonsquarefree;
  friend bool operator==(const MFamilyCertificate&, const MFamilyCertificate&) = default;
};

/// The full pipeline for a = -2(2m^2-1)^2. Missing witnesses leave
/// `hypotheses.satisfied()` false and skip the matching congruence evidence.
MFamilyCertificate certify_m(const Int& m, std::size_t N, const CascadeOptions& opts = {},
                             const FactorBudget& budget = {});

enum class StabilityCase { case1, case2, inconclusive };
const char* to_string(StabilityCase c);

struct StabilityReport {
  StabilityCase verdict = StabilityCase::inconclusive;
  bool case1 = false, case2 = false;
  /// alpha returned to itself within the orbit budget (theorem does not apply).
  bool alpha_periodic = false;
  OrbitStatus orbit_status = OrbitStatus::budget_exhausted;
  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

/// Conditions of the eventual-stability theorem for (z^d + a)/(z^d + b) at
/// the p-adic place. Returns the first satisfied case. Throws precondition
/// for a = b, d < 2, or composite p.
StabilityReport eventual_stability_check(const Rat& a, const Rat& b, const P1Point& alpha, const Int& p, unsigned d,
                                         std::size_t orbit_budget = 64);

}  // namespace arbordyn
