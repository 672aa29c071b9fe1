#pragma once

#include <cstdint>
#include <vector>

#include "arbordyn/bigint.hpp"

namespace arbordyn {

struct FactorBudget {
  unsigned long trial_bound = 1000000;
  std::uint64_t rho_iterations = 100000000;
  std::uint64_t seed = 0;
};

enum class Primality { composite, probable_prime, prime };

/// Miller-Rabin. Below 3.317e24 the fixed bases 2..41 make the answer a
/// proof; above it 64 rounds with bases drawn from `seed` give probable_prime.
Primality primality(const Int& n, std::uint64_t seed = 0);
inline bool is_probable_prime(const Int& n, std::uint64_t seed = 0) {
  return primality(n, seed) != Primality::composite;
}

enum class CofactorStatus { unit, probable_prime, composite_unfactored };
const char* to_string(CofactorStatus s);

struct PrimePower {
  Int prime;
  unsigned long exponent = 1;
  /// False when the prime exceeds the deterministic Miller-Rabin range.
  bool proven = true;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes
  Int cofactor = 1;
  CofactorStatus cofactor_status = CofactorStatus::unit;
  /// True when the rho budget ran out on some composite.
  bool budget_exhausted = false;

  Int reconstruct() const;
  bool complete() const { return cofactor_status != CofactorStatus::composite_unfactored; }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to budget.trial_bound, then Pollard rho (Brent) within
/// budget.rho_iterations total iterations. Throws on n = 0.
///
/// Unsplit composites end up multiplied into the cofactor. If nothing composite
/// is left and exactly one prime above the proof range remains, it becomes the
/// probable_prime cofactor instead of a listed factor.
Factorization factor_integer(const Int& n, const FactorBudget& budget = {});

/// Primes p <= limit (sieve cached across calls, grows on demand).
const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit);

/// Smallest-first prime divisors of |n| found within the budget, skipping the
/// cofactor when it is composite. Convenience wrapper for witness searches.
std::vector<Int> prime_divisors(const Int& n, const FactorBudget& budget = {});

}  // namespace arbordyn
