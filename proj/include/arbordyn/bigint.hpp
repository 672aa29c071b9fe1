#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace arbordyn {

using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& n);
std::string to_string(const Rat& x);

/// Parses a decimal integer with optional sign. Throws Error(parse).
Int parse_int(std::string_view text);
/// Parses "n" or "n/d". Throws Error(parse) or Error(invalid_argument) on d = 0.
Rat parse_rat(std::string_view text);

Rat make_rat(const Int& num, const Int& den);

Int ipow(const Int& base, unsigned long exponent);
Rat ipow(const Rat& base, long exponent);

/// Number of bits in |n|; zero for n = 0.
std::size_t bit_length(const Int& n);

/// Integer square root of n >= 0 (floor).
Int isqrt(const Int& n);

/// True iff n = k^2 with k >= 0; the root is written to `root` when given.
/// Negative inputs are never squares.
bool is_perfect_square(const Int& n, Int* root = nullptr);

/// True iff x is the square of a rational number.
bool is_rational_square(const Rat& x);

/// v_p(n) for n != 0. Returns nullopt for n = 0 (infinite valuation).
std::optional<unsigned long> valuation(const Int& n, const Int& p);

/// v_p(x) for rational x; nullopt for x = 0.
std::optional<long> valuation(const Rat& x, const Int& p);

/// Residue of a rational modulo m, defined when gcd(den, m) = 1.
std::optional<Int> rat_mod(const Rat& x, const Int& m);

/// Legendre symbol (a | p) for odd prime p.
int legendre(const Int& a, const Int& p);

bool fits_u64(const Int& n);
std::uint64_t to_u64(const Int& n);
Int from_u64(std::uint64_t v);

}  // namespace arbordyn
