#include "arbordyn/bigint.hpp"

#include <cctype>

#include "arbordyn/error.hpp"

namespace arbordyn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::degenerate_map: return "degenerate_map";
    case ErrorKind::degree_too_small: return "degree_too_small";
    case ErrorKind::growth_cap: return "growth_cap";
    case ErrorKind::not_bicritical: return "not_bicritical";
    case ErrorKind::not_rational: return "not_rational";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::invariant_violation: return "invariant_violation";
    case ErrorKind::hypotheses_unmet: return "hypotheses_unmet";
    case ErrorKind::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::string to_string(const Int& n) { return n.get_str(10); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string s(text.substr(i, j - i));
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  bool ok = !s.empty();
  for (std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0; k < s.size(); ++k)
    ok = ok && std::isdigit(static_cast<unsigned char>(s[k]));
  if (!ok || s == "-") throw Error(ErrorKind::parse, "not an integer: '" + std::string(text) + "'");
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::invalid_argument, "zero denominator in '" + std::string(text) + "'");
  return make_rat(num, den);
}

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rat ipow(const Rat& base, long exponent) {
  if (exponent >= 0) {
    return make_rat(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
                    ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  }
  if (base == 0) throw Error(ErrorKind::invalid_argument, "zero to a negative power");
  auto e = static_cast<unsigned long>(-exponent);
  return make_rat(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

std::size_t bit_length(const Int& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

bool is_rational_square(const Rat& x) {
  if (x < 0) return false;
  return is_perfect_square(x.get_num()) && is_perfect_square(x.get_den());
}

std::optional<unsigned long> valuation(const Int& n, const Int& p) {
  if (n == 0) return std::nullopt;
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::optional<long> valuation(const Rat& x, const Int& p) {
  if (x == 0) return std::nullopt;
  long vn = static_cast<long>(*valuation(x.get_num(), p));
  long vd = static_cast<long>(*valuation(x.get_den(), p));
  return vn - vd;
}

std::optional<Int> rat_mod(const Rat& x, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), m.get_mpz_t()) == 0) {
    if (m != 1) return std::nullopt;
    return Int(0);
  }
  Int r = (x.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

int legendre(const Int& a, const Int& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

bool fits_u64(const Int& n) {
  return n >= 0 && bit_length(n) <= 64;
}

std::uint64_t to_u64(const Int& n) {
  std::uint64_t v = 0;
  std::size_t count = 0;
  mpz_export(&v, &count, -1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

Int from_u64(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace arbordyn
