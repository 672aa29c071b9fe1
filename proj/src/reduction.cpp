#include "arbordyn/reduction.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#include "arbordyn/error.hpp"

namespace arbordyn {

std::pair<IntPoly, IntPoly> normalize_pair(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::invalid_argument, "normalize_pair: both polynomials are zero");
  Int c;
  mpz_gcd(c.get_mpz_t(), p.content().get_mpz_t(), q.content().get_mpz_t());
  return {p.divexact(c), q.divexact(c)};
}

namespace {

void require_prime(const Int& p) {
  if (primality(p) == Primality::composite)
    throw Error(ErrorKind::invalid_argument, "modulus " + to_string(p) + " is not prime");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::uint64_t ReducedMap::eval(std::uint64_t pt) const {
  const std::uint64_t m = modulus;
  std::uint64_t x = pt, w = 1;
  if (pt == m) {
    x = 1;
    w = 0;
  }
  std::uint64_t a = p.eval_homogeneous(x, w, degree);
  std::uint64_t b = q.eval_homogeneous(x, w, degree);
  if (b == 0) {
    if (a == 0) throw Error(ErrorKind::precondition, "reduced forms vanish together at " + std::to_string(pt));
    return m;
  }
  return mulmod(a, mod_inverse(b, m), m);
}

ReducedMap reduce_mod_p(const RationalMap& phi, std::uint64_t p) {
  require_prime(from_u64(p));
  ReducedMap r{p, PrimeFieldPoly::reduce(phi.p(), p), PrimeFieldPoly::reduce(phi.q(), p), phi.degree()};
  r.numerator_vanishes = r.p.is_zero();
  r.denominator_vanishes = r.q.is_zero();
  const int top = std::max(r.p.degree(), r.q.degree());
  r.degree_drop = top < 0 ? phi.degree() : phi.degree() - static_cast<unsigned>(top);
  r.good = r.degree_drop == 0 && gcd(r.p, r.q).degree() == 0;
  return r;
}

bool has_good_reduction(const RationalMap& phi, const Int& p) {
  require_prime(p);
  if (fits_u64(p) && p < (Int(1) << 63)) return reduce_mod_p(phi, to_u64(p)).good;
  return homogeneous_resultant(phi) % p != 0;
}

BadPrimes bad_reduction_primes(const RationalMap& phi, const FactorBudget& budget) {
  static std::mutex mu;
  static std::map<std::string, BadPrimes> cache;
  const std::string key = phi.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Factorization f = factor_integer(homogeneous_resultant(phi), budget);
  BadPrimes out;
  for (const auto& pp : f.factors) out.primes.push_back(pp.prime);
  if (f.cofactor_status == CofactorStatus::probable_prime) {
    out.primes.push_back(f.cofactor);
    std::sort(out.primes.begin(), out.primes.end());
  } else if (f.cofactor_status == CofactorStatus::composite_unfactored) {
    out.complete = false;
    out.cofactor = f.cofactor;
  }
  // Budget-limited results are not cached so a larger budget can retry.
  if (out.complete) {
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
  }
  return out;
}

std::uint64_t reduce_point(const P1Point& pt, std::uint64_t p) {
  const Int m = from_u64(p);
  Int den = pt.den() % m;
  if (den == 0) return p;
  Int num = pt.num() % m;
  if (num < 0) num += m;
  return mulmod(to_u64(num), mod_inverse(to_u64(den), p), p);
}

ModOrbit orbit_mod_p(const ReducedMap& rmap, std::uint64_t start) {
  if (!rmap.good) throw Error(ErrorKind::precondition, "orbit_mod_p requires good reduction");
  if (start > rmap.modulus) throw Error(ErrorKind::invalid_argument, "point outside P^1(F_p)");
  ModOrbit out;
  out.modulus = rmap.modulus;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::uint64_t x = start;
  for (std::size_t i = 0;; ++i) {
    auto [it, fresh] = seen.emplace(x, i);
    out.visited.push_back(x);
    if (!fresh) {
      out.tail_length = it->second;
      out.cycle_length = i - it->second;
      return out;
    }
    x = rmap.eval(x);
  }
}

std::vector<OriginValuation> good_reduction_origin_valuations(const RationalMap& phi, const Int& p, std::size_t N) {
  if (!has_good_reduction(phi, p)) throw Error(ErrorKind::precondition, "bad reduction at " + to_string(p));
  auto forms = iterate_forms(phi, Int(0), Int(1), N);
  std::vector<OriginValuation> out;
  for (std::size_t n = 1; n <= N; ++n) {
    OriginValuation v{n, valuation(forms[n].first, p), valuation(forms[n].second, p)};
    const bool p_unit = v.vp && *v.vp == 0;
    const bool q_unit = v.vq && *v.vq == 0;
    if (!p_unit && !q_unit)
      throw Error(ErrorKind::invariant_violation,
                  "p_" + std::to_string(n) + "(0) and q_" + std::to_string(n) + "(0) both divisible by " + to_string(p));
    out.push_back(v);
  }
  return out;
}

}  // namespace arbordyn
