#include "arbordyn/divisibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "arbordyn/error.hpp"

namespace arbordyn {

namespace {

std::vector<std::pair<unsigned long, unsigned>> small_factor(unsigned long n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "expected a positive integer");
  std::vector<std::pair<unsigned long, unsigned>> out;
  for (const auto& pp : factor_integer(Int(n)).factors) out.emplace_back(pp.prime.get_ui(), pp.exponent);
  return out;
}

}  // namespace

int mobius(unsigned long n) {
  int mu = 1;
  for (const auto& [p, e] : small_factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> out{1};
  for (const auto& [p, e] : small_factor(n)) {
    const std::size_t k = out.size();
    unsigned long pw = 1;
    for (unsigned i = 0; i < e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < k; ++j) out.push_back(out[j] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long radical(unsigned long n) {
  unsigned long r = 1;
  for (const auto& pe : small_factor(n)) r *= pe.first;
  return r;
}

RationalMap main_family_map(const Int& a) {
  return RationalMap::create(IntPoly(std::vector<Int>{a, 0, 1}), IntPoly(std::vector<Int>{0, 0, 1}));
}

std::vector<Int> f_sequence(const Int& a, std::size_t N, std::size_t growth_cap_bits) {
  std::vector<Int> f(N + 1, Int(0));
  if (N >= 1) f[1] = 1;
  if (N >= 2) f[2] = 1;
  for (std::size_t n = 3; n <= N; ++n) {
    const std::size_t projected = std::max(2 * bit_length(f[n - 1]), bit_length(a) + 4 * bit_length(f[n - 2])) + 1;
    if (projected > growth_cap_bits)
      throw Error(ErrorKind::growth_cap, "growth cap exceeded: f_" + std::to_string(n) + " needs about " +
                                             std::to_string(projected) + " bits");
    const Int sq = f[n - 2] * f[n - 2];
    f[n] = f[n - 1] * f[n - 1] + a * sq * sq;
  }
  return f;
}

Int theta_from(const std::vector<Int>& f, std::size_t n) {
  if (n == 0 || n >= f.size()) throw Error(ErrorKind::invalid_argument, "theta index out of range");
  Int num = 1, den = 1;
  for (unsigned long d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    if (f[d] == 0) throw Error(ErrorKind::invalid_argument, "theta undefined (vanishing term f_" + std::to_string(d) + ")");
    (mu > 0 ? num : den) *= f[d];
  }
  Rat t = make_rat(num, den);
  if (t.get_den() != 1)
    throw Error(ErrorKind::invariant_violation, "theta_" + std::to_string(n) + " is not an integer: " + to_string(t));
  return t.get_num();
}

Int theta(const Int& a, std::size_t n) { return theta_from(f_sequence(a, n), n); }

Int a_k(const std::vector<Int>& f, std::size_t k) {
  if (k < 2 || k + 1 >= f.size()) throw Error(ErrorKind::invalid_argument, "A_k needs 2 <= k and f_{k+1}");
  return f[k] * f[k] * f[k] + f[k + 1] * f[k - 1] * f[k - 1];
}

std::vector<Rat> ladder_values(const RationalMap& phi, const Rat& alpha, std::size_t N) {
  const Int u = alpha.get_num(), v = alpha.get_den();
  auto forms = iterate_forms(phi, u, v, N);
  std::vector<Rat> out(N + 1);
  Int vpow = v;  // v^(d^n)
  for (std::size_t n = 1; n <= N; ++n) {
    vpow = ipow(vpow, phi.degree());
    out[n] = make_rat(forms[n].first, vpow);
  }
  return out;
}

Rat beta_from(const std::vector<Rat>& values, std::size_t n) {
  if (n == 0 || n >= values.size()) throw Error(ErrorKind::invalid_argument, "beta index out of range");
  Rat out = 1;
  for (unsigned long d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    if (values[d] == 0) throw Error(ErrorKind::invalid_argument, "beta undefined: p_" + std::to_string(d) + "(alpha) = 0");
    if (mu > 0)
      out *= values[d];
    else
      out /= values[d];
  }
  return out;
}

Rat beta(const RationalMap& phi, const P1Point& alpha, std::size_t n) {
  if (alpha.is_infinity()) throw Error(ErrorKind::invalid_argument, "beta undefined at infinity");
  return beta_from(ladder_values(phi, alpha.value(), n), n);
}

CheckReport verify_power_of_a(const Int& a, std::size_t N) {
  if (a == 0) throw Error(ErrorKind::precondition, "verify_power_of_a needs a != 0");
  CheckReport rep;
  const auto f = f_sequence(a, N);
  IterateLadder lad(main_family_map(a));
  const Int abs_a = abs(a);
  for (std::size_t n = 1; n <= N; ++n) {
    const Int pn0 = lad.at(n).first[0];
    if (pn0 != ipow(a, 1UL << (n - 1)) * f[n]) rep.fail("p_" + std::to_string(n) + "(0) != a^(2^(n-1)) f_n");
    Int r = f[n] % abs_a;
    if (r < 0) r += abs_a;
    if (abs_a > 1 && r != 1) rep.fail("f_" + std::to_string(n) + " is not 1 mod |a|");
  }
  return rep;
}

CheckReport sign_check(const Int& a, std::size_t N) {
  if (a > -3) throw Error(ErrorKind::precondition, "sign_check needs a <= -3");
  CheckReport rep;
  const Int b = -a;
  auto forms = iterate_forms(main_family_map(a), Int(0), Int(1), N);
  std::vector<Rat> pn0(N + 1);
  for (std::size_t n = 1; n <= N; ++n) {
    const Int& p = forms[n].first;
    pn0[n] = p;
    const int want = n % 2 == 0 ? 1 : -1;
    if (p == 0 || sgn(p) != want) rep.fail("sgn p_" + std::to_string(n) + "(0) != (-1)^n");
    if (n >= 2) {
      if (forms[n].second == 0) {
        rep.fail("phi^" + std::to_string(n) + "(0) is infinite");
        continue;
      }
      const Rat val = make_rat(p, forms[n].second);
      if (n % 2 == 0 && val <= 0) rep.fail("phi^" + std::to_string(n) + "(0) <= 0");
      if (n % 2 == 1 && val > Rat(1 - b)) rep.fail("phi^" + std::to_string(n) + "(0) > 1 - b");
    }
  }
  for (std::size_t n = 3; n <= N; ++n) {
    if (beta_from(pn0, n) <= 0) rep.fail("beta_" + std::to_string(n) + " <= 0");
  }
  return rep;
}

std::vector<Int> RigidityReport::violating_primes() const {
  std::set<Int> s;
  for (const auto& v : violations) s.insert(v.prime);
  return {s.begin(), s.end()};
}

RigidityReport verify_rigid_divisibility(const std::vector<Int>& terms, const std::vector<Int>& S, std::size_t n0,
                                         std::uint64_t B, const FactorBudget& budget) {
  RigidityReport rep;
  rep.S = S;
  rep.depth = terms.size();
  rep.full_factor_depth = std::min(n0, terms.size());
  rep.trial_bound = B;
  for (const auto& t : terms)
    if (t == 0) throw Error(ErrorKind::precondition, "rigid divisibility check needs nonzero terms");

  std::set<Int> pool;
  for (std::size_t i = 0; i < rep.full_factor_depth; ++i) {
    Factorization f = factor_integer(terms[i], budget);
    for (const auto& pp : f.factors) pool.insert(pp.prime);
    if (f.cofactor_status == CofactorStatus::probable_prime) pool.insert(f.cofactor);
    if (f.cofactor_status == CofactorStatus::composite_unfactored) rep.pool_incomplete = true;
  }
  if (terms.size() > rep.full_factor_depth) {
    const auto& primes = primes_up_to(B);
    for (std::size_t i = rep.full_factor_depth; i < terms.size(); ++i)
      for (auto p : primes) {
        if (p > B) break;
        if (mpz_divisible_ui_p(terms[i].get_mpz_t(), p)) pool.insert(Int(p));
      }
  }
  for (const auto& s : S) pool.erase(s);

  const std::size_t N = terms.size();
  for (const auto& p : pool) {
    rep.checked_primes.push_back(p);
    std::vector<unsigned long> v(N + 1, 0);
    for (std::size_t n = 1; n <= N; ++n) v[n] = *valuation(terms[n - 1], p);
    for (std::size_t n = 1; n <= N; ++n) {
      if (v[n] == 0) continue;
      for (std::size_t kn = 2 * n; kn <= N; kn += n)
        if (v[kn] != v[n]) rep.violations.push_back({p, 1, n, kn});
      for (std::size_t m = n + 1; m <= N; ++m)
        if (v[m] > 0 && v[std::gcd(m, n)] == 0) rep.violations.push_back({p, 2, n, m});
    }
  }
  return rep;
}

PrimitivePartReport primitive_part_valuations(const Int& a, std::size_t n, const FactorBudget& budget) {
  PrimitivePartReport rep;
  rep.n = n;
  const auto f = f_sequence(a, n);
  rep.theta = theta_from(f, n);
  if (abs(rep.theta) == 1) return rep;
  Factorization fac = factor_integer(rep.theta, budget);
  for (const auto& pp : fac.factors) rep.valuations.emplace_back(pp.prime, pp.exponent);
  if (fac.cofactor_status == CofactorStatus::probable_prime) rep.valuations.emplace_back(fac.cofactor, 1);
  if (fac.cofactor_status == CofactorStatus::composite_unfactored) {
    rep.complete = false;
    rep.unfactored = fac.cofactor;
  }
  for (const auto& [p, e] : rep.valuations) {
    if (*valuation(f[n], p) != e) rep.valuations_match = false;
    for (std::size_t i = 1; i < n; ++i)
      if (f[i] % p == 0) rep.coprime_to_earlier = false;
  }
  return rep;
}

bool minus_one_is_square_mod(const Int& m) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "modulus must be positive");
  if (m <= 1000000) {
    const unsigned long mm = m.get_ui();
    for (unsigned long x = 0; x < mm; ++x)
      if ((x * x + 1) % mm == 0) return true;
    return false;
  }
  if (primality(m) == Primality::composite)
    throw Error(ErrorKind::precondition, "condition (3) is only decided for m <= 10^6 or prime m");
  return m % 4 == 1;
}

RadDivisibilityEvidence rad_divisibility_conditions(const RationalMap& phi, const P1Point& alpha, std::size_t n,
                                                    const Int& m) {
  auto is_even = [](const IntPoly& f) {
    for (std::size_t i = 1; i < f.coeffs().size(); i += 2)
      if (f[i] != 0) return false;
    return true;
  };
  if (!is_even(phi.p())) throw Error(ErrorKind::hypotheses_unmet, "p is not an even polynomial");
  if (!is_even(phi.q())) throw Error(ErrorKind::hypotheses_unmet, "q is not an even polynomial");
  if (!exact_sqrt(phi.q())) throw Error(ErrorKind::hypotheses_unmet, "q is not the square of a polynomial in Z[z]");
  if (n < 2) throw Error(ErrorKind::precondition, "rad-divisibility needs n >= 2");
  if (alpha.is_infinity()) throw Error(ErrorKind::precondition, "alpha must be rational");
  if (m < 2) throw Error(ErrorKind::precondition, "m must be at least 2");

  RadDivisibilityEvidence ev;
  ev.n = n;
  ev.m = m;
  ev.k = n / radical(n);

  // orbit up to n + 1
  std::vector<P1Point> orb{alpha};
  for (std::size_t i = 1; i <= n + 1; ++i) orb.push_back(phi.eval(orb.back()));
  ev.orbit_hypotheses = true;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    if (!orb[i].is_infinity() && orb[i].num() == 0) ev.orbit_hypotheses = false;
    if (i >= ev.k && orb[i].is_infinity()) ev.orbit_hypotheses = false;
  }
  if (orb[ev.k].is_infinity() || orb[ev.k + 1].is_infinity()) return ev;
  ev.phi_k = orb[ev.k].value();
  ev.phi_k1 = orb[ev.k + 1].value();

  ev.condition1 = ev.phi_k != 0;
  Factorization fm = factor_integer(m);
  std::vector<Int> ells;
  for (const auto& pp : fm.factors) ells.push_back(pp.prime);
  if (fm.cofactor != 1) ells.push_back(fm.cofactor);
  for (const auto& ell : ells)
    if (ev.condition1 && *valuation(ev.phi_k, ell) != 0) ev.condition1 = false;

  const Rat sum = ev.phi_k + ev.phi_k1;
  ev.condition2 = sum == 0 || (gcd(Int(sum.get_den()), m) == 1 && sum.get_num() % m == 0);
  ev.condition3 = !minus_one_is_square_mod(m);
  ev.certified = ev.orbit_hypotheses && ev.condition1 && ev.condition2 && ev.condition3;
  return ev;
}

}  // namespace arbordyn
