#include "arbordyn/galois.hpp"

#include <algorithm>
#include <memory>

#include "arbordyn/error.hpp"
#include "arbordyn/parallel.hpp"
#include "arbordyn/prime_field.hpp"
#include "arbordyn/reduction.hpp"

namespace arbordyn {

namespace {

Int mod_nonneg(const Int& x, long m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

Int rat_to_int(const Rat& x) {
  if (x.get_den() != 1) throw Error(ErrorKind::invariant_violation, "expected an integer, got " + to_string(x));
  return Int(x.get_num());
}

// p_n(1) for n = 0..N (p_0 = z).
std::vector<Int> values_at_one(const RationalMap& phi, std::size_t N) {
  auto forms = iterate_forms(phi, Int(1), Int(1), N);
  std::vector<Int> out;
  for (const auto& [x, y] : forms) out.push_back(x);
  return out;
}

std::uint64_t mod_u64(const Int& x, std::uint64_t p) { return to_u64(mod_nonneg(x, static_cast<long>(p))); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

std::string fnv1a64_hex(const Int& n) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : n.get_str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 15];
  return out;
}

std::uint64_t top_word(const Int& n) {
  Int m = abs(n);
  const std::size_t bits = bit_length(m);
  if (bits > 64) m >>= static_cast<mp_bitcnt_t>(bits - 64);
  return to_u64(m);
}

SquareWitness SquareWitness::of(const Int& value) { return SquareWitness{value, isqrt(abs(value))}; }

bool SquareWitness::nonsquare() const { return value < 0 || root * root != value; }

bool SquareWitness::recheck() const {
  const Int v = abs(value);
  return root >= 0 && root * root <= v && v < (root + 1) * (root + 1);
}

std::optional<std::uint64_t> irreducible_mod_prime(const IntPoly& f, std::uint64_t bound, unsigned threads) {
  if (f.degree() < 1) return std::nullopt;
  if (bound < 3) return std::nullopt;
  const auto& all = primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, 0xffffffffULL)));
  std::vector<std::uint64_t> primes;
  for (auto p : all)
    if (p < bound) primes.push_back(p);
  auto hit = parallel_find_first(primes.size(), threads, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    if (mod_u64(f.lead(), p) == 0) return false;
    return is_irreducible(PrimeFieldPoly::reduce(f, p));
  });
  if (!hit) return std::nullopt;
  return primes[*hit];
}

const char* to_string(IrreducibilityWitness w) {
  switch (w) {
    case IrreducibilityWitness::base_nonsquare: return "base_nonsquare";
    case IrreducibilityWitness::cascade: return "cascade";
    case IrreducibilityWitness::mod_p_oracle: return "mod_p_oracle";
    case IrreducibilityWitness::none: return "none";
  }
  return "?";
}

const char* to_string(IrreducibilityVerdict v) {
  switch (v) {
    case IrreducibilityVerdict::certified: return "certified";
    case IrreducibilityVerdict::reducible: return "reducible";
    case IrreducibilityVerdict::unknown: return "unknown";
  }
  return "?";
}

std::vector<CascadeLevel> irreducibility_cascade(const Int& a, std::size_t N, const CascadeOptions& opts) {
  if (a == 0) throw Error(ErrorKind::precondition, "a must be nonzero");
  const RationalMap phi = main_family_map(a);
  const std::vector<Int> at_one = values_at_one(phi, N == 0 ? 0 : N - 1);
  std::unique_ptr<IterateLadder> ladder;

  std::vector<CascadeLevel> out;
  for (std::size_t n = 1; n <= N; ++n) {
    CascadeLevel lv;
    lv.n = n;
    lv.value = SquareWitness::of(n == 1 ? Int(-a) : at_one[n - 1]);
    lv.three_mod_4 = mod_nonneg(lv.value.value, 4) == 3;
    const bool prev = n == 1 || out.back().verdict == IrreducibilityVerdict::certified;
    if (prev && lv.value.nonsquare()) {
      lv.witness = n == 1 ? IrreducibilityWitness::base_nonsquare : IrreducibilityWitness::cascade;
      lv.verdict = IrreducibilityVerdict::certified;
    } else if (n == 1) {
      lv.verdict = IrreducibilityVerdict::reducible;  // z^2 + a = (z - r)(z + r)
    } else if ((std::size_t{1} << std::min<std::size_t>(n, 63)) <= opts.oracle_max_degree) {
      if (!ladder) ladder = std::make_unique<IterateLadder>(phi);
      if (auto p = irreducible_mod_prime(ladder->at(n).first, opts.oracle_bound, opts.threads)) {
        lv.witness = IrreducibilityWitness::mod_p_oracle;
        lv.oracle_prime = *p;
        lv.verdict = IrreducibilityVerdict::certified;
      }
    }
    out.push_back(std::move(lv));
  }
  return out;
}

DiscRecursion disc_recursion(const Int& a, std::size_t n, std::size_t direct_max_n) {
  if (a == 0) throw Error(ErrorKind::precondition, "a must be nonzero");
  if (n < 1) throw Error(ErrorKind::precondition, "n must be at least 1");
  const RationalMap phi = main_family_map(a);
  auto orb = iterate_forms(phi, Int(1), Int(0), n);
  for (std::size_t i = 1; i <= n; ++i)
    if (orb[i].first == 0)
      throw Error(ErrorKind::hypotheses_unmet, "phi^" + std::to_string(i) + "(infinity) = 0");

  const auto f = f_sequence(a, n + 1);
  DiscRecursion out;
  out.n = n;
  out.a = a;
  Int d = abs(4 * a);
  const Int abs_a = abs(a);
  for (std::size_t k = 2; k <= n; ++k) {
    const unsigned long e_a = (1UL << (2 * k - 1)) - (1UL << (k - 1));
    Int two = Int(1) << static_cast<mp_bitcnt_t>(1UL << k);
    d = two * ipow(abs_a, e_a) * d * d * abs(f[k + 1] * f[k]);
  }
  out.abs_value = d;
  if (n <= direct_max_n) {
    IterateLadder lad(phi);
    const Int direct = rat_to_int(discriminant(lad.at(n).first));
    out.direct = direct;
    out.sign = sgn(direct);
    out.matches = abs(direct) == d;
  }
  return out;
}

const char* to_string(LevelVerdict v) { return v == LevelVerdict::maximal ? "maximal" : "unknown"; }

const char* to_string(OverallVerdict v) {
  switch (v) {
    case OverallVerdict::all_maximal: return "all_maximal";
    case OverallVerdict::partial: return "partial";
    case OverallVerdict::hypotheses_unmet: return "hypotheses_unmet";
  }
  return "?";
}

MaximalityCertificate maximality_certificate(const Int& a, std::size_t N, const CascadeOptions& opts,
                                             std::size_t growth_cap_bits) {
  MaximalityCertificate cert;
  cert.a = a;
  cert.depth = N;
  cert.a_two_mod_4 = mod_nonneg(a, 4) == 2;
  cert.a_le_minus_3 = a <= -3;
  if (!cert.a_two_mod_4 || !cert.a_le_minus_3) return cert;

  const auto f = f_sequence(a, N + 1, growth_cap_bits);
  const auto cascade = irreducibility_cascade(a, N, opts);
  for (std::size_t n = 1; n <= N; ++n) {
    LevelEvidence lv;
    lv.n = n;
    lv.irreducibility = cascade[n - 1];
    if (n == 1) {
      if (lv.irreducibility.verdict == IrreducibilityVerdict::certified) lv.verdict = LevelVerdict::maximal;
    } else {
      lv.theta = SquareWitness::of(abs(theta_from(f, n + 1)));
      if (cascade[n - 2].verdict == IrreducibilityVerdict::certified && lv.theta->nonsquare())
        lv.verdict = LevelVerdict::maximal;
    }
    if (lv.verdict != LevelVerdict::maximal) cert.unknown_levels.push_back(n);
    cert.levels.push_back(std::move(lv));
  }
  cert.overall = cert.unknown_levels.empty() ? OverallVerdict::all_maximal : OverallVerdict::partial;
  return cert;
}

bool recheck_certificate(const MaximalityCertificate& cert, const CascadeOptions& opts) {
  for (const auto& lv : cert.levels) {
    if (!lv.irreducibility.value.recheck()) return false;
    if (lv.theta && !lv.theta->recheck()) return false;
  }
  return maximality_certificate(cert.a, cert.depth, opts) == cert;
}

const char* to_string(ThmAStatus s) {
  switch (s) {
    case ThmAStatus::certified: return "certified";
    case ThmAStatus::no_such_prime: return "no_such_prime";
    case ThmAStatus::budget_exhausted: return "budget_exhausted";
    case ThmAStatus::conditions_failed: return "conditions_failed";
  }
  return "?";
}

ThmAEvidence thmA_nonsquarefree_evidence(const Int& a, std::size_t n, const FactorBudget& budget) {
  if (mod_nonneg(a, 4) != 2 || a > -3) throw Error(ErrorKind::precondition, "needs a = 2 mod 4 and a <= -3");
  if (n < 4 || mobius(n) != 0) throw Error(ErrorKind::precondition, std::to_string(n) + " is square-free");
  ThmAEvidence ev;
  ev.a = a;
  ev.n = n;
  ev.k = n / radical(n);
  const RationalMap phi = main_family_map(a);
  if (ev.k == 2) {
    ev.modulus = 4;
  } else {
    const auto f = f_sequence(a, ev.k + 1);
    ev.A = a_k(f, ev.k);
    ev.B = f[ev.k] * f[ev.k] * f[ev.k - 1] * f[ev.k - 1];
    ev.gcd_one = gcd(*ev.A, *ev.B) == 1;
    ev.six_mod_8 = mod_nonneg(*ev.A, 8) == 6;
    const Factorization fa = factor_integer(*ev.A, budget);
    for (const auto& pp : fa.factors) ev.a_k_primes.push_back(pp.prime);
    if (fa.cofactor_status == CofactorStatus::probable_prime) ev.a_k_primes.push_back(fa.cofactor);
    ev.a_k_complete = fa.cofactor_status != CofactorStatus::composite_unfactored;
    std::sort(ev.a_k_primes.begin(), ev.a_k_primes.end());
    ev.modulus = 0;
    for (const auto& p : ev.a_k_primes)
      if (mod_nonneg(p, 4) == 3) {
        ev.modulus = p;
        break;
      }
    if (ev.modulus == 0) {
      ev.status = ev.a_k_complete ? ThmAStatus::no_such_prime : ThmAStatus::budget_exhausted;
      return ev;
    }
  }
  ev.rad = rad_divisibility_conditions(phi, P1Point(0), n, ev.modulus);
  ev.status = ev.rad->certified && ev.gcd_one ? ThmAStatus::certified : ThmAStatus::conditions_failed;
  return ev;
}

HypothesisReport thmB_hypotheses(const Int& m, const FactorBudget& budget) {
  if (m >= -1 && m <= 1) throw Error(ErrorKind::precondition, "m must not be -1, 0 or 1");
  HypothesisReport rep;
  rep.m = m;
  rep.shortcut = m > 0 && mod_nonneg(m, 4) != 1;

  auto search = [&](const std::vector<std::pair<Int, std::string>>& exprs, auto accept) {
    std::optional<CongruenceWitness> best;
    for (const auto& [value, name] : exprs) {
      const Factorization fz = factor_integer(value, budget);
      std::vector<Int> ps;
      for (const auto& pp : fz.factors) ps.push_back(pp.prime);
      if (fz.cofactor_status == CofactorStatus::probable_prime) ps.push_back(fz.cofactor);
      if (fz.cofactor_status == CofactorStatus::composite_unfactored) rep.incomplete = true;
      for (const auto& p : ps)
        if (accept(p) && (!best || p < best->prime)) best = CongruenceWitness{p, name};
    }
    return best;
  };
  rep.s1 = search({{m - 1, "m-1"}, {m, "m"}, {m + 1, "m+1"}}, [](const Int& p) { return mod_nonneg(p, 4) == 3; });
  rep.s2 = search({{2 * m - 1, "2m-1"}, {2 * m + 1, "2m+1"}}, [](const Int& p) {
    const Int r = mod_nonneg(p, 8);
    return r == 5 || r == 7;
  });
  return rep;
}

AlphaParametrization alpha_parametrization(const Int& m) {
  if (m >= -1 && m <= 1) throw Error(ErrorKind::precondition, "m must not be -1, 0 or 1");
  AlphaParametrization out;
  out.m = m;
  const Int t = 2 * m * m - 1;
  out.a = -2 * t * t;
  out.alpha = make_rat(t, m);
  const RationalMap phi = main_family_map(out.a);

  std::vector<P1Point> from_alpha{P1Point(out.alpha)}, from_zero{P1Point(0)};
  for (int i = 0; i < 5; ++i) {
    from_alpha.push_back(phi.eval(from_alpha.back()));
    from_zero.push_back(phi.eval(from_zero.back()));
  }
  auto check = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::invariant_violation, std::string("alpha parametrization: ") + what);
  };
  check(!from_alpha[1].is_infinity() && from_alpha[1].value() == Rat(1 - 2 * m * m), "phi(alpha) != 1 - 2m^2");
  check(from_alpha[2] == P1Point(-1), "phi^2(alpha) != -1");
  check(from_alpha[3] == P1Point(out.a + 1), "phi^3(alpha) != 1 + a");
  for (int i = 3; i <= 5; ++i) check(from_alpha[i] == from_zero[i], "phi^i(alpha) != phi^i(0)");
  out.phi1 = from_alpha[1].value();
  out.phi2 = from_alpha[2].value();
  out.phi3 = from_alpha[3].value();
  return out;
}

const char* to_string(ThmBCase c) {
  switch (c) {
    case ThmBCase::odd: return "odd";
    case ThmBCase::even_m_pm1: return "even_m_pm1";
    case ThmBCase::even_m: return "even_m";
  }
  return "?";
}

ThmBEvidence thmB_squarefree_evidence(const Int& m, std::size_t n, std::uint64_t p, std::size_t direct_cap_bits) {
  if (m >= -1 && m <= 1) throw Error(ErrorKind::precondition, "m must not be -1, 0 or 1");
  if (n < 2 || mobius(n) == 0) throw Error(ErrorKind::precondition, "n must be square-free and at least 2");
  const Int P = from_u64(p);
  if (primality(P) == Primality::composite) throw Error(ErrorKind::precondition, "p must be prime");

  ThmBEvidence ev;
  ev.m = m;
  ev.n = n;
  ev.p = p;
  auto divides = [&](const Int& x) { return x % P == 0; };
  if (n % 2) {
    const auto r = p % 8;
    if ((r != 5 && r != 7) || !(divides(2 * m - 1) || divides(2 * m + 1)))
      throw Error(ErrorKind::precondition, "odd n needs p = 5, 7 mod 8 dividing 2m-1 or 2m+1");
    ev.kase = ThmBCase::odd;
  } else {
    if (p % 4 != 3 || !(divides(m - 1) || divides(m) || divides(m + 1)))
      throw Error(ErrorKind::precondition, "even n needs p = 3 mod 4 dividing m-1, m or m+1");
    ev.kase = divides(m) ? ThmBCase::even_m : ThmBCase::even_m_pm1;
  }

  const Int t = 2 * m * m - 1;
  const Int a = -2 * t * t;
  const Rat alpha = make_rat(t, m);
  const RationalMap phi = main_family_map(a);
  const ReducedMap rmap = reduce_mod_p(phi, p);
  if (!rmap.good) throw Error(ErrorKind::invariant_violation, "bad reduction at a witness prime");

  const std::uint64_t start = reduce_point(P1Point(alpha), p);
  const ModOrbit orb = orbit_mod_p(rmap, start);
  // Enough iterates to cover every residue class of j modulo the cycle and parity.
  const std::size_t J = std::max(n, orb.tail_length + 2 * orb.cycle_length + 2);
  std::vector<std::uint64_t> res{start};
  for (std::size_t j = 1; j <= J; ++j) res.push_back(rmap.eval(res.back()));
  ev.residues.assign(res.begin(), res.begin() + static_cast<long>(n) + 1);

  const std::uint64_t half = mod_inverse(2, p), minus_one = p - 1;
  ev.pattern_holds = true;
  for (std::size_t j = 1; j <= J; ++j) {
    switch (ev.kase) {
      case ThmBCase::odd:
        if (j % 2 && res[j] != half) ev.pattern_holds = false;
        break;
      case ThmBCase::even_m_pm1:
        if (res[j] != minus_one) ev.pattern_holds = false;
        break;
      case ThmBCase::even_m:
        if (res[j] != (j == 1 ? 1 : minus_one)) ev.pattern_holds = false;
        break;
    }
  }

  ev.product = 1;
  for (auto d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    const std::uint64_t r = res[d];
    if (r == 0 || r == p) {
      ev.product = 0;
      ev.pattern_holds = false;
      break;
    }
    ev.product = mulmod(ev.product, mu == 1 ? r : mod_inverse(r, p), p);
  }
  ev.prefactor = mod_u64(n % 2 ? t : Int(-t), p);
  ev.theta_class = mulmod(ev.prefactor, ev.product, p);
  ev.nonresidue = ev.theta_class != 0 && legendre(from_u64(ev.theta_class), P) == -1;
  ev.index_applies = n >= 3;
  ev.certified = ev.pattern_holds && ev.nonresidue && ev.index_applies;

  try {
    const auto f = f_sequence(a, n, direct_cap_bits);
    const Int th = abs(theta_from(f, n));
    ev.direct_nonsquare = !is_perfect_square(th);
    const Rat b = beta(phi, P1Point(alpha), n);
    ev.class_identity = is_rational_square(Rat(th) / (Rat(n % 2 ? t : Int(-t)) * b));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::growth_cap) throw;
  }
  return ev;
}

MFamilyCertificate certify_m(const Int& m, std::size_t N, const CascadeOptions& opts, const FactorBudget& budget) {
  MFamilyCertificate out;
  out.hypotheses = thmB_hypotheses(m, budget);
  out.parametrization = alpha_parametrization(m);
  out.certificate = maximality_certificate(out.parametrization.a, N, opts);
  for (std::size_t i = 3; i <= N + 1; ++i) {
    if (mobius(i) == 0) {
      out.nonsquarefree.push_back(thmA_nonsquarefree_evidence(out.parametrization.a, i, budget));
      continue;
    }
    const auto& w = i % 2 ? out.hypotheses.s2 : out.hypotheses.s1;
    if (!w || !fits_u64(w->prime)) continue;
    out.squarefree.push_back(thmB_squarefree_evidence(m, i, to_u64(w->prime)));
  }
  return out;
}

const char* to_string(StabilityCase c) {
  switch (c) {
    case StabilityCase::case1: return "case1";
    case StabilityCase::case2: return "case2";
    case StabilityCase::inconclusive: return "inconclusive";
  }
  return "?";
}

StabilityReport eventual_stability_check(const Rat& a, const Rat& b, const P1Point& alpha, const Int& p, unsigned d,
                                         std::size_t orbit_budget) {
  if (a == b) throw Error(ErrorKind::precondition, "a must differ from b");
  if (d < 2) throw Error(ErrorKind::precondition, "d must be at least 2");
  if (primality(p) == Primality::composite) throw Error(ErrorKind::precondition, "p must be prime");

  // |x|_p <= 1, < 1, = 1
  auto le1 = [&](const Rat& x) { return x == 0 || *valuation(x, p) >= 0; };
  auto lt1 = [&](const Rat& x) { return x == 0 || *valuation(x, p) > 0; };
  auto eq1 = [&](const Rat& x) { return x != 0 && *valuation(x, p) == 0; };

  bool d_power = true;
  {
    Int dd = d;
    while (dd % p == 0) dd /= p;
    d_power = dd == 1;
  }
  StabilityReport rep;
  rep.case1 = d_power && le1(a) && le1(b) && eq1(a - b);
  rep.case2 = lt1(a) && eq1(b) && !alpha.is_infinity() && lt1(alpha.value());

  Int L = lcm(Int(a.get_den()), Int(b.get_den()));
  std::vector<Int> pc(d + 1, Int(0)), qc(d + 1, Int(0));
  pc[d] = L;
  qc[d] = L;
  pc[0] = Int(a.get_num()) * (L / a.get_den());
  qc[0] = Int(b.get_num()) * (L / b.get_den());
  const RationalMap phi = RationalMap::create(IntPoly(std::move(pc)), IntPoly(std::move(qc)));
  const OrbitRecord orb = orbit(phi, alpha, orbit_budget);
  rep.orbit_status = orb.status;
  rep.alpha_periodic = orb.status == OrbitStatus::preperiodic && orb.preperiod == 0;

  if (rep.alpha_periodic) rep.verdict = StabilityCase::inconclusive;
  else if (rep.case1) rep.verdict = StabilityCase::case1;
  else if (rep.case2) rep.verdict = StabilityCase::case2;
  return rep;
}

}  // namespace arbordyn
