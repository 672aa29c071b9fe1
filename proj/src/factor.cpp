#include "arbordyn/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "arbordyn/error.hpp"

namespace arbordyn {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::uint32_t kMinSieve = 1u << 20;
constexpr unsigned kProbableRounds = 64;

const Int& deterministic_bound() {
  static const Int bound("3317044064679887385961981", 10);
  return bound;
}

constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_u64(u64 n) {
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kBases) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool mr_round(const Int& n, const Int& d, unsigned long s, const Int& base) {
  const Int n1 = n - 1;
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

class Rng {
 public:
  explicit Rng(u64 seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}
  // splitmix64
  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  u64 state_;
};

constexpr u64 kBatch = 128;

// Brent's variant of Pollard rho on a 64-bit modulus. Returns a nontrivial
// factor or 0; `budget` is decremented by the number of map evaluations.
u64 rho_u64(u64 n, u64 c, u64 y, u64& budget) {
  auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
  u64 g = 1, q = 1, x = y, ys = y;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
    }
    const u64 spent = 2 * r;
    if (budget <= spent) {
      budget = 0;
      if (g == 1) return 0;
      break;
    }
    budget -= spent;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

Int rho_big(const Int& n, const Int& c, Int y, u64& budget) {
  Int g = 1, q = 1, x, ys, t;
  auto f = [&](Int& v) {
    v *= v;
    v += c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) f(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        f(y);
        t = x - y;
        q *= t;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    const u64 spent = 2 * r;
    if (budget <= spent) {
      budget = 0;
      if (g == 1) return Int(0);
      break;
    }
    budget -= spent;
  }
  if (g == n) {
    do {
      f(ys);
      t = x - ys;
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Int(0) : g;
}

// Nontrivial factor of composite n, or 0 once the budget is gone.
Int find_factor(const Int& n, u64& budget, Rng& rng) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  // Prime powers: rho handles them poorly when every cycle closes at once.
  for (unsigned long k = bit_length(n); k >= 2; --k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && root > 1) return root;
  }
  while (budget > 0) {
    if (fits_u64(n)) {
      const u64 m = to_u64(n);
      const u64 c = 1 + rng.next() % (m - 1);
      const u64 y = rng.next() % m;
      if (u64 g = rho_u64(m, c, y, budget)) return from_u64(g);
    } else {
      const Int c = 1 + from_u64(rng.next());
      const Int y = from_u64(rng.next());
      Int g = rho_big(n, c, y, budget);
      if (g != 0) return g;
    }
  }
  return Int(0);
}

}  // namespace

Primality primality(const Int& n, std::uint64_t seed) {
  if (n < 2) return Primality::composite;
  for (unsigned p : kBases) {
    if (n == p) return Primality::prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  }
  if (fits_u64(n)) return mr_u64(to_u64(n)) ? Primality::prime : Primality::composite;

  Int d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  if (n < deterministic_bound()) {
    for (unsigned a : kBases)
      if (!mr_round(n, d, s, Int(a))) return Primality::composite;
    return Primality::prime;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(seed));
  const Int span = n - 3;
  for (unsigned i = 0; i < kProbableRounds; ++i) {
    Int base = rng.get_z_range(span) + 2;
    if (!mr_round(n, d, s, base)) return Primality::composite;
  }
  return Primality::probable_prime;
}

const char* to_string(CofactorStatus s) {
  switch (s) {
    case CofactorStatus::unit: return "unit";
    case CofactorStatus::probable_prime: return "probable_prime";
    case CofactorStatus::composite_unfactored: return "composite_unfactored";
  }
  return "unknown";
}

Int Factorization::reconstruct() const {
  Int r = sign;
  for (const auto& pp : factors) r *= ipow(pp.prime, pp.exponent);
  return r * cofactor;
}

const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<std::vector<std::uint32_t>>> cache;
  static std::vector<std::uint32_t> bounds;
  std::lock_guard<std::mutex> lock(mu);
  for (std::size_t i = 0; i < cache.size(); ++i)
    if (bounds[i] >= limit) return *cache[i];
  const std::uint32_t n = std::max(limit, kMinSieve);
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  auto primes = std::make_unique<std::vector<std::uint32_t>>();
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes->push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  cache.push_back(std::move(primes));
  bounds.push_back(n);
  return *cache.back();
}

Factorization factor_integer(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "cannot factor zero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int rest = abs(n);

  std::map<Int, PrimePower> found;
  auto record = [&](const Int& p, unsigned long e, bool proven) {
    auto [it, inserted] = found.try_emplace(p, PrimePower{p, 0, proven});
    it->second.exponent += e;
  };

  const std::uint32_t bound =
      static_cast<std::uint32_t>(std::min<unsigned long>(budget.trial_bound, 0xffffffffUL));
  for (std::uint32_t p : primes_up_to(bound)) {
    if (p > bound) break;
    if (rest == 1) break;
    if (Int(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Int(p).get_mpz_t());
      record(Int(p), e, true);
    }
  }

  std::vector<Int> probable;
  Int composite_rest = 1;
  if (rest > 1) {
    u64 rho_budget = budget.rho_iterations;
    Rng rng(budget.seed);
    std::vector<Int> work{rest};
    while (!work.empty()) {
      Int m = std::move(work.back());
      work.pop_back();
      if (m == 1) continue;
      const Primality pr = primality(m, budget.seed);
      if (pr == Primality::prime) {
        record(m, 1, true);
        continue;
      }
      if (pr == Primality::probable_prime) {
        probable.push_back(m);
        continue;
      }
      Int g = find_factor(m, rho_budget, rng);
      if (g == 0) {
        composite_rest *= m;
        out.budget_exhausted = true;
        continue;
      }
      Int h;
      mpz_divexact(h.get_mpz_t(), m.get_mpz_t(), g.get_mpz_t());
      work.push_back(std::move(g));
      work.push_back(std::move(h));
    }
  }

  if (composite_rest > 1) {
    out.cofactor = composite_rest;
    out.cofactor_status = CofactorStatus::composite_unfactored;
    for (const auto& p : probable) record(p, 1, false);
  } else if (probable.size() == 1) {
    out.cofactor = probable.front();
    out.cofactor_status = CofactorStatus::probable_prime;
  } else {
    for (const auto& p : probable) record(p, 1, false);
  }
  for (auto& [p, pp] : found) out.factors.push_back(pp);
  return out;
}

std::vector<Int> prime_divisors(const Int& n, const FactorBudget& budget) {
  Factorization f = factor_integer(n, budget);
  std::vector<Int> out;
  for (const auto& pp : f.factors) out.push_back(pp.prime);
  if (f.cofactor_status == CofactorStatus::probable_prime) out.push_back(f.cofactor);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arbordyn
