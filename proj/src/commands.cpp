#include "arbordyn/commands.hpp"

#include <sstream>

#include "arbordyn/parse.hpp"

namespace arbordyn {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return exit_code::parse;
    case ErrorKind::not_bicritical:
      return exit_code::not_bicritical;
    case ErrorKind::hypotheses_unmet:
      return exit_code::hypotheses_unmet;
    default:
      return exit_code::failure;
  }
}

OrbitReport cmd_orbit(const std::string& map, const std::string& start, std::optional<std::size_t> steps,
                      const CommandConfig& cfg) {
  RationalMap phi = parse_map(map);
  P1Point x0;
  try {
    x0 = P1Point::parse(start);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, std::string("bad start point: ") + e.what());
  }
  return OrbitReport{phi, x0, orbit(phi, x0, steps.value_or(cfg.orbit_max_steps), cfg.height_cap_bits)};
}

CriticalReport cmd_critical(const std::string& map, std::size_t relation_bound, const CommandConfig& cfg) {
  RationalMap phi = parse_map(map);
  CriticalReport r{phi, critical_points(phi), is_bicritical(phi)};
  if (!r.bicritical)
    throw Error(ErrorKind::not_bicritical, "map has " + std::to_string(r.critical.points.size()) + " critical points");
  r.normal_form = to_normal_form(phi);
  if (r.critical.quadratic() && phi.degree() == 2) r.quadratic = quadratic_conjugate_form(phi);
  r.relation = critical_orbit_relation(phi, relation_bound, cfg.height_cap_bits);
  return r;
}

SequenceReport cmd_sequence(const std::optional<Int>& a, const std::optional<std::string>& map, std::size_t N,
                            bool factor, const CommandConfig& cfg) {
  if (a.has_value() == map.has_value()) throw Error(ErrorKind::invalid_argument, "give exactly one of --a, --map");
  if (N < 1) throw Error(ErrorKind::invalid_argument, "--n must be at least 1");
  if (a && *a == 0) throw Error(ErrorKind::invalid_argument, "a must be nonzero");
  RationalMap phi = a ? main_family_map(*a) : parse_map(*map);
  SequenceReport r{phi, a, N};

  Int x = 0, y = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    // one step of the forms; the next numerator has about d times the bits
    if (std::max(bit_length(x), bit_length(y)) * phi.degree() + 64 > cfg.growth_cap_bits) {
      r.status = "growth_cap";
      break;
    }
    auto next = iterate_forms(phi, x, y, 1)[1];
    x = next.first;
    y = next.second;
    SequenceRow row{n, x};
    r.rows.push_back(row);
  }

  if (a && !r.rows.empty()) {
    std::vector<Int> f;
    try {
      f = f_sequence(*a, r.rows.size(), cfg.growth_cap_bits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::growth_cap) throw;
    }
    for (auto& row : r.rows) {
      if (f.size() <= row.n) break;
      row.f = f[row.n];
      try {
        row.theta = theta_from(f, row.n);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::invalid_argument) throw;
      }
    }
  }
  if (factor)
    for (auto& row : r.rows)
      if (row.p_n0 != 0) row.factors = factor_integer(row.p_n0, cfg.budget());
  return r;
}

namespace {

std::vector<ThmAEvidence> nonsquarefree_for(const Int& a, std::size_t depth, const FactorBudget& budget) {
  std::vector<ThmAEvidence> out;
  for (std::size_t i = 4; i <= depth + 1; ++i)
    if (radical(i) != i) out.push_back(thmA_nonsquarefree_evidence(a, i, budget));
  return out;
}

}  // namespace

CertifyReport cmd_certify(const std::optional<Int>& m, const std::optional<Int>& a, std::size_t depth,
                          unsigned threads, const CommandConfig& cfg) {
  if (m.has_value() == a.has_value()) throw Error(ErrorKind::invalid_argument, "give exactly one of --m, --a");
  if (depth < 1) throw Error(ErrorKind::invalid_argument, "--depth must be at least 1");
  CascadeOptions opts;
  opts.threads = threads;
  CertifyReport r;
  r.depth = depth;
  if (m) {
    if (*m >= -1 && *m <= 1) throw Error(ErrorKind::invalid_argument, "m must satisfy |m| >= 2");
    r.m_family = certify_m(*m, depth, opts, cfg.budget());
    r.a = r.m_family->parametrization.a;
    return r;
  }
  r.a = *a;
  r.certificate = maximality_certificate(*a, depth, opts, cfg.growth_cap_bits);
  if (r.certificate->overall != OverallVerdict::hypotheses_unmet) r.nonsquarefree = nonsquarefree_for(*a, depth, cfg.budget());
  return r;
}

int certify_exit_code(const CertifyReport& r) {
  const MaximalityCertificate& c = r.m_family ? r.m_family->certificate : *r.certificate;
  if (c.overall == OverallVerdict::hypotheses_unmet) return exit_code::hypotheses_unmet;
  if (r.m_family && !r.m_family->hypotheses.satisfied()) return exit_code::hypotheses_unmet;
  return c.overall == OverallVerdict::all_maximal ? exit_code::ok : exit_code::failure;
}

RigidCheckReport cmd_rigid_check(const std::string& map, const std::vector<Int>& exclude, std::size_t N,
                                 std::size_t full_factor_depth, std::uint64_t prime_bound, const CommandConfig& cfg) {
  if (N < 1) throw Error(ErrorKind::invalid_argument, "--n must be at least 1");
  RationalMap phi = parse_map(map);
  std::vector<Int> terms;
  Int x = 0, y = 1;
  for (std::size_t n = 1; n <= N; ++n) {
    if (std::max(bit_length(x), bit_length(y)) * phi.degree() + 64 > cfg.growth_cap_bits)
      throw Error(ErrorKind::growth_cap, "term " + std::to_string(n) + " exceeds the growth cap");
    auto next = iterate_forms(phi, x, y, 1)[1];
    x = next.first;
    y = next.second;
    terms.push_back(x);
  }
  const bool derivatives = phi.p()[1] == 0 && phi.q()[1] == 0;
  RigidCheckReport r{phi, derivatives, bad_reduction_primes(phi, cfg.budget()),
                     verify_rigid_divisibility(terms, exclude, std::min(full_factor_depth, N), prime_bound,
                                               cfg.budget())};
  return r;
}

// Text rendering.

namespace {

std::string factor_string(const Factorization& f) {
  std::ostringstream os;
  bool first = true;
  if (f.sign < 0) os << "-";
  for (const auto& pp : f.factors) {
    os << (first ? "" : " * ") << pp.prime;
    if (pp.exponent > 1) os << "^" << pp.exponent;
    first = false;
  }
  if (f.cofactor != 1) {
    os << (first ? "" : " * ");
    if (f.cofactor_status == CofactorStatus::probable_prime)
      os << "PRP" << f.cofactor.get_str().size() << "(" << f.cofactor << ")";
    else
      os << "C" << f.cofactor.get_str().size() << "(" << f.cofactor << ")";
  }
  if (first && f.cofactor == 1) os << "1";
  return os.str();
}

std::string witness_string(const std::optional<CongruenceWitness>& w) {
  return w ? w->prime.get_str() + " | " + w->divides : std::string("none");
}

void render_certificate(std::ostringstream& os, const MaximalityCertificate& c) {
  os << "a = " << c.a << ", depth " << c.depth << ": " << to_string(c.overall) << "\n";
  for (const auto& lv : c.levels) {
    os << "  level " << lv.n << ": " << to_string(lv.verdict) << " (p_" << lv.n << " "
       << to_string(lv.irreducibility.verdict) << " by " << to_string(lv.irreducibility.witness);
    if (lv.theta) os << "; |theta_" << lv.n + 1 << "| has " << bit_length(lv.theta->value) << " bits, root " << bit_length(lv.theta->root) << " bits";
    os << ")\n";
  }
}

}  // namespace

std::string render_text(const OrbitReport& r) {
  std::ostringstream os;
  os << "map " << r.map.to_string() << ", start " << r.start.to_string() << "\n";
  for (std::size_t i = 0; i < r.orbit.points.size(); ++i) os << "  " << i << ": " << r.orbit.points[i].to_string() << "\n";
  os << "status " << to_string(r.orbit.status);
  if (r.orbit.status == OrbitStatus::preperiodic)
    os << " (preperiod " << r.orbit.preperiod << ", period " << r.orbit.period << ")";
  os << "\n";
  return os.str();
}

std::string render_text(const CriticalReport& r) {
  std::ostringstream os;
  os << "map " << r.map.to_string() << "\n";
  for (const auto& c : r.critical.points) os << "  critical " << c.location.to_string() << " (e = " << c.ram_index << ")\n";
  os << "field " << (r.critical.quadratic() ? "Q(sqrt(" + r.critical.s.get_str() + "))" : std::string("Q")) << "\n";
  if (r.normal_form) {
    const auto& nf = *r.normal_form;
    os << "normal form " << to_string(nf.kind) << ": " << nf.form().to_string() << "\n";
  }
  if (r.quadratic) os << "quadratic form " << r.quadratic->map.to_string() << "\n";
  if (r.relation) {
    const auto& rel = *r.relation;
    os << "relation " << to_string(rel.kind);
    if (rel.kind == RelationKind::trailing) os << " (" << rel.n << ", " << rel.m << ")";
    else if (rel.kind == RelationKind::collision) os << " (" << rel.n << ") value " << rel.value.to_string();
    else if (rel.kind == RelationKind::single_orbit_preperiodic)
      os << " (point " << rel.i << ", preperiod " << rel.preperiod << ", period " << rel.period << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_text(const SequenceReport& r) {
  std::ostringstream os;
  os << "map " << r.map.to_string() << "\n";
  for (const auto& row : r.rows) {
    os << row.n << "\tp_n(0) = " << row.p_n0;
    if (row.f) os << "\tf = " << *row.f;
    if (row.theta) os << "\ttheta = " << *row.theta;
    if (row.factors) os << "\t= " << factor_string(*row.factors);
    os << "\n";
  }
  os << "status " << r.status << "\n";
  return os.str();
}

std::string render_text(const CertifyReport& r) {
  std::ostringstream os;
  if (r.m_family) {
    const auto& mf = *r.m_family;
    os << "m = " << mf.hypotheses.m << ": S1 witness " << witness_string(mf.hypotheses.s1) << ", S2 witness "
       << witness_string(mf.hypotheses.s2) << "\n";
    render_certificate(os, mf.certificate);
    for (const auto& e : mf.squarefree)
      os << "  theta_" << e.n << ": " << (e.certified ? "non-square" : "no conclusion") << " via p = " << e.p << "\n";
    for (const auto& e : mf.nonsquarefree)
      os << "  theta_" << e.n << ": " << to_string(e.status) << " (modulus " << e.modulus << ")\n";
  } else {
    render_certificate(os, *r.certificate);
    for (const auto& e : r.nonsquarefree)
      os << "  theta_" << e.n << ": " << to_string(e.status) << " (modulus " << e.modulus << ")\n";
  }
  return os.str();
}

std::string render_text(const RigidCheckReport& r) {
  std::ostringstream os;
  os << "map " << r.map.to_string() << "\n";
  if (!r.hypothesis_derivatives) os << "warning: p'(0) = q'(0) = 0 fails\n";
  os << "bad reduction primes:";
  for (const auto& p : r.bad_primes.primes) os << " " << p;
  if (!r.bad_primes.complete) os << " (incomplete)";
  os << "\n" << (r.report.pass() ? "pass" : "violations") << "\n";
  for (const auto& v : r.report.violations)
    os << "  prime " << v.prime << " condition " << v.condition << " at (" << v.m << ", " << v.n << ")\n";
  return os.str();
}

}  // namespace arbordyn
