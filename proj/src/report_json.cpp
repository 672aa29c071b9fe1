#include "arbordyn/report_json.hpp"

#include <cstring>

namespace arbordyn {

namespace {

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::parse, why); }

template <class E>
E enum_from(const json& j, std::initializer_list<E> values) {
  const std::string s = j.get<std::string>();
  for (E v : values)
    if (s == to_string(v)) return v;
  bad("unknown enum value \"" + s + "\"");
}

json opt_int(const std::optional<Int>& v) { return v ? int_to_json(*v) : json(nullptr); }
std::optional<Int> opt_int_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return int_from_json(j);
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}
template <class T>
std::optional<T> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json ints(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}
std::vector<Int> ints_from(const json& j) {
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

json poly_json(const IntPoly& f) { return ints(std::vector<Int>(f.coeffs().begin(), f.coeffs().end())); }

}  // namespace

const char* to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "text"; }

json int_to_json(const Int& n) { return n.get_str(); }

Int int_from_json(const json& j) {
  if (!j.is_string()) bad("expected an integer string");
  return parse_int(j.get<std::string>());
}

json rat_to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const json& j) {
  if (!j.is_string()) bad("expected a rational string");
  return parse_rat(j.get<std::string>());
}

void to_json(json& j, const P1Point& x) { j = x.to_string(); }
void from_json(const json& j, P1Point& x) { x = P1Point::parse(j.get<std::string>()); }

void to_json(json& j, const QuadExt& x) {
  j = json{{"x", rat_to_json(x.x())}, {"y", rat_to_json(x.y())}, {"s", int_to_json(x.s())}};
}
void from_json(const json& j, QuadExt& x) {
  const Rat y = rat_from_json(j.at("y"));
  const Int s = int_from_json(j.at("s"));
  x = s == 0 && y == 0 ? QuadExt(rat_from_json(j.at("x"))) : QuadExt(rat_from_json(j.at("x")), y, s);
}

void to_json(json& j, const ExtPoint& x) {
  if (x.inf) j = "inf";
  else j = x.v;
}
void from_json(const json& j, ExtPoint& x) {
  if (j.is_string() && j.get<std::string>() == "inf") x = ExtPoint::infinity();
  else x = ExtPoint::finite(j.get<QuadExt>());
}

void to_json(json& j, const MobiusTransform& x) { j = json{{"a", x.a}, {"b", x.b}, {"c", x.c}, {"e", x.e}}; }
void from_json(const json& j, MobiusTransform& x) {
  x.a = j.at("a").get<QuadExt>();
  x.b = j.at("b").get<QuadExt>();
  x.c = j.at("c").get<QuadExt>();
  x.e = j.at("e").get<QuadExt>();
}

void to_json(json& j, const RationalMap& x) {
  j = json{{"p", poly_json(x.p())}, {"q", poly_json(x.q())}, {"text", x.to_string()}};
}
RationalMap rationalMap_from_json(const json& j) {
  return RationalMap::create(IntPoly(ints_from(j.at("p"))), IntPoly(ints_from(j.at("q"))));
}

void to_json(json& j, const OrbitRecord& x) {
  j = json{{"points", x.points}, {"status", to_string(x.status)}, {"preperiod", x.preperiod}, {"period", x.period}};
}
void from_json(const json& j, OrbitRecord& x) {
  x.points = j.at("points").get<std::vector<P1Point>>();
  x.status = enum_from(j.at("status"), {OrbitStatus::preperiodic, OrbitStatus::escaped, OrbitStatus::budget_exhausted});
  x.preperiod = j.at("preperiod").get<std::size_t>();
  x.period = j.at("period").get<std::size_t>();
}

void to_json(json& j, const CriticalPoint& x) {
  j = json{{"location", x.location}, {"ram_index", x.ram_index}, {"text", x.location.to_string()}};
}
void from_json(const json& j, CriticalPoint& x) {
  x.location = j.at("location").get<ExtPoint>();
  x.ram_index = j.at("ram_index").get<int>();
}

void to_json(json& j, const CriticalData& x) {
  j = json{{"points", x.points}, {"s", int_to_json(x.s)}, {"field", x.quadratic() ? "quadratic" : "rational"}};
}
void from_json(const json& j, CriticalData& x) {
  x.points = j.at("points").get<std::vector<CriticalPoint>>();
  x.s = int_from_json(j.at("s"));
}

void to_json(json& j, const NormalForm& x) {
  j = json{{"kind", to_string(x.kind)}, {"degree", x.degree}, {"c", x.c}, {"a", x.a},
           {"b", x.b}, {"mu", x.mu}, {"s", int_to_json(x.s)}, {"text", x.form().to_string()}};
}
void from_json(const json& j, NormalForm& x) {
  x.kind = enum_from(j.at("kind"), {NormalFormKind::power, NormalFormKind::inverse_power, NormalFormKind::bicritical});
  x.degree = j.at("degree").get<unsigned>();
  x.c = j.at("c").get<QuadExt>();
  x.a = j.at("a").get<QuadExt>();
  x.b = j.at("b").get<QuadExt>();
  x.mu = j.at("mu").get<MobiusTransform>();
  x.s = int_from_json(j.at("s"));
}

void to_json(json& j, const QuadraticForm& x) {
  j = json{{"a", rat_to_json(x.a)}, {"b", rat_to_json(x.b)}, {"r", rat_to_json(x.r)},
           {"mu", x.mu}, {"map", x.map}, {"c2", opt(x.c2)}};
}
QuadraticForm quadraticForm_from_json(const json& j) {
  return QuadraticForm{rat_from_json(j.at("a")), rat_from_json(j.at("b")), rat_from_json(j.at("r")),
                       j.at("mu").get<MobiusTransform>(), j.at("map").get<RationalMap>(),
                       opt_from<long>(j.at("c2"))};
}

void to_json(json& j, const OrbitRelation& x) {
  j = json{{"kind", to_string(x.kind)},
           {"n", x.n},
           {"m", x.m},
           {"i", x.i},
           {"j", x.j},
           {"preperiod", x.preperiod},
           {"period", x.period},
           {"value", x.value},
           {"search_bound", x.search_bound},
           {"depth", {x.depth[0], x.depth[1]}},
           {"height_capped", x.height_capped},
           {"galois_consistent", x.galois_consistent}};
}
void from_json(const json& j, OrbitRelation& x) {
  x.kind = enum_from(j.at("kind"), {RelationKind::trailing, RelationKind::collision,
                                    RelationKind::single_orbit_preperiodic, RelationKind::none_found});
  x.n = j.at("n").get<std::size_t>();
  x.m = j.at("m").get<std::size_t>();
  x.i = j.at("i").get<int>();
  x.j = j.at("j").get<int>();
  x.preperiod = j.at("preperiod").get<std::size_t>();
  x.period = j.at("period").get<std::size_t>();
  x.value = j.at("value").get<ExtPoint>();
  x.search_bound = j.at("search_bound").get<std::size_t>();
  x.depth[0] = j.at("depth").at(0).get<std::size_t>();
  x.depth[1] = j.at("depth").at(1).get<std::size_t>();
  x.height_capped = j.at("height_capped").get<bool>();
  x.galois_consistent = j.at("galois_consistent").get<bool>();
}

void to_json(json& j, const PrimePower& x) {
  j = json{{"prime", int_to_json(x.prime)}, {"exponent", x.exponent}, {"proven", x.proven}};
}
void from_json(const json& j, PrimePower& x) {
  x.prime = int_from_json(j.at("prime"));
  x.exponent = j.at("exponent").get<unsigned long>();
  x.proven = j.at("proven").get<bool>();
}

void to_json(json& j, const Factorization& x) {
  j = json{{"sign", x.sign},
           {"factors", x.factors},
           {"cofactor", int_to_json(x.cofactor)},
           {"cofactor_status", to_string(x.cofactor_status)},
           {"cofactor_digits", x.cofactor.get_str().size()},
           {"budget_exhausted", x.budget_exhausted}};
}
void from_json(const json& j, Factorization& x) {
  x.sign = j.at("sign").get<int>();
  x.factors = j.at("factors").get<std::vector<PrimePower>>();
  x.cofactor = int_from_json(j.at("cofactor"));
  x.cofactor_status = enum_from(j.at("cofactor_status"), {CofactorStatus::unit, CofactorStatus::probable_prime,
                                                          CofactorStatus::composite_unfactored});
  x.budget_exhausted = j.at("budget_exhausted").get<bool>();
}

void to_json(json& j, const BadPrimes& x) {
  j = json{{"primes", ints(x.primes)}, {"complete", x.complete}, {"cofactor", int_to_json(x.cofactor)}};
}
void from_json(const json& j, BadPrimes& x) {
  x.primes = ints_from(j.at("primes"));
  x.complete = j.at("complete").get<bool>();
  x.cofactor = int_from_json(j.at("cofactor"));
}

void to_json(json& j, const RigidityViolation& x) {
  j = json{{"prime", int_to_json(x.prime)}, {"condition", x.condition}, {"m", x.m}, {"n", x.n}};
}
void from_json(const json& j, RigidityViolation& x) {
  x.prime = int_from_json(j.at("prime"));
  x.condition = j.at("condition").get<int>();
  x.m = j.at("m").get<std::size_t>();
  x.n = j.at("n").get<std::size_t>();
}

void to_json(json& j, const RigidityReport& x) {
  j = json{{"S", ints(x.S)},
           {"checked_primes", ints(x.checked_primes)},
           {"depth", x.depth},
           {"full_factor_depth", x.full_factor_depth},
           {"trial_bound", x.trial_bound},
           {"pool_incomplete", x.pool_incomplete},
           {"violations", x.violations},
           {"violating_primes", ints(x.violating_primes())},
           {"pass", x.pass()}};
}
void from_json(const json& j, RigidityReport& x) {
  x.S = ints_from(j.at("S"));
  x.checked_primes = ints_from(j.at("checked_primes"));
  x.depth = j.at("depth").get<std::size_t>();
  x.full_factor_depth = j.at("full_factor_depth").get<std::size_t>();
  x.trial_bound = j.at("trial_bound").get<std::uint64_t>();
  x.pool_incomplete = j.at("pool_incomplete").get<bool>();
  x.violations = j.at("violations").get<std::vector<RigidityViolation>>();
}

void to_json(json& j, const RadDivisibilityEvidence& x) {
  j = json{{"n", x.n},
           {"k", x.k},
           {"m", int_to_json(x.m)},
           {"phi_k", rat_to_json(x.phi_k)},
           {"phi_k1", rat_to_json(x.phi_k1)},
           {"condition1", x.condition1},
           {"condition2", x.condition2},
           {"condition3", x.condition3},
           {"orbit_hypotheses", x.orbit_hypotheses},
           {"certified", x.certified}};
}
void from_json(const json& j, RadDivisibilityEvidence& x) {
  x.n = j.at("n").get<std::size_t>();
  x.k = j.at("k").get<std::size_t>();
  x.m = int_from_json(j.at("m"));
  x.phi_k = rat_from_json(j.at("phi_k"));
  x.phi_k1 = rat_from_json(j.at("phi_k1"));
  x.condition1 = j.at("condition1").get<bool>();
  x.condition2 = j.at("condition2").get<bool>();
  x.condition3 = j.at("condition3").get<bool>();
  x.orbit_hypotheses = j.at("orbit_hypotheses").get<bool>();
  x.certified = j.at("certified").get<bool>();
}

namespace {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 15];
  return out;
}

// Restores a digest-form witness from a recomputed value.
SquareWitness resolve_witness(const json& j, const Int& candidate) {
  SquareWitness w = SquareWitness::of(candidate);
  if (j.at("bits").get<std::size_t>() != bit_length(abs(candidate)) ||
      j.at("digest").get<std::string>() != fnv1a64_hex(candidate) ||
      j.at("root_top").get<std::string>() != hex64(top_word(w.root)) ||
      j.at("root_next_top").get<std::string>() != hex64(top_word(w.root + 1)))
    bad("witness digest does not match the recomputed value");
  return w;
}

bool is_digest(const json& j) { return j.is_object() && j.contains("digest"); }

}  // namespace

void to_json(json& j, const SquareWitness& x) {
  const std::size_t bits = bit_length(abs(x.value));
  if (bits <= kDigestThresholdBits) {
    j = json{{"value", int_to_json(x.value)}, {"root", int_to_json(x.root)}, {"nonsquare", x.nonsquare()}};
  } else {
    j = json{{"bits", bits},
             {"digest", fnv1a64_hex(x.value)},
             {"root_top", hex64(top_word(x.root))},
             {"root_next_top", hex64(top_word(x.root + 1))},
             {"negative", x.negative()},
             {"nonsquare", x.nonsquare()}};
  }
}
void from_json(const json& j, SquareWitness& x) {
  if (is_digest(j)) bad("digest-form witness needs its certificate to be recomputed");
  x.value = int_from_json(j.at("value"));
  x.root = int_from_json(j.at("root"));
}

void to_json(json& j, const CascadeLevel& x) {
  j = json{{"n", x.n},
           {"witness", to_string(x.witness)},
           {"value", x.value},
           {"three_mod_4", x.three_mod_4},
           {"oracle_prime", opt(x.oracle_prime)},
           {"verdict", to_string(x.verdict)}};
}
void from_json(const json& j, CascadeLevel& x) {
  x.n = j.at("n").get<std::size_t>();
  x.witness = enum_from(j.at("witness"), {IrreducibilityWitness::base_nonsquare, IrreducibilityWitness::cascade,
                                          IrreducibilityWitness::mod_p_oracle, IrreducibilityWitness::none});
  if (!is_digest(j.at("value"))) x.value = j.at("value").get<SquareWitness>();
  x.three_mod_4 = j.at("three_mod_4").get<bool>();
  x.oracle_prime = opt_from<std::uint64_t>(j.at("oracle_prime"));
  x.verdict = enum_from(j.at("verdict"), {IrreducibilityVerdict::certified, IrreducibilityVerdict::reducible,
                                          IrreducibilityVerdict::unknown});
}

void to_json(json& j, const LevelEvidence& x) {
  j = json{{"n", x.n}, {"irreducibility", x.irreducibility}, {"theta", opt(x.theta)}, {"verdict", to_string(x.verdict)}};
}
void from_json(const json& j, LevelEvidence& x) {
  x.n = j.at("n").get<std::size_t>();
  x.irreducibility = j.at("irreducibility").get<CascadeLevel>();
  x.theta.reset();
  if (!j.at("theta").is_null() && !is_digest(j.at("theta"))) x.theta = j.at("theta").get<SquareWitness>();
  x.verdict = enum_from(j.at("verdict"), {LevelVerdict::maximal, LevelVerdict::unknown});
}

void to_json(json& j, const MaximalityCertificate& x) {
  j = json{{"a", int_to_json(x.a)},
           {"depth", x.depth},
           {"a_two_mod_4", x.a_two_mod_4},
           {"a_le_minus_3", x.a_le_minus_3},
           {"levels", x.levels},
           {"overall", to_string(x.overall)},
           {"unknown_levels", x.unknown_levels}};
}
void from_json(const json& j, MaximalityCertificate& x) {
  x.a = int_from_json(j.at("a"));
  x.depth = j.at("depth").get<std::size_t>();
  x.a_two_mod_4 = j.at("a_two_mod_4").get<bool>();
  x.a_le_minus_3 = j.at("a_le_minus_3").get<bool>();
  x.levels = j.at("levels").get<std::vector<LevelEvidence>>();
  x.overall = enum_from(j.at("overall"), {OverallVerdict::all_maximal, OverallVerdict::partial,
                                          OverallVerdict::hypotheses_unmet});
  x.unknown_levels = j.at("unknown_levels").get<std::vector<std::size_t>>();

  // Digest-form witnesses are restored from f_{n+1} and theta_{n+1}.
  std::vector<Int> f;
  const auto& lj = j.at("levels");
  for (std::size_t i = 0; i < x.levels.size(); ++i) {
    auto& lv = x.levels[i];
    const json& vj = lj.at(i).at("irreducibility").at("value");
    const json& tj = lj.at(i).at("theta");
    if (!is_digest(vj) && !(tj.is_object() && is_digest(tj))) continue;
    if (f.empty()) f = f_sequence(x.a, x.depth + 1);
    if (is_digest(vj)) lv.irreducibility.value = resolve_witness(vj, lv.n == 1 ? Int(-x.a) : f.at(lv.n + 1));
    if (tj.is_object() && is_digest(tj)) lv.theta = resolve_witness(tj, abs(theta_from(f, lv.n + 1)));
  }
}

void to_json(json& j, const ThmAEvidence& x) {
  j = json{{"a", int_to_json(x.a)},
           {"n", x.n},
           {"k", x.k},
           {"A", opt_int(x.A)},
           {"B", opt_int(x.B)},
           {"gcd_one", x.gcd_one},
           {"six_mod_8", x.six_mod_8},
           {"a_k_primes", ints(x.a_k_primes)},
           {"a_k_complete", x.a_k_complete},
           {"modulus", int_to_json(x.modulus)},
           {"rad", opt(x.rad)},
           {"status", to_string(x.status)}};
}
void from_json(const json& j, ThmAEvidence& x) {
  x.a = int_from_json(j.at("a"));
  x.n = j.at("n").get<std::size_t>();
  x.k = j.at("k").get<std::size_t>();
  x.A = opt_int_from(j.at("A"));
  x.B = opt_int_from(j.at("B"));
  x.gcd_one = j.at("gcd_one").get<bool>();
  x.six_mod_8 = j.at("six_mod_8").get<bool>();
  x.a_k_primes = ints_from(j.at("a_k_primes"));
  x.a_k_complete = j.at("a_k_complete").get<bool>();
  x.modulus = int_from_json(j.at("modulus"));
  x.rad = opt_from<RadDivisibilityEvidence>(j.at("rad"));
  x.status = enum_from(j.at("status"), {ThmAStatus::certified, ThmAStatus::no_such_prime,
                                        ThmAStatus::budget_exhausted, ThmAStatus::conditions_failed});
}

void to_json(json& j, const CongruenceWitness& x) { j = json{{"prime", int_to_json(x.prime)}, {"divides", x.divides}}; }
void from_json(const json& j, CongruenceWitness& x) {
  x.prime = int_from_json(j.at("prime"));
  x.divides = j.at("divides").get<std::string>();
}

void to_json(json& j, const HypothesisReport& x) {
  j = json{{"m", int_to_json(x.m)},   {"s1", opt(x.s1)},
           {"s2", opt(x.s2)},         {"shortcut", x.shortcut},
           {"incomplete", x.incomplete}, {"satisfied", x.satisfied()}};
}
void from_json(const json& j, HypothesisReport& x) {
  x.m = int_from_json(j.at("m"));
  x.s1 = opt_from<CongruenceWitness>(j.at("s1"));
  x.s2 = opt_from<CongruenceWitness>(j.at("s2"));
  x.shortcut = j.at("shortcut").get<bool>();
  x.incomplete = j.at("incomplete").get<bool>();
}

void to_json(json& j, const AlphaParametrization& x) {
  j = json{{"m", int_to_json(x.m)},        {"a", int_to_json(x.a)},       {"alpha", rat_to_json(x.alpha)},
           {"phi1", rat_to_json(x.phi1)}, {"phi2", rat_to_json(x.phi2)}, {"phi3", rat_to_json(x.phi3)}};
}
void from_json(const json& j, AlphaParametrization& x) {
  x.m = int_from_json(j.at("m"));
  x.a = int_from_json(j.at("a"));
  x.alpha = rat_from_json(j.at("alpha"));
  x.phi1 = rat_from_json(j.at("phi1"));
  x.phi2 = rat_from_json(j.at("phi2"));
  x.phi3 = rat_from_json(j.at("phi3"));
}

void to_json(json& j, const ThmBEvidence& x) {
  j = json{{"m", int_to_json(x.m)},
           {"n", x.n},
           {"p", x.p},
           {"case", to_string(x.kase)},
           {"residues", x.residues},
           {"pattern_holds", x.pattern_holds},
           {"product", x.product},
           {"prefactor", x.prefactor},
           {"theta_class", x.theta_class},
           {"nonresidue", x.nonresidue},
           {"index_applies", x.index_applies},
           {"certified", x.certified},
           {"direct_nonsquare", opt(x.direct_nonsquare)},
           {"class_identity", opt(x.class_identity)}};
}
void from_json(const json& j, ThmBEvidence& x) {
  x.m = int_from_json(j.at("m"));
  x.n = j.at("n").get<std::size_t>();
  x.p = j.at("p").get<std::uint64_t>();
  x.kase = enum_from(j.at("case"), {ThmBCase::odd, ThmBCase::even_m_pm1, ThmBCase::even_m});
  x.residues = j.at("residues").get<std::vector<std::uint64_t>>();
  x.pattern_holds = j.at("pattern_holds").get<bool>();
  x.product = j.at("product").get<std::uint64_t>();
  x.prefactor = j.at("prefactor").get<std::uint64_t>();
  x.theta_class = j.at("theta_class").get<std::uint64_t>();
  x.nonresidue = j.at("nonresidue").get<bool>();
  x.index_applies = j.at("index_applies").get<bool>();
  x.certified = j.at("certified").get<bool>();
  x.direct_nonsquare = opt_from<bool>(j.at("direct_nonsquare"));
  x.class_identity = opt_from<bool>(j.at("class_identity"));
}

void to_json(json& j, const MFamilyCertificate& x) {
  j = json{{"hypotheses", x.hypotheses},
           {"parametrization", x.parametrization},
           {"certificate", x.certificate},
           {"squarefree", x.squarefree},
           {"nonsquarefree", x.nonsquarefree}};
}
void from_json(const json& j, MFamilyCertificate& x) {
  x.hypotheses = j.at("hypotheses").get<HypothesisReport>();
  x.parametrization = j.at("parametrization").get<AlphaParametrization>();
  x.certificate = j.at("certificate").get<MaximalityCertificate>();
  x.squarefree = j.at("squarefree").get<std::vector<ThmBEvidence>>();
  x.nonsquarefree = j.at("nonsquarefree").get<std::vector<ThmAEvidence>>();
}

void to_json(json& j, const DiscRecursion& x) {
  j = json{{"n", x.n},
           {"a", int_to_json(x.a)},
           {"abs_value", int_to_json(x.abs_value)},
           {"direct", opt_int(x.direct)},
           {"sign", opt(x.sign)},
           {"matches", opt(x.matches)}};
}
void from_json(const json& j, DiscRecursion& x) {
  x.n = j.at("n").get<std::size_t>();
  x.a = int_from_json(j.at("a"));
  x.abs_value = int_from_json(j.at("abs_value"));
  x.direct = opt_int_from(j.at("direct"));
  x.sign = opt_from<int>(j.at("sign"));
  x.matches = opt_from<bool>(j.at("matches"));
}

void to_json(json& j, const StabilityReport& x) {
  j = json{{"verdict", to_string(x.verdict)},
           {"case1", x.case1},
           {"case2", x.case2},
           {"alpha_periodic", x.alpha_periodic},
           {"orbit_status", to_string(x.orbit_status)}};
}
void from_json(const json& j, StabilityReport& x) {
  x.verdict = enum_from(j.at("verdict"), {StabilityCase::case1, StabilityCase::case2, StabilityCase::inconclusive});
  x.case1 = j.at("case1").get<bool>();
  x.case2 = j.at("case2").get<bool>();
  x.alpha_periodic = j.at("alpha_periodic").get<bool>();
  x.orbit_status =
      enum_from(j.at("orbit_status"), {OrbitStatus::preperiodic, OrbitStatus::escaped, OrbitStatus::budget_exhausted});
}

void to_json(json& j, const CommandConfig& x) {
  j = json{{"growth_cap_bits", x.growth_cap_bits}, {"trial_bound", x.trial_bound},
           {"rho_budget", x.rho_budget},           {"orbit_max_steps", x.orbit_max_steps},
           {"height_cap_bits", x.height_cap_bits}, {"seed", x.seed},
           {"output", to_string(x.output)}};
}
void from_json(const json& j, CommandConfig& x) {
  x.growth_cap_bits = j.at("growth_cap_bits").get<std::size_t>();
  x.trial_bound = j.at("trial_bound").get<unsigned long>();
  x.rho_budget = j.at("rho_budget").get<std::uint64_t>();
  x.orbit_max_steps = j.at("orbit_max_steps").get<std::size_t>();
  x.height_cap_bits = j.at("height_cap_bits").get<std::size_t>();
  x.seed = j.at("seed").get<std::uint64_t>();
  x.output = enum_from(j.at("output"), {OutputFormat::json, OutputFormat::text});
}

void to_json(json& j, const OrbitReport& x) { j = json{{"map", x.map}, {"start", x.start}, {"orbit", x.orbit}}; }
OrbitReport orbitReport_from_json(const json& j) {
  OrbitReport x{j.at("map").get<RationalMap>()};
  x.start = j.at("start").get<P1Point>();
  x.orbit = j.at("orbit").get<OrbitRecord>();
  return x;
}

void to_json(json& j, const CriticalReport& x) {
  j = json{{"map", x.map},
           {"critical", x.critical},
           {"bicritical", x.bicritical},
           {"normal_form", opt(x.normal_form)},
           {"quadratic", opt(x.quadratic)},
           {"relation", opt(x.relation)}};
}
CriticalReport criticalReport_from_json(const json& j) {
  CriticalReport x{j.at("map").get<RationalMap>()};
  x.critical = j.at("critical").get<CriticalData>();
  x.bicritical = j.at("bicritical").get<bool>();
  x.normal_form = opt_from<NormalForm>(j.at("normal_form"));
  x.quadratic = opt_from<QuadraticForm>(j.at("quadratic"));
  x.relation = opt_from<OrbitRelation>(j.at("relation"));
  return x;
}

void to_json(json& j, const SequenceRow& x) {
  j = json{{"n", x.n},
           {"p_n0", int_to_json(x.p_n0)},
           {"f", opt_int(x.f)},
           {"theta", opt_int(x.theta)},
           {"factors", opt(x.factors)}};
}
void from_json(const json& j, SequenceRow& x) {
  x.n = j.at("n").get<std::size_t>();
  x.p_n0 = int_from_json(j.at("p_n0"));
  x.f = opt_int_from(j.at("f"));
  x.theta = opt_int_from(j.at("theta"));
  x.factors = opt_from<Factorization>(j.at("factors"));
}

void to_json(json& j, const SequenceReport& x) {
  j = json{{"map", x.map}, {"a", opt_int(x.a)}, {"requested", x.requested}, {"rows", x.rows}, {"status", x.status}};
}
SequenceReport sequenceReport_from_json(const json& j) {
  SequenceReport x{j.at("map").get<RationalMap>()};
  x.a = opt_int_from(j.at("a"));
  x.requested = j.at("requested").get<std::size_t>();
  x.rows = j.at("rows").get<std::vector<SequenceRow>>();
  x.status = j.at("status").get<std::string>();
  return x;
}

void to_json(json& j, const RigidCheckReport& x) {
  j = json{{"map", x.map},
           {"hypothesis_derivatives", x.hypothesis_derivatives},
           {"bad_primes", x.bad_primes},
           {"report", x.report}};
}
RigidCheckReport rigidCheckReport_from_json(const json& j) {
  RigidCheckReport x{j.at("map").get<RationalMap>()};
  x.hypothesis_derivatives = j.at("hypothesis_derivatives").get<bool>();
  x.bad_primes = j.at("bad_primes").get<BadPrimes>();
  x.report = j.at("report").get<RigidityReport>();
  return x;
}

void to_json(json& j, const CertifyReport& x) {
  j = json{{"a", int_to_json(x.a)},
           {"depth", x.depth},
           {"m_family", opt(x.m_family)},
           {"certificate", opt(x.certificate)},
           {"nonsquarefree", x.nonsquarefree}};
}
void from_json(const json& j, CertifyReport& x) {
  x.a = int_from_json(j.at("a"));
  x.depth = j.at("depth").get<std::size_t>();
  x.m_family = opt_from<MFamilyCertificate>(j.at("m_family"));
  x.certificate = opt_from<MaximalityCertificate>(j.at("certificate"));
  x.nonsquarefree = j.at("nonsquarefree").get<std::vector<ThmAEvidence>>();
}

json parse_envelope(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema) bad("missing or unsupported schema");
  if (!j.contains("report")) bad("missing report");
  return j;
}

}  // namespace arbordyn
