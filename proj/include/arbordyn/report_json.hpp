#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbordyn/critical.hpp"
#include "arbordyn/divisibility.hpp"
#include "arbordyn/error.hpp"
#include "arbordyn/factor.hpp"
#include "arbordyn/galois.hpp"
#include "arbordyn/ratmap.hpp"
#include "arbordyn/reduction.hpp"

namespace arbordyn {

using json = nlohmann::json;

inline constexpr const char* kSchema = "arbordyn/1";

enum class OutputFormat { json, text };

/// Budgets shared by the CLI commands. Embedded in every emitted report.
struct CommandConfig {
  std::size_t growth_cap_bits = kDefaultGrowthCapBits;
  unsigned long trial_bound = 1000000;
  std::uint64_t rho_budget = 100000000;
  std::size_t orbit_max_steps = 64;
  std::size_t height_cap_bits = kDefaultHeightCapBits;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::json;

  FactorBudget budget() const { return FactorBudget{trial_bound, rho_budget, seed}; }
  friend bool operator==(const CommandConfig&, const CommandConfig&) = default;
};

struct OrbitReport {
  RationalMap map;
  P1Point start;
  OrbitRecord orbit;
  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

struct CriticalReport {
  RationalMap map;
  CriticalData critical;
  bool bicritical = false;
  std::optional<NormalForm> normal_form;
  std::optional<QuadraticForm> quadratic;
  std::optional<OrbitRelation> relation;
  friend bool operator==(const CriticalReport&, const CriticalReport&) = default;
};

struct SequenceRow {
  std::size_t n = 0;
  Int p_n0;
  std::optional<Int> f, theta;
  std::optional<Factorization> factors;
  friend bool operator==(const SequenceRow&, const SequenceRow&) = default;
};

struct SequenceReport {
  RationalMap map;
  std::optional<Int> a;
  std::size_t requested = 0;
  std::vector<SequenceRow> rows;
  /// "complete" or "growth_cap"
  std::string status = "complete";
  friend bool operator==(const SequenceReport&, const SequenceReport&) = default;
};

struct RigidCheckReport {
  RationalMap map;
  /// p'(0) = q'(0) = 0 holds.
  bool hypothesis_derivatives = true;
  /// Primes of bad reduction (the theorem's S for a normalized pair).
  BadPrimes bad_primes;
  RigidityReport report;
  friend bool operator==(const RigidCheckReport&, const RigidCheckReport&) = default;
};

struct CertifyReport {
  Int a;
  std::size_t depth = 0;
  std::optional<MFamilyCertificate> m_family;
  /// --a path: the certificate and non-square-free evidence.
  std::optional<MaximalityCertificate> certificate;
  std::vector<ThmAEvidence> nonsquarefree;
  friend bool operator==(const CertifyReport&, const CertifyReport&) = default;
};

// Scalars. Integers and rationals travel as decimal strings.
json int_to_json(const Int& n);
Int int_from_json(const json& j);
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

#define ARBORDYN_JSON_DECL(T)    \
  void to_json(json& j, const T& x); \
  void from_json(const json& j, T& x);

ARBORDYN_JSON_DECL(P1Point)
ARBORDYN_JSON_DECL(QuadExt)
ARBORDYN_JSON_DECL(ExtPoint)
ARBORDYN_JSON_DECL(MobiusTransform)
void to_json(json& j, const RationalMap& x);
RationalMap rationalMap_from_json(const json& j);
ARBORDYN_JSON_DECL(OrbitRecord)
ARBORDYN_JSON_DECL(CriticalPoint)
ARBORDYN_JSON_DECL(CriticalData)
ARBORDYN_JSON_DECL(NormalForm)
void to_json(json& j, const QuadraticForm& x);
QuadraticForm quadraticForm_from_json(const json& j);
ARBORDYN_JSON_DECL(OrbitRelation)
ARBORDYN_JSON_DECL(PrimePower)
ARBORDYN_JSON_DECL(Factorization)
ARBORDYN_JSON_DECL(BadPrimes)
ARBORDYN_JSON_DECL(RigidityViolation)
ARBORDYN_JSON_DECL(RigidityReport)
ARBORDYN_JSON_DECL(RadDivisibilityEvidence)
ARBORDYN_JSON_DECL(SquareWitness)
ARBORDYN_JSON_DECL(CascadeLevel)
ARBORDYN_JSON_DECL(LevelEvidence)
ARBORDYN_JSON_DECL(MaximalityCertificate)
ARBORDYN_JSON_DECL(ThmAEvidence)
ARBORDYN_JSON_DECL(CongruenceWitness)
ARBORDYN_JSON_DECL(HypothesisReport)
ARBORDYN_JSON_DECL(AlphaParametrization)
ARBORDYN_JSON_DECL(ThmBEvidence)
ARBORDYN_JSON_DECL(MFamilyCertificate)
ARBORDYN_JSON_DECL(DiscRecursion)
ARBORDYN_JSON_DECL(StabilityReport)
ARBORDYN_JSON_DECL(CommandConfig)
void to_json(json& j, const OrbitReport& x);
OrbitReport orbitReport_from_json(const json& j);
void to_json(json& j, const CriticalReport& x);
CriticalReport criticalReport_from_json(const json& j);
ARBORDYN_JSON_DECL(SequenceRow)
void to_json(json& j, const SequenceReport& x);
SequenceReport sequenceReport_from_json(const json& j);
void to_json(json& j, const RigidCheckReport& x);
RigidCheckReport rigidCheckReport_from_json(const json& j);
ARBORDYN_JSON_DECL(CertifyReport)

#undef ARBORDYN_JSON_DECL

}  // namespace arbordyn

// Types without a default constructor are restored by value.
#define ARBORDYN_JSON_BYVALUE(T, fn)                                            \
  template <>                                                                    \
  struct nlohmann::adl_serializer<arbordyn::T> {                                 \
    static void to_json(json& j, const arbordyn::T& x) { arbordyn::to_json(j, x); } \
    static arbordyn::T from_json(const json& j) { return arbordyn::fn(j); }      \
  };
ARBORDYN_JSON_BYVALUE(RationalMap, rationalMap_from_json)
ARBORDYN_JSON_BYVALUE(QuadraticForm, quadraticForm_from_json)
ARBORDYN_JSON_BYVALUE(OrbitReport, orbitReport_from_json)
ARBORDYN_JSON_BYVALUE(CriticalReport, criticalReport_from_json)
ARBORDYN_JSON_BYVALUE(SequenceReport, sequenceReport_from_json)
ARBORDYN_JSON_BYVALUE(RigidCheckReport, rigidCheckReport_from_json)
#undef ARBORDYN_JSON_BYVALUE

namespace arbordyn {

/// {"schema": "arbordyn/1", "command": ..., "config": ..., "report": ...}
/// serialized with sorted keys and two-space indentation.
template <class T>
std::string emit_report(const std::string& command, const CommandConfig& cfg, const T& report) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["config"] = cfg;
  j["report"] = report;
  return j.dump(2);
}

/// Inverse of emit_report. Throws Error(parse) on a schema mismatch or
/// malformed payload.
json parse_envelope(const std::string& text);

template <class T>
T parse_report(const std::string& text) {
  json env = parse_envelope(text);
  try {
    return env.at("report").get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace arbordyn
