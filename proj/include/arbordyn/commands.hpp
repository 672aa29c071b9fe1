#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbordyn/report_json.hpp"

namespace arbordyn {

// Library side of the command-line tool. Each command builds a report from
// textual inputs; the tool and the Python module only wrap these.

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;  // partial certificate, internal error
inline constexpr int parse = 2;
inline constexpr int not_bicritical = 3;
inline constexpr int hypotheses_unmet = 4;
inline constexpr int rigidity_violation = 5;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

/// steps defaults to cfg.orbit_max_steps.
OrbitReport cmd_orbit(const std::string& map, const std::string& start, std::optional<std::size_t> steps,
                      const CommandConfig& cfg);

/// Critical points, normal form, the conjugate-pair quadratic form when it
/// applies, and the first orbit relation within `relation_bound`. Throws
/// not_bicritical.
CriticalReport cmd_critical(const std::string& map, std::size_t relation_bound, const CommandConfig& cfg);

/// Rows n = 1..N of p_n(0) from [0 : 1]; for the main family also f_n and
/// theta_n. Stops with status "growth_cap" when p_n(0) outgrows the cap.
SequenceReport cmd_sequence(const std::optional<Int>& a, const std::optional<std::string>& map, std::size_t N,
                            bool factor, const CommandConfig& cfg);

/// Exactly one of m, a.
CertifyReport cmd_certify(const std::optional<Int>& m, const std::optional<Int>& a, std::size_t depth,
                          unsigned threads, const CommandConfig& cfg);
int certify_exit_code(const CertifyReport& r);

/// Terms c_n = p_n(0), n = 1..N. full_factor_depth terms are factored
/// completely; later ones are scanned for primes up to prime_bound.
RigidCheckReport cmd_rigid_check(const std::string& map, const std::vector<Int>& exclude, std::size_t N,
                                 std::size_t full_factor_depth, std::uint64_t prime_bound, const CommandConfig& cfg);

std::string render_text(const OrbitReport& r);
std::string render_text(const CriticalReport& r);
std::string render_text(const SequenceReport& r);
std::string render_text(const CertifyReport& r);
std::string render_text(const RigidCheckReport& r);

}  // namespace arbordyn
