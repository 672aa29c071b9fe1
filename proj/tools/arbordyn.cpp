#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "arbordyn/commands.hpp"
#include "arbordyn/parallel.hpp"
#include "arbordyn/parse.hpp"

using namespace arbordyn;

namespace {

struct Globals {
  CommandConfig cfg;
  std::string output = "json";
  std::optional<unsigned> threads;
};

template <class R>
void emit(const std::string& command, const Globals& g, const R& report) {
  if (g.cfg.output == OutputFormat::text) std::cout << render_text(report);
  else std::cout << emit_report(command, g.cfg, report) << "\n";
}

std::optional<Int> opt_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return parse_int(s);
  } catch (const Error&) {
    throw Error(ErrorKind::parse, "not an integer: \"" + s + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic dynamics of bicritical rational maps over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  CommandConfig defaults;

  app.add_option("--output", g.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.cfg.seed, "Seed for randomized factoring internals");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores; falls back to ARBORDYN_THREADS)");
  app.add_option("--growth-cap-bits", g.cfg.growth_cap_bits, "Largest integer the sequence code may build")
      ->check(CLI::PositiveNumber);
  app.add_option("--trial-bound", g.cfg.trial_bound, "Trial division bound")->check(CLI::PositiveNumber);
  app.add_option("--rho-budget", g.cfg.rho_budget, "Pollard rho iteration budget")->check(CLI::PositiveNumber);
  app.add_option("--orbit-max-steps", g.cfg.orbit_max_steps, "Default orbit length")->check(CLI::PositiveNumber);
  app.add_option("--height-cap-bits", g.cfg.height_cap_bits, "Height cap for orbit points")
      ->check(CLI::PositiveNumber);

  std::string map, start = "0", a_text, m_text, exclude;
  std::optional<std::size_t> steps;
  std::size_t n = 8, depth = 8, bound = 12, full_depth = 6;
  std::uint64_t prime_bound = 10000;
  bool factor = false;

  auto* orbit_cmd = app.add_subcommand("orbit", "Forward orbit of a rational point");
  orbit_cmd->add_option("--map", map, "Map p/q, e.g. \"(z^2-98)/z^2\"")->required();
  orbit_cmd->add_option("--start", start, "Start point: n, n/d or inf");
  orbit_cmd->add_option("--steps", steps, "Maximum number of iterations");

  auto* critical_cmd = app.add_subcommand("critical", "Critical points, normal form and orbit relation");
  auto* normal_cmd = app.add_subcommand("normal-form", "Alias of critical");
  for (auto* c : {critical_cmd, normal_cmd}) {
    c->add_option("--map", map, "Map p/q")->required();
    c->add_option("--bound", bound, "Orbit relation search depth");
  }

  auto* seq_cmd = app.add_subcommand("sequence", "Table of p_n(0), f_n and theta_n");
  auto* seq_a = seq_cmd->add_option("--a", a_text, "Parameter a of (z^2+a)/z^2");
  seq_cmd->add_option("--map", map, "Any map p/q")->excludes(seq_a);
  seq_cmd->add_option("--n", n, "Number of rows")->check(CLI::PositiveNumber);
  seq_cmd->add_flag("--factor", factor, "Factor p_n(0)");

  auto* cert_cmd = app.add_subcommand("certify", "Maximality certificate for (z^2+a)/z^2");
  auto* cert_m = cert_cmd->add_option("--m", m_text, "Family parameter m, a = -2(2m^2-1)^2");
  cert_cmd->add_option("--a", a_text, "Parameter a directly")->excludes(cert_m);
  cert_cmd->add_option("--depth", depth, "Certificate depth N")->check(CLI::PositiveNumber);

  auto* rigid_cmd = app.add_subcommand("rigid-check", "Rigid divisibility of p_n(0)");
  rigid_cmd->add_option("--map", map, "Map p/q")->required();
  rigid_cmd->add_option("--exclude", exclude, "Comma-separated primes S");
  rigid_cmd->add_option("--n", n, "Number of terms")->check(CLI::PositiveNumber);
  rigid_cmd->add_option("--full-factor-depth", full_depth, "Terms factored completely");
  rigid_cmd->add_option("--prime-bound", prime_bound, "Primes up to this bound are tested in later terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::parse;
  }
  g.cfg.output = g.output == "text" ? OutputFormat::text : OutputFormat::json;
  const unsigned threads = resolve_threads(g.threads);
  if ((seq_cmd->parsed() && map.empty() && a_text.empty()) || (cert_cmd->parsed() && m_text.empty() && a_text.empty())) {
    std::cerr << "arbordyn: one of --a, --" << (seq_cmd->parsed() ? "map" : "m") << " is required\n";
    return exit_code::parse;
  }

  try {
    if (orbit_cmd->parsed()) {
      emit("orbit", g, cmd_orbit(map, start, steps, g.cfg));
      return exit_code::ok;
    }
    if (critical_cmd->parsed() || normal_cmd->parsed()) {
      emit(critical_cmd->parsed() ? "critical" : "normal-form", g, cmd_critical(map, bound, g.cfg));
      return exit_code::ok;
    }
    if (seq_cmd->parsed()) {
      std::optional<std::string> m;
      if (!map.empty()) m = map;
      auto r = cmd_sequence(opt_int(a_text), m, n, factor, g.cfg);
      if (r.status != "complete") std::cerr << "arbordyn: growth cap reached after " << r.rows.size() << " rows\n";
      emit("sequence", g, r);
      return exit_code::ok;
    }
    if (cert_cmd->parsed()) {
      auto r = cmd_certify(opt_int(m_text), opt_int(a_text), depth, threads, g.cfg);
      emit("certify", g, r);
      int rc = certify_exit_code(r);
      if (rc == exit_code::hypotheses_unmet) std::cerr << "arbordyn: hypotheses unmet\n";
      return rc;
    }
    if (rigid_cmd->parsed()) {
      auto r = cmd_rigid_check(map, parse_int_list(exclude), n, full_depth, prime_bound, g.cfg);
      if (!r.hypothesis_derivatives)
        std::cerr << "arbordyn: warning: hypothesis p'(0) = q'(0) = 0 fails; running the check empirically\n";
      emit("rigid-check", g, r);
      return r.report.pass() ? exit_code::ok : exit_code::rigidity_violation;
    }
  } catch (const Error& e) {
    std::cerr << "arbordyn: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "arbordyn: " << e.what() << "\n";
    return exit_code::failure;
  }
  return exit_code::failure;
}
