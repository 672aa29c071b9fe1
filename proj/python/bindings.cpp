#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arbordyn/commands.hpp"
#include "arbordyn/parse.hpp"

namespace py = pybind11;
using namespace arbordyn;

namespace {

CommandConfig config_from(const std::string& text) {
  if (text.empty()) return {};
  try {
    return json::parse(text).get<CommandConfig>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad config: ") + e.what());
  }
}

std::optional<Int> opt_int(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return parse_int(*s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the arbordyn command layer; reports travel as JSON text.";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("SCHEMA") = kSchema;

  m.def("default_config", [] { return json(CommandConfig{}).dump(); });

  m.def("canonical_map", [](const std::string& s) { return parse_map(s).to_string(); }, py::arg("map"));

  m.def(
      "orbit",
      [](const std::string& map, const std::string& start, std::optional<std::size_t> steps, const std::string& cfg) {
        CommandConfig c = config_from(cfg);
        return emit_report("orbit", c, cmd_orbit(map, start, steps, c));
      },
      py::arg("map"), py::arg("start") = "0", py::arg("steps") = py::none(), py::arg("config") = "");

  m.def(
      "critical",
      [](const std::string& map, std::size_t bound, const std::string& cfg) {
        CommandConfig c = config_from(cfg);
        return emit_report("critical", c, cmd_critical(map, bound, c));
      },
      py::arg("map"), py::arg("bound") = 12, py::arg("config") = "");

  m.def(
      "sequence",
      [](std::optional<std::string> a, std::optional<std::string> map, std::size_t n, bool factor,
         const std::string& cfg) {
        CommandConfig c = config_from(cfg);
        py::gil_scoped_release release;
        return emit_report("sequence", c, cmd_sequence(opt_int(a), map, n, factor, c));
      },
      py::arg("a") = py::none(), py::arg("map") = py::none(), py::arg("n") = 8, py::arg("factor") = false,
      py::arg("config") = "");

  m.def(
      "certify",
      [](std::optional<std::string> mm, std::optional<std::string> a, std::size_t depth, unsigned threads,
         const std::string& cfg) {
        CommandConfig c = config_from(cfg);
        py::gil_scoped_release release;
        CertifyReport r = cmd_certify(opt_int(mm), opt_int(a), depth, threads, c);
        return std::make_pair(emit_report("certify", c, r), certify_exit_code(r));
      },
      py::arg("m") = py::none(), py::arg("a") = py::none(), py::arg("depth") = 8, py::arg("threads") = 1,
      py::arg("config") = "");

  m.def(
      "rigid_check",
      [](const std::string& map, const std::vector<std::string>& exclude, std::size_t n, std::size_t full_depth,
         std::uint64_t prime_bound, const std::string& cfg) {
        CommandConfig c = config_from(cfg);
        std::vector<Int> S;
        for (const auto& s : exclude) S.push_back(parse_int(s));
        py::gil_scoped_release release;
        return emit_report("rigid-check", c, cmd_rigid_check(map, S, n, full_depth, prime_bound, c));
      },
      py::arg("map"), py::arg("exclude") = std::vector<std::string>{}, py::arg("n") = 8,
      py::arg("full_factor_depth") = 6, py::arg("prime_bound") = 10000, py::arg("config") = "");

  m.def(
      "f_sequence",
      [](const std::string& a, std::size_t n) {
        std::vector<std::string> out;
        for (const auto& x : f_sequence(parse_int(a), n)) out.push_back(x.get_str());
        return out;
      },
      py::arg("a"), py::arg("n"));

  m.def(
      "theta", [](const std::string& a, std::size_t n) { return theta(parse_int(a), n).get_str(); }, py::arg("a"),
      py::arg("n"));
}
