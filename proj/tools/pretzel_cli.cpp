#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pretzel/checkerboard.hpp"
#include "pretzel/fox.hpp"
#include "pretzel/lspace.hpp"

namespace {

using namespace pretzel;

int env_workers() {
  const char* v = std::getenv("PRETZEL_WORKERS");
  if (!v) return 0;
  return std::atoi(v);
}

std::string env_report_dir() {
  const char* v = std::getenv("PRETZEL_REPORT_DIR");
  return v ? v : ".";
}

void print_hfk_table() {
  const HFKTable& t = hfk_exception_table();
  std::cout << "  HFK dimensions of (3,-5,3,-2) over F_2 (rows M, columns s):\n";
  for (const auto& [key, dim] : t.entries)
    std::cout << "    M=" << key.first << " s=" << key.second << " dim=" << dim << "\n";
  std::cout << "  column s=2 has total dimension " << t.column_dimension(2) << "\n";
}

int cmd_analyze(const std::string& text, bool as_json, const std::string& dump_path) {
  PretzelCode input = parse_pretzel(text);
  PretzelCode code = normalize(input);
  nlohmann::json j;
  j["input"] = render(input);
  j["normalized"] = render(code);
  if (!as_json && code != input)
    std::cout << "normalized: " << render(input) << " -> " << render(code) << "\n";

  ReducedForm rf = reduce_small(code);
  if (rf.kind == ReducedForm::TorusKnot && std::abs(rf.torus_q) % 2 == 0) {
    std::cerr << "error: " << render(code) << " is a two-component torus link, not a knot\n";
    return 1;
  }
  if (component_count(code) != 1 && rf.kind == ReducedForm::Pretzel) {
    std::cerr << "error: " << render(code) << " is a link, not a knot\n";
    return 1;
  }

  LSpaceReport rep = classify_lspace(code);
  if (rf.kind == ReducedForm::Unknot) {
    j["reduced"] = "unknot";
    if (!as_json) std::cout << "reduces to the unknot\n";
  } else if (rf.kind == ReducedForm::TorusKnot) {
    j["reduced"] = "T(2," + std::to_string(rf.torus_q) + ")";
    if (!as_json) std::cout << "reduces to the torus knot T(2," << rf.torus_q << ")\n";
  } else {
    OrientedDiagram diagram = orient(code);
    j["type"] = to_string(rep.type);
    j["seifert_genus"] = seifert_genus(diagram);
    if (!as_json) {
      std::cout << "type: " << to_string(rep.type) << "\n";
      std::cout << "seifert genus: " << seifert_genus(diagram) << "\n";
    }
    if (!dump_path.empty()) {
      std::ofstream out(dump_path);
      out << dot_dump(build_graphs(diagram));
      if (!as_json) std::cout << "graphs written to " << dump_path << "\n";
    }
  }

  j["fibered"] = rep.fibered;
  j["delta"] = rep.delta.str();
  {
    std::ostringstream os;
    os << rep.det;
    j["det"] = os.str();
  }
  j["det_eval"] = [&] {
    std::ostringstream os;
    os << boost::multiprecision::abs(rep.delta(BigInt(-1)));
    return os.str();
  }();
  if (rep.fiber_genus) j["fiber_genus"] = *rep.fiber_genus; else j["fiber_genus"] = nullptr;
  j["coeff_ok"] = rep.coeff_ok;
  j["family"] = to_string(rep.family.family);
  j["verdict"] = rep.verdict == LSpaceVerdict::LSpaceKnot ? "LSpaceKnot" : "NotLSpaceKnot";
  j["reason"] = rep.reason;

  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "fibered: " << (rep.fibered ? "yes" : "no") << "\n";
  FiberednessVerdict fv;
  if (rf.kind == ReducedForm::Pretzel) {
    fv = is_fibered(code);
    for (const std::string& step : fv.trace) std::cout << "  " << step << "\n";
  }
  std::cout << "Delta = " << rep.delta.str() << "\n";
  std::cout << "det = " << rep.det << " (|Delta(-1)| = "
            << boost::multiprecision::abs(rep.delta(BigInt(-1))) << ")\n";
  if (rep.fiber_genus) std::cout << "fiber genus: " << *rep.fiber_genus << "\n";
  std::cout << "L-space verdict: "
            << (rep.verdict == LSpaceVerdict::LSpaceKnot ? "LSpaceKnot" : "NotLSpaceKnot");
  if (!rep.reason.empty()) std::cout << " (" << rep.reason << ")";
  std::cout << "\n";
  if (rep.family.family == Family::HFKException) print_hfk_table();
  return 0;
}

int cmd_verify(int max_tangles, int max_twist, const std::string& format, int workers,
               const std::string& out_dir) {
  VerificationReport report;
  try {
    report = verify_theorem1(max_tangles, max_twist, workers);
  } catch (const counterexample_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::cout << "codes enumerated: " << report.candidates << "\n";
  std::cout << "knot codes: " << report.rows.size() << "\n";
  for (const auto& [reason, count] : report.eliminated_by)
    std::cout << "  " << reason << ": " << count << "\n";
  std::cout << "survivors (all in known families): " << report.survivors.size() << "\n";
  std::cout << "counterexamples: 0\n";
  if (format == "csv" || format == "json") {
    std::string path = out_dir + "/report." + format;
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return 1;
    }
    out << (format == "csv" ? report.to_csv() : report.to_json());
    std::cout << "report written to " << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pretzel knot invariants and L-space classification"};
  app.require_subcommand(1);

  std::string analyze_code, dump_path;
  bool analyze_json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "Full report for one pretzel code");
  analyze->add_option("code", analyze_code, "Pretzel code, e.g. \"(-2,3,7)\"")->required();
  analyze->add_flag("--json", analyze_json, "Emit JSON instead of text");
  analyze->add_option("--dump-graphs", dump_path, "Write checkerboard graphs as DOT");

  int max_tangles = 0, max_twist = 0, workers = env_workers();
  std::string format = "text", out_dir = env_report_dir();
  CLI::App* verify = app.add_subcommand("verify", "Enumerate and check the classification");
  verify->add_option("--max-tangles", max_tangles, "Maximum number of tangles (>= 3)")
      ->required();
  verify->add_option("--max-twist", max_twist, "Maximum |half twists| per tangle (>= 1)")
      ->required();
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--workers", workers, "Worker threads (0 = hardware)");
  verify->add_option("--output", out_dir, "Report directory");

  std::string oracle_code;
  CLI::App* oracle = app.add_subcommand("oracle", "Fox-calculus Alexander polynomial");
  oracle->add_option("code", oracle_code, "Pretzel code")->required();
  oracle->group("");  // hidden: debugging aid

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_code, analyze_json, dump_path);
    if (verify->parsed()) {
      if (max_tangles < 3 || max_twist < 1) {
        std::cerr << "error: need --max-tangles >= 3 and --max-twist >= 1\n";
        return 1;
      }
      return cmd_verify(max_tangles, max_twist, format, workers, out_dir);
    }
    if (oracle->parsed()) {
      std::cout << alexander_oracle(parse_pretzel(oracle_code)).str() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
