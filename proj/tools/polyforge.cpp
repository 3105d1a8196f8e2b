#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyforge/audit.hpp"
#include "polyforge/expr.hpp"
#include "polyforge/isomorphism.hpp"
#include "polyforge/json_io.hpp"
#include "polyforge/lattice.hpp"

namespace {

int run_build(const std::string& spec, const std::string& emit,
              const std::string& output) {
  polyforge::ConstructedPolytope p = polyforge::build_from_spec(spec);
  nlohmann::json j;
  if (emit == "json") {
    j = polyforge::to_json(p);
  } else if (emit == "fvector") {
    j = polyforge::to_json(
        polyforge::f_vector(polyforge::enumerate_face_lattice(p.structure)));
  } else {
    throw polyforge::Error(polyforge::ErrorCode::UsageError,
                           "--emit must be json or fvector");
  }
  if (output.empty())
    std::cout << j.dump(emit == "json" ? 2 : -1) << '\n';
  else
    polyforge::write_json_file(output, j);
  return 0;
}

int run_fvector(const std::string& path) {
  polyforge::ConstructedPolytope p = polyforge::read_polytope_file(path);
  std::cout << polyforge::to_json(polyforge::f_vector(
                   polyforge::enumerate_face_lattice(p.structure)))
                   .dump()
            << '\n';
  return 0;
}

int run_iso(const std::string& a_path, const std::string& b_path) {
  polyforge::ConstructedPolytope a = polyforge::read_polytope_file(a_path);
  polyforge::ConstructedPolytope b = polyforge::read_polytope_file(b_path);
  bool iso = polyforge::are_isomorphic(a.structure, b.structure);
  std::cout << (iso ? "isomorphic" : "not-isomorphic") << '\n';
  return iso ? 0 : 1;
}

int run_audit(const polyforge::audit::SweepConfig& cfg,
              const std::string& report_path) {
  polyforge::audit::RunResult result = polyforge::audit::run(cfg);
  for (const auto& r : result.reports) {
    if (r.status == polyforge::audit::Status::Fail)
      std::cout << "FAIL " << r.claim_id << ' ' << r.params.dump()
                << " expected=" << r.expected.dump()
                << " actual=" << r.actual.dump() << '\n';
  }
  std::cout << "pass=" << result.pass << " fail=" << result.fail
            << " skipped=" << result.skipped << '\n';
  if (!report_path.empty())
    polyforge::write_json_file(report_path, result.to_json(cfg));
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyforge: face-lattice kernel and audit tool"};
  app.require_subcommand(1);

  std::string build_spec, emit = "json", output;
  CLI::App* build = app.add_subcommand("build", "construct a polytope");
  build->add_option("spec", build_spec, "family spec or construction expression")
      ->required();
  build->add_option("--emit", emit, "json or fvector");
  build->add_option("-o,--output", output, "write to a file");

  std::string fvector_path;
  CLI::App* fvector =
      app.add_subcommand("fvector", "f-vector of a polytope file");
  fvector->add_option("file", fvector_path, "polytope JSON file")->required();

  std::string iso_a, iso_b;
  CLI::App* iso = app.add_subcommand("iso", "combinatorial isomorphism test");
  iso->add_option("a", iso_a, "first polytope JSON file")->required();
  iso->add_option("b", iso_b, "second polytope JSON file")->required();

  std::string formula;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula");
  eval->add_option("formula", formula, "e.g. phi:1,4,4")->required();

  polyforge::audit::SweepConfig cfg;
  std::string report_path;
  std::string checks_csv = "all";
  CLI::App* auditcmd = app.add_subcommand("audit", "run the claim sweep");
  auditcmd->add_option("--dmax", cfg.dmax, "sweep dimension cap (3..12)");
  auditcmd->add_option("--checks", checks_csv,
                       "comma-separated claim ids or check names");
  auditcmd->add_option("--seed", cfg.seed, "seed for randomized checks");
  auditcmd->add_option("--report", report_path, "write the JSON report here");
  auditcmd->add_flag("--iso-cross-check", cfg.iso_cross_check,
                     "also audit alternative wedge-facet choices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return run_build(build_spec, emit, output);
    if (*fvector) return run_fvector(fvector_path);
    if (*iso) return run_iso(iso_a, iso_b);
    if (*eval) {
      std::cout << polyforge::eval_formula_spec(formula) << '\n';
      return 0;
    }
    if (*auditcmd) {
      cfg.checks.clear();
      std::stringstream ss(checks_csv);
      std::string token;
      while (std::getline(ss, token, ','))
        if (!token.empty()) cfg.checks.push_back(token);
      if (cfg.checks.empty()) cfg.checks.push_back("all");
      return run_audit(cfg, report_path);
    }
  } catch (const polyforge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == polyforge::ErrorCode::UsageError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
