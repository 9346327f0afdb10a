#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "poico/report.hpp"
#include "poico/version.hpp"

namespace {

void add_structure_flags(CLI::App* sub, poico::ReportConfig& cfg) {
  sub->add_option("--model", cfg.model_name, "catalog model name (see `poico models`)");
  sub->add_option("--n", cfg.model_param, "integer model parameter where applicable");
  sub->add_option("--factor", cfg.conformal_factor,
                  "polynomial conformal factor (blf-circle only)");
  sub->add_option("--input", cfg.input_path, "path to a .poisson file");
}

void add_output_flags(CLI::App* sub, poico::ReportConfig& cfg) {
  sub->add_option("--format", cfg.format, "json or markdown")->default_str("json");
  sub->add_option("--output", cfg.output_path, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Poisson cohomology engine for polynomial Poisson structures"};
  app.set_version_flag("--version", poico::kEngineVersion);
  app.require_subcommand(1);

  poico::ReportConfig cfg;
  std::vector<long> betti_vals;

  auto* validate = app.add_subcommand("validate", "Jacobi identity check with witness");
  add_structure_flags(validate, cfg);
  add_output_flags(validate, cfg);

  auto* casimirs = app.add_subcommand("casimirs", "Casimir bases per homogeneous degree");
  add_structure_flags(casimirs, cfg);
  add_output_flags(casimirs, cfg);
  casimirs->add_option("--max-degree", cfg.max_degree, "largest coefficient degree");

  auto* cohomology =
      app.add_subcommand("cohomology", "graded Lichnerowicz cohomology dimension table");
  add_structure_flags(cohomology, cfg);
  add_output_flags(cohomology, cfg);
  cohomology->add_option("--max-degree", cfg.max_degree, "largest coefficient degree");
  std::string k_range;
  cohomology->add_option("--k-range", k_range, "multivector degrees, e.g. 0-4 or 1");
  cohomology->add_flag("--no-reps", "skip representative extraction");
  cohomology->add_option("--fit", cfg.fit_degrees,
                         "Casimir generator degrees for free-module fits, e.g. 1,2")
      ->delimiter(',');

  auto* modular = app.add_subcommand("modular", "modular vector field");
  add_structure_flags(modular, cfg);
  add_output_flags(modular, cfg);

  auto* rank = app.add_subcommand("rank", "pointwise rank of the bivector");
  add_structure_flags(rank, cfg);
  add_output_flags(rank, cfg);
  rank->add_option("--samples", cfg.samples, "rational points, e.g. 1,0,0,0");

  auto* assemble = app.add_subcommand("assemble", "closed-form global cohomology tables");
  add_output_flags(assemble, cfg);
  assemble->add_option("--betti", betti_vals, "five Betti numbers b0..b4")->expected(5);
  assemble->add_option("--circles", cfg.circles, "number of singular circles");
  assemble->add_option("--points", cfg.points, "number of Lefschetz points");
  assemble->add_option("--max-degree", cfg.max_degree, "largest coefficient degree (formal table)");

  auto* report = app.add_subcommand("report", "full structure report");
  add_structure_flags(report, cfg);
  add_output_flags(report, cfg);
  report->add_option("--max-degree", cfg.max_degree, "largest coefficient degree");
  report->add_option("--samples", cfg.samples, "rational sample points");

  auto* models = app.add_subcommand("models", "list the model catalog");
  add_output_flags(models, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage errors exit 2
  }

  for (auto* sub :
       {validate, casimirs, cohomology, modular, rank, assemble, report, models})
    if (sub->parsed()) cfg.operation = sub->get_name();

  if (cohomology->parsed()) {
    cfg.with_representatives = cohomology->count("--no-reps") == 0;
    if (!k_range.empty()) {
      auto dash = k_range.find('-');
      try {
        if (dash == std::string::npos) {
          cfg.k_min = cfg.k_max = std::stoi(k_range);
        } else {
          cfg.k_min = std::stoi(k_range.substr(0, dash));
          cfg.k_max = std::stoi(k_range.substr(dash + 1));
        }
      } catch (const std::exception&) {
        std::cerr << "usage error: bad --k-range '" << k_range << "'\n";
        return 2;
      }
    }
  }
  if (assemble->parsed() && !betti_vals.empty())
    cfg.betti = std::array<long, 5>{betti_vals[0], betti_vals[1], betti_vals[2], betti_vals[3],
                                    betti_vals[4]};

  return poico::run(cfg, std::cout, std::cerr);
}
