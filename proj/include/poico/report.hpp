#ifndef POICO_REPORT_HPP
#define POICO_REPORT_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace poico {

// One CLI invocation. Exit codes: 0 success, 1 validation failure
// (non-Poisson input), 2 usage error.
struct ReportConfig {
  std::string operation;  // validate casimirs cohomology modular rank assemble report models
  std::string model_name;
  int model_param = 0;
  std::string conformal_factor;  // blf-circle only, polynomial text
  std::string input_path;        // .poisson file
  std::string input_text;        // inline document (overrides path)
  long max_degree = 4;
  int k_min = 0, k_max = -1;  // -1: up to the ambient dimension
  std::string format = "json";
  std::string output_path;  // empty: stream to `out`
  std::vector<std::string> samples;
  bool with_representatives = true;
  std::vector<long> fit_degrees;  // Casimir generator degrees for free-module fits
  std::optional<std::array<long, 5>> betti;
  long circles = -1, points = -1;
};

int run(const ReportConfig& config, std::ostream& out, std::ostream& err);

}  // namespace poico

#endif
