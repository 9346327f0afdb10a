#include "poico/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "poico/assembly.hpp"
#include "poico/dsl.hpp"
#include "poico/models.hpp"
#include "poico/version.hpp"

namespace poico {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg, Json detail = {})
      : std::runtime_error(msg), detail(std::move(detail)) {}
  Json detail;
};

PoissonStructure load_structure(const ReportConfig& cfg) {
  if (!cfg.model_name.empty()) {
    if (!is_model_name(cfg.model_name)) throw UsageError("unknown model: " + cfg.model_name);
    ModelSpec spec;
    spec.name = cfg.model_name;
    spec.n = cfg.model_param;
    if (!cfg.conformal_factor.empty())
      spec.conformal_factor = parse_polynomial(cfg.conformal_factor, {"t", "x1", "x2", "x3"});
    return model(spec);
  }
  std::string text = cfg.input_text;
  if (text.empty()) {
    if (cfg.input_path.empty()) throw UsageError("no --model and no --input given");
    std::ifstream in(cfg.input_path);
    if (!in) throw UsageError("cannot read input file: " + cfg.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return to_poisson(parse_structure(text));
}

Json structure_json(const PoissonStructure& pi) {
  Json j;
  j["name"] = pi.name;
  j["coords"] = pi.coords;
  j["weights"] = pi.weights.w;
  j["bivector"] = print_multivector(pi.bivector, pi.coords);
  j["volume_scale"] = to_string(pi.volume.scale);
  return j;
}

PointEval parse_point(const std::string& text, int n) {
  PointEval p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.x.push_back(rational_from_string(item));
  if (static_cast<int>(p.x.size()) != n)
    throw UsageError("point '" + text + "' has wrong dimension (expected " + std::to_string(n) +
                     ")");
  return p;
}

Json point_json(const PointEval& p) {
  Json out = Json::array();
  for (const auto& c : p.x) out.push_back(to_string(c));
  return out;
}

void require_poisson(const PoissonStructure& pi) {
  auto jac = jacobi_check(pi);
  if (!jac.ok) {
    Json detail;
    detail["jacobi"] = false;
    detail["witness"] = print_multivector(jac.witness, pi.coords);
    throw ValidationError("input bivector is not Poisson", detail);
  }
}

// ---- per-operation result builders ------------------------------------

Json op_validate(const PoissonStructure& pi, bool& poisson) {
  auto jac = jacobi_check(pi);
  poisson = jac.ok;
  Json r;
  r["jacobi"] = jac.ok;
  r["witness"] = jac.ok ? Json(nullptr) : Json(print_multivector(jac.witness, pi.coords));
  return r;
}

Json op_casimirs(const PoissonStructure& pi, long max_degree) {
  Json r;
  r["by_degree"] = Json::array();
  for (long i = 0; i <= max_degree; ++i) {
    auto basis = casimir_basis(pi, i);
    Json entry;
    entry["degree"] = i;
    entry["dimension"] = basis.size();
    Json list = Json::array();
    for (const auto& f : basis) list.push_back(print_polynomial(f, pi.coords));
    entry["basis"] = list;
    r["by_degree"].push_back(entry);
  }
  return r;
}

Json reference_block(const PoissonStructure& pi, long i_max) {
  Json ref;
  auto fill = [&](const std::string& key, auto dim_fn) {
    Json arr = Json::array();
    for (long i = 0; i <= i_max; ++i) arr.push_back(dim_fn(i));
    ref[key] = arr;
  };
  if (pi.name == "near-positive") {
    fill("H0", [](long i) { return i == 0 ? 1 : 0; });
    fill("H1", [](long i) { return i == 0 ? 2 : 0; });
    fill("H2", [](long i) { return i == 0 ? 1 : 0; });
    fill("H3", [](long) { return 0; });
    fill("H4", [](long) { return 0; });
    ref["note"] = "expected formal table of the near-positive model";
  } else if (pi.name == "blf-circle") {
    fill("H0", circle_casimir_dim);
    fill("H1", circle_casimir_dim);
    fill("H2", [](long) { return 0; });
    fill("H3", circle_casimir_dim);
    fill("H4", circle_casimir_dim);
    ref["note"] = "expected formal table around a fold circle";
  } else if (pi.name == "blf-point") {
    fill("H0", [](long i) { return casimir_hilbert({2, 2}, i); });
    fill("H1", [](long i) { return casimir_hilbert({2, 2}, i - 1); });
    ref["H2_module_rank"] = 6;
    ref["H3_module_rank"] = 13;
    ref["H4_module_rank"] = 7;
    ref["note"] = "expected Casimir-module structure around a Lefschetz point";
  }
  return ref;
}

Json op_cohomology(const PoissonStructure& pi, int k_min, int k_max, long i_max, bool reps,
                   const std::vector<long>& fit_degrees) {
  if (k_max < 0) k_max = pi.n;
  CohomologyReport rep = cohomology_table(pi, k_min, k_max, i_max, reps);
  if (!fit_degrees.empty()) attach_free_module_fits(rep, fit_degrees);
  Json r;
  r["degree_shift"] = rep.degree_shift;
  r["slices"] = Json::array();
  for (const auto& s : rep.slices) {
    Json e;
    e["k"] = s.k;
    e["i"] = s.i;
    e["space_dim"] = s.space_dim;
    e["nullity"] = s.nullity;
    e["prev_rank"] = s.prev_rank;
    e["dim"] = s.dim;
    if (s.reps_computed) {
      Json list = Json::array();
      for (const auto& m : s.representatives) list.push_back(print_multivector(m, pi.coords));
      e["representatives"] = list;
    }
    r["slices"].push_back(e);
  }
  Json totals;
  for (int k = k_min; k <= k_max; ++k) totals["H" + std::to_string(k)] = rep.dims_for_k(k);
  r["dims_by_k"] = totals;
  if (!rep.fits_by_k.empty()) {
    Json fits;
    fits["casimir_degrees"] = rep.fit_casimir_degrees;
    for (const auto& [k, fit] : rep.fits_by_k) {
      Json f;
      f["rank"] = fit.rank;
      f["generator_degrees"] = fit.generator_degrees;
      f["exact"] = fit.exact;
      f["failed"] = fit.failed;
      if (fit.failed) f["failure_degree"] = fit.failure_degree;
      fits["H" + std::to_string(k)] = f;
    }
    r["free_module_fits"] = fits;
  }
  Json ref = reference_block(pi, i_max);
  if (!ref.empty()) r["reference"] = ref;
  return r;
}

Json op_modular(const PoissonStructure& pi) {
  Multivector y = modular_field(pi, pi.volume);
  Json r;
  r["field"] = print_multivector(y, pi.coords);
  r["is_cocycle"] = schouten(pi.bivector, y).is_zero();
  return r;
}

Json op_rank(const PoissonStructure& pi, const std::vector<std::string>& samples) {
  std::vector<PointEval> pts;
  if (samples.empty()) {
    PointEval origin;
    origin.x.assign(pi.n, 0);
    pts.push_back(origin);
  } else {
    for (const auto& s : samples) pts.push_back(parse_point(s, pi.n));
  }
  Json r;
  r["points"] = Json::array();
  for (const auto& p : pts) {
    Json e;
    e["point"] = point_json(p);
    e["rank"] = rank_at(pi, p);
    r["points"].push_back(e);
  }
  return r;
}

std::vector<PointEval> default_grid4() {
  std::vector<Rational> axis = {Rational(-1), Rational(0), Rational(1)};
  std::vector<PointEval> pts;
  for (const auto& a : axis)
    for (const auto& b : axis)
      for (const auto& c : axis)
        for (const auto& d : axis) pts.push_back(PointEval{{a, b, c, d}});
  return pts;
}

Json op_report(const PoissonStructure& pi, const ReportConfig& cfg) {
  Json r;
  auto jac = jacobi_check(pi);
  r["jacobi"] = jac.ok;
  if (!jac.ok) {
    r["witness"] = print_multivector(jac.witness, pi.coords);
    return r;
  }
  Multivector y = modular_field(pi, pi.volume);
  r["modular_field"] = print_multivector(y, pi.coords);
  r["modular_is_cocycle"] = schouten(pi.bivector, y).is_zero();
  r["casimirs"] = op_casimirs(pi, cfg.max_degree)["by_degree"];
  auto witness = exactness_witness(pi, std::max<long>(1, cfg.max_degree));
  r["exactness_witness"] =
      witness ? Json(print_multivector(*witness, pi.coords)) : Json(nullptr);
  if (pi.n == 4) {
    std::vector<PointEval> pts;
    if (cfg.samples.empty())
      pts = default_grid4();
    else
      for (const auto& s : cfg.samples) pts.push_back(parse_point(s, pi.n));
    auto npr = near_positivity_sample(pi, pts);
    Json np;
    np["note"] =
        "raw wedge-square coefficient, no combinatorial normalization removed; "
        "the sign verdict does not depend on that convention";
    np["points_checked"] = npr.samples.size();
    np["all_nonnegative"] = npr.all_nonnegative;
    if (npr.counterexample) np["counterexample"] = point_json(*npr.counterexample);
    Json values = Json::array();
    for (const auto& s : npr.samples) {
      Json e;
      e["point"] = point_json(s.point);
      e["pi2_coefficient"] = to_string(s.value);
      values.push_back(e);
    }
    if (values.size() <= 16) np["values"] = values;
    r["near_positivity"] = np;
  }
  r["rank_samples"] = op_rank(pi, cfg.samples)["points"];
  return r;
}

Json op_assemble(const ReportConfig& cfg) {
  if (cfg.betti) {
    if (cfg.circles < 0) throw UsageError("near-positive assembly needs --circles");
    BettiVector b((*cfg.betti)[0], (*cfg.betti)[1], (*cfg.betti)[2], (*cfg.betti)[3],
                  (*cfg.betti)[4]);
    auto t = near_positive_global(b, cfg.circles);
    Json r;
    r["kind"] = "near-positive-global";
    r["betti"] = t.betti.b;
    r["circles"] = t.circles;
    r["symplectic_case"] = t.symplectic_case;
    Json dims;
    for (int k = 0; k <= 4; ++k) dims["H" + std::to_string(k)] = t.dims[k];
    r["dims"] = dims;
    r["generators"] = t.generator_notes;
    return r;
  }
  if (cfg.circles < 0 && cfg.points < 0)
    throw UsageError("assemble needs either --betti + --circles or --circles/--points");
  long circles = std::max<long>(0, cfg.circles);
  long points = std::max<long>(0, cfg.points);
  auto t = blf_global_formal(circles, points, cfg.max_degree);
  Json r;
  r["kind"] = "blf-formal";
  r["circles"] = t.circles;
  r["points"] = t.points;
  r["i_max"] = t.i_max;
  Json byk;
  for (int k = 0; k <= 4; ++k) {
    Json arr = Json::array();
    for (const auto& e : t.by_k[k]) {
      Json je;
      je["i"] = e.i;
      je["circles"] = e.circle_part;
      je["points"] = e.point_part;
      je["total"] = e.total;
      arr.push_back(je);
    }
    byk["H" + std::to_string(k)] = arr;
  }
  r["slices"] = byk;
  r["generators"] = t.generator_notes;
  return r;
}

Json op_models() {
  Json r;
  r["models"] = Json::array();
  for (const auto& name : model_names()) {
    PoissonStructure pi = model(name, model_default_parameter(name));
    Json e;
    e["name"] = name;
    e["coords"] = pi.coords;
    e["bivector"] = print_multivector(pi.bivector, pi.coords);
    int dp = model_default_parameter(name);
    if (dp) {
      e["default_parameter"] = dp;
      if (name == "symplectic-std")
        e["parameter"] = "even ambient dimension";
      else
        e["parameter"] = "half-dimension n >= 2";
    }
    if (name == "blf-circle") e["options"] = "--factor <polynomial in t,x1,x2,x3>";
    r["models"].push_back(e);
  }
  return r;
}

// ---- rendering ---------------------------------------------------------

void markdown_value(std::ostream& os, const Json& v, int indent);

void markdown_table_of_objects(std::ostream& os, const Json& arr) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : arr[0].items()) keys.push_back(k);
  os << "|";
  for (const auto& k : keys) os << " " << k << " |";
  os << "\n|";
  for (size_t i = 0; i < keys.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : arr) {
    os << "|";
    for (const auto& k : keys) {
      os << " ";
      if (row.contains(k)) {
        const Json& cell = row[k];
        if (cell.is_string())
          os << cell.get<std::string>();
        else
          os << cell.dump();
      }
      os << " |";
    }
    os << "\n";
  }
}

bool is_object_table(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& e : v)
    if (!e.is_object()) return false;
  for (const auto& [k, sub] : v[0].items())
    if (sub.is_object() || (sub.is_array() && !sub.empty() && sub[0].is_object())) return false;
  return true;
}

void markdown_value(std::ostream& os, const Json& v, int indent) {
  std::string pad(indent * 2, ' ');
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items()) {
      if (sub.is_object() || sub.is_array()) {
        os << pad << "- **" << k << "**:";
        if (is_object_table(sub)) {
          os << "\n\n";
          markdown_table_of_objects(os, sub);
          os << "\n";
        } else {
          os << "\n";
          markdown_value(os, sub, indent + 1);
        }
      } else {
        os << pad << "- **" << k << "**: " << (sub.is_string() ? sub.get<std::string>() : sub.dump())
           << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_object() || e.is_array()) {
        markdown_value(os, e, indent + 1);
      } else {
        os << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
      }
    }
  } else {
    os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::ostringstream os;
  std::string op = doc["operation"].get<std::string>();
  os << "# poico " << (op == "report" ? "structure" : op) << " report\n\n";
  if (!doc["structure"].is_null()) {
    os << "## Structure\n\n";
    markdown_value(os, doc["structure"], 0);
    os << "\n";
  }
  os << "## Parameters\n\n";
  markdown_value(os, doc["parameters"], 0);
  os << "\n## Results\n\n";
  markdown_value(os, doc["results"], 0);
  os << "\nengine version: " << doc["engine_version"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace

int run(const ReportConfig& cfg, std::ostream& out, std::ostream& err) {
  Json doc;
  doc["structure"] = nullptr;
  doc["operation"] = cfg.operation;
  Json params;
  params["max_degree"] = cfg.max_degree;
  params["format"] = cfg.format;
  doc["parameters"] = params;
  doc["results"] = Json::object();
  doc["engine_version"] = kEngineVersion;

  int exit_code = 0;
  try {
    if (cfg.format != "json" && cfg.format != "markdown")
      throw UsageError("unknown format: " + cfg.format);
    const std::string& op = cfg.operation;
    if (op == "models") {
      doc["results"] = op_models();
    } else if (op == "assemble") {
      if (cfg.betti) doc["parameters"]["betti"] = *cfg.betti;
      if (cfg.circles >= 0) doc["parameters"]["circles"] = cfg.circles;
      if (cfg.points >= 0) doc["parameters"]["points"] = cfg.points;
      doc["results"] = op_assemble(cfg);
    } else if (op == "validate" || op == "casimirs" || op == "cohomology" || op == "modular" ||
               op == "rank" || op == "report") {
      PoissonStructure pi = load_structure(cfg);
      doc["structure"] = structure_json(pi);
      if (op == "validate") {
        bool ok = false;
        doc["results"] = op_validate(pi, ok);
        if (!ok) exit_code = 1;
      } else if (op == "casimirs") {
        require_poisson(pi);
        doc["results"] = op_casimirs(pi, cfg.max_degree);
      } else if (op == "cohomology") {
        require_poisson(pi);
        doc["parameters"]["k_min"] = cfg.k_min;
        doc["parameters"]["k_max"] = cfg.k_max < 0 ? pi.n : cfg.k_max;
        doc["parameters"]["representatives"] = cfg.with_representatives;
        if (!cfg.fit_degrees.empty()) doc["parameters"]["fit_degrees"] = cfg.fit_degrees;
        doc["results"] = op_cohomology(pi, cfg.k_min, cfg.k_max, cfg.max_degree,
                                       cfg.with_representatives, cfg.fit_degrees);
      } else if (op == "modular") {
        require_poisson(pi);
        doc["results"] = op_modular(pi);
      } else if (op == "rank") {
        doc["results"] = op_rank(pi, cfg.samples);
      } else {
        require_poisson(pi);
        doc["results"] = op_report(pi, cfg);
      }
    } else {
      throw UsageError("unknown operation: " + (op.empty() ? std::string("(none)") : op));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    if (e.detail.contains("witness"))
      err << "witness: " << e.detail["witness"].get<std::string>() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text = render(doc, cfg.format);
  if (!cfg.output_path.empty()) {
    std::ofstream of(cfg.output_path);
    if (!of) {
      err << "cannot write output file: " << cfg.output_path << "\n";
      return 2;
    }
    of << text;
  } else {
    out << text;
  }
  return exit_code;
}

}  // namespace poico
