#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "poico/assembly.hpp"
#include "poico/dsl.hpp"
#include "poico/models.hpp"
#include "poico/report.hpp"
#include "poico/version.hpp"

namespace py = pybind11;
using namespace poico;

namespace {

PointEval point_from_strings(const PoissonStructure& pi, const std::vector<std::string>& coords) {
  if (static_cast<int>(coords.size()) != pi.n)
    throw std::invalid_argument("point dimension mismatch");
  PointEval p;
  for (const auto& s : coords) p.x.push_back(rational_from_string(s));
  return p;
}

py::dict table_to_dict(const PoissonStructure& pi, const CohomologyReport& rep) {
  py::dict out;
  py::dict by_k;
  for (int k = rep.k_min; k <= rep.k_max; ++k) by_k[py::int_(k)] = rep.dims_for_k(k);
  out["dims"] = by_k;
  py::list slices;
  for (const auto& s : rep.slices) {
    py::dict e;
    e["k"] = s.k;
    e["i"] = s.i;
    e["dim"] = s.dim;
    e["nullity"] = s.nullity;
    e["prev_rank"] = s.prev_rank;
    if (s.reps_computed) {
      py::list reps;
      for (const auto& m : s.representatives) reps.append(print_multivector(m, pi.coords));
      e["representatives"] = reps;
    }
    slices.append(e);
  }
  out["slices"] = slices;
  out["degree_shift"] = rep.degree_shift;
  return out;
}

}  // namespace

PYBIND11_MODULE(poico, m) {
  m.doc() = "exact Poisson cohomology engine for polynomial Poisson structures";
  m.attr("__version__") = kEngineVersion;

  py::class_<PoissonStructure>(m, "PoissonStructure")
      .def_property_readonly("name", [](const PoissonStructure& p) { return p.name; })
      .def_property_readonly("coords", [](const PoissonStructure& p) { return p.coords; })
      .def_property_readonly("dim", [](const PoissonStructure& p) { return p.n; })
      .def("__repr__",
           [](const PoissonStructure& p) {
             return "<PoissonStructure " + p.name + " on " + std::to_string(p.n) +
                    " coordinates>";
           })
      .def("bivector_text",
           [](const PoissonStructure& p) { return print_multivector(p.bivector, p.coords); })
      .def("to_text", [](const PoissonStructure& p) { return print_structure(to_doc(p)); })
      .def(
          "jacobi",
          [](PoissonStructure& p) {
            auto jac = jacobi_check(p);
            return py::make_tuple(jac.ok,
                                  jac.ok ? std::string() : print_multivector(jac.witness, p.coords));
          },
          "Jacobi check; returns (ok, witness_text)")
      .def("anchor_dx",
           [](const PoissonStructure& p, int i) {
             return print_multivector(anchor_dx(p, i), p.coords);
           })
      .def("hamiltonian",
           [](const PoissonStructure& p, const std::string& f) {
             return print_multivector(hamiltonian(p, parse_polynomial(f, p.coords)), p.coords);
           })
      .def("casimirs",
           [](const PoissonStructure& p, long degree) {
             std::vector<std::string> out;
             for (const auto& f : casimir_basis(p, degree)) out.push_back(f.str(p.coords));
             return out;
           })
      .def("modular_field",
           [](const PoissonStructure& p) {
             return print_multivector(modular_field(p, p.volume), p.coords);
           })
      .def("wedge_power",
           [](const PoissonStructure& p, int m) {
             return print_multivector(wedge_power(p, m), p.coords);
           })
      .def("rank_at",
           [](const PoissonStructure& p, const std::vector<std::string>& pt) {
             return rank_at(p, point_from_strings(p, pt));
           })
      .def("exactness_witness",
           [](const PoissonStructure& p, long max_degree) -> py::object {
             auto w = exactness_witness(p, max_degree);
             if (!w) return py::none();
             return py::str(print_multivector(*w, p.coords));
           })
      .def(
          "anchor_invert",
          [](const PoissonStructure& p, const std::vector<std::string>& field_components) {
            if (static_cast<int>(field_components.size()) != p.n)
              throw std::invalid_argument("field dimension mismatch");
            Multivector y(p.n, 1);
            for (int i = 0; i < p.n; ++i) {
              Polynomial c = parse_polynomial(field_components[i], p.coords);
              if (!c.is_zero()) y.add_term(IndexMask(1) << i, c);
            }
            auto inv = anchor_invert(p, y);
            std::vector<std::string> nums;
            for (const auto& nu : inv.numerators) nums.push_back(nu.str(p.coords));
            return py::make_tuple(nums, inv.denominator.str(p.coords));
          },
          "exact preimage of a vector field under the anchor map; returns "
          "(numerators, shared denominator)")
      .def(
          "cohomology",
          [](const PoissonStructure& p, int k_min, int k_max, long i_max, bool reps,
             const std::vector<long>& fit) {
            CohomologyReport rep =
                cohomology_table(p, k_min, k_max < 0 ? p.n : k_max, i_max, reps);
            if (!fit.empty()) attach_free_module_fits(rep, fit);
            py::dict out = table_to_dict(p, rep);
            if (!rep.fits_by_k.empty()) {
              py::dict fits;
              for (const auto& [k, f] : rep.fits_by_k) {
                py::dict e;
                e["rank"] = f.rank;
                e["generator_degrees"] = f.generator_degrees;
                e["exact"] = f.exact;
                e["failed"] = f.failed;
                fits[py::int_(k)] = e;
              }
              out["free_module_fits"] = fits;
            }
            return out;
          },
          py::arg("k_min") = 0, py::arg("k_max") = -1, py::arg("i_max") = 4,
          py::arg("representatives") = false, py::arg("fit") = std::vector<long>{});

  m.def("models", &model_names, "catalog model names");
  m.def(
      "model",
      [](const std::string& name, int n, const std::string& factor) {
        ModelSpec spec;
        spec.name = name;
        spec.n = n;
        if (!factor.empty()) spec.conformal_factor = parse_polynomial(factor, {"t", "x1", "x2", "x3"});
        return model(spec);
      },
      py::arg("name"), py::arg("n") = 0, py::arg("factor") = std::string());
  m.def("parse", [](const std::string& text) { return to_poisson(parse_structure(text)); });
  m.def(
      "jacobian_bivector",
      [](const std::vector<std::string>& coords, const std::string& f, const std::string& g) {
        return jacobian_bivector(coords, parse_polynomial(f, coords), parse_polynomial(g, coords));
      },
      py::arg("coords"), py::arg("f"), py::arg("g"));
  m.def(
      "near_positive_global",
      [](const std::vector<long>& betti, long circles) {
        if (betti.size() != 5) throw std::invalid_argument("need five Betti numbers");
        auto t = near_positive_global(BettiVector(betti[0], betti[1], betti[2], betti[3], betti[4]),
                                      circles);
        py::dict out;
        out["dims"] = t.dims;
        out["symplectic_case"] = t.symplectic_case;
        out["generators"] = t.generator_notes;
        return out;
      },
      py::arg("betti"), py::arg("circles"));
  m.def(
      "blf_global_formal",
      [](long circles, long points, long i_max) {
        auto t = blf_global_formal(circles, points, i_max);
        py::dict out;
        for (int k = 0; k <= 4; ++k) {
          py::list slices;
          for (const auto& e : t.by_k[k]) {
            py::dict d;
            d["i"] = e.i;
            d["circles"] = e.circle_part;
            d["points"] = e.point_part;
            d["total"] = e.total;
            slices.append(d);
          }
          out[py::str("H" + std::to_string(k))] = slices;
        }
        return out;
      },
      py::arg("circles"), py::arg("points"), py::arg("i_max"));
  m.def(
      "run_report",
      [](const std::string& operation, const std::string& model_name, const std::string& input_text,
         long max_degree, const std::string& format) {
        ReportConfig cfg;
        cfg.operation = operation;
        cfg.model_name = model_name;
        cfg.input_text = input_text;
        cfg.max_degree = max_degree;
        cfg.format = format;
        std::ostringstream out, err;
        int code = run(cfg, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("operation"), py::arg("model") = std::string(), py::arg("input_text") = std::string(),
      py::arg("max_degree") = 4, py::arg("format") = std::string("json"));
}
