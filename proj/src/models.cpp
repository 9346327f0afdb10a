#include "poico/models.hpp"

#include <stdexcept>

namespace poico {

namespace {

Polynomial var(int n, int i) { return Polynomial::variable(n, i); }

Multivector pair_term(int n, int a, int b, const Polynomial& coeff) {
  Multivector m(n, 2);
  m.add_term((IndexMask(1) << a) | (IndexMask(1) << b), coeff);
  return m;
}

PoissonStructure finish(PoissonStructure pi) {
  auto jac = jacobi_check(pi);
  if (!jac.ok) throw std::logic_error("catalog model failed the Jacobi check");
  return pi;
}

PoissonStructure near_positive4() {
  int n = 4;
  Multivector biv(n, 2);
  Polynomial x1 = var(n, 1), x3 = var(n, 3);
  biv = biv + pair_term(n, 0, 1, x1) + pair_term(n, 2, 3, x1) + pair_term(n, 0, 3, x3) +
        pair_term(n, 1, 2, x3);
  return finish(PoissonStructure("near-positive", {"x0", "x1", "x2", "x3"}, biv));
}

PoissonStructure near_symplectic_2n(int half) {
  if (half < 2) throw std::invalid_argument("near-symplectic-2n needs n >= 2");
  int n = 2 * half;
  std::vector<std::string> names = {"x0", "x1", "x2", "x3"};
  for (int i = 1; i <= half - 2; ++i) {
    names.push_back("p" + std::to_string(i));
    names.push_back("q" + std::to_string(i));
  }
  Multivector biv(n, 2);
  Polynomial x1 = var(n, 1), x3 = var(n, 3);
  biv = biv + pair_term(n, 0, 1, x1) + pair_term(n, 2, 3, x1) + pair_term(n, 0, 3, x3) +
        pair_term(n, 1, 2, x3);
  for (int i = 0; i < half - 2; ++i) {
    int p = 4 + 2 * i, q = 5 + 2 * i;
    biv = biv + pair_term(n, p, q, Polynomial::constant(n, 1));
  }
  return finish(PoissonStructure("near-symplectic-2n", names, biv));
}

PoissonStructure log_2n(int half) {
  if (half < 2) throw std::invalid_argument("log-2n needs n >= 2");
  int n = 2 * half - 2;  // total space of the line bundle over Z
  std::vector<std::string> names = {"x0", "x1"};
  for (int i = 1; i <= half - 2; ++i) {
    names.push_back("p" + std::to_string(i));
    names.push_back("q" + std::to_string(i));
  }
  Multivector biv(n, 2);
  biv = biv + pair_term(n, 0, 1, var(n, 1));
  for (int i = 0; i < half - 2; ++i) {
    int p = 2 + 2 * i, q = 3 + 2 * i;
    biv = biv + pair_term(n, p, q, Polynomial::constant(n, 1));
  }
  return finish(PoissonStructure("log-2n", names, biv));
}

PoissonStructure blf_circle(const std::optional<Polynomial>& factor) {
  int n = 4;
  Multivector biv(n, 2);
  biv = biv + pair_term(n, 2, 3, var(n, 1)) + pair_term(n, 1, 3, var(n, 2)) +
        pair_term(n, 1, 2, -var(n, 3));
  PoissonStructure pi("blf-circle", {"t", "x1", "x2", "x3"}, biv);
  if (factor) {
    if (factor->nvars() != 4) throw std::invalid_argument("conformal factor needs 4 coordinates");
    pi.bivector = pi.bivector.scaled_by(*factor);
  }
  return finish(std::move(pi));
}

PoissonStructure blf_point() {
  int n = 4;
  // coordinates x1..x4 of the Lefschetz chart
  Polynomial x1 = var(n, 0), x2 = var(n, 1), x3 = var(n, 2), x4 = var(n, 3);
  Multivector biv(n, 2);
  biv = biv + pair_term(n, 0, 1, x3 * x3 + x4 * x4);
  biv = biv + pair_term(n, 0, 2, -(x1 * x4) + x2 * x3);
  biv = biv + pair_term(n, 0, 3, -(x2 * x4) - x1 * x3);
  biv = biv + pair_term(n, 1, 2, x1 * x3 + x2 * x4);
  biv = biv + pair_term(n, 1, 3, -(x1 * x4) + x2 * x3);
  biv = biv + pair_term(n, 2, 3, x1 * x1 + x2 * x2);
  return finish(PoissonStructure("blf-point", {"x1", "x2", "x3", "x4"}, biv));
}

PoissonStructure sl2_dual() {
  int n = 3;
  Multivector biv(n, 2);
  biv = biv + pair_term(n, 1, 2, var(n, 0)) + pair_term(n, 0, 2, var(n, 1)) +
        pair_term(n, 0, 1, -var(n, 2));
  return finish(PoissonStructure("sl2-dual", {"x1", "x2", "x3"}, biv));
}

PoissonStructure symplectic_std(int dim) {
  if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("symplectic-std needs an even dimension");
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i));
  Multivector biv(dim, 2);
  for (int i = 0; i < dim / 2; ++i)
    biv = biv + pair_term(dim, 2 * i, 2 * i + 1, Polynomial::constant(dim, 1));
  return finish(PoissonStructure("symplectic-std", names, biv));
}

PoissonStructure phase_space_example() {
  int n = 4;  // coordinates (q1, p1, q2, p2)
  Polynomial p1 = var(n, 1), p2 = var(n, 3);
  Multivector biv(n, 2);
  biv = biv + pair_term(n, 0, 1, p1) + pair_term(n, 2, 3, p1) + pair_term(n, 0, 3, p2) +
        pair_term(n, 1, 2, p2);
  return finish(PoissonStructure("phase-space-example", {"q1", "p1", "q2", "p2"}, biv));
}

}  // namespace

std::vector<std::string> model_names() {
  return {"near-positive", "near-symplectic-2n", "log-2n",         "blf-circle",
          "blf-point",     "sl2-dual",           "symplectic-std", "phase-space-example"};
}

bool is_model_name(const std::string& name) {
  for (const auto& m : model_names())
    if (m == name) return true;
  return false;
}

int model_default_parameter(const std::string& name) {
  if (name == "near-symplectic-2n" || name == "log-2n") return 3;
  if (name == "symplectic-std") return 4;
  return 0;
}

PoissonStructure model(const ModelSpec& spec) {
  const std::string& name = spec.name;
  int n = spec.n > 0 ? spec.n : model_default_parameter(name);
  if (spec.conformal_factor && name != "blf-circle")
    throw std::invalid_argument("conformal factor only applies to blf-circle");
  if (name == "near-positive") return near_positive4();
  if (name == "near-symplectic-2n") return near_symplectic_2n(n);
  if (name == "log-2n") return log_2n(n);
  if (name == "blf-circle") return blf_circle(spec.conformal_factor);
  if (name == "blf-point") return blf_point();
  if (name == "sl2-dual") return sl2_dual();
  if (name == "symplectic-std") return symplectic_std(n);
  if (name == "phase-space-example") return phase_space_example();
  throw std::invalid_argument("unknown model: " + name);
}

PoissonStructure model(const std::string& name, int n) {
  ModelSpec spec;
  spec.name = name;
  spec.n = n;
  return model(spec);
}

AffinePointMap involution_map() {
  AffinePointMap iota = AffinePointMap::identity(4);
  iota.linear[1][1] = -1;
  iota.linear[3][3] = -1;
  iota.formal_shift[0]["pi"] = 1;  // half-period circle shift, kept symbolic
  return iota;
}

}  // namespace poico
