#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "poico/multivector.hpp"

using namespace poico;

namespace {

IndexMask mk(std::initializer_list<int> idx) {
  IndexMask m = 0;
  for (int i : idx) m |= IndexMask(1) << i;
  return m;
}

Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, max_deg);
  Polynomial p(nvars);
  for (int t = 0; t < 3; ++t) {
    Monomial m(nvars);
    int budget = max_deg;
    for (int i = 0; i < nvars; ++i) {
      int e = expo(rng) % (budget + 1);
      m.e[i] = e;
      budget -= e;
    }
    p.add_term(m, coeff(rng));
  }
  return p;
}

Multivector random_mv(std::mt19937& rng, int nvars, int degree, int max_deg = 2) {
  Multivector a(nvars, degree);
  for (IndexMask m : multi_index_masks(nvars, degree)) {
    if (rng() % 2 == 0) continue;
    a.add_term(m, random_poly(rng, nvars, max_deg));
  }
  return a;
}

// brute-force parity of the permutation sorting the concatenated index list
int brute_merge_sign(std::vector<int> idx) {
  int inv = 0;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("multi-index layout") {
  auto masks = multi_index_masks(4, 2);
  REQUIRE(masks.size() == 6);
  // lexicographic on increasing tuples: 01 02 03 12 13 23
  CHECK(masks[0] == mk({0, 1}));
  CHECK(masks[1] == mk({0, 2}));
  CHECK(masks[2] == mk({0, 3}));
  CHECK(masks[3] == mk({1, 2}));
  CHECK(masks[4] == mk({1, 3}));
  CHECK(masks[5] == mk({2, 3}));
}

TEST_CASE("merge sign against brute-force inversion count") {
  std::mt19937 rng(11);
  for (int n : {3, 4, 5, 6}) {
    for (int trial = 0; trial < 200; ++trial) {
      IndexMask a = rng() & ((1u << n) - 1);
      IndexMask b = rng() & ((1u << n) - 1);
      std::vector<int> joined = mask_to_indices(a);
      for (int i : mask_to_indices(b)) joined.push_back(i);
      CHECK(merge_sign(a, b) == brute_merge_sign(joined));
    }
  }
}

TEST_CASE("wedge examples") {
  int n = 4;
  auto b = [&](std::initializer_list<int> idx) { return Multivector::basis(n, mk(idx)); };
  CHECK(wedge(b({0, 1}), b({2, 3})) == b({0, 1, 2, 3}));
  // parity of (0,3,1,2) is even
  CHECK(wedge(b({0, 3}), b({1, 2})) == b({0, 1, 2, 3}));
  CHECK(wedge(b({0, 1}), b({1, 2})).is_zero());
  // degree overflow: zero multivector of that degree, not an error
  Multivector over = wedge(b({0, 1, 2}), b({1, 2, 3}));
  CHECK(over.is_zero());
  CHECK(over.degree() == 6);
}

TEST_CASE("wedge is associative and graded-commutative") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    int da = 1 + rng() % 2, db = 1 + rng() % 2, dc = 1 + rng() % 2;
    Multivector a = random_mv(rng, 4, da), b = random_mv(rng, 4, db), c = random_mv(rng, 4, dc);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    Multivector ab = wedge(a, b), ba = wedge(b, a);
    if ((da * db) % 2 == 1) ba = -ba;
    CHECK(ab == ba);
  }
}

TEST_CASE("schouten on vector fields and functions") {
  int n = 4;
  Multivector d1 = Multivector::basis(n, mk({1}));
  Multivector x1 = Multivector::from_polynomial(Polynomial::variable(n, 1));
  Multivector r = schouten(d1, x1);
  REQUIRE(r.degree() == 0);
  CHECK(r.component(0) == Polynomial::constant(n, 1));

  // Lie bracket of vector fields
  Multivector x = Multivector(n, 1);
  x.add_term(mk({0}), Polynomial::variable(n, 1));  // x1 d0
  Multivector y = Multivector(n, 1);
  y.add_term(mk({1}), Polynomial::variable(n, 0));  // x0 d1
  Multivector lie = schouten(x, y);
  // [x1 d0, x0 d1] = x1 d1 - x0 d0
  Multivector expect(n, 1);
  expect.add_term(mk({1}), Polynomial::variable(n, 1));
  expect.add_term(mk({0}), -Polynomial::variable(n, 0));
  CHECK(lie == expect);
}

TEST_CASE("schouten graded antisymmetry") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    int a = 1 + rng() % 3, b = 1 + rng() % 3;
    Multivector A = random_mv(rng, 4, a), B = random_mv(rng, 4, b);
    Multivector lhs = schouten(A, B);
    Multivector rhs = schouten(B, A);
    if (((a - 1) * (b - 1)) % 2 == 0) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("schouten graded Leibniz") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int a = 1 + rng() % 2, b = rng() % 2, c = 1 + rng() % 2;
    Multivector A = random_mv(rng, 4, a), B = random_mv(rng, 4, b), C = random_mv(rng, 4, c);
    // [A, B ^ C] = [A,B] ^ C + (-1)^{(a-1) b} B ^ [A,C]
    Multivector lhs = schouten(A, wedge(B, C));
    Multivector rhs = wedge(schouten(A, B), C);
    Multivector second = wedge(B, schouten(A, C));
    if (((a - 1) * b) % 2 == 1) second = -second;
    rhs = rhs + second;
    CHECK(lhs == rhs);
  }
}

namespace {

// Axiomatic oracle for the bracket: reduce through graded Leibniz
//   [A, C ^ D] = [A, C] ^ D + (-1)^{(a-1) deg C} C ^ [A, D]
// and graded antisymmetry to the base brackets of functions and vector
// fields. Independent of the production implementation; the axioms plus
// the base cases determine the bracket uniquely.
Multivector oracle_bracket(const Multivector& a, const Multivector& b) {
  const int n = a.nvars();
  const int da = a.degree(), db = b.degree();
  int deg = da + db - 1;
  Multivector out(n, std::max(deg, 0));
  if (a.is_zero() || b.is_zero()) return out;

  if (da <= 1 && db <= 1) {
    if (da == 0 && db == 0) return out;
    if (da == 1 && db == 0) {  // X(g)
      Polynomial acc(n);
      for (const auto& [m, p] : a.components())
        acc = acc + p * b.component(0).partial(mask_to_indices(m)[0]);
      out.add_term(0, acc);
      return out;
    }
    if (da == 0 && db == 1) {  // -Y(f)
      Polynomial acc(n);
      for (const auto& [m, p] : b.components())
        acc = acc - p * a.component(0).partial(mask_to_indices(m)[0]);
      out.add_term(0, acc);
      return out;
    }
    for (const auto& [ma, pa] : a.components()) {  // Lie bracket
      int i = mask_to_indices(ma)[0];
      for (const auto& [mb, pb] : b.components()) {
        int j = mask_to_indices(mb)[0];
        out.add_term(mb, pa * pb.partial(i));
        out.add_term(ma, -(pb * pa.partial(j)));
      }
    }
    return out;
  }

  if (db >= 2) {
    // split each term g xi_J = (g d_{j1}) ^ xi_rest
    for (const auto& [mb, pb] : b.components()) {
      auto idx = mask_to_indices(mb);
      Multivector c(n, 1);
      c.add_term(IndexMask(1) << idx[0], pb);
      Multivector d = Multivector::basis(n, mb & ~(IndexMask(1) << idx[0]));
      Multivector first = wedge(oracle_bracket(a, c), d);
      Multivector second = wedge(c, oracle_bracket(a, d));
      if ((da - 1) % 2 != 0) second = -second;
      out = out + first + second;
    }
    return out;
  }

  // da >= 2, db <= 1: swap through graded antisymmetry
  Multivector swapped = oracle_bracket(b, a);
  if (((da - 1) * (db - 1)) % 2 == 0) swapped = -swapped;
  return swapped;
}

}  // namespace

TEST_CASE("schouten agrees with the axiomatic oracle") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int da = rng() % 4, db = rng() % 4;
    Multivector a = da == 0 ? Multivector::from_polynomial(random_poly(rng, 3, 2))
                            : random_mv(rng, 3, da, 2);
    Multivector b = db == 0 ? Multivector::from_polynomial(random_poly(rng, 3, 2))
                            : random_mv(rng, 3, db, 2);
    CHECK(schouten(a, b) == oracle_bracket(a, b));
  }
  // and on four coordinates with quadratic coefficients
  for (int trial = 0; trial < 20; ++trial) {
    int da = 1 + rng() % 3, db = 1 + rng() % 3;
    Multivector a = random_mv(rng, 4, da, 2), b = random_mv(rng, 4, db, 2);
    CHECK(schouten(a, b) == oracle_bracket(a, b));
  }
}

TEST_CASE("schouten graded Jacobi") {
  std::mt19937 rng(43);
  int checked = 0;
  while (checked < 15) {
    int a = 1 + rng() % 2, b = 1 + rng() % 2, c = 1 + rng() % 2;
    if (a + b + c > 6) continue;
    ++checked;
    Multivector A = random_mv(rng, 3, a, 2), B = random_mv(rng, 3, b, 2),
                C = random_mv(rng, 3, c, 2);
    // (-1)^{(a-1)(c-1)} [A,[B,C]] + cyclic = 0
    auto sgn = [](int p, int q) { return ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1; };
    Multivector total = schouten(A, schouten(B, C)) * Rational(sgn(a, c)) +
                        schouten(B, schouten(C, A)) * Rational(sgn(b, a)) +
                        schouten(C, schouten(A, B)) * Rational(sgn(c, b));
    CHECK(total.is_zero());
  }
}

TEST_CASE("divergence") {
  int n = 4;
  Multivector e(n, 1);
  for (int i = 0; i < n; ++i) e.add_term(mk({i}), Polynomial::variable(n, i));
  CHECK(divergence(e) == Polynomial::constant(n, 4));

  Multivector y(n, 1);
  y.add_term(mk({1}), -Polynomial::variable(n, 1));
  y.add_term(mk({3}), -Polynomial::variable(n, 3));
  CHECK(divergence(y) == Polynomial::constant(n, -2));

  Multivector h(n, 1);
  h.add_term(mk({2}), Polynomial::variable(n, 3));
  h.add_term(mk({3}), -Polynomial::variable(n, 2));
  CHECK(divergence(h).is_zero());

  VolumeForm scaled;
  scaled.scale = Rational(7, 2);
  CHECK(divergence(e, scaled) == divergence(e));
  CHECK_THROWS_AS(divergence(Multivector::basis(n, mk({0, 1}))), std::invalid_argument);
}

TEST_CASE("pushforward basics") {
  int n = 4;
  std::mt19937 rng(59);
  Multivector a = random_mv(rng, n, 2);
  CHECK(pushforward(AffinePointMap::identity(n), a) == a);

  // x -> 2x on a multivector with linear coefficients scales it by 2^(k-1)
  // per derivative slot: coefficients compose with x/2, basis gets 2^k
  auto scale2 = AffinePointMap::identity(n);
  for (int i = 0; i < n; ++i) scale2.linear[i][i] = 2;
  Multivector gamma(n, 2);
  gamma.add_term(mk({2, 3}), Polynomial::variable(n, 1));
  gamma.add_term(mk({1, 3}), Polynomial::variable(n, 2));
  gamma.add_term(mk({1, 2}), -Polynomial::variable(n, 3));
  CHECK(pushforward(scale2, gamma) == gamma * Rational(2));
}

TEST_CASE("pushforward functoriality and bracket naturality") {
  std::mt19937 rng(61);
  int n = 3;
  for (int trial = 0; trial < 10; ++trial) {
    AffinePointMap phi = AffinePointMap::identity(n), psi = AffinePointMap::identity(n);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        phi.linear[i][j] += make_rational(small(rng), 3);
        psi.linear[i][j] += make_rational(small(rng), 2);
      }
    for (int i = 0; i < n; ++i) {
      phi.translation[i] = small(rng);
      psi.translation[i] = make_rational(small(rng), 2);
    }
    bool invertible = true;
    try {
      invert_matrix(phi.linear);
      invert_matrix(psi.linear);
    } catch (const std::domain_error&) {
      invertible = false;
    }
    if (!invertible) continue;

    Multivector a = random_mv(rng, n, 1 + rng() % 2, 1);
    Multivector b = random_mv(rng, n, 1 + rng() % 2, 1);
    CHECK(pushforward(phi.compose(psi), a) == pushforward(phi, pushforward(psi, a)));
    CHECK(schouten(pushforward(phi, a), pushforward(phi, b)) ==
          pushforward(phi, schouten(a, b)));
  }
}

TEST_CASE("formal shifts") {
  AffinePointMap iota = AffinePointMap::identity(4);
  iota.linear[1][1] = -1;
  iota.linear[3][3] = -1;
  iota.formal_shift[0]["pi"] = 1;
  CHECK(iota.has_formal_shift());

  auto sq = iota.compose(iota);
  CHECK(sq.is_pure_translation());
  CHECK(sq.formal_shift[0].at("pi") == 2);

  // coefficients free of x0 push forward fine
  Multivector ok(4, 1);
  ok.add_term(mk({1}), Polynomial::variable(4, 1));
  CHECK(pushforward(iota, ok) == ok);

  // an x0-dependent coefficient cannot cross the symbolic shift
  Multivector bad(4, 1);
  bad.add_term(mk({1}), Polynomial::variable(4, 0));
  CHECK_THROWS_AS(pushforward(iota, bad), std::domain_error);

  AffinePointMap singular = AffinePointMap::identity(2);
  singular.linear[1][1] = 0;
  CHECK_THROWS_AS(pushforward(singular, Multivector::basis(2, mk({0}))), std::domain_error);
}
