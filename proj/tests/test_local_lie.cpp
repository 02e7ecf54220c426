#include "oracles.hpp"
#include "vlie/local_lie.hpp"
#include "vlie/vla_check.hpp"

#include <doctest.h>

using namespace vlie;

TEST_CASE("Virasoro brackets match the closed form") {
  const FormulaSpec vir = virasoro();
  const BasisId w = *vir.omega, c = *vir.central;
  const LocalLieAlgebra lie(vir, c);
  for (int n = -5; n <= 5; ++n)
    for (int m = -5; m <= 5; ++m)
      CHECK(lie.bracket(LieGenerator{w, n + 1}, LieGenerator{w, m + 1}) == oracle::virasoro_bracket(n, m, w, c));
  CHECK(to_string(vir, lie.bracket(LieGenerator{w, 3}, LieGenerator{w, -1})) == "4*ω_1 + 1/2*c_-1");
}

TEST_CASE("the central quotient kills c_n for n != -1 and D-powers of c") {
  const FormulaSpec vir = virasoro();
  const BasisId c = *vir.central;
  const LocalLieAlgebra lie(vir, c);
  CHECK(lie.vanishes(LieGenerator{c, 0}));
  CHECK(!lie.vanishes(LieGenerator{c, -1}));
  CHECK(lie.generator(c, 2).is_zero());
  CHECK(lie.reduce_generator(basis_element(c, 1), 0).is_zero());

  const LocalLieAlgebra full(vir);
  CHECK(!full.vanishes(LieGenerator{c, 0}));
}

TEST_CASE("reduce_generator implements (Du)_n = -n u_{n-1}") {
  const FormulaSpec vir = virasoro();
  const BasisId w = *vir.omega;
  const LocalLieAlgebra lie(vir);
  for (int n = -4; n <= 4; ++n) {
    CHECK(lie.reduce_generator(basis_element(w, 1), n) == Rational(-n) * lie.generator(w, n - 1));
    CHECK(lie.reduce_generator(basis_element(w, 2), n) ==
          Rational(n) * Rational(n - 1) * lie.generator(w, n - 2));
  }
  const LieElement x = lie.generator(w, 3);
  CHECK(lie.derivation(x) == Rational(-3) * lie.generator(w, 2));
}

TEST_CASE("window checks pass for the presets") {
  const FormulaSpec vir = virasoro();
  CHECK(jacobi_window_verify(LocalLieAlgebra(vir, vir.central), 4).empty());
  const FormulaSpec ns = neveu_schwarz();
  CHECK(jacobi_window_verify(LocalLieAlgebra(ns, ns.central), 3).empty());
  const FormulaSpec sl2 = affine(sl2_data());
  CHECK(jacobi_window_verify(LocalLieAlgebra::for_verdict(sl2, injectivity_verdict(sl2)), 3).empty());
}

TEST_CASE("window checks catch a broken formula") {
  FormulaSpec vir = virasoro();
  vir.set_product(*vir.omega, 1, *vir.omega, basis_element(*vir.omega, 0, 3));
  CHECK(!jacobi_window_verify(LocalLieAlgebra(vir, vir.central), 2).empty());
}

TEST_CASE("Neveu-Schwarz odd brackets are symmetric") {
  const FormulaSpec ns = neveu_schwarz();
  const BasisId t = ns.lookup("τ");
  const LocalLieAlgebra lie(ns, ns.central);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m)
      CHECK(lie.bracket(LieGenerator{t, n}, LieGenerator{t, m}) == lie.bracket(LieGenerator{t, m}, LieGenerator{t, n}));
  // [G_r, G_s] = 2 L_{r+s} + (c/3)(r^2 - 1/4) delta with G_r = τ_{r+1/2}, L_n = ω_{n+1}
  const LieElement g = lie.bracket(LieGenerator{t, 2}, LieGenerator{t, -1});
  LieElement expect(LieGenerator{*ns.omega, 1}, 2);
  expect.add(LieGenerator{*ns.central, -1}, Rational(1, 3) * (Rational(9, 4) - Rational(1, 4)));
  CHECK(g == expect);
}

TEST_CASE("for_verdict refuses non-injective formulas") {
  const FormulaSpec spec = novikov(flipped_lambda_algebra({Rational(1), Rational(0)}));
  CHECK_THROWS_WITH_AS(LocalLieAlgebra::for_verdict(spec, injectivity_verdict(spec)),
                       doctest::Contains("verdict not injective"), Error);
}

TEST_CASE("triangular split and weights") {
  const FormulaSpec vir = virasoro();
  const LocalLieAlgebra lie(vir, vir.central);
  const BasisId w = *vir.omega;
  LieElement x = lie.generator(w, -2) + lie.generator(w, 0) + lie.generator(w, 3);
  const auto [minus, plus] = triangular_split(x);
  CHECK(minus == lie.generator(w, -2));
  CHECK(plus.size() == 2);
  CHECK(lie.weight(LieGenerator{w, -2}) == 3);
  CHECK(lie.weight(LieGenerator{w, 1}) == 0);
}

TEST_CASE("the bracket on U agrees with the bracket of u_{-1} and v_{-1}") {
  const FormulaSpec vir = virasoro();
  const LocalLieAlgebra lie(vir);
  const BasisId w = *vir.omega;
  CHECK(bracket_on_U(vir, basis_element(w), basis_element(w)) == basis_element(*vir.central, 4, Rational(-1, 48)));

  // D^k u in U is carried to (D^k u)_{-1} = k! u_{-1-k}
  const FormulaSpec ns = neveu_schwarz();
  const LocalLieAlgebra nlie(ns);
  for (BasisId u : ns.ids())
    for (BasisId v : ns.ids()) {
      const Element b = bracket_on_U(ns, basis_element(u), basis_element(v));
      LieElement image;
      for (const auto& [t, coeff] : b) image.add_scaled(nlie.reduce_generator(basis_element(t.id, t.dpow), -1), coeff);
      CHECK(image == nlie.bracket(LieGenerator{u, -1}, LieGenerator{v, -1}));
    }
}
