#include "oracles.hpp"
#include "vlie/vla_check.hpp"

#include <doctest.h>

using namespace vlie;

namespace {

// A Lie algebra on x, y, z with [x,y] = z, [y,z] = x, [z,x] = z: antisymmetric,
// but [[x,y],z] + [[y,z],x] + [[z,x],y] = [z,z] + [x,x] + [z,y] = -x != 0.
LieData broken_jacobi() {
  LieData g = make_lie_data({"x", "y", "z"});
  auto set = [&](int i, int j, int k) {
    g.bracket[i][j][k] = 1;
    g.bracket[j][i][k] = -1;
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 2);
  return g;
}

}  // namespace

TEST_CASE("Virasoro defects") {
  const FormulaSpec vir = virasoro();
  const BasisId w = vir.lookup("ω"), c = vir.lookup("c");
  CHECK(commutator_defect(vir, w, 0, w, 3, w) == basis_element(c, 1, Rational(-1, 2)));
  CHECK(skew_defect(vir, w, 0, w) == basis_element(c, 3, Rational(-1, 12)));
  CHECK(skew_defect(vir, w, 1, w) == basis_element(c, 2, Rational(-1, 4)));
  CHECK(skew_defect(vir, w, 3, w).is_zero());

  const auto sweep = defect_sweep(vir);
  CHECK(!sweep.empty());
  for (const auto& d : sweep) CHECK(membership_central(vir, d.value, c));
  CHECK(to_string(vir, sweep.front()) == "skew(ω,0,ω) = -1/12*D^3c");

  const Verdict v = injectivity_verdict(vir);
  CHECK(v.status == VerdictStatus::injective_central_ideal);
  CHECK(v.central == c);
}

TEST_CASE("Jacobi components are binomial sums of commutator defects") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 8; ++trial) {
    const FormulaSpec spec = oracle::random_formula(rng, 2, 2, 1);
    const auto ids = spec.ids();
    for (BasisId u : ids)
      for (BasisId v : ids)
        for (BasisId w : ids)
          for (int k = 0; k <= 2; ++k)
            for (int m = 0; m <= 2; ++m)
              for (int n = 0; n <= 2; ++n) {
                Element expect;
                for (int i = 0; i <= k; ++i)
                  expect.add_scaled(commutator_defect(spec, u, m + k - i, v, n + i, w),
                                    sign_pow(i) * gen_binomial(k, i));
                CHECK(jacobi_component_defect(spec, u, k, v, m, w, n) == expect);
              }
  }
}

TEST_CASE("affine formulas: only skew defects, all of the form -<x,y> Dc") {
  const FormulaSpec sl2 = affine(sl2_data());
  const BasisId c = *sl2.central;
  for (const auto& d : defect_sweep(sl2)) {
    CHECK(d.kind == DefectKind::skew);
    CHECK(d.indices[1] == 0);
    CHECK(membership_central(sl2, d.value, c));
  }
  CHECK(injectivity_verdict(sl2).status == VerdictStatus::injective_central_ideal);
  CHECK(injectivity_verdict(affine(abelian_data(2))).status == VerdictStatus::injective_zero_ideal);
}

TEST_CASE("a non-Lie bracket produces a commutator defect outside D C[D] c") {
  const LieData g = broken_jacobi();
  CHECK(validate_lie_data(g).empty());
  const FormulaSpec spec = affine(g);
  const BasisId c = *spec.central;
  bool outside = false;
  for (const auto& d : defect_sweep(spec))
    if (d.kind == DefectKind::commutator && !membership_central(spec, d.value, c)) outside = true;
  CHECK(outside);
  CHECK(!injectivity_verdict(spec).injective());
}

TEST_CASE("the sweep bound guard fires") {
  CHECK_THROWS_WITH_AS(defect_sweep(virasoro(), 2), doctest::Contains("bound insufficient"), Error);
  CHECK_NOTHROW(defect_sweep(virasoro(), default_sweep_bound(virasoro())));
}

TEST_CASE("central checks") {
  const FormulaSpec vir = virasoro();
  CHECK(central_check(vir, vir.lookup("c")));
  CHECK(!central_check(vir, vir.lookup("ω")));
  CHECK(!membership_central(vir, basis_element(vir.lookup("c")), vir.lookup("c")));
  CHECK(membership_central(vir, Element(), vir.lookup("c")));
}

TEST_CASE("conformal validation") {
  const FormulaSpec vir = virasoro();
  CHECK(conformal_validate(vir, *vir.omega, *vir.central).passed());
  const FormulaSpec ns = neveu_schwarz();
  CHECK(conformal_validate(ns, *ns.omega, *ns.central).passed());
  const FormulaSpec dual = comm_assoc(dual_numbers(Rational(1, 3)));
  CHECK(conformal_validate(dual, *dual.omega, *dual.central).passed());

  FormulaSpec bad = virasoro();
  const BasisId w = bad.lookup("ω");
  bad.set_product(w, 1, w, basis_element(w, 0, 3));
  CHECK(!conformal_validate(bad, w, bad.lookup("c")).passed());

  FormulaSpec ungraded;
  ungraded.add_basis("a");
  CHECK_THROWS_AS(conformal_validate(ungraded, BasisId{0}, BasisId{0}), Error);
}

TEST_CASE("pure Lie formulas") {
  FormulaSpec current;
  const BasisId a = current.add_basis("a");
  current.set_product(a, 0, a, Element());
  CHECK(pure_lie_check(current).status == VerdictStatus::pure_lie);

  // u_0 u = u: not a vertex Lie algebra on C[D] u
  FormulaSpec idem;
  const BasisId u = idem.add_basis("u");
  idem.set_product(u, 0, u, basis_element(u));
  const Verdict v = pure_lie_check(idem);
  CHECK(v.status != VerdictStatus::pure_lie);

  CHECK_THROWS_WITH_AS(pure_lie_check(virasoro()), doctest::Contains("constants leave S"), Error);
}

TEST_CASE("Novikov identities agree with the defect sweep") {
  int pass = 0, fail = 0;
  for (const auto& sample : oracle::novikov_cases()) {
    CAPTURE(sample.name);
    const NovikovReport r = novikov_check(sample.algebra);
    CHECK(r.identities_hold == sample.novikov);
    CHECK(r.agree());
    (sample.novikov ? pass : fail)++;
  }
  CHECK(pass >= 3);
  CHECK(fail >= 2);

  AlgebraData asym = make_algebra_data({"a", "b"});
  asym.form[0][1] = 1;
  CHECK_THROWS_WITH_AS(novikov_check(asym), doctest::Contains("form not symmetric"), Error);
}

TEST_CASE("verdicts for the flipped product") {
  const FormulaSpec spec = novikov(flipped_lambda_algebra({Rational(1), Rational(0)}));
  const Verdict v = injectivity_verdict(spec);
  CHECK(v.status == VerdictStatus::not_injective_candidate);
  CHECK(!v.witnesses.empty());
}
