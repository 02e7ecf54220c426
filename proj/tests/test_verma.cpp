#include "oracles.hpp"
#include "vlie/verma.hpp"
#include "vlie/vla_check.hpp"

#include <doctest.h>

using namespace vlie;

namespace {

LocalLieAlgebra vir_lie() {
  const FormulaSpec vir = virasoro();
  return LocalLieAlgebra(vir, vir.central);
}

LocalLieAlgebra heis_lie() {
  const FormulaSpec h = affine(heisenberg_data(1));
  return LocalLieAlgebra(h, h.central);
}

}  // namespace

TEST_CASE("graded dimensions match brute-force partition counts") {
  const VermaModule vir(vir_lie(), Rational(9));
  const auto dims = vir.graded_dimension();
  for (int w = 0; w <= 9; ++w) CHECK(dims.at(Rational(w)) == oracle::partitions(w, 2));

  const VermaModule heis(heis_lie(), Rational(7));
  const auto hd = heis.graded_dimension();
  for (int w = 0; w <= 7; ++w) CHECK(hd.at(Rational(w)) == oracle::partitions(w, 1));
}

TEST_CASE("Neveu-Schwarz dimensions count fermionic modes") {
  const FormulaSpec ns = neveu_schwarz();
  const VermaModule v(LocalLieAlgebra(ns, ns.central), Rational(6));
  const auto dims = v.graded_dimension();
  std::vector<int> even, odd;
  for (int w = 2; w <= 6; ++w) even.push_back(2 * w);
  for (int w2 = 3; w2 <= 12; w2 += 2) odd.push_back(w2);
  for (int w2 = 0; w2 <= 12; ++w2) {
    const Rational w = make_rational(w2, 2);
    const auto expect = oracle::super_count(even, odd, w2);
    const auto it = dims.find(w);
    CHECK((it == dims.end() ? 0 : it->second) == expect);
  }
}

TEST_CASE("monomial count agrees with graded dimension") {
  const VermaModule sl2(LocalLieAlgebra::for_verdict(affine(sl2_data()), injectivity_verdict(affine(sl2_data()))),
                        Rational(4));
  const auto dims = sl2.graded_dimension();
  std::map<Rational, std::uint64_t> counted;
  for (const auto& m : sl2.monomials_up_to(Rational(4))) ++counted[sl2.weight(m)];
  for (const auto& [w, d] : dims) CHECK(counted[w] == d);
  // three currents: 1, 3, 9, 22, 51
  CHECK(dims.at(Rational(2)) == 9);
  CHECK(dims.at(Rational(4)) == 51);
}

TEST_CASE("Virasoro action examples") {
  const VermaModule v(vir_lie(), Rational(8));
  const FormulaSpec& vir = v.spec();
  const BasisId w = *vir.omega;
  const PbwVector out = v.act_sequence({LieGenerator{w, 3}, LieGenerator{w, -1}}, v.vacuum());
  CHECK(to_string(vir, out) == "1/2 * c_-1 1");
  CHECK(to_string(vir, v.specialize_level(out, Rational(26))) == "13 * 1");
  CHECK(v.act(LieGenerator{w, 0}, v.vacuum()).is_zero());
  CHECK_THROWS_AS(v.act(LieGenerator{w, -9}, v.vacuum()), CutoffExceeded);
}

TEST_CASE("action is confluent and weight additive") {
  const VermaModule v(vir_lie(), Rational(7));
  const BasisId w = *v.spec().omega;
  const auto basis = v.monomials_up_to(Rational(4));
  for (const auto& m : basis) {
    const PbwVector vec(m);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        const LieGenerator x{w, a}, y{w, b};
        const Rational target = v.weight(m) + v.weight(x) + v.weight(y);
        if (target > 7 || v.weight(m) + v.weight(x) > 7 || v.weight(m) + v.weight(y) > 7) continue;
        // x(y v) - y(x v) = [x,y] v
        const PbwVector lhs = v.act(x, v.act(y, vec)) - v.act(y, v.act(x, vec));
        CHECK(lhs == v.act(v.lie().bracket(x, y), vec));
        const PbwVector xy = v.act(x, v.act(y, vec));
        if (!xy.is_zero()) CHECK(v.weight(xy) == target);
      }
  }
}

TEST_CASE("omega_1 is diagonal and omega_0 is D") {
  const VermaModule v(vir_lie(), Rational(7));
  const BasisId w = *v.spec().omega;
  for (const auto& m : v.monomials_up_to(Rational(5))) {
    const PbwVector vec(m);
    CHECK(v.act(LieGenerator{w, 1}, vec) == v.weight(m) * vec);
    CHECK(v.act(LieGenerator{w, 0}, vec) == v.apply_D(vec));
  }
}

TEST_CASE("field coefficients of generators are modes") {
  const VermaModule v(vir_lie(), Rational(7));
  const BasisId w = *v.spec().omega;
  const PbwVector om = v.embed(w);
  for (const auto& m : v.monomials_up_to(Rational(3)))
    for (int n = -2; n <= 3; ++n) {
      const PbwVector b(m);
      if (v.weight(m) + 2 - n - 1 > 7) continue;
      CHECK(v.field_coefficient(om, n, b) == v.act(LieGenerator{w, n}, b));
    }
}

TEST_CASE("the associator identity holds for composite fields") {
  // (a_{-1} b)_n c = sum_j [a_{-1-j} (b_{n+j} c) + eps b_{n-1-j} (a_j c)] for an even a
  const VermaModule v(heis_lie(), Rational(8));
  const BasisId x = v.spec().lookup("x");
  const PbwVector a = v.embed(x);
  const PbwVector b = v.act(LieGenerator{x, -2}, v.vacuum());
  const PbwVector c = v.act(LieGenerator{x, -1}, v.embed(x));
  const PbwVector ab = v.field_coefficient(a, -1, b);
  for (int n = 0; n <= 3; ++n) {
    PbwVector expect;
    for (int j = 0; j <= 6; ++j) {
      expect += v.field_coefficient(a, -1 - j, v.field_coefficient(b, n + j, c));
      expect += v.field_coefficient(b, n - 1 - j, v.field_coefficient(a, j, c));
    }
    CHECK(v.field_coefficient(ab, n, c) == expect);
  }
}

TEST_CASE("sl2 relations and axioms") {
  const LocalLieAlgebra lie = vir_lie();
  CHECK(sl2_relations_check(lie, *lie.spec().omega, Rational(5)).empty());
  const AxiomReport r = axiom_spotcheck(lie, Rational(4));
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
    CHECK(c.cases > 0);
  }
  CHECK(r.passed());
}

TEST_CASE("half-integer weights and abelian currents") {
  const FormulaSpec ab = affine(abelian_data(1));
  FormulaSpec zero;
  zero.add_basis("u", Parity::even, Rational(1, 2));
  const VermaModule v(LocalLieAlgebra(zero), Rational(2));
  CHECK(v.graded_dimension().at(Rational(1, 2)) == 1);
  CHECK_NOTHROW(VermaModule(LocalLieAlgebra(ab, ab.central), Rational(2)));
}
