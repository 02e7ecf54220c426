#ifndef VLIE_PRESETS_HPP
#define VLIE_PRESETS_HPP

#include "vlie/formula.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace vlie {

/// A finite-dimensional Lie algebra g with a symmetric invariant form.
struct LieData {
  std::vector<std::string> labels;
  /// bracket[i][j][k]: coefficient of x_k in [x_i, x_j]
  std::vector<std::vector<std::vector<Rational>>> bracket;
  std::vector<std::vector<Rational>> form;

  std::size_t dim() const { return labels.size(); }
};

/// A finite-dimensional algebra (B, .) with a bilinear form, in a fixed basis.
struct AlgebraData {
  std::vector<std::string> labels;
  /// product[i][j][k]: coefficient of e_k in e_i . e_j
  std::vector<std::vector<std::vector<Rational>>> product;
  std::vector<std::vector<Rational>> form;

  std::size_t dim() const { return labels.size(); }
  std::vector<Rational> mul(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  Rational pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  std::vector<Rational> unit(std::size_t i) const;
};

LieData make_lie_data(std::vector<std::string> labels);
AlgebraData make_algebra_data(std::vector<std::string> labels);

/// Violations of antisymmetry, form symmetry and form invariance.
std::vector<std::string> validate_lie_data(const LieData& g);

LieData sl2_data();                      // e, h, f with <e,f> = 1, <h,h> = 2
LieData heisenberg_data(std::size_t rank = 1);  // abelian, <x_i,x_j> = delta_ij
LieData abelian_data(std::size_t dim);   // abelian, zero form

/// Basis g + {c}; x_0 y = [x,y], x_1 y = <x,y> c; weights 1 and 0.
/// Throws Error on invalid LieData.
FormulaSpec affine(const LieData& g);

/// omega (weight 2) and c (weight 0): Y(omega,z)omega = D omega/z + 2 omega/z^2 + (1/2)c/z^4.
FormulaSpec virasoro();

/// omega (even, 2), tau (odd, 3/2), c (even, 0).
FormulaSpec neveu_schwarz();

/// B + {c} with Y(u,z)v = D(u.v)/z + (u.v + v.u)/z^2 + (1/2)<u,v> c/z^4.
FormulaSpec novikov(const AlgebraData& b);

/// B + {c} with Y(u,z)v = D(u.v)/z + 2 u.v/z^2 + (1/2)<u,v> c/z^4. B must be
/// commutative associative with an identity basis vector omega and <omega,omega> = 1.
FormulaSpec comm_assoc(const AlgebraData& b);

AlgebraData trivial_algebra();  // Q omega, omega.omega = omega, <omega,omega> = 1
/// u.v = lambda(u) v, <u,v> = lambda(u) lambda(v).
AlgebraData lambda_algebra(const std::vector<Rational>& lambda);
/// u.v = lambda(v) u with the same form; not right Novikov once dim >= 2 and lambda != 0.
AlgebraData flipped_lambda_algebra(const std::vector<Rational>& lambda);
/// Q[x]/(x^2) with basis (omega = 1, x) and <a,b> = phi(ab), phi(1) = 1, phi(x) = t.
AlgebraData dual_numbers(const Rational& t);

struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& preset_catalog();

/// Builds a named preset. `dim` parameterizes heisenberg (rank) and the
/// Novikov presets (dimension of B).
FormulaSpec make_preset(std::string_view name, std::size_t dim = 0);

}  // namespace vlie

#endif  // VLIE_PRESETS_HPP
