#ifndef VLIE_FORMULA_HPP
#define VLIE_FORMULA_HPP

// Formulas: a finite basis S with structure constants
//   F_n(u,v) = u_n v = sum_k D^k (x) F_n^k(u,v)  in C[D] (x) S,
// and the unique extension of the n-th products to all of C[D] (x) S.

#include "vlie/linear_combination.hpp"
#include "vlie/scalar.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vlie {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

/// The super sign (-1)^{|a||b|}.
inline int epsilon(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

struct BasisId {
  std::size_t value = 0;
  friend auto operator<=>(const BasisId&, const BasisId&) = default;
};

/// The symbol D^k (x) b.
struct DTerm {
  int dpow = 0;
  BasisId id;
  friend auto operator<=>(const DTerm&, const DTerm&) = default;
};

/// A vector of C[D] (x) S.
using Element = LinearCombination<DTerm>;

inline Element basis_element(BasisId b, int dpow = 0, const Rational& c = 1) {
  return Element(DTerm{dpow, b}, c);
}

struct BasisVector {
  std::string label;
  Parity parity = Parity::even;
  std::optional<Rational> weight;
};

struct ProductKey {
  BasisId u;
  int n = 0;
  BasisId v;
  friend auto operator<=>(const ProductKey&, const ProductKey&) = default;
};

/// Principal part of Y(A,z)B: n -> A_n B for the finitely many nonzero n.
using PrincipalSeries = std::map<int, Element>;

class FormulaSpec {
 public:
  BasisId add_basis(std::string label, Parity parity = Parity::even,
                    std::optional<Rational> weight = std::nullopt);

  /// Sets F_n(u,v); a zero value removes the entry.
  void set_product(BasisId u, int n, BasisId v, Element value);
  void add_to_product(BasisId u, int n, BasisId v, const Element& value);

  /// F_n(u,v), zero if not present.
  const Element& product(BasisId u, int n, BasisId v) const;

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const BasisVector& at(BasisId id) const { return basis_.at(id.value); }
  const std::map<ProductKey, Element>& constants() const { return constants_; }

  Parity parity(BasisId id) const { return at(id).parity; }
  std::optional<Rational> weight(BasisId id) const { return at(id).weight; }
  void set_weight(BasisId id, std::optional<Rational> w) { basis_.at(id.value).weight = std::move(w); }

  /// True iff every basis vector carries a weight.
  bool graded() const;

  /// Smallest N with F_n = 0 for all n >= N.
  int n_max() const;
  /// Largest D-power appearing in any constant (0 if there are none).
  int k_max() const;

  std::optional<BasisId> find(std::string_view label) const;
  /// Like find() but throws Error("unknown basis name ...").
  BasisId lookup(std::string_view label) const;

  std::vector<BasisId> ids() const;

  /// Optional designated central vector c and conformal vector omega.
  std::optional<BasisId> central;
  std::optional<BasisId> omega;
  std::string name;

  friend bool operator==(const FormulaSpec&, const FormulaSpec&);

 private:
  std::vector<BasisVector> basis_;
  std::map<ProductKey, Element> constants_;
};

bool operator==(const FormulaSpec& a, const FormulaSpec& b);

struct SpecViolation {
  enum class Kind { unknown_basis, negative_index, parity, weight, negative_weight, duplicate_label, designation };
  Kind kind;
  ProductKey where;
  int dpow = 0;
  std::string message;
};

/// Checks the formula invariants; an empty result means the spec is a valid formula.
std::vector<SpecViolation> validate_spec(const FormulaSpec& spec);

/// Maximum D-power of A, or -1 for A = 0.
int degree_d(const Element& a);

/// The parity shared by all terms, nullopt for 0 or mixed input.
std::optional<Parity> parity_of(const FormulaSpec& spec, const Element& a);

Element apply_d(const Element& a, int times = 1);

/// lambda + k common to all terms; nullopt if A = 0 or the weights differ.
/// Throws Error if the spec is ungraded.
std::optional<Rational> weight_of(const FormulaSpec& spec, const Element& a);

/// A_n B computed through Y(D^a u,z) D^b v = (d/dz)^a (D - d/dz)^b Y(u,z) v.
Element extend_product(const FormulaSpec& spec, const Element& a, int n, const Element& b);

/// First index beyond the support of Y(A,z)B: n_max + degD(A) + degD(B).
int principal_bound(const FormulaSpec& spec, const Element& a, const Element& b);

/// All nonzero A_n B; the entry at principal_bound is evaluated and must be 0.
PrincipalSeries y_principal(const FormulaSpec& spec, const Element& a, const Element& b);

/// Terms listed by (weight if graded, D-power, basis id): "-1/2*D^3c + 2*ω".
std::string to_string(const FormulaSpec& spec, const Element& a);

}  // namespace vlie

#endif  // VLIE_FORMULA_HPP
