#ifndef VLIE_LOCAL_LIE_HPP
#define VLIE_LOCAL_LIE_HPP

// The local Lie superalgebra L(U) spanned by u_n = u (x) q^n, u in S, n in Z,
// with (Du)_n = -n u_{n-1} and
//   [u_n, v_p] = sum_i C(n,i) (u_i v)_{n+p-i}.

#include "vlie/formula.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vlie {

struct Verdict;

struct LieGenerator {
  BasisId b;
  int n = 0;
  friend auto operator<=>(const LieGenerator&, const LieGenerator&) = default;
};

using LieElement = LinearCombination<LieGenerator>;

class LocalLieAlgebra {
 public:
  /// With `central_quotient` set, Dc = 0 is imposed: (D^k c)_n = 0 for k >= 1
  /// and c_n = 0 for n != -1.
  explicit LocalLieAlgebra(FormulaSpec spec, std::optional<BasisId> central_quotient = std::nullopt);
  LocalLieAlgebra(const LocalLieAlgebra& other);
  LocalLieAlgebra& operator=(const LocalLieAlgebra&) = delete;

  /// Uses the central quotient when the verdict is injective_central_ideal.
  /// Throws Error("verdict not injective") otherwise.
  static LocalLieAlgebra for_verdict(const FormulaSpec& spec, const Verdict& verdict);

  const FormulaSpec& spec() const { return spec_; }
  std::optional<BasisId> central() const { return central_; }

  /// u_n in the canonical basis; zero when killed by the central quotient.
  LieElement generator(BasisId u, int n) const;
  bool vanishes(const LieGenerator& g) const;

  /// (D^k u)_n -> (-1)^k n(n-1)...(n-k+1) u_{n-k}, termwise.
  LieElement reduce_generator(const Element& a, int n) const;

  LieElement bracket(const LieGenerator& x, const LieGenerator& y) const;
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  /// u_n -> -n u_{n-1}
  LieElement derivation(const LieElement& x) const;

  Parity parity(const LieGenerator& g) const { return spec_.parity(g.b); }
  /// lambda_u - n - 1; requires a graded spec.
  Rational weight(const LieGenerator& g) const;

 private:
  FormulaSpec spec_;
  std::optional<BasisId> central_;
  int n_max_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<LieGenerator, LieGenerator>, LieElement> cache_;
};

/// "4*ω_1 + 1/2*c_-1", terms ordered by (basis id, n).
std::string to_string(const FormulaSpec& spec, const LieElement& x);
std::string to_string(const FormulaSpec& spec, const LieGenerator& g);

/// (terms with n < 0, terms with n >= 0)
std::pair<LieElement, LieElement> triangular_split(const LieElement& x);

/// Skew symmetry, super Jacobi identity and the derivation rule on all basis
/// triples with |n|,|p|,|q| <= window. Returns the violations.
std::vector<std::string> jacobi_window_verify(const LocalLieAlgebra& lie, int window);

/// sum_n ((-1)^n/(n+1)!) D^{n+1}(u_n v), the bracket of L_-(U) carried to U by u -> u_{-1}.
Element bracket_on_U(const FormulaSpec& spec, const Element& u, const Element& v);

}  // namespace vlie

#endif  // VLIE_LOCAL_LIE_HPP
