#ifndef VLIE_VERMA_HPP
#define VLIE_VERMA_HPP

// The generalized Verma module V(U) = U(L_-(U)) in PBW normal form.

#include "vlie/local_lie.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace vlie {

/// Raised when an operation would produce a vector above the module cutoff.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

/// x_1 x_2 ... x_k 1 with all n < 0, sorted by (weight descending, basis id, n).
struct PbwMonomial {
  std::vector<LieGenerator> factors;
  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;
};

struct PbwVector {
  LinearCombination<PbwMonomial> terms;
  /// Set once c_{-1} has been replaced by the scalar level.
  std::optional<Rational> level;

  PbwVector() = default;
  explicit PbwVector(PbwMonomial m, const Rational& c = 1, std::optional<Rational> lvl = std::nullopt)
      : terms(std::move(m), c), level(std::move(lvl)) {}

  bool is_zero() const { return terms.is_zero(); }
  void add_scaled(const PbwVector& other, const Rational& s);
  PbwVector& operator+=(const PbwVector& o) {
    add_scaled(o, 1);
    return *this;
  }
  PbwVector& operator-=(const PbwVector& o) {
    add_scaled(o, -1);
    return *this;
  }
  friend PbwVector operator+(PbwVector a, const PbwVector& b) { return a += b; }
  friend PbwVector operator-(PbwVector a, const PbwVector& b) { return a -= b; }
  friend PbwVector operator*(const Rational& s, PbwVector a) {
    a.terms *= s;
    return a;
  }
  friend bool operator==(const PbwVector& a, const PbwVector& b) { return a.terms == b.terms; }
};

class VermaModule {
 public:
  /// Requires a graded spec with nonnegative weights.
  VermaModule(const LocalLieAlgebra& lie, Rational cutoff);
  VermaModule(const VermaModule& other);
  VermaModule& operator=(const VermaModule&) = delete;

  const LocalLieAlgebra& lie() const { return lie_; }
  const FormulaSpec& spec() const { return lie_.spec(); }
  const Rational& cutoff() const { return cutoff_; }

  PbwVector vacuum() const;
  /// u_{-1} 1
  PbwVector embed(BasisId u) const;

  Rational weight(const LieGenerator& g) const { return lie_.weight(g); }
  Rational weight(const PbwMonomial& m) const;
  /// The common weight of all terms, nullopt for 0 or mixed vectors.
  std::optional<Rational> weight(const PbwVector& v) const;
  Parity parity(const PbwMonomial& m) const;

  /// g . v in normal form. Throws CutoffExceeded if the weight of a term
  /// would pass the cutoff.
  PbwVector act(const LieGenerator& g, const PbwVector& v) const;
  PbwVector act(const LieElement& x, const PbwVector& v) const;
  /// x_1 (x_2 (... (x_k v)))
  PbwVector act_sequence(const std::vector<LieGenerator>& gens, const PbwVector& v) const;

  /// D(x_1...x_k 1) = sum_i x_1...[D,x_i]...x_k 1 with [D,u_n] = -n u_{n-1}.
  PbwVector apply_D(const PbwVector& v) const;

  /// Replaces every factor c_{-1} by the scalar level; requires a designated central vector.
  PbwVector specialize_level(const PbwVector& v, const Rational& level) const;

  /// a_n b where Y(u_m a', z) = Y(u,z)_m Y(a',z) and Y(1,z) = id.
  PbwVector field_coefficient(const PbwVector& a, int n, const PbwVector& b) const;

  /// Negative generators of weight <= w (c_{-1} excluded when `skip_central`).
  std::vector<LieGenerator> negative_generators(const Rational& w, bool skip_central = true) const;
  /// Normal-ordered monomials of weight <= w without c_{-1}, ordered by weight.
  std::vector<PbwMonomial> monomials_up_to(const Rational& w) const;

  /// dim V_l(U)_w for w <= cutoff, with c_{-1} specialized to a scalar.
  std::map<Rational, std::uint64_t> graded_dimension() const;

 private:
  bool before(const LieGenerator& a, const LieGenerator& b) const;
  PbwVector act_monomial(const LieGenerator& g, const PbwMonomial& m) const;
  PbwVector field_monomial(const PbwMonomial& a, int n, const PbwMonomial& b) const;
  void check_cutoff(const Rational& w) const;

  LocalLieAlgebra lie_;
  Rational cutoff_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<LieGenerator, PbwMonomial>, PbwVector> act_cache_;
  mutable std::map<std::tuple<PbwMonomial, int, PbwMonomial>, PbwVector> field_cache_;
};

std::string to_string(const FormulaSpec& spec, const PbwVector& v);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;
};

/// Creation, vacuum, half skew symmetry, locality (N = n_max), commutator
/// formula and translation on graded pieces up to `cutoff`.
AxiomReport axiom_spotcheck(const LocalLieAlgebra& lie, const Rational& cutoff);

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h with e = -omega_2, h = -2 omega_1,
/// f = omega_0 on every graded piece up to `cutoff`. Returns the violations.
std::vector<std::string> sl2_relations_check(const LocalLieAlgebra& lie, BasisId omega, const Rational& cutoff);

}  // namespace vlie

#endif  // VLIE_VERMA_HPP
