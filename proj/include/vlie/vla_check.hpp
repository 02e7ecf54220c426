#ifndef VLIE_VLA_CHECK_HPP
#define VLIE_VLA_CHECK_HPP

// Jacobi and skew-symmetry defects of a formula, and the (J+ss)-injectivity
// verdicts that can be decided from them.

#include "vlie/formula.hpp"
#include "vlie/presets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vlie {

enum class DefectKind { skew, commutator, jacobi_component };

struct Defect {
  DefectKind kind;
  /// skew: (u,n,v); commutator: (u,m,v,n,w); jacobi_component: (u,k,v,m,w,n).
  /// Basis entries hold BasisId::value.
  std::vector<long> indices;
  Element value;
};

std::string to_string(const FormulaSpec& spec, const Defect& d);

/// u_n v + eps(u,v) sum_k (-1)^{n+k} (D^k/k!) v_{n+k} u
Element skew_defect(const FormulaSpec& spec, BasisId u, int n, BasisId v);

/// u_m(v_n w) - eps(u,v) v_n(u_m w) - sum_i C(m,i) (u_i v)_{n+m-i} w
Element commutator_defect(const FormulaSpec& spec, BasisId u, int m, BasisId v, int n, BasisId w);

/// Component (k,m,n) of the half Jacobi identity; k = 0 is the commutator defect.
Element jacobi_component_defect(const FormulaSpec& spec, BasisId u, int k, BasisId v, int m, BasisId w,
                                int n);

/// Window that contains the whole support of both defect families.
int default_sweep_bound(const FormulaSpec& spec);

/// All nonzero skew defects (u,n,v) and commutator defects (u,m,v,n,w) with
/// indices in [0, bound], ordered lexicographically by (kind, indices).
/// Throws Error("bound insufficient") if a defect with an index equal to the
/// bound is nonzero.
std::vector<Defect> defect_sweep(const FormulaSpec& spec, std::optional<int> bound = std::nullopt);

/// Every term lies on c with D-power >= 1, i.e. A is in D C[D] (x) c.
bool membership_central(const FormulaSpec& spec, const Element& a, BasisId c);

/// Y(c,z)v = Y(v,z)c = 0 for every basis vector v.
bool central_check(const FormulaSpec& spec, BasisId c);

struct ClauseResult {
  std::string clause;
  bool passed = false;
  std::string detail;
};

struct ConformalReport {
  std::vector<ClauseResult> clauses;
  bool passed() const;
};

/// Throws Error("no weights") on ungraded specs.
ConformalReport conformal_validate(const FormulaSpec& spec, BasisId omega, BasisId c);

enum class VerdictStatus { injective_zero_ideal, injective_central_ideal, pure_lie, not_injective_candidate, undetermined };

std::string to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::undetermined;
  std::vector<Defect> witnesses;
  std::string notes;
  /// The central vector used for the D C[D] (x) c quotient, if any.
  std::optional<BasisId> central;

  bool injective() const {
    return status == VerdictStatus::injective_zero_ideal || status == VerdictStatus::injective_central_ideal ||
           status == VerdictStatus::pure_lie;
  }
};

Verdict injectivity_verdict(const FormulaSpec& spec, std::optional<BasisId> central = std::nullopt);

/// Decides whether C[D] (x) S itself is a vertex Lie superalgebra for a formula
/// whose constants all lie in S. Throws Error("constants leave S") otherwise.
Verdict pure_lie_check(const FormulaSpec& spec);

struct NovikovReport {
  std::vector<std::string> failures;  // failed identities, by basis triple
  bool identities_hold = false;
  bool defects_central = false;       // defect sweep of the associated formula lies in D C[D] (x) c
  bool agree() const { return identities_hold == defects_central; }
};

/// Checks the right Novikov identities and the form compatibilities on all
/// basis triples, then cross-checks against the defect sweep of the
/// associated formula. Throws Error("form not symmetric").
NovikovReport novikov_check(const AlgebraData& algebra);

}  // namespace vlie

#endif  // VLIE_VLA_CHECK_HPP
