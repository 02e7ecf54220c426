#include "vlie/vla_check.hpp"

#include <algorithm>
#include <sstream>

namespace vlie {

namespace {

Element single(BasisId b) { return basis_element(b); }

int eps(const FormulaSpec& spec, BasisId a, BasisId b) { return epsilon(spec.parity(a), spec.parity(b)); }

const char* kind_name(DefectKind k) {
  switch (k) {
    case DefectKind::skew:
      return "skew";
    case DefectKind::commutator:
      return "commutator";
    case DefectKind::jacobi_component:
      return "jacobi";
  }
  return "?";
}

bool is_basis_slot(DefectKind kind, std::size_t pos) {
  if (kind == DefectKind::skew) return pos != 1;
  if (kind == DefectKind::commutator) return pos % 2 == 0;
  return pos % 2 == 0;
}

}  // namespace

std::string to_string(const FormulaSpec& spec, const Defect& d) {
  std::ostringstream os;
  os << kind_name(d.kind) << "(";
  for (std::size_t i = 0; i < d.indices.size(); ++i) {
    if (i) os << ",";
    if (is_basis_slot(d.kind, i)) {
      os << spec.at(BasisId{static_cast<std::size_t>(d.indices[i])}).label;
    } else {
      os << d.indices[i];
    }
  }
  os << ") = " << to_string(spec, d.value);
  return os.str();
}

Element skew_defect(const FormulaSpec& spec, BasisId u, int n, BasisId v) {
  if (n < 0) throw Error("skew_defect: negative index");
  const Element eu = single(u), ev = single(v);
  Element out = extend_product(spec, eu, n, ev);
  const int bound = spec.n_max();
  const int e = eps(spec, u, v);
  for (int k = 0; n + k < bound; ++k) {
    Element t = apply_d(extend_product(spec, ev, n + k, eu), k);
    out.add_scaled(t, Rational(e * sign_pow(n + k)) / factorial(k));
  }
  return out;
}

Element commutator_defect(const FormulaSpec& spec, BasisId u, int m, BasisId v, int n, BasisId w) {
  if (m < 0 || n < 0) throw Error("commutator_defect: negative index");
  const Element eu = single(u), ev = single(v), ew = single(w);
  Element out = extend_product(spec, eu, m, extend_product(spec, ev, n, ew));
  out.add_scaled(extend_product(spec, ev, n, extend_product(spec, eu, m, ew)), Rational(-eps(spec, u, v)));
  for (int i = 0; i <= m; ++i) {
    const Element& uv = spec.product(u, i, v);
    if (uv.is_zero()) continue;
    out.add_scaled(extend_product(spec, uv, n + m - i, ew), -gen_binomial(m, i));
  }
  return out;
}

Element jacobi_component_defect(const FormulaSpec& spec, BasisId u, int k, BasisId v, int m, BasisId w,
                                int n) {
  if (k < 0 || m < 0 || n < 0) throw Error("jacobi_component_defect: negative index");
  const Element eu = single(u), ev = single(v), ew = single(w);
  const Rational second = Rational(eps(spec, u, v) * sign_pow(k));
  Element out;
  for (int i = 0; i <= k; ++i) {
    const Rational c = gen_binomial(k, i) * sign_pow(i);
    out.add_scaled(extend_product(spec, eu, m + k - i, extend_product(spec, ev, n + i, ew)), c);
    out.add_scaled(extend_product(spec, ev, n + k - i, extend_product(spec, eu, m + i, ew)), -c * second);
  }
  for (int i = 0; i <= m; ++i) {
    const Element uv = extend_product(spec, eu, k + i, ev);
    if (uv.is_zero()) continue;
    out.add_scaled(extend_product(spec, uv, m + n - i, ew), -gen_binomial(m, i));
  }
  return out;
}

int default_sweep_bound(const FormulaSpec& spec) {
  // A commutator defect u_m(v_n w) - ... can survive up to m = 2 n_max + k_max - 2,
  // since v_n w carries D-powers up to k_max that shift the support of u_m.
  const int n_max = spec.n_max();
  const int k_max = spec.k_max();
  return std::max(n_max + k_max + 1, 2 * n_max + k_max - 1);
}

std::vector<Defect> defect_sweep(const FormulaSpec& spec, std::optional<int> bound) {
  const int b = bound.value_or(default_sweep_bound(spec));
  if (b < 0) throw Error("defect_sweep: negative bound");
  const auto ids = spec.ids();
  std::vector<Defect> out;
  auto boundary = [&](const Defect& d) { throw Error("bound insufficient: " + to_string(spec, d)); };

  for (BasisId u : ids)
    for (int n = 0; n <= b; ++n)
      for (BasisId v : ids) {
        Element value = skew_defect(spec, u, n, v);
        if (value.is_zero()) continue;
        Defect d{DefectKind::skew, {long(u.value), n, long(v.value)}, std::move(value)};
        if (n == b) boundary(d);
        out.push_back(std::move(d));
      }
  for (BasisId u : ids)
    for (int m = 0; m <= b; ++m)
      for (BasisId v : ids)
        for (int n = 0; n <= b; ++n)
          for (BasisId w : ids) {
            Element value = commutator_defect(spec, u, m, v, n, w);
            if (value.is_zero()) continue;
            Defect d{DefectKind::commutator, {long(u.value), m, long(v.value), n, long(w.value)}, std::move(value)};
            if (m == b || n == b) boundary(d);
            out.push_back(std::move(d));
          }
  return out;
}

bool membership_central(const FormulaSpec&, const Element& a, BasisId c) {
  return std::all_of(a.begin(), a.end(), [&](const auto& term) { return term.first.id == c && term.first.dpow >= 1; });
}

bool central_check(const FormulaSpec& spec, BasisId c) {
  const auto& all = spec.constants();
  return std::none_of(all.begin(), all.end(), [&](const auto& kv) { return kv.first.u == c || kv.first.v == c; });
}

bool ConformalReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& r) { return r.passed; });
}

ConformalReport conformal_validate(const FormulaSpec& spec, BasisId omega, BasisId c) {
  if (!spec.graded()) throw Error("no weights");
  ConformalReport report;

  {
    ClauseResult r{"(a) Y(omega,z)omega = D omega/z + 2 omega/z^2 + (1/2)c/z^4", true, ""};
    const std::map<int, Element> expected = {
        {0, basis_element(omega, 1)}, {1, basis_element(omega, 0, 2)}, {3, basis_element(c, 0, make_rational(1, 2))}};
    const int top = std::max(spec.n_max(), 4);
    for (int n = 0; n < top; ++n) {
      auto it = expected.find(n);
      const Element want = it == expected.end() ? Element() : it->second;
      const Element& got = spec.product(omega, n, omega);
      if (got != want) {
        r.passed = false;
        r.detail = "omega_" + std::to_string(n) + "omega = " + to_string(spec, got) + ", expected " +
                   to_string(spec, want);
        break;
      }
    }
    if (spec.parity(omega) != Parity::even) {
      r.passed = false;
      r.detail = "omega is odd";
    }
    report.clauses.push_back(std::move(r));
  }
  {
    ClauseResult r{"(b) Y(c,z) = 0 and Y(v,z)c = 0", central_check(spec, c), ""};
    if (!r.passed) r.detail = spec.at(c).label + " has a nonzero product";
    report.clauses.push_back(std::move(r));
  }
  {
    ClauseResult r{"(c) omega_0 v = Dv, omega_1 v = wt(v) v, omega_2 v = 0", true, ""};
    for (BasisId v : spec.ids()) {
      const Element w0 = spec.product(omega, 0, v);
      const Element w1 = spec.product(omega, 1, v);
      const Element w2 = spec.product(omega, 2, v);
      bool ok;
      if (v == c) {
        // Dc lies in the ideal D C[D] (x) c, so omega_0 c only has to vanish modulo it.
        ok = membership_central(spec, w0, c) && w1.is_zero() && w2.is_zero();
      } else {
        ok = w0 == basis_element(v, 1) && w1 == basis_element(v, 0, *spec.weight(v)) && w2.is_zero();
      }
      if (!ok) {
        r.passed = false;
        r.detail = "fails on " + spec.at(v).label;
        break;
      }
    }
    report.clauses.push_back(std::move(r));
  }
  {
    ClauseResult r{"(d) weight-0 part of S is spanned by c", true, ""};
    for (BasisId v : spec.ids())
      if ((*spec.weight(v) == 0) != (v == c)) {
        r.passed = false;
        r.detail = spec.at(v).label + " has weight " + to_string(*spec.weight(v));
        break;
      }
    report.clauses.push_back(std::move(r));
  }
  {
    ClauseResult r{"(e) all weights are nonnegative", true, ""};
    for (BasisId v : spec.ids())
      if (*spec.weight(v) < 0) {
        r.passed = false;
        r.detail = spec.at(v).label + " has negative weight";
        break;
      }
    report.clauses.push_back(std::move(r));
  }
  return report;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::injective_zero_ideal:
      return "injective_zero_ideal";
    case VerdictStatus::injective_central_ideal:
      return "injective_central_ideal";
    case VerdictStatus::pure_lie:
      return "pure_lie";
    case VerdictStatus::not_injective_candidate:
      return "not_injective_candidate";
    case VerdictStatus::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

Verdict injectivity_verdict(const FormulaSpec& spec, std::optional<BasisId> central) {
  if (!central) central = spec.central;
  Verdict verdict;
  std::vector<Defect> defects = defect_sweep(spec);
  if (defects.empty()) {
    verdict.status = VerdictStatus::injective_zero_ideal;
    verdict.notes = "<J+ss> = 0";
    return verdict;
  }
  if (central && central_check(spec, *central) &&
      std::all_of(defects.begin(), defects.end(),
                  [&](const Defect& d) { return membership_central(spec, d.value, *central); })) {
    verdict.status = VerdictStatus::injective_central_ideal;
    verdict.central = central;
    verdict.notes = "<J+ss> = DC[D](x)" + spec.at(*central).label;
    verdict.witnesses = std::move(defects);
    return verdict;
  }
  // Skew defects need a vanishing D^0 part off c; a defect lying in 1 (x) S is a
  // nonzero element of S inside <J+ss>.
  std::vector<Defect> hits;
  for (const auto& d : defects) {
    bool hit = degree_d(d.value) == 0;
    if (d.kind == DefectKind::skew)
      for (const auto& [t, coeff] : d.value)
        if (t.dpow == 0 && (!central || t.id != *central)) hit = true;
    if (hit) hits.push_back(d);
  }
  if (!hits.empty()) {
    verdict.status = VerdictStatus::not_injective_candidate;
    verdict.notes = "a defect leaves a nonzero element of S";
    verdict.witnesses = std::move(hits);
    return verdict;
  }
  verdict.status = VerdictStatus::undetermined;
  verdict.notes = central ? "defects leave DC[D](x)" + spec.at(*central).label : "nonzero defects, no central vector";
  for (auto& d : defects)
    if (!central || !membership_central(spec, d.value, *central)) verdict.witnesses.push_back(std::move(d));
  return verdict;
}

Verdict pure_lie_check(const FormulaSpec& spec) {
  for (const auto& [key, value] : spec.constants())
    if (degree_d(value) >= 1) throw Error("constants leave S");
  Verdict verdict;
  std::vector<std::string> notes;
  for (const auto& [key, value] : spec.constants())
    if (key.n >= 1)
      notes.push_back("F_" + std::to_string(key.n) + "(" + spec.at(key.u).label + "," + spec.at(key.v).label +
                      ") != 0");
  const auto ids = spec.ids();
  for (BasisId u : ids)
    for (BasisId v : ids) {
      Element value = spec.product(u, 0, v);
      value.add_scaled(spec.product(v, 0, u), Rational(eps(spec, u, v)));
      if (!value.is_zero())
        verdict.witnesses.push_back(Defect{DefectKind::skew, {long(u.value), 0, long(v.value)}, std::move(value)});
    }
  for (BasisId u : ids)
    for (BasisId v : ids)
      for (BasisId w : ids) {
        // u_0(v_0 w) - eps v_0(u_0 w) - (u_0 v)_0 w
        Element value = commutator_defect(spec, u, 0, v, 0, w);
        if (!value.is_zero())
          verdict.witnesses.push_back(
              Defect{DefectKind::commutator, {long(u.value), 0, long(v.value), 0, long(w.value)}, std::move(value)});
      }
  if (!verdict.witnesses.empty()) notes.push_back("F_0 is not a Lie superalgebra bracket");
  if (notes.empty()) {
    verdict.status = VerdictStatus::pure_lie;
    verdict.notes = "C[D](x)S is a vertex Lie superalgebra";
    return verdict;
  }
  verdict.status = verdict.witnesses.empty() ? VerdictStatus::undetermined : VerdictStatus::not_injective_candidate;
  for (std::size_t i = 0; i < notes.size(); ++i) verdict.notes += (i ? "; " : "") + notes[i];
  return verdict;
}

NovikovReport novikov_check(const AlgebraData& algebra) {
  const auto n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (algebra.form[i][j] != algebra.form[j][i]) throw Error("form not symmetric");

  NovikovReport report;
  auto mul = [&](const auto& x, const auto& y) { return algebra.mul(x, y); };
  auto add = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto u = algebra.unit(a), v = algebra.unit(b), w = algebra.unit(c);
        const std::string triple = "(" + algebra.labels[a] + "," + algebra.labels[b] + "," + algebra.labels[c] + ")";
        if (mul(u, mul(v, w)) != mul(v, mul(u, w))) report.failures.push_back("u(vw) = v(uw) fails at " + triple);
        if (add(mul(mul(v, w), u), mul(v, mul(u, w))) != add(mul(v, mul(w, u)), mul(mul(v, u), w)))
          report.failures.push_back("(vw)u + v(uw) = v(wu) + (vu)w fails at " + triple);
        const Rational f1 = algebra.pair(mul(u, v), w);
        const Rational f2 = algebra.pair(mul(v, u), w);
        const Rational f3 = algebra.pair(v, mul(u, w));
        const Rational f4 = algebra.pair(v, mul(w, u));
        if (f1 != f2 || f2 != f3 || f3 != f4)
          report.failures.push_back("<uv,w> = <vu,w> = <v,uw> = <v,wu> fails at " + triple);
      }
  report.identities_hold = report.failures.empty();

  const FormulaSpec spec = novikov(algebra);
  const auto defects = defect_sweep(spec);
  report.defects_central = std::all_of(defects.begin(), defects.end(), [&](const Defect& d) {
    return membership_central(spec, d.value, *spec.central);
  });
  return report;
}

}  // namespace vlie
