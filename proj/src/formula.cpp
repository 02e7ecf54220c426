#include "vlie/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace vlie {

BasisId FormulaSpec::add_basis(std::string label, Parity parity, std::optional<Rational> weight) {
  basis_.push_back(BasisVector{std::move(label), parity, std::move(weight)});
  return BasisId{basis_.size() - 1};
}

void FormulaSpec::set_product(BasisId u, int n, BasisId v, Element value) {
  const ProductKey key{u, n, v};
  if (value.is_zero()) {
    constants_.erase(key);
  } else {
    constants_[key] = std::move(value);
  }
}

void FormulaSpec::add_to_product(BasisId u, int n, BasisId v, const Element& value) {
  Element sum = product(u, n, v) + value;
  set_product(u, n, v, std::move(sum));
}

const Element& FormulaSpec::product(BasisId u, int n, BasisId v) const {
  static const Element zero;
  auto it = constants_.find(ProductKey{u, n, v});
  return it == constants_.end() ? zero : it->second;
}

bool FormulaSpec::graded() const {
  return std::all_of(basis_.begin(), basis_.end(), [](const BasisVector& b) { return b.weight.has_value(); });
}

int FormulaSpec::n_max() const {
  int n = 0;
  for (const auto& [key, value] : constants_) n = std::max(n, key.n + 1);
  return n;
}

int FormulaSpec::k_max() const {
  int k = 0;
  for (const auto& [key, value] : constants_) k = std::max(k, degree_d(value));
  return k;
}

std::optional<BasisId> FormulaSpec::find(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return BasisId{i};
  return std::nullopt;
}

BasisId FormulaSpec::lookup(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error("unknown basis name '" + std::string(label) + "'");
}

std::vector<BasisId> FormulaSpec::ids() const {
  std::vector<BasisId> out;
  out.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out.push_back(BasisId{i});
  return out;
}

bool operator==(const FormulaSpec& a, const FormulaSpec& b) {
  if (a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    const auto& x = a.basis_[i];
    const auto& y = b.basis_[i];
    if (x.label != y.label || x.parity != y.parity || x.weight != y.weight) return false;
  }
  return a.constants_ == b.constants_ && a.central == b.central && a.omega == b.omega;
}

int degree_d(const Element& a) {
  int d = -1;
  for (const auto& [t, c] : a) d = std::max(d, t.dpow);
  return d;
}

std::optional<Parity> parity_of(const FormulaSpec& spec, const Element& a) {
  std::optional<Parity> p;
  for (const auto& [t, c] : a) {
    const Parity q = spec.parity(t.id);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

Element apply_d(const Element& a, int times) {
  Element out;
  for (const auto& [t, c] : a) out.add(DTerm{t.dpow + times, t.id}, c);
  return out;
}

std::optional<Rational> weight_of(const FormulaSpec& spec, const Element& a) {
  if (!spec.graded()) throw Error("weight_of: spec has no weights");
  std::optional<Rational> w;
  for (const auto& [t, c] : a) {
    const Rational x = *spec.weight(t.id) + t.dpow;
    if (w && *w != x) return std::nullopt;
    w = x;
  }
  return w;
}

std::vector<SpecViolation> validate_spec(const FormulaSpec& spec) {
  std::vector<SpecViolation> out;
  const auto dim = spec.dim();
  auto valid = [&](BasisId id) { return id.value < dim; };

  std::set<std::string> labels;
  for (const auto& b : spec.basis()) {
    if (!labels.insert(b.label).second)
      out.push_back({SpecViolation::Kind::duplicate_label, {}, 0, "duplicate basis label '" + b.label + "'"});
    if (b.weight && *b.weight < 0)
      out.push_back({SpecViolation::Kind::negative_weight, {}, 0, "negative weight on '" + b.label + "'"});
  }
  for (auto designated : {spec.central, spec.omega})
    if (designated && !valid(*designated))
      out.push_back({SpecViolation::Kind::designation, {}, 0, "designated vector outside the basis"});

  const bool graded = spec.graded();
  for (const auto& [key, value] : spec.constants()) {
    if (!valid(key.u) || !valid(key.v)) {
      out.push_back({SpecViolation::Kind::unknown_basis, key, 0, "product of unknown basis vectors"});
      continue;
    }
    if (key.n < 0) out.push_back({SpecViolation::Kind::negative_index, key, 0, "negative product index"});
    const Parity expected = spec.parity(key.u) + spec.parity(key.v);
    for (const auto& [t, c] : value) {
      if (!valid(t.id) || t.dpow < 0) {
        out.push_back({SpecViolation::Kind::unknown_basis, key, t.dpow, "term outside C[D] (x) S"});
        continue;
      }
      if (spec.parity(t.id) != expected)
        out.push_back({SpecViolation::Kind::parity, key, t.dpow,
                       "term " + spec.at(t.id).label + " has the wrong parity"});
      if (graded) {
        const Rational want = *spec.weight(key.u) + *spec.weight(key.v) - key.n - 1 - t.dpow;
        if (*spec.weight(t.id) != want)
          out.push_back({SpecViolation::Kind::weight, key, t.dpow,
                         "term " + spec.at(t.id).label + " has weight " + to_string(*spec.weight(t.id)) +
                             ", expected " + to_string(want)});
      }
    }
  }
  return out;
}

Element extend_product(const FormulaSpec& spec, const Element& a, int n, const Element& b) {
  if (n < 0) throw Error("extend_product: negative index");
  // (D^p u)_n (D^q v) = (-1)^p sum_j C(q,j) n!/(n-p-j)! D^{q-j} F_{n-p-j}(u,v)
  Element out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      const Rational cab = ca * cb * sign_pow(ta.dpow);
      for (int j = 0; j <= tb.dpow; ++j) {
        const int m = n - ta.dpow - j;
        if (m < 0) break;
        const Element& f = spec.product(ta.id, m, tb.id);
        if (f.is_zero()) continue;
        const Rational scale = cab * gen_binomial(tb.dpow, j) * falling_factorial(n, ta.dpow + j);
        for (const auto& [tf, cf] : f) out.add(DTerm{tf.dpow + tb.dpow - j, tf.id}, cf * scale);
      }
    }
  }
  return out;
}

int principal_bound(const FormulaSpec& spec, const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return spec.n_max() + degree_d(a) + degree_d(b);
}

PrincipalSeries y_principal(const FormulaSpec& spec, const Element& a, const Element& b) {
  PrincipalSeries out;
  const int bound = principal_bound(spec, a, b);
  for (int n = 0; n < bound; ++n) {
    Element p = extend_product(spec, a, n, b);
    if (!p.is_zero()) out.emplace(n, std::move(p));
  }
  if (!extend_product(spec, a, bound, b).is_zero())
    throw Error("y_principal: product nonzero at the support bound");
  return out;
}

std::string to_string(const FormulaSpec& spec, const Element& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<DTerm, Rational>> terms(a.begin(), a.end());
  if (spec.graded()) {
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
      const Rational wx = *spec.weight(x.first.id) + x.first.dpow;
      const Rational wy = *spec.weight(y.first.id) + y.first.dpow;
      return wx < wy;
    });
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << "*";
    if (t.dpow == 1) os << "D";
    if (t.dpow > 1) os << "D^" << t.dpow;
    os << spec.at(t.id).label;
  }
  return os.str();
}

}  // namespace vlie
