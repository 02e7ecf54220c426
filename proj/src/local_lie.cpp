#include "vlie/local_lie.hpp"

#include "vlie/vla_check.hpp"

#include <sstream>

namespace vlie {

LocalLieAlgebra::LocalLieAlgebra(FormulaSpec spec, std::optional<BasisId> central_quotient)
    : spec_(std::move(spec)), central_(central_quotient), n_max_(spec_.n_max()) {
  if (central_ && central_->value >= spec_.dim()) throw Error("central vector outside the basis");
}

LocalLieAlgebra::LocalLieAlgebra(const LocalLieAlgebra& other)
    : spec_(other.spec_), central_(other.central_), n_max_(other.n_max_) {}

LocalLieAlgebra LocalLieAlgebra::for_verdict(const FormulaSpec& spec, const Verdict& verdict) {
  switch (verdict.status) {
    case VerdictStatus::injective_zero_ideal:
    case VerdictStatus::pure_lie:
      return LocalLieAlgebra(spec);
    case VerdictStatus::injective_central_ideal:
      return LocalLieAlgebra(spec, verdict.central);
    default:
      throw Error("verdict not injective (" + to_string(verdict.status) + "); run the check command first");
  }
}

bool LocalLieAlgebra::vanishes(const LieGenerator& g) const { return central_ && g.b == *central_ && g.n != -1; }

LieElement LocalLieAlgebra::generator(BasisId u, int n) const {
  if (vanishes(LieGenerator{u, n})) return {};
  return LieElement(LieGenerator{u, n});
}

LieElement LocalLieAlgebra::reduce_generator(const Element& a, int n) const {
  LieElement out;
  for (const auto& [t, c] : a) {
    if (central_ && t.id == *central_ && t.dpow >= 1) continue;
    const LieGenerator g{t.id, n - t.dpow};
    if (vanishes(g)) continue;
    out.add(g, c * sign_pow(t.dpow) * falling_factorial(n, t.dpow));
  }
  return out;
}

LieElement LocalLieAlgebra::bracket(const LieGenerator& x, const LieGenerator& y) const {
  if (vanishes(x) || vanishes(y)) return {};
  const auto key = std::make_pair(x, y);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  LieElement out;
  for (int i = 0; i < n_max_; ++i) {
    const Element& f = spec_.product(x.b, i, y.b);
    if (f.is_zero()) continue;
    out.add_scaled(reduce_generator(f, x.n + y.n - i), gen_binomial(x.n, i));
  }
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(key, out);
  return out;
}

LieElement LocalLieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  LieElement out;
  for (const auto& [gx, cx] : x)
    for (const auto& [gy, cy] : y) out.add_scaled(bracket(gx, gy), cx * cy);
  return out;
}

LieElement LocalLieAlgebra::derivation(const LieElement& x) const {
  LieElement out;
  for (const auto& [g, c] : x) {
    const LieGenerator h{g.b, g.n - 1};
    if (vanishes(h)) continue;
    out.add(h, -c * g.n);
  }
  return out;
}

Rational LocalLieAlgebra::weight(const LieGenerator& g) const {
  const auto w = spec_.weight(g.b);
  if (!w) throw Error("ungraded spec");
  return *w - g.n - 1;
}

std::string to_string(const FormulaSpec& spec, const LieGenerator& g) {
  return spec.at(g.b).label + "_" + std::to_string(g.n);
}

std::string to_string(const FormulaSpec& spec, const LieElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) os << to_string(mag) << "*";
    os << to_string(spec, g);
  }
  return os.str();
}

std::pair<LieElement, LieElement> triangular_split(const LieElement& x) {
  std::pair<LieElement, LieElement> out;
  for (const auto& [g, c] : x) (g.n < 0 ? out.first : out.second).add(g, c);
  return out;
}

std::vector<std::string> jacobi_window_verify(const LocalLieAlgebra& lie, int window) {
  if (window < 0) throw Error("jacobi_window_verify: negative window");
  const FormulaSpec& spec = lie.spec();
  std::vector<std::string> out;
  std::vector<LieGenerator> gens;
  for (BasisId u : spec.ids())
    for (int n = -window; n <= window; ++n)
      if (!lie.vanishes({u, n})) gens.push_back({u, n});

  auto name = [&](const LieGenerator& g) { return to_string(spec, g); };
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const int e = epsilon(lie.parity(x), lie.parity(y));
      const LieElement xy = lie.bracket(x, y);
      if (xy != -Rational(e) * lie.bracket(y, x)) out.push_back("skew symmetry fails for " + name(x) + ", " + name(y));
      const LieElement dxy = lie.derivation(xy);
      const LieElement rhs =
          lie.bracket(lie.derivation(LieElement(x)), LieElement(y)) + lie.bracket(LieElement(x), lie.derivation(LieElement(y)));
      if (dxy != rhs) out.push_back("D is not a derivation on " + name(x) + ", " + name(y));
    }
  for (const auto& x : gens)
    for (const auto& y : gens) {
      const int e = epsilon(lie.parity(x), lie.parity(y));
      const LieElement xy = lie.bracket(x, y);
      for (const auto& z : gens) {
        const LieElement lhs = lie.bracket(xy, LieElement(z));
        LieElement rhs = lie.bracket(LieElement(x), lie.bracket(y, z));
        rhs.add_scaled(lie.bracket(LieElement(y), lie.bracket(x, z)), Rational(-e));
        if (lhs != rhs) out.push_back("Jacobi identity fails for " + name(x) + ", " + name(y) + ", " + name(z));
      }
    }
  return out;
}

Element bracket_on_U(const FormulaSpec& spec, const Element& u, const Element& v) {
  Element out;
  const int bound = principal_bound(spec, u, v);
  for (int n = 0; n < bound; ++n) {
    const Element p = extend_product(spec, u, n, v);
    if (p.is_zero()) continue;
    out.add_scaled(apply_d(p, n + 1), Rational(sign_pow(n)) / factorial(n + 1));
  }
  return out;
}

}  // namespace vlie
