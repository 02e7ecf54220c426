#include "vlie/verma.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace vlie {

void PbwVector::add_scaled(const PbwVector& other, const Rational& s) {
  terms.add_scaled(other.terms, s);
  if (!level) level = other.level;
}

VermaModule::VermaModule(const LocalLieAlgebra& lie, Rational cutoff) : lie_(lie), cutoff_(std::move(cutoff)) {
  const FormulaSpec& spec = lie_.spec();
  if (!spec.graded()) throw Error("ungraded spec");
  for (BasisId u : spec.ids())
    if (*spec.weight(u) < 0) throw Error("negative weight on '" + spec.at(u).label + "'");
  if (cutoff_ < 0) throw Error("negative cutoff");
}

VermaModule::VermaModule(const VermaModule& other) : lie_(other.lie_), cutoff_(other.cutoff_) {}

PbwVector VermaModule::vacuum() const { return PbwVector(PbwMonomial{}); }

PbwVector VermaModule::embed(BasisId u) const { return act(LieGenerator{u, -1}, vacuum()); }

Rational VermaModule::weight(const PbwMonomial& m) const {
  Rational w = 0;
  for (const auto& g : m.factors) w += weight(g);
  return w;
}

std::optional<Rational> VermaModule::weight(const PbwVector& v) const {
  std::optional<Rational> w;
  for (const auto& [m, c] : v.terms) {
    const Rational x = weight(m);
    if (w && *w != x) return std::nullopt;
    w = x;
  }
  return w;
}

Parity VermaModule::parity(const PbwMonomial& m) const {
  Parity p = Parity::even;
  for (const auto& g : m.factors) p = p + lie_.parity(g);
  return p;
}

bool VermaModule::before(const LieGenerator& a, const LieGenerator& b) const {
  const Rational wa = weight(a), wb = weight(b);
  if (wa != wb) return wa > wb;
  return a < b;
}

void VermaModule::check_cutoff(const Rational& w) const {
  if (w > cutoff_) throw CutoffExceeded("cutoff exceeded: weight " + to_string(w) + " > " + to_string(cutoff_));
}

PbwVector VermaModule::act_monomial(const LieGenerator& g, const PbwMonomial& m) const {
  if (lie_.vanishes(g)) return {};
  const Rational w = weight(g) + weight(m);
  if (w < 0) return {};
  check_cutoff(w);
  const auto key = std::make_pair(g, m);
  {
    std::lock_guard lock(mutex_);
    if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;
  }

  PbwVector out;
  if (m.factors.empty()) {
    if (g.n < 0) out = PbwVector(PbwMonomial{{g}});
  } else {
    const LieGenerator& x = m.factors.front();
    const PbwMonomial rest{std::vector<LieGenerator>(m.factors.begin() + 1, m.factors.end())};
    const bool odd = lie_.parity(g) == Parity::odd;
    if (g.n < 0 && (before(g, x) || (g == x && !odd))) {
      PbwMonomial prepended = m;
      prepended.factors.insert(prepended.factors.begin(), g);
      out = PbwVector(std::move(prepended));
    } else if (g == x) {
      // g odd: g g = (1/2)[g,g]
      out = act(make_rational(1, 2) * lie_.bracket(g, g), PbwVector(rest));
    } else {
      // g x r = eps x (g r) + [g,x] r
      const int e = epsilon(lie_.parity(g), lie_.parity(x));
      out = act(x, act_monomial(g, rest));
      out.terms *= Rational(e);
      out += act(lie_.bracket(g, x), PbwVector(rest));
    }
  }
  std::lock_guard lock(mutex_);
  act_cache_.emplace(key, out);
  return out;
}

PbwVector VermaModule::act(const LieGenerator& g, const PbwVector& v) const {
  PbwVector out;
  for (const auto& [m, c] : v.terms) out.add_scaled(act_monomial(g, m), c);
  if (v.level) return specialize_level(out, *v.level);
  return out;
}

PbwVector VermaModule::act(const LieElement& x, const PbwVector& v) const {
  PbwVector out;
  for (const auto& [g, c] : x) out.add_scaled(act(g, v), c);
  out.level = v.level;
  return out;
}

PbwVector VermaModule::act_sequence(const std::vector<LieGenerator>& gens, const PbwVector& v) const {
  PbwVector out = v;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) out = act(*it, out);
  return out;
}

PbwVector VermaModule::apply_D(const PbwVector& v) const {
  PbwVector out;
  for (const auto& [m, c] : v.terms) {
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
      const LieGenerator& x = m.factors[i];
      std::vector<LieGenerator> prefix(m.factors.begin(), m.factors.begin() + static_cast<long>(i));
      prefix.push_back(LieGenerator{x.b, x.n - 1});
      const PbwMonomial suffix{std::vector<LieGenerator>(m.factors.begin() + static_cast<long>(i) + 1, m.factors.end())};
      out.add_scaled(act_sequence(prefix, PbwVector(suffix)), c * (-x.n));
    }
  }
  out.level = v.level;
  if (v.level) return specialize_level(out, *v.level);
  return out;
}

PbwVector VermaModule::specialize_level(const PbwVector& v, const Rational& level) const {
  const std::optional<BasisId> c = lie_.central() ? lie_.central() : spec().central;
  if (!c) throw Error("no central vector to specialize");
  const LieGenerator cg{*c, -1};
  PbwVector out;
  out.level = level;
  for (const auto& [m, coeff] : v.terms) {
    PbwMonomial reduced;
    Rational scale = coeff;
    for (const auto& g : m.factors) {
      if (g == cg) {
        scale *= level;
      } else {
        reduced.factors.push_back(g);
      }
    }
    out.terms.add(reduced, scale);
  }
  return out;
}

PbwVector VermaModule::field_monomial(const PbwMonomial& a, int n, const PbwMonomial& b) const {
  if (a.factors.empty()) return n == -1 ? PbwVector(b) : PbwVector();
  const Rational wa = weight(a), wb = weight(b);
  if (wa + wb - n - 1 < 0) return {};
  const auto key = std::make_tuple(a, n, b);
  {
    std::lock_guard lock(mutex_);
    if (auto it = field_cache_.find(key); it != field_cache_.end()) return it->second;
  }

  // (u_m a')_n b = sum_j (-1)^j C(m,j) [u_{m-j} a'_{n+j} b - eps (-1)^m a'_{m+n-j} u_j b]
  const LieGenerator u = a.factors.front();
  const PbwMonomial rest{std::vector<LieGenerator>(a.factors.begin() + 1, a.factors.end())};
  const int m = u.n;
  const Rational lambda_u = *spec().weight(u.b);
  const Rational w_rest = weight(rest);
  const int e = epsilon(lie_.parity(u), parity(rest));
  const Rational first_bound = w_rest + wb - n - 1;  // a'_{n+j} b = 0 beyond
  const Rational second_bound = lambda_u + wb - 1;    // u_j b = 0 beyond
  const Rational top = std::max(first_bound, second_bound);
  PbwVector out;
  const PbwVector bvec(b);
  for (int j = 0; j <= top; ++j) {
    const Rational cj = gen_binomial(m, j) * sign_pow(j);
    if (j <= first_bound) {
      const PbwVector inner = field_monomial(rest, n + j, b);
      if (!inner.is_zero()) out.add_scaled(act(LieGenerator{u.b, m - j}, inner), cj);
    }
    if (j <= second_bound) {
      const PbwVector ub = act(LieGenerator{u.b, j}, bvec);
      if (!ub.is_zero()) {
        PbwVector outer;
        for (const auto& [mb, cb] : ub.terms) outer.add_scaled(field_monomial(rest, m + n - j, mb), cb);
        out.add_scaled(outer, -cj * e * sign_pow(m));
      }
    }
  }
  std::lock_guard lock(mutex_);
  field_cache_.emplace(key, out);
  return out;
}

PbwVector VermaModule::field_coefficient(const PbwVector& a, int n, const PbwVector& b) const {
  if (!a.is_zero() && !weight(a)) throw Error("field_coefficient: a is not weight-homogeneous");
  PbwVector out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) out.add_scaled(field_monomial(ma, n, mb), ca * cb);
  const auto level = a.level ? a.level : b.level;
  if (level) return specialize_level(out, *level);
  return out;
}

std::vector<LieGenerator> VermaModule::negative_generators(const Rational& w, bool skip_central) const {
  const std::optional<BasisId> c = lie_.central() ? lie_.central() : spec().central;
  std::vector<LieGenerator> out;
  for (BasisId u : spec().ids()) {
    const Rational lambda = *spec().weight(u);
    for (int n = -1; lambda - n - 1 <= w; --n) {
      const LieGenerator g{u, n};
      if (lie_.vanishes(g)) continue;
      if (skip_central && c && g == LieGenerator{*c, -1}) continue;
      out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return before(a, b); });
  return out;
}

std::vector<PbwMonomial> VermaModule::monomials_up_to(const Rational& w) const {
  const auto gens = negative_generators(w);
  for (const auto& g : gens)
    if (weight(g) == 0) throw Error("weight-0 generator " + to_string(spec(), g) + " makes graded pieces infinite");
  std::vector<PbwMonomial> out;
  PbwMonomial current;
  std::function<void(std::size_t, Rational)> grow = [&](std::size_t start, Rational budget) {
    out.push_back(current);
    for (std::size_t i = start; i < gens.size(); ++i) {
      const Rational wg = weight(gens[i]);
      if (wg > budget) continue;
      current.factors.push_back(gens[i]);
      const bool odd = lie_.parity(gens[i]) == Parity::odd;
      grow(odd ? i + 1 : i, budget - wg);
      current.factors.pop_back();
    }
  };
  grow(0, w);
  std::stable_sort(out.begin(), out.end(),
                   [&](const PbwMonomial& a, const PbwMonomial& b) { return weight(a) < weight(b); });
  return out;
}

std::map<Rational, std::uint64_t> VermaModule::graded_dimension() const {
  const auto gens = negative_generators(cutoff_);
  mpz_class denom = cutoff_.get_den();
  for (const auto& g : gens) {
    const Rational wg = weight(g);
    if (wg == 0) throw Error("weight-0 generator " + to_string(spec(), g) + " makes graded pieces infinite");
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), wg.get_den_mpz_t());
  }
  const Rational scaled_cut = cutoff_ * denom;
  const std::size_t top = mpz_class(scaled_cut.get_num() / scaled_cut.get_den()).get_ui();
  std::vector<std::uint64_t> series(top + 1, 0);
  series[0] = 1;
  for (const auto& g : gens) {
    const Rational s = weight(g) * denom;
    const std::size_t step = mpz_class(s.get_num()).get_ui();
    if (lie_.parity(g) == Parity::odd) {
      for (std::size_t k = top + 1; k-- > step;) series[k] += series[k - step];  // (1 + q^w)
    } else {
      for (std::size_t k = step; k <= top; ++k) series[k] += series[k - step];  // 1/(1 - q^w)
    }
  }
  std::map<Rational, std::uint64_t> out;
  for (std::size_t k = 0; k <= top; ++k) out[Rational(mpz_class(static_cast<unsigned long>(k)), denom)] = series[k];
  return out;
}

std::string to_string(const FormulaSpec& spec, const PbwVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : v.terms) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << to_string(Rational(abs(c))) << " *";
    for (const auto& g : m.factors) os << " " << to_string(spec, g);
    os << " 1";
  }
  return os.str();
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

namespace {

void record(AxiomCheck& check, bool ok, const std::string& what) {
  ++check.cases;
  if (ok) return;
  check.passed = false;
  if (check.failures.size() < 20) check.failures.push_back(what);
}

int floor_int(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return static_cast<int>(f.get_si());
}

}  // namespace

AxiomReport axiom_spotcheck(const LocalLieAlgebra& lie, const Rational& cutoff) {
  const FormulaSpec& spec = lie.spec();
  if (!spec.graded()) throw Error("ungraded spec");
  Rational lambda_max = 0;
  for (BasisId u : spec.ids()) lambda_max = std::max(lambda_max, *spec.weight(u));
  const Rational inner_cut = cutoff + 2 * lambda_max + 2;
  const VermaModule module(lie, inner_cut);
  const int N = spec.n_max();
  const auto pieces = module.monomials_up_to(cutoff);
  const PbwVector vac = module.vacuum();

  std::vector<BasisId> singles;
  for (BasisId u : spec.ids())
    if (!module.embed(u).is_zero()) singles.push_back(u);

  auto name = [&](const PbwMonomial& m) { return to_string(spec, PbwVector(m)); };
  AxiomReport report;

  AxiomCheck creation;
  creation.name = "creation";
  for (const auto& a : pieces) {
    const PbwVector av(a);
    record(creation, module.field_coefficient(av, -1, vac) == av, "a_{-1}1 != a for " + name(a));
    for (int n = 0; n <= floor_int(module.weight(a)) + 1; ++n)
      record(creation, module.field_coefficient(av, n, vac).is_zero(),
             "a_" + std::to_string(n) + "1 != 0 for " + name(a));
  }
  report.checks.push_back(std::move(creation));

  AxiomCheck vacuum;
  vacuum.name = "vacuum";
  for (const auto& b : pieces)
    for (int n = -3; n <= 3; ++n) {
      const PbwVector bv(b);
      const PbwVector got = module.field_coefficient(vac, n, bv);
      record(vacuum, got == (n == -1 ? bv : PbwVector()), "1_" + std::to_string(n) + " b wrong for " + name(b));
    }
  report.checks.push_back(std::move(vacuum));

  AxiomCheck hss;
  hss.name = "half skew symmetry";
  for (BasisId u : singles)
    for (BasisId v : singles) {
      const PbwVector eu = module.embed(u), ev = module.embed(v);
      const Rational total = *spec.weight(u) + *spec.weight(v);
      const int e = epsilon(spec.parity(u), spec.parity(v));
      for (int n = 0; n <= N; ++n) {
        const PbwVector lhs = module.field_coefficient(eu, n, ev);
        PbwVector rhs;
        for (int k = 0; total - n - k - 1 >= 0; ++k) {
          PbwVector t = module.field_coefficient(ev, n + k, eu);
          for (int i = 0; i < k; ++i) t = module.apply_D(t);
          rhs.add_scaled(t, Rational(e * sign_pow(n + k + 1)) / factorial(k));
        }
        record(hss, lhs == rhs, "u_n v != eps e^{zD} v_{n+k} u at (" + spec.at(u).label + "," + std::to_string(n) + "," +
                                    spec.at(v).label + ")");
      }
    }
  report.checks.push_back(std::move(hss));

  AxiomCheck locality;
  locality.name = "locality";
  AxiomCheck commutator;
  commutator.name = "commutator formula";
  for (BasisId u : singles)
    for (BasisId v : singles) {
      const PbwVector eu = module.embed(u), ev = module.embed(v);
      const int e = epsilon(spec.parity(u), spec.parity(v));
      std::vector<PbwVector> products;
      for (int i = 0; i < N; ++i) products.push_back(module.field_coefficient(eu, i, ev));
      for (const auto& b : pieces) {
        const PbwVector bv(b);
        for (int m = -2; m <= N + 1; ++m)
          for (int n = -2; n <= N + 1; ++n) {
            const Rational final_weight = module.weight(b) + *spec.weight(u) + *spec.weight(v) - m - n - 2;
            if (final_weight > inner_cut) continue;
            auto comm = [&](int p, int q) {
              PbwVector t = module.act(LieGenerator{u, p}, module.act(LieGenerator{v, q}, bv));
              t.add_scaled(module.act(LieGenerator{v, q}, module.act(LieGenerator{u, p}, bv)), Rational(-e));
              return t;
            };
            const std::string where = "(" + spec.at(u).label + "_" + std::to_string(m) + "," + spec.at(v).label + "_" +
                                      std::to_string(n) + ") on " + name(b);
            PbwVector local;
            for (int j = 0; j <= N; ++j)
              local.add_scaled(comm(m + N - j, n + j), gen_binomial(N, j) * sign_pow(j));
            record(locality, local.is_zero(), "(z1-z2)^N [Y(u,z1),Y(v,z2)] != 0 at " + where);

            PbwVector rhs;
            for (int i = 0; i < N; ++i)
              if (!products[i].is_zero())
                rhs.add_scaled(module.field_coefficient(products[i], m + n - i, bv), gen_binomial(m, i));
            record(commutator, comm(m, n) == rhs, "[u_m,v_n] != sum C(m,i)(u_i v)_{m+n-i} at " + where);
          }
      }
    }
  report.checks.push_back(std::move(locality));
  report.checks.push_back(std::move(commutator));

  AxiomCheck translation;
  translation.name = "translation";
  for (const auto& a : pieces) {
    const PbwVector av(a);
    const PbwVector da = module.apply_D(av);
    if (module.weight(a) + 1 > cutoff) continue;
    for (const auto& b : pieces) {
      const PbwVector bv(b);
      for (int n = -2; n <= 4; ++n) {
        if (module.weight(a) + module.weight(b) - n > cutoff) continue;
        PbwVector rhs = module.field_coefficient(av, n - 1, bv);
        rhs.terms *= Rational(-n);
        record(translation, module.field_coefficient(da, n, bv) == rhs,
               "(Da)_n b != -n a_{n-1} b for a = " + name(a) + ", n = " + std::to_string(n) + ", b = " + name(b));
      }
    }
  }
  report.checks.push_back(std::move(translation));
  return report;
}

std::vector<std::string> sl2_relations_check(const LocalLieAlgebra& lie, BasisId omega, const Rational& cutoff) {
  const VermaModule module(lie, cutoff + 2);
  const FormulaSpec& spec = lie.spec();
  auto e = [&](const PbwVector& x) { return Rational(-1) * module.act(LieGenerator{omega, 2}, x); };
  auto h = [&](const PbwVector& x) { return Rational(-2) * module.act(LieGenerator{omega, 1}, x); };
  auto f = [&](const PbwVector& x) { return module.act(LieGenerator{omega, 0}, x); };
  std::vector<std::string> out;
  for (const auto& m : module.monomials_up_to(cutoff)) {
    const PbwVector x(m);
    const std::string where = " on " + to_string(spec, x);
    if (h(e(x)) - e(h(x)) != Rational(2) * e(x)) out.push_back("[h,e] != 2e" + where);
    if (h(f(x)) - f(h(x)) != Rational(-2) * f(x)) out.push_back("[h,f] != -2f" + where);
    if (e(f(x)) - f(e(x)) != h(x)) out.push_back("[e,f] != h" + where);
  }
  return out;
}

}  // namespace vlie
