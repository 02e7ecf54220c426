#include "oracles.hpp"

#include <functional>
#include <map>

namespace oracle {

using namespace vlie;

std::uint64_t count_multisets(const std::vector<int>& parts, int total) {
  std::uint64_t count = 0;
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
    if (left == 0) {
      ++count;
      return;
    }
    if (i == parts.size()) return;
    for (int used = 0; used * parts[i] <= left; ++used) walk(i + 1, left - used * parts[i]);
  };
  walk(0, total);
  return count;
}

std::uint64_t partitions(int n, int min_part) {
  std::vector<int> parts;
  for (int p = min_part; p <= n; ++p) parts.push_back(p);
  return count_multisets(parts, n);
}

std::uint64_t super_count(const std::vector<int>& even, const std::vector<int>& odd, int doubled_weight) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << odd.size()); ++mask) {
    int used = 0;
    for (std::size_t i = 0; i < odd.size(); ++i)
      if (mask >> i & 1) used += odd[i];
    if (used <= doubled_weight) count += count_multisets(even, doubled_weight - used);
  }
  return count;
}

LieElement virasoro_bracket(int n, int m, BasisId omega, BasisId c) {
  LieElement out;
  out.add(LieGenerator{omega, n + m + 1}, Rational(n - m));
  if (n + m == 0) out.add(LieGenerator{c, -1}, Rational(1, 2) * gen_binomial(n + 1, 3));
  return out;
}

namespace {

using Series = std::map<int, Element>;  // exponent of z -> coefficient

Series d_dz(const Series& s) {
  Series out;
  for (const auto& [e, coeff] : s)
    if (e != 0) out[e - 1].add_scaled(coeff, Rational(e));
  return out;
}

Series d_minus_d_dz(const Series& s) {
  Series out = d_dz(s);
  for (auto& [e, coeff] : out) coeff *= Rational(-1);
  for (const auto& [e, coeff] : s) out[e] += apply_d(coeff);
  return out;
}

}  // namespace

Element series_product(const FormulaSpec& spec, const Element& a, int n, const Element& b) {
  Element out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      Series s;
      for (int k = 0; k < spec.n_max(); ++k) {
        const Element& f = spec.product(ta.id, k, tb.id);
        if (!f.is_zero()) s[-k - 1] = f;
      }
      for (int i = 0; i < tb.dpow; ++i) s = d_minus_d_dz(s);
      for (int i = 0; i < ta.dpow; ++i) s = d_dz(s);
      if (auto it = s.find(-n - 1); it != s.end()) out.add_scaled(it->second, ca * cb);
    }
  return out;
}

std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

Rational random_coeff(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  int p = 0;
  while (p == 0) p = num(rng);
  return make_rational(p, den(rng));
}

}  // namespace

FormulaSpec random_formula(std::mt19937& rng, std::size_t dim, int n_max, int k_max) {
  FormulaSpec spec;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < dim; ++i)
    spec.add_basis("e" + std::to_string(i), (i % 2 == 1 && coin(rng)) ? Parity::odd : Parity::even);
  const auto ids = spec.ids();
  std::uniform_int_distribution<int> kdist(0, k_max);
  for (BasisId u : ids)
    for (int n = 0; n < n_max; ++n)
      for (BasisId v : ids) {
        if (!coin(rng)) continue;
        const Parity want = spec.parity(u) + spec.parity(v);
        Element value;
        for (BasisId t : ids)
          if (spec.parity(t) == want && coin(rng)) value.add(DTerm{kdist(rng), t}, random_coeff(rng));
        spec.set_product(u, n, v, value);
      }
  return spec;
}

Element random_element(std::mt19937& rng, const FormulaSpec& spec, int max_dpow, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, spec.dim() - 1);
  std::uniform_int_distribution<int> kdist(0, max_dpow);
  Element out;
  for (int i = 0; i < terms; ++i) out.add(DTerm{kdist(rng), BasisId{pick(rng)}}, random_coeff(rng));
  return out;
}

std::vector<NovikovCase> novikov_cases() {
  std::vector<NovikovCase> out;
  out.push_back({"trivial Q omega", trivial_algebra(), true});
  out.push_back({"lambda construction, dim 2", lambda_algebra({Rational(1), Rational(0)}), true});
  out.push_back({"lambda construction, dim 3", lambda_algebra({Rational(1), Rational(2), Rational(-1)}), true});
  out.push_back({"Q[x]/(x^2), phi(x) = 1/3", dual_numbers(Rational(1, 3)), true});
  out.push_back({"zero algebra, dim 2", make_algebra_data({"a", "b"}), true});

  out.push_back({"flipped lambda, dim 2", flipped_lambda_algebra({Rational(1), Rational(0)}), false});

  AlgebraData upper = make_algebra_data({"E11", "E12", "E22"});
  // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
  upper.product[0][0][0] = 1;
  upper.product[0][1][1] = 1;
  upper.product[1][2][1] = 1;
  upper.product[2][2][2] = 1;
  out.push_back({"upper triangular 2x2 matrices", upper, false});

  AlgebraData bad_form = dual_numbers(Rational(0));
  bad_form.form[1][1] = 1;
  out.push_back({"Q[x]/(x^2) with a non-invariant form", bad_form, false});
  return out;
}

}  // namespace oracle
