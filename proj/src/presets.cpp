#include "vlie/presets.hpp"

#include <algorithm>

namespace vlie {

namespace {

using Tensor3 = std::vector<std::vector<std::vector<Rational>>>;
using Matrix = std::vector<std::vector<Rational>>;

Tensor3 zero_tensor(std::size_t n) {
  return Tensor3(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
}

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Rational>(n, Rational(0))); }

Element combination(const std::vector<Rational>& coeffs, const std::vector<BasisId>& ids, int dpow = 0) {
  Element e;
  for (std::size_t k = 0; k < coeffs.size(); ++k) e.add(DTerm{dpow, ids[k]}, coeffs[k]);
  return e;
}

std::vector<Rational> vec_add(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

std::vector<Rational> AlgebraData::mul(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  std::vector<Rational> out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < dim(); ++k) out[k] += x[i] * y[j] * product[i][j][k];
    }
  }
  return out;
}

Rational AlgebraData::pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) s += x[i] * y[j] * form[i][j];
  return s;
}

std::vector<Rational> AlgebraData::unit(std::size_t i) const {
  std::vector<Rational> e(dim(), Rational(0));
  e[i] = 1;
  return e;
}

LieData make_lie_data(std::vector<std::string> labels) {
  const auto n = labels.size();
  return LieData{std::move(labels), zero_tensor(n), zero_matrix(n)};
}

AlgebraData make_algebra_data(std::vector<std::string> labels) {
  const auto n = labels.size();
  return AlgebraData{std::move(labels), zero_tensor(n), zero_matrix(n)};
}

std::vector<std::string> validate_lie_data(const LieData& g) {
  std::vector<std::string> out;
  const auto n = g.dim();
  if (g.bracket.size() != n || g.form.size() != n) {
    out.push_back("table sizes do not match the dimension");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.form[i][j] != g.form[j][i]) out.push_back("form not symmetric at (" + g.labels[i] + "," + g.labels[j] + ")");
      for (std::size_t k = 0; k < n; ++k)
        if (g.bracket[i][j][k] != -g.bracket[j][i][k])
          out.push_back("bracket not antisymmetric at (" + g.labels[i] + "," + g.labels[j] + ")");
    }
  }
  // <[x,y],z> = <x,[y,z]>
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < n; ++k) {
          lhs += g.bracket[x][y][k] * g.form[k][z];
          rhs += g.form[x][k] * g.bracket[y][z][k];
        }
        if (lhs != rhs)
          out.push_back("form not invariant at (" + g.labels[x] + "," + g.labels[y] + "," + g.labels[z] + ")");
      }
  return out;
}

LieData sl2_data() {
  LieData g = make_lie_data({"e", "h", "f"});
  enum { e, h, f };
  auto set = [&](int i, int j, int k, long c) {
    g.bracket[i][j][k] = c;
    g.bracket[j][i][k] = -c;
  };
  set(e, f, h, 1);
  set(h, e, e, 2);
  set(h, f, f, -2);
  g.form[e][f] = g.form[f][e] = 1;
  g.form[h][h] = 2;
  return g;
}

LieData heisenberg_data(std::size_t rank) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rank; ++i) labels.push_back(rank == 1 ? "x" : "x" + std::to_string(i + 1));
  LieData g = make_lie_data(std::move(labels));
  for (std::size_t i = 0; i < rank; ++i) g.form[i][i] = 1;
  return g;
}

LieData abelian_data(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  return make_lie_data(std::move(labels));
}

FormulaSpec affine(const LieData& g) {
  if (auto bad = validate_lie_data(g); !bad.empty()) throw Error("invalid LieData: " + bad.front());
  FormulaSpec spec;
  spec.name = "affine";
  std::vector<BasisId> ids;
  for (const auto& label : g.labels) ids.push_back(spec.add_basis(label, Parity::even, Rational(1)));
  const BasisId c = spec.add_basis("c", Parity::even, Rational(0));
  spec.central = c;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      spec.set_product(ids[i], 0, ids[j], combination(g.bracket[i][j], ids));
      spec.set_product(ids[i], 1, ids[j], basis_element(c, 0, g.form[i][j]));
    }
  }
  return spec;
}

FormulaSpec virasoro() {
  FormulaSpec spec;
  spec.name = "virasoro";
  const BasisId w = spec.add_basis("ω", Parity::even, Rational(2));
  const BasisId c = spec.add_basis("c", Parity::even, Rational(0));
  spec.central = c;
  spec.omega = w;
  spec.set_product(w, 0, w, basis_element(w, 1));
  spec.set_product(w, 1, w, basis_element(w, 0, 2));
  spec.set_product(w, 3, w, basis_element(c, 0, make_rational(1, 2)));
  return spec;
}

FormulaSpec neveu_schwarz() {
  FormulaSpec spec;
  spec.name = "neveu-schwarz";
  const BasisId w = spec.add_basis("ω", Parity::even, Rational(2));
  const BasisId t = spec.add_basis("τ", Parity::odd, make_rational(3, 2));
  const BasisId c = spec.add_basis("c", Parity::even, Rational(0));
  spec.central = c;
  spec.omega = w;
  spec.set_product(w, 0, w, basis_element(w, 1));
  spec.set_product(w, 1, w, basis_element(w, 0, 2));
  spec.set_product(w, 3, w, basis_element(c, 0, make_rational(1, 2)));
  spec.set_product(t, 0, t, basis_element(w, 0, 2));
  spec.set_product(t, 2, t, basis_element(c, 0, make_rational(2, 3)));
  spec.set_product(w, 0, t, basis_element(t, 1));
  spec.set_product(w, 1, t, basis_element(t, 0, make_rational(3, 2)));
  spec.set_product(t, 0, w, basis_element(t, 1, make_rational(1, 2)));
  spec.set_product(t, 1, w, basis_element(t, 0, make_rational(3, 2)));
  return spec;
}

namespace {

void check_algebra(const AlgebraData& b) {
  const auto n = b.dim();
  if (b.product.size() != n || b.form.size() != n) throw Error("invalid tables: sizes do not match the dimension");
  for (const auto& row : b.product) {
    if (row.size() != n) throw Error("invalid tables: product row size");
    for (const auto& entry : row)
      if (entry.size() != n) throw Error("invalid tables: product entry size");
  }
  for (const auto& row : b.form)
    if (row.size() != n) throw Error("invalid tables: form row size");
}

// Y(u,z)v = D(u.v)/z + (first-order term)/z^2 + (1/2)<u,v>c/z^4
FormulaSpec quadratic_formula(const AlgebraData& b, bool commutative_variant) {
  check_algebra(b);
  FormulaSpec spec;
  std::vector<BasisId> ids;
  for (const auto& label : b.labels) ids.push_back(spec.add_basis(label, Parity::even, Rational(2)));
  const BasisId c = spec.add_basis("c", Parity::even, Rational(0));
  spec.central = c;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const auto uv = b.product[i][j];
      spec.set_product(ids[i], 0, ids[j], combination(uv, ids, 1));
      auto first = commutative_variant ? vec_add(uv, uv) : vec_add(uv, b.product[j][i]);
      spec.set_product(ids[i], 1, ids[j], combination(first, ids));
      spec.set_product(ids[i], 3, ids[j], basis_element(c, 0, b.form[i][j] / 2));
    }
  }
  return spec;
}

}  // namespace

FormulaSpec novikov(const AlgebraData& b) {
  FormulaSpec spec = quadratic_formula(b, false);
  spec.name = "novikov";
  return spec;
}

FormulaSpec comm_assoc(const AlgebraData& b) {
  check_algebra(b);
  const auto n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b.product[i][j] != b.product[j][i]) throw Error("invalid tables: product not commutative");
      for (std::size_t k = 0; k < n; ++k)
        if (b.mul(b.mul(b.unit(i), b.unit(j)), b.unit(k)) != b.mul(b.unit(i), b.mul(b.unit(j), b.unit(k))))
          throw Error("invalid tables: product not associative");
    }
  std::optional<std::size_t> identity;
  for (std::size_t i = 0; i < n && !identity; ++i) {
    bool is_identity = true;
    for (std::size_t j = 0; j < n; ++j)
      if (b.mul(b.unit(i), b.unit(j)) != b.unit(j)) is_identity = false;
    if (is_identity) identity = i;
  }
  if (!identity) throw Error("invalid tables: no identity basis vector");
  if (b.form[*identity][*identity] != 1) throw Error("invalid tables: <omega,omega> != 1");
  FormulaSpec spec = quadratic_formula(b, true);
  spec.name = "comm-assoc";
  spec.omega = BasisId{*identity};
  return spec;
}

AlgebraData trivial_algebra() {
  AlgebraData b = make_algebra_data({"ω"});
  b.product[0][0][0] = 1;
  b.form[0][0] = 1;
  return b;
}

AlgebraData lambda_algebra(const std::vector<Rational>& lambda) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lambda.size(); ++i) labels.push_back("b" + std::to_string(i + 1));
  AlgebraData b = make_algebra_data(std::move(labels));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      b.product[i][j][j] = lambda[i];
      b.form[i][j] = lambda[i] * lambda[j];
    }
  return b;
}

AlgebraData flipped_lambda_algebra(const std::vector<Rational>& lambda) {
  AlgebraData b = lambda_algebra(lambda);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      std::fill(b.product[i][j].begin(), b.product[i][j].end(), Rational(0));
      b.product[i][j][i] = lambda[j];
    }
  return b;
}

AlgebraData dual_numbers(const Rational& t) {
  AlgebraData b = make_algebra_data({"ω", "x"});
  b.product[0][0][0] = 1;
  b.product[0][1][1] = 1;
  b.product[1][0][1] = 1;
  // phi(1) = 1, phi(x) = t
  b.form[0][0] = 1;
  b.form[0][1] = b.form[1][0] = t;
  b.form[1][1] = 0;
  return b;
}

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog = {
      {"virasoro", "Virasoro formula: omega (weight 2), central c"},
      {"neveu-schwarz", "Neveu-Schwarz formula: omega, odd tau (weight 3/2), central c"},
      {"affine-sl2", "affine sl2 with <e,f> = 1, <h,h> = 2"},
      {"heisenberg", "Heisenberg formula of rank --dim (default 1), <x_i,x_j> = delta_ij"},
      {"loop-abelian", "abelian loop formula of dimension --dim, zero form"},
      {"novikov-lambda", "Novikov formula for u.v = lambda(u)v on Q^dim, lambda = (1,0,...)"},
      {"novikov-flipped", "formula for the non-Novikov product u.v = lambda(v)u on Q^dim"},
      {"dual-numbers", "commutative associative Q[x]/(x^2) with identity omega"},
  };
  return catalog;
}

FormulaSpec make_preset(std::string_view name, std::size_t dim) {
  auto lambda_vector = [&](std::size_t fallback) {
    std::vector<Rational> lambda(dim == 0 ? fallback : dim, Rational(0));
    lambda[0] = 1;
    return lambda;
  };
  FormulaSpec spec;
  if (name == "virasoro") {
    spec = virasoro();
  } else if (name == "neveu-schwarz") {
    spec = neveu_schwarz();
  } else if (name == "affine-sl2") {
    spec = affine(sl2_data());
  } else if (name == "heisenberg") {
    spec = affine(heisenberg_data(dim == 0 ? 1 : dim));
  } else if (name == "loop-abelian") {
    spec = affine(abelian_data(dim == 0 ? 1 : dim));
  } else if (name == "novikov-lambda") {
    spec = novikov(lambda_algebra(lambda_vector(2)));
  } else if (name == "novikov-flipped") {
    spec = novikov(flipped_lambda_algebra(lambda_vector(2)));
  } else if (name == "dual-numbers") {
    spec = comm_assoc(dual_numbers(Rational(0)));
  } else {
    throw Error("unknown preset '" + std::string(name) + "'");
  }
  spec.name = std::string(name);
  return spec;
}

}  // namespace vlie
