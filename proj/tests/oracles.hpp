#ifndef VLIE_TESTS_ORACLES_HPP
#define VLIE_TESTS_ORACLES_HPP

// Independent reference computations used by the unit and acceptance suites.

#include "vlie/local_lie.hpp"
#include "vlie/presets.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using vlie::Rational;

/// Number of multisets of parts from `parts` (each usable any number of times)
/// summing to `total`, by explicit enumeration.
std::uint64_t count_multisets(const std::vector<int>& parts, int total);

/// Partitions of n into parts >= min_part.
std::uint64_t partitions(int n, int min_part = 1);

/// Weight-w pieces (doubled units) of a free theory with even generators of
/// doubled weights `even` and odd generators of doubled weights `odd`, by
/// enumerating all (multiset, subset) pairs.
std::uint64_t super_count(const std::vector<int>& even, const std::vector<int>& odd, int doubled_weight);

/// (n-m) omega_{n+m+1} + (1/2) C(n+1,3) delta_{n+m,0} c_{-1}
vlie::LieElement virasoro_bracket(int n, int m, vlie::BasisId omega, vlie::BasisId c);

/// Coefficient of z^{-n-1} in (d/dz)^p (D - d/dz)^q Y(u,z)v, expanded as formal
/// Laurent polynomials; A = sum over terms of D^p u, B likewise.
vlie::Element series_product(const vlie::FormulaSpec& spec, const vlie::Element& a, int n, const vlie::Element& b);

/// Rank of a list of rational vectors by dense Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<Rational>> rows);

/// Random formula with `dim` basis vectors, mixed parities, no weights.
vlie::FormulaSpec random_formula(std::mt19937& rng, std::size_t dim, int n_max, int k_max);

vlie::Element random_element(std::mt19937& rng, const vlie::FormulaSpec& spec, int max_dpow, int terms);

/// Novikov sample algebras with the expected outcome of the identity check.
struct NovikovCase {
  const char* name;
  vlie::AlgebraData algebra;
  bool novikov;
};
std::vector<NovikovCase> novikov_cases();

}  // namespace oracle

#endif  // VLIE_TESTS_ORACLES_HPP
