// The character sum J(λ,μ) by two routes: the signed Weyl-group sum (kept
// as a cross-check oracle) and minors of the order-m DFT matrix (ζ_m^{ab}),
// in floating and exact arithmetic. The production quantity is |J|²; J
// itself carries a representative-dependent phase.
#pragma once

#include <algorithm>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "verlinde/cyclotomic.hpp"
#include "verlinde/weight_lattice.hpp"

namespace verlinde {

// Row/column index sets of an n×n minor of the DFT matrix M_m.
struct MinorIndex {
  int m;
  std::vector<int> rows;
  std::vector<int> cols;

  MinorIndex(int m_, std::vector<int> rows_, std::vector<int> cols_)
      : m(m_), rows(std::move(rows_)), cols(std::move(cols_)) {
    if (m < 1) throw std::invalid_argument("MinorIndex: m must be >= 1");
    if (rows.size() != cols.size() || rows.empty()) {
      throw std::invalid_argument("MinorIndex: row and column sets must be nonempty of equal size");
    }
    validate_set(rows);
    validate_set(cols);
  }

 private:
  void validate_set(const std::vector<int>& s) const {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= m) throw std::invalid_argument("MinorIndex: index out of range");
      if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("MinorIndex: indices must strictly increase");
    }
  }
};

inline MinorIndex minor_index_of(const AlcovePoint& lambda, const AlcovePoint& mu) {
  if (lambda.weight.rank() != mu.weight.rank() || lambda.level != mu.level) {
    throw std::invalid_argument("minor_index_of: rank or level mismatch");
  }
  const int m = lambda.level + lambda.weight.rank();
  return MinorIndex(m, to_subset(lambda), to_subset(mu));
}

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Determinant by LU with partial pivoting; matrices here are tiny.
inline std::complex<double> lu_det(std::vector<std::vector<std::complex<double>>> a) {
  const std::size_t n = a.size();
  std::complex<double> det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
    }
    if (std::abs(a[pivot][k]) == 0.0) return 0.0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::complex<double> f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace detail

// Full signed Weyl-group sum Σ_w sign(w) exp(2πi (w(λ)|μ)/(n+κ)).
// Terms are accumulated in lexicographic permutation order and reduced
// pairwise. Guarded at rank 7 (n! growth).
inline std::complex<double> j_weyl_sum(const Weight& lambda, const Weight& mu, int kappa) {
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("j_weyl_sum: rank mismatch");
  const int n = lambda.rank();
  if (n > 7) throw std::invalid_argument("j_weyl_sum: rank exceeds factorial guard (7)");
  if (kappa < 1) throw std::invalid_argument("j_weyl_sum: kappa must be >= 1");
  const long long m = n + kappa;
  long long sum_l = 0, sum_m = 0;
  for (int i = 0; i < n; ++i) {
    sum_l += lambda.coords()[i];
    sum_m += mu.coords()[i];
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::complex<double>> terms;
  do {
    long long dot = 0;
    for (int i = 0; i < n; ++i) {
      dot += lambda.coords()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] * mu.coords()[static_cast<std::size_t>(i)];
    }
    // n·(w(λ)|μ) is the integer n·dot − (Σλ)(Σμ); the phase lives in the
    // (nm)-th roots of unity.
    const long long num = n * dot - sum_l * sum_m;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(n * m);
    const double sign = detail::permutation_sign(perm) > 0 ? 1.0 : -1.0;
    terms.push_back(sign * std::polar(1.0, angle));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return pairwise_sum(std::move(terms));
}

// det(ζ_m^{ab})_{a∈rows, b∈cols} in double precision via LU.
inline std::complex<double> minor_det(const MinorIndex& idx) {
  const std::size_t n = idx.rows.size();
  const double angle = 2.0 * std::numbers::pi / idx.m;
  std::vector<std::vector<std::complex<double>>> mat(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long long e = static_cast<long long>(idx.rows[i]) * idx.cols[j] % idx.m;
      mat[i][j] = std::polar(1.0, angle * static_cast<double>(e));
    }
  }
  return detail::lu_det(std::move(mat));
}

// Same minor as an exact cyclotomic integer.
inline CycInt minor_det_exact(const MinorIndex& idx, int size_cap = 6) {
  const std::size_t n = idx.rows.size();
  std::vector<std::vector<CycInt>> mat(n, std::vector<CycInt>(n, CycInt::zero(idx.m)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mat[i][j] = CycInt::root_power(idx.m, static_cast<long long>(idx.rows[i]) * idx.cols[j]);
    }
  }
  return det_exact(mat, size_cap);
}

// |J(λ,μ)|² = |Δ_{A,B}|² through the minor route.
inline double j_norm_sq(const AlcovePoint& lambda, const AlcovePoint& mu) {
  return std::norm(minor_det(minor_index_of(lambda, mu)));
}

// Exact Δ·conj(Δ); the result is fixed by conjugation.
inline CycInt j_norm_sq_exact(const AlcovePoint& lambda, const AlcovePoint& mu) {
  const CycInt d = minor_det_exact(minor_index_of(lambda, mu));
  return d * d.conjugate();
}

// m^{−n}|Δ_{A,B}|², the squared modulus of the unitary-normalized minor.
inline double delta_star_norm_sq(const MinorIndex& idx) {
  return std::norm(minor_det(idx)) * ipow(1.0 / idx.m, static_cast<long long>(idx.rows.size()));
}

}  // namespace verlinde
