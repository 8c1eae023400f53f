// Dimension formulas for spaces of generalized theta functions: the two
// Verlinde sums (fixed-determinant bundles, with and without parabolic
// structure), the rank-scaling factors relating them to the
// varying-determinant stacks, and the degenerate-curve total over A′.
//
// Everything runs through the floating minor route; each result must round
// to an integer within the caller's residual budget or the computation
// fails loudly.
#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "verlinde/characters.hpp"
#include "verlinde/index_sets.hpp"
#include "verlinde/weight_lattice.hpp"

namespace verlinde {

struct DimensionResult {
  long long value = 0;  // rounded integer
  double raw = 0.0;     // pre-rounding value
  double residual = 0.0;
};

namespace detail {

inline DimensionResult round_checked(double raw, double tol, const std::string& what) {
  const double nearest = std::nearbyint(raw);
  const double residual = std::abs(raw - nearest);
  if (residual > tol * std::max(1.0, std::abs(raw)) || nearest < 0) {
    throw RoundingError(what + ": result " + std::to_string(raw) +
                            " is not a nonnegative integer within tolerance",
                        raw, residual);
  }
  DimensionResult r;
  r.value = static_cast<long long>(nearest);
  r.raw = raw;
  r.residual = residual;
  return r;
}

inline void check_args(int n, int kappa, int g, const char* what) {
  if (n < 1 || kappa < 1 || g < 1) {
    throw std::invalid_argument(std::string(what) + ": need n >= 1, kappa >= 1, g >= 1");
  }
}

inline AlcovePoint rho_point(int n, int kappa) { return AlcovePoint(rho(n), kappa); }

// λ = ρ + Σ a′_{n−i+1} ε_i for a vector a′ with 0 = a′_1 <= … <= a′_n <= κ.
inline AlcovePoint lambda_of_aprime(const std::vector<long long>& aprime, int n, int kappa) {
  if (static_cast<int>(aprime.size()) != n) {
    throw std::invalid_argument("dim_spb: a' must have length n");
  }
  if (aprime.front() != 0) throw std::invalid_argument("dim_spb: a'_1 must be 0");
  for (int i = 0; i + 1 < n; ++i) {
    if (aprime[static_cast<std::size_t>(i)] > aprime[static_cast<std::size_t>(i + 1)]) {
      throw std::invalid_argument("dim_spb: a' must be ascending");
    }
  }
  if (aprime.back() > kappa) throw std::invalid_argument("dim_spb: a'_n must be at most kappa");
  std::vector<long long> coords(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    coords[static_cast<std::size_t>(i - 1)] = (n - i) + aprime[static_cast<std::size_t>(n - i)];
  }
  return AlcovePoint(Weight(std::move(coords)), kappa);
}

}  // namespace detail

// (n(n+κ)^{n−1})^{g−1} · Σ_{μ} |J(ρ,μ)|^{2(1−g)} over the level-κ alcove.
inline DimensionResult dim_svb(int n, int kappa, int g, double tol = kDefaultTolerance) {
  detail::check_args(n, kappa, g, "dim_svb");
  const long long m = n + kappa;
  const auto rho_pt = detail::rho_point(n, kappa);
  double sum = 0.0;
  for (const auto& mu : enumerate_alcove(n, kappa)) {
    sum += ipow(j_norm_sq(rho_pt, mu), 1 - g);
  }
  const double raw = ipow(static_cast<double>(n) * ipow(static_cast<double>(m), n - 1), g - 1) * sum;
  return detail::round_checked(raw, tol, "dim_svb");
}

// (n(n+κ)^{n−1})^{g−2} · Σ_{μ} |J(λ,μ)|² |J(ρ,μ)|^{2(1−g)} with λ built
// from a′ by reversing and adding to ρ.
inline DimensionResult dim_spb(int n, int kappa, int g, const std::vector<long long>& aprime,
                               double tol = kDefaultTolerance) {
  detail::check_args(n, kappa, g, "dim_spb");
  const long long m = n + kappa;
  const auto rho_pt = detail::rho_point(n, kappa);
  const auto lambda = detail::lambda_of_aprime(aprime, n, kappa);
  double sum = 0.0;
  for (const auto& mu : enumerate_alcove(n, kappa)) {
    sum += j_norm_sq(lambda, mu) * ipow(j_norm_sq(rho_pt, mu), 1 - g);
  }
  const double raw = ipow(static_cast<double>(n) * ipow(static_cast<double>(m), n - 1), g - 2) * sum;
  return detail::round_checked(raw, tol, "dim_spb");
}

// (κ/n)^g times the fixed-determinant dimension.
inline DimensionResult dim_vb(int n, int kappa, int g, double tol = kDefaultTolerance) {
  const auto svb = dim_svb(n, kappa, g, tol);
  const double raw = ipow(static_cast<double>(kappa) / n, g) * svb.raw;
  return detail::round_checked(raw, tol, "dim_vb");
}

// (κ/n)^{g−1} times the parabolic fixed-determinant dimension of the
// reduced label. Accepts any pair whose reduction lands in SA′ (members of
// A(Δ^κ) and their diagonal shifts do).
inline DimensionResult dim_pb(int n, int kappa, int g, const LabelPair& x,
                              double tol = kDefaultTolerance) {
  detail::check_args(n, kappa, g, "dim_pb");
  if (static_cast<int>(x.a.size()) != n || static_cast<int>(x.b.size()) != n) {
    throw std::invalid_argument("dim_pb: label components must have length n");
  }
  const LabelPair red = reduce_label(x);
  for (int i = 1; i <= n; ++i) {
    const long long expect = red.a[static_cast<std::size_t>(n - 1)] - red.a[static_cast<std::size_t>(n - i)];
    if (red.b[static_cast<std::size_t>(i - 1)] != expect) {
      throw std::invalid_argument("dim_pb: reduced label does not satisfy the SA' pairing");
    }
  }
  const auto spb = dim_spb(n, kappa, g, red.a, tol);
  const double raw = ipow(static_cast<double>(kappa) / n, g - 1) * spb.raw;
  return detail::round_checked(raw, tol, "dim_pb");
}

// Total of dim_pb over the factorization index set A′.
inline DimensionResult dim_gvb(int n, int kappa, int g, double tol = kDefaultTolerance) {
  detail::check_args(n, kappa, g, "dim_gvb");
  double raw = 0.0;
  long long value = 0;
  for (const auto& x : enumerate_A_prime(n, kappa)) {
    const auto part = dim_pb(n, kappa, g, x, tol);
    raw += part.raw;
    value += part.value;
  }
  auto result = detail::round_checked(raw, tol, "dim_gvb");
  if (result.value != value) {
    throw RoundingError("dim_gvb: summand total disagrees with rounded total", raw,
                        result.residual);
  }
  return result;
}

}  // namespace verlinde
