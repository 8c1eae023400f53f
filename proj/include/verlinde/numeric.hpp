// Shared numeric primitives: arbitrary-precision scalars, error types,
// integer powers and pairwise summation.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace verlinde {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Mode { Exact, Float };

inline const char* to_string(Mode mode) {
  return mode == Mode::Exact ? "exact" : "float";
}

inline constexpr double kDefaultTolerance = 1e-6;

// A value that must round to an integer missed its residual budget.
class RoundingError : public std::runtime_error {
 public:
  RoundingError(const std::string& what, double raw, double residual)
      : std::runtime_error(what), raw_(raw), residual_(residual) {}
  double raw() const { return raw_; }
  double residual() const { return residual_; }

 private:
  double raw_;
  double residual_;
};

// The coordinate bounds of a label enumeration failed to close.
class UnboundedIndexSetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// gmpxx has no long long overloads; these are the interop points.
static_assert(sizeof(long) >= 8, "GMP interop assumes 64-bit long");
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline Rational to_rational(long long num, long long den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer acc = 1;
  for (long long i = 0; i < k; ++i) {
    acc *= static_cast<long>(n - i);
    acc /= static_cast<long>(i + 1);
  }
  if (!acc.fits_slong_p()) throw std::overflow_error("binomial: result overflow");
  return acc.get_si();
}

inline long long ipow_ll(long long x, long long e) {
  long long acc = 1;
  for (long long i = 0; i < e; ++i) acc *= x;
  return acc;
}

// x^e for integer e, reciprocal for negative exponents.
inline double ipow(double x, long long e) {
  if (e < 0) return 1.0 / ipow(x, -e);
  double acc = 1.0;
  double base = x;
  for (long long k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return acc;
}

// Tree reduction; keeps rounding error logarithmic in the number of terms.
inline std::complex<double> pairwise_sum(std::vector<std::complex<double>> terms) {
  if (terms.empty()) return {0.0, 0.0};
  while (terms.size() > 1) {
    std::vector<std::complex<double>> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms.front();
}

}  // namespace verlinde
