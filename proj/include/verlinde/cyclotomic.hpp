// Exact arithmetic in the ring of cyclotomic integers Z[ζ_m], realized as
// integer polynomials reduced modulo the m-th cyclotomic polynomial Φ_m.
// Reduction modulo Φ_m (rather than x^m−1) makes equality of ring elements
// literal equality of coefficient vectors.
#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verlinde/numeric.hpp"

namespace verlinde {

namespace detail {

// Quotient of a by the monic polynomial b; remainder is written back into a.
// Coefficient vectors are ascending in degree.
inline std::vector<Integer> divide_monic(std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  std::vector<Integer> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return q;
}

}  // namespace detail

// Monic m-th cyclotomic polynomial, ascending coefficients, degree φ(m).
// Computed by dividing x^m−1 by Φ_d over the proper divisors d of m.
inline std::vector<Integer> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  static std::map<int, std::vector<Integer>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto phi_d = cyclotomic_polynomial(d);
    poly = detail::divide_monic(poly, phi_d);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

// Euler phi via the degree of Φ_m.
inline int cyclotomic_degree(int m) {
  return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

// A cyclotomic integer in reduced form: coefficients over the power basis
// 1, ζ_m, …, ζ_m^{φ(m)−1}.
class CycInt {
 public:
  CycInt(int m, std::vector<Integer> raw) : m_(m) {
    if (m < 1) throw std::invalid_argument("CycInt: m must be >= 1");
    const auto& phi = cyclotomic_polynomial(m);
    if (raw.size() >= phi.size()) detail::divide_monic(raw, phi);
    raw.resize(phi.size() - 1, 0);
    c_ = std::move(raw);
  }

  static CycInt zero(int m) { return CycInt(m, {}); }
  static CycInt one(int m) { return from_integer(m, 1); }
  static CycInt from_integer(int m, Integer v) { return CycInt(m, {std::move(v)}); }

  // ζ_m^k, exponent taken modulo m.
  static CycInt root_power(int m, long long k) {
    long long e = k % m;
    if (e < 0) e += m;
    std::vector<Integer> raw(static_cast<std::size_t>(e) + 1, 0);
    raw.back() = 1;
    return CycInt(m, std::move(raw));
  }

  int order() const { return m_; }
  const std::vector<Integer>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    check_same_order(a, b);
    std::vector<Integer> raw = a.c_;
    for (std::size_t i = 0; i < b.c_.size(); ++i) raw[i] += b.c_[i];
    return CycInt(a.m_, std::move(raw));
  }

  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    check_same_order(a, b);
    std::vector<Integer> raw = a.c_;
    for (std::size_t i = 0; i < b.c_.size(); ++i) raw[i] -= b.c_[i];
    return CycInt(a.m_, std::move(raw));
  }

  CycInt operator-() const {
    std::vector<Integer> raw = c_;
    for (auto& x : raw) x = -x;
    return CycInt(m_, std::move(raw));
  }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    check_same_order(a, b);
    std::vector<Integer> raw(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
    }
    return CycInt(a.m_, std::move(raw));
  }

  CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
  CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  // Image under ζ ↦ ζ^{−1}; an involution.
  CycInt conjugate() const {
    std::vector<Integer> raw(static_cast<std::size_t>(m_), 0);
    if (m_ == 1) raw = c_;
    else {
      for (std::size_t k = 0; k < c_.size(); ++k) {
        raw[k == 0 ? 0 : static_cast<std::size_t>(m_) - k] += c_[k];
      }
    }
    return CycInt(m_, std::move(raw));
  }

  // The rational-integer value if the reduced form has degree zero.
  std::optional<Integer> as_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return std::nullopt;
    }
    return c_[0];
  }

  // Evaluation at ζ_m = exp(2πi/m) in double precision.
  std::complex<double> embed() const {
    const double angle = 2.0 * std::numbers::pi / m_;
    const std::complex<double> zeta = std::polar(1.0, angle);
    std::complex<double> acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * zeta + c_[i].get_d();
    return acc;
  }

 private:
  static void check_same_order(const CycInt& a, const CycInt& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("CycInt: mixed root orders");
  }

  int m_;
  std::vector<Integer> c_;
};

// Exact determinant of a square matrix over Z[ζ_m]. Cofactor expansion up
// to size 4, division-free expansion over column subsets above that.
inline CycInt det_exact(const std::vector<std::vector<CycInt>>& a, int size_cap = 6) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("det_exact: empty matrix");
  if (n > size_cap) throw std::invalid_argument("det_exact: size exceeds cap");
  const int m = a[0][0].order();
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det_exact: matrix not square");
    for (const auto& x : row) {
      if (x.order() != m) throw std::invalid_argument("det_exact: mixed root orders");
    }
  }
  if (n <= 4) {
    // Plain cofactor expansion along the first row.
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
    struct Rec {
      const std::vector<std::vector<CycInt>>& mat;
      int order;
      CycInt run(int row, std::vector<int>& cs) {
        if (cs.size() == 1) return mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(cs[0])];
        CycInt acc = CycInt::zero(order);
        for (std::size_t j = 0; j < cs.size(); ++j) {
          const int col = cs[j];
          std::vector<int> rest;
          rest.reserve(cs.size() - 1);
          for (std::size_t k = 0; k < cs.size(); ++k) {
            if (k != j) rest.push_back(cs[k]);
          }
          CycInt term = mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * run(row + 1, rest);
          if (j % 2 == 0) acc += term;
          else acc -= term;
        }
        return acc;
      }
    } rec{a, m};
    return rec.run(0, cols);
  }
  // Subset expansion: minors[S] is the determinant of the top-|S| rows on
  // column set S. Division-free, 2^n space.
  std::vector<CycInt> minors(1u << n, CycInt::zero(m));
  minors[0] = CycInt::one(m);
  for (unsigned s = 1; s < (1u << n); ++s) {
    const int rows = __builtin_popcount(s);
    CycInt acc = CycInt::zero(m);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      CycInt term = a[static_cast<std::size_t>(rows - 1)][static_cast<std::size_t>(j)] * minors[s & ~(1u << j)];
      if ((rows - 1 - pos) % 2 == 0) acc += term;
      else acc -= term;
      ++pos;
    }
    minors[s] = acc;
  }
  return minors[(1u << n) - 1];
}

}  // namespace verlinde
