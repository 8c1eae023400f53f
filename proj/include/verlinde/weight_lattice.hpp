// Weight-lattice arithmetic for sl_n: canonical coset representatives,
// the normalized bilinear form, duality and level-truncated alcove
// enumeration together with its subset avatar.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "verlinde/numeric.hpp"

namespace verlinde {

// Element of the sl_n weight lattice P = (⊕ Zε_i)/(Σε_i), stored as the
// unique representative whose last coordinate is zero. Construction accepts
// any representative and shifts it into canonical form, so equality of
// weights is equality of coordinate vectors.
class Weight {
 public:
  explicit Weight(std::vector<long long> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("Weight: rank must be >= 1");
    const long long last = coords_.back();
    if (last != 0) {
      for (auto& c : coords_) c -= last;
    }
  }

  static Weight zero(int n) { return Weight(std::vector<long long>(n, 0)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<long long>& coords() const { return coords_; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<long long> coords_;
};

// (ε_i|ε_j) = δ_ij − 1/n, extended bilinearly. Vanishes on the all-ones
// vector, so the value does not depend on the chosen representatives.
inline Rational killing_form(const Weight& lhs, const Weight& rhs) {
  if (lhs.rank() != rhs.rank()) throw std::invalid_argument("killing_form: rank mismatch");
  const int n = lhs.rank();
  Integer dot = 0, sl = 0, sr = 0;
  for (int i = 0; i < n; ++i) {
    dot += to_integer(lhs.coords()[i]) * to_integer(rhs.coords()[i]);
    sl += to_integer(lhs.coords()[i]);
    sr += to_integer(rhs.coords()[i]);
  }
  Rational out(dot);
  out -= Rational(sl * sr) / n;
  out.canonicalize();
  return out;
}

// Half sum of the positive roots: (n−1, n−2, …, 0).
inline Weight rho(int n) {
  if (n < 1) throw std::invalid_argument("rho: rank must be >= 1");
  std::vector<long long> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[i] = n - 1 - i;
  return Weight(std::move(c));
}

// Highest root ε_1 − ε_n (canonicalized).
inline Weight theta(int n) {
  if (n < 1) throw std::invalid_argument("theta: rank must be >= 1");
  std::vector<long long> c(static_cast<std::size_t>(n), 0);
  c[0] = 1;
  c[n - 1] = -1;
  return Weight(std::move(c));
}

// Dual weight −w0·w where w0 reverses coordinates. Involution.
inline Weight dual(const Weight& w) {
  std::vector<long long> c(w.coords().rbegin(), w.coords().rend());
  for (auto& x : c) x = -x;
  return Weight(std::move(c));
}

// A point of the shifted alcove ρ+P_κ: strictly decreasing coordinates,
// last zero, first at most κ+n−1. These biject with the n-element subsets
// of {0,…,κ+n−1} that contain 0.
struct AlcovePoint {
  Weight weight;
  int level;

  AlcovePoint(Weight w, int kappa) : weight(std::move(w)), level(kappa) {
    if (kappa < 1) throw std::invalid_argument("AlcovePoint: level must be >= 1");
    const auto& c = weight.coords();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i] <= c[i + 1]) throw std::invalid_argument("AlcovePoint: coords must strictly decrease");
    }
    if (c.front() > kappa + weight.rank() - 1) {
      throw std::invalid_argument("AlcovePoint: first coordinate exceeds level bound");
    }
  }

  friend bool operator==(const AlcovePoint& a, const AlcovePoint& b) {
    return a.level == b.level && a.weight == b.weight;
  }
};

namespace detail {

inline void decreasing_tails(int n, int pos, long long hi, std::vector<long long>& acc,
                             std::vector<std::vector<long long>>& out) {
  if (pos == n - 1) {
    acc[static_cast<std::size_t>(pos)] = 0;  // canonical representative
    out.push_back(acc);
    return;
  }
  // Position pos still needs n−1−pos strictly smaller values down to 0.
  const long long lo = n - 1 - pos;
  for (long long v = lo; v <= hi; ++v) {
    acc[static_cast<std::size_t>(pos)] = v;
    decreasing_tails(n, pos + 1, v - 1, acc, out);
  }
}

}  // namespace detail

// All of ρ+P_κ in lexicographically increasing coordinate order.
// Cardinality binomial(n+κ−1, n−1).
inline std::vector<AlcovePoint> enumerate_alcove(int n, int kappa) {
  if (n < 1 || kappa < 1) throw std::invalid_argument("enumerate_alcove: need n >= 1 and kappa >= 1");
  std::vector<std::vector<long long>> coord_lists;
  std::vector<long long> acc(static_cast<std::size_t>(n), 0);
  detail::decreasing_tails(n, 0, kappa + n - 1, acc, coord_lists);
  std::vector<AlcovePoint> out;
  out.reserve(coord_lists.size());
  for (auto& c : coord_lists) out.emplace_back(Weight(std::move(c)), kappa);
  return out;
}

// Subset avatar {coords…} ⊆ {0,…,m−1}, ascending. Contains 0.
inline std::vector<int> to_subset(const AlcovePoint& p) {
  std::vector<int> s;
  s.reserve(p.weight.coords().size());
  for (auto it = p.weight.coords().rbegin(); it != p.weight.coords().rend(); ++it) {
    s.push_back(static_cast<int>(*it));
  }
  return s;
}

// γ(λ) = κ+n−1−λ_1, the multiplicity weight of the degeneration identity.
// Equals (m−1) − max(to_subset(λ)) with m = κ+n; always in [0, m−n].
inline long long gamma_weight(const AlcovePoint& p) {
  return p.level + p.weight.rank() - 1 - p.weight.coords().front();
}

}  // namespace verlinde
