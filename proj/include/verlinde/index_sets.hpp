// Label-pair index sets: the general boundary-stratum sets A_{I,J}(L) of a
// line bundle presentation on the compactified isomorphism space, their
// closed form for powers of the theta presentation Δ^κ, the factorization
// sets A′, A″, SA′ and the two-parameter bookkeeping sets A_{p,q}, A′_{p,q}.
//
// Index conventions: entries of a and b are 1-indexed in the math and
// 0-indexed in code; the exponent vectors m_i, l_i and the stratum sets
// I, J are 0-indexed in both.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "verlinde/numeric.hpp"

namespace verlinde {

struct LabelPair {
  std::vector<long long> a;
  std::vector<long long> b;

  friend bool operator==(const LabelPair& x, const LabelPair& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const LabelPair& x, const LabelPair& y) { return !(x == y); }
  friend bool operator<(const LabelPair& x, const LabelPair& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")|(";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
  }
};

// Exponent data (m_0..m_{n−1}, l_0..l_{n−1}, e, d) presenting a line bundle
// on the compactification.
struct BundleExponents {
  int n;
  std::vector<long long> m_exp;
  std::vector<long long> l_exp;
  long long e = 0;
  long long d = 0;

  BundleExponents(int n_, std::vector<long long> m_, std::vector<long long> l_, long long e_, long long d_)
      : n(n_), m_exp(std::move(m_)), l_exp(std::move(l_)), e(e_), d(d_) {
    if (n < 1) throw std::invalid_argument("BundleExponents: n must be >= 1");
    if (m_exp.size() != static_cast<std::size_t>(n) || l_exp.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("BundleExponents: exponent vectors must have length n");
    }
  }

  // The κ-th power of the theta presentation: m_i = κ(n−i), l_i = 0,
  // e = 0, d = κ.
  static BundleExponents delta_power(int n, int kappa) {
    if (kappa < 1) throw std::invalid_argument("delta_power: kappa must be >= 1");
    std::vector<long long> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = static_cast<long long>(kappa) * (n - i);
    return BundleExponents(n, std::move(m), std::vector<long long>(static_cast<std::size_t>(n), 0), 0, kappa);
  }
};

// A boundary stratum: subsets I, J of [0, n−1] with min(I)+min(J) >= n,
// where min(∅) = n.
struct StratumIndex {
  std::vector<int> I;
  std::vector<int> J;

  StratumIndex(std::vector<int> I_ = {}, std::vector<int> J_ = {}) : I(std::move(I_)), J(std::move(J_)) {
    normalize(I);
    normalize(J);
  }

  int min_I(int n) const { return I.empty() ? n : I.front(); }
  int min_J(int n) const { return J.empty() ? n : J.front(); }

  bool valid(int n) const {
    if (!in_range(I, n) || !in_range(J, n)) return false;
    return min_I(n) + min_J(n) >= n;
  }

 private:
  static void normalize(std::vector<int>& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  static bool in_range(const std::vector<int>& s, int n) {
    for (int v : s) {
      if (v < 0 || v >= n) return false;
    }
    return true;
  }
};

namespace detail {

inline void require_valid_stratum(const StratumIndex& s, int n) {
  if (!s.valid(n)) throw std::invalid_argument("stratum index invalid: need I,J ⊆ [0,n-1] with min(I)+min(J) >= n");
}

// Ascending integer vectors of the given length with entries in [lo, hi],
// lexicographic order.
inline std::vector<std::vector<long long>> ascending_vectors(int len, long long lo, long long hi) {
  std::vector<std::vector<long long>> out;
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  if (lo > hi) return out;
  std::vector<long long> acc(static_cast<std::size_t>(len));
  struct Rec {
    int len;
    long long hi;
    std::vector<long long>& acc;
    std::vector<std::vector<long long>>& out;
    void run(int pos, long long lo) {
      if (pos == len) {
        out.push_back(acc);
        return;
      }
      for (long long v = lo; v <= hi; ++v) {
        acc[static_cast<std::size_t>(pos)] = v;
        run(pos + 1, v);
      }
    }
  } rec{len, hi, acc, out};
  rec.run(0, lo);
  return out;
}

inline bool contains(const std::vector<int>& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace detail

// The general stratum label set of the bundle presentation L, enumerated in
// lexicographic order of a. Members (a,b) satisfy, with i1 = min(I) and
// j1 = min(J):
//   (1) a ascending;
//   (2) Σ_{j>i} (a_j − e) <= m_i for i in [n−j1, n−1], equality on I;
//   (3) Σ_{j<=n−i} (a_j − e) >= −l_i for i in [n−i1, n−1], equality on J;
//   (4) a_i − e = −b_{n−i+1} + d.
// Finiteness is certified first: the top entry is bounded by the i = n−1
// tail constraint when j1 >= 1 and otherwise by the equality the stratum
// forces through 0 ∈ J; the bottom entry symmetrically (0 ∈ I). If no bound
// can be derived the enumeration refuses to run.
inline std::vector<LabelPair> enumerate_A_general(const BundleExponents& L, const StratumIndex& s) {
  const int n = L.n;
  detail::require_valid_stratum(s, n);
  const int i1 = s.min_I(n);
  const int j1 = s.min_J(n);

  std::optional<long long> hi;  // bound on a_n − e
  if (j1 >= 1) {
    hi = L.m_exp[static_cast<std::size_t>(n - 1)];
  } else if (detail::contains(s.J, 0)) {
    hi = n >= 2 ? -L.l_exp[0] + L.l_exp[1] : -L.l_exp[0];
  }
  std::optional<long long> lo;  // bound on a_1 − e
  if (i1 >= 1) {
    lo = -L.l_exp[static_cast<std::size_t>(n - 1)];
  } else if (detail::contains(s.I, 0)) {
    lo = n >= 2 ? L.m_exp[0] - L.m_exp[1] : L.m_exp[0];
  }
  if (!hi || !lo) {
    throw UnboundedIndexSetError("unbounded index set: no tail constraint closes the coordinate bounds");
  }

  std::vector<LabelPair> out;
  for (const auto& shifted : detail::ascending_vectors(n, *lo, *hi)) {
    // shifted holds a_j − e.
    bool ok = true;
    for (int i = n - j1; ok && i <= n - 1; ++i) {
      long long tail = 0;
      for (int j = i + 1; j <= n; ++j) tail += shifted[static_cast<std::size_t>(j - 1)];
      if (detail::contains(s.I, i) ? tail != L.m_exp[static_cast<std::size_t>(i)]
                                   : tail > L.m_exp[static_cast<std::size_t>(i)]) {
        ok = false;
      }
    }
    for (int i = n - i1; ok && i <= n - 1; ++i) {
      long long head = 0;
      for (int j = 1; j <= n - i; ++j) head += shifted[static_cast<std::size_t>(j - 1)];
      if (detail::contains(s.J, i) ? head != -L.l_exp[static_cast<std::size_t>(i)]
                                   : head < -L.l_exp[static_cast<std::size_t>(i)]) {
        ok = false;
      }
    }
    if (!ok) continue;
    LabelPair x;
    x.a.resize(static_cast<std::size_t>(n));
    x.b.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) x.a[static_cast<std::size_t>(i - 1)] = shifted[static_cast<std::size_t>(i - 1)] + L.e;
    for (int i = 1; i <= n; ++i) {
      x.b[static_cast<std::size_t>(n - i)] = L.d - shifted[static_cast<std::size_t>(i - 1)];
    }
    out.push_back(std::move(x));
  }
  return out;
}

// Closed form of the stratum sets for the Δ^κ presentation: with i1 = min(I),
// j1 = min(J), the labels are the ascending a in [0,κ]^n with a_i = 0 for
// i <= n−j1 and a_i = κ for i > i1, paired with b_i = κ − a_{n−i+1}.
inline std::vector<LabelPair> enumerate_A_delta(int n, int kappa, const StratumIndex& s = {}) {
  if (n < 1 || kappa < 1) throw std::invalid_argument("enumerate_A_delta: need n >= 1 and kappa >= 1");
  detail::require_valid_stratum(s, n);
  const int i1 = s.min_I(n);
  const int j1 = s.min_J(n);
  const int zeros = n - j1;      // a_1..a_zeros pinned to 0
  const int free_hi = i1;        // a_{i1+1}..a_n pinned to κ
  std::vector<LabelPair> out;
  for (const auto& mid : detail::ascending_vectors(free_hi - zeros, 0, kappa)) {
    LabelPair x;
    x.a.assign(static_cast<std::size_t>(n), kappa);
    for (int i = 0; i < zeros; ++i) x.a[static_cast<std::size_t>(i)] = 0;
    for (int i = 0; i < free_hi - zeros; ++i) x.a[static_cast<std::size_t>(zeros + i)] = mid[static_cast<std::size_t>(i)];
    x.b.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) x.b[static_cast<std::size_t>(i - 1)] = kappa - x.a[static_cast<std::size_t>(n - i)];
    out.push_back(std::move(x));
  }
  return out;
}

// A′: ascending a in [0, κ−1]^n with b_i = κ − a_{n−i+1}.
// Cardinality binomial(n+κ−1, n).
inline std::vector<LabelPair> enumerate_A_prime(int n, int kappa) {
  if (n < 1 || kappa < 1) throw std::invalid_argument("enumerate_A_prime: need n >= 1 and kappa >= 1");
  std::vector<LabelPair> out;
  for (const auto& a : detail::ascending_vectors(n, 0, kappa - 1)) {
    LabelPair x;
    x.a = a;
    x.b.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) x.b[static_cast<std::size_t>(i - 1)] = kappa - a[static_cast<std::size_t>(n - i)];
    out.push_back(std::move(x));
  }
  return out;
}

// A″: ascending b in [1, κ]^n with a_i = κ − b_{n−i+1}, enumerated in
// lexicographic order of b. As a set of pairs this coincides with A′; the
// two arise from the two possible roles of the attaching points.
inline std::vector<LabelPair> enumerate_A_double_prime(int n, int kappa) {
  if (n < 1 || kappa < 1) throw std::invalid_argument("enumerate_A_double_prime: need n >= 1 and kappa >= 1");
  std::vector<LabelPair> out;
  for (const auto& b : detail::ascending_vectors(n, 1, kappa)) {
    LabelPair x;
    x.b = b;
    x.a.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) x.a[static_cast<std::size_t>(i - 1)] = kappa - b[static_cast<std::size_t>(n - i)];
    out.push_back(std::move(x));
  }
  return out;
}

// SA′: a′ ascending in [0, κ]^n with a′_1 = 0, paired with
// b′_i = a′_n − a′_{n−i+1}. Cardinality binomial(n+κ−1, n−1).
inline std::vector<LabelPair> enumerate_SA_prime(int n, int kappa) {
  if (n < 1 || kappa < 1) throw std::invalid_argument("enumerate_SA_prime: need n >= 1 and kappa >= 1");
  std::vector<LabelPair> out;
  for (const auto& tail : detail::ascending_vectors(n - 1, 0, kappa)) {
    LabelPair x;
    x.a.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n - 1; ++i) x.a[static_cast<std::size_t>(i + 1)] = tail[static_cast<std::size_t>(i)];
    x.b.resize(static_cast<std::size_t>(n));
    const long long top = x.a[static_cast<std::size_t>(n - 1)];
    for (int i = 1; i <= n; ++i) x.b[static_cast<std::size_t>(i - 1)] = top - x.a[static_cast<std::size_t>(n - i)];
    out.push_back(std::move(x));
  }
  return out;
}

// A_{p,q} (and its primed variant): the members of A(Δ^κ) with a_i = 0 for
// i <= n−q and a_i = κ for i > p; primed additionally caps a_i <= κ−1 for
// i <= p.
inline std::vector<LabelPair> enumerate_A_pq(int n, int kappa, int p, int q, bool primed) {
  if (n < 1 || kappa < 1) throw std::invalid_argument("enumerate_A_pq: need n >= 1 and kappa >= 1");
  if (p < 0 || p > n || q < 0 || q > n || p + q < n) {
    throw std::invalid_argument("enumerate_A_pq: need p,q in [0,n] with p+q >= n");
  }
  std::vector<LabelPair> out;
  for (auto& x : enumerate_A_delta(n, kappa)) {
    bool ok = true;
    for (int i = 1; ok && i <= n - q; ++i) ok = x.a[static_cast<std::size_t>(i - 1)] == 0;
    for (int i = p + 1; ok && i <= n; ++i) ok = x.a[static_cast<std::size_t>(i - 1)] == kappa;
    if (primed) {
      for (int i = 1; ok && i <= p; ++i) ok = x.a[static_cast<std::size_t>(i - 1)] <= kappa - 1;
    }
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

// Shift both components so that their first entries vanish.
inline LabelPair reduce_label(const LabelPair& x) {
  LabelPair out = x;
  if (!out.a.empty()) {
    const long long a1 = out.a.front();
    for (auto& v : out.a) v -= a1;
  }
  if (!out.b.empty()) {
    const long long b1 = out.b.front();
    for (auto& v : out.b) v -= b1;
  }
  return out;
}

}  // namespace verlinde
