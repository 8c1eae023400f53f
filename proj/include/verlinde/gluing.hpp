// Exact-rational model of the boundary gluing: graded spaces V_{p,q}
// indexed by the label sets A_{p,q}, seeded block-triangular isomorphisms
// β_p that carry V′_{p,n} onto V′_{n,p}, the projection family σ/τ/π, the
// glued subspace cut out by β_p σ_{p,n} θ = σ_{n,p} θ, and the inductive
// reconstruction of a section from its V′_{n,n} projection.
//
// The β family is randomized within the structure the gluing demands:
// each β_p is invertible, carries V′_{p,n} onto V′_{n,p}, and the family
// is compatible on the corner strata (see random_betas). All arithmetic
// is exact; no floats enter this module.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verlinde/dimensions.hpp"
#include "verlinde/exact_linalg.hpp"
#include "verlinde/index_sets.hpp"

namespace verlinde {

class GradedSpace {
 public:
  GradedSpace(int n, int kappa, std::vector<long long> dims)
      : n_(n), kappa_(kappa), labels_(enumerate_A_delta(n, kappa)), dims_(std::move(dims)) {
    if (dims_.size() != labels_.size()) {
      throw std::invalid_argument("GradedSpace: need one summand dimension per label of A(Δ^κ)");
    }
    for (long long d : dims_) {
      if (d < 0) throw std::invalid_argument("GradedSpace: summand dimensions must be nonnegative");
    }
    check_compatibility();
  }

  GradedSpace(int n, int kappa, const std::map<LabelPair, long long>& dims)
      : GradedSpace(n, kappa, flatten(n, kappa, dims)) {}

  static GradedSpace with_unit_dims(int n, int kappa) {
    return GradedSpace(n, kappa, std::vector<long long>(enumerate_A_delta(n, kappa).size(), 1));
  }

  static GradedSpace with_verlinde_dims(int n, int kappa, int g, double tol = kDefaultTolerance) {
    const auto labels = enumerate_A_delta(n, kappa);
    std::vector<long long> dims;
    dims.reserve(labels.size());
    for (const auto& x : labels) dims.push_back(dim_pb(n, kappa, g, x, tol).value);
    return GradedSpace(n, kappa, std::move(dims));
  }

  int n() const { return n_; }
  int kappa() const { return kappa_; }
  const std::vector<LabelPair>& labels() const { return labels_; }
  long long dim_of(std::size_t label) const { return dims_[label]; }

  long long total_dim() const {
    long long t = 0;
    for (long long d : dims_) t += d;
    return t;
  }

  bool label_in_A_pq(std::size_t label, int p, int q, bool primed) const {
    const auto& a = labels_[label].a;
    for (int i = 1; i <= n_ - q; ++i) {
      if (a[static_cast<std::size_t>(i - 1)] != 0) return false;
    }
    for (int i = p + 1; i <= n_; ++i) {
      if (a[static_cast<std::size_t>(i - 1)] != kappa_) return false;
    }
    if (primed) {
      for (int i = 1; i <= p; ++i) {
        if (a[static_cast<std::size_t>(i - 1)] > kappa_ - 1) return false;
      }
    }
    return true;
  }

  // Labels of V_{p,q} in block order: the primed block A′_{p,q} first, then
  // the complement blocks A′_{i,q} for i = n−q, …, p−1 in increasing i.
  std::vector<int> block_labels(int p, int q) const {
    check_pq(p, q);
    std::vector<int> out = primed_labels(p, q);
    for (int i = n_ - q; i < p; ++i) {
      for (std::size_t l = 0; l < labels_.size(); ++l) {
        if (label_in_A_pq(l, i, q, true)) out.push_back(static_cast<int>(l));
      }
    }
    return out;
  }

  std::vector<int> primed_labels(int p, int q) const {
    check_pq(p, q);
    std::vector<int> out;
    for (std::size_t l = 0; l < labels_.size(); ++l) {
      if (label_in_A_pq(l, p, q, true)) out.push_back(static_cast<int>(l));
    }
    return out;
  }

  long long flat_dim(const std::vector<int>& label_list) const {
    long long t = 0;
    for (int l : label_list) t += dims_[static_cast<std::size_t>(l)];
    return t;
  }

  // Flat coordinate layout of a label list: (label, component) per position.
  std::vector<std::pair<int, int>> layout(const std::vector<int>& label_list) const {
    std::vector<std::pair<int, int>> out;
    for (int l : label_list) {
      for (long long c = 0; c < dims_[static_cast<std::size_t>(l)]; ++c) {
        out.emplace_back(l, static_cast<int>(c));
      }
    }
    return out;
  }

 private:
  static std::vector<long long> flatten(int n, int kappa, const std::map<LabelPair, long long>& dims) {
    const auto labels = enumerate_A_delta(n, kappa);
    std::vector<long long> out;
    out.reserve(labels.size());
    for (const auto& x : labels) {
      auto it = dims.find(x);
      if (it == dims.end()) throw std::invalid_argument("GradedSpace: dimension map misses label " + x.str());
      out.push_back(it->second);
    }
    return out;
  }

  void check_pq(int p, int q) const {
    if (p < 0 || p > n_ || q < 0 || q > n_ || p + q < n_) {
      throw std::invalid_argument("GradedSpace: need p,q in [0,n] with p+q >= n");
    }
  }

  // Without matching block dimensions no subspace-respecting isomorphism
  // V_{p,n} → V_{n,p} can exist.
  void check_compatibility() const {
    for (int p = 0; p <= n_; ++p) {
      long long lhs = 0, rhs = 0, lhs_primed = 0, rhs_primed = 0;
      for (std::size_t l = 0; l < labels_.size(); ++l) {
        if (label_in_A_pq(l, p, n_, false)) lhs += dims_[l];
        if (label_in_A_pq(l, n_, p, false)) rhs += dims_[l];
        if (label_in_A_pq(l, p, n_, true)) lhs_primed += dims_[l];
        if (label_in_A_pq(l, n_, p, true)) rhs_primed += dims_[l];
      }
      if (lhs != rhs || lhs_primed != rhs_primed) {
        throw std::invalid_argument("GradedSpace: summand dimensions violate the gluing compatibility at p=" +
                                    std::to_string(p));
      }
    }
  }

  int n_;
  int kappa_;
  std::vector<LabelPair> labels_;
  std::vector<long long> dims_;
};

// An element of V_{n,n}: one exact-rational block per label of A(Δ^κ).
class SectionVector {
 public:
  explicit SectionVector(const GradedSpace& space) {
    comps_.reserve(space.labels().size());
    for (std::size_t l = 0; l < space.labels().size(); ++l) {
      comps_.emplace_back(static_cast<std::size_t>(space.dim_of(l)), Rational(0));
    }
  }

  std::vector<RatVec>& comps() { return comps_; }
  const std::vector<RatVec>& comps() const { return comps_; }

  SectionVector& operator+=(const SectionVector& o) {
    for (std::size_t l = 0; l < comps_.size(); ++l) {
      for (std::size_t c = 0; c < comps_[l].size(); ++c) comps_[l][c] += o.comps_[l][c];
    }
    return *this;
  }
  SectionVector& operator-=(const SectionVector& o) {
    for (std::size_t l = 0; l < comps_.size(); ++l) {
      for (std::size_t c = 0; c < comps_[l].size(); ++c) comps_[l][c] -= o.comps_[l][c];
    }
    return *this;
  }

  bool is_zero() const {
    for (const auto& block : comps_) {
      for (const auto& v : block) {
        if (v != 0) return false;
      }
    }
    return true;
  }

  friend bool operator==(const SectionVector& a, const SectionVector& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const SectionVector& a, const SectionVector& b) { return !(a == b); }

 private:
  std::vector<RatVec> comps_;
};

// The family of gluing isomorphisms: betas[p] maps V_{p,n} to V_{n,p},
// written in the block bases of GradedSpace::block_labels.
struct GluingProblem {
  GradedSpace space;
  std::vector<RatMat> betas;
  std::uint64_t seed = 0;
};

namespace detail {

inline long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Product of elementary row operations (shears with coefficients in
// [−3,3] and sign flips); determinant ±1.
inline RatMat random_unimodular(int k, std::mt19937_64& rng) {
  RatMat m = RatMat::identity(k);
  if (k == 0) return m;
  for (int iter = 0; iter < 2 * k; ++iter) {
    if (k >= 2) {
      const int i = static_cast<int>(rand_range(rng, 0, k - 1));
      int j = static_cast<int>(rand_range(rng, 0, k - 2));
      if (j >= i) ++j;
      long long c = rand_range(rng, -3, 2);
      if (c >= 0) ++c;  // nonzero in [−3,3]
      for (int col = 0; col < k; ++col) m.at(i, col) += to_rational(c) * m.at(j, col);
    }
    const int flip = static_cast<int>(rand_range(rng, 0, k - 1));
    if (rand_range(rng, 0, 1) == 1) {
      for (int col = 0; col < k; ++col) m.at(flip, col) = -m.at(flip, col);
    }
  }
  return m;
}

}  // namespace detail

// Leading-zero and trailing-top statistics of a label. The pair grades
// A(Δ^κ) into rotation rays (z,k) → (z+1,k−1) → …, the shadow of the
// boundary-stratum structure the gluing isomorphisms must respect.
inline std::pair<int, int> label_stats(const LabelPair& x, int kappa) {
  const int n = static_cast<int>(x.a.size());
  int z = 0;
  while (z < n && x.a[static_cast<std::size_t>(z)] == 0) ++z;
  int k = 0;
  while (k < n - z && x.a[static_cast<std::size_t>(n - 1 - k)] == kappa) ++k;
  return {z, k};
}

// Deterministic-from-seed family of gluing isomorphisms.
//
// Invertibility plus V′ ↦ V′ for each β_p in isolation is not enough to cut
// out a subspace of the right dimension: the stacked constraints couple the
// β_p on the deeper strata where two boundary identifications meet (already
// with three labels they force a relation between β_0 and β_1). The
// generator therefore draws one random invertible block map per rotation
// step — B_{z,k} from the (z,k) label block to the (z+1,k−1) block, a
// product of elementary matrices with entries in [−3,3] — and assembles
// β_p := B^{n−p}. Powers of a single generator satisfy the corner
// compatibilities identically, and each β_p is block-triangular for the
// splitting V_{p,n} = V′_{p,n} ⊕ V_{p−1,n} with unimodular diagonal blocks
// and carries V′_{p,n} onto V′_{n,p}.
inline GluingProblem random_betas(const GradedSpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = space.n();
  const int kappa = space.kappa();
  const std::size_t num_labels = space.labels().size();

  // Flat coordinates of each (z,k) block, labels in lex order.
  std::vector<long long> offsets(num_labels + 1, 0);
  for (std::size_t l = 0; l < num_labels; ++l) offsets[l + 1] = offsets[l] + space.dim_of(l);
  std::map<std::pair<int, int>, std::vector<long long>> block_coords;
  for (std::size_t l = 0; l < num_labels; ++l) {
    const auto zk = label_stats(space.labels()[l], kappa);
    auto& coords = block_coords[zk];
    for (long long c = 0; c < space.dim_of(l); ++c) coords.push_back(offsets[l] + c);
  }
  auto block_dim = [&](int z, int k) -> int {
    auto it = block_coords.find({z, k});
    return it == block_coords.end() ? 0 : static_cast<int>(it->second.size());
  };

  // One rotation-step generator per block with k >= 1 (fixed iteration
  // order keeps the construction reproducible).
  std::map<std::pair<int, int>, RatMat> step;
  for (const auto& [zk, coords] : block_coords) {
    if (zk.second < 1) continue;
    if (block_dim(zk.first + 1, zk.second - 1) != static_cast<int>(coords.size())) {
      throw std::invalid_argument("random_betas: summand dimensions are not constant along rotation rays");
    }
    step.emplace(zk, detail::random_unimodular(static_cast<int>(coords.size()), rng));
  }

  GluingProblem problem{space, {}, seed};
  for (int p = 0; p < n; ++p) {
    const auto col_layout = space.layout(space.block_labels(p, n));
    const auto row_layout = space.layout(space.block_labels(n, p));
    std::vector<int> col_pos(static_cast<std::size_t>(space.total_dim()), -1);
    std::vector<int> row_pos(static_cast<std::size_t>(space.total_dim()), -1);
    for (std::size_t i = 0; i < col_layout.size(); ++i) {
      const auto g = offsets[static_cast<std::size_t>(col_layout[i].first)] + col_layout[i].second;
      col_pos[static_cast<std::size_t>(g)] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < row_layout.size(); ++i) {
      const auto g = offsets[static_cast<std::size_t>(row_layout[i].first)] + row_layout[i].second;
      row_pos[static_cast<std::size_t>(g)] = static_cast<int>(i);
    }
    RatMat beta(static_cast<int>(row_layout.size()), static_cast<int>(col_layout.size()));
    const int hops = n - p;
    for (const auto& [zk, src] : block_coords) {
      const auto [z, k] = zk;
      if (k < hops) continue;  // label outside A_{p,n}
      RatMat comp = RatMat::identity(static_cast<int>(src.size()));
      for (int t = 0; t < hops; ++t) comp = step.at({z + t, k - t}) * comp;
      const auto& dst = block_coords.at({z + hops, k - hops});
      for (std::size_t r = 0; r < dst.size(); ++r) {
        for (std::size_t c = 0; c < src.size(); ++c) {
          const auto& v = comp.at(static_cast<int>(r), static_cast<int>(c));
          if (v == 0) continue;
          beta.at(row_pos[static_cast<std::size_t>(dst[r])], col_pos[static_cast<std::size_t>(src[c])]) = v;
        }
      }
    }
    problem.betas.push_back(std::move(beta));
  }
  return problem;
}

// σ: zero out every component outside A_{p,q}.
inline SectionVector project_sigma(const GradedSpace& space, const SectionVector& theta, int p, int q) {
  SectionVector out(space);
  for (std::size_t l = 0; l < space.labels().size(); ++l) {
    if (space.label_in_A_pq(l, p, q, false)) out.comps()[l] = theta.comps()[l];
  }
  return out;
}

// π: zero out every component outside A′_{p,q}.
inline SectionVector project_pi(const GradedSpace& space, const SectionVector& theta, int p, int q) {
  SectionVector out(space);
  for (std::size_t l = 0; l < space.labels().size(); ++l) {
    if (space.label_in_A_pq(l, p, q, true)) out.comps()[l] = theta.comps()[l];
  }
  return out;
}

// τ: the same coordinate projection, regarded between primed spaces.
inline SectionVector project_tau(const GradedSpace& space, const SectionVector& theta, int p, int q) {
  return project_pi(space, theta, p, q);
}

namespace detail {

inline RatVec gather(const GradedSpace& space, const SectionVector& theta, const std::vector<int>& label_list) {
  RatVec out;
  out.reserve(static_cast<std::size_t>(space.flat_dim(label_list)));
  for (int l : label_list) {
    const auto& block = theta.comps()[static_cast<std::size_t>(l)];
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

inline SectionVector scatter(const GradedSpace& space, const RatVec& flat, const std::vector<int>& label_list) {
  SectionVector out(space);
  std::size_t pos = 0;
  for (int l : label_list) {
    auto& block = out.comps()[static_cast<std::size_t>(l)];
    for (auto& v : block) v = flat[pos++];
  }
  return out;
}

}  // namespace detail

// β_p applied to the V_{p,n}-part of theta, landing in V_{n,p}.
inline SectionVector apply_beta(const GluingProblem& problem, int p, const SectionVector& theta) {
  const auto& space = problem.space;
  if (p < 0 || p >= space.n()) throw std::invalid_argument("apply_beta: p out of range");
  const auto cols = space.block_labels(p, space.n());
  const auto rows = space.block_labels(space.n(), p);
  const RatVec x = detail::gather(space, theta, cols);
  const RatVec y = problem.betas[static_cast<std::size_t>(p)].apply(x);
  return detail::scatter(space, y, rows);
}

// Membership in the glued subspace H: β_p σ_{p,n} θ = σ_{n,p} θ for every p.
inline bool check_section(const GluingProblem& problem, const SectionVector& theta) {
  const int n = problem.space.n();
  for (int p = 0; p < n; ++p) {
    if (apply_beta(problem, p, theta) != project_sigma(problem.space, theta, n, p)) return false;
  }
  return true;
}

// Inductive reconstruction of the section with a prescribed V′_{n,n}
// projection: each θ′_p solves β_p θ′_p = τ_{n,p} θ′ − Σ_{q<p} π_{n,p} β_p θ′_q
// on the primed blocks, which is a square exact-rational system.
inline SectionVector reconstruct(const GluingProblem& problem, const SectionVector& theta_prime) {
  const auto& space = problem.space;
  const int n = space.n();
  // Input must live in V′_{n,n}.
  if (project_pi(space, theta_prime, n, n) != theta_prime) {
    throw std::invalid_argument("reconstruct: input must be supported on A'_{n,n}");
  }
  std::vector<SectionVector> parts;
  parts.reserve(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p < n; ++p) {
    SectionVector rhs = project_tau(space, theta_prime, n, p);
    for (int q = 0; q < p; ++q) {
      rhs -= project_pi(space, apply_beta(problem, p, parts[static_cast<std::size_t>(q)]), n, p);
    }
    const auto primed_rows = space.primed_labels(n, p);
    const auto primed_cols = space.primed_labels(p, n);
    const int t1 = static_cast<int>(space.flat_dim(primed_rows));
    // The primed blocks sit first in the block bases, so the restricted
    // system is the leading principal block of β_p.
    const auto& beta = problem.betas[static_cast<std::size_t>(p)];
    RatMat restricted(t1, t1);
    for (int i = 0; i < t1; ++i) {
      for (int j = 0; j < t1; ++j) restricted.at(i, j) = beta.at(i, j);
    }
    const RatVec rhs_flat = detail::gather(space, rhs, primed_rows);
    const RatVec x = solve_square(restricted, rhs_flat);
    SectionVector part = detail::scatter(space, x, primed_cols);
    if (apply_beta(problem, p, part) != rhs) {
      throw std::logic_error("reconstruct: beta does not respect the primed blocks");
    }
    parts.push_back(std::move(part));
  }
  SectionVector theta = theta_prime;
  for (const auto& part : parts) theta += part;
  return theta;
}

// Stacked constraint matrix [β_p σ_{p,n} − σ_{n,p}] over all p, acting on
// the flat coordinates of V_{n,n} in label order.
inline RatMat glued_constraint_matrix(const GluingProblem& problem) {
  const auto& space = problem.space;
  const int n = space.n();
  const long long total = space.total_dim();
  std::vector<long long> offsets(space.labels().size() + 1, 0);
  for (std::size_t l = 0; l < space.labels().size(); ++l) offsets[l + 1] = offsets[l] + space.dim_of(l);

  long long row_total = 0;
  for (int p = 0; p < n; ++p) row_total += space.flat_dim(space.block_labels(n, p));

  RatMat m(static_cast<int>(row_total), static_cast<int>(total));
  int row_base = 0;
  for (int p = 0; p < n; ++p) {
    const auto cols = space.block_labels(p, n);
    const auto rows = space.block_labels(n, p);
    const auto col_layout = space.layout(cols);
    const auto row_layout = space.layout(rows);
    const auto& beta = problem.betas[static_cast<std::size_t>(p)];
    for (std::size_t r = 0; r < row_layout.size(); ++r) {
      for (std::size_t c = 0; c < col_layout.size(); ++c) {
        if (beta.at(static_cast<int>(r), static_cast<int>(c)) == 0) continue;
        const long long g = offsets[static_cast<std::size_t>(col_layout[c].first)] + col_layout[c].second;
        m.at(row_base + static_cast<int>(r), static_cast<int>(g)) += beta.at(static_cast<int>(r), static_cast<int>(c));
      }
      const long long g = offsets[static_cast<std::size_t>(row_layout[r].first)] + row_layout[r].second;
      m.at(row_base + static_cast<int>(r), static_cast<int>(g)) -= 1;
    }
    row_base += static_cast<int>(row_layout.size());
  }
  return m;
}

// Exact dimension of the glued subspace H.
inline long long glued_subspace_dim(const GluingProblem& problem) {
  const RatMat m = glued_constraint_matrix(problem);
  return problem.space.total_dim() - rank(m);
}

// Kernel basis of the constraint matrix, in the flat V_{n,n} coordinates.
inline std::vector<RatVec> glued_subspace_basis(const GluingProblem& problem) {
  return kernel_basis(glued_constraint_matrix(problem));
}

}  // namespace verlinde
