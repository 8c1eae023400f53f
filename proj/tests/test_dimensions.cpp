#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "verlinde/dimensions.hpp"

using namespace verlinde;

namespace {

// Independent rank-two oracle: ((κ+2)/2)^{g−1} Σ_{j=1}^{κ+1} sin(jπ/(κ+2))^{2−2g}.
double su2_sine_formula(int kappa, int g) {
  const double m = kappa + 2;
  double sum = 0.0;
  for (int j = 1; j <= kappa + 1; ++j) {
    sum += std::pow(std::sin(j * std::numbers::pi / m), 2.0 - 2.0 * g);
  }
  return std::pow(m / 2.0, g - 1.0) * sum;
}

}  // namespace

TEST_CASE("rank-two dimensions match the sine formula") {
  for (int kappa = 1; kappa <= 5; ++kappa) {
    for (int g = 1; g <= 4; ++g) {
      const auto dim = dim_svb(2, kappa, g);
      CHECK(static_cast<double>(dim.value) == Catch::Approx(su2_sine_formula(kappa, g)).epsilon(1e-9));
    }
  }
  CHECK(dim_svb(2, 1, 2).value == 4);
  CHECK(dim_svb(2, 2, 2).value == 10);
}

TEST_CASE("genus one collapses to the alcove count") {
  for (int n = 1; n <= 4; ++n) {
    for (int kappa = 1; kappa <= 4; ++kappa) {
      CHECK(dim_svb(n, kappa, 1).value == binomial(n + kappa - 1, n - 1));
    }
  }
}

TEST_CASE("parabolic fixed-determinant dimensions") {
  CHECK(dim_spb(2, 1, 2, {0, 0}).value == 2);
  CHECK(dim_spb(2, 2, 2, {0, 1}).value == 4);
  CHECK(dim_spb(2, 2, 2, {0, 2}).value == 3);
  CHECK_THROWS_AS(dim_spb(2, 2, 2, {1, 2}), std::invalid_argument);  // a'_1 != 0
  CHECK_THROWS_AS(dim_spb(2, 2, 2, {0, 3}), std::invalid_argument);  // a'_n > kappa
  CHECK_THROWS_AS(dim_spb(3, 2, 2, {0, 2, 1}), std::invalid_argument);
}

TEST_CASE("varying-determinant scaling") {
  CHECK(dim_vb(2, 1, 2).value == 1);
  CHECK(dim_vb(2, 2, 2).value == 10);
  for (int kappa = 1; kappa <= 4; ++kappa) {
    for (int g = 1; g <= 4; ++g) {
      CHECK(dim_vb(1, kappa, g).value == ipow_ll(kappa, g));
    }
  }
}

TEST_CASE("parabolic varying-determinant scaling") {
  LabelPair x{{0, 1}, {1, 2}};
  CHECK(dim_pb(2, 2, 2, x).value == 4);
  LabelPair y{{0, 0}, {1, 1}};
  CHECK(dim_pb(2, 1, 2, y).value == 1);

  // invariance under the diagonal shift (a+c, b−c)
  for (long long c : {-3LL, 2LL, 7LL}) {
    LabelPair shifted = x;
    for (auto& v : shifted.a) v += c;
    for (auto& v : shifted.b) v -= c;
    CHECK(dim_pb(2, 2, 2, shifted).value == dim_pb(2, 2, 2, x).value);
  }

  LabelPair bad{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(dim_pb(2, 2, 2, bad), std::invalid_argument);
}

TEST_CASE("degenerate-curve totals") {
  CHECK(dim_gvb(2, 1, 2).value == 1);
  CHECK(dim_gvb(2, 2, 2).value == 10);
  CHECK(dim_gvb(3, 1, 2).value == 1);
  for (int kappa = 1; kappa <= 4; ++kappa) {
    for (int g = 1; g <= 3; ++g) {
      CHECK(dim_gvb(1, kappa, g).value == ipow_ll(kappa, g));
    }
  }
}

TEST_CASE("flatness of the dimension across the degeneration") {
  for (int n = 1; n <= 3; ++n) {
    for (int kappa = 1; kappa <= 3; ++kappa) {
      for (int g = 1; g <= 3; ++g) {
        CHECK(dim_gvb(n, kappa, g).value == dim_vb(n, kappa, g).value);
      }
    }
  }
}

TEST_CASE("the A double prime total reproduces the degenerate dimension") {
  for (int n = 1; n <= 3; ++n) {
    for (int kappa = 1; kappa <= 3; ++kappa) {
      long long total = 0;
      for (const auto& x : enumerate_A_double_prime(n, kappa)) total += dim_pb(n, kappa, 2, x).value;
      CHECK(total == dim_gvb(n, kappa, 2).value);
    }
  }
}

TEST_CASE("residuals stay within budget on the working range") {
  for (int n = 1; n <= 4; ++n) {
    for (int kappa = 1; kappa <= 4; ++kappa) {
      for (int g = 1; g <= 4; ++g) {
        const auto r = dim_svb(n, kappa, g);
        CHECK(r.residual <= 1e-6 * std::max(1.0, r.raw));
      }
    }
  }
}

TEST_CASE("monotonicity smoke check in the level") {
  for (int n = 2; n <= 3; ++n) {
    for (int g = 1; g <= 3; ++g) {
      long long prev = 0;
      for (int kappa = 1; kappa <= 4; ++kappa) {
        const long long cur = dim_svb(n, kappa, g).value;
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("rounding failures are loud") {
  bool found = false;
  for (const auto& [n, kappa, g] : {std::tuple{2, 1, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 3}}) {
    const auto r = dim_svb(n, kappa, g);
    if (r.residual > 0) {
      found = true;
      CHECK_THROWS_AS(dim_svb(n, kappa, g, 1e-18), RoundingError);
      break;
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(dim_svb(0, 1, 1), std::invalid_argument);
}
