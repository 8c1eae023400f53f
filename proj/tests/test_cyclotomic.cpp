#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "verlinde/cyclotomic.hpp"

using namespace verlinde;

namespace {

CycInt random_elt(int m, std::mt19937_64& rng) {
  std::vector<Integer> raw(static_cast<std::size_t>(cyclotomic_degree(m)));
  for (auto& c : raw) c = static_cast<long>(rng() % 9) - 4;
  return CycInt(m, std::move(raw));
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials, closed forms") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^m - 1") {
  for (int m = 1; m <= 30; ++m) {
    std::vector<Integer> prod{1};
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    }
    std::vector<Integer> expect(static_cast<std::size_t>(m) + 1, 0);
    expect[0] = -1;
    expect[static_cast<std::size_t>(m)] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("root powers") {
  CHECK(CycInt::root_power(4, 2) == CycInt::from_integer(4, -1));
  const CycInt z3 = CycInt::root_power(3, 1);
  CHECK((z3 + CycInt::root_power(3, 2)) == CycInt::from_integer(3, -1));
  CHECK(CycInt::root_power(5, 7) == CycInt::root_power(5, 2));
  CHECK(CycInt::root_power(5, -1) == CycInt::root_power(5, 4));
  CHECK(CycInt::root_power(6, 0) == CycInt::one(6));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(3);
  for (int m : {3, 4, 5, 6, 8, 12}) {
    for (int iter = 0; iter < 30; ++iter) {
      const CycInt a = random_elt(m, rng), b = random_elt(m, rng), c = random_elt(m, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == CycInt::zero(m));
      CHECK(a * CycInt::one(m) == a);
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(CycInt::root_power(4, 1).conjugate() == CycInt::root_power(4, 3));
  CHECK(CycInt::from_integer(7, 42).conjugate() == CycInt::from_integer(7, 42));
  const CycInt x = CycInt::one(3) + CycInt::root_power(3, 1);
  CHECK((x * x.conjugate()) == CycInt::one(3));
  std::mt19937_64 rng(9);
  for (int m : {3, 5, 7, 8, 9, 12}) {
    for (int iter = 0; iter < 20; ++iter) {
      const CycInt a = random_elt(m, rng);
      CHECK(a.conjugate().conjugate() == a);
      const auto norm = (a * a.conjugate()).as_integer();
      if (norm) CHECK(*norm >= 0);
    }
  }
}

TEST_CASE("integer extraction") {
  const CycInt z3 = CycInt::root_power(3, 1);
  CHECK((CycInt::one(3) + z3 + z3 * z3).as_integer() == Integer(0));
  CHECK(!CycInt::root_power(4, 1).as_integer().has_value());
  const CycInt z5 = CycInt::root_power(5, 1);
  CHECK((z5 * z5.conjugate()).as_integer() == Integer(1));
}

TEST_CASE("complex embedding") {
  CHECK(std::abs(CycInt::from_integer(5, -1).embed() - std::complex<double>(-1, 0)) < 1e-12);
  CHECK(std::abs(CycInt::root_power(4, 1).embed() - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs((CycInt::root_power(3, 1) + CycInt::root_power(3, 2)).embed() -
                 std::complex<double>(-1, 0)) < 1e-12);
  std::mt19937_64 rng(17);
  for (int m : {3, 5, 8, 12}) {
    for (int iter = 0; iter < 20; ++iter) {
      const CycInt a = random_elt(m, rng), b = random_elt(m, rng);
      const double bound = 1e-9 * (1.0 + std::abs(a.embed()) * std::abs(b.embed()));
      CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) <= bound);
      if (a == b) {
        CHECK(std::abs(a.embed() - b.embed()) < 1e-12);
      }
    }
  }
}

TEST_CASE("exact determinants") {
  const int m = 3;
  std::vector<std::vector<CycInt>> id3(3, std::vector<CycInt>(3, CycInt::zero(m)));
  for (int i = 0; i < 3; ++i) id3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = CycInt::one(m);
  CHECK(det_exact(id3) == CycInt::one(m));

  const CycInt z = CycInt::root_power(3, 1);
  std::vector<std::vector<CycInt>> two{{CycInt::one(3), CycInt::one(3)}, {z, z * z}};
  CHECK(det_exact(two) == z * z - z);
}

TEST_CASE("full DFT matrix determinant norm is m^m") {
  for (int m : {2, 3, 4, 5}) {
    std::vector<std::vector<CycInt>> mat(static_cast<std::size_t>(m),
                                         std::vector<CycInt>(static_cast<std::size_t>(m), CycInt::zero(m)));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            CycInt::root_power(m, static_cast<long long>(i) * j);
      }
    }
    const CycInt det = det_exact(mat);
    Integer expect = 1;
    for (int i = 0; i < m; ++i) expect *= m;
    CHECK((det * det.conjugate()).as_integer() == expect);
  }
}

TEST_CASE("determinant guards") {
  std::vector<std::vector<CycInt>> big(7, std::vector<CycInt>(7, CycInt::zero(5)));
  CHECK_THROWS_AS(det_exact(big), std::invalid_argument);
  std::vector<std::vector<CycInt>> mixed{{CycInt::one(3), CycInt::one(3)},
                                         {CycInt::one(3), CycInt::one(4)}};
  CHECK_THROWS_AS(det_exact(mixed), std::invalid_argument);
  CHECK_THROWS_AS((CycInt::one(3) + CycInt::one(4)), std::invalid_argument);
}
