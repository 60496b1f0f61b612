#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "singlocus/lie_algebra.hpp"

using namespace singlocus;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int range = 5) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * range + 1)) - range;
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK(to_string(parse_rat("7")) == "7");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
  CHECK(clear_denominators({Rat(1, 2), Rat(-1, 3)}) == Vec{Rat(3), Rat(-2)});
}

TEST_CASE("rank on small examples") {
  CHECK(rank(Mat::identity(2)) == 2);
  CHECK(rank(Mat(3, 3)) == 0);
  auto L = build_classical(Family::A, 1);
  Element x(L.get(), {Rat(1), Rat(2), Rat(-3)});
  REQUIRE(is_regular(x));
  CHECK(rank(ad_matrix(x)) == 2);
}

TEST_CASE("kernel basis on small examples") {
  CHECK(kernel_basis(Mat::identity(3)).empty());
  CHECK(kernel_basis(Mat(2, 2)).size() == 2);
  auto L = build_classical(Family::A, 1);
  const auto k = kernel_basis(ad_matrix(Element::basis(*L, 0)));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("determinant on small examples") {
  CHECK(det(Mat::identity(4)) == 1);
  Mat m(2, 2);
  m(0, 1) = 4;
  m(1, 0) = 4;
  CHECK(det(m) == -16);
  Mat s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK(det(s) == 0);
  CHECK_THROWS_AS(det(Mat(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant matches the permutation expansion") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 5;
    Mat m = random_mat(rng, n, n);
    if (t % 3 == 0) m(0, 0) = Rat(1, 3);
    CHECK(det(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("kernel and rank are consistent") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Mat m = random_mat(rng, r, c, 2);
    const auto k = kernel_basis(m);
    CHECK(k.size() + rank(m) == c);
    for (const auto& v : k) {
      CHECK(is_zero(m * v));
      for (const auto& x : v) CHECK(x.get_den() == 1);
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rng() % 4;
    Mat m = random_mat(rng, n, n);
    if (det(m) == 0) {
      CHECK_THROWS_AS(inverse(m), std::domain_error);
      continue;
    }
    CHECK(m * inverse(m) == Mat::identity(n));
    Vec b(n);
    for (auto& x : b) x = static_cast<long>(rng() % 7) - 3;
    const auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);
  }
  Mat z(2, 2);
  CHECK_FALSE(solve(z, Vec{Rat(1), Rat(0)}));
}

TEST_CASE("sparse span membership") {
  SparseSpan<int> span;
  CHECK(span.insert({{0, 1}, {2, 3}}));
  CHECK(span.insert({{1, 1}}));
  CHECK_FALSE(span.insert({{0, 2}, {1, 5}, {2, 6}}));
  CHECK(span.contains({{0, -1}, {2, -3}}));
  CHECK_FALSE(span.contains({{2, 1}}));
  CHECK(span.dim() == 2);
}
