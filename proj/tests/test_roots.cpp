#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "singlocus/polynomial.hpp"

using namespace singlocus;

namespace {

const char* kAll[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2"};

}  // namespace

TEST_CASE("root data of the built-in algebras") {
  for (const char* label : kAll) {
    CAPTURE(label);
    auto L = build_classical(parse_label(label));
    const RootDatum D = compute_root_datum(*L);
    CHECK(D.r == L->r);
    CHECK(D.roots.size() == 2 * D.r);
    CHECK(D.simples.size() == D.ell);
    for (std::size_t k = 0; k < D.r; ++k) {
      CHECK(D.roots[D.negative_of(k)] == Rat(-1) * D.roots[k]);
      CHECK(D.heights[k] > 0);
      CHECK(D.heights[k + D.r] == -D.heights[k]);
      if (k > 0) CHECK(D.heights[k - 1] <= D.heights[k]);
      CHECK(killing_form(D.root_vectors[k], D.root_vectors[D.negative_of(k)]) == 1);
      const Element h = D.cartan[0];
      CHECK(bracket(h, D.root_vectors[k]) == D.value(D.roots[k], h) * D.root_vectors[k]);
      Rat height = 0;
      for (const auto& c : D.simple_coords[k]) {
        CHECK(c >= 0);
        height += c;
      }
      CHECK(height == D.heights[k]);
    }
    CHECK(exponents_from_degrees(invariant_degrees(L->label), D.r).size() == D.ell);
  }
}

TEST_CASE("rank of ad on a sum of two positive root vectors in sl(3)") {
  auto L = build_classical(Family::A, 2);
  const RootDatum D = compute_root_datum(*L);
  const Element x = D.root_vectors[D.simples[0]] + D.root_vectors[D.simples[1]];
  CHECK(rank(ad_matrix(x)) == 6);
}

TEST_CASE("Casimir values and Weyl dimensions in sl(3)") {
  auto L = build_classical(Family::A, 2);
  const RootDatum D = compute_root_datum(*L);
  const Vec& alpha = D.roots[D.simples[0]];
  const Vec& beta = D.roots[D.simples[1]];
  const Vec theta = alpha + beta;
  CHECK(casimir_value(D, theta) == 1);
  CHECK(weyl_dimension(D, theta) == 8);
  CHECK(weyl_dimension(D, Rat(2) * alpha + beta) == 10);
  CHECK(weyl_dimension(D, Vec(2, Rat(0))) == 1);
  CHECK_THROWS_AS(weyl_dimension(D, alpha), std::invalid_argument);
  CHECK(is_dominant_integral(D, theta));
  CHECK_FALSE(is_dominant_integral(D, alpha));
}

TEST_CASE("adjoint Casimir value is one everywhere") {
  for (const char* label : kAll) {
    CAPTURE(label);
    auto L = build_classical(parse_label(label));
    const RootDatum D = compute_root_datum(*L);
    CHECK(casimir_value(D, D.roots[D.r - 1]) == 1);
    CHECK(weyl_dimension(D, D.roots[D.r - 1]) == static_cast<long>(L->n));
  }
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(10) == 42);
  for (unsigned m = 0; m <= 30; ++m) CHECK(partition_count(m) == oracle::partitions(static_cast<int>(m), static_cast<int>(m)));
}

TEST_CASE("ideals of size two in sl(3)") {
  auto L = build_classical(Family::A, 2);
  const RootDatum D = compute_root_datum(*L);
  const auto ideals = enumerate_ideals(D, 2);
  REQUIRE(ideals.size() == 2);
  const std::size_t a = D.simples[0], b = D.simples[1], top = D.r - 1;
  std::set<IdealSet> got(ideals.begin(), ideals.end());
  CHECK(got.count(IdealSet{std::min(a, top), std::max(a, top)}));
  CHECK(got.count(IdealSet{std::min(b, top), std::max(b, top)}));
  for (const auto& phi : ideals) {
    CHECK(is_upward_closed(D, phi));
    CHECK(is_abelian(D, phi));
  }
  CHECK_FALSE(is_upward_closed(D, IdealSet{a}));
}

TEST_CASE("ideal enumeration agrees with exhaustive search") {
  for (const char* label : kAll) {
    CAPTURE(label);
    auto L = build_classical(parse_label(label));
    const RootDatum D = compute_root_datum(*L);
    if (D.r > 16) continue;
    const auto fast = enumerate_ideals(D, D.ell);
    auto sorted_fast = fast;
    std::sort(sorted_fast.begin(), sorted_fast.end());
    auto expect = oracle::ideals(D, D.ell);
    std::sort(expect.begin(), expect.end());
    CHECK(sorted_fast == expect);
    if (D.r <= 10) {
      auto brute = enumerate_ideals_brute_force(D, D.ell);
      std::sort(brute.begin(), brute.end());
      CHECK(brute == expect);
    }
    for (const auto& phi : fast) CHECK(is_abelian(D, phi));
  }
}

TEST_CASE("ideal counts in type A match partition counts") {
  for (int n = 1; n <= 4; ++n) {
    auto L = build_classical(Family::A, n);
    const RootDatum D = compute_root_datum(*L);
    CHECK(enumerate_ideals(D, D.ell).size() == partition_count(static_cast<unsigned>(n)).get_ui());
  }
}
