#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "singlocus/gamma.hpp"

using namespace singlocus;

namespace {

const char* kAll[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2"};

Polynomial product_of(const std::vector<Element>& v) {
  Polynomial p = Polynomial::constant(Polynomial(*v[0].algebra()), 1);
  for (const auto& x : v) p = p * Polynomial::linear(x);
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  Polynomial like(2);
  const Polynomial t0 = Polynomial::variable(like, 0), t1 = Polynomial::variable(like, 1);
  const Polynomial f = pow(t0 + t1, 2) - t0 * t0 - t1 * t1;
  CHECK(f == Rat(2) * t0 * t1);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK(evaluate_vars(f, Vec{Rat(3), Rat(1, 2)}) == 3);
  CHECK((f - f).is_zero());
  CHECK((f - f).degree() == -1);
  CHECK(partial_var(f, 0) == Rat(2) * t1);
  CHECK(proportionality(Rat(-5, 3) * f, f) == Rat(-5, 3));
  CHECK_FALSE(proportionality(f + t0, f));
}

TEST_CASE("text round trip") {
  auto L = build_classical(Family::A, 2);
  const InvariantSet inv = invariant_generators(*L);
  for (const auto& p : inv.generators) CHECK(parse_text(to_text(p), p) == p);
  CHECK(to_text(Polynomial(3)) == "0\n");
}

TEST_CASE("Killing quadratic of sl(2)") {
  auto L = build_classical(Family::A, 1);
  const InvariantSet inv = invariant_generators(*L);
  REQUIRE(inv.generators.size() == 1);
  const Polynomial x0 = Polynomial::variable(Polynomial(*L), 0);
  const Polynomial x1 = Polynomial::variable(Polynomial(*L), 1);
  const Polynomial x2 = Polynomial::variable(Polynomial(*L), 2);
  CHECK(inv.generators[0] == Rat(1, 16) * x0 * x0 + Rat(1, 4) * x1 * x2);
  const Element h = Element::basis(*L, 0);
  CHECK(evaluate(inv.generators[0], h) == 4);
}

TEST_CASE("symmetric pairing examples in sl(2)") {
  auto L = build_classical(Family::A, 1);
  const Element h = Element::basis(*L, 0), e = Element::basis(*L, 1), f = Element::basis(*L, 2);
  const Polynomial h2 = pow(Polynomial::linear(h), 2);
  CHECK(sym_pairing(h2, h2) == 128);
  CHECK(sym_pairing(Polynomial::linear(e), Polynomial::linear(f)) == 4);
  CHECK(sym_pairing(h2, Polynomial::linear(h)) == 0);
  CHECK(pair_with_product({h, h}, h2) == 128);
  const Polynomial r = restrict(Polynomial::linear(h), {h});
  CHECK(r.nvars() == 1);
  CHECK(r == Rat(8) * Polynomial::variable(Polynomial(1), 0));
}

TEST_CASE("symmetric pairing equals the permanent of Killing values") {
  std::mt19937_64 rng(21);
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(label);
    auto L = build_classical(parse_label(label));
    for (int t = 0; t < 5; ++t) {
      const std::size_t k = 1 + rng() % 4;
      std::vector<Element> a, b;
      for (std::size_t i = 0; i < k; ++i) {
        a.push_back(random_element(*L, rng));
        b.push_back(random_element(*L, rng));
      }
      Mat g(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g(i, j) = killing_form(a[i], b[j]);
      const Polynomial pb = product_of(b);
      CHECK(sym_pairing(product_of(a), pb) == oracle::permanent(g));
      CHECK(pair_with_product(a, pb) == oracle::permanent(g));
    }
  }
}

TEST_CASE("linear polynomials evaluate to Killing values") {
  std::mt19937_64 rng(22);
  auto L = build_classical(Family::C, 3);
  for (int t = 0; t < 10; ++t) {
    const Element v = random_element(*L, rng), y = random_element(*L, rng);
    CHECK(evaluate(Polynomial::linear(v), y) == killing_form(v, y));
    CHECK(evaluate(partial_derivative(pow(Polynomial::linear(v), 3), y), y) ==
          Rat(3) * killing_form(v, y) * killing_form(v, y) * killing_form(v, y));
  }
}

TEST_CASE("invariant generators are invariant with the right degrees") {
  std::mt19937_64 rng(23);
  for (const char* label : kAll) {
    CAPTURE(label);
    auto L = build_classical(parse_label(label));
    const InvariantSet inv = invariant_generators(*L);
    CHECK(inv.degrees == invariant_degrees(L->label));
    REQUIRE(inv.generators.size() == L->ell);
    int sum = 0;
    for (std::size_t j = 0; j < inv.generators.size(); ++j) {
      CHECK(inv.generators[j].degree() == inv.degrees[j]);
      CHECK(inv.generators[j].is_homogeneous());
      sum += inv.degrees[j] - 1;
    }
    CHECK(sum == static_cast<int>(L->r));
    if (L->n > 21) continue;
    const Element y = random_element(*L, rng);
    for (const auto& p : inv.generators) CHECK(theta(y, p).is_zero());
    const Element x = random_element(*L, rng);
    for (const auto& p : inv.generators) CHECK(evaluate(directional_invariance_defect(p, y), x) == 0);
  }
}

TEST_CASE("invariants are constant along adjoint orbits of a nilpotent") {
  auto L = build_classical(Family::G, 2);
  const RootDatum D = compute_root_datum(*L);
  const InvariantSet inv = invariant_generators(*L);
  std::mt19937_64 rng(24);
  const Element x = random_element(*L, rng);
  for (std::size_t k = 0; k < D.r; ++k) {
    const Element n = D.root_vectors[k];
    Element y = x;
    // exp(ad n) x by hand; ad n is nilpotent of order at most 4 on g
    Element term = x;
    for (int p = 1; p <= 4; ++p) {
      term = Rat(1, p) * bracket(n, term);
      y = y + term;
    }
    for (const auto& g : inv.generators) CHECK(evaluate(g, y) == evaluate(g, x));
  }
}

TEST_CASE("psi minor on sl(2)") {
  auto L = build_classical(Family::A, 1);
  const InvariantSet inv = invariant_generators(*L);
  const Element h = Element::basis(*L, 0);
  const PsiMinor m = psi_minor(inv, {h});
  CHECK_FALSE(m.degenerate);
  CHECK(evaluate(m.value, h) == 8);
}

TEST_CASE("generators match the stored text") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(label);
    auto L = build_classical(parse_label(label));
    const InvariantSet inv = invariant_generators(*L);
    std::string got;
    for (std::size_t j = 0; j < inv.generators.size(); ++j)
      got += "# degree " + std::to_string(inv.degrees[j]) + "\n" + to_text(inv.generators[j]) + "\n";
    CHECK(got == read_file(std::string(SINGLOCUS_GOLDEN_DIR) + "/" + label + "_invariants.txt"));
  }
}
