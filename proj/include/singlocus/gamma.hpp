#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "singlocus/exterior.hpp"
#include "singlocus/polynomial.hpp"
#include "singlocus/roots.hpp"

namespace singlocus {

/// A perfect matching of {1..2r}: pairs sorted internally and by first element.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  /// Sign of the permutation (a_1 b_1 a_2 b_2 ...) of the canonical pairs.
  int sign() const;
  /// Flattened pairs after swapping the first pair when needed, so that the
  /// permutation always has sign +1.
  std::vector<int> permutation() const;
};

/// All matchings in canonical order; r <= 8.
std::vector<Matching> enumerate_matchings(int r);

/// Gamma(w_1 ^ ... ^ w_2r) as the Pfaffian of the matrix of brackets
/// [w_a, w_b], read as linear polynomials.
Polynomial gamma_matching(const std::vector<Element>& w);

/// The same sum, one term per enumerated matching (slow; for cross-checks).
Polynomial gamma_matching_enumerated(const std::vector<Element>& w);

/// Gamma(zeta)(x) = (-1)^r / r! ((d x)^r, zeta).
Rat gamma_pairing(const Multivector& zeta, const Element& x);

/// Both sides of (y_1...y_r, Gamma(zeta)) = (-1)^r (d y_1 ^ ... ^ d y_r, zeta).

/// Gamma of basis 2r-vectors, memoized.
class GammaTable {
 public:
  explicit GammaTable(const LieAlgebraData& alg);
  const Polynomial& of_basis(Mask subset);
  Polynomial of(const Multivector& zeta);

 private:
  const LieAlgebraData* alg_;
  std::map<Mask, Polynomial> cache_;
};

/// Both sides of (y_1...y_r, Gamma(zeta)) = (-1)^r (d y_1 ^ ... ^ d y_r, zeta).
std::pair<Rat, Rat> transpose_check(const std::vector<Element>& y, const Multivector& zeta);
std::pair<Rat, Rat> transpose_check(const std::vector<Element>& y, const Multivector& zeta, GammaTable& table);

/// Gamma on one weight block of the top-degree space: its image and kernel.
struct GammaBlock {
  WeightBlock block;
  std::vector<Polynomial> images;  // Gamma(x_S) for each subset of the block
  std::vector<Vec> kernel;         // block coordinates
  std::vector<std::size_t> pivots; // subsets whose images form a basis of the image
};

struct ModuleM {
  std::vector<GammaBlock> blocks;
  std::vector<Polynomial> basis;
  std::size_t dim = 0;
  std::size_t kernel_dim = 0;
  std::size_t total = 0;  // C(n, 2r)
};

ModuleM build_M(const RootDatum& D, GammaTable& gamma);

/// Smallest theta-stable subspace containing the seeds.
std::vector<Polynomial> adjoint_closure(const std::vector<Polynomial>& seeds);
std::vector<Multivector> adjoint_closure(const std::vector<Multivector>& seeds);

/// Same closures, kept as one span per weight; needs a weight basis.
std::vector<Polynomial> adjoint_closure(const RootDatum& D, const std::vector<Polynomial>& seeds);
std::vector<Multivector> adjoint_closure(const RootDatum& D, const std::vector<Multivector>& seeds);

struct HighestWeightVector {
  Vec weight;
  Multivector vector;
};

/// Joint kernel of theta(e_alpha), alpha simple, on the k-th exterior power.
std::vector<HighestWeightVector> highest_weight_vectors(const RootDatum& D, std::size_t k);

/// wedge of e_phi over phi in the ideal, in increasing root order.
Multivector ideal_wedge(const RootDatum& D, const IdealSet& phi);

/// Random integer coordinates in [-9, 9].
Element random_element(const LieAlgebraData& alg, std::mt19937_64& rng);
Element random_regular_element(const LieAlgebraData& alg, std::mt19937_64& rng);

struct KappaTrial {
  std::vector<Element> w;
  std::vector<Element> u;  // orthocomplement basis from kernel_basis
  bool skipped = false;
  bool proportional = false;
  Rat raw;        // Gamma(w) = raw * psi(u)
  Rat volume;     // star(u_1 ^ ... ^ u_l) = volume * w_1 ^ ... ^ w_2r
  Rat normalized; // raw * volume
};

struct KappaFit {
  std::vector<KappaTrial> trials;
  bool consistent = false;
  std::optional<Rat> kappa;  // common normalized constant
  std::string failure;
};

/// Compares gamma_matching(w) against psi_minor on the Killing-orthogonal
/// complement of span(w) over random independent 2r-tuples.
KappaFit fit_kappa(const InvariantSet& inv, std::size_t trials, std::mt19937_64& rng);

}  // namespace singlocus
