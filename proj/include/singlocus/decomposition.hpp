#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "singlocus/gamma.hpp"

namespace singlocus {

/// Eigenspace of the Casimir on the k-th exterior power, computed blockwise.
struct Eigenspace {
  std::vector<WeightBlock> blocks;
  std::vector<std::vector<Vec>> vectors;  // block coordinates, one list per block
  std::size_t dim = 0;
  std::vector<Multivector> as_multivectors(const LieAlgebraData& alg) const;
};

Eigenspace casimir_eigenspace(const RootDatum& D, std::size_t k, const Rat& eigenvalue);

struct IdealSummary {
  IdealSet ideal;
  Vec weight;              // sum of the roots in the ideal
  Integer weyl_dim;
  Rat casimir;             // (weight, weight + 2 rho)
  bool highest = false;    // wedge of the ideal is killed by the simple root vectors
  bool eigenvector = false;  // Casimir acts on the wedge by the scalar ell
  std::size_t orbit_dim = 0;  // theta-closure of Gamma(star(wedge)); 0 if not computed
};

std::vector<IdealSummary> summarize_ideals(const RootDatum& D);

struct CasimirReport {
  std::vector<IdealSummary> ideals;
  Integer weyl_sum;
  std::size_t eigenspace_dim = 0;     // eigenvalue ell on the ell-th power
  std::size_t highest_count = 0;      // highest weight vectors on the ell-th power
  Rat max_casimir;                    // over those highest weight vectors
  std::size_t max_multiplicity = 0;   // highest weight vectors reaching the maximum
  bool ok = false;
  std::string failure;
};

/// Highest weight vectors of the ell-th exterior power, their Casimir values,
/// and the eigenvalue-ell eigenspace against the Weyl dimensions of the ideals.
CasimirReport casimir_maximal(const RootDatum& D);

struct DecompositionReport {
  std::vector<IdealSummary> ideals;
  Integer weyl_sum;
  std::size_t eig_low = 0;          // eigenvalue ell on the ell-th power
  std::size_t eig_top = 0;          // eigenvalue ell on the 2r-th power
  std::size_t star_image_rank = 0;  // star of the low eigenspace
  bool star_inside = false;         // ... lands in the top eigenspace
  std::size_t gamma_image = 0;      // dim M
  std::size_t gamma_kernel = 0;
  std::size_t total = 0;            // C(n, 2r)
  bool kernel_is_annihilator = false;
  std::size_t centralizer_closure = 0;  // theta-closure of [g^x] for a regular x
  std::size_t coboundary_closure = 0;   // theta-closure of (d x)^r
  bool ok = false;
  std::string failure;
};

DecompositionReport decompose_and_verify(const RootDatum& D, const ModuleM& M, GammaTable& gamma,
                                         const Element& regular);

}  // namespace singlocus
