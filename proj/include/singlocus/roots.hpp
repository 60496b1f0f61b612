#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "singlocus/lie_algebra.hpp"

namespace singlocus {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Root space decomposition of g with respect to a split Cartan subalgebra.
///
/// Roots are stored as value vectors on the Cartan basis: roots[k][i] is
/// phi_k(cartan[i]). Indices [0, r) are the positive roots ordered by height
/// and then by simple-root coordinates (lexicographically descending); index
/// r + k holds the negative of root k.
struct RootDatum {
  const LieAlgebraData* alg = nullptr;
  std::size_t ell = 0;
  std::size_t r = 0;

  std::vector<Element> cartan;
  Mat cartan_gram;  // Killing form on the Cartan basis
  Mat form;         // inverse of cartan_gram: (lambda, mu) = lambda^T form mu

  std::vector<Vec> roots;             // 2r entries
  std::vector<Element> root_vectors;  // e_phi; negatives scaled so (e_phi, e_-phi) = 1
  std::vector<std::size_t> basis_index;  // basis element spanning each root space, or npos
  std::vector<std::size_t> simples;      // indices into [0, r)
  std::vector<Vec> simple_coords;        // 2r entries, integer coordinates on the simple roots
  std::vector<int> heights;              // 2r entries, negative for negative roots
  std::vector<std::vector<std::size_t>> positive_sum;  // a + b among positives, or npos
  Vec rho;

  // Weight of every basis element when the basis consists of weight vectors
  // (always true for the built-in algebras); empty otherwise.
  std::vector<Vec> basis_weights;

  std::optional<std::size_t> find_root(const Vec& values) const;
  std::size_t negative_of(std::size_t k) const { return k < r ? k + r : k - r; }
  Rat pair(const Vec& lambda, const Vec& mu) const;

  /// Coordinates of h on the Cartan basis; throws std::invalid_argument if h
  /// is not in the Cartan subalgebra.
  Vec cartan_coords(const Element& h) const;

  /// phi(h) for a Cartan element h.
  Rat value(const Vec& phi, const Element& h) const;

  /// Simple-root coordinates of an element of the root lattice.
  Vec to_simple_coords(const Vec& weight) const;
};

/// Throws std::logic_error if some ad-eigenvalue is not an integer, which
/// cannot happen for the split realizations.
RootDatum compute_root_datum(const LieAlgebraData& alg);

/// m_j = d_j - 1 sorted ascending; throws std::logic_error unless they sum to r.
std::vector<int> exponents_from_degrees(std::vector<int> degrees, std::size_t r);

/// Ideal in the positive roots: sorted indices into [0, r).
using IdealSet = std::vector<std::size_t>;

bool is_upward_closed(const RootDatum& D, const IdealSet& phi);

/// All ideals of the positive roots with k elements, ordered by their
/// descending height sequence and then by root indices.
std::vector<IdealSet> enumerate_ideals(const RootDatum& D, std::size_t k);

/// Same result by filtering all k-subsets; only sensible for small r.
std::vector<IdealSet> enumerate_ideals_brute_force(const RootDatum& D, std::size_t k);

bool is_abelian(const RootDatum& D, const IdealSet& phi);

Vec weight_sum(const RootDatum& D, const IdealSet& phi);

bool is_dominant_integral(const RootDatum& D, const Vec& lambda);

/// Weyl dimension formula; throws std::invalid_argument for non-dominant weights.
Integer weyl_dimension(const RootDatum& D, const Vec& lambda);

/// (lambda, lambda + 2 rho) under the Killing form.
Rat casimir_value(const RootDatum& D, const Vec& lambda);

/// Number of partitions of m (m <= 64).
Integer partition_count(unsigned m);

}  // namespace singlocus
