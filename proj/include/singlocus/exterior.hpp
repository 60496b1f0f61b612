#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "singlocus/lie_algebra.hpp"
#include "singlocus/roots.hpp"

namespace singlocus {

/// Bit i set means basis element x_i is a factor; the factors of a basis
/// multivector are always wedged in increasing index order.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/// Sparse element of the exterior algebra of g, possibly of mixed grade.
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(const LieAlgebraData& alg);

  static Multivector scalar(const LieAlgebraData& alg, const Rat& c);
  static Multivector basis(const LieAlgebraData& alg, Mask m);
  static Multivector from_element(const Element& x);
  /// x_1 ^ ... ^ x_k; the scalar 1 for an empty list.
  static Multivector wedge_of(const LieAlgebraData& alg, const std::vector<Element>& xs);

  const LieAlgebraData* algebra() const { return alg_; }
  const std::map<Mask, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Grade of a nonzero homogeneous multivector; -1 for zero; throws on mixed grade.
  int grade() const;
  Rat coefficient(Mask m) const;
  void add(Mask m, const Rat& c);

  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a);
  friend Multivector operator*(const Rat& s, const Multivector& a);
  friend bool operator==(const Multivector& a, const Multivector& b) = default;

 private:
  const LieAlgebraData* alg_ = nullptr;
  std::map<Mask, Rat> terms_;
};

/// Sign of x_A ^ x_B relative to x_{A u B} (0 when A and B overlap).
int wedge_sign(Mask a, Mask b);

Multivector wedge(const Multivector& a, const Multivector& b);
Multivector power(const Multivector& omega, unsigned k);

/// Gram-determinant pairing; different grades are orthogonal.
Rat ext_pairing(const Multivector& u, const Multivector& v);

/// iota(y) as the degree -1 antiderivation with iota(y) z = (y, z).
Multivector interior(const Element& y, const Multivector& w);
/// iota(u) for general u, with iota(p ^ q) = iota(q) iota(p); transpose of wedge by u.
Multivector interior(const Multivector& u, const Multivector& w);

/// d x = 1/2 sum_i w_i ^ [z_i, x] with (w_i, z_j) = delta_ij; the basis of g
/// and its dual are used unless another pair is given.
Multivector coboundary_d(const Element& x);
Multivector coboundary_d(const Element& x, const std::vector<Element>& w, const std::vector<Element>& z);

/// Adjoint action of x, extended as a derivation.
Multivector theta(const Element& x, const Multivector& u);
/// theta(x_i) for basis element i.
Multivector theta_basis(std::size_t i, const Multivector& u);

struct VolumeData {
  Multivector mu;      // x_0 ^ x_1 ^ ... ^ x_{n-1}
  Rat mu_norm_sq = 0;  // (mu, mu) = det of the Killing matrix
};

VolumeData volume(const LieAlgebraData& alg);

/// u -> iota(u) mu.
Multivector star(const Multivector& u);

/// Basis of {y : iota(y) omega = 0} for a 2-vector omega.
std::vector<Element> radical(const Multivector& omega);

/// All k-subsets of {0..n-1} in lexicographic order of their index lists.
std::vector<Mask> k_subsets(std::size_t n, std::size_t k);

/// sum_i theta(z_i) theta(w_i) applied to u, for dual bases (w_i, z_j) = delta_ij.
Multivector casimir(const Multivector& u);

/// Matrix of sum_i theta(z_i) theta(w_i) on the k-th exterior power, in the
/// basis k_subsets(n, k).
Mat casimir_matrix(const LieAlgebraData& alg, std::size_t k);

/// Basis multivectors of one Cartan weight inside a fixed exterior power.
struct WeightBlock {
  Vec weight;
  std::vector<Mask> subsets;
};

/// Weight decomposition of the k-th exterior power; needs a basis of weight vectors.
std::vector<WeightBlock> weight_blocks(const RootDatum& D, std::size_t k);

/// Coordinates of u on the block basis; throws if u has other components.
Vec block_coords(const Multivector& u, const WeightBlock& block);
Multivector from_block_coords(const LieAlgebraData& alg, const WeightBlock& block, const Vec& c);

/// Casimir restricted to a weight block (it preserves weights).
Mat casimir_block(const LieAlgebraData& alg, const WeightBlock& block);

}  // namespace singlocus
