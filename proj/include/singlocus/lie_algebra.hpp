#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singlocus/linalg.hpp"

namespace singlocus {

enum class Family { A, B, C, D, G };

char family_letter(Family f);

struct AlgebraLabel {
  Family family = Family::A;
  int rank = 1;

  std::string str() const;
  friend bool operator==(const AlgebraLabel&, const AlgebraLabel&) = default;
};

/// Parses "A2", "C3", "G2", ... Throws std::invalid_argument on malformed
/// input or unsupported family/rank.
AlgebraLabel parse_label(const std::string& text);

/// Throws std::invalid_argument if the family/rank pair is not supported.
void check_supported(const AlgebraLabel& label);

struct SparseEntry {
  std::size_t index;
  Rat value;
};
using SparseCoords = std::vector<SparseEntry>;

/// A simple Lie algebra over Q given by structure constants in a fixed
/// ordered basis: Cartan elements first, then positive root vectors
/// (height, then lexicographic), then the matching negative root vectors.
/// All basis elements are primitive integer matrices of the defining
/// representation.
///
/// The defining matrix representation is kept alongside the structure
/// constants; invariant polynomials are read off from it.
struct LieAlgebraData {
  AlgebraLabel label;
  std::size_t n = 0;    // dim g
  std::size_t ell = 0;  // rank
  std::size_t r = 0;    // number of positive roots
  std::vector<std::string> basis_names;
  std::vector<std::vector<SparseCoords>> structure;  // [i][j] -> coords of [x_i, x_j]
  Mat killing;
  Mat killing_inverse;
  Vec chamber;  // coords of a Cartan element positive on every positive root
  std::size_t rep_dim = 0;
  std::vector<Mat> rep;        // defining representation of each basis element
  std::optional<Mat> rep_form;  // S with X^T S + S X = 0 (types B, C, D, G)

  std::string name() const { return label.str(); }
};

using AlgebraPtr = std::shared_ptr<const LieAlgebraData>;

/// An element of g, stored by coordinates in the algebra's basis.
class Element {
 public:
  Element() = default;
  Element(const LieAlgebraData* alg, Vec coords);

  static Element zero(const LieAlgebraData& alg);
  static Element basis(const LieAlgebraData& alg, std::size_t i);

  const LieAlgebraData* algebra() const { return alg_; }
  const Vec& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  bool is_zero() const { return singlocus::is_zero(coords_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  friend Element operator*(const Rat& s, const Element& a);
  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_ == b.alg_ && a.coords_ == b.coords_;
  }

 private:
  const LieAlgebraData* alg_ = nullptr;
  Vec coords_;
};

/// Throws std::invalid_argument when the two elements live in different algebras.
void require_same_algebra(const LieAlgebraData* a, const LieAlgebraData* b);

/// Builds A1-A4, B2-B4, C2-C4, D3-D4 or G2 and checks antisymmetry, Jacobi
/// and invariance of the Killing form before returning.
AlgebraPtr build_classical(Family family, int rank);
AlgebraPtr build_classical(const AlgebraLabel& label);

Element bracket(const Element& x, const Element& y);

/// (x, y) under the Killing form, read from the cached Gram matrix.
Rat killing_form(const Element& x, const Element& y);

/// Coordinates (x_i, y) for all basis elements x_i.
Vec killing_coords(const Element& y);

/// Returns z_j with (w_i, z_j) = delta_ij. Throws std::domain_error if the
/// input does not span g.
std::vector<Element> dual_basis(const std::vector<Element>& basis);

/// Matrix of ad x: column j holds the coordinates of [x, x_j].
Mat ad_matrix(const Element& x);

std::vector<Element> centralizer(const Element& x);
bool is_regular(const Element& x);

/// Element of g whose defining-representation matrix is m.
/// Throws std::invalid_argument if m is not in the image.
Element element_from_matrix(const LieAlgebraData& alg, const Mat& m);
Mat to_matrix(const Element& x);

/// Outcome of the structure checks on all basis pairs and triples.
struct StructureCheck {
  bool antisymmetric = true;
  bool jacobi = true;
  bool killing_symmetric = true;
  bool killing_nondegenerate = true;
  bool killing_invariant = true;
  std::size_t triples_checked = 0;
  std::string counterexample;

  bool ok() const {
    return antisymmetric && jacobi && killing_symmetric && killing_nondegenerate &&
           killing_invariant;
  }
};

StructureCheck check_structure(const LieAlgebraData& alg);

/// Recomputes the Killing form as trace(ad x_i ad x_j).
Mat killing_from_structure(const LieAlgebraData& alg);

struct RootDatum;

/// Sum of the simple root vectors; asserted regular and ad-nilpotent.
Element principal_nilpotent(const RootDatum& roots);

/// Linear functional on the centralizer of a principal nilpotent e whose
/// kernel is the centralizer's intersection with [n, n].
struct SingularFunctional {
  std::vector<Element> centralizer_basis;  // s_1..s_ell
  Vec xi;                                   // xi(sum t_i s_i) = sum xi_i t_i
  std::vector<Element> kernel;              // basis of Ker xi (ell - 1 elements)
};

/// Throws std::logic_error if the intersection is not a hyperplane.
SingularFunctional singular_functional(const RootDatum& roots, const Element& e);

}  // namespace singlocus
