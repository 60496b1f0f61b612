#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singlocus/lie_algebra.hpp"

namespace singlocus {

inline constexpr std::size_t kMaxVars = 40;

using Monomial = std::array<std::uint8_t, kMaxVars>;

int monomial_degree(const Monomial& m);

/// Sparse polynomial with rational coefficients.
///
/// A polynomial attached to an algebra lives in S(g): variable i is the basis
/// element x_i, read as the linear function y -> (x_i, y). A polynomial with
/// no algebra is a plain polynomial in `nvars` free variables t_0, t_1, ...
/// (restrictions produce these).
///
/// Terms are kept sorted by exponent vector, largest first, with no zero
/// coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rat>;

  Polynomial() = default;
  explicit Polynomial(const LieAlgebraData& alg);
  explicit Polynomial(std::size_t nvars);

  static Polynomial constant(const Polynomial& like, const Rat& c);
  static Polynomial variable(const Polynomial& like, std::size_t i);
  /// The linear polynomial y -> (v, y).
  static Polynomial linear(const Element& v);

  const LieAlgebraData* algebra() const { return alg_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rat coefficient(const Monomial& m) const;
  Polynomial zero_like() const;

  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  void assign(std::vector<Term> terms);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rat& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  const LieAlgebraData* alg_ = nullptr;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, unsigned k);

/// sum of s * a * b, accumulated once.
struct ScaledProduct {
  Rat scale;
  const Polynomial* a;
  const Polynomial* b;
};
Polynomial sum_of_products(const std::vector<ScaledProduct>& products, const Polynomial& like);

/// Value at a point given by the values of the variables.
Rat evaluate_vars(const Polynomial& f, const Vec& values);

/// f(y) for y in g (substitutes the Killing coordinates (x_i, y)).
Rat evaluate(const Polynomial& f, const Element& y);

/// Derivative with respect to variable k.
Polynomial partial_var(const Polynomial& f, std::size_t k);

/// Directional derivative along v.
Polynomial partial_derivative(const Polynomial& f, const Element& v);

/// p(d): replaces each basis element x_i of p by the derivative along x_i.
Polynomial apply_diffop(const Polynomial& p, const Polynomial& f);

/// The Killing-extended pairing on S(g); zero between different degrees.
Rat sym_pairing(const Polynomial& f, const Polynomial& g);

/// (y_1 ... y_k, g) computed as d_{y_1} ... d_{y_k} g.
Rat pair_with_product(const std::vector<Element>& y, const Polynomial& g);

/// Adjoint action of y as a derivation of S(g).
Polynomial theta(const Element& y, const Polynomial& f);

/// x -> d/dt f(x + t[y, x]) at t = 0.
Polynomial directional_invariance_defect(const Polynomial& f, const Element& y);

/// f composed with t -> sum_i t_i s_i; a polynomial in s.size() free variables.
Polynomial restrict(const Polynomial& f, const std::vector<Element>& subspace);

/// Substitutes a linear form (over the target variables) for every variable.
Polynomial substitute_linear(const Polynomial& f, const std::vector<Polynomial>& forms);

/// Product of linear forms given by coefficient vectors over `nvars` free variables.
Polynomial product_of_linear_forms(const std::vector<Vec>& forms, std::size_t nvars);

/// One term per line: "<coefficient> x0^2 x3", largest exponent vector first;
/// "0" for the zero polynomial.
std::string to_text(const Polynomial& f);
Polynomial parse_text(const std::string& text, const Polynomial& like);

/// If f = c * g for a rational c, returns c (g must be nonzero).
std::optional<Rat> proportionality(const Polynomial& f, const Polynomial& g);

/// Generators of the invariant polynomials.
struct InvariantSet {
  std::vector<Polynomial> generators;
  std::vector<int> degrees;
  std::string description;  // how each generator was produced
};

/// Degree-2 generator: the Killing quadratic (y, y) / 2. Higher degrees:
/// characteristic-polynomial coefficients of the defining representation
/// (types A, B, C and G2), with the Pfaffian replacing the determinant in
/// type D.
InvariantSet invariant_generators(const LieAlgebraData& alg);

/// Degrees of the basic invariants without building the polynomials.
std::vector<int> invariant_degrees(const AlgebraLabel& label);

struct PsiMinor {
  Polynomial value;
  bool degenerate = false;  // the u_i were linearly dependent
};

/// det(d_{u_i} p_j).
PsiMinor psi_minor(const InvariantSet& inv, const std::vector<Element>& u);

}  // namespace singlocus
