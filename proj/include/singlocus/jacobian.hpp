#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singlocus/exterior.hpp"
#include "singlocus/polynomial.hpp"
#include "singlocus/roots.hpp"

namespace singlocus {

/// grads[j][i] = dp_j / dx_i.
using Gradients = std::vector<std::vector<Polynomial>>;

Gradients invariant_gradients(const InvariantSet& inv);

/// Killing gradient of p_j at x: sum_i (dp_j/dx_i)(x) x_i.
Element gradient_at(const std::vector<Polynomial>& grad, const Element& x);

/// Wedge of the Killing gradients of all generators at x.
Multivector jacobian_wedge(const Gradients& grads, const Element& x);

/// prod over positive roots of phi(sum t_i h_i), a polynomial in ell free variables.
Polynomial root_product(const RootDatum& D);

struct JacobianOnCartan {
  bool only_cartan = false;  // every minor off the Cartan subset vanishes
  std::optional<Rat> constant;  // Cartan minor = constant * root_product
  std::string failure;
};

/// The wedge of gradients restricted to the Cartan subalgebra, computed
/// symbolically.
JacobianOnCartan jacobian_on_cartan(const RootDatum& D, const Gradients& grads);

}  // namespace singlocus
