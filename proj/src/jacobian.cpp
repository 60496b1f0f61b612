#include "singlocus/jacobian.hpp"

#include <stdexcept>

namespace singlocus {

Gradients invariant_gradients(const InvariantSet& inv) {
  Gradients out;
  for (const auto& p : inv.generators) {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(partial_var(p, i));
    out.push_back(std::move(g));
  }
  return out;
}

Element gradient_at(const std::vector<Polynomial>& grad, const Element& x) {
  const LieAlgebraData& L = *x.algebra();
  const Vec values = killing_coords(x);
  Vec c(L.n, Rat(0));
  for (std::size_t i = 0; i < L.n; ++i) c[i] = evaluate_vars(grad[i], values);
  return Element(&L, std::move(c));
}

Multivector jacobian_wedge(const Gradients& grads, const Element& x) {
  std::vector<Element> g;
  for (const auto& grad : grads) g.push_back(gradient_at(grad, x));
  return Multivector::wedge_of(*x.algebra(), g);
}

Polynomial root_product(const RootDatum& D) {
  std::vector<Vec> forms(D.roots.begin(), D.roots.begin() + static_cast<long>(D.r));
  return product_of_linear_forms(forms, D.ell);
}

namespace {

// Determinant of a square matrix of polynomials by cofactor expansion.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  Polynomial total = m[0][0].zero_like();
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][c] * poly_det(minor);
    total = c % 2 ? total - term : total + term;
  }
  return total;
}

}  // namespace

JacobianOnCartan jacobian_on_cartan(const RootDatum& D, const Gradients& grads) {
  const LieAlgebraData& L = *D.alg;
  const std::size_t ell = D.ell;
  if (grads.size() != ell) throw std::invalid_argument("need one gradient per generator");
  // The Killing gradient on h, in the coordinates t of sum t_i h_i: restricted partials.
  std::vector<std::vector<Polynomial>> restricted(ell);
  for (std::size_t j = 0; j < ell; ++j)
    for (std::size_t i = 0; i < L.n; ++i) restricted[j].push_back(restrict(grads[j][i], D.cartan));

  Mask cartan_mask = 0;
  for (const auto& h : D.cartan) {
    std::size_t idx = npos;
    for (std::size_t i = 0; i < L.n; ++i)
      if (h.coords()[i] != 0) {
        if (idx != npos) throw std::logic_error("Cartan basis is not a subset of the basis");
        idx = i;
      }
    cartan_mask |= Mask(1) << idx;
  }

  JacobianOnCartan out;
  out.only_cartan = true;
  Polynomial cartan_minor(ell);
  for (Mask m : k_subsets(L.n, ell)) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < L.n; ++i)
      if (m >> i & 1) idx.push_back(i);
    std::vector<std::vector<Polynomial>> mat(ell);
    for (std::size_t a = 0; a < ell; ++a)
      for (std::size_t j = 0; j < ell; ++j) mat[a].push_back(restricted[j][idx[a]]);
    const Polynomial minor = poly_det(mat);
    if (m == cartan_mask) {
      cartan_minor = minor;
    } else if (!minor.is_zero()) {
      out.only_cartan = false;
      if (out.failure.empty()) out.failure = "a minor off the Cartan subset is nonzero";
    }
  }
  if (cartan_minor.is_zero()) {
    if (out.failure.empty()) out.failure = "Cartan minor vanishes";
    return out;
  }
  out.constant = proportionality(cartan_minor, root_product(D));
  if (!out.constant && out.failure.empty()) out.failure = "Cartan minor is not a multiple of the root product";
  return out;
}

}  // namespace singlocus
