#include "singlocus/decomposition.hpp"

#include <map>

namespace singlocus {

namespace {

SparseSpan<Mask>::Vector as_sparse(const Multivector& v) {
  return SparseSpan<Mask>::Vector(v.terms().begin(), v.terms().end());
}

std::vector<Vec> full_kernel(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < n; ++c) {
    Vec e(n, Rat(0));
    e[c] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

void fail(std::string& failure, const std::string& what) {
  if (failure.empty()) failure = what;
}

}  // namespace

std::vector<Multivector> Eigenspace::as_multivectors(const LieAlgebraData& alg) const {
  std::vector<Multivector> out;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& v : vectors[b]) out.push_back(from_block_coords(alg, blocks[b], v));
  return out;
}

Eigenspace casimir_eigenspace(const RootDatum& D, std::size_t k, const Rat& eigenvalue) {
  Eigenspace out;
  out.blocks = weight_blocks(D, k);
  for (const auto& block : out.blocks) {
    Mat c = casimir_block(*D.alg, block);
    for (std::size_t i = 0; i < c.rows(); ++i) c(i, i) -= eigenvalue;
    out.vectors.push_back(kernel_basis(c));
    out.dim += out.vectors.back().size();
  }
  return out;
}

std::vector<IdealSummary> summarize_ideals(const RootDatum& D) {
  const LieAlgebraData& L = *D.alg;
  std::vector<IdealSummary> out;
  for (const auto& phi : enumerate_ideals(D, D.ell)) {
    IdealSummary s;
    s.ideal = phi;
    s.weight = weight_sum(D, phi);
    s.weyl_dim = weyl_dimension(D, s.weight);
    s.casimir = casimir_value(D, s.weight);
    const Multivector w = ideal_wedge(D, phi);
    s.highest = true;
    for (auto a : D.simples)
      if (!theta(D.root_vectors[a], w).is_zero()) s.highest = false;
    s.eigenvector = casimir(w) == Rat(L.ell) * w;
    out.push_back(std::move(s));
  }
  return out;
}

CasimirReport casimir_maximal(const RootDatum& D) {
  const Rat ell(D.ell);
  CasimirReport rep;
  rep.ideals = summarize_ideals(D);
  for (const auto& s : rep.ideals) {
    rep.weyl_sum += s.weyl_dim;
    if (!s.highest) fail(rep.failure, "wedge of an ideal is not a highest weight vector");
    if (!s.eigenvector || s.casimir != ell) fail(rep.failure, "wedge of an ideal is not a Casimir eigenvector for ell");
  }
  rep.eigenspace_dim = casimir_eigenspace(D, D.ell, ell).dim;
  const auto hw = highest_weight_vectors(D, D.ell);
  rep.highest_count = hw.size();
  bool first = true;
  for (const auto& v : hw) {
    const Rat c = casimir_value(D, v.weight);
    if (!(casimir(v.vector) == c * v.vector)) fail(rep.failure, "Casimir value disagrees on a highest weight vector");
    if (first || c > rep.max_casimir) {
      rep.max_casimir = c;
      rep.max_multiplicity = 0;
      first = false;
    }
    if (c == rep.max_casimir) ++rep.max_multiplicity;
  }
  if (rep.max_casimir != ell) fail(rep.failure, "largest Casimir value is " + to_string(rep.max_casimir));
  if (rep.max_multiplicity != rep.ideals.size())
    fail(rep.failure, "highest weight vectors with Casimir value ell do not match the ideals");
  if (Integer(static_cast<unsigned long>(rep.eigenspace_dim)) != rep.weyl_sum)
    fail(rep.failure, "eigenspace dimension differs from the sum of Weyl dimensions");
  rep.ok = rep.failure.empty();
  return rep;
}

DecompositionReport decompose_and_verify(const RootDatum& D, const ModuleM& M, GammaTable& gamma,
                                         const Element& regular) {
  const LieAlgebraData& L = *D.alg;
  const Rat ell(D.ell);
  DecompositionReport rep;
  rep.ideals = summarize_ideals(D);
  for (const auto& s : rep.ideals) rep.weyl_sum += s.weyl_dim;

  const Eigenspace low = casimir_eigenspace(D, D.ell, ell);
  const Eigenspace top = casimir_eigenspace(D, 2 * D.r, ell);
  rep.eig_low = low.dim;
  rep.eig_top = top.dim;

  SparseSpan<Mask> low_span, top_span, star_span;
  for (const auto& v : low.as_multivectors(L)) low_span.insert(as_sparse(v));
  for (const auto& v : top.as_multivectors(L)) top_span.insert(as_sparse(v));
  rep.star_inside = true;
  for (const auto& v : low.as_multivectors(L)) {
    const Multivector s = star(v);
    if (!top_span.contains(as_sparse(s))) rep.star_inside = false;
    star_span.insert(as_sparse(s));
  }
  rep.star_image_rank = star_span.dim();

  rep.gamma_image = M.dim;
  rep.gamma_kernel = M.kernel_dim;
  rep.total = M.total;

  // ker Gamma against the annihilator of the top eigenspace, one weight at a time.
  std::map<Vec, std::size_t> top_index;
  for (std::size_t b = 0; b < top.blocks.size(); ++b) top_index[top.blocks[b].weight] = b;
  rep.kernel_is_annihilator = true;
  for (const auto& gb : M.blocks) {
    const auto& subsets = gb.block.subsets;
    Vec neg = Rat(-1) * gb.block.weight;
    auto it = top_index.find(neg);
    std::vector<Vec> rows;
    if (it != top_index.end()) {
      const WeightBlock& opp = top.blocks[it->second];
      Mat pairing(subsets.size(), opp.subsets.size());
      for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < opp.subsets.size(); ++b)
          pairing(a, b) = ext_pairing(Multivector::basis(L, subsets[a]), Multivector::basis(L, opp.subsets[b]));
      for (const auto& e : top.vectors[it->second]) rows.push_back(pairing * e);
    }
    const std::vector<Vec> ann = rows.empty() ? full_kernel(subsets.size()) : kernel_basis(Mat::from_rows(rows));
    if (ann.size() != gb.kernel.size()) rep.kernel_is_annihilator = false;
    for (const auto& v : gb.kernel)
      for (const auto& row : rows)
        if (dot(row, v) != 0) rep.kernel_is_annihilator = false;
  }

  for (auto& s : rep.ideals) {
    const Polynomial seed = gamma.of(star(ideal_wedge(D, s.ideal)));
    s.orbit_dim = seed.is_zero() ? 0 : adjoint_closure(D, std::vector<Polynomial>{seed}).size();
  }

  const Multivector gx = Multivector::wedge_of(L, centralizer(regular));
  const auto gx_closure = adjoint_closure(D, std::vector<Multivector>{gx});
  rep.centralizer_closure = gx_closure.size();
  const Multivector dx_r = power(coboundary_d(regular), static_cast<unsigned>(D.r));
  const auto dx_closure = adjoint_closure(D, std::vector<Multivector>{dx_r});
  rep.coboundary_closure = dx_closure.size();

  const Integer weyl = rep.weyl_sum;
  auto as_int = [](std::size_t v) { return Integer(static_cast<unsigned long>(v)); };
  if (as_int(rep.eig_low) != weyl) fail(rep.failure, "eigenspace on the ell-th power differs from the Weyl sum");
  if (as_int(rep.eig_top) != weyl) fail(rep.failure, "eigenspace on the 2r-th power differs from the Weyl sum");
  if (!rep.star_inside || rep.star_image_rank != rep.eig_top)
    fail(rep.failure, "star does not map the low eigenspace onto the top eigenspace");
  if (as_int(rep.gamma_image) != weyl) fail(rep.failure, "dim M differs from the Weyl sum");
  if (rep.gamma_image + rep.gamma_kernel != rep.total) fail(rep.failure, "image and kernel of Gamma do not add up");
  if (!rep.kernel_is_annihilator) fail(rep.failure, "kernel of Gamma is not the annihilator of the top eigenspace");
  for (const auto& s : rep.ideals)
    if (as_int(s.orbit_dim) != s.weyl_dim) fail(rep.failure, "orbit of an ideal has the wrong dimension");
  if (rep.centralizer_closure != rep.eig_low) fail(rep.failure, "closure of [g^x] differs from the low eigenspace");
  for (const auto& v : gx_closure)
    if (!low_span.contains(as_sparse(v))) fail(rep.failure, "closure of [g^x] leaves the low eigenspace");
  if (rep.coboundary_closure != rep.gamma_image) fail(rep.failure, "closure of (dx)^r differs from dim M");
  for (const auto& v : dx_closure)
    if (!top_span.contains(as_sparse(v))) fail(rep.failure, "closure of (dx)^r leaves the top eigenspace");
  rep.ok = rep.failure.empty();
  return rep;
}

}  // namespace singlocus
