#include "singlocus/sampling.hpp"

#include <stdexcept>

#include "singlocus/gamma.hpp"

namespace singlocus {

Element exp_ad(const Element& nilpotent, const Element& y) {
  Element out = y;
  Element term = y;
  for (std::size_t k = 1; k <= 2 * y.algebra()->n + 1; ++k) {
    term = Rat(1, static_cast<unsigned long>(k)) * bracket(nilpotent, term);
    if (term.is_zero()) return out;
    out = out + term;
  }
  throw std::invalid_argument("exp_ad: element is not ad-nilpotent");
}

namespace {

long small_nonzero(std::mt19937_64& rng) {
  const long v = static_cast<long>(rng() % 4) + 1;
  return rng() % 2 ? v : -v;
}

Element cartan_element(const RootDatum& D, const Vec& c) {
  Element h = Element::zero(*D.alg);
  for (std::size_t i = 0; i < D.ell; ++i) h = h + c[i] * D.cartan[i];
  return h;
}

Element integral(const Element& x) {
  if (x.is_zero()) return x;
  return Element(x.algebra(), clear_denominators(x.coords()));
}

Element wall_element(const RootDatum& D, std::mt19937_64& rng, std::size_t k) {
  const Vec& phi = D.roots[k];
  const Vec t_phi = D.form * phi;
  const Rat norm = dot(phi, t_phi);
  // For rank one the wall is {0}.
  if (D.ell == 1) return Element::zero(*D.alg);
  while (true) {
    Vec c(D.ell);
    for (auto& v : c) v = static_cast<long>(rng() % 19) - 9;
    const Rat val = dot(phi, c);
    const Vec on_wall = c - (val / norm) * t_phi;
    if (!is_zero(on_wall)) return integral(cartan_element(D, on_wall));
  }
}

Element random_root_vector(const RootDatum& D, std::mt19937_64& rng) {
  return Rat(small_nonzero(rng)) * D.root_vectors[rng() % (2 * D.r)];
}

Element nilpotent_missing_simple(const RootDatum& D, std::mt19937_64& rng) {
  const std::size_t skip = D.simples[rng() % D.simples.size()];
  Element e = Element::zero(*D.alg);
  for (std::size_t k = 0; k < D.r; ++k) {
    if (k == skip) continue;
    const bool simple = D.heights[k] == 1;
    if (simple || rng() % 2) e = e + Rat(small_nonzero(rng)) * D.root_vectors[k];
  }
  return e;
}

}  // namespace

std::vector<SingularSample> singular_samples(const RootDatum& D, std::size_t count, std::mt19937_64& rng) {
  std::vector<SingularSample> out;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t k = s % D.r;
    switch (s % 5) {
      case 0:
        out.push_back({wall_element(D, rng, k), "cartan-wall"});
        break;
      case 1: {
        Element x = wall_element(D, rng, k);
        x = exp_ad(random_root_vector(D, rng), x);
        x = exp_ad(random_root_vector(D, rng), x);
        out.push_back({integral(x), "conjugated-wall"});
        break;
      }
      case 2: {
        Element e = nilpotent_missing_simple(D, rng);
        e = exp_ad(random_root_vector(D, rng), e);
        out.push_back({integral(e), "nilpotent"});
        break;
      }
      case 3:
        out.push_back({Element::zero(*D.alg), "zero"});
        break;
      default: {
        Element x = exp_ad(random_root_vector(D, rng), wall_element(D, rng, k));
        Rat scale(small_nonzero(rng), static_cast<long>(rng() % 3) + 1);
        scale.canonicalize();
        out.push_back({scale * x, "scaled"});
        break;
      }
    }
  }
  return out;
}

std::vector<Element> regular_samples(const LieAlgebraData& alg, std::size_t count, std::mt19937_64& rng) {
  std::vector<Element> out;
  for (std::size_t s = 0; s < count; ++s) out.push_back(random_regular_element(alg, rng));
  return out;
}

}  // namespace singlocus
