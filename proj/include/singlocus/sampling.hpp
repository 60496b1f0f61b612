#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "singlocus/roots.hpp"

namespace singlocus {

/// exp(ad X) y for ad-nilpotent X.
Element exp_ad(const Element& nilpotent, const Element& y);

struct SingularSample {
  Element x;
  std::string kind;  // cartan-wall, conjugated-wall, nilpotent, zero, scaled
};

/// Elements with dim g^x > ell built from known singular families: Cartan
/// elements on a root hyperplane and their conjugates, nilpotents missing a
/// simple root component, zero, and rational multiples of these.
std::vector<SingularSample> singular_samples(const RootDatum& D, std::size_t count, std::mt19937_64& rng);

std::vector<Element> regular_samples(const LieAlgebraData& alg, std::size_t count, std::mt19937_64& rng);

}  // namespace singlocus
