#pragma once

#include <string>

#include <json.hpp>

#include "singlocus/lie_algebra.hpp"

namespace singlocus {

/// Serialized algebra: basis names, sparse structure triples, Killing matrix,
/// chamber element and defining representation, all as exact fractions.
nlohmann::json algebra_to_json(const LieAlgebraData& alg);

/// Rebuilds and re-verifies an algebra (structure checks and the Killing form
/// recomputed from the structure constants). Throws std::runtime_error on any
/// mismatch.
AlgebraPtr algebra_from_json(const nlohmann::json& j);

/// FNV-1a of the compact dump, as 16 hex digits.
std::string checksum(const nlohmann::json& j);

enum class CacheOutcome { disabled, hit, built, rebuilt };

/// Loads <dir>/<label>.json when present and valid; otherwise builds the
/// algebra and (re)writes the file. An empty dir disables the cache.
AlgebraPtr load_or_build(const AlgebraLabel& label, const std::string& dir, CacheOutcome* outcome = nullptr);

}  // namespace singlocus
