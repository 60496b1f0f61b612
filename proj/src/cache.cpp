#include "singlocus/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace singlocus {

using nlohmann::json;

namespace {

constexpr int kFormat = 1;

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::runtime_error("matrix has the wrong shape");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::runtime_error("matrix has the wrong shape");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_rat(j[i][k].get<std::string>());
  }
  return m;
}

}  // namespace

nlohmann::json algebra_to_json(const LieAlgebraData& alg) {
  json j;
  j["algebra"] = alg.name();
  j["dim"] = alg.n;
  j["rank"] = alg.ell;
  j["positiveRoots"] = alg.r;
  j["basisNames"] = alg.basis_names;
  json triples = json::array();
  for (std::size_t a = 0; a < alg.n; ++a)
    for (std::size_t b = 0; b < alg.n; ++b)
      for (const auto& e : alg.structure[a][b]) triples.push_back({a, b, e.index, to_string(e.value)});
  j["structure"] = std::move(triples);
  j["killing"] = mat_to_json(alg.killing);
  json chamber = json::array();
  for (const auto& c : alg.chamber) chamber.push_back(to_string(c));
  j["chamber"] = std::move(chamber);
  j["repDim"] = alg.rep_dim;
  json rep = json::array();
  for (const auto& m : alg.rep) rep.push_back(mat_to_json(m));
  j["rep"] = std::move(rep);
  j["repForm"] = alg.rep_form ? mat_to_json(*alg.rep_form) : json(nullptr);
  return j;
}

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  try {
    auto alg = std::make_shared<LieAlgebraData>();
    alg->label = parse_label(j.at("algebra").get<std::string>());
    alg->n = j.at("dim").get<std::size_t>();
    alg->ell = j.at("rank").get<std::size_t>();
    alg->r = j.at("positiveRoots").get<std::size_t>();
    if (alg->n != alg->ell + 2 * alg->r || alg->ell != static_cast<std::size_t>(alg->label.rank))
      throw std::runtime_error("inconsistent dimensions");
    alg->basis_names = j.at("basisNames").get<std::vector<std::string>>();
    if (alg->basis_names.size() != alg->n) throw std::runtime_error("wrong number of basis names");
    alg->structure.assign(alg->n, std::vector<SparseCoords>(alg->n));
    for (const auto& t : j.at("structure")) {
      const auto a = t.at(0).get<std::size_t>(), b = t.at(1).get<std::size_t>(), k = t.at(2).get<std::size_t>();
      if (a >= alg->n || b >= alg->n || k >= alg->n) throw std::runtime_error("structure index out of range");
      alg->structure[a][b].push_back({k, parse_rat(t.at(3).get<std::string>())});
    }
    alg->killing = mat_from_json(j.at("killing"), alg->n, alg->n);
    alg->killing_inverse = inverse(alg->killing);
    for (const auto& c : j.at("chamber")) alg->chamber.push_back(parse_rat(c.get<std::string>()));
    if (alg->chamber.size() != alg->n) throw std::runtime_error("chamber has the wrong length");
    alg->rep_dim = j.at("repDim").get<std::size_t>();
    for (const auto& m : j.at("rep")) alg->rep.push_back(mat_from_json(m, alg->rep_dim, alg->rep_dim));
    if (alg->rep.size() != alg->n) throw std::runtime_error("wrong number of representation matrices");
    if (!j.at("repForm").is_null()) alg->rep_form = mat_from_json(j.at("repForm"), alg->rep_dim, alg->rep_dim);

    const StructureCheck sc = check_structure(*alg);
    if (!sc.ok()) throw std::runtime_error("cached structure constants fail verification: " + sc.counterexample);
    if (!(killing_from_structure(*alg) == alg->killing)) throw std::runtime_error("cached Killing form is stale");
    return alg;
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("malformed cache entry: ") + e.what());
  }
}

std::string checksum(const nlohmann::json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AlgebraPtr load_or_build(const AlgebraLabel& label, const std::string& dir, CacheOutcome* outcome) {
  auto report = [&](CacheOutcome o) {
    if (outcome) *outcome = o;
  };
  if (dir.empty()) {
    report(CacheOutcome::disabled);
    return build_classical(label);
  }
  const std::filesystem::path path = std::filesystem::path(dir) / (label.str() + ".json");
  bool existed = false;
  if (std::filesystem::exists(path)) {
    existed = true;
    try {
      std::ifstream in(path);
      const json file = json::parse(in);
      if (file.at("format").get<int>() == kFormat && file.at("checksum").get<std::string>() == checksum(file.at("data"))) {
        AlgebraPtr alg = algebra_from_json(file.at("data"));
        if (alg->label == label) {
          report(CacheOutcome::hit);
          return alg;
        }
      }
    } catch (const std::exception&) {
      // fall through to a rebuild
    }
  }
  AlgebraPtr alg = build_classical(label);
  json file;
  file["format"] = kFormat;
  file["data"] = algebra_to_json(*alg);
  file["checksum"] = checksum(file["data"]);
  std::filesystem::create_directories(dir);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << file.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
  report(existed ? CacheOutcome::rebuilt : CacheOutcome::built);
  return alg;
}

}  // namespace singlocus
