#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "singlocus/suite.hpp"

namespace {

std::vector<std::string> all_labels() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2"};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the polynomials defining the singular locus of a simple Lie algebra"};
  std::vector<std::string> algebras;
  std::vector<std::string> checks_opt{"all"};
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string cache_dir;
  std::string output;
  std::vector<std::string> sample_counts;
  int max_rank = 4;
  bool list = false;
  bool timings = false;

  app.add_option("--algebra", algebras, "Algebra label such as A2 or G2 (repeatable; 'all' for every supported one)");
  app.add_option("--checks", checks_opt, "Comma-separated check ids, 'all', or 'none'")->delimiter(',');
  app.add_option("--seed", seed, "Seed for all sampling");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--cache-dir", cache_dir, "Directory for structure-constant caches (default: $SINGLOCUS_CACHE_DIR, else .cache)");
  app.add_option("--output,-o", output, "Write the report to a file instead of stdout");
  app.add_option("--sample-count", sample_counts, "Override a sample count, as <check>=<n> (repeatable)");
  app.add_option("--max-rank", max_rank, "Skip algebras of larger rank");
  app.add_flag("--list-checks", list, "List the registered checks and exit");
  app.add_flag("--timings", timings, "Record wall-clock seconds per check (reports are then not reproducible)");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& info : singlocus::check_registry()) {
      std::cout << info.id << "\t" << info.summary;
      if (info.default_samples) std::cout << " [samples: " << info.default_samples << "]";
      if (info.max_positive_roots) std::cout << " [r <= " << info.max_positive_roots << "]";
      std::cout << "\n";
    }
    return 0;
  }

  singlocus::RunConfig config;
  config.seed = seed;
  config.max_rank = max_rank;
  config.timings = timings;
  if (cache_dir.empty()) {
    const char* env = std::getenv("SINGLOCUS_CACHE_DIR");
    cache_dir = env && *env ? env : ".cache";
  }
  config.cache_dir = cache_dir == "none" ? "" : cache_dir;

  try {
    for (const auto& a : algebras) {
      if (a == "all") {
        for (const auto& l : all_labels()) config.algebras.push_back(singlocus::parse_label(l));
      } else {
        config.algebras.push_back(singlocus::parse_label(a));
      }
    }
    std::vector<std::string> checks;
    for (const auto& c : checks_opt)
      for (const auto& part : split_commas(c)) checks.push_back(part);
    for (const auto& c : checks) {
      if (c == "all") {
        for (const auto& info : singlocus::check_registry()) config.checks.push_back(info.id);
      } else if (c != "none") {
        if (!singlocus::find_check(c)) throw std::invalid_argument("unknown check: " + c);
        config.checks.push_back(c);
      }
    }
    for (const auto& s : sample_counts) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--sample-count expects <check>=<n>: " + s);
      const std::string id = s.substr(0, eq);
      if (!singlocus::find_check(id)) throw std::invalid_argument("unknown check: " + id);
      config.sample_counts[id] = std::stoul(s.substr(eq + 1));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const singlocus::VerificationReport rep = singlocus::run_suite(config);
  const std::string text = format == "json" ? singlocus::emit_json(rep) : singlocus::emit_markdown(rep);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    out << text;
  }
  return rep.ok() ? 0 : 1;
}
