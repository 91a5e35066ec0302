#pragma once

#include <cstdint>
#include <string>

#include "bandlab/funcspace.hpp"
#include "bandlab/instance.hpp"
#include "json.hpp"

namespace bandlab {

/// Reports keep insertion order so that field order is stable; rationals are
/// strings ("p" or "p/q"). Reports carry no timing fields, so identical
/// inputs and seeds give byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const RVec& v);
Json to_json(const RMat& m);
Json to_json(const WitnessValue& w);
Json to_json(const PredicateResult& r);

struct RunOptions {
  std::uint64_t seed = 1;
  /// analyze: refutation samples for solidity (default 10000); suite and
  /// falsify: number of randomized seeds (default 200 and 40). 0 selects
  /// the default.
  std::size_t budget = 0;
  std::string fixtures_dir;
};

/// exit_code: 0 ok, 1 mismatch or violation, 2 input error.
struct RunResult {
  Json report;
  int exit_code = 0;
};

RunResult analyze(const Instance& inst, const RunOptions& opts);
RunResult run_example(const std::string& name, const RunOptions& opts);
RunResult run_suite(const RunOptions& opts);
RunResult run_falsify(const std::string& config_path, const RunOptions& opts);

/// The theorem suite on one randomized corpus seed.
struct CorpusOutcome {
  std::uint64_t seed = 0;
  std::size_t n = 0, m = 0;
  ConeSpec spec;
  TheoremSuiteReport suite;
  bool pervasive_matches_rdp = true;
};
CorpusOutcome run_corpus_seed(std::uint64_t seed, std::size_t n_max = 4);

/// Pretty JSON (2-space indent, trailing newline) or an indented text view.
std::string render(const Json& report, bool as_json);

}  // namespace bandlab
