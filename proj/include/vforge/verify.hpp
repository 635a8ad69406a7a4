#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vforge/chain.hpp"

namespace vforge {

inline constexpr std::uint64_t kDefaultSeed = 20240517ULL;

struct VerifyConfig {
  std::string suite = "all";  // paper | props | all
  std::uint64_t seed = kDefaultSeed;
  int samples = 100;     // R per degree
  int max_degree = 6;    // degree bound for random monic samples
  bool parallel = true;  // OpenMP kernels; results are identical either way
};

struct CheckResult {
  std::string name;
  std::string locus;  // statement the check exercises
  bool pass = true;
  std::string detail;
  std::string witness;  // empty on success
};

struct ClassRow {
  std::size_t extension = 0;
  std::string center;  // representative in Y
  std::string delta;
  int local_degree = 0;
  int ball_size = 0;
  int classes = 0;
  int minimal_degree = 0;
  bool passed = true;
};

struct VerifyReport {
  long prime = 0;
  std::string chain;  // chain file text
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string classification;
  int d = 0;
  std::vector<ClassRow> classes;
  int class_count = 0;
  int root_count = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool pass() const;
};

VerifyReport run_verify(const Chain& chain, const VerifyConfig& config);

std::string render_text(const VerifyReport& report);
std::string render_json(const VerifyReport& report);

}  // namespace vforge
