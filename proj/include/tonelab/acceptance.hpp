#pragma once

#include <cstdint>
#include <string>
#include <vector>

// End-to-end acceptance suite: one entry per quantitative claim the toolkit
// is required to reproduce. Shared by the CLI `accept` subcommand and the
// acceptance test binary; tolerances are pinned here, not in the callers.
namespace tonelab::accept {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  double total_seconds = 0.0;
  bool all_pass = false;
};

inline constexpr int kNumCriteria = 13;

// Criterion 13 (whole-suite wall clock + aggregate verdict) reruns 1..12.
CriterionResult run_criterion(int id, std::uint64_t seed);
SuiteResult run_all(std::uint64_t seed);

// "PASS criterion 03 euclidean-scaling (0.42s): ..." one line per criterion.
std::string format_line(const CriterionResult& c);

}  // namespace tonelab::accept
