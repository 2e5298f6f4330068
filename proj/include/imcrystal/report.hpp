#pragma once

// Verification suites shared by the command-line tool, the acceptance binary
// and the Python module, and their text/JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imcrystal/verma.hpp"

namespace imc {

inline constexpr std::uint64_t kDefaultSeed = 12345;

// Unset fields take the suite's default (see suite_defaults).
struct RunConfig {
  std::optional<int> max_length;
  std::optional<std::pair<int, int>> window;
  std::optional<std::pair<int, int>> m_range;
  std::vector<HighestWeight> weights;
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;     // random words / pairs in the randomized suites
  bool corrupt = false;  // run the suite's negative-control fixture instead
};

// Fully resolved bounds of one run.
struct Bounds {
  int max_length = 3;
  int lo = -2;
  int hi = 2;
  int m_lo = -3;
  int m_hi = 3;
  std::vector<HighestWeight> weights;
};

Bounds suite_defaults(const std::string& suite);
Bounds resolve(const std::string& suite, const RunConfig& c);

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::vector<std::string> witnesses;
};

struct SuiteReport {
  std::string suite;
  Bounds bounds;
  std::uint64_t seed = kDefaultSeed;
  bool corrupt = false;
  std::vector<SuiteResult> results;

  bool passed() const;
  // {suite, bounds, seed, results:[{name, status, checks, witnesses}]}
  std::string to_json() const;
  std::string to_text() const;
};

std::vector<std::string> suite_names();  // relations, form, crystal, confluence, module

// Throws DomainError for an unknown suite or for --corrupt on a suite without a
// negative-control fixture (relations, confluence).
SuiteReport run_suite(const std::string& name, const RunConfig& config);

}  // namespace imc
