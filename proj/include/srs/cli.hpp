#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "srs/core.hpp"
#include "srs/region.hpp"

namespace srs {

struct RunConfig {
  std::size_t orbit_cap = kDefaultOrbitCap;
  std::size_t witness_budget = kDefaultWitnessBudget;
  std::string blowup_factor = "4";
  std::size_t sample_count = 200;
  std::uint64_t seed = 1;
  std::size_t parallel_width = 0;  // 0: hardware concurrency
  std::size_t sweep_depth = 3;
  std::string out;
};

/// Parallel width after applying SRS_ATLAS_THREADS as a cap.
std::size_t effective_threads(const RunConfig& cfg);

/// Runs the command line; returns 0 on success, 1 on a validation failure and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srs
