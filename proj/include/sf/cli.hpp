#pragma once

#include "sf/json_io.hpp"

namespace sf {

struct CliOptions {
  bool no_cache = false;
  int emit_points = -1;      // -1: default policy (list points when c <= 3, p <= 5)
  std::string cache_root;    // empty: SUPPORT_FORGE_CACHE or ~/.cache/support-forge
  std::string out_path;      // empty: stdout only
};

struct CliResult {
  int exit_code = 0;  // 0 verified, 2 computed-but-unverified, 3 invalid input
  Json report;
};

// Execute one task file. Pure given (task, options, cache contents);
// reports are byte-deterministic.
CliResult run_task(const Json& task, const CliOptions& opt);

int cli_main(int argc, char** argv);

}  // namespace sf
