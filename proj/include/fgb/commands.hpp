#pragma once

#include <string>

#include "json.hpp"

namespace fgb {

// Outcome of one CLI-level command. Exit codes: 0 success, 1 usage or parse
// error, 2 completed without stabilization.
struct CommandResult {
  int exit_code = 0;
  std::string output;  // report (stdout) on success, diagnostic otherwise
};

CommandResult run_kgroup(const nlohmann::json& config);
CommandResult run_verify(const nlohmann::json& config);
CommandResult run_witness(const nlohmann::json& config);
CommandResult run_orbits(const nlohmann::json& config);
CommandResult run_act(const nlohmann::json& config);

}  // namespace fgb
