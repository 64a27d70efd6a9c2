// commands.hpp — the four operations behind the command-line tool.
//
// Each command writes report.json and manifest.json into out_dir (sweep adds
// results.csv), prints a one-line summary, and returns the process exit code:
// 0 on success, 1 when a check or grid point failed.  Config errors throw
// std::invalid_argument and are mapped to exit code 2 by the caller.

#pragma once

#include "srlab/config.hpp"

#include <string>

namespace srlab {

int cmd_boundary(const RunConfig& cfg, const std::string& out_dir);
int cmd_sweep(const RunConfig& cfg, const std::string& out_dir);
int cmd_verify(const RunConfig& cfg, const std::string& out_dir);
int cmd_exponent(const RunConfig& cfg, const std::string& out_dir);

} // namespace srlab
