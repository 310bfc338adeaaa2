#pragma once

#include <cstdint>
#include <string>

#include "genord/group.hpp"
#include "genord/oracle.hpp"
#include "genord/reports.hpp"

namespace genord::commands {

/// One invocation: exactly one group fixture, an optional character table,
/// a method selector, caps, and a seed. The subcommand functions build the
/// structured report; rendering and exit codes are the caller's business.
struct RunConfig {
  std::string group_path;
  std::string table_path;
  std::string method = "direct";
  int class_index = -1;
  int k = 0;
  int k_cap = 0;
  int samples = 1000;
  std::uint64_t seed = 0;
  std::string element;
  std::uint64_t enum_cap = kDefaultEnumCap;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

reports::Json cmd_order(const RunConfig& cfg);
reports::Json cmd_classes(const RunConfig& cfg);
reports::Json cmd_alpha(const RunConfig& cfg);
reports::Json cmd_gorder(const RunConfig& cfg);
reports::Json cmd_gexp(const RunConfig& cfg);
reports::Json cmd_bounds(const RunConfig& cfg, bool& ok);
reports::Json cmd_lcs(const RunConfig& cfg);
reports::Json cmd_identities(const RunConfig& cfg, bool& ok);
reports::Json cmd_verify(const RunConfig& cfg, bool& ok);

}  // namespace genord::commands
