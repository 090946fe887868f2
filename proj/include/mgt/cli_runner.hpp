#pragma once

#include <string>
#include <vector>

#include "mgt/json_io.hpp"

namespace mgt {

inline constexpr const char* kToolVersion = "0.1.0";

struct JobSpec {
  std::string command;  // e.g. "orth.order"
  Json params;          // command flags as a JSON object
  long long cap = 0;    // 0: use the default cap policy
  long long seed = 0;
  int workers = 0;
};

struct CheckResult {
  std::string name;
  bool pass = false;
};

struct ResultEnvelope {
  std::string version = kToolVersion;
  std::string command;
  Json input;   // canonicalized parameter echo
  Json result;
  std::vector<CheckResult> checks;
  long long seed = 0;
  double wall_ms = 0.0;

  bool ok() const;
  Json to_json(bool with_timings = false) const;
};

// Dispatch a job to the library.  Errors propagate as mgt::Error.
ResultEnvelope run(const JobSpec& spec);

long long default_cap();  // MGT_DEFAULT_CAP environment override, else 4096

// Homogeneous batch: one command, many parameter objects; rows run in a
// bounded worker pool but are emitted in input order, failures marked inline.
struct BatchTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

BatchTable emit_table(const std::string& command, const std::vector<Json>& jobs,
                      int workers = 0, long long cap = 0, long long seed = 0);

std::string batch_to_tsv(const BatchTable& t);
Json batch_to_json(const BatchTable& t);

}  // namespace mgt
