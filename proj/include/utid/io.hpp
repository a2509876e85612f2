#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "utid/engine.hpp"
#include "utid/oracle.hpp"

namespace utid {

/// Malformed instance or verdict file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  std::string name;
  GeneratorSet generators;
};

/// {"instances": [{"name": ..., "generators": [[a,b,c,d,e,f], ...]}, ...]}
/// Entries may be decimal strings or JSON integers. A single instance object
/// or a bare array of instances is also accepted.
std::vector<Instance> parse_instances(const nlohmann::json& doc);
std::vector<Instance> load_instances(const std::string& path);

nlohmann::json generators_to_json(const GeneratorSet& G);

struct RecordOptions {
  bool identity = true, u2 = true, u10 = true;
  bool witness = false;
  bool trace = false;
};

nlohmann::json verdict_record(const Instance& inst, const DecisionTriple& d, const RecordOptions& opt, double millis);

/// Re-multiplies every witness in a verdict document. Returns one message per
/// failing record (empty when all pass). Throws InputError on malformed input.
std::vector<std::string> check_verdicts(const nlohmann::json& doc);

}  // namespace utid
