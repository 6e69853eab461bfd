#ifndef ROSI_PIPELINE_HPP
#define ROSI_PIPELINE_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "rosi/group.hpp"

namespace rosi {

inline const char* kVersion = "rosi 0.1.0";

struct CheckOptions {
  std::optional<int> onlyPrime;
  bool autoIsotropy = false; // search characters past a failed rank condition
  std::string characterFileJson; // optional supplied fixed-dimension tables
  int virtualSearchBudget = 6;
};

struct Outcome {
  nlohmann::json report;
  int exitCode = 0;
};

Outcome run_check(const Group& g, const std::string& groupName,
                  const CheckOptions& opt);

Outcome run_complex(const Group& g, const std::string& complexJson,
                    const std::string& nbarJson, std::optional<int> localPrime);

Outcome run_goldens(const std::string& expectedOverrideJson);

} // namespace rosi

#endif
