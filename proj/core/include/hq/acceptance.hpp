#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hq/cache.hpp"

namespace hq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// One line: "PASS [id] name (t s): detail".
std::string format_result(const CriterionResult& r);

/// Runs the ten acceptance criteria in order; on_result is called as each finishes.
std::vector<CriterionResult> run_acceptance(LValueCache* cache = nullptr,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace hq
