#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ratquad {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic summary: counts and worst errors
};

/// Runs the full verification suite (criteria are independent and executed
/// concurrently; each draws from its own seeded stream, so the report is
/// reproducible for a given seed).
std::vector<CriterionResult> run_acceptance(uint64_t seed);

}  // namespace ratquad
