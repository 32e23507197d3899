#ifndef HURWITZ_ACCEPTANCE_HPP
#define HURWITZ_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/cutjoin.hpp"

namespace hurwitz {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  std::vector<int> only;  // criterion ids; empty runs all
};

/// Runs the acceptance criteria in order, calling `on_result` after each.
std::vector<CriterionResult> run_acceptance(CutJoinEngine& engine, const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  wave-function pipelines agree  (1.2 s)  <detail>"; the timing is
/// left out when `with_time` is false so reruns print identical text.
std::string format_result(const CriterionResult& r, bool with_time = true);

}  // namespace hurwitz

#endif  // HURWITZ_ACCEPTANCE_HPP
