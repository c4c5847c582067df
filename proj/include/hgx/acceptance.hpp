#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hgx {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Run the acceptance criteria (all of them when `only` is empty), calling
/// `on_done` after each one.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});

/// "PASS  3  name  detail  [1.2s / 120s]"; timing omitted when asked.
std::string format_criterion(const CriterionResult& r, bool timing = true);

inline constexpr int kAcceptanceCriteria = 12;

}  // namespace hgx
