#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mdsum {

/// One checked statement.  Informational checks are reported but never
/// decide the outcome.
struct SuiteCheck {
  int group = 0;
  std::string name;
  bool pass = false;
  bool informational = false;
  std::string detail;
};

struct SuiteGroup {
  int id = 0;
  std::string title;
  double time_limit_seconds = 0;
  std::vector<SuiteCheck> checks;
  double seconds = 0;
  /// Every non-informational check passed and the run stayed in time.
  bool pass() const;
  const SuiteCheck* first_failure() const;
};

/// Ids 1..10 of the verification groups, in order.
std::vector<int> suite_groups();
std::string suite_group_title(int id);

/// Runs one group of the reference-identity suite.  Exceptions thrown by the
/// library are recorded as failing checks, never propagated.
SuiteGroup run_suite_group(int id);

/// Runs the given groups (all when empty), calling report after each.
std::vector<SuiteGroup> run_suite(const std::vector<int>& ids = {},
                                  const std::function<void(const SuiteGroup&)>& report = {});

}  // namespace mdsum
