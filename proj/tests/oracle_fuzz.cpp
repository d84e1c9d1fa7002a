#include <doctest.h>

#include "fuzz_common.hpp"

using parakov::testing::run_solver_oracle_fuzz;

TEST_CASE("bounded solver agrees with the oracle box on random instances") {
  auto stats = run_solver_oracle_fuzz(110);
  CHECK(stats.instances == 110);
  for (const auto& issue : stats.issues) {
    CAPTURE(issue);
    CHECK(issue.empty());
  }
  CHECK(stats.issues.empty());
  // the stream must actually exercise both outcomes
  CHECK(stats.with_particular > 10);
  CHECK(stats.kernel_elements > 5);
}
