#include <doctest.h>

#include "sig/acceptance.hpp"

using namespace sig;

TEST_CASE("quick acceptance run passes") {
  AcceptanceConfig config;
  config.quick = true;
  const AcceptanceReport report = run_acceptance(config);
  REQUIRE(report.results.size() == 9);
  for (const auto& r : report.results) CHECK_MESSAGE(r.passed, format_result(r));
  CHECK(report.all_passed());
}

TEST_CASE("a corrupted pattern table is caught") {
  AcceptanceConfig config;
  config.quick = true;
  config.pattern_overrides[Pattern::gem] = path_graph(5);
  const AcceptanceReport report = run_acceptance(config);
  CHECK_FALSE(report.all_passed());
  for (const auto& r : report.results) CHECK_MESSAGE(r.passed == (r.id != 4), format_result(r));
}

TEST_CASE("result lines") {
  const CriterionResult r{4, "recognition equivalences", false, "2 of 10 checks failed", 1.5, 300.0};
  CHECK(format_result(r) == "FAIL  4 recognition equivalences (1.50 s, budget 300.00 s): 2 of 10 checks failed");
}
