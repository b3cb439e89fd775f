#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"
#include "jspec/checks.hpp"

using namespace jspec;

TEST_CASE("suite checks pass on small windows") {
  for (Window w : {Window{1, 1}, Window{2, 1}, Window{0, 2}}) {
    const auto reports = run_suite({w, 3, 2});
    REQUIRE(reports.size() == 10);
    for (const auto& r : reports) {
      CHECK_MESSAGE(r.passed(), w.str() << " " << r.check << ": " << fixture::first(r));
      CHECK(r.cases > 0);
    }
  }
}

TEST_CASE("suite report order is fixed") {
  const auto a = run_suite({{1, 1}, 5, 1});
  const auto b = run_suite({{1, 1}, 5, 1});
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].check == b[k].check);
    CHECK(a[k].cases == b[k].cases);
  }
  CHECK(a.front().check.rfind("category axioms", 0) == 0);
  CHECK(a.back().check.rfind("components of", 0) == 0);
}

TEST_CASE("the invariance counterexample is the one the fixtures use") {
  CHECK(invariance_counterexample() == fixture::sigma2_counterexample());
}
