#include <doctest.h>

#include <set>

#include "jspec/topo.hpp"

using namespace jspec;

namespace {

// Components by repeated relaxation over enumerated hom sets.
std::size_t oracle_component_count(Window w) {
  const auto objects = w.objects();
  std::map<JObject, std::size_t> label;
  for (std::size_t j = 0; j < objects.size(); ++j) label[objects[j]] = j;
  for (bool changed = true; changed;) {
    changed = false;
    for (JObject a : objects) {
      for (JObject b : objects) {
        if (enumerate_hom(a, b).empty()) continue;
        const std::size_t least = std::min(label[a], label[b]);
        if (label[a] != least || label[b] != least) {
          label[a] = label[b] = least;
          changed = true;
        }
      }
    }
  }
  std::set<std::size_t> distinct;
  for (const auto& [a, l] : label) distinct.insert(l);
  return distinct.size();
}

}  // namespace

TEST_CASE("components") {
  SUBCASE("window (0,0)") {
    const auto c = components({0, 0});
    REQUIRE(c.size() == 1);
    CHECK(c.at({0, 0}) == 0);
  }
  SUBCASE("window (2,2)") {
    const auto c = components({2, 2});
    std::set<long> ids;
    for (const auto& [a, d] : c) ids.insert(d);
    CHECK(ids == std::set<long>{-2, -1, 0, 1, 2});
    CHECK(c.at({0, 1}) == c.at({1, 2}));
    CHECK(c.at({0, 1}) != c.at({1, 0}));
  }
  SUBCASE("(0,1) and (2,3) share a component") {
    const auto c = components({2, 3});
    CHECK(c.at({0, 1}) == c.at({2, 3}));
  }
  SUBCASE("component count is M + N + 1, matching the oracle") {
    for (std::size_t M = 0; M <= 3; ++M) {
      for (std::size_t N = 0; N <= 3; ++N) {
        std::set<long> ids;
        for (const auto& [a, d] : components({M, N})) ids.insert(d);
        CHECK(ids.size() == M + N + 1);
        CHECK(oracle_component_count({M, N}) == M + N + 1);
        CHECK(*ids.begin() == -static_cast<long>(M));
        CHECK(*ids.rbegin() == static_cast<long>(N));
      }
    }
  }
}

TEST_CASE("component_invariant_check") {
  for (Window w : {Window{1, 1}, Window{3, 3}, Window{2, 4}, Window{4, 0}}) {
    const Report r = component_invariant_check(w);
    CHECK_MESSAGE(r.passed(), w.str() << ": " << (r.passed() ? "" : r.violations.front()));
    CHECK(r.cases == w.objects().size() * w.objects().size());
  }
}

TEST_CASE("components_dot") {
  const std::string dot = components_dot({1, 1});
  CHECK(dot.rfind("digraph J {", 0) == 0);
  CHECK(dot.find("\"(0,0)\" -> \"(1,1)\" [label=\"1\"];") != std::string::npos);
  CHECK(dot.find("\"(0,1)\" -> \"(1,0)\"") == std::string::npos);
  CHECK(dot.find("component=-1") != std::string::npos);
  CHECK(dot == components_dot({1, 1}));
}
