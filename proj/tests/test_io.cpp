#include <doctest.h>

#include "fixtures.hpp"
#include "jspec/equivalence.hpp"
#include "jspec/io.hpp"

using namespace jspec;

namespace {

std::string error_path(const std::function<void()>& run) {
  try {
    run();
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("ordinal encodings") {
  const Injection f(3, {2, 0});
  CHECK(dump_json(to_json(f)) == dump_json(parse_json(R"({"cod": 3, "dom": 2, "img": [3, 1]})")));
  CHECK(injection_from_json(to_json(f)) == f);

  const Permutation s({1, 2, 0});
  CHECK(to_json(s) == parse_json(R"({"deg": 3, "img": [2, 3, 1]})"));
  CHECK(permutation_from_json(to_json(s)) == s);

  const PartialBijection a({0, 2}, {1, 3}, {3, 1});
  CHECK(partial_bijection_from_json(to_json(a)) == a);

  SUBCASE("morphisms use 1-based alpha against the sorted complement") {
    const JMorphism g = standard_map(1, 0, 2);
    const Json j = to_json(g);
    CHECK(j == parse_json(R"({"src": [1,0], "dst": [3,2], "phi": [1], "psi": [], "alpha": [1, 2]})"));
    CHECK(morphism_from_json(j) == g);
    for (const JMorphism& h : enumerate_hom({1, 1}, {2, 2})) CHECK(morphism_from_json(to_json(h)) == h);
  }
  SUBCASE("errors carry paths") {
    CHECK(error_path([] { injection_from_json(parse_json(R"({"dom": 1, "cod": 2, "img": [0]})")); }) == "$.img[0]");
    CHECK(error_path([] { injection_from_json(parse_json(R"({"dom": 2, "cod": 2, "img": [1, 1]})")); }) == "$");
    CHECK(error_path([] { permutation_from_json(parse_json(R"({"deg": 2})")); }) == "$.img");
    CHECK(error_path([] { permutation_from_json(parse_json(R"({"deg": 2, "img": [1, "x"]})")); }) == "$.img[1]");
    CHECK(error_path([] {
            morphism_from_json(parse_json(R"({"src": [0,0], "dst": [1,2], "phi": [], "psi": [], "alpha": [1]})"));
          }) == "$");
  }
}

TEST_CASE("strict parsing") {
  CHECK(error_path([] { parse_json(R"({"a": 1, "a": 2})"); }) == "$.a");
  CHECK(error_path([] { parse_json(R"({"x": [{}, {"b": 1, "b": 1}]})"); }) == "$.x[1].b");
  CHECK(error_path([] { parse_json("{"); }) == "$");
  CHECK(error_path([] { carrier_from_json(parse_json(R"(["a", "b", "a"])")); }) == "$[2]");
}

TEST_CASE("jfunctor.v1") {
  SUBCASE("roundtrip and byte stability") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const JFunctor F = random_instance({2, 2}, seed).functor;
      const std::string text = dump_json(to_json(F));
      const JFunctor G = jfunctor_from_json(parse_json(text));
      CHECK(same_functor(F, G));
      CHECK(dump_json(to_json(G)) == text);
      CHECK(validate_functor(G).passed());
    }
  }
  SUBCASE("identity edges may be omitted") {
    Json j = to_json(fixture::point_functor({1, 1}));
    Json edges = Json::array();
    for (const Json& e : j["edges"]) {
      if (morphism_from_json(e["morphism"]).is_identity()) continue;
      edges.push_back(e);
    }
    j["edges"] = edges;
    CHECK(same_functor(jfunctor_from_json(j), fixture::point_functor({1, 1})));
  }
  SUBCASE("a duplicate label is rejected") {
    Json j = to_json(representable_sum({1, 1}, {{0, 0}}, {"g"}));
    j["objects"][3]["carrier"].push_back(j["objects"][3]["carrier"][0]);
    CHECK(error_path([&] { jfunctor_from_json(j); }) == "$.objects[3].carrier[1]");
  }
  SUBCASE("a missing edge is rejected") {
    Json j = to_json(fixture::point_functor({1, 1}));
    for (std::size_t k = 0; k < j["edges"].size(); ++k) {
      if (morphism_from_json(j["edges"][k]["morphism"]).is_identity()) continue;
      j["edges"].erase(k);
      break;
    }
    CHECK(error_path([&] { jfunctor_from_json(j); }) == "$.edges");
  }
  SUBCASE("an image outside the target is rejected") {
    Json j = to_json(fixture::point_functor({0, 1}));
    j["edges"][1]["map"]["*"] = "nope";
    CHECK(error_path([&] { jfunctor_from_json(j); }) == "$.edges[1].map.*");
  }
  SUBCASE("wrong schema") {
    Json j = to_json(fixture::point_functor({0, 0}));
    j["schema"] = "tdatum.v1";
    CHECK(error_path([&] { jfunctor_from_json(j); }) == "$.schema");
  }
}

TEST_CASE("tdatum.v1") {
  SUBCASE("empty-window data roundtrip") {
    for (const FinCarrier& c : {FinCarrier{}, FinCarrier::point()}) {
      const TDatum D({0, 0}, {{JObject{0, 0}, GroupAction::trivial(c, 0, 0)}}, {});
      const std::string text = dump_json(to_json(D));
      CHECK(tdatum_from_json(parse_json(text)) == D);
      CHECK(dump_json(to_json(tdatum_from_json(parse_json(text)))) == text);
    }
  }
  SUBCASE("random data roundtrip byte-identically") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const TDatum D = random_tdatum({3, 3}, seed);
      const std::string text = dump_json(to_json(D));
      const TDatum E = tdatum_from_json(parse_json(text));
      CHECK(E == D);
      CHECK(dump_json(to_json(E)) == text);
    }
  }
  SUBCASE("an invalid datum still parses and fails validation") {
    const TDatum D = tdatum_from_json(to_json(fixture::sigma2_counterexample()));
    CHECK_FALSE(validate_tdatum(D).passed());
  }
  SUBCASE("generators violating the group relations are refused") {
    Json j = to_json(fixture::point_datum({2, 2}));
    Json& obj = j["objects"][8];
    REQUIRE(obj["at"] == Json::array({2, 2}));
    obj["carrier"] = {"a", "b"};
    obj["left"] = Json::array({{{"a", "a"}, {"b", "a"}}});
    obj["right"] = Json::array({{{"a", "a"}, {"b", "b"}}});
    CHECK(error_path([&] { tdatum_from_json(j); }) == "$.objects[8]");
  }
  SUBCASE("missing shifts are reported") {
    Json j = to_json(fixture::point_datum({1, 1}));
    j["shifts"] = Json::array();
    CHECK(error_path([&] { tdatum_from_json(j); }) == "$.shifts");
  }
}

TEST_CASE("spectrum.v1") {
  const FinCarrier K(std::vector<std::string>{"a", "b"});
  const SymSpectrum S = f_K_spt(random_tdatum({2, 2}, 3), K);
  const std::string text = dump_json(to_json(S));
  const SymSpectrum T = spectrum_from_json(parse_json(text));
  CHECK(T.K == S.K);
  CHECK(T.levels == S.levels);
  CHECK(T.bondings == S.bondings);
  CHECK(dump_json(to_json(T)) == text);

  Json j = parse_json(text);
  j["bondings"].erase(0);
  CHECK(error_path([&] { spectrum_from_json(j); }) == "$.bondings");
}

TEST_CASE("coend.v1") {
  const JFunctor X = fixture::point_functor({1, 1});
  const CoendPresentation P = day_convolve(X, X, {1, 1});
  const Json brief = to_json(P, false);
  const Json full = to_json(P, true);
  // One class per way of splitting n - m = 0 between the factors.
  CHECK(brief["classes"].size() == 3);
  CHECK_FALSE(brief["classes"][0].contains("members"));
  CHECK(full["classes"][0]["members"].size() == full["classes"][0]["size"]);
  CHECK(full["classes"][0]["representative"] == full["classes"][0]["members"][0]);
  CHECK(dump_json(full) == dump_json(to_json(day_convolve(X, X, {1, 1}, 99), true)));
}

TEST_CASE("reports") {
  Report r("demo");
  r.cases = 3;
  r.fail("x");
  CHECK(to_json(r) == parse_json(R"({"check": "demo", "passed": false, "cases": 3, "violations": ["x"]})"));
}
