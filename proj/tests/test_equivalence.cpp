#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "jspec/equivalence.hpp"

using namespace jspec;

TEST_CASE("evaluate") {
  const auto D = random_tdatum({2, 2}, 3);
  const Evaluator ev(D);
  SUBCASE("identities go to identities") {
    for (JObject a : D.window().objects()) CHECK(ev(identity_j(a)) == FinMap::identity(D.at(a)));
  }
  SUBCASE("first standard maps go to the stored shifts") {
    for (const auto& [a, phi] : D.shifts()) CHECK(ev(standard_map(a.m, a.n, 1)) == phi);
  }
  SUBCASE("outside the window") {
    CHECK_THROWS_AS(ev.table(identity_j({3, 0})), std::out_of_range);
  }
  SUBCASE("invalid data are refused") {
    CHECK_THROWS_AS(evaluate(fixture::sigma2_counterexample(), identity_j({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(tdatum_to_functor(fixture::sigma2_counterexample()), std::invalid_argument);
  }
}

TEST_CASE("evaluate does not depend on the chosen decomposition") {
  const auto s_all = [](std::size_t d) { return enumerate_permutations(d); };
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const auto D = random_tdatum({2, 2}, seed);
    const Evaluator ev(D);
    for (JObject src : D.window().objects()) {
      for (std::size_t p = 0; p <= 2; ++p) {
        const JObject dst{src.m + p, src.n + p};
        if (!D.window().contains(dst)) continue;
        const auto psi = standard_map(src.m, src.n, p);
        for (const auto& f : enumerate_hom(src, dst)) {
          const Table canonical = ev.table(f);
          std::size_t alternatives = 0;
          for (const auto& a : s_all(dst.m))
            for (const auto& b : s_all(dst.n)) {
              if (compose_j(JMorphism::permutation_pair(a, b), psi) != f) continue;
              ++alternatives;
              CHECK(apply_decomposition(D, src, Decomposition{a, b, p}) == canonical);
            }
          CHECK(alternatives == factorial(p));
        }
      }
    }
  }
}

TEST_CASE("tdatum_to_functor") {
  SUBCASE("one-point datum gives the constant functor") {
    CHECK(same_functor(tdatum_to_functor(fixture::point_datum({2, 2})), fixture::point_functor({2, 2})));
  }
  SUBCASE("random valid data give functors") {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
      CHECK(validate_functor(tdatum_to_functor(random_tdatum({2, 2}, seed))).passed());
    }
    CHECK(validate_functor(tdatum_to_functor(random_tdatum({3, 3}, 7))).passed());
  }
}

TEST_CASE("functor_to_tdatum") {
  SUBCASE("constant functor gives the one-point datum") {
    CHECK(functor_to_tdatum(fixture::point_functor({2, 2})) == fixture::point_datum({2, 2}));
  }
  SUBCASE("unit functor has n! points on the diagonal and nothing elsewhere") {
    const auto D = functor_to_tdatum(representable_sum({3, 3}, {{0, 0}}, {""}));
    for (JObject a : D.window().objects()) {
      CHECK(D.at(a).size() == (a.m == a.n ? count_hom({0, 0}, a) : 0));
    }
  }
  SUBCASE("invalid functors are refused") {
    const auto F = representable_sum({2, 2}, {{0, 0}}, {""});
    const auto bad = F.with_edge(standard_map(0, 0, 1), Table{0});
    CHECK_NOTHROW(functor_to_tdatum(bad, false));
    const auto broken = F.with_edge(JMorphism::permutation_pair(Permutation::adjacent(2, 0), Permutation::identity(2)),
                                    Table{0, 0});
    CHECK_THROWS_AS(functor_to_tdatum(broken), std::invalid_argument);
  }
  SUBCASE("extraction from a datum-backed functor recovers the datum") {
    const auto D = random_tdatum({2, 2}, 9);
    CHECK(functor_to_tdatum(tdatum_to_functor(D)) == D);
  }
}

TEST_CASE("roundtrips") {
  CHECK(roundtrip_check(fixture::point_datum({2, 2})).passed());
  CHECK(roundtrip_check(fixture::point_functor({2, 2})).passed());
  CHECK(roundtrip_check(representable_sum({2, 2}, {{0, 0}}, {""})).passed());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance({2, 2}, seed);
    CHECK(roundtrip_check(inst.functor).passed());
    CHECK(roundtrip_check(functor_to_tdatum(inst.functor)).passed());
  }
}

TEST_CASE("random instances are reproducible and valid") {
  const auto a = random_instance({3, 3}, 42);
  const auto b = random_instance({3, 3}, 42);
  CHECK(same_functor(a.functor, b.functor));
  CHECK(validate_functor(a.functor).passed());
  CHECK(validate_functor(a.free).passed());
  // Seeds should not all collapse to the same shape.
  std::set<std::vector<std::size_t>> shapes;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_instance({2, 2}, seed);
    std::vector<std::size_t> sizes;
    for (JObject o : inst.functor.window().objects()) sizes.push_back(inst.functor.at(o).size());
    shapes.insert(sizes);
  }
  CHECK(shapes.size() > 5);
}

TEST_CASE("single-entry shift mutations: the validator agrees with functoriality") {
  std::size_t mutations = 0, rejected = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto D = random_tdatum({3, 3}, seed);
    for (const auto& [a, phi] : D.shifts()) {
      for (Index x = 0; x < phi.src().size(); ++x) {
        for (Index y = 0; y < phi.dst().size(); ++y) {
          if (y == phi(x)) continue;
          Table t = phi.table();
          t[x] = y;
          const auto M = D.with_shift(a, FinMap(phi.src(), phi.dst(), t));
          const bool valid = validate_tdatum(M).passed();
          const bool functorial = validate_functor(fixture::unchecked_functor(M)).passed();
          CHECK(valid == functorial);
          ++mutations;
          rejected += !valid;
        }
      }
    }
  }
  CHECK(mutations > 0);
  CHECK(rejected > 0);
  CHECK(rejected < mutations);
}
