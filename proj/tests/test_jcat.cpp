#include <doctest.h>

#include <random>
#include <set>

#include "jspec/diagrams.hpp"
#include "jspec/jcat.hpp"
#include "oracles.hpp"

using namespace jspec;

namespace {

Permutation perm(std::vector<Index> one_based) {
  for (auto& v : one_based) --v;
  return Permutation(std::move(one_based));
}

/// All morphisms of the window whose shift is at most `max_shift`.
std::vector<JMorphism> window_morphisms(Window w, std::size_t max_shift) {
  std::vector<JMorphism> out;
  for (auto& f : w.morphisms()) {
    if (f.shift() <= max_shift) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST_CASE("morphisms validate their complement bijection") {
  CHECK_NOTHROW(JMorphism::from_tables({1, 0}, {2, 1}, {1}, {}, {0}));
  // alpha must start from the complement of phi
  CHECK_THROWS_AS(JMorphism({1, 0}, {2, 1}, Injection(2, {1}), Injection(1, {}),
                            PartialBijection({1}, {0}, {0})),
                  std::invalid_argument);
  // complements of unequal size cannot be matched
  CHECK_THROWS(JMorphism::from_tables({1, 0}, {1, 1}, {0}, {}, {}));
}

TEST_CASE("identity_j") {
  const auto id00 = identity_j({0, 0});
  CHECK(id00.phi().domain_size() == 0);
  CHECK(id00.alpha().size() == 0);
  const auto id21 = identity_j({2, 1});
  CHECK(id21.phi() == Injection::identity(2));
  CHECK(id21.psi() == Injection::identity(1));
  CHECK(compose_j(id21, id21) == id21);
  CHECK(id21.is_identity());
}

TEST_CASE("compose_j: identity laws and object mismatch") {
  for (const auto& f : Window{2, 2}.morphisms()) {
    CHECK(compose_j(identity_j(f.dst()), f) == f);
    CHECK(compose_j(f, identity_j(f.src())) == f);
  }
  CHECK_THROWS_AS(compose_j(identity_j({1, 1}), identity_j({0, 0})), std::invalid_argument);
}

TEST_CASE("compose_j: standard maps compose to standard maps") {
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t n = 0; n <= 2; ++n) {
      CHECK(compose_j(standard_map(i + 1, n + 1, 1), standard_map(i, n, 1)) == standard_map(i, n, 2));
      CHECK(standard_map(i, n, 0) == identity_j({i, n}));
    }
  }
}

TEST_CASE("compose_j is associative on the window (2,2) with shift <= 2") {
  const auto mors = window_morphisms({2, 2}, 2);
  std::size_t triples = 0;
  for (const auto& f : mors)
    for (const auto& g : mors) {
      if (g.src() != f.dst()) continue;
      const auto gf = compose_j(g, f);
      for (const auto& h : mors) {
        if (h.src() != g.dst()) continue;
        CHECK(compose_j(h, gf) == compose_j(compose_j(h, g), f));
        ++triples;
      }
    }
  CHECK(triples > 0);
}

TEST_CASE("count_hom") {
  for (std::size_t n = 0; n <= 4; ++n) CHECK(count_hom({0, 0}, {n, n}) == factorial(n));
  CHECK(count_hom({1, 0}, {2, 1}) == 2);
  CHECK(count_hom({1, 0}, {1, 1}) == 0);
  CHECK(count_hom({2, 2}, {1, 1}) == 0);
}

TEST_CASE("enumerate_hom agrees with count_hom and the brute-force oracle for entries <= 4") {
  for (unsigned m = 0; m <= 4; ++m)
    for (unsigned n = 0; n <= 4; ++n)
      for (unsigned k = 0; k <= 4; ++k)
        for (unsigned l = 0; l <= 4; ++l) {
          const auto homs = enumerate_hom({m, n}, {k, l});
          const std::set<JMorphism> distinct(homs.begin(), homs.end());
          CHECK(distinct.size() == homs.size());
          CHECK(homs.size() == count_hom({m, n}, {k, l}));
          CHECK(homs.size() == oracle::brute_hom_count(m, n, k, l));
          CHECK(hom_exists({m, n}, {k, l}) == (k >= m && l >= n && k - m == l - n));
        }
  CHECK(enumerate_hom({0, 0}, {1, 1}).size() == 1);
  CHECK(enumerate_hom({1, 1}, {2, 2}).size() == 4);
  CHECK(enumerate_hom({2, 2}, {1, 1}).empty());
}

TEST_CASE("tensor product") {
  CHECK(tensor_obj({1, 0}, {0, 1}) == JObject{1, 1});
  const auto objs = Window{2, 2}.objects();
  for (JObject a : objs)
    for (JObject b : objs) CHECK(tensor_mor(identity_j(a), identity_j(b)) == identity_j(tensor_obj(a, b)));

  SUBCASE("unit object (0,0) is strict") {
    for (const auto& f : Window{2, 2}.morphisms()) {
      CHECK(tensor_mor(identity_j({0, 0}), f) == f);
      CHECK(tensor_mor(f, identity_j({0, 0})) == f);
    }
  }
  SUBCASE("interchange law, exhaustive over window (1,1) factors") {
    const auto mors = Window{1, 1}.morphisms();
    for (const auto& f1 : mors)
      for (const auto& g1 : mors) {
        if (g1.src() != f1.dst()) continue;
        for (const auto& f2 : mors)
          for (const auto& g2 : mors) {
            if (g2.src() != f2.dst()) continue;
            CHECK(tensor_mor(compose_j(g1, f1), compose_j(g2, f2)) ==
                  compose_j(tensor_mor(g1, g2), tensor_mor(f1, f2)));
          }
      }
  }
  SUBCASE("interchange law, seeded sample in window (2,2)") {
    const auto mors = Window{2, 2}.morphisms();
    std::mt19937_64 rng(7);
    std::size_t done = 0;
    while (done < 2000) {
      const auto& f1 = mors[rng() % mors.size()];
      const auto& f2 = mors[rng() % mors.size()];
      const auto& g1 = mors[rng() % mors.size()];
      const auto& g2 = mors[rng() % mors.size()];
      if (g1.src() != f1.dst() || g2.src() != f2.dst()) continue;
      CHECK(tensor_mor(compose_j(g1, f1), compose_j(g2, f2)) ==
            compose_j(tensor_mor(g1, g2), tensor_mor(f1, f2)));
      ++done;
    }
  }
  SUBCASE("tensor is strictly associative") {
    const auto mors = Window{1, 1}.morphisms();
    for (const auto& f : mors)
      for (const auto& g : mors)
        for (const auto& h : mors) CHECK(tensor_mor(tensor_mor(f, g), h) == tensor_mor(f, tensor_mor(g, h)));
  }
}

TEST_CASE("symmetry isomorphism") {
  CHECK(symmetry_iso({1, 1}, {1, 1}) == JMorphism::permutation_pair(perm({2, 1}), perm({2, 1})));
  const auto objs = Window{2, 2}.objects();
  for (JObject a : objs)
    for (JObject b : objs) {
      CHECK(compose_j(symmetry_iso(b, a), symmetry_iso(a, b)) == identity_j(tensor_obj(a, b)));
    }

  SUBCASE("naturality for all f: a -> a', g: b -> b' in window (2,2)") {
    const auto mors = Window{2, 2}.morphisms();
    for (const auto& f : mors)
      for (const auto& g : mors) {
        const auto lhs = compose_j(symmetry_iso(f.dst(), g.dst()), tensor_mor(f, g));
        const auto rhs = compose_j(tensor_mor(g, f), symmetry_iso(f.src(), g.src()));
        CHECK(lhs == rhs);
      }
  }
  SUBCASE("hexagon on objects with entries <= 1") {
    const auto small = Window{1, 1}.objects();
    for (JObject a : small)
      for (JObject b : small)
        for (JObject c : small) {
          const auto lhs = symmetry_iso(a, tensor_obj(b, c));
          const auto rhs = compose_j(tensor_mor(identity_j(b), symmetry_iso(a, c)),
                                     tensor_mor(symmetry_iso(a, b), identity_j(c)));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("standard maps and the Sigma_p embedding") {
  const auto psi001 = standard_map(0, 0, 1);
  CHECK(psi001.src() == JObject{0, 0});
  CHECK(psi001.dst() == JObject{1, 1});
  CHECK(psi001.alpha().images() == std::vector<Index>{0});

  CHECK(iota_embed(Permutation::identity(2), 1, 1) ==
        std::pair{Permutation::identity(3), Permutation::identity(3)});
  CHECK(iota_embed(perm({2, 1}), 1, 1) == std::pair{perm({1, 3, 2}), perm({1, 3, 2})});

  const auto s3 = enumerate_permutations(3);
  for (const auto& g : s3)
    for (const auto& h : s3) {
      auto [ga, gb] = iota_embed(g, 1, 2);
      auto [ha, hb] = iota_embed(h, 1, 2);
      CHECK(iota_embed(compose(g, h), 1, 2) == std::pair{compose(ga, ha), compose(gb, hb)});
    }

  // g o Psi = Psi for every g in Sigma_p acting through iota.
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t p = 0; p <= 2; ++p) {
        const auto psi = standard_map(i, n, p);
        for (const auto& g : enumerate_permutations(p)) {
          auto [a, b] = iota_embed(g, i, n);
          CHECK(compose_j(JMorphism::permutation_pair(a, b), psi) == psi);
        }
      }
}

TEST_CASE("decompose") {
  const auto d0 = decompose(identity_j({2, 1}));
  CHECK(d0.a.is_identity());
  CHECK(d0.b.is_identity());
  CHECK(d0.p == 0);

  const auto f = JMorphism::from_tables({1, 0}, {2, 1}, {1}, {}, {0});
  const auto d = decompose(f);
  CHECK(d.a == perm({2, 1}));
  CHECK(d.b == perm({1}));
  CHECK(d.p == 1);
  CHECK(recompose(d, f.src()) == f);

  const auto std_d = decompose(standard_map(1, 2, 2));
  CHECK(std_d.a.is_identity());
  CHECK(std_d.b.is_identity());
}

TEST_CASE("decompositions of Hom((1,1),(3,3)) are unique up to Sigma_p") {
  const auto s3 = enumerate_permutations(3);
  const auto s2 = enumerate_permutations(2);
  const auto psi = standard_map(1, 1, 2);
  for (const auto& f : enumerate_hom({1, 1}, {3, 3})) {
    const auto d = decompose(f);
    CHECK(recompose(d, f.src()) == f);
    std::set<std::pair<Permutation, Permutation>> found;
    for (const auto& a : s3)
      for (const auto& b : s3)
        if (compose_j(JMorphism::permutation_pair(a, b), psi) == f) found.insert({a, b});
    std::set<std::pair<Permutation, Permutation>> expected;
    for (const auto& g : s2) {
      auto [ga, gb] = iota_embed(g, 1, 1);
      expected.insert({compose(d.a, ga), compose(d.b, gb)});
    }
    CHECK(found == expected);
  }
}
