#include <doctest.h>

#include "fixtures.hpp"
#include "jspec/spectra.hpp"
#include "oracles.hpp"

using namespace jspec;

namespace {

FinCarrier letters(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < k; ++j) out.push_back(std::string(1, static_cast<char>('a' + j)));
  return FinCarrier(out);
}

/// Empty in every degree except `d`, where it is `level`.
SymSeq concentrated(std::size_t d, GroupAction level) {
  SymSeq X;
  for (std::size_t n = 0; n < d; ++n) X.levels.push_back(GroupAction::trivial(FinCarrier{}, n, 0));
  X.levels.push_back(std::move(level));
  return X;
}

/// Row i = 0 of a datum, read as a symmetric sequence.
SymSeq row_zero(const TDatum& D) {
  SymSeq X;
  for (std::size_t n = 0; n <= D.window().N; ++n) {
    const auto& act = D.action({0, n});
    X.levels.emplace_back(act.carrier(), n, 0, act.right_generators(), std::vector<Table>{});
  }
  return X;
}

bool same_spectrum(const SymSpectrum& a, const SymSpectrum& b) {
  return a.K == b.K && a.levels == b.levels && a.bondings == b.bondings;
}

}  // namespace

TEST_CASE("f_K on small sequences") {
  const FinCarrier K = letters(2);
  SUBCASE("T goes to K") {
    const FinCarrier out = f_K(concentrated(1, GroupAction::trivial(FinCarrier::point(), 1, 0)), K);
    CHECK(out.labels() == std::vector<std::string>{"[1;*;a]", "[1;*;b]"});
  }
  SUBCASE("a point in degree 2 gives multisets of size 2") {
    CHECK(f_K(concentrated(2, GroupAction::trivial(FinCarrier::point(), 2, 0)), K).size() == 3);
  }
  SUBCASE("a point in degree 0 gives a point") {
    for (std::size_t k = 0; k <= 3; ++k) {
      CHECK(f_K(concentrated(0, GroupAction::trivial(FinCarrier::point(), 0, 0)), letters(k)).size() == 1);
    }
  }
  SUBCASE("a free orbit in degree 2 gives ordered pairs") {
    const FinCarrier orbit(std::vector<std::string>{"12", "21"});
    CHECK(f_K(concentrated(2, GroupAction(orbit, 2, 0, {{1, 0}}, {})), K).size() == 4);
  }
  SUBCASE("wrong degrees are refused") {
    SymSeq X;
    X.levels.push_back(GroupAction::trivial(FinCarrier::point(), 1, 0));
    CHECK_THROWS_AS(f_K(X, K), std::invalid_argument);
  }
}

TEST_CASE("f_K agrees with the Burnside count") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const SymSeq X = row_zero(random_tdatum({1, 3}, seed));
    for (std::size_t k = 0; k <= 3; ++k) {
      std::uint64_t expect = 0;
      for (std::size_t n = 0; n < X.levels.size(); ++n) {
        const auto& act = X.levels[n];
        expect += oracle::burnside(static_cast<unsigned>(n), static_cast<unsigned>(act.carrier().size()),
                                   static_cast<unsigned>(k), [&](const std::vector<unsigned>& s, unsigned x) {
                                     const Permutation sigma(std::vector<Index>(s.begin(), s.end()));
                                     return act.act_table(sigma, Permutation::identity(0))[x];
                                   });
      }
      CHECK_MESSAGE(f_K(X, letters(k)).size() == expect, "seed " << seed << ", |K| = " << k);
    }
  }
}

TEST_CASE("f_K_spt") {
  SUBCASE("one-point datum, one-point K") {
    const SymSpectrum S = f_K_spt(fixture::point_datum({2, 2}), letters(1));
    for (std::size_t i = 0; i <= 2; ++i) CHECK(S.at(i).size() == i + 1);
    CHECK(validate_spectrum(S, 2).passed());
  }
  SUBCASE("the unit datum gives one point per level, from n = i") {
    const TDatum R = functor_to_tdatum(representable_sum({2, 2}, {{0, 0}}, {""}));
    const SymSpectrum S = f_K_spt(R, letters(1));
    for (std::size_t i = 0; i <= 2; ++i) {
      REQUIRE(S.at(i).size() == 1);
      CHECK(S.at(i).label(0).rfind("[" + std::to_string(i) + ";", 0) == 0);
    }
  }
  SUBCASE("the unit datum gives the suspension spectrum of a point") {
    const TDatum R = functor_to_tdatum(representable_sum({3, 3}, {{0, 0}}, {""}));
    for (std::size_t k = 1; k <= 3; ++k) {
      const SymSpectrum S = f_K_spt(R, letters(k));
      const SymSpectrum P = suspension_spectrum(letters(k), 3);
      for (std::size_t i = 0; i <= 3; ++i) CHECK(S.at(i).size() == P.at(i).size());
    }
  }
  SUBCASE("levels stop where bondings would leave the window") {
    const SymSpectrum S = f_K_spt(fixture::point_datum({1, 3}), letters(1));
    CHECK(S.at(0).size() == 3);
    CHECK(S.at(1).size() == 4);
  }
  SUBCASE("random valid data give spectra") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const TDatum D = random_tdatum({2, 2}, seed);
      const Report r = validate_spectrum(f_K_spt(D, letters(2)), 2);
      CHECK_MESSAGE(r.passed(), "seed " << seed << ": " << fixture::first(r));
    }
  }
  SUBCASE("invalid data are refused") {
    CHECK_THROWS_AS(f_K_spt(fixture::sigma2_counterexample(), letters(2)), std::invalid_argument);
  }
  SUBCASE("building through the functor gives the same spectrum") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const TDatum D = random_tdatum({2, 2}, seed);
      const TDatum back = functor_to_tdatum(tdatum_to_functor(D));
      CHECK(same_spectrum(f_K_spt(D, letters(2)), f_K_spt(back, letters(2))));
    }
  }
}

TEST_CASE("validate_spectrum") {
  const FinCarrier K = letters(2);
  SUBCASE("suspension spectra pass") {
    for (std::size_t k = 0; k <= 3; ++k) CHECK(validate_spectrum(suspension_spectrum(letters(k), 3), 2).passed());
  }
  SUBCASE("a bonding that ignores the new coordinate's position is caught") {
    SymSpectrum S = suspension_spectrum(K, 3);
    // Prepend instead of append at level 1 -> 2: (k1, c) |-> (c, k1). From
    // level 0 this is the swap of K^2, which is equivariant; level 1 is not.
    Table t = S.bondings[1].table();
    const auto& src = S.bondings[1].src();
    for (Index j = 0; j < t.size(); ++j) {
      const std::string& l = src.label(j);  // "((x),c)"
      t[j] = S.at(2).index_of("(" + l.substr(l.size() - 2, 1) + "," + l.substr(2, 1) + ")");
    }
    S.bondings[1] = FinMap(src, S.at(2), t);
    const Report r = validate_spectrum(S, 2);
    REQUIRE_FALSE(r.passed());
    CHECK(r.violations.front() == "iterated bonding at i=1, p=2 is not equivariant for a=[1], g=[2.1]");
  }
  SUBCASE("shape errors") {
    SymSpectrum S = suspension_spectrum(K, 2);
    S.bondings.pop_back();
    CHECK_FALSE(validate_spectrum(S, 1).passed());
  }
}

TEST_CASE("maps of data induce maps of spectra") {
  const FinCarrier K = letters(2);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const RandomInstance inst = random_instance({2, 2}, seed);
    const TDatum src = functor_to_tdatum(inst.free);
    const TDatum dst = functor_to_tdatum(inst.functor);
    const DatumMap h{inst.projection};
    const auto maps = spectrum_map(src, dst, h, K);
    const SymSpectrum S = f_K_spt(src, K);
    const SymSpectrum T = f_K_spt(dst, K);
    const Report r = validate_spectrum_map(S, T, maps);
    CHECK_MESSAGE(r.passed(), "seed " << seed << ": " << fixture::first(r));
    for (const auto& m : maps) CHECK(m.is_surjective());
  }
  SUBCASE("a broken component is caught") {
    const TDatum D = functor_to_tdatum(representable_sum({2, 2}, {{0, 0}}, {""}));
    const SymSpectrum S = f_K_spt(D, K);
    DatumMap id;
    for (JObject a : D.window().objects()) id.components.emplace(a, FinMap::identity(D.at(a)));
    auto maps = spectrum_map(D, D, id, K);
    CHECK(validate_spectrum_map(S, S, maps).passed());
    Table t = maps[1].table();
    std::swap(t[0], t[1]);
    maps[1] = FinMap(maps[1].src(), maps[1].dst(), t);
    CHECK_FALSE(validate_spectrum_map(S, S, maps).passed());
  }
}
