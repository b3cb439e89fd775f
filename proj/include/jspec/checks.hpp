#pragma once

// Exhaustive verification runs over a window, shared by the command-line
// suite and the acceptance tests. Every check is deterministic given its seed.

#include <cstdint>
#include <string>
#include <vector>

#include "jspec/diagrams.hpp"

namespace jspec {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct SuiteConfig {
  Window window{2, 2};
  std::uint64_t seed = kDefaultSeed;
  /// Random instances per seeded check.
  std::size_t samples = 5;
};

/// Associativity over all composable triples and both identity laws, for
/// morphisms of shift <= max_shift.
Report check_category(Window w, std::size_t max_shift);
/// enumerate_hom against count_hom for all entries <= bound, with distinctness.
Report check_hom_counts(std::size_t bound);
/// Every morphism recomposes from its canonical decomposition, and the pairs
/// (a, b) with (a, b) o Psi = f are exactly the canonical one times iota(Sigma_p).
Report check_decomposition(Window w, std::size_t max_shift);
/// Both roundtrips and functoriality on `count` seeded random data.
Report check_equivalence(Window w, std::uint64_t seed, std::size_t count);

/// X_{0,0} = X_{1,1} = pt, X_{2,2} = {a, b} with (s, id) swapping, Phi_{0,0,2}
/// picking a: equivariant but not Sigma_2-invariant.
TDatum invariance_counterexample();
/// The counterexample is rejected and refused by evaluation; every
/// single-entry shift mutation of `count` seeded data is rejected exactly when
/// the unchecked functor it induces fails functoriality.
Report check_invariance(Window w, std::uint64_t seed, std::size_t count);

/// |1(m, n)| = n! when m = n, 0 otherwise; Sym(T) laws; j^*(1) = Sym(T).
Report check_unit(std::size_t top);
/// Unitors and braidings at every object for `count` seeded functors,
/// associativity of cardinalities on point-support functors, and identical
/// classes across reruns and shuffled enumeration orders.
Report check_day(Window w, std::uint64_t seed, std::size_t count);
/// compare_monoidal is a certified bijection at every object for `count`
/// seeded pairs.
Report check_monoidal(Window w, std::uint64_t seed, std::size_t count);
/// f_K_spt of `count` seeded data, |K| = 1..3, passes validate_spectrum.
Report check_prolongation(Window w, std::uint64_t seed, std::size_t count, std::size_t p_max);
/// component_invariant_check, ids exactly {-M, ..., N}.
Report check_components(Window w);

/// All of the above scaled to the configuration, in a fixed order; checks
/// run concurrently.
std::vector<Report> run_suite(const SuiteConfig& config);

}  // namespace jspec
