#pragma once

// Symmetric K-spectra of finite sets and prolongation along T |-> K.
//
// For a symmetric sequence X, f^K(X) = coproduct over n of (X_n x K^n)/Sigma_n,
// Sigma_n acting diagonally; sigma moves coordinate j of K^n to sigma(j).
// Orbits are labelled "[n;x;k1,k2,...]" by their least member.

#include <cstddef>
#include <vector>

#include "jspec/diagrams.hpp"

namespace jspec {

/// Levels carry Sigma_i as the first factor of degree (i, 0). Bonding i runs
/// level_i x K -> level_{i+1}, with source carrier product(level_i, K).
struct SymSpectrum {
  FinCarrier K;
  std::vector<GroupAction> levels;
  std::vector<FinMap> bondings;

  std::size_t top() const { return levels.empty() ? 0 : levels.size() - 1; }
  const FinCarrier& at(std::size_t i) const { return levels.at(i).carrier(); }
};

FinCarrier f_K(const SymSeq& X, const FinCarrier& K);

/// Level i is the prolongation of the row X_{i,-}, restricted to
/// n <= N - M + i in window (M, N) so that every bonding stays inside the
/// window; Sigma_i acts through the first factor and the bonding sends
/// [x; k], c to [phi_{i,n}(x); k, c]. Throws std::invalid_argument on an
/// invalid datum.
SymSpectrum f_K_spt(const TDatum& D, const FinCarrier& K);

/// Level i is K^i with coordinates permuted, bondings append a coordinate.
SymSpectrum suspension_spectrum(const FinCarrier& K, std::size_t top);

/// Shapes, and equivariance of every iterated bonding level_i x K^p ->
/// level_{i+p} under Sigma_i x Sigma_p for 1 <= p <= p_max.
Report validate_spectrum(const SymSpectrum& S, std::size_t p_max);

/// Levelwise components [x; k] |-> [h(x); k] of the map of spectra induced
/// by a map of T-data.
std::vector<FinMap> spectrum_map(const TDatum& src, const TDatum& dst, const DatumMap& h, const FinCarrier& K);
/// Equivariance and compatibility with the bondings.
Report validate_spectrum_map(const SymSpectrum& src, const SymSpectrum& dst, const std::vector<FinMap>& h);

}  // namespace jspec
