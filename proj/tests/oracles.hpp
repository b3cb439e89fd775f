#pragma once

// Independent brute-force oracles shared by the unit and acceptance suites.
// Nothing here calls the enumeration or composition code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// Every function from `from` points into `to` points, as image tables.
inline std::vector<std::vector<unsigned>> all_functions(unsigned from, unsigned to) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(from, 0);
  if (from == 0) return {{}};
  if (to == 0) return {};
  while (true) {
    out.push_back(cur);
    unsigned j = 0;
    while (j < from && ++cur[j] == to) cur[j++] = 0;
    if (j == from) break;
  }
  return out;
}

inline bool injective(const std::vector<unsigned>& f) {
  std::set<unsigned> s(f.begin(), f.end());
  return s.size() == f.size();
}

/// |Hom((m,n),(k,l))| by filtering all triples of raw functions.
inline std::uint64_t brute_hom_count(unsigned m, unsigned n, unsigned k, unsigned l) {
  std::uint64_t count = 0;
  for (const auto& phi : all_functions(m, k)) {
    if (!injective(phi)) continue;
    for (const auto& psi : all_functions(n, l)) {
      if (!injective(psi)) continue;
      const unsigned cphi = k - m;
      const unsigned cpsi = l - n;
      if (cphi != cpsi) continue;
      for (const auto& alpha : all_functions(cphi, cpsi)) {
        if (injective(alpha)) ++count;
      }
    }
  }
  return count;
}

/// Connected components of an undirected graph on `n` vertices by BFS.
inline std::vector<unsigned> bfs_components(unsigned n, const std::function<bool(unsigned, unsigned)>& edge) {
  std::vector<unsigned> comp(n, n);
  unsigned next = 0;
  for (unsigned s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<unsigned> queue{s};
    comp[s] = next;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (unsigned v = 0; v < n; ++v) {
        if (comp[v] == n && (edge(queue[q], v) || edge(v, queue[q]))) {
          comp[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

/// Burnside count of Sigma_n-orbits on X x K^n, where Sigma_n acts on X
/// through `act(sigma, x)` and on K^n by permuting coordinates.
inline std::uint64_t burnside(unsigned n, unsigned xsize, unsigned ksize,
                              const std::function<unsigned(const std::vector<unsigned>&, unsigned)>& act) {
  std::vector<unsigned> sigma(n);
  for (unsigned j = 0; j < n; ++j) sigma[j] = j;
  std::uint64_t fixed = 0, order = 0;
  const auto tuples = all_functions(n, ksize);
  do {
    ++order;
    for (unsigned x = 0; x < xsize; ++x) {
      if (act(sigma, x) != x) continue;
      for (const auto& k : tuples) {
        // (sigma . k)_{sigma(j)} = k_j
        bool fix = true;
        for (unsigned j = 0; j < n && fix; ++j) fix = k[sigma[j]] == k[j];
        if (fix) ++fixed;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return fixed / order;
}

}  // namespace oracle
