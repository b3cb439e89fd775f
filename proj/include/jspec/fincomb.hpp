#pragma once

// Exact combinatorics of finite ordinals.
//
// The ordinal n is {1, ..., n}. Storage is 0-based: element j of n is held
// as j - 1. Text and JSON encodings use the 1-based values.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jspec {

using Index = std::uint32_t;

class Injection {
 public:
  Injection() = default;
  /// Validates that `images` are distinct and lie below `codomain_size`.
  Injection(std::size_t codomain_size, std::vector<Index> images);

  static Injection identity(std::size_t n);
  /// Front inclusion m -> k, j |-> j.
  static Injection front(std::size_t m, std::size_t k);

  std::size_t domain_size() const { return images_.size(); }
  std::size_t codomain_size() const { return codomain_; }
  const std::vector<Index>& images() const { return images_; }
  Index operator()(Index j) const { return images_[j]; }

  bool hits(Index x) const;
  /// Preimage of x, or codomain_size() if x is not hit.
  Index preimage(Index x) const;

  friend auto operator<=>(const Injection&, const Injection&) = default;
  friend bool operator==(const Injection&, const Injection&) = default;

 private:
  std::size_t codomain_ = 0;
  std::vector<Index> images_;
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> images);

  static Permutation identity(std::size_t n);
  /// Adjacent transposition swapping k and k+1 (0-based k) in degree n.
  static Permutation adjacent(std::size_t n, std::size_t k);

  std::size_t degree() const { return images_.size(); }
  const std::vector<Index>& images() const { return images_; }
  Index operator()(Index j) const { return images_[j]; }

  bool is_identity() const;
  Permutation inverse() const;
  Injection as_injection() const { return Injection(degree(), images_); }

  /// Adjacent-transposition word w with this = s_{w.back()} o ... o s_{w.front()};
  /// applying the permutation to a point means applying s_{w[0]} first.
  std::vector<std::size_t> adjacent_word() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Index> images_;
};

class PartialBijection {
 public:
  PartialBijection() = default;
  /// `sources` and `targets` must be strictly increasing and of equal length;
  /// `images` must be a rearrangement of `targets`.
  PartialBijection(std::vector<Index> sources, std::vector<Index> targets,
                   std::vector<Index> images);

  std::size_t size() const { return sources_.size(); }
  const std::vector<Index>& sources() const { return sources_; }
  const std::vector<Index>& targets() const { return targets_; }
  const std::vector<Index>& images() const { return images_; }

  /// Image of a source element; throws if x is not a source element.
  Index apply(Index x) const;

  friend auto operator<=>(const PartialBijection&, const PartialBijection&) = default;
  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

 private:
  std::vector<Index> sources_;
  std::vector<Index> targets_;
  std::vector<Index> images_;
};

/// g o f. Requires f.codomain_size() == g.domain_size().
Injection compose(const Injection& g, const Injection& f);
/// g o f on permutations of equal degree.
Permutation compose(const Permutation& g, const Permutation& f);

/// Increasing list of codomain elements missed by f.
std::vector<Index> sorted_complement(const Injection& f);

/// chi_{p,q}: moves the first block of size p past the block of size q.
Permutation block_shuffle(std::size_t p, std::size_t q);

/// Block sum: a on the first a.degree() points, b shifted on the rest.
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// All injections m -> k in lexicographic order of image tables.
std::vector<Injection> enumerate_injections(std::size_t m, std::size_t k);
/// All permutations of degree n in lexicographic order.
std::vector<Permutation> enumerate_permutations(std::size_t n);

std::uint64_t factorial(std::size_t n);

/// "2.1.3" style rendering of 1-based values.
std::string dotted(std::span<const Index> values);

}  // namespace jspec
