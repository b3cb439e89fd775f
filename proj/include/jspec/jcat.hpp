#pragma once

// The index category J.
//
// Objects are pairs (m, n) of finite ordinals. A morphism (m, n) -> (k, l) is
// a triple (phi, psi, alpha) of injections phi: m -> k, psi: n -> l and a
// bijection alpha from the complement of phi to the complement of psi. Such a
// morphism exists only when k - m = l - n >= 0.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jspec/fincomb.hpp"

namespace jspec {

struct JObject {
  std::size_t m = 0;
  std::size_t n = 0;

  friend auto operator<=>(const JObject&, const JObject&) = default;
  friend bool operator==(const JObject&, const JObject&) = default;

  /// The component invariant n - m.
  long difference() const { return static_cast<long>(n) - static_cast<long>(m); }
  std::string str() const;
};

class JMorphism {
 public:
  JMorphism() = default;
  /// Validating constructor. `alpha` must run from sorted_complement(phi) to
  /// sorted_complement(psi).
  JMorphism(JObject src, JObject dst, Injection phi, Injection psi, PartialBijection alpha);

  /// Convenience: alpha given as the images of the sorted complement of phi.
  static JMorphism from_tables(JObject src, JObject dst, std::vector<Index> phi,
                               std::vector<Index> psi, std::vector<Index> alpha);
  /// The automorphism (a, b, empty) of (a.degree(), b.degree()).
  static JMorphism permutation_pair(const Permutation& a, const Permutation& b);

  const JObject& src() const { return src_; }
  const JObject& dst() const { return dst_; }
  const Injection& phi() const { return phi_; }
  const Injection& psi() const { return psi_; }
  const PartialBijection& alpha() const { return alpha_; }

  /// Common difference k - m = l - n.
  std::size_t shift() const { return dst_.m - src_.m; }
  bool is_identity() const;

  /// Compact deterministic label, e.g. "<2;1;1>" for phi=[2], psi=[1], alpha=[1].
  std::string label() const;

  friend auto operator<=>(const JMorphism&, const JMorphism&) = default;
  friend bool operator==(const JMorphism&, const JMorphism&) = default;

 private:
  JObject src_;
  JObject dst_;
  Injection phi_;
  Injection psi_;
  PartialBijection alpha_;
};

/// Canonical factorisation of a morphism (i, n) -> (i + p, n + p) as
/// (a, b) o standard_map(i, n, p).
struct Decomposition {
  Permutation a;
  Permutation b;
  std::size_t p = 0;
};

JMorphism identity_j(JObject a);
/// g o f; throws std::invalid_argument if f.dst() != g.src().
JMorphism compose_j(const JMorphism& g, const JMorphism& f);

bool hom_exists(JObject src, JObject dst);
/// k! l! / p! when k - m = l - n = p >= 0, else 0.
std::uint64_t count_hom(JObject src, JObject dst);
std::vector<JMorphism> enumerate_hom(JObject src, JObject dst);

JObject tensor_obj(JObject a, JObject b);
JMorphism tensor_mor(const JMorphism& f, const JMorphism& g);
/// a (x) b -> b (x) a.
JMorphism symmetry_iso(JObject a, JObject b);

/// Psi_{i,n,p}: front inclusions with the order-preserving complement bijection.
JMorphism standard_map(std::size_t i, std::size_t n, std::size_t p);
/// iota_{i,n,p}(g): identity on the first i (resp. n) points, g on the last p.
std::pair<Permutation, Permutation> iota_embed(const Permutation& g, std::size_t i, std::size_t n);

Decomposition decompose(const JMorphism& f);
JMorphism recompose(const Decomposition& d, JObject src);

}  // namespace jspec
