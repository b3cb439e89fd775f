#pragma once

// The two mutually inverse constructions between T-data and J-functors.
//
// A T-datum becomes a functor by sending a morphism f, canonically written
// as (a, b) o Psi_{i,n,p}, to (a, b) o Phi_{i,n,p}. A functor becomes a
// T-datum by restricting to permutation pairs and reading the shifts off
// the standard maps Psi_{i,n,1}.

#include <cstdint>
#include <memory>

#include "jspec/diagrams.hpp"

namespace jspec {

/// (a, b) o Phi_{i,n,p} for an arbitrary decomposition of a morphism out of
/// `src`. Performs no validity checks on D.
Table apply_decomposition(const TDatum& D, JObject src, const Decomposition& d);

/// Evaluates a validated T-datum on morphisms of its window.
class Evaluator {
 public:
  /// Throws std::invalid_argument naming the first violation if D is invalid.
  explicit Evaluator(TDatum D);

  const TDatum& datum() const { return datum_; }
  Table table(const JMorphism& f) const;
  FinMap operator()(const JMorphism& f) const;

 private:
  TDatum datum_;
};

/// Validates D on every call; prefer Evaluator for repeated use.
FinMap evaluate(const TDatum& D, const JMorphism& f);

JFunctor tdatum_to_functor(const TDatum& D);
/// With `check`, F must pass validate_functor (std::invalid_argument otherwise).
TDatum functor_to_tdatum(const JFunctor& F, bool check = true);

/// datum -> functor -> datum must reproduce D exactly.
Report roundtrip_check(const TDatum& D);
/// functor -> datum -> functor must agree with F on every object and morphism.
Report roundtrip_check(const JFunctor& F);

/// Coproduct of representables Hom(A_j, -) on a window; the element u of the
/// j-th summand is labelled tags[j] + u.label(). Edges act by postcomposition.
JFunctor representable_sum(Window w, const std::vector<JObject>& generators,
                           const std::vector<std::string>& tags);

/// A seeded random valid diagram: a coproduct of representables Hom(A_j, -)
/// (the free part) and its quotient by a random set of relations closed
/// under all morphisms of the window.
struct RandomInstance {
  std::uint64_t seed = 0;
  std::vector<JObject> generators;
  JFunctor free;
  JFunctor functor;
  /// free -> functor, objectwise.
  std::map<JObject, FinMap> projection;
};

RandomInstance random_instance(Window w, std::uint64_t seed);
/// functor_to_tdatum(random_instance(w, seed).functor).
TDatum random_tdatum(Window w, std::uint64_t seed);

}  // namespace jspec
