#pragma once

// Finite coends and the monoidal structures built from them: Day convolution
// of J-functors and of bisymmetric sequences, the unit functor, j_! and j^*,
// the monoid Sym(T), the smash product of Sym(T)-modules, and the comparison
// between the two tensor products.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jspec/diagrams.hpp"

namespace jspec {

/// Read access to a family of sets indexed by objects of J, with maps along
/// the morphisms the family is functorial for. The referenced diagram must
/// outlive the view.
struct DiagramView {
  std::function<const FinCarrier&(JObject)> at;
  std::function<Table(const JMorphism&)> on;
};

DiagramView view(const JFunctor& F);
/// Maps are defined on permutation pairs only.
DiagramView view(const BisymSeq& X);

/// Generators of a coend at a target object, grouped into slots. A slot is a
/// tuple of index objects, a list of index morphisms into the target and the
/// sets the remaining coordinates range over; its generators are
/// (u, e_1, ..., e_r) for u among the morphisms and e_k in the k-th set.
/// Relations are added by generator index, then close() computes classes.
class CoendPresentation {
 public:
  struct Slot {
    std::vector<JObject> objects;
    std::vector<JMorphism> homs;
    std::vector<FinCarrier> factors;
    std::size_t offset = 0;
    std::size_t size = 0;
  };
  struct Generator {
    std::size_t slot = 0;
    Index u = 0;
    std::vector<Index> elements;
  };

  CoendPresentation() = default;
  explicit CoendPresentation(JObject at) : at_(at) {}

  JObject at() const { return at_; }

  /// Slots must all be added before the first relation.
  std::size_t add_slot(std::vector<JObject> objects, std::vector<JMorphism> homs,
                       std::vector<FinCarrier> factors);
  const std::vector<Slot>& slots() const { return slots_; }
  std::optional<std::size_t> find_slot(const std::vector<JObject>& objects) const;
  /// Position of u in the slot's morphism list; throws std::out_of_range.
  Index hom_index(std::size_t slot, const JMorphism& u) const;

  std::size_t generator_count() const { return count_; }
  std::size_t index(std::size_t slot, Index u, std::span<const Index> elements) const;
  std::size_t index(std::size_t slot, Index u, std::initializer_list<Index> elements) const {
    return index(slot, u, std::span<const Index>(elements.begin(), elements.size()));
  }
  Generator decode(std::size_t g) const;
  /// "(m1,n1)(m2,n2)|<u>|x|y".
  std::string label(std::size_t g) const;

  void relate(std::size_t g, std::size_t h);
  std::size_t relation_count() const { return relations_.size(); }

  /// Quotients by the relations. With a seed, generators and relations are
  /// fed to the closure in a shuffled order; the classes and their least
  /// representatives do not depend on it.
  void close(std::optional<std::uint64_t> shuffle_seed = std::nullopt);
  bool closed() const { return closed_; }

  const FinCarrier& classes() const;
  Index class_of(std::size_t g) const;
  std::size_t representative(Index c) const;
  /// Class members as sorted label lists, in class order.
  std::vector<std::vector<std::string>> partition() const;

 private:
  void require_closed() const;

  JObject at_;
  std::vector<Slot> slots_;
  std::map<std::vector<JObject>, std::size_t> slot_index_;
  std::vector<std::map<JMorphism, Index>> hom_index_;
  std::size_t count_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> relations_;
  bool closed_ = false;
  FinCarrier classes_;
  std::vector<Index> class_of_;
  std::vector<std::size_t> representative_;
};

enum class IndexKind {
  /// All morphisms of J: Day convolution of J-functors.
  J,
  /// Permutation pairs only, A (x) B equal to the target: Day convolution
  /// over Sigma x Sigma.
  Sigma2,
};

struct DayOptions {
  IndexKind kind = IndexKind::J;
  std::optional<std::uint64_t> shuffle_seed;
};

/// Generators (A, B, u: A (x) B -> at, x in X(A), y in Y(B)) modulo
/// (A', B', u', X(f)x, Y(g)y) ~ (A, B, u' o (f (x) g), x, y) for every pair
/// of index morphisms f: A -> A', g: B -> B'. Returned closed.
CoendPresentation day_presentation(const DiagramView& X, const DiagramView& Y, JObject at,
                                   const DayOptions& options = {});

/// (X (*) Y)(at). Throws std::out_of_range if `at` lies outside either window.
CoendPresentation day_convolve(const JFunctor& X, const JFunctor& Y, JObject at,
                               std::optional<std::uint64_t> shuffle_seed = std::nullopt);
/// X (*) Y on a window inside both windows, acting by postcomposition.
JFunctor day_functor(const JFunctor& X, const JFunctor& Y, Window w);

/// Hom_J((0,0), -): n! elements at (n, n), empty elsewhere. Elements are
/// labelled by their morphisms.
JFunctor unit_object(Window w);
/// The point on every object receiving a morphism from `a`, empty elsewhere.
JFunctor point_support(Window w, JObject a);

/// A map out of coend classes induced from generators, certified well
/// defined (every member of a class has the same image) and bijective.
struct InducedMap {
  FinMap map;
  Report report;
};

/// Map of classes through their least representatives, with every member of
/// every class checked against it.
InducedMap induced_map(const CoendPresentation& P, const FinCarrier& dst,
                       const std::function<Index(std::size_t)>& image, std::string name);

/// (1 (*) Y)(at) -> Y(at), (A, B, u, s, y) |-> Y(u o (s (x) id_B))(y).
InducedMap left_unitor(const JFunctor& Y, JObject at);
/// (X (*) 1)(at) -> X(at), (A, B, u, x, s) |-> X(u o (id_A (x) s))(x).
InducedMap right_unitor(const JFunctor& X, JObject at);
/// (X (*) Y)(at) -> (Y (*) X)(at), (A, B, u, x, y) |-> (B, A, u o sigma_{B,A}, y, x).
InducedMap braiding(const JFunctor& X, const JFunctor& Y, JObject at);

/// Restriction along the inclusion of permutation pairs.
BisymSeq j_star(const JFunctor& X);
/// Left Kan extension along the same inclusion:
/// (j_! Y)(C) = generators (A, u: A -> C, y) modulo (u, (a,b) y) ~ (u o (a,b), y).
JFunctor j_shriek(const BisymSeq& Y);

/// Day convolution of bisymmetric sequences at one object.
CoendPresentation bisym_day(const BisymSeq& X, const BisymSeq& Y, JObject at,
                            std::optional<std::uint64_t> shuffle_seed = std::nullopt);
/// ... on a whole window, with Sigma_m x Sigma_n acting by postcomposition.
BisymSeq bisym_day_sequence(const BisymSeq& X, const BisymSeq& Y, Window w);

/// Sym(T) = (1, T, T^2, ...) as a bisymmetric sequence: level i is T^i
/// evaluated in degree i, a Sigma_i-torsor. Every element has a normal form
/// in Sigma_i; (a, b) acts by w |-> b o w o a^-1 and multiplication
/// concatenates normal forms.
struct SymTMonoid {
  std::vector<GroupAction> levels;
  std::vector<std::vector<Permutation>> normal_forms;
  /// Certifies that normal forms are well defined on classes, bijective and
  /// compatible with the action computed by the coend.
  Report construction{"Sym(T) normal forms"};

  std::size_t top() const { return levels.empty() ? 0 : levels.size() - 1; }
  Index element(const Permutation& w) const;
  Index multiply(std::size_t i, Index x, std::size_t j, Index y) const;
};

/// Levels 0..top, each computed as T^(i-1) (*) T over Sigma.
SymTMonoid sym_T(std::size_t top);
/// Unit, associativity, commutativity through the symmetry, and
/// equivariance of the multiplication, on every element.
Report validate_sym_T(const SymTMonoid& R);
/// j^*(1) against Sym(T) on levels <= top: empty off the diagonal, and
/// s |-> alpha(s) is an equivariant bijection commuting with multiplication.
Report compare_unit_sym_T(std::size_t top);

/// M (x)_{Sym(T)} N at (i, n): Sigma x Sigma Day generators further
/// identified by (A (x) P, B, u, x.s, y) ~ (A, P (x) B, u, x, s.y) for
/// P = (p, p), p >= 1, s in Hom((0,0), P).
CoendPresentation module_smash(const TDatum& M, const TDatum& N, JObject at,
                               std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// The map module_smash(E X, E Y) -> (X (*) Y) at `at` sending a generator
/// to itself with its permutation pair as index morphism, E being
/// functor_to_tdatum.
InducedMap compare_monoidal(const JFunctor& X, const JFunctor& Y, JObject at);

}  // namespace jspec
