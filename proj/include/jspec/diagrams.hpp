#pragma once

// Truncated diagram containers and their validators.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jspec/basecat.hpp"
#include "jspec/jcat.hpp"

namespace jspec {

/// The full subcategory of J on objects (m, n) with m <= M and n <= N.
struct Window {
  std::size_t M = 0;
  std::size_t N = 0;

  bool contains(JObject a) const { return a.m <= M && a.n <= N; }
  bool contains(const JMorphism& f) const { return contains(f.src()) && contains(f.dst()); }
  bool covers(const Window& w) const { return w.M <= M && w.N <= N; }
  /// Objects in (m, n) lexicographic order.
  std::vector<JObject> objects() const;
  /// Every morphism between objects of the window, grouped by (src, dst).
  std::vector<JMorphism> morphisms() const;
  std::string str() const;

  friend bool operator==(const Window&, const Window&) = default;
};

/// Outcome of a verification. Violations are listed smallest witness first.
struct Report {
  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  std::string check;
  std::vector<std::string> violations;
  std::size_t cases = 0;

  bool passed() const { return violations.empty(); }
  void fail(std::string what);
  void merge(const Report& other);
};

/// Level d carries a Sigma_d action, stored as the left factor of degree (d, 0).
struct SymSeq {
  std::vector<GroupAction> levels;

  std::size_t top() const { return levels.empty() ? 0 : levels.size() - 1; }
  const FinCarrier& at(std::size_t d) const { return levels.at(d).carrier(); }
};

/// A Sigma_i x Sigma_n-set at every object of a window.
struct BisymSeq {
  Window window;
  std::map<JObject, GroupAction> levels;

  const FinCarrier& at(JObject a) const { return levels.at(a).carrier(); }
  const GroupAction& action(JObject a) const { return levels.at(a); }
};

/// Unfolded symmetric T-spectrum: bisymmetric carriers with shift maps
/// X_{i,n} -> X_{i+1,n+1} wherever both ends lie in the window.
/// Construction checks shapes only; validate_tdatum certifies the conditions.
class TDatum {
 public:
  TDatum() = default;
  TDatum(Window window, std::map<JObject, GroupAction> actions, std::map<JObject, FinMap> shifts);

  const Window& window() const { return window_; }
  const FinCarrier& at(JObject a) const { return actions_.at(a).carrier(); }
  const GroupAction& action(JObject a) const { return actions_.at(a); }
  const std::map<JObject, GroupAction>& actions() const { return actions_; }
  const std::map<JObject, FinMap>& shifts() const { return shifts_; }
  bool has_shift(JObject a) const { return window_.contains(JObject{a.m + 1, a.n + 1}) && window_.contains(a); }
  const FinMap& shift(JObject a) const { return shifts_.at(a); }

  /// Phi_{i,n,p} = phi_{i+p-1,n+p-1} o ... o phi_{i,n}.
  FinMap iterate(JObject a, std::size_t p) const;
  BisymSeq bisymmetric() const { return {window_, actions_}; }

  /// Copy with one shift replaced; shapes are re-checked.
  TDatum with_shift(JObject a, FinMap shift) const;

  friend bool operator==(const TDatum&, const TDatum&) = default;

 private:
  Window window_;
  std::map<JObject, GroupAction> actions_;
  std::map<JObject, FinMap> shifts_;
};

/// A functor from a window of J to finite sets. Edge maps are either stored
/// explicitly for every morphism of the window, or computed on demand.
class JFunctor {
 public:
  using EdgeFn = std::function<Table(const JMorphism&)>;

  JFunctor() = default;
  static JFunctor explicit_edges(Window window, std::map<JObject, FinCarrier> carriers,
                                 std::map<JMorphism, Table> edges);
  static JFunctor computed(Window window, std::map<JObject, FinCarrier> carriers, EdgeFn edges);

  const Window& window() const { return window_; }
  const FinCarrier& at(JObject a) const;
  const std::map<JObject, FinCarrier>& carriers() const { return carriers_; }
  /// Throws std::out_of_range for a morphism outside the window.
  FinMap on(const JMorphism& f) const;
  Table table(const JMorphism& f) const;
  bool is_explicit() const { return !compute_; }

  /// Copy with every edge map stored explicitly.
  JFunctor materialize() const;
  /// Copy of an explicit functor with one edge table replaced.
  JFunctor with_edge(const JMorphism& f, Table table) const;

 private:
  Window window_;
  std::map<JObject, FinCarrier> carriers_;
  std::map<JMorphism, Table> edges_;
  EdgeFn compute_;
};

/// On-the-nose equality on every object and morphism of the window.
bool same_functor(const JFunctor& a, const JFunctor& b);
/// F on a smaller window; edges are looked up in F.
JFunctor restrict(const JFunctor& F, Window w);

/// A natural transformation between T-data: equivariant components
/// commuting with the shifts.
struct DatumMap {
  std::map<JObject, FinMap> components;
};

Report validate_functor(const JFunctor& F);
Report validate_tdatum(const TDatum& D);
Report validate_datum_map(const TDatum& src, const TDatum& dst, const DatumMap& h);

}  // namespace jspec
