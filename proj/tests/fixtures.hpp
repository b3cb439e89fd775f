#pragma once

// Small hand-built diagrams used across suites.

#include "jspec/diagrams.hpp"
#include "jspec/equivalence.hpp"

namespace fixture {

using namespace jspec;

/// The constant functor with value a single point.
inline JFunctor point_functor(Window w) {
  std::map<JObject, FinCarrier> carriers;
  for (JObject a : w.objects()) carriers.emplace(a, FinCarrier::point());
  std::map<JMorphism, Table> edges;
  for (auto& f : w.morphisms()) edges.emplace(std::move(f), Table{0});
  return JFunctor::explicit_edges(w, std::move(carriers), std::move(edges));
}

inline TDatum point_datum(Window w) {
  std::map<JObject, GroupAction> actions;
  std::map<JObject, FinMap> shifts;
  for (JObject a : w.objects()) actions.emplace(a, GroupAction::trivial(FinCarrier::point(), a.m, a.n));
  for (JObject a : w.objects()) {
    if (w.contains(JObject{a.m + 1, a.n + 1})) {
      shifts.emplace(a, FinMap(FinCarrier::point(), FinCarrier::point(), {0}));
    }
  }
  return TDatum(w, std::move(actions), std::move(shifts));
}

/// X_{0,0} = X_{1,1} = pt, X_{2,2} = {a, b} with (s, id) swapping a and b,
/// every other carrier empty, and Phi_{0,0,2} picking a. Equivariant, but
/// iota_{0,0,2}(swap) = (s, s) moves a to b.
inline TDatum sigma2_counterexample() {
  const Window w{2, 2};
  std::map<JObject, GroupAction> actions;
  std::map<JObject, FinMap> shifts;
  const FinCarrier ab(std::vector<std::string>{"a", "b"});
  for (JObject o : w.objects()) {
    if (o == JObject{0, 0} || o == JObject{1, 1}) {
      actions.emplace(o, GroupAction::trivial(FinCarrier::point(), o.m, o.n));
    } else if (o == JObject{2, 2}) {
      actions.emplace(o, GroupAction(ab, 2, 2, {{1, 0}}, {{0, 1}}));
    } else {
      actions.emplace(o, GroupAction::trivial(FinCarrier{}, o.m, o.n));
    }
  }
  for (JObject o : w.objects()) {
    const JObject up{o.m + 1, o.n + 1};
    if (!w.contains(up)) continue;
    const FinCarrier& src = actions.at(o).carrier();
    const FinCarrier& dst = actions.at(up).carrier();
    shifts.emplace(o, FinMap(src, dst, Table(src.size(), 0)));
  }
  return TDatum(w, std::move(actions), std::move(shifts));
}

/// Functor built from a datum by canonical decomposition without any
/// validity check; functorial exactly when the datum is valid.
inline JFunctor unchecked_functor(const TDatum& D) {
  std::map<JObject, FinCarrier> carriers;
  for (const auto& [a, act] : D.actions()) carriers.emplace(a, act.carrier());
  return JFunctor::computed(D.window(), carriers, [D](const JMorphism& f) {
    return apply_decomposition(D, f.src(), decompose(f));
  });
}

/// First violation of a report, or "" when it passed.
inline std::string first(const Report& r) { return r.passed() ? std::string() : r.violations.front(); }

}  // namespace fixture
