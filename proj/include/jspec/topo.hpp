#pragma once

// Connected components of a truncated J.

#include <map>
#include <string>

#include "jspec/diagrams.hpp"

namespace jspec {

/// Component of every object of the window in the graph with an edge a - b
/// whenever Hom(a, b) or Hom(b, a) is non-empty. Each component is named by
/// the value of n - m on its objects; throws std::logic_error if a component
/// does not carry a single such value.
std::map<JObject, long> components(Window w);

/// Two objects are connected exactly when n - m agrees, for every pair in the
/// window; hom existence is taken from enumeration, not the closed form.
Report component_invariant_check(Window w);

/// Objects as nodes filled by component, an edge a -> b labelled |Hom(a, b)|
/// for every a != b with a morphism.
std::string components_dot(Window w);

}  // namespace jspec
