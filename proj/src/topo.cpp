#include "jspec/topo.hpp"

#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jspec {

namespace {

// Breadth-first search; ids are discovery order of the first object reached.
std::map<JObject, std::size_t> raw_components(const std::vector<JObject>& objects,
                                              const std::function<bool(JObject, JObject)>& edge) {
  std::map<JObject, std::size_t> id;
  std::size_t next = 0;
  for (JObject start : objects) {
    if (id.contains(start)) continue;
    std::queue<JObject> todo;
    todo.push(start);
    id[start] = next;
    while (!todo.empty()) {
      const JObject a = todo.front();
      todo.pop();
      for (JObject b : objects) {
        if (id.contains(b) || !(edge(a, b) || edge(b, a))) continue;
        id[b] = next;
        todo.push(b);
      }
    }
    ++next;
  }
  return id;
}

}  // namespace

std::map<JObject, long> components(Window w) {
  const auto raw = raw_components(w.objects(), hom_exists);
  std::map<std::size_t, long> name;
  std::map<JObject, long> out;
  for (const auto& [a, c] : raw) {
    const auto [it, fresh] = name.emplace(c, a.difference());
    if (!fresh && it->second != a.difference()) {
      throw std::logic_error("component of " + a.str() + " mixes n - m values");
    }
  }
  std::set<long> seen;
  for (const auto& [c, d] : name) {
    if (!seen.insert(d).second) throw std::logic_error("two components share n - m = " + std::to_string(d));
  }
  for (const auto& [a, c] : raw) out.emplace(a, name.at(c));
  return out;
}

Report component_invariant_check(Window w) {
  Report report("components of " + w.str() + " are classified by n - m");
  const std::vector<JObject> objects = w.objects();
  for (JObject a : objects) {
    for (JObject b : objects) {
      ++report.cases;
      const bool enumerated = !enumerate_hom(a, b).empty();
      if (enumerated != hom_exists(a, b)) {
        report.fail("hom existence " + a.str() + " -> " + b.str() + " disagrees with enumeration");
      }
      if (enumerated && a.difference() != b.difference()) {
        report.fail("morphism " + a.str() + " -> " + b.str() + " joins distinct n - m");
      }
    }
  }
  const auto raw = raw_components(objects, [](JObject a, JObject b) { return !enumerate_hom(a, b).empty(); });
  for (JObject a : objects) {
    for (JObject b : objects) {
      if (!(a < b)) continue;
      const bool connected = raw.at(a) == raw.at(b);
      if (connected != (a.difference() == b.difference())) {
        report.fail(a.str() + " and " + b.str() + (connected ? " are connected" : " are not connected") +
                    " but n - m is " + std::to_string(a.difference()) + " vs " + std::to_string(b.difference()));
      }
    }
  }
  std::set<std::size_t> ids;
  for (const auto& [a, c] : raw) ids.insert(c);
  const std::size_t expect = w.M + w.N + 1;
  if (ids.size() != expect) {
    report.fail(std::to_string(ids.size()) + " components, expected " + std::to_string(expect));
  }
  return report;
}

std::string components_dot(Window w) {
  static constexpr const char* palette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                            "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  const auto comp = components(w);
  std::ostringstream out;
  out << "digraph J {\n  node [style=filled];\n";
  for (const auto& [a, d] : comp) {
    const auto slot = static_cast<std::size_t>(d + static_cast<long>(w.M)) % std::size(palette);
    out << "  \"" << a.str() << "\" [fillcolor=\"" << palette[slot] << "\", component=" << d << "];\n";
  }
  for (JObject a : w.objects()) {
    for (JObject b : w.objects()) {
      if (a == b || !hom_exists(a, b)) continue;
      out << "  \"" << a.str() << "\" -> \"" << b.str() << "\" [label=\"" << count_hom(a, b) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace jspec
