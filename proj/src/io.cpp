#include "jspec/io.hpp"

#include <set>

namespace jspec {

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string child(const std::string& path, std::size_t k) { return path + "[" + std::to_string(k) + "]"; }

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  return j;
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

const Json& field(const Json& j, std::string_view key, const std::string& path) {
  require_object(j, path);
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(path, key), "missing field");
  return *it;
}

std::size_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

/// 1-based positive integers to 0-based storage.
std::vector<Index> ordinal_list(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Index> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::size_t v = natural(j[k], child(path, k));
    if (v == 0) throw SchemaError(child(path, k), "ordinal elements start at 1");
    out.push_back(static_cast<Index>(v - 1));
  }
  return out;
}

Json ordinals(const std::vector<Index>& values) {
  Json out = Json::array();
  for (Index v : values) out.push_back(v + 1);
  return out;
}

Json pair(std::size_t a, std::size_t b) { return Json::array({a, b}); }

/// Runs `make`, turning construction errors into schema errors at `path`.
template <class F>
auto guarded(const std::string& path, F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  } catch (const std::out_of_range& e) {
    throw SchemaError(path, e.what());
  }
}

Window window_from_json(const Json& j, const std::string& path) {
  const JObject a = object_from_json(j, path);
  return Window{a.m, a.n};
}

void require_schema(const Json& j, std::string_view expected, const std::string& path) {
  const Json& s = field(j, "schema", path);
  if (text(s, child(path, "schema")) != expected) {
    throw SchemaError(child(path, "schema"), "expected \"" + std::string(expected) + "\"");
  }
}

Table table_from_json(const Json& j, const FinCarrier& c, const std::string& path) {
  return map_from_json(j, c, c, path).table();
}

Json table_json(const FinCarrier& c, const Table& t) { return to_json(FinMap(c, c, t)); }

}  // namespace

Json parse_json(const std::string& source) {
  struct Frame {
    bool object = false;
    std::set<std::string> keys;
    std::string key;
    std::size_t count = 0;
  };
  std::vector<Frame> stack;
  auto path = [&](std::size_t depth) {
    std::string out = "$";
    for (std::size_t k = 0; k < depth; ++k) {
      out += stack[k].object ? "." + stack[k].key : "[" + std::to_string(stack[k].count) + "]";
    }
    return out;
  };
  auto complete = [&] {
    if (!stack.empty() && !stack.back().object) ++stack.back().count;
  };
  using Event = Json::parse_event_t;
  auto callback = [&](int, Event event, Json& parsed) {
    switch (event) {
      case Event::object_start: stack.push_back({true, {}, {}, 0}); break;
      case Event::array_start: stack.push_back({false, {}, {}, 0}); break;
      case Event::key: {
        const std::string key = parsed.get<std::string>();
        if (!stack.back().keys.insert(key).second) {
          throw SchemaError(path(stack.size() - 1) + "." + key, "duplicate key");
        }
        stack.back().key = key;
        break;
      }
      case Event::value: complete(); break;
      case Event::object_end:
      case Event::array_end:
        stack.pop_back();
        complete();
        break;
    }
    return true;
  };
  try {
    return Json::parse(source, callback);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string schema_of(const Json& j) {
  if (!j.is_object()) return "";
  const auto it = j.find("schema");
  return it != j.end() && it->is_string() ? it->get<std::string>() : "";
}

Json to_json(const Injection& f) {
  return {{"dom", f.domain_size()}, {"cod", f.codomain_size()}, {"img", ordinals(f.images())}};
}

Json to_json(const Permutation& s) { return {{"deg", s.degree()}, {"img", ordinals(s.images())}}; }

Json to_json(const PartialBijection& a) {
  return {{"src", ordinals(a.sources())}, {"tgt", ordinals(a.targets())}, {"img", ordinals(a.images())}};
}

Json to_json(JObject a) { return pair(a.m, a.n); }

Json to_json(const JMorphism& f) {
  return {{"src", to_json(f.src())},
          {"dst", to_json(f.dst())},
          {"phi", ordinals(f.phi().images())},
          {"psi", ordinals(f.psi().images())},
          {"alpha", ordinals(f.alpha().images())}};
}

Json to_json(const FinCarrier& c) { return c.labels(); }

Json to_json(const FinMap& f) {
  Json out = Json::object();
  for (Index j = 0; j < f.src().size(); ++j) out[f.src().label(j)] = f.dst().label(f(j));
  return out;
}

Json to_json(const Report& r) {
  return {{"check", r.check}, {"passed", r.passed()}, {"cases", r.cases}, {"violations", r.violations}};
}

Json to_json(const JFunctor& F) {
  Json objects = Json::array();
  for (const auto& [a, c] : F.carriers()) objects.push_back({{"at", to_json(a)}, {"carrier", to_json(c)}});
  Json edges = Json::array();
  for (const JMorphism& f : F.window().morphisms()) {
    edges.push_back({{"morphism", to_json(f)}, {"map", to_json(F.on(f))}});
  }
  return {{"schema", "jfunctor.v1"},
          {"window", pair(F.window().M, F.window().N)},
          {"objects", std::move(objects)},
          {"edges", std::move(edges)}};
}

Json to_json(const TDatum& D) {
  Json objects = Json::array();
  for (const auto& [a, act] : D.actions()) {
    Json left = Json::array(), right = Json::array();
    for (const Table& t : act.left_generators()) left.push_back(table_json(act.carrier(), t));
    for (const Table& t : act.right_generators()) right.push_back(table_json(act.carrier(), t));
    objects.push_back({{"at", to_json(a)},
                       {"carrier", to_json(act.carrier())},
                       {"left", std::move(left)},
                       {"right", std::move(right)}});
  }
  Json shifts = Json::array();
  for (const auto& [a, phi] : D.shifts()) shifts.push_back({{"at", to_json(a)}, {"map", to_json(phi)}});
  return {{"schema", "tdatum.v1"},
          {"window", pair(D.window().M, D.window().N)},
          {"objects", std::move(objects)},
          {"shifts", std::move(shifts)}};
}

Json to_json(const SymSpectrum& S) {
  Json levels = Json::array();
  for (const GroupAction& act : S.levels) {
    Json gens = Json::array();
    for (const Table& t : act.left_generators()) gens.push_back(table_json(act.carrier(), t));
    levels.push_back({{"carrier", to_json(act.carrier())}, {"generators", std::move(gens)}});
  }
  Json bondings = Json::array();
  for (const FinMap& b : S.bondings) bondings.push_back(to_json(b));
  return {{"schema", "spectrum.v1"},
          {"K", to_json(S.K)},
          {"levels", std::move(levels)},
          {"bondings", std::move(bondings)}};
}

Json to_json(const CoendPresentation& P, bool members) {
  Json classes = Json::array();
  const auto parts = P.partition();
  for (Index c = 0; c < P.classes().size(); ++c) {
    Json entry = {{"representative", P.classes().label(c)}, {"size", parts[c].size()}};
    if (members) entry["members"] = parts[c];
    classes.push_back(std::move(entry));
  }
  return {{"schema", "coend.v1"},
          {"at", to_json(P.at())},
          {"generators", P.generator_count()},
          {"relations", P.relation_count()},
          {"classes", std::move(classes)}};
}

Injection injection_from_json(const Json& j, const std::string& path) {
  const std::size_t dom = natural(field(j, "dom", path), child(path, "dom"));
  const std::size_t cod = natural(field(j, "cod", path), child(path, "cod"));
  std::vector<Index> img = ordinal_list(field(j, "img", path), child(path, "img"));
  if (img.size() != dom) throw SchemaError(child(path, "img"), "expected " + std::to_string(dom) + " entries");
  return guarded(path, [&] { return Injection(cod, std::move(img)); });
}

Permutation permutation_from_json(const Json& j, const std::string& path) {
  const std::size_t deg = natural(field(j, "deg", path), child(path, "deg"));
  std::vector<Index> img = ordinal_list(field(j, "img", path), child(path, "img"));
  if (img.size() != deg) throw SchemaError(child(path, "img"), "expected " + std::to_string(deg) + " entries");
  return guarded(path, [&] { return Permutation(std::move(img)); });
}

PartialBijection partial_bijection_from_json(const Json& j, const std::string& path) {
  auto src = ordinal_list(field(j, "src", path), child(path, "src"));
  auto tgt = ordinal_list(field(j, "tgt", path), child(path, "tgt"));
  auto img = ordinal_list(field(j, "img", path), child(path, "img"));
  return guarded(path, [&] { return PartialBijection(std::move(src), std::move(tgt), std::move(img)); });
}

JObject object_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  if (j.size() != 2) throw SchemaError(path, "expected a pair [m, n]");
  return JObject{natural(j[0], child(path, 0)), natural(j[1], child(path, 1))};
}

JMorphism morphism_from_json(const Json& j, const std::string& path) {
  const JObject src = object_from_json(field(j, "src", path), child(path, "src"));
  const JObject dst = object_from_json(field(j, "dst", path), child(path, "dst"));
  auto phi = ordinal_list(field(j, "phi", path), child(path, "phi"));
  auto psi = ordinal_list(field(j, "psi", path), child(path, "psi"));
  auto alpha = ordinal_list(field(j, "alpha", path), child(path, "alpha"));
  return guarded(path, [&] {
    return JMorphism::from_tables(src, dst, std::move(phi), std::move(psi), std::move(alpha));
  });
}

FinCarrier carrier_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string l = text(j[k], child(path, k));
    if (!seen.insert(l).second) throw SchemaError(child(path, k), "duplicate label \"" + l + "\"");
    labels.push_back(std::move(l));
  }
  return FinCarrier(std::move(labels));
}

FinMap map_from_json(const Json& j, const FinCarrier& src, const FinCarrier& dst, const std::string& path) {
  require_object(j, path);
  std::vector<Index> table(src.size());
  for (const auto& [key, value] : j.items()) {
    if (!src.contains(key)) throw SchemaError(child(path, key), "not an element of the source");
  }
  for (Index e = 0; e < src.size(); ++e) {
    const std::string& key = src.label(e);
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(child(path, key), "missing image");
    const std::string image = text(*it, child(path, key));
    if (!dst.contains(image)) throw SchemaError(child(path, key), "\"" + image + "\" is not an element of the target");
    table[e] = dst.index_of(image);
  }
  return FinMap(src, dst, std::move(table));
}

JFunctor jfunctor_from_json(const Json& j, const std::string& path) {
  require_schema(j, "jfunctor.v1", path);
  const Window w = window_from_json(field(j, "window", path), child(path, "window"));
  std::map<JObject, FinCarrier> carriers;
  const std::string opath = child(path, "objects");
  const Json& objects = require_array(field(j, "objects", path), opath);
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const std::string p = child(opath, k);
    const JObject a = object_from_json(field(objects[k], "at", p), child(p, "at"));
    if (!w.contains(a)) throw SchemaError(child(p, "at"), a.str() + " lies outside the window");
    if (carriers.contains(a)) throw SchemaError(child(p, "at"), "duplicate object " + a.str());
    carriers.emplace(a, carrier_from_json(field(objects[k], "carrier", p), child(p, "carrier")));
  }
  for (JObject a : w.objects()) {
    if (!carriers.contains(a)) throw SchemaError(opath, "missing object " + a.str());
  }
  std::map<JMorphism, Table> edges;
  const std::string epath = child(path, "edges");
  const Json& list = require_array(field(j, "edges", path), epath);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string p = child(epath, k);
    const JMorphism f = morphism_from_json(field(list[k], "morphism", p), child(p, "morphism"));
    if (!w.contains(f)) throw SchemaError(child(p, "morphism"), "morphism lies outside the window");
    if (edges.contains(f)) throw SchemaError(child(p, "morphism"), "duplicate morphism " + f.label());
    edges.emplace(f, map_from_json(field(list[k], "map", p), carriers.at(f.src()), carriers.at(f.dst()),
                                   child(p, "map"))
                         .table());
  }
  for (const JMorphism& f : w.morphisms()) {
    if (edges.contains(f)) continue;
    if (!f.is_identity()) throw SchemaError(epath, "missing edge for " + f.label() + " " + f.src().str() + " -> " + f.dst().str());
    edges.emplace(f, FinMap::identity(carriers.at(f.src())).table());
  }
  return guarded(path, [&] { return JFunctor::explicit_edges(w, std::move(carriers), std::move(edges)); });
}

TDatum tdatum_from_json(const Json& j, const std::string& path) {
  require_schema(j, "tdatum.v1", path);
  const Window w = window_from_json(field(j, "window", path), child(path, "window"));
  std::map<JObject, GroupAction> actions;
  const std::string opath = child(path, "objects");
  const Json& objects = require_array(field(j, "objects", path), opath);
  for (std::size_t k = 0; k < objects.size(); ++k) {
    const std::string p = child(opath, k);
    const JObject a = object_from_json(field(objects[k], "at", p), child(p, "at"));
    if (!w.contains(a)) throw SchemaError(child(p, "at"), a.str() + " lies outside the window");
    if (actions.contains(a)) throw SchemaError(child(p, "at"), "duplicate object " + a.str());
    const FinCarrier c = carrier_from_json(field(objects[k], "carrier", p), child(p, "carrier"));
    auto generators = [&](std::string_view side, std::size_t expected) {
      const std::string gp = child(p, side);
      const Json& g = require_array(field(objects[k], side, p), gp);
      if (g.size() != expected) throw SchemaError(gp, "expected " + std::to_string(expected) + " generators");
      std::vector<Table> out;
      for (std::size_t s = 0; s < g.size(); ++s) out.push_back(table_from_json(g[s], c, child(gp, s)));
      return out;
    };
    auto left = generators("left", a.m > 0 ? a.m - 1 : 0);
    auto right = generators("right", a.n > 0 ? a.n - 1 : 0);
    actions.emplace(a, guarded(p, [&] { return GroupAction(c, a.m, a.n, std::move(left), std::move(right)); }));
  }
  for (JObject a : w.objects()) {
    if (!actions.contains(a)) throw SchemaError(opath, "missing object " + a.str());
  }
  std::map<JObject, FinMap> shifts;
  const std::string spath = child(path, "shifts");
  const Json& list = require_array(field(j, "shifts", path), spath);
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string p = child(spath, k);
    const JObject a = object_from_json(field(list[k], "at", p), child(p, "at"));
    const JObject b{a.m + 1, a.n + 1};
    if (!w.contains(a) || !w.contains(b)) throw SchemaError(child(p, "at"), "no shift from " + a.str() + " in the window");
    if (shifts.contains(a)) throw SchemaError(child(p, "at"), "duplicate shift at " + a.str());
    shifts.emplace(a, map_from_json(field(list[k], "map", p), actions.at(a).carrier(), actions.at(b).carrier(),
                                    child(p, "map")));
  }
  for (JObject a : w.objects()) {
    if (w.contains(JObject{a.m + 1, a.n + 1}) && !shifts.contains(a)) {
      throw SchemaError(spath, "missing shift at " + a.str());
    }
  }
  return guarded(path, [&] { return TDatum(w, std::move(actions), std::move(shifts)); });
}

SymSpectrum spectrum_from_json(const Json& j, const std::string& path) {
  require_schema(j, "spectrum.v1", path);
  SymSpectrum S;
  S.K = carrier_from_json(field(j, "K", path), child(path, "K"));
  const std::string lpath = child(path, "levels");
  const Json& levels = require_array(field(j, "levels", path), lpath);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string p = child(lpath, i);
    const FinCarrier c = carrier_from_json(field(levels[i], "carrier", p), child(p, "carrier"));
    const std::string gp = child(p, "generators");
    const Json& g = require_array(field(levels[i], "generators", p), gp);
    if (g.size() != (i > 0 ? i - 1 : 0)) throw SchemaError(gp, "expected " + std::to_string(i > 0 ? i - 1 : 0) + " generators");
    std::vector<Table> gens;
    for (std::size_t s = 0; s < g.size(); ++s) gens.push_back(table_from_json(g[s], c, child(gp, s)));
    S.levels.push_back(guarded(p, [&] { return GroupAction(c, i, 0, std::move(gens), {}); }));
  }
  const std::string bpath = child(path, "bondings");
  const Json& bondings = require_array(field(j, "bondings", path), bpath);
  if (bondings.size() + 1 != std::max<std::size_t>(S.levels.size(), 1)) {
    throw SchemaError(bpath, "expected one bonding between consecutive levels");
  }
  for (std::size_t i = 0; i < bondings.size(); ++i) {
    const FinCarrier src = product(S.at(i), S.K).carrier;
    S.bondings.push_back(map_from_json(bondings[i], src, S.at(i + 1), child(bpath, i)));
  }
  return S;
}

}  // namespace jspec
