#include "jspec/diagrams.hpp"

#include <stdexcept>

namespace jspec {

namespace {

constexpr std::size_t kMaxListedViolations = 25;

std::string describe(const JMorphism& f) {
  return f.label() + ":" + f.src().str() + "->" + f.dst().str();
}

Table compose_tables(const Table& second, const Table& first) {
  Table out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[first[x]];
  return out;
}

}  // namespace

std::vector<JObject> Window::objects() const {
  std::vector<JObject> out;
  for (std::size_t m = 0; m <= M; ++m) {
    for (std::size_t n = 0; n <= N; ++n) out.push_back({m, n});
  }
  return out;
}

std::vector<JMorphism> Window::morphisms() const {
  std::vector<JMorphism> out;
  const auto objs = objects();
  for (JObject a : objs) {
    for (JObject b : objs) {
      if (!hom_exists(a, b)) continue;
      auto homs = enumerate_hom(a, b);
      out.insert(out.end(), std::make_move_iterator(homs.begin()), std::make_move_iterator(homs.end()));
    }
  }
  return out;
}

std::string Window::str() const { return std::to_string(M) + "," + std::to_string(N); }

void Report::fail(std::string what) {
  if (violations.size() < kMaxListedViolations) violations.push_back(std::move(what));
}

void Report::merge(const Report& other) {
  cases += other.cases;
  for (const auto& v : other.violations) fail(v);
}

TDatum::TDatum(Window window, std::map<JObject, GroupAction> actions, std::map<JObject, FinMap> shifts)
    : window_(window), actions_(std::move(actions)), shifts_(std::move(shifts)) {
  for (JObject a : window_.objects()) {
    auto it = actions_.find(a);
    if (it == actions_.end()) throw std::invalid_argument("tdatum: no carrier at " + a.str());
    if (it->second.left_degree() != a.m || it->second.right_degree() != a.n) {
      throw std::invalid_argument("tdatum: action at " + a.str() + " has the wrong degrees");
    }
    if (has_shift(a)) {
      auto s = shifts_.find(a);
      if (s == shifts_.end()) throw std::invalid_argument("tdatum: missing shift at " + a.str());
      const JObject b{a.m + 1, a.n + 1};
      if (!(s->second.src() == at(a)) || !(s->second.dst() == at(b))) {
        throw std::invalid_argument("tdatum: shift at " + a.str() + " does not run " + a.str() +
                                    " -> " + b.str());
      }
    }
  }
  if (actions_.size() != window_.objects().size()) {
    throw std::invalid_argument("tdatum: carrier outside the window");
  }
  for (const auto& [a, s] : shifts_) {
    if (!has_shift(a)) throw std::invalid_argument("tdatum: shift at " + a.str() + " leaves the window");
  }
}

FinMap TDatum::iterate(JObject a, std::size_t p) const {
  FinMap out = FinMap::identity(at(a));
  for (std::size_t t = 0; t < p; ++t) out = compose(shift({a.m + t, a.n + t}), out);
  return out;
}

TDatum TDatum::with_shift(JObject a, FinMap shift) const {
  auto shifts = shifts_;
  shifts.at(a) = std::move(shift);
  return TDatum(window_, actions_, std::move(shifts));
}

JFunctor JFunctor::explicit_edges(Window window, std::map<JObject, FinCarrier> carriers,
                                  std::map<JMorphism, Table> edges) {
  JFunctor F;
  F.window_ = window;
  F.carriers_ = std::move(carriers);
  F.edges_ = std::move(edges);
  for (JObject a : window.objects()) {
    if (!F.carriers_.count(a)) throw std::invalid_argument("functor: no carrier at " + a.str());
  }
  if (F.carriers_.size() != window.objects().size()) {
    throw std::invalid_argument("functor: carrier outside the window");
  }
  for (const auto& f : window.morphisms()) {
    auto it = F.edges_.find(f);
    if (it == F.edges_.end()) throw std::invalid_argument("functor: no edge map for " + describe(f));
    FinMap check(F.at(f.src()), F.at(f.dst()), it->second);
  }
  for (const auto& [f, t] : F.edges_) {
    if (!window.contains(f)) throw std::invalid_argument("functor: edge " + describe(f) + " outside the window");
  }
  return F;
}

JFunctor JFunctor::computed(Window window, std::map<JObject, FinCarrier> carriers, EdgeFn edges) {
  JFunctor F;
  F.window_ = window;
  F.carriers_ = std::move(carriers);
  F.compute_ = std::move(edges);
  for (JObject a : window.objects()) {
    if (!F.carriers_.count(a)) throw std::invalid_argument("functor: no carrier at " + a.str());
  }
  return F;
}

const FinCarrier& JFunctor::at(JObject a) const {
  auto it = carriers_.find(a);
  if (it == carriers_.end()) throw std::out_of_range("functor: object " + a.str() + " outside the window");
  return it->second;
}

Table JFunctor::table(const JMorphism& f) const {
  if (!window_.contains(f)) throw std::out_of_range("functor: morphism " + describe(f) + " outside the window");
  if (compute_) return compute_(f);
  return edges_.at(f);
}

FinMap JFunctor::on(const JMorphism& f) const { return FinMap(at(f.src()), at(f.dst()), table(f)); }

JFunctor JFunctor::materialize() const {
  if (!compute_) return *this;
  std::map<JMorphism, Table> edges;
  for (auto& f : window_.morphisms()) {
    auto t = compute_(f);
    edges.emplace(std::move(f), std::move(t));
  }
  return explicit_edges(window_, carriers_, std::move(edges));
}

JFunctor JFunctor::with_edge(const JMorphism& f, Table t) const {
  JFunctor F = materialize();
  F.edges_.at(f) = std::move(t);
  return explicit_edges(F.window_, F.carriers_, std::move(F.edges_));
}

bool same_functor(const JFunctor& a, const JFunctor& b) {
  if (!(a.window() == b.window())) return false;
  for (JObject o : a.window().objects()) {
    if (!(a.at(o) == b.at(o))) return false;
  }
  for (const auto& f : a.window().morphisms()) {
    if (a.table(f) != b.table(f)) return false;
  }
  return true;
}

JFunctor restrict(const JFunctor& F, Window w) {
  if (!F.window().covers(w)) {
    throw std::out_of_range("restrict: window " + w.str() + " is not inside " + F.window().str());
  }
  std::map<JObject, FinCarrier> carriers;
  for (JObject a : w.objects()) carriers.emplace(a, F.at(a));
  return JFunctor::computed(w, std::move(carriers), [F](const JMorphism& f) { return F.table(f); });
}

Report validate_functor(const JFunctor& F) {
  Report r{"functor"};
  const Window w = F.window();
  const auto objs = w.objects();
  std::map<std::pair<JObject, JObject>, std::vector<std::pair<JMorphism, Table>>> homs;
  std::map<JMorphism, Table> tables;
  for (JObject a : objs) {
    for (JObject b : objs) {
      if (!hom_exists(a, b)) continue;
      auto& list = homs[{a, b}];
      for (auto& f : enumerate_hom(a, b)) {
        Table t;
        try {
          t = F.table(f);
          FinMap check(F.at(a), F.at(b), t);
        } catch (const std::exception& e) {
          r.fail("edge " + describe(f) + ": " + e.what());
          continue;
        }
        tables.emplace(f, t);
        list.emplace_back(std::move(f), std::move(t));
      }
    }
  }
  if (!r.passed()) return r;

  for (JObject a : objs) {
    ++r.cases;
    const Table& t = tables.at(identity_j(a));
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (t[x] != x) {
        r.fail("F(id) is not the identity at " + a.str());
        break;
      }
    }
  }
  for (JObject a : objs) {
    for (JObject b : objs) {
      if (!hom_exists(a, b)) continue;
      for (JObject c : objs) {
        if (!hom_exists(b, c)) continue;
        for (const auto& [f, tf] : homs.at({a, b})) {
          for (const auto& [g, tg] : homs.at({b, c})) {
            ++r.cases;
            if (tables.at(compose_j(g, f)) != compose_tables(tg, tf)) {
              r.fail("F(g o f) != F(g) o F(f) for f=" + describe(f) + ", g=" + describe(g));
            }
          }
        }
      }
    }
  }
  return r;
}

Report validate_tdatum(const TDatum& D) {
  Report r{"tdatum"};
  const Window w = D.window();
  for (JObject a : w.objects()) {
    if (!D.has_shift(a)) continue;
    const JObject b{a.m + 1, a.n + 1};
    const Table& phi = D.shift(a).table();
    const auto& src = D.action(a);
    const auto& dst = D.action(b);
    for (std::size_t k = 0; k < src.left_generators().size(); ++k) {
      ++r.cases;
      if (compose_tables(phi, src.left_generators()[k]) != compose_tables(dst.left_generators()[k], phi)) {
        r.fail("shift at " + a.str() + " is not equivariant for left generator " + std::to_string(k + 1));
      }
    }
    for (std::size_t k = 0; k < src.right_generators().size(); ++k) {
      ++r.cases;
      if (compose_tables(phi, src.right_generators()[k]) != compose_tables(dst.right_generators()[k], phi)) {
        r.fail("shift at " + a.str() + " is not equivariant for right generator " + std::to_string(k + 1));
      }
    }
  }
  const std::size_t pmax = std::min(w.M, w.N);
  for (std::size_t p = 2; p <= pmax; ++p) {
    const auto group = enumerate_permutations(p);
    for (JObject a : w.objects()) {
      const JObject b{a.m + p, a.n + p};
      if (!w.contains(b)) continue;
      const Table Phi = D.iterate(a, p).table();
      for (const auto& g : group) {
        if (g.is_identity()) continue;
        ++r.cases;
        auto [ga, gb] = iota_embed(g, a.m, a.n);
        if (compose_tables(D.action(b).act_table(ga, gb), Phi) != Phi) {
          r.fail("Sigma_p invariance fails at i=" + std::to_string(a.m) + ", n=" + std::to_string(a.n) +
                 ", p=" + std::to_string(p) + ", g=[" + dotted(g.images()) + "]");
        }
      }
    }
  }
  return r;
}

Report validate_datum_map(const TDatum& src, const TDatum& dst, const DatumMap& h) {
  Report r{"datum map"};
  if (!(src.window() == dst.window())) {
    r.fail("windows differ");
    return r;
  }
  for (JObject a : src.window().objects()) {
    auto it = h.components.find(a);
    if (it == h.components.end()) {
      r.fail("no component at " + a.str());
      continue;
    }
    const FinMap& c = it->second;
    if (!(c.src() == src.at(a)) || !(c.dst() == dst.at(a))) {
      r.fail("component at " + a.str() + " has the wrong carriers");
      continue;
    }
    const auto& sa = src.action(a);
    const auto& da = dst.action(a);
    for (std::size_t k = 0; k < sa.left_generators().size(); ++k) {
      ++r.cases;
      if (compose_tables(c.table(), sa.left_generators()[k]) != compose_tables(da.left_generators()[k], c.table())) {
        r.fail("component at " + a.str() + " is not left-equivariant");
      }
    }
    for (std::size_t k = 0; k < sa.right_generators().size(); ++k) {
      ++r.cases;
      if (compose_tables(c.table(), sa.right_generators()[k]) != compose_tables(da.right_generators()[k], c.table())) {
        r.fail("component at " + a.str() + " is not right-equivariant");
      }
    }
  }
  if (!r.passed()) return r;
  for (JObject a : src.window().objects()) {
    if (!src.has_shift(a)) continue;
    ++r.cases;
    const JObject b{a.m + 1, a.n + 1};
    if (compose(h.components.at(b), src.shift(a)) != compose(dst.shift(a), h.components.at(a))) {
      r.fail("components do not commute with the shift at " + a.str());
    }
  }
  return r;
}

}  // namespace jspec
