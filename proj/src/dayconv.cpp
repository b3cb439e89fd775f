#include "jspec/dayconv.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "jspec/equivalence.hpp"

namespace jspec {

DiagramView view(const JFunctor& F) {
  return {[&F](JObject a) -> const FinCarrier& { return F.at(a); },
          [&F](const JMorphism& f) { return F.table(f); }};
}

DiagramView view(const BisymSeq& X) {
  return {[&X](JObject a) -> const FinCarrier& {
            auto it = X.levels.find(a);
            if (it == X.levels.end()) {
              throw std::out_of_range("object " + a.str() + " outside the window " + X.window.str());
            }
            return it->second.carrier();
          },
          [&X](const JMorphism& f) {
            if (f.src() != f.dst()) throw std::invalid_argument("bisymmetric sequence: not a permutation pair");
            return X.levels.at(f.src()).act_table(Permutation(f.phi().images()), Permutation(f.psi().images()));
          }};
}

// ---------------------------------------------------------------------------
// Presentations

std::size_t CoendPresentation::add_slot(std::vector<JObject> objects, std::vector<JMorphism> homs,
                                        std::vector<FinCarrier> factors) {
  if (!relations_.empty() || closed_) throw std::logic_error("coend: slots must precede relations");
  Slot s{std::move(objects), std::move(homs), std::move(factors), count_, 0};
  s.size = s.homs.size();
  for (const auto& f : s.factors) s.size *= f.size();
  std::map<JMorphism, Index> idx;
  for (Index u = 0; u < s.homs.size(); ++u) idx.emplace(s.homs[u], u);
  if (!slot_index_.emplace(s.objects, slots_.size()).second) throw std::logic_error("coend: repeated slot");
  count_ += s.size;
  hom_index_.push_back(std::move(idx));
  slots_.push_back(std::move(s));
  return slots_.size() - 1;
}

std::optional<std::size_t> CoendPresentation::find_slot(const std::vector<JObject>& objects) const {
  auto it = slot_index_.find(objects);
  if (it == slot_index_.end()) return std::nullopt;
  return it->second;
}

Index CoendPresentation::hom_index(std::size_t slot, const JMorphism& u) const {
  const auto& idx = hom_index_.at(slot);
  auto it = idx.find(u);
  if (it == idx.end()) throw std::out_of_range("coend: " + u.label() + " is not an index morphism of the slot");
  return it->second;
}

std::size_t CoendPresentation::index(std::size_t slot, Index u, std::span<const Index> elements) const {
  const Slot& s = slots_[slot];
  std::size_t g = u;
  for (std::size_t k = 0; k < s.factors.size(); ++k) g = g * s.factors[k].size() + elements[k];
  return s.offset + g;
}

CoendPresentation::Generator CoendPresentation::decode(std::size_t g) const {
  auto it = std::upper_bound(slots_.begin(), slots_.end(), g,
                             [](std::size_t v, const Slot& s) { return v < s.offset + s.size; });
  const std::size_t slot = static_cast<std::size_t>(it - slots_.begin());
  const Slot& s = *it;
  std::size_t rest = g - s.offset;
  Generator out{slot, 0, std::vector<Index>(s.factors.size())};
  for (std::size_t k = s.factors.size(); k-- > 0;) {
    out.elements[k] = static_cast<Index>(rest % s.factors[k].size());
    rest /= s.factors[k].size();
  }
  out.u = static_cast<Index>(rest);
  return out;
}

std::string CoendPresentation::label(std::size_t g) const {
  const Generator d = decode(g);
  const Slot& s = slots_[d.slot];
  std::string out;
  for (JObject a : s.objects) out += a.str();
  out += '|';
  out += s.homs[d.u].label();
  for (std::size_t k = 0; k < s.factors.size(); ++k) {
    out += '|';
    out += s.factors[k].label(d.elements[k]);
  }
  return out;
}

void CoendPresentation::relate(std::size_t g, std::size_t h) {
  if (closed_) throw std::logic_error("coend: already closed");
  if (g != h) relations_.emplace_back(g, h);
}

void CoendPresentation::close(std::optional<std::uint64_t> shuffle_seed) {
  std::vector<std::size_t> order(count_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto relations = relations_;
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  if (shuffle_seed) {
    std::shuffle(order.begin(), order.end(), rng);
    std::shuffle(relations.begin(), relations.end(), rng);
  }
  std::vector<std::size_t> position(count_);
  std::vector<std::string> labels(count_);
  for (std::size_t k = 0; k < count_; ++k) {
    position[order[k]] = k;
    labels[k] = label(order[k]);
  }
  for (auto& [a, b] : relations) {
    a = position[a];
    b = position[b];
    if (shuffle_seed && (rng() & 1)) std::swap(a, b);
  }
  auto q = quotient_indexed(labels, relations);
  classes_ = std::move(q.classes);
  class_of_.assign(count_, 0);
  representative_.assign(classes_.size(), 0);
  for (std::size_t g = 0; g < count_; ++g) {
    class_of_[g] = q.class_of[position[g]];
    if (labels[position[g]] == classes_.label(class_of_[g])) representative_[class_of_[g]] = g;
  }
  closed_ = true;
}

void CoendPresentation::require_closed() const {
  if (!closed_) throw std::logic_error("coend: presentation is not closed");
}

const FinCarrier& CoendPresentation::classes() const {
  require_closed();
  return classes_;
}

Index CoendPresentation::class_of(std::size_t g) const {
  require_closed();
  return class_of_.at(g);
}

std::size_t CoendPresentation::representative(Index c) const {
  require_closed();
  return representative_.at(c);
}

std::vector<std::vector<std::string>> CoendPresentation::partition() const {
  require_closed();
  std::vector<std::vector<std::string>> out(classes_.size());
  for (std::size_t g = 0; g < count_; ++g) out[class_of_[g]].push_back(label(g));
  for (auto& members : out) std::sort(members.begin(), members.end());
  return out;
}

// ---------------------------------------------------------------------------
// Day convolution

namespace {

std::vector<JObject> objects_below(JObject c) { return Window{c.m, c.n}.objects(); }

CoendPresentation build_day(const DiagramView& X, const DiagramView& Y, JObject at, IndexKind kind) {
  CoendPresentation P(at);
  const auto below = objects_below(at);
  for (JObject a : below) {
    for (JObject b : below) {
      const JObject ab = tensor_obj(a, b);
      if (kind == IndexKind::Sigma2 ? ab != at : !hom_exists(ab, at)) continue;
      P.add_slot({a, b}, enumerate_hom(ab, at), {X.at(a), Y.at(b)});
    }
  }
  const auto& slots = P.slots();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (slots[s].size == 0) continue;
    const JObject a = slots[s].objects[0];
    const JObject b = slots[s].objects[1];
    const std::size_t xs = slots[s].factors[0].size();
    const std::size_t ys = slots[s].factors[1].size();
    for (std::size_t t = 0; t < slots.size(); ++t) {
      const JObject a2 = slots[t].objects[0];
      const JObject b2 = slots[t].objects[1];
      if (kind == IndexKind::Sigma2 ? (a2 != a || b2 != b) : (!hom_exists(a, a2) || !hom_exists(b, b2))) continue;
      const auto fs = enumerate_hom(a, a2);
      const auto gs = enumerate_hom(b, b2);
      for (const auto& f : fs) {
        const Table xf = X.on(f);
        for (const auto& g : gs) {
          if (f.is_identity() && g.is_identity()) continue;
          const Table yg = Y.on(g);
          const JMorphism fg = tensor_mor(f, g);
          for (Index u2 = 0; u2 < slots[t].homs.size(); ++u2) {
            const Index u = P.hom_index(s, compose_j(slots[t].homs[u2], fg));
            for (Index x = 0; x < xs; ++x) {
              for (Index y = 0; y < ys; ++y) P.relate(P.index(t, u2, {xf[x], yg[y]}), P.index(s, u, {x, y}));
            }
          }
        }
      }
    }
  }
  return P;
}

void require_in(const Window& w, JObject at, const char* what) {
  if (!w.contains(at)) {
    throw std::out_of_range(std::string(what) + ": object " + at.str() + " outside the window " + w.str());
  }
}

/// Memoised edge tables of a functor.
class TableCache {
 public:
  explicit TableCache(const JFunctor& F) : F_(F) {}
  const Table& operator()(const JMorphism& f) {
    auto it = cache_.find(f);
    if (it == cache_.end()) it = cache_.emplace(f, F_.table(f)).first;
    return it->second;
  }

 private:
  const JFunctor& F_;
  std::map<JMorphism, Table> cache_;
};

/// Elements of unit_object at `a`, in carrier order.
std::vector<JMorphism> unit_elements(const FinCarrier& c, JObject a) {
  auto homs = enumerate_hom({0, 0}, a);
  std::vector<JMorphism> out(homs.size());
  for (auto& s : homs) out.at(c.index_of(s.label())) = std::move(s);
  return out;
}

}  // namespace

InducedMap induced_map(const CoendPresentation& P, const FinCarrier& dst,
                       const std::function<Index(std::size_t)>& image, std::string name) {
  Report r(std::move(name));
  const FinCarrier& src = P.classes();
  constexpr Index kUnset = ~Index{0};
  Table table(src.size(), kUnset);
  for (Index c = 0; c < src.size(); ++c) table[c] = image(P.representative(c));
  for (std::size_t g = 0; g < P.generator_count(); ++g) {
    ++r.cases;
    const Index c = P.class_of(g);
    const Index v = image(g);
    if (v != table[c]) {
      r.fail("not well defined on class " + src.label(c) + ": member " + P.label(g) + " goes to " +
             dst.label(v) + ", the representative to " + dst.label(table[c]));
    }
  }
  std::vector<Index> hit(dst.size(), kUnset);
  for (Index c = 0; c < src.size(); ++c) {
    if (hit[table[c]] != kUnset) {
      r.fail("not injective: classes " + src.label(hit[table[c]]) + " and " + src.label(c) + " both go to " +
             dst.label(table[c]));
    }
    hit[table[c]] = c;
  }
  for (Index v = 0; v < dst.size(); ++v) {
    if (hit[v] == kUnset) r.fail("not surjective: " + dst.label(v) + " is not hit");
  }
  return {FinMap(src, dst, std::move(table)), std::move(r)};
}

namespace {

/// Class of the generator of Q in slot `objects` with index morphism u.
Index class_in(const CoendPresentation& Q, const std::vector<JObject>& objects, const JMorphism& u,
               std::initializer_list<Index> elements) {
  const auto t = Q.find_slot(objects);
  if (!t) throw std::logic_error("coend: no slot for the image generator");
  return Q.class_of(Q.index(*t, Q.hom_index(*t, u), elements));
}

}  // namespace

CoendPresentation day_presentation(const DiagramView& X, const DiagramView& Y, JObject at,
                                   const DayOptions& options) {
  CoendPresentation P = build_day(X, Y, at, options.kind);
  P.close(options.shuffle_seed);
  return P;
}

CoendPresentation day_convolve(const JFunctor& X, const JFunctor& Y, JObject at,
                               std::optional<std::uint64_t> shuffle_seed) {
  require_in(X.window(), at, "convolve");
  require_in(Y.window(), at, "convolve");
  return day_presentation(view(X), view(Y), at, {IndexKind::J, shuffle_seed});
}

JFunctor day_functor(const JFunctor& X, const JFunctor& Y, Window w) {
  if (!X.window().covers(w) || !Y.window().covers(w)) {
    throw std::out_of_range("convolve: window " + w.str() + " exceeds an input window");
  }
  std::map<JObject, CoendPresentation> at;
  std::map<JObject, FinCarrier> carriers;
  for (JObject c : w.objects()) {
    auto P = day_convolve(X, Y, c);
    carriers.emplace(c, P.classes());
    at.emplace(c, std::move(P));
  }
  std::map<JMorphism, Table> edges;
  for (auto& h : w.morphisms()) {
    const auto& P = at.at(h.src());
    const auto& Q = at.at(h.dst());
    Table t(P.classes().size());
    for (Index c = 0; c < t.size(); ++c) {
      const auto d = P.decode(P.representative(c));
      const auto& slot = P.slots()[d.slot];
      t[c] = class_in(Q, slot.objects, compose_j(h, slot.homs[d.u]), {d.elements[0], d.elements[1]});
    }
    edges.emplace(std::move(h), std::move(t));
  }
  return JFunctor::explicit_edges(w, std::move(carriers), std::move(edges));
}

JFunctor unit_object(Window w) { return representable_sum(w, {{0, 0}}, {""}); }

JFunctor point_support(Window w, JObject a) {
  std::map<JObject, FinCarrier> carriers;
  for (JObject c : w.objects()) carriers.emplace(c, hom_exists(a, c) ? FinCarrier::point() : FinCarrier{});
  std::map<JMorphism, Table> edges;
  for (auto& f : w.morphisms()) {
    Table t(carriers.at(f.src()).size(), 0);
    edges.emplace(std::move(f), std::move(t));
  }
  return JFunctor::explicit_edges(w, std::move(carriers), std::move(edges));
}

InducedMap left_unitor(const JFunctor& Y, JObject at) {
  const JFunctor one = unit_object(Y.window());
  const CoendPresentation P = day_convolve(one, Y, at);
  TableCache table(Y);
  std::map<JObject, std::vector<JMorphism>> units;
  return induced_map(P, Y.at(at), [&](std::size_t g) {
    const auto d = P.decode(g);
    const auto& slot = P.slots()[d.slot];
    const JObject a = slot.objects[0];
    const JObject b = slot.objects[1];
    auto it = units.find(a);
    if (it == units.end()) it = units.emplace(a, unit_elements(one.at(a), a)).first;
    const JMorphism m = compose_j(slot.homs[d.u], tensor_mor(it->second[d.elements[0]], identity_j(b)));
    return table(m)[d.elements[1]];
  }, "left unitor at " + at.str());
}

InducedMap right_unitor(const JFunctor& X, JObject at) {
  const JFunctor one = unit_object(X.window());
  const CoendPresentation P = day_convolve(X, one, at);
  TableCache table(X);
  std::map<JObject, std::vector<JMorphism>> units;
  return induced_map(P, X.at(at), [&](std::size_t g) {
    const auto d = P.decode(g);
    const auto& slot = P.slots()[d.slot];
    const JObject a = slot.objects[0];
    const JObject b = slot.objects[1];
    auto it = units.find(b);
    if (it == units.end()) it = units.emplace(b, unit_elements(one.at(b), b)).first;
    const JMorphism m = compose_j(slot.homs[d.u], tensor_mor(identity_j(a), it->second[d.elements[1]]));
    return table(m)[d.elements[0]];
  }, "right unitor at " + at.str());
}

InducedMap braiding(const JFunctor& X, const JFunctor& Y, JObject at) {
  const CoendPresentation P = day_convolve(X, Y, at);
  const CoendPresentation Q = day_convolve(Y, X, at);
  return induced_map(P, Q.classes(), [&](std::size_t g) {
    const auto d = P.decode(g);
    const auto& slot = P.slots()[d.slot];
    const JObject a = slot.objects[0];
    const JObject b = slot.objects[1];
    return class_in(Q, {b, a}, compose_j(slot.homs[d.u], symmetry_iso(b, a)), {d.elements[1], d.elements[0]});
  }, "braiding at " + at.str());
}

// ---------------------------------------------------------------------------
// Restriction and extension along permutation pairs

BisymSeq j_star(const JFunctor& X) {
  BisymSeq out{X.window(), {}};
  for (JObject a : X.window().objects()) {
    std::vector<Table> left, right;
    const auto id_m = Permutation::identity(a.m);
    const auto id_n = Permutation::identity(a.n);
    for (std::size_t k = 0; k + 1 < a.m; ++k) {
      left.push_back(X.table(JMorphism::permutation_pair(Permutation::adjacent(a.m, k), id_n)));
    }
    for (std::size_t k = 0; k + 1 < a.n; ++k) {
      right.push_back(X.table(JMorphism::permutation_pair(id_m, Permutation::adjacent(a.n, k))));
    }
    out.levels.emplace(a, GroupAction(X.at(a), a.m, a.n, std::move(left), std::move(right)));
  }
  return out;
}

JFunctor j_shriek(const BisymSeq& Y) {
  const Window w = Y.window;
  std::map<JObject, CoendPresentation> at;
  std::map<JObject, FinCarrier> carriers;
  for (JObject c : w.objects()) {
    CoendPresentation P(c);
    for (JObject a : w.objects()) {
      if (hom_exists(a, c)) P.add_slot({a}, enumerate_hom(a, c), {Y.at(a)});
    }
    for (std::size_t s = 0; s < P.slots().size(); ++s) {
      const auto& slot = P.slots()[s];
      if (slot.size == 0) continue;
      const JObject a = slot.objects[0];
      for (const auto& pa : enumerate_permutations(a.m)) {
        for (const auto& pb : enumerate_permutations(a.n)) {
          if (pa.is_identity() && pb.is_identity()) continue;
          const Table act = Y.action(a).act_table(pa, pb);
          const JMorphism g = JMorphism::permutation_pair(pa, pb);
          for (Index u = 0; u < slot.homs.size(); ++u) {
            const Index ug = P.hom_index(s, compose_j(slot.homs[u], g));
            for (Index y = 0; y < act.size(); ++y) P.relate(P.index(s, u, {act[y]}), P.index(s, ug, {y}));
          }
        }
      }
    }
    P.close();
    carriers.emplace(c, P.classes());
    at.emplace(c, std::move(P));
  }
  std::map<JMorphism, Table> edges;
  for (auto& h : w.morphisms()) {
    const auto& P = at.at(h.src());
    const auto& Q = at.at(h.dst());
    Table t(P.classes().size());
    for (Index c = 0; c < t.size(); ++c) {
      const auto d = P.decode(P.representative(c));
      const auto& slot = P.slots()[d.slot];
      t[c] = class_in(Q, slot.objects, compose_j(h, slot.homs[d.u]), {d.elements[0]});
    }
    edges.emplace(std::move(h), std::move(t));
  }
  return JFunctor::explicit_edges(w, std::move(carriers), std::move(edges));
}

CoendPresentation bisym_day(const BisymSeq& X, const BisymSeq& Y, JObject at,
                            std::optional<std::uint64_t> shuffle_seed) {
  require_in(X.window, at, "convolve");
  require_in(Y.window, at, "convolve");
  return day_presentation(view(X), view(Y), at, {IndexKind::Sigma2, shuffle_seed});
}

BisymSeq bisym_day_sequence(const BisymSeq& X, const BisymSeq& Y, Window w) {
  BisymSeq out{w, {}};
  for (JObject c : w.objects()) {
    const CoendPresentation P = bisym_day(X, Y, c);
    auto act = [&](const Permutation& a, const Permutation& b, Index cls) {
      const auto d = P.decode(P.representative(cls));
      const auto& slot = P.slots()[d.slot];
      return class_in(P, slot.objects, compose_j(JMorphism::permutation_pair(a, b), slot.homs[d.u]),
                      {d.elements[0], d.elements[1]});
    };
    out.levels.emplace(c, GroupAction::from_function(P.classes(), c.m, c.n, act));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sym(T)

Index SymTMonoid::element(const Permutation& w) const {
  const auto& forms = normal_forms.at(w.degree());
  auto it = std::find(forms.begin(), forms.end(), w);
  if (it == forms.end()) throw std::out_of_range("Sym(T): no element with normal form [" + dotted(w.images()) + "]");
  return static_cast<Index>(it - forms.begin());
}

Index SymTMonoid::multiply(std::size_t i, Index x, std::size_t j, Index y) const {
  return element(direct_sum(normal_forms.at(i).at(x), normal_forms.at(j).at(y)));
}

SymTMonoid sym_T(std::size_t top) {
  static const FinCarrier kEmpty;
  const FinCarrier point = FinCarrier::point();
  SymTMonoid R;
  Report& r = R.construction;
  R.levels.push_back(GroupAction::trivial(point, 0, 0));
  R.normal_forms.push_back({Permutation::identity(0)});

  // T^(n-1) as a symmetric sequence: its carrier in degree n-1 with the
  // action of Sigma_{n-1}, stored as the second factor of (0, n-1).
  GroupAction prev = GroupAction::trivial(point, 0, 0);
  for (std::size_t n = 1; n <= top; ++n) {
    const JObject below{0, n - 1};
    const DiagramView X{[&](JObject a) -> const FinCarrier& { return a == below ? prev.carrier() : kEmpty; },
                        [&](const JMorphism& f) {
                          if (f.src() != below) return Table{};
                          return prev.act_table(Permutation::identity(0), Permutation(f.psi().images()));
                        }};
    const DiagramView T{[&](JObject a) -> const FinCarrier& { return a == JObject{0, 1} ? point : kEmpty; },
                        [&](const JMorphism& f) { return f.src() == JObject{0, 1} ? Table{0} : Table{}; }};
    const CoendPresentation P = day_presentation(X, T, {0, n}, {IndexKind::Sigma2, std::nullopt});
    const auto& prev_forms = R.normal_forms.back();

    std::vector<std::optional<Permutation>> forms(P.classes().size());
    for (std::size_t g = 0; g < P.generator_count(); ++g) {
      ++r.cases;
      const auto d = P.decode(g);
      const Permutation u(P.slots()[d.slot].homs[d.u].psi().images());
      const Permutation w = compose(u, direct_sum(prev_forms.at(d.elements[0]), Permutation::identity(1)));
      auto& slot = forms[P.class_of(g)];
      if (!slot) {
        slot = w;
      } else if (*slot != w) {
        r.fail("level " + std::to_string(n) + ": class " + P.classes().label(P.class_of(g)) +
               " has two normal forms");
      }
    }
    std::vector<Permutation> level;
    for (auto& f : forms) level.push_back(*f);
    auto sorted = level;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.size() != factorial(n)) {
      r.fail("level " + std::to_string(n) + ": normal forms are not a bijection onto Sigma_" + std::to_string(n));
    }
    if (!r.passed()) throw std::logic_error("Sym(T): " + r.violations.front());
    R.normal_forms.push_back(level);

    // The action of Sigma_n by postcomposition must be left multiplication.
    auto post = [&](const Permutation& a, const Permutation& b, Index c) {
      const auto d = P.decode(P.representative(c));
      const auto& slot = P.slots()[d.slot];
      return class_in(P, slot.objects, compose_j(JMorphism::permutation_pair(a, b), slot.homs[d.u]),
                      {d.elements[0], d.elements[1]});
    };
    prev = GroupAction::from_function(P.classes(), 0, n, post);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const Permutation s = Permutation::adjacent(n, k);
      const Table t = prev.act_table(Permutation::identity(0), s);
      for (Index c = 0; c < t.size(); ++c) {
        ++r.cases;
        if (level[t[c]] != compose(s, level[c])) {
          r.fail("level " + std::to_string(n) + ": postcomposition is not left multiplication");
        }
      }
    }
    if (!r.passed()) throw std::logic_error("Sym(T): " + r.violations.front());

    R.levels.push_back(GroupAction::from_function(P.classes(), n, n,
                                                  [&](const Permutation& a, const Permutation& b, Index c) {
                                                    return R.element(compose(compose(b, level[c]), a.inverse()));
                                                  }));
  }
  return R;
}

Report validate_sym_T(const SymTMonoid& R) {
  Report r("Sym(T) monoid");
  const std::size_t top = R.top();
  auto size = [&](std::size_t i) { return static_cast<Index>(R.levels[i].carrier().size()); };
  for (std::size_t i = 0; i <= top; ++i) {
    for (Index x = 0; x < size(i); ++x) {
      ++r.cases;
      if (R.multiply(0, 0, i, x) != x || R.multiply(i, x, 0, 0) != x) {
        r.fail("unit law fails at level " + std::to_string(i) + " on " + R.levels[i].carrier().label(x));
      }
    }
  }
  for (std::size_t i = 0; i <= top; ++i) {
    for (std::size_t j = 0; i + j <= top; ++j) {
      for (std::size_t k = 0; i + j + k <= top; ++k) {
        for (Index x = 0; x < size(i); ++x) {
          for (Index y = 0; y < size(j); ++y) {
            for (Index z = 0; z < size(k); ++z) {
              ++r.cases;
              if (R.multiply(i + j, R.multiply(i, x, j, y), k, z) != R.multiply(i, x, j + k, R.multiply(j, y, k, z))) {
                r.fail("associativity fails at levels " + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k));
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i <= top; ++i) {
    for (std::size_t j = 0; i + j <= top; ++j) {
      const Permutation chi = block_shuffle(j, i);
      const Table twist = R.levels[i + j].act_table(chi, chi);
      for (Index x = 0; x < size(i); ++x) {
        for (Index y = 0; y < size(j); ++y) {
          ++r.cases;
          if (twist[R.multiply(j, y, i, x)] != R.multiply(i, x, j, y)) {
            r.fail("commutativity fails at levels " + std::to_string(i) + "," + std::to_string(j));
          }
        }
      }
      for (const auto& a : enumerate_permutations(i)) {
        for (const auto& b : enumerate_permutations(i)) {
          const Table gx = R.levels[i].act_table(a, b);
          for (const auto& c : enumerate_permutations(j)) {
            for (const auto& d : enumerate_permutations(j)) {
              const Table gy = R.levels[j].act_table(c, d);
              const Table gxy = R.levels[i + j].act_table(direct_sum(a, c), direct_sum(b, d));
              for (Index x = 0; x < size(i); ++x) {
                for (Index y = 0; y < size(j); ++y) {
                  ++r.cases;
                  if (R.multiply(i, gx[x], j, gy[y]) != gxy[R.multiply(i, x, j, y)]) {
                    r.fail("multiplication is not equivariant at levels " + std::to_string(i) + "," +
                           std::to_string(j));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

Report compare_unit_sym_T(std::size_t top) {
  Report r("j^*(1) vs Sym(T)");
  const Window w{top, top};
  const JFunctor one = unit_object(w);
  const BisymSeq J = j_star(one);
  const SymTMonoid R = sym_T(top);
  for (JObject a : w.objects()) {
    if (a.m != a.n) {
      ++r.cases;
      if (!J.at(a).empty()) r.fail("j^*(1) is not empty at " + a.str());
    }
  }
  std::vector<std::vector<JMorphism>> elements;
  std::vector<Table> theta;
  for (std::size_t n = 0; n <= top; ++n) {
    const JObject a{n, n};
    elements.push_back(unit_elements(J.at(a), a));
    Table t;
    for (const auto& s : elements.back()) t.push_back(R.element(Permutation(s.alpha().images())));
    ++r.cases;
    if (!FinMap(J.at(a), R.levels[n].carrier(), t).is_bijective()) {
      r.fail("level " + std::to_string(n) + ": s |-> alpha(s) is not a bijection");
    }
    for (const auto& pa : enumerate_permutations(n)) {
      for (const auto& pb : enumerate_permutations(n)) {
        const Table lhs = J.action(a).act_table(pa, pb);
        const Table rhs = R.levels[n].act_table(pa, pb);
        for (Index s = 0; s < t.size(); ++s) {
          ++r.cases;
          if (t[lhs[s]] != rhs[t[s]]) {
            r.fail("level " + std::to_string(n) + ": not equivariant for ([" + dotted(pa.images()) + "],[" +
                   dotted(pb.images()) + "])");
          }
        }
      }
    }
    theta.push_back(std::move(t));
  }
  for (std::size_t i = 0; i <= top; ++i) {
    for (std::size_t j = 0; i + j <= top; ++j) {
      const FinCarrier& target = J.at({i + j, i + j});
      for (Index s1 = 0; s1 < elements[i].size(); ++s1) {
        for (Index s2 = 0; s2 < elements[j].size(); ++s2) {
          ++r.cases;
          const Index prod = target.index_of(tensor_mor(elements[i][s1], elements[j][s2]).label());
          if (theta[i + j][prod] != R.multiply(i, theta[i][s1], j, theta[j][s2])) {
            r.fail("multiplication not preserved at levels " + std::to_string(i) + "," + std::to_string(j));
          }
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Modules over Sym(T)

CoendPresentation module_smash(const TDatum& M, const TDatum& N, JObject at,
                               std::optional<std::uint64_t> shuffle_seed) {
  require_in(M.window(), at, "smash");
  require_in(N.window(), at, "smash");
  const Evaluator eM(M);
  const Evaluator eN(N);
  const BisymSeq bm = M.bisymmetric();
  const BisymSeq bn = N.bisymmetric();
  CoendPresentation P = build_day(view(bm), view(bn), at, IndexKind::Sigma2);
  const std::size_t nslots = P.slots().size();
  for (std::size_t s = 0; s < nslots; ++s) {
    const auto& slot = P.slots()[s];
    const JObject a = slot.objects[0];
    const JObject b = slot.objects[1];
    for (std::size_t p = 1; p <= std::min(a.m, a.n); ++p) {
      const JObject a0{a.m - p, a.n - p};
      const JObject pb{b.m + p, b.n + p};
      const std::size_t t = *P.find_slot({a0, pb});
      const auto& other = P.slots()[t];
      const std::size_t xs = other.factors[0].size();
      const std::size_t ys = slot.factors[1].size();
      if (xs == 0 || ys == 0) continue;
      for (const auto& unit : enumerate_hom({0, 0}, {p, p})) {
        const Table right = eM.table(tensor_mor(identity_j(a0), unit));
        const Table left = eN.table(tensor_mor(unit, identity_j(b)));
        for (Index u = 0; u < slot.homs.size(); ++u) {
          const Index u2 = P.hom_index(t, slot.homs[u]);
          for (Index x = 0; x < xs; ++x) {
            for (Index y = 0; y < ys; ++y) P.relate(P.index(s, u, {right[x], y}), P.index(t, u2, {x, left[y]}));
          }
        }
      }
    }
  }
  P.close(shuffle_seed);
  return P;
}

InducedMap compare_monoidal(const JFunctor& X, const JFunctor& Y, JObject at) {
  const TDatum EX = functor_to_tdatum(X);
  const TDatum EY = functor_to_tdatum(Y);
  const CoendPresentation P = module_smash(EX, EY, at);
  const CoendPresentation Q = day_convolve(X, Y, at);
  return induced_map(P, Q.classes(), [&](std::size_t g) {
    const auto d = P.decode(g);
    const auto& slot = P.slots()[d.slot];
    return class_in(Q, slot.objects, slot.homs[d.u], {d.elements[0], d.elements[1]});
  }, "monoidal comparison at " + at.str());
}

}  // namespace jspec
