#include "jspec/equivalence.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace jspec {

Table apply_decomposition(const TDatum& D, JObject src, const Decomposition& d) {
  const JObject dst{src.m + d.p, src.n + d.p};
  const Table Phi = D.iterate(src, d.p).table();
  const Table g = D.action(dst).act_table(d.a, d.b);
  Table out(Phi.size());
  for (std::size_t x = 0; x < Phi.size(); ++x) out[x] = g[Phi[x]];
  return out;
}

Evaluator::Evaluator(TDatum D) : datum_(std::move(D)) {
  const Report r = validate_tdatum(datum_);
  if (!r.passed()) throw std::invalid_argument("invalid T-datum: " + r.violations.front());
}

Table Evaluator::table(const JMorphism& f) const {
  if (!datum_.window().contains(f)) {
    throw std::out_of_range("evaluate: morphism " + f.src().str() + "->" + f.dst().str() +
                            " outside the window " + datum_.window().str());
  }
  return apply_decomposition(datum_, f.src(), decompose(f));
}

FinMap Evaluator::operator()(const JMorphism& f) const {
  return FinMap(datum_.at(f.src()), datum_.at(f.dst()), table(f));
}

FinMap evaluate(const TDatum& D, const JMorphism& f) { return Evaluator(D)(f); }

JFunctor tdatum_to_functor(const TDatum& D) {
  auto ev = std::make_shared<const Evaluator>(D);
  std::map<JObject, FinCarrier> carriers;
  for (const auto& [a, act] : D.actions()) carriers.emplace(a, act.carrier());
  return JFunctor::computed(D.window(), std::move(carriers),
                            [ev](const JMorphism& f) { return ev->table(f); });
}

TDatum functor_to_tdatum(const JFunctor& F, bool check) {
  if (check) {
    const Report r = validate_functor(F);
    if (!r.passed()) throw std::invalid_argument("invalid functor: " + r.violations.front());
  }
  const Window w = F.window();
  std::map<JObject, GroupAction> actions;
  std::map<JObject, FinMap> shifts;
  for (JObject a : w.objects()) {
    std::vector<Table> left, right;
    const auto id_m = Permutation::identity(a.m);
    const auto id_n = Permutation::identity(a.n);
    for (std::size_t k = 0; k + 1 < a.m; ++k) {
      left.push_back(F.table(JMorphism::permutation_pair(Permutation::adjacent(a.m, k), id_n)));
    }
    for (std::size_t k = 0; k + 1 < a.n; ++k) {
      right.push_back(F.table(JMorphism::permutation_pair(id_m, Permutation::adjacent(a.n, k))));
    }
    actions.emplace(a, GroupAction(F.at(a), a.m, a.n, std::move(left), std::move(right)));
    if (w.contains(JObject{a.m + 1, a.n + 1})) shifts.emplace(a, F.on(standard_map(a.m, a.n, 1)));
  }
  return TDatum(w, std::move(actions), std::move(shifts));
}

Report roundtrip_check(const TDatum& D) {
  Report r("roundtrip datum->functor->datum");
  ++r.cases;
  try {
    const TDatum back = functor_to_tdatum(tdatum_to_functor(D), false);
    for (JObject a : D.window().objects()) {
      if (!(back.action(a) == D.action(a))) r.fail("carrier or action differs at " + a.str());
      if (D.has_shift(a) && !(back.shift(a) == D.shift(a))) r.fail("shift differs at " + a.str());
    }
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
  return r;
}

Report roundtrip_check(const JFunctor& F) {
  Report r("roundtrip functor->datum->functor");
  try {
    const JFunctor back = tdatum_to_functor(functor_to_tdatum(F));
    for (JObject a : F.window().objects()) {
      ++r.cases;
      if (!(back.at(a) == F.at(a))) r.fail("carrier differs at " + a.str());
    }
    if (!r.passed()) return r;
    for (const auto& f : F.window().morphisms()) {
      ++r.cases;
      if (back.table(f) != F.table(f)) {
        r.fail("edge map differs on " + f.label() + ":" + f.src().str() + "->" + f.dst().str());
      }
    }
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
  return r;
}

JFunctor representable_sum(Window w, const std::vector<JObject>& generators,
                           const std::vector<std::string>& tags) {
  if (tags.size() != generators.size()) throw std::invalid_argument("representable_sum: one tag per generator");
  std::map<JObject, FinCarrier> carriers;
  // elements[C][x] = (summand, morphism) in carrier order.
  std::map<JObject, std::vector<std::pair<std::size_t, JMorphism>>> elements;
  for (JObject c : w.objects()) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, JMorphism>> elems;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      for (auto& u : enumerate_hom(generators[j], c)) {
        labels.push_back(tags[j] + u.label());
        elems.emplace_back(j, std::move(u));
      }
    }
    FinCarrier carrier(labels);
    std::vector<std::pair<std::size_t, JMorphism>> ordered(elems.size());
    for (std::size_t e = 0; e < elems.size(); ++e) ordered[carrier.index_of(labels[e])] = std::move(elems[e]);
    carriers.emplace(c, std::move(carrier));
    elements.emplace(c, std::move(ordered));
  }
  std::map<JMorphism, Table> edges;
  for (auto& h : w.morphisms()) {
    const auto& src = elements.at(h.src());
    const FinCarrier& dst = carriers.at(h.dst());
    Table t(src.size());
    for (std::size_t x = 0; x < src.size(); ++x) {
      const auto& [j, u] = src[x];
      t[x] = dst.index_of(tags[j] + compose_j(h, u).label());
    }
    edges.emplace(std::move(h), std::move(t));
  }
  return JFunctor::explicit_edges(w, std::move(carriers), std::move(edges));
}

namespace {

/// Generating morphisms out of an object: adjacent transpositions of each
/// factor and the first standard map, when it stays in the window.
std::vector<JMorphism> generating_morphisms(Window w, JObject c) {
  std::vector<JMorphism> out;
  const auto id_m = Permutation::identity(c.m);
  const auto id_n = Permutation::identity(c.n);
  for (std::size_t k = 0; k + 1 < c.m; ++k) {
    out.push_back(JMorphism::permutation_pair(Permutation::adjacent(c.m, k), id_n));
  }
  for (std::size_t k = 0; k + 1 < c.n; ++k) {
    out.push_back(JMorphism::permutation_pair(id_m, Permutation::adjacent(c.n, k)));
  }
  if (w.contains(JObject{c.m + 1, c.n + 1})) out.push_back(standard_map(c.m, c.n, 1));
  return out;
}

}  // namespace

RandomInstance random_instance(Window w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Plain modulo keeps streams identical across standard libraries.
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  RandomInstance out;
  out.seed = seed;
  const std::size_t ngen = 1 + pick(3);
  std::vector<std::string> tags;
  for (std::size_t j = 0; j < ngen; ++j) {
    // Skewed towards small objects so that the summands reach many levels.
    const std::size_t m1 = pick(w.M + 1);
    const std::size_t m2 = pick(w.M + 1);
    const std::size_t n1 = pick(w.N + 1);
    const std::size_t n2 = pick(w.N + 1);
    out.generators.push_back({std::min(m1, m2), std::min(n1, n2)});
    tags.push_back("g" + std::to_string(j));
  }
  out.free = representable_sum(w, out.generators, tags);
  const JFunctor& F0 = out.free;

  const auto objs = w.objects();
  std::map<JObject, std::size_t> offset;
  std::size_t total = 0;
  for (JObject c : objs) {
    offset[c] = total;
    total += F0.at(c).size();
  }
  DisjointSet dsu(total);
  std::vector<std::pair<JObject, std::pair<Index, Index>>> work;

  const std::size_t nrel = pick(4);
  for (std::size_t r = 0; r < nrel; ++r) {
    if (pick(2) == 0) {
      // Identify a generator with a translate of itself: a quotient Hom(A, -)/H.
      const std::size_t j = pick(ngen);
      const JObject a = out.generators[j];
      const auto perms_m = enumerate_permutations(a.m);
      const auto perms_n = enumerate_permutations(a.n);
      const auto g = JMorphism::permutation_pair(perms_m[pick(perms_m.size())], perms_n[pick(perms_n.size())]);
      const FinCarrier& c = F0.at(a);
      work.push_back({a, {c.index_of(tags[j] + identity_j(a).label()), c.index_of(tags[j] + g.label())}});
    } else {
      std::vector<JObject> populated;
      for (JObject c : objs) {
        if (F0.at(c).size() >= 2) populated.push_back(c);
      }
      if (populated.empty()) continue;
      const JObject c = populated[pick(populated.size())];
      const std::size_t size = F0.at(c).size();
      const auto x = static_cast<Index>(pick(size));
      const auto y = static_cast<Index>(pick(size));
      work.push_back({c, {x, y}});
    }
  }

  std::map<JObject, std::vector<Table>> gen_tables;
  for (JObject c : objs) {
    for (const auto& k : generating_morphisms(w, c)) gen_tables[c].push_back(F0.table(k));
  }
  auto gens_of = [&](JObject c) -> std::vector<std::pair<JObject, const Table*>> {
    std::vector<std::pair<JObject, const Table*>> v;
    const auto& tables = gen_tables[c];
    const auto morphisms = generating_morphisms(w, c);
    for (std::size_t t = 0; t < tables.size(); ++t) v.emplace_back(morphisms[t].dst(), &tables[t]);
    return v;
  };

  std::vector<std::pair<JObject, std::pair<Index, Index>>> queue;
  for (const auto& item : work) {
    const auto& [c, xy] = item;
    if (dsu.unite(offset[c] + xy.first, offset[c] + xy.second)) queue.push_back(item);
  }
  while (!queue.empty()) {
    const auto [c, xy] = queue.back();
    queue.pop_back();
    for (const auto& [d, table] : gens_of(c)) {
      const Index x = (*table)[xy.first];
      const Index y = (*table)[xy.second];
      if (dsu.unite(offset[d] + x, offset[d] + y)) queue.push_back({d, {x, y}});
    }
  }

  std::map<JObject, FinCarrier> carriers;
  std::map<JObject, std::vector<Index>> class_of;
  for (JObject c : objs) {
    const FinCarrier& fc = F0.at(c);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t x = 0; x < fc.size(); ++x) rel.emplace_back(x, dsu.find(offset[c] + x) - offset[c]);
    auto q = quotient_indexed(fc.labels(), rel);
    out.projection.emplace(c, FinMap(fc, q.classes, q.class_of));
    carriers.emplace(c, q.classes);
    class_of.emplace(c, std::move(q.class_of));
  }
  std::map<JMorphism, Table> edges;
  for (auto& h : w.morphisms()) {
    const FinCarrier& src = carriers.at(h.src());
    const FinCarrier& free_src = F0.at(h.src());
    const Table ft = F0.table(h);
    Table t(src.size());
    for (Index x = 0; x < src.size(); ++x) {
      t[x] = class_of.at(h.dst())[ft[free_src.index_of(src.label(x))]];
    }
    edges.emplace(std::move(h), std::move(t));
  }
  out.functor = JFunctor::explicit_edges(w, std::move(carriers), std::move(edges));
  return out;
}

TDatum random_tdatum(Window w, std::uint64_t seed) {
  return functor_to_tdatum(random_instance(w, seed).functor);
}

}  // namespace jspec
