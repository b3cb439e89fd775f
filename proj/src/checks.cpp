#include "jspec/checks.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

#include "jspec/dayconv.hpp"
#include "jspec/equivalence.hpp"
#include "jspec/spectra.hpp"
#include "jspec/topo.hpp"

namespace jspec {

namespace {

std::vector<JMorphism> bounded_morphisms(Window w, std::size_t max_shift) {
  std::vector<JMorphism> out;
  for (auto& f : w.morphisms()) {
    if (f.shift() <= max_shift) out.push_back(std::move(f));
  }
  return out;
}

std::string at(const JMorphism& f) { return f.label() + " " + f.src().str() + " -> " + f.dst().str(); }

FinCarrier letters(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < k; ++j) out.push_back(std::string(1, static_cast<char>('a' + j)));
  return FinCarrier(out);
}

void absorb(Report& into, const Report& part, const std::string& context) {
  into.cases += part.cases;
  for (const auto& v : part.violations) into.fail(context + ": " + v);
}

JFunctor unchecked_functor(const TDatum& D) {
  std::map<JObject, FinCarrier> carriers;
  for (const auto& [a, act] : D.actions()) carriers.emplace(a, act.carrier());
  return JFunctor::computed(D.window(), carriers,
                            [D](const JMorphism& f) { return apply_decomposition(D, f.src(), decompose(f)); });
}

}  // namespace

Report check_category(Window w, std::size_t max_shift) {
  Report report("category axioms on " + w.str() + ", shift <= " + std::to_string(max_shift));
  const auto mors = bounded_morphisms(w, max_shift);
  for (const auto& f : mors) {
    ++report.cases;
    if (compose_j(identity_j(f.dst()), f) != f || compose_j(f, identity_j(f.src())) != f) {
      report.fail("identity law fails for " + at(f));
    }
  }
  for (const auto& f : mors) {
    for (const auto& g : mors) {
      if (g.src() != f.dst()) continue;
      const JMorphism gf = compose_j(g, f);
      for (const auto& h : mors) {
        if (h.src() != g.dst()) continue;
        ++report.cases;
        if (compose_j(h, gf) != compose_j(compose_j(h, g), f)) {
          report.fail("associativity fails for f=" + at(f) + ", g=" + g.label() + ", h=" + h.label());
        }
      }
    }
  }
  return report;
}

Report check_hom_counts(std::size_t bound) {
  Report report("hom counts for entries <= " + std::to_string(bound));
  for (std::size_t m = 0; m <= bound; ++m)
    for (std::size_t n = 0; n <= bound; ++n)
      for (std::size_t k = 0; k <= bound; ++k)
        for (std::size_t l = 0; l <= bound; ++l) {
          ++report.cases;
          const JObject a{m, n}, b{k, l};
          const auto homs = enumerate_hom(a, b);
          const std::set<JMorphism> distinct(homs.begin(), homs.end());
          if (distinct.size() != homs.size()) report.fail("repeated morphisms in Hom" + a.str() + b.str());
          if (homs.size() != count_hom(a, b)) {
            report.fail("|Hom" + a.str() + b.str() + "| = " + std::to_string(homs.size()) + ", closed form " +
                        std::to_string(count_hom(a, b)));
          }
        }
  return report;
}

Report check_decomposition(Window w, std::size_t max_shift) {
  Report report("canonical decomposition on " + w.str() + ", shift <= " + std::to_string(max_shift));
  std::map<std::size_t, std::vector<Permutation>> perms;
  auto group = [&](std::size_t d) -> const std::vector<Permutation>& {
    auto it = perms.find(d);
    if (it == perms.end()) it = perms.emplace(d, enumerate_permutations(d)).first;
    return it->second;
  };
  for (const auto& f : bounded_morphisms(w, max_shift)) {
    ++report.cases;
    const Decomposition d = decompose(f);
    if (recompose(d, f.src()) != f) {
      report.fail("recomposition differs for " + at(f));
      continue;
    }
    const JMorphism psi = standard_map(f.src().m, f.src().n, d.p);
    std::set<std::pair<Permutation, Permutation>> found, expected;
    for (const auto& a : group(f.dst().m))
      for (const auto& b : group(f.dst().n))
        if (compose_j(JMorphism::permutation_pair(a, b), psi) == f) found.insert({a, b});
    for (const auto& g : group(d.p)) {
      const auto [ga, gb] = iota_embed(g, f.src().m, f.src().n);
      expected.insert({compose(d.a, ga), compose(d.b, gb)});
    }
    if (found != expected) {
      report.fail("factorisations of " + at(f) + ": " + std::to_string(found.size()) + " found, " +
                  std::to_string(expected.size()) + " predicted");
    }
  }
  return report;
}

Report check_equivalence(Window w, std::uint64_t seed, std::size_t count) {
  Report report("equivalence roundtrips on " + w.str());
  for (std::uint64_t s = seed; s < seed + count; ++s) {
    const std::string ctx = "seed " + std::to_string(s);
    const RandomInstance inst = random_instance(w, s);
    const TDatum D = functor_to_tdatum(inst.functor);
    absorb(report, roundtrip_check(D), ctx);
    absorb(report, roundtrip_check(inst.functor), ctx);
    absorb(report, validate_functor(tdatum_to_functor(D)), ctx);
  }
  return report;
}

TDatum invariance_counterexample() {
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
    shifts.emplace(o, FinMap(src, actions.at(up).carrier(), Table(src.size(), 0)));
  }
  return TDatum(w, std::move(actions), std::move(shifts));
}

Report check_invariance(Window w, std::uint64_t seed, std::size_t count) {
  Report report("Sigma_p-invariance on " + w.str());
  const TDatum bad = invariance_counterexample();
  ++report.cases;
  if (validate_tdatum(bad).passed()) report.fail("counterexample accepted by validate_tdatum");
  ++report.cases;
  try {
    (void)evaluate(bad, standard_map(0, 0, 2));
    report.fail("evaluate accepted the counterexample");
  } catch (const std::invalid_argument&) {
  }
  for (std::uint64_t s = seed; s < seed + count; ++s) {
    const TDatum D = random_tdatum(w, s);
    for (const auto& [a, phi] : D.shifts()) {
      for (Index x = 0; x < phi.src().size(); ++x) {
        for (Index y = 0; y < phi.dst().size(); ++y) {
          if (y == phi(x)) continue;
          Table t = phi.table();
          t[x] = y;
          const TDatum M = D.with_shift(a, FinMap(phi.src(), phi.dst(), t));
          const bool valid = validate_tdatum(M).passed();
          const bool functorial = validate_functor(unchecked_functor(M)).passed();
          ++report.cases;
          if (valid != functorial) {
            report.fail("seed " + std::to_string(s) + ", shift at " + a.str() + " entry " + phi.src().label(x) +
                        " -> " + phi.dst().label(y) + (valid ? ": accepted" : ": rejected") +
                        " but the induced functor " + (functorial ? "is" : "is not") + " functorial");
          }
        }
      }
    }
  }
  return report;
}

Report check_unit(std::size_t top) {
  Report report("unit object and Sym(T), levels <= " + std::to_string(top));
  const JFunctor one = unit_object({top, top});
  for (JObject a : one.window().objects()) {
    ++report.cases;
    const std::size_t expect = a.m == a.n ? factorial(a.n) : 0;
    if (one.at(a).size() != expect) {
      report.fail("|1" + a.str() + "| = " + std::to_string(one.at(a).size()) + ", expected " + std::to_string(expect));
    }
  }
  absorb(report, validate_functor(one), "unit");
  const SymTMonoid R = sym_T(top);
  absorb(report, R.construction, "Sym(T)");
  absorb(report, validate_sym_T(R), "Sym(T)");
  absorb(report, compare_unit_sym_T(top), "j^*(1)");
  return report;
}

Report check_day(Window w, std::uint64_t seed, std::size_t count) {
  Report report("Day convolution laws on " + w.str());
  for (std::uint64_t s = seed; s < seed + count; ++s) {
    const std::string ctx = "seed " + std::to_string(s);
    const JFunctor X = random_instance(w, s).functor;
    const JFunctor Y = random_instance(w, s + 1000).functor;
    for (JObject c : w.objects()) {
      const std::string here = ctx + " at " + c.str();
      absorb(report, left_unitor(X, c).report, here);
      absorb(report, right_unitor(X, c).report, here);
      const InducedMap b = braiding(X, Y, c);
      absorb(report, b.report, here);
      ++report.cases;
      if (compose(braiding(Y, X, c).map, b.map) != FinMap::identity(b.map.src())) {
        report.fail(here + ": braiding is not self-inverse");
      }
      const CoendPresentation plain = day_convolve(X, Y, c);
      const CoendPresentation again = day_convolve(X, Y, c);
      const CoendPresentation shuffled = day_convolve(X, Y, c, s);
      ++report.cases;
      if (again.partition() != plain.partition() || shuffled.partition() != plain.partition() ||
          shuffled.classes() != plain.classes()) {
        report.fail(here + ": classes depend on enumeration order");
      }
    }
  }
  const Window small{std::min<std::size_t>(w.M, 2), std::min<std::size_t>(w.N, 2)};
  std::vector<JFunctor> supports;
  for (JObject a : small.objects()) supports.push_back(point_support(small, a));
  for (std::size_t x = 0; x < supports.size(); ++x) {
    for (std::size_t y = 0; y < supports.size(); ++y) {
      const JFunctor XY = day_functor(supports[x], supports[y], small);
      for (std::size_t z = 0; z < supports.size(); ++z) {
        const JFunctor left = day_functor(XY, supports[z], small);
        const JFunctor right = day_functor(supports[x], day_functor(supports[y], supports[z], small), small);
        for (JObject c : small.objects()) {
          ++report.cases;
          if (left.at(c).size() != right.at(c).size()) {
            report.fail("associativity of cardinalities fails at " + c.str() + " for supports " +
                        small.objects()[x].str() + small.objects()[y].str() + small.objects()[z].str());
          }
        }
      }
    }
  }
  return report;
}

Report check_monoidal(Window w, std::uint64_t seed, std::size_t count) {
  Report report("monoidal comparison on " + w.str());
  for (std::uint64_t s = seed; s < seed + count; ++s) {
    const JFunctor X = random_instance(w, s).functor;
    const JFunctor Y = random_instance(w, s + 1000).functor;
    for (JObject c : w.objects()) {
      absorb(report, compare_monoidal(X, Y, c).report, "seed " + std::to_string(s) + " at " + c.str());
    }
  }
  return report;
}

Report check_prolongation(Window w, std::uint64_t seed, std::size_t count, std::size_t p_max) {
  Report report("prolonged spectra on " + w.str() + ", p <= " + std::to_string(p_max));
  for (std::uint64_t s = seed; s < seed + count; ++s) {
    const TDatum D = random_tdatum(w, s);
    for (std::size_t k = 1; k <= 3; ++k) {
      absorb(report, validate_spectrum(f_K_spt(D, letters(k)), p_max),
             "seed " + std::to_string(s) + ", |K| = " + std::to_string(k));
    }
  }
  return report;
}

Report check_components(Window w) {
  Report report = component_invariant_check(w);
  std::set<long> ids;
  for (const auto& [a, d] : components(w)) ids.insert(d);
  std::set<long> expect;
  for (long d = -static_cast<long>(w.M); d <= static_cast<long>(w.N); ++d) expect.insert(d);
  ++report.cases;
  if (ids != expect) report.fail("component ids are not exactly -M..N");
  return report;
}

std::vector<Report> run_suite(const SuiteConfig& c) {
  const Window w = c.window;
  const std::size_t shift = std::max(w.M, w.N);
  const std::size_t top = std::min(w.M, w.N);
  std::vector<std::function<Report()>> jobs{
      [&] { return check_category(w, shift); },
      [&] { return check_hom_counts(std::max<std::size_t>({4, w.M, w.N})); },
      [&] { return check_decomposition(w, shift); },
      [&] { return check_equivalence(w, c.seed, c.samples); },
      [&] { return check_invariance(w, c.seed, c.samples); },
      [&] { return check_unit(top); },
      [&] { return check_day(w, c.seed, c.samples); },
      [&] { return check_monoidal(w, c.seed, c.samples); },
      [&] { return check_prolongation(w, c.seed, c.samples, std::min<std::size_t>(2, top)); },
      [&] { return check_components(w); },
  };
  std::vector<std::future<Report>> running;
  for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
  std::vector<Report> out;
  for (auto& r : running) out.push_back(r.get());
  return out;
}

}  // namespace jspec
