// jspec: command-line front end.
//
// Exit status: 0 when every check passes, 1 on a verification failure,
// 2 on malformed flags or input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "jspec/checks.hpp"
#include "jspec/dayconv.hpp"
#include "jspec/equivalence.hpp"
#include "jspec/io.hpp"
#include "jspec/spectra.hpp"
#include "jspec/topo.hpp"

using namespace jspec;

namespace {

/// Bad input: reported on stderr, exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, const std::string& flag) {
  std::size_t a = 0, b = 0;
  char comma = 0, rest = 0;
  std::istringstream in(text);
  if (text.empty() || text[0] == '-' || !(in >> a >> comma >> b) || comma != ',' || (in >> rest)) {
    throw InputError(flag + ": expected two non-negative integers \"a,b\", got \"" + text + "\"");
  }
  return {a, b};
}

JObject parse_object(const std::string& text, const std::string& flag) {
  const auto [m, n] = parse_pair(text, flag);
  return {m, n};
}

Window parse_window(const std::string& text) {
  const auto [M, N] = parse_pair(text, "--window");
  return {M, N};
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("JSPEC_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used == s.size() && !s.empty() && s[0] != '-') return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("JSPEC_SEED: expected a non-negative integer, got \"") + env + "\"");
  }
  return kDefaultSeed;
}

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return parse_json(text);
  } catch (const SchemaError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Runs a decoder, prefixing schema errors with the file name.
template <class F>
auto decode(const std::string& path, F&& f) -> decltype(f(Json{})) {
  const Json j = read_document(path);
  try {
    return f(j);
  } catch (const SchemaError& e) {
    throw InputError(path + ": " + e.what());
  }
}

JFunctor read_functor(const std::string& path) {
  return decode(path, [](const Json& j) { return jfunctor_from_json(j); });
}

TDatum read_datum(const std::string& path) {
  return decode(path, [](const Json& j) { return tdatum_from_json(j); });
}

JMorphism read_morphism(const std::string& path) {
  return decode(path, [](const Json& j) { return morphism_from_json(j); });
}

/// A functor from either schema; data go through the equivalence.
JFunctor read_any_functor(const std::string& path) {
  const Json j = read_document(path);
  try {
    if (schema_of(j) == "tdatum.v1") return tdatum_to_functor(tdatum_from_json(j));
    return jfunctor_from_json(j);
  } catch (const SchemaError& e) {
    throw InputError(path + ": " + e.what());
  }
}

FinCarrier parse_K(const std::string& text) {
  std::vector<std::string> labels;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) labels.push_back(part);
  if (!text.empty() && text.back() == ',') labels.emplace_back();
  try {
    return FinCarrier(labels);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--K: ") + e.what());
  }
}

struct Output {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;

  void document(const Json& j) const { std::cout << dump_json(j); }

  /// Prints reports and returns the exit status.
  int reports(const std::vector<Report>& reports, const Json& context) const {
    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed();
    Json ctx = context;
    if (!ctx.contains("seed")) ctx["seed"] = seed;
    if (json) {
      Json out = ctx;
      out["passed"] = passed;
      out["reports"] = Json::array();
      for (const auto& r : reports) out["reports"].push_back(to_json(r));
      document(out);
    } else {
      for (const auto& [key, value] : ctx.items()) std::cout << key << ": " << value.dump() << "\n";
      for (const auto& r : reports) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.check << " (" << r.cases << " cases)\n";
        for (const auto& v : r.violations) std::cout << "  " << v << "\n";
      }
    }
    return passed ? 0 : 1;
  }
};

/// Evaluation errors on well-formed input become failed reports.
template <class F>
Report guarded_check(const std::string& name, F&& run) {
  try {
    return run();
  } catch (const std::invalid_argument& e) {
    Report r(name);
    r.fail(e.what());
    return r;
  } catch (const std::logic_error& e) {
    Report r(name);
    r.fail(e.what());
    return r;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of the category J, T-data, Day convolution and prolonged spectra."};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.json, "Machine-readable output");
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "Seed for randomized commands (default: $JSPEC_SEED or 1)");

  std::function<int()> action;

  // hom
  auto* hom = app.add_subcommand("hom", "List or count morphisms between two objects");
  std::string hom_src, hom_dst;
  bool hom_count = false;
  hom->add_option("--src", hom_src, "Source m,n")->required();
  hom->add_option("--dst", hom_dst, "Target k,l")->required();
  hom->add_flag("--count", hom_count, "Print the number of morphisms only");
  hom->callback([&] {
    action = [&] {
      const JObject a = parse_object(hom_src, "--src"), b = parse_object(hom_dst, "--dst");
      if (hom_count) {
        if (out.json) {
          out.document({{"src", to_json(a)}, {"dst", to_json(b)}, {"count", count_hom(a, b)}});
        } else {
          std::cout << count_hom(a, b) << "\n";
        }
        return 0;
      }
      const auto homs = enumerate_hom(a, b);
      if (out.json) {
        Json list = Json::array();
        for (const auto& f : homs) list.push_back(to_json(f));
        out.document(list);
      } else {
        for (const auto& f : homs) std::cout << f.label() << "\n";
      }
      return 0;
    };
  });

  // compose
  auto* comp = app.add_subcommand("compose", "Compose two morphisms: g o f");
  std::string comp_g, comp_f;
  comp->add_option("g", comp_g, "Morphism JSON file applied second")->required();
  comp->add_option("f", comp_f, "Morphism JSON file applied first")->required();
  comp->callback([&] {
    action = [&] {
      const JMorphism g = read_morphism(comp_g), f = read_morphism(comp_f);
      if (f.dst() != g.src()) throw InputError("target of f " + f.dst().str() + " is not the source of g " + g.src().str());
      out.document(to_json(compose_j(g, f)));
      return 0;
    };
  });

  // decompose
  auto* dec = app.add_subcommand("decompose", "Canonical factorisation (a, b) o Psi_{i,n,p}");
  std::string dec_f;
  dec->add_option("f", dec_f, "Morphism JSON file")->required();
  dec->callback([&] {
    action = [&] {
      const Decomposition d = decompose(read_morphism(dec_f));
      out.document({{"a", to_json(d.a)}, {"b", to_json(d.b)}, {"p", d.p}});
      return 0;
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Verify a property");
  check->require_subcommand(1);
  auto* check_cat = check->add_subcommand("category", "Category axioms on a window");
  std::string cat_window = "2,2";
  std::optional<std::size_t> cat_shift;
  check_cat->add_option("--window", cat_window, "Window M,N")->capture_default_str();
  check_cat->add_option("--max-shift", cat_shift, "Largest shift (default: all)");
  check_cat->callback([&] {
    action = [&] {
      const Window w = parse_window(cat_window);
      const std::size_t s = cat_shift.value_or(std::max(w.M, w.N));
      return out.reports({check_category(w, s), check_decomposition(w, s)}, {{"window", to_json(JObject{w.M, w.N})}});
    };
  });
  std::string check_file;
  auto* check_fun = check->add_subcommand("functor", "Functoriality of a jfunctor.v1 document");
  check_fun->add_option("file", check_file)->required();
  check_fun->callback([&] {
    action = [&] {
      const JFunctor F = read_functor(check_file);
      return out.reports({validate_functor(F)}, Json::object());
    };
  });
  auto* check_dat = check->add_subcommand("tdatum", "Conditions on a tdatum.v1 document");
  check_dat->add_option("file", check_file)->required();
  check_dat->callback([&] {
    action = [&] {
      const TDatum D = read_datum(check_file);
      return out.reports({validate_tdatum(D)}, Json::object());
    };
  });
  auto* check_rt = check->add_subcommand("roundtrip", "Equivalence roundtrip of a functor or datum");
  check_rt->add_option("file", check_file)->required();
  check_rt->callback([&] {
    action = [&] {
      const Json j = read_document(check_file);
      Report r;
      try {
        if (schema_of(j) == "tdatum.v1") {
          const TDatum D = tdatum_from_json(j);
          r = guarded_check("roundtrip", [&] { return roundtrip_check(D); });
        } else {
          const JFunctor F = jfunctor_from_json(j);
          r = guarded_check("roundtrip", [&] { return roundtrip_check(F); });
        }
      } catch (const SchemaError& e) {
        throw InputError(check_file + ": " + e.what());
      }
      return out.reports({r}, Json::object());
    };
  });
  std::string mon_x, mon_y, mon_at;
  auto* check_mon = check->add_subcommand("monoidal", "Comparison of the two tensor products");
  check_mon->add_option("X", mon_x, "Functor or datum")->required();
  check_mon->add_option("Y", mon_y, "Functor or datum")->required();
  check_mon->add_option("--at", mon_at, "Object k,l (default: every object of the common window)");
  check_mon->callback([&] {
    action = [&] {
      const JFunctor X = read_any_functor(mon_x), Y = read_any_functor(mon_y);
      std::vector<JObject> targets;
      if (!mon_at.empty()) {
        targets.push_back(parse_object(mon_at, "--at"));
      } else {
        const Window w{std::min(X.window().M, Y.window().M), std::min(X.window().N, Y.window().N)};
        targets = w.objects();
      }
      std::vector<Report> reports;
      for (JObject c : targets) {
        if (!X.window().contains(c) || !Y.window().contains(c)) throw InputError("--at: " + c.str() + " lies outside a window");
        reports.push_back(guarded_check("monoidal comparison at " + c.str(),
                                        [&] { return compare_monoidal(X, Y, c).report; }));
      }
      return out.reports(reports, Json::object());
    };
  });
  std::size_t pmax = 2;
  auto* check_spt = check->add_subcommand("spectrum", "Bonding equivariance of a spectrum.v1 document");
  check_spt->add_option("file", check_file)->required();
  check_spt->add_option("--pmax", pmax, "Largest iterate")->capture_default_str();
  check_spt->callback([&] {
    action = [&] {
      const SymSpectrum S = decode(check_file, [](const Json& j) { return spectrum_from_json(j); });
      return out.reports({validate_spectrum(S, pmax)}, Json::object());
    };
  });

  // convert
  auto* conv = app.add_subcommand("convert", "Convert between jfunctor.v1 and tdatum.v1");
  std::string conv_file, conv_to;
  conv->add_option("file", conv_file)->required();
  conv->add_option("--to", conv_to)->required()->check(CLI::IsMember({"functor", "tdatum"}));
  conv->callback([&] {
    action = [&] {
      if (conv_to == "functor") {
        const TDatum D = read_datum(conv_file);
        try {
          const Evaluator ev(D);
        } catch (const std::invalid_argument& e) {
          throw InputError(conv_file + ": " + e.what());
        }
        out.document(to_json(tdatum_to_functor(D).materialize()));
      } else {
        const JFunctor F = read_functor(conv_file);
        try {
          out.document(to_json(functor_to_tdatum(F)));
        } catch (const std::invalid_argument& e) {
          throw InputError(conv_file + ": " + e.what());
        }
      }
      return 0;
    };
  });

  // convolve
  auto* cv = app.add_subcommand("convolve", "Day convolution at one object");
  std::string cv_x, cv_y, cv_at;
  bool cv_classes = false;
  cv->add_option("X", cv_x, "Functor or datum")->required();
  cv->add_option("Y", cv_y, "Functor or datum")->required();
  cv->add_option("--at", cv_at, "Object k,l")->required();
  cv->add_flag("--classes", cv_classes, "List the members of every class");
  cv->callback([&] {
    action = [&] {
      const JFunctor X = read_any_functor(cv_x), Y = read_any_functor(cv_y);
      const JObject c = parse_object(cv_at, "--at");
      if (!X.window().contains(c) || !Y.window().contains(c)) throw InputError("--at: " + c.str() + " lies outside a window");
      const CoendPresentation P = day_convolve(X, Y, c);
      if (out.json) {
        out.document(to_json(P, cv_classes));
      } else {
        std::cout << P.classes().size() << " classes at " << c.str() << " (" << P.generator_count() << " generators, "
                  << P.relation_count() << " relations)\n";
        const auto parts = P.partition();
        for (Index k = 0; k < P.classes().size(); ++k) {
          std::cout << "  " << P.classes().label(k) << "\n";
          if (cv_classes) {
            for (const auto& m : parts[k]) std::cout << "    " << m << "\n";
          }
        }
      }
      return 0;
    };
  });

  // prolong
  auto* pro = app.add_subcommand("prolong", "Symmetric K-spectrum of a T-datum");
  std::string pro_file, pro_K;
  pro->add_option("file", pro_file, "tdatum.v1 or jfunctor.v1 document")->required();
  pro->add_option("--K", pro_K, "Comma-separated labels of K")->required();
  pro->callback([&] {
    action = [&] {
      const FinCarrier K = parse_K(pro_K);
      const Json j = read_document(pro_file);
      TDatum D;
      try {
        D = schema_of(j) == "jfunctor.v1" ? functor_to_tdatum(jfunctor_from_json(j)) : tdatum_from_json(j);
        out.document(to_json(f_K_spt(D, K)));
      } catch (const SchemaError& e) {
        throw InputError(pro_file + ": " + e.what());
      } catch (const std::invalid_argument& e) {
        throw InputError(pro_file + ": " + e.what());
      }
      return 0;
    };
  });

  // pi0
  auto* pi0 = app.add_subcommand("pi0", "Connected components of a window of J");
  std::string pi0_window = "2,2";
  bool pi0_dot = false;
  pi0->add_option("--window", pi0_window, "Window M,N")->capture_default_str();
  pi0->add_flag("--dot", pi0_dot, "Emit the category graph in DOT");
  pi0->callback([&] {
    action = [&] {
      const Window w = parse_window(pi0_window);
      if (pi0_dot) {
        std::cout << components_dot(w);
        return 0;
      }
      std::map<long, std::vector<JObject>> by_id;
      for (const auto& [a, d] : components(w)) by_id[d].push_back(a);
      if (out.json) {
        Json list = Json::array();
        for (const auto& [d, objs] : by_id) {
          Json members = Json::array();
          for (JObject a : objs) members.push_back(to_json(a));
          list.push_back({{"id", d}, {"objects", members}});
        }
        out.document({{"window", to_json(JObject{w.M, w.N})}, {"count", by_id.size()}, {"components", list}});
      } else {
        for (const auto& [d, objs] : by_id) {
          std::cout << "n-m=" << d << ":";
          for (JObject a : objs) std::cout << " " << a.str();
          std::cout << "\n";
        }
        std::cout << by_id.size() << " components\n";
      }
      return 0;
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate seeded random inputs");
  gen->require_subcommand(1);
  auto* gen_t = gen->add_subcommand("random-tdatum", "A valid random T-datum");
  std::string gen_window = "2,2";
  std::optional<std::uint64_t> gen_seed;
  gen_t->add_option("--window", gen_window, "Window M,N")->capture_default_str();
  gen_t->add_option("--seed", gen_seed, "Seed (default: $JSPEC_SEED or 1)");
  gen_t->callback([&] {
    action = [&] {
      const std::uint64_t seed = gen_seed ? *gen_seed : seed_flag ? *seed_flag : default_seed();
      out.document(to_json(random_tdatum(parse_window(gen_window), seed)));
      return 0;
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run every verification on a window");
  std::string suite_window = "2,2";
  std::size_t samples = 5;
  suite->add_option("--window", suite_window, "Window M,N")->capture_default_str();
  suite->add_option("--samples", samples, "Random instances per seeded check")->capture_default_str();
  suite->callback([&] {
    action = [&] {
      SuiteConfig config{parse_window(suite_window), seed_flag ? *seed_flag : default_seed(), samples};
      return out.reports(run_suite(config), {{"window", to_json(JObject{config.window.M, config.window.N})},
                                             {"seed", config.seed},
                                             {"samples", config.samples}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    out.seed = seed_flag ? *seed_flag : default_seed();
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
