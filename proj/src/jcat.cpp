#include "jspec/jcat.hpp"

#include <stdexcept>

namespace jspec {

std::string JObject::str() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

JMorphism::JMorphism(JObject src, JObject dst, Injection phi, Injection psi,
                     PartialBijection alpha)
    : src_(src), dst_(dst), phi_(std::move(phi)), psi_(std::move(psi)), alpha_(std::move(alpha)) {
  if (phi_.domain_size() != src_.m || phi_.codomain_size() != dst_.m) {
    throw std::invalid_argument("morphism: phi does not run " + std::to_string(src_.m) + " -> " +
                                std::to_string(dst_.m));
  }
  if (psi_.domain_size() != src_.n || psi_.codomain_size() != dst_.n) {
    throw std::invalid_argument("morphism: psi does not run " + std::to_string(src_.n) + " -> " +
                                std::to_string(dst_.n));
  }
  if (alpha_.sources() != sorted_complement(phi_) || alpha_.targets() != sorted_complement(psi_)) {
    throw std::invalid_argument("morphism: alpha must run between the complements of phi and psi");
  }
}

JMorphism JMorphism::from_tables(JObject src, JObject dst, std::vector<Index> phi,
                                 std::vector<Index> psi, std::vector<Index> alpha) {
  Injection f(dst.m, std::move(phi));
  Injection g(dst.n, std::move(psi));
  auto cf = sorted_complement(f);
  auto cg = sorted_complement(g);
  PartialBijection a(std::move(cf), std::move(cg), std::move(alpha));
  return JMorphism(src, dst, std::move(f), std::move(g), std::move(a));
}

JMorphism JMorphism::permutation_pair(const Permutation& a, const Permutation& b) {
  JObject obj{a.degree(), b.degree()};
  return JMorphism(obj, obj, a.as_injection(), b.as_injection(), PartialBijection{});
}

bool JMorphism::is_identity() const {
  return src_ == dst_ && phi_ == Injection::identity(src_.m) &&
         psi_ == Injection::identity(src_.n);
}

std::string JMorphism::label() const {
  return "<" + dotted(phi_.images()) + ";" + dotted(psi_.images()) + ";" +
         dotted(alpha_.images()) + ">";
}

JMorphism identity_j(JObject a) {
  return JMorphism(a, a, Injection::identity(a.m), Injection::identity(a.n), PartialBijection{});
}

JMorphism compose_j(const JMorphism& g, const JMorphism& f) {
  if (f.dst() != g.src()) {
    throw std::invalid_argument("compose_j: " + f.dst().str() + " does not match " +
                                g.src().str());
  }
  Injection phi = compose(g.phi(), f.phi());
  Injection psi = compose(g.psi(), f.psi());
  auto sources = sorted_complement(phi);
  auto targets = sorted_complement(psi);
  std::vector<Index> images;
  images.reserve(sources.size());
  for (Index x : sources) {
    const Index y = g.phi().preimage(x);
    if (y < g.phi().domain_size()) {
      // x lies in g.phi(complement of f.phi): transport f.alpha along g.
      images.push_back(g.psi()(f.alpha().apply(y)));
    } else {
      images.push_back(g.alpha().apply(x));
    }
  }
  return JMorphism(f.src(), g.dst(), std::move(phi), std::move(psi),
                   PartialBijection(std::move(sources), std::move(targets), std::move(images)));
}

bool hom_exists(JObject src, JObject dst) {
  return dst.m >= src.m && dst.n >= src.n && dst.m - src.m == dst.n - src.n;
}

std::uint64_t count_hom(JObject src, JObject dst) {
  if (!hom_exists(src, dst)) return 0;
  const std::size_t p = dst.m - src.m;
  return factorial(dst.m) / factorial(p) * factorial(dst.n);
}

std::vector<JMorphism> enumerate_hom(JObject src, JObject dst) {
  std::vector<JMorphism> out;
  if (!hom_exists(src, dst)) return out;
  const std::size_t p = dst.m - src.m;
  const auto perms = enumerate_permutations(p);
  for (const auto& phi : enumerate_injections(src.m, dst.m)) {
    const auto cphi = sorted_complement(phi);
    for (const auto& psi : enumerate_injections(src.n, dst.n)) {
      const auto cpsi = sorted_complement(psi);
      for (const auto& w : perms) {
        std::vector<Index> images(p);
        for (std::size_t t = 0; t < p; ++t) images[t] = cpsi[w(static_cast<Index>(t))];
        out.emplace_back(src, dst, phi, psi, PartialBijection(cphi, cpsi, std::move(images)));
      }
    }
  }
  return out;
}

JObject tensor_obj(JObject a, JObject b) { return {a.m + b.m, a.n + b.n}; }

namespace {

Injection block_injection(const Injection& f, const Injection& g) {
  std::vector<Index> img = f.images();
  const auto offset = static_cast<Index>(f.codomain_size());
  for (Index v : g.images()) img.push_back(v + offset);
  return Injection(f.codomain_size() + g.codomain_size(), std::move(img));
}

}  // namespace

JMorphism tensor_mor(const JMorphism& f, const JMorphism& g) {
  const auto km = static_cast<Index>(f.dst().m);
  const auto kn = static_cast<Index>(f.dst().n);
  std::vector<Index> sources = f.alpha().sources();
  std::vector<Index> targets = f.alpha().targets();
  std::vector<Index> images = f.alpha().images();
  for (Index x : g.alpha().sources()) sources.push_back(x + km);
  for (Index y : g.alpha().targets()) targets.push_back(y + kn);
  for (Index y : g.alpha().images()) images.push_back(y + kn);
  return JMorphism(tensor_obj(f.src(), g.src()), tensor_obj(f.dst(), g.dst()),
                   block_injection(f.phi(), g.phi()), block_injection(f.psi(), g.psi()),
                   PartialBijection(std::move(sources), std::move(targets), std::move(images)));
}

JMorphism symmetry_iso(JObject a, JObject b) {
  return JMorphism::permutation_pair(block_shuffle(a.m, b.m), block_shuffle(a.n, b.n));
}

JMorphism standard_map(std::size_t i, std::size_t n, std::size_t p) {
  std::vector<Index> sources(p), targets(p);
  for (std::size_t t = 0; t < p; ++t) {
    sources[t] = static_cast<Index>(i + t);
    targets[t] = static_cast<Index>(n + t);
  }
  auto images = targets;
  return JMorphism({i, n}, {i + p, n + p}, Injection::front(i, i + p), Injection::front(n, n + p),
                   PartialBijection(std::move(sources), std::move(targets), std::move(images)));
}

std::pair<Permutation, Permutation> iota_embed(const Permutation& g, std::size_t i,
                                               std::size_t n) {
  return {direct_sum(Permutation::identity(i), g), direct_sum(Permutation::identity(n), g)};
}

Decomposition decompose(const JMorphism& f) {
  std::vector<Index> a = f.phi().images();
  std::vector<Index> b = f.psi().images();
  const auto& alpha = f.alpha();
  for (std::size_t t = 0; t < alpha.size(); ++t) {
    a.push_back(alpha.sources()[t]);
    b.push_back(alpha.images()[t]);
  }
  return {Permutation(std::move(a)), Permutation(std::move(b)), f.shift()};
}

JMorphism recompose(const Decomposition& d, JObject src) {
  return compose_j(JMorphism::permutation_pair(d.a, d.b), standard_map(src.m, src.n, d.p));
}

}  // namespace jspec
