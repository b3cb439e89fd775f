#include "jspec/fincomb.hpp"

#include <algorithm>
#include <numeric>

namespace jspec {

namespace {

bool distinct_below(const std::vector<Index>& values, std::size_t bound) {
  std::vector<bool> seen(bound, false);
  for (Index v : values) {
    if (v >= bound || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool strictly_increasing(const std::vector<Index>& values) {
  return std::adjacent_find(values.begin(), values.end(),
                            [](Index a, Index b) { return a >= b; }) == values.end();
}

}  // namespace

Injection::Injection(std::size_t codomain_size, std::vector<Index> images)
    : codomain_(codomain_size), images_(std::move(images)) {
  if (images_.size() > codomain_) {
    throw std::invalid_argument("injection: domain larger than codomain");
  }
  if (!distinct_below(images_, codomain_)) {
    throw std::invalid_argument("injection: images must be distinct and within the codomain");
  }
}

Injection Injection::identity(std::size_t n) { return front(n, n); }

Injection Injection::front(std::size_t m, std::size_t k) {
  std::vector<Index> img(m);
  std::iota(img.begin(), img.end(), Index{0});
  return Injection(k, std::move(img));
}

bool Injection::hits(Index x) const {
  return std::find(images_.begin(), images_.end(), x) != images_.end();
}

Index Injection::preimage(Index x) const {
  auto it = std::find(images_.begin(), images_.end(), x);
  if (it == images_.end()) return static_cast<Index>(codomain_);
  return static_cast<Index>(it - images_.begin());
}

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  if (!distinct_below(images_, images_.size())) {
    throw std::invalid_argument("permutation: image table is not a bijection");
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent(std::size_t n, std::size_t k) {
  if (k + 1 >= n) throw std::invalid_argument("adjacent transposition out of range");
  auto p = identity(n);
  std::swap(p.images_[k], p.images_[k + 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != j) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) inv[images_[j]] = static_cast<Index>(j);
  return Permutation(std::move(inv));
}

std::vector<std::size_t> Permutation::adjacent_word() const {
  // Peel descents: if a(j) > a(j+1) then a = (a o s_j) o s_j with one
  // inversion fewer in a o s_j. The peeled letters, in order, are applied
  // first-to-last.
  std::vector<std::size_t> word;
  std::vector<Index> a = images_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        word.push_back(j);
        changed = true;
      }
    }
  }
  return word;
}

PartialBijection::PartialBijection(std::vector<Index> sources, std::vector<Index> targets,
                                   std::vector<Index> images)
    : sources_(std::move(sources)), targets_(std::move(targets)), images_(std::move(images)) {
  if (sources_.size() != targets_.size() || images_.size() != sources_.size()) {
    throw std::invalid_argument("partial bijection: source, target and image sizes differ");
  }
  if (!strictly_increasing(sources_) || !strictly_increasing(targets_)) {
    throw std::invalid_argument("partial bijection: element lists must be strictly increasing");
  }
  auto sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != targets_) {
    throw std::invalid_argument("partial bijection: images are not a rearrangement of the targets");
  }
}

Index PartialBijection::apply(Index x) const {
  auto it = std::lower_bound(sources_.begin(), sources_.end(), x);
  if (it == sources_.end() || *it != x) {
    throw std::out_of_range("partial bijection: element outside the source set");
  }
  return images_[static_cast<std::size_t>(it - sources_.begin())];
}

Injection compose(const Injection& g, const Injection& f) {
  if (f.codomain_size() != g.domain_size()) {
    throw std::invalid_argument("compose: injection size mismatch");
  }
  std::vector<Index> img(f.domain_size());
  for (std::size_t j = 0; j < img.size(); ++j) img[j] = g(f(static_cast<Index>(j)));
  return Injection(g.codomain_size(), std::move(img));
}

Permutation compose(const Permutation& g, const Permutation& f) {
  if (f.degree() != g.degree()) throw std::invalid_argument("compose: permutation degree mismatch");
  std::vector<Index> img(f.degree());
  for (std::size_t j = 0; j < img.size(); ++j) img[j] = g(f(static_cast<Index>(j)));
  return Permutation(std::move(img));
}

std::vector<Index> sorted_complement(const Injection& f) {
  std::vector<bool> hit(f.codomain_size(), false);
  for (Index v : f.images()) hit[v] = true;
  std::vector<Index> out;
  out.reserve(f.codomain_size() - f.domain_size());
  for (std::size_t x = 0; x < hit.size(); ++x) {
    if (!hit[x]) out.push_back(static_cast<Index>(x));
  }
  return out;
}

Permutation block_shuffle(std::size_t p, std::size_t q) {
  std::vector<Index> img(p + q);
  for (std::size_t j = 0; j < p; ++j) img[j] = static_cast<Index>(j + q);
  for (std::size_t j = p; j < p + q; ++j) img[j] = static_cast<Index>(j - p);
  return Permutation(std::move(img));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<Index> img = a.images();
  const auto offset = static_cast<Index>(a.degree());
  for (Index v : b.images()) img.push_back(v + offset);
  return Permutation(std::move(img));
}

std::vector<Injection> enumerate_injections(std::size_t m, std::size_t k) {
  std::vector<Injection> out;
  if (m > k) return out;
  std::vector<Index> current;
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self) -> void {
    if (current.size() == m) {
      out.emplace_back(k, current);
      return;
    }
    for (Index v = 0; v < k; ++v) {
      if (used[v]) continue;
      used[v] = true;
      current.push_back(v);
      self(self);
      current.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<Permutation> enumerate_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto img = Permutation::identity(n).images();
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t j = 2; j <= n; ++j) r *= j;
  return r;
}

std::string dotted(std::span<const Index> values) {
  std::string s;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) s += '.';
    s += std::to_string(values[j] + 1);
  }
  return s;
}

}  // namespace jspec
