#include "jspec/basecat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jspec {

FinCarrier::FinCarrier() : FinCarrier(std::vector<std::string>{}) {}

FinCarrier::FinCarrier(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw std::invalid_argument("carrier: duplicate label '" + *dup + "'");
  auto data = std::make_shared<Data>();
  data->index.reserve(labels.size());
  for (std::size_t j = 0; j < labels.size(); ++j) data->index.emplace(labels[j], static_cast<Index>(j));
  data->labels = std::move(labels);
  data_ = std::move(data);
}

FinCarrier FinCarrier::point(std::string label) {
  return FinCarrier(std::vector<std::string>{std::move(label)});
}

bool FinCarrier::contains(std::string_view label) const {
  return data_->index.find(std::string(label)) != data_->index.end();
}

Index FinCarrier::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) throw std::out_of_range("unknown label '" + std::string(label) + "'");
  return it->second;
}

FinMap::FinMap(FinCarrier src, FinCarrier dst, std::vector<Index> table)
    : src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {
  if (table_.size() != src_.size()) throw std::invalid_argument("map: table is not total on the source");
  for (Index v : table_) {
    if (v >= dst_.size()) throw std::invalid_argument("map: image outside the target");
  }
}

FinMap FinMap::identity(const FinCarrier& c) {
  std::vector<Index> t(c.size());
  std::iota(t.begin(), t.end(), Index{0});
  return FinMap(c, c, std::move(t));
}

const std::string& FinMap::apply(std::string_view label) const {
  return dst_.label(table_[src_.index_of(label)]);
}

bool FinMap::is_injective() const {
  std::vector<bool> seen(dst_.size(), false);
  for (Index v : table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FinMap::is_surjective() const {
  std::vector<bool> seen(dst_.size(), false);
  for (Index v : table_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.dst() == g.src())) throw std::invalid_argument("compose: map carriers do not match");
  std::vector<Index> t(f.table().size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = g(f(static_cast<Index>(j)));
  return FinMap(f.src(), g.dst(), std::move(t));
}

namespace {

Table then(const Table& first, const Table& second) {
  Table out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[first[x]];
  return out;
}

bool is_identity_table(const Table& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[x] != x) return false;
  }
  return true;
}

bool commute(const Table& a, const Table& b) { return then(a, b) == then(b, a); }

void check_coxeter(const std::vector<Table>& gens, const char* factor) {
  const std::string where = std::string("action: ") + factor + " factor ";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!is_identity_table(then(gens[k], gens[k]))) {
      throw std::invalid_argument(where + "generator " + std::to_string(k + 1) + " is not an involution");
    }
    if (k + 1 < gens.size()) {
      Table st = then(gens[k], gens[k + 1]);
      if (!is_identity_table(then(then(st, st), st))) {
        throw std::invalid_argument(where + "violates the braid relation at " + std::to_string(k + 1));
      }
    }
    for (std::size_t j = k + 2; j < gens.size(); ++j) {
      if (!commute(gens[k], gens[j])) {
        throw std::invalid_argument(where + "generators " + std::to_string(k + 1) + " and " +
                                    std::to_string(j + 1) + " do not commute");
      }
    }
  }
}

}  // namespace

GroupAction::GroupAction(FinCarrier carrier, std::size_t i, std::size_t n, std::vector<Table> left,
                         std::vector<Table> right)
    : carrier_(std::move(carrier)), i_(i), n_(n), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != (i_ ? i_ - 1 : 0) || right_.size() != (n_ ? n_ - 1 : 0)) {
    throw std::invalid_argument("action: wrong number of generator tables");
  }
  for (const auto* gens : {&left_, &right_}) {
    for (const auto& t : *gens) {
      if (t.size() != carrier_.size()) throw std::invalid_argument("action: table size mismatch");
      FinMap m(carrier_, carrier_, t);
      if (!m.is_bijective()) throw std::invalid_argument("action: generator is not a bijection");
    }
  }
  check_coxeter(left_, "left");
  check_coxeter(right_, "right");
  for (const auto& a : left_) {
    for (const auto& b : right_) {
      if (!commute(a, b)) throw std::invalid_argument("action: the two factors do not commute");
    }
  }
}

GroupAction GroupAction::trivial(FinCarrier carrier, std::size_t i, std::size_t n) {
  Table id(carrier.size());
  std::iota(id.begin(), id.end(), Index{0});
  std::vector<Table> left(i ? i - 1 : 0, id), right(n ? n - 1 : 0, id);
  return GroupAction(std::move(carrier), i, n, std::move(left), std::move(right));
}

Table GroupAction::act_word(const std::vector<std::size_t>& letters) const {
  Table out(carrier_.size());
  std::iota(out.begin(), out.end(), Index{0});
  const std::size_t nleft = left_.size();
  for (std::size_t letter : letters) {
    const Table& g = letter < nleft ? left_.at(letter) : right_.at(letter - nleft);
    for (auto& x : out) x = g[x];
  }
  return out;
}

Table GroupAction::act_table(const Permutation& a, const Permutation& b) const {
  if (a.degree() != i_ || b.degree() != n_) {
    throw std::invalid_argument("action: group element has degrees (" + std::to_string(a.degree()) +
                                "," + std::to_string(b.degree()) + "), expected (" +
                                std::to_string(i_) + "," + std::to_string(n_) + ")");
  }
  std::vector<std::size_t> letters = a.adjacent_word();
  for (std::size_t k : b.adjacent_word()) letters.push_back(k + left_.size());
  return act_word(letters);
}

FinMap GroupAction::act(const Permutation& a, const Permutation& b) const {
  return FinMap(carrier_, carrier_, act_table(a, b));
}

DisjointSet::DisjointSet(std::size_t n) : parent_(n), weight_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (weight_[a] < weight_[b]) std::swap(a, b);
  parent_[b] = a;
  weight_[a] += weight_[b];
  return true;
}

IndexedQuotient quotient_indexed(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
  DisjointSet dsu(labels.size());
  for (const auto& [a, b] : relations) dsu.unite(a, b);
  // Least label per root.
  std::vector<std::size_t> least(labels.size(), labels.size());
  for (std::size_t g = 0; g < labels.size(); ++g) {
    const std::size_t r = dsu.find(g);
    if (least[r] == labels.size() || labels[g] < labels[least[r]]) least[r] = g;
  }
  std::vector<std::string> reps;
  for (std::size_t g = 0; g < labels.size(); ++g) {
    if (dsu.find(g) == g) reps.push_back(labels[least[g]]);
  }
  FinCarrier classes(std::move(reps));
  std::vector<Index> class_of(labels.size());
  for (std::size_t g = 0; g < labels.size(); ++g) {
    class_of[g] = classes.index_of(labels[least[dsu.find(g)]]);
  }
  return {std::move(classes), std::move(class_of)};
}

Quotient quotient(const FinCarrier& carrier,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  rel.reserve(relations.size());
  for (const auto& [a, b] : relations) rel.emplace_back(carrier.index_of(a), carrier.index_of(b));
  auto q = quotient_indexed(carrier.labels(), rel);
  FinMap proj(carrier, q.classes, q.class_of);
  return {std::move(q.classes), std::move(proj)};
}

Coproduct coproduct(const std::vector<FinCarrier>& parts, std::vector<std::string> tags) {
  if (tags.empty()) {
    for (std::size_t j = 0; j < parts.size(); ++j) tags.push_back(std::to_string(j));
  }
  if (tags.size() != parts.size()) throw std::invalid_argument("coproduct: one tag per part required");
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (const auto& e : parts[j].labels()) labels.push_back(tags[j] + ":" + e);
  }
  FinCarrier sum(std::move(labels));
  std::vector<FinMap> injections;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    injections.push_back(
        FinMap::from_labels(parts[j], sum, [&](const std::string& e) { return tags[j] + ":" + e; }));
  }
  return {std::move(sum), std::move(injections)};
}

std::string pair_label(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 3);
  s += '(';
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

Product product(const FinCarrier& a, const FinCarrier& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& x : a.labels()) {
    for (const auto& y : b.labels()) labels.push_back(pair_label(x, y));
  }
  FinCarrier prod(std::move(labels));
  std::vector<Index> first(prod.size()), second(prod.size());
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = 0; y < b.size(); ++y) {
      const Index j = prod.index_of(pair_label(a.label(x), b.label(y)));
      first[j] = x;
      second[j] = y;
    }
  }
  return {prod, FinMap(prod, a, std::move(first)), FinMap(prod, b, std::move(second))};
}

}  // namespace jspec
