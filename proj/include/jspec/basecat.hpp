#pragma once

// Finite sets as the base category: carriers, maps, Sigma_i x Sigma_n actions
// and the colimit primitives (coproduct, product, quotient).

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jspec/fincomb.hpp"

namespace jspec {

/// A finite set of distinct string labels. Elements are kept in sorted order;
/// copies share the same immutable storage.
class FinCarrier {
 public:
  FinCarrier();
  /// Throws std::invalid_argument on a duplicate label.
  explicit FinCarrier(std::vector<std::string> labels);

  static FinCarrier point(std::string label = "*");

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return size() == 0; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(Index j) const { return data_->labels[j]; }
  bool contains(std::string_view label) const;
  /// Throws std::out_of_range for an unknown label.
  Index index_of(std::string_view label) const;

  friend bool operator==(const FinCarrier& a, const FinCarrier& b) {
    return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Index> index;
  };
  std::shared_ptr<const Data> data_;
};

class FinMap {
 public:
  FinMap() = default;
  /// `table[j]` is the index in `dst` of the image of element j of `src`.
  FinMap(FinCarrier src, FinCarrier dst, std::vector<Index> table);

  static FinMap identity(const FinCarrier& c);
  /// Builds a map from a label-valued function.
  template <class F>
  static FinMap from_labels(const FinCarrier& src, const FinCarrier& dst, F&& f) {
    std::vector<Index> table(src.size());
    for (Index j = 0; j < src.size(); ++j) table[j] = dst.index_of(f(src.label(j)));
    return FinMap(src, dst, std::move(table));
  }

  const FinCarrier& src() const { return src_; }
  const FinCarrier& dst() const { return dst_; }
  const std::vector<Index>& table() const { return table_; }
  Index operator()(Index j) const { return table_[j]; }
  const std::string& apply(std::string_view label) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const FinMap&, const FinMap&) = default;

 private:
  FinCarrier src_;
  FinCarrier dst_;
  std::vector<Index> table_;
};

/// g o f.
FinMap compose(const FinMap& g, const FinMap& f);

/// Permutation of a carrier, stored as an index table.
using Table = std::vector<Index>;

/// A Sigma_i x Sigma_n action, stored on the adjacent transpositions of each
/// factor. The Coxeter relations of both factors and the cross-factor
/// commutation are verified on construction, so evaluation on arbitrary group
/// elements is independent of the chosen factorisation.
class GroupAction {
 public:
  GroupAction() = default;
  /// `left[k]` is the table of (s_k, id), `right[k]` that of (id, s_k).
  GroupAction(FinCarrier carrier, std::size_t i, std::size_t n, std::vector<Table> left,
              std::vector<Table> right);

  static GroupAction trivial(FinCarrier carrier, std::size_t i, std::size_t n);
  /// Builds the action from `act(a, b, element_index) -> element_index`,
  /// sampled on generators. The result is validated like any other.
  template <class F>
  static GroupAction from_function(const FinCarrier& carrier, std::size_t i, std::size_t n, F&& act) {
    auto sample = [&](const Permutation& a, const Permutation& b) {
      Table t(carrier.size());
      for (Index x = 0; x < carrier.size(); ++x) t[x] = act(a, b, x);
      return t;
    };
    std::vector<Table> left, right;
    for (std::size_t k = 0; k + 1 < i; ++k) {
      left.push_back(sample(Permutation::adjacent(i, k), Permutation::identity(n)));
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
      right.push_back(sample(Permutation::identity(i), Permutation::adjacent(n, k)));
    }
    return GroupAction(carrier, i, n, std::move(left), std::move(right));
  }

  const FinCarrier& carrier() const { return carrier_; }
  std::size_t left_degree() const { return i_; }
  std::size_t right_degree() const { return n_; }
  const std::vector<Table>& left_generators() const { return left_; }
  const std::vector<Table>& right_generators() const { return right_; }

  /// Table of (a, b). Throws std::invalid_argument on a degree mismatch.
  Table act_table(const Permutation& a, const Permutation& b) const;
  FinMap act(const Permutation& a, const Permutation& b) const;
  /// Applies generator letters in order; letters < i-1 are left generators,
  /// the rest are right generators offset by i-1.
  Table act_word(const std::vector<std::size_t>& letters) const;

  friend bool operator==(const GroupAction&, const GroupAction&) = default;

 private:
  FinCarrier carrier_;
  std::size_t i_ = 0;
  std::size_t n_ = 0;
  std::vector<Table> left_;
  std::vector<Table> right_;
};

/// Union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns true if two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b);
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> weight_;
};

struct Quotient {
  /// Labels are the class representatives (lexicographically least member).
  FinCarrier classes;
  FinMap projection;
};

/// Quotient by the equivalence relation generated by `relations`.
/// Throws std::out_of_range for an unknown label.
Quotient quotient(const FinCarrier& carrier,
                  const std::vector<std::pair<std::string, std::string>>& relations);

/// Same, over generator labels given in arbitrary order with index relations.
/// `class_of[g]` is the index of generator g's class in the result.
struct IndexedQuotient {
  FinCarrier classes;
  std::vector<Index> class_of;
};
IndexedQuotient quotient_indexed(const std::vector<std::string>& labels,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& relations);

struct Coproduct {
  FinCarrier carrier;
  std::vector<FinMap> injections;
};
/// Tagged disjoint union with labels "tag:elem"; tags default to part indices.
Coproduct coproduct(const std::vector<FinCarrier>& parts, std::vector<std::string> tags = {});

std::string pair_label(std::string_view a, std::string_view b);

struct Product {
  FinCarrier carrier;
  FinMap first;
  FinMap second;
};
/// Cartesian product with labels "(a,b)".
Product product(const FinCarrier& a, const FinCarrier& b);

}  // namespace jspec
