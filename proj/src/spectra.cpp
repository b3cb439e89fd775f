#include "jspec/spectra.hpp"

#include <optional>
#include <stdexcept>
#include <tuple>

namespace jspec {

namespace {

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

/// Coordinates of a K^n tuple code, most significant first.
std::vector<Index> decode_tuple(std::size_t code, std::size_t n, std::size_t base) {
  std::vector<Index> k(n);
  for (std::size_t j = n; j-- > 0;) {
    k[j] = static_cast<Index>(code % base);
    code /= base;
  }
  return k;
}

std::size_t encode_tuple(const std::vector<Index>& k, std::size_t base) {
  std::size_t code = 0;
  for (Index c : k) code = code * base + c;
  return code;
}

/// sigma . k, with (sigma . k)_{sigma(j)} = k_j.
std::vector<Index> permute(const Permutation& sigma, const std::vector<Index>& k) {
  std::vector<Index> out(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) out[sigma(static_cast<Index>(j))] = k[j];
  return out;
}

std::string tuple_label(const FinCarrier& K, const std::vector<Index>& k) {
  std::string s;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (j) s += ',';
    s += K.label(k[j]);
  }
  return s;
}

struct Part {
  std::size_t n = 0;
  FinCarrier X;
  /// Adjacent transpositions of Sigma_n acting on X.
  std::vector<Table> gens;
};

/// Coproduct over parts of (X x K^n)/Sigma_n, with generator bookkeeping.
struct Prolonged {
  std::vector<Part> parts;
  std::size_t base = 0;
  std::vector<std::size_t> offset;
  FinCarrier carrier;
  std::vector<Index> class_of;
  std::vector<std::size_t> rep;

  std::size_t generator(std::size_t part, Index x, std::size_t code) const {
    return offset[part] + x * power(base, parts[part].n) + code;
  }
  Index at(std::size_t part, Index x, std::size_t code) const { return class_of[generator(part, x, code)]; }
  std::optional<std::size_t> part_of_degree(std::size_t n) const {
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (parts[p].n == n) return p;
    }
    return std::nullopt;
  }
  /// (part, x, code) of a generator.
  std::tuple<std::size_t, Index, std::size_t> decode(std::size_t g) const {
    std::size_t p = parts.size() - 1;
    while (offset[p] > g) --p;
    const std::size_t tuples = power(base, parts[p].n);
    const std::size_t rest = g - offset[p];
    return {p, static_cast<Index>(rest / tuples), rest % tuples};
  }
};

Prolonged prolong(std::vector<Part> parts, const FinCarrier& K) {
  Prolonged out;
  out.parts = std::move(parts);
  out.base = K.size();
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t p = 0; p < out.parts.size(); ++p) {
    const Part& part = out.parts[p];
    out.offset.push_back(labels.size());
    const std::size_t tuples = power(out.base, part.n);
    const std::string prefix = "[" + std::to_string(part.n) + ";";
    for (Index x = 0; x < part.X.size(); ++x) {
      for (std::size_t code = 0; code < tuples; ++code) {
        const auto k = decode_tuple(code, part.n, out.base);
        labels.push_back(prefix + part.X.label(x) + ";" + tuple_label(K, k) + "]");
        for (std::size_t j = 0; j < part.gens.size(); ++j) {
          const auto sk = permute(Permutation::adjacent(part.n, j), k);
          relations.emplace_back(out.offset[p] + x * tuples + code,
                                 out.offset[p] + part.gens[j][x] * tuples + encode_tuple(sk, out.base));
        }
      }
    }
  }
  auto q = quotient_indexed(labels, relations);
  out.carrier = std::move(q.classes);
  out.class_of = std::move(q.class_of);
  out.rep.assign(out.carrier.size(), 0);
  for (std::size_t g = 0; g < labels.size(); ++g) {
    if (labels[g] == out.carrier.label(out.class_of[g])) out.rep[out.class_of[g]] = g;
  }
  return out;
}

/// Rows of the datum as prolongations; level i keeps n <= N - M + i.
std::vector<Prolonged> prolong_rows(const TDatum& D, const FinCarrier& K) {
  const Window w = D.window();
  std::vector<Prolonged> rows;
  for (std::size_t i = 0; i <= w.M; ++i) {
    std::vector<Part> parts;
    for (std::size_t n = 0; n <= w.N && n + w.M <= w.N + i; ++n) {
      const auto& act = D.action({i, n});
      parts.push_back({n, act.carrier(), act.right_generators()});
    }
    rows.push_back(prolong(std::move(parts), K));
  }
  return rows;
}

Table compose_tables(const Table& second, const Table& first) {
  Table out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = second[first[x]];
  return out;
}

/// bond[x * |K| + c] for bonding i.
Table flat_bonding(const SymSpectrum& S, std::size_t i) {
  const Product prod = product(S.at(i), S.K);
  Table out(prod.carrier.size());
  const Table& t = S.bondings[i].table();
  for (Index j = 0; j < prod.carrier.size(); ++j) {
    out[prod.first(j) * S.K.size() + prod.second(j)] = t[j];
  }
  return out;
}

FinMap unflatten(const FinCarrier& level, const FinCarrier& K, const FinCarrier& next, const Table& flat) {
  const Product prod = product(level, K);
  Table t(prod.carrier.size());
  for (Index j = 0; j < prod.carrier.size(); ++j) t[j] = flat[prod.first(j) * K.size() + prod.second(j)];
  return FinMap(prod.carrier, next, std::move(t));
}

}  // namespace

FinCarrier f_K(const SymSeq& X, const FinCarrier& K) {
  std::vector<Part> parts;
  for (std::size_t n = 0; n < X.levels.size(); ++n) {
    const auto& act = X.levels[n];
    if (act.left_degree() != n || act.right_degree() != 0) {
      throw std::invalid_argument("symmetric sequence: level " + std::to_string(n) + " has the wrong degree");
    }
    parts.push_back({n, act.carrier(), act.left_generators()});
  }
  return prolong(std::move(parts), K).carrier;
}

SymSpectrum f_K_spt(const TDatum& D, const FinCarrier& K) {
  const Report r = validate_tdatum(D);
  if (!r.passed()) throw std::invalid_argument("invalid T-datum: " + r.violations.front());
  const auto rows = prolong_rows(D, K);
  SymSpectrum S;
  S.K = K;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Prolonged& P = rows[i];
    S.levels.push_back(GroupAction::from_function(P.carrier, i, 0, [&](const Permutation& a, const Permutation&, Index c) {
      const auto [p, x, code] = P.decode(P.rep[c]);
      const Index ax = D.action({i, P.parts[p].n}).act_table(a, Permutation::identity(P.parts[p].n))[x];
      return P.at(p, ax, code);
    }));
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const Prolonged& P = rows[i];
    const Prolonged& Q = rows[i + 1];
    constexpr Index kUnset = ~Index{0};
    Table flat(P.carrier.size() * K.size(), kUnset);
    for (std::size_t g = 0; g < P.class_of.size(); ++g) {
      const auto [p, x, code] = P.decode(g);
      const std::size_t n = P.parts[p].n;
      const auto q = Q.part_of_degree(n + 1);
      if (!q) throw std::logic_error("prolongation: bonding leaves the window");
      const Index fx = D.shift({i, n})(x);
      for (Index c = 0; c < K.size(); ++c) {
        const Index v = Q.at(*q, fx, code * K.size() + c);
        Index& slot = flat[P.class_of[g] * K.size() + c];
        if (slot != kUnset && slot != v) throw std::logic_error("prolongation: bonding is not well defined");
        slot = v;
      }
    }
    S.bondings.push_back(unflatten(P.carrier, K, Q.carrier, flat));
  }
  return S;
}

SymSpectrum suspension_spectrum(const FinCarrier& K, std::size_t top) {
  SymSpectrum S;
  S.K = K;
  const std::size_t k = K.size();
  // index[i][code] and its inverse, since labels need not sort in code order.
  std::vector<Table> index(top + 1), code_at(top + 1);
  for (std::size_t i = 0; i <= top; ++i) {
    const std::size_t tuples = power(k, i);
    std::vector<std::string> labels;
    for (std::size_t code = 0; code < tuples; ++code) {
      labels.push_back("(" + tuple_label(K, decode_tuple(code, i, k)) + ")");
    }
    const FinCarrier P(labels);
    index[i].resize(tuples);
    code_at[i].resize(tuples);
    for (std::size_t code = 0; code < tuples; ++code) {
      index[i][code] = P.index_of(labels[code]);
      code_at[i][index[i][code]] = static_cast<Index>(code);
    }
    S.levels.push_back(GroupAction::from_function(P, i, 0, [&](const Permutation& a, const Permutation&, Index x) {
      return index[i][encode_tuple(permute(a, decode_tuple(code_at[i][x], i, k)), k)];
    }));
  }
  for (std::size_t i = 0; i < top; ++i) {
    Table flat(S.at(i).size() * k);
    for (Index x = 0; x < S.at(i).size(); ++x) {
      for (Index c = 0; c < k; ++c) flat[x * k + c] = index[i + 1][code_at[i][x] * k + c];
    }
    S.bondings.push_back(unflatten(S.at(i), K, S.at(i + 1), flat));
  }
  return S;
}

Report validate_spectrum(const SymSpectrum& S, std::size_t p_max) {
  Report r("spectrum");
  const std::size_t top = S.top();
  if (S.bondings.size() != top) {
    r.fail("expected " + std::to_string(top) + " bonding maps, got " + std::to_string(S.bondings.size()));
    return r;
  }
  for (std::size_t i = 0; i <= top; ++i) {
    ++r.cases;
    if (S.levels[i].left_degree() != i || S.levels[i].right_degree() != 0) {
      r.fail("level " + std::to_string(i) + " does not carry a Sigma_" + std::to_string(i) + " action");
    }
    if (i < top && (!(S.bondings[i].src() == product(S.at(i), S.K).carrier) || !(S.bondings[i].dst() == S.at(i + 1)))) {
      r.fail("bonding " + std::to_string(i) + " does not run level_" + std::to_string(i) + " x K -> level_" +
             std::to_string(i + 1));
    }
  }
  if (!r.passed()) return r;
  std::vector<Table> flat;
  for (std::size_t i = 0; i < top; ++i) flat.push_back(flat_bonding(S, i));
  const std::size_t k = S.K.size();
  for (std::size_t p = 1; p <= p_max; ++p) {
    const std::size_t tuples = power(k, p);
    const auto sigma_p = enumerate_permutations(p);
    for (std::size_t i = 0; i + p <= top; ++i) {
      const std::size_t xs = S.at(i).size();
      // ib[x * tuples + code]
      Table ib(xs * tuples);
      for (Index x = 0; x < xs; ++x) {
        for (std::size_t code = 0; code < tuples; ++code) {
          Index v = x;
          for (std::size_t t = 0; t < p; ++t) v = flat[i + t][v * k + decode_tuple(code, p, k)[t]];
          ib[x * tuples + code] = v;
        }
      }
      for (const auto& a : enumerate_permutations(i)) {
        const Table ta = S.levels[i].act_table(a, Permutation::identity(0));
        for (const auto& g : sigma_p) {
          const Table tag = S.levels[i + p].act_table(direct_sum(a, g), Permutation::identity(0));
          for (Index x = 0; x < xs; ++x) {
            for (std::size_t code = 0; code < tuples; ++code) {
              ++r.cases;
              const std::size_t gc = encode_tuple(permute(g, decode_tuple(code, p, k)), k);
              if (ib[ta[x] * tuples + gc] != tag[ib[x * tuples + code]]) {
                r.fail("iterated bonding at i=" + std::to_string(i) + ", p=" + std::to_string(p) +
                       " is not equivariant for a=[" + dotted(a.images()) + "], g=[" + dotted(g.images()) + "]");
              }
            }
          }
        }
      }
    }
  }
  return r;
}

std::vector<FinMap> spectrum_map(const TDatum& src, const TDatum& dst, const DatumMap& h, const FinCarrier& K) {
  const Report r = validate_datum_map(src, dst, h);
  if (!r.passed()) throw std::invalid_argument("invalid datum map: " + r.violations.front());
  const auto from = prolong_rows(src, K);
  const auto to = prolong_rows(dst, K);
  std::vector<FinMap> out;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Prolonged& P = from[i];
    const Prolonged& Q = to[i];
    Table t(P.carrier.size());
    for (Index c = 0; c < t.size(); ++c) {
      const auto [p, x, code] = P.decode(P.rep[c]);
      t[c] = Q.at(p, h.components.at({i, P.parts[p].n})(x), code);
    }
    out.emplace_back(P.carrier, Q.carrier, std::move(t));
  }
  return out;
}

Report validate_spectrum_map(const SymSpectrum& src, const SymSpectrum& dst, const std::vector<FinMap>& h) {
  Report r("spectrum map");
  if (!(src.K == dst.K) || src.top() != dst.top() || h.size() != src.levels.size()) {
    r.fail("spectra or components do not match in shape");
    return r;
  }
  for (std::size_t i = 0; i <= src.top(); ++i) {
    if (!(h[i].src() == src.at(i)) || !(h[i].dst() == dst.at(i))) {
      r.fail("component " + std::to_string(i) + " has the wrong carriers");
      return r;
    }
    for (std::size_t k = 0; k < src.levels[i].left_generators().size(); ++k) {
      ++r.cases;
      if (compose_tables(h[i].table(), src.levels[i].left_generators()[k]) !=
          compose_tables(dst.levels[i].left_generators()[k], h[i].table())) {
        r.fail("component " + std::to_string(i) + " is not equivariant for generator " + std::to_string(k + 1));
      }
    }
  }
  const std::size_t k = src.K.size();
  for (std::size_t i = 0; i < src.top(); ++i) {
    const Table a = flat_bonding(src, i);
    const Table b = flat_bonding(dst, i);
    for (Index x = 0; x < src.at(i).size(); ++x) {
      for (Index c = 0; c < k; ++c) {
        ++r.cases;
        if (h[i + 1](a[x * k + c]) != b[h[i](x) * k + c]) {
          r.fail("components do not commute with bonding " + std::to_string(i));
        }
      }
    }
  }
  return r;
}

}  // namespace jspec
