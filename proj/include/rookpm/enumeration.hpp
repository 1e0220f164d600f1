#ifndef ROOKPM_ENUMERATION_HPP_
#define ROOKPM_ENUMERATION_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/errors.hpp"

namespace rookpm {

// Right Cayley table of a closure, with one witness word per element.
// Elements appear in BFS discovery order (generator-lexicographic): the
// identity first when present, then products elements[i] * generators[g]
// scanned in (i, g) order.
struct MonoidTable {
  int degree = 0;
  bool has_identity = false;
  std::vector<RookPartition> elements;
  std::vector<RookPartition> generators;
  std::vector<std::string> gen_names;
  std::vector<std::vector<std::uint32_t>> right_action;    // [element][generator]
  std::vector<std::pair<std::int32_t, std::int32_t>> via;  // (parent, generator), -1 parent = seed

  std::size_t size() const { return elements.size(); }

  std::optional<std::uint32_t> index_of(const RookPartition& d) const {
    auto it = index_.find(d);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Witness word for an element, as generator indices.
  std::vector<int> witness(std::uint32_t idx) const {
    std::vector<int> out;
    std::int32_t cur = static_cast<std::int32_t>(idx);
    while (cur >= 0) {
      auto [parent, gen] = via[static_cast<std::size_t>(cur)];
      if (gen >= 0) out.push_back(gen);
      cur = parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::string witness_text(std::uint32_t idx) const {
    std::string out;
    for (int g : witness(idx)) {
      if (!out.empty()) out += " ";
      out += gen_names[static_cast<std::size_t>(g)];
    }
    return out;
  }

  std::unordered_map<RookPartition, std::uint32_t, RookPartitionHash> index_;
};

inline MonoidTable closure(int degree, const std::vector<RookPartition>& generators,
                           bool include_identity, std::uint64_t cap = UINT64_MAX,
                           std::vector<std::string> gen_names = {}) {
  MonoidTable t;
  t.degree = degree;
  t.has_identity = include_identity;
  t.generators = generators;
  if (gen_names.empty())
    for (std::size_t g = 0; g < generators.size(); ++g) gen_names.push_back("g" + std::to_string(g));
  if (gen_names.size() != generators.size())
    throw UsageError("closure: generator name list has the wrong length");
  t.gen_names = std::move(gen_names);

  auto push = [&](const RookPartition& d, std::int32_t parent, std::int32_t gen) -> std::uint32_t {
    auto it = t.index_.find(d);
    if (it != t.index_.end()) return it->second;
    if (t.elements.size() >= cap)
      throw CapExceeded("closure hit the element cap", t.elements.size(), t.elements.size());
    auto idx = static_cast<std::uint32_t>(t.elements.size());
    t.index_.emplace(d, idx);
    t.elements.push_back(d);
    t.via.emplace_back(parent, gen);
    return idx;
  };

  if (include_identity) push(RookPartition::identity(degree), -1, -1);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].degree() != degree)
      throw DegreeMismatch("closure: generator degree " + std::to_string(generators[g].degree()) +
                           " at degree " + std::to_string(degree));
    if (!include_identity) push(generators[g], -1, static_cast<std::int32_t>(g));
  }

  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    t.right_action.emplace_back(generators.size(), 0);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      RookPartition prod = t.elements[i] * generators[g];
      t.right_action[i][g] =
          push(prod, static_cast<std::int32_t>(i), static_cast<std::int32_t>(g));
    }
  }
  return t;
}

// --- independent counting oracle -------------------------------------------

namespace detail {

// Count the set partitions of a k-element set by explicitly walking
// restricted-growth strings.
inline std::uint64_t count_set_partitions(int k) {
  if (k == 0) return 1;
  std::uint64_t count = 0;
  std::vector<int> rgs(static_cast<std::size_t>(k), 0);
  // depth-first over restricted growth strings: rgs[i] <= 1 + max(prefix)
  std::function<void(int, int)> walk = [&](int pos, int maxv) {
    if (pos == k) {
      ++count;
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[static_cast<std::size_t>(pos)] = v;
      walk(pos + 1, std::max(maxv, v));
    }
  };
  walk(0, -1);
  return count;
}

}  // namespace detail

// Number of partial set partitions of an m-element set: pairs (S, P) with
// S a subset and P a set partition of S. Computed by explicit enumeration,
// not a closed formula, so it can serve as an independent oracle. Guarded
// at m <= 12.
inline std::uint64_t bell_oracle(int m) {
  if (m < 0) throw UsageError("bell_oracle needs m >= 0");
  if (m > 12) throw TooLarge("bell_oracle is guarded at m <= 12, got " + std::to_string(m));
  std::uint64_t total = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    total += detail::count_set_partitions(__builtin_popcount(mask));
  return total;
}

// Every rook partition diagram of degree n, constructed directly: choose the
// support subset of the 2n vertices, then partition it. Deterministic order.
inline std::vector<RookPartition> all_rook_partitions(int n) {
  if (n < 0) throw UsageError("degree must be >= 0");
  if (2 * n > 16) throw TooLarge("all_rook_partitions is guarded at degree <= 8");
  std::vector<RookPartition> out;
  const int m = 2 * n;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < m; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    const int k = static_cast<int>(verts.size());
    std::vector<int> rgs(static_cast<std::size_t>(std::max(k, 1)), 0);
    std::function<void(int, int)> walk = [&](int pos, int maxv) {
      if (pos == k) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxv + 1));
        for (int idx = 0; idx < k; ++idx)
          blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(idx)])].push_back(
              verts[static_cast<std::size_t>(idx)]);
        out.push_back(RookPartition::from_blocks(n, blocks));
        return;
      }
      for (int v = 0; v <= maxv + 1; ++v) {
        rgs[static_cast<std::size_t>(pos)] = v;
        walk(pos + 1, std::max(maxv, v));
      }
    };
    walk(0, -1);
  }
  return out;
}

// --- generating set search --------------------------------------------------

struct GenSetSearchResult {
  bool found = false;
  std::vector<std::uint32_t> witness;  // element indices into the table
  std::uint64_t candidates_tested = 0;
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ull << 62)) return r;  // saturate well above any usable guard
  }
  return r;
}

// Semigroup closure of a set of table elements, bounded by the table size;
// returns the number of distinct table elements reached, or nullopt if a
// product escapes the table.
inline std::optional<std::size_t> closure_size_within(
    const MonoidTable& table, const std::vector<const RookPartition*>& seed) {
  std::vector<char> in(table.size(), 0);
  std::vector<std::uint32_t> frontier;
  std::size_t count = 0;
  auto add = [&](const RookPartition& d) -> bool {
    auto idx = table.index_of(d);
    if (!idx) return false;
    if (!in[*idx]) {
      in[*idx] = 1;
      frontier.push_back(*idx);
      ++count;
    }
    return true;
  };
  for (const RookPartition* d : seed)
    if (!add(*d)) return std::nullopt;
  std::vector<std::uint32_t> seeds = frontier;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const RookPartition& left = table.elements[frontier[head]];
    for (std::uint32_t s : seeds)
      if (!add(left * table.elements[s])) return std::nullopt;
  }
  return count;
}

}  // namespace detail

// Search for a k-element generating subset of the table (as a semigroup:
// every table element must be a nonempty product of chosen elements).
// Candidates are scanned in lexicographic index order and the first witness
// is returned. The search space C(|table|, k) is guarded by `limit`.
//
// Prune: elements of rank < n form an ideal, so the full-rank elements of
// the table can only be products of full-rank candidate members; candidates
// whose unit part fails to generate the table's unit part are skipped.
inline GenSetSearchResult search_generating_sets(const MonoidTable& table, int k,
                                                 std::uint64_t limit = 1000000,
                                                 bool use_prune = true) {
  const std::size_t N = table.size();
  if (k < 0 || static_cast<std::size_t>(k) > N)
    throw UsageError("generating set size k out of range");
  if (detail::binomial(N, static_cast<std::uint64_t>(k)) > limit)
    throw SearchTooLarge("C(" + std::to_string(N) + "," + std::to_string(k) +
                         ") exceeds the search guard of " + std::to_string(limit));

  const int n = table.degree;
  std::vector<char> is_unit(N, 0);
  std::vector<std::uint32_t> units;
  for (std::size_t i = 0; i < N; ++i)
    if (stats(table.elements[i]).rank == n) {
      is_unit[i] = 1;
      units.push_back(static_cast<std::uint32_t>(i));
    }

  GenSetSearchResult res;
  std::vector<std::uint32_t> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);

  auto advance = [&]() -> bool {
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] ==
                         static_cast<std::uint32_t>(N - static_cast<std::size_t>(k) +
                                                    static_cast<std::size_t>(i)))
      --i;
    if (i < 0) return false;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  };

  if (k == 0) {
    res.candidates_tested = 1;
    res.found = N == 0;
    return res;
  }

  while (true) {
    ++res.candidates_tested;
    bool viable = true;
    if (use_prune && !units.empty()) {
      // unit products stay units, so the closure of the candidate's unit
      // part must already cover every unit of the table
      std::vector<const RookPartition*> unit_seed;
      for (std::uint32_t idx : comb)
        if (is_unit[idx]) unit_seed.push_back(&table.elements[idx]);
      if (unit_seed.empty()) {
        viable = false;
      } else {
        auto sz = detail::closure_size_within(table, unit_seed);
        viable = sz.has_value() && *sz == units.size();
      }
    }
    if (viable) {
      std::vector<const RookPartition*> seed;
      for (std::uint32_t idx : comb) seed.push_back(&table.elements[idx]);
      auto sz = detail::closure_size_within(table, seed);
      if (sz && *sz == N) {
        res.found = true;
        res.witness.assign(comb.begin(), comb.end());
        return res;
      }
    }
    if (!advance()) break;
  }
  return res;
}

// True when `target` cannot be written as a nonempty product of table
// elements lacking the property; i.e. the property is necessary to reach it.
inline bool necessity_check(const MonoidTable& table,
                            const std::function<bool(const RookPartition&)>& has_property,
                            const RookPartition& target) {
  std::vector<const RookPartition*> seed;
  for (const RookPartition& d : table.elements)
    if (!has_property(d)) seed.push_back(&d);
  std::vector<char> in(table.size(), 0);
  std::vector<std::uint32_t> frontier;
  for (const RookPartition* d : seed) {
    auto idx = table.index_of(*d);
    if (idx && !in[*idx]) {
      in[*idx] = 1;
      frontier.push_back(*idx);
    }
  }
  std::vector<std::uint32_t> seeds = frontier;
  for (std::size_t head = 0; head < frontier.size(); ++head)
    for (std::uint32_t s : seeds) {
      auto idx = table.index_of(table.elements[frontier[head]] * table.elements[s]);
      if (idx && !in[*idx]) {
        in[*idx] = 1;
        frontier.push_back(*idx);
      }
    }
  auto tgt = table.index_of(target);
  if (!tgt) throw UsageError("necessity_check: target is not in the table");
  return !in[*tgt];
}

// --- exports ----------------------------------------------------------------

// One line per element: idx<TAB>diagram-literal<TAB>witness-word
inline void export_table(const MonoidTable& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.size(); ++i)
    os << i << "\t" << to_literal(t.elements[i]) << "\t"
       << t.witness_text(static_cast<std::uint32_t>(i)) << "\n";
}

// One line per Cayley edge: src<TAB>gen<TAB>dst
inline void export_cayley(const MonoidTable& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.right_action.size(); ++i)
    for (std::size_t g = 0; g < t.generators.size(); ++g)
      os << i << "\t" << t.gen_names[g] << "\t" << t.right_action[i][g] << "\n";
}

}  // namespace rookpm

#endif  // ROOKPM_ENUMERATION_HPP_
