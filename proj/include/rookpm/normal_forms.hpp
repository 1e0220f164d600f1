#ifndef ROOKPM_NORMAL_FORMS_HPP_
#define ROOKPM_NORMAL_FORMS_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/errors.hpp"
#include "rookpm/words.hpp"

namespace rookpm {

// --- beta . gamma . delta factorization over P_n -----------------------------
//
// beta folds the kernel classes (blocks K u K'), delta folds the cokernel
// classes, and gamma is the partial injection pairing min of the upper part
// of each transversal block with min of its lower part.

struct BgdFactors {
  RookPartition beta, gamma, delta;
};

namespace detail {

inline std::vector<std::vector<int>> classes_from_ids(const std::vector<int>& ids) {
  int m = 0;
  for (int c : ids) m = std::max(m, c + 1);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < ids.size(); ++i)
    out[static_cast<std::size_t>(ids[i])].push_back(static_cast<int>(i) + 1);
  return out;
}

inline RookPartition fold_classes(int n, const std::vector<std::vector<int>>& classes) {
  std::vector<std::vector<int>> blocks;
  for (const auto& K : classes) {
    std::vector<int> blk;
    for (int i : K) blk.push_back(i - 1);
    for (int i : K) blk.push_back(n + i - 1);
    blocks.push_back(std::move(blk));
  }
  return RookPartition::from_blocks(n, blocks);
}

}  // namespace detail

inline BgdFactors factor_bgd(const RookPartition& a) {
  const int n = a.degree();
  if (!classify(a).in_Pn)
    throw NotInPn("factorization requires full support, got " + to_literal(a));
  DiagramStats st = stats(a);
  BgdFactors f{detail::fold_classes(n, detail::classes_from_ids(st.ker)), RookPartition(),
               detail::fold_classes(n, detail::classes_from_ids(st.coker))};

  std::vector<std::vector<int>> gamma_blocks;
  std::vector<char> used_upper(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> used_lower(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& blk : a.blocks()) {
    int min_u = 0, min_l = 0;
    for (int v : blk) {
      if (v < n && (min_u == 0 || v + 1 < min_u)) min_u = v + 1;
      if (v >= n && (min_l == 0 || v - n + 1 < min_l)) min_l = v - n + 1;
    }
    if (min_u && min_l) {
      gamma_blocks.push_back({min_u - 1, n + min_l - 1});
      used_upper[static_cast<std::size_t>(min_u)] = 1;
      used_lower[static_cast<std::size_t>(min_l)] = 1;
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!used_upper[static_cast<std::size_t>(i)]) gamma_blocks.push_back({i - 1});
    if (!used_lower[static_cast<std::size_t>(i)]) gamma_blocks.push_back({n + i - 1});
  }
  f.gamma = RookPartition::from_blocks(n, gamma_blocks);
  return f;
}

// --- rook factorization ------------------------------------------------------
//
// P and Q collect the upper / lower rook dots; beta replaces them by one
// extra upper block P and one extra lower block Q', so a = o_P . beta . o_Q.

struct RookFactors {
  std::vector<int> p, q;  // 1-based, sorted
  RookPartition beta;
};

inline RookFactors factor_rook(const RookPartition& a) {
  const int n = a.degree();
  RookFactors f;
  for (int i = 1; i <= n; ++i) {
    if (a.is_rook(a.upper(i))) f.p.push_back(i);
    if (a.is_rook(a.lower(i))) f.q.push_back(i);
  }
  std::vector<std::vector<int>> blocks = a.blocks();
  if (!f.p.empty()) {
    std::vector<int> blk;
    for (int i : f.p) blk.push_back(i - 1);
    blocks.push_back(std::move(blk));
  }
  if (!f.q.empty()) {
    std::vector<int> blk;
    for (int i : f.q) blk.push_back(n + i - 1);
    blocks.push_back(std::move(blk));
  }
  f.beta = RookPartition::from_blocks(n, blocks);
  return f;
}

// --- word for a fold element of J_n -----------------------------------------
//
// Accepts exactly the elements whose blocks all have the shape K u K'; the
// word is the product of the consecutive-join words t_K, ordered by min K.

inline std::vector<Tok> word_for_Jn(const RookPartition& a) {
  const int n = a.degree();
  for (int v = 0; v < 2 * n; ++v)
    if (a.is_rook(v)) throw NotSymmetricJn("rook dot in " + to_literal(a));
  std::vector<Tok> out;
  for (const auto& blk : a.blocks()) {
    std::vector<int> up, lo;
    for (int v : blk) (v < n ? up : lo).push_back(v < n ? v + 1 : v - n + 1);
    if (up.empty() || up != lo)
      throw NotSymmetricJn("block is not of the shape K u K' in " + to_literal(a));
    if (up.size() >= 2) {
      auto t = tA_tokens(up);
      out.insert(out.end(), t.begin(), t.end());
    }
  }
  return out;
}

// --- constructive word for a singular partial injection ----------------------
//
// Builds a as a product of the partial-map generators e_{i,j}, each expanded
// as e_i t_{ij} e_j. Moves act on the right: g' = g . e_{i,j} maps the
// g-preimage of j to i, kills the g-preimage of i, and fixes the rest.

namespace detail {

// a as a partial injection: img[x] = g(x) or 0, for x in 1..n
inline std::vector<int> partial_map_of(const RookPartition& a) {
  const int n = a.degree();
  std::vector<int> img(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> upper_of_block(static_cast<std::size_t>(a.num_blocks()), 0);
  for (int i = 1; i <= n; ++i) {
    int b = a.block_of(a.upper(i));
    if (b != RookPartition::kRook) upper_of_block[static_cast<std::size_t>(b)] = i;
  }
  for (int i = 1; i <= n; ++i) {
    int b = a.block_of(a.lower(i));
    if (b != RookPartition::kRook && upper_of_block[static_cast<std::size_t>(b)] != 0)
      img[static_cast<std::size_t>(upper_of_block[static_cast<std::size_t>(b)])] = i;
  }
  return img;
}

}  // namespace detail

// The raw move list (i, j), exposed for inspection and tests.
inline std::vector<std::pair<int, int>> in_moves(const RookPartition& a) {
  const int n = a.degree();
  Membership mem = classify(a);
  if (!mem.in_In || !mem.singular)
    throw NotSingularIn("expected a singular partial injection, got " + to_literal(a));
  std::vector<std::pair<int, int>> moves;
  if (n == 1) return moves;  // handled by the caller via e_1 directly

  const std::vector<int> img = detail::partial_map_of(a);
  std::vector<int> dom, cod;
  std::vector<char> in_dom(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> in_cod(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 1; x <= n; ++x)
    if (img[static_cast<std::size_t>(x)]) {
      dom.push_back(x);
      cod.push_back(img[static_cast<std::size_t>(x)]);
      in_dom[static_cast<std::size_t>(x)] = 1;
      in_cod[static_cast<std::size_t>(img[static_cast<std::size_t>(x)])] = 1;
    }
  std::vector<int> K;
  for (int x = 1; x <= n; ++x)
    if (!in_dom[static_cast<std::size_t>(x)] && !in_cod[static_cast<std::size_t>(x)])
      K.push_back(x);

  // phase 1: kill the points outside dom u cod
  if (dom.empty()) {
    // rank zero: K = [n]; a double move empties the first two points
    moves.emplace_back(K[0], K[1]);
    moves.emplace_back(K[0], K[1]);
    for (std::size_t t = 2; t < K.size(); ++t) moves.emplace_back(K[t], K[0]);
  } else if (!K.empty()) {
    const int j = dom.front();
    const int x0 = K.front();
    moves.emplace_back(x0, j);
    moves.emplace_back(j, x0);
    for (std::size_t t = 1; t < K.size(); ++t) moves.emplace_back(K[t], x0);
  }

  // split the functional digraph into paths (sources outside cod) and cycles
  std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> paths;
  for (int x : dom) {
    if (in_cod[static_cast<std::size_t>(x)]) continue;
    std::vector<int> path{x};
    int cur = x;
    while (img[static_cast<std::size_t>(cur)]) {
      cur = img[static_cast<std::size_t>(cur)];
      path.push_back(cur);
    }
    for (int v : path) on_path[static_cast<std::size_t>(v)] = 1;
    paths.push_back(std::move(path));
  }
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : dom) {
    if (on_path[static_cast<std::size_t>(x)] || seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cyc{x};
    seen[static_cast<std::size_t>(x)] = 1;
    int cur = img[static_cast<std::size_t>(x)];
    while (cur != x) {
      cyc.push_back(cur);
      seen[static_cast<std::size_t>(cur)] = 1;
      cur = img[static_cast<std::size_t>(cur)];
    }
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));  // fixed points need no moves
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a_, const auto& b_) { return a_.front() < b_.front(); });
  std::sort(paths.begin(), paths.end(),
            [](const auto& a_, const auto& b_) { return a_.front() < b_.front(); });

  // phase 2: route each non-trivial cycle through a free point z. This must
  // precede the path phase: the first move kills whatever maps to z, which
  // after phase 1 can only be z itself.
  if (!cycles.empty()) {
    int z = 0;
    for (int x = 1; x <= n; ++x)
      if (!in_dom[static_cast<std::size_t>(x)]) {
        z = x;
        break;
      }
    for (const auto& cyc : cycles) {
      const auto m = cyc.size();
      moves.emplace_back(z, cyc[0]);
      moves.emplace_back(cyc[0], cyc[m - 1]);
      for (std::size_t t = m - 1; t >= 2; --t) moves.emplace_back(cyc[t], cyc[t - 1]);
      moves.emplace_back(cyc[1], z);
    }
  }

  // phase 3: realize each path end-first
  for (const auto& path : paths)
    for (std::size_t t = path.size() - 1; t >= 1; --t) moves.emplace_back(path[t], path[t - 1]);

  return moves;
}

inline std::vector<Tok> word_for_In_singular(const RookPartition& a) {
  Membership mem = classify(a);
  if (!mem.in_In || !mem.singular)
    throw NotSingularIn("expected a singular partial injection, got " + to_literal(a));
  if (a.degree() == 1) return {tok_e(1)};
  std::vector<Tok> out;
  for (auto [i, j] : in_moves(a)) {
    auto e = eij_tokens(i, j);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

// --- full decomposition -------------------------------------------------------
//
// Any diagram as a word over the e / t / o alphabet: units via adjacent
// transpositions, rook-dot patterns via o_A, everything else through the
// rook and fold factorizations with the routed middle.

inline std::vector<Tok> sn_word(const RookPartition& a) {
  const int n = a.degree();
  std::vector<int> p = one_line(a);
  std::vector<Tok> out;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < n; ++i)
      if (p[static_cast<std::size_t>(i - 1)] > p[static_cast<std::size_t>(i)]) {
        std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
        out.push_back(tok_s(i));
        moved = true;
      }
  }
  return out;
}

inline Word decompose(const RookPartition& a) {
  const int n = a.degree();
  Word w;
  w.alphabet = Alphabet::ETO;
  if (n == 0) return w;

  if (n == 1) {
    const bool ur = a.is_rook(a.upper(1)), lr = a.is_rook(a.lower(1));
    if (!ur && !lr) {
      if (a.block_of(a.upper(1)) != a.block_of(a.lower(1))) w.toks = {tok_e(1)};
    } else if (ur && lr) {
      w.toks = {tok_o(1)};
    } else if (lr) {
      w.toks = {tok_e(1), tok_o(1)};
    } else {
      w.toks = {tok_o(1), tok_e(1)};
    }
    return w;
  }

  if (classify(a).in_Sn) {
    w.alphabet = Alphabet::SEQO;
    w.toks = sn_word(a);
    return w;
  }

  RookFactors rf = factor_rook(a);
  if (!rf.p.empty() && a == gen_oA(n, rf.p)) {
    w.toks = oA_tokens(rf.p);
    return w;
  }

  BgdFactors bgd = factor_bgd(rf.beta);
  std::vector<Tok> toks = oA_tokens(rf.p);
  auto append = [&toks](const std::vector<Tok>& part) {
    toks.insert(toks.end(), part.begin(), part.end());
  };
  append(word_for_Jn(bgd.beta));
  if (classify(bgd.gamma).singular) append(word_for_In_singular(bgd.gamma));
  append(word_for_Jn(bgd.delta));
  append(oA_tokens(rf.q));
  w.toks = std::move(toks);
  return w;
}

}  // namespace rookpm

#endif  // ROOKPM_NORMAL_FORMS_HPP_
