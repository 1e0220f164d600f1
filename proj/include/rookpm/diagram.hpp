#ifndef ROOKPM_DIAGRAM_HPP_
#define ROOKPM_DIAGRAM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rookpm/errors.hpp"

namespace rookpm {

namespace detail {

inline std::size_t hash_combine(std::size_t lhs, std::size_t rhs) {
  lhs ^= rhs + 0x9e3779b9 + (lhs << 6) + (lhs >> 2);
  return lhs;
}

// Minimal union-find over a contiguous index range, used by the diagram
// product. Path halving keeps it allocation-free beyond the parent array.
class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    for (int i = 0; i < size; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // keep the smaller index as root
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// A rook partition diagram of degree n: a set partition of a subset of the
// 2n vertices {1..n} (upper row) and {1'..n'} (lower row). Vertices outside
// every block are "rook dots".
//
// Internal vertex numbering: upper i -> i-1, lower i' -> n+i-1, so vertices
// live in [0, 2n). block_of(v) is a dense block id, or kRook for rook dots.
// Block ids are canonical: ordered by the least vertex they contain.
class RookPartition {
 public:
  static constexpr int kRook = -1;

  RookPartition() : n_(0) { rehash(); }

  // Identity diagram: blocks {i, i'} for every i.
  static RookPartition identity(int n) {
    check_degree(n);
    RookPartition d;
    d.n_ = n;
    d.block_of_.assign(2 * static_cast<std::size_t>(n), kRook);
    for (int i = 0; i < n; ++i) {
      d.block_of_[i] = i;
      d.block_of_[n + i] = i;
    }
    d.rehash();
    return d;
  }

  // Build from explicit blocks over internal vertex ids. Vertices omitted
  // from every block become rook dots.
  static RookPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    check_degree(n);
    RookPartition d;
    d.n_ = n;
    d.block_of_.assign(2 * static_cast<std::size_t>(n), kRook);
    int next = 0;
    for (const auto& blk : blocks) {
      if (blk.empty()) throw EmptyBlock("block #" + std::to_string(next) + " is empty");
      for (int v : blk) {
        if (v < 0 || v >= 2 * n)
          throw VertexOutOfRange("vertex " + std::to_string(v) + " at degree " + std::to_string(n));
        if (d.block_of_[v] != kRook)
          throw OverlappingBlocks("vertex " + vertex_name(v, n) + " appears in two blocks");
        d.block_of_[v] = next;
      }
      ++next;
    }
    d.canonicalize();
    d.rehash();
    return d;
  }

  int degree() const { return n_; }

  int num_blocks() const {
    int m = 0;
    for (int b : block_of_) m = std::max(m, b + 1);
    return m;
  }

  int block_of(int v) const { return block_of_[check_vertex(v)]; }
  bool is_rook(int v) const { return block_of_[check_vertex(v)] == kRook; }

  // Internal vertex ids for 1-based row positions.
  int upper(int i) const { return check_pos(i) - 1; }
  int lower(int i) const { return n_ + check_pos(i) - 1; }

  // Blocks as sorted internal vertex lists, in canonical id order.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks()));
    for (int v = 0; v < 2 * n_; ++v)
      if (block_of_[v] != kRook) out[static_cast<std::size_t>(block_of_[v])].push_back(v);
    return out;
  }

  bool operator==(const RookPartition& o) const {
    return n_ == o.n_ && block_of_ == o.block_of_;
  }
  bool operator!=(const RookPartition& o) const { return !(*this == o); }

  // Arbitrary total order (degree, then block assignment); used to keep
  // algebra elements and reports deterministic.
  bool operator<(const RookPartition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return block_of_ < o.block_of_;
  }

  std::size_t hash() const { return hash_; }

  const std::vector<int>& raw() const { return block_of_; }

 private:
  static void check_degree(int n) {
    if (n < 0) throw UnsupportedDegree("degree must be non-negative, got " + std::to_string(n));
  }

  int check_vertex(int v) const {
    if (v < 0 || v >= 2 * n_)
      throw VertexOutOfRange("vertex " + std::to_string(v) + " at degree " + std::to_string(n_));
    return v;
  }

  int check_pos(int i) const {
    if (i < 1 || i > n_)
      throw VertexOutOfRange("row position " + std::to_string(i) + " at degree " + std::to_string(n_));
    return i;
  }

  static std::string vertex_name(int v, int n) {
    return v < n ? std::to_string(v + 1) : std::to_string(v - n + 1) + "'";
  }

  // Relabel block ids densely in order of first occurrence.
  void canonicalize() {
    std::vector<int> relabel(block_of_.size(), -2);
    int next = 0;
    for (int& b : block_of_) {
      if (b == kRook) continue;
      if (relabel[static_cast<std::size_t>(b)] == -2) relabel[static_cast<std::size_t>(b)] = next++;
      b = relabel[static_cast<std::size_t>(b)];
    }
  }

  void rehash() {
    std::size_t h = std::hash<int>{}(n_);
    for (int b : block_of_) h = detail::hash_combine(h, static_cast<std::size_t>(b + 1));
    hash_ = h;
  }

  friend std::pair<RookPartition, int> compose(const RookPartition&, const RookPartition&);
  friend RookPartition involute(const RookPartition&);

  int n_;
  std::vector<int> block_of_;
  std::size_t hash_ = 0;
};

struct RookPartitionHash {
  std::size_t operator()(const RookPartition& d) const { return d.hash(); }
};

// Product of two diagrams together with the twist m(a, b): the number of
// components of the stacked 3n-vertex graph that consist entirely of
// non-rook middle vertices. Middle vertex i is a rook point of the glued
// graph when i' is a rook dot of a or i is a rook dot of b; any component
// touching a rook point turns its top/bottom vertices into rook dots of the
// product.
inline std::pair<RookPartition, int> compose(const RookPartition& a, const RookPartition& b) {
  if (a.n_ != b.n_)
    throw DegreeMismatch("compose: degrees " + std::to_string(a.n_) + " and " + std::to_string(b.n_));
  const int n = a.n_;
  // Node layout: [0,n) top (a upper), [n,2n) middle (a lower glued to b
  // upper), [2n,3n) bottom (b lower).
  detail::UnionFind uf(3 * n);
  for (int v = 1; v < 2 * n; ++v) {
    int bb = a.block_of_[v];
    if (bb == RookPartition::kRook) continue;
    for (int u = 0; u < v; ++u)
      if (a.block_of_[u] == bb) {
        uf.unite(u, v);
        break;
      }
  }
  for (int v = 1; v < 2 * n; ++v) {
    int bb = b.block_of_[v];
    if (bb == RookPartition::kRook) continue;
    for (int u = 0; u < v; ++u)
      if (b.block_of_[u] == bb) {
        uf.unite(u + n, v + n);
        break;
      }
  }

  std::vector<char> white(static_cast<std::size_t>(3 * n), 0);
  for (int i = 0; i < n; ++i) {
    if (a.block_of_[i] == RookPartition::kRook) white[static_cast<std::size_t>(i)] = 1;
    if (a.block_of_[n + i] == RookPartition::kRook || b.block_of_[i] == RookPartition::kRook)
      white[static_cast<std::size_t>(n + i)] = 1;
    if (b.block_of_[n + i] == RookPartition::kRook) white[static_cast<std::size_t>(2 * n + i)] = 1;
  }

  // Per-component flags, indexed by union-find root.
  std::vector<char> comp_white(static_cast<std::size_t>(3 * n), 0);
  std::vector<char> comp_outer(static_cast<std::size_t>(3 * n), 0);
  for (int v = 0; v < 3 * n; ++v) {
    int r = uf.find(v);
    if (white[static_cast<std::size_t>(v)]) comp_white[static_cast<std::size_t>(r)] = 1;
    if (v < n || v >= 2 * n) comp_outer[static_cast<std::size_t>(r)] = 1;
  }

  int twist = 0;
  for (int v = 0; v < 3 * n; ++v)
    if (uf.find(v) == v && !comp_outer[static_cast<std::size_t>(v)] &&
        !comp_white[static_cast<std::size_t>(v)])
      ++twist;

  RookPartition out;
  out.n_ = n;
  out.block_of_.assign(2 * static_cast<std::size_t>(n), RookPartition::kRook);
  std::vector<int> label(static_cast<std::size_t>(3 * n), -1);
  int next = 0;
  for (int v = 0; v < 2 * n; ++v) {
    const int node = v < n ? v : v + n;
    const int r = uf.find(node);
    if (comp_white[static_cast<std::size_t>(r)]) continue;  // rook dot in the product
    if (label[static_cast<std::size_t>(r)] == -1) label[static_cast<std::size_t>(r)] = next++;
    out.block_of_[v] = label[static_cast<std::size_t>(r)];
  }
  out.rehash();
  return {std::move(out), twist};
}

inline RookPartition operator*(const RookPartition& a, const RookPartition& b) {
  return compose(a, b).first;
}

// The * involution: flip the diagram upside down (upper i <-> lower i').
inline RookPartition involute(const RookPartition& a) {
  const int n = a.n_;
  RookPartition out;
  out.n_ = n;
  out.block_of_.assign(2 * static_cast<std::size_t>(n), RookPartition::kRook);
  for (int v = 0; v < 2 * n; ++v) {
    const int src = v < n ? v + n : v - n;
    out.block_of_[v] = a.block_of_[src];
  }
  out.canonicalize();
  out.rehash();
  return out;
}

// --- statistics -----------------------------------------------------------

// ker / coker are encoded as canonical class-id vectors over [n] (0-based
// ids assigned in order of least member; rook dots are singleton classes).
struct DiagramStats {
  int rank = 0;
  std::vector<int> dom;    // 1-based, sorted
  std::vector<int> codom;  // 1-based, sorted
  std::vector<int> ker;    // size n
  std::vector<int> coker;  // size n
  std::vector<int> supp;   // internal vertex ids of non-rook vertices, sorted
};

inline DiagramStats stats(const RookPartition& d) {
  const int n = d.degree();
  DiagramStats s;
  const int nb = d.num_blocks();
  std::vector<char> has_upper(static_cast<std::size_t>(nb), 0);
  std::vector<char> has_lower(static_cast<std::size_t>(nb), 0);
  for (int v = 0; v < 2 * n; ++v) {
    int b = d.block_of(v);
    if (b == RookPartition::kRook) continue;
    (v < n ? has_upper : has_lower)[static_cast<std::size_t>(b)] = 1;
  }
  for (int b = 0; b < nb; ++b)
    if (has_upper[static_cast<std::size_t>(b)] && has_lower[static_cast<std::size_t>(b)]) ++s.rank;
  for (int i = 1; i <= n; ++i) {
    int bu = d.block_of(i - 1);
    if (bu != RookPartition::kRook && has_lower[static_cast<std::size_t>(bu)]) s.dom.push_back(i);
    int bl = d.block_of(n + i - 1);
    if (bl != RookPartition::kRook && has_upper[static_cast<std::size_t>(bl)]) s.codom.push_back(i);
  }

  auto classes = [&](int offset) {
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::vector<int> seen(static_cast<std::size_t>(nb), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      int b = d.block_of(offset + i);
      if (b == RookPartition::kRook) {
        cls[static_cast<std::size_t>(i)] = next++;
      } else {
        if (seen[static_cast<std::size_t>(b)] == -1) seen[static_cast<std::size_t>(b)] = next++;
        cls[static_cast<std::size_t>(i)] = seen[static_cast<std::size_t>(b)];
      }
    }
    return cls;
  };
  s.ker = classes(0);
  s.coker = classes(n);

  for (int v = 0; v < 2 * n; ++v)
    if (!d.is_rook(v)) s.supp.push_back(v);
  return s;
}

inline bool is_trivial_partition(const std::vector<int>& cls) {
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i] != static_cast<int>(i)) return false;
  return true;
}

// true when every class of `fine` lies inside a class of `coarse`.
inline bool partition_refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
  if (fine.size() != coarse.size()) return false;
  std::vector<int> image(fine.size(), -1);
  for (std::size_t i = 0; i < fine.size(); ++i) {
    int f = fine[i];
    if (image[static_cast<std::size_t>(f)] == -1) image[static_cast<std::size_t>(f)] = coarse[i];
    else if (image[static_cast<std::size_t>(f)] != coarse[i]) return false;
  }
  return true;
}

struct Membership {
  bool in_Pn = false;  // full support (no rook dots)
  bool in_In = false;  // partial injections inside Pn
  bool in_Jn = false;  // every block transversal
  bool in_Sn = false;  // permutations
  bool in_Rn = false;  // injective partial maps with rook dots off dom/codom
  bool singular = false;  // rank < n
};

inline Membership classify(const RookPartition& d) {
  const int n = d.degree();
  DiagramStats s = stats(d);
  Membership m;
  m.in_Pn = static_cast<int>(s.supp.size()) == 2 * n;
  const bool flat = is_trivial_partition(s.ker) && is_trivial_partition(s.coker);
  m.in_In = m.in_Pn && flat;
  m.in_Jn = m.in_Pn && static_cast<int>(s.dom.size()) == n && static_cast<int>(s.codom.size()) == n;
  m.in_Sn = s.rank == n;
  std::vector<int> dc;
  for (int i : s.dom) dc.push_back(i - 1);
  for (int i : s.codom) dc.push_back(n + i - 1);
  std::sort(dc.begin(), dc.end());
  m.in_Rn = flat && dc == s.supp;
  m.singular = s.rank < n;
  return m;
}

// --- literal format -------------------------------------------------------
//
//   n=<int>; <block>(; <block>)*
//
// where a block is a comma-separated list of vertex tokens: `<int>` for an
// upper vertex, `<int>'` for a lower one. Vertices absent from every block
// are rook dots. The all-rook diagram prints as "n=<int>;".

inline std::string to_literal(const RookPartition& d) {
  std::ostringstream os;
  os << "n=" << d.degree() << ";";
  const auto blocks = d.blocks();
  const int n = d.degree();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << " ";
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      int v = blocks[b][k];
      if (k) os << ",";
      if (v < n) os << (v + 1);
      else os << (v - n + 1) << "'";
    }
    if (b + 1 < blocks.size()) os << ";";
  }
  return os.str();
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline int parse_int(const std::string& s, const std::string& what) {
  if (s.empty()) throw ParseError("expected integer for " + what);
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' for " + what);
  }
  if (pos != s.size()) throw ParseError("bad integer '" + s + "' for " + what);
  return v;
}

}  // namespace detail

inline RookPartition parse_literal(const std::string& text) {
  auto chunks = detail::split(text, ';');
  if (chunks.empty()) throw ParseError("empty diagram literal");
  std::string head = detail::trim(chunks[0]);
  if (head.rfind("n=", 0) != 0) throw ParseError("diagram literal must start with n=<int>");
  int n = detail::parse_int(detail::trim(head.substr(2)), "degree");
  if (n < 0) throw UnsupportedDegree("degree must be non-negative, got " + std::to_string(n));

  std::vector<std::vector<int>> blocks;
  for (std::size_t c = 1; c < chunks.size(); ++c) {
    std::string chunk = detail::trim(chunks[c]);
    if (chunk.empty()) {
      if (c + 1 == chunks.size()) continue;  // trailing separator
      throw EmptyBlock("empty block in literal");
    }
    std::vector<int> blk;
    for (const std::string& rawtok : detail::split(chunk, ',')) {
      std::string tok = detail::trim(rawtok);
      if (tok.empty()) throw ParseError("empty vertex token in literal");
      bool lower = false;
      if (tok.back() == '\'') {
        lower = true;
        tok.pop_back();
        tok = detail::trim(tok);
      }
      int i = detail::parse_int(tok, "vertex");
      if (i < 1 || i > n)
        throw VertexOutOfRange("vertex " + tok + (lower ? "'" : "") + " at degree " + std::to_string(n));
      blk.push_back(lower ? n + i - 1 : i - 1);
    }
    blocks.push_back(std::move(blk));
  }
  return RookPartition::from_blocks(n, blocks);
}

}  // namespace rookpm

namespace std {
template <>
struct hash<rookpm::RookPartition> {
  std::size_t operator()(const rookpm::RookPartition& d) const { return d.hash(); }
};
}  // namespace std

#endif  // ROOKPM_DIAGRAM_HPP_
