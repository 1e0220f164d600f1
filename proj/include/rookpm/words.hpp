#ifndef ROOKPM_WORDS_HPP_
#define ROOKPM_WORDS_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/errors.hpp"

namespace rookpm {

// --- atomic generators ------------------------------------------------------

namespace detail {
inline void check_point(int n, int i, const char* what) {
  if (i < 1 || i > n)
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " at degree " +
                          std::to_string(n));
}
inline void check_adjacent(int n, int i, const char* what) {
  if (i < 1 || i > n - 1)
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " at degree " +
                          std::to_string(n));
}
}  // namespace detail

// e_i: identity strands except {i} and {i'} fall apart into singletons.
inline RookPartition gen_e(int n, int i) {
  detail::check_point(n, i, "e");
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    if (x == i) {
      blocks.push_back({x - 1});
      blocks.push_back({n + x - 1});
    } else {
      blocks.push_back({x - 1, n + x - 1});
    }
  }
  return RookPartition::from_blocks(n, blocks);
}

// t_ij: one big block {i, j, i', j'}, identity elsewhere.
inline RookPartition gen_t(int n, int i, int j) {
  detail::check_point(n, i, "t");
  detail::check_point(n, j, "t");
  if (i == j) throw IndexOutOfRange("t requires two distinct points, got " + std::to_string(i));
  std::vector<std::vector<int>> blocks;
  blocks.push_back({i - 1, j - 1, n + i - 1, n + j - 1});
  for (int x = 1; x <= n; ++x)
    if (x != i && x != j) blocks.push_back({x - 1, n + x - 1});
  return RookPartition::from_blocks(n, blocks);
}

// s_i: the adjacent transposition (i, i+1).
inline RookPartition gen_s(int n, int i) {
  detail::check_adjacent(n, i, "s");
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    if (x == i) blocks.push_back({x - 1, n + x});
    else if (x == i + 1) blocks.push_back({x - 1, n + x - 2});
    else blocks.push_back({x - 1, n + x - 1});
  }
  return RookPartition::from_blocks(n, blocks);
}

// q_i = t_{i,i+1}.
inline RookPartition gen_q(int n, int i) {
  detail::check_adjacent(n, i, "q");
  return gen_t(n, i, i + 1);
}

// o_i: rook dots at i and i', identity elsewhere.
inline RookPartition gen_o(int n, int i) {
  detail::check_point(n, i, "o");
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x)
    if (x != i) blocks.push_back({x - 1, n + x - 1});
  return RookPartition::from_blocks(n, blocks);
}

// Permutation diagram for the map i -> images[i-1] (1-based one-line form).
inline RookPartition perm_diagram(int n, const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != n)
    throw DegreeMismatch("one-line form has length " + std::to_string(images.size()) +
                         " at degree " + std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= n; ++x) {
    int y = images[static_cast<std::size_t>(x - 1)];
    detail::check_point(n, y, "permutation image");
    if (seen[static_cast<std::size_t>(y)])
      throw ParseError("one-line form repeats image " + std::to_string(y));
    seen[static_cast<std::size_t>(y)] = 1;
    blocks.push_back({x - 1, n + y - 1});
  }
  return RookPartition::from_blocks(n, blocks);
}

// The long cycle c = s_1 s_2 ... s_{n-1}: sends 1 -> n and k -> k-1.
inline RookPartition gen_c(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) images[static_cast<std::size_t>(x - 1)] = x == 1 ? n : x - 1;
  return perm_diagram(n, images);
}

// e_ij (i != j): the partial map j -> i with i killed; as a diagram, the
// transversal {j, i'} plus singletons {i}, {j'} and identity elsewhere.
inline RookPartition gen_eij(int n, int i, int j) {
  detail::check_point(n, i, "eij");
  detail::check_point(n, j, "eij");
  if (i == j) throw IndexOutOfRange("eij requires distinct points, got " + std::to_string(i));
  std::vector<std::vector<int>> blocks;
  blocks.push_back({j - 1, n + i - 1});
  blocks.push_back({i - 1});
  blocks.push_back({n + j - 1});
  for (int x = 1; x <= n; ++x)
    if (x != i && x != j) blocks.push_back({x - 1, n + x - 1});
  return RookPartition::from_blocks(n, blocks);
}

// o_A: rook dots on A and A', identity elsewhere.
inline RookPartition gen_oA(int n, std::vector<int> A) {
  std::sort(A.begin(), A.end());
  if (std::adjacent_find(A.begin(), A.end()) != A.end())
    throw IndexOutOfRange("oA set has a repeated point");
  std::vector<std::vector<int>> blocks;
  std::size_t k = 0;
  for (int x = 1; x <= n; ++x) {
    if (k < A.size() && A[k] == x) {
      detail::check_point(n, x, "oA");
      ++k;
      continue;
    }
    blocks.push_back({x - 1, n + x - 1});
  }
  if (k < A.size()) detail::check_point(n, A[k], "oA");
  return RookPartition::from_blocks(n, blocks);
}

// t_A: the single block A u A', identity elsewhere.
inline RookPartition gen_tA(int n, std::vector<int> A) {
  std::sort(A.begin(), A.end());
  if (std::adjacent_find(A.begin(), A.end()) != A.end())
    throw IndexOutOfRange("tA set has a repeated point");
  std::vector<std::vector<int>> blocks;
  std::vector<int> big;
  for (int x : A) {
    detail::check_point(n, x, "tA");
    big.push_back(x - 1);
  }
  for (int x : A) big.push_back(n + x - 1);
  if (!big.empty()) blocks.push_back(big);
  std::size_t k = 0;
  for (int x = 1; x <= n; ++x) {
    if (k < A.size() && A[k] == x) {
      ++k;
      continue;
    }
    blocks.push_back({x - 1, n + x - 1});
  }
  return RookPartition::from_blocks(n, blocks);
}

// One-line form of a rank-n (unit) diagram: result[i-1] = j when {i, j'} is
// a block.
inline std::vector<int> one_line(const RookPartition& d) {
  const int n = d.degree();
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  std::vector<int> lower_of_block(static_cast<std::size_t>(d.num_blocks()), 0);
  for (int y = 1; y <= n; ++y) {
    int b = d.block_of(n + y - 1);
    if (b != RookPartition::kRook) lower_of_block[static_cast<std::size_t>(b)] = y;
  }
  for (int x = 1; x <= n; ++x) {
    int b = d.block_of(x - 1);
    if (b == RookPartition::kRook || lower_of_block[static_cast<std::size_t>(b)] == 0)
      throw NotInPn("one_line: diagram is not a permutation");
    images[static_cast<std::size_t>(x - 1)] = lower_of_block[static_cast<std::size_t>(b)];
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int y : images) {
    if (seen[static_cast<std::size_t>(y)]) throw NotInPn("one_line: diagram is not a permutation");
    seen[static_cast<std::size_t>(y)] = 1;
  }
  return images;
}

// --- words ------------------------------------------------------------------

enum class Alphabet { ETO, SEQO, SEQO3, SCEQO };

inline std::string alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::ETO: return "ETO";
    case Alphabet::SEQO: return "SEQO";
    case Alphabet::SEQO3: return "SEQO3";
    case Alphabet::SCEQO: return "SCEQO";
  }
  return "?";
}

struct Tok {
  enum class Kind : std::uint8_t { S, E, Q, O, T, BareS, BareC };
  Kind kind;
  int i = 0;
  int j = 0;

  bool operator==(const Tok& o) const { return kind == o.kind && i == o.i && j == o.j; }
};

inline Tok tok_s(int i) { return Tok{Tok::Kind::S, i, 0}; }
inline Tok tok_e(int i) { return Tok{Tok::Kind::E, i, 0}; }
inline Tok tok_q(int i) { return Tok{Tok::Kind::Q, i, 0}; }
inline Tok tok_o(int i) { return Tok{Tok::Kind::O, i, 0}; }
inline Tok tok_t(int i, int j) {
  if (i > j) std::swap(i, j);
  return Tok{Tok::Kind::T, i, j};
}
inline Tok tok_bare_s() { return Tok{Tok::Kind::BareS, 0, 0}; }
inline Tok tok_bare_c() { return Tok{Tok::Kind::BareC, 0, 0}; }

struct Word {
  Alphabet alphabet = Alphabet::SEQO;
  std::vector<Tok> toks;

  bool operator==(const Word& o) const { return alphabet == o.alphabet && toks == o.toks; }
  Word& append(const Word& o) {
    toks.insert(toks.end(), o.toks.begin(), o.toks.end());
    return *this;
  }
};

// --- derived words ----------------------------------------------------------

// sigma_ij = s_{i+1} ... s_{j-1} for i < j; empty when j = i + 1.
inline std::vector<Tok> sigma_tokens(int i, int j) {
  if (i >= j) throw IndexOutOfRange("sigma requires i < j");
  std::vector<Tok> out;
  for (int k = i + 1; k <= j - 1; ++k) out.push_back(tok_s(k));
  return out;
}

// tau_ij = sigma_ij^{-1} q_i sigma_ij; tau_{i,i+1} = q_i.
inline std::vector<Tok> tau_tokens(int i, int j) {
  std::vector<Tok> sigma = sigma_tokens(i, j);
  std::vector<Tok> out(sigma.rbegin(), sigma.rend());
  out.push_back(tok_q(i));
  out.insert(out.end(), sigma.begin(), sigma.end());
  return out;
}

// t_A as a word: t_{a1,a2} t_{a2,a3} ... over ascending A; empty if |A| <= 1.
inline std::vector<Tok> tA_tokens(std::vector<int> A) {
  std::sort(A.begin(), A.end());
  if (std::adjacent_find(A.begin(), A.end()) != A.end())
    throw IndexOutOfRange("tA set has a repeated point");
  std::vector<Tok> out;
  for (std::size_t k = 0; k + 1 < A.size(); ++k) out.push_back(tok_t(A[k], A[k + 1]));
  return out;
}

// o_A as a word: o_{a1} ... o_{ak} over ascending A.
inline std::vector<Tok> oA_tokens(std::vector<int> A) {
  std::sort(A.begin(), A.end());
  if (std::adjacent_find(A.begin(), A.end()) != A.end())
    throw IndexOutOfRange("oA set has a repeated point");
  std::vector<Tok> out;
  for (int a : A) out.push_back(tok_o(a));
  return out;
}

// e_ij = e_i t_ij e_j.
inline std::vector<Tok> eij_tokens(int i, int j) {
  if (i == j) throw IndexOutOfRange("eij requires distinct points");
  return {tok_e(i), tok_t(i, j), tok_e(j)};
}

// E_i = c_i^{-1} e_1 c_i with c_i = s_1 ... s_{i-1}; so E_1 = e_1.
inline std::vector<Tok> macro_E_tokens(int i) {
  if (i < 1) throw IndexOutOfRange("E index must be >= 1");
  std::vector<Tok> out;
  for (int k = i - 1; k >= 1; --k) out.push_back(tok_s(k));
  out.push_back(tok_e(1));
  for (int k = 1; k <= i - 1; ++k) out.push_back(tok_s(k));
  return out;
}

// O_i = c_i^{-1} o_1 c_i.
inline std::vector<Tok> macro_O_tokens(int i) {
  if (i < 1) throw IndexOutOfRange("O index must be >= 1");
  std::vector<Tok> out;
  for (int k = i - 1; k >= 1; --k) out.push_back(tok_s(k));
  out.push_back(tok_o(1));
  for (int k = 1; k <= i - 1; ++k) out.push_back(tok_s(k));
  return out;
}

// Q_j = d_j^{-1} q_1 d_j with d_j = s_2 ... s_j s_1 ... s_{j-1}; Q_1 = q_1.
inline std::vector<Tok> macro_Q_tokens(int j) {
  if (j < 1) throw IndexOutOfRange("Q index must be >= 1");
  std::vector<Tok> d;
  for (int k = 2; k <= j; ++k) d.push_back(tok_s(k));
  for (int k = 1; k <= j - 1; ++k) d.push_back(tok_s(k));
  std::vector<Tok> out(d.rbegin(), d.rend());
  out.push_back(tok_q(1));
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

// S_1 = s and S_{i+1} = c^i s c^{n-i} for 1 <= i <= n-2, over the {s, c}
// letters; the degree is needed to balance the powers of c.
inline std::vector<Tok> macro_S_tokens(int n, int i) {
  if (i < 1 || i > n - 1) throw IndexOutOfRange("S index " + std::to_string(i) + " at degree " +
                                                std::to_string(n));
  std::vector<Tok> out;
  if (i == 1) {
    out.push_back(tok_bare_s());
    return out;
  }
  for (int k = 0; k < i - 1; ++k) out.push_back(tok_bare_c());
  out.push_back(tok_bare_s());
  for (int k = 0; k < n - (i - 1); ++k) out.push_back(tok_bare_c());
  return out;
}

// --- evaluation ---------------------------------------------------------

inline RookPartition token_image(int n, const Tok& t) {
  switch (t.kind) {
    case Tok::Kind::S: return gen_s(n, t.i);
    case Tok::Kind::E: return gen_e(n, t.i);
    case Tok::Kind::Q: return gen_q(n, t.i);
    case Tok::Kind::O: return gen_o(n, t.i);
    case Tok::Kind::T: return gen_t(n, t.i, t.j);
    case Tok::Kind::BareS: return gen_s(n, 1);
    case Tok::Kind::BareC: return gen_c(n);
  }
  throw Error("unreachable token kind");
}

inline RookPartition evaluate(int n, const Word& w) {
  RookPartition d = RookPartition::identity(n);
  for (const Tok& t : w.toks) d = d * token_image(n, t);
  return d;
}

// Evaluate while accumulating the total twist sum m(prefix, next letter).
inline std::pair<RookPartition, int> evaluate_with_twist(int n, const Word& w) {
  RookPartition d = RookPartition::identity(n);
  int total = 0;
  for (const Tok& t : w.toks) {
    auto [prod, m] = compose(d, token_image(n, t));
    d = std::move(prod);
    total += m;
  }
  return {std::move(d), total};
}

// rho: the rewriting map from ETO words to SEQO words; fixes e_i and o_i,
// sends t_ij to tau_ij.
inline Word rho(const Word& w) {
  if (w.alphabet != Alphabet::ETO) throw UsageError("rho expects an ETO word");
  Word out;
  out.alphabet = Alphabet::SEQO;
  for (const Tok& t : w.toks) {
    switch (t.kind) {
      case Tok::Kind::E:
      case Tok::Kind::O: out.toks.push_back(t); break;
      case Tok::Kind::T: {
        auto tau = tau_tokens(t.i, t.j);
        out.toks.insert(out.toks.end(), tau.begin(), tau.end());
        break;
      }
      default: throw UsageError("rho: unexpected token in ETO word");
    }
  }
  return out;
}

// --- word grammar ---------------------------------------------------------
//
// Whitespace-separated tokens:
//   s<i>  e<i>  q<i>  o<i>  t<i>,<j>   and bare  s  c  (SCEQO only)
// macros, expanded at parse time:
//   E<i>  O<i>  Q<i>  tau<i>,<j>  tA{<i>,<i>,...}  oA{...}  eij<i>,<j>

inline std::string print_tok(const Tok& t) {
  switch (t.kind) {
    case Tok::Kind::S: return "s" + std::to_string(t.i);
    case Tok::Kind::E: return "e" + std::to_string(t.i);
    case Tok::Kind::Q: return "q" + std::to_string(t.i);
    case Tok::Kind::O: return "o" + std::to_string(t.i);
    case Tok::Kind::T: return "t" + std::to_string(t.i) + "," + std::to_string(t.j);
    case Tok::Kind::BareS: return "s";
    case Tok::Kind::BareC: return "c";
  }
  return "?";
}

inline std::string print_word(const Word& w) {
  std::string out;
  for (const Tok& t : w.toks) {
    if (!out.empty()) out += " ";
    out += print_tok(t);
  }
  return out;
}

namespace detail {

inline std::pair<int, int> parse_index_pair(const std::string& body, const std::string& tokname) {
  auto parts = split(body, ',');
  if (parts.size() != 2) throw ParseError("token '" + tokname + "' needs exactly two indices");
  return {parse_int(trim(parts[0]), tokname), parse_int(trim(parts[1]), tokname)};
}

inline std::vector<int> parse_index_set(const std::string& raw, const std::string& tokname) {
  if (raw.size() < 2 || raw.front() != '{' || raw.back() != '}')
    throw ParseError("token '" + tokname + "' needs a {...} index set");
  std::string body = raw.substr(1, raw.size() - 2);
  std::vector<int> out;
  if (trim(body).empty()) return out;
  for (const auto& p : split(body, ',')) out.push_back(parse_int(trim(p), tokname));
  return out;
}

// Expand one grammar token into plain tokens, without alphabet checks.
inline std::vector<Tok> lex_token(const std::string& tok) {
  if (tok == "s") return {tok_bare_s()};
  if (tok == "c") return {tok_bare_c()};
  if (tok.rfind("tau", 0) == 0) {
    auto [i, j] = parse_index_pair(tok.substr(3), tok);
    if (i >= j) throw IndexOutOfRange("tau requires i < j, got " + tok);
    return tau_tokens(i, j);
  }
  if (tok.rfind("tA", 0) == 0) return tA_tokens(parse_index_set(tok.substr(2), tok));
  if (tok.rfind("oA", 0) == 0) return oA_tokens(parse_index_set(tok.substr(2), tok));
  if (tok.rfind("eij", 0) == 0) {
    auto [i, j] = parse_index_pair(tok.substr(3), tok);
    return eij_tokens(i, j);
  }
  if (tok.rfind("t", 0) == 0 && tok.size() > 1 && (std::isdigit(tok[1]) != 0)) {
    auto [i, j] = parse_index_pair(tok.substr(1), tok);
    if (i == j) throw IndexOutOfRange("t requires distinct indices, got " + tok);
    return {tok_t(i, j)};
  }
  if (tok.size() > 1) {
    char head = tok[0];
    const std::string body = tok.substr(1);
    bool digits = !body.empty() && std::all_of(body.begin(), body.end(),
                                               [](unsigned char ch) { return std::isdigit(ch); });
    if (digits) {
      int i = parse_int(body, tok);
      switch (head) {
        case 's': return {tok_s(i)};
        case 'e': return {tok_e(i)};
        case 'q': return {tok_q(i)};
        case 'o': return {tok_o(i)};
        case 'E': return macro_E_tokens(i);
        case 'O': return macro_O_tokens(i);
        case 'Q': return macro_Q_tokens(i);
        default: break;
      }
    }
  }
  throw ParseError("unrecognised word token '" + tok + "'");
}

inline void check_token_alphabet(Alphabet alpha, const Tok& t) {
  bool ok = false;
  switch (alpha) {
    case Alphabet::ETO:
      ok = t.kind == Tok::Kind::E || t.kind == Tok::Kind::O || t.kind == Tok::Kind::T;
      break;
    case Alphabet::SEQO:
      ok = t.kind == Tok::Kind::S || t.kind == Tok::Kind::E || t.kind == Tok::Kind::Q ||
           t.kind == Tok::Kind::O;
      break;
    case Alphabet::SEQO3:
      ok = t.kind == Tok::Kind::S ||
           ((t.kind == Tok::Kind::E || t.kind == Tok::Kind::Q || t.kind == Tok::Kind::O) &&
            t.i == 1);
      break;
    case Alphabet::SCEQO:
      ok = t.kind == Tok::Kind::BareS || t.kind == Tok::Kind::BareC ||
           ((t.kind == Tok::Kind::E || t.kind == Tok::Kind::Q || t.kind == Tok::Kind::O) &&
            t.i == 1);
      break;
  }
  if (!ok)
    throw ParseError("token '" + print_tok(t) + "' is not in alphabet " + alphabet_name(alpha));
}

inline std::vector<std::string> whitespace_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

inline Word parse_word(Alphabet alpha, const std::string& text) {
  Word w;
  w.alphabet = alpha;
  for (const std::string& tok : detail::whitespace_tokens(text)) {
    for (const Tok& t : detail::lex_token(tok)) {
      detail::check_token_alphabet(alpha, t);
      w.toks.push_back(t);
    }
  }
  return w;
}

// Infer the alphabet from the tokens present: bare s/c force SCEQO, t-letters
// force ETO, s/q-letters force SEQO; plain e/o words default to SEQO.
inline Word parse_word_auto(const std::string& text) {
  std::vector<Tok> toks;
  for (const std::string& tok : detail::whitespace_tokens(text))
    for (const Tok& t : detail::lex_token(tok)) toks.push_back(t);
  bool bare = false, has_t = false, has_sq = false;
  for (const Tok& t : toks) {
    bare = bare || t.kind == Tok::Kind::BareS || t.kind == Tok::Kind::BareC;
    has_t = has_t || t.kind == Tok::Kind::T;
    has_sq = has_sq || t.kind == Tok::Kind::S || t.kind == Tok::Kind::Q;
  }
  Alphabet alpha = Alphabet::SEQO;
  if (bare) alpha = Alphabet::SCEQO;
  else if (has_t) alpha = Alphabet::ETO;
  Word w;
  w.alphabet = alpha;
  for (const Tok& t : toks) {
    detail::check_token_alphabet(alpha, t);
    w.toks.push_back(t);
  }
  return w;
}

}  // namespace rookpm

#endif  // ROOKPM_WORDS_HPP_
