#ifndef ROOKPM_PRESENTATIONS_HPP_
#define ROOKPM_PRESENTATIONS_HPP_

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/errors.hpp"
#include "rookpm/words.hpp"

namespace rookpm {

// One defining relation lhs = rhs, both sides as sequences of letter indices.
// In a twisted presentation the relation reads d^twist_lhs * lhs =
// d^twist_rhs * rhs, where the star product of each side contributes its own
// accumulated twist on top.
struct Relation {
  std::vector<int> lhs, rhs;
  int twist_lhs = 0;
  int twist_rhs = 0;
  std::string label;
};

struct Presentation {
  std::string id = "custom";
  int n = 0;  // degree for preset presentations, 0 for custom ones
  bool monoid = true;
  bool twisted = false;
  bool degraded = false;  // instantiated below the degree its preset targets
  std::vector<std::string> letters;
  std::vector<RookPartition> images;  // one per letter; empty for custom
  std::vector<Relation> relations;

  int letter_index(const std::string& name) const {
    for (std::size_t k = 0; k < letters.size(); ++k)
      if (letters[k] == name) return static_cast<int>(k);
    throw IndexOutOfRange("no such letter '" + name + "'");
  }
};

namespace detail {

struct PresBuilder {
  Presentation p;
  std::unordered_map<std::string, int> index;

  int letter(const std::string& name, const RookPartition& img) {
    index[name] = static_cast<int>(p.letters.size());
    p.letters.push_back(name);
    p.images.push_back(img);
    return index[name];
  }

  void add(const std::string& label, std::vector<int> lhs, std::vector<int> rhs, int tl = 0,
           int tr = 0) {
    Relation r;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.twist_lhs = tl;
    r.twist_rhs = tr;
    r.label = label;
    p.relations.push_back(std::move(r));
  }

  // Explode a multi-equation line w1 = w2 = ... = wk into adjacent pairs. If
  // twist_first is set (and the presentation is twisted) the first pair gets
  // the d^0 lhs = d^1 rhs tag.
  void chain(const std::string& label, const std::vector<std::vector<int>>& segs,
             bool twist_first = false) {
    for (std::size_t k = 0; k + 1 < segs.size(); ++k) {
      int tr = (twist_first && k == 0 && p.twisted) ? 1 : 0;
      add(label + "#" + std::to_string(k + 1), segs[k], segs[k + 1], 0, tr);
    }
  }
};

inline std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline std::vector<int> rep(const std::vector<int>& w, int k) {
  std::vector<int> out;
  for (int c = 0; c < k; ++c) out.insert(out.end(), w.begin(), w.end());
  return out;
}

inline std::string ij(int i, int j) {
  return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}
inline std::string just(int i) { return "[" + std::to_string(i) + "]"; }

}  // namespace detail

// Canonical preset ids. Input accepts both "R1-17" and "R1-R17" spellings,
// case-insensitively, with an optional "-delta" suffix for twisted variants.
inline std::string normalize_preset_id(const std::string& raw, bool* twisted_out = nullptr) {
  std::string s;
  for (char c : raw)
    if (c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  bool twisted = false;
  const std::string suffix = "-delta";
  if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    twisted = true;
    s = s.substr(0, s.size() - suffix.size());
  }
  static const std::vector<std::pair<std::vector<std::string>, std::string>> table = {
      {{"r1-10", "r1-r10"}, "R1-10"},     {{"r1-17", "r1-r17"}, "R1-17"},
      {{"r18-33", "r18-r33"}, "R18-33"},  {{"r18-43", "r18-r43"}, "R18-43"},
      {{"r44-59", "r44-r59"}, "R44-59"},  {{"r60-70", "r60-r70"}, "R60-70"},
      {{"r60-only", "r60only"}, "R60-only"}};
  for (const auto& [alts, canon] : table)
    for (const auto& a : alts)
      if (s == a) {
        if (twisted_out) *twisted_out = twisted;
        return canon;
      }
  throw UsageError("unknown preset '" + raw + "'");
}

namespace detail {

inline void build_R1_10(PresBuilder& b, int n) {
  auto& p = b.p;
  auto e = [&](int i) { return b.index.at("e" + std::to_string(i)); };
  auto t = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return b.index.at("t" + std::to_string(i) + "," + std::to_string(j));
  };
  for (int i = 1; i <= n; ++i)
    b.add("R1" + just(i), {e(i), e(i)}, {e(i)}, 0, p.twisted ? 1 : 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      b.add("R2" + ij(i, j), {e(i), e(j)}, {e(j), e(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      b.add("R3" + ij(i, j), {t(i, j), t(i, j)}, {t(i, j)});
  // all unordered pairs of distinct t-letters
  std::vector<std::pair<int, int>> tpairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) tpairs.emplace_back(i, j);
  for (std::size_t a = 0; a < tpairs.size(); ++a)
    for (std::size_t c = a + 1; c < tpairs.size(); ++c) {
      auto [i, j] = tpairs[a];
      auto [k, l] = tpairs[c];
      b.add("R4[" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(k) + "," +
                std::to_string(l) + "]",
            {t(i, j), t(k, l)}, {t(k, l), t(i, j)});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        b.add("R5[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]",
              {t(i, j), t(j, k)}, {t(j, k), t(k, i)});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        b.add("R6" + ij(i, j) + just(k), {t(i, j), e(k)}, {e(k), t(i, j)});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k : {i, j}) {
        b.add("R7" + ij(i, j) + just(k), {t(i, j), e(k), t(i, j)}, {t(i, j)});
        b.add("R8" + ij(i, j) + just(k), {e(k), t(i, j), e(k)}, {e(k)});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        b.add("R9[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]",
              {e(k), t(k, i), e(i), t(i, j), e(j), t(j, k), e(k)},
              {e(k), t(k, j), e(j), t(j, i), e(i), t(i, k), e(k)});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          b.add("R10[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                    "," + std::to_string(l) + "]",
                {e(k), t(k, i), e(i), t(i, j), e(j), t(j, l), e(l), t(l, k), e(k)},
                {e(k), t(k, l), e(l), t(l, i), e(i), t(i, j), e(j), t(j, k), e(k)});
        }
}

inline void build_R11_17(PresBuilder& b, int n) {
  auto e = [&](int i) { return b.index.at("e" + std::to_string(i)); };
  auto t = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return b.index.at("t" + std::to_string(i) + "," + std::to_string(j));
  };
  auto o = [&](int i) { return b.index.at("o" + std::to_string(i)); };
  for (int i = 1; i <= n; ++i) b.add("R11" + just(i), {o(i), o(i)}, {o(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      b.add("R12" + ij(i, j), {o(i), o(j)}, {o(j), o(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.add("R13" + ij(i, j), {o(i), e(j)}, {e(j), o(i)});
    }
  for (int i = 1; i <= n; ++i) {
    b.add("R14" + just(i), {o(i), e(i), o(i)}, {o(i)});
    b.add("R15" + just(i), {e(i), o(i), e(i)}, {e(i)});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        b.add("R16" + ij(i, j) + just(k), {t(i, j), o(k)}, {o(k), t(i, j)});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.chain("R17" + ij(i, j),
              {{t(i, j), o(i)}, {t(i, j), o(j)}, {o(i), o(j)}});
    }
}

inline void build_R18_33(PresBuilder& b, int n) {
  auto& p = b.p;
  auto s = [&](int i) { return b.index.at("s" + std::to_string(i)); };
  auto e = [&](int i) { return b.index.at("e" + std::to_string(i)); };
  auto q = [&](int i) { return b.index.at("q" + std::to_string(i)); };
  for (int i = 1; i <= n - 1; ++i) b.add("R18" + just(i), {s(i), s(i)}, {});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.add("R19" + ij(i, j), {s(i), s(j)}, {s(j), s(i)});
  for (int i = 1; i <= n - 2; ++i)
    b.add("R20" + just(i), {s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)});
  for (int i = 1; i <= n; ++i)
    b.add("R21" + just(i), {e(i), e(i)}, {e(i)}, 0, p.twisted ? 1 : 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      b.add("R22" + ij(i, j), {e(i), e(j)}, {e(j), e(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.add("R23" + ij(i, j), {s(i), e(j)}, {e(j), s(i)});
    }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("R24" + just(i), {s(i), e(i)}, {e(i + 1), s(i)});
    b.add("R25" + just(i), {e(i), e(i + 1), s(i)}, {e(i), e(i + 1)});
    b.add("R26" + just(i), {q(i), q(i)}, {q(i)});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      b.add("R27" + ij(i, j), {q(i), q(j)}, {q(j), q(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) <= 1) continue;
      b.add("R28" + ij(i, j), {s(i), q(j)}, {q(j), s(i)});
    }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) != 1) continue;
      b.add("R29" + ij(i, j), {s(i), s(j), q(i)}, {q(j), s(i), s(j)});
    }
  for (int i = 1; i <= n - 1; ++i)
    b.chain("R30" + just(i), {{q(i), s(i)}, {s(i), q(i)}, {q(i)}});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.add("R31" + ij(i, j), {q(i), e(j)}, {e(j), q(i)});
    }
  for (int i = 1; i <= n - 1; ++i)
    for (int j : {i, i + 1}) {
      b.add("R32" + ij(i, j), {q(i), e(j), q(i)}, {q(i)});
      b.add("R33" + ij(i, j), {e(j), q(i), e(j)}, {e(j)});
    }
}

inline void build_R34_43(PresBuilder& b, int n) {
  auto s = [&](int i) { return b.index.at("s" + std::to_string(i)); };
  auto e = [&](int i) { return b.index.at("e" + std::to_string(i)); };
  auto q = [&](int i) { return b.index.at("q" + std::to_string(i)); };
  auto o = [&](int i) { return b.index.at("o" + std::to_string(i)); };
  for (int i = 1; i <= n; ++i) b.add("R34" + just(i), {o(i), o(i)}, {o(i)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      b.add("R35" + ij(i, j), {o(i), o(j)}, {o(j), o(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      b.add("R36" + ij(i, j), {s(i), o(j)}, {o(j), s(i)});
    }
  for (int i = 1; i <= n - 1; ++i) {
    b.add("R37" + just(i), {s(i), o(i)}, {o(i + 1), s(i)});
    b.add("R38" + just(i), {o(i), o(i + 1), s(i)}, {o(i), o(i + 1)});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.add("R39" + ij(i, j), {o(i), e(j)}, {e(j), o(i)});
    }
  for (int i = 1; i <= n; ++i) {
    b.add("R40" + just(i), {o(i), e(i), o(i)}, {o(i)});
    b.add("R41" + just(i), {e(i), o(i), e(i)}, {e(i)});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      b.add("R42" + ij(i, j), {q(i), o(j)}, {o(j), q(i)});
  for (int i = 1; i <= n - 1; ++i)
    b.chain("R43" + just(i), {{q(i), o(i)}, {q(i), o(i + 1)}, {o(i), o(i + 1)}});
}

inline void build_R44_59(PresBuilder& b, int n) {
  auto s = [&](int i) { return b.index.at("s" + std::to_string(i)); };
  const int e = b.index.at("e1"), q = b.index.at("q1"), o = b.index.at("o1");
  for (int i = 1; i <= n - 1; ++i) b.add("R44" + just(i), {s(i), s(i)}, {});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      b.add("R45" + ij(i, j), {s(i), s(j)}, {s(j), s(i)});
  for (int i = 1; i <= n - 2; ++i)
    b.add("R46" + just(i), {s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)});
  b.chain("R47", {{e, e}, {e}, {e, q, e}, {e, o, e}}, /*twist_first=*/true);
  b.chain("R48", {{q, q}, {q}, {q, e, q}, {q, s(1)}, {s(1), q}});
  for (int i = 2; i <= n - 1; ++i) b.add("R49" + just(i), {e, s(i)}, {s(i), e});
  for (int i = 3; i <= n - 1; ++i) b.add("R50" + just(i), {q, s(i)}, {s(i), q});
  b.chain("R51", {{s(1), e, s(1), e}, {e, s(1), e, s(1)}, {e, s(1), e}});
  if (n >= 3)
    b.add("R52", {q, s(2), q, s(2)}, {s(2), q, s(2), q});
  if (n >= 4) {
    const std::vector<int> w = {s(2), s(1), s(3), s(2)};
    b.add("R53", cat({{q}, w, {q}, w}), cat({w, {q}, w, {q}}));
  }
  if (n >= 3) {
    const std::vector<int> w = {s(2), s(1), e, s(1), s(2)};
    b.add("R54", cat({{q}, w}), cat({w, {q}}));
  }
  b.chain("R55", {{o, o}, {o}, {o, e, o}});
  for (int i = 2; i <= n - 1; ++i) b.add("R56" + just(i), {o, s(i)}, {s(i), o});
  b.chain("R57", {{o, s(1), o, s(1)}, {s(1), o, s(1), o}, {o, s(1), o}, {o, q}, {q, o}});
  b.add("R58", {e, s(1), o, s(1)}, {s(1), o, s(1), e});
  if (n >= 3) {
    const std::vector<int> w = {s(2), s(1), o, s(1), s(2)};
    b.add("R59", cat({{q}, w}), cat({w, {q}}));
  }
}

inline void build_R60_70(PresBuilder& b, int n, bool r60_only) {
  const int s = b.index.at("s"), c = b.index.at("c");
  const std::vector<int> S = {s}, C = {c};
  auto cpow = [&](int k) { return rep(C, k); };
  {
    std::vector<std::vector<int>> segs;
    segs.push_back(cpow(n));
    segs.push_back(rep(cat({S, C}), n - 1));
    segs.push_back({s, s});
    for (int i = 2; i <= n / 2; ++i)
      segs.push_back(rep(cat({cpow(i), S, cpow(n - i), S}), 2));
    segs.push_back({});
    b.chain("R60", segs);
  }
  if (r60_only) return;
  const int e = b.index.at("e1"), q = b.index.at("q1"), o = b.index.at("o1");
  const std::vector<int> E = {e}, Q = {q}, O = {o};
  b.chain("R61",
          {{e, e},
           {e},
           {e, q, e},
           {e, o, e},
           cat({S, C, E, cpow(n - 1), S}),
           cat({C, S, cpow(n - 1), E, C, S, cpow(n - 1)})},
          /*twist_first=*/true);
  {
    std::vector<std::vector<int>> segs = {{q, q}, {q}, {q, e, q}, {q, s}, {s, q}};
    // c^2 s c^{n-2} is the transposition swapping 3 and 4, which needs
    // n >= 4; at n = 3 the word wraps around to a different transposition
    // and the commutation it encodes is vacuous, so the segment is skipped.
    if (n >= 4)
      segs.push_back(cat({cpow(2), S, cpow(n - 2), Q, cpow(2), S, cpow(n - 2)}));
    segs.push_back(cat({cpow(n - 1), S, C, S, cpow(n - 1), Q, C, S, cpow(n - 1), S, C}));
    b.chain("R62", segs);
  }
  b.chain("R63", {{s, e, s, e}, {e, s, e, s}, {e, s, e}});
  b.add("R64", cat({Q, C, Q, cpow(n - 1)}), cat({C, Q, cpow(n - 1), Q}));
  b.add("R65", cat({Q, cpow(2), Q, cpow(n - 2)}), cat({cpow(2), Q, cpow(n - 2), Q}));
  b.add("R66", cat({Q, cpow(2), E, cpow(n - 2)}), cat({cpow(2), E, cpow(n - 2), Q}));
  b.chain("R67", {{o, o},
                  {o},
                  {o, e, o},
                  cat({S, C, O, cpow(n - 1), S}),
                  cat({C, S, cpow(n - 1), O, C, S, cpow(n - 1)})});
  b.chain("R68", {{s, o, s, o}, {o, s, o, s}, {o, s, o}, {o, q}, {q, o}});
  b.add("R69", cat({Q, cpow(2), O, cpow(n - 2)}), cat({cpow(2), O, cpow(n - 2), Q}));
  b.add("R70", {e, s, o, s}, {s, o, s, e});
}

}  // namespace detail

// Instantiate a named preset at degree n. Twisted variants ("<id>-delta")
// carry the d^0 lhs = d^1 rhs tag on the e^2 = e relations and (0,0)
// everywhere else.
inline Presentation instantiate(const std::string& preset_raw, int n) {
  bool twisted = false;
  const std::string id = normalize_preset_id(preset_raw, &twisted);
  if (n < 1) throw UnsupportedDegree("preset " + id + " needs degree >= 1, got " + std::to_string(n));

  detail::PresBuilder b;
  b.p.id = id + (twisted ? "-delta" : "");
  b.p.n = n;
  b.p.twisted = twisted;

  auto add_e_letters = [&]() {
    for (int i = 1; i <= n; ++i) b.letter("e" + std::to_string(i), gen_e(n, i));
  };
  auto add_t_letters = [&]() {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        b.letter("t" + std::to_string(i) + "," + std::to_string(j), gen_t(n, i, j));
  };
  auto add_o_letters = [&]() {
    for (int i = 1; i <= n; ++i) b.letter("o" + std::to_string(i), gen_o(n, i));
  };
  auto add_s_letters = [&]() {
    for (int i = 1; i <= n - 1; ++i) b.letter("s" + std::to_string(i), gen_s(n, i));
  };
  auto add_q_letters = [&]() {
    for (int i = 1; i <= n - 1; ++i) b.letter("q" + std::to_string(i), gen_q(n, i));
  };

  if (id == "R1-10") {
    b.p.monoid = false;
    add_e_letters();
    add_t_letters();
    detail::build_R1_10(b, n);
  } else if (id == "R1-17") {
    b.p.monoid = false;
    add_e_letters();
    add_t_letters();
    add_o_letters();
    detail::build_R1_10(b, n);
    detail::build_R11_17(b, n);
  } else if (id == "R18-33") {
    b.p.monoid = true;
    add_s_letters();
    add_e_letters();
    add_q_letters();
    detail::build_R18_33(b, n);
  } else if (id == "R18-43") {
    b.p.monoid = true;
    add_s_letters();
    add_e_letters();
    add_q_letters();
    add_o_letters();
    detail::build_R18_33(b, n);
    detail::build_R34_43(b, n);
  } else if (id == "R44-59") {
    if (n < 2) throw UnsupportedDegree("preset R44-59 needs degree >= 2");
    b.p.monoid = true;
    b.p.degraded = n < 3;
    add_s_letters();
    b.letter("e1", gen_e(n, 1));
    b.letter("q1", gen_q(n, 1));
    b.letter("o1", gen_o(n, 1));
    detail::build_R44_59(b, n);
  } else if (id == "R60-70" || id == "R60-only") {
    if (n < 3) throw UnsupportedDegree("preset " + id + " needs degree >= 3");
    b.p.monoid = true;
    b.letter("s", gen_s(n, 1));
    b.letter("c", gen_c(n));
    if (id == "R60-70") {
      b.letter("e1", gen_e(n, 1));
      b.letter("q1", gen_q(n, 1));
      b.letter("o1", gen_o(n, 1));
    }
    detail::build_R60_70(b, n, id == "R60-only");
  } else {
    throw UsageError("unknown preset '" + preset_raw + "'");
  }
  return std::move(b.p);
}

inline std::vector<std::string> preset_ids() {
  return {"R1-10", "R1-17", "R18-33", "R18-43", "R44-59", "R60-70", "R60-only"};
}

// --- soundness ------------------------------------------------------------

struct SoundnessFailure {
  std::string label;
  std::string lhs_value, rhs_value;
  int lhs_twist = 0, rhs_twist = 0;
};

struct SoundnessReport {
  bool sound = true;
  int relations_checked = 0;
  std::vector<SoundnessFailure> failures;
};

// Verify every relation on the concrete letter images. For twisted
// presentations both the diagrams and the accumulated twists (relation tag
// plus star-product contribution of each side) must agree.
inline SoundnessReport check_soundness(const Presentation& p) {
  if (p.images.empty() && !p.letters.empty())
    throw UsageError("check_soundness requires a presentation with letter images");
  SoundnessReport rep;
  for (const Relation& r : p.relations) {
    auto eval_side = [&](const std::vector<int>& side) {
      RookPartition d = RookPartition::identity(p.n);
      int twist = 0;
      for (int letter : side) {
        auto [prod, m] = compose(d, p.images[static_cast<std::size_t>(letter)]);
        d = std::move(prod);
        twist += m;
      }
      return std::make_pair(d, twist);
    };
    auto [ld, lm] = eval_side(r.lhs);
    auto [rd, rm] = eval_side(r.rhs);
    bool ok = ld == rd;
    if (p.twisted) ok = ok && (r.twist_lhs + lm == r.twist_rhs + rm);
    ++rep.relations_checked;
    if (!ok) {
      rep.sound = false;
      SoundnessFailure f;
      f.label = r.label;
      f.lhs_value = to_literal(ld);
      f.rhs_value = to_literal(rd);
      f.lhs_twist = r.twist_lhs + lm;
      f.rhs_twist = r.twist_rhs + rm;
      rep.failures.push_back(std::move(f));
    }
  }
  return rep;
}

// --- text format ------------------------------------------------------------
//
//   kind=monoid; alphabet=s1,s2,e1
//   rel: s1 s1 =
//   rel: e1 s1 e1 = e1
//
// Lines starting with '#' are comments. Relation words use the declared
// letter names; an empty side denotes the identity (monoid kind only).

inline std::string print_presentation(const Presentation& p) {
  std::string out = "kind=";
  out += p.monoid ? "monoid" : "semigroup";
  out += "; alphabet=";
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    if (i) out += ",";
    out += p.letters[i];
  }
  out += "\n";
  for (const Relation& r : p.relations) {
    out += "rel:";
    for (int x : r.lhs) out += " " + p.letters[static_cast<std::size_t>(x)];
    out += " =";
    for (int x : r.rhs) out += " " + p.letters[static_cast<std::size_t>(x)];
    out += "\n";
  }
  return out;
}

inline Presentation parse_presentation(const std::string& text) {
  Presentation p;
  p.id = "custom";
  bool have_kind = false;
  bool have_alphabet = false;
  std::unordered_map<std::string, int> index;
  int rel_count = 0;

  auto is_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };

  auto process_rel = [&](const std::string& body) {
    if (!have_alphabet) throw ParseError("rel: line before alphabet declaration");
    auto sides = detail::split(body, '=');
    if (sides.size() < 2) throw ParseError("relation line needs '=': rel:" + body);
    std::vector<std::vector<int>> words;
    for (const std::string& side : sides) {
      std::vector<int> w;
      for (const std::string& tok : detail::whitespace_tokens(side)) {
        auto it = index.find(tok);
        if (it == index.end()) throw ParseError("undeclared letter '" + tok + "'");
        w.push_back(it->second);
      }
      words.push_back(std::move(w));
    }
    for (std::size_t k = 0; k + 1 < words.size(); ++k) {
      Relation r;
      r.lhs = words[k];
      r.rhs = words[k + 1];
      r.label = "rel" + std::to_string(++rel_count);
      p.relations.push_back(std::move(r));
    }
  };

  for (const std::string& rawline : detail::split(text, '\n')) {
    std::string line = detail::trim(rawline);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("rel:", 0) == 0) {
      process_rel(line.substr(4));
      continue;
    }
    // header clauses, possibly several on one line separated by ';'
    for (const std::string& rawclause : detail::split(line, ';')) {
      std::string clause = detail::trim(rawclause);
      if (clause.empty()) continue;
      if (clause.rfind("kind=", 0) == 0) {
        std::string kind = detail::trim(clause.substr(5));
        if (kind == "monoid") p.monoid = true;
        else if (kind == "semigroup") p.monoid = false;
        else throw ParseError("unknown kind '" + kind + "'");
        have_kind = true;
      } else if (clause.rfind("alphabet=", 0) == 0) {
        std::vector<std::string> names;
        for (const std::string& rawname : detail::split(clause.substr(9), ',')) {
          std::string name = detail::trim(rawname);
          // pair-style names t<i>,<j> contain the list separator; a bare
          // number directly after a t<i> chunk is its second half.
          if (!names.empty() && is_digits(name) && names.back().size() > 1 &&
              names.back()[0] == 't' && is_digits(names.back().substr(1))) {
            names.back() += "," + name;
            continue;
          }
          names.push_back(std::move(name));
        }
        for (std::string& name : names) {
          if (name.empty()) throw ParseError("empty letter name in alphabet");
          if (index.count(name)) throw ParseError("duplicate letter '" + name + "'");
          index[name] = static_cast<int>(p.letters.size());
          p.letters.push_back(std::move(name));
        }
        have_alphabet = true;
      } else if (clause.rfind("rel:", 0) == 0) {
        process_rel(clause.substr(4));
      } else {
        throw ParseError("unrecognised presentation line: " + line);
      }
    }
  }
  if (!have_kind) throw ParseError("presentation has no kind declaration");
  if (!have_alphabet) throw ParseError("presentation has no alphabet declaration");
  if (!p.monoid)
    for (const Relation& r : p.relations)
      if (r.lhs.empty() || r.rhs.empty())
        throw ParseError("semigroup relation has an empty side (" + r.label + ")");
  return p;
}

}  // namespace rookpm

#endif  // ROOKPM_PRESENTATIONS_HPP_
