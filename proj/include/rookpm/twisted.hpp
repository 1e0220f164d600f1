#ifndef ROOKPM_TWISTED_HPP_
#define ROOKPM_TWISTED_HPP_

#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/enumeration.hpp"
#include "rookpm/errors.hpp"
#include "rookpm/presentations.hpp"

namespace rookpm {

// --- polynomials in the parameter d ----------------------------------------

class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(long long constant) {
    if (constant != 0) c_.push_back(constant);
  }

  static DeltaPoly delta_power(int k, long long coeff = 1) {
    DeltaPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(k) + 1, 0);
      p.c_.back() = coeff;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  long long coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
  }

  DeltaPoly& operator+=(const DeltaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  DeltaPoly& operator-=(const DeltaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  DeltaPoly operator*(const DeltaPoly& o) const {
    DeltaPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t a = 0; a < c_.size(); ++a)
      for (std::size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
    r.trim();
    return r;
  }
  DeltaPoly operator+(const DeltaPoly& o) const {
    DeltaPoly r = *this;
    r += o;
    return r;
  }
  DeltaPoly operator-(const DeltaPoly& o) const {
    DeltaPoly r = *this;
    r -= o;
    return r;
  }
  DeltaPoly& operator*=(const DeltaPoly& o) { return *this = *this * o; }

  bool operator==(const DeltaPoly& o) const { return c_ == o.c_; }
  bool operator!=(const DeltaPoly& o) const { return !(*this == o); }

  long long at_one() const {
    long long s = 0;
    for (long long v : c_) s += v;
    return s;
  }

  // compact form, highest degree first: "d^3+2d", "3d^2-1", "-d", "5", "0"
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      long long c = coeff(k);
      if (c == 0) continue;
      if (!out.empty())
        out += c > 0 ? "+" : "-";
      else if (c < 0)
        out += "-";
      const long long a = c < 0 ? -c : c;
      if (k == 0) {
        out += std::to_string(a);
      } else {
        if (a != 1) out += std::to_string(a);
        out += "d";
        if (k >= 2) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  static DeltaPoly parse(const std::string& text) {
    DeltaPoly p;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (i == text.size()) {
        if (first) throw ParseError("empty polynomial");
        break;
      }
      long long sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        if (first && text[i] == '+') throw ParseError("polynomial may not start with '+'");
        sign = text[i] == '-' ? -1 : 1;
        ++i;
        skip();
      }
      long long mag = 1;
      bool have_digits = false;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          mag = mag * 10 + (text[i] - '0');
          ++i;
        }
        have_digits = true;
      }
      int power = 0;
      if (i < text.size() && text[i] == 'd') {
        ++i;
        power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected an exponent after '^' in polynomial: " + text);
          power = 0;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            power = power * 10 + (text[i++] - '0');
        }
      } else if (!have_digits) {
        throw ParseError("expected a term at position " + std::to_string(i) +
                         " in polynomial: " + text);
      }
      p += delta_power(power, sign * mag);
      first = false;
    }
    return p;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<long long> c_;  // c_[k] is the coefficient of d^k
};

// --- elements of the twisted algebra ----------------------------------------

class AlgebraElement {
 public:
  explicit AlgebraElement(int n) : n_(n) {}

  static AlgebraElement basis(const RookPartition& d, DeltaPoly c = DeltaPoly(1)) {
    AlgebraElement e(d.degree());
    e.add(d, c);
    return e;
  }

  int degree() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<RookPartition, DeltaPoly>& terms() const { return terms_; }

  void add(const RookPartition& d, const DeltaPoly& c) {
    if (d.degree() != n_)
      throw DegreeMismatch("term degree " + std::to_string(d.degree()) +
                           " in an algebra element of degree " + std::to_string(n_));
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_same(o);
    for (const auto& [d, c] : o.terms_) add(d, DeltaPoly(0) - c);
    return *this;
  }
  AlgebraElement operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r += o;
    return r;
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    r -= o;
    return r;
  }

  AlgebraElement scaled(const DeltaPoly& c) const {
    AlgebraElement r(n_);
    for (const auto& [d, p] : terms_) r.add(d, p * c);
    return r;
  }

  bool operator==(const AlgebraElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // specialization at d = 1, where the twist disappears
  std::map<RookPartition, long long> at_one() const {
    std::map<RookPartition, long long> out;
    for (const auto& [d, c] : terms_) {
      long long v = c.at_one();
      if (v != 0) out[d] = v;
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str() + " * (" + to_literal(d) + ")";
    }
    return out;
  }

 private:
  void check_same(const AlgebraElement& o) const {
    if (n_ != o.n_)
      throw DegreeMismatch("algebra elements of degree " + std::to_string(n_) + " and " +
                           std::to_string(o.n_));
  }

  int n_;
  std::map<RookPartition, DeltaPoly> terms_;
};

// a * b with the twist: each diagram pair contributes d^{m(x,y)} xy.
inline AlgebraElement star_multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("algebra elements of degree " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  AlgebraElement r(a.degree());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      auto [prod, m] = compose(da, db);
      r.add(prod, ca * cb * DeltaPoly::delta_power(m));
    }
  return r;
}

inline AlgebraElement star_evaluate(int n, const std::vector<RookPartition>& factors) {
  AlgebraElement acc = AlgebraElement::basis(RookPartition::identity(n));
  for (const auto& d : factors) acc = star_multiply(acc, AlgebraElement::basis(d));
  return acc;
}

// --- algebra literals --------------------------------------------------------
//
//   <poly> * (<diagram literal>)( + <poly> * (<diagram literal>))*
//
// and "0" for the zero element. Terms print in diagram order.

inline std::string to_algebra_literal(const AlgebraElement& e) { return e.str(); }

inline AlgebraElement parse_algebra_literal(int n, const std::string& raw) {
  AlgebraElement e(n);
  std::string text = raw;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw ParseError("empty algebra literal");
  if (text.compare(i, text.size() - i, "0") == 0) return e;
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) {
      if (first) throw ParseError("empty algebra literal");
      break;
    }
    if (!first) {
      if (text[i] != '+') throw ParseError("expected '+' between algebra terms: " + text);
      ++i;
      skip();
    }
    std::size_t open = text.find('(', i);
    if (open == std::string::npos)
      throw ParseError("expected '(' after a coefficient in algebra literal: " + text);
    std::size_t star = open;
    while (star > i && std::isspace(static_cast<unsigned char>(text[star - 1]))) --star;
    if (star == i || text[star - 1] != '*')
      throw ParseError("expected '*' before '(' in algebra literal: " + text);
    DeltaPoly c = DeltaPoly::parse(text.substr(i, star - 1 - i));
    std::size_t close = text.find(')', open);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in algebra literal: " + text);
    RookPartition d = parse_literal(text.substr(open + 1, close - open - 1));
    if (d.degree() != n)
      throw DegreeMismatch("algebra literal of degree " + std::to_string(n) +
                           " contains a diagram of degree " + std::to_string(d.degree()));
    e.add(d, c);
    i = close + 1;
    first = false;
  }
  return e;
}

// --- twisted relation checking ----------------------------------------------

struct TwistedReport {
  bool ok = true;
  int relations_checked = 0;
  std::vector<std::string> failures;
};

// Full coefficient-level check in the algebra: for each relation,
// d^{a} * (images of lhs) must equal d^{b} * (images of rhs).
inline TwistedReport verify_twisted_relations(const Presentation& p) {
  if (p.images.empty())
    throw UsageError("presentation " + p.id + " carries no letter images to check");
  TwistedReport rep;
  for (const Relation& r : p.relations) {
    std::vector<RookPartition> lf, rf;
    for (int x : r.lhs) lf.push_back(p.images[static_cast<std::size_t>(x)]);
    for (int x : r.rhs) rf.push_back(p.images[static_cast<std::size_t>(x)]);
    AlgebraElement lhs =
        star_evaluate(p.n, lf).scaled(DeltaPoly::delta_power(r.twist_lhs));
    AlgebraElement rhs =
        star_evaluate(p.n, rf).scaled(DeltaPoly::delta_power(r.twist_rhs));
    ++rep.relations_checked;
    if (lhs != rhs) {
      rep.ok = false;
      rep.failures.push_back(r.label);
    }
  }
  return rep;
}

// --- cocycle checks ----------------------------------------------------------

struct CocycleReport {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

namespace detail {

struct PairTables {
  std::vector<RookPartition> elems;
  std::vector<std::uint32_t> prod;  // N x N, index of the product
  std::vector<std::uint8_t> twist;  // N x N

  std::size_t size() const { return elems.size(); }
};

inline PairTables build_pair_tables(int n) {
  PairTables t;
  t.elems = all_rook_partitions(n);
  const std::size_t N = t.elems.size();
  std::unordered_map<RookPartition, std::uint32_t> index;
  index.reserve(N * 2);
  for (std::size_t k = 0; k < N; ++k) index.emplace(t.elems[k], static_cast<std::uint32_t>(k));
  t.prod.resize(N * N);
  t.twist.resize(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      auto [p, m] = compose(t.elems[a], t.elems[b]);
      auto it = index.find(p);
      if (it == index.end()) throw Error("internal: product escaped the element list");
      t.prod[a * N + b] = it->second;
      t.twist[a * N + b] = static_cast<std::uint8_t>(m);
    }
  return t;
}

inline bool cocycle_triple_ok(const PairTables& t, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t N = t.size();
  const std::size_t ab = t.prod[a * N + b];
  const std::size_t bc = t.prod[b * N + c];
  const int lhs = t.twist[a * N + b] + t.twist[ab * N + c];
  const int rhs = t.twist[a * N + bc] + t.twist[b * N + c];
  return lhs == rhs;
}

}  // namespace detail

// m(a,b) + m(ab,c) = m(a,bc) + m(b,c) over every triple.
inline CocycleReport check_cocycle_exhaustive(int n) {
  detail::PairTables t = detail::build_pair_tables(n);
  const std::size_t N = t.size();
  CocycleReport rep;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) {
        ++rep.checked;
        if (!detail::cocycle_triple_ok(t, a, b, c)) ++rep.failures;
      }
  return rep;
}

inline CocycleReport check_cocycle_sampled(int n, std::uint64_t samples, std::uint64_t seed) {
  detail::PairTables t = detail::build_pair_tables(n);
  const std::size_t N = t.size();
  std::mt19937_64 rng(seed);
  auto pick = [&] { return static_cast<std::size_t>(rng() % N); };
  CocycleReport rep;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const std::size_t a = pick();
    const std::size_t b = pick();
    const std::size_t c = pick();
    ++rep.checked;
    if (!detail::cocycle_triple_ok(t, a, b, c)) ++rep.failures;
  }
  return rep;
}

}  // namespace rookpm

#endif  // ROOKPM_TWISTED_HPP_
