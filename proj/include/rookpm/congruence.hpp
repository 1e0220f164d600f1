#ifndef ROOKPM_CONGRUENCE_HPP_
#define ROOKPM_CONGRUENCE_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rookpm/enumeration.hpp"
#include "rookpm/errors.hpp"
#include "rookpm/presentations.hpp"

namespace rookpm {

// Completed coset table of the quotient monoid: n_classes x n_letters, class
// 0 is the identity. For semigroup-kind presentations the identity class is
// silently adjoined, so n_classes counts it too.
struct AbstractTable {
  std::uint32_t n_classes = 0;
  std::uint32_t n_letters = 0;
  std::vector<std::uint32_t> table;  // row-major
  std::uint64_t classes_peak = 0;
  bool complete = true;

  std::uint32_t at(std::uint32_t c, std::uint32_t x) const {
    return table[static_cast<std::size_t>(c) * n_letters + x];
  }
};

enum class Strategy { Felsch, Hlt };

inline std::string strategy_name(Strategy s) { return s == Strategy::Felsch ? "felsch" : "hlt"; }

namespace detail {

class ToddCoxeter {
 public:
  ToddCoxeter(const Presentation& p, std::uint64_t cap, Strategy strat)
      : nl_(static_cast<std::uint32_t>(p.letters.size())), cap_(cap), strat_(strat) {
    for (const Relation& r : p.relations) {
      if (!p.monoid && (r.lhs.empty() || r.rhs.empty()))
        throw UsageError("semigroup presentation has an empty relation side (" + r.label + ")");
      rels_.emplace_back(r.lhs, r.rhs);
    }
  }

  AbstractTable run() {
    const std::uint32_t c0 = create_class();
    if (strat_ == Strategy::Felsch) {
      queue_instances(c0);
      run_felsch();
    } else {
      run_hlt();
    }
    validate();
    return compact();
  }

 private:
  static constexpr std::uint32_t UNDEF = UINT32_MAX;

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::uint32_t get(std::uint32_t c, std::uint32_t x) {
    std::uint32_t raw = tab_[static_cast<std::size_t>(c) * nl_ + x];
    return raw == UNDEF ? UNDEF : find(raw);
  }

  std::uint32_t create_class() {
    if (created_ >= cap_)
      throw CapExceeded("congruence enumeration hit the class cap of " + std::to_string(cap_),
                        live_, peak_);
    auto id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(id);
    tab_.resize(tab_.size() + nl_, UNDEF);
    ++created_;
    ++live_;
    peak_ = std::max(peak_, live_);
    return id;
  }

  void queue_instances(std::uint32_t cls) {
    for (std::uint32_t r = 0; r < rels_.size(); ++r) pending_.emplace_back(cls, r);
  }

  std::uint64_t key(std::uint32_t c, std::uint32_t x) const {
    return static_cast<std::uint64_t>(c) * nl_ + x;
  }

  void wake(std::uint32_t c, std::uint32_t x) {
    auto it = suspended_.find(key(c, x));
    if (it == suspended_.end()) return;
    for (auto& inst : it->second) pending_.push_back(inst);
    suspended_.erase(it);
  }

  // Define (or reconcile) the edge c . x = d; c must be a live root.
  void set_edge(std::uint32_t c, std::uint32_t x, std::uint32_t d) {
    std::uint32_t& slot = tab_[static_cast<std::size_t>(c) * nl_ + x];
    if (slot != UNDEF) {
      std::uint32_t a = find(slot), b = find(d);
      if (a != b) coinc_.emplace_back(a, b);
      return;
    }
    slot = d;
    wake(c, x);
  }

  void drain_coincidences() {
    while (!coinc_.empty()) {
      auto [x, y] = coinc_.front();
      coinc_.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);  // the smaller id survives
      parent_[y] = x;
      --live_;
      for (std::uint32_t l = 0; l < nl_; ++l) {
        auto it = suspended_.find(key(y, l));
        if (it != suspended_.end()) {
          for (auto& inst : it->second) pending_.push_back(inst);
          suspended_.erase(it);
        }
      }
      for (std::uint32_t l = 0; l < nl_; ++l) {
        std::uint32_t ty = tab_[static_cast<std::size_t>(y) * nl_ + l];
        if (ty == UNDEF) continue;
        std::uint32_t& tx = tab_[static_cast<std::size_t>(x) * nl_ + l];
        if (tx == UNDEF) {
          tx = ty;
          wake(x, l);
        } else {
          std::uint32_t a = find(tx), b = find(ty);
          if (a != b) coinc_.emplace_back(a, b);
        }
      }
    }
  }

  struct WalkResult {
    bool complete = false;
    std::uint32_t end = 0;    // final node when complete
    std::uint32_t stall = 0;  // node whose outgoing edge is missing
    std::size_t pos = 0;      // index of the missing letter
  };

  WalkResult walk(std::uint32_t start, const std::vector<int>& word) {
    WalkResult w;
    std::uint32_t cur = start;
    for (std::size_t k = 0; k < word.size(); ++k) {
      std::uint32_t nxt = get(cur, static_cast<std::uint32_t>(word[k]));
      if (nxt == UNDEF) {
        w.stall = cur;
        w.pos = k;
        return w;
      }
      cur = nxt;
    }
    w.complete = true;
    w.end = cur;
    return w;
  }

  void suspend(std::uint32_t stall, std::uint32_t letter, std::uint32_t origin, std::uint32_t r) {
    suspended_[key(stall, letter)].emplace_back(origin, r);
  }

  // Process one relation instance: conclude with a coincidence or a deduced
  // final edge, or park it on the first missing edge of each stalled side.
  void felsch_trace(std::uint32_t origin, std::uint32_t r) {
    const std::uint32_t start = find(origin);
    const auto& [lhs, rhs] = rels_[r];
    WalkResult L = walk(start, lhs);
    WalkResult R = walk(start, rhs);
    if (L.complete && R.complete) {
      std::uint32_t a = find(L.end), b = find(R.end);
      if (a != b) coinc_.emplace_back(a, b);
      return;
    }
    if (L.complete && !R.complete && R.pos + 1 == rhs.size()) {
      set_edge(R.stall, static_cast<std::uint32_t>(rhs[R.pos]), L.end);
      return;
    }
    if (R.complete && !L.complete && L.pos + 1 == lhs.size()) {
      set_edge(L.stall, static_cast<std::uint32_t>(lhs[L.pos]), R.end);
      return;
    }
    if (!L.complete) suspend(L.stall, static_cast<std::uint32_t>(lhs[L.pos]), origin, r);
    if (!R.complete) suspend(R.stall, static_cast<std::uint32_t>(rhs[R.pos]), origin, r);
  }

  void run_felsch() {
    std::uint64_t scan_class = 0;
    std::uint32_t scan_letter = 0;
    while (true) {
      drain_coincidences();
      if (!pending_.empty()) {
        auto [origin, r] = pending_.front();
        pending_.pop_front();
        felsch_trace(origin, r);
        continue;
      }
      // no deductions left: fill the first missing edge with a fresh class
      bool defined = false;
      while (scan_class < created_) {
        auto c = static_cast<std::uint32_t>(scan_class);
        if (find(c) != c) {
          ++scan_class;
          scan_letter = 0;
          continue;
        }
        if (scan_letter >= nl_) {
          ++scan_class;
          scan_letter = 0;
          continue;
        }
        if (tab_[static_cast<std::size_t>(c) * nl_ + scan_letter] != UNDEF) {
          ++scan_letter;
          continue;
        }
        std::uint32_t d = create_class();
        set_edge(c, scan_letter, d);
        queue_instances(d);
        defined = true;
        break;
      }
      if (!defined && pending_.empty() && coinc_.empty()) break;
    }
  }

  // Trace one relation from class c, filling every missing edge except the
  // last one of the right side, which is deduced (or reconciled).
  void hlt_trace(std::uint32_t c, std::uint32_t r) {
    const auto& [lhs, rhs] = rels_[r];
    std::uint32_t cur = find(c);
    for (int x : lhs) {
      std::uint32_t nxt = get(cur, static_cast<std::uint32_t>(x));
      if (nxt == UNDEF) {
        nxt = create_class();
        set_edge(cur, static_cast<std::uint32_t>(x), nxt);
      }
      cur = nxt;
    }
    const std::uint32_t end_l = cur;
    cur = find(c);
    if (rhs.empty()) {
      if (find(end_l) != cur) coinc_.emplace_back(find(end_l), cur);
      return;
    }
    for (std::size_t k = 0; k + 1 < rhs.size(); ++k) {
      std::uint32_t nxt = get(cur, static_cast<std::uint32_t>(rhs[k]));
      if (nxt == UNDEF) {
        nxt = create_class();
        set_edge(cur, static_cast<std::uint32_t>(rhs[k]), nxt);
      }
      cur = nxt;
    }
    set_edge(cur, static_cast<std::uint32_t>(rhs.back()), end_l);
  }

  void run_hlt() {
    for (std::uint64_t c = 0; c < created_; ++c) {
      if (find(static_cast<std::uint32_t>(c)) != c) continue;
      for (std::uint32_t r = 0; r < rels_.size(); ++r) {
        hlt_trace(static_cast<std::uint32_t>(c), r);
        drain_coincidences();
      }
      std::uint32_t root = find(static_cast<std::uint32_t>(c));
      // fill the row so the final table is total
      for (std::uint32_t l = 0; l < nl_; ++l) {
        if (get(root, l) != UNDEF) continue;
        std::uint32_t d = create_class();
        set_edge(root, l, d);
        drain_coincidences();
        root = find(root);
      }
    }
  }

  void validate() {
    for (std::uint32_t c = 0; c < created_; ++c) {
      if (find(c) != c) continue;
      for (std::uint32_t l = 0; l < nl_; ++l)
        if (get(c, l) == UNDEF) throw Error("internal: congruence table is not total");
      for (const auto& [lhs, rhs] : rels_) {
        WalkResult L = walk(c, lhs);
        WalkResult R = walk(c, rhs);
        if (!L.complete || !R.complete || find(L.end) != find(R.end))
          throw Error("internal: congruence table violates a defining relation");
      }
    }
  }

  AbstractTable compact() {
    AbstractTable out;
    out.n_letters = nl_;
    out.classes_peak = peak_;
    std::unordered_map<std::uint32_t, std::uint32_t> renumber;
    for (std::uint32_t c = 0; c < created_; ++c)
      if (find(c) == c) {
        auto id = static_cast<std::uint32_t>(renumber.size());
        renumber[c] = id;
      }
    out.n_classes = static_cast<std::uint32_t>(renumber.size());
    out.table.assign(static_cast<std::size_t>(out.n_classes) * nl_, 0);
    for (std::uint32_t c = 0; c < created_; ++c) {
      if (find(c) != c) continue;
      for (std::uint32_t l = 0; l < nl_; ++l)
        out.table[static_cast<std::size_t>(renumber[c]) * nl_ + l] = renumber[get(c, l)];
    }
    return out;
  }

  std::uint32_t nl_;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rels_;
  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> parent_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> coinc_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>
      suspended_;
  std::uint64_t cap_;
  std::uint64_t created_ = 0, live_ = 0, peak_ = 0;
  Strategy strat_;
};

}  // namespace detail

// Enumerate the classes of the monoid (or semigroup-with-adjoined-identity)
// defined by the presentation. Throws CapExceeded once `cap` classes have
// been created.
inline AbstractTable enumerate_quotient(const Presentation& p, std::uint64_t cap,
                                        Strategy strategy = Strategy::Felsch) {
  detail::ToddCoxeter tc(p, cap, strategy);
  return tc.run();
}

// Canonical renumbering of a total table by breadth-first search from class
// 0 scanning letters in order; two tables describe the same pointed action
// graph exactly when their canonical forms agree.
inline std::vector<std::uint32_t> canonical_table_form(const AbstractTable& t) {
  std::vector<std::uint32_t> order(t.n_classes, UINT32_MAX);
  std::vector<std::uint32_t> bfs;
  order[0] = 0;
  bfs.push_back(0);
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (std::uint32_t l = 0; l < t.n_letters; ++l) {
      std::uint32_t d = t.at(bfs[head], l);
      if (order[d] == UINT32_MAX) {
        order[d] = static_cast<std::uint32_t>(bfs.size());
        bfs.push_back(d);
      }
    }
  if (bfs.size() != t.n_classes)
    throw Error("internal: abstract table is not reachable from the identity class");
  std::vector<std::uint32_t> out(static_cast<std::size_t>(t.n_classes) * t.n_letters);
  for (std::uint32_t c = 0; c < t.n_classes; ++c)
    for (std::uint32_t l = 0; l < t.n_letters; ++l)
      out[static_cast<std::size_t>(order[c]) * t.n_letters + l] = order[t.at(c, l)];
  return out;
}

// View a concrete closure table as an abstract one. When the closure was
// built without the identity (semigroup kind) an identity row is adjoined in
// front, mirroring what the congruence enumerator reports.
inline AbstractTable to_abstract(const MonoidTable& t) {
  AbstractTable out;
  out.n_letters = static_cast<std::uint32_t>(t.generators.size());
  if (t.has_identity) {
    out.n_classes = static_cast<std::uint32_t>(t.size());
    for (const auto& row : t.right_action)
      for (std::uint32_t d : row) out.table.push_back(d);
  } else {
    out.n_classes = static_cast<std::uint32_t>(t.size()) + 1;
    for (std::size_t g = 0; g < t.generators.size(); ++g) {
      auto idx = t.index_of(t.generators[g]);
      if (!idx) throw Error("internal: generator missing from its own closure");
      out.table.push_back(*idx + 1);
    }
    for (const auto& row : t.right_action)
      for (std::uint32_t d : row) out.table.push_back(d + 1);
  }
  out.classes_peak = out.n_classes;
  return out;
}

inline bool tables_isomorphic(const AbstractTable& a, const AbstractTable& b) {
  if (a.n_classes != b.n_classes || a.n_letters != b.n_letters) return false;
  return canonical_table_form(a) == canonical_table_form(b);
}

// --- presentation verification ---------------------------------------------

struct VerifyReport {
  std::string preset;
  int n = 0;
  std::string kind;  // "monoid" or "semigroup"
  bool sound = false;
  std::vector<std::string> relation_failures;
  std::uint64_t abstract_size = 0;
  std::uint64_t concrete_size = 0;
  bool complete = false;
  std::uint64_t classes_peak = 0;
  double wall_time = 0.0;  // seconds
  bool degraded = false;

  // abstract classes match the concrete monoid (plus the adjoined identity
  // class for semigroup kind)
  bool sizes_match() const {
    return complete && abstract_size == concrete_size + (kind == "semigroup" ? 1 : 0);
  }
  bool passed() const { return sound && (degraded || sizes_match()); }
};

// Soundness plus completeness: evaluate every relation on the letter images,
// enumerate the abstract quotient, and compare against the closure of the
// images. cap = 0 picks the default of 50x the expected class count.
inline VerifyReport verify_presentation(const Presentation& p, std::uint64_t cap = 0,
                                        Strategy strategy = Strategy::Felsch,
                                        bool* isomorphic_out = nullptr) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.preset = p.id;
  rep.n = p.n;
  rep.kind = p.monoid ? "monoid" : "semigroup";
  rep.degraded = p.degraded;

  SoundnessReport sound = check_soundness(p);
  rep.sound = sound.sound;
  for (const auto& f : sound.failures) rep.relation_failures.push_back(f.label);

  MonoidTable concrete = closure(p.n, p.images, /*include_identity=*/p.monoid, UINT64_MAX,
                                 p.letters);
  rep.concrete_size = concrete.size();

  const std::uint64_t expected = rep.concrete_size + (p.monoid ? 0 : 1);
  const std::uint64_t effective_cap = cap ? cap : 50 * std::max<std::uint64_t>(expected, 1);
  try {
    AbstractTable abs = enumerate_quotient(p, effective_cap, strategy);
    rep.abstract_size = abs.n_classes;
    rep.classes_peak = abs.classes_peak;
    rep.complete = true;
    if (isomorphic_out) {
      *isomorphic_out =
          abs.n_classes == expected && tables_isomorphic(abs, to_abstract(concrete));
    }
  } catch (const CapExceeded& ex) {
    rep.abstract_size = ex.live;
    rep.classes_peak = ex.peak;
    rep.complete = false;
    if (isomorphic_out) *isomorphic_out = false;
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace rookpm

#endif  // ROOKPM_CONGRUENCE_HPP_
