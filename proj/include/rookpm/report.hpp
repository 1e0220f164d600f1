#ifndef ROOKPM_REPORT_HPP_
#define ROOKPM_REPORT_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rookpm/congruence.hpp"
#include "rookpm/diagram.hpp"
#include "rookpm/enumeration.hpp"
#include "rookpm/normal_forms.hpp"
#include "rookpm/presentations.hpp"
#include "rookpm/twisted.hpp"
#include "rookpm/words.hpp"

namespace rookpm {

// Fixed field order so reports are byte-stable (apart from wall_time).
inline nlohmann::ordered_json verify_report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["preset"] = r.preset;
  j["n"] = r.n;
  j["kind"] = r.kind;
  j["sound"] = r.sound;
  j["relation_failures"] = r.relation_failures;
  j["abstract_size"] = r.abstract_size;
  j["concrete_size"] = r.concrete_size;
  j["complete"] = r.complete;
  j["classes_peak"] = r.classes_peak;
  j["wall_time"] = r.wall_time;
  return j;
}

inline std::string verify_report_text(const VerifyReport& r) {
  std::string out;
  out += "preset=" + r.preset + " n=" + std::to_string(r.n) + " kind=" + r.kind + "\n";
  out += "sound=" + std::string(r.sound ? "true" : "false");
  if (!r.relation_failures.empty()) {
    out += " failures:";
    for (const auto& f : r.relation_failures) out += " " + f;
  }
  out += "\n";
  out += "abstract_size=" + std::to_string(r.abstract_size) +
         " concrete_size=" + std::to_string(r.concrete_size) +
         " complete=" + std::string(r.complete ? "true" : "false") +
         " classes_peak=" + std::to_string(r.classes_peak) + "\n";
  return out;
}

// --- claim summary ------------------------------------------------------------

struct ClaimRow {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct ClaimReport {
  std::vector<ClaimRow> rows;
  bool all_passed() const {
    for (const auto& r : rows)
      if (!r.passed) return false;
    return true;
  }
};

namespace detail {

inline void claim_closure_full(ClaimReport& rep, int n, std::uint64_t expect) {
  Presentation p = instantiate("R18-43", n);
  MonoidTable t = closure(n, p.images, /*include_identity=*/true, UINT64_MAX, p.letters);
  const std::uint64_t bell = bell_oracle(2 * n);
  ClaimRow row;
  row.claim = "RP_" + std::to_string(n) + " has " + std::to_string(expect) +
              " elements and the one-letter generators produce all of them";
  row.passed = t.size() == expect && bell == expect;
  row.detail = "closure=" + std::to_string(t.size()) + " count=" + std::to_string(bell);
  rep.rows.push_back(std::move(row));
}

inline void claim_closure_singular(ClaimReport& rep, int n, std::uint64_t expect) {
  Presentation p = instantiate("R1-17", n);
  MonoidTable t = closure(n, p.images, /*include_identity=*/false, UINT64_MAX, p.letters);
  ClaimRow row;
  row.claim = "the singular part of RP_" + std::to_string(n) + " has " + std::to_string(expect) +
              " elements, generated by the e/t/o family";
  row.passed = t.size() == expect;
  row.detail = "closure=" + std::to_string(t.size());
  rep.rows.push_back(std::move(row));
}

inline void claim_presentation(ClaimReport& rep, const std::string& preset, int n,
                               const std::string& what) {
  Presentation p = instantiate(preset, n);
  bool iso = false;
  VerifyReport r = verify_presentation(p, 0, Strategy::Felsch, &iso);
  ClaimRow row;
  row.claim = "the " + preset + " relations hold in RP_" + std::to_string(n) + " and present " +
              what;
  row.passed = r.passed() && (p.degraded || iso);
  row.detail = "abstract=" + std::to_string(r.abstract_size) +
               " concrete=" + std::to_string(r.concrete_size) + (iso ? " iso" : "");
  rep.rows.push_back(std::move(row));
}

inline void claim_twisted(ClaimReport& rep, const std::string& preset, int n) {
  Presentation p = instantiate(preset, n);
  TwistedReport r = verify_twisted_relations(p);
  ClaimRow row;
  row.claim = "the " + preset + " relations hold with coefficients in the twisted algebra at "
              "degree " + std::to_string(n);
  row.passed = r.ok;
  row.detail = std::to_string(r.relations_checked) + " relations";
  rep.rows.push_back(std::move(row));
}

}  // namespace detail

// Re-derives the headline facts: element counts, the four presentations,
// minimal generating set sizes, necessity of the extra generators, the
// cocycle law, the twisted presentations, and the factorizations.
inline ClaimReport run_claim_report(bool full = false) {
  ClaimReport rep;

  detail::claim_closure_full(rep, 2, 52);
  detail::claim_closure_full(rep, 3, 877);
  if (full) detail::claim_closure_full(rep, 4, 21147);
  detail::claim_closure_singular(rep, 2, 50);
  detail::claim_closure_singular(rep, 3, 871);
  if (full) detail::claim_closure_singular(rep, 4, 21123);

  detail::claim_presentation(rep, "R1-10", 2, "the singular part of P_2");
  detail::claim_presentation(rep, "R1-10", 3, "the singular part of P_3");
  detail::claim_presentation(rep, "R1-17", 2, "the singular part of RP_2");
  detail::claim_presentation(rep, "R1-17", 3, "the singular part of RP_3");
  detail::claim_presentation(rep, "R18-33", 2, "P_2");
  detail::claim_presentation(rep, "R18-33", 3, "P_3");
  detail::claim_presentation(rep, "R18-43", 2, "RP_2");
  detail::claim_presentation(rep, "R18-43", 3, "RP_3");
  detail::claim_presentation(rep, "R44-59", 3, "RP_3");
  detail::claim_presentation(rep, "R60-70", 3, "RP_3");
  detail::claim_presentation(rep, "R60-only", 3, "S_3");
  if (full) detail::claim_presentation(rep, "R60-70", 4, "RP_4");

  {
    Presentation p = instantiate("R18-43", 2);
    MonoidTable t = closure(2, p.images, true, UINT64_MAX, p.letters);
    GenSetSearchResult no3 = search_generating_sets(t, 3);
    GenSetSearchResult yes4 = search_generating_sets(t, 4);
    rep.rows.push_back({"RP_2 has no generating set of size 3 but has one of size 4",
                        !no3.found && yes4.found,
                        "tested " + std::to_string(no3.candidates_tested) + " + " +
                            std::to_string(yes4.candidates_tested) + " candidates"});

    Presentation ps = instantiate("R1-17", 2);
    MonoidTable ts = closure(2, ps.images, false, UINT64_MAX, ps.letters);
    GenSetSearchResult no4 = search_generating_sets(ts, 4);
    rep.rows.push_back({"the singular part of RP_2 has no generating set of size 4",
                        !no4.found,
                        "tested " + std::to_string(no4.candidates_tested) + " candidates"});
  }

  {
    const int n = 3;
    Presentation ps = instantiate("R1-17", n);
    MonoidTable sing = closure(n, ps.images, false, UINT64_MAX, ps.letters);
    Presentation pf = instantiate("R18-43", n);
    MonoidTable fullt = closure(n, pf.images, true, UINT64_MAX, pf.letters);

    auto dom_misses_exactly = [n](const RookPartition& d, int j) {
      DiagramStats s = stats(d);
      if (static_cast<int>(s.dom.size()) != n - 1) return false;
      for (int x : s.dom)
        if (x == j) return false;
      return true;
    };
    auto upper_isolated = [](const RookPartition& d, int j) {
      int b = d.block_of(d.upper(j));
      if (b == RookPartition::kRook) return false;
      for (int v = 0; v < 2 * d.degree(); ++v)
        if (v != d.upper(j) && d.block_of(v) == b) return false;
      return true;
    };

    bool e1_needed = necessity_check(
        sing,
        [&](const RookPartition& d) { return dom_misses_exactly(d, 1) && upper_isolated(d, 1); },
        gen_e(n, 1));
    rep.rows.push_back({"in the singular part of RP_3, e_1 needs a factor with domain {2,3} and "
                        "isolated upper 1",
                        e1_needed, ""});

    bool o1_needed = necessity_check(
        sing,
        [&](const RookPartition& d) {
          return dom_misses_exactly(d, 1) && d.is_rook(d.upper(1));
        },
        gen_o(n, 1));
    rep.rows.push_back({"in the singular part of RP_3, o_1 needs a factor with domain {2,3} and "
                        "upper 1 a rook dot",
                        o1_needed, ""});

    bool t12_needed = necessity_check(
        sing,
        [&](const RookPartition& d) {
          DiagramStats s = stats(d);
          if (static_cast<int>(s.dom.size()) != n) return false;
          // canonical class ids for the partition {1,2 | 3 | ... | n}
          std::vector<int> eps(static_cast<std::size_t>(n), 0);
          for (int i = 2; i < n; ++i) eps[static_cast<std::size_t>(i)] = i - 1;
          return s.ker == eps;
        },
        gen_t(n, 1, 2));
    rep.rows.push_back({"in the singular part of RP_3, t_12 needs a factor with full domain and "
                        "kernel joining exactly 1 and 2",
                        t12_needed, ""});

    bool o_needed_full = necessity_check(
        fullt,
        [&](const RookPartition& d) {
          for (int j = 1; j <= n; ++j)
            if (dom_misses_exactly(d, j) && d.is_rook(d.upper(j))) return true;
          return false;
        },
        gen_o(n, 1));
    rep.rows.push_back({"in RP_3, o_1 needs a factor with a rook dot on the one point missing "
                        "from its domain",
                        o_needed_full, ""});

    bool t_needed_full = necessity_check(
        fullt,
        [&](const RookPartition& d) {
          DiagramStats s = stats(d);
          return static_cast<int>(s.dom.size()) == n && !is_trivial_partition(s.ker);
        },
        gen_t(n, 1, 2));
    rep.rows.push_back({"in RP_3, t_12 needs a factor with full domain and a non-trivial kernel",
                        t_needed_full, ""});
  }

  {
    CocycleReport c2 = check_cocycle_exhaustive(2);
    rep.rows.push_back({"the twist obeys the cocycle law on every triple at degree 2",
                        c2.failures == 0,
                        std::to_string(c2.checked) + " triples"});
    CocycleReport c3 = check_cocycle_sampled(3, full ? 1000000 : 200000, 20260815);
    rep.rows.push_back({"the twist obeys the cocycle law on sampled triples at degree 3",
                        c3.failures == 0,
                        std::to_string(c3.checked) + " triples"});
  }

  detail::claim_twisted(rep, "R1-17-delta", 2);
  detail::claim_twisted(rep, "R1-17-delta", 3);
  detail::claim_twisted(rep, "R18-43-delta", 2);
  detail::claim_twisted(rep, "R18-43-delta", 3);
  detail::claim_twisted(rep, "R60-70-delta", 3);

  {
    std::uint64_t checked = 0, good = 0;
    for (const RookPartition& d : all_rook_partitions(3)) {
      if (!classify(d).in_Pn) continue;
      ++checked;
      BgdFactors f = factor_bgd(d);
      if (f.beta * f.gamma * f.delta == d) ++good;
    }
    rep.rows.push_back({"every element of P_3 factors as fold * partial injection * fold",
                        checked == 203 && good == checked,
                        std::to_string(good) + "/" + std::to_string(checked)});
  }
  {
    std::uint64_t checked = 0, good = 0;
    for (const RookPartition& d : all_rook_partitions(3)) {
      ++checked;
      Word w = decompose(d);
      if (evaluate(3, w) == d) ++good;
    }
    rep.rows.push_back({"every element of RP_3 is recovered from its constructive word",
                        checked == 877 && good == checked,
                        std::to_string(good) + "/" + std::to_string(checked)});
  }

  return rep;
}

inline void print_claim_report(const ClaimReport& rep, std::ostream& os) {
  for (const auto& row : rep.rows) {
    os << (row.passed ? "[PASS] " : "[FAIL] ") << row.claim;
    if (!row.detail.empty()) os << " (" << row.detail << ")";
    os << "\n";
  }
  os << (rep.all_passed() ? "all claims verified\n" : "SOME CLAIMS FAILED\n");
}

}  // namespace rookpm

#endif  // ROOKPM_REPORT_HPP_
