// Command line front end: diagram arithmetic, enumeration, presentation
// verification, generating-set search, cocycle checks, and twisted-algebra
// products. Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap hit.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rookpm/congruence.hpp"
#include "rookpm/diagram.hpp"
#include "rookpm/enumeration.hpp"
#include "rookpm/errors.hpp"
#include "rookpm/normal_forms.hpp"
#include "rookpm/presentations.hpp"
#include "rookpm/report.hpp"
#include "rookpm/twisted.hpp"
#include "rookpm/words.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  int n = 0;
  std::uint64_t cap = 0;
  std::uint64_t seed = 20260815;
  std::string format = "text";
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw rookpm::IoError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string vertex_label(int v, int n) {
  return v < n ? std::to_string(v + 1) : std::to_string(v - n + 1) + "'";
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

std::string classes_text(const std::vector<int>& ids) {
  int m = 0;
  for (int c : ids) m = std::max(m, c + 1);
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < ids.size(); ++i)
    cls[static_cast<std::size_t>(ids[i])].push_back(static_cast<int>(i) + 1);
  std::string out;
  for (const auto& k : cls) {
    if (!out.empty()) out += "|";
    out += join_ints(k);
  }
  return out;
}

rookpm::MonoidTable named_monoid_table(const std::string& name, int n) {
  using namespace rookpm;
  std::vector<RookPartition> gens;
  std::vector<std::string> names;
  bool with_identity = true;
  if (name == "RPn") {
    Presentation p = instantiate("R18-43", n);
    gens = p.images;
    names = p.letters;
  } else if (name == "RPn-sing") {
    Presentation p = instantiate("R1-17", n);
    gens = p.images;
    names = p.letters;
    with_identity = false;
  } else if (name == "Pn") {
    Presentation p = instantiate("R18-33", n);
    gens = p.images;
    names = p.letters;
  } else if (name == "Pn-sing") {
    Presentation p = instantiate("R1-10", n);
    gens = p.images;
    names = p.letters;
    with_identity = false;
  } else if (name == "Sn" || name == "In" || name == "Jn" || name == "Rn") {
    for (int i = 1; i < n; ++i) {
      gens.push_back(gen_s(n, i));
      names.push_back("s" + std::to_string(i));
    }
    if (name == "In") {
      gens.push_back(gen_e(n, 1));
      names.push_back("e1");
    } else if (name == "Jn") {
      gens.push_back(gen_q(n, 1));
      names.push_back("q1");
    } else if (name == "Rn") {
      gens.push_back(gen_o(n, 1));
      names.push_back("o1");
    }
    if (gens.empty()) {
      gens.push_back(RookPartition::identity(n));
      names.push_back("1");
    }
  } else {
    throw UsageError("unknown monoid name: " + name +
                     " (expected RPn, RPn-sing, Pn, Pn-sing, In, Jn, Sn, Rn)");
  }
  return closure(n, gens, with_identity, UINT64_MAX, names);
}

int require_n(const Options& g) {
  if (g.n <= 0) throw rookpm::UsageError("this subcommand needs a degree: pass -n <int>");
  return g.n;
}

void check_degree_match(const Options& g, const rookpm::RookPartition& d) {
  if (g.n > 0 && g.n != d.degree())
    throw rookpm::DegreeMismatch("-n " + std::to_string(g.n) + " vs diagram of degree " +
                                 std::to_string(d.degree()));
}

int cmd_eval(const Options& g, const std::string& text) {
  const int n = require_n(g);
  rookpm::Word w = rookpm::parse_word_auto(text);
  auto [d, m] = rookpm::evaluate_with_twist(n, w);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["literal"] = rookpm::to_literal(d);
    j["twist"] = m;
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << rookpm::to_literal(d) << "\n";
  }
  return 0;
}

int cmd_mult(const Options& g, const std::string& at, const std::string& bt) {
  rookpm::RookPartition a = rookpm::parse_literal(at);
  rookpm::RookPartition b = rookpm::parse_literal(bt);
  check_degree_match(g, a);
  auto [d, m] = rookpm::compose(a, b);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["literal"] = rookpm::to_literal(d);
    j["twist"] = m;
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << rookpm::to_literal(d) << "\n" << "twist=" << m << "\n";
  }
  return 0;
}

int cmd_stats(const Options& g, const std::string& text) {
  rookpm::RookPartition d = rookpm::parse_literal(text);
  check_degree_match(g, d);
  rookpm::DiagramStats s = rookpm::stats(d);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["rank"] = s.rank;
    j["dom"] = s.dom;
    j["codom"] = s.codom;
    j["ker"] = s.ker;
    j["coker"] = s.coker;
    std::vector<std::string> supp;
    for (int v : s.supp) supp.push_back(vertex_label(v, d.degree()));
    j["supp"] = supp;
    out.stream() << j.dump() << "\n";
  } else {
    std::string supp;
    for (int v : s.supp) {
      if (!supp.empty()) supp += ",";
      supp += vertex_label(v, d.degree());
    }
    out.stream() << "rank=" << s.rank << "\n"
                 << "dom=" << join_ints(s.dom) << "\n"
                 << "codom=" << join_ints(s.codom) << "\n"
                 << "ker=" << classes_text(s.ker) << "\n"
                 << "coker=" << classes_text(s.coker) << "\n"
                 << "supp=" << supp << "\n";
  }
  return 0;
}

int cmd_classify(const Options& g, const std::string& text) {
  rookpm::RookPartition d = rookpm::parse_literal(text);
  check_degree_match(g, d);
  rookpm::Membership m = rookpm::classify(d);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["Pn"] = m.in_Pn;
    j["In"] = m.in_In;
    j["Jn"] = m.in_Jn;
    j["Sn"] = m.in_Sn;
    j["Rn"] = m.in_Rn;
    j["singular"] = m.singular;
    out.stream() << j.dump() << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out.stream() << "Pn=" << yn(m.in_Pn) << " In=" << yn(m.in_In) << " Jn=" << yn(m.in_Jn)
                 << " Sn=" << yn(m.in_Sn) << " Rn=" << yn(m.in_Rn)
                 << " singular=" << yn(m.singular) << "\n";
  }
  return 0;
}

int cmd_factor(const Options& g, const std::string& mode, const std::string& text) {
  rookpm::RookPartition d = rookpm::parse_literal(text);
  check_degree_match(g, d);
  Output out(g.out);
  if (mode == "bgd") {
    rookpm::BgdFactors f = rookpm::factor_bgd(d);
    if (g.format == "json") {
      ordered_json j;
      j["beta"] = rookpm::to_literal(f.beta);
      j["gamma"] = rookpm::to_literal(f.gamma);
      j["delta"] = rookpm::to_literal(f.delta);
      out.stream() << j.dump() << "\n";
    } else {
      out.stream() << "beta=" << rookpm::to_literal(f.beta) << "\n"
                   << "gamma=" << rookpm::to_literal(f.gamma) << "\n"
                   << "delta=" << rookpm::to_literal(f.delta) << "\n";
    }
  } else if (mode == "rook") {
    rookpm::RookFactors f = rookpm::factor_rook(d);
    if (g.format == "json") {
      ordered_json j;
      j["p"] = f.p;
      j["q"] = f.q;
      j["beta"] = rookpm::to_literal(f.beta);
      out.stream() << j.dump() << "\n";
    } else {
      out.stream() << "p=" << join_ints(f.p) << "\n"
                   << "q=" << join_ints(f.q) << "\n"
                   << "beta=" << rookpm::to_literal(f.beta) << "\n";
    }
  } else {
    throw rookpm::UsageError("unknown factor mode: " + mode + " (expected bgd or rook)");
  }
  return 0;
}

int cmd_decompose(const Options& g, const std::string& text, bool to_seqo) {
  rookpm::RookPartition d = rookpm::parse_literal(text);
  check_degree_match(g, d);
  rookpm::Word w = rookpm::decompose(d);
  if (to_seqo) w = rookpm::rho(w);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["alphabet"] = rookpm::alphabet_name(w.alphabet);
    j["word"] = rookpm::print_word(w);
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << rookpm::print_word(w) << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& g, const std::string& monoid, const std::string& export_kind) {
  const int n = require_n(g);
  rookpm::MonoidTable t = named_monoid_table(monoid, n);
  Output out(g.out);
  if (export_kind == "table") {
    rookpm::export_table(t, out.stream());
    return 0;
  }
  if (export_kind == "cayley") {
    rookpm::export_cayley(t, out.stream());
    return 0;
  }
  if (!export_kind.empty())
    throw rookpm::UsageError("unknown export kind: " + export_kind +
                             " (expected table or cayley)");
  if (g.format == "json") {
    ordered_json j;
    j["monoid"] = monoid;
    j["n"] = n;
    j["count"] = t.size();
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << t.size() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& g, const std::string& preset, const std::string& strategy,
               bool check_iso) {
  const int n = require_n(g);
  if (strategy != "hlt" && strategy != "felsch")
    throw rookpm::UsageError("unknown strategy: " + strategy + " (expected felsch or hlt)");
  rookpm::Presentation p = rookpm::instantiate(preset, n);
  rookpm::Strategy strat =
      strategy == "hlt" ? rookpm::Strategy::Hlt : rookpm::Strategy::Felsch;
  bool iso = true;
  rookpm::VerifyReport rep =
      rookpm::verify_presentation(p, g.cap, strat, check_iso ? &iso : nullptr);
  if (p.twisted) {
    rookpm::TwistedReport tw = rookpm::verify_twisted_relations(p);
    if (!tw.ok) {
      rep.sound = false;
      for (const auto& f : tw.failures) rep.relation_failures.push_back(f + " (coefficients)");
    }
  }
  Output out(g.out);
  if (g.format == "json")
    out.stream() << rookpm::verify_report_json(rep).dump(2) << "\n";
  else
    out.stream() << rookpm::verify_report_text(rep);
  if (rep.passed() && (!check_iso || iso)) return 0;
  if (!rep.complete && !rep.degraded) return 3;
  return 1;
}

int cmd_rank_search(const Options& g, const std::string& monoid, int k, std::uint64_t limit,
                    bool no_prune) {
  const int n = require_n(g);
  rookpm::MonoidTable t = named_monoid_table(monoid, n);
  rookpm::GenSetSearchResult r = rookpm::search_generating_sets(t, k, limit, !no_prune);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["monoid"] = monoid;
    j["n"] = n;
    j["k"] = k;
    j["found"] = r.found;
    std::vector<std::string> lits;
    for (std::uint32_t idx : r.witness) lits.push_back(rookpm::to_literal(t.elements[idx]));
    j["witness"] = lits;
    j["candidates_tested"] = r.candidates_tested;
    out.stream() << j.dump() << "\n";
  } else {
    if (r.found) {
      out.stream() << "found generating set of size " << k << ":\n";
      for (std::uint32_t idx : r.witness)
        out.stream() << "  " << rookpm::to_literal(t.elements[idx]) << "\n";
    } else {
      out.stream() << "no generating set of size " << k << " (tested " << r.candidates_tested
                   << " candidates)\n";
    }
  }
  return 0;
}

int cmd_cocycle(const Options& g, std::uint64_t samples) {
  const int n = require_n(g);
  rookpm::CocycleReport r = samples == 0 ? rookpm::check_cocycle_exhaustive(n)
                                         : rookpm::check_cocycle_sampled(n, samples, g.seed);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["n"] = n;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << "checked=" << r.checked << " failures=" << r.failures << "\n";
  }
  return r.failures == 0 ? 0 : 1;
}

int cmd_algebra_mult(const Options& g, const std::string& at, const std::string& bt) {
  const int n = require_n(g);
  rookpm::AlgebraElement a = rookpm::parse_algebra_literal(n, at);
  rookpm::AlgebraElement b = rookpm::parse_algebra_literal(n, bt);
  rookpm::AlgebraElement c = rookpm::star_multiply(a, b);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json j;
    j["literal"] = rookpm::to_algebra_literal(c);
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << rookpm::to_algebra_literal(c) << "\n";
  }
  return 0;
}

int cmd_report(const Options& g, bool full) {
  rookpm::ClaimReport rep = rookpm::run_claim_report(full);
  Output out(g.out);
  if (g.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
      ordered_json j;
      j["claim"] = row.claim;
      j["passed"] = row.passed;
      j["detail"] = row.detail;
      rows.push_back(j);
    }
    out.stream() << rows.dump(2) << "\n";
  } else {
    rookpm::print_claim_report(rep, out.stream());
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rook partition monoid toolkit"};
  app.require_subcommand(1);

  Options g;
  app.add_option("-n,--degree", g.n, "degree of the diagrams");
  app.add_option("--cap", g.cap, "class cap for congruence enumeration (0 = automatic)");
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--format", g.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write output to this file instead of stdout");

  std::string word_text, lit_a, lit_b, preset, monoid = "RPn", mode = "bgd";
  std::string strategy = "felsch", export_kind;
  int k = 0;
  std::uint64_t limit = 1000000, samples = 0;
  bool no_prune = false, check_iso = false, to_seqo = false, full = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a generator word to a diagram");
  eval->add_option("word", word_text, "word such as \"o1 e1 o1\" or \"t1,2 e1\"")->required();

  CLI::App* mult = app.add_subcommand("mult", "multiply two diagram literals");
  mult->add_option("a", lit_a, "left diagram literal")->required();
  mult->add_option("b", lit_b, "right diagram literal")->required();

  CLI::App* stats = app.add_subcommand("stats", "rank, domain, kernel data of a diagram");
  stats->add_option("diagram", lit_a, "diagram literal")->required();

  CLI::App* classify = app.add_subcommand("classify", "submonoid membership of a diagram");
  classify->add_option("diagram", lit_a, "diagram literal")->required();

  CLI::App* factor = app.add_subcommand("factor", "fold or rook factorization of a diagram");
  factor->add_option("diagram", lit_a, "diagram literal")->required();
  factor->add_option("--mode", mode, "bgd (fold*injection*fold) or rook");

  CLI::App* dec = app.add_subcommand("decompose", "constructive word for a diagram");
  dec->add_option("diagram", lit_a, "diagram literal")->required();
  dec->add_flag("--seqo", to_seqo, "rewrite the word over the s/e/q/o alphabet");

  CLI::App* enumerate = app.add_subcommand("enumerate", "count or export a named monoid");
  enumerate->add_option("--monoid", monoid,
                        "RPn, RPn-sing, Pn, Pn-sing, In, Jn, Sn or Rn (default RPn)");
  enumerate->add_option("--export", export_kind, "dump `table` or `cayley` instead of a count");

  CLI::App* verify = app.add_subcommand("verify", "soundness and completeness of a preset");
  verify->add_option("--preset", preset, "presentation preset id, e.g. R18-43")->required();
  verify->add_option("--strategy", strategy, "felsch (default) or hlt");
  verify->add_flag("--iso", check_iso, "also check the action tables are isomorphic");

  CLI::App* rank = app.add_subcommand("rank-search", "search for small generating sets");
  rank->add_option("-k", k, "generating set size to try")->required();
  rank->add_option("--monoid", monoid, "monoid to search (default RPn)");
  rank->add_option("--limit", limit, "candidate guard (default 1000000)");
  rank->add_flag("--no-prune", no_prune, "disable the unit-closure prune");

  CLI::App* cocycle = app.add_subcommand("cocycle", "check the twist cocycle identity");
  cocycle->add_option("--samples", samples, "sampled triples; 0 (default) = exhaustive");

  CLI::App* amult = app.add_subcommand("algebra-mult", "star-multiply two algebra literals");
  amult->add_option("a", lit_a, "left algebra literal")->required();
  amult->add_option("b", lit_b, "right algebra literal")->required();

  CLI::App* report = app.add_subcommand("report", "re-derive the headline claims");
  report->add_flag("--full", full, "include the degree-4 rows");

  // let the shared options (-n, --cap, ...) be given after the subcommand
  for (CLI::App* sub : {eval, mult, stats, classify, factor, dec, enumerate, verify, rank,
                        cocycle, amult, report})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(g, word_text);
    if (mult->parsed()) return cmd_mult(g, lit_a, lit_b);
    if (stats->parsed()) return cmd_stats(g, lit_a);
    if (classify->parsed()) return cmd_classify(g, lit_a);
    if (factor->parsed()) return cmd_factor(g, mode, lit_a);
    if (dec->parsed()) return cmd_decompose(g, lit_a, to_seqo);
    if (enumerate->parsed()) return cmd_enumerate(g, monoid, export_kind);
    if (verify->parsed()) return cmd_verify(g, preset, strategy, check_iso);
    if (rank->parsed()) return cmd_rank_search(g, monoid, k, limit, no_prune);
    if (cocycle->parsed()) return cmd_cocycle(g, samples);
    if (amult->parsed()) return cmd_algebra_mult(g, lit_a, lit_b);
    if (report->parsed()) return cmd_report(g, full);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const rookpm::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const rookpm::SearchTooLarge& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const rookpm::TooLarge& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const rookpm::UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::DegreeMismatch& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::VertexOutOfRange& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::IndexOutOfRange& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::UnsupportedDegree& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::OverlappingBlocks& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::EmptyBlock& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::NotInPn& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::NotSymmetricJn& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::NotSingularIn& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::IoError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rookpm::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
