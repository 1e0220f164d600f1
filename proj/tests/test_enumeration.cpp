#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/enumeration.hpp"
#include "rookpm/words.hpp"

using namespace rookpm;

namespace {

std::vector<RookPartition> full_gens(int n) {
  std::vector<RookPartition> g;
  for (int i = 1; i < n; ++i) g.push_back(gen_s(n, i));
  for (int i = 1; i <= n; ++i) g.push_back(gen_e(n, i));
  for (int i = 1; i < n; ++i) g.push_back(gen_q(n, i));
  for (int i = 1; i <= n; ++i) g.push_back(gen_o(n, i));
  return g;
}

std::vector<RookPartition> singular_gens(int n) {
  std::vector<RookPartition> g;
  for (int i = 1; i <= n; ++i) g.push_back(gen_e(n, i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.push_back(gen_t(n, i, j));
  for (int i = 1; i <= n; ++i) g.push_back(gen_o(n, i));
  return g;
}

}  // namespace

TEST_CASE("bell oracle counts partial set partitions") {
  // Sum over subsets: oracle(m) = sum_k C(m,k) * Bell(k), which equals Bell(m+1).
  const std::uint64_t expect[] = {1,    2,    5,     15,     52,    203,
                                  877,  4140, 21147, 115975, 678570};
  for (int m = 0; m <= 10; ++m) {
    INFO("m=" << m);
    CHECK(bell_oracle(m) == expect[m]);
  }
  CHECK_THROWS_AS(bell_oracle(13), TooLarge);
  CHECK_THROWS_AS(bell_oracle(-1), UsageError);
}

TEST_CASE("direct enumeration has Bell(2n+1) elements, all distinct") {
  for (int n = 0; n <= 3; ++n) {
    auto all = all_rook_partitions(n);
    INFO("n=" << n);
    CHECK(all.size() == bell_oracle(2 * n));
    std::unordered_set<RookPartition, RookPartitionHash> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (const auto& d : all) CHECK(d.degree() == n);
  }
  CHECK_THROWS_AS(all_rook_partitions(9), TooLarge);
}

TEST_CASE("generator closure reproduces the direct enumeration") {
  for (int n = 1; n <= 3; ++n) {
    MonoidTable t = closure(n, full_gens(n), /*include_identity=*/true);
    INFO("n=" << n);
    CHECK(t.size() == bell_oracle(2 * n));
    auto all = all_rook_partitions(n);
    std::unordered_set<RookPartition, RookPartitionHash> seen(all.begin(), all.end());
    for (const auto& d : t.elements) CHECK(seen.count(d) == 1);
  }
}

TEST_CASE("singular closure misses exactly the units") {
  MonoidTable t2 = closure(2, singular_gens(2), /*include_identity=*/false);
  CHECK(t2.size() == 50);
  MonoidTable t3 = closure(3, singular_gens(3), /*include_identity=*/false);
  CHECK(t3.size() == 871);
  for (const auto& d : t3.elements) CHECK(classify(d).singular);
}

TEST_CASE("submonoid closures match membership filters") {
  auto all3 = all_rook_partitions(3);
  auto count_if3 = [&](auto pred) {
    std::size_t c = 0;
    for (const auto& d : all3)
      if (pred(classify(d))) ++c;
    return c;
  };

  std::vector<RookPartition> sgens = {gen_s(3, 1), gen_s(3, 2)};
  MonoidTable sn = closure(3, sgens, true);
  CHECK(sn.size() == 6);
  CHECK(sn.size() == count_if3([](const Membership& m) { return m.in_Sn; }));

  std::vector<RookPartition> igens = {gen_s(3, 1), gen_s(3, 2), gen_e(3, 1)};
  MonoidTable in = closure(3, igens, true);
  CHECK(in.size() == 34);
  CHECK(in.size() == count_if3([](const Membership& m) { return m.in_In; }));

  // s and q generators only reach the block bijections whose matched blocks
  // have equal sizes; one lopsided element is needed to fill out the rest.
  std::vector<RookPartition> fgens = {gen_s(3, 1), gen_s(3, 2), gen_q(3, 1)};
  MonoidTable fn = closure(3, fgens, true);
  CHECK(fn.size() == 16);
  std::vector<RookPartition> jgens = fgens;
  jgens.push_back(parse_literal("n=3; 1,2,1'; 3,2',3'"));
  MonoidTable jn = closure(3, jgens, true);
  CHECK(jn.size() == 25);
  CHECK(jn.size() == count_if3([](const Membership& m) { return m.in_Jn; }));

  std::vector<RookPartition> rgens = {gen_s(3, 1), gen_s(3, 2), gen_o(3, 1)};
  MonoidTable rn = closure(3, rgens, true);
  CHECK(rn.size() == 34);
  CHECK(rn.size() == count_if3([](const Membership& m) { return m.in_Rn; }));

  std::vector<RookPartition> pgens = {gen_s(3, 1), gen_s(3, 2), gen_e(3, 1), gen_q(3, 1)};
  MonoidTable pn = closure(3, pgens, true);
  CHECK(pn.size() == 203);
  CHECK(pn.size() == count_if3([](const Membership& m) { return m.in_Pn; }));
}

TEST_CASE("planar-free singular closure sizes") {
  std::vector<RookPartition> g2 = {gen_e(2, 1), gen_e(2, 2), gen_t(2, 1, 2)};
  CHECK(closure(2, g2, false).size() == 13);
  std::vector<RookPartition> g3;
  for (int i = 1; i <= 3; ++i) g3.push_back(gen_e(3, i));
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) g3.push_back(gen_t(3, i, j));
  CHECK(closure(3, g3, false).size() == 197);
}

TEST_CASE("witnesses evaluate back to their element") {
  MonoidTable t = closure(2, full_gens(2), true, UINT64_MAX,
                          {"s1", "e1", "e2", "q1", "o1", "o2"});
  REQUIRE(t.size() == 52);
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    RookPartition d = RookPartition::identity(2);
    for (int g : t.witness(i)) d = d * t.generators[static_cast<std::size_t>(g)];
    INFO("idx=" << i << " witness=" << t.witness_text(i));
    CHECK(d == t.elements[i]);
  }
  CHECK(t.witness_text(0).empty());
}

TEST_CASE("closure respects its element cap") {
  CHECK_THROWS_AS(closure(2, full_gens(2), true, 10), CapExceeded);
  try {
    closure(2, full_gens(2), true, 10);
  } catch (const CapExceeded& e) {
    CHECK(e.live == 10);
  }
}

TEST_CASE("closure rejects mismatched generator degrees and name lists") {
  std::vector<RookPartition> bad = {gen_e(3, 1)};
  CHECK_THROWS_AS(closure(2, bad, true), DegreeMismatch);
  CHECK_THROWS_AS(closure(2, full_gens(2), true, UINT64_MAX, {"just-one"}), UsageError);
}

TEST_CASE("generating-set search on the symmetric group of degree 3") {
  std::vector<RookPartition> gens = {gen_s(3, 1), gen_s(3, 2)};
  MonoidTable t = closure(3, gens, true);
  REQUIRE(t.size() == 6);

  GenSetSearchResult one = search_generating_sets(t, 1);
  CHECK_FALSE(one.found);
  CHECK(one.candidates_tested == 6);

  GenSetSearchResult two = search_generating_sets(t, 2);
  CHECK(two.found);
  REQUIRE(two.witness.size() == 2);
  std::vector<const RookPartition*> seed = {&t.elements[two.witness[0]],
                                            &t.elements[two.witness[1]]};
  auto sz = detail::closure_size_within(t, seed);
  REQUIRE(sz.has_value());
  CHECK(*sz == 6);
}

TEST_CASE("search with and without the unit prune agree") {
  std::vector<RookPartition> igens = {gen_s(2, 1), gen_e(2, 1)};
  MonoidTable in = closure(2, igens, true);
  REQUIRE(in.size() == 7);
  GenSetSearchResult pruned = search_generating_sets(in, 2, 1000000, true);
  GenSetSearchResult plain = search_generating_sets(in, 2, 1000000, false);
  CHECK(pruned.found);
  CHECK(plain.found);
  CHECK(pruned.witness == plain.witness);
  CHECK(pruned.candidates_tested == plain.candidates_tested);

  MonoidTable rp2 = closure(2, full_gens(2), true);
  REQUIRE(rp2.size() == 52);
  GenSetSearchResult p3 = search_generating_sets(rp2, 3, 1000000, true);
  GenSetSearchResult n3 = search_generating_sets(rp2, 3, 1000000, false);
  CHECK_FALSE(p3.found);
  CHECK_FALSE(n3.found);
  CHECK(p3.candidates_tested == n3.candidates_tested);
}

TEST_CASE("search guards oversized candidate spaces") {
  MonoidTable rp2 = closure(2, full_gens(2), true);
  CHECK_THROWS_AS(search_generating_sets(rp2, 3, 100), SearchTooLarge);
  CHECK_THROWS_AS(search_generating_sets(rp2, -1), UsageError);
}

TEST_CASE("necessity check sees through products of other elements") {
  MonoidTable t = closure(2, singular_gens(2), false);
  REQUIRE(t.size() == 50);
  const RookPartition e1 = gen_e(2, 1);

  // e1 factors as e(1,2) e(2,1), so "being e1" is not needed to reach it.
  auto is_e1 = [&](const RookPartition& d) { return d == e1; };
  CHECK(compose(gen_eij(2, 1, 2), gen_eij(2, 2, 1)).first == e1);
  CHECK_FALSE(necessity_check(t, is_e1, e1));

  auto never = [](const RookPartition&) { return false; };
  CHECK_THROWS_AS(necessity_check(t, never, RookPartition::identity(2)), UsageError);
}

TEST_CASE("table and Cayley exports have a stable layout") {
  std::vector<RookPartition> gens = {gen_e(1, 1), gen_o(1, 1)};
  MonoidTable t = closure(1, gens, true, UINT64_MAX, {"e1", "o1"});
  REQUIRE(t.size() == 5);

  std::ostringstream table_os;
  export_table(t, table_os);
  CHECK(table_os.str() ==
        "0\tn=1; 1,1'\t\n"
        "1\tn=1; 1; 1'\te1\n"
        "2\tn=1;\to1\n"
        "3\tn=1; 1\te1 o1\n"
        "4\tn=1; 1'\to1 e1\n");

  std::ostringstream cayley_os;
  export_cayley(t, cayley_os);
  CHECK(cayley_os.str() ==
        "0\te1\t1\n"
        "0\to1\t2\n"
        "1\te1\t1\n"
        "1\to1\t3\n"
        "2\te1\t4\n"
        "2\to1\t2\n"
        "3\te1\t1\n"
        "3\to1\t3\n"
        "4\te1\t4\n"
        "4\to1\t2\n");
}
