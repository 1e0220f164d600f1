#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/enumeration.hpp"
#include "rookpm/errors.hpp"

using namespace rookpm;

namespace {

RookPartition lit(const std::string& s) { return parse_literal(s); }

const char* kAlpha10 = "n=10; 1,2,4,3'; 5,6,4',5'; 7,8,8'; 2',6',7'; 9',10'";
const char* kBeta10 = "n=10; 2,3; 4,4',5'; 5,6; 7,6',7',10'; 9,8',9'; 1',2'";
const char* kProd10 = "n=10; 1,2,4,5,6,4',5',6',7',10'; 1',2'";

}  // namespace

TEST_CASE("literal round trips") {
  for (const char* s :
       {"n=2; 1,1'; 2,2'", "n=2;", "n=1; 1; 1'", "n=3; 1,2'; 2; 3,3'; 1'", kAlpha10, kBeta10}) {
    RookPartition d = lit(s);
    CHECK(to_literal(d) == s);
    CHECK(parse_literal(to_literal(d)) == d);
  }
  CHECK(lit("n=0;") == RookPartition::identity(0));
  CHECK(to_literal(RookPartition::identity(2)) == "n=2; 1,1'; 2,2'");
}

TEST_CASE("literal and block validation") {
  CHECK_THROWS_AS(lit("n=2; 1,1; 2,2'"), OverlappingBlocks);
  CHECK_THROWS_AS(lit("n=2; 3,1'"), VertexOutOfRange);
  CHECK_THROWS_AS(lit("n=2; 1,x'"), ParseError);
  CHECK_THROWS_AS(lit("m=2; 1,1'"), ParseError);
  CHECK_THROWS_AS(lit(""), ParseError);
  CHECK_THROWS_AS(RookPartition::from_blocks(2, {{0, 1}, {}}), EmptyBlock);
  CHECK_THROWS_AS(RookPartition::from_blocks(2, {{0, 4}}), VertexOutOfRange);
  CHECK_THROWS_AS(RookPartition::from_blocks(2, {{0}, {0}}), OverlappingBlocks);
}

TEST_CASE("block ids are canonical by least vertex") {
  RookPartition a = RookPartition::from_blocks(2, {{3, 1}, {0, 2}});
  RookPartition b = RookPartition::from_blocks(2, {{0, 2}, {1, 3}});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.block_of(0) == 0);
}

TEST_CASE("worked degree-10 product with its twist") {
  RookPartition a = lit(kAlpha10);
  RookPartition b = lit(kBeta10);
  auto [p, m] = compose(a, b);
  CHECK(to_literal(p) == kProd10);
  CHECK(m == 0);
}

TEST_CASE("worked degree-10 statistics") {
  DiagramStats s = stats(lit(kAlpha10));
  CHECK(s.rank == 3);
  CHECK(s.dom == std::vector<int>{1, 2, 4, 5, 6, 7, 8});
  CHECK(s.codom == std::vector<int>{3, 4, 5, 8});
  CHECK(s.ker == std::vector<int>{0, 0, 1, 0, 2, 2, 3, 3, 4, 5});
  CHECK(s.coker == std::vector<int>{0, 1, 2, 3, 3, 1, 1, 4, 5, 5});
}

TEST_CASE("worked degree-10 involution") {
  RookPartition a = lit(kAlpha10);
  CHECK(to_literal(involute(a)) == "n=10; 2,6,7; 3,1',2',4'; 4,5,5',6'; 8,7',8'; 9,10");
  CHECK(involute(involute(a)) == a);
}

TEST_CASE("involution reverses products") {
  std::mt19937_64 rng(7);
  std::vector<RookPartition> all = all_rook_partitions(3);
  for (int t = 0; t < 200; ++t) {
    const RookPartition& a = all[rng() % all.size()];
    const RookPartition& b = all[rng() % all.size()];
    CHECK(involute(a * b) == involute(b) * involute(a));
  }
}

TEST_CASE("identity is neutral and twist-free") {
  const RookPartition id = RookPartition::identity(3);
  for (const RookPartition& d : all_rook_partitions(3)) {
    auto [l, ml] = compose(id, d);
    auto [r, mr] = compose(d, id);
    CHECK(l == d);
    CHECK(r == d);
    CHECK(ml == 0);
    CHECK(mr == 0);
  }
}

TEST_CASE("twist values of the basic squares") {
  RookPartition e1 = lit("n=3; 1; 2,2'; 3,3'; 1'");
  RookPartition o1 = lit("n=3; 2,2'; 3,3'");
  RookPartition t12 = lit("n=3; 1,2,1',2'; 3,3'");
  RookPartition s1 = lit("n=3; 1,2'; 2,1'; 3,3'");
  CHECK(compose(e1, e1) == std::pair{e1, 1});
  CHECK(compose(o1, o1) == std::pair{o1, 0});
  CHECK(compose(t12, t12) == std::pair{t12, 0});
  CHECK(compose(s1, e1).second == 0);
  CHECK(compose(e1, s1).second == 0);
  auto [ss, ms] = compose(s1, s1);
  CHECK(ss == RookPartition::identity(3));
  CHECK(ms == 0);
}

TEST_CASE("multiplication is associative at degree 2") {
  std::vector<RookPartition> all = all_rook_partitions(2);
  REQUIRE(all.size() == 52);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20000; ++t) {
    const RookPartition& a = all[rng() % all.size()];
    const RookPartition& b = all[rng() % all.size()];
    const RookPartition& c = all[rng() % all.size()];
    CHECK((a * b) * c == a * (b * c));
  }
}

// Kernel classes of a either land inside a single kernel class of a*b or are
// absorbed wholesale into rook dots of a*b (an entire class shares one
// product-graph component, so absorption is all-or-nothing per class).
namespace {
bool coarsens_outside_rooks(const std::vector<int>& fine, const std::vector<int>& coarse,
                            const std::function<bool(int)>& rook_in_product) {
  const int n = static_cast<int>(fine.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (fine[x] != fine[y] || coarse[x] == coarse[y]) continue;
      if (!rook_in_product(x) || !rook_in_product(y)) return false;
    }
  return true;
}
}  // namespace

TEST_CASE("rank and kernel behave monotonically under products") {
  const int n = 2;
  std::vector<RookPartition> all = all_rook_partitions(n);
  for (const RookPartition& a : all)
    for (const RookPartition& b : all) {
      RookPartition p = a * b;
      DiagramStats sa = stats(a), sb = stats(b), sp = stats(p);
      CHECK(sp.rank <= std::min(sa.rank, sb.rank));
      CHECK(std::includes(sa.dom.begin(), sa.dom.end(), sp.dom.begin(), sp.dom.end()));
      CHECK(std::includes(sb.codom.begin(), sb.codom.end(), sp.codom.begin(), sp.codom.end()));
      CHECK(coarsens_outside_rooks(sa.ker, sp.ker, [&](int i) { return p.is_rook(i); }));
      CHECK(coarsens_outside_rooks(sb.coker, sp.coker,
                                   [&](int i) { return p.is_rook(n + i); }));
      for (int v = 0; v < n; ++v) {
        if (a.is_rook(v)) CHECK(p.is_rook(v));
        if (b.is_rook(n + v)) CHECK(p.is_rook(n + v));
      }
    }
}

TEST_CASE("membership of the six representative diagrams") {
  struct Row {
    const char* literal;
    bool pn, in, jn, sn, rn;
  };
  const Row rows[] = {
      {"n=7; 1,2,3,3',4',5'; 4,5; 1',7'; 6'", false, false, false, false, false},
      {"n=7; 1,2,3,3',4',5'; 4,5; 6; 7; 1',7'; 2'; 6'", true, false, false, false, false},
      {"n=7; 1,2,3,3',4',5'; 4,5,6,6'; 7,1',2',7'", true, false, true, false, false},
      {"n=7; 1,2'; 2; 3,3'; 4,7'; 5; 6,5'; 7; 1'; 4'; 6'", true, true, false, false, false},
      {"n=7; 1,2'; 3,3'; 4,7'; 6,5'", false, false, false, false, true},
      {"n=7; 1,2'; 2,1'; 3,3'; 4,7'; 5,4'; 6,5'; 7,6'", true, true, true, true, true},
  };
  for (const Row& r : rows) {
    Membership m = classify(lit(r.literal));
    INFO(r.literal);
    CHECK(m.in_Pn == r.pn);
    CHECK(m.in_In == r.in);
    CHECK(m.in_Jn == r.jn);
    CHECK(m.in_Sn == r.sn);
    CHECK(m.in_Rn == r.rn);
    CHECK(m.singular == !r.sn);
  }
}

TEST_CASE("membership counts at degree 3") {
  int pn = 0, in = 0, jn = 0, sn = 0, rn = 0;
  for (const RookPartition& d : all_rook_partitions(3)) {
    Membership m = classify(d);
    pn += m.in_Pn;
    in += m.in_In;
    jn += m.in_Jn;
    sn += m.in_Sn;
    rn += m.in_Rn;
  }
  CHECK(pn == 203);
  CHECK(in == 34);
  CHECK(jn == 25);
  CHECK(sn == 6);
  CHECK(rn == 34);
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS(RookPartition::identity(2) * RookPartition::identity(3), DegreeMismatch);
}
