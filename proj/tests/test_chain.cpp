#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "arcunion/chain.hpp"
#include "arcunion/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace arcunion;
using namespace arcunion::envelope;

using namespace arcunion::testsupport;

TEST_CASE("chain build, search and split/concat") {
  std::mt19937_64 rng(1);
  Bundle b = make_line_bundle(rng, 64, 1.0, 2.0, 0);
  chain_validate(b.chain);
  CHECK(chain_leaves(b.chain) == static_cast<int>(b.segs.size()));

  // ray search agrees with the segment list
  for (int i = 0; i < 100; ++i) {
    std::uniform_real_distribution<double> ux(-40.0, 40.0);
    const double x = ux(rng);
    const ChainNode* leaf = chain_find_by_x(b.chain, x);
    const Curve* expect = nullptr;
    for (const auto& s : b.segs)
      if (s.x_lo < x && x <= s.x_hi) expect = s.curve;
    CHECK(leaf->curve == expect);
  }

  // split and reconcatenate is the identity
  auto [l, r] = chain_split_leaves(b.chain, chain_leaves(b.chain) / 2);
  ChainNode* back = chain_concat(l, r);
  chain_validate(back);
  std::vector<ChainSegment> segs2;
  chain_collect(back, segs2);
  REQUIRE(segs2.size() == b.segs.size());
  for (std::size_t i = 0; i < segs2.size(); ++i) {
    CHECK(segs2[i].curve == b.segs[i].curve);
    CHECK(segs2[i].x_lo == doctest::Approx(b.segs[i].x_lo));
  }
  chain_free(back);
}

TEST_CASE("two single-segment chains cross immediately") {
  Curve a = Curve::line(1.0, 0.0, 0);
  Curve b = Curve::line(-1.0, 4.0, 1);
  ChainNode* ca = chain_build({{&a, -kInfX, kInfX}});
  ChainNode* cb = chain_build({{&b, -kInfX, kInfX}});
  int steps_seen = 0;
  MergeObserver obs = [&](const MergeStep& s) {
    ++steps_seen;
    CHECK(s.case_main == 3);
  };
  CrossResult r = find_envelope_crossing(ca, cb, &obs);
  CHECK(steps_seen == 1);
  CHECK(r.stats.steps == 1);
  CHECK(r.u_leaf == 0);
  CHECK(r.v_leaf == 0);
  CHECK(r.q.x == doctest::Approx(2.0));
  CHECK(r.q.y == doctest::Approx(2.0));
  chain_free(ca);
  chain_free(cb);
}

TEST_CASE("figure-five style instance: trace ends at leaves 7 and 5") {
  // Left envelope: slopes 4,3,2,1 with breakpoints -3,-1,1.
  // Right envelope: slopes .5,.25,0,-.5 with breakpoints 3,5,7.
  // The crossing (6,3) lies on the 4th left segment and 3rd right segment.
  std::deque<Curve> store;
  auto line = [&](double s, double b, std::int64_t id) {
    store.push_back(Curve::line(s, b, id));
    return &store.back();
  };
  std::vector<ChainSegment> ls = {{line(4, 0, 0), -kInfX, -3},
                                  {line(3, -3, 1), -3, -1},
                                  {line(2, -4, 2), -1, 1},
                                  {line(1, -3, 3), 1, kInfX}};
  std::vector<ChainSegment> rs = {{line(0.5, 1, 10), -kInfX, 3},
                                  {line(0.25, 1.75, 11), 3, 5},
                                  {line(0.0, 3, 12), 5, 7},
                                  {line(-0.5, 6.5, 13), 7, kInfX}};
  ChainNode* ca = chain_build(ls);
  ChainNode* cb = chain_build(rs);
  REQUIRE(ca->height == 3);  // complete 4-leaf trees, inorder labels 1..7
  REQUIRE(cb->height == 3);

  auto wc = oracle::walk_envelope_crossing(ls, rs);
  REQUIRE(wc.u_index == 3);
  REQUIRE(wc.v_index == 2);

  InvariantChecker inv{4, 4, wc.u_index, wc.v_index};
  std::vector<std::array<int, 4>> trace;  // u range begin/end, v range
  MergeObserver obs = [&](const MergeStep& s) {
    inv(s);
    trace.push_back({s.u_begin, s.u_end, s.v_begin, s.v_end});
  };
  CrossResult r = find_envelope_crossing(ca, cb, &obs);
  CHECK(inv.violations == 0);
  CHECK(r.u_leaf == 3);  // inorder node 7 = leaf index 3
  CHECK(r.v_leaf == 2);  // inorder node 5 = leaf index 2
  CHECK(r.q.x == doctest::Approx(6.0));
  CHECK(r.q.y == doctest::Approx(3.0));
  CHECK(r.stats.steps <= 8 * 3 + 8);
  chain_free(ca);
  chain_free(cb);
}

TEST_CASE("random ordered bundles: crossing equals the two-finger walk") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> size_dist(1, 256);
  for (int inst = 0; inst < 1500; ++inst) {
    const int na = size_dist(rng), nb = size_dist(rng);
    Bundle a = make_line_bundle(rng, na, 1.0, 2.0, 0);
    Bundle b = make_line_bundle(rng, nb, 0.0, 0.999, 1000000);
    auto wc = oracle::walk_envelope_crossing(a.segs, b.segs);

    InvariantChecker inv{static_cast<int>(a.segs.size()),
                         static_cast<int>(b.segs.size()), wc.u_index,
                         wc.v_index};
    MergeObserver obs = [&](const MergeStep& s) { inv(s); };
    CrossResult r = find_envelope_crossing(a.chain, b.chain, &obs);

    CHECK(inv.violations == 0);
    CHECK(r.u_leaf == wc.u_index);
    CHECK(r.v_leaf == wc.v_index);
    CHECK(std::fabs(r.q.x - wc.q.x) < 1e-9 * (1 + std::fabs(wc.q.x)));
    const int n = na + nb;
    const int bound =
        8 * static_cast<int>(std::ceil(std::log2(std::max(2, n)))) + 8;
    CHECK(r.stats.steps <= bound);
    chain_free(a.chain);
    chain_free(b.chain);
  }
}

TEST_CASE("merge_chains produces the joint envelope and hidden parts") {
  std::mt19937_64 rng(9);
  for (int inst = 0; inst < 200; ++inst) {
    std::uniform_int_distribution<int> size_dist(1, 64);
    Bundle a = make_line_bundle(rng, size_dist(rng), 1.0, 2.0, 0);
    Bundle b = make_line_bundle(rng, size_dist(rng), 0.0, 0.999, 1000000);
    std::vector<const Curve*> all = a.curves;
    all.insert(all.end(), b.curves.begin(), b.curves.end());
    auto joint = envelope_of_lines(all);

    ChainMerge m = merge_chains(a.chain, b.chain);
    chain_validate(m.merged);
    std::vector<ChainSegment> got;
    chain_collect(m.merged, got);
    REQUIRE(got.size() == joint.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].curve == joint[i].curve);
      CHECK(std::fabs(got[i].x_lo - joint[i].x_lo) <
            1e-7 * (1 + std::fabs(joint[i].x_lo)));
    }
    // reassembling the hidden parts restores both inputs
    auto [vis_l, vis_r] = chain_split_leaves(m.merged, m.left_leaf_count);
    ChainNode* ra = chain_concat(vis_l, m.left_hidden);
    ChainNode* rb = chain_concat(m.right_hidden, vis_r);
    std::vector<ChainSegment> sa, sb;
    chain_collect(ra, sa);
    chain_collect(rb, sb);
    REQUIRE(sa.size() == a.segs.size());
    REQUIRE(sb.size() == b.segs.size());
    for (std::size_t i = 0; i < sa.size(); ++i)
      CHECK(sa[i].curve == a.segs[i].curve);
    for (std::size_t i = 0; i < sb.size(); ++i)
      CHECK(sb[i].curve == b.segs[i].curve);
    chain_free(ra);
    chain_free(rb);
  }
}

TEST_CASE("step bound holds on a large merge") {
  std::mt19937_64 rng(65536);
  Bundle a = make_line_bundle(rng, 32768, 1.0, 2.0, 0);
  Bundle b = make_line_bundle(rng, 32768, 0.0, 0.999, 1 << 20);
  CrossResult r = find_envelope_crossing(a.chain, b.chain);
  auto wc = oracle::walk_envelope_crossing(a.segs, b.segs);
  CHECK(r.u_leaf == wc.u_index);
  CHECK(r.v_leaf == wc.v_index);
  CHECK(r.stats.steps <= 8 * 16 + 8);
  chain_free(a.chain);
  chain_free(b.chain);
}

TEST_CASE("case dispatch at the comparison boundary") {
  // u.p exactly on L(v) is case 1 ("on or above"); swapping the roles of a
  // case-1 pair yields case 2; two points strictly below give case 3.
  Curve a = Curve::line(2.0, 0.0, 0);   // left chain curve
  Curve b = Curve::line(-1.0, 3.0, 1);  // right chain curve
  // leaf of the left chain with left endpoint exactly on b: b(1) = 2 = a(1)
  ChainNode* u_on = chain_build({{&a, 1.0, kInfX}});
  ChainNode* v = chain_build({{&b, -kInfX, 5.0}});
  CHECK(compare_nodes(u_on, v) == 1);
  // symmetric instance: v's right endpoint on L(u)
  ChainNode* u2 = chain_build({{&a, -kInfX, kInfX}});
  ChainNode* v_on = chain_build({{&b, -kInfX, 1.0}});
  CHECK(compare_nodes(u2, v_on) == 2);
  // both endpoints strictly below the other envelope
  ChainNode* u3 = chain_build({{&a, 0.5, kInfX}});   // a(0.5)=1 < b(0.5)=2.5
  ChainNode* v3 = chain_build({{&b, -kInfX, 1.5}});  // b(1.5)=1.5 < a(1.5)=3
  CHECK(compare_nodes(u3, v3) == 3);
  chain_free(u_on);
  chain_free(v);
  chain_free(u2);
  chain_free(v_on);
  chain_free(u3);
  chain_free(v3);
}
