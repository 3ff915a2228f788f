#pragma once

// Shared helpers for the chain-merge tests and the acceptance suite:
// direct envelope construction for line bundles and the instrumented
// invariant checker for the tentative search.

#include <algorithm>
#include <deque>
#include <random>
#include <vector>

#include "arcunion/chain.hpp"

namespace arcunion::testsupport {

using envelope::ChainNode;
using envelope::ChainSegment;
using envelope::Curve;
using envelope::curve_less;
using envelope::kInfX;
using envelope::MergeStep;

// Stack construction of the lower envelope of lines, independent of the
// tree machinery.
inline std::vector<ChainSegment> envelope_of_lines(
    std::vector<const Curve*> lines) {
  std::sort(lines.begin(), lines.end(),
            [](const Curve* a, const Curve* b) { return curve_less(*a, *b); });
  struct Entry {
    const Curve* c;
    double start;
  };
  std::vector<Entry> stack;
  for (const Curve* c : lines) {
    double start = -kInfX;
    while (!stack.empty()) {
      const Entry& top = stack.back();
      const double x = envelope::curve_crossing(*top.c, *c, -kInfX, kInfX).x;
      if (x <= top.start) {
        stack.pop_back();
      } else {
        start = x;
        break;
      }
    }
    stack.push_back({c, start});
  }
  std::vector<ChainSegment> segs;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    const double hi = (i + 1 < stack.size()) ? stack[i + 1].start : kInfX;
    segs.push_back({stack[i].c, stack[i].start, hi});
  }
  return segs;
}

struct Bundle {
  std::deque<Curve> store;
  std::vector<const Curve*> curves;
  ChainNode* chain = nullptr;
  std::vector<ChainSegment> segs;
};

inline Bundle make_line_bundle(std::mt19937_64& rng, int n, double slope_lo,
                               double slope_hi, std::int64_t id_base) {
  Bundle b;
  std::uniform_real_distribution<double> us(slope_lo, slope_hi);
  std::uniform_real_distribution<double> ui(-10.0, 10.0);
  for (int i = 0; i < n; ++i) {
    b.store.push_back(Curve::line(us(rng), ui(rng), id_base + i));
    b.curves.push_back(&b.store.back());
  }
  b.segs = envelope_of_lines(b.curves);
  b.chain = envelope::chain_build(b.segs);
  return b;
}

// Validates the search invariant at every observed step against the known
// answer: the stack left subtrees plus u's subtree form a leaf prefix of
// the left chain containing u*, symmetrically for v, and u or v is on the
// root path of its answer leaf.
struct InvariantChecker {
  int a_leaves, b_leaves;
  int u_star, v_star;
  int violations = 0;

  void operator()(const MergeStep& s) {
    std::vector<std::pair<int, int>> pref = s.ustack_left_ranges;
    pref.emplace_back(s.u_begin, s.u_end);
    std::sort(pref.begin(), pref.end());
    int reach = 0;
    bool contiguous = true;
    for (auto [b2, e2] : pref) {
      if (b2 != reach) contiguous = false;
      reach = e2;
    }
    const bool pref_ok = contiguous && pref.front().first == 0 && u_star < reach;

    std::vector<std::pair<int, int>> suf = s.vstack_right_ranges;
    suf.emplace_back(s.v_begin, s.v_end);
    std::sort(suf.begin(), suf.end());
    bool scont = true;
    const int sbegin = suf.front().first;
    int at = sbegin;
    for (auto [b2, e2] : suf) {
      if (b2 != at) scont = false;
      at = e2;
    }
    const bool suf_ok = scont && at == b_leaves && v_star >= sbegin;
    const bool on_path = (u_star >= s.u_begin && u_star < s.u_end) ||
                         (v_star >= s.v_begin && v_star < s.v_end);
    if (!(pref_ok && suf_ok && on_path)) ++violations;
  }
};

}  // namespace arcunion::testsupport
