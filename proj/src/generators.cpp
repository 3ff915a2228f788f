#include "arcunion/generators.hpp"

#include <cmath>
#include <random>

namespace arcunion::gen {

std::vector<Point> uniform_stream(int n, double box, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, box);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back({u(rng), u(rng)});
  return out;
}

std::vector<Point> figure_one_stream(int n) {
  std::vector<Point> out;
  if (n <= 0) return out;
  const int ring = n / 2;
  const double radius = 2.0 + 1e-7;
  for (int i = 0; i < ring; ++i) {
    const double a = kTwoPi * i / std::max(1, ring);
    out.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  if (static_cast<int>(out.size()) < n) out.push_back({0.0, 0.0});
  const int climbers = n - static_cast<int>(out.size());
  // Each climber must stay below the scallop bulges of the ring's inner
  // envelope (height ~ (2*pi/ring)^2 / 4 above the unit circle), so that
  // every insertion re-cuts a sliver in every upper scallop.
  const double beta = kTwoPi / std::max(1, ring);
  const double step =
      climbers > 0 ? 0.8 * (beta * beta / 4.0) / climbers : 0.0;
  for (int i = 1; i <= climbers; ++i) out.push_back({0.0, step * i});
  return out;
}

std::vector<std::vector<UnitArc>> quadrant_configs(const DiscUnion& u,
                                                   int min_arcs) {
  std::vector<std::vector<UnitArc>> out;
  for (CellKey key : u.active_cells()) {
    const CellBoundary* cb = u.cell(key);
    if (!cb || !cb->has_pieces()) continue;
    for (int q = 0; q < 4; ++q) {
      const QuadrantSet& set = cb->set(static_cast<Quadrant>(q));
      if (static_cast<int>(set.size()) < min_arcs) continue;
      std::vector<UnitArc> arcs;
      for (const UnitArc* a : set.arcs()) arcs.push_back(*a);
      std::sort(arcs.begin(), arcs.end(),
                [](const UnitArc& a, const UnitArc& b) {
                  return a.first_endpoint().x < b.first_endpoint().x;
                });
      out.push_back(std::move(arcs));
    }
  }
  return out;
}

}  // namespace arcunion::gen
