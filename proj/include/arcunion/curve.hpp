#pragma once

#include <cstdint>

#include "arcunion/geom.hpp"

// Envelope member curves. The dynamic envelope structure works for any
// family with properties A and B: every member contributes at most one
// envelope segment and the segment order equals a fixed total order,
// realized here by an explicit order_key (for lines this is the order at
// x = -infinity; bounded curves supply it externally).

namespace arcunion::envelope {

inline constexpr double kInfX = 1e18;
// Bounded curves are extended past their domain by steep rays so y_at is
// total; the rays are parallel, so extensions never add crossings and the
// far-left order follows the domain order.
inline constexpr double kSteepSlope = 1e9;

class Curve {
 public:
  enum class Kind : std::uint8_t { Line, Chain };

  static Curve line(double slope, double intercept, std::int64_t id) {
    Curve c;
    c.kind_ = Kind::Line;
    c.slope_ = slope;
    c.intercept_ = intercept;
    c.order_key_ = -slope;  // lower at -infinity means larger slope
    c.id_ = id;
    return c;
  }

  static Curve lower_semicircle(Point center, double radius, std::int64_t id) {
    Curve c;
    c.kind_ = Kind::Chain;
    c.n_pieces_ = 1;
    c.pieces_[0] = CurvePiece{center, radius, -1, center.x - radius,
                              center.x + radius, id};
    c.order_key_ = center.x;
    c.id_ = id;
    return c;
  }

  // Chain of up to 3 x-monotone pieces with contiguous domains
  // (a Minkowski lower curve). order_key must realize the family order.
  static Curve from_chain(const CurveChain& chain, double order_key,
                          std::int64_t id) {
    if (chain.pieces.empty() || chain.pieces.size() > 3)
      throw std::invalid_argument("curve: chain must have 1..3 pieces");
    Curve c;
    c.kind_ = Kind::Chain;
    c.n_pieces_ = static_cast<int>(chain.pieces.size());
    for (int i = 0; i < c.n_pieces_; ++i) c.pieces_[i] = chain.pieces[i];
    c.order_key_ = order_key;
    c.id_ = id;
    return c;
  }

  double y_at(double x) const {
    if (kind_ == Kind::Line) return slope_ * x + intercept_;
    const double lo = pieces_[0].x_lo;
    const double hi = pieces_[n_pieces_ - 1].x_hi;
    if (x < lo) return pieces_[0].y_at(lo) + (lo - x) * kSteepSlope;
    if (x > hi)
      return pieces_[n_pieces_ - 1].y_at(hi) + (x - hi) * kSteepSlope;
    for (int i = 0; i < n_pieces_ - 1; ++i)
      if (x <= pieces_[i].x_hi) return pieces_[i].y_at(x);
    return pieces_[n_pieces_ - 1].y_at(x);
  }

  double domain_lo() const {
    return kind_ == Kind::Line ? -kInfX : pieces_[0].x_lo;
  }
  double domain_hi() const {
    return kind_ == Kind::Line ? kInfX : pieces_[n_pieces_ - 1].x_hi;
  }

  Kind kind() const { return kind_; }
  double slope() const { return slope_; }
  double intercept() const { return intercept_; }
  double order_key() const { return order_key_; }
  std::int64_t id() const { return id_; }

  // Piece range for chain curves; false for lines.
  bool pieces(const CurvePiece** begin, const CurvePiece** end) const {
    if (kind_ != Kind::Chain) return false;
    *begin = pieces_.data();
    *end = pieces_.data() + n_pieces_;
    return true;
  }

 private:
  Kind kind_ = Kind::Line;
  int n_pieces_ = 0;
  double slope_ = 0.0, intercept_ = 0.0;
  std::array<CurvePiece, 3> pieces_{};
  double order_key_ = 0.0;
  std::int64_t id_ = -1;
};

inline bool curve_less(const Curve& a, const Curve& b) {
  if (a.order_key() != b.order_key()) return a.order_key() < b.order_key();
  return a.id() < b.id();
}

// Crossing of two curves where a precedes b in the family order: a is below
// b left of the crossing. lo/hi bracket the crossing when finite.
Point curve_crossing(const Curve& a, const Curve& b, double lo, double hi);

}  // namespace arcunion::envelope
