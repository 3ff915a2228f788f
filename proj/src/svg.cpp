#include "arcunion/svg.hpp"

#include <cmath>
#include <sstream>

namespace arcunion::svg {

namespace {

struct Mapper {
  double scale, x0, y1;
  double x(double wx) const { return (wx - x0) * scale; }
  double y(double wy) const { return (y1 - wy) * scale; }  // y grows upward
};

void arc_path(std::ostringstream& os, const Mapper& m, Point c, double r,
              double a0, double a1) {
  // split spans above pi so every piece fits one elliptical-arc command
  const int parts = a1 - a0 > kPi ? 2 : 1;
  const Point start{c.x + r * std::cos(a0), c.y + r * std::sin(a0)};
  os << "M " << m.x(start.x) << " " << m.y(start.y);
  for (int t = 1; t <= parts; ++t) {
    const double a = a0 + (a1 - a0) * t / parts;
    const Point p{c.x + r * std::cos(a), c.y + r * std::sin(a)};
    // counter-clockwise in world space is sweep=0 after the y flip
    os << " A " << r * m.scale << " " << r * m.scale << " 0 0 0 "
       << m.x(p.x) << " " << m.y(p.y);
  }
}

}  // namespace

std::string render_union(const DiscUnion& u, const RenderOptions& opt) {
  const auto arcs = u.boundary();
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const Point& c : u.centers()) {
    if (!any) {
      xmin = xmax = c.x;
      ymin = ymax = c.y;
      any = true;
    }
    xmin = std::min(xmin, c.x - 1);
    xmax = std::max(xmax, c.x + 1);
    ymin = std::min(ymin, c.y - 1);
    ymax = std::max(ymax, c.y + 1);
  }
  if (!any) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"64\" "
           "height=\"64\"/>\n";
  }
  xmin -= opt.margin;
  xmax += opt.margin;
  ymin -= opt.margin;
  ymax += opt.margin;
  const Mapper m{opt.scale, xmin, ymax};
  const int w = static_cast<int>(std::ceil((xmax - xmin) * opt.scale));
  const int h = static_cast<int>(std::ceil((ymax - ymin) * opt.scale));

  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
     << "\">\n";
  if (opt.cells) {
    os << "<g fill=\"#fbb\" fill-opacity=\"0.35\" stroke=\"#d88\" "
          "stroke-width=\"0.5\">\n";
    for (CellKey k : u.active_cells()) {
      const double cx = static_cast<double>(k.i) * kCellSide;
      const double cy = static_cast<double>(k.j) * kCellSide;
      os << "<rect x=\"" << m.x(cx) << "\" y=\"" << m.y(cy + kCellSide)
         << "\" width=\"" << kCellSide * opt.scale << "\" height=\""
         << kCellSide * opt.scale << "\"/>\n";
    }
    os << "</g>\n";
  }
  if (opt.curves) {
    // offset-curve overlay, drawn in each piece's canonical frame and
    // rotated back
    os << "<g fill=\"none\" stroke-width=\"0.8\">\n";
    auto polyline = [&](const CurveChain& chain, CellKey key, Quadrant q,
                        const char* color) {
      os << "<path stroke=\"" << color << "\" d=\"";
      bool first = true;
      for (const CurvePiece& p : chain.pieces)
        for (int t = 0; t <= 12; ++t) {
          const double x = p.x_lo + (p.x_hi - p.x_lo) * t / 12;
          const Point w = from_canonical(key, q, {x, p.y_at(x)});
          os << (first ? "M " : " L ") << m.x(w.x) << " " << m.y(w.y);
          first = false;
        }
      os << "\"/>\n";
    };
    for (const UnitArc& piece : u.boundary_pieces()) {
      const Point mid =
          piece.point_at(0.5 * (piece.theta_start + piece.theta_end));
      const CellKey key = cell_key_for(mid);
      const Quadrant q = quadrant_of(key, piece.center);
      const MinkowskiCurves mc =
          minkowski_curves(arc_to_canonical(key, q, piece));
      polyline(mc.gamma_plus, key, q, "#4a4");
      polyline(mc.gamma_minus, key, q, "#48c");
    }
    os << "</g>\n";
  }
  os << "<g fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\">\n";
  for (const UnitArc& e : arcs) {
    os << "<path d=\"";
    if (e.span() >= kTwoPi - 1e-12) {
      arc_path(os, m, e.center, 1.0, 0.0, kPi);
      arc_path(os, m, e.center, 1.0, kPi, kTwoPi);
    } else {
      arc_path(os, m, e.center, 1.0, e.theta_start, e.theta_end);
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace arcunion::svg
