#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <deque>
#include <sstream>
#include <unordered_map>

#include "arcunion/arcsearch.hpp"
#include "arcunion/disc_union.hpp"
#include "arcunion/envelope.hpp"
#include "arcunion/generators.hpp"
#include "arcunion/oracle.hpp"
#include "arcunion/svg.hpp"

namespace py = pybind11;
using namespace arcunion;

namespace {

// Owns its curves so python callers deal in plain ids.
class PyEnvelope {
 public:
  void add_line(double slope, double intercept, std::int64_t id) {
    store_.push_back(envelope::Curve::line(slope, intercept, id));
    add(id);
  }
  void add_lower_semicircle(double cx, double cy, double r, std::int64_t id) {
    store_.push_back(envelope::Curve::lower_semicircle({cx, cy}, r, id));
    add(id);
  }
  void remove(std::int64_t id) {
    auto it = by_id_.find(id);
    if (it == by_id_.end())
      throw std::invalid_argument("envelope: unknown curve id");
    tree_.erase(it->second);
    by_id_.erase(it);
  }
  std::int64_t ray_shoot(double x) const { return tree_.ray_shoot(x).curve->id(); }
  std::vector<std::tuple<std::int64_t, double, double>> envelope() const {
    std::vector<std::tuple<std::int64_t, double, double>> out;
    for (const auto& s : tree_.full_envelope())
      out.emplace_back(s.curve->id(), s.x_lo, s.x_hi);
    return out;
  }
  std::vector<std::int64_t> curves_below(double x, double y) {
    std::vector<std::int64_t> out;
    for (const envelope::Curve* c : tree_.report_below({x, y}))
      out.push_back(c->id());
    std::sort(out.begin(), out.end());
    return out;
  }
  std::size_t size() const { return tree_.size(); }

 private:
  void add(std::int64_t id) {
    const envelope::Curve* c = &store_.back();
    if (by_id_.count(id)) {
      store_.pop_back();
      throw std::invalid_argument("envelope: duplicate curve id");
    }
    tree_.insert(c);
    by_id_[id] = c;
  }
  std::deque<envelope::Curve> store_;
  std::unordered_map<std::int64_t, const envelope::Curve*> by_id_;
  envelope::EnvelopeTree tree_;
};

py::dict report_to_dict(const InsertionReport& rep) {
  py::dict d;
  const char* cls = rep.classification == InsertionReport::Class::Normal
                        ? "normal"
                        : rep.classification == InsertionReport::Class::Contained
                              ? "contained"
                              : "disjoint";
  d["class"] = cls;
  d["area_delta"] = rep.area_delta;
  d["k"] = rep.k;
  py::list removed, added;
  for (const auto& a : rep.removed)
    removed.append(py::make_tuple(a.disc, a.a0, a.a1));
  for (const auto& a : rep.added)
    added.append(py::make_tuple(a.disc, a.a0, a.a1));
  d["removed"] = removed;
  d["added"] = added;
  return d;
}

}  // namespace

PYBIND11_MODULE(_arcunion, m) {
  m.doc() =
      "Dynamic union of unit discs, lower envelopes of pseudo-line-like "
      "curves, and unit-arc intersection searching.";

  m.def("tolerance", [] { return global_tolerance(); });
  m.def("set_tolerance", [](double eps) { global_tolerance() = eps; });

  py::class_<DiscUnion>(m, "DiscUnion")
      .def(py::init<>())
      .def(
          "insert",
          [](DiscUnion& u, double x, double y) {
            return report_to_dict(u.insert_disc({x, y}));
          },
          py::arg("x"), py::arg("y"))
      .def("area", &DiscUnion::area)
      .def("disc_count", &DiscUnion::disc_count)
      .def("total_structural_changes", &DiscUnion::total_structural_changes)
      .def("boundary",
           [](const DiscUnion& u) {
             std::vector<std::tuple<int, double, double, double, double>> out;
             for (const UnitArc& e : u.boundary())
               out.emplace_back(static_cast<int>(e.id), e.center.x,
                                e.center.y, e.theta_start, e.theta_end);
             return out;
           })
      .def("save",
           [](const DiscUnion& u) {
             std::ostringstream os;
             u.save(os);
             return os.str();
           })
      .def_static("load",
                  [](const std::string& text) {
                    std::istringstream is(text);
                    return DiscUnion::load(is);
                  })
      .def("svg", [](const DiscUnion& u) { return svg::render_union(u); });

  py::class_<PyEnvelope>(m, "LowerEnvelope")
      .def(py::init<>())
      .def("add_line", &PyEnvelope::add_line, py::arg("slope"),
           py::arg("intercept"), py::arg("id"))
      .def("add_lower_semicircle", &PyEnvelope::add_lower_semicircle,
           py::arg("cx"), py::arg("cy"), py::arg("r"), py::arg("id"))
      .def("remove", &PyEnvelope::remove, py::arg("id"))
      .def("ray_shoot", &PyEnvelope::ray_shoot, py::arg("x"))
      .def("envelope", &PyEnvelope::envelope)
      .def("curves_below", &PyEnvelope::curves_below, py::arg("x"),
           py::arg("y"))
      .def("__len__", &PyEnvelope::size);

  py::class_<arcsearch::ArcSearchIndex>(m, "ArcSearchIndex")
      .def(py::init<>())
      .def(
          "insert",
          [](arcsearch::ArcSearchIndex& idx, double cx, double cy, double a0,
             double a1, std::int64_t id) {
            idx.insert(make_unit_arc({cx, cy}, a0, a1, id));
          },
          py::arg("cx"), py::arg("cy"), py::arg("theta_start"),
          py::arg("theta_end"), py::arg("id"))
      .def("erase", &arcsearch::ArcSearchIndex::erase, py::arg("id"))
      .def("query_disc",
           [](const arcsearch::ArcSearchIndex& idx, double x, double y) {
             return idx.query_disc({x, y});
           })
      .def("__len__", &arcsearch::ArcSearchIndex::size);

  m.def(
      "arc_intersects_disc",
      [](double cx, double cy, double a0, double a1, double x, double y) {
        return arc_intersects_disc(make_unit_arc({cx, cy}, a0, a1, 0),
                                   {x, y});
      },
      "Direct predicate: does the arc meet the unit disc around (x, y)?");
  m.def("criteria_check",
        [](double cx, double cy, double a0, double a1, double x, double y) {
          return arcsearch::criteria_check(
              arcsearch::make_record(make_unit_arc({cx, cy}, a0, a1, 0)),
              {x, y});
        });

  m.def("lens_area", &oracle::lens_area, py::arg("d"));
  m.def("two_disc_union_area", &oracle::two_disc_union_area, py::arg("d"));
  m.def("three_disc_union_area",
        [](double ax, double ay, double bx, double by, double cx, double cy) {
          return oracle::three_disc_union_area({ax, ay}, {bx, by}, {cx, cy});
        });
  m.def("mc_area",
        [](const std::vector<std::pair<double, double>>& centers,
           std::size_t samples, std::uint64_t seed) {
          std::vector<Point> pts;
          for (auto [x, y] : centers) pts.push_back({x, y});
          const auto r = oracle::mc_area(pts, samples, seed);
          return py::make_tuple(r.estimate, r.std_error);
        });
  m.def("figure_one_stream", [](int n) {
    std::vector<std::pair<double, double>> out;
    for (const Point& p : gen::figure_one_stream(n))
      out.emplace_back(p.x, p.y);
    return out;
  });
}
