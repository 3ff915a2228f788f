// Command-line surface: stream insertions with per-step area, verification
// runs against the brute-force references, scaling benchmarks, and SVG
// rendering.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or i/o error.

#include <chrono>
#include <cmath>
#include <deque>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "arcunion/arcsearch.hpp"
#include "arcunion/disc_union.hpp"
#include "arcunion/envelope.hpp"
#include "arcunion/generators.hpp"
#include "arcunion/oracle.hpp"
#include "arcunion/svg.hpp"

using namespace arcunion;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

const char* class_name(InsertionReport::Class c) {
  switch (c) {
    case InsertionReport::Class::Normal:
      return "normal";
    case InsertionReport::Class::Contained:
      return "contained";
    case InsertionReport::Class::Disjoint:
      return "disjoint";
  }
  return "?";
}

// Reads "x y" lines; '#' starts a comment, blank lines are skipped.
// Returns the 1-based number of the first malformed line, or 0.
int read_stream(std::istream& is, std::vector<Point>* out) {
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    double x, y;
    std::string trailing;
    if (!(ls >> x >> y)) return lineno;
    if (ls >> trailing && !trailing.empty()) return lineno;
    if (!std::isfinite(x) || !std::isfinite(y)) return lineno;
    out->push_back({x, y});
  }
  return 0;
}

// Loads a snapshot or a plain coordinate stream, by sniffing the header.
int load_points(const std::string& path, std::vector<Point>* pts,
                std::string* err) {
  std::istream* is = &std::cin;
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) {
      *err = "cannot open input: " + path;
      return kExitUsage;
    }
    is = &file;
  }
  if (is->peek() == 'D') {  // DISCUNION snapshot
    std::string header;
    std::getline(*is, header);
    if (header.rfind("DISCUNION v1", 0) != 0) {
      *err = "unrecognized header: " + header;
      return kExitUsage;
    }
    std::string line;
    int lineno = 1;
    while (std::getline(*is, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string tag;
      double x, y;
      if (!(ls >> tag >> x >> y) || tag != "D") {
        *err = "snapshot: bad record at line " + std::to_string(lineno);
        return kExitUsage;
      }
      pts->push_back({x, y});
    }
    return kExitOk;
  }
  const int bad = read_stream(*is, pts);
  if (bad) {
    *err = "malformed input at line " + std::to_string(bad);
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_insert_stream(const std::string& input, const std::string& output,
                      const std::string& snapshot, bool timing) {
  std::vector<Point> pts;
  std::string err;
  if (int rc = load_points(input, &pts, &err); rc != kExitOk) {
    std::cerr << "insert-stream: " << err << "\n";
    return rc;
  }
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) {
      std::cerr << "insert-stream: cannot write " << output << "\n";
      return kExitUsage;
    }
    os = &file;
  }
  os->precision(17);
  *os << "step,x,y,area,area_delta,k,ns,class\n";
  DiscUnion u;
  int step = 0;
  for (const Point& c : pts) {
    const auto t0 = std::chrono::steady_clock::now();
    const InsertionReport rep = u.insert_disc(c);
    const auto t1 = std::chrono::steady_clock::now();
    const long long ns =
        timing ? std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                     .count()
               : 0;
    *os << step << ',' << c.x << ',' << c.y << ',' << u.area() << ','
        << rep.area_delta << ',' << rep.k << ',' << ns << ','
        << class_name(rep.classification) << "\n";
    ++step;
  }
  if (!snapshot.empty()) {
    std::ofstream snap(snapshot);
    if (!snap) {
      std::cerr << "insert-stream: cannot write snapshot " << snapshot << "\n";
      return kExitUsage;
    }
    u.save(snap);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int verify_envelope(int n, std::uint64_t seed) {
  using envelope::Curve;
  using envelope::EnvelopeTree;
  std::mt19937_64 rng(seed);
  for (int family = 0; family < 2; ++family) {
    std::deque<Curve> store;
    std::vector<const Curve*> live;
    EnvelopeTree tree;
    std::uniform_real_distribution<double> slope(-3.0, 3.0), icpt(-20.0, 20.0);
    std::uniform_real_distribution<double> cx(0.0, 0.707);
    for (int i = 0; i < n; ++i) {
      if (family == 0)
        store.push_back(Curve::line(slope(rng), icpt(rng), i));
      else
        store.push_back(Curve::lower_semicircle({cx(rng), cx(rng)}, 1.0, i));
      live.push_back(&store.back());
      tree.insert(live.back());
      if (i % 3 == 2) {  // interleave deletions
        std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
        const std::size_t at = pick(rng);
        tree.erase(live[at]);
        live.erase(live.begin() + at);
      }
    }
    const double lo = family == 0 ? -25.0 : -0.8;
    const double hi = family == 0 ? 25.0 : 1.5;
    std::uniform_real_distribution<double> ux(lo, hi);
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i) xs.push_back(ux(rng));
    const auto ref = oracle::naive_envelope(live, xs);
    const auto env = tree.full_envelope();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Curve* cur = nullptr;
      for (const auto& s : env)
        if (s.x_lo < xs[i] && xs[i] <= s.x_hi) cur = s.curve;
      if (!cur) {
        std::cerr << "verify envelope: no segment covers x=" << xs[i] << "\n";
        return kExitVerifyFailed;
      }
      const double dy = std::fabs(cur->y_at(xs[i]) - ref[i].y);
      if (dy > 1e-6 * (1.0 + std::fabs(ref[i].y))) {
        std::cerr << "verify envelope: family=" << family << " x=" << xs[i]
                  << " structure y=" << cur->y_at(xs[i])
                  << " oracle y=" << ref[i].y << "\n";
        return kExitVerifyFailed;
      }
    }
  }
  std::cout << "envelope: ok (n=" << n << ", both families)\n";
  return kExitOk;
}

int verify_union(int n, std::uint64_t seed) {
  const double box = std::max(2.0, std::sqrt(static_cast<double>(n)));
  const auto pts = gen::uniform_stream(n, box, seed);
  DiscUnion u;
  std::vector<Point> so_far;
  for (const Point& c : pts) {
    so_far.push_back(c);
    u.insert_disc(c);
    const auto ref = oracle::naive_boundary(so_far);
    const auto& got = u.boundary_by_disc();
    for (std::size_t d = 0; d < ref.size(); ++d) {
      if (ref[d].size() != got[d].size()) {
        std::cerr << "verify union: disc " << d << " after "
                  << so_far.size() << " insertions: " << got[d].size()
                  << " arcs vs oracle " << ref[d].size() << "\n";
        return kExitVerifyFailed;
      }
      for (std::size_t t = 0; t < ref[d].size(); ++t)
        if (std::fabs(ref[d][t].first - got[d][t].first) > 1e-7 ||
            std::fabs(ref[d][t].second - got[d][t].second) > 1e-7) {
          std::cerr << "verify union: disc " << d << " arc " << t
                    << " endpoints differ\n";
          return kExitVerifyFailed;
        }
    }
  }
  const double exact = oracle::naive_union_area(so_far);
  if (std::fabs(u.area() - exact) > 1e-7 * (1.0 + exact)) {
    std::cerr << "verify union: area " << u.area() << " vs oracle " << exact
              << "\n";
    return kExitVerifyFailed;
  }
  if (n == 3) {
    const double ie = oracle::three_disc_union_area(pts[0], pts[1], pts[2]);
    if (std::fabs(u.area() - ie) > 1e-9 * (1.0 + ie)) {
      std::cerr << "verify union: inclusion-exclusion mismatch\n";
      return kExitVerifyFailed;
    }
  }
  std::cout << "union: ok (n=" << n << ", area=" << u.area() << ")\n";
  return kExitOk;
}

int verify_arcsearch(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(0.0, std::sqrt(9.0 + n));
  std::uniform_real_distribution<double> t(0.0, 1.0);
  arcsearch::ArcSearchIndex idx;
  std::vector<UnitArc> live;
  std::int64_t next = 0;
  for (int step = 0; step < 2 * n; ++step) {
    const bool ins = live.empty() || (rng() % 3) != 0;
    if (ins) {
      const double a = kPi + t(rng) * (kPi - 2e-3);
      const double b =
          std::min(kTwoPi, a + 1e-3 + t(rng) * (kTwoPi - a - 1e-3));
      live.push_back(make_unit_arc({pos(rng), pos(rng)}, a, b, next++));
      idx.insert(live.back());
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
      const std::size_t at = pick(rng);
      idx.erase(live[at].id);
      live.erase(live.begin() + at);
    }
    const Point q{pos(rng), pos(rng)};
    bool borderline = false;
    for (const UnitArc& e : live)
      if (std::fabs(arc_point_distance(e, q) - 1.0) < 1e-7) borderline = true;
    if (borderline) continue;
    if (idx.query_disc(q) != oracle::naive_arc_query(live, q)) {
      std::cerr << "verify arcsearch: query mismatch at step " << step << "\n";
      return kExitVerifyFailed;
    }
  }
  std::cout << "arcsearch: ok (" << 2 * n << " operations)\n";
  return kExitOk;
}

int verify_figure1(int n) {
  if (n < 8) {
    std::cerr << "verify figure1: n must be at least 8\n";
    return kExitUsage;
  }
  auto run = [](int size) {
    DiscUnion u;
    for (const Point& c : gen::figure_one_stream(size)) u.insert_disc(c);
    return u.total_structural_changes();
  };
  const std::uint64_t k_half = run(n / 2);
  const std::uint64_t k_full = run(n);
  const double ratio =
      static_cast<double>(k_full) / static_cast<double>(std::max<std::uint64_t>(1, k_half));
  std::cout << "figure1: K(" << n / 2 << ")=" << k_half << " K(" << n
            << ")=" << k_full << " ratio=" << ratio << "\n";
  if (ratio < 3.3 || ratio > 4.7) {
    std::cerr << "verify figure1: growth ratio " << ratio
              << " outside [3.3, 4.7]\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_bench(const std::vector<int>& sizes, int reps, std::uint64_t seed,
              const std::string& format) {
  const bool csv = format == "csv";
  if (csv)
    std::cout << "n,mean_insert_us,mean_k,mean_merge_steps,time_over_klog2\n";
  else
    std::cout << "n        insert[us]   mean_k   merge_steps   t/((k+1)log^2 n)\n";
  for (int n : sizes) {
    if (reps <= 0) continue;
    double total_ns = 0, total_norm = 0, total_steps = 0, total_merges = 0;
    std::uint64_t total_k = 0;
    for (int r = 0; r < reps; ++r) {
      const auto pts =
          gen::uniform_stream(n, std::sqrt(n / 1.2), seed + 1000 * r);
      DiscUnion u;
      const auto t0 = std::chrono::steady_clock::now();
      for (const Point& c : pts) total_k += u.insert_disc(c).k;
      const auto t1 = std::chrono::steady_clock::now();
      total_ns += std::chrono::duration<double, std::nano>(t1 - t0).count();
      const auto mc = u.merge_counters();
      total_steps += static_cast<double>(mc.steps);
      total_merges += static_cast<double>(mc.merges);
      const double l = std::log2(std::max(2.0, static_cast<double>(n)));
      total_norm += (static_cast<double>(total_k) + n) * l * l;
    }
    const double mean_us = total_ns / 1e3 / (reps * n);
    const double mean_k =
        static_cast<double>(total_k) / (static_cast<double>(reps) * n);
    const double mean_steps =
        total_merges > 0 ? total_steps / total_merges : 0.0;
    const double norm = total_ns / total_norm;
    if (csv)
      std::cout << n << ',' << mean_us << ',' << mean_k << ',' << mean_steps
                << ',' << norm << "\n";
    else
      printf("%-8d %-12.3f %-8.2f %-13.2f %-10.2f\n", n, mean_us, mean_k,
             mean_steps, norm);
  }
  return kExitOk;
}

int cmd_render(const std::string& input, const std::string& output,
               bool cells, bool curves, double scale) {
  std::vector<Point> pts;
  std::string err;
  if (int rc = load_points(input, &pts, &err); rc != kExitOk) {
    std::cerr << "render: " << err << "\n";
    return rc;
  }
  DiscUnion u;
  for (const Point& c : pts) u.insert_disc(c);
  svg::RenderOptions opt;
  opt.cells = cells;
  opt.curves = curves;
  opt.scale = scale;
  const std::string body = svg::render_union(u, opt);
  std::ofstream os(output);
  if (!os) {
    std::cerr << "render: cannot write " << output << "\n";
    return kExitUsage;
  }
  os << body;
  std::cout << "render: " << u.disc_count() << " discs, "
            << u.boundary().size() << " boundary arcs -> " << output << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arcunion: dynamic union of unit discs, lower envelopes and unit-arc "
      "intersection search"};
  app.require_subcommand(1);
  double eps = 1e-9;
  app.add_option("--eps", eps, "global incidence tolerance")
      ->capture_default_str();

  // insert-stream
  auto* ins = app.add_subcommand(
      "insert-stream", "replay 'x y' lines (or a snapshot), emit CSV");
  std::string in_path, out_path, snap_path;
  bool timing = false;
  ins->add_option("input", in_path, "input path ('-' or empty for stdin)");
  ins->add_option("-o,--output", out_path, "CSV output path (default stdout)");
  ins->add_option("--save-snapshot", snap_path, "write a snapshot afterwards");
  ins->add_flag("--timing", timing,
                "fill the ns column with wall time (off keeps output "
                "replay-identical)");

  // verify
  auto* ver = app.add_subcommand("verify", "run an oracle-equivalence suite");
  std::string scenario;
  int vn = 512;
  std::uint64_t seed = 7;
  ver->add_option("scenario", scenario,
                  "one of: envelope, union, arcsearch, figure1")
      ->required();
  ver->add_option("--n", vn, "instance size")->capture_default_str();
  ver->add_option("--seed", seed, "rng seed")->capture_default_str();

  // bench
  auto* ben = app.add_subcommand("bench", "insertion scaling table");
  std::string sizes_csv = "256,1024,4096";
  int reps = 1;
  std::string format = "plain";
  std::uint64_t bseed = 1;
  ben->add_option("--sizes", sizes_csv, "comma-separated sizes")
      ->capture_default_str();
  ben->add_option("--reps", reps, "repetitions per size")
      ->capture_default_str();
  ben->add_option("--seed", bseed, "rng seed")->capture_default_str();
  ben->add_option("--format", format, "plain or csv")->capture_default_str();

  // render
  auto* ren = app.add_subcommand("render", "render a stream or snapshot as SVG");
  std::string rin, rout = "out.svg";
  bool rcells = false, rcurves = false;
  double rscale = 60.0;
  ren->add_option("input", rin, "input path ('-' or empty for stdin)");
  ren->add_option("-o,--output", rout, "SVG path")->capture_default_str();
  ren->add_flag("--cells", rcells, "draw active cells");
  ren->add_flag("--curves", rcurves, "draw per-cell offset curves");
  ren->add_option("--scale", rscale, "pixels per unit")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  global_tolerance() = eps;
  try {
    if (*ins) return cmd_insert_stream(in_path, out_path, snap_path, timing);
    if (*ver) {
      if (scenario == "envelope") return verify_envelope(vn, seed);
      if (scenario == "union") return verify_union(vn, seed);
      if (scenario == "arcsearch") return verify_arcsearch(vn, seed);
      if (scenario == "figure1") return verify_figure1(vn);
      std::cerr << "verify: unknown scenario '" << scenario << "'\n";
      return kExitUsage;
    }
    if (*ben) {
      std::vector<int> sizes;
      std::stringstream ss(sizes_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        sizes.push_back(std::stoi(tok));
      }
      for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] < sizes[i - 1]) {
          std::cerr << "bench: sizes must be ascending\n";
          return kExitUsage;
        }
      return cmd_bench(sizes, reps, bseed, format);
    }
    if (*ren) return cmd_render(rin, rout, rcells, rcurves, rscale);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
