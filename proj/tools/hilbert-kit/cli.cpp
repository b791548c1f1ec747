#include "cli.hpp"

#include "hilbert/asymptotics.hpp"
#include "hilbert/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>

namespace hilbert::cli {

namespace {

using Scalars = std::vector<std::pair<std::string, double>>;

struct Options {
  std::string body_path;
  std::string p;
  std::string q;
  std::string v;
  std::string u;
  std::string kind = "hilbert";
  std::string method = "polar";
  std::string format = "csv";
  std::string out_path;
  double t = 1.0;
  double t_min = 1.0;
  double t_max = 8.0;
  int steps = 8;
  int chords = 0;
  int grid = 2048;
  bool coarse = false;
  int quad_points = 0;
  int density_points = 0;
  int volume_points = 0;
  double rel_tol = 0.0;
};

Vec parse_point(const std::string& text, int dim, const char* name) {
  std::vector<double> xs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string field = text.substr(start, comma - start);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ArgumentError(std::string("--") + name + ": cannot parse '" + text + "'");
    }
    xs.push_back(x);
    start = comma + 1;
  }
  if (static_cast<int>(xs.size()) != dim) {
    throw ArgumentError(std::string("--") + name + ": expected " + std::to_string(dim) +
                        " coordinates, got " + std::to_string(xs.size()));
  }
  Vec out(dim);
  for (int i = 0; i < dim; ++i) out[i] = xs[static_cast<std::size_t>(i)];
  return out;
}

ToleranceConfig make_config(const Options& o) {
  ToleranceConfig c = o.coarse ? ToleranceConfig::coarse() : ToleranceConfig{};
  if (o.quad_points > 0) c.quad_points_circle = o.quad_points;
  if (o.density_points > 0) c.density_points_circle = o.density_points;
  if (o.volume_points > 0) c.volume_points_circle = o.volume_points;
  if (o.rel_tol > 0.0) c.integral_rel_tol = o.rel_tol;
  c.validate();
  return c;
}

class Sink {
 public:
  Sink(const Options& o, std::ostream& fallback) {
    if (!o.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(o.out_path);
      if (!*file_) throw ArgumentError("--out: cannot open '" + o.out_path + "'");
    }
    stream_ = file_ ? file_.get() : &fallback;
    text_ = o.format == "text";
  }

  void scalars(const Scalars& values) {
    if (!text_) {
      write_scalars_csv(*stream_, values);
      return;
    }
    std::size_t width = 0;
    for (const auto& kv : values) width = std::max(width, kv.first.size());
    for (const auto& [name, value] : values) {
      *stream_ << std::left << std::setw(static_cast<int>(width)) << name << "  "
               << format_real(value) << '\n';
    }
  }

  void rows(const std::vector<ExperimentRow>& rows) {
    if (!text_) {
      write_report_csv(*stream_, rows);
      return;
    }
    *stream_ << std::right << std::setw(6) << "t" << std::setw(24) << "sphere_area"
             << std::setw(24) << "ball_volume" << std::setw(24) << "ratio" << std::setw(24)
             << "ln_area_over_t" << '\n';
    for (const auto& r : rows) {
      *stream_ << std::setw(6) << format_real(r.t) << std::setw(24) << format_real(r.sphere_area)
               << std::setw(24) << format_real(r.ball_volume) << std::setw(24)
               << format_real(r.ratio) << std::setw(24) << format_real(r.ln_area_over_t) << '\n';
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
  bool text_ = false;
};

Scalars summary_scalars(const BodySummary& s) {
  return {{"omega0", s.omega0}, {"omega1", s.omega1}, {"c", s.c}, {"k", s.k},
          {"K", s.K},           {"r", s.r},           {"R", s.R}};
}

}  // namespace

std::vector<double> make_t_grid(double t_min, double t_max, int steps) {
  if (!(t_min < t_max)) throw ArgumentError("t grid: --t-min must be below --t-max");
  if (!(t_max <= kMaxRadius)) throw ArgumentError("t grid: --t-max must be <= 8");
  if (steps < 2) throw ArgumentError("t grid: --steps must be >= 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i == steps - 1 ? t_max : t_min + (t_max - t_min) * i / (steps - 1);
  }
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert geometry of smooth convex bodies", "hilbert-kit"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--body", o.body_path, "Body description (JSON file)")->required();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "text"}));
    sub->add_option("--out", o.out_path, "Write results to this file instead of stdout");
    sub->add_flag("--coarse", o.coarse, "Cheaper quadrature (3D runs)");
    sub->add_option("--quad-points", o.quad_points, "Circle nodes for sphere and boundary integrals");
    sub->add_option("--density-points", o.density_points, "Circle nodes per density evaluation");
    sub->add_option("--volume-points", o.volume_points, "Direction nodes for ball volumes");
    sub->add_option("--rel-tol", o.rel_tol, "Relative tolerance of adaptive integrals");
  };
  auto t_grid_options = [&](CLI::App* sub) {
    sub->add_option("--t-min", o.t_min, "Smallest radius");
    sub->add_option("--t-max", o.t_max, "Largest radius (<= 8)");
    sub->add_option("--steps", o.steps, "Number of radii");
  };
  // Grid defaults differ per subcommand.
  auto grid_for = [&](CLI::App* sub, double t_min, int steps) {
    return make_t_grid(sub->count("--t-min") ? o.t_min : t_min, o.t_max,
                       sub->count("--steps") ? o.steps : steps);
  };
  auto load = [&]() {
    return MetricQuery{load_body(o.body_path), make_config(o)};
  };

  auto* body_info = app.add_subcommand("body-info", "Extremal constants of a body");
  common(body_info);
  body_info->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      Scalars s{{"dim", static_cast<double>(q.body.dim())}};
      for (auto& kv : summary_scalars(summarize(q.body))) s.push_back(kv);
      s.emplace_back("boundary_measure", boundary_measure(q.body, q.config));
      s.emplace_back("volume", body_volume(q.body, q.config));
      Sink(o, out).scalars(s);
    };
  });

  auto* distance = app.add_subcommand("distance", "Hilbert distance between two points");
  common(distance);
  distance->add_option("--p", o.p, "First point, comma separated")->required();
  distance->add_option("--q", o.q, "Second point, comma separated")->required();
  distance->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const double d = hilbert_distance(q, parse_point(o.p, q.body.dim(), "p"),
                                        parse_point(o.q, q.body.dim(), "q"));
      Sink(o, out).scalars({{"distance", d}});
    };
  });

  auto* norm = app.add_subcommand("norm", "Finsler norm of a tangent vector");
  common(norm);
  norm->add_option("--p", o.p, "Base point")->required();
  norm->add_option("--v", o.v, "Tangent vector")->required();
  norm->add_option("--kind", o.kind, "hilbert, funk or klein")
      ->check(CLI::IsMember({"hilbert", "funk", "klein"}));
  norm->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const Vec p = parse_point(o.p, q.body.dim(), "p");
      const Vec v = parse_point(o.v, q.body.dim(), "v");
      double value = 0.0;
      if (o.kind == "funk") {
        value = funk_norm(q, p, v);
      } else if (o.kind == "klein") {
        const auto* ball = std::get_if<Ball>(&q.body.family());
        if (ball == nullptr) throw ArgumentError("--kind klein needs a ball body");
        value = klein_norm(ball->radius, zero_vec(q.body.dim()), p, v);
      } else {
        value = finsler_norm(q, p, v);
      }
      Sink(o, out).scalars({{"norm", value}});
    };
  });

  auto* density = app.add_subcommand("density", "Busemann-Hausdorff density at a point");
  common(density);
  density->add_option("--p", o.p, "Point")->required();
  density->add_option("--kind", o.kind, "hilbert or funk")
      ->check(CLI::IsMember({"hilbert", "funk"}));
  density->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const Vec p = parse_point(o.p, q.body.dim(), "p");
      const double sigma = o.kind == "funk" ? funk_density(q, p).sigma : busemann_density(q, p).sigma;
      Sink(o, out).scalars({{"density", sigma}});
    };
  });

  auto* ball_volume = app.add_subcommand("ball-volume", "Volume of the metric ball of radius t");
  common(ball_volume);
  ball_volume->add_option("--t", o.t, "Radius")->required();
  ball_volume->add_option("--method", o.method, "polar or direct")
      ->check(CLI::IsMember({"polar", "direct"}));
  ball_volume->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const double v = o.method == "direct" ? ball_volume_direct(q, o.t) : ball_volume_polar(q, o.t);
      Sink(o, out).scalars({{"ball_volume", v}});
    };
  });

  auto* sphere = app.add_subcommand("sphere-area", "Measure of the metric sphere of radius t");
  common(sphere);
  sphere->add_option("--t", o.t, "Radius")->required();
  sphere->add_option("--chords", o.chords, "Also report the inscribed-polygon estimate");
  sphere->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      Scalars s{{"sphere_area", sphere_area(q, o.t)}};
      if (o.chords > 0) s.emplace_back("sphere_area_chords", sphere_area_chords(q, o.t, o.chords));
      Sink(o, out).scalars(s);
    };
  });

  auto* entropy = app.add_subcommand("entropy", "Exponential growth rate of spheres and balls");
  common(entropy);
  t_grid_options(entropy);
  entropy->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const auto grid = grid_for(entropy, 5.0, 4);
      if (grid.size() < 4 || grid.front() < 4.0) {
        throw ArgumentError("entropy: needs >= 4 radii inside [4, 8]");
      }
      const auto report = ratio_curve(q, grid);
      std::vector<std::pair<double, double>> spheres;
      std::vector<std::pair<double, double>> balls;
      for (const auto& r : report.rows) {
        spheres.emplace_back(r.t, std::log(r.sphere_area));
        balls.emplace_back(r.t, std::log(r.ball_volume));
      }
      Sink(o, out).rows(report.rows);
      err << "entropy_spheres " << format_real(fit_slope(spheres)) << '\n'
          << "entropy_balls " << format_real(fit_slope(balls)) << '\n';
    };
  });

  auto* ratio = app.add_subcommand("ratio", "Ball volume over sphere area on a t grid");
  common(ratio);
  t_grid_options(ratio);
  ratio->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      Sink(o, out).rows(ratio_curve(q, grid_for(ratio, 1.0, 8)).rows);
    };
  });

  auto* bounds = app.add_subcommand("bounds", "Asymptotic ratio bounds and body constants");
  common(bounds);
  bounds->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const BodySummary s = summarize(q.body);
      const RatioBounds b = theorem2_bounds(q.body, s, q.config);
      const BoundConstants k = shell_constants(q.body, s, q.config);
      Scalars v{{"upper_sharp", b.upper_sharp},         {"lower_sharp", b.lower_sharp},
                {"upper_simple", b.upper_simple},       {"lower_simple", b.lower_simple},
                {"upper_symmetric", b.upper_symmetric}, {"lower_symmetric", b.lower_symmetric}};
      for (auto& kv : summary_scalars(s)) v.push_back(kv);
      v.insert(v.end(), {{"d1", k.d1}, {"d2", k.d2}, {"C1", k.C1}, {"C2", k.C2}});
      Sink(o, out).scalars(v);
    };
  });

  auto* lemma1 = app.add_subcommand("lemma1", "Leading coefficients of the sphere-to-boundary gap");
  common(lemma1);
  lemma1->add_option("--u", o.u, "Direction, comma separated")->required();
  lemma1->add_option("--t", o.t, "Radius at which the gap is measured (default 6)");
  lemma1->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const Vec u = parse_point(o.u, q.body.dim(), "u");
      if (!(u.norm() > 0.0)) throw ArgumentError("--u must be nonzero");
      const AsymCoeffs c = lemma1_coeffs(q.body, u);
      const double t = lemma1->count("--t") ? o.t : 6.0;
      const double lead = std::exp(2.0 * t) * sphere_gap(q.body, u, t);
      Scalars s{{"delta", c.delta}};
      if (c.delta1) s.emplace_back("delta1", *c.delta1);
      if (c.delta2) s.emplace_back("delta2", *c.delta2);
      if (c.delta2_as_printed) s.emplace_back("delta2_as_printed", *c.delta2_as_printed);
      s.emplace_back("scaled_gap", lead);
      s.emplace_back("remainder", lead - c.delta);
      Sink(o, out).scalars(s);
    };
  });

  auto* lemma2 = app.add_subcommand("lemma2", "Angle between radius vector and boundary normal");
  common(lemma2);
  lemma2->add_option("--grid", o.grid, "Directions sampled (>= 512)");
  lemma2->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      const NormalAngleCheck c = lemma2_check(q.body, o.grid);
      Sink(o, out).scalars({{"min_cos", c.min_cos}, {"bound", c.bound}, {"holds", c.holds ? 1.0 : 0.0}});
    };
  });

  auto* funk = app.add_subcommand("funk-ratio", "Forward Funk ball volume over sphere length");
  common(funk);
  t_grid_options(funk);
  funk->callback([&] {
    action = [&] {
      const MetricQuery q = load();
      Sink(o, out).rows(funk_ratio_curve(q, grid_for(funk, 2.0, 7)).rows);
    };
  });

  std::vector<std::string> argv_store{"hilbert-kit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const BodySpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadSpec;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InvalidBodyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace hilbert::cli
