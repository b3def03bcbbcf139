#include "fht/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fht/classifier.hpp"
#include "fht/eigen.hpp"
#include "fht/plot.hpp"
#include "fht/region.hpp"
#include "fht/report.hpp"
#include "fht/transform.hpp"

namespace fht {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitBounds = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitConvergence = 4;
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;

struct GlobalOptions {
  std::optional<double> tol;
  std::optional<int> max_depth;
  std::optional<double> margin;
  std::optional<std::string> mode;
  std::string config_path;
  std::string output = "text";
};

QuadMode parse_mode(const std::string& text) {
  if (text == "smooth") return QuadMode::SmoothSubtraction;
  if (text == "chebyshev") return QuadMode::ChebyshevSubstitution;
  throw DomainError("mode must be 'smooth' or 'chebyshev', got '" + text + "'");
}

// Defaults, then FHT_DEFAULT_TOL, then the config file, then explicit flags.
QuadratureConfig resolve_config(const GlobalOptions& opts) {
  QuadratureConfig cfg;
  cfg.mode = QuadMode::ChebyshevSubstitution;
  if (const char* env = std::getenv("FHT_DEFAULT_TOL")) {
    try {
      cfg.tol = std::stod(env);
    } catch (const std::exception&) {
      throw DomainError("FHT_DEFAULT_TOL is not a number");
    }
  }
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) throw DomainError("cannot open config file '" + opts.config_path + "'");
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "tol") cfg.tol = std::stod(value);
      else if (key == "max_depth") cfg.max_depth = std::stoi(value);
      else if (key == "endpoint_margin") cfg.endpoint_margin = std::stod(value);
      else if (key == "mode") cfg.mode = parse_mode(value);
      else if (!key.empty())
        throw DomainError("config file: unknown key '" + key + "'");
    }
  }
  if (opts.tol) cfg.tol = *opts.tol;
  if (opts.max_depth) cfg.max_depth = *opts.max_depth;
  if (opts.margin) cfg.endpoint_margin = *opts.margin;
  if (opts.mode) cfg.mode = parse_mode(*opts.mode);
  cfg.validate();
  return cfg;
}

void print_answer_line(std::ostream& out, const char* label, const SpectrumAnswer& a) {
  out << "  " << label << a.to_string() << (a.is_exact() ? "  [exact]" : "  [bounds]")
      << "\n";
}

void print_classification(std::ostream& out, const std::string& space,
                          const SpaceClassification& sc) {
  out << "space: " << space << "\n";
  out << "zero location: "
      << (sc.zero_location ? to_string(*sc.zero_location) : "ambiguous") << "\n";
  print_answer_line(out, "spectrum:   ", sc.spectrum);
  print_answer_line(out, "point:      ", sc.point);
  print_answer_line(out, "residual:   ", sc.residual);
  print_answer_line(out, "continuous: ", sc.continuous);
  if (sc.cases.size() > 1) {
    out << "cases (" << sc.cases.size() << " attainment assignments):\n";
    for (const auto& c : sc.cases) {
      out << "- p_x " << (c.profile.p_attained ? "attained" : "not attained") << ", q_x "
          << (c.profile.q_attained ? "attained" : "not attained") << ":\n";
      print_answer_line(out, "point:      ", c.result.point);
      print_answer_line(out, "residual:   ", c.result.residual);
      print_answer_line(out, "continuous: ", c.result.continuous);
    }
  }
  const auto& provenance = sc.cases.front().result.provenance;
  out << "rules: ";
  for (size_t i = 0; i < provenance.size(); ++i) out << (i ? ", " : "") << provenance[i];
  out << "\n";
}

int cmd_classify(std::ostream& out, const std::string& space, const std::string& output) {
  const SpaceSpec spec = SpaceSpec::parse(space);
  const SpaceClassification sc = classify_space(spec);
  if (output == "json") {
    json j = to_json(sc);
    j["space"] = space;
    out << j.dump(2) << "\n";
  } else {
    print_classification(out, space, sc);
  }
  return sc.all_exact() ? kExitOk : kExitBounds;
}

int cmd_member(std::ostream& out, const std::string& lambda_text,
               std::optional<double> p, const std::string& space,
               const std::string& output) {
  const Complex lambda = parse_complex(lambda_text);
  if (p.has_value()) {
    const RegionClass cls = region_membership(lambda, *p);
    if (output == "json")
      out << json{{"lambda", format_complex(lambda)}, {"p", *p},
                  {"region", to_string(cls)}}
                 .dump(2)
          << "\n";
    else
      out << to_string(cls) << "\n";
    return kExitOk;
  }

  const SpaceClassification sc = classify_space(SpaceSpec::parse(space));
  auto contains_lower = [&](const SpectrumAnswer& a) { return a.lower().contains(lambda); };
  auto contains_upper = [&](const SpectrumAnswer& a) { return a.upper().contains(lambda); };
  std::string verdict;
  if (contains_lower(sc.point)) verdict = "point";
  else if (contains_lower(sc.residual)) verdict = "residual";
  else if (contains_lower(sc.continuous)) verdict = "continuous";
  else if (contains_upper(sc.spectrum))
    verdict = sc.all_exact() ? "outside" : "unresolved";
  else verdict = "outside";
  if (output == "json")
    out << json{{"lambda", format_complex(lambda)}, {"space", space},
                {"part", verdict}}
               .dump(2)
        << "\n";
  else
    out << verdict << "\n";
  return kExitOk;
}

int cmd_eigencheck(std::ostream& out, const std::string& lambda_text, int n,
                   const QuadratureConfig& cfg) {
  const Complex lambda = parse_complex(lambda_text);
  if (!in_cut_plane(lambda))
    throw DomainError("eigencheck: lambda outside the cut plane");
  const auto grid = interior_grid(n, 1.0 - cfg.endpoint_margin - 0.01);
  const ResidualReport report = eigen_residual(lambda, grid, cfg);
  json j = to_json(report);
  j["lambda"] = format_complex(lambda);
  out << j.dump(2) << "\n";
  return report.max_residual <= 100.0 * cfg.tol ? kExitOk : kExitIdentityFailure;
}

TransformInput named_function(const std::string& name) {
  if (name == "one")
    return {[](double) { return Complex(1.0, 0.0); },
            [](double) { return Complex(1.0, 0.0); }};
  if (name == "w")
    return {[](double x) { return Complex(weight_w(x), 0.0); },
            [](double theta) { return Complex(std::sin(theta), 0.0); }};
  if (name == "invw")
    return {[](double x) { return Complex(1.0 / weight_w(x), 0.0); },
            [](double theta) { return Complex(1.0 / std::sin(theta), 0.0); }};
  if (name == "ixw")
    return {[](double x) { return Complex(0.0, x / weight_w(x)); },
            [](double theta) { return Complex(0.0, std::cos(theta) / std::sin(theta)); }};
  if (name.rfind("xi:", 0) == 0) {
    const Complex lambda = parse_complex(name.substr(3));
    if (!in_cut_plane(lambda)) throw DomainError("xi: lambda outside the cut plane");
    EigenFunction ef(lambda);
    return {[ef](double x) { return ef(x); },
            [ef](double theta) { return ef.value_theta(theta); }};
  }
  throw DomainError("unknown function '" + name + "'; expected one|w|invw|ixw|xi:<lambda>");
}

int cmd_transform(std::ostream& out, const std::string& fname, std::optional<double> t,
                  int grid_n, const QuadratureConfig& cfg, const std::string& output) {
  const auto f = named_function(fname);
  std::vector<double> ts;
  if (t.has_value()) ts.push_back(*t);
  else ts = interior_grid(grid_n, 1.0 - cfg.endpoint_margin - 0.01);

  std::vector<Complex> values;
  values.reserve(ts.size());
  for (double ti : ts) values.push_back(finite_hilbert(f, ti, cfg));

  if (output == "json") {
    json rows = json::array();
    for (size_t i = 0; i < ts.size(); ++i)
      rows.push_back(json{{"t", ts[i]},
                          {"re", values[i].real()},
                          {"im", values[i].imag()}});
    out << json{{"f", fname}, {"values", rows}, {"config", to_json(cfg)}}.dump(2) << "\n";
  } else if (output == "csv") {
    out << "t,re,im\n";
    for (size_t i = 0; i < ts.size(); ++i)
      out << ts[i] << "," << values[i].real() << "," << values[i].imag() << "\n";
  } else {
    for (size_t i = 0; i < ts.size(); ++i)
      out << "T(" << fname << ")(" << ts[i] << ") = " << format_complex(values[i])
          << "\n";
  }
  return kExitOk;
}

int cmd_region(std::ostream& out, double p, int n, const std::string& csv_path,
               const std::string& svg_path) {
  if (csv_path.empty() && svg_path.empty())
    throw DomainError("region: need --csv or --svg");
  auto emit = [&](const std::string& path, auto writer) {
    if (path == "-") {
      writer(out);
    } else {
      std::ofstream file(path);
      if (!file) throw DomainError("region: cannot open '" + path + "'");
      writer(file);
    }
  };
  if (!csv_path.empty())
    emit(csv_path, [&](std::ostream& os) { write_region_csv(os, p, n); });
  if (!svg_path.empty())
    emit(svg_path, [&](std::ostream& os) { write_region_svg(os, p, n); });
  return kExitOk;
}

int cmd_identities(std::ostream& out, const QuadratureConfig& cfg) {
  const double accept = 100.0 * cfg.tol;
  const auto grid = interior_grid(50, 0.95);
  bool all_ok = true;
  json results = json::array();

  auto run_check = [&](const std::string& name, auto&& fn) {
    double worst = 0.0;
    for (double t : grid) worst = std::max(worst, fn(t));
    const bool ok = worst <= accept;
    all_ok = all_ok && ok;
    out << (ok ? "pass" : "FAIL") << "  " << name << "  max residual " << worst << "\n";
    results.push_back(json{{"identity", name}, {"max_residual", worst}, {"pass", ok}});
  };

  auto inv_w = named_function("invw");
  auto w_fn = named_function("w");
  auto ixw = named_function("ixw");

  run_check("T(1/w) = 0",
            [&](double t) { return std::abs(finite_hilbert(inv_w, t, cfg)); });
  run_check("T(w)(t) = i t", [&](double t) {
    return std::abs(finite_hilbert(w_fn, t, cfg) - Complex(0.0, t));
  });
  run_check("T(ix/w) = 1", [&](double t) {
    return std::abs(finite_hilbert(ixw, t, cfg) - Complex(1.0, 0.0));
  });

  // Right-identity of the pseudo-inverse on g_lambda, using its closed form.
  const auto pseudo_grid = interior_grid(20, 0.9);
  for (double lambda : {0.0, 0.5}) {
    const Complex lam(lambda, 0.0);
    const Complex z = z_of(lam);
    const Complex denom = lam * lam - 1.0;
    const TransformInput h(
        [=](double x) -> Complex {
          return (lam + Complex(0.0, x / weight_w(x))) * g_lambda(lambda, x) / denom;
        },
        [=](double theta) -> Complex {
          const Complex g = std::exp(z * 2.0 * std::log(std::tan(0.5 * theta)));
          return (lam + Complex(0.0, std::cos(theta) / std::sin(theta))) * g / denom;
        });
    double worst = 0.0;
    for (double t : pseudo_grid) {
      const Complex lhs = lam * h.in_x(t) - finite_hilbert(h, t, cfg);
      worst = std::max(worst, std::abs(lhs - g_lambda(lambda, t)));
    }
    const bool ok = worst <= accept;
    all_ok = all_ok && ok;
    std::ostringstream name;
    name << "(lI - T) R(l) g_l = g_l, l = " << lambda;
    out << (ok ? "pass" : "FAIL") << "  " << name.str() << "  max residual " << worst
        << "\n";
    results.push_back(
        json{{"identity", name.str()}, {"max_residual", worst}, {"pass", ok}});
  }
  return all_ok ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Hilbert transform toolkit: spectral classification, "
               "region geometry and principal-value numerics on (-1,1)"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOptions g;
  app.add_option("--tol", g.tol, "quadrature tolerance (default 1e-8)");
  app.add_option("--max-depth", g.max_depth, "adaptive subdivision cap (default 40)");
  app.add_option("--margin", g.margin, "endpoint margin (default 0.05)");
  app.add_option("--mode", g.mode, "quadrature mode: smooth|chebyshev");
  app.add_option("--config", g.config_path, "key=value config file for quadrature defaults");
  app.add_option("--output", g.output, "output format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* classify_cmd = app.add_subcommand("classify", "fine spectra of T on a space");
  std::string space;
  classify_cmd->add_option("--space", space, "space spec, e.g. lorentz:3,1")->required();

  auto* member_cmd = app.add_subcommand("member", "membership of lambda");
  std::string lambda_text;
  std::optional<double> member_p;
  std::string member_space;
  member_cmd->add_option("--lambda", lambda_text, "complex literal a+bi")->required();
  member_cmd->add_option("--p", member_p, "classify against the region R_p");
  member_cmd->add_option("--space", member_space, "classify against a space's fine spectra");

  auto* eigen_cmd = app.add_subcommand("eigencheck", "eigen-equation residuals for xi_lambda");
  std::string eigen_lambda;
  int eigen_n = 20;
  eigen_cmd->add_option("--lambda", eigen_lambda, "complex literal")->required();
  eigen_cmd->add_option("--n", eigen_n, "grid size (default 20)");

  auto* transform_cmd = app.add_subcommand("transform", "evaluate T(f)");
  std::string transform_f = "one";
  std::optional<double> transform_t;
  int transform_grid = 21;
  transform_cmd->add_option("--f", transform_f, "one|w|invw|ixw|xi:<lambda>")->required();
  transform_cmd->add_option("--t", transform_t, "evaluation point");
  transform_cmd->add_option("--grid", transform_grid, "grid size when --t is absent");

  auto* region_cmd = app.add_subcommand("region", "boundary of R_p as CSV or SVG");
  double region_p = 2.0;
  int region_n = 64;
  std::string region_csv, region_svg;
  region_cmd->add_option("--p", region_p, "region parameter")->required();
  region_cmd->add_option("--n", region_n, "samples per arc (default 64)");
  region_cmd->add_option("--csv", region_csv, "CSV output path ('-' for stdout)");
  region_cmd->add_option("--svg", region_svg, "SVG output path ('-' for stdout)");

  auto* identities_cmd = app.add_subcommand("identities", "closed-form identity suite");

  std::vector<const char*> argv;
  argv.push_back("fht");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const QuadratureConfig cfg = resolve_config(g);
    if (classify_cmd->parsed()) return cmd_classify(out, space, g.output);
    if (member_cmd->parsed()) {
      if (!member_p.has_value() && member_space.empty())
        throw DomainError("member: need --p or --space");
      return cmd_member(out, lambda_text, member_p, member_space, g.output);
    }
    if (eigen_cmd->parsed()) return cmd_eigencheck(out, eigen_lambda, eigen_n, cfg);
    if (transform_cmd->parsed())
      return cmd_transform(out, transform_f, transform_t, transform_grid, cfg, g.output);
    if (region_cmd->parsed()) return cmd_region(out, region_p, region_n, region_csv, region_svg);
    if (identities_cmd->parsed()) return cmd_identities(out, cfg);
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    json j{{"error", "convergence"},
           {"message", e.what()},
           {"best_estimate",
            {{"re", e.estimate().real()}, {"im", e.estimate().imag()}}},
           {"error_bound", e.error_bound()}};
    err << j.dump(2) << "\n";
    return kExitConvergence;
  } catch (const UnsupportedProfileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ProfileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    const std::string what = e.what();
    err << "error: " << what << "\n";
    // Malformed literals are usage errors; out-of-domain values are not.
    return what.find("bad") != std::string::npos ||
                   what.find("unknown") != std::string::npos ||
                   what.find("expected") != std::string::npos
               ? kExitUsage
               : kExitDomain;
  }
}

}  // namespace fht
