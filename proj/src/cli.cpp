#include "schlicht/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "schlicht/extremal.hpp"
#include "schlicht/modulus.hpp"
#include "schlicht/plot.hpp"
#include "schlicht/semigroups.hpp"
#include "schlicht/suite.hpp"

namespace schlicht::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Cx complex_flag(const std::string& name, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const Error&) {
    throw UsageError("--" + name + ": cannot parse '" + text + "' as a+bi");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : int(n);
}

}  // namespace

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary distortion toolkit for holomorphic self-maps of the unit disk", "schlicht"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the randomized inequality suite");
  std::string suite = "all", out_path, format = "json";
  int samples = 200, jobs = default_jobs();
  std::uint64_t seed = 0;
  double tol = 0.0;
  verify->add_option("--suite", suite, "all or a comma separated list of families");
  verify->add_option("--samples", samples, "number of random cases")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "random seed")->required();
  verify->add_option("--out", out_path, "report path (default: stdout)");
  verify->add_option("--tol", tol, "override the per-check tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // extremal
  auto* extremal = app.add_subcommand("extremal", "extremal map of the two-point problem");
  double theta = 0.0;
  std::string a_text, ext_format = "text";
  extremal->add_option("--theta", theta, "half opening angle in radians")->required();
  extremal->add_option("--a", a_text, "prescribed value at 0, as a+bi")->required();
  extremal->add_option("--format", ext_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // flow
  auto* flowc = app.add_subcommand("flow", "integrate a semigroup generator");
  std::string gen_text, z0_text, csv_path;
  double t_end = 1.0, flow_tol = 1e-10;
  flowc->add_option("--gen", gen_text, "generator expression")->required();
  flowc->add_option("--z0", z0_text, "initial point a+bi")->required();
  flowc->add_option("--t", t_end, "final time")->required()->check(CLI::NonNegativeNumber);
  flowc->add_option("--tol", flow_tol, "local error tolerance")->check(CLI::PositiveNumber);
  flowc->add_option("--out", csv_path, "trajectory CSV path");

  // modulus
  auto* modc = app.add_subcommand("modulus", "reduced moduli and grid extremal lengths");
  std::string kind, xi_text = "1";
  double a0 = 0.0, mtheta = kPi / 2, width = 1.0, height = 1.0, r_in = 0.5, r_out = 1.0;
  int n = 64;
  modc->add_option("--kind", kind, "closed-d1|closed-d2|rectangle|annulus|slit-disk|digon-d1|digon-d2")
      ->required()
      ->check(CLI::IsMember({"closed-d1", "closed-d2", "rectangle", "annulus", "slit-disk",
                             "digon-d1", "digon-d2"}));
  modc->add_option("--a0", a0, "slit endpoint");
  modc->add_option("--theta", mtheta, "vertex angle parameter in radians");
  modc->add_option("--width", width, "rectangle plate distance");
  modc->add_option("--height", height, "rectangle plate length");
  modc->add_option("--r", r_in, "annulus inner radius");
  modc->add_option("--R", r_out, "annulus outer radius");
  modc->add_option("--n", n, "grid resolution");
  modc->add_option("--xi", xi_text, "slit direction, unimodular a+bi");

  // plot
  auto* plot = app.add_subcommand("plot", "draw the regions U1, U2, U3 as SVG");
  double ptheta = 0.0;
  std::string svg_path;
  plot->add_option("--theta", ptheta, "half opening angle in radians")->required();
  plot->add_option("--out", svg_path, "SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "schlicht: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify) {
      if (const char* env = std::getenv("SCHLICHT_JOBS")) {
        try {
          jobs = std::stoi(env);
        } catch (const std::exception&) {
          throw UsageError("SCHLICHT_JOBS must be a positive integer");
        }
        if (jobs < 1) throw UsageError("SCHLICHT_JOBS must be a positive integer");
      }
      SuiteConfig cfg;
      cfg.seed = seed;
      cfg.n_cases = samples;
      cfg.tol = tol;
      cfg.jobs = jobs;
      if (suite != "all") cfg.which = split(suite);
      SuiteResult res = run_suite(cfg);
      std::string text;
      if (format == "json") {
        text = reports_to_json(res.reports, res.summary);
      } else {
        std::ostringstream s;
        for (const auto& r : res.reports)
          if (!r.pass) s << (r.advisory ? "ADVISORY " : "FAIL ") << r.name << " " << r.map << " margin "
                         << format_real(r.margin) << "\n";
        s << "total " << res.summary.total << " passed " << res.summary.passed << " failed "
          << res.summary.failed << " skipped " << res.summary.skipped << " advisory_flagged "
          << res.summary.advisory_flagged << "\n";
        text = s.str();
      }
      if (out_path.empty())
        out << text;
      else
        write_file(out_path, text);
      return res.summary.failed == 0 ? 0 : 1;
    }
    if (*extremal) {
      ExtremalConfig cfg = main_extremal(complex_flag("a", a_text), theta);
      if (ext_format == "json") {
        nlohmann::ordered_json j;
        j["region"] = region_name(cfg.region);
        j["case"] = case_name(cfg.which);
        j["phi"] = cfg.phi_cap;
        j["t0"] = cfg.t0;
        j["bound"] = cfg.bound;
        j["extremal"] = to_text(cfg.extremal);
        out << j.dump(1) << "\n";
      } else {
        out << "region " << region_name(cfg.region) << "\n"
            << "case " << case_name(cfg.which) << "\n"
            << "phi " << format_real(cfg.phi_cap) << "\n"
            << "t0 " << format_real(cfg.t0) << "\n"
            << "bound " << format_real(cfg.bound) << "\n"
            << "extremal " << to_text(cfg.extremal) << "\n";
      }
      return 0;
    }
    if (*flowc) {
      Generator g = parse_generator(gen_text);
      std::vector<TrajectoryRow> rows;
      FlowResult r = flow(g, complex_flag("z0", z0_text), t_end, flow_tol, &rows);
      if (!csv_path.empty()) write_file(csv_path, trajectory_csv(rows));
      out << "z(t) " << format_complex(r.zt) << "\n"
          << "steps " << r.steps << "\n"
          << "est_error " << format_real(r.est_error) << "\n";
      return 0;
    }
    if (*modc) {
      ModulusResult m{};
      if (kind == "closed-d1") m = reduced_modulus_closed(DigonFamily::D1, a0, mtheta);
      else if (kind == "closed-d2") m = reduced_modulus_closed(DigonFamily::D2, a0, mtheta);
      else if (kind == "rectangle") m = grid_modulus(Rectangle{width, height}, n);
      else if (kind == "annulus") m = grid_modulus(Annulus{r_in, r_out}, n);
      else if (kind == "slit-disk") m = reduced_modulus_numeric(slit_disk_spec(complex_flag("xi", xi_text)));
      else if (kind == "digon-d1") m = reduced_modulus_numeric(d1_spec(a0, mtheta));
      else m = reduced_modulus_numeric(d2_spec(a0, mtheta));
      out << "value " << format_real(m.value) << "\n"
          << "source " << source_name(m.source) << "\n"
          << "est_error " << format_real(m.est_error) << "\n";
      return 0;
    }
    if (*plot) {
      render_domains(ptheta, svg_path);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "schlicht: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "schlicht: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::DomainError:
      case ErrorKind::ParseError:
      case ErrorKind::NotAGenerator: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    err << "schlicht: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace schlicht::cli
