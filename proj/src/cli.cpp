#include "thetaq/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "thetaq/error.hpp"
#include "thetaq/io.hpp"

namespace thetaq {

namespace {

Json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void error_line(std::ostream& err, std::string_view code, std::string_view category, std::string_view message) {
  err << Json{{"error", code}, {"category", category}, {"message", message}}.dump() << "\n";
}

std::string_view category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::validation: return "validation";
    case ErrorCategory::numerical: return "numerical";
    case ErrorCategory::contract: return "contract";
  }
  return "?";
}

struct Common {
  bool pretty = false;
  unsigned jobs = 1;
  std::string out;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta-lines of plane quartics", "thetaq"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--pretty", common.pretty, "Indent the JSON output");
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", common.out, "Write the result to a file instead of stdout");

  Json result;
  std::string file, file_b, cls = "auto";
  double tol = 0.0, step = 1e-6, radius = 0.1;
  std::uint64_t seed = 1;
  int restarts = 50;
  int d = 4, delta = 0, kappa = 0, tau = 0;

  auto input = [&](CLI::App* sub, const char* what) { sub->add_option("file", file, what)->required(); };
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", seed, "Random seed")->capture_default_str(); };

  auto* theta = app.add_subcommand("theta", "Theta-configuration of a curve");
  input(theta, "Curve file");
  theta->add_option("--tol", tol, "Solver tolerance (default 1e-8)");
  seed_opt(theta);

  auto* pl = app.add_subcommand("pluecker", "Pluecker numbers and theta-line type counts");
  pl->add_option("--d", d, "Degree")->capture_default_str();
  pl->add_option("--delta", delta, "Nodes")->capture_default_str();
  pl->add_option("--kappa", kappa, "Cusps")->capture_default_str();
  pl->add_option("--tau", tau, "Tacnodes")->capture_default_str();

  auto* gc = app.add_subcommand("git-config", "Stability of a 28-line configuration");
  input(gc, "Configuration file");
  gc->add_option("--tol", tol, "Clustering radius (default 1e-6)");

  auto* gq = app.add_subcommand("git-curve", "GIT class of a quartic");
  input(gq, "Curve file");
  gq->add_option("--tol", tol, "Singular point tolerance (default 1e-8)");
  seed_opt(gq);

  auto* inc = app.add_subcommand("incidence", "Concurrence points of a configuration");
  input(inc, "Configuration file");
  inc->add_option("--tol", tol, "Clustering radius (default 1e-6)");

  auto* rc = app.add_subcommand("reconstruct", "Curve from a split or trinodal theta-configuration");
  input(rc, "Configuration file");
  rc->add_option("--tol", tol, "Acceptance tolerance (default 1e-6)");
  rc->add_option("--class", cls, "auto, split or trinodal")->capture_default_str();

  auto* tr = app.add_subcommand("track", "Follow the bitangents along a degenerating family");
  input(tr, "Family file");
  tr->add_option("--tol", tol, "Tracking tolerance (default 1e-8)");
  tr->add_option("--radius", radius, "Assignment radius for the endpoints")->capture_default_str();
  seed_opt(tr);

  auto* mt = app.add_subcommand("match", "Match two configurations");
  mt->add_option("a", file, "First configuration")->required();
  mt->add_option("b", file_b, "Second configuration")->required();
  mt->add_option("--tol", tol, "Matching tolerance (default 1e-6)");

  auto* im = app.add_subcommand("immersion", "Rank of the derivative of the bitangent map");
  input(im, "Curve file");
  im->add_option("--step", step, "Finite difference step")->capture_default_str();
  im->add_option("--tol", tol, "Relative singular value cutoff (default 1e-6)");
  seed_opt(im);

  auto* rg = app.add_subcommand("recognize", "Curve class of a configuration");
  input(rg, "Configuration file");
  rg->add_option("--tol", tol, "Clustering radius (default 1e-6)");

  auto* vf = app.add_subcommand("verify", "Evidence that a curve is determined by its theta-configuration");
  input(vf, "Curve file");
  vf->add_option("--tol", tol, "Acceptance tolerance (default 1e-6)");
  vf->add_option("--restarts", restarts, "Random restarts for smooth curves")->capture_default_str();
  seed_opt(vf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_line(err, "InvalidArguments", "validation", e.what());
    return 2;
  }
  auto tol_or = [&](double def) { return tol > 0.0 ? tol : def; };

  try {
    if (theta->parsed()) {
      CurveFile cf = curve_from_json(read_json(file));
      ThetaOptions opt;
      opt.tol = tol_or(1e-8);
      opt.seed = seed;
      opt.jobs = common.jobs;
      ThetaConfig cfg = cf.components.empty() ? theta_curve(cf.form, opt) : theta_curve(cf.form, cf.components, opt);
      result = config_to_json(cfg);
    } else if (pl->parsed()) {
      if (d < 1 || delta < 0 || kappa < 0 || tau < 0) throw Error(ErrorCode::InvalidInput, "negative invariants");
      SingularityProfile p{delta, kappa, tau};
      result = {{"d", d},
                {"delta", delta},
                {"kappa", kappa},
                {"tau", tau},
                {"m", pluecker_class(d, p)},
                {"f", pluecker_flexes(d, p)},
                {"b", pluecker_bitangents(d, p)},
                {"b0", nullptr},
                {"b1", nullptr},
                {"b2", nullptr}};
      if (d == 4) {
        try {
          ThetaTypeCounts c = theta_type_counts(p);
          result["b0"] = c.b0;
          result["b1"] = c.b1;
          result["b2"] = c.b2;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::OutOfTable) throw;
        }
      }
    } else if (gc->parsed()) {
      result = to_json(git_classify_config(config_from_json(read_json(file)), tol_or(1e-6)));
    } else if (gq->parsed()) {
      CurveFile cf = curve_from_json(read_json(file));
      if (cf.form.degree() != 4) throw Error(ErrorCode::InvalidInput, "git-curve needs a quartic");
      result = {{"class", to_string(quartic_git_class(cf.form, tol_or(1e-8), seed))}};
    } else if (inc->parsed()) {
      result = to_json(incidence(config_from_json(read_json(file)), tol_or(1e-6)));
    } else if (rc->parsed()) {
      ThetaConfig cfg = config_from_json(read_json(file));
      double t = tol_or(1e-6);
      if (cls == "auto") {
        CurveClass c = recognize_class(cfg, t).curve_class;
        if (c != CurveClass::split && c != CurveClass::trinodal)
          throw Error(ErrorCode::UnrecognizedCase,
                      "configuration is recognized as " + std::string(to_string(c)) + "; only split and trinodal "
                      "curves can be reconstructed");
        cls = std::string(to_string(c));
      }
      if (cls == "split")
        result = to_json(reconstruct_split(cfg, t));
      else if (cls == "trinodal")
        result = to_json(reconstruct_trinodal(cfg, t));
      else
        throw Error(ErrorCode::InvalidInput, "--class must be auto, split or trinodal");
    } else if (tr->parsed()) {
      FamilyFile fam = family_from_json(read_json(file));
      TrackOptions opt;
      opt.tol = tol_or(1e-8);
      opt.seed = seed;
      opt.jobs = common.jobs;
      FamilyPath path = track_family(fam.f0, fam.g, fam.t_start, fam.t_end, fam.steps, opt);
      ThetaOptions topt;
      topt.seed = seed;
      topt.jobs = common.jobs;
      CollisionReport rep = limit_multiplicities(path, theta_curve(fam.f0, topt), radius);
      result = {{"path", to_json(path)}, {"report", to_json(rep)}};
    } else if (mt->parsed()) {
      result = to_json(match_configs(config_from_json(read_json(file)), config_from_json(read_json(file_b)),
                                     tol_or(1e-6)));
    } else if (im->parsed()) {
      CurveFile cf = curve_from_json(read_json(file));
      result = to_json(immersion_rank(cf.form, step, tol_or(1e-6), seed, common.jobs));
    } else if (rg->parsed()) {
      result = to_json(recognize_class(config_from_json(read_json(file)), tol_or(1e-6)));
    } else if (vf->parsed()) {
      CurveFile cf = curve_from_json(read_json(file));
      result = to_json(verify_theta_property(cf.form, cf.components, tol_or(1e-6), seed, restarts, common.jobs));
    }
  } catch (const Error& e) {
    error_line(err, error_name(e.code()), category_name(e.category()), e.what());
    return exit_status(e.category());
  } catch (const std::exception& e) {
    error_line(err, "InternalError", "numerical", e.what());
    return 3;
  }

  std::string text = common.pretty ? result.dump(2) : result.dump();
  if (common.out.empty()) {
    out << text << "\n";
  } else {
    std::ofstream f(common.out);
    if (!f) {
      error_line(err, "InvalidInput", "validation", "cannot write '" + common.out + "'");
      return 2;
    }
    f << text << "\n";
  }
  return 0;
}

}  // namespace thetaq
