#include "darboux/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "darboux/bicycle.hpp"
#include "darboux/connection.hpp"
#include "darboux/curve_io.hpp"
#include "darboux/errors.hpp"
#include "darboux/render.hpp"
#include "darboux/smooth.hpp"
#include "darboux/spectrum.hpp"

namespace darboux::cli {

namespace {

using nlohmann::json;

// Errors from reading input files belong to the I/O exit class even when the
// file parsed but violated a curve invariant.
struct InputError : IoError {
  using IoError::IoError;
};

PolarisedCurve read_curve(const std::string& path) {
  try {
    return load_curve_file(path);
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

CurveDocument read_document(const std::string& path) {
  try {
    return load_document_file(path);
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Quaternion to_quaternion(const std::vector<double>& v) { return {v.at(0), v.at(1), v.at(2), v.at(3)}; }

json quat_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }
json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json diagnostics(const DarbouxResult& r) {
  json d;
  d["mu"] = r.mu;
  d["max_cross_ratio_residual"] = r.max_cross_ratio_residual;
  d["sphere_residual"] = r.sphere_residual ? json(*r.sphere_residual) : json(nullptr);
  d["hit_infinity"] = r.hit_infinity;
  d["closed"] = r.closed;
  d["closure_error"] = finite_or_null(r.closure_error);
  d["vertices"] = r.transform.vertices.size();
  d["periods"] = r.periods;
  if (r.infinity_vertex) d["infinity_vertex"] = *r.infinity_vertex;
  if (r.degenerate_quads) d["degenerate_quads"] = r.degenerate_quads;
  if (r.mu == 0.0) d["note"] = "mu = 0: the Riccati step is a translation and the transform is constant";
  return d;
}

void write_document(const CurveDocument& doc, const std::string& path) {
  if (!path.empty()) save_curve_file(doc, path);
}

void add_curve_option(CLI::App* sub, std::string& path) {
  sub->add_option("-c,--curve", path, "Curve document (JSON)")->required();
}

void add_quaternion_option(CLI::App* sub, const std::string& name, std::vector<double>& v, const std::string& help) {
  sub->add_option(name, v, help)->expected(4)->delimiter(',')->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Darboux transforms and bicycle correspondences of discrete polarised curves", "darboux"};
  app.require_subcommand(1, 1);

  json result;
  std::function<void()> action;
  bool failed_numerically = false;

  // generate ---------------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "Write a curve document");
  gen->require_subcommand(1, 1);
  std::string gen_out;
  int gen_M = 12, gen_p = 2, gen_q = 3;
  TorusRadii radii;
  std::string gen_in;
  const auto emit_curve = [&](const PolarisedCurve& c) {
    if (gen_out.empty()) {
      save_curve(c, out);
      return false;
    }
    save_curve_file(c.to_document(), gen_out);
    result = {{"vertices", c.vertex_count()},
              {"closed", c.closed()},
              {"arclength_polarised", is_arclength_polarised(c, 1e-10)},
              {"output", gen_out}};
    return true;
  };
  bool gen_printed_json = true;
  for (const char* kind : {"circle", "planar-circle", "torus-knot", "from-file"}) {
    auto* k = gen->add_subcommand(kind);
    k->add_option("-o,--output", gen_out, "Output file (stdout when omitted)");
    const std::string name = kind;
    if (name == "from-file") {
      k->add_option("-i,--input", gen_in, "Curve document to validate and rewrite")->required();
    } else {
      k->add_option("-M,--M", gen_M, "Number of vertices")->check(CLI::Range(3, 10000000));
    }
    if (name == "torus-knot") {
      k->add_option("-p,--p", gen_p);
      k->add_option("-q,--q", gen_q);
      k->add_option("--major", radii.major);
      k->add_option("--minor", radii.minor);
    }
    k->callback([&, name] {
      action = [&, name] {
        if (name == "circle") gen_printed_json = emit_curve(make_discrete_circle(gen_M));
        else if (name == "planar-circle") gen_printed_json = emit_curve(make_planar_circle(gen_M));
        else if (name == "torus-knot") gen_printed_json = emit_curve(make_torus_knot(gen_p, gen_q, gen_M, radii));
        else gen_printed_json = emit_curve(read_curve(gen_in));
      };
    });
  }

  // transform --------------------------------------------------------------
  auto* tr = app.add_subcommand("transform", "Darboux transform by Riccati propagation");
  std::string tr_curve, tr_out;
  double tr_mu = 0.0;
  std::vector<double> tr_xhat;
  TransformOptions tr_opts;
  add_curve_option(tr, tr_curve);
  tr->add_option("--mu", tr_mu, "Spectral parameter")->required();
  add_quaternion_option(tr, "--xhat", tr_xhat, "Initial point w,x,y,z");
  tr->add_option("--start", tr_opts.start_vertex, "Start vertex");
  tr->add_option("--periods", tr_opts.periods, "Periods to propagate (closed curves)");
  tr->add_option("--closure-tol", tr_opts.closure_tol, "Relative closure tolerance");
  tr->add_option("-o,--output", tr_out, "Transform document");
  tr->callback([&] {
    action = [&] {
      const PolarisedCurve c = read_curve(tr_curve);
      const DarbouxResult r = darboux_transform(c, tr_mu, to_quaternion(tr_xhat), tr_opts);
      write_document(r.transform, tr_out);
      result = diagnostics(r);
      failed_numerically = r.hit_infinity;
    };
  });

  // monodromy --------------------------------------------------------------
  auto* mo = app.add_subcommand("monodromy", "Monodromy matrix and multipliers");
  std::string mo_curve;
  double mo_mu = 0.0;
  std::size_t mo_base = 0, mo_cover = 1;
  add_curve_option(mo, mo_curve);
  mo->add_option("--mu", mo_mu)->required();
  mo->add_option("--base", mo_base);
  mo->add_option("--cover", mo_cover)->check(CLI::PositiveNumber);
  mo->callback([&] {
    action = [&] {
      const PolarisedCurve c = read_curve(mo_curve);
      const MonodromyMatrix m = monodromy(c, mo_mu, mo_base, mo_cover);
      const MultiplierSpectrum s = multiplier_spectrum(c, mo_mu, mo_base, mo_cover);
      json mults = json::array(), secs = json::array();
      for (std::size_t n = 0; n < s.multipliers.size(); ++n) {
        mults.push_back(complex_json(s.multipliers[n]));
        secs.push_back(json::array({quat_json(s.sections[n].top), quat_json(s.sections[n].bottom)}));
      }
      json mat = json::array();
      for (const auto& q : m.matrix.e) mat.push_back(quat_json(q));
      result = {{"mu", mo_mu},          {"base_vertex", s.base_vertex}, {"cover", s.cover},
                {"matrix", mat},        {"multipliers", mults},         {"sections", secs},
                {"residuals", s.residuals}, {"spread", s.spread},       {"resonant", s.resonant}};
    };
  });

  // resonances -------------------------------------------------------------
  auto* rs = app.add_subcommand("resonances", "Spectral values where the monodromy is a real scalar");
  std::string rs_curve;
  double rs_lo = 0.0, rs_hi = 0.0;
  std::size_t rs_steps = 400, rs_cover = 1;
  add_curve_option(rs, rs_curve);
  rs->add_option("--lo", rs_lo)->required();
  rs->add_option("--hi", rs_hi)->required();
  rs->add_option("--steps", rs_steps, "Grid intervals");
  rs->add_option("--cover", rs_cover)->check(CLI::PositiveNumber);
  rs->callback([&] {
    action = [&] {
      const PolarisedCurve c = read_curve(rs_curve);
      result = {{"lo", rs_lo}, {"hi", rs_hi}, {"cover", rs_cover},
                {"resonances", find_resonances(c, rs_lo, rs_hi, rs_steps, rs_cover)}};
    };
  });

  // closed -----------------------------------------------------------------
  auto* cl = app.add_subcommand("closed", "Closed transforms from monodromy eigen-sections");
  std::string cl_curve, cl_prefix;
  double cl_mu = 0.0, cl_tol = 1e-8;
  std::size_t cl_base = 0, cl_cover = 1, cl_sweep = 0;
  std::uint64_t cl_seed = 0;
  add_curve_option(cl, cl_curve);
  cl->add_option("--mu", cl_mu)->required();
  cl->add_option("--base", cl_base);
  cl->add_option("--cover", cl_cover)->check(CLI::PositiveNumber);
  cl->add_option("--closure-tol", cl_tol);
  auto* sweep_opt = cl->add_option("--sweep", cl_sweep, "Also propagate N random initial points");
  cl->add_option("--seed", cl_seed, "Seed for --sweep")->needs(sweep_opt);
  sweep_opt->needs("--seed");
  cl->add_option("-o,--output-prefix", cl_prefix, "Write PREFIX_<n>.json per eigen-section");
  cl->callback([&] {
    action = [&] {
      const PolarisedCurve c = read_curve(cl_curve);
      const ClosedTransforms ct = closed_transforms(c, cl_mu, cl_base, cl_cover, cl_tol);
      json list = json::array();
      for (std::size_t n = 0; n < ct.transforms.size(); ++n) {
        const auto& t = ct.transforms[n];
        json e;
        e["multiplier"] = complex_json(t.multiplier);
        if (t.result) {
          e["diagnostics"] = diagnostics(*t.result);
          e["xhat0"] = quat_json(t.result->transform.vertices.front());
          if (!cl_prefix.empty()) write_document(t.result->transform, cl_prefix + "_" + std::to_string(n) + ".json");
        } else {
          e["through_infinity"] = true;
        }
        list.push_back(e);
      }
      result = {{"mu", cl_mu},
                {"resonant", ct.spectrum.resonant},
                {"spread", ct.spectrum.spread},
                {"transforms", list}};
      if (cl_sweep > 0) {
        std::mt19937_64 rng(cl_seed);
        std::normal_distribution<double> g;
        TransformOptions opts;
        opts.start_vertex = ct.spectrum.base_vertex;
        opts.periods = cl_cover;
        opts.closure_tol = cl_tol;
        json errs = json::array();
        std::size_t closed = 0;
        for (std::size_t n = 0; n < cl_sweep; ++n) {
          const Quaternion offset{g(rng), g(rng), g(rng), g(rng)};
          const DarbouxResult r = darboux_transform(c, cl_mu, c.vertex(opts.start_vertex) + offset, opts);
          errs.push_back(finite_or_null(r.closure_error));
          closed += r.closed ? 1 : 0;
        }
        result["sweep"] = {{"seed", cl_seed}, {"count", cl_sweep}, {"closed", closed}, {"closure_errors", errs}};
      }
    };
  });

  // bicycle ----------------------------------------------------------------
  auto* bi = app.add_subcommand("bicycle", "Bicycle correspondence of an arc-length polarised curve");
  std::string bi_curve, bi_out;
  double bi_mu = 0.0;
  std::vector<double> bi_dir;
  BicycleOptions bi_opts;
  add_curve_option(bi, bi_curve);
  bi->add_option("--mu", bi_mu)->required();
  add_quaternion_option(bi, "--direction", bi_dir, "Unit direction w,x,y,z of xhat_0 - x_0");
  bi->add_option("--start", bi_opts.start_vertex);
  bi->add_option("--periods", bi_opts.periods);
  bi->add_option("--closure-tol", bi_opts.closure_tol);
  bi->add_option("-o,--output", bi_out);
  bi->callback([&] {
    action = [&] {
      const PolarisedCurve c = read_curve(bi_curve);
      const BicycleResult r = bicycle_transform(c, bi_mu, to_quaternion(bi_dir), bi_opts);
      write_document(r.darboux.transform, bi_out);
      result = diagnostics(r.darboux);
      result["max_length_deviation"] = r.max_length_deviation;
      result["max_edge_deviation"] = r.max_edge_deviation;
      failed_numerically = r.darboux.hit_infinity;
    };
  });

  // circleton --------------------------------------------------------------
  auto* ci = app.add_subcommand("circleton", "Closed bicycle transform of the planar discrete circle");
  int ci_M = 36, ci_k = 1, ci_l = 2;
  double ci_tau = std::numbers::pi;
  std::string ci_out, ci_base_out;
  ci->add_option("-M,--M", ci_M)->check(CLI::Range(3, 10000000));
  ci->add_option("-k,--k", ci_k);
  ci->add_option("-l,--l", ci_l);
  ci->add_option("--tau", ci_tau);
  ci->add_option("-o,--output", ci_out);
  ci->add_option("--base-output", ci_base_out, "Also write the planar circle");
  ci->callback([&] {
    action = [&] {
      const CircletonResult r = discrete_circleton(ci_M, ci_k, ci_l, ci_tau);
      write_document(r.bicycle.darboux.transform, ci_out);
      write_document(make_planar_circle(ci_M).to_document(), ci_base_out);
      result = diagnostics(r.bicycle.darboux);
      result["M"] = ci_M;
      result["k"] = ci_k;
      result["l"] = ci_l;
      result["tau"] = ci_tau;
      result["branch"] = r.branch == CircletonBranch::chi ? "chi" : "c_minus_zero";
      result["max_length_deviation"] = r.bicycle.max_length_deviation;
      result["max_edge_deviation"] = r.bicycle.max_edge_deviation;
      result["propagation_deviation"] = finite_or_null(r.propagation_deviation);
    };
  });

  // render -----------------------------------------------------------------
  auto* re = app.add_subcommand("render", "Draw curve documents as SVG");
  std::vector<std::string> re_inputs;
  std::string re_proj = "auto", re_out;
  re->add_option("inputs", re_inputs, "Curve documents; the first is drawn in black")->required();
  re->add_option("--projection", re_proj, "auto, drop-w|x|y|z, or an axis pair such as yz");
  re->add_option("-o,--output", re_out, "SVG file")->required();
  re->callback([&] {
    action = [&] {
      std::vector<CurveDocument> docs;
      for (const auto& p : re_inputs) docs.push_back(read_document(p));
      const Projection proj = parse_projection(re_proj, docs);
      std::ofstream f(re_out);
      if (!f) throw IoError("cannot open " + re_out);
      write_svg(f, docs, proj);
      if (!f) throw IoError("failed to write " + re_out);
      result = {{"curves", docs.size()}, {"output", re_out}};
    };
  });

  // smooth -----------------------------------------------------------------
  auto* sm = app.add_subcommand("smooth", "RK4 Darboux transform of a smooth curve, as CSV");
  std::string sm_kind = "circle", sm_out;
  double sm_mu = 0.0, sm_t1 = 2.0 * std::numbers::pi;
  std::size_t sm_steps = 2000;
  int sm_p = 2, sm_q = 3;
  std::vector<double> sm_xhat;
  sm->add_option("--kind", sm_kind)->check(CLI::IsMember({"circle", "planar-circle", "torus-knot"}));
  sm->add_option("--mu", sm_mu)->required();
  add_quaternion_option(sm, "--xhat", sm_xhat, "xhat(0) as w,x,y,z");
  sm->add_option("--t1", sm_t1, "End of the interval [0, t1]");
  sm->add_option("--steps", sm_steps)->check(CLI::PositiveNumber);
  sm->add_option("-p,--p", sm_p);
  sm->add_option("-q,--q", sm_q);
  sm->add_option("-o,--output", sm_out, "CSV file")->required();
  sm->callback([&] {
    action = [&] {
      const SmoothCurve c = sm_kind == "circle"          ? smooth_circle()
                            : sm_kind == "planar-circle" ? smooth_planar_circle()
                                                         : smooth_torus_knot(sm_p, sm_q);
      const SmoothTrajectory traj = rk4_darboux(c, sm_mu, to_quaternion(sm_xhat), uniform_grid(0.0, sm_t1, sm_steps));
      std::ofstream f(sm_out);
      if (!f) throw IoError("cannot open " + sm_out);
      write_trajectory_csv(f, traj);
      if (!f) throw IoError("failed to write " + sm_out);
      result = {{"mu", sm_mu}, {"samples", traj.t.size()}, {"blew_up", traj.blew_up}, {"output", sm_out}};
      failed_numerically = traj.blew_up;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    action();
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  if (gen_printed_json) out << result.dump(1) << '\n';
  if (failed_numerically) {
    err << "error: the transform passed through infinity or blew up\n";
    return kNumerical;
  }
  return kOk;
}

}  // namespace darboux::cli
