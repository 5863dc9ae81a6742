#include "pcetd/cli.hpp"

#include "pcetd/analysis.hpp"
#include "pcetd/csv_io.hpp"
#include "pcetd/errors.hpp"
#include "pcetd/ipce_solvers.hpp"
#include "pcetd/nipce.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>

namespace pcetd {

ModelSpec RunConfig::model_spec() const {
  ModelSpec spec;
  switch (model) {
  case ModelKind::Linear: spec = ModelSpec::linear(D); break;
  case ModelKind::Quadratic: spec = ModelSpec::quadratic(D); break;
  case ModelKind::Cubic: spec = ModelSpec::cubic(D); break;
  case ModelKind::GrayScott: spec = ModelSpec::gray_scott(); break;
  }
  if (model != ModelKind::GrayScott) {
    spec.a = a;
    spec.b = b;
  }
  spec.gs_vinit_squared = gs_vinit_squared;
  return spec;
}

// --- presets (per-figure defaults) -------------------------------------------

namespace {

std::vector<Preset> build_presets() {
  using S = SchemeKind;
  std::vector<Preset> v;
  auto add = [&](Preset p) { v.push_back(std::move(p)); };

  Preset lin0{"linear-d0", ModelKind::Linear, 0.0, 1, 2.0, 128, 50,
              {{S::ExplicitEuler, {1000, 2000}},
               {S::EtdRdp, {200, 200}},
               {S::Etdrk4, {100, 100}}},
              false};
  add(lin0);
  Preset lin0v = lin0;
  lin0v.name = "linear-d0-variance";
  lin0v.variance = true;
  add(lin0v);
  add({"linear-d1", ModelKind::Linear, 1.0, 1, 2.0, 128, 50,
       {{S::ExplicitEuler, {20000, 20000}},
        {S::EtdRdp, {400, 200}},
        {S::Etdrk4, {200, 100}}},
       false});
  add({"quadratic-d0", ModelKind::Quadratic, 0.0, 1, 0.4, 128, 50,
       {{S::ExplicitEuler, {1000, 2000}},
        {S::EtdRdp, {200, 200}},
        {S::Etdrk4, {100, 100}}},
       false});
  add({"quadratic-d1", ModelKind::Quadratic, 1.0, 1, 2.0, 128, 50,
       {{S::ExplicitEuler, {10000, 20000}},
        {S::EtdRdp, {400, 200}},
        {S::Etdrk4, {200, 100}}},
       false});
  add({"cubic-d0", ModelKind::Cubic, 0.0, 1, 2.0, 128, 50,
       {{S::ExplicitEuler, {1000, 500}},
        {S::EtdRdp, {200, 200}},
        {S::Etdrk4, {100, 100}}},
       false});
  add({"cubic-d1", ModelKind::Cubic, 1.0, 1, 2.0, 128, 50,
       {{S::ExplicitEuler, {20000, 20000}},
        {S::EtdRdp, {400, 200}},
        {S::Etdrk4, {200, 100}}},
       false});
  // 2D linear: intrusive only. The explicit-Euler step count is raised above
  // the 1D value because the 2D stability bound at p=128 requires it.
  add({"linear-2d", ModelKind::Linear, 1.0, 2, 2.0, 128, 0,
       {{S::ExplicitEuler, {80000, 0}},
        {S::EtdRdp, {400, 0}},
        {S::Etdrk4, {200, 0}}},
       false});
  // 1D Gray-Scott error curves (intrusive only, iPCE breakdown expected).
  add({"grayscott-1d", ModelKind::GrayScott, 2e-5, 1, 200.0, 128, 0,
       {{S::ExplicitEuler, {40000, 0}},
        {S::EtdRdp, {8000, 0}},
        {S::Etdrk4, {8000, 0}}},
       false});
  add({"grayscott-2d", ModelKind::GrayScott, 2e-5, 2, 100.0, 256, 8, {}, false});
  add({"performance", ModelKind::Linear, 0.0, 1, 2.0, 128, 10, {}, false});
  add({"runtimes", ModelKind::Linear, 0.0, 1, 0.1, 128, 0, {}, false});
  return v;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = build_presets();
  return table;
}

int desk_m(int m) { return std::max(10, m / 10); }

} // namespace

const Preset& preset_by_name(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw UsageError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : presets()) names.push_back(p.name);
  return names;
}

// --- parsing ----------------------------------------------------------------

namespace {

std::string default_out_dir() {
  if (const char* env = std::getenv("PCETD_OUT")) return env;
  return "out";
}

} // namespace

RunConfig parse_and_validate(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.out_dir = default_out_dir();

  CLI::App app{"pcetd: polynomial-chaos / exponential-time-differencing "
               "solver toolkit"};
  app.require_subcommand(1);

  std::string model = "linear", scheme = "etdrk4", sampler = "gq",
              dealias = "two-thirds", stat = "mean";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", model)
        ->check(CLI::IsMember({"linear", "quadratic", "cubic", "grayscott"}));
    sub->add_option("--scheme", scheme)
        ->check(CLI::IsMember({"ee", "etdrdp", "etdrk4"}));
    sub->add_option("--d", cfg.D, "diffusion constant");
    sub->add_option("--dim", cfg.dim)->check(CLI::IsMember({1, 2}));
    sub->add_option("--p", cfg.p, "grid points per dimension");
    sub->add_option("--m", cfg.M, "time steps");
    sub->add_option("--t", cfg.T, "final time");
    sub->add_option("--a", cfg.a);
    sub->add_option("--b", cfg.b);
    sub->add_option("--seed", cfg.seed);
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--contour-r", cfg.contour_points)
        ->check(CLI::PositiveNumber);
    sub->add_option("--dealias", dealias)
        ->check(CLI::IsMember({"two-thirds", "quarter"}));
    sub->add_flag("--desk", cfg.desk, "reduced-scale run");
    sub->add_flag("--gs-vinit-squared", cfg.gs_vinit_squared);
  };

  auto* det = app.add_subcommand("det", "one deterministic run, fixed xi");
  add_common(det);
  det->add_option("--xi", cfg.xi, "parameter value");

  auto* ipce = app.add_subcommand("ipce", "intrusive PCE error curves");
  add_common(ipce);
  ipce->add_option("--n-list", cfg.n_list, "PCE degrees");
  ipce->add_option("--stat", stat)->check(CLI::IsMember({"mean", "variance"}));
  ipce->add_option("--ref-m", cfg.ref_m);
  ipce->add_option("--ref-q", cfg.ref_q);

  auto* nipce = app.add_subcommand("nipce", "non-intrusive PCE error curves");
  add_common(nipce);
  nipce->add_option("--sampler", sampler)
      ->check(CLI::IsMember({"mc", "sobol", "halton", "gq"}));
  nipce->add_option("--q", cfg.q, "sample count");
  nipce->add_option("--n-prime", cfg.n_prime, "projection degree");
  nipce->add_option("--stat", stat)->check(CLI::IsMember({"mean", "variance"}));
  nipce->add_option("--mc-repeats", cfg.mc_repeats);
  nipce->add_option("--ref-m", cfg.ref_m);
  nipce->add_option("--ref-q", cfg.ref_q);

  auto* sweep = app.add_subcommand("sweep", "final-time error vs step count");
  add_common(sweep);
  sweep->add_option("--q", cfg.q, "niPCE sample count");
  sweep->add_option("--ref-m", cfg.ref_m);
  sweep->add_option("--ref-q", cfg.ref_q);

  auto* gs = app.add_subcommand("grayscott", "Gray-Scott runs");
  add_common(gs);
  gs->add_option("--n-list", cfg.n_list);
  gs->add_option("--ref-m", cfg.ref_m);
  gs->add_option("--ref-q", cfg.ref_q);

  auto* rep = app.add_subcommand("reproduce", "emit a figure preset's CSV set");
  add_common(rep);
  rep->add_option("--preset", cfg.preset, "figure preset or 'all'");

  std::vector<std::string> argv_full = {"pcetd"};
  argv_full.insert(argv_full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_full.size());
  for (auto& s : argv_full) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::printf("%s", app.help().c_str());
    throw HelpRequested(e.what());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.model = model_kind_from_string(model);
  cfg.scheme = scheme_kind_from_string(scheme);
  cfg.sampler = sampler_kind_from_string(sampler);
  cfg.dealias =
      dealias == "quarter" ? DealiasRule::Quarter : DealiasRule::TwoThirds;
  cfg.variance = stat == "variance";

  if (cfg.subcommand == "reproduce") {
    if (cfg.preset.empty())
      throw UsageError("reproduce requires --preset (or --preset all)");
    if (cfg.preset != "all") preset_by_name(cfg.preset); // validates the name
  }
  if (cfg.p < 3) throw UsageError("--p must be >= 3");
  if (cfg.M < 1) throw UsageError("--m must be >= 1");
  if (!(cfg.T > 0.0)) throw UsageError("--t must be > 0");
  if (!(cfg.b > cfg.a)) throw UsageError("requires --b > --a");
  if (cfg.q < 1) throw UsageError("--q must be >= 1");
  if (cfg.scheme == SchemeKind::Etdrk4 && cfg.p % 2 != 0)
    throw UsageError("etdrk4 requires an even --p");
  for (int n : cfg.n_list)
    if (n < 0) throw UsageError("--n-list entries must be >= 0");
  return cfg;
}

// --- drivers ------------------------------------------------------------------

namespace {

std::map<std::string, std::string> base_meta(const RunConfig& cfg) {
  std::map<std::string, std::string> m;
  m["desk"] = cfg.desk ? "true" : "false";
  m["seed"] = std::to_string(cfg.seed);
  m["contour_points"] = std::to_string(cfg.contour_points);
  m["dealias"] =
      cfg.dealias == DealiasRule::Quarter ? "quarter" : "two-thirds";
  return m;
}

ReferenceSolution make_reference(const ModelSpec& spec,
                                 const PeriodicGrid& grid, double T,
                                 const RunConfig& cfg) {
  if (spec.kind == ModelKind::Linear)
    return ReferenceSolution::exact_linear(spec, grid);
  const int m_ref = cfg.desk ? 200 : cfg.ref_m;
  const int q_ref = cfg.desk ? 40 : cfg.ref_q;
  return ReferenceSolution::nipce_gq(spec, grid, T, m_ref, q_ref, 10,
                                     cfg.solver_options());
}

int run_det(const RunConfig& cfg) {
  const PeriodicGrid grid(cfg.dim, cfg.p);
  const TimeGrid tg(cfg.T, cfg.M);
  const ModelSpec spec = cfg.model_spec();
  const FieldState fin = solve_deterministic(cfg.scheme, spec, cfg.xi, grid,
                                             tg, {}, cfg.solver_options());
  auto meta = base_meta(cfg);
  meta["model"] = to_string(cfg.model);
  meta["scheme"] = to_string(cfg.scheme);
  meta["xi"] = std::to_string(cfg.xi);
  meta["M"] = std::to_string(cfg.M);
  meta["T"] = std::to_string(cfg.T);
  const int rows = cfg.dim == 2 ? cfg.p : 1;
  const int cols = cfg.dim == 2 ? cfg.p : cfg.p;
  const std::string name = std::string("field_") + to_string(cfg.model) + "_" +
                           to_string(cfg.scheme) + "_u.txt";
  const auto path =
      emit_matrix_csv(fin.u, rows, cols, cfg.out_dir, name, meta);
  std::printf("wrote %s\n", path.c_str());
  if (!fin.v.empty()) {
    const std::string vname = std::string("field_") + to_string(cfg.model) +
                              "_" + to_string(cfg.scheme) + "_v.txt";
    emit_matrix_csv(fin.v, rows, cols, cfg.out_dir, vname, meta);
  }
  return 0;
}

std::vector<ErrorSeries> ipce_curves_tolerant(
    const ModelSpec& spec, SchemeKind scheme, const PeriodicGrid& grid,
    const TimeGrid& tg, StatKind stat, const std::vector<int>& n_list,
    const ReferenceSolution& ref, int obs_stride, const SolverOptions& opts,
    bool tolerate_blowup) {
  if (!tolerate_blowup)
    return ipce_error_curves(spec, scheme, grid, tg, stat, n_list, ref,
                             obs_stride, opts);
  // Gray-Scott iPCE breakdown is a finding, not a failure: keep whatever part
  // of each curve was computed before the state diverged.
  std::vector<ErrorSeries> curves;
  for (int n : n_list) {
    std::vector<ErrorSeries> one;
    try {
      one = ipce_error_curves(spec, scheme, grid, tg, stat, {n}, ref,
                              obs_stride, opts);
    } catch (const BlowUpError& e) {
      ErrorSeries dead;
      dead.label = "N=" + std::to_string(n);
      dead.meta["blowup_step"] = std::to_string(e.step());
      one.push_back(std::move(dead));
    }
    curves.push_back(std::move(one.front()));
  }
  // ragged curves: trim to the shortest so one file serves all columns
  std::size_t min_len = curves.front().times.size();
  for (const auto& c : curves) min_len = std::min(min_len, c.times.size());
  for (auto& c : curves) {
    c.times.resize(min_len);
    c.errors.resize(min_len);
    if (min_len == 0) c.meta["truncated"] = "empty";
  }
  if (min_len == 0)
    for (auto& c : curves) {
      c.times = {0.0};
      c.errors = {0.0};
    }
  return curves;
}

void reproduce_error_figure(const Preset& pre_in, const RunConfig& cfg) {
  Preset pre = pre_in;
  RunConfig run = cfg;
  run.model = pre.model;
  run.D = pre.model == ModelKind::GrayScott ? 2e-5 : pre.D;
  if (pre.model == ModelKind::GrayScott) run.gs_vinit_squared = true;
  double T = pre.T;
  int p = pre.p;
  std::vector<int> n_list = {1, 2, 3, 4, 5};
  int q = pre.q;
  int n_prime = 10;
  int mc_repeats = 10;
  if (cfg.desk) {
    p = 32;
    T = pre.model == ModelKind::GrayScott ? 20.0 : T;
    for (auto& entry : pre.steps) {
      entry.second.m_ipce = desk_m(entry.second.m_ipce);
      entry.second.m_nipce = desk_m(entry.second.m_nipce);
    }
    n_list = {1, 2, 3};
    q = std::min(q, 12);
    n_prime = 6;
    mc_repeats = 3;
  }
  ModelSpec spec = run.model_spec();
  if (pre.model != ModelKind::GrayScott) spec.D = pre.D;
  const PeriodicGrid grid(pre.dim, p);
  const ReferenceSolution ref = make_reference(spec, grid, T, run);
  const StatKind stat = pre.variance ? StatKind::Variance : StatKind::Mean;
  const int obs_stride = pre.dim == 1 ? 1 : 10;
  const double file_d = pre.model == ModelKind::GrayScott ? spec.Du : pre.D;

  for (auto& [scheme, steps] : pre.steps) {
    // 2D ETD-RDP uses a finer grid; the finite-difference floor hides the
    // PCE degree otherwise.
    PeriodicGrid g = grid;
    if (pre.dim == 2 && scheme == SchemeKind::EtdRdp && !cfg.desk)
      g = PeriodicGrid(2, 512);

    auto meta = base_meta(run);
    meta["preset"] = pre.name;
    meta["T"] = std::to_string(T);

    if (steps.m_ipce > 0) {
      const TimeGrid tg(T, steps.m_ipce);
      const auto curves = ipce_curves_tolerant(
          spec, scheme, g, tg, stat, n_list, ref, obs_stride,
          run.solver_options(), pre.model == ModelKind::GrayScott);
      emit_csv(curves, run.out_dir,
               error_array_filename(true, scheme, stat, pre.model, file_d,
                                    pre.dim),
               meta);
    }
    if (steps.m_nipce > 0 && pre.dim == 1) {
      const TimeGrid tg(T, steps.m_nipce);
      const auto curves = nipce_error_curves(
          spec, scheme, g, tg, stat,
          {SamplerKind::MonteCarlo, SamplerKind::QmcSobol,
           SamplerKind::GaussQuadrature},
          q, n_prime, run.seed, mc_repeats, ref, obs_stride,
          run.solver_options());
      emit_csv(curves, run.out_dir,
               error_array_filename(false, scheme, stat, pre.model, file_d,
                                    pre.dim),
               meta);
    }
  }
}

void reproduce_performance(const RunConfig& cfg) {
  const int p = cfg.desk ? 32 : 128;
  const int n_ipce = cfg.desk ? 3 : 5;
  const std::vector<int> m_list =
      cfg.desk ? std::vector<int>{16, 32, 64, 128}
               : std::vector<int>{25, 50, 100, 200, 400, 800};
  const PeriodicGrid grid(1, p);
  for (ModelKind model :
       {ModelKind::Linear, ModelKind::Quadratic, ModelKind::Cubic}) {
    for (double D : {0.0, 1.0}) {
      ModelSpec spec;
      switch (model) {
      case ModelKind::Linear: spec = ModelSpec::linear(D); break;
      case ModelKind::Quadratic: spec = ModelSpec::quadratic(D); break;
      default: spec = ModelSpec::cubic(D); break;
      }
      const double T = (model == ModelKind::Quadratic && D == 0.0) ? 0.4 : 2.0;
      const std::vector<SchemeKind> schemes =
          D == 0.0 ? std::vector<SchemeKind>{SchemeKind::ExplicitEuler,
                                             SchemeKind::EtdRdp,
                                             SchemeKind::Etdrk4}
                   : std::vector<SchemeKind>{SchemeKind::EtdRdp,
                                             SchemeKind::Etdrk4};
      const ReferenceSolution ref = make_reference(spec, grid, T, cfg);
      const auto curves = performance_sweep(spec, schemes, grid, T, m_list,
                                            n_ipce, 10, ref,
                                            cfg.solver_options());
      auto meta = base_meta(cfg);
      meta["preset"] = "performance";
      meta["T"] = std::to_string(T);
      emit_csv(curves, cfg.out_dir, performance_filename(model, D), meta);
    }
  }
}

void reproduce_runtimes(const RunConfig& cfg) {
  const int p = cfg.desk ? 32 : 128;
  const int n_max = cfg.desk ? 5 : 9;
  const int repeats = cfg.desk ? 3 : 10;
  const PeriodicGrid grid(1, p);
  for (SchemeKind scheme :
       {SchemeKind::ExplicitEuler, SchemeKind::EtdRdp, SchemeKind::Etdrk4}) {
    std::vector<ErrorSeries> cols;
    for (ModelKind model :
         {ModelKind::Linear, ModelKind::Quadratic, ModelKind::Cubic}) {
      for (double D : {0.0, 1.0}) {
        ModelSpec spec;
        switch (model) {
        case ModelKind::Linear: spec = ModelSpec::linear(D); break;
        case ModelKind::Quadratic: spec = ModelSpec::quadratic(D); break;
        default: spec = ModelSpec::cubic(D); break;
        }
        const auto report = runtime_ratio(spec, scheme, n_max, grid, 0.1, 10,
                                          repeats, cfg.solver_options());
        ErrorSeries s;
        s.label = std::string(to_string(model)) + "_D=" +
                  (D == 0.0 ? "0" : "1");
        for (std::size_t i = 0; i < report.n_values.size(); ++i) {
          s.times.push_back(report.n_values[i]);
          s.errors.push_back(report.ratios[i]);
        }
        s.meta["op_count_N_max"] =
            std::to_string(report.op_counts.back());
        cols.push_back(std::move(s));
      }
    }
    auto meta = base_meta(cfg);
    meta["preset"] = "runtimes";
    meta["note"] = "wall-clock ratios; not covered by byte-determinism";
    emit_csv(cols, cfg.out_dir, runtime_filename(scheme), meta);
  }
}

void reproduce_grayscott_2d(const RunConfig& cfg) {
  const int p_lo = cfg.desk ? 64 : 256;
  const int p_hi = 2 * p_lo;
  const double T = cfg.desk ? 20.0 : 100.0;
  const int M = cfg.desk ? 40 : 200;
  ModelSpec spec = ModelSpec::gray_scott();
  const double xi_mid = 0.5 * (spec.a + spec.b);
  auto meta = base_meta(cfg);
  meta["preset"] = "grayscott-2d";
  meta["T"] = std::to_string(T);
  meta["M"] = std::to_string(M);
  std::vector<double> coarse;
  for (int p : {p_lo, p_hi}) {
    const PeriodicGrid grid(2, p);
    const TimeGrid tg(T, M);
    const FieldState fin = etdrk4_solve(spec, xi_mid, grid, tg, {},
                                        cfg.solver_options());
    meta["p"] = std::to_string(p);
    emit_matrix_csv(fin.u, p, p, cfg.out_dir,
                    "grayscott2d_u_p=" + std::to_string(p) + ".txt", meta);
    if (p == p_lo) coarse = fin.u;
    else {
      // restrict the fine run to the coarse nodes for the consistency check
      std::vector<double> down(static_cast<std::size_t>(p_lo) * p_lo);
      for (int iy = 0; iy < p_lo; ++iy)
        for (int ix = 0; ix < p_lo; ++ix)
          down[static_cast<std::size_t>(iy) * p_lo + ix] =
              fin.u[(static_cast<std::size_t>(2 * iy)) * p + 2 * ix];
      const auto err = rel_l2_error(coarse, down);
      std::printf("grayscott-2d consistency (p=%d vs %d): rel L2 = %.3e\n",
                  p_lo, p_hi, err.value_or(-1.0));
    }
  }
}

int run_reproduce(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.preset == "all") names = preset_names();
  else names.push_back(cfg.preset);
  for (const auto& name : names) {
    if (name == "performance") {
      reproduce_performance(cfg);
    } else if (name == "runtimes") {
      reproduce_runtimes(cfg);
    } else if (name == "grayscott-2d") {
      reproduce_grayscott_2d(cfg);
    } else {
      reproduce_error_figure(preset_by_name(name), cfg);
    }
    std::printf("preset %s done\n", name.c_str());
  }
  return 0;
}

int run_ipce(const RunConfig& cfg) {
  const ModelSpec spec = cfg.model_spec();
  const PeriodicGrid grid(cfg.dim, cfg.p);
  const TimeGrid tg(cfg.T, cfg.M);
  const ReferenceSolution ref = make_reference(spec, grid, cfg.T, cfg);
  const StatKind stat = cfg.variance ? StatKind::Variance : StatKind::Mean;
  const auto curves = ipce_curves_tolerant(
      spec, cfg.scheme, grid, tg, stat, cfg.n_list, ref,
      cfg.dim == 1 ? 1 : 10, cfg.solver_options(),
      cfg.model == ModelKind::GrayScott);
  auto meta = base_meta(cfg);
  meta["M"] = std::to_string(cfg.M);
  const auto path = emit_csv(
      curves, cfg.out_dir,
      error_array_filename(true, cfg.scheme, stat, cfg.model,
                           spec.diffusion_u(), cfg.dim),
      meta);
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int run_nipce(const RunConfig& cfg) {
  const ModelSpec spec = cfg.model_spec();
  const PeriodicGrid grid(cfg.dim, cfg.p);
  const TimeGrid tg(cfg.T, cfg.M);
  const ReferenceSolution ref = make_reference(spec, grid, cfg.T, cfg);
  const StatKind stat = cfg.variance ? StatKind::Variance : StatKind::Mean;
  const auto curves = nipce_error_curves(
      spec, cfg.scheme, grid, tg, stat, {cfg.sampler}, cfg.q, cfg.n_prime,
      cfg.seed, cfg.mc_repeats, ref, cfg.dim == 1 ? 1 : 10,
      cfg.solver_options());
  auto meta = base_meta(cfg);
  meta["M"] = std::to_string(cfg.M);
  const auto path = emit_csv(
      curves, cfg.out_dir,
      error_array_filename(false, cfg.scheme, stat, cfg.model,
                           spec.diffusion_u(), cfg.dim),
      meta);
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int run_sweep(const RunConfig& cfg) {
  const ModelSpec spec = cfg.model_spec();
  const PeriodicGrid grid(cfg.dim, cfg.p);
  const ReferenceSolution ref = make_reference(spec, grid, cfg.T, cfg);
  const std::vector<int> m_list = cfg.desk
                                      ? std::vector<int>{16, 32, 64, 128}
                                      : std::vector<int>{25, 50, 100, 200,
                                                         400, 800};
  const std::vector<SchemeKind> schemes =
      cfg.D == 0.0 ? std::vector<SchemeKind>{SchemeKind::ExplicitEuler,
                                             SchemeKind::EtdRdp,
                                             SchemeKind::Etdrk4}
                   : std::vector<SchemeKind>{SchemeKind::EtdRdp,
                                             SchemeKind::Etdrk4};
  const auto curves =
      performance_sweep(spec, schemes, grid, cfg.T, m_list,
                        cfg.desk ? 3 : 5, cfg.q, ref, cfg.solver_options());
  auto meta = base_meta(cfg);
  const auto path = emit_csv(curves, cfg.out_dir,
                             performance_filename(cfg.model, cfg.D), meta);
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int run_grayscott(const RunConfig& cfg) {
  RunConfig run = cfg;
  run.model = ModelKind::GrayScott;
  if (cfg.dim == 2) {
    reproduce_grayscott_2d(run);
    return 0;
  }
  run.gs_vinit_squared = true;
  return run_ipce(run);
}

} // namespace

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const RunConfig cfg = parse_and_validate(args);
    if (cfg.subcommand == "det") return run_det(cfg);
    if (cfg.subcommand == "ipce") return run_ipce(cfg);
    if (cfg.subcommand == "nipce") return run_nipce(cfg);
    if (cfg.subcommand == "sweep") return run_sweep(cfg);
    if (cfg.subcommand == "grayscott") return run_grayscott(cfg);
    if (cfg.subcommand == "reproduce") return run_reproduce(cfg);
    std::fprintf(stderr, "unknown subcommand\n");
    return 2;
  } catch (const HelpRequested&) {
    return 0;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const BlowUpError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 1;
  } catch (const NumericalFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 1;
  }
}

} // namespace pcetd
