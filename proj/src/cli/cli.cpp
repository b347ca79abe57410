#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gkmn/bifurcation.hpp"
#include "gkmn/elliptic.hpp"
#include "gkmn/errors.hpp"
#include "gkmn/portrait.hpp"
#include "gkmn/solutions.hpp"
#include "gkmn/verify.hpp"
#include "gkmn/wavesystems.hpp"

namespace gkmn::cli {

namespace {

namespace ws = gkmn::wavesystems;
using nlohmann::ordered_json;
using solutions::Family;
using solutions::SweepEntry;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& content) {
  if (path == "-" || path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << content;
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// --- config file merging: values become options injected right after the
// subcommand, so explicit command-line flags (parsed later) win.

std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config requires a file path");
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      ++i;
    }
  }
  if (path.empty()) return args;
  if (args.empty() || args[0].empty() || args[0][0] == '-')
    throw ConfigError("--config requires a subcommand");

  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file: " + path);
  ordered_json cfg = ordered_json::parse(f, nullptr, false);
  if (cfg.is_discarded() || !cfg.is_object())
    throw ConfigError("config file must contain a JSON object: " + path);

  std::vector<std::string> injected;
  for (const auto& [key, val] : cfg.items()) {
    if (val.is_boolean()) {
      if (val.get<bool>()) injected.push_back("--" + key);
    } else if (val.is_array()) {
      for (const auto& el : val)
        injected.push_back("--" + key + "=" +
                           (el.is_string() ? el.get<std::string>() : el.dump()));
    } else if (val.is_string()) {
      injected.push_back("--" + key + "=" + val.get<std::string>());
    } else {
      injected.push_back("--" + key + "=" + val.dump());
    }
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

// --- coefficient groups ---

struct SysOpts {
  double A = 0, B = 0;
  double a1 = 0, a2 = 0, a3 = 0;
  double a = 0, b = 0, m = 0;
  double kappa = 0, omega = 0, r = 0, theta = 0;
  double c = 0, mu = 0, e = 0;
  CLI::Option *oA = nullptr, *oB = nullptr;
  CLI::Option *oa1 = nullptr, *oa2 = nullptr, *oa3 = nullptr;
  CLI::Option *oa = nullptr, *ob = nullptr, *om = nullptr;
  CLI::Option *okappa = nullptr, *oomega = nullptr, *orr = nullptr;
  CLI::Option *oc = nullptr, *omu = nullptr, *oe = nullptr;

  void add(CLI::App* app) {
    auto opt = [app](const char* name, double& var, const char* desc) {
      return app->add_option(name, var, desc)
          ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    };
    oA = opt("--A", A, "direct Type 1 coefficient A of p'' = A p - 2 B p^3");
    oB = opt("--B", B, "direct Type 1 coefficient B");
    oa1 = opt("--alpha1", a1, "direct Type 2 coefficient alpha1");
    oa2 = opt("--alpha2", a2, "direct Type 2 coefficient alpha2");
    oa3 = opt("--alpha3", a3, "direct Type 2 coefficient alpha3");
    oa = opt("--a", a, "equation dispersion coefficient");
    ob = opt("--b", b, "equation self-phase-modulation coefficient");
    om = opt("--m", m, "transverse slope of xi = x + m y - c t");
    okappa = opt("--kappa", kappa, "Type 1 phase wavenumber in x");
    oomega = opt("--omega", omega, "Type 1 phase wavenumber in y");
    orr = opt("--r", r, "Type 1 phase frequency");
    opt("--theta", theta, "Type 1 constant phase offset");
    oc = opt("--c", c, "Type 2 wave speed");
    omu = opt("--mu", mu, "Type 2 frequency");
    oe = opt("--e", e, "Type 2 phase integration constant");
  }
};

bool any_set(std::initializer_list<CLI::Option*> opts) {
  for (auto* o : opts)
    if (o->count() > 0) return true;
  return false;
}

void require_all(std::initializer_list<CLI::Option*> opts, const char* what) {
  for (auto* o : opts)
    if (o->count() == 0)
      throw ConfigError(std::string("incomplete ") + what + ": missing " + o->get_name());
}

void forbid(std::initializer_list<CLI::Option*> opts, const char* why) {
  for (auto* o : opts)
    if (o->count() > 0)
      throw ConfigError(o->get_name() + std::string(" does not apply here (") + why + ")");
}

struct Resolved1 {
  ws::SystemCoefficients s;
  ws::EquationParams eq;
  ws::Type1WaveParams wave;
};

struct Resolved2 {
  ws::AlphaCoefficients al;
  ws::EquationParams eq;
  ws::Type2WaveParams wave;
};

std::optional<Resolved1> resolve_type1(const SysOpts& o, bool allow_none) {
  forbid({o.oa1, o.oa2, o.oa3, o.oc, o.omu, o.oe}, "Type 1 selected");
  const bool direct = any_set({o.oA, o.oB});
  const bool phys = any_set({o.oa, o.ob, o.om, o.okappa, o.oomega, o.orr});
  if (direct && phys)
    throw ConfigError("give either --A/--B or physical parameters, not both");
  Resolved1 res;
  if (direct) {
    require_all({o.oA, o.oB}, "direct coefficients");
    res.s = {o.A, o.B};
    solutions::embed_type1(res.s, res.eq, res.wave);
    return res;
  }
  if (phys) {
    require_all({o.oa, o.ob, o.om, o.okappa, o.oomega, o.orr}, "physical parameters");
    res.eq = {o.a, o.b};
    res.wave = {o.m, o.kappa, o.omega, o.r, o.theta};
    res.s = ws::derive_system1(res.eq, res.wave);
    return res;
  }
  if (allow_none) return std::nullopt;
  throw ConfigError(
      "system required: --A/--B or --a/--b/--m/--kappa/--omega/--r");
}

std::optional<Resolved2> resolve_type2(const SysOpts& o, bool allow_none) {
  forbid({o.oA, o.oB, o.okappa, o.oomega, o.orr}, "Type 2 selected");
  const bool direct = any_set({o.oa1, o.oa2, o.oa3});
  const bool phys = any_set({o.oa, o.ob, o.om, o.oc, o.omu, o.oe});
  if (direct && phys)
    throw ConfigError("give either --alpha1/--alpha2/--alpha3 or physical parameters, not both");
  Resolved2 res;
  if (direct) {
    require_all({o.oa1, o.oa2, o.oa3}, "direct coefficients");
    res.al = {o.a1, o.a2, o.a3};
    solutions::embed_type2(res.al, res.eq, res.wave);
    return res;
  }
  if (phys) {
    require_all({o.oa, o.ob, o.om, o.oc, o.omu, o.oe}, "physical parameters");
    res.eq = {o.a, o.b};
    res.wave = {o.m, o.c, o.mu, o.e};
    res.al = ws::derive_alpha(res.eq, res.wave);
    return res;
  }
  if (allow_none) return std::nullopt;
  throw ConfigError("system required: --alpha1/--alpha2/--alpha3 or --a/--b/--m/--c/--mu/--e");
}

// Build a sweep entry for a family at user coefficients (h required), or the
// frozen default entry when no coefficients were given.
SweepEntry make_entry(Family f, const SysOpts& sys, const CLI::Option* oh, double h) {
  if (solutions::is_type2(f)) {
    auto res = resolve_type2(sys, true);
    if (!res) {
      if (oh->count() > 0)
        throw ConfigError("--h without coefficients: give the system too");
      return solutions::default_sweep_entry(f);
    }
    if (oh->count() == 0) throw ConfigError("custom coefficients require --h");
    SweepEntry e;
    e.family = f;
    e.spec = solutions::make_profile2(f, res->al, h);
    e.eq = res->eq;
    e.wave2 = res->wave;
    e.wave1 = {};
    return e;
  }
  auto res = resolve_type1(sys, true);
  if (!res) {
    if (oh->count() > 0) throw ConfigError("--h without coefficients: give the system too");
    return solutions::default_sweep_entry(f);
  }
  if (oh->count() == 0) throw ConfigError("custom coefficients require --h");
  SweepEntry e;
  e.family = f;
  e.spec = solutions::make_profile1(f, res->s, h);
  e.eq = res->eq;
  e.wave1 = res->wave;
  e.wave2 = {};
  return e;
}

Family parse_family_or_throw(const std::string& tag) {
  const auto f = solutions::parse_family_tag(tag);
  if (!f) throw ConfigError("unknown family tag: " + tag);
  return *f;
}

// --- subcommand payloads ---

ordered_json num_or_inf(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : "-inf";
}

const char* branch_name(bifurcation::Branch b) {
  switch (b) {
    case bifurcation::Branch::Both: return "both";
    case bifurcation::Branch::Upper: return "upper";
    default: return "lower";
  }
}

struct ClassifyCtx {
  int type = 1;
  SysOpts sys;
  double h = 0;
  CLI::Option* oh = nullptr;
  std::string output = "-";
};

int run_classify(const ClassifyCtx& ctx) {
  ordered_json out;
  out["type"] = ctx.type;
  if (ctx.type == 1) {
    const auto res = resolve_type1(ctx.sys, false);
    out["coefficients"] = {{"A", res->s.A}, {"B", res->s.B}};
    out["regime"] = bifurcation::regime_name(bifurcation::classify_type1(res->s));
    ordered_json eqs = ordered_json::array();
    for (const auto& e : bifurcation::equilibria_type1(res->s))
      eqs.push_back({{"u", e.u}, {"kind", bifurcation::kind_name(e.kind)}, {"energy", e.energy}});
    out["equilibria"] = eqs;
    if (ctx.oh->count() > 0) {
      out["level"] = ctx.h;
      ordered_json orbits = ordered_json::array();
      for (const auto& o : bifurcation::orbit_inventory_type1(res->s, ctx.h))
        orbits.push_back({{"class", bifurcation::orbit_name(o.cls)},
                          {"lo", num_or_inf(o.lo)},
                          {"hi", num_or_inf(o.hi)},
                          {"branch", branch_name(o.branch)},
                          {"through_cusp", o.through_cusp}});
      out["orbits"] = orbits;
    }
  } else if (ctx.type == 2) {
    const auto res = resolve_type2(ctx.sys, false);
    out["coefficients"] = {{"alpha1", res->al.alpha1},
                           {"alpha2", res->al.alpha2},
                           {"alpha3", res->al.alpha3}};
    out["regime"] = bifurcation::regime_name(bifurcation::classify_type2(res->al));
    ordered_json eqs = ordered_json::array();
    for (const auto& e : bifurcation::equilibria_type2(res->al))
      eqs.push_back({{"u", e.u}, {"kind", bifurcation::kind_name(e.kind)}, {"energy", e.energy}});
    out["equilibria"] = eqs;
    if (ctx.oh->count() > 0) {
      out["level"] = ctx.h;
      ordered_json orbits = ordered_json::array();
      for (const auto& o : bifurcation::orbit_inventory_type2(res->al, ctx.h))
        orbits.push_back({{"class", bifurcation::orbit_name(o.cls)},
                          {"lo", num_or_inf(o.lo)},
                          {"hi", num_or_inf(o.hi)},
                          {"branch", branch_name(o.branch)},
                          {"through_cusp", o.through_cusp}});
      out["orbits"] = orbits;
    }
  } else {
    throw ConfigError("--type must be 1 or 2");
  }
  write_text(ctx.output, out.dump(2) + "\n");
  return 0;
}

struct SolveCtx {
  std::string family;
  bool all = false;
  SysOpts sys;
  double h = 0;
  CLI::Option* oh = nullptr;
  int samples = 400;
  std::string output = "-";
  bool wave = false;
  double x0 = 0, y0 = 0, t0 = 0, span = 0.5;
  int n = 5;
};

std::string profile_csv(const SweepEntry& e, int samples) {
  const auto [lo, hi] = verify::sample_window(e.spec);
  const bool t2 = solutions::is_type2(e.family);
  std::string s = "xi,amplitude,derivative,energy\n";
  for (int i = 0; i < samples; ++i) {
    const double xi = lo + (i + 0.5) * (hi - lo) / samples;
    try {
      const double p = solutions::eval_amplitude(e.spec, xi);
      const double d = solutions::eval_amplitude_derivative(e.spec, xi);
      const double en = t2 ? ws::energy2(e.spec.alpha, p, d) : ws::energy1(e.spec.sys, p, d);
      s += fmt(xi) + "," + fmt(p) + "," + fmt(d) + "," + fmt(en) + "\n";
    } catch (const SingularityError&) {
      continue;  // pole hit exactly: the open interval excludes it
    }
  }
  return s;
}

std::string wave_csv(const SweepEntry& e, double x0, double y0, double t0, double span, int n) {
  const bool t2 = solutions::is_type2(e.family);
  std::string s = "x,y,t,re_q,im_q,abs_q\n";
  const int steps = std::max(1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double x = x0 + span * i / steps;
        const double y = y0 + span * j / steps;
        const double t = t0 + span * k / steps;
        const std::complex<double> q =
            t2 ? solutions::assemble_type2(e.spec, e.eq, e.wave2, x, y, t)
               : solutions::assemble_type1(e.spec, e.eq, e.wave1, x, y, t);
        s += fmt(x) + "," + fmt(y) + "," + fmt(t) + "," + fmt(q.real()) + "," + fmt(q.imag()) +
             "," + fmt(std::abs(q)) + "\n";
      }
  return s;
}

int run_solve(const SolveCtx& ctx) {
  if (ctx.all) {
    if (!ctx.family.empty()) throw ConfigError("--all excludes --family");
    if (any_set({ctx.sys.oA, ctx.sys.oB, ctx.sys.oa1, ctx.sys.oa, ctx.sys.oc}))
      throw ConfigError("--all runs the fixed demonstration sweep; drop the coefficients");
    if (ctx.output == "-" || ctx.output.empty())
      throw ConfigError("--all requires --output DIRECTORY");
    std::error_code ec;
    std::filesystem::create_directories(ctx.output, ec);
    if (ec) throw IoError("cannot create directory: " + ctx.output);
    for (const auto& e : solutions::default_sweep()) {
      const std::string path =
          (std::filesystem::path(ctx.output) / (solutions::family_tag(e.family) + ".csv"))
              .string();
      write_text(path, profile_csv(e, ctx.samples));
    }
    return 0;
  }
  if (ctx.family.empty()) throw ConfigError("--family TAG (or --all) is required");
  const Family f = parse_family_or_throw(ctx.family);
  const SweepEntry e = make_entry(f, ctx.sys, ctx.oh, ctx.h);
  if (ctx.wave)
    write_text(ctx.output, wave_csv(e, ctx.x0, ctx.y0, ctx.t0, ctx.span, ctx.n));
  else
    write_text(ctx.output, profile_csv(e, ctx.samples));
  return 0;
}

struct VerifyCtx {
  std::string family;
  bool all = false;
  bool phases = false;
  bool strict = false;
  SysOpts sys;
  double h = 0;
  CLI::Option* oh = nullptr;
  std::string output = "-";
};

int run_verify(const VerifyCtx& ctx) {
  std::vector<verify::FamilyReport> fams;
  std::vector<verify::PhaseReport> phases;
  if (ctx.all) {
    if (!ctx.family.empty()) throw ConfigError("--all excludes --family");
    fams = verify::verify_all();
    phases = verify::verify_phases();
  } else {
    if (ctx.family.empty()) throw ConfigError("--family TAG (or --all) is required");
    const Family f = parse_family_or_throw(ctx.family);
    const SweepEntry e = make_entry(f, ctx.sys, ctx.oh, ctx.h);
    fams.push_back(verify::verify_family(e));
    if (ctx.phases && solutions::has_closed_phase(f)) phases.push_back(verify::verify_phase(e));
  }

  ordered_json out;
  out["families"] = ordered_json::parse(verify::to_json(fams));
  if (ctx.all || ctx.phases) out["phases"] = ordered_json::parse(verify::to_json(phases));
  write_text(ctx.output, out.dump(2) + "\n");

  bool fail = false, nonpass = false;
  for (const auto& r : fams) {
    fail = fail || r.verdict == "Fail";
    nonpass = nonpass || r.verdict != "Pass";
  }
  for (const auto& r : phases) nonpass = nonpass || r.verdict != "Pass";
  if (fail || (ctx.strict && nonpass)) return 5;
  return 0;
}

struct PortraitCtx {
  int type = 1;
  SysOpts sys;
  std::vector<double> levels;
  double umin = -3, umax = 3, ymin = -3, ymax = 3, band = 0.02;
  int grid = 512;
  std::string svg, csv;
};

int run_portrait(const PortraitCtx& ctx) {
  portrait::PortraitOptions opt;
  opt.u_min = ctx.umin;
  opt.u_max = ctx.umax;
  opt.y_min = ctx.ymin;
  opt.y_max = ctx.ymax;
  opt.grid = ctx.grid;
  opt.levels = ctx.levels;
  opt.band = ctx.band;
  if (opt.u_min >= opt.u_max || opt.y_min >= opt.y_max)
    throw ConfigError("portrait box is empty: check --umin/--umax/--ymin/--ymax");

  portrait::Portrait p;
  if (ctx.type == 1) {
    const auto res = resolve_type1(ctx.sys, false);
    p = portrait::make_portrait_type1(res->s, opt);
  } else if (ctx.type == 2) {
    const auto res = resolve_type2(ctx.sys, false);
    p = portrait::make_portrait_type2(res->al, opt);
  } else {
    throw ConfigError("--type must be 1 or 2");
  }

  if (ctx.svg.empty() && ctx.csv.empty()) {
    write_text("-", portrait::to_svg(p, opt));
    return 0;
  }
  if (!ctx.svg.empty()) write_text(ctx.svg, portrait::to_svg(p, opt));
  if (!ctx.csv.empty()) write_text(ctx.csv, portrait::to_csv(p));
  return 0;
}

struct EllipticCtx {
  std::string fn;
  double k2 = 0, phi = 0, u = 0, n = 0;
  std::string output = "-";
};

int run_elliptic(const EllipticCtx& ctx) {
  namespace el = gkmn::elliptic;
  double v;
  if (ctx.fn == "K")
    v = el::complete_K(ctx.k2);
  else if (ctx.fn == "E")
    v = el::complete_E(ctx.k2);
  else if (ctx.fn == "F")
    v = el::incomplete_F(ctx.phi, ctx.k2);
  else if (ctx.fn == "Einc")
    v = el::incomplete_E(ctx.phi, ctx.k2);
  else if (ctx.fn == "Pi")
    v = el::incomplete_Pi(ctx.phi, ctx.n, ctx.k2);
  else if (ctx.fn == "sn")
    v = el::jacobi_sn(ctx.u, ctx.k2);
  else if (ctx.fn == "cn")
    v = el::jacobi_cn(ctx.u, ctx.k2);
  else if (ctx.fn == "dn")
    v = el::jacobi_dn(ctx.u, ctx.k2);
  else if (ctx.fn == "am")
    v = el::jacobi(ctx.u, ctx.k2).am;
  else if (ctx.fn == "epsilon")
    v = el::jacobi_epsilon(ctx.u, ctx.k2);
  else
    throw ConfigError("unknown --function (use K,E,F,Einc,Pi,sn,cn,dn,am,epsilon)");
  write_text(ctx.output, fmt(v) + "\n");
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  CLI::App app{
      "Traveling-wave solutions of the (2+1)-dimensional Kundu-Mukherjee-Naskar equation: "
      "bifurcation classification, the closed-form solution catalog, independent "
      "verification, and phase portraits"};
  // "--h" (an energy level) is a real option below; keep help on --help only.
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  ClassifyCtx ccx;
  SolveCtx scx;
  VerifyCtx vcx;
  PortraitCtx pcx;
  EllipticCtx ecx;
  int rc = 0;

  auto* classify = app.add_subcommand("classify", "Classify a parameter regime");
  classify->set_help_flag("--help", "print help and exit");
  classify->add_option("--type", ccx.type, "reduction type (1 or 2)")->required();
  ccx.sys.add(classify);
  ccx.oh = classify->add_option("--h", ccx.h, "energy level for the orbit inventory");
  classify->add_option("--output", ccx.output, "output path ('-' = stdout)");
  classify->callback([&] { rc = run_classify(ccx); });

  auto* solve = app.add_subcommand("solve", "Evaluate a closed-form solution family");
  solve->set_help_flag("--help", "print help and exit");
  solve->add_option("--family", scx.family, "family tag, e.g. p_b1, phi_u4");
  solve->add_flag("--all", scx.all, "run the whole fixed demonstration sweep");
  scx.sys.add(solve);
  scx.oh = solve->add_option("--h", scx.h, "energy level (with custom coefficients)");
  solve->add_option("--samples", scx.samples, "profile sample count")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  solve->add_option("--output", scx.output, "output path or (with --all) directory");
  solve->add_flag("--wave", scx.wave, "emit q(x,y,t) on a cube instead of the profile");
  solve->add_option("--x0", scx.x0, "wave cube corner x");
  solve->add_option("--y0", scx.y0, "wave cube corner y");
  solve->add_option("--t0", scx.t0, "wave cube corner t");
  solve->add_option("--span", scx.span, "wave cube side length");
  solve->add_option("--n", scx.n, "wave cube points per axis");
  solve->callback([&] { rc = run_solve(scx); });

  auto* verify_cmd = app.add_subcommand("verify", "Independently verify solution families");
  verify_cmd->set_help_flag("--help", "print help and exit");
  verify_cmd->add_option("--family", vcx.family, "family tag");
  verify_cmd->add_flag("--all", vcx.all, "verify all 40 families and the 8 printed phases");
  verify_cmd->add_flag("--phases", vcx.phases, "include the printed-phase cross-check");
  verify_cmd->add_flag("--strict", vcx.strict,
                       "treat as-printed discrepancies as failures (exit 5)");
  vcx.sys.add(verify_cmd);
  vcx.oh = verify_cmd->add_option("--h", vcx.h, "energy level (with custom coefficients)");
  verify_cmd->add_option("--output", vcx.output, "report path ('-' = stdout)");
  verify_cmd->callback([&] { rc = run_verify(vcx); });

  auto* portrait_cmd = app.add_subcommand("portrait", "Render a phase portrait");
  portrait_cmd->set_help_flag("--help", "print help and exit");
  portrait_cmd->add_option("--type", pcx.type, "reduction type (1 or 2)")->required();
  pcx.sys.add(portrait_cmd);
  portrait_cmd->add_option("--levels", pcx.levels, "energy levels (default: auto)");
  portrait_cmd->add_option("--umin", pcx.umin, "box: minimum amplitude");
  portrait_cmd->add_option("--umax", pcx.umax, "box: maximum amplitude");
  portrait_cmd->add_option("--ymin", pcx.ymin, "box: minimum derivative");
  portrait_cmd->add_option("--ymax", pcx.ymax, "box: maximum derivative");
  portrait_cmd->add_option("--grid", pcx.grid, "marching-squares cells per side");
  portrait_cmd->add_option("--band", pcx.band, "Type 2 singular-band half-width");
  portrait_cmd->add_option("--svg", pcx.svg, "SVG output path");
  portrait_cmd->add_option("--csv", pcx.csv, "CSV output path");
  portrait_cmd->callback([&] { rc = run_portrait(pcx); });

  auto* elliptic_cmd = app.add_subcommand("elliptic", "Evaluate an elliptic kernel function");
  elliptic_cmd->set_help_flag("--help", "print help and exit");
  elliptic_cmd->add_option("--function", ecx.fn, "K,E,F,Einc,Pi,sn,cn,dn,am,epsilon")
      ->required();
  elliptic_cmd->add_option("--k2", ecx.k2, "squared modulus k^2");
  elliptic_cmd->add_option("--phi", ecx.phi, "Jacobi amplitude argument");
  elliptic_cmd->add_option("--u", ecx.u, "Jacobi function argument");
  elliptic_cmd->add_option("--n", ecx.n, "characteristic of Pi");
  elliptic_cmd->add_option("--output", ecx.output, "output path ('-' = stdout)");
  elliptic_cmd->callback([&] { rc = run_elliptic(ecx); });

  try {
    args = merge_config(std::move(args));
    std::vector<const char*> cargv;
    cargv.push_back("gkmn");
    for (const auto& s : args) cargv.push_back(s.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());
    return rc;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const OutOfScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gkmn::cli
