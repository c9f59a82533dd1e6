#include "sf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>

#include "sf/realize.hpp"

namespace sf {

namespace {

int error_exit_code(const std::string& code) {
  static const std::set<std::string> input = {
      "InvalidField", "InvalidRing",  "InvalidConfig", "ParseError",
      "SchemaError",  "InputError",   "NonHomogeneous", "NotInSquareOfMaximalIdeal",
      "NotRegularSequence", "NotFiniteLength", "MixedDegrees", "ExtensionTooLarge",
      "IoError",      "WindowOutOfRange", "BoundTooLow"};
  if (code == "Inconclusive") return 2;
  return input.count(code) ? 3 : 1;
}

struct TaskCtx {
  const Json* task = nullptr;
  CliOptions opt;
  RingSetup RS;
  Params par;
  std::map<std::string, ModulePresentation> modules;

  const ModulePresentation& get_module(const std::string& name) {
    auto it = modules.find(name);
    if (it != modules.end()) return it->second;
    if (name == "k") {
      modules.emplace("k", residue_field_module(RS));
      return modules.at("k");
    }
    fail("SchemaError", "unknown module name: " + name);
  }
};

std::string module_name(const Json& task, const char* key, const char* dflt) {
  if (task.contains(key)) return task.at(key).get<std::string>();
  return dflt;
}

Json params_json(const Params& p) {
  Json j;
  j["D"] = p.D;
  j["w"] = p.w;
  j["e"] = p.emax;
  return j;
}

Json point_json(const RingSetup& RS, const OraclePoint& pt) {
  Field K = Field::extension(RS.Q->field().p(), pt.e);
  Json j;
  j["e"] = pt.e;
  Json alpha = Json::array();
  for (Fe a : pt.alpha) alpha.push_back(K.to_string(a));
  j["alpha"] = alpha;
  j["in_ideal"] = pt.in_ideal;
  j["infinite_pd"] = pt.infinite_pd;
  return j;
}

Json rational_points_json(const RingSetup& RS, const ConeIdeal& cone, uint32_t emax) {
  Json arr = Json::array();
  for (uint32_t e = 1; e <= emax; ++e) {
    Field K = Field::extension(RS.Q->field().p(), e);
    for (const auto& alpha : proj_points(K, uint32_t(RS.c))) {
      if (!cone_contains_point(cone, K, alpha)) continue;
      Json pj;
      pj["e"] = e;
      Json av = Json::array();
      for (Fe a : alpha) av.push_back(K.to_string(a));
      pj["alpha"] = av;
      arr.push_back(pj);
    }
  }
  return arr;
}

uint32_t point_listing_bound(const TaskCtx& ctx) {
  if (ctx.opt.emit_points >= 0) return uint32_t(ctx.opt.emit_points);
  if (ctx.RS.c <= 3 && ctx.RS.Q->field().p() <= 5) return ctx.par.emax;
  return 0;
}

// the support report object, with the oracle sweep when it applies
Json support_json(TaskCtx& ctx, const ModulePresentation& M, const ModulePresentation& N,
                  const SupportResult& S, bool* ok_out) {
  bool oracle_applies =
      ctx.RS.equigenerated && same_presentation(N, residue_field_module(ctx.RS));
  Json j;
  Json pair = Json::array();
  pair.push_back(module_hash(M));
  pair.push_back(module_hash(N));
  j["pair"] = pair;
  Json ideal = Json::array();
  for (const auto& g : S.cone.gens) ideal.push_back(g.to_string());
  j["ideal"] = ideal;
  j["saturated"] = S.cone.saturated;
  j["stabilized"] = S.stabilized;
  bool agree = true;
  Json pts = Json::array();
  if (oracle_applies) {
    auto [points, ag] = oracle_sweep(M, S.cone, ctx.par.emax);
    agree = ag;
    for (const auto& pt : points) pts.push_back(point_json(ctx.RS, pt));
  }
  j["oracle_points_checked"] = pts;
  j["agreement"] = agree;
  uint32_t eb = point_listing_bound(ctx);
  if (eb > 0) j["rational_points"] = rational_points_json(ctx.RS, S.cone, eb);
  if (ok_out) *ok_out = S.stabilized && agree;
  return j;
}

Json cert_json(const std::vector<ConeStep>& cert) {
  Json arr = Json::array();
  for (const auto& s : cert) {
    Json j;
    j["op"] = s.op;
    if (s.op == "cone") j["phi"] = s.phi;
    else j["n"] = s.n;
    arr.push_back(j);
  }
  return arr;
}

// ---- commands ---------------------------------------------------------------

std::pair<int, Json> cmd_check_ring(TaskCtx& ctx) {
  Json r;
  r["valid"] = true;
  r["n"] = ctx.RS.n;
  r["c"] = ctx.RS.c;
  r["dim"] = ctx.RS.dimR;
  Json fd = Json::array();
  for (long d : ctx.RS.fdeg) fd.push_back(d);
  r["f_degrees"] = fd;
  r["equigenerated"] = ctx.RS.equigenerated;
  Json gb = Json::array();
  for (const auto& g : ctx.RS.gb_f.g) {
    std::vector<Poly> col = g.to_column(1);
    gb.push_back(col[0].to_string());
  }
  r["gb"] = gb;
  return {0, r};
}

std::pair<int, Json> cmd_resolve(TaskCtx& ctx) {
  const ModulePresentation& M = ctx.get_module(module_name(*ctx.task, "module", "k"));
  Resolution P = minimal_resolution(M, ctx.par.D);
  Json r;
  r["resolved"] = module_to_json(P.resolved);
  Json betti = Json::array();
  std::vector<std::vector<long>> gb = graded_betti(P);
  for (size_t i = 0; i < gb.size(); ++i) {
    Json row;
    row["index"] = i;
    row["rank"] = gb[i].size();
    Json degs = Json::array();
    for (long d : gb[i]) degs.push_back(d);
    row["degs"] = degs;
    betti.push_back(row);
  }
  r["betti"] = betti;
  r["terminated"] = P.terminated;
  r["minimal"] = true;
  return {0, r};
}

std::pair<int, Json> cmd_ext(TaskCtx& ctx) {
  const ModulePresentation& M = ctx.get_module(module_name(*ctx.task, "module", "k"));
  const ModulePresentation& N = ctx.get_module(module_name(*ctx.task, "module_n", "k"));
  ExtTable T = ext_table(M, N, ctx.par.D);
  Json r;
  Json dims = Json::array();
  for (size_t d : T.dims) dims.push_back(d);
  r["dims"] = dims;
  Json act;
  for (int j = 0; j < ctx.RS.c; ++j) {
    Json per = Json::array();
    for (const auto& m : T.act[size_t(j)]) {
      Json rows = Json::array();
      for (size_t rr = 0; rr < m.rows(); ++rr) {
        Json row = Json::array();
        for (size_t cc = 0; cc < m.cols(); ++cc) row.push_back(m.at(rr, cc));
        rows.push_back(row);
      }
      per.push_back(rows);
    }
    act["x" + std::to_string(j + 1)] = per;
  }
  r["action"] = act;
  return {0, r};
}

std::pair<int, Json> cmd_support(TaskCtx& ctx) {
  const ModulePresentation& M = ctx.get_module(module_name(*ctx.task, "module", "k"));
  const ModulePresentation& N = ctx.get_module(module_name(*ctx.task, "module_n", "k"));
  SupportResult S = support_pair(M, N, ctx.par.D, ctx.par.w);
  bool ok = false;
  Json r = support_json(ctx, M, N, S, &ok);
  return {ok ? 0 : 2, r};
}

std::pair<int, Json> cmd_cone(TaskCtx& ctx) {
  const ModulePresentation& M = ctx.get_module(module_name(*ctx.task, "module", "k"));
  if (!ctx.task->contains("target")) fail("SchemaError", "cone needs a target list");
  std::vector<Poly> phis = chi_polys_from_json(ctx.RS, ctx.task->at("target"));
  KoszulConeResult KC = koszul_cone(M, phis);
  SupportResult S = support_pair(KC.module, residue_field_module(ctx.RS), ctx.par.D, ctx.par.w);
  Json r;
  r["module"] = module_to_json(KC.module);
  r["module_hash"] = module_hash(KC.module);
  r["certificate"] = cert_json(KC.certificate);
  bool ok = false;
  r["support"] = support_json(ctx, KC.module, residue_field_module(ctx.RS), S, &ok);
  return {ok ? 0 : 2, r};
}

std::pair<int, Json> cmd_realize(TaskCtx& ctx) {
  if (!ctx.task->contains("target")) fail("SchemaError", "realize needs a target ideal");
  ConeIdeal X = make_cone(ctx.RS.chi.get(),
                          chi_polys_from_json(ctx.RS, ctx.task->at("target")));
  const ModulePresentation& M = ctx.get_module(module_name(*ctx.task, "module", "k"));

  if (ctx.task->contains("module_n")) {
    const ModulePresentation& N = ctx.get_module(module_name(*ctx.task, "module_n", "k"));
    PairRealization R = realize_pair(M, N, X, ctx.par);
    Json r;
    r["pair"] = true;
    r["X"] = cone_to_json(R.X);
    r["clipped"] = R.clipped;
    r["effective_target"] = cone_to_json(R.X_eff);
    Json base = cone_to_json(R.base.cone);
    base["stabilized"] = R.base.stabilized;
    r["base_support"] = base;
    r["module_mx"] = module_to_json(R.MX);
    r["module_mx_hash"] = module_hash(R.MX);
    r["module_nx"] = module_to_json(R.NX);
    r["module_nx_hash"] = module_hash(R.NX);
    r["same_output"] = R.same_output;
    r["certificate_m"] = cert_json(R.cert_m);
    r["certificate_n"] = cert_json(R.cert_n);
    Json sup;
    sup["mx_n"] = cone_to_json(R.s_mx_n.cone);
    sup["m_nx"] = cone_to_json(R.s_m_nx.cone);
    sup["mx_nx"] = cone_to_json(R.s_mx_nx.cone);
    r["supports"] = sup;
    Json cmp;
    cmp["mx_n"] = proj_rel_name(R.c1);
    cmp["m_nx"] = proj_rel_name(R.c2);
    cmp["mx_nx"] = proj_rel_name(R.c3);
    r["compare"] = cmp;
    Json gor;
    gor["checked_above"] = ctx.RS.dimR;
    gor["to"] = ctx.par.D;
    gor["ok"] = R.gorenstein_ok;
    r["gorenstein_vanishing"] = gor;
    r["verdict"] = R.verified ? "verified" : "unverified";
    return {R.verified ? 0 : 2, r};
  }

  Realization R = realize(M, X, ctx.par);
  Json r;
  r["pair"] = false;
  r["X"] = cone_to_json(R.X);
  r["clipped"] = R.clipped;
  if (R.clipped) r["warning"] = "ClippedTarget";
  r["effective_target"] = cone_to_json(R.X_eff);
  Json base = cone_to_json(R.base_support.cone);
  base["stabilized"] = R.base_support.stabilized;
  r["base_support"] = base;
  Json phis = Json::array();
  for (const auto& p : R.phis) phis.push_back(p.to_string());
  r["phi_list"] = phis;
  r["module"] = module_to_json(R.output);
  r["module_hash"] = module_hash(R.output);
  r["certificate"] = cert_json(R.certificate);
  Json sup = cone_to_json(R.support.cone);
  sup["stabilized"] = R.support.stabilized;
  r["support"] = sup;
  Json ver;
  ver["proj_compare"] = proj_rel_name(R.cmp);
  Json pts = Json::array();
  for (const auto& pt : R.points) pts.push_back(point_json(ctx.RS, pt));
  ver["oracle_points"] = pts;
  ver["agreement"] = R.oracle_agree;
  r["verification"] = ver;
  uint32_t eb = point_listing_bound(ctx);
  if (eb > 0) r["rational_points"] = rational_points_json(ctx.RS, R.support.cone, eb);
  r["verdict"] = R.verified ? "verified" : "unverified";
  return {R.verified ? 0 : 2, r};
}

std::pair<int, Json> cmd_oracle(TaskCtx& ctx) {
  const ModulePresentation& M = ctx.get_module(module_name(*ctx.task, "module", "k"));
  Json r;
  Json pts = Json::array();
  if (ctx.task->contains("point")) {
    const Json& pj = ctx.task->at("point");
    uint32_t e = pj.contains("e") ? pj.at("e").get<uint32_t>() : 1;
    Field K = Field::extension(ctx.RS.Q->field().p(), e);
    std::vector<Fe> alpha;
    for (const auto& s : pj.at("alpha")) alpha.push_back(K.parse_elem(s.get<std::string>()));
    OraclePoint pt;
    pt.e = e;
    pt.alpha = alpha;
    pt.infinite_pd = hypersurface_oracle(M, K, alpha);
    Json j;
    j["e"] = e;
    Json av = Json::array();
    for (Fe a : alpha) av.push_back(K.to_string(a));
    j["alpha"] = av;
    j["infinite_pd"] = pt.infinite_pd;
    pts.push_back(j);
  } else {
    for (uint32_t e = 1; e <= ctx.par.emax; ++e) {
      Field K = Field::extension(ctx.RS.Q->field().p(), e);
      for (const auto& alpha : proj_points(K, uint32_t(ctx.RS.c))) {
        Json j;
        j["e"] = e;
        Json av = Json::array();
        for (Fe a : alpha) av.push_back(K.to_string(a));
        j["alpha"] = av;
        j["infinite_pd"] = hypersurface_oracle(M, K, alpha);
        pts.push_back(j);
      }
    }
  }
  r["points"] = pts;
  return {0, r};
}

}  // namespace

CliResult run_task(const Json& task, const CliOptions& opt) {
  CliResult res;
  std::string cmd;
  try {
    if (!task.is_object() || !task.contains("command"))
      fail("SchemaError", "task needs a command");
    cmd = task.at("command").get<std::string>();
    static const std::set<std::string> cmds = {"check-ring", "resolve", "ext",    "support",
                                               "cone",       "realize", "oracle"};
    if (!cmds.count(cmd)) fail("SchemaError", "unknown command: " + cmd);
    if (!task.contains("ring")) fail("SchemaError", "task needs a ring");

    TaskCtx ctx;
    ctx.task = &task;
    ctx.opt = opt;
    ctx.RS = ring_from_json(task.at("ring"));
    if (task.contains("params")) {
      const Json& p = task.at("params");
      if (p.contains("D")) ctx.par.D = p.at("D").get<int>();
      if (p.contains("w")) ctx.par.w = p.at("w").get<int>();
      if (p.contains("e")) ctx.par.emax = p.at("e").get<uint32_t>();
    }
    if (task.contains("modules")) {
      for (const auto& [name, jm] : task.at("modules").items()) {
        if (name == "k") fail("SchemaError", "the module name k is reserved");
        ctx.modules.emplace(name, module_from_json(ctx.RS, jm));
      }
    }

    std::pair<int, Json> out;
    if (cmd == "check-ring") out = cmd_check_ring(ctx);
    else if (cmd == "resolve") out = cmd_resolve(ctx);
    else if (cmd == "ext") out = cmd_ext(ctx);
    else if (cmd == "support") out = cmd_support(ctx);
    else if (cmd == "cone") out = cmd_cone(ctx);
    else if (cmd == "realize") out = cmd_realize(ctx);
    else out = cmd_oracle(ctx);

    Json rep;
    rep["version"] = kVersion;
    rep["command"] = cmd;
    rep["task"] = task;
    Json jopt;
    jopt["emit_points"] = opt.emit_points;
    rep["options"] = jopt;
    rep["ring"] = ring_to_json(ctx.RS);
    rep["ring_hash"] = ring_hash(ctx.RS);
    rep["params"] = params_json(ctx.par);
    Json mods;
    for (const auto& [name, m] : ctx.modules) {
      mods[name] = module_to_json(m);
    }
    rep["modules"] = mods;
    rep["result"] = out.second;
    res.exit_code = out.first;
    res.report = rep;

    // oracle disagreement also dumps a minimal reproducer
    if (res.exit_code == 2 && res.report["result"].contains("verification") &&
        res.report["result"]["verification"].contains("agreement") &&
        res.report["result"]["verification"]["agreement"] == false) {
      Json repro;
      repro["command"] = "oracle";
      repro["ring"] = rep["ring"];
      Json ms;
      ms["M"] = res.report["result"]["module"];
      repro["modules"] = ms;
      repro["module"] = "M";
      atomic_write("support-forge-reproducer.json", repro.dump(2) + "\n");
    }
  } catch (const Error& e) {
    Json rep;
    rep["version"] = kVersion;
    rep["command"] = cmd;
    rep["task"] = task;
    Json err;
    err["code"] = e.code();
    err["message"] = e.what();
    rep["error"] = err;
    res.exit_code = error_exit_code(e.code());
    res.report = rep;
  } catch (const nlohmann::json::exception& e) {
    Json rep;
    rep["version"] = kVersion;
    rep["command"] = cmd;
    Json err;
    err["code"] = "SchemaError";
    err["message"] = e.what();
    rep["error"] = err;
    res.exit_code = 3;
    res.report = rep;
  }
  return res;
}

namespace {

std::string default_cache_root(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("SUPPORT_FORGE_CACHE");
  if (env != nullptr && *env != '\0') return env;
  const char* home = std::getenv("HOME");
  return std::string(home != nullptr ? home : ".") + "/.cache/support-forge";
}

struct CacheGuard {
  explicit CacheGuard(FileResolutionCache* c) { set_resolution_cache(c); }
  ~CacheGuard() { set_resolution_cache(nullptr); }
};

int run_from_file(const std::string& task_path, CliOptions opt, const std::string& cache_dir) {
  Json task;
  {
    std::ifstream in(task_path);
    if (!in) {
      std::cerr << "cannot open task file: " << task_path << "\n";
      return 3;
    }
    try {
      in >> task;
    } catch (const std::exception& e) {
      std::cerr << "task file is not valid JSON: " << e.what() << "\n";
      return 3;
    }
  }
  std::optional<FileResolutionCache> cache;
  std::optional<CacheGuard> guard;
  if (!opt.no_cache) {
    cache.emplace(default_cache_root(cache_dir));
    guard.emplace(&*cache);
  }
  CliResult res = run_task(task, opt);
  std::string text = res.report.dump(2) + "\n";
  if (!opt.out_path.empty()) atomic_write(opt.out_path, text);
  std::cout << text;
  return res.exit_code;
}

int run_verify(const std::string& report_path, CliOptions opt, const std::string& cache_dir) {
  Json old;
  {
    std::ifstream in(report_path);
    if (!in) {
      std::cerr << "cannot open report file: " << report_path << "\n";
      return 3;
    }
    try {
      in >> old;
    } catch (const std::exception& e) {
      std::cerr << "report file is not valid JSON: " << e.what() << "\n";
      return 3;
    }
  }
  if (!old.is_object() || !old.contains("task")) {
    std::cerr << "report has no embedded task\n";
    return 3;
  }
  CliOptions inner = opt;
  inner.out_path.clear();
  if (old.contains("options") && old["options"].contains("emit_points"))
    inner.emit_points = old["options"]["emit_points"].get<int>();
  std::optional<FileResolutionCache> cache;
  std::optional<CacheGuard> guard;
  if (!opt.no_cache) {
    cache.emplace(default_cache_root(cache_dir));
    guard.emplace(&*cache);
  }
  CliResult res = run_task(old.at("task"), inner);
  bool reproduced = res.report.dump() == old.dump();
  Json rep;
  rep["version"] = kVersion;
  rep["command"] = "verify";
  rep["reproduced"] = reproduced;
  rep["inner_exit"] = res.exit_code;
  std::string text = rep.dump(2) + "\n";
  if (!opt.out_path.empty()) atomic_write(opt.out_path, text);
  std::cout << text;
  return (reproduced && res.exit_code == 0) ? 0 : 2;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"cohomological supports over graded complete intersections"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string cache_dir;
  CliOptions opt;
  app.add_flag("--no-cache", opt.no_cache, "recompute everything");
  app.add_option("--emit-points", opt.emit_points,
                 "list rational points of computed cones over F_{p^e} for e up to this bound");
  app.add_option("--cache-dir", cache_dir, "cache root (default: SUPPORT_FORGE_CACHE)");

  std::map<std::string, std::string> task_paths;
  std::map<std::string, std::string> out_paths;
  for (const char* name : {"check-ring", "resolve", "ext", "support", "cone", "realize", "oracle"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--task", task_paths[name], "task file (JSON)")->required();
    sub->add_option("--out", out_paths[name], "write the report here as well");
  }
  CLI::App* ver = app.add_subcommand("verify");
  std::string report_path, verify_out;
  ver->add_option("--report", report_path, "previously produced report")->required();
  ver->add_option("--out", verify_out, "write the verify report here as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  for (const auto& [name, path] : task_paths) {
    CLI::App* sub = app.get_subcommand(name);
    if (sub->parsed()) {
      opt.out_path = out_paths[name];
      Json task;
      {
        std::ifstream in(path);
        if (in) {
          try {
            in >> task;
          } catch (...) {
            task = Json();
          }
        }
      }
      if (task.is_object() && task.contains("command") &&
          task.at("command").get<std::string>() != name) {
        std::cerr << "task command disagrees with the subcommand\n";
        return 3;
      }
      if (task.is_object() && !task.contains("command")) task["command"] = name;
      if (!task.is_object()) return run_from_file(path, opt, cache_dir);  // surfaces the error
      // re-dispatch through a temp structure to keep one code path
      std::optional<FileResolutionCache> cache;
      std::optional<CacheGuard> guard;
      if (!opt.no_cache) {
        cache.emplace(default_cache_root(cache_dir));
        guard.emplace(&*cache);
      }
      CliResult res = run_task(task, opt);
      std::string text = res.report.dump(2) + "\n";
      if (!opt.out_path.empty()) atomic_write(opt.out_path, text);
      std::cout << text;
      return res.exit_code;
    }
  }
  if (ver->parsed()) {
    opt.out_path = verify_out;
    return run_verify(report_path, opt, cache_dir);
  }
  return 3;
}

}  // namespace sf
