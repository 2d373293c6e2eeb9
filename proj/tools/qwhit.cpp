// qwhit: command-line front end.
//
// Subcommands: qpsi (pattern-sum evaluations), eigen (exact q-Toda eigenvalue
// check), givental (classical Whittaker quadrature), limit (q->1 convergence
// scan), asymptotics (q-factorial asymptotics and eta modularity), hamlimit
// (Hamiltonian expansion residuals).
//
// Exit codes: 0 success, 1 validation error, 2 verification failure
// (nonzero exact residual, positivity violation, or non-convergence).

#include <qwhit/parallel.hpp>
#include <qwhit/qtoda.hpp>
#include <qwhit/qwhittaker.hpp>
#include <qwhit/scaling.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace qwhit;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
  return out;
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::atoi(v);
}

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const json& report, const std::string& csv) const {
    std::string text = format == "csv" ? csv : report.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open output file " + path);
      f << text;
    }
  }
};

json make_report(const std::string& sub, json config, json results, json residuals, bool ok) {
  json rep;
  rep["subcommand"] = sub;
  rep["config"] = std::move(config);
  rep["results"] = std::move(results);
  rep["residuals"] = std::move(residuals);
  rep["status"] = ok ? "ok" : "verification_failed";
  return rep;
}

IntPart parse_int_part(const std::string& s) {
  if (s == "floor") return IntPart::floor_int;
  if (s == "trunc") return IntPart::trunc_int;
  throw CLI::ValidationError("--int-part must be floor or trunc");
}

json laurent_rat_json(const ZLaurentRat& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["exponents"] = e;
    t["coefficient"] = rat_str(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

json laurent_qs_json(const ZLaurentQS& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["exponents"] = e;
    t["coefficient"] = c.str();
    terms.push_back(std::move(t));
  }
  return terms;
}

// ---- subcommand runners (return process exit code) ----

struct QpsiOpts {
  int rank = 0;
  std::string weight, method = "direct", q, z, lambda;
  double eps = 0;
  int trunc = 0;
};

int run_qpsi(const QpsiOpts& o, const Output& out) {
  Weight w = parse_int_list(o.weight);
  if (static_cast<int>(w.size()) != o.rank)
    throw CLI::ValidationError("--weight length must equal --rank");
  int trunc = o.trunc ? o.trunc : env_int("QWHIT_TRUNCATION", kDefaultTruncationOrder);

  json cfg;
  cfg["rank"] = o.rank;
  cfg["weight"] = w;
  cfg["method"] = o.method;
  cfg["truncation_order"] = trunc;
  json results = json::array();
  std::string csv;
  bool ok = true;

  if (o.method == "schur") {
    if (o.z.empty()) throw CLI::ValidationError("schur needs --z");
    Rat v = schur_specialization(w, parse_rat_list(o.z));
    cfg["z"] = o.z;
    results.push_back({{"value", rat_str(v)}});
    csv = "key,value\nschur," + rat_str(v) + "\n";
  } else if (o.method == "character") {
    ZLaurentQS c = psi_character(w, trunc);
    results = laurent_qs_json(c);
    std::ostringstream os;
    os << "exponents,coefficient\n";
    for (const auto& [e, s] : c.terms()) {
      for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
      os << ",\"" << s.str() << "\"\n";
    }
    csv = os.str();
  } else if (o.method == "direct" || o.method == "recursive") {
    bool recursive = o.method == "recursive";
    if (!o.z.empty()) {
      if (o.q.empty()) throw CLI::ValidationError("exact z needs --q");
      std::vector<Rat> zr = parse_rat_list(o.z);
      if (static_cast<int>(zr.size()) != o.rank)
        throw CLI::ValidationError("--z length must equal --rank");
      std::vector<RatComplex> z;
      for (const Rat& r : zr) z.push_back(RatComplex{r, Rat(0)});
      Rat q = parse_rat(o.q);
      RatComplex v = recursive ? psi_recursive_exact(w, z, q) : psi_exact(w, z, q);
      cfg["q"] = o.q;
      cfg["z"] = o.z;
      results.push_back({{"value", ratc_str(v)}});
      csv = "key,value\npsi," + ratc_str(v) + "\n";
    } else if (!o.lambda.empty()) {
      if (!(o.eps > 0)) throw CLI::ValidationError("unit-circle z needs --eps > 0");
      std::vector<double> lam = parse_double_list(o.lambda);
      if (static_cast<int>(lam.size()) != o.rank)
        throw CLI::ValidationError("--lambda length must equal --rank");
      LogComplex v = psi_log(w, lam, o.eps);  // direct and recursive sums coincide
      cfg["eps"] = o.eps;
      cfg["lambda"] = lam;
      json r;
      r["log_magnitude"] = v.log_mag;
      r["phase"] = v.phase;
      std::complex<double> c = v.to_complex();
      if (std::isfinite(c.real()) && std::isfinite(c.imag())) {
        r["re"] = c.real();
        r["im"] = c.imag();
      }
      results.push_back(std::move(r));
      csv = "key,value\nlog_magnitude," + fmt17(v.log_mag) + "\nphase," + fmt17(v.phase) + "\n";
    } else if (!o.q.empty()) {
      Rat q = parse_rat(o.q);
      ZLaurentRat v = recursive ? psi_recursive_z(w, q) : psi_formal_z(w, q);
      cfg["q"] = o.q;
      results = laurent_rat_json(v);
      std::ostringstream os;
      os << "exponents,coefficient\n";
      for (const auto& [e, c] : v.terms()) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << "," << rat_str(c) << "\n";
      }
      csv = os.str();
    } else {
      ZLaurentQS v = recursive ? psi_recursive(w, trunc) : psi_formal(w, trunc);
      results = laurent_qs_json(v);
      std::ostringstream os;
      os << "exponents,coefficient\n";
      for (const auto& [e, c] : v.terms()) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << ",\"" << c.str() << "\"\n";
      }
      csv = os.str();
    }
  } else {
    throw CLI::ValidationError("unknown --method " + o.method);
  }

  out.emit(make_report("qpsi", cfg, results, json::array(), ok), csv);
  return 0;
}

struct EigenOpts {
  int rank = 0;
  std::string weight, q = "1/2";
};

int run_eigen(const EigenOpts& o, const Output& out) {
  Weight w = parse_int_list(o.weight);
  if (static_cast<int>(w.size()) != o.rank)
    throw CLI::ValidationError("--weight length must equal --rank");
  EigenReport rep = verify_eigen(w, parse_rat(o.q));

  json cfg;
  cfg["rank"] = o.rank;
  cfg["weight"] = w;
  cfg["q"] = o.q;
  json residuals = json::array();
  std::ostringstream os;
  os << "r,residual,exactly_zero\n";
  for (const auto& r : rep.residuals) {
    residuals.push_back(
        {{"r", r.order}, {"residual", r.residual}, {"exactly_zero", r.exactly_zero}});
    os << r.order << ",\"" << r.residual << "\"," << (r.exactly_zero ? "true" : "false") << "\n";
  }
  json results = json::array();
  results.push_back({{"dominant", rep.dominant}, {"all_zero", rep.all_zero}});
  out.emit(make_report("eigen", cfg, results, residuals, rep.all_zero), os.str());
  return rep.all_zero ? 0 : 2;
}

struct GiventalOpts {
  int rank = 0;
  std::string x, lambda, scheme = "gauss10";
  int nodes = 0;
  double half_width = 12.0;
  bool eigencheck = false;
  double fd_step = 0.05;
};

QuadratureConfig make_quad_config(int nodes, double half_width, const std::string& scheme) {
  QuadratureConfig cfg;
  cfg.nodes_per_axis = nodes ? nodes : env_int("QWHIT_QUAD_NODES", 0);
  cfg.half_width = half_width;
  if (scheme == "gauss10")
    cfg.scheme = QuadratureConfig::Scheme::gauss10;
  else if (scheme == "simpson")
    cfg.scheme = QuadratureConfig::Scheme::simpson;
  else
    throw CLI::ValidationError("--scheme must be gauss10 or simpson");
  return cfg;
}

int run_givental(const GiventalOpts& o, const Output& out) {
  std::vector<double> x = parse_double_list(o.x);
  std::vector<double> lam = parse_double_list(o.lambda);
  if (static_cast<int>(x.size()) != o.rank || static_cast<int>(lam.size()) != o.rank)
    throw CLI::ValidationError("--x and --lambda lengths must equal --rank");
  QuadratureConfig cfg = make_quad_config(o.nodes, o.half_width, o.scheme);

  json jcfg;
  jcfg["rank"] = o.rank;
  jcfg["x"] = x;
  jcfg["lambda"] = lam;
  jcfg["scheme"] = o.scheme;
  jcfg["nodes_per_axis"] = cfg.nodes_per_axis ? cfg.nodes_per_axis : default_nodes_per_axis(o.rank);
  jcfg["half_width"] = cfg.half_width;

  WhittakerResult r = whittaker_classical(x, lam, cfg);
  json results = json::array();
  results.push_back(
      {{"re", r.value.real()}, {"im", r.value.imag()}, {"error_estimate", r.error_estimate}});
  json residuals = json::array();
  std::ostringstream os;
  os << "key,value\nre," << fmt17(r.value.real()) << "\nim," << fmt17(r.value.imag())
     << "\nerror_estimate," << fmt17(r.error_estimate) << "\n";
  if (o.eigencheck) {
    ClassicalEigenReport er = classical_eigencheck(x, lam, o.fd_step, cfg);
    jcfg["fd_step"] = o.fd_step;
    residuals.push_back({{"operator", "H1"}, {"residual", er.residual_h1}});
    residuals.push_back({{"operator", "H2"}, {"residual", er.residual_h2}});
    os << "residual_h1," << fmt17(er.residual_h1) << "\nresidual_h2," << fmt17(er.residual_h2)
       << "\n";
  }
  out.emit(make_report("givental", jcfg, results, residuals, true), os.str());
  return 0;
}

struct LimitOpts {
  int rank = 0;
  std::string x, lambda, eps, scheme = "gauss10", int_part = "floor";
  int nodes = 0;
  double half_width = 12.0;
};

int run_limit(const LimitOpts& o, const Output& out) {
  std::vector<double> x = parse_double_list(o.x);
  std::vector<double> lam = parse_double_list(o.lambda);
  std::vector<double> eps = parse_double_list(o.eps);
  if (static_cast<int>(x.size()) != o.rank || static_cast<int>(lam.size()) != o.rank)
    throw CLI::ValidationError("--x and --lambda lengths must equal --rank");
  QuadratureConfig cfg = make_quad_config(o.nodes, o.half_width, o.scheme);
  IntPart conv = parse_int_part(o.int_part);

  std::vector<LimitRow> rows = limit_scan(x, lam, eps, cfg, conv);

  json jcfg;
  jcfg["rank"] = o.rank;
  jcfg["x"] = x;
  jcfg["lambda"] = lam;
  jcfg["eps_list"] = eps;
  jcfg["scheme"] = o.scheme;
  jcfg["int_part"] = o.int_part;
  json results = json::array();
  std::ostringstream os;
  os << "epsilon,m_eps,re_q,im_q,re_cl,im_cl,abs_err,rel_err\n";
  for (const LimitRow& r : rows) {
    json jr;
    jr["epsilon"] = r.eps;
    jr["m_eps"] = r.m;
    jr["p"] = r.point.p;
    jr["effective_x"] = r.point.effective;
    jr["dominant"] = r.point.dominant;
    jr["re_q"] = r.q_value.real();
    jr["im_q"] = r.q_value.imag();
    jr["re_cl"] = r.classical.real();
    jr["im_cl"] = r.classical.imag();
    jr["abs_err"] = r.abs_err;
    jr["rel_err"] = r.rel_err;
    results.push_back(std::move(jr));
    os << fmt17(r.eps) << "," << r.m << "," << fmt17(r.q_value.real()) << ","
       << fmt17(r.q_value.imag()) << "," << fmt17(r.classical.real()) << ","
       << fmt17(r.classical.imag()) << "," << fmt17(r.abs_err) << "," << fmt17(r.rel_err) << "\n";
  }
  out.emit(make_report("limit", jcfg, results, json::array(), true), os.str());
  return 0;
}

struct AsymptoticsOpts {
  std::string eps, y = "-1,0,1", int_part = "floor";
};

int run_asymptotics(const AsymptoticsOpts& o, const Output& out) {
  std::vector<double> eps = parse_double_list(o.eps);
  std::vector<double> ys = parse_double_list(o.y);
  IntPart conv = parse_int_part(o.int_part);

  json jcfg;
  jcfg["eps_list"] = eps;
  jcfg["y_list"] = ys;
  jcfg["int_part"] = o.int_part;
  json results = json::array();
  std::ostringstream os;
  os << "kind,y,epsilon,value\n";
  for (double y : ys) {
    for (double e : eps) {
      FAlphaValue f1 = f_alpha(y, e, 1, conv);
      FAlphaValue f2 = f_alpha(y, e, 2, conv);
      json r;
      r["y"] = y;
      r["epsilon"] = e;
      r["f1_residual"] = f1.residual;
      r["f2_residual"] = f2.residual;
      r["f1_log"] = f1.log_value;
      r["f2_log"] = f2.log_value;
      results.push_back(std::move(r));
      os << "f1," << fmt17(y) << "," << fmt17(e) << "," << fmt17(f1.residual) << "\n";
      os << "f2," << fmt17(y) << "," << fmt17(e) << "," << fmt17(f2.residual) << "\n";
    }
  }
  json residuals = json::array();
  for (double e : eps) {
    double r = eta_modular_residual(e);
    residuals.push_back({{"kind", "eta"}, {"epsilon", e}, {"residual", r}});
    os << "eta,," << fmt17(e) << "," << fmt17(r) << "\n";
  }
  out.emit(make_report("asymptotics", jcfg, results, residuals, true), os.str());
  return 0;
}

struct HamlimitOpts {
  int rank = 0;
  std::string x, eps, int_part = "floor";
};

int run_hamlimit(const HamlimitOpts& o, const Output& out) {
  std::vector<double> x = parse_double_list(o.x);
  if (static_cast<int>(x.size()) != o.rank)
    throw CLI::ValidationError("--x length must equal --rank");
  std::vector<double> eps = parse_double_list(o.eps);
  IntPart conv = parse_int_part(o.int_part);

  json jcfg;
  jcfg["rank"] = o.rank;
  jcfg["x"] = x;
  jcfg["eps_list"] = eps;
  jcfg["int_part"] = o.int_part;
  jcfg["test_function"] = "gaussian";
  json results = json::array();
  std::ostringstream os;
  os << "epsilon,residual1,residual2\n";
  for (double e : eps) {
    HamLimitResiduals r = hamiltonian_limit_residual(x, e, SmoothTestFunction::gaussian(), conv);
    results.push_back({{"epsilon", e}, {"residual1", r.residual1}, {"residual2", r.residual2}});
    os << fmt17(e) << "," << fmt17(r.residual1) << "," << fmt17(r.residual2) << "\n";
  }
  out.emit(make_report("hamlimit", jcfg, results, json::array(), true), os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"class-one q-Whittaker functions, q-Toda verification, and the q->1 limit"};
  app.require_subcommand(1);

  Output output;
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", output.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", output.path, "write output to a file instead of stdout");
    sub->add_option("--threads", threads, "worker threads (0 = all cores)");
  };

  QpsiOpts qpsi;
  CLI::App* sq = app.add_subcommand("qpsi", "evaluate the q-Whittaker pattern sum");
  sq->add_option("--rank", qpsi.rank, "rank l+1")->required()->check(CLI::Range(1, 5));
  sq->add_option("--weight", qpsi.weight, "comma-separated integer weight")->required();
  sq->add_option("--method", qpsi.method, "direct|recursive|character|schur");
  auto* qopt = sq->add_option("--q", qpsi.q, "exact rational q, e.g. 1/2");
  auto* zopt = sq->add_option("--z", qpsi.z, "comma-separated exact rational z values");
  auto* lopt = sq->add_option("--lambda", qpsi.lambda, "comma-separated real lambdas (with --eps)");
  auto* eopt = sq->add_option("--eps", qpsi.eps, "q = e^{-eps} for unit-circle mode");
  zopt->excludes(lopt);  // exactly one spectral mode
  qopt->excludes(eopt);  // exactly one q specification
  sq->add_option("--trunc", qpsi.trunc, "truncation order for formal mode");
  add_common(sq);

  EigenOpts eigen;
  CLI::App* se = app.add_subcommand("eigen", "verify the q-Toda eigenvalue equation exactly");
  se->add_option("--rank", eigen.rank, "rank l+1")->required()->check(CLI::Range(1, 5));
  se->add_option("--weight", eigen.weight, "comma-separated integer weight")->required();
  se->add_option("--q", eigen.q, "exact rational q in (0,1)");
  add_common(se);

  GiventalOpts giv;
  CLI::App* sg = app.add_subcommand("givental", "classical Whittaker function by quadrature");
  sg->add_option("--rank", giv.rank, "rank")->required()->check(CLI::Range(1, 4));
  sg->add_option("--x", giv.x, "comma-separated coordinates")->required();
  sg->add_option("--lambda", giv.lambda, "comma-separated spectral parameters")->required();
  sg->add_option("--nodes", giv.nodes, "quadrature nodes per axis");
  sg->add_option("--half-width", giv.half_width, "integration window half-width");
  sg->add_option("--scheme", giv.scheme, "gauss10|simpson");
  sg->add_flag("--eigencheck", giv.eigencheck, "finite-difference Hamiltonian residuals");
  sg->add_option("--fd-step", giv.fd_step, "finite-difference step");
  add_common(sg);

  LimitOpts limit;
  CLI::App* sl = app.add_subcommand("limit", "q->1 convergence scan against the classical value");
  sl->add_option("--rank", limit.rank, "rank")->required()->check(CLI::Range(1, 4));
  sl->add_option("--x", limit.x, "comma-separated coordinates")->required();
  sl->add_option("--lambda", limit.lambda, "comma-separated spectral parameters")->required();
  sl->add_option("--eps", limit.eps, "decreasing eps list, e.g. 0.2,0.1,0.05")->required();
  sl->add_option("--nodes", limit.nodes, "quadrature nodes per axis");
  sl->add_option("--half-width", limit.half_width, "integration window half-width");
  sl->add_option("--scheme", limit.scheme, "gauss10|simpson");
  sl->add_option("--int-part", limit.int_part, "floor|trunc integer-part convention");
  add_common(sl);

  AsymptoticsOpts asym;
  CLI::App* sa = app.add_subcommand("asymptotics", "f_alpha residual table and eta modularity");
  sa->add_option("--eps", asym.eps, "eps list")->required();
  sa->add_option("--y", asym.y, "y list for f_alpha");
  sa->add_option("--int-part", asym.int_part, "floor|trunc");
  add_common(sa);

  HamlimitOpts ham;
  CLI::App* sh = app.add_subcommand("hamlimit", "Hamiltonian expansion residuals (Gaussian)");
  sh->add_option("--rank", ham.rank, "rank")->required()->check(CLI::Range(1, 5));
  sh->add_option("--x", ham.x, "comma-separated coordinates")->required();
  sh->add_option("--eps", ham.eps, "eps list")->required();
  sh->add_option("--int-part", ham.int_part, "floor|trunc");
  add_common(sh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  set_thread_count(threads);
  try {
    if (sq->parsed()) return run_qpsi(qpsi, output);
    if (se->parsed()) return run_eigen(eigen, output);
    if (sg->parsed()) return run_givental(giv, output);
    if (sl->parsed()) return run_limit(limit, output);
    if (sa->parsed()) return run_asymptotics(asym, output);
    if (sh->parsed()) return run_hamlimit(ham, output);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CharacterPositivityError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
