#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isodouble/bending.hpp"
#include "isodouble/characteristic.hpp"
#include "isodouble/clifford.hpp"
#include "isodouble/cohomology.hpp"
#include "isodouble/doubling.hpp"
#include "isodouble/errors.hpp"
#include "isodouble/fkm.hpp"
#include "isodouble/homogeneous_table.hpp"
#include "isodouble/io.hpp"
#include "isodouble/random.hpp"

namespace isodouble::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "human";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
};

struct Outcome {
  int code = kExitPass;
  Json result;
  std::vector<std::string> headline;
};

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

std::uint64_t effective_seed(const Globals& g) {
  if (g.seed) return *g.seed;
  if (auto v = env("ISODOUBLE_SEED")) {
    std::size_t used = 0;
    try {
      if (!v->empty() && (*v)[0] != '-') {
        const auto s = std::stoull(*v, &used, 10);
        if (used == v->size()) return s;
      }
    } catch (const std::exception&) {
    }
    throw UsageError("ISODOUBLE_SEED must be a non-negative 64-bit integer (got '" + *v + "')");
  }
  return kDefaultSeed;
}

double effective_tolerance(const Globals& g, double fallback) {
  if (g.tolerance) {
    if (!(*g.tolerance > 0.0)) throw UsageError("--tolerance must be > 0");
    return *g.tolerance;
  }
  if (auto v = env("ISODOUBLE_TOLERANCE")) {
    std::size_t used = 0;
    try {
      const double t = std::stod(*v, &used);
      if (used == v->size() && t > 0.0 && std::isfinite(t)) return t;
    } catch (const std::exception&) {
    }
    throw UsageError("ISODOUBLE_TOLERANCE must be a positive number (got '" + *v + "')");
  }
  return fallback;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw FormatError("failed writing '" + path + "'");
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_human(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_human(value, prefix.empty() ? key : prefix + "." + key, os);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      os << prefix << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar_text(j[i]);
      os << "]\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i)
      render_human(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << prefix << ": " << scalar_text(j) << '\n';
}

std::string status_of(int code) { return code == kExitPass ? "pass" : "fail"; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

// ---------------------------------------------------------------- clifford

struct CliffordBuildArgs {
  int m = 0, plus = 0, minus = 0;
};

Outcome clifford_build(const CliffordBuildArgs& a, const Globals& g, Json& config) {
  config["m"] = a.m;
  config["plus"] = a.plus;
  config["minus"] = a.minus;

  const CliffordSystem sys = build_system(a.m, a.plus, a.minus);
  const VerificationReport rep = verify_system(sys);
  const bool parity_ok = index_parity_holds(sys.q, sys.a, sys.b);

  Outcome o;
  o.result = Json{{"m", sys.m}, {"l", sys.l}, {"a", sys.a}, {"b", sys.b}, {"q", sys.q}};
  bool index_ok = true;
  if (sys.m % 4 == 0) {
    const int idx = index(sys);
    index_ok = idx == sys.q;
    o.result["trace_index"] = idx;
  } else {
    o.result["trace_index"] = nullptr;
  }
  o.result["parity_ok"] = parity_ok;
  o.result["verification"] = rep;
  if (!g.out.empty()) {
    write_file(g.out, dump(Json(sys)));
    o.result["system_path"] = g.out;
  } else if (g.format == "json") {
    o.result["system"] = sys;
  }
  o.code = (rep.pass && parity_ok && index_ok) ? kExitPass : kExitFail;
  o.headline.push_back("l=" + std::to_string(sys.l) + " q=" + std::to_string(sys.q) +
                       " parity_ok=" + (parity_ok ? "true" : "false") + " " + status_of(o.code));
  return o;
}

Outcome clifford_verify(const std::string& path, Json& config) {
  config["path"] = path;
  const CliffordSystem sys = read_clifford_system(path);
  VerificationReport rep = verify_system(sys);
  if (sys.m % 4 == 0) {
    try {
      const int idx = index(sys);
      rep.add({"index", static_cast<double>(std::abs(idx - sys.q)), 0.0, true,
               "tr(P_0 ... P_m) / (2 delta(m)) = " + std::to_string(idx) + ", recorded q = " +
                   std::to_string(sys.q)});
    } catch (const ConsistencyError& e) {
      rep.add({"index", std::numeric_limits<double>::infinity(), 0.0, false, e.what()});
    }
  }
  Outcome o;
  o.result = Json{{"m", sys.m}, {"l", sys.l}, {"q", sys.q}, {"verification", rep}};
  o.code = rep.pass ? kExitPass : kExitFail;
  o.headline.push_back(path + ": " + status_of(o.code) + " worst_residual=" + fmt(rep.worst_residual));
  return o;
}

// ---------------------------------------------------------------- fkm

Json fkm_family(const FkmPolynomial& poly) {
  return Json{{"m", poly.system().m},
              {"l", poly.system().l},
              {"q", poly.system().q},
              {"m_plus", poly.m_plus()},
              {"m_minus", poly.m_minus()},
              {"n", poly.n()},
              {"laplacian_constant", poly.laplacian_constant()}};
}

struct FkmCheckArgs {
  std::string system;
  std::uint64_t samples = 1000;
};

Outcome fkm_check(const FkmCheckArgs& a, std::uint64_t seed, double tol, Json& config) {
  config["system"] = a.system;
  config["samples"] = a.samples;
  if (a.samples == 0) throw UsageError("--samples must be >= 1");
  const FkmPolynomial poly(read_clifford_system(a.system));
  const VerificationReport rep = cartan_munzner_check(poly, a.samples, seed, tol);
  Outcome o;
  o.result = Json{{"family", fkm_family(poly)}, {"verification", rep}};
  o.code = rep.pass ? kExitPass : kExitFail;
  o.headline.push_back("cartan_munzner " + status_of(o.code) + " worst_residual=" +
                       fmt(rep.worst_residual) + " samples=" + std::to_string(a.samples));
  return o;
}

struct FkmSpectrumArgs {
  std::string system;
  std::optional<double> level;
  int points = 1;
};

Outcome fkm_spectrum(const FkmSpectrumArgs& a, std::uint64_t seed, double tol, Json& config) {
  config["system"] = a.system.empty() ? Json(nullptr) : Json(a.system);
  config["level"] = a.level ? Json(*a.level) : Json(nullptr);
  config["points"] = a.points;
  if (!a.level) throw UsageError("--level is required");
  const double f = *a.level;
  if (!(std::abs(f) < 1.0))
    throw SingularLevelError("level f = " + fmt(f) +
                             " is a focal submanifold (|f| = 1) or outside [-1, 1]; the shape "
                             "operator is only defined on regular levels |f| < 1");
  if (a.system.empty()) throw UsageError("--system is required");
  if (a.points < 1) throw UsageError("--points must be >= 1");

  const FkmPolynomial poly(read_clifford_system(a.system));
  const IsoparametricFamily fam(4, poly.m_plus(), poly.m_minus());
  const double H = H_mean(fam, f);

  Outcome o;
  Json pts = Json::array();
  bool ok = true;
  std::string clusters_text;
  for (int i = 0; i < a.points; ++i) {
    const LevelPoint p = sample_level_point(poly, f, sub_seed(seed, static_cast<std::uint64_t>(i)));
    const SpectrumReport s = shape_spectrum(poly, p);
    const double h_res = std::abs(s.mean_curvature - H);
    ok = ok && s.conclusive && s.multiplicities_match && h_res <= tol;
    pts.push_back(Json{{"seed", p.seed},
                       {"restarts", p.restarts},
                       {"f_value", p.f_value},
                       {"spectrum", s},
                       {"mean_curvature_residual", h_res}});
    if (i == 0) {
      clusters_text = "clusters (";
      for (std::size_t k = 0; k < s.clusters.size(); ++k)
        clusters_text += (k ? "," : "") + std::to_string(s.clusters[k].multiplicity);
      clusters_text += ") mean_curvature=" + fmt(s.mean_curvature);
    }
  }
  o.result = Json{{"family", fkm_family(poly)},
                  {"level", f},
                  {"H_mean_expected", H},
                  {"points", pts}};
  o.code = ok ? kExitPass : kExitFail;
  o.headline.push_back(clusters_text + " expected_H=" + fmt(H) + " " + status_of(o.code));
  return o;
}

// ---------------------------------------------------------------- double

struct CertifyArgs {
  int g = 0, mplus = 0, mminus = 0;
  double kmax = 0.5, rbar = 2.5, rinf = 0.05, step = 1e-3, tail = 1.0;
  std::optional<double> r1;
  std::string side = "plus";
  bool no_reorient = false;
  std::string csv;
};

Outcome double_certify(const CertifyArgs& a, Json& config) {
  config["g"] = a.g;
  config["mplus"] = a.mplus;
  config["mminus"] = a.mminus;
  config["kmax"] = a.kmax;
  config["rbar"] = a.rbar;
  config["rinf"] = a.rinf;
  config["r1"] = a.r1 ? Json(*a.r1) : Json(nullptr);
  config["step"] = a.step;
  config["tail"] = a.tail;
  config["side"] = a.side;
  config["reorient_normal"] = !a.no_reorient;
  config["csv"] = a.csv.empty() ? Json(nullptr) : Json(a.csv);

  const IsoparametricFamily fam(a.g, a.mplus, a.mminus);
  CurveRequest req;
  req.r_bar = a.rbar;
  req.r_1 = a.r1;
  req.r_inf = a.rinf;
  req.k_max = a.kmax;
  req.step = a.step;
  req.tail_length = a.tail;
  const BendingCurve curve = build_curve(req);
  const VerificationReport curve_rep = validate_curve(curve);

  CertifyOptions opts;
  opts.side = a.side == "minus" ? CollarSide::minus : CollarSide::plus;
  opts.reorient_normal = !a.no_reorient;
  const PositivityCertificate cert = certify(curve, fam, opts);
  if (!a.csv.empty()) write_file(a.csv, curve_csv(curve));

  Outcome o;
  o.result = Json{{"family", fam},
                  {"curve", curve},
                  {"curve_validation", curve_rep},
                  {"certificate", cert}};
  o.code = (curve_rep.pass && cert.pass) ? kExitPass : kExitFail;
  o.headline.push_back("min_R=" + fmt(cert.min_R) + " samples=" + std::to_string(cert.samples) +
                       " " + status_of(o.code));
  return o;
}

// ---------------------------------------------------------------- topology

struct CohomologyArgs {
  int g = 0, mplus = 0, mminus = 0;
  std::string side = "plus";
  std::string ring;
};

std::string ranks_text(const CohomologyProfile& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.ranks.size(); ++i) s += (i ? "," : "") + std::to_string(p.ranks[i]);
  return s + "]";
}

Outcome topology_cohomology(const CohomologyArgs& a, Json& config) {
  config["g"] = a.g;
  config["mplus"] = a.mplus;
  config["mminus"] = a.mminus;
  config["side"] = a.side;
  config["ring"] = a.ring.empty() ? Json(nullptr) : Json(a.ring);

  const IsoparametricFamily fam(a.g, a.mplus, a.mminus);
  std::optional<Ring> ring;
  if (a.ring == "Z") ring = Ring::Integers;
  if (a.ring == "Z2") ring = Ring::Mod2;
  const Side side = a.side == "minus" ? Side::minus : Side::plus;
  const MunznerProfiles mz = munzner_cohomology(fam, ring);
  const CohomologyProfile dbl = double_cohomology(fam, side, ring);

  Outcome o;
  o.result = Json{{"family", fam},
                  {"ring", to_string(dbl.ring)},
                  {"ring_source", ring ? "override" : "default"},
                  {"M_plus", mz.M_plus},
                  {"M_minus", mz.M_minus},
                  {"Y", mz.Y},
                  {"double", dbl}};
  o.result["cell_structure"] = fam.g() == 4 ? Json(cell_structure(fam)) : Json(nullptr);
  const auto row = homogeneous_lookup(a.g, a.mplus, a.mminus);
  o.result["homogeneous"] = row ? Json(*row) : Json(nullptr);
  o.code = dbl.poincare_dual() ? kExitPass : kExitFail;
  o.headline.push_back(to_string(dbl.space) + " ranks " + ranks_text(dbl) + " over " +
                       to_string(dbl.ring) + " poincare_dual=" +
                       (dbl.poincare_dual() ? "true" : "false"));
  return o;
}

struct DistinguishArgs {
  int m = 0, l = 0;
  long long q1 = 0, q2 = 0;
};

Outcome topology_distinguish(const DistinguishArgs& a, Json& config) {
  config["m"] = a.m;
  config["l"] = a.l;
  config["q1"] = a.q1;
  config["q2"] = a.q2;
  const Distinction d = distinguish(a.m, a.l, a.q1, a.q2);
  Outcome o;
  o.result = d;
  o.code = d.verdict == Verdict::inapplicable ? kExitFail : kExitPass;
  o.headline.push_back(to_string(d.verdict) + ": " + d.reason);
  for (const auto& w : d.warnings) o.headline.push_back("warning: " + w);
  return o;
}

struct RecordArgs {
  int m = 0, l = 0;
  long long q = 0;
};

Outcome topology_record(const RecordArgs& a, Json& config) {
  config["m"] = a.m;
  config["l"] = a.l;
  config["q"] = a.q;
  const FKMTopologyRecord r = fkm_topology_record(a.m, a.l, a.q);
  Outcome o;
  o.result = r;
  std::string line = "pontrjagin_top=" + r.pontrjagin_top.str();
  if (r.wu_residue)
    line += " wu_residue mod " + std::to_string(r.wu_residue->p) + " = {" +
            std::to_string(r.wu_residue->pair.first) + "," +
            std::to_string(r.wu_residue->pair.second) + "}";
  o.headline.push_back(line);
  return o;
}

struct TableArgs {
  std::optional<int> g;
  std::string csv;
};

Outcome topology_table(const TableArgs& a, Json& config) {
  config["g"] = a.g ? Json(*a.g) : Json(nullptr);
  config["csv"] = a.csv.empty() ? Json(nullptr) : Json(a.csv);
  const auto rows = homogeneous_rows(a.g);
  if (!a.csv.empty()) write_file(a.csv, homogeneous_csv(rows));
  Outcome o;
  o.result = Json{{"count", rows.size()}, {"rows", rows}};
  for (const auto& r : rows) {
    std::string line = "g=" + std::to_string(r.g) + " " + r.multiplicities + " " +
                       r.symmetric_pair + " K0=" + r.K0 + " K+=" + r.K_plus + " K-=" + r.K_minus;
    if (!r.parameter_range.empty()) line += "  [" + r.parameter_range + "]";
    o.headline.push_back(line);
  }
  return o;
}

// ---------------------------------------------------------------- driver

Json error_json(const std::string& type, const std::string& message) {
  return Json{{"type", type}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isoparametric doubles: Clifford systems, FKM checks, collar certificates and "
               "topology",
               "isodouble"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write the primary document to this file");
  app.add_option("--seed", g.seed, "Master seed (default $ISODOUBLE_SEED or 42)");
  app.add_option("--tolerance", g.tolerance, "Tolerance override (default $ISODOUBLE_TOLERANCE)");

  auto* clifford = app.add_subcommand("clifford", "Symmetric Clifford systems");
  clifford->require_subcommand(1);
  CliffordBuildArgs cb;
  auto* cbuild = clifford->add_subcommand("build", "Build P_0..P_m on R^{2l}");
  cbuild->add_option("--m", cb.m, "Number of matrices minus one")->required();
  cbuild->add_option("--plus", cb.plus, "Copies of Delta^+")->required();
  cbuild->add_option("--minus", cb.minus, "Copies of Delta^-")->required();
  std::string verify_path;
  auto* cverify = clifford->add_subcommand("verify", "Check a stored Clifford system");
  cverify->add_option("path", verify_path, "CliffordSystem JSON file")->required();

  auto* fkm = app.add_subcommand("fkm", "FKM isoparametric polynomials");
  fkm->require_subcommand(1);
  FkmCheckArgs fc;
  auto* fcheck = fkm->add_subcommand("check", "Monte-Carlo Cartan-Munzner check");
  fcheck->add_option("--system", fc.system, "CliffordSystem JSON file")->required();
  fcheck->add_option("--samples", fc.samples, "Number of samples")->capture_default_str();
  FkmSpectrumArgs fs;
  auto* fspec = fkm->add_subcommand("spectrum", "Principal curvatures of a level hypersurface");
  fspec->add_option("--system", fs.system, "CliffordSystem JSON file");
  fspec->add_option("--level", fs.level, "Level f in (-1, 1)");
  fspec->add_option("--points", fs.points, "Number of sampled points")->capture_default_str();

  auto* dbl = app.add_subcommand("double", "Doubling along the minimal hypersurface");
  dbl->require_subcommand(1);
  CertifyArgs ca;
  auto* dcert = dbl->add_subcommand("certify", "Positive scalar curvature certificate of a collar");
  dcert->add_option("--g", ca.g)->required();
  dcert->add_option("--mplus", ca.mplus)->required();
  dcert->add_option("--mminus", ca.mminus)->required();
  dcert->add_option("--kmax", ca.kmax, "Curvature bound of the bending curve")->capture_default_str();
  dcert->add_option("--rbar", ca.rbar, "Radius where bending starts")->capture_default_str();
  dcert->add_option("--rinf", ca.rinf, "Radius of the product end")->capture_default_str();
  dcert->add_option("--r1", ca.r1, "Radius where the bend starts (default: tightest bend)");
  dcert->add_option("--step", ca.step, "Arclength sampling step")->capture_default_str();
  dcert->add_option("--tail", ca.tail, "Sampled length of the product end")->capture_default_str();
  dcert->add_option("--side", ca.side)->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  dcert->add_flag("--no-reorient", ca.no_reorient, "Keep the plus-side normal on the minus side");
  dcert->add_option("--csv", ca.csv, "Write the sampled curve as CSV");

  auto* topo = app.add_subcommand("topology", "Cohomology and homotopy invariants");
  topo->require_subcommand(1);
  CohomologyArgs co;
  auto* tcoh = topo->add_subcommand("cohomology", "Cohomology of M_+, M_-, Y and the double");
  tcoh->add_option("--g", co.g)->required();
  tcoh->add_option("--mplus", co.mplus)->required();
  tcoh->add_option("--mminus", co.mminus)->required();
  tcoh->add_option("--side", co.side)->check(CLI::IsMember({"plus", "minus"}))->capture_default_str();
  tcoh->add_option("--ring", co.ring, "Coefficient ring override")->check(CLI::IsMember({"Z", "Z2"}));
  DistinguishArgs di;
  auto* tdist = topo->add_subcommand("distinguish", "Mod-p homotopy distinctness of two doubles");
  tdist->add_option("--m", di.m)->required();
  tdist->add_option("--l", di.l)->required();
  tdist->add_option("--q1", di.q1)->required();
  tdist->add_option("--q2", di.q2)->required();
  RecordArgs rc;
  auto* trec = topo->add_subcommand("record", "Characteristic numbers of an FKM family");
  trec->add_option("--m", rc.m)->required();
  trec->add_option("--l", rc.l)->required();
  trec->add_option("--q", rc.q)->required();
  TableArgs ta;
  auto* ttab = topo->add_subcommand("table", "Homogeneous isoparametric hypersurfaces");
  ttab->add_option("--g", ta.g);
  ttab->add_option("--csv", ta.csv, "Write the rows as CSV");

  for (auto* s : {clifford, cbuild, cverify, fkm, fcheck, fspec, dbl, dcert, topo, tcoh, tdist,
                  trec, ttab})
    s->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (auto* s : {cbuild, cverify, fcheck, fspec, dcert, tcoh, tdist, trec, ttab, clifford, fkm,
                    dbl, topo})
      if (s->parsed()) {
        target = s;
        break;
      }
    out << target->help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::string command;
  std::function<Outcome(Json&)> handler;
  std::uint64_t seed = 0;
  double tol = 0.0;
  try {
    seed = effective_seed(g);
    if (cbuild->parsed()) {
      command = "clifford build";
      tol = effective_tolerance(g, kCliffordTolerance);
      handler = [&](Json& c) { return clifford_build(cb, g, c); };
    } else if (cverify->parsed()) {
      command = "clifford verify";
      tol = effective_tolerance(g, kCliffordTolerance);
      handler = [&](Json& c) { return clifford_verify(verify_path, c); };
    } else if (fcheck->parsed()) {
      command = "fkm check";
      tol = effective_tolerance(g, 1e-9);
      handler = [&](Json& c) { return fkm_check(fc, seed, tol, c); };
    } else if (fspec->parsed()) {
      command = "fkm spectrum";
      tol = effective_tolerance(g, 1e-6);
      handler = [&](Json& c) { return fkm_spectrum(fs, seed, tol, c); };
    } else if (dcert->parsed()) {
      command = "double certify";
      tol = effective_tolerance(g, kPositivitySlack);
      handler = [&](Json& c) { return double_certify(ca, c); };
    } else if (tcoh->parsed()) {
      command = "topology cohomology";
      handler = [&](Json& c) { return topology_cohomology(co, c); };
    } else if (tdist->parsed()) {
      command = "topology distinguish";
      handler = [&](Json& c) { return topology_distinguish(di, c); };
    } else if (trec->parsed()) {
      command = "topology record";
      handler = [&](Json& c) { return topology_record(rc, c); };
    } else if (ttab->parsed()) {
      command = "topology table";
      handler = [&](Json& c) { return topology_table(ta, c); };
    } else {
      throw UsageError("no command given");
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Json params = Json::object();
  Json doc;
  int code = kExitFail;
  std::vector<std::string> headline;
  try {
    Outcome o = handler(params);
    code = o.code;
    headline = std::move(o.headline);
    doc["status"] = status_of(code);
    doc["result"] = std::move(o.result);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const InfeasibleGeometryError& e) {
    doc["status"] = "error";
    doc["error"] = error_json("infeasible_geometry", e.what());
    doc["error"]["minimal_r_bar"] = e.minimal_r_bar();
    headline.push_back(std::string("infeasible geometry: ") + e.what());
  } catch (const SingularLevelError& e) {
    doc["status"] = "error";
    doc["error"] = error_json("singular_level", e.what());
    headline.push_back(std::string("singular level: ") + e.what());
  } catch (const DomainError& e) {
    doc["status"] = "error";
    doc["error"] = error_json("domain", e.what());
    headline.push_back(std::string("domain error: ") + e.what());
  } catch (const InapplicableError& e) {
    doc["status"] = "error";
    doc["error"] = error_json("inapplicable", e.what());
    headline.push_back(std::string("inapplicable: ") + e.what());
  } catch (const FormatError& e) {
    doc["status"] = "error";
    doc["error"] = error_json("format", e.what());
    headline.push_back(std::string("malformed input: ") + e.what());
  } catch (const ConsistencyError& e) {
    doc["status"] = "error";
    doc["error"] = error_json("consistency", e.what());
    headline.push_back(std::string("consistency error: ") + e.what());
  } catch (const ConvergenceError& e) {
    doc["status"] = "error";
    doc["error"] = error_json("convergence", e.what());
    headline.push_back(std::string("convergence error: ") + e.what());
  } catch (const std::exception& e) {
    doc["status"] = "error";
    doc["error"] = error_json("internal", e.what());
    headline.push_back(std::string("error: ") + e.what());
  }

  Json config{{"command", command},
              {"parameters", params},
              {"seed", seed},
              {"tolerance", tol == 0.0 ? Json(nullptr) : Json(tol)},
              {"format", g.format},
              {"out", g.out.empty() ? Json(nullptr) : Json(g.out)}};
  Json full{{"config", config}, {"status", doc["status"]}, {"exit_code", code}};
  if (doc.contains("result")) full["result"] = doc["result"];
  if (doc.contains("error")) full["error"] = doc["error"];

  std::ostringstream text;
  if (g.format == "json") {
    text << dump(full);
  } else {
    for (const auto& line : headline) text << line << '\n';
    text << '\n';
    render_human(full, "", text);
  }

  // clifford build sends the system document to --out; every other command
  // sends its report there.
  const bool report_to_file = !g.out.empty() && command != "clifford build";
  if (report_to_file) {
    try {
      write_file(g.out, text.str());
    } catch (const FormatError& e) {
      err << "error: " << e.what() << '\n';
      return kExitFail;
    }
    for (const auto& line : headline) out << line << '\n';
  } else {
    out << text.str();
  }
  if (doc.contains("error")) err << headline.front() << '\n';
  return code;
}

}  // namespace isodouble::cli
