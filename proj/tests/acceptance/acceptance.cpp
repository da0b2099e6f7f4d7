// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "isodouble/bending.hpp"
#include "isodouble/characteristic.hpp"
#include "isodouble/clifford.hpp"
#include "isodouble/cohomology.hpp"
#include "isodouble/doubling.hpp"
#include "isodouble/errors.hpp"
#include "isodouble/fkm.hpp"
#include "isodouble/homogeneous_table.hpp"
#include "isodouble/io.hpp"

using namespace isodouble;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Central-difference Laplacian of F / |z|^2.
double fd_laplacian(const FkmPolynomial& poly, const Vector& z) {
  const double h = 1e-4;
  const double f0 = eval_F(poly, z);
  double lap = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    Vector a = z, b = z;
    a(i) += h;
    b(i) -= h;
    lap += (eval_F(poly, a) - 2.0 * f0 + eval_F(poly, b)) / (h * h);
  }
  return lap / z.squaredNorm();
}

Outcome criterion1() {
  Outcome v;
  const auto t0 = Clock::now();
  const std::vector<std::tuple<int, int, int>> cases = {{1, 1, 0}, {2, 1, 0}, {3, 1, 0},
                                                        {4, 2, 0}, {4, 1, 1}, {5, 1, 0},
                                                        {8, 1, 1}, {9, 1, 0}, {12, 1, 0}};
  double worst = 0.0;
  for (auto [m, a, b] : cases) {
    const auto rep = verify_system(build_system(m, a, b));
    worst = std::max(worst, rep.worst_residual);
    v.require(rep.pass && rep.worst_residual <= 1e-12,
              "(" + std::to_string(m) + "," + std::to_string(a) + "," + std::to_string(b) +
                  ") residual " + fmt(rep.worst_residual));
  }
  const double dt = seconds_since(t0);
  v.require(dt < 10.0, "runtime " + fmt(dt) + " s");
  if (v.pass) v.detail = "9 systems, worst residual " + fmt(worst) + ", " + fmt(dt) + " s";
  return v;
}

Outcome criterion2() {
  Outcome v;
  for (auto [m, a, b] : {std::tuple{4, 2, 0}, std::tuple{4, 1, 1}, std::tuple{8, 1, 1},
                         std::tuple{12, 1, 0}}) {
    const auto sys = build_system(m, a, b);
    const int q = index(sys);
    v.require(q == a - b, "index(" + std::to_string(m) + ") = " + std::to_string(q));
    v.require(index_parity_holds(q, a, b), "parity fails for m = " + std::to_string(m));
  }
  if (v.pass) v.detail = "q = a - b and q = a + b (mod 2) for m in {4, 4, 8, 12}";
  return v;
}

Outcome criterion3() {
  Outcome v;
  const auto t0 = Clock::now();
  double worst_grad = 0.0, worst_lap = 0.0, worst_fd = 0.0;
  for (auto [m, a] : {std::pair{4, 2}, std::pair{3, 2}, std::pair{5, 2}}) {
    const FkmPolynomial poly(build_system(m, a, 0));
    const auto rep = cartan_munzner_check(poly, 1000, kDefaultSeed, 1e-9);
    for (const auto& d : rep.details) {
      if (d.name == "gradient_identity") worst_grad = std::max(worst_grad, d.residual);
      if (d.name == "laplacian_value") worst_lap = std::max(worst_lap, d.residual);
    }
    v.require(rep.pass, "(m,l) = (" + std::to_string(m) + "," + std::to_string(poly.system().l) +
                            ") worst " + fmt(rep.worst_residual));
    std::mt19937_64 rng(kDefaultSeed);
    std::normal_distribution<double> nd;
    for (int i = 0; i < 3; ++i) {
      Vector z(poly.ambient_dim());
      for (auto& x : z) x = nd(rng);
      const double rel = std::abs(fd_laplacian(poly, z) - poly.laplacian_constant()) /
                         std::max(1.0, std::abs(poly.laplacian_constant()));
      worst_fd = std::max(worst_fd, rel);
    }
  }
  v.require(worst_fd <= 1e-5, "finite-difference Laplacian off by " + fmt(worst_fd));
  const double dt = seconds_since(t0);
  v.require(dt < 30.0, "runtime " + fmt(dt) + " s");
  if (v.pass)
    v.detail = "1000 samples each; gradient " + fmt(worst_grad) + ", Laplacian " + fmt(worst_lap) +
               ", FD oracle rel " + fmt(worst_fd) + ", " + fmt(dt) + " s";
  return v;
}

Outcome criterion4() {
  Outcome v;
  const FkmPolynomial poly(build_system(4, 2, 0));
  const IsoparametricFamily fam(4, 4, 3);
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> lev(-0.9, 0.9);
  double worst_const = 0.0, worst_H = 0.0;
  for (int level = 0; level < 5; ++level) {
    const double f = lev(rng);
    std::vector<std::vector<double>> means;
    for (int pt = 0; pt < 3; ++pt) {
      const auto p = sample_level_point(poly, f, sub_seed(kDefaultSeed, 10 * level + pt));
      const auto s = shape_spectrum(poly, p);
      std::vector<int> desc;
      std::vector<double> m;
      for (auto it = s.clusters.rbegin(); it != s.clusters.rend(); ++it) {
        desc.push_back(it->multiplicity);
        m.push_back(it->value);
      }
      v.require(desc == std::vector<int>{4, 3, 4, 3}, "multiplicities at f = " + fmt(f));
      means.push_back(m);
      worst_H = std::max(worst_H, std::abs(s.mean_curvature - H_mean(fam, p.f_value)));
    }
    for (std::size_t k = 0; k < means[0].size(); ++k)
      for (const auto& m : means)
        if (m.size() == means[0].size()) worst_const = std::max(worst_const, std::abs(m[k] - means[0][k]));
  }
  v.require(worst_const <= 1e-6, "cluster means vary by " + fmt(worst_const));
  v.require(worst_H <= 1e-6, "mean curvature off by " + fmt(worst_H));
  const auto s0 = shape_spectrum(poly, sample_level_point(poly, -1.0 / 7.0, kDefaultSeed));
  v.require(std::abs(s0.mean_curvature) <= 1e-6, "trace at f0 = " + fmt(s0.mean_curvature));
  if (v.pass)
    v.detail = "5 levels x 3 points, (4,3,4,3); mean spread " + fmt(worst_const) + ", |H - H_mean| " +
               fmt(worst_H) + ", trace at f0 " + fmt(std::abs(s0.mean_curvature));
  return v;
}

Outcome criterion5() {
  Outcome v;
  std::vector<IsoparametricFamily> fams = {{4, 4, 3}, {4, 6, 9}, {3, 2, 2}, {2, 3, 7}, {6, 2, 2}};
  for (const auto& fam : fams) v.require(a_defect(fam, fam.f0()) == 0.0, "a(f0) != 0");
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst_a = 0.0;
  for (int g : {1, 2, 3, 4, 6}) {
    const IsoparametricFamily fam(g, 1, 1);
    for (int i = 0; i < 100; ++i) worst_a = std::max(worst_a, std::abs(a_defect(fam, U(rng))));
  }
  v.require(worst_a <= 1e-12, "case (A) a = " + fmt(worst_a));
  double worst_forms = 0.0;
  std::uniform_int_distribution<std::size_t> pick(0, fams.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto& fam = fams[pick(rng)];
    const double f = U(rng);
    const double a = a_defect(fam, f), b = a_defect_expanded(fam, f);
    worst_forms = std::max(worst_forms, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  v.require(worst_forms <= 1e-12, "two forms differ by " + fmt(worst_forms));
  if (v.pass)
    v.detail = "a(f0) = 0 exactly; case (A) max |a| " + fmt(worst_a) + "; forms agree to " +
               fmt(worst_forms);
  return v;
}

Outcome criterion6() {
  Outcome v;
  std::string a_text, b_text;

  {  // Case (A): g = 3, (1, 1), k_max = 1/2.
    const auto t0 = Clock::now();
    const IsoparametricFamily fam(3, 1, 1);
    const double reach = fam.admissible_r().second;
    CurveRequest req;
    req.k_max = 0.5;
    req.r_inf = 0.01;
    req.r_bar = 0.999 * reach;
    req.step = 1e-3;
    try {
      const auto curve = build_curve(req);
      const auto cert = certify(curve, fam);
      v.require(validate_curve(curve).pass, "case (A) curve invalid");
      v.require(cert.pass && cert.min_R >= -1e-9, "case (A) min_R " + fmt(cert.min_R));
      a_text = "case (A) min_R " + fmt(cert.min_R);
    } catch (const InfeasibleGeometryError& e) {
      v.require(false, "case (A) infeasible: k <= 1/2 needs r_bar >= " + fmt(e.minimal_r_bar()) +
                           " but the tube ends at r = " + fmt(reach));
    }
    const double dt = seconds_since(t0);
    v.require(dt < 5.0, "case (A) runtime " + fmt(dt) + " s");
  }

  {  // Case (B): (4, 4, 3), n = 15.
    const auto t0 = Clock::now();
    const IsoparametricFamily fam(4, 4, 3);
    CurveRequest req;
    req.r_bar = 0.4;
    req.r_inf = 0.02;
    req.k_max = 4.0;
    req.step = 1e-4;
    const auto curve = build_curve(req);
    const auto rep = validate_curve(curve);
    const auto cert = certify(curve, fam);
    v.require(rep.pass, "case (B) curve residual " + fmt(rep.worst_residual));
    v.require(curve.step <= 1e-3, "case (B) step " + fmt(curve.step));
    v.require(cert.pass && cert.min_R > 0.0, "case (B) min_R " + fmt(cert.min_R));
    const double dt = seconds_since(t0);
    v.require(dt < 5.0, "case (B) runtime " + fmt(dt) + " s");
    b_text = "case (B) min_R " + fmt(cert.min_R) + " over " + std::to_string(cert.samples) +
             " samples (k_max 4, step 1e-4)";
  }
  if (v.pass) v.detail = a_text + "; " + b_text;
  else v.detail += "; " + b_text;
  return v;
}

Outcome criterion7() {
  Outcome v;
  int checked = 0;
  std::vector<IsoparametricFamily> fams;
  for (const auto& row : homogeneous_instances()) fams.emplace_back(row.g, *row.m_plus, *row.m_minus);
  for (int m = 1; m <= 12; ++m)
    for (long long l = delta_dim(m); l <= 32; l += delta_dim(m))
      if (l - m - 1 > 0) fams.emplace_back(4, m, static_cast<int>(l - m - 1));
  for (const auto& fam : fams)
    for (Side s : {Side::plus, Side::minus}) {
      ++checked;
      const auto d = double_cohomology(fam, s);
      v.require(d.poincare_dual(), "duality fails for (" + std::to_string(fam.g()) + "," +
                                       std::to_string(fam.m_plus()) + "," +
                                       std::to_string(fam.m_minus()) + ")");
    }
  const auto mz = munzner_cohomology(IsoparametricFamily(4, 4, 3));
  v.require(mz.M_plus.support() == std::vector<int>{0, 3, 7, 10}, "(4,4,3) M_+ support");
  if (v.pass)
    v.detail = std::to_string(checked) + " doubles (14 table rows + FKM l <= 32, both sides) dual; " +
               "(4,4,3) M_+ in degrees {0,3,7,10}";
  return v;
}

Outcome criterion8() {
  Outcome v;
  std::vector<bool> prime(10001, true);
  prime[0] = prime[1] = false;
  for (int i = 2; i * i <= 10000; ++i)
    if (prime[i])
      for (int j = i * i; j <= 10000; j += i) prime[j] = false;
  for (int p = 2; p <= 10000; ++p)
    if (wilson_check(p) != prime[p]) v.require(false, "wilson(" + std::to_string(p) + ")");

  const auto w = wu_residue(4, 2);
  const bool pair_ok = w.p == 3 && ((w.pair.first == 2 && w.pair.second == 1) ||
                                    (w.pair.first == 1 && w.pair.second == 2));
  v.require(pair_ok, "wu_residue(4,2)");
  v.require(distinguish(4, 8, 0, 2).verdict == isodouble::Verdict::distinct, "distinguish(4,8,0,2)");

  int sweeps = 0;
  for (int m : {4, 8, 12}) {
    const int l = static_cast<int>(4 * delta_dim(m));
    for (long long a = -4; a <= 4; ++a)
      for (long long b = -4; b <= 4; ++b) {
        ++sweeps;
        const auto d = distinguish(m, l, a, b).verdict;
        if (d != distinguish(m, l, b, a).verdict || d != distinguish(m, l, -a, b).verdict ||
            d != distinguish(m, l, a, -b).verdict)
          v.require(false, "symmetry at m = " + std::to_string(m));
      }
  }
  if (v.pass)
    v.detail = "Wilson = primality for p <= 10^4; wu(4,2) = (3,{2,1}); (4,8,0,2) distinct; " +
               std::to_string(sweeps) + " sweep pairs symmetric";
  return v;
}

Outcome criterion9() {
  Outcome v;
  const auto dir = std::filesystem::temp_directory_path() / "isodouble_acceptance";
  std::filesystem::create_directories(dir);
  const std::string sys = (dir / "m4l8.json").string();
  auto call = [](const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
  };
  int code = 0;
  call({"clifford", "build", "--m", "4", "--plus", "2", "--minus", "0", "--out", sys}, code);
  v.require(code == 0, "clifford build failed");

  const std::vector<std::vector<std::string>> cmds = {
      {"clifford", "build", "--m", "8", "--plus", "1", "--minus", "1"},
      {"clifford", "verify", sys},
      {"fkm", "check", "--system", sys, "--samples", "500", "--seed", "17"},
      {"fkm", "spectrum", "--system", sys, "--level", "0.25", "--points", "3", "--seed", "3"},
      {"double", "certify", "--g", "4", "--mplus", "4", "--mminus", "3", "--rbar", "0.4", "--rinf",
       "0.02", "--kmax", "4", "--step", "1e-4"},
      {"double", "certify", "--g", "3", "--mplus", "1", "--mminus", "1", "--kmax", "0.5"},
      {"topology", "cohomology", "--g", "4", "--mplus", "4", "--mminus", "3", "--side", "plus"},
      {"topology", "distinguish", "--m", "4", "--l", "8", "--q1", "0", "--q2", "2"},
      {"topology", "table", "--g", "3"}};
  for (auto args : cmds) {
    args.push_back("--format");
    args.push_back("json");
    int c1 = 0, c2 = 0;
    const std::string a = call(args, c1), b = call(args, c2);
    std::string joined;
    for (const auto& s : args) joined += s + " ";
    v.require(c1 == c2 && a == b && !a.empty(), "differs: " + joined);
  }
  std::filesystem::remove_all(dir);
  if (v.pass) v.detail = std::to_string(cmds.size()) + " commands reproduced byte-for-byte";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Clifford construction", criterion1},  {"Index identity", criterion2},
      {"Cartan-Munzner", criterion3},         {"Spectrum", criterion4},
      {"Curvature formulas", criterion5},     {"Positivity certification", criterion6},
      {"Topology", criterion7},               {"Mod-p machinery", criterion8},
      {"Determinism", criterion9}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": "
              << v.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
