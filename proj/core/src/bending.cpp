#include "isodouble/bending.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "isodouble/errors.hpp"

namespace isodouble {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kEndTolerance = 1e-9;
constexpr double kOdeTolerance = 1e-8;

// Quintic smoothstep 6x^5 - 15x^4 + 10x^3 and its antiderivative.
double smoothstep(double x) { return x * x * x * (x * (6.0 * x - 15.0) + 10.0); }
double smoothstep_integral(double x) {
  const double x2 = x * x;
  return x2 * x2 * (x * (x - 3.0) + 2.5);
}

// Normalized bend profile on u in [0, 1]: ramp up, plateau, ramp down.
double profile(double u) {
  constexpr double rho = kRampFraction;
  if (u <= 0.0 || u >= 1.0) return 0.0;
  if (u < rho) return smoothstep(u / rho);
  if (u > 1.0 - rho) return smoothstep((1.0 - u) / rho);
  return 1.0;
}

double profile_integral(double u) {
  constexpr double rho = kRampFraction;
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0 - rho;
  if (u < rho) return rho * smoothstep_integral(u / rho);
  if (u > 1.0 - rho) return (1.0 - rho) - rho * smoothstep_integral((1.0 - u) / rho);
  return rho / 2.0 + (u - rho);
}

// Arclength of a quarter turn with plateau curvature kappa.
double bend_length_for(double kappa) { return kHalfPi / (kappa * (1.0 - kRampFraction)); }

struct Layout {
  double straight = 0.0;  // length of the theta = 0 piece
  double bend = 0.0;      // length of the bend
  double kappa = 0.0;

  double theta(double s) const {
    if (s <= straight) return 0.0;
    if (s >= straight + bend) return kHalfPi;
    return std::min(kHalfPi, kappa * bend * profile_integral((s - straight) / bend));
  }
  double k(double s) const {
    if (s <= straight || s >= straight + bend) return 0.0;
    return kappa * profile((s - straight) / bend);
  }
};

// Integrates (cos theta, sin theta) over [a, b] splitting at profile breakpoints.
std::pair<double, double> integrate_direction(const Layout& lay, double a, double b) {
  using boost::math::quadrature::gauss;
  const double rho = kRampFraction;
  const double breaks[] = {lay.straight, lay.straight + rho * lay.bend,
                           lay.straight + (1.0 - rho) * lay.bend, lay.straight + lay.bend};
  std::vector<double> cuts{a};
  for (double x : breaks)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);

  double c = 0.0, s = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double lo = cuts[i - 1], hi = cuts[i];
    const double mid = 0.5 * (lo + hi);
    if (mid <= lay.straight) {
      c += hi - lo;
    } else if (mid >= lay.straight + lay.bend) {
      s += hi - lo;
    } else {
      c += gauss<double, 10>::integrate([&](double x) { return std::cos(lay.theta(x)); }, lo, hi);
      s += gauss<double, 10>::integrate([&](double x) { return std::sin(lay.theta(x)); }, lo, hi);
    }
  }
  return {c, s};
}

double unit_bend_width() {
  Layout lay;
  lay.kappa = 1.0;
  lay.bend = bend_length_for(1.0);
  constexpr int pieces = 64;
  double w = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double a = lay.bend * i / pieces, b = lay.bend * (i + 1) / pieces;
    w += integrate_direction(lay, a, b).first;
  }
  return w;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

double bend_width(double k_peak) {
  static const double unit = unit_bend_width();
  return unit / k_peak;
}

BendingCurve build_curve(const CurveRequest& req) {
  if (!(req.step > 0.0)) throw DomainError("build_curve: step must be > 0");
  if (!(req.k_max > 0.0)) throw DomainError("build_curve: k_max must be > 0");
  if (!(req.r_inf > 0.0)) throw DomainError("build_curve: r_inf must be > 0");
  if (!(req.r_inf <= req.r_bar)) throw DomainError("build_curve: r_inf must not exceed r_bar");
  if (!(req.tail_length >= 0.0)) throw DomainError("build_curve: tail_length must be >= 0");

  BendingCurve curve;
  curve.r_bar = req.r_bar;
  curve.r_inf = req.r_inf;
  curve.k_max = req.k_max;

  if (req.r_inf == req.r_bar) {
    curve.identity = true;
    curve.r_1 = req.r_bar;
    curve.step = req.step;
    curve.samples.push_back({0.0, req.r_bar, 0.0, 0.0, 0.0});
    return curve;
  }

  const double minimal_r_bar = req.r_inf + bend_width(req.k_max);
  double kappa = req.k_max;
  double r1 = minimal_r_bar;
  if (req.r_1) {
    r1 = *req.r_1;
    if (!(r1 >= req.r_inf && r1 < req.r_bar))
      throw DomainError("build_curve: need r_inf <= r_1 < r_bar");
    kappa = bend_width(1.0) / (r1 - req.r_inf);
    if (!(kappa <= req.k_max * (1.0 + 1e-12)))
      throw InfeasibleGeometryError("build_curve: a quarter turn with k <= " + fmt(req.k_max) +
                                        " needs r_1 - r_inf >= " + fmt(bend_width(req.k_max)) +
                                        "; minimal r_bar is " + fmt(minimal_r_bar),
                                    minimal_r_bar);
  } else if (r1 > req.r_bar) {
    throw InfeasibleGeometryError("build_curve: the bend does not fit in [r_inf, r_bar] = [" +
                                      fmt(req.r_inf) + ", " + fmt(req.r_bar) + "] with k <= " +
                                      fmt(req.k_max) + "; minimal r_bar is " + fmt(minimal_r_bar),
                                  minimal_r_bar);
  }

  Layout lay;
  lay.kappa = kappa;
  lay.straight = req.r_bar - r1;
  lay.bend = bend_length_for(kappa);

  curve.r_1 = r1;
  curve.k_peak = kappa;
  curve.bend_length = lay.bend;

  const double total = lay.straight + lay.bend + req.tail_length;
  const auto n = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(total / req.step)));
  const double h = total / static_cast<double>(n);
  curve.step = h;

  curve.samples.reserve(n + 1);
  double r = req.r_bar, t = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = (i == n) ? total : h * static_cast<double>(i);
    if (i > 0) {
      const double prev = curve.samples.back().s;
      const auto [dc, ds] = integrate_direction(lay, prev, s);
      r -= dc;
      t += ds;
    }
    curve.samples.push_back({s, r, t, lay.theta(s), lay.k(s)});
  }
  return curve;
}

VerificationReport validate_curve(const BendingCurve& curve) {
  VerificationReport rep;
  rep.check_name = "bending_curve";
  rep.tolerance = kOdeTolerance;
  rep.samples = curve.samples.size();
  const auto& S = curve.samples;
  if (S.empty()) {
    rep.add({"nonempty", 1.0, 0.0, false, "curve has no samples"});
    return rep;
  }
  if (curve.identity) {
    const double res = std::abs(S.front().theta) + std::abs(S.front().k);
    rep.add({"identity", res, kEndTolerance, true, "unbent collar"});
    return rep;
  }

  double start_res = std::abs(S.front().r - curve.r_bar) + std::abs(S.front().t);
  for (const auto& p : S) {
    if (p.r < curve.r_1 - kEndTolerance) break;
    start_res = std::max(start_res, std::abs(p.theta) + std::abs(p.k) + std::abs(p.t));
  }
  rep.add({"vertical_start", start_res, kEndTolerance, true,
           "theta = 0, k = 0, t = 0 on r in [r_1, r_bar]"});

  const auto& last = S.back();
  const double end_res =
      std::abs(last.theta - kHalfPi) + std::abs(last.k) + std::abs(last.r - curve.r_inf);
  rep.add({"horizontal_end", end_res, kEndTolerance, true, "theta = pi/2, k = 0 at r = r_inf"});

  double k_violation = 0.0, back_steps = 0.0;
  for (std::size_t i = 0; i < S.size(); ++i) {
    k_violation = std::max({k_violation, -S[i].k, S[i].k - curve.k_max});
    if (S[i].theta < 0.0 || S[i].theta > kHalfPi) k_violation = std::max(k_violation, 1.0);
    if (i > 0) back_steps = std::max(back_steps, S[i - 1].theta - S[i].theta);
  }
  rep.add({"curvature_bounds", k_violation, 1e-12, true, "0 <= k <= k_max, theta in [0, pi/2]"});
  rep.add({"theta_monotone", back_steps, 0.0, true, "theta nondecreasing"});

  double dtheta = 0.0, dr = 0.0, dt = 0.0, spacing = 0.0;
  for (std::size_t i = 1; i + 1 < S.size(); ++i) {
    const auto &a = S[i - 1], &b = S[i], &c = S[i + 1];
    const double h2 = c.s - a.s;
    spacing = std::max(spacing, std::abs((b.s - a.s) - (c.s - b.s)));
    auto simpson = [&](double fa, double fb, double fc) { return (fa + 4.0 * fb + fc) / 6.0; };
    dtheta = std::max(dtheta, std::abs((c.theta - a.theta) / h2 - simpson(a.k, b.k, c.k)));
    dr = std::max(dr, std::abs((c.r - a.r) / h2 +
                               simpson(std::cos(a.theta), std::cos(b.theta), std::cos(c.theta))));
    dt = std::max(dt, std::abs((c.t - a.t) / h2 -
                               simpson(std::sin(a.theta), std::sin(b.theta), std::sin(c.theta))));
  }
  rep.add({"uniform_spacing", spacing, 1e-12, true, "arclength samples equally spaced"});
  rep.add({"dtheta_ds", dtheta, kOdeTolerance, true, "d theta / ds = k"});
  rep.add({"dr_ds", dr, kOdeTolerance, true, "dr / ds = -cos theta"});
  rep.add({"dt_ds", dt, kOdeTolerance, true, "dt / ds = sin theta"});
  return rep;
}

PositivityCertificate certify(const BendingCurve& curve, const IsoparametricFamily& family,
                              const CertifyOptions& options) {
  if (curve.samples.empty()) throw DomainError("certify: curve has no samples");
  const double sign = options.side == CollarSide::plus ? 1.0 : -1.0;
  const int orientation =
      (options.side == CollarSide::minus && options.reorient_normal) ? -1 : +1;

  double r_lo = std::numeric_limits<double>::infinity(), r_hi = 0.0;
  for (const auto& p : curve.samples) {
    r_lo = std::min(r_lo, p.r);
    r_hi = std::max(r_hi, p.r);
  }
  const auto [adm_lo, adm_hi] = family.admissible_r();
  const double reach = options.side == CollarSide::plus ? adm_hi : -adm_lo;
  if (!(r_lo > 0.0 && r_hi < reach))
    throw DomainError("certify: curve spans r in [" + fmt(r_lo) + ", " + fmt(r_hi) +
                      "] but the tube on the " +
                      (options.side == CollarSide::plus ? std::string("plus") : "minus") +
                      " side only reaches r < " + fmt(reach) + " before the focal submanifold");

  PositivityCertificate cert{.family = family, .options = options};
  cert.samples = curve.samples.size();
  const double n = family.n(), g = family.g();
  cert.unconstrained_bound = (n - g - 1.0) * (n - 1.0);
  cert.min_R = std::numeric_limits<double>::infinity();
  cert.lower_bound_used = family.case_a() ? 0.0 : std::numeric_limits<double>::infinity();

  bool bound_ok = true;
  bool in_zero = false;
  for (const auto& p : curve.samples) {
    const double f = f_of_r(family, sign * p.r);
    const double R = scalar_curvature_oriented(family, f, p.theta, p.k, orientation);
    if (R < cert.min_R) {
      cert.min_R = R;
      cert.argmin = p;
      cert.argmin_f = f;
    }
    if (!family.case_a()) {
      const double s = std::sin(p.theta);
      const double bound = cert.unconstrained_bound + a_defect(family, f) * s * s +
                           2.0 * p.k * orientation * H_mean(family, f) * s;
      cert.lower_bound_used = std::min(cert.lower_bound_used, bound);
      if (R < bound - kPositivitySlack) bound_ok = false;
    }
    if (std::abs(R) <= kPositivitySlack) {
      if (!in_zero) cert.zero_set.push_back({p.s, p.s});
      cert.zero_set.back().s_end = p.s;
      in_zero = true;
    } else {
      in_zero = false;
    }
  }

  cert.pass = cert.min_R >= -kPositivitySlack && bound_ok;
  if (family.case_a())
    cert.note = "case (A): a_defect vanishes identically, R = n(n-1)cos^2 + 2kH sin";
  else
    cert.note = "case (B): R >= (n-g-1)(n-1) + a sin^2 + 2kH sin";
  return cert;
}

}  // namespace isodouble
