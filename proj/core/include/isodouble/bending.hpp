#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isodouble/doubling.hpp"
#include "isodouble/report.hpp"

namespace isodouble {

/// One sample of the collar curve in the (r, t) plane.
struct CurveSample {
  double s = 0.0;      ///< arclength
  double r = 0.0;      ///< distance from the minimal hypersurface
  double t = 0.0;      ///< product coordinate
  double theta = 0.0;  ///< tangent angle, in [0, pi/2]
  double k = 0.0;      ///< curvature d theta / ds
};

/// Geometry request for build_curve.
struct CurveRequest {
  double r_bar = 2.5;
  /// Radius where the bend starts. When absent the bend is run at the full
  /// curvature k_max and r_1 = r_inf + (bend width).
  std::optional<double> r_1;
  double r_inf = 0.05;
  double k_max = 0.5;
  double step = 1e-3;
  /// Length of the sampled horizontal end segment.
  double tail_length = 1.0;
};

/// Planar collar curve: a straight piece t = 0 from r_bar to r_1 (theta = 0),
/// a bend whose curvature rises and falls through quintic smoothstep ramps
/// while theta turns from 0 to pi/2, then a straight piece r = r_inf
/// (theta = pi/2). Samples are uniform in arclength.
struct BendingCurve {
  std::vector<CurveSample> samples;
  double r_bar = 0.0;
  double r_1 = 0.0;
  double r_inf = 0.0;
  double k_max = 0.0;   ///< requested bound
  double k_peak = 0.0;  ///< curvature on the plateau of the bend
  double bend_length = 0.0;
  double step = 0.0;  ///< actual uniform arclength spacing
  /// r_inf == r_bar: no bend at all, the metric is left unchanged.
  bool identity = false;
};

/// Fraction of the bend spent on each curvature ramp.
inline constexpr double kRampFraction = 0.25;

/// Radial width of a quarter turn whose plateau curvature is k_peak.
double bend_width(double k_peak);

/// Throws DomainError on an invalid request (ordering of radii, k_max <= 0,
/// step <= 0) and InfeasibleGeometryError, carrying the minimal admissible
/// r_bar, when the bend cannot fit with k <= k_max.
BendingCurve build_curve(const CurveRequest& request);

/// Checks the end conditions, 0 <= k <= k_max, monotone theta and the ODEs
/// d theta/ds = k, dr/ds = -cos theta, dt/ds = sin theta (Simpson residuals
/// over consecutive sample triples, tolerance 1e-8).
VerificationReport validate_curve(const BendingCurve& curve);

enum class CollarSide { plus, minus };

struct CertifyOptions {
  CollarSide side = CollarSide::plus;
  /// On the minus side measure curvatures against the normal pointing away
  /// from the minimal hypersurface (-grad f / |grad f|). Disabling this
  /// evaluates the plus-side formula on the wrong side and is only useful
  /// to exhibit a failing certificate.
  bool reorient_normal = true;
};

struct ZeroInterval {
  double s_begin = 0.0;
  double s_end = 0.0;
};

struct PositivityCertificate {
  IsoparametricFamily family;
  CertifyOptions options;
  double min_R = 0.0;
  CurveSample argmin{};
  double argmin_f = 0.0;
  /// Case (B): min over samples of (n-g-1)(n-1) + a sin^2 + 2kH sin.
  /// Case (A): 0.
  double lower_bound_used = 0.0;
  /// (n-g-1)(n-1), the minimum of the theta-only part.
  double unconstrained_bound = 0.0;
  bool pass = false;
  std::size_t samples = 0;
  /// Maximal runs of samples with |R| <= 1e-9.
  std::vector<ZeroInterval> zero_set{};
  std::string note{};
};

inline constexpr double kPositivitySlack = 1e-9;

/// Evaluates scalar_curvature along every curve sample (r -> f via f_of_r).
/// Throws DomainError when the curve leaves the admissible r-interval of the
/// family on the requested side.
PositivityCertificate certify(const BendingCurve& curve, const IsoparametricFamily& family,
                              const CertifyOptions& options = {});

}  // namespace isodouble
