#pragma once

#include <span>
#include <utility>
#include <vector>

namespace isodouble {

/// An isoparametric family in S^n: g distinct principal curvatures with
/// multiplicities alternating (m_+, m_-).
///
/// Derived constants: n - 1 = (g/2)(m_+ + m_-), c = g^2 (m_- - m_+) / 2,
/// f0 = c / (g (n - 1)) (the minimal level) and S = (g - 1)(n - 1), the
/// squared length of the second fundamental form of the minimal hypersurface.
class IsoparametricFamily {
 public:
  /// Throws DomainError unless g is in {1, 2, 3, 4, 6}, both multiplicities
  /// are positive, m_+ = m_- for odd g and g = 6, and (g/2)(m_+ + m_-) is
  /// an integer.
  IsoparametricFamily(int g, int m_plus, int m_minus);

  int g() const noexcept { return g_; }
  int m_plus() const noexcept { return m_plus_; }
  int m_minus() const noexcept { return m_minus_; }
  int n() const noexcept { return n_; }
  double c() const noexcept { return c_; }
  double f0() const noexcept { return f0_; }
  double S() const noexcept { return static_cast<double>((g_ - 1) * (n_ - 1)); }

  /// (m_+, m_-) = (1, 1): the n - g - 1 = 0 case where a_defect vanishes.
  bool case_a() const noexcept { return m_plus_ == 1 && m_minus_ == 1; }

  /// Open interval of signed distances r from the minimal hypersurface that
  /// stay inside the tube between the focal submanifolds.
  std::pair<double, double> admissible_r() const noexcept;

  friend bool operator==(const IsoparametricFamily&, const IsoparametricFamily&) = default;

 private:
  int g_;
  int m_plus_;
  int m_minus_;
  int n_;
  double c_;
  double f0_;
};

/// Level of the parallel hypersurface at signed distance r from the minimal
/// one: f(r) = sin(g r + asin f0), the solution of df/dr = g sqrt(1 - f^2)
/// with f(0) = f0. Throws DomainError outside admissible_r().
double f_of_r(const IsoparametricFamily& fam, double r);

/// Inverse of f_of_r. Throws SingularLevelError unless |f| < 1.
double r_of_f(const IsoparametricFamily& fam, double f);

/// |grad f|^2 = b(f) = g^2 (1 - f^2).
double grad_profile(const IsoparametricFamily& fam, double f);

/// Delta f = c - g (n + g - 1) f on the unit sphere.
double lap_profile(const IsoparametricFamily& fam, double f);

/// Sum of squared principal curvatures of the level {f}:
/// ((n-1)(g-1) - c f + (n-1) f^2) / (1 - f^2).
double mu_square_sum(const IsoparametricFamily& fam, double f);

/// Mean curvature H = sum mu_i of the level {f} with respect to
/// xi = grad f / |grad f|: ((n-1) f - c/g) / sqrt(1 - f^2).
double H_mean(const IsoparametricFamily& fam, double f);

/// a = H^2 - sum mu_i^2 + (g-1)(n-1), i.e. the change of 2 sum_{i<j} mu_i mu_j
/// relative to the minimal hypersurface.
double a_defect(const IsoparametricFamily& fam, double f);

/// The same quantity through the expanded rational expression
/// (g-1)(n-1) + [(n-1)^2 f^2 - (2c/g)(n-1) f + c^2/g^2 - (n-1) f^2 + c f
///              - (g-1)(n-1)] / (1 - f^2).
double a_defect_expanded(const IsoparametricFamily& fam, double f);

/// Scalar curvature of the bent collar at level f, bend angle theta and curve
/// curvature k:
/// n(n-1) cos^2 + (n-g-1)(n-1) sin^2 + a sin^2 + 2 k H sin.
double scalar_curvature(const IsoparametricFamily& fam, double f, double theta, double k);

/// Same as scalar_curvature with H replaced by `orientation * H`, for collars
/// whose outward normal is -xi (the S^n_- side).
double scalar_curvature_oriented(const IsoparametricFamily& fam, double f, double theta, double k,
                                 int orientation);

/// General collar formula R_X + 2 A sin^2(theta) + 2 k H sin(theta), with
/// A = sum_{i<j} mu_i mu_j - ric_xi and H = sum mu_i.
/// Throws DomainError unless theta is in [0, pi/2].
double general_scalar(double R_X, std::span<const double> mu, double ric_xi, double theta,
                      double k);

/// Principal curvatures mu_i cos(theta) of the level hypersurfaces inside
/// the bent region.
std::vector<double> bent_principal_curvatures(std::span<const double> mu, double theta);

}  // namespace isodouble
