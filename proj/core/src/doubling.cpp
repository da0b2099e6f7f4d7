#include "isodouble/doubling.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "isodouble/errors.hpp"

namespace isodouble {
namespace {

double one_minus_sq(double f) { return (1.0 - f) * (1.0 + f); }

void require_regular(double f, const char* what) {
  if (!(std::abs(f) < 1.0))
    throw SingularLevelError(std::string(what) + ": level f = " + std::to_string(f) +
                             " is singular (|f| >= 1)");
}

}  // namespace

IsoparametricFamily::IsoparametricFamily(int g, int m_plus, int m_minus)
    : g_(g), m_plus_(m_plus), m_minus_(m_minus) {
  if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6)
    throw DomainError("isoparametric family: g must be 1, 2, 3, 4 or 6 (got " +
                      std::to_string(g) + ")");
  if (m_plus < 1 || m_minus < 1)
    throw DomainError("isoparametric family: multiplicities must be positive");
  if ((g % 2 == 1 || g == 6) && m_plus != m_minus)
    throw DomainError("isoparametric family: g = " + std::to_string(g) +
                      " forces equal multiplicities");
  if ((g * (m_plus + m_minus)) % 2 != 0)
    throw DomainError("isoparametric family: (g/2)(m_+ + m_-) must be an integer");
  n_ = g * (m_plus + m_minus) / 2 + 1;
  c_ = g * g * static_cast<double>(m_minus - m_plus) / 2.0;
  f0_ = c_ / (g * static_cast<double>(n_ - 1));
}

std::pair<double, double> IsoparametricFamily::admissible_r() const noexcept {
  const double phase = std::asin(f0_);
  const double half_pi = std::numbers::pi / 2.0;
  return {(-half_pi - phase) / g_, (half_pi - phase) / g_};
}

double f_of_r(const IsoparametricFamily& fam, double r) {
  const auto [lo, hi] = fam.admissible_r();
  if (!(r > lo && r < hi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "f_of_r: r = " << r << " outside the admissible interval (" << lo << ", " << hi << ")";
    throw DomainError(msg.str());
  }
  return std::sin(fam.g() * r + std::asin(fam.f0()));
}

double r_of_f(const IsoparametricFamily& fam, double f) {
  require_regular(f, "r_of_f");
  return (std::asin(f) - std::asin(fam.f0())) / fam.g();
}

double grad_profile(const IsoparametricFamily& fam, double f) {
  return fam.g() * fam.g() * (1.0 - f * f);
}

double lap_profile(const IsoparametricFamily& fam, double f) {
  return fam.c() - fam.g() * static_cast<double>(fam.n() + fam.g() - 1) * f;
}

double mu_square_sum(const IsoparametricFamily& fam, double f) {
  require_regular(f, "mu_square_sum");
  const double n1 = fam.n() - 1;
  return (n1 * (fam.g() - 1) - fam.c() * f + n1 * f * f) / one_minus_sq(f);
}

double H_mean(const IsoparametricFamily& fam, double f) {
  require_regular(f, "H_mean");
  // Closed-form value on the minimal hypersurface.
  if (f == fam.f0()) return 0.0;
  const double n1 = fam.n() - 1;
  return (n1 * f - fam.c() / fam.g()) / std::sqrt(one_minus_sq(f));
}

double a_defect(const IsoparametricFamily& fam, double f) {
  require_regular(f, "a_defect");
  if (f == fam.f0()) return 0.0;
  // H^2 - sum mu^2 = (A2 f^2 + A1 f + A0) / (1 - f^2), split as
  // -A2 + (A1 f + A0 + A2) / (1 - f^2) so that exact cancellations stay exact.
  const double n1 = fam.n() - 1;
  const double g = fam.g();
  const double c = fam.c();
  const double A2 = n1 * n1 - n1;
  const double A1 = c - 2.0 * n1 * c / g;
  const double A0 = c * c / (g * g) - n1 * (g - 1.0);
  return fam.S() - A2 + (A1 * f + (A0 + A2)) / one_minus_sq(f);
}

double a_defect_expanded(const IsoparametricFamily& fam, double f) {
  require_regular(f, "a_defect_expanded");
  const double n1 = fam.n() - 1;
  const double g = fam.g();
  const double c = fam.c();
  const double bracket = n1 * n1 * f * f - (2.0 * c / g) * n1 * f + c * c / (g * g) -
                         n1 * f * f + c * f - (g - 1.0) * n1;
  return (g - 1.0) * n1 + bracket / one_minus_sq(f);
}

double scalar_curvature_oriented(const IsoparametricFamily& fam, double f, double theta, double k,
                                 int orientation) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0))
    throw DomainError("scalar_curvature: theta must lie in [0, pi/2]");
  if (!(k >= 0.0)) throw DomainError("scalar_curvature: curve curvature k must be >= 0");
  const double n = fam.n();
  const double g = fam.g();
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return n * (n - 1.0) * c * c + (n - g - 1.0) * (n - 1.0) * s * s + a_defect(fam, f) * s * s +
         2.0 * k * orientation * H_mean(fam, f) * s;
}

double scalar_curvature(const IsoparametricFamily& fam, double f, double theta, double k) {
  return scalar_curvature_oriented(fam, f, theta, k, +1);
}

double general_scalar(double R_X, std::span<const double> mu, double ric_xi, double theta,
                      double k) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2.0))
    throw DomainError("general_scalar: theta must lie in [0, pi/2]");
  double H = 0.0, sq = 0.0;
  for (double v : mu) {
    H += v;
    sq += v * v;
  }
  const double pairs = 0.5 * (H * H - sq);  // sum_{i<j} mu_i mu_j
  const double A = pairs - ric_xi;
  const double s = std::sin(theta);
  return R_X + 2.0 * A * s * s + 2.0 * k * H * s;
}

std::vector<double> bent_principal_curvatures(std::span<const double> mu, double theta) {
  std::vector<double> out;
  out.reserve(mu.size());
  for (double v : mu) out.push_back(v * std::cos(theta));
  return out;
}

}  // namespace isodouble
