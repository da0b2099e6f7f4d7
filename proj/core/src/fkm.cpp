#include "isodouble/fkm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "isodouble/errors.hpp"

namespace isodouble {
namespace {

void check_dim(const FkmPolynomial& poly, const Vector& z, const char* what) {
  if (z.size() != poly.ambient_dim())
    throw DomainError(std::string(what) + ": expected a vector of dimension " +
                      std::to_string(poly.ambient_dim()) + ", got " + std::to_string(z.size()));
}

Vector random_direction(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector z(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) z(i) = normal(rng);
  } while (z.norm() < 1e-8);
  return z.normalized();
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

FkmPolynomial::FkmPolynomial(CliffordSystem system) : system_(std::move(system)) {
  if (!system_.fkm_admissible())
    throw DomainError("FKM polynomial requires l - m - 1 > 0 (m = " + std::to_string(system_.m) +
                      ", l = " + std::to_string(system_.l) + ")");
  if (system_.matrices.size() != static_cast<std::size_t>(system_.m) + 1)
    throw DomainError("FKM polynomial: system must carry m + 1 matrices");
}

double eval_F(const FkmPolynomial& poly, const Vector& z) {
  check_dim(poly, z, "eval_F");
  const double r2 = z.squaredNorm();
  double sum = 0.0;
  for (const auto& P : poly.system().matrices) {
    const double s = z.dot(P * z);
    sum += s * s;
  }
  return r2 * r2 - 2.0 * sum;
}

Vector grad_F(const FkmPolynomial& poly, const Vector& z) {
  check_dim(poly, z, "grad_F");
  Vector g = 4.0 * z.squaredNorm() * z;
  for (const auto& P : poly.system().matrices) {
    const Vector Pz = P * z;
    g -= 8.0 * z.dot(Pz) * Pz;
  }
  return g;
}

Matrix hess_F(const FkmPolynomial& poly, const Vector& z) {
  check_dim(poly, z, "hess_F");
  const Eigen::Index N = z.size();
  Matrix H = 4.0 * z.squaredNorm() * Matrix::Identity(N, N) + 8.0 * z * z.transpose();
  for (const auto& P : poly.system().matrices) {
    const Vector Pz = P * z;
    H -= 16.0 * Pz * Pz.transpose() + 8.0 * z.dot(Pz) * P;
  }
  return H;
}

double laplacian_F(const FkmPolynomial& poly, const Vector& z) { return hess_F(poly, z).trace(); }

Vector spherical_gradient(const FkmPolynomial& poly, const Vector& z) {
  const Vector g = grad_F(poly, z);
  return g - z.dot(g) * z;
}

VerificationReport cartan_munzner_check(const FkmPolynomial& poly, std::uint64_t samples,
                                        std::uint64_t seed, double tolerance) {
  if (samples == 0) throw DomainError("cartan_munzner_check: samples must be >= 1");

  VerificationReport report;
  report.check_name = "cartan_munzner";
  report.tolerance = tolerance;
  report.samples = samples;
  report.seed = seed;

  const double expected_lap = poly.laplacian_constant();
  double worst_grad = 0.0, worst_lap = 0.0, worst_sphere = 0.0;
  double lap_min = std::numeric_limits<double>::infinity();
  double lap_max = -std::numeric_limits<double>::infinity();
  double worst_ratio = -1.0;
  Vector worst_point;

  for (std::uint64_t i = 0; i < samples; ++i) {
    auto rng = sample_engine(seed, i);
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    const Vector u = random_direction(rng, poly.ambient_dim());
    const Vector z = radius(rng) * u;

    const double r2 = z.squaredNorm();
    const double r6 = r2 * r2 * r2;
    const double grad_res = std::abs(grad_F(poly, z).squaredNorm() / (16.0 * r6) - 1.0);
    const double lap = laplacian_F(poly, z) / r2;
    const double lap_res = std::abs(lap - expected_lap);
    const double f = eval_F(poly, u);
    const double sphere_res =
        std::abs(spherical_gradient(poly, u).squaredNorm() - 16.0 * (1.0 - f * f));

    worst_grad = std::max(worst_grad, grad_res);
    worst_lap = std::max(worst_lap, lap_res);
    worst_sphere = std::max(worst_sphere, sphere_res);
    lap_min = std::min(lap_min, lap);
    lap_max = std::max(lap_max, lap);

    const double ratio = std::max({grad_res, lap_res, sphere_res}) / tolerance;
    if (!(ratio <= worst_ratio)) {
      worst_ratio = std::isnan(ratio) ? std::numeric_limits<double>::infinity() : ratio;
      worst_point = z;
    }
  }

  report.add({"gradient_identity", worst_grad, tolerance, true,
              "max | |grad F|^2 / (16 |z|^6) - 1 |"});
  report.add({"laplacian_value", worst_lap, tolerance, true,
              "max | Delta F / |z|^2 - 8 (m_- - m_+) |, expected " + std::to_string(expected_lap)});
  report.add({"laplacian_constancy", lap_max - lap_min, tolerance, true,
              "max - min of Delta F / |z|^2 over the samples"});
  report.add({"spherical_gradient_identity", worst_sphere, tolerance, true,
              "max | |grad_S f|^2 - 16 (1 - f^2) | on the unit sphere"});
  if (!report.pass) report.offending_point = to_std(worst_point);
  return report;
}

LevelPoint sample_level_point(const FkmPolynomial& poly, double f_target, std::uint64_t seed) {
  if (!(f_target > -1.0 && f_target < 1.0))
    throw DomainError("sample_level_point: level must lie in (-1, 1); f = " +
                      std::to_string(f_target) + " is a focal (singular) level");

  constexpr int kMaxIterations = 100;
  constexpr int kMaxRestarts = 10;
  constexpr double kTolerance = 1e-10;
  constexpr double kMaxStep = 0.5;

  for (int attempt = 0; attempt <= kMaxRestarts; ++attempt) {
    auto rng = sample_engine(seed, static_cast<std::uint64_t>(attempt));
    Vector z = random_direction(rng, poly.ambient_dim());
    for (int it = 0; it < kMaxIterations; ++it) {
      const double residual = eval_F(poly, z) - f_target;
      if (std::abs(residual) <= 0.1 * kTolerance) break;
      const Vector g = spherical_gradient(poly, z);
      const double g2 = g.squaredNorm();
      if (g2 < 1e-24) break;
      Vector step = (residual / g2) * g;
      const double len = step.norm();
      if (len > kMaxStep) step *= kMaxStep / len;
      z = (z - step).normalized();
    }
    const double f = eval_F(poly, z);
    const double gn = spherical_gradient(poly, z).norm();
    if (std::abs(f - f_target) <= kTolerance && gn > 0.0) {
      LevelPoint p;
      p.z = z;
      p.f_value = f;
      p.gradient_norm = gn;
      p.seed = seed;
      p.restarts = attempt;
      return p;
    }
  }
  throw ConvergenceError("sample_level_point: Newton projection failed to reach level " +
                         std::to_string(f_target) + " after " + std::to_string(kMaxRestarts) +
                         " restarts");
}

std::vector<EigenCluster> cluster_values(const std::vector<double>& sorted, bool& conclusive) {
  std::vector<EigenCluster> clusters;
  conclusive = false;
  if (sorted.empty()) return clusters;

  double scale = 1.0;
  for (double v : sorted) scale = std::max(scale, std::abs(v));
  const double threshold = kClusterGap * scale;

  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i == sorted.size() || sorted[i] - sorted[i - 1] > threshold) {
      ranges.emplace_back(begin, i);
      begin = i;
    }
  }

  double max_spread = 0.0;
  for (auto [b, e] : ranges) {
    EigenCluster c;
    double sum = 0.0;
    for (std::size_t i = b; i < e; ++i) sum += sorted[i];
    c.multiplicity = static_cast<int>(e - b);
    c.value = sum / static_cast<double>(c.multiplicity);
    c.spread = sorted[e - 1] - sorted[b];
    max_spread = std::max(max_spread, c.spread);
    clusters.push_back(c);
  }

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < ranges.size(); ++k)
    min_gap = std::min(min_gap, sorted[ranges[k].first] - sorted[ranges[k - 1].second - 1]);
  conclusive = ranges.size() == 1 ? true : min_gap >= 10.0 * max_spread;
  return clusters;
}

SpectrumReport shape_spectrum(const FkmPolynomial& poly, const LevelPoint& p) {
  check_dim(poly, p.z, "shape_spectrum");
  const Vector z = p.z.normalized();
  const Eigen::Index N = z.size();
  const double f = eval_F(poly, z);
  const Vector gs = spherical_gradient(poly, z);
  const double gn = gs.norm();
  if (!(gn > 1e-12) || !(std::abs(f) < 1.0))
    throw SingularLevelError("shape_spectrum: point lies on a focal submanifold (f = " +
                             std::to_string(f) + ")");
  const Vector xi = gs / gn;

  // Spherical Hessian on tangent vectors: Hess F - <grad F, z> I = Hess F - 4 f I.
  const Matrix hs = hess_F(poly, z) - 4.0 * f * Matrix::Identity(N, N);

  Matrix frame(N, 2);
  frame.col(0) = z;
  frame.col(1) = xi;
  const Matrix Q = Eigen::HouseholderQR<Matrix>(frame).householderQ();
  const Matrix T = Q.rightCols(N - 2);
  Matrix A = -(T.transpose() * hs * T) / gn;
  A = 0.5 * (A + A.transpose());

  Eigen::SelfAdjointEigenSolver<Matrix> eig(A, Eigen::EigenvaluesOnly);
  SpectrumReport rep;
  rep.level = f;
  rep.eigenvalues = to_std(eig.eigenvalues());
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  rep.mean_curvature = 0.0;
  for (double v : rep.eigenvalues) rep.mean_curvature += v;

  rep.clusters = cluster_values(rep.eigenvalues, rep.conclusive);
  if (rep.conclusive && rep.clusters.size() == 4) {
    const int mp = poly.m_plus(), mm = poly.m_minus();
    auto matches = [&](int a, int b) {
      return rep.clusters[0].multiplicity == a && rep.clusters[1].multiplicity == b &&
             rep.clusters[2].multiplicity == a && rep.clusters[3].multiplicity == b;
    };
    // Ascending order; the curvature that blows up at M_+ (f -> 1) is the largest.
    rep.multiplicities_match = matches(mm, mp);
  }
  if (!rep.conclusive) rep.note = "inconclusive: cluster gaps are not 10x the cluster spread";
  else if (rep.clusters.size() != 4) rep.note = "expected 4 distinct principal curvatures";
  else if (!rep.multiplicities_match) rep.note = "multiplicities do not alternate (m_+, m_-, m_+, m_-) from the largest curvature down";
  return rep;
}

}  // namespace isodouble
