#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isodouble/clifford.hpp"
#include "isodouble/random.hpp"
#include "isodouble/report.hpp"

namespace isodouble {

/// F(z) = |z|^4 - 2 sum_i <P_i z, z>^2 on R^{2l} built from a Clifford system.
///
/// Restricted to S^{2l-1} its level sets form an isoparametric family with
/// g = 4 and multiplicities (m, l - m - 1).
class FkmPolynomial {
 public:
  /// Throws DomainError unless l - m - 1 > 0. The relations of `system` are
  /// not checked here; see verify_system and cartan_munzner_check.
  explicit FkmPolynomial(CliffordSystem system);

  const CliffordSystem& system() const noexcept { return system_; }
  int g() const noexcept { return 4; }
  int m_plus() const noexcept { return system_.m; }
  int m_minus() const noexcept { return system_.l - system_.m - 1; }
  /// Dimension of the sphere S^n = S^{2l-1}.
  int n() const noexcept { return 2 * system_.l - 1; }
  Eigen::Index ambient_dim() const noexcept { return system_.ambient_dim(); }

  /// Constant value of Delta F / |z|^2, i.e. 8 (m_- - m_+).
  double laplacian_constant() const noexcept { return 8.0 * (m_minus() - m_plus()); }

 private:
  CliffordSystem system_;
};

/// Throws DomainError on a dimension mismatch.
double eval_F(const FkmPolynomial& poly, const Vector& z);
/// 4|z|^2 z - 8 sum_i <P_i z, z> P_i z.
Vector grad_F(const FkmPolynomial& poly, const Vector& z);
/// Exact Hessian of F.
Matrix hess_F(const FkmPolynomial& poly, const Vector& z);
/// Euclidean Laplacian, the trace of hess_F.
double laplacian_F(const FkmPolynomial& poly, const Vector& z);

/// Gradient of f = F|_{S^{2l-1}} at a unit vector z: (I - z z^T) grad F.
Vector spherical_gradient(const FkmPolynomial& poly, const Vector& z);

/// Monte-Carlo check of the Cartan-Muenzner identities at seeded points:
/// |grad F|^2 = 16 |z|^6, Delta F / |z|^2 = 8 (m_- - m_+) at every sample,
/// and |grad_S f|^2 = 16 (1 - f^2) on the unit sphere.
/// Throws DomainError if samples == 0.
VerificationReport cartan_munzner_check(const FkmPolynomial& poly, std::uint64_t samples,
                                        std::uint64_t seed = kDefaultSeed,
                                        double tolerance = 1e-9);

struct LevelPoint {
  Vector z;                    ///< unit vector in R^{2l}
  double f_value = 0.0;        ///< F(z)
  double gradient_norm = 0.0;  ///< |grad_S f|(z)
  std::uint64_t seed = 0;
  int restarts = 0;
};

/// Newton projection along the spherical gradient from a random unit start
/// onto {f = f_target}, to within 1e-10. Up to 100 iterations per start and
/// 10 restarts. Throws DomainError unless -1 < f_target < 1 and
/// ConvergenceError when every start fails.
LevelPoint sample_level_point(const FkmPolynomial& poly, double f_target,
                              std::uint64_t seed = kDefaultSeed);

struct EigenCluster {
  double value = 0.0;  ///< mean of the clustered eigenvalues
  int multiplicity = 0;
  double spread = 0.0;  ///< max - min inside the cluster
};

struct SpectrumReport {
  std::vector<double> eigenvalues;  ///< ascending, 2l - 2 entries
  std::vector<EigenCluster> clusters;
  double mean_curvature = 0.0;  ///< sum of principal curvatures
  double level = 0.0;
  bool conclusive = false;
  /// Read from the largest curvature down, multiplicities are (m_+, m_-, m_+, m_-).
  bool multiplicities_match = false;
  std::string note;
};

/// Relative gap separating eigenvalue clusters.
inline constexpr double kClusterGap = 1e-3;

/// Sorted values grouped greedily; a new cluster starts where the gap to the
/// previous value exceeds kClusterGap * max(1, max |value|). The grouping is
/// conclusive only if every inter-cluster gap is at least 10x the largest
/// intra-cluster spread.
std::vector<EigenCluster> cluster_values(const std::vector<double>& sorted, bool& conclusive);

/// Principal curvatures of the level hypersurface through p, with respect to
/// xi = grad_S f / |grad_S f| and A_xi v = -(nabla_v xi)^T.
///
/// Computed as the eigenvalues of -Hess_S f / |grad_S f| restricted to the
/// orthogonal complement of {z, xi}, where Hess_S f = Hess F - 4 F(z) I on
/// tangent vectors. Throws SingularLevelError when |grad_S f| vanishes.
SpectrumReport shape_spectrum(const FkmPolynomial& poly, const LevelPoint& p);

}  // namespace isodouble
