#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "isodouble/report.hpp"

namespace isodouble {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Residual bound for Clifford relations. Constructed matrices have entries
/// in {-1, 0, 1}, so anything above round-off in the norm is a real defect.
inline constexpr double kCliffordTolerance = 1e-12;

/// Dimension of an irreducible real module of the Clifford algebra C_{m-1}.
///
/// delta(1..8) = 1, 2, 4, 4, 8, 8, 8, 8 and delta(m + 8) = 16 delta(m).
/// Throws DomainError for m < 1.
long long delta_dim(int m);

/// An irreducible C_{m-1}-module on R^{delta(m)}: m - 1 skew-symmetric
/// orthogonal generators with E_i E_j + E_j E_i = -2 delta_ij I.
struct IrreducibleModule {
  int m = 1;
  std::vector<Matrix> generators;
  /// Sign of E_1 ... E_{m-1} (= +-I) when m is divisible by 4.
  std::optional<int> chirality;

  Eigen::Index dimension() const;
};

/// Builds the irreducible module for C_{m-1}.
///
/// For m divisible by 4 the product E_1 ... E_{m-1} equals chirality_sign * I;
/// otherwise chirality_sign is ignored. Throws DomainError for m < 1 or a
/// chirality_sign other than +-1.
IrreducibleModule build_irreducible(int m, int chirality_sign = +1);

/// Symmetric Clifford system P_0, ..., P_m on R^{2l} with
/// E_+(P_0) = a Delta^+ (+) b Delta^-.
struct CliffordSystem {
  int m = 1;
  int l = 1;
  int a = 1;
  int b = 0;
  int q = 1;  ///< a - b
  std::vector<Matrix> matrices;

  Eigen::Index ambient_dim() const { return 2 * static_cast<Eigen::Index>(l); }
  /// l - m - 1 > 0, the condition for the FKM polynomial to be isoparametric.
  bool fkm_admissible() const { return l - m - 1 > 0; }
};

/// Assembles the system with P_0 = diag(I, -I), P_1 = [[0, I], [I, 0]] and
/// P_{i+1} = [[0, E_i], [-E_i, 0]], where E_i acts on E_+(P_0) as the direct
/// sum of a copies of Delta^+ and b copies of Delta^-.
///
/// Throws DomainError when a + b = 0 or a, b < 0, or when 2l exceeds the
/// supported dense envelope (2l <= 256).
CliffordSystem build_system(int m, int a, int b);

/// Max Frobenius residuals of the anticommutation, symmetry and
/// orthogonality relations; passes iff all are at most kCliffordTolerance.
VerificationReport verify_system(const CliffordSystem& sys);

/// P_0 P_1 ... P_m.
Matrix product_of_all(const CliffordSystem& sys);

/// tr(P_0 ... P_m) / (2 delta(m)), rounded to the exact integer.
///
/// Throws InapplicableError unless m is divisible by 4 and ConsistencyError
/// when the trace is not within 1e-6 of an even multiple of delta(m).
int index(const CliffordSystem& sys);

/// q = a - b is congruent to a + b modulo 2.
bool index_parity_holds(int q, int a, int b);

}  // namespace isodouble
