#include "isodouble/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isodouble/errors.hpp"

namespace isodouble {
namespace {

constexpr int kMaxAmbientDim = 256;

// Cayley-Dickson product on R^{2^k}: (a, b)(c, d) = (ac - d* b, da + b c*).
Vector conjugate(const Vector& x) {
  Vector y = -x;
  y(0) = x(0);
  return y;
}

Vector cd_multiply(const Vector& x, const Vector& y) {
  const Eigen::Index n = x.size();
  if (n == 1) return Vector::Constant(1, x(0) * y(0));
  const Eigen::Index h = n / 2;
  const Vector a = x.head(h), b = x.tail(h), c = y.head(h), d = y.tail(h);
  Vector out(n);
  out.head(h) = cd_multiply(a, c) - cd_multiply(conjugate(d), b);
  out.tail(h) = cd_multiply(d, a) + cd_multiply(b, conjugate(c));
  return out;
}

// Left multiplication by the i-th basis unit of the 2^k-dimensional
// Cayley-Dickson algebra (R, C, H, O for k = 0..3).
Matrix left_multiplication(Eigen::Index dim, Eigen::Index unit) {
  Matrix L(dim, dim);
  const Vector e = Vector::Unit(dim, unit);
  for (Eigen::Index j = 0; j < dim; ++j) L.col(j) = cd_multiply(e, Vector::Unit(dim, j));
  return L;
}

Matrix kron(const Matrix& A, const Matrix& B) {
  Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

Matrix ordered_product(const std::vector<Matrix>& factors, Eigen::Index dim) {
  Matrix prod = Matrix::Identity(dim, dim);
  for (const auto& f : factors) prod = prod * f;
  return prod;
}

// Generators for m <= 9 without any chirality adjustment.
std::vector<Matrix> seed_generators(int m) {
  std::vector<Matrix> gens;
  if (m <= 8) {
    const auto dim = static_cast<Eigen::Index>(delta_dim(m));
    for (int i = 1; i <= m - 1; ++i) gens.push_back(left_multiplication(dim, i));
    return gens;
  }
  // m == 9: double the C_7-module on R^8 and add one generator.
  const auto base = seed_generators(8);
  const Matrix I8 = Matrix::Identity(8, 8);
  Matrix sz(2, 2), j2(2, 2);
  sz << 1, 0, 0, -1;
  j2 << 0, -1, 1, 0;
  for (const auto& E : base) gens.push_back(kron(sz, E));
  gens.push_back(kron(j2, I8));
  return gens;
}

std::vector<Matrix> raw_generators(int m) {
  if (m <= 9) return seed_generators(m);
  // C_{m-1} = C_{m-9} (x) C_8 with C_8 acting on R^16: E_i (x) Omega, I (x) F_j,
  // where Omega = F_1 ... F_8 squares to I and anticommutes with every F_j.
  const auto inner = raw_generators(m - 8);
  const auto outer = seed_generators(9);
  const Matrix omega = ordered_product(outer, 16);
  const auto inner_dim = static_cast<Eigen::Index>(delta_dim(m - 8));
  std::vector<Matrix> gens;
  for (const auto& E : inner) gens.push_back(kron(E, omega));
  for (const auto& F : outer) gens.push_back(kron(Matrix::Identity(inner_dim, inner_dim), F));
  return gens;
}

double frobenius(const Matrix& M) { return M.norm(); }

}  // namespace

long long delta_dim(int m) {
  if (m < 1) throw DomainError("delta_dim: m must be >= 1, got " + std::to_string(m));
  static constexpr long long base[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  long long scale = 1;
  while (m > 8) {
    m -= 8;
    scale *= 16;
  }
  return scale * base[m - 1];
}

Eigen::Index IrreducibleModule::dimension() const {
  return static_cast<Eigen::Index>(delta_dim(m));
}

IrreducibleModule build_irreducible(int m, int chirality_sign) {
  if (m < 1) throw DomainError("build_irreducible: m must be >= 1, got " + std::to_string(m));
  if (chirality_sign != 1 && chirality_sign != -1)
    throw DomainError("build_irreducible: chirality_sign must be +1 or -1");

  IrreducibleModule mod;
  mod.m = m;
  mod.generators = raw_generators(m);
  if (m % 4 == 0) {
    const Eigen::Index dim = mod.dimension();
    const Matrix prod = ordered_product(mod.generators, dim);
    const Matrix I = Matrix::Identity(dim, dim);
    int sign = 0;
    if (frobenius(prod - I) <= kCliffordTolerance) sign = 1;
    else if (frobenius(prod + I) <= kCliffordTolerance) sign = -1;
    if (sign == 0)
      throw ConsistencyError("build_irreducible: volume element is not +-I for m = " +
                             std::to_string(m));
    // Negating one generator flips the sign of the ordered product.
    if (sign != chirality_sign) mod.generators.front() = -mod.generators.front();
    mod.chirality = chirality_sign;
  }
  return mod;
}

CliffordSystem build_system(int m, int a, int b) {
  if (m < 1) throw DomainError("build_system: m must be >= 1");
  if (a < 0 || b < 0) throw DomainError("build_system: multiplicities a, b must be >= 0");
  if (a + b == 0) throw DomainError("build_system: a + b must be >= 1");
  const long long delta = delta_dim(m);
  const long long l = static_cast<long long>(a + b) * delta;
  if (2 * l > kMaxAmbientDim)
    throw DomainError("build_system: 2l = " + std::to_string(2 * l) +
                      " exceeds the supported dimension " + std::to_string(kMaxAmbientDim));

  const auto plus = build_irreducible(m, +1);
  const auto minus = (m % 4 == 0) ? build_irreducible(m, -1) : plus;

  CliffordSystem sys;
  sys.m = m;
  sys.l = static_cast<int>(l);
  sys.a = a;
  sys.b = b;
  sys.q = a - b;

  const auto L = static_cast<Eigen::Index>(l);
  const auto d = static_cast<Eigen::Index>(delta);
  const Matrix I = Matrix::Identity(L, L);

  Matrix P0 = Matrix::Zero(2 * L, 2 * L);
  P0.topLeftCorner(L, L) = I;
  P0.bottomRightCorner(L, L) = -I;
  Matrix P1 = Matrix::Zero(2 * L, 2 * L);
  P1.topRightCorner(L, L) = I;
  P1.bottomLeftCorner(L, L) = I;
  sys.matrices.push_back(std::move(P0));
  sys.matrices.push_back(std::move(P1));

  for (int i = 0; i < m - 1; ++i) {
    Matrix E = Matrix::Zero(L, L);
    for (int c = 0; c < a + b; ++c) {
      const auto& src = (c < a) ? plus.generators[i] : minus.generators[i];
      E.block(c * d, c * d, d, d) = src;
    }
    Matrix P = Matrix::Zero(2 * L, 2 * L);
    P.topRightCorner(L, L) = E;
    P.bottomLeftCorner(L, L) = -E;
    sys.matrices.push_back(std::move(P));
  }
  return sys;
}

VerificationReport verify_system(const CliffordSystem& sys) {
  VerificationReport report;
  report.check_name = "clifford_relations";
  report.tolerance = kCliffordTolerance;
  report.samples = sys.matrices.size();

  const Eigen::Index N = sys.ambient_dim();
  const bool shape_ok =
      sys.m >= 1 && sys.l >= 1 && sys.matrices.size() == static_cast<std::size_t>(sys.m) + 1 &&
      std::all_of(sys.matrices.begin(), sys.matrices.end(),
                  [N](const Matrix& P) { return P.rows() == N && P.cols() == N; });
  if (!shape_ok) {
    report.add({"shape", 1.0, kCliffordTolerance, false,
                "expected m+1 matrices of size 2l x 2l"});
    return report;
  }

  bool bookkeeping = sys.q == sys.a - sys.b && sys.a >= 0 && sys.b >= 0 &&
                     static_cast<long long>(sys.l) ==
                         static_cast<long long>(sys.a + sys.b) * delta_dim(sys.m);
  report.add({"bookkeeping", bookkeeping ? 0.0 : 1.0, kCliffordTolerance, bookkeeping,
              "l = (a+b) delta(m) and q = a - b"});

  const Matrix I = Matrix::Identity(N, N);
  double anti = 0.0, sym = 0.0, orth = 0.0;
  const std::size_t count = sys.matrices.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Matrix& Pi = sys.matrices[i];
    sym = std::max(sym, frobenius(Pi - Pi.transpose()));
    orth = std::max(orth, frobenius(Pi.transpose() * Pi - I));
    for (std::size_t j = i; j < count; ++j) {
      const Matrix& Pj = sys.matrices[j];
      Matrix R = Pi * Pj + Pj * Pi;
      if (i == j) R -= 2.0 * I;
      anti = std::max(anti, frobenius(R));
    }
  }
  report.add({"anticommutation", anti, kCliffordTolerance, true,
              "max ||P_i P_j + P_j P_i - 2 delta_ij I||_F"});
  report.add({"symmetry", sym, kCliffordTolerance, true, "max ||P_i - P_i^T||_F"});
  report.add({"orthogonality", orth, kCliffordTolerance, true, "max ||P_i^T P_i - I||_F"});
  return report;
}

Matrix product_of_all(const CliffordSystem& sys) {
  return ordered_product(sys.matrices, sys.ambient_dim());
}

int index(const CliffordSystem& sys) {
  if (sys.m % 4 != 0)
    throw InapplicableError("index: defined only for m divisible by 4 (m = " +
                            std::to_string(sys.m) + ")");
  const double trace = product_of_all(sys).trace();
  const double delta = static_cast<double>(delta_dim(sys.m));
  const double ratio = trace / (2.0 * delta);
  const double q = std::round(ratio);
  if (std::abs(trace - 2.0 * delta * q) > 1e-6)
    throw ConsistencyError("index: trace " + std::to_string(trace) +
                           " is not an even multiple of delta(m)");
  return static_cast<int>(q);
}

bool index_parity_holds(int q, int a, int b) { return ((q - (a + b)) % 2) == 0; }

}  // namespace isodouble
