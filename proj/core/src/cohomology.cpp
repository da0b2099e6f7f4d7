#include "isodouble/cohomology.hpp"

#include <algorithm>
#include <string>

#include "isodouble/errors.hpp"

namespace isodouble {

std::string to_string(Space s) {
  switch (s) {
    case Space::M_plus: return "M_plus";
    case Space::M_minus: return "M_minus";
    case Space::Y: return "Y";
    case Space::D_plus: return "D_plus";
    case Space::D_minus: return "D_minus";
  }
  return "?";
}

std::string to_string(Ring r) { return r == Ring::Integers ? "Z" : "Z2"; }

std::vector<int> CohomologyProfile::support() const {
  std::vector<int> out;
  for (std::size_t q = 0; q < ranks.size(); ++q)
    if (ranks[q] != 0) out.push_back(static_cast<int>(q));
  return out;
}

int CohomologyProfile::euler_characteristic() const {
  int chi = 0;
  for (std::size_t q = 0; q < ranks.size(); ++q) chi += (q % 2 == 0 ? 1 : -1) * ranks[q];
  return chi;
}

bool CohomologyProfile::poincare_dual() const {
  if (ranks.size() != static_cast<std::size_t>(dim) + 1) return false;
  for (int q = 0; q <= dim; ++q)
    if (ranks[q] != ranks[dim - q]) return false;
  return true;
}

Ring default_ring(const IsoparametricFamily& fam) {
  return std::min(fam.m_plus(), fam.m_minus()) > 1 ? Ring::Integers : Ring::Mod2;
}

namespace {

// H^q(M) = R for q = 0 or m_other (mod nu), 0 <= q < n - 1.
CohomologyProfile focal(const IsoparametricFamily& fam, Space space, Ring ring) {
  const int n = fam.n();
  const int nu = fam.m_plus() + fam.m_minus();
  const int own = space == Space::M_plus ? fam.m_plus() : fam.m_minus();
  const int other = space == Space::M_plus ? fam.m_minus() : fam.m_plus();

  CohomologyProfile p{space, ring, n - 1 - own, {}};
  p.ranks.assign(p.dim + 1, 0);
  for (int q = 0; q < n - 1; ++q) {
    if (q % nu != 0 && q % nu != other % nu) continue;
    if (q > p.dim)
      throw DomainError("munzner_cohomology: degree " + std::to_string(q) + " exceeds dim " +
                        to_string(space) + " = " + std::to_string(p.dim) +
                        "; (g, m_+, m_-) is not dimensionally consistent");
    p.ranks[q] = 1;
  }
  return p;
}

int at(const CohomologyProfile& p, int q) {
  return (q >= 0 && q <= p.dim) ? p.ranks[q] : 0;
}

}  // namespace

MunznerProfiles munzner_cohomology(const IsoparametricFamily& fam, std::optional<Ring> ring) {
  const Ring R = ring.value_or(default_ring(fam));
  MunznerProfiles out{focal(fam, Space::M_plus, R), focal(fam, Space::M_minus, R), {}};
  const int n = fam.n();
  out.Y = {Space::Y, R, n - 1, std::vector<int>(n, 0)};
  out.Y.ranks[0] = 1;
  out.Y.ranks[n - 1] = 1;
  for (int q = 1; q <= n - 2; ++q) out.Y.ranks[q] = at(out.M_plus, q) + at(out.M_minus, q);
  return out;
}

CohomologyProfile double_cohomology(const IsoparametricFamily& fam, Side side,
                                    std::optional<Ring> ring) {
  const auto mz = munzner_cohomology(fam, ring);
  const auto& near = side == Side::plus ? mz.M_plus : mz.M_minus;
  const auto& far = side == Side::plus ? mz.M_minus : mz.M_plus;
  const int n = fam.n();

  CohomologyProfile p{side == Side::plus ? Space::D_plus : Space::D_minus, near.ring, n,
                      std::vector<int>(n + 1, 0)};
  p.ranks[0] = 1;
  p.ranks[n] = 1;
  for (int q = 2; q <= n - 2; ++q) p.ranks[q] = at(far, q - 1) + at(near, q);
  p.ranks[n - 1] = at(far, n - 2);
  p.ranks[1] = at(near, 1);
  return p;
}

std::vector<int> cell_structure(const IsoparametricFamily& fam) {
  if (fam.g() != 4)
    throw InapplicableError("cell_structure: only g = 4 is supported (got g = " +
                            std::to_string(fam.g()) + ")");
  const int a = fam.m_plus(), b = fam.m_minus();
  return {0, a, a + b, 2 * a + b};
}

}  // namespace isodouble
