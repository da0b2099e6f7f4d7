#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isodouble/doubling.hpp"

namespace isodouble {

enum class Space { M_plus, M_minus, Y, D_plus, D_minus };
enum class Ring { Integers, Mod2 };

std::string to_string(Space s);
std::string to_string(Ring r);

/// Ranks of H^q(space; ring) for q = 0 .. dim. Every group produced here is
/// 0 or a single copy of the ring, so a rank records the whole group.
struct CohomologyProfile {
  Space space = Space::Y;
  Ring ring = Ring::Integers;
  int dim = 0;
  std::vector<int> ranks;

  /// Degrees q with ranks[q] != 0.
  std::vector<int> support() const;
  int euler_characteristic() const;
  /// ranks[q] == ranks[dim - q] for every q.
  bool poincare_dual() const;

  friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;
};

/// Z when both focal submanifolds are known to be orientable
/// (min(m_+, m_-) > 1), Z2 otherwise.
Ring default_ring(const IsoparametricFamily& fam);

struct MunznerProfiles {
  CohomologyProfile M_plus;
  CohomologyProfile M_minus;
  CohomologyProfile Y;
};

/// Cohomology of the focal submanifolds (dimensions n-1-m_+ and n-1-m_-)
/// and of the hypersurface Y (dimension n-1). Throws DomainError if the
/// degree pattern does not fit inside the focal dimension.
MunznerProfiles munzner_cohomology(const IsoparametricFamily& fam,
                                   std::optional<Ring> ring = std::nullopt);

enum class Side { plus, minus };

/// Cohomology of the double D(S^n_+) (or D(S^n_-)) of the region bounded by
/// the minimal hypersurface that contains M_+ (or M_-):
///   H^0 = R, H^1 = H^1(M_+), H^q = H^{q-1}(M_-) + H^q(M_+) for 2 <= q <= n-2,
///   H^{n-1} = H^{n-2}(M_-), H^n = R
/// with the roles of M_+ and M_- exchanged for the minus side. For n = 2 the
/// H^1 line wins.
CohomologyProfile double_cohomology(const IsoparametricFamily& fam, Side side,
                                    std::optional<Ring> ring = std::nullopt);

/// Critical indices of the distance function on M_- for g = 4:
/// [0, m_+, m_+ + m_-, 2 m_+ + m_-]. Throws InapplicableError for g != 4.
std::vector<int> cell_structure(const IsoparametricFamily& fam);

}  // namespace isodouble
