#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isodouble {

/// One row of the classification of homogeneous isoparametric hypersurfaces.
/// Parametrized rows carry their free parameter in the text columns until
/// instantiated by homogeneous_lookup.
struct HomogeneousRow {
  int g = 0;
  std::string multiplicities;  ///< "(m_+, m_-)" as printed, e.g. "(4, 4m-5)"
  std::string symmetric_pair;  ///< "(U, K)"
  std::string K0;
  std::string K_plus;
  std::string K_minus;
  std::string parameter_range;  ///< empty for fixed rows
  /// Set when the row is instantiated at concrete multiplicities.
  std::optional<int> m_plus;
  std::optional<int> m_minus;

  friend bool operator==(const HomogeneousRow&, const HomogeneousRow&) = default;
};

/// The 14 rows, parametrized rows left symbolic.
std::span<const HomogeneousRow> homogeneous_table();

/// Rows with the given g (all rows when g is empty).
std::vector<HomogeneousRow> homogeneous_rows(std::optional<int> g = std::nullopt);

/// The row realizing (g, m_+, m_-), with any parameter substituted.
std::optional<HomogeneousRow> homogeneous_lookup(int g, int m_plus, int m_minus);

/// Smallest valid multiplicities of every row (one instance per row), in
/// table order.
std::vector<HomogeneousRow> homogeneous_instances();

/// Instances of row `index` for the first `count` admissible parameter
/// values.
std::vector<HomogeneousRow> homogeneous_instances(std::size_t index, int count);

/// CSV with header g,(m+,m-),(U,K),K0,K+,K-.
std::string homogeneous_csv(const std::vector<HomogeneousRow>& rows);

}  // namespace isodouble
