#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isodouble {

/// One named sub-check of a verification run.
struct CheckDetail {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
};

/// Structured pass/fail record shared by every verification routine.
///
/// `worst_residual` is the largest residual over all details; `pass` holds
/// iff every detail passes. `offending_point` carries the sample that
/// produced the worst residual of a failed Monte-Carlo check.
struct VerificationReport {
  std::string check_name;
  bool pass = true;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<CheckDetail> details;
  std::vector<double> offending_point;

  /// Appends a detail and folds it into pass / worst_residual.
  void add(CheckDetail detail);
};

}  // namespace isodouble
