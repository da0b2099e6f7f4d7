#include "isodouble/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace isodouble {

void VerificationReport::add(CheckDetail detail) {
  // NaN residuals must fail, so compare through the negation.
  if (!(detail.residual <= detail.tolerance)) detail.pass = false;
  pass = pass && detail.pass;
  if (std::isnan(detail.residual) || detail.residual > worst_residual) {
    worst_residual = detail.residual;
  }
  details.push_back(std::move(detail));
}

}  // namespace isodouble
