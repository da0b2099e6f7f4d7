#include "isodouble/errors.hpp"

namespace isodouble {

InfeasibleGeometryError::InfeasibleGeometryError(const std::string& what, double minimal_r_bar)
    : DomainError(what), minimal_r_bar_(minimal_r_bar) {}

}  // namespace isodouble
