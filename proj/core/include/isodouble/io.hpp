#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "isodouble/bending.hpp"
#include "isodouble/characteristic.hpp"
#include "isodouble/clifford.hpp"
#include "isodouble/cohomology.hpp"
#include "isodouble/doubling.hpp"
#include "isodouble/fkm.hpp"
#include "isodouble/homogeneous_table.hpp"
#include "isodouble/report.hpp"

namespace isodouble {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const CheckDetail& d);
void to_json(Json& j, const VerificationReport& r);
/// {m, l, a, b, q, matrices}; integral entries are written as integers.
void to_json(Json& j, const CliffordSystem& s);
void to_json(Json& j, const IsoparametricFamily& f);
void to_json(Json& j, const LevelPoint& p);
void to_json(Json& j, const EigenCluster& c);
void to_json(Json& j, const SpectrumReport& r);
void to_json(Json& j, const CurveSample& s);
/// Curve parameters only; samples go to CSV.
void to_json(Json& j, const BendingCurve& c);
void to_json(Json& j, const PositivityCertificate& c);
void to_json(Json& j, const CohomologyProfile& p);
void to_json(Json& j, const MunznerProfiles& p);
void to_json(Json& j, const WuResidue& w);
void to_json(Json& j, const Distinction& d);
void to_json(Json& j, const FKMTopologyRecord& r);
void to_json(Json& j, const HomogeneousRow& r);

/// Validating parse: checks keys, types, matrix count and shapes and that
/// q = a - b. Throws FormatError. The Clifford relations themselves are left
/// to verify_system.
CliffordSystem clifford_system_from_json(const Json& j);

/// Reads a file written by to_json(CliffordSystem). Throws FormatError on
/// I/O or parse failure.
CliffordSystem read_clifford_system(const std::filesystem::path& path);

/// Header s,r,t,theta,k; 17 significant digits.
std::string curve_csv(const BendingCurve& curve);

/// Stable text dump: 2-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace isodouble
