#include "isodouble/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "isodouble/errors.hpp"

namespace isodouble {
namespace {

Json number(double x) {
  if (x == 0.0) return 0;
  if (std::isfinite(x) && std::abs(x) < 9.0e15 && x == std::trunc(x))
    return static_cast<long long>(x);
  return x;
}

Json vec(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json vec(const Vector& v) { return vec(std::vector<double>(v.data(), v.data() + v.size())); }

std::string side_name(CollarSide s) { return s == CollarSide::plus ? "plus" : "minus"; }

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(std::string("key '") + key + "' has the wrong type");
  }
}

}  // namespace

void to_json(Json& j, const CheckDetail& d) {
  j = Json{{"name", d.name},
           {"residual", d.residual},
           {"tolerance", d.tolerance},
           {"pass", d.pass},
           {"note", d.note}};
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"check_name", r.check_name},
           {"pass", r.pass},
           {"worst_residual", r.worst_residual},
           {"tolerance", r.tolerance},
           {"samples", r.samples},
           {"seed", r.seed},
           {"details", r.details},
           {"offending_point", r.offending_point.empty() ? Json(nullptr) : vec(r.offending_point)}};
}

void to_json(Json& j, const CliffordSystem& s) {
  Json mats = Json::array();
  for (const auto& P : s.matrices) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < P.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < P.cols(); ++k) row.push_back(number(P(i, k)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  j = Json{{"m", s.m}, {"l", s.l}, {"a", s.a}, {"b", s.b}, {"q", s.q}, {"matrices", mats}};
}

void to_json(Json& j, const IsoparametricFamily& f) {
  j = Json{{"g", f.g()},     {"m_plus", f.m_plus()}, {"m_minus", f.m_minus()}, {"n", f.n()},
           {"c", f.c()},     {"f0", f.f0()},         {"S", f.S()},
           {"case", f.case_a() ? "A" : "B"}};
}

void to_json(Json& j, const LevelPoint& p) {
  j = Json{{"z", vec(p.z)},
           {"f_value", p.f_value},
           {"gradient_norm", p.gradient_norm},
           {"seed", p.seed},
           {"restarts", p.restarts}};
}

void to_json(Json& j, const EigenCluster& c) {
  j = Json{{"value", c.value}, {"multiplicity", c.multiplicity}, {"spread", c.spread}};
}

void to_json(Json& j, const SpectrumReport& r) {
  j = Json{{"level", r.level},
           {"eigenvalues", r.eigenvalues},
           {"clusters", r.clusters},
           {"mean_curvature", r.mean_curvature},
           {"conclusive", r.conclusive},
           {"multiplicities_match", r.multiplicities_match},
           {"note", r.note}};
}

void to_json(Json& j, const CurveSample& s) {
  j = Json{{"s", s.s}, {"r", s.r}, {"t", s.t}, {"theta", s.theta}, {"k", s.k}};
}

void to_json(Json& j, const BendingCurve& c) {
  j = Json{{"r_bar", c.r_bar},
           {"r_1", c.r_1},
           {"r_inf", c.r_inf},
           {"k_max", c.k_max},
           {"k_peak", c.k_peak},
           {"bend_length", c.bend_length},
           {"step", c.step},
           {"samples", c.samples.size()},
           {"identity", c.identity}};
}

void to_json(Json& j, const PositivityCertificate& c) {
  Json zeros = Json::array();
  for (const auto& z : c.zero_set) zeros.push_back(Json{{"s_begin", z.s_begin}, {"s_end", z.s_end}});
  j = Json{{"family", c.family},
           {"side", side_name(c.options.side)},
           {"reorient_normal", c.options.reorient_normal},
           {"pass", c.pass},
           {"min_R", c.min_R},
           {"argmin", c.argmin},
           {"argmin_f", c.argmin_f},
           {"lower_bound_used", c.lower_bound_used},
           {"unconstrained_bound", c.unconstrained_bound},
           {"samples", c.samples},
           {"zero_set", zeros},
           {"note", c.note}};
}

void to_json(Json& j, const CohomologyProfile& p) {
  j = Json{{"space", to_string(p.space)},
           {"ring", to_string(p.ring)},
           {"dim", p.dim},
           {"ranks", p.ranks},
           {"euler_characteristic", p.euler_characteristic()},
           {"poincare_dual", p.poincare_dual()}};
}

void to_json(Json& j, const MunznerProfiles& p) {
  j = Json{{"M_plus", p.M_plus}, {"M_minus", p.M_minus}, {"Y", p.Y}};
}

void to_json(Json& j, const WuResidue& w) {
  j = Json{{"p", w.p}, {"residue", w.residue}, {"pair", {w.pair.first, w.pair.second}}};
}

void to_json(Json& j, const Distinction& d) {
  j = Json{{"verdict", to_string(d.verdict)},
           {"m", d.m},
           {"l", d.l},
           {"q1", d.q1},
           {"q2", d.q2},
           {"p", d.p ? Json(*d.p) : Json(nullptr)},
           {"residue1", d.residue1 ? Json(*d.residue1) : Json(nullptr)},
           {"residue2", d.residue2 ? Json(*d.residue2) : Json(nullptr)},
           {"reason", d.reason},
           {"warnings", d.warnings}};
}

void to_json(Json& j, const FKMTopologyRecord& r) {
  j = Json{{"m", r.m},
           {"l", r.l},
           {"q", r.q},
           {"beta", r.beta},
           {"pontrjagin_top", r.pontrjagin_top.str()},
           {"wu_prime", r.wu_prime ? Json(*r.wu_prime) : Json(nullptr)},
           {"wu_residue", r.wu_residue ? Json(*r.wu_residue) : Json(nullptr)},
           {"sign_note", r.sign_note}};
}

void to_json(Json& j, const HomogeneousRow& r) {
  j = Json{{"g", r.g},
           {"multiplicities", r.multiplicities},
           {"symmetric_pair", r.symmetric_pair},
           {"K0", r.K0},
           {"K_plus", r.K_plus},
           {"K_minus", r.K_minus},
           {"parameter_range", r.parameter_range}};
  if (r.m_plus) j["m_plus"] = *r.m_plus;
  if (r.m_minus) j["m_minus"] = *r.m_minus;
}

CliffordSystem clifford_system_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("clifford system: document is not a JSON object");
  CliffordSystem s;
  s.m = get<int>(j, "m");
  s.l = get<int>(j, "l");
  s.a = get<int>(j, "a");
  s.b = get<int>(j, "b");
  s.q = get<int>(j, "q");
  if (s.m < 1 || s.l < 1 || s.l > 128)
    throw FormatError("clifford system: need m >= 1 and 1 <= l <= 128");
  if (s.q != s.a - s.b) throw FormatError("clifford system: q != a - b");

  if (!j.contains("matrices")) throw FormatError("missing key 'matrices'");
  const Json& mats = j.at("matrices");
  if (!mats.is_array() || mats.size() != static_cast<std::size_t>(s.m) + 1)
    throw FormatError("clifford system: 'matrices' must hold m + 1 matrices");
  const Eigen::Index N = 2 * static_cast<Eigen::Index>(s.l);
  for (std::size_t idx = 0; idx < mats.size(); ++idx) {
    const Json& rows = mats[idx];
    const std::string where = "clifford system: matrix " + std::to_string(idx);
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(N))
      throw FormatError(where + " must have 2l rows");
    Matrix P(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
      const Json& row = rows[i];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(N))
        throw FormatError(where + " must have 2l columns");
      for (Eigen::Index k = 0; k < N; ++k) {
        if (!row[k].is_number()) throw FormatError(where + " has a non-numeric entry");
        P(i, k) = row[k].get<double>();
      }
    }
    s.matrices.push_back(std::move(P));
  }
  return s;
}

CliffordSystem read_clifford_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return clifford_system_from_json(j);
}

std::string curve_csv(const BendingCurve& curve) {
  std::string out = "s,r,t,theta,k\n";
  char buf[160];
  for (const auto& p : curve.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.s, p.r, p.t, p.theta, p.k);
    out += buf;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace isodouble
