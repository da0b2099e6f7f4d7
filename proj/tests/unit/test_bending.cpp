#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "isodouble/bending.hpp"
#include "isodouble/doubling.hpp"
#include "isodouble/errors.hpp"

using namespace isodouble;

namespace {

CurveRequest request(double r_bar, double r_inf, double k_max, double step) {
  CurveRequest r;
  r.r_bar = r_bar;
  r.r_inf = r_inf;
  r.k_max = k_max;
  r.step = step;
  return r;
}

// Trapezoid integration of the sampled (cos theta, sin theta) field.
std::pair<double, double> trapezoid_end(const BendingCurve& c) {
  double r = c.samples.front().r, t = c.samples.front().t;
  for (std::size_t i = 1; i < c.samples.size(); ++i) {
    const auto &a = c.samples[i - 1], &b = c.samples[i];
    const double h = b.s - a.s;
    r -= 0.5 * h * (std::cos(a.theta) + std::cos(b.theta));
    t += 0.5 * h * (std::sin(a.theta) + std::sin(b.theta));
  }
  return {r, t};
}

}  // namespace

TEST_CASE("bend width scales like 1/k and beats the circular-arc bound") {
  const double w1 = bend_width(1.0);
  CHECK(w1 > 1.0);  // a circular quarter turn of radius 1 has width exactly 1
  CHECK(w1 < 1.5);
  for (double k : {0.25, 0.5, 2.0, 8.0}) CHECK(bend_width(k) == doctest::Approx(w1 / k));
}

TEST_CASE("k_max = 1/2 needs r_bar - r_inf >= 2 at least") {
  CHECK(bend_width(0.5) >= 2.0);
  try {
    build_curve(request(1.0, 0.05, 0.5, 1e-3));
    FAIL("expected infeasible geometry");
  } catch (const InfeasibleGeometryError& e) {
    CHECK(e.minimal_r_bar() == doctest::Approx(0.05 + bend_width(0.5)));
  }
  const double need = 0.05 + bend_width(0.5);
  CHECK_NOTHROW(build_curve(request(need + 1e-6, 0.05, 0.5, 1e-3)));
}

TEST_CASE("curve invariants at the default k_max = 1/2") {
  const auto c = build_curve(request(3.0, 0.05, 0.5, 1e-3));
  const auto rep = validate_curve(c);
  CHECK(rep.pass);
  CHECK(c.k_peak == 0.5);
  CHECK(c.r_1 == doctest::Approx(0.05 + bend_width(0.5)));
  CHECK(c.step <= 1e-3);
  double kmax = 0.0;
  for (const auto& p : c.samples) {
    kmax = std::max(kmax, p.k);
    CHECK(p.r > 0.0);
    CHECK(p.t >= 0.0);
  }
  CHECK(kmax == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(c.samples.front().r == 3.0);
  CHECK(c.samples.back().theta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(c.samples.back().r == doctest::Approx(0.05).epsilon(1e-12));
  const auto [r_end, t_end] = trapezoid_end(c);
  CHECK(std::abs(r_end - c.samples.back().r) <= 1e-6);
  CHECK(std::abs(t_end - c.samples.back().t) <= 1e-6);
}

TEST_CASE("explicit r_1 lowers the plateau curvature") {
  auto req = request(0.45, 0.02, 8.0, 1e-4);
  req.r_1 = 0.4;
  const auto c = build_curve(req);
  CHECK(c.k_peak == doctest::Approx(bend_width(1.0) / 0.38));
  CHECK(validate_curve(c).pass);
  req.r_1 = 0.05;
  CHECK_THROWS_AS(build_curve(req), InfeasibleGeometryError);
  req.r_1 = 0.45;
  CHECK_THROWS_AS(build_curve(req), DomainError);
}

TEST_CASE("identity curve when r_inf == r_bar") {
  const auto c = build_curve(request(0.3, 0.3, 0.5, 1e-3));
  CHECK(c.identity);
  REQUIRE(c.samples.size() == 1);
  CHECK(c.samples[0].theta == 0.0);
  CHECK(c.samples[0].k == 0.0);
  CHECK(validate_curve(c).pass);
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(build_curve(request(1.0, 0.05, 0.5, 0.0)), DomainError);
  CHECK_THROWS_AS(build_curve(request(1.0, 0.05, 0.0, 1e-3)), DomainError);
  CHECK_THROWS_AS(build_curve(request(1.0, 0.0, 0.5, 1e-3)), DomainError);
  CHECK_THROWS_AS(build_curve(request(1.0, 2.0, 0.5, 1e-3)), DomainError);
}

TEST_CASE("validate_curve detects tampering") {
  auto c = build_curve(request(0.45, 0.02, 4.0, 1e-4));
  REQUIRE(validate_curve(c).pass);
  auto broken = c;
  broken.samples[broken.samples.size() / 3].theta += 1e-4;
  CHECK_FALSE(validate_curve(broken).pass);
  broken = c;
  for (auto& p : broken.samples) p.k *= 1.01;
  CHECK_FALSE(validate_curve(broken).pass);
}

TEST_CASE("case (B) certificate for (4, 4, 3)") {
  const IsoparametricFamily fam(4, 4, 3);
  const auto c = build_curve(request(0.4, 0.02, 4.0, 1e-4));
  REQUIRE(validate_curve(c).pass);
  const auto cert = certify(c, fam);
  CHECK(cert.pass);
  CHECK(cert.min_R > 0.0);
  CHECK(cert.min_R >= cert.lower_bound_used - kPositivitySlack);
  CHECK(cert.unconstrained_bound == 140.0);
  CHECK(cert.samples == c.samples.size());
  CHECK(cert.zero_set.empty());

  // Brute re-evaluation of the minimum.
  double brute = 1e300;
  for (const auto& p : c.samples)
    brute = std::min(brute, scalar_curvature(fam, f_of_r(fam, p.r), p.theta, p.k));
  CHECK(cert.min_R == brute);
}

TEST_CASE("case (A) certificate for g = 3, (1, 1) with a feasible curve") {
  const IsoparametricFamily fam(3, 1, 1);
  const auto c = build_curve(request(0.45, 0.02, 4.0, 1e-4));
  const auto cert = certify(c, fam);
  CHECK(cert.pass);
  CHECK(cert.min_R >= -kPositivitySlack);
  // R vanishes on the horizontal end (theta = pi/2, k = 0, a = 0) only
  // through n(n-1) cos^2 theta = 0.
  REQUIRE_FALSE(cert.zero_set.empty());
  CHECK(cert.zero_set.back().s_end == c.samples.back().s);
}

TEST_CASE("minus side with reoriented normal also certifies") {
  const IsoparametricFamily fam(4, 4, 3);
  const auto c = build_curve(request(0.3, 0.02, 8.0, 1e-4));
  CertifyOptions o;
  o.side = CollarSide::minus;
  const auto cert = certify(c, fam, o);
  CHECK(cert.pass);
  CHECK(cert.min_R > 0.0);
}

TEST_CASE("artificial negative region: minus side without reorientation") {
  const IsoparametricFamily fam(4, 4, 3);
  auto req = request(0.35, 0.25, 30.0, 1e-4);
  req.r_1 = 0.3;
  const auto c = build_curve(req);
  REQUIRE(c.k_peak > 0.5);
  CertifyOptions o;
  o.side = CollarSide::minus;
  o.reorient_normal = false;
  const auto cert = certify(c, fam, o);
  CHECK_FALSE(cert.pass);
  CHECK(cert.min_R < 0.0);
  CHECK(cert.argmin_f < fam.f0());
  CHECK(cert.argmin.k > 0.0);
}

TEST_CASE("curves leaving the tube are refused") {
  const IsoparametricFamily fam(3, 1, 1);
  const auto c = build_curve(request(3.0, 0.05, 0.5, 1e-3));
  CHECK_THROWS_AS(certify(c, fam), DomainError);
}

TEST_CASE("curve construction is deterministic") {
  const auto a = build_curve(request(0.4, 0.02, 4.0, 1e-4));
  const auto b = build_curve(request(0.4, 0.02, 4.0, 1e-4));
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].r == b.samples[i].r);
    CHECK(a.samples[i].t == b.samples[i].t);
  }
}
