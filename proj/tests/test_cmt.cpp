#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "gws/cmt.hpp"
#include "gws/device.hpp"
#include "gws/errors.hpp"
#include "gws/quantities.hpp"
#include "test_common.hpp"

using namespace gws;
using testutil::reference_config;
using testutil::reference_spec;
using testutil::rel;

namespace {

double max_p2(const PropagationTrace& tr) {
  return *std::max_element(tr.p2.begin(), tr.p2.end());
}

}  // namespace

TEST_CASE("resonant propagation transfers completely") {
  const double C = 0.01;
  const double L = std::numbers::pi / (2.0 * C);
  const PropagationTrace tr =
      propagate({C, C, 0.0}, {1.0, 0.0}, {0.0, 0.0}, L, L / 2048.0);
  CHECK(tr.p1.front() == 1.0);
  CHECK(tr.p2.front() == 0.0);
  CHECK(tr.y_nm.front() == 0.0);
  CHECK(tr.y_nm.back() == rel(L, 1e-14));
  CHECK(tr.p2.back() == rel(1.0, 1e-8));
  CHECK(tr.norm_drift < 1e-9);
  // p2(y) = sin^2(C y) along the way
  for (std::size_t k = 0; k < tr.y_nm.size(); k += 256) {
    const double s = std::sin(C * tr.y_nm[k]);
    CHECK(tr.p2[k] == doctest::Approx(s * s).epsilon(1e-8));
  }
}

TEST_CASE("detuning caps the transferred fraction") {
  const double C = 0.01;
  for (double delta : {0.02, 0.013}) {
    CAPTURE(delta);
    const double omega = std::hypot(C, 0.5 * delta);
    const double cap = C * C / (omega * omega);
    // two probability periods; the maxima land exactly on grid samples
    const double y_max = 2.0 * std::numbers::pi / omega;
    const PropagationTrace tr =
        propagate({C, C, delta}, {1.0, 0.0}, {0.0, 0.0}, y_max, y_max / 8192.0);
    CHECK(max_p2(tr) == rel(cap, 1e-7));
    CHECK(tr.p2[2048] == rel(cap, 1e-7));
  }
  // delta = 2C caps at exactly one half
  const double omega = std::hypot(C, C);
  const double y_max = 2.0 * std::numbers::pi / omega;
  const PropagationTrace tr =
      propagate({C, C, 2.0 * C}, {1.0, 0.0}, {0.0, 0.0}, y_max, y_max / 8192.0);
  CHECK(max_p2(tr) == rel(0.5, 1e-7));
}

TEST_CASE("zero coupling leaves the state untouched") {
  const cplx a1_0{0.6, 0.0};
  const cplx a2_0{0.0, 0.8};
  const PropagationTrace tr =
      propagate({0.0, 0.0, 0.005}, a1_0, a2_0, 100.0, 0.5);
  for (std::size_t k = 0; k < tr.y_nm.size(); ++k) {
    CHECK(tr.a1[k] == a1_0);
    CHECK(tr.a2[k] == a2_0);
  }
  // the drift is a sum of bitwise-identical powers, so only the rounding of
  // the summation itself can appear
  CHECK(tr.norm_drift <= 4.0 * std::numeric_limits<double>::epsilon());
}

TEST_CASE("propagation argument guards") {
  const CMTSystem sys{0.5, 0.5, 0.0};
  CHECK_THROWS_AS(propagate(sys, {1, 0}, {0, 0}, 10.0, 1.0), StepTooLarge);
  CHECK_NOTHROW(propagate({0.1, 0.1, 0.0}, {1, 0}, {0, 0}, 10.0, 1.0));
  CHECK_THROWS_AS(propagate(sys, {1, 0}, {0, 0}, 10.0, 0.0), OutOfDomain);
  CHECK_THROWS_AS(propagate(sys, {1, 0}, {0, 0}, 10.0, -0.1), OutOfDomain);
  CHECK_THROWS_AS(propagate(sys, {1, 0}, {0, 0}, 0.05, 0.1), OutOfDomain);
  CHECK_THROWS_AS(propagate(sys, {0, 0}, {0, 0}, 10.0, 0.1), OutOfDomain);
}

TEST_CASE("trace grid lands exactly on y_max") {
  // dy that does not divide y_max gets rounded down to a uniform step
  const PropagationTrace tr =
      propagate({0.01, 0.01, 0.0}, {1, 0}, {0, 0}, 1000.0, 0.3);
  CHECK(tr.y_nm.size() == 3335);  // ceil(1000/0.3) = 3334 steps
  CHECK(tr.y_nm.front() == 0.0);
  CHECK(tr.y_nm.back() == rel(1000.0, 1e-14));
  const double h = tr.y_nm[1] - tr.y_nm[0];
  CHECK(h <= 0.3);
  CHECK(tr.y_nm[2] - tr.y_nm[1] == rel(h, 1e-12));
}

TEST_CASE("phase-explicit and rotating-frame integrators agree") {
  for (const CMTSystem sys : {CMTSystem{0.012, 0.012, 0.004},
                              CMTSystem{0.012, 0.009, 0.002}}) {
    CAPTURE(sys.C12);
    CAPTURE(sys.C21);
    const double y_max = 3000.0;
    const double dy = y_max / 8192.0;
    const PropagationTrace a = propagate(sys, {1, 0}, {0, 0}, y_max, dy);
    const PropagationTrace b = propagate_rotating(sys, {1, 0}, {0, 0}, y_max, dy);
    REQUIRE(a.y_nm.size() == b.y_nm.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < a.y_nm.size(); ++k) {
      worst = std::max(worst, std::abs(a.a1[k] - b.a1[k]));
      worst = std::max(worst, std::abs(a.a2[k] - b.a2[k]));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("integrator matches the analytic Rabi solution") {
  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> U01(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double C = 1e-4 + 0.05 * U01(rng);
    const double delta = -0.05 + 0.1 * U01(rng);
    const double omega = std::hypot(C, 0.5 * delta);
    // random normalized initial state
    cplx a1_0{U01(rng) - 0.5, U01(rng) - 0.5};
    cplx a2_0{U01(rng) - 0.5, U01(rng) - 0.5};
    const double norm = std::sqrt(std::norm(a1_0) + std::norm(a2_0));
    a1_0 /= norm;
    a2_0 /= norm;

    const double y_max = 10.0 * std::numbers::pi / omega;  // 10 Rabi periods
    const PropagationTrace tr =
        propagate({C, C, delta}, a1_0, a2_0, y_max, y_max / 16384.0);
    CAPTURE(trial);
    CAPTURE(C);
    CAPTURE(delta);
    double worst = 0.0;
    for (std::size_t k = 0; k < tr.y_nm.size(); k += 128) {
      const auto [e1, e2] = analytic_rabi({C, C, delta}, a1_0, a2_0, tr.y_nm[k]);
      worst = std::max(worst, std::abs(tr.a1[k] - e1));
      worst = std::max(worst, std::abs(tr.a2[k] - e2));
    }
    CHECK(worst < 1e-6);
    CHECK(tr.norm_drift < 1e-9);
  }
}

TEST_CASE("analytic Rabi endpoints") {
  const double C = 0.004;
  SUBCASE("resonant full transfer") {
    const auto [a1, a2] =
        analytic_rabi({C, C, 0.0}, {1, 0}, {0, 0}, std::numbers::pi / (2.0 * C));
    CHECK(std::norm(a2) == rel(1.0, 1e-12));
    CHECK(std::norm(a1) < 1e-12);
  }
  SUBCASE("delta = 2C caps at one half") {
    const double omega = std::hypot(C, C);
    const auto [a1, a2] = analytic_rabi({C, C, 2.0 * C}, {1, 0}, {0, 0},
                                        std::numbers::pi / (2.0 * omega));
    CHECK(std::norm(a2) == rel(0.5, 1e-12));
  }
  SUBCASE("refuses asymmetric coefficients") {
    CHECK_THROWS_AS(analytic_rabi({0.01, 0.02, 0.0}, {1, 0}, {0, 0}, 1.0),
                    NonHermitian);
  }
}

TEST_CASE("norm is conserved over ten thousand steps") {
  const CMTSystem sys{0.01, 0.01, 0.003};
  const double omega = std::hypot(0.01, 0.0015);
  const double y_max = 10.0 * std::numbers::pi / omega;
  const PropagationTrace tr =
      propagate(sys, {1, 0}, {0, 0}, y_max, y_max / 10000.0);
  REQUIRE(tr.y_nm.size() == 10001);
  CHECK(tr.norm_drift < 1e-9);
  double worst = 0.0;
  for (std::size_t k = 0; k < tr.y_nm.size(); ++k)
    worst = std::max(worst, std::abs(tr.p1[k] + tr.p2[k] - 1.0));
  CHECK(worst < 1e-9);
}

TEST_CASE("halving the step cuts the error sixteenfold") {
  const CMTSystem sys{0.02, 0.02, 0.01};
  const double omega = std::hypot(0.02, 0.005);
  const double y_max = 2.0 * std::numbers::pi / omega;
  auto max_err = [&](double dy) {
    const PropagationTrace tr = propagate(sys, {1, 0}, {0, 0}, y_max, dy);
    double worst = 0.0;
    for (std::size_t k = 0; k < tr.y_nm.size(); ++k) {
      const auto [e1, e2] = analytic_rabi(sys, {1, 0}, {0, 0}, tr.y_nm[k]);
      worst = std::max(worst, std::abs(tr.a2[k] - e2));
    }
    return worst;
  };
  const double coarse = max_err(y_max / 256.0);
  const double fine = max_err(y_max / 512.0);
  const double ratio = coarse / fine;
  CHECK(ratio > 13.0);
  CHECK(ratio < 19.0);
}

TEST_CASE("conjugate reversal returns to the start") {
  const double C = 0.008;
  const CMTSystem sys{C, C, 0.0};
  const double L = std::numbers::pi / (2.0 * C);
  const PropagationTrace fwd = propagate(sys, {1, 0}, {0, 0}, L, L / 4096.0);
  const PropagationTrace back = propagate(sys, std::conj(fwd.a1.back()),
                                          std::conj(fwd.a2.back()), L, L / 4096.0);
  CHECK(std::abs(back.a1.back() - cplx{1.0, 0.0}) < 1e-8);
  CHECK(std::abs(back.a2.back()) < 1e-8);
}

TEST_CASE("plane waves satisfy the discrete Helmholtz identity") {
  const double beta = 0.076732298019391562;  // reference mode-1 beta
  auto defect = [&](double h) {
    // max |(f[k+1] - 2 f[k] + f[k-1]) / h^2 + beta^2 f[k]| on e^(-i beta y)
    double worst = 0.0;
    for (int k = 1; k < 200; ++k) {
      const double y = k * h;
      const cplx f = std::exp(cplx{0.0, -beta * y});
      const cplx fp = std::exp(cplx{0.0, -beta * (y + h)});
      const cplx fm = std::exp(cplx{0.0, -beta * (y - h)});
      worst = std::max(worst,
                       std::abs((fp - 2.0 * f + fm) / (h * h) + beta * beta * f));
    }
    return worst;
  };
  const double h = 1.0;
  // leading defect is beta^2 (beta h)^2 / 12
  const double bound = beta * beta * (beta * h) * (beta * h) / 12.0;
  CHECK(defect(h) < 1.05 * bound);
  const double r = defect(h) / defect(0.5 * h);
  CHECK(r > 3.8);  // second-order defect: quarters when h halves
  CHECK(r < 4.2);
}

TEST_CASE("transfer metrics reproduce the quoted device points") {
  const double pi = std::numbers::pi;
  const TransferMetrics m654 = transfer_metrics({pi / 1308.0, pi / 1308.0, 0.0});
  CHECK(m654.L_nm == rel(654.0, 1e-12));
  CHECK(m654.fT_hz == rel(1.529e12, 5e-3));
  CHECK(m654.max_transfer == 1.0);
  CHECK(m654.rabi_omega == rel(pi / 1308.0, 1e-14));
  CHECK(m654.fT_hz == constants::v_F_nm_per_s / m654.L_nm);

  const TransferMetrics m302 = transfer_metrics({pi / 604.0, pi / 604.0, 0.0});
  CHECK(m302.L_nm == rel(302.0, 1e-12));
  CHECK(m302.fT_hz == rel(3.31e12, 5e-3));

  const TransferMetrics third = transfer_metrics({pi / 1308.0, pi / 1308.0, 0.0}, 1);
  CHECK(third.L_nm == rel(3.0 * 654.0, 1e-12));
  CHECK(third.order_n == 1);

  // detuned metrics follow the generalized Rabi frequency
  const double C = 0.002, delta = 0.003;
  const double omega = std::hypot(C, 0.5 * delta);
  const TransferMetrics det = transfer_metrics({C, C, delta});
  CHECK(det.L_nm == rel(pi / (2.0 * omega), 1e-13));
  CHECK(det.max_transfer == rel(C * C / (omega * omega), 1e-13));

  CHECK_THROWS_AS(transfer_metrics({0.0, 0.0, 0.1}), ZeroCoupling);
  CHECK_THROWS_AS(transfer_metrics({0.01, 0.02, 0.0}), NonHermitian);
  CHECK_THROWS_AS(transfer_metrics({0.01, 0.01, 0.0}, -1), OutOfDomain);
}

TEST_CASE("hermitian flag tolerates only tiny asymmetry") {
  CHECK(hermitian({0.01, 0.01, 0.5}));
  CHECK(hermitian({0.01, 0.01 * (1.0 + 1e-12), 0.0}));
  CHECK_FALSE(hermitian({0.01, 0.0100001, 0.0}));
  CHECK_FALSE(hermitian({0.01, 0.02, 0.0}));
}

TEST_CASE("switching point pins the detuned reference device") {
  const CouplerSpec spec = reference_spec();
  const SwitchingPoint p0 = switching_point(spec, 1, 1, 0.0);
  CHECK(p0.max_transfer == 1.0);
  CHECK(p0.delta == 0.0);
  CHECK_FALSE(p0.symmetrized);

  const SwitchingPoint p = switching_point(spec, 1, 1, 0.05);
  CHECK(p.max_transfer == rel(0.91302729095483137, 1e-10));
  CHECK(p.delta == rel(7.6605983876362749e-05, 1e-9));
  CHECK(p.coupling == rel(0.00012410322851514824, 1e-10));
  CHECK(p.symmetrized);  // gate offset breaks C12 = C21
  CHECK(p.L_nm == rel(std::numbers::pi / (2.0 * std::hypot(p.coupling, 0.5 * p.delta)),
                      1e-12));
}

TEST_CASE("transfer falls monotonically with gate offset") {
  const CouplerSpec spec = reference_spec();
  const std::vector<double> offsets{-0.1, -0.05, -0.02, 0.0, 0.02, 0.05, 0.1};
  const std::vector<SwitchingPoint> curve = switching_curve(spec, 1, 1, offsets);
  REQUIRE(curve.size() == offsets.size());
  const std::size_t mid = 3;
  CHECK(curve[mid].max_transfer == 1.0);
  for (std::size_t k = 0; k + 1 <= mid; ++k) {
    CHECK(curve[k].max_transfer < curve[k + 1].max_transfer);  // rising to 0
    CHECK(curve[curve.size() - 1 - k].max_transfer <
          curve[curve.size() - 2 - k].max_transfer);  // falling after 0
  }
}

TEST_CASE("half transfer sits where delta equals twice the coupling") {
  const CouplerSpec spec = reference_spec();
  const double dV_half = 0.16343809961463762;
  const SwitchingPoint p = switching_point(spec, 1, 1, dV_half);
  CHECK(p.max_transfer == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(p.delta == rel(2.0 * p.coupling, 1e-7));
}

TEST_CASE("detuning far enough destroys the drain mode") {
  const CouplerSpec spec = reference_spec();
  // +20 meV leaves the drain well with a single bound mode
  CHECK_THROWS_AS(switching_point(spec, 2, 2, 20.0), ModeNotFound);
  CHECK_NOTHROW(switching_point(spec, 1, 1, 20.0));
  // +52 meV lifts the drain gate above the carrier energy
  CHECK_THROWS_AS(switching_point(spec, 1, 1, 52.0), EnergyBelowGate);
}
