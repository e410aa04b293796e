#include "gws/cmt.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "gws/errors.hpp"
#include "gws/quantities.hpp"

namespace gws {

namespace {

constexpr cplx kI{0.0, 1.0};

double max_rate(const CMTSystem& sys) {
  return std::max({std::abs(sys.C12), std::abs(sys.C21), std::abs(sys.delta)});
}

void check_propagation_args(const CMTSystem& sys, cplx a1_0, cplx a2_0,
                            double y_max, double dy) {
  if (!(dy > 0.0)) throw OutOfDomain("dy must be positive");
  if (!(y_max >= dy)) throw OutOfDomain("y_max must be at least dy");
  if (std::norm(a1_0) + std::norm(a2_0) == 0.0)
    throw OutOfDomain("initial amplitude must be nonzero");
  if (dy * max_rate(sys) > 0.1)
    throw StepTooLarge("dy too coarse for the system's fastest rate");
}

struct State {
  cplx a1;
  cplx a2;
};

State operator+(State u, const State& v) { return {u.a1 + v.a1, u.a2 + v.a2}; }
State operator*(double s, const State& v) { return {s * v.a1, s * v.a2}; }

template <typename Deriv>
PropagationTrace integrate(Deriv f, cplx a1_0, cplx a2_0, double y_max, double dy) {
  // land exactly on y_max with a uniform step no coarser than dy
  const std::size_t n_steps =
      static_cast<std::size_t>(std::ceil(y_max / dy - 1e-9));
  const double h = y_max / static_cast<double>(n_steps);

  PropagationTrace tr;
  tr.y_nm.reserve(n_steps + 1);
  tr.a1.reserve(n_steps + 1);
  tr.a2.reserve(n_steps + 1);
  tr.p1.reserve(n_steps + 1);
  tr.p2.reserve(n_steps + 1);

  State s{a1_0, a2_0};
  auto record = [&tr](double y, const State& st) {
    tr.y_nm.push_back(y);
    tr.a1.push_back(st.a1);
    tr.a2.push_back(st.a2);
    tr.p1.push_back(std::norm(st.a1));
    tr.p2.push_back(std::norm(st.a2));
  };
  record(0.0, s);

  for (std::size_t i = 0; i < n_steps; ++i) {
    const double y = static_cast<double>(i) * h;
    const State k1 = f(y, s);
    const State k2 = f(y + 0.5 * h, s + 0.5 * h * k1);
    const State k3 = f(y + 0.5 * h, s + 0.5 * h * k2);
    const State k4 = f(y + h, s + h * k3);
    s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(static_cast<double>(i + 1) * h, s);
  }
  tr.norm_drift = std::abs(tr.p1.back() + tr.p2.back() - tr.p1.front() - tr.p2.front());
  return tr;
}

}  // namespace

bool hermitian(const CMTSystem& sys) {
  const double scale = std::max(std::abs(sys.C12), std::abs(sys.C21));
  return std::abs(sys.C12 - sys.C21) <= 1e-10 * scale;
}

PropagationTrace propagate(const CMTSystem& sys, cplx a1_0, cplx a2_0,
                           double y_max, double dy) {
  check_propagation_args(sys, a1_0, a2_0, y_max, dy);
  auto f = [&sys](double y, const State& s) -> State {
    const cplx phase = std::exp(kI * (sys.delta * y));
    return {-kI * sys.C12 * s.a2 * phase, -kI * sys.C21 * s.a1 / phase};
  };
  return integrate(f, a1_0, a2_0, y_max, dy);
}

PropagationTrace propagate_rotating(const CMTSystem& sys, cplx a1_0, cplx a2_0,
                                    double y_max, double dy) {
  check_propagation_args(sys, a1_0, a2_0, y_max, dy);
  // b1 = a1 e^(-i delta y / 2), b2 = a2 e^(+i delta y / 2) obey db/dy = -iHb
  // with constant H = [[delta/2, C12], [C21, -delta/2]].
  const double half = 0.5 * sys.delta;
  auto f = [&sys, half](double, const State& b) -> State {
    return {-kI * (half * b.a1 + sys.C12 * b.a2),
            -kI * (sys.C21 * b.a1 - half * b.a2)};
  };
  PropagationTrace tr = integrate(f, a1_0, a2_0, y_max, dy);
  for (std::size_t k = 0; k < tr.y_nm.size(); ++k) {
    const cplx back = std::exp(kI * (half * tr.y_nm[k]));
    tr.a1[k] *= back;
    tr.a2[k] /= back;
    tr.p1[k] = std::norm(tr.a1[k]);
    tr.p2[k] = std::norm(tr.a2[k]);
  }
  return tr;
}

std::pair<cplx, cplx> analytic_rabi(const CMTSystem& sys, cplx a1_0, cplx a2_0,
                                    double y) {
  if (!hermitian(sys)) throw NonHermitian("closed form requires C12 == C21");
  const double C = sys.C12;
  const double half = 0.5 * sys.delta;
  const double omega = std::hypot(C, half);
  // U = cos(w y) I - i sin(w y)/w H in the rotating frame; sinc form keeps
  // the w -> 0 limit finite.
  const double c = std::cos(omega * y);
  const double s = omega == 0.0 ? y : std::sin(omega * y) / omega;
  const cplx b1 = a1_0;  // frames coincide at y = 0
  const cplx b2 = a2_0;
  const cplx b1y = c * b1 - kI * s * (half * b1 + C * b2);
  const cplx b2y = c * b2 - kI * s * (C * b1 - half * b2);
  const cplx back = std::exp(kI * (half * y));
  return {b1y * back, b2y / back};
}

TransferMetrics transfer_metrics(const CMTSystem& sys, int order_n) {
  if (!hermitian(sys)) throw NonHermitian("transfer metrics require C12 == C21");
  if (order_n < 0) throw OutOfDomain("transfer order must be nonnegative");
  const double C = sys.C12;
  if (C == 0.0) throw ZeroCoupling("no transfer length at zero coupling");
  const double omega = std::hypot(C, 0.5 * sys.delta);
  TransferMetrics tm;
  tm.rabi_omega = omega;
  tm.order_n = order_n;
  tm.L_nm = (2.0 * order_n + 1.0) * std::numbers::pi / (2.0 * omega);
  tm.fT_hz = constants::v_F_nm_per_s / tm.L_nm;
  tm.max_transfer = (C * C) / (omega * omega);
  return tm;
}

SwitchingPoint switching_point(const CouplerSpec& spec, int m, int n, double dV_meV) {
  CouplerSpec detuned = spec;
  detuned.drain.gate_V_meV += dV_meV;
  validate_spec(detuned);
  const CouplingResult cc = coupling_coefficients(detuned, m, n);
  const double product = cc.C12 * cc.C21;
  if (product <= 0.0) throw ZeroCoupling("symmetrized coupling is not positive");
  SwitchingPoint pt;
  pt.dV_meV = dV_meV;
  pt.delta = cc.delta;
  pt.coupling = std::sqrt(product);
  pt.symmetrized = !hermitian({cc.C12, cc.C21, cc.delta});
  const double omega = std::hypot(pt.coupling, 0.5 * cc.delta);
  pt.max_transfer = pt.coupling * pt.coupling / (omega * omega);
  pt.L_nm = std::numbers::pi / (2.0 * omega);
  return pt;
}

std::vector<SwitchingPoint> switching_curve(const CouplerSpec& spec, int m, int n,
                                            const std::vector<double>& dV_values) {
  std::vector<SwitchingPoint> curve;
  curve.reserve(dV_values.size());
  for (double dV : dV_values) curve.push_back(switching_point(spec, m, n, dV));
  return curve;
}

}  // namespace gws
