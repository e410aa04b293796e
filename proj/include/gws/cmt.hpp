#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gws/coupling.hpp"
#include "gws/device.hpp"

namespace gws {

using cplx = std::complex<double>;

// Two-level amplitude equations along the propagation axis y:
//   da1/dy = -i C12 a2 e^(+i delta y)
//   da2/dy = -i C21 a1 e^(-i delta y)
struct CMTSystem {
  double C12 = 0.0;
  double C21 = 0.0;
  double delta = 0.0;
};

bool hermitian(const CMTSystem& sys);

struct PropagationTrace {
  std::vector<double> y_nm;
  std::vector<cplx> a1;
  std::vector<cplx> a2;
  std::vector<double> p1;
  std::vector<double> p2;
  double norm_drift = 0.0;  // |norm(end) - norm(0)|
};

// Fixed-step RK4 on the phase-explicit system; samples recorded every step
// including y = 0. Throws StepTooLarge when dy * max(|C12|, |C21|, |delta|)
// exceeds 0.1.
PropagationTrace propagate(const CMTSystem& sys, cplx a1_0, cplx a2_0,
                           double y_max, double dy);

// Same trajectory integrated in the rotating frame, where the coefficient
// matrix [[delta/2, C12], [C21, -delta/2]] is constant, then mapped back.
// Cross-agreement with propagate() is a correctness check.
PropagationTrace propagate_rotating(const CMTSystem& sys, cplx a1_0, cplx a2_0,
                                    double y_max, double dy);

// Closed-form solution for Hermitian systems (C12 == C21): generalized Rabi
// rotation at Omega_R = sqrt(C^2 + (delta/2)^2). Throws NonHermitian.
std::pair<cplx, cplx> analytic_rabi(const CMTSystem& sys, cplx a1_0, cplx a2_0,
                                    double y);

struct TransferMetrics {
  double rabi_omega = 0.0;    // 1/nm
  double L_nm = 0.0;          // (2n+1) pi / (2 Omega_R)
  double fT_hz = 0.0;         // v_F / L
  double max_transfer = 0.0;  // C^2 / Omega_R^2
  int order_n = 0;
};

// Hermitian systems only; throws NonHermitian, and ZeroCoupling when C == 0.
TransferMetrics transfer_metrics(const CMTSystem& sys, int order_n = 0);

// Detuned-device point: drain gate shifted by dV at fixed carrier energy.
// Uses the symmetrized C = sqrt(C12 C21); symmetrized is set when the
// underlying system was non-Hermitian (C12 != C21).
struct SwitchingPoint {
  double dV_meV = 0.0;
  double max_transfer = 0.0;
  double L_nm = 0.0;
  double delta = 0.0;     // 1/nm
  double coupling = 0.0;  // symmetrized C, 1/nm
  bool symmetrized = false;
};

SwitchingPoint switching_point(const CouplerSpec& spec, int m, int n, double dV_meV);

std::vector<SwitchingPoint> switching_curve(const CouplerSpec& spec, int m, int n,
                                            const std::vector<double>& dV_values);

}  // namespace gws
