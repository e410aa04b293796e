#pragma once

#include <vector>

#include "gws/device.hpp"

namespace gws {

enum class Parity { Symmetric, Antisymmetric };

// Everything the transverse eigenproblem of one well depends on. k_well is
// the channel wavevector magnitude, k0_squared the signed barrier quantity.
struct DispersionContext {
  double d_nm = 0.0;
  double k_well = 0.0;
  double k0_squared = 0.0;
};

// A bound transverse mode. kx^2 + beta^2 = k_well^2 and
// kappa^2 = beta^2 - k0_kinetic^2 with k0_kinetic^2 = -k0_squared.
// norm_inside (A) and norm_outside (B) are the matched amplitudes of the
// unit-norm profile; theta is the injection angle asin(beta / k_well).
struct GuidedMode {
  int index_m = 0;  // 1-based, ordered by increasing kx
  Parity parity = Parity::Symmetric;
  double k_x = 0.0;
  double beta = 0.0;
  double kappa = 0.0;
  double theta_deg = 0.0;
  double norm_inside = 0.0;
  double norm_outside = 0.0;
  double width_d = 0.0;  // well width the mode was solved on
};

// Open confinement window (0, kx_max): kappa and beta both real and positive.
double confinement_window_sq(const DispersionContext& ctx);

// Transverse matching residual, zero at a guided mode:
//   symmetric:       kx tan(kx d/2) - kappa(kx)
//   antisymmetric:  -kx cot(kx d/2) - kappa(kx)
// Throws OutOfDomain for kx outside the open confinement window.
double dispersion_residual(double k_x, const DispersionContext& ctx, Parity parity);

// Scans both parity branches on N_scan = 4096 uniform samples, brackets sign
// changes that do not straddle a tan/cot pole, and bisects each bracket to
// relative tolerance 1e-12. The scan density doubles (up to 2^20) whenever
// the mode count changes between consecutive densities. Throws NoModesFound
// when the window is empty or holds no root.
std::vector<GuidedMode> find_modes(const DispersionContext& ctx);

double injection_angle_deg(double beta, double k_well);

// Unit-norm profile value at x for a mode living on the given interval.
// mirrored evaluates u(c - x) instead of u(x - c); used for the drain well
// so the gap-facing tails of a same-parity pair share sign.
double profile_value(const GuidedMode& mode, const Interval& well, bool mirrored,
                     double x);

enum class Well { Source = 1, Drain = 2 };

double evaluate_profile(const GuidedMode& mode, const CouplerGeometry& geom,
                        Well which, double x);

}  // namespace gws
