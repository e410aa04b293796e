#include "gws/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gws/errors.hpp"
#include "gws/quantities.hpp"

namespace gws {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// int_0^W e^(-p t) dt with p >= 0; W may be infinite (then p > 0).
double exp_integral(double p, double W) {
  if (std::isinf(W)) return 1.0 / p;
  if (p == 0.0) return W;
  return -std::expm1(-p * W) / p;
}

// int_0^W e^(-p t) cos(w t + phi) dt with p >= 0.
double exp_cos_integral(double p, double w, double phi, double W) {
  if (w == 0.0) return std::cos(phi) * exp_integral(p, W);
  if (std::isinf(W)) {
    return (p * std::cos(phi) - w * std::sin(phi)) / (p * p + w * w);
  }
  if (p == 0.0) {
    const double x = w * W;
    if (std::abs(x) < 1e-5) {
      // series form of (sin(wW + phi) - sin(phi)) / w, stable for tiny wW
      return W * (std::cos(phi) * (1.0 - x * x / 6.0) -
                  std::sin(phi) * (x / 2.0 - x * x * x / 24.0));
    }
    return (std::sin(x + phi) - std::sin(phi)) / w;
  }
  const double den = p * p + w * w;
  const double f0 = (-p * std::cos(phi) + w * std::sin(phi)) / den;
  const double fw = std::exp(-p * W) *
                    (-p * std::cos(w * W + phi) + w * std::sin(w * W + phi)) / den;
  return fw - f0;
}

// int_0^W e^(-ka t) e^(-kb (W - t)) dt; tails decaying toward each other.
// Ordered so only negative exponents appear.
double bridge_integral(double ka, double kb, double W) {
  if (ka > kb) std::swap(ka, kb);
  const double delta = kb - ka;
  if (delta * W < 1e-12) return W * std::exp(-0.5 * (ka + kb) * W);
  return std::exp(-ka * W) * (-std::expm1(-delta * W)) / delta;
}

// Local form of one profile on a segment that does not straddle a well edge.
struct Piece {
  enum Kind { Trig, ExpLeft, ExpRight } kind;
  // Trig: u = amp cos(k (x - c) + psi).  ExpLeft decays toward -inf with
  // value amp at the segment's right edge; ExpRight decays toward +inf with
  // value amp at the segment's left edge.
  double amp = 0.0;
  double k = 0.0;
  double c = 0.0;
  double psi = 0.0;
  double kappa = 0.0;
};

Piece classify(const GuidedMode& m, const Interval& well, bool mirrored,
               double a, double b) {
  Piece p;
  const double probe = std::isinf(a) ? b - 1.0 : (std::isinf(b) ? a + 1.0 : 0.5 * (a + b));
  if (probe < well.lo) {
    p.kind = Piece::ExpLeft;
    p.kappa = m.kappa;
    p.amp = profile_value(m, well, mirrored, b);
    return p;
  }
  if (probe > well.hi) {
    p.kind = Piece::ExpRight;
    p.kappa = m.kappa;
    p.amp = profile_value(m, well, mirrored, a);
    return p;
  }
  p.kind = Piece::Trig;
  p.amp = m.norm_inside;
  p.k = m.k_x;
  p.c = well.center();
  // cos parity: u = A cos(k (x-c)); sin parity: A sin(k (x-c)) =
  // A cos(k (x-c) - pi/2), and mirroring x-c -> c-x flips the phase sign.
  const double psi0 = m.parity == Parity::Symmetric ? 0.0 : -0.5 * kPi;
  p.psi = mirrored ? -psi0 : psi0;
  return p;
}

double segment_integral(const Piece& p1, const Piece& p2, double a, double b) {
  const double W = b - a;
  if (p1.kind == Piece::Trig && p2.kind == Piece::Trig) {
    // product to sum: cos X cos Y = (cos(X-Y) + cos(X+Y)) / 2
    const double f1 = p1.k * (a - p1.c) + p1.psi;
    const double f2 = p2.k * (a - p2.c) + p2.psi;
    return 0.5 * p1.amp * p2.amp *
           (exp_cos_integral(0.0, p1.k - p2.k, f1 - f2, W) +
            exp_cos_integral(0.0, p1.k + p2.k, f1 + f2, W));
  }
  if (p1.kind != Piece::Trig && p2.kind != Piece::Trig) {
    if (p1.kind == p2.kind) return p1.amp * p2.amp * exp_integral(p1.kappa + p2.kappa, W);
    const Piece& right = p1.kind == Piece::ExpRight ? p1 : p2;
    const Piece& left = p1.kind == Piece::ExpRight ? p2 : p1;
    return right.amp * left.amp * bridge_integral(right.kappa, left.kappa, W);
  }
  const Piece& tr = p1.kind == Piece::Trig ? p1 : p2;
  const Piece& ex = p1.kind == Piece::Trig ? p2 : p1;
  double phi;
  if (ex.kind == Piece::ExpRight) {
    phi = tr.k * (a - tr.c) + tr.psi;  // t measured from a
  } else {
    // t measured from b; cos(k (b - t - c) + psi) = cos(k t - k (b - c) - psi)
    phi = -(tr.k * (b - tr.c) + tr.psi);
  }
  return tr.amp * ex.amp * exp_cos_integral(ex.kappa, tr.k, phi, W);
}

}  // namespace

double overlap_profiles(const GuidedMode& m1, const Interval& well1, bool mirrored1,
                        const GuidedMode& m2, const Interval& well2, bool mirrored2) {
  double edges[4] = {well1.lo, well1.hi, well2.lo, well2.hi};
  std::sort(edges, edges + 4);
  std::vector<std::pair<double, double>> segments;
  segments.reserve(5);
  segments.emplace_back(-kInf, edges[0]);
  for (int i = 0; i < 3; ++i)
    if (edges[i + 1] > edges[i]) segments.emplace_back(edges[i], edges[i + 1]);
  segments.emplace_back(edges[3], kInf);

  double total = 0.0;
  for (const auto& [a, b] : segments) {
    const Piece p1 = classify(m1, well1, mirrored1, a, b);
    const Piece p2 = classify(m2, well2, mirrored2, a, b);
    total += segment_integral(p1, p2, a, b);
  }
  return total;
}

double overlap_integral(const GuidedMode& m1, const GuidedMode& m2,
                        const CouplerGeometry& geom) {
  return overlap_profiles(m1, geom.well1, false, m2, geom.well2, true);
}

double coupling_energy_meV(double C12, double C21) {
  return constants::hbar_vF_meV_nm * std::sqrt(C12 * C21);
}

CouplingResult coupling_coefficients(const CouplerSpec& spec, int m, int n) {
  const double k1 = channel_wavevector(spec, 1);
  const double k2 = channel_wavevector(spec, 2);
  const double k0sq = barrier_k0_squared(spec);

  const DispersionContext ctx1{spec.source.width_d_nm, k1, k0sq};
  const DispersionContext ctx2{spec.drain.width_d_nm, k2, k0sq};
  const std::vector<GuidedMode> modes1 = find_modes(ctx1);
  const std::vector<GuidedMode> modes2 = find_modes(ctx2);
  if (m < 1 || static_cast<std::size_t>(m) > modes1.size())
    throw ModeNotFound("well 1 has no mode " + std::to_string(m));
  if (n < 1 || static_cast<std::size_t>(n) > modes2.size())
    throw ModeNotFound("well 2 has no mode " + std::to_string(n));

  const GuidedMode& u1 = modes1[m - 1];
  const GuidedMode& u2 = modes2[n - 1];
  CouplingResult cc;
  cc.m = m;
  cc.n = n;
  cc.overlap = overlap_integral(u1, u2, geometry(spec));
  cc.C12 = 0.5 * (k2 * k2 - k0sq) / u1.beta * cc.overlap;
  cc.C21 = 0.5 * (k1 * k1 - k0sq) / u2.beta * cc.overlap;
  cc.delta = u1.beta - u2.beta;
  cc.coupling_energy_meV = coupling_energy_meV(cc.C12, cc.C21);
  return cc;
}

}  // namespace gws
