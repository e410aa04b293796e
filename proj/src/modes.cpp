#include "gws/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gws/errors.hpp"

namespace gws {

namespace {

constexpr int kScanInitial = 4096;
constexpr int kScanMax = 1 << 20;
constexpr double kBisectRelTol = 1e-12;
constexpr double kPi = std::numbers::pi;

double kappa_of(double k_x, const DispersionContext& ctx) {
  return std::sqrt(ctx.k_well * ctx.k_well - k_x * k_x + ctx.k0_squared);
}

// Index of the tan/cot branch at u = kx d / 2; a bracket whose endpoints sit
// on different branches straddles a pole, not a root.
long branch_index(double u, Parity parity) {
  if (parity == Parity::Symmetric)
    return static_cast<long>(std::floor((u - 0.5 * kPi) / kPi));
  return static_cast<long>(std::floor(u / kPi));
}

double residual_unchecked(double k_x, const DispersionContext& ctx, Parity parity) {
  const double u = 0.5 * k_x * ctx.d_nm;
  const double kap = kappa_of(k_x, ctx);
  if (parity == Parity::Symmetric) return k_x * std::tan(u) - kap;
  return -k_x / std::tan(u) - kap;
}

struct Root {
  double k_x;
  Parity parity;
};

double bisect_root(const DispersionContext& ctx, Parity parity, double lo,
                   double hi, double f_lo) {
  while (hi - lo > kBisectRelTol * hi) {
    const double mid = 0.5 * (lo + hi);
    const double fm = residual_unchecked(mid, ctx, parity);
    if (fm == 0.0 || std::signbit(f_lo) != std::signbit(fm)) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// u of the pole that closes the given branch.
double pole_u(long branch, Parity parity) {
  const double n = static_cast<double>(branch + 1);
  return parity == Parity::Symmetric ? (n + 0.5) * kPi : n * kPi;
}

// The residual is strictly increasing where it can vanish and diverges to
// +infinity at the branch's closing pole, so a branch whose last sample is
// still negative hides exactly one root between that sample and the pole
// (arbitrarily close to it in the strong-barrier limit, where uniform
// sampling alone would miss it at every density). Approach the pole
// geometrically until the residual turns positive, then bisect as usual.
void bracket_before_pole(const DispersionContext& ctx, Parity parity, double a,
                         double fa, long branch_a, std::vector<Root>& out) {
  const double kx_pole = 2.0 * pole_u(branch_a, parity) / ctx.d_nm;
  double gap = kx_pole - a;
  for (int j = 0; j < 64; ++j) {
    gap *= 0.5;
    const double hi = kx_pole - gap;
    if (hi <= a) return;
    const double f_hi = residual_unchecked(hi, ctx, parity);
    if (f_hi >= 0.0) {
      out.push_back({bisect_root(ctx, parity, a, hi, fa), parity});
      return;
    }
  }
}

void scan_branch(const DispersionContext& ctx, Parity parity, int n_scan,
                 double kx_lo, double kx_hi, std::vector<Root>& out) {
  const double step = (kx_hi - kx_lo) / n_scan;
  double a = kx_lo;
  double fa = residual_unchecked(a, ctx, parity);
  long branch_a = branch_index(0.5 * a * ctx.d_nm, parity);
  for (int i = 1; i <= n_scan; ++i) {
    const double b = kx_lo + i * step;
    const double fb = residual_unchecked(b, ctx, parity);
    const long branch_b = branch_index(0.5 * b * ctx.d_nm, parity);
    const bool crosses = fa != 0.0 && fb != 0.0 && std::signbit(fa) != std::signbit(fb);
    if (fb == 0.0) {
      out.push_back({b, parity});
    } else if (branch_a == branch_b) {
      if (crosses) out.push_back({bisect_root(ctx, parity, a, b, fa), parity});
    } else if (fa != 0.0 && std::signbit(fa)) {
      bracket_before_pole(ctx, parity, a, fa, branch_a, out);
    }
    a = b;
    fa = fb;
    branch_a = branch_b;
  }
}

std::vector<Root> scan_all(const DispersionContext& ctx, int n_scan, double kx_hi) {
  std::vector<Root> roots;
  const double kx_lo = kx_hi * 1e-9;
  scan_branch(ctx, Parity::Symmetric, n_scan, kx_lo, kx_hi, roots);
  scan_branch(ctx, Parity::Antisymmetric, n_scan, kx_lo, kx_hi, roots);
  std::sort(roots.begin(), roots.end(),
            [](const Root& x, const Root& y) { return x.k_x < y.k_x; });
  return roots;
}

}  // namespace

double confinement_window_sq(const DispersionContext& ctx) {
  return ctx.k_well * ctx.k_well + std::min(ctx.k0_squared, 0.0);
}

double dispersion_residual(double k_x, const DispersionContext& ctx, Parity parity) {
  const double win = confinement_window_sq(ctx);
  if (!(k_x > 0.0) || !(k_x * k_x < win))
    throw OutOfDomain("k_x outside the open confinement window");
  return residual_unchecked(k_x, ctx, parity);
}

double injection_angle_deg(double beta, double k_well) {
  return std::asin(beta / k_well) * 180.0 / kPi;
}

std::vector<GuidedMode> find_modes(const DispersionContext& ctx) {
  if (ctx.d_nm <= 0.0) throw NonPositiveWidth("well width must be positive");
  const double win = confinement_window_sq(ctx);
  if (!(win > 0.0) || !(ctx.k_well > 0.0))
    throw NoModesFound("empty confinement window");
  const double kx_hi = std::sqrt(win) * (1.0 - 1e-12);

  std::vector<Root> roots = scan_all(ctx, kScanInitial, kx_hi);
  for (int n = kScanInitial; n < kScanMax;) {
    const int n2 = n * 2;
    std::vector<Root> finer = scan_all(ctx, n2, kx_hi);
    const bool stable = finer.size() == roots.size();
    roots = std::move(finer);
    n = n2;
    if (stable) break;
  }
  if (roots.empty()) throw NoModesFound("no guided transverse mode in window");

  std::vector<GuidedMode> modes;
  modes.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double kx = roots[i].k_x;
    GuidedMode m;
    m.index_m = static_cast<int>(i) + 1;
    m.parity = roots[i].parity;
    m.k_x = kx;
    m.beta = std::sqrt(ctx.k_well * ctx.k_well - kx * kx);
    m.kappa = kappa_of(kx, ctx);
    m.theta_deg = injection_angle_deg(m.beta, ctx.k_well);
    m.width_d = ctx.d_nm;
    // Unit norm in closed form: A^2 (d/2 +- sin(kx d)/(2 kx)) + B^2 / kappa = 1
    // with B = A cos(kx d/2) (symmetric) or A sin(kx d/2) (antisymmetric).
    const double kxd = kx * ctx.d_nm;
    double inside, edge;
    if (m.parity == Parity::Symmetric) {
      inside = 0.5 * ctx.d_nm + std::sin(kxd) / (2.0 * kx);
      edge = std::cos(0.5 * kxd);
    } else {
      inside = 0.5 * ctx.d_nm - std::sin(kxd) / (2.0 * kx);
      edge = std::sin(0.5 * kxd);
    }
    m.norm_inside = 1.0 / std::sqrt(inside + edge * edge / m.kappa);
    m.norm_outside = m.norm_inside * edge;
    modes.push_back(m);
  }
  return modes;
}

double profile_value(const GuidedMode& mode, const Interval& well, bool mirrored,
                     double x) {
  const double c = well.center();
  const double half = 0.5 * well.width();
  const double xi = mirrored ? c - x : x - c;
  if (std::abs(xi) <= half) {
    const double arg = mode.k_x * xi;
    return mode.norm_inside *
           (mode.parity == Parity::Symmetric ? std::cos(arg) : std::sin(arg));
  }
  const double sign =
      (xi < 0.0 && mode.parity == Parity::Antisymmetric) ? -1.0 : 1.0;
  return sign * mode.norm_outside * std::exp(-mode.kappa * (std::abs(xi) - half));
}

double evaluate_profile(const GuidedMode& mode, const CouplerGeometry& geom,
                        Well which, double x) {
  if (which == Well::Source) return profile_value(mode, geom.well1, false, x);
  return profile_value(mode, geom.well2, true, x);
}

}  // namespace gws
