#include "gws/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "gws/coupling.hpp"
#include "gws/errors.hpp"
#include "gws/quantities.hpp"

namespace gws {

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw OutOfDomain(std::string(name) + " axis is empty");
  for (std::size_t i = 1; i < axis.size(); ++i)
    if (!(axis[i] > axis[i - 1]))
      throw OutOfDomain(std::string(name) + " axis must be strictly ascending");
}

SweepCell evaluate_cell(const SweepRequest& req, double k1d_target,
                        double d, double D) {
  SweepCell cell;
  cell.d_nm = d;
  cell.D_nm = D;

  CouplerSpec spec = req.base;
  spec.source.width_d_nm = d;
  spec.drain.width_d_nm = d;
  spec.separation_D_nm = D;
  if (req.hold_k1d)
    spec.energy_E_meV =
        energy_from_wavevector(k1d_target / d, spec.source.gate_V_meV);
  validate_spec(spec);

  try {
    const CouplingResult cc = coupling_coefficients(spec, req.m, req.n);
    const double product = cc.C12 * cc.C21;
    if (product <= 0.0) throw ZeroCoupling("symmetrized coupling is not positive");
    const double c_bar = std::sqrt(product);
    const TransferMetrics tm = transfer_metrics({c_bar, c_bar, cc.delta});
    cell.fT_hz = tm.fT_hz;
    cell.L_nm = tm.L_nm;
    cell.Ec_meV = coupling_energy_meV(cc.C12, cc.C21);
  } catch (const NoModesFound&) {
    cell.status = CellStatus::NoModes;
  } catch (const ModeNotFound&) {
    cell.status = CellStatus::NoModes;
  } catch (const ZeroCoupling&) {
    cell.status = CellStatus::ZeroCoupling;
  }
  return cell;
}

}  // namespace

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Ok: return "ok";
    case CellStatus::NoModes: return "no_modes";
    case CellStatus::ZeroCoupling: return "zero_coupling";
  }
  return "unknown";
}

SweepResult sweep_grid(const SweepRequest& req, int threads) {
  check_axis(req.d_values, "d");
  check_axis(req.D_values, "D");

  const double k1_base = channel_wavevector(req.base, 1);
  const double k1d_target = k1_base * req.base.source.width_d_nm;

  SweepResult res;
  res.n_d = req.d_values.size();
  res.n_D = req.D_values.size();
  const std::size_t n_cells = res.n_d * res.n_D;
  res.cells.resize(n_cells);

  const std::size_t n_workers = std::min<std::size_t>(
      n_cells, threads < 1 ? 1 : static_cast<std::size_t>(threads));

  // Pre-indexed slots with a stride partition: output bytes never depend on
  // the worker count or completion order.
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&](std::size_t start) {
    try {
      for (std::size_t idx = start; idx < n_cells; idx += n_workers) {
        const double d = req.d_values[idx / res.n_D];
        const double D = req.D_values[idx % res.n_D];
        res.cells[idx] = evaluate_cell(req, k1d_target, d, D);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (n_workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker, t);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return res;
}

ExpFit fit_exponential(const std::vector<double>& D_values,
                       const std::vector<double>& fT_values) {
  if (D_values.size() != fT_values.size())
    throw OutOfDomain("D and fT lists differ in length");
  const std::size_t n = D_values.size();
  if (n < 3) throw InsufficientPoints("exponential fit needs at least 3 points");
  for (double f : fT_values)
    if (!(std::isfinite(f) && f > 0.0))
      throw NonPositiveFrequency("fT values must be finite and positive");

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::log(fT_values[i]);

  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x_mean += D_values[i];
    y_mean += y[i];
  }
  x_mean /= static_cast<double>(n);
  y_mean /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = D_values[i] - x_mean;
    const double dyv = y[i] - y_mean;
    sxx += dx * dx;
    sxy += dx * dyv;
    syy += dyv * dyv;
  }
  if (sxx == 0.0) throw OutOfDomain("D values must not all coincide");

  ExpFit fit;
  fit.n_points = n;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  fit.gamma_nm = -fit.slope;
  // fT = 2 v_F Omega0 e^(-gamma D) / pi, so the D = 0 intercept fixes Omega0.
  fit.omega0_nm = std::numbers::pi * std::exp(fit.intercept) /
                  (2.0 * constants::v_F_nm_per_s);

  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * D_values[i]);
    ss_res += r * r;
  }
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

}  // namespace gws
