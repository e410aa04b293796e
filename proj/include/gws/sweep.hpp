#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gws/cmt.hpp"
#include "gws/device.hpp"

namespace gws {

enum class CellStatus { Ok, NoModes, ZeroCoupling };

const char* to_string(CellStatus s);

struct SweepCell {
  double d_nm = 0.0;
  double D_nm = 0.0;
  double fT_hz = 0.0;
  double L_nm = 0.0;
  double Ec_meV = 0.0;
  CellStatus status = CellStatus::Ok;
};

struct SweepRequest {
  CouplerSpec base;
  int m = 1;
  int n = 1;
  std::vector<double> d_values;
  std::vector<double> D_values;
  // Hold k1 d fixed across the d axis by rescaling E (the drain width tracks
  // d as well). When false, E stays at the base value.
  bool hold_k1d = true;
};

struct SweepResult {
  std::vector<SweepCell> cells;  // row-major: d outer, D inner
  std::size_t n_d = 0;
  std::size_t n_D = 0;
};

// Evaluates every (d, D) cell of the grid. Mode or coupling failures are
// recorded per cell as NoModes / ZeroCoupling; other errors propagate.
// Cells are pre-indexed, so any thread count yields identical results.
SweepResult sweep_grid(const SweepRequest& req, int threads = 1);

// Least squares of ln fT against D for the scaling law
// fT = 2 v_F Omega0 e^(-gamma D) / pi.
struct ExpFit {
  double omega0_nm = 0.0;  // 1/nm
  double gamma_nm = 0.0;   // 1/nm
  double r2 = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t n_points = 0;
};

// Throws InsufficientPoints for fewer than 3 samples and
// NonPositiveFrequency when any fT <= 0 or is not finite.
ExpFit fit_exponential(const std::vector<double>& D_values,
                       const std::vector<double>& fT_values);

}  // namespace gws
