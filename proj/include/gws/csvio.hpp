#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gws/cmt.hpp"
#include "gws/modes.hpp"
#include "gws/sweep.hpp"

namespace gws {

// All numeric CSV output goes through one formatter so repeated runs are
// byte-identical: full double precision scientific notation.
std::string format_double(double v);

struct ModeTableRow {
  int well;
  GuidedMode mode;
};

void write_modes_csv(std::ostream& os, const CouplerSpec& spec,
                     const std::vector<ModeTableRow>& rows);

void write_profile_csv(std::ostream& os, const CouplerSpec& spec,
                       const std::vector<ModeTableRow>& rows, int n_points);

void write_couple_csv(std::ostream& os, const CouplingResult& cc);

void write_trace_csv(std::ostream& os, const PropagationTrace& trace,
                     double L_nm, double fT_hz);

void write_switching_csv(std::ostream& os, const std::vector<SwitchingPoint>& pts);

// Sweep table; when the grid has a single d and the fit succeeded, the fit
// parameters are appended as a trailing comment.
void write_sweep_csv(std::ostream& os, const SweepResult& res, const ExpFit* fit);

void write_fit_csv(std::ostream& os, const ExpFit& fit);

}  // namespace gws
