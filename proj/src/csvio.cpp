#include "gws/csvio.hpp"

#include <cstdio>

#include "gws/errors.hpp"

namespace gws {

namespace {

const char* parity_name(Parity p) {
  return p == Parity::Symmetric ? "symmetric" : "antisymmetric";
}

void write_spec_comment(std::ostream& os, const CouplerSpec& spec) {
  os << "# d1=" << format_double(spec.source.width_d_nm)
     << " d2=" << format_double(spec.drain.width_d_nm)
     << " D=" << format_double(spec.separation_D_nm)
     << " V0=" << format_double(spec.barrier_V0_meV)
     << " V1=" << format_double(spec.source.gate_V_meV)
     << " V2=" << format_double(spec.drain.gate_V_meV)
     << " E=" << format_double(spec.energy_E_meV)
     << " mass_ratio=" << format_double(spec.barrier_mass_ratio) << "\n";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_modes_csv(std::ostream& os, const CouplerSpec& spec,
                     const std::vector<ModeTableRow>& rows) {
  write_spec_comment(os, spec);
  os << "well,mode_index,parity,kx_d,beta_nm,kappa_nm,theta_deg\n";
  for (const ModeTableRow& row : rows) {
    const GuidedMode& m = row.mode;
    os << row.well << ',' << m.index_m << ',' << parity_name(m.parity) << ','
       << format_double(m.k_x * m.width_d) << ',' << format_double(m.beta)
       << ',' << format_double(m.kappa) << ',' << format_double(m.theta_deg)
       << "\n";
  }
}

void write_profile_csv(std::ostream& os, const CouplerSpec& spec,
                       const std::vector<ModeTableRow>& rows, int n_points) {
  if (n_points < 2) throw OutOfDomain("profile dump needs at least 2 points");
  const CouplerGeometry geom = geometry(spec);
  const double x_lo = geom.well1.lo - 0.5 * geom.well1.width();
  const double x_hi = geom.well2.hi + 0.5 * geom.well2.width();
  const double step = (x_hi - x_lo) / static_cast<double>(n_points - 1);
  write_spec_comment(os, spec);
  os << "well,mode_index,x_nm,u\n";
  for (const ModeTableRow& row : rows) {
    const Well which = row.well == 1 ? Well::Source : Well::Drain;
    for (int i = 0; i < n_points; ++i) {
      const double x = x_lo + static_cast<double>(i) * step;
      os << row.well << ',' << row.mode.index_m << ',' << format_double(x)
         << ',' << format_double(evaluate_profile(row.mode, geom, which, x))
         << "\n";
    }
  }
}

void write_couple_csv(std::ostream& os, const CouplingResult& cc) {
  os << "m,n,overlap,C12_nm,C21_nm,delta_nm,Ec_meV\n";
  os << cc.m << ',' << cc.n << ',' << format_double(cc.overlap) << ','
     << format_double(cc.C12) << ',' << format_double(cc.C21) << ','
     << format_double(cc.delta) << ',' << format_double(cc.coupling_energy_meV)
     << "\n";
}

void write_trace_csv(std::ostream& os, const PropagationTrace& trace,
                     double L_nm, double fT_hz) {
  os << "y_nm,p1,p2,re_a1,im_a1,re_a2,im_a2\n";
  for (std::size_t k = 0; k < trace.y_nm.size(); ++k) {
    os << format_double(trace.y_nm[k]) << ',' << format_double(trace.p1[k])
       << ',' << format_double(trace.p2[k]) << ','
       << format_double(trace.a1[k].real()) << ','
       << format_double(trace.a1[k].imag()) << ','
       << format_double(trace.a2[k].real()) << ','
       << format_double(trace.a2[k].imag()) << "\n";
  }
  os << "# L_nm=" << format_double(L_nm) << " fT_hz=" << format_double(fT_hz)
     << "\n";
}

void write_switching_csv(std::ostream& os, const std::vector<SwitchingPoint>& pts) {
  os << "dV_meV,max_transfer,L_nm,delta_nm,coupling_nm,symmetrized\n";
  for (const SwitchingPoint& pt : pts) {
    os << format_double(pt.dV_meV) << ',' << format_double(pt.max_transfer)
       << ',' << format_double(pt.L_nm) << ',' << format_double(pt.delta)
       << ',' << format_double(pt.coupling) << ','
       << (pt.symmetrized ? "true" : "false") << "\n";
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& res, const ExpFit* fit) {
  os << "d_nm,D_nm,fT_hz,L_nm,Ec_meV,status\n";
  for (const SweepCell& c : res.cells) {
    os << format_double(c.d_nm) << ',' << format_double(c.D_nm) << ',';
    if (c.status == CellStatus::Ok) {
      os << format_double(c.fT_hz) << ',' << format_double(c.L_nm) << ','
         << format_double(c.Ec_meV);
    } else {
      os << ",,";
    }
    os << ',' << to_string(c.status) << "\n";
  }
  if (fit != nullptr) {
    os << "# omega0_nm=" << format_double(fit->omega0_nm)
       << " gamma_nm=" << format_double(fit->gamma_nm)
       << " r2=" << format_double(fit->r2) << "\n";
  }
}

void write_fit_csv(std::ostream& os, const ExpFit& fit) {
  os << "omega0_nm,gamma_nm,r2,slope,intercept,n_points\n";
  os << format_double(fit.omega0_nm) << ',' << format_double(fit.gamma_nm)
     << ',' << format_double(fit.r2) << ',' << format_double(fit.slope) << ','
     << format_double(fit.intercept) << ',' << fit.n_points << "\n";
}

}  // namespace gws
