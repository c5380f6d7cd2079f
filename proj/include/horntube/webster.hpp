#ifndef HORNTUBE_WEBSTER_HPP
#define HORNTUBE_WEBSTER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "horntube/geometry.hpp"
#include "horntube/types.hpp"

namespace horntube {

enum class InletMode {
  scattering, ///< characteristic port driven by the input signal
  hard        ///< reflecting wall psi_s(0) = 0 (sealed test rig)
};

struct SolverConfig {
  double c = 343.0;       ///< sound speed (normalised by tube length)
  double rho = 1.2;       ///< density
  double alpha = 0.0;     ///< wall admittance parameter, >= 0
  int ns = 129;           ///< grid points on [0,1]
  double dt = 0.0;        ///< time step; 0 selects cfl * ds / c
  double t_final = 0.0;
  double cfl = 0.9;       ///< must satisfy c dt / ds <= 0.95
  InletMode inlet = InletMode::scattering;
  /// Optional load forcing F+G+H as a function of time, sampled on the s grid.
  std::function<ArrayX(double)> load_source;
};

/// Discrete state (psi, psi_t) at a sample time, with the port signals.
struct WebsterState {
  ArrayX psi;
  ArrayX psi_t;
  double t = 0.0;
  double u = 0.0; ///< input sample (sqrt-watt scattering units)
  double y = 0.0; ///< output sample
};

struct RunRecord {
  std::vector<double> t, u, y, energy, energy_discrete;
  std::vector<WebsterState> snapshots;
};

/// Time series of load profiles on the solver grid; values between samples are
/// the average of the adjacent ones (midpoint alignment of the leapfrog step).
class LoadSeries {
 public:
  LoadSeries() = default;
  LoadSeries(ArrayX times, MatrixX values); // values: (ns x nt)
  ArrayX eval(double t) const;
  bool empty() const { return times_.size() == 0; }

 private:
  ArrayX times_;
  MatrixX values_;
};

/// Explicit leapfrog discretisation of the dissipative horn equation
///   psi_tt = c(s)^2 [ A^{-1} (A psi_s)_s ] - (2 pi alpha W c(s)^2 / A) psi_t
///            - c(s)^2 (F + G + H)
/// with a characteristic scattering port at s = 0 (ghost node eliminated) and
/// a Dirichlet end psi(1) = 0. The dissipation term is time-averaged between
/// levels, which keeps the update explicit and unconditionally damped.
class WebsterSolver {
 public:
  WebsterSolver(const TubeGeometry& geom, SolverConfig cfg);

  int ns() const { return static_cast<int>(area_.size()); }
  double ds() const { return ds_; }
  double dt() const { return dt_; }
  const ArrayX& s_nodes() const { return s_; }
  const ArrayX& wave_speed() const { return c_s_; } ///< c(s) = c Sigma(s)
  const SolverConfig& config() const { return cfg_; }
  bool inlet_warning() const { return inlet_warning_; }

  /// Apply the interior stencil A^{-1} (A v_s)_s (rows 1..ns-2; ends one-sided copies).
  ArrayX apply_horn_operator(const ArrayX& v) const;

  /// Set psi(.,0) and psi_t(.,0); requires psi[ns-1] = 0 (Dirichlet compatibility).
  void set_initial(const ArrayX& psi0, const ArrayX& psi_t0);

  /// Advance one step with the input sample at the current time.
  /// Returns the state at the time just left behind (sample at t_n).
  WebsterState step(double u_sample);

  double time() const { return step_ * dt_; }
  int steps_taken() const { return step_; }

  /// E(t) = (rho/2) \int_0^1 A (psi_s^2 + psi_t^2 / c(s)^2) ds  (trapezoid).
  double energy(const WebsterState& st) const;

  /// Staggered audit energy of the scheme; nonincreasing for u = 0, loads = 0.
  double discrete_energy() const;

  /// Run until t_final, recording the series and snapshots every `cadence` steps
  /// (0 disables snapshots).
  RunRecord run(const std::function<double(double)>& input, int cadence = 0);

 private:
  ArrayX laplacian_with_port(const ArrayX& psi, double dpsi0_dt, double u_sample) const;
  void check_finite(const ArrayX& v, int step_index) const;

  SolverConfig cfg_;
  double ds_ = 0.0, dt_ = 0.0;
  ArrayX s_;
  ArrayX area_, area_half_; // A_i and A_{i+1/2}
  ArrayX wall_, sigma_, c_s_, c2_, damp_;
  double beta_ = 0.0;  // 2 sqrt(c / (rho A(0)))
  double c_port_ = 0.0;
  bool inlet_warning_ = false;

  ArrayX psi_prev_, psi_now_;
  ArrayX psi_t0_;
  int step_ = 0;
  bool primed_ = false;
};

} // namespace horntube

#endif
