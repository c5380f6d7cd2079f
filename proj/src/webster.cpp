#include "horntube/webster.hpp"

#include <cmath>

namespace horntube {

LoadSeries::LoadSeries(ArrayX times, MatrixX values) : times_(std::move(times)), values_(std::move(values)) {
  if (values_.cols() != times_.size()) throw DomainError("LoadSeries: one column per sample time required");
  for (Eigen::Index k = 0; k + 1 < times_.size(); ++k)
    if (!(times_[k + 1] > times_[k])) throw DomainError("LoadSeries: times must increase");
}

ArrayX LoadSeries::eval(double t) const {
  if (times_.size() == 0) throw DomainError("LoadSeries is empty");
  if (t <= times_[0]) return values_.col(0).array();
  const Eigen::Index last = times_.size() - 1;
  if (t >= times_[last]) return values_.col(last).array();
  Eigen::Index k = 0;
  while (k + 1 < times_.size() && times_[k + 1] < t) ++k;
  const double w = (t - times_[k]) / (times_[k + 1] - times_[k]);
  return ((1.0 - w) * values_.col(k) + w * values_.col(k + 1)).array();
}

WebsterSolver::WebsterSolver(const TubeGeometry& geom, SolverConfig cfg) : cfg_(cfg) {
  if (cfg_.ns < 3) throw ConfigError("solver needs ns >= 3");
  if (cfg_.alpha < 0.0) throw ConfigError("wall admittance alpha must be >= 0");
  if (!(cfg_.c > 0.0)) throw ConfigError("sound speed must be positive");
  const int n = cfg_.ns;
  ds_ = 1.0 / (n - 1);
  dt_ = cfg_.dt > 0.0 ? cfg_.dt : cfg_.cfl * ds_ / cfg_.c;
  const double cfl = cfg_.c * dt_ / ds_;
  if (cfl > 0.95 + 1e-12)
    throw ConfigError("CFL violation: c dt / ds = " + std::to_string(cfl) + " exceeds 0.95");

  s_ = ArrayX::LinSpaced(n, 0.0, 1.0);
  area_.resize(n);
  wall_.resize(n);
  sigma_.resize(n);
  c_s_.resize(n);
  c2_.resize(n);
  damp_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double s = s_[i];
    area_[i] = geom.radius.area(s);
    wall_[i] = wall_weight(geom, s);
    const SoundCorrection sc = sound_correction(geom, s, cfg_.c);
    sigma_[i] = sc.sigma;
    c_s_[i] = sc.c_s;
    c2_[i] = sc.c_s * sc.c_s;
    damp_[i] = 2.0 * M_PI * cfg_.alpha * wall_[i] * c2_[i] / area_[i];
  }
  area_half_.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) area_half_[i] = 0.5 * (area_[i] + area_[i + 1]);

  beta_ = 2.0 * std::sqrt(cfg_.c / (cfg_.rho * area_[0]));
  c_port_ = c_s_[0];
  inlet_warning_ = cfg_.inlet == InletMode::scattering && !geom.reflection_free_inlet();

  psi_now_ = ArrayX::Zero(n);
  psi_t0_ = ArrayX::Zero(n);
  psi_prev_ = ArrayX::Zero(n);
}

ArrayX WebsterSolver::apply_horn_operator(const ArrayX& v) const {
  const int n = ns();
  ArrayX out(n);
  for (int i = 1; i + 1 < n; ++i)
    out[i] = (area_half_[i] * (v[i + 1] - v[i]) - area_half_[i - 1] * (v[i] - v[i - 1])) /
             (area_[i] * ds_ * ds_);
  // even-extension evaluation at the ends
  out[0] = 2.0 * area_half_[0] * (v[1] - v[0]) / (area_[0] * ds_ * ds_);
  out[n - 1] = 2.0 * area_half_[n - 2] * (v[n - 2] - v[n - 1]) / (area_[n - 1] * ds_ * ds_);
  return out;
}

void WebsterSolver::set_initial(const ArrayX& psi0, const ArrayX& psi_t0) {
  if (psi0.size() != ns() || psi_t0.size() != ns()) throw ConfigError("initial data size mismatch");
  if (std::abs(psi0[ns() - 1]) > 1e-12 || std::abs(psi_t0[ns() - 1]) > 1e-12)
    throw ConfigError("initial data incompatible with the Dirichlet end psi(1) = 0");
  psi_now_ = psi0;
  psi_t0_ = psi_t0;
  psi_prev_.setZero(ns());
  step_ = 0;
  primed_ = false;
}

ArrayX WebsterSolver::laplacian_with_port(const ArrayX& psi, double dpsi0_dt, double u_sample) const {
  const int n = ns();
  ArrayX lap(n);
  for (int i = 1; i + 1 < n; ++i)
    lap[i] = (area_half_[i] * (psi[i + 1] - psi[i]) - area_half_[i - 1] * (psi[i] - psi[i - 1])) /
             (area_[i] * ds_ * ds_);
  double ghost;
  if (cfg_.inlet == InletMode::hard) {
    ghost = psi[1];
  } else {
    ghost = psi[1] - (2.0 * ds_ / c_port_) * (dpsi0_dt - beta_ * u_sample);
  }
  lap[0] = area_half_[0] * (psi[1] - 2.0 * psi[0] + ghost) / (area_[0] * ds_ * ds_);
  lap[n - 1] = 0.0;
  return lap;
}

void WebsterSolver::check_finite(const ArrayX& v, int step_index) const {
  if (!v.allFinite())
    throw DivergenceError("solution diverged (NaN/Inf) at step " + std::to_string(step_index));
}

WebsterState WebsterSolver::step(double u_sample) {
  const int n = ns();
  const double t_now = step_ * dt_;
  ArrayX loads = cfg_.load_source ? cfg_.load_source(t_now) : ArrayX();
  if (loads.size() != 0 && loads.size() != n) throw ConfigError("load profile size mismatch");

  WebsterState st;
  st.t = t_now;
  st.u = u_sample;

  if (!primed_) {
    // Taylor start consistent with the equation at t = 0.
    const ArrayX lap = laplacian_with_port(psi_now_, psi_t0_[0], u_sample);
    ArrayX acc = c2_ * lap - damp_ * psi_t0_;
    if (loads.size()) acc -= c2_ * loads;
    ArrayX next = psi_now_ + dt_ * psi_t0_ + 0.5 * dt_ * dt_ * acc;
    next[n - 1] = 0.0;
    st.psi = psi_now_;
    st.psi_t = psi_t0_;
    st.y = cfg_.inlet == InletMode::scattering ? u_sample - 2.0 * psi_t0_[0] / beta_ : 0.0;
    psi_prev_ = psi_now_;
    psi_now_ = next;
    primed_ = true;
    step_ = 1;
    check_finite(psi_now_, step_);
    return st;
  }

  ArrayX next(n);
  for (int i = 1; i + 1 < n; ++i) {
    const double lap = (area_half_[i] * (psi_now_[i + 1] - psi_now_[i]) -
                        area_half_[i - 1] * (psi_now_[i] - psi_now_[i - 1])) /
                       (area_[i] * ds_ * ds_);
    double rhs = c2_[i] * lap;
    if (loads.size()) rhs -= c2_[i] * loads[i];
    const double relax = 0.5 * damp_[i] * dt_;
    next[i] = (2.0 * psi_now_[i] - (1.0 - relax) * psi_prev_[i] + dt_ * dt_ * rhs) / (1.0 + relax);
  }
  next[n - 1] = 0.0;

  const double a0 = c2_[0] * area_half_[0] / (area_[0] * ds_ * ds_);
  if (cfg_.inlet == InletMode::hard) {
    const double lap0 = 2.0 * a0 * (psi_now_[1] - psi_now_[0]);
    double rhs = lap0;
    if (loads.size()) rhs -= c2_[0] * loads[0];
    const double relax = 0.5 * damp_[0] * dt_;
    next[0] = (2.0 * psi_now_[0] - (1.0 - relax) * psi_prev_[0] + dt_ * dt_ * rhs) / (1.0 + relax);
  } else {
    // Ghost node eliminated through the characteristic relation; the update for
    // the port node stays local and second order.
    const double gp = 2.0 * ds_ * a0 / c_port_;
    const double inv_dt2 = 1.0 / (dt_ * dt_);
    double numer = 2.0 * psi_now_[0] * inv_dt2 - psi_prev_[0] * inv_dt2 +
                   (gp + damp_[0]) * psi_prev_[0] / (2.0 * dt_) +
                   2.0 * a0 * (psi_now_[1] - psi_now_[0]) + gp * beta_ * u_sample;
    if (loads.size()) numer -= c2_[0] * loads[0];
    const double denom = inv_dt2 + (gp + damp_[0]) / (2.0 * dt_);
    next[0] = numer / denom;
  }

  st.psi = psi_now_;
  st.psi_t = (next - psi_prev_) / (2.0 * dt_);
  st.y = cfg_.inlet == InletMode::scattering ? u_sample - 2.0 * st.psi_t[0] / beta_ : 0.0;

  psi_prev_ = psi_now_;
  psi_now_ = next;
  ++step_;
  check_finite(psi_now_, step_);
  return st;
}

double WebsterSolver::energy(const WebsterState& st) const {
  const int n = ns();
  ArrayX psi_s(n);
  for (int i = 1; i + 1 < n; ++i) psi_s[i] = (st.psi[i + 1] - st.psi[i - 1]) / (2.0 * ds_);
  psi_s[0] = (-3.0 * st.psi[0] + 4.0 * st.psi[1] - st.psi[2]) / (2.0 * ds_);
  psi_s[n - 1] = (3.0 * st.psi[n - 1] - 4.0 * st.psi[n - 2] + st.psi[n - 3]) / (2.0 * ds_);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 * ds_ : ds_;
    acc += w * area_[i] * (psi_s[i] * psi_s[i] + st.psi_t[i] * st.psi_t[i] / c2_[i]);
  }
  return 0.5 * cfg_.rho * acc;
}

double WebsterSolver::discrete_energy() const {
  const int n = ns();
  double kinetic = 0.0;
  if (primed_) {
    for (int i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 0.5 * ds_ : ds_;
      const double v = (psi_now_[i] - psi_prev_[i]) / dt_;
      kinetic += w * area_[i] / c2_[i] * v * v;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 0.5 * ds_ : ds_;
      kinetic += w * area_[i] / c2_[i] * psi_t0_[i] * psi_t0_[i];
    }
  }
  const ArrayX& newer = psi_now_;
  const ArrayX& older = primed_ ? psi_prev_ : psi_now_;
  double elastic = 0.0;
  for (int i = 0; i + 1 < n; ++i)
    elastic += area_half_[i] * (newer[i + 1] - newer[i]) * (older[i + 1] - older[i]) / ds_;
  return 0.5 * cfg_.rho * (kinetic + elastic);
}

RunRecord WebsterSolver::run(const std::function<double(double)>& input, int cadence) {
  if (!(cfg_.t_final > 0.0)) throw ConfigError("t_final must be positive for run()");
  const int nsteps = static_cast<int>(std::llround(cfg_.t_final / dt_));
  RunRecord rec;
  rec.t.reserve(nsteps);
  for (int k = 0; k < nsteps; ++k) {
    const double u = input ? input(time()) : 0.0;
    WebsterState st = step(u);
    rec.t.push_back(st.t);
    rec.u.push_back(st.u);
    rec.y.push_back(st.y);
    rec.energy.push_back(energy(st));
    rec.energy_discrete.push_back(discrete_energy());
    if (cadence > 0 && k % cadence == 0) rec.snapshots.push_back(std::move(st));
  }
  return rec;
}

} // namespace horntube
