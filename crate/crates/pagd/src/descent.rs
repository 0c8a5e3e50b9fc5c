//! # Power-allocated gradient descent
//!
//! Runs the descent loop
//!
//! ```text
//!     x_{t+1} = x_t - eta * ( grad f(x_t) + (G / sigma_t) * n_t )
//! ```
//!
//! against a pluggable [`ObjectiveOracle`] and a [`PowerSchedule`], routing
//! every gradient through the encoder, channel, and decoder. Alongside the
//! runner, the module evaluates the closed-form last-iterate error bounds
//! that the schedules are designed to minimize:
//!
//! * [`eval_bound_prop1`] — uniform power, constant noise floor;
//! * [`eval_bound_theorem1`] — geometric allocation, noise term decaying
//!   like `1/T`;
//! * [`eval_bound_theorem2`] — constant-then-geometric allocation under
//!   local regularity, with [`sigma_lb_local`] supplying the power floor
//!   that keeps every sample path inside the certified sublevel set.
//!
//! Two synthetic objectives with exactly known constants live here too: a
//! diagonal [`Quadratic`] and the nonconvex gradient-dominated
//! [`SinSqRipple`]. Both make the bound checks falsifiable without any
//! external data.

use std::io::Write;

use nalgebra::DVector;

use crate::alloc::{PowerSchedule, ScheduleKind};
use crate::channel::{self, ChannelSpec};
use crate::error::{Error, Result};

/// Iterates are stored in full only up to this horizon; longer runs keep the
/// scalar series to bound memory.
pub const MAX_STORED_ITERATES: usize = 10_000;

/// Regularity constants of an objective.
///
/// For globally well-behaved objectives the locality fields are infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemConstants {
    /// Gradient-domination constant `mu`.
    pub mu: f64,
    /// Smoothness constant `L`.
    pub lipschitz: f64,
    /// Gradient-norm bound `G`, also the encoder normalization.
    pub grad_bound: f64,
    /// Radius `D` within which smoothness is certified (`inf` when global).
    pub smooth_radius: f64,
    /// Sublevel value `v` defining the certified region (`inf` when global).
    pub sublevel: f64,
}

impl ProblemConstants {
    pub fn global(mu: f64, lipschitz: f64, grad_bound: f64) -> Result<Self> {
        Self::local(mu, lipschitz, grad_bound, f64::INFINITY, f64::INFINITY)
    }

    pub fn local(
        mu: f64,
        lipschitz: f64,
        grad_bound: f64,
        smooth_radius: f64,
        sublevel: f64,
    ) -> Result<Self> {
        if !(mu > 0.0) || !(lipschitz > 0.0) || !(grad_bound > 0.0) {
            return Err(Error::InvalidInput(format!(
                "constants must be positive: mu = {mu}, L = {lipschitz}, G = {grad_bound}"
            )));
        }
        if mu > lipschitz {
            return Err(Error::InvalidInput(format!(
                "mu = {mu} cannot exceed the smoothness constant L = {lipschitz}"
            )));
        }
        if !(smooth_radius > 0.0) || !(sublevel > 0.0) {
            return Err(Error::InvalidInput(format!(
                "locality constants must be positive: D = {smooth_radius}, v = {sublevel}"
            )));
        }
        Ok(Self { mu, lipschitz, grad_bound, smooth_radius, sublevel })
    }

    /// Whether a finite sublevel value constrains the iterates.
    pub fn is_local(&self) -> bool {
        self.sublevel.is_finite()
    }
}

/// A differentiable objective with a known optimal value.
///
/// `eval` may return `f64::INFINITY` outside the objective's domain (an
/// unstable policy, say); `grad` is only called at points where `eval` was
/// finite.
pub trait ObjectiveOracle {
    fn dim(&self) -> usize;
    fn eval(&self, x: &DVector<f64>) -> f64;
    fn grad(&self, x: &DVector<f64>) -> DVector<f64>;
    /// The optimal value `f*`.
    fn optimum(&self) -> f64;
    fn constants(&self) -> &ProblemConstants;
}

/// Relative disagreement between the oracle gradient and a central
/// finite-difference estimate at `x`, measured against the gradient norm.
pub fn grad_finite_difference_error(
    oracle: &dyn ObjectiveOracle,
    x: &DVector<f64>,
    step: f64,
) -> f64 {
    let analytic = oracle.grad(x);
    let mut fd = DVector::zeros(x.len());
    for i in 0..x.len() {
        let mut plus = x.clone();
        let mut minus = x.clone();
        plus[i] += step;
        minus[i] -= step;
        fd[i] = (oracle.eval(&plus) - oracle.eval(&minus)) / (2.0 * step);
    }
    (fd - &analytic).norm() / analytic.norm().max(1.0)
}

/// Per-run record of the descent trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    /// Iterates `x_0..x_T`; empty when the horizon exceeds
    /// [`MAX_STORED_ITERATES`].
    pub iterates: Vec<DVector<f64>>,
    /// Suboptimality `z_t = f(x_t) - f*` for `t = 0..=T`.
    pub suboptimality: Vec<f64>,
    /// Gradient norms `||grad f(x_t)||`, one per completed evaluation.
    pub grad_norms: Vec<f64>,
    /// Transmit powers actually used, `sigma_t^2` for `t = 0..T-1`.
    pub power: Vec<f64>,
    pub eta: f64,
    pub seed: u64,
    /// Schedule metadata.
    pub t_switch: usize,
    pub gamma: f64,
    /// First iteration with `f(x_t) > v`, when a finite sublevel is tracked.
    pub sublevel_violation: Option<usize>,
    /// First iteration whose update moved farther than `D`.
    pub step_radius_violation: Option<usize>,
    /// Set when the run stopped early because the objective became infinite.
    pub aborted_at: Option<usize>,
}

impl RunTrace {
    /// `z_T` (or the last recorded value for aborted runs).
    pub fn final_suboptimality(&self) -> f64 {
        *self.suboptimality.last().expect("trace always holds z_0")
    }

    /// Completed iterations.
    pub fn steps(&self) -> usize {
        self.suboptimality.len() - 1
    }

    pub fn contained(&self) -> bool {
        self.sublevel_violation.is_none()
            && self.step_radius_violation.is_none()
            && self.aborted_at.is_none()
    }

    /// Writes `t, z_t, sigma_sq_t, grad_norm, containment_flag` rows; the
    /// final row has no power entry.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "t,z_t,sigma_sq_t,grad_norm,containment_flag")?;
        for (t, z) in self.suboptimality.iter().enumerate() {
            let power = self.power.get(t).map(|p| p.to_string()).unwrap_or_default();
            let grad = self.grad_norms.get(t).map(|g| g.to_string()).unwrap_or_default();
            let violated = self.sublevel_violation.map(|v| t >= v).unwrap_or(false)
                || self.step_radius_violation.map(|v| t >= v).unwrap_or(false)
                || self.aborted_at.map(|v| t >= v).unwrap_or(false);
            writeln!(out, "{},{},{},{},{}", t, z, power, grad, u8::from(violated))?;
        }
        Ok(())
    }
}

/// Runs the descent loop for `schedule.len()` iterations.
///
/// Preconditions: positive step size, matching dimensions, and for oracles
/// with a finite sublevel `v`, `f(x_0) <= v/2`. A sublevel or step-radius
/// violation mid-run is flagged on the trace rather than raised; an infinite
/// objective value aborts with a partial trace.
pub fn run_pagd(
    oracle: &dyn ObjectiveOracle,
    schedule: &PowerSchedule,
    spec: &ChannelSpec,
    x0: &DVector<f64>,
    eta: f64,
    seed: u64,
) -> Result<RunTrace> {
    if !eta.is_finite() || eta <= 0.0 {
        return Err(Error::InvalidInput(format!("step size must be positive, got {eta}")));
    }
    if x0.len() != oracle.dim() {
        return Err(Error::InvalidInput(format!(
            "x0 dimension {} does not match oracle dimension {}",
            x0.len(),
            oracle.dim()
        )));
    }
    if spec.dim != oracle.dim() {
        return Err(Error::InvalidInput(format!(
            "channel dimension {} does not match oracle dimension {}",
            spec.dim,
            oracle.dim()
        )));
    }
    let constants = oracle.constants();
    let sublevel = constants.sublevel;
    if sublevel.is_finite() {
        let f0 = oracle.eval(x0);
        if f0 > 0.5 * sublevel {
            return Err(Error::InvalidInput(format!(
                "local mode requires f(x0) <= v/2; got f(x0) = {f0} with v = {sublevel}"
            )));
        }
    }

    let horizon = schedule.len();
    let store_iterates = horizon <= MAX_STORED_ITERATES;
    let mut trace = RunTrace {
        iterates: Vec::new(),
        suboptimality: Vec::with_capacity(horizon + 1),
        grad_norms: Vec::with_capacity(horizon + 1),
        power: Vec::with_capacity(horizon),
        eta,
        seed,
        t_switch: schedule.t_switch,
        gamma: schedule.gamma,
        sublevel_violation: None,
        step_radius_violation: None,
        aborted_at: None,
    };

    let mut x = x0.clone();
    if store_iterates {
        trace.iterates.push(x.clone());
    }

    for (t, &power) in schedule.sigma_sq.iter().enumerate() {
        let f = oracle.eval(&x);
        trace.suboptimality.push(f - oracle.optimum());
        if !f.is_finite() {
            trace.aborted_at = Some(t);
            return Ok(trace);
        }
        if f > sublevel && trace.sublevel_violation.is_none() {
            trace.sublevel_violation = Some(t);
        }

        let gradient = oracle.grad(&x);
        trace.grad_norms.push(gradient.norm());
        trace.power.push(power);

        let encoded = channel::encode(&gradient, power, spec)?;
        let received = channel::transmit(&encoded, spec, channel::iteration_seed(seed, t as u64))?;
        let decoded = channel::decode(&received, power, spec)?;
        let next = &x - eta * decoded;

        if (&next - &x).norm() > constants.smooth_radius && trace.step_radius_violation.is_none() {
            trace.step_radius_violation = Some(t);
        }
        x = next;
        if store_iterates {
            trace.iterates.push(x.clone());
        }
    }

    let f = oracle.eval(&x);
    trace.suboptimality.push(f - oracle.optimum());
    if f.is_finite() {
        trace.grad_norms.push(oracle.grad(&x).norm());
        if f > sublevel && trace.sublevel_violation.is_none() {
            trace.sublevel_violation = Some(horizon);
        }
    } else {
        trace.aborted_at = Some(horizon);
    }
    Ok(trace)
}

/// The uniform-power baseline: [`run_pagd`] with `sigma_t^2 = avg_budget`.
///
/// Enforces the step-size range `eta in (0, 1/L)` of the constant-power
/// bound.
pub fn run_constant_power(
    oracle: &dyn ObjectiveOracle,
    avg_budget: f64,
    spec: &ChannelSpec,
    x0: &DVector<f64>,
    eta: f64,
    t_horizon: usize,
    seed: u64,
) -> Result<RunTrace> {
    let lipschitz = oracle.constants().lipschitz;
    if !(eta > 0.0) || eta >= 1.0 / lipschitz {
        return Err(Error::InvalidInput(format!(
            "constant-power step size must lie in (0, 1/L) = (0, {}), got {eta}",
            1.0 / lipschitz
        )));
    }
    let schedule = PowerSchedule::constant(t_horizon, avg_budget)?;
    run_pagd(oracle, &schedule, spec, x0, eta, seed)
}

/// Last-iterate bound for uniform power and `eta in (0, 1/L)`:
/// `(1 - mu eta)^T z0 + (L G^2 eta / mu) (sigma_N^2 / avg_budget)`.
pub fn eval_bound_prop1(
    constants: &ProblemConstants,
    eta: f64,
    t_horizon: usize,
    avg_budget: f64,
    sigma_n_sq: f64,
    z0: f64,
) -> Result<f64> {
    if !(eta > 0.0) || eta >= 1.0 / constants.lipschitz {
        return Err(Error::InvalidInput(format!(
            "step size must lie in (0, 1/L) = (0, {}), got {eta}",
            1.0 / constants.lipschitz
        )));
    }
    let contraction = (1.0 - constants.mu * eta).powi(t_horizon as i32) * z0;
    let noise = constants.lipschitz * constants.grad_bound.powi(2) * eta / constants.mu
        * (sigma_n_sq / avg_budget);
    Ok(contraction + noise)
}

/// Last-iterate bounds for the geometric allocation and `eta in (0, 1/(2L))`.
///
/// Returns `(loose, tight)`:
///
/// ```text
///     tight = (1 - mu eta)^T z0 + (sum_k gamma^k)^2 / T * L G^2 eta^2 sigma_N^2 / avg_budget
///     loose = (1 - mu eta)^T z0 + 4 / T * (L G^2 / mu^2) * sigma_N^2 / avg_budget
/// ```
pub fn eval_bound_theorem1(
    constants: &ProblemConstants,
    eta: f64,
    t_horizon: usize,
    avg_budget: f64,
    sigma_n_sq: f64,
    z0: f64,
) -> Result<(f64, f64)> {
    if !(eta > 0.0) || eta >= 0.5 / constants.lipschitz {
        return Err(Error::InvalidInput(format!(
            "step size must lie in (0, 1/(2L)) = (0, {}), got {eta}",
            0.5 / constants.lipschitz
        )));
    }
    if t_horizon == 0 {
        return Err(Error::InvalidInput("bound horizon must be at least 1".into()));
    }
    let mu_eta = constants.mu * eta;
    let gamma = (1.0 - mu_eta).sqrt();
    let mut geo_sum = 0.0;
    let mut power = 1.0;
    for _ in 0..t_horizon {
        geo_sum += power;
        power *= gamma;
    }
    let t = t_horizon as f64;
    let contraction = (1.0 - mu_eta).powi(t_horizon as i32) * z0;
    let c = constants.lipschitz * constants.grad_bound.powi(2);
    let tight = contraction + geo_sum * geo_sum / t * c * eta * eta * sigma_n_sq / avg_budget;
    let loose = contraction
        + 4.0 / t * c / (constants.mu * constants.mu) * sigma_n_sq / avg_budget;
    Ok((loose, tight))
}

/// Last-iterate bound for a constant-then-geometric schedule under local
/// regularity and `eta < min(D/G, 1/(4L))`:
///
/// ```text
///     (1 - mu eta)^T z0 + L G^2 eta^2 sigma_N^2 *
///         ( sum_{t < t_s} gamma^(2(T-t-1)) / floor
///           + ( sum_{t >= t_s} gamma^(T-t-1) )^2 / (T avg_budget - t_s floor) )
/// ```
///
/// The geometric part carries the square of the weight sum: that is the
/// optimal objective value of the underlying floored allocation, and it is
/// what makes the `t_s = 0` case coincide with the tight geometric bound.
/// Horizon, budget, floor, and switch metadata are read off the schedule.
pub fn eval_bound_theorem2(
    constants: &ProblemConstants,
    eta: f64,
    sigma_n_sq: f64,
    schedule: &PowerSchedule,
    z0: f64,
) -> Result<f64> {
    if schedule.kind == ScheduleKind::Constant {
        return Err(Error::InvalidInput(
            "the locally constrained bound needs a schedule with geometric metadata".into(),
        ));
    }
    let d_over_g = constants.smooth_radius / constants.grad_bound;
    let quarter_l = 0.25 / constants.lipschitz;
    if !(eta > 0.0) || eta >= d_over_g.min(quarter_l) {
        return Err(Error::InvalidInput(format!(
            "step size must lie in (0, min(D/G, 1/(4L))) = (0, {}), got {eta}",
            d_over_g.min(quarter_l)
        )));
    }
    let t_horizon = schedule.len();
    if t_horizon == 0 {
        return Err(Error::InvalidInput("bound horizon must be at least 1".into()));
    }
    let t_switch = schedule.t_switch;
    let gamma = schedule.gamma;

    // powers[k] = gamma^k, iteratively.
    let mut powers = vec![1.0; t_horizon];
    for k in 1..t_horizon {
        powers[k] = powers[k - 1] * gamma;
    }

    let mut floor_sum = 0.0;
    for t in 0..t_switch.min(t_horizon) {
        let p = powers[t_horizon - 1 - t];
        floor_sum += p * p;
    }
    let floor_term = if t_switch == 0 {
        0.0
    } else {
        if schedule.floor <= 0.0 {
            return Err(Error::InvalidInput(
                "a schedule with floored slots needs a positive floor".into(),
            ));
        }
        floor_sum / schedule.floor
    };

    let geo_term = if t_switch >= t_horizon {
        0.0
    } else {
        let mut weight_sum = 0.0;
        for t in t_switch..t_horizon {
            weight_sum += powers[t_horizon - 1 - t];
        }
        let residual = t_horizon as f64 * schedule.avg_budget - t_switch as f64 * schedule.floor;
        weight_sum * weight_sum / residual
    };

    let mu_eta = constants.mu * eta;
    let contraction = (1.0 - mu_eta).powi(t_horizon as i32) * z0;
    let c = constants.lipschitz * constants.grad_bound.powi(2) * eta * eta * sigma_n_sq;
    Ok(contraction + c * (floor_term + geo_term))
}

/// Power floor `sigma_lb^2 = G^2 Delta^2 max( eta^2 / (D - G eta)^2,
/// 2 / (mu v) )` that keeps iterates inside the certified region.
pub fn sigma_lb_local(constants: &ProblemConstants, eta: f64, delta: f64) -> Result<f64> {
    if !(delta >= 0.0) {
        return Err(Error::InvalidInput(format!("noise bound must be nonnegative, got {delta}")));
    }
    let g = constants.grad_bound;
    let d = constants.smooth_radius;
    if !(eta > 0.0) || eta >= d / g {
        return Err(Error::InvalidInput(format!(
            "step size must lie in (0, D/G) = (0, {}), got {eta}",
            d / g
        )));
    }
    let step_branch = (eta / (d - g * eta)).powi(2);
    let sublevel_branch = if constants.sublevel.is_finite() {
        2.0 / (constants.mu * constants.sublevel)
    } else {
        0.0
    };
    Ok(g * g * delta * delta * step_branch.max(sublevel_branch))
}

/// Diagonal quadratic `f(x) = x' diag(h) x / 2` with eigenvalues spread
/// linearly over `[mu, L]`, so the regularity constants are exact.
#[derive(Debug, Clone)]
pub struct Quadratic {
    hessian_diag: DVector<f64>,
    constants: ProblemConstants,
}

impl Quadratic {
    /// Builds the objective with an encoder bound sized for runs started at
    /// level `f(x0) = level`: `G = 1.05 * sqrt(2 L level)`, the exact
    /// gradient-norm maximum over that sublevel set plus five percent.
    pub fn with_level(dim: usize, mu: f64, lipschitz: f64, level: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("quadratic dimension must be at least 1".into()));
        }
        if !(level > 0.0) {
            return Err(Error::InvalidInput(format!("level must be positive, got {level}")));
        }
        if dim == 1 && mu != lipschitz {
            return Err(Error::InvalidInput(
                "a one-dimensional quadratic has a single eigenvalue; mu must equal L".into(),
            ));
        }
        let grad_bound = 1.05 * (2.0 * lipschitz * level).sqrt();
        let constants = ProblemConstants::global(mu, lipschitz, grad_bound)?;
        let hessian_diag = DVector::from_fn(dim, |i, _| {
            if dim == 1 {
                mu
            } else {
                mu + (lipschitz - mu) * i as f64 / (dim - 1) as f64
            }
        });
        Ok(Self { hessian_diag, constants })
    }

    /// Deterministic starting point with `f(x0) = level`: the all-ones
    /// direction scaled to the requested level.
    pub fn initial_point(&self, level: f64) -> DVector<f64> {
        let trace: f64 = self.hessian_diag.iter().sum();
        let scale = (2.0 * level / trace).sqrt();
        DVector::from_element(self.hessian_diag.len(), scale)
    }

    /// Exact mean suboptimality after `t` noiseless steps from `x0`.
    pub fn noiseless_suboptimality(&self, x0: &DVector<f64>, eta: f64, t: usize) -> f64 {
        let mut total = 0.0;
        for i in 0..x0.len() {
            let h = self.hessian_diag[i];
            let rho = (1.0 - eta * h).powi(2 * t as i32);
            total += 0.5 * h * x0[i] * x0[i] * rho;
        }
        total
    }
}

impl ObjectiveOracle for Quadratic {
    fn dim(&self) -> usize {
        self.hessian_diag.len()
    }

    fn eval(&self, x: &DVector<f64>) -> f64 {
        0.5 * x.iter().zip(self.hessian_diag.iter()).map(|(x, h)| h * x * x).sum::<f64>()
    }

    fn grad(&self, x: &DVector<f64>) -> DVector<f64> {
        DVector::from_fn(x.len(), |i, _| self.hessian_diag[i] * x[i])
    }

    fn optimum(&self) -> f64 {
        0.0
    }

    fn constants(&self) -> &ProblemConstants {
        &self.constants
    }
}

/// Radial profile of [`SinSqRipple`]: `g(r) = r^2 + 3 sin^2 r`.
fn ripple_value(r: f64) -> f64 {
    r * r + 3.0 * r.sin().powi(2)
}

/// `g'(r) = 2 r + 3 sin(2 r)`.
fn ripple_slope(r: f64) -> f64 {
    2.0 * r + 3.0 * (2.0 * r).sin()
}

/// Nonconvex gradient-dominated objective `f(x) = ||x||^2 + 3 sin^2 ||x||`.
///
/// The Hessian alternates sign along the radius (so the function is not
/// convex), yet the slope `g'(r) = 2r + 3 sin 2r` never vanishes away from
/// the origin, which makes the function gradient-dominated on any ball. The
/// constructor certifies `mu` and `G` on the requested sublevel set by a
/// dense radial grid with a five percent safety margin; the smoothness
/// constant is the global `L = 8`.
#[derive(Debug, Clone)]
pub struct SinSqRipple {
    dim: usize,
    constants: ProblemConstants,
    /// Radius of the certified sublevel ball `{f <= v}`.
    sublevel_radius: f64,
}

impl SinSqRipple {
    pub fn certified(dim: usize, sublevel: f64, smooth_radius: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        if !(sublevel > 0.0) || !sublevel.is_finite() {
            return Err(Error::InvalidInput(format!(
                "sublevel must be positive and finite, got {sublevel}"
            )));
        }
        if !(smooth_radius > 0.0) {
            return Err(Error::InvalidInput(format!(
                "smoothness radius must be positive, got {smooth_radius}"
            )));
        }
        let sublevel_radius = Self::radius_for_level(sublevel);

        // Radial certification grid over (0, r_v].
        const GRID: usize = 200_000;
        let mut mu = f64::INFINITY;
        let mut grad_bound: f64 = 0.0;
        for k in 1..=GRID {
            let r = sublevel_radius * k as f64 / GRID as f64;
            let slope = ripple_slope(r);
            mu = mu.min(slope * slope / (2.0 * ripple_value(r)));
            grad_bound = grad_bound.max(slope);
        }
        // Margins err on the safe side: a smaller mu keeps the domination
        // inequality valid, a larger G keeps the norm bound valid.
        let constants = ProblemConstants::local(
            0.95 * mu,
            8.0,
            1.05 * grad_bound,
            smooth_radius,
            sublevel,
        )?;
        Ok(Self { dim, constants, sublevel_radius })
    }

    /// Inverse of the increasing radial profile: the `r` with `g(r) = level`.
    pub fn radius_for_level(level: f64) -> f64 {
        let (mut lo, mut hi) = (0.0, level.sqrt());
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if ripple_value(mid) < level {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Deterministic starting point at level `f(x0) = level`, along the
    /// all-ones direction.
    pub fn initial_point(&self, level: f64) -> DVector<f64> {
        let r = Self::radius_for_level(level);
        DVector::from_element(self.dim, r / (self.dim as f64).sqrt())
    }

    pub fn sublevel_radius(&self) -> f64 {
        self.sublevel_radius
    }
}

impl ObjectiveOracle for SinSqRipple {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, x: &DVector<f64>) -> f64 {
        ripple_value(x.norm())
    }

    fn grad(&self, x: &DVector<f64>) -> DVector<f64> {
        let r = x.norm();
        if r == 0.0 {
            return DVector::zeros(self.dim);
        }
        x * (ripple_slope(r) / r)
    }

    fn optimum(&self) -> f64 {
        0.0
    }

    fn constants(&self) -> &ProblemConstants {
        &self.constants
    }
}
