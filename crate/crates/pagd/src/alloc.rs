//! # Power allocation
//!
//! Solves the inverse-weighted allocation problem
//!
//! ```text
//!     minimize    sum_i a_i / w_i
//!     subject to  sum_i w_i <= K,    w_i >= C_L,
//! ```
//!
//! whose KKT solution is a water-filling-like split: indices below a switch
//! point sit on the floor `C_L`, indices at or above it take `sqrt(a_i /
//! lambda)` for a common multiplier `lambda`. Setting the weights to powers
//! of the contraction factor `gamma = sqrt(1 - mu * eta)` turns the generic
//! solver into the two power schedules used by the descent loop:
//!
//! * [`geometric_schedule`] — pure geometric growth, optimal when the
//!   objective satisfies its regularity conditions globally;
//! * [`ctg_schedule`] — constant-then-geometric: hold a power floor
//!   `sigma_lb^2` until a switch iteration `t_s`, then grow geometrically.
//!   The floor keeps the effective gradient noise bounded, which is what the
//!   locally constrained analysis needs.
//!
//! All schedule arithmetic is plain `f64`; powers of `gamma` are built by
//! iterative multiplication so the scheme and the closed-form expressions
//! evaluate identically.

use crate::error::{Error, Result};

/// Relative tolerance for the budget-exactness invariant.
pub const BUDGET_TOL: f64 = 1e-9;

/// An instance of the inverse-weighted allocation problem.
#[derive(Debug, Clone, PartialEq)]
pub struct AllocationProblem {
    /// Positive weights `a_i` of the objective `sum a_i / w_i`.
    pub weights: Vec<f64>,
    /// Total budget `K` for `sum w_i`.
    pub budget: f64,
    /// Per-entry lower bound `C_L` (zero for the unconstrained problem).
    pub floor: f64,
}

impl AllocationProblem {
    /// Validates positivity of the weights and budget, nonnegativity of the
    /// floor, and feasibility `n * C_L <= K`.
    pub fn new(weights: Vec<f64>, budget: f64, floor: f64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInput("allocation needs at least one weight".into()));
        }
        if weights.iter().any(|a| !a.is_finite() || *a <= 0.0) {
            return Err(Error::InvalidInput("allocation weights must be positive and finite".into()));
        }
        if !budget.is_finite() || budget <= 0.0 {
            return Err(Error::InvalidInput(format!("budget must be positive, got {budget}")));
        }
        if !floor.is_finite() || floor < 0.0 {
            return Err(Error::InvalidInput(format!("floor must be nonnegative, got {floor}")));
        }
        let n = weights.len() as f64;
        if n * floor > budget {
            return Err(Error::InfeasibleBudget(format!(
                "floor {} times n = {} exceeds budget {}",
                floor,
                weights.len(),
                budget
            )));
        }
        Ok(Self { weights, budget, floor })
    }
}

/// How to locate the switch index of the floored solution.
///
/// The feasibility predicate is monotone in the (sorted) index, so a binary
/// search gives the same answer as the linear scan; both are kept and must
/// agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchSearch {
    Linear,
    Binary,
}

/// Solution of an [`AllocationProblem`].
#[derive(Debug, Clone, PartialEq)]
pub struct AllocationSolution {
    /// Optimal `w_i`, in the **original** (caller) order of the weights.
    pub weights: Vec<f64>,
    /// Switch index `i_S` in `1..=n+1`, relative to the **sorted** weight
    /// order: sorted entries before `i_S` sit on the floor, entries from
    /// `i_S` on take `sqrt(a_i / lambda)`. The convention `i_S = n + 1`
    /// means every entry is floored.
    pub switch_index: usize,
    /// Objective value `sum a_i / w_i` at the optimum.
    pub objective_value: f64,
    /// KKT multiplier `lambda` of the budget constraint.
    pub lagrange_lambda: f64,
    /// `permutation[j]` is the original index of the `j`-th smallest weight;
    /// the identity when the input was already nondecreasing.
    pub permutation: Vec<usize>,
}

/// Closed-form solution of the unconstrained (`C_L = 0`) problem:
/// `w_i = K * sqrt(a_i) / sum_k sqrt(a_k)`, with minimum objective
/// `(sum_i sqrt(a_i))^2 / K`.
pub fn solve_unconstrained_allocation(problem: &AllocationProblem) -> Result<AllocationSolution> {
    if problem.floor != 0.0 {
        return Err(Error::InvalidInput(format!(
            "unconstrained allocation requires a zero floor, got {}",
            problem.floor
        )));
    }
    let checked = AllocationProblem::new(problem.weights.clone(), problem.budget, 0.0)?;
    let sqrt_sum: f64 = checked.weights.iter().map(|a| a.sqrt()).sum();
    let weights: Vec<f64> = checked
        .weights
        .iter()
        .map(|a| checked.budget * a.sqrt() / sqrt_sum)
        .collect();
    let objective_value = sqrt_sum * sqrt_sum / checked.budget;
    let lagrange_lambda = (sqrt_sum / checked.budget).powi(2);
    Ok(AllocationSolution {
        weights,
        switch_index: 1,
        objective_value,
        lagrange_lambda,
        permutation: (0..checked.weights.len()).collect(),
    })
}

/// KKT solution of the floored problem, via linear scan for the switch index.
///
/// Equivalent to [`solve_floored_allocation_with`] using
/// [`SwitchSearch::Linear`].
pub fn solve_floored_allocation(problem: &AllocationProblem) -> Result<AllocationSolution> {
    solve_floored_allocation_with(problem, SwitchSearch::Linear)
}

/// KKT solution of the floored problem.
///
/// The solver sorts the weights internally (the KKT case split assumes a
/// nondecreasing sequence), solves, then un-permutes the answer; the applied
/// permutation is recorded on the solution. The switch index `i_S` is the
/// smallest sorted index whose unconstrained value clears the floor:
///
/// ```text
///     i_S = min { i : sqrt(a_i / lambda(i)) >= C_L },
///     lambda(j) = ( sum_{k=j..n} sqrt(a_k) / (K - (j-1) C_L) )^2 .
/// ```
pub fn solve_floored_allocation_with(
    problem: &AllocationProblem,
    search: SwitchSearch,
) -> Result<AllocationSolution> {
    // Re-run the constructor checks so hand-built problems are also safe.
    let problem = AllocationProblem::new(problem.weights.clone(), problem.budget, problem.floor)?;
    let n = problem.weights.len();
    let floor = problem.floor;
    let budget = problem.budget;

    let mut permutation: Vec<usize> = (0..n).collect();
    permutation.sort_by(|&i, &j| problem.weights[i].total_cmp(&problem.weights[j]));
    let sorted: Vec<f64> = permutation.iter().map(|&i| problem.weights[i]).collect();
    let sqrt_a: Vec<f64> = sorted.iter().map(|a| a.sqrt()).collect();

    // suffix[j] = sum_{k=j..n-1} sqrt(a_k), zero-based.
    let mut suffix = vec![0.0; n + 1];
    for j in (0..n).rev() {
        suffix[j] = suffix[j + 1] + sqrt_a[j];
    }

    // Feasible iff sqrt(a_i) * (K - (i-1) C_L) >= C_L * suffix sum; this
    // margin is nondecreasing in i, so the first true index is the switch.
    let clears_floor = |i: usize| -> bool {
        // i is zero-based here; the 1-based lambda(j) uses j - 1 = i.
        sqrt_a[i] * (budget - i as f64 * floor) >= floor * suffix[i]
    };

    let switch0 = match search {
        SwitchSearch::Linear => (0..n).find(|&i| clears_floor(i)),
        SwitchSearch::Binary => {
            if !clears_floor(n - 1) {
                None
            } else {
                let (mut lo, mut hi) = (0usize, n - 1);
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    if clears_floor(mid) {
                        hi = mid;
                    } else {
                        lo = mid + 1;
                    }
                }
                Some(lo)
            }
        }
    };

    let mut w_sorted = vec![floor; n];
    let (switch_index, lagrange_lambda) = match switch0 {
        Some(i0) => {
            let remaining = budget - i0 as f64 * floor;
            let lambda = (suffix[i0] / remaining).powi(2);
            for i in i0..n {
                w_sorted[i] = sqrt_a[i] * remaining / suffix[i0];
            }
            (i0 + 1, lambda)
        }
        // Feasibility guarantees the predicate holds at i = n, so this arm
        // is unreachable for valid inputs; keep the all-floor convention.
        None => (n + 1, 0.0),
    };

    let objective_value: f64 = sorted.iter().zip(&w_sorted).map(|(a, w)| a / w).sum();

    let mut weights = vec![0.0; n];
    for (j, &orig) in permutation.iter().enumerate() {
        weights[orig] = w_sorted[j];
    }

    Ok(AllocationSolution {
        weights,
        switch_index,
        objective_value,
        lagrange_lambda,
        permutation,
    })
}

/// Which generator produced a [`PowerSchedule`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleKind {
    /// Uniform power `sigma_t^2 = avg_budget` at every iteration.
    Constant,
    /// Pure geometric growth (a floorless CtG schedule).
    Geometric,
    /// Constant-then-geometric with a floor.
    Ctg,
}

/// A per-iteration transmit-power sequence `{sigma_t^2}` for a horizon `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSchedule {
    /// `sigma_t^2` for `t = 0..T-1`.
    pub sigma_sq: Vec<f64>,
    /// Switch iteration `t_s`: entries before it sit on the floor, entries
    /// from it on grow geometrically. Equals `T` for constant schedules.
    pub t_switch: usize,
    /// Average power budget `sigma_p_bar^2`.
    pub avg_budget: f64,
    /// Power floor `sigma_lb^2` (zero for geometric schedules).
    pub floor: f64,
    /// Contraction factor `gamma = sqrt(1 - mu * eta)`; one for constant
    /// schedules.
    pub gamma: f64,
    /// Set when the switch-rule scan found no admissible iteration and the
    /// schedule fell back to `t_s = T - 1`. Cannot fire for feasible inputs;
    /// kept as a tripwire.
    pub switch_rule_empty: bool,
    pub kind: ScheduleKind,
}

impl PowerSchedule {
    /// Uniform schedule `sigma_t^2 = avg_budget` for `len` iterations.
    pub fn constant(len: usize, avg_budget: f64) -> Result<Self> {
        if !avg_budget.is_finite() || avg_budget <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "average budget must be positive, got {avg_budget}"
            )));
        }
        Ok(Self {
            sigma_sq: vec![avg_budget; len],
            t_switch: len,
            avg_budget,
            floor: avg_budget,
            gamma: 1.0,
            switch_rule_empty: false,
            kind: ScheduleKind::Constant,
        })
    }

    /// Horizon `T`.
    pub fn len(&self) -> usize {
        self.sigma_sq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma_sq.is_empty()
    }

    /// Total allocated power `sum_t sigma_t^2`.
    pub fn total_power(&self) -> f64 {
        self.sigma_sq.iter().sum()
    }
}

fn validate_schedule_args(t_horizon: usize, avg_budget: f64, mu: f64, eta: f64) -> Result<f64> {
    if t_horizon == 0 {
        return Err(Error::InvalidInput("schedule horizon must be at least 1".into()));
    }
    if !eta.is_finite() || eta <= 0.0 {
        return Err(Error::InvalidInput(format!("step size must be positive, got {eta}")));
    }
    if !mu.is_finite() || mu <= 0.0 {
        return Err(Error::InvalidInput(format!("mu must be positive, got {mu}")));
    }
    let mu_eta = mu * eta;
    if mu_eta >= 1.0 {
        return Err(Error::InvalidInput(format!(
            "mu * eta = {mu_eta} must lie in (0, 1) for the contraction factor to be real"
        )));
    }
    if !avg_budget.is_finite() || avg_budget <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "average budget must be positive, got {avg_budget}"
        )));
    }
    Ok((1.0 - mu_eta).sqrt())
}

/// Constant-then-geometric power schedule.
///
/// With `gamma = sqrt(1 - mu * eta)`, the switch iteration is
///
/// ```text
///     t_s = min { t : gamma^(T-1-t) >= (1 - gamma^(T-t)) / (1 - gamma)
///                                      * floor / (T * avg_budget - t * floor) } ,
/// ```
///
/// and the schedule holds `sigma_t^2 = floor` before `t_s`, then spends the
/// residual budget `T * avg_budget - t_s * floor` geometrically with ratio
/// `1/gamma`. Ties at the switch threshold include `t`.
///
/// Errors with [`Error::InfeasibleBudget`] when `avg_budget < floor`.
pub fn ctg_schedule(
    t_horizon: usize,
    avg_budget: f64,
    mu: f64,
    eta: f64,
    floor: f64,
) -> Result<PowerSchedule> {
    let gamma = validate_schedule_args(t_horizon, avg_budget, mu, eta)?;
    if !floor.is_finite() || floor < 0.0 {
        return Err(Error::InvalidInput(format!("power floor must be nonnegative, got {floor}")));
    }
    if avg_budget < floor {
        return Err(Error::InfeasibleBudget(format!(
            "average budget {avg_budget} is below the power floor {floor}"
        )));
    }

    let t = t_horizon;
    // powers[k] = gamma^k by iterative multiplication.
    let mut powers = vec![1.0; t];
    for k in 1..t {
        powers[k] = powers[k - 1] * gamma;
    }
    // geo_sum[j] = sum_{k=0}^{j-1} gamma^k.
    let mut geo_sum = vec![0.0; t + 1];
    for k in 0..t {
        geo_sum[k + 1] = geo_sum[k] + powers[k];
    }
    let total = t as f64 * avg_budget;

    // Switch rule, rearranged to avoid dividing by the shrinking residual:
    // gamma^(T-1-t) * (total - t * floor) >= S(t) * floor, where S(t) is the
    // geometric sum over the remaining slots.
    let mut t_switch = None;
    for step in 0..t {
        let residual = total - step as f64 * floor;
        if powers[t - 1 - step] * residual >= geo_sum[t - step] * floor {
            t_switch = Some(step);
            break;
        }
    }
    let switch_rule_empty = t_switch.is_none();
    let t_switch = t_switch.unwrap_or(t - 1);

    let residual = total - t_switch as f64 * floor;
    let tail_sum = geo_sum[t - t_switch];
    let mut sigma_sq = vec![floor; t];
    for step in t_switch..t {
        sigma_sq[step] = powers[t - 1 - step] / tail_sum * residual;
    }

    Ok(PowerSchedule {
        sigma_sq,
        t_switch,
        avg_budget,
        floor,
        gamma,
        switch_rule_empty,
        kind: ScheduleKind::Ctg,
    })
}

/// Pure geometric schedule `sigma_t^2 = gamma^(T-1-t) / (sum_k gamma^k) * T *
/// avg_budget`; agrees entrywise with [`ctg_schedule`] at floor zero.
pub fn geometric_schedule(
    t_horizon: usize,
    avg_budget: f64,
    mu: f64,
    eta: f64,
) -> Result<PowerSchedule> {
    let gamma = validate_schedule_args(t_horizon, avg_budget, mu, eta)?;
    let t = t_horizon;
    let mut powers = vec![1.0; t];
    for k in 1..t {
        powers[k] = powers[k - 1] * gamma;
    }
    // Same accumulation order as the CtG prefix sums.
    let mut sum = 0.0;
    for p in &powers {
        sum += p;
    }
    let total = t as f64 * avg_budget;
    let sigma_sq: Vec<f64> = (0..t).map(|step| powers[t - 1 - step] / sum * total).collect();

    Ok(PowerSchedule {
        sigma_sq,
        t_switch: 0,
        avg_budget,
        floor: 0.0,
        gamma,
        switch_rule_empty: false,
        kind: ScheduleKind::Geometric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn problem(weights: &[f64], budget: f64, floor: f64) -> AllocationProblem {
        AllocationProblem::new(weights.to_vec(), budget, floor).unwrap()
    }

    #[test]
    fn unconstrained_single_element_takes_full_budget() {
        let sol = solve_unconstrained_allocation(&problem(&[1.0], 5.0, 0.0)).unwrap();
        assert_eq!(sol.weights, vec![5.0]);
        assert_relative_eq!(sol.objective_value, 0.2, max_relative = 1e-15);
    }

    #[test]
    fn unconstrained_symmetry_forces_uniform_split() {
        let sol = solve_unconstrained_allocation(&problem(&[1.0, 1.0, 1.0, 1.0], 8.0, 0.0)).unwrap();
        for w in &sol.weights {
            assert_relative_eq!(*w, 2.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn unconstrained_closed_form_1_4_9() {
        // w_i = 6 * sqrt(a_i) / 6 = (1, 2, 3); objective (1+2+3)^2 / 6 = 6.
        let sol = solve_unconstrained_allocation(&problem(&[1.0, 4.0, 9.0], 6.0, 0.0)).unwrap();
        assert_relative_eq!(sol.weights[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(sol.weights[1], 2.0, max_relative = 1e-14);
        assert_relative_eq!(sol.weights[2], 3.0, max_relative = 1e-14);
        assert_relative_eq!(sol.objective_value, 6.0, max_relative = 1e-14);
    }

    #[test]
    fn unconstrained_rejects_nonpositive_inputs() {
        assert!(AllocationProblem::new(vec![1.0, -2.0], 5.0, 0.0).is_err());
        assert!(AllocationProblem::new(vec![1.0], 0.0, 0.0).is_err());
        assert!(AllocationProblem::new(vec![], 1.0, 0.0).is_err());
    }

    #[test]
    fn floored_with_zero_floor_reduces_to_unconstrained() {
        let p = problem(&[1.0, 4.0, 9.0], 6.0, 0.0);
        let floored = solve_floored_allocation(&p).unwrap();
        let unconstrained = solve_unconstrained_allocation(&p).unwrap();
        for (a, b) in floored.weights.iter().zip(&unconstrained.weights) {
            assert_relative_eq!(a, b, max_relative = 1e-14);
        }
        assert_eq!(floored.switch_index, 1);
        assert_relative_eq!(
            floored.objective_value,
            unconstrained.objective_value,
            max_relative = 1e-14
        );
    }

    #[test]
    fn floored_budget_equal_to_floor_binds_everywhere() {
        let sol = solve_floored_allocation(&problem(&[1.0, 1.0, 1.0], 3.0, 1.0)).unwrap();
        for w in &sol.weights {
            assert_relative_eq!(*w, 1.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn floored_mid_switch_case_split() {
        // a = (1, 4, 9), K = 6, C_L = 1.2: the first entry is floored and the
        // rest take sqrt(a_i / lambda(2)) with lambda(2) = ((2+3)/(6-1.2))^2,
        // giving w = (1.2, 1.92, 2.88).
        let sol = solve_floored_allocation(&problem(&[1.0, 4.0, 9.0], 6.0, 1.2)).unwrap();
        assert_eq!(sol.switch_index, 2);
        assert_relative_eq!(sol.weights[0], 1.2, max_relative = 1e-14);
        assert_relative_eq!(sol.weights[1], 1.92, max_relative = 1e-14);
        assert_relative_eq!(sol.weights[2], 2.88, max_relative = 1e-14);
        let lambda = (5.0f64 / 4.8).powi(2);
        assert_relative_eq!(sol.lagrange_lambda, lambda, max_relative = 1e-14);
        let objective = 1.0 / 1.2 + 4.0 / 1.92 + 9.0 / 2.88;
        assert_relative_eq!(sol.objective_value, objective, max_relative = 1e-14);
    }

    #[test]
    fn floored_unsorted_input_is_unpermuted() {
        let sorted = solve_floored_allocation(&problem(&[1.0, 4.0, 9.0], 6.0, 1.2)).unwrap();
        let shuffled = solve_floored_allocation(&problem(&[9.0, 1.0, 4.0], 6.0, 1.2)).unwrap();
        assert_relative_eq!(shuffled.weights[0], sorted.weights[2], max_relative = 1e-14);
        assert_relative_eq!(shuffled.weights[1], sorted.weights[0], max_relative = 1e-14);
        assert_relative_eq!(shuffled.weights[2], sorted.weights[1], max_relative = 1e-14);
        assert_eq!(shuffled.permutation, vec![1, 2, 0]);
        assert_relative_eq!(
            shuffled.objective_value,
            sorted.objective_value,
            max_relative = 1e-14
        );
    }

    #[test]
    fn floored_infeasible_budget_errors() {
        let err = AllocationProblem::new(vec![1.0, 2.0], 1.0, 0.6).unwrap_err();
        assert!(matches!(err, Error::InfeasibleBudget(_)));
    }

    #[test]
    fn ctg_single_slot_takes_whole_budget() {
        let s = ctg_schedule(1, 7.5, 0.5, 0.5, 0.0).unwrap();
        assert_eq!(s.t_switch, 0);
        assert_eq!(s.sigma_sq, vec![7.5]);
    }

    #[test]
    fn ctg_floorless_matches_theorem_coefficients() {
        // gamma = 0.5 (mu * eta = 0.75), T = 3, budget 1: the geometric
        // formula gives sigma^2 = (3/7, 6/7, 12/7): sum 3, ratio 2.
        let s = ctg_schedule(3, 1.0, 1.5, 0.5, 0.0).unwrap();
        assert_relative_eq!(s.gamma, 0.5, max_relative = 1e-15);
        assert_eq!(s.t_switch, 0);
        assert_relative_eq!(s.sigma_sq[0], 3.0 / 7.0, max_relative = 1e-14);
        assert_relative_eq!(s.sigma_sq[1], 6.0 / 7.0, max_relative = 1e-14);
        assert_relative_eq!(s.sigma_sq[2], 12.0 / 7.0, max_relative = 1e-14);
        assert_relative_eq!(s.total_power(), 3.0, max_relative = 1e-14);
        assert_relative_eq!(s.sigma_sq[1] / s.sigma_sq[0], 2.0, max_relative = 1e-12);
        assert_relative_eq!(s.sigma_sq[2] / s.sigma_sq[1], 2.0, max_relative = 1e-12);
    }

    #[test]
    fn ctg_budget_equal_to_floor_yields_constant_schedule() {
        let s = ctg_schedule(8, 2.0, 0.3, 0.5, 2.0).unwrap();
        assert_eq!(s.t_switch, 7);
        for v in &s.sigma_sq {
            assert_relative_eq!(*v, 2.0, max_relative = 1e-12);
        }
        assert!(!s.switch_rule_empty);
    }

    #[test]
    fn ctg_rejects_budget_below_floor() {
        let err = ctg_schedule(4, 0.5, 0.3, 0.5, 1.0).unwrap_err();
        assert!(matches!(err, Error::InfeasibleBudget(_)));
    }

    #[test]
    fn ctg_rejects_degenerate_contraction() {
        assert!(ctg_schedule(4, 1.0, 2.0, 0.5, 0.0).is_err()); // mu * eta = 1
        assert!(ctg_schedule(4, 1.0, 4.0, 0.5, 0.0).is_err()); // mu * eta > 1
    }

    #[test]
    fn geometric_two_slot_example() {
        // gamma = 0.5, T = 2, budget 3: sigma^2 = 2 * 3 * (0.5, 1) / 1.5 = (2, 4).
        let s = geometric_schedule(2, 3.0, 1.5, 0.5).unwrap();
        assert_relative_eq!(s.sigma_sq[0], 2.0, max_relative = 1e-14);
        assert_relative_eq!(s.sigma_sq[1], 4.0, max_relative = 1e-14);
        assert_relative_eq!(s.total_power(), 6.0, max_relative = 1e-14);
    }

    #[test]
    fn geometric_single_slot() {
        let s = geometric_schedule(1, 3.0, 1.0, 0.25).unwrap();
        assert_eq!(s.sigma_sq, vec![3.0]);
    }

    #[test]
    fn geometric_near_unit_gamma_tends_to_uniform() {
        // mu * eta = 2e-9 puts gamma within 1e-9 of one; every slot should
        // sit within 1e-6 relative of the average budget.
        let s = geometric_schedule(50, 2.0, 2e-9, 1.0).unwrap();
        for v in &s.sigma_sq {
            assert_relative_eq!(*v, 2.0, max_relative = 1e-6);
        }
    }

    #[test]
    fn ctg_switch_rule_boundary_consistency() {
        // At t_s the assigned geometric value clears the floor; one step
        // earlier the geometric candidate would have violated it.
        for &(t, mu_eta, ratio) in &[
            (20usize, 0.2f64, 0.5f64),
            (50, 0.05, 0.8),
            (100, 0.4, 0.3),
            (7, 0.3, 0.99),
        ] {
            let budget = 1.0;
            let floor = ratio * budget;
            let s = ctg_schedule(t, budget, mu_eta, 1.0, floor).unwrap();
            let ts = s.t_switch;
            assert!(s.sigma_sq[ts] >= floor - 1e-12, "switch slot below floor");
            if ts > 0 {
                let gamma = s.gamma;
                let mut powers = vec![1.0; t];
                for k in 1..t {
                    powers[k] = powers[k - 1] * gamma;
                }
                let tail: f64 = powers[..t - (ts - 1)].iter().sum();
                let residual = t as f64 * budget - (ts - 1) as f64 * floor;
                let candidate = powers[t - 1 - (ts - 1)] / tail * residual;
                assert!(
                    candidate < floor,
                    "geometric candidate at t_s - 1 should violate the floor: {candidate} vs {floor}"
                );
            }
        }
    }
}
