//! The two-case learning-rate schedule and its validity constraints.

use serde::{Deserialize, Serialize};

use crate::error::ScheduleError;

/// Conditioning regime: `Ill` when `n/kappa <= 3/4`, else `Well`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScheduleCase {
    Ill,
    Well,
}

impl std::fmt::Display for ScheduleCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScheduleCase::Ill => write!(f, "ill"),
            ScheduleCase::Well => write!(f, "well"),
        }
    }
}

/// Derived step-size and momentum constants.
///
/// `eta = sqrt(1/(3 mu n L))` in the ill-conditioned case, `1/(2 mu n)`
/// otherwise; `tau = n eta mu / (1 + eta mu)` in both.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub eta: f64,
    pub tau: f64,
    pub case: ScheduleCase,
    pub kappa: f64,
    pub n: usize,
}

/// Builds the schedule from the problem constants, asserting
/// `0 < tau < 1/2` and the step constraint
/// `L tau <= 1/eta - L tau / (1 - tau)`.
pub fn make_schedule(n: usize, l_smooth: f64, mu: f64) -> Result<Schedule, ScheduleError> {
    if n == 0 || l_smooth <= 0.0 || mu <= 0.0 || !l_smooth.is_finite() || !mu.is_finite() {
        return Err(ScheduleError::InvalidInputs { n, l: l_smooth, mu });
    }
    let kappa = l_smooth / mu;
    let nf = n as f64;
    let (eta, case) = if nf / kappa <= 0.75 {
        ((1.0 / (3.0 * mu * nf * l_smooth)).sqrt(), ScheduleCase::Ill)
    } else {
        (1.0 / (2.0 * mu * nf), ScheduleCase::Well)
    };
    let tau = nf * eta * mu / (1.0 + eta * mu);
    let schedule = Schedule {
        eta,
        tau,
        case,
        kappa,
        n,
    };
    schedule.validate(l_smooth)?;
    Ok(schedule)
}

impl Schedule {
    /// Schedule for a composite problem's `(n, L, mu)`.
    pub fn for_problem(problem: &crate::model::Problem) -> Result<Schedule, ScheduleError> {
        make_schedule(problem.n(), problem.l_smooth(), problem.mu())
    }

    /// Manual `eta`/`tau` (tuning mode). Skips the constraint assertions;
    /// callers should surface a warning.
    pub fn manual(n: usize, l_smooth: f64, mu: f64, eta: f64, tau: f64) -> Schedule {
        let kappa = l_smooth / mu;
        let case = if n as f64 / kappa <= 0.75 {
            ScheduleCase::Ill
        } else {
            ScheduleCase::Well
        };
        Schedule {
            eta,
            tau,
            case,
            kappa,
            n,
        }
    }

    /// Checks `tau` range and the step constraint against a smoothness
    /// constant. Always satisfied by the two-case formulas; only manual
    /// overrides can fail.
    pub fn validate(&self, l_smooth: f64) -> Result<(), ScheduleError> {
        if self.tau.is_nan() || self.tau <= 0.0 || self.tau >= 0.5 {
            return Err(ScheduleError::TauOutOfRange { tau: self.tau });
        }
        let lhs = l_smooth * self.tau;
        let rhs = 1.0 / self.eta - l_smooth * self.tau / (1.0 - self.tau);
        if lhs > rhs {
            return Err(ScheduleError::StepConstraint { lhs, rhs });
        }
        Ok(())
    }

    /// Per-iteration Lyapunov contraction factor `(1 + eta mu)^{-1}`.
    pub fn contraction_factor(&self, mu: f64) -> f64 {
        1.0 / (1.0 + self.eta * mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ill_conditioned_example() {
        let s = make_schedule(100, 1.0, 1e-4).unwrap();
        assert_eq!(s.case, ScheduleCase::Ill);
        assert_relative_eq!(s.eta, (1.0f64 / 0.03).sqrt(), max_relative = 1e-12);
        assert_relative_eq!(s.eta, 5.773503, max_relative = 1e-6);
        let eta_mu = s.eta * 1e-4;
        assert_relative_eq!(s.tau, 100.0 * eta_mu / (1.0 + eta_mu), max_relative = 1e-12);
        assert_relative_eq!(s.tau, 0.057702, max_relative = 1e-4);
    }

    #[test]
    fn well_conditioned_example() {
        let s = make_schedule(100, 1.0, 0.01).unwrap();
        assert_eq!(s.case, ScheduleCase::Well);
        assert_relative_eq!(s.eta, 0.5, max_relative = 1e-15);
        assert_relative_eq!(s.tau, 0.5 / 1.005, max_relative = 1e-12);
        assert_relative_eq!(s.tau, 0.4975124, max_relative = 1e-6);
    }

    #[test]
    fn contraction_factor_case_i() {
        // n = 1000, kappa = 1e6: factor (1 + sqrt(1/3e9))^-1
        let mu = 1e-6;
        let s = make_schedule(1000, 1.0, mu).unwrap();
        let rate = s.contraction_factor(mu);
        let expected = 1.0 / (1.0 + (1.0f64 / 3e9).sqrt());
        assert_relative_eq!(rate, expected, max_relative = 1e-12);
        assert_relative_eq!(s.eta * mu, 1.8257e-5, max_relative = 1e-4);
    }

    #[test]
    fn boundary_selects_ill_case() {
        // n/kappa exactly 3/4 goes to the ill-conditioned branch
        let s = make_schedule(75, 1.0, 0.01).unwrap();
        assert_eq!(s.case, ScheduleCase::Ill);
        let s = make_schedule(76, 1.0, 0.01).unwrap();
        assert_eq!(s.case, ScheduleCase::Well);
    }

    #[test]
    fn manual_override_can_violate() {
        let s = Schedule::manual(100, 1.0, 0.01, 10.0, 0.9);
        assert!(s.validate(1.0).is_err());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(make_schedule(0, 1.0, 1.0).is_err());
        assert!(make_schedule(10, 0.0, 1.0).is_err());
        assert!(make_schedule(10, 1.0, -1.0).is_err());
    }
}
