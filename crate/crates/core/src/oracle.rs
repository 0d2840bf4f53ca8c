//! Independent verification machinery: best-response dynamics, standard
//! interference-function checks, unilateral-deviation scans, and a numerical
//! maximizer for the leader's committed power. Everything here validates the
//! closed forms in `equilibria` without sharing their formulas.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::equilibria::follower_response;
use crate::model::{sinr_sic, sinr_sud, utility, ChannelState, DecodingOrder, GameConfig, PowerProfile};

/// Receiver under which best responses are evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Receiver {
    Sud,
    Sic(DecodingOrder),
}

/// Record of one synchronous best-response run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IterationTrace {
    pub profiles: Vec<PowerProfile>,
    pub converged: bool,
    pub iterations: usize,
}

impl IterationTrace {
    pub fn fixed_point(&self) -> Option<&PowerProfile> {
        self.converged.then(|| self.profiles.last().expect("trace never empty"))
    }
}

/// Outcome of the standard-function (monotonicity + scalability) checks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StandardFunctionReport {
    pub samples: usize,
    pub monotonicity_violations: usize,
    pub scalability_violations: usize,
}

impl StandardFunctionReport {
    pub fn passed(&self) -> bool {
        self.monotonicity_violations == 0 && self.scalability_violations == 0
    }
}

/// One profitable unilateral deviation found by the grid scan.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeviationViolation {
    pub user: u32,
    pub power: f64,
    /// Relative utility improvement of the deviation.
    pub gain: f64,
}

/// Result of scanning unilateral deviations around a candidate equilibrium.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeviationReport {
    pub grid: usize,
    /// Largest relative improvement seen over all users and grid points
    /// (negative when every deviation loses).
    pub worst_gain: f64,
    pub violations: Vec<DeviationViolation>,
}

impl DeviationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Stackelberg-specific verification: followers must not profit from
/// unilateral deviations, and the leader's committed power must maximize his
/// utility when followers re-respond at every scanned power.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StackelbergCheck {
    pub followers: DeviationReport,
    pub leader_worst_gain: f64,
    pub leader_pass: bool,
}

impl StackelbergCheck {
    pub fn passed(&self) -> bool {
        self.followers.passed() && self.leader_pass
    }
}

const DEVIATION_TOL: f64 = 1e-6;

/// Power that drives `user`'s SINR to beta* given the rest of the profile,
/// clipped to the user's cap.
pub fn best_response(
    config: &GameConfig,
    channel: &ChannelState,
    receiver: &Receiver,
    user: u32,
    profile: &PowerProfile,
) -> Result<f64> {
    let beta = config.model.beta_star()?;
    let i = (user - 1) as usize;
    let interference = match receiver {
        Receiver::Sud => (0..config.users())
            .filter(|j| *j != i)
            .map(|j| profile.p[j] * channel.h2[j])
            .sum::<f64>(),
        Receiver::Sic(order) => {
            let position = order.position(user).ok_or_else(|| {
                Error::InvalidConfig(format!("user {user} missing from decoding order"))
            })?;
            order
                .decoded_after(position)
                .iter()
                .map(|&v| profile.p[(v - 1) as usize] * channel.h2[(v - 1) as usize])
                .sum::<f64>()
        }
    };
    let unconstrained = beta / channel.h2[i] * (config.sigma2 + interference / config.n);
    Ok(unconstrained.min(config.pmax[i]))
}

/// Synchronous best-response dynamics from `start`. Stops once the largest
/// relative per-user change drops below 1e-9, after 10^4 sweeps, or as soon
/// as a power exceeds 1e12 sigma2/min|h|^2 (divergence on infeasible SUD
/// instances).
pub fn br_iterate(
    config: &GameConfig,
    channel: &ChannelState,
    receiver: &Receiver,
    start: &PowerProfile,
) -> Result<IterationTrace> {
    channel.check_against(config)?;
    const TOL: f64 = 1e-9;
    const MAX_ITER: usize = 10_000;
    let min_h2 = channel.h2.iter().cloned().fold(f64::INFINITY, f64::min);
    let blowup = 1e12 * config.sigma2 / min_h2;

    let mut profiles = vec![start.clone()];
    let mut current = start.clone();
    for iteration in 1..=MAX_ITER {
        let mut next = Vec::with_capacity(config.users());
        for user in 1..=config.k {
            next.push(best_response(config, channel, receiver, user, &current)?);
        }
        let next = PowerProfile { p: next };
        let change = current
            .p
            .iter()
            .zip(&next.p)
            .map(|(old, new)| (new - old).abs() / old.abs().max(1e-300))
            .fold(0.0f64, f64::max);
        let diverged = next.p.iter().any(|p| *p > blowup);
        profiles.push(next.clone());
        current = next;
        if diverged {
            return Ok(IterationTrace { profiles, converged: false, iterations: iteration });
        }
        if change < TOL {
            return Ok(IterationTrace { profiles, converged: true, iterations: iteration });
        }
    }
    Ok(IterationTrace { profiles, converged: false, iterations: MAX_ITER })
}

/// Randomized check that the best-response map is a standard interference
/// function: monotone (p >= p' implies BR(p) >= BR(p')) and scalable
/// (alpha BR(p) > BR(alpha p) for alpha > 1).
pub fn standard_function_checks(
    config: &GameConfig,
    channel: &ChannelState,
    receiver: &Receiver,
    samples: usize,
    seed: u64,
) -> Result<StandardFunctionReport> {
    if samples == 0 {
        return Err(Error::InvalidConfig("need at least one sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut monotonicity_violations = 0;
    let mut scalability_violations = 0;
    for _ in 0..samples {
        let base: Vec<f64> = (0..config.users())
            .map(|_| config.sigma2 * 10f64.powf(rng.gen_range(-2.0..2.0)))
            .collect();
        let bumped: Vec<f64> = base.iter().map(|p| p * (1.0 + rng.gen_range(0.0..3.0))).collect();
        let p_lo = PowerProfile { p: base };
        let p_hi = PowerProfile { p: bumped };
        let alpha: f64 = rng.gen_range(1.0001..10.0);
        for user in 1..=config.k {
            let br_lo = best_response(config, channel, receiver, user, &p_lo)?;
            let br_hi = best_response(config, channel, receiver, user, &p_hi)?;
            if br_hi < br_lo * (1.0 - 1e-12) {
                monotonicity_violations += 1;
            }
            let scaled = PowerProfile { p: p_lo.p.iter().map(|p| alpha * p).collect() };
            let br_scaled = best_response(config, channel, receiver, user, &scaled)?;
            if !(alpha * br_lo > br_scaled) {
                scalability_violations += 1;
            }
        }
    }
    Ok(StandardFunctionReport { samples, monotonicity_violations, scalability_violations })
}

/// Scans unilateral deviations of every user over a log grid spanning
/// [1e-4, 1e4] times the candidate power and reports any deviation improving
/// the utility by more than relative 1e-6.
pub fn verify_no_deviation(
    config: &GameConfig,
    channel: &ChannelState,
    receiver: &Receiver,
    profile: &PowerProfile,
    grid: usize,
) -> Result<DeviationReport> {
    if grid < 100 {
        return Err(Error::InvalidConfig(format!("deviation grid {grid} must be >= 100")));
    }
    let users: Vec<u32> = (1..=config.k).collect();
    deviation_scan(config, channel, receiver, profile, grid, &users)
}

fn deviation_scan(
    config: &GameConfig,
    channel: &ChannelState,
    receiver: &Receiver,
    profile: &PowerProfile,
    grid: usize,
    users: &[u32],
) -> Result<DeviationReport> {
    channel.check_against(config)?;
    let sinr_of = |p: &PowerProfile, user: u32| match receiver {
        Receiver::Sud => sinr_sud(config, channel, p, user),
        Receiver::Sic(order) => sinr_sic(config, channel, p, order, user),
    };
    let mut worst_gain = f64::NEG_INFINITY;
    let mut violations = Vec::new();
    for &user in users {
        let i = (user - 1) as usize;
        let u_eq = utility(config.rates[i], &config.model, sinr_of(profile, user), profile.p[i]);
        let mut scratch = profile.clone();
        for j in 0..grid {
            let exponent = -4.0 + 8.0 * j as f64 / (grid - 1) as f64;
            let power = (profile.p[i] * 10f64.powf(exponent)).min(config.pmax[i]);
            scratch.p[i] = power;
            let u_dev =
                utility(config.rates[i], &config.model, sinr_of(&scratch, user), power);
            let gain = u_dev / u_eq - 1.0;
            if gain > worst_gain {
                worst_gain = gain;
            }
            if gain > DEVIATION_TOL {
                violations.push(DeviationViolation { user, power, gain });
            }
        }
        scratch.p[i] = profile.p[i];
    }
    Ok(DeviationReport { grid, worst_gain, violations })
}

/// Leader power maximizing R_L f(s(p))/p by golden-section search on a log
/// scale over [1e-6, 1e6] x sigma2/|h_L|^2, followers re-responding at every
/// evaluation.
pub fn leader_power_maximizer(
    config: &GameConfig,
    channel: &ChannelState,
    leader: u32,
) -> Result<f64> {
    channel.check_against(config)?;
    let i = (leader - 1) as usize;
    let objective = |p: f64| -> Result<f64> {
        let profile = if config.k == 1 {
            PowerProfile { p: vec![p] }
        } else {
            follower_response(config, channel, leader, p)?
        };
        let sinr = sinr_sud(config, channel, &profile, leader);
        Ok(utility(config.rates[i], &config.model, sinr, p))
    };

    let scale = config.sigma2 / channel.h2[i];
    let mut a = (1e-6 * scale).ln();
    let mut b = (1e6 * scale).ln();
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = objective(x1.exp())?;
    let mut f2 = objective(x2.exp())?;
    while b - a > 1e-13 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective(x2.exp())?;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective(x1.exp())?;
        }
    }
    Ok((0.5 * (a + b)).exp())
}

/// Definition-level Stackelberg check: followers see no profitable unilateral
/// deviation, and no alternative leader power (with followers re-responding)
/// beats the committed one.
pub fn verify_stackelberg(
    config: &GameConfig,
    channel: &ChannelState,
    leader: u32,
    profile: &PowerProfile,
    grid: usize,
) -> Result<StackelbergCheck> {
    if grid < 100 {
        return Err(Error::InvalidConfig(format!("deviation grid {grid} must be >= 100")));
    }
    let followers: Vec<u32> = (1..=config.k).filter(|u| *u != leader).collect();
    let follower_report =
        deviation_scan(config, channel, &Receiver::Sud, profile, grid, &followers)?;

    let i = (leader - 1) as usize;
    let u_leader = |p: f64| -> Result<f64> {
        let responded = if config.k == 1 {
            PowerProfile { p: vec![p] }
        } else {
            follower_response(config, channel, leader, p)?
        };
        let sinr = sinr_sud(config, channel, &responded, leader);
        Ok(utility(config.rates[i], &config.model, sinr, p))
    };
    let u_eq = u_leader(profile.p[i])?;
    let mut leader_worst_gain = f64::NEG_INFINITY;
    for j in 0..grid {
        let exponent = -4.0 + 8.0 * j as f64 / (grid - 1) as f64;
        let power = profile.p[i] * 10f64.powf(exponent);
        let gain = u_leader(power)? / u_eq - 1.0;
        if gain > leader_worst_gain {
            leader_worst_gain = gain;
        }
    }
    Ok(StackelbergCheck {
        followers: follower_report,
        leader_worst_gain,
        leader_pass: leader_worst_gain <= DEVIATION_TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::efficiency::EfficiencyModel;
    use crate::equilibria::{sic_nash, stackelberg, sud_nash, Regime};
    use approx::assert_relative_eq;

    fn setup(k: u32, n: f64, m: u32) -> (GameConfig, ChannelState) {
        let model = EfficiencyModel::new(m).unwrap();
        let config = GameConfig::new(k, n, model, 1.0, vec![1.0; k as usize]).unwrap();
        let channel = ChannelState::new(vec![1.0; k as usize]).unwrap();
        (config, channel)
    }

    #[test]
    fn best_response_values() {
        let (config, channel) = setup(2, 1.0, 2);
        let beta = config.model.beta_star().unwrap();
        let zero = PowerProfile::zeros(2);
        assert_relative_eq!(
            best_response(&config, &channel, &Receiver::Sud, 1, &zero).unwrap(),
            beta,
            max_relative = 1e-14
        );
        let p = PowerProfile::new(vec![0.0, 1.0]).unwrap();
        let br = best_response(&config, &channel, &Receiver::Sud, 1, &p).unwrap();
        assert_relative_eq!(br, 2.0 * beta, max_relative = 1e-14);
        assert!((br - 2.5128).abs() < 1e-3);
    }

    #[test]
    fn best_response_matches_grid_maximization() {
        // 1-D utility maximization given the other user's power
        let (config, channel) = setup(2, 1.0, 2);
        let p = PowerProfile::new(vec![0.0, 1.0]).unwrap();
        let br = best_response(&config, &channel, &Receiver::Sud, 1, &p).unwrap();
        let mut best = (0.0, 0.0);
        let mut scratch = p.clone();
        for j in 0..20000 {
            let power = 10f64.powf(-2.0 + 4.0 * j as f64 / 19999.0);
            scratch.p[0] = power;
            let u = utility(1.0, &config.model, sinr_sud(&config, &channel, &scratch, 1), power);
            if u > best.1 {
                best = (power, u);
            }
        }
        assert_relative_eq!(br, best.0, max_relative = 1e-3);
    }

    #[test]
    fn iteration_converges_to_sud_closed_form() {
        let (config, channel) = setup(2, 4.0, 2);
        let trace =
            br_iterate(&config, &channel, &Receiver::Sud, &PowerProfile::zeros(2)).unwrap();
        assert!(trace.converged);
        let closed = sud_nash(&config, &channel).unwrap();
        let fixed = trace.fixed_point().unwrap();
        for i in 0..2 {
            assert_relative_eq!(fixed.p[i], closed.powers[i], max_relative = 1e-6);
            assert!((fixed.p[i] - 1.8318).abs() < 1e-3);
        }
    }

    #[test]
    fn iteration_diverges_on_infeasible_sud() {
        let (config, channel) = setup(2, 1.0, 2);
        let trace =
            br_iterate(&config, &channel, &Receiver::Sud, &PowerProfile::zeros(2)).unwrap();
        assert!(!trace.converged);
        // powers grow monotonically once positive
        let last = &trace.profiles[trace.profiles.len() - 1];
        let before = &trace.profiles[trace.profiles.len() - 2];
        assert!(last.p[0] > before.p[0]);
        assert!(last.p[0] > 1e10);
    }

    #[test]
    fn iteration_converges_to_sic_closed_form() {
        let (config, channel) = setup(2, 1.0, 2);
        let order = DecodingOrder::new(vec![2, 1]).unwrap();
        let trace =
            br_iterate(&config, &channel, &Receiver::Sic(order.clone()), &PowerProfile::zeros(2))
                .unwrap();
        assert!(trace.converged);
        let closed = sic_nash(&config, &channel, &order).unwrap();
        let fixed = trace.fixed_point().unwrap();
        for i in 0..2 {
            assert_relative_eq!(fixed.p[i], closed.powers[i], max_relative = 1e-8);
        }
    }

    #[test]
    fn iteration_unique_fixed_point_from_random_starts() {
        let model = EfficiencyModel::new(10).unwrap();
        let config = GameConfig::new(3, 8.0, model, 0.5, vec![1.0, 2.0, 0.5]).unwrap();
        let channel = ChannelState::new(vec![0.4, 1.3, 2.2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut reference: Option<PowerProfile> = None;
        for _ in 0..10 {
            let start = PowerProfile::new(
                (0..3).map(|_| 10f64.powf(rng.gen_range(-3.0..3.0))).collect(),
            )
            .unwrap();
            let trace = br_iterate(&config, &channel, &Receiver::Sud, &start).unwrap();
            assert!(trace.converged);
            let fixed = trace.fixed_point().unwrap();
            if let Some(ref expect) = reference {
                for i in 0..3 {
                    assert_relative_eq!(fixed.p[i], expect.p[i], max_relative = 1e-7);
                }
            } else {
                reference = Some(fixed.clone());
            }
        }
    }

    #[test]
    fn standard_function_holds() {
        let (config, channel) = setup(5, 8.0, 2);
        let report =
            standard_function_checks(&config, &channel, &Receiver::Sud, 1000, 42).unwrap();
        assert!(report.passed(), "{report:?}");
        let order = DecodingOrder::new(vec![5, 3, 1, 2, 4]).unwrap();
        let report =
            standard_function_checks(&config, &channel, &Receiver::Sic(order), 1000, 43).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn scalability_is_equality_at_alpha_one() {
        let (config, channel) = setup(2, 1.0, 2);
        let p = PowerProfile::new(vec![0.8, 1.7]).unwrap();
        let br = best_response(&config, &channel, &Receiver::Sud, 1, &p).unwrap();
        let br_scaled = best_response(&config, &channel, &Receiver::Sud, 1, &p).unwrap();
        assert!((br - br_scaled).abs() <= 1e-12 * br);
    }

    #[test]
    fn no_deviation_at_equilibria_and_violation_off_equilibrium() {
        let (config, channel) = setup(2, 4.0, 2);
        let out = sud_nash(&config, &channel).unwrap();
        let report = verify_no_deviation(
            &config,
            &channel,
            &Receiver::Sud,
            &out.power_profile(),
            400,
        )
        .unwrap();
        assert!(report.passed(), "worst gain {}", report.worst_gain);

        let order = DecodingOrder::new(vec![1, 2]).unwrap();
        let out = sic_nash(&config, &channel, &order).unwrap();
        let report = verify_no_deviation(
            &config,
            &channel,
            &Receiver::Sic(order),
            &out.power_profile(),
            400,
        )
        .unwrap();
        assert!(report.passed());

        // scaling the equilibrium up is not an equilibrium
        let perturbed =
            PowerProfile::new(out.powers.iter().map(|p| 1.5 * p).collect()).unwrap();
        let order = DecodingOrder::new(vec![1, 2]).unwrap();
        let report =
            verify_no_deviation(&config, &channel, &Receiver::Sic(order), &perturbed, 400)
                .unwrap();
        assert!(!report.passed());
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn deviation_grid_too_small_rejected() {
        let (config, channel) = setup(2, 4.0, 2);
        let p = PowerProfile::new(vec![1.0, 1.0]).unwrap();
        assert!(verify_no_deviation(&config, &channel, &Receiver::Sud, &p, 50).is_err());
    }

    #[test]
    fn leader_maximizer_matches_closed_form() {
        for &(k, n, m) in &[(2u32, 1.0f64, 2u32), (3, 8.0, 10), (2, 4.0, 2)] {
            let (config, channel) = setup(k, n, m);
            let out = stackelberg(&config, &channel, 1).unwrap();
            assert_eq!(out.regime, Regime::NonSaturated);
            let numeric = leader_power_maximizer(&config, &channel, 1).unwrap();
            assert_relative_eq!(numeric, out.powers[0], max_relative = 1e-6);
        }
    }

    #[test]
    fn stackelberg_outcome_verifies() {
        let (config, channel) = setup(3, 8.0, 10);
        let out = stackelberg(&config, &channel, 2).unwrap();
        let check =
            verify_stackelberg(&config, &channel, 2, &out.power_profile(), 300).unwrap();
        assert!(check.passed(), "{check:?}");
    }
}
