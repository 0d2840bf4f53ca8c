//! Network-level efficiency measures and the super-leader optimizations:
//! who should lead the Stackelberg game and in which order a SIC receiver
//! should decode, under social welfare and under the co-located
//! (equivalent virtual MIMO) energy efficiency.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::efficiency::EfficiencyModel;
use crate::equilibria::{sic_nash, stackelberg, stackelberg_with, EquilibriumOutcome, Regime};
use crate::error::{Error, Result};
use crate::model::{ChannelState, DecodingOrder, GameConfig};

/// The two network scores of one equilibrium outcome.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct NetworkScore {
    /// Sum of individual utilities (bits/joule).
    pub welfare: f64,
    /// Total throughput over total power (bits/joule); never exceeds welfare.
    pub evmn: f64,
}

impl NetworkScore {
    pub fn of(outcome: &EquilibriumOutcome) -> Result<Self> {
        Ok(Self { welfare: social_welfare(outcome)?, evmn: evmn(outcome)? })
    }
}

/// w = sum_i T_i / p_i = sum_i u_i.
pub fn social_welfare(outcome: &EquilibriumOutcome) -> Result<f64> {
    require_solved(outcome)?;
    Ok(outcome.utilities.iter().sum())
}

/// v = (sum_i T_i) / (sum_i p_i), the co-located transmitter's efficiency.
pub fn evmn(outcome: &EquilibriumOutcome) -> Result<f64> {
    require_solved(outcome)?;
    let total_power: f64 = outcome.powers.iter().sum();
    if total_power <= 0.0 {
        return Err(Error::InvalidConfig("EVMN needs positive total power".into()));
    }
    Ok(outcome.throughputs.iter().sum::<f64>() / total_power)
}

fn require_solved(outcome: &EquilibriumOutcome) -> Result<()> {
    if outcome.regime != Regime::NonSaturated || outcome.powers.is_empty() {
        return Err(Error::InvalidConfig(
            "network scores are only defined for a solved non-saturated outcome".into(),
        ));
    }
    Ok(())
}

/// Welfare-optimal leader: the user with the lowest R_i |h_i|^2 (lowest index
/// on ties).
pub fn best_leader_welfare(config: &GameConfig, channel: &ChannelState) -> Result<u32> {
    channel.check_against(config)?;
    let mut best = 1u32;
    let mut best_key = config.rates[0] * channel.h2[0];
    for i in 1..config.users() {
        let key = config.rates[i] * channel.h2[i];
        if key < best_key {
            best_key = key;
            best = i as u32 + 1;
        }
    }
    Ok(best)
}

/// Welfare-optimal decoding order: smallest R_i |h_i|^2 decoded first (it
/// absorbs the largest penalty exponent), largest decoded last.
pub fn best_order_welfare(config: &GameConfig, channel: &ChannelState) -> Result<DecodingOrder> {
    channel.check_against(config)?;
    sorted_order(config, channel, |i| config.rates[i] * channel.h2[i], false)
}

/// EVMN-optimal decoding order: largest |h_i|^2 / sigma2 decoded first, which
/// minimizes the total transmit power.
pub fn best_order_evmn(config: &GameConfig, channel: &ChannelState) -> Result<DecodingOrder> {
    channel.check_against(config)?;
    sorted_order(config, channel, |i| channel.h2[i], true)
}

fn sorted_order<F: Fn(usize) -> f64>(
    config: &GameConfig,
    _channel: &ChannelState,
    key: F,
    descending: bool,
) -> Result<DecodingOrder> {
    let mut ids: Vec<u32> = (1..=config.k).collect();
    ids.sort_by(|a, b| {
        let (ka, kb) = (key((*a - 1) as usize), key((*b - 1) as usize));
        let ord = ka.partial_cmp(&kb).expect("finite keys");
        let ord = if descending { ord.reverse() } else { ord };
        ord.then(a.cmp(b))
    });
    DecodingOrder::new(ids)
}

/// Two-user closed-form threshold for the EVMN leader choice: the weaker
/// user leads iff a * R_weak <= R_strong.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoUserThreshold {
    pub a: f64,
    pub weak_user: u32,
    pub weak_leads: bool,
    pub agrees_with_argmax: bool,
}

/// EVMN leader selection report: direct evaluation is the authority, the
/// pairwise closed-form condition is carried as a cross-check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvmnLeaderReport {
    pub chosen: u32,
    /// v when user i+1 is the leader.
    pub scores: Vec<f64>,
    pub tie: bool,
    /// User singled out by the pairwise dominance condition, when unique.
    pub condition_choice: Option<u32>,
    pub condition_agrees: bool,
    pub two_user: Option<TwoUserThreshold>,
}

/// EVMN-optimal leader by direct evaluation of all K Stackelberg outcomes,
/// with the closed-form dominance condition reported alongside.
pub fn best_leader_evmn(config: &GameConfig, channel: &ChannelState) -> Result<EvmnLeaderReport> {
    channel.check_against(config)?;
    if config.k == 1 {
        let outcome = stackelberg(config, channel, 1)?;
        let score = evmn(&outcome)?;
        return Ok(EvmnLeaderReport {
            chosen: 1,
            scores: vec![score],
            tie: false,
            condition_choice: Some(1),
            condition_agrees: true,
            two_user: None,
        });
    }
    let consts = config.model.constants(config.k, config.n)?;
    let mut scores = Vec::with_capacity(config.users());
    for leader in 1..=config.k {
        let outcome = stackelberg_with(config, channel, leader, &consts);
        scores.push(evmn(&outcome)?);
    }
    let mut chosen = 1u32;
    for i in 1..config.users() {
        if scores[i] > scores[(chosen - 1) as usize] {
            chosen = i as u32 + 1;
        }
    }
    let top = scores[(chosen - 1) as usize];
    let tie = scores
        .iter()
        .enumerate()
        .any(|(i, s)| i as u32 + 1 != chosen && (s - top).abs() <= 1e-12 * top.abs());

    let beta = consts.beta_star;
    let gamma = consts.gamma_star;
    let (k, n) = (config.k as f64, config.n);
    let denom = n - (k - 2.0) * beta - (k - 1.0) * gamma * beta / n;
    let f_beta = config.model.eval(beta)?;
    let f_gamma = config.model.eval(gamma)?;

    // v^{(i)} >= v^{(j)} iff
    //   v^{(j)} sigma2 N (beta-gamma) (1/h_i^2 - 1/h_j^2) / denom
    //     >= (R_i - R_j) (f(beta) - f(gamma))
    let dominates = |i: usize, j: usize| -> bool {
        let lhs = scores[j] * config.sigma2 * n * (beta - gamma)
            / denom
            * (1.0 / channel.h2[i] - 1.0 / channel.h2[j]);
        let rhs = (config.rates[i] - config.rates[j]) * (f_beta - f_gamma);
        lhs >= rhs - 1e-12 * rhs.abs().max(1.0)
    };
    let mut condition_choice = None;
    for i in 0..config.users() {
        if (0..config.users()).all(|j| j == i || dominates(i, j)) {
            condition_choice = Some(i as u32 + 1);
            break;
        }
    }
    let condition_agrees = match condition_choice {
        Some(u) => {
            u == chosen || (scores[(u - 1) as usize] - top).abs() <= 1e-12 * top.abs()
        }
        None => false,
    };

    let two_user = (config.k == 2).then(|| {
        let (weak, strong) = if channel.h2[0] <= channel.h2[1] { (0, 1) } else { (1, 0) };
        let alpha_weak =
            channel.h2[weak] * gamma * (n + beta) + channel.h2[strong] * beta * (n + gamma);
        let alpha_strong =
            channel.h2[strong] * gamma * (n + beta) + channel.h2[weak] * beta * (n + gamma);
        let a = (f_beta * alpha_strong - f_gamma * alpha_weak)
            / (f_beta * alpha_weak - f_gamma * alpha_strong);
        let weak_leads = a * config.rates[weak] <= config.rates[strong];
        let agrees = if weak_leads {
            chosen == weak as u32 + 1 || tie
        } else {
            chosen == strong as u32 + 1 || tie
        };
        TwoUserThreshold { a, weak_user: weak as u32 + 1, weak_leads, agrees_with_argmax: agrees }
    });

    Ok(EvmnLeaderReport { chosen, scores, tie, condition_choice, condition_agrees, two_user })
}

/// Per-user SIC-over-SUD utility gains, indexed by decoding position (first
/// decoded first). Consecutive entries grow by exactly 1 + beta*/N; every
/// entry is >= 1 whenever SUD is feasible.
pub fn rho_sequence(model: &EfficiencyModel, k: u32, n: f64) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::InvalidConfig("K must be >= 1".into()));
    }
    let beta = model.beta_star()?;
    let load = (k as f64 - 1.0) * beta / n;
    if load >= 1.0 {
        return Err(Error::SudInfeasible { load });
    }
    let mu_sud = 1.0 / (1.0 - load);
    let base = 1.0 + beta / n;
    Ok((1..=k).map(|r| mu_sud / base.powi((k - r) as i32)).collect())
}

/// The first-decoded user's SIC/SUD gain as a function of the per-dimension
/// SINR target x = beta*/N; nondecreasing on [0, 1/(K-1)) and 1 at x = 0.
pub fn rho_worst(k: u32, x: f64) -> f64 {
    1.0 / ((1.0 - (k as f64 - 1.0) * x) * (1.0 + x).powi(k as i32 - 1))
}

/// Closed-form Stackelberg-over-SUD utility gains: (leader ratio, follower
/// ratio); both are >= 1 whenever both equilibria exist.
pub fn se_gain_ratios(model: &EfficiencyModel, k: u32, n: f64) -> Result<(f64, f64)> {
    let consts = model.constants(k, n)?;
    let beta = consts.beta_star;
    let gamma = consts.gamma_star;
    let kf = k as f64;
    let sud_margin = 1.0 - (kf - 1.0) * beta / n;
    if sud_margin <= 0.0 {
        return Err(Error::SudInfeasible { load: (kf - 1.0) * beta / n });
    }
    let denom = n - (kf - 2.0) * beta - (kf - 1.0) * gamma * beta / n;
    if denom <= 0.0 {
        return Err(Error::InvalidConfig("Stackelberg equilibrium infeasible".into()));
    }
    let follower = denom / (sud_margin * (n + gamma));
    let h = |x: f64| -> Result<f64> {
        Ok(model.eval(x)? / x * (n - (kf - 2.0) * beta - (kf - 1.0) * beta * x / n))
    };
    let leader = h(gamma)? / h(beta)?;
    Ok((leader, follower))
}

/// Closed-form ratio of a user's utility as leader to his utility as
/// follower; always <= 1 (following beats leading).
pub fn se_leader_follower_ratio(model: &EfficiencyModel, k: u32, n: f64) -> Result<f64> {
    let consts = model.constants(k, n)?;
    let beta = consts.beta_star;
    let gamma = consts.gamma_star;
    let g = |x: f64| -> Result<f64> { Ok(model.eval(x)? / x) };
    Ok(g(gamma)? * (n + gamma) / (g(beta)? * (n + beta)))
}

/// Brute-force leader choice for a metric over all K Stackelberg outcomes.
pub fn enumerate_leader<F>(config: &GameConfig, channel: &ChannelState, score: F) -> Result<(u32, Vec<f64>)>
where
    F: Fn(&EquilibriumOutcome) -> Result<f64>,
{
    channel.check_against(config)?;
    let mut scores = Vec::with_capacity(config.users());
    if config.k == 1 {
        let outcome = stackelberg(config, channel, 1)?;
        return Ok((1, vec![score(&outcome)?]));
    }
    let consts = config.model.constants(config.k, config.n)?;
    for leader in 1..=config.k {
        let outcome = stackelberg_with(config, channel, leader, &consts);
        scores.push(score(&outcome)?);
    }
    let mut best = 1u32;
    for i in 1..config.users() {
        if scores[i] > scores[(best - 1) as usize] {
            best = i as u32 + 1;
        }
    }
    Ok((best, scores))
}

/// Brute-force decoding-order choice for a metric over all K! orders
/// (lexicographically first optimum on ties).
pub fn enumerate_order<F>(
    config: &GameConfig,
    channel: &ChannelState,
    score: F,
) -> Result<(DecodingOrder, f64)>
where
    F: Fn(&EquilibriumOutcome) -> Result<f64>,
{
    channel.check_against(config)?;
    let ids: Vec<u32> = (1..=config.k).collect();
    let mut best: Option<(DecodingOrder, f64)> = None;
    for perm in ids.iter().copied().permutations(config.users()) {
        let order = DecodingOrder::new(perm)?;
        let outcome = sic_nash(config, channel, &order)?;
        let s = score(&outcome)?;
        match &best {
            Some((_, current)) if s <= *current => {}
            _ => best = Some((order, s)),
        }
    }
    best.ok_or_else(|| Error::InvalidConfig("no decoding order enumerated".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibria::sud_nash;
    use approx::assert_relative_eq;

    fn setup(k: u32, n: f64, m: u32, h2: Vec<f64>, rates: Vec<f64>) -> (GameConfig, ChannelState) {
        let model = EfficiencyModel::new(m).unwrap();
        let config = GameConfig::new(k, n, model, 1.0, rates).unwrap();
        let channel = ChannelState::new(h2).unwrap();
        (config, channel)
    }

    #[test]
    fn welfare_and_evmn_values() {
        // symmetric flat 2-user SIC instance
        let (config, channel) = setup(2, 1.0, 2, vec![1.0, 1.0], vec![1.0, 1.0]);
        let order = DecodingOrder::new(vec![2, 1]).unwrap();
        let out = sic_nash(&config, &channel, &order).unwrap();
        let w = social_welfare(&out).unwrap();
        let v = evmn(&out).unwrap();
        assert_relative_eq!(w, 0.587754868959753, max_relative = 1e-10);
        assert_relative_eq!(v, 0.250129268206400, max_relative = 1e-10);
        assert!(v <= w);

        // single user: both scores coincide with the lone utility
        let (config, channel) = setup(1, 1.0, 2, vec![1.0], vec![1.0]);
        let out = sud_nash(&config, &channel).unwrap();
        assert_relative_eq!(social_welfare(&out).unwrap(), out.utilities[0]);
        assert_relative_eq!(evmn(&out).unwrap(), out.utilities[0]);
    }

    #[test]
    fn welfare_linear_in_rates() {
        let (config, channel) = setup(2, 4.0, 2, vec![0.7, 1.9], vec![1.0, 1.0]);
        let (config2, _) = setup(2, 4.0, 2, vec![0.7, 1.9], vec![2.0, 2.0]);
        let out = sud_nash(&config, &channel).unwrap();
        let out2 = sud_nash(&config2, &channel).unwrap();
        assert_relative_eq!(
            social_welfare(&out2).unwrap(),
            2.0 * social_welfare(&out).unwrap(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn scores_reject_unsolved_outcomes() {
        let (config, channel) = setup(2, 1.0, 2, vec![1.0, 1.0], vec![1.0, 1.0]);
        let out = sud_nash(&config, &channel).unwrap();
        assert!(social_welfare(&out).is_err());
        assert!(evmn(&out).is_err());
    }

    #[test]
    fn leader_welfare_rule() {
        let (config, channel) = setup(2, 1.0, 2, vec![0.5, 2.0], vec![1.0, 1.0]);
        assert_eq!(best_leader_welfare(&config, &channel).unwrap(), 1);
        // ties go to the lowest index
        let (config, channel) = setup(3, 8.0, 2, vec![1.0, 1.0, 1.0], vec![1.0, 1.0, 1.0]);
        assert_eq!(best_leader_welfare(&config, &channel).unwrap(), 1);
    }

    #[test]
    fn leader_welfare_scale_invariance() {
        let (config, channel) = setup(3, 8.0, 2, vec![0.3, 1.4, 0.9], vec![2.0, 0.5, 1.0]);
        let pick = best_leader_welfare(&config, &channel).unwrap();
        let scaled = ChannelState::new(channel.h2.iter().map(|h| 7.5 * h).collect()).unwrap();
        assert_eq!(best_leader_welfare(&config, &scaled).unwrap(), pick);
    }

    #[test]
    fn leader_welfare_matches_enumeration() {
        let (config, channel) = setup(4, 8.0, 2, vec![0.4, 2.3, 0.9, 1.6], vec![1.0, 0.6, 1.7, 1.1]);
        let rule = best_leader_welfare(&config, &channel).unwrap();
        let (brute, scores) = enumerate_leader(&config, &channel, social_welfare).unwrap();
        assert_eq!(rule, brute, "scores: {scores:?}");
    }

    #[test]
    fn order_welfare_examples() {
        let (config, channel) = setup(3, 8.0, 2, vec![4.0, 1.0, 9.0], vec![1.0, 1.0, 1.0]);
        let order = best_order_welfare(&config, &channel).unwrap();
        assert_eq!(order.as_slice(), &[2, 1, 3]);
        let (brute, _) = enumerate_order(&config, &channel, social_welfare).unwrap();
        assert_eq!(order, brute);

        // unequal rates sort by R |h|^2
        let (config, channel) = setup(2, 8.0, 2, vec![1.0, 4.0], vec![2.0, 1.0]);
        let order = best_order_welfare(&config, &channel).unwrap();
        assert_eq!(order.as_slice(), &[1, 2]);
        let (brute, _) = enumerate_order(&config, &channel, social_welfare).unwrap();
        assert_eq!(order, brute);

        let (config, channel) = setup(1, 1.0, 2, vec![1.0], vec![1.0]);
        assert_eq!(best_order_welfare(&config, &channel).unwrap().as_slice(), &[1]);
    }

    #[test]
    fn order_evmn_examples() {
        let (config, channel) = setup(3, 8.0, 2, vec![4.0, 1.0, 9.0], vec![1.0, 1.0, 1.0]);
        let order = best_order_evmn(&config, &channel).unwrap();
        assert_eq!(order.as_slice(), &[3, 1, 2]);
        let (brute, _) = enumerate_order(&config, &channel, evmn).unwrap();
        assert_eq!(order, brute);
        // equal rates: exact reverse of the welfare order
        let welfare = best_order_welfare(&config, &channel).unwrap();
        assert_eq!(order, welfare.reversed());
    }

    #[test]
    fn evmn_leader_two_user_threshold() {
        let (config, channel) = setup(2, 1.0, 2, vec![0.5, 2.0], vec![1.0, 1.0]);
        let report = best_leader_evmn(&config, &channel).unwrap();
        let (brute, scores) = enumerate_leader(&config, &channel, evmn).unwrap();
        assert_eq!(report.chosen, brute);
        for (a, b) in report.scores.iter().zip(&scores) {
            assert_relative_eq!(a, b, max_relative = 1e-14);
        }
        let two = report.two_user.as_ref().expect("K = 2");
        assert!(two.a < 1.0);
        assert!(two.agrees_with_argmax, "{report:?}");
        assert!(report.condition_agrees, "{report:?}");
        // equal rates: a < 1 means the weak user leads
        assert_eq!(report.chosen, two.weak_user);
    }

    #[test]
    fn evmn_leader_symmetric_tie() {
        let (config, channel) = setup(2, 1.0, 2, vec![1.0, 1.0], vec![1.0, 1.0]);
        let report = best_leader_evmn(&config, &channel).unwrap();
        assert!(report.tie);
        assert_eq!(report.chosen, 1);
        assert_relative_eq!(report.scores[0], report.scores[1], max_relative = 1e-12);
    }

    #[test]
    fn eq41_identity() {
        let (config, channel) = setup(3, 8.0, 10, vec![0.4, 1.1, 2.7], vec![1.5, 0.7, 1.2]);
        let consts = config.model.constants(3, 8.0).unwrap();
        let f_beta = config.model.eval(consts.beta_star).unwrap();
        let f_gamma = config.model.eval(consts.gamma_star).unwrap();
        for i in 1..=3u32 {
            for j in 1..=3u32 {
                if i == j {
                    continue;
                }
                let out_i = stackelberg(&config, &channel, i).unwrap();
                let out_j = stackelberg(&config, &channel, j).unwrap();
                let (vi, vj) = (evmn(&out_i).unwrap(), evmn(&out_j).unwrap());
                let (pi, pj) =
                    (out_i.powers.iter().sum::<f64>(), out_j.powers.iter().sum::<f64>());
                let lhs = vi * pi - vj * pj;
                let rhs = (config.rates[(j - 1) as usize] - config.rates[(i - 1) as usize])
                    * (f_beta - f_gamma);
                assert_relative_eq!(lhs, rhs, max_relative = 1e-10, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn receive_powers_role_constant() {
        // Eq. 25: |h_i|^2 p_i is the same for every user in the same role
        let (config, channel) = setup(4, 8.0, 10, vec![0.3, 0.9, 1.4, 2.6], vec![1.0, 2.0, 0.5, 1.3]);
        let out = stackelberg(&config, &channel, 2).unwrap();
        let receive: Vec<f64> =
            out.powers.iter().zip(&channel.h2).map(|(p, h)| p * h).collect();
        for i in [0usize, 2, 3] {
            for j in [0usize, 2, 3] {
                assert_relative_eq!(receive[i], receive[j], max_relative = 1e-12);
            }
        }
        // leader receive power is role-constant across the choice of leader
        let out2 = stackelberg(&config, &channel, 3).unwrap();
        assert_relative_eq!(
            out.powers[1] * channel.h2[1],
            out2.powers[2] * channel.h2[2],
            max_relative = 1e-12
        );
    }

    #[test]
    fn rho_sequence_values_and_recurrence() {
        let model = EfficiencyModel::new(2).unwrap();
        let rho = rho_sequence(&model, 2, 4.0).unwrap();
        // frozen from mu_sud = 1/(1 - beta*/4) and base = 1 + beta*/4
        assert_relative_eq!(rho[0], 1.10946381791217, max_relative = 1e-10);
        assert_relative_eq!(rho[1], 1.45795505932877, max_relative = 1e-10);
        let beta = model.beta_star().unwrap();
        assert_relative_eq!(rho[1] / rho[0], 1.0 + beta / 4.0, max_relative = 1e-14);
        assert!(rho.iter().all(|r| *r >= 1.0));

        // infeasible SUD rejected
        assert!(matches!(
            rho_sequence(&model, 2, 1.0),
            Err(Error::SudInfeasible { .. })
        ));
    }

    #[test]
    fn rho_worst_boundary_and_monotone() {
        for k in [2u32, 5, 10] {
            assert_relative_eq!(rho_worst(k, 0.0), 1.0);
            let upper = 1.0 / (k as f64 - 1.0);
            let mut prev = 1.0;
            for j in 1..200 {
                let x = upper * 0.995 * j as f64 / 200.0;
                let r = rho_worst(k, x);
                assert!(r >= prev - 1e-12, "rho_K not nondecreasing at x={x}, K={k}");
                prev = r;
            }
        }
    }

    #[test]
    fn se_gain_ratios_exceed_one_and_match_outcomes() {
        let model = EfficiencyModel::new(2).unwrap();
        let (leader, follower) = se_gain_ratios(&model, 2, 4.0).unwrap();
        assert_relative_eq!(leader, 1.00700586078844, max_relative = 1e-10);
        assert_relative_eq!(follower, 1.04346132858799, max_relative = 1e-10);
        assert!(leader >= 1.0 && follower >= 1.0);

        // consistency against full outcomes
        let (config, channel) = setup(2, 4.0, 2, vec![0.8, 1.7], vec![1.0, 1.4]);
        let sud = sud_nash(&config, &channel).unwrap();
        let se = stackelberg(&config, &channel, 1).unwrap();
        assert_relative_eq!(se.utilities[0] / sud.utilities[0], leader, max_relative = 1e-10);
        assert_relative_eq!(se.utilities[1] / sud.utilities[1], follower, max_relative = 1e-10);
    }

    #[test]
    fn leader_follower_ratio_below_one() {
        let model = EfficiencyModel::new(2).unwrap();
        let ratio = se_leader_follower_ratio(&model, 2, 4.0).unwrap();
        assert!(ratio <= 1.0);
        // matches outcome-computed utilities of the same user in both roles
        let (config, channel) = setup(2, 4.0, 2, vec![0.8, 1.7], vec![1.0, 1.4]);
        let as_leader = stackelberg(&config, &channel, 1).unwrap();
        let as_follower = stackelberg(&config, &channel, 2).unwrap();
        assert_relative_eq!(
            as_leader.utilities[0] / as_follower.utilities[0],
            ratio,
            max_relative = 1e-10
        );
    }
}
