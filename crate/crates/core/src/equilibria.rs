//! Closed-form solvers for the three equilibria, with explicit regime
//! classification: non-cooperative with single-user decoding, Stackelberg
//! with one leader, and non-cooperative with successive interference
//! cancellation.

use serde::{Deserialize, Serialize};

use crate::efficiency::EquilibriumConstants;
use crate::error::{Error, Result};
use crate::model::{sinr_sic, sinr_sud, utility, ChannelState, DecodingOrder, GameConfig, PowerProfile};

/// Whether a non-saturated equilibrium was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// No power cap binds; SINR targets are met exactly.
    NonSaturated,
    /// Some cap binds; the equilibrium is not solved here.
    Saturated,
    /// The required powers diverge; no equilibrium with these parameters.
    Nonexistent,
}

/// Equilibrium powers and everything derived from them. Outside the
/// non-saturated regime the vectors are empty: powers are classified, never
/// fabricated.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EquilibriumOutcome {
    pub regime: Regime,
    pub powers: Vec<f64>,
    pub sinrs: Vec<f64>,
    pub utilities: Vec<f64>,
    pub throughputs: Vec<f64>,
    /// Multiplicative interference penalty per user: the factor by which the
    /// power exceeds the interference-free target power.
    pub penalty: Vec<f64>,
}

impl EquilibriumOutcome {
    fn unsolved(regime: Regime) -> Self {
        Self {
            regime,
            powers: Vec::new(),
            sinrs: Vec::new(),
            utilities: Vec::new(),
            throughputs: Vec::new(),
            penalty: Vec::new(),
        }
    }

    fn from_powers<S>(config: &GameConfig, powers: Vec<f64>, penalty: Vec<f64>, sinr_of: S) -> Self
    where
        S: Fn(&PowerProfile, u32) -> f64,
    {
        let profile = PowerProfile { p: powers };
        if !profile.within_caps(config) {
            return Self::unsolved(Regime::Saturated);
        }
        let sinrs: Vec<f64> = (1..=config.k).map(|u| sinr_of(&profile, u)).collect();
        let utilities: Vec<f64> = (0..config.users())
            .map(|i| utility(config.rates[i], &config.model, sinrs[i], profile.p[i]))
            .collect();
        let throughputs: Vec<f64> = (0..config.users())
            .map(|i| config.rates[i] * config.model.eval_unchecked(sinrs[i]))
            .collect();
        Self {
            regime: Regime::NonSaturated,
            powers: profile.p,
            sinrs,
            utilities,
            throughputs,
            penalty,
        }
    }

    pub fn power_profile(&self) -> PowerProfile {
        PowerProfile { p: self.powers.clone() }
    }
}

/// Which non-saturated equilibria the parameters admit, before looking at a
/// channel draw.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegimeReport {
    /// (K-1) beta* / N, the SUD interference load; feasible below 1.
    pub sud_load: f64,
    pub sud: bool,
    /// SIC admits a non-saturated equilibrium for any load.
    pub sic: bool,
    pub stackelberg: bool,
    /// Spectral efficiency K/N.
    pub alpha: f64,
    /// Load at which SUD powers diverge: 1/beta* + 1/N.
    pub alpha_max: f64,
}

/// Non-cooperative equilibrium under single-user decoding. Every user tunes
/// his SINR to beta*; the common penalty is 1/(1 - (K-1) beta*/N).
pub fn sud_nash(config: &GameConfig, channel: &ChannelState) -> Result<EquilibriumOutcome> {
    channel.check_against(config)?;
    let beta = config.model.beta_star()?;
    let denom = 1.0 - (config.k as f64 - 1.0) * beta / config.n;
    if denom <= 0.0 {
        return Ok(EquilibriumOutcome::unsolved(Regime::Nonexistent));
    }
    let mu = 1.0 / denom;
    let powers: Vec<f64> = channel.h2.iter().map(|h2| config.sigma2 / h2 * beta * mu).collect();
    let penalty = vec![mu; config.users()];
    Ok(EquilibriumOutcome::from_powers(config, powers, penalty, |p, u| {
        sinr_sud(config, channel, p, u)
    }))
}

/// The documented 2-user saturated case on the plain MAC: one user pinned at
/// his cap, the other still driving his own SINR to beta*.
pub fn sud_saturated_2user(
    config: &GameConfig,
    channel: &ChannelState,
    saturated_user: u32,
) -> Result<PowerProfile> {
    channel.check_against(config)?;
    if config.k != 2 {
        return Err(Error::InvalidConfig(format!(
            "saturated closed form is only stated for K = 2, got K = {}",
            config.k
        )));
    }
    if config.n != 1.0 {
        return Err(Error::InvalidConfig("saturated closed form requires N = 1".into()));
    }
    if saturated_user == 0 || saturated_user > 2 {
        return Err(Error::InvalidConfig(format!("no user {saturated_user} in a 2-user game")));
    }
    let sat = (saturated_user - 1) as usize;
    let other = 1 - sat;
    let cap = config.pmax[sat];
    if !cap.is_finite() {
        return Err(Error::InvalidConfig("saturated user needs a finite power cap".into()));
    }
    let beta = config.model.beta_star()?;
    let mut p = vec![0.0; 2];
    p[sat] = cap;
    p[other] = beta * (config.sigma2 + channel.h2[sat] * cap) / channel.h2[other];
    PowerProfile::new(p)
}

/// Followers' joint best response to a committed leader power: each follower
/// hits beta* given the leader's receive power lifted into the noise floor.
/// The returned profile carries the leader's power at his own index.
pub fn follower_response(
    config: &GameConfig,
    channel: &ChannelState,
    leader: u32,
    p_leader: f64,
) -> Result<PowerProfile> {
    channel.check_against(config)?;
    check_user(config, leader)?;
    if !(p_leader >= 0.0) {
        return Err(Error::InvalidConfig(format!("leader power {p_leader} must be nonnegative")));
    }
    let beta = config.model.beta_star()?;
    let margin = config.n - (config.k as f64 - 2.0) * beta;
    if config.k >= 2 && margin <= 0.0 {
        return Err(Error::FollowersIllPosed { k: config.k, n: config.n, margin });
    }
    let lead = (leader - 1) as usize;
    let q_leader = p_leader * channel.h2[lead];
    // common follower receive power: beta* (sigma2 + q_L/N) / (1 - (K-2) beta*/N)
    let q_follower =
        beta * (config.sigma2 + q_leader / config.n) / (1.0 - (config.k as f64 - 2.0) * beta / config.n);
    let p = (0..config.users())
        .map(|j| if j == lead { p_leader } else { q_follower / channel.h2[j] })
        .collect();
    PowerProfile::new(p)
}

/// Stackelberg equilibrium with one designated leader: the leader commits to
/// the gamma* SINR, every follower plays beta* against it.
pub fn stackelberg(config: &GameConfig, channel: &ChannelState, leader: u32) -> Result<EquilibriumOutcome> {
    channel.check_against(config)?;
    check_user(config, leader)?;
    if config.k == 1 {
        // no followers: the leader's problem degenerates to the single-user optimum
        let beta = config.model.beta_star()?;
        let powers = vec![config.sigma2 / channel.h2[0] * beta];
        return Ok(EquilibriumOutcome::from_powers(config, powers, vec![1.0], |p, u| {
            sinr_sud(config, channel, p, u)
        }));
    }
    let consts = config.model.constants(config.k, config.n)?;
    Ok(stackelberg_with(config, channel, leader, &consts))
}

/// Same as [`stackelberg`] but reusing precomputed constants; sweep inner
/// loops hoist the root finding out this way.
pub fn stackelberg_with(
    config: &GameConfig,
    channel: &ChannelState,
    leader: u32,
    consts: &EquilibriumConstants,
) -> EquilibriumOutcome {
    let (k, n) = (config.k as f64, config.n);
    let beta = consts.beta_star;
    let gamma = consts.gamma_star;
    let denom = n - (k - 2.0) * beta - (k - 1.0) * gamma * beta / n;
    if denom <= 0.0 {
        return EquilibriumOutcome::unsolved(Regime::Nonexistent);
    }
    let lead = (leader - 1) as usize;
    let mu_leader = (n + beta) / denom;
    let mu_follower = (n + gamma) / denom;
    let mut powers = Vec::with_capacity(config.users());
    let mut penalty = Vec::with_capacity(config.users());
    for j in 0..config.users() {
        let (target, mu) = if j == lead { (gamma, mu_leader) } else { (beta, mu_follower) };
        powers.push(config.sigma2 / channel.h2[j] * target * mu);
        penalty.push(mu);
    }
    EquilibriumOutcome::from_powers(config, powers, penalty, |p, u| sinr_sud(config, channel, p, u))
}

/// Non-cooperative equilibrium at the output of a successive interference
/// canceler: everyone targets beta*, with the geometric penalty
/// (1 + beta*/N)^e, e the user's penalty exponent under `order`.
pub fn sic_nash(
    config: &GameConfig,
    channel: &ChannelState,
    order: &DecodingOrder,
) -> Result<EquilibriumOutcome> {
    channel.check_against(config)?;
    if order.users() != config.users() {
        return Err(Error::InvalidConfig(format!(
            "decoding order covers {} users, expected K = {}",
            order.users(),
            config.k
        )));
    }
    let beta = config.model.beta_star()?;
    let base = 1.0 + beta / config.n;
    let mut powers = vec![0.0; config.users()];
    let mut penalty = vec![0.0; config.users()];
    for u in 1..=config.k {
        let e = order.penalty_exponent(u).expect("validated permutation");
        let i = (u - 1) as usize;
        let mu = base.powi(e as i32);
        powers[i] = config.sigma2 / channel.h2[i] * beta * mu;
        penalty[i] = mu;
    }
    Ok(EquilibriumOutcome::from_powers(config, powers, penalty, |p, u| {
        sinr_sic(config, channel, p, order, u)
    }))
}

/// Which receivers admit a non-saturated equilibrium for these parameters.
pub fn regime_check(config: &GameConfig) -> Result<RegimeReport> {
    let beta = config.model.beta_star()?;
    let (k, n) = (config.k as f64, config.n);
    let sud_load = (k - 1.0) * beta / n;
    let stackelberg = if config.k == 1 {
        true
    } else {
        match config.model.constants(config.k, config.n) {
            Ok(consts) => {
                n - (k - 2.0) * beta - (k - 1.0) * consts.gamma_star * beta / n > 0.0
            }
            Err(_) => false,
        }
    };
    Ok(RegimeReport {
        sud_load,
        sud: sud_load < 1.0,
        sic: true,
        stackelberg,
        alpha: k / n,
        alpha_max: 1.0 / beta + 1.0 / n,
    })
}

fn check_user(config: &GameConfig, user: u32) -> Result<()> {
    if user == 0 || user > config.k {
        return Err(Error::InvalidConfig(format!("user {user} out of range 1..={}", config.k)));
    }
    Ok(())
}
