//! Game data model: configuration, channel state, decoding orders, power
//! profiles, and the SINR/utility primitives for both receiver types.

use serde::{Deserialize, Serialize};

use crate::efficiency::EfficiencyModel;
use crate::error::{Error, Result};

/// Static description of one power-control game.
///
/// Powers are in watts, rates in bits/s, utilities in bits/joule; SINRs are
/// dimensionless. `n = 1` is the plain multiple access channel; larger `n`
/// divides cross-interference by the spreading factor.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameConfig {
    pub k: u32,
    pub n: f64,
    pub model: EfficiencyModel,
    pub sigma2: f64,
    pub rates: Vec<f64>,
    pub pmax: Vec<f64>,
}

impl GameConfig {
    /// Uncapped game (`pmax = +inf`), the operating regime assumed throughout.
    pub fn new(k: u32, n: f64, model: EfficiencyModel, sigma2: f64, rates: Vec<f64>) -> Result<Self> {
        let pmax = vec![f64::INFINITY; k as usize];
        Self::with_pmax(k, n, model, sigma2, rates, pmax)
    }

    pub fn with_pmax(
        k: u32,
        n: f64,
        model: EfficiencyModel,
        sigma2: f64,
        rates: Vec<f64>,
        pmax: Vec<f64>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidConfig("K must be >= 1".into()));
        }
        if !(n > 0.0) {
            return Err(Error::InvalidConfig(format!("spreading factor N = {n} must be positive")));
        }
        if !(sigma2 > 0.0) {
            return Err(Error::InvalidConfig(format!("noise power sigma2 = {sigma2} must be positive")));
        }
        if rates.len() != k as usize {
            return Err(Error::InvalidConfig(format!(
                "rates has {} entries, expected K = {k}",
                rates.len()
            )));
        }
        if pmax.len() != k as usize {
            return Err(Error::InvalidConfig(format!(
                "pmax has {} entries, expected K = {k}",
                pmax.len()
            )));
        }
        if rates.iter().any(|r| !(*r > 0.0)) {
            return Err(Error::InvalidConfig("all rates must be positive".into()));
        }
        if pmax.iter().any(|p| !(*p > 0.0)) {
            return Err(Error::InvalidConfig("all power caps must be positive (or +inf)".into()));
        }
        Ok(Self { k, n, model, sigma2, rates, pmax })
    }

    pub fn users(&self) -> usize {
        self.k as usize
    }
}

/// Per-user channel energies |h_i|^2 for one fading block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelState {
    pub h2: Vec<f64>,
}

impl ChannelState {
    pub fn new(h2: Vec<f64>) -> Result<Self> {
        if h2.is_empty() || h2.iter().any(|h| !(*h > 0.0)) {
            return Err(Error::InvalidConfig("channel energies must be strictly positive".into()));
        }
        Ok(Self { h2 })
    }

    pub fn check_against(&self, config: &GameConfig) -> Result<()> {
        if self.h2.len() != config.users() {
            return Err(Error::InvalidConfig(format!(
                "channel has {} entries, expected K = {}",
                self.h2.len(),
                config.k
            )));
        }
        Ok(())
    }
}

/// Decoding order for successive interference cancellation.
///
/// `order[0]` is decoded first and therefore sees every other user as
/// interference; the last entry is decoded interference-free. User ids are
/// 1-based. Internally, the user at position r (1-based) carries penalty
/// exponent K - r: largest for the first-decoded user, zero for the last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodingOrder {
    order: Vec<u32>,
}

impl DecodingOrder {
    /// Validates that `order` is a permutation of 1..=K.
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let k = order.len();
        let mut seen = vec![false; k];
        for &u in &order {
            if u == 0 || u as usize > k || seen[u as usize - 1] {
                return Err(Error::InvalidConfig(format!(
                    "decoding order {order:?} is not a permutation of 1..={k}"
                )));
            }
            seen[u as usize - 1] = true;
        }
        Ok(Self { order })
    }

    /// Identity order: user 1 decoded first.
    pub fn identity(k: u32) -> Self {
        Self { order: (1..=k).collect() }
    }

    pub fn users(&self) -> usize {
        self.order.len()
    }

    /// 1-based user ids, first decoded first.
    pub fn as_slice(&self) -> &[u32] {
        &self.order
    }

    /// 0-based position of `user` in the decode sequence.
    pub fn position(&self, user: u32) -> Option<usize> {
        self.order.iter().position(|&u| u == user)
    }

    /// Penalty exponent of `user`: K - 1 for the first decoded, 0 for the last.
    pub fn penalty_exponent(&self, user: u32) -> Option<u32> {
        self.position(user).map(|r| (self.users() - 1 - r) as u32)
    }

    /// Users decoded strictly after `position`, i.e. the residual interferers
    /// seen when the user at `position` is decoded.
    pub fn decoded_after(&self, position: usize) -> &[u32] {
        &self.order[position + 1..]
    }

    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        Self { order }
    }
}

/// Transmit powers in watts, indexed by user (0-based).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerProfile {
    pub p: Vec<f64>,
}

impl PowerProfile {
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.iter().any(|x| !(*x >= 0.0)) {
            return Err(Error::InvalidConfig("powers must be nonnegative".into()));
        }
        Ok(Self { p })
    }

    pub fn zeros(k: u32) -> Self {
        Self { p: vec![0.0; k as usize] }
    }

    /// True when every power respects its cap.
    pub fn within_caps(&self, config: &GameConfig) -> bool {
        self.p.iter().zip(&config.pmax).all(|(p, cap)| p <= cap)
    }
}

/// SINR under single-user decoding: every other user is noise, with
/// cross-interference divided by the spreading factor.
pub fn sinr_sud(config: &GameConfig, channel: &ChannelState, profile: &PowerProfile, user: u32) -> f64 {
    let i = (user - 1) as usize;
    let mut interference = 0.0;
    for j in 0..config.users() {
        if j != i {
            interference += profile.p[j] * channel.h2[j];
        }
    }
    profile.p[i] * channel.h2[i] / (interference / config.n + config.sigma2)
}

/// SINR at the output of the successive interference canceler: users decoded
/// earlier have been subtracted, so only users decoded after `user` remain.
pub fn sinr_sic(
    config: &GameConfig,
    channel: &ChannelState,
    profile: &PowerProfile,
    order: &DecodingOrder,
    user: u32,
) -> f64 {
    let position = order
        .position(user)
        .unwrap_or_else(|| panic!("user {user} not in decoding order"));
    let i = (user - 1) as usize;
    let mut interference = 0.0;
    for &v in order.decoded_after(position) {
        let j = (v - 1) as usize;
        interference += profile.p[j] * channel.h2[j];
    }
    profile.p[i] * channel.h2[i] / (interference / config.n + config.sigma2)
}

/// Energy efficiency R f(SINR)/p in bits/joule; 0 at p = 0 by definition.
pub fn utility(rate: f64, model: &EfficiencyModel, sinr: f64, power: f64) -> f64 {
    if power == 0.0 {
        return 0.0;
    }
    rate * model.eval_unchecked(sinr) / power
}

/// A game and power profile rewritten in spread (RCDMA) variables:
/// powers and rates scaled by N, despread SINRs N times larger, utilities
/// unchanged once the despread SINR is referred back to the base model.
#[derive(Debug, Clone)]
pub struct RcdmaImage {
    pub config: GameConfig,
    pub profile: PowerProfile,
    /// Spreading factor applied by the map; despread SINRs divide by this
    /// before entering the packet-success model.
    pub sinr_scale: f64,
}

impl RcdmaImage {
    /// Despread SINR of `user` in the spread system.
    pub fn sinr(&self, channel: &ChannelState, user: u32) -> f64 {
        sinr_sud(&self.config, channel, &self.profile, user)
    }

    /// Utility of `user` in the spread system; equals the flat-game utility.
    pub fn utility(&self, channel: &ChannelState, user: u32) -> f64 {
        let i = (user - 1) as usize;
        let sinr = self.sinr(channel, user);
        utility(
            self.config.rates[i],
            &self.config.model,
            sinr / self.sinr_scale,
            self.profile.p[i],
        )
    }

    /// Throughput of `user` in the spread system: N times the flat-game one.
    pub fn throughput(&self, channel: &ChannelState, user: u32) -> f64 {
        let i = (user - 1) as usize;
        let sinr = self.sinr(channel, user);
        self.config.rates[i] * self.config.model.eval_unchecked(sinr / self.sinr_scale)
    }
}

/// Change of variables between the flat game (config taken at N = 1) and its
/// spread representation at the config's N: p~ = Np, R~ = NR, SINR~ = N SINR.
/// At N = 1 the map is the identity.
pub fn rcdma_map(config: &GameConfig, profile: &PowerProfile) -> Result<RcdmaImage> {
    if profile.p.len() != config.users() {
        return Err(Error::InvalidConfig(format!(
            "profile has {} entries, expected K = {}",
            profile.p.len(),
            config.k
        )));
    }
    let n = config.n;
    let mut spread = config.clone();
    spread.rates = config.rates.iter().map(|r| n * r).collect();
    spread.pmax = config.pmax.iter().map(|p| n * p).collect();
    let scaled = PowerProfile::new(profile.p.iter().map(|p| n * p).collect())?;
    Ok(RcdmaImage { config: spread, profile: scaled, sinr_scale: n })
}

/// How the channel of a scenario is specified.
#[derive(Debug, Clone, PartialEq)]
pub enum ChannelSpec {
    /// Channel energies given explicitly.
    Fixed(ChannelState),
    /// Drawn from unit-mean Rayleigh fading by the harness.
    Rayleigh,
}

#[derive(Debug, Deserialize)]
struct ScenarioFile {
    #[serde(rename = "K")]
    k: u32,
    #[serde(rename = "N", default = "default_n")]
    n: f64,
    #[serde(rename = "M")]
    m: u32,
    sigma2: f64,
    rates: Vec<f64>,
    #[serde(default)]
    pmax: Option<Vec<Option<f64>>>,
    #[serde(default)]
    h2: Option<Vec<f64>>,
    #[serde(default)]
    channel: Option<String>,
}

fn default_n() -> f64 {
    1.0
}

/// Parses a scenario document with keys K, N, M, sigma2, rates, pmax and
/// either explicit h2 or `"channel": "rayleigh"`. Missing pmax entries (or a
/// missing array) default to +inf.
pub fn scenario_from_json(text: &str) -> Result<(GameConfig, ChannelSpec)> {
    let raw: ScenarioFile = serde_json::from_str(text)?;
    let pmax = match raw.pmax {
        None => vec![f64::INFINITY; raw.k as usize],
        Some(entries) => entries
            .into_iter()
            .map(|e| e.unwrap_or(f64::INFINITY))
            .collect(),
    };
    let model = EfficiencyModel::new(raw.m)?;
    let config = GameConfig::with_pmax(raw.k, raw.n, model, raw.sigma2, raw.rates, pmax)?;
    let channel = match (raw.h2, raw.channel.as_deref()) {
        (Some(h2), None) => {
            let state = ChannelState::new(h2)?;
            state.check_against(&config)?;
            ChannelSpec::Fixed(state)
        }
        (None, Some("rayleigh")) => ChannelSpec::Rayleigh,
        (None, None) => {
            return Err(Error::InvalidConfig(
                "scenario needs either h2 or \"channel\": \"rayleigh\"".into(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(Error::InvalidConfig(
                "scenario has both h2 and a channel directive".into(),
            ))
        }
        (None, Some(other)) => {
            return Err(Error::InvalidConfig(format!("unknown channel directive {other:?}")))
        }
    };
    Ok((config, channel))
}
