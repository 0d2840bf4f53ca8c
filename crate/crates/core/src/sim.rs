//! Seeded Monte-Carlo experiment runner: Rayleigh-fading channel sampling,
//! SNR sweeps comparing decoding orders, and load sweeps measuring the
//! welfare gain of SIC and of the Stackelberg scheme over the plain
//! non-cooperative baseline.

use std::fs::File;
use std::io::Write as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::efficiency::EfficiencyModel;
use crate::equilibria::{regime_check, sic_nash, stackelberg_with, sud_nash, Regime};
use crate::error::{Error, Result};
use crate::metrics::NetworkScore;
use crate::model::{ChannelState, DecodingOrder, GameConfig};

/// Stream-domain separator between channel draws and policy randomness.
const POLICY_SEED_SALT: u64 = 0x9e37_79b9_7f4a_7c15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    SnrSweep,
    LoadSweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderPolicy {
    Increasing,
    Decreasing,
    Random,
}

impl OrderPolicy {
    fn label(self) -> &'static str {
        match self {
            OrderPolicy::Increasing => "increasing",
            OrderPolicy::Decreasing => "decreasing",
            OrderPolicy::Random => "random",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Policy {
    Sud,
    Sic,
    Stackelberg,
}

/// A scalar-or-list JSON field.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Copy> OneOrMany<T> {
    pub fn to_vec(&self) -> Vec<T> {
        match self {
            OneOrMany::One(x) => vec![*x],
            OneOrMany::Many(xs) => xs.clone(),
        }
    }
}

fn default_realizations() -> u32 {
    2000
}

fn default_snr_grid() -> Vec<f64> {
    (0..=10).map(|j| 2.0 * j as f64).collect()
}

fn default_orders() -> Vec<OrderPolicy> {
    vec![OrderPolicy::Increasing, OrderPolicy::Decreasing, OrderPolicy::Random]
}

fn default_policies() -> Vec<Policy> {
    vec![Policy::Sud, Policy::Sic, Policy::Stackelberg]
}

fn default_alpha_cap() -> f64 {
    0.95
}

/// Declarative description of one Monte-Carlo experiment.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub kind: SweepKind,
    #[serde(rename = "K")]
    pub k: u32,
    #[serde(rename = "N")]
    pub n: OneOrMany<f64>,
    #[serde(rename = "M")]
    pub m: OneOrMany<u32>,
    /// Common transmission rate in bits/s.
    #[serde(default = "default_rate")]
    pub rate: f64,
    /// SNR[dB] = 10 log10(1/sigma2); load sweeps use the first entry.
    #[serde(default = "default_snr_grid")]
    pub snr_db: Vec<f64>,
    #[serde(default = "default_realizations")]
    pub realizations: u32,
    pub seed: u64,
    #[serde(default = "default_orders")]
    pub orders: Vec<OrderPolicy>,
    #[serde(default = "default_policies")]
    pub policies: Vec<Policy>,
    /// Load sweep: explicit user counts; otherwise 2..=floor(cap*alpha_max*N).
    #[serde(default)]
    pub k_grid: Option<Vec<u32>>,
    /// Load sweep: fraction of alpha_max covered by the automatic grid.
    #[serde(default = "default_alpha_cap")]
    pub alpha_cap_fraction: f64,
}

fn default_rate() -> f64 {
    1e5
}

impl ExperimentSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn validate(&self) -> Result<()> {
        if self.realizations == 0 {
            return Err(Error::InvalidConfig("realizations must be >= 1".into()));
        }
        if self.snr_db.is_empty() {
            return Err(Error::InvalidConfig("snr_db grid must not be empty".into()));
        }
        if !(self.rate > 0.0) {
            return Err(Error::InvalidConfig("rate must be positive".into()));
        }
        Ok(())
    }
}

/// One aggregated table cell of a sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    /// SNR in dB for SNR sweeps, spectral efficiency alpha = K/N for load sweeps.
    pub sweep_var: f64,
    pub policy: String,
    pub mean_welfare: f64,
    pub mean_evmn: f64,
    /// Gain of means over the row's baseline, in percent.
    pub gain_pct: f64,
    /// Mean of per-realization gain ratios, in percent (inspection only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gain_pct_mean_ratio: Option<f64>,
}

/// Aggregated sweep output plus provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub realizations: u32,
    pub seed: u64,
    /// (policy, regime) combinations that were skipped, with reasons.
    pub skipped: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    Csv,
    Json,
}

/// Unit-mean exponential channel energies, fully determined by (seed, index):
/// inverse-CDF draws on a counter-based generator with one stream per index.
pub fn sample_channels(k: u32, seed: u64, index: u64) -> ChannelState {
    let mut rng = channel_rng(seed, index);
    let h2 = (0..k)
        .map(|_| {
            let u: f64 = rng.gen();
            (-(-u).ln_1p()).max(f64::MIN_POSITIVE)
        })
        .collect();
    ChannelState { h2 }
}

fn channel_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn policy_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ POLICY_SEED_SALT);
    rng.set_stream(index);
    rng
}

/// Pairwise (tree) summation: order-insensitive aggregation whose error stays
/// far below the 1e-10 relative budget for any realization count used here.
fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

fn mean(xs: &[f64]) -> f64 {
    pairwise_sum(xs) / xs.len() as f64
}

fn sigma2_from_snr_db(snr_db: f64) -> f64 {
    10f64.powf(-snr_db / 10.0)
}

fn order_for(policy: OrderPolicy, channel: &ChannelState, rng_draw: &[u32]) -> DecodingOrder {
    let k = channel.h2.len() as u32;
    match policy {
        OrderPolicy::Increasing => {
            let mut ids: Vec<u32> = (1..=k).collect();
            ids.sort_by(|a, b| {
                channel.h2[(*a - 1) as usize]
                    .partial_cmp(&channel.h2[(*b - 1) as usize])
                    .expect("finite channel energies")
                    .then(a.cmp(b))
            });
            DecodingOrder::new(ids).expect("sorted ids form a permutation")
        }
        OrderPolicy::Decreasing => order_for(OrderPolicy::Increasing, channel, rng_draw).reversed(),
        OrderPolicy::Random => {
            DecodingOrder::new(rng_draw.to_vec()).expect("shuffled ids form a permutation")
        }
    }
}

fn dedup_keep_order<T: PartialEq + Copy>(items: &[T]) -> Vec<T> {
    let mut out = Vec::new();
    for &it in items {
        if !out.contains(&it) {
            out.push(it);
        }
    }
    out
}

/// Decoding-order comparison over an SNR grid (the SIC receiver scenario).
/// For each SNR point and each order policy, averages welfare and EVMN over
/// the fading realizations; SUD and Stackelberg rows are added when requested
/// and feasible, otherwise skipped with a reason.
pub fn run_snr_sweep(spec: &ExperimentSpec) -> Result<SweepResult> {
    spec.validate()?;
    let m_values = spec.m.to_vec();
    let n_values = spec.n.to_vec();
    if n_values.len() != 1 {
        return Err(Error::InvalidConfig("snr sweep expects a single N".into()));
    }
    let n = n_values[0];
    let orders = dedup_keep_order(&spec.orders);
    let policies = dedup_keep_order(&spec.policies);
    let reals = spec.realizations as usize;
    let suffix_m = m_values.len() > 1;

    let mut rows = Vec::new();
    let mut skipped = Vec::new();

    for &m in &m_values {
        let model = EfficiencyModel::new(m)?;
        let config_probe = GameConfig::new(spec.k, n, model, 1.0, vec![spec.rate; spec.k as usize])?;
        let regimes = regime_check(&config_probe)?;
        let label_of = |s: &str| if suffix_m { format!("{s}-m{m}") } else { s.to_string() };
        let mut want_sud = false;
        let mut want_se = false;
        for &p in &policies {
            match p {
                Policy::Sic => {}
                Policy::Sud => {
                    if regimes.sud {
                        want_sud = true;
                    } else {
                        skipped.push(format!(
                            "sud skipped at M={m}: (K-1)beta*/N = {:.4} >= 1",
                            regimes.sud_load
                        ));
                    }
                }
                Policy::Stackelberg => {
                    if regimes.stackelberg {
                        want_se = true;
                    } else {
                        skipped.push(format!("stackelberg skipped at M={m}: equilibrium infeasible"));
                    }
                }
            }
        }
        let se_consts = if want_se && spec.k >= 2 {
            Some(model.constants(spec.k, n)?)
        } else {
            None
        };

        // (seed, index)-derived channels, shared across SNR points and policies
        let draws: Vec<(ChannelState, Vec<u32>, u32)> = (0..reals)
            .map(|t| {
                let channel = sample_channels(spec.k, spec.seed, t as u64);
                let mut rng = policy_rng(spec.seed, t as u64);
                let mut ids: Vec<u32> = (1..=spec.k).collect();
                ids.shuffle(&mut rng);
                let leader = rng.gen_range(1..=spec.k);
                (channel, ids, leader)
            })
            .collect();

        for &snr in &spec.snr_db {
            let sigma2 = sigma2_from_snr_db(snr);
            let config =
                GameConfig::new(spec.k, n, model, sigma2, vec![spec.rate; spec.k as usize])?;

            let sic_requested = policies.contains(&Policy::Sic);
            let mut per_order: Vec<(OrderPolicy, Vec<f64>, Vec<f64>)> = Vec::new();
            if sic_requested {
                for &op in &orders {
                    let mut ws = Vec::with_capacity(reals);
                    let mut vs = Vec::with_capacity(reals);
                    for (channel, shuffled, _) in &draws {
                        let order = order_for(op, channel, shuffled);
                        let out = sic_nash(&config, channel, &order)?;
                        debug_assert_eq!(out.regime, Regime::NonSaturated);
                        let score = NetworkScore::of(&out)?;
                        ws.push(score.welfare);
                        vs.push(score.evmn);
                    }
                    per_order.push((op, ws, vs));
                }
            }
            let random_mean_w = per_order
                .iter()
                .find(|(op, _, _)| *op == OrderPolicy::Random)
                .map(|(_, ws, _)| mean(ws));
            let random_ws = per_order
                .iter()
                .find(|(op, _, _)| *op == OrderPolicy::Random)
                .map(|(_, ws, _)| ws.clone());

            for (op, ws, vs) in &per_order {
                let mw = mean(ws);
                let gain_pct = random_mean_w.map(|r| 100.0 * (mw / r - 1.0)).unwrap_or(0.0);
                let gain_pct_mean_ratio = random_ws.as_ref().map(|rw| {
                    let ratios: Vec<f64> =
                        ws.iter().zip(rw).map(|(w, r)| w / r - 1.0).collect();
                    100.0 * mean(&ratios)
                });
                rows.push(SweepRow {
                    sweep_var: snr,
                    policy: label_of(op.label()),
                    mean_welfare: mw,
                    mean_evmn: mean(vs),
                    gain_pct,
                    gain_pct_mean_ratio,
                });
            }

            if want_sud {
                let mut ws = Vec::with_capacity(reals);
                let mut vs = Vec::with_capacity(reals);
                for (channel, _, _) in &draws {
                    let out = sud_nash(&config, channel)?;
                    let score = NetworkScore::of(&out)?;
                    ws.push(score.welfare);
                    vs.push(score.evmn);
                }
                rows.push(SweepRow {
                    sweep_var: snr,
                    policy: label_of("sud"),
                    mean_welfare: mean(&ws),
                    mean_evmn: mean(&vs),
                    gain_pct: 0.0,
                    gain_pct_mean_ratio: None,
                });
            }
            if let Some(consts) = &se_consts {
                let mut ws = Vec::with_capacity(reals);
                let mut vs = Vec::with_capacity(reals);
                for (channel, _, leader) in &draws {
                    let out = stackelberg_with(&config, channel, *leader, consts);
                    let score = NetworkScore::of(&out)?;
                    ws.push(score.welfare);
                    vs.push(score.evmn);
                }
                rows.push(SweepRow {
                    sweep_var: snr,
                    policy: label_of("stackelberg"),
                    mean_welfare: mean(&ws),
                    mean_evmn: mean(&vs),
                    gain_pct: 0.0,
                    gain_pct_mean_ratio: None,
                });
            }
        }
    }

    Ok(SweepResult { rows, realizations: spec.realizations, seed: spec.seed, skipped })
}

/// Welfare gain of SIC (random decoding order) and of the Stackelberg game
/// (random leader) over the SUD baseline, against spectral efficiency
/// alpha = K/N. Every grid point must lie strictly below the SUD asymptote
/// alpha_max = 1/beta* + 1/N.
pub fn run_load_sweep(spec: &ExperimentSpec) -> Result<SweepResult> {
    spec.validate()?;
    let m_values = spec.m.to_vec();
    let n_values = spec.n.to_vec();
    let snr = spec.snr_db[0];
    let sigma2 = sigma2_from_snr_db(snr);
    let reals = spec.realizations as usize;
    let policies = dedup_keep_order(&spec.policies);
    let suffix_m = m_values.len() > 1;

    let mut rows = Vec::new();
    let skipped = Vec::new();

    for &m in &m_values {
        let model = EfficiencyModel::new(m)?;
        let beta = model.beta_star()?;
        let label_of = |s: &str| if suffix_m { format!("{s}-m{m}") } else { s.to_string() };
        for &n in &n_values {
            let alpha_max = 1.0 / beta + 1.0 / n;
            let k_cells: Vec<u32> = match &spec.k_grid {
                Some(grid) => {
                    for &k in grid {
                        let alpha = k as f64 / n;
                        if alpha >= alpha_max {
                            return Err(Error::InvalidConfig(format!(
                                "grid point K={k} gives alpha={alpha:.4} at or beyond the asymptote alpha_max={alpha_max:.4} (M={m}, N={n})"
                            )));
                        }
                    }
                    grid.clone()
                }
                None => {
                    let cap = spec.alpha_cap_fraction * alpha_max * n;
                    (2..=cap.floor() as u32).collect()
                }
            };

            for &k in &k_cells {
                let alpha = k as f64 / n;
                let config = GameConfig::new(k, n, model, sigma2, vec![spec.rate; k as usize])?;
                let want_se = policies.contains(&Policy::Stackelberg) && k >= 2;
                let se_consts = if want_se { Some(model.constants(k, n)?) } else { None };

                let mut w_sud = Vec::with_capacity(reals);
                let mut v_sud = Vec::with_capacity(reals);
                let mut w_sic = Vec::with_capacity(reals);
                let mut v_sic = Vec::with_capacity(reals);
                let mut w_se = Vec::with_capacity(reals);
                let mut v_se = Vec::with_capacity(reals);

                for t in 0..reals {
                    let channel = sample_channels(k, spec.seed, t as u64);
                    let mut rng = policy_rng(spec.seed, t as u64);
                    let mut ids: Vec<u32> = (1..=k).collect();
                    ids.shuffle(&mut rng);
                    let leader = rng.gen_range(1..=k);

                    let sud = sud_nash(&config, &channel)?;
                    if sud.regime != Regime::NonSaturated {
                        return Err(Error::SudInfeasible { load: (k as f64 - 1.0) * beta / n });
                    }
                    let score = NetworkScore::of(&sud)?;
                    w_sud.push(score.welfare);
                    v_sud.push(score.evmn);

                    if policies.contains(&Policy::Sic) {
                        let order = DecodingOrder::new(ids.clone())?;
                        let out = sic_nash(&config, &channel, &order)?;
                        let score = NetworkScore::of(&out)?;
                        w_sic.push(score.welfare);
                        v_sic.push(score.evmn);
                    }
                    if let Some(consts) = &se_consts {
                        let out = stackelberg_with(&config, &channel, leader, consts);
                        let score = NetworkScore::of(&out)?;
                        w_se.push(score.welfare);
                        v_se.push(score.evmn);
                    }
                }

                let base_w = mean(&w_sud);
                if policies.contains(&Policy::Sud) {
                    rows.push(SweepRow {
                        sweep_var: alpha,
                        policy: label_of("sud"),
                        mean_welfare: base_w,
                        mean_evmn: mean(&v_sud),
                        gain_pct: 0.0,
                        gain_pct_mean_ratio: None,
                    });
                }
                if policies.contains(&Policy::Sic) {
                    let ratios: Vec<f64> =
                        w_sic.iter().zip(&w_sud).map(|(a, b)| a / b - 1.0).collect();
                    rows.push(SweepRow {
                        sweep_var: alpha,
                        policy: label_of("sic"),
                        mean_welfare: mean(&w_sic),
                        mean_evmn: mean(&v_sic),
                        gain_pct: 100.0 * (mean(&w_sic) / base_w - 1.0),
                        gain_pct_mean_ratio: Some(100.0 * mean(&ratios)),
                    });
                }
                if want_se {
                    let ratios: Vec<f64> =
                        w_se.iter().zip(&w_sud).map(|(a, b)| a / b - 1.0).collect();
                    rows.push(SweepRow {
                        sweep_var: alpha,
                        policy: label_of("stackelberg"),
                        mean_welfare: mean(&w_se),
                        mean_evmn: mean(&v_se),
                        gain_pct: 100.0 * (mean(&w_se) / base_w - 1.0),
                        gain_pct_mean_ratio: Some(100.0 * mean(&ratios)),
                    });
                }
            }
        }
    }

    Ok(SweepResult { rows, realizations: spec.realizations, seed: spec.seed, skipped })
}

/// Writes a sweep result as CSV (exact seven-column header) or JSON.
pub fn emit(result: &SweepResult, format: EmitFormat, destination: &Path) -> Result<()> {
    let io_err = |source: std::io::Error| Error::Io {
        path: destination.display().to_string(),
        source,
    };
    match format {
        EmitFormat::Csv => {
            let file = File::create(destination).map_err(io_err)?;
            let mut writer = csv::Writer::from_writer(file);
            writer.write_record([
                "sweep_var",
                "policy",
                "mean_welfare",
                "mean_evmn",
                "gain_pct",
                "realizations",
                "seed",
            ])?;
            for row in &result.rows {
                writer.write_record([
                    row.sweep_var.to_string(),
                    row.policy.clone(),
                    row.mean_welfare.to_string(),
                    row.mean_evmn.to_string(),
                    row.gain_pct.to_string(),
                    result.realizations.to_string(),
                    result.seed.to_string(),
                ])?;
            }
            writer.flush().map_err(io_err)?;
        }
        EmitFormat::Json => {
            let mut file = File::create(destination).map_err(io_err)?;
            serde_json::to_writer_pretty(&mut file, result)?;
            file.write_all(b"\n").map_err(io_err)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn channel_sampling_statistics() {
        let draws = 100_000;
        let mut sum = 0.0;
        let mut below_one = 0usize;
        for t in 0..draws {
            let state = sample_channels(1, 99, t);
            sum += state.h2[0];
            if state.h2[0] < 1.0 {
                below_one += 1;
            }
        }
        let mean = sum / draws as f64;
        assert!((mean - 1.0).abs() < 0.02, "mean {mean}");
        let cdf_at_one = below_one as f64 / draws as f64;
        assert!((cdf_at_one - (1.0 - (-1.0f64).exp())).abs() < 0.01, "cdf {cdf_at_one}");
    }

    #[test]
    fn channel_sampling_deterministic_and_streamed() {
        assert_eq!(sample_channels(5, 7, 3), sample_channels(5, 7, 3));
        assert_ne!(sample_channels(5, 7, 3), sample_channels(5, 7, 4));
        assert_ne!(sample_channels(5, 8, 3), sample_channels(5, 7, 3));
    }

    fn small_snr_spec() -> ExperimentSpec {
        ExperimentSpec {
            kind: SweepKind::SnrSweep,
            k: 4,
            n: OneOrMany::One(1.0),
            m: OneOrMany::One(100),
            rate: 1e5,
            snr_db: vec![0.0, 10.0],
            realizations: 50,
            seed: 2024,
            orders: default_orders(),
            policies: vec![Policy::Sic],
            k_grid: None,
            alpha_cap_fraction: 0.95,
        }
    }

    #[test]
    fn snr_sweep_order_rankings() {
        let result = run_snr_sweep(&small_snr_spec()).unwrap();
        assert!(result.skipped.is_empty());
        for &snr in &[0.0, 10.0] {
            let get = |label: &str| {
                result
                    .rows
                    .iter()
                    .find(|r| r.sweep_var == snr && r.policy == label)
                    .unwrap()
            };
            let (inc, rnd, dec) = (get("increasing"), get("random"), get("decreasing"));
            assert!(inc.mean_welfare >= rnd.mean_welfare);
            assert!(rnd.mean_welfare >= dec.mean_welfare);
            assert!(dec.mean_evmn >= rnd.mean_evmn);
            assert!(rnd.mean_evmn >= inc.mean_evmn);
        }
    }

    #[test]
    fn snr_sweep_single_user_orders_coincide() {
        let mut spec = small_snr_spec();
        spec.k = 1;
        let result = run_snr_sweep(&spec).unwrap();
        for &snr in &[0.0, 10.0] {
            let rows: Vec<_> = result.rows.iter().filter(|r| r.sweep_var == snr).collect();
            assert_eq!(rows.len(), 3);
            for r in &rows {
                assert_eq!(r.mean_welfare, rows[0].mean_welfare);
            }
        }
    }

    #[test]
    fn snr_sweep_skips_infeasible_sud() {
        let mut spec = small_snr_spec();
        spec.k = 10;
        spec.policies = vec![Policy::Sud, Policy::Sic];
        let result = run_snr_sweep(&spec).unwrap();
        assert_eq!(result.skipped.len(), 1);
        assert!(result.skipped[0].contains("sud"));
        assert!(result.rows.iter().all(|r| r.policy != "sud"));
    }

    fn small_load_spec() -> ExperimentSpec {
        ExperimentSpec {
            kind: SweepKind::LoadSweep,
            k: 0,
            n: OneOrMany::One(8.0),
            m: OneOrMany::One(2),
            rate: 1e5,
            snr_db: vec![6.0],
            realizations: 60,
            seed: 11,
            orders: default_orders(),
            policies: default_policies(),
            k_grid: None,
            alpha_cap_fraction: 0.95,
        }
    }

    #[test]
    fn load_sweep_gains_positive_and_increasing() {
        let result = run_load_sweep(&small_load_spec()).unwrap();
        for policy in ["sic", "stackelberg"] {
            let gains: Vec<f64> = result
                .rows
                .iter()
                .filter(|r| r.policy == policy)
                .map(|r| r.gain_pct)
                .collect();
            assert!(!gains.is_empty());
            assert!(gains.iter().all(|g| *g > 0.0), "{policy}: {gains:?}");
            for w in gains.windows(2) {
                assert!(w[1] > w[0], "{policy} gain not increasing: {gains:?}");
            }
        }
    }

    #[test]
    fn load_sweep_rejects_grid_beyond_asymptote() {
        let mut spec = small_load_spec();
        spec.k_grid = Some(vec![2, 60]);
        let err = run_load_sweep(&spec).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("alpha_max"), "{text}");
    }

    #[test]
    fn emit_csv_roundtrip_and_determinism() {
        let spec = small_load_spec();
        let result = run_load_sweep(&spec).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path_a = dir.path().join("a.csv");
        let path_b = dir.path().join("b.csv");
        emit(&result, EmitFormat::Csv, &path_a).unwrap();
        let result_again = run_load_sweep(&spec).unwrap();
        emit(&result_again, EmitFormat::Csv, &path_b).unwrap();
        let bytes_a = std::fs::read(&path_a).unwrap();
        let bytes_b = std::fs::read(&path_b).unwrap();
        assert_eq!(bytes_a, bytes_b);

        let mut reader = csv::Reader::from_path(&path_a).unwrap();
        assert_eq!(
            reader.headers().unwrap(),
            &csv::StringRecord::from(vec![
                "sweep_var",
                "policy",
                "mean_welfare",
                "mean_evmn",
                "gain_pct",
                "realizations",
                "seed"
            ])
        );
        for (record, row) in reader.records().zip(&result.rows) {
            let record = record.unwrap();
            let parsed: f64 = record[2].parse().unwrap();
            assert_eq!(parsed, row.mean_welfare, "shortest-float round trip");
        }
    }

    #[test]
    fn emit_empty_result_header_only() {
        let result =
            SweepResult { rows: vec![], realizations: 10, seed: 1, skipped: vec![] };
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.csv");
        emit(&result, EmitFormat::Csv, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("sweep_var,policy"));
    }

    #[test]
    fn spec_parses_scalar_or_list() {
        let text = r#"{
            "kind": "load-sweep", "K": 0, "N": 64, "M": [2, 100],
            "seed": 42, "snr_db": [6.0], "realizations": 100
        }"#;
        let spec = ExperimentSpec::from_json(text).unwrap();
        assert_eq!(spec.m.to_vec(), vec![2, 100]);
        assert_eq!(spec.n.to_vec(), vec![64.0]);
        assert_eq!(spec.rate, 1e5);
        assert_eq!(spec.orders.len(), 3);
    }
}
