//! Energy-efficient power control on a decentralized multiple access
//! channel, treated as a numerical game-theory problem.
//!
//! Users selfishly maximize bits-per-joule `R f(SINR)/p` with the sigmoidal
//! packet-success model `f(x) = (1 - e^{-x})^M`. The crate computes and
//! cross-verifies three equilibria — the plain non-cooperative one under
//! single-user decoding, the Stackelberg one with a designated leader, and
//! the non-cooperative one behind a successive interference canceler — and
//! optimizes the network-level knobs (leader choice, decoding order) under
//! two efficiency measures. A seeded Monte-Carlo harness reproduces the
//! Rayleigh-fading comparisons between the three schemes.
//!
//! Modules:
//! - [`efficiency`]: f, its derivatives, and the SINR targets beta*/gamma*.
//! - [`model`]: game configuration, SINR and utility primitives, spreading.
//! - [`equilibria`]: closed-form solvers with regime classification.
//! - [`oracle`]: best-response dynamics and deviation scans that validate
//!   every closed form independently.
//! - [`metrics`]: social welfare, co-located (EVMN) efficiency, and the
//!   leader/order selections they induce.
//! - [`sim`]: seeded fading sweeps and CSV/JSON emission.

pub mod efficiency;
pub mod equilibria;
pub mod error;
pub mod metrics;
pub mod model;
pub mod oracle;
pub mod sim;

pub use efficiency::{EfficiencyModel, EquilibriumConstants, SeConditionsReport};
pub use equilibria::{
    follower_response, regime_check, sic_nash, stackelberg, stackelberg_with, sud_nash,
    sud_saturated_2user, EquilibriumOutcome, Regime, RegimeReport,
};
pub use error::{Error, Result};
pub use metrics::{
    best_leader_evmn, best_leader_welfare, best_order_evmn, best_order_welfare, enumerate_leader,
    enumerate_order, evmn, rho_sequence, rho_worst, se_gain_ratios, se_leader_follower_ratio,
    social_welfare, EvmnLeaderReport, NetworkScore,
};
pub use model::{
    rcdma_map, scenario_from_json, sinr_sic, sinr_sud, utility, ChannelSpec, ChannelState,
    DecodingOrder, GameConfig, PowerProfile, RcdmaImage,
};
pub use oracle::{
    best_response, br_iterate, leader_power_maximizer, standard_function_checks,
    verify_no_deviation, verify_stackelberg, DeviationReport, IterationTrace, Receiver,
    StackelbergCheck, StandardFunctionReport,
};
pub use sim::{
    run_load_sweep, run_snr_sweep, sample_channels, emit, EmitFormat, ExperimentSpec, OneOrMany,
    OrderPolicy, Policy, SweepKind, SweepResult, SweepRow,
};
