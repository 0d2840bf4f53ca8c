//! Sigmoidal packet-success model f(x) = (1 - e^{-x})^M and the two SINR
//! targets derived from it: beta* (selfish balance point, x f'(x) = f(x))
//! and gamma* (leader's balance point, root of phi).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative bracket width at which the root finders stop.
const ROOT_REL_TOL: f64 = 5e-13;

/// Packet-success efficiency model with block length `M`.
///
/// The function is sigmoidal for M >= 2: f(0) = 0, strictly increasing,
/// f(x) -> 1, convex then concave around a single inflection point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EfficiencyModel {
    m: u32,
}

/// The SINR targets and interference coefficient of a hierarchical game.
///
/// `c = (K-1) beta* / (N (N - (K-2) beta*))`, which reduces to the flat-MAC
/// coefficient `(K-1) beta* / (1 - (K-2) beta*)` at N = 1. The leader target
/// satisfies `0 < gamma* < min(beta*, 1/c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumConstants {
    pub beta_star: f64,
    pub gamma_star: f64,
    pub c: f64,
}

/// Numerical verification of the leader-equilibrium existence conditions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeConditionsReport {
    pub beta_star: f64,
    pub gamma_star: f64,
    pub c: f64,
    /// phi takes a strictly positive value somewhere in (0, 1/c).
    pub phi_positive_somewhere: bool,
    /// Sign changes of the finite-difference phi' on (0, gamma*).
    pub stationary_sign_changes: usize,
    /// Exactly one stationary point of phi on (0, gamma*).
    pub single_stationary_point: bool,
}

impl SeConditionsReport {
    pub fn passed(&self) -> bool {
        self.phi_positive_somewhere && self.single_stationary_point
    }
}

impl EfficiencyModel {
    /// `m` is the block length in symbols; must be >= 1. A positive beta*
    /// only exists for m >= 2.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidConfig("block length M must be >= 1".into()));
        }
        Ok(Self { m })
    }

    pub fn block_length(&self) -> u32 {
        self.m
    }

    /// f(x) = (1 - e^{-x})^M for x >= 0; exact 0 at x = 0.
    pub fn eval(&self, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        Ok(self.eval_unchecked(x))
    }

    #[inline]
    pub(crate) fn eval_unchecked(&self, x: f64) -> f64 {
        // 1 - e^{-x} via expm1 keeps full precision near 0.
        let base = -(-x).exp_m1();
        base.powi(self.m as i32)
    }

    /// Analytic first or second derivative of f.
    pub fn deriv(&self, x: f64, order: u32) -> Result<f64> {
        self.check_domain(x)?;
        let m = self.m as f64;
        let e = (-x).exp();
        let base = -(-x).exp_m1();
        match order {
            1 => Ok(m * e * base.powi(self.m as i32 - 1)),
            2 => {
                if self.m == 1 {
                    Ok(-e)
                } else {
                    Ok(m * e * (m * e - 1.0) * base.powi(self.m as i32 - 2))
                }
            }
            _ => Err(Error::Domain(format!(
                "unsupported derivative order {order} (only 1 and 2)"
            ))),
        }
    }

    /// Unique positive root of x f'(x) = f(x); the SINR every non-leader
    /// tunes to. For this f the equation reduces to (1 + Mx) e^{-x} = 1,
    /// which has a positive solution only for M >= 2.
    pub fn beta_star(&self) -> Result<f64> {
        if self.m < 2 {
            return Err(Error::NoPositiveRoot { m: self.m });
        }
        let m = self.m as f64;
        let residual = |x: f64| (1.0 + m * x) * (-x).exp() - 1.0;
        // residual ~ (M-1)x > 0 near 0 and -> -1 at infinity.
        let lo = 1e-9;
        let mut hi = 1.0;
        while residual(hi) > 0.0 {
            hi *= 2.0;
            if hi > 1e12 {
                return Err(Error::NoSignChange { lo, hi });
            }
        }
        solve_bracketed(residual, lo, hi)
    }

    /// phi(x) = x (1 - c x) f'(x) - f(x), the leader's stationarity defect.
    pub fn phi(&self, c: f64, x: f64) -> Result<f64> {
        self.check_domain(x)?;
        if !(c > 0.0) {
            return Err(Error::Domain(format!("interference coefficient c = {c} must be positive")));
        }
        Ok(self.phi_unchecked(c, x))
    }

    #[inline]
    fn phi_unchecked(&self, c: f64, x: f64) -> f64 {
        let m = self.m as f64;
        let e = (-x).exp();
        let base = -(-x).exp_m1();
        x * (1.0 - c * x) * m * e * base.powi(self.m as i32 - 1) - base.powi(self.m as i32)
    }

    /// phi divided by its positive prefactor (1 - e^{-x})^{M-1}: same sign
    /// for x > 0 but immune to the underflow of x^M near 0 at large M.
    #[inline]
    fn phi_reduced(&self, c: f64, x: f64) -> f64 {
        let m = self.m as f64;
        (1.0 + m * x * (1.0 - c * x)) * (-x).exp() - 1.0
    }

    /// Interference coefficient c for K users at spreading factor N.
    pub fn interference_coefficient(&self, k: u32, n: f64) -> Result<f64> {
        if k < 2 {
            return Err(Error::InvalidConfig(format!("interference coefficient needs K >= 2, got {k}")));
        }
        if !(n > 0.0) {
            return Err(Error::InvalidConfig(format!("spreading factor N = {n} must be positive")));
        }
        let beta = self.beta_star()?;
        let margin = n - (k as f64 - 2.0) * beta;
        if margin <= 0.0 {
            return Err(Error::FollowersIllPosed { k, n, margin });
        }
        Ok((k as f64 - 1.0) * beta / (n * margin))
    }

    /// Unique root of phi on (0, 1/c): the SINR the leader settles for.
    pub fn gamma_star(&self, k: u32, n: f64) -> Result<f64> {
        let c = self.interference_coefficient(k, n)?;
        // phi > 0 just above 0 (~ (M-1)x^M) and phi(1/c) = -f(1/c) < 0.
        let lo = 1e-9;
        let hi = (1.0 / c) * (1.0 - 1e-14);
        if self.phi_reduced(c, lo) <= 0.0 || self.phi_reduced(c, hi) >= 0.0 {
            return Err(Error::NoSignChange { lo, hi });
        }
        solve_bracketed(|x| self.phi_reduced(c, x), lo, hi)
    }

    /// beta*, gamma* and c bundled for a (K, N) game.
    pub fn constants(&self, k: u32, n: f64) -> Result<EquilibriumConstants> {
        Ok(EquilibriumConstants {
            beta_star: self.beta_star()?,
            gamma_star: self.gamma_star(k, n)?,
            c: self.interference_coefficient(k, n)?,
        })
    }

    /// Numerically checks the sufficient conditions behind the leader
    /// equilibrium: phi strictly positive somewhere below 1/c, and a single
    /// stationary point of phi below gamma* (central differences, h = 1e-6).
    pub fn check_se_conditions(&self, k: u32, n: f64) -> Result<SeConditionsReport> {
        let c = self.interference_coefficient(k, n)?;
        let gamma = self.gamma_star(k, n)?;
        let beta = self.beta_star()?;

        let grid = 4096;
        let upper = 1.0 / c;
        let phi_positive_somewhere = (1..grid)
            .map(|j| upper * j as f64 / grid as f64)
            .any(|x| self.phi_reduced(c, x) > 0.0);

        let h = 1e-6;
        let mut sign_changes = 0usize;
        let mut last_sign = 0i8;
        for j in 0..grid {
            let x = gamma * (j as f64 + 0.5) / grid as f64;
            if x <= h {
                continue;
            }
            let slope = (self.phi_unchecked(c, x + h) - self.phi_unchecked(c, x - h)) / (2.0 * h);
            let sign = if slope > 0.0 {
                1
            } else if slope < 0.0 {
                -1
            } else {
                continue; // underflow plateau carries no sign information
            };
            if last_sign != 0 && sign != last_sign {
                sign_changes += 1;
            }
            last_sign = sign;
        }

        Ok(SeConditionsReport {
            beta_star: beta,
            gamma_star: gamma,
            c,
            phi_positive_somewhere,
            stationary_sign_changes: sign_changes,
            single_stationary_point: sign_changes == 1,
        })
    }

    fn check_domain(&self, x: f64) -> Result<()> {
        if x.is_nan() || x < 0.0 {
            Err(Error::Domain(format!("SINR argument x = {x} must be >= 0")))
        } else {
            Ok(())
        }
    }
}

/// Bisection with secant refinement on a sign-changing bracket. Alternates a
/// guaranteed bisection step with a secant proposal (taken when it lands
/// strictly inside), stopping once the bracket is ROOT_REL_TOL wide.
fn solve_bracketed<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    let mut bisect_turn = true;
    for _ in 0..400 {
        if hi - lo <= ROOT_REL_TOL * hi.abs().max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let x = if bisect_turn || fhi == flo {
            mid
        } else {
            let s = hi - fhi * (hi - lo) / (fhi - flo);
            if s > lo && s < hi {
                s
            } else {
                mid
            }
        };
        bisect_turn = !bisect_turn;
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    Ok(0.5 * (lo + hi))
}
