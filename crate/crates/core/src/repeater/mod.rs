//! Secret key rates of repeater chains with (optionally encoded) memories.

pub mod dephasing;
pub mod key;
pub mod link;
pub mod mc;
pub mod waiting;

use std::sync::Arc;

use crate::channel::{
    effective_channel_1q, effective_channel_2q, logical_alpha, worst_case_mu, LogicalChannel1Q,
    LogicalChannel2Q, NoiseKind,
};
use crate::code::StabilizerCode;
use crate::decoder::{build_table, Strategy};
use crate::error::{Error, Result};

pub use dephasing::{dephasing_expectation, Estimate, Scheme};
pub use key::{binary_entropy, qbers, secret_key_fraction};
pub use link::{alpha_per_step, link_success_prob, time_unit};
pub use waiting::{avg_waiting_cutoff2, avg_waiting_parallel};

/// Logical error maps of a memory encoded in a stabilizer code.
#[derive(Clone, Debug)]
pub struct EncodedMemory {
    name: String,
    strategy: Strategy,
    dephasing: LogicalChannel1Q,
    two_block: LogicalChannel2Q,
}

impl EncodedMemory {
    /// Memory dephasing is decoded with `strategy`; depolarization from
    /// imperfect states and Bell measurements uses minimal-weight decoding.
    pub fn new(code: &StabilizerCode, strategy: Strategy) -> Result<Self> {
        let dephasing =
            effective_channel_1q(code, &build_table(code, strategy)?, NoiseKind::Dephasing1Q)?;
        if !dephasing.is_pure_dephasing() {
            return Err(Error::ChannelType(format!(
                "{} with {strategy} decoding turns dephasing into X/Y logical errors",
                code.name()
            )));
        }
        let two_block = effective_channel_2q(code, &build_table(code, Strategy::MinWeightPauli)?)?;
        Ok(Self {
            name: code.name().to_string(),
            strategy,
            dephasing,
            two_block,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn strategy(&self) -> Strategy {
        self.strategy
    }
    pub fn dephasing(&self) -> &LogicalChannel1Q {
        &self.dephasing
    }
    pub fn two_block(&self) -> &LogicalChannel2Q {
        &self.two_block
    }

    pub fn alpha(&self, alpha_phys: f64) -> Result<f64> {
        logical_alpha(&self.dephasing, alpha_phys)
    }

    /// Effective depolarization parameter for a physical one.
    pub fn mu(&self, mu_phys: f64) -> f64 {
        worst_case_mu(&self.two_block, 1.0 - mu_phys)
    }
}

#[derive(Clone, Debug)]
pub struct RepeaterParams {
    pub segments: usize,
    pub length_km: f64,
    pub p0: f64,
    pub t_c: f64,
    pub mu: f64,
    pub mu0: f64,
    pub f0: f64,
    pub tau_clock: f64,
    pub cutoff: Option<u32>,
    pub encoding: Option<Arc<EncodedMemory>>,
    pub scheme: Scheme,
}

impl Default for RepeaterParams {
    fn default() -> Self {
        Self {
            segments: 2,
            length_km: 100.0,
            p0: 1.0,
            t_c: 1.0,
            mu: 1.0,
            mu0: 1.0,
            f0: 1.0,
            tau_clock: link::DEFAULT_CLOCK_S,
            cutoff: None,
            encoding: None,
            scheme: Scheme::Sequential,
        }
    }
}

impl RepeaterParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Domain(msg));
        if self.segments == 0 {
            return bad("segment count must be positive".into());
        }
        if !(self.length_km >= 0.0) {
            return bad(format!("length {} km", self.length_km));
        }
        if !(self.p0 > 0.0 && self.p0 <= 1.0) {
            return bad(format!("p0 = {} outside (0, 1]", self.p0));
        }
        if !(self.t_c > 0.0) {
            return bad(format!("coherence time {} s", self.t_c));
        }
        for (name, v) in [("mu", self.mu), ("mu0", self.mu0)] {
            if !(v > 0.0 && v <= 1.0) {
                return bad(format!("{name} = {v} outside (0, 1]"));
            }
        }
        if !(self.f0 > 0.5 && self.f0 <= 1.0) {
            return bad(format!("F0 = {} outside (1/2, 1]", self.f0));
        }
        if !(self.tau_clock >= 0.0) {
            return bad(format!("clock {} s", self.tau_clock));
        }
        if self.cutoff == Some(0) {
            return bad("cutoff must be at least 1".into());
        }
        if self.cutoff.is_some() && self.segments != 2 {
            return Err(Error::Unsupported(
                "cutoff is only defined for two segments".into(),
            ));
        }
        if self.scheme == Scheme::Exact2 && self.segments != 2 {
            return Err(Error::Unsupported(
                "exact2 scheme requires two segments".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RateResult {
    pub length_km: f64,
    pub l0_km: f64,
    pub p_link: f64,
    pub tau_seconds: f64,
    pub alpha: f64,
    pub mu_eff: f64,
    pub mu0_eff: f64,
    pub avg_wait_steps: f64,
    pub dephasing_factor: f64,
    pub e_z_bar: f64,
    pub e_x_bar: f64,
    pub skf: f64,
    pub raw_rate_hz: f64,
    pub skr_hz: f64,
    pub mc_standard_error: Option<f64>,
}

pub fn secret_key_rate(params: &RepeaterParams) -> Result<RateResult> {
    params.validate()?;
    let n = params.segments;
    let l0 = params.length_km / n as f64;
    let p = link_success_prob(l0, params.p0);
    let tau = time_unit(l0, params.tau_clock);
    let alpha_phys = tau / params.t_c;
    let (alpha, mu_eff, mu0_eff) = match &params.encoding {
        Some(enc) => (
            enc.alpha(alpha_phys)?,
            enc.mu(params.mu),
            enc.mu(params.mu0),
        ),
        None => (alpha_phys, params.mu, params.mu0),
    };
    let deph = dephasing_expectation(params.scheme, n, p, alpha, params.cutoff)?;
    let wait = match params.cutoff {
        Some(m) => avg_waiting_cutoff2(p, m)?,
        None => avg_waiting_parallel(n, p)?,
    };
    let (e_z, e_x) = qbers(n, mu_eff.max(0.0), mu0_eff.max(0.0), params.f0, deph.value);
    let skf = secret_key_fraction(e_x, e_z);
    let raw = 1.0 / (wait * tau);
    Ok(RateResult {
        length_km: params.length_km,
        l0_km: l0,
        p_link: p,
        tau_seconds: tau,
        alpha,
        mu_eff,
        mu0_eff,
        avg_wait_steps: wait,
        dephasing_factor: deph.value,
        e_z_bar: e_z,
        e_x_bar: e_x,
        skf,
        raw_rate_hz: raw,
        skr_hz: skf * raw,
        mc_standard_error: deph.stderr,
    })
}

/// `1 - 2 h((1 - μ^(2N-1)) / 2)`: the key fraction without memory noise and
/// with `μ0 = μ`.
pub fn threshold_margin(n: usize, mu_eff: f64) -> f64 {
    let depol = mu_eff.max(0.0).powi(2 * n as i32 - 1);
    1.0 - 2.0 * binary_entropy(0.5 * (1.0 - depol))
}

/// Smallest physical `μ` giving a nonzero key fraction without memory noise.
pub fn threshold_mu(n: usize, encoding: Option<&EncodedMemory>) -> f64 {
    let margin = |mu: f64| {
        let eff = encoding.map_or(mu, |e| e.mu(mu));
        threshold_margin(n, eff)
    };
    let (mut lo, mut hi) = (0.5, 1.0);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if margin(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
