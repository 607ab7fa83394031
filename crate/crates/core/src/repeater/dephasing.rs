//! Mean dephasing factor `E[e^(-α Q)]`, with `Q` the number of qubit-steps
//! stored qubits spend waiting.

use std::fmt;
use std::str::FromStr;

use super::mc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    /// Two segments, exact.
    Exact2,
    /// Segments are connected one after another; a lower bound for swap-asap.
    Sequential,
    /// Swap as soon as possible, Monte Carlo.
    SwapAsapMc { samples: u64, seed: u64 },
}

impl Scheme {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Exact2 => "exact2",
            Self::Sequential => "sequential",
            Self::SwapAsapMc { .. } => "mc",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact2" => Ok(Self::Exact2),
            "sequential" => Ok(Self::Sequential),
            "mc" => Ok(Self::SwapAsapMc {
                samples: mc::DEFAULT_SAMPLES,
                seed: 0,
            }),
            _ => Err(Error::Unsupported(format!("scheme {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    /// Standard error for sampled estimates.
    pub stderr: Option<f64>,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            stderr: None,
        }
    }
}

fn check_inputs(n: usize, p: f64, alpha: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("segment count must be positive".into()));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Domain(format!(
            "link probability {p} outside (0, 1]"
        )));
    }
    if !(alpha >= 0.0) {
        return Err(Error::Domain(format!("alpha {alpha} must be nonnegative")));
    }
    Ok(())
}

/// `E[t^|N1-N2|]` restricted to `|N1 - N2| <= max_gap`, for i.i.d.
/// geometric `N1`, `N2`.
fn gap_pgf(p: f64, t: f64, max_gap: Option<u32>) -> f64 {
    let q = 1.0 - p;
    let r = q * t;
    let partial = match max_gap {
        None => r / (1.0 - r),
        Some(m) => r * (1.0 - r.powi(m as i32)) / (1.0 - r),
    };
    let partial = if r == 0.0 { 0.0 } else { partial };
    p / (2.0 - p) + 2.0 * p / (2.0 - p) * partial
}

/// Two segments: `Q = 2 |N1 - N2|`.
pub fn exact2(p: f64, alpha: f64) -> Result<f64> {
    check_inputs(2, p, alpha)?;
    Ok(gap_pgf(p, (-2.0 * alpha).exp(), None))
}

/// Two segments with cutoff `m`, conditioned on the successful round.
pub fn exact2_cutoff(p: f64, alpha: f64, m: u32) -> Result<f64> {
    check_inputs(2, p, alpha)?;
    let rounds = super::waiting::cutoff2_rounds(p, m)?;
    Ok(gap_pgf(p, (-2.0 * alpha).exp(), Some(m)) / rounds.success_prob)
}

/// Sequential connection: `Q = 2 (N_2 + ... + N_N)`.
pub fn sequential(n: usize, p: f64, alpha: f64) -> Result<f64> {
    check_inputs(n, p, alpha)?;
    let t = (-2.0 * alpha).exp();
    let pgf = p * t / (1.0 - (1.0 - p) * t);
    Ok(pgf.powi(n as i32 - 1))
}

pub fn dephasing_expectation(
    scheme: Scheme,
    n: usize,
    p: f64,
    alpha: f64,
    cutoff: Option<u32>,
) -> Result<Estimate> {
    check_inputs(n, p, alpha)?;
    if cutoff.is_some() && n != 2 {
        return Err(Error::Unsupported(
            "cutoff is only defined for two segments".into(),
        ));
    }
    match (scheme, cutoff) {
        (Scheme::Exact2, _) if n != 2 => Err(Error::Unsupported(
            "exact2 scheme requires two segments".into(),
        )),
        (Scheme::Exact2, None) => exact2(p, alpha).map(Estimate::exact),
        (Scheme::Exact2, Some(m)) => exact2_cutoff(p, alpha, m).map(Estimate::exact),
        (Scheme::Sequential, None) => sequential(n, p, alpha).map(Estimate::exact),
        (Scheme::Sequential, Some(_)) => Err(Error::Unsupported(
            "cutoff with the sequential scheme".into(),
        )),
        (Scheme::SwapAsapMc { samples, seed }, None) => {
            let s = mc::swap_asap(n, p, alpha, samples, seed)?;
            Ok(Estimate {
                value: s.factor.mean,
                stderr: Some(s.factor.stderr),
            })
        }
        (Scheme::SwapAsapMc { samples, seed }, Some(m)) => {
            let s = mc::cutoff2(p, m, alpha, samples, seed)?;
            Ok(Estimate {
                value: s.factor.mean,
                stderr: Some(s.factor.stderr),
            })
        }
    }
}
