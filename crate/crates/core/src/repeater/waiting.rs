//! Mean number of attempts until every segment holds a link.

use crate::error::{Error, Result};

const REL_TAIL: f64 = 1e-16;
const MAX_SERIES_TERMS: f64 = 1e7;

fn check(p: f64) -> Result<()> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Domain(format!(
            "link probability {p} outside (0, 1]"
        )));
    }
    Ok(())
}

/// `E[max(N_1..N_N)]` for i.i.d. geometric attempts.
///
/// Summed as `Σ_{k≥0} P(max > k)`, which stays well conditioned for large
/// `N`. When `p` is so small that the series would need more than
/// `MAX_SERIES_TERMS` terms, the absorbing-chain recursion is used instead.
pub fn avg_waiting_parallel(n: usize, p: f64) -> Result<f64> {
    check(p)?;
    if n == 0 {
        return Err(Error::Domain("segment count must be positive".into()));
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let ln_q = (-p).ln_1p();
    let terms = ((n as f64).ln() - REL_TAIL.ln()) / -ln_q;
    if terms > MAX_SERIES_TERMS {
        return Ok(remaining_segments_recursion(n, p));
    }
    let nf = n as f64;
    let mut sum = 0.0;
    let mut k = 0u64;
    loop {
        let qk = (k as f64 * ln_q).exp();
        let term = if qk >= 1.0 {
            1.0
        } else {
            -(nf * (-qk).ln_1p()).exp_m1()
        };
        sum += term;
        k += 1;
        let tail = nf * qk * (1.0 - p) / p;
        if tail < REL_TAIL * sum {
            return Ok(sum);
        }
    }
}

/// `T_m = (1 + Σ_{j≥1} P(j of m succeed) T_{m-j}) / (1 - q^m)`: expected
/// attempts until `m` pending segments have all succeeded. Every term is
/// positive; the cost is `O(N²)`.
fn remaining_segments_recursion(n: usize, p: f64) -> f64 {
    let (ln_p, ln_q) = (p.ln(), (-p).ln_1p());
    let mut ln_fact = vec![0.0; n + 1];
    for k in 1..=n {
        ln_fact[k] = ln_fact[k - 1] + (k as f64).ln();
    }
    let mut t = vec![0.0; n + 1];
    for m in 1..=n {
        let mut acc = 1.0;
        for j in 1..m {
            let ln_pmf =
                ln_fact[m] - ln_fact[j] - ln_fact[m - j] + j as f64 * ln_p + (m - j) as f64 * ln_q;
            acc += ln_pmf.exp() * t[m - j];
        }
        t[m] = acc / -(m as f64 * ln_q).exp_m1();
    }
    t[n]
}

/// The inclusion-exclusion form `Σ_i (-1)^(i+1) C(N,i) / (1 - q^i)`.
/// Cancels catastrophically for large `N`.
pub fn avg_waiting_alternating(n: usize, p: f64) -> Result<f64> {
    check(p)?;
    let q = 1.0 - p;
    let mut binom = 1.0;
    let mut sum = 0.0;
    for i in 1..=n {
        binom = binom * (n - i + 1) as f64 / i as f64;
        let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * binom / (1.0 - q.powi(i as i32));
    }
    Ok(sum)
}

/// Two segments with memory cutoff `m`: a round ends in success when the
/// second link arrives at most `m` attempts after the first; otherwise the
/// stored link is dropped after waiting `m` attempts and both restart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cutoff2 {
    pub success_prob: f64,
    pub mean_round: f64,
}

pub fn cutoff2_rounds(p: f64, m: u32) -> Result<Cutoff2> {
    check(p)?;
    let q = 1.0 - p;
    let qm = q.powi(m as i32);
    let success_prob = if p == 1.0 {
        1.0
    } else {
        p / (2.0 - p) + 2.0 * q * (1.0 - qm) / (2.0 - p)
    };
    let mean_min = 1.0 / (1.0 - q * q);
    let mean_trunc_gap = 2.0 * q * (1.0 - qm) / ((2.0 - p) * p);
    Ok(Cutoff2 {
        success_prob,
        mean_round: mean_min + mean_trunc_gap,
    })
}

/// Mean attempts until a successful round under cutoff `m`.
pub fn avg_waiting_cutoff2(p: f64, m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("cutoff must be at least 1".into()));
    }
    let c = cutoff2_rounds(p, m)?;
    Ok(c.mean_round / c.success_prob)
}
