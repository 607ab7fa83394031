//! Monte Carlo sampling of waiting and storage times.
//!
//! Samples are drawn in fixed-size chunks; chunk `c` uses stream `c` of a
//! ChaCha generator keyed by the seed, and chunk sums are merged in order, so
//! estimates depend only on the seed and sample count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_SAMPLES: u64 = 1_000_000;
const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mean {
    pub mean: f64,
    pub stderr: f64,
}

/// Running mean and centered second moment (Welford, Chan et al. merge).
#[derive(Clone, Copy, Debug, Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if other.n == 0 {
            return self;
        }
        if self.n == 0 {
            return other;
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        let w = other.n as f64 / n as f64;
        Moments {
            n,
            mean: self.mean + d * w,
            m2: self.m2 + other.m2 + d * d * self.n as f64 * w,
        }
    }

    fn finish(&self) -> Mean {
        let n = self.n as f64;
        let var = self.m2 / (n - 1.0).max(1.0);
        Mean {
            mean: self.mean,
            stderr: (var / n).sqrt(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sampled {
    /// `E[e^(-α Q)]`.
    pub factor: Mean,
    /// Attempts until the end-to-end link exists.
    pub wait: Mean,
    /// Mean qubit-steps `Q`.
    pub storage: Mean,
}

fn run_chunks<F>(samples: u64, seed: u64, draw: F) -> [Moments; 3]
where
    F: Fn(&mut ChaCha8Rng) -> [f64; 3] + Sync,
{
    let chunks = samples.div_ceil(CHUNK);
    let parts: Vec<[Moments; 3]> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let len = CHUNK.min(samples - c * CHUNK);
            let mut m = [Moments::default(); 3];
            for _ in 0..len {
                let v = draw(&mut rng);
                for (acc, x) in m.iter_mut().zip(v) {
                    acc.push(x);
                }
            }
            m
        })
        .collect();
    parts.into_iter().fold([Moments::default(); 3], |a, b| {
        [a[0].merge(b[0]), a[1].merge(b[1]), a[2].merge(b[2])]
    })
}

fn geometric(p: f64) -> Result<Geometric> {
    Geometric::new(p).map_err(|e| Error::Domain(format!("link probability {p}: {e}")))
}

fn check(samples: u64, alpha: f64) -> Result<()> {
    if samples < 2 {
        return Err(Error::Domain("need at least two samples".into()));
    }
    if !(alpha >= 0.0) {
        return Err(Error::Domain(format!("alpha {alpha} must be nonnegative")));
    }
    Ok(())
}

/// Storage time of one swap-asap run given the attempt counts per segment.
pub fn swap_asap_storage(attempts: &[u64]) -> u64 {
    let t = attempts.iter().copied().max().unwrap_or(0);
    let inner: u64 = attempts.windows(2).map(|w| w[0].abs_diff(w[1])).sum();
    match (attempts.first(), attempts.last()) {
        (Some(&a), Some(&b)) => inner + (t - a) + (t - b),
        _ => 0,
    }
}

/// Swap as soon as possible over `n` segments. Every station swaps the
/// moment both neighbouring links exist, so each inner qubit waits for the
/// gap to its neighbour's link and end-node qubits wait until the last link.
pub fn swap_asap(n: usize, p: f64, alpha: f64, samples: u64, seed: u64) -> Result<Sampled> {
    check(samples, alpha)?;
    if n == 0 {
        return Err(Error::Domain("segment count must be positive".into()));
    }
    let geo = geometric(p)?;
    let m = run_chunks(samples, seed, |rng| {
        let mut attempts = [0u64; 64];
        let mut heap;
        let buf: &mut [u64] = if n <= 64 {
            &mut attempts[..n]
        } else {
            heap = vec![0u64; n];
            &mut heap[..]
        };
        for a in buf.iter_mut() {
            *a = geo.sample(rng) + 1;
        }
        let q = swap_asap_storage(buf) as f64;
        let t = *buf.iter().max().unwrap() as f64;
        [(-alpha * q).exp(), t, q]
    });
    Ok(Sampled {
        factor: m[0].finish(),
        wait: m[1].finish(),
        storage: m[2].finish(),
    })
}

/// Two segments with cutoff `m`, sampled round by round until success.
pub fn cutoff2(p: f64, m: u32, alpha: f64, samples: u64, seed: u64) -> Result<Sampled> {
    check(samples, alpha)?;
    if m == 0 {
        return Err(Error::Domain("cutoff must be at least 1".into()));
    }
    let geo = geometric(p)?;
    let m = m as u64;
    let res = run_chunks(samples, seed, |rng| {
        let mut elapsed = 0u64;
        loop {
            let a = geo.sample(rng) + 1;
            let b = geo.sample(rng) + 1;
            let gap = a.abs_diff(b);
            if gap <= m {
                let q = 2 * gap;
                return [
                    (-alpha * q as f64).exp(),
                    (elapsed + a.max(b)) as f64,
                    q as f64,
                ];
            }
            elapsed += a.min(b) + m;
        }
    });
    Ok(Sampled {
        factor: res[0].finish(),
        wait: res[1].finish(),
        storage: res[2].finish(),
    })
}
