//! Exact effective logical channels by exhaustive error enumeration.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::code::StabilizerCode;
use crate::decoder::{Classifier, LogicalClass, SyndromeTable};
use crate::error::{Error, Result};
use crate::pauli::PauliOp;
use crate::poly::{rat, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NoiseKind {
    Dephasing1Q,
    Depolarizing1Q,
    Depolarizing2Q,
}

impl FromStr for NoiseKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dephasing" => Ok(Self::Dephasing1Q),
            "depol1q" => Ok(Self::Depolarizing1Q),
            "depol2q" => Ok(Self::Depolarizing2Q),
            _ => Err(Error::Unsupported(format!("noise {s:?}"))),
        }
    }
}

impl fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Dephasing1Q => "dephasing",
            Self::Depolarizing1Q => "depol1q",
            Self::Depolarizing2Q => "depol2q",
        })
    }
}

/// `(a p)^i (1 - b p)^(n - i)`.
fn weight_poly(n: usize, i: usize, a: &BigRational, b: &BigRational) -> Poly {
    Poly::monomial(num_traits::pow(a.clone(), i), i) * Poly::one_minus(b.clone()).pow(n - i)
}

fn kind_rates(kind: NoiseKind) -> (BigRational, BigRational) {
    match kind {
        NoiseKind::Dephasing1Q => (rat(1, 1), rat(1, 1)),
        NoiseKind::Depolarizing1Q => (rat(1, 4), rat(3, 4)),
        NoiseKind::Depolarizing2Q => (rat(1, 16), rat(15, 16)),
    }
}

pub fn prob_1q(e: &PauliOp, kind: NoiseKind, n: usize) -> Result<Poly> {
    if e.n() != n {
        return Err(Error::SizeMismatch(n, e.n()));
    }
    let (a, b) = kind_rates(kind);
    match kind {
        NoiseKind::Dephasing1Q if !e.is_z_only() => Err(Error::ChannelType(format!(
            "{e} has an X component and probability zero under dephasing"
        ))),
        NoiseKind::Depolarizing2Q => Err(Error::ChannelType(
            "two-qubit noise needs an error pair".into(),
        )),
        _ => Ok(weight_poly(n, e.weight() as usize, &a, &b)),
    }
}

pub fn prob_2q(e1: &PauliOp, e2: &PauliOp, n: usize) -> Result<Poly> {
    for e in [e1, e2] {
        if e.n() != n {
            return Err(Error::SizeMismatch(n, e.n()));
        }
    }
    let i2 = (e1.support_mask() | e2.support_mask()).count_ones() as usize;
    let (a, b) = kind_rates(NoiseKind::Depolarizing2Q);
    Ok(weight_poly(n, i2, &a, &b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalChannel1Q {
    lambda: [Poly; 4],
}

impl LogicalChannel1Q {
    pub fn new(lambda: [Poly; 4]) -> Self {
        Self { lambda }
    }
    pub fn get(&self, c: LogicalClass) -> &Poly {
        &self.lambda[c.index()]
    }
    pub fn lambda_i(&self) -> &Poly {
        &self.lambda[0]
    }
    pub fn lambda_x(&self) -> &Poly {
        &self.lambda[1]
    }
    pub fn lambda_y(&self) -> &Poly {
        &self.lambda[2]
    }
    pub fn lambda_z(&self) -> &Poly {
        &self.lambda[3]
    }
    pub fn total(&self) -> Poly {
        self.lambda.iter().cloned().sum()
    }
    pub fn eval(&self, p: f64) -> [f64; 4] {
        [0, 1, 2, 3].map(|k| self.lambda[k].eval(p))
    }
    pub fn is_pure_dephasing(&self) -> bool {
        self.lambda_x().is_zero() && self.lambda_y().is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalChannel2Q {
    lambda: [[Poly; 4]; 4],
}

impl LogicalChannel2Q {
    pub fn get(&self, a: LogicalClass, b: LogicalClass) -> &Poly {
        &self.lambda[a.index()][b.index()]
    }
    pub fn total(&self) -> Poly {
        self.lambda.iter().flatten().cloned().sum()
    }
    /// All sixteen entries with their two-letter labels, `II` first.
    pub fn entries(&self) -> Vec<(String, &Poly)> {
        let mut out = Vec::with_capacity(16);
        for a in LogicalClass::ALL {
            for b in LogicalClass::ALL {
                out.push((format!("{a}{b}"), self.get(a, b)));
            }
        }
        out
    }
    pub fn eval(&self, p: f64) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for (a, row) in self.lambda.iter().enumerate() {
            for (b, poly) in row.iter().enumerate() {
                out[a][b] = poly.eval(p);
            }
        }
        out
    }
}

fn big(count: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(count))
}

fn channel_from_tally(n: usize, kind: NoiseKind, tally: &[[u64; 33]; 4]) -> LogicalChannel1Q {
    let (a, b) = kind_rates(kind);
    let lambda = [0, 1, 2, 3].map(|c| {
        (0..=n)
            .filter(|&i| tally[c][i] != 0)
            .map(|i| weight_poly(n, i, &a, &b).scale(&big(tally[c][i] as u128)))
            .sum()
    });
    LogicalChannel1Q { lambda }
}

/// Counts of errors per logical class and weight.
pub fn tally_1q(
    code: &StabilizerCode,
    table: &SyndromeTable,
    kind: NoiseKind,
) -> Result<[[u64; 33]; 4]> {
    let classifier = Classifier::new(code, table)?;
    let n = code.n();
    let merge = |mut a: [[u64; 33]; 4], b: [[u64; 33]; 4]| {
        for c in 0..4 {
            for i in 0..33 {
                a[c][i] += b[c][i];
            }
        }
        a
    };
    let tally = match kind {
        NoiseKind::Dephasing1Q => (0u32..1 << n)
            .into_par_iter()
            .fold(
                || [[0u64; 33]; 4],
                |mut t, z| {
                    t[classifier.classify_masks(0, z).index()][z.count_ones() as usize] += 1;
                    t
                },
            )
            .reduce(|| [[0u64; 33]; 4], merge),
        NoiseKind::Depolarizing1Q => (0u32..1 << n)
            .into_par_iter()
            .fold(
                || [[0u64; 33]; 4],
                |mut t, x| {
                    for z in 0u32..1 << n {
                        t[classifier.classify_masks(x, z).index()]
                            [(x | z).count_ones() as usize] += 1;
                    }
                    t
                },
            )
            .reduce(|| [[0u64; 33]; 4], merge),
        NoiseKind::Depolarizing2Q => {
            return Err(Error::ChannelType(
                "use effective_channel_2q for two-qubit noise".into(),
            ))
        }
    };
    Ok(tally)
}

pub fn effective_channel_1q(
    code: &StabilizerCode,
    table: &SyndromeTable,
    kind: NoiseKind,
) -> Result<LogicalChannel1Q> {
    let tally = tally_1q(code, table, kind)?;
    Ok(channel_from_tally(code.n(), kind, &tally))
}

/// Per-block counts of errors by logical class and support mask.
fn block_counts(code: &StabilizerCode, table: &SyndromeTable) -> Result<Vec<[u64; 4]>> {
    let classifier = Classifier::new(code, table)?;
    let n = code.n();
    let counts = (0u32..1 << n)
        .into_par_iter()
        .fold(
            || vec![[0u64; 4]; 1 << n],
            |mut local, x| {
                for z in 0u32..1 << n {
                    local[(x | z) as usize][classifier.classify_masks(x, z).index()] += 1;
                }
                local
            },
        )
        .reduce(
            || vec![[0u64; 4]; 1 << n],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(&b) {
                    for c in 0..4 {
                        ra[c] += rb[c];
                    }
                }
                a
            },
        );
    Ok(counts)
}

type Bins = Vec<[[u128; 4]; 4]>;

fn channel_from_bins(n: usize, bins: &Bins) -> LogicalChannel2Q {
    let (a, b) = kind_rates(NoiseKind::Depolarizing2Q);
    let weights: Vec<Poly> = (0..=n).map(|i| weight_poly(n, i, &a, &b)).collect();
    let lambda = [0, 1, 2, 3].map(|c1| {
        [0, 1, 2, 3].map(|c2| {
            (0..=n)
                .filter(|&i| bins[i][c1][c2] != 0)
                .map(|i| weights[i].scale(&big(bins[i][c1][c2])))
                .sum()
        })
    });
    LogicalChannel2Q { lambda }
}

/// Two-block channel under two-qubit depolarizing noise on every qubit pair
/// `(k, k + n)`, aggregated over support masks.
pub fn effective_channel_2q(
    code: &StabilizerCode,
    table: &SyndromeTable,
) -> Result<LogicalChannel2Q> {
    let n = code.n();
    let counts = block_counts(code, table)?;
    let masks: Vec<(usize, [u64; 4])> = counts
        .iter()
        .copied()
        .enumerate()
        .filter(|(_, c)| c.iter().any(|&v| v != 0))
        .collect();
    let bins = masks
        .par_iter()
        .fold(
            || vec![[[0u128; 4]; 4]; n + 1],
            |mut bins, &(m1, c1)| {
                for &(m2, c2) in &masks {
                    let i2 = (m1 | m2).count_ones() as usize;
                    for a in 0..4 {
                        for b in 0..4 {
                            bins[i2][a][b] += c1[a] as u128 * c2[b] as u128;
                        }
                    }
                }
                bins
            },
        )
        .reduce(
            || vec![[[0u128; 4]; 4]; n + 1],
            |mut x, y| {
                for (bx, by) in x.iter_mut().zip(&y) {
                    for a in 0..4 {
                        for b in 0..4 {
                            bx[a][b] += by[a][b];
                        }
                    }
                }
                x
            },
        );
    Ok(channel_from_bins(n, &bins))
}

/// Direct double sum over all error pairs; exponential in `2n`, for checking.
pub fn effective_channel_2q_naive(
    code: &StabilizerCode,
    table: &SyndromeTable,
) -> Result<LogicalChannel2Q> {
    let n = code.n();
    if n > 5 {
        return Err(Error::Unsupported(
            "naive two-block sum limited to n <= 5".into(),
        ));
    }
    let classifier = Classifier::new(code, table)?;
    let errors: Vec<(u32, usize)> = (0u32..1 << n)
        .flat_map(|x| (0u32..1 << n).map(move |z| (x, z)))
        .map(|(x, z)| (x | z, classifier.classify_masks(x, z).index()))
        .collect();
    let mut bins: Bins = vec![[[0u128; 4]; 4]; n + 1];
    for &(m1, c1) in &errors {
        for &(m2, c2) in &errors {
            bins[(m1 | m2).count_ones() as usize][c1][c2] += 1;
        }
    }
    Ok(channel_from_bins(n, &bins))
}

/// `1 - 16 max λ_AB` over the fifteen non-identity entries at `p`.
pub fn worst_case_mu(ch: &LogicalChannel2Q, p: f64) -> f64 {
    let lmax = ch
        .entries()
        .into_iter()
        .skip(1)
        .map(|(_, poly)| poly.eval(p))
        .fold(f64::NEG_INFINITY, f64::max);
    1.0 - 16.0 * lmax
}

/// Physical phase-flip probability per step for dephasing strength `alpha`.
pub fn flip_prob(alpha: f64) -> f64 {
    -0.5 * (-alpha).exp_m1()
}

/// Dephasing strength from a phase-flip probability below one half.
pub fn alpha_from_flip(p: f64) -> Result<f64> {
    if !(0.0..0.5).contains(&p) {
        return Err(Error::Domain(format!(
            "phase-flip probability {p} outside [0, 1/2)"
        )));
    }
    Ok(-(-2.0 * p).ln_1p())
}

/// Maps a physical dephasing strength to the logical one through `ch`.
pub fn logical_alpha(ch: &LogicalChannel1Q, alpha_phys: f64) -> Result<f64> {
    if !ch.is_pure_dephasing() {
        return Err(Error::ChannelType(
            "logical channel has X or Y components".into(),
        ));
    }
    if alpha_phys < 0.0 {
        return Err(Error::Domain(format!("negative alpha {alpha_phys}")));
    }
    alpha_from_flip(ch.lambda_z().eval(flip_prob(alpha_phys)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::get_code;
    use crate::decoder::{build_table, Strategy};

    fn op(s: &str) -> PauliOp {
        s.parse().unwrap()
    }

    #[test]
    fn occurrence_probabilities() {
        let q = |c| Poly::one_minus(c);
        assert_eq!(
            prob_1q(&op("IIIII"), NoiseKind::Depolarizing1Q, 5).unwrap(),
            q(rat(3, 4)).pow(5)
        );
        assert_eq!(
            prob_1q(&op("ZZIII"), NoiseKind::Dephasing1Q, 5).unwrap(),
            Poly::monomial(rat(1, 1), 2) * q(rat(1, 1)).pow(3)
        );
        assert_eq!(
            prob_1q(&op("YIXZI"), NoiseKind::Depolarizing1Q, 5).unwrap(),
            Poly::monomial(rat(1, 64), 3) * q(rat(3, 4)).pow(2)
        );
        assert!(prob_1q(&op("XIIII"), NoiseKind::Dephasing1Q, 5).is_err());
        assert_eq!(
            prob_2q(&op("III"), &op("III"), 3).unwrap(),
            q(rat(15, 16)).pow(3)
        );
        assert_eq!(
            prob_2q(&op("XII"), &op("ZII"), 3).unwrap(),
            Poly::monomial(rat(1, 16), 1) * q(rat(15, 16)).pow(2)
        );
        assert_eq!(
            prob_2q(&op("XII"), &op("IZI"), 3).unwrap(),
            Poly::monomial(rat(1, 256), 2) * q(rat(15, 16))
        );
    }

    #[test]
    fn engine_matches_per_error_sum() {
        let code = get_code("bit3").unwrap();
        let table = build_table(&code, Strategy::MinWeightPauli).unwrap();
        let ch = effective_channel_1q(&code, &table, NoiseKind::Depolarizing1Q).unwrap();
        let classifier = Classifier::new(&code, &table).unwrap();
        let mut direct = [Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero()];
        for x in 0..8 {
            for z in 0..8 {
                let e = PauliOp::new(3, x, z).unwrap();
                let c = classifier.classify(&e).index();
                direct[c] = &direct[c] + &prob_1q(&e, NoiseKind::Depolarizing1Q, 3).unwrap();
            }
        }
        assert_eq!(ch, LogicalChannel1Q::new(direct));
    }

    #[test]
    fn logical_alpha_maps() {
        let five = get_code("five").unwrap();
        let ada = build_table(&five, Strategy::PhaseFlipFirst).unwrap();
        let ch = effective_channel_1q(&five, &ada, NoiseKind::Dephasing1Q).unwrap();
        assert_eq!(logical_alpha(&ch, 0.0).unwrap(), 0.0);
        let identity = LogicalChannel1Q::new([
            Poly::one_minus(rat(1, 1)),
            Poly::zero(),
            Poly::zero(),
            Poly::p(),
        ]);
        let a = logical_alpha(&identity, 0.37).unwrap();
        assert!((a - 0.37).abs() < 1e-13);

        let std = build_table(&five, Strategy::MinWeightPauli).unwrap();
        let bad = effective_channel_1q(&five, &std, NoiseKind::Dephasing1Q).unwrap();
        assert!(matches!(
            logical_alpha(&bad, 0.1),
            Err(Error::ChannelType(_))
        ));
        assert!(matches!(alpha_from_flip(0.5), Err(Error::Domain(_))));
    }
}
