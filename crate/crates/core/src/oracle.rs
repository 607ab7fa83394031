//! Floating-point state-picture model of decoded codes, used to cross-check
//! the exact engine, plus closed forms for repetition codes.

use num_complex::Complex64 as C;

use crate::channel::NoiseKind;
use crate::code::StabilizerCode;
use crate::decoder::SyndromeTable;
use crate::error::{Error, Result};
use crate::pauli::PauliOp;

pub const MAX_QUBITS_1Q: usize = 7;
pub const MAX_QUBITS_2Q: usize = 5;

/// Square complex matrix in row-major order.
#[derive(Clone, Debug)]
pub struct DenseState {
    dim: usize,
    data: Vec<C>,
}

impl DenseState {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![C::new(0.0, 0.0); dim * dim],
        }
    }

    /// `|u><v|`.
    pub fn outer(u: &[C], v: &[C]) -> Self {
        let dim = u.len();
        let mut m = Self::zeros(dim);
        for (row, ua) in m.data.chunks_mut(dim).zip(u) {
            for (cell, vb) in row.iter_mut().zip(v) {
                *cell = ua * vb.conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize) -> C {
        self.data[a * self.dim + b]
    }

    pub fn trace(&self) -> C {
        (0..self.dim).map(|a| self.get(a, a)).sum()
    }

    /// Largest entry of `self - self^dagger`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..self.dim {
            for b in 0..self.dim {
                worst = worst.max((self.get(a, b) - self.get(b, a).conj()).norm());
            }
        }
        worst
    }

    /// `<u| self |v>`.
    pub fn sandwich(&self, u: &[C], v: &[C]) -> C {
        let mut acc = C::new(0.0, 0.0);
        for (row, ua) in self.data.chunks(self.dim).zip(u) {
            let rv: C = row.iter().zip(v).map(|(m, x)| m * x).sum();
            acc += ua.conj() * rv;
        }
        acc
    }

    fn map_entries(&mut self, f: impl Fn(usize, usize, &[C]) -> C) {
        let old = self.data.clone();
        let dim = self.dim;
        for a in 0..dim {
            for b in 0..dim {
                self.data[a * dim + b] = f(a, b, &old);
            }
        }
    }

    /// `(1 - p) rho + p Z rho Z` on qubit `k`.
    pub fn dephase(&mut self, k: usize, p: f64) {
        let dim = self.dim;
        for a in 0..dim {
            for b in 0..dim {
                if ((a ^ b) >> k) & 1 == 1 {
                    self.data[a * dim + b] *= 1.0 - 2.0 * p;
                }
            }
        }
    }

    /// `(1 - p) rho + p I/2 (x) Tr_k rho`.
    pub fn depolarize(&mut self, k: usize, p: f64) {
        let m = 1 << k;
        let dim = self.dim;
        self.map_entries(|a, b, old| {
            let keep = old[a * dim + b] * (1.0 - p);
            if (a ^ b) & m != 0 {
                keep
            } else {
                keep + (old[a * dim + b] + old[(a ^ m) * dim + (b ^ m)]) * (p / 2.0)
            }
        });
    }

    /// `(1 - p) rho + p I/4 (x) Tr_{k,l} rho`.
    pub fn depolarize_pair(&mut self, k: usize, l: usize, p: f64) {
        let (mk, ml) = (1usize << k, 1usize << l);
        let dim = self.dim;
        self.map_entries(|a, b, old| {
            let keep = old[a * dim + b] * (1.0 - p);
            if (a ^ b) & (mk | ml) != 0 {
                return keep;
            }
            let mixed: C = [0, mk, ml, mk | ml]
                .iter()
                .map(|&s| old[(a ^ s) * dim + (b ^ s)])
                .sum();
            keep + mixed * (p / 4.0)
        });
    }
}

/// Applies a Hermitian Pauli string to a state vector.
pub fn apply_pauli(p: &PauliOp, v: &[C]) -> Vec<C> {
    let (x, z) = (p.x_bits() as usize, p.z_bits() as usize);
    let ys = (x & z).count_ones();
    let phase = [
        C::new(1.0, 0.0),
        C::new(0.0, 1.0),
        C::new(-1.0, 0.0),
        C::new(0.0, -1.0),
    ][(ys % 4) as usize];
    let mut out = vec![C::new(0.0, 0.0); v.len()];
    for (a, &amp) in v.iter().enumerate() {
        let sign = if (a & z).count_ones() % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        out[a ^ x] = amp * phase * sign;
    }
    out
}

fn norm(v: &[C]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Logical basis states `|0_L>` and `|1_L> = X_L |0_L>` from the code-space
/// projector.
pub fn logical_basis(code: &StabilizerCode) -> (Vec<C>, Vec<C>) {
    let dim = 1usize << code.n();
    let project = |mut v: Vec<C>| {
        for g in code.generators().iter().chain([&code.logical_z()]) {
            let gv = apply_pauli(g, &v);
            for (a, b) in v.iter_mut().zip(gv) {
                *a = (*a + b) * 0.5;
            }
        }
        v
    };
    let mut best: Option<Vec<C>> = None;
    for a in 0..dim {
        let mut e = vec![C::new(0.0, 0.0); dim];
        e[a] = C::new(1.0, 0.0);
        let v = project(e);
        if best.as_ref().is_none_or(|b| norm(&v) > norm(b)) {
            best = Some(v);
        }
        if best.as_ref().is_some_and(|b| norm(b) > 0.25) {
            break;
        }
    }
    let v = best.expect("nonempty space");
    let s = norm(&v);
    let zero: Vec<C> = v.iter().map(|c| c / s).collect();
    let one = apply_pauli(&code.logical_x(), &zero);
    (zero, one)
}

fn apply_noise(rho: &mut DenseState, n: usize, kind: NoiseKind, p: f64) {
    for k in 0..n {
        match kind {
            NoiseKind::Dephasing1Q => rho.dephase(k, p),
            NoiseKind::Depolarizing1Q => rho.depolarize(k, p),
            NoiseKind::Depolarizing2Q => unreachable!(),
        }
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Numeric `(λ_I, λ_X, λ_Y, λ_Z)` of the decoded single-qubit noise channel.
pub fn oracle_channel_1q(
    code: &StabilizerCode,
    table: &SyndromeTable,
    kind: NoiseKind,
    p: f64,
) -> Result<[f64; 4]> {
    let n = code.n();
    if n > MAX_QUBITS_1Q {
        return Err(Error::Unsupported(format!(
            "oracle limited to n <= {MAX_QUBITS_1Q}"
        )));
    }
    if kind == NoiseKind::Depolarizing2Q {
        return Err(Error::ChannelType("use oracle_channel_2q".into()));
    }
    check_p(p)?;
    let (v0, v1) = logical_basis(code);
    let mut r00 = DenseState::outer(&v0, &v0);
    let mut r01 = DenseState::outer(&v0, &v1);
    apply_noise(&mut r00, n, kind, p);
    apply_noise(&mut r01, n, kind, p);
    let (mut a, mut b, mut c, mut d) = (C::default(), C::default(), C::default(), C::default());
    for e in table.entries() {
        let (u0, u1) = (apply_pauli(e, &v0), apply_pauli(e, &v1));
        a += r00.sandwich(&u0, &u0);
        b += r00.sandwich(&u1, &u1);
        c += r01.sandwich(&u0, &u1);
        d += r01.sandwich(&u1, &u0);
    }
    Ok([
        (a + c).re / 2.0,
        (b + d).re / 2.0,
        (b - d).re / 2.0,
        (a - c).re / 2.0,
    ])
}

/// Largest deviation from `P_i P_j = δ_ij P_i` and `Σ P_i = I` for the
/// error-space projectors `P_i = E_i Π_0 E_i`.
pub fn projector_defect(code: &StabilizerCode, table: &SyndromeTable) -> Result<f64> {
    if code.n() > MAX_QUBITS_1Q {
        return Err(Error::Unsupported(format!(
            "oracle limited to n <= {MAX_QUBITS_1Q}"
        )));
    }
    let (v0, v1) = logical_basis(code);
    let spaces: Vec<[Vec<C>; 2]> = table
        .entries()
        .iter()
        .map(|e| [apply_pauli(e, &v0), apply_pauli(e, &v1)])
        .collect();
    let dot = |u: &[C], v: &[C]| -> C { u.iter().zip(v).map(|(a, b)| a.conj() * b).sum() };
    let mut worst = 0.0f64;
    for (i, si) in spaces.iter().enumerate() {
        for (j, sj) in spaces.iter().enumerate() {
            for (x, u) in si.iter().enumerate() {
                for (y, v) in sj.iter().enumerate() {
                    let expect = if i == j && x == y { 1.0 } else { 0.0 };
                    worst = worst.max((dot(u, v) - expect).norm());
                }
            }
        }
    }
    let dim = v0.len();
    for a in 0..dim {
        for b in 0..dim {
            let sum: C = spaces.iter().flatten().map(|v| v[a] * v[b].conj()).sum();
            let expect = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((sum - expect).norm());
        }
    }
    Ok(worst)
}

/// Numeric sixteen-entry two-block channel under pairwise two-qubit
/// depolarization, `[A][B]` indexed I, X, Y, Z.
pub fn oracle_channel_2q(
    code: &StabilizerCode,
    table: &SyndromeTable,
    p: f64,
) -> Result<[[f64; 4]; 4]> {
    let n = code.n();
    if n > MAX_QUBITS_2Q {
        return Err(Error::Unsupported(format!(
            "two-block oracle limited to n <= {MAX_QUBITS_2Q}"
        )));
    }
    check_p(p)?;
    let (v0, v1) = logical_basis(code);
    let logicals = [
        PauliOp::identity(n)?,
        code.logical_x(),
        code.logical_y(),
        code.logical_z(),
    ];
    let block_dim = 1usize << n;
    // A Π_0 for each logical A, and Σ_i E_i A Π_0 E_i.
    let mut proj = Vec::new();
    let mut twirled = Vec::new();
    for l in &logicals {
        let mut m = DenseState::zeros(block_dim);
        for v in [&v0, &v1] {
            let lv = apply_pauli(l, v);
            let o = DenseState::outer(&lv, v);
            m.data.iter_mut().zip(&o.data).for_each(|(a, b)| *a += b);
        }
        let mut g = DenseState::zeros(block_dim);
        for e in table.entries() {
            for v in [&v0, &v1] {
                let o = DenseState::outer(&apply_pauli(e, &apply_pauli(l, v)), &apply_pauli(e, v));
                g.data.iter_mut().zip(&o.data).for_each(|(a, b)| *a += b);
            }
        }
        proj.push(m);
        twirled.push(g);
    }
    let dim = block_dim * block_dim;
    let split = |a: usize| (a % block_dim, a / block_dim);
    let mut f = [[0.0; 4]; 4];
    for (ia, pa) in proj.iter().enumerate() {
        for (ib, pb) in proj.iter().enumerate() {
            let mut rho = DenseState::zeros(dim);
            for a in 0..dim {
                let (a1, a2) = split(a);
                for b in 0..dim {
                    let (b1, b2) = split(b);
                    rho.data[a * dim + b] = pa.get(a1, b1) * pb.get(a2, b2);
                }
            }
            for k in 0..n {
                rho.depolarize_pair(k, k + n, p);
            }
            let mut tr = C::default();
            for a in 0..dim {
                let (a1, a2) = split(a);
                for b in 0..dim {
                    let (b1, b2) = split(b);
                    tr += twirled[ia].get(a1, b1) * twirled[ib].get(a2, b2) * rho.get(b, a);
                }
            }
            f[ia][ib] = tr.re / 4.0;
        }
    }
    let chi = |s: usize, t: usize| {
        if s == 0 || t == 0 || s == t {
            1.0
        } else {
            -1.0
        }
    };
    let mut lambda = [[0.0; 4]; 4];
    for (s1, row) in lambda.iter_mut().enumerate() {
        for (s2, out) in row.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (a, fr) in f.iter().enumerate() {
                for (b, fv) in fr.iter().enumerate() {
                    acc += chi(s1, a) * chi(s2, b) * fv;
                }
            }
            *out = acc / 16.0;
        }
    }
    Ok(lambda)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RepetitionParams {
    pub n: usize,
    /// Physical `λ_0..λ_3` (I, X, Y, Z) per qubit.
    pub lambda: [f64; 4],
}

fn binom(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Logical `(Λ_0..Λ_3)` of the bit-flip repetition code with majority vote.
pub fn repetition_closed_form(params: RepetitionParams) -> Result<[f64; 4]> {
    let RepetitionParams {
        n,
        lambda: [l0, l1, l2, l3],
    } = params;
    if n % 2 == 0 {
        return Err(Error::Unsupported(
            "repetition closed form needs odd n".into(),
        ));
    }
    let (s, f) = (l0 + l3, l1 + l2);
    let (ds, df) = (l0 - l3, l1 - l2);
    let mut out = [0.0; 4];
    for i in 0..=n / 2 {
        let w = binom(n, i);
        let j = (n - i) as i32;
        let a = s.powi(j) * f.powi(i as i32);
        let c = ds.powi(j) * df.powi(i as i32);
        let b = s.powi(i as i32) * f.powi(j);
        let d = ds.powi(i as i32) * df.powi(j);
        out[0] += w * (a + c) / 2.0;
        out[3] += w * (a - c) / 2.0;
        out[1] += w * (b + d) / 2.0;
        out[2] += w * (b - d) / 2.0;
    }
    Ok(out)
}
