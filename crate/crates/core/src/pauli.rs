//! Phaseless Pauli operators in the binary symplectic picture.
//!
//! Qubit 1 of a Pauli string is bit 0 of both masks. Global phases are never
//! tracked.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_QUBITS: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOp {
    n: u8,
    x: u32,
    z: u32,
}

fn low_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl PauliOp {
    pub fn new(n: usize, x_bits: u32, z_bits: u32) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let m = low_mask(n);
        Ok(Self {
            n: n as u8,
            x: x_bits & m,
            z: z_bits & m,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    /// Single-qubit operator `letter` on qubit `q` (0-based).
    pub fn single(n: usize, q: usize, letter: char) -> Result<Self> {
        let (x, z) = letter_bits(letter)?;
        Self::new(n, (x as u32) << q, (z as u32) << q)
    }

    pub(crate) fn from_masks(n: usize, x: u32, z: u32) -> Self {
        Self { n: n as u8, x, z }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }
    pub fn x_bits(&self) -> u32 {
        self.x
    }
    pub fn z_bits(&self) -> u32 {
        self.z
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn is_z_only(&self) -> bool {
        self.x == 0
    }

    pub fn support_mask(&self) -> u32 {
        self.x | self.z
    }

    pub fn weight(&self) -> u32 {
        self.support_mask().count_ones()
    }

    /// Packs the operator into one word, `x` low and `z` high.
    pub fn key(&self) -> u64 {
        self.x as u64 | (self.z as u64) << 32
    }

    pub fn letter(&self, q: usize) -> char {
        match ((self.x >> q) & 1, (self.z >> q) & 1) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (0, 1) => 'Z',
            _ => 'Y',
        }
    }

    /// Symplectic product: 0 if the operators commute, 1 otherwise.
    pub fn commutes(&self, other: &PauliOp) -> Result<u8> {
        self.check_size(other)?;
        Ok(self.symplectic(other))
    }

    pub fn mul(&self, other: &PauliOp) -> Result<PauliOp> {
        self.check_size(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn symplectic(&self, other: &PauliOp) -> u8 {
        (((self.x & other.z).count_ones() + (self.z & other.x).count_ones()) & 1) as u8
    }

    pub(crate) fn mul_unchecked(&self, other: &PauliOp) -> PauliOp {
        PauliOp {
            n: self.n,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        }
    }

    fn check_size(&self, other: &PauliOp) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(())
    }
}

fn letter_bits(c: char) -> Result<(bool, bool)> {
    match c {
        'I' => Ok((false, false)),
        'X' => Ok((true, false)),
        'Y' => Ok((true, true)),
        'Z' => Ok((false, true)),
        other => Err(Error::PauliChar(other)),
    }
}

impl FromStr for PauliOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        let n = chars.len();
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let (mut x, mut z) = (0u32, 0u32);
        for (q, &c) in chars.iter().enumerate() {
            let (bx, bz) = letter_bits(c)?;
            x |= (bx as u32) << q;
            z |= (bz as u32) << q;
        }
        Self::new(n, x, z)
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOp({self})")
    }
}

/// Parses the sparse notation `X1Z2Z3X4` on `n` qubits (1-based indices).
pub fn parse_sparse(n: usize, s: &str) -> Result<PauliOp> {
    let mut op = PauliOp::identity(n)?;
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let q: usize = digits.parse().map_err(|_| Error::PauliChar(c))?;
        if q == 0 || q > n {
            return Err(Error::QubitCount(q));
        }
        op = op.mul(&PauliOp::single(n, q - 1, c)?)?;
    }
    Ok(op)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: u32,
    len: u8,
}

impl Syndrome {
    pub fn bits(&self) -> u32 {
        self.bits
    }
    pub fn len(&self) -> usize {
        self.len as usize
    }
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
    pub fn bit(&self, i: usize) -> u8 {
        ((self.bits >> i) & 1) as u8
    }
    pub fn is_trivial(&self) -> bool {
        self.bits == 0
    }
}

#[derive(Clone, Debug)]
pub struct CheckMatrix {
    n: usize,
    rows: Vec<PauliOp>,
}

impl CheckMatrix {
    /// Builds a check matrix, rejecting noncommuting or dependent rows.
    pub fn new(rows: Vec<PauliOp>) -> Result<Self> {
        let n = rows
            .first()
            .map(PauliOp::n)
            .ok_or(Error::Invalid("no generators".into()))?;
        for (i, a) in rows.iter().enumerate() {
            if a.n() != n {
                return Err(Error::SizeMismatch(n, a.n()));
            }
            for (j, b) in rows.iter().enumerate().skip(i + 1) {
                if a.symplectic(b) == 1 {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }
        if gf2_rank(rows.iter().map(PauliOp::key).collect()) != rows.len() {
            return Err(Error::Dependent);
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn rows(&self) -> &[PauliOp] {
        &self.rows
    }

    pub fn syndrome(&self, e: &PauliOp) -> Result<Syndrome> {
        if e.n() != self.n {
            return Err(Error::SizeMismatch(self.n, e.n()));
        }
        Ok(Syndrome {
            bits: self.syndrome_bits(e),
            len: self.rows.len() as u8,
        })
    }

    /// Syndrome packed as an integer, generator `i` at bit `i`.
    pub(crate) fn syndrome_bits(&self, e: &PauliOp) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, g)| acc | (g.symplectic(e) as u32) << i)
    }
}

/// Rank over GF(2) of packed row vectors.
pub fn gf2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let m = 1u64 << bit;
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] & m != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & m != 0 {
                *row ^= p;
            }
        }
        rank += 1;
    }
    rank
}

/// All products of a set of commuting, independent generators.
#[derive(Clone, Debug)]
pub struct GroupSet {
    elements: Vec<PauliOp>,
    keys: HashSet<u64>,
}

impl GroupSet {
    pub fn elements(&self) -> &[PauliOp] {
        &self.elements
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
    pub fn contains(&self, p: &PauliOp) -> bool {
        self.keys.contains(&p.key())
    }
}

pub fn enumerate_group(generators: &[PauliOp]) -> Result<GroupSet> {
    let check = CheckMatrix::new(generators.to_vec())?;
    let mut elements = vec![PauliOp::identity(check.n())?];
    for g in check.rows() {
        let doubled: Vec<PauliOp> = elements.iter().map(|e| e.mul_unchecked(g)).collect();
        elements.extend(doubled);
    }
    let keys = elements.iter().map(PauliOp::key).collect();
    Ok(GroupSet { elements, keys })
}

/// Masks with exactly `k` of the low `n` bits set, in lexicographic order of
/// their sorted index lists.
pub(crate) fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        match (0..k).rev().find(|&i| idx[i] != i + n - k) {
            Some(i) => {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
            None => done = true,
        }
        Some(out)
    })
}
