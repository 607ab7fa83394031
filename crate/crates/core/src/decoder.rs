//! Syndrome lookup tables and logical classification of corrected errors.

use std::fmt;
use std::str::FromStr;

use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::pauli::{subsets, CheckMatrix, PauliOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Representatives are minimal-weight Pauli errors.
    MinWeightPauli,
    /// Phase-flip errors of every weight claim syndromes before general Paulis.
    PhaseFlipFirst,
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Self::MinWeightPauli),
            "adaptive" => Ok(Self::PhaseFlipFirst),
            _ => Err(Error::Unsupported(format!("strategy {s:?}"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::MinWeightPauli => "standard",
            Self::PhaseFlipFirst => "adaptive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicalClass {
    I,
    X,
    Y,
    Z,
}

impl LogicalClass {
    pub const ALL: [LogicalClass; 4] = [Self::I, Self::X, Self::Y, Self::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        ['I', 'X', 'Y', 'Z'][self.index()]
    }

    /// Whether the two logical Paulis commute.
    pub fn commutes_with(self, other: LogicalClass) -> bool {
        self == LogicalClass::I || other == LogicalClass::I || self == other
    }
}

impl fmt::Display for LogicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Per-weight sweep bookkeeping. Index `w` holds the count for weight `w`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SyndromeStats {
    /// New syndromes claimed by phase-flip representatives.
    pub z_only: Vec<usize>,
    /// New syndromes claimed during the general Pauli sweep.
    pub pauli: Vec<usize>,
    /// Phase-flip errors whose syndrome no lighter phase flip produces.
    pub fresh_z_errors: Vec<usize>,
}

impl SyndromeStats {
    pub fn total(&self) -> usize {
        self.z_only.iter().sum::<usize>() + self.pauli.iter().sum::<usize>()
    }

    /// New syndromes per weight regardless of sweep.
    pub fn new_per_weight(&self) -> Vec<usize> {
        let len = self.z_only.len().max(self.pauli.len());
        (0..len)
            .map(|w| self.z_only.get(w).unwrap_or(&0) + self.pauli.get(w).unwrap_or(&0))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct SyndromeTable {
    strategy: Strategy,
    entries: Vec<PauliOp>,
    stats: SyndromeStats,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub syndrome: u32,
    pub representative: PauliOp,
    pub weight: u32,
    pub z_only: bool,
}

/// Errors of weight `w` on `n` qubits: qubit subsets in lexicographic order,
/// then letters from `letters` with the first qubit varying slowest.
fn errors_of_weight(
    n: usize,
    w: usize,
    letters: &'static [(u32, u32)],
) -> impl Iterator<Item = PauliOp> {
    subsets(n, w).flat_map(move |qubits| {
        let total = letters.len().pow(w as u32);
        (0..total).map(move |mut idx| {
            let (mut x, mut z) = (0u32, 0u32);
            for &q in qubits.iter().rev() {
                let (lx, lz) = letters[idx % letters.len()];
                idx /= letters.len();
                x |= lx << q;
                z |= lz << q;
            }
            PauliOp::from_masks(n, x, z)
        })
    })
}

const PAULI_LETTERS: &[(u32, u32)] = &[(1, 0), (1, 1), (0, 1)];
const Z_LETTER: &[(u32, u32)] = &[(0, 1)];

impl SyndromeTable {
    pub fn build(code: &StabilizerCode, strategy: Strategy) -> Result<Self> {
        let check = code.check()?;
        let n = code.n();
        let size = 1usize << check.rows().len();
        let mut entries: Vec<Option<PauliOp>> = vec![None; size];
        entries[0] = Some(PauliOp::identity(n)?);
        let mut filled = 1;
        let mut stats = SyndromeStats {
            z_only: vec![0; n + 1],
            pauli: vec![0; n + 1],
            fresh_z_errors: vec![0; n + 1],
        };

        let mut sweep = |letters: &'static [(u32, u32)],
                         counts: &mut Vec<usize>,
                         fresh: Option<&mut Vec<usize>>| {
            let mut fresh = fresh;
            for w in 1..=n {
                if filled == size && fresh.is_none() {
                    break;
                }
                let known: Option<Vec<bool>> = fresh
                    .as_ref()
                    .map(|_| entries.iter().map(Option::is_some).collect());
                for e in errors_of_weight(n, w, letters) {
                    let s = check.syndrome_bits(&e) as usize;
                    if let (Some(f), Some(k)) = (fresh.as_deref_mut(), &known) {
                        if !k[s] {
                            f[w] += 1;
                        }
                    }
                    if entries[s].is_none() {
                        entries[s] = Some(e);
                        counts[w] += 1;
                        filled += 1;
                    }
                }
            }
        };

        if strategy == Strategy::PhaseFlipFirst {
            sweep(Z_LETTER, &mut stats.z_only, Some(&mut stats.fresh_z_errors));
        }
        sweep(PAULI_LETTERS, &mut stats.pauli, None);

        let entries = entries
            .into_iter()
            .map(|e| e.ok_or_else(|| Error::Invalid("syndrome not realizable".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            strategy,
            entries,
            stats,
        })
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn entries(&self) -> &[PauliOp] {
        &self.entries
    }

    pub fn entry(&self, syndrome: u32) -> PauliOp {
        self.entries[syndrome as usize]
    }

    pub fn stats(&self) -> &SyndromeStats {
        &self.stats
    }

    pub fn rows(&self) -> Vec<TableRow> {
        self.entries
            .iter()
            .enumerate()
            .map(|(s, e)| TableRow {
                syndrome: s as u32,
                representative: *e,
                weight: e.weight(),
                z_only: e.is_z_only(),
            })
            .collect()
    }
}

pub fn build_table(code: &StabilizerCode, strategy: Strategy) -> Result<SyndromeTable> {
    SyndromeTable::build(code, strategy)
}

pub fn error_space_count(code: &StabilizerCode, strategy: Strategy) -> Result<SyndromeStats> {
    Ok(SyndromeTable::build(code, strategy)?.stats)
}

/// Precomputed decoding context for classifying many errors.
pub struct Classifier<'a> {
    check: CheckMatrix,
    table: &'a SyndromeTable,
    n: usize,
    member: Vec<u64>,
    logicals: [PauliOp; 4],
}

impl<'a> Classifier<'a> {
    pub fn new(code: &StabilizerCode, table: &'a SyndromeTable) -> Result<Self> {
        let n = code.n();
        let check = code.check()?;
        if table.entries.len() != 1 << check.rows().len() || table.entries[0].n() != n {
            return Err(Error::SizeMismatch(n, table.entries[0].n()));
        }
        let mut member = vec![0u64; (1usize << (2 * n)).div_ceil(64)];
        for g in code.group().elements() {
            let k = Self::dense_key(n, g);
            member[k / 64] |= 1 << (k % 64);
        }
        let id = PauliOp::identity(n)?;
        Ok(Self {
            check,
            table,
            n,
            member,
            logicals: [id, code.logical_x(), code.logical_y(), code.logical_z()],
        })
    }

    fn dense_key(n: usize, p: &PauliOp) -> usize {
        p.x_bits() as usize | (p.z_bits() as usize) << n
    }

    fn in_group(&self, p: &PauliOp) -> bool {
        let k = Self::dense_key(self.n, p);
        self.member[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn classify(&self, e: &PauliOp) -> LogicalClass {
        let s = self.check.syndrome_bits(e);
        let residual = e.mul_unchecked(&self.table.entry(s));
        let mut found = None;
        for (c, l) in LogicalClass::ALL.iter().zip(&self.logicals) {
            if self.in_group(&residual.mul_unchecked(l)) {
                debug_assert!(found.is_none(), "cosets overlap");
                found = Some(*c);
                if !cfg!(debug_assertions) {
                    break;
                }
            }
        }
        found.expect("residual lies in the normalizer")
    }

    pub(crate) fn classify_masks(&self, x: u32, z: u32) -> LogicalClass {
        self.classify(&PauliOp::from_masks(self.n, x, z))
    }
}

pub fn correct_and_classify(
    code: &StabilizerCode,
    table: &SyndromeTable,
    e: &PauliOp,
) -> Result<LogicalClass> {
    if e.n() != code.n() {
        return Err(Error::SizeMismatch(code.n(), e.n()));
    }
    Ok(Classifier::new(code, table)?.classify(e))
}
