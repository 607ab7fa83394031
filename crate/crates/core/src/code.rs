//! Stabilizer codes encoding one logical qubit, the built-in catalog, and the
//! plain-text code-definition format.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pauli::{gf2_rank, parse_sparse, CheckMatrix, GroupSet, PauliOp};

pub const CATALOG: [&str; 7] = [
    "bit3", "phase3", "five", "steane", "surface9", "shor9", "eleven",
];

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    name: String,
    n: usize,
    generators: Vec<PauliOp>,
    logical_x: PauliOp,
    logical_z: PauliOp,
    group: OnceLock<GroupSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    GeneratorCount { expected: usize, found: usize },
    SizeMismatch { expected: usize, found: usize },
    NonCommuting(usize, usize),
    Dependent,
    LogicalAnticommutes { logical: char, generator: usize },
    LogicalsCommute,
    LogicalInStabilizer(char),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GeneratorCount { expected, found } => {
                write!(f, "expected {expected} generators, found {found}")
            }
            Self::SizeMismatch { expected, found } => {
                write!(f, "operator on {found} qubits in a {expected}-qubit code")
            }
            Self::NonCommuting(i, j) => write!(f, "generators {} and {} anticommute", i + 1, j + 1),
            Self::Dependent => write!(f, "generators are dependent"),
            Self::LogicalAnticommutes { logical, generator } => {
                write!(
                    f,
                    "{logical}_L anticommutes with generator {}",
                    generator + 1
                )
            }
            Self::LogicalsCommute => write!(f, "X_L and Z_L commute"),
            Self::LogicalInStabilizer(c) => write!(f, "logical operator in S ({c}_L)"),
        }
    }
}

impl StabilizerCode {
    /// Builds a code and rejects it unless the validation report is empty.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<PauliOp>,
        logical_x: PauliOp,
        logical_z: PauliOp,
    ) -> Result<Self> {
        let code = Self::from_parts(name, generators, logical_x, logical_z);
        let report = validate_code(&code);
        if let Some(v) = report.first() {
            return Err(Error::Invalid(v.to_string()));
        }
        Ok(code)
    }

    /// Builds a code without structural validation.
    pub fn from_parts(
        name: impl Into<String>,
        generators: Vec<PauliOp>,
        logical_x: PauliOp,
        logical_z: PauliOp,
    ) -> Self {
        let n = logical_z.n();
        Self {
            name: name.into(),
            n,
            generators,
            logical_x,
            logical_z,
            group: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn generators(&self) -> &[PauliOp] {
        &self.generators
    }
    pub fn logical_x(&self) -> PauliOp {
        self.logical_x
    }
    pub fn logical_z(&self) -> PauliOp {
        self.logical_z
    }
    pub fn logical_y(&self) -> PauliOp {
        self.logical_x.mul_unchecked(&self.logical_z)
    }

    pub fn check(&self) -> Result<CheckMatrix> {
        CheckMatrix::new(self.generators.clone())
    }

    /// The stabilizer group, built on first use.
    pub fn group(&self) -> &GroupSet {
        self.group.get_or_init(|| {
            crate::pauli::enumerate_group(&self.generators).expect("validated generators")
        })
    }

    /// Prints the code in the code-definition format.
    pub fn to_code_file(&self) -> String {
        let mut out = format!("# {}\nn {}\n", self.name, self.n);
        for g in &self.generators {
            out.push_str(&format!("{g}\n"));
        }
        out.push_str(&format!("XL {}\nZL {}\n", self.logical_x, self.logical_z));
        out
    }
}

fn span_contains(generators: &[PauliOp], p: &PauliOp) -> bool {
    let mut keys: Vec<u64> = generators.iter().map(PauliOp::key).collect();
    let r = gf2_rank(keys.clone());
    keys.push(p.key());
    gf2_rank(keys) == r
}

pub fn validate_code(code: &StabilizerCode) -> Vec<Violation> {
    let n = code.n;
    let gens = &code.generators;
    let mut report = Vec::new();
    if gens.len() + 1 != n {
        report.push(Violation::GeneratorCount {
            expected: n - 1,
            found: gens.len(),
        });
    }
    for op in gens.iter().chain([&code.logical_x]) {
        if op.n() != n {
            report.push(Violation::SizeMismatch {
                expected: n,
                found: op.n(),
            });
            return report;
        }
    }
    for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            if a.symplectic(b) == 1 {
                report.push(Violation::NonCommuting(i, j));
            }
        }
    }
    if gf2_rank(gens.iter().map(PauliOp::key).collect()) != gens.len() {
        report.push(Violation::Dependent);
    }
    for (c, l) in [('X', code.logical_x), ('Z', code.logical_z)] {
        for (i, g) in gens.iter().enumerate() {
            if g.symplectic(&l) == 1 {
                report.push(Violation::LogicalAnticommutes {
                    logical: c,
                    generator: i,
                });
            }
        }
    }
    if code.logical_x.symplectic(&code.logical_z) == 0 {
        report.push(Violation::LogicalsCommute);
    }
    for (c, l) in [('X', code.logical_x), ('Z', code.logical_z)] {
        if span_contains(gens, &l) {
            report.push(Violation::LogicalInStabilizer(c));
        }
    }
    report
}

fn sparse(n: usize, gens: &[&str], xl: &str, zl: &str, name: &str) -> StabilizerCode {
    let g = gens.iter().map(|s| parse_sparse(n, s).unwrap()).collect();
    StabilizerCode::new(
        name,
        g,
        parse_sparse(n, xl).unwrap(),
        parse_sparse(n, zl).unwrap(),
    )
    .expect("catalog code is valid")
}

fn dense(gens: &[&str], xl: &str, zl: &str, name: &str) -> StabilizerCode {
    let g = gens.iter().map(|s| s.parse().unwrap()).collect();
    StabilizerCode::new(name, g, xl.parse().unwrap(), zl.parse().unwrap())
        .expect("catalog code is valid")
}

pub fn get_code(name: &str) -> Result<StabilizerCode> {
    let code = match name {
        "bit3" => dense(&["ZZI", "IZZ"], "XXX", "ZZZ", name),
        "phase3" => dense(&["XXI", "IXX"], "ZZZ", "XXX", name),
        "five" => sparse(
            5,
            &["X1Z2Z3X4", "X2Z3Z4X5", "X1X3Z4Z5", "Z1X2X4Z5"],
            "X1X2X3X4X5",
            "Z1Z2Z3Z4Z5",
            name,
        ),
        "steane" => sparse(
            7,
            &[
                "X4X5X6X7", "X2X3X6X7", "X1X3X5X7", "Z4Z5Z6Z7", "Z2Z3Z6Z7", "Z1Z3Z5Z7",
            ],
            "X1X2X3X4X5X6X7",
            "Z1Z2Z3Z4Z5Z6Z7",
            name,
        ),
        "surface9" => sparse(
            9,
            &[
                "X1X2X4X5", "Z2Z3Z5Z6", "Z4Z5Z7Z8", "X5X6X8X9", "Z1Z4", "X2X3", "X7X8", "Z6Z9",
            ],
            "X1X4X7",
            "Z1Z2Z3",
            name,
        ),
        "shor9" => sparse(
            9,
            &[
                "Z1Z2",
                "Z2Z3",
                "Z4Z5",
                "Z5Z6",
                "Z7Z8",
                "Z8Z9",
                "X1X2X3X4X5X6",
                "X4X5X6X7X8X9",
            ],
            "Z1Z2Z3Z4Z5Z6Z7Z8Z9",
            "X1X2X3X4X5X6X7X8X9",
            name,
        ),
        "eleven" => sparse(
            11,
            &[
                "Z1Z2Z3Z4Z5Z6",
                "Z1Y2X3Z7Y8X9",
                "X1Z2Y3X7Z8Y9",
                "Z4Y5X6X7Y8Z9",
                "X4Z5Y6Z7X8Y9",
                "X1X2X3X4X5X6",
                "Z4X5Y6Y7Y8Y9X10Z11",
                "X4Y5Z6Z7Z8Z9Y10X11",
                "Z1X2Y3Z7Z8Z9X10Y11",
                "Y1Z2X3Y7Y8Y9Z10X11",
            ],
            "X7X8X9X10X11",
            "Z7Z8Z9Z10Z11",
            name,
        ),
        _ => return Err(Error::UnknownCode(name.to_string())),
    };
    Ok(code)
}

/// Parses the code-definition format: `n <count>`, `n - 1` generator lines,
/// `XL <string>`, `ZL <string>`. Text after `#` is ignored.
pub fn parse_code_file(text: &str) -> Result<StabilizerCode> {
    parse_named_code_file(text, "custom")
}

pub fn parse_named_code_file(text: &str, name: &str) -> Result<StabilizerCode> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let parse_err = |line: usize, msg: String| Error::Parse { line, msg };
    let (first_line, header) = *lines
        .first()
        .ok_or_else(|| parse_err(1, "empty file".into()))?;
    let n: usize = header
        .strip_prefix("n ")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| parse_err(first_line, format!("expected `n <count>`, got {header:?}")))?;
    if !(2..=crate::pauli::MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCount(n));
    }
    let body = &lines[1..];
    let gen_lines: Vec<_> = body
        .iter()
        .take_while(|(_, l)| !l.starts_with("XL") && !l.starts_with("ZL"))
        .collect();
    if gen_lines.len() != n - 1 {
        return Err(Error::LineCount {
            expected: n - 1,
            found: gen_lines.len(),
        });
    }
    let pauli = |line: usize, s: &str| -> Result<PauliOp> {
        let op: PauliOp = s
            .parse()
            .map_err(|e: Error| parse_err(line, e.to_string()))?;
        if op.n() != n {
            return Err(parse_err(
                line,
                format!("expected {n} characters, found {}", op.n()),
            ));
        }
        Ok(op)
    };
    let generators = gen_lines
        .iter()
        .map(|(i, l)| pauli(*i, l))
        .collect::<Result<Vec<_>>>()?;
    let rest = &body[gen_lines.len()..];
    let logical = |idx: usize, tag: &str| -> Result<PauliOp> {
        let (line, l) = rest.get(idx).ok_or_else(|| {
            parse_err(
                lines.last().map_or(1, |x| x.0),
                format!("missing {tag} line"),
            )
        })?;
        let s = l
            .strip_prefix(tag)
            .ok_or_else(|| parse_err(*line, format!("expected `{tag} <string>`")))?;
        pauli(*line, s.trim())
    };
    let xl = logical(0, "XL")?;
    let zl = logical(1, "ZL")?;
    if let Some((line, _)) = rest.get(2) {
        return Err(parse_err(*line, "unexpected trailing line".into()));
    }
    StabilizerCode::new(name, generators, xl, zl)
}
