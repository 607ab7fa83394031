#![allow(dead_code)]

use std::collections::HashMap;

use logical_noise::channel::{effective_channel_1q, effective_channel_2q, NoiseKind};
use logical_noise::code::get_code;
use logical_noise::decoder::{build_table, LogicalClass, Strategy};
use logical_noise::poly::{rat, Poly};

pub use Strategy::{MinWeightPauli as STD, PhaseFlipFirst as ADA};

/// One published logical error polynomial and the setting that produces it.
pub struct Golden {
    pub group: &'static str,
    pub code: &'static str,
    pub strategy: Strategy,
    pub kind: NoiseKind,
    /// Entries that must all equal `expected`, e.g. `["X", "Y"]` or `["IX"]`.
    pub classes: Vec<&'static str>,
    pub expected: Poly,
}

/// Sum of `coefficient * p^i (1 - p)^(n - i)`, with integer coefficients.
pub fn deph(n: usize, terms: &[(usize, i64)]) -> Poly {
    let t: Vec<_> = terms.iter().map(|&(i, c)| (i, rat(c, 1))).collect();
    Poly::mixed_basis(n, &rat(1, 1), &t)
}

/// Sum of `num/den * p^i (1 - c p)^(n - i)`.
pub fn mixed(n: usize, c: (i64, i64), terms: &[(usize, i64, i64)]) -> Poly {
    let t: Vec<_> = terms.iter().map(|&(i, a, b)| (i, rat(a, b))).collect();
    Poly::mixed_basis(n, &rat(c.0, c.1), &t)
}

pub fn dep1(n: usize, terms: &[(usize, i64, i64)]) -> Poly {
    mixed(n, (3, 4), terms)
}

pub fn dep2(n: usize, terms: &[(usize, i64, i64)]) -> Poly {
    mixed(n, (15, 16), terms)
}

fn g(
    group: &'static str,
    code: &'static str,
    strategy: Strategy,
    kind: NoiseKind,
    classes: &[&'static str],
    expected: Poly,
) -> Golden {
    Golden {
        group,
        code,
        strategy,
        kind,
        classes: classes.to_vec(),
        expected,
    }
}

const SINGLE: [&str; 6] = ["IX", "IY", "IZ", "XI", "YI", "ZI"];
const DOUBLE: [&str; 9] = ["XX", "XY", "XZ", "YX", "YY", "YZ", "ZX", "ZY", "ZZ"];

pub fn goldens() -> Vec<Golden> {
    use NoiseKind::*;
    let mut v = Vec::new();

    // Three-qubit repetition codes.
    v.push(g(
        "3-qubit dephasing",
        "bit3",
        STD,
        Dephasing1Q,
        &["Z"],
        deph(3, &[(3, 1), (1, 3)]),
    ));
    v.push(g(
        "3-qubit dephasing",
        "bit3",
        ADA,
        Dephasing1Q,
        &["Z"],
        deph(3, &[(3, 1), (1, 3)]),
    ));
    v.push(g(
        "3-qubit dephasing",
        "phase3",
        ADA,
        Dephasing1Q,
        &["X"],
        deph(3, &[(3, 1), (2, 3)]),
    ));
    for code in ["bit3", "phase3"] {
        v.push(g(
            "3-qubit depolarizing",
            code,
            STD,
            Depolarizing1Q,
            &["X", "Y"],
            dep1(3, &[(3, 5, 32), (2, 3, 8)]),
        ));
    }
    v.push(g(
        "3-qubit depolarizing",
        "bit3",
        STD,
        Depolarizing1Q,
        &["Z"],
        dep1(3, &[(3, 1, 16), (2, 3, 8), (1, 3, 2)]),
    ));
    v.push(g(
        "3-qubit depolarizing",
        "phase3",
        STD,
        Depolarizing1Q,
        &["Z"],
        dep1(3, &[(3, 1, 16), (2, 3, 8), (1, 3, 2)]),
    ));
    for code in ["bit3", "phase3"] {
        v.push(g(
            "3-qubit two-qubit depolarizing",
            code,
            STD,
            Depolarizing2Q,
            &["IX", "IY", "XI", "XZ", "YI", "YZ", "ZX", "ZY"],
            dep2(3, &[(3, 55, 1024), (2, 9, 64)]),
        ));
        v.push(g(
            "3-qubit two-qubit depolarizing",
            code,
            STD,
            Depolarizing2Q,
            &["IZ", "ZI", "ZZ"],
            dep2(3, &[(3, 5, 128), (2, 21, 64), (1, 3, 4)]),
        ));
        v.push(g(
            "3-qubit two-qubit depolarizing",
            code,
            STD,
            Depolarizing2Q,
            &["XX", "XY", "YX", "YY"],
            dep2(3, &[(3, 61, 1024), (2, 3, 64)]),
        ));
    }

    // Five-qubit code.
    v.push(g(
        "five-qubit",
        "five",
        ADA,
        Dephasing1Q,
        &["Z"],
        deph(5, &[(5, 1), (4, 5), (3, 10)]),
    ));
    v.push(g(
        "five-qubit",
        "five",
        ADA,
        Dephasing1Q,
        &["X", "Y"],
        Poly::zero(),
    ));
    v.push(g(
        "five-qubit",
        "five",
        STD,
        Depolarizing1Q,
        &["X", "Y", "Z"],
        dep1(5, &[(5, 33, 512), (4, 45, 128), (3, 35, 32), (2, 15, 8)]),
    ));
    v.push(g(
        "five-qubit",
        "five",
        STD,
        Depolarizing2Q,
        &SINGLE,
        dep2(
            5,
            &[
                (5, 23703, 524288),
                (4, 7995, 32768),
                (3, 965, 2048),
                (2, 105, 128),
            ],
        ),
    ));
    v.push(g(
        "five-qubit",
        "five",
        STD,
        Depolarizing2Q,
        &DOUBLE,
        dep2(
            5,
            &[
                (5, 23763, 524288),
                (4, 7815, 32768),
                (3, 1145, 2048),
                (2, 45, 128),
            ],
        ),
    ));

    // Steane code.
    let steane_deph = deph(7, &[(7, 1), (6, 7), (4, 28), (3, 7), (2, 21)]);
    v.push(g(
        "Steane",
        "steane",
        STD,
        Dephasing1Q,
        &["Z"],
        steane_deph.clone(),
    ));
    v.push(g("Steane", "steane", ADA, Dephasing1Q, &["Z"], steane_deph));
    v.push(g(
        "Steane",
        "steane",
        STD,
        Depolarizing1Q,
        &["X", "Y", "Z"],
        dep1(
            7,
            &[
                (7, 575, 16384),
                (6, 1225, 4096),
                (5, 637, 512),
                (4, 371, 128),
                (3, 231, 64),
                (2, 49, 16),
            ],
        ),
    ));
    v.push(g(
        "Steane",
        "steane",
        STD,
        Depolarizing2Q,
        &SINGLE,
        dep2(
            7,
            &[
                (7, 10675163, 268435456),
                (6, 4992997, 16777216),
                (5, 494551, 524288),
                (4, 55685, 32768),
                (3, 8199, 4096),
                (2, 385, 256),
            ],
        ),
    ));
    v.push(g(
        "Steane",
        "steane",
        STD,
        Depolarizing2Q,
        &DOUBLE,
        dep2(
            7,
            &[
                (7, 10685447, 268435456),
                (6, 4964985, 16777216),
                (5, 505843, 524288),
                (4, 54425, 32768),
                (3, 6115, 4096),
                (2, 133, 256),
            ],
        ),
    ));

    // Shor code.
    v.push(g(
        "Shor",
        "shor9",
        ADA,
        Dephasing1Q,
        &["X"],
        deph(
            9,
            &[
                (9, 1),
                (8, 9),
                (7, 9),
                (6, 57),
                (5, 27),
                (4, 99),
                (3, 27),
                (2, 27),
            ],
        ),
    ));
    v.push(g(
        "Shor",
        "shor9",
        ADA,
        Dephasing1Q,
        &["Y", "Z"],
        Poly::zero(),
    ));
    v.push(g(
        "Shor",
        "shor9",
        STD,
        Depolarizing1Q,
        &["X"],
        dep1(
            9,
            &[
                (9, 4843, 262144),
                (8, 14571, 65536),
                (7, 20259, 16384),
                (6, 15387, 4096),
                (5, 7065, 1024),
                (4, 2601, 256),
                (3, 729, 64),
                (2, 81, 16),
            ],
        ),
    ));
    v.push(g(
        "Shor",
        "shor9",
        STD,
        Depolarizing1Q,
        &["Y"],
        dep1(
            9,
            &[
                (9, 1447, 65536),
                (8, 1791, 8192),
                (7, 4437, 4096),
                (6, 987, 256),
                (5, 2313, 256),
                (4, 315, 32),
                (3, 27, 16),
            ],
        ),
    ));
    v.push(g(
        "Shor",
        "shor9",
        STD,
        Depolarizing1Q,
        &["Z"],
        dep1(
            9,
            &[
                (9, 161, 8192),
                (8, 3609, 16384),
                (7, 2439, 2048),
                (6, 3903, 1024),
                (5, 477, 64),
                (4, 639, 64),
                (3, 75, 8),
                (2, 9, 4),
            ],
        ),
    ));

    // Nine-qubit surface code.
    v.push(g(
        "surface",
        "surface9",
        ADA,
        Dephasing1Q,
        &["Z"],
        deph(
            9,
            &[
                (9, 1),
                (8, 9),
                (7, 18),
                (6, 28),
                (5, 69),
                (4, 57),
                (3, 56),
                (2, 18),
            ],
        ),
    ));
    v.push(g(
        "surface",
        "surface9",
        STD,
        Depolarizing1Q,
        &["X"],
        dep1(
            9,
            &[
                (9, 2493, 131072),
                (8, 7263, 32768),
                (7, 9945, 8192),
                (6, 7731, 2048),
                (5, 3687, 512),
                (4, 1293, 128),
                (3, 323, 32),
                (2, 33, 8),
            ],
        ),
    ));
    v.push(g(
        "surface",
        "surface9",
        STD,
        Depolarizing1Q,
        &["Y"],
        dep1(
            9,
            &[
                (9, 1397, 65536),
                (8, 1791, 8192),
                (7, 4587, 4096),
                (6, 987, 256),
                (5, 2163, 256),
                (4, 315, 32),
                (3, 77, 16),
            ],
        ),
    ));
    v.push(g(
        "surface",
        "surface9",
        STD,
        Depolarizing1Q,
        &["Z"],
        dep1(
            9,
            &[
                (9, 1249, 65536),
                (8, 1815, 8192),
                (7, 4967, 4096),
                (6, 967, 256),
                (5, 1847, 256),
                (4, 323, 32),
                (3, 161, 16),
                (2, 4, 1),
            ],
        ),
    ));

    // Eleven-qubit code.
    v.push(g(
        "eleven-qubit",
        "eleven",
        ADA,
        Dephasing1Q,
        &["Z"],
        deph(
            11,
            &[
                (11, 1),
                (10, 11),
                (9, 55),
                (8, 146),
                (7, 202),
                (6, 263),
                (5, 199),
                (4, 128),
                (3, 19),
            ],
        ),
    ));
    v.push(g(
        "eleven-qubit",
        "eleven",
        ADA,
        Dephasing1Q,
        &["X", "Y"],
        Poly::zero(),
    ));
    v.push(g(
        "eleven-qubit",
        "eleven",
        STD,
        Depolarizing1Q,
        &["X"],
        dep1(
            11,
            &[
                (11, 22031, 2097152),
                (10, 159895, 1048576),
                (9, 535, 512),
                (8, 17169, 4096),
                (7, 44055, 4096),
                (6, 40923, 2048),
                (5, 1829, 64),
                (4, 913, 32),
                (3, 667, 32),
                (2, 27, 16),
            ],
        ),
    ));
    v.push(g(
        "eleven-qubit",
        "eleven",
        STD,
        Depolarizing1Q,
        &["Y"],
        dep1(
            11,
            &[
                (11, 11545, 1048576),
                (10, 80147, 524288),
                (9, 134191, 131072),
                (8, 136551, 32768),
                (7, 90279, 8192),
                (6, 41913, 2048),
                (5, 14365, 512),
                (4, 3277, 128),
                (3, 475, 32),
            ],
        ),
    ));
    v.push(g(
        "eleven-qubit",
        "eleven",
        STD,
        Depolarizing1Q,
        &["Z"],
        dep1(
            11,
            &[
                (11, 11547, 1048576),
                (10, 80139, 524288),
                (9, 134183, 131072),
                (8, 136575, 32768),
                (7, 90279, 8192),
                (6, 41889, 2048),
                (5, 14373, 512),
                (4, 3285, 128),
                (3, 471, 32),
            ],
        ),
    ));

    // Nonadaptive dephasing.
    v.push(g(
        "nonadaptive",
        "five",
        STD,
        Dephasing1Q,
        &["X", "Y"],
        deph(5, &[(3, 5), (2, 5)]),
    ));
    v.push(g(
        "nonadaptive",
        "five",
        STD,
        Dephasing1Q,
        &["Z"],
        deph(5, &[(5, 1), (4, 5)]),
    ));
    v.push(g(
        "nonadaptive",
        "eleven",
        STD,
        Dephasing1Q,
        &["X"],
        deph(
            11,
            &[(8, 32), (7, 53), (6, 96), (5, 92), (4, 74), (3, 47), (2, 2)],
        ),
    ));
    v.push(g(
        "nonadaptive",
        "eleven",
        STD,
        Dephasing1Q,
        &["Y"],
        deph(
            11,
            &[(9, 2), (8, 47), (7, 74), (6, 92), (5, 96), (4, 53), (3, 32)],
        ),
    ));
    v.push(g(
        "nonadaptive",
        "eleven",
        STD,
        Dephasing1Q,
        &["Z"],
        deph(
            11,
            &[
                (11, 1),
                (10, 11),
                (9, 53),
                (8, 40),
                (7, 107),
                (6, 113),
                (5, 161),
                (4, 96),
                (3, 46),
            ],
        ),
    ));
    v
}

/// Computes every channel the goldens need once and looks entries up by label.
pub struct ChannelCache {
    map: HashMap<(String, Strategy, NoiseKind), Vec<(String, Poly)>>,
}

impl ChannelCache {
    pub fn new() -> Self {
        Self {
            map: HashMap::new(),
        }
    }

    pub fn entry(&mut self, code: &str, strategy: Strategy, kind: NoiseKind, class: &str) -> Poly {
        let key = (code.to_string(), strategy, kind);
        let entries = self.map.entry(key).or_insert_with(|| {
            let c = get_code(code).unwrap();
            let t = build_table(&c, strategy).unwrap();
            match kind {
                NoiseKind::Depolarizing2Q => effective_channel_2q(&c, &t)
                    .unwrap()
                    .entries()
                    .into_iter()
                    .map(|(k, p)| (k, p.clone()))
                    .collect(),
                _ => {
                    let ch = effective_channel_1q(&c, &t, kind).unwrap();
                    LogicalClass::ALL
                        .iter()
                        .map(|&k| (k.to_string(), ch.get(k).clone()))
                        .collect()
                }
            }
        });
        entries
            .iter()
            .find(|(k, _)| k == class)
            .map(|(_, p)| p.clone())
            .unwrap()
    }
}

/// Checks one golden; returns the failing classes.
pub fn check_golden(cache: &mut ChannelCache, gd: &Golden) -> Vec<String> {
    gd.classes
        .iter()
        .filter(|c| cache.entry(gd.code, gd.strategy, gd.kind, c) != gd.expected)
        .map(|c| format!("{} {:?} {} λ_{}", gd.code, gd.strategy, gd.kind, c))
        .collect()
}
