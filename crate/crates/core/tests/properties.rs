mod common;

use common::{ADA, STD};
use logical_noise::channel::{
    effective_channel_1q, effective_channel_2q, effective_channel_2q_naive, NoiseKind,
};
use logical_noise::code::{get_code, StabilizerCode, CATALOG};
use logical_noise::decoder::{
    build_table, correct_and_classify, Classifier, LogicalClass, Strategy as Decoding,
};
use logical_noise::pauli::{enumerate_group, PauliOp};
use logical_noise::poly::Poly;
use proptest::prelude::*;

fn pauli(n: usize) -> impl Strategy<Value = PauliOp> {
    let mask = (1u32 << n) - 1;
    (any::<u32>(), any::<u32>())
        .prop_map(move |(x, z)| PauliOp::new(n, x & mask, z & mask).unwrap())
}

fn code_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(CATALOG.to_vec())
}

fn small_code_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "bit3", "phase3", "five", "steane", "surface9", "shor9",
    ])
}

fn random_stabilizer(code: &StabilizerCode, pick: u64) -> PauliOp {
    let elements = code.group().elements();
    elements[(pick % elements.len() as u64) as usize]
}

/// All Paulis of weight `1..=max_weight` on `n` qubits.
fn low_weight(n: usize, max_weight: u32) -> impl Iterator<Item = PauliOp> {
    (0u64..1 << (2 * n)).filter_map(move |k| {
        let (x, z) = ((k as u32) & ((1 << n) - 1), (k >> n) as u32);
        let w = (x | z).count_ones();
        (w >= 1 && w <= max_weight).then(|| PauliOp::new(n, x, z).unwrap())
    })
}

proptest! {
    #[test]
    fn commutation_is_symmetric((a, b) in (pauli(9), pauli(9))) {
        prop_assert_eq!(a.commutes(&b).unwrap(), b.commutes(&a).unwrap());
        prop_assert_eq!(a.commutes(&a.mul(&a).unwrap()).unwrap(), 0);
    }

    #[test]
    fn multiplication_laws((a, b, c) in (pauli(7), pauli(7), pauli(7))) {
        let id = PauliOp::identity(7).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&id).unwrap(), a);
        prop_assert!(a.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn display_round_trips(a in pauli(11)) {
        prop_assert_eq!(a.to_string().parse::<PauliOp>().unwrap(), a);
    }

    #[test]
    fn stabilizers_are_syndrome_invisible(name in code_name(), x in any::<u32>(), z in any::<u32>(), pick in any::<u64>()) {
        let code = get_code(name).unwrap();
        let mask = (1u32 << code.n()) - 1;
        let e = PauliOp::new(code.n(), x & mask, z & mask).unwrap();
        let s = random_stabilizer(&code, pick);
        let check = code.check().unwrap();
        prop_assert_eq!(check.syndrome(&e.mul(&s).unwrap()).unwrap(), check.syndrome(&e).unwrap());
    }

    #[test]
    fn group_is_closed(name in code_name(), i in any::<u64>(), j in any::<u64>()) {
        let code = get_code(name).unwrap();
        let group = enumerate_group(code.generators()).unwrap();
        let (u, v) = (random_stabilizer(&code, i), random_stabilizer(&code, j));
        prop_assert!(group.contains(&u.mul(&v).unwrap()));
        prop_assert_eq!(group.len(), 1 << code.generators().len());
    }

    #[test]
    fn classification_ignores_stabilizers(
        name in small_code_name(),
        adaptive in any::<bool>(),
        x in any::<u32>(),
        z in any::<u32>(),
        pick in any::<u64>(),
    ) {
        let code = get_code(name).unwrap();
        let table = build_table(&code, if adaptive { ADA } else { STD }).unwrap();
        let mask = (1u32 << code.n()) - 1;
        let e = PauliOp::new(code.n(), x & mask, z & mask).unwrap();
        let s = random_stabilizer(&code, pick);
        prop_assert_eq!(
            correct_and_classify(&code, &table, &e).unwrap(),
            correct_and_classify(&code, &table, &e.mul(&s).unwrap()).unwrap()
        );
    }

    #[test]
    fn exactly_one_coset_matches(name in small_code_name(), x in any::<u32>(), z in any::<u32>()) {
        let code = get_code(name).unwrap();
        let table = build_table(&code, STD).unwrap();
        let mask = (1u32 << code.n()) - 1;
        let e = PauliOp::new(code.n(), x & mask, z & mask).unwrap();
        let residual = e.mul(&table.entry(code.check().unwrap().syndrome(&e).unwrap().bits())).unwrap();
        let logicals = [PauliOp::identity(code.n()).unwrap(), code.logical_x(), code.logical_y(), code.logical_z()];
        let hits = logicals.iter().filter(|l| code.group().contains(&residual.mul(l).unwrap())).count();
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn benefit_regime_below_physical_rate(p in 1e-4f64..0.3) {
        let five = get_code("five").unwrap();
        let deph = effective_channel_1q(&five, &build_table(&five, ADA).unwrap(), NoiseKind::Dephasing1Q).unwrap();
        prop_assert!(deph.lambda_z().eval(p) < p);
    }
}

#[test]
fn logical_operators_commute_with_generators() {
    for name in CATALOG {
        let code = get_code(name).unwrap();
        let check = code.check().unwrap();
        assert!(
            check.syndrome(&code.logical_x()).unwrap().is_trivial(),
            "{name}"
        );
        assert!(
            check.syndrome(&code.logical_z()).unwrap().is_trivial(),
            "{name}"
        );
    }
}

#[test]
fn distance_spot_checks() {
    for (name, below) in [("five", 2), ("steane", 2), ("surface9", 2), ("eleven", 2)] {
        let code = get_code(name).unwrap();
        let check = code.check().unwrap();
        for e in low_weight(code.n(), below) {
            let in_normalizer = check.syndrome(&e).unwrap().is_trivial();
            assert!(
                !in_normalizer || code.group().contains(&e),
                "{name}: logical {e} of weight {}",
                e.weight()
            );
        }
    }
    let eleven = get_code("eleven").unwrap();
    let check = eleven.check().unwrap();
    let light = low_weight(11, 3)
        .find(|e| check.syndrome(e).unwrap().is_trivial() && !eleven.group().contains(e));
    assert_eq!(light.map(|e| e.to_string()).as_deref(), Some("XIIIIXXIIII"));

    let bit3 = get_code("bit3").unwrap();
    let check = bit3.check().unwrap();
    let mut seen: Vec<u32> = (0..3)
        .map(|q| {
            check
                .syndrome(&PauliOp::single(3, q, 'X').unwrap())
                .unwrap()
                .bits()
        })
        .collect();
    assert!(seen.iter().all(|&s| s != 0));
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 3);
}

#[test]
fn tables_are_exhaustively_correct() {
    for name in CATALOG {
        let code = get_code(name).unwrap();
        let check = code.check().unwrap();
        for strategy in [STD, ADA] {
            let table = build_table(&code, strategy).unwrap();
            for (s, e) in table.entries().iter().enumerate() {
                assert_eq!(
                    check.syndrome(e).unwrap().bits() as usize,
                    s,
                    "{name} {strategy}"
                );
            }
        }
    }
}

#[test]
fn correctable_errors_decode_to_identity() {
    for (name, t) in [
        ("bit3", 0),
        ("phase3", 0),
        ("five", 1),
        ("steane", 1),
        ("surface9", 1),
        ("shor9", 1),
        ("eleven", 1),
    ] {
        let code = get_code(name).unwrap();
        let table = build_table(&code, STD).unwrap();
        let classifier = Classifier::new(&code, &table).unwrap();
        for e in low_weight(code.n(), t) {
            assert_eq!(classifier.classify(&e), LogicalClass::I, "{name}: {e}");
        }
    }
    let five = get_code("five").unwrap();
    let table = build_table(&five, ADA).unwrap();
    let classifier = Classifier::new(&five, &table).unwrap();
    for e in low_weight(5, 2).filter(PauliOp::is_z_only) {
        assert_eq!(classifier.classify(&e), LogicalClass::I, "{e}");
    }
}

#[test]
fn channels_are_normalized_and_symmetric() {
    for name in ["bit3", "phase3", "five", "steane", "surface9", "shor9"] {
        let code = get_code(name).unwrap();
        for strategy in [STD, ADA] {
            let table = build_table(&code, strategy).unwrap();
            for kind in [NoiseKind::Dephasing1Q, NoiseKind::Depolarizing1Q] {
                assert_eq!(
                    effective_channel_1q(&code, &table, kind).unwrap().total(),
                    Poly::one(),
                    "{name}"
                );
            }
        }
        if code.n() <= 7 {
            let ch = effective_channel_2q(&code, &build_table(&code, STD).unwrap()).unwrap();
            assert_eq!(ch.total(), Poly::one(), "{name}");
            for a in LogicalClass::ALL {
                for b in LogicalClass::ALL {
                    assert_eq!(ch.get(a, b), ch.get(b, a), "{name} {a}{b}");
                }
            }
        }
    }
}

#[test]
fn mask_aggregation_equals_naive_sum() {
    for name in ["bit3", "phase3"] {
        let code = get_code(name).unwrap();
        for strategy in [STD, ADA] {
            let table = build_table(&code, strategy).unwrap();
            assert_eq!(
                effective_channel_2q(&code, &table).unwrap(),
                effective_channel_2q_naive(&code, &table).unwrap(),
                "{name} {strategy}"
            );
        }
    }
}

fn channel(
    name: &str,
    strategy: Decoding,
    kind: NoiseKind,
) -> logical_noise::channel::LogicalChannel1Q {
    let code = get_code(name).unwrap();
    effective_channel_1q(&code, &build_table(&code, strategy).unwrap(), kind).unwrap()
}

#[test]
fn structural_identities() {
    for name in ["five", "steane"] {
        let ch = channel(name, STD, NoiseKind::Depolarizing1Q);
        assert_eq!(ch.lambda_x(), ch.lambda_y(), "{name}");
        assert_eq!(ch.lambda_y(), ch.lambda_z(), "{name}");
    }
    let shor = channel("shor9", STD, NoiseKind::Dephasing1Q);
    assert!(shor.lambda_y().is_zero() && shor.lambda_z().is_zero());
    assert!(shor.lambda_x().eval(0.1) > 0.0);
    let surface = channel("surface9", STD, NoiseKind::Depolarizing1Q);
    assert_ne!(surface.lambda_x(), surface.lambda_z());
    for p in [0.01, 0.05, 0.1] {
        let (x, z) = (surface.lambda_x().eval(p), surface.lambda_z().eval(p));
        assert!((x - z).abs() < 0.1 * x.max(z), "p={p}: {x} vs {z}");
    }
}
