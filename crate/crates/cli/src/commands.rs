use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::sync::Arc;

use anyhow::{Context, Result};
use logical_noise::channel::{effective_channel_1q, effective_channel_2q, NoiseKind};
use logical_noise::code::{get_code, parse_named_code_file, StabilizerCode, CATALOG};
use logical_noise::decoder::{build_table, LogicalClass, Strategy};
use logical_noise::oracle::{oracle_channel_1q, oracle_channel_2q, MAX_QUBITS_1Q, MAX_QUBITS_2Q};
use logical_noise::poly::Poly;
use logical_noise::repeater::dephasing::{exact2, exact2_cutoff};
use logical_noise::repeater::waiting::avg_waiting_cutoff2;
use logical_noise::repeater::{
    mc, secret_key_rate, threshold_mu, EncodedMemory, RepeaterParams, Scheme,
};

use crate::format::{coeff, num};
use crate::{
    parse_lengths, ChannelArgs, Decoding, Noise, RateArgs, SchemeArg, Table1Args, ThresholdArgs,
    ValidateArgs,
};

pub const RATE_COLUMNS: [&str; 15] = [
    "L_km",
    "L0_km",
    "p_link",
    "tau_s",
    "alpha",
    "mu_eff",
    "mu0_eff",
    "wait_steps",
    "dephasing_factor",
    "e_z",
    "e_x",
    "skf",
    "raw_hz",
    "skr_hz",
    "mc_stderr",
];

impl From<Decoding> for Strategy {
    fn from(d: Decoding) -> Self {
        match d {
            Decoding::Standard => Strategy::MinWeightPauli,
            Decoding::Adaptive => Strategy::PhaseFlipFirst,
        }
    }
}

impl From<Noise> for NoiseKind {
    fn from(n: Noise) -> Self {
        match n {
            Noise::Dephasing => NoiseKind::Dephasing1Q,
            Noise::Depol1q => NoiseKind::Depolarizing1Q,
            Noise::Depol2q => NoiseKind::Depolarizing2Q,
        }
    }
}

fn load_code(spec: &str) -> Result<StabilizerCode> {
    if CATALOG.contains(&spec) {
        return Ok(get_code(spec)?);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).with_context(|| {
        format!(
            "{spec:?} is neither a catalog code ({}) nor a readable file",
            CATALOG.join(", ")
        )
    })?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("custom");
    parse_named_code_file(&text, name).with_context(|| format!("parsing code file {spec}"))
}

fn load_encoding(spec: &str, strategy: Decoding) -> Result<Option<Arc<EncodedMemory>>> {
    if spec == "none" {
        return Ok(None);
    }
    let code = load_code(spec)?;
    let memory = EncodedMemory::new(&code, strategy.into())
        .with_context(|| format!("encoding with {spec}"))?;
    Ok(Some(Arc::new(memory)))
}

fn open_out(path: &Path) -> Result<csv::Writer<File>> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(csv::Writer::from_writer(file))
}

fn write_channel_csv<W: Write>(
    out: W,
    entries: &[(String, &Poly)],
    eval_p: Option<f64>,
) -> Result<()> {
    let degree = entries
        .iter()
        .filter_map(|(_, p)| p.degree())
        .max()
        .unwrap_or(0);
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["class".to_string()];
    header.extend((0..=degree).map(|k| format!("p{k}")));
    if eval_p.is_some() {
        header.push("value".into());
    }
    w.write_record(&header)?;
    for (label, poly) in entries {
        let mut row = vec![label.clone()];
        row.extend((0..=degree).map(|k| coeff(poly, k)));
        if let Some(p) = eval_p {
            row.push(num(poly.eval(p)));
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn channel(args: &ChannelArgs) -> Result<()> {
    if let Some(p) = args.eval_p {
        anyhow::ensure!((0.0..=1.0).contains(&p), "--eval-p {p} outside [0, 1]");
    }
    let code = load_code(&args.code)?;
    let table = build_table(&code, args.strategy.into())?;
    if let Some(path) = &args.table_out {
        let mut w = open_out(path)?;
        w.write_record([
            "syndrome_int",
            "representative_pauli_string",
            "weight",
            "z_only_flag",
        ])?;
        for row in table.rows() {
            w.write_record([
                row.syndrome.to_string(),
                row.representative.to_string(),
                row.weight.to_string(),
                u8::from(row.z_only).to_string(),
            ])?;
        }
        w.flush()?;
    }
    let kind: NoiseKind = args.noise.into();
    let (one, two);
    let entries: Vec<(String, &Poly)> = match kind {
        NoiseKind::Depolarizing2Q => {
            two = effective_channel_2q(&code, &table)?;
            two.entries()
        }
        _ => {
            one = effective_channel_1q(&code, &table, kind)?;
            LogicalClass::ALL
                .iter()
                .map(|&c| (c.to_string(), one.get(c)))
                .collect()
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(
        out,
        "{} [{}], {} noise, {} decoding",
        code.name(),
        code.n(),
        kind,
        table.strategy()
    )?;
    for (label, poly) in &entries {
        write!(out, "λ_{label} = {poly}")?;
        if let Some(p) = args.eval_p {
            write!(out, "    [{}]", num(poly.eval(p)))?;
        }
        writeln!(out)?;
    }
    if let Some(path) = &args.out {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_channel_csv(file, &entries, args.eval_p)?;
    }
    Ok(())
}

pub fn rates(args: &RateArgs) -> Result<()> {
    let lengths = parse_lengths(&args.length)?;
    let scheme = match args.scheme {
        SchemeArg::Exact2 => Scheme::Exact2,
        SchemeArg::Sequential => Scheme::Sequential,
        SchemeArg::Mc => Scheme::SwapAsapMc {
            samples: args.samples,
            seed: args.seed,
        },
    };
    let base = RepeaterParams {
        segments: args.segments,
        length_km: lengths[0],
        p0: args.p0,
        t_c: args.tc,
        mu: args.mu,
        mu0: args.mu0.unwrap_or(args.mu),
        f0: args.f0,
        tau_clock: args.clock,
        cutoff: args.cutoff,
        encoding: None,
        scheme,
    };
    base.validate()?;
    let params = RepeaterParams {
        encoding: load_encoding(&args.encode, args.strategy)?,
        ..base
    };
    let mut rows = Vec::with_capacity(lengths.len());
    for length_km in lengths {
        let r = secret_key_rate(&RepeaterParams {
            length_km,
            ..params.clone()
        })
        .with_context(|| format!("rate at {length_km} km"))?;
        rows.push([
            num(r.length_km),
            num(r.l0_km),
            num(r.p_link),
            num(r.tau_seconds),
            num(r.alpha),
            num(r.mu_eff),
            num(r.mu0_eff),
            num(r.avg_wait_steps),
            num(r.dephasing_factor),
            num(r.e_z_bar),
            num(r.e_x_bar),
            num(r.skf),
            num(r.raw_rate_hz),
            num(r.skr_hz),
            r.mc_standard_error.map(num).unwrap_or_default(),
        ]);
    }
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => {
            Box::new(File::create(path).with_context(|| format!("creating {}", path.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(RATE_COLUMNS)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn threshold(args: &ThresholdArgs) -> Result<()> {
    anyhow::ensure!(args.segments > 0, "--segments must be positive");
    let encoding = load_encoding(&args.encode, args.strategy)?;
    let mu = threshold_mu(args.segments, encoding.as_deref());
    println!("{:.4}", mu);
    Ok(())
}

const TABLE1_SEGMENTS: [usize; 3] = [80, 800, 8000];

pub fn table1(args: &Table1Args) -> Result<()> {
    anyhow::ensure!(args.clock >= 0.0, "--clock must be nonnegative");
    let memories: [(&str, Option<Arc<EncodedMemory>>); 3] = [
        ("unencoded", None),
        ("five", load_encoding("five", Decoding::Adaptive)?),
        ("steane", load_encoding("steane", Decoding::Adaptive)?),
    ];
    let rate = |n: usize, mu: f64, t_c: f64, encoding: Option<Arc<EncodedMemory>>| {
        secret_key_rate(&RepeaterParams {
            segments: n,
            length_km: 800.0,
            p0: 1.0,
            t_c,
            mu,
            mu0: mu,
            tau_clock: args.clock,
            encoding,
            scheme: Scheme::Sequential,
            ..Default::default()
        })
    };
    let mut csv_rows = Vec::new();
    println!(
        "{:<40}{:>16}{:>16}{:>16}",
        "N", TABLE1_SEGMENTS[0], TABLE1_SEGMENTS[1], TABLE1_SEGMENTS[2]
    );
    let raw: Vec<f64> = TABLE1_SEGMENTS
        .iter()
        .map(|&n| rate(n, 1.0, 1.0, None).map(|r| r.raw_rate_hz))
        .collect::<Result<_, _>>()?;
    println!(
        "{:<40}{:>16}{:>16}{:>16}",
        "raw rate [Hz]",
        num(raw[0]),
        num(raw[1]),
        num(raw[2])
    );
    for (label, memory) in &memories {
        for mu in [0.99, 0.999] {
            for t_c in [0.001, 0.1] {
                let mut cells = Vec::new();
                for (&n, raw_hz) in TABLE1_SEGMENTS.iter().zip(&raw) {
                    let r = rate(n, mu, t_c, memory.clone())?;
                    cells.push(num(r.skr_hz));
                    csv_rows.push([
                        label.to_string(),
                        num(mu),
                        num(t_c),
                        n.to_string(),
                        num(*raw_hz),
                        num(r.skr_hz),
                    ]);
                }
                let name = format!("{label} S(mu={mu}, tc={t_c} s) [Hz]");
                println!("{name:<40}{:>16}{:>16}{:>16}", cells[0], cells[1], cells[2]);
            }
        }
    }
    if let Some(path) = &args.out {
        let mut w = open_out(path)?;
        w.write_record(["memory", "mu", "tc_s", "N", "raw_hz", "skr_hz"])?;
        for row in csv_rows {
            w.write_record(&row)?;
        }
        w.flush()?;
    }
    Ok(())
}

fn report(name: &str, ok: bool, detail: String) -> bool {
    println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

pub fn validate(args: &ValidateArgs) -> Result<bool> {
    anyhow::ensure!(args.samples >= 2, "--samples must be at least 2");
    let mut all = true;
    for name in CATALOG {
        let code = get_code(name)?;
        if code.n() > MAX_QUBITS_1Q {
            continue;
        }
        for strategy in [Strategy::MinWeightPauli, Strategy::PhaseFlipFirst] {
            let table = build_table(&code, strategy)?;
            let mut worst: f64 = 0.0;
            for kind in [NoiseKind::Dephasing1Q, NoiseKind::Depolarizing1Q] {
                let ch = effective_channel_1q(&code, &table, kind)?;
                for p in [0.01, 0.05, 0.1] {
                    let oracle = oracle_channel_1q(&code, &table, kind, p)?;
                    let engine = ch.eval(p);
                    worst = oracle
                        .iter()
                        .zip(&engine)
                        .fold(worst, |w, (a, b)| w.max((a - b).abs()));
                }
            }
            all &= report(
                &format!("oracle {name} {strategy}"),
                worst <= 1e-10,
                format!("max |Δλ| {worst:.2e}"),
            );
        }
        if code.n() <= MAX_QUBITS_2Q {
            let table = build_table(&code, Strategy::MinWeightPauli)?;
            let ch = effective_channel_2q(&code, &table)?;
            let mut worst: f64 = 0.0;
            for p in [0.01, 0.1] {
                let oracle = oracle_channel_2q(&code, &table, p)?;
                let engine = ch.eval(p);
                for (ra, rb) in oracle.iter().zip(&engine) {
                    worst = ra
                        .iter()
                        .zip(rb)
                        .fold(worst, |w, (a, b)| w.max((a - b).abs()));
                }
            }
            all &= report(
                &format!("oracle {name} two-block"),
                worst <= 1e-10,
                format!("max |Δλ| {worst:.2e}"),
            );
        }
    }
    let mut seed = args.seed;
    for p in [0.1, 0.4, 0.8] {
        for alpha in [0.01, 0.05, 0.2] {
            let est = mc::swap_asap(2, p, alpha, args.samples, seed)?.factor;
            seed += 1;
            let exact = exact2(p, alpha)?;
            let z = (est.mean - exact).abs() / est.stderr;
            let detail = format!(
                "{} vs exact {} ({z:.2} standard errors)",
                num(est.mean),
                num(exact)
            );
            all &= report(
                &format!("sampler N=2 p={p} alpha={alpha}"),
                z <= 3.0,
                detail,
            );
        }
    }
    let (p, m, alpha) = (0.3, 5, 0.02);
    let s = mc::cutoff2(p, m, alpha, args.samples, seed)?;
    let wait = avg_waiting_cutoff2(p, m)?;
    let factor = exact2_cutoff(p, alpha, m)?;
    let zw = (s.wait.mean - wait).abs() / s.wait.stderr;
    let zf = (s.factor.mean - factor).abs() / s.factor.stderr;
    let detail = format!("wait {zw:.2}, dephasing factor {zf:.2} standard errors");
    all &= report(
        &format!("sampler cutoff p={p} m={m}"),
        zw <= 3.0 && zf <= 3.0,
        detail,
    );
    Ok(all)
}
