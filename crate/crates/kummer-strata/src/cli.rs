//! Command-line front end: JSON divisor documents in, JSON reports and CSV
//! sweeps out.
//!
//! Subcommands: `analyze`, `decompose`, `count-region`, `count-p1`, `fit`,
//! `verify`. Exit codes: 0 success, 1 usage or parse error, 2 domain error
//! (reported as a JSON object `{"error", "detail"}`), 3 verification
//! failure. The `KUMMER_STRATA_THREADS` environment variable caps the worker
//! threads used by the region counter (default: available parallelism).

use crate::cone::{
    decompose, delta_objective, gamma_polygon, AmpleDivisorInput, ConeDecomposition,
    DecompositionStrategy,
};
use crate::error::Error;
use crate::lattice::{a_class, curve_class, rank_of_span, CurveLabel, DivisorClass, SubsetPair};
use crate::projective::{count_degree_d, count_p1, count_p1_naive};
use crate::rational::{format_rational, parse_rational, rat_int, Rational};
use crate::region::{
    count_region, count_region_naive, count_sweep, fit_exponent, CountSample, RegionParams,
};
use crate::strata::{closed_form_degree, first_layer_report};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

/// A divisor document: exact rational strings for `d1`, `d2` and the 4x4
/// matrix `e`, plus optional strategy, field degree, and sweep bounds.
/// Unknown fields are rejected.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorDocument {
    pub d1: String,
    pub d2: String,
    pub e: [[String; 4]; 4],
    #[serde(default)]
    pub strategy: Option<String>,
    #[serde(default)]
    pub field_degree: Option<u32>,
    #[serde(default)]
    pub sweep: Option<Vec<u64>>,
}

#[derive(Debug)]
pub struct ParsedDocument {
    pub input: AmpleDivisorInput,
    pub strategy: Option<DecompositionStrategy>,
    pub field_degree: Option<u32>,
    pub sweep: Option<Vec<u64>>,
}

impl DivisorDocument {
    pub fn parse(&self) -> Result<ParsedDocument, String> {
        let d1 = parse_rational(&self.d1).map_err(|e| format!("field d1: {e}"))?;
        let d2 = parse_rational(&self.d2).map_err(|e| format!("field d2: {e}"))?;
        let mut e: [[Rational; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| Rational::from_integer(0.into())));
        for (i, row) in self.e.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                e[i][j] = parse_rational(cell)
                    .map_err(|err| format!("field e[{}][{}]: {err}", i + 1, j + 1))?;
            }
        }
        let strategy = self
            .strategy
            .as_deref()
            .map(|s| {
                s.parse::<DecompositionStrategy>()
                    .map_err(|e| format!("field strategy: {e}"))
            })
            .transpose()?;
        if let Some(n) = self.field_degree {
            if n == 0 {
                return Err("field field_degree: must be at least 1".to_owned());
            }
        }
        if let Some(sweep) = &self.sweep {
            if !is_strictly_increasing(sweep) {
                return Err(
                    "field sweep: bounds must be positive and strictly increasing".to_owned(),
                );
            }
        }
        Ok(ParsedDocument {
            input: AmpleDivisorInput::new(d1, d2, e),
            strategy,
            field_degree: self.field_degree,
            sweep: self.sweep.clone(),
        })
    }
}

fn is_strictly_increasing(list: &[u64]) -> bool {
    list.iter().all(|&b| b >= 1) && list.windows(2).all(|w| w[0] < w[1])
}

#[derive(Parser)]
#[command(
    name = "kummer-strata",
    version,
    about = "Stratification data for Kummer surfaces of products of elliptic curves",
    long_about = "Exact cone decompositions, counting exponents, and first-layer reports for \
                  divisors on Kummer surfaces of products of elliptic curves, with brute-force \
                  lattice-point verification of the exponents."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full first-layer report for a divisor document (JSON on stdout)
    Analyze {
        /// Path to a JSON divisor document
        path: PathBuf,
        /// canonical, singleton, or optimize (overrides the document)
        #[arg(long)]
        strategy: Option<String>,
        /// Number-field degree parameter N >= 1 (overrides the document)
        #[arg(long = "field-degree")]
        field_degree: Option<u32>,
    },
    /// Cone decomposition of a divisor document (JSON on stdout)
    Decompose {
        /// Path to a JSON divisor document
        path: PathBuf,
        /// canonical, singleton, or optimize (overrides the document)
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Exact lattice-point counts of the height region (CSV on stdout)
    CountRegion {
        #[arg(long, allow_hyphen_values = true)]
        g1: String,
        #[arg(long, allow_hyphen_values = true)]
        g2: String,
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
        #[arg(long, allow_hyphen_values = true)]
        c2: String,
        /// Comma-separated strictly increasing height bounds
        #[arg(long = "B-list", value_delimiter = ',')]
        b_list: Vec<u64>,
    },
    /// Counts of projective-line points of bounded height (CSV on stdout)
    CountP1 {
        /// Comma-separated strictly increasing height bounds
        #[arg(long = "B-list", value_delimiter = ',')]
        b_list: Vec<u64>,
    },
    /// Log-log slope fit of a B,count CSV read from stdin (JSON on stdout)
    Fit {
        /// Fraction of the largest-B samples to fit, in (0, 1]
        #[arg(long, default_value_t = 0.5)]
        tail: f64,
    },
    /// Run an invariant suite: lattice, decomposition, region, schanuel, all
    Verify {
        suite: String,
        /// Seed for the randomized property checks
        #[arg(long, default_value_t = 1729)]
        seed: u64,
    },
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Same as [`run`] with explicit arguments (first element is the program
/// name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.cmd {
        Cmd::Analyze {
            path,
            strategy,
            field_degree,
        } => cmd_analyze(&path, strategy, field_degree),
        Cmd::Decompose { path, strategy } => cmd_decompose(&path, strategy),
        Cmd::CountRegion {
            g1,
            g2,
            c1,
            c2,
            b_list,
        } => cmd_count_region(&g1, &g2, &c1, &c2, &b_list),
        Cmd::CountP1 { b_list } => cmd_count_p1(&b_list),
        Cmd::Fit { tail } => cmd_fit(tail),
        Cmd::Verify { suite, seed } => cmd_verify(&suite, seed),
    }
}

fn domain_error(err: &Error) -> i32 {
    let obj = serde_json::json!({ "error": err.code(), "detail": err.to_string() });
    println!("{obj}");
    2
}

fn load_document(path: &PathBuf) -> Result<ParsedDocument, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: DivisorDocument =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    doc.parse().map_err(|e| format!("{}: {e}", path.display()))
}

fn resolve_strategy(
    flag: Option<String>,
    doc: Option<DecompositionStrategy>,
) -> Result<DecompositionStrategy, String> {
    match flag {
        Some(s) => s.parse::<DecompositionStrategy>(),
        None => Ok(doc.unwrap_or(DecompositionStrategy::Canonical)),
    }
}

fn cmd_analyze(path: &PathBuf, strategy: Option<String>, field_degree: Option<u32>) -> i32 {
    let doc = match load_document(path) {
        Ok(doc) => doc,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let strategy = match resolve_strategy(strategy, doc.strategy) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let n = field_degree.or(doc.field_degree).unwrap_or(1);
    if n == 0 {
        eprintln!("error: field degree must be at least 1");
        return 1;
    }
    let report = match first_layer_report(&doc.input, strategy, n) {
        Ok(r) => r,
        Err(err) => return domain_error(&err),
    };
    let mut value = serde_json::to_value(&report).expect("report serializes");
    if let Some(sweep) = &doc.sweep {
        if !sweep.is_empty() {
            let params = RegionParams::new(
                report.gamma1.clone(),
                report.gamma2.clone(),
                report.c1.clone(),
                report.c2.clone(),
                sweep[0],
            )
            .expect("report fiber degrees are positive");
            let swept = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
                count_sweep(&params, sweep)
            }));
            match swept {
                Ok(Ok(samples)) => {
                    value["region_sweep"] =
                        serde_json::to_value(&samples).expect("samples serialize");
                }
                Ok(Err(err)) => return domain_error(&err),
                Err(_) => {
                    eprintln!("error: sweep bounds are outside the supported counting range");
                    return 1;
                }
            }
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("report serializes")
    );
    0
}

#[derive(Serialize)]
struct DecompositionJson {
    entries: Vec<DecompositionEntryJson>,
    c1: String,
    c2: String,
}

#[derive(Serialize)]
struct DecompositionEntryJson {
    #[serde(rename = "S")]
    s: u8,
    #[serde(rename = "T")]
    t: u8,
    a: String,
}

fn decomposition_json(d: &ConeDecomposition) -> DecompositionJson {
    DecompositionJson {
        entries: d
            .weights()
            .iter()
            .map(|(pair, v)| DecompositionEntryJson {
                s: pair.s_mask(),
                t: pair.t_mask(),
                a: format_rational(v),
            })
            .collect(),
        c1: format_rational(&d.c1),
        c2: format_rational(&d.c2),
    }
}

fn cmd_decompose(path: &PathBuf, strategy: Option<String>) -> i32 {
    let doc = match load_document(path) {
        Ok(doc) => doc,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let strategy = match resolve_strategy(strategy, doc.strategy) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    match decompose(&doc.input, strategy) {
        Ok(d) => {
            let json = decomposition_json(&d);
            println!(
                "{}",
                serde_json::to_string_pretty(&json).expect("decomposition serializes")
            );
            0
        }
        Err(err) => domain_error(&err),
    }
}

fn cmd_count_region(g1: &str, g2: &str, c1: &str, c2: &str, b_list: &[u64]) -> i32 {
    let parsed: Result<Vec<Rational>, _> =
        [g1, g2, c1, c2].iter().map(|s| parse_rational(s)).collect();
    let parsed = match parsed {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    if !is_strictly_increasing(b_list) {
        eprintln!("error: --B-list must be positive and strictly increasing");
        return 1;
    }
    let [g1, g2, c1, c2] = <[Rational; 4]>::try_from(parsed).expect("four values");
    let params = match RegionParams::new(g1, g2, c1, c2, b_list.first().copied().unwrap_or(1)) {
        Ok(p) => p,
        Err(err) => return domain_error(&err),
    };
    // Absurd-scale parameters (counts beyond u64) abort inside the counter;
    // keep the CLI's no-panic contract by catching that and exiting cleanly.
    let swept = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        count_sweep(&params, b_list)
    }));
    match swept {
        Ok(Ok(samples)) => {
            print!("{}", sweep_csv(&samples));
            0
        }
        Ok(Err(err)) => domain_error(&err),
        Err(_) => {
            eprintln!("error: parameters are outside the supported counting range");
            1
        }
    }
}

/// The shared CSV sweep format: header `B,count`, `\n` endings, no quoting.
pub fn sweep_csv(samples: &[CountSample]) -> String {
    let mut out = String::from("B,count\n");
    for s in samples {
        out.push_str(&format!("{},{}\n", s.b, s.count));
    }
    out
}

fn cmd_count_p1(b_list: &[u64]) -> i32 {
    if !is_strictly_increasing(b_list) {
        eprintln!("error: --B-list must be positive and strictly increasing");
        return 1;
    }
    let samples: Vec<CountSample> = b_list
        .iter()
        .map(|&b| CountSample {
            b,
            count: count_p1(b),
        })
        .collect();
    print!("{}", sweep_csv(&samples));
    0
}

/// Parses the shared CSV format; the `B,count` header is optional.
pub fn parse_sweep_csv(text: &str) -> Result<Vec<CountSample>, String> {
    let mut samples = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (idx == 0 && line == "B,count") {
            continue;
        }
        let Some((b, count)) = line.split_once(',') else {
            return Err(format!("line {}: expected `B,count`", idx + 1));
        };
        let b: u64 = b
            .trim()
            .parse()
            .map_err(|e| format!("line {}: bad B value: {e}", idx + 1))?;
        let count: u64 = count
            .trim()
            .parse()
            .map_err(|e| format!("line {}: bad count value: {e}", idx + 1))?;
        samples.push(CountSample { b, count });
    }
    Ok(samples)
}

fn cmd_fit(tail: f64) -> i32 {
    if !(tail > 0.0 && tail <= 1.0) {
        eprintln!("error: --tail must lie in (0, 1]");
        return 1;
    }
    let mut text = String::new();
    if let Err(e) = std::io::stdin().read_to_string(&mut text) {
        eprintln!("error: cannot read stdin: {e}");
        return 1;
    }
    let samples = match parse_sweep_csv(&text) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    match fit_exponent(&samples, tail) {
        Ok(fit) => {
            println!("{}", serde_json::to_string(&fit).expect("fit serializes"));
            0
        }
        Err(err) => domain_error(&err),
    }
}

struct CheckRunner {
    failures: usize,
}

impl CheckRunner {
    fn new() -> CheckRunner {
        CheckRunner { failures: 0 }
    }

    fn check(&mut self, name: &str, pass: bool) {
        if pass {
            println!("{name} ... ok");
        } else {
            self.failures += 1;
            println!("{name} ... FAIL");
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let den = rng.random_range(1..=6i64);
    let num = rng.random_range(lo * den..=hi * den);
    Rational::new(num.into(), den.into())
}

/// A random divisor with `e_ij` in `[-5, -1/6]` and `d_i` in `[-5, 5]`.
fn random_cone_input(rng: &mut ChaCha8Rng) -> AmpleDivisorInput {
    let d1 = random_rational(rng, -5, 5);
    let d2 = random_rational(rng, -5, 5);
    let e = std::array::from_fn(|_| {
        std::array::from_fn(|_| {
            let den = rng.random_range(1..=6i64);
            let num = rng.random_range(1..=5 * den);
            Rational::new((-num).into(), den.into())
        })
    });
    AmpleDivisorInput::new(d1, d2, e)
}

fn random_class(rng: &mut ChaCha8Rng) -> DivisorClass {
    DivisorClass::new(
        random_rational(rng, -5, 5),
        random_rational(rng, -5, 5),
        std::array::from_fn(|_| std::array::from_fn(|_| random_rational(rng, -5, 5))),
    )
}

fn verify_lattice(runner: &mut CheckRunner, seed: u64) {
    let mut classes: Vec<DivisorClass> = SubsetPair::all().map(a_class).collect();
    classes.push(curve_class(CurveLabel::Fiber1));
    classes.push(curve_class(CurveLabel::Fiber2));
    runner.check(
        "rank of span(all 225 A_{S,T}, F1, F2) = 18",
        rank_of_span(&classes) == 18,
    );

    runner.check(
        "self-intersection C.C = -2 for the 24 distinguished curves",
        CurveLabel::all_curves().all(|l| {
            let c = curve_class(l);
            c.pair(&c) == rat_int(-2)
        }),
    );

    let f1 = curve_class(CurveLabel::Fiber1);
    let f2 = curve_class(CurveLabel::Fiber2);
    let mut table_ok = true;
    for i in 1..=4u8 {
        let li = curve_class(CurveLabel::L(i));
        let mi = curve_class(CurveLabel::M(i));
        table_ok &= f1.pair(&li) == rat_int(0) && f2.pair(&mi) == rat_int(0);
        table_ok &= f1.pair(&mi) == rat_int(1) && f2.pair(&li) == rat_int(1);
        for j in 1..=4u8 {
            table_ok &= li.pair(&curve_class(CurveLabel::M(j))) == rat_int(0);
            if i != j {
                table_ok &= li.pair(&curve_class(CurveLabel::L(j))) == rat_int(0);
                table_ok &= mi.pair(&curve_class(CurveLabel::M(j))) == rat_int(0);
            }
        }
    }
    runner.check("intersection table of F1, F2, L_i, M_j", table_ok);

    let mut fibers_ok = true;
    for i in 1..=4u8 {
        let mut sum = curve_class(CurveLabel::L(i)).scaled(&rat_int(2));
        for j in 1..=4u8 {
            sum = &sum + &curve_class(CurveLabel::E(i, j));
        }
        fibers_ok &= sum == f1;
        let mut sum = curve_class(CurveLabel::M(i)).scaled(&rat_int(2));
        for j in 1..=4u8 {
            sum = &sum + &curve_class(CurveLabel::E(j, i));
        }
        fibers_ok &= sum == f2;
    }
    runner.check("fiber decompositions F = sum E + 2C", fibers_ok);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bilinear_ok = true;
    for _ in 0..40 {
        let (a, b, c) = (
            random_class(&mut rng),
            random_class(&mut rng),
            random_class(&mut rng),
        );
        let k = random_rational(&mut rng, -5, 5);
        bilinear_ok &= a.pair(&b) == b.pair(&a);
        bilinear_ok &= (&a + &b).pair(&c) == a.pair(&c) + b.pair(&c);
        bilinear_ok &= a.scaled(&k).pair(&c) == k * a.pair(&c);
    }
    runner.check(
        "pairing is symmetric and bilinear on random classes",
        bilinear_ok,
    );
}

fn verify_decomposition(runner: &mut CheckRunner, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let strategies = [
        DecompositionStrategy::Canonical,
        DecompositionStrategy::Singleton,
        DecompositionStrategy::OptimizeDenominator,
    ];
    let mut round_trip_ok = true;
    let mut cells_ok = true;
    let mut sums_ok = true;
    let mut dominance_ok = true;
    let mut degrees_ok = true;
    for _ in 0..10 {
        let input = random_cone_input(&mut rng);
        let mut deltas = Vec::new();
        for strategy in strategies {
            let d = decompose(&input, strategy).expect("inputs lie in the cone");
            round_trip_ok &= d.reconstruct() == input.class();
            for m in 1..=4u8 {
                for n in 1..=4u8 {
                    cells_ok &=
                        d.cell_weight(m, n) == -&input.e[(m - 1) as usize][(n - 1) as usize];
                }
            }
            let (g1, g2) = d.gammas();
            sums_ok &= &g1 + &d.c1 == input.d1 && &g2 + &d.c2 == input.d2;
            deltas.push(delta_objective(&input.d1, &input.d2, &g1, &g2));
            degrees_ok &= CurveLabel::all_curves()
                .all(|l| closed_form_degree(&d, l) == d.reconstruct().degree(l));
        }
        dominance_ok &= deltas[2] >= deltas[0] && deltas[2] >= deltas[1];
    }
    runner.check(
        "round-trip: reconstruct(decompose(D)) = D for all strategies",
        round_trip_ok,
    );
    runner.check("cell identity: sum of covering weights = -e_mn", cells_ok);
    runner.check("gamma_i + c_i = d_i for every strategy", sums_ok);
    runner.check(
        "optimizer dominance: delta(optimize) >= delta(others)",
        dominance_ok,
    );
    runner.check("closed-form degrees match pairing degrees", degrees_ok);

    let mut polygon_ok = true;
    for _ in 0..3 {
        let input = random_cone_input(&mut rng);
        let polygon = gamma_polygon(&input).expect("inputs lie in the cone");
        for strategy in [
            DecompositionStrategy::Canonical,
            DecompositionStrategy::Singleton,
        ] {
            let d = decompose(&input, strategy).expect("inputs lie in the cone");
            let (g1, g2) = d.gammas();
            polygon_ok &= polygon.contains(&g1, &g2);
        }
    }
    runner.check(
        "gamma polygon contains the gammas of both fixed strategies",
        polygon_ok,
    );
}

/// Parameter grid covering the three closed-form branches and each
/// degenerate sub-branch; all entries keep the naive oracle cheap.
pub fn region_parameter_grid() -> Vec<(RegionParams, &'static str)> {
    let p = |g1: i64, g2: i64, c1: i64, c2: i64| {
        RegionParams::new(rat_int(g1), rat_int(g2), rat_int(c1), rat_int(c2), 1).unwrap()
    };
    let frac = RegionParams::new(
        Rational::new(7.into(), 2.into()),
        rat_int(4),
        Rational::new(1.into(), 2.into()),
        Rational::new(3.into(), 2.into()),
        1,
    )
    .unwrap();
    vec![
        (p(4, 4, 1, 1), "c2 > 0, generic"),
        (p(2, 3, 1, 2), "c2 > 0, asymmetric"),
        (p(1, 2, 1, 2), "c2 > 0, degenerate g1+c1 = c2"),
        (p(4, 1, 3, 2), "c2 > 0, degenerate g2+c2 = c1"),
        (p(4, 4, 1, 0), "c2 = 0, generic"),
        (p(4, 2, 2, 0), "c2 = 0, degenerate g2 = c1"),
        (p(4, 4, 5, -1), "c2 < 0, generic"),
        (p(4, 4, 3, -1), "c2 < 0, degenerate g2+c2 = c1"),
        (frac, "c2 > 0, fractional exponents"),
    ]
}

fn verify_region(runner: &mut CheckRunner, seed: u64) {
    let mut oracle_ok = true;
    for (params, label) in region_parameter_grid() {
        for b in (1..=25).chain([40, 60]) {
            let p = params.with_b(b);
            if count_region(&p).unwrap() != count_region_naive(&p) {
                oracle_ok = false;
                eprintln!("oracle mismatch at B = {b} for {label}");
            }
        }
    }
    runner.check(
        "count_region equals the naive double-loop oracle on the grid",
        oracle_ok,
    );

    let mut monotone_ok = true;
    for (params, _) in region_parameter_grid() {
        let mut last = 0;
        for b in [1, 3, 7, 20, 55, 148] {
            let c = count_region(&params.with_b(b)).unwrap();
            monotone_ok &= c >= last;
            last = c;
        }
    }
    runner.check("count_region is monotone in B", monotone_ok);

    let mut symmetric_ok = true;
    for (params, _) in region_parameter_grid() {
        let p = params.with_b(60);
        symmetric_ok &= count_region(&p).unwrap() == count_region(&p.swapped()).unwrap();
    }
    runner.check(
        "count_region is symmetric under (g1,c1,x) <-> (g2,c2,y)",
        symmetric_ok,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scaling_ok = true;
    for _ in 0..20 {
        let g1 = random_rational(&mut rng, 0, 4);
        let g2 = random_rational(&mut rng, 0, 4);
        let c1 = random_rational(&mut rng, 1, 3);
        let c2 = random_rational(&mut rng, 1, 3);
        let b = rng.random_range(1..=30u64);
        let base = RegionParams::new(g1, g2, c1, c2, b).unwrap();
        let x = rng.random_range(1..=40u64);
        let y = rng.random_range(1..=40u64);
        // Re-expressing the exponents over a larger common denominator must
        // not change membership.
        let k = rat_int(rng.random_range(2..=4i64));
        let rescaled = RegionParams::new(
            &base.g1 * &k / &k,
            &base.g2 * &k / &k,
            &base.c1 * &k / &k,
            &base.c2 * &k / &k,
            b,
        )
        .unwrap();
        scaling_ok &=
            crate::region::in_region(x, y, &base) == crate::region::in_region(x, y, &rescaled);
    }
    runner.check(
        "membership is independent of exponent representation",
        scaling_ok,
    );
}

fn verify_schanuel(runner: &mut CheckRunner, _seed: u64) {
    runner.check(
        "count_p1(1) = 4 and count_p1(2) = 8",
        count_p1(1) == 4 && count_p1(2) == 8,
    );

    runner.check(
        "sieve count matches brute enumeration up to B = 80",
        (1..=80).all(|b| count_p1(b) == count_p1_naive(b)),
    );

    runner.check(
        "count_p1(B) is divisible by 4 up to B = 500",
        (1..=500).all(|b| count_p1(b).is_multiple_of(4)),
    );

    let b_list = log_spaced_bounds(10, 10_000, 4);
    let samples: Vec<CountSample> = b_list
        .iter()
        .map(|&b| CountSample {
            b,
            count: count_p1(b),
        })
        .collect();
    let fit = fit_exponent(&samples, 1.0).unwrap();
    runner.check(
        &format!(
            "projective-line growth exponent 2.00 +/- 0.05 (got {:.4})",
            fit.slope
        ),
        (fit.slope - 2.0).abs() <= 0.05,
    );

    let b = 10_000u64;
    let density = count_p1(b) as f64 / (b as f64 * b as f64);
    let limit = 12.0 / (std::f64::consts::PI * std::f64::consts::PI);
    runner.check(
        &format!("density at B = 10^4 within 2% of 12/pi^2 (got {density:.5})"),
        (density - limit).abs() / limit <= 0.02,
    );

    let mut degree_ok = true;
    for d in 1..=3u32 {
        let samples: Vec<CountSample> = b_list
            .iter()
            .map(|&b| CountSample {
                b: b.pow(d),
                count: count_degree_d(b.pow(d), d),
            })
            .collect();
        let fit = fit_exponent(&samples, 1.0).unwrap();
        let target = 2.0 / d as f64;
        if (fit.slope - target).abs() > 0.05 {
            degree_ok = false;
            eprintln!("degree {d}: slope {:.4}, expected {target:.4}", fit.slope);
        }
    }
    runner.check(
        "degree-d curve growth exponent 2/d +/- 0.05 for d = 1, 2, 3",
        degree_ok,
    );
}

/// Integer height bounds spaced by factors of `10^(1/per_decade)`,
/// deduplicated and clamped to `[lo, hi]`.
pub fn log_spaced_bounds(lo: u64, hi: u64, per_decade: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let ratio = 10f64.powf(1.0 / per_decade as f64);
    let mut value = lo as f64;
    while value <= hi as f64 * 1.000_001 {
        let b = value.round() as u64;
        if out.last() != Some(&b) {
            out.push(b);
        }
        value *= ratio;
    }
    out
}

fn cmd_verify(suite: &str, seed: u64) -> i32 {
    let mut runner = CheckRunner::new();
    match suite {
        "lattice" => verify_lattice(&mut runner, seed),
        "decomposition" => verify_decomposition(&mut runner, seed),
        "region" => verify_region(&mut runner, seed),
        "schanuel" => verify_schanuel(&mut runner, seed),
        "all" => {
            verify_lattice(&mut runner, seed);
            verify_decomposition(&mut runner, seed);
            verify_region(&mut runner, seed);
            verify_schanuel(&mut runner, seed);
        }
        other => {
            eprintln!(
                "error: unknown suite `{other}`; expected lattice, decomposition, region, \
                 schanuel, or all"
            );
            return 1;
        }
    }
    if runner.failures == 0 {
        0
    } else {
        eprintln!("{} check(s) failed", runner.failures);
        3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_parsing_rejects_unknown_fields() {
        let good = r#"{"d1": "5", "d2": "5", "e": [["-1","-1","-1","-1"],["-1","-1","-1","-1"],["-1","-1","-1","-1"],["-1","-1","-1","-1"]]}"#;
        let doc: DivisorDocument = serde_json::from_str(good).unwrap();
        let parsed = doc.parse().unwrap();
        assert_eq!(parsed.input.d1, rat_int(5));
        assert!(parsed.strategy.is_none());

        let unknown = r#"{"d1": "5", "d2": "5", "e": [["-1","-1","-1","-1"],["-1","-1","-1","-1"],["-1","-1","-1","-1"],["-1","-1","-1","-1"]], "extra": 1}"#;
        assert!(serde_json::from_str::<DivisorDocument>(unknown).is_err());
    }

    #[test]
    fn document_validates_fields() {
        let doc = DivisorDocument {
            d1: "5".into(),
            d2: "x".into(),
            e: std::array::from_fn(|_| std::array::from_fn(|_| "-1".to_string())),
            strategy: None,
            field_degree: None,
            sweep: None,
        };
        assert!(doc.parse().unwrap_err().contains("d2"));

        let doc = DivisorDocument {
            d1: "5".into(),
            d2: "5".into(),
            e: std::array::from_fn(|_| std::array::from_fn(|_| "-1".to_string())),
            strategy: Some("bogus".into()),
            field_degree: None,
            sweep: None,
        };
        assert!(doc.parse().unwrap_err().contains("strategy"));

        let doc = DivisorDocument {
            d1: "5".into(),
            d2: "5".into(),
            e: std::array::from_fn(|_| std::array::from_fn(|_| "-1".to_string())),
            strategy: None,
            field_degree: None,
            sweep: Some(vec![10, 10]),
        };
        assert!(doc.parse().unwrap_err().contains("sweep"));
    }

    #[test]
    fn csv_roundtrip() {
        let samples = vec![
            CountSample { b: 10, count: 4 },
            CountSample { b: 100, count: 23 },
        ];
        let text = sweep_csv(&samples);
        assert_eq!(text, "B,count\n10,4\n100,23\n");
        assert_eq!(parse_sweep_csv(&text).unwrap(), samples);
        assert!(parse_sweep_csv("B,count\n10;4\n").is_err());
        assert!(parse_sweep_csv("10,notanumber\n").is_err());
    }

    #[test]
    fn log_spacing_is_increasing() {
        let bounds = log_spaced_bounds(10, 10_000, 4);
        assert_eq!(bounds.first(), Some(&10));
        assert_eq!(bounds.last(), Some(&10_000));
        assert!(bounds.windows(2).all(|w| w[0] < w[1]));
    }
}
