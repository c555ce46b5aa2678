//! `sdual` — exact calculator for determinant-bundle section counts on
//! moduli of plane sheaves.
//!
//! Subcommands mirror the library modules: `kring` for Grothendieck-class
//! arithmetic, `rep` for SL(3) characters, `series` for Poincare series,
//! `duality` for the dimension checks.  `--json` switches to machine
//! output with every integer rendered as a decimal string.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use sdual_core::duality;
use sdual_core::kring::{ChernData, KClass};
use sdual_core::rep3::{Character, Partition, SchurDecomposition, Weight};
use sdual_core::series::{expansion_coefficient, reconstruct, IntPolynomial};

#[derive(Parser)]
#[command(name = "sdual", version, about = "Exact strange-duality dimension checker for the projective plane")]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic in the Grothendieck algebra of the plane.
    #[command(subcommand)]
    Kring(KringCmd),
    /// Characters of polynomial SL(3) representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Poincare series of determinant bundles.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Strange-duality dimension checks and audits.
    #[command(subcommand)]
    Duality(DualityCmd),
}

#[derive(Args)]
struct ClassArgs {
    /// Class triple r,c1,chi (or r,c1,c2 with --chern).
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    c: Triple,
    /// Read triples as (rank, c1, c2) instead of (rank, c1, chi).
    #[arg(long)]
    chern: bool,
}

#[derive(Args)]
struct ClassPairArgs {
    /// First class triple r,c1,chi (or r,c1,c2 with --chern).
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    c: Triple,
    /// Second class triple.
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    u: Triple,
    /// Read triples as (rank, c1, c2) instead of (rank, c1, chi).
    #[arg(long)]
    chern: bool,
}

#[derive(Subcommand)]
enum KringCmd {
    /// Ring product of two classes.
    Mul(ClassPairArgs),
    /// Euler pairing chi(c * u).
    Pair(ClassPairArgs),
    /// Dual class.
    Dual(ClassArgs),
    /// Expected moduli dimension 1 - <c*, c>.
    Dim(ClassArgs),
    /// Positive generator of the rank-0 orthogonal classes, with delta.
    Orth(ClassArgs),
}

#[derive(Subcommand)]
enum RepCmd {
    /// Dimension of the Schur representation of a partition.
    Dim {
        #[arg(long, value_parser = parse_partition)]
        partition: PartitionArg,
    },
    /// Schur decomposition of a symmetric power of a Schur representation.
    Sym {
        #[arg(long, value_parser = parse_partition)]
        partition: PartitionArg,
        #[arg(long)]
        n: i64,
    },
    /// Schur decomposition of an exterior power of a Schur representation.
    Ext {
        #[arg(long, value_parser = parse_partition)]
        partition: PartitionArg,
        #[arg(long)]
        n: i64,
    },
    /// Schur decomposition of the tensor product of two Schur representations.
    Tensor {
        /// Give the flag twice, once per factor.
        #[arg(long, value_parser = parse_partition, num_args = 1, action = clap::ArgAction::Append)]
        partition: Vec<PartitionArg>,
    },
    /// Schur decomposition of an explicit weight character.
    Decompose {
        /// Semicolon-separated weight terms, e.g. "2,0,0=1;0,2,0=1;0,0,2=1;1,1,0=1;1,0,1=1;0,1,1=1".
        #[arg(long, value_parser = parse_weights)]
        weights: WeightList,
    },
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Solve for the palindromic numerator from Q(1) and section counts.
    Reconstruct {
        /// Moduli dimension D (the pole order is D+1).
        #[arg(long)]
        dim: u32,
        /// Symmetry exponent delta; the numerator degree is D+1-3*delta.
        #[arg(long)]
        delta: u32,
        /// Value Q(1), the top self-intersection number.
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        q1: BigInt,
        /// A known coefficient, as k=h0; repeat the flag per sample.
        #[arg(long, value_parser = parse_sample)]
        sample: Vec<Sample>,
    },
    /// Expand q(t)/(1-t)^(dim+1) and print one coefficient.
    Coeff {
        /// Comma-separated numerator coefficients, constant term first.
        #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
        num: IntList,
        /// Moduli dimension D (the pole order is D+1).
        #[arg(long)]
        dim: u32,
        /// Index of the coefficient to print.
        #[arg(long)]
        k: u64,
    },
}

#[derive(Subcommand)]
enum DualityCmd {
    /// Compare both section counts for c2 = n against degree d.
    Check {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Audit the kernel/cokernel bookkeeping of the cubic case.
    AuditAlpha {
        #[arg(long)]
        n: i64,
    },
    /// Emit the lhs/rhs grid for d = 1..3 up to a given c2.
    Table {
        #[arg(long)]
        nmax: i64,
    },
}

type Triple = (BigInt, BigInt, BigInt);
type PartitionArg = (i64, i64, i64);
type Sample = (u64, BigInt);

#[derive(Clone)]
struct WeightList(Vec<([u32; 3], BigInt)>);

#[derive(Clone)]
struct IntList(Vec<BigInt>);

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| format!("invalid integer '{s}'"))
}

fn parse_triple(s: &str) -> Result<Triple, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!(
            "class triple '{s}' must have exactly three comma-separated integers"
        ));
    }
    let mut vals = Vec::with_capacity(3);
    for p in parts {
        vals.push(
            p.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("invalid integer '{p}' in class triple '{s}'"))?,
        );
    }
    let c = vals.pop().expect("three entries");
    let b = vals.pop().expect("two entries");
    let a = vals.pop().expect("one entry");
    Ok((a, b, c))
}

fn parse_partition(s: &str) -> Result<PartitionArg, String> {
    let mut vals = Vec::new();
    for p in s.split(',') {
        vals.push(
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid integer '{p}' in partition '{s}'"))?,
        );
    }
    if vals.is_empty() || vals.len() > 3 {
        return Err(format!("partition '{s}' must have one to three parts"));
    }
    vals.resize(3, 0);
    Ok((vals[0], vals[1], vals[2]))
}

fn parse_sample(s: &str) -> Result<Sample, String> {
    let (k, h) = s
        .split_once('=')
        .ok_or_else(|| format!("sample '{s}' must look like k=h0"))?;
    let k = k
        .trim()
        .parse::<u64>()
        .map_err(|_| format!("invalid sample position '{k}' in '{s}'"))?;
    let h = h
        .trim()
        .parse::<BigInt>()
        .map_err(|_| format!("invalid sample value '{h}' in '{s}'"))?;
    Ok((k, h))
}

fn parse_weights(s: &str) -> Result<WeightList, String> {
    let mut out = Vec::new();
    for term in s.split(';') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        let (w, m) = term
            .split_once('=')
            .ok_or_else(|| format!("weight term '{term}' must look like e1,e2,e3=mult"))?;
        let exps: Vec<&str> = w.split(',').collect();
        if exps.len() != 3 {
            return Err(format!("weight '{w}' must have three exponents"));
        }
        let mut e = [0u32; 3];
        for (slot, x) in e.iter_mut().zip(&exps) {
            *slot = x
                .trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid exponent '{x}' in weight term '{term}'"))?;
        }
        let m = m
            .trim()
            .parse::<BigInt>()
            .map_err(|_| format!("invalid multiplicity '{m}' in weight term '{term}'"))?;
        out.push((e, m));
    }
    if out.is_empty() {
        return Err(format!("weight list '{s}' is empty"));
    }
    Ok(WeightList(out))
}

fn parse_int_list(s: &str) -> Result<IntList, String> {
    let mut out = Vec::new();
    for p in s.split(',') {
        out.push(
            p.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("invalid integer '{p}' in coefficient list '{s}'"))?,
        );
    }
    Ok(IntList(out))
}

// ---------------------------------------------------------------------------
// payloads: field order is frozen by the golden tests
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ValuePayload {
    value: String,
}

#[derive(Serialize)]
struct ClassPayload {
    rank: String,
    c1: String,
    chi: String,
}

impl ClassPayload {
    fn of(c: &KClass) -> Self {
        ClassPayload {
            rank: c.rank().to_string(),
            c1: c.c1().to_string(),
            chi: c.chi().to_string(),
        }
    }
}

#[derive(Serialize)]
struct OrthPayload {
    u: ClassPayload,
    delta: String,
}

#[derive(Serialize)]
struct PartEntry {
    partition: String,
    sl3: String,
    coeff: String,
}

#[derive(Serialize)]
struct DecompositionPayload {
    dim: String,
    #[serde(rename = "virtual")]
    is_virtual: bool,
    parts: Vec<PartEntry>,
}

#[derive(Serialize)]
struct SeriesPayload {
    q: Vec<String>,
}

#[derive(Serialize)]
struct CheckPayload {
    lhs: String,
    rhs: String,
    orthogonal: bool,
    asserted: bool,
}

#[derive(Serialize)]
struct AuditPayload {
    n: String,
    ker_dim: String,
    coker_dim: String,
    pass: bool,
}

#[derive(Serialize)]
struct TableRow {
    n: String,
    d: String,
    lhs: String,
    rhs: String,
    equal: bool,
    asserted: bool,
}

#[derive(Serialize)]
struct TablePayload {
    rows: Vec<TableRow>,
    all_asserted_agree: bool,
}

struct Output {
    human: String,
    json: String,
    exit: i32,
}

impl Output {
    fn new(human: impl Into<String>, payload: &impl Serialize) -> Self {
        Output {
            human: human.into(),
            json: serde_json::to_string(payload).expect("payload serializes"),
            exit: 0,
        }
    }

    fn value(v: impl std::fmt::Display) -> Self {
        let v = v.to_string();
        Output::new(v.clone(), &ValuePayload { value: v })
    }
}

fn decomposition_output(dec: &SchurDecomposition) -> Output {
    let parts: Vec<PartEntry> = dec
        .parts()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(p, c)| {
            let [a, b, g] = p.parts();
            let (s1, s2) = p.sl3_normalized();
            PartEntry {
                partition: format!("{a},{b},{g}"),
                sl3: format!("{s1},{s2}"),
                coeff: c.to_string(),
            }
        })
        .collect();
    let payload = DecompositionPayload {
        dim: dec.dim().to_string(),
        is_virtual: dec.is_virtual(),
        parts,
    };
    let mut human = format!("{dec}\ndim = {}", dec.dim());
    if dec.is_virtual() {
        human.push_str("\n(virtual)");
    }
    Output::new(human, &payload)
}

fn class_from(triple: &Triple, chern: bool) -> KClass {
    let (a, b, c) = triple.clone();
    if chern {
        ChernData::new(a, b, c).to_kclass()
    } else {
        KClass::new(a, b, c)
    }
}

fn partition_from(arg: &PartitionArg) -> sdual_core::Result<Partition> {
    Partition::new(arg.0, arg.1, arg.2)
}

fn run(cmd: &Command) -> Result<Output, String> {
    match cmd {
        Command::Kring(k) => run_kring(k).map_err(|e| e.to_string()),
        Command::Rep(r) => run_rep(r).map_err(|e| e.to_string()),
        Command::Series(s) => run_series(s).map_err(|e| e.to_string()),
        Command::Duality(d) => run_duality(d).map_err(|e| e.to_string()),
    }
}

fn run_kring(cmd: &KringCmd) -> sdual_core::Result<Output> {
    Ok(match cmd {
        KringCmd::Mul(args) => {
            let prod = class_from(&args.c, args.chern).mul(&class_from(&args.u, args.chern));
            Output::new(prod.to_string(), &ClassPayload::of(&prod))
        }
        KringCmd::Pair(args) => Output::value(
            class_from(&args.c, args.chern).euler_pair(&class_from(&args.u, args.chern)),
        ),
        KringCmd::Dual(args) => {
            let d = class_from(&args.c, args.chern).dual();
            Output::new(d.to_string(), &ClassPayload::of(&d))
        }
        KringCmd::Dim(args) => Output::value(class_from(&args.c, args.chern).moduli_dim()),
        KringCmd::Orth(args) => {
            let (u, delta) = class_from(&args.c, args.chern).orth_generator()?;
            Output::new(
                format!("u = {u}\ndelta = {delta}"),
                &OrthPayload {
                    u: ClassPayload::of(&u),
                    delta: delta.to_string(),
                },
            )
        }
    })
}

fn run_rep(cmd: &RepCmd) -> sdual_core::Result<Output> {
    Ok(match cmd {
        RepCmd::Dim { partition } => Output::value(partition_from(partition)?.weyl_dim()),
        RepCmd::Sym { partition, n } => {
            let dec = partition_from(partition)?
                .schur_char()
                .sym_power(*n)?
                .decompose()?;
            decomposition_output(&dec)
        }
        RepCmd::Ext { partition, n } => {
            let dec = partition_from(partition)?
                .schur_char()
                .ext_power(*n)?
                .decompose()?;
            decomposition_output(&dec)
        }
        RepCmd::Tensor { partition } => {
            if partition.len() != 2 {
                return Err(sdual_core::Error::InconsistentConstraints(
                    "tensor needs --partition given exactly twice".into(),
                ));
            }
            let x = partition_from(&partition[0])?.schur_char();
            let y = partition_from(&partition[1])?.schur_char();
            decomposition_output(&x.tensor(&y).decompose()?)
        }
        RepCmd::Decompose { weights } => {
            let ch = Character::from_terms(
                weights
                    .0
                    .iter()
                    .map(|(e, m)| (Weight(*e), m.clone())),
            );
            decomposition_output(&ch.decompose()?)
        }
    })
}

fn run_series(cmd: &SeriesCmd) -> sdual_core::Result<Output> {
    Ok(match cmd {
        SeriesCmd::Reconstruct {
            dim,
            delta,
            q1,
            sample,
        } => {
            let s = reconstruct(*dim, *delta, q1, sample)?;
            let q: Vec<String> = s
                .numerator()
                .coefficients()
                .iter()
                .map(|c| c.to_string())
                .collect();
            Output::new(
                format!(
                    "Q(t) = {}\nP(t) = Q(t)/(1-t)^{}\nQ(1) = {}",
                    s.numerator(),
                    s.dim() + 1,
                    s.numerator().eval_one()
                ),
                &SeriesPayload { q },
            )
        }
        SeriesCmd::Coeff { num, dim, k } => {
            let q = IntPolynomial::new(num.0.clone());
            Output::value(expansion_coefficient(&q, *dim, *k))
        }
    })
}

fn run_duality(cmd: &DualityCmd) -> sdual_core::Result<Output> {
    Ok(match cmd {
        DualityCmd::Check { n, d } => {
            let r = duality::check(*n, *d)?;
            let human = format!(
                "n={} d={}: lhs = {}, rhs = {}{}{}",
                r.n,
                r.d,
                r.lhs_dim,
                r.rhs_dim,
                if r.orthogonal { ", orthogonal" } else { "" },
                if r.asserted {
                    ", asserted"
                } else {
                    ", conjectural"
                }
            );
            Output::new(
                human,
                &CheckPayload {
                    lhs: r.lhs_dim.to_string(),
                    rhs: r.rhs_dim.to_string(),
                    orthogonal: r.orthogonal,
                    asserted: r.asserted,
                },
            )
        }
        DualityCmd::AuditAlpha { n } => {
            let a = duality::alpha_audit(*n)?;
            Output::new(
                format!(
                    "audit n={}: ker dim = {}, coker dim = {} — PASS",
                    a.n, a.ker_dim, a.coker_dim
                ),
                &AuditPayload {
                    n: a.n.to_string(),
                    ker_dim: a.ker_dim.to_string(),
                    coker_dim: a.coker_dim.to_string(),
                    pass: true,
                },
            )
        }
        DualityCmd::Table { nmax } => {
            let mut rows = Vec::new();
            let mut lines = vec![format!(
                "{:>4} {:>3} {:>12} {:>12} {:>7} {}",
                "n", "d", "lhs", "rhs", "equal", "status"
            )];
            let mut all_asserted_agree = true;
            for n in 0..=*nmax {
                for d in 1..=3i64 {
                    let r = duality::check(n, d)?;
                    let equal = r.lhs_dim == r.rhs_dim;
                    if r.asserted && !equal {
                        all_asserted_agree = false;
                    }
                    lines.push(format!(
                        "{:>4} {:>3} {:>12} {:>12} {:>7} {}",
                        n,
                        d,
                        r.lhs_dim,
                        r.rhs_dim,
                        equal,
                        if r.asserted { "asserted" } else { "conjectural" }
                    ));
                    rows.push(TableRow {
                        n: n.to_string(),
                        d: d.to_string(),
                        lhs: r.lhs_dim.to_string(),
                        rhs: r.rhs_dim.to_string(),
                        equal,
                        asserted: r.asserted,
                    });
                }
            }
            let mut out = Output::new(
                lines.join("\n"),
                &TablePayload {
                    rows,
                    all_asserted_agree,
                },
            );
            if !all_asserted_agree {
                out.exit = 1;
            }
            out
        }
    })
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.human);
            }
            std::process::exit(out.exit);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}
