//! `qschur`: products, bar involutions and canonical bases in quantum Schur
//! algebras, their coideal analogues and the limit algebras, plus the
//! verification suites and the flag-count cache.
//!
//! Exit codes: 0 on success, 1 on a computation error or a failed
//! verification, 2 on a usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Parser, Subcommand, ValueEnum};

use qschur::coideal::{self, rank1_gamma, transfer_checked, transfer_i_hom, transfer_j_hom};
use qschur::engine::stabilize::{stable_class_element_within, SHIFT_BUDGET};
use qschur::engine::{Algebra, Basis, Element, Kind};
use qschur::flagconv::cache::Cache;
use qschur::flagconv::{oracle_multiply, Family, PRIMES};
use qschur::lattice::{Cell, Context};
use qschur::suites::{self, Status};
use qschur::type_a::transfer_a_hom;

#[derive(Parser)]
#[command(name = "qschur", version, about = "Canonical bases of quantum Schur algebras and their coideal analogues")]
struct Cli {
    /// Print elements as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Standard,
    Canonical,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two basis elements.
    Mul {
        /// Algebra, e.g. `schurA:2,3`, `limitA:2`, `schurJ:3,2`, `limitI:2`.
        #[arg(long)]
        context: String,
        /// Left cell as JSON rows, e.g. "[[0,1],[1,-3]]".
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// `standard`: [L][R] in the standard basis; `canonical`: {L}{R} in
        /// the canonical basis.
        #[arg(long, value_enum, default_value = "standard")]
        basis: BasisArg,
        /// Compute [L][R] by counting flags over finite fields instead
        /// (Schur algebras only; results are cached).
        #[arg(long)]
        oracle: bool,
    },
    /// The bar involution of a standard basis element.
    Bar {
        #[arg(long)]
        context: String,
        #[arg(long)]
        cell: String,
    },
    /// A canonical basis element, expanded in the standard basis.
    Cb {
        #[arg(long)]
        context: String,
        #[arg(long)]
        cell: String,
    },
    /// Structure constants of two canonical basis elements, with the
    /// coefficients outside N[v, v^-1] listed.
    Cbstruct {
        #[arg(long)]
        context: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// The transfer map from a Schur algebra to the one of the next lower
    /// weight (`d - n`, `d - n` or `d - nn` for the three families).
    Transfer {
        /// Source algebra, a Schur algebra.
        #[arg(long)]
        context: String,
        #[arg(long)]
        cell: String,
        /// Map `[cell]` (standard) or `{cell}` (canonical; the image is also
        /// expanded in the target canonical basis).
        #[arg(long, value_enum, default_value = "canonical")]
        basis: BasisArg,
        /// Also evaluate each standard cell through its monomial word and
        /// fail on disagreement (the even-rank literal rule for multi-step
        /// `t` factors is known to disagree for some cells).
        #[arg(long)]
        check_words: bool,
    },
    /// The rank-one coefficients gamma_a(i) as CSV rows `a,i,gamma`.
    GammaTable {
        #[arg(long, default_value_t = 10)]
        a_max: i64,
        #[arg(long, default_value_t = 10)]
        r_max: i64,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites by id or number (`all` for every suite).
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
        /// Write the JSON report `[{"suite", "status", "paper_ref"}]` here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Follow a canonical element of a limit algebra along the shift until
    /// it is stable under the shift map.
    Stabilize {
        /// A limit algebra: `limitA:n`, `limitJ:n` or `limitI:nn`.
        #[arg(long)]
        context: String,
        #[arg(long)]
        cell: String,
        /// Largest shift tried.
        #[arg(long, default_value_t = SHIFT_BUDGET)]
        budget: i64,
    },
    /// Administer the flag-count cache (`QSCHUR_CACHE_DIR`, default `./.cbcache`).
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// List cached products.
    List,
    /// Recount one cached product at a prime not used for its fit.
    Verify {
        /// Which entry to recount (reduced modulo the number of entries);
        /// chosen from the clock if omitted.
        #[arg(long)]
        pick: Option<u64>,
    },
}

/// Parse `schurA:n,d`, `limitA:n`, `schurJ:n,d`, `limitJ:n`, `schurI:nn,d`,
/// `limitI:nn`, or a context name such as `XiD(3,2)`.
fn parse_context(s: &str) -> Result<Context> {
    let Some((name, args)) = s.split_once(':') else {
        return Ok(s.parse()?);
    };
    let nums: Vec<i64> = args
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("bad context arguments in {s:?}"))?;
    let size = |i: usize| -> Result<usize> {
        nums.get(i).and_then(|x| usize::try_from(*x).ok()).with_context(|| format!("missing size in {s:?}"))
    };
    let weight = || nums.get(1).copied().with_context(|| format!("missing weight in {s:?}"));
    Ok(match name.to_ascii_lowercase().as_str() {
        "schura" => Context::ThetaD { n: size(0)?, d: weight()? },
        "limita" => Context::ThetaTilde { n: size(0)? },
        "schurj" => Context::XiD { n: size(0)?, d: weight()? },
        "limitj" => Context::XiTilde { n: size(0)? },
        "schuri" => Context::XiIotaD { nn: size(0)?, d: weight()? },
        "limiti" => Context::XiIotaTilde { nn: size(0)? },
        _ => bail!("unknown algebra {name:?}"),
    })
}

fn parse_cell(s: &str) -> Result<Cell> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(s).with_context(|| format!("bad matrix {s:?}"))?;
    Ok(Cell::from_rows(&rows)?)
}

fn checked_cell(alg: &Algebra, s: &str) -> Result<Cell> {
    let c = parse_cell(s)?;
    alg.check(&c)?;
    Ok(c)
}

fn emit(json: bool, alg: &Algebra, x: &Element, basis: Basis) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(&x.to_json(alg.context(), basis))?);
    } else {
        let (open, close) = if basis == Basis::Canonical { ('{', '}') } else { ('[', ']') };
        if x.is_zero() {
            println!("0");
        }
        for (c, k) in x.iter() {
            println!("({k}) {open}{c}{close}");
        }
    }
    Ok(())
}

fn negative_cells(x: &Element) -> Vec<Cell> {
    suites::negative_coefficients(x)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.json;
    match cli.command {
        Command::Mul { context, left, right, basis, oracle } => {
            let alg = Algebra::new(parse_context(&context)?);
            let (a, b) = (checked_cell(&alg, &left)?, checked_cell(&alg, &right)?);
            match (basis, oracle) {
                (BasisArg::Standard, false) => emit(json, &alg, &*alg.mul_std(&a, &b)?, Basis::Standard)?,
                (BasisArg::Canonical, false) => emit(json, &alg, &alg.cb_product(&a, &b)?, Basis::Canonical)?,
                (BasisArg::Standard, true) => {
                    if !alg.is_schur() {
                        bail!("flag counting needs a Schur algebra, got {}", alg.context());
                    }
                    let x = oracle_multiply(Family::of_context(alg.context()), &a, &b, &PRIMES)?;
                    emit(json, &alg, &x, Basis::Standard)?
                }
                (BasisArg::Canonical, true) => bail!("--oracle computes standard-basis products only"),
            }
        }
        Command::Bar { context, cell } => {
            let alg = Algebra::new(parse_context(&context)?);
            let a = checked_cell(&alg, &cell)?;
            emit(json, &alg, &*alg.bar_std(&a)?, Basis::Standard)?;
        }
        Command::Cb { context, cell } => {
            let alg = Algebra::new(parse_context(&context)?);
            let a = checked_cell(&alg, &cell)?;
            emit(json, &alg, &*alg.canonical(&a)?, Basis::Standard)?;
        }
        Command::Cbstruct { context, left, right } => {
            let alg = Algebra::new(parse_context(&context)?);
            let (a, b) = (checked_cell(&alg, &left)?, checked_cell(&alg, &right)?);
            let x = alg.cb_product(&a, &b)?;
            let neg = negative_cells(&x);
            if json {
                let out = serde_json::json!({
                    "product": x.to_json(alg.context(), Basis::Canonical),
                    "positive": neg.is_empty(),
                    "negative_cells": neg.iter().map(Cell::to_rows).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                emit(false, &alg, &x, Basis::Canonical)?;
                if neg.is_empty() {
                    println!("all coefficients in N[v,v^-1]");
                } else {
                    let cells: Vec<String> = neg.iter().map(Cell::to_string).collect();
                    println!("coefficients outside N[v,v^-1] at {}", cells.join(", "));
                }
            }
        }
        Command::Transfer { context, cell, basis, check_words } => {
            let src = Algebra::new(parse_context(&context)?);
            let a = checked_cell(&src, &cell)?;
            let target = match src.context() {
                Context::ThetaD { n, d } => Context::ThetaD { n, d: d - n as i64 },
                Context::XiD { n, d } => Context::XiD { n, d: d - n as i64 },
                Context::XiIotaD { nn, d } => Context::XiIotaD { nn, d: d - nn as i64 },
                c => bail!("the transfer map starts from a Schur algebra, got {c}"),
            };
            let dst = Algebra::new(target);
            let x = match basis {
                BasisArg::Standard => Element::basis(a),
                BasisArg::Canonical => (*src.canonical(&a)?).clone(),
            };
            let h = match src.kind() {
                Kind::A => transfer_a_hom(&src, &dst)?,
                Kind::J => transfer_j_hom(&src, &dst)?,
                Kind::I => transfer_i_hom(&src, &dst)?,
            };
            let img = if check_words { transfer_checked(&h, &x)? } else { h.eval(&x)? };
            match basis {
                BasisArg::Standard => emit(json, &dst, &img, Basis::Standard)?,
                BasisArg::Canonical => emit(json, &dst, &dst.to_canonical(&img)?, Basis::Canonical)?,
            }
        }
        Command::GammaTable { a_max, r_max, out } => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["a", "i", "gamma"])?;
            for a in 0..=a_max {
                for i in 0..=r_max {
                    w.write_record([a.to_string(), i.to_string(), rank1_gamma(a, i)?.to_string()])?;
                }
            }
            let bytes = w.into_inner()?;
            match out {
                Some(p) => fs::write(&p, bytes).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{}", String::from_utf8(bytes)?),
            }
        }
        Command::Verify { suites: wanted, report } => {
            let selected: Vec<&suites::Suite> = if wanted.iter().any(|w| w == "all") {
                suites::all().iter().collect()
            } else {
                wanted
                    .iter()
                    .map(|w| suites::find(w).with_context(|| format!("unknown suite {w:?}")))
                    .collect::<Result<_>>()?
            };
            let mut reports = Vec::new();
            for s in selected {
                let r = s.run();
                println!("{}", r.line());
                println!("    statements: {}", r.paper_ref);
                for d in r.details() {
                    println!("    {d}");
                }
                reports.push(r);
            }
            if let Some(p) = report {
                fs::write(&p, serde_json::to_string_pretty(&reports)? + "\n")
                    .with_context(|| format!("writing {}", p.display()))?;
            }
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Stabilize { context, cell, budget } => {
            let alg = Algebra::new(parse_context(&context)?);
            if alg.is_schur() {
                bail!("stabilization runs in a limit algebra, got {}", alg.context());
            }
            let a = checked_cell(&alg, &cell)?;
            let b = stable_class_element_within(&alg, &a, &coideal::unit(&alg), budget)?;
            if json {
                let out = serde_json::json!({
                    "rep": a.to_rows(),
                    "p0": b.p0,
                    "element": b.element.to_json(alg.context(), Basis::Standard),
                });
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("stable from shift {}; canonical element there:", b.p0);
                emit(false, &alg, &b.element, Basis::Standard)?;
            }
        }
        Command::Cache { action } => {
            let cache = Cache::from_env();
            match action {
                CacheAction::List => {
                    for p in cache.entries()? {
                        println!("{}", p.display());
                    }
                }
                CacheAction::Verify { pick } => {
                    let pick = pick.unwrap_or_else(|| {
                        std::time::SystemTime::now()
                            .duration_since(std::time::UNIX_EPOCH)
                            .map(|d| d.as_nanos() as u64)
                            .unwrap_or(0)
                    });
                    match cache.verify(pick)? {
                        None => println!("cache {} is empty", cache.dir().display()),
                        Some(audit) => {
                            println!(
                                "{}: {} coefficients recounted at q = {}: {}",
                                audit.file,
                                audit.checked,
                                audit.prime,
                                if audit.ok { "ok" } else { "MISMATCH" }
                            );
                            if !audit.ok {
                                return Ok(ExitCode::from(1));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let kind = e.downcast_ref::<qschur::Error>().map(|q| format!("{q:?}")).unwrap_or_default();
            let kind = kind.split(['(', ' ']).next().unwrap_or("");
            let msg = serde_json::json!({ "error": if kind.is_empty() { "Usage" } else { kind }, "message": format!("{e:#}") });
            eprintln!("{msg}");
            // malformed input is a usage error
            if kind.is_empty() || matches!(kind, "Parse" | "InvalidCell" | "ShapeMismatch") {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
