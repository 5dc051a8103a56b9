//! Named verification suites: each replays a family of published identities
//! or properties on bounded instances, exactly, and reports the number of
//! checks and the failing instances.
//!
//! The suites are shared by the `verify` subcommand and the acceptance test
//! binary. A suite listed in [`KNOWN_FAILURES`] checks a printed statement
//! that does not hold as printed; it is run literally and expected to fail.

use std::fmt;

use serde::Serialize;

use crate::coideal::{
    self, check_i_relations, check_j_relations, rank1_bar, rank1_canonical, rank1_cell, rank1_transfer,
    rank1_transfer_canonical, sl_canonical, t_sum, t_times, transfer_i_hom, transfer_j_hom, Convention,
};
use crate::engine::stabilize::{large_shift, stabilization_fit, stable_cb_product};
use crate::engine::{Algebra, Element, Step};
use crate::error::Result;
use crate::flagconv::{oracle_product, Family, PRIMES};
use crate::lattice::{all_theta, Cell};
use crate::laurent::{
    check_q_identity, qbinom, qbinom_bar, qint, qint_bar, qint_sym, Laurent, QIdentity,
};
use crate::type_a::{
    chi_eval, class_element, generator_multiply, gl2_act, is_permutation, transfer_a, xi_shift, GeneratorCell,
    Gl2Module, ModVec,
};

/// Suites that check a printed statement which does not hold as printed.
pub const KNOWN_FAILURES: &[&str] = &["CBmodule"];

/// Failing instances listed per suite; further failures are only counted.
const MAX_LISTED: usize = 8;

/// Pass or fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Running tally of one suite.
#[derive(Clone, Debug, Default)]
pub struct Log {
    pub checks: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Log {
    /// Record one check; `what` describes the instance and is only built on
    /// failure.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    /// Record `got == want`.
    pub fn equal<T: PartialEq + fmt::Display>(&mut self, got: &T, want: &T, what: impl FnOnce() -> String) {
        self.check(got == want, || format!("{}: got {got}, expected {want}", what()));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// One named suite.
pub struct Suite {
    /// Position in the acceptance list.
    pub number: u8,
    pub id: &'static str,
    pub title: &'static str,
    /// The statements replayed, by name.
    pub paper_ref: &'static str,
    run: fn(&mut Log) -> Result<()>,
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub status: Status,
    pub paper_ref: String,
    #[serde(skip)]
    pub number: u8,
    #[serde(skip)]
    pub title: String,
    #[serde(skip)]
    pub log: Log,
    /// A computation error that aborted the suite.
    #[serde(skip)]
    pub error: Option<String>,
}

impl Report {
    pub fn known_failure(&self) -> bool {
        KNOWN_FAILURES.contains(&self.suite.as_str())
    }

    /// The one-line summary, e.g. `PASS  6 negBLM: ... (12 checks)`.
    pub fn line(&self) -> String {
        let mut s = format!(
            "{} {:>2} {}: {} ({} checks, {} failed)",
            self.status, self.number, self.suite, self.title, self.log.checks, self.log.failed
        );
        if self.status == Status::Fail && self.known_failure() {
            s.push_str(" [known]");
        }
        s
    }

    /// The per-instance report: failures, notes and any aborting error.
    pub fn details(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(e) = &self.error {
            out.push(format!("error: {e}"));
        }
        for f in &self.log.failures {
            out.push(format!("failed: {f}"));
        }
        if self.log.failed > self.log.failures.len() {
            out.push(format!("... and {} more", self.log.failed - self.log.failures.len()));
        }
        for n in &self.log.notes {
            out.push(format!("note: {n}"));
        }
        out
    }
}

impl Suite {
    pub fn run(&self) -> Report {
        let mut log = Log::default();
        let error = (self.run)(&mut log).err().map(|e| e.to_string());
        let ok = error.is_none() && log.failed == 0 && log.checks > 0;
        Report {
            suite: self.id.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            paper_ref: self.paper_ref.to_string(),
            number: self.number,
            title: self.title.to_string(),
            log,
            error,
        }
    }
}

/// All suites, in acceptance order.
pub fn all() -> &'static [Suite] {
    &SUITES
}

/// Look a suite up by id (case-insensitive) or by number.
pub fn find(key: &str) -> Option<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.id.eq_ignore_ascii_case(key) || key.parse::<u8>().is_ok_and(|n| n == s.number))
}

static SUITES: [Suite; 15] = [
    Suite {
        number: 1,
        id: "q-identities",
        title: "summation identities and the bar-binomial law",
        paper_ref: "Lemma sum=1; Lemma sum=1b; bar of quantum binomials",
        run: q_identities,
    },
    Suite {
        number: 2,
        id: "calibration",
        title: "rank-2 type A product and shift identities",
        paper_ref: "identities f1, f2, E, F, G, H, R",
        run: calibration,
    },
    Suite {
        number: 3,
        id: "oracle",
        title: "flag-counting products agree with the generator formulas",
        paper_ref: "BLM multiplication formulas against the convolution algebra",
        run: oracle,
    },
    Suite {
        number: 4,
        id: "lemma-n2",
        title: "two-term canonical elements in rank 2",
        paper_ref: "Lemma n=2",
        run: lemma_n2,
    },
    Suite {
        number: 5,
        id: "shift",
        title: "the shift map does not preserve the stably canonical basis",
        paper_ref: "Prop shift; Remark rem:shift",
        run: shift,
    },
    Suite {
        number: 6,
        id: "negBLM",
        title: "negative structure constants of the stably canonical basis",
        paper_ref: "Prop negBLM",
        run: neg_blm,
    },
    Suite {
        number: 7,
        id: "CBmodule",
        title: "stably canonical elements on highest-weight vectors",
        paper_ref: "Prop CBmodule",
        run: cb_module,
    },
    Suite {
        number: 8,
        id: "chi",
        title: "sign character on canonical permutation elements",
        paper_ref: "Prop RLconj (sign character)",
        run: chi,
    },
    Suite {
        number: 9,
        id: "transfer-a",
        title: "type A transfer maps canonical elements positively",
        paper_ref: "Prop RLconj; Prop slsch",
        run: transfer_positivity,
    },
    Suite {
        number: 10,
        id: "negCBj",
        title: "negative structure constants in the odd-rank limit algebra",
        paper_ref: "Prop negCBj",
        run: neg_cbj,
    },
    Suite {
        number: 11,
        id: "presentation",
        title: "coideal relations hold for the generator images",
        paper_ref: "presentations of the odd- and even-rank coideal algebras",
        run: presentation,
    },
    Suite {
        number: 12,
        id: "rank-one",
        title: "rank-one even-rank tower",
        paper_ref: "Thm Abar; Thm iCB1; t*M; A.13; Lemma phiM; Prop i-transfer-cb",
        run: rank_one,
    },
    Suite {
        number: 13,
        id: "stabilization",
        title: "canonical elements along even shifts",
        paper_ref: "Prop M12-7.8; Prop xiCB; Prop phi-2p; Prop i-transfer",
        run: stabilization,
    },
    Suite {
        number: 14,
        id: "positivity",
        title: "class canonical bases have positive structure constants",
        paper_ref: "Thm posCBj and its even-rank analogue",
        run: positivity,
    },
    Suite {
        number: 15,
        id: "embeddings",
        title: "embeddings send canonical elements to canonical elements",
        paper_ref: "Lemma nm; Lemma lr; Prop sameCB",
        run: embeddings,
    },
];

fn c2(r: [[i64; 2]; 2]) -> Cell {
    Cell::rows(r)
}

fn lin(terms: &[(Laurent, Cell)]) -> Element {
    Element::from_terms(terms.iter().cloned().map(|(k, c)| (c, k)))
}

fn vv(k: i64) -> Laurent {
    Laurent::v(k)
}

/// Cells of `x` whose coefficient is not in `N[v, v^-1]`.
pub fn negative_coefficients(x: &Element) -> Vec<Cell> {
    x.iter().filter(|(_, k)| !k.is_nonneg()).map(|(c, _)| c.clone()).collect()
}

// 1 -----------------------------------------------------------------------

fn q_identities(log: &mut Log) -> Result<()> {
    for a in -8..=8 {
        for p in 0..=8 {
            log.check(check_q_identity(QIdentity::LemmaSum1 { a, p }), || format!("sum=1 at a={a}, p={p}"));
        }
    }
    for m in 0..=16 {
        log.check(check_q_identity(QIdentity::LemmaSum1b { m }), || format!("sum=1b at m={m}"));
    }
    for m in -6..=10 {
        for b in 0..=6u32 {
            let bi = b as i64;
            log.equal(&qbinom_bar(m, b), &qbinom(m, b).shift(2 * bi * (bi - m)), || format!("bar binomial m={m}, b={b}"));
        }
    }
    Ok(())
}

// 2 -----------------------------------------------------------------------

fn calibration(log: &mut Log) -> Result<()> {
    let alg = Algebra::limit_a(2);
    // f1: E-generator times a lower cell
    for a11 in -3..=3 {
        for a21 in 1..=3 {
            for a22 in -5..=2 {
                let g = GeneratorCell::E { h: 0, a: 1, lambda: vec![a11, a21 + a22 + 1] };
                let x = Element::basis(c2([[a11, 0], [a21, a22 + 1]]));
                let got = generator_multiply(&alg, &g, &x)?;
                let want = lin(&[
                    (Laurent::one(), c2([[a11, 1], [a21, a22]])),
                    (qint_bar(a11 + 1).shift(a11 - a22 - 1), c2([[a11 + 1, 0], [a21 - 1, a22 + 1]])),
                ]);
                log.equal(&got, &want, || format!("f1 at a11={a11}, a21={a21}, a22={a22}"));
            }
        }
    }
    // f2: the shift map on a standard element
    for a11 in -3..=3 {
        for a21 in 1..=3 {
            for a22 in -5..=2 {
                for p in -3..=3 {
                    let got = xi_shift(&alg, &Element::basis(c2([[a11, 1], [a21, a22]])), p)?;
                    let want = lin(&[
                        (Laurent::one(), c2([[a11 + p, 1], [a21, a22 + p]])),
                        (qint_bar(p).shift(-a11 - a22 - 3), c2([[a11 + p + 1, 0], [a21 - 1, a22 + p + 1]])),
                    ]);
                    log.equal(&got, &want, || format!("f2 at a11={a11}, a21={a21}, a22={a22}, p={p}"));
                }
            }
        }
    }
    let two = vv(1) + vv(-1);
    let d = c2([[0, 1], [1, -3]]);
    let e = c2([[0, 1], [0, -2]]);
    let f = c2([[0, 0], [1, -2]]);
    let m = c2([[-1, 1], [2, -3]]);
    let top = c2([[-1, 2], [2, -4]]);
    let low = c2([[1, 0], [0, -2]]);
    let std = |a: &Cell, b: &Cell| -> Result<Element> { Ok((*alg.mul_std(a, b)?).clone()) };
    // E: [D] = [e][f] - v^2 [low]
    let got = &std(&e, &f)? - &Element::term(low.clone(), vv(2));
    log.equal(&got, &Element::basis(d.clone()), || "identity E".into());
    // F
    let want = lin(&[(two.clone(), m.clone()), (-(Laurent::one() + vv(2)), f.clone())]);
    log.equal(&std(&f, &d)?, &want, || "identity F".into());
    // G
    log.equal(&std(&e, &m)?, &lin(&[(two.clone(), top.clone())]), || "identity G".into());
    // H
    log.equal(&std(&e, &f)?, &lin(&[(Laurent::one(), d.clone()), (vv(2), low.clone())]), || "identity H".into());
    // R: {D}{D} in the standard basis
    let cd = alg.canonical(&d)?;
    let got = alg.mul(&cd, &cd)?;
    let want = lin(&[
        (&two * &two, top),
        (-(vv(-2).scale(2) + Laurent::one() + vv(2).scale(2)), d),
        (vv(-4) - vv(2) - vv(4), low),
    ]);
    log.equal(&got, &want, || "identity R".into());
    Ok(())
}

// 3 -----------------------------------------------------------------------

fn is_generator_a(c: &Cell) -> bool {
    let off: Vec<(usize, usize, i64)> = c.off_diagonal().filter(|x| x.2 != 0).collect();
    off.is_empty() || (off.len() == 1 && off[0].0.abs_diff(off[0].1) == 1)
}

fn oracle(log: &mut Log) -> Result<()> {
    let mut compare = |alg: &Algebra, left: &[Cell], right: &[Cell]| -> Result<()> {
        for a in left {
            for b in right.iter().filter(|b| a.co() == b.ro()) {
                let want = oracle_product(Family::A, a, b, &PRIMES)?.element();
                let got = alg.mul_std(a, b)?;
                log.check(*got == want, || format!("[{a}][{b}] in {}: engine {got}, oracle {want}", alg.context()));
            }
        }
        Ok(())
    };
    for d in 1..=3 {
        let cells = all_theta(2, d);
        compare(&Algebra::schur_a(2, d), &cells, &cells)?;
    }
    for d in 1..=3 {
        let cells = all_theta(3, d);
        let gens: Vec<Cell> = cells.iter().filter(|c| is_generator_a(c)).cloned().collect();
        compare(&Algebra::schur_a(3, d), &gens, &cells)?;
    }
    log.note(format!(
        "each coefficient interpolated through at least {} primes from {PRIMES:?} and verified at a held-out prime",
        crate::flagconv::MIN_FIT_PRIMES
    ));
    Ok(())
}

// 4 -----------------------------------------------------------------------

fn lemma_n2(log: &mut Log) -> Result<()> {
    let alg = Algebra::limit_a(2);
    for a21 in 1..=3 {
        for a22 in -5..=-2 {
            for p in -2..=0 {
                let x = c2([[p, 1], [a21, a22 + p]]);
                let want = lin(&[
                    (Laurent::one(), x.clone()),
                    (-qint(p + 1).shift(a22 + 1), c2([[p + 1, 0], [a21 - 1, a22 + p + 1]])),
                ]);
                log.equal(&*alg.canonical(&x)?, &want, || format!("a21={a21}, a22={a22}, p={p}"));
            }
        }
    }
    Ok(())
}

// 5 -----------------------------------------------------------------------

fn shift(log: &mut Log) -> Result<()> {
    let alg = Algebra::limit_a(2);
    for a21 in 1..=3 {
        for a22 in -5..=-2 {
            let a = c2([[0, 1], [a21, a22]]);
            let ca = alg.canonical(&a)?;
            for p in [-1, -2] {
                let got = xi_shift(&alg, &ca, p)?;
                let k = qint_bar(p).shift(-a22 - 3) + qint(p).shift(a22 + 3);
                let mut want = (*alg.canonical(&a.shift(p))?).clone();
                want.add_scaled(&*alg.canonical(&c2([[p + 1, 0], [a21 - 1, a22 + p + 1]]))?, &k);
                log.equal(&got, &want, || format!("correction at a21={a21}, a22={a22}, p={p}"));
            }
            if a22 <= -3 {
                for p in [1, 2] {
                    let got = xi_shift(&alg, &ca, p)?;
                    let shifted = alg.canonical(&a.shift(p))?;
                    log.check(got != *shifted, || format!("xi_{p} fixes {{{a}}} at a21={a21}, a22={a22}"));
                }
            }
        }
    }
    Ok(())
}

// 6 -----------------------------------------------------------------------

fn neg_blm(log: &mut Log) -> Result<()> {
    let alg = Algebra::limit_a(2);
    let d = c2([[0, 1], [1, -3]]);
    let got = alg.cb_product(&d, &d)?;
    let two = vv(1) + vv(-1);
    let want = lin(&[
        (&two * &two, c2([[-1, 2], [2, -4]])),
        (-(vv(-2).scale(2) + Laurent::one() + vv(2).scale(2)), d.clone()),
        (-(vv(-4) + vv(-2) + Laurent::constant(2) + vv(2) + vv(4)), c2([[1, 0], [0, -2]])),
    ]);
    log.equal(&got, &want, || "{D}{D} in the stably canonical basis".into());
    let neg = negative_coefficients(&got);
    log.check(!neg.is_empty(), || "the positivity checker did not flag the product".into());
    log.note(format!("coefficients outside N[v,v^-1] at {neg:?}"));
    Ok(())
}

// 7 -----------------------------------------------------------------------

/// `k F^(i) u+`, with zero coefficients dropped.
fn single(i: i64, k: Laurent) -> ModVec {
    ModVec([(i, k)].into_iter().filter(|(_, k)| !k.is_zero()).collect())
}

fn cb_module(log: &mut Log) -> Result<()> {
    let alg = Algebra::limit_a(2);
    let (mut corrected, mut total) = (0, 0);
    for a21 in 1..=3 {
        for a22 in -6..=-2 {
            for p in -2..=0 {
                let module = Gl2Module::new(p + a21, a22 + p + 1)?;
                let x = alg.canonical(&c2([[p, 1], [a21, a22 + p]]))?;
                let got = gl2_act(&alg, &x, &module, &ModVec::highest())?;
                let printed = single(a21 - 1, qint_bar(-a22 - 2 * p - 3).shift(a22 + 2 * p + 3));
                let fixed = single(a21 - 1, qint_sym(-a22 - 2 * p - 2));
                log.check(got == printed, || {
                    format!(
                        "a21={a21}, a22={a22}, p={p}: coefficient {}, printed {}",
                        got.coeff(a21 - 1),
                        printed.coeff(a21 - 1)
                    )
                });
                total += 1;
                corrected += usize::from(got == fixed);
            }
        }
    }
    log.note(format!(
        "the symmetric quantum integer [-a22-2p-2] is the coefficient in {corrected}/{total} instances; \
         it is never 1, so the image is not a canonical basis vector"
    ));
    Ok(())
}

// 8 -----------------------------------------------------------------------

fn chi(log: &mut Log) -> Result<()> {
    for n in [2usize, 3] {
        let alg = Algebra::schur_a(n, n as i64);
        for a in all_theta(n, n as i64).into_iter().filter(is_permutation) {
            let got = chi_eval(&alg, &*alg.canonical(&a)?)?;
            let want = if a == Cell::identity(n) { Laurent::one() } else { Laurent::zero() };
            log.equal(&got, &want, || format!("chi({{{a}}})"));
        }
    }
    Ok(())
}

// 9 -----------------------------------------------------------------------

fn transfer_positivity(log: &mut Log) -> Result<()> {
    for (n, d) in [(2usize, 2i64), (3, 1)] {
        let src = Algebra::schur_a(n, d + n as i64);
        let dst = Algebra::schur_a(n, d);
        let (mut single, mut zero, mut total) = (0, 0, 0);
        for a in all_theta(n, d + n as i64) {
            let img = transfer_a(&src, &dst, &*src.canonical(&a)?)?;
            let cb = dst.to_canonical(&img)?;
            let neg = negative_coefficients(&cb);
            log.check(neg.is_empty(), || format!("{{{a}}} -> {cb}"));
            total += 1;
            zero += usize::from(cb.is_zero());
            single += usize::from(cb.len() == 1 && cb.iter().all(|(_, k)| k.is_one()));
        }
        log.note(format!(
            "S({n},{}) -> S({n},{d}): {single} canonical elements go to a single canonical element, {zero} to zero, of {total}",
            d + n as i64
        ));
    }
    Ok(())
}

// 10 ----------------------------------------------------------------------

fn neg_cbj(log: &mut Log) -> Result<()> {
    let lim = Algebra::limit_j(3);
    for (a, b) in [(-3i64, -2i64), (-5, -3)] {
        let ca = Cell::rows([[a, 1, 0], [0, b, 0], [0, 1, a]]);
        let cb = Cell::rows([[a, 0, 0], [1, b, 1], [0, 0, a]]);
        let cc = Cell::rows([[a - 1, 1, 0], [1, b, 1], [0, 1, a - 1]]);
        let cd = Cell::diag(&[a, b + 2, a]);
        let k = (vv(b + a) + vv(b - a)) * qint_bar(b + 1);
        let mut want = (*lim.canonical(&cc)?).clone();
        want.add_scaled(&*lim.canonical(&cd)?, &k);
        // sample {B + pI}{A + pI} in S^j(3, d) at shifts with nonnegative
        // entries and odd middle, fit in v^-p, evaluate at p = 0
        let mut p0 = 1 - (a - 1).min(b);
        if (b + p0).rem_euclid(2) == 0 {
            p0 += 1;
        }
        let fam = stabilization_fit(&Cell::identity(3), p0, |p| {
            let s = Algebra::schur_j(3, (ca.total() + 3 * p - 1) / 2);
            s.mul(&*s.canonical(&cb.shift(p))?, &*s.canonical(&ca.shift(p))?)
        })?;
        let got = fam.eval(0)?;
        log.equal(&got, &want, || format!("fitted {{B}}{{A}} at (a,b)=({a},{b})"));
        let direct = lim.mul(&*lim.canonical(&cb)?, &*lim.canonical(&ca)?)?;
        log.equal(&direct, &want, || format!("direct {{B}}{{A}} at (a,b)=({a},{b})"));
        log.note(format!(
            "(a,b)=({a},{b}): fit of degree {} from p={p0}; coefficient of {{D}} is {k}{}",
            fam.degree,
            if k.is_nonneg() { "" } else { " (not in N[v,v^-1])" }
        ));
        if b % 2 == 0 {
            log.note(format!("(a,b)=({a},{b}) has an even middle entry; the fit runs over odd shifts"));
        }
    }
    Ok(())
}

// 11 ----------------------------------------------------------------------

fn presentation(log: &mut Log) -> Result<()> {
    let (mut printed_failures, mut instances) = (0, 0);
    let mut run = |alg: Algebra, log: &mut Log| -> Result<()> {
        let (reports, printed) = if alg.kind() == crate::engine::Kind::J {
            (check_j_relations(&alg, Convention::Engine)?, check_j_relations(&alg, Convention::Printed)?)
        } else {
            (check_i_relations(&alg, Convention::Engine)?, check_i_relations(&alg, Convention::Printed)?)
        };
        for r in &reports {
            instances += r.instances;
            log.check(r.holds(), || format!("{} in {}: {}", r.family, alg.context(), r.failures.join("; ")));
        }
        printed_failures += printed.iter().map(|r| r.failures.len()).sum::<usize>();
        Ok(())
    };
    for d in 0..=3 {
        run(Algebra::schur_j(3, d), log)?;
    }
    for d in 0..=5 {
        run(Algebra::schur_i(2, d), log)?;
    }
    for d in 0..=2 {
        run(Algebra::schur_i(4, d), log)?;
    }
    log.note(format!(
        "{instances} relation instances checked with the normalization the products satisfy; the printed scalars fail in {printed_failures} of them"
    ));
    Ok(())
}

// 12 ----------------------------------------------------------------------

fn rank_one(log: &mut Log) -> Result<()> {
    for d in 0..=20 {
        let alg = Algebra::schur_i(2, d);
        for a in (d - 10).max(0)..=d.min(10) {
            let r = d - a;
            let c = rank1_cell(a, r).expect("nonnegative parameters");
            log.equal(&*alg.bar_std(&c)?, &rank1_bar(a, r)?, || format!("bar[A_{{{a},{r}}}]"));
            log.equal(&*alg.canonical(&c)?, &rank1_canonical(a, r)?, || format!("{{A_{{{a},{r}}}}}"));
        }
    }
    for d in 0..=8 {
        let alg = Algebra::schur_i(2, d);
        let t = t_sum(&alg)?;
        for a in 0..=d {
            let c = rank1_cell(a, d - a).expect("nonnegative parameters");
            let want = t_times(a, d - a);
            log.equal(&alg.mul(&t, &Element::basis(c.clone()))?, &want, || format!("t * [A_{{{a},{}}}]", d - a));
            log.equal(&alg.apply_step(Step::T, &Element::basis(c)), &want, || {
                format!("t action on [A_{{{a},{}}}]", d - a)
            });
        }
    }
    for d in 2..=10 {
        let src = Algebra::schur_i(2, d);
        let dst = Algebra::schur_i(2, d - 2);
        let h = transfer_i_hom(&src, &dst)?;
        for a in 0..=d {
            let b = d - a;
            let c = rank1_cell(a, b).expect("nonnegative parameters");
            log.equal(&*h.eval_std(&c)?, &rank1_transfer(a, b), || format!("transfer of [A_{{{a},{b}}}]"));
            log.equal(&h.eval(&*src.canonical(&c)?)?, &rank1_transfer_canonical(a, b)?, || {
                format!("transfer of {{A_{{{a},{b}}}}}")
            });
        }
    }
    Ok(())
}

// 13 ----------------------------------------------------------------------

/// Odd-rank representatives: off-diagonal entries in `0..=max_off`, first
/// diagonal entry in `{0, 1}`, odd middle entry within 3 of it.
fn xi_tilde_3(max_off: i64) -> Vec<Cell> {
    let mut out = Vec::new();
    for x01 in 0..=max_off {
        for x02 in 0..=max_off {
            for x10 in 0..=max_off {
                for a in 0..=1 {
                    for m in (a - 3..=a + 3).filter(|m: &i64| m.rem_euclid(2) == 1) {
                        out.push(Cell::rows([[a, x01, x02], [x10, m, x10], [x02, x01, a]]));
                    }
                }
            }
        }
    }
    out
}

/// Even-rank representatives `[a 0 b; 0 1 0; b 0 a]`, `b <= max_off`,
/// `a` in `-max_off..=1`.
fn xi_iota_tilde_2(max_off: i64) -> Vec<Cell> {
    (0..=max_off)
        .flat_map(|b| (-max_off..=1).map(move |a| Cell::rows([[a, 0, b], [0, 1, 0], [b, 0, a]])))
        .collect()
}

/// Largest shift exercised by the stabilization suite.
const MAX_SHIFT: i64 = 12;

fn stabilization(log: &mut Log) -> Result<()> {
    let lim = Algebra::limit_j(3);
    let unit = Cell::identity(3);
    let mut onset_over_bound = 0;
    for a in xi_tilde_3(2) {
        let p_large = large_shift(&a, &unit);
        let b = sl_canonical(&lim, &a)?;
        for p in (p_large..=MAX_SHIFT.max(p_large)).step_by(2) {
            let ap = a.shift(p);
            let d = (ap.total() - 1) / 2;
            let schur = Algebra::schur_j(3, d);
            let cp = schur.canonical(&ap)?;
            // transfer S^j(3, d) -> S^j(3, d - 3)
            if p >= 2 && a.shift(p - 2).all_nonneg() {
                let low = Algebra::schur_j(3, d - 3);
                let h = transfer_j_hom(&schur, &low)?;
                let got = h.eval(&cp)?;
                log.equal(&got, &*low.canonical(&a.shift(p - 2))?, || format!("transfer of {{{ap}}}"));
            }
            // shift by -2 in the limit algebra
            let xi = coideal::xi_hom(&lim, -2)?;
            let got = xi.eval(&*lim.canonical(&ap)?)?;
            let want = lim.canonical(&a.shift(p - 2))?;
            log.equal(&got, &*want, || format!("xi_-2 {{{ap}}}"));
            // class canonical element projected to weight d
            let got = coideal::project_class(&lim, &b, d)?;
            log.equal(&got, &*cp, || format!("projection of b[{a}] to weight {d}"));
        }
        onset_over_bound = onset_over_bound.max(b.p0 - p_large);
    }
    log.note(format!(
        "odd rank: {} representatives, shifts from the nonnegativity bound to {MAX_SHIFT}; class elements stabilize at most {onset_over_bound} past the bound",
        xi_tilde_3(2).len()
    ));
    let lim = Algebra::limit_i(2);
    let unit = coideal::unit(&lim);
    for a in xi_iota_tilde_2(3) {
        let p_large = large_shift(&a, &unit);
        for p in (p_large..=MAX_SHIFT.max(p_large)).step_by(2) {
            let ap = a.shift_iota(p);
            let xi = coideal::xi_hom(&lim, -2)?;
            let got = xi.eval(&*lim.canonical(&ap)?)?;
            log.equal(&got, &*lim.canonical(&a.shift_iota(p - 2))?, || format!("xi_-2 {{{ap}}}"));
        }
    }
    Ok(())
}

// 14 ----------------------------------------------------------------------

/// Pairs of representatives composable after an even shift of the second;
/// returns the shifted second cell.
fn composable(a: &Cell, b: &Cell, unit: &Cell) -> Option<Cell> {
    let (co, ro) = (a.co(), b.ro());
    let step = unit.co();
    let l = (0..co.len()).find(|&i| step[i] != 0)?;
    let s = co[l] - ro[l];
    if s % 2 != 0 {
        return None;
    }
    let moved = b.plus(&unit.scaled(s));
    (moved.ro() == co).then_some(moved)
}

fn positivity(log: &mut Log) -> Result<()> {
    let cases = [
        (Algebra::limit_j(3), Cell::identity(3), xi_tilde_3(1)),
        (Algebra::limit_i(2), Cell::identity_iota(3), xi_iota_tilde_2(2)),
    ];
    for (alg, unit, reps) in &cases {
        let mut products = 0;
        for a in reps {
            for b in reps {
                let Some(b) = composable(a, b, unit) else { continue };
                let (p, x) = stable_cb_product(alg, a, &b, unit, 0)?;
                let neg = negative_coefficients(&x);
                log.check(neg.is_empty(), || format!("b[{a}] b[{b}] at shift {p}: {x}"));
                products += 1;
            }
        }
        log.note(format!("{}: {products} products of {} representatives", alg.context(), reps.len()));
    }
    Ok(())
}

// 15 ----------------------------------------------------------------------

/// Rank-2 type A cells with off-diagonal entries `<= 2` and diagonal
/// entries in `-2..=1`.
fn theta_tilde_2() -> Vec<Cell> {
    let mut out = Vec::new();
    for x in 0..=2 {
        for y in 0..=2 {
            for a in -2..=1 {
                for b in -2..=1 {
                    out.push(c2([[a, x], [y, b]]));
                }
            }
        }
    }
    out
}

fn embeddings(log: &mut Log) -> Result<()> {
    let a1 = Algebra::limit_a(1);
    let a2 = Algebra::limit_a(2);
    let a3 = Algebra::limit_a(3);
    let j3 = Algebra::limit_j(3);
    let j5 = Algebra::limit_j(5);
    // m = 1 inside n = 3: every 1 x 1 cell is diagonal
    for k in [0, 1] {
        for x in -3..=3 {
            let c = Cell::diag(&[x]);
            let ca = a1.canonical(&c)?;
            let tau = c.embed_tau(3, k)?;
            log.equal(&ca.map_cells(|z| z.embed_tau(3, k).ok()), &*j3.canonical(&tau)?, || format!("tau^{k}_1,3 {{{c}}}"));
            let iota = c.embed_iota(3, k)?;
            log.equal(&ca.map_cells(|z| z.embed_iota(3, k).ok()), &*a3.canonical(&iota)?, || format!("iota^{k}_1,3 {{{c}}}"));
            let b = sl_canonical(&j3, &tau)?;
            log.equal(&b.at(&j3, 0)?, &Element::basis(tau.clone()), || format!("b of the class of {tau}"));
        }
    }
    log.note("m = 1 inside n = 3: all 1 x 1 cells are diagonal, so these instances only see idempotents; m = 2 inside n = 3 (type A) and n = 5 (odd rank) are checked as well");
    // m = 2 inside n = 3 (type A) and n = 5 (odd rank)
    for k in [0, 1] {
        for c in theta_tilde_2() {
            let ca = a2.canonical(&c)?;
            let iota = c.embed_iota(3, k)?;
            log.equal(&ca.map_cells(|z| z.embed_iota(3, k).ok()), &*a3.canonical(&iota)?, || format!("iota^{k}_2,3 {{{c}}}"));
            let tau = c.embed_tau(5, k)?;
            log.equal(&ca.map_cells(|z| z.embed_tau(5, k).ok()), &*j5.canonical(&tau)?, || format!("tau^{k}_2,5 {{{c}}}"));
        }
    }
    // the embedding of rank-2 products, on generator pairs
    for k in [0, 1] {
        for a in theta_tilde_2().iter().filter(|c| is_generator_a(c)) {
            for b in theta_tilde_2().iter().filter(|b| b.ro() == a.co()) {
                let ab = a2.mul_std(a, b)?;
                let got = j5.mul_std(&a.embed_tau(5, k)?, &b.embed_tau(5, k)?)?;
                log.equal(&*got, &ab.map_cells(|z| z.embed_tau(5, k).ok()), || format!("tau^{k}_2,5 [{a}][{b}]"));
            }
        }
    }
    // class elements: tau^{k+l} takes the type A class element at shift 2l
    // to the odd-rank class element of tau^k(A) at shift 2l
    for k in [0, 1] {
        for c in theta_tilde_2() {
            let ba = class_element(&a2, &c)?;
            let bj = sl_canonical(&j5, &c.embed_tau(5, k)?)?;
            let l = (ba.p0.max(bj.p0) + 1) / 2;
            let lhs = ba.at(&a2, 2 * l)?.map_cells(|z| z.embed_tau(5, k + l).ok());
            log.equal(&lhs, &bj.at(&j5, 2 * l)?, || format!("tau^{k}_2,5 b[{c}] at shift {}", 2 * l));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_numbered_in_order() {
        for (i, s) in all().iter().enumerate() {
            assert_eq!(s.number as usize, i + 1);
            assert_eq!(find(s.id).unwrap().number, s.number);
        }
        assert_eq!(find("negblm").unwrap().number, 6);
        assert_eq!(find("10").unwrap().id, "negCBj");
        assert!(find("nope").is_none());
        for k in KNOWN_FAILURES {
            assert!(find(k).is_some());
        }
    }

    #[test]
    fn composable_shifts() {
        let u = Cell::identity(3);
        let a = Cell::rows([[0, 1, 0], [0, 1, 0], [0, 1, 0]]);
        let b = Cell::diag(&[-1, 1, -1]);
        assert_eq!(composable(&a, &b, &u), Some(Cell::diag(&[0, 2, 0])).filter(|c| c.ro() == a.co()));
    }
}
