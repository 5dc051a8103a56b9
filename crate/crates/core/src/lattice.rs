//! Integer matrices indexing standard bases: membership tests, row/column
//! sums, the partial orders, the `d_A` statistics, shifts, classes modulo
//! shifts, embeddings, and finite down-sets.
//!
//! Indices are 0-based in code. For an `n x n` matrix with `n = 2r + 1` the
//! middle index is `r`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    n: usize,
    a: Vec<i64>,
}

impl Cell {
    pub fn zeros(n: usize) -> Self {
        Cell { n, a: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("matrix must be square and nonempty".into()));
        }
        Ok(Cell { n, a: rows.concat() })
    }

    /// Panicking constructor for literals in code and tests.
    pub fn rows<const N: usize>(rows: [[i64; N]; N]) -> Self {
        Cell {
            n: N,
            a: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn diag(d: &[i64]) -> Self {
        let mut c = Cell::zeros(d.len());
        for (i, x) in d.iter().enumerate() {
            c.set(i, i, *x);
        }
        c
    }

    pub fn identity(n: usize) -> Self {
        Cell::diag(&vec![1; n])
    }

    /// `I` with the middle diagonal entry removed (`n` odd).
    pub fn identity_iota(n: usize) -> Self {
        let mut c = Cell::identity(n);
        c.set(n / 2, n / 2, 0);
        c
    }

    /// Elementary matrix `E_{ij}`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut c = Cell::zeros(n);
        c.set(i, j, 1);
        c
    }

    /// `E^theta_{ij} = E_{ij} + E_{n-1-i, n-1-j}` (0-based).
    pub fn theta(n: usize, i: usize, j: usize) -> Self {
        let mut c = Cell::unit(n, i, j);
        c.add_at(n - 1 - i, n - 1 - j, 1);
        c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.a[i * self.n + j] = x;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, x: i64) {
        self.a[i * self.n + j] += x;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.a.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    pub fn ro(&self) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.at(i, j)).sum()).collect()
    }

    pub fn co(&self) -> Vec<i64> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.at(i, j)).sum()).collect()
    }

    /// `|A|`, the sum of all entries.
    pub fn total(&self) -> i64 {
        self.a.iter().sum()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.at(i, i)).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.off_diagonal().all(|(_, _, x)| x == 0)
    }

    pub fn off_diagonal(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n)
            .flat_map(move |i| (0..self.n).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(move |(i, j)| (i, j, self.at(i, j)))
    }

    pub fn off_diagonal_nonneg(&self) -> bool {
        self.off_diagonal().all(|(_, _, x)| x >= 0)
    }

    pub fn all_nonneg(&self) -> bool {
        self.a.iter().all(|x| *x >= 0)
    }

    pub fn is_centro_symmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| self.at(i, j) == self.at(n - 1 - i, n - 1 - j)))
    }

    /// Middle row and column are those of the identity (`n` odd).
    pub fn has_trivial_middle(&self) -> bool {
        let m = self.n / 2;
        (0..self.n).all(|j| self.at(m, j) == (j == m) as i64 && self.at(j, m) == (j == m) as i64)
    }

    pub fn middle(&self) -> i64 {
        self.at(self.n / 2, self.n / 2)
    }

    pub fn plus(&self, other: &Cell) -> Cell {
        assert_eq!(self.n, other.n);
        Cell {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn minus(&self, other: &Cell) -> Cell {
        assert_eq!(self.n, other.n);
        Cell {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Cell {
        Cell {
            n: self.n,
            a: self.a.iter().map(|x| x * k).collect(),
        }
    }

    /// `A + pI`.
    pub fn shift(&self, p: i64) -> Cell {
        let mut c = self.clone();
        for i in 0..self.n {
            c.add_at(i, i, p);
        }
        c
    }

    /// `A + p * (I - E_{mid,mid})`.
    pub fn shift_iota(&self, p: i64) -> Cell {
        let mut c = self.shift(p);
        let m = self.n / 2;
        c.add_at(m, m, -p);
        c
    }

    /// Off-diagonal weight `sum |i - j| a_ij`; strictly decreases along the
    /// generator recursions.
    pub fn spread(&self) -> i64 {
        self.off_diagonal()
            .map(|(i, j, x)| (i as i64 - j as i64).abs() * x)
            .sum()
    }

    /// Upper corner sum `sum_{r <= i, s >= j} a_rs` (i < j).
    fn upper_sum(&self, i: usize, j: usize) -> i64 {
        let mut s = 0;
        for r in 0..=i {
            for c in j..self.n {
                s += self.at(r, c);
            }
        }
        s
    }

    /// Lower corner sum `sum_{r >= i, s <= j} a_rs` (i > j).
    fn lower_sum(&self, i: usize, j: usize) -> i64 {
        let mut s = 0;
        for r in i..self.n {
            for c in 0..=j {
                s += self.at(r, c);
            }
        }
        s
    }

    /// All corner sums, upper ones first, in a fixed order.
    pub fn corner_sums(&self) -> Vec<i64> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * (n - 1));
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.upper_sum(i, j));
            }
        }
        for i in 0..n {
            for j in 0..i {
                out.push(self.lower_sum(i, j));
            }
        }
        out
    }

    /// The quadratic statistic `sum_{i >= k, j < l} a_ij a_kl`.
    pub fn d_stat(&self) -> i64 {
        let n = self.n;
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                let x = self.at(i, j);
                if x == 0 {
                    continue;
                }
                for k in 0..=i {
                    for l in j + 1..n {
                        s += x * self.at(k, l);
                    }
                }
            }
        }
        s
    }

    /// Orbit-dimension statistic for isotropic flags (`n` odd):
    /// `(d_stat - sum_{i >= mid+1 > j} a_ij) / 2` with 1-based `mid+1 = r+1`.
    pub fn d_stat_iso(&self) -> i64 {
        let n = self.n;
        let r = n / 2;
        let mut corr = 0;
        for i in r..n {
            for j in 0..r {
                corr += self.at(i, j);
            }
        }
        let twice = self.d_stat() - corr;
        debug_assert!(twice % 2 == 0, "odd isotropic statistic for {self}");
        twice / 2
    }

    /// Block diagonal `[A, kI]` of size `n`.
    pub fn embed_iota(&self, n: usize, k: i64) -> Result<Cell> {
        let m = self.n;
        if m >= n {
            return Err(Error::SizeError(format!("iota needs m < n, got m={m}, n={n}")));
        }
        let mut c = Cell::zeros(n);
        for i in 0..m {
            for j in 0..m {
                c.set(i, j, self.at(i, j));
            }
        }
        for i in m..n {
            c.set(i, i, k);
        }
        Ok(c)
    }

    /// `[A, 2kI + eps, J A J]` of odd size `n`.
    pub fn embed_tau(&self, n: usize, k: i64) -> Result<Cell> {
        let m = self.n;
        if n % 2 == 0 || 2 * m > n {
            return Err(Error::SizeError(format!("tau needs odd n >= 2m, got m={m}, n={n}")));
        }
        let mut c = Cell::zeros(n);
        for i in 0..m {
            for j in 0..m {
                c.set(i, j, self.at(i, j));
                c.set(n - 1 - i, n - 1 - j, self.at(i, j));
            }
        }
        for i in m..n - m {
            c.set(i, i, 2 * k);
        }
        c.add_at(n / 2, n / 2, 1);
        Ok(c)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Cell {
    type Err = Error;
    /// JSON row list, e.g. `[[0,1],[1,-3]]`.
    fn from_str(s: &str) -> Result<Cell> {
        let rows: Vec<Vec<i64>> = serde_json::from_str(s)?;
        Cell::from_rows(&rows)
    }
}

impl Serialize for Cell {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        Cell::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Which index set a matrix is meant to live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Context {
    /// `n x n`, entries `>= 0`, `|A| = d`.
    ThetaD { n: usize, d: i64 },
    /// Off-diagonal entries `>= 0`.
    ThetaTilde { n: usize },
    /// Centro-symmetric, entries `>= 0`, `|A| = 2d + 1`.
    XiD { n: usize, d: i64 },
    /// Centro-symmetric, off-diagonal `>= 0`, odd middle entry.
    XiTilde { n: usize },
    /// `XiD` of size `nn + 1` with identity middle row/column.
    XiIotaD { nn: usize, d: i64 },
    /// `XiTilde` of size `nn + 1` with identity middle row/column.
    XiIotaTilde { nn: usize },
}

impl Context {
    pub fn size(&self) -> usize {
        match *self {
            Context::ThetaD { n, .. } | Context::ThetaTilde { n } => n,
            Context::XiD { n, .. } | Context::XiTilde { n } => n,
            Context::XiIotaD { nn, .. } | Context::XiIotaTilde { nn } => nn + 1,
        }
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self, Context::ThetaD { .. } | Context::ThetaTilde { .. })
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::ThetaD { n, d } => write!(f, "ThetaD({n},{d})"),
            Context::ThetaTilde { n } => write!(f, "ThetaTilde({n})"),
            Context::XiD { n, d } => write!(f, "XiD({n},{d})"),
            Context::XiTilde { n } => write!(f, "XiTilde({n})"),
            Context::XiIotaD { nn, d } => write!(f, "XiIotaD({nn},{d})"),
            Context::XiIotaTilde { nn } => write!(f, "XiIotaTilde({nn})"),
        }
    }
}

impl FromStr for Context {
    type Err = Error;
    fn from_str(s: &str) -> Result<Context> {
        let bad = || Error::Parse(format!("bad context {s:?}"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args: Vec<i64> = rest
            .trim_end_matches(')')
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let u = |i: usize| -> Result<usize> {
            args.get(i).and_then(|x| usize::try_from(*x).ok()).ok_or_else(bad)
        };
        let d = || args.get(1).copied().ok_or_else(bad);
        Ok(match name {
            "ThetaD" => Context::ThetaD { n: u(0)?, d: d()? },
            "ThetaTilde" => Context::ThetaTilde { n: u(0)? },
            "XiD" => Context::XiD { n: u(0)?, d: d()? },
            "XiTilde" => Context::XiTilde { n: u(0)? },
            "XiIotaD" => Context::XiIotaD { nn: u(0)?, d: d()? },
            "XiIotaTilde" => Context::XiIotaTilde { nn: u(0)? },
            _ => return Err(bad()),
        })
    }
}

/// A matrix validated against a [`Context`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellMatrix {
    pub n: usize,
    #[serde(with = "context_string")]
    pub context: Context,
    pub rows: Cell,
}

mod context_string {
    use super::Context;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &Context, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&c.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Context, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl CellMatrix {
    pub fn cell(&self) -> &Cell {
        &self.rows
    }
}

/// Validate `entries` against `context`, naming the first violated condition.
pub fn classify(entries: &Cell, context: Context) -> Result<CellMatrix> {
    let n = entries.n();
    let fail = |m: String| Err(Error::InvalidCell(format!("{entries} in {context}: {m}")));
    if n != context.size() {
        return fail(format!("expected size {}", context.size()));
    }
    let needs_odd = !context.is_type_a();
    if needs_odd && n % 2 == 0 {
        return fail("size must be odd".into());
    }
    match context {
        Context::ThetaD { d, .. } => {
            if !entries.all_nonneg() {
                return fail("negative entry".into());
            }
            if entries.total() != d {
                return fail(format!("|A| = {} != {d}", entries.total()));
            }
        }
        Context::ThetaTilde { .. } => {
            if !entries.off_diagonal_nonneg() {
                return fail("negative off-diagonal entry".into());
            }
        }
        Context::XiD { d, .. } | Context::XiIotaD { d, .. } => {
            if !entries.all_nonneg() {
                return fail("negative entry".into());
            }
            if !entries.is_centro_symmetric() {
                return fail("not centro-symmetric".into());
            }
            if entries.total() != 2 * d + 1 {
                return fail(format!("|A| = {} != 2d+1 = {}", entries.total(), 2 * d + 1));
            }
        }
        Context::XiTilde { .. } | Context::XiIotaTilde { .. } => {
            if !entries.off_diagonal_nonneg() {
                return fail("negative off-diagonal entry".into());
            }
            if !entries.is_centro_symmetric() {
                return fail("not centro-symmetric".into());
            }
            if entries.middle().rem_euclid(2) != 1 {
                return fail("middle entry is even".into());
            }
        }
    }
    if matches!(context, Context::XiIotaD { .. } | Context::XiIotaTilde { .. }) && !entries.has_trivial_middle() {
        return fail("middle row/column is not trivial".into());
    }
    Ok(CellMatrix {
        n,
        context,
        rows: entries.clone(),
    })
}

/// Row and column sums.
pub fn ro_co(a: &Cell) -> (Vec<i64>, Vec<i64>) {
    (a.ro(), a.co())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Preceq,
    Sqsubseteq,
}

/// `A ⪯ B`: every upper corner sum `sum_{r<=i, s>=j}` (i < j) and every lower
/// corner sum `sum_{r>=i, s<=j}` (i > j) of `A` is at most that of `B`.
/// For centro-symmetric matrices the lower conditions are implied by the
/// upper ones.
pub fn preceq(a: &Cell, b: &Cell) -> bool {
    a.corner_sums().iter().zip(b.corner_sums()).all(|(x, y)| *x <= y)
}

/// `A ⊑ B`: `A ⪯ B` with equal row and column sums.
pub fn sqsubseteq(a: &Cell, b: &Cell) -> bool {
    a.ro() == b.ro() && a.co() == b.co() && preceq(a, b)
}

pub fn order_cmp(a: &Cell, b: &Cell, which: Order) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::ShapeMismatch(format!("{a} vs {b}")));
    }
    Ok(match which {
        Order::Preceq => preceq(a, b),
        Order::Sqsubseteq => sqsubseteq(a, b),
    })
}

/// Shift unit for [`shift_cell`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftUnit {
    I,
    IotaI,
}

/// `A + pI` or `A + p𝕀`; the coideal contexts only allow even `p`.
pub fn shift_cell(a: &CellMatrix, p: i64, unit: ShiftUnit) -> Result<CellMatrix> {
    let coideal = !a.context.is_type_a();
    if coideal && p % 2 != 0 {
        return Err(Error::ParityError(format!("shift by odd p = {p} in {}", a.context)));
    }
    let rows = match unit {
        ShiftUnit::I => a.rows.shift(p),
        ShiftUnit::IotaI => a.rows.shift_iota(p),
    };
    let context = match a.context {
        Context::ThetaD { n, d } => Context::ThetaD { n, d: d + p * n as i64 },
        Context::XiD { n, d } => Context::XiD { n, d: d + p * n as i64 / 2 },
        Context::XiIotaD { nn, d } => Context::XiIotaD { nn, d: d + p * nn as i64 / 2 },
        c => c,
    };
    classify(&rows, context)
}

/// Equivalence-class families modulo diagonal shifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassFamily {
    /// modulo `Z I`, representative with `|A|` in `[0, n)`.
    ThetaBar,
    /// modulo `2Z I`, representative with `|A| = 2d + 1`, `d` in `[0, n)`.
    XiHat,
    /// modulo `2Z 𝕀`, representative with `|A| = 2d + 1`, `d` in `[0, nn)`.
    XiIotaHat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassRep {
    pub family: ClassFamily,
    pub representative: Cell,
}

impl ClassRep {
    /// The shift `p` with `representative + p * unit == a`.
    pub fn offset_of(&self, a: &Cell) -> i64 {
        a.at(0, 0) - self.representative.at(0, 0)
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Canonical class representative of `a`.
pub fn class_of(a: &Cell, family: ClassFamily) -> ClassRep {
    let n = a.n() as i64;
    let representative = match family {
        ClassFamily::ThetaBar => a.shift(-floor_div(a.total(), n)),
        ClassFamily::XiHat => {
            let d = (a.total() - 1) / 2;
            a.shift(-2 * floor_div(d, n))
        }
        ClassFamily::XiIotaHat => {
            let nn = n - 1;
            let d = (a.total() - 1) / 2;
            a.shift_iota(-2 * floor_div(d, nn))
        }
    };
    ClassRep { family, representative }
}

/// Which structural constraints a down-set enumeration must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub centro: bool,
    pub trivial_middle: bool,
    /// Diagonal entries must be `>= 0` (Schur level).
    pub nonneg: bool,
}

/// All `B ⊑ A` respecting `shape`, including `A` itself; sorted.
pub fn down_set(a: &Cell, shape: Shape) -> Vec<Cell> {
    let n = a.n();
    let ro = a.ro();
    let co = a.co();
    let sums = a.corner_sums();
    // positions to enumerate; with centro-symmetry only one of each mirror pair
    let mut pos: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if shape.centro && (n - 1 - i, n - 1 - j) < (i, j) {
                continue;
            }
            if shape.trivial_middle && (i == n / 2 || j == n / 2) {
                continue;
            }
            pos.push((i, j));
        }
    }
    // entry bound from the corner sums of A
    let bound = |i: usize, j: usize| -> i64 {
        if i < j {
            let mut s = 0;
            for r in 0..=i {
                for c in j..n {
                    s += a.at(r, c);
                }
            }
            s
        } else {
            let mut s = 0;
            for r in i..n {
                for c in 0..=j {
                    s += a.at(r, c);
                }
            }
            s
        }
    };
    let bounds: Vec<i64> = pos.iter().map(|&(i, j)| bound(i, j)).collect();
    let mut out = Vec::new();
    let mut cur = Cell::zeros(n);
    fn rec(
        k: usize,
        pos: &[(usize, usize)],
        bounds: &[i64],
        cur: &mut Cell,
        shape: Shape,
        ro: &[i64],
        co: &[i64],
        sums: &[i64],
        out: &mut Vec<Cell>,
    ) {
        let n = cur.n();
        if k == pos.len() {
            let mut b = cur.clone();
            for i in 0..n {
                let off: i64 = (0..n).filter(|&j| j != i).map(|j| b.at(i, j)).sum();
                b.set(i, i, ro[i] - off);
            }
            if shape.nonneg && b.diagonal().iter().any(|x| *x < 0) {
                return;
            }
            if b.co() != co {
                return;
            }
            if shape.trivial_middle && b.middle() != 1 {
                return;
            }
            if b.corner_sums().iter().zip(sums).all(|(x, y)| x <= y) {
                out.push(b);
            }
            return;
        }
        let (i, j) = pos[k];
        for x in 0..=bounds[k] {
            cur.set(i, j, x);
            if shape.centro {
                cur.set(n - 1 - i, n - 1 - j, x);
            }
            // prune: partial off-diagonal row sums against a nonnegative diagonal
            if shape.nonneg {
                let off: i64 = (0..n).filter(|&c| c != i).map(|c| cur.at(i, c)).sum();
                if off > ro[i] {
                    break;
                }
                let offc: i64 = (0..n).filter(|&r| r != j).map(|r| cur.at(r, j)).sum();
                if offc > co[j] {
                    break;
                }
            }
            rec(k + 1, pos, bounds, cur, shape, ro, co, sums, out);
        }
        cur.set(i, j, 0);
        if shape.centro {
            cur.set(n - 1 - i, n - 1 - j, 0);
        }
    }
    rec(0, &pos, &bounds, &mut cur, shape, &ro, &co, &sums, &mut out);
    out.sort();
    out
}

/// All nonnegative `n x n` matrices with the given row and column sums
/// respecting `shape`.
pub fn cells_with_sums(ro: &[i64], co: &[i64], shape: Shape) -> Vec<Cell> {
    let n = ro.len();
    // the matrix with all mass pushed to the corners is maximal; instead of
    // constructing it we enumerate with the trivial bounds
    let mut out = Vec::new();
    let mut cur = Cell::zeros(n);
    let mut pos = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if shape.centro && (n - 1 - i, n - 1 - j) < (i, j) {
                continue;
            }
            pos.push((i, j));
        }
    }
    fn rec(k: usize, pos: &[(usize, usize)], cur: &mut Cell, shape: Shape, ro: &[i64], co: &[i64], out: &mut Vec<Cell>) {
        let n = cur.n();
        if k == pos.len() {
            if cur.ro() == ro && cur.co() == co && (!shape.trivial_middle || cur.has_trivial_middle()) {
                out.push(cur.clone());
            }
            return;
        }
        let (i, j) = pos[k];
        let cap = ro[i].min(co[j]);
        for x in 0..=cap.max(0) {
            cur.set(i, j, x);
            if shape.centro {
                cur.set(n - 1 - i, n - 1 - j, x);
            }
            let rs: i64 = (0..n).map(|c| cur.at(i, c)).sum();
            let cs: i64 = (0..n).map(|r| cur.at(r, j)).sum();
            if rs > ro[i] || cs > co[j] {
                break;
            }
            rec(k + 1, pos, cur, shape, ro, co, out);
        }
        cur.set(i, j, 0);
        if shape.centro {
            cur.set(n - 1 - i, n - 1 - j, 0);
        }
    }
    rec(0, &pos, &mut cur, shape, ro, co, &mut out);
    out.sort();
    out
}

/// All compositions of `d` into `n` nonnegative parts.
pub fn compositions(d: i64, n: usize) -> Vec<Vec<i64>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for x in 0..=d.max(-1) {
        for mut rest in compositions(d - x, n - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Every matrix in `Theta_d` of size `n`.
pub fn all_theta(n: usize, d: i64) -> Vec<Cell> {
    let mut out = Vec::new();
    for flat in compositions(d, n * n) {
        out.push(Cell { n, a: flat });
    }
    out.sort();
    out
}

/// Every matrix in `Xi_d` of odd size `n`.
pub fn all_xi(n: usize, d: i64) -> Vec<Cell> {
    let mut out: Vec<Cell> = Vec::new();
    // free positions: the first half in row-major order plus the centre
    let half: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| (i, j) < (n - 1 - i, n - 1 - j))
        .collect();
    let mut cur = Cell::zeros(n);
    fn rec(k: usize, left: i64, half: &[(usize, usize)], cur: &mut Cell, out: &mut Vec<Cell>) {
        let n = cur.n();
        if k == half.len() {
            cur.set(n / 2, n / 2, 2 * left + 1);
            out.push(cur.clone());
            return;
        }
        let (i, j) = half[k];
        for x in 0..=left {
            cur.set(i, j, x);
            cur.set(n - 1 - i, n - 1 - j, x);
            rec(k + 1, left - x, half, cur, out);
        }
        cur.set(i, j, 0);
        cur.set(n - 1 - i, n - 1 - j, 0);
    }
    rec(0, d, &half, &mut cur, &mut out);
    out.sort();
    out
}

/// Every matrix in `Xi^iota_d` of size `nn + 1`.
pub fn all_xi_iota(nn: usize, d: i64) -> Vec<Cell> {
    all_xi(nn + 1, d).into_iter().filter(|c| c.has_trivial_middle()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn classify_examples() {
        let a = Cell::rows([[1, 0, 1], [0, 1, 0], [1, 0, 1]]);
        assert!(classify(&a, Context::XiD { n: 3, d: 2 }).is_ok());
        assert!(classify(&Cell::rows([[0, 1], [1, -3]]), Context::ThetaTilde { n: 2 }).is_ok());
        let e = classify(&Cell::rows([[-1, 1], [0, 0]]), Context::ThetaD { n: 2, d: 0 });
        assert!(matches!(e, Err(Error::InvalidCell(m)) if m.contains("negative")));
    }

    #[test]
    fn sums_and_orders() {
        let a = Cell::rows([[0, 1], [1, -3]]);
        assert_eq!(ro_co(&a), (vec![1, -2], vec![1, -2]));
        let ap = Cell::rows([[1, 0], [0, -2]]);
        assert!(sqsubseteq(&ap, &a));
        assert!(preceq(&a, &a));
        assert!(!preceq(&Cell::rows([[0, 1], [1, 0]]), &Cell::rows([[1, 0], [0, 1]])));
        let a21 = Cell::rows([[2, 0, 1], [0, 1, 0], [1, 0, 2]]);
        assert_eq!(ro_co(&a21), (vec![3, 1, 3], vec![3, 1, 3]));
    }

    #[test]
    fn d_stat_examples() {
        assert_eq!(Cell::identity(3).d_stat(), 0);
        assert_eq!(Cell::rows([[0, 1], [1, 0]]).d_stat(), 1);
        assert_eq!(Cell::diag(&[3, 1, 4]).d_stat(), 0);
    }

    #[test]
    fn shifts_and_classes() {
        let a = Cell::rows([[0, 1], [1, -3]]);
        assert_eq!(a.shift(2), Cell::rows([[2, 1], [1, -1]]));
        assert_eq!(class_of(&a, ClassFamily::ThetaBar), class_of(&a.shift(2), ClassFamily::ThetaBar));
        let aab = Cell::rows([[2, 0, 1], [0, 1, 0], [1, 0, 2]]);
        assert_eq!(aab.shift_iota(2).middle(), 1);
        let cm = classify(&aab, Context::XiTilde { n: 3 }).unwrap();
        assert!(matches!(shift_cell(&cm, 1, ShiftUnit::I), Err(Error::ParityError(_))));
    }

    #[test]
    fn embeddings() {
        let a = Cell::rows([[5]]);
        assert_eq!(a.embed_tau(3, 2).unwrap(), Cell::rows([[5, 0, 0], [0, 5, 0], [0, 0, 5]]));
        assert_eq!(Cell::identity(2).embed_iota(3, 0).unwrap(), Cell::diag(&[1, 1, 0]));
        let t = Cell::rows([[0, 1], [1, -3]]).embed_tau(5, 1).unwrap();
        assert!(classify(&t, Context::XiTilde { n: 5 }).is_ok());
        assert!(Cell::identity(2).embed_tau(3, 0).is_err());
    }

    #[test]
    fn tau_commutes_with_shift() {
        let a = Cell::rows([[1, 2], [0, -1]]);
        for k in -2..3 {
            for l in -2..3 {
                let lhs = a.shift(2 * l).embed_tau(5, k + l).unwrap();
                let rhs = a.embed_tau(5, k).unwrap().shift(2 * l);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn iso_statistic_rank_one() {
        // A_{a,b}: fibre of the maximal isotropic Grassmannian, ab + b(b+1)/2
        for a in 0..5 {
            for b in 0..5 {
                let c = Cell::rows([[a, 0, b], [0, 1, 0], [b, 0, a]]);
                assert_eq!(c.d_stat_iso(), a * b + b * (b + 1) / 2);
            }
        }
    }

    #[test]
    fn preceq_is_partial_order_on_small_classes() {
        for n in 2..=3usize {
            for d in 0..=4i64 {
                let cells = all_theta(n, d);
                let mut by_sums: std::collections::BTreeMap<(Vec<i64>, Vec<i64>), Vec<Cell>> = Default::default();
                for c in cells {
                    by_sums.entry(ro_co(&c)).or_default().push(c);
                }
                for class in by_sums.values() {
                    for x in class {
                        assert!(preceq(x, x));
                        for y in class {
                            if x != y && preceq(x, y) {
                                assert!(!preceq(y, x), "antisymmetry {x} {y}");
                            }
                            for z in class {
                                if preceq(x, y) && preceq(y, z) {
                                    assert!(preceq(x, z));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn large_shift_downsets_have_nonneg_diagonal() {
        // exhaustively over centro-symmetric 3x3 cells with small entries
        let shape = Shape { centro: true, trivial_middle: false, nonneg: false };
        for a12 in 0..=3 {
            for a13 in 0..=3 {
                for a21 in 0..=3 {
                    for a31 in 0..=3 {
                        for a11 in -3..=3 {
                            for a22 in [-3i64, -1, 1, 3] {
                                let a = Cell::rows([[a11, a12, a13], [a21, a22, a21], [a31, a12, a11]]);
                                let off: i64 = a.off_diagonal().map(|x| x.2).sum();
                                let mut p = 0;
                                while (0..3).any(|l| a.at(l, l) + p < off) {
                                    p += 2;
                                }
                                for b in down_set(&a.shift(p), shape) {
                                    assert!(b.diagonal().iter().all(|x| *x >= 0), "{a} p={p} -> {b}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn down_set_matches_brute_force() {
        let shape = Shape { centro: false, trivial_middle: false, nonneg: true };
        for c in all_theta(3, 4) {
            let ds = down_set(&c, shape);
            let brute: Vec<Cell> = all_theta(3, 4).into_iter().filter(|b| sqsubseteq(b, &c)).collect();
            assert_eq!(ds, brute, "{c}");
        }
    }

    #[test]
    fn enumerations_count() {
        assert_eq!(all_theta(2, 2).len(), 10);
        // centro-symmetric 3x3 with |A| = 2d+1: four free pairs + centre
        assert_eq!(all_xi(3, 1).len(), 5);
        assert_eq!(all_xi_iota(2, 3).len(), 4);
    }

    proptest! {
        #[test]
        fn class_rep_is_shift_invariant(rows in proptest::collection::vec(0i64..4, 4), k in -5i64..5) {
            let a = Cell::from_rows(&[rows[0..2].to_vec(), rows[2..4].to_vec()]).unwrap();
            prop_assert_eq!(class_of(&a, ClassFamily::ThetaBar), class_of(&a.shift(k), ClassFamily::ThetaBar));
            let r = class_of(&a, ClassFamily::ThetaBar).representative;
            prop_assert!((0..2).contains(&r.total()));
        }
    }
}
