//! Brute-force convolution oracle: flags and isotropic flags over small
//! prime fields, relative-position matrices, fiber counts of the
//! convolution product, and interpolation of those counts in `q`.

pub mod cache;
pub mod linalg;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::engine::Element;
use crate::error::{Error, Result};
use crate::lattice::{cells_with_sums, Cell, Context, Shape};
use crate::laurent::Laurent;
use linalg::{for_each_subspace_pruned, form, Field, Subspace};

/// Default bound on visited subspace-chain nodes per enumeration.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// Primes used for interpolation, in order of use.
pub const PRIMES: [u64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

/// Flags in `F_q^D` (type A) or isotropic flags in `F_q^D`, `D` odd, for
/// the anti-diagonal symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    BC,
}

/// A chain `0 = V_0 ⊆ V_1 ⊆ ... ⊆ V_n = F_q^D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    pub spaces: Vec<Subspace>,
}

impl Flag {
    pub fn steps(&self) -> usize {
        self.spaces.len() - 1
    }

    /// Step dimensions `dim V_i - dim V_{i-1}`.
    pub fn weight(&self) -> Vec<i64> {
        self.spaces.windows(2).map(|w| (w[1].dim() - w[0].dim()) as i64).collect()
    }

    /// The flag of coordinate subspaces with the given step dimensions.
    pub fn standard(weight: &[i64]) -> Flag {
        let d: i64 = weight.iter().sum();
        let mut spaces = vec![Subspace::zero(d as usize)];
        let mut m = 0;
        for w in weight {
            m += *w as usize;
            spaces.push(Subspace::coordinate(d as usize, m));
        }
        Flag { spaces }
    }
}

/// An enumerated flag variety.
#[derive(Clone, Debug)]
pub struct FlagSpace {
    pub family: Family,
    pub weight: Vec<i64>,
    pub q: u64,
    pub flags: Vec<Flag>,
}

/// Relative position: `a_ij = c_ij - c_{i-1,j} - c_{i,j-1} + c_{i-1,j-1}`
/// with `c_ij = dim(V_i ∩ V'_j)`.
pub fn orbit_invariant(q: u64, f: &Flag, g: &Flag) -> Cell {
    let fld = Field::new(q);
    let (n, m) = (f.steps(), g.steps());
    assert_eq!(n, m, "flags with different numbers of steps");
    let mut c = vec![vec![0i64; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            c[i][j] = f.spaces[i].meet_dim(fld, &g.spaces[j]) as i64;
        }
    }
    let mut a = Cell::zeros(n);
    for i in 1..=n {
        for j in 1..=n {
            a.set(i - 1, j - 1, c[i][j] - c[i - 1][j] - c[i][j - 1] + c[i - 1][j - 1]);
        }
    }
    a
}

/// Prescribed intersection dimensions between the flag being built and a
/// fixed flag: `dims[k][i] = dim(X_k ∩ V_i)`.
struct Constraint<'a> {
    fixed: &'a Flag,
    dims: Vec<Vec<usize>>,
}

impl<'a> Constraint<'a> {
    /// `relpos(fixed, X) = a`: `dim(V_i ∩ X_k) = sum_{i' <= i, k' <= k} a_{i'k'}`.
    fn left(fixed: &'a Flag, a: &Cell) -> Self {
        let n = a.n();
        let mut dims = vec![vec![0usize; n + 1]; n + 1];
        for k in 1..=n {
            for i in 1..=n {
                let s: i64 = (0..i).flat_map(|r| (0..k).map(move |c| (r, c))).map(|(r, c)| a.at(r, c)).sum();
                dims[k][i] = s as usize;
            }
        }
        Constraint { fixed, dims }
    }

    /// `relpos(X, fixed) = b`: `dim(X_k ∩ V'_j) = sum_{k' <= k, j' <= j} b_{k'j'}`.
    fn right(fixed: &'a Flag, b: &Cell) -> Self {
        Self::left(fixed, &transpose(b))
    }

    fn holds(&self, fld: Field, k: usize, x: &Subspace) -> bool {
        (1..self.dims[k].len()).all(|i| x.meet_dim(fld, &self.fixed.spaces[i]) == self.dims[k][i])
    }
}

fn transpose(a: &Cell) -> Cell {
    let n = a.n();
    let mut t = Cell::zeros(n);
    for i in 0..n {
        for j in 0..n {
            t.set(j, i, a.at(i, j));
        }
    }
    t
}

/// Depth-first enumeration of flags of a given weight satisfying
/// constraints level by level.
struct Search<'a> {
    fld: Field,
    family: Family,
    weight: &'a [i64],
    cons: Vec<Constraint<'a>>,
    budget: u64,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(family: Family, weight: &'a [i64], q: u64, budget: u64) -> Result<Self> {
        if family == Family::BC {
            if q == 2 {
                return Err(Error::EvenField(q));
            }
            let n = weight.len();
            let d: i64 = weight.iter().sum();
            if n % 2 == 0 || d % 2 == 0 || (0..n).any(|i| weight[i] != weight[n - 1 - i]) {
                return Err(Error::ShapeMismatch(format!("{weight:?} is not an isotropic flag type")));
            }
        }
        if weight.iter().any(|w| *w < 0) {
            return Err(Error::ShapeMismatch(format!("negative step in {weight:?}")));
        }
        Ok(Search { fld: Field::new(q), family, weight, cons: Vec::new(), budget, nodes: 0 })
    }

    fn ambient(&self) -> usize {
        self.weight.iter().sum::<i64>() as usize
    }

    /// Number of levels chosen freely; the rest follow by perpendicularity.
    fn levels(&self) -> usize {
        match self.family {
            Family::A => self.weight.len() - 1,
            Family::BC => self.weight.len() / 2,
        }
    }

    fn cum(&self, k: usize) -> usize {
        self.weight[..k].iter().sum::<i64>() as usize
    }

    /// Visit every admissible flag; `visit` returns `false` to stop.
    fn run<F: FnMut(&Flag) -> bool>(&mut self, visit: &mut F) -> Result<bool> {
        let d = self.ambient();
        let mut chain = vec![Subspace::zero(d)];
        self.extend(&mut chain, visit)
    }

    fn extend<F: FnMut(&Flag) -> bool>(&mut self, chain: &mut Vec<Subspace>, visit: &mut F) -> Result<bool> {
        let k = chain.len();
        if k > self.levels() {
            let flag = self.complete(chain);
            let n = self.weight.len();
            for lvl in k..n {
                if !self.cons.iter().all(|c| c.holds(self.fld, lvl, &flag.spaces[lvl])) {
                    return Ok(true);
                }
            }
            return Ok(visit(&flag));
        }
        let fld = self.fld;
        let u = chain[k - 1].clone();
        let target = self.cum(k);
        let (base, isotropic) = match self.family {
            Family::A => (Subspace::full(self.ambient()), false),
            Family::BC => (u.perp(fld), true),
        };
        // vectors completing `u` to `base`
        let mut comp: Vec<Vec<u64>> = Vec::new();
        let mut acc = u.clone();
        for r in base.basis() {
            let s = Subspace::span(fld, self.ambient(), vec![r.clone()]);
            if !acc.contains(fld, &s) {
                acc = acc.sum(fld, &s);
                comp.push(r.clone());
            }
        }
        if target < u.dim() || target - u.dim() > comp.len() {
            return Ok(true);
        }
        let mut candidates = Vec::new();
        let mut over = false;
        let budget = self.budget;
        let mut nodes = self.nodes;
        let amb = u.ambient();
        let lift = |c: &[u64]| -> Vec<u64> {
            let mut v = vec![0u64; amb];
            for (t, x) in c.iter().enumerate() {
                if *x != 0 {
                    for (vi, ci) in v.iter_mut().zip(&comp[t]) {
                        *vi = fld.add(*vi, fld.mul(*x, *ci));
                    }
                }
            }
            v
        };
        let mut lifted: Vec<Vec<u64>> = Vec::new();
        let cons = &self.cons;
        for_each_subspace_pruned(
            fld,
            comp.len(),
            target - u.dim(),
            |rows| {
                nodes += 1;
                if nodes > budget {
                    over = true;
                }
                if over {
                    return false;
                }
                // rows before the last were accepted already
                lifted.truncate(rows.len() - 1);
                let x = lift(rows.last().unwrap());
                if isotropic && (form(fld, &x, &x) != 0 || lifted.iter().any(|y| form(fld, &x, y) != 0)) {
                    return false;
                }
                lifted.push(x);
                if !cons.is_empty() {
                    let mut basis = u.basis().to_vec();
                    basis.extend(lifted.iter().cloned());
                    let part = Subspace::span(fld, amb, basis);
                    let left = target - part.dim();
                    for c in cons {
                        for i in 1..c.dims[k].len() {
                            let m = part.meet_dim(fld, &c.fixed.spaces[i]);
                            if m > c.dims[k][i] || m + left < c.dims[k][i] {
                                lifted.pop();
                                return false;
                            }
                        }
                    }
                }
                true
            },
            |coords| {
                let mut rows = u.basis().to_vec();
                rows.extend(coords.iter().map(|c| lift(c)));
                candidates.push(Subspace::span(fld, amb, rows));
                true
            },
        );
        self.nodes = nodes;
        if over {
            return Err(Error::TooLarge(format!(
                "more than {} subspace nodes for weight {:?} over F_{}",
                self.budget, self.weight, fld.q
            )));
        }
        for w in candidates {
            if !self.cons.iter().all(|c| c.holds(fld, k, &w)) {
                continue;
            }
            chain.push(w);
            let go = self.extend(chain, visit)?;
            chain.pop();
            if !go {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn complete(&self, chain: &[Subspace]) -> Flag {
        let n = self.weight.len();
        let mut spaces = chain.to_vec();
        match self.family {
            Family::A => spaces.push(Subspace::full(self.ambient())),
            Family::BC => {
                for k in (0..=n / 2).rev() {
                    spaces.push(chain[k].perp(self.fld));
                }
            }
        }
        Flag { spaces }
    }
}

/// All flags of the given step dimensions.
pub fn enumerate_flags(family: Family, weight: &[i64], q: u64) -> Result<FlagSpace> {
    enumerate_flags_with_budget(family, weight, q, DEFAULT_BUDGET)
}

pub fn enumerate_flags_with_budget(family: Family, weight: &[i64], q: u64, budget: u64) -> Result<FlagSpace> {
    let mut s = Search::new(family, weight, q, budget)?;
    let mut flags = Vec::new();
    s.run(&mut |f: &Flag| {
        flags.push(f.clone());
        true
    })?;
    Ok(FlagSpace { family, weight: weight.to_vec(), q, flags })
}

impl Family {
    /// The flag family whose orbits index the cells of `context`.
    pub fn of_context(context: Context) -> Family {
        if context.is_type_a() {
            Family::A
        } else {
            Family::BC
        }
    }
}

/// A pair of flags in relative position `c`, with the second flag standard.
pub fn representative_pair(family: Family, c: &Cell, q: u64) -> Result<(Flag, Flag)> {
    let fixed = Flag::standard(&c.co());
    let ro = c.ro();
    let mut s = Search::new(family, &ro, q, DEFAULT_BUDGET)?;
    s.cons.push(Constraint::right(&fixed, c));
    let mut found = None;
    s.run(&mut |f: &Flag| {
        found = Some(f.clone());
        false
    })?;
    let f = found.ok_or_else(|| Error::InvalidCell(format!("{c} is not a relative position")))?;
    Ok((f, fixed))
}

/// `#{X : relpos(F, X) = a, relpos(X, F') = b}` for a fixed pair in
/// relative position `c`.
pub fn convolution_count(family: Family, a: &Cell, b: &Cell, c: &Cell, q: u64) -> Result<u64> {
    check_triple(a, b, c)?;
    let (f, g) = representative_pair(family, c, q)?;
    let w = a.co();
    let mut s = Search::new(family, &w, q, DEFAULT_BUDGET)?;
    s.cons.push(Constraint::left(&f, a));
    s.cons.push(Constraint::right(&g, b));
    let mut count = 0u64;
    s.run(&mut |_| {
        count += 1;
        true
    })?;
    Ok(count)
}

/// `#{F' : relpos(F, F') = a}` for a fixed flag `F`.
pub fn fiber_count(family: Family, a: &Cell, q: u64) -> Result<u64> {
    let f = Flag::standard(&a.ro());
    let w = a.co();
    let mut s = Search::new(family, &w, q, DEFAULT_BUDGET)?;
    s.cons.push(Constraint::left(&f, a));
    let mut count = 0u64;
    s.run(&mut |_| {
        count += 1;
        true
    })?;
    Ok(count)
}

fn check_triple(a: &Cell, b: &Cell, c: &Cell) -> Result<()> {
    if a.co() != b.ro() || a.ro() != c.ro() || b.co() != c.co() {
        return Err(Error::WeightMismatch(format!("({a}, {b}, {c}) is not composable")));
    }
    Ok(())
}

/// Integer polynomial in `q`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructurePolynomial {
    pub count_poly: Vec<BigInt>,
    /// Raw counts `(q, N(q))` used for the fit, the held-out one last.
    pub samples: Vec<(u64, u64)>,
    pub held_out: u64,
}

impl StructurePolynomial {
    pub fn eval(&self, q: u64) -> BigInt {
        let q = BigInt::from(q);
        self.count_poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * &q + c)
    }

    /// `N(v^2)` as a Laurent polynomial.
    pub fn in_v(&self) -> Laurent {
        Laurent::from_pairs(self.count_poly.iter().enumerate().map(|(k, c)| (2 * k as i64, c.clone())))
    }

    pub fn degree(&self) -> Option<usize> {
        self.count_poly.iter().rposition(|c| !c.is_zero())
    }
}

/// Lagrange interpolation through `(x, y)` points; `None` if some
/// coefficient is not an integer.
pub fn interpolate(points: &[(u64, u64)]) -> Option<Vec<BigInt>> {
    let m = points.len();
    let mut coeffs = vec![BigRational::zero(); m];
    for (i, &(xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= c.clone() * BigRational::from_integer(BigInt::from(xj));
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi as i64 - xj as i64));
        }
        let scale = BigRational::from_integer(BigInt::from(yi)) / denom;
        for (k, c) in basis.into_iter().enumerate() {
            coeffs[k] += c * scale.clone();
        }
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(m);
    for c in coeffs {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    Some(out)
}

/// Fewest primes an interpolation is fitted through (a held-out prime is
/// always added on top).
pub const MIN_FIT_PRIMES: usize = 3;

/// Fit `q -> count(q)` by a polynomial: starting at degree `start`, use
/// `max(deg + 1, MIN_FIT_PRIMES)` primes and verify at the next one; raise
/// the degree by two on failure.
pub fn fit_counts<F: FnMut(u64) -> Result<u64>>(start: usize, primes: &[u64], mut count: F) -> Result<StructurePolynomial> {
    let mut cache: BTreeMap<u64, u64> = BTreeMap::new();
    let mut deg = start;
    loop {
        let m = (deg + 1).max(MIN_FIT_PRIMES);
        if m + 1 > primes.len() {
            return Err(Error::InterpolationUnstable(format!(
                "no stable fit up to degree {} with primes {primes:?}",
                deg.saturating_sub(2)
            )));
        }
        let mut pts = Vec::new();
        for &p in &primes[..m + 1] {
            let y = match cache.get(&p) {
                Some(y) => *y,
                None => {
                    let y = count(p)?;
                    cache.insert(p, y);
                    y
                }
            };
            pts.push((p, y));
        }
        let (fit, held) = pts.split_at(m);
        if let Some(poly) = interpolate(fit) {
            let sp = StructurePolynomial { count_poly: poly, samples: pts.clone(), held_out: held[0].0 };
            if sp.eval(held[0].0) == BigInt::from(held[0].1) {
                return Ok(sp);
            }
        }
        deg += 2;
    }
}

/// The structure polynomial `N_{A,B}^C(q)`.
pub fn structure_poly(family: Family, a: &Cell, b: &Cell, c: &Cell, primes: &[u64]) -> Result<StructurePolynomial> {
    check_triple(a, b, c)?;
    // the count is at most either fiber count, whose degrees are the
    // orbit statistics of `a` and of the transpose of `b`
    let start = normalization_closed(family, a).min(normalization_closed(family, &transpose(b))).max(0) as usize;
    let primes: Vec<u64> = primes.iter().copied().filter(|p| family == Family::A || *p != 2).collect();
    fit_counts(start, &primes, |q| convolution_count(family, a, b, c, q))
}

/// The closed-form orbit statistic used for normalization.
pub fn normalization_closed(family: Family, a: &Cell) -> i64 {
    match family {
        Family::A => a.d_stat(),
        Family::BC => a.d_stat_iso(),
    }
}

/// Degree of the fiber-count polynomial `#{F' : relpos(F, F') = a}`;
/// its leading coefficient must be one.
pub fn normalization_exponent(family: Family, a: &Cell, primes: &[u64]) -> Result<i64> {
    let start = normalization_closed(family, a).max(0) as usize;
    let start = start.min(primes.len().saturating_sub(2));
    let sp = fit_counts(start, primes, |q| fiber_count(family, a, q)).map_err(|e| match e {
        Error::InterpolationUnstable(m) => Error::NonPolynomialFiber(m),
        e => e,
    })?;
    let deg = sp.degree().unwrap_or(0);
    if !sp.count_poly[deg].is_one() {
        return Err(Error::NonPolynomialFiber(format!("fiber count of {a} is not monic: {:?}", sp.count_poly)));
    }
    Ok(deg as i64)
}

/// Audit record of an oracle product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleProduct {
    pub family: Family,
    pub left: Cell,
    pub right: Cell,
    pub terms: Vec<(Cell, StructurePolynomial)>,
}

impl OracleProduct {
    /// `[A][B] = sum_C v^{d_C - d_A - d_B} N_C(v^2) [C]`.
    pub fn element(&self) -> Element {
        let f = self.family;
        let (da, db) = (normalization_closed(f, &self.left), normalization_closed(f, &self.right));
        Element::from_terms(
            self.terms
                .iter()
                .map(|(c, sp)| (c.clone(), sp.in_v().shift(normalization_closed(f, c) - da - db))),
        )
    }
}

/// `[A][B]` from convolution counts, over all candidate cells `C`.
pub fn oracle_product(family: Family, a: &Cell, b: &Cell, primes: &[u64]) -> Result<OracleProduct> {
    if a.co() != b.ro() {
        return Err(Error::WeightMismatch(format!("co({a}) != ro({b})")));
    }
    let shape = Shape {
        centro: family == Family::BC,
        trivial_middle: false,
        nonneg: true,
    };
    let mut terms = Vec::new();
    for c in cells_with_sums(&a.ro(), &b.co(), shape) {
        let sp = structure_poly(family, a, b, &c, primes)?;
        if sp.degree().is_some() {
            terms.push((c, sp));
        }
    }
    Ok(OracleProduct { family, left: a.clone(), right: b.clone(), terms })
}

/// Compare a claimed product `[A][B] = x` against raw convolution counts at
/// the given primes, cell by cell, without interpolating. Returns the first
/// mismatch as `(C, q, predicted, counted)`.
pub fn check_product_at(family: Family, a: &Cell, b: &Cell, x: &Element, primes: &[u64]) -> Result<Option<(Cell, u64, BigInt, u64)>> {
    let shape = Shape {
        centro: family == Family::BC,
        trivial_middle: false,
        nonneg: true,
    };
    let (da, db) = (normalization_closed(family, a), normalization_closed(family, b));
    for c in cells_with_sums(&a.ro(), &b.co(), shape) {
        let n = x.coeff(&c).shift(da + db - normalization_closed(family, &c));
        if n.terms().any(|(k, _)| k % 2 != 0 || k < 0) {
            return Err(Error::NonPolynomialFiber(format!("coefficient of {c} is not a count polynomial: {n}")));
        }
        for &q in primes {
            let predicted: BigInt = n.terms().map(|(k, v)| v * BigInt::from(q).pow((k / 2) as u32)).sum();
            let counted = convolution_count(family, a, b, &c, q)?;
            if predicted != BigInt::from(counted) {
                return Ok(Some((c, q, predicted, counted)));
            }
        }
    }
    Ok(None)
}

/// [`oracle_product`] through the on-disk cache.
pub fn oracle_multiply(family: Family, a: &Cell, b: &Cell, primes: &[u64]) -> Result<Element> {
    let store = cache::Cache::from_env();
    if let Some(p) = store.load(family, a, b, primes)? {
        return Ok(p.element());
    }
    let p = oracle_product(family, a, b, primes)?;
    store.store(&p, primes)?;
    Ok(p.element())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_in_plane() {
        let fs = enumerate_flags(Family::A, &[1, 1], 3).unwrap();
        assert_eq!(fs.flags.len(), 4);
        assert_eq!(enumerate_flags(Family::A, &[3], 5).unwrap().flags.len(), 1);
        let a = &fs.flags[0];
        let b = &fs.flags[1];
        assert_eq!(orbit_invariant(3, a, a), Cell::rows([[1, 0], [0, 1]]));
        assert_eq!(orbit_invariant(3, a, b), Cell::rows([[0, 1], [1, 0]]));
    }

    #[test]
    fn isotropic_lines_match_quadric() {
        // nonzero isotropic vectors of x0 x2 + x1^2 / 2 ... up to scalars: q + 1
        for q in [3, 5, 7] {
            let fs = enumerate_flags(Family::BC, &[1, 1, 1], q).unwrap();
            let f = Field::new(q);
            let mut iso = 0;
            for x in 0..q * q * q {
                let v = [x % q, (x / q) % q, x / (q * q)];
                if v != [0, 0, 0] && form(f, &v, &v) == 0 {
                    iso += 1;
                }
            }
            assert_eq!(fs.flags.len() as u64, iso / (q - 1));
            for x in &fs.flags {
                for y in &fs.flags {
                    assert!(orbit_invariant(q, x, y).is_centro_symmetric());
                }
            }
        }
        assert_eq!(enumerate_flags(Family::BC, &[1, 1, 1], 2).unwrap_err(), Error::EvenField(2));
    }

    #[test]
    fn budget_is_enforced() {
        let e = enumerate_flags_with_budget(Family::A, &[1, 1, 1, 1], 5, 100).unwrap_err();
        assert!(matches!(e, Error::TooLarge(_)));
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let pts: Vec<(u64, u64)> = [3u64, 5, 7, 11].iter().map(|&q| (q, q * q * q + 2 * q + 1)).collect();
        let p = interpolate(&pts).unwrap();
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(2), BigInt::from(0), BigInt::from(1)]);
    }

    #[test]
    fn printed_rank_one_product() {
        // [0 1; 0 2][0 0; 1 2] = [0 1; 1 1] + v^-2 [1 0; 0 2]
        let p = oracle_product(Family::A, &Cell::rows([[0, 1], [0, 2]]), &Cell::rows([[0, 0], [1, 2]]), &PRIMES).unwrap();
        let e = p.element();
        assert_eq!(e.coeff(&Cell::rows([[0, 1], [1, 1]])), Laurent::one());
        assert_eq!(e.coeff(&Cell::rows([[1, 0], [0, 2]])), Laurent::v(-2));
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn fiber_degree_matches_statistic() {
        for a in [Cell::rows([[0, 1], [1, 0]]), Cell::rows([[1, 1], [1, 0]]), Cell::rows([[1, 0], [0, 2]])] {
            assert_eq!(normalization_exponent(Family::A, &a, &PRIMES).unwrap(), a.d_stat());
        }
        for a in [
            Cell::rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
            Cell::rows([[0, 1, 0], [1, 1, 1], [0, 1, 0]]),
            Cell::rows([[1, 0, 1], [0, 1, 0], [1, 0, 1]]),
            Cell::rows([[0, 1, 1], [0, 1, 0], [1, 1, 0]]),
        ] {
            assert_eq!(normalization_exponent(Family::BC, &a, &PRIMES).unwrap(), a.d_stat_iso(), "{a}");
        }
    }
}
