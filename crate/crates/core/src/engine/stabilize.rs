//! Stabilization in the shift parameter.
//!
//! Products and canonical elements at shift `p` (cells `Z + p U` for a fixed
//! unit `U`, the identity or its trivial-middle variant) have coefficients
//! that are polynomials in `u = v^-p` with coefficients in `Q(v)`. A
//! [`StabilizedFamily`] records samples at even shifts, fits those
//! polynomials by exact Lagrange interpolation, verifies the fit on held-out
//! samples, and evaluates it at any target shift, including shifts where the
//! cells have negative diagonal entries.

use std::collections::BTreeSet;

use super::hom::Hom;
use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::lattice::Cell;
use crate::laurent::Laurent;

/// Initial polynomial degree in `u`; doubled on failure up to [`MAX_DEGREE`].
pub const START_DEGREE: usize = 4;
pub const MAX_DEGREE: usize = 32;
/// Largest shift tried when looking for a stabilized canonical element.
pub const SHIFT_BUDGET: i64 = 20;

/// Samples of an element-valued function of the shift, normalized to the
/// cells `Z = C - p U`, with a verified polynomial fit in `u = v^-p`.
#[derive(Clone, Debug)]
pub struct StabilizedFamily {
    pub unit: Cell,
    /// `(p, normalized element)`, in increasing `p`.
    pub samples: Vec<(i64, Element)>,
    /// Degree of the fit in `u`; the first `degree + 1` samples determine it
    /// and the rest are held out.
    pub degree: usize,
}

fn u_at(p: i64) -> Laurent {
    Laurent::v(-p)
}

/// Normalize `x` (cells at shift `p`) to cells `C - p U`.
pub fn normalize(x: &Element, unit: &Cell, p: i64) -> Element {
    x.map_cells(|c| Some(c.minus(&unit.scaled(p))))
}

/// Lagrange interpolation through `(u_i, c_i)` evaluated at `u*`, with one
/// exact division at the end.
fn lagrange(nodes: &[(Laurent, Laurent)], target: &Laurent) -> Result<Laurent> {
    let m = nodes.len();
    let mut vandermonde = Laurent::one();
    for i in 0..m {
        for j in i + 1..m {
            vandermonde = vandermonde * (&nodes[i].0 - &nodes[j].0);
        }
    }
    let mut num = Laurent::zero();
    for (i, (ui, ci)) in nodes.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let mut basis = ci.clone();
        let mut di = Laurent::one();
        for (j, (uj, _)) in nodes.iter().enumerate() {
            if j != i {
                basis = basis * (target - uj);
                di = di * (ui - uj);
            }
        }
        num += basis * vandermonde.div_exact(&di)?;
    }
    num.div_exact(&vandermonde)
        .map_err(|_| Error::FitUnstable("interpolated coefficient is not a Laurent polynomial".into()))
}

impl StabilizedFamily {
    fn cells(&self) -> BTreeSet<Cell> {
        self.samples.iter().flat_map(|(_, x)| x.cells().cloned()).collect()
    }

    /// The fitted coefficient of normalized cell `z` at shift `p`.
    pub fn coeff_at(&self, z: &Cell, p: i64) -> Result<Laurent> {
        if let Some((_, x)) = self.samples.iter().find(|(q, _)| *q == p) {
            return Ok(x.coeff(z));
        }
        let nodes: Vec<(Laurent, Laurent)> =
            self.samples[..=self.degree].iter().map(|(q, x)| (u_at(*q), x.coeff(z))).collect();
        lagrange(&nodes, &u_at(p))
    }

    /// The fitted element at shift `p`, with cells `Z + p U`.
    pub fn eval(&self, p: i64) -> Result<Element> {
        let mut out = Element::zero();
        for z in self.cells() {
            let k = self.coeff_at(&z, p)?;
            out.add_term(z.plus(&self.unit.scaled(p)), k);
        }
        Ok(out)
    }

    /// Whether the fit through the first `degree + 1` samples reproduces the
    /// remaining ones.
    fn held_out_ok(&self) -> Result<bool> {
        let fit = StabilizedFamily { samples: self.samples[..=self.degree].to_vec(), ..self.clone() };
        for (p, x) in &self.samples[self.degree + 1..] {
            for z in self.cells() {
                match fit.coeff_at(&z, *p) {
                    Ok(k) if k == x.coeff(&z) => {}
                    Ok(_) => return Ok(false),
                    Err(Error::FitUnstable(_)) => return Ok(false),
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(true)
    }

    /// Whether every coefficient is independent of the shift across the
    /// samples (a fit of degree zero).
    pub fn is_constant(&self) -> bool {
        self.samples.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

/// Fit `sample(p)` (an element with cells at shift `p`) for even shifts
/// `p0, p0 + 2, ...`. The degree bound starts at [`START_DEGREE`] and doubles
/// up to [`MAX_DEGREE`]; every fit is checked on one held-out sample.
pub fn stabilization_fit<F>(unit: &Cell, p0: i64, sample: F) -> Result<StabilizedFamily>
where
    F: Fn(i64) -> Result<Element>,
{
    stabilization_fit_from(unit, p0, START_DEGREE, sample)
}

/// [`stabilization_fit`] with an explicit starting degree.
pub fn stabilization_fit_from<F>(unit: &Cell, p0: i64, start: usize, sample: F) -> Result<StabilizedFamily>
where
    F: Fn(i64) -> Result<Element>,
{
    let mut fam = StabilizedFamily { unit: unit.clone(), samples: Vec::new(), degree: start.max(1) };
    loop {
        while fam.samples.len() < fam.degree + 2 {
            let p = p0 + 2 * fam.samples.len() as i64;
            fam.samples.push((p, normalize(&sample(p)?, unit, p)));
        }
        if fam.held_out_ok()? {
            return Ok(fam);
        }
        if fam.degree >= MAX_DEGREE {
            return Err(Error::FitUnstable(format!("no fit of degree <= {MAX_DEGREE} from p = {p0}")));
        }
        fam.degree = (fam.degree * 2).min(MAX_DEGREE);
    }
}

/// The smallest even shift `p` for which every cell below `a + p U` in its
/// down-set has nonnegative diagonal: `a_ll + p >= sum of off-diagonal
/// entries` for all `l` with `U_ll = 1`.
pub fn large_shift(a: &Cell, unit: &Cell) -> i64 {
    let off: i64 = a.off_diagonal().map(|(_, _, x)| x).sum();
    let need = (0..a.n())
        .filter(|&l| unit.at(l, l) != 0)
        .map(|l| off - a.at(l, l))
        .max()
        .unwrap_or(0)
        .max(0);
    need + need % 2
}

/// A canonical element of a limit algebra followed along the shift
/// `a + p U`, certified stable under the shift map: from `p0` on, shifting
/// `{rep + (p + 2) U}` by `-2U` gives `{rep + p U}`, checked at two
/// consecutive even shifts.
///
/// The standard-basis coefficients of `{rep + p U}` need not be constant
/// in `p` (the shift map adds lower terms to standard elements); the
/// element is therefore stored at `p0` and moved by the shift map.
#[derive(Clone, Debug)]
pub struct StableElement {
    pub rep: Cell,
    pub unit: Cell,
    /// The first even shift from which stability was certified.
    pub p0: i64,
    /// `{rep + p0 U}`.
    pub element: Element,
}

impl StableElement {
    /// The element moved by the shift map to `rep + p U`; for `p >= p0`
    /// this is `{rep + p U}`, for smaller `p` (possibly with negative
    /// diagonal entries) it is the shifted canonical element.
    pub fn at(&self, alg: &Algebra, p: i64) -> Result<Element> {
        if p == self.p0 {
            return Ok(self.element.clone());
        }
        let step = self.unit.scaled(p - self.p0);
        Hom::new(alg, alg, move |c| Some(c.plus(&step))).eval(&self.element)
    }
}

/// `{rep + p U}` for the first even `p >= large_shift` such that shifting
/// by `-2U` takes `{rep + (p + 2) U}` to `{rep + p U}` and
/// `{rep + (p + 4) U}` to `{rep + (p + 2) U}`; `NotStabilized` if this does
/// not happen within [`SHIFT_BUDGET`].
pub fn stable_class_element(alg: &Algebra, rep: &Cell, unit: &Cell) -> Result<StableElement> {
    stable_class_element_within(alg, rep, unit, SHIFT_BUDGET)
}

/// [`stable_class_element`] with an explicit largest shift.
pub fn stable_class_element_within(alg: &Algebra, rep: &Cell, unit: &Cell, budget: i64) -> Result<StableElement> {
    let start = large_shift(rep, unit);
    let canonical = |p: i64| -> Result<Element> { Ok((*alg.canonical(&rep.plus(&unit.scaled(p)))?).clone()) };
    let down = unit.scaled(-2);
    let back = Hom::new(alg, alg, move |c| Some(c.plus(&down)));
    let mut elems = vec![canonical(start)?];
    let mut agree = Vec::new();
    let mut p = start;
    while p + 2 <= budget.max(start + 4) {
        let next = canonical(p + 2)?;
        agree.push(back.eval(&next)? == *elems.last().expect("nonempty"));
        elems.push(next);
        p += 2;
        let k = agree.len();
        if k >= 2 && agree[k - 1] && agree[k - 2] {
            let p0 = p - 4;
            return Ok(StableElement { rep: rep.clone(), unit: unit.clone(), p0, element: elems.swap_remove(k - 2) });
        }
    }
    Err(Error::NotStabilized(format!("{{{rep} + p U}} is not shift-stable up to p = {p}")))
}

/// The product `{a + p U} {b + p U}` in the canonical basis, normalized, at
/// the first shift `p >= p_min` where it agrees with shift `p + 2`.
pub fn stable_cb_product(alg: &Algebra, a: &Cell, b: &Cell, unit: &Cell, p_min: i64) -> Result<(i64, Element)> {
    let start = p_min.max(large_shift(a, unit)).max(large_shift(b, unit));
    let start = start + start.rem_euclid(2);
    let norm = |p: i64| -> Result<Element> {
        let x = alg.cb_product(&a.plus(&unit.scaled(p)), &b.plus(&unit.scaled(p)))?;
        Ok(normalize(&x, unit, p))
    };
    let mut p = start;
    let mut cur = norm(p)?;
    while p + 2 <= SHIFT_BUDGET.max(start + 2) {
        let next = norm(p + 2)?;
        if next == cur {
            return Ok((p, cur));
        }
        p += 2;
        cur = next;
    }
    Err(Error::NotStabilized(format!("{{{a}}}{{{b}}} still varies at p = {p}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qint_bar;

    fn c2(r: [[i64; 2]; 2]) -> Cell {
        Cell::rows(r)
    }

    #[test]
    fn idempotent_products_fit_constant() {
        let alg = Algebra::limit_a(2);
        let d = c2([[1, 0], [0, 2]]);
        let fam = stabilization_fit(&Cell::identity(2), 0, |p| {
            let x = d.shift(p);
            Ok((*alg.mul_std(&x, &x)?).clone())
        })
        .unwrap();
        assert!(fam.is_constant());
        assert_eq!(fam.eval(-7).unwrap(), Element::basis(d.shift(-7)));
    }

    #[test]
    fn fitted_products_match_direct_limit_products() {
        let alg = Algebra::limit_a(2);
        let (e, f) = (c2([[0, 1], [0, -2]]), c2([[0, 0], [1, -2]]));
        let fam = stabilization_fit(&Cell::identity(2), 4, |p| Ok((*alg.mul_std(&e.shift(p), &f.shift(p))?).clone())).unwrap();
        assert_eq!(fam.eval(0).unwrap(), *alg.mul_std(&e, &f).unwrap());
        assert_eq!(fam.eval(-3).unwrap(), *alg.mul_std(&e.shift(-3), &f.shift(-3)).unwrap());
    }

    #[test]
    fn shift_correction_is_recovered_from_samples() {
        // the correction coefficient of the shifted cell is v^{-a11-a22-3} bar[p]
        let alg = Algebra::limit_a(2);
        let a = c2([[0, 1], [2, -3]]);
        let low = c2([[1, 0], [1, -2]]);
        let xi = |p: i64| super::super::hom::Hom::new(&alg, &alg, move |c| Some(c.shift(p)));
        let fam = stabilization_fit(&Cell::identity(2), 2, |p| xi(p).eval_std(&a).map(|x| (*x).clone())).unwrap();
        for p in [-4, -1, 0, 3, 9] {
            let expect = qint_bar(p).shift(-a.at(0, 0) - a.at(1, 1) - 3);
            assert_eq!(fam.eval(p).unwrap().coeff(&low.shift(p)), expect, "p = {p}");
        }
    }

    #[test]
    fn large_shift_bound() {
        assert_eq!(large_shift(&c2([[0, 2], [1, -3]]), &Cell::identity(2)), 6);
        assert_eq!(large_shift(&c2([[5, 0], [0, 5]]), &Cell::identity(2)), 0);
    }
}
