//! Homomorphisms and left actions determined by their values on generators.
//!
//! Every standard basis element is reached from an idempotent by the
//! leading-generator recursion of [`Algebra::lead`], so a map that is known
//! to be multiplicative is pinned down by the images of the single-step
//! generators and the idempotents. [`Hom`] evaluates such a map on arbitrary
//! elements; [`Algebra::act`] does the same for a module given by the action
//! of the generators on vectors.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{Algebra, Element, Step};
use crate::error::{Error, Result};
use crate::lattice::Cell;
use crate::laurent::{qfact_sym, Laurent};

/// A free module over Laurent polynomials, as needed by the recursion.
pub trait Vector: Clone {
    fn zero() -> Self;
    fn add_scaled(&mut self, other: &Self, k: &Laurent);
    fn div_exact(&self, k: &Laurent) -> Result<Self>;
}

impl Vector for Element {
    fn zero() -> Self {
        Element::zero()
    }

    fn add_scaled(&mut self, other: &Self, k: &Laurent) {
        Element::add_scaled(self, other, k)
    }

    fn div_exact(&self, k: &Laurent) -> Result<Self> {
        Element::div_exact(self, k)
    }
}

/// A left action described on generators.
pub trait Action {
    type V: Vector;
    /// The single-step generator `step` with column sums `lambda`, applied to `x`.
    fn step(&self, step: Step, lambda: &[i64], x: &Self::V) -> Result<Self::V>;
    /// The idempotent `1_lambda` applied to `x`.
    fn idempotent(&self, lambda: &[i64], x: &Self::V) -> Result<Self::V>;
}

impl Algebra {
    /// `[a] x` for the action `action`.
    pub fn act<M: Action>(&self, action: &M, a: &Cell, x: &M::V) -> Result<M::V> {
        let mut memo = HashMap::new();
        self.act_memo(action, a, x, &mut memo)
    }

    fn act_memo<M: Action>(&self, action: &M, a: &Cell, x: &M::V, memo: &mut HashMap<Cell, M::V>) -> Result<M::V> {
        if a.is_diagonal() {
            return action.idempotent(&a.co(), x);
        }
        if let Some(y) = memo.get(a) {
            return Ok(y.clone());
        }
        let lead = self.lead(a)?;
        let y = self.act_memo(action, &lead.prime, x, memo)?;
        let mut z = action.step(lead.step, &lead.prime.ro(), &y)?;
        for (c, k) in &lead.rest {
            let w = self.act_memo(action, c, x, memo)?;
            z.add_scaled(&w, &-k);
        }
        let z = z.div_exact(&lead.c)?;
        memo.insert(a.clone(), z.clone());
        Ok(z)
    }
}

type CellMap<'a> = Box<dyn Fn(&Cell) -> Option<Cell> + Send + Sync + 'a>;
type StepMap<'a> = Box<dyn Fn(&[i64]) -> Result<Element> + Send + Sync + 'a>;

/// An algebra homomorphism `source -> target` given by a cell map on
/// generator-adjacent cells: `[G] -> [map(G)]` for divided powers and
/// idempotents, `{X} -> {map(X)}` for the canonical `t` cells, and zero
/// whenever the mapped cell is not in the target index set.
pub struct Hom<'a> {
    pub source: &'a Algebra,
    pub target: &'a Algebra,
    map: CellMap<'a>,
    /// Optional image of the single-step `t 1_lambda`, replacing the cell
    /// rule for that generator (the `k`-fold `t` cells keep the cell rule).
    t_image: Option<StepMap<'a>>,
    cache: RwLock<HashMap<Cell, Arc<Element>>>,
}

impl<'a> Hom<'a> {
    pub fn new<F>(source: &'a Algebra, target: &'a Algebra, map: F) -> Self
    where
        F: Fn(&Cell) -> Option<Cell> + Send + Sync + 'a,
    {
        Hom { source, target, map: Box::new(map), t_image: None, cache: Default::default() }
    }

    /// Replace the image of the single-step `t 1_lambda` by `f(lambda)`.
    pub fn with_t_image<F>(mut self, f: F) -> Self
    where
        F: Fn(&[i64]) -> Result<Element> + Send + Sync + 'a,
    {
        self.t_image = Some(Box::new(f));
        self
    }

    /// The mapped cell, if it is a basis element of the target.
    pub fn map_cell(&self, c: &Cell) -> Option<Cell> {
        (self.map)(c).filter(|d| self.target.admissible(d) && d.n() == self.target.n())
    }

    /// Image of a generator-adjacent standard cell (divided power or
    /// idempotent).
    pub fn on_generator(&self, c: &Cell) -> Element {
        self.map_cell(c).map(Element::basis).unwrap_or_default()
    }

    /// Image of a canonical `t` cell.
    pub fn on_canonical_generator(&self, c: &Cell) -> Result<Element> {
        match self.map_cell(c) {
            Some(d) => Ok((*self.target.canonical(&d)?).clone()),
            None => Ok(Element::zero()),
        }
    }

    fn on_t_factor(&self, f: &super::Factor) -> Result<Element> {
        match (&self.t_image, f.k) {
            (Some(img), 1) => img(&f.cell.co()),
            _ => self.on_canonical_generator(&f.cell),
        }
    }

    /// Image of the single-step generator of `step` with column sums `lambda`.
    pub fn step_image(&self, step: Step, lambda: &[i64]) -> Result<Element> {
        let g = self.source.generator(step, lambda);
        if !self.source.admissible(&g) {
            return Ok(Element::zero());
        }
        match (step, &self.t_image) {
            (Step::T, Some(f)) => f(lambda),
            (Step::T, None) => self.on_canonical_generator(&g),
            _ => Ok(self.on_generator(&g)),
        }
    }

    /// Image of `[a]`, by the leading-generator recursion in the source.
    pub fn eval_std(&self, a: &Cell) -> Result<Arc<Element>> {
        if a.is_diagonal() {
            return Ok(Arc::new(self.on_generator(a)));
        }
        if let Some(x) = self.cache.read().unwrap().get(a) {
            return Ok(x.clone());
        }
        let lead = self.source.lead(a)?;
        let g = self.step_image(lead.step, &lead.prime.ro())?;
        let y = self.eval_std(&lead.prime)?;
        let mut z = self.target.mul(&g, &y)?;
        for (c, k) in &lead.rest {
            z.add_scaled(&*self.eval_std(c)?, &-k);
        }
        let z = Arc::new(z.div_exact(&lead.c)?);
        self.cache.write().unwrap().insert(a.clone(), z.clone());
        Ok(z)
    }

    /// Image of an element given in the standard basis.
    pub fn eval(&self, x: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (a, k) in x.iter() {
            out.add_scaled(&*self.eval_std(a)?, k);
        }
        Ok(out)
    }

    /// Image of the monomial `M_a` computed along its word, each factor
    /// sent directly by the cell map. For `E`/`F` factors this is the
    /// divided-power rule; for `t` factors of exponent `k` it is the rule
    /// `{X} -> {map(X)}` applied to the `k`-fold cell.
    pub fn eval_word(&self, a: &Cell) -> Result<Element> {
        let (word, base) = self.source.word(a)?;
        let mut x = self.on_generator(&base);
        for f in word.iter().rev() {
            let g = match f.step {
                Step::T => self.on_t_factor(f)?,
                _ => self.on_generator(&f.cell),
            };
            x = self.target.mul(&g, &x)?;
        }
        Ok(x)
    }

    /// Image of the monomial `M_a` computed from powers of single-step
    /// generators only: the divided power `G^(k)` is `G^k / [k]!`.
    pub fn eval_word_by_powers(&self, a: &Cell) -> Result<Element> {
        let (word, base) = self.source.word(a)?;
        let mut x = self.on_generator(&base);
        for f in word.iter().rev() {
            if f.step == Step::T {
                // the t factors are canonical cells, not powers of t
                x = self.target.mul(&self.on_t_factor(f)?, &x)?;
                continue;
            }
            let mut lambda = f.cell.co();
            let g1 = self.source.generator(f.step, &lambda);
            let delta = g1.ro().iter().zip(&lambda).map(|(r, c)| r - c).collect::<Vec<_>>();
            for _ in 0..f.k {
                x = self.target.mul(&self.step_image(f.step, &lambda)?, &x)?;
                for (l, d) in lambda.iter_mut().zip(&delta) {
                    *l += d;
                }
            }
            x = x.div_exact(&qfact_sym(f.k as u32))?;
        }
        Ok(x)
    }

    /// Check that the recursion and both word routes agree on `M_a`.
    pub fn check_word(&self, a: &Cell) -> Result<()> {
        let m = self.source.monomial(a)?;
        let by_recursion = self.eval(&m)?;
        let by_word = self.eval_word(a)?;
        if by_recursion != by_word {
            return Err(Error::InconsistentHom(format!(
                "image of the monomial of {a}: recursion gives {by_recursion}, word gives {by_word}"
            )));
        }
        let by_powers = self.eval_word_by_powers(a)?;
        if by_recursion != by_powers {
            return Err(Error::InconsistentHom(format!(
                "image of the monomial of {a}: recursion gives {by_recursion}, generator powers give {by_powers}"
            )));
        }
        Ok(())
    }

    /// Check `phi([a][b]) = phi([a]) phi([b])`.
    pub fn check_multiplicative(&self, a: &Cell, b: &Cell) -> Result<()> {
        let lhs = self.eval(&*self.source.mul_std(a, b)?)?;
        let rhs = self.target.mul(&*self.eval_std(a)?, &*self.eval_std(b)?)?;
        if lhs != rhs {
            return Err(Error::InconsistentHom(format!("on [{a}][{b}]: {lhs} vs {rhs}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{all_theta, all_xi, Cell};

    #[test]
    fn identity_map_is_identity() {
        let alg = Algebra::schur_a(3, 3);
        let h = Hom::new(&alg, &alg, |c| Some(c.clone()));
        for a in all_theta(3, 3) {
            assert_eq!(*h.eval_std(&a).unwrap(), Element::basis(a.clone()));
        }
    }

    #[test]
    fn truncation_to_schur_is_a_homomorphism() {
        let limit = Algebra::limit_a(2);
        let schur = Algebra::schur_a(2, 2);
        let h = Hom::new(&limit, &schur, |c| Some(c.clone()));
        let a = Cell::rows([[0, 1], [1, 0]]);
        assert_eq!(*h.eval_std(&a).unwrap(), Element::basis(a.clone()));
        let neg = Cell::rows([[-1, 2], [1, 0]]);
        assert!(h.eval_std(&neg).unwrap().is_zero());
    }

    #[test]
    fn shift_words_agree() {
        let alg = Algebra::limit_j(3);
        let h = Hom::new(&alg, &alg, |c| Some(c.shift(-2)));
        for a in all_xi(3, 2) {
            h.check_word(&a).unwrap();
            h.check_word(&a.shift(-2)).unwrap();
        }
    }
}
