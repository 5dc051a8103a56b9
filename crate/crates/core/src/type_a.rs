//! Type A specifics: divided-power generators and their summed versions,
//! shift maps, projections to Schur algebras, the transfer map, the sign
//! character of `S(n, n)`, the rank-one highest-weight modules and the
//! positive basis transported from class elements.

use std::collections::BTreeMap;

use crate::engine::hom::{Action, Hom, Vector};
use crate::engine::stabilize::{stable_class_element, StableElement};
use crate::engine::{Algebra, Element, Kind, Step};
use crate::error::{Error, Result};
use crate::lattice::{compositions, preceq, Cell, Context};
use crate::laurent::{qint_sym, Laurent};

/// A generator-adjacent cell of a type A algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorCell {
    /// `E_h^(a) 1_lambda`: entry `a` at `(h, h+1)`.
    E { h: usize, a: i64, lambda: Vec<i64> },
    /// `F_h^(a) 1_lambda`: entry `a` at `(h+1, h)`.
    F { h: usize, a: i64, lambda: Vec<i64> },
    Idempotent(Vec<i64>),
}

impl GeneratorCell {
    pub fn cell(&self) -> Cell {
        match self {
            GeneratorCell::E { h, a, lambda } => crate::engine::generator_cell(Kind::A, Step::E(*h), *a, lambda),
            GeneratorCell::F { h, a, lambda } => crate::engine::generator_cell(Kind::A, Step::F(*h), *a, lambda),
            GeneratorCell::Idempotent(lambda) => Cell::diag(lambda),
        }
    }
}

fn require_a(alg: &Algebra) -> Result<()> {
    if alg.kind() != Kind::A {
        return Err(Error::ContextError(format!("{} is not a type A context", alg.context())));
    }
    Ok(())
}

/// `g * x`; terms of `x` whose row sums differ from the column sums of `g`
/// contribute zero.
pub fn generator_multiply(alg: &Algebra, g: &GeneratorCell, x: &Element) -> Result<Element> {
    require_a(alg)?;
    let c = g.cell();
    if c.n() != alg.n() {
        return Err(Error::WeightMismatch(format!("{c} has size {}, algebra has {}", c.n(), alg.n())));
    }
    if !alg.admissible(&c) {
        return Err(Error::InvalidCell(format!("{c} is not a cell of {}", alg.context())));
    }
    alg.mul_cell(&c, x)
}

/// Weights of `S(n, d)`.
fn weights(n: usize, d: i64) -> Vec<Vec<i64>> {
    compositions(d, n)
}

/// `E_{h;d} = sum_lambda E_h 1_lambda` in `S(n, d)`.
pub fn big_e(n: usize, d: i64, h: usize) -> Element {
    big_step(n, d, Step::E(h))
}

/// `F_{h;d} = sum_lambda F_h 1_lambda` in `S(n, d)`.
pub fn big_f(n: usize, d: i64, h: usize) -> Element {
    big_step(n, d, Step::F(h))
}

fn big_step(n: usize, d: i64, step: Step) -> Element {
    Element::from_terms(
        weights(n, d)
            .into_iter()
            .map(|l| crate::engine::generator_cell(Kind::A, step, 1, &l))
            .filter(|c| c.all_nonneg())
            .map(|c| (c, Laurent::one())),
    )
}

/// `K_{a;d} = sum_lambda v^{a . lambda} 1_lambda` in `S(n, d)`.
pub fn big_k(n: usize, d: i64, a: &[i64]) -> Element {
    Element::from_terms(weights(n, d).into_iter().map(|l| {
        let e: i64 = a.iter().zip(&l).map(|(x, y)| x * y).sum();
        (Cell::diag(&l), Laurent::v(e))
    }))
}

/// The shift map `xi_p` of a type A limit algebra, `[G] -> [G + pI]` on
/// generator-adjacent cells.
pub fn xi_hom(alg: &Algebra, p: i64) -> Result<Hom<'_>> {
    require_a(alg)?;
    if alg.is_schur() {
        return Err(Error::ContextError("the shift map lives on the limit algebra".into()));
    }
    Ok(Hom::new(alg, alg, move |c| Some(c.shift(p))))
}

/// `xi_p(x)`.
pub fn xi_shift(alg: &Algebra, x: &Element, p: i64) -> Result<Element> {
    xi_hom(alg, p)?.eval(x)
}

/// Truncation to the cells of `Theta_d`.
pub fn project_phi_big(x: &Element, d: i64) -> Element {
    x.filter(|c| c.all_nonneg() && c.total() == d)
}

/// The sl-level projection of a class element to `S(n, d)`: the class
/// element moved to total `d` by the shift map, truncated.
pub fn project_phi_small(limit: &Algebra, b: &StableElement, d: i64) -> Result<Element> {
    let n = limit.n() as i64;
    let rem = d - b.rep.total();
    if rem.rem_euclid(n) != 0 {
        return Ok(Element::zero());
    }
    Ok(project_phi_big(&b.at(limit, rem / n)?, d))
}

/// The transfer map `S(n, d + n) -> S(n, d)`, `[G] -> [G - I]` on
/// generator-adjacent cells (zero when `G - I` has a negative entry).
pub fn transfer_a_hom<'a>(src: &'a Algebra, dst: &'a Algebra) -> Result<Hom<'a>> {
    match (src.context(), dst.context()) {
        (Context::ThetaD { n, d }, Context::ThetaD { n: m, d: e }) if n == m && d == e + n as i64 => {
            Ok(Hom::new(src, dst, |c| Some(c.shift(-1))))
        }
        (s, t) => Err(Error::ContextError(format!("transfer needs S(n, d+n) -> S(n, d), got {s} -> {t}"))),
    }
}

/// Apply the transfer map to `x`, checking each standard cell through the
/// monomial-word route as well.
pub fn transfer_a(src: &Algebra, dst: &Algebra, x: &Element) -> Result<Element> {
    let h = transfer_a_hom(src, dst)?;
    for c in x.cells() {
        h.check_word(c)?;
    }
    h.eval(x)
}

/// Whether `a` is a permutation matrix.
pub fn is_permutation(a: &Cell) -> bool {
    let n = a.n();
    a.entries().iter().all(|x| *x == 0 || *x == 1) && a.ro() == vec![1; n] && a.co() == vec![1; n]
}

fn permutation_sign(a: &Cell) -> i64 {
    let n = a.n();
    let perm: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| a.at(i, j) == 1).unwrap()).collect();
    let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The sign character of `S(n, n)`: `[A] -> v^{-d_A} det(A)`, zero off
/// permutation matrices.
pub fn chi_eval(alg: &Algebra, x: &Element) -> Result<Laurent> {
    match alg.context() {
        Context::ThetaD { n, d } if d == n as i64 => {}
        c => return Err(Error::ContextError(format!("the sign character lives on S(n, n), got {c}"))),
    }
    let mut out = Laurent::zero();
    for (a, k) in x.iter() {
        if is_permutation(a) {
            out += k * Laurent::monomial(permutation_sign(a), -a.d_stat());
        }
    }
    Ok(out)
}

/// The irreducible `gl_2` module of dominant highest weight `(l1, l2)`,
/// with basis `F^(k) u+` for `0 <= k <= l1 - l2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gl2Module {
    pub lambda: (i64, i64),
}

/// A vector of a [`Gl2Module`]: `k -> coefficient of F^(k) u+`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModVec(pub BTreeMap<i64, Laurent>);

impl ModVec {
    pub fn highest() -> Self {
        ModVec(BTreeMap::from([(0, Laurent::one())]))
    }

    pub fn coeff(&self, k: i64) -> Laurent {
        self.0.get(&k).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, k: i64, c: Laurent) {
        let e = self.0.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }
}

impl Vector for ModVec {
    fn zero() -> Self {
        ModVec::default()
    }

    fn add_scaled(&mut self, other: &Self, k: &Laurent) {
        for (i, c) in &other.0 {
            self.add_term(*i, c * k);
        }
    }

    fn div_exact(&self, k: &Laurent) -> Result<Self> {
        let mut out = ModVec::default();
        for (i, c) in &self.0 {
            out.0.insert(*i, c.div_exact(k)?);
        }
        Ok(out)
    }
}

impl Gl2Module {
    pub fn new(l1: i64, l2: i64) -> Result<Self> {
        if l1 < l2 {
            return Err(Error::WeightMismatch(format!("({l1}, {l2}) is not dominant")));
        }
        Ok(Gl2Module { lambda: (l1, l2) })
    }

    pub fn dim(&self) -> i64 {
        self.lambda.0 - self.lambda.1 + 1
    }

    /// Weight of `F^(k) u+`.
    pub fn weight(&self, k: i64) -> Vec<i64> {
        vec![self.lambda.0 - k, self.lambda.1 + k]
    }
}

impl Action for Gl2Module {
    type V = ModVec;

    fn step(&self, step: Step, lambda: &[i64], x: &ModVec) -> Result<ModVec> {
        let top = self.lambda.0 - self.lambda.1;
        let mut out = ModVec::default();
        for (k, c) in &x.0 {
            if self.weight(*k) != lambda {
                continue;
            }
            match step {
                Step::E(0) if *k >= 1 => out.add_term(k - 1, c * qint_sym(top - k + 1)),
                Step::F(0) if *k < top => out.add_term(k + 1, c * qint_sym(k + 1)),
                Step::E(0) | Step::F(0) => {}
                s => return Err(Error::WeightMismatch(format!("{s:?} does not act on a gl_2 module"))),
            }
        }
        Ok(out)
    }

    fn idempotent(&self, lambda: &[i64], x: &ModVec) -> Result<ModVec> {
        Ok(ModVec(x.0.iter().filter(|(k, _)| self.weight(**k) == lambda).map(|(k, c)| (*k, c.clone())).collect()))
    }
}

/// `x . m` for `x` in the type A limit algebra of rank 2.
pub fn gl2_act(alg: &Algebra, x: &Element, module: &Gl2Module, m: &ModVec) -> Result<ModVec> {
    require_a(alg)?;
    if alg.n() != 2 || alg.is_schur() {
        return Err(Error::ContextError(format!("gl_2 modules need the rank-2 limit algebra, got {}", alg.context())));
    }
    let mut out = ModVec::default();
    for (a, k) in x.iter() {
        out.add_scaled(&alg.act(module, a, m)?, k);
    }
    Ok(out)
}

/// Class element of `a` modulo shifts by `I`, followed to its stable shift.
pub fn class_element(limit: &Algebra, a: &Cell) -> Result<StableElement> {
    require_a(limit)?;
    stable_class_element(limit, a, &Cell::identity(limit.n()))
}

/// The positive basis element of the class of `rep` in the weight-`d`
/// block of the limit algebra: the stable canonical element moved to total
/// `d` by the shift map; its cells may have negative diagonal entries.
pub fn positive_basis(limit: &Algebra, rep: &Cell, d: i64) -> Result<Element> {
    let b = class_element(limit, rep)?;
    let n = limit.n() as i64;
    let rem = d - rep.total();
    if rem.rem_euclid(n) != 0 {
        return Err(Error::WeightMismatch(format!("{rep} has no representative of total {d}")));
    }
    b.at(limit, rem / n)
}

/// Expand an element of a type A limit algebra in the positive basis, by
/// peeling the leading cell.
pub fn to_positive_basis(limit: &Algebra, x: &Element) -> Result<Element> {
    let mut rem = x.clone();
    let mut out = Element::zero();
    loop {
        let top = rem.cells().find(|c| rem.cells().all(|d| d == *c || !preceq(c, d))).cloned();
        let Some(top) = top else { break };
        let k = rem.coeff(&top);
        let b = positive_basis(limit, &top, top.total())?;
        rem.add_scaled(&b, &-&k);
        out.add_term(top, k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::all_theta;

    fn l(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn sign_character_on_small_cells() {
        let alg = Algebra::schur_a(2, 2);
        let s = Cell::rows([[0, 1], [1, 0]]);
        assert_eq!(chi_eval(&alg, &Element::basis(s.clone())).unwrap(), l("-v^-1"));
        assert_eq!(chi_eval(&alg, &alg.canonical(&s).unwrap()).unwrap(), Laurent::zero());
        assert_eq!(chi_eval(&alg, &Element::basis(Cell::identity(2))).unwrap(), Laurent::one());
    }

    #[test]
    fn sign_character_is_multiplicative() {
        let alg = Algebra::schur_a(3, 3);
        let cells = all_theta(3, 3);
        for a in &cells {
            for b in &cells {
                let ab = alg.mul_std(a, b).unwrap();
                let lhs = chi_eval(&alg, &ab).unwrap();
                let rhs = chi_eval(&alg, &Element::basis(a.clone())).unwrap() * chi_eval(&alg, &Element::basis(b.clone())).unwrap();
                assert_eq!(lhs, rhs, "[{a}][{b}]");
            }
        }
    }

    #[test]
    fn module_action_is_an_action() {
        let alg = Algebra::limit_a(2);
        let m = Gl2Module::new(2, -3).unwrap();
        let u = ModVec::highest();
        let cells = [
            Cell::rows([[0, 1], [1, -3]]),
            Cell::rows([[1, 0], [1, -3]]),
            Cell::rows([[-1, 2], [1, -3]]),
            Cell::rows([[0, 0], [2, -3]]),
        ];
        for a in &cells {
            for b in &cells {
                let ab = alg.mul_std(a, b).unwrap();
                let lhs = gl2_act(&alg, &ab, &m, &u).unwrap();
                let bu = gl2_act(&alg, &Element::basis(b.clone()), &m, &u).unwrap();
                let rhs = gl2_act(&alg, &Element::basis(a.clone()), &m, &bu).unwrap();
                assert_eq!(lhs, rhs, "[{a}][{b}]");
            }
        }
    }

    #[test]
    fn transfer_matches_generators() {
        let src = Algebra::schur_a(2, 4);
        let dst = Algebra::schur_a(2, 2);
        let h = transfer_a_hom(&src, &dst).unwrap();
        let e = Cell::rows([[1, 1], [0, 2]]);
        assert_eq!(*h.eval_std(&e).unwrap(), Element::basis(Cell::rows([[0, 1], [0, 1]])));
        let k = big_k(2, 4, &[1, 0]);
        // K_{a;d+n} -> v^{|a|} K_{a;d}
        assert_eq!(h.eval(&k).unwrap(), big_k(2, 2, &[1, 0]).scaled(&Laurent::v(1)));
        for a in all_theta(2, 4) {
            h.check_word(&a).unwrap();
        }
    }

    #[test]
    fn shift_is_an_automorphism() {
        let alg = Algebra::limit_a(2);
        let a = Cell::rows([[0, 2], [1, -3]]);
        let x = xi_shift(&alg, &Element::basis(a.clone()), 3).unwrap();
        assert_eq!(xi_shift(&alg, &x, -3).unwrap(), Element::basis(a));
    }

    #[test]
    fn big_generators_multiply_blockwise() {
        let alg = Algebra::schur_a(2, 2);
        let ef = alg.mul(&big_e(2, 2, 0), &big_f(2, 2, 0)).unwrap();
        let fe = alg.mul(&big_f(2, 2, 0), &big_e(2, 2, 0)).unwrap();
        // [E, F] = sum_lambda [lambda_1 - lambda_2] 1_lambda
        let mut expect = Element::zero();
        for w in compositions(2, 2) {
            expect.add_term(Cell::diag(&w), qint_sym(w[0] - w[1]));
        }
        assert_eq!(&ef - &fe, expect);
    }
}
