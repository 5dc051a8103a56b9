//! Coideal (odd- and even-rank isotropic) specifics: the `t` generator,
//! transfer maps, shift and class maps between the limit algebras and the
//! Schur algebras, hybrid monomials and class canonical elements.

pub mod rank_one;
pub mod relations;

use crate::engine::hom::Hom;
use crate::engine::stabilize::{stable_class_element, StableElement};
use crate::engine::{Algebra, Element, Kind, Step};
use crate::error::{Error, Result};
use crate::lattice::{class_of, Cell, ClassFamily, Context};

pub use rank_one::{
    b_coeff, rank1_bar, rank1_canonical, rank1_cell, rank1_gamma, rank1_gamma_recursive, rank1_monomial, rank1_params,
    rank1_transfer, rank1_transfer_canonical, t_times,
};
pub use relations::{check_i_relations, check_j_relations, coideal_weights, Convention, RelationReport};

fn require(alg: &Algebra, kind: Kind, schur: Option<bool>) -> Result<()> {
    if alg.kind() != kind || schur.is_some_and(|s| s != alg.is_schur()) {
        return Err(Error::ContextError(format!("unexpected context {}", alg.context())));
    }
    Ok(())
}

fn require_even(p: i64) -> Result<()> {
    if p % 2 != 0 {
        return Err(Error::ParityError(format!("coideal shifts need even p, got {p}")));
    }
    Ok(())
}

/// The shift unit of a coideal family: `I` (odd rank) or `𝕀` (even rank).
pub fn unit(alg: &Algebra) -> Cell {
    match alg.kind() {
        Kind::I => Cell::identity_iota(alg.n()),
        _ => Cell::identity(alg.n()),
    }
}

/// `t_d * x` by the closed-form action of the canonical `t` generator.
pub fn t_multiply(alg: &Algebra, x: &Element) -> Result<Element> {
    require(alg, Kind::I, None)?;
    Ok(alg.apply_step(Step::T, x))
}

/// `t_d = sum {X}` over the `t` cells `X` of `S^ı(nn, d)`.
pub fn t_sum(alg: &Algebra) -> Result<Element> {
    require(alg, Kind::I, Some(true))?;
    let mut out = Element::zero();
    for w in coideal_weights(alg.context())? {
        let x = alg.generator(Step::T, &w);
        if alg.admissible(&x) {
            out += &*alg.canonical(&x)?;
        } else {
            // no t cell: t acts on 1_w by a scalar
            out += &alg.apply_step(Step::T, &Element::basis(Cell::diag(&w)));
        }
    }
    Ok(out)
}

/// The hybrid monomial of `a`: the monomial word with every `t` factor
/// taken as a canonical element.
pub fn hybrid_monomial(alg: &Algebra, a: &Cell) -> Result<Element> {
    require(alg, Kind::I, None)?;
    alg.monomial(a)
}

/// The transfer map `S^ȷ(n, d + n) -> S^ȷ(n, d)`, `[G] -> [G - 2I]` on
/// generator-adjacent cells.
pub fn transfer_j_hom<'a>(src: &'a Algebra, dst: &'a Algebra) -> Result<Hom<'a>> {
    match (src.context(), dst.context()) {
        (Context::XiD { n, d }, Context::XiD { n: m, d: e }) if n == m && d == e + n as i64 => {
            Ok(Hom::new(src, dst, |c| Some(c.shift(-2))))
        }
        (s, t) => Err(Error::ContextError(format!("transfer needs S^j(n, d+n) -> S^j(n, d), got {s} -> {t}"))),
    }
}

/// The transfer map `S^ı(nn, d + nn) -> S^ı(nn, d)`: `[D] -> [D - 2𝕀]` on
/// idempotents and divided powers, and `t 1_lambda -> t 1_{lambda - 2𝕀}`.
///
/// The latter is `{X} -> {X - 2𝕀}` whenever `X - 2𝕀` is a valid cell. When
/// it is not but the shifted weight is (an outer entry next to the middle
/// becomes zero), `t 1_mu` is the scalar `v^e 1_mu` rather than zero; the
/// literal rule [`transfer_i_literal_hom`] does not extend to a
/// homomorphism there.
pub fn transfer_i_hom<'a>(src: &'a Algebra, dst: &'a Algebra) -> Result<Hom<'a>> {
    let h = transfer_i_literal_hom(src, dst)?;
    let mid = dst.n() / 2;
    Ok(h.with_t_image(move |lambda| {
        let mu: Vec<i64> = lambda.iter().enumerate().map(|(i, l)| if i == mid { *l } else { l - 2 }).collect();
        let d = Cell::diag(&mu);
        if !dst.admissible(&d) {
            return Ok(Element::zero());
        }
        Ok(dst.apply_step(Step::T, &Element::basis(d)))
    }))
}

/// The transfer map with every generator-adjacent canonical cell sent by
/// `{X} -> {X - 2𝕀}`, or zero when `X - 2𝕀` is not a valid cell.
pub fn transfer_i_literal_hom<'a>(src: &'a Algebra, dst: &'a Algebra) -> Result<Hom<'a>> {
    match (src.context(), dst.context()) {
        (Context::XiIotaD { nn, d }, Context::XiIotaD { nn: m, d: e }) if nn == m && d == e + nn as i64 => {
            Ok(Hom::new(src, dst, |c| Some(c.shift_iota(-2))))
        }
        (s, t) => Err(Error::ContextError(format!("transfer needs S^i(nn, d+nn) -> S^i(nn, d), got {s} -> {t}"))),
    }
}

/// Apply a transfer map, checking each standard cell through the word
/// routes as well.
pub fn transfer_checked(h: &Hom, x: &Element) -> Result<Element> {
    for c in x.cells() {
        h.check_word(c)?;
    }
    h.eval(x)
}

/// Shift by `p I` (odd rank) or `p 𝕀` (even rank) on a coideal limit
/// algebra; `p` must be even.
pub fn xi_hom(alg: &Algebra, p: i64) -> Result<Hom<'_>> {
    require_even(p)?;
    if alg.is_schur() || alg.kind() == Kind::A {
        return Err(Error::ContextError(format!("coideal shifts live on the limit algebras, got {}", alg.context())));
    }
    let u = unit(alg);
    Ok(Hom::new(alg, alg, move |c| Some(c.plus(&u.scaled(p)))))
}

/// Which of the coideal maps to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoidealMap {
    /// `xi^ȷ_p` or `xi^ı_p`, `p` even.
    Xi(i64),
    /// Class projection to the sl-level algebra.
    Wp,
    /// Truncation to the Schur algebra of weight `d`.
    PhiBig(i64),
    /// Class projection followed by the sl-level projection to weight `d`.
    Psi(i64),
}

fn family(alg: &Algebra) -> ClassFamily {
    match alg.kind() {
        Kind::A => ClassFamily::ThetaBar,
        Kind::J => ClassFamily::XiHat,
        Kind::I => ClassFamily::XiIotaHat,
    }
}

/// Class projection: each cell is replaced by its class representative.
pub fn wp(alg: &Algebra, x: &Element) -> Element {
    let fam = family(alg);
    x.map_cells(|c| Some(class_of(c, fam).representative))
}

/// The member of the class of `c` with total `2d + 1`, if any.
pub fn class_member(alg: &Algebra, c: &Cell, d: i64) -> Option<Cell> {
    let u = unit(alg);
    let step = 2 * u.total();
    let diff = 2 * d + 1 - c.total();
    (diff.rem_euclid(step) == 0).then(|| c.plus(&u.scaled(diff / u.total())))
}

/// Truncation to `Xi_d` (cells with nonnegative entries and total `2d+1`).
pub fn phi_big(x: &Element, d: i64) -> Element {
    x.filter(|c| c.all_nonneg() && c.total() == 2 * d + 1)
}

/// The sl-level projection to weight `d` of an element written on class
/// representatives: each class goes to its member of total `2d + 1`, then
/// truncation.
pub fn phi_small(alg: &Algebra, x: &Element, d: i64) -> Element {
    phi_big(&x.map_cells(|c| class_member(alg, c, d)), d)
}

/// Apply one of the coideal maps to an element of a coideal limit algebra.
pub fn coideal_map(alg: &Algebra, x: &Element, which: CoidealMap) -> Result<Element> {
    if alg.kind() == Kind::A || alg.is_schur() {
        return Err(Error::ContextError(format!("coideal maps start from a coideal limit algebra, got {}", alg.context())));
    }
    match which {
        CoidealMap::Xi(p) => xi_hom(alg, p)?.eval(x),
        CoidealMap::Wp => Ok(wp(alg, x)),
        CoidealMap::PhiBig(d) => Ok(phi_big(x, d)),
        CoidealMap::Psi(d) => Ok(phi_small(alg, &wp(alg, x), d)),
    }
}

/// The class canonical element of `rep`, followed along even shifts by the
/// family's unit until it is constant.
pub fn sl_canonical(alg: &Algebra, rep: &Cell) -> Result<StableElement> {
    if alg.kind() == Kind::A || alg.is_schur() {
        return Err(Error::ContextError(format!("class canonical elements need a coideal limit algebra, got {}", alg.context())));
    }
    // the class of `rep` is `rep + 2Z u`, and the stabilization steps are even
    stable_class_element(alg, rep, &unit(alg))
}

/// The sl-level projection of a class canonical element to weight `d`.
pub fn project_class(alg: &Algebra, b: &StableElement, d: i64) -> Result<Element> {
    let Some(m) = class_member(alg, &b.rep, d) else { return Ok(Element::zero()) };
    let p = (m.at(0, 0) - b.rep.at(0, 0)) / b.unit.at(0, 0);
    Ok(phi_big(&b.at(alg, p)?, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::all_xi_iota;

    #[test]
    fn t_sum_matches_closed_form_action() {
        for d in 1..=4 {
            let alg = Algebra::schur_i(2, d);
            let t = t_sum(&alg).unwrap();
            for a in 0..=d {
                let c = rank1_cell(a, d - a).unwrap();
                let by_product = alg.mul(&t, &Element::basis(c.clone())).unwrap();
                assert_eq!(by_product, t_times(a, d - a), "d={d} a={a}");
                assert_eq!(t_multiply(&alg, &Element::basis(c)).unwrap(), t_times(a, d - a));
            }
        }
    }

    #[test]
    fn rank_one_closed_forms_match_engine() {
        for d in 0..=6 {
            let alg = Algebra::schur_i(2, d);
            for a in 0..=d {
                let r = d - a;
                let c = rank1_cell(a, r).unwrap();
                assert_eq!(*alg.bar_std(&c).unwrap(), rank1_bar(a, r).unwrap(), "bar a={a} r={r}");
                assert_eq!(*alg.canonical(&c).unwrap(), rank1_canonical(a, r).unwrap(), "cb a={a} r={r}");
                let m = rank1_monomial(a, r);
                assert_eq!(alg.bar(&m).unwrap(), m, "monomial a={a} r={r}");
            }
        }
    }

    #[test]
    fn rank_one_transfer_reproduces_closed_forms() {
        for d in 2..=6 {
            let src = Algebra::schur_i(2, d);
            let dst = Algebra::schur_i(2, d - 2);
            let h = transfer_i_hom(&src, &dst).unwrap();
            for a in 0..=d {
                let b = d - a;
                let c = rank1_cell(a, b).unwrap();
                assert_eq!(*h.eval_std(&c).unwrap(), rank1_transfer(a, b), "a={a} b={b}");
                let cb = src.canonical(&c).unwrap();
                assert_eq!(h.eval(&cb).unwrap(), rank1_transfer_canonical(a, b).unwrap(), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn hybrid_monomials_are_bar_invariant() {
        for d in 0..=3 {
            let alg = Algebra::schur_i(2, d);
            for a in all_xi_iota(2, d) {
                let m = hybrid_monomial(&alg, &a).unwrap();
                assert_eq!(alg.bar(&m).unwrap(), m);
                // at rank one the hybrid monomial is the canonical element
                assert_eq!(m, *alg.canonical(&a).unwrap());
            }
        }
    }

    #[test]
    fn odd_shift_is_rejected() {
        let alg = Algebra::limit_j(3);
        assert!(matches!(xi_hom(&alg, 1), Err(Error::ParityError(_))));
    }

    #[test]
    fn psi_agrees_with_truncation_on_its_block() {
        let alg = Algebra::limit_j(3);
        let a = Cell::rows([[1, 1, 0], [1, 1, 1], [0, 1, 1]]);
        let x = alg.canonical(&a).unwrap();
        let d = (a.total() - 1) / 2;
        assert_eq!(coideal_map(&alg, &x, CoidealMap::Psi(d)).unwrap(), coideal_map(&alg, &x, CoidealMap::PhiBig(d)).unwrap());
    }

    #[test]
    fn literal_even_transfer_does_not_extend() {
        let src = Algebra::schur_i(2, 2);
        let dst = Algebra::schur_i(2, 0);
        let h = transfer_i_literal_hom(&src, &dst).unwrap();
        assert!(h.eval_std(&rank1_cell(0, 2).unwrap()).is_err());
    }

    #[test]
    fn twin_factor_rule_fails_only_next_to_zero() {
        for d in 2..=6 {
            let src = Algebra::schur_i(2, d);
            let dst = Algebra::schur_i(2, d - 2);
            let h = transfer_i_hom(&src, &dst).unwrap();
            for a in 0..=d {
                let ok = h.check_word(&rank1_cell(a, d - a).unwrap()).is_ok();
                assert_eq!(ok, !(a == 1 && d - a >= 2), "a={a} b={}", d - a);
            }
        }
    }
}
