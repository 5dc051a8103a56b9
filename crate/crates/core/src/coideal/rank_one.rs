//! Closed forms in the rank-one even-rank algebras `S^ı(2, d)`: the cells
//! `A_{a,b}`, the action of `t`, the monomial basis, the bar involution on
//! standard elements, the canonical basis coefficients `gamma_a(i)` and the
//! transfer map on standard elements.

use crate::engine::Element;
use crate::error::Result;
use crate::lattice::Cell;
use crate::laurent::{beta, qbinom_bar, qint_bar, Laurent};

/// `A_{a,b} = [a 0 b; 0 1 0; b 0 a]`, or `None` when `a < 0` or `b < 0`.
pub fn rank1_cell(a: i64, b: i64) -> Option<Cell> {
    (a >= 0 && b >= 0).then(|| Cell::rows([[a, 0, b], [0, 1, 0], [b, 0, a]]))
}

/// `(a, b)` of a rank-one cell.
pub fn rank1_params(c: &Cell) -> Option<(i64, i64)> {
    (c.n() == 3 && c.at(1, 1) == 1 && c.at(0, 1) == 0 && c.at(1, 0) == 0 && c.is_centro_symmetric())
        .then(|| (c.at(0, 0), c.at(0, 2)))
}

fn push(x: &mut Element, a: i64, b: i64, k: Laurent) {
    if let Some(c) = rank1_cell(a, b) {
        x.add_term(c, k);
    }
}

/// `t_d * [A_{a,b}] = v^{-a+b}[A_{a,b}] + v^b bar[b+1][A_{a-1,b+1}]
///  + v^{b-1} bar[a+1][A_{a+1,b-1}]`.
pub fn t_times(a: i64, b: i64) -> Element {
    let mut x = Element::zero();
    if rank1_cell(a, b).is_none() {
        return x;
    }
    push(&mut x, a, b, Laurent::v(b - a));
    push(&mut x, a - 1, b + 1, qint_bar(b + 1).shift(b));
    push(&mut x, a + 1, b - 1, qint_bar(a + 1).shift(b - 1));
    x
}

/// `M_{a,r} = [A_{a,r}] + sum_{i=1}^r v^{beta_a(i)} bar[a+i choose i] [A_{a+i,r-i}]`.
pub fn rank1_monomial(a: i64, r: i64) -> Element {
    let mut x = Element::zero();
    push(&mut x, a, r, Laurent::one());
    for i in 1..=r {
        push(&mut x, a + i, r - i, qbinom_bar(a + i, i as u32).shift(beta(a, i)));
    }
    x
}

/// `b^i_a = prod_{k=1}^i (v^{-a-k} - v^{a+k}) / prod_{k=1}^{floor(i/2)} (1 - v^{4k})`.
pub fn b_coeff(a: i64, i: i64) -> Result<Laurent> {
    let num: Laurent = (1..=i).map(|k| Laurent::v(-a - k) - Laurent::v(a + k)).product();
    let den: Laurent = (1..=i / 2).map(|k| Laurent::one() - Laurent::v(4 * k)).product();
    num.div_exact(&den)
}

/// `bar[A_{a,r}] = sum_{i=0}^r b^i_a [A_{a+i,r-i}]`.
pub fn rank1_bar(a: i64, r: i64) -> Result<Element> {
    let mut x = Element::zero();
    for i in 0..=r {
        push(&mut x, a + i, r - i, b_coeff(a, i)?);
    }
    Ok(x)
}

/// `prod_{k=1}^s (1 - v^{-c-4k}) / (1 - v^{-4k})`, a polynomial in `v^-2`.
fn gamma_product(c: i64, s: i64) -> Result<Laurent> {
    let num: Laurent = (1..=s).map(|k| Laurent::one() - Laurent::v(-c - 4 * k)).product();
    let den: Laurent = (1..=s).map(|k| Laurent::one() - Laurent::v(-4 * k)).product();
    num.div_exact(&den)
}

/// The canonical basis coefficient `gamma_a(i)` in closed form, split by
/// the parities of `a` and `i`.
pub fn rank1_gamma(a: i64, i: i64) -> Result<Laurent> {
    let s = i / 2;
    let (c, e) = match (a % 2 == 0, i % 2 == 0) {
        (true, true) => (2 * a, -2 * s * s - s),
        (true, false) => (2 * a, -a - 2 * s * s - 3 * s - 1),
        (false, true) => (2 * a + 2, -2 * s * s + s),
        (false, false) => (2 * a + 2, -a - 2 * s * s - s - 1),
    };
    Ok(gamma_product(c, s)?.shift(e))
}

/// `gamma_a(0..=r)` from the bar-invariance recursion
/// `gamma_a(r) = sum_{i=0}^r bar(gamma_a(i)) b^{r-i}_{a+i}`, solved for the
/// part in `v^-1 Z[v^-1]`.
pub fn rank1_gamma_recursive(a: i64, r: i64) -> Result<Vec<Laurent>> {
    let mut g = vec![Laurent::one()];
    for m in 1..=r {
        let mut s = Laurent::zero();
        for (i, gi) in g.iter().enumerate() {
            s += gi.bar() * b_coeff(a + i as i64, m - i as i64)?;
        }
        // gamma - bar(gamma) = s with gamma in v^-1 Z[v^-1]
        let gm = s.negative_part();
        debug_assert!(s.constant_term() == 0.into() && s.positive_part() == -gm.bar());
        g.push(gm);
    }
    Ok(g)
}

/// `{A_{a,r}} = sum_i gamma_a(i) [A_{a+i,r-i}]`.
pub fn rank1_canonical(a: i64, r: i64) -> Result<Element> {
    let mut x = Element::zero();
    for i in 0..=r {
        push(&mut x, a + i, r - i, rank1_gamma(a, i)?);
    }
    Ok(x)
}

/// The transfer map on standard elements:
/// `[A_{a,b}] -> [A_{a-2,b}] + (v^{-a+1} - v^{-a-1})[A_{a-1,b-1}] - v^{-2a-1}[A_{a,b-2}]`.
pub fn rank1_transfer(a: i64, b: i64) -> Element {
    let mut x = Element::zero();
    push(&mut x, a - 2, b, Laurent::one());
    push(&mut x, a - 1, b - 1, Laurent::v(1 - a) - Laurent::v(-a - 1));
    push(&mut x, a, b - 2, -Laurent::v(-2 * a - 1));
    x
}

/// The transfer map on canonical elements: `{A_{a-2,b}}`, `{A_{0,b-1}}`
/// or `0` for `a >= 2`, `a = 1`, `a = 0`.
pub fn rank1_transfer_canonical(a: i64, b: i64) -> Result<Element> {
    match a {
        0 => Ok(Element::zero()),
        1 => rank1_canonical(0, b - 1),
        _ => rank1_canonical(a - 2, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(rank1_monomial(3, 0), Element::basis(rank1_cell(3, 0).unwrap()));
        let m01 = rank1_monomial(0, 1);
        assert_eq!(m01.coeff(&rank1_cell(1, 0).unwrap()), l("v^-1"));
        assert_eq!(b_coeff(2, 1).unwrap(), l("v^-3 - v^3"));
        assert_eq!(rank1_gamma(5, 0).unwrap(), Laurent::one());
        assert_eq!(rank1_gamma(5, 1).unwrap(), l("v^-6"));
        // gamma_a(2) = (v^-3 - v^{-2a-7}) / (1 - v^-4) for a even
        for a in [0, 2, 4] {
            let expect = (Laurent::v(-3) - Laurent::v(-2 * a - 7)).div_exact(&(Laurent::one() - Laurent::v(-4))).unwrap();
            assert_eq!(rank1_gamma(a, 2).unwrap(), expect);
        }
    }

    #[test]
    fn second_bar_coefficient() {
        for a in 0..5 {
            let expect = ((Laurent::one() - Laurent::v(2 * (a + 1))) * (Laurent::one() - Laurent::v(2 * (a + 2))))
                .shift(-2 * a - 3)
                .div_exact(&(Laurent::one() - Laurent::v(4)))
                .unwrap();
            assert_eq!(b_coeff(a, 2).unwrap(), expect);
        }
    }

    #[test]
    fn closed_form_matches_recursion() {
        for a in 0..=10 {
            let rec = rank1_gamma_recursive(a, 10).unwrap();
            for (i, g) in rec.iter().enumerate() {
                assert_eq!(*g, rank1_gamma(a, i as i64).unwrap(), "a={a} i={i}");
            }
        }
    }

    #[test]
    fn transfer_at_zero() {
        for b in 2..6 {
            assert_eq!(rank1_transfer(0, b), Element::term(rank1_cell(0, b - 2).unwrap(), l("-v^-1")));
        }
    }
}
