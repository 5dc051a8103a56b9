//! Closed-form left multiplication by single-step generators.
//!
//! Every formula here is uniform in the diagonal entries, so the same code
//! serves Schur algebras (nonnegative cells) and the limit algebras
//! (arbitrary integer diagonals). Terms whose cell has a negative
//! off-diagonal entry are returned as-is; callers filter by validity.

use serde::{Deserialize, Serialize};

use crate::lattice::Cell;
use crate::laurent::{qint, qint_bar, Laurent};

/// A single-step generator. Row indices are 0-based: `E(h)` moves one unit
/// from row `h + 1` to row `h`, `F(h)` from row `h` to row `h + 1`, and `T`
/// is the extra generator of the even-rank coideal family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    E(usize),
    F(usize),
    T,
}

/// Generator family of a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Partial flags in a vector space.
    A,
    /// Isotropic flags, odd number of steps.
    J,
    /// Isotropic flags, even number of steps (trivial middle row/column).
    I,
}

/// The cell `C` with `C - k * (moved unit pattern)` diagonal that represents
/// `step` raised to the k-th divided power and ending in weight `lambda`
/// (its column sums).
pub fn generator_cell(kind: Kind, step: Step, k: i64, lambda: &[i64]) -> Cell {
    let n = lambda.len();
    let mut c = Cell::diag(lambda);
    let put = |i: usize, j: usize, c: &mut Cell| {
        c.add_at(i, j, k);
        c.add_at(j, j, -k);
    };
    match (kind, step) {
        (Kind::A, Step::E(h)) => put(h, h + 1, &mut c),
        (Kind::A, Step::F(h)) => put(h + 1, h, &mut c),
        (_, Step::E(h)) => {
            put(h, h + 1, &mut c);
            put(n - 1 - h, n - 2 - h, &mut c);
        }
        (_, Step::F(h)) => {
            put(h + 1, h, &mut c);
            put(n - 2 - h, n - 1 - h, &mut c);
        }
        (_, Step::T) => {
            let r = n / 2;
            put(r - 1, r + 1, &mut c);
            put(r + 1, r - 1, &mut c);
        }
    }
    c
}

/// Type A: `[E_h or F_h cell with column sums ro(A)] * [A]`.
///
/// `E_h [A] = sum_p v^{b(p)} bar[a_{hp} + 1] [A + E_{hp} - E_{h+1,p}]` with
/// `b(p) = sum_{j >= p} a_{hj} - sum_{j > p} a_{h+1,j}`, and symmetrically
/// `F_h [A] = sum_p v^{b'(p)} bar[a_{h+1,p} + 1] [A - E_{hp} + E_{h+1,p}]`
/// with `b'(p) = sum_{j <= p} a_{h+1,j} - sum_{j < p} a_{hj}`.
pub fn terms_a(step: Step, a: &Cell) -> Vec<(Cell, Laurent)> {
    let n = a.n();
    let mut out = Vec::with_capacity(n);
    match step {
        Step::E(h) => {
            for p in 0..n {
                let b: i64 = (p..n).map(|j| a.at(h, j)).sum::<i64>() - (p + 1..n).map(|j| a.at(h + 1, j)).sum::<i64>();
                let mut c = a.clone();
                c.add_at(h, p, 1);
                c.add_at(h + 1, p, -1);
                out.push((c, qint_bar(a.at(h, p) + 1).shift(b)));
            }
        }
        Step::F(h) => {
            for p in 0..n {
                let b: i64 = (0..=p).map(|j| a.at(h + 1, j)).sum::<i64>() - (0..p).map(|j| a.at(h, j)).sum::<i64>();
                let mut c = a.clone();
                c.add_at(h, p, -1);
                c.add_at(h + 1, p, 1);
                out.push((c, qint_bar(a.at(h + 1, p) + 1).shift(b)));
            }
        }
        Step::T => panic!("type A has no T generator"),
    }
    out
}

/// Count polynomial `q^e [m]_q` evaluated at `q = v^2`.
fn count(e: i64, m: i64) -> Laurent {
    qint(m).shift(2 * e)
}

/// Coefficient from a raw point count: `v^{d(C) - d(A) - d(G)} N(v^2)`.
fn normalize(kind: Kind, c: &Cell, a: &Cell, g: &Cell, raw: Laurent) -> Laurent {
    let d = |x: &Cell| match kind {
        Kind::A => x.d_stat(),
        _ => x.d_stat_iso(),
    };
    raw.shift(d(c) - d(a) - d(g))
}

/// Type A via point counts of the convolution; agrees with [`terms_a`] and
/// is kept as an independent cross-check.
pub fn terms_a_counting(step: Step, a: &Cell) -> Vec<(Cell, Laurent)> {
    let n = a.n();
    let ro = a.ro();
    let mut out = Vec::new();
    match step {
        Step::E(h) => {
            let g = generator_cell(Kind::A, step, 1, &ro);
            for p in 0..n {
                let mut c = a.clone();
                c.add_at(h, p, 1);
                c.add_at(h + 1, p, -1);
                let raw = count((p + 1..n).map(|s| a.at(h, s)).sum(), a.at(h, p) + 1);
                out.push((c.clone(), normalize(Kind::A, &c, a, &g, raw)));
            }
        }
        Step::F(h) => {
            let g = generator_cell(Kind::A, step, 1, &ro);
            for p in 0..n {
                let mut c = a.clone();
                c.add_at(h, p, -1);
                c.add_at(h + 1, p, 1);
                let raw = count((0..p).map(|s| c.at(h + 1, s)).sum(), c.at(h + 1, p));
                out.push((c.clone(), normalize(Kind::A, &c, a, &g, raw)));
            }
        }
        Step::T => panic!("type A has no T generator"),
    }
    out
}

/// Isotropic flags (`n = 2r + 1`, 0-based middle `r`): single-step `E(h)`
/// for `h < r` and `F(h)` for `h < r`, from point counts of the
/// convolution and the orbit-dimension statistic.
pub fn terms_j(step: Step, a: &Cell) -> Vec<(Cell, Laurent)> {
    let n = a.n();
    let r = n / 2;
    let ro = a.ro();
    let g = generator_cell(Kind::J, step, 1, &ro);
    let mut out = Vec::with_capacity(n);
    let th = |i: usize, j: usize| Cell::theta(n, i, j);
    match step {
        Step::E(h) => {
            assert!(h < r, "E({h}) out of range for n = {n}");
            for p in 0..n {
                let c = a.plus(&th(h, p)).minus(&th(h + 1, p));
                let raw = count((p + 1..n).map(|s| a.at(h, s)).sum(), a.at(h, p) + 1);
                out.push((c.clone(), normalize(Kind::J, &c, a, &g, raw)));
            }
        }
        Step::F(h) if h + 1 < r => {
            for p in 0..n {
                let c = a.minus(&th(h, p)).plus(&th(h + 1, p));
                let raw = count((0..p).map(|s| c.at(h + 1, s)).sum(), c.at(h + 1, p));
                out.push((c.clone(), normalize(Kind::J, &c, a, &g, raw)));
            }
        }
        Step::F(h) => {
            assert_eq!(h + 1, r, "F({h}) out of range for n = {n}");
            // isotropic lines in the middle quotient
            for p in 0..n {
                let c = a.minus(&th(h, p)).plus(&th(r, p));
                let w = |j: usize| -> i64 { (0..j).map(|s| c.at(r, s)).sum() };
                let raw = if p < r {
                    count(w(p), c.at(r, p))
                } else if p == r {
                    count(w(r), c.at(r, r) - 1)
                } else {
                    count(w(p) - 1, c.at(r, p))
                };
                out.push((c.clone(), normalize(Kind::J, &c, a, &g, raw)));
            }
        }
        Step::T => panic!("T belongs to the even-rank family"),
    }
    out
}

/// The canonical generator `t` of the even-rank family acting on `[A]`
/// (`n = nn + 1`, 1-based `r = nn / 2`):
/// `t [A] = sum_j v^{sum_{p<=j} a_{r+2,p} - sum_{p<j} a_{r,p} - [j > r+1]}
///  bar[a_{r+2,j} + 1] [A - E^theta_{r,j} + E^theta_{r+2,j}]`.
pub fn terms_t(a: &Cell) -> Vec<(Cell, Laurent)> {
    let n = a.n();
    // 0-based rows: `lo` is 1-based r, `hi` is 1-based r + 2
    let mid = n / 2;
    let (lo, hi) = (mid - 1, mid + 1);
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let e: i64 = (0..=j).map(|p| a.at(hi, p)).sum::<i64>() - (0..j).map(|p| a.at(lo, p)).sum::<i64>() - (j > mid) as i64;
        let c = a.minus(&Cell::theta(n, lo, j)).plus(&Cell::theta(n, hi, j));
        out.push((c, qint_bar(a.at(hi, j) + 1).shift(e)));
    }
    out
}

/// Dispatch on the family.
pub fn terms(kind: Kind, step: Step, a: &Cell) -> Vec<(Cell, Laurent)> {
    match (kind, step) {
        (Kind::A, _) => terms_a(step, a),
        (_, Step::T) => terms_t(a),
        _ => terms_j(step, a),
    }
}

/// The single-step generators available in a family of matrix size `n`.
pub fn steps(kind: Kind, n: usize) -> Vec<Step> {
    let mut out = Vec::new();
    match kind {
        Kind::A => {
            for h in 0..n - 1 {
                out.push(Step::E(h));
                out.push(Step::F(h));
            }
        }
        Kind::J => {
            for h in 0..n / 2 {
                out.push(Step::E(h));
                out.push(Step::F(h));
            }
        }
        Kind::I => {
            for h in 0..(n / 2).saturating_sub(1) {
                out.push(Step::E(h));
                out.push(Step::F(h));
            }
            out.push(Step::T);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    fn find(ts: &[(Cell, Laurent)], c: &Cell) -> Laurent {
        ts.iter().filter(|(x, _)| x == c).map(|(_, y)| y.clone()).sum()
    }

    #[test]
    fn counting_agrees_with_closed_form_type_a() {
        for rows in [
            [[2, 1, 0], [1, 0, 3], [0, 2, -1]],
            [[0, 0, 1], [4, -2, 1], [1, 1, 1]],
            [[-3, 2, 2], [0, 5, 0], [1, 0, 2]],
        ] {
            let a = Cell::rows(rows);
            for h in 0..2 {
                for s in [Step::E(h), Step::F(h)] {
                    let x = terms_a(s, &a);
                    let y = terms_a_counting(s, &a);
                    for ((c1, k1), (c2, k2)) in x.iter().zip(&y) {
                        assert_eq!(c1, c2);
                        if c1.off_diagonal_nonneg() {
                            assert_eq!(k1, k2, "{s:?} on {a} -> {c1}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn printed_rank_one_products() {
        // E [a11 0; a21 a22+1] = [a11 1; a21 a22] + v^{a11-a22-1} bar[a11+1] [a11+1 0; a21-1 a22+1]
        for (a11, a21, a22) in [(0, 1, 1), (2, 3, -4), (-2, 1, 0)] {
            let a = Cell::rows([[a11, 0], [a21, a22 + 1]]);
            let ts = terms_a(Step::E(0), &a);
            assert_eq!(find(&ts, &Cell::rows([[a11, 1], [a21, a22]])), Laurent::one());
            assert_eq!(
                find(&ts, &Cell::rows([[a11 + 1, 0], [a21 - 1, a22 + 1]])),
                qint_bar(a11 + 1).shift(a11 - a22 - 1)
            );
        }
        // F [0 1; 1 -3] = (v + v^-1)[-1 1; 2 -3] - (1 + v^2)[0 0; 1 -2]
        let ts = terms_a(Step::F(0), &Cell::rows([[0, 1], [1, -3]]));
        assert_eq!(find(&ts, &Cell::rows([[-1, 1], [2, -3]])), l("v + v^-1"));
        assert_eq!(find(&ts, &Cell::rows([[0, 0], [1, -2]])), l("-v^2 - 1"));
    }

    #[test]
    fn iso_middle_product() {
        // [B][A] = [C] + v^{b-a} bar[b+1] [D]
        for (a, b) in [(1, 1), (2, 5), (-5, -3), (0, 3)] {
            let ca = Cell::rows([[a, 1, 0], [0, b, 0], [0, 1, a]]);
            let ts = terms_j(Step::F(0), &ca);
            assert_eq!(find(&ts, &Cell::rows([[a - 1, 1, 0], [1, b, 1], [0, 1, a - 1]])), Laurent::one());
            assert_eq!(find(&ts, &Cell::rows([[a, 0, 0], [0, b + 2, 0], [0, 0, a]])), qint_bar(b + 1).shift(b - a));
        }
    }

    #[test]
    fn t_on_rank_one() {
        for (a, b) in [(2, 1), (0, 3), (4, 0), (-3, 2)] {
            let c = |x: i64, y: i64| Cell::rows([[x, 0, y], [0, 1, 0], [y, 0, x]]);
            let ts = terms_t(&c(a, b));
            assert_eq!(find(&ts, &c(a, b)), Laurent::v(b - a));
            assert_eq!(find(&ts, &c(a - 1, b + 1)), qint_bar(b + 1).shift(b));
            assert_eq!(find(&ts, &c(a + 1, b - 1)), qint_bar(a + 1).shift(b - 1));
        }
    }

    #[test]
    fn generator_cells() {
        let g = generator_cell(Kind::A, Step::E(0), 1, &[1, -2]);
        assert_eq!(g, Cell::rows([[1, 1], [0, -3]]));
        assert_eq!(g.co(), vec![1, -2]);
        let t = generator_cell(Kind::I, Step::T, 1, &[3, 1, 3]);
        assert_eq!(t, Cell::rows([[2, 0, 1], [0, 1, 0], [1, 0, 2]]));
        let f = generator_cell(Kind::J, Step::F(0), 1, &[3, 1, 3]);
        assert_eq!(f, Cell::rows([[2, 0, 0], [1, 1, 1], [0, 0, 2]]));
    }
}
