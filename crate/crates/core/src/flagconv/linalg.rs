//! Linear algebra over a prime field `F_q`, with subspaces kept in reduced
//! row-echelon form so that equal subspaces have equal representations.

/// The prime field of order `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    pub q: u64,
}

impl Field {
    pub fn new(q: u64) -> Self {
        assert!(q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0), "{q} is not prime");
        Field { q }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.q
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.q != 0, "inverse of zero");
        let mut r = 1;
        let mut b = a % self.q;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }
}

/// Reduce `rows` to reduced row-echelon form, dropping zero rows.
pub fn rref(f: Field, mut rows: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut lead = 0;
    for col in 0..ncols {
        let Some(piv) = (lead..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(lead, piv);
        let inv = f.inv(rows[lead][col]);
        for x in rows[lead].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != lead && rows[r][col] != 0 {
                let k = rows[r][col];
                for c in 0..ncols {
                    let t = f.mul(k, rows[lead][c]);
                    rows[r][c] = f.sub(rows[r][c], t);
                }
            }
        }
        lead += 1;
        if lead == rows.len() {
            break;
        }
    }
    rows.truncate(lead);
    rows
}

pub fn rank(f: Field, rows: Vec<Vec<u64>>) -> usize {
    rref(f, rows).len()
}

/// A subspace of `F_q^ambient`, as the rows of its RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| (i == j) as u64).collect())
            .collect();
        Subspace { ambient, rows }
    }

    /// `span(e_0, ..., e_{k-1})`.
    pub fn coordinate(ambient: usize, k: usize) -> Self {
        let rows = (0..k)
            .map(|i| (0..ambient).map(|j| (i == j) as u64).collect())
            .collect();
        Subspace { ambient, rows }
    }

    pub fn span(f: Field, ambient: usize, rows: Vec<Vec<u64>>) -> Self {
        Subspace { ambient, rows: rref(f, rows) }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().position(|x| *x != 0).unwrap()).collect()
    }

    pub fn sum(&self, f: Field, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace::span(f, self.ambient, rows)
    }

    pub fn sum_dim(&self, f: Field, other: &Subspace) -> usize {
        if self.rows.is_empty() {
            return other.dim();
        }
        if other.rows.is_empty() {
            return self.dim();
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        rank(f, rows)
    }

    pub fn meet_dim(&self, f: Field, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum_dim(f, other)
    }

    pub fn contains(&self, f: Field, other: &Subspace) -> bool {
        self.sum_dim(f, other) == self.dim()
    }

    /// Unit vectors at the non-pivot columns; they span a complement.
    pub fn complement_units(&self) -> Vec<Vec<u64>> {
        let piv = self.pivots();
        (0..self.ambient)
            .filter(|c| !piv.contains(c))
            .map(|c| (0..self.ambient).map(|j| (j == c) as u64).collect())
            .collect()
    }

    /// Orthogonal complement for the anti-diagonal form
    /// `<x, y> = sum_i x_i y_{N-1-i}`.
    pub fn perp(&self, f: Field) -> Subspace {
        let n = self.ambient;
        let m: Vec<Vec<u64>> = self.rows.iter().map(|r| r.iter().rev().cloned().collect()).collect();
        Subspace { ambient: n, rows: rref(f, null_space(f, n, &m)) }
    }
}

/// Basis of `{y : M y = 0}` for an RREF matrix `m` with `n` columns.
fn null_space(f: Field, n: usize, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let m = rref(f, m.to_vec());
    let piv: Vec<usize> = m.iter().map(|r| r.iter().position(|x| *x != 0).unwrap()).collect();
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !piv.contains(c)) {
        let mut y = vec![0; n];
        y[free] = 1;
        for (r, &p) in m.iter().zip(&piv) {
            y[p] = f.sub(0, r[free]);
        }
        out.push(y);
    }
    out
}

/// The anti-diagonal symmetric form.
pub fn form(f: Field, x: &[u64], y: &[u64]) -> u64 {
    let n = x.len();
    (0..n).fold(0, |acc, i| f.add(acc, f.mul(x[i], y[n - 1 - i])))
}

/// Call `visit` with every `m`-dimensional subspace of `F_q^s`, given by an
/// RREF basis in coordinates. Stops early when `visit` returns `false`.
pub fn for_each_subspace<F: FnMut(&[Vec<u64>]) -> bool>(f: Field, s: usize, m: usize, visit: F) -> bool {
    for_each_subspace_pruned(f, s, m, |_| true, visit)
}

/// Like [`for_each_subspace`], but rows are chosen one at a time and
/// `keep(rows)` is consulted after each new row (the last one) so that
/// whole branches can be skipped.
pub fn for_each_subspace_pruned<K, F>(f: Field, s: usize, m: usize, mut keep: K, mut visit: F) -> bool
where
    K: FnMut(&[Vec<u64>]) -> bool,
    F: FnMut(&[Vec<u64>]) -> bool,
{
    if m > s {
        return true;
    }
    let mut piv = Vec::with_capacity(m);
    for_each_combination(s, m, &mut piv, &mut |piv: &[usize]| {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m);
        rows_rec(f, s, piv, &mut rows, &mut keep, &mut visit)
    })
}

fn rows_rec<K, F>(f: Field, s: usize, piv: &[usize], rows: &mut Vec<Vec<u64>>, keep: &mut K, visit: &mut F) -> bool
where
    K: FnMut(&[Vec<u64>]) -> bool,
    F: FnMut(&[Vec<u64>]) -> bool,
{
    let t = rows.len();
    if t == piv.len() {
        return visit(rows);
    }
    let slots: Vec<usize> = (piv[t] + 1..s).filter(|c| !piv.contains(c)).collect();
    let mut vals = vec![0u64; slots.len()];
    loop {
        let mut row = vec![0u64; s];
        row[piv[t]] = 1;
        for (k, &c) in slots.iter().enumerate() {
            row[c] = vals[k];
        }
        rows.push(row);
        let go = if keep(rows) { rows_rec(f, s, piv, rows, keep, visit) } else { true };
        rows.pop();
        if !go {
            return false;
        }
        let mut k = 0;
        loop {
            if k == vals.len() {
                return true;
            }
            vals[k] += 1;
            if vals[k] < f.q {
                break;
            }
            vals[k] = 0;
            k += 1;
        }
    }
}

fn for_each_combination<F: FnMut(&[usize]) -> bool>(s: usize, m: usize, cur: &mut Vec<usize>, visit: &mut F) -> bool {
    if cur.len() == m {
        return visit(cur);
    }
    let start = cur.last().map_or(0, |x| x + 1);
    for c in start..s {
        if s - c < m - cur.len() {
            break;
        }
        cur.push(c);
        let go = for_each_combination(s, m, cur, visit);
        cur.pop();
        if !go {
            return false;
        }
    }
    true
}

/// Gaussian binomial `[s choose m]_q` as an integer.
pub fn gaussian_binomial(q: u64, s: usize, m: usize) -> u128 {
    if m > s {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..m {
        num *= q.pow((s - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        for q in [2, 3, 5] {
            let f = Field::new(q);
            for s in 0..=4 {
                for m in 0..=s {
                    let mut seen = std::collections::HashSet::new();
                    for_each_subspace(f, s, m, |rows| {
                        assert_eq!(rref(f, rows.to_vec()), rows.to_vec());
                        seen.insert(rows.to_vec());
                        true
                    });
                    assert_eq!(seen.len() as u128, gaussian_binomial(q, s, m), "q={q} s={s} m={m}");
                }
            }
        }
    }

    #[test]
    fn perp_dimensions() {
        let f = Field::new(5);
        let u = Subspace::coordinate(5, 2);
        let p = u.perp(f);
        assert_eq!(p.dim(), 3);
        assert_eq!(p, Subspace::coordinate(5, 3));
        assert!(p.contains(f, &u));
        let w = Subspace::span(f, 5, vec![vec![1, 2, 0, 3, 4]]);
        assert_eq!(w.perp(f).dim(), 4);
        assert_eq!(w.perp(f).perp(f), w);
    }

    #[test]
    fn inverse_and_meet() {
        let f = Field::new(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let a = Subspace::span(f, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(f, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.meet_dim(f, &b), 1);
    }
}
