//! Fit a product along the shift `A + pI` as polynomials in u = v^-p from
//! Schur-algebra samples, then evaluate the fit where the cells have
//! negative diagonal entries and compare with the limit algebra.

use qschur::engine::stabilize::stabilization_fit;
use qschur::engine::Algebra;
use qschur::lattice::Cell;

fn main() -> qschur::Result<()> {
    let lim = Algebra::limit_a(2);
    let e = Cell::rows([[0, 1], [0, -2]]);
    let f = Cell::rows([[0, 0], [1, -2]]);
    // samples in S(2, d) at shifts where every entry is nonnegative
    let fam = stabilization_fit(&Cell::identity(2), 4, |p| {
        let s = Algebra::schur_a(2, e.shift(p).total());
        Ok((*s.mul_std(&e.shift(p), &f.shift(p))?).clone())
    })?;
    println!("fit of degree {} from {} samples", fam.degree, fam.samples.len());
    for p in [0, -3] {
        let fitted = fam.eval(p)?;
        println!("p = {p}: {fitted}");
        assert_eq!(fitted, *lim.mul_std(&e.shift(p), &f.shift(p))?);
    }
    println!("the fit agrees with the limit algebra");
    Ok(())
}
