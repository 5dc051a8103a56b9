//! Class canonical elements of the odd-rank limit algebra: certify shift
//! stability, project to Schur algebras, and multiply two of them.

use qschur::coideal::{class_member, project_class, sl_canonical};
use qschur::engine::stabilize::stable_cb_product;
use qschur::engine::Algebra;
use qschur::lattice::Cell;

fn main() -> qschur::Result<()> {
    let lim = Algebra::limit_j(3);
    let a = Cell::rows([[0, 0, 1], [0, -3, 0], [1, 0, 0]]);
    let b = sl_canonical(&lim, &a)?;
    println!("class of {a}: stable from shift {}", b.p0);
    println!("  {}", b.element);
    for d in [8, 11] {
        let proj = project_class(&lim, &b, d)?;
        let schur = Algebra::schur_j(3, d);
        println!("weight {d}: {proj}");
        if let Some(m) = class_member(&lim, &a, d) {
            assert_eq!(proj, *schur.canonical(&m)?);
        }
    }
    let x = Cell::rows([[0, 1, 0], [0, 1, 0], [0, 1, 0]]);
    let y = Cell::rows([[0, 0, 0], [1, 1, 1], [0, 0, 0]]);
    let (p, prod) = stable_cb_product(&lim, &x, &y, &Cell::identity(3), 0)?;
    println!("product of classes (stable from shift {p}): {prod}");
    println!("all coefficients in N[v,v^-1]: {}", prod.iter().all(|(_, k)| k.is_nonneg()));
    Ok(())
}
