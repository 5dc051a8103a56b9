//! Block embeddings of a rank-2 type A limit algebra into larger type A and
//! odd-rank limit algebras send canonical elements to canonical elements.

use qschur::engine::Algebra;
use qschur::lattice::Cell;

fn main() -> qschur::Result<()> {
    let a2 = Algebra::limit_a(2);
    let a3 = Algebra::limit_a(3);
    let j5 = Algebra::limit_j(5);
    let c = Cell::rows([[0, 2], [1, -1]]);
    let ca = a2.canonical(&c)?;
    for k in [0, 1] {
        let iota = ca.map_cells(|z| z.embed_iota(3, k).ok());
        assert_eq!(iota, *a3.canonical(&c.embed_iota(3, k)?)?);
        let tau = ca.map_cells(|z| z.embed_tau(5, k).ok());
        assert_eq!(tau, *j5.canonical(&c.embed_tau(5, k)?)?);
        println!("k = {k}: {{{}}} = {tau}", c.embed_tau(5, k)?);
    }
    Ok(())
}
