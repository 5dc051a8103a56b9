//! Bar involution and canonical basis elements in a Schur algebra and in a
//! limit algebra with negative diagonal entries.

use qschur::engine::Algebra;
use qschur::lattice::Cell;

fn main() -> qschur::Result<()> {
    let alg = Algebra::schur_a(3, 3);
    let a = Cell::rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
    println!("bar[{a}] = {}", alg.bar_std(&a)?);
    println!("{{{a}}} = {}", alg.canonical(&a)?);

    let lim = Algebra::limit_a(2);
    let x = Cell::rows([[0, 1], [2, -4]]);
    let cx = lim.canonical(&x)?;
    println!("{{{x}}} = {cx}");
    // canonical elements are bar-invariant
    assert_eq!(lim.bar(&cx)?, *cx);

    let odd = Algebra::schur_j(3, 2);
    let y = Cell::rows([[1, 1, 0], [0, 1, 0], [0, 1, 1]]);
    println!("{{{y}}} in S^j(3,2) = {}", odd.canonical(&y)?);
    Ok(())
}
