//! Structure constants from counting flags over F_q: each coefficient is
//! interpolated in q through several primes, checked at a held-out prime,
//! and compared with the closed-form products of the engine.

use qschur::engine::Algebra;
use qschur::flagconv::{oracle_product, Family, PRIMES};
use qschur::lattice::Cell;

fn main() -> qschur::Result<()> {
    // type A: S(2, 3)
    let alg = Algebra::schur_a(2, 3);
    let (a, b) = (Cell::rows([[0, 1], [0, 2]]), Cell::rows([[0, 0], [1, 2]]));
    let counted = oracle_product(Family::A, &a, &b, &PRIMES)?;
    for (c, poly) in &counted.terms {
        println!("N_{c}(q) has coefficients {:?} in q (checked at q = {})", poly.count_poly, poly.held_out);
    }
    println!("[{a}][{b}] = {}", counted.element());
    assert_eq!(counted.element(), *alg.mul_std(&a, &b)?);

    // isotropic flags: S^j(3, 1)
    let alg = Algebra::schur_j(3, 1);
    let a = Cell::rows([[0, 1, 0], [0, 1, 0], [0, 1, 0]]);
    let b = Cell::rows([[0, 0, 0], [1, 1, 1], [0, 0, 0]]);
    let counted = oracle_product(Family::BC, &a, &b, &PRIMES)?.element();
    println!("[{a}][{b}] = {counted}");
    assert_eq!(counted, *alg.mul_std(&a, &b)?);
    println!("flag counts agree with the engine");
    Ok(())
}
