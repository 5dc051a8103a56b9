//! Transfer maps between Schur algebras of weights d and d - n, applied to
//! canonical elements and expanded in the target canonical basis.

use qschur::coideal::{transfer_i_hom, transfer_j_hom};
use qschur::engine::Algebra;
use qschur::lattice::{all_theta, Cell};
use qschur::type_a::transfer_a;

fn main() -> qschur::Result<()> {
    let (src, dst) = (Algebra::schur_a(2, 4), Algebra::schur_a(2, 2));
    for a in all_theta(2, 4).into_iter().filter(|a| a.diagonal().iter().all(|&x| x >= 1)) {
        let img = transfer_a(&src, &dst, &*src.canonical(&a)?)?;
        println!("{{{a}}} -> {}", dst.to_canonical(&img)?);
    }

    let (src, dst) = (Algebra::schur_j(3, 4), Algebra::schur_j(3, 1));
    let h = transfer_j_hom(&src, &dst)?;
    let a = Cell::rows([[2, 1, 0], [0, 3, 0], [0, 1, 2]]);
    println!("odd rank: {{{a}}} -> {}", dst.to_canonical(&h.eval(&*src.canonical(&a)?)?)?);

    let (src, dst) = (Algebra::schur_i(2, 4), Algebra::schur_i(2, 2));
    let h = transfer_i_hom(&src, &dst)?;
    for a in [1, 2, 3] {
        let c = Cell::rows([[a, 0, 4 - a], [0, 1, 0], [4 - a, 0, a]]);
        println!("even rank: {{{c}}} -> {}", dst.to_canonical(&h.eval(&*src.canonical(&c)?)?)?);
    }
    Ok(())
}
