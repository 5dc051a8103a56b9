//! The rank-one even-rank algebras S^i(2, d): closed forms for the bar
//! involution and the canonical basis, checked against the general engine.

use qschur::coideal::{rank1_bar, rank1_canonical, rank1_cell, rank1_gamma};
use qschur::engine::Algebra;

fn main() -> qschur::Result<()> {
    for a in 0..4 {
        let row: Vec<String> = (0..4).map(|i| rank1_gamma(a, i).map(|g| g.to_string())).collect::<Result<_, _>>()?;
        println!("gamma_{a}(0..4) = {}", row.join(" | "));
    }
    let (a, r) = (1, 3);
    let alg = Algebra::schur_i(2, a + r);
    let c = rank1_cell(a, r).unwrap();
    assert_eq!(*alg.bar_std(&c)?, rank1_bar(a, r)?);
    assert_eq!(*alg.canonical(&c)?, rank1_canonical(a, r)?);
    println!("{{A_{{{a},{r}}}}} = {}", rank1_canonical(a, r)?);
    Ok(())
}
