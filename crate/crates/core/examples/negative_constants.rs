//! Structure constants of canonical bases of limit algebras that are not in
//! N[v, v^-1]: the type A square {D}{D} and the odd-rank product {B}{A}.

use qschur::engine::Algebra;
use qschur::lattice::Cell;

fn main() -> qschur::Result<()> {
    let lim = Algebra::limit_a(2);
    let d = Cell::rows([[0, 1], [1, -3]]);
    let prod = lim.cb_product(&d, &d)?;
    println!("{{D}}{{D}} = ");
    for (c, k) in prod.iter() {
        println!("    ({k}) {{{c}}}  {}", if k.is_nonneg() { "" } else { "<- negative" });
    }

    let odd = Algebra::limit_j(3);
    let (a, b) = (-3, -2);
    let ca = Cell::rows([[a, 1, 0], [0, b, 0], [0, 1, a]]);
    let cb = Cell::rows([[a, 0, 0], [1, b, 1], [0, 0, a]]);
    let prod = odd.cb_product(&cb, &ca)?;
    println!("{{B}}{{A}} at (a, b) = ({a}, {b}) = ");
    for (c, k) in prod.iter() {
        println!("    ({k}) {{{c}}}");
    }
    Ok(())
}
