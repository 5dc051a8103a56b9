//! Evaluate the defining relations of the coideal algebras on the generator
//! images in small Schur algebras, in both scalar normalizations.

use qschur::coideal::{check_i_relations, check_j_relations, Convention};
use qschur::engine::Algebra;

fn main() -> qschur::Result<()> {
    for conv in [Convention::Engine, Convention::Printed] {
        println!("{conv:?}:");
        for r in check_j_relations(&Algebra::schur_j(3, 2), conv)? {
            println!("  odd rank  {:<22} {:>3} instances, {} failing", r.family, r.instances, r.failures.len());
        }
        for r in check_i_relations(&Algebra::schur_i(4, 2), conv)? {
            println!("  even rank {:<22} {:>3} instances, {} failing", r.family, r.instances, r.failures.len());
        }
    }
    Ok(())
}
