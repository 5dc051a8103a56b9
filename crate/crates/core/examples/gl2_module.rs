//! Canonical elements of the rank-2 limit algebra acting on the highest
//! weight vector of a finite-dimensional gl_2 module.

use qschur::engine::Algebra;
use qschur::lattice::Cell;
use qschur::laurent::qint_sym;
use qschur::type_a::{gl2_act, Gl2Module, ModVec};

fn main() -> qschur::Result<()> {
    let alg = Algebra::limit_a(2);
    let (a21, a22, p) = (1, -5, 0);
    let module = Gl2Module::new(p + a21, a22 + p + 1)?;
    let x = alg.canonical(&Cell::rows([[p, 1], [a21, a22 + p]]))?;
    let image = gl2_act(&alg, &x, &module, &ModVec::highest())?;
    let k = image.coeff(a21 - 1);
    println!("coefficient of F^({}) u+ : {k}", a21 - 1);
    assert_eq!(k, qint_sym(-a22 - 2 * p - 2));
    println!("= the symmetric quantum integer [{}], not 1", -a22 - 2 * p - 2);
    Ok(())
}
