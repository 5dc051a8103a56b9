//! Quantum integers and binomials in Z[v, v^-1], the bar involution, and
//! the two summation identities of the rank-one tower.

use qschur::laurent::{check_q_identity, qbinom, qbinom_bar, qint, qint_sym, Laurent, QIdentity};

fn main() {
    for m in [-3, 0, 1, 4] {
        println!("[{m}] = {}    symmetric: {}", qint(m), qint_sym(m));
    }
    let b = qbinom(5, 2);
    println!("[5 choose 2] = {b}");
    println!("bar:          {}", b.bar());
    // bar[m choose b] = v^{2b(b-m)} [m choose b]
    assert_eq!(qbinom_bar(5, 2), qbinom(5, 2).shift(2 * 2 * (2 - 5)));

    let x: Laurent = "v^2 - 3 + v^-1".parse().unwrap();
    println!("({x})^2 = {}", x.pow(2));
    println!("nonnegative coefficients: {}", x.pow(2).is_nonneg());

    let ok = (0..=6).all(|p| check_q_identity(QIdentity::LemmaSum1 { a: -2, p }))
        && (0..=10).all(|m| check_q_identity(QIdentity::LemmaSum1b { m }));
    println!("summation identities hold on the sample: {ok}");
}
