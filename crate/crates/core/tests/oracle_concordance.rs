use qschur::engine::{Algebra, Element};
use qschur::flagconv::{check_product_at, oracle_product, Family, PRIMES};
use qschur::lattice::{all_theta, all_xi, all_xi_iota};
use qschur::Cell;

fn compare(alg: &Algebra, cells: &[Cell], only_generators_left: bool) -> usize {
    let mut n = 0;
    for a in cells {
        if only_generators_left && a.spread() > 1 && !a.is_diagonal() {
            // generator cells move one unit by one step (twice, mirrored, for isotropic cells)
            let off: i64 = a.off_diagonal().map(|(_, _, x)| x).sum();
            if off > 2 {
                continue;
            }
        }
        for b in cells {
            if a.co() != b.ro() {
                continue;
            }
            let want = oracle_product(Family::of_context(alg.context()), a, b, &PRIMES).unwrap().element();
            let got: Element = (*alg.mul_std(a, b).unwrap()).clone();
            assert_eq!(got, want, "[{a}][{b}] in {}", alg.context());
            n += 1;
        }
    }
    n
}

#[test]
fn schur_a_all_pairs() {
    for d in 1..=3 {
        compare(&Algebra::schur_a(2, d), &all_theta(2, d), false);
    }
}

#[test]
fn schur_j_all_pairs() {
    for d in 0..=1 {
        let n = compare(&Algebra::schur_j(3, d), &all_xi(3, d), false);
        eprintln!("J d={d}: {n} products");
    }
}

#[test]
fn schur_i_all_pairs() {
    for d in 1..=2 {
        let n = compare(&Algebra::schur_i(2, d), &all_xi_iota(2, d), false);
        eprintln!("I d={d}: {n} products");
    }
}

#[test]
fn schur_i_d3_per_prime() {
    let alg = Algebra::schur_i(2, 3);
    let cells = all_xi_iota(2, 3);
    for a in &cells {
        for b in &cells {
            if a.co() != b.ro() {
                continue;
            }
            let x = alg.mul_std(a, b).unwrap();
            assert_eq!(check_product_at(Family::BC, a, b, &x, &[3, 5]).unwrap(), None, "[{a}][{b}]");
        }
    }
}

#[test]
fn schur_j_d2_generators() {
    let alg = Algebra::schur_j(3, 2);
    let cells = all_xi(3, 2);
    let mut n = 0;
    for g in cells.iter().filter(|g| g.spread() == 2 || g.is_diagonal()) {
        for b in &cells {
            if g.co() != b.ro() {
                continue;
            }
            let x = alg.mul_std(g, b).unwrap();
            assert_eq!(check_product_at(Family::BC, g, b, &x, &[3, 5, 7]).unwrap(), None, "[{g}][{b}]");
            n += 1;
        }
    }
    eprintln!("J d=2: {n} generator products");
}
