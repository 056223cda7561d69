//! The Chevalley generators satisfy the Serre presentation of the Kac-Moody
//! algebra attached to the type-D Cartan matrix.

use coha::operators::chevalley_generators;
use coha::relations::{cartan_d, check_serre};

fn main() {
    // The target Cartan matrix: a fork at node 2, then a chain.
    let cartan = cartan_d(5).unwrap();
    println!("Cartan matrix D_5:\n{cartan}");

    // One relation worked by hand: nodes 0 and 1 are not adjacent, so
    // [E_0, F_1] = 0 and the off-diagonal Serre relation degenerates to a
    // plain commutator [E_0, E_1] = 0.
    let n = 4;
    let cg = chevalley_generators(n);
    let ef = cg.e[0].commutator(&cg.f[1]);
    let ee = cg.e[0].commutator(&cg.e[1]);
    println!("rank {n}: [E_0, F_1] is zero: {}", ef.is_zero());
    println!("rank {n}: [E_0, E_1] is zero: {}", ee.is_zero());
    assert!(ef.is_zero() && ee.is_zero());

    // Adjacent nodes need one more ad: (ad E_1)^2 E_2 = 0 but [E_1, E_2] != 0.
    let single = cg.e[1].commutator(&cg.e[2]);
    let double = cg.e[1].ad_pow(2, &cg.e[2]);
    println!("rank {n}: [E_1, E_2] nonzero: {}", !single.is_zero());
    println!("rank {n}: (ad E_1)^2 E_2 zero: {}", double.is_zero());
    assert!(!single.is_zero() && double.is_zero());

    // The full suite: diagonal action of each H_i, [H_i, E_j] and [H_i, F_j]
    // rescaling by Cartan entries, [E_i, F_j] for i != j, and both
    // higher Serre relations, over every ordered pair of nodes.
    println!();
    for n in 1..=4 {
        let report = check_serre(n);
        println!("{report}");
        assert!(report.passed());
    }
}
