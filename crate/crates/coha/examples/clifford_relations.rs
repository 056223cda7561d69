//! Creation and twisted annihilation close a finite Clifford algebra, and
//! the twist is what makes it work.

use coha::exterior::basis;
use coha::operators::{lower, raise, twisted_lower, GradedOperator};
use coha::relations::{check_clifford, check_clifford_untwisted};

fn main() {
    let n = 3;

    // {raise_i, tlower_j} = delta_ij Id, checked entrywise for one pair.
    let a1 = raise(1, n);
    let c1 = twisted_lower(1, n).unwrap();
    let c2 = twisted_lower(2, n).unwrap();
    let diag = a1.anticommutator(&c1);
    let off = a1.anticommutator(&c2);
    println!("{{raise:1, tlower:1}} on the rank-{n} basis:");
    for k in basis(n) {
        println!("  {k:<8} -> {}", diag.basis_image(&k));
    }
    assert_eq!(diag, GradedOperator::identity(n));
    assert!(off.is_zero());
    println!("{{raise:1, tlower:2}} = 0: {}", off.is_zero());

    // The full suite over all pairs.
    println!();
    for n in 1..=5 {
        let report = check_clifford(n);
        println!("{report}");
        assert!(report.passed());
    }

    // Without the degree twist the mixed relation breaks as soon as the two
    // indices can sit inside one monomial: {raise_i, lower_j} then picks up
    // opposite signs on even and odd degrees instead of cancelling.
    let a0 = raise(0, n);
    let b2 = lower(2, n).unwrap();
    let mixed = a0.anticommutator(&b2);
    println!("\nuntwisted {{raise:0, lower:2}} at rank {n}:");
    for k in basis(n) {
        let image = mixed.basis_image(&k);
        if !image.is_zero() {
            println!("  {k:<8} -> {image}   (should be 0)");
        }
    }
    let report = check_clifford_untwisted(n);
    println!("\n{report}");
    assert!(!report.passed());
}
