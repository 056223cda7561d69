//! Core moves of the exterior calculus: wedging, the two partial
//! derivatives, the index shift, and truncation.

use coha::exterior::{
    basis, canonicalize, d_left, d_right, multiply_ed_power, truncate, wedge,
};
use coha::rational::neg_one_pow;
use coha::{ExteriorElement, WedgeIndex};

fn main() {
    // Wedging sorts generators and picks up the permutation sign.
    let unsorted = canonicalize(&[2, 0], None);
    println!("phi_2 ^ phi_0            = {unsorted}");
    let repeated = canonicalize(&[1, 1], None);
    println!("phi_1 ^ phi_1            = {repeated}");

    let a = ExteriorElement::generator(1, None);
    let b = canonicalize(&[0, 2], None);
    println!("phi_1 ^ (phi_0 ^ phi_2)  = {}", wedge(&a, &b).unwrap());

    // The right derivative deletes against the top of the monomial, the left
    // derivative against the bottom; on even degrees they differ by a sign.
    let m = ExteriorElement::monomial(WedgeIndex::new([1, 3]), None);
    println!("\nstate       {m}");
    for i in [1u32, 3] {
        println!("d_right_{i}   {}", d_right(i, &m));
        println!("d_left_{i}    {}", d_left(i, &m));
    }
    // In general d_right = (-1)^(degree-1) d_left on homogeneous input.
    let cube = ExteriorElement::monomial(WedgeIndex::new([0, 2, 5]), None);
    for i in 0..6u32 {
        let twist = d_left(i, &cube).scale(&neg_one_pow(3 - 1));
        assert_eq!(d_right(i, &cube), twist);
    }

    // Shifting every index by n realizes multiplication by the top class
    // power e_d(x)^n on Gr(d, n); truncation at n then kills the image.
    let n = 3;
    println!("\nindex shift by n = {n} and truncation:");
    for k in basis(n) {
        if k.is_empty() {
            continue;
        }
        let m = ExteriorElement::monomial(k.clone(), None);
        let shifted = multiply_ed_power(&m, n as u32).unwrap();
        let cut = truncate(&shifted, n);
        println!("  {k:<8} -> {:<12} -> truncates to {cut}", shifted.to_string());
        assert!(cut.is_zero());
    }

    // Truncation is the identity on anything already supported below n.
    let inside = canonicalize(&[0, 2], Some(n));
    assert_eq!(truncate(&inside, n), inside);
    println!("  indices below {n} survive truncation unchanged");
}
