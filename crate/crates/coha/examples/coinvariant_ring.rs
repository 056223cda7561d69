//! Normal forms in the coinvariant ring and two symmetric-function
//! identities that hold there.
//!
//! The coinvariant ring of rank n is polynomials in x1..xn modulo the ideal
//! of positive-degree symmetric functions. Reduction keeps the exponent of
//! x_i below n - i + 1, so the ring has dimension n!.

use coha::partitions::partitions_in_box;
use coha::rational::rat;
use coha::symfunc::{
    coinvariant_reduce, complete, elementary, schur, verify_he_duality, verify_transpose_identity,
};
use coha::{BoxShape, MultiPoly, Partition};

fn main() {
    let n = 3;

    // Every positive-degree elementary symmetric polynomial reduces to zero.
    let all: Vec<usize> = (0..n).collect();
    for r in 1..=n {
        let e = elementary(n, r, &all);
        let nf = coinvariant_reduce(&e, n).unwrap();
        println!("e_{r}(x1..x{n})  ->  {nf}");
        assert!(nf.is_zero());
    }

    // A nonsymmetric monomial has an interesting normal form.
    let x3sq = MultiPoly::monomial(n, vec![0, 0, 2], rat(1));
    println!("\nx3^2  ->  {}", coinvariant_reduce(&x3sq, n).unwrap());

    // Complete homogeneous in a front block matches signed elementary in the
    // complementary back block.
    println!("\nh_r(x1..xd) = (-1)^r e_r(x(d+1)..xn) in rank {n}:");
    for d in 0..=n {
        for r in 0..=n {
            assert!(verify_he_duality(n, d, r), "d={d} r={r}");
        }
    }
    println!("  holds for every d and r up to {n}");
    let h2 = complete(n, 2, &[0]);
    let e2 = elementary(n, 2, &[1, 2]);
    println!("  e.g. h_2(x1)    = {h2}");
    println!("       e_2(x2,x3) = {e2}");
    let diff = &h2 - &e2;
    println!("       difference reduces to {}", coinvariant_reduce(&diff, n).unwrap());

    // Schur polynomials transpose across the same front/back split.
    println!("\ns_lam(x1..xd) = (-1)^|lam| s_lam'(x(d+1)..xn):");
    for d in 0..=n {
        for lam in partitions_in_box(BoxShape::new(d, n)) {
            let ok = verify_transpose_identity(n, d, &lam).unwrap();
            assert!(ok, "d={d} lam={lam}");
        }
    }
    println!("  holds for every partition in every d x (n-d) box");

    // One case spelled out: |lam| = 3 is odd, so the sum reduces to zero.
    let lam = Partition::new([2, 1]);
    let front = schur(n, &lam, &[0, 1]);
    let back = schur(n, &lam.transpose(), &[2]);
    println!("  e.g. s_(2,1)(x1,x2) = {front}");
    println!("       s_(2,1)'(x3)   = {back}");
    let total = &front + &back;
    println!("       sum reduces to {}", coinvariant_reduce(&total, n).unwrap());
}
