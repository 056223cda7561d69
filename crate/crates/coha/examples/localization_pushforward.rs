//! Pushforward sums over fixed points, computed as exact rational-function
//! shuffles, and their agreement with the wedge operators.

use coha::exterior::{d_right, to_schur};
use coha::localization::{
    lower_localized_raw, lower_via_transpose, raise_localized, shuffle_sum, ShuffleSumSpec,
};
use coha::operators::raise;
use coha::rational::rat;
use coha::symfunc::schur;
use coha::{ExteriorElement, MultiPoly, Partition, SchurClass, WedgeIndex};

fn main() {
    // A shuffle sum: choose 1 of 2 variables, weight the choice by x^2 on
    // the chosen side, divide by the cross differences, sum over choices.
    // Each term has a pole; the sum is a polynomial.
    let spec = ShuffleSumSpec::new(
        2,
        1,
        MultiPoly::monomial(1, vec![2], rat(1)),
        MultiPoly::one(1),
    );
    let sum = shuffle_sum(&spec).unwrap();
    println!("sum over choices of x^2 / (x_chosen - x_other)  =  {sum}");

    // Same skeleton with a Schur weight on the chosen block.
    let left = schur(2, &Partition::new([2, 1]), &[0, 1]);
    let spec = ShuffleSumSpec::new(3, 2, left, MultiPoly::one(1));
    println!("s_(2,1) pushed through a 2-of-3 shuffle          =  {}", shuffle_sum(&spec).unwrap());

    // Weighting the shuffle by the i-th power of the extra Chern root gives
    // the creation operator.
    let n = 4;
    let class = SchurClass::from_coeffs(2, n, [(Partition::new([1, 1]), rat(1))]).unwrap();
    let raised = raise_localized(3, &class).unwrap();
    println!("\nraise_localized(3) on {class}  =  {raised}");

    let state = coha::exterior::from_schur(&class);
    let wedge_side = to_schur(&raise(3, n).apply(&state), n, 3).unwrap();
    assert_eq!(raised, wedge_side);
    println!("matches the wedge operator raise:3");

    // The lowering pushforward, computed on the transposed side, agrees with
    // the right partial derivative d_right(n-1-r).
    let class = SchurClass::from_coeffs(2, n, [(Partition::new([2, 1]), rat(1))]).unwrap();
    for r in 0..n as u32 {
        let lowered = lower_via_transpose(r, &class).unwrap();
        let raw = lower_localized_raw(r, &class).unwrap();
        assert_eq!(lowered, raw);

        let state: ExteriorElement = coha::exterior::from_schur(&class);
        let derived = to_schur(&d_right(n as u32 - 1 - r, &state), n, 1).unwrap();
        assert_eq!(lowered, derived);
        println!("lower_localized({r}) on {class}  =  {lowered}");
    }
    println!("transpose route and raw sum agree, and both match d_right");

    // One wedge monomial, full circle.
    let k = WedgeIndex::new([0, 2]);
    let class = to_schur(&ExteriorElement::monomial(k.clone(), Some(n)), n, 2).unwrap();
    println!("\n{k} as a Schur class: {class}");
}
