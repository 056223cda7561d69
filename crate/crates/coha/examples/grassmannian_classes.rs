//! The dictionary between partitions in a box and wedge monomials.
//!
//! A Schur class `s_lam` on Gr(d, n) corresponds to the wedge monomial
//! `phi_{k_1} ^ ... ^ phi_{k_d}` with `k_i = lam_(d+1-i) + i - 1`, i.e. the
//! index list is the partition read bottom-up with a staircase added.
//! Transposing the partition matches a complement operation on index sets.

use coha::partitions::{
    index_to_partition, partition_to_index, partitions_in_box, transpose_index,
};
use coha::{exterior, BoxShape, ExteriorElement, Rational, WedgeIndex};

fn main() {
    let bx = BoxShape::new(2, 4);
    println!("Schur basis of H*(Gr(2,4)) and the index dictionary:\n");
    println!(
        "{:<10} {:<10} {:<12} {}",
        "partition", "index", "transpose", "complement in {0..3}"
    );
    for lam in partitions_in_box(bx) {
        let k = partition_to_index(&lam, bx.rows()).unwrap();
        let kt = transpose_index(&k, bx.ambient()).unwrap();
        // The defining property: k and the reflection of kt tile {0,...,n-1}.
        let mut tiles: Vec<u32> = k.indices().to_vec();
        tiles.extend(kt.indices().iter().map(|&j| 3 - j));
        tiles.sort();
        println!(
            "{:<10} {:<10} {:<12} {:?}",
            lam.to_string(),
            k.to_string(),
            kt.to_string(),
            tiles
        );
        assert_eq!(tiles, vec![0, 1, 2, 3]);
        assert_eq!(index_to_partition(&k), lam);
        assert_eq!(index_to_partition(&kt), lam.transpose());
    }

    // Wedge elements and Schur classes convert both ways.
    let k = WedgeIndex::new([1, 3]);
    let phi = ExteriorElement::monomial(k.clone(), Some(4));
    let class = exterior::to_schur(&phi, 4, 2).unwrap();
    println!("\nwedge {} in Gr(2,4)  <->  {}", k, class);
    let back = exterior::from_schur(&class);
    assert_eq!(back.coeff(&k), Rational::from_integer(1.into()));
    println!("round trip restores the monomial: {}", back);
}
