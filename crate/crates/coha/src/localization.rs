//! Pushforward realization of the raising and lowering operators as exact
//! localization sums over variable shuffles, cross-checked against the wedge
//! calculus.
//!
//! Each sum is assembled over the common denominator `prod_{a<b} (x_a - x_b)`
//! and divided out exactly; a nonzero remainder means the formula was
//! transcribed wrong, and is reported as an error instead of being absorbed.

use itertools::Itertools;
use num_traits::One;
use thiserror::Error;

use crate::exterior::truncate;
use crate::exterior::canonicalize;
use crate::partitions::{
    index_to_partition, partition_to_index, transpose_index, BoxShape,
};
use crate::rational::{neg_one_pow, Rational};
use crate::symfunc::{schur, schur_expand, MultiPoly, SchurClass, SymfuncError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalizationError {
    #[error("localization sum is not a polynomial: x{a} - x{b} leaves a remainder")]
    NotPolynomial { a: usize, b: usize },
    #[error("no room to raise: the class already has {d} rows at ambient rank {n}")]
    AmbientFull { d: usize, n: usize },
    #[error("cannot lower a class of row degree zero")]
    DegreeZero,
    #[error(transparent)]
    Symfunc(#[from] SymfuncError),
}

/// Parameters of one shuffle sum: `total_vars` variables split into a
/// `chosen`-element subset feeding `left_factor` and a complement feeding
/// `right_factor`.
#[derive(Debug, Clone)]
pub struct ShuffleSumSpec {
    pub total_vars: usize,
    pub chosen: usize,
    pub left_factor: MultiPoly,
    pub right_factor: MultiPoly,
}

impl ShuffleSumSpec {
    pub fn new(
        total_vars: usize,
        chosen: usize,
        left_factor: MultiPoly,
        right_factor: MultiPoly,
    ) -> Self {
        assert!(chosen <= total_vars, "chosen subset larger than variable pool");
        assert_eq!(left_factor.nvars(), chosen, "left factor variable count");
        assert_eq!(
            right_factor.nvars(),
            total_vars - chosen,
            "right factor variable count"
        );
        ShuffleSumSpec {
            total_vars,
            chosen,
            left_factor,
            right_factor,
        }
    }
}

/// Sum over all subset choices of `left(chosen) * right(complement)` divided
/// by `prod (x_chosen - x_complement)`, certified to be a polynomial.
///
/// Each term is brought over the full Vandermonde determinant: for a subset S
/// with complement C, `1 / prod_{s in S, c in C}(x_s - x_c)` equals
/// `(-1)^inv * V_S * V_C / V` where V_S, V_C are the within-block Vandermonde
/// factors and inv counts pairs s > c. The numerators are summed and V is
/// divided back out one linear factor at a time.
pub fn shuffle_sum(spec: &ShuffleSumSpec) -> Result<MultiPoly, LocalizationError> {
    let m = spec.total_vars;
    let mut numerator = MultiPoly::zero(m);
    for subset in (0..m).combinations(spec.chosen) {
        let complement: Vec<usize> = (0..m).filter(|v| !subset.contains(v)).collect();
        let left = spec.left_factor.map_vars(m, &subset);
        let right = spec.right_factor.map_vars(m, &complement);
        let mut term = &left * &right;
        for block in [&subset, &complement] {
            for (pos, &a) in block.iter().enumerate() {
                for &b in &block[pos + 1..] {
                    term = &term * &(&MultiPoly::var(m, a) - &MultiPoly::var(m, b));
                }
            }
        }
        let inversions: usize = subset
            .iter()
            .map(|&s| complement.iter().filter(|&&c| s > c).count())
            .sum();
        numerator = &numerator + &term.scale(&neg_one_pow(inversions as u32));
    }
    let mut result = numerator;
    for a in 0..m {
        for b in a + 1..m {
            result = result
                .divide_by_linear(a, b)
                .ok_or(LocalizationError::NotPolynomial { a: a + 1, b: b + 1 })?;
        }
    }
    Ok(result)
}

/// Raising pushforward on Schur classes: one new row joins the class. The
/// shuffle sum distributes `x^i` over the extra variable, the result is
/// expanded in the Schur basis and truncated to the target box.
pub fn raise_localized(i: u32, c: &SchurClass) -> Result<SchurClass, LocalizationError> {
    let d = c.shape().rows();
    let n = c.shape().ambient();
    if d + 1 > n {
        return Err(LocalizationError::AmbientFull { d, n });
    }
    let target = BoxShape::new(d + 1, n);
    let head: Vec<usize> = (0..d).collect();
    let mut out = SchurClass::zero(d + 1, n);
    for (lam, coeff) in c.coeffs() {
        let spec = ShuffleSumSpec::new(
            d + 1,
            d,
            schur(d, lam, &head),
            MultiPoly::monomial(1, vec![i], Rational::one()),
        );
        let total = shuffle_sum(&spec)?;
        for (mu, c2) in schur_expand(&total)? {
            if mu.fits_box(target) {
                out.add_coeff(mu, coeff * &c2);
            }
        }
    }
    Ok(out)
}

/// Lowering operator computed through the transpose presentation: a class on
/// the Grassmannian re-reads as a signed class on the complementary
/// Grassmannian, where lowering becomes a plain left wedge. The signs are
/// `(-1)^(|lam| + n - d)` from the rewriting and `(-1)^|mu|` from converting
/// the answer back.
pub fn lower_via_transpose(r: u32, c: &SchurClass) -> Result<SchurClass, LocalizationError> {
    let d = c.shape().rows();
    let n = c.shape().ambient();
    if d == 0 {
        return Err(LocalizationError::DegreeZero);
    }
    let mut out = SchurClass::zero(d - 1, n);
    for (lam, coeff) in c.coeffs() {
        let k = partition_to_index(lam, d).expect("class partitions fit d rows");
        let kt = transpose_index(&k, n).expect("class entries stay below n");
        let gens: Vec<u32> = std::iter::once(r)
            .chain(kt.indices().iter().copied())
            .collect();
        let wedged = truncate(&canonicalize(&gens, None), n);
        for (j, eps) in wedged.terms() {
            let jt = transpose_index(j, n).expect("truncated entries stay below n");
            let mu = index_to_partition(&jt);
            let sign = neg_one_pow(lam.weight() + (n - d) as u32 + mu.weight());
            out.add_coeff(mu, coeff * eps * sign);
        }
    }
    Ok(out)
}

/// The same lowering operator with the middle step evaluated as a genuine
/// localization sum on the complementary Grassmannian instead of a wedge.
/// Exposed separately so the two readings can be compared term by term.
pub fn lower_localized_raw(r: u32, c: &SchurClass) -> Result<SchurClass, LocalizationError> {
    let d = c.shape().rows();
    let n = c.shape().ambient();
    if d == 0 {
        return Err(LocalizationError::DegreeZero);
    }
    // Lowering d -> d-1 here is raising n-d -> n-d+1 on the complementary
    // side; everything else is sign bookkeeping identical to the wedge route.
    let co = n - d;
    let co_box = BoxShape::new(co + 1, n);
    let head: Vec<usize> = (0..co).collect();
    let mut out = SchurClass::zero(d - 1, n);
    for (lam, coeff) in c.coeffs() {
        let spec = ShuffleSumSpec::new(
            co + 1,
            co,
            schur(co, &lam.transpose(), &head),
            MultiPoly::monomial(1, vec![r], Rational::one()),
        );
        let total = shuffle_sum(&spec)?;
        for (mu_t, c2) in schur_expand(&total)? {
            if !mu_t.fits_box(co_box) {
                continue;
            }
            let mu = mu_t.transpose();
            let sign = neg_one_pow(lam.weight() + (n - d) as u32 + mu.weight());
            out.add_coeff(mu, coeff * &c2 * sign);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{basis, d_left, d_right, to_schur, ExteriorElement};
    use crate::operators::raise;
    use crate::partitions::Partition;
    use crate::rational::rat;

    fn pt(xs: &[u32]) -> Partition {
        Partition::new(xs.iter().copied())
    }

    fn unit_class(d: usize, n: usize) -> SchurClass {
        SchurClass::from_coeffs(d, n, [(Partition::empty(), rat(1))]).unwrap()
    }

    #[test]
    fn shuffle_with_empty_denominator_is_the_bare_factor() {
        let spec = ShuffleSumSpec::new(
            1,
            0,
            MultiPoly::one(0),
            MultiPoly::monomial(1, vec![3], rat(1)),
        );
        assert_eq!(
            shuffle_sum(&spec).unwrap(),
            MultiPoly::monomial(1, vec![3], rat(1))
        );
    }

    #[test]
    fn shuffle_two_variable_hand_sums() {
        // 1/(x1-x2) + 1/(x2-x1) = 0
        let spec = ShuffleSumSpec::new(2, 1, MultiPoly::one(1), MultiPoly::one(1));
        assert!(shuffle_sum(&spec).unwrap().is_zero());
        // x2/(x1-x2) + x1/(x2-x1) = -1
        let spec = ShuffleSumSpec::new(
            2,
            1,
            MultiPoly::one(1),
            MultiPoly::monomial(1, vec![1], rat(1)),
        );
        assert_eq!(shuffle_sum(&spec).unwrap(), MultiPoly::constant(2, rat(-1)));
    }

    #[test]
    fn shuffle_output_is_symmetric() {
        let spec = ShuffleSumSpec::new(
            3,
            2,
            schur(2, &pt(&[1]), &[0, 1]),
            MultiPoly::monomial(1, vec![3], rat(1)),
        );
        let total = shuffle_sum(&spec).unwrap();
        assert!(!total.is_zero());
        assert!(total.is_symmetric());
    }

    #[test]
    fn shuffle_with_full_subset_returns_the_left_factor() {
        let left = schur(2, &pt(&[2, 1]), &[0, 1]);
        let spec = ShuffleSumSpec::new(2, 2, left.clone(), MultiPoly::one(0));
        assert_eq!(shuffle_sum(&spec).unwrap(), left);
    }

    #[test]
    fn raise_hand_examples() {
        let c = unit_class(1, 2);
        let up = raise_localized(1, &c).unwrap();
        assert_eq!(up, unit_class(2, 2).scale(&rat(-1)));
        assert!(raise_localized(0, &c).unwrap().is_zero());
        let fundamental = raise_localized(0, &unit_class(0, 3)).unwrap();
        assert_eq!(fundamental, unit_class(1, 3));
    }

    #[test]
    fn raise_rejects_a_full_grassmannian() {
        assert_eq!(
            raise_localized(0, &unit_class(2, 2)),
            Err(LocalizationError::AmbientFull { d: 2, n: 2 })
        );
    }

    #[test]
    fn lower_hand_examples() {
        // Top class of the rank-2 truncation drops to the fundamental class.
        let top = unit_class(2, 2);
        assert_eq!(lower_via_transpose(0, &top).unwrap(), unit_class(1, 2));
        // Complementarity: the result vanishes when n-1-r misses the index.
        assert!(lower_via_transpose(0, &unit_class(1, 3)).unwrap().is_zero());
        // One occupied row comes all the way down.
        let c = SchurClass::from_coeffs(1, 2, [(pt(&[1]), rat(1))]).unwrap();
        assert_eq!(lower_via_transpose(0, &c).unwrap(), unit_class(0, 2));
    }

    #[test]
    fn lower_rejects_degree_zero() {
        assert_eq!(
            lower_via_transpose(0, &unit_class(0, 2)),
            Err(LocalizationError::DegreeZero)
        );
        assert_eq!(
            lower_localized_raw(0, &unit_class(0, 2)),
            Err(LocalizationError::DegreeZero)
        );
    }

    #[test]
    fn raise_matches_the_wedge_model() {
        for n in 1..=4usize {
            for k in basis(n) {
                let d = k.degree();
                if d == n {
                    continue;
                }
                let mono = ExteriorElement::monomial(k.clone(), Some(n));
                let class = to_schur(&mono, n, d).unwrap();
                for i in 0..=n as u32 {
                    let localized = raise_localized(i, &class).unwrap();
                    let combinatorial =
                        to_schur(&raise(i, n).apply(&mono), n, d + 1).unwrap();
                    assert_eq!(localized, combinatorial, "n={n} i={i} k={k}");
                }
            }
        }
    }

    #[test]
    fn lower_matches_the_right_derivative() {
        for n in 1..=4usize {
            for k in basis(n) {
                let d = k.degree();
                if d == 0 {
                    continue;
                }
                let mono = ExteriorElement::monomial(k.clone(), Some(n));
                let class = to_schur(&mono, n, d).unwrap();
                for r in 0..n as u32 {
                    let lowered = lower_via_transpose(r, &class).unwrap();
                    let derived =
                        to_schur(&d_right(n as u32 - 1 - r, &mono), n, d - 1).unwrap();
                    assert_eq!(lowered, derived, "n={n} r={r} k={k}");
                }
            }
        }
    }

    #[test]
    fn twisted_sign_gives_the_left_derivative() {
        for n in 1..=4usize {
            for k in basis(n) {
                let d = k.degree();
                if d == 0 {
                    continue;
                }
                let mono = ExteriorElement::monomial(k.clone(), Some(n));
                let class = to_schur(&mono, n, d).unwrap();
                for r in 0..n as u32 {
                    let twisted = lower_via_transpose(r, &class)
                        .unwrap()
                        .scale(&neg_one_pow(d as u32 - 1));
                    let derived =
                        to_schur(&d_left(n as u32 - 1 - r, &mono), n, d - 1).unwrap();
                    assert_eq!(twisted, derived, "n={n} r={r} k={k}");
                }
            }
        }
    }

    #[test]
    fn raw_sum_agrees_with_the_transpose_route() {
        for n in 1..=4usize {
            for k in basis(n) {
                let d = k.degree();
                if d == 0 {
                    continue;
                }
                let mono = ExteriorElement::monomial(k.clone(), Some(n));
                let class = to_schur(&mono, n, d).unwrap();
                for r in 0..=n as u32 {
                    assert_eq!(
                        lower_localized_raw(r, &class).unwrap(),
                        lower_via_transpose(r, &class).unwrap(),
                        "n={n} r={r} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn raw_sum_is_linear() {
        let a = SchurClass::from_coeffs(2, 4, [(pt(&[2, 1]), rat(2))]).unwrap();
        let b = SchurClass::from_coeffs(2, 4, [(pt(&[1, 1]), rat(-3))]).unwrap();
        let joint = lower_localized_raw(1, &(&a + &b)).unwrap();
        let split = &lower_localized_raw(1, &a).unwrap() + &lower_localized_raw(1, &b).unwrap();
        assert_eq!(joint, split);
    }
}
