//! Exterior algebra on odd generators `phi_0, phi_1, ...` with exact rational
//! coefficients.
//!
//! Elements come in two flavors distinguished by the `bound` field: free
//! elements (no bound, any generator index allowed) and elements of the rank-n
//! truncation, where generator indices stay below n. The truncation map sends
//! every monomial touching an index >= n to zero; its kernel is exactly the
//! ideal generated by those high generators.
//!
//! Besides the wedge product the module provides the two one-sided partial
//! derivatives. Removing `phi_i` from the 1-based position p of a degree-d
//! monomial costs `(-1)^(d-p)` for the right derivative and `(-1)^(p-1)` for
//! the left one, so the two differ by the global sign `(-1)^(d-1)` in each
//! degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{index_to_partition, partition_to_index, WedgeIndex};
use crate::rational::{format_signed, neg_one_pow, Rational};
use crate::symfunc::SchurClass;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("bound mismatch: {0:?} vs {1:?}")]
    BoundMismatch(Option<usize>, Option<usize>),
    #[error("expected a homogeneous element of degree {expected}, found a term of degree {found}")]
    NonHomogeneous { expected: usize, found: usize },
    #[error("operation requires a free element, found bound {0}")]
    NotFree(usize),
    #[error("generator index {entry} out of range for rank {n}")]
    EntryOutOfRange { entry: u32, n: usize },
}

/// Linear combination of wedge monomials over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    bound: Option<usize>,
    terms: BTreeMap<WedgeIndex, Rational>,
}

impl ExteriorElement {
    pub fn zero(bound: Option<usize>) -> Self {
        ExteriorElement {
            bound,
            terms: BTreeMap::new(),
        }
    }

    /// The empty wedge monomial with coefficient one.
    pub fn unit(bound: Option<usize>) -> Self {
        ExteriorElement::monomial(WedgeIndex::empty(), bound)
    }

    /// Single generator `phi_i`. Panics if `i` violates the bound.
    pub fn generator(i: u32, bound: Option<usize>) -> Self {
        ExteriorElement::monomial(WedgeIndex::new([i]), bound)
    }

    /// Monomial with coefficient one. Panics if an entry violates the bound.
    pub fn monomial(k: WedgeIndex, bound: Option<usize>) -> Self {
        if let (Some(n), Some(max)) = (bound, k.max_entry()) {
            assert!(
                (max as usize) < n,
                "entry {max} violates bound {n} in {k}"
            );
        }
        let mut terms = BTreeMap::new();
        terms.insert(k, Rational::one());
        ExteriorElement { bound, terms }
    }

    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (sorted by index sequence).
    pub fn terms(&self) -> impl Iterator<Item = (&WedgeIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &WedgeIndex) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * k` into the element, dropping the term if it cancels.
    pub fn add_term(&mut self, k: WedgeIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        if let (Some(n), Some(max)) = (self.bound, k.max_entry()) {
            assert!((max as usize) < n, "entry {max} violates bound {n}");
        }
        let cancelled = {
            let entry = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if cancelled {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ExteriorElement::zero(self.bound);
        }
        ExteriorElement {
            bound: self.bound,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Degree when the element is homogeneous and nonzero.
    pub fn single_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|k| k.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn assert_same_bound(&self, other: &Self) {
        assert!(
            self.bound == other.bound,
            "bound mismatch: {:?} vs {:?}",
            self.bound,
            other.bound
        );
    }
}

impl Add for &ExteriorElement {
    type Output = ExteriorElement;
    fn add(self, rhs: &ExteriorElement) -> ExteriorElement {
        self.assert_same_bound(rhs);
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ExteriorElement {
    type Output = ExteriorElement;
    fn sub(self, rhs: &ExteriorElement) -> ExteriorElement {
        self + &(-rhs)
    }
}

impl Neg for &ExteriorElement {
    type Output = ExteriorElement;
    fn neg(self) -> ExteriorElement {
        ExteriorElement {
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), -v.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{} * {}", format_signed(c), k))
            .collect();
        write!(f, "{}", rendered.join(" "))
    }
}

/// Sorts a generator list into a canonical monomial, tracking the sign of the
/// sorting permutation. A repeated generator collapses the result to zero.
pub fn canonicalize(gens: &[u32], bound: Option<usize>) -> ExteriorElement {
    let mut sorted = gens.to_vec();
    let mut swaps = 0u32;
    // Insertion sort; generator lists are short.
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return ExteriorElement::zero(bound);
    }
    let mut out = ExteriorElement::zero(bound);
    out.add_term(WedgeIndex::new(sorted), neg_one_pow(swaps));
    out
}

/// Wedge product, extended bilinearly. The operands must carry the same bound.
pub fn wedge(a: &ExteriorElement, b: &ExteriorElement) -> Result<ExteriorElement, ExteriorError> {
    if a.bound != b.bound {
        return Err(ExteriorError::BoundMismatch(a.bound, b.bound));
    }
    let mut out = ExteriorElement::zero(a.bound);
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let gens: Vec<u32> = ka
                .indices()
                .iter()
                .chain(kb.indices().iter())
                .copied()
                .collect();
            let prod = canonicalize(&gens, a.bound);
            for (k, c) in prod.terms() {
                out.add_term(k.clone(), c * ca * cb);
            }
        }
    }
    Ok(out)
}

fn derive(a: &ExteriorElement, i: u32, sign_for: impl Fn(usize, usize) -> u32) -> ExteriorElement {
    let mut out = ExteriorElement::zero(a.bound);
    for (k, c) in a.terms() {
        if let Ok(pos) = k.indices().binary_search(&i) {
            let rest: Vec<u32> = k
                .indices()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != pos)
                .map(|(_, &x)| x)
                .collect();
            let sign = neg_one_pow(sign_for(k.degree(), pos + 1));
            out.add_term(WedgeIndex::new(rest), c * sign);
        }
    }
    out
}

/// Right partial derivative by `phi_i`: deleting the factor at 1-based
/// position p of a degree-d monomial contributes the sign `(-1)^(d-p)`.
pub fn d_right(i: u32, a: &ExteriorElement) -> ExteriorElement {
    derive(a, i, |d, p| (d - p) as u32)
}

/// Left partial derivative by `phi_i`: the same deletion costs `(-1)^(p-1)`.
pub fn d_left(i: u32, a: &ExteriorElement) -> ExteriorElement {
    derive(a, i, |_, p| (p - 1) as u32)
}

/// Cup product with the p-th power of the top Chern class on each degree:
/// every generator index shifts up by p. Defined on the free algebra only.
pub fn multiply_ed_power(
    a: &ExteriorElement,
    p: u32,
) -> Result<ExteriorElement, ExteriorError> {
    if let Some(n) = a.bound {
        return Err(ExteriorError::NotFree(n));
    }
    if a.is_zero() {
        return Ok(ExteriorElement::zero(None));
    }
    let degrees: Vec<usize> = a.terms.keys().map(|k| k.degree()).collect();
    let d0 = degrees[0];
    if let Some(&bad) = degrees.iter().find(|&&d| d != d0) {
        return Err(ExteriorError::NonHomogeneous {
            expected: d0,
            found: bad,
        });
    }
    let mut out = ExteriorElement::zero(None);
    for (k, c) in a.terms() {
        out.add_term(k.shifted(p), c.clone());
    }
    Ok(out)
}

/// Projection onto the rank-n truncation: terms touching an index >= n die.
pub fn truncate(a: &ExteriorElement, n: usize) -> ExteriorElement {
    let mut out = ExteriorElement::zero(Some(n));
    for (k, c) in a.terms() {
        if k.max_entry().map_or(true, |m| (m as usize) < n) {
            out.add_term(k.clone(), c.clone());
        }
    }
    out
}

/// Reads a homogeneous degree-d element of the rank-n truncation as a Schur
/// class on the Grassmannian of d-planes in n-space, term by term.
pub fn to_schur(
    a: &ExteriorElement,
    n: usize,
    d: usize,
) -> Result<SchurClass, ExteriorError> {
    if let Some(m) = a.bound {
        if m != n {
            return Err(ExteriorError::BoundMismatch(Some(m), Some(n)));
        }
    }
    let mut out = SchurClass::zero(d, n);
    for (k, c) in a.terms() {
        if k.degree() != d {
            return Err(ExteriorError::NonHomogeneous {
                expected: d,
                found: k.degree(),
            });
        }
        if let Some(max) = k.max_entry() {
            if max as usize >= n {
                return Err(ExteriorError::EntryOutOfRange {
                    entry: max,
                    n,
                });
            }
        }
        out.add_coeff(index_to_partition(k), c.clone());
    }
    Ok(out)
}

/// Inverse dictionary: a Schur class becomes a combination of wedge
/// monomials in the rank-n truncation.
pub fn from_schur(c: &SchurClass) -> ExteriorElement {
    let (d, n) = (c.shape().rows(), c.shape().ambient());
    let mut out = ExteriorElement::zero(Some(n));
    for (lam, coeff) in c.coeffs() {
        let k = partition_to_index(lam, d)
            .expect("partitions in a d-row box fit d slots");
        out.add_term(k, coeff.clone());
    }
    out
}

/// Bitmask of a wedge index: bit i set iff `phi_i` occurs.
pub fn mask_of(k: &WedgeIndex) -> usize {
    k.indices().iter().fold(0, |m, &i| m | (1 << i))
}

/// Wedge index of a bitmask, entries in increasing order.
pub fn index_from_mask(mask: usize) -> WedgeIndex {
    WedgeIndex::new((0..usize::BITS).filter(|&i| mask >> i & 1 == 1).map(|i| i))
}

/// The 2^n monomial basis of the rank-n truncation, in mask order.
pub fn basis(n: usize) -> Vec<WedgeIndex> {
    (0..1usize << n).map(index_from_mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn wi(xs: &[u32]) -> WedgeIndex {
        WedgeIndex::new(xs.iter().copied())
    }

    fn mono(xs: &[u32]) -> ExteriorElement {
        ExteriorElement::monomial(wi(xs), None)
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(&[2, 0, 1], None), mono(&[0, 1, 2]));
        assert_eq!(canonicalize(&[1, 0], None), mono(&[0, 1]).scale(&rat(-1)));
        assert!(canonicalize(&[0, 0], None).is_zero());
        assert_eq!(canonicalize(&[], None), ExteriorElement::unit(None));
    }

    #[test]
    fn wedge_of_monomials() {
        let a = mono(&[0]);
        let b = mono(&[1]);
        assert_eq!(wedge(&a, &b).unwrap(), mono(&[0, 1]));
        assert_eq!(wedge(&b, &a).unwrap(), mono(&[0, 1]).scale(&rat(-1)));
        assert!(wedge(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn wedge_rejects_bound_mismatch() {
        let free = mono(&[0]);
        let bounded = ExteriorElement::generator(0, Some(2));
        assert_eq!(
            wedge(&free, &bounded),
            Err(ExteriorError::BoundMismatch(None, Some(2)))
        );
    }

    #[test]
    fn derivative_examples() {
        let m = mono(&[0, 1]);
        assert_eq!(d_right(1, &m), mono(&[0]));
        assert_eq!(d_right(0, &m), mono(&[1]).scale(&rat(-1)));
        assert_eq!(d_left(1, &m), mono(&[0]).scale(&rat(-1)));
        assert_eq!(d_left(0, &m), mono(&[1]));
        assert!(d_left(0, &ExteriorElement::unit(None)).is_zero());
        assert!(d_right(3, &m).is_zero());
    }

    #[test]
    fn multiply_ed_power_shifts_indices() {
        let m = mono(&[0, 1]);
        assert_eq!(multiply_ed_power(&m, 2).unwrap(), mono(&[2, 3]));
        let mixed = &mono(&[0]) + &ExteriorElement::unit(None);
        assert!(matches!(
            multiply_ed_power(&mixed, 1),
            Err(ExteriorError::NonHomogeneous { .. })
        ));
        let bounded = ExteriorElement::generator(0, Some(3));
        assert!(matches!(
            multiply_ed_power(&bounded, 1),
            Err(ExteriorError::NotFree(3))
        ));
    }

    #[test]
    fn truncate_kills_high_indices() {
        let a = &mono(&[0, 2]) + &mono(&[0, 1]).scale(&rat(3));
        let t = truncate(&a, 2);
        assert_eq!(t.bound(), Some(2));
        assert_eq!(
            t,
            ExteriorElement::monomial(wi(&[0, 1]), Some(2)).scale(&rat(3))
        );
        assert!(truncate(&mono(&[0, 2]), 2).is_zero());
    }

    #[test]
    fn schur_dictionary_round_trips() {
        for n in 0..=5usize {
            for mask in 0..1usize << n {
                let k = index_from_mask(mask);
                let d = k.degree();
                let el = ExteriorElement::monomial(k.clone(), Some(n));
                let class = to_schur(&el, n, d).unwrap();
                assert_eq!(from_schur(&class), el, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn to_schur_rejects_mixed_degrees() {
        let mixed = &ExteriorElement::generator(0, Some(2))
            + &ExteriorElement::unit(Some(2));
        assert!(matches!(
            to_schur(&mixed, 2, 1),
            Err(ExteriorError::NonHomogeneous { .. })
        ));
    }

    #[test]
    fn display_uses_signed_term_grammar() {
        let a = &mono(&[0, 1]).scale(&rat(-1)) + &mono(&[2]).scale(&crate::rational::ratio(3, 2));
        assert_eq!(a.to_string(), "-1 * [0,1] +3/2 * [2]");
        assert_eq!(ExteriorElement::zero(None).to_string(), "0");
        assert_eq!(ExteriorElement::unit(None).to_string(), "+1 * []");
    }

    #[test]
    fn mask_round_trip() {
        for mask in 0..1usize << 8 {
            assert_eq!(mask_of(&index_from_mask(mask)), mask);
        }
        assert_eq!(basis(3).len(), 8);
    }

    // Graded commutativity and both Leibniz rules, exhaustively over monomial
    // pairs on five generators.
    #[test]
    fn graded_commutativity_exhaustive() {
        for a_mask in 0..1usize << 5 {
            for b_mask in 0..1usize << 5 {
                let a = ExteriorElement::monomial(index_from_mask(a_mask), None);
                let b = ExteriorElement::monomial(index_from_mask(b_mask), None);
                let ab = wedge(&a, &b).unwrap();
                let ba = wedge(&b, &a).unwrap();
                let da = a_mask.count_ones();
                let db = b_mask.count_ones();
                assert_eq!(ab, ba.scale(&neg_one_pow(da * db)));
            }
        }
    }

    #[test]
    fn leibniz_rules_exhaustive() {
        for a_mask in 0..1usize << 5 {
            for b_mask in 0..1usize << 5 {
                let a = ExteriorElement::monomial(index_from_mask(a_mask), None);
                let b = ExteriorElement::monomial(index_from_mask(b_mask), None);
                let ab = wedge(&a, &b).unwrap();
                let da = a_mask.count_ones();
                let db = b_mask.count_ones();
                for i in 0..5u32 {
                    // Right derivative peels factors from the right end.
                    let lhs = d_right(i, &ab);
                    let rhs = &wedge(&a, &d_right(i, &b)).unwrap()
                        + &wedge(&d_right(i, &a), &b).unwrap().scale(&neg_one_pow(db));
                    assert_eq!(lhs, rhs, "right i={i} a={a} b={b}");
                    // Left derivative peels from the left end.
                    let lhs = d_left(i, &ab);
                    let rhs = &wedge(&d_left(i, &a), &b).unwrap()
                        + &wedge(&a, &d_left(i, &b)).unwrap().scale(&neg_one_pow(da));
                    assert_eq!(lhs, rhs, "left i={i} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn same_chirality_derivatives_anticommute() {
        for mask in 0..1usize << 6 {
            let m = ExteriorElement::monomial(index_from_mask(mask), None);
            for i in 0..6u32 {
                for j in 0..6u32 {
                    let rr = &d_right(i, &d_right(j, &m)) + &d_right(j, &d_right(i, &m));
                    assert!(rr.is_zero(), "right i={i} j={j} mask={mask}");
                    let ll = &d_left(i, &d_left(j, &m)) + &d_left(j, &d_left(i, &m));
                    assert!(ll.is_zero(), "left i={i} j={j} mask={mask}");
                }
            }
        }
    }

    #[test]
    fn chirality_sign_relation() {
        // On a degree-d monomial the two derivatives differ by (-1)^(d-1).
        for mask in 1..1usize << 6 {
            let k = index_from_mask(mask);
            let d = k.degree() as u32;
            let m = ExteriorElement::monomial(k, None);
            for i in 0..6u32 {
                assert_eq!(d_right(i, &m), d_left(i, &m).scale(&neg_one_pow(d - 1)));
            }
        }
    }

    prop_compose! {
        fn arb_element()(terms in proptest::collection::vec(
            (0usize..1 << 6, -4i64..=4), 0..5)) -> ExteriorElement {
            let mut out = ExteriorElement::zero(None);
            for (mask, c) in terms {
                out.add_term(index_from_mask(mask), rat(c));
            }
            out
        }
    }

    proptest! {
        #[test]
        fn wedge_is_associative(a in arb_element(), b in arb_element(), c in arb_element()) {
            let left = wedge(&wedge(&a, &b).unwrap(), &c).unwrap();
            let right = wedge(&a, &wedge(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn wedge_distributes_over_addition(a in arb_element(), b in arb_element(), c in arb_element()) {
            let lhs = wedge(&a, &(&b + &c)).unwrap();
            let rhs = &wedge(&a, &b).unwrap() + &wedge(&a, &c).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivatives_are_linear(a in arb_element(), b in arb_element(), i in 0u32..6) {
            prop_assert_eq!(d_right(i, &(&a + &b)), &d_right(i, &a) + &d_right(i, &b));
            prop_assert_eq!(d_left(i, &(&a + &b)), &d_left(i, &a) + &d_left(i, &b));
        }
    }
}
