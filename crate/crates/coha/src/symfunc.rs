//! Exact multivariate polynomial calculus: elementary, complete and Schur
//! polynomials on variable subsets, Schur-basis expansion, and normal forms
//! in the coinvariant ring.
//!
//! The coinvariant ring of rank n is the polynomial ring modulo the ideal of
//! the elementary symmetric polynomials `e_1, ..., e_n`. Rewriting uses the
//! generators `h_{n-i+1}(x_1, ..., x_i)` for `i = 1..n`; under the lex order
//! with `x_n > ... > x_1` the i-th generator leads with `x_i^{n-i+1}`, so
//! normal forms are spanned by monomials with `deg_{x_i} <= n - i`. That
//! basis has n! elements, matching the dimension of the ring.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{BoxShape, Partition};
use crate::rational::{format_rational, neg_one_pow, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymfuncError {
    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,
    #[error("evaluation points must be pairwise distinct")]
    RepeatedPoint,
    #[error("polynomial has {nvars} variables but the coinvariant ring has rank {n}")]
    TooManyVariables { nvars: usize, n: usize },
    #[error("leading exponent {exps:?} is not weakly decreasing")]
    NonPartitionLeading { exps: Vec<u32> },
    #[error("partition {lam} does not fit the {rows}x{cols} box")]
    OutsideBox {
        lam: Partition,
        rows: usize,
        cols: usize,
    },
}

/// Sparse polynomial in a fixed number of variables, exact rational
/// coefficients. Keys are exponent vectors of length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut out = MultiPoly::zero(nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    /// The variable `x_{v+1}` (0-based index v).
    pub fn var(nvars: usize, v: usize) -> Self {
        assert!(v < nvars);
        let mut exps = vec![0; nvars];
        exps[v] = 1;
        let mut out = MultiPoly::zero(nvars);
        out.add_term(exps, Rational::one());
        out
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        let mut out = MultiPoly::zero(nvars);
        out.add_term(exps, c);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        let cancelled = {
            let entry = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if cancelled {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent vector in lex order with `x_1` most significant.
    pub fn lex_leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn eval(&self, points: &[Rational]) -> Rational {
        assert_eq!(points.len(), self.nvars);
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in exps.iter().enumerate() {
                term *= pow_rat(&points[v], e);
            }
            acc += term;
        }
        acc
    }

    /// Relabels variables: old variable v becomes `mapping[v]`. Non-injective
    /// mappings merge exponents.
    pub fn map_vars(&self, new_nvars: usize, mapping: &[usize]) -> MultiPoly {
        assert_eq!(mapping.len(), self.nvars);
        assert!(mapping.iter().all(|&t| t < new_nvars));
        let mut out = MultiPoly::zero(new_nvars);
        for (exps, c) in &self.terms {
            let mut new_exps = vec![0; new_nvars];
            for (v, &e) in exps.iter().enumerate() {
                new_exps[mapping[v]] += e;
            }
            out.add_term(new_exps, c.clone());
        }
        out
    }

    pub fn swap_vars(&self, a: usize, b: usize) -> MultiPoly {
        let mut mapping: Vec<usize> = (0..self.nvars).collect();
        mapping.swap(a, b);
        self.map_vars(self.nvars, &mapping)
    }

    /// Invariance under all adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|v| self.swap_vars(v, v + 1) == *self)
    }

    /// Exact division by `x_a - x_b`; `None` when the remainder is nonzero.
    pub fn divide_by_linear(&self, a: usize, b: usize) -> Option<MultiPoly> {
        assert!(a < self.nvars && b < self.nvars && a != b);
        if self.is_zero() {
            return Some(MultiPoly::zero(self.nvars));
        }
        // Collect coefficients by x_a-degree; each coefficient is a
        // polynomial with the x_a slot zeroed.
        let mut by_deg: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let k = exps[a];
            let mut rest = exps.clone();
            rest[a] = 0;
            by_deg
                .entry(k)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        let dmax = *by_deg.keys().last().unwrap();
        let coeff = |k: u32| -> MultiPoly {
            by_deg.get(&k).cloned().unwrap_or_else(|| MultiPoly::zero(self.nvars))
        };
        // Synthetic division in x_a: q_{k-1} = c_k + x_b * q_k, top down.
        let mut quotients: Vec<MultiPoly> = vec![MultiPoly::zero(self.nvars); dmax as usize];
        let mut carry = MultiPoly::zero(self.nvars);
        for k in (1..=dmax).rev() {
            let q = &coeff(k) + &shift_var(&carry, b);
            carry = q.clone();
            quotients[(k - 1) as usize] = q;
        }
        let remainder = &coeff(0) + &shift_var(&carry, b);
        if !remainder.is_zero() {
            return None;
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (k, q) in quotients.iter().enumerate() {
            for (exps, c) in &q.terms {
                let mut e = exps.clone();
                e[a] += k as u32;
                out.add_term(e, c.clone());
            }
        }
        Some(out)
    }
}

/// Multiplies by the single variable `x_v`.
fn shift_var(p: &MultiPoly, v: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars);
    for (exps, c) in &p.terms {
        let mut e = exps.clone();
        e[v] += 1;
        out.add_term(e, c.clone());
    }
    out
}

fn pow_rat(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        use num_traits::Signed;
        let mut first = true;
        // Descending lex so the leading term prints first.
        for (exps, c) in self.terms.iter().rev() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, e)
                    }
                })
                .collect();
            let body = mono.join("*");
            let coeff_abs = format_rational(&c.abs());
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if body.is_empty() {
                write!(f, "{coeff_abs}")?;
            } else if coeff_abs == "1" {
                write!(f, "{body}")?;
            } else {
                write!(f, "{coeff_abs}*{body}")?;
            }
        }
        Ok(())
    }
}

/// Elementary symmetric polynomial `e_r` in the given variable subset,
/// embedded in a ring with `nvars` variables.
pub fn elementary(nvars: usize, r: usize, vars: &[usize]) -> MultiPoly {
    assert!(vars.iter().all(|&v| v < nvars));
    if r == 0 {
        return MultiPoly::one(nvars);
    }
    if r > vars.len() {
        return MultiPoly::zero(nvars);
    }
    let mut out = MultiPoly::zero(nvars);
    for combo in vars.iter().combinations(r) {
        let mut exps = vec![0; nvars];
        for &&v in &combo {
            exps[v] += 1;
        }
        out.add_term(exps, Rational::one());
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_r` in the given variable
/// subset.
pub fn complete(nvars: usize, r: usize, vars: &[usize]) -> MultiPoly {
    assert!(vars.iter().all(|&v| v < nvars));
    if r == 0 {
        return MultiPoly::one(nvars);
    }
    if vars.is_empty() {
        return MultiPoly::zero(nvars);
    }
    let mut out = MultiPoly::zero(nvars);
    for combo in vars.iter().combinations_with_replacement(r) {
        let mut exps = vec![0; nvars];
        for &&v in &combo {
            exps[v] += 1;
        }
        out.add_term(exps, Rational::one());
    }
    out
}

/// Schur polynomial in the given variable subset, by the determinant
/// `det(h_{lam_i - i + j})`. Identically zero when `lam` has more parts than
/// there are variables.
pub fn schur(nvars: usize, lam: &Partition, vars: &[usize]) -> MultiPoly {
    let l = lam.len();
    if l == 0 {
        return MultiPoly::one(nvars);
    }
    if l > vars.len() {
        return MultiPoly::zero(nvars);
    }
    let top = (lam.part(0) as usize) + l;
    let h: Vec<MultiPoly> = (0..=top).map(|r| complete(nvars, r, vars)).collect();
    // Index of the h-polynomial sitting at (row, col); None below the
    // staircase where the subscript goes negative.
    let entry: Vec<Vec<Option<usize>>> = (0..l)
        .map(|row| {
            (0..l)
                .map(|col| {
                    let r = lam.part(row) as i64 - row as i64 + col as i64;
                    (r >= 0).then_some(r as usize)
                })
                .collect()
        })
        .collect();
    // Laplace expansion down the columns, memoized on the set of unused rows.
    fn det_rec(
        rows: u64,
        l: usize,
        nvars: usize,
        entry: &[Vec<Option<usize>>],
        h: &[MultiPoly],
        memo: &mut HashMap<u64, MultiPoly>,
    ) -> MultiPoly {
        if let Some(hit) = memo.get(&rows) {
            return hit.clone();
        }
        let col = l - rows.count_ones() as usize;
        let mut acc = MultiPoly::zero(nvars);
        let mut position = 0u32;
        for row in 0..l {
            if rows >> row & 1 == 0 {
                continue;
            }
            if let Some(r) = entry[row][col] {
                if !h[r].is_zero() {
                    let minor = det_rec(rows & !(1 << row), l, nvars, entry, h, memo);
                    acc = &acc + &(&minor * &h[r]).scale(&neg_one_pow(position));
                }
            }
            position += 1;
        }
        memo.insert(rows, acc.clone());
        acc
    }
    let mut memo: HashMap<u64, MultiPoly> = HashMap::new();
    memo.insert(0, MultiPoly::one(nvars));
    det_rec((1u64 << l) - 1, l, nvars, &entry, &h, &mut memo)
}

/// Determinant of a square rational matrix by Gaussian elimination.
fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let diag = m[col][col].clone();
        det *= diag.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &diag;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Evaluates a Schur polynomial at pairwise distinct points by the ratio of
/// alternants. Serves as an independent oracle for `schur`.
pub fn schur_eval(lam: &Partition, points: &[Rational]) -> Result<Rational, SymfuncError> {
    let m = points.len();
    for i in 0..m {
        for j in i + 1..m {
            if points[i] == points[j] {
                return Err(SymfuncError::RepeatedPoint);
            }
        }
    }
    if lam.len() > m {
        return Ok(Rational::zero());
    }
    if m == 0 {
        return Ok(Rational::one());
    }
    let numer: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| pow_rat(&points[i], lam.part(j) + (m - 1 - j) as u32))
                .collect()
        })
        .collect();
    let mut denom = Rational::one();
    for i in 0..m {
        for j in i + 1..m {
            denom *= &points[i] - &points[j];
        }
    }
    Ok(det_rational(numer) / denom)
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly
/// subtracting the Schur polynomial of the leading exponent.
pub fn schur_expand(p: &MultiPoly) -> Result<BTreeMap<Partition, Rational>, SymfuncError> {
    if !p.is_symmetric() {
        return Err(SymfuncError::NotSymmetric);
    }
    let m = p.nvars();
    let all_vars: Vec<usize> = (0..m).collect();
    let mut work = p.clone();
    let mut out = BTreeMap::new();
    while let Some((exps, c)) = work.lex_leading().map(|(e, c)| (e.clone(), c.clone())) {
        if exps.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymfuncError::NonPartitionLeading { exps });
        }
        let lam = Partition::new(exps.iter().copied().filter(|&e| e > 0));
        work = &work - &schur(m, &lam, &all_vars).scale(&c);
        // Later leading monomials are strictly smaller, so each partition is
        // visited at most once.
        let previous = out.insert(lam, c);
        debug_assert!(previous.is_none());
    }
    Ok(out)
}

/// Element of the coinvariant ring of rank n, stored as its normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinvariantElement {
    n: usize,
    normal_form: MultiPoly,
}

impl CoinvariantElement {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn normal_form(&self) -> &MultiPoly {
        &self.normal_form
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form.is_zero()
    }
}

impl fmt::Display for CoinvariantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.normal_form)
    }
}

/// Normal form modulo the symmetric ideal of rank n. The input may use fewer
/// than n variables; it is embedded by the identity on indices.
pub fn coinvariant_reduce(p: &MultiPoly, n: usize) -> Result<CoinvariantElement, SymfuncError> {
    if p.nvars() > n {
        return Err(SymfuncError::TooManyVariables {
            nvars: p.nvars(),
            n,
        });
    }
    let embedded = if p.nvars() == n {
        p.clone()
    } else {
        let mapping: Vec<usize> = (0..p.nvars()).collect();
        p.map_vars(n, &mapping)
    };
    // Work with reversed exponent keys so the BTreeMap maximum is the lex
    // maximum for x_n > ... > x_1, the order the rewriting basis leads in.
    let rev = |e: &[u32]| -> Vec<u32> { e.iter().rev().copied().collect() };
    let gens: Vec<Vec<(Vec<u32>, Rational)>> = (0..n)
        .map(|v| {
            let vars: Vec<usize> = (0..=v).collect();
            complete(n, n - v, &vars)
                .terms()
                .map(|(e, c)| (rev(e), c.clone()))
                .collect()
        })
        .collect();
    let mut work: BTreeMap<Vec<u32>, Rational> = embedded
        .terms()
        .map(|(e, c)| (rev(e), c.clone()))
        .collect();
    let mut normal = MultiPoly::zero(n);
    while let Some((exps, c)) = work.last_key_value().map(|(e, c)| (e.clone(), c.clone())) {
        // exps[pos] is the power of x_{n - pos}; generator v leads with
        // x_{v+1}^{n-v}, i.e. position n-1-v carrying exponent >= pos+1.
        let reducible = (0..n).find(|&pos| exps[pos] >= pos as u32 + 1);
        match reducible {
            None => {
                work.remove(&exps);
                normal.add_term(exps.iter().rev().copied().collect(), c);
            }
            Some(pos) => {
                let v = n - 1 - pos;
                let mut quotient = exps.clone();
                quotient[pos] -= pos as u32 + 1;
                for (ge, gc) in &gens[v] {
                    let sum: Vec<u32> = quotient.iter().zip(ge).map(|(a, b)| a + b).collect();
                    let cancelled = {
                        let entry = work.entry(sum.clone()).or_insert_with(Rational::zero);
                        *entry -= &c * gc;
                        entry.is_zero()
                    };
                    if cancelled {
                        work.remove(&sum);
                    }
                }
            }
        }
    }
    Ok(CoinvariantElement { n, normal_form: normal })
}

/// In the rank-n coinvariant ring, `h_r` of the first d variables equals
/// `(-1)^r e_r` of the remaining variables.
pub fn verify_he_duality(n: usize, d: usize, r: usize) -> bool {
    assert!(d <= n);
    let head: Vec<usize> = (0..d).collect();
    let tail: Vec<usize> = (d..n).collect();
    let diff = &complete(n, r, &head)
        - &elementary(n, r, &tail).scale(&neg_one_pow(r as u32));
    coinvariant_reduce(&diff, n)
        .expect("difference lives in n variables")
        .is_zero()
}

/// In the rank-n coinvariant ring, the Schur polynomial of `lam` in the
/// first d variables equals `(-1)^|lam|` times the Schur polynomial of the
/// conjugate in the remaining variables. Requires `lam` inside the d x (n-d)
/// box.
pub fn verify_transpose_identity(
    n: usize,
    d: usize,
    lam: &Partition,
) -> Result<bool, SymfuncError> {
    let bx = BoxShape::new(d, n);
    if !lam.fits_box(bx) {
        return Err(SymfuncError::OutsideBox {
            lam: lam.clone(),
            rows: bx.rows(),
            cols: bx.cols(),
        });
    }
    let head: Vec<usize> = (0..d).collect();
    let tail: Vec<usize> = (d..n).collect();
    let diff = &schur(n, lam, &head)
        - &schur(n, &lam.transpose(), &tail).scale(&neg_one_pow(lam.weight()));
    Ok(coinvariant_reduce(&diff, n)
        .expect("difference lives in n variables")
        .is_zero())
}

/// Cohomology class of the Grassmannian of d-planes in n-space in the Schur
/// basis. Every recorded partition fits the d x (n-d) box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurClass {
    shape: BoxShape,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SchurClass {
    pub fn zero(d: usize, n: usize) -> Self {
        SchurClass {
            shape: BoxShape::new(d, n),
            coeffs: BTreeMap::new(),
        }
    }

    /// Checked constructor; rejects partitions outside the box.
    pub fn from_coeffs(
        d: usize,
        n: usize,
        coeffs: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self, SymfuncError> {
        let mut out = SchurClass::zero(d, n);
        for (lam, c) in coeffs {
            if !lam.fits_box(out.shape) {
                return Err(SymfuncError::OutsideBox {
                    lam,
                    rows: out.shape.rows(),
                    cols: out.shape.cols(),
                });
            }
            out.add_coeff(lam, c);
        }
        Ok(out)
    }

    pub fn shape(&self) -> BoxShape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> Rational {
        self.coeffs.get(lam).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * s_lam`. Panics if `lam` falls outside the box; callers
    /// truncate before inserting.
    pub fn add_coeff(&mut self, lam: Partition, c: Rational) {
        assert!(
            lam.fits_box(self.shape),
            "partition {lam} outside {}",
            self.shape
        );
        if c.is_zero() {
            return;
        }
        let cancelled = {
            let entry = self.coeffs.entry(lam.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if cancelled {
            self.coeffs.remove(&lam);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SchurClass {
                shape: self.shape,
                coeffs: BTreeMap::new(),
            };
        }
        SchurClass {
            shape: self.shape,
            coeffs: self.coeffs.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }
}

impl Add for &SchurClass {
    type Output = SchurClass;
    fn add(self, rhs: &SchurClass) -> SchurClass {
        assert_eq!(self.shape, rhs.shape, "shape mismatch");
        let mut out = self.clone();
        for (lam, c) in rhs.coeffs() {
            out.add_coeff(lam.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SchurClass {
    type Output = SchurClass;
    fn sub(self, rhs: &SchurClass) -> SchurClass {
        self + &rhs.scale(&-Rational::one())
    }
}

impl fmt::Display for SchurClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .coeffs
            .iter()
            .map(|(lam, c)| format!("{} * s{}", crate::rational::format_signed(c), lam))
            .collect();
        write!(f, "{}", rendered.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use rand::{Rng, SeedableRng};

    fn pt(xs: &[u32]) -> Partition {
        Partition::new(xs.iter().copied())
    }

    fn vars(r: std::ops::Range<usize>) -> Vec<usize> {
        r.collect()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(3, 0, &vars(0..3)), MultiPoly::one(3));
        assert!(elementary(2, 3, &vars(0..2)).is_zero());
        // e_2(x1,x2,x3) = x1x2 + x1x3 + x2x3
        let e2 = elementary(3, 2, &vars(0..3));
        assert_eq!(e2.num_terms(), 3);
        assert_eq!(e2.eval(&[rat(1), rat(2), rat(3)]), rat(11));
    }

    #[test]
    fn complete_examples() {
        // h_2(x1,x2) = x1^2 + x1x2 + x2^2
        let h2 = complete(2, 2, &vars(0..2));
        let mut expected = MultiPoly::zero(2);
        expected.add_term(vec![2, 0], rat(1));
        expected.add_term(vec![1, 1], rat(1));
        expected.add_term(vec![0, 2], rat(1));
        assert_eq!(h2, expected);
        assert_eq!(complete(2, 0, &[]), MultiPoly::one(2));
        assert!(complete(2, 1, &[]).is_zero());
    }

    #[test]
    fn schur_examples() {
        // s_(2,1)(x1,x2) = x1^2 x2 + x1 x2^2
        let s = schur(2, &pt(&[2, 1]), &vars(0..2));
        let mut expected = MultiPoly::zero(2);
        expected.add_term(vec![2, 1], rat(1));
        expected.add_term(vec![1, 2], rat(1));
        assert_eq!(s, expected);
        assert_eq!(schur(2, &Partition::empty(), &vars(0..2)), MultiPoly::one(2));
        assert!(schur(1, &pt(&[1, 1]), &vars(0..1)).is_zero());
    }

    #[test]
    fn schur_single_row_and_column_specialize() {
        // Single row gives h_r, single column gives e_r.
        for r in 1..=4u32 {
            let row = pt(&[r]);
            let col = pt(&vec![1; r as usize]);
            assert_eq!(schur(4, &row, &vars(0..4)), complete(4, r as usize, &vars(0..4)));
            assert_eq!(schur(4, &col, &vars(0..4)), elementary(4, r as usize, &vars(0..4)));
        }
    }

    #[test]
    fn schur_eval_examples() {
        assert_eq!(
            schur_eval(&pt(&[2, 1]), &[rat(1), rat(2)]).unwrap(),
            rat(6)
        );
        assert_eq!(schur_eval(&Partition::empty(), &[]).unwrap(), rat(1));
        assert_eq!(
            schur_eval(&pt(&[1]), &[rat(2), rat(2)]),
            Err(SymfuncError::RepeatedPoint)
        );
        // More parts than points evaluates the zero polynomial.
        assert_eq!(schur_eval(&pt(&[1, 1]), &[rat(5)]).unwrap(), rat(0));
    }

    #[test]
    fn determinant_matches_alternant_oracle() {
        // Two independent Schur computations agree on every partition in the
        // 3x3 box for one to four variables.
        let points = [ratio(1, 2), rat(-1), rat(3), ratio(7, 2)];
        for m in 1..=4usize {
            let ps = &points[..m];
            for lam in crate::partitions::partitions_in_box(BoxShape::new(3, 6)) {
                let poly = schur(m, &lam, &vars(0..m));
                assert_eq!(
                    poly.eval(ps),
                    schur_eval(&lam, ps).unwrap(),
                    "lam={lam} m={m}"
                );
            }
        }
    }

    #[test]
    fn schur_expand_examples() {
        let e2 = elementary(3, 2, &vars(0..3));
        let exp = schur_expand(&e2).unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp.get(&pt(&[1, 1])), Some(&rat(1)));

        let h2 = complete(3, 2, &vars(0..3));
        let exp = schur_expand(&h2).unwrap();
        assert_eq!(exp.len(), 1);
        assert_eq!(exp.get(&pt(&[2])), Some(&rat(1)));

        let asym = MultiPoly::var(2, 0);
        assert_eq!(schur_expand(&asym), Err(SymfuncError::NotSymmetric));
    }

    #[test]
    fn schur_expand_inverts_schur() {
        for m in 1..=4usize {
            for lam in crate::partitions::partitions_in_box(BoxShape::new(3, 6)) {
                if lam.len() > m {
                    continue;
                }
                let exp = schur_expand(&schur(m, &lam, &vars(0..m))).unwrap();
                assert_eq!(exp.len(), 1, "lam={lam} m={m}");
                assert_eq!(exp.get(&lam), Some(&rat(1)));
            }
        }
    }

    #[test]
    fn reduce_kills_the_ideal_generators() {
        for n in 1..=6usize {
            for k in 1..=n {
                let ek = elementary(n, k, &vars(0..n));
                assert!(
                    coinvariant_reduce(&ek, n).unwrap().is_zero(),
                    "e_{k} should vanish at rank {n}"
                );
            }
        }
    }

    #[test]
    fn reduce_rank_two_examples() {
        // x2 rewrites to -x1; x1^2 rewrites to zero.
        let x2 = MultiPoly::var(2, 1);
        let minus_x1 = MultiPoly::var(2, 0).scale(&rat(-1));
        assert_eq!(coinvariant_reduce(&x2, 2).unwrap().normal_form(), &minus_x1);
        let x1sq = MultiPoly::monomial(2, vec![2, 0], rat(1));
        assert!(coinvariant_reduce(&x1sq, 2).unwrap().is_zero());
    }

    #[test]
    fn reduce_rejects_too_many_variables() {
        let p = MultiPoly::var(3, 2);
        assert_eq!(
            coinvariant_reduce(&p, 2),
            Err(SymfuncError::TooManyVariables { nvars: 3, n: 2 })
        );
    }

    #[test]
    fn normal_form_basis_has_factorial_dimension() {
        // Exponent bounds deg_{x_i} <= n - i give n! irreducible monomials.
        for n in 1..=6usize {
            let mut count = 0usize;
            let mut stack = vec![vec![]];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == n {
                    count += 1;
                    let p = MultiPoly::monomial(n, prefix.clone(), rat(1));
                    let reduced = coinvariant_reduce(&p, n).unwrap();
                    assert_eq!(reduced.normal_form(), &p, "{prefix:?} is a normal form");
                    continue;
                }
                let v = prefix.len();
                for e in 0..=(n - v - 1) as u32 {
                    let mut ext = prefix.clone();
                    ext.push(e);
                    stack.push(ext);
                }
            }
            let factorial: usize = (1..=n).product();
            assert_eq!(count, factorial);
        }
    }

    #[test]
    fn reduce_is_multiplicative_on_seeded_random_polys() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let n = 4usize;
        for _ in 0..40 {
            let mut p = MultiPoly::zero(n);
            let mut q = MultiPoly::zero(n);
            for _ in 0..4 {
                let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..4)).collect();
                p.add_term(exps, rat(rng.gen_range(-3..=3)));
                let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..4)).collect();
                q.add_term(exps, rat(rng.gen_range(-3..=3)));
            }
            let direct = coinvariant_reduce(&(&p * &q), n).unwrap();
            let staged = coinvariant_reduce(
                &(coinvariant_reduce(&p, n).unwrap().normal_form()
                    * coinvariant_reduce(&q, n).unwrap().normal_form()),
                n,
            )
            .unwrap();
            assert_eq!(direct, staged);
        }
    }

    #[test]
    fn he_duality_examples() {
        assert!(verify_he_duality(2, 1, 1));
        assert!(verify_he_duality(3, 3, 1));
        assert!(verify_he_duality(4, 2, 0));
        assert!(verify_he_duality(4, 0, 3));
    }

    #[test]
    fn transpose_identity_examples() {
        assert!(verify_transpose_identity(4, 2, &pt(&[2, 1])).unwrap());
        assert!(verify_transpose_identity(2, 1, &pt(&[1])).unwrap());
        assert_eq!(
            verify_transpose_identity(2, 1, &pt(&[3])),
            Err(SymfuncError::OutsideBox {
                lam: pt(&[3]),
                rows: 1,
                cols: 1
            })
        );
    }

    #[test]
    fn divide_by_linear_exact_and_inexact() {
        // (x1 - x2)(x1 + 2x2) divides back out exactly.
        let factor = &MultiPoly::var(2, 0) - &MultiPoly::var(2, 1);
        let other = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1).scale(&rat(2));
        let product = &factor * &other;
        assert_eq!(product.divide_by_linear(0, 1).unwrap(), other);
        // x1 + x2 is not divisible by x1 - x2.
        let sum = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1);
        assert!(sum.divide_by_linear(0, 1).is_none());
    }

    #[test]
    fn divide_by_linear_randomized_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xd1117);
        for _ in 0..30 {
            let nv = 3usize;
            let mut q = MultiPoly::zero(nv);
            for _ in 0..5 {
                let exps: Vec<u32> = (0..nv).map(|_| rng.gen_range(0..4)).collect();
                q.add_term(exps, rat(rng.gen_range(-4..=4)));
            }
            let a = rng.gen_range(0..nv);
            let b = (a + 1 + rng.gen_range(0..nv - 1)) % nv;
            let factor = &MultiPoly::var(nv, a) - &MultiPoly::var(nv, b);
            let product = &q * &factor;
            assert_eq!(
                product.divide_by_linear(a, b).expect("constructed divisible"),
                q
            );
        }
    }

    #[test]
    fn symmetry_detection() {
        assert!(elementary(3, 2, &vars(0..3)).is_symmetric());
        assert!(!complete(3, 2, &vars(0..2)).is_symmetric());
        assert!(MultiPoly::zero(3).is_symmetric());
    }

    #[test]
    fn display_is_readable() {
        let p = &MultiPoly::monomial(2, vec![2, 1], rat(1))
            + &MultiPoly::constant(2, ratio(-1, 2));
        assert_eq!(p.to_string(), "x1^2*x2 - 1/2");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn schur_class_box_enforcement() {
        let ok = SchurClass::from_coeffs(2, 4, [(pt(&[2, 2]), rat(1))]);
        assert!(ok.is_ok());
        let bad = SchurClass::from_coeffs(2, 4, [(pt(&[3]), rat(1))]);
        assert!(matches!(bad, Err(SymfuncError::OutsideBox { .. })));
    }
}
