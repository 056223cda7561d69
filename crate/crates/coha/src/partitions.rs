//! Partitions, wedge indices, and the dictionary between them.
//!
//! A wedge monomial `phi_{k_1} ^ ... ^ phi_{k_d}` with `k_1 < ... < k_d`
//! corresponds to the partition whose i-th smallest part is `k_i - i + 1`.
//! Conjugation and the box-complement transpose of an index sequence are the
//! combinatorial backbone of the duality between a Grassmannian and its
//! complementary Grassmannian.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition has {len} parts but only {slots} slots are available")]
    TooManyParts { len: usize, slots: usize },
    #[error("index entry {entry} out of range for ambient rank {n}")]
    EntryOutOfRange { entry: u32, n: usize },
}

/// Integer partition: weakly decreasing positive parts. Zero parts are
/// dropped on construction, so the empty partition is `Partition::empty()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds from weakly decreasing parts. Panics if the order is violated.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The i-th largest part (0-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition: rows and columns of the diagram exchanged.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Whether the diagram fits in the rectangle described by `bx`.
    pub fn fits_box(&self, bx: BoxShape) -> bool {
        self.len() <= bx.rows() && self.part(0) as usize <= bx.cols()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Rectangle of `d` rows and `n - d` columns: the shape bounding Schur
/// classes on the Grassmannian of `d`-planes in `n`-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxShape {
    d: usize,
    n: usize,
}

impl BoxShape {
    /// Panics unless `d <= n`.
    pub fn new(d: usize, n: usize) -> Self {
        assert!(d <= n, "box needs d <= n, got d={d}, n={n}");
        BoxShape { d, n }
    }

    pub fn rows(&self) -> usize {
        self.d
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.n - self.d
    }
}

impl fmt::Display for BoxShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} box (ambient {})", self.d, self.cols(), self.n)
    }
}

/// Strictly increasing sequence of generator indices; names a wedge monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WedgeIndex {
    indices: Vec<u32>,
}

impl WedgeIndex {
    /// Builds from strictly increasing indices. Panics if the order is violated.
    pub fn new(indices: impl IntoIterator<Item = u32>) -> Self {
        let indices: Vec<u32> = indices.into_iter().collect();
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "wedge index must be strictly increasing: {indices:?}"
        );
        WedgeIndex { indices }
    }

    pub fn empty() -> Self {
        WedgeIndex { indices: Vec::new() }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Number of wedge factors.
    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    /// Adds `shift` to every entry.
    pub fn shifted(&self, shift: u32) -> WedgeIndex {
        WedgeIndex {
            indices: self.indices.iter().map(|&k| k + shift).collect(),
        }
    }
}

impl fmt::Display for WedgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// Partition attached to a wedge index: i-th smallest part is `k_i - i + 1`.
pub fn index_to_partition(k: &WedgeIndex) -> Partition {
    let mut parts: Vec<u32> = k
        .indices()
        .iter()
        .enumerate()
        .map(|(i, &ki)| ki - i as u32)
        .collect();
    parts.reverse();
    Partition::new(parts)
}

/// Inverse dictionary at degree `d`: pads with zero parts, then sets
/// `k_i = part_i + i - 1` over the parts in increasing order.
pub fn partition_to_index(lam: &Partition, d: usize) -> Result<WedgeIndex, PartitionError> {
    if lam.len() > d {
        return Err(PartitionError::TooManyParts {
            len: lam.len(),
            slots: d,
        });
    }
    let pad = d - lam.len();
    let asc = (0..pad)
        .map(|_| 0)
        .chain(lam.parts().iter().rev().copied());
    let indices = asc.enumerate().map(|(i, p)| p + i as u32);
    Ok(WedgeIndex::new(indices))
}

/// Box-complement transpose: conjugate the attached partition and read it as
/// an index sequence at the complementary degree `n - d`. The entry sets
/// `{k_i}` and `{n-1-k'_j}` always partition `{0, ..., n-1}`.
pub fn transpose_index(k: &WedgeIndex, n: usize) -> Result<WedgeIndex, PartitionError> {
    if let Some(max) = k.max_entry() {
        if max as usize >= n {
            return Err(PartitionError::EntryOutOfRange { entry: max, n });
        }
    }
    if k.degree() > n {
        return Err(PartitionError::TooManyParts {
            len: k.degree(),
            slots: n,
        });
    }
    let lam = index_to_partition(k);
    partition_to_index(&lam.transpose(), n - k.degree())
}

/// All partitions fitting the box, in lexicographic order. The count is the
/// binomial coefficient (rows + cols choose rows).
pub fn partitions_in_box(bx: BoxShape) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        out.push(Partition::new(prefix.iter().copied().filter(|&p| p > 0)));
        if prefix.len() < bx.rows() {
            let cap = prefix.last().copied().unwrap_or(bx.cols() as u32);
            // Deeper rows are pushed largest-first so the pop order stays lex.
            for next in 1..=cap {
                let mut ext = prefix.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
    }
    out.sort();
    out
}
