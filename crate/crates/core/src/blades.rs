//! Finite index sets naming basis blades, and the sign and reduction
//! factors of the blade product `e_H e_J = sigma(H, J) e_{H△J}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// A finite subset of the positive integers, stored strictly increasing.
///
/// Sets order by cardinality first and then lexicographically, which is the
/// canonical blade order used for printing and tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(Vec<u32>);

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn singleton(index: u32) -> Result<Self> {
        Self::new(vec![index])
    }

    /// Builds a set from an already sorted, duplicate-free sequence.
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::ZeroIndex);
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotCanonical(indices));
        }
        Ok(IndexSet(indices))
    }

    /// Sorts an ordered product of distinct generators `e_{i1} e_{i2} ...`,
    /// returning the sign of the sorting permutation with the set.
    pub fn from_product(indices: &[u32]) -> Result<(Sign, Self)> {
        if indices.contains(&0) {
            return Err(Error::ZeroIndex);
        }
        let mut sorted = indices.to_vec();
        let mut swaps = 0usize;
        // insertion sort; the swap count gives the permutation parity
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                swaps += 1;
                j -= 1;
            }
        }
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIndex(w[0]));
        }
        Ok((Sign::from_parity(swaps), IndexSet(sorted)))
    }

    /// The set whose bits are set in `mask`, with bit `k` naming index `k + 1`.
    pub fn from_mask(mask: u64) -> Self {
        IndexSet((0..64).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect())
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    /// The grade of the blade, `|K|`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: u32) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        let mut rest = other.0.iter();
        self.0.iter().all(|i| rest.any(|j| j == i))
    }

    pub fn is_disjoint(&self, other: &IndexSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        let (mut a, mut b) = (0, 0);
        let mut out = Vec::new();
        while a < self.0.len() && b < other.0.len() {
            match self.0[a].cmp(&other.0[b]) {
                Ordering::Less => a += 1,
                Ordering::Greater => b += 1,
                Ordering::Equal => {
                    out.push(self.0[a]);
                    a += 1;
                    b += 1;
                }
            }
        }
        IndexSet(out)
    }

    /// `H△J = (H ∪ J) \ (H ∩ J)`.
    pub fn symdiff(&self, other: &IndexSet) -> IndexSet {
        let (mut a, mut b) = (0, 0);
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        while a < self.0.len() && b < other.0.len() {
            match self.0[a].cmp(&other.0[b]) {
                Ordering::Less => {
                    out.push(self.0[a]);
                    a += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[b]);
                    b += 1;
                }
                Ordering::Equal => {
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[a..]);
        out.extend_from_slice(&other.0[b..]);
        IndexSet(out)
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    /// Blade notation: `1` for the empty set, otherwise `e[1,2,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        f.write_str("e[")?;
        for (n, i) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(count: usize) -> Sign {
        if count.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_scalar<S: Scalar>(self) -> S {
        match self {
            Sign::Plus => S::one(),
            Sign::Minus => -S::one(),
        }
    }

    pub fn apply<S: Scalar>(self, value: S) -> S {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

pub fn symdiff(h: &IndexSet, j: &IndexSet) -> IndexSet {
    h.symdiff(j)
}

/// `(-1)^c` with `c` the number of pairs `(i, j) ∈ H × J` with `j < i`.
///
/// Counted by a single merge pass over both sorted sequences.
pub fn alpha(h: &IndexSet, j: &IndexSet) -> Sign {
    let mut below = 0usize;
    let mut inversions = 0usize;
    for &i in &h.0 {
        while below < j.0.len() && j.0[below] < i {
            below += 1;
        }
        inversions += below;
    }
    Sign::from_parity(inversions)
}

/// Product of `q(i)` over `i ∈ H ∩ J`; `1` for disjoint sets.
pub fn beta<S: Scalar>(h: &IndexSet, j: &IndexSet, sig: &Signature<S>) -> Result<S> {
    let mut product = S::one();
    for i in h.intersection(j).iter() {
        product = product * sig.q(i)?.clone();
    }
    Ok(product)
}

/// `alpha(H, J) * beta(H, J)`.
pub fn sigma<S: Scalar>(h: &IndexSet, j: &IndexSet, sig: &Signature<S>) -> Result<S> {
    Ok(alpha(h, j).apply(beta(h, j, sig)?))
}

/// The blade product `e_H e_J = sigma(H, J) e_{H△J}`.
pub fn blade_product<S: Scalar>(
    h: &IndexSet,
    j: &IndexSet,
    sig: &Signature<S>,
) -> Result<(S, IndexSet)> {
    Ok((sigma(h, j, sig)?, h.symdiff(j)))
}
