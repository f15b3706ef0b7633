use std::collections::BTreeMap;

use crate::blades::IndexSet;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};

/// A diagonal bilinear form: `q(i) = B(e_i, e_i)` for each declared index.
///
/// Looking up an undeclared index is an error; there is no default value.
#[derive(Debug, Clone, PartialEq)]
pub struct Signature<S> {
    diag: BTreeMap<u32, S>,
}

impl<S: Scalar> Signature<S> {
    /// Declares indices `1..=n` with the given squares.
    pub fn from_diag(squares: Vec<S>) -> Self {
        Signature {
            diag: (1u32..).zip(squares).collect(),
        }
    }

    /// `p` generators squaring to `+1`, then `q` to `-1`, then `r` to `0`.
    pub fn from_pqr(p: usize, q: usize, r: usize) -> Self {
        let squares = std::iter::repeat_n(S::one(), p)
            .chain(std::iter::repeat_n(-S::one(), q))
            .chain(std::iter::repeat_n(S::zero(), r))
            .collect();
        Self::from_diag(squares)
    }

    pub fn from_map(diag: BTreeMap<u32, S>) -> Result<Self> {
        if diag.contains_key(&0) {
            return Err(Error::ZeroIndex);
        }
        Ok(Signature { diag })
    }

    pub fn kind(&self) -> ScalarKind {
        S::KIND
    }

    pub fn q(&self, index: u32) -> Result<&S> {
        self.diag.get(&index).ok_or(Error::UndeclaredIndex(index))
    }

    pub fn declares(&self, index: u32) -> bool {
        self.diag.contains_key(&index)
    }

    pub fn check_declared(&self, set: &IndexSet) -> Result<()> {
        match set.iter().find(|i| !self.declares(*i)) {
            Some(i) => Err(Error::UndeclaredIndex(i)),
            None => Ok(()),
        }
    }

    /// Declared indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.diag.keys().copied()
    }

    pub fn squares(&self) -> impl Iterator<Item = (u32, &S)> + '_ {
        self.diag.iter().map(|(i, q)| (*i, q))
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Same index domain with every square set to zero (the Grassmann form).
    pub fn zero_form(&self) -> Self {
        Signature {
            diag: self.diag.keys().map(|i| (*i, S::zero())).collect(),
        }
    }

    /// Every blade over the declared indices, in canonical order.
    ///
    /// Panics if more than 30 indices are declared.
    pub fn blades(&self) -> Vec<IndexSet> {
        let idx: Vec<u32> = self.indices().collect();
        assert!(idx.len() <= 30, "too many generators to enumerate blades");
        let mut out: Vec<IndexSet> = (0u32..1 << idx.len())
            .map(|mask| {
                let picked = (0..idx.len())
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| idx[k])
                    .collect();
                IndexSet::new(picked).expect("declared indices are sorted")
            })
            .collect();
        out.sort();
        out
    }
}
