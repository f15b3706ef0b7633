//! Brute-force reference implementations, kept independent of the blade
//! product so they can check it.

use std::sync::Arc;

use num_traits::Zero;

use crate::blades::{IndexSet, Sign};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::{Rational, Scalar};
use crate::signature::Signature;

/// Longest word accepted by [`rewrite_word`].
pub const MAX_WORD_LEN: usize = 16;

/// A product of generators `e_{w1} e_{w2} …`, in any order and with repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u32>);

/// A rule applicable to the adjacent letters at `position`, `position + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rewrite {
    /// `e_j e_i → -e_i e_j` for `i < j`.
    Swap(usize),
    /// `e_i e_i → q(i)`.
    Reduce(usize),
}

fn applicable(letters: &[u32]) -> Vec<Rewrite> {
    letters
        .windows(2)
        .enumerate()
        .filter_map(|(p, w)| match w[0].cmp(&w[1]) {
            std::cmp::Ordering::Greater => Some(Rewrite::Swap(p)),
            std::cmp::Ordering::Equal => Some(Rewrite::Reduce(p)),
            std::cmp::Ordering::Less => None,
        })
        .collect()
}

/// Reduces a word to `λ e_K` by always rewriting at the leftmost applicable position.
pub fn rewrite_word<S: Scalar>(word: &Word, sig: &Arc<Signature<S>>) -> Result<Multivector<S>> {
    rewrite_word_with(word, sig, |_| 0)
}

/// Reduces a word, letting `choose` pick which of the currently applicable
/// rewrites (listed left to right) to apply next.
pub fn rewrite_word_with<S: Scalar>(
    word: &Word,
    sig: &Arc<Signature<S>>,
    mut choose: impl FnMut(&[Rewrite]) -> usize,
) -> Result<Multivector<S>> {
    if word.0.len() > MAX_WORD_LEN {
        return Err(Error::WordTooLong(word.0.len()));
    }
    if let Some(&i) = word.0.iter().find(|i| !sig.declares(**i)) {
        return Err(Error::UndeclaredIndex(i));
    }
    let mut letters = word.0.clone();
    let mut coefficient = S::one();
    loop {
        let rules = applicable(&letters);
        if rules.is_empty() {
            break;
        }
        match rules[choose(&rules).min(rules.len() - 1)] {
            Rewrite::Swap(p) => {
                letters.swap(p, p + 1);
                coefficient = -coefficient;
            }
            Rewrite::Reduce(p) => {
                coefficient = coefficient * sig.q(letters[p])?.clone();
                letters.drain(p..p + 2);
            }
        }
    }
    let set = IndexSet::new(letters)?;
    Multivector::from_terms(sig, [(set, coefficient)])
}

/// `(-1)^c` with `c = |{(i, j) ∈ H × J : j < i}|`, by the literal double loop.
pub fn alpha_bruteforce(h: &IndexSet, j: &IndexSet) -> Sign {
    let mut count = 0usize;
    for a in h.iter() {
        for b in j.iter() {
            if b < a {
                count += 1;
            }
        }
    }
    Sign::from_parity(count)
}

/// Row rank by exact Gaussian elimination. Rows may have different lengths;
/// missing entries are zero.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(width, Rational::from_integer(0.into()));
            r
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[rank][col];
            for c in col..width {
                let delta = &factor * &m[rank][c];
                m[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn set(v: &[u32]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rewrite_worked_example() {
        let sig = Arc::new(Signature::from_diag(vec![r(1), r(1), r(1)]));
        let out = rewrite_word(&Word(vec![1, 2, 3, 1, 2]), &sig).unwrap();
        assert_eq!(out.to_string(), "-e[3]");
        let sig = Arc::new(Signature::from_diag(vec![r(2), r(3), r(1)]));
        let out = rewrite_word(&Word(vec![1, 2, 3, 1, 2]), &sig).unwrap();
        assert_eq!(out.to_string(), "-6*e[3]");
    }

    #[test]
    fn rewrite_trivial_words() {
        let sig = Arc::new(Signature::from_diag(vec![r(1), r(-5)]));
        assert_eq!(rewrite_word(&Word(vec![2]), &sig).unwrap().to_string(), "e[2]");
        assert_eq!(rewrite_word(&Word(vec![2, 2]), &sig).unwrap().to_string(), "-5");
        assert_eq!(rewrite_word(&Word(vec![]), &sig).unwrap().to_string(), "1");
    }

    #[test]
    fn rewrite_errors() {
        let sig = Arc::new(Signature::from_diag(vec![r(1)]));
        assert_eq!(rewrite_word(&Word(vec![1, 3]), &sig), Err(Error::UndeclaredIndex(3)));
        assert_eq!(rewrite_word(&Word(vec![1; 17]), &sig), Err(Error::WordTooLong(17)));
        assert!(rewrite_word(&Word(vec![1; 16]), &sig).is_ok());
    }

    #[test]
    fn rewrite_rightmost_strategy_agrees() {
        let sig = Arc::new(Signature::from_diag(vec![r(2), r(-1), r(0), r(3)]));
        let w = Word(vec![4, 2, 1, 4, 2, 1, 2]);
        let left = rewrite_word(&w, &sig).unwrap();
        let right = rewrite_word_with(&w, &sig, |rules| rules.len() - 1).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn alpha_bruteforce_examples() {
        assert_eq!(alpha_bruteforce(&IndexSet::empty(), &set(&[1, 2])), Sign::Plus);
        assert_eq!(alpha_bruteforce(&set(&[2]), &set(&[1])), Sign::Minus);
        assert_eq!(alpha_bruteforce(&set(&[1, 3]), &set(&[2])), Sign::Minus);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![r(1), r(0)], vec![r(0), r(1)]]), 2);
        assert_eq!(rank(&[vec![r(1), r(2)], vec![r(2), r(4)]]), 1);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![r(0), r(0)]]), 0);
    }
}
