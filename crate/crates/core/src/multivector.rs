//! Sparse multivectors: finitely supported maps from index sets to scalars.
//!
//! All five bilinear products share one blade rule, `e_H e_K = sigma(H, K)
//! e_{H△K}`, and differ only in which blade pairs they admit:
//!
//! | product            | admits `(H, K)` when |
//! |--------------------|----------------------|
//! | geometric          | always               |
//! | outer `∧`          | `H ∩ K = ∅`          |
//! | left contraction   | `H ⊆ K`              |
//! | right contraction  | `H ⊇ K`              |
//! | scalar `*`         | `H = K`              |
//!
//! For disjoint sets `beta = 1`, so the outer product is exactly the geometric
//! product of the zero form over the same indices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, BitXor, Mul, Neg, Sub};
use std::sync::Arc;

use crate::blades::{blade_product, IndexSet, Sign};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Product {
    Geometric,
    Outer,
    LeftContraction,
    RightContraction,
    Scalar,
}

impl Product {
    pub const ALL: [Product; 5] = [
        Product::Geometric,
        Product::Outer,
        Product::LeftContraction,
        Product::RightContraction,
        Product::Scalar,
    ];

    /// The selection rule applied to the blade pair `(H, K)`.
    pub fn admits(self, h: &IndexSet, k: &IndexSet) -> bool {
        match self {
            Product::Geometric => true,
            Product::Outer => h.is_disjoint(k),
            Product::LeftContraction => h.is_subset(k),
            Product::RightContraction => k.is_subset(h),
            Product::Scalar => h == k,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Multivector<S: Scalar> {
    sig: Arc<Signature<S>>,
    // invariant: no zero coefficients, every index declared in `sig`
    terms: BTreeMap<IndexSet, S>,
}

impl<S: Scalar> PartialEq for Multivector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_signature(other) && self.terms == other.terms
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: &Arc<Signature<S>>) -> Self {
        Multivector {
            sig: Arc::clone(sig),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: &Arc<Signature<S>>, value: S) -> Self {
        Self::zero(sig).with_term(IndexSet::empty(), value)
    }

    pub fn one(sig: &Arc<Signature<S>>) -> Self {
        Self::scalar(sig, S::one())
    }

    pub fn blade(sig: &Arc<Signature<S>>, set: IndexSet) -> Result<Self> {
        Self::from_terms(sig, [(set, S::one())])
    }

    /// The generator `e_i`.
    pub fn basis_vector(sig: &Arc<Signature<S>>, index: u32) -> Result<Self> {
        Self::blade(sig, IndexSet::singleton(index)?)
    }

    /// `Σ c_k e_{i_k}` where `i_k` is the `k`-th declared index.
    pub fn vector(sig: &Arc<Signature<S>>, coefficients: &[S]) -> Result<Self> {
        if coefficients.len() > sig.dim() {
            return Err(Error::UndeclaredIndex(
                sig.indices().last().unwrap_or(0) + 1,
            ));
        }
        let terms = sig
            .indices()
            .zip(coefficients)
            .map(|(i, c)| (IndexSet::singleton(i).expect("declared index"), c.clone()));
        Self::from_terms(sig, terms)
    }

    /// Sums the given terms; repeated index sets accumulate.
    pub fn from_terms(
        sig: &Arc<Signature<S>>,
        terms: impl IntoIterator<Item = (IndexSet, S)>,
    ) -> Result<Self> {
        let mut acc = BTreeMap::new();
        for (set, value) in terms {
            sig.check_declared(&set)?;
            accumulate(&mut acc, set, value);
        }
        Ok(Self::canonical(sig, acc))
    }

    fn canonical(sig: &Arc<Signature<S>>, mut terms: BTreeMap<IndexSet, S>) -> Self {
        terms.retain(|_, v| !v.is_zero());
        Multivector {
            sig: Arc::clone(sig),
            terms,
        }
    }

    fn with_term(mut self, set: IndexSet, value: S) -> Self {
        if !value.is_zero() {
            self.terms.insert(set, value);
        }
        self
    }

    pub fn signature(&self) -> &Arc<Signature<S>> {
        &self.sig
    }

    /// Moves the same coefficients onto another signature that declares
    /// every index in use.
    pub fn with_signature(&self, sig: &Arc<Signature<S>>) -> Result<Self> {
        Self::from_terms(sig, self.terms.clone())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &S)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, set: &IndexSet) -> S {
        self.terms.get(set).cloned().unwrap_or_else(S::zero)
    }

    pub fn scalar_part(&self) -> S {
        self.coefficient(&IndexSet::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Grades present in the support; empty for the zero multivector.
    pub fn grades(&self) -> BTreeSet<usize> {
        self.terms.keys().map(IndexSet::len).collect()
    }

    /// True when every term has grade `r`. Zero has every grade.
    pub fn is_grade(&self, r: usize) -> bool {
        self.terms.keys().all(|k| k.len() == r)
    }

    pub fn is_vector(&self) -> bool {
        self.is_grade(1)
    }

    fn same_signature(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_signature(other) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    fn map_coefficients(&self, f: impl Fn(&IndexSet, &S) -> S) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), f(k, v))).collect();
        Self::canonical(&self.sig, terms)
    }

    fn filter(&self, keep: impl Fn(&IndexSet) -> bool) -> Self {
        Multivector {
            sig: Arc::clone(&self.sig),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// `a X + b Y`.
    pub fn linear_combine(a: &S, x: &Self, b: &S, y: &Self) -> Result<Self> {
        x.check_same(y)?;
        let mut acc = BTreeMap::new();
        for (k, v) in &x.terms {
            accumulate(&mut acc, k.clone(), a.clone() * v.clone());
        }
        for (k, v) in &y.terms {
            accumulate(&mut acc, k.clone(), b.clone() * v.clone());
        }
        Ok(Self::canonical(&x.sig, acc))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Self::linear_combine(&S::one(), self, &S::one(), other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Self::linear_combine(&S::one(), self, &-S::one(), other)
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map_coefficients(|_, v| factor.clone() * v.clone())
    }

    /// Bilinear extension of the blade rule restricted to pairs admitted by `kind`.
    pub fn product(&self, other: &Self, kind: Product) -> Result<Self> {
        self.check_same(other)?;
        let mut acc = BTreeMap::new();
        for (h, a) in &self.terms {
            for (k, b) in &other.terms {
                if !kind.admits(h, k) {
                    continue;
                }
                let (factor, set) = blade_product(h, k, &self.sig)?;
                if factor.is_zero() {
                    continue;
                }
                accumulate(&mut acc, set, factor * a.clone() * b.clone());
            }
        }
        Ok(Self::canonical(&self.sig, acc))
    }

    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.product(other, Product::Geometric)
    }

    pub fn op(&self, other: &Self) -> Result<Self> {
        self.product(other, Product::Outer)
    }

    pub fn lc(&self, other: &Self) -> Result<Self> {
        self.product(other, Product::LeftContraction)
    }

    pub fn rc(&self, other: &Self) -> Result<Self> {
        self.product(other, Product::RightContraction)
    }

    pub fn sp(&self, other: &Self) -> Result<Self> {
        self.product(other, Product::Scalar)
    }

    /// `B(x, y)` for grade-1 `x` and `y`.
    pub fn bilinear(&self, other: &Self) -> Result<S> {
        for v in [self, other] {
            if !v.is_vector() {
                return Err(Error::NotAVector(v.grades().into_iter().collect()));
            }
        }
        Ok(self.sp(other)?.scalar_part())
    }

    /// `⟨X⟩_r`; zero for negative `r`.
    pub fn grade(&self, r: i64) -> Self {
        match usize::try_from(r) {
            Ok(r) => self.filter(|k| k.len() == r),
            Err(_) => Self::zero(&self.sig),
        }
    }

    /// Keeps terms with `|K| ≡ parity (mod 2)`.
    pub fn parity_part(&self, parity: usize) -> Self {
        self.filter(|k| k.len() % 2 == parity % 2)
    }

    pub fn even(&self) -> Self {
        self.parity_part(0)
    }

    pub fn odd(&self) -> Self {
        self.parity_part(1)
    }

    /// Main automorphism: `e_K ↦ (-1)^{|K|} e_K`.
    pub fn involute(&self) -> Self {
        self.map_coefficients(|k, v| Sign::from_parity(k.len()).apply(v.clone()))
    }

    /// Reversion: `e_K ↦ (-1)^{|K|(|K|-1)/2} e_K`.
    pub fn reverse(&self) -> Self {
        self.map_coefficients(|k, v| reversion_sign(k.len()).apply(v.clone()))
    }

    /// Coefficient-wise comparison with [`Scalar::close_to`]; exact for rationals.
    pub fn approx_eq(&self, other: &Self) -> bool {
        if !self.same_signature(other) {
            return false;
        }
        let keys: BTreeSet<&IndexSet> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .all(|k| self.coefficient(k).close_to(&other.coefficient(k)))
    }
}

pub fn reversion_sign(grade: usize) -> Sign {
    Sign::from_parity(grade * grade.saturating_sub(1) / 2)
}

fn accumulate<S: Scalar>(acc: &mut BTreeMap<IndexSet, S>, set: IndexSet, value: S) {
    if value.is_zero() {
        return;
    }
    match acc.get_mut(&set) {
        Some(slot) => *slot = slot.clone() + value,
        None => {
            acc.insert(set, value);
        }
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    /// Canonical text: terms by grade then index sequence, `e[i,j]` blades,
    /// bare scalars for the unit term, `0` for zero.
    ///
    /// `3 + e[1,2] - 1/2*e[3]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (set, value)) in self.terms.iter().enumerate() {
            let negative = value.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = value.abs();
            if set.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{set}")?;
            } else {
                write!(f, "{magnitude}*{set}")?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on mismatched signatures; the named methods return errors.

macro_rules! binary_operator {
    ($trait:ident, $method:ident, $call:ident) => {
        impl<S: Scalar> $trait for &Multivector<S> {
            type Output = Multivector<S>;

            fn $method(self, rhs: &Multivector<S>) -> Multivector<S> {
                self.$call(rhs).expect("operands over different signatures")
            }
        }

        impl<S: Scalar> $trait for Multivector<S> {
            type Output = Multivector<S>;

            fn $method(self, rhs: Multivector<S>) -> Multivector<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

binary_operator!(Add, add, try_add);
binary_operator!(Sub, sub, try_sub);
binary_operator!(Mul, mul, gp);
binary_operator!(BitXor, bitxor, op);

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        self.map_coefficients(|_, v| -v.clone())
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        -&self
    }
}
