//! Algebra morphisms determined by generator images, diagonalization of
//! symmetric bilinear forms, basis-change verification and the wedge test
//! for linear independence.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blades::IndexSet;
use crate::error::{Counterexample, Error, Result};
use crate::linalg::Matrix;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;

/// The algebra morphism `F` extending generator images `e_i ↦ f(e_i)`,
/// with `F(e_∅) = 1` and `F(e_K)` the ordered product of images over `K`.
///
/// Blade images are computed on first use and memoized.
#[derive(Debug)]
pub struct MorphismTable<S: Scalar> {
    source: Arc<Signature<S>>,
    target: Arc<Signature<S>>,
    images: BTreeMap<u32, Multivector<S>>,
    cache: Mutex<HashMap<IndexSet, Multivector<S>>>,
}

impl<S: Scalar> Clone for MorphismTable<S> {
    fn clone(&self) -> Self {
        MorphismTable {
            source: Arc::clone(&self.source),
            target: Arc::clone(&self.target),
            images: self.images.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache poisoned").clone()),
        }
    }
}

impl<S: Scalar> MorphismTable<S> {
    /// Builds the extension of `images`, which must cover every index declared
    /// in `source` and live over `target`.
    ///
    /// With `validate`, checks `f(e_i)^2 = q(i)` and `f(e_i) f(e_j) = -f(e_j) f(e_i)`
    /// for all declared `i ≠ j`. Over a field of characteristic zero this is
    /// equivalent to `f(x)^2 = B(x, x)` for every vector `x`.
    pub fn extend(
        source: &Arc<Signature<S>>,
        target: &Arc<Signature<S>>,
        images: BTreeMap<u32, Multivector<S>>,
        validate: bool,
    ) -> Result<Self> {
        if let Some(&i) = images.keys().find(|i| !source.declares(**i)) {
            return Err(Error::UndeclaredIndex(i));
        }
        if let Some(i) = source.indices().find(|i| !images.contains_key(i)) {
            return Err(Error::MissingImage(i));
        }
        if images.values().any(|m| **m.signature() != **target) {
            return Err(Error::SignatureMismatch);
        }
        if validate {
            validate_generators(source, target, &images)?;
        }
        Ok(MorphismTable {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn source(&self) -> &Arc<Signature<S>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Signature<S>> {
        &self.target
    }

    pub fn images(&self) -> &BTreeMap<u32, Multivector<S>> {
        &self.images
    }

    /// `F(e_K)`.
    pub fn blade_image(&self, set: &IndexSet) -> Result<Multivector<S>> {
        self.source.check_declared(set)?;
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(set) {
            return Ok(hit.clone());
        }
        let mut image = Multivector::one(&self.target);
        for i in set.iter() {
            image = image.gp(&self.images[&i])?;
        }
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(set.clone(), image.clone());
        Ok(image)
    }

    /// Blade images for every source blade, in canonical order.
    pub fn materialize(&self) -> Result<BTreeMap<IndexSet, Multivector<S>>> {
        self.source
            .blades()
            .into_iter()
            .map(|k| self.blade_image(&k).map(|img| (k, img)))
            .collect()
    }

    /// `F(X) = Σ X[K] F(e_K)`.
    pub fn apply(&self, x: &Multivector<S>) -> Result<Multivector<S>> {
        if **x.signature() != *self.source {
            return Err(Error::SignatureMismatch);
        }
        let mut out = Multivector::zero(&self.target);
        for (k, c) in x.terms() {
            out = Multivector::linear_combine(&S::one(), &out, c, &self.blade_image(k)?)?;
        }
        Ok(out)
    }

    /// `then ∘ self`, as the extension of `e_i ↦ then(f(e_i))`.
    pub fn then(&self, then: &MorphismTable<S>) -> Result<MorphismTable<S>> {
        let images = self
            .images
            .iter()
            .map(|(i, img)| then.apply(img).map(|v| (*i, v)))
            .collect::<Result<_>>()?;
        MorphismTable::extend(&self.source, &then.target, images, false)
    }
}

fn validate_generators<S: Scalar>(
    source: &Signature<S>,
    target: &Arc<Signature<S>>,
    images: &BTreeMap<u32, Multivector<S>>,
) -> Result<()> {
    let indices: Vec<u32> = source.indices().collect();
    for (n, &i) in indices.iter().enumerate() {
        let fi = &images[&i];
        let square = fi.gp(fi)?;
        let expected = Multivector::scalar(target, source.q(i)?.clone());
        if !square.approx_eq(&expected) {
            return Err(Error::NotCompatible {
                i,
                j: i,
                lhs: square.to_string(),
                rhs: expected.to_string(),
            });
        }
        for &j in &indices[n + 1..] {
            let fj = &images[&j];
            let lhs = fi.gp(fj)?;
            let rhs = -fj.gp(fi)?;
            if !lhs.approx_eq(&rhs) {
                return Err(Error::NotCompatible {
                    i,
                    j,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    Ok(())
}

pub fn extend_morphism<S: Scalar>(
    images: BTreeMap<u32, Multivector<S>>,
    source: &Arc<Signature<S>>,
    target: &Arc<Signature<S>>,
    validate: bool,
) -> Result<MorphismTable<S>> {
    MorphismTable::extend(source, target, images, validate)
}

pub fn apply_morphism<S: Scalar>(f: &MorphismTable<S>, x: &Multivector<S>) -> Result<Multivector<S>> {
    f.apply(x)
}

/// A symmetric matrix of bilinear form values `G[i][j] = B(b_i, b_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<S: Scalar>(Matrix<S>);

impl<S: Scalar> GramMatrix<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::BadShape {
                expected: matrix.nrows(),
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        match matrix.first_asymmetry() {
            Some((row, col)) => Err(Error::NotSymmetric { row, col }),
            None => Ok(GramMatrix(matrix)),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(Matrix::parse_square(text)?)
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }
}

/// Result of diagonalizing a Gram matrix: `P G Pᵀ = diag(d)`.
///
/// Row `i` of `P` is the `i`-th orthogonal basis vector written in the old basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Orthogonalization<S: Scalar> {
    pub p: Matrix<S>,
    pub d: Vec<S>,
}

impl<S: Scalar> Orthogonalization<S> {
    /// Recomputes `P G Pᵀ` and compares it with `diag(d)`; also requires `det P ≠ 0`.
    pub fn verify(&self, gram: &GramMatrix<S>) -> Result<bool> {
        let congruent = self.p.mul(gram.matrix())?.mul(&self.p.transpose())?;
        let diagonal = Matrix::diagonal(&self.d);
        let same = congruent
            .rows()
            .iter()
            .flatten()
            .zip(diagonal.rows().iter().flatten())
            .all(|(a, b)| a.close_to(b));
        Ok(same && !self.p.determinant()?.is_zero())
    }
}

/// Symmetric Gaussian elimination with diagonal pivoting.
///
/// When the remaining diagonal is all zero but some `G[k][j] ≠ 0`, the basis
/// move `b_k ← b_k + b_j` produces the pivot `2 G[k][j]`. The float path uses
/// exact zero tests and is best effort.
pub fn orthogonalize<S: Scalar>(gram: &GramMatrix<S>) -> Orthogonalization<S> {
    let n = gram.dim();
    let mut a = gram.matrix().rows().to_vec();
    let mut p = Matrix::<S>::identity(n);
    let basis = p.rows_mut();

    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(k, i);
                for row in a.iter_mut() {
                    row.swap(k, i);
                }
                basis.swap(k, i);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                add_multiple(&mut a, basis, k, j, &S::one());
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            let factor = a[i][k].clone() / pivot.clone();
            if !factor.is_zero() {
                add_multiple(&mut a, basis, i, k, &-factor);
            }
        }
    }
    let d = (0..n).map(|i| a[i][i].clone()).collect();
    Orthogonalization { p, d }
}

/// Congruence step `b_target ← b_target + factor · b_source`.
fn add_multiple<S: Scalar>(
    a: &mut [Vec<S>],
    basis: &mut [Vec<S>],
    target: usize,
    source: usize,
    factor: &S,
) {
    let n = a.len();
    for c in 0..n {
        let v = a[source][c].clone();
        a[target][c] = a[target][c].clone() + factor.clone() * v;
    }
    for row in a.iter_mut() {
        let v = row[source].clone();
        row[target] = row[target].clone() + factor.clone() * v;
    }
    for c in 0..basis[source].len() {
        let v = basis[source][c].clone();
        basis[target][c] = basis[target][c].clone() + factor.clone() * v;
    }
}

/// Dimension up to which [`change_of_basis_check`] tests every blade pair.
pub const EXHAUSTIVE_BASIS_DIM: usize = 6;
const SAMPLED_PAIRS: usize = 4096;

#[derive(Debug, Clone)]
pub struct BasisChangeReport<S: Scalar> {
    /// Squares `B(f_i, f_i)` of the new basis, on indices `1..=n`.
    pub signature: Arc<Signature<S>>,
    /// The morphism sending the new generators to the rows of `P`.
    pub morphism: MorphismTable<S>,
    pub pairs_checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl<S: Scalar> BasisChangeReport<S> {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Builds the algebra of the orthogonal basis given by the rows of `p` and
/// checks that mapping it into `sig`'s algebra preserves blade products.
///
/// All blade pairs are checked up to [`EXHAUSTIVE_BASIS_DIM`] generators;
/// beyond that a fixed-seed sample is used.
pub fn change_of_basis_check<S: Scalar>(
    sig: &Arc<Signature<S>>,
    p: &Matrix<S>,
) -> Result<BasisChangeReport<S>> {
    let n = sig.dim();
    if p.nrows() != n || p.ncols() != n {
        return Err(Error::BadShape {
            expected: n,
            rows: p.nrows(),
            cols: p.ncols(),
        });
    }
    if p.determinant()?.close_to(&S::zero()) {
        return Err(Error::Singular);
    }
    let rows: Vec<Multivector<S>> = p
        .rows()
        .iter()
        .map(|row| Multivector::vector(sig, row))
        .collect::<Result<_>>()?;
    for i in 0..n {
        for k in i + 1..n {
            if !rows[i].bilinear(&rows[k])?.close_to(&S::zero()) {
                return Err(Error::NotOrthogonal(i, k));
            }
        }
    }
    let squares = rows
        .iter()
        .map(|f| f.bilinear(f))
        .collect::<Result<Vec<S>>>()?;
    let new_sig = Arc::new(Signature::from_diag(squares));
    let images = (1u32..).zip(rows).collect();
    let morphism = MorphismTable::extend(&new_sig, sig, images, true)?;

    let blades = new_sig.blades();
    let pairs: Vec<(usize, usize)> = if n <= EXHAUSTIVE_BASIS_DIM {
        (0..blades.len())
            .flat_map(|a| (0..blades.len()).map(move |b| (a, b)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        (0..SAMPLED_PAIRS)
            .map(|_| (rng.random_range(0..blades.len()), rng.random_range(0..blades.len())))
            .collect()
    };

    let mut counterexample = None;
    for &(a, b) in &pairs {
        let (h, j) = (&blades[a], &blades[b]);
        let product = Multivector::blade(&new_sig, h.clone())?
            .gp(&Multivector::blade(&new_sig, j.clone())?)?;
        let expected = morphism.apply(&product)?;
        let found = morphism.blade_image(h)?.gp(&morphism.blade_image(j)?)?;
        if !expected.approx_eq(&found) {
            counterexample = Some(Counterexample {
                left: h.clone(),
                right: j.clone(),
                expected: expected.to_string(),
                found: found.to_string(),
            });
            break;
        }
    }
    Ok(BasisChangeReport {
        signature: new_sig,
        morphism,
        pairs_checked: pairs.len(),
        counterexample,
    })
}

/// True iff `x_1 ∧ … ∧ x_p ≠ 0`. Exact scalars only; the empty family is independent.
pub fn is_independent<S: Scalar>(vectors: &[Multivector<S>]) -> Result<bool> {
    if !S::is_exact() {
        return Err(Error::InexactScalar);
    }
    let Some(first) = vectors.first() else {
        return Ok(true);
    };
    let mut wedge = Multivector::one(first.signature());
    for v in vectors {
        if !v.is_vector() {
            return Err(Error::NotAVector(v.grades().into_iter().collect()));
        }
        wedge = wedge.op(v)?;
    }
    Ok(!wedge.is_zero())
}
