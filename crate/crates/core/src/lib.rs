//! Clifford, Grassmann and geometric algebras built directly on finite index
//! sets: the blade `e_K` is named by a finite set `K` of positive integers and
//! `e_H e_J = sigma(H, J) e_{H△J}`, with `sigma` the product of a reordering
//! sign and the squares `q(i)` of the repeated generators.
//!
//! Degenerate forms (`q(i) = 0`) are supported everywhere. Coefficients are
//! exact rationals ([`Rational`]) or `f64`.

pub mod blades;
pub mod check;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod morphisms;
pub mod multivector;
pub mod oracle;
pub mod sample;
pub mod scalar;
pub mod signature;

pub use blades::{alpha, beta, blade_product, sigma, symdiff, IndexSet, Sign};
pub use error::{Error, Result};
pub use expr::{eval, evaluate, parse, ExprNode};
pub use linalg::Matrix;
pub use morphisms::{
    apply_morphism, change_of_basis_check, extend_morphism, is_independent, orthogonalize,
    BasisChangeReport, GramMatrix, MorphismTable, Orthogonalization,
};
pub use multivector::{Multivector, Product};
pub use oracle::{alpha_bruteforce, rank, rewrite_word, rewrite_word_with, Word};
pub use scalar::{parse_scalar, Rational, Scalar, ScalarKind};
pub use signature::Signature;
