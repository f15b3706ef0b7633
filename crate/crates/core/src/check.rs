//! Randomized invariant suites with reproducible per-trial seeds.
//!
//! Every trial draws its inputs from its own generator seeded by
//! [`trial_seed`], so trials can run in parallel and a failure can be replayed
//! from the printed seed alone.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::blades::{alpha, beta, sigma, IndexSet};
use crate::morphisms::{is_independent, MorphismTable};
use crate::multivector::Multivector;
use crate::oracle::{rank, rewrite_word, rewrite_word_with, Word};
use crate::sample::{self, trial_rng, trial_seed};
use crate::scalar::{Rational, Scalar};
use crate::signature::Signature;

type Mv<S> = Multivector<S>;
type Trial<S> = fn(&mut ChaCha8Rng, &Arc<Signature<S>>) -> Result<(), String>;

/// Terms per random multivector operand.
const MAX_TERMS: usize = 6;

pub struct Suite<S: Scalar> {
    pub name: &'static str,
    pub run: Trial<S>,
    /// Suites that only make sense over exact rationals are skipped for floats.
    pub exact_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub trial: u64,
    pub seed: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: u64,
    pub passed: u64,
    pub skipped: bool,
    /// First failing trial in trial order.
    pub failure: Option<Failure>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.skipped {
            return write!(f, "skip {}: needs exact scalars", self.name);
        }
        match &self.failure {
            None => write!(f, "ok   {}: {}/{} trials", self.name, self.passed, self.trials),
            Some(fail) => write!(
                f,
                "FAIL {}: {}/{} trials; first failure at trial {} (seed {}): {}",
                self.name, self.passed, self.trials, fail.trial, fail.seed, fail.detail
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub outcomes: Vec<SuiteOutcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(SuiteOutcome::ok)
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.ok()).count()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        write!(
            f,
            "{} suites, {} failed",
            self.outcomes.len(),
            self.failures()
        )
    }
}

/// Runs `trials` trials of one suite. `suite_id` separates the seed streams
/// of different suites within one run.
pub fn run_suite<S: Scalar>(
    suite: &Suite<S>,
    sig: &Arc<Signature<S>>,
    trials: u64,
    seed: u64,
    suite_id: u64,
) -> SuiteOutcome {
    if suite.exact_only && !S::is_exact() {
        return SuiteOutcome {
            name: suite.name,
            trials,
            passed: 0,
            skipped: true,
            failure: None,
        };
    }
    let results: Vec<Option<Failure>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = trial_seed(seed, suite_id, trial);
            let mut rng = trial_rng(trial_seed);
            (suite.run)(&mut rng, sig).err().map(|detail| Failure {
                trial,
                seed: trial_seed,
                detail,
            })
        })
        .collect();
    let passed = results.iter().filter(|r| r.is_none()).count() as u64;
    SuiteOutcome {
        name: suite.name,
        trials,
        passed,
        skipped: false,
        failure: results.into_iter().flatten().next(),
    }
}

/// Runs every suite in [`suites`] over `sig`.
pub fn run_checks<S: Scalar>(sig: &Arc<Signature<S>>, trials: u64, seed: u64) -> CheckReport {
    let outcomes = suites::<S>()
        .iter()
        .enumerate()
        .map(|(id, suite)| run_suite(suite, sig, trials, seed, id as u64))
        .collect();
    CheckReport { outcomes }
}

pub fn find_suite<S: Scalar>(name: &str) -> Option<Suite<S>> {
    suites().into_iter().find(|s| s.name == name)
}

pub fn suites<S: Scalar>() -> Vec<Suite<S>> {
    let list: [(&'static str, Trial<S>, bool); 24] = [
        ("cocycle", cocycle::<S>, false),
        ("associativity", associativity::<S>, false),
        ("unit", unit::<S>, false),
        ("vector_square", vector_square::<S>, false),
        ("anticommutation", anticommutation::<S>, false),
        ("blade_factorization", blade_factorization::<S>, false),
        ("outer_is_zero_form_product", outer_is_zero_form_product::<S>, false),
        ("grading", grading::<S>, false),
        ("alternation", alternation::<S>, false),
        ("vector_split", vector_split::<S>, false),
        ("reversion_contraction_duality", contraction_duality::<S>, false),
        ("grade_formulas", grade_formulas::<S>, false),
        ("contraction_composition", contraction_composition::<S>, false),
        ("leibniz_geometric", leibniz_geometric::<S>, false),
        ("leibniz_outer", leibniz_outer::<S>, false),
        ("expansion_geometric", expansion_geometric::<S>, false),
        ("expansion_outer", expansion_outer::<S>, false),
        ("orthogonal_products", orthogonal_products::<S>, false),
        ("involutions", involutions::<S>, false),
        ("involution_by_universality", involution_by_universality::<S>, false),
        ("rewrite_oracle", rewrite_oracle::<S>, false),
        ("rewrite_confluence", rewrite_confluence::<S>, false),
        ("independence_vs_rank", independence_vs_rank::<S>, true),
        ("basis_change_morphism", basis_change_morphism::<S>, true),
    ];
    list.into_iter()
        .map(|(name, run, exact_only)| Suite {
            name,
            run,
            exact_only,
        })
        .collect()
}

fn same<S: Scalar>(label: &str, lhs: &Mv<S>, rhs: &Mv<S>) -> Result<(), String> {
    if lhs.approx_eq(rhs) {
        Ok(())
    } else {
        Err(format!("{label}: {lhs} != {rhs}"))
    }
}

fn ok<T>(r: crate::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn gp<S: Scalar>(a: &Mv<S>, b: &Mv<S>) -> Result<Mv<S>, String> {
    ok(a.gp(b))
}

fn op<S: Scalar>(a: &Mv<S>, b: &Mv<S>) -> Result<Mv<S>, String> {
    ok(a.op(b))
}

fn lc<S: Scalar>(a: &Mv<S>, b: &Mv<S>) -> Result<Mv<S>, String> {
    ok(a.lc(b))
}

fn add<S: Scalar>(a: &Mv<S>, b: &Mv<S>) -> Result<Mv<S>, String> {
    ok(a.try_add(b))
}

fn mv<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Mv<S> {
    sample::multivector(rng, sig, MAX_TERMS)
}

fn grade_upto<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> (usize, Mv<S>) {
    let r = rng.random_range(0..=sig.dim());
    (r, sample::homogeneous(rng, sig, r, 4))
}

fn blade_mv<S: Scalar>(sig: &Arc<Signature<S>>, set: &IndexSet) -> Result<Mv<S>, String> {
    ok(Multivector::blade(sig, set.clone()))
}

fn product_of<S: Scalar>(
    sig: &Arc<Signature<S>>,
    factors: &[Mv<S>],
    outer: bool,
) -> Result<Mv<S>, String> {
    let mut acc = Multivector::one(sig);
    for f in factors {
        acc = if outer { op(&acc, f)? } else { gp(&acc, f)? };
    }
    Ok(acc)
}

fn cocycle<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let (h, j, k) = (
        sample::blade(rng, sig),
        sample::blade(rng, sig),
        sample::blade(rng, sig),
    );
    let hj = h.symdiff(&j);
    let jk = j.symdiff(&k);
    if alpha(&h, &j) * alpha(&hj, &k) != alpha(&h, &jk) * alpha(&j, &k) {
        return Err(format!("alpha cocycle fails for {h} {j} {k}"));
    }
    type Psi<S> = fn(&IndexSet, &IndexSet, &Signature<S>) -> crate::Result<S>;
    for (name, psi) in [("beta", beta::<S> as Psi<S>), ("sigma", sigma::<S> as Psi<S>)] {
        let lhs = ok(psi(&h, &j, sig))? * ok(psi(&hj, &k, sig))?;
        let rhs = ok(psi(&h, &jk, sig))? * ok(psi(&j, &k, sig))?;
        if !lhs.close_to(&rhs) {
            return Err(format!("{name} cocycle fails for {h} {j} {k}: {lhs} != {rhs}"));
        }
    }
    Ok(())
}

fn associativity<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let (x, y, z) = (mv(rng, sig), mv(rng, sig), mv(rng, sig));
    same("(XY)Z = X(YZ)", &gp(&gp(&x, &y)?, &z)?, &gp(&x, &gp(&y, &z)?)?)?;
    same("(X^Y)^Z = X^(Y^Z)", &op(&op(&x, &y)?, &z)?, &op(&x, &op(&y, &z)?)?)
}

fn unit<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let x = mv(rng, sig);
    let one = Multivector::one(sig);
    same("1X = X", &gp(&one, &x)?, &x)?;
    same("X1 = X", &gp(&x, &one)?, &x)
}

fn vector_square<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let x = sample::vector(rng, sig);
    let mut b = S::zero();
    for (set, c) in x.terms() {
        let i = set.indices()[0];
        b = b + c.clone() * c.clone() * ok(sig.q(i))?.clone();
    }
    same("x^2 = B(x,x)", &gp(&x, &x)?, &Multivector::scalar(sig, b))
}

fn anticommutation<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let idx: Vec<u32> = sig.indices().collect();
    if idx.len() < 2 {
        return Ok(());
    }
    let picked: Vec<u32> = idx.choose_multiple(rng, 2).copied().collect();
    let ei = ok(Multivector::basis_vector(sig, picked[0]))?;
    let ej = ok(Multivector::basis_vector(sig, picked[1]))?;
    same("e_i e_j = -e_j e_i", &gp(&ei, &ej)?, &-gp(&ej, &ei)?)
}

fn blade_factorization<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let k = sample::blade(rng, sig);
    let factors = k
        .iter()
        .map(|i| ok(Multivector::basis_vector(sig, i)))
        .collect::<Result<Vec<_>, _>>()?;
    same("e_K = prod e_i", &blade_mv(sig, &k)?, &product_of(sig, &factors, false)?)
}

fn outer_is_zero_form_product<S: Scalar>(
    rng: &mut ChaCha8Rng,
    sig: &Arc<Signature<S>>,
) -> Result<(), String> {
    let (x, y) = (mv(rng, sig), mv(rng, sig));
    let zero = Arc::new(sig.zero_form());
    let grassmann = gp(&ok(x.with_signature(&zero))?, &ok(y.with_signature(&zero))?)?;
    same("X^Y = XY over B=0", &op(&x, &y)?, &ok(grassmann.with_signature(sig))?)
}

fn grading<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let (r, x) = grade_upto(rng, sig);
    let (s, y) = grade_upto(rng, sig);
    let w = op(&x, &y)?;
    if !w.is_grade(r + s) {
        return Err(format!("grade {r} ^ grade {s} gave grades {:?}", w.grades()));
    }
    let (a, b) = (rng.random_range(0..2usize), rng.random_range(0..2usize));
    let p = gp(&mv(rng, sig).parity_part(a), &mv(rng, sig).parity_part(b))?;
    if p.grades().iter().any(|g| g % 2 != (a + b) % 2) {
        return Err(format!("parity {a} * parity {b} gave grades {:?}", p.grades()));
    }
    Ok(())
}

fn alternation<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let p = rng.random_range(2..=4usize);
    let mut xs: Vec<Mv<S>> = (0..p).map(|_| sample::vector(rng, sig)).collect();
    let w = product_of(sig, &xs, true)?;
    let k = rng.random_range(0..p - 1);
    xs.swap(k, k + 1);
    same("adjacent swap negates wedge", &product_of(sig, &xs, true)?, &-w)?;
    let (a, b) = (rng.random_range(0..p), rng.random_range(0..p));
    if a != b {
        xs[b] = xs[a].clone();
        let w = product_of(sig, &xs, true)?;
        if !w.approx_eq(&Multivector::zero(sig)) {
            return Err(format!("wedge with repeated factor is {w}"));
        }
    }
    Ok(())
}

fn vector_split<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let (x, big) = (sample::vector(rng, sig), mv(rng, sig));
    same("xX = x^X + x<|X", &gp(&x, &big)?, &add(&op(&x, &big)?, &lc(&x, &big)?)?)
}

fn contraction_duality<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let (x, y) = (mv(rng, sig), mv(rng, sig));
    same(
        "(X|>Y)~ = Y~ <| X~",
        &ok(x.rc(&y))?.reverse(),
        &lc(&y.reverse(), &x.reverse())?,
    )?;
    same("X.Y = <XY>_0", &ok(x.sp(&y))?, &gp(&x, &y)?.grade(0))?;
    let (r, xr) = grade_upto(rng, sig);
    let (s, ys) = grade_upto(rng, sig);
    same(
        "X_r ^ Y_s = <XY>_{r+s}",
        &op(&xr, &ys)?,
        &gp(&xr, &ys)?.grade((r + s) as i64),
    )
}

fn grade_formulas<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let (r, x) = grade_upto(rng, sig);
    let (s, y) = grade_upto(rng, sig);
    let (r, s) = (r as i64, s as i64);
    let xy = gp(&x, &y)?;
    same("X<|Y = <XY>_{s-r}", &lc(&x, &y)?, &xy.grade(s - r))?;
    same("X|>Y = <XY>_{r-s}", &ok(x.rc(&y))?, &xy.grade(r - s))?;
    let mut sum = Multivector::zero(sig);
    let mut i = (r - s).abs();
    while i <= r + s {
        sum = add(&sum, &xy.grade(i))?;
        i += 2;
    }
    same("XY = sum of <XY>_i, i = |r-s|..r+s step 2", &xy, &sum)
}

fn contraction_composition<S: Scalar>(
    rng: &mut ChaCha8Rng,
    sig: &Arc<Signature<S>>,
) -> Result<(), String> {
    let (x, y, z) = (mv(rng, sig), mv(rng, sig), mv(rng, sig));
    same("(X^Y)<|Z = X<|(Y<|Z)", &lc(&op(&x, &y)?, &z)?, &lc(&x, &lc(&y, &z)?)?)
}

fn leibniz<S: Scalar>(
    rng: &mut ChaCha8Rng,
    sig: &Arc<Signature<S>>,
    outer: bool,
) -> Result<(), String> {
    let (x, y) = (sample::vector(rng, sig), sample::vector(rng, sig));
    let b = ok(x.bilinear(&y))?;
    same("x<|y = B(x,y)", &lc(&x, &y)?, &Multivector::scalar(sig, b))?;
    let (a, c) = (mv(rng, sig), mv(rng, sig));
    let prod = |p: &Mv<S>, q: &Mv<S>| if outer { op(p, q) } else { gp(p, q) };
    let lhs = lc(&x, &prod(&a, &c)?)?;
    let rhs = add(&prod(&lc(&x, &a)?, &c)?, &prod(&a.involute(), &lc(&x, &c)?)?)?;
    same("x<|(XY) = (x<|X)Y + gi(X)(x<|Y)", &lhs, &rhs)
}

fn leibniz_geometric<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    leibniz(rng, sig, false)
}

fn leibniz_outer<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    leibniz(rng, sig, true)
}

fn expansion<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>, outer: bool) -> Result<(), String> {
    let p = rng.random_range(1..=5usize);
    let x = sample::vector(rng, sig);
    let xs: Vec<Mv<S>> = (0..p).map(|_| sample::vector(rng, sig)).collect();
    let lhs = lc(&x, &product_of(sig, &xs, outer)?)?;
    let mut rhs = Multivector::zero(sig);
    for k in 0..p {
        let mut factors = xs.clone();
        factors[k] = lc(&x, &xs[k])?;
        let mut term = product_of(sig, &factors, outer)?;
        if k % 2 == 1 {
            term = -term;
        }
        rhs = add(&rhs, &term)?;
    }
    same("x<|(x1..xp) = alternating sum", &lhs, &rhs)
}

fn expansion_geometric<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    expansion(rng, sig, false)
}

fn expansion_outer<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    expansion(rng, sig, true)
}

fn orthogonal_products<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let xs = sample::orthogonal_vectors(rng, sig, 5);
    same(
        "orthogonal: prod x_i = wedge x_i",
        &product_of(sig, &xs, false)?,
        &product_of(sig, &xs, true)?,
    )
}

fn involutions<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let (x, y) = (mv(rng, sig), mv(rng, sig));
    same("X~~ = X", &x.reverse().reverse(), &x)?;
    same("(XY)~ = Y~X~", &gp(&x, &y)?.reverse(), &gp(&y.reverse(), &x.reverse())?)?;
    same("gi(XY) = gi(X)gi(Y)", &gp(&x, &y)?.involute(), &gp(&x.involute(), &y.involute())?)?;
    let k = sample::blade(rng, sig);
    let gens = k
        .iter()
        .map(|i| ok(Multivector::basis_vector(sig, i)))
        .collect::<Result<Vec<_>, _>>()?;
    let reversed: Vec<Mv<S>> = gens.iter().rev().cloned().collect();
    let negated: Vec<Mv<S>> = gens.iter().map(|g| -g).collect();
    let e_k = blade_mv(sig, &k)?;
    same("rev(e_K) = e_kn..e_k1", &e_k.reverse(), &product_of(sig, &reversed, false)?)?;
    same("gi(e_K) = prod(-e_i)", &e_k.involute(), &product_of(sig, &negated, false)?)
}

fn involution_by_universality<S: Scalar>(
    rng: &mut ChaCha8Rng,
    sig: &Arc<Signature<S>>,
) -> Result<(), String> {
    let images: BTreeMap<u32, Mv<S>> = sig
        .indices()
        .map(|i| Multivector::basis_vector(sig, i).map(|e| (i, -e)))
        .collect::<crate::Result<_>>()
        .map_err(|e| e.to_string())?;
    let f = ok(MorphismTable::extend(sig, sig, images, true))?;
    let x = mv(rng, sig);
    same("F(X) = gi(X) for f(x) = -x", &ok(f.apply(&x))?, &x.involute())
}

fn letters_product<S: Scalar>(sig: &Arc<Signature<S>>, w: &Word) -> Result<Mv<S>, String> {
    let factors = w
        .0
        .iter()
        .map(|i| ok(Multivector::basis_vector(sig, *i)))
        .collect::<Result<Vec<_>, _>>()?;
    product_of(sig, &factors, false)
}

fn rewrite_oracle<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let w = sample::word(rng, sig, 8);
    same(
        &format!("rewrite {:?}", w.0),
        &ok(rewrite_word(&w, sig))?,
        &letters_product(sig, &w)?,
    )
}

fn rewrite_confluence<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let w = sample::word(rng, sig, 8);
    let mut pick = sample::trial_rng(rng.random());
    let random = ok(rewrite_word_with(&w, sig, |rules| pick.random_range(0..rules.len())))?;
    same(&format!("confluence {:?}", w.0), &random, &ok(rewrite_word(&w, sig))?)
}

fn independence_vs_rank<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    let n = sig.dim();
    let count = rng.random_range(0..=n.min(6) + 1);
    let rows: Vec<Vec<Rational>> = (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let v = if rng.random_bool(0.4) { 0 } else { rng.random_range(-5..=5) };
                    Rational::from_integer(v.into())
                })
                .collect()
        })
        .collect();
    let vectors = rows
        .iter()
        .map(|r| {
            let coeffs: Vec<S> = r.iter().map(S::from_rational).collect();
            ok(Multivector::vector(sig, &coeffs))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let wedge = ok(is_independent(&vectors))?;
    let full_rank = rank(&rows) == rows.len();
    if wedge != full_rank {
        return Err(format!("wedge test {wedge} but rank test {full_rank} for {rows:?}"));
    }
    Ok(())
}

fn basis_change_morphism<S: Scalar>(rng: &mut ChaCha8Rng, sig: &Arc<Signature<S>>) -> Result<(), String> {
    if sig.dim() > 6 {
        return Ok(());
    }
    // orthogonal bases are built over rationals and mapped into S
    let exact = Signature::from_map(
        sig.squares()
            .map(|(i, q)| (i, crate::scalar::parse_scalar::<Rational>(&q.to_string())))
            .map(|(i, q)| q.map(|q| (i, q)))
            .collect::<crate::Result<_>>()
            .map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let p = sample::orthogonal_basis(rng, &exact);
    let rows: Vec<Mv<S>> = p
        .rows()
        .iter()
        .map(|r| ok(Multivector::vector(sig, &r.iter().map(S::from_rational).collect::<Vec<_>>())))
        .collect::<Result<_, _>>()?;
    let squares = rows.iter().map(|f| ok(f.bilinear(f))).collect::<Result<Vec<_>, _>>()?;
    let new_sig = Arc::new(Signature::from_diag(squares));
    let images = (1u32..).zip(rows).collect();
    let f = ok(MorphismTable::extend(&new_sig, sig, images, true))?;
    let (x, y) = (mv(rng, &new_sig), mv(rng, &new_sig));
    same(
        "F(XY) = F(X)F(Y)",
        &ok(f.apply(&gp(&x, &y)?))?,
        &gp(&ok(f.apply(&x))?, &ok(f.apply(&y))?)?,
    )
}
