//! Acceptance criteria, one line of output each. Run with
//! `cargo test -p blade-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use blade_core::check::{find_suite, run_suite};
use blade_core::sample::{self, trial_rng};
use blade_core::{
    alpha, beta, change_of_basis_check, evaluate, extend_morphism, is_independent,
    orthogonalize, rank, rewrite_word, rewrite_word_with, sigma, GramMatrix, IndexSet, Matrix,
    Multivector, Rational, Scalar, Signature,
};
use num_traits::Zero;
use rand::Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn blade_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_blade"))
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = blade_bin().args(args).output().expect("spawn blade");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
    )
}

/// Runs named suites over every signature; all trials must pass.
fn suites_pass<S: Scalar>(names: &[&str], sigs: &[Arc<Signature<S>>], trials: u64) -> Verdict {
    let mut total = 0;
    for (si, sig) in sigs.iter().enumerate() {
        for (ni, name) in names.iter().enumerate() {
            let suite = find_suite::<S>(name).ok_or_else(|| format!("no suite {name}"))?;
            let out = run_suite(&suite, sig, trials, 1000 + si as u64, ni as u64);
            if !out.ok() {
                return Err(out.to_string());
            }
            total += out.passed;
        }
    }
    Ok(format!("{total} trials"))
}

fn criterion_1() -> Verdict {
    for (diag, expected) in [("1,1,1", "-e[3]\n"), ("2,3,1", "-6*e[3]\n")] {
        let (code, out) = run_cli(&["eval", "--diag", diag, "e[1,2]*e3*e1*e2"]);
        if code != 0 || out != expected {
            return Err(format!("--diag {diag}: exit {code}, output {out:?}"));
        }
    }
    Ok("-e[3] and -6*e[3]".into())
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let sig = Signature::from_diag((0..5).map(|i| r([1, -1, 0, 2][i % 4])).collect());
    let all: Vec<IndexSet> = (0u64..32).map(IndexSet::from_mask).collect();
    let mut checked = 0;
    for h in &all {
        for j in &all {
            let hj = h.symdiff(j);
            for k in &all {
                let jk = j.symdiff(k);
                let a = alpha(h, j) * alpha(&hj, k) == alpha(h, &jk) * alpha(j, k);
                let b = beta(h, j, &sig).unwrap() * beta(&hj, k, &sig).unwrap()
                    == beta(h, &jk, &sig).unwrap() * beta(j, k, &sig).unwrap();
                let s = sigma(h, j, &sig).unwrap() * sigma(&hj, k, &sig).unwrap()
                    == sigma(h, &jk, &sig).unwrap() * sigma(j, k, &sig).unwrap();
                if !(a && b && s) {
                    return Err(format!("cocycle fails at {h} {j} {k}"));
                }
                checked += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 5.0 {
        return Err(format!("took {secs:.2}s"));
    }
    Ok(format!("{checked} triples x 3 functions in {secs:.2}s"))
}

fn mixed_sig_6() -> Arc<Signature<Rational>> {
    Arc::new(Signature::from_diag(vec![r(1), r(-1), r(0), r(2), q(-1, 2), r(3)]))
}

fn criterion_3() -> Verdict {
    suites_pass(
        &["associativity", "unit", "vector_square", "anticommutation"],
        &[mixed_sig_6()],
        1000,
    )
}

fn low_dim_sigs<S: Scalar>() -> Vec<Arc<Signature<S>>> {
    let diags: [&[(i64, i64)]; 5] = [
        &[(0, 1)],
        &[(1, 1), (0, 1)],
        &[(1, 1), (-1, 1), (0, 1)],
        &[(2, 1), (0, 1), (-1, 1), (1, 1)],
        &[(1, 1), (-1, 1), (0, 1), (2, 1), (-1, 2)],
    ];
    diags
        .iter()
        .map(|d| {
            Arc::new(Signature::from_diag(
                d.iter().map(|(n, m)| S::from_rational(&q(*n, *m))).collect(),
            ))
        })
        .collect()
}

const IDENTITY_SUITES: [&str; 9] = [
    "vector_split",
    "reversion_contraction_duality",
    "grade_formulas",
    "contraction_composition",
    "leibniz_geometric",
    "leibniz_outer",
    "expansion_geometric",
    "expansion_outer",
    "orthogonal_products",
];

fn criterion_4() -> Verdict {
    let exact = suites_pass(&IDENTITY_SUITES, &low_dim_sigs::<Rational>(), 500)?;
    let float = suites_pass(&IDENTITY_SUITES, &low_dim_sigs::<f64>(), 500)?;
    Ok(format!("rational {exact}, f64 {float} (rel 1e-9)"))
}

fn criterion_5() -> Verdict {
    let sig = Arc::new(Signature::from_diag(vec![r(1), r(-1), r(0), r(2), r(1)]));
    let blades: Vec<Multivector<Rational>> = sig
        .blades()
        .into_iter()
        .map(|k| Multivector::blade(&sig, k).unwrap())
        .collect();
    for (k, b) in sig.blades().iter().zip(&blades) {
        let g = k.len();
        let inv = if g % 2 == 0 { b.clone() } else { -b };
        let rev = if (g * g.saturating_sub(1) / 2) % 2 == 0 { b.clone() } else { -b };
        if b.involute() != inv || b.reverse() != rev || b.reverse().reverse() != *b {
            return Err(format!("blade formula fails at {k}"));
        }
    }
    for x in &blades {
        for y in &blades {
            let xy = x * y;
            if xy.reverse() != &y.reverse() * &x.reverse() || xy.involute() != &x.involute() * &y.involute() {
                return Err(format!("anti/automorphism fails at {x}, {y}"));
            }
        }
    }
    let random = suites_pass(&["involutions"], &[sig], 200)?;
    Ok(format!("32 blades, 1024 blade pairs, {random}"))
}

fn criterion_6() -> Verdict {
    let mut rng = trial_rng(6);
    let mut bases = 0;
    for dim in 1..=4usize {
        let sigs: Vec<Signature<Rational>> = vec![
            Signature::from_pqr(dim, 0, 0),
            Signature::from_diag((0..dim).map(|i| [r(1), r(-1), r(0), r(2)][i % 4].clone()).collect()),
            Signature::from_diag((0..dim).map(|i| [r(0), q(1, 2), r(-3), r(0)][i % 4].clone()).collect()),
        ];
        for sig in sigs {
            let sig = Arc::new(sig);
            for _ in 0..50 {
                let p = sample::orthogonal_basis(&mut rng, &sig);
                let report = change_of_basis_check(&sig, &p).map_err(|e| e.to_string())?;
                if !report.passed() || report.pairs_checked != 1 << (2 * dim) {
                    return Err(format!("dim {dim}: {:?}", report.counterexample));
                }
                bases += 1;
            }
        }
    }
    let sig = Arc::new(Signature::from_diag(vec![r(1), r(-1), r(0), r(2), r(1)]));
    let images = sig
        .indices()
        .map(|i| (i, -Multivector::basis_vector(&sig, i).unwrap()))
        .collect();
    let f = extend_morphism(images, &sig, &sig, true).map_err(|e| e.to_string())?;
    for k in sig.blades() {
        let b = Multivector::blade(&sig, k.clone()).unwrap();
        if f.blade_image(&k).unwrap() != b.involute() {
            return Err(format!("universal extension of -x differs at {k}"));
        }
    }
    Ok(format!("{bases} orthogonal bases exhaustive; involution on 32 blades"))
}

fn criterion_7() -> Verdict {
    let sig = Arc::new(Signature::from_diag(vec![r(1), r(-1), r(0), r(2), r(1)]));
    let mut rng = trial_rng(7);
    for _ in 0..1000 {
        let w = sample::word(&mut rng, &sig, 8);
        let direct = w
            .0
            .iter()
            .fold(Multivector::one(&sig), |acc, i| &acc * &Multivector::basis_vector(&sig, *i).unwrap());
        if rewrite_word(&w, &sig).unwrap() != direct {
            return Err(format!("rewrite differs for {:?}", w.0));
        }
    }
    for _ in 0..500 {
        let w = sample::word(&mut rng, &sig, 8);
        let mut pick = trial_rng(rng.random());
        let random = rewrite_word_with(&w, &sig, |rules| pick.random_range(0..rules.len())).unwrap();
        if random != rewrite_word(&w, &sig).unwrap() {
            return Err(format!("strategies disagree for {:?}", w.0));
        }
    }
    Ok("1000 words vs product, 500 confluence trials".into())
}

fn criterion_8() -> Verdict {
    let mut rng = trial_rng(8);
    let (mut independent, mut dependent) = (0, 0);
    for _ in 0..500 {
        let dim = rng.random_range(1..=6usize);
        let sig = Arc::new(Signature::<Rational>::from_pqr(dim, 0, 0));
        let size = rng.random_range(0..=6usize);
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for _ in 0..size {
            if !rows.is_empty() && rng.random_bool(0.15) {
                let copy = rows[rng.random_range(0..rows.len())].iter().map(|v| -v).collect();
                rows.push(copy);
            } else {
                rows.push(
                    (0..dim)
                        .map(|_| if rng.random_bool(0.3) { r(0) } else { sample::small_rational(&mut rng, 5) })
                        .collect(),
                );
            }
        }
        let vectors: Vec<_> = rows.iter().map(|v| Multivector::vector(&sig, v).unwrap()).collect();
        let wedge = is_independent(&vectors).map_err(|e| e.to_string())?;
        if wedge != (rank(&rows) == rows.len()) {
            return Err(format!("disagreement on {rows:?}"));
        }
        if wedge {
            independent += 1;
        } else {
            dependent += 1;
        }
    }
    Ok(format!("{independent} independent, {dependent} dependent sets agree"))
}

fn parse_rows(lines: &[&str]) -> Vec<Vec<Rational>> {
    lines
        .iter()
        .map(|l| l.split_whitespace().map(|t| blade_core::parse_scalar(t).unwrap()).collect())
        .collect()
}

fn criterion_9() -> Verdict {
    let mut rng = trial_rng(9);
    for n in 0..200 {
        let mut g = sample::symmetric_matrix(&mut rng, 6, -3, 3);
        if n % 2 == 1 {
            let rows: Vec<Vec<Rational>> = g
                .rows()
                .iter()
                .enumerate()
                .map(|(i, row)| row.iter().enumerate().map(|(j, v)| if i == j { r(0) } else { v.clone() }).collect())
                .collect();
            g = Matrix::from_rows(rows).unwrap();
        }
        let gram = GramMatrix::new(g).map_err(|e| e.to_string())?;
        let o = orthogonalize(&gram);
        let c = o.p.mul(gram.matrix()).unwrap().mul(&o.p.transpose()).unwrap();
        if !c.is_diagonal() || c.diag() != o.d || o.p.determinant().unwrap().is_zero() {
            return Err(format!("matrix {n} not diagonalized:\n{}", gram.matrix()));
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("hyperbolic.txt");
    std::fs::write(&path, "2\n0 1\n1 0\n").map_err(|e| e.to_string())?;
    let (code, out) = run_cli(&["orth", "--gram", path.to_str().unwrap()]);
    let lines: Vec<&str> = out.lines().collect();
    if code != 0 || lines.len() < 4 || lines[0] != "P:" {
        return Err(format!("orth exit {code}: {out:?}"));
    }
    let p = Matrix::from_rows(parse_rows(&lines[1..3])).unwrap();
    let d = parse_rows(&[lines[3].trim_start_matches("d:")]).remove(0);
    let g = Matrix::from_rows(vec![vec![r(0), r(1)], vec![r(1), r(0)]]).unwrap();
    let c = p.mul(&g).unwrap().mul(&p.transpose()).unwrap();
    if c != Matrix::diagonal(&d) || p.determinant().unwrap().is_zero() || !(&d[0] * &d[1] < r(0)) {
        return Err(format!("orth output is not a congruence: {out:?}"));
    }
    Ok(format!("200 random 6x6 matrices; orth gives d = {} {}", d[0], d[1]))
}

fn criterion_10() -> Verdict {
    let sig = Arc::new(Signature::<Rational>::from_pqr(3, 1, 2));
    let mut rng = trial_rng(10);
    for _ in 0..500 {
        let x = sample::multivector(&mut rng, &sig, 10);
        let text = x.to_string();
        if evaluate(&text, &sig).map_err(|e| format!("{text}: {e}"))? != x {
            return Err(format!("round trip failed for {text}"));
        }
    }
    let args = ["check", "--sig", "3,1,1", "--trials", "1000", "--seed", "42"];
    let (code_a, first) = run_cli(&args);
    let (code_b, second) = run_cli(&args);
    if code_a != 0 || code_b != 0 {
        return Err(format!("check exited {code_a}/{code_b}:\n{first}"));
    }
    if first != second {
        return Err("check reports differ between runs".into());
    }
    Ok(format!("500 round trips; check report identical ({} bytes)", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked example reproduction", criterion_1),
        ("cocycle suite", criterion_2),
        ("algebra axioms", criterion_3),
        ("contraction and grade identities", criterion_4),
        ("involutions", criterion_5),
        ("universality and basis independence", criterion_6),
        ("rewrite oracle equivalence", criterion_7),
        ("independence vs rank", criterion_8),
        ("orthogonalizer", criterion_9),
        ("CLI round trip and determinism", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!(
                "[PASS] criterion {:>2}: {name} ({detail}; {:.1}s)",
                n + 1,
                t.elapsed().as_secs_f64()
            ),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {:>2}: {name}: {detail}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
