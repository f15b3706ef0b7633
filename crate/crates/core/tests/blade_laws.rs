use blade_core::{alpha, alpha_bruteforce, beta, sigma, IndexSet, Rational, Sign, Signature};
use proptest::prelude::*;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// q in {1, -1, 0, 2} assigned round-robin over indices 1..=5.
fn round_robin() -> Signature<Rational> {
    Signature::from_diag((0..5).map(|i| r([1, -1, 0, 2][i % 4])).collect())
}

fn subsets() -> Vec<IndexSet> {
    (0u64..32).map(IndexSet::from_mask).collect()
}

#[test]
fn cocycle_law_exhaustive_over_five_generators() {
    let sig = round_robin();
    let all = subsets();
    for h in &all {
        for j in &all {
            let hj = h.symdiff(j);
            for k in &all {
                let jk = j.symdiff(k);
                assert_eq!(alpha(h, j) * alpha(&hj, k), alpha(h, &jk) * alpha(j, k));
                assert_eq!(
                    beta(h, j, &sig).unwrap() * beta(&hj, k, &sig).unwrap(),
                    beta(h, &jk, &sig).unwrap() * beta(j, k, &sig).unwrap()
                );
                assert_eq!(
                    sigma(h, j, &sig).unwrap() * sigma(&hj, k, &sig).unwrap(),
                    sigma(h, &jk, &sig).unwrap() * sigma(j, k, &sig).unwrap()
                );
            }
        }
    }
}

#[test]
fn alpha_matches_bruteforce_exhaustively() {
    for h in &subsets() {
        for j in &subsets() {
            assert_eq!(alpha(h, j), alpha_bruteforce(h, j), "{h} {j}");
        }
    }
}

#[test]
fn alpha_swap_identity() {
    // alpha(H,J) alpha(J,H) = (-1)^(|H||J| - |H∩J|)
    for h in &subsets() {
        for j in &subsets() {
            let mut pairs = 0usize;
            for a in h.iter() {
                for b in j.iter() {
                    if a != b {
                        pairs += 1;
                    }
                }
            }
            assert_eq!(pairs, h.len() * j.len() - h.intersection(j).len());
            assert_eq!(alpha(h, j) * alpha(j, h), Sign::from_parity(pairs));
        }
    }
}

fn index_set() -> impl Strategy<Value = IndexSet> {
    any::<u16>().prop_map(|m| IndexSet::from_mask(m as u64))
}

proptest! {
    #[test]
    fn symdiff_is_associative_and_commutative(h in index_set(), j in index_set(), k in index_set()) {
        prop_assert_eq!(h.symdiff(&j).symdiff(&k), h.symdiff(&j.symdiff(&k)));
        prop_assert_eq!(h.symdiff(&j), j.symdiff(&h));
        prop_assert_eq!(h.symdiff(&IndexSet::empty()), h.clone());
        prop_assert!(h.symdiff(&h).is_empty());
    }

    #[test]
    fn alpha_cocycle_on_wider_sets(h in index_set(), j in index_set(), k in index_set()) {
        let hj = h.symdiff(&j);
        let jk = j.symdiff(&k);
        prop_assert_eq!(alpha(&h, &j) * alpha(&hj, &k), alpha(&h, &jk) * alpha(&j, &k));
        prop_assert_eq!(alpha(&h, &j), alpha_bruteforce(&h, &j));
    }
}
