use std::collections::BTreeSet;
use std::sync::Arc;

use magmoid::kernel::{
    compose, enumerate_functions, function_count, functions, FiniteFunction, FiniteSet,
    KernelError, Pairing,
};
use proptest::prelude::*;

fn set(id: &str, n: usize) -> Arc<FiniteSet> {
    Arc::new(FiniteSet::new(id, (0..n).map(|i| format!("e{i}"))).unwrap())
}

fn table(dom: usize, cod: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..cod, dom)
}

/// Three composable functions `A → B → C → D` with carriers of size 1..=4.
fn chain() -> impl Strategy<Value = (FiniteFunction, FiniteFunction, FiniteFunction)> {
    (1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4).prop_flat_map(|(a, b, c, d)| {
        (table(a, b), table(b, c), table(c, d)).prop_map(move |(f, g, h)| {
            let (sa, sb, sc, sd) = (set("A", a), set("B", b), set("C", c), set("D", d));
            (
                FiniteFunction::from_indices(sa, sb.clone(), f).unwrap(),
                FiniteFunction::from_indices(sb, sc.clone(), g).unwrap(),
                FiniteFunction::from_indices(sc, sd, h).unwrap(),
            )
        })
    })
}

fn factorial_ratio(n: u64, k: u64) -> u64 {
    (n - k + 1..=n).product()
}

/// Surjections from an `m`-set onto an `n`-set, by inclusion-exclusion.
fn surjections(m: u32, n: u64) -> i64 {
    let binom = |n: u64, k: u64| -> i64 {
        (factorial_ratio(n, k) / (1..=k).product::<u64>().max(1)) as i64
    };
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * binom(n, k) * ((n - k) as i64).pow(m)
        })
        .sum()
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in chain()) {
        let left = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let right = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left.table(), right.table());
        for i in 0..f.dom().len() {
            prop_assert_eq!(left.apply(i), h.apply(g.apply(f.apply(i))));
        }
    }

    #[test]
    fn identities_are_units((f, _, _) in chain()) {
        let before = FiniteFunction::identity(f.dom().clone());
        let after = FiniteFunction::identity(f.cod().clone());
        prop_assert_eq!(compose(&f, &before).unwrap(), f.clone());
        prop_assert_eq!(compose(&after, &f).unwrap(), f);
    }

    #[test]
    fn pairing_positions_round_trip(a in 0usize..5, b in 0usize..5) {
        let (l, r) = (set("L", a), set("R", b));
        let p = Pairing::new("LR", &l, &r, |_, _| true);
        prop_assert_eq!(p.set().len(), a * b);
        let mut seen = BTreeSet::new();
        for i in 0..a {
            for j in 0..b {
                let pos = p.index(i, j).unwrap();
                prop_assert_eq!(p.components(pos), (i, j));
                prop_assert_eq!(p.set().element(pos), format!("({},{})", l.element(i), r.element(j)));
                seen.insert(pos);
            }
        }
        prop_assert_eq!(seen.len(), a * b);
    }
}

#[test]
fn enumeration_is_complete_distinct_and_ordered() {
    for m in 0..=4 {
        for n in 0..=3 {
            let (dom, cod) = (set("M", m), set("N", n));
            let all: Vec<FiniteFunction> = functions(dom.clone(), cod.clone()).collect();
            let expected = (n as u64).pow(m as u32);
            assert_eq!(all.len() as u64, expected, "{n}^{m}");
            assert_eq!(function_count(&dom, &cod), Some(expected));
            assert!(all.windows(2).all(|w| w[0].table() < w[1].table()));
            let injective = all.iter().filter(|f| f.is_injective()).count() as u64;
            let want = if m > n {
                0
            } else {
                factorial_ratio(n as u64, m as u64)
            };
            assert_eq!(injective, want, "injections {m} → {n}");
            let onto = all.iter().filter(|f| f.is_surjective()).count() as i64;
            assert_eq!(
                onto,
                surjections(m as u32, n as u64),
                "surjections {m} → {n}"
            );
        }
    }
}

#[test]
fn enumeration_respects_the_cap() {
    let (dom, cod) = (set("M", 4), set("N", 3));
    assert_eq!(enumerate_functions(&dom, &cod, 81).unwrap().len(), 81);
    assert!(matches!(
        enumerate_functions(&dom, &cod, 80),
        Err(KernelError::SizeLimitExceeded { cap: 80, .. })
    ));
}

#[test]
fn malformed_functions_are_rejected() {
    let (a, b) = (set("A", 2), set("B", 2));
    assert!(matches!(
        FiniteFunction::from_indices(a.clone(), b.clone(), vec![0]),
        Err(KernelError::MissingAssignment { .. })
    ));
    assert!(matches!(
        FiniteFunction::from_indices(a.clone(), b.clone(), vec![0, 2]),
        Err(KernelError::ForeignElement { .. })
    ));
    let f = FiniteFunction::from_indices(a, b, vec![0, 1]).unwrap();
    assert!(matches!(
        compose(&f, &f),
        Err(KernelError::CompositionMismatch { .. })
    ));
    assert!(matches!(
        FiniteSet::new("D", ["x", "x"]),
        Err(KernelError::DuplicateElement { .. })
    ));
}
