use std::rc::Rc;

use magmoid::combinators::{
    basis_of, check_fpc, joinable, normalize, normalize_with, parse, statman, step, Budget, Comb,
    FpcVerdict, JoinVerdict, Logic, Status, Strategy as Order, Term,
};
use proptest::prelude::*;

fn t(s: &str) -> Term {
    parse(s).unwrap()
}

#[test]
fn application_associates_to_the_left() {
    let x = Term::atom("x");
    let expected = Term::Const(Comb::B).apply_all([x, Term::atom("y"), Term::atom("z")]);
    assert_eq!(t("B x y z"), expected);
    assert_eq!(t("((B x) y) z"), expected);
}

#[test]
fn statman_term_has_the_expected_tree() {
    use Comb::*;
    let c = |k| Term::Const(k);
    let ww = Term::app(c(W), c(W));
    let bbb = c(B).apply_all([c(B), c(B)]);
    let expected = c(B).apply_all([ww, c(B).apply_all([c(W), bbb])]);
    assert_eq!(statman(), expected);
    assert_eq!(statman().to_string(), "B (W W) (B W (B B B))");
    assert_eq!(parse(&statman().to_string()).unwrap(), statman());
}

#[test]
fn syntax_errors_carry_positions() {
    let e = parse("(").unwrap_err();
    assert_eq!(e.position, 1);
    assert_eq!(parse("B x )").unwrap_err().position, 4);
    assert_eq!(parse("B X").unwrap_err().position, 2);
    assert!(parse("").is_err());
}

#[test]
fn single_steps_match_golden_traces() {
    let b = step(&t("B x y z")).unwrap();
    assert_eq!(b.to_string(), "B at ε: x (y z)");
    let w = step(&t("W x y")).unwrap();
    assert_eq!(w.to_string(), "W at ε: x y y");
    for (input, golden) in [
        ("S x y z", "S at ε: x z (y z)"),
        ("K x y", "K at ε: x"),
        ("I x", "I at ε: x"),
        ("C x y z", "C at ε: x z y"),
        ("B x y z w", "B at l: x (y z) w"),
        ("x (I y)", "I at r: x y"),
    ] {
        assert_eq!(step(&t(input)).unwrap().to_string(), golden, "{input}");
    }
    assert!(step(&t("x")).is_none());
    assert!(
        step(&t("B x y")).is_none(),
        "under-applied constants are normal"
    );
}

#[test]
fn normalization_traces() {
    let r = normalize(&t("I I I"), 10);
    assert_eq!(r.status, Status::NormalForm);
    assert_eq!(
        r.to_string(),
        "I I I\n  → I at l: I I\n  → I at ε: I\nnormal form after 2 steps"
    );
    assert_eq!(normalize(&t("K x y"), 10).result(), &t("x"));
    let fx = Term::app(statman(), Term::atom("x"));
    assert_eq!(normalize(&fx, 5).status, Status::FuelExhausted);
    assert_eq!(normalize(&t("I x"), 0).status, Status::FuelExhausted);
    assert_eq!(normalize(&t("x"), 0).status, Status::NormalForm);
}

#[test]
fn statman_is_a_fixed_point_combinator() {
    let started = std::time::Instant::now();
    let verdict = check_fpc(&statman(), &Budget::default());
    let FpcVerdict::Verified { atom, join } = &verdict else {
        panic!("{verdict:?}");
    };
    assert_eq!(atom, "x");
    assert!(started.elapsed().as_secs() < 5);
    // Both sides meet at x (v v v) with v = B W (B B B) x.
    let v = "(B W (B B B) x)";
    assert_eq!(join.common, t(&format!("x ({v} {v} {v})")));
    let basis = basis_of(&statman());
    assert_eq!(
        basis.constants.into_iter().collect::<Vec<_>>(),
        [Comb::B, Comb::W]
    );
    assert_eq!(basis.logic, Logic::FlC);
}

#[test]
fn joinability_paths_replay() {
    let fx = Term::app(statman(), Term::atom("x"));
    let xfx = Term::app(Term::atom("x"), fx.clone());
    let JoinVerdict::Joinable(j) = joinable(&fx, &xfx, &Budget::default()) else {
        panic!("not joinable");
    };
    for (start, path) in [(&fx, &j.left), (&xfx, &j.right)] {
        let mut cur = start.clone();
        for s in path {
            let reducts = magmoid::combinators::all_reducts(&cur);
            assert!(reducts.contains(s));
            cur = s.result.clone();
        }
        assert_eq!(cur, j.common);
    }
}

#[test]
fn constant_is_not_verified() {
    assert!(matches!(
        check_fpc(&Term::Const(Comb::K), &Budget::default()),
        FpcVerdict::NotWithinBudget { .. }
    ));
}

#[test]
fn fresh_atom_avoids_the_term() {
    let f = t("B (W W) (B W (B B B)) x");
    match check_fpc(
        &f,
        &Budget {
            fuel: 2,
            ..Budget::default()
        },
    ) {
        FpcVerdict::Verified { atom, .. } | FpcVerdict::NotWithinBudget { atom, .. } => {
            assert_eq!(atom, "x1")
        }
    }
}

/// λ-terms over named variables, for compiling to `S K I`.
#[derive(Clone)]
enum Lam {
    Var(&'static str),
    App(Rc<Lam>, Rc<Lam>),
    Abs(&'static str, Rc<Lam>),
}

/// Compiled form during bracket abstraction: combinator terms that may
/// still contain variables as atoms.
fn compile(l: &Lam) -> Term {
    match l {
        Lam::Var(v) => Term::atom(v),
        Lam::App(f, a) => Term::app(compile(f), compile(a)),
        Lam::Abs(v, body) => abstract_var(v, &compile(body)),
    }
}

/// `[x]x = I`, `[x]M = K M` when `x ∉ M`, `[x](M N) = S ([x]M) ([x]N)`.
fn abstract_var(x: &str, m: &Term) -> Term {
    use Comb::*;
    if !m.atoms().contains(x) {
        return Term::app(Term::Const(K), m.clone());
    }
    match m {
        Term::Atom(a) if a.as_ref() == x => Term::Const(I),
        Term::App(f, a) => Term::Const(S).apply_all([abstract_var(x, f), abstract_var(x, a)]),
        _ => unreachable!("x occurs in m"),
    }
}

#[test]
fn bracket_abstracted_y_is_a_fixed_point_combinator() {
    let app = |f: Lam, a: Lam| Lam::App(Rc::new(f), Rc::new(a));
    let abs = |v, b: Lam| Lam::Abs(v, Rc::new(b));
    let half = abs("x", app(Lam::Var("f"), app(Lam::Var("x"), Lam::Var("x"))));
    let y = abs("f", app(half.clone(), half));
    let y = compile(&y);
    assert!(y.atoms().is_empty());
    let basis = basis_of(&y);
    assert_eq!(basis.logic, Logic::Unclassified);
    assert!(basis.constants.contains(&Comb::S));
    let verdict = check_fpc(&y, &Budget::default());
    assert!(verdict.is_verified(), "{verdict:?}");
}

#[test]
fn basis_labels() {
    for (input, logic) in [
        ("B x", Logic::Ordered),
        ("x", Logic::Ordered),
        ("B C I", Logic::Linear),
        ("W B", Logic::FlC),
        ("B C W I", Logic::Relevance),
        ("S K K", Logic::Unclassified),
    ] {
        assert_eq!(basis_of(&t(input)).logic, logic, "{input}");
    }
    assert_eq!(basis_of(&t("S K K")).constants.len(), 2);
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        proptest::sample::select(Comb::ALL.to_vec()).prop_map(Term::Const),
        proptest::sample::select(vec!["x", "y", "z"]).prop_map(Term::atom),
    ];
    leaf.prop_recursive(4, 12, 2, |inner| {
        (inner.clone(), inner).prop_map(|(f, a)| Term::app(f, a))
    })
}

fn arb_closed_term() -> impl Strategy<Value = Term> {
    let leaf = proptest::sample::select(Comb::ALL.to_vec()).prop_map(Term::Const);
    leaf.prop_recursive(4, 12, 2, |inner| {
        (inner.clone(), inner).prop_map(|(f, a)| Term::app(f, a))
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_the_identity(term in arb_term()) {
        prop_assert_eq!(parse(&term.to_string()).unwrap(), term);
    }

    #[test]
    fn step_is_deterministic_and_the_first_reduct(term in arb_term()) {
        let s = step(&term);
        prop_assert_eq!(s.clone(), step(&term));
        prop_assert_eq!(s, magmoid::combinators::all_reducts(&term).into_iter().next());
    }

    #[test]
    fn strategies_agree_on_normal_forms(term in arb_closed_term()) {
        let size = term.size();
        prop_assume!(size <= 12);
        let lo = normalize_with(&term, 200, 10_000, Order::LeftmostOutermost);
        let ri = normalize_with(&term, 200, 10_000, Order::RightmostInnermost);
        if lo.status == Status::NormalForm && ri.status == Status::NormalForm {
            prop_assert_eq!(lo.result(), ri.result());
        }
    }

    #[test]
    fn joinability_is_reflexive_and_symmetric(a in arb_term(), b in arb_term()) {
        let budget = Budget { fuel: 6, width: 200, max_size: 500 };
        prop_assert!(joinable(&a, &a, &budget).is_joinable());
        prop_assert_eq!(
            joinable(&a, &b, &budget).is_joinable(),
            joinable(&b, &a, &budget).is_joinable()
        );
    }
}
