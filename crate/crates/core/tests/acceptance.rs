//! The acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::rc::Rc;
use std::time::Instant;

use magmoid::category::{
    check_bifunctoriality, check_diagonal_naturality, concrete_quotient, t_points,
    CategoryInstance, CheckReport, Morphism, Mutation, Object, Scope,
};
use magmoid::combinators::{
    basis_of, check_fpc, normalize, parse, statman, step, Budget, Comb, FpcVerdict, Term,
};
use magmoid::theorems::{
    diagonal_argument, fixed_point, fixed_point_regular, fixed_point_search, TheoremError,
};
use magmoid::uniform::{
    certify, check_internal_hom, fix_from_split_epi, uniform_fix, UniformError,
};
use magmoid::zoo::{
    build_category, check_copointed, check_idempotent_comonad, make_flat, standard, FlatPatch,
    FlatVariant, InstanceSpec, ObjectSpec, Variant,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn labels(o: &Object) -> Vec<String> {
    o.carrier().elements().to_vec()
}

fn pair(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// `F(a, b)` read off the table by label. Pairs collapsed into the
/// basepoint of a pointed product take the image of `*`.
fn eval2(f: &Morphism, a: &str, b: &str) -> String {
    f.apply_label(&pair(a, b))
        .or_else(|| f.apply_label("*"))
        .expect("pair or basepoint label")
        .to_string()
}

fn ap(f: &Morphism, x: &str) -> String {
    f.apply_label(x).expect("label in domain").to_string()
}

/// The function named by an internal-hom label `[y0,y1,..]`, listed in
/// the carrier order of `x`, applied to `arg`.
fn apply_hom_label(phi: &str, x: &Object, arg: &str) -> String {
    let images: Vec<&str> = phi
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .collect();
    let i = x.carrier().index_of(arg).expect("argument in X");
    images[i].to_string()
}

// ---------------------------------------------------------------- 1

fn statman_verification() -> Outcome {
    let budget = Budget {
        fuel: 100,
        width: 10_000,
        ..Budget::default()
    };
    let started = Instant::now();
    let verdict = check_fpc(&statman(), &budget);
    let elapsed = started.elapsed();
    let FpcVerdict::Verified { join, .. } = &verdict else {
        return Err(format!("{verdict:?}"));
    };
    ensure(elapsed.as_secs_f64() < 5.0, || format!("took {elapsed:?}"))?;
    let constants: Vec<Comb> = basis_of(&statman()).constants.into_iter().collect();
    ensure(constants == [Comb::B, Comb::W], || {
        format!("basis {constants:?}")
    })?;
    Ok(format!(
        "joined at {} in {:.3}s, basis {{B,W}}",
        join.common,
        elapsed.as_secs_f64()
    ))
}

// ---------------------------------------------------------------- 2

#[derive(Clone)]
enum Lam {
    Var(&'static str),
    App(Rc<Lam>, Rc<Lam>),
    Abs(&'static str, Rc<Lam>),
}

fn compile(l: &Lam) -> Term {
    match l {
        Lam::Var(v) => Term::atom(v),
        Lam::App(f, a) => Term::app(compile(f), compile(a)),
        Lam::Abs(v, body) => abstract_var(v, &compile(body)),
    }
}

/// `[x]x = I`, `[x]M = K M` when `x ∉ M`, `[x](M N) = S ([x]M) ([x]N)`.
fn abstract_var(x: &str, m: &Term) -> Term {
    if !m.atoms().contains(x) {
        return Term::app(Term::Const(Comb::K), m.clone());
    }
    match m {
        Term::Atom(_) => Term::Const(Comb::I),
        Term::App(f, a) => Term::Const(Comb::S).apply_all([abstract_var(x, f), abstract_var(x, a)]),
        Term::Const(_) => unreachable!("x occurs in m"),
    }
}

fn reduction_conformance() -> Outcome {
    let golden = [
        ("B x y z", "B at ε: x (y z)", "x (y z)"),
        ("W x y", "W at ε: x y y", "x y y"),
    ];
    for (input, trace, result) in golden {
        let s = step(&parse(input).unwrap()).ok_or_else(|| format!("{input} is normal"))?;
        ensure(s.to_string() == trace, || format!("{input}: got `{s}`"))?;
        ensure(s.result == parse(result).unwrap(), || {
            format!("{input}: result {}", s.result)
        })?;
        let n = normalize(&parse(input).unwrap(), 10).to_string();
        let expected = format!("{input}\n  → {trace}\nnormal form after 1 steps");
        ensure(n == expected, || format!("trace `{n}`"))?;
    }
    let app = |f: Lam, a: Lam| Lam::App(Rc::new(f), Rc::new(a));
    let abs = |v, b: Lam| Lam::Abs(v, Rc::new(b));
    let half = abs("x", app(Lam::Var("f"), app(Lam::Var("x"), Lam::Var("x"))));
    let y = compile(&abs("f", app(half.clone(), half)));
    ensure(y.atoms().is_empty(), || "compiled Y is open".into())?;
    let verdict = check_fpc(&y, &Budget::default());
    ensure(verdict.is_verified(), || format!("SKI Y: {verdict:?}"))?;
    Ok(format!(
        "golden B/W steps match; SKI Y (size {}) verified",
        y.size()
    ))
}

// ---------------------------------------------------------------- 3

fn axiom_suites() -> Outcome {
    let started = Instant::now();
    let mut equations = 0;
    let all = standard::all();
    for (name, c) in &all {
        let largest = c.objects().iter().map(Object::len).max().unwrap_or(0);
        ensure(largest <= 3, || {
            format!("{name}: carrier of size {largest}")
        })?;
        let bif = check_bifunctoriality(c).map_err(|e| format!("{name}: {e}"))?;
        ensure(bif.passed() && bif.checked > 0, || {
            format!("{name}: {:?}", bif.first_violation())
        })?;
        let nat = check_diagonal_naturality(c, &Scope::All).map_err(|e| format!("{name}: {e}"))?;
        ensure(nat.passed(), || {
            format!("{name}: {:?}", nat.first_violation())
        })?;
        equations += bif.checked + nat.checked;
    }
    let closed = standard::closed();
    let mut homs = 0;
    for (name, c) in &closed {
        let objs = c.objects().to_vec();
        for x in &objs {
            for y in &objs {
                let h = certify(c, x, y, &objs).map_err(|e| format!("{name} {y}^{x}: {e}"))?;
                ensure(h.certificate.len() == objs.len(), || {
                    format!("{name}: probes skipped")
                })?;
                homs += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} instances, {equations} equations; {homs} internal homs over {} closed instances; {:.1}s",
        all.len(),
        closed.len(),
        elapsed.as_secs_f64()
    ))
}

// ---------------------------------------------------------------- 4

fn soundness_sweep() -> Outcome {
    let mut satisfied = 0;
    let mut free = 0;
    let mut triples = 0;
    for (name, c) in [
        ("finset", standard::finset()),
        ("fininj", standard::fininj()),
    ] {
        let objs: Vec<Object> = c
            .objects()
            .iter()
            .filter(|o| o.len() <= 2)
            .cloned()
            .collect();
        for a in &objs {
            let points = t_points(&c, a).map_err(|e| e.to_string())?;
            for cobj in &objs {
                for f in c.hom(&c.product(a, a), cobj).map_err(|e| e.to_string())? {
                    for sigma in c.hom(cobj, cobj).map_err(|e| e.to_string())? {
                        let is_free = labels(cobj).iter().all(|x| ap(&sigma, x) != *x);
                        let mut any = false;
                        for a0 in &points {
                            triples += 1;
                            let x0 = ap(a0, "*");
                            let hypothesis = labels(a)
                                .iter()
                                .all(|x| ap(&sigma, &eval2(&f, x, x)) == eval2(&f, &x0, x));
                            match fixed_point(&c, a, cobj, &f, &sigma, a0) {
                                Ok(r) => {
                                    ensure(hypothesis, || {
                                        format!("{name}: accepted {f}, {sigma}, {a0}")
                                    })?;
                                    let value = eval2(&f, &x0, &x0);
                                    ensure(
                                        ap(&r.c, "*") == value && ap(&sigma, &value) == value,
                                        || format!("{name}: counterexample {f}, {sigma}, {a0}"),
                                    )?;
                                    satisfied += 1;
                                    any = true;
                                }
                                Err(TheoremError::HypothesisFailed { .. }) => {
                                    ensure(!hypothesis, || {
                                        format!("{name}: rejected {f}, {sigma}, {a0}")
                                    })?
                                }
                                Err(e) => return Err(format!("{name}: {e}")),
                            }
                        }
                        let searched = fixed_point_search(&c, a, cobj, &f, &sigma)
                            .map_err(|e| e.to_string())?;
                        ensure(searched.is_some() == any, || {
                            format!("{name}: search disagrees on {f}, {sigma}")
                        })?;
                        if is_free {
                            free += 1;
                            ensure(searched.is_none(), || {
                                format!("{name}: t-free {sigma} found an index")
                            })?;
                            let r = diagonal_argument(&c, a, cobj, &f, &sigma)
                                .map_err(|e| e.to_string())?;
                            ensure(r.verified, || format!("{name}: diagonal report unverified"))?;
                            for x in labels(a) {
                                let expected = ap(&sigma, &eval2(&f, &x, &x));
                                ensure(ap(&r.f, &x) == expected, || {
                                    format!("{name}: wrong missed map")
                                })?;
                            }
                            for p in &points {
                                let row = ap(p, "*");
                                ensure(
                                    labels(a).iter().any(|b| eval2(&f, &row, b) != ap(&r.f, b)),
                                    || format!("{name}: row {row} equals the missed map"),
                                )?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{triples} triples, {satisfied} satisfy the hypothesis, {free} t-free pairs, 0 counterexamples"
    ))
}

// ---------------------------------------------------------------- 5

fn non_cartesian_witness() -> Outcome {
    let c = standard::fininj();
    let a = c.object("2").map_err(|e| e.to_string())?;
    let aa = c.product(&a, &a);
    let candidates = c.hom(&aa, &a).map_err(|e| e.to_string())?;
    let delta = c.diagonal(&a).map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for p in &candidates {
        for q in &candidates {
            pairs += 1;
            let both =
                p.after(&delta).unwrap().is_identity() && q.after(&delta).unwrap().is_identity();
            ensure(!both, || format!("{p} and {q} act as projections"))?;
        }
    }
    // Set-theoretic projections exist but are not injective.
    for side in [0usize, 1] {
        let table: Vec<usize> = labels(&aa)
            .iter()
            .map(|l| {
                let (x, y) = l
                    .trim_matches(|ch| ch == '(' || ch == ')')
                    .split_once(',')
                    .unwrap();
                a.carrier().index_of(if side == 0 { x } else { y }).unwrap()
            })
            .collect();
        let proj = Morphism::new(aa.clone(), a.clone(), table).map_err(|e| e.to_string())?;
        ensure(!c.is_morphism(&proj), || format!("{proj} accepted"))?;
    }
    ensure(c.right_projection(&a, &a).is_none(), || {
        "instance offers a projection".into()
    })?;
    Ok(format!(
        "|Hom(2#2, 2)| = {}, {pairs} candidate pairs, none satisfy π∘δ = id",
        candidates.len()
    ))
}

// ---------------------------------------------------------------- 6

fn quotient() -> Outcome {
    let mut homs = 0;
    for (name, c) in [
        ("smash", standard::smash()),
        ("pointed_bot", standard::pointed_bot()),
    ] {
        let q = concrete_quotient(&c).map_err(|e| e.to_string())?;
        ensure(q.verified(), || format!("{name}: quotient unverified"))?;
        for h in &q.homs {
            if h.morphism_count() > 0 {
                ensure(h.classes.len() == 1, || {
                    format!("{name} {}→{}: {} classes", h.dom, h.cod, h.classes.len())
                })?;
                homs += 1;
            }
        }
        check_point_bijection(name, &c, &q.point_bijection)?;
    }
    let c = standard::finset();
    let q = concrete_quotient(&c).map_err(|e| e.to_string())?;
    ensure(q.verified(), || "finset quotient unverified".into())?;
    for h in &q.homs {
        ensure(h.classes.iter().all(|cl| cl.len() == 1), || {
            format!("finset {}→{} merges maps", h.dom, h.cod)
        })?;
        homs += 1;
    }
    check_point_bijection("finset", &c, &q.point_bijection)?;
    Ok(format!(
        "{homs} hom-sets partitioned as expected; point bijection holds"
    ))
}

/// Distinct points stay distinct in the quotient, for every object.
fn check_point_bijection(
    name: &str,
    c: &CategoryInstance,
    report: &CheckReport,
) -> Result<(), String> {
    ensure(report.passed(), || {
        format!("{name}: {:?}", report.first_violation())
    })?;
    let q = concrete_quotient(c).map_err(|e| e.to_string())?;
    for x in c.objects() {
        let points = t_points(c, x).map_err(|e| e.to_string())?;
        let classes = q
            .classes(c.t(), x)
            .ok_or_else(|| format!("{name}: no classes for t → {x}"))?;
        ensure(classes.classes.len() == points.len(), || {
            format!("{name}: points of {x} merged")
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------- 7

/// Brute force over `(p, s, F, idx)` on carriers of size at most two. The
/// rectangle and the conclusion are evaluated by label; the library must
/// agree on which instances satisfy the hypothesis and pass on each.
fn uniform_sweep(c: &CategoryInstance, variant: FlatVariant) -> Result<(usize, usize), String> {
    let flat = make_flat(c, variant).map_err(|e| e.to_string())?;
    let objs: Vec<Object> = c
        .objects()
        .iter()
        .filter(|o| o.len() <= 2)
        .cloned()
        .collect();
    let (mut satisfied, mut degenerate) = (0, 0);
    for cobj in &objs {
        let hom = certify(c, cobj, cobj, &objs).map_err(|e| e.to_string())?;
        let phis = labels(&flat.object(&hom.hom));
        for a in &objs {
            for b in &objs {
                for p in c.hom(b, a).map_err(|e| e.to_string())? {
                    for s in c.hom(a, b).map_err(|e| e.to_string())? {
                        if !labels(a).iter().all(|x| ap(&p, &ap(&s, x)) == *x) {
                            continue;
                        }
                        for f in c.hom(&c.product(a, b), cobj).map_err(|e| e.to_string())? {
                            for idx in c
                                .hom(&flat.object(&hom.hom), a)
                                .map_err(|e| e.to_string())?
                            {
                                let rectangle = phis.iter().all(|phi| {
                                    labels(b).iter().all(|y| {
                                        eval2(&f, &ap(&idx, phi), y)
                                            == apply_hom_label(phi, cobj, &eval2(&f, &ap(&p, y), y))
                                    })
                                });
                                let fix = |phi: &str| {
                                    let i = ap(&idx, phi);
                                    eval2(&f, &i, &ap(&s, &i))
                                };
                                match uniform_fix(c, &flat, &hom, &p, &s, &f, &idx) {
                                    Ok(r) => {
                                        ensure(rectangle, || format!("accepted {f} with {idx}"))?;
                                        ensure(r.conclusion_ok, || {
                                            format!("conclusion fails for {f}")
                                        })?;
                                        for phi in &phis {
                                            let v = fix(phi);
                                            ensure(ap(&r.fix, phi) == v, || {
                                                format!("fix({phi}) differs")
                                            })?;
                                            ensure(apply_hom_label(phi, cobj, &v) == v, || {
                                                format!("{phi} does not fix {v}")
                                            })?;
                                        }
                                        satisfied += 1;
                                        if cobj.len() == 1 {
                                            degenerate += 1;
                                        }
                                    }
                                    Err(UniformError::HypothesisFailed { .. }) => {
                                        ensure(!rectangle, || format!("rejected {f} with {idx}"))?
                                    }
                                    Err(e) => return Err(e.to_string()),
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((satisfied, degenerate))
}

fn constructions() -> Outcome {
    let c = standard::finset();
    let two = c.object("2").map_err(|e| e.to_string())?;
    let or = c
        .hom(&c.product(&two, &two), &two)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|f| {
            labels(&two).iter().all(|x| {
                labels(&two)
                    .iter()
                    .all(|y| eval2(f, x, y) == if x == "1" || y == "1" { "1" } else { "0" })
            })
        })
        .ok_or("no logical-or map")?;
    let one_const = Morphism::constant(&two, &two, two.carrier().index_of("1").unwrap()).unwrap();
    let r = fixed_point_regular(&c, &two, &two, &or, &one_const, &two, &one_const)
        .map_err(|e| e.to_string())?;
    ensure(r.facts.iter().all(|f| f.holds) && r.conclusion_ok, || {
        format!("{:?}", r.facts)
    })?;
    ensure(labels(&two).iter().all(|x| ap(&r.c, x) == "1"), || {
        format!("c = {}", r.c)
    })?;

    let mut summary = vec![format!("regular: {} facts", r.facts.len())];
    for (name, inst, variant) in [
        ("finset/identity", standard::finset(), FlatVariant::Identity),
        (
            "pointed_bot/identity",
            standard::pointed_bot(),
            FlatVariant::Identity,
        ),
        (
            "pointed_bot/trivializing",
            standard::pointed_bot(),
            FlatVariant::Trivializing,
        ),
    ] {
        let (sat, degenerate) =
            uniform_sweep(&inst, variant).map_err(|e| format!("{name}: {e}"))?;
        ensure(sat > 0 && degenerate > 0, || {
            format!("{name}: nothing satisfied the hypothesis")
        })?;
        summary.push(format!("{name} {sat} ({degenerate} degenerate)"));
    }

    let objs = c.objects().to_vec();
    let one = c.object("1").map_err(|e| e.to_string())?;
    let cc = certify(&c, &one, &one, &objs).map_err(|e| e.to_string())?;
    let mut squares = 0;
    for a in objs.iter().filter(|o| o.len() <= 3) {
        let ca = certify(&c, a, &one, &objs).map_err(|e| e.to_string())?;
        for alpha in c.hom(a, &ca.hom).map_err(|e| e.to_string())? {
            for ell in c.hom(&ca.hom, a).map_err(|e| e.to_string())? {
                if !labels(&ca.hom)
                    .iter()
                    .all(|h| ap(&alpha, &ap(&ell, h)) == *h)
                {
                    continue;
                }
                let r =
                    fix_from_split_epi(&c, a, &ca, &cc, &alpha, &ell).map_err(|e| e.to_string())?;
                ensure(r.verified(), || format!("{a}: {:?}", r.squares))?;
                squares += r.squares.len();
            }
        }
    }
    summary.push(format!("split epi: {squares} squares"));
    Ok(summary.join("; "))
}

// ---------------------------------------------------------------- 8

fn small_finset() -> CategoryInstance {
    let spec = InstanceSpec::new(Variant::Finset, "1")
        .with_object(ObjectSpec::plain("1", &["*"]))
        .with_object(ObjectSpec::plain("2", &["0", "1"]));
    build_category(&spec).expect("valid spec")
}

fn witnessed(report: &CheckReport) -> bool {
    !report.passed()
        && report
            .first_violation()
            .is_some_and(|v| !v.witnesses.is_empty())
}

fn mutation_sensitivity() -> Outcome {
    let c = small_finset();
    let two = c.object("2").unwrap();
    let ends = c.hom(&two, &two).unwrap();
    let mut caught = [0usize; 5];

    for f in &ends {
        for g in &ends {
            let len = c.product_map(f, g).table().len();
            for index in 0..len {
                let clean = c.product_map(f, g).apply(index);
                for image in (0..len).filter(|&i| i != clean) {
                    let m = c.clone().mutated(Mutation::Product {
                        f: f.clone(),
                        g: g.clone(),
                        index,
                        image,
                    });
                    let r = check_bifunctoriality(&m).map_err(|e| e.to_string())?;
                    ensure(witnessed(&r), || {
                        format!("{f} # {g} entry {index} → {image} missed")
                    })?;
                    caught[0] += 1;
                }
            }
        }
    }

    for x in c.objects() {
        let d = c.diagonal(x).unwrap();
        for index in 0..d.table().len() {
            for image in (0..d.cod().len()).filter(|&i| i != d.apply(index)) {
                let m = c.clone().mutated(Mutation::Diagonal {
                    object: x.id().into(),
                    index,
                    image,
                });
                let r = check_diagonal_naturality(&m, &Scope::All).map_err(|e| e.to_string())?;
                ensure(witnessed(&r), || {
                    format!("δ_{x} entry {index} → {image} missed")
                })?;
                caught[1] += 1;
            }
        }
    }

    for (inst, variant) in [
        (c.clone(), FlatVariant::Identity),
        (standard::pointed_bot(), FlatVariant::Identity),
        (standard::pointed_bot(), FlatVariant::Trivializing),
    ] {
        let flat = make_flat(&inst, variant).map_err(|e| e.to_string())?;
        for x in inst.objects() {
            let e = flat.counit(x);
            for index in 0..e.table().len() {
                for image in (0..x.len()).filter(|&i| i != e.apply(index)) {
                    let patched = flat.clone().patched(FlatPatch::Counit {
                        object: x.id().into(),
                        index,
                        image,
                    });
                    let r = check_copointed(&patched).map_err(|e| e.to_string())?;
                    ensure(witnessed(&r), || {
                        format!("e_{x} entry {index} → {image} missed")
                    })?;
                    caught[2] += 1;
                }
            }
            let m = flat.comultiplication(x).map_err(|e| e.to_string())?;
            let target = m.cod().len();
            for index in 0..m.table().len() {
                for image in (0..target).filter(|&i| i != m.apply(index)) {
                    let patched = flat.clone().patched(FlatPatch::Comultiplication {
                        object: x.id().into(),
                        index,
                        image,
                    });
                    let r = check_idempotent_comonad(&patched).map_err(|e| e.to_string())?;
                    ensure(witnessed(&r), || {
                        format!("m_{x} entry {index} → {image} missed")
                    })?;
                    caught[3] += 1;
                }
            }
        }
    }

    for (name, inst) in [
        ("finset", standard::finset()),
        ("pointed_bot", standard::pointed_bot()),
    ] {
        let objs = inst.objects().to_vec();
        let x = &objs[1];
        let (hom, ev) = inst.internal_hom(x, x).ok_or("no internal hom")?;
        for index in 0..ev.table().len() {
            for image in (0..x.len()).filter(|&i| i != ev.apply(index)) {
                let bad = ev.with_entry(index, image).map_err(|e| e.to_string())?;
                if !inst.is_morphism(&bad) {
                    continue;
                }
                match check_internal_hom(&inst, x, x, (hom.clone(), bad), &objs) {
                    Err(UniformError::NotRepresentable {
                        witness: Some(_), ..
                    }) => caught[4] += 1,
                    other => return Err(format!("{name}: ev entry {index} → {image}: {other:?}")),
                }
            }
        }
    }
    ensure(caught.iter().all(|&n| n > 0), || {
        format!("untested checker: {caught:?}")
    })?;
    Ok(format!(
        "caught {} bifunctoriality, {} naturality, {} copointed, {} comonad, {} representability corruptions",
        caught[0], caught[1], caught[2], caught[3], caught[4]
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "Statman combinator is a fixed-point combinator over {B,W}",
            statman_verification,
        ),
        (
            "reduction rules match golden traces; SKI Y verified",
            reduction_conformance,
        ),
        (
            "axiom suites and internal homs on every instance",
            axiom_suites,
        ),
        ("fixed-point and diagonal soundness sweep", soundness_sweep),
        (
            "injections admit no cartesian projections",
            non_cartesian_witness,
        ),
        ("extensional quotient on pointed and finite sets", quotient),
        (
            "regular, uniform and split-epi constructions",
            constructions,
        ),
        (
            "checkers catch single-entry corruptions",
            mutation_sensitivity,
        ),
    ];
    let mut failed = BTreeSet::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                println!("FAIL {} {name} ({secs:.2}s): {why}", i + 1);
                failed.insert(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
