//! The diagonal argument: no `F : A # A → C` hits the map `σ∘F∘δ` when `σ`
//! has no fixed point. Shown for negation on booleans, and for an
//! injective parametrisation of a four-element set by pairs.

use magmoid::category::Morphism;
use magmoid::theorems::diagonal_argument;
use magmoid::zoo::{build_category, morphism, standard, InstanceSpec, ObjectSpec, Variant};

fn main() {
    let c = standard::finset();
    let two = c.object("2").unwrap();
    let not = morphism(&c, &two, &two, &[("0", "1"), ("1", "0")]).unwrap();
    let pairs = c.product(&two, &two);
    let and = morphism(
        &c,
        &pairs,
        &two,
        &[
            ("(0,0)", "0"),
            ("(0,1)", "0"),
            ("(1,0)", "0"),
            ("(1,1)", "1"),
        ],
    )
    .unwrap();
    let r = diagonal_argument(&c, &two, &two, &and, &not).unwrap();
    println!("F = {and}");
    println!("missed: {}", r.f);
    for w in &r.witnesses {
        println!("  row {}: differs at {} ({} vs {})", w.a, w.b, w.lhs, w.rhs);
    }

    let spec = InstanceSpec::new(Variant::Fininj, "1")
        .with_object(ObjectSpec::plain("1", &["*"]))
        .with_object(ObjectSpec::plain("2", &["0", "1"]))
        .with_object(ObjectSpec::plain("4", &["p", "q", "r", "s"]));
    let c = build_category(&spec).unwrap();
    let (two, four) = (c.object("2").unwrap(), c.object("4").unwrap());
    let f = morphism(
        &c,
        &c.product(&two, &two),
        &four,
        &[
            ("(0,0)", "p"),
            ("(0,1)", "q"),
            ("(1,0)", "r"),
            ("(1,1)", "s"),
        ],
    )
    .unwrap();
    let cycle: Morphism = morphism(
        &c,
        &four,
        &four,
        &[("p", "q"), ("q", "r"), ("r", "s"), ("s", "p")],
    )
    .unwrap();
    let r = diagonal_argument(&c, &two, &four, &f, &cycle).unwrap();
    println!("\ninjections: missed {} (verified: {})", r.f, r.verified);
}
