//! The fixed-point theorem on booleans: logical or, indexed at 1, forces
//! every `σ` satisfying the hypothesis to fix `F(1, 1)`.

use magmoid::theorems::{fixed_point, fixed_point_search};
use magmoid::zoo::{morphism, standard};

fn main() {
    let c = standard::finset();
    let (one, two) = (c.object("1").unwrap(), c.object("2").unwrap());
    let pairs = c.product(&two, &two);
    let or = morphism(
        &c,
        &pairs,
        &two,
        &[
            ("(0,0)", "0"),
            ("(0,1)", "1"),
            ("(1,0)", "1"),
            ("(1,1)", "1"),
        ],
    )
    .unwrap();
    let sigma = morphism(&c, &two, &two, &[("0", "1"), ("1", "1")]).unwrap();
    let a0 = morphism(&c, &one, &two, &[("*", "1")]).unwrap();
    let r = fixed_point(&c, &two, &two, &or, &sigma, &a0).unwrap();
    println!("c = {} and σ∘c = c: {}", r.c, r.conclusion_ok);
    for fact in &r.facts {
        println!("  {}: {}", fact.name, fact.holds);
    }

    for sigma in c.hom(&two, &two).unwrap() {
        match fixed_point_search(&c, &two, &two, &or, &sigma).unwrap() {
            Some(r) => println!("σ = {sigma}: index {} gives fixed point {}", r.a0, r.c),
            None => println!("σ = {sigma}: no index"),
        }
    }
}
