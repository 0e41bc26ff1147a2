//! The fixed-point theorem indexed by a two-element cover `t' → 1` of
//! the terminal object instead of a single point.

use magmoid::category::Morphism;
use magmoid::theorems::{check_right_projection, fixed_point_regular};
use magmoid::zoo::{morphism, standard};

fn main() {
    let c = standard::finset();
    println!(
        "right projections: {}",
        check_right_projection(&c).unwrap().passed()
    );
    let two = c.object("2").unwrap();
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
    let one = Morphism::constant(&two, &two, 1).unwrap();
    let r = fixed_point_regular(&c, &two, &two, &or, &one, &two, &one).unwrap();
    for fact in &r.facts {
        println!("{}: {}", fact.name, fact.holds);
    }
    println!("c = {}, σ∘c = c: {}", r.c, r.conclusion_ok);
}
