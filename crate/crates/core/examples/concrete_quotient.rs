//! The extensional quotient: morphisms identified when they agree on all
//! points. Pointed sets with a one-point `t` collapse completely; finite
//! sets with `t = 1` are already extensional.

use magmoid::category::concrete_quotient;
use magmoid::zoo::standard;

fn main() {
    for (name, c) in [("smash", standard::smash()), ("finset", standard::finset())] {
        let q = concrete_quotient(&c).unwrap();
        println!("{name} (verified: {})", q.verified());
        for h in &q.homs {
            println!(
                "  {} → {}: {} maps in {} classes",
                h.dom,
                h.cod,
                h.morphism_count(),
                h.classes.len()
            );
        }
    }
}
