//! Leftmost-outermost reduction traces and the logic each basis falls in.

use magmoid::combinators::{basis_of, normalize, parse};

fn main() {
    for src in [
        "B x y z",
        "W x y",
        "C (B B I) x y z",
        "S K K x",
        "W (B C I) x y",
    ] {
        let term = parse(src).expect("well-formed term");
        println!("{}", normalize(&term, 20));
        let basis = basis_of(&term);
        println!("logic: {}\n", basis.logic.label());
    }
}
