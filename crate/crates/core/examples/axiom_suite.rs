//! Runs the axiom suites over every standard instance.

use magmoid::category::{
    check_bifunctoriality, check_diagonal_naturality, check_hom_closure, Scope,
};
use magmoid::theorems::check_right_projection;
use magmoid::zoo::standard;

fn main() {
    for (name, c) in standard::all() {
        let closure = check_hom_closure(&c).expect("within the cap");
        let bif = check_bifunctoriality(&c).expect("within the cap");
        let nat = check_diagonal_naturality(&c, &Scope::All).expect("within the cap");
        let proj = match check_right_projection(&c) {
            Ok(r) if r.passed() => "right projections",
            Ok(_) => "broken right projections",
            Err(_) => "no right projections",
        };
        println!(
            "{name:<20} closure {:>5}  bifunctoriality {:>7}  naturality {:>4}  {}  {proj}",
            closure.checked,
            bif.checked,
            nat.checked,
            if closure.passed() && bif.passed() && nat.passed() {
                "ok"
            } else {
                "FAILED"
            },
        );
    }
}
