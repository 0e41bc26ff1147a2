//! Verifies that `B (W W) (B W (B B B))` is a fixed-point combinator and
//! prints the two reduction paths to the common reduct.

use magmoid::combinators::{basis_of, check_fpc, statman, Budget, FpcVerdict};

fn main() {
    let f = statman();
    let basis = basis_of(&f);
    println!("term:  {f}");
    println!("basis: {:?} ({})", basis.constants, basis.logic.label());
    match check_fpc(&f, &Budget::default()) {
        FpcVerdict::Verified { atom, join } => {
            println!(
                "{f} {atom}  and  {atom} ({f} {atom})  meet at  {}",
                join.common
            );
            println!("left path:");
            for s in &join.left {
                println!("  → {s}");
            }
            println!("right path:");
            for s in &join.right {
                println!("  → {s}");
            }
        }
        FpcVerdict::NotWithinBudget { explored, .. } => {
            println!("no common reduct within the budget ({explored} terms explored)");
        }
    }
}
