//! A fixed-point map `C^C → C` built from a split epi `A → C^A`, with
//! every intermediate square checked.

use magmoid::uniform::{certify, fix_from_split_epi};
use magmoid::zoo::standard;

fn main() {
    let c = standard::finset();
    let objs = c.objects().to_vec();
    let (one, three) = (c.object("1").unwrap(), c.object("3").unwrap());
    let ca = certify(&c, &three, &one, &objs).unwrap();
    let cc = certify(&c, &one, &one, &objs).unwrap();
    let alpha = c.hom(&three, &ca.hom).unwrap().remove(0);
    let ell = c.hom(&ca.hom, &three).unwrap().remove(2);
    let r = fix_from_split_epi(&c, &three, &ca, &cc, &alpha, &ell).unwrap();
    println!("F   = {}", r.f_map);
    println!("idx = {}", r.idx);
    println!("fix = {}", r.fix);
    for sq in &r.squares {
        println!("  {}: {}", sq.name, sq.holds);
    }
    println!("verified: {}", r.verified());
}
