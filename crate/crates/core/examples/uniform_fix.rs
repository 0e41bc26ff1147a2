//! The uniform fixed point `♭(C^C) → C` on pointed sets under the
//! trivializing `♭`, in the plain and crisp forms.

use magmoid::category::Morphism;
use magmoid::uniform::{certify, uniform_fix, uniform_fix_crisp, UniformVariant};
use magmoid::zoo::{make_flat, standard, FlatVariant};

fn main() {
    let c = standard::pointed_bot();
    let flat = make_flat(&c, FlatVariant::Trivializing).unwrap();
    let p2 = c.object("P2").unwrap();
    let hom = certify(&c, &p2, &p2, c.objects()).unwrap();
    let id = Morphism::identity(&p2);
    let f = c.hom(&c.product(&p2, &p2), &p2).unwrap().remove(1);
    let idx = c.hom(&flat.object(&hom.hom), &p2).unwrap().remove(0);
    let r = uniform_fix(&c, &flat, &hom, &id, &id, &f, &idx).unwrap();
    println!("F = {f}");
    println!("plain: fix = {} (conclusion {})", r.fix, r.conclusion_ok);
    let s_flat = flat.counit(&p2);
    let r = uniform_fix_crisp(
        &c,
        &flat,
        &hom,
        &id,
        &s_flat,
        &f,
        &idx,
        UniformVariant::CrispSection,
    )
    .unwrap();
    println!(
        "crisp section: fix = {} (conclusion {})",
        r.fix, r.conclusion_ok
    );
    // The crisp-index form takes its index on all of C^C.
    let idx = Morphism::constant(&hom.hom, &p2, p2.base().unwrap()).unwrap();
    let r = uniform_fix_crisp(
        &c,
        &flat,
        &hom,
        &id,
        &s_flat,
        &f,
        &idx,
        UniformVariant::CrispIndex,
    )
    .unwrap();
    println!(
        "crisp index: fix = {} (conclusion {})",
        r.fix, r.conclusion_ok
    );
}
