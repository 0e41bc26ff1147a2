//! Certifies internal homs by checking `Hom(W, Y^X) ≅ Hom(W # X, Y)` at
//! every probe `W`, then curries a map through one.

use magmoid::uniform::{certify, curry, uncurry};
use magmoid::zoo::standard;

fn main() {
    for (name, c) in standard::closed() {
        let objs = c.objects().to_vec();
        let (x, y) = (&objs[1], &objs[objs.len() - 1]);
        let hom = certify(&c, x, y, &objs).unwrap();
        println!(
            "{name}: {}^{} has {} elements",
            y.id(),
            x.id(),
            hom.hom.len()
        );
        for cert in &hom.certificate {
            println!("  probe {}: {} maps", cert.probe, cert.morphisms);
        }
    }

    let c = standard::finset();
    let two = c.object("2").unwrap();
    let hom = certify(&c, &two, &two, c.objects()).unwrap();
    let g = c.hom(&c.product(&two, &two), &two).unwrap().remove(6);
    let f = curry(&hom, &g, &two).unwrap();
    println!("curry {g} = {f}");
    println!("uncurry gives it back: {}", uncurry(&hom, &f).unwrap() == g);
}
