use std::collections::HashMap;
use std::sync::Arc;

use super::{find_t, InstanceSpec, ZooError};
use crate::category::{Magmoidal, Morphism, Object, Structure};
use crate::kernel::{functions, FiniteSet, Pairing};

pub(crate) fn product_id(x: &Object, y: &Object) -> String {
    format!("({}#{})", x.id(), y.id())
}

pub(crate) fn cartesian(x: &Object, y: &Object) -> Pairing {
    Pairing::new(product_id(x, y), x.carrier(), y.carrier(), |_, _| true)
}

/// `(a, b) ↦ (f a, g b)` between two pairings.
pub(crate) fn pairwise(f: &Morphism, g: &Morphism, dom: &Pairing, cod: &Pairing) -> Vec<usize> {
    (0..dom.set().len())
        .map(|pos| {
            let (i, j) = dom.components(pos);
            cod.index(f.apply(i), g.apply(j))
                .expect("pairwise image lies in the codomain pairing")
        })
        .collect()
}

/// Functions `dom → cod` satisfying `keep`, as a set of table labels. The
/// returned tables are indexed by position in the sorted set.
pub(crate) fn function_space(
    id: String,
    dom: &Arc<FiniteSet>,
    cod: &Arc<FiniteSet>,
    keep: impl Fn(&[usize]) -> bool,
) -> (Arc<FiniteSet>, Vec<Vec<usize>>) {
    let mut by_label: HashMap<String, Vec<usize>> = HashMap::new();
    for f in functions(dom.clone(), cod.clone()) {
        if keep(f.table()) {
            by_label.insert(f.table_label(), f.table().to_vec());
        }
    }
    let set = FiniteSet::new(id, by_label.keys().cloned()).expect("labels are distinct");
    let tables = set
        .elements()
        .iter()
        .map(|l| by_label.remove(l).expect("label present"))
        .collect();
    (Arc::new(set), tables)
}

pub(crate) fn hom_id(x: &Object, y: &Object) -> String {
    format!("({}^{})", y.id(), x.id())
}

/// Finite sets with the cartesian product, optionally restricted to
/// injections.
#[derive(Debug)]
pub struct FinSets {
    name: String,
    objects: Vec<Object>,
    t: Object,
    injective_only: bool,
}

impl FinSets {
    pub(super) fn build(spec: &InstanceSpec, injective_only: bool) -> Result<Self, ZooError> {
        let objects = spec
            .objects
            .iter()
            .map(|o| Ok(Object::plain(o.carrier()?)))
            .collect::<Result<Vec<_>, ZooError>>()?;
        let t = find_t(&objects, &spec.t)?;
        Ok(FinSets {
            name: if injective_only { "fininj" } else { "finset" }.into(),
            objects,
            t,
            injective_only,
        })
    }

    pub fn injective_only(&self) -> bool {
        self.injective_only
    }
}

impl Magmoidal for FinSets {
    fn name(&self) -> &str {
        &self.name
    }

    fn objects(&self) -> &[Object] {
        &self.objects
    }

    fn t(&self) -> &Object {
        &self.t
    }

    fn is_morphism(&self, f: &Morphism) -> bool {
        !self.injective_only || f.function().is_injective()
    }

    fn product(&self, x: &Object, y: &Object) -> Object {
        Object::from_arc(cartesian(x, y).set().clone(), Structure::Plain)
    }

    fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism {
        let dom = cartesian(f.dom(), g.dom());
        let cod = cartesian(f.cod(), g.cod());
        let table = pairwise(f, g, &dom, &cod);
        Morphism::new(
            Object::from_arc(dom.set().clone(), Structure::Plain),
            Object::from_arc(cod.set().clone(), Structure::Plain),
            table,
        )
        .expect("product of functions is total")
    }

    fn diagonal(&self, x: &Object) -> Option<Morphism> {
        let p = cartesian(x, x);
        let table = (0..x.len())
            .map(|i| p.index(i, i).expect("diagonal pair"))
            .collect();
        Morphism::new(
            x.clone(),
            Object::from_arc(p.set().clone(), Structure::Plain),
            table,
        )
        .ok()
    }

    fn right_projection(&self, x: &Object, y: &Object) -> Option<Morphism> {
        if self.injective_only {
            return None;
        }
        let p = cartesian(x, y);
        let table = (0..p.set().len()).map(|pos| p.components(pos).1).collect();
        Morphism::new(
            Object::from_arc(p.set().clone(), Structure::Plain),
            y.clone(),
            table,
        )
        .ok()
    }

    fn terminal(&self) -> Option<Object> {
        if self.injective_only {
            return None;
        }
        let existing = self.objects.iter().find(|o| o.len() == 1).cloned();
        existing.or_else(|| {
            Some(Object::plain(
                FiniteSet::new("1", ["*"]).expect("one point"),
            ))
        })
    }

    fn internal_hom(&self, x: &Object, y: &Object) -> Option<(Object, Morphism)> {
        if self.injective_only {
            return None;
        }
        let (set, tables) = function_space(hom_id(x, y), x.carrier(), y.carrier(), |_| true);
        let hom = Object::from_arc(set, Structure::Plain);
        let p = cartesian(&hom, x);
        let table = (0..p.set().len())
            .map(|pos| {
                let (k, a) = p.components(pos);
                tables[k][a]
            })
            .collect();
        let ev = Morphism::new(
            Object::from_arc(p.set().clone(), Structure::Plain),
            y.clone(),
            table,
        )
        .ok()?;
        Some((hom, ev))
    }
}
