use std::sync::Arc;

use super::sets::{function_space, hom_id, product_id};
use super::{find_t, invalid, InstanceSpec, ZooError};
use crate::category::{Magmoidal, Morphism, Object, Structure};
use crate::kernel::{table_label, FiniteSet, Pairing};

/// Label of the basepoint class in a product of pointed sets.
pub const BASE_CLASS: &str = "*";

/// Which pairs a product of pointed sets identifies with the basepoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointedProduct {
    /// `X ∧ Y`: every pair with a basepoint coordinate.
    Smash,
    /// `(X × Y)/((x₀, y) ∼ (x₀, y'))`: only the basepoint row of `X`.
    CollapseBaseRow,
}

/// Canonical form of a product of pointed sets: the surviving pairs plus
/// one basepoint class labelled [`BASE_CLASS`].
#[derive(Debug)]
pub(crate) struct PointedPairing {
    set: Arc<FiniteSet>,
    pairing: Pairing,
    position: Vec<usize>,
    components: Vec<Option<(usize, usize)>>,
    base: usize,
}

impl PointedPairing {
    pub(crate) fn new(kind: PointedProduct, x: &Object, y: &Object) -> Self {
        let x0 = x.base().expect("pointed object");
        let y0 = y.base().expect("pointed object");
        let pairing = Pairing::new(product_id(x, y), x.carrier(), y.carrier(), |i, j| {
            i != x0 && (kind == PointedProduct::CollapseBaseRow || j != y0)
        });
        let labels = pairing
            .set()
            .elements()
            .iter()
            .cloned()
            .chain(std::iter::once(BASE_CLASS.to_string()));
        let set = Arc::new(
            FiniteSet::new(product_id(x, y), labels)
                .expect("pair labels never equal the base class"),
        );
        let position: Vec<usize> = pairing
            .set()
            .elements()
            .iter()
            .map(|l| set.index_of(l).expect("label kept"))
            .collect();
        let mut components = vec![None; set.len()];
        for (p, &s) in position.iter().enumerate() {
            components[s] = Some(pairing.components(p));
        }
        let base = set.index_of(BASE_CLASS).expect("base class present");
        PointedPairing {
            set,
            pairing,
            position,
            components,
            base,
        }
    }

    pub(crate) fn object(&self) -> Object {
        Object::from_arc(self.set.clone(), Structure::Pointed { base: self.base })
    }

    /// Class of the pair `(i, j)`.
    pub(crate) fn locate(&self, i: usize, j: usize) -> usize {
        self.pairing
            .index(i, j)
            .map_or(self.base, |p| self.position[p])
    }

    /// The pair a class stands for, or `None` for the basepoint class.
    pub(crate) fn components(&self, class: usize) -> Option<(usize, usize)> {
        self.components[class]
    }
}

/// Pointed finite sets and basepoint-preserving functions.
#[derive(Debug)]
pub struct PointedSets {
    name: String,
    objects: Vec<Object>,
    t: Object,
    product: PointedProduct,
}

impl PointedSets {
    pub(super) fn build(spec: &InstanceSpec, product: PointedProduct) -> Result<Self, ZooError> {
        let objects = spec
            .objects
            .iter()
            .map(|o| {
                let carrier = o.carrier()?;
                let label = o.base.as_deref().ok_or_else(|| {
                    invalid(format!("pointed object `{}` has no basepoint", o.id))
                })?;
                let base = carrier.index_of(label).ok_or_else(|| {
                    invalid(format!(
                        "basepoint `{label}` is not an element of `{}`",
                        o.id
                    ))
                })?;
                Ok(Object::new(carrier, Structure::Pointed { base }))
            })
            .collect::<Result<Vec<_>, ZooError>>()?;
        let t = find_t(&objects, &spec.t)?;
        let name = match product {
            PointedProduct::Smash => "smash",
            PointedProduct::CollapseBaseRow => "pointed_bot",
        };
        Ok(PointedSets {
            name: name.into(),
            objects,
            t,
            product,
        })
    }

    pub fn product_kind(&self) -> PointedProduct {
        self.product
    }
}

impl Magmoidal for PointedSets {
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
        match (f.dom().base(), f.cod().base()) {
            (Some(x0), Some(y0)) => f.apply(x0) == y0,
            _ => false,
        }
    }

    fn product(&self, x: &Object, y: &Object) -> Object {
        PointedPairing::new(self.product, x, y).object()
    }

    fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism {
        let dom = PointedPairing::new(self.product, f.dom(), g.dom());
        let cod = PointedPairing::new(self.product, f.cod(), g.cod());
        let table = (0..dom.set.len())
            .map(|class| match dom.components(class) {
                Some((i, j)) => cod.locate(f.apply(i), g.apply(j)),
                None => cod.base,
            })
            .collect();
        Morphism::new(dom.object(), cod.object(), table).expect("classes are in range")
    }

    fn diagonal(&self, x: &Object) -> Option<Morphism> {
        let p = PointedPairing::new(self.product, x, x);
        let table = (0..x.len()).map(|i| p.locate(i, i)).collect();
        Morphism::new(x.clone(), p.object(), table).ok()
    }

    fn terminal(&self) -> Option<Object> {
        let existing = self.objects.iter().find(|o| o.len() == 1).cloned();
        existing.or_else(|| {
            Some(Object::new(
                FiniteSet::new("1", [BASE_CLASS]).expect("one point"),
                Structure::Pointed { base: 0 },
            ))
        })
    }

    /// For the smash product the candidate is the set of pointed maps; for
    /// the collapsed-row product it is the set of all functions. Both are
    /// pointed by the function constant at the basepoint of `y`.
    fn internal_hom(&self, x: &Object, y: &Object) -> Option<(Object, Morphism)> {
        let (x0, y0) = (x.base()?, y.base()?);
        let pointed_only = self.product == PointedProduct::Smash;
        let (set, tables) = function_space(hom_id(x, y), x.carrier(), y.carrier(), |table| {
            !pointed_only || table[x0] == y0
        });
        let constant = table_label(std::iter::repeat_n(y.carrier().element(y0), x.len()));
        let base = set.index_of(&constant)?;
        let hom = Object::from_arc(set, Structure::Pointed { base });
        let p = PointedPairing::new(self.product, &hom, x);
        let table = (0..p.set.len())
            .map(|class| match p.components(class) {
                Some((k, a)) => tables[k][a],
                None => y0,
            })
            .collect();
        let ev = Morphism::new(p.object(), y.clone(), table).ok()?;
        Some((hom, ev))
    }
}
