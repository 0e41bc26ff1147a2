use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::sets::{cartesian, function_space, hom_id, pairwise, product_id};
use super::{find_t, invalid, InstanceSpec, ZooError};
use crate::category::{Magmoidal, Morphism, Object, Structure};
use crate::kernel::{pair_label, FiniteSet, Pairing};

/// Which product a slice instance carries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceProduct {
    /// `(A → X) # (B → X) = (A × B → B → X)`.
    #[default]
    Twisted,
    /// The categorical product `A ×_X B → X`.
    Fibered,
}

/// The slice category of finite sets over a base set `X`.
#[derive(Debug)]
pub struct Slice {
    name: String,
    base: Arc<FiniteSet>,
    objects: Vec<Object>,
    t: Object,
    product: SliceProduct,
}

pub(crate) fn structure_map(x: &Object) -> &[usize] {
    match x.structure() {
        Structure::Over { map } => map,
        _ => panic!("object `{}` is not over the base set", x.id()),
    }
}

impl Slice {
    pub(super) fn build(spec: &InstanceSpec) -> Result<Self, ZooError> {
        if spec.params.base_set.is_empty() && !spec.objects.is_empty() {
            return Err(invalid("slice needs a nonempty `base_set`"));
        }
        let base = Arc::new(FiniteSet::new("X", spec.params.base_set.iter().cloned())?);
        let objects =
            spec.objects
                .iter()
                .map(|o| {
                    let carrier = o.carrier()?;
                    let over = o.over.as_ref().ok_or_else(|| {
                        invalid(format!("slice object `{}` has no `over` map", o.id))
                    })?;
                    let map = carrier
                        .elements()
                        .iter()
                        .map(|e| {
                            let x = over.get(e).ok_or_else(|| {
                                invalid(format!("`{e}` of `{}` is not mapped to the base", o.id))
                            })?;
                            base.index_of(x)
                                .ok_or_else(|| invalid(format!("`{x}` is not in the base set")))
                        })
                        .collect::<Result<Vec<_>, ZooError>>()?;
                    if over.len() != carrier.len() {
                        return Err(invalid(format!(
                            "`over` map of `{}` names foreign elements",
                            o.id
                        )));
                    }
                    Ok(Object::new(carrier, Structure::Over { map }))
                })
                .collect::<Result<Vec<_>, ZooError>>()?;
        let t = find_t(&objects, &spec.t)?;
        let product = spec.params.slice_product.unwrap_or_default();
        Ok(Slice {
            name: match product {
                SliceProduct::Twisted => "slice",
                SliceProduct::Fibered => "slice_fibered",
            }
            .into(),
            base,
            objects,
            t,
            product,
        })
    }

    pub fn base_set(&self) -> &Arc<FiniteSet> {
        &self.base
    }

    pub fn product_kind(&self) -> SliceProduct {
        self.product
    }

    fn pairing(&self, x: &Object, y: &Object) -> Pairing {
        match self.product {
            SliceProduct::Twisted => cartesian(x, y),
            SliceProduct::Fibered => {
                let (gx, gy) = (structure_map(x), structure_map(y));
                Pairing::new(product_id(x, y), x.carrier(), y.carrier(), |i, j| {
                    gx[i] == gy[j]
                })
            }
        }
    }

    fn product_object(&self, x: &Object, y: &Object, p: &Pairing) -> Object {
        let (gx, gy) = (structure_map(x), structure_map(y));
        let map = (0..p.set().len())
            .map(|pos| {
                let (i, j) = p.components(pos);
                match self.product {
                    SliceProduct::Twisted => gy[j],
                    SliceProduct::Fibered => gx[i],
                }
            })
            .collect();
        Object::from_arc(p.set().clone(), Structure::Over { map })
    }
}

impl Magmoidal for Slice {
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
        match (f.dom().structure(), f.cod().structure()) {
            (Structure::Over { map: gx }, Structure::Over { map: gy }) => {
                (0..gx.len()).all(|i| gy[f.apply(i)] == gx[i])
            }
            _ => false,
        }
    }

    fn product(&self, x: &Object, y: &Object) -> Object {
        self.product_object(x, y, &self.pairing(x, y))
    }

    fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism {
        let dom = self.pairing(f.dom(), g.dom());
        let cod = self.pairing(f.cod(), g.cod());
        let table = pairwise(f, g, &dom, &cod);
        Morphism::new(
            self.product_object(f.dom(), g.dom(), &dom),
            self.product_object(f.cod(), g.cod(), &cod),
            table,
        )
        .expect("morphisms over X preserve fibres")
    }

    fn diagonal(&self, x: &Object) -> Option<Morphism> {
        let p = self.pairing(x, x);
        let table = (0..x.len())
            .map(|i| p.index(i, i))
            .collect::<Option<Vec<_>>>()?;
        Morphism::new(x.clone(), self.product_object(x, x, &p), table).ok()
    }

    /// Only the twisted product has `pr₂` over `X`.
    fn right_projection(&self, x: &Object, y: &Object) -> Option<Morphism> {
        let p = self.pairing(x, y);
        let table = (0..p.set().len()).map(|pos| p.components(pos).1).collect();
        let pr = Morphism::new(self.product_object(x, y, &p), y.clone(), table).ok()?;
        self.is_morphism(&pr).then_some(pr)
    }

    fn terminal(&self) -> Option<Object> {
        let map = (0..self.base.len()).collect();
        Some(Object::new(self.base.renamed("1"), Structure::Over { map }))
    }

    /// `hom_X(B, C) × X → X` with `ev((k, x), b) = k(b)`; a candidate for
    /// the twisted product only.
    fn internal_hom(&self, x: &Object, y: &Object) -> Option<(Object, Morphism)> {
        if self.product != SliceProduct::Twisted {
            return None;
        }
        let (gx, gy) = (structure_map(x), structure_map(y));
        let (maps, tables) = function_space(String::new(), x.carrier(), y.carrier(), |table| {
            table.iter().enumerate().all(|(i, &j)| gy[j] == gx[i])
        });
        let mut entries = Vec::new();
        for (k, label) in maps.elements().iter().enumerate() {
            for (b, base_label) in self.base.elements().iter().enumerate() {
                entries.push((pair_label(label, base_label), k, b));
            }
        }
        let set = FiniteSet::new(hom_id(x, y), entries.iter().map(|(l, _, _)| l.clone())).ok()?;
        let mut map = vec![0; set.len()];
        let mut fun = vec![0; set.len()];
        for (label, k, b) in &entries {
            let pos = set.index_of(label)?;
            map[pos] = *b;
            fun[pos] = *k;
        }
        let hom = Object::new(set, Structure::Over { map });
        let p = cartesian(&hom, x);
        let table = (0..p.set().len())
            .map(|pos| {
                let (h, b) = p.components(pos);
                tables[fun[h]][b]
            })
            .collect();
        let ev = Morphism::new(self.product_object(&hom, x, &p), y.clone(), table).ok()?;
        Some((hom, ev))
    }
}
