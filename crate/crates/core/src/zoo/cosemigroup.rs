use super::sets::{cartesian, pairwise};
use super::{find_t, invalid, InstanceSpec, ObjectSpec, ZooError};
use crate::category::{Magmoidal, Morphism, Object, Structure};
use crate::kernel::FiniteSet;

/// Cocommutative cosemigroups in finite sets with the cartesian product.
///
/// A comultiplication `x ↦ (p x, q x)` is coassociative iff `p∘p = p`,
/// `q∘p = p∘q` and `q∘q = q`, and cocommutative iff `p = q`. So each object
/// is determined by one idempotent `u` with `Δ(x) = (u x, u x)`, and a map
/// `h` is a cosemigroup map iff `h∘u = u∘h`.
#[derive(Debug)]
pub struct Cosemigroups {
    objects: Vec<Object>,
    t: Object,
}

pub(crate) fn idempotent(x: &Object) -> &[usize] {
    match x.structure() {
        Structure::Comagma { idempotent } => idempotent,
        _ => panic!("object `{}` carries no comultiplication", x.id()),
    }
}

fn parse_object(o: &ObjectSpec) -> Result<Object, ZooError> {
    let carrier = o.carrier()?;
    let comul = o.comul.as_ref().ok_or_else(|| {
        invalid(format!(
            "cosemigroup object `{}` has no `comul` table",
            o.id
        ))
    })?;
    if comul.len() != carrier.len() {
        return Err(invalid(format!(
            "`comul` of `{}` names foreign elements",
            o.id
        )));
    }
    let lookup = |label: &str| {
        carrier
            .index_of(label)
            .ok_or_else(|| invalid(format!("`{label}` is not an element of `{}`", o.id)))
    };
    let mut p = Vec::with_capacity(carrier.len());
    let mut q = Vec::with_capacity(carrier.len());
    for e in carrier.elements() {
        let (a, b) = comul
            .get(e)
            .ok_or_else(|| invalid(format!("`comul` of `{}` misses `{e}`", o.id)))?;
        p.push(lookup(a)?);
        q.push(lookup(b)?);
    }
    for x in 0..carrier.len() {
        let e = carrier.element(x);
        if p[p[x]] != p[x] || q[p[x]] != p[q[x]] || q[q[x]] != q[x] {
            return Err(invalid(format!(
                "comultiplication of `{}` is not coassociative at `{e}`",
                o.id
            )));
        }
        if p[x] != q[x] {
            return Err(invalid(format!(
                "comultiplication of `{}` is not cocommutative at `{e}`",
                o.id
            )));
        }
    }
    Ok(Object::new(carrier, Structure::Comagma { idempotent: p }))
}

impl Cosemigroups {
    pub(super) fn build(spec: &InstanceSpec) -> Result<Self, ZooError> {
        let objects = spec
            .objects
            .iter()
            .map(parse_object)
            .collect::<Result<Vec<_>, _>>()?;
        let t = find_t(&objects, &spec.t)?;
        Ok(Cosemigroups { objects, t })
    }
}

impl Magmoidal for Cosemigroups {
    fn name(&self) -> &str {
        "cosemigroup"
    }

    fn objects(&self) -> &[Object] {
        &self.objects
    }

    fn t(&self) -> &Object {
        &self.t
    }

    fn is_morphism(&self, f: &Morphism) -> bool {
        match (f.dom().structure(), f.cod().structure()) {
            (Structure::Comagma { idempotent: u }, Structure::Comagma { idempotent: v }) => {
                (0..u.len()).all(|x| f.apply(u[x]) == v[f.apply(x)])
            }
            _ => false,
        }
    }

    /// The tensor cosemigroup: `u(a, b) = (u a, u b)`.
    fn product(&self, x: &Object, y: &Object) -> Object {
        let p = cartesian(x, y);
        let (ux, uy) = (idempotent(x), idempotent(y));
        let u = (0..p.set().len())
            .map(|pos| {
                let (i, j) = p.components(pos);
                p.index(ux[i], uy[j]).expect("cartesian")
            })
            .collect();
        Object::from_arc(p.set().clone(), Structure::Comagma { idempotent: u })
    }

    fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism {
        let table = pairwise(
            f,
            g,
            &cartesian(f.dom(), g.dom()),
            &cartesian(f.cod(), g.cod()),
        );
        Morphism::new(
            self.product(f.dom(), g.dom()),
            self.product(f.cod(), g.cod()),
            table,
        )
        .expect("product of functions is total")
    }

    /// The comultiplication itself.
    fn diagonal(&self, x: &Object) -> Option<Morphism> {
        let p = cartesian(x, x);
        let u = idempotent(x);
        let table = (0..x.len())
            .map(|i| p.index(u[i], u[i]).expect("cartesian"))
            .collect();
        Morphism::new(x.clone(), self.product(x, x), table).ok()
    }

    fn terminal(&self) -> Option<Object> {
        let existing = self.objects.iter().find(|o| o.len() == 1).cloned();
        existing.or_else(|| {
            Some(Object::new(
                FiniteSet::new("1", ["*"]).expect("one point"),
                Structure::Comagma {
                    idempotent: vec![0],
                },
            ))
        })
    }
}
