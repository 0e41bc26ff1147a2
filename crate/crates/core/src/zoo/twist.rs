use std::fmt;
use std::sync::Arc;

use super::slice::structure_map;
use super::{invalid, ZooError};
use crate::category::{scope_objects, CategoryInstance, Magmoidal, Morphism, Object, Structure};
use crate::kernel::{pair_label, FiniteSet};

/// Which factor of the base product the endofunctor is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `A ₜ# B = T(A) ⊗ B`.
    Left,
    /// `A #ₜ B = A ⊗ T(B)`.
    Right,
}

/// An endofunctor `T` with a point `ι : Id ⇒ T`. Naturality of `ι` is
/// checked by [`twist_by_endofunctor`], not assumed.
pub trait PointedEndofunctor: fmt::Debug + Send + Sync {
    fn name(&self) -> &str;
    fn object(&self, x: &Object) -> Object;
    fn morphism(&self, f: &Morphism) -> Morphism;
    /// `ι_X : X → T(X)`.
    fn point(&self, x: &Object) -> Morphism;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityFunctor;

impl PointedEndofunctor for IdentityFunctor {
    fn name(&self) -> &str {
        "identity"
    }

    fn object(&self, x: &Object) -> Object {
        x.clone()
    }

    fn morphism(&self, f: &Morphism) -> Morphism {
        f.clone()
    }

    fn point(&self, x: &Object) -> Morphism {
        Morphism::identity(x)
    }
}

pub const BOTTOM: &str = "⊥";

/// Choice of `ι_X : X → X ⊔ {⊥}` for [`AdjoinBottom`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BottomPoint {
    /// Constant at `⊥`. On pointed sets this is the only natural choice.
    Zero,
    /// `x ↦ x`. Natural on plain sets; not basepoint-preserving.
    Inclusion,
    /// Identity off the basepoint, basepoint to `⊥`. Not natural.
    Naive,
}

/// `X ↦ X ⊔ {⊥}` with `T(f)` fixing `⊥`. Pointed objects become pointed
/// at `⊥`.
#[derive(Debug, Clone, Copy)]
pub struct AdjoinBottom {
    pub point: BottomPoint,
}

impl AdjoinBottom {
    pub fn new(point: BottomPoint) -> Self {
        AdjoinBottom { point }
    }

    fn bottom(tx: &Object) -> usize {
        tx.carrier().index_of(BOTTOM).expect("⊥ adjoined")
    }
}

impl PointedEndofunctor for AdjoinBottom {
    fn name(&self) -> &str {
        "adjoin ⊥"
    }

    fn object(&self, x: &Object) -> Object {
        let labels = x
            .carrier()
            .elements()
            .iter()
            .cloned()
            .chain([BOTTOM.to_string()]);
        let set = FiniteSet::new(format!("T({})", x.id()), labels)
            .expect("carrier labels must not contain ⊥");
        let structure = match x.structure() {
            Structure::Pointed { .. } => Structure::Pointed {
                base: set.index_of(BOTTOM).expect("⊥ adjoined"),
            },
            _ => Structure::Plain,
        };
        Object::new(set, structure)
    }

    fn morphism(&self, f: &Morphism) -> Morphism {
        let (tx, ty) = (self.object(f.dom()), self.object(f.cod()));
        let table = tx
            .carrier()
            .elements()
            .iter()
            .map(|label| match f.apply_label(label) {
                Some(image) => ty.carrier().index_of(image).expect("image kept"),
                None => Self::bottom(&ty),
            })
            .collect();
        Morphism::new(tx, ty, table).expect("T(f) is total")
    }

    fn point(&self, x: &Object) -> Morphism {
        let tx = self.object(x);
        let bottom = Self::bottom(&tx);
        let x0 = x.base();
        let table = (0..x.len())
            .map(|i| match self.point {
                BottomPoint::Zero => bottom,
                BottomPoint::Naive if Some(i) == x0 => bottom,
                BottomPoint::Inclusion | BottomPoint::Naive => {
                    tx.carrier().index_of(x.carrier().element(i)).expect("kept")
                }
            })
            .collect();
        Morphism::new(x.clone(), tx, table).expect("ι is total")
    }
}

/// `(A → X) ↦ (A × X → X)` on a slice over `X`, with `ι(a) = (a, g a)`.
#[derive(Debug, Clone)]
pub struct TimesBase {
    base: Arc<FiniteSet>,
}

impl TimesBase {
    pub fn new(base: Arc<FiniteSet>) -> Self {
        TimesBase { base }
    }

    fn label(&self, a: &str, x: usize) -> String {
        pair_label(a, self.base.element(x))
    }
}

impl PointedEndofunctor for TimesBase {
    fn name(&self) -> &str {
        "− × X"
    }

    fn object(&self, a: &Object) -> Object {
        let mut entries = Vec::new();
        for e in a.carrier().elements() {
            for x in 0..self.base.len() {
                entries.push((self.label(e, x), x));
            }
        }
        let set = FiniteSet::new(
            format!("T({})", a.id()),
            entries.iter().map(|(l, _)| l.clone()),
        )
        .expect("pair labels are distinct");
        let mut map = vec![0; set.len()];
        for (l, x) in &entries {
            map[set.index_of(l).expect("kept")] = *x;
        }
        Object::new(set, Structure::Over { map })
    }

    fn morphism(&self, f: &Morphism) -> Morphism {
        let (ta, tb) = (self.object(f.dom()), self.object(f.cod()));
        let mut table = vec![0; ta.len()];
        for (i, e) in f.dom().carrier().elements().iter().enumerate() {
            let image = f.cod().carrier().element(f.apply(i));
            for x in 0..self.base.len() {
                let from = ta.carrier().index_of(&self.label(e, x)).expect("kept");
                table[from] = tb.carrier().index_of(&self.label(image, x)).expect("kept");
            }
        }
        Morphism::new(ta, tb, table).expect("T(f) is total")
    }

    fn point(&self, a: &Object) -> Morphism {
        let ta = self.object(a);
        let g = structure_map(a);
        let table = a
            .carrier()
            .elements()
            .iter()
            .enumerate()
            .map(|(i, e)| ta.carrier().index_of(&self.label(e, g[i])).expect("kept"))
            .collect();
        Morphism::new(a.clone(), ta, table).expect("ι is total")
    }
}

/// A base instance with its product twisted by a pointed endofunctor.
#[derive(Debug)]
pub struct Twisted {
    name: String,
    base: CategoryInstance,
    functor: Arc<dyn PointedEndofunctor>,
    side: Side,
}

impl Twisted {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn functor(&self) -> &Arc<dyn PointedEndofunctor> {
        &self.functor
    }
}

impl Magmoidal for Twisted {
    fn name(&self) -> &str {
        &self.name
    }

    fn objects(&self) -> &[Object] {
        self.base.objects()
    }

    fn t(&self) -> &Object {
        self.base.t()
    }

    fn is_morphism(&self, f: &Morphism) -> bool {
        self.base.is_morphism(f)
    }

    fn product(&self, x: &Object, y: &Object) -> Object {
        match self.side {
            Side::Left => self.base.product(&self.functor.object(x), y),
            Side::Right => self.base.product(x, &self.functor.object(y)),
        }
    }

    fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism {
        match self.side {
            Side::Left => self.base.product_map(&self.functor.morphism(f), g),
            Side::Right => self.base.product_map(f, &self.functor.morphism(g)),
        }
    }

    /// `(ι # id)∘δ` on the left, `(id # ι)∘δ` on the right.
    fn diagonal(&self, x: &Object) -> Option<Morphism> {
        let d = self.base.diagonal(x).ok()?;
        let (iota, id) = (self.functor.point(x), Morphism::identity(x));
        let twist = match self.side {
            Side::Left => self.base.product_map(&iota, &id),
            Side::Right => self.base.product_map(&id, &iota),
        };
        twist.after(&d).ok()
    }

    /// A left twist inherits `T(A) ⊗ B → B` from the base.
    fn right_projection(&self, x: &Object, y: &Object) -> Option<Morphism> {
        match self.side {
            Side::Left => self.base.right_projection(&self.functor.object(x), y),
            Side::Right => None,
        }
    }

    fn terminal(&self) -> Option<Object> {
        self.base.terminal()
    }
}

/// Twists the product of `c` by `functor` on the given side, after
/// checking functoriality of `T` and naturality of `ι` on every morphism
/// between the instance's objects.
pub fn twist_by_endofunctor(
    c: &CategoryInstance,
    functor: Arc<dyn PointedEndofunctor>,
    side: Side,
) -> Result<CategoryInstance, ZooError> {
    let objs = scope_objects(c);
    for x in &objs {
        let tid = functor.morphism(&Morphism::identity(x));
        if !tid.is_identity() {
            return Err(invalid(format!("T(id_{x}) is not an identity")));
        }
        let iota = functor.point(x);
        if !c.is_morphism(&iota) {
            return Err(invalid(format!("ι_{x} is not a morphism")));
        }
        for y in &objs {
            let homs = c.hom(x, y)?;
            for f in &homs {
                let tf = functor.morphism(f);
                if !c.is_morphism(&tf) {
                    return Err(invalid(format!("T({f}) is not a morphism")));
                }
                if tf.after(&iota)? != functor.point(y).after(f)? {
                    return Err(ZooError::NotNatural {
                        witness: f.to_string(),
                    });
                }
                for z in &objs {
                    for g in c.hom(y, z)? {
                        if functor.morphism(&g.after(f)?) != functor.morphism(&g).after(&tf)? {
                            return Err(invalid(format!(
                                "T does not preserve the composite of {f} and {g}"
                            )));
                        }
                    }
                }
            }
        }
    }
    let tag = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    let twisted = Twisted {
        name: format!("{}[{} twist by {}]", c.name(), tag, functor.name()),
        base: c.clone(),
        functor,
        side,
    };
    Ok(CategoryInstance::new(twisted).with_cap(c.cap()))
}
