use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{invalid, ZooError};
use crate::category::{scope_objects, CategoryInstance, CheckReport, Morphism, Object, Structure};
use crate::kernel::FiniteSet;

/// Object and morphism maps of a copointed endofunctor `♭` with counit
/// `e_X : ♭X → X` and, optionally, comultiplication `m_X : ♭X → ♭♭X`.
pub trait FlatData: fmt::Debug + Send + Sync {
    fn object(&self, x: &Object) -> Object;
    /// `♭f`, or `None` where the data does not define it.
    fn morphism(&self, f: &Morphism) -> Option<Morphism>;
    fn counit(&self, x: &Object) -> Morphism;
    fn comultiplication(&self, x: &Object) -> Option<Morphism>;
}

/// Which `♭` to build.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatVariant {
    /// `♭ = Id`, `e = m = id`.
    Identity,
    /// Pointed sets only: `♭(X, x₀) = ({x₀}, x₀)`, `e` the inclusion.
    Trivializing,
    /// Subobjects given by kept element labels per object id; unlisted
    /// objects are left alone. `♭f` is the restriction of `f`.
    Custom(BTreeMap<String, Vec<String>>),
}

/// A single-entry corruption of `e` or `m`, for mutation tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlatPatch {
    Counit {
        object: String,
        index: usize,
        image: usize,
    },
    Comultiplication {
        object: String,
        index: usize,
        image: usize,
    },
}

/// The map between two carriers sending each label to itself.
fn by_label(dom: &Object, cod: &Object) -> Option<Morphism> {
    let table = dom
        .carrier()
        .elements()
        .iter()
        .map(|l| cod.carrier().index_of(l))
        .collect::<Option<Vec<_>>>()?;
    Morphism::new(dom.clone(), cod.clone(), table).ok()
}

/// The subobject of `x` on the kept labels, carrying the restricted
/// structure.
fn restrict(x: &Object, keep: &[&str], id: String) -> Result<Object, ZooError> {
    let set = FiniteSet::new(id, keep.iter().copied())?;
    let old = |i: usize| {
        x.carrier()
            .index_of(set.element(i))
            .expect("kept label exists")
    };
    let structure = match x.structure() {
        Structure::Plain => Structure::Plain,
        Structure::Ordered => Structure::Ordered,
        Structure::Pointed { base } => {
            let label = x.carrier().element(*base);
            let base = set
                .index_of(label)
                .ok_or_else(|| invalid(format!("♭{x} must keep the basepoint `{label}`")))?;
            Structure::Pointed { base }
        }
        Structure::Over { map } => Structure::Over {
            map: (0..set.len()).map(|i| map[old(i)]).collect(),
        },
        Structure::Comagma { idempotent } => Structure::Comagma {
            idempotent: (0..set.len())
                .map(|i| {
                    set.index_of(x.carrier().element(idempotent[old(i)]))
                        .ok_or_else(|| {
                            invalid(format!("♭{x} is not closed under the comultiplication"))
                        })
                })
                .collect::<Result<_, _>>()?,
        },
    };
    Ok(Object::new(set, structure))
}

#[derive(Debug)]
struct IdentityFlat;

impl FlatData for IdentityFlat {
    fn object(&self, x: &Object) -> Object {
        x.clone()
    }

    fn morphism(&self, f: &Morphism) -> Option<Morphism> {
        Some(f.clone())
    }

    fn counit(&self, x: &Object) -> Morphism {
        Morphism::identity(x)
    }

    fn comultiplication(&self, x: &Object) -> Option<Morphism> {
        Some(Morphism::identity(x))
    }
}

#[derive(Debug)]
struct TrivializingFlat;

impl FlatData for TrivializingFlat {
    fn object(&self, x: &Object) -> Object {
        let base = x.base().expect("trivializing ♭ needs pointed objects");
        restrict(x, &[x.carrier().element(base)], format!("♭{}", x.id())).expect("basepoint kept")
    }

    fn morphism(&self, f: &Morphism) -> Option<Morphism> {
        Morphism::constant(&self.object(f.dom()), &self.object(f.cod()), 0).ok()
    }

    fn counit(&self, x: &Object) -> Morphism {
        by_label(&self.object(x), x).expect("basepoint is an element")
    }

    fn comultiplication(&self, x: &Object) -> Option<Morphism> {
        let fx = self.object(x);
        Morphism::constant(&fx, &self.object(&fx), 0).ok()
    }
}

#[derive(Debug)]
struct CustomFlat {
    kept: BTreeMap<String, Vec<String>>,
}

impl FlatData for CustomFlat {
    fn object(&self, x: &Object) -> Object {
        match self.kept.get(x.id()) {
            Some(keep) => {
                let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
                restrict(x, &keep, format!("♭{}", x.id())).expect("validated by make_flat")
            }
            None => x.clone(),
        }
    }

    fn morphism(&self, f: &Morphism) -> Option<Morphism> {
        let (fx, fy) = (self.object(f.dom()), self.object(f.cod()));
        let table = fx
            .carrier()
            .elements()
            .iter()
            .map(|l| fy.carrier().index_of(f.apply_label(l)?))
            .collect::<Option<Vec<_>>>()?;
        Morphism::new(fx, fy, table).ok()
    }

    fn counit(&self, x: &Object) -> Morphism {
        by_label(&self.object(x), x).expect("kept labels are elements")
    }

    fn comultiplication(&self, x: &Object) -> Option<Morphism> {
        let fx = self.object(x);
        by_label(&fx, &self.object(&fx))
    }
}

/// A copointed endofunctor over a category instance, with optional
/// comultiplication and mutation patches.
#[derive(Debug, Clone)]
pub struct FlatEndofunctor {
    base: CategoryInstance,
    variant: FlatVariant,
    data: Arc<dyn FlatData>,
    comultiplication: bool,
    patches: Vec<FlatPatch>,
}

impl FlatEndofunctor {
    /// Wraps caller-supplied data. `check_copointed` is the arbiter of
    /// whether it is a copointed endofunctor.
    pub fn from_data(base: CategoryInstance, data: Arc<dyn FlatData>) -> Self {
        FlatEndofunctor {
            base,
            variant: FlatVariant::Custom(BTreeMap::new()),
            data,
            comultiplication: true,
            patches: Vec::new(),
        }
    }

    pub fn base(&self) -> &CategoryInstance {
        &self.base
    }

    pub fn variant(&self) -> &FlatVariant {
        &self.variant
    }

    pub fn object(&self, x: &Object) -> Object {
        self.data.object(x)
    }

    /// `♭f`.
    pub fn map(&self, f: &Morphism) -> Result<Morphism, ZooError> {
        self.data
            .morphism(f)
            .ok_or_else(|| invalid(format!("♭ is undefined on {f}")))
    }

    /// `e_X : ♭X → X`.
    pub fn counit(&self, x: &Object) -> Morphism {
        let mut e = self.data.counit(x);
        for p in &self.patches {
            if let FlatPatch::Counit {
                object,
                index,
                image,
            } = p
            {
                if object == x.id() {
                    e = e.with_entry(*index, *image).unwrap_or(e);
                }
            }
        }
        e
    }

    /// `m_X : ♭X → ♭♭X`.
    pub fn comultiplication(&self, x: &Object) -> Result<Morphism, ZooError> {
        if !self.comultiplication {
            return Err(ZooError::MissingComultiplication);
        }
        let mut m = self
            .data
            .comultiplication(x)
            .ok_or(ZooError::MissingComultiplication)?;
        for p in &self.patches {
            if let FlatPatch::Comultiplication {
                object,
                index,
                image,
            } = p
            {
                if object == x.id() {
                    m = m.with_entry(*index, *image).unwrap_or(m);
                }
            }
        }
        Ok(m)
    }

    pub fn has_comultiplication(&self) -> bool {
        self.comultiplication
    }

    /// Forgets `m`, leaving a merely copointed endofunctor.
    pub fn without_comultiplication(mut self) -> Self {
        self.comultiplication = false;
        self
    }

    pub fn patched(mut self, patch: FlatPatch) -> Self {
        self.patches.push(patch);
        self
    }
}

/// Builds `♭` of the requested variant over `c`.
pub fn make_flat(c: &CategoryInstance, variant: FlatVariant) -> Result<FlatEndofunctor, ZooError> {
    let data: Arc<dyn FlatData> = match &variant {
        FlatVariant::Identity => Arc::new(IdentityFlat),
        FlatVariant::Trivializing => {
            if let Some(x) = scope_objects(c).iter().find(|x| x.base().is_none()) {
                return Err(invalid(format!(
                    "trivializing ♭ needs pointed objects; `{x}` is not pointed"
                )));
            }
            Arc::new(TrivializingFlat)
        }
        FlatVariant::Custom(kept) => {
            for (id, keep) in kept {
                let x = c.object(id)?;
                let keep: Vec<&str> = keep.iter().map(String::as_str).collect();
                if let Some(l) = keep.iter().find(|l| x.carrier().index_of(l).is_none()) {
                    return Err(invalid(format!("`{l}` is not an element of `{id}`")));
                }
                restrict(&x, &keep, format!("♭{id}"))?;
            }
            Arc::new(CustomFlat { kept: kept.clone() })
        }
    };
    Ok(FlatEndofunctor {
        base: c.clone(),
        variant,
        data,
        comultiplication: true,
        patches: Vec::new(),
    })
}

/// Verifies functoriality of `♭` and naturality `f∘e_X = e_Y∘♭f` over every
/// morphism between the instance's objects.
pub fn check_copointed(flat: &FlatEndofunctor) -> Result<CheckReport, ZooError> {
    let c = flat.base();
    let mut report = CheckReport::new("copointed endofunctor");
    let objs = scope_objects(c);
    for x in &objs {
        let e = flat.counit(x);
        report.record(
            c.is_morphism(&e),
            || format!("e_{x} is a morphism"),
            || vec![e.clone()],
        );
        let fid = flat.map(&Morphism::identity(x));
        report.record(
            fid.as_ref().is_ok_and(Morphism::is_identity),
            || format!("♭(id_{x}) = id"),
            || fid.iter().cloned().collect(),
        );
    }
    for x in &objs {
        let ex = flat.counit(x);
        for y in &objs {
            let ey = flat.counit(y);
            for f in c.hom(x, y)? {
                let Ok(ff) = flat.map(&f) else {
                    report.record(false, || format!("♭ is defined on {f}"), || vec![f.clone()]);
                    continue;
                };
                report.record(
                    c.is_morphism(&ff),
                    || "♭f is a morphism".into(),
                    || vec![f.clone(), ff.clone()],
                );
                let lhs = f.after(&ex).ok();
                let rhs = ey.after(&ff).ok();
                report.record(
                    lhs.is_some() && lhs == rhs,
                    || format!("f∘e_{x} = e_{y}∘♭f"),
                    || vec![f.clone(), ex.clone(), ey.clone()],
                );
                for z in &objs {
                    for g in c.hom(y, z)? {
                        let lhs = flat.map(&g.after(&f)?).ok();
                        let rhs = flat.map(&g).ok().and_then(|fg| fg.after(&ff).ok());
                        report.record(
                            lhs.is_some() && lhs == rhs,
                            || "♭(g∘f) = ♭g∘♭f".into(),
                            || vec![f.clone(), g.clone()],
                        );
                    }
                }
            }
        }
    }
    Ok(report)
}

fn bijective(m: &Morphism) -> bool {
    m.dom().len() == m.cod().len() && m.function().is_injective()
}

/// Verifies (CA) `m_♭X∘m_X = ♭(m_X)∘m_X`, (CU) `e_♭X∘m_X = ♭(e_X)∘m_X = id`,
/// invertibility and naturality of `m`.
pub fn check_idempotent_comonad(flat: &FlatEndofunctor) -> Result<CheckReport, ZooError> {
    let c = flat.base();
    let mut report = CheckReport::new("idempotent comonad");
    let objs = scope_objects(c);
    for x in &objs {
        let m = flat.comultiplication(x)?;
        let fx = flat.object(x);
        let id = Morphism::identity(&fx);

        let ca_lhs = flat.comultiplication(&fx)?.after(&m).ok();
        let ca_rhs = flat.map(&m).ok().and_then(|fm| fm.after(&m).ok());
        report.record(
            ca_lhs.is_some() && ca_lhs == ca_rhs,
            || format!("(CA) at {x}"),
            || vec![m.clone()],
        );

        let cu_left = flat.counit(&fx).after(&m).ok();
        let cu_right = flat
            .map(&flat.counit(x))
            .ok()
            .and_then(|fe| fe.after(&m).ok());
        report.record(
            cu_left.as_ref() == Some(&id) && cu_right.as_ref() == Some(&id),
            || format!("(CU) at {x}"),
            || vec![m.clone(), flat.counit(&fx), flat.counit(x)],
        );

        report.record(
            bijective(&m),
            || format!("m invertible at {x}"),
            || vec![m.clone()],
        );

        for y in &objs {
            let my = flat.comultiplication(y)?;
            for f in c.hom(x, y)? {
                let ff = flat.map(&f)?;
                let lhs = flat.map(&ff).ok().and_then(|fff| fff.after(&m).ok());
                let rhs = my.after(&ff).ok();
                report.record(
                    lhs.is_some() && lhs == rhs,
                    || format!("m natural at {f}"),
                    || vec![f.clone(), m.clone(), my.clone()],
                );
            }
        }
    }
    Ok(report)
}
