//! Constructors for the concrete magmoidal categories with diagonals:
//! finite sets, injections, pointed sets under two products, slices,
//! cosemigroups, thin ordered magmas, twisted products, and copointed
//! endofunctors over them.

mod cosemigroup;
mod flat;
mod ordered;
mod pointed;
mod sets;
mod slice;
pub mod standard;
mod twist;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::{CategoryError, CategoryInstance, Morphism, Object};
use crate::kernel::{FiniteSet, KernelError};

pub use cosemigroup::Cosemigroups;
pub use flat::{
    check_copointed, check_idempotent_comonad, make_flat, FlatData, FlatEndofunctor, FlatPatch,
    FlatVariant,
};
pub use ordered::OrderedMagma;
pub use pointed::{PointedProduct, PointedSets};
pub use sets::FinSets;
pub use slice::{Slice, SliceProduct};
pub use twist::{
    twist_by_endofunctor, AdjoinBottom, BottomPoint, IdentityFunctor, PointedEndofunctor, Side,
    TimesBase, Twisted,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),
    #[error("the point ι is not natural with respect to {witness}")]
    NotNatural { witness: String },
    #[error("the endofunctor has no comultiplication")]
    MissingComultiplication,
    #[error(transparent)]
    Category(#[from] CategoryError),
}

impl From<KernelError> for ZooError {
    fn from(e: KernelError) -> Self {
        ZooError::Category(CategoryError::Kernel(e))
    }
}

fn invalid(msg: impl Into<String>) -> ZooError {
    ZooError::InvalidSpec(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Finite sets and all functions, cartesian product.
    Finset,
    /// Finite sets and injections, cartesian product.
    Fininj,
    /// Pointed sets with the smash product.
    Smash,
    /// Pointed sets with `X × Y` modulo the basepoint row.
    PointedBot,
    /// Sets over a fixed base.
    Slice,
    /// Cocommutative cosemigroups in finite sets.
    Cosemigroup,
    /// A finite ordered magma with `a ≤ a·a`, as a thin category.
    OrderedMagma,
}

/// Description of one object. Which optional fields are required depends
/// on the variant.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub id: String,
    #[serde(default)]
    pub elements: Vec<String>,
    /// Basepoint (pointed variants).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    /// Structure map into the base set (slice).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<BTreeMap<String, String>>,
    /// Comultiplication `x ↦ (x', x'')` (cosemigroup).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<BTreeMap<String, (String, String)>>,
}

impl ObjectSpec {
    pub fn plain(id: &str, elements: &[&str]) -> Self {
        ObjectSpec {
            id: id.into(),
            elements: elements.iter().map(|e| e.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn pointed(id: &str, elements: &[&str], base: &str) -> Self {
        ObjectSpec {
            base: Some(base.into()),
            ..Self::plain(id, elements)
        }
    }

    pub fn over(id: &str, over: &[(&str, &str)]) -> Self {
        ObjectSpec {
            id: id.into(),
            elements: over.iter().map(|(e, _)| e.to_string()).collect(),
            over: Some(
                over.iter()
                    .map(|(e, x)| (e.to_string(), x.to_string()))
                    .collect(),
            ),
            ..Default::default()
        }
    }

    pub fn comagma(id: &str, comul: &[(&str, (&str, &str))]) -> Self {
        ObjectSpec {
            id: id.into(),
            elements: comul.iter().map(|(e, _)| e.to_string()).collect(),
            comul: Some(
                comul
                    .iter()
                    .map(|(e, (a, b))| (e.to_string(), (a.to_string(), b.to_string())))
                    .collect(),
            ),
            ..Default::default()
        }
    }

    fn carrier(&self) -> Result<FiniteSet, ZooError> {
        Ok(FiniteSet::new(
            self.id.clone(),
            self.elements.iter().cloned(),
        )?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    /// Base set of a slice.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub base_set: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slice_product: Option<SliceProduct>,
    /// Elements of an ordered magma.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<String>,
    /// Generating pairs `a ≤ b`; the reflexive-transitive closure is taken.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub order: Vec<(String, String)>,
    /// Operation table as triples `a · b = c`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub op: Vec<(String, String, String)>,
}

/// Everything needed to build one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub variant: Variant,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub objects: Vec<ObjectSpec>,
    pub t: String,
}

impl InstanceSpec {
    pub fn new(variant: Variant, t: &str) -> Self {
        InstanceSpec {
            variant,
            params: Params::default(),
            objects: Vec::new(),
            t: t.into(),
        }
    }

    pub fn with_object(mut self, object: ObjectSpec) -> Self {
        self.objects.push(object);
        self
    }

    pub fn with_params(mut self, params: Params) -> Self {
        self.params = params;
        self
    }
}

fn find_t(objects: &[Object], t: &str) -> Result<Object, ZooError> {
    objects
        .iter()
        .find(|o| o.id() == t)
        .cloned()
        .ok_or_else(|| invalid(format!("t = `{t}` is not one of the objects")))
}

fn check_unique_ids(objects: &[ObjectSpec]) -> Result<(), ZooError> {
    let mut ids: Vec<&str> = objects.iter().map(|o| o.id.as_str()).collect();
    ids.sort_unstable();
    match ids.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(invalid(format!("object id `{}` used twice", w[0]))),
        None => Ok(()),
    }
}

/// Builds the category described by `spec`, validating it for its variant.
pub fn build_category(spec: &InstanceSpec) -> Result<CategoryInstance, ZooError> {
    check_unique_ids(&spec.objects)?;
    Ok(match spec.variant {
        Variant::Finset => CategoryInstance::new(FinSets::build(spec, false)?),
        Variant::Fininj => CategoryInstance::new(FinSets::build(spec, true)?),
        Variant::Smash => CategoryInstance::new(PointedSets::build(spec, PointedProduct::Smash)?),
        Variant::PointedBot => {
            CategoryInstance::new(PointedSets::build(spec, PointedProduct::CollapseBaseRow)?)
        }
        Variant::Slice => CategoryInstance::new(Slice::build(spec)?),
        Variant::Cosemigroup => CategoryInstance::new(Cosemigroups::build(spec)?),
        Variant::OrderedMagma => CategoryInstance::new(OrderedMagma::build(spec)?),
    })
}

/// Morphism built from label pairs, checked against the hom predicate.
pub fn morphism(
    c: &CategoryInstance,
    dom: &Object,
    cod: &Object,
    pairs: &[(&str, &str)],
) -> Result<Morphism, ZooError> {
    let f = Morphism::from_pairs(dom.clone(), cod.clone(), pairs)?;
    c.require(&f)?;
    Ok(f)
}
