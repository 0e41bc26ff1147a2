//! Pointed magmoidal categories with diagonals, instantiated concretely.
//!
//! A category here is a decidable hom predicate over finite functions
//! together with a product bifunctor `#`, a chosen object `t`, and a
//! (possibly partial) family of diagonals `δ_X : X → X # X`. None of the
//! usual monoidal axioms are assumed; the checkers in [`checks`] verify the
//! ones the theorems depend on.

mod checks;
mod object;
mod points;
mod quotient;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::kernel::{self, KernelError, DEFAULT_ENUMERATION_CAP};

pub use checks::{
    check_bifunctoriality, check_diagonal_naturality, check_hom_closure, scope_objects,
    CheckReport, Scope, Violation,
};
pub use object::{compose, compose_all, Morphism, Object, Structure};
pub use points::{is_t_free, point_equal, t_points, TFreeness};
pub use quotient::{concrete_quotient, HomClasses, QuotientCategory};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("no diagonal is defined on object `{object}`")]
    MissingDiagonal { object: String },
    #[error("`{morphism}` is not a morphism of the instance")]
    NotAMorphism { morphism: String },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
}

impl CategoryError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            CategoryError::Kernel(KernelError::SizeLimitExceeded { .. })
        )
    }
}

/// The data of a concrete pointed magmoidal category with diagonals.
///
/// Implementors describe one family of examples. Hom-sets default to
/// filtering all functions between carriers through [`is_morphism`].
///
/// [`is_morphism`]: Magmoidal::is_morphism
pub trait Magmoidal: fmt::Debug + Send + Sync {
    fn name(&self) -> &str;

    /// The objects enumerated by checkers and sweeps.
    fn objects(&self) -> &[Object];

    fn t(&self) -> &Object;

    /// The hom predicate.
    fn is_morphism(&self, f: &Morphism) -> bool;

    fn product(&self, x: &Object, y: &Object) -> Object;

    fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism;

    fn diagonal(&self, x: &Object) -> Option<Morphism>;

    fn right_projection(&self, _x: &Object, _y: &Object) -> Option<Morphism> {
        None
    }

    fn terminal(&self) -> Option<Object> {
        None
    }

    /// A candidate internal hom `Y^X` with its evaluation map. Candidates
    /// are certified separately, see [`crate::uniform::check_internal_hom`].
    fn internal_hom(&self, _x: &Object, _y: &Object) -> Option<(Object, Morphism)> {
        None
    }

    fn hom(&self, x: &Object, y: &Object, cap: u64) -> Result<Vec<Morphism>, CategoryError> {
        let funcs = kernel::enumerate_functions(x.carrier(), y.carrier(), cap)?;
        Ok(funcs
            .into_iter()
            .filter_map(|f| Morphism::from_function(x.clone(), y.clone(), f).ok())
            .filter(|m| self.is_morphism(m))
            .collect())
    }
}

/// A single-entry corruption applied on top of an instance, for mutation
/// testing of the checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mutation {
    /// Redirect entry `index` of `f # g` to `image`.
    Product {
        f: Morphism,
        g: Morphism,
        index: usize,
        image: usize,
    },
    /// Redirect entry `index` of `δ_object` to `image`.
    Diagonal {
        object: String,
        index: usize,
        image: usize,
    },
}

/// A magmoidal structure together with the run-time knobs the checkers
/// and theorems share: the chosen `t`, the enumeration cap, an optional
/// restriction of the diagonals to a set of objects, and mutations.
#[derive(Clone)]
pub struct CategoryInstance {
    inner: Arc<dyn Magmoidal>,
    t: Object,
    cap: u64,
    diagonal_scope: Option<BTreeSet<String>>,
    mutations: Vec<Mutation>,
}

impl fmt::Debug for CategoryInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CategoryInstance")
            .field("name", &self.inner.name())
            .field("t", &self.t)
            .field("objects", &self.inner.objects())
            .field("diagonal_scope", &self.diagonal_scope)
            .field("mutations", &self.mutations.len())
            .finish()
    }
}

impl CategoryInstance {
    pub fn new(inner: impl Magmoidal + 'static) -> Self {
        Self::from_arc(Arc::new(inner))
    }

    pub fn from_arc(inner: Arc<dyn Magmoidal>) -> Self {
        let t = inner.t().clone();
        CategoryInstance {
            inner,
            t,
            cap: DEFAULT_ENUMERATION_CAP,
            diagonal_scope: None,
            mutations: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        self.inner.name()
    }

    pub fn structure(&self) -> &Arc<dyn Magmoidal> {
        &self.inner
    }

    pub fn objects(&self) -> &[Object] {
        self.inner.objects()
    }

    pub fn t(&self) -> &Object {
        &self.t
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// Re-points the instance at another of its objects.
    pub fn with_t(mut self, id: &str) -> Result<Self, CategoryError> {
        self.t = self.object(id)?;
        Ok(self)
    }

    /// Keeps diagonals only on the named objects.
    pub fn with_diagonal_scope<I, S>(mut self, ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.diagonal_scope = Some(ids.into_iter().map(Into::into).collect());
        self
    }

    pub fn mutated(mut self, mutation: Mutation) -> Self {
        self.mutations.push(mutation);
        self
    }

    pub fn object(&self, id: &str) -> Result<Object, CategoryError> {
        self.objects()
            .iter()
            .chain(std::iter::once(&self.t))
            .find(|o| o.id() == id)
            .cloned()
            .ok_or_else(|| CategoryError::UnknownObject(id.to_string()))
    }

    pub fn is_morphism(&self, f: &Morphism) -> bool {
        self.inner.is_morphism(f)
    }

    /// Fails with `NotAMorphism` unless the hom predicate accepts `f`.
    pub fn require(&self, f: &Morphism) -> Result<(), CategoryError> {
        if self.is_morphism(f) {
            Ok(())
        } else {
            Err(CategoryError::NotAMorphism {
                morphism: f.to_string(),
            })
        }
    }

    pub fn hom(&self, x: &Object, y: &Object) -> Result<Vec<Morphism>, CategoryError> {
        self.inner.hom(x, y, self.cap)
    }

    pub fn product(&self, x: &Object, y: &Object) -> Object {
        self.inner.product(x, y)
    }

    pub fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism {
        let mut h = self.inner.product_map(f, g);
        for m in &self.mutations {
            if let Mutation::Product {
                f: mf,
                g: mg,
                index,
                image,
            } = m
            {
                if mf == f && mg == g {
                    h = h.with_entry(*index, *image).unwrap_or(h);
                }
            }
        }
        h
    }

    pub fn diagonal(&self, x: &Object) -> Result<Morphism, CategoryError> {
        let missing = || CategoryError::MissingDiagonal {
            object: x.id().to_string(),
        };
        if let Some(scope) = &self.diagonal_scope {
            if !scope.contains(x.id()) {
                return Err(missing());
            }
        }
        let mut d = self.inner.diagonal(x).ok_or_else(missing)?;
        for m in &self.mutations {
            if let Mutation::Diagonal {
                object,
                index,
                image,
            } = m
            {
                if object == x.id() {
                    d = d.with_entry(*index, *image)?;
                }
            }
        }
        Ok(d)
    }

    pub fn right_projection(&self, x: &Object, y: &Object) -> Option<Morphism> {
        self.inner.right_projection(x, y)
    }

    pub fn terminal(&self) -> Option<Object> {
        self.inner.terminal()
    }

    pub fn internal_hom(&self, x: &Object, y: &Object) -> Option<(Object, Morphism)> {
        self.inner.internal_hom(x, y)
    }
}
