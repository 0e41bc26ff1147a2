use std::fmt;
use std::sync::Arc;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::kernel::{self, FiniteFunction, FiniteSet, KernelError};

/// Variant-specific structure carried by an object on top of its carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    Plain,
    /// Pointed set; `base` indexes the carrier.
    Pointed {
        base: usize,
    },
    /// Object of a slice category: the structure map into the base set.
    Over {
        map: Vec<usize>,
    },
    /// Cosemigroup in finite sets. Cocommutativity and coassociativity
    /// force the comultiplication to be `x ↦ (u x, u x)` with `u`
    /// idempotent; `u` is stored.
    Comagma {
        idempotent: Vec<usize>,
    },
    /// Element of a thin ordered-magma category; the carrier is a singleton.
    Ordered,
}

#[derive(Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct ObjectData {
    carrier: Arc<FiniteSet>,
    structure: Structure,
}

/// An object of a concrete finite category: a carrier plus structure.
///
/// The carrier's id doubles as the object identifier.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Object(Arc<ObjectData>);

impl Object {
    pub fn new(carrier: FiniteSet, structure: Structure) -> Self {
        Self::from_arc(Arc::new(carrier), structure)
    }

    pub fn from_arc(carrier: Arc<FiniteSet>, structure: Structure) -> Self {
        Object(Arc::new(ObjectData { carrier, structure }))
    }

    pub fn plain(carrier: FiniteSet) -> Self {
        Self::new(carrier, Structure::Plain)
    }

    pub fn id(&self) -> &str {
        self.0.carrier.id()
    }

    pub fn carrier(&self) -> &Arc<FiniteSet> {
        &self.0.carrier
    }

    pub fn structure(&self) -> &Structure {
        &self.0.structure
    }

    pub fn len(&self) -> usize {
        self.0.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.carrier.is_empty()
    }

    pub fn base(&self) -> Option<usize> {
        match self.0.structure {
            Structure::Pointed { base } => Some(base),
            _ => None,
        }
    }
}

impl fmt::Debug for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.carrier)?;
        match &self.0.structure {
            Structure::Plain | Structure::Ordered => Ok(()),
            s => write!(f, " {s:?}"),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Object {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Object", 2)?;
        s.serialize_field("id", self.id())?;
        s.serialize_field("elements", self.carrier().elements())?;
        s.end()
    }
}

/// A morphism of a concrete category: a finite function tagged with its
/// domain and codomain objects.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    dom: Object,
    cod: Object,
    func: FiniteFunction,
}

impl Morphism {
    pub fn new(dom: Object, cod: Object, table: Vec<usize>) -> Result<Self, KernelError> {
        let func =
            FiniteFunction::from_indices(dom.carrier().clone(), cod.carrier().clone(), table)?;
        Ok(Morphism { dom, cod, func })
    }

    pub fn from_pairs<S: AsRef<str>>(
        dom: Object,
        cod: Object,
        pairs: &[(S, S)],
    ) -> Result<Self, KernelError> {
        let func = FiniteFunction::from_pairs(dom.carrier().clone(), cod.carrier().clone(), pairs)?;
        Ok(Morphism { dom, cod, func })
    }

    /// Wraps a function whose carriers match the given objects.
    pub fn from_function(
        dom: Object,
        cod: Object,
        func: FiniteFunction,
    ) -> Result<Self, KernelError> {
        if func.dom() != dom.carrier() {
            return Err(KernelError::CompositionMismatch {
                cod: dom.id().to_string(),
                dom: func.dom().id().to_string(),
            });
        }
        if func.cod() != cod.carrier() {
            return Err(KernelError::CompositionMismatch {
                cod: func.cod().id().to_string(),
                dom: cod.id().to_string(),
            });
        }
        Ok(Morphism { dom, cod, func })
    }

    pub fn identity(x: &Object) -> Self {
        Morphism {
            dom: x.clone(),
            cod: x.clone(),
            func: FiniteFunction::identity(x.carrier().clone()),
        }
    }

    /// The function sending every element to `target`.
    pub fn constant(dom: &Object, cod: &Object, target: usize) -> Result<Self, KernelError> {
        Self::new(dom.clone(), cod.clone(), vec![target; dom.len()])
    }

    pub fn dom(&self) -> &Object {
        &self.dom
    }

    pub fn cod(&self) -> &Object {
        &self.cod
    }

    pub fn function(&self) -> &FiniteFunction {
        &self.func
    }

    pub fn table(&self) -> &[usize] {
        self.func.table()
    }

    pub fn apply(&self, index: usize) -> usize {
        self.func.apply(index)
    }

    pub fn apply_label(&self, label: &str) -> Option<&str> {
        self.func.apply_label(label)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Result<Morphism, KernelError> {
        if first.cod != self.dom {
            return Err(KernelError::CompositionMismatch {
                cod: first.cod.id().to_string(),
                dom: self.dom.id().to_string(),
            });
        }
        Ok(Morphism {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            func: kernel::compose(&self.func, &first.func)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table().iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Same table with one entry redirected; used to build corrupted
    /// variants for mutation tests.
    pub fn with_entry(&self, index: usize, image: usize) -> Result<Morphism, KernelError> {
        let mut table = self.table().to_vec();
        if index >= table.len() {
            return Err(KernelError::ForeignElement {
                set: self.dom.id().to_string(),
                element: format!("#{index}"),
            });
        }
        table[index] = image;
        Morphism::new(self.dom.clone(), self.cod.clone(), table)
    }
}

/// `g ∘ f` for morphisms.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism, KernelError> {
    g.after(f)
}

/// Composes right to left: `compose_all([h, g, f]) = h ∘ g ∘ f`.
pub fn compose_all(chain: &[&Morphism]) -> Result<Morphism, KernelError> {
    let (last, rest) = chain.split_last().expect("empty composite");
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, g| g.after(&acc))
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} [", self.dom.id(), self.cod.id())?;
        for (i, &j) in self.table().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(
                f,
                "{}↦{}",
                self.dom.carrier().element(i),
                self.cod.carrier().element(j)
            )?;
        }
        f.write_str("]")
    }
}

struct Table<'a>(&'a Morphism);

impl Serialize for Table<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let m = self.0;
        let mut map = serializer.serialize_map(Some(m.table().len()))?;
        for (i, &j) in m.table().iter().enumerate() {
            map.serialize_entry(m.dom.carrier().element(i), m.cod.carrier().element(j))?;
        }
        map.end()
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Morphism", 3)?;
        s.serialize_field("dom", self.dom.id())?;
        s.serialize_field("cod", self.cod.id())?;
        s.serialize_field("map", &Table(self))?;
        s.end()
    }
}
