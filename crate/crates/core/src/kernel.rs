//! Exact finite sets and total functions between them.
//!
//! Every concrete category in this crate is built on these two types.
//! Element labels are opaque strings kept in lexicographic order, so two
//! sets with the same id and the same labels compare equal no matter how
//! they were constructed.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Default cap on `|cod|^|dom|` for brute-force enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("set `{set}` lists element `{element}` twice")]
    DuplicateElement { set: String, element: String },
    #[error("element `{element}` of `{dom}` has no assigned image")]
    MissingAssignment { dom: String, element: String },
    #[error("element `{element}` is assigned twice")]
    DuplicateAssignment { element: String },
    #[error("`{element}` is not an element of `{set}`")]
    ForeignElement { set: String, element: String },
    #[error(
        "cannot compose: codomain `{cod}` of the first map is not the domain `{dom}` of the second"
    )]
    CompositionMismatch { cod: String, dom: String },
    #[error("enumeration of {count} functions exceeds the cap of {cap}")]
    SizeLimitExceeded { count: String, cap: u64 },
}

/// A finite set of opaque element labels, sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSet {
    id: String,
    elements: Vec<String>,
}

impl FiniteSet {
    pub fn new<I, S>(id: impl Into<String>, elements: I) -> Result<Self, KernelError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let id = id.into();
        let mut elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(KernelError::DuplicateElement {
                set: id,
                element: w[0].clone(),
            });
        }
        Ok(FiniteSet { id, elements })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, index: usize) -> &str {
        &self.elements[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements
            .binary_search_by(|e| e.as_str().cmp(label))
            .ok()
    }

    /// Same labels under a different id.
    pub fn renamed(&self, id: impl Into<String>) -> Self {
        FiniteSet {
            id: id.into(),
            elements: self.elements.clone(),
        }
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{{}}}", self.id, self.elements.join(","))
    }
}

/// Canonical label of an ordered pair of labels.
pub fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Canonical label of a function given by its images in domain order.
pub fn table_label<'a>(images: impl IntoIterator<Item = &'a str>) -> String {
    let images: Vec<&str> = images.into_iter().collect();
    format!("[{}]", images.join(","))
}

/// The cartesian product of two sets together with the index bookkeeping
/// needed to move between `(i, j)` coordinates and sorted positions.
#[derive(Debug, Clone)]
pub struct Pairing {
    set: Arc<FiniteSet>,
    width: usize,
    to_index: Vec<usize>,
    components: Vec<(usize, usize)>,
}

impl Pairing {
    /// All pairs `(a, b)` with `keep(i, j)` true.
    pub fn new(
        id: impl Into<String>,
        left: &FiniteSet,
        right: &FiniteSet,
        keep: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let mut labelled: Vec<(String, usize, usize)> = Vec::new();
        for (i, a) in left.elements().iter().enumerate() {
            for (j, b) in right.elements().iter().enumerate() {
                if keep(i, j) {
                    labelled.push((pair_label(a, b), i, j));
                }
            }
        }
        labelled.sort();
        let width = right.len();
        let mut to_index = vec![usize::MAX; left.len() * width];
        let mut components = Vec::with_capacity(labelled.len());
        for (pos, (_, i, j)) in labelled.iter().enumerate() {
            to_index[i * width + j] = pos;
            components.push((*i, *j));
        }
        let set = FiniteSet {
            id: id.into(),
            elements: labelled.into_iter().map(|(l, _, _)| l).collect(),
        };
        Pairing {
            set: Arc::new(set),
            width,
            to_index,
            components,
        }
    }

    pub fn set(&self) -> &Arc<FiniteSet> {
        &self.set
    }

    /// Position of the pair `(i, j)`, if it was kept.
    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        match self.to_index.get(i * self.width + j) {
            Some(&p) if p != usize::MAX => Some(p),
            _ => None,
        }
    }

    pub fn components(&self, position: usize) -> (usize, usize) {
        self.components[position]
    }
}

/// A total function between finite sets, stored as an index table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteFunction {
    dom: Arc<FiniteSet>,
    cod: Arc<FiniteSet>,
    map: Vec<usize>,
}

impl FiniteFunction {
    /// Builds a function from `(element, image)` label pairs covering the domain exactly once.
    pub fn from_pairs<S: AsRef<str>>(
        dom: Arc<FiniteSet>,
        cod: Arc<FiniteSet>,
        pairs: &[(S, S)],
    ) -> Result<Self, KernelError> {
        let mut map = vec![None; dom.len()];
        for (x, y) in pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let i = dom.index_of(x).ok_or_else(|| KernelError::ForeignElement {
                set: dom.id().to_string(),
                element: x.to_string(),
            })?;
            let j = cod.index_of(y).ok_or_else(|| KernelError::ForeignElement {
                set: cod.id().to_string(),
                element: y.to_string(),
            })?;
            if map[i].replace(j).is_some() {
                return Err(KernelError::DuplicateAssignment {
                    element: x.to_string(),
                });
            }
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, j)| {
                j.ok_or_else(|| KernelError::MissingAssignment {
                    dom: dom.id().to_string(),
                    element: dom.element(i).to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteFunction { dom, cod, map })
    }

    pub fn from_indices(
        dom: Arc<FiniteSet>,
        cod: Arc<FiniteSet>,
        map: Vec<usize>,
    ) -> Result<Self, KernelError> {
        if map.len() != dom.len() {
            let element = dom
                .elements()
                .get(map.len())
                .cloned()
                .unwrap_or_else(|| "<surplus>".to_string());
            return Err(KernelError::MissingAssignment {
                dom: dom.id().to_string(),
                element,
            });
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= cod.len()) {
            return Err(KernelError::ForeignElement {
                set: cod.id().to_string(),
                element: format!("#{bad}"),
            });
        }
        Ok(FiniteFunction { dom, cod, map })
    }

    pub fn identity(set: Arc<FiniteSet>) -> Self {
        let map = (0..set.len()).collect();
        FiniteFunction {
            dom: set.clone(),
            cod: set,
            map,
        }
    }

    pub fn dom(&self) -> &Arc<FiniteSet> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteSet> {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, index: usize) -> usize {
        self.map[index]
    }

    pub fn apply_label(&self, label: &str) -> Option<&str> {
        self.dom
            .index_of(label)
            .map(|i| self.cod.element(self.map[i]))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FiniteFunction) -> Result<FiniteFunction, KernelError> {
        compose(self, first)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.map
            .iter()
            .all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        for &j in &self.map {
            seen[j] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// The images in domain order, rendered as a label.
    pub fn table_label(&self) -> String {
        table_label(self.map.iter().map(|&j| self.cod.element(j)))
    }
}

impl fmt::Display for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} [", self.dom.id(), self.cod.id())?;
        for (i, &j) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}↦{}", self.dom.element(i), self.cod.element(j))?;
        }
        f.write_str("]")
    }
}

/// `g ∘ f`, defined when `cod(f) = dom(g)`.
pub fn compose(g: &FiniteFunction, f: &FiniteFunction) -> Result<FiniteFunction, KernelError> {
    if f.cod != g.dom {
        return Err(KernelError::CompositionMismatch {
            cod: f.cod.id().to_string(),
            dom: g.dom.id().to_string(),
        });
    }
    Ok(FiniteFunction {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        map: f.map.iter().map(|&i| g.map[i]).collect(),
    })
}

/// Strict equality: same domain, same codomain, same table.
pub fn equal(f: &FiniteFunction, g: &FiniteFunction) -> bool {
    f == g
}

/// Number of functions `dom → cod`, or `None` on overflow.
pub fn function_count(dom: &FiniteSet, cod: &FiniteSet) -> Option<u64> {
    let exp = u32::try_from(dom.len()).ok()?;
    (cod.len() as u64).checked_pow(exp)
}

/// All functions `dom → cod` in lexicographic order of their tables, or an
/// error when there are more than `cap` of them.
pub fn enumerate_functions(
    dom: &Arc<FiniteSet>,
    cod: &Arc<FiniteSet>,
    cap: u64,
) -> Result<Vec<FiniteFunction>, KernelError> {
    match function_count(dom, cod) {
        Some(n) if n <= cap => Ok(functions(dom.clone(), cod.clone()).collect()),
        count => Err(KernelError::SizeLimitExceeded {
            count: count.map_or_else(|| format!("{}^{}", cod.len(), dom.len()), |n| n.to_string()),
            cap,
        }),
    }
}

/// Unbounded lazy enumeration; prefer [`enumerate_functions`] unless the
/// caller bounds the iteration itself.
pub fn functions(dom: Arc<FiniteSet>, cod: Arc<FiniteSet>) -> FunctionIter {
    let done = cod.is_empty() && !dom.is_empty();
    let next = vec![0; dom.len()];
    FunctionIter {
        dom,
        cod,
        next: if done { None } else { Some(next) },
    }
}

/// Odometer over function tables; the last domain element varies fastest.
#[derive(Debug, Clone)]
pub struct FunctionIter {
    dom: Arc<FiniteSet>,
    cod: Arc<FiniteSet>,
    next: Option<Vec<usize>>,
}

impl Iterator for FunctionIter {
    type Item = FiniteFunction;

    fn next(&mut self) -> Option<FiniteFunction> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = self.cod.len();
        let mut carried = true;
        for slot in succ.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                carried = false;
                break;
            }
            *slot = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(FiniteFunction {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            map: current,
        })
    }
}
