use std::collections::HashMap;

use serde::Serialize;

use super::{CategoryError, CategoryInstance, Morphism, Object};

const KEPT_VIOLATIONS: usize = 16;

/// A failed equation together with the morphisms that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub witnesses: Vec<Morphism>,
}

/// Outcome of an exhaustive axiom check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Number of equations evaluated.
    pub checked: u64,
    /// Total number of failed equations; only the first few are kept.
    pub failures: u64,
    pub violations: Vec<Violation>,
    /// Free-form remarks, e.g. vacuity.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checked: 0,
            failures: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records one evaluated equation.
    pub fn record(
        &mut self,
        holds: bool,
        law: impl FnOnce() -> String,
        witnesses: impl FnOnce() -> Vec<Morphism>,
    ) {
        self.checked += 1;
        if !holds {
            self.failures += 1;
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(Violation {
                    law: law(),
                    witnesses: witnesses(),
                });
            }
        }
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// Folds another report's counts and violations into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failures += other.failures;
        for v in other.violations {
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(v);
            }
        }
        self.notes.extend(other.notes);
    }
}

/// Objects the checkers range over: the instance's objects plus `t`.
pub fn scope_objects(c: &CategoryInstance) -> Vec<Object> {
    let mut objs: Vec<Object> = c.objects().to_vec();
    if !objs.contains(c.t()) {
        objs.push(c.t().clone());
    }
    objs
}

/// Every morphism between the listed objects, with indices.
struct MorphismIndex {
    morphisms: Vec<Morphism>,
    by_value: HashMap<Morphism, usize>,
    /// `(source object, target object)` per morphism.
    ends: Vec<(usize, usize)>,
}

impl MorphismIndex {
    fn build(c: &CategoryInstance, objs: &[Object]) -> Result<Self, CategoryError> {
        let mut morphisms = Vec::new();
        let mut ends = Vec::new();
        for (i, x) in objs.iter().enumerate() {
            for (j, y) in objs.iter().enumerate() {
                for f in c.hom(x, y)? {
                    morphisms.push(f);
                    ends.push((i, j));
                }
            }
        }
        let by_value = morphisms
            .iter()
            .enumerate()
            .map(|(k, f)| (f.clone(), k))
            .collect();
        Ok(MorphismIndex {
            morphisms,
            by_value,
            ends,
        })
    }

    /// `(first, second, second ∘ first)` for every composable pair.
    fn composable_pairs(&self) -> Result<Vec<(usize, usize, usize)>, CategoryError> {
        let mut out_of: HashMap<usize, Vec<usize>> = HashMap::new();
        for (k, &(src, _)) in self.ends.iter().enumerate() {
            out_of.entry(src).or_default().push(k);
        }
        let mut pairs = Vec::new();
        for (a, &(_, mid)) in self.ends.iter().enumerate() {
            for &b in out_of.get(&mid).into_iter().flatten() {
                let composite = self.morphisms[b].after(&self.morphisms[a])?;
                if let Some(&k) = self.by_value.get(&composite) {
                    pairs.push((a, b, k));
                }
            }
        }
        Ok(pairs)
    }
}

/// Checks that the hom predicate contains identities, is closed under
/// composition and `#`, and accepts every defined diagonal.
pub fn check_hom_closure(c: &CategoryInstance) -> Result<CheckReport, CategoryError> {
    let mut report = CheckReport::new("hom closure");
    let objs = scope_objects(c);
    let index = MorphismIndex::build(c, &objs)?;
    for x in &objs {
        let id = Morphism::identity(x);
        report.record(
            c.is_morphism(&id),
            || format!("identity on {x} accepted"),
            || vec![id.clone()],
        );
        if let Ok(d) = c.diagonal(x) {
            report.record(
                c.is_morphism(&d),
                || format!("diagonal on {x} accepted"),
                || vec![d.clone()],
            );
        }
    }
    for (a, &(_, mid)) in index.ends.iter().enumerate() {
        for (b, &(src, _)) in index.ends.iter().enumerate() {
            if src != mid {
                continue;
            }
            let (f, g) = (&index.morphisms[a], &index.morphisms[b]);
            let gf = g.after(f)?;
            report.record(
                c.is_morphism(&gf),
                || "composite accepted".into(),
                || vec![f.clone(), g.clone()],
            );
        }
    }
    for f in &index.morphisms {
        for g in &index.morphisms {
            let fg = c.product_map(f, g);
            report.record(
                c.is_morphism(&fg),
                || "product of morphisms accepted".into(),
                || vec![f.clone(), g.clone()],
            );
        }
    }
    Ok(report)
}

/// Verifies `id # id = id` and `(f∘f') # (g∘g') = (f # g)∘(f' # g')` over
/// every morphism between the instance's objects.
pub fn check_bifunctoriality(c: &CategoryInstance) -> Result<CheckReport, CategoryError> {
    let mut report = CheckReport::new("bifunctoriality of #");
    let objs = scope_objects(c);
    if objs.is_empty() {
        report.notes.push("no objects: holds vacuously".into());
        return Ok(report);
    }
    for x in &objs {
        for y in &objs {
            let (ix, iy) = (Morphism::identity(x), Morphism::identity(y));
            let lhs = c.product_map(&ix, &iy);
            let rhs = Morphism::identity(&c.product(x, y));
            report.record(
                lhs == rhs,
                || format!("id_{x} # id_{y} = id_({x}#{y})"),
                || vec![ix.clone(), iy.clone(), lhs.clone()],
            );
        }
    }

    let index = MorphismIndex::build(c, &objs)?;
    let n = index.morphisms.len();
    let mut products = Vec::with_capacity(n * n);
    for f in &index.morphisms {
        for g in &index.morphisms {
            products.push(c.product_map(f, g));
        }
    }
    let pairs = index.composable_pairs()?;
    for &(f1, f2, f21) in &pairs {
        for &(g1, g2, g21) in &pairs {
            let lhs = &products[f21 * n + g21];
            let rhs = products[f2 * n + g2].after(&products[f1 * n + g1])?;
            report.record(
                *lhs == rhs,
                || "(f∘f') # (g∘g') = (f # g)∘(f' # g')".into(),
                || {
                    vec![
                        index.morphisms[f2].clone(),
                        index.morphisms[f1].clone(),
                        index.morphisms[g2].clone(),
                        index.morphisms[g1].clone(),
                    ]
                },
            );
        }
    }
    Ok(report)
}

/// Which morphisms the naturality of `δ` is checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scope {
    /// Every morphism between the instance's objects.
    All,
    /// Only the `t`-points of the given object.
    TAnd(Object),
}

/// Verifies `(f # f)∘δ_X = δ_Y∘f` for the morphisms in scope.
pub fn check_diagonal_naturality(
    c: &CategoryInstance,
    scope: &Scope,
) -> Result<CheckReport, CategoryError> {
    let mut report = CheckReport::new("naturality of δ");
    let pairs: Vec<(Object, Object)> = match scope {
        Scope::All => {
            let objs = scope_objects(c);
            objs.iter()
                .flat_map(|x| objs.iter().map(move |y| (x.clone(), y.clone())))
                .collect()
        }
        Scope::TAnd(a) => vec![(c.t().clone(), a.clone())],
    };
    for (x, y) in pairs {
        let dx = c.diagonal(&x)?;
        let dy = c.diagonal(&y)?;
        for f in c.hom(&x, &y)? {
            let lhs = c.product_map(&f, &f).after(&dx)?;
            let rhs = dy.after(&f)?;
            report.record(
                lhs == rhs,
                || format!("(f # f)∘δ_{x} = δ_{y}∘f"),
                || vec![f.clone(), lhs.clone(), rhs.clone()],
            );
        }
    }
    Ok(report)
}
