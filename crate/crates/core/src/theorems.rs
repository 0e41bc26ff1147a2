//! Constructive diagonal arguments and fixed-point theorems, each of which
//! builds its witness and then checks hypotheses and conclusions against
//! the instance by enumeration.

use serde::Serialize;
use thiserror::Error;

use crate::category::{
    compose_all, is_t_free, scope_objects, t_points, CategoryError, CategoryInstance, CheckReport,
    Morphism, Object,
};
use crate::kernel::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("σ is not t-free: it fixes {witness}")]
    NotTFree { witness: Morphism },
    #[error("the point {point} is not a comagma map (δ is not natural with respect to it)")]
    NotComagmaMap { point: Morphism },
    #[error("{detail}")]
    NotASection { detail: String },
    #[error("hypothesis fails: {detail}")]
    HypothesisFailed {
        detail: String,
        witness: Option<Morphism>,
    },
    #[error("the point {point} does not lift through p")]
    NotPointSurjective { point: Morphism },
    #[error("no right projection out of {dom}#{cod}")]
    MissingProjection { dom: String, cod: String },
    #[error("{object} → 1 is not a regular epimorphism: {detail}")]
    NotRegularEpi { object: String, detail: String },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

impl From<KernelError> for TheoremError {
    fn from(e: KernelError) -> Self {
        TheoremError::Category(CategoryError::Kernel(e))
    }
}

impl TheoremError {
    pub fn is_budget(&self) -> bool {
        matches!(self, TheoremError::Category(e) if e.is_budget())
    }
}

/// Checks that `f : dom → cod` is a morphism of the instance.
pub(crate) fn expect_shape(
    c: &CategoryInstance,
    f: &Morphism,
    dom: &Object,
    cod: &Object,
    name: &str,
) -> Result<(), TheoremError> {
    if f.dom() != dom || f.cod() != cod {
        return Err(TheoremError::Shape(format!(
            "{name} must be {} → {}, got {} → {}",
            dom.id(),
            cod.id(),
            f.dom().id(),
            f.cod().id()
        )));
    }
    c.require(f)?;
    Ok(())
}

/// One instance of the inequality `f∘b ≠ F∘(a # b)∘δ_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalWitness {
    pub a: Morphism,
    pub b: Morphism,
    /// `f∘b`.
    pub lhs: Morphism,
    /// `F∘(a # b)∘δ_t`.
    pub rhs: Morphism,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalReport {
    /// The map missed by the parametrisation.
    pub f: Morphism,
    pub witnesses: Vec<DiagonalWitness>,
    pub verified: bool,
}

/// An equation the proof relies on, with whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    /// The index point (`a₀` or `a`).
    pub a0: Morphism,
    /// The chosen lift `b_a` in the surjective-on-points variant.
    pub lift: Option<Morphism>,
    pub c: Morphism,
    pub hypothesis_ok: bool,
    /// `σ∘c = c`.
    pub conclusion_ok: bool,
    /// Naturality facts consumed by the proof.
    pub facts: Vec<Fact>,
}

fn point_pair(c: &CategoryInstance, a: &Morphism, b: &Morphism) -> Result<Morphism, TheoremError> {
    let dt = c.diagonal(c.t())?;
    Ok(c.product_map(a, b).after(&dt)?)
}

/// Fails unless `(a # a)∘δ_t = δ_A∘a` for every `t`-point `a` of `A`.
fn require_local_naturality(
    c: &CategoryInstance,
    a_obj: &Object,
) -> Result<Vec<Morphism>, TheoremError> {
    let da = c.diagonal(a_obj)?;
    let points = t_points(c, a_obj)?;
    for a in &points {
        if point_pair(c, a, a)? != da.after(a)? {
            return Err(TheoremError::NotComagmaMap { point: a.clone() });
        }
    }
    Ok(points)
}

fn require_t_free(c: &CategoryInstance, sigma: &Morphism) -> Result<(), TheoremError> {
    let freeness = is_t_free(c, sigma)?;
    match freeness.fixed_point {
        Some(witness) if !freeness.free => Err(TheoremError::NotTFree { witness }),
        _ => Ok(()),
    }
}

/// For a `t`-free `σ`, `F : A # A → C` misses `f = σ∘F∘δ_A`: for each
/// `a : t → A`, `b = a` gives `f∘b ≠ F∘(a # b)∘δ_t`.
pub fn diagonal_argument(
    c: &CategoryInstance,
    a_obj: &Object,
    c_obj: &Object,
    f_map: &Morphism,
    sigma: &Morphism,
) -> Result<DiagonalReport, TheoremError> {
    expect_shape(c, f_map, &c.product(a_obj, a_obj), c_obj, "F")?;
    expect_shape(c, sigma, c_obj, c_obj, "σ")?;
    require_t_free(c, sigma)?;
    let points = require_local_naturality(c, a_obj)?;
    let f = compose_all(&[sigma, f_map, &c.diagonal(a_obj)?])?;
    let witnesses = points
        .iter()
        .map(|a| {
            Ok(DiagonalWitness {
                a: a.clone(),
                b: a.clone(),
                lhs: f.after(a)?,
                rhs: f_map.after(&point_pair(c, a, a)?)?,
            })
        })
        .collect::<Result<Vec<_>, TheoremError>>()?;
    let verified = witnesses.iter().all(|w| w.lhs != w.rhs);
    Ok(DiagonalReport {
        f,
        witnesses,
        verified,
    })
}

/// The variant with `p : B → A` split by `s`: `F : A # B → C` misses
/// `f = σ∘F∘(p # id)∘δ_B`, witnessed by `b = s∘a`.
pub fn diagonal_argument_section(
    c: &CategoryInstance,
    p: &Morphism,
    s: &Morphism,
    f_map: &Morphism,
    sigma: &Morphism,
) -> Result<DiagonalReport, TheoremError> {
    let (b_obj, a_obj) = (p.dom().clone(), p.cod().clone());
    expect_shape(c, p, &b_obj, &a_obj, "p")?;
    expect_shape(c, s, &a_obj, &b_obj, "s")?;
    let c_obj = sigma.dom().clone();
    expect_shape(c, f_map, &c.product(&a_obj, &b_obj), &c_obj, "F")?;
    expect_shape(c, sigma, &c_obj, &c_obj, "σ")?;
    if !p.after(s)?.is_identity() {
        return Err(TheoremError::NotASection {
            detail: format!("p∘s ≠ id_{a_obj}"),
        });
    }
    require_t_free(c, sigma)?;
    let points = require_local_naturality(c, &a_obj)?;
    let (da, db) = (c.diagonal(&a_obj)?, c.diagonal(&b_obj)?);
    if c.product_map(s, s).after(&da)? != db.after(s)? {
        return Err(TheoremError::NotComagmaMap { point: s.clone() });
    }
    let p_id = c.product_map(p, &Morphism::identity(&b_obj));
    let f = compose_all(&[sigma, f_map, &p_id, &db])?;
    let witnesses = points
        .iter()
        .map(|a| {
            let b = s.after(a)?;
            Ok(DiagonalWitness {
                lhs: f.after(&b)?,
                rhs: f_map.after(&point_pair(c, a, &b)?)?,
                a: a.clone(),
                b,
            })
        })
        .collect::<Result<Vec<_>, TheoremError>>()?;
    let verified = witnesses.iter().all(|w| w.lhs != w.rhs);
    Ok(DiagonalReport {
        f,
        witnesses,
        verified,
    })
}

/// Given `a₀` with `σ∘F∘δ_A∘a = F∘(a₀ # a)∘δ_t` for all `a : t → A`,
/// `c = F∘δ_A∘a₀` is fixed by `σ`.
pub fn fixed_point(
    c: &CategoryInstance,
    a_obj: &Object,
    c_obj: &Object,
    f_map: &Morphism,
    sigma: &Morphism,
    a0: &Morphism,
) -> Result<FixedPointReport, TheoremError> {
    expect_shape(c, f_map, &c.product(a_obj, a_obj), c_obj, "F")?;
    expect_shape(c, sigma, c_obj, c_obj, "σ")?;
    expect_shape(c, a0, c.t(), a_obj, "a₀")?;
    let da = c.diagonal(a_obj)?;
    let diag = compose_all(&[sigma, f_map, &da])?;
    for a in t_points(c, a_obj)? {
        if diag.after(&a)? != f_map.after(&point_pair(c, a0, &a)?)? {
            return Err(TheoremError::HypothesisFailed {
                detail: format!("σ∘F∘δ∘a ≠ F∘(a₀ # a)∘δ_t at a = {a}"),
                witness: Some(a),
            });
        }
    }
    let point = f_map.after(&da.after(a0)?)?;
    let conclusion_ok = sigma.after(&point)? == point;
    let facts = vec![Fact {
        name: "(a₀ # a₀)∘δ_t = δ_A∘a₀".into(),
        holds: point_pair(c, a0, a0)? == da.after(a0)?,
    }];
    Ok(FixedPointReport {
        a0: a0.clone(),
        lift: None,
        c: point,
        hypothesis_ok: true,
        conclusion_ok,
        facts,
    })
}

/// Scans the `t`-points of `A` in enumeration order for an index `a₀`
/// satisfying the fixed-point hypothesis.
pub fn fixed_point_search(
    c: &CategoryInstance,
    a_obj: &Object,
    c_obj: &Object,
    f_map: &Morphism,
    sigma: &Morphism,
) -> Result<Option<FixedPointReport>, TheoremError> {
    for a0 in t_points(c, a_obj)? {
        match fixed_point(c, a_obj, c_obj, f_map, sigma, &a0) {
            Ok(report) => return Ok(Some(report)),
            Err(TheoremError::HypothesisFailed { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// The variant with `p : B → A` surjective on `t`-points: if
/// `σ∘F∘(p # id)∘δ_B∘b = F∘(a # b)∘δ_t` for all `b : t → B`, then
/// `c = F∘(p # id)∘δ_B∘b_a` is fixed by `σ` for any lift `b_a` of `a`.
pub fn fixed_point_section(
    c: &CategoryInstance,
    p: &Morphism,
    f_map: &Morphism,
    sigma: &Morphism,
    a: &Morphism,
) -> Result<FixedPointReport, TheoremError> {
    let (b_obj, a_obj) = (p.dom().clone(), p.cod().clone());
    let c_obj = sigma.dom().clone();
    expect_shape(c, p, &b_obj, &a_obj, "p")?;
    expect_shape(c, f_map, &c.product(&a_obj, &b_obj), &c_obj, "F")?;
    expect_shape(c, sigma, &c_obj, &c_obj, "σ")?;
    expect_shape(c, a, c.t(), &a_obj, "a")?;

    let b_points = t_points(c, &b_obj)?;
    let lift_of = |x: &Morphism| -> Result<Option<Morphism>, TheoremError> {
        for b in &b_points {
            if p.after(b)? == *x {
                return Ok(Some(b.clone()));
            }
        }
        Ok(None)
    };
    for x in t_points(c, &a_obj)? {
        if lift_of(&x)?.is_none() {
            return Err(TheoremError::NotPointSurjective { point: x });
        }
    }

    let db = c.diagonal(&b_obj)?;
    let p_id = c.product_map(p, &Morphism::identity(&b_obj));
    let g = compose_all(&[f_map, &p_id, &db])?;
    let lhs = sigma.after(&g)?;
    for b in &b_points {
        if lhs.after(b)? != f_map.after(&point_pair(c, a, b)?)? {
            return Err(TheoremError::HypothesisFailed {
                detail: format!("σ∘F∘(p # id)∘δ_B∘b ≠ F∘(a # b)∘δ_t at b = {b}"),
                witness: Some(b.clone()),
            });
        }
    }
    let b_a = lift_of(a)?.expect("every point lifts");
    let point = g.after(&b_a)?;
    let conclusion_ok = sigma.after(&point)? == point;
    let facts = vec![Fact {
        name: "(b_a # b_a)∘δ_t = δ_B∘b_a".into(),
        holds: point_pair(c, &b_a, &b_a)? == db.after(&b_a)?,
    }];
    Ok(FixedPointReport {
        a0: a.clone(),
        lift: Some(b_a),
        c: point,
        hypothesis_ok: true,
        conclusion_ok,
        facts,
    })
}

fn projection(c: &CategoryInstance, x: &Object, y: &Object) -> Result<Morphism, TheoremError> {
    let pr = c
        .right_projection(x, y)
        .ok_or_else(|| TheoremError::MissingProjection {
            dom: x.id().to_string(),
            cod: y.id().to_string(),
        })?;
    expect_shape(c, &pr, &c.product(x, y), y, "pr₂")?;
    Ok(pr)
}

/// Verifies `pr₂∘δ = id` and `pr₂∘(f # g) = g∘pr₂` over every morphism
/// between the instance's objects.
pub fn check_right_projection(c: &CategoryInstance) -> Result<CheckReport, TheoremError> {
    let mut report = CheckReport::new("right projection");
    let objs = scope_objects(c);
    for x in &objs {
        let pr = projection(c, x, x)?;
        if let Ok(d) = c.diagonal(x) {
            let composite = pr.after(&d)?;
            report.record(
                composite.is_identity(),
                || format!("pr₂∘δ_{x} = id"),
                || vec![pr.clone(), d.clone()],
            );
        }
    }
    let homs: Vec<Vec<Vec<Morphism>>> = objs
        .iter()
        .map(|x| {
            objs.iter()
                .map(|y| c.hom(x, y))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (i, x) in objs.iter().enumerate() {
        for (k, y) in objs.iter().enumerate() {
            let pr = projection(c, x, y)?;
            for (j, x2) in objs.iter().enumerate() {
                for (l, y2) in objs.iter().enumerate() {
                    let pr2 = projection(c, x2, y2)?;
                    for f in &homs[i][j] {
                        for g in &homs[k][l] {
                            let lhs = pr2.after(&c.product_map(f, g))?;
                            let rhs = g.after(&pr)?;
                            report.record(
                                lhs == rhs,
                                || format!("pr₂∘(f # g) = g∘pr₂ on {x}#{y}"),
                                || vec![f.clone(), g.clone()],
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Fails unless `t' → 1` is a surjective morphism onto a terminal object,
/// which is what a regular epimorphism amounts to in these instances.
fn require_regular_epi(c: &CategoryInstance, t_prime: &Object) -> Result<(), TheoremError> {
    let fail = |detail: &str| TheoremError::NotRegularEpi {
        object: t_prime.id().to_string(),
        detail: detail.to_string(),
    };
    if t_prime.is_empty() {
        return Err(fail("empty carrier"));
    }
    let one = c.terminal().ok_or_else(|| fail("no terminal object"))?;
    let maps = c.hom(t_prime, &one)?;
    match maps.as_slice() {
        [m] if m.function().is_surjective() => Ok(()),
        [_] => Err(fail("not surjective")),
        _ => Err(fail("no unique map to the terminal object")),
    }
}

/// The form with right projections: if `t' → 1` is a regular epi and
/// `F∘(a₀ # id) = σ∘F∘δ_A∘pr₂ : t' # A → C`, then `c = σ∘F∘δ_A∘a₀` is
/// fixed by `σ`. Left projections are never consulted.
pub fn fixed_point_regular(
    c: &CategoryInstance,
    a_obj: &Object,
    c_obj: &Object,
    f_map: &Morphism,
    sigma: &Morphism,
    t_prime: &Object,
    a0: &Morphism,
) -> Result<FixedPointReport, TheoremError> {
    expect_shape(c, f_map, &c.product(a_obj, a_obj), c_obj, "F")?;
    expect_shape(c, sigma, c_obj, c_obj, "σ")?;
    expect_shape(c, a0, t_prime, a_obj, "a₀")?;
    require_regular_epi(c, t_prime)?;
    let pr = projection(c, t_prime, a_obj)?;
    let da = c.diagonal(a_obj)?;

    let top = f_map.after(&c.product_map(a0, &Morphism::identity(a_obj)))?;
    let bottom = compose_all(&[sigma, f_map, &da, &pr])?;
    if let Some(i) = (0..top.dom().len()).find(|&i| top.apply(i) != bottom.apply(i)) {
        return Err(TheoremError::HypothesisFailed {
            detail: format!(
                "F∘(a₀ # id) ≠ σ∘F∘δ_A∘pr₂ at {}",
                top.dom().carrier().element(i)
            ),
            witness: None,
        });
    }

    let point = compose_all(&[sigma, f_map, &da, a0])?;
    let conclusion_ok = sigma.after(&point)? == point;

    let dt = c.diagonal(t_prime)?;
    let pr_tt = projection(c, t_prime, t_prime)?;
    let id_t = Morphism::identity(t_prime);
    let facts = vec![
        Fact {
            name: "(a₀ # a₀)∘δ_t' = δ_A∘a₀".into(),
            holds: c.product_map(a0, a0).after(&dt)? == da.after(a0)?,
        },
        Fact {
            name: "pr₂∘(id # a₀) = a₀∘pr₂".into(),
            holds: pr.after(&c.product_map(&id_t, a0))? == a0.after(&pr_tt)?,
        },
        Fact {
            name: "pr₂∘δ_t' = id".into(),
            holds: pr_tt.after(&dt)?.is_identity(),
        },
    ];
    Ok(FixedPointReport {
        a0: a0.clone(),
        lift: None,
        c: point,
        hypothesis_ok: true,
        conclusion_ok,
        facts,
    })
}
