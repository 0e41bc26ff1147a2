//! Internal homs certified by enumeration, currying, and the uniform
//! fixed-point constructions `♭(C^C) → C`.

use serde::Serialize;
use thiserror::Error;

use crate::category::{compose_all, CategoryError, CategoryInstance, Morphism, Object};
use crate::kernel::KernelError;
use crate::theorems::{expect_shape, Fact, TheoremError};
use crate::zoo::{make_flat, FlatEndofunctor, FlatVariant, ZooError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniformError {
    #[error("not representable at probe {probe}: {detail}")]
    NotRepresentable {
        probe: String,
        detail: String,
        witness: Option<Morphism>,
    },
    #[error("no f : {probe} → Y^X with ev∘(f # id) = {g}")]
    NoSolution { probe: String, g: Morphism },
    #[error("{count} morphisms {probe} → Y^X curry the same map")]
    MultipleSolutions { probe: String, count: usize },
    #[error("{detail}")]
    NotASection { detail: String },
    #[error("hypothesis fails: {detail}")]
    HypothesisFailed { detail: String },
    #[error("the endofunctor has no comultiplication")]
    MissingComultiplication,
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
}

impl From<KernelError> for UniformError {
    fn from(e: KernelError) -> Self {
        UniformError::Category(CategoryError::Kernel(e))
    }
}

impl From<TheoremError> for UniformError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Category(e) => UniformError::Category(e),
            TheoremError::Shape(s) => UniformError::Shape(s),
            other => UniformError::HypothesisFailed {
                detail: other.to_string(),
            },
        }
    }
}

impl From<ZooError> for UniformError {
    fn from(e: ZooError) -> Self {
        match e {
            ZooError::MissingComultiplication => UniformError::MissingComultiplication,
            ZooError::Category(e) => UniformError::Category(e),
            other => UniformError::Shape(other.to_string()),
        }
    }
}

impl UniformError {
    pub fn is_budget(&self) -> bool {
        matches!(self, UniformError::Category(e) if e.is_budget())
    }
}

/// Sizes of the two hom-sets matched up at one probe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeCertificate {
    pub probe: String,
    /// `|Hom(W, Y^X)|`, equal to `|Hom(W # X, Y)|` when certified.
    pub morphisms: usize,
}

/// `Y^X` with `ev : Y^X # X → Y`, and the probes `W` at which
/// `f ↦ ev∘(f # id_X)` was verified to be a bijection
/// `Hom(W, Y^X) ≅ Hom(W # X, Y)`.
#[derive(Debug, Clone, Serialize)]
pub struct InternalHom {
    #[serde(skip)]
    pub base: CategoryInstance,
    pub x: Object,
    pub y: Object,
    pub hom: Object,
    pub ev: Morphism,
    pub certificate: Vec<ProbeCertificate>,
}

/// `ev∘(f # id_X)`.
pub fn uncurry(hom: &InternalHom, f: &Morphism) -> Result<Morphism, UniformError> {
    let c = &hom.base;
    Ok(hom
        .ev
        .after(&c.product_map(f, &Morphism::identity(&hom.x)))?)
}

/// Certifies a candidate internal hom at every probe.
pub fn check_internal_hom(
    c: &CategoryInstance,
    x: &Object,
    y: &Object,
    candidate: (Object, Morphism),
    probes: &[Object],
) -> Result<InternalHom, UniformError> {
    let (hom_obj, ev) = candidate;
    expect_shape(c, &ev, &c.product(&hom_obj, x), y, "ev")?;
    let mut hom = InternalHom {
        base: c.clone(),
        x: x.clone(),
        y: y.clone(),
        hom: hom_obj,
        ev,
        certificate: Vec::new(),
    };
    for w in probes {
        let fail = |detail: String, witness: Option<Morphism>| UniformError::NotRepresentable {
            probe: w.id().to_string(),
            detail,
            witness,
        };
        let mut image = std::collections::HashMap::new();
        let curried = c.hom(w, &hom.hom)?;
        for f in &curried {
            let g = uncurry(&hom, f)?;
            if let Some(other) = image.insert(g.clone(), f.clone()) {
                return Err(fail(
                    format!("{other} and {f} uncurry to the same map"),
                    Some(g),
                ));
            }
        }
        let uncurried = c.hom(&c.product(w, x), y)?;
        if let Some(g) = uncurried.iter().find(|g| !image.contains_key(*g)) {
            return Err(fail(format!("{g} has no curried form"), Some(g.clone())));
        }
        if uncurried.len() != image.len() {
            return Err(fail("uncurried maps fall outside the hom-set".into(), None));
        }
        hom.certificate.push(ProbeCertificate {
            probe: w.id().to_string(),
            morphisms: curried.len(),
        });
    }
    Ok(hom)
}

/// Certifies the instance's own candidate for `Y^X`.
pub fn certify(
    c: &CategoryInstance,
    x: &Object,
    y: &Object,
    probes: &[Object],
) -> Result<InternalHom, UniformError> {
    let candidate = c
        .internal_hom(x, y)
        .ok_or_else(|| UniformError::NotRepresentable {
            probe: String::new(),
            detail: format!("the instance has no candidate for {}^{}", y.id(), x.id()),
            witness: None,
        })?;
    check_internal_hom(c, x, y, candidate, probes)
}

/// The unique `f : W → Y^X` with `ev∘(f # id) = g`, found by search.
pub fn curry(hom: &InternalHom, g: &Morphism, w: &Object) -> Result<Morphism, UniformError> {
    let c = &hom.base;
    expect_shape(c, g, &c.product(w, &hom.x), &hom.y, "g")?;
    let mut found = Vec::new();
    for f in c.hom(w, &hom.hom)? {
        if uncurry(hom, &f)? == *g {
            found.push(f);
        }
    }
    match found.len() {
        0 => Err(UniformError::NoSolution {
            probe: w.id().to_string(),
            g: g.clone(),
        }),
        1 => Ok(found.pop().expect("one solution")),
        count => Err(UniformError::MultipleSolutions {
            probe: w.id().to_string(),
            count,
        }),
    }
}

/// Which index and section data a uniform fixed point is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UniformVariant {
    /// `idx : ♭(C^C) → A`, `s : A → B`.
    Plain,
    /// `idx : ♭(C^C) → A`, crisp `s : ♭A → B`; needs `m`.
    CrispSection,
    /// `idx : C^C → A`, crisp `s : ♭A → B`.
    CrispIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformFixReport {
    pub variant: UniformVariant,
    pub idx: Morphism,
    /// `♭(C^C) → C`.
    pub fix: Morphism,
    pub hypothesis_ok: bool,
    /// `ev∘(e # fix)∘δ = fix`.
    pub conclusion_ok: bool,
}

fn first_difference(f: &Morphism, g: &Morphism) -> Option<String> {
    (0..f.dom().len())
        .find(|&i| f.apply(i) != g.apply(i))
        .map(|i| f.dom().carrier().element(i).to_string())
}

/// Checks `F∘(idx # id_B) = ev∘(id # F)∘(e # ((p # id)∘δ_B))` as maps
/// `♭(C^C) # B → C`.
fn check_rectangle(
    c: &CategoryInstance,
    flat: &FlatEndofunctor,
    e_hom: &InternalHom,
    p: &Morphism,
    f_map: &Morphism,
    idx: &Morphism,
) -> Result<(), UniformError> {
    let e_obj = &e_hom.hom;
    let b_obj = p.dom();
    let top = f_map.after(&c.product_map(idx, &Morphism::identity(b_obj)))?;
    let p_id = c.product_map(p, &Morphism::identity(b_obj));
    let down = c.product_map(&flat.counit(e_obj), &p_id.after(&c.diagonal(b_obj)?)?);
    let bottom = compose_all(&[
        &e_hom.ev,
        &c.product_map(&Morphism::identity(e_obj), f_map),
        &down,
    ])?;
    match first_difference(&top, &bottom) {
        Some(at) => Err(UniformError::HypothesisFailed {
            detail: format!("F∘(idx # id) ≠ ev∘(id # F)∘(e # (p # id)∘δ_B) at {at}"),
        }),
        None => Ok(()),
    }
}

/// `ev∘(e # fix)∘δ = fix`.
fn fixes(
    c: &CategoryInstance,
    flat: &FlatEndofunctor,
    e_hom: &InternalHom,
    fix: &Morphism,
) -> Result<bool, UniformError> {
    let dom = fix.dom();
    let lhs = compose_all(&[
        &e_hom.ev,
        &c.product_map(&flat.counit(&e_hom.hom), fix),
        &c.diagonal(dom)?,
    ])?;
    Ok(lhs == *fix)
}

struct Setup {
    a_obj: Object,
    b_obj: Object,
    c_obj: Object,
    flat_e: Object,
}

fn setup(
    c: &CategoryInstance,
    flat: &FlatEndofunctor,
    e_hom: &InternalHom,
    p: &Morphism,
    f_map: &Morphism,
) -> Result<Setup, UniformError> {
    let c_obj = e_hom.y.clone();
    if e_hom.x != c_obj {
        return Err(UniformError::Shape(format!(
            "expected an internal hom C^C, got {}^{}",
            e_hom.y.id(),
            e_hom.x.id()
        )));
    }
    let (b_obj, a_obj) = (p.dom().clone(), p.cod().clone());
    expect_shape(c, p, &b_obj, &a_obj, "p")?;
    expect_shape(c, f_map, &c.product(&a_obj, &b_obj), &c_obj, "F")?;
    if !p.function().is_surjective() {
        return Err(UniformError::NotASection {
            detail: "p is not an epimorphism".into(),
        });
    }
    Ok(Setup {
        flat_e: flat.object(&e_hom.hom),
        a_obj,
        b_obj,
        c_obj,
    })
}

/// Given `idx : ♭(C^C) → A` satisfying the hypothesis rectangle,
/// `fix = F∘(id # s)∘δ_A∘idx` returns fixed points.
pub fn uniform_fix(
    c: &CategoryInstance,
    flat: &FlatEndofunctor,
    e_hom: &InternalHom,
    p: &Morphism,
    s: &Morphism,
    f_map: &Morphism,
    idx: &Morphism,
) -> Result<UniformFixReport, UniformError> {
    let st = setup(c, flat, e_hom, p, f_map)?;
    expect_shape(c, s, &st.a_obj, &st.b_obj, "s")?;
    expect_shape(c, idx, &st.flat_e, &st.a_obj, "idx")?;
    if !p.after(s)?.is_identity() {
        return Err(UniformError::NotASection {
            detail: "p∘s ≠ id".into(),
        });
    }
    check_rectangle(c, flat, e_hom, p, f_map, idx)?;
    let id_s = c.product_map(&Morphism::identity(&st.a_obj), s);
    let fix = compose_all(&[f_map, &id_s, &c.diagonal(&st.a_obj)?, idx])?;
    debug_assert_eq!(fix.cod(), &st.c_obj);
    let conclusion_ok = fixes(c, flat, e_hom, &fix)?;
    Ok(UniformFixReport {
        variant: UniformVariant::Plain,
        idx: idx.clone(),
        fix,
        hypothesis_ok: true,
        conclusion_ok,
    })
}

/// The crisp variants, with `s_flat : ♭A → B` satisfying `p∘s_flat = e_A`.
///
/// `CrispSection` takes `idx : ♭(C^C) → A` and builds
/// `fix = F∘(e_A # s_flat)∘δ_♭A∘♭(idx)∘m`. `CrispIndex` takes a plain
/// `idx : C^C → A`, builds `fix = F∘(e_A # s_flat)∘δ_♭A∘♭(idx)`, and its
/// hypothesis is the rectangle for `idx∘e`.
#[allow(clippy::too_many_arguments)]
pub fn uniform_fix_crisp(
    c: &CategoryInstance,
    flat: &FlatEndofunctor,
    e_hom: &InternalHom,
    p: &Morphism,
    s_flat: &Morphism,
    f_map: &Morphism,
    idx: &Morphism,
    variant: UniformVariant,
) -> Result<UniformFixReport, UniformError> {
    let st = setup(c, flat, e_hom, p, f_map)?;
    let flat_a = flat.object(&st.a_obj);
    let e_a = flat.counit(&st.a_obj);
    expect_shape(c, s_flat, &flat_a, &st.b_obj, "s♭")?;
    if p.after(s_flat)? != e_a {
        return Err(UniformError::NotASection {
            detail: "p∘s♭ ≠ e_A".into(),
        });
    }
    let tail = compose_all(&[f_map, &c.product_map(&e_a, s_flat), &c.diagonal(&flat_a)?])?;
    let (rectangle_idx, fix) = match variant {
        UniformVariant::Plain => {
            return Err(UniformError::Shape(
                "use uniform_fix for the plain variant".into(),
            ))
        }
        UniformVariant::CrispSection => {
            expect_shape(c, idx, &st.flat_e, &st.a_obj, "idx♭")?;
            let m = flat.comultiplication(&e_hom.hom)?;
            let fix = compose_all(&[&tail, &flat.map(idx)?, &m])?;
            (idx.clone(), fix)
        }
        UniformVariant::CrispIndex => {
            expect_shape(c, idx, &e_hom.hom, &st.a_obj, "idx")?;
            let fix = tail.after(&flat.map(idx)?)?;
            (idx.after(&flat.counit(&e_hom.hom))?, fix)
        }
    };
    check_rectangle(c, flat, e_hom, p, f_map, &rectangle_idx)?;
    let conclusion_ok = fixes(c, flat, e_hom, &fix)?;
    Ok(UniformFixReport {
        variant,
        idx: idx.clone(),
        fix,
        hypothesis_ok: true,
        conclusion_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitEpiFix {
    /// `F = ev∘(α # id) : A # A → C`.
    pub f_map: Morphism,
    /// `(F∘δ)* : C^C → C^A`.
    pub curried: Morphism,
    /// `ℓ∘(F∘δ)*`.
    pub idx: Morphism,
    /// `F∘δ_A∘ℓ∘(F∘δ)* : C^C → C`.
    pub fix: Morphism,
    /// The intermediate squares of the construction.
    pub squares: Vec<Fact>,
    /// The uniform fixed-point theorem applied with `♭ = Id`, `B = A`,
    /// `p = s = id`.
    pub uniform: UniformFixReport,
}

impl SplitEpiFix {
    pub fn verified(&self) -> bool {
        self.squares.iter().all(|f| f.holds) && self.uniform.conclusion_ok
    }
}

/// Builds `fix : C^C → C` from a split epi `α : A → C^A` with section `ℓ`.
pub fn fix_from_split_epi(
    c: &CategoryInstance,
    a_obj: &Object,
    ca_hom: &InternalHom,
    cc_hom: &InternalHom,
    alpha: &Morphism,
    ell: &Morphism,
) -> Result<SplitEpiFix, UniformError> {
    let c_obj = cc_hom.y.clone();
    if cc_hom.x != c_obj || ca_hom.x != *a_obj || ca_hom.y != c_obj {
        return Err(UniformError::Shape(
            "expected internal homs C^C and C^A".into(),
        ));
    }
    let (e_obj, ca_obj) = (&cc_hom.hom, &ca_hom.hom);
    expect_shape(c, alpha, a_obj, ca_obj, "α")?;
    expect_shape(c, ell, ca_obj, a_obj, "ℓ")?;
    if !alpha.after(ell)?.is_identity() {
        return Err(UniformError::NotASection {
            detail: "α∘ℓ ≠ id".into(),
        });
    }
    let id_a = Morphism::identity(a_obj);
    let id_e = Morphism::identity(e_obj);
    let da = c.diagonal(a_obj)?;
    let f_map = ca_hom.ev.after(&c.product_map(alpha, &id_a))?;
    let g = compose_all(&[
        &cc_hom.ev,
        &c.product_map(&id_e, &f_map),
        &c.product_map(&id_e, &da),
    ])?;
    let curried = curry(ca_hom, &g, e_obj)?;
    let idx = ell.after(&curried)?;
    let fix = compose_all(&[&f_map, &da, &idx])?;

    let inserted = alpha.after(&idx)?;
    let squares = vec![
        Fact {
            name: "ev∘((F∘δ)* # id) = ev∘(id # F)∘(id # δ)".into(),
            holds: uncurry(ca_hom, &curried)? == g,
        },
        Fact {
            name: "ev∘((α∘ℓ∘(F∘δ)*) # id) = ev∘(id # F)∘(id # δ)".into(),
            holds: uncurry(ca_hom, &inserted)? == g,
        },
        Fact {
            name: "F∘(idx # id) = ev∘(id # F)∘(id # δ)".into(),
            holds: f_map.after(&c.product_map(&idx, &id_a))? == g,
        },
    ];
    let identity = make_flat(c, FlatVariant::Identity)?;
    let uniform = uniform_fix(c, &identity, cc_hom, &id_a, &id_a, &f_map, &idx)?;
    let mut squares = squares;
    squares.push(Fact {
        name: "fix agrees with the uniform construction".into(),
        holds: uniform.fix == fix,
    });
    Ok(SplitEpiFix {
        f_map,
        curried,
        idx,
        fix,
        squares,
        uniform,
    })
}

/// The reflexive-object case `A = C`, `α = app`, `ℓ = lam`.
pub fn fix_reflexive(
    c: &CategoryInstance,
    c_obj: &Object,
    cc_hom: &InternalHom,
    app: &Morphism,
    lam: &Morphism,
) -> Result<SplitEpiFix, UniformError> {
    if !app.function().is_surjective() {
        return Err(UniformError::NotASection {
            detail: "app is not an epimorphism".into(),
        });
    }
    fix_from_split_epi(c, c_obj, cc_hom, cc_hom, app, lam)
}
