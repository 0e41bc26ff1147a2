use serde::Serialize;

use super::{CategoryError, CategoryInstance, Morphism, Object};

/// All morphisms `t → a`, in enumeration order.
pub fn t_points(c: &CategoryInstance, a: &Object) -> Result<Vec<Morphism>, CategoryError> {
    c.hom(c.t(), a)
}

/// Result of testing an endomorphism for `t`-freeness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TFreeness {
    pub free: bool,
    /// A `t`-point fixed by the endomorphism, when one exists.
    pub fixed_point: Option<Morphism>,
    /// The object has no `t`-points at all, so freeness holds vacuously.
    pub vacuous: bool,
}

/// `σ` is `t`-free when `σ∘c ≠ c` for every `c : t → C`.
pub fn is_t_free(c: &CategoryInstance, sigma: &Morphism) -> Result<TFreeness, CategoryError> {
    if sigma.dom() != sigma.cod() {
        return Err(CategoryError::NotAMorphism {
            morphism: format!("{sigma} is not an endomorphism"),
        });
    }
    let points = t_points(c, sigma.dom())?;
    let vacuous = points.is_empty();
    for p in points {
        if sigma.after(&p)? == p {
            return Ok(TFreeness {
                free: false,
                fixed_point: Some(p),
                vacuous,
            });
        }
    }
    Ok(TFreeness {
        free: true,
        fixed_point: None,
        vacuous,
    })
}

/// Observational equality: `f∘x = g∘x` for every `x : t → dom`.
pub fn point_equal(
    c: &CategoryInstance,
    f: &Morphism,
    g: &Morphism,
) -> Result<bool, CategoryError> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Ok(false);
    }
    for x in t_points(c, f.dom())? {
        if f.after(&x)? != g.after(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
