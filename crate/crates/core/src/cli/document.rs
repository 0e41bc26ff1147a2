//! The instance file: an instance spec plus named morphisms and the roles
//! they play in each command.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::category::{CategoryInstance, Morphism, Object};
use crate::kernel::FiniteSet;
use crate::zoo::{
    build_category, make_flat, twist_by_endofunctor, AdjoinBottom, BottomPoint, FlatEndofunctor,
    FlatVariant, IdentityFunctor, InstanceSpec, ObjectSpec, Params, PointedEndofunctor, Side,
    TimesBase, Variant,
};

use super::InputError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub variant: Variant,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub objects: Vec<ObjectSpec>,
    pub t: String,
    #[serde(default)]
    pub twist: Option<TwistSpec>,
    /// Objects allowed to carry diagonals; all when absent.
    #[serde(default)]
    pub diagonal_scope: Option<Vec<String>>,
    #[serde(default)]
    pub flat: Option<FlatVariant>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    /// Role name to morphism name or object expression. A key
    /// `command.role` overrides `role` for that command only.
    #[serde(default)]
    pub roles: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistSpec {
    pub functor: FunctorSpec,
    #[serde(default)]
    pub point: Option<PointSpec>,
    pub side: SideSpec,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctorSpec {
    Identity,
    AdjoinBottom,
    /// `− × X` over the slice's base set.
    TimesBase,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointSpec {
    Zero,
    Inclusion,
    Naive,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub dom: String,
    pub cod: String,
    pub map: MapSpec,
}

/// Images either by domain label or listed in carrier order.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MapSpec {
    Labels(BTreeMap<String, String>),
    Table(Vec<String>),
}

impl Document {
    pub fn spec(&self) -> InstanceSpec {
        InstanceSpec {
            variant: self.variant,
            params: self.params.clone(),
            objects: self.objects.clone(),
            t: self.t.clone(),
        }
    }
}

/// A loaded document with its category built.
pub struct Loaded {
    pub doc: Document,
    pub category: CategoryInstance,
    pub flat: Option<FlatEndofunctor>,
    pub command: String,
}

pub fn read(path: &Path) -> Result<Document, InputError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| InputError::new(path, None, e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| {
        let at = (e.line() > 0).then(|| (e.line(), e.column()));
        InputError::new(path, at, e.to_string())
    })
}

pub fn load(path: &Path, cap: Option<u64>, command: &str) -> Result<Loaded, InputError> {
    let doc = read(path)?;
    let fail = |msg: String| InputError::new(path, None, msg);
    let mut c = build_category(&doc.spec()).map_err(|e| fail(e.to_string()))?;
    if let Some(tw) = &doc.twist {
        let functor: Arc<dyn PointedEndofunctor> = match tw.functor {
            FunctorSpec::Identity => Arc::new(IdentityFunctor),
            FunctorSpec::AdjoinBottom => Arc::new(AdjoinBottom::new(match tw.point {
                Some(PointSpec::Zero) => BottomPoint::Zero,
                Some(PointSpec::Inclusion) => BottomPoint::Inclusion,
                Some(PointSpec::Naive) => BottomPoint::Naive,
                None => return Err(fail("adjoin_bottom needs a point".into())),
            })),
            FunctorSpec::TimesBase => {
                let base = FiniteSet::new("X", doc.params.base_set.iter().cloned())
                    .map_err(|e| fail(e.to_string()))?;
                Arc::new(TimesBase::new(Arc::new(base)))
            }
        };
        let side = match tw.side {
            SideSpec::Left => Side::Left,
            SideSpec::Right => Side::Right,
        };
        c = twist_by_endofunctor(&c, functor, side).map_err(|e| fail(e.to_string()))?;
    }
    if let Some(scope) = &doc.diagonal_scope {
        c = c.with_diagonal_scope(scope.iter().cloned());
    }
    if let Some(cap) = cap {
        c = c.with_cap(cap);
    }
    let flat = match &doc.flat {
        Some(v) => Some(make_flat(&c, v.clone()).map_err(|e| fail(e.to_string()))?),
        None => None,
    };
    Ok(Loaded {
        doc,
        category: c,
        flat,
        command: command.to_string(),
    })
}

impl Loaded {
    fn role_value(&self, role: &str) -> Option<&String> {
        let roles = &self.doc.roles;
        roles
            .get(&format!("{}.{role}", self.command))
            .or_else(|| roles.get(role))
    }

    pub fn has_role(&self, role: &str) -> bool {
        self.role_value(role).is_some()
    }

    pub fn role(&self, role: &str) -> Result<&str, String> {
        self.role_value(role)
            .map(String::as_str)
            .ok_or_else(|| format!("missing role `{role}`"))
    }

    pub fn object(&self, expr: &str) -> Result<Object, String> {
        let mut p = ExprParser {
            text: expr.chars().collect(),
            pos: 0,
            loaded: self,
        };
        let o = p.expr()?;
        p.skip_space();
        if p.pos < p.text.len() {
            return Err(format!(
                "unexpected `{}` in object expression `{expr}`",
                p.text[p.pos]
            ));
        }
        Ok(o)
    }

    pub fn role_object(&self, role: &str) -> Result<Object, String> {
        self.object(self.role(role)?)
    }

    pub fn morphism(&self, name: &str) -> Result<Morphism, String> {
        let spec = self
            .doc
            .morphisms
            .get(name)
            .ok_or_else(|| format!("unknown morphism `{name}`"))?;
        let dom = self.object(&spec.dom)?;
        let cod = self.object(&spec.cod)?;
        let f = match &spec.map {
            MapSpec::Labels(m) => {
                let pairs: Vec<(&str, &str)> =
                    m.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                Morphism::from_pairs(dom, cod, &pairs)
            }
            MapSpec::Table(images) => {
                if images.len() != dom.len() {
                    return Err(format!(
                        "`{name}` lists {} images for {} elements",
                        images.len(),
                        dom.len()
                    ));
                }
                let table = images
                    .iter()
                    .map(|l| {
                        cod.carrier()
                            .index_of(l)
                            .ok_or_else(|| format!("`{name}`: no element `{l}` in {cod}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Morphism::new(dom, cod, table)
            }
        }
        .map_err(|e| format!("`{name}`: {e}"))?;
        self.category
            .require(&f)
            .map_err(|e| format!("`{name}`: {e}"))?;
        Ok(f)
    }

    pub fn role_morphism(&self, role: &str) -> Result<Morphism, String> {
        self.morphism(self.role(role)?)
    }
}

/// `expr := hom ('#' hom)?`, `hom := prim ('^' prim)?`,
/// `prim := ident | '(' expr ')' | 'flat' '(' expr ')'`. `Y^X` is the
/// internal hom from `X` to `Y`.
struct ExprParser<'a> {
    text: Vec<char>,
    pos: usize,
    loaded: &'a Loaded,
}

impl ExprParser<'_> {
    fn skip_space(&mut self) {
        while self.text.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_space();
        if self.text.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Object, String> {
        let left = self.hom()?;
        if self.eat('#') {
            let right = self.hom()?;
            return Ok(self.loaded.category.product(&left, &right));
        }
        Ok(left)
    }

    fn hom(&mut self) -> Result<Object, String> {
        let y = self.prim()?;
        if self.eat('^') {
            let x = self.prim()?;
            let (hom, _) = self
                .loaded
                .category
                .internal_hom(&x, &y)
                .ok_or_else(|| format!("the instance has no internal hom {y}^{x}"))?;
            return Ok(hom);
        }
        Ok(y)
    }

    fn prim(&mut self) -> Result<Object, String> {
        if self.eat('(') {
            let o = self.expr()?;
            if !self.eat(')') {
                return Err("expected `)` in object expression".into());
            }
            return Ok(o);
        }
        self.skip_space();
        let start = self.pos;
        while self
            .text
            .get(self.pos)
            .is_some_and(|c| !c.is_whitespace() && !"#^()".contains(*c))
        {
            self.pos += 1;
        }
        let ident: String = self.text[start..self.pos].iter().collect();
        if ident.is_empty() {
            return Err("expected an object".into());
        }
        if ident == "flat" && self.eat('(') {
            let inner = self.expr()?;
            if !self.eat(')') {
                return Err("expected `)` after flat(".into());
            }
            let flat = self
                .loaded
                .flat
                .as_ref()
                .ok_or("the document declares no flat")?;
            return Ok(flat.object(&inner));
        }
        self.loaded
            .category
            .object(&ident)
            .or_else(|_| match self.loaded.category.terminal() {
                Some(one) if one.id() == ident => Ok(one),
                _ => Err(format!("unknown object `{ident}`")),
            })
    }
}
