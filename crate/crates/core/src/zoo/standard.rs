//! Small ready-made instances of every variant, with carriers of size at
//! most three.

use std::sync::Arc;

use super::{
    build_category, twist_by_endofunctor, AdjoinBottom, BottomPoint, InstanceSpec, ObjectSpec,
    Params, Side, SliceProduct, TimesBase, Variant, ZooError,
};
use crate::category::CategoryInstance;
use crate::kernel::FiniteSet;

fn s(v: &[&str]) -> Vec<String> {
    v.iter().map(|e| e.to_string()).collect()
}

/// Finite sets `1 = {*}`, `2 = {0,1}`, `3 = {0,1,2}` with `t = 1`.
pub fn finset_spec() -> InstanceSpec {
    InstanceSpec::new(Variant::Finset, "1")
        .with_object(ObjectSpec::plain("1", &["*"]))
        .with_object(ObjectSpec::plain("2", &["0", "1"]))
        .with_object(ObjectSpec::plain("3", &["0", "1", "2"]))
}

/// The same sets with injections only.
pub fn fininj_spec() -> InstanceSpec {
    InstanceSpec {
        variant: Variant::Fininj,
        ..finset_spec()
    }
}

/// Pointed sets `P1 = {*}`, `P2 = {*,a}`, `P3 = {*,a,b}` pointed at `*`.
pub fn pointed_spec(variant: Variant) -> InstanceSpec {
    InstanceSpec::new(variant, "P1")
        .with_object(ObjectSpec::pointed("P1", &["*"], "*"))
        .with_object(ObjectSpec::pointed("P2", &["*", "a"], "*"))
        .with_object(ObjectSpec::pointed("P3", &["*", "a", "b"], "*"))
}

/// Sets over `X = {x,y}`: the terminal `E`, and `U`, `V`, `W`.
pub fn slice_spec(product: SliceProduct) -> InstanceSpec {
    InstanceSpec::new(Variant::Slice, "E")
        .with_params(Params {
            base_set: s(&["x", "y"]),
            slice_product: Some(product),
            ..Params::default()
        })
        .with_object(ObjectSpec::over("E", &[("ex", "x"), ("ey", "y")]))
        .with_object(ObjectSpec::over("U", &[("u", "x")]))
        .with_object(ObjectSpec::over("V", &[("v1", "x"), ("v2", "y")]))
        .with_object(ObjectSpec::over(
            "W",
            &[("w1", "x"), ("w2", "x"), ("w3", "y")],
        ))
}

/// Cosemigroups with identity and non-identity comultiplications.
pub fn cosemigroup_spec() -> InstanceSpec {
    InstanceSpec::new(Variant::Cosemigroup, "C1")
        .with_object(ObjectSpec::comagma("C1", &[("*", ("*", "*"))]))
        .with_object(ObjectSpec::comagma(
            "I2",
            &[("0", ("0", "0")), ("1", ("1", "1"))],
        ))
        .with_object(ObjectSpec::comagma(
            "K2",
            &[("0", ("0", "0")), ("1", ("0", "0"))],
        ))
        .with_object(ObjectSpec::comagma(
            "K3",
            &[("0", ("0", "0")), ("1", ("0", "0")), ("2", ("2", "2"))],
        ))
}

fn chain(op: impl Fn(usize, usize) -> usize) -> Params {
    let names = ["0", "1", "2"];
    let mut table = Vec::new();
    for (i, a) in names.iter().enumerate() {
        for (j, b) in names.iter().enumerate() {
            table.push((a.to_string(), b.to_string(), names[op(i, j)].to_string()));
        }
    }
    Params {
        elements: s(&names),
        order: vec![("0".into(), "1".into()), ("1".into(), "2".into())],
        op: table,
        ..Params::default()
    }
}

/// The chain `0 < 1 < 2` with `a·b = min(a, b)`; residuated, so closed.
pub fn ordered_min_spec() -> InstanceSpec {
    InstanceSpec::new(Variant::OrderedMagma, "2").with_params(chain(usize::min))
}

/// The chain `0 < 1 < 2` with `a·b = max(a, b)`.
pub fn ordered_max_spec() -> InstanceSpec {
    InstanceSpec::new(Variant::OrderedMagma, "0").with_params(chain(usize::max))
}

fn build(spec: InstanceSpec) -> CategoryInstance {
    build_category(&spec).expect("standard specs are valid")
}

pub fn finset() -> CategoryInstance {
    build(finset_spec())
}

pub fn fininj() -> CategoryInstance {
    build(fininj_spec())
}

pub fn smash() -> CategoryInstance {
    build(pointed_spec(Variant::Smash))
}

pub fn pointed_bot() -> CategoryInstance {
    build(pointed_spec(Variant::PointedBot))
}

pub fn slice() -> CategoryInstance {
    build(slice_spec(SliceProduct::Twisted))
}

pub fn slice_fibered() -> CategoryInstance {
    build(slice_spec(SliceProduct::Fibered))
}

pub fn cosemigroup() -> CategoryInstance {
    build(cosemigroup_spec())
}

pub fn ordered_min() -> CategoryInstance {
    build(ordered_min_spec())
}

pub fn ordered_max() -> CategoryInstance {
    build(ordered_max_spec())
}

/// Finite sets with `A ₜ# B = (A ⊔ {⊥}) × B`, which has right projections.
pub fn finset_left_twisted() -> Result<CategoryInstance, ZooError> {
    twist_by_endofunctor(
        &finset(),
        Arc::new(AdjoinBottom::new(BottomPoint::Inclusion)),
        Side::Left,
    )
}

/// The smash product twisted on the right by `⊥`, whose only natural
/// point is the zero map.
pub fn smash_right_twisted() -> Result<CategoryInstance, ZooError> {
    twist_by_endofunctor(
        &smash(),
        Arc::new(AdjoinBottom::new(BottomPoint::Zero)),
        Side::Right,
    )
}

/// The fibered slice twisted on the left by `− × X`.
pub fn slice_left_twisted() -> Result<CategoryInstance, ZooError> {
    let base = Arc::new(FiniteSet::new("X", ["x", "y"]).expect("distinct"));
    twist_by_endofunctor(&slice_fibered(), Arc::new(TimesBase::new(base)), Side::Left)
}

/// Every standard instance, named.
pub fn all() -> Vec<(&'static str, CategoryInstance)> {
    vec![
        ("finset", finset()),
        ("fininj", fininj()),
        ("smash", smash()),
        ("pointed_bot", pointed_bot()),
        ("slice", slice()),
        ("slice_fibered", slice_fibered()),
        ("cosemigroup", cosemigroup()),
        ("ordered_min", ordered_min()),
        ("ordered_max", ordered_max()),
        (
            "finset_left_twisted",
            finset_left_twisted().expect("inclusion is natural"),
        ),
        (
            "smash_right_twisted",
            smash_right_twisted().expect("zero point is natural"),
        ),
        (
            "slice_left_twisted",
            slice_left_twisted().expect("ι is natural"),
        ),
    ]
}

/// The instances that come with internal hom candidates.
pub fn closed() -> Vec<(&'static str, CategoryInstance)> {
    vec![
        ("finset", finset()),
        ("smash", smash()),
        ("pointed_bot", pointed_bot()),
        ("slice", slice()),
        ("ordered_min", ordered_min()),
    ]
}
