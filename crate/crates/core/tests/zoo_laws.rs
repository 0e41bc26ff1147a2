use std::sync::Arc;

use magmoid::category::{
    check_bifunctoriality, check_diagonal_naturality, check_hom_closure, t_points, Morphism, Scope,
};
use magmoid::zoo::{
    build_category, check_copointed, check_idempotent_comonad, make_flat, morphism, standard,
    twist_by_endofunctor, AdjoinBottom, BottomPoint, FlatPatch, FlatVariant, IdentityFunctor,
    InstanceSpec, ObjectSpec, Params, Side, Variant, ZooError,
};

#[test]
fn every_standard_instance_satisfies_the_axioms() {
    for (name, c) in standard::all() {
        let closure = check_hom_closure(&c).unwrap();
        assert!(closure.passed(), "{name}: {:?}", closure.first_violation());
        let bif = check_bifunctoriality(&c).unwrap();
        assert!(bif.passed(), "{name}: {:?}", bif.first_violation());
        assert!(bif.checked > 0, "{name}");
        let nat = check_diagonal_naturality(&c, &Scope::All).unwrap();
        assert!(nat.passed(), "{name}: {:?}", nat.first_violation());
    }
}

#[test]
fn naturality_everywhere_implies_naturality_at_points() {
    for (name, c) in standard::all() {
        for a in c.objects() {
            let local = check_diagonal_naturality(&c, &Scope::TAnd(a.clone())).unwrap();
            assert!(local.passed(), "{name} at {a}");
        }
    }
}

#[test]
fn smash_of_two_point_sets_has_two_elements() {
    let spec = InstanceSpec::new(Variant::Smash, "A")
        .with_object(ObjectSpec::pointed("A", &["*", "a"], "*"))
        .with_object(ObjectSpec::pointed("B", &["*", "b"], "*"));
    let c = build_category(&spec).unwrap();
    let p = c.product(&c.object("A").unwrap(), &c.object("B").unwrap());
    assert_eq!(p.carrier().elements(), ["(a,b)", "*"]);
    assert_eq!(p.base(), Some(1));
}

/// Pairs `(x, y)` of the cartesian product, and the pointed quotient
/// computed directly from the defining relation.
fn quotient_oracle(x: &[&str], x0: &str, y: &[&str], y0: &str, smash: bool) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for a in x {
        for b in y {
            let collapsed = *a == x0 || (smash && *b == y0);
            if !collapsed {
                out.push(format!("({a},{b})"));
            }
        }
    }
    out.push("*".into());
    out.sort();
    out
}

#[test]
fn pointed_products_match_their_defining_quotients() {
    for (variant, smash) in [(Variant::Smash, true), (Variant::PointedBot, false)] {
        let c = build_category(&standard::pointed_spec(variant)).unwrap();
        for x in c.objects() {
            for y in c.objects() {
                let xs: Vec<&str> = x.carrier().elements().iter().map(String::as_str).collect();
                let ys: Vec<&str> = y.carrier().elements().iter().map(String::as_str).collect();
                let expected = quotient_oracle(&xs, "*", &ys, "*", smash);
                assert_eq!(c.product(x, y).carrier().elements(), expected.as_slice());
            }
        }
    }
}

#[test]
fn pointed_points_are_unique() {
    let c = standard::smash();
    for a in c.objects() {
        assert_eq!(t_points(&c, a).unwrap().len(), 1);
    }
}

#[test]
fn right_twist_of_smash_by_bottom_has_the_collapsed_row_product() {
    let twisted = standard::smash_right_twisted().unwrap();
    let direct = standard::pointed_bot();
    for x in direct.objects() {
        for y in direct.objects() {
            assert_eq!(
                twisted.product(x, y).carrier().elements(),
                direct.product(x, y).carrier().elements()
            );
            for f in direct.hom(x, x).unwrap() {
                for g in direct.hom(y, y).unwrap() {
                    assert_eq!(
                        twisted.product_map(&f, &g).table(),
                        direct.product_map(&f, &g).table()
                    );
                }
            }
        }
    }
    let p2 = direct.object("P2").unwrap();
    let d = twisted.diagonal(&p2).unwrap();
    let base = d.cod().base().unwrap();
    assert!(
        d.table().iter().all(|&i| i == base),
        "natural ι on pointed sets is zero"
    );
}

#[test]
fn non_natural_point_is_rejected() {
    let err = twist_by_endofunctor(
        &standard::smash(),
        Arc::new(AdjoinBottom::new(BottomPoint::Naive)),
        Side::Right,
    )
    .unwrap_err();
    assert!(matches!(err, ZooError::NotNatural { .. }), "{err:?}");
}

#[test]
fn identity_twist_changes_nothing() {
    let c = standard::finset();
    let t = twist_by_endofunctor(&c, Arc::new(IdentityFunctor), Side::Left).unwrap();
    for x in c.objects() {
        for y in c.objects() {
            assert_eq!(t.product(x, y), c.product(x, y));
        }
        assert_eq!(t.diagonal(x).unwrap(), c.diagonal(x).unwrap());
    }
}

#[test]
fn twisted_slice_product_factors_through_the_second_coordinate() {
    let c = standard::slice();
    let tw = standard::slice_left_twisted().unwrap();
    for a in c.objects() {
        for b in c.objects() {
            let direct = c.product(a, b);
            let via_t = tw.product(a, b);
            assert_eq!(direct.len(), a.len() * b.len());
            assert_eq!(via_t.len(), direct.len(), "T(A) ×_X B ≅ A × B");
        }
    }
}

#[test]
fn fininj_has_no_projections_out_of_squares() {
    let c = standard::fininj();
    for a in c.objects().iter().filter(|a| a.len() >= 2) {
        let aa = c.product(a, a);
        assert!(c.hom(&aa, a).unwrap().is_empty());
        assert!(c.is_morphism(&c.diagonal(a).unwrap()));
    }
}

#[test]
fn ordered_magma_is_thin_with_diagonals() {
    for c in [standard::ordered_min(), standard::ordered_max()] {
        for x in c.objects() {
            for y in c.objects() {
                assert!(c.hom(x, y).unwrap().len() <= 1);
            }
            assert!(c.diagonal(x).is_ok());
        }
    }
}

#[test]
fn invalid_specs_are_rejected() {
    let bad_order = InstanceSpec::new(Variant::OrderedMagma, "0").with_params(Params {
        elements: vec!["0".into(), "1".into()],
        order: vec![("0".into(), "1".into())],
        op: vec![
            ("0".into(), "0".into(), "0".into()),
            ("0".into(), "1".into(), "1".into()),
            ("1".into(), "0".into(), "1".into()),
            ("1".into(), "1".into(), "0".into()),
        ],
        ..Params::default()
    });
    let err = build_category(&bad_order).unwrap_err().to_string();
    assert!(err.contains("≤") || err.contains("monotone"), "{err}");

    let not_coassoc = InstanceSpec::new(Variant::Cosemigroup, "A").with_object(
        ObjectSpec::comagma("A", &[("0", ("1", "1")), ("1", ("0", "0"))]),
    );
    let err = build_category(&not_coassoc).unwrap_err().to_string();
    assert!(err.contains("coassociative"), "{err}");

    let not_cocomm = InstanceSpec::new(Variant::Cosemigroup, "A").with_object(ObjectSpec::comagma(
        "A",
        &[("0", ("0", "0")), ("1", ("1", "0"))],
    ));
    let err = build_category(&not_cocomm).unwrap_err().to_string();
    assert!(err.contains("cocommutative"), "{err}");

    let unpointed =
        InstanceSpec::new(Variant::Smash, "A").with_object(ObjectSpec::plain("A", &["a"]));
    assert!(build_category(&unpointed).is_err());
}

#[test]
fn cosemigroup_homs_are_exactly_the_comultiplication_maps() {
    let c = standard::cosemigroup();
    for x in c.objects() {
        let dx = c.diagonal(x).unwrap();
        for y in c.objects() {
            let dy = c.diagonal(y).unwrap();
            let accepted = c.hom(x, y).unwrap();
            for f in magmoid::kernel::functions(x.carrier().clone(), y.carrier().clone()) {
                let f = Morphism::from_function(x.clone(), y.clone(), f).unwrap();
                let compatible = c.product_map(&f, &f).after(&dx).unwrap() == dy.after(&f).unwrap();
                assert_eq!(accepted.contains(&f), compatible, "{f}");
            }
        }
    }
}

#[test]
fn flat_variants_are_copointed_comonads() {
    for (c, variant) in [
        (standard::finset(), FlatVariant::Identity),
        (standard::pointed_bot(), FlatVariant::Identity),
        (standard::pointed_bot(), FlatVariant::Trivializing),
        (standard::smash(), FlatVariant::Trivializing),
    ] {
        let flat = make_flat(&c, variant.clone()).unwrap();
        let r = check_copointed(&flat).unwrap();
        assert!(r.passed(), "{variant:?}: {:?}", r.first_violation());
        let r = check_idempotent_comonad(&flat).unwrap();
        assert!(r.passed(), "{variant:?}: {:?}", r.first_violation());
    }
}

#[test]
fn trivializing_crisp_maps_are_points() {
    let c = standard::pointed_bot();
    let flat = make_flat(&c, FlatVariant::Trivializing).unwrap();
    for a in c.objects() {
        for b in c.objects() {
            let crisp = c.hom(&flat.object(a), b).unwrap();
            // A basepoint-preserving map out of a one-point set is forced.
            assert_eq!(crisp.len(), 1);
            assert_eq!(crisp[0].apply(0), b.base().unwrap());
        }
    }
}

#[test]
fn corrupted_flat_data_is_caught() {
    let c = standard::finset();
    let flat = make_flat(&c, FlatVariant::Identity)
        .unwrap()
        .patched(FlatPatch::Counit {
            object: "2".into(),
            index: 0,
            image: 1,
        });
    let r = check_copointed(&flat).unwrap();
    assert!(!r.passed());
    assert!(!r.first_violation().unwrap().witnesses.is_empty());

    let flat = make_flat(&c, FlatVariant::Identity)
        .unwrap()
        .patched(FlatPatch::Comultiplication {
            object: "2".into(),
            index: 0,
            image: 1,
        });
    let r = check_idempotent_comonad(&flat).unwrap();
    assert!(
        r.violations.iter().any(|v| v.law.starts_with("(CU)")),
        "{:?}",
        r.violations
    );

    let flat = make_flat(&c, FlatVariant::Identity)
        .unwrap()
        .without_comultiplication();
    assert!(matches!(
        check_idempotent_comonad(&flat),
        Err(ZooError::MissingComultiplication)
    ));
}

#[test]
fn custom_flat_restricts_and_detects_undefined_images() {
    let c = standard::finset();
    let kept = [("3".to_string(), vec!["0".to_string(), "1".to_string()])]
        .into_iter()
        .collect();
    let flat = make_flat(&c, FlatVariant::Custom(kept)).unwrap();
    assert_eq!(flat.object(&c.object("3").unwrap()).len(), 2);
    let r = check_copointed(&flat).unwrap();
    assert!(!r.passed(), "maps into 3 hitting 2 cannot restrict");
}

#[test]
fn morphism_helper_checks_the_hom_predicate() {
    let c = standard::fininj();
    let two = c.object("2").unwrap();
    assert!(morphism(&c, &two, &two, &[("0", "1"), ("1", "0")]).is_ok());
    assert!(morphism(&c, &two, &two, &[("0", "1"), ("1", "1")]).is_err());
}
