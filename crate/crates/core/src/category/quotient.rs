use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::checks::scope_objects;
use super::{t_points, CategoryError, CategoryInstance, CheckReport, Morphism, Object};

/// One hom-set partitioned into `=_t` classes. Classes are listed in the
/// order of their representatives, and each representative is the
/// lexicographically least table in its class.
#[derive(Debug, Clone, Serialize)]
pub struct HomClasses {
    pub dom: Object,
    pub cod: Object,
    pub classes: Vec<Vec<Morphism>>,
}

impl HomClasses {
    pub fn representative(&self, class: usize) -> &Morphism {
        &self.classes[class][0]
    }

    pub fn class_of(&self, f: &Morphism) -> Option<usize> {
        self.classes.iter().position(|cl| cl.contains(f))
    }

    pub fn morphism_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// The extensional quotient `C_{=t}`: same objects, morphisms identified
/// when they agree on every `t`-point.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientCategory {
    #[serde(skip)]
    pub base: CategoryInstance,
    pub t: Object,
    pub homs: Vec<HomClasses>,
    /// Composition is well defined on classes.
    pub congruence: CheckReport,
    /// `C(t, X) ≅ C_{=t}(Qt, QX)` for every object.
    pub point_bijection: CheckReport,
    /// `Hom(Qt, −)` is faithful on the quotient.
    pub faithfulness: CheckReport,
    /// `f =_t f'` and `g =_t g'` imply `f # g =_t f' # g'`.
    pub product_compatibility: CheckReport,
}

impl QuotientCategory {
    pub fn classes(&self, x: &Object, y: &Object) -> Option<&HomClasses> {
        self.homs.iter().find(|h| &h.dom == x && &h.cod == y)
    }

    pub fn verified(&self) -> bool {
        self.congruence.passed() && self.point_bijection.passed() && self.faithfulness.passed()
    }
}

/// Observation key: the composites `f∘x` for each `t`-point `x`.
fn observe(f: &Morphism, points: &[Morphism]) -> Result<Vec<Vec<usize>>, CategoryError> {
    points
        .iter()
        .map(|x| Ok(f.after(x)?.table().to_vec()))
        .collect()
}

fn partition(c: &CategoryInstance, x: &Object, y: &Object) -> Result<HomClasses, CategoryError> {
    let points = t_points(c, x)?;
    let mut keyed: Vec<(Vec<Vec<usize>>, Vec<Morphism>)> = Vec::new();
    for f in c.hom(x, y)? {
        let key = observe(&f, &points)?;
        match keyed.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(f),
            None => keyed.push((key, vec![f])),
        }
    }
    Ok(HomClasses {
        dom: x.clone(),
        cod: y.clone(),
        classes: keyed.into_iter().map(|(_, m)| m).collect(),
    })
}

/// Builds `C_{=t}` over the instance's objects and verifies that it is a
/// well-defined category whose point functor is faithful.
pub fn concrete_quotient(c: &CategoryInstance) -> Result<QuotientCategory, CategoryError> {
    let objs = scope_objects(c);
    let t = c.t().clone();
    let mut homs = Vec::new();
    for x in &objs {
        for y in &objs {
            homs.push(partition(c, x, y)?);
        }
    }
    let find = |x: &Object, y: &Object| {
        homs.iter()
            .find(|h| &h.dom == x && &h.cod == y)
            .expect("hom partition for listed objects")
    };

    let mut congruence = CheckReport::new("=_t is a congruence");
    for x in &objs {
        for y in &objs {
            for z in &objs {
                let (xy, yz, xz) = (find(x, y), find(y, z), find(x, z));
                for (i, fs) in xy.classes.iter().enumerate() {
                    for (j, gs) in yz.classes.iter().enumerate() {
                        let mut seen = BTreeSet::new();
                        for f in fs {
                            for g in gs {
                                let gf = g.after(f)?;
                                seen.insert(xz.class_of(&gf));
                            }
                        }
                        congruence.record(
                            seen.len() == 1 && !seen.contains(&None),
                            || {
                                format!(
                                    "composite class of [{x}→{y}]#{i} and [{y}→{z}]#{j} is unique"
                                )
                            },
                            || vec![xy.representative(i).clone(), yz.representative(j).clone()],
                        );
                    }
                }
            }
        }
    }

    let mut point_bijection = CheckReport::new("C(t,X) ≅ C_=t(Qt,QX)");
    for x in &objs {
        let points = find(&t, x);
        let singletons = points.classes.iter().all(|cl| cl.len() == 1);
        point_bijection.record(
            singletons,
            || format!("t-points of {x} are pairwise distinguished"),
            || {
                points
                    .classes
                    .iter()
                    .find(|cl| cl.len() > 1)
                    .cloned()
                    .unwrap_or_default()
            },
        );
    }

    let mut faithfulness = CheckReport::new("Hom(Qt,−) is faithful");
    for x in &objs {
        let points: Vec<Morphism> = find(&t, x).classes.iter().map(|cl| cl[0].clone()).collect();
        for y in &objs {
            let hom = find(x, y);
            let target = find(&t, y);
            let mut induced = BTreeMap::new();
            for (i, _) in hom.classes.iter().enumerate() {
                let rep = hom.representative(i);
                let action = points
                    .iter()
                    .map(|p| Ok(target.class_of(&rep.after(p)?)))
                    .collect::<Result<Vec<_>, CategoryError>>()?;
                induced.insert(i, action);
            }
            for (i, ai) in &induced {
                for (j, aj) in &induced {
                    if i < j {
                        faithfulness.record(
                            ai != aj,
                            || format!("classes {i} and {j} of {x}→{y} act differently on points"),
                            || {
                                vec![
                                    hom.representative(*i).clone(),
                                    hom.representative(*j).clone(),
                                ]
                            },
                        );
                    }
                }
            }
        }
    }

    let mut product_compatibility = CheckReport::new("# respects =_t");
    for x in &objs {
        for x2 in &objs {
            for y in &objs {
                for y2 in &objs {
                    let (fx, gy) = (find(x, x2), find(y, y2));
                    let dom = c.product(x, y);
                    let points = t_points(c, &dom)?;
                    let mut keys: BTreeMap<(usize, usize), BTreeSet<Vec<Vec<usize>>>> =
                        BTreeMap::new();
                    for (i, fs) in fx.classes.iter().enumerate() {
                        for (j, gs) in gy.classes.iter().enumerate() {
                            for f in fs {
                                for g in gs {
                                    let fg = c.product_map(f, g);
                                    keys.entry((i, j))
                                        .or_default()
                                        .insert(observe(&fg, &points)?);
                                }
                            }
                        }
                    }
                    for ((i, j), ks) in keys {
                        product_compatibility.record(
                            ks.len() == 1,
                            || format!("[{x}→{x2}]#{i} # [{y}→{y2}]#{j} has a unique class"),
                            || vec![fx.representative(i).clone(), gy.representative(j).clone()],
                        );
                    }
                }
            }
        }
    }

    Ok(QuotientCategory {
        base: c.clone(),
        t,
        homs,
        congruence,
        point_bijection,
        faithfulness,
        product_compatibility,
    })
}
