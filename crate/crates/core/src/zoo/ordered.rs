use std::collections::BTreeMap;

use super::{invalid, InstanceSpec, ZooError};
use crate::category::{Magmoidal, Morphism, Object, Structure};
use crate::kernel::FiniteSet;

/// A finite partially ordered magma `(P, ≤, ·)` with `·` monotone and
/// `a ≤ a·a`, viewed as a thin category. Each element is an object whose
/// carrier is a single point, so a morphism `a → b` is the unique function
/// between points and exists iff `a ≤ b`.
#[derive(Debug)]
pub struct OrderedMagma {
    objects: Vec<Object>,
    index: BTreeMap<String, usize>,
    leq: Vec<Vec<bool>>,
    op: Vec<Vec<usize>>,
    t: Object,
}

fn point(id: &str) -> Result<Object, ZooError> {
    Ok(Object::new(FiniteSet::new(id, ["*"])?, Structure::Ordered))
}

impl OrderedMagma {
    pub(super) fn build(spec: &InstanceSpec) -> Result<Self, ZooError> {
        if !spec.objects.is_empty() {
            return Err(invalid(
                "ordered_magma objects are the `params.elements`; leave `objects` empty",
            ));
        }
        let names = &spec.params.elements;
        let mut index = BTreeMap::new();
        for (i, e) in names.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(invalid(format!("element `{e}` listed twice")));
            }
        }
        let n = names.len();
        let find = |e: &str| {
            index
                .get(e)
                .copied()
                .ok_or_else(|| invalid(format!("`{e}` is not an element")))
        };

        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in &spec.params.order {
            leq[find(a)?][find(b)?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i][j] && leq[j][i] {
                    return Err(invalid(format!(
                        "order is not antisymmetric: `{}` and `{}`",
                        names[i], names[j]
                    )));
                }
            }
        }

        let mut op = vec![vec![None; n]; n];
        for (a, b, c) in &spec.params.op {
            let (i, j, k) = (find(a)?, find(b)?, find(c)?);
            if op[i][j].replace(k).is_some() {
                return Err(invalid(format!("`{a}·{b}` defined twice")));
            }
        }
        let op = op
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(j, k)| {
                        k.ok_or_else(|| {
                            invalid(format!("`{}·{}` is undefined", names[i], names[j]))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;

        for a in 0..n {
            if !leq[a][op[a][a]] {
                return Err(invalid(format!("`{0} ≤ {0}·{0}` fails", names[a])));
            }
            for a2 in 0..n {
                for b in 0..n {
                    for b2 in 0..n {
                        if leq[a][a2] && leq[b][b2] && !leq[op[a][b]][op[a2][b2]] {
                            return Err(invalid(format!(
                                "operation is not monotone: `{}·{}` vs `{}·{}`",
                                names[a], names[b], names[a2], names[b2]
                            )));
                        }
                    }
                }
            }
        }

        let objects = names
            .iter()
            .map(|e| point(e))
            .collect::<Result<Vec<_>, _>>()?;
        let t = objects[find(&spec.t)?].clone();
        Ok(OrderedMagma {
            objects,
            index,
            leq,
            op,
            t,
        })
    }

    fn position(&self, x: &Object) -> usize {
        self.index[x.id()]
    }

    pub fn leq(&self, x: &Object, y: &Object) -> bool {
        self.leq[self.position(x)][self.position(y)]
    }

    fn unique(&self, x: &Object, y: &Object) -> Morphism {
        Morphism::new(x.clone(), y.clone(), vec![0]).expect("points")
    }
}

impl Magmoidal for OrderedMagma {
    fn name(&self) -> &str {
        "ordered_magma"
    }

    fn objects(&self) -> &[Object] {
        &self.objects
    }

    fn t(&self) -> &Object {
        &self.t
    }

    fn is_morphism(&self, f: &Morphism) -> bool {
        self.index.contains_key(f.dom().id())
            && self.index.contains_key(f.cod().id())
            && self.leq(f.dom(), f.cod())
    }

    fn product(&self, x: &Object, y: &Object) -> Object {
        self.objects[self.op[self.position(x)][self.position(y)]].clone()
    }

    fn product_map(&self, f: &Morphism, g: &Morphism) -> Morphism {
        self.unique(
            &self.product(f.dom(), g.dom()),
            &self.product(f.cod(), g.cod()),
        )
    }

    fn diagonal(&self, x: &Object) -> Option<Morphism> {
        let xx = self.product(x, x);
        self.leq(x, &xx).then(|| self.unique(x, &xx))
    }

    fn terminal(&self) -> Option<Object> {
        self.objects
            .iter()
            .find(|top| self.objects.iter().all(|x| self.leq(x, top)))
            .cloned()
    }

    /// The residual `y/x`: the greatest `c` with `c·x ≤ y`, when it exists.
    fn internal_hom(&self, x: &Object, y: &Object) -> Option<(Object, Morphism)> {
        let below: Vec<&Object> = self
            .objects
            .iter()
            .filter(|c| self.leq(&self.product(c, x), y))
            .collect();
        let greatest = below
            .iter()
            .find(|c| below.iter().all(|d| self.leq(d, c)))?;
        let ev = self.unique(&self.product(greatest, x), y);
        Some(((*greatest).clone(), ev))
    }
}
