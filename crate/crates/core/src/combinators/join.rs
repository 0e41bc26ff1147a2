use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::reduce::{all_reducts, Step};
use super::Term;

/// Limits for the joinability search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Reduction depth explored from each side.
    pub fuel: usize,
    /// Largest frontier kept per level.
    pub width: usize,
    /// Terms with more nodes are not explored.
    pub max_size: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            fuel: 100,
            width: 10_000,
            max_size: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Joinable {
    pub common: Term,
    pub left: Vec<Step>,
    pub right: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum JoinVerdict {
    Joinable(Joinable),
    /// No common reduct among the terms explored. This says nothing about
    /// convertibility.
    NotWithinBudget {
        explored: usize,
        truncated: bool,
    },
}

impl JoinVerdict {
    pub fn is_joinable(&self) -> bool {
        matches!(self, JoinVerdict::Joinable(_))
    }
}

type Parents = HashMap<Term, Option<(Term, Step)>>;

struct Side {
    parents: Parents,
    frontier: Vec<Term>,
    truncated: bool,
}

impl Side {
    fn new(t: &Term) -> Side {
        Side {
            parents: HashMap::from([(t.clone(), None)]),
            frontier: vec![t.clone()],
            truncated: false,
        }
    }

    /// Expands one level, returning the first new term the other side has
    /// already reached.
    fn expand(&mut self, budget: &Budget, other: &Parents) -> Option<Term> {
        let mut next = Vec::new();
        for t in std::mem::take(&mut self.frontier) {
            for s in all_reducts(&t) {
                if self.parents.contains_key(&s.result) {
                    continue;
                }
                if s.result.size() > budget.max_size || next.len() >= budget.width {
                    self.truncated = true;
                    continue;
                }
                let r = s.result.clone();
                self.parents.insert(r.clone(), Some((t.clone(), s)));
                if other.contains_key(&r) {
                    return Some(r);
                }
                next.push(r);
            }
        }
        self.frontier = next;
        None
    }

    fn path_to(&self, t: &Term) -> Vec<Step> {
        let mut path = Vec::new();
        let mut cur = t.clone();
        while let Some(Some((parent, s))) = self.parents.get(&cur) {
            path.push(s.clone());
            cur = parent.clone();
        }
        path.reverse();
        path
    }
}

/// Breadth-first search over all one-step reducts of both terms, level by
/// level, for a common reduct.
pub fn joinable(t1: &Term, t2: &Term, budget: &Budget) -> JoinVerdict {
    let mut a = Side::new(t1);
    let mut b = Side::new(t2);
    let found = |a: &Side, b: &Side, common: Term| {
        JoinVerdict::Joinable(Joinable {
            left: a.path_to(&common),
            right: b.path_to(&common),
            common,
        })
    };
    if t1 == t2 {
        return found(&a, &b, t1.clone());
    }
    for _ in 0..budget.fuel {
        if a.frontier.is_empty() && b.frontier.is_empty() {
            break;
        }
        if let Some(common) = a.expand(budget, &b.parents) {
            return found(&a, &b, common);
        }
        if let Some(common) = b.expand(budget, &a.parents) {
            return found(&a, &b, common);
        }
    }
    let explored: HashSet<&Term> = a.parents.keys().chain(b.parents.keys()).collect();
    JoinVerdict::NotWithinBudget {
        explored: explored.len(),
        truncated: a.truncated || b.truncated,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum FpcVerdict {
    Verified {
        atom: String,
        join: Joinable,
    },
    NotWithinBudget {
        atom: String,
        explored: usize,
        truncated: bool,
    },
}

impl FpcVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, FpcVerdict::Verified { .. })
    }
}

/// Checks `f x` and `x (f x)` for a common reduct, with `x` an atom not
/// occurring in `f`.
pub fn check_fpc(f: &Term, budget: &Budget) -> FpcVerdict {
    let used = f.atoms();
    let atom = std::iter::once("x".to_string())
        .chain((1..).map(|i| format!("x{i}")))
        .find(|a| !used.contains(a))
        .expect("infinitely many names");
    let x = Term::atom(&atom);
    let fx = Term::app(f.clone(), x.clone());
    let xfx = Term::app(x, fx.clone());
    match joinable(&fx, &xfx, budget) {
        JoinVerdict::Joinable(join) => FpcVerdict::Verified { atom, join },
        JoinVerdict::NotWithinBudget {
            explored,
            truncated,
        } => FpcVerdict::NotWithinBudget {
            atom,
            explored,
            truncated,
        },
    }
}
