use std::fmt;
use std::rc::Rc;

use serde::{Serialize, Serializer};

use super::{Comb, Term};

/// Path from the root to a subterm: `l` steps into the function, `r`
/// into the argument.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Position(pub Vec<Direction>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Fun,
    Arg,
}

impl Position {
    fn push(&self, side: Direction) -> Position {
        let mut p = self.0.clone();
        p.push(side);
        Position(p)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for s in &self.0 {
            f.write_str(match s {
                Direction::Fun => "l",
                Direction::Arg => "r",
            })?;
        }
        Ok(())
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One contraction: the redex position, the rule, and the whole term after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub position: Position,
    pub rule: Comb,
    pub result: Term,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.rule, self.position, self.result)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    NormalForm,
    FuelExhausted,
    /// The term outgrew the node cap before normalizing.
    SizeLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub start: Term,
    pub steps: Vec<Step>,
    pub status: Status,
}

impl ReductionTrace {
    pub fn result(&self) -> &Term {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.start)?;
        for s in &self.steps {
            writeln!(f, "  → {s}")?;
        }
        let status = match self.status {
            Status::NormalForm => "normal form",
            Status::FuelExhausted => "fuel exhausted",
            Status::SizeLimit => "size limit",
        };
        write!(f, "{status} after {} steps", self.steps.len())
    }
}

/// Contracts `t` if it is itself a redex: a constant applied to exactly
/// as many arguments as its rule consumes.
fn contract(t: &Term) -> Option<(Comb, Term)> {
    let (head, args) = t.spine();
    let Term::Const(k) = head else { return None };
    if args.len() != k.arity() {
        return None;
    }
    let a = |i: usize| args[i].clone();
    let result = match k {
        Comb::I => a(0),
        Comb::K => a(0),
        Comb::W => a(0).apply_all([a(1), a(1)]),
        Comb::B => Term::app(a(0), Term::app(a(1), a(2))),
        Comb::C => a(0).apply_all([a(2), a(1)]),
        Comb::S => Term::app(Term::app(a(0), a(2)), Term::app(a(1), a(2))),
    };
    Some((*k, result))
}

fn replace(t: &Term, path: &[Direction], with: Term) -> Term {
    match (path.split_first(), t) {
        (None, _) => with,
        (Some((Direction::Fun, rest)), Term::App(f, a)) => {
            Term::App(Rc::new(replace(f, rest, with)), a.clone())
        }
        (Some((Direction::Arg, rest)), Term::App(f, a)) => {
            Term::App(f.clone(), Rc::new(replace(a, rest, with)))
        }
        _ => unreachable!("positions come from the term"),
    }
}

/// Redexes in pre-order: a node before its function part, the function
/// part before the argument.
fn redexes(t: &Term, at: Position, out: &mut Vec<(Position, Comb, Term)>) {
    if let Some((k, r)) = contract(t) {
        out.push((at.clone(), k, r));
    }
    if let Term::App(f, a) = t {
        redexes(f, at.push(Direction::Fun), out);
        redexes(a, at.push(Direction::Arg), out);
    }
}

/// Every one-step reduct, in leftmost-outermost order.
pub fn all_reducts(t: &Term) -> Vec<Step> {
    let mut found = Vec::new();
    redexes(t, Position::default(), &mut found);
    found
        .into_iter()
        .map(|(position, rule, r)| Step {
            result: replace(t, &position.0, r),
            position,
            rule,
        })
        .collect()
}

/// Contracts the leftmost-outermost redex, or `None` at a normal form.
pub fn step(t: &Term) -> Option<Step> {
    fn find(t: &Term, at: Position) -> Option<(Position, Comb, Term)> {
        if let Some((k, r)) = contract(t) {
            return Some((at, k, r));
        }
        match t {
            Term::App(f, a) => {
                find(f, at.push(Direction::Fun)).or_else(|| find(a, at.push(Direction::Arg)))
            }
            _ => None,
        }
    }
    let (position, rule, r) = find(t, Position::default())?;
    Some(Step {
        result: replace(t, &position.0, r),
        position,
        rule,
    })
}

/// Contracts a redex with no redex inside it, preferring the rightmost.
pub fn step_rightmost_innermost(t: &Term) -> Option<Step> {
    fn find(t: &Term, at: Position) -> Option<(Position, Comb, Term)> {
        if let Term::App(f, a) = t {
            if let Some(hit) =
                find(a, at.push(Direction::Arg)).or_else(|| find(f, at.push(Direction::Fun)))
            {
                return Some(hit);
            }
        }
        contract(t).map(|(k, r)| (at, k, r))
    }
    let (position, rule, r) = find(t, Position::default())?;
    Some(Step {
        result: replace(t, &position.0, r),
        position,
        rule,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    LeftmostOutermost,
    RightmostInnermost,
}

/// Leftmost-outermost reduction for at most `fuel` steps.
pub fn normalize(t: &Term, fuel: usize) -> ReductionTrace {
    normalize_with(t, fuel, usize::MAX, Strategy::LeftmostOutermost)
}

pub fn normalize_with(
    t: &Term,
    fuel: usize,
    max_size: usize,
    strategy: Strategy,
) -> ReductionTrace {
    let mut trace = ReductionTrace {
        start: t.clone(),
        steps: Vec::new(),
        status: Status::FuelExhausted,
    };
    let mut current = t.clone();
    loop {
        let next = match strategy {
            Strategy::LeftmostOutermost => step(&current),
            Strategy::RightmostInnermost => step_rightmost_innermost(&current),
        };
        let Some(s) = next else {
            trace.status = Status::NormalForm;
            break;
        };
        if trace.steps.len() == fuel {
            break;
        }
        if s.result.size() > max_size {
            trace.status = Status::SizeLimit;
            break;
        }
        current = s.result.clone();
        trace.steps.push(s);
    }
    trace
}
