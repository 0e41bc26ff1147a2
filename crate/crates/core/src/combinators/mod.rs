//! Combinatory logic over `S K I B C W` and uninterpreted atoms: parsing,
//! the six contraction rules, bounded joinability, and the check that a
//! term is a fixed-point combinator.

mod join;
mod parse;
mod reduce;

use std::collections::BTreeSet;
use std::fmt;
use std::rc::Rc;

use serde::{Serialize, Serializer};

pub use join::{check_fpc, joinable, Budget, FpcVerdict, JoinVerdict, Joinable};
pub use parse::{parse, SyntaxError};
pub use reduce::{
    all_reducts, normalize, normalize_with, step, step_rightmost_innermost, Direction, Position,
    ReductionTrace, Status, Step, Strategy,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Comb {
    S,
    K,
    I,
    B,
    C,
    W,
}

impl Comb {
    pub const ALL: [Comb; 6] = [Comb::S, Comb::K, Comb::I, Comb::B, Comb::C, Comb::W];

    /// Number of arguments the rule consumes.
    pub fn arity(self) -> usize {
        match self {
            Comb::I => 1,
            Comb::K | Comb::W => 2,
            Comb::S | Comb::B | Comb::C => 3,
        }
    }

    pub fn from_char(c: char) -> Option<Comb> {
        Some(match c {
            'S' => Comb::S,
            'K' => Comb::K,
            'I' => Comb::I,
            'B' => Comb::B,
            'C' => Comb::C,
            'W' => Comb::W,
            _ => return None,
        })
    }

    pub fn symbol(self) -> char {
        match self {
            Comb::S => 'S',
            Comb::K => 'K',
            Comb::I => 'I',
            Comb::B => 'B',
            Comb::C => 'C',
            Comb::W => 'W',
        }
    }
}

impl fmt::Display for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A binary application tree. Subterms are shared, so cloning is cheap.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(Comb),
    Atom(Rc<str>),
    App(Rc<Term>, Rc<Term>),
}

impl Term {
    pub fn atom(name: &str) -> Term {
        Term::Atom(name.into())
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Rc::new(f), Rc::new(a))
    }

    /// `t a₁ … aₙ`, associating to the left.
    pub fn apply_all(self, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(self, Term::app)
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::App(f, a) => 1 + f.size() + a.size(),
            _ => 1,
        }
    }

    pub fn constants(&self) -> BTreeSet<Comb> {
        let mut out = BTreeSet::new();
        self.visit(&mut |t| {
            if let Term::Const(c) = t {
                out.insert(*c);
            }
        });
        out
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |t| {
            if let Term::Atom(a) = t {
                out.insert(a.to_string());
            }
        });
        out
    }

    fn visit(&self, f: &mut impl FnMut(&Term)) {
        f(self);
        if let Term::App(g, a) = self {
            g.visit(f);
            a.visit(f);
        }
    }

    /// Head and arguments of the application spine.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut head = self;
        while let Term::App(f, a) = head {
            args.push(a.as_ref());
            head = f;
        }
        args.reverse();
        (head, args)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => write!(f, "{c}"),
            Term::Atom(a) => write!(f, "{a}"),
            Term::App(g, a) => match a.as_ref() {
                Term::App(..) => write!(f, "{g} ({a})"),
                _ => write!(f, "{g} {a}"),
            },
        }
    }
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `B (W W) (B W (B B B))`, a fixed-point combinator using only `B` and `W`.
pub fn statman() -> Term {
    parse("B(WW)((BW)((BB)B))").expect("well-formed")
}

/// The substructural logic whose combinators cover a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Logic {
    Ordered,
    Linear,
    /// Full Lambek with contraction, i.e. ordered logic with contraction.
    FlC,
    Relevance,
    Unclassified,
}

impl Logic {
    pub fn label(self) -> &'static str {
        match self {
            Logic::Ordered => "ordered",
            Logic::Linear => "linear",
            Logic::FlC => "FL_c",
            Logic::Relevance => "relevance",
            Logic::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Basis {
    pub constants: BTreeSet<Comb>,
    pub logic: Logic,
}

/// The constants occurring in `t`, and the smallest of `BI ⊆ BCI`,
/// `BW`, `BCWI` containing them.
pub fn basis_of(t: &Term) -> Basis {
    use Comb::*;
    let constants = t.constants();
    let within = |allowed: &[Comb]| constants.iter().all(|c| allowed.contains(c));
    let logic = if within(&[B, I]) {
        Logic::Ordered
    } else if within(&[B, C, I]) {
        Logic::Linear
    } else if within(&[B, W]) {
        Logic::FlC
    } else if within(&[B, C, W, I]) {
        Logic::Relevance
    } else {
        Logic::Unclassified
    };
    Basis { constants, logic }
}
