//! Propositional MTL formulas over the primitive connectives `&`, `/\`, `->`
//! and the constant `0`.
//!
//! Derived connectives (`~`, `\/`, `1`, `^k`) only exist in the concrete
//! syntax; the parser expands them, so every stored [`Formula`] is built from
//! the five constructors below.

mod parser;
pub mod random;
mod schemata;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use parser::{parse, ParseError};
pub use schemata::{axiom_schema, axiom_schemata, Schema};

/// A formula tree over the primitive connectives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Bot,
    /// Strong conjunction `&`, interpreted by the monoid operation.
    Conj(Box<Formula>, Box<Formula>),
    /// Weak conjunction `/\`, interpreted by the lattice meet.
    Meet(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn conj(l: Formula, r: Formula) -> Self {
        Formula::Conj(Box::new(l), Box::new(r))
    }

    pub fn meet(l: Formula, r: Formula) -> Self {
        Formula::Meet(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Impl(Box::new(l), Box::new(r))
    }

    /// `~f`, i.e. `f -> 0`.
    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::implies(f, Formula::Bot)
    }

    /// `1`, i.e. `0 -> 0`.
    pub fn top() -> Self {
        Formula::implies(Formula::Bot, Formula::Bot)
    }

    /// `l \/ r`, expanded to `((l -> r) -> r) /\ ((r -> l) -> l)`.
    pub fn join(l: Formula, r: Formula) -> Self {
        let left = Formula::implies(Formula::implies(l.clone(), r.clone()), r.clone());
        let right = Formula::implies(Formula::implies(r, l.clone()), l);
        Formula::meet(left, right)
    }

    /// `f^k`: `k` copies of `f` joined by `&`, nested to the left.
    ///
    /// Panics if `k == 0`; the parser reports that case as an error instead.
    pub fn power(f: &Formula, k: usize) -> Self {
        assert!(k >= 1, "formula power must be positive");
        let mut acc = f.clone();
        for _ in 1..k {
            acc = Formula::conj(acc, f.clone());
        }
        acc
    }

    /// The variables occurring in the formula, in sorted order.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(name) => {
                out.insert(name.clone());
            }
            Formula::Bot => {}
            Formula::Conj(l, r) | Formula::Meet(l, r) | Formula::Impl(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Simultaneous substitution of variables; unmapped variables are kept.
    pub fn substitute(&self, map: &BTreeMap<String, Formula>) -> Formula {
        match self {
            Formula::Var(name) => map.get(name).cloned().unwrap_or_else(|| self.clone()),
            Formula::Bot => Formula::Bot,
            Formula::Conj(l, r) => Formula::conj(l.substitute(map), r.substitute(map)),
            Formula::Meet(l, r) => Formula::meet(l.substitute(map), r.substitute(map)),
            Formula::Impl(l, r) => Formula::implies(l.substitute(map), r.substitute(map)),
        }
    }

    /// Nesting depth of connectives; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot => 0,
            Formula::Conj(l, r) | Formula::Meet(l, r) | Formula::Impl(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot => 1,
            Formula::Conj(l, r) | Formula::Meet(l, r) | Formula::Impl(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    /// Fully parenthesized rendering: every binary node is wrapped.
    pub fn to_full_string(&self) -> String {
        let mut s = String::new();
        self.write_full(&mut s);
        s
    }

    fn write_full(&self, out: &mut String) {
        match self {
            Formula::Var(name) => out.push_str(name),
            Formula::Bot => out.push('0'),
            Formula::Conj(l, r) | Formula::Meet(l, r) | Formula::Impl(l, r) => {
                out.push('(');
                l.write_full(out);
                out.push_str(self.op_symbol());
                r.write_full(out);
                out.push(')');
            }
        }
    }

    fn op_symbol(&self) -> &'static str {
        match self {
            Formula::Conj(..) => " & ",
            Formula::Meet(..) => " /\\ ",
            Formula::Impl(..) => " -> ",
            _ => "",
        }
    }

    // Binding strength used by the minimal-parenthesis printer.
    fn level(&self) -> u8 {
        match self {
            Formula::Impl(..) => 0,
            Formula::Meet(..) => 1,
            Formula::Conj(..) => 2,
            Formula::Var(_) | Formula::Bot => 3,
        }
    }

    fn write_min(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r) = match self {
            Formula::Var(name) => return f.write_str(name),
            Formula::Bot => return f.write_str("0"),
            Formula::Conj(l, r) | Formula::Meet(l, r) | Formula::Impl(l, r) => (l, r),
        };
        let me = self.level();
        // `->` is right-associative, `/\` and `&` left-associative.
        let (wrap_l, wrap_r) = if me == 0 {
            (l.level() <= me, r.level() < me)
        } else {
            (l.level() < me, r.level() <= me)
        };
        write_child(l, wrap_l, f)?;
        f.write_str(self.op_symbol())?;
        write_child(r, wrap_r, f)
    }
}

fn write_child(child: &Formula, wrap: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if wrap {
        f.write_str("(")?;
        child.write_min(f)?;
        f.write_str(")")
    } else {
        child.write_min(f)
    }
}

/// Minimal-parenthesis rendering that reparses to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_min(f)
    }
}

/// Renders a formula in the fully parenthesized form.
pub fn print(f: &Formula) -> String {
    f.to_full_string()
}

/// The variables of `f`, sorted.
pub fn vars(f: &Formula) -> BTreeSet<String> {
    f.vars()
}
