//! Evaluating formulas on finite algebras.
//!
//! The designated value is exactly the top element. Assignments are swept in
//! lexicographic order over the sorted variable names (first variable most
//! significant), so the first countermodel found is always the same one.

mod interpolation;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::formula::Formula;

pub use interpolation::{
    find_interpolant, find_interpolant_capped, InterpolantSearch, InterpolationMode,
};

/// Default ceiling on assignment evaluations for a single check.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

pub type Assignment = BTreeMap<String, Elem>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("algebra has not been verified")]
    Unverified,
    #[error("algebra is not a chain")]
    NotChain,
    #[error("variable `{0}` has no value")]
    UnboundVariable(String),
    #[error("value {value} for `{var}` is not an element")]
    ValueOutOfRange { var: String, value: Elem },
    #[error("check needs {cost} evaluations, budget is {budget}")]
    BudgetExceeded { cost: u128, budget: u128 },
    #[error("premise does not entail the conclusion on this algebra")]
    PremiseNotValid,
}

/// A formula flattened to postfix over a fixed variable list.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    code: Vec<Op>,
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Var(usize),
    Bot,
    Conj,
    Meet,
    Impl,
}

impl Compiled {
    pub(crate) fn new(f: &Formula, vars: &[String]) -> Self {
        let mut code = Vec::with_capacity(f.size());
        Self::emit(f, vars, &mut code);
        Compiled { code }
    }

    fn emit(f: &Formula, vars: &[String], code: &mut Vec<Op>) {
        match f {
            Formula::Var(name) => {
                let i = vars
                    .binary_search(name)
                    .expect("variable list covers the formula");
                code.push(Op::Var(i));
            }
            Formula::Bot => code.push(Op::Bot),
            Formula::Conj(l, r) | Formula::Meet(l, r) | Formula::Impl(l, r) => {
                Self::emit(l, vars, code);
                Self::emit(r, vars, code);
                code.push(match f {
                    Formula::Conj(..) => Op::Conj,
                    Formula::Meet(..) => Op::Meet,
                    _ => Op::Impl,
                });
            }
        }
    }

    pub(crate) fn run(&self, a: &FiniteAlgebra, values: &[Elem], stack: &mut Vec<Elem>) -> Elem {
        stack.clear();
        for op in &self.code {
            let v = match *op {
                Op::Var(i) => values[i],
                Op::Bot => 0,
                Op::Conj | Op::Meet | Op::Impl => {
                    let r = stack.pop().expect("operand");
                    let l = stack.pop().expect("operand");
                    match op {
                        Op::Conj => a.mult(l, r),
                        Op::Meet => a.meet(l, r),
                        _ => a.imp(l, r),
                    }
                }
            };
            stack.push(v);
        }
        stack.pop().expect("result")
    }
}

/// Lexicographic odometer over `0..n` for each of `k` positions.
pub(crate) struct Odometer {
    n: usize,
    values: Vec<Elem>,
    started: bool,
}

impl Odometer {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Odometer {
            n,
            values: vec![0; k],
            started: false,
        }
    }

    pub(crate) fn advance(&mut self) -> Option<&[Elem]> {
        if !self.started {
            self.started = true;
            return (self.n > 0).then_some(&self.values[..]);
        }
        for i in (0..self.values.len()).rev() {
            self.values[i] += 1;
            if self.values[i] < self.n {
                return Some(&self.values);
            }
            self.values[i] = 0;
        }
        None
    }
}

pub(crate) fn sweep_cost(n: usize, k: usize, formulas: usize) -> u128 {
    (n as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX)
        .saturating_mul(formulas.max(1) as u128)
}

fn check_budget(cost: u128, budget: u128) -> Result<(), SemanticsError> {
    if cost > budget {
        Err(SemanticsError::BudgetExceeded { cost, budget })
    } else {
        Ok(())
    }
}

fn require_verified(a: &FiniteAlgebra) -> Result<(), SemanticsError> {
    if a.is_verified() {
        Ok(())
    } else {
        Err(SemanticsError::Unverified)
    }
}

fn union_vars<'f>(formulas: impl IntoIterator<Item = &'f Formula>) -> Vec<String> {
    let mut all = BTreeSet::new();
    for f in formulas {
        all.extend(f.vars());
    }
    all.into_iter().collect()
}

fn to_assignment(vars: &[String], values: &[Elem]) -> Assignment {
    vars.iter().cloned().zip(values.iter().copied()).collect()
}

/// Result of a validity-style check: either it holds or the first
/// countermodel in sweep order is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub countermodel: Option<Assignment>,
}

impl Outcome {
    fn holds() -> Self {
        Outcome {
            holds: true,
            countermodel: None,
        }
    }

    fn fails(v: Assignment) -> Self {
        Outcome {
            holds: false,
            countermodel: Some(v),
        }
    }
}

/// Renders an assignment as `x=1, y=0`, using element labels.
pub fn show_assignment(a: &FiniteAlgebra, v: &Assignment) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|(k, x)| format!("{k}={}", a.label(*x)))
        .collect();
    parts.join(", ")
}

/// Premises and a conclusion, to be checked on one algebra.
#[derive(Debug, Clone)]
pub struct Judgment<'a> {
    pub algebra: &'a FiniteAlgebra,
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

/// Outcome of checking one instance of the local deduction equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeductionCheck {
    /// `Γ ∪ {ψ} ⊨ φ` on the algebra.
    pub holds_left: bool,
    /// Least `n <= |A|` with `Γ ⊨ ψ^n → φ`, if any.
    pub minimal_n: Option<usize>,
}

impl DeductionCheck {
    /// Both sides of the equivalence agree.
    pub fn agrees(&self) -> bool {
        self.holds_left == self.minimal_n.is_some()
    }
}

impl fmt::Display for DeductionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.minimal_n {
            Some(n) => write!(f, "left={} minimal_n={n}", self.holds_left),
            None => write!(f, "left={} minimal_n=none", self.holds_left),
        }
    }
}

/// Semantic checks on one verified algebra under an evaluation budget.
#[derive(Debug, Clone, Copy)]
pub struct Semantics<'a> {
    algebra: &'a FiniteAlgebra,
    budget: u128,
}

impl<'a> Semantics<'a> {
    pub fn new(algebra: &'a FiniteAlgebra) -> Result<Self, SemanticsError> {
        require_verified(algebra)?;
        Ok(Semantics {
            algebra,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn algebra(&self) -> &'a FiniteAlgebra {
        self.algebra
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    /// Evaluations a consequence check over these formulas would take.
    pub fn cost<'f>(&self, formulas: impl IntoIterator<Item = &'f Formula> + Clone) -> u128 {
        let k = union_vars(formulas.clone()).len();
        sweep_cost(self.algebra.size(), k, formulas.into_iter().count())
    }

    pub fn eval(&self, v: &Assignment, f: &Formula) -> Result<Elem, SemanticsError> {
        let vars: Vec<String> = f.vars().into_iter().collect();
        let mut values = Vec::with_capacity(vars.len());
        for name in &vars {
            let value = *v
                .get(name)
                .ok_or_else(|| SemanticsError::UnboundVariable(name.clone()))?;
            if value >= self.algebra.size() {
                return Err(SemanticsError::ValueOutOfRange {
                    var: name.clone(),
                    value,
                });
            }
            values.push(value);
        }
        Ok(Compiled::new(f, &vars).run(self.algebra, &values, &mut Vec::new()))
    }

    pub fn is_tautology(&self, f: &Formula) -> Result<Outcome, SemanticsError> {
        self.entails(&[], f)
    }

    /// `premises ⊨ conclusion`: every assignment sending all premises to
    /// the top sends the conclusion there too.
    pub fn entails(
        &self,
        premises: &[Formula],
        conclusion: &Formula,
    ) -> Result<Outcome, SemanticsError> {
        let a = self.algebra;
        let vars = union_vars(premises.iter().chain(std::iter::once(conclusion)));
        check_budget(
            sweep_cost(a.size(), vars.len(), premises.len() + 1),
            self.budget,
        )?;
        let prem: Vec<Compiled> = premises.iter().map(|p| Compiled::new(p, &vars)).collect();
        let goal = Compiled::new(conclusion, &vars);
        let top = a.top();
        let mut stack = Vec::new();
        let mut odo = Odometer::new(a.size(), vars.len());
        while let Some(values) = odo.advance() {
            if prem.iter().all(|p| p.run(a, values, &mut stack) == top)
                && goal.run(a, values, &mut stack) != top
            {
                return Ok(Outcome::fails(to_assignment(&vars, values)));
            }
        }
        Ok(Outcome::holds())
    }

    /// Checks `Γ ∪ {ψ} ⊨ φ` against the least `n <= |A|` with
    /// `Γ ⊨ ψ^n → φ`. Only meaningful on chains, where powers settle
    /// within `|A|` steps.
    pub fn local_deduction_check(
        &self,
        gamma: &[Formula],
        psi: &Formula,
        phi: &Formula,
    ) -> Result<DeductionCheck, SemanticsError> {
        if !self
            .algebra
            .is_chain()
            .map_err(|_| SemanticsError::Unverified)?
        {
            return Err(SemanticsError::NotChain);
        }
        let mut extended = gamma.to_vec();
        extended.push(psi.clone());
        let holds_left = self.entails(&extended, phi)?.holds;
        let mut minimal_n = None;
        for n in 1..=self.algebra.size() {
            let goal = Formula::implies(Formula::power(psi, n), phi.clone());
            if self.entails(gamma, &goal)?.holds {
                minimal_n = Some(n);
                break;
            }
        }
        Ok(DeductionCheck {
            holds_left,
            minimal_n,
        })
    }
}

pub fn eval(a: &FiniteAlgebra, v: &Assignment, f: &Formula) -> Result<Elem, SemanticsError> {
    Semantics::new(a)?.eval(v, f)
}

pub fn is_tautology(a: &FiniteAlgebra, f: &Formula) -> Result<Outcome, SemanticsError> {
    Semantics::new(a)?.is_tautology(f)
}

pub fn consequence(j: &Judgment<'_>) -> Result<Outcome, SemanticsError> {
    Semantics::new(j.algebra)?.entails(&j.premises, &j.conclusion)
}

pub fn local_deduction_check(
    a: &FiniteAlgebra,
    gamma: &[Formula],
    psi: &Formula,
    phi: &Formula,
) -> Result<DeductionCheck, SemanticsError> {
    Semantics::new(a)?.local_deduction_check(gamma, psi, phi)
}
