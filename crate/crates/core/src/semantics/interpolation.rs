//! Bounded search for interpolants over the shared variables of a premise
//! and a conclusion, on one finite algebra.
//!
//! Candidates are generated level by level (atoms, then one more connective
//! per level) and pruned modulo equality of their value tables over the
//! shared variables, so each definable function is tried once, through its
//! first-found representative.

use std::collections::HashMap;

use super::{check_budget, sweep_cost, union_vars, Compiled, Odometer, Semantics, SemanticsError};
use crate::algebra::{Elem, FiniteAlgebra};
use crate::formula::Formula;

/// Stop after generating this many candidates.
pub const DEFAULT_CANDIDATE_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterpolationMode {
    /// `{φ} ⊨ γ` and `{γ} ⊨ ψ`, given `{φ} ⊨ ψ`.
    Strong,
    /// `{φ^n} ⊨ γ` and `{γ^n} ⊨ ψ`, given `{φ^n} ⊨ ψ`.
    Weak(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolantSearch {
    pub interpolant: Option<Formula>,
    /// Candidates generated, duplicates included.
    pub explored: usize,
    /// The cap was hit before the depth bound was exhausted.
    pub truncated: bool,
}

struct Pool<'a> {
    a: &'a FiniteAlgebra,
    formulas: Vec<Formula>,
    depths: Vec<usize>,
    tables: Vec<Vec<Elem>>,
    seen: HashMap<Vec<Elem>, usize>,
    generated: usize,
}

impl Pool<'_> {
    /// Adds the candidate if its table is new; returns its id.
    fn offer(&mut self, f: Formula, depth: usize, table: Vec<Elem>) -> Option<usize> {
        self.generated += 1;
        if self.seen.contains_key(&table) {
            return None;
        }
        let id = self.formulas.len();
        self.seen.insert(table.clone(), id);
        self.formulas.push(f);
        self.depths.push(depth);
        self.tables.push(table);
        Some(id)
    }

    fn combine(&self, op: usize, i: usize, j: usize) -> (Formula, Vec<Elem>) {
        let (l, r) = (&self.tables[i], &self.tables[j]);
        let (fi, fj) = (self.formulas[i].clone(), self.formulas[j].clone());
        let a = self.a;
        match op {
            0 => (
                Formula::conj(fi, fj),
                l.iter().zip(r).map(|(&x, &y)| a.mult(x, y)).collect(),
            ),
            1 => (
                Formula::meet(fi, fj),
                l.iter().zip(r).map(|(&x, &y)| a.meet(x, y)).collect(),
            ),
            _ => (
                Formula::implies(fi, fj),
                l.iter().zip(r).map(|(&x, &y)| a.imp(x, y)).collect(),
            ),
        }
    }
}

/// Searches for `γ` over the common variables of `phi` and `psi` with
/// connective depth at most `depth`. `Ok(None)`-style results (no
/// interpolant) are inconclusive: a deeper search may still succeed.
pub fn find_interpolant(
    sem: &Semantics<'_>,
    phi: &Formula,
    psi: &Formula,
    depth: usize,
    mode: InterpolationMode,
) -> Result<InterpolantSearch, SemanticsError> {
    find_interpolant_capped(sem, phi, psi, depth, mode, DEFAULT_CANDIDATE_CAP)
}

pub fn find_interpolant_capped(
    sem: &Semantics<'_>,
    phi: &Formula,
    psi: &Formula,
    depth: usize,
    mode: InterpolationMode,
    cap: usize,
) -> Result<InterpolantSearch, SemanticsError> {
    let a = sem.algebra();
    let power = match mode {
        InterpolationMode::Strong => 1,
        InterpolationMode::Weak(n) => n.max(1),
    };
    let premise = Formula::power(phi, power);
    if !sem.entails(std::slice::from_ref(&premise), psi)?.holds {
        return Err(SemanticsError::PremiseNotValid);
    }

    let all = union_vars([phi, psi]);
    let phi_vars = phi.vars();
    let psi_vars = psi.vars();
    let shared: Vec<String> = all
        .iter()
        .filter(|v| phi_vars.contains(*v) && psi_vars.contains(*v))
        .cloned()
        .collect();
    check_budget(sweep_cost(a.size(), all.len(), 2), sem.budget())?;

    // need[s]: some extension of s makes the premise top, so γ(s) must be top.
    // allowed[s]: every extension of s makes ψ top, so γ(s) may be top.
    let rows = sweep_cost(a.size(), shared.len(), 1) as usize;
    let mut need = vec![false; rows];
    let mut allowed = vec![true; rows];
    let shared_pos: Vec<usize> = shared
        .iter()
        .map(|v| all.binary_search(v).expect("shared"))
        .collect();
    let prem_c = Compiled::new(&premise, &all);
    let psi_c = Compiled::new(psi, &all);
    let top = a.top();
    let mut stack = Vec::new();
    let mut odo = Odometer::new(a.size(), all.len());
    while let Some(values) = odo.advance() {
        let row = shared_pos
            .iter()
            .fold(0, |acc, &p| acc * a.size() + values[p]);
        if prem_c.run(a, values, &mut stack) == top {
            need[row] = true;
        }
        if psi_c.run(a, values, &mut stack) != top {
            allowed[row] = false;
        }
    }
    let accepts = |table: &[Elem]| {
        table.iter().enumerate().all(|(s, &g)| {
            let designated = a.power(g, power) == top;
            (!need[s] || g == top) && (!designated || allowed[s])
        })
    };

    let mut pool = Pool {
        a,
        formulas: Vec::new(),
        depths: Vec::new(),
        tables: Vec::new(),
        seen: HashMap::new(),
        generated: 0,
    };
    let mut atoms: Vec<(Formula, Vec<Elem>)> = Vec::new();
    for (i, name) in shared.iter().enumerate() {
        let mut odo = Odometer::new(a.size(), shared.len());
        let mut table = Vec::with_capacity(rows);
        while let Some(values) = odo.advance() {
            table.push(values[i]);
        }
        atoms.push((Formula::var(name.clone()), table));
    }
    atoms.push((Formula::Bot, vec![0; rows]));
    atoms.push((Formula::top(), vec![top; rows]));

    let finish = |pool: &Pool<'_>, id: Option<usize>, truncated: bool| InterpolantSearch {
        interpolant: id.map(|i| pool.formulas[i].clone()),
        explored: pool.generated,
        truncated,
    };

    for (f, table) in atoms {
        if let Some(id) = pool.offer(f, 0, table) {
            if accepts(&pool.tables[id]) {
                return Ok(finish(&pool, Some(id), false));
            }
        }
    }
    for level in 1..=depth {
        let count = pool.formulas.len();
        for i in 0..count {
            for j in 0..count {
                if pool.depths[i] + 1 != level && pool.depths[j] + 1 != level {
                    continue;
                }
                for op in 0..3 {
                    if pool.generated >= cap {
                        return Ok(finish(&pool, None, true));
                    }
                    let (f, table) = pool.combine(op, i, j);
                    if let Some(id) = pool.offer(f, level, table) {
                        if accepts(&pool.tables[id]) {
                            return Ok(finish(&pool, Some(id), false));
                        }
                    }
                }
            }
        }
    }
    Ok(finish(&pool, None, false))
}
