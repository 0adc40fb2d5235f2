//! Isomorphism-free enumeration of finite MTL-chains.
//!
//! On a chain the order fixes the only candidate bijection, so two chains
//! are isomorphic exactly when their monoid tables coincide and the table
//! itself is the canonical form. Every monotone monoid on a finite chain
//! with `0` absorbing is residuated, so enumerating the monoids is enough.

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteAlgebra};
use crate::filters::{self, FilterError};

pub const DEFAULT_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {0} is too small, need at least 2")]
    BadSize(usize),
    #[error("order {order} exceeds the enumeration budget ({max})")]
    BudgetExceeded { order: usize, max: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Filter(#[from] FilterError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMeta {
    /// Least `n` with `x^n = x^(n+1)` everywhere.
    pub contractivity: usize,
    pub smtl: bool,
    pub involutive: bool,
    pub simple: bool,
    /// Size of the monolith (every finite chain has one).
    pub monolith_size: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct CensusEntry {
    /// 1-based position in table-lexicographic order.
    pub id: usize,
    pub algebra: FiniteAlgebra,
    pub meta: Option<ChainMeta>,
}

impl CensusEntry {
    pub fn stem(&self) -> String {
        chain_stem(self.algebra.size(), self.id)
    }
}

pub fn chain_stem(order: usize, id: usize) -> String {
    format!("chain_{order}_{id:04}")
}

#[derive(Debug, Clone)]
pub struct ChainCensus {
    pub order: usize,
    pub chains: Vec<CensusEntry>,
}

impl ChainCensus {
    pub fn count(&self) -> usize {
        self.chains.len()
    }

    pub fn algebras(&self) -> impl Iterator<Item = &FiniteAlgebra> {
        self.chains.iter().map(|e| &e.algebra)
    }

    pub fn into_algebras(self) -> Vec<FiniteAlgebra> {
        self.chains.into_iter().map(|e| e.algebra).collect()
    }
}

type Table = Vec<u8>;
const UNSET: u8 = u8::MAX;

/// Backtracking generator. Fills the inner upper triangle row by row;
/// monotonicity gives each cell a lower bound from its already-filled
/// left and upper neighbours, and every associativity triple whose entries
/// are all known is checked as soon as a cell is set.
struct Generator {
    n: usize,
    cells: Vec<(usize, usize)>,
}

impl Generator {
    fn new(n: usize) -> Self {
        let cells = (1..n - 1)
            .flat_map(|x| (x..n - 1).map(move |y| (x, y)))
            .collect();
        Generator { n, cells }
    }

    fn initial(&self) -> Table {
        let n = self.n;
        let top = n - 1;
        let mut t = vec![UNSET; n * n];
        for x in 0..n {
            t[x] = 0;
            t[x * n] = 0;
            t[top * n + x] = x as u8;
            t[x * n + top] = x as u8;
        }
        t
    }

    fn set(&self, t: &mut Table, (x, y): (usize, usize), v: u8) {
        t[x * self.n + y] = v;
        t[y * self.n + x] = v;
    }

    fn range(&self, t: &Table, (x, y): (usize, usize)) -> std::ops::RangeInclusive<u8> {
        let n = self.n;
        let lo = t[(x - 1) * n + y].max(t[x * n + y - 1]);
        lo..=(x as u8)
    }

    fn associative_so_far(&self, t: &Table) -> bool {
        let n = self.n;
        let inner = 1..n - 1;
        for a in inner.clone() {
            for b in inner.clone() {
                let ab = t[a * n + b];
                if ab == UNSET {
                    continue;
                }
                for c in inner.clone() {
                    let bc = t[b * n + c];
                    if bc == UNSET {
                        continue;
                    }
                    let left = t[ab as usize * n + c];
                    let right = t[a * n + bc as usize];
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&self, t: &mut Table, depth: usize, out: &mut Vec<Table>) {
        let Some(&cell) = self.cells.get(depth) else {
            out.push(t.clone());
            return;
        };
        for v in self.range(t, cell) {
            self.set(t, cell, v);
            if self.associative_so_far(t) {
                self.extend(t, depth + 1, out);
            }
        }
        self.set(t, cell, UNSET);
    }

    /// All valid partial tables with the first `depth` cells filled.
    fn prefixes(&self, t: &mut Table, depth: usize, stop: usize, out: &mut Vec<Table>) {
        if depth == stop {
            out.push(t.clone());
            return;
        }
        let cell = self.cells[depth];
        for v in self.range(t, cell) {
            self.set(t, cell, v);
            if self.associative_so_far(t) {
                self.prefixes(t, depth + 1, stop, out);
            }
        }
        self.set(t, cell, UNSET);
    }

    fn run(&self) -> Vec<Table> {
        let split = self.cells.len().min(3);
        let mut roots = Vec::new();
        self.prefixes(&mut self.initial(), 0, split, &mut roots);
        let mut all: Vec<Table> = roots
            .into_par_iter()
            .flat_map_iter(|mut root| {
                let mut out = Vec::new();
                self.extend(&mut root, split, &mut out);
                out
            })
            .collect();
        all.sort_unstable();
        all
    }
}

fn check_order(n: usize, max_order: usize) -> Result<(), EnumError> {
    if n < 2 {
        return Err(EnumError::BadSize(n));
    }
    if n > max_order {
        return Err(EnumError::BudgetExceeded {
            order: n,
            max: max_order,
        });
    }
    Ok(())
}

/// The monoid tables of all MTL-chains of order `n`, flattened row-major,
/// in lexicographic order.
pub fn chain_tables(n: usize) -> Result<Vec<Vec<usize>>, EnumError> {
    chain_tables_bounded(n, DEFAULT_MAX_ORDER)
}

pub fn chain_tables_bounded(n: usize, max_order: usize) -> Result<Vec<Vec<usize>>, EnumError> {
    check_order(n, max_order)?;
    Ok(Generator::new(n)
        .run()
        .into_iter()
        .map(|t| t.into_iter().map(usize::from).collect())
        .collect())
}

pub fn enumerate_chains(n: usize) -> Result<ChainCensus, EnumError> {
    enumerate_chains_bounded(n, DEFAULT_MAX_ORDER)
}

/// Like [`enumerate_chains`] with an explicit order budget.
pub fn enumerate_chains_bounded(n: usize, max_order: usize) -> Result<ChainCensus, EnumError> {
    let tables = chain_tables_bounded(n, max_order)?;
    let chains = tables
        .into_iter()
        .enumerate()
        .map(|(i, table)| {
            let algebra = FiniteAlgebra::from_chain_flat(n, table)?
                .with_name(chain_stem(n, i + 1))
                .verified_mtl()?;
            Ok(CensusEntry {
                id: i + 1,
                algebra,
                meta: None,
            })
        })
        .collect::<Result<Vec<_>, EnumError>>()?;
    Ok(ChainCensus { order: n, chains })
}

pub fn chain_metadata(a: &FiniteAlgebra) -> Result<ChainMeta, EnumError> {
    Ok(ChainMeta {
        contractivity: a.contractivity_index()?,
        smtl: a.is_smtl()?,
        involutive: a.is_involutive()?,
        simple: filters::is_simple(a)?,
        monolith_size: filters::monolith(a)?.map(|f| f.len()),
    })
}

/// Fills in the metadata of every member.
pub fn census_metadata(census: &mut ChainCensus) -> Result<(), EnumError> {
    let metas: Vec<ChainMeta> = census
        .chains
        .par_iter()
        .map(|e| chain_metadata(&e.algebra))
        .collect::<Result<_, _>>()?;
    for (entry, meta) in census.chains.iter_mut().zip(metas) {
        entry.meta = Some(meta);
    }
    Ok(())
}
