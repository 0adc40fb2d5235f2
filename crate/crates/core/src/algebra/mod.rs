//! Finite FL_ew- and MTL-algebras.
//!
//! Elements are the indices `0..n`, with `0` the bottom and `n - 1` the top.
//! An algebra is given by its order and its monoid table; the residuum is
//! always derived (see [`residuate`]) and the lattice operations are computed
//! from the order. Construction does not verify the axioms: call
//! [`FiniteAlgebra::check_axioms`] (or [`FiniteAlgebra::verified`]) before
//! using the algebra anywhere semantic.

mod builders;
pub mod io;

use std::fmt;

use thiserror::Error;

pub use builders::{boolean2, goedel, lukasiewicz, nilpotent_minimum, trivial};

/// An element of a finite algebra, as an index into its carrier.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("empty carrier")]
    EmptyCarrier,
    #[error("{what}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} entry ({x}, {y}) = {value} is not an element")]
    OutOfRange {
        what: &'static str,
        x: Elem,
        y: Elem,
        value: Elem,
    },
    #[error("elements {x} and {y} have no {which} in the order")]
    NotALattice {
        x: Elem,
        y: Elem,
        which: &'static str,
    },
    #[error("no residuum for ({x}, {y}): {{z : z*{x} <= {y}}} has no maximum")]
    NotResiduated { x: Elem, y: Elem },
    #[error("size {0} is too small, need at least 2")]
    BadSize(usize),
    #[error("algebra has not been verified")]
    Unverified,
    #[error("algebra is not a chain")]
    NotChain,
    #[error("{law} fails at {witness:?}")]
    VerificationFailed { law: Law, witness: Vec<Elem> },
}

/// The laws checked by [`FiniteAlgebra::check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    PartialOrder,
    Bounds,
    Lattice,
    Commutativity,
    Associativity,
    Identity,
    Zero,
    Monotonicity,
    Residuation,
    Prelinearity,
}

impl Law {
    pub const ALL: [Law; 10] = [
        Law::PartialOrder,
        Law::Bounds,
        Law::Lattice,
        Law::Commutativity,
        Law::Associativity,
        Law::Identity,
        Law::Zero,
        Law::Monotonicity,
        Law::Residuation,
        Law::Prelinearity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::PartialOrder => "partial-order",
            Law::Bounds => "bounds",
            Law::Lattice => "lattice",
            Law::Commutativity => "commutativity",
            Law::Associativity => "associativity",
            Law::Identity => "identity",
            Law::Zero => "zero",
            Law::Monotonicity => "monotonicity",
            Law::Residuation => "residuation",
            Law::Prelinearity => "prelinearity",
        }
    }

    /// Laws of bounded commutative integral residuated lattices.
    pub fn is_fl_ew(self) -> bool {
        self != Law::Prelinearity
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: Law,
    pub holds: bool,
    /// The first violating tuple, in lexicographic order.
    pub witness: Option<Vec<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport {
    pub checks: Vec<LawCheck>,
}

impl AlgebraReport {
    pub fn holds(&self, law: Law) -> bool {
        self.checks.iter().any(|c| c.law == law && c.holds)
    }

    pub fn fl_ew(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.law.is_fl_ew())
            .all(|c| c.holds)
    }

    pub fn mtl(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&LawCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{:<14} ok", c.law.name())?,
                Some(w) => writeln!(f, "{:<14} FAILS at {:?}", c.law.name(), w)?,
            }
        }
        Ok(())
    }
}

/// How the order of an algebra is stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Index order.
    Chain,
    /// Explicit order matrix.
    Poset,
}

#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    name: Option<String>,
    n: usize,
    kind: Kind,
    leq: Vec<bool>,
    mult: Vec<Elem>,
    imp: Vec<Elem>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    verified: bool,
    mtl: bool,
    total: bool,
    labels: Option<Vec<String>>,
    pairs: Option<Vec<(Elem, Elem)>>,
}

/// Tables are compared; names and labels are not.
impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.leq == other.leq && self.mult == other.mult
    }
}

impl Eq for FiniteAlgebra {}

fn flatten(what: &'static str, n: usize, rows: &[Vec<Elem>]) -> Result<Vec<Elem>, AlgebraError> {
    if rows.len() != n {
        return Err(AlgebraError::DimensionMismatch {
            what,
            expected: n,
            found: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (x, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                what,
                expected: n,
                found: row.len(),
            });
        }
        for (y, &value) in row.iter().enumerate() {
            if value >= n {
                return Err(AlgebraError::OutOfRange { what, x, y, value });
            }
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

/// Derives the residuum of `mult` with respect to `leq` (both flat `n * n`).
///
/// `imp(x, y)` is the maximum of `{z : mult(z, x) <= y}`; the first pair,
/// in lexicographic order, for which that set has no maximum is reported.
pub fn residuate(n: usize, leq: &[bool], mult: &[Elem]) -> Result<Vec<Elem>, AlgebraError> {
    let mut imp = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let below: Vec<Elem> = (0..n).filter(|&z| leq[mult[z * n + x] * n + y]).collect();
            let max = below
                .iter()
                .copied()
                .find(|&m| below.iter().all(|&z| leq[z * n + m]))
                .ok_or(AlgebraError::NotResiduated { x, y })?;
            imp[x * n + y] = max;
        }
    }
    Ok(imp)
}

fn bound(n: usize, leq: &[bool], x: Elem, y: Elem, lower: bool) -> Option<Elem> {
    let le = |a: Elem, b: Elem| {
        if lower {
            leq[a * n + b]
        } else {
            leq[b * n + a]
        }
    };
    let common: Vec<Elem> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
    common
        .iter()
        .copied()
        .find(|&m| common.iter().all(|&z| le(z, m)))
}

impl FiniteAlgebra {
    /// A chain on `0..n` in index order, with the given monoid table.
    pub fn from_chain(mult: &[Vec<Elem>]) -> Result<Self, AlgebraError> {
        let n = mult.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mult = flatten("mult", n, mult)?;
        let leq = (0..n * n).map(|i| i / n <= i % n).collect();
        Self::assemble(n, Kind::Chain, leq, mult)
    }

    /// A chain whose monoid table is given flat, row-major.
    pub fn from_chain_flat(n: usize, mult: Vec<Elem>) -> Result<Self, AlgebraError> {
        let rows: Vec<Vec<Elem>> = mult.chunks(n.max(1)).map(|r| r.to_vec()).collect();
        if mult.len() != n * n {
            return Err(AlgebraError::DimensionMismatch {
                what: "mult",
                expected: n * n,
                found: mult.len(),
            });
        }
        Self::from_chain(&rows)
    }

    /// An algebra over an explicit order matrix.
    pub fn from_poset(leq: &[Vec<bool>], mult: &[Vec<Elem>]) -> Result<Self, AlgebraError> {
        let n = leq.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mut flat_leq = Vec::with_capacity(n * n);
        for row in leq {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch {
                    what: "leq",
                    expected: n,
                    found: row.len(),
                });
            }
            flat_leq.extend_from_slice(row);
        }
        let mult = flatten("mult", n, mult)?;
        Self::assemble(n, Kind::Poset, flat_leq, mult)
    }

    pub(crate) fn from_flat_poset(
        n: usize,
        leq: Vec<bool>,
        mult: Vec<Elem>,
    ) -> Result<Self, AlgebraError> {
        Self::assemble(n, Kind::Poset, leq, mult)
    }

    fn assemble(
        n: usize,
        kind: Kind,
        leq: Vec<bool>,
        mult: Vec<Elem>,
    ) -> Result<Self, AlgebraError> {
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[x * n + y] = bound(n, &leq, x, y, true).ok_or(AlgebraError::NotALattice {
                    x,
                    y,
                    which: "meet",
                })?;
                join[x * n + y] = bound(n, &leq, x, y, false).ok_or(AlgebraError::NotALattice {
                    x,
                    y,
                    which: "join",
                })?;
            }
        }
        let imp = residuate(n, &leq, &mult)?;
        let total = (0..n).all(|x| (0..n).all(|y| leq[x * n + y] || leq[y * n + x]));
        Ok(FiniteAlgebra {
            name: None,
            n,
            kind,
            leq,
            mult,
            imp,
            meet,
            join,
            verified: false,
            mtl: false,
            total,
            labels: None,
            pairs: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub(crate) fn with_pairs(mut self, pairs: Vec<(Elem, Elem)>) -> Self {
        debug_assert_eq!(pairs.len(), self.n);
        self.pairs = Some(pairs);
        self
    }

    /// Runs [`check_axioms`](Self::check_axioms) and fails on the first
    /// violated FL_ew law.
    pub fn verified(mut self) -> Result<Self, AlgebraError> {
        let report = self.check_axioms();
        if !self.verified {
            let bad = report
                .checks
                .iter()
                .find(|c| !c.holds && c.law.is_fl_ew())
                .expect("failure");
            return Err(AlgebraError::VerificationFailed {
                law: bad.law,
                witness: bad.witness.clone().unwrap_or_default(),
            });
        }
        Ok(self)
    }

    /// Like [`verified`](Self::verified) but also demands prelinearity.
    pub fn verified_mtl(self) -> Result<Self, AlgebraError> {
        let a = self.verified()?;
        match a.prelinearity_witness() {
            None => Ok(a),
            Some((x, y)) => Err(AlgebraError::VerificationFailed {
                law: Law::Prelinearity,
                witness: vec![x, y],
            }),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        self.n - 1
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn mult(&self, x: Elem, y: Elem) -> Elem {
        self.mult[x * self.n + y]
    }

    /// The residuum `x => y`.
    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp[x * self.n + y]
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n + y]
    }

    /// `~x = x => 0`.
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.imp(x, 0)
    }

    /// `x^k`, with `x^0` the top.
    pub fn power(&self, x: Elem, k: usize) -> Elem {
        (0..k).fold(self.top(), |acc, _| self.mult(acc, x))
    }

    pub fn mult_rows(&self) -> Vec<Vec<Elem>> {
        self.mult.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn imp_rows(&self) -> Vec<Vec<Elem>> {
        self.imp.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn leq_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// True once verified and prelinearity holds.
    pub fn is_mtl(&self) -> bool {
        self.mtl
    }

    /// Human-readable element name, e.g. `<0,1>` for product elements.
    pub fn label(&self, x: Elem) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// For product algebras, the component pair of each element.
    pub fn pairs(&self) -> Option<&[(Elem, Elem)]> {
        self.pairs.as_deref()
    }

    pub(crate) fn require_verified(&self) -> Result<(), AlgebraError> {
        if self.verified {
            Ok(())
        } else {
            Err(AlgebraError::Unverified)
        }
    }

    /// Checks every law and records the verified/MTL flags.
    pub fn check_axioms(&mut self) -> AlgebraReport {
        let report = self.report();
        self.verified = report.fl_ew();
        self.mtl = report.mtl();
        report
    }

    /// The law report, without touching the flags.
    pub fn report(&self) -> AlgebraReport {
        let n = self.n;
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        let triples = || pairs().flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)));
        let top = self.top();

        let mut checks = Vec::with_capacity(Law::ALL.len());
        let mut push = |law: Law, witness: Option<Vec<Elem>>| {
            checks.push(LawCheck {
                law,
                holds: witness.is_none(),
                witness,
            });
        };

        let partial_order = (0..n)
            .find(|&x| !self.leq(x, x))
            .map(|x| vec![x])
            .or_else(|| {
                pairs()
                    .find(|&(x, y)| x != y && self.leq(x, y) && self.leq(y, x))
                    .map(|(x, y)| vec![x, y])
            })
            .or_else(|| {
                triples()
                    .find(|&(x, y, z)| self.leq(x, y) && self.leq(y, z) && !self.leq(x, z))
                    .map(|(x, y, z)| vec![x, y, z])
            });
        push(Law::PartialOrder, partial_order);

        push(
            Law::Bounds,
            (0..n)
                .find(|&x| !self.leq(0, x) || !self.leq(x, top))
                .map(|x| vec![x]),
        );

        let lattice = triples()
            .find(|&(x, y, z)| {
                let m = self.meet(x, y);
                let j = self.join(x, y);
                !self.leq(m, x)
                    || !self.leq(m, y)
                    || (self.leq(z, x) && self.leq(z, y) && !self.leq(z, m))
                    || !self.leq(x, j)
                    || !self.leq(y, j)
                    || (self.leq(x, z) && self.leq(y, z) && !self.leq(j, z))
            })
            .map(|(x, y, z)| vec![x, y, z]);
        push(Law::Lattice, lattice);

        push(
            Law::Commutativity,
            pairs()
                .find(|&(x, y)| self.mult(x, y) != self.mult(y, x))
                .map(|(x, y)| vec![x, y]),
        );
        push(
            Law::Associativity,
            triples()
                .find(|&(x, y, z)| self.mult(self.mult(x, y), z) != self.mult(x, self.mult(y, z)))
                .map(|(x, y, z)| vec![x, y, z]),
        );
        push(
            Law::Identity,
            (0..n)
                .find(|&x| self.mult(top, x) != x || self.mult(x, top) != x)
                .map(|x| vec![x]),
        );
        push(
            Law::Zero,
            (0..n)
                .find(|&x| self.mult(0, x) != 0 || self.mult(x, 0) != 0)
                .map(|x| vec![x]),
        );
        push(
            Law::Monotonicity,
            triples()
                .find(|&(x, y, z)| {
                    self.leq(x, y)
                        && (!self.leq(self.mult(x, z), self.mult(y, z))
                            || !self.leq(self.mult(z, x), self.mult(z, y)))
                })
                .map(|(x, y, z)| vec![x, y, z]),
        );
        push(
            Law::Residuation,
            triples()
                .find(|&(x, y, z)| self.leq(self.mult(z, x), y) != self.leq(z, self.imp(x, y)))
                .map(|(x, y, z)| vec![x, y, z]),
        );
        push(
            Law::Prelinearity,
            self.prelinearity_witness().map(|(x, y)| vec![x, y]),
        );

        AlgebraReport { checks }
    }

    fn prelinearity_witness(&self) -> Option<(Elem, Elem)> {
        let top = self.top();
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| self.join(self.imp(x, y), self.imp(y, x)) != top)
    }

    /// Whether the order is total.
    pub fn is_chain(&self) -> Result<bool, AlgebraError> {
        self.require_verified()?;
        Ok(self.total)
    }

    pub fn is_well_connected(&self) -> Result<bool, AlgebraError> {
        Ok(self.well_connected_witness()?.is_none())
    }

    /// First pair `(x, y)` with `x v y = 1` but neither equal to 1.
    pub fn well_connected_witness(&self) -> Result<Option<(Elem, Elem)>, AlgebraError> {
        self.require_verified()?;
        let top = self.top();
        Ok((0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| self.join(x, y) == top && x != top && y != top))
    }

    /// `x^n = x^(n+1)` for every element.
    pub fn is_n_contractive(&self, n: usize) -> Result<bool, AlgebraError> {
        self.require_verified()?;
        Ok(self
            .elements()
            .all(|x| self.power(x, n) == self.power(x, n + 1)))
    }

    /// First element with `x^n != x^(n+1)`.
    pub fn contractivity_witness(&self, n: usize) -> Result<Option<Elem>, AlgebraError> {
        self.require_verified()?;
        Ok(self
            .elements()
            .find(|&x| self.power(x, n) != self.power(x, n + 1)))
    }

    /// The least `n >= 1` for which the algebra is n-contractive.
    pub fn contractivity_index(&self) -> Result<usize, AlgebraError> {
        self.require_verified()?;
        // powers descend, so they settle after at most `size` steps
        Ok((1..=self.n.max(1))
            .find(|&k| {
                self.elements()
                    .all(|x| self.power(x, k) == self.power(x, k + 1))
            })
            .unwrap_or(self.n))
    }

    /// `x /\ ~x = 0` for every element.
    pub fn is_smtl(&self) -> Result<bool, AlgebraError> {
        Ok(self.smtl_witness()?.is_none())
    }

    /// First `x` with `x /\ ~x != 0`.
    pub fn smtl_witness(&self) -> Result<Option<Elem>, AlgebraError> {
        self.require_verified()?;
        Ok(self.elements().find(|&x| self.meet(x, self.neg(x)) != 0))
    }

    /// `~~x = x` for every element.
    pub fn is_involutive(&self) -> Result<bool, AlgebraError> {
        self.require_verified()?;
        Ok(self.elements().all(|x| self.neg(self.neg(x)) == x))
    }

    /// Elements with `x * x = x`.
    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.mult(x, x) == x).collect()
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::write_algebra(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(rows: &[&[Elem]]) -> FiniteAlgebra {
        let rows: Vec<Vec<Elem>> = rows.iter().map(|r| r.to_vec()).collect();
        FiniteAlgebra::from_chain(&rows).unwrap()
    }

    #[test]
    fn residuate_goedel3() {
        let g3 = goedel(3).unwrap();
        assert_eq!(g3.imp(2, 1), 1);
        assert_eq!(g3.imp(1, 0), 0);
        assert_eq!(g3.imp(1, 2), 2);
    }

    #[test]
    fn residuate_lukasiewicz3() {
        let l3 = lukasiewicz(3).unwrap();
        assert_eq!(l3.imp(1, 0), 1);
    }

    #[test]
    fn residuum_from_bottom_is_top() {
        for a in [
            lukasiewicz(4).unwrap(),
            goedel(5).unwrap(),
            nilpotent_minimum(4).unwrap(),
        ] {
            for x in a.elements() {
                assert_eq!(a.imp(0, x), a.top());
            }
        }
    }

    #[test]
    fn residuate_reports_first_failing_pair() {
        // mult(0, x) = 1 leaves {z : z*0 <= 0} empty
        let err = FiniteAlgebra::from_chain(&[vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, AlgebraError::NotResiduated { x: 0, y: 0 });
    }

    #[test]
    fn residuate_without_maximum_in_a_poset() {
        // diamond 0 < 1, 2 < 3 with the constant-0 monoid on non-top pairs:
        // {z : z*x <= 0} for x = 1 contains 0, 1, 2 but not 3, so no maximum
        let leq = vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ];
        let mult = vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 0, 2],
            vec![0, 1, 2, 3],
        ];
        let err = FiniteAlgebra::from_poset(&leq, &mult).unwrap_err();
        assert_eq!(err, AlgebraError::NotResiduated { x: 1, y: 0 });
    }

    #[test]
    fn lukasiewicz3_passes_all_laws() {
        let mut l3 = lukasiewicz(3).unwrap();
        let report = l3.check_axioms();
        assert!(report.mtl(), "{report}");
        assert!(l3.is_verified() && l3.is_mtl());
    }

    fn diamond(extra_top: bool) -> FiniteAlgebra {
        // 0 < a, b < (c <) 1 with monoid = meet
        let n = if extra_top { 5 } else { 4 };
        let top = n - 1;
        let c = if extra_top { 3 } else { top };
        let above = |x: usize| -> Vec<usize> {
            match x {
                0 => (0..n).collect(),
                1 => vec![1, c, top],
                2 => vec![2, c, top],
                _ if x == c => vec![c, top],
                _ => vec![top],
            }
        };
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|x| (0..n).map(|y| above(x).contains(&y)).collect())
            .collect();
        let meet = |x: usize, y: usize| {
            (0..n)
                .filter(|&z| leq[z][x] && leq[z][y])
                .max_by_key(|&z| (0..n).filter(|&w| leq[w][z]).count())
                .unwrap()
        };
        let mult: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| meet(x, y)).collect())
            .collect();
        FiniteAlgebra::from_poset(&leq, &mult).unwrap()
    }

    #[test]
    fn four_element_diamond_is_prelinear() {
        // the min-monoid diamond is the Boolean algebra 2x2
        let mut d = diamond(false);
        let report = d.check_axioms();
        assert!(report.mtl(), "{report}");
        assert_eq!(d.imp(1, 2), 2);
        assert_eq!(d.imp(2, 1), 1);
    }

    #[test]
    fn diamond_below_a_coatom_is_not_prelinear() {
        let mut d = diamond(true);
        let report = d.check_axioms();
        assert!(report.fl_ew(), "{report}");
        assert!(!report.mtl());
        let pre = report
            .checks
            .iter()
            .find(|c| c.law == Law::Prelinearity)
            .unwrap();
        assert_eq!(pre.witness, Some(vec![1, 2]));
        assert!(d.is_verified() && !d.is_mtl());
        assert!(matches!(
            d.clone().verified_mtl(),
            Err(AlgebraError::VerificationFailed {
                law: Law::Prelinearity,
                ..
            })
        ));
    }

    #[test]
    fn associativity_failure_is_witnessed() {
        // monotone, commutative, identity and zero hold; (1*2)*2 = 1 but 1*(2*2) = 0
        let mut a = chain(&[&[0, 0, 0, 0], &[0, 0, 1, 1], &[0, 1, 1, 2], &[0, 1, 2, 3]]);
        let report = a.check_axioms();
        assert!(!report.fl_ew());
        let bad = report.first_failure().unwrap();
        assert_eq!(bad.law, Law::Associativity);
        assert_eq!(bad.witness, Some(vec![1, 2, 2]));
        assert!(!a.is_verified());
        assert!(matches!(
            a.verified(),
            Err(AlgebraError::VerificationFailed {
                law: Law::Associativity,
                ..
            })
        ));
    }

    #[test]
    fn dimension_and_range_errors() {
        assert_eq!(
            FiniteAlgebra::from_chain(&[vec![0, 0], vec![0]]),
            Err(AlgebraError::DimensionMismatch {
                what: "mult",
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            FiniteAlgebra::from_chain(&[vec![0, 0], vec![0, 2]]),
            Err(AlgebraError::OutOfRange {
                x: 1,
                y: 1,
                value: 2,
                ..
            })
        ));
        assert_eq!(
            FiniteAlgebra::from_chain(&[]),
            Err(AlgebraError::EmptyCarrier)
        );
    }

    #[test]
    fn semantic_predicates_demand_verification() {
        let a = chain(&[&[0, 0], &[0, 1]]);
        assert_eq!(a.is_chain(), Err(AlgebraError::Unverified));
        assert_eq!(a.is_smtl(), Err(AlgebraError::Unverified));
        assert_eq!(a.is_n_contractive(1), Err(AlgebraError::Unverified));
        assert!(a.verified().unwrap().is_chain().unwrap());
    }

    #[test]
    fn chain_and_well_connected() {
        let l3 = lukasiewicz(3).unwrap();
        assert!(l3.is_chain().unwrap());
        assert!(l3.is_well_connected().unwrap());
    }

    #[test]
    fn n_contractive() {
        for k in 2..7 {
            assert!(goedel(k).unwrap().is_n_contractive(1).unwrap());
        }
        let l4 = lukasiewicz(4).unwrap();
        assert!(l4.is_n_contractive(3).unwrap());
        assert!(!l4.is_n_contractive(2).unwrap());
        assert_eq!(l4.contractivity_witness(2).unwrap(), Some(2));
        assert_eq!(l4.power(2, 2), 1);
        assert_eq!(l4.power(2, 3), 0);
        for a in [l4, nilpotent_minimum(5).unwrap(), goedel(3).unwrap()] {
            assert!(a.is_n_contractive(a.size()).unwrap());
        }
    }

    #[test]
    fn smtl_and_involutive() {
        assert!(goedel(3).unwrap().is_smtl().unwrap());
        let l3 = lukasiewicz(3).unwrap();
        assert!(!l3.is_smtl().unwrap());
        assert_eq!(l3.smtl_witness().unwrap(), Some(1));
        assert_eq!(l3.meet(1, l3.neg(1)), 1);
        assert!(l3.is_involutive().unwrap());
        assert!(!goedel(3).unwrap().is_involutive().unwrap());
    }
}
