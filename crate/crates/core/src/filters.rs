//! Filters, the congruences they induce, and subdirect irreducibility.

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::algebra::{AlgebraError, Elem, FiniteAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FilterError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("subset is not a filter")]
    NotAFilter,
    #[error("the one-element algebra has no nontrivial filters")]
    Trivial,
}

/// A subset of an algebra's carrier. Only subsets that pass
/// [`Filter::is_filter_of`] are filters proper; the operations of this
/// module only ever return those.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filter {
    members: FixedBitSet,
}

impl Filter {
    pub fn from_elements(a: &FiniteAlgebra, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut members = FixedBitSet::with_capacity(a.size());
        for x in elems {
            if x < a.size() {
                members.insert(x);
            } else {
                // out-of-range members make the subset a non-filter
                members.grow(x + 1);
                members.insert(x);
            }
        }
        Filter { members }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Contains the top, is upward closed, and is closed under the monoid.
    pub fn is_filter_of(&self, a: &FiniteAlgebra) -> bool {
        if self.members.len() > a.size() && self.members.ones().any(|x| x >= a.size()) {
            return false;
        }
        let elems = self.elements();
        self.contains(a.top())
            && elems
                .iter()
                .all(|&x| a.elements().all(|y| !a.leq(x, y) || self.contains(y)))
            && elems
                .iter()
                .all(|&x| elems.iter().all(|&y| self.contains(a.mult(x, y))))
    }

    /// For each element, the smallest element of its class under
    /// `x ~ y iff x=>y and y=>x lie in the filter`.
    pub fn congruence_classes(&self, a: &FiniteAlgebra) -> Vec<Elem> {
        a.elements()
            .map(|x| {
                a.elements()
                    .find(|&y| self.contains(a.imp(x, y)) && self.contains(a.imp(y, x)))
                    .expect("x ~ x")
            })
            .collect()
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.members.ones().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", cells.join(", "))
    }
}

/// Every filter, ascending by size (ties in lexicographic order of the
/// sorted member lists).
///
/// Backtracks over upward-closed subsets, deciding elements from the top
/// down so that everything above an element is decided before it.
pub fn all_filters(a: &FiniteAlgebra) -> Result<Vec<Filter>, AlgebraError> {
    a.require_verified()?;
    let n = a.size();
    let mut order: Vec<Elem> = a.elements().collect();
    order.sort_by_key(|&x| {
        (
            a.elements().filter(|&y| a.leq(x, y)).count(),
            std::cmp::Reverse(x),
        )
    });

    struct State<'a> {
        a: &'a FiniteAlgebra,
        order: Vec<Elem>,
        // None = undecided
        decided: Vec<Option<bool>>,
        found: Vec<Filter>,
    }

    impl State<'_> {
        fn can_include(&self, x: Elem) -> bool {
            let a = self.a;
            let above_ok = a
                .elements()
                .all(|y| !a.leq(x, y) || y == x || self.decided[y] == Some(true));
            above_ok
                && a.elements()
                    .filter(|&z| z == x || self.decided[z] == Some(true))
                    .all(|z| self.decided[a.mult(x, z)] != Some(false))
        }

        fn can_exclude(&self, x: Elem) -> bool {
            let a = self.a;
            if x == a.top() {
                return false;
            }
            let ins: Vec<Elem> = a
                .elements()
                .filter(|&z| self.decided[z] == Some(true))
                .collect();
            !ins.iter().any(|&p| ins.iter().any(|&q| a.mult(p, q) == x))
        }

        fn go(&mut self, depth: usize) {
            if depth == self.order.len() {
                let f = Filter::from_elements(
                    self.a,
                    self.a.elements().filter(|&x| self.decided[x] == Some(true)),
                );
                debug_assert!(f.is_filter_of(self.a));
                self.found.push(f);
                return;
            }
            let x = self.order[depth];
            for include in [true, false] {
                let ok = if include {
                    self.can_include(x)
                } else {
                    self.can_exclude(x)
                };
                if ok {
                    self.decided[x] = Some(include);
                    self.go(depth + 1);
                    self.decided[x] = None;
                }
            }
        }
    }

    let mut st = State {
        a,
        order,
        decided: vec![None; n],
        found: Vec::new(),
    };
    st.go(0);
    let mut found = st.found;
    found.sort_by_key(|f| (f.len(), f.elements()));
    Ok(found)
}

/// The smallest filter containing `x`.
pub fn principal_filter(a: &FiniteAlgebra, x: Elem) -> Result<Filter, FilterError> {
    a.require_verified()?;
    if x >= a.size() {
        return Err(FilterError::NotAFilter);
    }
    let mut members = vec![false; a.size()];
    members[x] = true;
    loop {
        let current: Vec<Elem> = a.elements().filter(|&y| members[y]).collect();
        let mut next = members.clone();
        for &p in &current {
            for q in a.elements() {
                if a.leq(p, q) {
                    next[q] = true;
                }
            }
            for &q in &current {
                next[a.mult(p, q)] = true;
            }
        }
        if next == members {
            break;
        }
        members = next;
    }
    Ok(Filter::from_elements(
        a,
        a.elements().filter(|&y| members[y]),
    ))
}

/// The monolith: the least filter other than `{top}`, if there is one.
pub fn monolith(a: &FiniteAlgebra) -> Result<Option<Filter>, FilterError> {
    a.require_verified()?;
    if a.size() < 2 {
        return Err(FilterError::Trivial);
    }
    let nontrivial: Vec<Filter> = all_filters(a)?
        .into_iter()
        .filter(|f| f.len() > 1)
        .collect();
    Ok(nontrivial
        .iter()
        .find(|f| nontrivial.iter().all(|g| f.is_subset(g)))
        .cloned())
}

pub fn is_subdirectly_irreducible(a: &FiniteAlgebra) -> Result<bool, FilterError> {
    Ok(monolith(a)?.is_some())
}

/// Exactly two filters: `{top}` and the whole carrier.
pub fn is_simple(a: &FiniteAlgebra) -> Result<bool, AlgebraError> {
    Ok(all_filters(a)?.len() == 2)
}
