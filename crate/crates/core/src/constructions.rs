//! Direct products, ordinal sums, generated subalgebras and quotients.
//! Every output is re-derived from its order and monoid and re-verified.

use std::collections::BTreeSet;

use crate::algebra::{AlgebraError, Elem, FiniteAlgebra};
use crate::filters::{Filter, FilterError};
use crate::morphism::Morphism;

/// Componentwise product, indexed lexicographically: `<a, b>` is
/// `a * |B| + b`.
pub fn product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    a.require_verified()?;
    b.require_verified()?;
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let pairs: Vec<(Elem, Elem)> = (0..na).flat_map(|x| (0..nb).map(move |y| (x, y))).collect();
    let index = |(x, y): (Elem, Elem)| x * nb + y;
    let mut leq = Vec::with_capacity(n * n);
    let mut mult = Vec::with_capacity(n * n);
    for &(x1, y1) in &pairs {
        for &(x2, y2) in &pairs {
            leq.push(a.leq(x1, x2) && b.leq(y1, y2));
            mult.push(index((a.mult(x1, x2), b.mult(y1, y2))));
        }
    }
    let labels = pairs
        .iter()
        .map(|&(x, y)| format!("<{},{}>", a.label(x), b.label(y)))
        .collect();
    let name = format!("{}x{}", a.name().unwrap_or("A"), b.name().unwrap_or("B"));
    FiniteAlgebra::from_flat_poset(n, leq, mult)?
        .with_name(name)
        .with_labels(labels)
        .with_pairs(pairs)
        .verified()
}

/// Stacks `b` on top of `a`, identifying the top of `a` with the bottom of
/// `b`. Within each part the part's own monoid applies; across parts the
/// product is the lower element.
pub fn ordinal_sum(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    for part in [a, b] {
        part.require_verified()?;
        if !part.is_chain()? {
            return Err(AlgebraError::NotChain);
        }
    }
    let shared = a.top();
    let n = a.size() + b.size() - 1;
    let rows: Vec<Vec<Elem>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x <= shared && y <= shared {
                        a.mult(x, y)
                    } else if x >= shared && y >= shared {
                        b.mult(x - shared, y - shared) + shared
                    } else {
                        x.min(y)
                    }
                })
                .collect()
        })
        .collect();
    let name = format!("{}+{}", a.name().unwrap_or("A"), b.name().unwrap_or("B"));
    FiniteAlgebra::from_chain(&rows)?
        .with_name(name)
        .verified_mtl()
}

/// Smallest subuniverse containing `generators`, both constants, and closed
/// under all operations; returned with its inclusion map.
pub fn subalgebra_generated(
    a: &FiniteAlgebra,
    generators: &[Elem],
) -> Result<(FiniteAlgebra, Morphism), AlgebraError> {
    a.require_verified()?;
    if let Some(&bad) = generators.iter().find(|&&g| g >= a.size()) {
        return Err(AlgebraError::OutOfRange {
            what: "generator",
            x: bad,
            y: bad,
            value: bad,
        });
    }
    let mut set: BTreeSet<Elem> = generators.iter().copied().collect();
    set.insert(a.bottom());
    set.insert(a.top());
    loop {
        let current: Vec<Elem> = set.iter().copied().collect();
        let before = set.len();
        for &x in &current {
            for &y in &current {
                set.extend([a.mult(x, y), a.imp(x, y), a.meet(x, y), a.join(x, y)]);
            }
        }
        if set.len() == before {
            break;
        }
    }
    let inclusion: Vec<Elem> = set.into_iter().collect();
    let sub = induced(a, &inclusion)?;
    let m = Morphism::checked(inclusion, &sub, a);
    debug_assert!(m.is_embedding());
    Ok((sub, m))
}

/// The algebra induced on a closed subset listed in ascending index order.
fn induced(a: &FiniteAlgebra, elems: &[Elem]) -> Result<FiniteAlgebra, AlgebraError> {
    let pos = |x: Elem| elems.binary_search(&x).expect("closed subset");
    let n = elems.len();
    let chain = a.is_chain()?;
    let mult: Vec<Vec<Elem>> = elems
        .iter()
        .map(|&x| elems.iter().map(|&y| pos(a.mult(x, y))).collect())
        .collect();
    let sub = if chain {
        FiniteAlgebra::from_chain(&mult)?
    } else {
        let leq: Vec<Vec<bool>> = elems
            .iter()
            .map(|&x| elems.iter().map(|&y| a.leq(x, y)).collect())
            .collect();
        FiniteAlgebra::from_poset(&leq, &mult)?
    };
    let labels = elems.iter().map(|&x| a.label(x)).collect();
    debug_assert_eq!(sub.size(), n);
    sub.with_labels(labels).verified()
}

/// The quotient by the congruence `x ~ y iff x=>y, y=>x in F`. Classes are
/// represented by their smallest element; the class of the top comes last.
pub fn quotient(
    a: &FiniteAlgebra,
    filter: &Filter,
) -> Result<(FiniteAlgebra, Morphism), FilterError> {
    a.require_verified()?;
    if !filter.is_filter_of(a) {
        return Err(FilterError::NotAFilter);
    }
    let classes = filter.congruence_classes(a);
    let mut reps: Vec<Elem> = classes.clone();
    reps.sort_unstable();
    reps.dedup();
    let top_rep = classes[a.top()];
    reps.retain(|&r| r != top_rep);
    reps.push(top_rep);
    let rank = |x: Elem| reps.iter().position(|&r| r == classes[x]).expect("class");
    let n = reps.len();
    let mult: Vec<Vec<Elem>> = reps
        .iter()
        .map(|&x| reps.iter().map(|&y| rank(a.mult(x, y))).collect())
        .collect();
    let q = if a.is_chain()? {
        FiniteAlgebra::from_chain(&mult)?
    } else {
        let leq: Vec<Vec<bool>> = reps
            .iter()
            .map(|&x| reps.iter().map(|&y| filter.contains(a.imp(x, y))).collect())
            .collect();
        FiniteAlgebra::from_poset(&leq, &mult)?
    };
    debug_assert_eq!(q.size(), n);
    let q = q.verified()?;
    let surjection = Morphism::checked(a.elements().map(rank).collect(), a, &q);
    debug_assert!(surjection.hom);
    Ok((q, surjection))
}
