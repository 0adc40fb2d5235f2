//! Brute-force reference implementations, written independently of the
//! library's search and evaluation code. Each works straight from the
//! stored order and monoid.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use mtl_core::{Elem, FiniteAlgebra, Formula};

/// Greatest element of `cands` in the algebra's order, if one exists.
fn greatest(a: &FiniteAlgebra, cands: &[Elem]) -> Option<Elem> {
    cands
        .iter()
        .copied()
        .find(|&g| cands.iter().all(|&z| a.leq(z, g)))
}

pub fn residuum(a: &FiniteAlgebra, x: Elem, y: Elem) -> Elem {
    let below: Vec<Elem> = a.elements().filter(|&z| a.leq(a.mult(z, x), y)).collect();
    greatest(a, &below).expect("residuated")
}

pub fn meet(a: &FiniteAlgebra, x: Elem, y: Elem) -> Elem {
    let lower: Vec<Elem> = a
        .elements()
        .filter(|&z| a.leq(z, x) && a.leq(z, y))
        .collect();
    greatest(a, &lower).expect("lattice")
}

pub fn join(a: &FiniteAlgebra, x: Elem, y: Elem) -> Elem {
    let upper: Vec<Elem> = a
        .elements()
        .filter(|&z| a.leq(x, z) && a.leq(y, z))
        .collect();
    upper
        .iter()
        .copied()
        .find(|&l| upper.iter().all(|&z| a.leq(l, z)))
        .expect("lattice")
}

pub fn top(a: &FiniteAlgebra) -> Elem {
    a.elements()
        .find(|&t| a.elements().all(|z| a.leq(z, t)))
        .expect("bounded")
}

pub fn eval(a: &FiniteAlgebra, f: &Formula, v: &BTreeMap<String, Elem>) -> Elem {
    match f {
        Formula::Var(x) => v[x],
        Formula::Bot => a
            .elements()
            .find(|&b| a.elements().all(|z| a.leq(b, z)))
            .expect("bounded"),
        Formula::Conj(l, r) => a.mult(eval(a, l, v), eval(a, r, v)),
        Formula::Meet(l, r) => meet(a, eval(a, l, v), eval(a, r, v)),
        Formula::Impl(l, r) => residuum(a, eval(a, l, v), eval(a, r, v)),
    }
}

/// Every assignment of the given variables.
pub fn assignments(a: &FiniteAlgebra, vars: &BTreeSet<String>) -> Vec<BTreeMap<String, Elem>> {
    let mut out = vec![BTreeMap::new()];
    for var in vars {
        out = out
            .into_iter()
            .flat_map(|v| {
                a.elements().map(move |x| {
                    let mut w = v.clone();
                    w.insert(var.clone(), x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `premises |= goal` by exhaustive evaluation.
pub fn entails(a: &FiniteAlgebra, premises: &[Formula], goal: &Formula) -> bool {
    let mut vars = goal.vars();
    for p in premises {
        vars.extend(p.vars());
    }
    let t = top(a);
    assignments(a, &vars)
        .iter()
        .all(|v| premises.iter().any(|p| eval(a, p, v) != t) || eval(a, goal, v) == t)
}

pub fn tautology(a: &FiniteAlgebra, f: &Formula) -> bool {
    entails(a, &[], f)
}

/// Full homomorphism check on the constants and all four operations.
pub fn is_hom(src: &FiniteAlgebra, dst: &FiniteAlgebra, map: &[Elem]) -> bool {
    map.len() == src.size()
        && map[0] == 0
        && map[top(src)] == top(dst)
        && src.elements().all(|x| {
            src.elements().all(|y| {
                map[src.mult(x, y)] == dst.mult(map[x], map[y])
                    && map[residuum(src, x, y)] == residuum(dst, map[x], map[y])
                    && map[meet(src, x, y)] == meet(dst, map[x], map[y])
                    && map[join(src, x, y)] == join(dst, map[x], map[y])
            })
        })
}

pub fn is_injective(map: &[Elem]) -> bool {
    map.iter().collect::<BTreeSet<_>>().len() == map.len()
}

/// All injective homomorphisms, by trying every map.
pub fn embeddings(src: &FiniteAlgebra, dst: &FiniteAlgebra) -> Vec<Vec<Elem>> {
    let mut maps: Vec<Vec<Elem>> = vec![vec![]];
    for _ in src.elements() {
        maps = maps
            .into_iter()
            .flat_map(|m| dst.elements().map(move |y| [m.clone(), vec![y]].concat()))
            .collect();
    }
    maps.into_iter()
        .filter(|m| is_injective(m) && is_hom(src, dst, m))
        .collect()
}

/// Monoid tables of all MTL-chains of order `n`: every table with
/// bottom and top rows fixed and inner cells in `0..=min(x, y)`, kept when
/// commutative, monotone, and associative.
pub fn chain_tables(n: usize) -> Vec<Vec<Vec<Elem>>> {
    let top = n - 1;
    let inner: Vec<(usize, usize)> = (1..top)
        .flat_map(|x| (1..top).map(move |y| (x, y)))
        .collect();
    let mut tables: Vec<Vec<Vec<Elem>>> = vec![(0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if x == top {
                        y
                    } else if y == top {
                        x
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()];
    for &(x, y) in &inner {
        tables = tables
            .into_iter()
            .flat_map(|t| {
                (0..=x.min(y)).map(move |v| {
                    let mut t = t.clone();
                    t[x][y] = v;
                    t
                })
            })
            .filter(|t| y >= x || t[x][y] == t[y][x])
            .collect();
    }
    let mut good: Vec<Vec<Vec<Elem>>> = tables
        .into_iter()
        .filter(|t| {
            let el = 0..n;
            el.clone().all(|a| el.clone().all(|b| t[a][b] == t[b][a]))
                && el.clone().all(|a| {
                    el.clone()
                        .all(|b| el.clone().all(|c| b > c || t[a][b] <= t[a][c]))
                })
                && el.clone().all(|a| {
                    el.clone()
                        .all(|b| el.clone().all(|c| t[t[a][b]][c] == t[a][t[b][c]]))
                })
        })
        .collect();
    good.sort();
    good
}

/// Up-sets of idempotents; in a finite integral residuated lattice these
/// are exactly the filters.
pub fn filters(a: &FiniteAlgebra) -> Vec<BTreeSet<Elem>> {
    let mut out: Vec<BTreeSet<Elem>> = a
        .elements()
        .filter(|&e| a.mult(e, e) == e)
        .map(|e| a.elements().filter(|&y| a.leq(e, y)).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The unique minimal filter other than `{top}`, if there is one.
pub fn monolith(a: &FiniteAlgebra) -> Option<BTreeSet<Elem>> {
    let nontrivial: Vec<BTreeSet<Elem>> = filters(a).into_iter().filter(|f| f.len() > 1).collect();
    let minimal: Vec<&BTreeSet<Elem>> = nontrivial
        .iter()
        .filter(|f| !nontrivial.iter().any(|g| g != *f && g.is_subset(f)))
        .collect();
    match minimal.as_slice() {
        [only] => Some((*only).clone()),
        _ => None,
    }
}

/// Least `k >= 1` with `x^k = x^(k+1)` for all `x`, by repeated
/// multiplication.
pub fn contractivity(a: &FiniteAlgebra) -> usize {
    let t = top(a);
    let pow = |x: Elem, k: usize| (0..k).fold(t, |acc, _| a.mult(acc, x));
    (1..)
        .find(|&k| a.elements().all(|x| pow(x, k) == pow(x, k + 1)))
        .expect("finite")
}
