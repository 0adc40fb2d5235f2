//! Embedding, isomorphism, joint-embedding and amalgamation search over
//! explicit finite target lists.
//!
//! Every search is exhaustive over what it is given. A `None` from
//! [`find_joint_embedding`] or [`find_amalgam`] is a statement about the
//! supplied targets only, never about a whole variety.

use std::ops::ControlFlow;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::morphism::{is_homomorphism, Morphism};

type BinOp = fn(&FiniteAlgebra, Elem, Elem) -> Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("algebra has not been verified")]
    Unverified,
    #[error("invalid amalgamation span: {0}")]
    InvalidSpan(String),
}

fn require(algebras: &[&FiniteAlgebra]) -> Result<(), ModelError> {
    if algebras.iter().all(|a| a.is_verified()) {
        Ok(())
    } else {
        Err(ModelError::Unverified)
    }
}

/// Backtracking over injective partial maps, extended along ascending
/// source elements and pruned on every operation-table violation over the
/// defined sub-domain.
struct Search<'a> {
    src: &'a FiniteAlgebra,
    dst: &'a FiniteAlgebra,
    map: Vec<Option<Elem>>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(src: &'a FiniteAlgebra, dst: &'a FiniteAlgebra) -> Self {
        Search {
            src,
            dst,
            map: vec![None; src.size()],
            used: vec![false; dst.size()],
        }
    }

    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        if self.used[y] || self.map[x].is_some() {
            return self.map[x] == Some(y);
        }
        self.map[x] = Some(y);
        self.used[y] = true;
        if self.consistent(x) {
            true
        } else {
            self.unassign(x);
            false
        }
    }

    fn unassign(&mut self, x: Elem) {
        if let Some(y) = self.map[x].take() {
            self.used[y] = false;
        }
    }

    fn consistent(&self, x: Elem) -> bool {
        let (src, dst) = (self.src, self.dst);
        let fx = self.map[x].expect("assigned");
        let defined: Vec<(Elem, Elem)> = self
            .map
            .iter()
            .enumerate()
            .filter_map(|(a, fa)| fa.map(|fa| (a, fa)))
            .collect();
        for &(y, fy) in &defined {
            if src.leq(x, y) != dst.leq(fx, fy) || src.leq(y, x) != dst.leq(fy, fx) {
                return false;
            }
        }
        let ops: [(BinOp, bool); 4] = [
            (FiniteAlgebra::mult, true),
            (FiniteAlgebra::meet, true),
            (FiniteAlgebra::join, true),
            (FiniteAlgebra::imp, false),
        ];
        for &(a, fa) in &defined {
            for &(b, fb) in &defined {
                for &(op, commutative) in &ops {
                    if commutative && b < a {
                        continue;
                    }
                    let r = op(src, a, b);
                    if a != x && b != x && r != x {
                        continue;
                    }
                    let fr = op(dst, fa, fb);
                    match self.map[r] {
                        Some(mapped) if mapped != fr => return false,
                        None if self.used[fr] => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn run<F>(&mut self, next: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Elem]) -> ControlFlow<()>,
    {
        let Some(x) = (next..self.src.size()).find(|&x| self.map[x].is_none()) else {
            let full: Vec<Elem> = self.map.iter().map(|v| v.expect("total")).collect();
            return visit(&full);
        };
        for y in 0..self.dst.size() {
            if self.assign(x, y) {
                self.run(x + 1, visit)?;
                self.unassign(x);
            }
        }
        ControlFlow::Continue(())
    }

    /// Visits every embedding agreeing with `fixed`, in lexicographic order
    /// of the maps.
    fn each<F>(src: &FiniteAlgebra, dst: &FiniteAlgebra, fixed: &[(Elem, Elem)], mut visit: F)
    where
        F: FnMut(&[Elem]) -> ControlFlow<()>,
    {
        if src.size() > dst.size() || (src.size() == 1) != (dst.size() == 1) {
            return;
        }
        let mut s = Search::new(src, dst);
        let constants = [(src.bottom(), dst.bottom()), (src.top(), dst.top())];
        for &(x, y) in constants.iter().chain(fixed) {
            if !s.assign(x, y) {
                return;
            }
        }
        let _ = s.run(0, &mut visit);
    }
}

fn embedding(map: &[Elem], src: &FiniteAlgebra, dst: &FiniteAlgebra) -> Morphism {
    let m = Morphism::checked(map.to_vec(), src, dst);
    debug_assert!(m.is_embedding(), "search produced a non-embedding {m}");
    m
}

/// All injective homomorphisms `a -> c`, in lexicographic order.
pub fn find_embeddings(a: &FiniteAlgebra, c: &FiniteAlgebra) -> Result<Vec<Morphism>, ModelError> {
    require(&[a, c])?;
    let mut out = Vec::new();
    Search::each(a, c, &[], |m| {
        out.push(embedding(m, a, c));
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// The lexicographically first embedding `a -> c`, if any.
pub fn first_embedding(
    a: &FiniteAlgebra,
    c: &FiniteAlgebra,
) -> Result<Option<Morphism>, ModelError> {
    require(&[a, c])?;
    Ok(first_constrained(a, c, &[]))
}

fn first_constrained(
    a: &FiniteAlgebra,
    c: &FiniteAlgebra,
    fixed: &[(Elem, Elem)],
) -> Option<Morphism> {
    let mut found = None;
    Search::each(a, c, fixed, |m| {
        found = Some(embedding(m, a, c));
        ControlFlow::Break(())
    });
    found
}

/// Finds an isomorphism `a -> b`. Chains admit only the index-order
/// bijection, so for them this is a table comparison.
pub fn are_isomorphic(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
) -> Result<Option<Morphism>, ModelError> {
    require(&[a, b])?;
    if a.size() != b.size() {
        return Ok(None);
    }
    if a.is_chain().unwrap_or(false) && b.is_chain().unwrap_or(false) {
        return Ok((a.mult_rows() == b.mult_rows()).then(|| Morphism::identity(a)));
    }
    Ok(first_constrained(a, b, &[]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointEmbedding {
    /// Position of the host in the target list.
    pub target: usize,
    pub left: Morphism,
    pub right: Morphism,
}

/// The first target hosting embeddings of both `a` and `b`.
pub fn find_joint_embedding(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    targets: &[FiniteAlgebra],
) -> Result<Option<JointEmbedding>, ModelError> {
    require(&[a, b])?;
    if targets.iter().any(|t| !t.is_verified()) {
        return Err(ModelError::Unverified);
    }
    Ok(targets
        .par_iter()
        .enumerate()
        .find_map_first(|(target, c)| {
            let left = first_constrained(a, c, &[])?;
            let right = first_constrained(b, c, &[])?;
            Some(JointEmbedding {
                target,
                left,
                right,
            })
        }))
}

/// A pair of embeddings `i: A -> B`, `j: A -> C` with a common source.
#[derive(Debug, Clone)]
pub struct AmalgamationSpan {
    pub a: FiniteAlgebra,
    pub b: FiniteAlgebra,
    pub c: FiniteAlgebra,
    pub i: Morphism,
    pub j: Morphism,
}

impl AmalgamationSpan {
    pub fn new(
        a: FiniteAlgebra,
        b: FiniteAlgebra,
        c: FiniteAlgebra,
        i: Vec<Elem>,
        j: Vec<Elem>,
    ) -> Result<Self, ModelError> {
        for (name, alg) in [("A", &a), ("B", &b), ("C", &c)] {
            if !alg.is_verified() {
                return Err(ModelError::InvalidSpan(format!("{name} is not verified")));
            }
        }
        let i = Morphism::checked(i, &a, &b);
        let j = Morphism::checked(j, &a, &c);
        for (name, m) in [("i", &i), ("j", &j)] {
            if !m.is_embedding() {
                return Err(ModelError::InvalidSpan(format!(
                    "{name} = {m} is not an embedding"
                )));
            }
        }
        Ok(AmalgamationSpan { a, b, c, i, j })
    }

    /// The span `A <- A -> A`-style V shape: both legs are the given
    /// embeddings of `a` found first in `b` and `c`.
    pub fn from_first_embeddings(
        a: FiniteAlgebra,
        b: FiniteAlgebra,
        c: FiniteAlgebra,
    ) -> Result<Self, ModelError> {
        let i = first_embedding(&a, &b)?
            .ok_or_else(|| ModelError::InvalidSpan("A does not embed into B".into()))?;
        let j = first_embedding(&a, &c)?
            .ok_or_else(|| ModelError::InvalidSpan("A does not embed into C".into()))?;
        Self::new(a, b, c, i.map, j.map)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Amalgam {
    pub target: usize,
    pub h: Morphism,
    pub k: Morphism,
}

/// First target `D` with embeddings `h: B -> D`, `k: C -> D` agreeing on
/// the images of `A` (`h∘i = k∘j`, checked on A's carrier).
pub fn find_amalgam(
    span: &AmalgamationSpan,
    targets: &[FiniteAlgebra],
) -> Result<Option<Amalgam>, ModelError> {
    if targets.iter().any(|t| !t.is_verified()) {
        return Err(ModelError::Unverified);
    }
    Ok(targets
        .par_iter()
        .enumerate()
        .find_map_first(|(target, d)| {
            let mut found = None;
            Search::each(&span.b, d, &[], |h| {
                let fixed: Vec<(Elem, Elem)> = span
                    .a
                    .elements()
                    .map(|x| (span.j.apply(x), h[span.i.apply(x)]))
                    .collect();
                if let Some(k) = first_constrained(&span.c, d, &fixed) {
                    found = Some((embedding(h, &span.b, d), k));
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            found.map(|(h, k)| Amalgam { target, h, k })
        }))
}

/// Independent re-check of an amalgam certificate.
pub fn amalgam_commutes(
    span: &AmalgamationSpan,
    d: &FiniteAlgebra,
    h: &Morphism,
    k: &Morphism,
) -> bool {
    is_homomorphism(&span.b, d, &h.map)
        && is_homomorphism(&span.c, d, &k.map)
        && h.injective
        && k.injective
        && span
            .a
            .elements()
            .all(|x| h.apply(span.i.apply(x)) == k.apply(span.j.apply(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean2, goedel, lukasiewicz, nilpotent_minimum};
    use crate::constructions::{ordinal_sum, product};
    use crate::morphism::is_injective;

    /// Brute-force oracle: every injective map, filtered by the full
    /// homomorphism check.
    fn all_injective_homs(a: &FiniteAlgebra, c: &FiniteAlgebra) -> Vec<Vec<Elem>> {
        let (n, m) = (a.size(), c.size());
        let mut out = Vec::new();
        let total = m.pow(n as u32);
        for mut code in 0..total {
            let mut map = vec![0; n];
            for slot in map.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            if is_injective(&map) && is_homomorphism(a, c, &map) {
                out.push(map);
            }
        }
        out
    }

    #[test]
    fn boolean_embeds_uniquely_everywhere() {
        let corpus = [
            lukasiewicz(4).unwrap(),
            goedel(5).unwrap(),
            product(&goedel(3).unwrap(), &lukasiewicz(3).unwrap()).unwrap(),
        ];
        for c in &corpus {
            let found = find_embeddings(&boolean2(), c).unwrap();
            assert_eq!(found.len(), 1);
            assert_eq!(found[0].map, vec![0, c.top()]);
        }
    }

    #[test]
    fn lukasiewicz3_into_lukasiewicz5() {
        let found = find_embeddings(&lukasiewicz(3).unwrap(), &lukasiewicz(5).unwrap()).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].map, vec![0, 2, 4]);
    }

    #[test]
    fn goedel3_does_not_embed_into_lukasiewicz3() {
        assert!(
            find_embeddings(&goedel(3).unwrap(), &lukasiewicz(3).unwrap())
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn search_matches_brute_force() {
        let algebras = [
            boolean2(),
            lukasiewicz(3).unwrap(),
            goedel(3).unwrap(),
            lukasiewicz(4).unwrap(),
            goedel(4).unwrap(),
            nilpotent_minimum(4).unwrap(),
            lukasiewicz(5).unwrap(),
            ordinal_sum(&lukasiewicz(3).unwrap(), &boolean2()).unwrap(),
            product(&boolean2(), &boolean2()).unwrap(),
            product(&boolean2(), &goedel(3).unwrap()).unwrap(),
        ];
        for a in &algebras {
            for c in &algebras {
                let fast: Vec<Vec<Elem>> = find_embeddings(a, c)
                    .unwrap()
                    .into_iter()
                    .map(|m| m.map)
                    .collect();
                assert_eq!(
                    fast,
                    all_injective_homs(a, c),
                    "{:?} -> {:?}",
                    a.name(),
                    c.name()
                );
            }
        }
    }

    #[test]
    fn chain_embeddings_are_strictly_monotone() {
        let g3 = goedel(3).unwrap();
        for m in find_embeddings(&g3, &goedel(6).unwrap()).unwrap() {
            assert!(m.map.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(find_embeddings(&g3, &goedel(6).unwrap()).unwrap().len(), 4);
    }

    #[test]
    fn isomorphism() {
        let l3 = lukasiewicz(3).unwrap();
        let other = FiniteAlgebra::from_chain(&[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]])
            .unwrap()
            .verified()
            .unwrap();
        assert!(are_isomorphic(&l3, &other).unwrap().is_some());
        assert!(are_isomorphic(&l3, &goedel(3).unwrap()).unwrap().is_none());
        assert_eq!(
            are_isomorphic(&l3, &l3).unwrap().unwrap().map,
            vec![0, 1, 2]
        );
        let ab = product(&lukasiewicz(3).unwrap(), &goedel(3).unwrap()).unwrap();
        let ba = product(&goedel(3).unwrap(), &lukasiewicz(3).unwrap()).unwrap();
        let iso = are_isomorphic(&ab, &ba).unwrap().unwrap();
        assert!(iso.is_embedding());
    }

    #[test]
    fn joint_embeddings() {
        let g3 = goedel(3).unwrap();
        let je = find_joint_embedding(&g3, &g3, std::slice::from_ref(&g3))
            .unwrap()
            .unwrap();
        assert_eq!(je.target, 0);
        assert_eq!(je.left.map, vec![0, 1, 2]);
        assert_eq!(je.right.map, vec![0, 1, 2]);

        let l3 = lukasiewicz(3).unwrap();
        let l4 = lukasiewicz(4).unwrap();
        let l7 = lukasiewicz(7).unwrap();
        let je = find_joint_embedding(&l3, &l4, std::slice::from_ref(&l7))
            .unwrap()
            .unwrap();
        assert_eq!(je.left.map, vec![0, 3, 6]);
        assert_eq!(je.right.map, vec![0, 2, 4, 6]);

        assert!(
            find_joint_embedding(&l3, &g3, &[l4.clone(), goedel(5).unwrap()])
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn symmetric_span_amalgamates_by_identity() {
        let g3 = goedel(3).unwrap();
        let span =
            AmalgamationSpan::new(boolean2(), g3.clone(), g3.clone(), vec![0, 2], vec![0, 2])
                .unwrap();
        let am = find_amalgam(&span, std::slice::from_ref(&g3))
            .unwrap()
            .unwrap();
        assert_eq!(am.h.map, vec![0, 1, 2]);
        assert_eq!(am.k.map, vec![0, 1, 2]);
        assert!(amalgam_commutes(&span, &g3, &am.h, &am.k));
        assert!(find_amalgam(&span, &[]).unwrap().is_none());
    }

    #[test]
    fn invalid_spans() {
        let g3 = goedel(3).unwrap();
        let l3 = lukasiewicz(3).unwrap();
        assert!(matches!(
            AmalgamationSpan::new(
                g3.clone(),
                l3.clone(),
                l3.clone(),
                vec![0, 1, 2],
                vec![0, 1, 2]
            ),
            Err(ModelError::InvalidSpan(_))
        ));
        assert!(AmalgamationSpan::from_first_embeddings(g3, l3.clone(), l3).is_err());
    }

    #[test]
    fn unverified_inputs_rejected() {
        let raw = FiniteAlgebra::from_chain(&[vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            find_embeddings(&raw, &boolean2()),
            Err(ModelError::Unverified)
        );
    }
}
