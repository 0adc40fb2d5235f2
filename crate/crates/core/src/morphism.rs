use std::fmt;

use crate::algebra::{Elem, FiniteAlgebra};

/// A map between algebra carriers. The flags record what was checked
/// against a concrete source and target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub map: Vec<Elem>,
    /// Preserves both constants and all four binary operations.
    pub hom: bool,
    pub injective: bool,
}

impl Morphism {
    /// Builds the map and checks it against `src` and `dst`.
    pub fn checked(map: Vec<Elem>, src: &FiniteAlgebra, dst: &FiniteAlgebra) -> Self {
        let hom = is_homomorphism(src, dst, &map);
        let injective = is_injective(&map);
        Morphism {
            map,
            hom,
            injective,
        }
    }

    pub fn identity(a: &FiniteAlgebra) -> Self {
        Morphism {
            map: a.elements().collect(),
            hom: true,
            injective: true,
        }
    }

    pub fn is_embedding(&self) -> bool {
        self.hom && self.injective
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    /// `next ∘ self`. Flags are the conjunction of both, which is sound for
    /// homomorphisms and injectivity alike.
    pub fn then(&self, next: &Morphism) -> Morphism {
        Morphism {
            map: self.map.iter().map(|&x| next.map[x]).collect(),
            hom: self.hom && next.hom,
            injective: self.injective && next.injective,
        }
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.map.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", cells.join(", "))
    }
}

pub fn is_injective(map: &[Elem]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(map.len());
    map.iter().all(|x| seen.insert(*x))
}

/// Checks every operation on every pair; independent of any search.
pub fn is_homomorphism(src: &FiniteAlgebra, dst: &FiniteAlgebra, map: &[Elem]) -> bool {
    if map.len() != src.size() || map.iter().any(|&v| v >= dst.size()) {
        return false;
    }
    if map[src.bottom()] != dst.bottom() || map[src.top()] != dst.top() {
        return false;
    }
    src.elements().all(|x| {
        src.elements().all(|y| {
            let (fx, fy) = (map[x], map[y]);
            map[src.mult(x, y)] == dst.mult(fx, fy)
                && map[src.imp(x, y)] == dst.imp(fx, fy)
                && map[src.meet(x, y)] == dst.meet(fx, fy)
                && map[src.join(x, y)] == dst.join(fx, fy)
        })
    })
}
