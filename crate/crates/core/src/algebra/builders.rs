use super::{AlgebraError, Elem, FiniteAlgebra};

fn chain_from_rule(
    k: usize,
    name: String,
    rule: impl Fn(Elem, Elem) -> Elem,
) -> Result<FiniteAlgebra, AlgebraError> {
    if k < 2 {
        return Err(AlgebraError::BadSize(k));
    }
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|x| (0..k).map(|y| rule(x, y)).collect())
        .collect();
    FiniteAlgebra::from_chain(&rows)?
        .with_name(name)
        .verified_mtl()
}

/// The k-element Łukasiewicz chain: `x * y = max(0, x + y - (k - 1))`.
pub fn lukasiewicz(k: usize) -> Result<FiniteAlgebra, AlgebraError> {
    chain_from_rule(k, format!("L{k}"), |x, y| {
        (x + y).saturating_sub(k.saturating_sub(1))
    })
}

/// The k-element Gödel chain: `x * y = min(x, y)`.
pub fn goedel(k: usize) -> Result<FiniteAlgebra, AlgebraError> {
    chain_from_rule(k, format!("G{k}"), |x, y| x.min(y))
}

/// The k-element nilpotent minimum chain: `x * y = 0` if `x + y <= k - 1`,
/// else `min(x, y)`.
pub fn nilpotent_minimum(k: usize) -> Result<FiniteAlgebra, AlgebraError> {
    chain_from_rule(
        k,
        format!("NM{k}"),
        |x, y| if x + y < k { 0 } else { x.min(y) },
    )
}

/// The two-element Boolean algebra.
pub fn boolean2() -> FiniteAlgebra {
    lukasiewicz(2).expect("2-chain").with_name("B2")
}

/// The one-element algebra, where bottom and top coincide.
pub fn trivial() -> FiniteAlgebra {
    FiniteAlgebra::from_chain(&[vec![0]])
        .and_then(FiniteAlgebra::verified)
        .expect("trivial algebra")
        .with_name("T1")
}
