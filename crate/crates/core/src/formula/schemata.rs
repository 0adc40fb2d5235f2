use std::collections::BTreeMap;

use super::{parse, Formula};

/// Metavariables used in schema templates, in instantiation order.
pub const METAVARS: [&str; 3] = ["phi", "psi", "chi"];

const SCHEMATA: [(&str, &str); 10] = [
    ("A1", "(phi -> psi) -> ((psi -> chi) -> (phi -> chi))"),
    ("A2", "(phi & psi) -> phi"),
    ("A3", "(phi & psi) -> (psi & phi)"),
    ("A4", "(phi /\\ psi) -> phi"),
    ("A5", "(phi /\\ psi) -> (psi /\\ phi)"),
    ("A6", "(phi & (phi -> psi)) -> (psi /\\ phi)"),
    ("A7a", "(phi -> (psi -> chi)) -> ((phi & psi) -> chi)"),
    ("A7b", "((phi & psi) -> chi) -> (phi -> (psi -> chi))"),
    (
        "A8",
        "((phi -> psi) -> chi) -> (((psi -> phi) -> chi) -> chi)",
    ),
    ("A9", "0 -> phi"),
];

const PRELINEARITY: (&str, &str) = ("prelin", "(phi -> psi) \\/ (psi -> phi)");

/// An axiom schema: a template whose variables `phi`, `psi`, `chi` are
/// metavariables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schema {
    pub name: &'static str,
    pub template: Formula,
    /// Metavariables occurring in the template, in `phi, psi, chi` order.
    pub metavars: Vec<&'static str>,
}

impl Schema {
    fn new(name: &'static str, text: &str) -> Self {
        let template = parse(text).expect("built-in schema parses");
        let used = template.vars();
        let metavars = METAVARS
            .iter()
            .copied()
            .filter(|m| used.contains(*m))
            .collect();
        Schema {
            name,
            template,
            metavars,
        }
    }

    /// Substitutes `args[i]` for the i-th metavariable.
    ///
    /// Panics if the number of arguments differs from the schema's arity.
    pub fn instantiate(&self, args: &[Formula]) -> Formula {
        assert_eq!(
            args.len(),
            self.metavars.len(),
            "schema {} arity",
            self.name
        );
        let map: BTreeMap<String, Formula> = self
            .metavars
            .iter()
            .map(|m| m.to_string())
            .zip(args.iter().cloned())
            .collect();
        self.template.substitute(&map)
    }

    pub fn arity(&self) -> usize {
        self.metavars.len()
    }

    /// Every instance whose metavariables range over the given formulas.
    pub fn instances(&self, pool: &[Formula]) -> Vec<Formula> {
        let mut out = Vec::new();
        let arity = self.arity();
        let total = pool.len().pow(arity as u32);
        for mut code in 0..total {
            let mut args = vec![Formula::Bot; arity];
            for slot in args.iter_mut().rev() {
                *slot = pool[code % pool.len()].clone();
                code /= pool.len();
            }
            out.push(self.instantiate(&args));
        }
        out
    }
}

/// The MTL axioms A1-A9 followed by prelinearity.
pub fn axiom_schemata() -> Vec<Schema> {
    SCHEMATA
        .iter()
        .chain(std::iter::once(&PRELINEARITY))
        .map(|(name, text)| Schema::new(name, text))
        .collect()
}

pub fn axiom_schema(name: &str) -> Option<Schema> {
    axiom_schemata().into_iter().find(|s| s.name == name)
}
