//! Known relations between completeness, separation, pseudo-relevance and
//! interpolation properties of axiomatic extensions of MTL.
//!
//! Implication and equivalence edges are closed transitively; negative
//! edges are never derived, only stored. Every negative edge rests on
//! infinite varieties, so each is marked citation-only.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Scc,
    Sscc,
    SubScc,
    Hc,
    Dp,
    Dmvp,
    Cjep,
    Prp,
    Dprp,
    Sdprp,
    Ap,
    Dip,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::Scc,
        Property::Sscc,
        Property::SubScc,
        Property::Hc,
        Property::Dp,
        Property::Dmvp,
        Property::Cjep,
        Property::Prp,
        Property::Dprp,
        Property::Sdprp,
        Property::Ap,
        Property::Dip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Scc => "SCC",
            Property::Sscc => "SSCC",
            Property::SubScc => "subSCC",
            Property::Hc => "HC",
            Property::Dp => "DP",
            Property::Dmvp => "DMVP",
            Property::Cjep => "CJEP",
            Property::Prp => "PRP",
            Property::Dprp => "DPRP",
            Property::Sdprp => "SDPRP",
            Property::Ap => "AP",
            Property::Dip => "DIP",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown property `{0}`")]
pub struct UnknownProperty(pub String);

impl FromStr for Property {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownProperty(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Implies,
    Equivalent,
    DoesNotImply,
    Open,
}

impl EdgeKind {
    fn arrow(self) -> &'static str {
        match self {
            EdgeKind::Implies => "=>",
            EdgeKind::Equivalent => "<=>",
            EdgeKind::DoesNotImply => "=/=>",
            EdgeKind::Open => "=?=>",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeKind::Implies => "implies",
            EdgeKind::Equivalent => "equivalent",
            EdgeKind::DoesNotImply => "does-not-imply",
            EdgeKind::Open => "open",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: Property,
    pub to: Property,
    pub kind: EdgeKind,
    pub citation: &'static str,
    /// Backed by a published argument, not by anything this tool checks.
    pub citation_only: bool,
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}  [{}] {}",
            self.from,
            self.kind.arrow(),
            self.to,
            self.kind.name(),
            self.citation
        )?;
        if self.citation_only {
            f.write_str(" (citation-only)")?;
        }
        Ok(())
    }
}

/// What is known about `p` versus `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Relation {
    /// Edges stored between the two, in either direction.
    Direct(Vec<Edge>),
    /// `p` implies `q` through the listed chain of properties.
    Derived(Vec<Property>),
    Unrecorded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conflict {
    /// A negative edge whose target is reachable by implications.
    Refuted { edge: Edge, path: Vec<Property> },
    /// An open edge that the implications already settle.
    Settled { edge: Edge, path: Vec<Property> },
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (label, edge, path) = match self {
            Conflict::Refuted { edge, path } => ("contradicted", edge, path),
            Conflict::Settled { edge, path } => ("settled", edge, path),
        };
        let steps: Vec<&str> = path.iter().map(|p| p.name()).collect();
        write!(
            f,
            "{label}: {} {} {} via {}",
            edge.from,
            edge.kind.arrow(),
            edge.to,
            steps.join(" => ")
        )
    }
}

#[derive(Debug, Clone)]
pub struct PropertyGraph {
    edges: Vec<Edge>,
}

impl PropertyGraph {
    pub fn new(edges: Vec<Edge>) -> Self {
        PropertyGraph { edges }
    }

    pub fn standard() -> Self {
        use EdgeKind::*;
        use Property::*;
        let e = |from, to, kind, citation| Edge {
            from,
            to,
            kind,
            citation,
            citation_only: kind == DoesNotImply,
        };
        PropertyGraph::new(vec![
            e(Scc, Hc, Equivalent, "Halldén completeness coincides with completeness w.r.t. a single chain"),
            e(Cjep, Sscc, Equivalent, "strong single-chain completeness holds iff the variety has the chain joint embedding property"),
            e(Dip, Ap, Equivalent, "deductive interpolation holds iff the variety has the amalgamation property"),
            e(Sdprp, Dprp, Equivalent, "every variety of MTL-algebras has the congruence extension property"),
            e(Dmvp, Hc, Implies, "deductive variable separation specialises to variable-disjoint disjunctions"),
            e(Dmvp, Sdprp, Implies, "separation with the falsum disjunct gives strong deductive pseudo-relevance"),
            e(Cjep, Dmvp, Implies, "jointly embedding chains gives joint embedding of subdirectly irreducibles into a well-connected algebra"),
            e(Cjep, Sdprp, Implies, "chain joint embedding yields strong deductive pseudo-relevance"),
            e(Ap, Sdprp, Implies, "amalgamation over the free algebra on no variables yields strong deductive pseudo-relevance"),
            e(Prp, Dprp, Implies, "pseudo-relevance lifts to theories"),
            e(Dp, Hc, Implies, "the disjunction property specialises to variable-disjoint disjunctions"),
            e(SubScc, Scc, Implies, "a subdirectly irreducible generic chain is in particular a generic chain"),
            e(Scc, Ap, DoesNotImply, "varieties generated by a finite Gödel chain with more than three elements have the chain joint embedding property but fail amalgamation"),
            e(Ap, Scc, DoesNotImply, "the join of the Gödel and product varieties has amalgamation but no single generic chain"),
            e(Sdprp, Ap, DoesNotImply, "finite Gödel chains with more than three elements: chain joint embedding without amalgamation"),
            e(Sdprp, Dmvp, DoesNotImply, "otherwise amalgamation would imply single-chain completeness"),
            e(Sdprp, Cjep, DoesNotImply, "the join of the Gödel and product varieties has amalgamation but not the chain joint embedding property"),
            e(Dprp, Prp, DoesNotImply, "Łukasiewicz logic has the deductive form but not pseudo-relevance"),
            e(Sscc, Prp, DoesNotImply, "Łukasiewicz logic is strongly single-chain complete without pseudo-relevance"),
            e(Prp, Sscc, DoesNotImply, "the logic of the join of the Gödel and product varieties extends SMTL but is not strongly single-chain complete"),
            e(Hc, Dmvp, Open, "is there an extension with Halldén completeness but not deductive variable separation?"),
            e(Dmvp, Cjep, Open, "does deductive variable separation imply the chain joint embedding property?"),
            e(Scc, SubScc, Open, "is there a non-contractive extension with single-chain but not subdirectly irreducible single-chain completeness?"),
            e(Scc, Sscc, Open, "does single-chain completeness imply the strong version?"),
        ])
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// One-step implications, with equivalences in both directions.
    fn successors(&self, p: Property) -> Vec<Property> {
        let mut out = BTreeSet::new();
        for e in &self.edges {
            match e.kind {
                EdgeKind::Implies if e.from == p => {
                    out.insert(e.to);
                }
                EdgeKind::Equivalent if e.from == p => {
                    out.insert(e.to);
                }
                EdgeKind::Equivalent if e.to == p => {
                    out.insert(e.from);
                }
                _ => {}
            }
        }
        out.into_iter().collect()
    }

    /// Shortest implication path from `p` to `q` (length 0 when equal).
    pub fn implication_path(&self, p: Property, q: Property) -> Option<Vec<Property>> {
        let mut parent: Vec<Option<Property>> = vec![None; Property::ALL.len()];
        let idx = |x: Property| Property::ALL.iter().position(|&y| y == x).expect("listed");
        let mut seen = vec![false; Property::ALL.len()];
        let mut queue = VecDeque::from([p]);
        seen[idx(p)] = true;
        while let Some(x) = queue.pop_front() {
            if x == q {
                let mut path = vec![q];
                let mut cur = q;
                while let Some(prev) = parent[idx(cur)] {
                    path.push(prev);
                    cur = prev;
                }
                path.reverse();
                return Some(path);
            }
            for y in self.successors(x) {
                if !seen[idx(y)] {
                    seen[idx(y)] = true;
                    parent[idx(y)] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        None
    }

    pub fn relation(&self, p: Property, q: Property) -> Relation {
        let direct: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| (e.from == p && e.to == q) || (e.from == q && e.to == p))
            .cloned()
            .collect();
        if !direct.is_empty() {
            return Relation::Direct(direct);
        }
        match self.implication_path(p, q) {
            Some(path) if path.len() > 1 => Relation::Derived(path),
            _ => Relation::Unrecorded,
        }
    }

    /// No negative edge is contradicted and no open edge is already
    /// settled by the implication closure.
    pub fn check_consistency(&self) -> Vec<Conflict> {
        let mut conflicts = Vec::new();
        for edge in &self.edges {
            let path = || self.implication_path(edge.from, edge.to);
            match edge.kind {
                EdgeKind::DoesNotImply => {
                    if let Some(path) = path() {
                        conflicts.push(Conflict::Refuted {
                            edge: edge.clone(),
                            path,
                        });
                    }
                }
                EdgeKind::Open => {
                    if let Some(path) = path() {
                        conflicts.push(Conflict::Settled {
                            edge: edge.clone(),
                            path,
                        });
                    }
                }
                _ => {}
            }
        }
        conflicts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Property::*;

    fn kinds(r: &Relation) -> Vec<EdgeKind> {
        match r {
            Relation::Direct(es) => es.iter().map(|e| e.kind).collect(),
            _ => vec![],
        }
    }

    #[test]
    fn standard_graph_is_consistent() {
        assert_eq!(PropertyGraph::standard().check_consistency(), vec![]);
    }

    #[test]
    fn documented_queries() {
        let g = PropertyGraph::standard();
        assert_eq!(kinds(&g.relation(Cjep, Sscc)), vec![EdgeKind::Equivalent]);
        assert_eq!(kinds(&g.relation(Sscc, Cjep)), vec![EdgeKind::Equivalent]);
        assert_eq!(kinds(&g.relation(Scc, Hc)), vec![EdgeKind::Equivalent]);
        assert_eq!(
            kinds(&g.relation(Hc, Dmvp)),
            vec![EdgeKind::Implies, EdgeKind::Open]
        );
        assert_eq!(
            g.relation(Cjep, Scc),
            Relation::Derived(vec![Cjep, Dmvp, Hc, Scc])
        );
        assert_eq!(g.relation(Dip, Hc), Relation::Unrecorded);
    }

    #[test]
    fn edge_census() {
        let g = PropertyGraph::standard();
        let count = |k| g.edges().iter().filter(|e| e.kind == k).count();
        assert_eq!(count(EdgeKind::Equivalent), 4);
        assert_eq!(count(EdgeKind::Implies), 8);
        assert_eq!(count(EdgeKind::DoesNotImply), 8);
        assert_eq!(count(EdgeKind::Open), 4);
        assert!(g
            .edges()
            .iter()
            .all(|e| e.citation_only == (e.kind == EdgeKind::DoesNotImply)));
    }

    #[test]
    fn injected_contradiction_is_caught() {
        let mut edges = PropertyGraph::standard().edges().to_vec();
        edges.push(Edge {
            from: Sdprp,
            to: Dmvp,
            kind: EdgeKind::Implies,
            citation: "bogus",
            citation_only: false,
        });
        let conflicts = PropertyGraph::new(edges).check_consistency();
        assert!(conflicts.iter().any(
            |c| matches!(c, Conflict::Refuted { edge, .. } if edge.from == Sdprp && edge.to == Dmvp)
        ));
    }

    #[test]
    fn names_parse() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert_eq!("subscc".parse::<Property>().unwrap(), SubScc);
        assert_eq!(
            "XYZ".parse::<Property>(),
            Err(UnknownProperty("XYZ".into()))
        );
    }
}
