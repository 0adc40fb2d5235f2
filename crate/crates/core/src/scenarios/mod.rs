//! Named, deterministic replications of concrete results about MTL and its
//! extensions, each producing a pass/fail verdict with a transcript.
//!
//! Every scenario checks finitely many instances on finitely many algebras.
//! A pass certifies exactly those instances, which each transcript states.

pub mod relations;

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{boolean2, goedel, lukasiewicz, FiniteAlgebra};
use crate::constructions::{ordinal_sum, product};
use crate::enumeration::enumerate_chains;
use crate::filters;
use crate::formula::random::random_formula;
use crate::formula::{parse, Formula};
use crate::semantics::{
    find_interpolant_capped, show_assignment, Assignment, InterpolationMode, Semantics,
};

pub const SCOPE_NOTE: &str =
    "scope: certifies the finite instances checked below on the listed algebras only, not the statement for all algebras";

const SEED: u64 = 0x6d74_6c77_6221;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown scenario `{0}`")]
pub struct UnknownScenario(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub id: &'static str,
    pub pass: bool,
    pub transcript: Vec<String>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.transcript {
            writeln!(f, "{line}")?;
        }
        writeln!(
            f,
            "verdict: {} {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

pub struct Scenario {
    pub id: &'static str,
    pub description: &'static str,
    procedure: fn(&mut Log),
}

impl Scenario {
    pub fn run(&self) -> Verdict {
        let mut log = Log {
            lines: vec![
                format!("scenario: {}", self.id),
                self.description.to_owned(),
                SCOPE_NOTE.to_owned(),
            ],
            failures: 0,
        };
        (self.procedure)(&mut log);
        if log.failures == 0 {
            log.lines.push("all checks passed".to_owned());
        } else {
            log.lines.push(format!("{} check(s) failed", log.failures));
        }
        Verdict {
            id: self.id,
            pass: log.failures == 0,
            transcript: log.lines,
        }
    }
}

/// Transcript under construction. Failed checks are always logged with
/// their witness; passing sweeps are summarised.
struct Log {
    lines: Vec<String>,
    failures: usize,
}

impl Log {
    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn check(&mut self, ok: bool, line: impl fmt::Display) -> bool {
        self.lines
            .push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
        if !ok {
            self.failures += 1;
        }
        ok
    }

    /// Records a failed check.
    fn fail(&mut self, line: impl fmt::Display) {
        self.check(false, line);
    }

    fn sweep(&mut self, what: &str, total: usize, failed: usize) {
        self.check(
            failed == 0,
            format_args!("{what}: {} of {total} instances hold", total - failed),
        );
    }
}

pub fn registry() -> &'static [Scenario] {
    const ALL: &[Scenario] = &[
        Scenario {
            id: "dp_failure",
            description: "prelinearity is valid on 2x2 while neither disjunct is",
            procedure: dp_failure,
        },
        Scenario {
            id: "lemma_meet_neg",
            description: "(x /\\ ~x) -> (y \\/ ~y) is valid on every corpus algebra; negation is antitone on chains",
            procedure: lemma_meet_neg,
        },
        Scenario {
            id: "prp_lukasiewicz",
            description: "on L3, phi = x /\\ ~x and psi = y \\/ ~y witness failure of pseudo-relevance",
            procedure: prp_lukasiewicz,
        },
        Scenario {
            id: "prp_iff_smtl_instances",
            description: "a chain satisfies x /\\ ~x = 0 iff ~(x /\\ ~x) is valid on it",
            procedure: prp_iff_smtl_instances,
        },
        Scenario {
            id: "osum_si",
            description: "A + 2 is subdirectly irreducible with monolith {old top, new top}",
            procedure: osum_si,
        },
        Scenario {
            id: "wc_iff_chain",
            description: "an MTL-algebra is well-connected iff it is a chain",
            procedure: wc_iff_chain,
        },
        Scenario {
            id: "ldt_sweep",
            description: "G, psi |= phi iff G |= psi^n -> phi for some n <= |A|, on random judgments",
            procedure: ldt_sweep,
        },
        Scenario {
            id: "weak_craig",
            description: "weak interpolants for {phi^2} |= psi on 2-contractive chains",
            procedure: weak_craig,
        },
    ];
    ALL
}

pub fn run_scenario(id: &str) -> Result<Verdict, UnknownScenario> {
    registry()
        .iter()
        .find(|s| s.id == id)
        .map(Scenario::run)
        .ok_or_else(|| UnknownScenario(id.to_owned()))
}

/// Runs every scenario; results are in registry order either way.
pub fn run_all(parallel: bool) -> Vec<Verdict> {
    if parallel {
        registry().par_iter().map(Scenario::run).collect()
    } else {
        registry().iter().map(Scenario::run).collect()
    }
}

fn f(text: &str) -> Formula {
    parse(text).expect("built-in formula parses")
}

fn census(orders: std::ops::RangeInclusive<usize>) -> Vec<FiniteAlgebra> {
    orders
        .flat_map(|n| {
            enumerate_chains(n)
                .expect("within the enumeration budget")
                .into_algebras()
        })
        .collect()
}

fn name(a: &FiniteAlgebra) -> &str {
    a.name().unwrap_or("?")
}

fn squares() -> Vec<FiniteAlgebra> {
    vec![
        product(&boolean2(), &boolean2()).expect("2x2"),
        product(&goedel(3).expect("G3"), &lukasiewicz(3).expect("L3")).expect("G3xL3"),
    ]
}

fn assignment(pairs: &[(&str, usize)]) -> Assignment {
    pairs.iter().map(|&(k, v)| (k.to_owned(), v)).collect()
}

fn dp_failure(log: &mut Log) {
    let b = product(&boolean2(), &boolean2()).expect("2x2");
    let sem = Semantics::new(&b).expect("verified");
    // x = <1,0>, y = <0,1>
    let v = assignment(&[("x", 2), ("y", 1)]);
    log.note(format!(
        "algebra: {name} with x={}, y={}",
        b.label(2),
        b.label(1),
        name = name(&b)
    ));
    for (text, want_top) in [
        ("(x -> y) \\/ (y -> x)", true),
        ("x -> y", false),
        ("y -> x", false),
    ] {
        match sem.eval(&v, &f(text)) {
            Ok(value) => {
                let ok = (value == b.top()) == want_top;
                let rel = if want_top { "=" } else { "<" };
                log.check(ok, format_args!("v({text}) = {} {rel} top", b.label(value)));
            }
            Err(e) => log.fail(format_args!("v({text}): {e}")),
        }
    }
    match sem.is_tautology(&f("(x -> y) \\/ (y -> x)")) {
        Ok(o) => log.check(o.holds, "(x -> y) \\/ (y -> x) is valid on 2x2"),
        Err(e) => log.check(false, e),
    };
}

fn lemma_meet_neg(log: &mut Log) {
    let text = "(x /\\ ~x) -> (y \\/ ~y)";
    let goal = f(text);
    let chains = census(2..=5);
    let corpus: Vec<FiniteAlgebra> = chains.iter().cloned().chain(squares()).collect();
    let mut failed = 0;
    for a in &corpus {
        match Semantics::new(a).and_then(|s| s.is_tautology(&goal)) {
            Ok(o) if o.holds => {}
            Ok(o) => {
                failed += 1;
                let cm = o.countermodel.unwrap_or_default();
                log.fail(format_args!(
                    "{} countermodel {}",
                    name(a),
                    show_assignment(a, &cm)
                ));
            }
            Err(e) => {
                failed += 1;
                log.fail(format_args!("{}: {e}", name(a)));
            }
        }
    }
    log.sweep(
        &format!("{text} valid (census orders 2-5 plus 2x2, G3xL3)"),
        corpus.len(),
        failed,
    );

    let mut failed = 0;
    for a in &chains {
        let bad = a
            .elements()
            .flat_map(|x| a.elements().map(move |y| (x, y)))
            .find(|&(x, y)| a.leq(x, y) && !a.leq(a.neg(y), a.neg(x)));
        if let Some((x, y)) = bad {
            failed += 1;
            log.fail(format_args!(
                "{}: {x} <= {y} but ~{y} = {} > ~{x} = {}",
                name(a),
                a.neg(y),
                a.neg(x)
            ));
        }
    }
    log.sweep(
        "x <= y implies ~y <= ~x on census chains",
        chains.len(),
        failed,
    );
}

fn prp_lukasiewicz(log: &mut Log) {
    let l3 = lukasiewicz(3).expect("L3");
    let sem = Semantics::new(&l3).expect("verified");
    log.note("algebra: L3 (three-element Lukasiewicz chain, standing in for Lukasiewicz logic)");
    let (phi, psi) = (f("x /\\ ~x"), f("y \\/ ~y"));
    let facts: [(&str, Vec<Formula>, Formula, bool); 5] = [
        (
            "|= phi -> psi",
            vec![],
            Formula::implies(phi.clone(), psi.clone()),
            true,
        ),
        ("|= ~phi", vec![], Formula::neg(phi.clone()), false),
        ("|= psi", vec![], psi.clone(), false),
        ("phi |= psi", vec![phi.clone()], psi.clone(), true),
        ("phi |= 0", vec![phi.clone()], Formula::Bot, true),
    ];
    for (label, premises, goal, expect) in facts {
        match sem.entails(&premises, &goal) {
            Ok(o) => {
                let witness = o
                    .countermodel
                    .as_ref()
                    .map(|v| format!(" (countermodel {})", show_assignment(&l3, v)))
                    .unwrap_or_default();
                let said = if o.holds { "holds" } else { "fails" };
                log.check(o.holds == expect, format_args!("{label} {said}{witness}"));
            }
            Err(e) => log.fail(format_args!("{label}: {e}")),
        }
    }
}

fn prp_iff_smtl_instances(log: &mut Log) {
    let goal = f("~(x /\\ ~x)");
    let chains = census(2..=5);
    let (mut smtl, mut failed) = (0, 0);
    for a in &chains {
        let flag = a.is_smtl().expect("verified");
        let outcome = match Semantics::new(a).and_then(|s| s.is_tautology(&goal)) {
            Ok(o) => o,
            Err(e) => {
                failed += 1;
                log.fail(format_args!("{}: {e}", name(a)));
                continue;
            }
        };
        if flag {
            smtl += 1;
        }
        let witness = a.smtl_witness().expect("verified");
        let consistent = flag == outcome.holds && flag == witness.is_none();
        if !consistent {
            failed += 1;
        }
        if !flag || !consistent {
            let zd = witness.map_or("no zero divisor".to_owned(), |w| {
                format!("zero divisor a={w}, ~a={}", a.neg(w))
            });
            let cm = outcome
                .countermodel
                .as_ref()
                .map_or("valid".to_owned(), |v| {
                    format!("fails at {}", show_assignment(a, v))
                });
            log.check(
                consistent,
                format_args!("{}: smtl={flag}, {zd}; ~(x /\\ ~x) {cm}", name(a)),
            );
        }
    }
    log.note(format!(
        "{smtl} of {} census chains (orders 2-5) satisfy x /\\ ~x = 0",
        chains.len()
    ));
    log.sweep(
        "smtl flag agrees with validity of ~(x /\\ ~x)",
        chains.len(),
        failed,
    );
}

fn osum_si(log: &mut Log) {
    let chains = census(2..=4);
    let mut failed = 0;
    for a in &chains {
        let s = match ordinal_sum(a, &boolean2()) {
            Ok(s) => s,
            Err(e) => {
                failed += 1;
                log.fail(format_args!("{} + 2: {e}", name(a)));
                continue;
            }
        };
        let expected = vec![a.top(), s.top()];
        match filters::monolith(&s) {
            Ok(Some(m)) if m.elements() == expected => {}
            Ok(other) => {
                failed += 1;
                let got = other.map_or("none".to_owned(), |m| m.to_string());
                log.fail(format_args!(
                    "{} + 2: monolith {got}, expected {expected:?}",
                    name(a)
                ));
            }
            Err(e) => {
                failed += 1;
                log.fail(format_args!("{} + 2: {e}", name(a)));
            }
        }
    }
    log.sweep(
        "A + 2 is subdirectly irreducible with monolith {old top, new top} (census orders 2-4)",
        chains.len(),
        failed,
    );
}

fn wc_iff_chain(log: &mut Log) {
    let mut corpus = census(2..=5);
    let small = census(2..=3);
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            corpus.push(product(a, b).expect("product of verified algebras"));
        }
    }
    let mut failed = 0;
    let mut non_chains = 0;
    for a in &corpus {
        let chain = a.is_chain().expect("verified");
        let wc = a.is_well_connected().expect("verified");
        if !chain {
            non_chains += 1;
        }
        if chain != wc {
            failed += 1;
            log.fail(format_args!(
                "{}: chain={chain}, well-connected={wc}",
                name(a)
            ));
        } else if let Some((x, y)) = a.well_connected_witness().expect("verified") {
            log.check(
                true,
                format_args!(
                    "{}: not a chain; {} v {} = top",
                    name(a),
                    a.label(x),
                    a.label(y)
                ),
            );
        }
    }
    log.note(format!(
        "corpus: census orders 2-5 and {non_chains} products of chains of order <= 3"
    ));
    log.sweep("chain iff well-connected", corpus.len(), failed);
}

fn ldt_sweep(log: &mut Log) {
    const PER_CHAIN: usize = 200;
    let chains = census(2..=4);
    let vars = ["x", "y", "z"];
    let mut failed = 0;
    let (mut total, mut left) = (0, 0);
    let mut by_n = [0usize; 8];
    for (idx, a) in chains.iter().enumerate() {
        let sem = Semantics::new(a).expect("verified");
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + idx as u64);
        for _ in 0..PER_CHAIN {
            let size = rand::RngExt::random_range(&mut rng, 0..=2);
            let gamma: Vec<Formula> = (0..size)
                .map(|_| random_formula(&mut rng, 4, &vars))
                .collect();
            let psi = random_formula(&mut rng, 4, &vars);
            let phi = random_formula(&mut rng, 4, &vars);
            total += 1;
            match sem.local_deduction_check(&gamma, &psi, &phi) {
                Ok(c) if c.agrees() && c.minimal_n.is_none_or(|n| n <= a.size()) => {
                    if let Some(n) = c.minimal_n {
                        left += 1;
                        by_n[n.min(by_n.len() - 1)] += 1;
                    }
                }
                Ok(c) => {
                    failed += 1;
                    let g: Vec<String> = gamma.iter().map(ToString::to_string).collect();
                    log.fail(format_args!(
                        "{}: G={{{}}} psi={psi} phi={phi}: {c}",
                        name(a),
                        g.join("; ")
                    ));
                }
                Err(e) => {
                    failed += 1;
                    log.fail(format_args!("{}: {e}", name(a)));
                }
            }
        }
    }
    let dist: Vec<String> = by_n
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(n, c)| format!("n={n}:{c}"))
        .collect();
    log.note(format!(
        "{} chains (census orders 2-4), {PER_CHAIN} judgments each",
        chains.len()
    ));
    log.note(format!(
        "{left} of {total} judgments hold; minimal n distribution {}",
        dist.join(" ")
    ));
    log.sweep("local deduction equivalence with n <= |A|", total, failed);
}

fn weak_craig(log: &mut Log) {
    const PAIRS: usize = 20;
    const ATTEMPTS: usize = 4000;
    const DEPTH: usize = 3;
    const CAP: usize = 50_000;
    let vars = ["x", "y", "z"];
    let chains: Vec<FiniteAlgebra> = census(2..=4)
        .into_iter()
        .filter(|a| a.is_n_contractive(2).expect("verified"))
        .collect();
    log.note(format!(
        "{} 2-contractive census chains (orders 2-4); search depth {DEPTH}, candidate cap {CAP}",
        chains.len()
    ));
    log.note("pairs: random phi, psi of depth <= 2 with {phi^2} |= psi and psi not valid");
    let mut failed = 0;
    let (mut found, mut tried) = (0, 0);
    for (idx, a) in chains.iter().enumerate() {
        let sem = Semantics::new(a).expect("verified");
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (idx as u64 + 1) << 32);
        let mut pairs = Vec::new();
        for _ in 0..ATTEMPTS {
            if pairs.len() == PAIRS {
                break;
            }
            let phi = random_formula(&mut rng, 2, &vars);
            let psi = random_formula(&mut rng, 2, &vars);
            let premise = Formula::power(&phi, 2);
            let trivial = sem.is_tautology(&psi).is_ok_and(|o| o.holds);
            if !trivial && sem.entails(&[premise], &psi).is_ok_and(|o| o.holds) {
                pairs.push((phi, psi));
            }
        }
        let mut local = 0;
        for (phi, psi) in &pairs {
            tried += 1;
            match find_interpolant_capped(&sem, phi, psi, DEPTH, InterpolationMode::Weak(2), CAP) {
                Ok(r) => {
                    if let Some(gamma) = r.interpolant {
                        let confirmed = confirm_weak(&sem, phi, psi, &gamma);
                        if confirmed {
                            local += 1;
                        } else {
                            failed += 1;
                            log.fail(format_args!(
                                "{}: phi={phi} psi={psi}: gamma={gamma} does not re-verify",
                                name(a)
                            ));
                        }
                    }
                }
                Err(e) => {
                    failed += 1;
                    log.fail(format_args!("{}: phi={phi} psi={psi}: {e}", name(a)));
                }
            }
        }
        found += local;
        log.note(format!(
            "{}: {} valid pairs, {local} interpolants found",
            name(a),
            pairs.len()
        ));
    }
    log.note(format!(
        "found-rate {found}/{tried}; the rest are inconclusive at this depth"
    ));
    log.check(failed == 0, "every interpolant found re-verifies");
}

fn confirm_weak(sem: &Semantics<'_>, phi: &Formula, psi: &Formula, gamma: &Formula) -> bool {
    let shared = phi
        .vars()
        .intersection(&psi.vars())
        .cloned()
        .collect::<std::collections::BTreeSet<_>>();
    gamma.vars().is_subset(&shared)
        && sem
            .entails(&[Formula::power(phi, 2)], gamma)
            .is_ok_and(|o| o.holds)
        && sem
            .entails(&[Formula::power(gamma, 2)], psi)
            .is_ok_and(|o| o.holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|s| s.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 8);
    }

    #[test]
    fn cheap_scenarios_pass() {
        for id in ["dp_failure", "prp_lukasiewicz", "osum_si"] {
            let v = run_scenario(id).unwrap();
            assert!(v.pass, "{v}");
            assert!(v.transcript.iter().any(|l| l == SCOPE_NOTE));
        }
    }

    #[test]
    fn unknown_id() {
        assert_eq!(run_scenario("nope"), Err(UnknownScenario("nope".into())));
    }
}
