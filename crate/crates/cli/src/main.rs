//! `mtlwb`: command-line front end to the MTL finite-model workbench.
//!
//! Exit status: 0 when the checked property holds or a witness is found,
//! 1 when it fails or nothing is found, 2 on usage or input errors.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mtl_core::algebra::io::{read_algebra_unverified, write_algebra, FormatError};
use mtl_core::catalog::{self, tsv_row, TSV_HEADER};
use mtl_core::constructions::{ordinal_sum, product, quotient, subalgebra_generated};
use mtl_core::enumeration::{census_metadata, enumerate_chains};
use mtl_core::filters::{all_filters, monolith, Filter};
use mtl_core::modeltheory::{find_amalgam, find_embeddings, find_joint_embedding};
use mtl_core::scenarios::relations::{Property, PropertyGraph, Relation};
use mtl_core::scenarios::{registry, run_all, run_scenario};
use mtl_core::semantics::{
    find_interpolant, show_assignment, InterpolationMode, Outcome, Semantics, DEFAULT_BUDGET,
};
use mtl_core::{parse, Elem, FiniteAlgebra, Formula};

type CmdResult = Result<bool, Box<dyn Error>>;

#[derive(Parser)]
#[command(
    name = "mtlwb",
    version,
    about = "Finite-model workbench for MTL and FL_ew-algebras"
)]
struct Cli {
    /// Maximum number of formula evaluations a semantic check may spend.
    #[arg(long, global = true, value_name = "EVALS", default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Directory for output files.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Run independent work in parallel.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

/// An algebra file, or a built-in name: L<k>, G<k>, NM<k>, B2, T1.
#[derive(Args)]
struct One {
    #[arg(short = 'a', long = "algebra", value_name = "ALG")]
    a: String,
}

#[derive(Args)]
struct Two {
    #[arg(short = 'a', value_name = "ALG")]
    a: String,
    #[arg(short = 'b', value_name = "ALG")]
    b: String,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Targets {
    /// Glob of algebra files to search, e.g. 'census/chain_5_*.alg'.
    #[arg(long, value_name = "GLOB")]
    targets: Option<String>,
    /// Search all enumerated chains of order 2..=N.
    #[arg(long, value_name = "N")]
    enum_upto: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an algebra file and report every law.
    Check { file: PathBuf },
    /// Is FORMULA valid (always evaluates to top)?
    Taut {
        #[command(flatten)]
        alg: One,
        formula: String,
    },
    /// Do the premises entail GOAL?
    Conseq {
        #[command(flatten)]
        alg: One,
        #[arg(short = 'p', long = "premise", value_name = "F")]
        premises: Vec<String>,
        goal: String,
    },
    /// Compare G, psi |= GOAL with G |= psi^n -> GOAL for n <= |A| (chains only).
    Ldt {
        #[command(flatten)]
        alg: One,
        #[arg(short = 'p', long = "premise", value_name = "F")]
        premises: Vec<String>,
        #[arg(long)]
        psi: String,
        goal: String,
    },
    /// Search for an interpolant of {phi} |= psi over shared variables.
    Interp {
        #[command(flatten)]
        alg: One,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Weak form with the given power n: {phi^n} |= gamma, {gamma^n} |= psi.
        #[arg(long, value_name = "N")]
        weak: Option<usize>,
    },
    /// List all filters.
    Filters {
        #[command(flatten)]
        alg: One,
    },
    /// Is the algebra subdirectly irreducible? Prints the monolith.
    Si {
        #[command(flatten)]
        alg: One,
    },
    /// Direct product A x B.
    Product {
        #[command(flatten)]
        pair: Two,
    },
    /// Ordinal sum A + B of two chains.
    Osum {
        #[command(flatten)]
        pair: Two,
    },
    /// Subalgebra generated by the given elements.
    Subalg {
        #[command(flatten)]
        alg: One,
        #[arg(
            short = 'g',
            long = "gens",
            value_delimiter = ',',
            value_name = "X,Y,.."
        )]
        gens: Vec<Elem>,
    },
    /// Quotient by a filter.
    Quotient {
        #[command(flatten)]
        alg: One,
        #[arg(
            short = 'f',
            long,
            value_delimiter = ',',
            value_name = "X,Y,..",
            required = true
        )]
        filter: Vec<Elem>,
    },
    /// All embeddings of A into B.
    Embed {
        #[command(flatten)]
        pair: Two,
    },
    /// First target into which both A and B embed.
    Jointembed {
        #[command(flatten)]
        pair: Two,
        #[command(flatten)]
        targets: Targets,
    },
    /// First target amalgamating the span B <- A -> C.
    Amalgam {
        #[arg(long, value_name = "FILE")]
        span: PathBuf,
        #[command(flatten)]
        targets: Targets,
    },
    /// Enumerate all MTL-chains of order N.
    Enum {
        #[arg(short = 'n', value_name = "N")]
        order: usize,
    },
    /// Run a named scenario, or all of them.
    Scenario {
        #[arg(conflicts_with_all = ["all", "list"])]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
    },
    /// Query the property-relations graph.
    Relations {
        p: Option<String>,
        q: Option<String>,
        #[arg(long)]
        check_consistency: bool,
    },
}

fn formula(text: &str) -> Result<Formula, Box<dyn Error>> {
    parse(text).map_err(|e| format!("in `{text}`: {e}").into())
}

fn formulas(texts: &[String]) -> Result<Vec<Formula>, Box<dyn Error>> {
    texts.iter().map(|t| formula(t)).collect()
}

fn algebra(source: &str) -> Result<FiniteAlgebra, Box<dyn Error>> {
    Ok(catalog::resolve(source)?)
}

fn report_outcome(a: &FiniteAlgebra, o: &Outcome, yes: &str, no: &str) -> bool {
    match &o.countermodel {
        None => println!("{yes}"),
        Some(v) => println!("{no}; countermodel: {}", show_assignment(a, v)),
    }
    o.holds
}

fn show_filter(f: &Filter) -> String {
    format!("{:?}", f.elements())
}

/// Prints an algebra, or writes it into `--out` as `<stem>.alg`.
fn emit(cli: &Cli, a: &FiniteAlgebra, stem: &str) -> CmdResult {
    match &cli.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let path = dir.join(format!("{stem}.alg"));
            catalog::save(a, &path)?;
            println!("wrote {}", path.display());
        }
        None => print!("{}", write_algebra(a)),
    }
    Ok(true)
}

fn stem(a: &FiniteAlgebra, fallback: &str) -> String {
    a.name().unwrap_or(fallback).to_owned()
}

fn load_targets(t: &Targets) -> Result<Vec<(String, FiniteAlgebra)>, Box<dyn Error>> {
    if let Some(pattern) = &t.targets {
        let mut paths: Vec<PathBuf> = glob::glob(pattern)?.collect::<Result<_, _>>()?;
        paths.sort();
        return paths
            .into_iter()
            .map(|p| Ok((p.display().to_string(), catalog::load(&p)?)))
            .collect();
    }
    let upto = t.enum_upto.expect("clap enforces one target source");
    let mut out = Vec::new();
    for n in 2..=upto {
        for a in enumerate_chains(n)?.into_algebras() {
            out.push((stem(&a, "chain"), a));
        }
    }
    Ok(out)
}

fn check(file: &Path) -> CmdResult {
    let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let mut a = match read_algebra_unverified(&text) {
        Ok(a) => a,
        Err(FormatError::Algebra(e)) => {
            println!("not an FL_ew-algebra: {e}");
            return Ok(false);
        }
        Err(e) => return Err(format!("{}: {e}", file.display()).into()),
    };
    let report = a.check_axioms();
    print!("{report}");
    let yes = |b: bool| if b { "yes" } else { "no" };
    println!("FL_ew-algebra: {}", yes(report.fl_ew()));
    println!("MTL-algebra: {}", yes(report.mtl()));
    if report.fl_ew() {
        println!("chain: {}", yes(a.is_chain()?));
        println!("contractivity index: {}", a.contractivity_index()?);
        println!("smtl: {}", yes(a.is_smtl()?));
        println!("involutive: {}", yes(a.is_involutive()?));
    }
    Ok(report.mtl())
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Check { file } => check(file),
        Command::Taut { alg, formula: text } => {
            let a = algebra(&alg.a)?;
            let sem = Semantics::new(&a)?.with_budget(cli.budget);
            let o = sem.is_tautology(&formula(text)?)?;
            Ok(report_outcome(&a, &o, "valid", "not valid"))
        }
        Command::Conseq {
            alg,
            premises,
            goal,
        } => {
            let a = algebra(&alg.a)?;
            let sem = Semantics::new(&a)?.with_budget(cli.budget);
            let o = sem.entails(&formulas(premises)?, &formula(goal)?)?;
            Ok(report_outcome(&a, &o, "holds", "fails"))
        }
        Command::Ldt {
            alg,
            premises,
            psi,
            goal,
        } => {
            let a = algebra(&alg.a)?;
            let sem = Semantics::new(&a)?.with_budget(cli.budget);
            let c =
                sem.local_deduction_check(&formulas(premises)?, &formula(psi)?, &formula(goal)?)?;
            println!(
                "premises with psi entail goal: {}",
                if c.holds_left { "yes" } else { "no" }
            );
            match c.minimal_n {
                Some(n) => println!("least n with premises |= psi^n -> goal: {n}"),
                None => println!("no n <= {} with premises |= psi^n -> goal", a.size()),
            }
            println!(
                "equivalence: {}",
                if c.agrees() { "agrees" } else { "DISAGREES" }
            );
            Ok(c.agrees())
        }
        Command::Interp {
            alg,
            phi,
            psi,
            depth,
            weak,
        } => {
            let a = algebra(&alg.a)?;
            let sem = Semantics::new(&a)?.with_budget(cli.budget);
            let mode = weak.map_or(InterpolationMode::Strong, InterpolationMode::Weak);
            let r = find_interpolant(&sem, &formula(phi)?, &formula(psi)?, *depth, mode)?;
            match &r.interpolant {
                Some(g) => println!("interpolant: {g}"),
                None if r.truncated => {
                    println!(
                        "none found before the candidate cap ({} candidates); inconclusive",
                        r.explored
                    )
                }
                None => println!(
                    "none found up to depth {depth} ({} candidates); inconclusive",
                    r.explored
                ),
            }
            Ok(r.interpolant.is_some())
        }
        Command::Filters { alg } => {
            let a = algebra(&alg.a)?;
            for f in all_filters(&a)? {
                println!("{}", show_filter(&f));
            }
            Ok(true)
        }
        Command::Si { alg } => {
            let a = algebra(&alg.a)?;
            match monolith(&a)? {
                Some(m) => {
                    println!("subdirectly irreducible; monolith {}", show_filter(&m));
                    Ok(true)
                }
                None => {
                    println!("not subdirectly irreducible");
                    Ok(false)
                }
            }
        }
        Command::Product { pair } => {
            let p = product(&algebra(&pair.a)?, &algebra(&pair.b)?)?;
            emit(cli, &p, &stem(&p, "product"))
        }
        Command::Osum { pair } => {
            let s = ordinal_sum(&algebra(&pair.a)?, &algebra(&pair.b)?)?;
            emit(cli, &s, &stem(&s, "osum"))
        }
        Command::Subalg { alg, gens } => {
            let a = algebra(&alg.a)?;
            let (s, inclusion) = subalgebra_generated(&a, gens)?;
            let s = s.with_name(format!("{}_sub", stem(&a, "A")));
            println!("# inclusion {inclusion}");
            emit(cli, &s, &stem(&s, "sub"))
        }
        Command::Quotient { alg, filter } => {
            let a = algebra(&alg.a)?;
            let f = Filter::from_elements(&a, filter.iter().copied());
            let (q, map) = quotient(&a, &f)?;
            let q = q.with_name(format!("{}_quot", stem(&a, "A")));
            println!("# projection {map}");
            emit(cli, &q, &stem(&q, "quot"))
        }
        Command::Embed { pair } => {
            let found = find_embeddings(&algebra(&pair.a)?, &algebra(&pair.b)?)?;
            for m in &found {
                println!("{m}");
            }
            println!("{} embedding(s)", found.len());
            Ok(!found.is_empty())
        }
        Command::Jointembed { pair, targets } => {
            let (a, b) = (algebra(&pair.a)?, algebra(&pair.b)?);
            let targets = load_targets(targets)?;
            let hosts: Vec<FiniteAlgebra> = targets.iter().map(|(_, t)| t.clone()).collect();
            match find_joint_embedding(&a, &b, &hosts)? {
                Some(j) => {
                    println!("host: {}", targets[j.target].0);
                    println!("left: {}", j.left);
                    println!("right: {}", j.right);
                    Ok(true)
                }
                None => {
                    println!("no joint embedding among {} target(s)", targets.len());
                    Ok(false)
                }
            }
        }
        Command::Amalgam { span, targets } => {
            let span = catalog::load_span(span)?;
            let targets = load_targets(targets)?;
            let hosts: Vec<FiniteAlgebra> = targets.iter().map(|(_, t)| t.clone()).collect();
            match find_amalgam(&span, &hosts)? {
                Some(am) => {
                    println!("host: {}", targets[am.target].0);
                    println!("h: {}", am.h);
                    println!("k: {}", am.k);
                    Ok(true)
                }
                None => {
                    println!("no amalgam among {} target(s)", targets.len());
                    Ok(false)
                }
            }
        }
        Command::Enum { order } => {
            let mut census = enumerate_chains(*order)?;
            census_metadata(&mut census)?;
            match &cli.out {
                Some(dir) => {
                    let written = catalog::write_census(&census, dir)?;
                    println!(
                        "{} chains of order {order}; wrote {} files to {}",
                        census.count(),
                        written.len(),
                        dir.display()
                    );
                }
                None => {
                    println!("{TSV_HEADER}");
                    for e in &census.chains {
                        println!(
                            "{}",
                            tsv_row(&e.stem(), e.meta.as_ref().expect("annotated"))
                        );
                    }
                }
            }
            Ok(true)
        }
        Command::Scenario { id, all, list } => {
            if *list {
                for s in registry() {
                    println!("{:<24} {}", s.id, s.description);
                }
                return Ok(true);
            }
            let verdicts = match (id, all) {
                (Some(id), _) => vec![run_scenario(id)?],
                (None, true) => run_all(cli.parallel),
                (None, false) => return Err("give a scenario id, --all or --list".into()),
            };
            for v in &verdicts {
                print!("{v}");
            }
            let passed = verdicts.iter().filter(|v| v.pass).count();
            if verdicts.len() > 1 {
                println!("{passed} of {} scenarios passed", verdicts.len());
            }
            Ok(passed == verdicts.len())
        }
        Command::Relations {
            p,
            q,
            check_consistency,
        } => {
            let graph = PropertyGraph::standard();
            let mut ok = true;
            match (p, q) {
                (Some(p), Some(q)) => {
                    let (p, q): (Property, Property) = (p.parse()?, q.parse()?);
                    match graph.relation(p, q) {
                        Relation::Direct(edges) => edges.iter().for_each(|e| println!("{e}")),
                        Relation::Derived(path) => {
                            let steps: Vec<&str> = path.iter().map(|x| x.name()).collect();
                            println!("{p} => {q}  [implies, derived] {}", steps.join(" => "));
                        }
                        Relation::Unrecorded => println!("{p} ? {q}  [no recorded relation]"),
                    }
                }
                (Some(_), None) => return Err("give two properties or none".into()),
                _ if !check_consistency => graph.edges().iter().for_each(|e| println!("{e}")),
                _ => {}
            }
            if *check_consistency {
                let conflicts = graph.check_consistency();
                for c in &conflicts {
                    println!("{c}");
                }
                println!(
                    "consistency: {}",
                    if conflicts.is_empty() { "ok" } else { "FAILED" }
                );
                ok = conflicts.is_empty();
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
