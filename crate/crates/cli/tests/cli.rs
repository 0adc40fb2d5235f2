use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn mtlwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtlwb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn tautology_exit_codes() {
    let valid = mtlwb(&["taut", "-a", "L3", "(x /\\ ~x) -> (y \\/ ~y)"]);
    assert_eq!(code(&valid), 0);
    assert_eq!(stdout(&valid), "valid\n");
    let not = mtlwb(&["taut", "-a", "L3", "y \\/ ~y"]);
    assert_eq!(code(&not), 1);
    assert_eq!(stdout(&not), "not valid; countermodel: y=1\n");
    assert_eq!(code(&mtlwb(&["taut", "-a", "L3", "x ^ 0"])), 2);
    assert_eq!(code(&mtlwb(&["taut", "-a", "nowhere.alg", "x"])), 2);
}

#[test]
fn budget_is_enforced() {
    let o = mtlwb(&["--budget", "10", "taut", "-a", "L5", "x -> y"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn consequence_and_deduction() {
    assert_eq!(
        code(&mtlwb(&["conseq", "-a", "L3", "-p", "x /\\ ~x", "0"])),
        0
    );
    assert_eq!(code(&mtlwb(&["conseq", "-a", "L3", "-p", "x", "y"])), 1);
    let o = mtlwb(&["ldt", "-a", "L4", "--psi", "x", "x & x & x"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("least n with premises |= psi^n -> goal: 3"));
    assert_eq!(
        code(&mtlwb(&["ldt", "-a", "B2xB2.alg", "--psi", "x", "x"])),
        2
    );
}

#[test]
fn interpolation() {
    let o = mtlwb(&[
        "interp", "-a", "G3", "--phi", "x /\\ y", "--psi", "x \\/ z", "--depth", "1",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "interpolant: x\n");
    assert_eq!(
        code(&mtlwb(&["interp", "-a", "L3", "--phi", "x", "--psi", "y"])),
        2
    );
}

#[test]
fn filters_and_si() {
    assert_eq!(
        stdout(&mtlwb(&["filters", "-a", "G3"])),
        "[2]\n[1, 2]\n[0, 1, 2]\n"
    );
    assert_eq!(code(&mtlwb(&["si", "-a", "L4"])), 0);
}

#[test]
fn constructions_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = mtlwb(&["--out", out, "product", "-a", "B2", "-b", "B2"]);
    assert_eq!(code(&o), 0);
    let file = dir.path().join("B2xB2.alg");
    assert!(file.exists());
    let check = mtlwb(&["check", file.to_str().unwrap()]);
    assert_eq!(code(&check), 0);
    assert!(stdout(&check).contains("chain: no"));
    let si = mtlwb(&["si", "-a", file.to_str().unwrap()]);
    assert_eq!(code(&si), 1);

    let osum = mtlwb(&["osum", "-a", "L3", "-b", "B2"]);
    assert!(stdout(&osum).starts_with("mtl-algebra v1\nname: L3+B2\n"));
    let q = mtlwb(&["quotient", "-a", "G4", "-f", "2,3"]);
    assert!(stdout(&q).starts_with("# projection [0, 1, 2, 2]\n"));
    let s = mtlwb(&["subalg", "-a", "L5", "-g", "2"]);
    assert!(stdout(&s).starts_with("# inclusion [0, 2, 4]\n"));
}

#[test]
fn check_reports_broken_tables() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    fs::write(
        &path,
        "mtl-algebra v1\nsize: 4\nkind: chain\nmult:\n0 0 0 0\n0 0 1 1\n0 1 1 2\n0 1 2 3\n",
    )
    .unwrap();
    let o = mtlwb(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("associativity  FAILS at [1, 2, 2]"));
    fs::write(&path, "not an algebra\n").unwrap();
    assert_eq!(code(&mtlwb(&["check", path.to_str().unwrap()])), 2);
}

#[test]
fn embeddings() {
    let o = mtlwb(&["embed", "-a", "L3", "-b", "L5"]);
    assert_eq!(
        (code(&o), stdout(&o)),
        (0, "[0, 2, 4]\n1 embedding(s)\n".to_owned())
    );
    assert_eq!(code(&mtlwb(&["embed", "-a", "G3", "-b", "L3"])), 1);
}

fn census_dir(dir: &Path) {
    let o = mtlwb(&["--out", dir.to_str().unwrap(), "enum", "-n", "4"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn enumeration_writes_census() {
    let dir = tempfile::tempdir().unwrap();
    census_dir(dir.path());
    let tsv = fs::read_to_string(dir.path().join("census_4.tsv")).unwrap();
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines[0], "id\tcontractivity\tsmtl\tinvolutive\tsimple");
    assert_eq!(lines.len(), 7);
    assert!(dir.path().join("chain_4_0006.alg").exists());
    let stdout_tsv = stdout(&mtlwb(&["enum", "-n", "4"]));
    assert_eq!(stdout_tsv, tsv);
    assert_eq!(code(&mtlwb(&["enum", "-n", "9"])), 2);
}

#[test]
fn joint_embedding_over_globbed_targets() {
    let dir = tempfile::tempdir().unwrap();
    census_dir(dir.path());
    let pattern = format!("{}/chain_4_*.alg", dir.path().display());
    let o = mtlwb(&["jointembed", "-a", "B2", "-b", "L3", "--targets", &pattern]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("chain_4_0001.alg"));
    let o = mtlwb(&["jointembed", "-a", "L3", "-b", "G3", "--enum-upto", "4"]);
    assert_eq!(code(&o), 0);
    let o = mtlwb(&["jointembed", "-a", "L3", "-b", "L4", "--enum-upto", "4"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn amalgam_from_span_file() {
    let dir = tempfile::tempdir().unwrap();
    let span = dir.path().join("v.span");
    fs::write(
        &span,
        "mtl-span v1\na: B2\nb: G3\nc: G3\ni: [0, 2]\nj: [0, 2]\n",
    )
    .unwrap();
    let o = mtlwb(&[
        "amalgam",
        "--span",
        span.to_str().unwrap(),
        "--enum-upto",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "host: chain_3_0002\nh: [0, 1, 2]\nk: [0, 1, 2]\n"
    );
}

#[test]
fn scenarios_are_deterministic() {
    let first = mtlwb(&["scenario", "--all"]);
    let second = mtlwb(&["scenario", "--all"]);
    let parallel = mtlwb(&["--parallel", "scenario", "--all"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, parallel.stdout);
    assert!(stdout(&first).ends_with("8 of 8 scenarios passed\n"));
    assert_eq!(code(&mtlwb(&["scenario", "nope"])), 2);
    assert_eq!(code(&mtlwb(&["scenario", "dp_failure"])), 0);
}

#[test]
fn relations() {
    let o = mtlwb(&["relations", "CJEP", "SSCC"]);
    assert!(stdout(&o).contains("[equivalent]"));
    let o = mtlwb(&["relations", "HC", "DMVP"]);
    assert!(stdout(&o).contains("[open]"));
    let o = mtlwb(&["relations", "SCC", "AP"]);
    assert!(stdout(&o).contains("(citation-only)"));
    let o = mtlwb(&["relations", "--check-consistency"]);
    assert_eq!((code(&o), stdout(&o)), (0, "consistency: ok\n".to_owned()));
    assert_eq!(code(&mtlwb(&["relations", "XX", "HC"])), 2);
}
