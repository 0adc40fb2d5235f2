//! Algebra files on disk: single files, directories of them, and the
//! persisted chain census (`chain_N_####.alg` plus `census_N.tsv`).

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::algebra::io::{read_algebra, write_algebra, FormatError};
use crate::algebra::{
    boolean2, goedel, lukasiewicz, nilpotent_minimum, trivial, Elem, FiniteAlgebra,
};
use crate::enumeration::{chain_metadata, ChainCensus, ChainMeta, EnumError};
use crate::modeltheory::{AmalgamationSpan, ModelError};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("`{0}` is neither a file nor a built-in algebra (L<k>, G<k>, NM<k>, B2, T1)")]
    UnknownAlgebra(String),
    #[error("{path} line {line}: {message}")]
    Span {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CatalogError + '_ {
    move |source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub const TSV_HEADER: &str = "id\tcontractivity\tsmtl\tinvolutive\tsimple";

pub fn save(a: &FiniteAlgebra, path: &Path) -> Result<(), CatalogError> {
    fs::write(path, write_algebra(a)).map_err(io_err(path))
}

/// Reads and verifies one algebra file.
pub fn load(path: &Path) -> Result<FiniteAlgebra, CatalogError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    read_algebra(&text).map_err(|source| CatalogError::Format {
        path: path.to_path_buf(),
        source,
    })
}

/// Built-in algebras by name: `L<k>`, `G<k>`, `NM<k>` (k >= 2), `B2`, `T1`.
pub fn builtin(name: &str) -> Option<FiniteAlgebra> {
    let sized = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|k| k.parse::<usize>().ok())
    };
    match name {
        "B2" => Some(boolean2()),
        "T1" => Some(trivial()),
        _ => {
            if let Some(k) = sized("NM") {
                nilpotent_minimum(k).ok()
            } else if let Some(k) = sized("L") {
                lukasiewicz(k).ok()
            } else if let Some(k) = sized("G") {
                goedel(k).ok()
            } else {
                None
            }
        }
    }
}

/// Loads `source` as a file if one exists there, else as a built-in name.
pub fn resolve(source: &str) -> Result<FiniteAlgebra, CatalogError> {
    let path = Path::new(source);
    if path.exists() {
        return load(path);
    }
    builtin(source).ok_or_else(|| CatalogError::UnknownAlgebra(source.to_owned()))
}

pub const SPAN_HEADER: &str = "mtl-span v1";

/// Reads an amalgamation span file:
///
/// ```text
/// mtl-span v1
/// a: B2
/// b: l3.alg
/// c: g3.alg
/// i: [0, 2]
/// j: [0, 2]
/// ```
///
/// Algebra entries are resolved like [`resolve`], relative to the span
/// file's directory.
pub fn load_span(path: &Path) -> Result<AmalgamationSpan, CatalogError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let err = |line: usize, message: String| CatalogError::Span {
        path: path.to_path_buf(),
        line,
        message,
    };
    let base = path.parent().unwrap_or(Path::new("."));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, SPAN_HEADER)) => {}
        Some((n, other)) => {
            return Err(err(n, format!("expected `{SPAN_HEADER}`, found `{other}`")))
        }
        None => return Err(err(0, "empty file".into())),
    }
    let mut algebras: [Option<FiniteAlgebra>; 3] = [None, None, None];
    let mut maps: [Option<Vec<Elem>>; 2] = [None, None];
    for (n, line) in lines {
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| err(n, format!("expected `key: value`, found `{line}`")))?;
        let value = value.trim();
        match key.trim() {
            k @ ("a" | "b" | "c") => {
                let slot = usize::from(k.as_bytes()[0] - b'a');
                let local = base.join(value);
                let source = if local.exists() {
                    local.to_string_lossy().into_owned()
                } else {
                    value.to_owned()
                };
                algebras[slot] = Some(resolve(&source)?);
            }
            k @ ("i" | "j") => {
                let cells = value.trim_start_matches('[').trim_end_matches(']');
                let map = cells
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<Elem>()
                            .map_err(|_| err(n, format!("bad map entry `{t}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                maps[usize::from(k == "j")] = Some(map);
            }
            other => return Err(err(n, format!("unknown key `{other}`"))),
        }
    }
    let missing = |what: &str| err(0, format!("missing `{what}`"));
    let [a, b, c] = algebras;
    let [i, j] = maps;
    Ok(AmalgamationSpan::new(
        a.ok_or_else(|| missing("a"))?,
        b.ok_or_else(|| missing("b"))?,
        c.ok_or_else(|| missing("c"))?,
        i.ok_or_else(|| missing("i"))?,
        j.ok_or_else(|| missing("j"))?,
    )?)
}

/// One `.alg` file found by [`list`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub path: PathBuf,
    pub name: Option<String>,
    pub size: usize,
}

/// Every loadable `.alg` file in `dir`, sorted by file name.
pub fn list(dir: &Path) -> Result<Vec<Entry>, CatalogError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io_err(dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "alg"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let a = load(&path)?;
            Ok(Entry {
                name: a.name().map(str::to_owned),
                size: a.size(),
                path,
            })
        })
        .collect()
}

fn meta_comments(order: usize, id: usize, m: &ChainMeta) -> String {
    let monolith = m.monolith_size.map_or("none".to_owned(), |s| s.to_string());
    format!(
        "# census order {order} id {id}\n# contractivity: {}\n# smtl: {}\n# involutive: {}\n# simple: {}\n# monolith-size: {monolith}\n",
        m.contractivity, m.smtl, m.involutive, m.simple
    )
}

pub fn tsv_row(stem: &str, m: &ChainMeta) -> String {
    format!(
        "{stem}\t{}\t{}\t{}\t{}",
        m.contractivity, m.smtl, m.involutive, m.simple
    )
}

/// Writes every census member plus the TSV summary into `dir`. Members
/// without metadata get it computed here. Returns the written paths.
pub fn write_census(census: &ChainCensus, dir: &Path) -> Result<Vec<PathBuf>, CatalogError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut written = Vec::with_capacity(census.count() + 1);
    let mut tsv = String::from(TSV_HEADER);
    tsv.push('\n');
    for entry in &census.chains {
        let meta = match &entry.meta {
            Some(m) => m.clone(),
            None => chain_metadata(&entry.algebra)?,
        };
        let stem = entry.stem();
        let path = dir.join(format!("{stem}.alg"));
        let body = meta_comments(census.order, entry.id, &meta) + &write_algebra(&entry.algebra);
        fs::write(&path, body).map_err(io_err(&path))?;
        written.push(path);
        tsv.push_str(&tsv_row(&stem, &meta));
        tsv.push('\n');
    }
    let path = dir.join(format!("census_{}.tsv", census.order));
    fs::write(&path, tsv).map_err(io_err(&path))?;
    written.push(path);
    Ok(written)
}

/// Rereads the order-`n` members of a census directory, in id order.
pub fn load_census(dir: &Path, n: usize) -> Result<Vec<FiniteAlgebra>, CatalogError> {
    let prefix = format!("chain_{n}_");
    list(dir)?
        .into_iter()
        .filter(|e| {
            e.path
                .file_name()
                .and_then(|f| f.to_str())
                .is_some_and(|f| f.starts_with(&prefix))
        })
        .map(|e| load(&e.path))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{goedel, lukasiewicz};
    use crate::constructions::product;
    use crate::enumeration::{census_metadata, enumerate_chains};

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = product(&goedel(3).unwrap(), &lukasiewicz(3).unwrap()).unwrap();
        for (file, a) in [("l3.alg", lukasiewicz(3).unwrap()), ("p.alg", p)] {
            let path = dir.path().join(file);
            save(&a, &path).unwrap();
            let back = load(&path).unwrap();
            assert_eq!(back, a);
            assert_eq!(write_algebra(&back), fs::read_to_string(&path).unwrap());
        }
    }

    #[test]
    fn census_directory() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = enumerate_chains(4).unwrap();
        census_metadata(&mut c).unwrap();
        let written = write_census(&c, dir.path()).unwrap();
        assert_eq!(written.len(), c.count() + 1);
        let entries = list(dir.path()).unwrap();
        assert_eq!(entries.len(), c.count());
        assert_eq!(entries[0].name.as_deref(), Some("chain_4_0001"));
        let reread = load_census(dir.path(), 4).unwrap();
        assert_eq!(reread, c.into_algebras());
        let tsv = fs::read_to_string(dir.path().join("census_4.tsv")).unwrap();
        let mut lines = tsv.lines();
        assert_eq!(lines.next(), Some(TSV_HEADER));
        assert_eq!(lines.count(), entries.len());
    }

    #[test]
    fn load_reports_associativity_witness() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.alg");
        fs::write(
            &path,
            "mtl-algebra v1\nsize: 4\nkind: chain\nmult:\n0 0 0 0\n0 0 1 1\n0 1 1 2\n0 1 2 3\n",
        )
        .unwrap();
        let err = load(&path).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin("L4"), lukasiewicz(4).ok());
        assert_eq!(builtin("G3"), goedel(3).ok());
        assert_eq!(builtin("NM4"), nilpotent_minimum(4).ok());
        assert_eq!(builtin("B2"), Some(boolean2()));
        assert_eq!(builtin("L1"), None);
        assert_eq!(builtin("X3"), None);
        assert!(matches!(
            resolve("nowhere"),
            Err(CatalogError::UnknownAlgebra(_))
        ));
    }

    #[test]
    fn span_files() {
        let dir = tempfile::tempdir().unwrap();
        save(&goedel(3).unwrap(), &dir.path().join("g3.alg")).unwrap();
        let path = dir.path().join("v.span");
        fs::write(
            &path,
            "mtl-span v1\n# V shape\na: B2\nb: g3.alg\nc: G3\ni: [0, 2]\nj: 0 2\n",
        )
        .unwrap();
        let span = load_span(&path).unwrap();
        assert_eq!(span.b, goedel(3).unwrap());
        assert_eq!(span.j.map, vec![0, 2]);

        fs::write(
            &path,
            "mtl-span v1\na: B2\nb: G3\nc: G3\ni: [0, 1]\nj: [0, 2]\n",
        )
        .unwrap();
        assert!(matches!(
            load_span(&path),
            Err(CatalogError::Model(ModelError::InvalidSpan(_)))
        ));
        fs::write(&path, "mtl-span v1\na: B2\nb: G3\nc: G3\ni: [0, 2]\n").unwrap();
        assert!(matches!(load_span(&path), Err(CatalogError::Span { .. })));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(
            load(Path::new("/nonexistent/x.alg")),
            Err(CatalogError::Io { .. })
        ));
    }
}
