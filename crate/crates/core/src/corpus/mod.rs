//! Catalogs of `.pcg` files and census reports.
//!
//! A corpus directory holds one presentation per file plus an optional
//! `manifest.tsv` with tab-separated `name order file` lines. When a manifest
//! is present it is authoritative: exactly the listed files are loaded and
//! every order up to the requested maximum must be complete.

mod report;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::dmax::natural_key;
use crate::group::GroupTable;
use crate::pc::{expand, parse_presentation, PcPresentation};
use crate::{Error, Result};

pub use report::{render_csv, render_json, write_report};

pub const MANIFEST: &str = "manifest.tsv";

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub path: PathBuf,
    pub name: String,
    pub order: u128,
    pub presentation: PcPresentation,
}

impl CorpusEntry {
    /// Expands the presentation; the table carries the entry name.
    pub fn expand(&self) -> Result<GroupTable> {
        let mut t = expand(&self.presentation)?;
        t.set_name(self.name.clone());
        Ok(t)
    }
}

#[derive(Debug, Clone, Default)]
pub struct CorpusLoad {
    pub entries: Vec<CorpusEntry>,
    /// Files that failed validation, with the reason.
    pub rejected: Vec<(PathBuf, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestLine {
    pub name: String,
    pub order: u128,
    pub file: String,
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestLine>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let bad = |m: &str| Error::Corpus(format!("{MANIFEST} line {}: {m}", i + 1));
        if cols.len() != 3 {
            return Err(bad("expected `name<TAB>order<TAB>file`"));
        }
        let order = cols[1]
            .trim()
            .parse()
            .map_err(|_| bad(&format!("bad order `{}`", cols[1])))?;
        out.push(ManifestLine {
            name: cols[0].trim().to_string(),
            order,
            file: cols[2].trim().to_string(),
        });
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn load_file(path: &Path, declared: Option<(&str, u128)>) -> std::result::Result<CorpusEntry, String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let pres = parse_presentation(&text).map_err(|e| e.to_string())?;
    let order = pres.order().ok_or("order overflows")?;
    let name = match declared {
        Some((name, want)) => {
            if want != order {
                return Err(format!("declared order {want}, presentation has order {order}"));
            }
            name.to_string()
        }
        None => pres.name().to_string(),
    };
    Ok(CorpusEntry {
        path: path.to_path_buf(),
        name,
        order,
        presentation: pres,
    })
}

/// Loads every entry of order at most `max_order`, sorted by (order, name).
pub fn load_corpus(dir: &Path, max_order: u128) -> Result<CorpusLoad> {
    let mut load = CorpusLoad::default();
    let manifest_path = dir.join(MANIFEST);
    if manifest_path.exists() {
        let lines = parse_manifest(&read(&manifest_path)?)?;
        let mut declared: BTreeMap<u128, usize> = BTreeMap::new();
        for line in lines.iter().filter(|l| l.order <= max_order) {
            *declared.entry(line.order).or_insert(0) += 1;
            let path = dir.join(&line.file);
            match load_file(&path, Some((&line.name, line.order))) {
                Ok(e) => load.entries.push(e),
                Err(m) => {
                    log::warn!("{}: {m}", path.display());
                    load.rejected.push((path, m));
                }
            }
        }
        for (&order, &want) in &declared {
            let got = load.entries.iter().filter(|e| e.order == order).count();
            if got != want {
                return Err(Error::Corpus(format!(
                    "order {order}: manifest declares {want} groups but {got} loaded"
                )));
            }
        }
    } else {
        let rd = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
        let mut files: Vec<PathBuf> = Vec::new();
        for item in rd {
            let path = item.map_err(|e| Error::io(dir, e))?.path();
            if path.extension().is_some_and(|x| x == "pcg") {
                files.push(path);
            }
        }
        files.sort();
        for path in files {
            match load_file(&path, None) {
                Ok(e) if e.order <= max_order => load.entries.push(e),
                Ok(_) => {}
                Err(m) => {
                    log::warn!("{}: {m}", path.display());
                    load.rejected.push((path, m));
                }
            }
        }
    }
    if load.entries.is_empty() {
        log::warn!("{}: no corpus entries of order <= {max_order}", dir.display());
    }
    load.entries
        .sort_by_key(|a| (a.order, natural_key(&a.name)));
    Ok(load)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, text: &str) {
        fs::write(dir.join(name), text).unwrap();
    }

    #[test]
    fn manifest_counts_are_enforced() {
        let tmp = tempfile::tempdir().unwrap();
        let d = tmp.path();
        write(d, "a.pcg", "group o2_n1\nprime 2\nngens 1\nend\n");
        write(d, "b.pcg", "group o4_n1\nprime 2\nngens 2\npower 1 = g2\nend\n");
        write(d, "c.pcg", "group o4_n2\nprime 2\nngens 2\nend\n");
        write(d, MANIFEST, "o2_n1\t2\ta.pcg\no4_n1\t4\tb.pcg\no4_n2\t4\tc.pcg\n");
        let l = load_corpus(d, 4).unwrap();
        assert_eq!(l.entries.len(), 3);
        assert_eq!(load_corpus(d, 2).unwrap().entries.len(), 1);

        write(d, "c.pcg", "group o4_n2\nprime 2\nngens 2\ncomm 2 1 = g1\nend\n");
        assert!(matches!(load_corpus(d, 4), Err(Error::Corpus(_))));
        assert_eq!(load_corpus(d, 2).unwrap().entries.len(), 1);
    }

    #[test]
    fn declared_order_must_match() {
        let tmp = tempfile::tempdir().unwrap();
        let d = tmp.path();
        write(d, "a.pcg", "group x\nprime 2\nngens 2\nend\n");
        write(d, MANIFEST, "x\t8\ta.pcg\n");
        assert!(load_corpus(d, 8).is_err());
    }

    #[test]
    fn empty_dir_is_empty() {
        let tmp = tempfile::tempdir().unwrap();
        let l = load_corpus(tmp.path(), 1 << 8).unwrap();
        assert!(l.entries.is_empty());
        assert!(l.rejected.is_empty());
    }

    #[test]
    fn without_manifest_bad_files_are_skipped() {
        let tmp = tempfile::tempdir().unwrap();
        let d = tmp.path();
        write(d, "a.pcg", "group a\nprime 2\nngens 1\nend\n");
        write(d, "b.pcg", "group b\nprime 4\nngens 1\nend\n");
        write(d, "notes.txt", "ignored");
        let l = load_corpus(d, 64).unwrap();
        assert_eq!(l.entries.len(), 1);
        assert_eq!(l.rejected.len(), 1);
    }
}
