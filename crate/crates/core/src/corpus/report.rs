use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::dmax::{CensusRow, TypeTable};
use crate::{Error, Result};

pub const CSV_HEADER: &str = "name,order,dG,dG2,class,dmax,elem_ab,min_non_mc,label3";

/// Rows followed by the `type_a,type_b,count` table, LF endings.
pub fn render_csv(rows: &[CensusRow], table: &TypeTable) -> String {
    let mut s = String::new();
    s.push_str(CSV_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.name,
            r.order,
            r.d_g,
            r.d_g2,
            r.class,
            r.is_dmax,
            r.is_elem_abelian,
            r.is_min_non_metacyclic,
            r.label_3gen
        );
    }
    if !rows.is_empty() {
        s.push_str("type_a,type_b,count\n");
        for (&(a, b), &n) in &table.counts {
            let _ = writeln!(s, "{a},{b},{n}");
        }
    }
    s
}

#[derive(Serialize)]
struct TypeCount {
    type_a: u32,
    type_b: u32,
    count: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    rows: &'a [CensusRow],
    type_table: Vec<TypeCount>,
}

pub fn render_json(rows: &[CensusRow], table: &TypeTable) -> Result<String> {
    let report = JsonReport {
        rows,
        type_table: table
            .counts
            .iter()
            .map(|(&(type_a, type_b), &count)| TypeCount {
                type_a,
                type_b,
                count,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&report)?;
    s.push('\n');
    Ok(s)
}

/// Writes the CSV to `path` and, when `json` is set, the JSON mirror next to
/// it with a `.json` extension.
pub fn write_report(rows: &[CensusRow], table: &TypeTable, path: &Path, json: bool) -> Result<()> {
    fs::write(path, render_csv(rows, table)).map_err(|e| Error::io(path, e))?;
    if json {
        let jpath = path.with_extension("json");
        fs::write(&jpath, render_json(rows, table)?).map_err(|e| Error::io(&jpath, e))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(name: &str, dmax: bool) -> CensusRow {
        CensusRow {
            name: name.into(),
            order: 8,
            d_g: 2,
            d_g2: 1,
            class: 2,
            is_dmax: dmax,
            is_elem_abelian: false,
            is_min_non_metacyclic: false,
            label_3gen: "none".into(),
        }
    }

    #[test]
    fn empty_is_header_only() {
        assert_eq!(render_csv(&[], &TypeTable::default()), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn rows_then_table() {
        let rows = vec![row("o8_n4", true), row("o8_n3", false)];
        let t = TypeTable::from_rows(&rows);
        let csv = render_csv(&rows, &t);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[1], "o8_n4,8,2,1,2,true,false,false,none");
        assert_eq!(lines[3], "type_a,type_b,count");
        assert_eq!(lines[4], "2,1,1");
        assert!(csv.ends_with('\n') && !csv.contains('\r'));
        let js = render_json(&rows, &t).unwrap();
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        assert_eq!(v["type_table"][0]["count"], 1);
    }

    #[test]
    fn writes_json_mirror() {
        let tmp = tempfile::tempdir().unwrap();
        let p = tmp.path().join("r.csv");
        write_report(&[row("x", true)], &TypeTable::default(), &p, true).unwrap();
        assert!(p.exists() && tmp.path().join("r.json").exists());
    }
}
