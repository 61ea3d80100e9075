use std::fs;
use std::path::Path;

use pgx_core::constructions::NamedGroup;
use pgx_core::corpus::{load_corpus, write_report, CorpusEntry};
use pgx_core::dmax::{census as run_census, compare_methods, is_d_maximal, verify_group, CheckStatus, DMaxVerdict, Method};
use pgx_core::group::{is_isomorphic, parse_action, series, ActionSet, Subgroup};
use pgx_core::pc::{expand, parse_presentation};
use pgx_core::{Error, GroupTable, Result};

use crate::MethodArg;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn load_group(path: &Path) -> Result<GroupTable> {
    expand(&parse_presentation(&read(path)?)?)
}

fn element(g: &GroupTable, x: usize) -> String {
    match g.coords(x) {
        Some(v) => v.to_word().to_string(),
        None => format!("#{x}"),
    }
}

fn describe(g: &GroupTable, h: &Subgroup) -> String {
    let gens: Vec<String> = h.gens().iter().map(|&x| element(g, x)).collect();
    format!("order {} d={} <{}>", h.order(), g.rank(h), gens.join(", "))
}

fn print_verdict(g: &GroupTable, v: &DMaxVerdict, tag: &str) {
    println!("{tag}d-maximal: {} (d={})", v.is_dmax, v.rank);
    if let Some(w) = &v.witness {
        println!("{tag}witness: {}", describe(g, w));
    }
}

pub fn check(file: &Path, action: Option<&Path>, method: MethodArg) -> Result<u8> {
    let g = load_group(file)?;
    let a = match action {
        Some(p) => parse_action(&read(p)?, &g)?,
        None => ActionSet::trivial(),
    };
    let dmax = match method {
        MethodArg::Exhaustive | MethodArg::Reduced => {
            let m = if matches!(method, MethodArg::Exhaustive) { Method::Exhaustive } else { Method::Reduced };
            let v = is_d_maximal(&g, &a, m)?;
            print_verdict(&g, &v, "");
            v.is_dmax
        }
        MethodArg::Both => {
            let c = compare_methods(&g, &a)?;
            print_verdict(&g, &c.exhaustive, "exhaustive ");
            print_verdict(&g, &c.reduced, "reduced ");
            println!("methods agree: {}", c.agree());
            if !c.agree() && g.prime() == 2 {
                return Err(Error::TheoremFailure("exhaustive and reduced verdicts differ on a 2-group".into()));
            }
            c.exhaustive.is_dmax
        }
    };
    Ok(if dmax { 0 } else { 1 })
}

fn orders(chain: &[Subgroup]) -> String {
    chain.iter().map(|h| h.order().to_string()).collect::<Vec<_>>().join(" > ")
}

pub fn info(file: &Path) -> Result<u8> {
    let g = load_group(file)?;
    let s = series(&g);
    println!("group: {}", g.name());
    println!("order: {}", g.order());
    println!("prime: {}", g.prime());
    println!("d: {}", s.rank);
    println!("class: {}", s.nilpotency_class);
    println!("exponent: {}", s.exponent);
    println!("frattini: {}", s.frattini.order());
    println!("center: {}", s.center.order());
    println!("gamma: {}", orders(&s.gamma));
    println!("lower p-central: {}", orders(&s.lowp));
    println!("agemo: {}", orders(&s.agemo));
    println!("omega: {}", orders(&s.omega));
    println!("derived: {}", orders(&s.derived_series));
    Ok(0)
}

pub fn iso(a: &Path, b: &Path) -> Result<u8> {
    let g = load_group(a)?;
    let h = load_group(b)?;
    match is_isomorphic(&g, &h)? {
        Some(phi) => {
            println!("isomorphic: true");
            for (i, &x) in g.generators().iter().enumerate() {
                println!("g{} -> {}", i + 1, element(&h, phi.apply(x)));
            }
            Ok(0)
        }
        None => {
            println!("isomorphic: false");
            Ok(1)
        }
    }
}

fn expand_corpus(dir: &Path, max_order: usize) -> Result<(Vec<GroupTable>, Vec<(String, String)>)> {
    let load = load_corpus(dir, max_order as u128)?;
    for (path, why) in &load.rejected {
        log::warn!("skipping {}: {why}", path.display());
    }
    if load.entries.is_empty() {
        log::warn!("no groups of order <= {max_order} in {}", dir.display());
    }
    let mut groups = Vec::with_capacity(load.entries.len());
    let mut failures = Vec::new();
    for e in &load.entries {
        match CorpusEntry::expand(e) {
            Ok(t) => groups.push(t),
            Err(err) => failures.push((e.name.clone(), err.to_string())),
        }
    }
    Ok((groups, failures))
}

pub fn census(dir: &Path, max_order: usize, out: &Path, json: bool, workers: usize) -> Result<u8> {
    let (groups, mut failures) = expand_corpus(dir, max_order)?;
    let outcome = run_census(&groups, workers);
    failures.extend(outcome.failures);
    write_report(&outcome.rows, &outcome.table, out, json)?;
    println!("rows: {}", outcome.rows.len());
    for (&(a, b), count) in &outcome.table.counts {
        println!("({a},{b}) {count}");
    }
    for (name, why) in &failures {
        eprintln!("failed: {name}: {why}");
    }
    Ok(if failures.is_empty() { 0 } else { crate::EXIT_ERROR })
}

pub fn verify(dir: &Path, max_order: usize) -> Result<u8> {
    let (groups, errors) = expand_corpus(dir, max_order)?;
    let mut failed = 0usize;
    let mut passed = 0usize;
    for (name, why) in &errors {
        println!("FAIL {name} load: {why}");
        failed += 1;
    }
    for g in &groups {
        let report = match verify_group(g) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL {} error: {e}", g.name());
                failed += 1;
                continue;
            }
        };
        for (check, status) in report.entries() {
            match status {
                CheckStatus::Fail(why) => {
                    println!("FAIL {} {check}: {why}", g.name());
                    failed += 1;
                }
                CheckStatus::Pass => passed += 1,
                CheckStatus::NotApplicable(_) => {}
            }
        }
    }
    println!("groups: {}, checks passed: {passed}, failures: {failed}", groups.len());
    Ok(if failed == 0 { 0 } else { 1 })
}

pub fn named(key: &str, emit: Option<&Path>) -> Result<u8> {
    let key: NamedGroup = key.parse()?;
    let text = key.presentation()?.to_pcg();
    match emit {
        Some(path) => fs::write(path, &text).map_err(|e| Error::io(path, e))?,
        None => print!("{text}"),
    }
    Ok(0)
}
