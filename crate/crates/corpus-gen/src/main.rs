//! Builds the on-disk corpus of p-groups used by the census and the
//! acceptance suite.
//!
//! Every non-elementary-abelian group of order `p^(n+1)` is a central
//! extension of some group `Q` of order `p^n` by `<z> = C_p` with `z` in the
//! Frattini subgroup. For each `Q` we compute the consistent tails on its
//! relations (a linear space over `F_p`) and quotient by the coboundaries.
//! Classes in one orbit under sampled automorphisms of `Q` and rescaling of
//! `z` give isomorphic groups, so only one class per orbit is expanded. One
//! representative per isomorphism type is kept.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use pgx_core::group::{invariants, is_isomorphic, GroupInvariants};
use pgx_core::pc::{expand_with_cap, overlap_tests, Collector, PcPresentation, Word};
use pgx_core::{GroupTable, Result};

/// Number of groups of order `p^k` for `k = 0, 1, ...`.
const KNOWN_COUNTS_2: [usize; 9] = [1, 1, 2, 5, 14, 51, 267, 2328, 56092];
/// Random automorphisms of each quotient used to merge cohomology classes.
const AUTOMORPHISM_SAMPLES: usize = 6;
const SEED: u64 = 0x5eed;

const KNOWN_COUNTS_3: [usize; 8] = [1, 1, 2, 5, 15, 67, 504, 9310];

#[derive(Parser)]
#[command(about = "Generate the p-group corpus as .pcg files plus a manifest")]
struct Args {
    /// Output directory; groups land in `<out>/p<prime>/`.
    #[arg(long, default_value = "corpus")]
    out: PathBuf,
    /// Largest exponent `k` of `2^k` to generate.
    #[arg(long, default_value_t = 6)]
    max_log2: usize,
    /// Largest exponent `k` of `3^k` to generate.
    #[arg(long, default_value_t = 5)]
    max_log3: usize,
}

struct Found {
    pres: PcPresentation,
    table: GroupTable,
    inv: GroupInvariants,
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    for _ in 0..p - 2 {
        r = r * a as u64 % p as u64;
    }
    r as u32
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u32>>, ncols: usize, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let s = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for x in 0..ncols {
                    rows[k][x] = (rows[k][x] + (p - f) * rows[r][x]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn nullspace(mut rows: Vec<Vec<u32>>, ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let pivots = rref(&mut rows, ncols, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; ncols];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Vectors of `space` extending a basis of `sub` to a basis of `span(space)`.
fn complement(sub: &[Vec<u32>], space: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut basis: Vec<Vec<u32>> = sub.to_vec();
    let mut rank = rref(&mut basis.clone(), ncols, p).len();
    let mut out = Vec::new();
    for v in space {
        basis.push(v.clone());
        let r = rref(&mut basis.clone(), ncols, p).len();
        if r > rank {
            rank = r;
            out.push(v.clone());
        } else {
            basis.pop();
        }
    }
    out
}

fn slots(n: usize) -> usize {
    n + n * n.saturating_sub(1) / 2
}

/// Relations of `q` in slot order: powers, then commutators `(j, i)`.
fn relations(q: &PcPresentation) -> Vec<Word> {
    let n = q.ngens();
    let mut out: Vec<Word> = (0..n).map(|i| q.power(i).clone()).collect();
    for j in 1..n {
        for i in 0..j {
            out.push(q.commutator(j, i).clone());
        }
    }
    out
}

fn with_tail(w: &Word, z: usize, t: u32) -> Word {
    let mut f = w.factors().to_vec();
    if t != 0 {
        f.push((z, t));
    }
    Word::from_factors(f)
}

fn extension(q: &PcPresentation, tails: &[u32]) -> Result<PcPresentation> {
    let n = q.ngens();
    let mut g = PcPresentation::new("ext", q.prime(), n + 1)?;
    for i in 0..n {
        g.set_power(i, with_tail(q.power(i), n, tails[i]))?;
    }
    let mut s = n;
    for j in 1..n {
        for i in 0..j {
            g.set_commutator(j, i, with_tail(q.commutator(j, i), n, tails[s]))?;
            s += 1;
        }
    }
    Ok(g)
}

/// Consistent tail vectors spanning a complement of the coboundaries, so
/// that their `F_p`-combinations meet every class of central extensions of
/// `q` by `C_p` exactly once.
fn class_basis(q: &PcPresentation) -> Result<Vec<Vec<u32>>> {
    let n = q.ngens();
    let p = q.prime();
    let m = slots(n);
    let mut columns = Vec::with_capacity(m);
    for k in 0..m {
        let mut unit = vec![0; m];
        unit[k] = 1;
        let g = extension(q, &unit)?;
        let col = Collector::new(&g)?;
        let diffs: Vec<u32> = overlap_tests(&col)?
            .iter()
            .map(|o| (o.lhs.0[n] + p - o.rhs.0[n]) % p)
            .collect();
        columns.push(diffs);
    }
    let ntests = columns.first().map_or(0, Vec::len);
    let rows: Vec<Vec<u32>> = (0..ntests).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
    let cocycles = nullspace(rows, m, p);

    let rels = relations(q);
    let coboundaries: Vec<Vec<u32>> = (0..n)
        .map(|l| rels.iter().map(|w| (p - w.exponents(n)[l] % p) % p).collect())
        .collect();
    Ok(complement(&coboundaries, &cocycles, m, p))
}

/// The `z`-exponent of `(x, 0) (y, 0)` in the extension with the given
/// tails, indexed by `x * |Q| + y`. It is linear in the tails.
fn cocycle(q: &PcPresentation, qt: &GroupTable, tails: &[u32]) -> Result<Vec<u32>> {
    let p = q.prime() as usize;
    let ext = expand_with_cap(&extension(q, tails)?, usize::MAX)?;
    let nq = qt.order();
    let mut f = Vec::with_capacity(nq * nq);
    for x in 0..nq {
        for y in 0..nq {
            let v = ext.mul(x * p, y * p);
            assert_eq!(v / p, qt.mul(x, y), "extension does not lie over Q");
            f.push((v % p) as u32);
        }
    }
    Ok(f)
}

/// The extension table for the cocycle `f`, with `(x, a)` stored at
/// `x * p + a` as in the pc enumeration.
fn extension_table(qt: &GroupTable, f: &[u32]) -> Result<GroupTable> {
    let p = qt.prime() as usize;
    let nq = qt.order();
    let n = nq * p;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let (x, a) = (u / p, u % p);
            (0..n)
                .map(|v| {
                    let (y, b) = (v / p, v % p);
                    qt.mul(x, y) * p + (a + b + f[x * nq + y] as usize) % p
                })
                .collect()
        })
        .collect();
    GroupTable::from_cayley("ext", qt.prime(), &rows)
}

/// Extends `gens[i] -> images[i]` along right multiplication. `None` if the
/// map is not a well defined injective homomorphism on `<gens>`.
fn extend(g: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; g.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&a, &b) in gens.iter().zip(images) {
            let (xa, yb) = (g.mul(x, a), g.mul(map[x], b));
            if map[xa] == usize::MAX {
                if std::mem::replace(&mut used[yb], true) {
                    return None;
                }
                map[xa] = yb;
                queue.push(xa);
            } else if map[xa] != yb {
                return None;
            }
        }
    }
    Some(map)
}

/// An automorphism of `g` as an element map, from a depth-first search over
/// generator images tried in random order.
fn random_automorphism(g: &GroupTable, rng: &mut StdRng) -> Vec<usize> {
    fn dfs(g: &GroupTable, gens: &[usize], images: &mut Vec<usize>, rng: &mut StdRng) -> Option<Vec<usize>> {
        let k = images.len();
        if k == gens.len() {
            return extend(g, gens, images);
        }
        let mut cands: Vec<usize> = (1..g.order()).filter(|&y| g.elt_order(y) == g.elt_order(gens[k])).collect();
        cands.shuffle(rng);
        for y in cands {
            images.push(y);
            if extend(g, &gens[..=k], images).is_some() {
                if let Some(m) = dfs(g, gens, images, rng) {
                    return Some(m);
                }
            }
            images.pop();
        }
        None
    }
    dfs(g, g.generators(), &mut Vec::new(), rng).expect("the identity map is an automorphism")
}

/// Solves `A x = b_r` for every right-hand side, where `A` has the given
/// columns, and returns the first `keep` coordinates of each solution.
fn solve(columns: &[Vec<u32>], rhs: &[Vec<u32>], keep: usize, p: u32) -> Vec<Vec<u32>> {
    let u = columns.len();
    let width = u + rhs.len();
    let m = columns[0].len();
    let mut rows: Vec<Vec<u32>> = (0..m)
        .map(|i| columns.iter().chain(rhs).map(|c| c[i]).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..u {
        let Some(k) = (r..m).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let s = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let f = row[c];
            if i != r && f != 0 {
                for x in c..width {
                    row[x] = (row[x] + (p - f) * pivot[x]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    assert!(rows[r..].iter().all(|row| row[u..].iter().all(|&x| x == 0)), "inconsistent system");
    (0..rhs.len())
        .map(|j| {
            let mut x = vec![0; keep];
            for (i, &c) in pivots.iter().enumerate() {
                if c < keep {
                    x[c] = rows[i][u + j];
                }
            }
            x
        })
        .collect()
}

/// Matrices of the action `f -> f(a x, a y)` of the given automorphisms on
/// second cohomology, in the coordinates of the basis cocycles. Column `j`
/// of each matrix is the image of basis vector `j`.
fn action_matrices(qt: &GroupTable, cocycles: &[Vec<u32>], autos: &[Vec<usize>]) -> Vec<Vec<Vec<u32>>> {
    let p = qt.prime();
    let nq = qt.order();
    let k = cocycles.len();
    if k == 0 {
        return vec![Vec::new(); autos.len()];
    }
    let mut columns = cocycles.to_vec();
    for x in 1..nq {
        let mut d = vec![0u32; nq * nq];
        for a in 0..nq {
            for b in 0..nq {
                let v = (a == x) as u32 + (b == x) as u32 + (p - 1) * (qt.mul(a, b) == x) as u32;
                d[a * nq + b] = v % p;
            }
        }
        columns.push(d);
    }
    let rhs: Vec<Vec<u32>> = autos
        .iter()
        .flat_map(|al| {
            cocycles.iter().map(move |f| {
                let mut out = vec![0; nq * nq];
                for a in 0..nq {
                    for b in 0..nq {
                        out[a * nq + b] = f[al[a] * nq + al[b]];
                    }
                }
                out
            })
        })
        .collect();
    let sols = solve(&columns, &rhs, k, p);
    sols.chunks(k.max(1)).map(|c| c.to_vec()).collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Smallest index of each orbit of `F_p^k` under the matrices and the
/// nonzero scalars, with vectors indexed by `sum c_j p^j`.
fn orbit_representatives(p: u32, k: usize, matrices: &[Vec<Vec<u32>>]) -> Vec<usize> {
    let p = p as usize;
    let count = p.pow(k as u32);
    let digits = |mut i: usize| {
        (0..k)
            .map(|_| {
                let d = i % p;
                i /= p;
                d
            })
            .collect::<Vec<_>>()
    };
    let index = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
    let mut parent: Vec<usize> = (0..count).collect();
    for i in 0..count {
        let c = digits(i);
        let mut images: Vec<usize> = (2..p).map(|l| index(&c.iter().map(|d| d * l % p).collect::<Vec<_>>())).collect();
        for m in matrices {
            let img: Vec<usize> = (0..k)
                .map(|r| (0..k).map(|j| m[j][r] as usize * c[j]).sum::<usize>() % p)
                .collect();
            images.push(index(&img));
        }
        for j in images {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..count).filter(|&i| find(&mut parent, i) == i).collect()
}

fn elementary_abelian(p: u32, n: usize) -> Result<Found> {
    let pres = PcPresentation::new("ext", p, n)?;
    let table = expand_with_cap(&pres, usize::MAX)?;
    let inv = invariants(&table);
    Ok(Found { pres, table, inv })
}

struct Level {
    groups: Vec<Found>,
    buckets: HashMap<GroupInvariants, Vec<usize>>,
}

impl Level {
    fn new() -> Self {
        Level { groups: Vec::new(), buckets: HashMap::new() }
    }

    fn insert(&mut self, f: Found) -> Result<bool> {
        let bucket = self.buckets.entry(f.inv.clone()).or_default();
        for &k in bucket.iter() {
            if is_isomorphic(&self.groups[k].table, &f.table)?.is_some() {
                return Ok(false);
            }
        }
        bucket.push(self.groups.len());
        self.groups.push(f);
        Ok(true)
    }
}

fn sort_key(f: &Found) -> impl Ord {
    let i = &f.inv;
    (i.rank, Reverse(f.table.exponent()), i.class, Reverse(i.center_order), i.element_orders.clone())
}

fn generate(p: u32, max_log: usize, known: &[usize]) -> Result<Vec<Vec<PcPresentation>>> {
    let mut levels: Vec<Vec<PcPresentation>> = vec![vec![PcPresentation::new("o1_n1", p, 0)?]];
    let mut rng = StdRng::seed_from_u64(SEED);
    for n in 0..max_log {
        let mut next = Level::new();
        next.insert(elementary_abelian(p, n + 1)?)?;
        for q in &levels[n] {
            let qt = expand_with_cap(q, usize::MAX)?;
            let dq = qt.rank_of_group();
            let basis = class_basis(q)?;
            let cocycles: Vec<Vec<u32>> =
                basis.iter().map(|b| cocycle(q, &qt, b)).collect::<Result<_>>()?;
            let autos: Vec<Vec<usize>> = (0..AUTOMORPHISM_SAMPLES).map(|_| random_automorphism(&qt, &mut rng)).collect();
            let matrices = action_matrices(&qt, &cocycles, &autos);
            let reps = orbit_representatives(p, basis.len(), &matrices);
            let count = reps.len();
            let mut kept = 0;
            for idx in reps {
                let mut coeffs = Vec::with_capacity(basis.len());
                let mut rest = idx;
                for _ in 0..basis.len() {
                    coeffs.push((rest % p as usize) as u32);
                    rest /= p as usize;
                }
                let mut tails = vec![0u32; slots(q.ngens())];
                let mut f = vec![0u32; qt.order() * qt.order()];
                for ((c, b), cf) in coeffs.iter().zip(&basis).zip(&cocycles) {
                    if *c == 0 {
                        continue;
                    }
                    for (t, v) in tails.iter_mut().zip(b) {
                        *t = (*t + c * v) % p;
                    }
                    for (x, v) in f.iter_mut().zip(cf) {
                        *x = (*x + c * v) % p;
                    }
                }
                let table = extension_table(&qt, &f)?;
                if table.rank_of_group() != dq {
                    continue;
                }
                let pres = extension(q, &tails)?;
                let inv = invariants(&table);
                if next.insert(Found { pres, table, inv })? {
                    kept += 1;
                }
            }
            eprintln!("p={p} |Q|={p}^{n} {}: {count} orbits, {kept} new", q.name());
        }
        let mut groups = next.groups;
        groups.sort_by_cached_key(sort_key);
        let order = (p as u128).pow(n as u32 + 1);
        let named: Vec<PcPresentation> = groups
            .into_iter()
            .enumerate()
            .map(|(k, f)| {
                let mut pres = f.pres;
                pres.set_name(format!("o{order}_n{}", k + 1));
                pres
            })
            .collect();
        eprintln!("p={p} order {order}: {} groups", named.len());
        if let Some(&want) = known.get(n + 1) {
            if named.len() != want {
                return Err(pgx_core::Error::Corpus(format!(
                    "order {order}: found {} groups, expected {want}",
                    named.len()
                )));
            }
        }
        levels.push(named);
    }
    Ok(levels)
}

fn write_corpus(dir: &Path, levels: &[Vec<PcPresentation>]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut manifest = String::from("# name\torder\tfile\n");
    for level in levels {
        for pres in level {
            let file = format!("{}.pcg", pres.name());
            fs::write(dir.join(&file), pres.to_pcg())?;
            let order = pres.order().expect("small order");
            manifest.push_str(&format!("{}\t{order}\t{file}\n", pres.name()));
        }
    }
    fs::write(dir.join(pgx_core::corpus::MANIFEST), manifest)
}

fn main() -> ExitCode {
    let args = Args::parse();
    for (p, max_log, known) in
        [(2, args.max_log2, &KNOWN_COUNTS_2[..]), (3, args.max_log3, &KNOWN_COUNTS_3[..])]
    {
        let levels = match generate(p, max_log, known) {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
        };
        let dir = args.out.join(format!("p{p}"));
        if let Err(e) = write_corpus(&dir, &levels) {
            eprintln!("error: {}: {e}", dir.display());
            return ExitCode::from(74);
        }
    }
    ExitCode::SUCCESS
}
