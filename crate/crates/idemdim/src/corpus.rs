//! Finite semiring tables on disk, and the random generator behind the
//! bundled corpus.

use std::fs;
use std::path::{Path, PathBuf};

use idemdim_core::finite::{b_times_b, t3, FiniteSemiring, TableDescription};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk layout of a finite semiring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    #[serde(default)]
    pub name: String,
    pub carrier: Vec<String>,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
    pub zero: String,
    pub one: String,
}

impl From<TableDescription> for TableFile {
    fn from(d: TableDescription) -> Self {
        TableFile { name: d.name, carrier: d.carrier, add: d.add, mul: d.mul, zero: d.zero, one: d.one }
    }
}

impl From<TableFile> for TableDescription {
    fn from(t: TableFile) -> Self {
        TableDescription { name: t.name, carrier: t.carrier, add: t.add, mul: t.mul, zero: t.zero, one: t.one }
    }
}

pub fn parse_table(src: &str, fallback_name: &str) -> Result<FiniteSemiring, CliError> {
    let mut file: TableFile = serde_json::from_str(src).map_err(|e| CliError::Table(e.to_string()))?;
    if file.name.is_empty() {
        file.name = fallback_name.to_string();
    }
    Ok(FiniteSemiring::from_description(&file.into())?)
}

pub fn load_table(path: &Path) -> Result<FiniteSemiring, CliError> {
    let src = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("table");
    parse_table(&src, stem)
}

pub fn table_json(f: &FiniteSemiring) -> String {
    let mut s = serde_json::to_string_pretty(&TableFile::from(f.description())).expect("tables serialize");
    s.push('\n');
    s
}

pub fn save_table(f: &FiniteSemiring, path: &Path) -> Result<(), CliError> {
    fs::write(path, table_json(f)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Every `*.json` table in `dir`, in file-name order.
pub fn load_dir(dir: &Path) -> Result<Vec<(PathBuf, FiniteSemiring)>, CliError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.into_iter().map(|p| load_table(&p).map(|f| (p, f))).collect()
}

fn labels(n: usize) -> Vec<String> {
    let mut out = vec!["0".to_string(), "1".to_string()];
    out.extend((0..n.saturating_sub(2)).map(|i| ((b'a' + i as u8) as char).to_string()));
    out
}

/// A random semiring on a chain `0 < ... < n-1` with `max` as addition.
/// Multiplication is drawn as a commutative monotone table with `0`
/// absorbing and a random unit, then kept only if it is associative.
pub fn random_chain_semiring(name: &str, n: usize, rng: &mut ChaCha8Rng, attempts: usize) -> Option<FiniteSemiring> {
    let add: Vec<usize> = (0..n * n).map(|i| (i / n).max(i % n)).collect();
    for _ in 0..attempts {
        let one = rng.gen_range(1..n);
        let mut mul = vec![usize::MAX; n * n];
        for a in 0..n {
            mul[a] = 0;
            mul[a * n] = 0;
            mul[one * n + a] = a;
            mul[a * n + one] = a;
        }
        let mut ok = true;
        'fill: for a in 1..n {
            for b in a..n {
                if mul[a * n + b] != usize::MAX {
                    continue;
                }
                // monotone in both arguments given the cells already set
                let lo = mul[(a - 1) * n + b].max(mul[a * n + b - 1]);
                if lo == usize::MAX || lo >= n {
                    ok = false;
                    break 'fill;
                }
                let v = rng.gen_range(lo..n);
                mul[a * n + b] = v;
                mul[b * n + a] = v;
            }
        }
        if !ok {
            continue;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order[2..].shuffle(rng);
        // relabel so the carrier order is not always the chain order
        let mut pos = vec![0; n];
        for (i, &o) in order.iter().enumerate() {
            pos[o] = i;
        }
        let mut radd = vec![0; n * n];
        let mut rmul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                radd[pos[a] * n + pos[b]] = pos[add[a * n + b]];
                rmul[pos[a] * n + pos[b]] = pos[mul[a * n + b]];
            }
        }
        if let Ok(f) = FiniteSemiring::from_indices(name, labels(n), radd, rmul, pos[0], pos[one]) {
            return Some(f);
        }
    }
    None
}

/// `B[e]/(e^2)`: carrier `0, 1, e, 1+e`.
pub fn dual_numbers() -> FiniteSemiring {
    let l = ["0", "1", "e", "u"].iter().map(|s| s.to_string()).collect();
    // u = 1 + e
    let add = vec![0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3];
    let mul = vec![0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 0, 2, 0, 3, 2, 3];
    FiniteSemiring::from_indices("Bdual", l, add, mul, 0, 1).expect("dual numbers are valid")
}

/// `{-inf, 0, 1, .., k}` with max and addition capped at `k`.
pub fn truncated_tropical(k: usize) -> FiniteSemiring {
    let n = k + 2;
    let mut l = vec!["0".to_string(), "1".to_string()];
    l.extend((1..=k).map(|i| format!("t{i}")));
    let add = (0..n * n).map(|i| (i / n).max(i % n)).collect();
    let mul = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            if a == 0 || b == 0 {
                0
            } else {
                (a + b - 1).min(n - 1)
            }
        })
        .collect();
    FiniteSemiring::from_indices(&format!("Ntrunc{k}"), l, add, mul, 0, 1).expect("truncation is valid")
}

/// The chain `0 < 1 < ... ` of length `n` with `min` as multiplication.
pub fn min_chain(n: usize) -> FiniteSemiring {
    let add = (0..n * n).map(|i| (i / n).max(i % n)).collect();
    let mul = (0..n * n).map(|i| (i / n).min(i % n)).collect();
    // the top element is the unit, listed second
    let mut order: Vec<usize> = (0..n).collect();
    order.swap(1, n - 1);
    let f = FiniteSemiring::from_indices(&format!("Chain{n}"), labels(n), add, mul, 0, n - 1).expect("chains are valid");
    relabel(&f, &order)
}

fn relabel(f: &FiniteSemiring, order: &[usize]) -> FiniteSemiring {
    let n = f.size();
    let mut pos = vec![0; n];
    for (i, &o) in order.iter().enumerate() {
        pos[o] = i;
    }
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            add[pos[a] * n + pos[b]] = pos[f.add(a, b)];
            mul[pos[a] * n + pos[b]] = pos[f.mul(a, b)];
        }
    }
    FiniteSemiring::from_indices(f.name(), labels(n), add, mul, pos[f.zero()], pos[f.one()]).expect("relabelling keeps axioms")
}

/// The bundled corpus: fixed examples followed by seeded random chains.
pub fn generate(seed: u64) -> Vec<(String, FiniteSemiring)> {
    let mut out = vec![
        ("b".to_string(), FiniteSemiring::boolean()),
        ("t3".to_string(), t3()),
        ("bxb".to_string(), b_times_b()),
        ("bdual".to_string(), dual_numbers()),
        ("ntrunc1".to_string(), truncated_tropical(1)),
        ("ntrunc2".to_string(), truncated_tropical(2)),
        ("ntrunc3".to_string(), truncated_tropical(3)),
        ("chain3".to_string(), min_chain(3)),
        ("chain4".to_string(), min_chain(4)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: Vec<FiniteSemiring> = out.iter().map(|(_, f)| f.clone()).collect();
    for n in [3, 4, 4, 5, 5, 5] {
        loop {
            let name = format!("rand{n}{}", (b'a' + out.len() as u8 - 9) as char);
            let Some(f) = random_chain_semiring(&name, n, &mut rng, 10_000) else { continue };
            let dup = seen.iter().any(|g| g.size() == f.size() && tables_equal(g, &f));
            if !dup {
                seen.push(f.clone());
                out.push((name.to_lowercase(), f));
                break;
            }
        }
    }
    out
}

fn tables_equal(a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
    let n = a.size();
    (0..n).all(|i| (0..n).all(|j| a.add(i, j) == b.add(i, j) && a.mul(i, j) == b.mul(i, j)))
}
