use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use crate::characters::{z_lambda, CharacterTable};
use crate::tableaux::{kostka_number, Partition};
use crate::words::Composition;
use crate::{Error, Result};

/// Environment variable naming the on-disk table cache directory.
pub const CACHE_DIR_ENV: &str = "CYCLESIEVE_CACHE_DIR";

const HEADER: &str = "cyclesieve-tables v1";

/// Kostka matrix, its inverse, the character table and centralizer orders
/// for one degree. Rows and columns follow `Partition::all(n)`.
#[derive(Debug)]
pub struct DegreeTables {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `kostka[i][j] = K_{λ_i μ_j}`.
    pub kostka: Vec<Vec<i64>>,
    pub kostka_inverse: Vec<Vec<i64>>,
    pub characters: Arc<CharacterTable>,
    pub z: Vec<i64>,
    pub conjugate: Vec<usize>,
}

impl DegreeTables {
    fn assemble(degree: usize, kostka: Vec<Vec<i64>>, characters: CharacterTable) -> Self {
        let partitions = Partition::all(degree);
        let index: HashMap<Partition, usize> =
            partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let kostka_inverse = invert_unitriangular(&kostka);
        let z = partitions.iter().map(|p| z_lambda(p) as i64).collect();
        let conjugate = partitions.iter().map(|p| index[&p.conjugate()]).collect();
        DegreeTables {
            degree,
            partitions,
            index,
            kostka,
            kostka_inverse,
            characters: Arc::new(characters),
            z,
            conjugate,
        }
    }

    fn compute(degree: usize) -> Self {
        let partitions = Partition::all(degree);
        let kostka = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| kostka_number(lam, &Composition::new(mu.parts().to_vec())) as i64)
                    .collect()
            })
            .collect();
        DegreeTables::assemble(degree, kostka, CharacterTable::compute(degree))
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }

    fn serialize(&self) -> String {
        let mut out = format!("{HEADER}\ndegree {}\n", self.degree);
        for (name, rows) in [("kostka", &self.kostka), ("chi", &self.characters.values().to_vec())] {
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v != 0 {
                        out.push_str(&format!(
                            "{name} {} {} {v}\n",
                            self.partitions[i].to_bracket_string(),
                            self.partitions[j].to_bracket_string()
                        ));
                    }
                }
            }
        }
        out
    }

    fn parse(degree: usize, text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Cache(msg.to_string());
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return Err(bad("unknown header"));
        }
        if lines.next() != Some(format!("degree {degree}").as_str()) {
            return Err(bad("degree mismatch"));
        }
        let partitions = Partition::all(degree);
        let index: HashMap<Partition, usize> =
            partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let k = partitions.len();
        let mut kostka = vec![vec![0i64; k]; k];
        let mut chi = vec![vec![0i64; k]; k];
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 {
                return Err(bad("malformed line"));
            }
            let row = Partition::parse(fields[1])
                .ok()
                .and_then(|p| index.get(&p).copied())
                .ok_or_else(|| bad("bad row partition"))?;
            let col = Partition::parse(fields[2])
                .ok()
                .and_then(|p| index.get(&p).copied())
                .ok_or_else(|| bad("bad column partition"))?;
            let v: i64 = fields[3].parse().map_err(|_| bad("bad value"))?;
            match fields[0] {
                "kostka" => kostka[row][col] = v,
                "chi" => chi[row][col] = v,
                _ => return Err(bad("unknown table")),
            }
        }
        if (0..k).any(|i| kostka[i][i] != 1) {
            return Err(bad("kostka diagonal"));
        }
        Ok(DegreeTables::assemble(
            degree,
            kostka,
            CharacterTable::from_values(partitions, chi),
        ))
    }
}

fn invert_unitriangular(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = m.len();
    let mut inv = vec![vec![0i64; k]; k];
    for j in 0..k {
        inv[j][j] = 1;
        for i in (0..j).rev() {
            let s: i64 = (i + 1..=j).map(|t| m[i][t] * inv[t][j]).sum();
            inv[i][j] = -s;
        }
    }
    inv
}

fn cache_dir_slot() -> &'static Mutex<Option<PathBuf>> {
    static SLOT: OnceLock<Mutex<Option<PathBuf>>> = OnceLock::new();
    SLOT.get_or_init(|| Mutex::new(std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from)))
}

/// Directs the table cache to `dir`, or disables the on-disk cache.
/// Defaults to the value of [`CACHE_DIR_ENV`].
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir_slot().lock().unwrap() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    cache_dir_slot().lock().unwrap().clone()
}

fn cache_file(dir: &Path, degree: usize) -> PathBuf {
    dir.join(format!("tables-{degree}.txt"))
}

fn load_or_compute(degree: usize) -> DegreeTables {
    let Some(dir) = cache_dir() else {
        return DegreeTables::compute(degree);
    };
    let path = cache_file(&dir, degree);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(t) = DegreeTables::parse(degree, &text) {
            return t;
        }
    }
    let t = DegreeTables::compute(degree);
    if fs::create_dir_all(&dir).is_ok() {
        let _ = fs::write(&path, t.serialize());
    }
    t
}

/// Tables for degree `n`, built once per process.
pub fn degree_tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(load_or_compute(n)))
        .clone()
}
