//! Homology source backed by an in-memory memo and an optional on-disk
//! store keyed by a content hash of `(N, d, k)` and the code version.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use packsyz_core::characters::CharacterTables;
use packsyz_core::equivariant::EquivariantComplex;
use packsyz_core::syzygy::{compute_homology, HomologySource};
use packsyz_core::{Decomposition, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::json::{self, Term};

/// Bumped whenever cached decompositions could change meaning.
pub const CACHE_VERSION: &str = concat!("packsyz-homology/", env!("CARGO_PKG_VERSION"), "/1");

/// `(N, d, k)`.
pub type Key = (Vec<u32>, Vec<u32>, i32);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    version: String,
    #[serde(rename = "N")]
    sizes: Vec<u32>,
    d: Vec<u32>,
    k: i32,
    entries: Vec<Term>,
}

/// Directory of `<sha256>.json` files, one per `(N, d, k)`.
#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(sizes: &[u32], d: &[u32], k: i32) -> String {
        let mut h = Sha256::new();
        h.update(format!("{CACHE_VERSION}|N={sizes:?}|d={d:?}|k={k}"));
        hex::encode(h.finalize())
    }

    fn path(&self, sizes: &[u32], d: &[u32], k: i32) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(sizes, d, k)))
    }

    /// A stored decomposition; unreadable or mismatched files count as
    /// misses.
    pub fn load(&self, sizes: &[u32], d: &[u32], k: i32) -> Option<Decomposition> {
        let text = fs::read_to_string(self.path(sizes, d, k)).ok()?;
        let rec: Record = serde_json::from_str(&text).ok()?;
        if rec.version != CACHE_VERSION || rec.sizes != sizes || rec.d != d || rec.k != k {
            return None;
        }
        json::decomposition(sizes, &rec.entries).ok()
    }

    /// Writes through a temporary file so readers never see partial data.
    pub fn store(&self, sizes: &[u32], d: &[u32], k: i32, dec: &Decomposition) -> std::io::Result<()> {
        let rec = Record {
            version: CACHE_VERSION.into(),
            sizes: sizes.to_vec(),
            d: d.to_vec(),
            k,
            entries: json::terms(dec),
        };
        let path = self.path(sizes, d, k);
        let mut tmp = path.clone();
        tmp.set_extension(format!("tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(serde_json::to_string(&rec)?.as_bytes())?;
        f.sync_all()?;
        fs::rename(tmp, path)
    }
}

/// Memoized, optionally persistent [`HomologySource`] that can fill
/// itself in parallel.
pub struct Engine {
    disk: Option<DiskCache>,
    max_simplices: u64,
    threads: usize,
    memo: BTreeMap<Key, Decomposition>,
    computed: usize,
}

impl Engine {
    pub fn new(max_simplices: u64, threads: usize, disk: Option<DiskCache>) -> Self {
        Engine {
            disk,
            max_simplices,
            threads,
            memo: BTreeMap::new(),
            computed: 0,
        }
    }

    pub fn from_config(cfg: &Config) -> std::io::Result<Self> {
        let disk = cfg.cache_dir.as_ref().map(DiskCache::open).transpose()?;
        Ok(Self::new(cfg.max_simplices, cfg.threads, disk))
    }

    /// Number of decompositions computed rather than recalled.
    pub fn computed(&self) -> usize {
        self.computed
    }

    pub fn max_simplices(&self) -> u64 {
        self.max_simplices
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    fn recall(&mut self, key: &Key) -> Option<Decomposition> {
        if let Some(d) = self.memo.get(key) {
            return Some(d.clone());
        }
        let d = self.disk.as_ref()?.load(&key.0, &key.1, key.2)?;
        self.memo.insert(key.clone(), d.clone());
        Some(d)
    }

    /// Stores in memory and, best-effort, on disk.
    fn remember(&mut self, key: Key, dec: Decomposition) {
        if let Some(disk) = &self.disk {
            let _ = disk.store(&key.0, &key.1, key.2, &dec);
        }
        self.computed += 1;
        self.memo.insert(key, dec);
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool")
    }

    /// Computes every missing key concurrently.
    pub fn prefetch(&mut self, keys: impl IntoIterator<Item = Key>) -> Result<()> {
        let mut missing: Vec<Key> = keys.into_iter().filter(|k| self.recall(k).is_none()).collect();
        missing.sort();
        missing.dedup();
        if missing.is_empty() {
            return Ok(());
        }
        let cap = self.max_simplices;
        let results: Vec<Result<Decomposition>> = self.pool().install(|| {
            missing
                .par_iter()
                .map(|(n, d, k)| compute_homology(n, d, *k, cap))
                .collect()
        });
        for (key, res) in missing.into_iter().zip(results) {
            self.remember(key, res?);
        }
        Ok(())
    }

    /// `H̃_k(C_N^d)` for `-1 ≤ k ≤ top`, building the complex at most once.
    pub fn all_degrees(&mut self, sizes: &[u32], d: &[u32]) -> Result<Vec<(i32, Decomposition)>> {
        let top = top_dim(sizes, d);
        let keys: Vec<Key> = (-1..=top).map(|k| (sizes.to_vec(), d.to_vec(), k)).collect();
        if keys.iter().all(|k| self.recall(k).is_some()) {
            return Ok(keys.into_iter().map(|k| (k.2, self.memo[&k].clone())).collect());
        }
        let tables = CharacterTables::for_sizes(sizes)?;
        let mut e = EquivariantComplex::build_capped(sizes, d, self.max_simplices)?;
        let mut out = Vec::with_capacity(keys.len());
        for key in keys {
            let dec = match self.recall(&key) {
                Some(dec) => dec,
                None => {
                    let dec = e.homology_decomposition(key.2, &tables)?;
                    self.remember(key.clone(), dec.clone());
                    dec
                }
            };
            out.push((key.2, dec));
        }
        Ok(out)
    }
}

/// `min ⌊N_i / d_i⌋ - 1`, the top dimension of `C_N^d`.
pub fn top_dim(sizes: &[u32], d: &[u32]) -> i32 {
    sizes
        .iter()
        .zip(d)
        .map(|(&n, &di)| (n / di.max(1)) as i32)
        .min()
        .unwrap_or(0)
        - 1
}

impl HomologySource for Engine {
    fn decomposition(&mut self, sizes: &[u32], subset_sizes: &[u32], k: i32) -> Result<Decomposition> {
        let key = (sizes.to_vec(), subset_sizes.to_vec(), k);
        if let Some(d) = self.recall(&key) {
            return Ok(d);
        }
        let d = compute_homology(sizes, subset_sizes, k, self.max_simplices)?;
        self.remember(key, d.clone());
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_stable_and_distinct() {
        let a = DiskCache::key(&[3, 3], &[1, 1], 1);
        assert_eq!(a.len(), 64);
        assert_eq!(a, DiskCache::key(&[3, 3], &[1, 1], 1));
        assert_ne!(a, DiskCache::key(&[3, 3], &[1, 1], 0));
        assert_ne!(DiskCache::key(&[3, 31], &[1], 1), DiskCache::key(&[33, 1], &[1], 1));
    }

    #[test]
    fn disk_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::open(dir.path()).unwrap();
        let dec = compute_homology(&[3, 3], &[1, 1], 1, 1_000).unwrap();
        assert!(cache.load(&[3, 3], &[1, 1], 1).is_none());
        cache.store(&[3, 3], &[1, 1], 1, &dec).unwrap();
        assert_eq!(cache.load(&[3, 3], &[1, 1], 1), Some(dec));
        fs::write(cache.path(&[3, 3], &[1, 1], 1), "{").unwrap();
        assert!(cache.load(&[3, 3], &[1, 1], 1).is_none());
    }

    #[test]
    fn engine_hits_the_disk() {
        let dir = tempfile::tempdir().unwrap();
        let mut first = Engine::new(10_000, 2, Some(DiskCache::open(dir.path()).unwrap()));
        let a = first.all_degrees(&[3, 3], &[1, 1]).unwrap();
        assert_eq!(first.computed(), 4);
        let mut second = Engine::new(10_000, 2, Some(DiskCache::open(dir.path()).unwrap()));
        assert_eq!(second.all_degrees(&[3, 3], &[1, 1]).unwrap(), a);
        assert_eq!(second.computed(), 0);
    }

    #[test]
    fn prefetch_matches_direct() {
        let mut e = Engine::new(100_000, 3, None);
        let keys: Vec<Key> = (2..=5).map(|n| (vec![n, 3], vec![1, 1], 1)).collect();
        e.prefetch(keys.clone()).unwrap();
        assert_eq!(e.computed(), 4);
        for (n, d, k) in keys {
            assert_eq!(e.decomposition(&n, &d, k).unwrap(), compute_homology(&n, &d, k, 100_000).unwrap());
        }
        assert_eq!(e.computed(), 4);
    }

    #[test]
    fn caps_propagate() {
        let mut e = Engine::new(10, 1, None);
        assert!(matches!(
            e.decomposition(&[4, 4], &[1, 1], 1),
            Err(packsyz_core::Error::ResourceCap { .. })
        ));
    }
}
