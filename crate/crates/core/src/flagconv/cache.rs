//! Content-addressed on-disk cache of oracle products.
//!
//! Files are named by the SHA-256 of `(family, n, total, A, B, primes)` and
//! hold the product together with the raw counts per prime, so any entry can
//! be audited by recounting at a fresh prime.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{convolution_count, Family, OracleProduct, PRIMES};
use crate::error::{Error, Result};
use crate::lattice::Cell;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "QSCHUR_CACHE_DIR";
pub const DEFAULT_DIR: &str = ".cbcache";

#[derive(Clone, Debug, Serialize, Deserialize)]
struct Entry {
    key: String,
    primes: Vec<u64>,
    product: OracleProduct,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

/// Outcome of re-counting a cached product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub file: String,
    pub prime: u64,
    pub checked: usize,
    pub ok: bool,
}

impl Cache {
    pub fn new<P: AsRef<Path>>(dir: P) -> Self {
        Cache { dir: dir.as_ref().to_path_buf() }
    }

    pub fn from_env() -> Self {
        Self::new(std::env::var(CACHE_ENV).unwrap_or_else(|_| DEFAULT_DIR.to_string()))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(family: Family, a: &Cell, b: &Cell, primes: &[u64]) -> String {
        format!("{family:?}|{}|{}|{a}|{b}|{primes:?}", a.n(), a.total())
    }

    fn path(&self, key: &str) -> PathBuf {
        let h = hex::encode(Sha256::digest(key.as_bytes()));
        self.dir.join(format!("{h}.json"))
    }

    pub fn load(&self, family: Family, a: &Cell, b: &Cell, primes: &[u64]) -> Result<Option<OracleProduct>> {
        let key = Self::key(family, a, b, primes);
        let p = self.path(&key);
        if !p.exists() {
            return Ok(None);
        }
        let e: Entry = serde_json::from_str(&fs::read_to_string(&p)?)?;
        if e.key != key {
            return Err(Error::Io(format!("hash collision or corrupt entry in {}", p.display())));
        }
        Ok(Some(e.product))
    }

    pub fn store(&self, product: &OracleProduct, primes: &[u64]) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let key = Self::key(product.family, &product.left, &product.right, primes);
        let p = self.path(&key);
        let e = Entry { key, primes: primes.to_vec(), product: product.clone() };
        let tmp = p.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&e)?)?;
        fs::rename(&tmp, &p)?;
        Ok(p)
    }

    pub fn entries(&self) -> Result<Vec<PathBuf>> {
        if !self.dir.exists() {
            return Ok(Vec::new());
        }
        let mut out: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Recount the entry selected by `pick` (an index reduced modulo the
    /// number of entries) at the smallest prime not used for its fit.
    pub fn verify(&self, pick: u64) -> Result<Option<Audit>> {
        let files = self.entries()?;
        if files.is_empty() {
            return Ok(None);
        }
        let file = &files[(pick % files.len() as u64) as usize];
        let e: Entry = serde_json::from_str(&fs::read_to_string(file)?)?;
        let fresh = PRIMES
            .iter()
            .chain([29u64, 31, 37].iter())
            .copied()
            .find(|p| !e.primes.contains(p))
            .unwrap_or(29);
        let fam = e.product.family;
        let mut ok = true;
        for (c, sp) in &e.product.terms {
            let n = convolution_count(fam, &e.product.left, &e.product.right, c, fresh)?;
            ok &= sp.eval(fresh) == n.into();
        }
        Ok(Some(Audit {
            file: file.display().to_string(),
            prime: fresh,
            checked: e.product.terms.len(),
            ok,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagconv::oracle_product;

    #[test]
    fn store_load_verify() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path());
        let a = Cell::rows([[0, 1], [0, 1]]);
        let b = Cell::rows([[0, 0], [1, 1]]);
        let primes = [3, 5, 7, 11, 13];
        let p = oracle_product(Family::A, &a, &b, &primes).unwrap();
        c.store(&p, &primes).unwrap();
        assert_eq!(c.load(Family::A, &a, &b, &primes).unwrap().unwrap(), p);
        assert!(c.load(Family::A, &b, &a, &primes).unwrap().is_none());
        let audit = c.verify(0).unwrap().unwrap();
        assert!(audit.ok);
        assert_eq!(audit.prime, 17);
    }
}
