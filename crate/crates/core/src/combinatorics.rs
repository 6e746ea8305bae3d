//! Stirling and r-Stirling triangles of the second kind, and Eulerian
//! polynomials.
//!
//! Tables grow row by row and are shared behind read-write locks, so any
//! number of threads may query them at once. A row, once written, is never
//! modified.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Rational, UniPoly};

/// Triangle of r-Stirling numbers of the second kind for one fixed `r`:
/// partitions of `{1..n}` into `k` nonempty blocks with `1..r` in distinct
/// blocks. `r = 0` gives the ordinary Stirling numbers.
#[derive(Debug)]
pub struct TriangleCache {
    r: usize,
    // rows[i] holds row n = r + i, entries k = 0..=n.
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl TriangleCache {
    pub fn new(r: usize) -> Self {
        let mut first = vec![BigInt::zero(); r + 1];
        first[r] = BigInt::one();
        TriangleCache {
            r,
            rows: RwLock::new(vec![first]),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Entry `(n, k)`; zero for `k` outside `r..=n`. Rejects `n < r`.
    pub fn get(&self, n: usize, k: i64) -> Result<BigInt> {
        if n < self.r {
            return Err(Error::Domain(format!(
                "r-Stirling number needs n >= r, got n = {n}, r = {}",
                self.r
            )));
        }
        if k < 0 || k as u64 > n as u64 {
            return Ok(BigInt::zero());
        }
        let idx = n - self.r;
        {
            let rows = self.rows.read().expect("triangle lock poisoned");
            if let Some(row) = rows.get(idx) {
                return Ok(row[k as usize].clone());
            }
        }
        let mut rows = self.rows.write().expect("triangle lock poisoned");
        while rows.len() <= idx {
            let prev = rows.last().expect("triangle has a boundary row");
            let n_new = self.r + rows.len();
            let row: Vec<BigInt> = (0..=n_new)
                .map(|k| {
                    let stay = prev.get(k).map(|v| v * BigInt::from(k)).unwrap_or_default();
                    let join = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        BigInt::zero()
                    };
                    stay + join
                })
                .collect();
            rows.push(row);
        }
        Ok(rows[idx][k as usize].clone())
    }

    /// Number of rows currently materialized.
    pub fn rows_computed(&self) -> usize {
        self.rows.read().expect("triangle lock poisoned").len()
    }
}

/// Eulerian numbers `<n, j>` and the polynomials
/// `A_n(t) = Σ_j <n, j> t^(j+1)` (`A_0 = 1`).
#[derive(Debug)]
pub struct EulerianTable {
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl Default for EulerianTable {
    fn default() -> Self {
        Self::new()
    }
}

impl EulerianTable {
    pub fn new() -> Self {
        EulerianTable {
            rows: RwLock::new(vec![vec![BigInt::one()]]),
        }
    }

    /// `<n, j>`: permutations of `n` elements with `j` descents.
    pub fn number(&self, n: usize, j: usize) -> BigInt {
        self.row(n).get(j).cloned().unwrap_or_default()
    }

    fn row(&self, n: usize) -> Vec<BigInt> {
        {
            let rows = self.rows.read().expect("eulerian lock poisoned");
            if let Some(row) = rows.get(n) {
                return row.clone();
            }
        }
        let mut rows = self.rows.write().expect("eulerian lock poisoned");
        while rows.len() <= n {
            let m = rows.len();
            let prev = rows.last().expect("eulerian table has row 0");
            // Rows m >= 1 have j in 0..m.
            let row: Vec<BigInt> = (0..m)
                .map(|j| {
                    let same = prev.get(j).cloned().unwrap_or_default() * BigInt::from(j + 1);
                    let shifted = match j {
                        0 => BigInt::zero(),
                        _ => prev[j - 1].clone() * BigInt::from(m - j),
                    };
                    same + shifted
                })
                .collect();
            rows.push(row);
        }
        rows[n].clone()
    }

    pub fn poly(&self, n: usize) -> UniPoly {
        if n == 0 {
            return UniPoly::one();
        }
        let row = self.row(n);
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(row.into_iter().map(Rational::from_integer));
        UniPoly::new(coeffs)
    }
}

fn stirling_table() -> &'static TriangleCache {
    static TABLE: OnceLock<TriangleCache> = OnceLock::new();
    TABLE.get_or_init(|| TriangleCache::new(0))
}

fn r_stirling_table(r: usize) -> Arc<TriangleCache> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<TriangleCache>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().expect("r-stirling lock poisoned").get(&r) {
        return Arc::clone(t);
    }
    let mut w = tables.write().expect("r-stirling lock poisoned");
    Arc::clone(
        w.entry(r)
            .or_insert_with(|| Arc::new(TriangleCache::new(r))),
    )
}

fn eulerian_table() -> &'static EulerianTable {
    static TABLE: OnceLock<EulerianTable> = OnceLock::new();
    TABLE.get_or_init(EulerianTable::new)
}

/// Stirling number of the second kind `S(n, k)`; zero outside `0..=n`.
pub fn stirling2(n: usize, k: i64) -> BigInt {
    stirling_table().get(n, k).expect("r = 0 accepts every n")
}

/// r-Stirling number of the second kind. Fails when `n < r`.
pub fn r_stirling2(n: usize, k: i64, r: usize) -> Result<BigInt> {
    if r == 0 {
        return Ok(stirling2(n, k));
    }
    r_stirling_table(r).get(n, k)
}

/// Eulerian polynomial `A_n`, normalized so that `A_1(t) = t`.
pub fn eulerian_poly(n: usize) -> UniPoly {
    eulerian_table().poly(n)
}
