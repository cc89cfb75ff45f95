//! Cyclotomic polynomials Φ_n, inverse cyclotomic polynomials Ψ_n, and the
//! cofactors Ψ_{n,d} = (X^n - 1)/Φ_d, computed by multiple mutually
//! checking algorithms with an optional on-disk Φ cache.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{divisors, mobius, radical, totient};
use crate::polyring::{IntPoly, RatPoly, Sign};

/// Strategy for computing Φ_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    /// Φ_n = (X^n - 1) / ∏_{d|n, d<n} Φ_d, cache-backed. Quadratic but
    /// definitionally transparent; kept as the independent test oracle.
    Cascade,
    /// Φ_n = ∏_{d|n} (X^{n/d} - 1)^{μ(d)} via binomial multiply/divide.
    Mobius,
    /// Φ_n(X) = Φ_{rad(n)}(X^{n/rad(n)}), squarefree core by Möbius.
    Radical,
    /// Radical when n is not squarefree, Möbius otherwise.
    #[default]
    Auto,
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cascade" => Ok(Algorithm::Cascade),
            "mobius" => Ok(Algorithm::Mobius),
            "radical" => Ok(Algorithm::Radical),
            "auto" => Ok(Algorithm::Auto),
            other => Err(format!("unknown algorithm '{other}'")),
        }
    }
}

/// In-memory Φ cache with optional line-oriented backing file
/// (`n: c0,c1,...` per record, coefficients from degree 0 upward).
///
/// Reads may happen concurrently; writes are serialized by the interior
/// lock. Idempotents are memoized here in memory only, the disk format
/// stays integer-only.
#[derive(Debug, Default)]
pub struct CycloCache {
    phi_entries: RwLock<HashMap<u64, IntPoly>>,
    idempotents: RwLock<HashMap<(u64, u64), RatPoly>>,
    path: Option<PathBuf>,
}

impl CycloCache {
    pub fn new() -> Self {
        CycloCache::default()
    }

    /// Open a cache backed by `path`, loading existing records. Each loaded
    /// entry is validated against deg Φ_n = φ(n) and monicity.
    pub fn with_file(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(std::fs::File::open(&path)?);
            for line in reader.lines() {
                let line = line?;
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let (n, poly) = parse_record(line)?;
                validate_phi(n, &poly)?;
                entries.insert(n, poly);
            }
        }
        Ok(CycloCache {
            phi_entries: RwLock::new(entries),
            idempotents: RwLock::new(HashMap::new()),
            path: Some(path),
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, n: u64) -> Option<IntPoly> {
        self.phi_entries.read().unwrap().get(&n).cloned()
    }

    pub fn insert(&self, n: u64, poly: IntPoly) {
        self.phi_entries.write().unwrap().insert(n, poly);
    }

    pub fn len(&self) -> usize {
        self.phi_entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi_entries.read().unwrap().is_empty()
    }

    pub(crate) fn get_idempotent(&self, n: u64, d: u64) -> Option<RatPoly> {
        self.idempotents.read().unwrap().get(&(n, d)).cloned()
    }

    pub(crate) fn insert_idempotent(&self, n: u64, d: u64, e: RatPoly) {
        self.idempotents.write().unwrap().insert((n, d), e);
    }

    /// Persist all Φ entries to the backing file, keys ascending.
    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        let entries = self.phi_entries.read().unwrap();
        let mut keys: Vec<u64> = entries.keys().copied().collect();
        keys.sort_unstable();
        let mut w = BufWriter::new(std::fs::File::create(path)?);
        for n in keys {
            let poly = &entries[&n];
            let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(w, "{n}: {}", coeffs.join(","))?;
        }
        w.flush()?;
        Ok(())
    }
}

fn parse_record(line: &str) -> Result<(u64, IntPoly)> {
    let (key, rest) = line
        .split_once(':')
        .ok_or_else(|| Error::CacheFormat(format!("missing ':' in '{line}'")))?;
    let n: u64 = key
        .trim()
        .parse()
        .map_err(|_| Error::CacheFormat(format!("bad key '{key}'")))?;
    if n == 0 {
        return Err(Error::CacheFormat("key must be positive".into()));
    }
    let mut coeffs = Vec::new();
    for tok in rest.trim().split(',') {
        let c = BigInt::from_str(tok.trim())
            .map_err(|_| Error::CacheFormat(format!("bad coefficient '{tok}'")))?;
        coeffs.push(c);
    }
    Ok((n, IntPoly::new(coeffs)))
}

fn validate_phi(n: u64, poly: &IntPoly) -> Result<()> {
    if poly.degree() != Some(totient(n)? as usize) {
        return Err(Error::CacheInvariant {
            n,
            reason: "degree != totient(n)".into(),
        });
    }
    if !poly.leading().unwrap().is_one() {
        return Err(Error::CacheInvariant {
            n,
            reason: "not monic".into(),
        });
    }
    Ok(())
}

/// Compute the n-th cyclotomic polynomial.
pub fn phi(n: u64, algorithm: Algorithm, cache: &CycloCache) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    if let Some(p) = cache.get(n) {
        return Ok(p);
    }
    let result = match algorithm {
        Algorithm::Cascade => phi_cascade(n, cache)?,
        Algorithm::Mobius => phi_mobius(n)?,
        Algorithm::Radical => phi_radical(n)?,
        Algorithm::Auto => {
            if radical(n)? < n {
                phi_radical(n)?
            } else {
                phi_mobius(n)?
            }
        }
    };
    cache.insert(n, result.clone());
    Ok(result)
}

fn phi_cascade(n: u64, cache: &CycloCache) -> Result<IntPoly> {
    if n == 1 {
        return Ok(IntPoly::from_i64s(&[-1, 1]));
    }
    // Accumulate Psi_n = prod of Phi_d over proper divisors, then divide.
    let mut cofactor = IntPoly::one();
    for d in divisors(n)? {
        if d == n {
            continue;
        }
        let phi_d = match cache.get(d) {
            Some(p) => p,
            None => {
                let p = phi_cascade(d, cache)?;
                cache.insert(d, p.clone());
                p
            }
        };
        cofactor = cofactor.mul(&phi_d);
    }
    IntPoly::x_pow_minus_one(n).div_exact(&cofactor)
}

fn phi_mobius(n: u64) -> Result<IntPoly> {
    let mut p = IntPoly::one();
    let divs = divisors(n)?;
    // All multiplications first so every division stays exact in-ring.
    for &d in &divs {
        if mobius(d)? == 1 {
            p = p.mul_binomial(n / d, Sign::Minus);
        }
    }
    for &d in &divs {
        if mobius(d)? == -1 {
            p = p.div_binomial(n / d, Sign::Minus)?;
        }
    }
    Ok(p)
}

fn phi_radical(n: u64) -> Result<IntPoly> {
    let r = radical(n)?;
    Ok(phi_mobius(r)?.inflate(n / r))
}

/// The n-th inverse cyclotomic polynomial Ψ_n = (X^n - 1)/Φ_n.
pub fn psi(n: u64, cache: &CycloCache) -> Result<IntPoly> {
    let phi_n = phi(n, Algorithm::Auto, cache)?;
    IntPoly::x_pow_minus_one(n).div_exact(&phi_n)
}

/// Ψ_{n,d} = (X^n - 1)/Φ_d = (1 + X^d + ... + X^{n-d})·Ψ_d for d | n.
/// Both formulas are evaluated and asserted equal.
pub fn psi_nd(n: u64, d: u64, cache: &CycloCache) -> Result<IntPoly> {
    if d == 0 || n == 0 {
        return Err(Error::NonPositive);
    }
    if n % d != 0 {
        return Err(Error::NotADivisor { d, n });
    }
    let phi_d = phi(d, Algorithm::Auto, cache)?;
    let quotient_form = IntPoly::x_pow_minus_one(n).div_exact(&phi_d)?;

    let reps = (n / d) as usize;
    let mut geom = vec![BigInt::zero(); (reps - 1) * d as usize + 1];
    for j in 0..reps {
        geom[j * d as usize] = BigInt::one();
    }
    let product_form = IntPoly::new(geom).mul(&psi(d, cache)?);

    assert_eq!(
        quotient_form, product_form,
        "the two defining formulas for psi_nd({n},{d}) disagree"
    );
    Ok(quotient_form)
}

/// Coefficient statistics of a polynomial: degree, height, sparsity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffStats {
    pub n: u64,
    /// `None` for the zero polynomial.
    pub degree: Option<usize>,
    /// Max absolute coefficient, decimal string.
    pub height: String,
    pub nonzero_terms: usize,
    /// Coefficients from degree 0 upward, decimal strings.
    pub coefficients: Vec<String>,
}

pub fn stats(f: &IntPoly, n: u64) -> CoeffStats {
    CoeffStats {
        n,
        degree: f.degree(),
        height: f.height().to_string(),
        nonzero_terms: f.nonzero_terms(),
        coefficients: f.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

/// Height helper for tests and the CLI.
pub fn height_of(f: &IntPoly) -> BigUint {
    f.height()
}
