//! The decomposition of ℚ[X]/(Xⁿ−1) into its simple components
//! ℚ[X]/Φ_d, the orthogonality of the component bases under the
//! coefficient inner product, and the alternating pairing on ℚ[G]⊗V
//! that underlies it. Everything here is exact; violations are data,
//! never panics.

pub mod linalg;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cyclo::{phi, psi_nd, Algorithm, CycloCache};
use crate::error::{Error, Result};
use crate::numtheory::{divisors, totient};
use crate::polyring::{extended_gcd, IntPoly, RatPoly};

/// The φ(d) shifted cofactors X^l·Ψ_{n,d} spanning the d-component of
/// ℚ[X]/(Xⁿ−1).
#[derive(Debug, Clone)]
pub struct ComponentBasis {
    pub n: u64,
    pub d: u64,
    pub basis: Vec<IntPoly>,
}

/// One nonzero inner product that the orthogonality relation forbids.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Violation {
    pub d1: u64,
    pub l1: u64,
    pub d2: u64,
    pub l2: u64,
    /// Decimal string; offending inner product value.
    pub value: String,
}

/// Full n×n Gram matrix of the combined component bases.
#[derive(Debug, Clone)]
pub struct GramReport {
    pub n: u64,
    /// Flat (d, l) index: divisors ascending, then shifts ascending.
    pub ordering: Vec<(u64, u64)>,
    pub matrix: Vec<Vec<BigInt>>,
    pub block_diagonal: bool,
    pub violations: Vec<Violation>,
}

/// Machine-readable record of an exhaustive orthogonality check for one n.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationCertificate {
    pub n: u64,
    pub checks_performed: u64,
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub lemma_checked: bool,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// Element f₁⊗v₁ + f₂⊗v₂ of ℚ[G]⊗V, with G cyclic of order n.
/// Construction cyclically reduces both polynomials so the pairing is
/// well-defined on representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    p1: IntPoly,
    p2: IntPoly,
    n: u64,
}

impl TensorElement {
    pub fn new(p1: IntPoly, p2: IntPoly, n: u64) -> Self {
        TensorElement {
            p1: p1.cyclic_reduce(n),
            p2: p2.cyclic_reduce(n),
            n,
        }
    }

    pub fn p1(&self) -> &IntPoly {
        &self.p1
    }

    pub fn p2(&self) -> &IntPoly {
        &self.p2
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Action of the fixed generator: simultaneous multiplication by X.
    pub fn cyclic_shift(&self) -> TensorElement {
        TensorElement::new(self.p1.shift(1), self.p2.shift(1), self.n)
    }
}

/// The alternating pairing on ℚ[G]⊗V extending ⟨av₁+bv₂, cv₁+dv₂⟩ = ad−bc:
/// Σ_k (a.p1[k]·b.p2[k] − a.p2[k]·b.p1[k]).
pub fn tensor_pair(a: &TensorElement, b: &TensorElement) -> Result<BigInt> {
    if a.n != b.n {
        return Err(Error::OrderMismatch(a.n, b.n));
    }
    Ok(a.p1.inner_product(&b.p2) - a.p2.inner_product(&b.p1))
}

/// Shifted cofactors without the (costly) verification pass; used by the
/// bulk verifiers.
fn shifted_cofactors(n: u64, d: u64, cache: &CycloCache) -> Result<Vec<IntPoly>> {
    let base = psi_nd(n, d, cache)?;
    let count = totient(d)? as usize;
    Ok((0..count).map(|l| base.shift(l)).collect())
}

/// Build the basis of the d-component and verify its invariants:
/// expected degrees, linear independence over ℚ, and X-stability.
pub fn component_basis(n: u64, d: u64, cache: &CycloCache) -> Result<ComponentBasis> {
    let basis = shifted_cofactors(n, d, cache)?;
    let phi_d = totient(d)? as usize;
    let cofactor_deg = (n - totient(d)?) as usize;
    for (l, b) in basis.iter().enumerate() {
        debug_assert_eq!(b.degree(), Some(cofactor_deg + l));
    }
    // linear independence: rank of the coefficient matrix equals phi(d)
    let rows: Vec<Vec<BigInt>> = basis.iter().map(|b| coeff_row(b, n as usize)).collect();
    if linalg::rank(rows.clone()) != phi_d {
        return Err(Error::Invariant(format!(
            "component basis for n={n}, d={d} is linearly dependent"
        )));
    }
    // X-stability: X * (last entry) reduced mod X^n - 1 stays in the span
    let rotated = basis.last().unwrap().shift(1).cyclic_reduce(n);
    let mut augmented = rows;
    augmented.push(coeff_row(&rotated, n as usize));
    if linalg::rank(augmented) != phi_d {
        return Err(Error::Invariant(format!(
            "component for n={n}, d={d} is not X-stable"
        )));
    }
    Ok(ComponentBasis { n, d, basis })
}

fn coeff_row(p: &IntPoly, width: usize) -> Vec<BigInt> {
    (0..width).map(|k| p.coeff(k)).collect()
}

/// ⟨X^{l1}f, X^{l2}g⟩ depends only on the lag l1 − l2:
/// Σ_j f[j]·g[j + l1 − l2].
fn cross_correlation(f: &IntPoly, g: &IntPoly, lag: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for (j, a) in f.coeffs().iter().enumerate() {
        let idx = j as i64 + lag;
        if idx < 0 {
            continue;
        }
        if let Some(b) = g.coeffs().get(idx as usize) {
            acc += a * b;
        }
    }
    acc
}

/// Flat basis ordering: divisors ascending, shifts ascending.
pub fn basis_ordering(n: u64) -> Result<Vec<(u64, u64)>> {
    let mut out = Vec::with_capacity(n as usize);
    for d in divisors(n)? {
        for l in 0..totient(d)? {
            out.push((d, l));
        }
    }
    debug_assert_eq!(out.len(), n as usize);
    Ok(out)
}

/// Full Gram matrix of all X^l·Ψ_{n,d} under the coefficient inner
/// product, with every off-block nonzero entry recorded as a violation.
pub fn gram_matrix(n: u64, cache: &CycloCache) -> Result<GramReport> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let ordering = basis_ordering(n)?;
    let divs = divisors(n)?;
    let mut cofactors = HashMap::new();
    for &d in &divs {
        cofactors.insert(d, psi_nd(n, d, cache)?);
    }
    let size = n as usize;
    let mut matrix = vec![vec![BigInt::zero(); size]; size];
    let mut violations = Vec::new();
    // lag memo keyed by divisor pair
    let mut lags: HashMap<(u64, u64, i64), BigInt> = HashMap::new();
    for (i, &(d1, l1)) in ordering.iter().enumerate() {
        for (j, &(d2, l2)) in ordering.iter().enumerate().skip(i) {
            let lag = l1 as i64 - l2 as i64;
            let value = lags
                .entry((d1, d2, lag))
                .or_insert_with(|| cross_correlation(&cofactors[&d1], &cofactors[&d2], lag))
                .clone();
            if d1 != d2 && !value.is_zero() {
                violations.push(Violation {
                    d1,
                    l1,
                    d2,
                    l2,
                    value: value.to_string(),
                });
            }
            matrix[j][i] = value.clone();
            matrix[i][j] = value;
        }
    }
    Ok(GramReport {
        n,
        ordering,
        block_diagonal: violations.is_empty(),
        matrix,
        violations,
    })
}

/// Closed-form count of inner products the exhaustive check performs:
/// Σ_{d1<d2 | n} φ(d1)·φ(d2).
pub fn expected_check_count(n: u64) -> Result<u64> {
    let divs = divisors(n)?;
    let tot: Vec<u64> = divs.iter().map(|&d| totient(d)).collect::<Result<_>>()?;
    let mut count = 0;
    for i in 0..divs.len() {
        for j in i + 1..divs.len() {
            count += tot[i] * tot[j];
        }
    }
    Ok(count)
}

/// Exhaustively check ⟨X^{l1}Ψ_{n,d1}, X^{l2}Ψ_{n,d2}⟩ = 0 over all
/// unordered divisor pairs d1 < d2 and all shifts. Collects every
/// violation; never exits early.
pub fn verify_theorem(n: u64, cache: &CycloCache) -> Result<VerificationCertificate> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let divs = divisors(n)?;
    let mut cofactors = HashMap::new();
    for &d in &divs {
        cofactors.insert(d, psi_nd(n, d, cache)?);
    }
    let mut checks: u64 = 0;
    let mut violations = Vec::new();
    for (i, &d1) in divs.iter().enumerate() {
        let phi1 = totient(d1)?;
        for &d2 in &divs[i + 1..] {
            let phi2 = totient(d2)?;
            let f = &cofactors[&d1];
            let g = &cofactors[&d2];
            let mut lag_values: HashMap<i64, BigInt> = HashMap::new();
            for l1 in 0..phi1 {
                for l2 in 0..phi2 {
                    let lag = l1 as i64 - l2 as i64;
                    let value = lag_values
                        .entry(lag)
                        .or_insert_with(|| cross_correlation(f, g, lag));
                    checks += 1;
                    if !value.is_zero() {
                        violations.push(Violation {
                            d1,
                            l1,
                            d2,
                            l2,
                            value: value.to_string(),
                        });
                    }
                }
            }
        }
    }
    debug_assert_eq!(checks, expected_check_count(n)?);
    Ok(VerificationCertificate {
        n,
        checks_performed: checks,
        pass: violations.is_empty(),
        violations,
        lemma_checked: false,
        version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: None,
    })
}

/// Fast boolean scan with early exit, for bulk ranges.
pub fn theorem_holds(n: u64, cache: &CycloCache) -> Result<bool> {
    let divs = divisors(n)?;
    let mut cofactors = HashMap::new();
    for &d in &divs {
        cofactors.insert(d, psi_nd(n, d, cache)?);
    }
    for (i, &d1) in divs.iter().enumerate() {
        let phi1 = totient(d1)? as i64;
        for &d2 in &divs[i + 1..] {
            let phi2 = totient(d2)? as i64;
            for lag in (1 - phi2)..phi1 {
                if !cross_correlation(&cofactors[&d1], &cofactors[&d2], lag).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// True iff the coefficients of Ψ_{n,d} are those of Ψ_d repeated n/d
/// times: coeff of X^{jd+r} in Ψ_{n,d} equals coeff of X^r in Ψ_d.
pub fn repetition_check(n: u64, d: u64, cache: &CycloCache) -> Result<bool> {
    if d == 0 || n == 0 {
        return Err(Error::NonPositive);
    }
    if n % d != 0 {
        return Err(Error::NotADivisor { d, n });
    }
    let big = psi_nd(n, d, cache)?;
    let small = psi_nd(d, d, cache)?;
    for r in 0..d {
        let expected = small.coeff(r as usize);
        for j in 0..n / d {
            if big.coeff((j * d + r) as usize) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// CRT projector e_d onto the d-component: e_d ≡ 1 mod Φ_d and
/// e_d ≡ 0 mod Φ_{d'} for every other divisor d'. Memoized in the cache.
pub fn idempotent(n: u64, d: u64, cache: &CycloCache) -> Result<RatPoly> {
    if d == 0 || n == 0 {
        return Err(Error::NonPositive);
    }
    if n % d != 0 {
        return Err(Error::NotADivisor { d, n });
    }
    if let Some(e) = cache.get_idempotent(n, d) {
        return Ok(e);
    }
    let phi_d = phi(d, Algorithm::Auto, cache)?.to_rat();
    let cofactor = psi_nd(n, d, cache)?.to_rat();
    // 1 = t*Phi_d + s*Psi_{n,d}, so s*Psi_{n,d} is 1 mod Phi_d and
    // divisible by every other Phi_{d'}.
    let (g, _t, s) = extended_gcd(&phi_d, &cofactor)?;
    debug_assert_eq!(g, RatPoly::one());
    let e = cofactor.mul(&s).cyclic_reduce(n);
    cache.insert_idempotent(n, d, e.clone());
    Ok(e)
}

/// Project f onto every component: f_d = f·e_d mod Xⁿ−1.
pub fn decompose(n: u64, f: &RatPoly, cache: &CycloCache) -> Result<BTreeMap<u64, RatPoly>> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let reduced = f.cyclic_reduce(n);
    let mut out = BTreeMap::new();
    for d in divisors(n)? {
        let e = idempotent(n, d, cache)?;
        out.insert(d, reduced.mul(&e).cyclic_reduce(n));
    }
    Ok(out)
}

/// Check ⟨ℚ[G]^{(d1)}⊗V, ℚ[G]^{(d2)}⊗V⟩ = 0 on basis elements: u over the
/// d1-component basis, w over the d2-component basis, and all four
/// (v_i, v_j) combinations. Bilinearity makes this finite check
/// equivalent to the subspace statement.
pub fn verify_lemma(n: u64, d1: u64, d2: u64, cache: &CycloCache) -> Result<bool> {
    if n == 0 || d1 == 0 || d2 == 0 {
        return Err(Error::NonPositive);
    }
    if n % d1 != 0 {
        return Err(Error::NotADivisor { d: d1, n });
    }
    if n % d2 != 0 {
        return Err(Error::NotADivisor { d: d2, n });
    }
    if d1 == d2 {
        return Err(Error::InvalidArgument(
            "verify_lemma requires distinct divisors".into(),
        ));
    }
    let basis1 = shifted_cofactors(n, d1, cache)?;
    let basis2 = shifted_cofactors(n, d2, cache)?;
    for u in &basis1 {
        for w in &basis2 {
            let embeddings = |p: &IntPoly| {
                [
                    TensorElement::new(p.clone(), IntPoly::zero(), n),
                    TensorElement::new(IntPoly::zero(), p.clone(), n),
                ]
            };
            for a in embeddings(u) {
                for b in embeddings(w) {
                    if !tensor_pair(&a, &b)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Stack all X^l·Ψ_{n,d} coefficient rows in the standard ordering and
/// report whether the determinant is nonzero (i.e. the component bases
/// jointly span ℚ[X]/(Xⁿ−1)).
pub fn full_basis_matrix(n: u64, cache: &CycloCache) -> Result<(Vec<Vec<BigInt>>, bool)> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut rows = Vec::with_capacity(n as usize);
    for d in divisors(n)? {
        for b in shifted_cofactors(n, d, cache)? {
            rows.push(coeff_row(&b, n as usize));
        }
    }
    let det = linalg::determinant(rows.clone());
    Ok((rows, !det.is_zero()))
}

/// Dimension of the orthogonal complement of the d1-component of ℚ[G]⊗V
/// under the alternating pairing, by exact kernel computation. The lemma
/// predicts 2n − 2φ(d1).
pub fn complement_dimension(n: u64, d1: u64, cache: &CycloCache) -> Result<usize> {
    if n % d1 != 0 || d1 == 0 {
        return Err(Error::NotADivisor { d: d1, n });
    }
    let basis = shifted_cofactors(n, d1, cache)?;
    let size = n as usize;
    let mut rows = Vec::with_capacity(2 * basis.len());
    for u in &basis {
        for which in 0..2 {
            let elem = if which == 0 {
                TensorElement::new(u.clone(), IntPoly::zero(), n)
            } else {
                TensorElement::new(IntPoly::zero(), u.clone(), n)
            };
            let mut row = Vec::with_capacity(2 * size);
            for j in 0..2 {
                for k in 0..size {
                    let probe = if j == 0 {
                        TensorElement::new(IntPoly::monomial(k), IntPoly::zero(), n)
                    } else {
                        TensorElement::new(IntPoly::zero(), IntPoly::monomial(k), n)
                    };
                    row.push(tensor_pair(&elem, &probe)?);
                }
            }
            rows.push(row);
        }
    }
    Ok(2 * size - linalg::rank(rows))
}

/// Matrix of the pairing on the 2n-element basis {X^k⊗v₁, X^k⊗v₂};
/// nondegeneracy means nonzero determinant.
pub fn pairing_nondegenerate(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let size = n as usize;
    let elems: Vec<TensorElement> = (0..2 * size)
        .map(|i| {
            let k = i % size;
            if i < size {
                TensorElement::new(IntPoly::monomial(k), IntPoly::zero(), n)
            } else {
                TensorElement::new(IntPoly::zero(), IntPoly::monomial(k), n)
            }
        })
        .collect();
    let mut m = vec![vec![BigInt::zero(); 2 * size]; 2 * size];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            m[i][j] = tensor_pair(a, b)?;
        }
    }
    Ok(!linalg::determinant(m).is_zero())
}
