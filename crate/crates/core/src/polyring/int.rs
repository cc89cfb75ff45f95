use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::rat::RatPoly;

/// Coefficient count at which multiplication switches from schoolbook to
/// Karatsuba. The exact value is non-semantic; both strategies agree.
pub const DEFAULT_KARATSUBA_THRESHOLD: usize = 32;

/// Constant term of the binomial `X^m + 1` / `X^m - 1` used by the
/// linear-time binomial multiply and divide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Dense polynomial with arbitrary-precision integer coefficients,
/// `coeffs[k]` being the coefficient of `X^k`.
///
/// Canonical form: empty for the zero polynomial, otherwise the last
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `X^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(n: u64) -> Self {
        let n = n as usize;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `X^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Largest absolute coefficient value; 0 for the zero polynomial.
    pub fn height(&self) -> BigUint {
        self.coeffs
            .iter()
            .map(|c| c.magnitude().clone())
            .max()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = other.coeffs.get(k) {
                c += d;
            }
            out.push(c);
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact product, dispatching to Karatsuba above the size threshold.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        self.mul_with_threshold(other, DEFAULT_KARATSUBA_THRESHOLD)
    }

    pub fn mul_with_threshold(&self, other: &IntPoly, threshold: usize) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(mul_slices(&self.coeffs, &other.coeffs, threshold.max(1)))
    }

    pub fn mul_schoolbook(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(schoolbook(&self.coeffs, &other.coeffs))
    }

    /// Exact division: returns `q` with `q * g == self`, failing on any
    /// nonzero remainder. An inexact division here always signals an
    /// upstream bug, so the error is never swallowed.
    pub fn div_exact(&self, g: &IntPoly) -> Result<IntPoly> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let df = self.coeffs.len() - 1;
        let dg = g.coeffs.len() - 1;
        if df < dg {
            return Err(Error::InexactDivision);
        }
        let lead = g.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = std::mem::take(&mut rem[k + dg]);
            if top.is_zero() {
                continue;
            }
            let (qk, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, gc) in g.coeffs.iter().enumerate().take(dg) {
                rem[k + i] -= &qk * gc;
            }
            q[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(q))
    }

    /// Multiply by `X^m + 1` or `X^m - 1` in linear time.
    pub fn mul_binomial(&self, m: u64, sign: Sign) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let m = m as usize;
        let c = BigInt::from(sign.unit());
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n + m];
        for (k, a) in self.coeffs.iter().enumerate() {
            out[k] += a * &c;
            out[k + m] += a;
        }
        IntPoly::new(out)
    }

    /// Divide exactly by `X^m + 1` or `X^m - 1` in linear time.
    pub fn div_binomial(&self, m: u64, sign: Sign) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let m = m as usize;
        if m == 0 {
            return Err(Error::DivisionByZero);
        }
        let df = self.coeffs.len() - 1;
        if df < m {
            return Err(Error::InexactDivision);
        }
        let c = BigInt::from(sign.unit());
        // f[k] = q[k-m] + c*q[k]; solve ascending (1/c = c).
        let dq = df - m;
        let mut q = vec![BigInt::zero(); dq + 1];
        for k in 0..=dq {
            let prev = if k >= m { q[k - m].clone() } else { BigInt::zero() };
            q[k] = (&self.coeffs[k] - prev) * &c;
        }
        // Remaining relations have q[k] = 0, so f[k] must equal q[k-m].
        for k in dq + 1..=df {
            let expect = if k >= m { q[k - m].clone() } else { BigInt::zero() };
            if self.coeffs[k] != expect {
                return Err(Error::InexactDivision);
            }
        }
        Ok(IntPoly::new(q))
    }

    /// Coefficient dot product. Shorter operand is implicitly zero-padded.
    pub fn inner_product(&self, other: &IntPoly) -> BigInt {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Multiply by `X^l`.
    pub fn shift(&self, l: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); l];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Reduce modulo `X^n - 1` by folding `X^{n+k}` onto `X^k`.
    pub fn cyclic_reduce(&self, n: u64) -> IntPoly {
        let n = n as usize;
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % n] += c;
        }
        IntPoly::new(out)
    }

    /// Substitute `X -> X^q`, spreading coefficients apart.
    pub fn inflate(&self, q: u64) -> IntPoly {
        let q = q as usize;
        if self.is_zero() || q == 1 {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * q + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * q] = c.clone();
        }
        IntPoly { coeffs: out }
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from_int(self)
    }
}

fn schoolbook(a: &[BigInt], b: &[BigInt], ) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn mul_slices(a: &[BigInt], b: &[BigInt], threshold: usize) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < threshold {
        return schoolbook(a, b);
    }
    let m = a.len().max(b.len()).div_ceil(2);
    let (a0, a1) = a.split_at(m.min(a.len()));
    let (b0, b1) = b.split_at(m.min(b.len()));

    let z0 = mul_slices(a0, b0, threshold);
    let z2 = mul_slices(a1, b1, threshold);
    let asum = add_slices(a0, a1);
    let bsum = add_slices(b0, b1);
    let mut z1 = mul_slices(&asum, &bsum, threshold);
    for (i, c) in z0.iter().enumerate() {
        z1[i] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        z1[i] -= c;
    }

    // the top of z1 can cancel to zero on uneven splits; skip zeros so
    // indices never run past the true product degree
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.into_iter().enumerate() {
        if !c.is_zero() {
            out[i] += c;
        }
    }
    for (i, c) in z1.into_iter().enumerate() {
        if !c.is_zero() {
            out[m + i] += c;
        }
    }
    for (i, c) in z2.into_iter().enumerate() {
        if !c.is_zero() {
            out[2 * m + i] += c;
        }
    }
    out
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let mut c = a.get(k).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = b.get(k) {
                c += d;
            }
            c
        })
        .collect()
}

impl std::fmt::Display for IntPoly {
    /// Descending powers, explicit signs, `X^k` notation.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{k}")?;
                }
            }
        }
        Ok(())
    }
}
