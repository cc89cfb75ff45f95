use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::int::IntPoly;

/// Dense polynomial with exact rational coefficients. `Ratio` keeps every
/// entry in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::new(vec![BigRational::one()])
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
            if let Some(d) = other.coeffs.get(k) {
                c += d;
            }
            out.push(c);
        }
        RatPoly::new(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> RatPoly {
        if s.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Split into an integer polynomial and a common denominator:
    /// `self == int_part / denom`.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            denom = num_integer::lcm(denom, c.denom().clone());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        (IntPoly::new(ints), denom)
    }

    /// Product; denominators are cleared so the bulk of the work runs in
    /// integer (Karatsuba-capable) arithmetic.
    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let (a, da) = self.clear_denominators();
        let (b, db) = other.clear_denominators();
        let prod = a.mul(&b);
        let denom = da * db;
        RatPoly::new(
            prod.coeffs()
                .iter()
                .map(|c| BigRational::new(c.clone(), denom.clone()))
                .collect(),
        )
    }

    /// Euclidean division: `self = q*g + r` with `deg r < deg g`.
    pub fn div_rem(&self, g: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dg = g.coeffs.len() - 1;
        let lead = g.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dg)];
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        while rem.len() > dg {
            let k = rem.len() - 1 - dg;
            let qk = rem.last().unwrap() / lead;
            for (i, gc) in g.coeffs.iter().enumerate() {
                let t = &qk * gc;
                rem[k + i] -= t;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            q[k] = qk;
        }
        Ok((RatPoly::new(q), RatPoly::new(rem)))
    }

    pub fn div_exact(&self, g: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(g)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    pub fn rem(&self, g: &RatPoly) -> Result<RatPoly> {
        Ok(self.div_rem(g)?.1)
    }

    pub fn inner_product(&self, other: &RatPoly) -> BigRational {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn shift(&self, l: usize) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); l];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    pub fn cyclic_reduce(&self, n: u64) -> RatPoly {
        let n = n as usize;
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut out = vec![BigRational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % n] += c;
        }
        RatPoly::new(out)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }
}

/// Extended Euclidean algorithm over ℚ[X]: returns `(g, s, t)` with
/// `s*a + t*b == g` and `g` the monic gcd.
pub fn extended_gcd(a: &RatPoly, b: &RatPoly) -> Result<(RatPoly, RatPoly, RatPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = RatPoly::one();
    let mut s1 = RatPoly::zero();
    let mut t0 = RatPoly::zero();
    let mut t1 = RatPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let lead = r0.leading().unwrap().clone();
    let inv = lead.recip();
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

impl std::fmt::Display for RatPoly {
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
            let mag = c.abs();
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
                    write!(f, "{mag}·")?;
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
