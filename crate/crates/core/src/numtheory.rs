//! Integer arithmetic functions: factorization, divisor enumeration,
//! Möbius μ, Euler totient φ, and the radical.
//!
//! Factorization is plain trial division with a 2/3/5 wheel, which is
//! entirely adequate for the desk-scale inputs this crate targets
//! (n up to about 10^6).

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Recompose the integer from its factor list.
    pub fn recompose(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
            .max(1)
    }
}

// Increments cycling through the gaps of the mod-30 wheel after 7.
const WHEEL: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

/// Factor `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut m = n;
    let mut factors = Vec::new();
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    }
    let mut p = 7u64;
    let mut wheel = WHEEL.iter().cycle();
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += wheel.next().unwrap();
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// All positive divisors of `n`, strictly increasing.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    // Mixed-radix expansion over the exponent vector.
    let mut divs = vec![1u64];
    for &(p, e) in &f.factors {
        let prev = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Möbius function: 0 for non-squarefree n, else (-1)^(number of primes).
pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Euler totient φ(n).
pub fn totient(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let mut t = n;
    for &(p, _) in &f.factors {
        t = t / p * (p - 1);
    }
    Ok(t)
}

/// Product of the distinct primes dividing n; radical(1) = 1.
pub fn radical(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors.iter().map(|&(p, _)| p).product::<u64>().max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize(1).unwrap().factors, vec![]);
        assert_eq!(factorize(12).unwrap().factors, vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(105).unwrap().factors, vec![(3, 1), (5, 1), (7, 1)]);
        assert!(matches!(factorize(0), Err(Error::NonPositive)));
    }

    #[test]
    fn factorize_invariants_and_roundtrip() {
        for n in 1..=10_000u64 {
            let f = factorize(n).unwrap();
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors.iter().all(|&(_, e)| e >= 1));
            assert_eq!(f.recompose(), n);
            assert_eq!(n == 1, f.factors.is_empty());
        }
    }

    #[test]
    fn divisors_basics() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn divisors_complete_and_sorted() {
        for n in 1..=2_000u64 {
            let divs = divisors(n).unwrap();
            assert_eq!(divs[0], 1);
            assert_eq!(*divs.last().unwrap(), n);
            assert!(divs.windows(2).all(|w| w[0] < w[1]));
            assert!(divs.iter().all(|&d| n % d == 0));
            let count = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(divs.len(), count);
        }
    }

    #[test]
    fn mobius_basics() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(4).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
    }

    #[test]
    fn totient_basics() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(6).unwrap(), 2);
        assert_eq!(totient(12).unwrap(), 4);
    }

    #[test]
    fn radical_basics() {
        assert_eq!(radical(1).unwrap(), 1);
        assert_eq!(radical(12).unwrap(), 6);
        assert_eq!(radical(105).unwrap(), 105);
    }

    #[test]
    fn totient_sums_to_n() {
        for n in 1..=10_000u64 {
            let s: u64 = divisors(n).unwrap().iter().map(|&d| totient(d).unwrap()).sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn mobius_sums() {
        for n in 1..=5_000u64 {
            let s: i64 = divisors(n)
                .unwrap()
                .iter()
                .map(|&d| mobius(d).unwrap() as i64)
                .sum();
            assert_eq!(s, if n == 1 { 1 } else { 0 });
        }
    }
}
