//! Acceptance suite: one test per release criterion, each printing a
//! single PASS line on success (run with `--nocapture` to see them).
//!
//! Everything here is exact arithmetic; "tolerance" is equality.

use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use cyclorth::cyclo::{phi, psi, Algorithm, CycloCache};
use cyclorth::numtheory::{divisors, totient};
use cyclorth::polyring::{IntPoly, RatPoly};
use cyclorth::structure::{
    complement_dimension, decompose, expected_check_count, full_basis_matrix, gram_matrix,
    idempotent, pairing_nondegenerate, repetition_check, tensor_pair, verify_lemma,
    verify_theorem, TensorElement,
};

/// Small deterministic generator so random corpora are reproducible.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    fn poly(&mut self, max_deg: usize, bound: i64) -> IntPoly {
        let len = (self.next() as usize) % (max_deg + 2);
        let coeffs: Vec<i64> = (0..len).map(|_| self.int(-bound, bound)).collect();
        IntPoly::from_i64s(&coeffs)
    }
}

#[test]
fn criterion_theorem_exhaustive_1_to_300() {
    let cache = CycloCache::new();
    let start = Instant::now();
    let mut total_checks = 0u64;
    let mut expected_total = 0u64;
    for n in 1..=300u64 {
        let cert = verify_theorem(n, &cache).unwrap();
        assert!(cert.pass, "violations at n={n}: {:?}", cert.violations);
        assert_eq!(cert.checks_performed, expected_check_count(n).unwrap());
        total_checks += cert.checks_performed;
        expected_total += expected_check_count(n).unwrap();
    }
    let elapsed = start.elapsed();
    assert_eq!(total_checks, expected_total);
    assert!(
        elapsed.as_secs() < 60,
        "range verification took {elapsed:?}, budget is 60s"
    );
    println!(
        "ACCEPTANCE PASS: theorem exhaustive n=1..300 ({total_checks} checks, {elapsed:?})"
    );
}

#[test]
fn criterion_lemma_verification() {
    let cache = CycloCache::new();
    for n in 1..=60u64 {
        let divs = divisors(n).unwrap();
        for (i, &d1) in divs.iter().enumerate() {
            for &d2 in &divs[i + 1..] {
                assert!(
                    verify_lemma(n, d1, d2, &cache).unwrap(),
                    "lemma fails at n={n}, d1={d1}, d2={d2}"
                );
            }
        }
    }
    for n in 1..=30u64 {
        for d1 in divisors(n).unwrap() {
            let dim = complement_dimension(n, d1, &cache).unwrap() as u64;
            assert_eq!(
                dim,
                2 * n - 2 * totient(d1).unwrap(),
                "complement dimension at n={n}, d1={d1}"
            );
        }
    }
    println!("ACCEPTANCE PASS: lemma on all divisor pairs n<=60, complement dims n<=30");
}

#[test]
fn criterion_cyclotomic_oracle_equivalence() {
    // each algorithm keeps its own cache so the three routes stay independent
    let cascade_cache = CycloCache::new();
    let mobius_cache = CycloCache::new();
    let radical_cache = CycloCache::new();
    for n in 1..=2000u64 {
        let a = phi(n, Algorithm::Cascade, &cascade_cache).unwrap();
        let b = phi(n, Algorithm::Mobius, &mobius_cache).unwrap();
        let c = phi(n, Algorithm::Radical, &radical_cache).unwrap();
        assert_eq!(a, b, "cascade vs mobius mismatch at n={n}");
        assert_eq!(b, c, "mobius vs radical mismatch at n={n}");
    }
    println!("ACCEPTANCE PASS: cascade/mobius/radical identical for n<=2000");
}

#[test]
fn criterion_product_identities() {
    let cache = CycloCache::new();
    for n in 1..=500u64 {
        let mut prod = IntPoly::one();
        for d in divisors(n).unwrap() {
            prod = prod.mul(&phi(d, Algorithm::Auto, &cache).unwrap());
        }
        assert_eq!(prod, IntPoly::x_pow_minus_one(n), "product identity at n={n}");

        let f = phi(n, Algorithm::Auto, &cache).unwrap();
        let g = psi(n, &cache).unwrap();
        assert_eq!(g.mul(&f), IntPoly::x_pow_minus_one(n), "psi*phi at n={n}");
    }
    println!("ACCEPTANCE PASS: prod Phi_d = X^n-1 and Psi*Phi = X^n-1 for n<=500");
}

#[test]
fn criterion_repetition_and_diagonal_norms() {
    let cache = CycloCache::new();
    for n in 1..=300u64 {
        for d in divisors(n).unwrap() {
            assert!(
                repetition_check(n, d, &cache).unwrap(),
                "repetition fails at n={n}, d={d}"
            );
        }
    }
    for n in 1..=100u64 {
        let report = gram_matrix(n, &cache).unwrap();
        assert!(report.block_diagonal, "gram violations at n={n}");
        assert!(report.violations.is_empty());
        let size = n as usize;
        for i in 0..size {
            assert!(report.matrix[i][i] > BigInt::zero());
            for j in 0..size {
                assert_eq!(report.matrix[i][j], report.matrix[j][i]);
            }
        }
        // diagonal norm: <Psi_{n,d}, Psi_{n,d}> = (n/d) * sum of c_k^2 over Psi_d
        for (i, &(d, _l)) in report.ordering.iter().enumerate() {
            let small = psi(d, &cache).unwrap();
            let expected = BigInt::from(n / d) * small.inner_product(&small);
            assert_eq!(report.matrix[i][i], expected, "diagonal norm at n={n}, d={d}");
        }
    }
    println!("ACCEPTANCE PASS: repetition n<=300; Gram diagonal norms n<=100");
}

#[test]
fn criterion_basis_and_crt_suite() {
    let cache = CycloCache::new();
    for n in 1..=100u64 {
        let (_, nonzero) = full_basis_matrix(n, &cache).unwrap();
        assert!(nonzero, "full basis matrix singular at n={n}");
    }
    for n in 1..=100u64 {
        let divs = divisors(n).unwrap();
        let mut sum = RatPoly::zero();
        for &d in &divs {
            let e = idempotent(n, d, &cache).unwrap();
            assert_eq!(e.mul(&e).cyclic_reduce(n), e, "e^2 != e at n={n}, d={d}");
            sum = sum.add(&e);
            for &d2 in &divs {
                if d2 > d {
                    let e2 = idempotent(n, d2, &cache).unwrap();
                    assert!(
                        e.mul(&e2).cyclic_reduce(n).is_zero(),
                        "e_{d}*e_{d2} != 0 at n={n}"
                    );
                }
            }
        }
        assert_eq!(sum, RatPoly::one(), "partition of unity fails at n={n}");
    }
    // decomposition reconstruction on random inputs
    let mut rng = Lcg(0xC0FFEE);
    for n in [6u64, 12, 30] {
        let phis: Vec<(u64, RatPoly)> = divisors(n)
            .unwrap()
            .iter()
            .map(|&d| (d, phi(d, Algorithm::Auto, &cache).unwrap().to_rat()))
            .collect();
        for _ in 0..100 {
            let f = rng.poly(n as usize - 1, 9).to_rat();
            let comps = decompose(n, &f, &cache).unwrap();
            let mut sum = RatPoly::zero();
            for (d, fd) in &comps {
                sum = sum.add(fd);
                for (d2, phi_d2) in &phis {
                    let r = fd.rem(phi_d2).unwrap();
                    if d2 == d {
                        assert_eq!(r, f.rem(phi_d2).unwrap(), "f_d != f mod Phi_d, n={n}");
                    } else {
                        assert!(r.is_zero(), "f_d != 0 mod Phi_d', n={n}");
                    }
                }
            }
            assert_eq!(sum, f.cyclic_reduce(n), "sum of components != f at n={n}");
        }
    }
    println!("ACCEPTANCE PASS: full basis det, idempotent laws n<=100, decompose reconstruction");
}

#[test]
fn criterion_tensor_pairing_suite() {
    let mut rng = Lcg(0xBADC0DE);
    for case in 0..1000 {
        let n = rng.next() % 24 + 1;
        let deg = 2 * n as usize;
        let a = TensorElement::new(rng.poly(deg, 9), rng.poly(deg, 9), n);
        let b = TensorElement::new(rng.poly(deg, 9), rng.poly(deg, 9), n);
        let c = TensorElement::new(rng.poly(deg, 9), rng.poly(deg, 9), n);

        // alternating
        assert!(tensor_pair(&a, &a).unwrap().is_zero(), "case {case}");
        // bilinear in the first slot (second follows by antisymmetry)
        let sum = TensorElement::new(a.p1().add(c.p1()), a.p2().add(c.p2()), n);
        assert_eq!(
            tensor_pair(&sum, &b).unwrap(),
            tensor_pair(&a, &b).unwrap() + tensor_pair(&c, &b).unwrap(),
            "case {case}"
        );
        assert_eq!(
            tensor_pair(&a, &b).unwrap(),
            -tensor_pair(&b, &a).unwrap(),
            "case {case}"
        );
        // simultaneous shift invariance
        assert_eq!(
            tensor_pair(&a.cyclic_shift(), &b.cyclic_shift()).unwrap(),
            tensor_pair(&a, &b).unwrap(),
            "case {case}"
        );
        // bridge identity on reduced representatives
        let f = rng.poly(n as usize - 1, 9);
        let g = rng.poly(n as usize - 1, 9);
        let fa = TensorElement::new(f.clone(), IntPoly::zero(), n);
        let gb = TensorElement::new(IntPoly::zero(), g.clone(), n);
        assert_eq!(
            tensor_pair(&fa, &gb).unwrap(),
            f.inner_product(&g),
            "bridge identity, case {case}"
        );
    }
    for n in 1..=12u64 {
        assert!(pairing_nondegenerate(n).unwrap(), "degenerate pairing at n={n}");
    }
    println!("ACCEPTANCE PASS: tensor pairing suite (1000 random cases, nondegeneracy n<=12)");
}

#[test]
fn criterion_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_cyclorth");
    let dir = tempfile::tempdir().unwrap();
    let run = |args: &[&str], envs: &[(&str, &str)]| {
        let mut cmd = Command::new(bin);
        cmd.arg("--cache-dir").arg(dir.path()).args(args);
        cmd.env_remove("CYCLORTH_TEST_FAKE_VIOLATION");
        for (k, v) in envs {
            cmd.env(k, v);
        }
        cmd.output().unwrap()
    };

    // golden files
    let out = run(&["phi", "12"], &[]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "Phi_12(X) = X^4 - X^2 + 1\ncoefficients: [1,0,-1,0,1]\n"
    );
    let out = run(&["psi", "6"], &[]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "Psi_6(X) = X^4 + X^3 - X - 1\ncoefficients: [-1,-1,0,1,1]\n"
    );
    let out = run(&["gram", "2"], &[]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        " 2 | 0\n\n 0 | 2\nblock_diagonal: true (0 violations)\n"
    );

    // verify 6 JSON + round-trip
    let out = run(&["verify", "6", "--format", "json"], &[]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["result"]["checks_performed"], 13);
    assert_eq!(v["result"]["pass"], true);
    let reparsed: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, reparsed);

    // exit codes 0 / 1 / 2
    assert_eq!(run(&["verify", "6"], &[]).status.code(), Some(0));
    assert_eq!(
        run(&["verify", "6"], &[("CYCLORTH_TEST_FAKE_VIOLATION", "1")])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["psind", "6", "4"], &[]).status.code(), Some(2));

    println!("ACCEPTANCE PASS: CLI golden files, JSON round-trip, exit codes 0/1/2");
}
