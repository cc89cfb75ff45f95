//! Exercise the C ABI from Rust exactly as a foreign caller would:
//! through the extern functions and raw pointers only.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cyclorth_ffi::*;

fn coeff_string(poly: *const CyPoly, k: u64) -> String {
    unsafe {
        let needed = cy_poly_coeff_decimal(poly, k, ptr::null_mut(), 0);
        assert!(needed > 0);
        let mut buf = vec![0u8; needed as usize];
        let written = cy_poly_coeff_decimal(poly, k, buf.as_mut_ptr() as *mut c_char, needed);
        assert_eq!(written, needed);
        CStr::from_bytes_until_nul(&buf).unwrap().to_str().unwrap().to_string()
    }
}

#[test]
fn phi_roundtrip_through_abi() {
    unsafe {
        let cache = cy_cache_new();
        let mut poly: *mut CyPoly = ptr::null_mut();
        assert_eq!(cy_phi(cache, 12, CyAlgorithm::Auto, &mut poly), CyStatus::Ok);
        assert_eq!(cy_poly_degree(poly), 4);
        assert_eq!(cy_poly_coeff_count(poly), 5);
        let coeffs: Vec<String> = (0..5).map(|k| coeff_string(poly, k)).collect();
        assert_eq!(coeffs, ["1", "0", "-1", "0", "1"]);
        // beyond the degree reads as zero
        assert_eq!(coeff_string(poly, 99), "0");
        cy_poly_free(poly);
        cy_cache_free(cache);
    }
}

#[test]
fn psi_and_psi_nd() {
    unsafe {
        let cache = cy_cache_new();
        let mut poly: *mut CyPoly = ptr::null_mut();
        assert_eq!(cy_psi(cache, 6, &mut poly), CyStatus::Ok);
        assert_eq!(cy_poly_degree(poly), 4);
        cy_poly_free(poly);

        let mut poly: *mut CyPoly = ptr::null_mut();
        assert_eq!(cy_psi_nd(cache, 6, 2, &mut poly), CyStatus::Ok);
        let coeffs: Vec<String> = (0..6).map(|k| coeff_string(poly, k)).collect();
        assert_eq!(coeffs, ["-1", "1", "-1", "1", "-1", "1"]);
        cy_poly_free(poly);

        // error paths
        let mut poly: *mut CyPoly = ptr::null_mut();
        assert_eq!(cy_psi_nd(cache, 6, 4, &mut poly), CyStatus::NotADivisor);
        assert!(poly.is_null());
        assert_eq!(cy_psi(cache, 0, &mut poly), CyStatus::InvalidArgument);
        assert_eq!(cy_psi(ptr::null(), 6, &mut poly), CyStatus::NullPointer);
        cy_cache_free(cache);
    }
}

#[test]
fn verification_through_abi() {
    unsafe {
        let cache = cy_cache_new();
        let mut pass = false;
        let mut checks = 0u64;
        assert_eq!(cy_verify_theorem(cache, 6, &mut pass, &mut checks), CyStatus::Ok);
        assert!(pass);
        assert_eq!(checks, 13);

        let mut ok = false;
        assert_eq!(cy_verify_lemma(cache, 6, 2, 3, &mut ok), CyStatus::Ok);
        assert!(ok);
        assert_eq!(cy_verify_lemma(cache, 6, 2, 2, &mut ok), CyStatus::InvalidArgument);
        cy_cache_free(cache);
    }
}

#[test]
fn file_backed_cache() {
    let dir = std::env::temp_dir().join(format!("cyclorth-abi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = CString::new(dir.join("phi.cache").to_str().unwrap()).unwrap();
    unsafe {
        let mut cache: *mut CyCache = ptr::null_mut();
        assert_eq!(cy_cache_open(path.as_ptr(), &mut cache), CyStatus::Ok);
        let mut poly: *mut CyPoly = ptr::null_mut();
        assert_eq!(cy_phi(cache, 30, CyAlgorithm::Mobius, &mut poly), CyStatus::Ok);
        cy_poly_free(poly);
        assert_eq!(cy_cache_save(cache), CyStatus::Ok);
        cy_cache_free(cache);

        let mut reopened: *mut CyCache = ptr::null_mut();
        assert_eq!(cy_cache_open(path.as_ptr(), &mut reopened), CyStatus::Ok);
        let mut poly: *mut CyPoly = ptr::null_mut();
        assert_eq!(cy_phi(reopened, 30, CyAlgorithm::Auto, &mut poly), CyStatus::Ok);
        assert_eq!(cy_poly_degree(poly), 8);
        cy_poly_free(poly);
        cy_cache_free(reopened);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(cy_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
