//! Exhaustive scan of the canonical window. Deliberately naive: it is the
//! ground truth the closed forms and the lifting paths are checked against.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::counting::ProblemInstance;
use crate::error::{Error, Result};

pub const DEFAULT_SCAN_CEILING: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct ScanResult {
    pub instance: ProblemInstance,
    /// Ascending, all inside `[0, m·p^e)`.
    pub solutions: Vec<u64>,
    pub elapsed: Duration,
    pub candidates_scanned: u64,
}

impl ScanResult {
    /// True when the instance lies outside the cases the counting theory
    /// covers.
    pub fn exploratory(&self) -> bool {
        self.instance.case().is_err()
    }
}

fn check_ceiling(inst: &ProblemInstance, ceiling: u64) -> Result<u64> {
    let window = inst.window();
    if window > ceiling {
        return Err(Error::ResourceLimit {
            window: window as u128,
            ceiling: ceiling as u128,
        });
    }
    Ok(window)
}

/// Tests every `x` in `[0, m·p^e)` serially.
pub fn brute_force(inst: &ProblemInstance, ceiling: u64) -> Result<ScanResult> {
    let start = Instant::now();
    let window = check_ceiling(inst, ceiling)?;
    let solutions = (0..window).filter(|&x| inst.holds_at(x)).collect();
    Ok(ScanResult {
        instance: *inst,
        solutions,
        elapsed: start.elapsed(),
        candidates_scanned: window,
    })
}

/// Same scan split into `parts` disjoint ranges run in parallel; the merge
/// keeps ascending order, so the output equals `brute_force`.
pub fn brute_force_partitioned(
    inst: &ProblemInstance,
    ceiling: u64,
    parts: u64,
) -> Result<ScanResult> {
    let start = Instant::now();
    let window = check_ceiling(inst, ceiling)?;
    let parts = parts.clamp(1, window.max(1));
    let chunk = window.div_ceil(parts);
    let pieces: Vec<Vec<u64>> = (0..parts)
        .into_par_iter()
        .map(|i| {
            let lo = i * chunk;
            let hi = ((i + 1) * chunk).min(window);
            (lo..hi).filter(|&x| inst.holds_at(x)).collect()
        })
        .collect();
    Ok(ScanResult {
        instance: *inst,
        solutions: pieces.concat(),
        elapsed: start.elapsed(),
        candidates_scanned: window,
    })
}

/// `g^(x^n) - x^k mod p^e` with the exponent formed in full.
fn unreduced_residual(inst: &ProblemInstance, x: u64) -> BigUint {
    let modulus = BigUint::from(inst.modulus());
    let x = BigUint::from(x);
    let exponent = x.pow(inst.n() as u32);
    let lhs = BigUint::from(inst.g()).modpow(&exponent, &modulus);
    let rhs = x.modpow(&BigUint::from(inst.k()), &modulus);
    (lhs + &modulus - rhs) % modulus
}

fn instance_seed(inst: &ProblemInstance) -> u64 {
    [inst.g(), inst.n(), inst.k(), inst.p(), inst.e() as u64]
        .iter()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, &v| {
            (h ^ v).wrapping_mul(0x0100_0000_01b3)
        })
}

/// Checks `f(x) = f(x + m·p^e) (mod p^e)` at `samples` points drawn
/// deterministically from the instance, using big-integer powering with no
/// exponent reduction.
pub fn check_periodicity(inst: &ProblemInstance, samples: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(inst));
    let window = inst.window();
    (0..samples).all(|_| {
        let x = rng.random_range(0..window);
        unreduced_residual(inst, x) == unreduced_residual(inst, x + window)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modmath::pow_mod;

    fn inst(g: u64, n: u64, k: u64, p: u64, e: u32) -> ProblemInstance {
        ProblemInstance::new(g, n, k, p, e).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        let r = brute_force(&inst(3, 1, 2, 7, 1), DEFAULT_SCAN_CEILING).unwrap();
        assert_eq!(r.solutions.len(), 6);
        assert_eq!(r.candidates_scanned, 42);
        assert!(!r.exploratory());
        let r = brute_force(&inst(2, 1, 11, 11, 2), DEFAULT_SCAN_CEILING).unwrap();
        assert!(r.solutions.is_empty());
        let r = brute_force(&inst(1, 1, 1, 3, 1), DEFAULT_SCAN_CEILING).unwrap();
        assert_eq!(r.solutions, vec![1]);
    }

    #[test]
    fn ceiling_is_enforced() {
        let i = inst(3, 1, 1, 7, 3);
        assert!(matches!(
            brute_force(&i, 2057),
            Err(Error::ResourceLimit { window: 2058, .. })
        ));
        assert!(brute_force(&i, 2058).is_ok());
    }

    #[test]
    fn exploratory_cases_scan() {
        let r = brute_force(&inst(3, 1, 14, 7, 2), DEFAULT_SCAN_CEILING).unwrap();
        assert!(r.exploratory());
        let r = brute_force(&inst(3, 2, 1, 2, 4), DEFAULT_SCAN_CEILING).unwrap();
        assert!(r.exploratory());
        assert!(r.solutions.iter().all(|&x| x < 16));
    }

    #[test]
    fn partitioned_matches_serial() {
        for (g, n, k, p, e) in [
            (3, 2, 5, 7, 3),
            (3, 1, 11, 11, 2),
            (2, 3, 4, 13, 2),
            (1, 1, 1, 3, 1),
        ] {
            let i = inst(g, n, k, p, e);
            let serial = brute_force(&i, DEFAULT_SCAN_CEILING).unwrap();
            for parts in [1, 2, 7, 64, 10_000] {
                let par = brute_force_partitioned(&i, DEFAULT_SCAN_CEILING, parts).unwrap();
                assert_eq!(par.solutions, serial.solutions);
            }
        }
    }

    #[test]
    fn exponent_reduction_is_sound() {
        let i = inst(3, 3, 5, 7, 3);
        for x in (0..i.window()).step_by(17) {
            let reduced = pow_mod(3, pow_mod(x, 3, i.m() * 49), 343);
            let full = BigUint::from(3u32).modpow(&BigUint::from(x).pow(3), &BigUint::from(343u32));
            assert_eq!(BigUint::from(reduced), full, "x={x}");
        }
    }

    #[test]
    fn periodicity_examples() {
        assert!(check_periodicity(&inst(3, 2, 5, 7, 2), 50));
        assert!(check_periodicity(&inst(1, 3, 4, 5, 3), 50));
        assert!(check_periodicity(&inst(2, 1, 11, 11, 3), 50));
    }

    #[test]
    fn periodicity_detects_wrong_period() {
        // Shifting by m·p^(e-1) instead of m·p^e is not a period of x^k here.
        let i = inst(2, 1, 1, 7, 2);
        let x = 5u64;
        let shift = i.m() * 7;
        assert_ne!(unreduced_residual(&i, x), unreduced_residual(&i, x + shift));
    }
}
