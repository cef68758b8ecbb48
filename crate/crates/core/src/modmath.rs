//! Modular-integer primitives: powering, orders, primitive roots, discrete
//! logarithms, factorization, CRT and linear congruences.
//!
//! Residues and moduli are `u64`; every product is formed in `u128`, so any
//! modulus below 2^64 is safe from overflow.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{domain, Error, Result};

/// A residue class `value mod modulus` with `0 <= value < modulus`.
///
/// Modulus 1 is allowed: it is the trivial ring, and shows up whenever the
/// multiplicative order of the base is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return domain("residue modulus must be positive");
        }
        Ok(Self {
            value: value % modulus,
            modulus,
        })
    }

    /// Reduces a signed integer into `[0, modulus)`.
    pub fn from_signed(value: i128, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return domain("residue modulus must be positive");
        }
        let r = value.rem_euclid(modulus as i128) as u64;
        Ok(Self { value: r, modulus })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Prime factorization as `(prime, multiplicity)` pairs, primes increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactorList {
    factors: Vec<(u64, u32)>,
}

impl FactorList {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(q, a)| acc * q.pow(a))
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Unchecked modular powering; `modulus` must be nonzero.
#[inline]
pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, modulus);
        }
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    result
}

/// `base^exponent mod modulus` by square-and-multiply.
pub fn mod_pow(base: u64, exponent: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return domain(format!("modulus {modulus} must be at least 2"));
    }
    Ok(pow_mod(base, exponent, modulus))
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let ext = (a as i128 % m as i128).extended_gcd(&(m as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return domain(format!("{p} is not an odd prime"));
    }
    Ok(())
}

/// Trial-division factorization. `1` factors as the empty list.
pub fn factorize(x: u64) -> Result<FactorList> {
    if x < 1 {
        return domain("cannot factor 0");
    }
    let mut rest = x;
    let mut factors = Vec::new();
    let mut q = 2u64;
    while q <= rest / q {
        if rest.is_multiple_of(q) {
            let mut mult = 0;
            while rest.is_multiple_of(q) {
                rest /= q;
                mult += 1;
            }
            factors.push((q, mult));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(FactorList { factors })
}

/// Euler's totient via the factorization.
pub fn euler_phi(x: u64) -> Result<u64> {
    let f = factorize(x)?;
    Ok(f.factors().iter().fold(x, |acc, &(q, _)| acc / q * (q - 1)))
}

/// Least `m >= 1` with `g^m = 1 (mod modulus)`.
///
/// Starts from the group order and strips prime factors while the power
/// stays 1.
pub fn multiplicative_order(g: u64, modulus: u64) -> Result<u64> {
    if modulus < 2 {
        return domain(format!("modulus {modulus} must be at least 2"));
    }
    if g.gcd(&modulus) != 1 {
        return domain(format!("{g} is not a unit modulo {modulus}"));
    }
    let group_order = euler_phi(modulus)?;
    let mut order = group_order;
    for q in factorize(group_order)?.primes() {
        while order % q == 0 && pow_mod(g, order / q, modulus) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Smallest primitive root modulo the odd prime `p`.
pub fn primitive_root(p: u64) -> Result<Residue> {
    require_odd_prime(p)?;
    let phi = p - 1;
    let primes: Vec<u64> = factorize(phi)?.primes().collect();
    let h = (2..p)
        .find(|&h| primes.iter().all(|&q| pow_mod(h, phi / q, p) != 1))
        .ok_or_else(|| Error::Consistency(format!("no primitive root found mod {p}")))?;
    Residue::new(h, p)
}

/// The exponent `a` in `[0, p-1)` with `h^a = y (mod p)`, by baby-step
/// giant-step.
pub fn discrete_log(h: u64, y: u64, p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let y = y % p;
    if y == 0 {
        return domain(format!("{y} is not a unit modulo {p}"));
    }
    let h = h % p;
    if h == 0 || multiplicative_order(h, p)? != p - 1 {
        return domain(format!("{h} is not a primitive root modulo {p}"));
    }
    let group = p - 1;
    let step = (group as f64).sqrt().ceil() as u64;
    let mut baby = HashMap::with_capacity(step as usize);
    let mut cur = 1u64;
    for j in 0..step {
        baby.entry(cur).or_insert(j);
        cur = mul_mod(cur, h, p);
    }
    // h^{-step}
    let giant = pow_mod(mod_inverse(h, p).expect("unit"), step, p);
    let mut gamma = y;
    for i in 0..=step {
        if let Some(&j) = baby.get(&gamma) {
            let a = (i * step + j) % group;
            return Ok(a);
        }
        gamma = mul_mod(gamma, giant, p);
    }
    Err(Error::Consistency(format!(
        "discrete log of {y} to base {h} mod {p} not found"
    )))
}

/// The unique class modulo `m1*m2` agreeing with both inputs.
pub fn crt_combine(r1: Residue, r2: Residue) -> Result<Residue> {
    let (m1, m2) = (r1.modulus, r2.modulus);
    if m1.gcd(&m2) != 1 {
        return domain(format!("moduli {m1} and {m2} are not coprime"));
    }
    let modulus = m1
        .checked_mul(m2)
        .ok_or_else(|| Error::Domain(format!("{m1} * {m2} overflows u64")))?;
    if m1 == 1 {
        return Residue::new(r2.value, modulus);
    }
    // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    let inv = mod_inverse(m1 % m2, m2).expect("coprime moduli");
    let diff = (r2.value as i128 - r1.value as i128).rem_euclid(m2 as i128) as u64;
    let t = mul_mod(diff, inv, m2);
    Residue::new(r1.value + m1 * t, modulus)
}

/// All `x` in `[0, modulus)` with `a*x = b (mod modulus)`, ascending.
pub fn linear_congruence_solutions(a: i64, b: i64, modulus: u64) -> Result<Vec<u64>> {
    if modulus < 2 {
        return domain(format!("modulus {modulus} must be at least 2"));
    }
    let a = (a as i128).rem_euclid(modulus as i128) as u64;
    let b = (b as i128).rem_euclid(modulus as i128) as u64;
    let g = a.gcd(&modulus);
    if !b.is_multiple_of(g) {
        return Ok(Vec::new());
    }
    let reduced = modulus / g;
    let base = if reduced == 1 {
        0
    } else {
        let inv = mod_inverse(a / g, reduced).expect("a/g is a unit mod M/g");
        mul_mod(b / g, inv, reduced)
    };
    Ok((0..g).map(|i| base + i * reduced).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan_order(g: u64, m: u64) -> u64 {
        (1..=m).find(|&j| pow_mod(g, j, m) == 1).unwrap()
    }

    #[test]
    fn mod_pow_examples() {
        assert_eq!(mod_pow(3, 10, 121).unwrap(), 1);
        let naive = (0..10).fold(1u64, |acc, _| acc * 4 % 121);
        assert_eq!(naive, 111);
        assert_eq!(mod_pow(4, 10, 121).unwrap(), naive);
        for x in [0, 1, 5, u64::MAX] {
            assert_eq!(mod_pow(x, 0, 2).unwrap(), 1);
            assert_eq!(mod_pow(x, 0, 97).unwrap(), 1);
        }
        assert!(matches!(mod_pow(2, 3, 1), Err(Error::Domain(_))));
        assert!(matches!(mod_pow(2, 3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn mod_pow_large_modulus_does_not_overflow() {
        let m = (1u64 << 62) - 57;
        let naive = {
            let mut acc = 1u128;
            for _ in 0..13 {
                acc = acc * (m as u128 - 1) % m as u128;
            }
            acc as u64
        };
        assert_eq!(mod_pow(m - 1, 13, m).unwrap(), naive);
    }

    #[test]
    fn multiplicative_order_examples() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(3, 7).unwrap(), 6);
        for p in [3, 5, 7, 11, 101] {
            assert_eq!(multiplicative_order(1, p).unwrap(), 1);
        }
        assert!(matches!(multiplicative_order(7, 49), Err(Error::Domain(_))));
        assert!(matches!(multiplicative_order(2, 8), Err(Error::Domain(_))));
    }

    #[test]
    fn order_matches_scan() {
        for m in 2..200u64 {
            for g in 1..m {
                if g.gcd(&m) != 1 {
                    continue;
                }
                let ord = multiplicative_order(g, m).unwrap();
                assert_eq!(ord, scan_order(g, m), "g={g} m={m}");
                assert_eq!(pow_mod(g, ord, m), 1);
            }
        }
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(7).unwrap().value(), 3);
        assert_eq!(primitive_root(11).unwrap().value(), 2);
        assert_eq!(primitive_root(3).unwrap().value(), 2);
        assert!(primitive_root(2).is_err());
        assert!(primitive_root(9).is_err());
    }

    #[test]
    fn primitive_root_has_full_order() {
        for p in (3..2000u64).filter(|&p| is_prime(p)) {
            let h = primitive_root(p).unwrap().value();
            assert_eq!(multiplicative_order(h, p).unwrap(), p - 1);
            // smallest
            for s in 2..h {
                assert_ne!(multiplicative_order(s, p).unwrap(), p - 1);
            }
        }
    }

    #[test]
    fn discrete_log_examples() {
        assert_eq!(discrete_log(3, 1, 7).unwrap(), 0);
        assert_eq!(discrete_log(3, 2, 7).unwrap(), 2);
        assert_eq!(discrete_log(2, 9, 11).unwrap(), 6);
        assert!(matches!(discrete_log(3, 0, 7), Err(Error::Domain(_))));
        assert!(matches!(discrete_log(3, 14, 7), Err(Error::Domain(_))));
        assert!(matches!(discrete_log(2, 3, 7), Err(Error::Domain(_))));
    }

    #[test]
    fn discrete_log_inverts_powering() {
        for p in (3..=101u64).filter(|&p| is_prime(p)) {
            let h = primitive_root(p).unwrap().value();
            for y in 1..p {
                let a = discrete_log(h, y, p).unwrap();
                assert!(a < p - 1);
                assert_eq!(pow_mod(h, a, p), y, "p={p} y={y}");
            }
        }
    }

    #[test]
    fn discrete_log_large_prime() {
        let p = 999_983;
        let h = primitive_root(p).unwrap().value();
        let y = 123_456;
        let a = discrete_log(h, y, p).unwrap();
        assert_eq!(pow_mod(h, a, p), y);
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(6).unwrap().factors(), &[(2, 1), (3, 1)]);
        assert_eq!(factorize(10).unwrap().factors(), &[(2, 1), (5, 1)]);
        assert_eq!(factorize(360).unwrap().factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_reconstructs() {
        for x in 1..5000u64 {
            let f = factorize(x).unwrap();
            assert_eq!(f.product(), x);
            let ps: Vec<u64> = f.primes().collect();
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
            assert!(ps.iter().all(|&q| is_prime(q)));
        }
    }

    #[test]
    fn is_prime_matches_trial_division() {
        let trial = |n: u64| {
            n >= 2
                && (2..n)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..10_000u64 {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn crt_examples() {
        let r = crt_combine(Residue::new(1, 3).unwrap(), Residue::new(2, 7).unwrap()).unwrap();
        assert_eq!((r.value(), r.modulus()), (16, 21));
        let z = crt_combine(Residue::new(0, 5).unwrap(), Residue::new(0, 9).unwrap()).unwrap();
        assert_eq!(z.value(), 0);
        let s = crt_combine(Residue::new(0, 1).unwrap(), Residue::new(4, 9).unwrap()).unwrap();
        assert_eq!((s.value(), s.modulus()), (4, 9));
        assert!(crt_combine(Residue::new(1, 4).unwrap(), Residue::new(1, 6).unwrap()).is_err());
    }

    #[test]
    fn crt_exhaustive() {
        for m1 in 1..=40u64 {
            for m2 in 1..=(1000 / m1) {
                if m1.gcd(&m2) != 1 {
                    continue;
                }
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let x = crt_combine(
                            Residue::new(r1, m1).unwrap(),
                            Residue::new(r2, m2).unwrap(),
                        )
                        .unwrap();
                        assert!(x.value() < m1 * m2);
                        assert_eq!(x.value() % m1, r1);
                        assert_eq!(x.value() % m2, r2);
                    }
                }
            }
        }
    }

    #[test]
    fn linear_congruence_examples() {
        assert_eq!(linear_congruence_solutions(2, 4, 6).unwrap(), vec![2, 5]);
        assert_eq!(linear_congruence_solutions(1, 17, 6).unwrap(), vec![5]);
        assert!(linear_congruence_solutions(2, 3, 6).unwrap().is_empty());
        assert_eq!(linear_congruence_solutions(-1, 1, 5).unwrap(), vec![4]);
    }

    #[test]
    fn linear_congruence_matches_scan() {
        for m in 2..=60u64 {
            for a in 0..=60i64 {
                for b in 0..=60i64 {
                    let expect: Vec<u64> = (0..m)
                        .filter(|&x| (a as u64 * x) % m == b as u64 % m)
                        .collect();
                    assert_eq!(linear_congruence_solutions(a, b, m).unwrap(), expect);
                }
            }
        }
    }
}
