//! Truncated p-adic integers.
//!
//! An element of Z_p is held as a residue modulo p^e. The series for
//! log_p and exp_p are summed exactly: every term is a rational whose
//! denominator has bounded p-adic valuation, so numerators are carried at
//! extended precision and divided exactly before reduction to p^e.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::modmath::{self, mod_inverse, mul_mod, pow_mod};

/// p-adic valuation; `Infinity` is the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

/// Exponent of `p` in `x`.
pub fn valuation(x: i128, p: u64) -> Valuation {
    if x == 0 {
        return Valuation::Infinity;
    }
    let p = p as u128;
    let mut rest = x.unsigned_abs();
    let mut v = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        v += 1;
    }
    Valuation::Finite(v)
}

fn small_valuation(x: u64, p: u64) -> u32 {
    valuation(x as i128, p).finite().unwrap_or(u32::MAX)
}

/// `p^e`, or an error when it does not fit in a `u64`.
pub fn prime_power(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| Error::Domain(format!("{p}^{e} does not fit in 64 bits")))
}

/// An element of Z_p known modulo p^precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicApprox {
    p: u64,
    precision: u32,
    residue: u64,
}

impl PadicApprox {
    pub fn new(residue: u64, p: u64, precision: u32) -> Result<Self> {
        if p < 2 {
            return domain(format!("{p} is not prime"));
        }
        if precision == 0 {
            return domain("precision must be at least 1");
        }
        let modulus = prime_power(p, precision)?;
        Ok(Self {
            p,
            precision,
            residue: residue % modulus,
        })
    }

    pub fn from_signed(value: i128, p: u64, precision: u32) -> Result<Self> {
        let modulus = prime_power(p, precision)?;
        let r = value.rem_euclid(modulus as i128) as u64;
        Self::new(r, p, precision)
    }

    pub fn one(p: u64, precision: u32) -> Result<Self> {
        Self::new(1, p, precision)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.precision)
    }

    /// Valuation of the residue; `Infinity` means zero to this precision.
    pub fn valuation(&self) -> Valuation {
        valuation(self.residue as i128, self.p)
    }

    pub fn is_unit(&self) -> bool {
        !self.residue.is_multiple_of(self.p)
    }

    /// Truncates to a lower precision.
    pub fn reduce(&self, precision: u32) -> Result<Self> {
        if precision > self.precision {
            return domain(format!(
                "cannot raise precision from {} to {precision}",
                self.precision
            ));
        }
        Self::new(self.residue, self.p, precision)
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self {
            residue: pow_mod(self.residue, exp, self.modulus()),
            ..*self
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        mod_inverse(self.residue, self.modulus()).map(|r| Self {
            residue: r,
            ..*self
        })
    }

    fn combine(self, rhs: Self, op: impl Fn(u128, u128, u128) -> u128) -> Self {
        assert_eq!(self.p, rhs.p, "p-adic operands over different primes");
        let precision = self.precision.min(rhs.precision);
        let modulus = self.p.pow(precision) as u128;
        let a = self.residue as u128 % modulus;
        let b = rhs.residue as u128 % modulus;
        Self {
            p: self.p,
            precision,
            residue: (op(a, b, modulus) % modulus) as u64,
        }
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({}^{})", self.residue, self.p, self.precision)
    }
}

// Binary operations panic when the primes differ; the result carries the
// smaller of the two precisions.
impl Add for PadicApprox {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b, _| a + b)
    }
}

impl Sub for PadicApprox {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b, m| a + m - b)
    }
}

impl Mul for PadicApprox {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b, _| a * b)
    }
}

impl Neg for PadicApprox {
    type Output = Self;
    fn neg(self) -> Self {
        let m = self.modulus();
        Self {
            residue: (m - self.residue) % m,
            ..self
        }
    }
}

/// ω(x) and ⟨x⟩ with `x = ω(x)·⟨x⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitDecomposition {
    pub omega: PadicApprox,
    pub one_unit: PadicApprox,
}

fn require_odd(p: u64) -> Result<()> {
    if p == 2 {
        return domain("p = 2 is outside the supported p-adic range");
    }
    Ok(())
}

/// Teichmüller representative of a unit: the (p-1)-st root of unity
/// congruent to `x` mod p, found as the fixed point of `y -> y^p`.
pub fn teichmuller(x: u64, p: u64, e: u32) -> Result<PadicApprox> {
    modmath::require_odd_prime(p)?;
    let modulus = prime_power(p, e)?;
    if x.is_multiple_of(p) {
        return domain(format!(
            "{x} is not a unit mod {p}; the Teichmuller character is undefined"
        ));
    }
    // After j steps the iterate is correct mod p^(j+1).
    let mut y = x % modulus;
    for _ in 0..=e {
        let next = pow_mod(y, p, modulus);
        if next == y {
            return PadicApprox::new(y, p, e);
        }
        y = next;
    }
    Err(Error::Consistency(format!(
        "Frobenius iteration for {x} mod {p}^{e} did not reach a fixed point"
    )))
}

pub fn unit_decompose(x: u64, p: u64, e: u32) -> Result<UnitDecomposition> {
    let omega = teichmuller(x, p, e)?;
    let inv = omega.inverse().expect("roots of unity are units");
    let one_unit = PadicApprox::new(x, p, e)? * inv;
    Ok(UnitDecomposition { omega, one_unit })
}

fn big_pow(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

fn floor_log(i: u64, p: u64) -> u32 {
    i.ilog(p)
}

/// Running power `t^i` held modulo p^wide_exp, where `wide_exp` leaves
/// room to divide out the p-part of a series denominator exactly.
enum WidePower {
    Native {
        acc: u64,
        t: u64,
        modulus: u64,
    },
    Big {
        acc: BigUint,
        t: BigUint,
        modulus: BigUint,
    },
}

impl WidePower {
    fn new(t: u64, p: u64, wide_exp: u32) -> Self {
        match p.checked_pow(wide_exp) {
            Some(modulus) => WidePower::Native {
                acc: 1 % modulus,
                t: t % modulus,
                modulus,
            },
            None => WidePower::Big {
                acc: BigUint::one(),
                t: BigUint::from(t),
                modulus: big_pow(p, wide_exp),
            },
        }
    }

    fn advance(&mut self) {
        match self {
            WidePower::Native { acc, t, modulus } => *acc = mul_mod(*acc, *t, *modulus),
            WidePower::Big { acc, t, modulus } => *acc = (&*acc * &*t) % &*modulus,
        }
    }

    /// `(t^i / p^v) mod target`; the division must be exact.
    fn shifted(&self, p: u64, v: u32, target: u64) -> u64 {
        match self {
            WidePower::Native { acc, .. } => {
                let d = p.pow(v);
                debug_assert_eq!(acc % d, 0);
                (acc / d) % target
            }
            WidePower::Big { acc, .. } => {
                let d = big_pow(p, v);
                debug_assert!((acc % &d).is_zero());
                ((acc / d) % BigUint::from(target))
                    .to_u64()
                    .expect("reduced below target")
            }
        }
    }
}

/// log_p of a one-unit, summed as Σ (-1)^(i+1) (u-1)^i / i.
pub fn log_one_unit(u: &PadicApprox) -> Result<PadicApprox> {
    let p = u.p;
    require_odd(p)?;
    let e = u.precision;
    if u.residue % p != 1 % p {
        return domain(format!("{} is not congruent to 1 mod {p}", u.residue));
    }
    if u.residue == 1 {
        return PadicApprox::new(0, p, e);
    }
    let t = u.residue - 1;
    let vt = small_valuation(t, p);
    // v((u-1)^i / i) >= i*vt - floor(log_p i), nondecreasing in i; every
    // term from the first index where the bound reaches e vanishes.
    let bound = |i: u64| (i as i64) * vt as i64 - floor_log(i, p) as i64;
    let mut last = 1u64;
    while bound(last + 1) < e as i64 {
        last += 1;
    }
    let modulus = prime_power(p, e)?;
    let mut power = WidePower::new(t, p, e + floor_log(last, p));
    let mut acc = 0u64;
    for i in 1..=last {
        power.advance();
        let vi = small_valuation(i, p);
        let unit = (i / p.pow(vi)) % modulus;
        let q = power.shifted(p, vi, modulus);
        let term = mul_mod(q, mod_inverse(unit, modulus).expect("unit"), modulus);
        acc = if i % 2 == 1 {
            ((acc as u128 + term as u128) % modulus as u128) as u64
        } else {
            ((acc as u128 + modulus as u128 - term as u128) % modulus as u128) as u64
        };
    }
    PadicApprox::new(acc, p, e)
}

/// v_p(i!) by Legendre's formula.
fn factorial_valuation(i: u64, p: u64) -> u64 {
    let mut v = 0;
    let mut q = p;
    while q <= i {
        v += i / q;
        match q.checked_mul(p) {
            Some(n) => q = n,
            None => break,
        }
    }
    v
}

/// exp_p on pZ_p, summed as Σ t^i / i!.
pub fn exp_small(t: &PadicApprox) -> Result<PadicApprox> {
    let p = t.p;
    require_odd(p)?;
    let e = t.precision;
    if t.residue == 0 {
        return PadicApprox::new(1, p, e);
    }
    let vt = small_valuation(t.residue, p);
    if vt == 0 {
        return domain(format!("{} has valuation 0; exp_p diverges", t.residue));
    }
    // v(t^i / i!) >= i*vt - floor((i-1)/(p-1)) since v(i!) <= (i-1)/(p-1);
    // the bound is nondecreasing in i.
    let bound = |i: u64| i as i64 * vt as i64 - ((i - 1) / (p - 1)) as i64;
    let mut last = 0u64;
    while bound(last + 1) < e as i64 {
        last += 1;
    }
    let modulus = prime_power(p, e)?;
    let mut power = WidePower::new(t.residue, p, e + factorial_valuation(last, p) as u32);
    let mut fact_unit = 1u64;
    let mut fact_val = 0u32;
    let mut acc = 1 % modulus;
    for i in 1..=last {
        power.advance();
        let vi = small_valuation(i, p);
        fact_val += vi;
        fact_unit = mul_mod(fact_unit, (i / p.pow(vi)) % modulus, modulus);
        let q = power.shifted(p, fact_val, modulus);
        let inv = mod_inverse(fact_unit, modulus).expect("unit part of i!");
        acc = ((acc as u128 + mul_mod(q, inv, modulus) as u128) % modulus as u128) as u64;
    }
    PadicApprox::new(acc, p, e)
}

/// The p-adic interpolation `x -> ω(g)^(x0^n) · ⟨g⟩^(x^n)` for a fixed
/// residue class `x0` modulo the order of `g`.
///
/// On integers `x = x0 (mod m)` it agrees with `g^(x^n) mod p^e`. Arguments
/// of lower precision are evaluated at their own precision.
#[derive(Debug, Clone)]
pub struct Interpolant {
    p: u64,
    precision: u32,
    n: u64,
    /// ω(g)^(x0^n)
    root_factor: PadicApprox,
    /// log_p ⟨g⟩, valuation >= 1.
    log_one_unit: PadicApprox,
}

impl Interpolant {
    pub fn new(g: u64, n: u64, x0: u64, p: u64, e: u32) -> Result<Self> {
        modmath::require_odd_prime(p)?;
        if g.is_multiple_of(p) {
            return domain(format!("{g} is divisible by {p}"));
        }
        if n == 0 {
            return domain("n must be positive");
        }
        let parts = unit_decompose(g, p, e)?;
        // ω(g) has order dividing p - 1.
        let exponent = pow_mod(x0, n, p - 1);
        Ok(Self {
            p,
            precision: e,
            n,
            root_factor: parts.omega.pow(exponent),
            log_one_unit: log_one_unit(&parts.one_unit)?,
        })
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn root_factor(&self) -> PadicApprox {
        self.root_factor
    }

    pub fn log_one_unit(&self) -> PadicApprox {
        self.log_one_unit
    }

    fn check(&self, x: &PadicApprox) -> Result<()> {
        if x.p != self.p {
            return domain(format!(
                "argument {x} is incompatible with an interpolant mod {}^{}",
                self.p, self.precision
            ));
        }
        Ok(())
    }

    /// `exp(x^n · log⟨g⟩)`. Since log⟨g⟩ ∈ pZ_p only `x^n mod p^(e-1)`
    /// matters, so the exponent never has to be formed exactly.
    fn one_unit_power(&self, x: &PadicApprox) -> Result<PadicApprox> {
        let x = x.reduce(x.precision.min(self.precision))?;
        exp_small(&(x.pow(self.n) * self.log_one_unit))
    }

    pub fn eval(&self, x: &PadicApprox) -> Result<PadicApprox> {
        self.check(x)?;
        Ok(self.root_factor * self.one_unit_power(x)?)
    }

    /// d/dx of `eval`: `ω(g)^(x0^n) · exp(x^n L) · n x^(n-1) L`, the
    /// termwise derivative of the composite exponential series.
    pub fn derivative(&self, x: &PadicApprox) -> Result<PadicApprox> {
        self.check(x)?;
        let x = x.reduce(x.precision.min(self.precision))?;
        let n = PadicApprox::new(self.n, self.p, x.precision)?;
        Ok(self.root_factor * self.one_unit_power(&x)? * n * x.pow(self.n - 1) * self.log_one_unit)
    }
}

/// Evaluates the interpolant for `(g, n, x0)` at `x`, to `x`'s precision.
pub fn interp_f(g: u64, n: u64, x0: u64, x: &PadicApprox) -> Result<PadicApprox> {
    Interpolant::new(g, n, x0, x.p, x.precision)?.eval(x)
}
