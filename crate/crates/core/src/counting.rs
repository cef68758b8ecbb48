//! Closed-form counts and explicit enumeration of the solutions of
//! `g^(x^n) = x^k (mod p^e)` in the window `[0, m·p^e)`, `m` the order of
//! `g` mod p.
//!
//! Two cases are covered: `p ∤ k`, where every solution pair mod p lifts
//! to exactly one solution, and `k = p, n = 1`, where lifting depends on
//! whether `g` is a Wieferich base.

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{domain, Error, Result, UnsupportedCase};
use crate::hensel::lift_pair;
use crate::modmath::{
    self, crt_combine, discrete_log, factorize, is_prime, linear_congruence_solutions,
    multiplicative_order, pow_mod, primitive_root, FactorList, Residue,
};
use crate::padic::prime_power;

/// Largest admissible window `m·p^e`; keeps every exponent and product in
/// native widths.
pub const DEFAULT_WINDOW_CEILING: u64 = 1 << 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportedCase {
    /// p does not divide k.
    PNotDividesK,
    /// k = p and n = 1.
    KEqualsPN1,
}

impl SupportedCase {
    pub fn tag(self) -> &'static str {
        match self {
            SupportedCase::PNotDividesK => "p_ndivides_k",
            SupportedCase::KEqualsPN1 => "k_equals_p_n1",
        }
    }
}

/// The congruence `g^(x^n) = x^k (mod p^e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    g: u64,
    n: u64,
    k: u64,
    p: u64,
    e: u32,
    m: u64,
    modulus: u64,
}

impl ProblemInstance {
    pub fn new(g: u64, n: u64, k: u64, p: u64, e: u32) -> Result<Self> {
        Self::with_ceiling(g, n, k, p, e, DEFAULT_WINDOW_CEILING)
    }

    /// Validates and normalizes an instance. `g` is reduced mod p^e and `m`
    /// is always recomputed from it. p = 2 is accepted here (the brute-force
    /// scan can explore it) but is not a supported counting case.
    pub fn with_ceiling(g: u64, n: u64, k: u64, p: u64, e: u32, ceiling: u64) -> Result<Self> {
        if !is_prime(p) {
            return domain(format!("{p} is not prime"));
        }
        if e == 0 {
            return domain("e must be at least 1");
        }
        if n == 0 {
            return domain("n must be at least 1");
        }
        if k == 0 {
            return domain("k must be at least 1");
        }
        if g.is_multiple_of(p) {
            return domain(format!("g = {g} is divisible by p = {p}"));
        }
        let modulus = prime_power(p, e)?;
        let g = g % modulus;
        let m = if p == 2 {
            1
        } else {
            multiplicative_order(g % p, p)?
        };
        let window = m as u128 * modulus as u128;
        if window > ceiling as u128 {
            return Err(Error::ResourceLimit {
                window,
                ceiling: ceiling as u128,
            });
        }
        Ok(Self {
            g,
            n,
            k,
            p,
            e,
            m,
            modulus,
        })
    }

    pub fn g(&self) -> u64 {
        self.g
    }
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    /// Multiplicative order of g mod p.
    pub fn m(&self) -> u64 {
        self.m
    }
    /// p^e
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
    /// Size of the canonical window, m·p^e.
    pub fn window(&self) -> u64 {
        self.m * self.modulus
    }

    pub fn case(&self) -> std::result::Result<SupportedCase, UnsupportedCase> {
        if self.p == 2 {
            Err(UnsupportedCase::EvenPrime)
        } else if !self.k.is_multiple_of(self.p) {
            Ok(SupportedCase::PNotDividesK)
        } else if self.k != self.p {
            Err(UnsupportedCase::PDividesK)
        } else if self.n != 1 {
            Err(UnsupportedCase::KEqualsPHigherN)
        } else {
            Ok(SupportedCase::KEqualsPN1)
        }
    }

    fn supported_case(&self) -> Result<SupportedCase> {
        self.case().map_err(Error::Unsupported)
    }

    /// Direct test of the congruence at `x`.
    ///
    /// The order of g mod p^e divides m·p^(e-1), so `x^n` is reduced
    /// modulo that before powering.
    pub fn holds_at(&self, x: u64) -> bool {
        let exp_modulus = self.m * (self.modulus / self.p);
        let t = pow_mod(x, self.n, exp_modulus);
        pow_mod(self.g, t, self.modulus) == pow_mod(x, self.k, self.modulus)
    }
}

/// Solution pairs `(x0 mod m, x1 mod p)` of `g^(x0^n) = x1^k (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPCount {
    /// Closed-form count.
    pub count: u64,
    /// Sorted lexicographically.
    pub pairs: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    /// Number of solution pairs mod p.
    pub n_mod_p: u64,
    /// gcd(k, p-1) / gcd(k, (p-1)/m)
    pub d: u64,
    pub d_factors: FactorList,
    /// Solutions in the window `[0, m·p^e)`.
    pub total: u64,
    /// Wieferich status of g; only meaningful when k = p.
    pub wieferich: Option<bool>,
    pub case: SupportedCase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    /// Exclusive upper end of the window `[0, window)`.
    pub window: u64,
    pub solutions: Vec<u64>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

struct Divisor {
    d: u64,
    factors: FactorList,
    count: u64,
}

fn closed_form(inst: &ProblemInstance) -> Result<Divisor> {
    let (p, m, n) = (inst.p, inst.m, inst.n);
    let k = inst.k;
    let g_full = k.gcd(&(p - 1));
    let g_part = k.gcd(&((p - 1) / m));
    let d = g_full / g_part;
    let factors = factorize(d)?;
    // d | x0^n  <=>  prod q^ceil(a/n) | x0
    let radical: u64 = factors
        .factors()
        .iter()
        .map(|&(q, a)| q.pow((a as u64).div_ceil(n) as u32))
        .product();
    Ok(Divisor {
        d,
        factors,
        count: m * g_full / radical,
    })
}

/// Counts solution pairs mod p by the closed form and lists them
/// constructively through a primitive root.
///
/// With `g = h^a` and `x1 = h^b`, the pair condition becomes
/// `a·x0^n = k·b (mod p-1)`; each `x0` contributes the solutions `b` of
/// that linear congruence.
pub fn count_mod_p(inst: &ProblemInstance) -> Result<ModPCount> {
    modmath::require_odd_prime(inst.p)?;
    let p = inst.p;
    let group = p - 1;
    let h = primitive_root(p)?.value();
    let a = discrete_log(h, inst.g % p, p)?;
    let k = (inst.k % group) as i64;
    let mut pairs = Vec::new();
    for x0 in 0..inst.m {
        let rhs = (a as u128 * pow_mod(x0, inst.n, group) as u128 % group as u128) as i64;
        for b in linear_congruence_solutions(k, rhs, group)? {
            pairs.push((x0, pow_mod(h, b, p)));
        }
    }
    pairs.sort_unstable();
    let count = closed_form(inst)?.count;
    if pairs.len() as u64 != count {
        return Err(Error::Consistency(format!(
            "closed form gives {count} pairs mod {p}, construction gives {}",
            pairs.len()
        )));
    }
    Ok(ModPCount { count, pairs })
}

/// `g^(p-1) = 1 (mod p^2)`.
pub fn is_wieferich_base(g: u64, p: u64) -> Result<bool> {
    modmath::require_odd_prime(p)?;
    if g.is_multiple_of(p) {
        return domain(format!("{g} is divisible by {p}"));
    }
    let p2 = prime_power(p, 2)?;
    Ok(pow_mod(g, p - 1, p2) == 1)
}

/// Number of solutions in the window, from the closed form alone.
pub fn count_solutions(inst: &ProblemInstance) -> Result<CountReport> {
    let case = inst.supported_case()?;
    let Divisor { d, factors, count } = closed_form(inst)?;
    let (total, wieferich) = match case {
        SupportedCase::PNotDividesK => (count, None),
        SupportedCase::KEqualsPN1 => {
            let w = is_wieferich_base(inst.g, inst.p)?;
            let total = match (inst.e, w) {
                (1, _) => count,
                (_, true) => count * inst.p,
                (_, false) => 0,
            };
            (total, Some(w))
        }
    };
    Ok(CountReport {
        n_mod_p: count,
        d,
        d_factors: factors,
        total,
        wieferich,
        case,
    })
}

fn verify(inst: &ProblemInstance, x: u64) -> Result<u64> {
    if inst.holds_at(x) {
        Ok(x)
    } else {
        Err(Error::Consistency(format!(
            "{x} does not satisfy {}^(x^{}) = x^{} mod {}^{}",
            inst.g, inst.n, inst.k, inst.p, inst.e
        )))
    }
}

/// Lift each pair mod p to a p-adic root and glue it to its class mod m.
pub fn enumerate_pnmidk(inst: &ProblemInstance) -> Result<SolutionSet> {
    if inst.supported_case()? != SupportedCase::PNotDividesK {
        return Err(Error::Unsupported(UnsupportedCase::SingularLift));
    }
    let pairs = count_mod_p(inst)?.pairs;
    let mut solutions = pairs
        .par_iter()
        .map(|&(x0, x1)| {
            let lifted = lift_pair(inst.g, inst.n, inst.k, x0, x1, inst.p, inst.e)?;
            let x = crt_combine(
                Residue::new(x0, inst.m)?,
                Residue::new(lifted.residue(), inst.modulus)?,
            )?;
            verify(inst, x.value())
        })
        .collect::<Result<Vec<u64>>>()?;
    solutions.sort_unstable();
    Ok(SolutionSet {
        window: inst.window(),
        solutions,
    })
}

/// Level-by-level search for `g^x = x^p (mod p^e)`: each solution modulo
/// m·p^j is extended by the p candidates above it that still solve the
/// congruence modulo p^(j+1).
pub fn enumerate_k_eq_p(inst: &ProblemInstance) -> Result<SolutionSet> {
    if inst.supported_case()? != SupportedCase::KEqualsPN1 {
        return domain("level-by-level enumeration requires k = p and n = 1");
    }
    let (p, m) = (inst.p, inst.m);
    let mut level = count_mod_p(inst)?
        .pairs
        .into_iter()
        .map(|(x0, x1)| Ok(crt_combine(Residue::new(x0, m)?, Residue::new(x1, p)?)?.value()))
        .collect::<Result<Vec<u64>>>()?;
    let mut step = m * p;
    let mut modulus = p;
    for _ in 1..inst.e {
        modulus *= p;
        level = level
            .into_iter()
            .flat_map(|a| (0..p).map(move |t| a + t * step))
            .filter(|&x| pow_mod(inst.g, x, modulus) == pow_mod(x, p, modulus))
            .collect();
        step *= p;
    }
    level.sort_unstable();
    for &x in &level {
        verify(inst, x)?;
    }
    let expected = count_solutions(inst)?.total;
    if level.len() as u64 != expected {
        return Err(Error::Consistency(format!(
            "level search found {} solutions, closed form predicts {expected}",
            level.len()
        )));
    }
    Ok(SolutionSet {
        window: inst.window(),
        solutions: level,
    })
}

/// Enumerates by whichever method fits the instance.
pub fn enumerate(inst: &ProblemInstance) -> Result<SolutionSet> {
    match inst.supported_case()? {
        SupportedCase::PNotDividesK => enumerate_pnmidk(inst),
        SupportedCase::KEqualsPN1 => enumerate_k_eq_p(inst),
    }
}
