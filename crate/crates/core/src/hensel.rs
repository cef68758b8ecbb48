//! Newton/Hensel lifting of roots from Z/p to Z/p^e.

use crate::error::{domain, Error, Result, UnsupportedCase};
use crate::modmath::pow_mod;
use crate::padic::{Interpolant, PadicApprox, Valuation};

/// A function on Z_p together with its formal derivative.
pub trait LiftFunction {
    fn value(&self, x: &PadicApprox) -> Result<PadicApprox>;
    fn derivative(&self, x: &PadicApprox) -> Result<PadicApprox>;
}

/// Integer polynomial, coefficients in increasing degree.
#[derive(Debug, Clone)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self { coeffs }
    }

    fn horner(
        coeffs: impl DoubleEndedIterator<Item = i128>,
        x: &PadicApprox,
    ) -> Result<PadicApprox> {
        let (p, e) = (x.prime(), x.precision());
        let mut acc = PadicApprox::new(0, p, e)?;
        for c in coeffs.rev() {
            acc = acc * *x + PadicApprox::from_signed(c, p, e)?;
        }
        Ok(acc)
    }
}

impl LiftFunction for Polynomial {
    fn value(&self, x: &PadicApprox) -> Result<PadicApprox> {
        Self::horner(self.coeffs.iter().map(|&c| c as i128), x)
    }

    fn derivative(&self, x: &PadicApprox) -> Result<PadicApprox> {
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c as i128 * i as i128);
        Self::horner(d, x)
    }
}

/// A root mod p of `function` with unit derivative, to be lifted to
/// precision `target_precision`.
#[derive(Debug, Clone)]
pub struct LiftProblem<F> {
    function: F,
    seed: u64,
    p: u64,
    target_precision: u32,
}

impl<F: LiftFunction> LiftProblem<F> {
    pub fn new(function: F, seed: u64, p: u64, target_precision: u32) -> Result<Self> {
        let s = PadicApprox::new(seed, p, 1)?;
        if function.value(&s)?.valuation() != Valuation::Infinity {
            return domain(format!("{seed} is not a root modulo {p}"));
        }
        if !function.derivative(&s)?.is_unit() {
            return Err(Error::Hypothesis(format!(
                "derivative at {seed} vanishes modulo {p}"
            )));
        }
        Ok(Self {
            function,
            seed: seed % p,
            p,
            target_precision,
        })
    }

    pub fn function(&self) -> &F {
        &self.function
    }
}

/// Lifts the seed to the unique root modulo p^e in its residue class.
///
/// Each Newton step is checked: the residual's valuation must strictly
/// increase, so a wrong evaluator shows up as an error.
pub fn hensel_lift<F: LiftFunction>(problem: &LiftProblem<F>) -> Result<PadicApprox> {
    let (p, e) = (problem.p, problem.target_precision);
    let f = &problem.function;
    let mut x = PadicApprox::new(problem.seed, p, e)?;
    let mut last = Valuation::Finite(0);
    for _ in 0..=e {
        let residual = f.value(&x)?;
        let v = residual.valuation();
        if v <= last {
            return Err(Error::Consistency(format!(
                "Newton residual valuation stalled at {v} (previous {last})"
            )));
        }
        if v == Valuation::Infinity {
            break;
        }
        last = v;
        let slope = f
            .derivative(&x)?
            .inverse()
            .ok_or_else(|| Error::Hypothesis(format!("derivative at {x} is not a unit")))?;
        x = x - residual * slope;
    }
    if f.value(&x)?.valuation() != Valuation::Infinity || x.residue() % p != problem.seed {
        return Err(Error::Consistency(format!(
            "lift {x} of seed {} fails verification",
            problem.seed
        )));
    }
    Ok(x)
}

/// `x -> ω(g)^(x0^n) ⟨g⟩^(x^n) - x^k`.
#[derive(Debug, Clone)]
pub struct PairEquation {
    interpolant: Interpolant,
    k: u64,
}

impl PairEquation {
    pub fn new(g: u64, n: u64, k: u64, x0: u64, p: u64, e: u32) -> Result<Self> {
        if k == 0 {
            return domain("k must be positive");
        }
        Ok(Self {
            interpolant: Interpolant::new(g, n, x0, p, e)?,
            k,
        })
    }
}

impl LiftFunction for PairEquation {
    fn value(&self, x: &PadicApprox) -> Result<PadicApprox> {
        Ok(self.interpolant.eval(x)? - x.pow(self.k))
    }

    fn derivative(&self, x: &PadicApprox) -> Result<PadicApprox> {
        let k = PadicApprox::new(self.k, x.prime(), x.precision())?;
        Ok(self.interpolant.derivative(x)? - k * x.pow(self.k - 1))
    }
}

/// Lifts a solution `a` of `g^(x0^n) = a^k (mod p)` to the unique p-adic
/// solution of `ω(g)^(x0^n) ⟨g⟩^(x^n) = x^k` modulo p^e with `x = a (mod p)`.
#[allow(clippy::too_many_arguments)]
pub fn lift_pair(g: u64, n: u64, k: u64, x0: u64, a: u64, p: u64, e: u32) -> Result<PadicApprox> {
    if k.is_multiple_of(p) {
        return Err(Error::Unsupported(UnsupportedCase::SingularLift));
    }
    let lhs = pow_mod(g, pow_mod(x0, n, p - 1), p);
    if lhs != pow_mod(a, k, p) {
        return domain(format!(
            "({x0}, {a}) does not solve {g}^(x0^{n}) = a^{k} mod {p}"
        ));
    }
    let equation = PairEquation::new(g, n, k, x0, p, e)?;
    hensel_lift(&LiftProblem::new(equation, a, p, e)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_examples() {
        let sqrt2 = LiftProblem::new(Polynomial::new(vec![-2, 0, 1]), 3, 7, 2).unwrap();
        assert_eq!(hensel_lift(&sqrt2).unwrap().residue(), 10);

        for c in [0i64, 4, 13, 200] {
            let lin = LiftProblem::new(Polynomial::new(vec![-c, 1]), c as u64 % 5, 5, 3).unwrap();
            assert_eq!(hensel_lift(&lin).unwrap().residue(), c as u64 % 125);
        }

        let cube = LiftProblem::new(Polynomial::new(vec![-1, 0, 0, 1]), 1, 5, 3).unwrap();
        assert_eq!(hensel_lift(&cube).unwrap().residue(), 1);
    }

    #[test]
    fn rejects_bad_seeds() {
        let f = Polynomial::new(vec![-2, 0, 1]);
        assert!(matches!(
            LiftProblem::new(f.clone(), 2, 7, 2),
            Err(Error::Domain(_))
        ));
        // x^2 at 0 mod 7: derivative vanishes
        let sq = Polynomial::new(vec![0, 0, 1]);
        assert!(matches!(
            LiftProblem::new(sq, 0, 7, 2),
            Err(Error::Hypothesis(_))
        ));
    }

    /// Evaluator whose claimed derivative is wrong, so Newton cannot converge.
    struct Broken;
    impl LiftFunction for Broken {
        fn value(&self, x: &PadicApprox) -> Result<PadicApprox> {
            Ok(*x * *x - PadicApprox::new(2, x.prime(), x.precision())?)
        }
        fn derivative(&self, x: &PadicApprox) -> Result<PadicApprox> {
            PadicApprox::new(1, x.prime(), x.precision())
        }
    }

    #[test]
    fn broken_evaluator_is_reported() {
        let problem = LiftProblem::new(Broken, 3, 7, 4).unwrap();
        assert!(matches!(hensel_lift(&problem), Err(Error::Consistency(_))));
    }

    #[test]
    fn lift_pair_examples() {
        assert_eq!(lift_pair(8, 1, 1, 0, 1, 7, 2).unwrap().residue(), 8);
        assert_eq!(lift_pair(1, 1, 1, 0, 1, 7, 3).unwrap().residue(), 1);
        // six mod-7 pairs of 3^x0 = a, lifted mod 49, frozen from a brute scan
        let expected = [
            (0, 1, 8),
            (1, 3, 45),
            (2, 2, 9),
            (3, 6, 6),
            (4, 4, 32),
            (5, 5, 47),
        ];
        for (x0, a, lifted) in expected {
            assert_eq!(lift_pair(3, 1, 1, x0, a, 7, 2).unwrap().residue(), lifted);
        }
    }

    #[test]
    fn lift_pair_errors() {
        assert!(matches!(
            lift_pair(3, 1, 7, 0, 1, 7, 2),
            Err(Error::Unsupported(UnsupportedCase::SingularLift))
        ));
        assert!(matches!(
            lift_pair(3, 1, 1, 1, 2, 7, 2),
            Err(Error::Domain(_))
        ));
    }
}
