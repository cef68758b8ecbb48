use padic_solve::counting::{
    count_solutions, enumerate, is_wieferich_base, ProblemInstance, SupportedCase,
};
use padic_solve::hensel::{hensel_lift, lift_pair, LiftProblem, Polynomial};
use padic_solve::modmath::{is_prime, mod_pow};
use padic_solve::oracle::{brute_force, DEFAULT_SCAN_CEILING};
use padic_solve::padic::{
    exp_small, log_one_unit, teichmuller, unit_decompose, PadicApprox, Valuation,
};
use proptest::prelude::*;

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

fn pa(r: u64, p: u64, e: u32) -> PadicApprox {
    PadicApprox::new(r, p, e).unwrap()
}

#[test]
fn teichmuller_small_primes_exhaustive() {
    for p in [3u64, 5, 7, 11, 13] {
        for e in 1..=3u32 {
            let q = p.pow(e);
            for x in (1..q).filter(|x| x % p != 0) {
                let d = unit_decompose(x, p, e).unwrap();
                assert_eq!(d.omega.residue() % p, x % p);
                assert_eq!(d.omega.pow(p - 1).residue(), 1);
                assert_eq!(d.one_unit.residue() % p, 1);
                assert_eq!((d.omega * d.one_unit).residue(), x);
            }
        }
        // multiplicativity up to e = 3 at p = 13 is ~3M pairs; e <= 2 suffices here
        let e = 2;
        let q = p.pow(e);
        for x in (1..q).filter(|x| x % p != 0) {
            let wx = teichmuller(x, p, e).unwrap();
            for y in (1..q).filter(|y| y % p != 0).step_by(3) {
                let wy = teichmuller(y, p, e).unwrap();
                assert_eq!(teichmuller(x * y % q, p, e).unwrap(), wx * wy);
            }
        }
    }
}

#[test]
fn log_of_one_unit_part_detects_wieferich_bases() {
    for p in PRIMES {
        for g in (1..p * p).filter(|g| g % p != 0) {
            let one_unit = unit_decompose(g, p, 4).unwrap().one_unit;
            let v = log_one_unit(&one_unit).unwrap().valuation();
            assert!(v >= Valuation::Finite(1));
            assert_eq!(
                v >= Valuation::Finite(2),
                is_wieferich_base(g, p).unwrap(),
                "g={g} p={p}"
            );
        }
    }
}

#[test]
fn formula_enumeration_and_oracle_agree_on_grid() {
    for p in PRIMES {
        for e in 1..=3u32 {
            for n in 1..=3u64 {
                for k in 1..=13u64 {
                    for g in 1..p {
                        let inst = ProblemInstance::new(g, n, k, p, e).unwrap();
                        let scan = brute_force(&inst, DEFAULT_SCAN_CEILING).unwrap();
                        let Ok(case) = inst.case() else { continue };
                        let report = count_solutions(&inst).unwrap();
                        let listed = enumerate(&inst).unwrap();
                        assert_eq!(report.total, listed.len() as u64);
                        assert_eq!(listed.solutions, scan.solutions, "{inst:?}");
                        if case == SupportedCase::KEqualsPN1 && e >= 2 {
                            assert_eq!(report.total > 0, is_wieferich_base(g, p).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn hensel_precision_coherence() {
    let f = Polynomial::new(vec![-2, 0, 1]);
    for e in 2..=8 {
        let hi = hensel_lift(&LiftProblem::new(f.clone(), 3, 7, e).unwrap()).unwrap();
        let lo = hensel_lift(&LiftProblem::new(f.clone(), 3, 7, e - 1).unwrap()).unwrap();
        assert_eq!(hi.reduce(e - 1).unwrap(), lo);
    }
}

#[test]
fn hensel_polynomial_roots_match_scan() {
    // x^2 - c over p = 5, 7: each nonzero square root mod p lifts uniquely
    for p in [5u64, 7] {
        for e in 1..=3u32 {
            let q = p.pow(e);
            for c in (1..p as i64).filter(|c| c % p as i64 != 0) {
                let f = Polynomial::new(vec![-c, 0, 1]);
                for seed in (1..p).filter(|s| (s * s) % p == c as u64 % p) {
                    let x = hensel_lift(&LiftProblem::new(f.clone(), seed, p, e).unwrap()).unwrap();
                    let scan: Vec<u64> = (seed..q)
                        .step_by(p as usize)
                        .filter(|y| (y * y) % q == c as u64 % q)
                        .collect();
                    assert_eq!(scan, vec![x.residue()]);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn log_is_a_homomorphism(pi in 0usize..5, e in 1u32..6, a in 0u64..100_000, b in 0u64..100_000) {
        let p = PRIMES[pi];
        let q = p.pow(e);
        let u = pa(1 + p * (a % q), p, e);
        let v = pa(1 + p * (b % q), p, e);
        let lhs = log_one_unit(&(u * v)).unwrap();
        let rhs = log_one_unit(&u).unwrap() + log_one_unit(&v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_log_round_trip(pi in 0usize..5, e in 1u32..10, j in 0u64..1_000_000) {
        let p = PRIMES[pi];
        let t = pa(p * j, p, e);
        let u = exp_small(&t).unwrap();
        prop_assert_eq!(u.residue() % p, 1);
        prop_assert_eq!(log_one_unit(&u).unwrap(), t);
    }

    #[test]
    fn lifted_roots_give_integer_solutions(
        pi in 0usize..5, e in 1u32..5, n in 1u64..4, k in 1u64..30, g in 1u64..13,
    ) {
        let p = PRIMES[pi];
        prop_assume!(g % p != 0 && k % p != 0);
        let inst = ProblemInstance::new(g, n, k, p, e).unwrap();
        let pairs = padic_solve::counting::count_mod_p(&inst).unwrap().pairs;
        for (x0, a) in pairs {
            let lifted = lift_pair(g, n, k, x0, a, p, e).unwrap().residue();
            let q = inst.modulus();
            // every integer in both classes solves the congruence
            for c in (0..3 * inst.window()).filter(|c| c % q == lifted && c % inst.m() == x0) {
                prop_assert!(inst.holds_at(c));
                let t = mod_pow(c, n, inst.m() * q).unwrap();
                prop_assert_eq!(mod_pow(g, t, q).unwrap(), mod_pow(c, k, q).unwrap());
            }
        }
    }

    #[test]
    fn counts_do_not_depend_on_precision(pi in 0usize..5, n in 1u64..6, k in 1u64..40, g in 1u64..13) {
        let p = PRIMES[pi];
        prop_assume!(g % p != 0 && k % p != 0);
        let base = count_solutions(&ProblemInstance::new(g, n, k, p, 1).unwrap()).unwrap();
        for e in 2..6 {
            let r = count_solutions(&ProblemInstance::new(g, n, k, p, e).unwrap()).unwrap();
            prop_assert_eq!(r.total, base.total);
        }
        if base.d == 1 {
            let other = count_solutions(&ProblemInstance::new(g, n + 7, k, p, 1).unwrap()).unwrap();
            prop_assert_eq!(other.total, base.total);
        }
    }

    #[test]
    fn wieferich_trichotomy(p in (3u64..60).prop_filter("odd prime", |&p| is_prime(p)), g in 1u64..500, e in 2u32..4) {
        prop_assume!(g % p != 0);
        let inst = ProblemInstance::new(g, 1, p, p, e).unwrap();
        let r = count_solutions(&inst).unwrap();
        let w = is_wieferich_base(g, p).unwrap();
        prop_assert_eq!(r.total, if w { r.n_mod_p * p } else { 0 });
    }
}
