//! Property tests for the algebraic cores: exact ring laws for cyclotomic
//! integers, residue-ring laws, divisibility monotonicity, and index
//! additivity.

use jacobi_sums::cyclotomic::{euler_phi, pi_power_membership, valuation_floor, CycInt};
use jacobi_sums::ff::FieldCtx;
use jacobi_sums::ringr::RElem;
use num_bigint::BigInt;
use proptest::prelude::*;

fn cyc_int(n: u64) -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-40i64..=40, euler_phi(n) as usize).prop_map(move |coords| {
        CycInt::from_poly(n, coords.into_iter().map(BigInt::from).collect())
    })
}

fn relem(ell: u64, f: u64) -> impl Strategy<Value = RElem> {
    prop::collection::vec(0i64..ell as i64, f as usize)
        .prop_map(move |coeffs| RElem::from_coeffs(ell, f, &coeffs))
}

proptest! {
    #[test]
    fn cyclotomic_mul_associative(a in cyc_int(6), b in cyc_int(6), c in cyc_int(6)) {
        let left = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
        let right = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cyclotomic_distributive(a in cyc_int(15), b in cyc_int(15), c in cyc_int(15)) {
        let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
        let right = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cyclotomic_mul_commutative(a in cyc_int(10), b in cyc_int(10)) {
        prop_assert_eq!(a.checked_mul(&b).unwrap(), b.checked_mul(&a).unwrap());
    }

    #[test]
    fn conjugation_is_a_mul_involution(a in cyc_int(6), b in cyc_int(6)) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(
            a.checked_mul(&b).unwrap().conj(),
            a.conj().checked_mul(&b.conj()).unwrap()
        );
    }

    #[test]
    fn divisibility_monotone(a in cyc_int(6), k in 0u32..5) {
        // membership at k implies membership at every smaller exponent
        if pi_power_membership(&a, 2, 3, k).unwrap() {
            for smaller in 0..k {
                prop_assert!(pi_power_membership(&a, 2, 3, smaller).unwrap());
            }
        }
        let floor = valuation_floor(&a, 2, 3, 5).unwrap();
        for probe in 0..=5u32 {
            prop_assert_eq!(pi_power_membership(&a, 2, 3, probe).unwrap(), probe <= floor);
        }
    }

    #[test]
    fn residue_ring_laws(a in relem(5, 3), b in relem(5, 3), c in relem(5, 3)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
    }

    #[test]
    fn projections_respect_products(a in relem(3, 5), b in relem(3, 5)) {
        prop_assert_eq!(a.mul(&b).tau(), a.tau() * b.tau() % 3);
        prop_assert_eq!(a.mul(&b).omega(), a.omega().mul(&b.omega()));
        prop_assert_eq!(a.add(&b).omega(), a.omega().add(&b.omega()));
    }

    #[test]
    fn index_additivity(seed in 0u64..1000) {
        let ctx = FieldCtx::new(31, None).unwrap();
        let y = seed % 30 + 1;
        let z = (seed * 7 + 3) % 30 + 1;
        let lhs = ctx.ind(y * z % 31).unwrap();
        let rhs = (ctx.ind(y).unwrap() + ctx.ind(z).unwrap()) % 30;
        prop_assert_eq!(lhs, rhs);
    }
}
