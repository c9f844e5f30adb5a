use ntkit::apcount::{an, ap, count_points, ApTable};
use ntkit::ecurve::{
    add_points, conductor, reduction_type, scalar_mul, CurvePoint, FpCurve, ReductionType,
    WeierstrassModel,
};
use ntkit::exactnum::{primes_between, rat};
use ntkit::exec::Strategy as Exec;
use ntkit::BigInt;
use num::Integer;
use proptest::prelude::*;

fn nonsingular_short() -> impl Strategy<Value = WeierstrassModel> {
    (-20i64..=20, -20i64..=20)
        .prop_filter("nonsingular", |(a, b)| 4 * a * a * a + 27 * b * b != 0)
        .prop_map(|(a, b)| WeierstrassModel::short(a, b))
}

fn long_model() -> impl Strategy<Value = WeierstrassModel> {
    prop::array::uniform5(-6i64..=6)
        .prop_map(WeierstrassModel::long)
        .prop_filter("nonsingular", |m| m.invariants().is_ok())
}

/// Affine solutions of the full long equation, counted directly.
fn brute_count(m: &WeierstrassModel, p: u64) -> u64 {
    let [a1, a2, a3, a4, a6] = m.reduce_mod(p).unwrap();
    let mut n = 1;
    for x in 0..p {
        for y in 0..p {
            let lhs = (y * y + a1 * x % p * y + a3 * y) % p;
            let rhs = (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
            if lhs == rhs {
                n += 1;
            }
        }
    }
    n
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn count_matches_brute_force(m in long_model(), idx in 0usize..8) {
        let p = [5u64, 7, 11, 13, 17, 19, 23, 29][idx];
        prop_assume!(reduction_type(&m, p).is_ok_and(|t| t.is_good()));
        prop_assert_eq!(count_points(&m, p).unwrap(), brute_count(&m, p));
    }

    #[test]
    fn hasse_bound(m in nonsingular_short(), idx in 0usize..10) {
        let p = primes_between(5, 200)[idx * 4];
        if let Ok(a) = ap(&m, p) {
            prop_assert!((a * a) as f64 <= 4.0 * p as f64);
        }
    }

    #[test]
    fn bad_primes_have_small_ap(m in nonsingular_short()) {
        for p in primes_between(5, 100) {
            let t = reduction_type(&m, p).unwrap();
            let a = ap(&m, p).unwrap();
            match t {
                ReductionType::Good => {}
                ReductionType::MultiplicativeSplit => prop_assert_eq!(a, 1),
                ReductionType::MultiplicativeNonsplit => prop_assert_eq!(a, -1),
                ReductionType::Additive => prop_assert_eq!(a, 0),
            }
        }
    }

    #[test]
    fn an_is_multiplicative(m in nonsingular_short(), i in 0usize..6, j in 0usize..6) {
        let ps = [5u64, 7, 11, 13, 17, 19];
        prop_assume!(i != j);
        let (p, q) = (ps[i], ps[j]);
        prop_assert_eq!(an(&m, p * q).unwrap(), an(&m, p).unwrap() * an(&m, q).unwrap());
        if q != 5 {
            prop_assert_eq!(an(&m, 25 * q).unwrap(), an(&m, 25).unwrap() * an(&m, q).unwrap());
        }
    }

    #[test]
    fn prime_square_recurrence(m in nonsingular_short(), idx in 0usize..5) {
        let p = [5u64, 7, 11, 13, 17][idx];
        let a = an(&m, p).unwrap();
        let a2 = an(&m, p * p).unwrap();
        if reduction_type(&m, p).unwrap().is_good() {
            prop_assert_eq!(a2, &a * &a - BigInt::from(p));
        } else {
            prop_assert_eq!(a2, &a * &a);
        }
    }

    #[test]
    fn fp_group_law(m in long_model(), idx in 0usize..4, seed in any::<u64>()) {
        let p = [5u64, 7, 11, 13][idx];
        let Ok(c) = FpCurve::new(&m, p) else { return Ok(()) };
        let pts = c.points();
        let n = pts.len() as i64;
        let pick = |k: u64| pts[(k % pts.len() as u64) as usize].clone();
        let (a, b, d) = (pick(seed), pick(seed / 7 + 1), pick(seed / 49 + 3));
        prop_assert_eq!(c.add(&a, &b), c.add(&b, &a));
        prop_assert_eq!(c.add(&c.add(&a, &b), &d), c.add(&a, &c.add(&b, &d)));
        prop_assert_eq!(c.add(&a, &c.neg(&a)), CurvePoint::Infinity);
        // Lagrange: the group order kills every point
        prop_assert_eq!(c.mul(n, &a), CurvePoint::Infinity);
    }

    #[test]
    fn strategies_agree_on_tables(m in nonsingular_short()) {
        let s = ApTable::build_with(&m, 150, Exec::Sequential).unwrap();
        let par = ApTable::build_with(&m, 150, Exec::Parallel).unwrap();
        prop_assert_eq!(s.values, par.values);
    }

    #[test]
    fn conductor_divides_discriminant(a in -12i64..=12, b in -12i64..=12) {
        let m = WeierstrassModel::short(a, b);
        prop_assume!(m.invariants().is_ok());
        if let Ok(n) = conductor(&m) {
            let disc = m.discriminant();
            prop_assert!(disc.is_integer());
            let d = disc.to_integer();
            for f in &n.factors {
                prop_assert!(d.is_multiple_of(&BigInt::from(f.prime)));
            }
        }
    }
}

#[test]
fn rational_group_law_on_a_rank_one_curve() {
    // y^2 = x^3 - 2 with P = (3, 5)
    let m = WeierstrassModel::short(0, -2);
    let p = CurvePoint::Affine(rat(3, 1), rat(5, 1));
    let p2 = add_points(&m, &p, &p).unwrap();
    assert_eq!(p2, CurvePoint::Affine(rat(129, 100), rat(-383, 1000)));
    for k in 1..6i64 {
        let lhs = scalar_mul(&m, &BigInt::from(k + 1), &p).unwrap();
        let rhs = add_points(&m, &scalar_mul(&m, &BigInt::from(k), &p).unwrap(), &p).unwrap();
        assert_eq!(lhs, rhs);
    }
}
