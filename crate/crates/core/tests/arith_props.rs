use deligne::arith::{interpolate, BinomialForm, Poly, Rat, RatFunc, Series};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_laws(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_with_remainder(a in poly(6), b in nonzero_poly(3)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(3), b in nonzero_poly(3), c in nonzero_poly(2)) {
        let (x, y) = (&a * &c, &b * &c);
        let g = x.gcd(&y);
        prop_assert!(x.div_exact(&g).is_ok());
        prop_assert!(y.div_exact(&g).is_ok());
        prop_assert!(g.div_exact(&c.monic()).is_ok());
    }

    #[test]
    fn field_laws(a in poly(2), b in nonzero_poly(2), c in poly(2), d in nonzero_poly(2)) {
        let x = RatFunc::new(a, b).unwrap();
        let y = RatFunc::new(c, d).unwrap();
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) * &y.recip().unwrap(), x.clone());
        }
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn series_inverse(head in 1i64..5, tail in prop::collection::vec(rat(), 0..10)) {
        let mut coeffs = vec![Rat::from_integer(head.into())];
        coeffs.extend(tail);
        let s = Series::new(coeffs, 9);
        let inv = s.inv().unwrap();
        prop_assert_eq!(s.mul(&inv).unwrap(), Series::one(9));
    }

    #[test]
    fn geometric_factors_cancel(a in 1usize..6, e in 1i64..4) {
        let mut s = Series::<Rat>::one(12);
        s.mul_geom(a, e, &Rat::from_integer(1.into())).unwrap();
        s.mul_geom(a, -e, &Rat::from_integer(1.into())).unwrap();
        prop_assert_eq!(s, Series::one(12));
    }

    #[test]
    fn binomial_round_trip(c in prop::collection::vec(-50i64..50, 0..7)) {
        let form = BinomialForm::new(c.into_iter().map(BigInt::from).collect());
        let p = form.to_poly();
        prop_assert_eq!(BinomialForm::from_poly(&p).unwrap(), form);
    }

    #[test]
    fn interpolation_recovers(p in poly(5), offset in -5i64..5) {
        let samples: Vec<(i64, Rat)> = (0..8).map(|k| (k + offset, p.eval_int(k + offset))).collect();
        prop_assert_eq!(interpolate(&samples, 5).unwrap(), p);
    }
}

#[test]
fn non_integer_valued_is_rejected() {
    let half_t = Poly::new(vec![
        Rat::from_integer(0.into()),
        Rat::new(1.into(), 2.into()),
    ]);
    assert!(BinomialForm::from_poly(&half_t).is_err());
}

#[test]
fn inconsistent_samples_are_detected() {
    let samples: Vec<(i64, Rat)> = (0..4)
        .map(|k| (k, Rat::from_integer((k * k * k).into())))
        .collect();
    assert!(interpolate(&samples, 2).is_err());
}
