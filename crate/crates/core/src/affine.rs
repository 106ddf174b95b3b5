//! Characters of the basic representation of affine `sl_n`, their limits as
//! `n → ∞`, and Sugawara constants of the interpolated Lie algebras.

use std::fmt;

use num_traits::One;

use crate::arith::{geom_product, GeomTerm, Poly, Rat, RatFunc, Series};
use crate::par;
use crate::partitions::{padded_weight, IntegerWeight, Partition};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LieFamily {
    Sl,
    Gl,
    O,
    Sp,
}

impl LieFamily {
    pub fn dim_g(self) -> Poly {
        let half = Rat::new(1.into(), 2.into());
        match self {
            LieFamily::Sl => Poly::from_ints(&[-1, 0, 1]),
            LieFamily::Gl => Poly::from_ints(&[0, 0, 1]),
            LieFamily::O => Poly::new(vec![Rat::from_integer(0.into()), -half.clone(), half]),
            LieFamily::Sp => Poly::from_ints(&[0, 1, 2]),
        }
    }

    pub fn dual_coxeter(self) -> Poly {
        match self {
            LieFamily::Sl | LieFamily::Gl => Poly::t(),
            LieFamily::O => Poly::from_ints(&[-2, 1]),
            LieFamily::Sp => Poly::from_ints(&[2, 2]),
        }
    }

    pub fn is_simple(self) -> bool {
        self != LieFamily::Gl
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieFamily::Sl => "sl",
            LieFamily::Gl => "gl",
            LieFamily::O => "o",
            LieFamily::Sp => "sp",
        })
    }
}

impl std::str::FromStr for LieFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sl" => Ok(LieFamily::Sl),
            "gl" => Ok(LieFamily::Gl),
            "o" => Ok(LieFamily::O),
            "sp" => Ok(LieFamily::Sp),
            _ => Err(Error::Parse(format!("unknown Lie family {s:?}"))),
        }
    }
}

/// Critical level `−g` and central charge `k·dim 𝔤/(k + g)`.
pub fn sugawara_constants(family: LieFamily, k: &Rat) -> Result<(Poly, RatFunc), Error> {
    if !family.is_simple() {
        return Err(Error::NotSimple(family.to_string()));
    }
    let g = family.dual_coxeter();
    let den = &g + &Poly::constant(k.clone());
    if den.is_zero() {
        return Err(Error::CriticalLevel);
    }
    let c = RatFunc::new(family.dim_g().scale(k), den)?;
    Ok((-&g, c))
}

fn eta_power(power: i64, trunc: usize) -> Series<Rat> {
    let terms: Vec<_> = (1..=trunc).map(|j| GeomTerm::unit(j, power)).collect();
    geom_product(&terms, trunc).expect("positive exponents")
}

/// `C_{ν,n}(q) = q^{ν²/2} ∏_{i<j} (1 − q^{ν_i − ν_j + j − i}) / ∏_{j≥1} (1 − q^j)^{n−1}`.
pub fn c_finite(nu: &IntegerWeight, trunc: usize) -> Result<Series<Rat>, Error> {
    let w = nu.entries();
    if !nu.is_dominant() {
        return Err(Error::NotDominant(w.to_vec()));
    }
    if nu.sum() != 0 {
        return Err(Error::NotTraceless(w.to_vec()));
    }
    let norm = nu.norm2();
    if norm % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "odd norm {norm} of weight {w:?}"
        )));
    }
    let n = w.len();
    let lead = (norm / 2) as usize;
    if lead > trunc {
        return Ok(Series::zero(trunc));
    }
    let mut s = eta_power(-(n as i64 - 1), trunc);
    for i in 0..n {
        for j in i + 1..n {
            let a = (w[i] - w[j]) as usize + (j - i);
            if a <= trunc {
                s.mul_geom(a, 1, &Rat::one())?;
            }
        }
    }
    Ok(s.shift(lead))
}

fn check_sizes(lam: &Partition, mu: &Partition) -> Result<(), Error> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(lam.size(), mu.size()));
    }
    Ok(())
}

/// `∏_{j≥2} (1 − q^j)^{−(j−1)}`.
pub fn c_zero_infinity(trunc: usize) -> Series<Rat> {
    let terms: Vec<_> = (2..=trunc)
        .map(|j| GeomTerm::unit(j, -(j as i64 - 1)))
        .collect();
    geom_product(&terms, trunc).expect("positive exponents")
}

/// Factors contributed by one of the two partitions.
fn one_side(p: &Partition, terms: &mut Vec<GeomTerm<Rat>>) {
    let r = p.len();
    for i in 0..r {
        for j in i + 1..r {
            let d = j - i;
            terms.push(GeomTerm::unit(p.part(i) - p.part(j) + d, 1));
            terms.push(GeomTerm::unit(d, -1));
        }
    }
    for i in 1..=r {
        for j in 0..p.part(i - 1) {
            terms.push(GeomTerm::unit(r + 1 + j - i, -1));
        }
    }
}

/// The stable limit `C_{λ,μ,∞}(q)` of `C_{[λ,μ]_n, n}(q)`.
pub fn c_infinity(lam: &Partition, mu: &Partition, trunc: usize) -> Result<Series<Rat>, Error> {
    check_sizes(lam, mu)?;
    let lead = (lam.norm2() + mu.norm2()) / 2;
    if lead > trunc {
        return Ok(Series::zero(trunc));
    }
    let mut terms = Vec::new();
    one_side(lam, &mut terms);
    one_side(mu, &mut terms);
    let mut s = c_zero_infinity(trunc);
    for t in terms.iter().filter(|t| t.exponent <= trunc) {
        s.mul_geom(t.exponent, t.power, &t.scale)?;
    }
    Ok(s.shift(lead))
}

/// `C_{λ,μ,∞}(q) ∏_{i≥1} (1 − q^i)^{−1}`, the character twisted by the Fock space.
pub fn c_infinity_tilde(
    lam: &Partition,
    mu: &Partition,
    trunc: usize,
) -> Result<Series<Rat>, Error> {
    c_infinity(lam, mu, trunc)?.mul(&eta_power(-1, trunc))
}

/// Least rank `n ≤ cap` with `C_{[λ,μ]_n,n} = C_{λ,μ,∞}` at both `n` and
/// `n + 1`. `cap` defaults to `2N + |λ| + 4`.
pub fn stabilization_check(
    lam: &Partition,
    mu: &Partition,
    trunc: usize,
    cap: Option<usize>,
) -> Result<usize, Error> {
    let limit = c_infinity(lam, mu, trunc)?;
    let cap = cap.unwrap_or(2 * trunc + lam.size() + 4);
    let first = (lam.len() + mu.len()).max(1);
    if first > cap {
        return Err(Error::NoStabilization { cap });
    }
    let ranks: Vec<usize> = (first..=cap + 1).collect();
    let equal = par::map(&ranks, |&n| -> Result<bool, Error> {
        Ok(c_finite(&padded_weight(lam, mu, n)?, trunc)? == limit)
    });
    let equal = equal.into_iter().collect::<Result<Vec<_>, _>>()?;
    (0..ranks.len() - 1)
        .find(|&k| equal[k] && equal[k + 1])
        .map(|k| ranks[k])
        .ok_or(Error::NoStabilization { cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ints(v: &[i64], n: usize) -> Series<Rat> {
        Series::new(v.iter().map(|&c| rat(c, 1)).collect(), n)
    }

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v).unwrap()
    }

    #[test]
    fn finite_examples() {
        let zero2 = IntegerWeight(vec![0, 0]);
        assert_eq!(c_finite(&zero2, 3).unwrap(), ints(&[1, 0, 1, 1], 3));
        // ∏_{d<n} (1 − q^d)^{n−d} over η^{n−1}, at n = 4
        let mut expected = eta_power(-3, 8);
        for d in 1..4usize {
            expected.mul_geom(d, 4 - d as i64, &Rat::one()).unwrap();
        }
        assert_eq!(c_finite(&IntegerWeight(vec![0; 4]), 8).unwrap(), expected);
        assert!(c_finite(&IntegerWeight(vec![0, 1, -1]), 4).is_err());
        assert!(c_finite(&IntegerWeight(vec![1, 0]), 4).is_err());
    }

    #[test]
    fn limits() {
        assert_eq!(
            c_infinity(&Partition::empty(), &Partition::empty(), 4).unwrap(),
            ints(&[1, 0, 1, 2, 4], 4)
        );
        let mut adj = c_zero_infinity(8);
        adj.mul_geom(1, -2, &Rat::one()).unwrap();
        assert_eq!(c_infinity(&p(&[1]), &p(&[1]), 8).unwrap(), adj.shift(1));
        let adj12 = c_finite(&IntegerWeight(vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]), 6).unwrap();
        assert_eq!(adj12, c_infinity(&p(&[1]), &p(&[1]), 6).unwrap());
        assert!(c_infinity(&p(&[2]), &p(&[1]), 4).is_err());
    }

    #[test]
    fn tilde() {
        let e = Partition::empty();
        let terms: Vec<_> = (1..=8).map(|j| GeomTerm::unit(j, -(j as i64))).collect();
        assert_eq!(
            c_infinity_tilde(&e, &e, 8).unwrap(),
            geom_product(&terms, 8).unwrap()
        );
        assert_eq!(
            c_infinity_tilde(&p(&[1]), &p(&[1]), 4).unwrap().coeff(1),
            rat(1, 1)
        );
    }

    #[test]
    fn stabilizes() {
        let e = Partition::empty();
        assert!(stabilization_check(&e, &e, 6, None).unwrap() <= 16);
        stabilization_check(&p(&[1]), &p(&[1]), 6, None).unwrap();
        stabilization_check(&p(&[2]), &p(&[1, 1]), 5, None).unwrap();
    }

    #[test]
    fn sugawara() {
        let one = Rat::one();
        let (crit, c) = sugawara_constants(LieFamily::Sl, &one).unwrap();
        assert_eq!(crit, Poly::from_ints(&[0, -1]));
        assert_eq!(c, RatFunc::from(Poly::from_ints(&[-1, 1])));
        let (_, c) = sugawara_constants(LieFamily::O, &one).unwrap();
        assert_eq!(c, RatFunc::from(Poly::new(vec![rat(0, 1), rat(1, 2)])));
        let k = rat(3, 1);
        let (_, c) = sugawara_constants(LieFamily::Sp, &k).unwrap();
        assert_eq!(
            c,
            RatFunc::new(Poly::from_ints(&[0, 3, 6]), Poly::from_ints(&[5, 2])).unwrap()
        );
        assert!(matches!(
            sugawara_constants(LieFamily::Gl, &one),
            Err(Error::NotSimple(_))
        ));
    }
}
