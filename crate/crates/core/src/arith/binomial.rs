use num_bigint::BigInt;
use num_traits::Zero;

use super::{factorial, Poly, Rat};
use crate::Error;

/// Generalized binomial coefficient `∏_{j<k} (p − j) / k!` with a polynomial
/// top argument.
pub fn binom_poly(p: &Poly, k: usize) -> Poly {
    let mut acc = Poly::one();
    for j in 0..k {
        acc = &acc * &(p - &Poly::constant(Rat::from_integer(j.into())));
    }
    acc.scale(&Rat::new(1.into(), factorial(k as u64)))
}

/// Integer-valued polynomial written as `∑ b_k · binom(t, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinomialForm {
    coeffs: Vec<BigInt>,
}

impl BinomialForm {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BinomialForm { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Newton expansion at the nodes `0, 1, …, deg`: `b_k = Δ^k p(0)`.
    /// Succeeds exactly when `p` maps ℤ to ℤ.
    pub fn from_poly(p: &Poly) -> Result<Self, Error> {
        let Some(deg) = p.degree() else {
            return Ok(BinomialForm { coeffs: Vec::new() });
        };
        let mut row: Vec<Rat> = (0..=deg as i64).map(|n| p.eval_int(n)).collect();
        let mut coeffs = Vec::with_capacity(deg + 1);
        for k in 0..=deg {
            let b = &row[0];
            if !b.is_integer() {
                return Err(Error::NotIntegerValued(p.to_string()));
            }
            coeffs.push(b.to_integer());
            if k < deg {
                row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
            }
        }
        Ok(BinomialForm::new(coeffs))
    }

    pub fn to_poly(&self) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, b)| {
                &acc + &binom_poly(&Poly::t(), k).scale(&Rat::from_integer(b.clone()))
            })
    }
}
