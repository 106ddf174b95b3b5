//! Dimension polynomials of simple objects of Rep(GL_t) and Rep(O_t), and
//! the classical Weyl dimension formula they interpolate.
//!
//! The interpolated formulas have factors such as `1/(t + 1 − i − j)` that
//! must cancel. They are evaluated in ℚ(t) and then required to be
//! polynomials that are integer-valued.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::arith::{binom_poly, BinomialForm, Poly, Rat, RatFunc};
use crate::partitions::{IntegerWeight, Partition};
use crate::Error;

fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn binom_int(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Linear polynomial `a·t + b`.
fn lin(a: Rat, b: Rat) -> Poly {
    Poly::new(vec![b, a])
}

fn finish(acc: RatFunc) -> Result<Poly, Error> {
    let p = acc.into_poly()?;
    BinomialForm::from_poly(&p)?;
    Ok(p)
}

/// `dim X_{λ,μ}(t)`: the Weyl dimension formula of `GL_n` at the padded
/// weight `[λ,μ]_n`, continued to `n = t`.
pub fn dim_gl(lam: &Partition, mu: &Partition) -> Result<Poly, Error> {
    let (r, s) = (lam.len(), mu.len());
    let mut acc = RatFunc::constant(lam.d_lambda() * mu.d_lambda());
    let one_sided = |rows: &Partition, own: usize, other: usize, acc: &mut RatFunc| {
        for (i0, &p) in rows.parts().iter().enumerate() {
            let i = i0 + 1;
            let top = Poly::t_plus(int(p as i64 - i as i64 - other as i64));
            let num = binom_poly(&top, p).scale(&binom_int(p + own - i, p).recip());
            *acc = &*acc * &RatFunc::from(num);
        }
    };
    one_sided(lam, r, s, &mut acc);
    one_sided(mu, s, r, &mut acc);
    for (i0, &li) in lam.parts().iter().enumerate() {
        for (j0, &mj) in mu.parts().iter().enumerate() {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            let num = Poly::t_plus(int(1 + li as i64 + mj as i64 - i - j));
            let den = Poly::t_plus(int(1 - i - j));
            acc = &acc * &RatFunc::new(num, den)?;
        }
    }
    finish(acc)
}

/// `dim X_λ(t)` in Rep(O_t), the interpolated Weyl dimension formula for
/// `O_n`.
pub fn dim_o(lam: &Partition) -> Result<Poly, Error> {
    let r = lam.len() as i64;
    let half = Rat::new(1.into(), 2.into());
    let mut acc = RatFunc::one();
    for (i0, &p) in lam.parts().iter().enumerate() {
        let (i, l) = (i0 as i64 + 1, p as i64);
        let top = Poly::t_plus(int(l - r - i - 1));
        let num = &lin(half.clone(), int(l - i)) * &binom_poly(&top, p);
        let den = lin(half.clone(), int(-i)).scale(&binom_int(p + r as usize - i as usize, p));
        acc = &acc * &RatFunc::new(num, den)?;
    }
    for i0 in 0..lam.len() {
        for j0 in i0 + 1..lam.len() {
            let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
            let (li, lj) = (lam.part(i0) as i64, lam.part(j0) as i64);
            let num = Poly::t_plus(int(li + lj - i - j)).scale(&int(li - lj + j - i));
            let den = Poly::t_plus(int(-i - j)).scale(&int(j - i));
            acc = &acc * &RatFunc::new(num, den)?;
        }
    }
    finish(acc)
}

/// Classical Weyl dimension `∏_{i<j} (ν_i − ν_j + j − i)/(j − i)` of the
/// `GL_n` irreducible with dominant highest weight `ν`.
pub fn weyl_dim_gl(nu: &IntegerWeight, n: usize) -> Result<BigInt, Error> {
    if nu.rank() != n {
        return Err(Error::SizeMismatch(nu.rank(), n));
    }
    if !nu.is_dominant() {
        return Err(Error::NotDominant(nu.entries().to_vec()));
    }
    let w = nu.entries();
    let mut acc = Rat::one();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) as i64;
            acc *= Rat::new((w[i] - w[j] + d).into(), d.into());
        }
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}

/// `X_{λ,μ}* = X_{μ,λ}` at the level of dimensions.
pub fn verify_duality(lam: &Partition, mu: &Partition) -> Result<bool, Error> {
    Ok(dim_gl(lam, mu)? == dim_gl(mu, lam)?)
}

/// Checks `dim X_{m,m} · t = dim X_{m+1,m} + dim X_{(m,1),m}` (second term
/// absent for `m = 0`), the two-summand rule for `X_{m,m} ⊗ V`.
///
/// This only holds for `m = 0`: for `m ≥ 1` the contraction summand
/// `X_{m,m−1}` is missing, see [`tensor_v_defect`].
pub fn verify_tensor_v(m: usize) -> Result<bool, Error> {
    Ok(tensor_v_defect(m)?.is_zero())
}

/// `dim X_{m,m}·t − dim X_{m+1,m} − dim X_{(m,1),m}`.
pub fn tensor_v_defect(m: usize) -> Result<Poly, Error> {
    let row = Partition::row(m);
    let lhs = &dim_gl(&row, &row)? * &Poly::t();
    let mut rhs = dim_gl(&Partition::row(m + 1), &row)?;
    if m > 0 {
        rhs = &rhs + &dim_gl(&Partition::new(vec![m, 1]), &row)?;
    }
    Ok(&lhs - &rhs)
}

/// The full rule `X_{m,m} ⊗ V = X_{m+1,m} ⊕ X_{(m,1),m} ⊕ X_{m,m−1}`:
/// tensoring with `V` adds a box to `λ` or removes one from `μ`.
pub fn verify_tensor_v_full(m: usize) -> Result<bool, Error> {
    let defect = tensor_v_defect(m)?;
    let contraction = match m {
        0 => Poly::zero(),
        _ => dim_gl(&Partition::row(m), &Partition::row(m - 1))?,
    };
    Ok(defect == contraction)
}

/// `dim(S^ℓV ⊗ S^ℓV*) = ∑_{m ≤ ℓ} dim X_{m,m}`.
pub fn verify_q_sequence(l: usize) -> Result<bool, Error> {
    let sym = binom_poly(&Poly::t_plus(int(l as i64 - 1)), l);
    let lhs = &sym * &sym;
    let mut rhs = Poly::zero();
    for m in 0..=l {
        rhs = &rhs + &dim_gl(&Partition::row(m), &Partition::row(m))?;
    }
    Ok(lhs == rhs)
}

/// Leading coefficient `d_λ d_μ / (∏ λ_i! ∏ μ_j!)` predicted for
/// [`dim_gl`], whose degree is `|λ| + |μ|`.
pub fn dim_gl_leading(lam: &Partition, mu: &Partition) -> Rat {
    let fact = |p: &Partition| {
        p.parts().iter().fold(BigInt::one(), |acc, &k| {
            acc * crate::arith::factorial(k as u64)
        })
    };
    lam.d_lambda() * mu.d_lambda() / Rat::from_integer(fact(lam) * fact(mu))
}
