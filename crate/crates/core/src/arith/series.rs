use std::fmt;

use super::{Coeff, Rat, RatFunc};
use crate::Error;

/// Truncation order used when a caller does not ask for one.
pub const DEFAULT_TRUNC: usize = 16;

/// Power series in `q` known modulo `q^{trunc+1}`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

/// Series whose coefficients are rational functions of `t`.
pub type SeriesQ = Series<RatFunc>;

impl<C: Coeff> Series<C> {
    /// Pads with zeros or drops terms so that exactly `trunc + 1`
    /// coefficients remain.
    pub fn new(mut coeffs: Vec<C>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, C::zero());
        Series { coeffs }
    }

    pub fn zero(trunc: usize) -> Self {
        Series::new(Vec::new(), trunc)
    }

    pub fn one(trunc: usize) -> Self {
        Series::new(vec![C::one()], trunc)
    }

    /// `c · q^k`
    pub fn monomial(c: C, k: usize, trunc: usize) -> Self {
        let mut s = Series::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The same series known to a lower order.
    pub fn truncate(&self, trunc: usize) -> Self {
        assert!(trunc <= self.trunc(), "cannot raise truncation order");
        Series {
            coeffs: self.coeffs[..=trunc].to_vec(),
        }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.trunc() == other.trunc() {
            Ok(())
        } else {
            Err(Error::TruncationMismatch(self.trunc(), other.trunc()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(Coeff::neg).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Truncated convolution.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let n = self.trunc();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Inverse modulo `q^{trunc+1}` by the standard triangular recursion.
    pub fn inv(&self) -> Result<Self, Error> {
        let c0_inv = self.coeffs[0].try_inv().ok_or(Error::NotInvertible)?;
        let n = self.trunc();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(c0_inv.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
                }
            }
            out.push(acc.mul(&c0_inv).neg());
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.trunc();
        let mut coeffs = vec![C::zero(); n + 1];
        for i in k..=n {
            coeffs[i] = self.coeffs[i - k].clone();
        }
        Series { coeffs }
    }

    /// In-place multiplication by `(1 − scale·q^exponent)^power`.
    ///
    /// Each unit of positive power is one O(N) sparse update; each unit of
    /// negative power is one O(N) pass of the geometric recursion
    /// `c_k += scale·c_{k−a}`.
    pub fn mul_geom(&mut self, exponent: usize, power: i64, scale: &C) -> Result<(), Error> {
        if exponent == 0 {
            return Err(Error::ZeroExponent);
        }
        let n = self.trunc();
        if exponent > n || scale.is_zero() {
            return Ok(());
        }
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                for k in (exponent..=n).rev() {
                    let d = scale.mul(&self.coeffs[k - exponent]);
                    self.coeffs[k] = self.coeffs[k].sub(&d);
                }
            } else {
                for k in exponent..=n {
                    let d = scale.mul(&self.coeffs[k - exponent]);
                    self.coeffs[k] = self.coeffs[k].add(&d);
                }
            }
        }
        Ok(())
    }
}

/// One factor `(1 − scale·q^exponent)^power` of a [`geom_product`].
#[derive(Clone, Debug)]
pub struct GeomTerm<C> {
    pub exponent: usize,
    pub power: i64,
    pub scale: C,
}

impl<C: Coeff> GeomTerm<C> {
    pub fn new(exponent: usize, power: i64, scale: C) -> Self {
        GeomTerm {
            exponent,
            power,
            scale,
        }
    }
}

impl GeomTerm<Rat> {
    /// `(1 − q^exponent)^power`
    pub fn unit(exponent: usize, power: i64) -> Self {
        GeomTerm {
            exponent,
            power,
            scale: <Rat as Coeff>::one(),
        }
    }
}

/// The truncated product `∏ (1 − m_j q^{a_j})^{e_j}`.
pub fn geom_product<C: Coeff>(terms: &[GeomTerm<C>], trunc: usize) -> Result<Series<C>, Error> {
    let mut s = Series::one(trunc);
    for term in terms {
        s.mul_geom(term.exponent, term.power, &term.scale)?;
    }
    Ok(s)
}

impl<C: Coeff + fmt::Display> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let simple = !text.contains(' ');
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ if simple => (false, text.clone()),
                _ => (false, format!("({text})")),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = body == "1";
            match (k, unit) {
                (0, _) => f.write_str(&body)?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{body}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{body}*q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}
