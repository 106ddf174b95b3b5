//! Exact arithmetic: rationals, polynomials and rational functions in the
//! rank parameter `t`, truncated power series in `q`, and integer-valued
//! polynomials in the binomial basis.

mod binomial;
mod interp;
mod poly;
mod rat;
mod ratfunc;
mod series;

pub use binomial::{binom_poly, BinomialForm};
pub use interp::interpolate;
pub use poly::{Poly, RationalRoots};
pub use rat::{factorial, parse_rat, rat, rat_from_big, Rat};
pub use ratfunc::RatFunc;
pub use series::{geom_product, GeomTerm, Series, SeriesQ, DEFAULT_TRUNC};

/// Minimal commutative-ring interface shared by every coefficient type that
/// can sit inside a [`Series`].
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, when one exists in the coefficient ring.
    fn try_inv(&self) -> Option<Self>;
    fn from_rat(r: &Rat) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}
