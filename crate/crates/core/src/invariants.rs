//! Hilbert series of invariants: necklace generators of multi-matrix
//! invariants, harmonic parts via Kronecker products, and the Kostant-type
//! identity tying them to dimension polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::arith::{binom_poly, geom_product, GeomTerm, Poly, Rat, Series};
use crate::dims::dim_gl;
use crate::par;
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{kronecker, principal_spec_expr};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    /// Cyclic words.
    Gl,
    /// Cyclic words up to reversal, odd self-reverse ones dropped.
    OSp,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NecklaceFamily {
    pub variant: Variant,
    pub letters: usize,
}

impl NecklaceFamily {
    pub fn new(variant: Variant, letters: usize) -> Result<Self, Error> {
        if letters == 0 {
            return Err(Error::InvalidArgument(
                "at least one letter is needed".into(),
            ));
        }
        Ok(NecklaceFamily { variant, letters })
    }
}

/// Words up to this many are enumerated; longer ones use counting formulas.
const ENUMERATION_LIMIT: u64 = 531_441;

fn decode(mut code: u64, m: u64, j: usize, out: &mut [u8]) {
    for slot in out.iter_mut().take(j).rev() {
        *slot = (code % m) as u8;
        code /= m;
    }
}

/// `w` is the least of its rotations (and reversed rotations when
/// `with_reversal`).
fn is_canonical(w: &[u8], with_reversal: bool) -> bool {
    let j = w.len();
    let rotations_ge =
        |v: &[u8]| (0..j).all(|r| v[r..].iter().chain(&v[..r]).cmp(w.iter()).is_ge());
    if !rotations_ge(w) {
        return false;
    }
    if with_reversal {
        let rev: Vec<u8> = w.iter().rev().copied().collect();
        return rotations_ge(&rev);
    }
    true
}

fn is_self_reverse(w: &[u8]) -> bool {
    let j = w.len();
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    (0..j).any(|r| rev[r..].iter().chain(&rev[..r]).eq(w.iter()))
}

fn enumerate(family: NecklaceFamily, j: usize) -> BigInt {
    let m = family.letters as u64;
    let total = m.pow(j as u32);
    let chunk = 4096u64;
    let chunks = total.div_ceil(chunk) as usize;
    let osp = family.variant == Variant::OSp;
    let counts = par::map_range(chunks, |c| {
        let mut w = vec![0u8; j];
        let mut count = 0u64;
        let start = c as u64 * chunk;
        for code in start..(start + chunk).min(total) {
            decode(code, m, j, &mut w);
            if !is_canonical(&w, osp) {
                continue;
            }
            if osp && j % 2 == 1 && is_self_reverse(&w) {
                continue;
            }
            count += 1;
        }
        count
    });
    BigInt::from(counts.into_iter().sum::<u64>())
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Necklaces of length `j` over `m` letters, `(1/j) ∑_{d|j} φ(d) m^{j/d}`.
pub fn necklace_count(m: usize, j: usize) -> BigInt {
    let mb = BigInt::from(m);
    let j64 = j as u64;
    let sum: BigInt = (1..=j64)
        .filter(|d| j64 % d == 0)
        .map(|d| BigInt::from(euler_phi(d)) * Pow::pow(&mb, (j64 / d) as u32))
        .sum();
    sum / BigInt::from(j)
}

fn formula(family: NecklaceFamily, j: usize) -> BigInt {
    let m = BigInt::from(family.letters);
    let n = necklace_count(family.letters, j);
    match family.variant {
        Variant::Gl => n,
        Variant::OSp if j % 2 == 1 => (n - Pow::pow(&m, (j as u32 + 1) / 2)) / 2,
        Variant::OSp => {
            let sym = (&m + 1) * Pow::pow(&m, j as u32 / 2);
            (n * 2 + sym) / 4
        }
    }
}

/// Number of degree-`j` generators `C_w` of the invariant algebra.
pub fn necklace_generators(family: NecklaceFamily, j: usize) -> Result<BigInt, Error> {
    if j == 0 {
        return Err(Error::InvalidArgument(
            "generator degree must be positive".into(),
        ));
    }
    let words = (family.letters as u64).checked_pow(j as u32);
    if words.is_some_and(|w| w <= ENUMERATION_LIMIT) && family.letters <= u8::MAX as usize {
        Ok(enumerate(family, j))
    } else {
        Ok(formula(family, j))
    }
}

/// Necklace counts through the closed formulas only.
pub fn necklace_generators_formula(family: NecklaceFamily, j: usize) -> Result<BigInt, Error> {
    if j == 0 {
        return Err(Error::InvalidArgument(
            "generator degree must be positive".into(),
        ));
    }
    Ok(formula(family, j))
}

/// Multiplies by `(1 − q^a)^{−e}` using `∑_k binom(e+k−1, k) q^{ak}`,
/// which stays cheap when `e` is huge.
fn mul_free_generators(s: &mut Series<Rat>, a: usize, e: &BigInt) {
    let n = s.trunc();
    if e.is_zero() || a > n {
        return;
    }
    if let Some(small) = e.to_i64().filter(|&x| x <= 4) {
        s.mul_geom(a, -small, &Rat::one())
            .expect("positive exponent");
        return;
    }
    let mut factor = vec![Rat::zero(); n + 1];
    let mut c = Rat::one();
    for k in 0..=n / a {
        factor[k * a] = c.clone();
        c = c * Rat::from_integer(e + k) / Rat::from_integer(BigInt::from(k + 1));
    }
    *s = s.mul(&Series::new(factor, n)).expect("same truncation");
}

/// Hilbert series of the free commutative algebra on the necklace
/// generators.
pub fn hilb_multi_inv(family: NecklaceFamily, trunc: usize) -> Result<Series<Rat>, Error> {
    let counts = par::map_range(trunc, |k| necklace_generators(family, k + 1));
    let mut s = Series::one(trunc);
    for (k, a) in counts.into_iter().enumerate() {
        mul_free_generators(&mut s, k + 1, &a?);
    }
    Ok(s)
}

/// `∏_{j≥1} (1 − m q^j)^{−1}`.
pub fn hilser_closed_form(m: usize, trunc: usize) -> Series<Rat> {
    let scale = Rat::from_integer(m.into());
    let terms: Vec<_> = (1..=trunc)
        .map(|j| GeomTerm::new(j, -1, scale.clone()))
        .collect();
    geom_product(&terms, trunc).expect("positive exponents")
}

pub fn verify_hilser(m: usize, trunc: usize) -> Result<bool, Error> {
    let family = NecklaceFamily::new(Variant::Gl, m)?;
    Ok(hilb_multi_inv(family, trunc)? == hilser_closed_form(m, trunc))
}

/// Graded multiplicity of `X_{λ,μ}` in the harmonic part, `(s_λ * s_μ)(q, q², …)`.
pub fn harmonic_hilbert(
    lam: &Partition,
    mu: &Partition,
    trunc: usize,
) -> Result<Series<Rat>, Error> {
    Ok(principal_spec_expr(&kronecker(lam, mu)?, trunc))
}

/// `binom(dim_g + d − 1, d)` for `d = 0..=trunc`.
pub fn sym_alg_hilbert(dim_g: &Poly, trunc: usize) -> Vec<Poly> {
    (0..=trunc)
        .map(|d| {
            binom_poly(
                &(dim_g + &Poly::constant(Rat::from_integer((d as i64 - 1).into()))),
                d,
            )
        })
        .collect()
}

fn euler_product(trunc: usize) -> Series<Poly> {
    let terms: Vec<_> = (1..=trunc).map(|j| GeomTerm::unit(j, 1)).collect();
    geom_product(&terms, trunc)
        .expect("positive exponents")
        .map(|c| Poly::constant(c.clone()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KostantRhs {
    /// `Hilb(S𝔤) · ∏(1 − q^j)` with `dim 𝔤 = t²`.
    Corrected,
    /// `1/(1 − q t²) · ∏(1 − q^j)`, as printed.
    Printed,
}

/// `∑_{|λ|=|μ|} harmonic_hilbert(λ,μ) · dim X_{λ,μ}` modulo `q^{trunc+1}`.
///
/// Only labels with `|λ| ≤ trunc` contribute since the harmonic series of
/// `(λ, μ)` starts at `q^{|λ|}`.
pub fn kostant_lhs(trunc: usize) -> Result<Series<Poly>, Error> {
    let pairs: Vec<(Partition, Partition)> = (0..=trunc)
        .flat_map(|n| {
            let ps = partitions_of(n);
            ps.iter()
                .flat_map(|l| ps.iter().map(move |m| (l.clone(), m.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let terms = par::map(&pairs, |(l, m)| -> Result<Series<Poly>, Error> {
        let h = harmonic_hilbert(l, m, trunc)?;
        let d = dim_gl(l, m)?;
        Ok(h.map(|c| d.scale(c)))
    });
    terms
        .into_iter()
        .try_fold(Series::zero(trunc), |acc, s| acc.add(&s?))
}

pub fn kostant_rhs(which: KostantRhs, trunc: usize) -> Series<Poly> {
    let first = match which {
        KostantRhs::Corrected => Series::new(
            sym_alg_hilbert(&Poly::monomial(Rat::one(), 2), trunc),
            trunc,
        ),
        KostantRhs::Printed => Series::new(
            (0..=trunc)
                .map(|d| Poly::monomial(Rat::one(), 2 * d))
                .collect(),
            trunc,
        ),
    };
    first.mul(&euler_product(trunc)).expect("same truncation")
}

/// Coefficient-wise comparison of both sides of the Kostant identity.
#[derive(Clone, Debug)]
pub struct KostantReport {
    pub rhs_kind: KostantRhs,
    pub lhs: Series<Poly>,
    pub rhs: Series<Poly>,
    /// Least `q`-degree at which the sides differ.
    pub first_mismatch: Option<usize>,
}

impl KostantReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for KostantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_mismatch {
            None => write!(f, "identity holds modulo q^{}", self.lhs.trunc() + 1),
            Some(k) => write!(
                f,
                "mismatch at q^{k}: lhs {} vs rhs {}",
                self.lhs.coeff(k),
                self.rhs.coeff(k)
            ),
        }
    }
}

pub fn kostant_report(trunc: usize, which: KostantRhs) -> Result<KostantReport, Error> {
    let lhs = kostant_lhs(trunc)?;
    let rhs = kostant_rhs(which, trunc);
    let first_mismatch = (0..=trunc).find(|&k| lhs.coeff(k) != rhs.coeff(k));
    Ok(KostantReport {
        rhs_kind: which,
        lhs,
        rhs,
        first_mismatch,
    })
}

pub fn kostant_identity_check(trunc: usize) -> Result<bool, Error> {
    Ok(kostant_report(trunc, KostantRhs::Corrected)?.passed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, BinomialForm};

    fn fam(v: Variant, m: usize) -> NecklaceFamily {
        NecklaceFamily::new(v, m).unwrap()
    }

    fn ints(v: &[i64], n: usize) -> Series<Rat> {
        Series::new(v.iter().map(|&c| rat(c, 1)).collect(), n)
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(
            necklace_generators(fam(Variant::Gl, 2), 2).unwrap(),
            BigInt::from(3)
        );
        for j in 1..=9 {
            assert_eq!(
                necklace_generators(fam(Variant::Gl, 1), j).unwrap(),
                BigInt::one()
            );
        }
        assert_eq!(
            necklace_generators(fam(Variant::OSp, 1), 3).unwrap(),
            BigInt::zero()
        );
        assert!(necklace_generators(fam(Variant::Gl, 2), 0).is_err());
    }

    #[test]
    fn enumeration_matches_formulas() {
        for m in 1..=3 {
            for j in 1..=10 {
                for v in [Variant::Gl, Variant::OSp] {
                    let f = fam(v, m);
                    assert_eq!(enumerate(f, j), formula(f, j), "{v:?} m={m} j={j}");
                }
            }
        }
    }

    #[test]
    fn multi_invariant_series() {
        let gl1 = hilb_multi_inv(fam(Variant::Gl, 1), 4).unwrap();
        assert_eq!(gl1, ints(&[1, 1, 2, 3, 5], 4));
        assert_eq!(
            hilb_multi_inv(fam(Variant::Gl, 2), 4).unwrap().coeff(2),
            rat(6, 1)
        );
        let osp1 = hilb_multi_inv(fam(Variant::OSp, 1), 8).unwrap();
        let evens: Vec<_> = (1..=4).map(|k| GeomTerm::unit(2 * k, -1)).collect();
        assert_eq!(osp1, geom_product(&evens, 8).unwrap());
        assert!(verify_hilser(1, 10).unwrap());
        assert!(verify_hilser(2, 8).unwrap());
        assert!(verify_hilser(3, 6).unwrap());
    }

    #[test]
    fn large_exponents_use_the_binomial_series() {
        // 4 letters, length 11: past the enumeration limit.
        assert!(verify_hilser(4, 11).unwrap());
    }

    #[test]
    fn harmonic_examples() {
        let one = Partition::row(1);
        let mut q_over = vec![1; 7];
        q_over[0] = 0;
        assert_eq!(harmonic_hilbert(&one, &one, 6).unwrap(), ints(&q_over, 6));
        let e = Partition::empty();
        assert_eq!(harmonic_hilbert(&e, &e, 5).unwrap(), Series::one(5));
        // q^3/((1-q)(1-q^2))
        let expected = ints(&[0, 0, 0, 1, 1, 2, 2, 3], 7);
        let two = Partition::row(2);
        let cols = Partition::new(vec![1, 1]);
        assert_eq!(harmonic_hilbert(&two, &cols, 7).unwrap(), expected);
        assert!(harmonic_hilbert(&two, &one, 4).is_err());
    }

    #[test]
    fn sym_alg_examples() {
        let t2 = Poly::monomial(Rat::one(), 2);
        let s = sym_alg_hilbert(&t2, 2);
        assert_eq!(s[1], t2);
        assert_eq!(
            s[2],
            Poly::new(vec![rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1), rat(1, 2)])
        );
        assert!(sym_alg_hilbert(&Poly::one(), 6).iter().all(|p| p.is_one()));
    }

    #[test]
    fn kostant() {
        let r = kostant_report(2, KostantRhs::Corrected).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs.coeff(1), Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(
            r.lhs.coeff(2),
            Poly::new(vec![
                rat(-1, 1),
                rat(0, 1),
                rat(-1, 2),
                rat(0, 1),
                rat(1, 2)
            ])
        );
        let printed = kostant_report(2, KostantRhs::Printed).unwrap();
        assert_eq!(printed.first_mismatch, Some(2));
        assert_eq!(printed.rhs.coeff(2), Poly::from_ints(&[-1, 0, -1, 0, 1]));
        assert!(kostant_identity_check(4).unwrap());
    }

    #[test]
    fn harmonic_part_is_integer_valued() {
        let s = kostant_rhs(KostantRhs::Corrected, 8);
        for c in s.coeffs() {
            BinomialForm::from_poly(c).unwrap();
        }
    }
}
