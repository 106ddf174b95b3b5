//! Central characters of the Duflo-normalized generators `C_i` of the center,
//! evaluated on the interpolated representations of Rep(GL_t).

use std::fmt;

use num_traits::Zero;

use crate::arith::{interpolate, Poly, Rat};
use crate::par;
use crate::partitions::{partitions_up_to, Partition};

/// Modified Bernoulli polynomial: interpolates `n ↦ ∑_{k=1}^n ((n+1)/2 − k)^i`.
pub fn bernoulli_p(i: usize) -> Poly {
    let samples: Vec<(i64, Rat)> = (1..=i as i64 + 3)
        .map(|n| (n, bernoulli_sum(i, n)))
        .collect();
    interpolate(&samples, i + 1).expect("power sums are polynomial of degree i+1")
}

/// The defining sum of [`bernoulli_p`] at an integer `n ≥ 0`.
pub fn bernoulli_sum(i: usize, n: i64) -> Rat {
    let mid = Rat::new((n + 1).into(), 2.into());
    (1..=n)
        .map(|k| pow(&(&mid - Rat::from_integer(k.into())), i))
        .sum()
}

fn pow(x: &Rat, i: usize) -> Rat {
    num_traits::pow(x.clone(), i)
}

/// `χ(C_1), …, χ(C_imax)` as polynomials in `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralCharacter {
    values: Vec<Poly>,
}

impl CentralCharacter {
    pub fn new(values: Vec<Poly>) -> Self {
        CentralCharacter { values }
    }

    pub fn imax(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Poly] {
        &self.values
    }

    /// `χ(C_i)` for `1 ≤ i ≤ imax`.
    pub fn value(&self, i: usize) -> Option<&Poly> {
        i.checked_sub(1).and_then(|k| self.values.get(k))
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "C_{}: {}", k + 1, v)?;
        }
        Ok(())
    }
}

/// `(a + b·t)^i − (c + b·t)^i`, the contribution of one row.
fn row_term(shift: &Rat, base: &Poly, i: usize) -> Poly {
    let moved = base + &Poly::constant(shift.clone());
    &moved.pow(i as u32) - &base.pow(i as u32)
}

/// Central character of the label `(λ, μ)`; the entries may be arbitrary
/// rationals.
pub fn chi_gl(lam: &[Rat], mu: &[Rat], imax: usize) -> CentralCharacter {
    let half = Rat::new(1.into(), 2.into());
    // (t+1)/2 − j for λ, −(t+1)/2 + j for μ
    let lam_base = |j: i64| Poly::new(vec![&half - Rat::from_integer(j.into()), half.clone()]);
    let mu_base = |j: i64| Poly::new(vec![Rat::from_integer(j.into()) - &half, -half.clone()]);
    let values = (1..=imax)
        .map(|i| {
            let mut acc = bernoulli_p(i);
            for (j0, l) in lam.iter().enumerate() {
                acc = &acc + &row_term(l, &lam_base(j0 as i64 + 1), i);
            }
            for (j0, m) in mu.iter().enumerate() {
                acc = &acc + &row_term(&-m.clone(), &mu_base(j0 as i64 + 1), i);
            }
            acc
        })
        .collect();
    CentralCharacter { values }
}

pub fn chi_gl_partitions(lam: &Partition, mu: &Partition, imax: usize) -> CentralCharacter {
    let conv = |p: &Partition| -> Vec<Rat> {
        p.parts()
            .iter()
            .map(|&x| Rat::from_integer(x.into()))
            .collect()
    };
    chi_gl(&conv(lam), &conv(mu), imax)
}

/// Partition pairs with `|λ|, |μ| ≤ bound` whose central character agrees
/// with `chi`. An empty answer only means no witness within the bound.
pub fn sigma_probe(chi: &CentralCharacter, bound: usize) -> Vec<(Partition, Partition)> {
    let parts = partitions_up_to(bound);
    let pairs: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    // C_1 is cheap and already cuts most candidates.
    let c1 = chi.value(1).cloned();
    let hits = par::map(&pairs, |(l, m)| {
        if let Some(c1) = &c1 {
            let diff = l.size() as i64 - m.size() as i64;
            if c1 != &Poly::constant(Rat::from_integer(diff.into())) {
                return false;
            }
        }
        &chi_gl_partitions(l, m, chi.imax()) == chi
    });
    pairs
        .into_iter()
        .zip(hits)
        .filter_map(|(p, h)| h.then_some(p))
        .collect()
}

/// `χ_{λ,μ}(C_i)` at integer rank `n`, computed classically as
/// `∑_j (w_j + ρ_j)^i` with `w` the padded weight and `ρ_j = (n+1)/2 − j`.
pub fn classical_chi(weight: &[i64], i: usize) -> Rat {
    let n = weight.len() as i64;
    let mid = Rat::new((n + 1).into(), 2.into());
    weight
        .iter()
        .enumerate()
        .map(|(j0, &w)| {
            pow(
                &(Rat::from_integer(w.into()) + &mid - Rat::from_integer((j0 as i64 + 1).into())),
                i,
            )
        })
        .fold(Rat::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Series};
    use crate::partitions::padded_weight;
    use num_traits::One;

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_p(0), Poly::t());
        assert!(bernoulli_p(1).is_zero());
        let p2 = Poly::new(vec![rat(0, 1), rat(-1, 12), rat(0, 1), rat(1, 12)]);
        assert_eq!(bernoulli_p(2), p2);
        for i in 0..=8 {
            let p = bernoulli_p(i);
            for n in 1..=10 {
                assert_eq!(p.eval_int(n), bernoulli_sum(i, n), "i={i} n={n}");
            }
        }
    }

    /// `∑_i P_i(t) z^i / i!` against `sinh(tz/2)/sinh(z/2)`, in `ℚ[t][[z]]`.
    #[test]
    fn generating_function() {
        let trunc = 8;
        let sinh = |scale: Poly| -> Series<Poly> {
            let mut c = vec![Poly::zero(); trunc + 1];
            let mut fact = Rat::one();
            for k in 0..=trunc {
                if k > 0 {
                    fact *= Rat::from_integer((k as i64).into());
                }
                if k % 2 == 1 {
                    c[k] = scale.pow(k as u32).scale(&fact.recip());
                }
            }
            Series::new(c, trunc)
        };
        let half = rat(1, 2);
        // sinh(x)/z and its quotient avoid a zero constant term.
        let over_z = |s: Series<Poly>| Series::new(s.coeffs()[1..].to_vec(), trunc - 1);
        let num = over_z(sinh(Poly::monomial(half.clone(), 1)));
        let den = over_z(sinh(Poly::constant(half)));
        let gf = num.mul(&den.inv().unwrap()).unwrap();
        let mut fact = Rat::one();
        for i in 0..trunc {
            if i > 0 {
                fact *= Rat::from_integer((i as i64).into());
            }
            assert_eq!(gf.coeff(i).scale(&fact), bernoulli_p(i), "z^{i}");
        }
    }

    #[test]
    fn printed_generating_function_is_off_at_zero() {
        // sinh(z(t+1)/2)/sinh(z) at z → 0 is (t+1)/2, which is 3/2 at t = 2.
        assert_eq!(bernoulli_sum(0, 2), rat(2, 1));
        assert_ne!(rat(3, 2), bernoulli_sum(0, 2));
    }

    #[test]
    fn chi_examples() {
        let r = |v: &[i64]| v.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>();
        let c = chi_gl(&r(&[3]), &[], 3);
        assert_eq!(c.value(1).unwrap(), &Poly::constant(rat(3, 1)));
        let empty = chi_gl(&[], &[], 5);
        for i in 1..=5 {
            assert_eq!(empty.value(i).unwrap(), &bernoulli_p(i));
        }
        assert!(chi_gl(&r(&[1]), &r(&[1]), 1).value(1).unwrap().is_zero());
    }

    #[test]
    fn zero_parts_are_invisible() {
        let r = |v: &[i64]| v.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>();
        let a = chi_gl(&r(&[2, 1]), &r(&[1]), 4);
        let b = chi_gl(&r(&[2, 1, 0, 0]), &r(&[1, 0]), 4);
        assert_eq!(a, b);
    }

    #[test]
    fn interpolates_classical_values() {
        let ps = partitions_up_to(3);
        for l in &ps {
            for m in &ps {
                let chi = chi_gl_partitions(l, m, 4);
                for n in 8..=12 {
                    let w = padded_weight(l, m, n).unwrap();
                    for i in 1..=4 {
                        let at_n = chi.value(i).unwrap().eval_int(n as i64);
                        assert_eq!(at_n, classical_chi(w.entries(), i));
                        let rho_only = classical_chi(&vec![0; n], i);
                        assert_eq!(
                            &at_n - bernoulli_p(i).eval_int(n as i64),
                            classical_chi(w.entries(), i) - rho_only
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn probe_examples() {
        let one = Partition::row(1);
        let hits = sigma_probe(&chi_gl_partitions(&one, &one, 4), 3);
        assert!(hits.contains(&(one.clone(), one)));
        let e = Partition::empty();
        assert_eq!(
            sigma_probe(&chi_gl_partitions(&e, &e, 4), 2),
            vec![(e.clone(), e)]
        );
        let halves = chi_gl(&[rat(1, 2)], &[], 4);
        assert!(sigma_probe(&halves, 3).is_empty());
    }
}
