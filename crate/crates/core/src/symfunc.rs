//! Symmetric group characters, Kronecker products of Schur functions and
//! principal specializations `s_λ(q, q², …)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorial, GeomTerm, Rat, Series};
use crate::par;
use crate::partitions::{partitions_of, Partition};
use crate::Error;

type CharMemo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static CharMemo {
    static MEMO: OnceLock<CharMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Irreducible character `χ^λ` at the class of cycle type `ρ`, by the
/// Murnaghan–Nakayama rule.
pub fn sn_character(lam: &Partition, rho: &Partition) -> Result<i64, Error> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch(lam.size(), rho.size()));
    }
    Ok(mn(lam, rho.parts()))
}

fn mn(lam: &Partition, rho: &[usize]) -> i64 {
    let Some((&k, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (lam.clone(), Partition::new(rho.to_vec()));
    if let Some(&v) = memo().read().expect("memo poisoned").get(&key) {
        return v;
    }
    let value = rim_hook_removals(lam, k)
        .into_iter()
        .map(|(sign, smaller)| sign * mn(&smaller, rest))
        .sum();
    // Concurrent fills of the same key write the same value.
    memo().write().expect("memo poisoned").insert(key, value);
    value
}

/// Every way to strip a border strip of length `k` from `λ`, with the sign
/// `(−1)^{height}`. Works on the beta-set (first-column hook lengths), where
/// a strip removal moves one bead down by `k` to an empty position.
fn rim_hook_removals(lam: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let l = lam.len();
    let beta: Vec<usize> = (0..l).map(|i| lam.part(i) + l - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts = nb.iter().enumerate().map(|(i, &x)| x + i + 1 - l).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::new(parts)));
    }
    out
}

/// Number of permutations of cycle type `ρ`: `n! / ∏ j^{m_j} m_j!`.
pub fn class_size(rho: &Partition) -> BigInt {
    let mut mult: BTreeMap<usize, u64> = BTreeMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_default() += 1;
    }
    let den = mult.iter().fold(BigInt::one(), |acc, (&j, &m)| {
        acc * BigInt::from(j).pow(m as u32) * factorial(m)
    });
    factorial(rho.size() as u64) / den
}

/// Symmetric function of fixed degree in the Schur basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpr {
    degree: usize,
    terms: BTreeMap<Partition, Rat>,
}

impl SchurExpr {
    pub fn zero(degree: usize) -> Self {
        SchurExpr {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn schur(lam: &Partition) -> Self {
        let mut e = SchurExpr::zero(lam.size());
        e.terms.insert(lam.clone(), Rat::one());
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, lam: Partition, c: Rat) -> Result<(), Error> {
        if lam.size() != self.degree {
            return Err(Error::SizeMismatch(self.degree, lam.size()));
        }
        let entry = self.terms.entry(lam).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn coeff(&self, lam: &Partition) -> Rat {
        self.terms.get(lam).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms with the dominance-largest partitions first: `(3), (2,1), (1,1,1)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for SchurExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(lam, c)| {
                let label = if lam.is_empty() {
                    "s[]".to_string()
                } else {
                    format!("s[{lam}]")
                };
                if c.is_one() {
                    label
                } else {
                    format!("{c}*{label}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Kronecker product `s_λ * s_μ = ∑_ν g_{λμν} s_ν`, summing over
/// conjugacy classes rather than permutations.
pub fn kronecker(lam: &Partition, mu: &Partition) -> Result<SchurExpr, Error> {
    let n = lam.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(n, mu.size()));
    }
    let classes = partitions_of(n);
    let weights: Vec<BigInt> = classes
        .iter()
        .map(|rho| {
            class_size(rho) * BigInt::from(mn(lam, rho.parts())) * BigInt::from(mn(mu, rho.parts()))
        })
        .collect();
    let order = factorial(n as u64);
    let coeffs = par::map(&classes, |nu| {
        classes
            .iter()
            .zip(&weights)
            .fold(BigInt::zero(), |acc, (rho, w)| {
                acc + w * BigInt::from(mn(nu, rho.parts()))
            })
    });
    let mut out = SchurExpr::zero(n);
    for (nu, total) in classes.into_iter().zip(coeffs) {
        let (g, r) = total.div_rem(&order);
        assert!(
            r.is_zero(),
            "non-integral Kronecker coefficient for {lam:?} * {mu:?} at {nu:?}"
        );
        if !g.is_zero() {
            out.terms.insert(nu, Rat::from_integer(g));
        }
    }
    Ok(out)
}

/// `s_λ(q, q², …) = q^{|λ|+n(λ)} / ∏_{cells} (1 − q^{hook})` modulo `q^{trunc+1}`.
pub fn principal_spec(lam: &Partition, trunc: usize) -> Series<Rat> {
    let lead = lam.size() + lam.n_stat();
    if lead > trunc {
        return Series::zero(trunc);
    }
    let terms: Vec<GeomTerm<Rat>> = lam
        .hooks()
        .into_iter()
        .map(|h| GeomTerm::unit(h, -1))
        .collect();
    let denom_inv = crate::arith::geom_product(&terms, trunc).expect("hooks are positive");
    denom_inv.shift(lead)
}

/// Linear extension of [`principal_spec`].
pub fn principal_spec_expr(f: &SchurExpr, trunc: usize) -> Series<Rat> {
    f.terms().fold(Series::zero(trunc), |acc, (lam, c)| {
        acc.add(&principal_spec(lam, trunc).scale(c))
            .expect("same truncation")
    })
}
