//! Interpolated quantities against classical computations done from scratch.

use std::collections::HashSet;

use deligne::affine::{c_finite, c_infinity, c_infinity_tilde, stabilization_check};
use deligne::arith::{geom_product, GeomTerm, Rat, Series};
use deligne::center::chi_gl_partitions;
use deligne::dims::{dim_gl, dim_o};
use deligne::invariants::{harmonic_hilbert, necklace_generators, NecklaceFamily, Variant};
use deligne::partitions::{
    padded_weight, partitions_of, partitions_up_to, IntegerWeight, Partition,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

fn r(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `∏_{i<j} (w_i − w_j + j − i)/(j − i)`.
fn weyl_gl(w: &[i64]) -> Rat {
    let mut acc = r(1);
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let d = (j - i) as i64;
            acc *= Rat::new((w[i] - w[j] + d).into(), d.into());
        }
    }
    acc
}

#[test]
fn gl_dimensions_match_weyl() {
    let ps = partitions_up_to(4);
    for l in &ps {
        for m in &ps {
            let d = dim_gl(l, m).unwrap();
            for n in (l.len() + m.len()).max(1)..=12 {
                let mut w = vec![0i64; n];
                for (i, &x) in l.parts().iter().enumerate() {
                    w[i] = x as i64;
                }
                for (j, &y) in m.parts().iter().enumerate() {
                    w[n - 1 - j] = -(y as i64);
                }
                assert_eq!(d.eval_int(n as i64), weyl_gl(&w), "{l};{m} at {n}");
            }
        }
    }
}

/// Weyl dimension of the `SO_n` irreducible with highest weight `λ`, for
/// `len(λ) < n/2` so that it is also irreducible for `O_n`.
fn weyl_o(lam: &Partition, n: usize) -> Rat {
    let m = n / 2;
    let half = Rat::new(1.into(), 2.into());
    let rho: Vec<Rat> = (0..m)
        .map(|i| {
            if n % 2 == 1 {
                r((m - i) as i64) - &half
            } else {
                r((m - i - 1) as i64)
            }
        })
        .collect();
    let l: Vec<Rat> = (0..m).map(|i| r(lam.part(i) as i64) + &rho[i]).collect();
    let mut acc = r(1);
    for i in 0..m {
        for j in i + 1..m {
            acc *= (&l[i] * &l[i] - &l[j] * &l[j]) / (&rho[i] * &rho[i] - &rho[j] * &rho[j]);
        }
        if n % 2 == 1 {
            acc *= &l[i] / &rho[i];
        }
    }
    acc
}

#[test]
fn o_dimensions_match_weyl() {
    for l in partitions_up_to(4) {
        let d = dim_o(&l).unwrap();
        for n in 2 * l.len() + 1..=12 {
            assert_eq!(d.eval_int(n as i64), weyl_o(&l, n), "{l} at {n}");
        }
    }
}

fn canonical(w: &[u8], reversal: bool) -> Vec<u8> {
    let j = w.len();
    let mut best = w.to_vec();
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    let words: Vec<&[u8]> = if reversal { vec![w, &rev] } else { vec![w] };
    for v in words {
        for k in 0..j {
            let rot: Vec<u8> = v[k..].iter().chain(&v[..k]).copied().collect();
            best = best.min(rot);
        }
    }
    best
}

fn all_words(m: u8, j: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..j {
        out = out
            .into_iter()
            .flat_map(|w| (0..m).map(move |c| [w.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

#[test]
fn necklace_counts_match_brute_force() {
    for m in 1..=3u8 {
        for j in 1..=8 {
            let words = all_words(m, j);
            let gl: HashSet<Vec<u8>> = words.iter().map(|w| canonical(w, false)).collect();
            let osp: HashSet<Vec<u8>> = words
                .iter()
                .map(|w| canonical(w, true))
                .filter(|c| {
                    let rev: Vec<u8> = c.iter().rev().copied().collect();
                    j % 2 == 0 || canonical(&rev, false) != canonical(c, false)
                })
                .collect();
            let fam = |v| NecklaceFamily::new(v, m as usize).unwrap();
            assert_eq!(
                necklace_generators(fam(Variant::Gl), j).unwrap(),
                BigInt::from(gl.len()),
                "gl m={m} j={j}"
            );
            assert_eq!(
                necklace_generators(fam(Variant::OSp), j).unwrap(),
                BigInt::from(osp.len()),
                "osp m={m} j={j}"
            );
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let inv = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `∑_w (−1)^w q^{(ν+ρ−wρ)²/2} / ∏ (1 − q^j)^{n−1}`.
fn c_finite_alternating(nu: &[i64], trunc: usize) -> Series<Rat> {
    let n = nu.len();
    let mut num = vec![r(0); trunc + 1];
    for w in permutations(n) {
        let norm: i64 = (0..n)
            .map(|i| (nu[i] + w[i] as i64 - i as i64).pow(2))
            .sum();
        assert_eq!(norm % 2, 0);
        let e = (norm / 2) as usize;
        if e <= trunc {
            num[e] += r(sign(&w));
        }
    }
    let eta: Vec<_> = (1..=trunc)
        .map(|j| GeomTerm::unit(j, -(n as i64 - 1)))
        .collect();
    Series::new(num, trunc)
        .mul(&geom_product(&eta, trunc).unwrap())
        .unwrap()
}

#[test]
fn affine_product_matches_alternating_sum() {
    let weights: [&[i64]; 6] = [
        &[0, 0],
        &[1, -1],
        &[0, 0, 0],
        &[1, 0, -1],
        &[2, -1, -1],
        &[1, 1, -1, -1],
    ];
    for w in weights {
        let nu = IntegerWeight(w.to_vec());
        assert_eq!(
            c_finite(&nu, 10).unwrap(),
            c_finite_alternating(w, 10),
            "{w:?}"
        );
    }
    for n in 2..=5 {
        let nu = padded_weight(&Partition::row(1), &Partition::row(1), n).unwrap();
        assert_eq!(
            c_finite(&nu, 8).unwrap(),
            c_finite_alternating(nu.entries(), 8),
            "adjoint at {n}"
        );
    }
}

#[test]
fn affine_coefficients_are_multiplicities() {
    for l in partitions_up_to(3) {
        for m in partitions_of(l.size()) {
            for s in [
                c_infinity(&l, &m, 10).unwrap(),
                c_infinity_tilde(&l, &m, 10).unwrap(),
            ] {
                assert!(
                    s.coeffs()
                        .iter()
                        .all(|c| c.is_integer() && !c.is_negative()),
                    "{l};{m}: {s}"
                );
            }
        }
    }
}

#[test]
fn finite_characters_stay_stable() {
    let pairs = [
        (Partition::empty(), Partition::empty()),
        (Partition::row(1), Partition::row(1)),
        (Partition::row(2), Partition::new(vec![1, 1])),
    ];
    for (l, m) in pairs {
        let trunc = 6;
        let start = stabilization_check(&l, &m, trunc, None).unwrap();
        let limit = c_infinity(&l, &m, trunc).unwrap();
        for n in start..=2 * trunc + l.size() + 4 {
            assert_eq!(
                c_finite(&padded_weight(&l, &m, n).unwrap(), trunc).unwrap(),
                limit,
                "{l};{m} at {n}"
            );
        }
    }
}

#[test]
fn harmonic_coefficients_are_multiplicities() {
    for n in 0..=5 {
        let ps = partitions_of(n);
        for l in &ps {
            for m in &ps {
                let h = harmonic_hilbert(l, m, 12).unwrap();
                assert!(
                    h.coeffs()
                        .iter()
                        .all(|c| c.is_integer() && !c.is_negative()),
                    "{l};{m}"
                );
                assert!(
                    h.coeffs()[..n].iter().all(Zero::is_zero),
                    "{l};{m} starts below q^{n}"
                );
            }
        }
    }
}

#[test]
fn central_characters_separate_small_labels() {
    let ps = partitions_up_to(4);
    let mut seen = HashSet::new();
    for l in &ps {
        for m in &ps {
            let chi = chi_gl_partitions(l, m, 8);
            assert!(seen.insert(format!("{chi}")), "{l};{m} collides");
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

mod props {
    use deligne::partitions::Partition;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn conjugation_is_an_involution(parts in prop::collection::vec(0usize..8, 0..8)) {
            let p = Partition::new(parts);
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().size(), p.size());
            prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        }
    }
}
