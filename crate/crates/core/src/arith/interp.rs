use num_traits::Zero;

use super::{Poly, Rat};
use crate::Error;

/// The unique polynomial of degree at most `degree_bound` through the given
/// samples. Samples beyond the first `degree_bound + 1` are used as
/// consistency checks.
pub fn interpolate(samples: &[(i64, Rat)], degree_bound: usize) -> Result<Poly, Error> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(Error::TooFewSamples {
            needed,
            got: samples.len(),
        });
    }
    let nodes: Vec<Rat> = samples
        .iter()
        .map(|(x, _)| Rat::from_integer((*x).into()))
        .collect();
    for i in 0..samples.len() {
        if samples[..i].iter().any(|(x, _)| *x == samples[i].0) {
            return Err(Error::DuplicateNode(samples[i].0));
        }
    }

    // Newton divided differences on the first `needed` nodes.
    let mut table: Vec<Rat> = samples[..needed].iter().map(|(_, v)| v.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    let mut p = Poly::zero();
    for i in (0..needed).rev() {
        p = &(&p * &Poly::t_plus(-nodes[i].clone())) + &Poly::constant(table[i].clone());
    }

    for (x, v) in &samples[needed..] {
        if !(p.eval_int(*x) - v).is_zero() {
            return Err(Error::InconsistentSamples { node: *x });
        }
    }
    Ok(p)
}
