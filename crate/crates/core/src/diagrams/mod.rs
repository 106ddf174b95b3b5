//! Diagram calculus for Rep(GL_t) (walled Brauer diagrams) and Rep(O_t)
//! (Brauer diagrams).
//!
//! Morphisms are matchings of endpoints; composition stacks two matchings
//! and removes closed loops, each worth a factor of `t`. For generic `t` the
//! diagrams of a hom space form a basis; degeneration at integer `t` shows
//! up only in Gram determinants.

mod diagram;
mod element;
mod object;

use num_bigint::BigInt;
use num_traits::One;

pub use diagram::Diagram;
pub use element::DiagElement;
pub use object::{Family, Object, Strand};

use crate::arith::{Poly, Rat, RationalRoots};
use crate::par;
use crate::Error;

/// All basis diagrams `source → target` in a fixed order.
///
/// GL: bijections from outgoing to incoming endpoints, in lexicographic
/// order of the permutation. O: perfect matchings, pairing the lowest free
/// endpoint first.
pub fn hom_basis(source: &Object, target: &Object) -> Result<Vec<Diagram>, Error> {
    if source.family() != target.family() {
        return Err(Error::FamilyMismatch);
    }
    let total = source.len() + target.len();
    let mut out = Vec::new();
    match source.family() {
        Family::Gl => {
            let (outs, ins): (Vec<usize>, Vec<usize>) =
                (0..total).partition(|&e| diagram::is_outgoing(source, target, e));
            if outs.len() != ins.len() {
                return Ok(out);
            }
            for perm in permutations(outs.len()) {
                let mut partner = vec![0u32; total];
                for (i, &j) in perm.iter().enumerate() {
                    partner[outs[i]] = ins[j] as u32;
                    partner[ins[j]] = outs[i] as u32;
                }
                out.push(Diagram::from_partner(
                    source.clone(),
                    target.clone(),
                    partner,
                ));
            }
        }
        Family::O => {
            if total % 2 == 1 {
                return Ok(out);
            }
            let mut partner = vec![u32::MAX; total];
            matchings(&mut partner, &mut |p| {
                out.push(Diagram::from_partner(
                    source.clone(),
                    target.clone(),
                    p.to_vec(),
                ))
            });
        }
    }
    Ok(out)
}

/// Size of [`hom_basis`] without enumerating it: `m!` for GL when
/// `r1 + s2 = r2 + s1 = m`, `(2m − 1)!!` for O when `r1 + r2 = 2m`.
pub fn hom_dim(source: &Object, target: &Object) -> Result<BigInt, Error> {
    if source.family() != target.family() {
        return Err(Error::FamilyMismatch);
    }
    let total = source.len() + target.len();
    Ok(match source.family() {
        Family::Gl => {
            let outs = (0..total)
                .filter(|&e| diagram::is_outgoing(source, target, e))
                .count();
            if 2 * outs != total {
                BigInt::from(0)
            } else {
                crate::arith::factorial(outs as u64)
            }
        }
        Family::O if total % 2 == 1 => BigInt::from(0),
        Family::O => (1..total).step_by(2).fold(BigInt::one(), |acc, k| acc * k),
    })
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(m), &mut vec![false; m], &mut out);
    out
}

fn matchings(partner: &mut [u32], emit: &mut dyn FnMut(&[u32])) {
    let Some(a) = partner.iter().position(|&p| p == u32::MAX) else {
        emit(partner);
        return;
    };
    for b in a + 1..partner.len() {
        if partner[b] == u32::MAX {
            partner[a] = b as u32;
            partner[b] = a as u32;
            matchings(partner, emit);
            partner[a] = u32::MAX;
            partner[b] = u32::MAX;
        }
    }
}

/// The cup-cap idempotent-up-to-scalar `coev ∘ ev` on a two-strand object:
/// bottom endpoints joined to each other, top endpoints joined to each other.
pub fn cup_cap(obj: &Object) -> Result<Diagram, Error> {
    if obj.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "cup-cap needs a two-strand object, got {obj}"
        )));
    }
    Diagram::new(obj.clone(), obj.clone(), &[(0, 1), (2, 3)])
}

/// The crossing on a two-strand object.
pub fn crossing(obj: &Object) -> Result<Diagram, Error> {
    if obj.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "crossing needs a two-strand object, got {obj}"
        )));
    }
    Diagram::new(obj.clone(), obj.clone(), &[(0, 3), (1, 2)])
}

/// Gram matrix of the trace form on `End(obj)` with its determinant and
/// the rational roots of that determinant.
#[derive(Clone, Debug)]
pub struct GramReport {
    pub basis: Vec<Diagram>,
    /// `exponents[i][j] = k` means `tr(d_i ∘ d_j) = t^k`.
    pub exponents: Vec<Vec<usize>>,
    pub det: Poly,
    pub roots: RationalRoots,
}

pub fn gram_matrix_exponents(basis: &[Diagram]) -> Result<Vec<Vec<usize>>, Error> {
    let n = basis.len();
    let cells = par::map_range(n * n, |idx| {
        let (i, j) = (idx / n, idx % n);
        let (d, loops) = basis[i].compose(&basis[j])?;
        Ok(loops + d.closure_loops()?)
    });
    let cells = cells.into_iter().collect::<Result<Vec<usize>, Error>>()?;
    Ok(cells.chunks(n).map(<[usize]>::to_vec).collect())
}

pub fn gram_det(obj: &Object) -> Result<GramReport, Error> {
    let basis = hom_basis(obj, obj)?;
    let exponents = gram_matrix_exponents(&basis)?;
    let matrix: Vec<Vec<Poly>> = exponents
        .iter()
        .map(|row| row.iter().map(|&k| Poly::monomial(Rat::one(), k)).collect())
        .collect();
    let det = determinant(matrix)?;
    let roots = det.rational_roots()?;
    Ok(GramReport {
        basis,
        exponents,
        det,
        roots,
    })
}

/// Fraction-free (Bareiss) determinant over ℚ[t]; every division is exact.
pub fn determinant(mut m: Vec<Vec<Poly>>) -> Result<Poly, Error> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut prev = Poly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Poly::zero()),
            }
        }
        let pivot_row = m[k].clone();
        let lower = &m[k + 1..];
        let updated = par::map(lower, |row| -> Result<Vec<Poly>, Error> {
            let mut new_row = row.clone();
            for j in k + 1..n {
                let v = &(&row[j] * &pivot_row[k]) - &(&row[k] * &pivot_row[j]);
                new_row[j] = v.div_exact(&prev)?;
            }
            Ok(new_row)
        });
        for (offset, row) in updated.into_iter().enumerate() {
            m[k + 1 + offset] = row?;
        }
        prev = pivot_row[k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, RatFunc};

    fn t_pow(k: usize) -> RatFunc {
        Poly::monomial(Rat::one(), k).into()
    }

    #[test]
    fn cup_cap_squares_to_t_times_itself() {
        let obj = Object::gl(1, 1);
        let e: DiagElement = cup_cap(&obj).unwrap().into();
        assert_eq!(e.compose(&e).unwrap(), e.scale(&t_pow(1)));
    }

    #[test]
    fn brauer_cup_cap_absorbs_crossing() {
        let obj = Object::o(2);
        let e = cup_cap(&obj).unwrap();
        let s = crossing(&obj).unwrap();
        assert_eq!(e.compose(&s).unwrap(), (e.clone(), 0));
        assert_eq!(s.compose(&e).unwrap(), (e, 0));
    }

    #[test]
    fn walled_crossing_is_rejected() {
        // V ⊗ V* has no crossing that respects orientation
        assert!(matches!(
            crossing(&Object::gl(1, 1)),
            Err(Error::InvalidDiagram(_))
        ));
        assert!(crossing(&Object::gl(2, 0)).is_ok());
    }

    #[test]
    fn zig_zag() {
        let one = Object::o(1);
        let cap = Diagram::new(Object::o(2), Object::o(0), &[(0, 1)]).unwrap();
        let cup = Diagram::new(Object::o(0), Object::o(2), &[(0, 1)]).unwrap();
        let id = Diagram::identity(&one);
        let left = cap.tensor(&id).unwrap(); // [3] -> [1]
        let right = id.tensor(&cup).unwrap(); // [1] -> [3]
        assert_eq!(left.compose(&right).unwrap(), (id, 0));
    }

    #[test]
    fn identity_tensor() {
        let a = Diagram::identity(&Object::gl(1, 0));
        let b = Diagram::identity(&Object::gl(0, 1));
        assert_eq!(a.tensor(&b).unwrap(), Diagram::identity(&Object::gl(1, 1)));
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(
            hom_basis(&Object::gl(2, 1), &Object::gl(1, 0))
                .unwrap()
                .len(),
            2
        );
        assert!(hom_basis(&Object::gl(1, 0), &Object::gl(0, 1))
            .unwrap()
            .is_empty());
        assert_eq!(hom_basis(&Object::o(2), &Object::o(2)).unwrap().len(), 3);
        assert_eq!(
            hom_dim(&Object::o(4), &Object::o(4)).unwrap(),
            BigInt::from(105)
        );
        assert_eq!(
            hom_dim(&Object::o(1), &Object::o(2)).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn traces() {
        assert_eq!(
            DiagElement::identity(&Object::gl(2, 1))
                .closure_trace()
                .unwrap(),
            t_pow(3)
        );
        let e: DiagElement = cup_cap(&Object::gl(1, 1)).unwrap().into();
        assert_eq!(e.closure_trace().unwrap(), t_pow(1));
        assert_eq!(
            DiagElement::identity(&Object::o(3))
                .closure_trace()
                .unwrap(),
            t_pow(3)
        );
        let f: DiagElement = hom_basis(&Object::gl(1, 0), &Object::gl(2, 1)).unwrap()[0]
            .clone()
            .into();
        assert!(matches!(f.closure_trace(), Err(Error::NotEndomorphism(..))));
    }

    #[test]
    fn gram_examples() {
        let r = gram_det(&Object::gl(1, 1)).unwrap();
        assert_eq!(r.det, Poly::from_ints(&[0, 0, -1, 0, 1]));
        let roots: Vec<Rat> = r.roots.roots.iter().map(|(x, _)| x.clone()).collect();
        assert_eq!(roots, vec![rat(-1, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(gram_det(&Object::o(1)).unwrap().det, Poly::t());
        assert_eq!(gram_det(&Object::gl(1, 0)).unwrap().det, Poly::t());
    }

    #[test]
    fn parse_and_display() {
        let d = Diagram::parse(Object::gl(1, 1), Object::gl(1, 1), "1-2,3-4").unwrap();
        assert_eq!(d, cup_cap(&Object::gl(1, 1)).unwrap());
        assert_eq!(d.to_string(), "[1,1]->[1,1]:1-2,3-4");
        assert!(Diagram::parse(Object::gl(1, 1), Object::gl(1, 1), "1-4,2-3").is_err());
        assert_eq!(
            Diagram::parse(Object::gl(1, 1), Object::gl(1, 1), "1-3,2-4").unwrap(),
            Diagram::identity(&Object::gl(1, 1))
        );
        assert!(Diagram::parse(Object::o(1), Object::o(1), "1-1").is_err());
        assert!(Diagram::parse(Object::o(2), Object::o(0), "1-2,1-2").is_err());
        assert!(Diagram::parse(Object::o(2), Object::o(0), "0-1").is_err());
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![
            vec![Poly::zero(), Poly::one()],
            vec![Poly::one(), Poly::zero()],
        ];
        assert_eq!(determinant(m).unwrap(), Poly::from_ints(&[-1]));
    }
}
