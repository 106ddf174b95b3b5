use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::{Diagram, Object};
use crate::arith::{Poly, Rat, RatFunc};
use crate::Error;

fn t_pow(k: usize) -> RatFunc {
    Poly::monomial(Rat::one(), k).into()
}

/// Formal ℚ(t)-linear combination of diagrams sharing source and target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagElement {
    source: Object,
    target: Object,
    terms: BTreeMap<Vec<u32>, RatFunc>,
}

impl DiagElement {
    pub fn zero(source: Object, target: Object) -> Self {
        DiagElement {
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(obj: &Object) -> Self {
        Diagram::identity(obj).into()
    }

    pub fn source(&self) -> &Object {
        &self.source
    }

    pub fn target(&self) -> &Object {
        &self.target
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (Diagram, &RatFunc)> + '_ {
        self.terms.iter().map(|(p, c)| {
            (
                Diagram::from_partner(self.source.clone(), self.target.clone(), p.clone()),
                c,
            )
        })
    }

    pub fn coeff(&self, d: &Diagram) -> RatFunc {
        self.terms
            .get(d.partners())
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    fn accumulate(&mut self, key: Vec<u32>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_term(&mut self, d: &Diagram, c: RatFunc) -> Result<(), Error> {
        if d.source() != &self.source || d.target() != &self.target {
            return Err(Error::BoundaryMismatch(
                format!("{}->{}", d.source(), d.target()),
                format!("{}->{}", self.source, self.target),
            ));
        }
        self.accumulate(d.partners().to_vec(), c);
        Ok(())
    }

    pub fn add(&self, other: &DiagElement) -> Result<DiagElement, Error> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::BoundaryMismatch(
                self.target.to_string(),
                other.target.to_string(),
            ));
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.accumulate(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> DiagElement {
        let mut out = DiagElement::zero(self.source.clone(), self.target.clone());
        for (k, v) in &self.terms {
            out.accumulate(k.clone(), v * c);
        }
        out
    }

    /// `self ∘ f`; each removed closed loop contributes a factor `t`.
    pub fn compose(&self, f: &DiagElement) -> Result<DiagElement, Error> {
        if self.source != f.target {
            return Err(Error::BoundaryMismatch(
                f.target.to_string(),
                self.source.to_string(),
            ));
        }
        let mut out = DiagElement::zero(f.source.clone(), self.target.clone());
        for (dg, cg) in self.terms() {
            for (df, cf) in f.terms() {
                let (d, loops) = dg.compose(&df)?;
                out.accumulate(d.partners().to_vec(), &(cg * cf) * &t_pow(loops));
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, g: &DiagElement) -> Result<DiagElement, Error> {
        let mut out = DiagElement::zero(
            self.source.tensor(&g.source)?,
            self.target.tensor(&g.target)?,
        );
        for (df, cf) in self.terms() {
            for (dg, cg) in g.terms() {
                out.accumulate(df.tensor(&dg)?.partners().to_vec(), cf * cg);
            }
        }
        Ok(out)
    }

    /// Categorical trace: close every strand and weight by `t^{loops}`.
    pub fn closure_trace(&self) -> Result<RatFunc, Error> {
        if self.source != self.target {
            return Err(Error::NotEndomorphism(
                self.source.to_string(),
                self.target.to_string(),
            ));
        }
        let mut acc = RatFunc::zero();
        for (d, c) in self.terms() {
            acc = &acc + &(c * &t_pow(d.closure_loops()?));
        }
        Ok(acc)
    }
}

impl From<Diagram> for DiagElement {
    fn from(d: Diagram) -> Self {
        let mut e = DiagElement::zero(d.source().clone(), d.target().clone());
        e.terms.insert(d.partners().to_vec(), RatFunc::one());
        e
    }
}

impl fmt::Display for DiagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(d, c)| {
                let edges: Vec<String> = d
                    .edges()
                    .iter()
                    .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                    .collect();
                let edges = edges.join(",");
                if c.is_poly() && c.num().is_one() {
                    format!("[{edges}]")
                } else {
                    format!("({c})*[{edges}]")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
