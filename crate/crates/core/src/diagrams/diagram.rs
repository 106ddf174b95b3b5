use std::fmt;

use super::{Family, Object, Strand};
use crate::Error;

/// A basis morphism `source → target`: a perfect matching on the
/// `source.len()` bottom and `target.len()` top endpoints.
///
/// Endpoints are numbered globally: bottom `0..k` left to right, then top
/// `k..k+l`. The matching is stored as its involution `partner`, which is a
/// canonical key. Strands may cross; no embedding is stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Diagram {
    source: Object,
    target: Object,
    partner: Vec<u32>,
}

impl Diagram {
    /// Builds a diagram from zero-based edges, checking that they form a
    /// perfect matching and, for GL, that every strand joins an outgoing
    /// endpoint to an incoming one.
    pub fn new(source: Object, target: Object, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if source.family() != target.family() {
            return Err(Error::FamilyMismatch);
        }
        let total = source.len() + target.len();
        let mut partner = vec![u32::MAX; total];
        for &(a, b) in edges {
            if a >= total || b >= total || a == b {
                return Err(Error::InvalidDiagram(format!(
                    "bad edge {}-{}",
                    a + 1,
                    b + 1
                )));
            }
            if partner[a] != u32::MAX || partner[b] != u32::MAX {
                return Err(Error::InvalidDiagram(format!(
                    "endpoint reused in edge {}-{}",
                    a + 1,
                    b + 1
                )));
            }
            partner[a] = b as u32;
            partner[b] = a as u32;
        }
        if let Some(free) = partner.iter().position(|&p| p == u32::MAX) {
            return Err(Error::InvalidDiagram(format!(
                "endpoint {} is unmatched",
                free + 1
            )));
        }
        let d = Diagram {
            source,
            target,
            partner,
        };
        if d.family() == Family::Gl {
            for (a, &b) in d.partner.iter().enumerate() {
                if d.is_outgoing(a) == d.is_outgoing(b as usize) {
                    return Err(Error::InvalidDiagram(format!(
                        "strand {}-{} violates orientation",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(d)
    }

    pub(crate) fn from_partner(source: Object, target: Object, partner: Vec<u32>) -> Self {
        debug_assert_eq!(partner.len(), source.len() + target.len());
        Diagram {
            source,
            target,
            partner,
        }
    }

    /// Parses the CLI edge list `a-b,c-d,…` (one-based endpoints).
    pub fn parse(source: Object, target: Object, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut edges = Vec::new();
        if !s.is_empty() {
            for e in s.split(',') {
                let (a, b) = e
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("edge {e:?} is not of the form a-b")))?;
                let parse = |x: &str| -> Result<usize, Error> {
                    let v: usize = x
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad endpoint {x:?}")))?;
                    v.checked_sub(1)
                        .ok_or_else(|| Error::Parse("endpoints are numbered from 1".into()))
                };
                edges.push((parse(a)?, parse(b)?));
            }
        }
        Diagram::new(source, target, &edges)
    }

    pub fn identity(obj: &Object) -> Self {
        let k = obj.len() as u32;
        let partner = (0..k).map(|i| i + k).chain(0..k).collect();
        Diagram {
            source: obj.clone(),
            target: obj.clone(),
            partner,
        }
    }

    pub fn source(&self) -> &Object {
        &self.source
    }

    pub fn target(&self) -> &Object {
        &self.target
    }

    pub fn family(&self) -> Family {
        self.source.family()
    }

    pub fn partner(&self, endpoint: usize) -> usize {
        self.partner[endpoint] as usize
    }

    pub(crate) fn partners(&self) -> &[u32] {
        &self.partner
    }

    /// Sorted zero-based edge list with `a < b` in each pair.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(a, &b)| a < b as usize)
            .map(|(a, &b)| (a, b as usize))
            .collect()
    }

    /// Bottom `V` and top `V*` endpoints emit a strand; the rest absorb one.
    fn is_outgoing(&self, endpoint: usize) -> bool {
        is_outgoing(&self.source, &self.target, endpoint)
    }

    /// `self ∘ f` together with the number of closed loops removed.
    pub fn compose(&self, f: &Diagram) -> Result<(Diagram, usize), Error> {
        if self.source != f.target {
            return Err(Error::BoundaryMismatch(
                f.target.to_string(),
                self.source.to_string(),
            ));
        }
        let (ka, kb, kc) = (f.source.len(), f.target.len(), self.target.len());
        let mut partner = vec![0u32; ka + kc];
        let mut seen = vec![false; kb];

        // Follow a strand that entered the middle boundary at `m`, coming
        // from the side given by `in_f` (true: arrived via f, so continue in g).
        let walk = |mut m: usize, mut in_f: bool, seen: &mut [bool]| -> usize {
            loop {
                seen[m] = true;
                if in_f {
                    let q = self.partner[m] as usize;
                    if q >= kb {
                        return ka + (q - kb);
                    }
                    m = q;
                } else {
                    let p = f.partner[ka + m] as usize;
                    if p < ka {
                        return p;
                    }
                    m = p - ka;
                }
                in_f = !in_f;
            }
        };

        for x in 0..ka {
            let p = f.partner[x] as usize;
            partner[x] = if p < ka {
                p as u32
            } else {
                walk(p - ka, true, &mut seen) as u32
            };
        }
        for z in 0..kc {
            let q = self.partner[kb + z] as usize;
            partner[ka + z] = if q >= kb {
                (ka + q - kb) as u32
            } else {
                walk(q, false, &mut seen) as u32
            };
        }

        let mut loops = 0;
        for start in 0..kb {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut m = start;
            loop {
                seen[m] = true;
                let q = self.partner[m] as usize;
                seen[q] = true;
                m = f.partner[ka + q] as usize - ka;
                if m == start {
                    break;
                }
            }
        }
        Ok((
            Diagram::from_partner(f.source.clone(), self.target.clone(), partner),
            loops,
        ))
    }

    /// Side-by-side juxtaposition `self ⊗ g`.
    pub fn tensor(&self, g: &Diagram) -> Result<Diagram, Error> {
        let source = self.source.tensor(&g.source)?;
        let target = self.target.tensor(&g.target)?;
        let (ka, kb) = (self.source.len(), self.target.len());
        let (ka2, kb2) = (g.source.len(), g.target.len());
        let bottom = ka + ka2;
        let map_f = |x: usize| if x < ka { x } else { bottom + (x - ka) };
        let map_g = |x: usize| {
            if x < ka2 {
                ka + x
            } else {
                bottom + kb + (x - ka2)
            }
        };
        let mut partner = vec![0u32; bottom + kb + kb2];
        for (x, &p) in self.partner.iter().enumerate() {
            partner[map_f(x)] = map_f(p as usize) as u32;
        }
        for (x, &p) in g.partner.iter().enumerate() {
            partner[map_g(x)] = map_g(p as usize) as u32;
        }
        Ok(Diagram::from_partner(source, target, partner))
    }

    /// Loops formed by joining top endpoint `i` to bottom endpoint `i`.
    pub fn closure_loops(&self) -> Result<usize, Error> {
        if self.source != self.target {
            return Err(Error::NotEndomorphism(
                self.source.to_string(),
                self.target.to_string(),
            ));
        }
        let k = self.source.len();
        let mut seen = vec![false; 2 * k];
        let mut loops = 0;
        for start in 0..2 * k {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut x = start;
            loop {
                seen[x] = true;
                let y = self.partner[x] as usize;
                seen[y] = true;
                x = if y < k { y + k } else { y - k };
                if x == start {
                    break;
                }
            }
        }
        Ok(loops)
    }
}

pub(crate) fn is_outgoing(source: &Object, target: &Object, endpoint: usize) -> bool {
    let k = source.len();
    if endpoint < k {
        source.letters()[endpoint] == Strand::V
    } else {
        target.letters()[endpoint - k] == Strand::Dual
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
            .collect();
        write!(f, "{}->{}:{}", self.source, self.target, edges.join(","))
    }
}
