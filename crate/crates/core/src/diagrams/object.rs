use std::fmt;

use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    /// Rep(GL_t): oriented strands, walled Brauer diagrams.
    Gl,
    /// Rep(O_t): unoriented strands, Brauer diagrams. Rep(Sp_{-t}) is the
    /// same tensor category up to a sign twist that none of the computed
    /// quantities see.
    O,
}

/// Tensor factor of an object: the tautological object `V` or its dual.
/// Rep(O_t) only uses `V`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Strand {
    V,
    Dual,
}

/// Tensor word in `V` and `V*`. The standard GL object `[r,s]` is
/// `V^{⊗r} ⊗ V*^{⊗s}`; tensoring standard objects can produce other words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Object {
    family: Family,
    letters: Vec<Strand>,
}

impl Object {
    pub fn gl(r: usize, s: usize) -> Self {
        let mut letters = vec![Strand::V; r];
        letters.extend(std::iter::repeat(Strand::Dual).take(s));
        Object {
            family: Family::Gl,
            letters,
        }
    }

    pub fn o(r: usize) -> Self {
        Object {
            family: Family::O,
            letters: vec![Strand::V; r],
        }
    }

    pub fn gl_word(letters: Vec<Strand>) -> Self {
        Object {
            family: Family::Gl,
            letters,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn letters(&self) -> &[Strand] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `(r, s)` when the word is `V^r V*^s`.
    pub fn as_standard(&self) -> Option<(usize, usize)> {
        let r = self.letters.iter().take_while(|&&l| l == Strand::V).count();
        self.letters[r..]
            .iter()
            .all(|&l| l == Strand::Dual)
            .then(|| (r, self.letters.len() - r))
    }

    pub fn tensor(&self, other: &Object) -> Result<Object, Error> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Object {
            family: self.family,
            letters,
        })
    }

    /// Parses `r` (O), `r,s` (GL) or a GL sign word such as `+-+`.
    pub fn parse(family: Family, s: &str) -> Result<Object, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an object: {s:?}"));
        match family {
            Family::O => s.parse().map(Object::o).map_err(|_| bad()),
            Family::Gl => {
                if let Some((r, t)) = s.split_once(',') {
                    let r = r.trim().parse().map_err(|_| bad())?;
                    let t = t.trim().parse().map_err(|_| bad())?;
                    return Ok(Object::gl(r, t));
                }
                s.chars()
                    .map(|c| match c {
                        '+' => Ok(Strand::V),
                        '-' => Ok(Strand::Dual),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map(Object::gl_word)
            }
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.as_standard()) {
            (Family::O, _) => write!(f, "[{}]", self.len()),
            (Family::Gl, Some((r, s))) => write!(f, "[{r},{s}]"),
            (Family::Gl, None) => {
                let word: String = self
                    .letters
                    .iter()
                    .map(|l| if *l == Strand::V { '+' } else { '-' })
                    .collect();
                write!(f, "[{word}]")
            }
        }
    }
}
