//! Permutations of `{0..degree-1}` in one-line notation.
//!
//! Composition is fixed left-to-right throughout the crate:
//! `(p * q)(i) = q(p(i))`, i.e. apply `p` first, then `q`. Cycle notation
//! parsing and every table built on top of this type use that single
//! convention.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on the points `0..degree`, stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            if img >= degree || seen[img] {
                return Err(Error::NotABijection { images, degree });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Left-to-right composition: the result maps `i` to `other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Disjoint cycle decomposition; fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                cycle.push(j);
                seen[j] = true;
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths > 1, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable();
        parts
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> usize {
        self.cycle_type()
            .into_iter()
            .fold(1, num_integer::lcm)
    }

    /// Parses cycle notation, e.g. `"(0 1)(2 3)"`. `"e"` denotes the
    /// identity. Whitespace-insensitive; points are 0-based and must be
    /// smaller than `degree`. Non-disjoint cycles compose left-to-right.
    pub fn parse(input: &str, degree: usize) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed == "e" || trimmed == "()" {
            return Ok(Permutation::identity(degree));
        }
        if trimmed.is_empty() {
            return Err(err("empty permutation"));
        }

        // cycles as point lists; a list is open while inside parens
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut digits = String::new();
        for ch in trimmed.chars() {
            match ch {
                '0'..='9' => {
                    if current.is_none() {
                        return Err(err("point outside a cycle"));
                    }
                    digits.push(ch);
                }
                '(' => {
                    if current.is_some() {
                        return Err(err("nested '('"));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    let mut points = current.take().ok_or_else(|| err("unmatched ')'"))?;
                    if !digits.is_empty() {
                        points.push(digits.parse().map_err(|_| err("bad point"))?);
                        digits.clear();
                    }
                    cycles.push(points);
                }
                c if c == ',' || c.is_whitespace() => {
                    if !digits.is_empty() {
                        let points = current.as_mut().expect("guarded by the digit arm");
                        points.push(digits.parse().map_err(|_| err("bad point"))?);
                        digits.clear();
                    }
                }
                _ => return Err(err("unexpected character")),
            }
        }
        if current.is_some() {
            return Err(err("unclosed cycle"));
        }
        if cycles.is_empty() {
            return Err(err("empty permutation"));
        }

        let mut result = Permutation::identity(degree);
        for points in cycles {
            if points.len() < 2 {
                return Err(err("cycle needs at least two points"));
            }
            let mut used = vec![false; degree];
            let mut images: Vec<usize> = (0..degree).collect();
            for (i, &p) in points.iter().enumerate() {
                if p >= degree {
                    return Err(err("point out of range for degree"));
                }
                if used[p] {
                    return Err(err("repeated point within a cycle"));
                }
                used[p] = true;
                images[p] = points[(i + 1) % points.len()];
            }
            let cycle_perm = Permutation { images };
            result = result.compose(&cycle_perm)?;
        }
        Ok(result)
    }
}

impl fmt::Display for Permutation {
    /// Canonical disjoint-cycle form; `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
