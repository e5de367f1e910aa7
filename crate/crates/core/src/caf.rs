//! Class assigned functions: one natural-number exponent per class of the
//! conjugacy-with-inversion partition, zero on the identity class.
//!
//! Exponents act through `w -> w^(k(w))`, so they only matter modulo the
//! order of the class; [`ClassAssignedFunction::canonicalize`] reduces them
//! and enumeration yields exactly the canonical forms.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rclass::RClassPartition;

/// A function constant on each class, zero on the identity class.
/// Exponents are stored as supplied; comparisons of induced structures
/// should go through [`Self::canonicalize`].
#[derive(Debug, Clone)]
pub struct ClassAssignedFunction {
    partition: Arc<RClassPartition>,
    exponents: Vec<u64>,
}

impl ClassAssignedFunction {
    pub fn new(partition: Arc<RClassPartition>, exponents: Vec<u64>) -> Result<Self> {
        if exponents.len() != partition.len() {
            return Err(Error::InvalidClassFunction(format!(
                "expected {} exponents, got {}",
                partition.len(),
                exponents.len()
            )));
        }
        if exponents[partition.identity_class()] != 0 {
            return Err(Error::IdentityExponentNonzero);
        }
        Ok(ClassAssignedFunction {
            partition,
            exponents,
        })
    }

    /// The all-zero function.
    pub fn zero(partition: Arc<RClassPartition>) -> Self {
        let exponents = vec![0; partition.len()];
        ClassAssignedFunction {
            partition,
            exponents,
        }
    }

    /// The constant function `n` off the identity class, canonicalized.
    pub fn power_map(partition: Arc<RClassPartition>, n: u64) -> Self {
        let exponents = (0..partition.len())
            .map(|ci| {
                if ci == partition.identity_class() {
                    0
                } else {
                    n
                }
            })
            .collect();
        (ClassAssignedFunction {
            partition,
            exponents,
        })
        .canonicalize()
    }

    pub fn partition(&self) -> &Arc<RClassPartition> {
        &self.partition
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `k(x)`: the exponent of the class of `x`.
    pub fn evaluate(&self, x: usize) -> u64 {
        self.exponents[self.partition.class_of(x)]
    }

    /// Reduces each class exponent modulo the order of the class
    /// representative; the induced map `w -> w^(k(w))` is unchanged.
    pub fn canonicalize(&self) -> Self {
        let exponents = self
            .exponents
            .iter()
            .enumerate()
            .map(|(ci, &e)| e % self.partition.class_order(ci) as u64)
            .collect();
        ClassAssignedFunction {
            partition: self.partition.clone(),
            exponents,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.exponents
            .iter()
            .enumerate()
            .all(|(ci, &e)| e < self.partition.class_order(ci) as u64)
    }

    /// The induced map `g(x) = x^(k(x))` as an element-index vector.
    pub fn induced_map(&self) -> Vec<usize> {
        let g = self.partition.group();
        (0..g.order())
            .map(|x| g.pow(x, (self.evaluate(x) % g.element_order(x) as u64) as i64))
            .collect()
    }

    /// Textual form listing every non-identity class as `rep:exponent`.
    pub fn to_kspec(&self) -> String {
        let g = self.partition.group();
        let mut parts = Vec::new();
        for ci in 0..self.partition.len() {
            if ci == self.partition.identity_class() {
                continue;
            }
            let rep = g.element(self.partition.representative(ci));
            parts.push(format!("{}:{}", rep, self.exponents[ci]));
        }
        parts.join(",")
    }
}

impl fmt::Display for ClassAssignedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_kspec())
    }
}

impl PartialEq for ClassAssignedFunction {
    fn eq(&self, other: &Self) -> bool {
        self.exponents == other.exponents
            && Arc::ptr_eq(&self.partition, &other.partition)
    }
}

/// Parses the textual k-spec grammar: comma-separated `representative:exponent`
/// pairs with the representative in cycle notation, e.g. `"(0 1):1,(0 1 2):2"`.
/// Unspecified classes default to 0; the identity class must be 0 or omitted.
pub fn parse_kspec(partition: &Arc<RClassPartition>, spec: &str) -> Result<ClassAssignedFunction> {
    let g = partition.group();
    let mut exponents = vec![0u64; partition.len()];
    let mut assigned = vec![false; partition.len()];
    let trimmed = spec.trim();
    if !trimmed.is_empty() && trimmed != "0" {
        for entry in split_top_level(trimmed) {
            let (rep_str, exp_str) = entry.rsplit_once(':').ok_or_else(|| Error::Parse {
                input: entry.clone(),
                reason: "expected representative:exponent".to_string(),
            })?;
            let rep = Permutation::parse(rep_str.trim(), g.degree())?;
            let idx = g.index_of(&rep).ok_or_else(|| Error::Parse {
                input: rep_str.to_string(),
                reason: "permutation is not an element of the group".to_string(),
            })?;
            let exp: u64 = exp_str.trim().parse().map_err(|_| Error::Parse {
                input: exp_str.to_string(),
                reason: "exponent must be a natural number".to_string(),
            })?;
            let ci = partition.class_of(idx);
            if assigned[ci] {
                return Err(Error::InvalidClassFunction(format!(
                    "class of {rep} assigned twice"
                )));
            }
            assigned[ci] = true;
            if ci == partition.identity_class() && exp != 0 {
                return Err(Error::IdentityExponentNonzero);
            }
            exponents[ci] = exp;
        }
    }
    ClassAssignedFunction::new(partition.clone(), exponents)
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut depth = 0usize;
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out
}

/// Enumerates exactly the canonical class assigned functions in
/// lexicographic order over the class-exponent vectors: the exponent of each
/// non-identity class ranges over `0..order(representative)`. The total
/// count is the product of representative orders over non-identity classes.
pub fn enumerate_cafs(partition: Arc<RClassPartition>) -> CafIter {
    let limits: Vec<u64> = (0..partition.len())
        .map(|ci| {
            if ci == partition.identity_class() {
                1
            } else {
                partition.class_order(ci) as u64
            }
        })
        .collect();
    CafIter {
        partition,
        limits,
        current: None,
        done: false,
    }
}

/// Lexicographic odometer over class-exponent vectors.
pub struct CafIter {
    partition: Arc<RClassPartition>,
    limits: Vec<u64>,
    current: Option<Vec<u64>>,
    done: bool,
}

impl Iterator for CafIter {
    type Item = ClassAssignedFunction;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => self.current = Some(vec![0; self.limits.len()]),
            Some(vec) => {
                // increment the least-significant (last) position first
                let mut pos = vec.len();
                loop {
                    if pos == 0 {
                        self.done = true;
                        return None;
                    }
                    pos -= 1;
                    vec[pos] += 1;
                    if vec[pos] < self.limits[pos] {
                        break;
                    }
                    vec[pos] = 0;
                }
            }
        }
        let exponents = self.current.clone().expect("just set");
        Some(ClassAssignedFunction {
            partition: self.partition.clone(),
            exponents,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rclass::r_classes;
    use crate::registry::group_by_name;

    fn partition(name: &str) -> Arc<RClassPartition> {
        Arc::new(r_classes(Arc::new(group_by_name(name, 1000).unwrap())))
    }

    #[test]
    fn identity_class_is_pinned_to_zero() {
        let p = partition("S3");
        assert!(matches!(
            ClassAssignedFunction::new(p.clone(), vec![1, 0, 0]),
            Err(Error::IdentityExponentNonzero)
        ));
        let k = ClassAssignedFunction::new(p, vec![0, 1, 2]).unwrap();
        assert_eq!(k.evaluate(0), 0);
    }

    #[test]
    fn evaluation_is_constant_on_classes_and_respects_inversion() {
        let p = partition("S3");
        let k = ClassAssignedFunction::new(p.clone(), vec![0, 1, 2]).unwrap();
        let g = p.group();
        for x in 0..g.order() {
            assert_eq!(k.evaluate(x), k.evaluate(g.inv(x)));
            for h in 0..g.order() {
                assert_eq!(k.evaluate(x), k.evaluate(g.conjugate(x, h)));
            }
        }
        // the fixture assignment: transpositions -> 1, 3-cycles -> 2
        let t = g.index_of(&Permutation::parse("(0 1)", 3).unwrap()).unwrap();
        let c = g
            .index_of(&Permutation::parse("(0 1 2)", 3).unwrap())
            .unwrap();
        assert_eq!(k.evaluate(t), 1);
        assert_eq!(k.evaluate(c), 2);
    }

    #[test]
    fn canonicalize_reduces_mod_class_order() {
        let p = partition("S3");
        let k6 = ClassAssignedFunction::new(p.clone(), vec![0, 6, 6]).unwrap();
        let canon = k6.canonicalize();
        assert_eq!(canon.exponents(), &[0, 0, 0]);
        assert!(canon.is_canonical());
        assert_eq!(k6.induced_map(), canon.induced_map());

        let k5 = ClassAssignedFunction::new(p, vec![0, 0, 5]).unwrap();
        assert_eq!(k5.canonicalize().exponents(), &[0, 0, 2]);
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let p = partition("Q8");
        let k = ClassAssignedFunction::new(p, vec![0, 7, 9, 13, 2]).unwrap();
        let once = k.canonicalize();
        assert_eq!(once.exponents(), once.canonicalize().exponents());
        assert_eq!(k.induced_map(), once.induced_map());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_cafs(partition("S1")).count(), 1);
        assert_eq!(enumerate_cafs(partition("S3")).count(), 6);
        assert_eq!(enumerate_cafs(partition("S4")).count(), 48);
        assert_eq!(enumerate_cafs(partition("D4")).count(), 32);
        assert_eq!(enumerate_cafs(partition("Q8")).count(), 128);
        assert_eq!(enumerate_cafs(partition("A4")).count(), 6);
    }

    #[test]
    fn enumeration_is_lexicographic_and_canonical() {
        let p = partition("S3");
        let vecs: Vec<Vec<u64>> = enumerate_cafs(p)
            .map(|k| k.exponents().to_vec())
            .collect();
        assert_eq!(
            vecs,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 0, 2],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2],
            ]
        );
    }

    #[test]
    fn power_map_fixtures() {
        let p = partition("S3");
        assert_eq!(
            ClassAssignedFunction::power_map(p.clone(), 0).exponents(),
            &[0, 0, 0]
        );
        assert_eq!(
            ClassAssignedFunction::power_map(p.clone(), 1).exponents(),
            &[0, 1, 1]
        );
        // exponent 6 collapses canonically to zero on both classes
        assert_eq!(
            ClassAssignedFunction::power_map(p.clone(), 6).exponents(),
            &[0, 0, 0]
        );
        // the induced map of the n-th power function is x -> x^n
        let g = p.group();
        for n in 0..8 {
            let k = ClassAssignedFunction::power_map(p.clone(), n);
            let induced = k.induced_map();
            for x in 0..g.order() {
                assert_eq!(induced[x], g.pow(x, n as i64));
            }
        }
    }

    #[test]
    fn kspec_round_trip() {
        let p = partition("S3");
        let k = parse_kspec(&p, "(0 1):1,(0 1 2):2").unwrap();
        assert_eq!(k.exponents(), &[0, 1, 2]);
        let rendered = k.to_kspec();
        assert_eq!(rendered, "(1 2):1,(0 1 2):2");
        assert_eq!(parse_kspec(&p, &rendered).unwrap().exponents(), k.exponents());
    }

    #[test]
    fn kspec_defaults_and_errors() {
        let p = partition("S3");
        assert_eq!(parse_kspec(&p, "").unwrap().exponents(), &[0, 0, 0]);
        assert_eq!(parse_kspec(&p, "0").unwrap().exponents(), &[0, 0, 0]);
        assert_eq!(parse_kspec(&p, "(0 1):3").unwrap().exponents(), &[0, 3, 0]);
        assert_eq!(parse_kspec(&p, "e:0").unwrap().exponents(), &[0, 0, 0]);
        assert!(matches!(
            parse_kspec(&p, "e:1"),
            Err(Error::IdentityExponentNonzero)
        ));
        assert!(parse_kspec(&p, "(0 1):1,(1 2):2").is_err()); // same class twice
        assert!(parse_kspec(&p, "(0 1)").is_err());
        assert!(parse_kspec(&p, "(0 5):1").is_err());
        assert!(parse_kspec(&p, "(0 1):x").is_err());
    }
}
