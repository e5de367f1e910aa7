//! Counting gyrotransversals over symmetric groups: the closed-form
//! product of least common multiples over cycle types, and the brute
//! route through actual class enumeration.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::caf::enumerate_cafs;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::rclass::r_classes;

/// Largest degree accepted by the closed-form count.
pub const MAX_COUNT_DEGREE: usize = 50;
/// Largest group order accepted by the brute count.
pub const BRUTE_COUNT_CAP: usize = 1000;
/// Below this bound the brute count is cross-checked by literally
/// streaming the enumeration.
const STREAM_VERIFY_BOUND: u64 = 1 << 20;

/// A multiset of cycle lengths > 1 fitting inside degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    parts: Vec<u32>,
    ambient_degree: usize,
}

impl CycleType {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn ambient_degree(&self) -> usize {
        self.ambient_degree
    }

    /// Order of a permutation with this cycle structure.
    pub fn lcm(&self) -> u64 {
        self.parts
            .iter()
            .map(|&p| p as u64)
            .fold(1, num_integer::lcm)
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All multisets of parts >= 2 with sum <= n, ordered by (sum, lex).
/// The empty type is excluded: the identity class contributes no factor.
pub fn cycle_types(n: usize) -> Vec<CycleType> {
    let mut out = Vec::new();
    fn extend(rem: u32, min_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !acc.is_empty() {
            out.push(acc.clone());
        }
        let mut p = min_part;
        while p <= rem {
            acc.push(p);
            extend(rem - p, p, acc, out);
            acc.pop();
            p += 1;
        }
    }
    let mut raw = Vec::new();
    extend(n as u32, 2, &mut Vec::new(), &mut raw);
    raw.sort_by_key(|t| (t.iter().sum::<u32>(), t.clone()));
    for parts in raw {
        out.push(CycleType {
            parts,
            ambient_degree: n,
        });
    }
    out
}

/// Product over all cycle types of the least common multiple of the parts.
/// Degrees below 3 count a single transversal.
pub fn count_gyrotransversals(n: usize) -> Result<BigUint> {
    if n > MAX_COUNT_DEGREE {
        return Err(Error::SizeCapExceeded {
            what: "closed-form count",
            size: n,
            cap: MAX_COUNT_DEGREE,
        });
    }
    if n < 3 {
        return Ok(BigUint::from(1u32));
    }
    let mut product = BigUint::from(1u32);
    for t in cycle_types(n) {
        product *= BigUint::from(t.lcm());
    }
    Ok(product)
}

/// Counts canonical class assigned functions on an explicit group: the
/// product of representative orders over non-identity classes. Small
/// products are additionally cross-checked by streaming the enumeration.
pub fn brute_count(group: &Arc<FiniteGroup>) -> Result<BigUint> {
    if group.order() > BRUTE_COUNT_CAP {
        return Err(Error::SizeCapExceeded {
            what: "brute count",
            size: group.order(),
            cap: BRUTE_COUNT_CAP,
        });
    }
    let partition = Arc::new(r_classes(group.clone()));
    let mut product = BigUint::from(1u32);
    let mut small: Option<u64> = Some(1);
    for ci in 0..partition.len() {
        if ci == partition.identity_class() {
            continue;
        }
        let order = partition.class_order(ci) as u64;
        product *= BigUint::from(order);
        small = small.and_then(|s| s.checked_mul(order)).filter(|&s| s <= STREAM_VERIFY_BOUND);
    }
    if let Some(expected) = small {
        let streamed = enumerate_cafs(partition).count() as u64;
        assert_eq!(
            streamed, expected,
            "enumeration disagrees with the class-order product"
        );
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::group_by_name;

    fn parts_of(n: usize) -> Vec<Vec<u32>> {
        cycle_types(n).into_iter().map(|t| t.parts).collect()
    }

    #[test]
    fn small_cycle_type_tables() {
        assert!(parts_of(1).is_empty());
        assert_eq!(parts_of(2), vec![vec![2]]);
        assert_eq!(parts_of(3), vec![vec![2], vec![3]]);
        assert_eq!(parts_of(4), vec![vec![2], vec![3], vec![2, 2], vec![4]]);
        assert_eq!(
            parts_of(5),
            vec![vec![2], vec![3], vec![2, 2], vec![4], vec![2, 3], vec![5]]
        );
    }

    #[test]
    fn type_counts_at_larger_degrees() {
        assert_eq!(cycle_types(6).len(), 10);
        assert_eq!(cycle_types(10).len(), 41);
        assert_eq!(cycle_types(20).len(), 626);
    }

    #[test]
    fn closed_form_values() {
        let expect: [(usize, &str); 8] = [
            (1, "1"),
            (2, "1"),
            (3, "6"),
            (4, "48"),
            (5, "1440"),
            (6, "207360"),
            (7, "1045094400"),
            (8, "144473849856000"),
        ];
        for (n, v) in expect {
            assert_eq!(count_gyrotransversals(n).unwrap().to_string(), v, "n = {n}");
        }
        assert_eq!(
            count_gyrotransversals(10).unwrap().to_string(),
            "197246951611422595035955200000000"
        );
    }

    #[test]
    fn degree_cap() {
        assert!(count_gyrotransversals(50).is_ok());
        assert!(matches!(
            count_gyrotransversals(51),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn brute_count_small_groups() {
        let cases = [("S1", "1"), ("S3", "6"), ("S4", "48"), ("Q8", "128"), ("D4", "32"), ("A4", "6")];
        for (name, v) in cases {
            let g = Arc::new(group_by_name(name, 1000).unwrap());
            assert_eq!(brute_count(&g).unwrap().to_string(), v, "{name}");
        }
    }

    #[test]
    fn formula_matches_brute_on_symmetric_groups() {
        for n in 3..=5 {
            let g = Arc::new(group_by_name(&format!("S{n}"), 1000).unwrap());
            assert_eq!(
                brute_count(&g).unwrap(),
                count_gyrotransversals(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn brute_cap() {
        let g = Arc::new(group_by_name("S6", 1000).unwrap());
        assert!(brute_count(&g).is_ok());
        // S7 exceeds the order cap before the closure cap trips
        assert!(group_by_name("S7", 1000).is_err());
    }
}
