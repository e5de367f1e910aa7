//! Exact isomorphism testing for small operation tables.
//!
//! The search runs over identity-preserving bijections, pruned by cheap
//! per-element invariants (right-power order, fixed-point counts of the
//! left and right translations, self-inverse flag) and by consistency of
//! the partial embedding. Exhaustive, so there are no false negatives
//! within the supported size cap.

use crate::error::{Error, Result};

/// Cap on table order for the backtracking search.
pub const ISO_CAP: usize = 64;

/// Anything with a square operation table and a designated identity.
pub trait CayleyTable {
    fn order(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
    fn identity(&self) -> usize;
}

/// Outcome of an isomorphism search between two tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoCertificate {
    /// `mapping[i]` is the image in the second table of element `i` of the
    /// first; the bijection carries one table onto the other.
    Isomorphic { mapping: Vec<usize> },
    NonIsomorphic { reason: NonIsoReason },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonIsoReason {
    OrderMismatch { left: usize, right: usize },
    InvariantMismatch,
    SearchExhausted,
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoCertificate::Isomorphic { .. })
    }

    pub fn mapping(&self) -> Option<&[usize]> {
        match self {
            IsoCertificate::Isomorphic { mapping } => Some(mapping),
            IsoCertificate::NonIsomorphic { .. } => None,
        }
    }
}

/// Per-element invariant preserved by any identity-preserving isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Profile {
    right_order: usize,
    right_fixed: usize,
    left_fixed: usize,
    self_inverse: bool,
}

fn profile<T: CayleyTable>(t: &T, x: usize) -> Profile {
    let n = t.order();
    let e = t.identity();
    // least m >= 1 with the right-associated power chain reaching e; 0 if never
    let mut right_order = 0;
    let mut acc = x;
    for m in 1..=n {
        if acc == e {
            right_order = m;
            break;
        }
        acc = t.op(acc, x);
    }
    let right_fixed = (0..n).filter(|&z| t.op(z, x) == z).count();
    let left_fixed = (0..n).filter(|&z| t.op(x, z) == z).count();
    Profile {
        right_order,
        right_fixed,
        left_fixed,
        self_inverse: t.op(x, x) == e,
    }
}

/// Searches for an identity-preserving table isomorphism.
///
/// Errors only when a table exceeds [`ISO_CAP`]; an order mismatch is
/// reported as a trivially negative certificate.
pub fn tables_isomorphic<A: CayleyTable, B: CayleyTable>(a: &A, b: &B) -> Result<IsoCertificate> {
    let n = a.order();
    if n != b.order() {
        return Ok(IsoCertificate::NonIsomorphic {
            reason: NonIsoReason::OrderMismatch {
                left: n,
                right: b.order(),
            },
        });
    }
    if n > ISO_CAP {
        return Err(Error::SizeCapExceeded {
            what: "isomorphism search",
            size: n,
            cap: ISO_CAP,
        });
    }

    let pa: Vec<Profile> = (0..n).map(|x| profile(a, x)).collect();
    let pb: Vec<Profile> = (0..n).map(|x| profile(b, x)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(IsoCertificate::NonIsomorphic {
            reason: NonIsoReason::InvariantMismatch,
        });
    }

    // candidate images per element, filtered by profile
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| pb[j] == pa[i]).collect())
        .collect();

    // assign scarcest elements first
    let mut order: Vec<usize> = (0..n).filter(|&i| i != a.identity()).collect();
    order.sort_by_key(|&i| candidates[i].len());

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    mapping[a.identity()] = b.identity();
    used[b.identity()] = true;

    fn consistent<A: CayleyTable, B: CayleyTable>(
        a: &A,
        b: &B,
        mapping: &[usize],
        i: usize,
    ) -> bool {
        let n = a.order();
        for j in 0..n {
            if mapping[j] == usize::MAX {
                continue;
            }
            let ij = a.op(i, j);
            if mapping[ij] != usize::MAX && b.op(mapping[i], mapping[j]) != mapping[ij] {
                return false;
            }
            let ji = a.op(j, i);
            if mapping[ji] != usize::MAX && b.op(mapping[j], mapping[i]) != mapping[ji] {
                return false;
            }
        }
        true
    }

    fn backtrack<A: CayleyTable, B: CayleyTable>(
        a: &A,
        b: &B,
        order: &[usize],
        pos: usize,
        candidates: &[Vec<usize>],
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&i) = order.get(pos) else {
            return true;
        };
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            mapping[i] = j;
            used[j] = true;
            if consistent(a, b, mapping, i)
                && backtrack(a, b, order, pos + 1, candidates, mapping, used)
            {
                return true;
            }
            mapping[i] = usize::MAX;
            used[j] = false;
        }
        false
    }

    if backtrack(a, b, &order, 0, &candidates, &mut mapping, &mut used) {
        debug_assert!((0..n)
            .all(|x| (0..n).all(|y| b.op(mapping[x], mapping[y]) == mapping[a.op(x, y)])));
        Ok(IsoCertificate::Isomorphic { mapping })
    } else {
        Ok(IsoCertificate::NonIsomorphic {
            reason: NonIsoReason::SearchExhausted,
        })
    }
}

impl CayleyTable for crate::group::FiniteGroup {
    fn order(&self) -> usize {
        FiniteGroup::order(self)
    }
    fn op(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }
    fn identity(&self) -> usize {
        FiniteGroup::identity(self)
    }
}

use crate::group::FiniteGroup;
