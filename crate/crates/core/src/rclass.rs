//! The equivalence relation merging conjugacy with inversion.
//!
//! Two elements are related when one is conjugate to the other or to the
//! other's inverse. Every class is closed under conjugation and inversion,
//! and all members share a common order.

use std::sync::Arc;

use crate::group::FiniteGroup;

/// Partition of a group's elements under the conjugacy-with-inversion
/// relation. Classes are sorted by their smallest member, which is also the
/// stored representative; class 0 is always the singleton of the identity.
#[derive(Debug, Clone)]
pub struct RClassPartition {
    group: Arc<FiniteGroup>,
    classes: Vec<Vec<usize>>,
    representative: Vec<usize>,
    class_of: Vec<usize>,
}

/// Merges each conjugacy class with the conjugacy class of its inverses.
pub fn r_classes(group: Arc<FiniteGroup>) -> RClassPartition {
    let conj = group.conjugacy_classes();
    let mut class_of_conj = vec![0usize; group.order()];
    for (ci, class) in conj.iter().enumerate() {
        for &x in class {
            class_of_conj[x] = ci;
        }
    }

    // union-find over conjugacy classes, merging each with its inverse class
    let mut parent: Vec<usize> = (0..conj.len()).collect();
    fn find(parent: &mut Vec<usize>, mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for (ci, class) in conj.iter().enumerate() {
        let inv_ci = class_of_conj[group.inv(class[0])];
        let (ra, rb) = (find(&mut parent, ci), find(&mut parent, inv_ci));
        if ra != rb {
            parent[ra] = rb;
        }
    }

    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); conj.len()];
    for (ci, class) in conj.iter().enumerate() {
        let root = find(&mut parent, ci);
        buckets[root].extend_from_slice(class);
    }
    let mut classes: Vec<Vec<usize>> = buckets.into_iter().filter(|b| !b.is_empty()).collect();
    for class in &mut classes {
        class.sort_unstable();
    }
    classes.sort_by_key(|c| c[0]);

    let mut class_of = vec![0usize; group.order()];
    for (ci, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = ci;
        }
    }
    let representative: Vec<usize> = classes.iter().map(|c| c[0]).collect();

    RClassPartition {
        group,
        classes,
        representative,
        class_of,
    }
}

impl RClassPartition {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, ci: usize) -> &[usize] {
        &self.classes[ci]
    }

    pub fn representative(&self, ci: usize) -> usize {
        self.representative[ci]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Index of the class holding the identity (always 0 by construction).
    pub fn identity_class(&self) -> usize {
        self.class_of[self.group.identity()]
    }

    /// Order of the class representative; constant across the class.
    pub fn class_order(&self, ci: usize) -> usize {
        self.group.element_order(self.representative[ci])
    }
}
