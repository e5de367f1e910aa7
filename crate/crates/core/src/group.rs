//! Finite permutation groups with fully materialized multiplication tables.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on the number of elements of a fully tabled group.
pub const DEFAULT_GROUP_CAP: usize = 200;

/// A finite group of permutations, closed under the left-to-right
/// composition of [`Permutation::compose`].
///
/// Elements are canonically ordered lexicographically by one-line notation,
/// which puts the identity at index 0 and makes all derived enumerations
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
    orders: Vec<usize>,
}

impl FiniteGroup {
    /// Closes a nonempty generator set under composition and inversion.
    ///
    /// Fails if the generators have mismatched degrees or the closure
    /// exceeds `cap` elements.
    pub fn from_generators(generators: &[Permutation], cap: usize) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut frontier = vec![Permutation::identity(degree)];
        frontier.extend(generators.iter().cloned());
        while let Some(g) = frontier.pop() {
            if seen.contains_key(&g) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::SizeCapExceeded {
                    what: "group closure",
                    size: seen.len() + 1,
                    cap,
                });
            }
            for h in generators {
                frontier.push(g.compose(h).expect("degrees checked above"));
            }
            frontier.push(g.inverse());
            seen.insert(g, ());
        }

        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();

        let order = elements.len();
        let mut mul = vec![vec![0usize; order]; order];
        for a in 0..order {
            for b in 0..order {
                let prod = elements[a].compose(&elements[b]).expect("equal degrees");
                mul[a][b] = *index.get(&prod).expect("closure is complete");
            }
        }
        let inv: Vec<usize> = elements.iter().map(|p| index[&p.inverse()]).collect();
        let identity = index[&Permutation::identity(degree)];
        debug_assert_eq!(identity, 0, "identity sorts first in one-line order");

        let mut orders = vec![0usize; order];
        for x in 0..order {
            let mut m = 1;
            let mut acc = x;
            while acc != identity {
                acc = mul[acc][x];
                m += 1;
            }
            orders[x] = m;
        }

        Ok(FiniteGroup {
            degree,
            elements,
            index,
            mul,
            inv,
            identity,
            orders,
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(&[Permutation::identity(degree)], 1).expect("one element")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.orders[x]
    }

    /// `x` raised to an integer power, reduced modulo the element order.
    pub fn pow(&self, x: usize, e: i64) -> usize {
        let m = self.orders[x] as i64;
        let mut r = e % m;
        if r < 0 {
            r += m;
        }
        let mut acc = self.identity;
        for _ in 0..r {
            acc = self.mul[acc][x];
        }
        acc
    }

    /// Conjugation `a^-1 x a`.
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul[self.mul[self.inv[a]][x]][a]
    }

    /// Orbits of the conjugation action, sorted by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..n).map(|a| self.conjugate(x, a)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            classes.push(orbit);
        }
        classes.sort_by_key(|c| c[0]);
        classes
    }

    /// `{h : hx = xh}`, in ascending index order.
    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&h| self.mul[h][x] == self.mul[x][h])
            .collect()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|h| self.mul[z][h] == self.mul[h][z]))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> usize {
        self.orders.iter().copied().fold(1, num_integer::lcm)
    }

    /// Map from element order to the number of elements of that order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for &o in &self.orders {
            *hist.entry(o).or_insert(0) += 1;
        }
        hist
    }

    /// True when some element generates the whole group.
    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o == self.order())
    }

    /// Exhaustive associativity / identity / inverse check over the stored
    /// tables. Cubic in the order; intended for tests and construction-time
    /// sanity at desk scale.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order();
        let e = self.identity;
        for x in 0..n {
            if self.mul[e][x] != x || self.mul[x][e] != x {
                return Err(Error::AxiomFailure(format!("identity fails at {x}")));
            }
            if self.mul[x][self.inv[x]] != e || self.mul[self.inv[x]][x] != e {
                return Err(Error::AxiomFailure(format!("inverse fails at {x}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]] {
                        return Err(Error::AxiomFailure(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, degree: usize) -> Permutation {
        Permutation::parse(s, degree).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::from_generators(&[p("(0 1)", 3), p("(0 1 2)", 3)], DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn s3_closure_and_canonical_order() {
        let g = s3();
        assert_eq!(g.order(), 6);
        let one_line: Vec<Vec<usize>> = g.elements().iter().map(|e| e.images().to_vec()).collect();
        assert_eq!(
            one_line,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
            ]
        );
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn s3_multiplication_table_frozen() {
        // brute-forced over all 36 products of the canonical element list
        let g = s3();
        let expected = [
            [0, 1, 2, 3, 4, 5],
            [1, 0, 3, 2, 5, 4],
            [2, 4, 0, 5, 1, 3],
            [3, 5, 1, 4, 0, 2],
            [4, 2, 5, 0, 3, 1],
            [5, 3, 4, 1, 2, 0],
        ];
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(g.mul(a, b), expected[a][b], "at ({a}, {b})");
            }
        }
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_generators(&[Permutation::identity(3)], 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn dihedral_order_eight() {
        let g = FiniteGroup::from_generators(&[p("(0 1 2 3)", 4), p("(0 2)", 4)], 100).unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        let r = FiniteGroup::from_generators(&[p("(0 1)", 3), p("(0 1 2)", 3)], 5);
        assert!(matches!(r, Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn empty_and_mismatched_generators() {
        assert!(matches!(
            FiniteGroup::from_generators(&[], 10),
            Err(Error::EmptyGenerators)
        ));
        assert!(matches!(
            FiniteGroup::from_generators(&[p("(0 1)", 2), p("(0 1)", 3)], 10),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn conjugation_basics() {
        let g = s3();
        let e = g.identity();
        for x in 0..6 {
            assert_eq!(g.conjugate(x, e), x);
            for a in 0..6 {
                assert_eq!(g.conjugate(e, a), e);
                // involution: conjugating back recovers x
                assert_eq!(g.conjugate(g.conjugate(x, a), g.inv(a)), x);
            }
        }
        // a transposition conjugated by a 3-cycle is another transposition
        let t = g.index_of(&p("(0 1)", 3)).unwrap();
        let c = g.index_of(&p("(0 1 2)", 3)).unwrap();
        assert_eq!(g.element_order(g.conjugate(t, c)), 2);
        assert_ne!(g.conjugate(t, c), t);
    }

    #[test]
    fn s3_conjugacy_classes() {
        let g = s3();
        let classes = g.conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(classes[0], vec![0]);
    }

    #[test]
    fn s4_has_five_classes_matching_cycle_types() {
        let g = FiniteGroup::from_generators(&[p("(0 1)", 4), p("(0 1 2 3)", 4)], 200).unwrap();
        assert_eq!(g.order(), 24);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 5);
        for class in &classes {
            let ty = g.element(class[0]).cycle_type();
            assert!(class.iter().all(|&x| g.element(x).cycle_type() == ty));
        }
    }

    #[test]
    fn abelian_group_has_singleton_classes() {
        let g = FiniteGroup::from_generators(&[p("(0 1 2 3)", 4)], 10).unwrap();
        assert!(g.is_abelian());
        assert!(g.conjugacy_classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn centralizer_facts() {
        let g = s3();
        assert_eq!(g.centralizer(g.identity()).len(), 6);
        let t = g.index_of(&p("(0 1)", 3)).unwrap();
        let c = g.index_of(&p("(0 1 2)", 3)).unwrap();
        assert_eq!(g.centralizer(t).len(), 2);
        assert_eq!(g.centralizer(c).len(), 3);
        // centralizer contains the generated cyclic subgroup
        for x in 0..6 {
            let cent = g.centralizer(x);
            let mut acc = x;
            while acc != g.identity() {
                assert!(cent.contains(&acc));
                acc = g.mul(acc, x);
            }
        }
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = s3();
        let c = g.index_of(&p("(0 1 2)", 3)).unwrap();
        assert_eq!(g.pow(c, 0), g.identity());
        assert_eq!(g.pow(c, 3), g.identity());
        assert_eq!(g.pow(c, -1), g.inv(c));
        assert_eq!(g.pow(c, -2), c);
        assert_eq!(g.pow(c, 7), c);
    }

    #[test]
    fn axioms_hold_for_constructed_groups() {
        s3().verify_axioms().unwrap();
        FiniteGroup::from_generators(&[p("(0 1 2 3)", 4), p("(0 2)", 4)], 100)
            .unwrap()
            .verify_axioms()
            .unwrap();
    }

    #[test]
    fn structural_queries() {
        let g = s3();
        assert!(!g.is_abelian());
        assert!(!g.is_cyclic());
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.center(), vec![0]);
        let hist = g.order_histogram();
        assert_eq!(hist.get(&1), Some(&1));
        assert_eq!(hist.get(&2), Some(&3));
        assert_eq!(hist.get(&3), Some(&2));
    }
}
