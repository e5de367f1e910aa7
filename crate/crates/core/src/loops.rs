//! Right loop tables and the exponent-deformed operations built from class
//! assigned functions.

use std::sync::Arc;

use crate::caf::ClassAssignedFunction;
use crate::equivariant::EquivariantMap;
use crate::error::{Error, Result};
use crate::genprod::lemma_criterion;
use crate::group::FiniteGroup;
use crate::iso::CayleyTable;

/// A magma table with a designated identity candidate. Construction only
/// checks shape; [`RightLoopTable::validate_right_loop`] checks the right
/// loop axioms, and the verifier in [`crate::gyro`] reports on arbitrary
/// tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightLoopTable {
    labels: Vec<String>,
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl RightLoopTable {
    pub fn from_parts(labels: Vec<String>, identity: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if labels.len() != n {
            return Err(Error::InvalidTable(format!(
                "{} labels for {} rows",
                labels.len(),
                n
            )));
        }
        if identity >= n {
            return Err(Error::InvalidTable(format!(
                "identity index {identity} out of range for order {n}"
            )));
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::InvalidTable("table is not square".to_string()));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidTable(format!("entry {bad} out of range")));
            }
        }
        Ok(RightLoopTable {
            labels,
            identity,
            table,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// First element violating `x o e = x`, if any.
    pub fn right_identity_violation(&self) -> Option<usize> {
        (0..self.order()).find(|&x| self.table[x][self.identity] != x)
    }

    /// Right inverses relative to the designated identity; the error value
    /// is the first element with no right inverse.
    pub fn right_inverses(&self) -> std::result::Result<Vec<usize>, usize> {
        let n = self.order();
        (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| self.table[x][y] == self.identity)
                    .ok_or(x)
            })
            .collect()
    }

    /// First column that is not a permutation of the elements, if any.
    pub fn non_bijective_column(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&y| {
            let mut seen = vec![false; n];
            (0..n).any(|x| std::mem::replace(&mut seen[self.table[x][y]], true))
        })
    }

    /// Checks the right loop axioms: right identity, right inverses, and
    /// bijective right translations.
    pub fn validate_right_loop(&self) -> Result<()> {
        if let Some(x) = self.right_identity_violation() {
            return Err(Error::InvalidTable(format!(
                "right identity fails at {}",
                self.labels[x]
            )));
        }
        if let Err(x) = self.right_inverses() {
            return Err(Error::InvalidTable(format!(
                "no right inverse for {}",
                self.labels[x]
            )));
        }
        if let Some(y) = self.non_bijective_column() {
            return Err(Error::NonBijectiveColumn { column: y });
        }
        Ok(())
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.table[self.table[x][y]][z] == self.table[x][self.table[y][z]]))
        })
    }
}

impl CayleyTable for RightLoopTable {
    fn order(&self) -> usize {
        RightLoopTable::order(self)
    }
    fn op(&self, a: usize, b: usize) -> usize {
        RightLoopTable::op(self, a, b)
    }
    fn identity(&self) -> usize {
        RightLoopTable::identity(self)
    }
}

fn group_labels(group: &FiniteGroup) -> Vec<String> {
    group.elements().iter().map(|p| p.to_string()).collect()
}

/// The group's own multiplication table as a loop table.
pub fn group_table(group: &FiniteGroup) -> RightLoopTable {
    let n = group.order();
    let table = (0..n)
        .map(|a| (0..n).map(|b| group.mul(a, b)).collect())
        .collect();
    RightLoopTable {
        labels: group_labels(group),
        identity: group.identity(),
        table,
    }
}

/// The undeformed transversal operation `x o y = y^-1 x y^2`.
pub fn base_op(group: &FiniteGroup, x: usize, y: usize) -> usize {
    let y2 = group.mul(y, y);
    group.mul(group.mul(group.inv(y), x), y2)
}

/// The deformed operation `x o_k y = y^(-k(y)) x y^(k(y)+1)`.
///
/// The table always carries a two-sided identity, right inverses equal to
/// group inverses, and bijective right translations.
pub fn deformed_loop(group: &Arc<FiniteGroup>, k: &ClassAssignedFunction) -> RightLoopTable {
    let n = group.order();
    let mut table = vec![vec![0usize; n]; n];
    for y in 0..n {
        let ky = (k.evaluate(y) % group.element_order(y) as u64) as i64;
        let left = group.pow(y, -ky);
        let right = group.pow(y, ky + 1);
        for x in 0..n {
            table[x][y] = group.mul(group.mul(left, x), right);
        }
    }
    RightLoopTable {
        labels: group_labels(group),
        identity: group.identity(),
        table,
    }
}

/// Deformation by an arbitrary map `g` with `g(1) = 1`: conjugate by `g(y)`,
/// then translate by `y`, i.e. `x o_g y = (g(y)^-1 x g(y)) y`.
///
/// Requires `g` to satisfy the transversal criterion of
/// [`lemma_criterion`]; for the map induced by a class assigned function
/// this reproduces [`deformed_loop`] exactly.
pub fn deformed_loop_general(
    group: &Arc<FiniteGroup>,
    g: &EquivariantMap,
) -> Result<RightLoopTable> {
    lemma_criterion(group, g.values())
        .map_err(|w| Error::CriterionFailed(w.describe(group)))?;
    let n = group.order();
    let mut table = vec![vec![0usize; n]; n];
    for y in 0..n {
        let gy = g.values()[y];
        for x in 0..n {
            table[x][y] = group.mul(group.conjugate(x, gy), y);
        }
    }
    Ok(RightLoopTable {
        labels: group_labels(group),
        identity: group.identity(),
        table,
    })
}
