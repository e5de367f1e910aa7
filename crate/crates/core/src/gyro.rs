//! Right gyrogroup verification: gyrations solved from the defining
//! equation, the closed-form conjugation route for deformed loops, and the
//! group the gyrations generate.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caf::ClassAssignedFunction;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::loops::{deformed_loop, RightLoopTable};
use crate::perm::Permutation;

/// Closure cap for the group generated by gyrations.
pub const GYRATION_GROUP_CAP: usize = 2000;

/// The automorphism measuring the associativity defect at a pair `(y, z)`:
/// the unique map with `(x o y) o z = action(x) o (y o z)` for every `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gyration {
    pub y: usize,
    pub z: usize,
    pub action: Permutation,
}

/// Solves the defining equation by inverting the right translation by
/// `y o z`. Fails when some right translation is not bijective.
pub fn solve_gyration(table: &RightLoopTable, y: usize, z: usize) -> Result<Gyration> {
    let n = table.order();
    let w = table.op(y, z);
    let mut col_inv = vec![usize::MAX; n];
    for x in 0..n {
        let img = table.op(x, w);
        if col_inv[img] != usize::MAX {
            return Err(Error::NonBijectiveColumn { column: w });
        }
        col_inv[img] = x;
    }
    let images: Vec<usize> = (0..n)
        .map(|x| col_inv[table.op(table.op(x, y), z)])
        .collect();
    let action = Permutation::from_images(images).map_err(|_| Error::NonBijectiveColumn {
        column: table.op(y, z),
    })?;
    Ok(Gyration { y, z, action })
}

/// The closed form for loops deformed by a class assigned function: the
/// gyration at `(y, z)` is conjugation by
/// `y^(k(y)) (yz)^(-k(y o z)) z^(k(z))`, with `yz` the group product and
/// `y o z` the deformed one.
pub fn closed_form_gyration(
    group: &Arc<FiniteGroup>,
    k: &ClassAssignedFunction,
    y: usize,
    z: usize,
) -> Gyration {
    let ky = (k.evaluate(y) % group.element_order(y) as u64) as i64;
    let kz = (k.evaluate(z) % group.element_order(z) as u64) as i64;
    // y o_k z = y^(-k(z))-conjugated ... computed directly from the formula
    let zc = group.pow(z, -(kz));
    let w = group.mul(group.mul(zc, y), group.pow(z, kz + 1));
    let kw = (k.evaluate(w) % group.element_order(w) as u64) as i64;
    let yz = group.mul(y, z);
    let conjugator = group.mul(
        group.mul(group.pow(y, ky), group.pow(yz, -kw)),
        group.pow(z, kz),
    );
    let images: Vec<usize> = (0..group.order())
        .map(|x| group.conjugate(x, conjugator))
        .collect();
    Gyration {
        y,
        z,
        action: Permutation::from_images(images).expect("conjugation is a bijection"),
    }
}

/// Automorphism failure witness: the pair where `p(x o y) != p(x) o p(y)`.
pub fn is_automorphism(
    table: &RightLoopTable,
    p: &Permutation,
) -> std::result::Result<(), (usize, usize)> {
    let n = table.order();
    assert_eq!(p.degree(), n, "permutation degree must match table order");
    for x in 0..n {
        for y in 0..n {
            if p.apply(table.op(x, y)) != table.op(p.apply(x), p.apply(y)) {
                return Err((x, y));
            }
        }
    }
    Ok(())
}

/// One verified axiom with an optional human-readable counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Flag {
    fn pass() -> Self {
        Flag {
            ok: true,
            witness: None,
        }
    }
    fn fail(witness: String) -> Self {
        Flag {
            ok: false,
            witness: Some(witness),
        }
    }
}

/// Axiom-by-axiom verification report. All flags true exactly when the
/// table is a right gyrogroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GyroReport {
    pub right_identity: Flag,
    pub right_inverses: Flag,
    pub gyrations_exist: Flag,
    pub gyrations_are_automorphisms: Flag,
    pub inverse_pair_gyrations_trivial: Flag,
    pub gyration_group_order: Option<usize>,
    pub gyration_group_abelian: Option<bool>,
}

impl GyroReport {
    pub fn is_right_gyrogroup(&self) -> bool {
        self.right_identity.ok
            && self.right_inverses.ok
            && self.gyrations_exist.ok
            && self.gyrations_are_automorphisms.ok
            && self.inverse_pair_gyrations_trivial.ok
    }
}

/// Runs every axiom check exhaustively. Never fails: problems land in the
/// report, not in an error.
pub fn verify_right_gyrogroup(table: &RightLoopTable) -> GyroReport {
    verify(table, false)
}

/// As [`verify_right_gyrogroup`], plus a direct uniqueness sweep over all
/// `(x, y, z)` triples instead of relying on translation bijectivity alone.
pub fn verify_right_gyrogroup_exhaustive(table: &RightLoopTable) -> GyroReport {
    verify(table, true)
}

fn verify(table: &RightLoopTable, uniqueness_sweep: bool) -> GyroReport {
    let n = table.order();

    let right_identity = match table.right_identity_violation() {
        None => Flag::pass(),
        Some(x) => Flag::fail(format!("{} o e != {}", table.label(x), table.label(x))),
    };

    let (right_inverses, inverses) = match table.right_inverses() {
        Ok(inv) => (Flag::pass(), Some(inv)),
        Err(x) => (
            Flag::fail(format!("{} has no right inverse", table.label(x))),
            None,
        ),
    };

    if let Some(col) = table.non_bijective_column() {
        return GyroReport {
            right_identity,
            right_inverses,
            gyrations_exist: Flag::fail(format!(
                "right translation by {} is not a bijection",
                table.label(col)
            )),
            gyrations_are_automorphisms: Flag::fail("gyrations unsolvable".to_string()),
            inverse_pair_gyrations_trivial: Flag::fail("gyrations unsolvable".to_string()),
            gyration_group_order: None,
            gyration_group_abelian: None,
        };
    }

    let mut gyrations_exist = Flag::pass();
    if uniqueness_sweep {
        'sweep: for y in 0..n {
            for z in 0..n {
                let w = table.op(y, z);
                for x in 0..n {
                    let target = table.op(table.op(x, y), z);
                    let count = (0..n).filter(|&s| table.op(s, w) == target).count();
                    if count != 1 {
                        gyrations_exist = Flag::fail(format!(
                            "{} solutions of s o ({} o {}) = ({} o {}) o {}",
                            count,
                            table.label(y),
                            table.label(z),
                            table.label(x),
                            table.label(y),
                            table.label(z),
                        ));
                        break 'sweep;
                    }
                }
            }
        }
    }

    let mut distinct: Vec<Permutation> = Vec::new();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut gyrations_are_automorphisms = Flag::pass();
    let mut inverse_pair_gyrations_trivial = Flag::pass();
    for y in 0..n {
        for z in 0..n {
            let gyr = solve_gyration(table, y, z).expect("columns checked bijective");
            if let Some(inv) = &inverses {
                if z == inv[y] && !gyr.action.is_identity() && inverse_pair_gyrations_trivial.ok {
                    inverse_pair_gyrations_trivial = Flag::fail(format!(
                        "gyration at ({}, {}) is not the identity",
                        table.label(y),
                        table.label(z)
                    ));
                }
            }
            if seen.insert(gyr.action.clone()) {
                if gyrations_are_automorphisms.ok {
                    if let Err((a, b)) = is_automorphism(table, &gyr.action) {
                        gyrations_are_automorphisms = Flag::fail(format!(
                            "gyration at ({}, {}) breaks {} o {}",
                            table.label(y),
                            table.label(z),
                            table.label(a),
                            table.label(b)
                        ));
                    }
                }
                distinct.push(gyr.action);
            }
        }
    }
    if inverses.is_none() {
        inverse_pair_gyrations_trivial =
            Flag::fail("right inverses missing; pairs undefined".to_string());
    }

    let (order, abelian) = match FiniteGroup::from_generators(&distinct, GYRATION_GROUP_CAP) {
        Ok(group) => (Some(group.order()), Some(group.is_abelian())),
        Err(_) => (None, None),
    };

    GyroReport {
        right_identity,
        right_inverses,
        gyrations_exist,
        gyrations_are_automorphisms,
        inverse_pair_gyrations_trivial,
        gyration_group_order: order,
        gyration_group_abelian: abelian,
    }
}

/// The permutation group generated by all gyrations, acting on loop
/// element indices.
pub fn gyration_group(table: &RightLoopTable, cap: usize) -> Result<FiniteGroup> {
    let n = table.order();
    let mut generators: Vec<Permutation> = Vec::new();
    let mut seen = HashSet::new();
    for y in 0..n {
        for z in 0..n {
            let gyr = solve_gyration(table, y, z)?;
            if seen.insert(gyr.action.clone()) {
                generators.push(gyr.action);
            }
        }
    }
    FiniteGroup::from_generators(&generators, cap)
}

/// Compares the solved and closed-form gyrations at every pair.
pub fn gyrations_match_closed_form(
    group: &Arc<FiniteGroup>,
    k: &ClassAssignedFunction,
) -> Result<bool> {
    let table = deformed_loop(group, k);
    for y in 0..group.order() {
        for z in 0..group.order() {
            let solved = solve_gyration(&table, y, z)?;
            let closed = closed_form_gyration(group, k, y, z);
            if solved.action != closed.action {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
