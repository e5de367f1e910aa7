//! Maps `g : G -> G` with `g(1) = 1` that invert inverses and commute with
//! conjugation. Every class assigned function induces one through
//! `w -> w^(k(w))`; the enumeration here searches the full space, which can
//! be strictly larger.

use std::sync::Arc;

use crate::caf::ClassAssignedFunction;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::rclass::{r_classes, RClassPartition};

/// Default cap on the group order for the equivariant-map search.
pub const DEFAULT_EQUIVARIANT_ORDER_CAP: usize = 24;
/// Cap on the number of maps the enumeration may produce.
pub const DEFAULT_EQUIVARIANT_COUNT_CAP: u128 = 1 << 20;

/// A map on element indices with `g(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantMap {
    group: Arc<FiniteGroup>,
    values: Vec<usize>,
}

impl EquivariantMap {
    /// Wraps a value vector after checking the two defining conditions.
    pub fn new(group: Arc<FiniteGroup>, values: Vec<usize>) -> Result<Self> {
        let map = Self::new_unchecked(group, values);
        map.check()?;
        Ok(map)
    }

    /// Wraps a value vector checking only shape and `g(1) = 1`; the
    /// defining conditions may fail. Useful for negative fixtures.
    pub fn new_unchecked(group: Arc<FiniteGroup>, values: Vec<usize>) -> Self {
        assert_eq!(values.len(), group.order(), "one value per element");
        EquivariantMap { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    fn check(&self) -> Result<()> {
        let g = &self.group;
        if self.values[g.identity()] != g.identity() {
            return Err(Error::MapDoesNotFixIdentity);
        }
        for x in 0..g.order() {
            if self.values[g.inv(x)] != g.inv(self.values[x]) {
                return Err(Error::CriterionFailed(format!(
                    "g({}^-1) != g({})^-1",
                    g.element(x),
                    g.element(x)
                )));
            }
            for h in 0..g.order() {
                if self.values[g.conjugate(x, h)] != g.conjugate(self.values[x], h) {
                    return Err(Error::CriterionFailed(format!(
                        "g fails equivariance at x={}, h={}",
                        g.element(x),
                        g.element(h)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Recovers the class assigned function inducing this map, when there is
    /// one: each value must be a power of its argument with a consistent
    /// exponent across every class.
    pub fn class_assigned_exponents(
        &self,
        partition: &Arc<RClassPartition>,
    ) -> Option<ClassAssignedFunction> {
        let g = &self.group;
        let mut exps = vec![0u64; partition.len()];
        for ci in 0..partition.len() {
            let rep = partition.representative(ci);
            let order = g.element_order(rep);
            let exp = (0..order).find(|&m| g.pow(rep, m as i64) == self.values[rep])?;
            for &x in partition.class(ci) {
                if g.pow(x, exp as i64) != self.values[x] {
                    return None;
                }
            }
            exps[ci] = exp as u64;
        }
        ClassAssignedFunction::new(partition.clone(), exps).ok()
    }
}

/// Center of the centralizer of `w`: the only admissible values of an
/// equivariant map at `w`, since `g(w)` must commute with everything fixing
/// `w` under conjugation.
fn admissible_values(group: &FiniteGroup, w: usize) -> Vec<usize> {
    let cent = group.centralizer(w);
    cent.iter()
        .copied()
        .filter(|&c| cent.iter().all(|&h| group.mul(c, h) == group.mul(h, c)))
        .collect()
}

/// One conjugacy block of the search: a conjugacy class plus, when
/// distinct, the class of its inverses (the values there are forced).
struct Block {
    members: Vec<usize>,
    transporter: Vec<usize>, // members[i] = transporter[i]^-1 . rep . transporter[i]
    rep: usize,
    inverse_linked: bool, // rep^-1 lies in the same conjugacy class
}

fn blocks(group: &FiniteGroup) -> Vec<Block> {
    let conj = group.conjugacy_classes();
    let mut class_of = vec![0usize; group.order()];
    for (ci, class) in conj.iter().enumerate() {
        for &x in class {
            class_of[x] = ci;
        }
    }
    let mut seen = vec![false; conj.len()];
    let mut out = Vec::new();
    for (ci, class) in conj.iter().enumerate() {
        if seen[ci] {
            continue;
        }
        seen[ci] = true;
        let rep = class[0];
        let inv_ci = class_of[group.inv(rep)];
        let inverse_linked = inv_ci == ci;
        if !inverse_linked {
            seen[inv_ci] = true;
        }
        let transporter: Vec<usize> = class
            .iter()
            .map(|&u| {
                (0..group.order())
                    .find(|&t| group.conjugate(rep, t) == u)
                    .expect("u is conjugate to rep")
            })
            .collect();
        out.push(Block {
            members: class.clone(),
            transporter,
            rep,
            inverse_linked,
        });
    }
    out
}

/// Valid value assignments for one block. Candidates at the representative
/// are propagated by conjugation over the class; when the inverse sits in
/// the same class the propagated value must also invert correctly, otherwise
/// the inverse class values are forced by inversion.
fn block_assignments(group: &FiniteGroup, block: &Block) -> Vec<Vec<(usize, usize)>> {
    if block.rep == group.identity() {
        return vec![vec![(group.identity(), group.identity())]];
    }
    let mut out = Vec::new();
    'candidate: for cand in admissible_values(group, block.rep) {
        let mut assignment = Vec::new();
        for (i, &u) in block.members.iter().enumerate() {
            let value = group.conjugate(cand, block.transporter[i]);
            assignment.push((u, value));
        }
        if block.inverse_linked {
            // inversion must agree with conjugation propagation inside the class
            let lookup = |x: usize| {
                assignment
                    .iter()
                    .find(|&&(u, _)| u == x)
                    .map(|&(_, v)| v)
                    .expect("class member")
            };
            for &(u, v) in &assignment {
                if lookup(group.inv(u)) != group.inv(v) {
                    continue 'candidate;
                }
            }
        } else {
            let forced: Vec<(usize, usize)> = assignment
                .iter()
                .map(|&(u, v)| (group.inv(u), group.inv(v)))
                .collect();
            assignment.extend(forced);
        }
        out.push(assignment);
    }
    out
}

/// Enumerates every map `g` with `g(1) = 1`, `g(x^-1) = g(x)^-1`, and
/// `g(h^-1 x h) = h^-1 g(x) h`, in a deterministic order.
///
/// Fails when the group order exceeds `order_cap` or the number of maps
/// would exceed [`DEFAULT_EQUIVARIANT_COUNT_CAP`].
pub fn enumerate_equivariant_maps(
    group: &Arc<FiniteGroup>,
    order_cap: usize,
) -> Result<Vec<EquivariantMap>> {
    if group.order() > order_cap {
        return Err(Error::SizeCapExceeded {
            what: "equivariant-map search",
            size: group.order(),
            cap: order_cap,
        });
    }
    let blocks = blocks(group);
    let assignments: Vec<Vec<Vec<(usize, usize)>>> = blocks
        .iter()
        .map(|b| block_assignments(group, b))
        .collect();

    let predicted: u128 = assignments.iter().map(|a| a.len() as u128).product();
    if predicted > DEFAULT_EQUIVARIANT_COUNT_CAP {
        return Err(Error::SizeCapExceeded {
            what: "equivariant-map enumeration",
            size: usize::MAX,
            cap: DEFAULT_EQUIVARIANT_COUNT_CAP as usize,
        });
    }

    let mut maps = Vec::with_capacity(predicted as usize);
    let mut choice = vec![0usize; assignments.len()];
    'outer: loop {
        let mut values = vec![usize::MAX; group.order()];
        for (bi, &ci) in choice.iter().enumerate() {
            for &(u, v) in &assignments[bi][ci] {
                values[u] = v;
            }
        }
        debug_assert!(values.iter().all(|&v| v != usize::MAX));
        // propagation guarantees the conditions; keep the full check as a
        // debug-time safety net
        let map = EquivariantMap::new_unchecked(group.clone(), values);
        debug_assert!(map.check().is_ok());
        maps.push(map);

        let mut pos = choice.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < assignments[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
    Ok(maps)
}

/// Equivariant maps together with the class-assigned subset, for reporting.
pub struct EquivariantSurvey {
    pub partition: Arc<RClassPartition>,
    pub maps: Vec<EquivariantMap>,
    /// For each map, the class assigned function inducing it, when one exists.
    pub class_assigned: Vec<Option<ClassAssignedFunction>>,
}

impl EquivariantSurvey {
    pub fn surplus_indices(&self) -> Vec<usize> {
        self.class_assigned
            .iter()
            .enumerate()
            .filter_map(|(i, ca)| ca.is_none().then_some(i))
            .collect()
    }
}

/// Runs the full search and classifies each map as class-assigned or not.
pub fn survey_equivariant_maps(
    group: &Arc<FiniteGroup>,
    order_cap: usize,
) -> Result<EquivariantSurvey> {
    let partition = Arc::new(r_classes(group.clone()));
    let maps = enumerate_equivariant_maps(group, order_cap)?;
    let class_assigned = maps
        .iter()
        .map(|m| m.class_assigned_exponents(&partition))
        .collect();
    Ok(EquivariantSurvey {
        partition,
        maps,
        class_assigned,
    })
}
