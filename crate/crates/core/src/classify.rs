//! Enumeration of every canonical deformation of a group and their
//! partition into isomorphism classes.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::caf::{enumerate_cafs, ClassAssignedFunction};
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::gyro::{gyration_group, verify_right_gyrogroup, GyroReport, GYRATION_GROUP_CAP};
use crate::iso::tables_isomorphic;
use crate::loops::{deformed_loop, RightLoopTable};
use crate::rclass::r_classes;
use crate::registry::group_by_name;

/// Structural summary of a gyration group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSummary {
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    pub exponent: usize,
    pub order_histogram: BTreeMap<usize, usize>,
    /// Registered name when the group matches one, e.g. `C3` or `S3`.
    pub name: Option<String>,
}

/// Tries to identify a small group against the registered families.
pub fn identify_group(group: &FiniteGroup) -> Option<String> {
    let n = group.order();
    if n == 1 {
        return Some("C1".to_string());
    }
    if group.is_cyclic() {
        return Some(format!("C{n}"));
    }
    if n == 4 && group.is_abelian() {
        return Some("C2xC2".to_string());
    }
    if n > 24 {
        return None;
    }
    let mut candidates: Vec<String> = Vec::new();
    for m in 3..=4usize {
        if (1..=m).product::<usize>() == n {
            candidates.push(format!("S{m}"));
        }
        if (1..=m).product::<usize>() / 2 == n {
            candidates.push(format!("A{m}"));
        }
    }
    if n % 2 == 0 && n / 2 >= 3 {
        candidates.push(format!("D{}", n / 2));
    }
    if n == 8 {
        candidates.push("Q8".to_string());
    }
    for name in candidates {
        if let Ok(candidate) = group_by_name(&name, n + 1) {
            if let Ok(cert) = tables_isomorphic(group, &candidate) {
                if cert.is_isomorphic() {
                    return Some(name);
                }
            }
        }
    }
    None
}

pub fn summarize_group(group: &FiniteGroup) -> GroupSummary {
    GroupSummary {
        order: group.order(),
        abelian: group.is_abelian(),
        cyclic: group.is_cyclic(),
        exponent: group.exponent(),
        order_histogram: group.order_histogram(),
        name: identify_group(group),
    }
}

/// One isomorphism class of deformed loops.
#[derive(Debug, Clone)]
pub struct LoopClass {
    /// First enumerated function landing in this class.
    pub representative: ClassAssignedFunction,
    /// Every enumerated function whose loop lies in this class.
    pub members: Vec<ClassAssignedFunction>,
    pub table: RightLoopTable,
    pub report: GyroReport,
    pub associative: bool,
    pub gyration_group: GroupSummary,
}

/// Full classification of the canonical deformations of one group.
#[derive(Debug, Clone)]
pub struct Classification {
    pub group_order: usize,
    pub function_count: usize,
    pub classes: Vec<LoopClass>,
}

/// Enumerates all canonical class assigned functions, builds each deformed
/// loop, and groups them into isomorphism classes in enumeration order.
pub fn classify_deformed_loops(group: &Arc<FiniteGroup>) -> Result<Classification> {
    let partition = Arc::new(r_classes(group.clone()));
    let mut classes: Vec<LoopClass> = Vec::new();
    let mut count = 0usize;
    for k in enumerate_cafs(partition) {
        count += 1;
        let table = deformed_loop(group, &k);
        let mut placed = false;
        for class in &mut classes {
            if tables_isomorphic(&class.table, &table)?.is_isomorphic() {
                class.members.push(k.clone());
                placed = true;
                break;
            }
        }
        if !placed {
            let report = verify_right_gyrogroup(&table);
            let gyr = gyration_group(&table, GYRATION_GROUP_CAP)?;
            classes.push(LoopClass {
                representative: k.clone(),
                members: vec![k],
                associative: table.is_associative(),
                gyration_group: summarize_group(&gyr),
                table,
                report,
            });
        }
    }
    Ok(Classification {
        group_order: group.order(),
        function_count: count,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(name: &str) -> Classification {
        let g = Arc::new(group_by_name(name, 200).unwrap());
        classify_deformed_loops(&g).unwrap()
    }

    #[test]
    fn trivial_group_single_loop() {
        let c = classify("S1");
        assert_eq!(c.function_count, 1);
        assert_eq!(c.classes.len(), 1);
    }

    #[test]
    fn s3_classification_frozen() {
        // frozen from an independent exhaustive pass: six canonical
        // functions fall into three classes of two, one associative
        let c = classify("S3");
        assert_eq!(c.function_count, 6);
        assert_eq!(c.classes.len(), 3);
        let sizes: Vec<usize> = c.classes.iter().map(|cl| cl.members.len()).collect();
        assert_eq!(sizes, vec![2, 2, 2]);
        let assoc: Vec<bool> = c.classes.iter().map(|cl| cl.associative).collect();
        assert_eq!(assoc, vec![true, false, false]);
        let gyr_orders: Vec<usize> = c.classes.iter().map(|cl| cl.gyration_group.order).collect();
        assert_eq!(gyr_orders, vec![1, 3, 3]);
        // the two loops with trivial gyrations are the group and its mirror
        assert_eq!(
            c.classes[0]
                .members
                .iter()
                .map(|k| k.exponents().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0, 0, 0], vec![0, 1, 2]]
        );
        assert_eq!(c.classes[1].gyration_group.name.as_deref(), Some("C3"));
    }

    #[test]
    fn d4_classification_frozen() {
        let c = classify("D4");
        assert_eq!(c.function_count, 32);
        assert_eq!(c.classes.len(), 3);
        let sizes: Vec<usize> = c.classes.iter().map(|cl| cl.members.len()).collect();
        assert_eq!(sizes, vec![8, 8, 16]);
        assert!(c.classes.iter().all(|cl| cl.report.is_right_gyrogroup()));
    }

    #[test]
    fn q8_classification_frozen() {
        let c = classify("Q8");
        assert_eq!(c.function_count, 128);
        assert_eq!(c.classes.len(), 2);
        let sizes: Vec<usize> = c.classes.iter().map(|cl| cl.members.len()).collect();
        assert_eq!(sizes, vec![32, 96]);
    }

    #[test]
    fn identification_of_small_groups() {
        for (name, expect) in [
            ("S3", "S3"),
            ("A3", "C3"),
            ("C6", "C6"),
            ("D4", "D4"),
            ("Q8", "Q8"),
            ("A4", "A4"),
            ("S4", "S4"),
        ] {
            let g = group_by_name(name, 200).unwrap();
            assert_eq!(identify_group(&g).as_deref(), Some(expect), "{name}");
        }
        let v4 = crate::registry::parse_group_spec("gens:(0 1),(2 3)", 200).unwrap();
        assert_eq!(identify_group(&v4).as_deref(), Some("C2xC2"));
    }
}
