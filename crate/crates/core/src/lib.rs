//! Construction, verification, enumeration, and counting of right
//! gyrogroup structures on finite permutation groups.
//!
//! The pipeline: build a group ([`FiniteGroup`]), partition it under
//! conjugacy-merged-with-inversion ([`r_classes`]), pick a class assigned
//! exponent function ([`ClassAssignedFunction`]), deform the multiplication
//! ([`deformed_loop`]), and verify the right gyrogroup axioms
//! ([`verify_right_gyrogroup`]). The generalized pair group
//! ([`GenProduct`]) hosts the transversal view of the same data, and
//! [`count_gyrotransversals`] counts the structures over symmetric groups
//! in closed form.

pub mod caf;
pub mod classify;
pub mod counting;
pub mod equivariant;
pub mod error;
pub mod genprod;
pub mod group;
pub mod gyro;
pub mod iso;
pub mod json;
pub mod loops;
pub mod perm;
pub mod rclass;
pub mod registry;

pub use caf::{enumerate_cafs, parse_kspec, ClassAssignedFunction};
pub use classify::{classify_deformed_loops, identify_group, Classification, LoopClass};
pub use counting::{brute_count, count_gyrotransversals, cycle_types, CycleType};
pub use equivariant::{
    enumerate_equivariant_maps, survey_equivariant_maps, EquivariantMap, EquivariantSurvey,
};
pub use error::{Error, Result};
pub use genprod::{
    embed_transversal, is_gyrotransversal, lemma_criterion, GenProduct, Transversal, VerifyMode,
};
pub use group::{FiniteGroup, DEFAULT_GROUP_CAP};
pub use gyro::{
    closed_form_gyration, gyration_group, is_automorphism, solve_gyration,
    verify_right_gyrogroup, verify_right_gyrogroup_exhaustive, GyroReport, Gyration,
};
pub use iso::{tables_isomorphic, CayleyTable, IsoCertificate, NonIsoReason};
pub use json::TableJson;
pub use loops::{base_op, deformed_loop, deformed_loop_general, group_table, RightLoopTable};
pub use perm::Permutation;
pub use rclass::{r_classes, RClassPartition};
pub use registry::{group_by_name, parse_group_spec};
