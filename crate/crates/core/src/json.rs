//! JSON schema for operation tables and verification reports.
//!
//! A table serializes as
//! `{"kind":"right_loop","order":n,"identity":i,"elements":[...],"table":[[...]]}`
//! with `"kind":"group"` for group multiplication tables; both re-import as
//! loop tables for re-verification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::gyro::GyroReport;
use crate::loops::{group_table, RightLoopTable};

pub const KIND_RIGHT_LOOP: &str = "right_loop";
pub const KIND_GROUP: &str = "group";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableJson {
    pub kind: String,
    pub order: usize,
    pub identity: usize,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl TableJson {
    pub fn from_loop(table: &RightLoopTable) -> Self {
        TableJson {
            kind: KIND_RIGHT_LOOP.to_string(),
            order: table.order(),
            identity: table.identity(),
            elements: table.labels().to_vec(),
            table: table.table().to_vec(),
        }
    }

    pub fn from_group(group: &FiniteGroup) -> Self {
        let table = group_table(group);
        TableJson {
            kind: KIND_GROUP.to_string(),
            order: table.order(),
            identity: table.identity(),
            elements: table.labels().to_vec(),
            table: table.table().to_vec(),
        }
    }

    pub fn into_loop_table(self) -> Result<RightLoopTable> {
        if self.kind != KIND_RIGHT_LOOP && self.kind != KIND_GROUP {
            return Err(Error::InvalidTable(format!("unknown kind {:?}", self.kind)));
        }
        if self.order != self.table.len() {
            return Err(Error::InvalidTable(format!(
                "declared order {} but {} rows",
                self.order,
                self.table.len()
            )));
        }
        RightLoopTable::from_parts(self.elements, self.identity, self.table)
    }
}

pub fn table_to_json_string(table: &TableJson) -> String {
    serde_json::to_string_pretty(table).expect("plain data serializes")
}

pub fn table_from_json_str(s: &str) -> Result<RightLoopTable> {
    let parsed: TableJson = serde_json::from_str(s).map_err(|e| Error::Parse {
        input: "<json>".to_string(),
        reason: e.to_string(),
    })?;
    parsed.into_loop_table()
}

pub fn report_to_json_string(report: &GyroReport) -> String {
    serde_json::to_string_pretty(report).expect("plain data serializes")
}

pub fn report_from_json_str(s: &str) -> Result<GyroReport> {
    serde_json::from_str(s).map_err(|e| Error::Parse {
        input: "<json>".to_string(),
        reason: e.to_string(),
    })
}
