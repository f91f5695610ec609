use conicgroup::quadform::convenient_sweep;
use serde::{Deserialize, Serialize};

use crate::render::{Report, Table};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub d: u64,
    pub squarefree: bool,
    pub residue_ok: bool,
    pub elementary_two: bool,
    pub applicable: bool,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvenientDoc {
    pub max: u64,
    pub applicable: Vec<u64>,
    pub rows: Vec<VerdictRow>,
}

impl ConvenientDoc {
    pub fn build(max: u64, applicable_only: bool) -> Result<Self, CliError> {
        if max == 0 {
            return Err(CliError::Usage("max must be at least 1".into()));
        }
        let rows: Vec<VerdictRow> = convenient_sweep(max)?
            .into_iter()
            .map(|v| VerdictRow {
                d: v.d,
                applicable: v.is_applicable(),
                squarefree: v.squarefree,
                residue_ok: v.residue_ok,
                elementary_two: v.elementary_two,
                reasons: v.reasons.iter().map(|r| r.code().to_string()).collect(),
            })
            .collect();
        let applicable = rows.iter().filter(|r| r.applicable).map(|r| r.d).collect();
        let rows = rows
            .into_iter()
            .filter(|r| r.applicable || !applicable_only)
            .collect();
        Ok(ConvenientDoc {
            max,
            applicable,
            rows,
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(&[
            "d",
            "squarefree",
            "residue_ok",
            "elementary_two",
            "applicable",
            "reasons",
        ]);
        for r in &self.rows {
            t.push(vec![
                r.d.to_string(),
                r.squarefree.to_string(),
                r.residue_ok.to_string(),
                r.elementary_two.to_string(),
                r.applicable.to_string(),
                r.reasons.join(";"),
            ]);
        }
        t
    }
}

impl Report for ConvenientDoc {
    fn markdown(&self) -> String {
        let list: Vec<String> = self.applicable.iter().map(u64::to_string).collect();
        format!(
            "# Applicable D up to {}\n\n{} applicable: {}\n\n{}",
            self.max,
            self.applicable.len(),
            list.join(", "),
            self.table().markdown()
        )
    }

    fn csv(&self) -> String {
        self.table().csv()
    }
}
