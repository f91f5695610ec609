use conicgroup::oracle::{brute_force_solutions, sweep_with};
use conicgroup::Conic;
use serde::{Deserialize, Serialize};

use crate::render::{element, Report, Table};
use crate::solve::{guarantee_name, warning};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceRow {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub element: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceDoc {
    pub d: u64,
    pub c: u64,
    pub solutions: Vec<BruteForceRow>,
}

impl BruteForceDoc {
    pub fn build(d: u64, c: u64, unicode: bool) -> Result<Self, CliError> {
        if c <= 1 {
            return Err(CliError::Usage(format!("c must be greater than 1, got {c}")));
        }
        let solutions = brute_force_solutions(d, c)?
            .into_iter()
            .map(|t| BruteForceRow {
                a: t.a(),
                b: t.b(),
                c: t.c(),
                element: element(d, t.a(), t.b(), t.c(), unicode),
            })
            .collect();
        Ok(BruteForceDoc { d, c, solutions })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(&["a", "b", "c", "element"]);
        for s in &self.solutions {
            t.push(vec![
                s.a.to_string(),
                s.b.to_string(),
                s.c.to_string(),
                s.element.clone(),
            ]);
        }
        t
    }
}

impl Report for BruteForceDoc {
    fn markdown(&self) -> String {
        format!(
            "# Brute-force solutions of x^2 + {}y^2 = {}^2\n\n{} solutions\n\n{}",
            self.d,
            self.c,
            self.solutions.len(),
            self.table().markdown()
        )
    }

    fn csv(&self) -> String {
        self.table().csv()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub d: u64,
    pub c_max: u64,
    pub guarantee: String,
    pub checked: u64,
    pub nonempty: u64,
    pub solutions: u64,
    /// Values of `c` where enumeration, brute force and the count law
    /// disagree.
    pub mismatches: Vec<u64>,
}

impl SweepDoc {
    pub fn build(conic: &Conic, c_max: u64) -> Result<Self, CliError> {
        let r = sweep_with(conic, c_max)?;
        Ok(SweepDoc {
            d: r.d,
            c_max: r.c_max,
            guarantee: guarantee_name(conic.guarantee()).into(),
            checked: r.checked,
            nonempty: r.nonempty,
            solutions: r.solutions,
            mismatches: r.mismatches.iter().map(|m| m.c).collect(),
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(&["d", "c_max", "checked", "nonempty", "solutions", "mismatches"]);
        let m: Vec<String> = self.mismatches.iter().map(u64::to_string).collect();
        t.push(vec![
            self.d.to_string(),
            self.c_max.to_string(),
            self.checked.to_string(),
            self.nonempty.to_string(),
            self.solutions.to_string(),
            m.join(";"),
        ]);
        t
    }
}

impl Report for SweepDoc {
    fn markdown(&self) -> String {
        let verdict = if self.mismatches.is_empty() {
            "enumeration agrees with brute force".to_string()
        } else {
            format!("{} mismatches", self.mismatches.len())
        };
        format!(
            "# Oracle sweep for D = {}, c <= {}\n\n{}{verdict}\n\n{}",
            self.d,
            self.c_max,
            warning(self.d, &self.guarantee),
            self.table().markdown()
        )
    }

    fn csv(&self) -> String {
        self.table().csv()
    }
}
