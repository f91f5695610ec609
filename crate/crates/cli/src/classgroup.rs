use conicgroup::quadform::class_group_report;
use serde::{Deserialize, Serialize};

use crate::render::{subscript, superscript, Report, Table};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormRow {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub order_at_most_two: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupDoc {
    pub d: u64,
    pub discriminant: i64,
    pub class_number: usize,
    pub is_elementary_two: bool,
    pub two_rank: Option<u32>,
    pub structure: String,
    /// Every reduced form, one per class, ordered by `(a, b)`.
    pub forms: Vec<FormRow>,
}

fn structure(rank: Option<u32>, unicode: bool) -> String {
    match (rank, unicode) {
        (None, _) => "not an elementary abelian 2-group".into(),
        (Some(0), _) => "trivial".into(),
        (Some(r), true) => format!("ℤ{}{}", subscript(2), superscript(r as i64)),
        (Some(r), false) => format!("(Z/2)^{r}"),
    }
}

impl ClassGroupDoc {
    pub fn build(d: u64, unicode: bool) -> Result<Self, CliError> {
        let report = class_group_report(d)?;
        let forms = report
            .forms
            .iter()
            .map(|f| {
                Ok(FormRow {
                    a: f.a(),
                    b: f.b(),
                    c: f.c(),
                    order_at_most_two: f.order_at_most_two()?,
                })
            })
            .collect::<Result<_, conicgroup::Error>>()?;
        Ok(ClassGroupDoc {
            d,
            discriminant: report.discriminant,
            class_number: report.class_number,
            is_elementary_two: report.is_elementary_two,
            two_rank: report.two_rank,
            structure: structure(report.two_rank, unicode),
            forms,
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(&["a", "b", "c", "order_at_most_two"]);
        for f in &self.forms {
            t.push(vec![
                f.a.to_string(),
                f.b.to_string(),
                f.c.to_string(),
                f.order_at_most_two.to_string(),
            ]);
        }
        t
    }
}

impl Report for ClassGroupDoc {
    fn markdown(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        format!(
            "# Class group of discriminant {}\n\n\
             - D = {}\n\
             - class number h = {}\n\
             - structure: {}\n\
             - elementary abelian 2-group: {}\n\n{}",
            self.discriminant,
            self.d,
            self.class_number,
            self.structure,
            yes_no(self.is_elementary_two),
            self.table().markdown()
        )
    }

    fn csv(&self) -> String {
        self.table().csv()
    }
}
