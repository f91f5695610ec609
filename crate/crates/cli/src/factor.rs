use conicgroup::Conic;
use serde::{Deserialize, Serialize};

use crate::render::{element, exponent_list, factorization, Report, Table};
use crate::solve::{guarantee_name, warning};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub d: u64,
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub guarantee: String,
    pub element: String,
    pub sign: i8,
    pub exponents: Vec<(u64, i64)>,
    pub factorization: String,
}

impl FactorDoc {
    pub fn build(conic: &Conic, a: i128, b: i128, c: i128, unicode: bool) -> Result<Self, CliError> {
        let z = conic.element(a, b, c)?;
        let f = conic.factor_element(&z)?;
        Ok(FactorDoc {
            d: conic.d(),
            a,
            b,
            c,
            guarantee: guarantee_name(conic.guarantee()).into(),
            element: element(conic.d(), a, b, c, unicode),
            factorization: factorization(f.sign, &f.factors, unicode),
            sign: f.sign,
            exponents: f.factors,
        })
    }

    fn table(&self) -> Table {
        let mut t = Table::new(&["a", "b", "c", "element", "sign", "exponents", "factorization"]);
        t.push(vec![
            self.a.to_string(),
            self.b.to_string(),
            self.c.to_string(),
            self.element.clone(),
            self.sign.to_string(),
            exponent_list(&self.exponents),
            self.factorization.clone(),
        ]);
        t
    }
}

impl Report for FactorDoc {
    fn markdown(&self) -> String {
        format!(
            "# Factorization over D = {}\n\n{}{} = {}\n",
            self.d,
            warning(self.d, &self.guarantee),
            self.element,
            self.factorization
        )
    }

    fn csv(&self) -> String {
        self.table().csv()
    }
}
