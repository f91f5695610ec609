use conicgroup::arith::is_prime;
use conicgroup::{Conic, Error};
use serde::{Deserialize, Serialize};

use crate::render::{element, Report, Table};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub p: u64,
    /// `(-D/p)`.
    pub symbol: i8,
    pub a: Option<i128>,
    pub b: Option<i128>,
    pub element: Option<String>,
    /// `ok`, or why no generator exists for this row.
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsDoc {
    pub d: u64,
    pub guarantee: String,
    pub rows: Vec<GeneratorRow>,
}

impl GeneratorsDoc {
    /// Rows for the listed primes, or for every admissible prime up to
    /// `bound`.
    pub fn build(
        conic: &Conic,
        primes: &[u64],
        bound: Option<u64>,
        unicode: bool,
    ) -> Result<Self, CliError> {
        let primes: Vec<u64> = match bound {
            Some(bound) => (3..=bound).filter(|&p| conic.is_admissible_prime(p)).collect(),
            None => primes.to_vec(),
        };
        if let Some(&bad) = primes.iter().find(|&&p| p < 2) {
            return Err(CliError::Usage(format!("{bad} is not a prime")));
        }
        let d = conic.d();
        let mut rows = Vec::with_capacity(primes.len());
        for p in primes {
            let symbol = conic.symbol(p);
            let mut row = GeneratorRow {
                p,
                symbol,
                a: None,
                b: None,
                element: None,
                status: String::new(),
            };
            row.status = if !is_prime(p) {
                "not prime".into()
            } else if p == 2 {
                "even prime".into()
            } else if symbol != 1 {
                format!("symbol {symbol}")
            } else {
                match conic.zeta(p) {
                    Ok(z) => {
                        let z = z.element();
                        row.a = Some(z.a());
                        row.b = Some(z.b());
                        row.element = Some(element(d, z.a(), z.b(), z.c(), unicode));
                        "ok".into()
                    }
                    Err(Error::LemmaViolated { found, .. }) => {
                        format!("lemma fails ({found} solutions)")
                    }
                    Err(e) => return Err(e.into()),
                }
            };
            rows.push(row);
        }
        Ok(GeneratorsDoc {
            d,
            guarantee: crate::solve::guarantee_name(conic.guarantee()).into(),
            rows,
        })
    }

    fn table(&self) -> Table {
        let opt = |v: Option<i128>| v.map(|x| x.to_string()).unwrap_or_default();
        let mut t = Table::new(&["p", "symbol", "a", "b", "zeta_p", "status"]);
        for r in &self.rows {
            t.push(vec![
                r.p.to_string(),
                r.symbol.to_string(),
                opt(r.a),
                opt(r.b),
                r.element.clone().unwrap_or_default(),
                r.status.clone(),
            ]);
        }
        t
    }
}

impl Report for GeneratorsDoc {
    fn markdown(&self) -> String {
        format!(
            "# Generators for D = {}\n\n{}{}",
            self.d,
            crate::solve::warning(self.d, &self.guarantee),
            self.table().markdown()
        )
    }

    fn csv(&self) -> String {
        self.table().csv()
    }
}
