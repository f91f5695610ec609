//! Regenerates the D = 105 class group, generators and five solution tables
//! and diffs them against golden data.

use std::fmt::Debug;
use std::path::Path;

use conicgroup::quadform::class_group_report;
use conicgroup::Conic;
use serde::{Deserialize, Serialize};

use crate::render::{Report, Table};
use crate::CliError;

const EMBEDDED: &str = include_str!("golden.json");
const D: u64 = 105;
const TABLES: [(&str, u64); 5] = [
    ("Table 1", 143),
    ("Table 2", 247),
    ("Table 3", 209),
    ("Table 4", 265_837),
    ("Table 5", 2717),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Product {
    pub exponents: Vec<i64>,
    pub a: i128,
    pub b: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRow {
    pub sign: i8,
    pub exponents: Vec<i64>,
    pub a: i128,
    pub b: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub name: String,
    pub c: u64,
    pub primes: Vec<u64>,
    pub expected: u64,
    pub solutions: Vec<(i128, i128)>,
    /// All signed products, first prime's sign toggling fastest.
    pub products: Vec<Product>,
    /// Factorization of each positive solution, ordered by `a`.
    pub bijection: Vec<BijectionRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Golden {
    pub d: u64,
    pub forms: Vec<(i64, i64, i64)>,
    /// `(p, a, b)`.
    pub generators: Vec<(u64, i128, i128)>,
    pub tables: Vec<GoldenTable>,
}

impl Golden {
    pub fn embedded() -> Result<Self, CliError> {
        Self::parse(EMBEDDED, "embedded golden data")
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Data(format!("{origin}: {e}")))
    }

    /// The same data, recomputed from scratch.
    pub fn compute() -> Result<Self, CliError> {
        let conic = Conic::new(D)?;
        let forms = class_group_report(D)?
            .display_forms()
            .iter()
            .map(|f| (f.a(), f.b(), f.c()))
            .collect();
        let generators = [11, 13, 19]
            .into_iter()
            .map(|p| {
                let z = conic.zeta(p)?;
                Ok((p, z.element().a(), z.element().b()))
            })
            .collect::<Result<_, conicgroup::Error>>()?;
        let mut tables = Vec::new();
        for (name, c) in TABLES {
            let set = conic.enumerate_normalized(c)?;
            let exps = |f: &conicgroup::FactorizationResult| f.exponents().collect::<Vec<_>>();
            tables.push(GoldenTable {
                name: name.into(),
                c,
                primes: set.primes.iter().map(|&(p, _)| p).collect(),
                expected: conic.count_normalized(c)?,
                solutions: set.triples().map(|t| (t.a(), t.b())).collect(),
                products: conic
                    .sign_products(c)?
                    .iter()
                    .map(|(f, z)| Product {
                        exponents: exps(f),
                        a: z.a(),
                        b: z.b(),
                    })
                    .collect(),
                bijection: set
                    .solutions
                    .iter()
                    .map(|s| BijectionRow {
                        sign: s.representative.sign,
                        exponents: exps(&s.representative),
                        a: s.triple.a(),
                        b: s.triple.b(),
                    })
                    .collect(),
            });
        }
        Ok(Golden {
            d: D,
            forms,
            generators,
            tables,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub diffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub checks: Vec<Check>,
    pub tables_verified: usize,
    pub tables_total: usize,
}

fn diff<T: PartialEq + Debug>(diffs: &mut Vec<String>, what: &str, want: &T, got: &T) {
    if want != got {
        diffs.push(format!("{what}: expected {want:?}, got {got:?}"));
    }
}

fn diff_rows<T: PartialEq + Debug>(diffs: &mut Vec<String>, what: &str, want: &[T], got: &[T]) {
    if want.len() != got.len() {
        diffs.push(format!("{what}: expected {} rows, got {}", want.len(), got.len()));
    }
    for (i, (w, g)) in want.iter().zip(got).enumerate() {
        diff(diffs, &format!("{what} row {}", i + 1), w, g);
    }
}

fn check(name: &str, diffs: Vec<String>) -> Check {
    Check {
        name: name.into(),
        ok: diffs.is_empty(),
        diffs,
    }
}

impl VerifyDoc {
    pub fn build(golden: &Golden) -> Result<Self, CliError> {
        let actual = Golden::compute()?;
        let mut checks = Vec::new();

        let mut diffs = Vec::new();
        diff(&mut diffs, "D", &golden.d, &actual.d);
        diff_rows(&mut diffs, "form", &golden.forms, &actual.forms);
        checks.push(check("class group C(-420)", diffs));

        let mut diffs = Vec::new();
        diff_rows(&mut diffs, "generator", &golden.generators, &actual.generators);
        checks.push(check("generators", diffs));

        for (i, got) in actual.tables.iter().enumerate() {
            let mut diffs = Vec::new();
            match golden.tables.get(i) {
                None => diffs.push("missing from golden data".into()),
                Some(want) => {
                    diff(&mut diffs, "name", &want.name, &got.name);
                    diff(&mut diffs, "c", &want.c, &got.c);
                    diff(&mut diffs, "primes", &want.primes, &got.primes);
                    diff(&mut diffs, "expected", &want.expected, &got.expected);
                    diff_rows(&mut diffs, "solution", &want.solutions, &got.solutions);
                    diff_rows(&mut diffs, "product", &want.products, &got.products);
                    diff_rows(&mut diffs, "bijection", &want.bijection, &got.bijection);
                }
            }
            checks.push(check(&got.name, diffs));
        }
        if golden.tables.len() > actual.tables.len() {
            checks.push(check(
                "extra tables",
                vec![format!("golden data has {} tables", golden.tables.len())],
            ));
        }

        let tables: Vec<&Check> = checks.iter().filter(|c| c.name.starts_with("Table")).collect();
        Ok(VerifyDoc {
            tables_verified: tables.iter().filter(|c| c.ok).count(),
            tables_total: tables.len(),
            checks,
        })
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn summary(&self) -> String {
        format!("{}/{} tables verified", self.tables_verified, self.tables_total)
    }

    fn table(&self) -> Table {
        let mut t = Table::new(&["check", "status", "differences"]);
        for c in &self.checks {
            t.push(vec![
                c.name.clone(),
                if c.ok { "ok" } else { "MISMATCH" }.into(),
                c.diffs.len().to_string(),
            ]);
        }
        t
    }
}

impl Report for VerifyDoc {
    fn markdown(&self) -> String {
        let mut out = format!("# Verification of the D = {D} tables\n\n{}", self.table().markdown());
        for c in self.checks.iter().filter(|c| !c.ok) {
            out += &format!("\n## {}\n\n", c.name);
            for d in &c.diffs {
                out += &format!("- {d}\n");
            }
        }
        out += &format!("\n{}\n", self.summary());
        out
    }

    fn csv(&self) -> String {
        let mut t = Table::new(&["check", "ok", "diffs"]);
        for c in &self.checks {
            t.push(vec![c.name.clone(), c.ok.to_string(), c.diffs.join(";")]);
        }
        t.csv()
    }
}
