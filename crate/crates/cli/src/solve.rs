use conicgroup::{Conic, FactorizationResult, Guarantee};
use serde::{Deserialize, Serialize};

use crate::render::{element, exponent_list, factorization, prime_powers, Report, Table};
use crate::CliError;

pub(crate) fn guarantee_name(g: Guarantee) -> &'static str {
    match g {
        Guarantee::Theorem => "theorem",
        Guarantee::Unverified => "unverified",
    }
}

/// Markdown warning line for reports computed under `--unverified-D`.
pub(crate) fn warning(d: u64, guarantee: &str) -> String {
    if guarantee == "theorem" {
        String::new()
    } else {
        format!("> warning: D = {d} is outside the theorem hypotheses; results are unverified.\n\n")
    }
}

/// One of the `2^k` signed products `prod zeta_p^(±n_p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRecord {
    pub exponents: Vec<(u64, i64)>,
    pub element: String,
}

/// A normalized solution with the factorization `sign * prod zeta_p^e` of
/// its positive point `element`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub element: String,
    pub sign: i8,
    pub exponents: Vec<(u64, i64)>,
}

impl SolutionRecord {
    pub fn factorization(&self) -> FactorizationResult {
        FactorizationResult {
            sign: self.sign,
            factors: self.exponents.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub d: u64,
    pub c: u64,
    pub primes: Vec<(u64, u32)>,
    pub guarantee: String,
    pub unicode: bool,
    pub expected: u64,
    pub products: Vec<ProductRecord>,
    pub solutions: Vec<SolutionRecord>,
}

impl SolveDoc {
    pub fn build(conic: &Conic, c: u64, unicode: bool) -> Result<Self, CliError> {
        if c <= 1 {
            return Err(CliError::Usage(format!("c must be greater than 1, got {c}")));
        }
        let d = conic.d();
        let set = conic.enumerate_normalized(c)?;
        let products = conic
            .sign_products(c)?
            .into_iter()
            .map(|(f, z)| ProductRecord {
                exponents: f.factors,
                element: element(d, z.a(), z.b(), z.c(), unicode),
            })
            .collect();
        let solutions = set
            .solutions
            .iter()
            .map(|s| SolutionRecord {
                a: s.triple.a(),
                b: s.triple.b(),
                c: s.triple.c(),
                element: element(d, s.element.a(), s.element.b(), s.element.c(), unicode),
                sign: s.representative.sign,
                exponents: s.representative.factors.clone(),
            })
            .collect();
        Ok(SolveDoc {
            d,
            c,
            primes: set.primes,
            guarantee: guarantee_name(set.guarantee).into(),
            unicode,
            expected: set.expected,
            products,
            solutions,
        })
    }

    fn fmt(&self, sign: i8, factors: &[(u64, i64)]) -> String {
        factorization(sign, factors, self.unicode)
    }

    pub fn products_table(&self) -> Table {
        let mut t = Table::new(&["product", "element"]);
        for p in &self.products {
            t.push(vec![self.fmt(1, &p.exponents), p.element.clone()]);
        }
        t
    }

    pub fn solutions_table(&self) -> Table {
        let mut t = Table::new(&["a", "b", "c", "element", "factorization", "class"]);
        for s in &self.solutions {
            let class = s.factorization().gamma_class();
            t.push(vec![
                s.a.to_string(),
                s.b.to_string(),
                s.c.to_string(),
                s.element.clone(),
                self.fmt(s.sign, &s.exponents),
                self.fmt(class.sign, &class.factors),
            ]);
        }
        t
    }
}

impl Report for SolveDoc {
    fn markdown(&self) -> String {
        let mut out = format!(
            "# Solutions of x^2 + {}y^2 = z^2 with z = {}\n\n{}",
            self.d,
            self.c,
            warning(self.d, &self.guarantee)
        );
        out += &format!(
            "- c = {}\n- expected number of solutions: {}\n- actual solutions: {}\n\n",
            prime_powers(&self.primes, self.unicode),
            self.expected,
            self.solutions.len()
        );
        if !self.products.is_empty() {
            out += "## Products of generators\n\n";
            out += &self.products_table().markdown();
            out += "\n";
        }
        out += "## Solutions\n\n";
        out += &self.solutions_table().markdown();
        out
    }

    fn csv(&self) -> String {
        let mut t = Table::new(&["a", "b", "c", "element", "sign", "exponents", "factorization", "class"]);
        for s in &self.solutions {
            let class = s.factorization().gamma_class();
            t.push(vec![
                s.a.to_string(),
                s.b.to_string(),
                s.c.to_string(),
                s.element.clone(),
                s.sign.to_string(),
                exponent_list(&s.exponents),
                self.fmt(s.sign, &s.exponents),
                self.fmt(class.sign, &class.factors),
            ]);
        }
        t.csv()
    }
}
