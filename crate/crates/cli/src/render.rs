//! Text rendering shared by every report: tables, radicals, generator
//! products.

use conicgroup::FactorizationResult;
use serde::Serialize;

use crate::{CliError, Format};

/// A report that can be printed in each output format. JSON comes from the
/// `Serialize` impl; markdown and CSV are rendered from the same value.
pub trait Report: Serialize {
    fn markdown(&self) -> String;
    fn csv(&self) -> String;
}

pub fn render<R: Report>(report: &R, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| CliError::Data(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Markdown => report.markdown(),
        Format::Csv => report.csv(),
    })
}

pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn markdown(&self) -> String {
        let mut out = String::new();
        let line = |cells: &mut dyn Iterator<Item = &str>| {
            let cells: Vec<&str> = cells.collect();
            format!("| {} |\n", cells.join(" | "))
        };
        out += &line(&mut self.headers.iter().copied());
        out += &format!("|{}\n", "---|".repeat(self.headers.len()));
        for row in &self.rows {
            out += &line(&mut row.iter().map(|c| c.as_str()));
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        // Writes to a Vec cannot fail.
        w.write_record(&self.headers).unwrap();
        for row in &self.rows {
            w.write_record(row).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

fn minus(unicode: bool) -> &'static str {
    if unicode {
        "\u{2212}"
    } else {
        "-"
    }
}

fn signed(n: i128, unicode: bool) -> String {
    if n < 0 {
        format!("{}{}", minus(unicode), n.unsigned_abs())
    } else {
        n.to_string()
    }
}

/// `(a+bsqrt(-D))/c`, or `(a+b√−D)/c` in unicode mode.
pub fn element(d: u64, a: i128, b: i128, c: i128, unicode: bool) -> String {
    if b == 0 {
        return signed(a, unicode);
    }
    let radical = if unicode {
        format!("\u{221a}\u{2212}{d}")
    } else {
        format!("sqrt(-{d})")
    };
    let mut out = String::from("(");
    if a != 0 {
        out += &signed(a, unicode);
        out += if b < 0 { minus(unicode) } else { "+" };
    } else if b < 0 {
        out += minus(unicode);
    }
    if b.unsigned_abs() != 1 {
        out += &b.unsigned_abs().to_string();
    }
    format!("{out}{radical})/{c}")
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(n: u64, table: &[char; 10]) -> String {
    n.to_string()
        .bytes()
        .map(|b| table[(b - b'0') as usize])
        .collect()
}

pub fn superscript(n: i64) -> String {
    let sign = if n < 0 { "⁻" } else { "" };
    format!("{sign}{}", digits(n.unsigned_abs(), &SUPERSCRIPTS))
}

pub fn subscript(n: u64) -> String {
    digits(n, &SUBSCRIPTS)
}

/// `-zeta_11^-1 zeta_13`, or `−ζ₁₁⁻¹ζ₁₃` in unicode mode.
pub fn factorization(sign: i8, factors: &[(u64, i64)], unicode: bool) -> String {
    if !unicode {
        return FactorizationResult {
            sign,
            factors: factors.to_vec(),
        }
        .to_string();
    }
    let mut out = String::new();
    if sign < 0 {
        out += minus(true);
    }
    if factors.is_empty() {
        out += "1";
    }
    for &(p, e) in factors {
        out += "ζ";
        out += &subscript(p);
        if e != 1 {
            out += &superscript(e);
        }
    }
    out
}

/// `11 * 13^3`, or `11·13³` in unicode mode.
pub fn prime_powers(primes: &[(u64, u32)], unicode: bool) -> String {
    let parts: Vec<String> = primes
        .iter()
        .map(|&(p, n)| match (n, unicode) {
            (1, _) => p.to_string(),
            (_, true) => format!("{p}{}", superscript(n as i64)),
            (_, false) => format!("{p}^{n}"),
        })
        .collect();
    parts.join(if unicode { "·" } else { " * " })
}

/// `11:-1;13:1`, the CSV encoding of an exponent vector.
pub fn exponent_list(factors: &[(u64, i64)]) -> String {
    let parts: Vec<String> = factors.iter().map(|(p, e)| format!("{p}:{e}")).collect();
    parts.join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use conicgroup::GroupElement;

    #[test]
    fn ascii_elements_match_library_display() {
        for (d, a, b, c) in [
            (105, 4, 1, 11),
            (105, 92, -265, 2717),
            (105, -73, -12, 143),
            (1, 0, -1, 1),
            (1, 0, 1, 1),
            (7, -1, 0, 1),
        ] {
            let z = GroupElement::new(d, a, b, c).unwrap();
            assert_eq!(element(d, a, b, c, false), z.to_string());
        }
    }

    #[test]
    fn unicode_notation() {
        assert_eq!(element(105, 4, 1, 11, true), "(4+√−105)/11");
        assert_eq!(element(105, 92, -265, 2717, true), "(92−265√−105)/2717");
        assert_eq!(
            factorization(-1, &[(11, -1), (13, -1)], true),
            "−ζ₁₁⁻¹ζ₁₃⁻¹"
        );
        assert_eq!(factorization(1, &[(11, -2), (13, 3)], true), "ζ₁₁⁻²ζ₁₃³");
        assert_eq!(factorization(1, &[], true), "1");
        assert_eq!(prime_powers(&[(11, 2), (13, 3)], true), "11²·13³");
        assert_eq!(prime_powers(&[(11, 2), (13, 1)], false), "11^2 * 13");
    }

    #[test]
    fn tables() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["1".into(), "x,y".into()]);
        assert_eq!(t.markdown(), "| a | b |\n|---|---|\n| 1 | x,y |\n");
        assert_eq!(t.csv(), "a,b\n1,\"x,y\"\n");
    }
}
