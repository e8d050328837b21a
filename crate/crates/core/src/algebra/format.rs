//! The line-based algebra definition format.
//!
//! ```text
//! # group algebra of the cyclic group of order 2
//! algebra C2
//! ring Z
//! basis 1 s
//! unit 1 0
//! trace 1 0
//! const 0 0 0 1
//! const 0 1 1 1
//! const 1 0 1 1
//! const 1 1 0 1
//! ```
//!
//! `const i j k c` declares `c[i][j][k] = c` with 0-based indices; omitted
//! constants are zero. Coefficients use the polynomial text syntax and may
//! not contain spaces in the `unit` and `trace` lines. Blank lines and
//! `#` comments are ignored. Serialization is canonical: constants sorted by
//! index, zeros omitted, elements printed in normal form.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use super::structure::FiniteFreeAlgebra;
use crate::arith::{Poly, Ring};
use crate::error::{Error, Result};

pub fn parse_algebra(text: &str) -> Result<FiniteFreeAlgebra> {
    let mut name = None;
    let mut ring = None;
    let mut basis: Option<Vec<String>> = None;
    let mut unit_text: Option<Vec<String>> = None;
    let mut trace_text: Option<Vec<String>> = None;
    let mut consts: BTreeMap<(usize, usize, usize), String> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let words = || rest.split_whitespace().map(str::to_string).collect::<Vec<_>>();
        let set_once = |slot: bool| if slot { Err(err(&format!("duplicate {key} line"))) } else { Ok(()) };
        match key {
            "algebra" => {
                set_once(name.is_some())?;
                if rest.is_empty() {
                    return Err(err("missing algebra name"));
                }
                name = Some(rest.to_string());
            }
            "ring" => {
                set_once(ring.is_some())?;
                ring = Some(Ring::parse(rest)?);
            }
            "basis" => {
                set_once(basis.is_some())?;
                basis = Some(words());
            }
            "unit" => {
                set_once(unit_text.is_some())?;
                unit_text = Some(words());
            }
            "trace" => {
                set_once(trace_text.is_some())?;
                trace_text = Some(words());
            }
            "const" => {
                let mut it = rest.splitn(4, char::is_whitespace);
                let mut idx = || -> Result<usize> {
                    it.next()
                        .and_then(|s| s.trim().parse().ok())
                        .ok_or_else(|| err("expected `const i j k coefficient`"))
                };
                let key = (idx()?, idx()?, idx()?);
                let coeff = it.next().map(str::trim).unwrap_or("");
                if coeff.is_empty() {
                    return Err(err("missing coefficient"));
                }
                if consts.insert(key, coeff.to_string()).is_some() {
                    return Err(err("constant declared twice"));
                }
            }
            _ => return Err(err(&format!("unknown keyword {key:?}"))),
        }
    }
    let missing = |what: &str| Error::Parse(format!("missing {what} line"));
    let name = name.ok_or_else(|| missing("algebra"))?;
    let ring = ring.ok_or_else(|| missing("ring"))?;
    let basis = basis.ok_or_else(|| missing("basis"))?;
    let n = basis.len();
    if n == 0 {
        return Err(Error::Parse("empty basis".into()));
    }
    let elements = |words: Vec<String>, what: &str| -> Result<Vec<Poly>> {
        if words.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{what} has {} entries, basis has {n}",
                words.len()
            )));
        }
        words.iter().map(|w| ring.parse_element(w)).collect()
    };
    let unit = elements(unit_text.ok_or_else(|| missing("unit"))?, "unit")?;
    let trace = trace_text.map(|t| elements(t, "trace")).transpose()?;
    let mut c = vec![vec![vec![ring.zero(); n]; n]; n];
    for ((i, j, k), s) in consts {
        if i >= n || j >= n || k >= n {
            return Err(Error::DimensionMismatch(format!(
                "constant index ({i}, {j}, {k}) out of range for dimension {n}"
            )));
        }
        c[i][j][k] = ring.parse_element(&s)?;
    }
    FiniteFreeAlgebra::new(&name, ring, basis, c, unit, trace)
}

pub fn load_algebra(path: &Path) -> Result<FiniteFreeAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

pub fn serialize_algebra(a: &FiniteFreeAlgebra) -> String {
    let r = a.ring();
    let fmt = |p: &Poly| r.format_element(p);
    let line = |v: &[Poly]| v.iter().map(fmt).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "algebra {}", a.name()).unwrap();
    writeln!(out, "ring {r}").unwrap();
    writeln!(out, "basis {}", a.basis_names().join(" ")).unwrap();
    writeln!(out, "unit {}", line(a.unit())).unwrap();
    if let Some(t) = a.trace() {
        writeln!(out, "trace {}", line(t)).unwrap();
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = a.constant(i, j, k);
                if !c.is_zero() {
                    writeln!(out, "const {i} {j} {k} {}", fmt(c)).unwrap();
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const B2: &str = "algebra B2\nring Z[delta]\nbasis 1 s u\nunit 1 0 0\n\
        const 0 0 0 1\nconst 0 1 1 1\nconst 0 2 2 1\nconst 1 0 1 1\nconst 1 1 0 1\n\
        const 1 2 2 1\nconst 2 0 2 1\nconst 2 1 2 1\nconst 2 2 2 delta\n";

    #[test]
    fn round_trip_is_canonical() {
        let a = parse_algebra(B2).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(serialize_algebra(&a), B2);
    }

    #[test]
    fn comments_and_order_do_not_matter() {
        let shuffled = "# comment\nalgebra B2\nring Z[delta]\nbasis 1 s u\n\
            const 2 2 2 delta  # loop\nconst 2 1 2 1\nconst 2 0 2 1\nconst 1 2 2 1\n\
            const 1 1 0 1\nconst 1 0 1 1\nconst 0 2 2 1\nconst 0 1 1 1\nconst 0 0 0 1\nunit 1 0 0\n";
        assert_eq!(serialize_algebra(&parse_algebra(shuffled).unwrap()), B2);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_algebra("ring Z\n"), Err(Error::Parse(_))));
        let bad_index = B2.replace("const 2 2 2 delta", "const 2 2 3 delta");
        assert!(matches!(parse_algebra(&bad_index), Err(Error::DimensionMismatch(_))));
        let non_assoc = B2.replace("const 2 2 2 delta", "const 2 2 1 delta");
        assert!(matches!(parse_algebra(&non_assoc), Err(Error::NotAssociative(..))));
    }
}
