//! Text formats for systems, bases and run statistics, and random systems.

mod random;

pub use random::{gen_random, RandomSpec};

use std::fmt::Write as _;

use crate::engine::RunStats;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::BoolPoly;

/// A parsed system file.
///
/// ```text
/// # comment
/// name: example
/// vars: 9
/// x1*x2*x5*x6 + x2*x3*x7*x9 + x7
/// x1*x2*x6*x8 + x3*x4*x7
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SystemFile {
    pub n_vars: usize,
    pub name: Option<String>,
    pub comments: Vec<String>,
    pub polys: Vec<BoolPoly>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_term(tok: &str, n: usize, line: usize) -> Result<Option<Monomial>> {
    if tok == "0" {
        return Ok(None);
    }
    let mut m = Monomial::ONE;
    for f in tok.split('*') {
        if f == "1" {
            continue;
        }
        let k: usize = f
            .strip_prefix('x')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| err(line, format!("unknown token `{f}`")))?;
        if k == 0 || k > n {
            return Err(err(line, format!("variable x{k} out of range 1..={n}")));
        }
        m = m.mul(&Monomial::var(k - 1));
    }
    Ok(Some(m))
}

fn parse_poly(text: &str, n: usize, line: usize) -> Result<BoolPoly> {
    let mut terms = Vec::new();
    for tok in text.split('+') {
        if tok.is_empty() {
            return Err(err(line, "empty term"));
        }
        terms.extend(parse_term(tok, n, line)?);
    }
    Ok(BoolPoly::from_terms(terms))
}

pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut out = SystemFile::default();
    let mut have_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(c) = trimmed.strip_prefix('#') {
            out.comments.push(c.trim().to_string());
            continue;
        }
        if let Some(name) = trimmed.strip_prefix("name:") {
            out.name = Some(name.trim().to_string());
            continue;
        }
        let compact: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(n) = compact.strip_prefix("vars:") {
            if have_header {
                return Err(err(line, "duplicate `vars:` header"));
            }
            let n: usize = n
                .parse()
                .map_err(|_| err(line, format!("bad variable count `{n}`")))?;
            if n > MAX_VARS {
                return Err(err(
                    line,
                    format!("{n} variables exceed the supported {MAX_VARS}"),
                ));
            }
            out.n_vars = n;
            have_header = true;
            continue;
        }
        if !have_header {
            return Err(err(line, "missing `vars: <n>` header"));
        }
        out.polys.push(parse_poly(&compact, out.n_vars, line)?);
    }
    if !have_header {
        return Err(err(
            text.lines().count().max(1),
            "missing `vars: <n>` header",
        ));
    }
    Ok(out)
}

pub fn emit_system(sys: &SystemFile) -> String {
    let mut out = String::new();
    for c in &sys.comments {
        let _ = writeln!(out, "# {c}");
    }
    if let Some(name) = &sys.name {
        let _ = writeln!(out, "name: {name}");
    }
    out.push_str(&emit_basis(&sys.polys, sys.n_vars));
    out
}

/// The basis as a system file: header, then one polynomial per line.
pub fn emit_basis(basis: &[BoolPoly], n_vars: usize) -> String {
    let mut out = format!("vars: {n_vars}\n");
    for p in basis {
        let _ = writeln!(out, "{p}");
    }
    out
}

/// `key: value` lines in a fixed order; one `round:` line per round.
pub fn emit_stats(s: &RunStats) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algo: {}", s.algo);
    let _ = writeln!(out, "n_vars: {}", s.n_vars);
    let _ = writeln!(out, "deg_limit: {}", s.deg_limit);
    let _ = writeln!(out, "rounds: {}", s.rounds.len());
    for r in &s.rounds {
        let _ = writeln!(
            out,
            "round: degree={} pairs={} rejected_syz={} rejected_rew={} rows={} cols={} new={} zero={}",
            r.degree, r.pairs, r.rejected_syz, r.rejected_rew, r.rows, r.cols, r.new, r.zero
        );
    }
    let _ = writeln!(out, "mutants_appended: {}", s.mutants_appended);
    let m = &s.max_matrix;
    let _ = writeln!(
        out,
        "max_matrix: rows={} cols={} degree={}",
        m.rows, m.cols, m.degree
    );
    let _ = writeln!(out, "max_degree: {}", s.max_degree);
    let _ = writeln!(out, "basis_size: {}", s.basis_size);
    let _ = writeln!(out, "reduced_basis_size: {}", s.reduced_basis_size);
    let _ = writeln!(out, "wall_ms: {}", s.wall_ms);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::testing::{f1, f2};

    const EXAMPLE1: &str =
        "# worked example\nvars: 9\nx1*x2*x5*x6 + x2*x3*x7*x9 + x7\nx1*x2*x6*x8+x3*x4*x7\n";

    #[test]
    fn parses_example1() {
        let sys = parse_system(EXAMPLE1).unwrap();
        assert_eq!(sys.n_vars, 9);
        assert_eq!(sys.polys, vec![f1(), f2()]);
        assert_eq!(sys.comments, vec!["worked example".to_string()]);
    }

    #[test]
    fn squares_collapse() {
        let sys = parse_system("vars: 2\nx1*x1 + x1\nx2 * x2 * x1 + 1 + 1\n").unwrap();
        assert!(sys.polys[0].is_zero());
        assert_eq!(sys.polys[1].to_string(), "x1*x2");
    }

    #[test]
    fn errors_carry_line_numbers() {
        for (text, line) in [
            ("vars: 2\ny1\n", 2),
            ("x1\n", 1),
            ("vars: 2\n\nx1 + x3\n", 3),
            ("vars: 2\nx1 + \n", 2),
            ("# nothing\n", 1),
        ] {
            match parse_system(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn round_trip() {
        let sys = parse_system(EXAMPLE1).unwrap();
        let text = emit_system(&sys);
        let again = parse_system(&text).unwrap();
        assert_eq!(again, sys);
        assert_eq!(emit_system(&again), text);
        let basis = parse_system(&emit_basis(&sys.polys, 9)).unwrap();
        assert_eq!(basis.polys, sys.polys);
    }
}
