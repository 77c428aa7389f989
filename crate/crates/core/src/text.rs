//! Text syntax for monomials, terms and elements: `x1^2*x3*e2`, with `*`
//! separated factors, `^` powers, optional integer coefficients and `+`/`-`
//! between terms. Variables are `x1..xn`, free-module basis `e1..er` (the
//! `e` factor may be omitted when the rank is 1). Parser and printer are
//! mutually inverse on canonical forms.

use crate::element::{FreeElement, ModuleTerm};
use crate::field::PrimeField;
use crate::grading::Grading;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::{Error, Result};

pub fn print_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn print_term(t: &ModuleTerm, rank: usize) -> String {
    let mut parts = Vec::new();
    if t.coeff != 1 || t.monomial.is_one() {
        parts.push(t.coeff.to_string());
    }
    if !t.monomial.is_one() {
        parts.push(print_monomial(&t.monomial));
    }
    if rank > 1 {
        parts.push(format!("e{}", t.component + 1));
    }
    // A bare coefficient "1" for the constant term of a rank-1 module.
    if parts.is_empty() {
        parts.push("1".to_string());
    }
    parts.join("*")
}

pub fn print_element(e: &FreeElement, rank: usize) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    e.terms().iter().map(|t| print_term(t, rank)).collect::<Vec<_>>().join(" + ")
}

fn parse_factor(tok: &str, nvars: usize, rank: usize) -> Result<(Option<(usize, u32)>, Option<usize>, Option<i64>)> {
    // Returns (variable power, component, integer) for one `*`-separated factor.
    let tok = tok.trim();
    if tok.is_empty() {
        return Err(Error::Parse("empty factor".into()));
    }
    if let Ok(c) = tok.parse::<i64>() {
        return Ok((None, None, Some(c)));
    }
    let (head, exp) = match tok.split_once('^') {
        Some((h, e)) => {
            let exp: u32 = e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
            (h.trim(), exp)
        }
        None => (tok, 1),
    };
    if let Some(idx) = head.strip_prefix('x') {
        let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable `{head}`")))?;
        if i == 0 || i > nvars {
            return Err(Error::Parse(format!("variable x{i} out of range 1..={nvars}")));
        }
        return Ok((Some((i - 1, exp)), None, None));
    }
    if let Some(idx) = head.strip_prefix('e') {
        if exp != 1 {
            return Err(Error::Parse("basis elements cannot carry powers".into()));
        }
        let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad basis element `{head}`")))?;
        if i == 0 || i > rank {
            return Err(Error::Parse(format!("basis element e{i} out of range 1..={rank}")));
        }
        return Ok((None, Some(i - 1), None));
    }
    Err(Error::Parse(format!("unrecognised factor `{tok}`")))
}

fn parse_term(s: &str, nvars: usize, rank: usize, field: &PrimeField) -> Result<ModuleTerm> {
    let mut exps = vec![0u32; nvars];
    let mut component: Option<usize> = None;
    let mut coeff: u64 = 1;
    for tok in s.split('*') {
        let (var, comp, int) = parse_factor(tok, nvars, rank)?;
        if let Some((i, e)) = var {
            exps[i] = exps[i]
                .checked_add(e)
                .ok_or(Error::ExponentOverflow(u32::MAX))?;
        }
        if let Some(c) = comp {
            if component.replace(c).is_some() {
                return Err(Error::Parse("two basis elements in one term".into()));
            }
        }
        if let Some(c) = int {
            coeff = field.mul(coeff, field.from_int(c));
        }
    }
    let component = match component {
        Some(c) => c,
        None if rank == 1 => 0,
        None => return Err(Error::Parse("term without a basis element in a rank > 1 module".into())),
    };
    Ok(ModuleTerm { coeff, monomial: Monomial::new(exps), component })
}

/// Parse a full element: terms separated by top-level `+` and `-`.
pub fn parse_element(
    s: &str,
    nvars: usize,
    rank: usize,
    field: &PrimeField,
    order: &dyn TermOrder,
) -> Result<FreeElement> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(FreeElement::zero());
    }
    let mut terms = Vec::new();
    let mut start = 0usize;
    let mut sign_next = 1i64;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > start {
            let chunk = &s[start..i];
            if !chunk.trim().is_empty() {
                let mut t = parse_term(chunk, nvars, rank, field)?;
                if sign_next < 0 {
                    t.coeff = field.neg(t.coeff);
                }
                terms.push(t);
            }
            sign_next = if b == b'-' { -1 } else { 1 };
            start = i + 1;
        } else if (b == b'+' || b == b'-') && i == start {
            // leading sign on the very first term
            sign_next = if b == b'-' { -1 } else { 1 };
            start = i + 1;
        }
    }
    let chunk = &s[start..];
    if !chunk.trim().is_empty() {
        let mut t = parse_term(chunk, nvars, rank, field)?;
        if sign_next < 0 {
            t.coeff = field.neg(t.coeff);
        }
        terms.push(t);
    }
    Ok(FreeElement::from_terms(terms, field, order))
}

/// Parse a comma-separated generator list, as accepted by `--gens`.
pub fn parse_generators(
    s: &str,
    nvars: usize,
    rank: usize,
    field: &PrimeField,
    order: &dyn TermOrder,
) -> Result<Vec<FreeElement>> {
    s.split(',')
        .map(|g| parse_element(g, nvars, rank, field, order))
        .filter(|g| !matches!(g, Ok(e) if e.is_zero()))
        .collect()
}

/// A parsed submodule input file: `vars:`/`rank:`/`grading:` headers followed
/// by one generator per line.
pub struct SubmoduleFile {
    pub nvars: usize,
    pub rank: usize,
    pub grading: Grading,
    pub generators: Vec<FreeElement>,
}

pub fn parse_grading_spec(spec: &str, nvars: usize, rank: usize) -> Result<Grading> {
    let spec = spec.trim();
    if spec == "standard" {
        return Ok(Grading::standard(nvars, rank));
    }
    if let Some(rest) = spec.strip_prefix("weights") {
        let rows: Vec<Vec<i64>> = rest
            .split(';')
            .map(|row| {
                row.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad weight `{t}`"))))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() == 1 {
            return Grading::weighted(nvars, rank, rows.into_iter().next().unwrap());
        }
        let m = rows.len();
        return Grading::from_matrix(nvars, rank, rows, vec![vec![0; m]; rank]);
    }
    Err(Error::Parse(format!("unrecognised grading `{spec}`")))
}

pub fn parse_submodule_file(
    content: &str,
    field: &PrimeField,
    order: &dyn TermOrder,
) -> Result<SubmoduleFile> {
    let mut nvars: Option<usize> = None;
    let mut rank: usize = 1;
    let mut grading_spec = "standard".to_string();
    let mut gen_lines = Vec::new();
    for line in content.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(v) = line.strip_prefix("vars:") {
            nvars = Some(v.trim().parse().map_err(|_| Error::Parse("bad vars header".into()))?);
        } else if let Some(v) = line.strip_prefix("rank:") {
            rank = v.trim().parse().map_err(|_| Error::Parse("bad rank header".into()))?;
        } else if let Some(v) = line.strip_prefix("grading:") {
            grading_spec = v.trim().to_string();
        } else {
            gen_lines.push(line.to_string());
        }
    }
    let nvars = nvars.ok_or_else(|| Error::Parse("missing `vars:` header".into()))?;
    let grading = parse_grading_spec(&grading_spec, nvars, rank)?;
    let generators = gen_lines
        .iter()
        .map(|l| parse_element(l, nvars, rank, field, order))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubmoduleFile { nvars, rank, grading, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;

    #[test]
    fn roundtrip_canonical_forms() {
        let f = PrimeField::new(32003).unwrap();
        let o = MonomialOrder::grevlex_top();
        for s in ["x1^2*x3*e2", "x1*e1 + 2*x2*e2", "1", "3", "x2^5", "0"] {
            let rank = if s.contains('e') { 2 } else { 1 };
            let e = parse_element(s, 3, rank, &f, &o).unwrap();
            assert_eq!(print_element(&e, rank), s, "roundtrip of `{s}`");
        }
    }

    #[test]
    fn signs_fold_into_gf_p() {
        let f = PrimeField::new(7).unwrap();
        let o = MonomialOrder::grevlex_top();
        let e = parse_element("x1 - x2", 2, 1, &f, &o).unwrap();
        assert_eq!(print_element(&e, 1), "x1 + 6*x2");
    }

    #[test]
    fn parses_file_with_headers() {
        let f = PrimeField::new(32003).unwrap();
        let o = MonomialOrder::grevlex_top();
        let content = "vars: 2\nrank: 2\ngrading: standard\nx1*e1\nx2^3*e2\n";
        let sm = parse_submodule_file(content, &f, &o).unwrap();
        assert_eq!(sm.nvars, 2);
        assert_eq!(sm.rank, 2);
        assert_eq!(sm.generators.len(), 2);
    }

    #[test]
    fn rejects_out_of_range() {
        let f = PrimeField::new(32003).unwrap();
        let o = MonomialOrder::grevlex_top();
        assert!(parse_element("x4", 3, 1, &f, &o).is_err());
        assert!(parse_element("e2", 3, 1, &f, &o).is_err());
    }
}
