//! Text forms for algebra elements and polynomials.
//!
//! Elements: signed sums of `coefficient*e<k>` terms (`1/2*e0 - e3`), optionally
//! wrapped in brackets, or a bracketed coordinate vector `[0,1,0,0]`.
//!
//! Polynomials: signed sums of products of factors, where a factor is a
//! rational, a basis symbol `e<k>`, a bracketed element, `X` or `X^k`. For
//! example `[0,1,0,0]*X^2 + [e1+e2]*X - X^3 + 1/2*e3`.

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::zero_vector;
use crate::poly::Poly;
use crate::scalars::Rational;

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits at top-level `+`/`-`, keeping each sign with its term.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    let mut pending_sign = false;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '[' => depth += 1,
            ']' if depth == 0 => return Err(err(format!("unbalanced `]` in `{s}`"))),
            ']' => depth -= 1,
            _ => {}
        }
        let after_operator = matches!(prev, Some('*' | '/' | '^'));
        if depth == 0 && (ch == '+' || ch == '-') && !after_operator {
            if !current.trim().is_empty() {
                terms.push((negative, current.trim().to_string()));
                current.clear();
                negative = false;
            }
            negative ^= ch == '-';
            pending_sign = true;
        } else {
            if !ch.is_whitespace() {
                pending_sign = false;
            }
            current.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(err(format!("unbalanced `[` in `{s}`")));
    }
    if pending_sign {
        return Err(err(format!("dangling operator in `{s}`")));
    }
    if !current.trim().is_empty() {
        terms.push((negative, current.trim().to_string()));
    }
    Ok(terms)
}

/// Splits at top-level `*`.
fn split_factors(term: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in term.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && ch == '*' {
            out.push(current.trim().to_string());
            current.clear();
        } else {
            current.push(ch);
        }
    }
    out.push(current.trim().to_string());
    out
}

fn parse_basis_symbol(f: &str, dim: usize) -> Result<Option<AlgebraElement>> {
    let Some(rest) = f.strip_prefix('e') else {
        return Ok(None);
    };
    let k: usize = rest
        .parse()
        .map_err(|_| err(format!("bad basis symbol `{f}`")))?;
    if k >= dim {
        return Err(err(format!(
            "basis symbol `{f}` out of range for dimension {dim}"
        )));
    }
    Ok(Some(AlgebraElement::basis(dim, k)))
}

fn parse_bracket(f: &str, dim: usize) -> Result<Option<AlgebraElement>> {
    let Some(inner) = f.strip_prefix('[').and_then(|x| x.strip_suffix(']')) else {
        return Ok(None);
    };
    if inner.contains(',') || (dim == 1 && !inner.contains('e') && !inner.trim().is_empty()) {
        let coords = inner
            .split(',')
            .map(|c| c.trim().parse::<Rational>())
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != dim {
            return Err(err(format!(
                "coordinate vector `{f}` has {} entries, expected {dim}",
                coords.len()
            )));
        }
        return Ok(Some(AlgebraElement::from_coords(coords)));
    }
    parse_element(inner, dim).map(Some)
}

fn parse_x_power(f: &str) -> Result<Option<usize>> {
    if f == "X" {
        return Ok(Some(1));
    }
    match f.strip_prefix("X^") {
        Some(k) => k
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| err(format!("bad exponent in `{f}`"))),
        None => Ok(None),
    }
}

/// A product of factors: rational scale, optional coefficient, power of `X`.
fn parse_term(term: &str, dim: usize, allow_x: bool) -> Result<(usize, AlgebraElement)> {
    let mut scale = Rational::one();
    let mut coeff: Option<AlgebraElement> = None;
    let mut degree = 0usize;
    for f in split_factors(term) {
        if f.is_empty() {
            return Err(err(format!("empty factor in `{term}`")));
        }
        if let Some(d) = parse_x_power(&f)? {
            if !allow_x {
                return Err(err(format!(
                    "`X` is not allowed in an element literal: `{term}`"
                )));
            }
            degree += d;
            continue;
        }
        let element = match parse_bracket(&f, dim)? {
            Some(e) => Some(e),
            None => parse_basis_symbol(&f, dim)?,
        };
        match element {
            Some(e) if coeff.is_some() => {
                return Err(err(format!(
                    "more than one algebra factor in `{term}` (got `{e}` twice)"
                )));
            }
            Some(e) => coeff = Some(e),
            None => scale *= &f.parse::<Rational>()?,
        }
    }
    let base = coeff.unwrap_or_else(|| AlgebraElement::basis(dim, 0));
    Ok((degree, base.scale(&scale)))
}

/// Parses `1/2*e0 - e3`, `[e3+e10]` or `[0,1,0,0]` as an element of a `dim`-dimensional algebra.
pub fn parse_element(s: &str, dim: usize) -> Result<AlgebraElement> {
    if dim == 0 {
        return Err(err("algebra has dimension 0"));
    }
    let terms = split_terms(s)?;
    if terms.is_empty() {
        return Err(err("empty element literal"));
    }
    let mut total = AlgebraElement::from_coords(zero_vector(dim));
    for (neg, t) in terms {
        if t == "0" {
            continue;
        }
        let (_, v) = parse_term(&t, dim, false)?;
        if neg {
            total.sub_assign(&v);
        } else {
            total.add_assign(&v);
        }
    }
    Ok(total)
}

/// Parses polynomial text such as `[0,1,0,0]*X^2 + [e1+e2]*X - X^3`.
pub fn parse_poly(s: &str, dim: usize) -> Result<Poly> {
    if dim == 0 {
        return Err(err("algebra has dimension 0"));
    }
    let terms = split_terms(s)?;
    if terms.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut p = Poly::zero();
    for (neg, t) in terms {
        if t == "0" {
            continue;
        }
        let (d, v) = parse_term(&t, dim, true)?;
        p.add_term(d, &if neg { -&v } else { v });
    }
    Ok(p)
}
