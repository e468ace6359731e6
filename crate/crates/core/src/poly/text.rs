//! Canonical text and LaTeX rendering, plus a parser for the canonical text.
//!
//! Text grammar: terms joined by ` + ` / ` - `; a term is `*`-joined factors drawn from
//! a rational (`3`, `1/6`), `L` or `L^k` (k may be negative), and `lj` or `lj^k`.

use num::{One, Signed, Zero};

use super::{Monomial, MultiPoly, PolyError};
use crate::rational::{self, Rational};

fn factor_texts(m: &Monomial) -> Vec<String> {
    let mut out = Vec::new();
    match m.lambda {
        0 => {}
        1 => out.push("L".to_string()),
        k => out.push(format!("L^{k}")),
    }
    for (i, &e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(format!("l{}", i + 1)),
            e => out.push(format!("l{}^{}", i + 1, e)),
        }
    }
    out
}

fn factor_latex(m: &Monomial) -> Vec<String> {
    let mut out = Vec::new();
    match m.lambda {
        0 => {}
        1 => out.push("\\lambda".to_string()),
        k => out.push(format!("\\lambda^{{{k}}}")),
    }
    for (i, &e) in m.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(format!("l_{{{}}}", i + 1)),
            e => out.push(format!("l_{{{}}}^{{{}}}", i + 1, e)),
        }
    }
    out
}

fn join_terms(terms: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in terms.enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(super) fn render(p: &MultiPoly) -> String {
    join_terms(p.sorted_terms().into_iter().map(|(m, c)| {
        let factors = factor_texts(m);
        let abs = c.abs();
        let body = if factors.is_empty() {
            rational::render(&abs)
        } else if abs.is_one() {
            factors.join("*")
        } else {
            format!("{}*{}", rational::render(&abs), factors.join("*"))
        };
        (c.is_negative(), body)
    }))
}

pub(super) fn render_latex(p: &MultiPoly) -> String {
    join_terms(p.sorted_terms().into_iter().map(|(m, c)| {
        let factors = factor_latex(m);
        let abs = c.abs();
        let body = if factors.is_empty() {
            rational::render_latex(&abs)
        } else if abs.is_one() {
            factors.join(" ")
        } else {
            format!("{} {}", rational::render_latex(&abs), factors.join(" "))
        };
        (c.is_negative(), body)
    }))
}

struct ParsedTerm {
    coeff: Rational,
    lambda: i32,
    exps: Vec<(usize, u32)>,
}

fn parse_term(text: &str, negative: bool) -> Result<ParsedTerm, PolyError> {
    let err = || PolyError::Parse(format!("bad term '{text}'"));
    let mut term = ParsedTerm {
        coeff: if negative { -Rational::one() } else { Rational::one() },
        lambda: 0,
        exps: Vec::new(),
    };
    if text.is_empty() {
        return Err(err());
    }
    for factor in text.split('*') {
        let (base, power) = match factor.split_once('^') {
            Some((b, p)) => (b, Some(p.parse::<i64>().map_err(|_| err())?)),
            None => (factor, None),
        };
        if base == "L" {
            term.lambda += power.unwrap_or(1) as i32;
        } else if let Some(index) = base.strip_prefix('l') {
            let j: usize = index.parse().map_err(|_| err())?;
            let e = power.unwrap_or(1);
            if j == 0 || e < 0 {
                return Err(err());
            }
            term.exps.push((j, e as u32));
        } else {
            if power.is_some() {
                return Err(err());
            }
            term.coeff *= rational::parse(base).ok_or_else(err)?;
        }
    }
    Ok(term)
}

pub(super) fn parse(input: &str, min_nvars: usize) -> Result<MultiPoly, PolyError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    // split at +/- not preceded by '^'
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !current.is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
            } else if prev.is_some() {
                return Err(PolyError::Parse(format!("dangling sign in '{input}'")));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if current.is_empty() {
        return Err(PolyError::Parse(format!("trailing sign in '{input}'")));
    }
    pieces.push((negative, current));

    let terms = pieces
        .iter()
        .map(|(neg, body)| parse_term(body, *neg))
        .collect::<Result<Vec<_>, _>>()?;
    let nvars = terms
        .iter()
        .flat_map(|t| t.exps.iter().map(|(j, _)| *j))
        .max()
        .unwrap_or(0)
        .max(min_nvars);
    let mut out = MultiPoly::zero(nvars);
    for t in terms {
        if t.coeff.is_zero() {
            continue;
        }
        let mut exps = vec![0u32; nvars];
        for (j, e) in t.exps {
            exps[j - 1] += e;
        }
        out.accumulate(Monomial { lambda: t.lambda, exps }, t.coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn canonical_order() {
        let p = &(&MultiPoly::term(2, int(1), 2, &[2]) + &MultiPoly::term(2, int(2), 1, &[0, 1]))
            + &(&MultiPoly::term(2, int(-1), 1, &[1]) + &MultiPoly::constant(2, ratio(1, 6)));
        assert_eq!(p.to_text(), "L^2*l1^2 - L*l1 + 2*L*l2 + 1/6");
        assert_eq!(
            p.to_latex(),
            "\\lambda^{2} l_{1}^{2} - \\lambda l_{1} + 2 \\lambda l_{2} + \\frac{1}{6}"
        );
    }

    #[test]
    fn zero_and_negative_leading() {
        assert_eq!(MultiPoly::zero(3).to_text(), "0");
        assert_eq!(MultiPoly::constant(1, ratio(-1, 2)).to_text(), "-1/2");
        assert_eq!(MultiPoly::term(1, ratio(-1, 2), -1, &[]).to_text(), "-1/2*L^-1");
    }

    #[test]
    fn parses_canonical_text() {
        let p = MultiPoly::parse("L^2*l1^2 - L*l1 + 2*L*l2 + 1/6", 0).unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.coefficient(0, &[]), ratio(1, 6));
        assert_eq!(p.coefficient(1, &[1]), int(-1));
        let q = MultiPoly::parse("-1/2*L^-1 + l3", 0).unwrap();
        assert_eq!(q.nvars(), 3);
        assert_eq!(q.coefficient(-1, &[]), ratio(-1, 2));
        assert_eq!(MultiPoly::parse("0", 2).unwrap(), MultiPoly::zero(2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "L^", "x1", "1 +", "l0", "++l1", "2^3", "l1^-2"] {
            assert!(MultiPoly::parse(bad, 0).is_err(), "{bad}");
        }
    }
}
