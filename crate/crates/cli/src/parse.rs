//! Ideal input grammar.
//!
//! ```text
//! ideal     := generator ((',' | '\n') generator)*
//! generator := factor ('*' factor)*
//! factor    := ident ('^' positive-integer)?
//! ident     := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Other whitespace is ignored. Blank lines are skipped, but a comma must
//! always be followed by a generator. Repeated factors multiply (`x*x` is
//! `x^2`). Generators divisible by another generator are dropped with a
//! warning.

use monideal::polar::format_monomial;
use monideal::{MonomialIdeal, Variables};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u32),
    Star,
    Caret,
    Comma,
    Newline,
}

fn err(pos: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        match c {
            '\n' => {
                chars.next();
                out.push((pos, Tok::Newline));
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '*' | '^' | ',' => {
                chars.next();
                out.push((
                    pos,
                    match c {
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        _ => Tok::Comma,
                    },
                ));
            }
            c if c.is_ascii_alphabetic() => {
                let mut ident = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        ident.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((pos, Tok::Ident(ident)));
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let value = digits
                    .parse::<u32>()
                    .map_err(|_| err(pos, format!("exponent {digits} is too large")))?;
                out.push((pos, Tok::Int(value)));
            }
            other => return Err(err(pos, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

/// Parses `text`. With `vars`, the variable universe is fixed (and may
/// contain variables that appear in no generator); otherwise variables are
/// numbered in order of first appearance.
pub fn parse_ideal(text: &str, vars: Option<&[String]>) -> Result<ParsedIdeal, CliError> {
    let tokens = lex(text)?;
    let mut labels: Vec<String> = vars.map(<[String]>::to_vec).unwrap_or_default();
    let fixed = vars.is_some();
    let mut generators: Vec<Vec<(usize, u32)>> = Vec::new();

    let mut k = 0;
    let skip_newlines = |k: &mut usize| {
        while matches!(tokens.get(*k), Some((_, Tok::Newline))) {
            *k += 1;
        }
    };
    skip_newlines(&mut k);
    while k < tokens.len() {
        // generator
        let mut factors = Vec::new();
        loop {
            let (pos, tok) = &tokens[k];
            let Tok::Ident(name) = tok else {
                return Err(err(*pos, "expected a variable"));
            };
            let index = match labels.iter().position(|l| l == name) {
                Some(i) => i,
                None if fixed => {
                    return Err(err(
                        *pos,
                        format!("variable {name} is not in the variable list"),
                    ))
                }
                None => {
                    labels.push(name.clone());
                    labels.len() - 1
                }
            };
            k += 1;
            let mut exp = 1;
            if let Some((pos, Tok::Caret)) = tokens.get(k) {
                match tokens.get(k + 1) {
                    Some((_, Tok::Int(e))) if *e > 0 => exp = *e,
                    Some((p, Tok::Int(_))) => return Err(err(*p, "exponent must be positive")),
                    _ => return Err(err(*pos + 1, "expected an exponent after '^'")),
                }
                k += 2;
            }
            factors.push((index, exp));
            match tokens.get(k) {
                Some((_, Tok::Star)) => {
                    k += 1;
                    if k >= tokens.len() {
                        return Err(err(text.len(), "expected a variable after '*'"));
                    }
                }
                _ => break,
            }
        }
        generators.push(factors);
        // separator
        match tokens.get(k) {
            None => break,
            Some((_, Tok::Newline)) => skip_newlines(&mut k),
            Some((pos, Tok::Comma)) => {
                k += 1;
                skip_newlines(&mut k);
                if k >= tokens.len() {
                    return Err(err(*pos, "expected a generator after ','"));
                }
            }
            Some((pos, _)) => return Err(err(*pos, "expected ',' or a newline")),
        }
        if let Some((pos, Tok::Comma)) = tokens.get(k) {
            return Err(err(*pos, "empty generator"));
        }
    }
    if generators.is_empty() {
        return Err(err(0, "no generators given"));
    }

    let variables = Variables::new(labels.clone()).map_err(CliError::Core)?;
    let n = variables.len();
    let exponents: Vec<Vec<u32>> = generators
        .into_iter()
        .map(|factors| {
            let mut e = vec![0u32; n];
            for (v, a) in factors {
                e[v] = e[v].saturating_add(a);
            }
            e
        })
        .collect();
    let (ideal, dropped) =
        MonomialIdeal::minimalized(variables.clone(), exponents).map_err(CliError::Core)?;
    let warnings = dropped
        .iter()
        .map(|g| {
            format!(
                "generator {} is a multiple of another generator; dropped",
                format_monomial(&variables, g)
            )
        })
        .collect();
    Ok(ParsedIdeal { ideal, warnings })
}

/// Renders an ideal back into the input grammar.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    (0..ideal.generators().len())
        .map(|k| ideal.monomial(k))
        .collect::<Vec<_>>()
        .join(", ")
}
