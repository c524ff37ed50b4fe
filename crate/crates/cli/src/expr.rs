//! Generator-expression syntax.
//!
//! ```text
//! expr   := item+
//! item   := GEN | INVGEN | "0" | "1"
//! GEN    := "p" DIGITS
//! INVGEN := "P" DIGITS | "p" DIGITS "^-1"
//! ```
//!
//! Whitespace and `*` separate items. A `0` anywhere makes the whole
//! expression zero; `1` contributes nothing. At λ = 2 a filter literal
//! `F[a|b]` may stand in place of an expression where elements of the
//! extension are accepted.

use std::fmt;

use polymon::extension::{FilterDesc, SElement};
use polymon::polycyclic::{reduce, GenString, Token};
use polymon::{Error, PElement, Result};

/// A parsed product of generators, or a filter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Product { gens: GenString, zero: bool },
    Filter(FilterDesc),
}

impl Expr {
    /// The element of `P_λ` this product denotes.
    pub fn element(&self) -> Result<PElement> {
        match self {
            Expr::Product { zero: true, .. } => Ok(PElement::Zero),
            Expr::Product { gens, .. } => Ok(reduce(gens)),
            Expr::Filter(f) => Err(Error::Precondition(format!(
                "{f} is a filter point, not an element of the polycyclic monoid"
            ))),
        }
    }

    pub fn s_element(&self) -> Result<SElement> {
        match self {
            Expr::Filter(f) => Ok(SElement::Filter(f.clone())),
            other => other.element().map(SElement::Finite),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Product { zero: true, .. } => f.write_str("0"),
            Expr::Product { gens, .. } => fmt::Display::fmt(gens, f),
            Expr::Filter(d) => fmt::Display::fmt(d, f),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

/// Parses a product of generators over `λ` generators. Positions in errors
/// are byte offsets into `text`.
pub fn parse(text: &str, lambda: u32) -> Result<Expr> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut zero = false;
    let mut items = 0;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b'*' {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            b'0' | b'1' => {
                i += 1;
                if bytes.get(i).is_some_and(u8::is_ascii_digit) {
                    return Err(syntax(start, "numbers other than 0 and 1 are not items"));
                }
                zero |= c == b'0';
            }
            b'p' | b'P' => {
                i += 1;
                let digits_start = i;
                while bytes.get(i).is_some_and(u8::is_ascii_digit) {
                    i += 1;
                }
                if i == digits_start {
                    return Err(syntax(i, "expected generator index"));
                }
                let index: u32 = text[digits_start..i]
                    .parse()
                    .map_err(|_| syntax(digits_start, "generator index too large"))?;
                let mut inverted = c == b'P';
                if text[i..].starts_with('^') {
                    if !text[i..].starts_with("^-1") {
                        return Err(syntax(i, "expected ^-1"));
                    }
                    if inverted {
                        return Err(syntax(i, "^-1 only follows a lowercase generator"));
                    }
                    inverted = true;
                    i += 3;
                }
                if index == 0 || index > lambda {
                    return Err(Error::LetterOutOfRange {
                        letter: index,
                        lambda,
                    });
                }
                tokens.push(Token { index, inverted });
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character {ch:?}")));
            }
        }
        items += 1;
    }
    if items == 0 {
        return Err(syntax(0, "empty expression"));
    }
    Ok(Expr::Product {
        gens: GenString::new(lambda, tokens)?,
        zero,
    })
}

/// Like [`parse`], but also accepts a filter literal `F[a|b]` (always over
/// two generators).
pub fn parse_s(text: &str) -> Result<Expr> {
    if text.trim_start().starts_with('F') {
        return FilterDesc::parse(text).map(Expr::Filter);
    }
    parse(text, 2)
}

/// Canonical text of an element, the inverse of [`parse`].
pub fn render(x: &PElement) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(e: &Expr) -> Vec<(u32, bool)> {
        match e {
            Expr::Product { gens, .. } => gens
                .tokens()
                .iter()
                .map(|t| (t.index, t.inverted))
                .collect(),
            Expr::Filter(_) => panic!("not a product"),
        }
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            toks(&parse("p1 P1", 2).unwrap()),
            vec![(1, false), (1, true)]
        );
        assert_eq!(
            toks(&parse("P2*p2", 2).unwrap()),
            vec![(2, true), (2, false)]
        );
        assert_eq!(
            toks(&parse("p2^-1p1", 2).unwrap()),
            vec![(2, true), (1, false)]
        );
        assert!(matches!(
            parse("p3", 2),
            Err(Error::LetterOutOfRange {
                letter: 3,
                lambda: 2
            })
        ));
    }

    #[test]
    fn zero_and_one() {
        assert_eq!(
            parse("p1 0 P2", 2).unwrap().element().unwrap(),
            PElement::Zero
        );
        assert_eq!(
            parse("1", 2).unwrap().element().unwrap(),
            PElement::one(2).unwrap()
        );
        assert_eq!(parse("1 * p1 * 1", 2).unwrap().to_string(), "p1");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        for (text, at) in [
            ("p1 x", 3),
            ("p", 1),
            ("p1^2", 2),
            ("", 0),
            ("  ", 0),
            ("P1^-1", 2),
            ("12", 0),
        ] {
            match parse(text, 2) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, at, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn filter_literals() {
        let e = parse_s("F[p2|e]").unwrap();
        assert_eq!(e.to_string(), "F[p2|e]");
        assert!(e.element().is_err());
        assert!(parse_s("F[p1|e]").is_err());
        assert!(parse_s("P1 p2").unwrap().s_element().is_ok());
    }
}
