//! Recursive-descent parser for scalar expressions.
//!
//! Grammar (EBNF):
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-"* atom ("^" uint)?
//! atom   := uint | ident | "(" expr ")"
//! uint   := [0-9]+
//! ident  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//! Identifiers must be symbols declared in the [`SymbolContext`]; `h` and `s`
//! are always declared.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::rational::RationalFunction;
use super::symbol::Symbol;

/// The set of symbols a parse is allowed to mention.
#[derive(Clone, Debug, Default)]
pub struct SymbolContext {
    colours: BTreeSet<Symbol>,
}

impl SymbolContext {
    /// Context with only `h` and `s`.
    pub fn new() -> Self {
        SymbolContext { colours: BTreeSet::new() }
    }

    /// Context with `h`, `s` and the given colour names.
    pub fn with_colours<'a, I: IntoIterator<Item = &'a str>>(names: I) -> Self {
        let mut ctx = SymbolContext::new();
        for n in names {
            ctx.declare(Symbol::new(n));
        }
        ctx
    }

    pub fn declare(&mut self, sym: Symbol) {
        if sym != Symbol::h() && sym != Symbol::s() {
            self.colours.insert(sym);
        }
    }

    pub fn contains(&self, name: &str) -> bool {
        name == "h" || name == "s" || self.colours.contains(&Symbol::new(name))
    }

    pub fn colours(&self) -> impl Iterator<Item = &Symbol> {
        self.colours.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    UnknownSymbol(String),
    ExponentTooLarge,
    DivisionByZero,
}

/// Syntax or semantic error with the byte position it occurred at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{c}' at position {}", self.position)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "unexpected end of input at position {}", self.position)
            }
            ParseErrorKind::UnexpectedToken(t) => {
                write!(f, "unexpected token '{t}' at position {}", self.position)
            }
            ParseErrorKind::UnknownSymbol(n) => {
                write!(f, "unknown symbol '{n}' at position {}", self.position)
            }
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent too large at position {}", self.position)
            }
            ParseErrorKind::DivisionByZero => {
                write!(f, "division by zero at position {}", self.position)
            }
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => { out.push((i, Token::Plus)); i += 1 }
            '-' => { out.push((i, Token::Minus)); i += 1 }
            '*' => { out.push((i, Token::Star)); i += 1 }
            '/' => { out.push((i, Token::Slash)); i += 1 }
            '^' => { out.push((i, Token::Caret)); i += 1 }
            '(' => { out.push((i, Token::LParen)); i += 1 }
            ')' => { out.push((i, Token::RParen)); i += 1 }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
            }
            'A'..='Z' | 'a'..='z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => return Err(ParseError { position: i, kind: ParseErrorKind::UnexpectedChar(c) }),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    ctx: &'a SymbolContext,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Token::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.factor()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Star => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Token::Slash => {
                    let at = self.here();
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.div(&rhs).map_err(|_| ParseError {
                        position: at,
                        kind: ParseErrorKind::DivisionByZero,
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RationalFunction, ParseError> {
        let mut negate = false;
        while self.peek() == Some(&Token::Minus) {
            self.bump();
            negate = !negate;
        }
        let mut value = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some((_, Token::Int(n))) => {
                    let exp = u32::try_from(&n).map_err(|_| ParseError {
                        position: at,
                        kind: ParseErrorKind::ExponentTooLarge,
                    })?;
                    if exp > 64 {
                        return Err(ParseError {
                            position: at,
                            kind: ParseErrorKind::ExponentTooLarge,
                        });
                    }
                    value = value.pow(exp as i32).expect("nonnegative power");
                }
                Some((p, t)) => {
                    return Err(ParseError {
                        position: p,
                        kind: ParseErrorKind::UnexpectedToken(token_name(&t)),
                    })
                }
                None => {
                    return Err(ParseError { position: at, kind: ParseErrorKind::UnexpectedEnd })
                }
            }
        }
        Ok(if negate { value.neg() } else { value })
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let at = self.here();
        match self.bump() {
            Some((_, Token::Int(n))) => Ok(RationalFunction::from_rational(
                num_rational::BigRational::from_integer(n),
            )),
            Some((p, Token::Ident(name))) => {
                if self.ctx.contains(&name) {
                    Ok(RationalFunction::symbol(Symbol::new(&name)))
                } else {
                    Err(ParseError { position: p, kind: ParseErrorKind::UnknownSymbol(name) })
                }
            }
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some((_, Token::RParen)) => Ok(inner),
                    Some((p, t)) => Err(ParseError {
                        position: p,
                        kind: ParseErrorKind::UnexpectedToken(token_name(&t)),
                    }),
                    None => Err(ParseError { position: at, kind: ParseErrorKind::UnexpectedEnd }),
                }
            }
            Some((p, t)) => Err(ParseError {
                position: p,
                kind: ParseErrorKind::UnexpectedToken(token_name(&t)),
            }),
            None => Err(ParseError { position: at, kind: ParseErrorKind::UnexpectedEnd }),
        }
    }
}

fn token_name(t: &Token) -> String {
    match t {
        Token::Int(n) => n.to_string(),
        Token::Ident(s) => s.clone(),
        Token::Plus => "+".to_string(),
        Token::Minus => "-".to_string(),
        Token::Star => "*".to_string(),
        Token::Slash => "/".to_string(),
        Token::Caret => "^".to_string(),
        Token::LParen => "(".to_string(),
        Token::RParen => ")".to_string(),
    }
}

/// Parses a scalar expression against the declared symbol set.
pub fn parse_scalar(text: &str, ctx: &SymbolContext) -> Result<RationalFunction, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0, end: text.len(), ctx };
    let value = p.expr()?;
    match p.bump() {
        None => Ok(value),
        Some((pos, t)) => {
            Err(ParseError { position: pos, kind: ParseErrorKind::UnexpectedToken(token_name(&t)) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_polynomial_parses() {
        let ctx = SymbolContext::with_colours(["l", "m"]);
        let p = parse_scalar("h^2 - l*m*s^2 - h*s*(l-m)", &ctx).unwrap();
        assert!(p.is_polynomial());
        assert_eq!(p.numerator().num_terms(), 4);
    }

    #[test]
    fn zero_and_negatives() {
        let ctx = SymbolContext::new();
        assert!(parse_scalar("0", &ctx).unwrap().is_zero());
        let a = parse_scalar("--3", &ctx).unwrap();
        assert_eq!(a, RationalFunction::from_int(3));
        let b = parse_scalar("-h^2", &ctx).unwrap();
        assert_eq!(b, RationalFunction::symbol(Symbol::h()).pow(2).unwrap().neg());
    }

    #[test]
    fn unknown_symbol_rejected() {
        let ctx = SymbolContext::new();
        let err = parse_scalar("h + lambda*s", &ctx).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownSymbol("lambda".into()));
        assert_eq!(err.position, 4);
    }

    #[test]
    fn syntax_error_position() {
        let ctx = SymbolContext::new();
        let err = parse_scalar("h + ", &ctx).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        let err = parse_scalar("h $ s", &ctx).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('$'));
        assert_eq!(err.position, 2);
    }

    #[test]
    fn division_by_zero_literal() {
        let ctx = SymbolContext::new();
        let err = parse_scalar("1/(h - h)", &ctx).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DivisionByZero);
    }
}
