//! Expression parser for polynomial input.
//!
//! Accepts sums, differences, products, nonnegative integer powers,
//! parentheses, and rational literals in a single variable, and expands the
//! result into dense form. The grammar:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | adjacency) factor)*
//! factor  := base ('^' nonneg-integer)?
//! base    := rational-literal | variable | '(' expr ')'
//! rational-literal := integer ('/' positive-integer)?
//! ```
//!
//! A single unary minus may open an expression or a term. Adjacency counts
//! as multiplication only between a closing parenthesis and an opening
//! parenthesis or a variable, so `(x-1)(x-2)` parses while `2x` is rejected;
//! multi-character variable names would otherwise make `2x` ambiguous.
//! Decimal literals are rejected outright: exact input requires rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Poly;
use crate::rat::Rat;

/// Largest exponent [`parse`] accepts.
pub const DEFAULT_EXPONENT_CAP: u32 = 10_000;

/// Half-open byte range into the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.end <= self.start + 1 {
            write!(f, "position {}", self.start)
        } else {
            write!(f, "positions {}..{}", self.start, self.end)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {span}: {message}")]
    Syntax { span: Span, message: String },
    #[error("{span}: expression uses both \"{first}\" and \"{second}\"; only one variable is allowed")]
    MultipleVariables {
        first: String,
        second: String,
        span: Span,
    },
    #[error("negative exponent at {span}: exponents must be nonnegative integers")]
    NegativeExponent { span: Span },
    #[error("exponent {exponent} at {span} exceeds the limit of {cap}")]
    ExponentTooLarge {
        exponent: BigInt,
        cap: u32,
        span: Span,
    },
}

impl ParseError {
    /// Where in the input the error was detected.
    pub fn span(&self) -> Span {
        match self {
            ParseError::Syntax { span, .. }
            | ParseError::MultipleVariables { span, .. }
            | ParseError::NegativeExponent { span }
            | ParseError::ExponentTooLarge { span, .. } => *span,
        }
    }
}

/// A successfully parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseResult {
    /// The fully expanded polynomial, carrying the inferred variable name.
    pub poly: Poly,
    /// Variable seen in the input; `None` for constant expressions.
    pub variable_name: Option<String>,
    /// Where the variable first occurred, for diagnostics.
    pub variable_span: Option<Span>,
}

/// Parses `input` with the default exponent cap.
pub fn parse(input: &str) -> Result<ParseResult, ParseError> {
    parse_with_exponent_cap(input, DEFAULT_EXPONENT_CAP)
}

/// Parses `input`, rejecting exponents above `cap`.
pub fn parse_with_exponent_cap(input: &str, cap: u32) -> Result<ParseResult, ParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: input.len(),
        variable: None,
        cap,
    };
    let poly = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(parser.unexpected(tok.span, "expected '+', '-', '*', or end of input"));
    }
    let (variable_name, variable_span) = match parser.variable {
        Some((ref name, span)) => (Some(name.clone()), Some(span)),
        None => (None, None),
    };
    let poly = match variable_name {
        Some(ref name) => poly.with_variable(name),
        None => poly,
    };
    Ok(ParseResult {
        poly,
        variable_name,
        variable_span,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum TokenKind {
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

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    span: Span,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let c = input[i..].chars().next().expect("in bounds");
        match c {
            ' ' | '\t' | '\r' | '\n' => i += c.len_utf8(),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    return Err(ParseError::Syntax {
                        span: Span::new(i, i + 1),
                        message: "decimal literals are not supported; write an exact rational \
                                  such as 3/2"
                            .to_string(),
                    });
                }
                let value: BigInt = input[start..i].parse().expect("digits");
                tokens.push(Token {
                    kind: TokenKind::Int(value),
                    span: Span::new(start, i),
                });
            }
            '.' => {
                return Err(ParseError::Syntax {
                    span: Span::new(start, start + 1),
                    message: "decimal literals are not supported; write an exact rational \
                              such as 3/2"
                        .to_string(),
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                while i < bytes.len() {
                    let d = input[i..].chars().next().expect("in bounds");
                    if d.is_alphanumeric() || d == '_' {
                        i += d.len_utf8();
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(input[start..i].to_string()),
                    span: Span::new(start, i),
                });
            }
            _ => {
                let kind = match c {
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '/' => TokenKind::Slash,
                    '^' => TokenKind::Caret,
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    other => {
                        return Err(ParseError::Syntax {
                            span: Span::new(start, start + other.len_utf8()),
                            message: format!("unexpected character '{other}'"),
                        });
                    }
                };
                i += c.len_utf8();
                tokens.push(Token {
                    kind,
                    span: Span::new(start, i),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
    variable: Option<(String, Span)>,
    cap: u32,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek_kind() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn end_span(&self) -> Span {
        Span::new(self.end, self.end)
    }

    fn unexpected(&self, span: Span, expected: &str) -> ParseError {
        ParseError::Syntax {
            span,
            message: expected.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&TokenKind::Plus) {
                let rhs = self.term()?;
                acc = &acc + &rhs;
            } else if self.eat(&TokenKind::Minus) {
                let rhs = self.term()?;
                acc = &acc - &rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let negated = self.eat(&TokenKind::Minus);
        let (mut acc, mut paren) = self.factor()?;
        loop {
            if self.eat(&TokenKind::Star) {
                let (rhs, p) = self.factor()?;
                acc = &acc * &rhs;
                paren = p;
            } else if paren
                && matches!(
                    self.peek_kind(),
                    Some(TokenKind::LParen | TokenKind::Ident(_))
                )
            {
                let (rhs, p) = self.factor()?;
                acc = &acc * &rhs;
                paren = p;
            } else {
                break;
            }
        }
        Ok(if negated { -acc } else { acc })
    }

    /// Returns the factor and whether its final token was a closing
    /// parenthesis, which is what licenses adjacency multiplication.
    fn factor(&mut self) -> Result<(Poly, bool), ParseError> {
        let (base, mut paren) = self.base()?;
        if !self.eat(&TokenKind::Caret) {
            return Ok((base, paren));
        }
        paren = false;
        let Some(tok) = self.peek() else {
            return Err(self.unexpected(self.end_span(), "expected an exponent after '^'"));
        };
        let tok = tok.clone();
        match tok.kind {
            TokenKind::Int(exp) => {
                self.pos += 1;
                if exp > BigInt::from(self.cap) {
                    return Err(ParseError::ExponentTooLarge {
                        exponent: exp,
                        cap: self.cap,
                        span: tok.span,
                    });
                }
                let exp = exp.to_u32().expect("bounded by cap");
                Ok((base.pow(exp), paren))
            }
            TokenKind::Minus => {
                let end = match self.tokens.get(self.pos + 1) {
                    Some(Token {
                        kind: TokenKind::Int(_),
                        span,
                    }) => span.end,
                    _ => tok.span.end,
                };
                Err(ParseError::NegativeExponent {
                    span: Span::new(tok.span.start, end),
                })
            }
            _ => Err(self.unexpected(tok.span, "expected a nonnegative integer exponent")),
        }
    }

    fn base(&mut self) -> Result<(Poly, bool), ParseError> {
        let Some(tok) = self.peek() else {
            return Err(self.unexpected(self.end_span(), "expected a number, variable, or '('"));
        };
        let tok = tok.clone();
        match tok.kind {
            TokenKind::Int(numer) => {
                self.pos += 1;
                let value = if self.peek_kind() == Some(&TokenKind::Slash) {
                    self.pos += 1;
                    let Some(den_tok) = self.peek().cloned() else {
                        return Err(
                            self.unexpected(self.end_span(), "expected a denominator after '/'")
                        );
                    };
                    let TokenKind::Int(denom) = den_tok.kind else {
                        return Err(
                            self.unexpected(den_tok.span, "expected a denominator after '/'")
                        );
                    };
                    self.pos += 1;
                    if denom.is_zero() {
                        return Err(
                            self.unexpected(den_tok.span, "denominator must be a positive integer")
                        );
                    }
                    Rat::new(numer, denom)
                } else {
                    Rat::from(numer)
                };
                Ok((Poly::constant(value), false))
            }
            TokenKind::Ident(name) => {
                self.pos += 1;
                match self.variable {
                    Some((ref first, _)) if *first != name => {
                        return Err(ParseError::MultipleVariables {
                            first: first.clone(),
                            second: name,
                            span: tok.span,
                        });
                    }
                    Some(_) => {}
                    None => self.variable = Some((name.clone(), tok.span)),
                }
                Ok((Poly::variable(&name), false))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                let Some(close) = self.peek() else {
                    return Err(self.unexpected(self.end_span(), "expected ')'"));
                };
                if close.kind != TokenKind::RParen {
                    let span = close.span;
                    return Err(self.unexpected(span, "expected ')'"));
                }
                self.pos += 1;
                Ok((inner, true))
            }
            _ => Err(self.unexpected(tok.span, "expected a number, variable, or '('")),
        }
    }
}
