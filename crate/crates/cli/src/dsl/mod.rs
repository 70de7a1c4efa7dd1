//! The `.lie` structure-equation language: lexer, recursive-descent parser,
//! and canonical printer.
//!
//! ```text
//! document := "algebra" IDENT "{" stmt* "}"
//! stmt     := "dim" "=" INT ";"
//!           | "param" IDENT "=" RAT ";"
//!           | "d" GEN "=" expr2 ";"
//!           | "J" GEN "=" expr1 ";"
//!           | "omega" "=" expr2 ";"
//!           | "metric" "=" ("orthonormal" | gexpr) ";"
//! GEN      := "e" INT
//! expr1    := signed sum of RAT? GEN
//! expr2    := signed sum of RAT? GEN "^" GEN
//! gexpr    := signed sum of RAT? GEN "*" GEN
//! RAT      := INT ("/" INT)?
//! ```
//!
//! `#` comments run to end of line; whitespace is insignificant. A declared
//! parameter name may stand wherever RAT may.

mod lexer;
mod parser;
mod printer;

pub use parser::parse;
pub use printer::print;

use akc_core::Rational;
use std::fmt;

/// 1-based line/column position in the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

/// AST node with its source position. Equality ignores the position, so
/// documents compare structurally.
#[derive(Clone, Copy, Debug)]
pub struct Spanned<T> {
    pub node: T,
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Spanned<T> {}

#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub name: String,
    pub dim: Spanned<u8>,
    pub params: Vec<(Spanned<String>, Rational)>,
    pub d_equations: Vec<(Spanned<u8>, Expr)>,
    pub j_lines: Vec<(Spanned<u8>, Expr)>,
    pub omega: Option<Expr>,
    pub metric: Option<MetricDecl>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MetricDecl {
    Orthonormal,
    Gram(Expr),
}

/// A signed sum of terms. All terms of one expression use the same [`Gens`]
/// shape; the parser enforces it per statement kind.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub negative: bool,
    /// `None` is the implicit coefficient 1.
    pub coeff: Option<Coeff>,
    pub gens: Gens,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Coeff {
    Rat(Rational),
    Param(Spanned<String>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Gens {
    /// A single generator, `e3`.
    One(Spanned<u8>),
    /// A wedge monomial, `e1^e3`.
    Wedge(Spanned<u8>, Spanned<u8>),
    /// A symmetric product entry of a metric, `e1*e1`.
    Sym(Spanned<u8>, Spanned<u8>),
}

/// Syntax or post-parse validation failure, with position and (for pure
/// syntax errors) the set of tokens that would have been accepted.
#[derive(Clone, Debug)]
pub struct ParseError {
    pub span: Span,
    pub message: String,
    pub expected: Vec<&'static str>,
    pub found: Option<String>,
}

impl ParseError {
    pub(crate) fn semantic(span: Span, message: impl Into<String>) -> Self {
        ParseError { span, message: message.into(), expected: Vec::new(), found: None }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)?;
        if !self.expected.is_empty() {
            let expected: Vec<String> =
                self.expected.iter().map(|t| format!("`{t}`")).collect();
            write!(f, " (expected {}", expected.join(" | "))?;
            if let Some(found) = &self.found {
                write!(f, "; found {found}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}
