use akc_core::Rational;
use num::BigInt;

use super::lexer::{lex, Token, TokenKind};
use super::{Coeff, Document, Expr, Gens, MetricDecl, ParseError, Span, Spanned, Term};

const STMT_KEYWORDS: [&str; 7] = ["dim", "param", "d", "J", "omega", "metric", "}"];

/// Maximum dimension accepted by the frontend; the exterior algebra has
/// 2^dim basis forms, so exhaustive enumeration needs a small bound.
const MAX_DIM: u8 = 16;

pub fn parse(src: &str) -> Result<Document, ParseError> {
    let tokens = lex(src)?;
    let mut parser = Parser { tokens, pos: 0, eof: eof_span(src) };
    let doc = parser.document()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError {
            span: tok.span,
            message: "trailing input after the closing `}`".into(),
            expected: vec!["end of input"],
            found: Some(tok.kind.describe()),
        });
    }
    validate(&doc)?;
    Ok(doc)
}

fn eof_span(src: &str) -> Span {
    let line = 1 + src.chars().filter(|&c| c == '\n').count() as u32;
    let col = 1 + src.chars().rev().take_while(|&c| c != '\n').count() as u32;
    Span { line, col }
}

#[derive(Clone, Copy)]
enum GensKind {
    One,
    Wedge,
    Sym,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: Span,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).cloned();
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        let (span, found) = match self.peek() {
            Some(tok) => (tok.span, Some(tok.kind.describe())),
            None => (self.eof, Some("end of input".into())),
        };
        ParseError { span, message: "syntax error".into(), expected, found }
    }

    fn expect(&mut self, kind: TokenKind, label: &'static str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(tok) if tok.kind == kind => Ok(self.advance().unwrap()),
            _ => Err(self.unexpected(vec![label])),
        }
    }

    fn expect_keyword(&mut self, word: &'static str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(tok) if tok.kind == TokenKind::Ident(word.to_string()) => {
                Ok(self.advance().unwrap())
            }
            _ => Err(self.unexpected(vec![word])),
        }
    }

    fn ident(&mut self, label: &'static str) -> Result<(String, Span), ParseError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(word), span }) => {
                let out = (word.clone(), *span);
                self.advance();
                Ok(out)
            }
            _ => Err(self.unexpected(vec![label])),
        }
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        self.expect_keyword("algebra")?;
        let (name, name_span) = self.ident("algebra name")?;
        self.expect(TokenKind::LBrace, "{")?;

        let mut dim: Option<Spanned<u8>> = None;
        let mut params: Vec<(Spanned<String>, Rational)> = Vec::new();
        let mut d_equations: Vec<(Spanned<u8>, Expr)> = Vec::new();
        let mut j_lines: Vec<(Spanned<u8>, Expr)> = Vec::new();
        let mut omega: Option<Expr> = None;
        let mut metric: Option<MetricDecl> = None;

        loop {
            match self.peek() {
                Some(Token { kind: TokenKind::RBrace, .. }) => {
                    self.advance();
                    break;
                }
                Some(Token { kind: TokenKind::Ident(word), span }) => {
                    let span = *span;
                    match word.as_str() {
                        "dim" => {
                            if dim.is_some() {
                                return Err(ParseError::semantic(
                                    span,
                                    "duplicate `dim` statement",
                                ));
                            }
                            self.advance();
                            self.expect(TokenKind::Eq, "=")?;
                            dim = Some(self.small_int()?);
                            self.expect(TokenKind::Semi, ";")?;
                        }
                        "param" => {
                            self.advance();
                            let (pname, pspan) = self.ident("parameter name")?;
                            if looks_like_gen(&pname) {
                                return Err(ParseError::semantic(
                                    pspan,
                                    format!(
                                        "parameter name `{pname}` would shadow a generator"
                                    ),
                                ));
                            }
                            if params.iter().any(|(n, _)| n.node == pname) {
                                return Err(ParseError::semantic(
                                    pspan,
                                    format!("duplicate parameter `{pname}`"),
                                ));
                            }
                            self.expect(TokenKind::Eq, "=")?;
                            let value = self.rational()?;
                            self.expect(TokenKind::Semi, ";")?;
                            params.push((Spanned { node: pname, span: pspan }, value));
                        }
                        "d" => {
                            self.advance();
                            let gen = self.generator()?;
                            if d_equations.iter().any(|(g, _)| g.node == gen.node) {
                                return Err(ParseError::semantic(
                                    gen.span,
                                    format!("duplicate d-equation for `e{}`", gen.node),
                                ));
                            }
                            self.expect(TokenKind::Eq, "=")?;
                            let rhs = self.expr(GensKind::Wedge)?;
                            self.expect(TokenKind::Semi, ";")?;
                            d_equations.push((gen, rhs));
                        }
                        "J" => {
                            self.advance();
                            let gen = self.generator()?;
                            if j_lines.iter().any(|(g, _)| g.node == gen.node) {
                                return Err(ParseError::semantic(
                                    gen.span,
                                    format!("duplicate J-line for `e{}`", gen.node),
                                ));
                            }
                            self.expect(TokenKind::Eq, "=")?;
                            let rhs = self.expr(GensKind::One)?;
                            self.expect(TokenKind::Semi, ";")?;
                            j_lines.push((gen, rhs));
                        }
                        "omega" => {
                            if omega.is_some() {
                                return Err(ParseError::semantic(
                                    span,
                                    "duplicate `omega` statement",
                                ));
                            }
                            self.advance();
                            self.expect(TokenKind::Eq, "=")?;
                            omega = Some(self.expr(GensKind::Wedge)?);
                            self.expect(TokenKind::Semi, ";")?;
                        }
                        "metric" => {
                            if metric.is_some() {
                                return Err(ParseError::semantic(
                                    span,
                                    "duplicate `metric` statement",
                                ));
                            }
                            self.advance();
                            self.expect(TokenKind::Eq, "=")?;
                            let decl = match self.peek() {
                                Some(Token { kind: TokenKind::Ident(w), .. })
                                    if w == "orthonormal" =>
                                {
                                    self.advance();
                                    MetricDecl::Orthonormal
                                }
                                _ => MetricDecl::Gram(self.expr(GensKind::Sym)?),
                            };
                            self.expect(TokenKind::Semi, ";")?;
                            metric = Some(decl);
                        }
                        _ => return Err(self.unexpected(STMT_KEYWORDS.to_vec())),
                    }
                }
                _ => return Err(self.unexpected(STMT_KEYWORDS.to_vec())),
            }
        }

        let dim = dim.ok_or_else(|| {
            ParseError::semantic(name_span, format!("algebra `{name}` has no `dim` statement"))
        })?;
        Ok(Document { name, dim, params, d_equations, j_lines, omega, metric })
    }

    /// INT that must fit a u8 (dimensions).
    fn small_int(&mut self) -> Result<Spanned<u8>, ParseError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Int(digits), span }) => {
                let span = *span;
                let value: u8 = digits.parse().map_err(|_| {
                    ParseError::semantic(span, format!("`{digits}` is too large"))
                })?;
                self.advance();
                Ok(Spanned { node: value, span })
            }
            _ => Err(self.unexpected(vec!["integer"])),
        }
    }

    /// GEN := "e" INT, lexed as a single identifier.
    fn generator(&mut self) -> Result<Spanned<u8>, ParseError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(word), span }) => {
                let span = *span;
                let word = word.clone();
                if !looks_like_gen(&word) {
                    return Err(self.unexpected(vec!["generator"]));
                }
                let index: u8 = word[1..].parse().map_err(|_| {
                    ParseError::semantic(
                        span,
                        format!("generator index out of range: `{word}`"),
                    )
                })?;
                self.advance();
                Ok(Spanned { node: index, span })
            }
            _ => Err(self.unexpected(vec!["generator"])),
        }
    }

    /// RAT := INT ("/" INT)?, always nonnegative; signs live on terms.
    fn rational(&mut self) -> Result<Rational, ParseError> {
        match self.peek() {
            Some(Token { kind: TokenKind::Int(digits), .. }) => {
                let numer: BigInt = digits.parse().expect("lexer produced digits");
                self.advance();
                if matches!(self.peek(), Some(Token { kind: TokenKind::Slash, .. })) {
                    self.advance();
                    match self.peek() {
                        Some(Token { kind: TokenKind::Int(d), span: dspan }) => {
                            let dspan = *dspan;
                            let denom: BigInt = d.parse().expect("lexer produced digits");
                            self.advance();
                            if denom == BigInt::from(0) {
                                return Err(ParseError::semantic(
                                    dspan,
                                    "zero denominator in rational literal",
                                ));
                            }
                            Ok(Rational::new(numer, denom))
                        }
                        _ => Err(self.unexpected(vec!["integer"])),
                    }
                } else {
                    Ok(Rational::from_integer(numer))
                }
            }
            _ => Err(self.unexpected(vec!["rational"])),
        }
    }

    /// Signed sum of terms of the given shape.
    fn expr(&mut self, kind: GensKind) -> Result<Expr, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek().map(|t| &t.kind) {
            Some(TokenKind::Minus) => {
                self.advance();
                negative = true;
            }
            Some(TokenKind::Plus) => {
                self.advance();
            }
            _ => {}
        }
        loop {
            terms.push(self.term(kind, negative)?);
            match self.peek().map(|t| &t.kind) {
                Some(TokenKind::Plus) => {
                    self.advance();
                    negative = false;
                }
                Some(TokenKind::Minus) => {
                    self.advance();
                    negative = true;
                }
                _ => break,
            }
        }
        Ok(Expr { terms })
    }

    /// `RAT? GEN`, `RAT? GEN ^ GEN` or `RAT? GEN * GEN`; a declared
    /// parameter name may stand for the RAT.
    fn term(&mut self, kind: GensKind, negative: bool) -> Result<Term, ParseError> {
        let coeff = match self.peek() {
            Some(Token { kind: TokenKind::Int(_), .. }) => {
                let value = self.rational()?;
                // canonical form: implicit 1 is represented as no coefficient
                if value == Rational::from_integer(1.into()) {
                    None
                } else {
                    Some(Coeff::Rat(value))
                }
            }
            Some(Token { kind: TokenKind::Ident(word), span })
                if !looks_like_gen(word) =>
            {
                let spanned = Spanned { node: word.clone(), span: *span };
                self.advance();
                Some(Coeff::Param(spanned))
            }
            _ => None,
        };
        let first = self.generator()?;
        let gens = match kind {
            GensKind::One => Gens::One(first),
            GensKind::Wedge => {
                self.expect(TokenKind::Caret, "^")?;
                Gens::Wedge(first, self.generator()?)
            }
            GensKind::Sym => {
                self.expect(TokenKind::Star, "*")?;
                Gens::Sym(first, self.generator()?)
            }
        };
        Ok(Term { negative, coeff, gens })
    }
}

/// `e` followed by digits: syntactically a generator (possibly out of
/// range), never a parameter name.
fn looks_like_gen(word: &str) -> bool {
    word.strip_prefix('e')
        .is_some_and(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
}

/// Post-parse checks: dimension bounds and index ranges.
fn validate(doc: &Document) -> Result<(), ParseError> {
    let dim = doc.dim.node;
    if dim == 0 || dim > MAX_DIM {
        return Err(ParseError::semantic(
            doc.dim.span,
            format!("dimension must be between 1 and {MAX_DIM}"),
        ));
    }
    let check = |gen: &Spanned<u8>| -> Result<(), ParseError> {
        if gen.node == 0 || gen.node > dim {
            return Err(ParseError::semantic(
                gen.span,
                format!("generator index out of range: `e{}` with dim = {dim}", gen.node),
            ));
        }
        Ok(())
    };
    let check_expr = |expr: &Expr| -> Result<(), ParseError> {
        for term in &expr.terms {
            match &term.gens {
                Gens::One(a) => check(a)?,
                Gens::Wedge(a, b) | Gens::Sym(a, b) => {
                    check(a)?;
                    check(b)?;
                }
            }
        }
        Ok(())
    };
    for (gen, rhs) in &doc.d_equations {
        check(gen)?;
        check_expr(rhs)?;
    }
    for (gen, rhs) in &doc.j_lines {
        check(gen)?;
        check_expr(rhs)?;
    }
    if let Some(omega) = &doc.omega {
        check_expr(omega)?;
    }
    if let Some(MetricDecl::Gram(gram)) = &doc.metric {
        check_expr(gram)?;
    }
    Ok(())
}
