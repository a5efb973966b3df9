//! Text formats: field descriptors, polynomials and variety files.
//!
//! ```text
//! field: Fp(2)(a)
//! vars: x y z
//! gens: x^2 + y*z^2 - a
//! codim: 1
//! ```
//!
//! `gens` holds comma-separated polynomials and may be repeated; `codim` is
//! optional; `#` starts a comment.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::field::{Field, FieldDescriptor};
use crate::poly::{Polynomial, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str, line: usize, column: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = column + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digits")),
                line,
                column: col,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line,
                column: col,
            });
        } else if "+-*/^()[],".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line,
                column: col,
            });
            i += 1;
        } else {
            return Err(ParseError {
                line,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: column + chars.len(),
    });
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a Arc<VariableContext>,
    field: &'a F,
}

impl<'a, F: Field> Parser<'a, F> {
    fn new(toks: Vec<Token>, ctx: &'a Arc<VariableContext>, field: &'a F) -> Self {
        Parser { toks, pos: 0, ctx, field }
    }

    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, t: &Token, message: impl Into<String>) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.bump();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(self.error_at(&t, format!("expected `{c}`, found {}", describe(&t.tok))))
        }
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    /// expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let negate_first = if self.is_sym('-') {
            self.bump();
            true
        } else {
            if self.is_sym('+') {
                self.bump();
            }
            false
        };
        let first = self.term()?;
        let mut acc = if negate_first { -&first } else { first };
        loop {
            if self.is_sym('+') {
                self.bump();
                acc = &acc + &self.term()?;
            } else if self.is_sym('-') {
                self.bump();
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    /// term := factor (('*'|'/') factor)*
    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.is_sym('*') {
                self.bump();
                acc = &acc * &self.factor()?;
            } else if self.is_sym('/') {
                self.bump();
                let at = self.peek().clone();
                let d = self.factor()?;
                if !d.is_constant() {
                    return Err(self.error_at(&at, "division by a non-constant polynomial"));
                }
                let inv = self
                    .field
                    .inv(&d.constant_term())
                    .map_err(|e| self.error_at(&at, e.to_string()))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    /// factor := atom ['^' int]
    fn factor(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.atom()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(ref n) => {
                let e: u32 = n
                    .try_into()
                    .map_err(|_| self.error_at(&t, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(self.error_at(&t, format!("expected an exponent, found {}", describe(&t.tok)))),
        }
    }

    /// atom := int | ident | '(' expr ')' | '-' atom
    fn atom(&mut self) -> Result<Polynomial<F>, ParseError> {
        let t = self.bump();
        match &t.tok {
            Tok::Int(n) => Ok(Polynomial::constant(self.ctx, self.field, self.field.from_bigint(n))),
            Tok::Ident(name) => {
                let var = self.ctx.index_of(name);
                let generator = self.field.generator(name);
                match (var, generator) {
                    (Some(_), Some(_)) => Err(self.error_at(
                        &t,
                        format!("`{name}` is both a variable and a field generator"),
                    )),
                    (Some(v), None) => Ok(Polynomial::variable(self.ctx, self.field, v)),
                    (None, Some(g)) => Ok(Polynomial::constant(self.ctx, self.field, g)),
                    (None, None) => Err(self.error_at(&t, format!("unknown identifier `{name}`"))),
                }
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Tok::Sym('-') => Ok(-&self.factor()?),
            other => Err(self.error_at(&t, format!("expected a term, found {}", describe(other)))),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        let t = self.bump();
        if t.tok == Tok::End {
            Ok(())
        } else {
            Err(self.error_at(&t, format!("unexpected {}", describe(&t.tok))))
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

fn parse_poly_at<F: Field>(
    text: &str,
    ctx: &Arc<VariableContext>,
    field: &F,
    line: usize,
    column: usize,
) -> Result<Polynomial<F>, ParseError> {
    let mut p = Parser::new(lex(text, line, column)?, ctx, field);
    let f = p.expr()?;
    p.finish()?;
    Ok(f)
}

/// Parses a polynomial; identifiers are context variables or field generators.
pub fn parse_polynomial<F: Field>(
    text: &str,
    ctx: &Arc<VariableContext>,
    field: &F,
) -> Result<Polynomial<F>, ParseError> {
    parse_poly_at(text, ctx, field, 1, 1)
}

/// Parses a constant, such as `3/2` or `a + 1`.
pub fn parse_element<F: Field>(text: &str, field: &F) -> Result<F::Element, ParseError> {
    let empty = VariableContext::new::<&str>(&[]).expect("empty context");
    Ok(parse_polynomial(text, &empty, field)?.constant_term())
}

fn parse_field_at(text: &str, line: usize, column: usize) -> Result<FieldDescriptor, ParseError> {
    let toks = lex(text, line, column)?;
    let dummy = VariableContext::new::<&str>(&[]).expect("empty context");
    let q = FieldDescriptor::rationals();
    let mut p = Parser::new(toks, &dummy, &q);
    let t = p.bump();
    let field_err = |t: &Token, e: crate::field::FieldError| ParseError {
        line: t.line,
        column: t.column,
        message: e.to_string(),
    };
    let mut field = match &t.tok {
        Tok::Ident(s) if s == "QQ" => FieldDescriptor::rationals(),
        Tok::Ident(s) if s == "Fp" => {
            p.expect_sym('(')?;
            let n = p.bump();
            let Tok::Int(ref v) = n.tok else {
                return Err(p.error_at(&n, format!("expected a prime, found {}", describe(&n.tok))));
            };
            let v: u64 = v.try_into().map_err(|_| p.error_at(&n, "characteristic too large"))?;
            p.expect_sym(')')?;
            FieldDescriptor::prime(v).map_err(|e| field_err(&n, e))?
        }
        other => return Err(p.error_at(&t, format!("expected `QQ` or `Fp`, found {}", describe(other)))),
    };
    loop {
        let t = p.bump();
        match t.tok {
            Tok::End => return Ok(field),
            Tok::Sym('(') => {
                let g = p.bump();
                let Tok::Ident(ref name) = g.tok else {
                    return Err(p.error_at(&g, "expected a generator name"));
                };
                p.expect_sym(')')?;
                field = FieldDescriptor::rational_functions(&field, name).map_err(|e| field_err(&g, e))?;
            }
            Tok::Sym('[') => {
                let g = p.bump();
                let Tok::Ident(ref name) = g.tok else {
                    return Err(p.error_at(&g, "expected a generator name"));
                };
                p.expect_sym(']')?;
                p.expect_sym('/')?;
                let open = p.peek().clone();
                p.expect_sym('(')?;
                // The modulus is a polynomial in the new generator over the
                // field built so far.
                let start = p.pos;
                let mut depth = 1;
                while depth > 0 {
                    match p.bump().tok {
                        Tok::Sym('(') => depth += 1,
                        Tok::Sym(')') => depth -= 1,
                        Tok::End => return Err(p.error_at(&open, "unclosed `(`")),
                        _ => {}
                    }
                }
                let mut inner: Vec<Token> = p.toks[start..p.pos - 1].to_vec();
                inner.push(Token {
                    tok: Tok::End,
                    ..p.toks[p.pos - 1].clone()
                });
                let gctx = VariableContext::new(&[name.as_str()]).map_err(|e| p.error_at(&g, e.to_string()))?;
                let mut sub = Parser::new(inner, &gctx, &field);
                let m = sub.expr()?;
                sub.finish()?;
                let deg = m.degree_in(0) as usize;
                let mut dense = vec![field.zero(); deg + 1];
                for (mono, c) in m.terms() {
                    dense[mono[0] as usize] = c.clone();
                }
                field = FieldDescriptor::simple_extension(&field, name, dense).map_err(|e| field_err(&g, e))?;
            }
            ref other => return Err(p.error_at(&t, format!("unexpected {}", describe(other)))),
        }
    }
}

/// Parses `QQ`, `Fp(p)`, and towers built with `(g)` and `[g]/(m)`.
pub fn parse_field(text: &str) -> Result<FieldDescriptor, ParseError> {
    parse_field_at(text, 1, 1)
}

/// A parsed variety file.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietySpec {
    pub field: FieldDescriptor,
    pub ctx: Arc<VariableContext>,
    pub gens: Vec<Polynomial<FieldDescriptor>>,
    pub codim: Option<usize>,
}

impl VarietySpec {
    pub fn new(
        field: FieldDescriptor,
        ctx: Arc<VariableContext>,
        gens: Vec<Polynomial<FieldDescriptor>>,
        codim: Option<usize>,
    ) -> Self {
        VarietySpec { field, ctx, gens, codim }
    }

    /// Parses a polynomial in this variety's ring.
    pub fn polynomial(&self, text: &str) -> Result<Polynomial<FieldDescriptor>, ParseError> {
        parse_polynomial(text, &self.ctx, &self.field)
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field.descriptor_text())?;
        writeln!(f, "vars: {}", self.ctx.names().join(" "))?;
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        writeln!(f, "gens: {}", gens.join(", "))?;
        if let Some(c) = self.codim {
            writeln!(f, "codim: {c}")?;
        }
        Ok(())
    }
}

/// Splits on top-level commas, keeping column offsets.
fn split_commas(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

fn char_column(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

fn check_variables(names: &[String], field: &FieldDescriptor) -> Result<(), String> {
    let generators = field.generator_names();
    for (i, a) in names.iter().enumerate() {
        if !crate::poly::is_identifier(a) {
            return Err(format!("invalid variable name `{a}`"));
        }
        if names[..i].contains(a) {
            return Err(format!("duplicate variable `{a}`"));
        }
        if generators.contains(a) {
            return Err(format!("`{a}` is both a variable and a field generator"));
        }
        for b in names.iter().chain(&generators) {
            if b != a && b.len() > a.len() && b.starts_with(a.as_str()) && b[a.len()..].chars().all(|c| c.is_ascii_digit()) {
                return Err(format!("jet variables of `{a}` would collide with `{b}`"));
            }
        }
    }
    Ok(())
}

/// Parses a variety file.
pub fn parse_variety(text: &str) -> Result<VarietySpec, ParseError> {
    let mut field: Option<FieldDescriptor> = None;
    let mut ctx: Option<Arc<VariableContext>> = None;
    let mut gens = Vec::new();
    let mut codim = None;
    let mut last_line = 1;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let err = |column: usize, message: String| ParseError {
            line: line_no,
            column,
            message,
        };
        let Some(colon) = line.find(':') else {
            return Err(err(1, "expected `key: value`".into()));
        };
        let key = line[..colon].trim();
        let value = &line[colon + 1..];
        let value_col = char_column(line, colon + 1);
        match key {
            "field" => {
                if field.is_some() {
                    return Err(err(1, "duplicate `field`".into()));
                }
                field = Some(parse_field_at(value, line_no, value_col)?);
            }
            "vars" => {
                let Some(fd) = &field else {
                    return Err(err(1, "`vars` must follow `field`".into()));
                };
                if ctx.is_some() {
                    return Err(err(1, "duplicate `vars`".into()));
                }
                let names: Vec<String> = value
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(str::to_string)
                    .collect();
                check_variables(&names, fd).map_err(|m| err(value_col, m))?;
                ctx = Some(VariableContext::new(&names).map_err(|e| err(value_col, e.to_string()))?);
            }
            "gens" => {
                let (Some(fd), Some(c)) = (&field, &ctx) else {
                    return Err(err(1, "`gens` must follow `field` and `vars`".into()));
                };
                if value.trim().is_empty() {
                    continue;
                }
                for (offset, piece) in split_commas(value) {
                    let column = char_column(line, colon + 1 + offset);
                    let g = parse_poly_at(piece, c, fd, line_no, column)?;
                    gens.push(g);
                }
            }
            "codim" => {
                let v: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| err(value_col, format!("invalid codimension `{}`", value.trim())))?;
                codim = Some(v);
            }
            other => return Err(err(1, format!("unknown key `{other}`"))),
        }
    }
    let missing = |what: &str| ParseError {
        line: last_line,
        column: 1,
        message: format!("missing `{what}`"),
    };
    let field = field.ok_or_else(|| missing("field"))?;
    let ctx = ctx.ok_or_else(|| missing("vars"))?;
    Ok(VarietySpec { field, ctx, gens, codim })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_grammar_round_trips() {
        for text in ["QQ", "Fp(5)", "Fp(2)(a)", "Fp(2)(a)[x0]/(x0^2 + a)", "QQ[i]/(i^2 + 1)"] {
            let f = parse_field(text).unwrap();
            assert_eq!(f.descriptor_text(), text);
        }
        assert_eq!(parse_field("Fp(2)(a)[x0]/(x0^2-a)").unwrap().descriptor_text(), "Fp(2)(a)[x0]/(x0^2 + a)");
        assert!(parse_field("Fp(6)").is_err());
        assert!(parse_field("Fp(5)[u]/(u^2 - 1)").is_err());
    }

    #[test]
    fn polynomial_round_trip() {
        let spec = parse_variety("field: Fp(2)(a)\nvars: x y z\ngens: x^2 + y*z^2 - a").unwrap();
        assert_eq!(spec.gens[0].to_string(), "y*z^2 + x^2 + a");
        let q = parse_field("QQ").unwrap();
        let ctx = VariableContext::new(&["x1", "y"]).unwrap();
        for text in ["(3/2)*x1", "-x1^2*y + (1/3)*y - 7", "x1 - (-2/5)"] {
            let p = parse_polynomial(text, &ctx, &q).unwrap();
            let again = parse_polynomial(&p.to_string(), &ctx, &q).unwrap();
            assert_eq!(p, again);
        }
        assert_eq!(parse_polynomial("(3/2)*x1", &ctx, &q).unwrap().to_string(), "(3/2)*x1");
    }

    #[test]
    fn variety_errors_have_locations() {
        let e = parse_variety("field: QQ\nvars: x\ngens: x^2 +").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_variety("field: QQ\nvars: x x1\ngens: x").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_variety("field: Fp(2)(a)\nvars: a\ngens: a").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_variety("field: QQ\nvars: x\ngens: x / x").unwrap_err();
        assert_eq!((e.line, e.column), (3, 11));
    }

    #[test]
    fn variety_round_trip() {
        let text = "# cusp\nfield: QQ\nvars: x y\ngens: y^2 - x^3, x*y\ncodim: 1\n";
        let spec = parse_variety(text).unwrap();
        assert_eq!(parse_variety(&spec.to_string()).unwrap(), spec);
        assert_eq!(spec.codim, Some(1));
    }
}
