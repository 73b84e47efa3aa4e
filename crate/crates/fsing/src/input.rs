//! The `.fring` input format: a small line-oriented description of a
//! weighted quotient ring with optional named elements.
//!
//! ```text
//! char 5
//! vars u:2 v:2 y:1 z:2
//! order grevlex
//! ideal
//!   u*v
//!   u*z
//!   z*(v - y^2)
//! element y = y
//! ```
//!
//! Expressions use `+ - * ^`, integer literals and parentheses with the
//! usual precedence. Generators (and declared elements) must be
//! homogeneous under the declared weights. `#` starts a comment.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct RingInput {
    pub ring: Arc<PolyRing>,
    pub ideal: Ideal,
    /// Declared named elements, in file order.
    pub elements: Vec<(String, Polynomial)>,
    /// Generator expressions as written (echoed into reports).
    pub ideal_strings: Vec<String>,
}

impl RingInput {
    pub fn element(&self, name: &str) -> Option<&Polynomial> {
        self.elements.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

pub fn parse_input(text: &str) -> Result<RingInput> {
    let mut characteristic: Option<u64> = None;
    let mut vars: Vec<(String, u32)> = Vec::new();
    let mut order_seen = false;
    let mut ideal_exprs: Vec<(usize, String)> = Vec::new();
    let mut element_lines: Vec<(usize, String, String)> = Vec::new();

    let mut lines = text.lines().enumerate().peekable();
    while let Some((idx, raw)) = lines.next() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            return Err(parse_err(lineno, 1, "unexpected indented line outside an ideal block"));
        }
        let mut parts = trimmed.splitn(2, char::is_whitespace);
        let keyword = parts.next().unwrap();
        let rest = parts.next().unwrap_or("").trim();
        match keyword {
            "char" => {
                let p: u64 = rest
                    .parse()
                    .map_err(|_| parse_err(lineno, 6, "expected a prime number after 'char'"))?;
                if !crate::field::is_prime(p) {
                    return Err(Error::NonPrimeCharacteristic(p));
                }
                characteristic = Some(p);
            }
            "vars" => {
                for decl in rest.split_whitespace() {
                    let Some((name, w)) = decl.split_once(':') else {
                        return Err(parse_err(lineno, 1, format!("expected name:weight, got {:?}", decl)));
                    };
                    let weight: u32 = w
                        .parse()
                        .map_err(|_| parse_err(lineno, 1, format!("bad weight in {:?}", decl)))?;
                    if weight == 0 {
                        return Err(parse_err(lineno, 1, "weights must be positive"));
                    }
                    if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                        || !name.starts_with(|c: char| c.is_ascii_alphabetic())
                    {
                        return Err(parse_err(lineno, 1, format!("bad variable name {:?}", name)));
                    }
                    if vars.iter().any(|(n, _)| n == name) {
                        return Err(parse_err(lineno, 1, format!("duplicate variable {:?}", name)));
                    }
                    vars.push((name.to_string(), weight));
                }
            }
            "order" => {
                if rest != "grevlex" {
                    return Err(parse_err(lineno, 7, format!("unsupported order {:?}", rest)));
                }
                order_seen = true;
            }
            "ideal" => {
                if !rest.is_empty() {
                    return Err(parse_err(lineno, 7, "generators go on indented lines below 'ideal'"));
                }
                while let Some((jdx, peeked)) = lines.peek() {
                    let pline = strip_comment(peeked);
                    if pline.trim().is_empty() {
                        lines.next();
                        continue;
                    }
                    if !pline.starts_with(char::is_whitespace) {
                        break;
                    }
                    ideal_exprs.push((jdx + 1, pline.trim().to_string()));
                    lines.next();
                }
            }
            "element" => {
                let Some((name, expr)) = rest.split_once('=') else {
                    return Err(parse_err(lineno, 9, "expected 'element <name> = <expr>'"));
                };
                element_lines.push((lineno, name.trim().to_string(), expr.trim().to_string()));
            }
            other => {
                return Err(parse_err(lineno, 1, format!("unknown directive {:?}", other)));
            }
        }
    }

    let p = characteristic.ok_or_else(|| parse_err(1, 1, "missing 'char <p>' line"))?;
    if vars.is_empty() {
        return Err(parse_err(1, 1, "missing 'vars' declaration"));
    }
    if !order_seen {
        return Err(parse_err(1, 1, "missing 'order grevlex' line"));
    }
    let field = PrimeField::new(p)?;
    let names: Vec<String> = vars.iter().map(|(n, _)| n.clone()).collect();
    let weights: Vec<u32> = vars.iter().map(|(_, w)| *w).collect();
    let ring = Arc::new(PolyRing::new(field, names, weights)?);

    let mut gens = Vec::new();
    let mut ideal_strings = Vec::new();
    for (lineno, expr) in &ideal_exprs {
        let poly = parse_expression(expr, &ring, *lineno)?;
        if !poly.is_homogeneous(&ring) {
            return Err(Error::NonHomogeneous(expr.clone()));
        }
        ideal_strings.push(expr.clone());
        gens.push(poly);
    }
    let ideal = Ideal::new(ring.clone(), gens)?;

    let mut elements = Vec::new();
    for (lineno, name, expr) in &element_lines {
        let poly = parse_expression(expr, &ring, *lineno)?;
        if !poly.is_homogeneous(&ring) {
            return Err(Error::NonHomogeneous(expr.clone()));
        }
        elements.push((name.clone(), poly));
    }
    Ok(RingInput { ring, ideal, elements, ideal_strings })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Canonical printer; `parse(print(input))` reproduces the presentation.
pub fn print_input(input: &RingInput) -> String {
    let ring = &input.ring;
    let mut out = String::new();
    out.push_str(&format!("char {}\n", ring.p()));
    let decls: Vec<String> = ring
        .vars()
        .iter()
        .zip(ring.weights())
        .map(|(n, w)| format!("{}:{}", n, w))
        .collect();
    out.push_str(&format!("vars {}\n", decls.join(" ")));
    out.push_str("order grevlex\n");
    out.push_str("ideal\n");
    for g in input.ideal.gens() {
        out.push_str(&format!("  {}\n", ring.poly_string(g)));
    }
    for (name, poly) in &input.elements {
        out.push_str(&format!("element {} = {}\n", name, ring.poly_string(poly)));
    }
    out
}

// -- expression parsing ------------------------------------------------------

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    src: &'a str,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer { chars: src.chars().collect(), pos: 0, line, src }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn next_tok(&mut self) -> Result<Tok> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.chars.len() {
            return Ok(Tok::End);
        }
        let c = self.chars[self.pos];
        self.pos += 1;
        Ok(match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let mut v = d.to_digit(10).unwrap() as u64;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|x| x.checked_add(self.chars[self.pos].to_digit(10).unwrap() as u64))
                        .ok_or_else(|| parse_err(self.line, self.col(), "integer literal overflow"))?;
                    self.pos += 1;
                }
                Tok::Int(v)
            }
            a if a.is_ascii_alphabetic() => {
                let mut s = a.to_string();
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    s.push(self.chars[self.pos]);
                    self.pos += 1;
                }
                Tok::Ident(s)
            }
            other => {
                return Err(parse_err(
                    self.line,
                    self.col().saturating_sub(1),
                    format!("unexpected character {:?} in {:?}", other, self.src),
                ))
            }
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: Tok,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, ring: &'a PolyRing, line: usize) -> Result<Self> {
        let mut lexer = Lexer::new(src, line);
        let current = lexer.next_tok()?;
        Ok(Parser { lexer, current, ring })
    }

    fn bump(&mut self) -> Result<Tok> {
        let next = self.lexer.next_tok()?;
        Ok(std::mem::replace(&mut self.current, next))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        parse_err(self.lexer.line, self.lexer.col(), msg)
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut acc = self.term()?;
        loop {
            match self.current {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc.add(&self.term()?, field);
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc.sub(&self.term()?, field);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut acc = self.unary()?;
        while self.current == Tok::Star {
            self.bump()?;
            acc = acc.mul(&self.unary()?, field)?;
        }
        Ok(acc)
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Polynomial> {
        if self.current == Tok::Minus {
            self.bump()?;
            return Ok(self.unary()?.neg(self.ring.field()));
        }
        self.power()
    }

    // power := atom ('^' int)?
    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.current == Tok::Caret {
            self.bump()?;
            let Tok::Int(e) = self.bump()? else {
                return Err(self.err("expected an integer exponent after '^'"));
            };
            return base.pow(e, self.ring.field(), self.ring.n());
        }
        Ok(base)
    }

    // atom := ident | int | '(' expr ')'
    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump()? {
            Tok::Ident(name) => {
                let Some(i) = self.ring.var_index(&name) else {
                    return Err(self.err(format!("unknown variable {:?}", name)));
                };
                Ok(Polynomial::variable(self.ring.n(), i))
            }
            Tok::Int(v) => Ok(Polynomial::constant(
                self.ring.n(),
                self.ring.field(),
                (v % self.ring.p() as u64) as u32,
            )),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.bump()? != Tok::RParen {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            other => Err(self.err(format!("unexpected token {:?}", other))),
        }
    }
}

pub fn parse_expression(src: &str, ring: &PolyRing, line: usize) -> Result<Polynomial> {
    let mut p = Parser::new(src, ring, line)?;
    let poly = p.expr()?;
    if p.current != Tok::End {
        return Err(p.err(format!("trailing input starting at {:?}", p.current)));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_file() {
        let text = "char 5\nvars x:1 y:1\norder grevlex\nideal\n  x*y\n";
        let input = parse_input(text).unwrap();
        assert_eq!(input.ring.p(), 5);
        assert_eq!(input.ideal.gens().len(), 1);
        let f = input.ring.field();
        let expect = Polynomial::variable(2, 0).mul(&Polynomial::variable(2, 1), f).unwrap();
        assert_eq!(input.ideal.gens()[0], expect);
    }

    #[test]
    fn parses_fedder_singh_file() {
        let text = "\
# deformation fixture
char 5
vars U:2 V:2 Y:1 Z:2
order grevlex
ideal
  U*V
  U*Z
  Z*(V - Y^2)
element y = Y
";
        let input = parse_input(text).unwrap();
        assert_eq!(input.ring.n(), 4);
        assert_eq!(input.ideal.gens().len(), 3);
        assert!(input.element("y").is_some());
        // round trip
        let printed = print_input(&input);
        let again = parse_input(&printed).unwrap();
        assert_eq!(again.ideal.gens(), input.ideal.gens());
        assert_eq!(again.elements, input.elements);
        assert_eq!(again.ring.weights(), input.ring.weights());
    }

    #[test]
    fn rejects_non_prime_characteristic() {
        let text = "char 4\nvars x:1\norder grevlex\nideal\n";
        assert!(matches!(parse_input(text), Err(Error::NonPrimeCharacteristic(4))));
    }

    #[test]
    fn rejects_inhomogeneous_generator() {
        let text = "char 5\nvars x:1 y:1\norder grevlex\nideal\n  x + y^2\n";
        assert!(matches!(parse_input(text), Err(Error::NonHomogeneous(_))));
    }

    #[test]
    fn parse_error_has_position() {
        let text = "char 5\nvars x:1 y:1\norder grevlex\nideal\n  x $ y\n";
        match parse_input(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn expression_precedence() {
        let ring = PolyRing::standard(PrimeField::new(7).unwrap(), &["x", "y"]).unwrap();
        let f = ring.field();
        let x = Polynomial::variable(2, 0);
        let y = Polynomial::variable(2, 1);
        // 2*x^2 - y*x = 2x^2 - xy
        let p = parse_expression("2*x^2 - y*x", &ring, 1).unwrap();
        let expect = x
            .mul(&x, f)
            .unwrap()
            .scale(2, f)
            .sub(&y.mul(&x, f).unwrap(), f);
        assert_eq!(p, expect);
        // unary minus and parens
        let q = parse_expression("-(x - y)^2", &ring, 1).unwrap();
        let diff = x.sub(&y, f);
        assert_eq!(q, diff.mul(&diff, f).unwrap().neg(f));
    }
}
