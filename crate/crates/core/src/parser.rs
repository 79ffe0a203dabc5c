//! Concrete syntax.
//!
//! Formulae are written with `~` (negation), `&` (conjunction), `|`
//! (disjunction), `->` (implication) and `<->` (biconditional), binding in
//! that order from tightest to loosest. `&` and `|` associate to the left,
//! `->` and `<->` to the right. Letters are `[A-Za-z][A-Za-z0-9_]*`.
//!
//! The surface connectives `|`, `->` and `<->` only exist in
//! [`SurfaceFormula`]; [`desugar`] rewrites them into `~` and `&`.
//!
//! A problem file holds one signed formula per line, `T:` or `F:` followed by
//! a formula. Blank lines and lines starting with `#` are ignored, except that
//! a leading `# name: <text>` comment names the problem.

use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, Letter, Sign, SignedFormula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `position` is the 1-based column of the offending character.
    #[error("{}column {position}: expected {expected}, found {found}", line_prefix(*.line))]
    SyntaxError {
        line: Option<usize>,
        position: usize,
        expected: String,
        found: String,
    },
    #[error("line {line}: missing `T:` or `F:` sign prefix")]
    MissingSign { line: usize },
}

fn line_prefix(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}, ")).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SurfaceFormula {
    Var(Letter),
    Not(Box<SurfaceFormula>),
    And(Box<SurfaceFormula>, Box<SurfaceFormula>),
    Or(Box<SurfaceFormula>, Box<SurfaceFormula>),
    Implies(Box<SurfaceFormula>, Box<SurfaceFormula>),
    Iff(Box<SurfaceFormula>, Box<SurfaceFormula>),
}

impl SurfaceFormula {
    pub fn var(name: &str) -> Self {
        SurfaceFormula::Var(Letter::new(name).expect("invalid letter name"))
    }
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: SurfaceFormula) -> Self {
        SurfaceFormula::Not(Box::new(a))
    }
    pub fn and(a: SurfaceFormula, b: SurfaceFormula) -> Self {
        SurfaceFormula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: SurfaceFormula, b: SurfaceFormula) -> Self {
        SurfaceFormula::Or(Box::new(a), Box::new(b))
    }
    pub fn implies(a: SurfaceFormula, b: SurfaceFormula) -> Self {
        SurfaceFormula::Implies(Box::new(a), Box::new(b))
    }
    pub fn iff(a: SurfaceFormula, b: SurfaceFormula) -> Self {
        SurfaceFormula::Iff(Box::new(a), Box::new(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Not => f.write_str("`~`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Implies => f.write_str("`->`"),
            Tok::Iff => f.write_str("`<->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    /// Byte offset of the next unread character.
    pos: usize,
    peeked: Option<(Tok<'a>, usize)>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            pos: 0,
            peeked: None,
        }
    }

    fn column(&self, offset: usize) -> usize {
        self.text[..offset].chars().count() + 1
    }

    fn error(&self, offset: usize, expected: &str, found: String) -> ParseError {
        ParseError::SyntaxError {
            line: None,
            position: self.column(offset),
            expected: expected.to_string(),
            found,
        }
    }

    fn lex(&mut self) -> Result<(Tok<'a>, usize), ParseError> {
        let rest = &self.text[self.pos..];
        let trimmed = rest.trim_start();
        let start = self.pos + (rest.len() - trimmed.len());
        let mut chars = trimmed.chars();
        let (tok, len) = match chars.next() {
            None => (Tok::End, 0),
            Some('~') => (Tok::Not, 1),
            Some('&') => (Tok::And, 1),
            Some('|') => (Tok::Or, 1),
            Some('(') => (Tok::LParen, 1),
            Some(')') => (Tok::RParen, 1),
            Some('-') if trimmed.starts_with("->") => (Tok::Implies, 2),
            Some('<') if trimmed.starts_with("<->") => (Tok::Iff, 3),
            Some(c) if c.is_ascii_alphabetic() => {
                let len = trimmed
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(trimmed.len());
                (Tok::Ident(&trimmed[..len]), len)
            }
            Some(c) => {
                return Err(self.error(start, "a formula token", format!("`{c}`")));
            }
        };
        self.pos = start + len;
        Ok((tok, start))
    }

    fn peek(&mut self) -> Result<Tok<'a>, ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(self.peeked.unwrap().0)
    }

    fn next(&mut self) -> Result<(Tok<'a>, usize), ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lex(),
        }
    }

    fn iff(&mut self) -> Result<SurfaceFormula, ParseError> {
        let left = self.implies()?;
        if self.peek()? == Tok::Iff {
            self.next()?;
            let right = self.iff()?;
            return Ok(SurfaceFormula::iff(left, right));
        }
        Ok(left)
    }

    fn implies(&mut self) -> Result<SurfaceFormula, ParseError> {
        let left = self.or()?;
        if self.peek()? == Tok::Implies {
            self.next()?;
            let right = self.implies()?;
            return Ok(SurfaceFormula::implies(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<SurfaceFormula, ParseError> {
        let mut acc = self.and()?;
        while self.peek()? == Tok::Or {
            self.next()?;
            acc = SurfaceFormula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<SurfaceFormula, ParseError> {
        let mut acc = self.unary()?;
        while self.peek()? == Tok::And {
            self.next()?;
            acc = SurfaceFormula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SurfaceFormula, ParseError> {
        let (tok, at) = self.next()?;
        match tok {
            Tok::Not => Ok(SurfaceFormula::not(self.unary()?)),
            Tok::Ident(name) => Ok(SurfaceFormula::Var(
                Letter::new(name).expect("lexer only yields valid names"),
            )),
            Tok::LParen => {
                let inner = self.iff()?;
                let (close, at) = self.next()?;
                if close != Tok::RParen {
                    return Err(self.error(at, "`)`", close.to_string()));
                }
                Ok(inner)
            }
            other => Err(self.error(at, "a letter, `~` or `(`", other.to_string())),
        }
    }

    fn formula(&mut self) -> Result<SurfaceFormula, ParseError> {
        let f = self.iff()?;
        let (tok, at) = self.next()?;
        if tok != Tok::End {
            return Err(self.error(at, "an operator or end of input", tok.to_string()));
        }
        Ok(f)
    }
}

pub fn parse_formula(text: &str) -> Result<SurfaceFormula, ParseError> {
    Parser::new(text).formula()
}

/// Parses and desugars in one go.
pub fn parse_core(text: &str) -> Result<Formula, ParseError> {
    parse_formula(text).map(|sf| desugar(&sf))
}

/// Rewrites surface connectives into `~` and `&`:
/// `a | b` to `~(~a & ~b)`, `a -> b` to `~(a & ~b)`, and
/// `a <-> b` to `~(a & ~b) & ~(b & ~a)`.
pub fn desugar(sf: &SurfaceFormula) -> Formula {
    fn imp(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::and(a, Formula::not(b)))
    }
    match sf {
        SurfaceFormula::Var(p) => Formula::Var(p.clone()),
        SurfaceFormula::Not(a) => Formula::not(desugar(a)),
        SurfaceFormula::And(a, b) => Formula::and(desugar(a), desugar(b)),
        SurfaceFormula::Or(a, b) => Formula::not(Formula::and(
            Formula::not(desugar(a)),
            Formula::not(desugar(b)),
        )),
        SurfaceFormula::Implies(a, b) => imp(desugar(a), desugar(b)),
        SurfaceFormula::Iff(a, b) => {
            let (a, b) = (desugar(a), desugar(b));
            Formula::and(imp(a.clone(), b.clone()), imp(b, a))
        }
    }
}

/// Core-syntax text with the fewest parentheses that parse back to `f`.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    render_into(f, &mut out);
    out
}

fn render_into(f: &Formula, out: &mut String) {
    match f {
        Formula::Var(p) => out.push_str(p.name()),
        Formula::Not(body) => {
            out.push('~');
            render_operand(body, out);
        }
        Formula::And(l, r) => {
            // `&` is left-associative, so only a conjunction on the right
            // needs brackets.
            render_into(l, out);
            out.push_str(" & ");
            render_operand(r, out);
        }
    }
}

fn render_operand(f: &Formula, out: &mut String) {
    if let Formula::And(..) = f {
        out.push('(');
        render_into(f, out);
        out.push(')');
    } else {
        render_into(f, out);
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Problem {
    pub name: Option<String>,
    /// Duplicate-free, in first-occurrence order.
    pub assumptions: Vec<SignedFormula>,
    pub warnings: Vec<String>,
}

impl Problem {
    pub fn from_assumptions(assumptions: impl IntoIterator<Item = SignedFormula>) -> Self {
        let mut problem = Problem::default();
        for sf in assumptions {
            problem.push(sf, None);
        }
        problem
    }

    /// Appends `sf` unless already present; returns whether it was added.
    pub fn push(&mut self, sf: SignedFormula, line: Option<usize>) -> bool {
        if self.assumptions.contains(&sf) {
            let at = line.map(|l| format!("line {l}: ")).unwrap_or_default();
            self.warnings
                .push(format!("{at}duplicate assumption `{sf}` dropped"));
            false
        } else {
            self.assumptions.push(sf);
            true
        }
    }
}

/// Parses one `T: formula` / `F: formula` entry (no line context).
pub fn parse_signed(text: &str) -> Result<SignedFormula, ParseError> {
    parse_signed_line(text, None)
}

fn parse_signed_line(text: &str, line: Option<usize>) -> Result<SignedFormula, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim_start();
    let sign = match body.chars().next() {
        Some('T') => Sign::T,
        Some('F') => Sign::F,
        _ => return Err(missing_sign(text, line)),
    };
    let after = body[1..].trim_start();
    let Some(rest) = after.strip_prefix(':') else {
        return Err(missing_sign(text, line));
    };
    let offset = lead + (body.len() - rest.len());
    let formula = parse_formula(rest).map_err(|e| match e {
        ParseError::SyntaxError {
            position,
            expected,
            found,
            ..
        } => ParseError::SyntaxError {
            line,
            position: position + text[..offset].chars().count(),
            expected,
            found,
        },
        other => other,
    })?;
    Ok(SignedFormula::new(sign, desugar(&formula)))
}

fn missing_sign(text: &str, line: Option<usize>) -> ParseError {
    match line {
        Some(line) => ParseError::MissingSign { line },
        None => ParseError::SyntaxError {
            line: None,
            position: 1,
            expected: "`T:` or `F:`".into(),
            found: format!("`{}`", text.trim()),
        },
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, ParseError> {
    let mut problem = Problem::default();
    let mut seen_entry = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if !seen_entry && problem.name.is_none() {
                if let Some(name) = comment.trim().strip_prefix("name:") {
                    problem.name = Some(name.trim().to_string());
                }
            }
            continue;
        }
        seen_entry = true;
        let sf = parse_signed_line(line, Some(line_no))?;
        problem.push(sf, Some(line_no));
    }
    Ok(problem)
}
