//! Textual descriptions of rings and modules.
//!
//! ```text
//! ring zmod N
//! ring product <ring> <ring>
//! ring matrix K <ring>
//! ring triangular (upper|lower) K <ring>
//! ring opposite <ring>
//! module regular <ring>
//! module zabelian d1 d2 ...
//! module sum <module> <module>
//! module quotient <module> gens e1 e2 ...
//! module sub <module> gens e1 e2 ...
//! ```
//!
//! Nested arguments are wrapped in parentheses. `#` starts a comment.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module::{ModuleTable, DEFAULT_MODULE_BOUND};
use crate::ring::{BaseRing, RingTable, Shape, DEFAULT_RING_BOUND};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zmod(usize),
    Product(Box<RingExpr>, Box<RingExpr>),
    Matrix(usize, Box<RingExpr>),
    Triangular(Shape, usize, Box<RingExpr>),
    Opposite(Box<RingExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleExpr {
    Regular(RingExpr),
    Zabelian(Vec<usize>),
    Sum(Box<ModuleExpr>, Box<ModuleExpr>),
    Quotient(Box<ModuleExpr>, Vec<usize>),
    Sub(Box<ModuleExpr>, Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InstanceSpec {
    Ring(RingExpr),
    Module(ModuleExpr),
}

/// Size bounds applied while building an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub ring: usize,
    pub module: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            ring: DEFAULT_RING_BOUND,
            module: DEFAULT_MODULE_BOUND,
        }
    }
}

impl RingExpr {
    pub fn build(&self) -> Result<RingTable> {
        self.build_bounded(Bounds::default())
    }

    pub fn build_bounded(&self, b: Bounds) -> Result<RingTable> {
        match self {
            RingExpr::Zmod(n) => RingTable::zmod_bounded(*n, b.ring),
            RingExpr::Product(x, y) => RingTable::product_bounded(&x.build_bounded(b)?, &y.build_bounded(b)?, b.ring),
            RingExpr::Matrix(k, r) => RingTable::matrix_bounded(&r.build_bounded(b)?, *k, b.ring),
            RingExpr::Triangular(s, k, r) => RingTable::triangular_bounded(&r.build_bounded(b)?, *k, *s, b.ring),
            RingExpr::Opposite(r) => Ok(r.build_bounded(b)?.opposite()),
        }
    }
}

impl ModuleExpr {
    pub fn build(&self) -> Result<ModuleTable> {
        self.build_bounded(Bounds::default())
    }

    pub fn build_bounded(&self, b: Bounds) -> Result<ModuleTable> {
        match self {
            ModuleExpr::Regular(r) => {
                let ring = r.build_bounded(b)?;
                if ring.order() > b.module {
                    return Err(Error::size("module order", ring.order() as u128, b.module as u128));
                }
                Ok(ModuleTable::regular(&Arc::new(ring)))
            }
            ModuleExpr::Zabelian(ds) => ModuleTable::zabelian_bounded(ds, b.module),
            ModuleExpr::Sum(x, y) => {
                Ok(ModuleTable::direct_sum_bounded(&x.build_bounded(b)?, &y.build_bounded(b)?, b.module)?.module)
            }
            ModuleExpr::Quotient(m, gens) => {
                let m = m.build_bounded(b)?;
                let sub = generated(&m, gens)?;
                Ok(m.quotient(&sub)?.module)
            }
            ModuleExpr::Sub(m, gens) => {
                let m = m.build_bounded(b)?;
                let sub = generated(&m, gens)?;
                Ok(m.restrict(&sub)?.module)
            }
        }
    }
}

fn generated(m: &ModuleTable, gens: &[usize]) -> Result<crate::module::Submodule> {
    if let Some(&e) = gens.iter().find(|&&e| e >= m.order()) {
        return Err(Error::Argument(format!("element {e} is out of range for a module of order {}", m.order())));
    }
    Ok(m.submodule_generated(gens))
}

/// The built form of an [`InstanceSpec`].
#[derive(Clone, Debug)]
pub enum Built {
    Ring(BaseRing),
    Module(ModuleTable),
}

impl InstanceSpec {
    pub fn build(&self, b: Bounds) -> Result<Built> {
        Ok(match self {
            InstanceSpec::Ring(r) => Built::Ring(BaseRing::finite(r.build_bounded(b)?)),
            InstanceSpec::Module(m) => Built::Module(m.build_bounded(b)?),
        })
    }
}

/// Parses and builds with default bounds.
pub fn parse_spec(text: &str) -> Result<Built> {
    text.parse::<InstanceSpec>()?.build(Bounds::default())
}

fn write_nested(f: &mut fmt::Formatter<'_>, inner: &dyn fmt::Display) -> fmt::Result {
    write!(f, "({inner})")
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for x in xs {
        write!(f, " {x}")?;
    }
    Ok(())
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "ring zmod {n}"),
            RingExpr::Product(x, y) => {
                f.write_str("ring product ")?;
                write_nested(f, x)?;
                f.write_str(" ")?;
                write_nested(f, y)
            }
            RingExpr::Matrix(k, r) => {
                write!(f, "ring matrix {k} ")?;
                write_nested(f, r)
            }
            RingExpr::Triangular(s, k, r) => {
                let s = match s {
                    Shape::Upper => "upper",
                    Shape::Lower => "lower",
                };
                write!(f, "ring triangular {s} {k} ")?;
                write_nested(f, r)
            }
            RingExpr::Opposite(r) => {
                f.write_str("ring opposite ")?;
                write_nested(f, r)
            }
        }
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Regular(r) => {
                f.write_str("module regular ")?;
                write_nested(f, r)
            }
            ModuleExpr::Zabelian(ds) => {
                f.write_str("module zabelian")?;
                write_list(f, ds)
            }
            ModuleExpr::Sum(x, y) => {
                f.write_str("module sum ")?;
                write_nested(f, x)?;
                f.write_str(" ")?;
                write_nested(f, y)
            }
            ModuleExpr::Quotient(m, gens) => {
                f.write_str("module quotient ")?;
                write_nested(f, m)?;
                f.write_str(" gens")?;
                write_list(f, gens)
            }
            ModuleExpr::Sub(m, gens) => {
                f.write_str("module sub ")?;
                write_nested(f, m)?;
                f.write_str(" gens")?;
                write_list(f, gens)
            }
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Ring(r) => r.fmt(f),
            InstanceSpec::Module(m) => m.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Word(String),
    Num(usize),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.strip_suffix('\r').unwrap_or(line);
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (l, col) = (li + 1, i + 1);
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c == '(' || c == ')' {
                let tok = if c == '(' { Tok::Open } else { Tok::Close };
                out.push(Token { tok, line: l, column: col });
                i += 1;
            } else if c.is_ascii_alphanumeric() {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = if word.chars().all(|c| c.is_ascii_digit()) {
                    Tok::Num(word.parse().map_err(|_| Error::Parse {
                        line: l,
                        column: col,
                        message: format!("number `{word}` is too large"),
                    })?)
                } else {
                    Tok::Word(word)
                };
                out.push(Token { tok, line: l, column: col });
            } else {
                return Err(Error::Parse {
                    line: l,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let toks = lex(text)?;
        let lines = text.lines().count().max(1);
        let last = text.lines().last().map_or(0, |l| l.trim_end_matches('\r').chars().count());
        Ok(Parser {
            toks,
            pos: 0,
            end: (lines, last + 1),
        })
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.column))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Parse {
            line,
            column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn word(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Word(w)) if w == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error(format!("expected `{kw}`")),
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.error(format!("expected {what}")),
        }
    }

    fn numbers(&mut self) -> Vec<usize> {
        let mut v = Vec::new();
        while let Some(Tok::Num(n)) = self.peek() {
            v.push(*n);
            self.pos += 1;
        }
        v
    }

    fn close(&mut self) -> Result<()> {
        match self.peek() {
            Some(Tok::Close) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.error("expected `)`"),
        }
    }

    fn spec(&mut self) -> Result<InstanceSpec> {
        if self.peek() == Some(&Tok::Open) {
            self.pos += 1;
            let s = self.spec()?;
            self.close()?;
            return Ok(s);
        }
        match self.peek() {
            Some(Tok::Word(w)) if w == "ring" => Ok(InstanceSpec::Ring(self.ring_body()?)),
            Some(Tok::Word(w)) if w == "module" => Ok(InstanceSpec::Module(self.module_body()?)),
            _ => self.error("expected `ring` or `module`"),
        }
    }

    fn nested_ring(&mut self) -> Result<RingExpr> {
        if self.peek() != Some(&Tok::Open) {
            return self.error("expected `(` before a nested ring");
        }
        self.pos += 1;
        let r = self.ring_body()?;
        self.close()?;
        Ok(r)
    }

    fn nested_module(&mut self) -> Result<ModuleExpr> {
        if self.peek() != Some(&Tok::Open) {
            return self.error("expected `(` before a nested module");
        }
        self.pos += 1;
        let m = self.module_body()?;
        self.close()?;
        Ok(m)
    }

    fn ring_body(&mut self) -> Result<RingExpr> {
        self.keyword("ring")?;
        let at = self.pos;
        let kind = self.word("a ring constructor")?;
        Ok(match kind.as_str() {
            "zmod" => RingExpr::Zmod(self.number("a modulus")?),
            "product" => {
                let a = self.nested_ring()?;
                let b = self.nested_ring()?;
                RingExpr::Product(Box::new(a), Box::new(b))
            }
            "matrix" => {
                let k = self.number("a matrix size")?;
                RingExpr::Matrix(k, Box::new(self.nested_ring()?))
            }
            "triangular" => {
                let shape = match self.word("`upper` or `lower`")?.as_str() {
                    "upper" => Shape::Upper,
                    "lower" => Shape::Lower,
                    _ => {
                        self.pos -= 1;
                        return self.error("expected `upper` or `lower`");
                    }
                };
                let k = self.number("a matrix size")?;
                RingExpr::Triangular(shape, k, Box::new(self.nested_ring()?))
            }
            "opposite" => RingExpr::Opposite(Box::new(self.nested_ring()?)),
            other => {
                self.pos = at;
                return self.error(format!("unknown ring constructor `{other}`"));
            }
        })
    }

    fn module_body(&mut self) -> Result<ModuleExpr> {
        self.keyword("module")?;
        let at = self.pos;
        let kind = self.word("a module constructor")?;
        Ok(match kind.as_str() {
            "regular" => ModuleExpr::Regular(self.nested_ring()?),
            "zabelian" => ModuleExpr::Zabelian(self.numbers()),
            "sum" => {
                let a = self.nested_module()?;
                let b = self.nested_module()?;
                ModuleExpr::Sum(Box::new(a), Box::new(b))
            }
            "quotient" | "sub" => {
                let m = self.nested_module()?;
                self.keyword("gens")?;
                let gens = self.numbers();
                if kind == "quotient" {
                    ModuleExpr::Quotient(Box::new(m), gens)
                } else {
                    ModuleExpr::Sub(Box::new(m), gens)
                }
            }
            other => {
                self.pos = at;
                return self.error(format!("unknown module constructor `{other}`"));
            }
        })
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return self.error("unexpected trailing input");
        }
        Ok(())
    }
}

impl FromStr for InstanceSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser::new(text)?;
        let s = p.spec()?;
        p.finish()?;
        Ok(s)
    }
}

impl FromStr for ModuleExpr {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.parse::<InstanceSpec>()? {
            InstanceSpec::Module(m) => Ok(m),
            InstanceSpec::Ring(_) => Err(Error::Parse {
                line: 1,
                column: 1,
                message: "expected a module, found a ring".into(),
            }),
        }
    }
}

impl FromStr for RingExpr {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.parse::<InstanceSpec>()? {
            InstanceSpec::Ring(r) => Ok(r),
            InstanceSpec::Module(_) => Err(Error::Parse {
                line: 1,
                column: 1,
                message: "expected a ring, found a module".into(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        match parse_spec("ring zmod 4").unwrap() {
            Built::Ring(BaseRing::Finite(r)) => assert_eq!(r.order(), 4),
            other => panic!("{other:?}"),
        }
        match parse_spec("module zabelian 4").unwrap() {
            Built::Module(m) => {
                assert_eq!(m.order(), 4);
                assert_eq!(m.base(), &BaseRing::Integers);
            }
            other => panic!("{other:?}"),
        }
        match parse_spec("module regular (ring triangular upper 2 (ring zmod 2))").unwrap() {
            Built::Module(m) => assert_eq!(m.order(), 8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn composite_modules() {
        let m: ModuleExpr = "module quotient (module regular (ring zmod 4)) gens 2".parse().unwrap();
        assert_eq!(m.build().unwrap().order(), 2);
        let s: ModuleExpr = "module sub (module sum (module zabelian 2) (module zabelian 4)) gens 1"
            .parse()
            .unwrap();
        assert_eq!(s.build().unwrap().order(), 4);
        let z: ModuleExpr = "module zabelian".parse().unwrap();
        assert!(z.build().unwrap().is_zero());
    }

    #[test]
    fn crlf_and_comments() {
        let text = "# a comment\r\nmodule sum\r\n  (module zabelian 2) # first\r\n  (module zabelian 3)\r\n";
        let m: ModuleExpr = text.parse().unwrap();
        assert_eq!(m.to_string(), "module sum (module zabelian 2) (module zabelian 3)");
    }

    #[test]
    fn parse_errors_have_positions() {
        match "ring zmod".parse::<InstanceSpec>() {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 10)),
            other => panic!("{other:?}"),
        }
        match "module sum\n(module zabelian 2) module".parse::<InstanceSpec>() {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 21)),
            other => panic!("{other:?}"),
        }
        match "ring frobnicate 3".parse::<InstanceSpec>() {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (1, 6));
                assert!(message.contains("frobnicate"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!("ring zmod 4 $".parse::<InstanceSpec>(), Err(Error::Parse { column: 13, .. })));
    }

    #[test]
    fn build_errors() {
        assert!(matches!(
            "module sum (module zabelian 2) (module regular (ring zmod 2))".parse::<ModuleExpr>().unwrap().build(),
            Err(Error::BaseMismatch)
        ));
        assert!(matches!(
            "module regular (ring matrix 3 (ring zmod 2))".parse::<ModuleExpr>().unwrap().build(),
            Err(Error::Size { .. })
        ));
        assert!(matches!(
            "module quotient (module zabelian 4) gens 7".parse::<ModuleExpr>().unwrap().build(),
            Err(Error::Argument(_))
        ));
    }
}
