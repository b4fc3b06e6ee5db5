//! Text syntax for monomial ideals and quotient modules.
//!
//! ```text
//! input   := [ "n=" INT ";" ] module
//! module  := sum [ "/" sum ]
//! sum     := inter { "+" inter }
//! inter   := atom { ("∩" | "&") atom }
//! atom    := "(" gens ")" | "(" sum ")"
//! gens    := gen { "," gen } | "0"
//! gen     := "1" | factor { ["*"] factor } | factor "," "..." "," factor
//! factor  := "x" INT [ "^" INT ]
//! ```
//!
//! The range `x1,...,x6` expands to `x1, x2, ..., x6`. Without the `n=`
//! prefix the ring has as many variables as the largest index used.

use stanley_core::{Monomial, MonomialIdeal, QuotientModule};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at column {column}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

type Exps = Vec<(usize, u32)>;

#[derive(Debug)]
enum Expr {
    Gens(Vec<Exps>),
    Zero,
    Inter(Box<Expr>, Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    max_index: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().enumerate().collect(),
            pos: 0,
            max_index: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek_raw().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        let here: String = self.chars[self.pos.min(self.chars.len())..]
            .iter()
            .take(n)
            .map(|&(_, c)| c)
            .collect();
        if here == s {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn input(&mut self) -> Result<(Option<usize>, Expr, Option<Expr>), ParseError> {
        let mut n = None;
        if self.eat_str("n=") || self.eat_str("n =") {
            let start = self.pos;
            let v = self.int()?;
            if v == 0 || v > stanley_core::monomial::MAX_VARS as u64 {
                self.pos = start;
                return self.err(format!(
                    "ring size must be between 1 and {}",
                    stanley_core::monomial::MAX_VARS
                ));
            }
            n = Some(v as usize);
            self.expect(';')?;
        }
        let upper = self.sum()?;
        let lower = if self.eat('/') { Some(self.sum()?) } else { None };
        if let Some(c) = self.peek() {
            return self.err(format!("unexpected '{c}'"));
        }
        Ok((n, upper, lower))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.inter()?;
        while self.eat('+') {
            e = Expr::Sum(Box::new(e), Box::new(self.inter()?));
        }
        Ok(e)
    }

    fn inter(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.atom()?;
        while self.eat('∩') || self.eat('&') {
            e = Expr::Inter(Box::new(e), Box::new(self.atom()?));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        self.expect('(')?;
        let e = match self.peek() {
            Some('(') => self.sum()?,
            Some('0') => {
                self.pos += 1;
                Expr::Zero
            }
            Some(')') => return self.err("empty generator list; write (0) for the zero ideal"),
            _ => Expr::Gens(self.gens()?),
        };
        self.expect(')')?;
        Ok(e)
    }

    fn gens(&mut self) -> Result<Vec<Exps>, ParseError> {
        let mut out = vec![self.gen()?];
        while self.eat(',') {
            if self.eat_str("...") || self.eat('…') {
                let start = self.pos;
                self.expect(',')?;
                let last = self.gen()?;
                let (from, to) = match (out.last().map(Vec::as_slice), last.as_slice()) {
                    (Some(&[(a, 1)]), &[(b, 1)]) if a < b => (a, b),
                    _ => {
                        self.pos = start;
                        return self.err("a range must read x_i, ..., x_j with i < j");
                    }
                };
                out.extend((from + 1..=to).map(|j| vec![(j, 1)]));
            } else {
                out.push(self.gen()?);
            }
        }
        Ok(out)
    }

    fn gen(&mut self) -> Result<Exps, ParseError> {
        if self.eat('1') {
            return Ok(vec![]);
        }
        let mut exps = vec![self.factor()?];
        loop {
            if self.eat('*') || self.peek() == Some('x') {
                exps.push(self.factor()?);
            } else {
                return Ok(exps);
            }
        }
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        match self.peek() {
            Some('x') => self.pos += 1,
            Some(c) => return self.err(format!("expected a variable, found '{c}'")),
            None => return self.err("expected a variable, found end of input"),
        }
        let start = self.pos;
        let index = self.int()?;
        if index == 0 {
            self.pos = start;
            return self.err("variables are numbered from x1");
        }
        if index > stanley_core::monomial::MAX_VARS as u64 {
            self.pos = start;
            return self.err("variable index too large");
        }
        let mut exp = 1;
        if self.eat('^') {
            let start = self.pos;
            let e = self.int()?;
            if e == 0 {
                self.pos = start;
                return self.err("exponent 0 is not allowed");
            }
            exp = u32::try_from(e).or_else(|_| {
                self.pos = start;
                self.err("exponent too large")
            })?;
        }
        let j = index as usize - 1;
        self.max_index = self.max_index.max(j + 1);
        Ok((j, exp))
    }

    fn build(&self, e: &Expr, n: usize) -> Result<MonomialIdeal, ParseError> {
        let core = |r: stanley_core::Result<MonomialIdeal>| {
            r.map_err(|err| ParseError {
                column: 1,
                message: err.to_string(),
            })
        };
        match e {
            Expr::Zero => core(MonomialIdeal::zero(n)),
            Expr::Gens(gens) => {
                let monomials = gens.iter().map(|g| {
                    let mut v = vec![0u32; n];
                    for &(j, e) in g {
                        v[j] = v[j].saturating_add(e);
                    }
                    Monomial::new(v).expect("n checked")
                });
                core(MonomialIdeal::minimalize(n, monomials.collect::<Vec<_>>()))
            }
            Expr::Inter(a, b) => core(self.build(a, n)?.intersect(&self.build(b, n)?)),
            Expr::Sum(a, b) => core(self.build(a, n)?.sum(&self.build(b, n)?)),
        }
    }
}

fn ring_size(p: &Parser, declared: Option<usize>) -> Result<usize, ParseError> {
    match declared {
        Some(n) if n < p.max_index => Err(ParseError {
            column: 1,
            message: format!("x{} used in a ring with {n} variables", p.max_index),
        }),
        Some(n) => Ok(n),
        None => Ok(p.max_index.max(1)),
    }
}

/// Parses `J` or `J / I`.
pub fn parse_module(text: &str) -> Result<QuotientModule, ParseError> {
    let mut p = Parser::new(text);
    let (declared, upper, lower) = p.input()?;
    let n = ring_size(&p, declared)?;
    let j = p.build(&upper, n)?;
    match lower {
        None => Ok(QuotientModule::ideal(j)),
        Some(lower) => {
            let i = p.build(&lower, n)?;
            QuotientModule::new(j, i).map_err(|_| ParseError {
                column: 1,
                message: "the denominator must be contained in the numerator".into(),
            })
        }
    }
}

/// Parses a single ideal; quotients are rejected.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    let mut p = Parser::new(text);
    let (declared, upper, lower) = p.input()?;
    if lower.is_some() {
        return Err(ParseError {
            column: text.chars().position(|c| c == '/').map_or(1, |i| i + 1),
            message: "expected an ideal, found a quotient".into(),
        });
    }
    let n = ring_size(&p, declared)?;
    p.build(&upper, n)
}

/// Parses several ideals into a common ring, the largest one any of them needs.
pub fn parse_ideals(texts: &[&str]) -> Result<Vec<MonomialIdeal>, (usize, ParseError)> {
    let parsed = texts
        .iter()
        .enumerate()
        .map(|(k, t)| parse_ideal(t).map_err(|e| (k, e)))
        .collect::<Result<Vec<_>, _>>()?;
    let n = parsed.iter().map(MonomialIdeal::n).max().unwrap_or(1);
    Ok(parsed
        .into_iter()
        .map(|i| {
            let extra = n - i.n();
            i.extend(extra).expect("within the variable limit")
        })
        .collect())
}

/// Canonical text form with the ring size spelled out; parses back to the
/// same ideal.
pub fn print_ideal(i: &MonomialIdeal) -> String {
    format!("n={}; {i}", i.n())
}

pub fn print_module(m: &QuotientModule) -> String {
    format!("n={}; {m}", m.n())
}

/// Parses a monomial such as `x1^2*x3` or `1` in a ring with `n` variables.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial, ParseError> {
    let mut p = Parser::new(text);
    let g = p.gen()?;
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected '{c}'"));
    }
    if p.max_index > n {
        return Err(ParseError {
            column: 1,
            message: format!("x{} used in a ring with {n} variables", p.max_index),
        });
    }
    let mut v = vec![0u32; n];
    for (j, e) in g {
        v[j] = v[j].saturating_add(e);
    }
    Monomial::new(v).map_err(|e| ParseError {
        column: 1,
        message: e.to_string(),
    })
}

/// Parses a variable name `xJ`, returning the 0-based index.
pub fn parse_variable(text: &str) -> Result<usize, ParseError> {
    let mut p = Parser::new(text);
    let (j, e) = p.factor()?;
    if e != 1 {
        return Err(ParseError {
            column: 1,
            message: "expected a variable without exponent".into(),
        });
    }
    if let Some(c) = p.peek() {
        return p.err(format!("unexpected '{c}'"));
    }
    Ok(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        i.gens().iter().map(|g| g.exps().to_vec()).collect()
    }

    #[test]
    fn basic_ideal() {
        let i = parse_ideal("(x1^2, x1*x2)").unwrap();
        assert_eq!(i.n(), 2);
        assert_eq!(gens(&i), [[2, 0], [1, 1]]);
    }

    #[test]
    fn declared_ring() {
        let i = parse_ideal("n=5; (x1)").unwrap();
        assert_eq!(i.n(), 5);
        assert_eq!(i.len(), 1);
        assert!(parse_ideal("n=1; (x2)").is_err());
    }

    #[test]
    fn juxtaposition_and_minimalization() {
        let i = parse_ideal("(x1x4, x2, x3, x2*x3)").unwrap();
        assert_eq!(i.len(), 3);
        assert_eq!(i.n(), 4);
    }

    #[test]
    fn ranges() {
        let i = parse_ideal("(x1,...,x6)").unwrap();
        assert_eq!(i.len(), 6);
        let i = parse_ideal("(x3, …, x5, x1^2)").unwrap();
        assert_eq!(i.len(), 4);
        assert!(parse_ideal("(x3,...,x2)").is_err());
        assert!(parse_ideal("(x1^2,...,x3)").is_err());
    }

    #[test]
    fn operators() {
        let i = parse_ideal("(x1,x2) ∩ (x3,x4)").unwrap();
        assert_eq!(i.len(), 4);
        assert_eq!(parse_ideal("(x1,x2) & (x3,x4)").unwrap(), i);
        let s = parse_ideal("(x1) + (x2)").unwrap();
        assert_eq!(gens(&s), [[1, 0], [0, 1]]);
        let nested = parse_ideal("((x1) + (x2)) ∩ (x3)").unwrap();
        assert_eq!(nested.len(), 2);
    }

    #[test]
    fn quotients() {
        let m = parse_module("(x1) / (x1^2)").unwrap();
        assert_eq!(m.n(), 1);
        assert!(parse_module("(x1^2) / (x1)").is_err());
        assert!(parse_ideal("(x1) / (x1^2)").is_err());
        let r = parse_module("n=3; (1) / (x1*x2)").unwrap();
        assert!(r.upper().is_unit());
    }

    #[test]
    fn constants() {
        assert!(parse_ideal("(0)").unwrap().is_zero());
        assert!(parse_ideal("(1)").unwrap().is_unit());
        assert!(parse_ideal("(x1, 1)").unwrap().is_unit());
        assert!(parse_ideal("()").is_err());
    }

    #[test]
    fn errors_have_positions() {
        let e = parse_ideal("(x0)").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_ideal("(x1^0)").unwrap_err();
        assert_eq!(e.column, 5);
        assert!(e.message.contains("exponent 0"));
        let e = parse_ideal("(x1, y2)").unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_ideal("(x1").unwrap_err();
        assert_eq!(e.column, 4);
        let e = parse_ideal("(x1) x").unwrap_err();
        assert_eq!(e.column, 6);
    }

    #[test]
    fn printer_round_trip() {
        for text in ["(x1^2, x1*x2)", "n=6; (x1,...,x3) ∩ (x4,x5)", "n=3; (0)", "n=2; (1)"] {
            let i = parse_ideal(text).unwrap();
            assert_eq!(parse_ideal(&print_ideal(&i)).unwrap(), i, "{text}");
        }
        let m = parse_module("n=4; (x1, x2) / (x1*x2, x2^3)").unwrap();
        assert_eq!(parse_module(&print_module(&m)).unwrap(), m);
    }

    #[test]
    fn common_ring() {
        let v = parse_ideals(&["(x1,x2)", "(x3,x4)"]).unwrap();
        assert!(v.iter().all(|i| i.n() == 4));
    }

    #[test]
    fn monomials_and_variables() {
        assert_eq!(parse_monomial("x1^2*x3", 3).unwrap().exps(), &[2, 0, 1]);
        assert!(parse_monomial("1", 2).unwrap().is_one());
        assert!(parse_monomial("x4", 3).is_err());
        assert_eq!(parse_variable("x3").unwrap(), 2);
        assert!(parse_variable("x3^2").is_err());
    }
}
