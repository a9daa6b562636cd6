//! Canonical polynomial text and the recursive-descent parser.
//!
//! Grammar:
//! ```text
//! expr     := term (("+"|"-") term)*
//! term     := factor ("*" factor)*
//! factor   := "-" factor | base ("^" uint)?
//! base     := rational | var | "(" expr ")"
//! rational := int ("/" uint)?
//! ratfun   := expr ("/" factor)?
//! var      := letter (letter | digit | "_")*
//! ```
//! A leading minus binds looser than `^`, so `-x^2` reads as `-(x^2)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{format_rat, Rat};
use crate::poly::{Monomial, RationalFunction, VarRegistry};
use crate::Poly;

fn format_monomial(m: &Monomial, reg: &VarRegistry) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = reg.name(crate::Var(i));
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

/// Terms in descending order, e.g. `x^2*y - 5*x^2 + 1/2*y - 3`.
pub fn format_poly(p: &Poly, reg: &VarRegistry) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&format_rat(&a));
        } else {
            if !a.is_one() {
                out.push_str(&format_rat(&a));
                out.push('*');
            }
            out.push_str(&format_monomial(m, reg));
        }
    }
    out
}

/// `num` or `(num) / (den)`.
pub fn format_ratfun(r: &RationalFunction, reg: &VarRegistry) -> String {
    if *r.den() == Poly::one() {
        format_poly(r.num(), reg)
    } else {
        format!("({}) / ({})", format_poly(r.num(), reg), format_poly(r.den(), reg))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    reg: &'a VarRegistry,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos,
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let b = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let start = self.pos_after_ws();
            let e = self.uint()?;
            let e: u32 = match e.try_into() {
                Ok(e) => e,
                Err(_) => return self.err(start, "exponent too large"),
            };
            return Ok(b.pow(e));
        }
        Ok(b)
    }

    fn pos_after_ws(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos_after_ws();
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected unsigned integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn base(&mut self) -> Result<Poly> {
        let start = self.pos_after_ws();
        match self.src.get(start).copied() {
            None => self.err(start, "unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                if self.peek().is_none() {
                    return self.err(start, "unclosed parenthesis");
                }
                let e = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(e)
                    }
                    None => self.err(start, "unclosed parenthesis"),
                    Some(c) => self.err(self.pos, format!("expected `)`, found `{}`", c as char)),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let dpos = self.pos_after_ws();
                    let d = self.uint()?;
                    if d.is_zero() {
                        return self.err(dpos, "zero denominator");
                    }
                    return Ok(Poly::constant(Rat::new(n, d)));
                }
                Ok(Poly::constant(Rat::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match self.reg.lookup(name) {
                    Some(v) => Ok(Poly::var(v)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(c) => self.err(start, format!("unexpected `{}`", c as char)),
        }
    }
}

/// Parses polynomial text over the variables of `reg`.
pub fn parse_poly(text: &str, reg: &VarRegistry) -> Result<Poly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        reg,
    };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return p.err(p.pos, format!("unexpected `{}`", c as char));
    }
    Ok(out)
}

/// Parses `expr` or `expr "/" factor` into a rational function, accepting
/// the printed form `(num) / (den)`.
pub fn parse_ratfun(text: &str, reg: &VarRegistry) -> Result<RationalFunction> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        reg,
    };
    let num = p.expr()?;
    let mut den = Poly::one();
    if p.peek() == Some(b'/') {
        p.pos += 1;
        let dpos = p.pos_after_ws();
        den = p.factor()?;
        if den.is_zero() {
            return p.err(dpos, "zero denominator");
        }
    }
    if let Some(c) = p.peek() {
        return p.err(p.pos, format!("unexpected `{}`", c as char));
    }
    RationalFunction::new(num, den).map(RationalFunction::reduced)
}

/// Parses over the standard registry; panics on error. Test helper.
#[doc(hidden)]
pub fn p(text: &str) -> Poly {
    parse_poly(text, VarRegistry::standard()).unwrap_or_else(|e| panic!("{text}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use crate::Var;
    use proptest::prelude::*;

    #[test]
    fn prints_canonical_order() {
        let q = p("36 + 4*y - 4*y^2 + 6*x*y - x^2 + y^3 + x^2*y");
        assert_eq!(q.to_string(), "x^2*y + y^3 - x^2 + 6*x*y - 4*y^2 + 4*y + 36");
        assert_eq!(p("-1/2*t + 0*x").to_string(), "-1/2*t");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("x - x").to_string(), "0");
    }

    #[test]
    fn limacon_text_expands() {
        let q = p("(x^2+y^2+a*e*y)^2 - a^2*(x^2+y^2)");
        let want = p("x^4 + 2*x^2*y^2 + y^4 + 2*a*e*x^2*y + 2*a*e*y^3 + a^2*e^2*y^2 - a^2*x^2 - a^2*y^2");
        assert_eq!(q, want);
    }

    #[test]
    fn unary_minus_and_rationals() {
        assert_eq!(p("-x^2"), -p("x^2"));
        assert_eq!(p("--x"), p("x"));
        assert_eq!(p("3/6*x"), Poly::var(Var::X).scale(&rat(1, 2)));
        assert_eq!(p("(1/2)^2"), Poly::constant(rat(1, 4)));
    }

    #[test]
    fn rational_functions() {
        let reg = VarRegistry::standard();
        let r = parse_ratfun("(4*t^3 - 4*t^2 - 1)/(t*(t^2 + 1))", reg).unwrap();
        assert_eq!(r.num(), &p("4*t^3 - 4*t^2 - 1"));
        assert_eq!(r.den(), &p("t^3 + t"));
        assert_eq!(parse_ratfun(&format_ratfun(&r, reg), reg).unwrap(), r);
        assert_eq!(parse_ratfun("x^2 - 1/2", reg).unwrap().as_poly(), Some(p("x^2 - 1/2")));
        assert!(matches!(parse_ratfun("t / (t - t)", reg), Err(Error::Syntax { pos: 4, .. })));
    }

    #[test]
    fn syntax_errors() {
        let reg = VarRegistry::standard();
        match parse_poly("x + (", reg) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("x + z", reg), Err(Error::UnknownVariable(n)) if n == "z"));
        assert!(matches!(parse_poly("2x", reg), Err(Error::Syntax { pos: 1, .. })));
        assert!(matches!(parse_poly("x^", reg), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("1/0", reg), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("", reg), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_poly("(x+1", reg), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn custom_registry() {
        let reg = VarRegistry::new(&["p", "q_1"]).unwrap();
        let q = parse_poly("p*q_1 - 2", &reg).unwrap();
        assert_eq!(format_poly(&q, &reg), "p*q_1 - 2");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(((0u32..4, 0u32..3, 0u32..3), -30i64..30, 1i64..7), 0..8).prop_map(
            |ts| {
                Poly::from_terms(ts.into_iter().map(|((a, b, c), n, d)| {
                    (Monomial::from_exps(vec![a, b, c, 0, 1]), rat(n, d))
                }))
            },
        )
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(q in arb_poly()) {
            let s = q.to_string();
            prop_assert_eq!(p(&s), q);
        }
    }
}
