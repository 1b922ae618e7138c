//! Text grammar for forms and operators.
//!
//! ```text
//! expr   ::= ['+' | '-'] term (('+' | '-') term)*
//! term   ::= factor ('*'? factor)*
//! factor ::= atom ('^' integer)?
//! atom   ::= integer ('/' integer)? | var | '(' expr ')'
//! var    ::= 'X' integer | 'X' | 'Y' | 'Z' | 'W'
//! ```
//!
//! Whitespace is ignored and U+2212 is accepted as a minus sign. Operators use
//! the lower-case letters. The single-letter aliases name the first four
//! variables and are only available when there are at most four. The
//! expression is expanded and must come out homogeneous and nonzero.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{Homogeneous, Monomial, Side};
use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, Scalar};

/// Parses a nonzero homogeneous form in `r` variables over `field`.
pub fn parse_form(text: &str, r: usize, field: FieldSpec) -> Result<super::Form> {
    parse_homogeneous(text, r, field)
}

/// Parses a nonzero homogeneous operator (lower-case variables).
pub fn parse_operator(text: &str, r: usize, field: FieldSpec) -> Result<super::Operator> {
    parse_homogeneous(text, r, field)
}

fn parse_homogeneous<S: Side>(text: &str, r: usize, field: FieldSpec) -> Result<Homogeneous<S>> {
    let mut parser = Parser::<S> {
        chars: text.chars().collect(),
        pos: 0,
        nvars: r,
        field,
        side: core::marker::PhantomData,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error(format!("unexpected '{}'", parser.chars[parser.pos])));
    }
    if poly.is_empty() {
        return Err(Error::ZeroForm);
    }
    let degrees: BTreeSet<u32> = poly.keys().map(Monomial::degree).collect();
    if degrees.len() > 1 {
        return Err(Error::Inhomogeneous(degrees.into_iter().collect()));
    }
    let degree = degrees.into_iter().next().unwrap_or(0);
    Homogeneous::from_terms(r, degree, field, poly)
}

/// Possibly inhomogeneous intermediate polynomial.
type Poly = BTreeMap<Monomial, Scalar>;

struct Parser<S: Side> {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    field: FieldSpec,
    side: core::marker::PhantomData<S>,
}

impl<S: Side> Parser<S> {
    fn error(&self, message: String) -> Error {
        Error::Syntax {
            position: self.pos,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn is_var_start(&self, c: char) -> bool {
        c == S::PREFIX || S::ALIASES.contains(&c)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::new();
        let mut negate = false;
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('-' | '\u{2212}') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            add_into(&mut acc, t, negate);
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some('-' | '\u{2212}') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                Some(c) if c == '(' || c.is_ascii_digit() || self.is_var_start(c) => {
                    let f = self.factor()?;
                    acc = mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self.integer()?;
            let exp: u32 =
                u32::try_from(&exp).map_err(|_| self.error("exponent out of range".to_string()))?;
            let mut acc = constant(self.nvars, Scalar::one(self.field));
            for _ in 0..exp {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".to_string()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num = self.integer()?;
                let den = if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    self.integer()?
                } else {
                    BigInt::from(1)
                };
                let c = Scalar::from_ratio(self.field, &num, &den).ok_or(Error::Syntax {
                    position: start,
                    message: format!("denominator {den} vanishes in {}", self.field),
                })?;
                Ok(constant(self.nvars, c))
            }
            Some(c) if self.is_var_start(c) => {
                let start = self.pos;
                self.pos += 1;
                let index = if c == S::PREFIX
                    && self.chars.get(self.pos).is_some_and(char::is_ascii_digit)
                {
                    let i = self.integer()?;
                    let i = usize::try_from(&i).unwrap_or(usize::MAX);
                    if i == 0 || i > self.nvars {
                        return Err(Error::VariableOutOfRange {
                            index: i,
                            vars: self.nvars,
                        });
                    }
                    i - 1
                } else {
                    let alias = S::ALIASES.iter().position(|&a| a == c).unwrap_or(0);
                    if self.nvars > 4 {
                        return Err(Error::Syntax {
                            position: start,
                            message: format!(
                                "alias '{c}' needs at most 4 variables; write {}{}",
                                S::PREFIX,
                                alias + 1
                            ),
                        });
                    }
                    if alias >= self.nvars {
                        return Err(Error::VariableOutOfRange {
                            index: alias + 1,
                            vars: self.nvars,
                        });
                    }
                    alias
                };
                let mut p = Poly::new();
                p.insert(Monomial::var(self.nvars, index), Scalar::one(self.field));
                Ok(p)
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".to_string())),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".to_string()));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}

fn constant(nvars: usize, c: Scalar) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert(Monomial::one(nvars), c);
    }
    p
}

fn add_into(acc: &mut Poly, p: Poly, negate: bool) {
    for (m, c) in p {
        let c = if negate { -c } else { c };
        let sum = match acc.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            acc.insert(m, sum);
        }
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut single = Poly::new();
            single.insert(ma.mul(mb), ca * cb);
            add_into(&mut out, single, false);
        }
    }
    out
}

/// Canonical printing: leading term first, `*` between factors, `^` only for
/// exponents above one, coefficient one omitted.
pub(super) fn write_poly<'a, S: Side>(
    f: &mut fmt::Formatter<'_>,
    nvars: usize,
    terms: impl Iterator<Item = (&'a Monomial, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let is_constant = m.degree() == 0;
        if !magnitude.is_one() || is_constant {
            write!(f, "{magnitude}")?;
            if !is_constant {
                f.write_str("*")?;
            }
        }
        let mut first_var = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first_var {
                f.write_str("*")?;
            }
            first_var = false;
            if nvars <= 4 {
                write!(f, "{}", S::ALIASES[i])?;
            } else {
                write!(f, "{}{}", S::PREFIX, i + 1)?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Form;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn paper_pair_member() {
        let f = parse_form("X^4 + X*Y^3", 2, Q).unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.to_string(), "X^4 + X*Y^3");
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(parse_form("0", 2, Q), Err(Error::ZeroForm));
        assert_eq!(parse_form("X^2 - X*X", 2, Q), Err(Error::ZeroForm));
    }

    #[test]
    fn indexed_variables_round_trip() {
        let f = parse_form("X1^2*X2 - 3*X3^3", 3, Q).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.num_terms(), 2);
        let printed = f.to_string();
        assert_eq!(printed, "X^2*Y - 3*Z^3");
        assert_eq!(parse_form(&printed, 3, Q).unwrap(), f);
    }

    #[test]
    fn many_variables_print_indexed() {
        let f = parse_form("X1*X5 + 2/3*X2^2", 5, Q).unwrap();
        assert_eq!(f.to_string(), "X1*X5 + 2/3*X2^2");
        assert!(parse_form("X*Y", 5, Q).is_err());
    }

    #[test]
    fn inhomogeneous_lists_degrees() {
        assert_eq!(
            parse_form("X^2+Y", 2, Q),
            Err(Error::Inhomogeneous(alloc::vec![1, 2]))
        );
    }

    #[test]
    fn out_of_range_variables() {
        assert_eq!(
            parse_form("X4", 3, Q),
            Err(Error::VariableOutOfRange { index: 4, vars: 3 })
        );
        assert_eq!(
            parse_form("Z^2", 2, Q),
            Err(Error::VariableOutOfRange { index: 3, vars: 2 })
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_form("X^2 + * Y^2", 2, Q) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_form("(X+Y", 2, Q),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_form("X^", 2, Q), Err(Error::Syntax { .. })));
    }

    #[test]
    fn parentheses_and_implicit_products() {
        let f = parse_form("(X+Y)^2", 2, Q).unwrap();
        assert_eq!(f.to_string(), "X^2 + 2*X*Y + Y^2");
        let g = parse_form("2X Y \u{2212} 3 Y^2", 2, Q).unwrap();
        assert_eq!(g.to_string(), "2*X*Y - 3*Y^2");
    }

    #[test]
    fn prime_field_coefficients() {
        let f7 = FieldSpec::prime(7).unwrap();
        let f = parse_form("1/2*X - Y", 2, f7).unwrap();
        assert_eq!(f.to_string(), "4*X + 6*Y");
        assert!(parse_form("1/7*X", 2, f7).is_err());
        let g: Form = parse_form("7*X + Y", 2, f7).unwrap();
        assert_eq!(g.to_string(), "Y");
    }

    #[test]
    fn operators_use_lower_case() {
        assert!(parse_operator("x^2*y", 2, Q).is_ok());
        assert!(parse_operator("X^2", 2, Q).is_err());
    }
}
