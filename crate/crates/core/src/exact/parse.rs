//! Parser for the text grammar used in files and output: sums of terms
//! with integer or `a/b` coefficients, `*`, `^`, parentheses, and `/`.
//! Rational functions use variables `l1..ln`; path polynomials use `t`.

use super::{Field, MultiPoly, PathPoly, RatFunc, Rational, Ring};
use crate::error::{Error, Result};

trait Target: Ring {
    fn divide(&self, other: &Self) -> Option<Self>;
}

impl Target for RatFunc {
    fn divide(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
}

impl Target for PathPoly {
    fn divide(&self, other: &Self) -> Option<Self> {
        let c = other.as_constant()?.recip()?;
        Some(self.times(&PathPoly::constant(c)))
    }
}

struct Parser<'a, T> {
    src: &'a [u8],
    pos: usize,
    template: T,
    var: &'a dyn Fn(&str) -> Option<T>,
}

impl<'a, T: Target> Parser<'a, T> {
    fn err<X>(&self, msg: impl Into<String>) -> Result<X> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<T> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc.plus(&rhs) } else { acc.minus(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<T> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                acc.times(&rhs)
            } else {
                match acc.divide(&rhs) {
                    Some(q) => q,
                    None => return self.err("division by zero or by a non-constant"),
                }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<T> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.negated())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<T> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = match digits.parse() {
                Ok(e) => e,
                Err(_) => return self.err("expected a nonnegative integer exponent"),
            };
            let mut acc = base.one_like();
            for _ in 0..e {
                acc = acc.times(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<T> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let v: Rational = d.parse()?;
                Ok(self.scalar(&v))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match (self.var)(&name) {
                    Some(v) => Ok(v),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable {name:?}"))
                    }
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }

    fn scalar(&self, v: &Rational) -> T {
        match v.to_i64() {
            Some(i) => self.template.int_like(i),
            None => {
                // literal wider than i64
                let ten = self.template.int_like(10);
                v.to_string().bytes().fold(self.template.zero_like(), |acc, d| {
                    acc.times(&ten).plus(&self.template.int_like((d - b'0') as i64))
                })
            }
        }
    }

    fn finish(mut self) -> Result<T> {
        let e = self.expr()?;
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(e)
    }
}

/// Parses a rational function in `l1..l{nvars}`, e.g. `"(-l3)/(l1 + l2 + l3)"`.
pub fn parse_ratfunc(s: &str, nvars: usize) -> Result<RatFunc> {
    let var = move |name: &str| -> Option<RatFunc> {
        let i: usize = name.strip_prefix('l')?.parse().ok()?;
        (1..=nvars).contains(&i).then(|| RatFunc::from_poly(MultiPoly::var(nvars, i - 1)))
    };
    Parser { src: s.as_bytes(), pos: 0, template: RatFunc::zero(nvars), var: &var }.finish()
}

/// Parses a polynomial in `t` with rational coefficients, e.g. `"1 - 2*t + t^2"`.
pub fn parse_pathpoly(s: &str) -> Result<PathPoly> {
    let var = |name: &str| -> Option<PathPoly> {
        (name == "t").then(|| PathPoly::monomial(Rational::one(), 1))
    };
    Parser { src: s.as_bytes(), pos: 0, template: PathPoly::zero(), var: &var }.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfunc_round_trip() {
        for s in ["(-l3)/(l1 + l2 + l3)", "l1 + l2", "0", "-3/2*l1^2*l2 + 7", "(l2)/(l1^2 - l3)"] {
            let f = parse_ratfunc(s, 3).unwrap();
            assert_eq!(f.to_string(), s);
        }
    }

    #[test]
    fn ratfunc_normalizes_on_parse() {
        let f = parse_ratfunc("(l2^2 + l2*l3)/(l2*l1 + l2^2 + l2*l3)", 3).unwrap();
        assert_eq!(f.to_string(), "(l2 + l3)/(l1 + l2 + l3)");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_ratfunc("l4", 3).is_err());
        assert!(parse_ratfunc("l1 +", 3).is_err());
        assert!(parse_ratfunc("1/0", 3).is_err());
        assert!(parse_pathpoly("1/t").is_err());
        assert!(parse_pathpoly("x").is_err());
    }

    #[test]
    fn pathpoly_forms() {
        let p = parse_pathpoly("1 - 2*t + t^2").unwrap();
        assert_eq!(p.coeffs(), &[1.into(), (-2).into(), 1.into()]);
        assert_eq!(parse_pathpoly("3/2*t").unwrap().to_string(), "3/2*t");
        assert_eq!(parse_pathpoly("-t").unwrap().to_string(), "-t");
        assert_eq!(parse_pathpoly("(1+t)^2").unwrap().to_string(), "1 + 2*t + t^2");
    }
}
