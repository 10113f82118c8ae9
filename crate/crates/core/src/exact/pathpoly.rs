use std::fmt;

use super::{Domain, Rational, Ring};

/// Univariate polynomial in the path parameter `t`; `coeffs[k]` multiplies
/// `t^k`. No trailing zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PathPoly {
    coeffs: Vec<Rational>,
}

impl PathPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PathPoly { coeffs }
    }

    pub fn zero() -> Self {
        PathPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        PathPoly::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        PathPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at `t = 0`: the index of the lowest nonzero
    /// coefficient, or `None` for the zero polynomial.
    pub fn ord_t(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl fmt::Display for PathPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PathPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathPoly({self})")
    }
}

impl Ring for PathPoly {
    fn zero_like(&self) -> Self {
        PathPoly::zero()
    }
    fn one_like(&self) -> Self {
        PathPoly::constant(Rational::one())
    }
    fn int_like(&self, v: i64) -> Self {
        PathPoly::constant(Rational::from_int(v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        PathPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return PathPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PathPoly::new(out)
    }
    fn negated(&self) -> Self {
        PathPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Domain for PathPoly {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        if self.is_zero() {
            return Some(PathPoly::zero());
        }
        let da = self.degree()?;
        if da < db {
            return None;
        }
        let lb = other.coeffs[db].recip()?;
        let mut rem = self.coeffs.clone();
        let mut q = vec![Rational::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = &rem[k + db] * &lb;
            if !c.is_zero() {
                for (j, b) in other.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * b);
                }
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(PathPoly::new(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> PathPoly {
        PathPoly::new(c.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn order_of_vanishing() {
        assert_eq!(p(&[0, 0, 3, 1]).ord_t(), Some(2));
        assert_eq!(p(&[5]).ord_t(), Some(0));
        assert_eq!(p(&[]).ord_t(), None);
        assert_eq!(p(&[0, 0, 0]).ord_t(), None);
        // t*(t-3)
        assert_eq!(p(&[0, -3, 1]).ord_t(), Some(1));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[1, -2, 1]).to_string(), "1 - 2*t + t^2");
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[0, 1])), None);
    }
}
