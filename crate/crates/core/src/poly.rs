//! Univariate polynomials and rational functions over Q.

use crate::rational::{fmt_q, Q};
use num_traits::{One, Zero};
use std::fmt;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    c: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn constant(x: Q) -> Self {
        UniPoly::new(vec![x])
    }

    pub fn one() -> Self {
        UniPoly::constant(Q::one())
    }

    /// `a·N + b`
    pub fn linear(a: Q, b: Q) -> Self {
        UniPoly::new(vec![b, a])
    }

    pub fn x() -> Self {
        UniPoly::linear(Q::one(), Q::zero())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Q> {
        self.c.last()
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for k in self.c.iter().rev() {
            acc = acc * x + k;
        }
        acc
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![Q::zero(); n];
        for (i, x) in self.c.iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in o.c.iter().enumerate() {
            c[i] += x;
        }
        UniPoly::new(c)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Q) -> UniPoly {
        UniPoly::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        UniPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut r = UniPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dl = d.lead().expect("division by the zero polynomial").clone();
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let t = &r[k + dd] / &dl;
            if !t.is_zero() {
                for (j, y) in d.c.iter().enumerate() {
                    r[k + j] -= &t * y;
                }
            }
            quo[k] = t;
        }
        r.truncate(dd);
        (UniPoly::new(quo), UniPoly::new(r))
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Multiplicity of the root `x`, dividing out `(N − x)` repeatedly.
    pub fn root_multiplicity(&self, x: &Q) -> (usize, UniPoly) {
        let lin = UniPoly::linear(Q::one(), -x);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.eval(x).is_zero() {
            p = p.divrem(&lin).0;
            m += 1;
        }
        (m, p)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, k) in self.c.iter().enumerate().rev() {
            if k.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", fmt_q(k))?,
                1 => write!(f, "({})N", fmt_q(k))?,
                _ => write!(f, "({})N^{}", fmt_q(k), i)?,
            }
        }
        Ok(())
    }
}

/// Reduced quotient of polynomials; the denominator is monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> RatFunc {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g).0;
        let den = den.divrem(&g).0;
        let l = den.lead().unwrap().recip();
        RatFunc { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn poly(p: UniPoly) -> RatFunc {
        RatFunc { num: p, den: UniPoly::one() }
    }

    pub fn constant(x: Q) -> RatFunc {
        RatFunc::poly(UniPoly::constant(x))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, k: &Q) -> RatFunc {
        RatFunc::new(self.num.scale(k), self.den.clone())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// `None` when dividing by the zero function.
    pub fn div(&self, o: &RatFunc) -> Option<RatFunc> {
        if o.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    /// `None` when the reduced denominator vanishes at `x`.
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| qi(x)).collect())
    }

    #[test]
    fn gcd_and_reduction() {
        // (N-1)(N+2) and (N-1)(N-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let r = RatFunc::new(a, b);
        assert_eq!(r.num(), &p(&[2, 1]));
        assert_eq!(r.den(), &p(&[-3, 1]));
        assert_eq!(r.eval(&qi(1)), Some(q(-3, 2)));
        assert_eq!(r.eval(&qi(3)), None);
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[5, 0, -3, 2, 7]);
        let d = p(&[1, 2]);
        let (qq, r) = a.divrem(&d);
        assert_eq!(qq.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn root_multiplicity_counts() {
        let a = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]));
        let (m, rest) = a.root_multiplicity(&qi(1));
        assert_eq!(m, 3);
        assert_eq!(rest, p(&[2, 1]));
    }
}
