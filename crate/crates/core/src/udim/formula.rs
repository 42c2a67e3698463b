//! Factored rational functions of (α̂, β̂, γ̂) and their exact evaluation.
//!
//! Every linear factor is reduced on the plane α̂+β̂+γ̂ = 1/2 by homogenizing
//! its constant term (k ↦ 2k(α̂+β̂+γ̂)), so factors that agree on the plane
//! share one canonical key and cancel symbolically.

use crate::poly::RatFunc;
use crate::rational::{fmt_q, qi, Q};
use crate::vparams::{FamilyLine, PermutationS3, VogelPoint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("pole at point: factor {factor} vanishes in the denominator; use line evaluation")]
    Pole { factor: String },
    #[error("0/0 at point: factor {factor} vanishes in numerator and denominator; use line evaluation")]
    Indeterminate { factor: String },
    #[error("undefined on line: {0}")]
    UndefinedOnLine(String),
    #[error("Y2 ratio undefined: {0}")]
    RatioUndefined(String),
    #[error("{0}")]
    Context(String),
}

const VARS: [&str; 3] = ["α̂", "β̂", "γ̂"];

/// Homogeneous primitive form x·α̂ + y·β̂ + z·γ̂ with positive leading coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm([i64; 3]);

impl LinearForm {
    /// Reduces `x·α̂ + y·β̂ + z·γ̂ + k` on the plane into `scale · form`.
    /// `None` means the expression vanishes identically on the plane.
    pub fn on_plane(x: i64, y: i64, z: i64, k: i64) -> Option<(i64, LinearForm)> {
        let v = [x + 2 * k, y + 2 * k, z + 2 * k];
        let g = v.iter().fold(0i64, |g, c| g.gcd(c));
        if g == 0 {
            return None;
        }
        let lead = *v.iter().find(|c| **c != 0).unwrap();
        let s = if lead < 0 { -g } else { g };
        Some((s, LinearForm(v.map(|c| c / s))))
    }

    pub fn coeffs(&self) -> [i64; 3] {
        self.0
    }

    pub fn eval(&self, p: &[Q; 3]) -> Q {
        let mut acc = Q::zero();
        for i in 0..3 {
            if self.0[i] != 0 {
                acc += &p[i] * qi(self.0[i]);
            }
        }
        acc
    }

    fn eval_line(&self, c: &[RatFunc; 3]) -> RatFunc {
        let mut acc = RatFunc::constant(Q::zero());
        for i in 0..3 {
            if self.0[i] != 0 {
                acc = acc.add(&c[i].scale(&qi(self.0[i])));
            }
        }
        acc
    }

    /// The form composed with a point permutation: L'(x) = L(p·x).
    /// Returns the sign needed to restore the canonical orientation.
    fn permuted(&self, p: &PermutationS3) -> (i64, LinearForm) {
        let v = [0, 1, 2].map(|i| self.0[p.image(i)]);
        let lead = *v.iter().find(|c| **c != 0).unwrap();
        if lead < 0 {
            (-1, LinearForm(v.map(|c| -c)))
        } else {
            (1, LinearForm(v))
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for i in 0..3 {
            let c = self.0[i];
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push(if c > 0 { '+' } else { '−' });
            } else if c < 0 {
                s.push('−');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(VARS[i]);
        }
        write!(f, "({s})")
    }
}

/// Homogeneous polynomial with integer coefficients, content 1 and positive
/// leading (lexicographically largest exponent) coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly3 {
    terms: Vec<([u32; 3], i64)>,
}

impl Poly3 {
    /// Returns `scale · canonical`.
    pub fn canonical(terms: impl IntoIterator<Item = ([u32; 3], i64)>) -> (i64, Poly3) {
        let mut m: BTreeMap<[u32; 3], i64> = BTreeMap::new();
        for (e, c) in terms {
            *m.entry(e).or_insert(0) += c;
        }
        m.retain(|_, c| *c != 0);
        assert!(!m.is_empty(), "zero polynomial factor");
        let deg: Vec<u32> = m.keys().map(|e| e.iter().sum()).collect();
        assert!(deg.iter().all(|d| *d == deg[0]), "polynomial factors must be homogeneous");
        let g = m.values().fold(0i64, |g, c| g.gcd(c));
        let lead = *m.values().next_back().unwrap();
        let s = if lead < 0 { -g } else { g };
        let terms = m.into_iter().map(|(e, c)| (e, c / s)).collect();
        (s, Poly3 { terms })
    }

    pub fn degree(&self) -> u32 {
        self.terms[0].0.iter().sum()
    }

    pub fn eval(&self, p: &[Q; 3]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = qi(*c);
            for i in 0..3 {
                for _ in 0..e[i] {
                    t *= &p[i];
                }
            }
            acc += t;
        }
        acc
    }

    fn eval_line(&self, c: &[RatFunc; 3]) -> RatFunc {
        let d = self.degree() as usize;
        let pw: Vec<Vec<RatFunc>> = c
            .iter()
            .map(|x| {
                let mut v = vec![RatFunc::constant(Q::one())];
                for k in 1..=d {
                    v.push(v[k - 1].mul(x));
                }
                v
            })
            .collect();
        let mut acc = RatFunc::constant(Q::zero());
        for (e, k) in &self.terms {
            let t = pw[0][e[0] as usize].mul(&pw[1][e[1] as usize]).mul(&pw[2][e[2] as usize]);
            acc = acc.add(&t.scale(&qi(*k)));
        }
        acc
    }

    fn permuted(&self, p: &PermutationS3) -> (i64, Poly3) {
        Poly3::canonical(self.terms.iter().map(|(e, c)| ([0, 1, 2].map(|i| e[p.image(i)]), *c)))
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(poly of degree {}, {} terms)", self.degree(), self.terms.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Lin(LinearForm),
    Poly(Poly3),
}

impl Factor {
    pub fn eval(&self, p: &[Q; 3]) -> Q {
        match self {
            Factor::Lin(l) => l.eval(p),
            Factor::Poly(q) => q.eval(p),
        }
    }

    fn eval_line(&self, c: &[RatFunc; 3]) -> RatFunc {
        match self {
            Factor::Lin(l) => l.eval_line(c),
            Factor::Poly(q) => q.eval_line(c),
        }
    }

    fn permuted(&self, p: &PermutationS3) -> (i64, Factor) {
        match self {
            Factor::Lin(l) => {
                let (s, l) = l.permuted(p);
                (s, Factor::Lin(l))
            }
            Factor::Poly(q) => {
                let (s, q) = q.permuted(p);
                (s, Factor::Poly(q))
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Lin(l) => l.fmt(f),
            Factor::Poly(q) => q.fmt(f),
        }
    }
}

/// `coeff · Π factor^exp`, exponents nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    coeff: Q,
    factors: BTreeMap<Factor, i32>,
}

impl Factored {
    pub fn constant(c: Q) -> Factored {
        Factored { coeff: c, factors: BTreeMap::new() }
    }

    pub fn coeff(&self) -> &Q {
        &self.coeff
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Factor, i32)> {
        self.factors.iter().map(|(f, e)| (f, *e))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    fn push(&mut self, f: Factor, e: i32) {
        let x = self.factors.entry(f).or_insert(0);
        *x += e;
        if *x == 0 {
            self.factors.retain(|_, e| *e != 0);
        }
    }

    fn push_scaled(&mut self, s: i64, f: Factor, e: i32) {
        if e >= 0 {
            self.coeff *= qi(s).pow(e);
        } else {
            self.coeff /= qi(s).pow(-e);
        }
        self.push(f, e);
    }

    pub fn mul(&self, o: &Factored) -> Factored {
        let mut r = self.clone();
        r.coeff *= &o.coeff;
        for (f, e) in &o.factors {
            r.push(f.clone(), *e);
        }
        r
    }

    pub fn recip(&self) -> Factored {
        assert!(!self.coeff.is_zero(), "reciprocal of zero");
        Factored {
            coeff: self.coeff.recip(),
            factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect(),
        }
    }

    pub fn div(&self, o: &Factored) -> Factored {
        self.mul(&o.recip())
    }

    pub fn scale(&self, k: &Q) -> Factored {
        Factored { coeff: &self.coeff * k, factors: self.factors.clone() }
    }

    /// The formula composed with a point permutation: F'(x) = F(p·x).
    pub fn permuted(&self, p: &PermutationS3) -> Factored {
        let mut r = Factored::constant(self.coeff.clone());
        for (f, e) in &self.factors {
            let (s, g) = f.permuted(p);
            r.push_scaled(s, g, *e);
        }
        r
    }

    pub fn eval_point(&self, pt: &VogelPoint) -> Result<Q, EvalError> {
        let p = pt.coords();
        let mut num = self.coeff.clone();
        let mut den = Q::one();
        let mut zero_num: Option<&Factor> = None;
        let mut zero_den: Option<&Factor> = None;
        for (f, e) in &self.factors {
            let v = f.eval(p);
            if v.is_zero() {
                if *e > 0 {
                    zero_num = Some(f);
                } else {
                    zero_den = Some(f);
                }
                continue;
            }
            if *e > 0 {
                num *= v.pow(*e);
            } else {
                den *= v.pow(-*e);
            }
        }
        match (zero_num, zero_den) {
            (Some(_), None) => Ok(Q::zero()),
            (None, None) => Ok(num / den),
            (None, Some(f)) => Err(EvalError::Pole { factor: f.to_string() }),
            (Some(_), Some(f)) => Err(EvalError::Indeterminate { factor: f.to_string() }),
        }
    }

    pub fn eval_line(&self, line: &FamilyLine) -> Result<RatFunc, EvalError> {
        let c = line.coords();
        let mut num = RatFunc::constant(self.coeff.clone());
        let mut den = RatFunc::constant(Q::one());
        let mut vanishing = false;
        for (f, e) in &self.factors {
            let v = f.eval_line(c);
            if v.is_zero() {
                if *e < 0 {
                    return Err(EvalError::UndefinedOnLine(format!(
                        "factor {f} vanishes identically in the denominator on the {} line",
                        line.family
                    )));
                }
                vanishing = true;
                continue;
            }
            for _ in 0..e.abs() {
                if *e > 0 {
                    num = num.mul(&v);
                } else {
                    den = den.mul(&v);
                }
            }
        }
        if vanishing {
            return Ok(RatFunc::constant(Q::zero()));
        }
        Ok(num.div(&den).expect("nonzero denominator"))
    }

    /// Parses a product such as `-2(2a+1)(b-1)^2 c` over a product
    /// denominator. Variables are `a`, `b`, `c`; a bare number is a prefactor.
    pub fn parse(num: &str, den: &str) -> Factored {
        let n = parse_product(num);
        let d = parse_product(den);
        n.div(&d)
    }

    pub fn with_poly(&self, poly: &str, exp: i32) -> Factored {
        let (s, p) = Poly3::canonical(parse_poly(poly));
        let mut r = self.clone();
        r.push_scaled(s, Factor::Poly(p), exp);
        r
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_q(&self.coeff))?;
        for (x, e) in &self.factors {
            if *e == 1 {
                write!(f, "·{x}")?;
            } else {
                write!(f, "·{x}^{e}")?;
            }
        }
        Ok(())
    }
}

fn var_index(ch: char) -> Option<usize> {
    match ch {
        'a' => Some(0),
        'b' => Some(1),
        'c' => Some(2),
        _ => None,
    }
}

fn read_int(chars: &[char], i: &mut usize) -> Option<i64> {
    let start = *i;
    while *i < chars.len() && chars[*i].is_ascii_digit() {
        *i += 1;
    }
    if *i == start {
        None
    } else {
        Some(chars[start..*i].iter().collect::<String>().parse().unwrap())
    }
}

fn read_exp(chars: &[char], i: &mut usize) -> i64 {
    if *i < chars.len() && chars[*i] == '^' {
        *i += 1;
        read_int(chars, i).expect("exponent")
    } else {
        1
    }
}

/// Parses a sum of signed terms `k·a^i b^j c^l`.
fn parse_poly(s: &str) -> Vec<([u32; 3], i64)> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let mut sign = 1;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let k = read_int(&chars, &mut i).unwrap_or(1);
        let mut e = [0u32; 3];
        while i < chars.len() {
            match var_index(chars[i]) {
                Some(v) => {
                    i += 1;
                    e[v] += read_exp(&chars, &mut i) as u32;
                }
                None => break,
            }
        }
        out.push((e, sign * k));
    }
    out
}

fn parse_linear(s: &str) -> Option<(i64, LinearForm)> {
    let mut c = [0i64; 3];
    let mut k = 0i64;
    for (e, v) in parse_poly(s) {
        let d: u32 = e.iter().sum();
        match d {
            0 => k += v,
            1 => c[e.iter().position(|x| *x == 1).unwrap()] += v,
            _ => panic!("nonlinear factor {s:?}"),
        }
    }
    LinearForm::on_plane(c[0], c[1], c[2], k)
}

fn parse_product(s: &str) -> Factored {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let mut r = Factored::constant(Q::one());
    let mut i = 0;
    if i < chars.len() && chars[i] == '-' {
        r.coeff = -r.coeff;
        i += 1;
    }
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_ascii_digit() {
            let k = read_int(&chars, &mut i).unwrap();
            r.coeff *= qi(k);
        } else if ch == '(' {
            let close = i + chars[i..].iter().position(|c| *c == ')').expect("unbalanced");
            let inner: String = chars[i + 1..close].iter().collect();
            i = close + 1;
            let e = read_exp(&chars, &mut i) as i32;
            match parse_linear(&inner) {
                Some((s, l)) => r.push_scaled(s, Factor::Lin(l), e),
                None => r.coeff = Q::zero(),
            }
        } else if let Some(v) = var_index(ch) {
            i += 1;
            let e = read_exp(&chars, &mut i) as i32;
            let mut x = [0i64; 3];
            x[v] = 1;
            let (s, l) = LinearForm::on_plane(x[0], x[1], x[2], 0).unwrap();
            r.push_scaled(s, Factor::Lin(l), e);
        } else {
            panic!("unexpected {ch:?} in {s:?}");
        }
    }
    r
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::vparams::{algebra_point, Family};

    #[test]
    fn plane_reduction_identifies_factors() {
        // (a - 1) = -(a + 2b + 2c) on the plane
        let (s, l) = LinearForm::on_plane(1, 0, 0, -1).unwrap();
        assert_eq!((s, l.coeffs()), (-1, [1, 2, 2]));
        // 2a + 2b + 2c - 1 vanishes identically
        assert!(LinearForm::on_plane(2, 2, 2, -1).is_none());
        let x = Factored::parse("(a+b-1)", "(c+1)");
        // a + b - 1 = -(c + 1/2); ratio with (c + 1) is not constant
        assert_eq!(x.factors().count(), 2);
        let y = Factored::parse("(2a+2b-1)", "c");
        assert_eq!(y, Factored::constant(qi(-2)));
    }

    #[test]
    fn dim_g_on_sl3_and_line() {
        let g = Factored::parse("(a-1)(b-1)(c-1)", "abc");
        let p = algebra_point(&"sl3".parse().unwrap()).unwrap();
        assert_eq!(g.eval_point(&p).unwrap(), qi(8));
        let line = FamilyLine::new(Family::Sl);
        let f = g.eval_line(&line).unwrap();
        assert_eq!(f.eval(&qi(5)), Some(qi(24)));
    }

    #[test]
    fn pole_and_indeterminate() {
        let f = Factored::parse("(a+b)", "(b-c)");
        let p = algebra_point(&"so8".parse().unwrap()).unwrap();
        assert!(matches!(f.eval_point(&p), Err(EvalError::Pole { .. })));
        let g = Factored::parse("(b-c)", "(b-c)(a+b)");
        // the (b-c) cancels symbolically
        assert_eq!(g.eval_point(&p).unwrap(), q(1, 1) / (q(-1, 6) + q(1, 3)));
    }
}
