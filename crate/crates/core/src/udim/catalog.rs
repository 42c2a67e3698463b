//! Universal dimension formulas and split-Casimir eigenvalues.

use super::formula::{EvalError, Factored};
use super::label::{Base, Label, X3Kind};
use super::tables::{module_table, Module};
use crate::poly::{RatFunc, UniPoly};
use crate::rational::{q, qi, Q};
use crate::vparams::{Family, FamilyLine, VogelPoint};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    AsPrinted,
    #[default]
    Corrected,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::AsPrinted => "as-printed",
            Provenance::Corrected => "corrected",
        })
    }
}

impl std::str::FromStr for Provenance {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "as-printed" | "printed" => Ok(Provenance::AsPrinted),
            "corrected" => Ok(Provenance::Corrected),
            _ => Err(format!("unknown provenance {s:?}")),
        }
    }
}

/// Where a stored formula comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Printed,
    Corrected,
    /// Not printed; fitted to the Cartan-power pattern and checked against
    /// Weyl-formula dimensions.
    Derived,
    /// Defined by subtraction or by the universal ℤ₃ form.
    Composite,
}

pub const Y2_NUM: &str = "-(3a-1)(b-1)(a+b-1)(c-1)(a+c-1)";
pub const Y2_DEN_PRINTED: &str = "2a^2(a-1)b(a-c)c";
pub const Y2_DEN_CORRECTED: &str = "2a^2(a-b)b(a-c)c";

const I_POLY: &str = "4a^10 - 14a^9b - 14a^9c - 32a^8b^2 - 8a^8bc - 32a^8c^2 + 116a^7b^3 + 259a^7b^2c \
+ 259a^7bc^2 + 116a^7c^3 + 116a^6b^4 + 116a^6b^3c + 196a^6b^2c^2 + 116a^6bc^3 + 116a^6c^4 - 310a^5b^5 \
- 1963a^5b^4c - 4762a^5b^3c^2 - 4762a^5b^2c^3 - 1963a^5bc^4 - 310a^5c^5 - 296a^4b^6 - 2634a^4b^5c \
- 9263a^4b^4c^2 - 13706a^4b^3c^3 - 9263a^4b^2c^4 - 2634a^4bc^5 - 296a^4c^6 + 256a^3b^7 + 500a^3b^6c \
- 2938a^3b^5c^2 - 10206a^3b^4c^3 - 10206a^3b^3c^4 - 2938a^3b^2c^5 + 500a^3bc^6 + 256a^3c^7 \
+ 352a^2b^8 + 4248a^2b^7c + 20252a^2b^6c^2 + 48516a^2b^5c^3 + 64320a^2b^4c^4 + 48516a^2b^3c^5 \
+ 20252a^2b^2c^6 + 4248a^2bc^7 + 352a^2c^8 + 96ab^9 + 2976ab^8c + 20712ab^7c^2 + 65496ab^6c^3 \
+ 112896ab^5c^4 + 112896ab^4c^5 + 65496ab^3c^6 + 20712ab^2c^7 + 2976abc^8 + 96ac^9 + 576b^9c \
+ 5184b^8c^2 + 19728b^7c^3 + 41472b^6c^4 + 52704b^5c^5 + 41472b^4c^6 + 19728b^3c^7 + 5184b^2c^8 \
+ 576bc^9";

fn factored_base(base: Base, prov: Provenance) -> Option<Factored> {
    let f = Factored::parse;
    Some(match base {
        Base::One => Factored::constant(Q::one()),
        Base::Adj => f("(a-1)(b-1)(c-1)", "abc"),
        Base::Y2 => match prov {
            Provenance::AsPrinted => f(Y2_NUM, Y2_DEN_PRINTED),
            Provenance::Corrected => f(Y2_NUM, Y2_DEN_CORRECTED),
        },
        Base::Y3 => f("-(a-1)(5a-1)(b-1)(a+b-1)(2a+b-1)(c-1)(a+c-1)(2a+c-1)", "6a^3b(a-b)(2a-b)c(a-c)(2a-c)"),
        Base::Y4 => f(
            "-(a-1)(2a-1)(7a-1)(b-1)(a+b-1)(2a+b-1)(3a+b-1)(c-1)(a+c-1)(2a+c-1)(3a+c-1)",
            "24a^4(a-b)(2a-b)(3a-b)b(a-c)(2a-c)(3a-c)c",
        ),
        Base::B => f(
            "-(a-1)(b-1)(2a+b)(2b+1)(3b-1)(c-1)(2a+c)(2c+1)(3c-1)",
            "8a^2(a-b)b^2(b-2c)(a-c)(2b-c)c^2",
        ),
        Base::C => f(
            "-2(2a+1)(b-1)(2b+1)(c-1)(b+c)(2b+c)(2c+1)(b+2c)",
            "3a^3(a-2b)(a-b)b(a-2c)(a-c)c",
        ),
        Base::J => f(
            "(a+b)(a+c)(2a+b-c)(2a+2b-c)(2a-b+c)(a+2b+c)(2a+2b+c)(2a-b+2c)(a+b+2c)(2a+b+2c)(a+2b+2c)",
            "4a^2b^2c^2(a-b)(a-c)(b-2c)(b-c)^2(2b-c)(a-b-c)",
        ),
        Base::D => f(
            "(3a-2b-2c)(a-b-2c)(b+c)(a+b+c)(2a+b+c)(2b+c)(a+2b+c)(2a+2b+c)(a+2c)(2a-b+2c)(a+b+2c)(2a+b+2c)(a+2b+2c)",
            "a^3(a-b)^2(3a-b)b^2(a-2c)(a-c)(2a-c)(b-c)c",
        ),
        Base::E => f(
            "64(a+b)(2a+b)(a+2b)(a+c)(2a+c)(a+2c)(a+b+c)(a+2b+c)(2a+2b+c)(a+b+2c)(2a+b+2c)(a+2b+2c)",
            "ab^2c^2(a-b)(a-c)(b-3c)(b-c)^2(3b-c)(2a-b-c)",
        ),
        Base::H => f(
            "(a+2b)(3a-2b-2c)(a-b-2c)(a-2b-c)(2a+b+c)(2b+c)(a+2b+c)(2a+2b+c)(a+2c)(b+2c)(a+b+2c)(2a+b+2c)(a+2b+2c)",
            "12a^4(a-2b)(a-b)^2b^2(a-2c)(a-c)^2(2a-b-c)c^2",
        ),
        Base::G => f(
            "-(2b+c)(b+2c)(a-2b-2c)(a-b-2c)(a-2b-c)(a+b+c)(2a+b+c)(a+2b+c)(2a+2b+c)(a+b+2c)(2a+b+2c)(a+2b+2c)",
            "2a^4bc(a-b)^2(2a-b)(a-c)^2(2a-c)",
        ),
        Base::F => f(
            "-(a+c)(2b+c)(a-2b-2c)(a-b-2c)(a+b+c)^2(2a+b+c)(a+2b+c)(2a+2b+c)(2a-b+2c)(a+b+2c)(2a+b+2c)(a+2b+2c)",
            "a^3b^2c^2(a-b)^2(2a-b)(a-c)^2(b-c)",
        ),
        Base::I => f(
            "-(a+b+c)(a+2b+c)(2a+2b+c)(a+b+2c)(2a+b+2c)",
            "2a^4b^2c^2(a-3b)(a-2b)(a-b)(a-3c)(a-2c)(a-c)(a-b-c)",
        )
        .with_poly(I_POLY, 1),
        _ => return None,
    })
}

/// The printed factored form of dim X₂ (the catalog evaluates d(d−3)/2).
pub fn printed_x2() -> Factored {
    Factored::parse("(2a+1)(2b+1)(2c+1)(1-a)(1-b)(1-c)", "8a^2b^2c^2")
}

/// The diff correction term of the universal ℤ₃ form.
pub fn diff_formula() -> Factored {
    Factored::parse(
        "-16(a+b)(2a+b)(a+2b)(a+c)(2a+c)(a+2c)(b+c)(2b+c)(b+2c)(a-2b-2c)(2a+2b-c)(2a+2b+c)(2a-b+2c)(2a+b+2c)(a+2b+2c)",
        "a^2b^2c^2(a-2b)(2a-b)(a-2c)(2a-c)(b-2c)(2b-c)(a-b-c)(a+b-c)(a-b+c)",
    )
}

/// Expression trees over factored formulas and polynomials in d = dim g.
#[derive(Clone, Debug)]
pub enum Expr {
    Fac(Factored),
    /// Coefficients of a polynomial in d, lowest first.
    DimPoly(Vec<Q>),
    Sum(Vec<(Q, Expr)>),
    Prod(Vec<Expr>),
}

/// Evaluation target: a point (values in Q) or a family line (values in Q(N)).
pub trait Domain {
    type V: Clone;
    fn fac(&self, f: &Factored) -> Result<Self::V, EvalError>;
    fn constant(&self, x: Q) -> Self::V;
    fn add(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn mul(&self, x: &Self::V, y: &Self::V) -> Self::V;
    fn scale(&self, k: &Q, x: &Self::V) -> Self::V;
}

pub struct AtPoint<'a>(pub &'a VogelPoint);

impl Domain for AtPoint<'_> {
    type V = Q;
    fn fac(&self, f: &Factored) -> Result<Q, EvalError> {
        f.eval_point(self.0)
    }
    fn constant(&self, x: Q) -> Q {
        x
    }
    fn add(&self, x: &Q, y: &Q) -> Q {
        x + y
    }
    fn mul(&self, x: &Q, y: &Q) -> Q {
        x * y
    }
    fn scale(&self, k: &Q, x: &Q) -> Q {
        k * x
    }
}

pub struct OnLine<'a>(pub &'a FamilyLine);

impl Domain for OnLine<'_> {
    type V = RatFunc;
    fn fac(&self, f: &Factored) -> Result<RatFunc, EvalError> {
        f.eval_line(self.0)
    }
    fn constant(&self, x: Q) -> RatFunc {
        RatFunc::constant(x)
    }
    fn add(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        x.add(y)
    }
    fn mul(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        x.mul(y)
    }
    fn scale(&self, k: &Q, x: &RatFunc) -> RatFunc {
        x.scale(k)
    }
}

impl Expr {
    pub fn eval<D: Domain>(&self, dom: &D, dim_g: &Factored) -> Result<D::V, EvalError> {
        match self {
            Expr::Fac(f) => dom.fac(f),
            Expr::DimPoly(c) => {
                let d = dom.fac(dim_g)?;
                let mut acc = dom.constant(Q::zero());
                for k in c.iter().rev() {
                    acc = dom.add(&dom.mul(&acc, &d), &dom.constant(k.clone()));
                }
                Ok(acc)
            }
            Expr::Sum(terms) => {
                let mut acc = dom.constant(Q::zero());
                for (k, e) in terms {
                    acc = dom.add(&acc, &dom.scale(k, &e.eval(dom, dim_g)?));
                }
                Ok(acc)
            }
            Expr::Prod(fs) => {
                let mut acc = dom.constant(Q::one());
                for e in fs {
                    acc = dom.mul(&acc, &e.eval(dom, dim_g)?);
                }
                Ok(acc)
            }
        }
    }
}

fn poly_from_roots(scale: Q, roots: &[i64]) -> Vec<Q> {
    let mut p = UniPoly::constant(scale);
    for r in roots {
        p = p.mul(&UniPoly::linear(Q::one(), qi(-*r)));
    }
    p.coeffs().to_vec()
}

/// Closed forms in d used throughout.
pub mod dimpoly {
    use super::*;

    pub fn x2() -> Vec<Q> {
        poly_from_roots(q(1, 2), &[0, 3])
    }
    pub fn x3() -> Vec<Q> {
        poly_from_roots(q(1, 6), &[0, 1, 8])
    }
    pub fn x4() -> Vec<Q> {
        poly_from_roots(q(1, 24), &[0, 1, 3, 14])
    }
    pub fn half_d_plus_3() -> Vec<Q> {
        poly_from_roots(q(1, 2), &[-3])
    }
    /// Σ scale·Π(d − root).
    pub fn from_roots(scale: Q, roots: &[i64]) -> Vec<Q> {
        poly_from_roots(scale, roots)
    }
}

/// eig₄ as k + x·α̂ + y·β̂ + z·γ̂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinExpr {
    pub k: Q,
    pub abc: [Q; 3],
}

impl LinExpr {
    fn new(k: Q, a: Q, b: Q, c: Q) -> LinExpr {
        LinExpr { k, abc: [a, b, c] }
    }

    pub fn eval(&self, p: &VogelPoint) -> Q {
        let c = p.coords();
        &self.k + &self.abc[0] * &c[0] + &self.abc[1] * &c[1] + &self.abc[2] * &c[2]
    }

    fn permuted(&self, p: &crate::vparams::PermutationS3) -> LinExpr {
        LinExpr { k: self.k.clone(), abc: [0, 1, 2].map(|i| self.abc[p.image(i)].clone()) }
    }
}

/// The 4-split eigenvalue of the unprimed base label.
fn eig4_base(base: Base) -> LinExpr {
    let z = Q::zero;
    let l = |k: Q, a: Q, b: Q, c: Q| LinExpr::new(k, a, b, c);
    match base {
        // the trivial representation has c₂ = 0, hence (0 − 4)/2
        Base::One => l(qi(-2), z(), z(), z()),
        Base::Adj => l(q(-3, 2), z(), z(), z()),
        Base::X2 => l(qi(-1), z(), z(), z()),
        Base::X3(_) => l(q(-1, 2), z(), z(), z()),
        Base::X4 => l(z(), z(), z(), z()),
        Base::Y2 => l(qi(-1), qi(-1), z(), z()),
        Base::Y3 => l(q(-1, 2), qi(-3), z(), z()),
        Base::Y4 => l(z(), qi(-6), z(), z()),
        Base::B => l(qi(-1), qi(1), z(), z()),
        Base::C => l(q(-1, 2), q(-3, 2), z(), z()),
        Base::J => l(z(), z(), qi(-2), qi(-2)),
        Base::D => l(z(), qi(-3), qi(-1), z()),
        Base::E => l(z(), z(), q(-3, 2), q(-3, 2)),
        Base::H => l(z(), qi(-3), z(), z()),
        Base::G => l(z(), qi(-4), z(), z()),
        Base::I => l(z(), qi(-2), z(), z()),
        Base::F => l(z(), qi(-2), qi(-1), z()),
    }
}

pub fn eig4(label: &Label) -> LinExpr {
    eig4_base(label.base).permuted(&label.prime.point_action())
}

/// Normalized quadratic Casimir c₂ = 4 + 2·eig₄ (so c₂(g) = 1).
pub fn c2(label: &Label, pt: &VogelPoint) -> Q {
    qi(4) + qi(2) * eig4(label).eval(pt)
}

/// Eigenvalue of the n-split Casimir: (c₂ − n)/2.
pub fn casimir_eigenvalue(label: &Label, pt: &VogelPoint, n: u32) -> Q {
    (c2(label, pt) - qi(n as i64)) / qi(2)
}

/// Irreducible content of the eig₄ = −1/2 spaces on a classical family:
/// multiplicities of (X̂₃, X̃₃).
pub fn x3_content(kind: X3Kind, family: Family) -> Option<(u32, u32)> {
    match (family, kind) {
        (Family::Sl | Family::So, X3Kind::X3) => Some((1, 1)),
        (Family::Sl, X3Kind::Z3Sym) => Some((2, 0)),
        (Family::So, X3Kind::Z3Sym) => Some((1, 1)),
        (Family::Sl, X3Kind::Z3Win) => Some((3, 1)),
        (Family::So, X3Kind::Z3Win) => Some((2, 2)),
        (Family::Sl, X3Kind::K3) => Some((3, 1)),
        (Family::So, X3Kind::K3) => Some((2, 1)),
        (Family::Sl, X3Kind::L3) => Some((2, 2)),
        (Family::So, X3Kind::L3) => Some((2, 1)),
        _ => None,
    }
}

/// Multiple of the irreducible X₃ on the exceptional line.
pub fn x3_exceptional_multiple(kind: X3Kind) -> u32 {
    match kind {
        X3Kind::Z3Win => 2,
        _ => 1,
    }
}

/// (dim X̂₃, dim X̃₃) as polynomials in N for sl(N) and so(N).
pub fn x3_split(family: Family) -> Option<(UniPoly, UniPoly)> {
    let n2 = |k: i64| UniPoly::new(vec![qi(-k), Q::zero(), Q::one()]);
    let lin = |k: i64| UniPoly::linear(Q::one(), qi(k));
    let n = UniPoly::x();
    match family {
        Family::Sl => Some((
            n2(1).pow(2).mul(&n2(9)).scale(&q(1, 9)),
            n2(1).mul(&n2(4)).mul(&n2(9)).scale(&q(1, 18)),
        )),
        Family::So => Some((
            n2(16).mul(&lin(-3)).mul(&n2(1)).mul(&n).scale(&q(1, 72)),
            lin(-5).mul(&n2(1)).mul(&n.pow(2)).mul(&lin(2)).scale(&q(1, 144)),
        )),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FormulaInfo {
    pub label: Label,
    pub origin: Origin,
    pub note: &'static str,
}

/// All formulas for one provenance choice.
#[derive(Clone, Debug)]
pub struct Catalog {
    provenance: Provenance,
    dim_g: Factored,
    base: HashMap<Base, Factored>,
    ratio: Factored,
    diff: Factored,
}

impl Catalog {
    pub fn new(provenance: Provenance) -> Catalog {
        let mut base = HashMap::new();
        for b in Base::ALL {
            if let Some(f) = factored_base(b, provenance) {
                base.insert(b, f);
            }
        }
        let orbit = |b: Base| -> Factored {
            let f = &base[&b];
            (0..3u8).fold(Factored::constant(Q::one()), |acc, p| {
                acc.mul(&f.permuted(&super::label::Prime(p).point_action()))
            })
        };
        let ratio = orbit(Base::B).div(&orbit(Base::Y2));
        Catalog { provenance, dim_g: base[&Base::Adj].clone(), base, ratio, diff: diff_formula() }
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn dim_g(&self) -> &Factored {
        &self.dim_g
    }

    /// dim B·dim B′·dim B″ / (dim Y₂·dim Y₂′·dim Y₂″), cancelled symbolically.
    pub fn ratio(&self) -> &Factored {
        &self.ratio
    }

    pub fn diff(&self) -> &Factored {
        &self.diff
    }

    /// The factored formula of a label, when it has one.
    pub fn factored(&self, label: &Label) -> Option<Factored> {
        self.base.get(&label.base).map(|f| f.permuted(&label.prime.point_action()))
    }

    fn z3_tail(&self) -> Vec<(Q, Expr)> {
        vec![
            (Q::one(), Expr::Prod(vec![Expr::DimPoly(dimpoly::half_d_plus_3()), Expr::Fac(self.ratio.clone())])),
            (Q::one(), Expr::Fac(self.diff.clone())),
        ]
    }

    pub fn expr(&self, label: &Label) -> Expr {
        match label.base {
            Base::X2 => Expr::DimPoly(dimpoly::x2()),
            Base::X3(X3Kind::X3) => Expr::DimPoly(dimpoly::x3()),
            Base::X4 => Expr::DimPoly(dimpoly::x4()),
            Base::X3(X3Kind::Z3Sym) => {
                let mut t = vec![(Q::one(), Expr::DimPoly(dimpoly::x3()))];
                t.extend(self.z3_tail());
                Expr::Sum(t)
            }
            Base::X3(X3Kind::Z3Win) => {
                let mut t = vec![(qi(2), Expr::DimPoly(dimpoly::x3()))];
                t.extend(self.z3_tail());
                Expr::Sum(t)
            }
            Base::X3(X3Kind::K3) => {
                let tab = module_table(Module::Hook31, self.provenance);
                let mut t = vec![(Q::one(), Expr::DimPoly(tab.total.clone()))];
                for (l, m) in &tab.entries {
                    if l.base != Base::X3(X3Kind::K3) {
                        t.push((qi(-(*m as i64)), self.expr(l)));
                    }
                }
                Expr::Sum(t)
            }
            Base::X3(X3Kind::L3) => {
                let mut t = vec![(Q::one(), self.expr(&Label::plain(Base::X3(X3Kind::K3))))];
                t.extend(self.z3_tail().into_iter().map(|(k, e)| (-k, e)));
                Expr::Sum(t)
            }
            _ => Expr::Fac(self.factored(label).expect("factored label")),
        }
    }

    pub fn dim(&self, label: &Label, pt: &VogelPoint) -> Result<Q, EvalError> {
        self.expr(label).eval(&AtPoint(pt), &self.dim_g)
    }

    /// The label's dimension as a reduced rational function along a line.
    pub fn dim_line_function(&self, label: &Label, line: &FamilyLine) -> Result<RatFunc, EvalError> {
        self.expr(label).eval(&OnLine(line), &self.dim_g)
    }

    pub fn dim_on_line(&self, label: &Label, line: &FamilyLine, n: &Q) -> Result<Q, EvalError> {
        let f = self.dim_line_function(label, line)?;
        f.eval(n).ok_or_else(|| {
            EvalError::UndefinedOnLine(format!("{label} has a pole at N = {n} on the {} line", line.family))
        })
    }

    /// Point evaluation, falling back to the family line when the point is a
    /// removable singularity. The flag reports whether the line was used.
    pub fn dim_with_fallback(
        &self,
        label: &Label,
        pt: &VogelPoint,
        line: Option<(&FamilyLine, &Q)>,
    ) -> Result<(Q, bool), EvalError> {
        match self.dim(label, pt) {
            Ok(v) => Ok((v, false)),
            Err(e @ (EvalError::Pole { .. } | EvalError::Indeterminate { .. })) => match line {
                Some((l, n)) => Ok((self.dim_on_line(label, l, n)?, true)),
                None => Err(e),
            },
            Err(e) => Err(e),
        }
    }

    pub fn info(&self, label: &Label) -> FormulaInfo {
        let (origin, note) = match label.base {
            Base::Y2 if self.provenance == Provenance::Corrected => {
                (Origin::Corrected, "denominator factor (α̂−1) replaced by (α̂−β̂)")
            }
            Base::C => (Origin::Printed, "the factor printed with an unhatted α is read as (α̂−2γ̂)"),
            Base::Y3 => (Origin::Derived, "Cartan-cube pattern, checked against Weyl dimensions"),
            Base::X3(X3Kind::X3) => (Origin::Printed, ""),
            Base::X3(_) => (Origin::Composite, "universal ℤ₃ form or subtraction"),
            _ => (Origin::Printed, ""),
        };
        FormulaInfo { label: *label, origin, note }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vparams::algebra_point;

    #[test]
    fn sl3_values() {
        let cat = Catalog::new(Provenance::Corrected);
        let p = algebra_point(&"sl3".parse().unwrap()).unwrap();
        let d = |s: &str| cat.dim(&s.parse().unwrap(), &p).unwrap();
        assert_eq!(d("g"), qi(8));
        assert_eq!(d("X4"), qi(-70));
        assert_eq!(d("Y2"), qi(27));
        let printed = Catalog::new(Provenance::AsPrinted);
        assert_eq!(printed.dim(&"Y2".parse().unwrap(), &p).unwrap(), q(27, 2));
    }

    #[test]
    fn eigenvalue_shift() {
        let p = algebra_point(&"g2".parse().unwrap()).unwrap();
        for b in Base::ALL {
            for l in Label::orbit(b) {
                let d = casimir_eigenvalue(&l, &p, 4) - casimir_eigenvalue(&l, &p, 2);
                assert_eq!(d, qi(-1));
            }
        }
    }
}
