//! Points and family lines of the Vogel plane in the gauge α̂ + β̂ + γ̂ = 1/2.

use crate::poly::{RatFunc, UniPoly};
use crate::rational::{fmt_q, parse_q, q, qi, Q};
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VparamsError {
    #[error("degenerate projective point: coordinates sum to zero")]
    Degenerate,
    #[error("parameter pole: {0}")]
    ParameterPole(String),
    #[error("{0} is outside the valid range")]
    OutOfRange(String),
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VogelPoint {
    c: [Q; 3],
}

impl VogelPoint {
    pub fn alpha_hat(&self) -> &Q {
        &self.c[0]
    }
    pub fn beta_hat(&self) -> &Q {
        &self.c[1]
    }
    pub fn gamma_hat(&self) -> &Q {
        &self.c[2]
    }
    pub fn coords(&self) -> &[Q; 3] {
        &self.c
    }

    /// Parses `a,b,c` (each `p/q`) and normalizes.
    pub fn parse(s: &str) -> Result<VogelPoint, String> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(format!("expected three comma-separated rationals, got {s:?}"));
        }
        let raw = [parse_q(parts[0])?, parse_q(parts[1])?, parse_q(parts[2])?];
        normalize(raw).map_err(|e| e.to_string())
    }
}

impl fmt::Display for VogelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", fmt_q(&self.c[0]), fmt_q(&self.c[1]), fmt_q(&self.c[2]))
    }
}

impl Serialize for VogelPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        for x in &self.c {
            seq.serialize_element(&fmt_q(x))?;
        }
        seq.end()
    }
}

/// Rescales a projective triple so that its coordinates sum to 1/2.
pub fn normalize(raw: [Q; 3]) -> Result<VogelPoint, VparamsError> {
    let s = &raw[0] + &raw[1] + &raw[2];
    if s.is_zero() {
        return Err(VparamsError::Degenerate);
    }
    let k = (s * qi(2)).recip();
    Ok(VogelPoint { c: raw.map(|x| x * &k) })
}

/// A permutation of the three coordinate slots. `img[i]` is the slot that
/// the value in slot `i` moves to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationS3 {
    img: [usize; 3],
}

impl PermutationS3 {
    pub const IDENTITY: PermutationS3 = PermutationS3 { img: [0, 1, 2] };
    pub const SWAP_AB: PermutationS3 = PermutationS3 { img: [1, 0, 2] };
    pub const SWAP_AC: PermutationS3 = PermutationS3 { img: [2, 1, 0] };
    pub const SWAP_BC: PermutationS3 = PermutationS3 { img: [0, 2, 1] };
    /// Moves α̂ → β̂ → γ̂ → α̂.
    pub const CYCLE_ABC: PermutationS3 = PermutationS3 { img: [1, 2, 0] };
    /// Moves α̂ → γ̂ → β̂ → α̂.
    pub const CYCLE_ACB: PermutationS3 = PermutationS3 { img: [2, 0, 1] };

    pub fn all() -> [PermutationS3; 6] {
        [
            Self::IDENTITY,
            Self::SWAP_AB,
            Self::SWAP_AC,
            Self::SWAP_BC,
            Self::CYCLE_ABC,
            Self::CYCLE_ACB,
        ]
    }

    pub fn image(&self, slot: usize) -> usize {
        self.img[slot]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationS3) -> PermutationS3 {
        PermutationS3 { img: [0, 1, 2].map(|i| self.img[other.img[i]]) }
    }

    pub fn inverse(&self) -> PermutationS3 {
        let mut img = [0; 3];
        for i in 0..3 {
            img[self.img[i]] = i;
        }
        PermutationS3 { img }
    }

    pub fn apply<T: Clone>(&self, xs: &[T; 3]) -> [T; 3] {
        let mut out = xs.clone();
        for i in 0..3 {
            out[self.img[i]] = xs[i].clone();
        }
        out
    }
}

pub fn apply_permutation(p: &PermutationS3, pt: &VogelPoint) -> VogelPoint {
    VogelPoint { c: p.apply(&pt.c) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sl,
    So,
    Sp,
    /// The line through the five exceptional points, parametrized by the
    /// dual Coxeter number.
    Exceptional,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sl => "sl",
            Family::So => "so",
            Family::Sp => "sp",
            Family::Exceptional => "exceptional",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyLine {
    pub family: Family,
    coords: [RatFunc; 3],
}

fn rf(num: (i64, i64), den: (i64, i64)) -> RatFunc {
    RatFunc::new(
        UniPoly::linear(qi(num.0), qi(num.1)),
        UniPoly::linear(qi(den.0), qi(den.1)),
    )
}

impl FamilyLine {
    pub fn new(family: Family) -> FamilyLine {
        // (a, b) pairs encode a·N + b
        let coords = match family {
            Family::Sl => [rf((0, -1), (1, 0)), rf((0, 1), (1, 0)), RatFunc::constant(q(1, 2))],
            Family::So => [rf((0, -1), (1, -2)), rf((0, 2), (1, -2)), rf((1, -4), (2, -4))],
            Family::Sp => [rf((0, 1), (1, 2)), rf((0, -2), (1, 2)), rf((1, 4), (2, 4))],
            Family::Exceptional => [rf((0, -1), (1, 0)), rf((1, 6), (6, 0)), RatFunc::constant(q(1, 3))],
        };
        FamilyLine { family, coords }
    }

    pub fn coords(&self) -> &[RatFunc; 3] {
        &self.coords
    }

    /// The point at parameter `n`, or a pole error if a coordinate blows up.
    pub fn at(&self, n: &Q) -> Result<VogelPoint, VparamsError> {
        let mut c: [Q; 3] = [Q::zero(), Q::zero(), Q::zero()];
        for (i, f) in self.coords.iter().enumerate() {
            c[i] = f.eval(n).ok_or_else(|| {
                VparamsError::ParameterPole(format!("{} line at N = {}", self.family, fmt_q(n)))
            })?;
        }
        Ok(VogelPoint { c })
    }

    pub fn coordinate_sum(&self) -> RatFunc {
        self.coords[0].add(&self.coords[1]).add(&self.coords[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exceptional {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Exceptional {
    pub const ALL: [Exceptional; 5] =
        [Exceptional::G2, Exceptional::F4, Exceptional::E6, Exceptional::E7, Exceptional::E8];

    pub fn dual_coxeter(&self) -> i64 {
        match self {
            Exceptional::G2 => 4,
            Exceptional::F4 => 9,
            Exceptional::E6 => 12,
            Exceptional::E7 => 18,
            Exceptional::E8 => 30,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Exceptional::G2 => "g2",
            Exceptional::F4 => "f4",
            Exceptional::E6 => "e6",
            Exceptional::E7 => "e7",
            Exceptional::E8 => "e8",
        }
    }

    /// Table values, written out independently of the exceptional line.
    pub fn table_point(&self) -> VogelPoint {
        let c = match self {
            Exceptional::G2 => [q(-1, 4), q(5, 12), q(1, 3)],
            Exceptional::F4 => [q(-1, 9), q(5, 18), q(1, 3)],
            Exceptional::E6 => [q(-1, 12), q(1, 4), q(1, 3)],
            Exceptional::E7 => [q(-1, 18), q(2, 9), q(1, 3)],
            Exceptional::E8 => [q(-1, 30), q(1, 5), q(1, 3)],
        };
        VogelPoint { c }
    }
}

/// A simple Lie algebra from the Vogel table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    Sl(u32),
    So(u32),
    Sp(u32),
    Ex(Exceptional),
}

impl AlgebraId {
    /// The family line carrying this algebra and its parameter there.
    pub fn line(&self) -> (FamilyLine, Q) {
        match self {
            AlgebraId::Sl(n) => (FamilyLine::new(Family::Sl), qi(*n as i64)),
            AlgebraId::So(n) => (FamilyLine::new(Family::So), qi(*n as i64)),
            AlgebraId::Sp(n) => (FamilyLine::new(Family::Sp), qi(*n as i64)),
            AlgebraId::Ex(e) => (FamilyLine::new(Family::Exceptional), qi(e.dual_coxeter())),
        }
    }

    /// Dimension from the classical closed forms (used as an independent check).
    pub fn classical_dim(&self) -> u64 {
        match *self {
            AlgebraId::Sl(n) => (n as u64).pow(2) - 1,
            AlgebraId::So(n) => (n as u64) * (n as u64 - 1) / 2,
            AlgebraId::Sp(n) => (n as u64) * (n as u64 + 1) / 2,
            AlgebraId::Ex(Exceptional::G2) => 14,
            AlgebraId::Ex(Exceptional::F4) => 52,
            AlgebraId::Ex(Exceptional::E6) => 78,
            AlgebraId::Ex(Exceptional::E7) => 133,
            AlgebraId::Ex(Exceptional::E8) => 248,
        }
    }

    pub fn validate(&self) -> Result<(), VparamsError> {
        let bad = |s: String| Err(VparamsError::OutOfRange(s));
        match *self {
            AlgebraId::Sl(0) => Err(VparamsError::ParameterPole("sl(0): α̂ = −1/N".into())),
            AlgebraId::Sl(n) if n < 2 => bad(format!("sl({n})")),
            AlgebraId::So(2) => Err(VparamsError::ParameterPole("so(2): N − 2 = 0".into())),
            // so(4) = sl(2) ⊕ sl(2) is not simple
            AlgebraId::So(n) if n < 3 || n == 4 => bad(format!("so({n})")),
            AlgebraId::Sp(n) if n < 2 || n % 2 == 1 => bad(format!("sp({n})")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::Sl(n) => write!(f, "sl{n}"),
            AlgebraId::So(n) => write!(f, "so{n}"),
            AlgebraId::Sp(n) => write!(f, "sp{n}"),
            AlgebraId::Ex(e) => f.write_str(e.name()),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = VparamsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.trim().to_ascii_lowercase().chars().filter(|c| !"() ".contains(*c)).collect();
        for e in Exceptional::ALL {
            if t == e.name() {
                return Ok(AlgebraId::Ex(e));
            }
        }
        let unknown = || VparamsError::UnknownAlgebra(s.to_string());
        if t.len() < 3 {
            return Err(unknown());
        }
        let (fam, num) = t.split_at(2);
        let n: u32 = num.parse().map_err(|_| unknown())?;
        let id = match fam {
            "sl" => AlgebraId::Sl(n),
            "so" => AlgebraId::So(n),
            "sp" => AlgebraId::Sp(n),
            _ => return Err(unknown()),
        };
        id.validate()?;
        Ok(id)
    }
}

/// The Vogel point of an algebra, straight from the table entries.
pub fn algebra_point(alg: &AlgebraId) -> Result<VogelPoint, VparamsError> {
    alg.validate()?;
    let c = match *alg {
        AlgebraId::Sl(n) => {
            let n = n as i64;
            [q(-1, n), q(1, n), q(1, 2)]
        }
        AlgebraId::So(n) => {
            let n = n as i64;
            [q(-1, n - 2), q(2, n - 2), q(n - 4, 2 * n - 4)]
        }
        AlgebraId::Sp(n) => {
            let n = n as i64;
            [q(1, n + 2), q(-2, n + 2), q(n + 4, 2 * n + 4)]
        }
        AlgebraId::Ex(e) => return Ok(e.table_point()),
    };
    Ok(VogelPoint { c })
}

/// Point on a classical family line for any integer `n` with finite coordinates.
pub fn family_point(family: Family, n: i64) -> Result<VogelPoint, VparamsError> {
    FamilyLine::new(family).at(&qi(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_points() {
        let p = algebra_point(&"sl3".parse().unwrap()).unwrap();
        assert_eq!(p.coords(), &[q(-1, 3), q(1, 3), q(1, 2)]);
        let p = algebra_point(&"so8".parse().unwrap()).unwrap();
        assert_eq!(p.coords(), &[q(-1, 6), q(1, 3), q(1, 3)]);
        assert!(matches!("so2".parse::<AlgebraId>(), Err(VparamsError::ParameterPole(_))));
        assert!("sp5".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn exceptional_line_hits_table() {
        let line = FamilyLine::new(Family::Exceptional);
        for e in Exceptional::ALL {
            assert_eq!(line.at(&qi(e.dual_coxeter())).unwrap(), e.table_point());
        }
    }

    #[test]
    fn permutations_form_a_group() {
        let all = PermutationS3::all();
        for a in all {
            assert_eq!(a.compose(&a.inverse()), PermutationS3::IDENTITY);
            for b in all {
                assert!(all.contains(&a.compose(&b)));
            }
        }
        let pt = [qi(1), qi(2), qi(3)];
        assert_eq!(PermutationS3::CYCLE_ABC.apply(&pt), [qi(3), qi(1), qi(2)]);
    }
}
