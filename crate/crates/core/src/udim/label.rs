//! Casimir-eigenspace labels and their prime tags.

use crate::vparams::PermutationS3;
use serde::{Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Variants of the reducible eigenspace with eig₄ = −1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum X3Kind {
    /// 𝕏₃ itself.
    X3,
    /// ℤ₃ inside the symmetric module (4).
    Z3Sym,
    /// ℤ₃ inside the window module (2,2).
    Z3Win,
    K3,
    L3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    One,
    Adj,
    X2,
    X3(X3Kind),
    X4,
    Y2,
    Y3,
    Y4,
    B,
    C,
    J,
    D,
    E,
    H,
    G,
    F,
    I,
}

impl Base {
    pub const ALL: [Base; 21] = [
        Base::One,
        Base::Adj,
        Base::X2,
        Base::X3(X3Kind::X3),
        Base::X3(X3Kind::Z3Sym),
        Base::X3(X3Kind::Z3Win),
        Base::X3(X3Kind::K3),
        Base::X3(X3Kind::L3),
        Base::X4,
        Base::Y2,
        Base::Y3,
        Base::Y4,
        Base::B,
        Base::C,
        Base::J,
        Base::D,
        Base::E,
        Base::H,
        Base::G,
        Base::F,
        Base::I,
    ];

    /// Number of distinct primed copies (1, 3 or 6).
    pub fn orbit_size(&self) -> usize {
        match self {
            Base::One | Base::Adj | Base::X2 | Base::X3(_) | Base::X4 => 1,
            Base::D | Base::F => 6,
            _ => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Base::One => "1",
            Base::Adj => "g",
            Base::X2 => "X2",
            Base::X3(X3Kind::X3) => "X3",
            Base::X3(X3Kind::Z3Sym) | Base::X3(X3Kind::Z3Win) => "Z3",
            Base::X3(X3Kind::K3) => "K3",
            Base::X3(X3Kind::L3) => "L3",
            Base::X4 => "X4",
            Base::Y2 => "Y2",
            Base::Y3 => "Y3",
            Base::Y4 => "Y4",
            Base::B => "B",
            Base::C => "C",
            Base::J => "J",
            Base::D => "D",
            Base::E => "E",
            Base::H => "H",
            Base::G => "G",
            Base::F => "F",
            Base::I => "I",
        }
    }
}

/// Number of primes: 0 = unprimed, 1 = α̂↔β̂, 2 = α̂↔γ̂, 3 = β̂↔γ̂,
/// 4 = substitution α̂→β̂→γ̂→α̂, 5 = substitution α̂→γ̂→β̂→α̂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(pub u8);

impl Prime {
    pub const ALL: [Prime; 6] = [Prime(0), Prime(1), Prime(2), Prime(3), Prime(4), Prime(5)];

    /// The point permutation p with dim(L_prime, x) = dim(L, p·x).
    ///
    /// A substitution α̂→β̂→γ̂→α̂ inside a formula reads the value of β̂ where
    /// α̂ stood, which moves the point values along the opposite cycle.
    pub fn point_action(&self) -> PermutationS3 {
        match self.0 {
            0 => PermutationS3::IDENTITY,
            1 => PermutationS3::SWAP_AB,
            2 => PermutationS3::SWAP_AC,
            3 => PermutationS3::SWAP_BC,
            4 => PermutationS3::CYCLE_ACB,
            5 => PermutationS3::CYCLE_ABC,
            _ => unreachable!(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub base: Base,
    pub prime: Prime,
}

impl Label {
    pub const fn new(base: Base, primes: u8) -> Label {
        Label { base, prime: Prime(primes) }
    }

    pub const fn plain(base: Base) -> Label {
        Label::new(base, 0)
    }

    /// All primed copies of a base, in prime order.
    pub fn orbit(base: Base) -> Vec<Label> {
        (0..base.orbit_size() as u8).map(|p| Label::new(base, p)).collect()
    }

    pub fn is_valid(&self) -> bool {
        (self.prime.0 as usize) < self.base.orbit_size()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base.name(), "'".repeat(self.prime.0 as usize))
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Label {
    type Err = String;

    /// `Z3` parses to the symmetric-module variant; see [`Label::in_module`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().replace('′', "'").replace('″', "''");
        let primes = t.chars().rev().take_while(|c| *c == '\'').count();
        let stem = &t[..t.len() - primes];
        let base = match stem {
            "1" | "X0" => Base::One,
            "g" | "adj" => Base::Adj,
            "X3" => Base::X3(X3Kind::X3),
            "Z3" => Base::X3(X3Kind::Z3Sym),
            "K3" => Base::X3(X3Kind::K3),
            "L3" => Base::X3(X3Kind::L3),
            _ => match Base::ALL.iter().find(|b| b.name() == stem) {
                Some(b) => *b,
                None => return Err(format!("unknown label {s:?}")),
            },
        };
        let l = Label { base, prime: Prime(primes.min(255) as u8) };
        if !l.is_valid() {
            return Err(format!("label {s:?} has too many primes"));
        }
        Ok(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_round_trip() {
        for base in Base::ALL {
            for l in Label::orbit(base) {
                let back: Label = l.to_string().parse().unwrap();
                if base == Base::X3(X3Kind::Z3Win) {
                    assert_eq!(back.base, Base::X3(X3Kind::Z3Sym));
                } else {
                    assert_eq!(back, l);
                }
            }
        }
        assert!("Y2'''".parse::<Label>().is_err());
        assert_eq!("D'''''".parse::<Label>().unwrap(), Label::new(Base::D, 5));
    }
}
