//! Decomposition tables of Sym², ∧², ∧³ and the five S₄ modules of g⊗4.

use super::catalog::{dimpoly, Provenance};
use super::label::{Base, Label, X3Kind};
use crate::rational::{fmt_q, Q};
use num_traits::Zero;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Module {
    Sym2,
    Asym2,
    Asym3,
    Sym4,
    Hook31,
    Window,
    Hook211,
    Asym4,
}

impl Module {
    pub const ALL: [Module; 8] = [
        Module::Sym2,
        Module::Asym2,
        Module::Asym3,
        Module::Sym4,
        Module::Hook31,
        Module::Window,
        Module::Hook211,
        Module::Asym4,
    ];
    pub const FOURTH: [Module; 5] = [Module::Sym4, Module::Hook31, Module::Window, Module::Hook211, Module::Asym4];
    pub const WARMUP: [Module; 3] = [Module::Sym2, Module::Asym2, Module::Asym3];

    /// Tensor power n.
    pub fn degree(&self) -> usize {
        match self {
            Module::Sym2 | Module::Asym2 => 2,
            Module::Asym3 => 3,
            _ => 4,
        }
    }

    /// Partition of n labelling the S_n irrep.
    pub fn partition(&self) -> &'static [usize] {
        match self {
            Module::Sym2 => &[2],
            Module::Asym2 => &[1, 1],
            Module::Asym3 => &[1, 1, 1],
            Module::Sym4 => &[4],
            Module::Hook31 => &[3, 1],
            Module::Window => &[2, 2],
            Module::Hook211 => &[2, 1, 1],
            Module::Asym4 => &[1, 1, 1, 1],
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            Module::Sym2 => "sym2",
            Module::Asym2 => "asym2",
            Module::Asym3 => "asym3",
            Module::Sym4 => "4",
            Module::Hook31 => "31",
            Module::Window => "22",
            Module::Hook211 => "211",
            Module::Asym4 => "1111",
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Module::Sym2 => "Sym2",
            Module::Asym2 => "Alt2",
            Module::Asym3 => "Alt3",
            Module::Sym4 => "(4)",
            Module::Hook31 => "(3,1)",
            Module::Window => "(2,2)",
            Module::Hook211 => "(2,1,1)",
            Module::Asym4 => "(1,1,1,1)",
        })
    }
}

impl Serialize for Module {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

impl FromStr for Module {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let t: String = s.chars().filter(|c| !"(), ".contains(*c)).collect::<String>().to_ascii_lowercase();
        Module::ALL
            .into_iter()
            .find(|m| m.code() == t)
            .ok_or_else(|| format!("unknown module {s:?} (expected one of 4, 31, 22, 211, 1111, sym2, asym2, asym3)"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionTable {
    pub module: Module,
    pub entries: Vec<(Label, u32)>,
    /// Closed-form total as a polynomial in d, lowest coefficient first.
    #[serde(serialize_with = "crate::rational::ser_q_vec")]
    pub total: Vec<Q>,
}

fn orbit(base: Base, mult: u32) -> Vec<(Label, u32)> {
    Label::orbit(base).into_iter().map(|l| (l, mult)).collect()
}

fn one(base: Base, mult: u32) -> Vec<(Label, u32)> {
    vec![(Label::plain(base), mult)]
}

const X3: Base = Base::X3(X3Kind::X3);

/// The table as printed, except that the window module drops the standalone
/// 𝕏₃ entry under the corrected provenance.
pub fn module_table(module: Module, prov: Provenance) -> DecompositionTable {
    let parts: Vec<Vec<(Label, u32)>> = match module {
        Module::Sym2 => vec![one(Base::One, 1), orbit(Base::Y2, 1)],
        Module::Asym2 => vec![one(Base::Adj, 1), one(Base::X2, 1)],
        Module::Asym3 => vec![one(Base::One, 1), one(Base::X2, 1), orbit(Base::Y2, 1), one(X3, 1)],
        Module::Asym4 => vec![
            one(Base::Adj, 1),
            one(Base::X2, 1),
            one(X3, 1),
            one(Base::X4, 1),
            orbit(Base::C, 1),
            orbit(Base::B, 1),
            orbit(Base::Y2, 1),
        ],
        Module::Sym4 => vec![
            one(Base::One, 2),
            orbit(Base::J, 1),
            one(Base::X2, 1),
            one(Base::X3(X3Kind::Z3Sym), 1),
            orbit(Base::Y2, 3),
            orbit(Base::C, 1),
            orbit(Base::Y4, 1),
            orbit(Base::D, 1),
        ],
        Module::Window => {
            let mut v = vec![one(Base::One, 2), orbit(Base::E, 1), orbit(Base::J, 1)];
            if prov == Provenance::AsPrinted {
                v.push(one(X3, 1));
            }
            v.extend([
                one(Base::X3(X3Kind::Z3Win), 1),
                one(Base::X2, 2),
                orbit(Base::H, 1),
                orbit(Base::Y2, 4),
                orbit(Base::B, 1),
                orbit(Base::C, 2),
                orbit(Base::D, 1),
            ]);
            v
        }
        Module::Hook31 => vec![
            one(Base::Adj, 3),
            orbit(Base::E, 1),
            one(Base::X3(X3Kind::K3), 1),
            one(Base::X2, 6),
            orbit(Base::G, 1),
            orbit(Base::F, 1),
            orbit(Base::Y2, 3),
            orbit(Base::B, 3),
            orbit(Base::C, 3),
            orbit(Base::Y3, 1),
            orbit(Base::D, 1),
        ],
        Module::Hook211 => vec![
            one(Base::Adj, 4),
            orbit(Base::E, 1),
            one(Base::X3(X3Kind::L3), 1),
            one(Base::X2, 7),
            orbit(Base::I, 1),
            orbit(Base::F, 1),
            orbit(Base::Y2, 1),
            orbit(Base::B, 4),
            orbit(Base::C, 3),
            orbit(Base::Y3, 1),
        ],
    };
    DecompositionTable { module, entries: parts.concat(), total: module_total(module) }
}

/// Dimension of the multiplicity space of the S_n irrep as a polynomial in d.
pub fn module_total(module: Module) -> Vec<Q> {
    let r = |k: i64, roots: &[i64]| dimpoly::from_roots(Q::new(1.into(), k.into()), roots);
    match module {
        Module::Sym2 => r(2, &[0, -1]),
        Module::Asym2 => r(2, &[0, 1]),
        Module::Asym3 => r(6, &[0, 1, 2]),
        Module::Sym4 => r(24, &[0, -1, -2, -3]),
        Module::Asym4 => r(24, &[0, 1, 2, 3]),
        Module::Window => r(12, &[0, 0, 1, -1]),
        Module::Hook31 => r(8, &[0, 1, -1, -2]),
        Module::Hook211 => r(8, &[2, 1, 0, -1]),
    }
}

pub fn eval_total(module: Module, d: &Q) -> Q {
    let mut acc = Q::zero();
    for k in module_total(module).iter().rev() {
        acc = acc * d + k;
    }
    acc
}

pub fn fmt_total(module: Module) -> String {
    module_total(module).iter().map(fmt_q).collect::<Vec<_>>().join(", ")
}

/// Dimension of the S_n irrep with the given partition (n ≤ 4).
pub fn irrep_dim(partition: &[usize]) -> u32 {
    match partition {
        [_] => 1,
        [1, 1] | [1, 1, 1] | [1, 1, 1, 1] => 1,
        [2, 1] => 2,
        [3, 1] | [2, 1, 1] => 3,
        [2, 2] => 2,
        _ => panic!("unsupported partition {partition:?}"),
    }
}
