//! Concrete simple Lie algebras in a Chevalley basis, with exact structure
//! constants and the Killing form computed from ad-traces.

pub mod classical;
pub mod roots;

pub use roots::{CartanType, RootSystem};

use crate::linalg;
use crate::rational::{fmt_q, Q};
use crate::vparams::AlgebraId;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{HashMap, HashSet};

#[derive(Debug, thiserror::Error)]
pub enum ChevalleyError {
    #[error("unsupported algebra: {0}")]
    Unsupported(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// A simple Lie algebra over Q.
///
/// Basis order: the simple coroots h_1..h_r, then e_α for the positive roots
/// (by height, then descending coefficient vector), then e_{-α} in the same
/// order. All structure constants are integers in this basis.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub name: String,
    pub roots: RootSystem,
    dim: usize,
    labels: Vec<String>,
    weights: Vec<Vec<i64>>,
    brackets: Vec<Vec<(usize, i64)>>,
    killing: Vec<Vec<i64>>,
    killing_inv: Vec<Vec<(usize, Q)>>,
}

impl LieAlgebra {
    pub fn build(alg: &AlgebraId) -> Result<LieAlgebra, ChevalleyError> {
        let t = CartanType::of(alg).map_err(ChevalleyError::Unsupported)?;
        let mut g = Self::from_type(t)?;
        g.name = alg.to_string();
        Ok(g)
    }

    pub fn from_type(t: CartanType) -> Result<LieAlgebra, ChevalleyError> {
        let rs = RootSystem::new(t).map_err(ChevalleyError::Unsupported)?;
        let r = rs.rank;
        let nroots = rs.roots.len();
        let dim = r + nroots;
        let mut labels: Vec<String> = (1..=r).map(|i| format!("h{i}")).collect();
        let mut weights = vec![vec![0i64; r]; r];
        for (i, v) in rs.roots.iter().enumerate() {
            let body = rs.roots[i % rs.num_positive()].iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            labels.push(if rs.is_positive(i) { format!("e({body})") } else { format!("f({body})") });
            weights.push(v.clone());
        }
        let n = rs.structure_constants();
        let mut brackets = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                let out: Vec<(usize, i64)> = match (a < r, b < r) {
                    (true, true) => vec![],
                    (true, false) => {
                        let k = rs.pairing(&rs.roots[b - r], a);
                        if k == 0 {
                            vec![]
                        } else {
                            vec![(b, k)]
                        }
                    }
                    (false, true) => {
                        let k = rs.pairing(&rs.roots[a - r], b);
                        if k == 0 {
                            vec![]
                        } else {
                            vec![(a, -k)]
                        }
                    }
                    (false, false) => {
                        let (x, y) = (a - r, b - r);
                        if rs.neg(x) == y {
                            rs.coroot(x).into_iter().enumerate().filter(|(_, c)| *c != 0).collect()
                        } else if let Some(s) = rs.sum(x, y) {
                            vec![(s + r, n[&(x, y)])]
                        } else {
                            vec![]
                        }
                    }
                };
                brackets[a * dim + b] = out;
            }
        }
        let mut g = LieAlgebra {
            name: t.to_string(),
            roots: rs,
            dim,
            labels,
            weights,
            brackets,
            killing: vec![],
            killing_inv: vec![],
        };
        g.killing = g.killing_by_traces();
        let kq: linalg::Mat = g.killing.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
        let inv = linalg::inverse(&kq).ok_or_else(|| ChevalleyError::Invariant("Killing form degenerate".into()))?;
        g.killing_inv = inv
            .into_iter()
            .map(|row| row.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.roots.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Weight of a basis element in simple-root coordinates.
    pub fn weight(&self, a: usize) -> &[i64] {
        &self.weights[a]
    }

    /// [x_a, x_b] as a sparse combination of basis elements.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.brackets[a * self.dim + b]
    }

    pub fn killing(&self) -> &[Vec<i64>] {
        &self.killing
    }

    /// Rows of the inverse Killing form g^ab, sparse.
    pub fn killing_inverse(&self) -> &[Vec<(usize, Q)>] {
        &self.killing_inv
    }

    /// Bracket of two sparse vectors, densely accumulated.
    pub fn bracket_vec(&self, u: &[(usize, i64)], v: &[(usize, i64)]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim];
        for &(a, x) in u {
            for &(b, y) in v {
                for &(c, z) in self.bracket(a, b) {
                    out[c] += x * y * z;
                }
            }
        }
        out
    }

    fn coef(&self, a: usize, b: usize, c: usize) -> i64 {
        self.bracket(a, b).iter().find(|(i, _)| *i == c).map_or(0, |(_, v)| *v)
    }

    /// κ_ab = tr(ad x_a · ad x_b), summed entry by entry.
    fn killing_by_traces(&self) -> Vec<Vec<i64>> {
        let d = self.dim;
        let mut k = vec![vec![0i64; d]; d];
        for a in 0..d {
            for b in a..d {
                let mut s = 0i64;
                for e in 0..d {
                    for &(c, v) in self.bracket(b, e) {
                        s += v * self.coef(a, c, e);
                    }
                }
                k[a][b] = s;
                k[b][a] = s;
            }
        }
        k
    }

    pub fn check_antisymmetry(&self) -> Result<(), ChevalleyError> {
        for a in 0..self.dim {
            for b in 0..self.dim {
                let mut x: Vec<(usize, i64)> = self.bracket(a, b).to_vec();
                let mut y: Vec<(usize, i64)> = self.bracket(b, a).iter().map(|&(c, v)| (c, -v)).collect();
                x.sort();
                y.sort();
                if x != y {
                    return Err(ChevalleyError::Invariant(format!("[{0},{1}] ≠ −[{1},{0}]", self.labels[a], self.labels[b])));
                }
            }
        }
        Ok(())
    }

    /// Basis triples to check: all of them up to d = 52, a fixed sample above.
    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        if d <= 52 {
            let mut v = Vec::new();
            for a in 0..d {
                for b in a + 1..d {
                    for c in b + 1..d {
                        v.push((a, b, c));
                    }
                }
            }
            v
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
            (0..20000).map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))).collect()
        }
    }

    pub fn check_jacobi(&self) -> Result<(), ChevalleyError> {
        for (a, b, c) in self.triples() {
            let mut s = vec![0i64; self.dim];
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                let inner = self.bracket(y, z);
                let t = self.bracket_vec(&[(x, 1)], inner);
                for (u, v) in s.iter_mut().zip(t) {
                    *u += v;
                }
            }
            if s.iter().any(|&v| v != 0) {
                return Err(ChevalleyError::Invariant(format!(
                    "Jacobi fails on ({}, {}, {})",
                    self.labels[a], self.labels[b], self.labels[c]
                )));
            }
        }
        Ok(())
    }

    /// κ([x,y],z) + κ(y,[x,z]) = 0.
    pub fn check_invariance(&self) -> Result<(), ChevalleyError> {
        let kap = |u: &[(usize, i64)], b: usize| -> i64 { u.iter().map(|&(a, v)| v * self.killing[a][b]).sum() };
        for (x, y, z) in self.triples() {
            for (x, y, z) in [(x, y, z), (y, z, x), (z, x, y)] {
                if kap(self.bracket(x, y), z) + kap(self.bracket(x, z), y) != 0 {
                    return Err(ChevalleyError::Invariant(format!("Killing form not invariant at {}", self.labels[x])));
                }
            }
        }
        Ok(())
    }

    /// Every ad matrix is traceless and ad is a homomorphism.
    pub fn check_adjoint(&self) -> Result<(), ChevalleyError> {
        let d = self.dim;
        for a in 0..d {
            let tr: i64 = (0..d).map(|e| self.coef(a, e, e)).sum();
            if tr != 0 {
                return Err(ChevalleyError::Invariant(format!("ad {} has trace {tr}", self.labels[a])));
            }
        }
        // [ad x_a, ad x_b] x_e = ad([x_a,x_b]) x_e is the Jacobi identity in another order
        self.check_jacobi()
    }

    /// The value of g^ab ad(x_a) ad(x_b) on the adjoint, which must be scalar.
    pub fn quadratic_casimir_check(&self) -> Result<Q, ChevalleyError> {
        let d = self.dim;
        let mut value: Option<Q> = None;
        for e in 0..d {
            let mut col = vec![Q::zero(); d];
            for a in 0..d {
                for (b, gab) in &self.killing_inv[a] {
                    for &(c, x) in self.bracket(*b, e) {
                        for &(f, y) in self.bracket(a, c) {
                            col[f] += gab * Q::from_integer((x * y).into());
                        }
                    }
                }
            }
            for (f, v) in col.iter().enumerate() {
                if f != e && !v.is_zero() {
                    return Err(ChevalleyError::Invariant("Casimir is not diagonal on the adjoint".into()));
                }
            }
            match &value {
                None => value = Some(col[e].clone()),
                Some(v) if *v != col[e] => return Err(ChevalleyError::Invariant("Casimir is not scalar on the adjoint".into())),
                _ => {}
            }
        }
        Ok(value.unwrap_or_else(Q::one))
    }

    /// Runs every structural check; returns the Casimir value.
    pub fn validate(&self) -> Result<Q, ChevalleyError> {
        self.check_antisymmetry()?;
        self.check_adjoint()?;
        self.check_invariance()?;
        self.quadratic_casimir_check()
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        (0..self.rank()).all(|i| self.roots.pairing(w, i) >= 0)
    }

    /// Size of the Weyl group orbit of a weight in the root lattice.
    pub fn weyl_orbit_size(&self, w: &[i64]) -> usize {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(w.to_vec());
        let mut stack = vec![w.to_vec()];
        while let Some(v) = stack.pop() {
            for i in 0..self.rank() {
                let k = self.roots.pairing(&v, i);
                if k == 0 {
                    continue;
                }
                let mut u = v.clone();
                u[i] -= k;
                if seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        seen.len()
    }

    pub fn dump(&self) -> AlgebraDump {
        let mut sc = Vec::new();
        for a in 0..self.dim {
            for b in 0..self.dim {
                for &(c, v) in self.bracket(a, b) {
                    sc.push((a, b, c, v.to_string()));
                }
            }
        }
        AlgebraDump {
            name: self.name.clone(),
            cartan_type: self.roots.cartan_type.to_string(),
            dim: self.dim,
            rank: self.rank(),
            labels: self.labels.clone(),
            structure_constants: sc,
            killing: self.killing.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
            killing_inverse: (0..self.dim)
                .map(|a| {
                    let mut row = vec!["0".to_string(); self.dim];
                    for (b, v) in &self.killing_inv[a] {
                        row[*b] = fmt_q(v);
                    }
                    row
                })
                .collect(),
        }
    }

    /// Index of the basis element by label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Map from weight to the basis elements carrying it.
    pub fn weight_index(&self) -> HashMap<Vec<i64>, Vec<usize>> {
        let mut m: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
        for a in 0..self.dim {
            m.entry(self.weights[a].clone()).or_default().push(a);
        }
        m
    }
}

/// JSON form of an algebra: structure constants as [a, b, c, "p/q"].
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraDump {
    pub name: String,
    pub cartan_type: String,
    pub dim: usize,
    pub rank: usize,
    pub labels: Vec<String>,
    pub structure_constants: Vec<(usize, usize, usize, String)>,
    pub killing: Vec<Vec<String>>,
    pub killing_inverse: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn sl2_basis() {
        let g = LieAlgebra::build(&"sl2".parse().unwrap()).unwrap();
        assert_eq!(g.dim(), 3);
        let (h, e, f) = (0, 1, 2);
        assert_eq!(g.bracket(h, e), &[(e, 2)]);
        assert_eq!(g.bracket(h, f), &[(f, -2)]);
        assert_eq!(g.bracket(e, f), &[(h, 1)]);
        assert_eq!(g.killing()[h][h], 8);
        assert_eq!(g.validate().unwrap(), qi(1));
    }
}
