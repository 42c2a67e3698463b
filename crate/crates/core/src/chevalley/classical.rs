//! Matrix realizations of sl(N), so(N), sp(N) in their split forms, used as
//! a second construction to compare against the Chevalley basis.

use super::LieAlgebra;
use crate::linalg::{self, Mat};
use crate::rational::Q;
use crate::vparams::AlgebraId;
use num_traits::{One, Zero};

/// A Lie algebra spanned by explicit N×N matrices.
pub struct MatrixAlgebra {
    pub n: usize,
    pub basis: Vec<Mat>,
    /// Rows of the reduced echelon form of the flattened basis, with the
    /// transformation back to the original basis.
    pivots: Vec<usize>,
    to_basis: Mat,
}

fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = vec![vec![Q::zero(); n]; n];
    m[i][j] = Q::one();
    m
}

fn add(a: &Mat, b: &Mat, s: i64) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, t)| r.iter().zip(t).map(|(x, y)| x + y * Q::from_integer(s.into())).collect())
        .collect()
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    add(&linalg::mul(a, b), &linalg::mul(b, a), -1)
}

fn trace(a: &Mat) -> Q {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

impl MatrixAlgebra {
    pub fn realize(alg: &AlgebraId) -> Option<MatrixAlgebra> {
        let basis = match *alg {
            AlgebraId::Sl(n) => {
                let n = n as usize;
                let mut b = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            b.push(unit(n, i, j));
                        }
                    }
                }
                for i in 0..n - 1 {
                    b.push(add(&unit(n, i, i), &unit(n, i + 1, i + 1), -1));
                }
                b
            }
            // x^T J + J x = 0 with J the antidiagonal: x = J·A, A antisymmetric
            AlgebraId::So(n) => {
                let n = n as usize;
                let mut b = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        b.push(add(&unit(n, n - 1 - i, j), &unit(n, n - 1 - j, i), -1));
                    }
                }
                b
            }
            // x^T Ω + Ω x = 0 with Ω = [[0, I], [−I, 0]]: x = Ω·S, S symmetric
            AlgebraId::Sp(n) => {
                let n = n as usize;
                let r = n / 2;
                let omega_row = |i: usize| if i < r { (i + r, 1) } else { (i - r, -1) };
                let mut b = Vec::new();
                for i in 0..n {
                    for j in i..n {
                        let mut m = vec![vec![Q::zero(); n]; n];
                        for (p, q) in [(i, j), (j, i)] {
                            // (Ω S)[row][q] = Ω[row][p] S[p][q] where Ω[row][p] ≠ 0
                            let (row, s) = (0..n).map(|row| (row, omega_row(row))).find(|(_, (c, _))| *c == p).map(|(row, (_, s))| (row, s)).unwrap();
                            m[row][q] = Q::from_integer(s.into());
                        }
                        b.push(m);
                    }
                }
                b
            }
            AlgebraId::Ex(_) => return None,
        };
        let n = basis[0].len();
        let mut aug: Mat = basis
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let mut row: Vec<Q> = m.iter().flatten().cloned().collect();
                row.extend((0..basis.len()).map(|j| if j == k { Q::one() } else { Q::zero() }));
                row
            })
            .collect();
        let piv = linalg::rref(&mut aug);
        assert_eq!(piv.len(), basis.len(), "matrix basis is not independent");
        let to_basis = aug.iter().map(|r| r[n * n..].to_vec()).collect();
        Some(MatrixAlgebra { n, basis, pivots: piv, to_basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a matrix in the span of the basis.
    pub fn coords(&self, m: &Mat) -> Vec<Q> {
        let flat: Vec<&Q> = m.iter().flatten().collect();
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = flat[p];
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                out[j] += c * &self.to_basis[k][j];
            }
        }
        out
    }

    fn ad(&self, a: usize) -> Mat {
        let d = self.dim();
        let cols: Vec<Vec<Q>> = (0..d).map(|b| self.coords(&commutator(&self.basis[a], &self.basis[b]))).collect();
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn killing(&self) -> Mat {
        let d = self.dim();
        let ads: Vec<Mat> = (0..d).map(|a| self.ad(a)).collect();
        let mut k = vec![vec![Q::zero(); d]; d];
        for a in 0..d {
            for b in a..d {
                let t = trace(&linalg::mul(&ads[a], &ads[b]));
                k[a][b] = t.clone();
                k[b][a] = t;
            }
        }
        k
    }

    pub fn trace_form(&self) -> Mat {
        let d = self.dim();
        (0..d).map(|a| (0..d).map(|b| trace(&linalg::mul(&self.basis[a], &self.basis[b]))).collect()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct ClassicalComparison {
    /// κ = c · tr(XY) on the matrix realization.
    pub proportionality: Q,
    pub same_dimension: bool,
    pub same_signature: bool,
}

/// Compares a Chevalley-basis algebra with its matrix realization.
pub fn compare(alg: &AlgebraId, g: &LieAlgebra) -> Result<ClassicalComparison, String> {
    let m = MatrixAlgebra::realize(alg).ok_or_else(|| format!("{alg} has no classical realization"))?;
    let k = m.killing();
    let t = m.trace_form();
    let mut ratio: Option<Q> = None;
    for a in 0..m.dim() {
        for b in 0..m.dim() {
            if t[a][b].is_zero() {
                if !k[a][b].is_zero() {
                    return Err("Killing form not proportional to the trace form".into());
                }
                continue;
            }
            let r = &k[a][b] / &t[a][b];
            match &ratio {
                None => ratio = Some(r),
                Some(x) if *x != r => return Err("Killing form not proportional to the trace form".into()),
                _ => {}
            }
        }
    }
    let kc: Mat = g.killing().iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
    Ok(ClassicalComparison {
        proportionality: ratio.ok_or("trace form vanishes")?,
        same_dimension: m.dim() == g.dim(),
        same_signature: linalg::inertia(&k) == linalg::inertia(&kc),
    })
}
