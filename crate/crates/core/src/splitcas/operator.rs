//! The split Casimir Ĉ_(n) = Σ_{i<j} g^ab (X_a on slot i)(X_b on slot j).

use crate::chevalley::LieAlgebra;
use crate::rational::Q;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum OperatorError {
    #[error("vector has length {got}, expected d^n = {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("tensor power must be 2, 3 or 4, got {0}")]
    Power(usize),
}

pub struct SplitCasimirOperator<'a> {
    pub alg: &'a LieAlgebra,
    pub n: usize,
    /// Ĉ_12(x_p ⊗ x_q) = Σ c·(x_u ⊗ x_v) / denom, with integer c.
    pair: Vec<Vec<(usize, usize, i64)>>,
    denom: BigInt,
}

impl<'a> SplitCasimirOperator<'a> {
    pub fn new(alg: &'a LieAlgebra, n: usize) -> Result<Self, OperatorError> {
        if !(2..=4).contains(&n) {
            return Err(OperatorError::Power(n));
        }
        let d = alg.dim();
        let ginv = alg.killing_inverse();
        let denom = crate::rational::denom_lcm(ginv.iter().flatten().map(|(_, x)| x));
        let dq = Q::from_integer(denom.clone());
        let mut pair = vec![Vec::new(); d * d];
        for p in 0..d {
            for q in 0..d {
                let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                for a in 0..d {
                    let left = alg.bracket(a, p);
                    if left.is_empty() {
                        continue;
                    }
                    for (b, g) in &ginv[a] {
                        let right = alg.bracket(*b, q);
                        if right.is_empty() {
                            continue;
                        }
                        let g = (g * &dq).to_integer().to_i64().expect("scaled inverse Killing entry");
                        for &(u, x) in left {
                            for &(v, y) in right {
                                *acc.entry((u, v)).or_insert(0) += g * x * y;
                            }
                        }
                    }
                }
                pair[p * d + q] = acc.into_iter().filter(|(_, c)| *c != 0).map(|((u, v), c)| (u, v, c)).collect();
            }
        }
        Ok(SplitCasimirOperator { alg, n, pair, denom })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Common denominator of the pair coefficients.
    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    /// Integer pair coefficients, to be divided by `denom`.
    pub fn pair(&self, p: usize, q: usize) -> &[(usize, usize, i64)] {
        &self.pair[p * self.dim() + q]
    }

    /// Σ_{i<j} Ĉ_ij on a basis tuple, scaled by `denom`.
    pub fn apply_tuple_scaled(&self, t: &[usize], mut emit: impl FnMut(&[usize], i64)) {
        let mut out = t.to_vec();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                for &(u, v, c) in self.pair(t[i], t[j]) {
                    out[i] = u;
                    out[j] = v;
                    emit(&out, c);
                }
                out[i] = t[i];
                out[j] = t[j];
            }
        }
    }

    pub fn tensor_len(&self) -> usize {
        self.dim().pow(self.n as u32)
    }

    pub fn encode(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.dim() + x)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let d = self.dim();
        let mut t = vec![0; self.n];
        for k in (0..self.n).rev() {
            t[k] = idx % d;
            idx /= d;
        }
        t
    }

    /// Ĉ_(n) v for a dense vector indexed with slot 0 most significant.
    /// Computed straight from g^ab and the brackets, matrix-free.
    pub fn apply_casimir(&self, v: &[Q]) -> Result<Vec<Q>, OperatorError> {
        if v.len() != self.tensor_len() {
            return Err(OperatorError::DimensionMismatch { got: v.len(), expected: self.tensor_len() });
        }
        let mut out = vec![Q::zero(); v.len()];
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = self.decode(idx);
            for (k, c) in self.apply_basis(&t) {
                out[k] += x * c;
            }
        }
        Ok(out)
    }

    /// Ĉ_(n) on one basis tuple as (encoded index, coefficient) pairs.
    pub fn apply_basis(&self, t: &[usize]) -> BTreeMap<usize, Q> {
        let d = self.dim();
        let ginv = self.alg.killing_inverse();
        let mut out: BTreeMap<usize, Q> = BTreeMap::new();
        let mut s = t.to_vec();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                for a in 0..d {
                    let left = self.alg.bracket(a, t[i]);
                    if left.is_empty() {
                        continue;
                    }
                    for (b, g) in &ginv[a] {
                        for &(u, x) in left {
                            for &(w, y) in self.alg.bracket(*b, t[j]) {
                                s[i] = u;
                                s[j] = w;
                                *out.entry(self.encode(&s)).or_insert_with(Q::zero) += g * Q::from_integer((x * y).into());
                            }
                        }
                    }
                }
                s[i] = t[i];
                s[j] = t[j];
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}
