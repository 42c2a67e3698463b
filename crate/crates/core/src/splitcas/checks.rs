//! Random-vector checks of the operator and projector algebra on sparse
//! tensors.

use super::operator::SplitCasimirOperator;
use super::symmetric::{GroupElement, IsotypicProjector, Perm};
use crate::rational::Q;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Sparse tensor: encoded basis index → coefficient.
pub type Sparse = BTreeMap<usize, Q>;

fn add_into(acc: &mut Sparse, k: usize, c: Q) {
    let e = acc.entry(k).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&k);
    }
}

pub fn random_sparse(op: &SplitCasimirOperator<'_>, terms: usize, rng: &mut ChaCha8Rng) -> Sparse {
    let mut v = Sparse::new();
    for _ in 0..terms {
        let idx = rng.gen_range(0..op.tensor_len());
        add_into(&mut v, idx, Q::from_integer(rng.gen_range(-4i64..=4).into()));
    }
    v
}

pub fn apply_casimir(op: &SplitCasimirOperator<'_>, v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&k, c) in v {
        for (j, x) in op.apply_basis(&op.decode(k)) {
            add_into(&mut out, j, c * x);
        }
    }
    out
}

pub fn apply_group(op: &SplitCasimirOperator<'_>, g: &GroupElement, v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&k, c) in v {
        let t = op.decode(k);
        for (s, x) in &g.terms {
            add_into(&mut out, op.encode(&s.act(&t)), c * x);
        }
    }
    out
}

/// Σ_slots ad(X_a) acting on every tensor slot.
pub fn apply_diagonal(op: &SplitCasimirOperator<'_>, a: usize, v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&k, c) in v {
        let t = op.decode(k);
        for i in 0..t.len() {
            let mut s = t.clone();
            for &(u, x) in op.alg.bracket(a, t[i]) {
                s[i] = u;
                add_into(&mut out, op.encode(&s), c * Q::from_integer(x.into()));
            }
        }
    }
    out
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    match n {
        2 => vec![vec![2], vec![1, 1]],
        3 => vec![vec![3], vec![2, 1], vec![1, 1, 1]],
        4 => vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]],
        _ => unreachable!(),
    }
}

/// P_R² = P_R, P_R P_Q = 0 and Σ P_R = 1 on random sparse vectors.
pub fn check_projectors(op: &SplitCasimirOperator<'_>, vectors: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ps: Vec<IsotypicProjector> = partitions(op.n).iter().map(|p| IsotypicProjector::new(p)).collect();
    for _ in 0..vectors {
        let v = random_sparse(op, 3, &mut rng);
        let images: Vec<Sparse> = ps.iter().map(|p| apply_group(op, &p.element, &v)).collect();
        let mut sum = Sparse::new();
        for (i, pv) in images.iter().enumerate() {
            for (j, q) in ps.iter().enumerate() {
                let w = apply_group(op, &q.element, pv);
                if i == j && &w != pv {
                    return Err(format!("P_{:?} is not idempotent", ps[i].partition));
                }
                if i != j && !w.is_empty() {
                    return Err(format!("P_{:?} P_{:?} ≠ 0", q.partition, ps[i].partition));
                }
            }
            for (k, c) in pv {
                add_into(&mut sum, *k, c.clone());
            }
        }
        if sum != v {
            return Err("projectors do not sum to the identity".into());
        }
    }
    Ok(())
}

/// σĈv = Ĉσv for every σ ∈ S_n.
pub fn check_permutation_commutation(op: &SplitCasimirOperator<'_>, vectors: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..vectors {
        let v = random_sparse(op, 3, &mut rng);
        let cv = apply_casimir(op, &v);
        for s in Perm::all(op.n) {
            let g = GroupElement { n: op.n, terms: vec![(s.clone(), Q::from_integer(1.into()))] };
            if apply_group(op, &g, &cv) != apply_casimir(op, &apply_group(op, &g, &v)) {
                return Err(format!("Ĉ does not commute with slot permutation {:?}", s.0));
            }
        }
    }
    Ok(())
}

/// [Ĉ, Σ_slots ad X_a] v = 0 for random a and v.
pub fn check_diagonal_commutation(op: &SplitCasimirOperator<'_>, vectors: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..vectors {
        let v = random_sparse(op, 3, &mut rng);
        let a = rng.gen_range(0..op.dim());
        let lhs = apply_casimir(op, &apply_diagonal(op, a, &v));
        let rhs = apply_diagonal(op, a, &apply_casimir(op, &v));
        if lhs != rhs {
            return Err(format!("Ĉ does not commute with the diagonal action of {}", op.alg.labels()[a]));
        }
    }
    Ok(())
}
