//! Exact trace moments of the block matrices, the Vandermonde solve for
//! multiplicities, and the annihilator check.

use super::blocks::ModuleBlocks;
use super::modular::{hessenberg, hessenberg_charpoly_top, power_sums, primes_for_bits, trace_bound_bits, Crt, Modulus};
use crate::linalg;
use crate::rational::{fmt_q, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::hash::{Hash, Hasher};

/// Σ_μ |Wμ| tr(A_μ^k) for k = 0..=kmax, exact.
pub fn integer_moments(mb: &ModuleBlocks, kmax: usize) -> Vec<BigInt> {
    if mb.blocks.is_empty() {
        return vec![BigInt::zero(); kmax + 1];
    }
    let bound: Vec<(usize, u64, f64)> = mb.blocks.iter().map(|b| (b.orbit, b.m as u64, b.norm_inf())).collect();
    // one extra bit for the sign
    let primes = primes_for_bits(trace_bound_bits(&bound, kmax) + 1);
    let residues: Vec<Vec<u64>> = primes.par_iter().map(|md| moments_mod(md, mb, kmax)).collect();
    (0..=kmax)
        .map(|k| {
            let mut crt = Crt::default();
            for (md, r) in primes.iter().zip(&residues) {
                crt.push(md, r[k]);
            }
            crt.symmetric()
        })
        .collect()
}

fn moments_mod(md: &Modulus, mb: &ModuleBlocks, kmax: usize) -> Vec<u64> {
    let mut acc = vec![0u64; kmax + 1];
    for b in &mb.blocks {
        let mut h: Vec<u64> = b.a.iter().map(|&x| md.from_i64(x)).collect();
        hessenberg(md, &mut h, b.m);
        let c = hessenberg_charpoly_top(md, &h, b.m, kmax);
        let ps = power_sums(md, &c, b.m, kmax);
        let w = md.reduce(b.orbit as u64);
        for k in 0..=kmax {
            acc[k] = md.add(acc[k], md.mul(w, ps[k]));
        }
    }
    acc
}

/// τ_k = Σ_μ |Wμ| tr(M_μ^k): the moments of Ĉ on the multiplicity space.
pub fn multiplicity_moments(mb: &ModuleBlocks, kmax: usize) -> Vec<Q> {
    let mut sk = BigInt::one();
    integer_moments(mb, kmax)
        .into_iter()
        .map(|t| {
            let r = Q::new(t, sk.clone());
            sk *= &mb.scale;
            r
        })
        .collect()
}

/// A candidate eigenvalue with the catalog labels that share it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub eigenvalue: Q,
    pub labels: Vec<String>,
}

/// Merges (eigenvalue, label) pairs by exact equality, sorted by eigenvalue.
pub fn merge_candidates(pairs: impl IntoIterator<Item = (Q, String)>) -> Vec<Candidate> {
    let mut map: std::collections::BTreeMap<Q, Vec<String>> = Default::default();
    for (e, l) in pairs {
        let v = map.entry(e).or_default();
        if !v.contains(&l) {
            v.push(l);
        }
    }
    map.into_iter().map(|(eigenvalue, labels)| Candidate { eigenvalue, labels }).collect()
}

#[derive(Debug, thiserror::Error)]
pub enum SpectrumError {
    #[error("merged candidate list is empty")]
    EmptyCandidates,
    #[error("candidate eigenvalue list incomplete or wrong: {detail}")]
    Incomplete { detail: String },
}

/// Solves Σ_j m_j λ_j^k = τ_k for k < r and checks the remaining moments.
pub fn solve_multiplicities(cands: &[Candidate], tau: &[Q]) -> Result<Vec<u64>, SpectrumError> {
    let r = cands.len();
    if r == 0 {
        return Err(SpectrumError::EmptyCandidates);
    }
    assert!(tau.len() >= r, "need at least as many moments as candidates");
    let mut aug: linalg::Mat = (0..r)
        .map(|k| {
            let mut row: Vec<Q> = cands.iter().map(|c| pow_q(&c.eigenvalue, k)).collect();
            row.push(tau[k].clone());
            row
        })
        .collect();
    linalg::rref(&mut aug);
    let m: Vec<Q> = aug.iter().map(|row| row[r].clone()).collect();
    let residuals: Vec<(usize, Q)> = (r..tau.len())
        .map(|k| {
            let pred: Q = cands.iter().zip(&m).map(|(c, x)| x * pow_q(&c.eigenvalue, k)).sum();
            (k, &tau[k] - pred)
        })
        .filter(|(_, d)| !d.is_zero())
        .collect();
    let bad: Vec<String> = cands
        .iter()
        .zip(&m)
        .filter(|(_, x)| !x.is_integer() || x.is_negative())
        .map(|(c, x)| format!("eigenvalue {} gets {}", fmt_q(&c.eigenvalue), fmt_q(x)))
        .collect();
    if !bad.is_empty() || !residuals.is_empty() {
        let mut parts = bad;
        parts.extend(residuals.iter().map(|(k, d)| format!("moment {k} residual {}", fmt_q(d))));
        return Err(SpectrumError::Incomplete { detail: parts.join("; ") });
    }
    Ok(m.iter().map(|x| u64::try_from(x.to_integer()).expect("multiplicity fits u64")).collect())
}

fn pow_q(x: &Q, k: usize) -> Q {
    let mut r = Q::one();
    for _ in 0..k {
        r *= x;
    }
    r
}

/// Result of applying Π (Ĉ − λ) to random vectors of the Young image.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AnnihilatorReport {
    pub vectors: usize,
    pub passed: bool,
    /// Hashes of vectors that survived, with their weight.
    pub failures: Vec<String>,
}

/// Every block gets at least one vector and at least `min_vectors` are
/// drawn in total, round-robin.
pub fn annihilator_check(mb: &ModuleBlocks, eigenvalues: &[Q], min_vectors: usize, seed: u64) -> AnnihilatorReport {
    let nb = mb.blocks.len();
    if nb == 0 {
        return AnnihilatorReport { vectors: 0, passed: true, failures: vec![] };
    }
    let count = min_vectors.max(nb);
    let s = Q::from_integer(mb.scale.clone());
    // λ·s = a/b with b > 0
    let factors: Vec<(BigInt, BigInt)> = eigenvalues
        .iter()
        .map(|l| {
            let t = l * &s;
            (t.numer().clone(), t.denom().clone())
        })
        .collect();
    let sparse: Vec<Vec<Vec<(usize, i64)>>> = mb
        .blocks
        .iter()
        .map(|b| {
            (0..b.m)
                .map(|i| (0..b.m).filter_map(|j| Some((j, b.a[i * b.m + j])).filter(|(_, x)| *x != 0)).collect())
                .collect()
        })
        .collect();
    let failures: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|v| {
            let bi = v % nb;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let b = &mb.blocks[bi];
            let x0: Vec<BigInt> = (0..b.m).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect();
            let mut x = x0.clone();
            for (num, den) in &factors {
                let y: Vec<BigInt> = sparse[bi]
                    .iter()
                    .zip(&x)
                    .map(|(row, xi)| {
                        let ax: BigInt = row.iter().map(|&(j, c)| &x[j] * c).sum();
                        ax * den - num * xi
                    })
                    .collect();
                let g = y.iter().fold(BigInt::zero(), |g, t| g.gcd(t));
                x = if g.is_zero() { y } else { y.into_iter().map(|t| t / &g).collect() };
            }
            if x.iter().all(|t| t.is_zero()) {
                None
            } else {
                let mut h = std::collections::hash_map::DefaultHasher::new();
                x0.hash(&mut h);
                Some(format!("{:016x} at weight {:?}", h.finish(), b.weight))
            }
        })
        .collect();
    AnnihilatorReport { vectors: count, passed: failures.is_empty(), failures }
}
