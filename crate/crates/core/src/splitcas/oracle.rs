//! Dense reference spectrum: Ĉ on the full isotypic image P_R(g⊗n) per
//! weight space, exact characteristic polynomials, and root stripping
//! against the candidate list. Meant for small algebras only.

use super::blocks::{distinct_arrangements, pattern_of};
use super::modular::{hessenberg, hessenberg_charpoly_top, primes_for_bits, Crt};
use super::moments::Candidate;
use super::operator::SplitCasimirOperator;
use super::symmetric::{irrep_dim, GroupElement, IsotypicProjector};
use crate::linalg;
use crate::poly::UniPoly;
use crate::rational::{fmt_q, Q};
use crate::udim::Module;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("characteristic polynomial has roots outside the candidate list (leftover degree {0})")]
    UnexplainedRoots(usize),
    #[error("isotypic multiplicity {total} at eigenvalue {eigenvalue} is not divisible by dim R = {dim_r}")]
    NotDivisible { eigenvalue: String, total: usize, dim_r: usize },
}

/// Multiplicity-space dimension per candidate eigenvalue.
pub fn dense_spectrum(
    op: &SplitCasimirOperator<'_>,
    module: Module,
    candidates: &[Candidate],
) -> Result<Vec<(Q, u64)>, OracleError> {
    let proj = IsotypicProjector::new(module.partition());
    let dim_r = irrep_dim(module.partition()) as usize;
    let mut counts = vec![0usize; candidates.len()];
    let mut weights: BTreeMap<Vec<i64>, Vec<Vec<usize>>> = BTreeMap::new();
    let d = op.dim();
    let r = op.alg.rank();
    // all sorted tuples, grouped by weight (no Weyl reduction)
    let mut cur = vec![0usize; op.n];
    loop {
        let mut w = vec![0i64; r];
        for &x in &cur {
            for (a, b) in w.iter_mut().zip(op.alg.weight(x)) {
                *a += b;
            }
        }
        weights.entry(w).or_default().push(cur.clone());
        // next nondecreasing tuple
        let Some(i) = (0..op.n).rev().find(|&i| cur[i] + 1 < d) else { break };
        let v = cur[i] + 1;
        for c in &mut cur[i..] {
            *c = v;
        }
    }
    for sets in weights.values() {
        let m = block_matrix(op, &proj.element, sets);
        if m.is_empty() {
            continue;
        }
        let mut chi = charpoly(&m);
        for (k, c) in candidates.iter().enumerate() {
            let (mult, rest) = chi.root_multiplicity(&c.eigenvalue);
            counts[k] += mult;
            chi = rest;
        }
        let left = chi.degree().unwrap_or(0);
        if left > 0 {
            return Err(OracleError::UnexplainedRoots(left));
        }
    }
    candidates
        .iter()
        .zip(counts)
        .map(|(c, total)| {
            if total % dim_r != 0 {
                return Err(OracleError::NotDivisible { eigenvalue: fmt_q(&c.eigenvalue), total, dim_r });
            }
            Ok((c.eigenvalue.clone(), (total / dim_r) as u64))
        })
        .collect()
}

/// Ĉ on the image of `elem` restricted to the span of all arrangements of
/// the given sorted tuples, in the reduced echelon basis of that image.
fn block_matrix(op: &SplitCasimirOperator<'_>, elem: &GroupElement, sets: &[Vec<usize>]) -> Vec<Vec<Q>> {
    let mut basis: Vec<BTreeMap<usize, Q>> = Vec::new();
    let mut pivot: HashMap<usize, usize> = HashMap::new();
    for t in sets {
        let (word, vals) = pattern_of(t);
        let arr = distinct_arrangements(&word);
        let tuples: Vec<usize> = arr.iter().map(|u| op.encode(&u.iter().map(|&c| vals[c]).collect::<Vec<_>>())).collect();
        let index: HashMap<usize, usize> = tuples.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut mat: linalg::Mat = arr
            .iter()
            .map(|u| {
                let t: Vec<usize> = u.iter().map(|&c| vals[c]).collect();
                let mut row = vec![Q::zero(); arr.len()];
                for (w, c) in elem.act(&t) {
                    row[index[&op.encode(&w)]] += c;
                }
                row
            })
            .collect();
        let piv = linalg::rref(&mut mat);
        for (row, p) in mat.into_iter().zip(piv) {
            pivot.insert(tuples[p], basis.len());
            basis.push(row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (tuples[i], c)).collect());
        }
    }
    let m = basis.len();
    let mut out = vec![vec![Q::zero(); m]; m];
    for (j, v) in basis.iter().enumerate() {
        for (&k, c) in v {
            for (i, x) in op.apply_basis(&op.decode(k)) {
                if let Some(&row) = pivot.get(&i) {
                    out[row][j] += c * x;
                }
            }
        }
    }
    out
}

/// Exact characteristic polynomial det(xI − M) over Q.
pub fn charpoly(m: &[Vec<Q>]) -> UniPoly {
    let n = m.len();
    let s = crate::rational::denom_lcm(m.iter().flatten());
    let sq = Q::from_integer(s.clone());
    let a: Vec<BigInt> = m.iter().flatten().map(|x| (x * &sq).to_integer()).collect();
    let rho = (0..n)
        .map(|i| a[i * n..(i + 1) * n].iter().map(|x| x.abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default();
    // |c_k| ≤ C(n, k) ρ^k ≤ (1 + ρ)^n
    let bits = n as u64 * (rho + 1u32).bits() + 2;
    let primes = primes_for_bits(bits);
    let mut crts = vec![Crt::default(); n + 1];
    for md in &primes {
        let mut h: Vec<u64> = a.iter().map(|x| md.from_big(x)).collect();
        hessenberg(md, &mut h, n);
        let c = hessenberg_charpoly_top(md, &h, n, n);
        for (crt, r) in crts.iter_mut().zip(c) {
            crt.push(md, r);
        }
    }
    // det(xI − A) = Σ c_k x^{n−k}; det(xI − M) = s^{−n} det(sxI − A)
    let mut coeffs = vec![Q::zero(); n + 1];
    let mut sk = BigInt::one();
    for k in 0..=n {
        // coefficient of x^{n−k}: c_k s^{n−k} / s^n = c_k / s^k
        coeffs[n - k] = Q::new(crts[k].symmetric(), sk.clone());
        sk *= &s;
    }
    UniPoly::new(coeffs)
}
