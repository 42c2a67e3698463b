//! Integer matrices of Ĉ_(n) on the Young-symmetrized dominant weight spaces
//! of one S_n module.
//!
//! For a weight μ the space y_T·(g⊗n)_μ is a copy of the multiplicity space
//! at μ and is stable under Ĉ. Weyl-conjugate weight spaces carry the same
//! spectrum, so only dominant μ are built and weighted by |Wμ|.

use super::operator::SplitCasimirOperator;
use super::symmetric::{young_symmetrizer, GroupElement};
use crate::linalg;
use crate::rational::Q;
use crate::udim::Module;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;

/// Ĉ restricted to one dominant weight space, scaled to integers.
#[derive(Clone, Debug)]
pub struct Block {
    pub weight: Vec<i64>,
    pub orbit: usize,
    pub m: usize,
    /// Row-major m×m integer matrix A = s·M.
    pub a: Vec<i64>,
}

impl Block {
    /// max_i Σ_j |a_ij|, a bound for the spectral radius.
    pub fn norm_inf(&self) -> f64 {
        (0..self.m)
            .map(|i| self.a[i * self.m..(i + 1) * self.m].iter().map(|x| x.unsigned_abs() as f64).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// The reduced echelon basis of the image of a group-algebra element on the
/// span of all arrangements of one equality pattern.
#[derive(Clone, Debug)]
pub struct PatternImage {
    pub arrangements: Vec<Vec<usize>>,
    /// Rows: (arrangement index, coefficient), with coefficient 1 at the pivot.
    pub rows: Vec<Vec<(usize, Q)>>,
    pub pivots: Vec<usize>,
}

impl PatternImage {
    pub fn new(elem: &GroupElement, word: &[usize]) -> PatternImage {
        let arrangements = distinct_arrangements(word);
        let index: HashMap<&Vec<usize>, usize> = arrangements.iter().enumerate().map(|(i, a)| (a, i)).collect();
        let mut mat: linalg::Mat = arrangements
            .iter()
            .map(|u| {
                let mut row = vec![Q::zero(); arrangements.len()];
                for (w, c) in elem.act(u) {
                    row[index[&w]] += c;
                }
                row
            })
            .collect();
        let pivots = linalg::rref(&mut mat);
        let rows = mat
            .into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        PatternImage { arrangements, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

pub fn distinct_arrangements(word: &[usize]) -> Vec<Vec<usize>> {
    let mut w = word.to_vec();
    w.sort_unstable();
    let mut out = vec![w.clone()];
    // next lexicographic permutation
    loop {
        let n = w.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
        w.swap(i, j);
        w[i + 1..].reverse();
        out.push(w.clone());
    }
    out
}

/// Nondecreasing class words of length n (one per equality pattern of a
/// sorted tuple).
fn pattern_words(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize];
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().unwrap();
        for next in [last, last + 1] {
            cur.push(next);
            rec(n, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// Sorted tuple → its class word and distinct values.
pub fn pattern_of(t: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut vals: Vec<usize> = Vec::new();
    let mut word = Vec::with_capacity(t.len());
    for &x in t {
        if vals.last() != Some(&x) {
            vals.push(x);
        }
        word.push(vals.len() - 1);
    }
    (word, vals)
}

/// Sorted basis tuples of g⊗n grouped by total weight, keeping only the
/// weights accepted by `keep`.
pub fn multisets_by_weight(
    op: &SplitCasimirOperator<'_>,
    keep: impl Fn(&[i64]) -> bool,
) -> Vec<(Vec<i64>, Vec<Vec<usize>>)> {
    let alg = op.alg;
    let d = alg.dim();
    let r = alg.rank();
    let mut groups: HashMap<Vec<i64>, Vec<Vec<usize>>> = HashMap::new();
    let mut cur = Vec::with_capacity(op.n);
    fn rec(
        alg: &crate::chevalley::LieAlgebra,
        n: usize,
        d: usize,
        start: usize,
        wt: Vec<i64>,
        cur: &mut Vec<usize>,
        groups: &mut HashMap<Vec<i64>, Vec<Vec<usize>>>,
        keep: &dyn Fn(&[i64]) -> bool,
    ) {
        if cur.len() == n {
            if keep(&wt) {
                groups.entry(wt).or_default().push(cur.clone());
            }
            return;
        }
        for x in start..d {
            let w: Vec<i64> = wt.iter().zip(alg.weight(x)).map(|(a, b)| a + b).collect();
            cur.push(x);
            rec(alg, n, d, x, w, cur, groups, keep);
            cur.pop();
        }
    }
    rec(alg, op.n, d, 0, vec![0; r], &mut cur, &mut groups, &keep);
    let mut out: Vec<(Vec<i64>, Vec<Vec<usize>>)> = groups.into_iter().collect();
    out.sort();
    out
}

/// All blocks of one module, sharing a single scale s.
#[derive(Clone, Debug)]
pub struct ModuleBlocks {
    pub module: Module,
    pub n: usize,
    /// A = s·M for every block.
    pub scale: BigInt,
    pub blocks: Vec<Block>,
}

impl ModuleBlocks {
    pub fn build(op: &SplitCasimirOperator<'_>, module: Module) -> ModuleBlocks {
        let n = module.degree();
        assert_eq!(op.n, n, "operator built for the wrong tensor power");
        let alg = op.alg;
        let y = young_symmetrizer(module.partition());
        let images: HashMap<Vec<usize>, PatternImage> =
            pattern_words(n).into_iter().map(|w| (w.clone(), PatternImage::new(&y, &w))).collect();
        let l = images.values().flat_map(|p| p.rows.iter().flatten().map(|(_, c)| c)).fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        let lq = Q::from_integer(l.clone());
        let scaled: HashMap<&Vec<usize>, Vec<Vec<(usize, i64)>>> = images
            .iter()
            .map(|(w, p)| {
                let rows = p
                    .rows
                    .iter()
                    .map(|row| row.iter().map(|(k, c)| (*k, (c * &lq).to_integer().to_i64().unwrap())).collect())
                    .collect();
                (w, rows)
            })
            .collect();
        let scale = &l * op.denom();
        let groups = multisets_by_weight(op, |w| alg.is_dominant(w));
        let d = alg.dim();
        let mut blocks = Vec::new();
        for (weight, sets) in groups {
            // columns: (tuple values, pattern word, row index)
            let mut cols: Vec<(Vec<usize>, &Vec<usize>, usize)> = Vec::new();
            let mut pivot: HashMap<u64, usize> = HashMap::new();
            for t in &sets {
                let (word, vals) = pattern_of(t);
                let (key, img) = images.get_key_value(&word).unwrap();
                for (ri, &pa) in img.pivots.iter().enumerate() {
                    let tup: Vec<usize> = img.arrangements[pa].iter().map(|&c| vals[c]).collect();
                    pivot.insert(encode(&tup, d), cols.len());
                    cols.push((vals.clone(), key, ri));
                }
            }
            let m = cols.len();
            if m == 0 {
                continue;
            }
            let mut a = vec![0i64; m * m];
            let mut tup = vec![0usize; n];
            for (j, (vals, word, ri)) in cols.iter().enumerate() {
                let img = &images[*word];
                for &(k, c) in &scaled[*word][*ri] {
                    for (s, &cls) in img.arrangements[k].iter().enumerate() {
                        tup[s] = vals[cls];
                    }
                    op.apply_tuple_scaled(&tup, |out, z| {
                        if let Some(&i) = pivot.get(&encode(out, d)) {
                            a[i * m + j] += c * z;
                        }
                    });
                }
            }
            let orbit = alg.weyl_orbit_size(&weight);
            blocks.push(Block { weight, orbit, m, a });
        }
        ModuleBlocks { module, n, scale, blocks }
    }

    /// Σ_μ |Wμ| m_μ, the multiplicity-space dimension of the module.
    pub fn total(&self) -> u64 {
        self.blocks.iter().map(|b| (b.orbit * b.m) as u64).sum()
    }
}

pub fn encode(t: &[usize], d: usize) -> u64 {
    t.iter().fold(0u64, |acc, &x| acc * d as u64 + x as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangements_and_patterns() {
        assert_eq!(distinct_arrangements(&[0, 0, 1]).len(), 3);
        assert_eq!(distinct_arrangements(&[0, 1, 2, 3]).len(), 24);
        assert_eq!(pattern_words(4).len(), 8);
        assert_eq!(pattern_of(&[3, 3, 5, 9]), (vec![0, 0, 1, 2], vec![3, 5, 9]));
    }
}
