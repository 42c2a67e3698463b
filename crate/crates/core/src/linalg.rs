//! Dense exact linear algebra over Q: row reduction, inverses, inertia.

use crate::rational::Q;
use num_traits::{One, Signed, Zero};

pub type Mat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Inverse of a square matrix, or None when singular.
pub fn inverse(m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut aug: Mat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

/// (positive, negative, zero) counts of a symmetric form, by symmetric
/// Gaussian elimination.
pub fn inertia(sym: &Mat) -> (usize, usize, usize) {
    let mut m = sym.clone();
    let n = m.len();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // find a nonzero diagonal entry, or create one from an off-diagonal pair
        let diag = active.iter().copied().find(|&i| !m[i][i].is_zero());
        let p = match diag {
            Some(p) => p,
            None => {
                let mut hit = None;
                'outer: for &i in &active {
                    for &j in &active {
                        if i != j && !m[i][j].is_zero() {
                            hit = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match hit {
                    None => break,
                    Some((i, j)) => {
                        // replace e_i by e_i + e_j: row/col i += row/col j
                        for k in 0..n {
                            let v = m[j][k].clone();
                            m[i][k] += v;
                        }
                        for k in 0..n {
                            let v = m[k][j].clone();
                            m[k][i] += v;
                        }
                        i
                    }
                }
            }
        };
        if m[p][p].is_zero() {
            break;
        }
        let piv = m[p][p].clone();
        if piv.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if m[i][p].is_zero() {
                continue;
            }
            let f = &m[i][p] / &piv;
            for &k in &active {
                let v = &f * &m[p][k];
                m[i][k] -= v;
            }
            m[i][p] = Q::zero();
            m[p][i] = Q::zero();
        }
    }
    (pos, neg, n - pos - neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn inverse_and_inertia() {
        let m = vec![vec![qi(2), qi(1)], vec![qi(1), qi(1)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(mul(&m, &inv), identity(2));
        let h = vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]];
        assert_eq!(inertia(&h), (1, 1, 0));
        let s = vec![vec![q(1, 2), qi(0)], vec![qi(0), qi(0)]];
        assert_eq!(inertia(&s), (1, 0, 1));
        assert!(inverse(&s).is_none());
    }
}
