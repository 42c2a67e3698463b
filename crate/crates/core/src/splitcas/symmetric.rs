//! Permutations of tensor slots, S_n characters (n ≤ 4), isotypic projectors
//! and Young symmetrizers.

use crate::rational::{q, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A permutation of slots: slot i moves to slot `0[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        heap(n, &mut cur, &mut out);
        out.sort();
        out
    }

    /// (self ∘ other)(i) = self(other(i)): apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn sign(&self) -> i64 {
        let transpositions: usize = cycles(&self.0).iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut c: Vec<usize> = cycles(&self.0).iter().map(|c| c.len()).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        c
    }

    /// Moves the entries of a tuple: out[σ(i)] = t[i].
    pub fn act<T: Copy>(&self, t: &[T]) -> Vec<T> {
        let mut out = t.to_vec();
        for (i, &x) in t.iter().enumerate() {
            out[self.0[i]] = x;
        }
        out
    }
}

fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Perm>) {
    if k <= 1 {
        out.push(Perm(cur.clone()));
        return;
    }
    for i in 0..k {
        heap(k - 1, cur, out);
        if k % 2 == 0 {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut c = vec![];
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            c.push(i);
            i = p[i];
        }
        out.push(c);
    }
    out
}

pub fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// χ_R on the class with the given cycle type, for n ≤ 4.
pub fn character(partition: &[usize], cycle_type: &[usize]) -> i64 {
    let classes: &[&[usize]] = match partition.iter().sum::<usize>() {
        1 => &[&[1]],
        2 => &[&[1, 1], &[2]],
        3 => &[&[1, 1, 1], &[2, 1], &[3]],
        4 => &[&[1, 1, 1, 1], &[2, 1, 1], &[2, 2], &[3, 1], &[4]],
        n => panic!("character table for S_{n} not embedded"),
    };
    let row: &[i64] = match partition {
        [1] | [2] | [3] | [4] => &[1, 1, 1, 1, 1],
        [1, 1] | [1, 1, 1] | [1, 1, 1, 1] => match partition.len() {
            2 => &[1, -1],
            3 => &[1, -1, 1],
            _ => &[1, -1, 1, 1, -1],
        },
        [2, 1] => &[2, 0, -1],
        [3, 1] => &[3, 1, -1, 0, -1],
        [2, 2] => &[2, 0, 2, -1, 0],
        [2, 1, 1] => &[3, -1, -1, 0, 1],
        _ => panic!("unsupported partition {partition:?}"),
    };
    let k = classes.iter().position(|c| *c == cycle_type).expect("cycle type");
    row[k]
}

pub fn irrep_dim(partition: &[usize]) -> i64 {
    let n: usize = partition.iter().sum();
    character(partition, &vec![1; n])
}

/// An element Σ c_σ σ of the group algebra Q[S_n].
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub n: usize,
    pub terms: Vec<(Perm, Q)>,
}

impl GroupElement {
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let mut acc: BTreeMap<Perm, Q> = BTreeMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                *acc.entry(s.compose(t)).or_insert_with(Q::zero) += a * b;
            }
        }
        GroupElement { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Applies the element to a word, returning (word, coefficient) terms.
    pub fn act<T: Copy + Ord>(&self, word: &[T]) -> BTreeMap<Vec<T>, Q> {
        let mut out: BTreeMap<Vec<T>, Q> = BTreeMap::new();
        for (s, c) in &self.terms {
            *out.entry(s.act(word)).or_insert_with(Q::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// P_R = (dim R / n!) Σ χ_R(σ) σ.
#[derive(Clone, Debug)]
pub struct IsotypicProjector {
    pub partition: Vec<usize>,
    pub element: GroupElement,
}

impl IsotypicProjector {
    pub fn new(partition: &[usize]) -> IsotypicProjector {
        let n: usize = partition.iter().sum();
        let scale = q(irrep_dim(partition), factorial(n));
        let terms = Perm::all(n)
            .into_iter()
            .map(|s| {
                let c = character(partition, &s.cycle_type());
                (s, &scale * Q::from_integer(c.into()))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        IsotypicProjector { partition: partition.to_vec(), element: GroupElement { n, terms } }
    }
}

/// Young symmetrizer of the row-reading tableau: (Σ rows)(Σ sgn·columns).
/// Its image in a tensor power is a copy of the multiplicity space.
pub fn young_symmetrizer(partition: &[usize]) -> GroupElement {
    let n: usize = partition.iter().sum();
    let mut row_of = vec![0; n];
    let mut col_of = vec![0; n];
    let mut k = 0;
    for (r, &len) in partition.iter().enumerate() {
        for c in 0..len {
            row_of[k] = r;
            col_of[k] = c;
            k += 1;
        }
    }
    let preserves = |p: &Perm, key: &[usize]| (0..n).all(|i| key[p.0[i]] == key[i]);
    let all = Perm::all(n);
    let rows = GroupElement {
        n,
        terms: all.iter().filter(|p| preserves(p, &row_of)).map(|p| (p.clone(), Q::from_integer(1.into()))).collect(),
    };
    let cols = GroupElement {
        n,
        terms: all
            .iter()
            .filter(|p| preserves(p, &col_of))
            .map(|p| (p.clone(), Q::from_integer(p.sign().into())))
            .collect(),
    };
    rows.mul(&cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characters_are_orthonormal() {
        let parts: [&[usize]; 5] = [&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        for a in parts {
            for b in parts {
                let s: i64 = all.iter().map(|p| character(a, &p.cycle_type()) * character(b, &p.cycle_type())).sum();
                assert_eq!(s, if a == b { 24 } else { 0 });
            }
        }
    }

    #[test]
    fn projector_is_idempotent_in_group_algebra() {
        for part in [vec![3, 1], vec![2, 2]] {
            let p = IsotypicProjector::new(&part);
            let p2 = p.element.mul(&p.element);
            let mut a = p.element.terms.clone();
            let mut b = p2.terms.clone();
            a.sort_by(|x, y| x.0.cmp(&y.0));
            b.sort_by(|x, y| x.0.cmp(&y.0));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn young_symmetrizer_is_quasi_idempotent() {
        // y² = (n!/dim R) y
        let y = young_symmetrizer(&[2, 1, 1]);
        let y2 = y.mul(&y);
        let k = Q::from_integer(8.into());
        let mut a: Vec<(Perm, Q)> = y.terms.iter().map(|(p, c)| (p.clone(), c * &k)).collect();
        let mut b = y2.terms.clone();
        a.sort_by(|x, y| x.0.cmp(&y.0));
        b.sort_by(|x, y| x.0.cmp(&y.0));
        assert_eq!(a, b);
    }
}
