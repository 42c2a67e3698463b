//! Cartan types, root enumeration and the integer constants N(α, β).

use crate::rational::{q, Q};
use crate::vparams::{AlgebraId, Exceptional};
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn of(alg: &AlgebraId) -> Result<CartanType, String> {
        alg.validate().map_err(|e| e.to_string())?;
        Ok(match *alg {
            AlgebraId::Sl(n) => CartanType::A(n as usize - 1),
            // so(3) ≅ sl(2), so(6) ≅ sl(4) are built as B1 = A1 and D3
            AlgebraId::So(n) if n % 2 == 1 => CartanType::B((n as usize - 1) / 2),
            AlgebraId::So(n) => CartanType::D(n as usize / 2),
            AlgebraId::Sp(n) => CartanType::C(n as usize / 2),
            AlgebraId::Ex(Exceptional::G2) => CartanType::G2,
            AlgebraId::Ex(Exceptional::F4) => CartanType::F4,
            AlgebraId::Ex(Exceptional::E6) => CartanType::E(6),
            AlgebraId::Ex(Exceptional::E7) => CartanType::E(7),
            AlgebraId::Ex(Exceptional::E8) => CartanType::E(8),
        })
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(r) | CartanType::B(r) | CartanType::C(r) | CartanType::D(r) | CartanType::E(r) => r,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    fn check(&self) -> Result<(), String> {
        let ok = match *self {
            CartanType::A(r) => r >= 1,
            CartanType::B(r) => r >= 1,
            CartanType::C(r) => r >= 1,
            CartanType::D(r) => r >= 3,
            CartanType::E(r) => (6..=8).contains(&r),
            CartanType::F4 | CartanType::G2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("unsupported Cartan type {self}"))
        }
    }

    /// Symmetrized Cartan matrix (α_i, α_j), short roots of squared length 2.
    pub fn inner_products(&self) -> Result<Vec<Vec<i64>>, String> {
        self.check()?;
        let r = self.rank();
        let mut b = vec![vec![0i64; r]; r];
        let mut link = |i: usize, j: usize, v: i64| {
            b[i][j] = v;
            b[j][i] = v;
        };
        match *self {
            CartanType::A(_) => {
                for i in 0..r.saturating_sub(1) {
                    link(i, i + 1, -1);
                }
            }
            CartanType::B(_) => {
                for i in 0..r.saturating_sub(1) {
                    link(i, i + 1, -2);
                }
            }
            CartanType::C(_) => {
                for i in 0..r.saturating_sub(2) {
                    link(i, i + 1, -1);
                }
                if r >= 2 {
                    link(r - 2, r - 1, -2);
                }
            }
            CartanType::D(_) => {
                for i in 0..r - 2 {
                    link(i, i + 1, -1);
                }
                link(r - 3, r - 1, -1);
            }
            CartanType::E(_) => {
                // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4
                link(0, 2, -1);
                link(1, 3, -1);
                for i in 2..r - 1 {
                    link(i, i + 1, -1);
                }
            }
            CartanType::F4 => {
                link(0, 1, -2);
                link(1, 2, -2);
                link(2, 3, -1);
            }
            CartanType::G2 => link(0, 1, -3),
        }
        let len2: Vec<i64> = match *self {
            CartanType::B(_) => (0..r).map(|i| if i + 1 < r { 4 } else { 2 }).collect(),
            CartanType::C(_) if r > 1 => (0..r).map(|i| if i + 1 < r { 2 } else { 4 }).collect(),
            CartanType::F4 => vec![4, 4, 2, 2],
            CartanType::G2 => vec![2, 6],
            _ => vec![2; r],
        };
        for i in 0..r {
            b[i][i] = len2[i];
        }
        Ok(b)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(r) => write!(f, "A{r}"),
            CartanType::B(r) => write!(f, "B{r}"),
            CartanType::C(r) => write!(f, "C{r}"),
            CartanType::D(r) => write!(f, "D{r}"),
            CartanType::E(r) => write!(f, "E{r}"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

/// Roots in simple-root coordinates. Positive roots come first, sorted by
/// height and then by descending coefficient vector; `roots[n + i]` is
/// `-roots[i]` where `n` is the number of positive roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub form: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(t: CartanType) -> Result<RootSystem, String> {
        let form = t.inner_products()?;
        let r = t.rank();
        let simple: Vec<Vec<i64>> = (0..r).map(|i| unit(r, i)).collect();
        let mut pos: Vec<Vec<i64>> = simple.clone();
        let mut known: HashMap<Vec<i64>, ()> = pos.iter().map(|v| (v.clone(), ())).collect();
        let mut layer = simple;
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..r {
                    // α_i-string through β: β − pα_i, …, β + qα_i with p − q = ⟨β, α_i^∨⟩
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pair = 2 * ip(&form, beta, &unit(r, i)) / form[i][i];
                    if p - pair > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            pos.extend(next.iter().cloned());
            layer = next;
        }
        pos.sort_by(|a, b| height(a).cmp(&height(b)).then(b.cmp(a)));
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        let index = roots.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Ok(RootSystem { cartan_type: t, rank: r, form, roots, index })
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn find(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn neg(&self, i: usize) -> usize {
        let n = self.num_positive();
        if i < n {
            i + n
        } else {
            i - n
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        ip(&self.form, a, b)
    }

    pub fn len2(&self, i: usize) -> i64 {
        self.inner(&self.roots[i], &self.roots[i])
    }

    /// ⟨v, α_i^∨⟩ for a simple root α_i.
    pub fn pairing(&self, v: &[i64], i: usize) -> i64 {
        2 * self.inner(v, &unit(self.rank, i)) / self.form[i][i]
    }

    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.find(&v)
    }

    fn diff(&self, a: usize, b: usize) -> Vec<i64> {
        self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x - y).collect()
    }

    /// Largest p with β − pα a root.
    pub fn string_down(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut v = self.roots[b].clone();
        loop {
            for (x, y) in v.iter_mut().zip(&self.roots[a]) {
                *x -= y;
            }
            if self.find(&v).is_some() {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// Coefficients of the coroot α^∨ on the simple coroots.
    pub fn coroot(&self, a: usize) -> Vec<i64> {
        let l = self.len2(a);
        self.roots[a].iter().enumerate().map(|(i, c)| c * self.form[i][i] / l).collect()
    }

    /// Structure constants N(α, β) for every pair of roots with α + β a root.
    /// Extraspecial pairs get the sign +1; everything else follows from the
    /// standard relations among the N's.
    pub fn structure_constants(&self) -> HashMap<(usize, usize), i64> {
        let npos = self.num_positive();
        let mut tab: HashMap<(usize, usize), i64> = HashMap::new();
        let mut order: Vec<usize> = (0..npos).collect();
        order.sort_by_key(|&i| height(&self.roots[i]));
        for &xi in &order {
            if height(&self.roots[xi]) < 2 {
                continue;
            }
            let mut pairs = Vec::new();
            for a in 0..npos {
                let rest = self.diff(xi, a);
                if let Some(b) = self.find(&rest) {
                    if self.is_positive(b) && a < b {
                        pairs.push((a, b));
                    }
                }
            }
            let (g, d) = pairs[0];
            let ngd = self.string_down(g, d) + 1;
            tab.insert((g, d), ngd);
            tab.insert((d, g), -ngd);
            for &(a, b) in &pairs[1..] {
                let ng = self.neg(g);
                let nd = self.neg(d);
                let mut acc = Q::zero();
                if let Some(s) = self.sum(b, ng) {
                    acc += Q::from_integer((self.n(&tab, b, ng) * self.n(&tab, a, nd)).into()) / Q::from_integer(self.len2(s).into());
                }
                if let Some(s) = self.sum(ng, a) {
                    acc += Q::from_integer((self.n(&tab, ng, a) * self.n(&tab, b, nd)).into()) / Q::from_integer(self.len2(s).into());
                }
                let v = acc * Q::from_integer(self.len2(xi).into()) / Q::from_integer(ngd.into());
                assert!(v.is_integer(), "non-integral structure constant");
                let v = v.to_integer().to_i64().unwrap();
                tab.insert((a, b), v);
                tab.insert((b, a), -v);
            }
        }
        let mut all = HashMap::new();
        for a in 0..self.roots.len() {
            for b in 0..self.roots.len() {
                if self.sum(a, b).is_some() {
                    all.insert((a, b), self.n(&tab, a, b));
                }
            }
        }
        all
    }

    /// N(a, b) for arbitrary roots, from the table of positive pairs.
    fn n(&self, tab: &HashMap<(usize, usize), i64>, a: usize, b: usize) -> i64 {
        let c = self.sum(a, b).expect("N(a, b) needs a + b to be a root");
        let (pa, pb) = (self.is_positive(a), self.is_positive(b));
        if pa && pb {
            return tab[&(a, b)];
        }
        if !pa && !pb {
            return -tab[&(self.neg(a), self.neg(b))];
        }
        // a + b + (−c) = 0: N(a,b)/(c,c) = N(b,−c)/(a,a) = N(−c,a)/(b,b)
        let nc = self.neg(c);
        let v = if self.is_positive(b) == self.is_positive(nc) {
            q(self.len2(c) * self.n(tab, b, nc), self.len2(a))
        } else {
            q(self.len2(c) * self.n(tab, nc, a), self.len2(b))
        };
        assert!(v.is_integer());
        v.to_integer().to_i64().unwrap()
    }
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

fn ip(form: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..a.len() {
        if a[i] == 0 {
            continue;
        }
        for j in 0..b.len() {
            s += a[i] * form[i][j] * b[j];
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for (t, n) in [
            (CartanType::A(1), 2),
            (CartanType::A(4), 20),
            (CartanType::B(3), 18),
            (CartanType::C(3), 18),
            (CartanType::D(4), 24),
            (CartanType::G2, 12),
            (CartanType::F4, 48),
            (CartanType::E(6), 72),
            (CartanType::E(7), 126),
            (CartanType::E(8), 240),
        ] {
            assert_eq!(RootSystem::new(t).unwrap().roots.len(), n, "{t}");
        }
    }
}
