//! Arithmetic modulo word-sized primes: Hessenberg characteristic
//! polynomials, power sums, and Chinese remaindering back to Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A prime below 2^31 with a precomputed Barrett constant.
#[derive(Clone, Copy, Debug)]
pub struct Modulus {
    pub p: u64,
    mu: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Modulus {
        assert!(p > 2 && p < (1 << 31));
        Modulus { p, mu: (u128::from(u64::MAX) / u128::from(p)) as u64 }
    }

    /// x mod p for any x < 2^64.
    #[inline(always)]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((u128::from(x) * u128::from(self.mu)) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    #[inline(always)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(&self, x: i64) -> u64 {
        let r = x.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn from_big(&self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = x.mod_floor(&p);
        u64::try_from(&r).unwrap()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    // bases 2, 3, 5, 7 are deterministic below 3.2e9
    'bases: for a in [2u64, 3, 5, 7] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes descending from 2^31, as many as needed for `bits` bits of modulus.
pub fn primes_for_bits(bits: u64) -> Vec<Modulus> {
    let mut out = Vec::new();
    let mut have = 0.0f64;
    let mut c = (1u64 << 31) - 1;
    while have < bits as f64 {
        if is_prime(c) {
            out.push(Modulus::new(c));
            have += (c as f64).log2();
        }
        c -= 2;
    }
    out
}

/// Reduces a dense row-major m×m matrix to upper Hessenberg form by
/// similarity transformations, in place.
pub fn hessenberg(md: &Modulus, h: &mut [u64], m: usize) {
    for j in 0..m.saturating_sub(2) {
        let Some(piv) = (j + 1..m).find(|&i| h[i * m + j] != 0) else { continue };
        if piv != j + 1 {
            for c in 0..m {
                h.swap(piv * m + c, (j + 1) * m + c);
            }
            for r in 0..m {
                h.swap(r * m + piv, r * m + j + 1);
            }
        }
        let inv = md.inv(h[(j + 1) * m + j]);
        let mut us = vec![0u64; m];
        let (head, tail) = h.split_at_mut((j + 2) * m);
        let pivot_row = &head[(j + 1) * m..(j + 2) * m];
        for (k, row) in tail.chunks_exact_mut(m).enumerate() {
            let i = j + 2 + k;
            let u = md.mul(row[j], inv);
            if u == 0 {
                continue;
            }
            us[i] = u;
            let nu = md.p - u;
            for c in j..m {
                row[c] = md.reduce(row[c] + nu * pivot_row[c]);
            }
        }
        // column j+1 += Σ_i u_i · column i, applied after all row operations
        for r in 0..m {
            let row = &mut h[r * m..(r + 1) * m];
            let mut acc: u128 = 0;
            for i in j + 2..m {
                if us[i] != 0 {
                    acc += u128::from(us[i] * row[i]);
                }
            }
            if acc != 0 {
                let add = (acc % u128::from(md.p)) as u64;
                row[j + 1] = md.add(row[j + 1], add);
            }
        }
    }
}

/// Top `keep + 1` coefficients of det(xI − H) for upper Hessenberg H:
/// returns c_0 = 1, c_1, …, c_keep with det = x^m + c_1 x^{m−1} + ….
/// With keep ≥ m this is the whole characteristic polynomial.
pub fn hessenberg_charpoly_top(md: &Modulus, h: &[u64], m: usize, keep: usize) -> Vec<u64> {
    // p[k] holds the top coefficients of the characteristic polynomial of
    // the leading k×k block
    let width = keep + 1;
    let mut p: Vec<Vec<u64>> = Vec::with_capacity(m + 1);
    p.push({
        let mut v = vec![0; width];
        v[0] = 1;
        v
    });
    for k in 1..=m {
        let mut cur = vec![0u64; width];
        // (x − h_kk) p_{k−1}: depth shifts by one for the h_kk term
        let hkk = h[(k - 1) * m + (k - 1)];
        let prev = &p[k - 1];
        for t in 0..width {
            cur[t] = prev[t];
            if t >= 1 {
                cur[t] = md.sub(cur[t], md.mul(hkk, prev[t - 1]));
            }
        }
        let mut prod = 1u64;
        for i in 1..k {
            // depth of p_{k−i−1} inside p_k is i + 1
            if i + 1 > keep {
                break;
            }
            prod = md.mul(prod, h[(k - i) * m + (k - i - 1)]);
            if prod == 0 {
                break;
            }
            let f = md.mul(prod, h[(k - i - 1) * m + (k - 1)]);
            if f == 0 {
                continue;
            }
            let src = &p[k - i - 1];
            for t in (i + 1)..width {
                cur[t] = md.sub(cur[t], md.mul(f, src[t - i - 1]));
            }
        }
        p.push(cur);
    }
    let mut top = p.pop().unwrap();
    for t in (m + 1)..width {
        top[t] = 0;
    }
    top
}

/// Power sums p_1..p_kmax from top characteristic coefficients (Newton).
pub fn power_sums(md: &Modulus, c: &[u64], m: usize, kmax: usize) -> Vec<u64> {
    let mut p = vec![0u64; kmax + 1];
    p[0] = md.reduce(m as u64);
    let coef = |i: usize| if i < c.len() { c[i] } else { 0 };
    for k in 1..=kmax {
        let mut s = md.mul(md.reduce(k as u64), coef(k));
        for i in 1..k {
            s = md.add(s, md.mul(coef(i), p[k - i]));
        }
        p[k] = if s == 0 { 0 } else { md.p - s };
    }
    p
}

/// Incremental Chinese remaindering of one integer.
#[derive(Clone, Debug)]
pub struct Crt {
    pub value: BigInt,
    pub modulus: BigInt,
}

impl Default for Crt {
    fn default() -> Self {
        Crt { value: BigInt::zero(), modulus: BigInt::one() }
    }
}

impl Crt {
    pub fn push(&mut self, md: &Modulus, r: u64) {
        let cur = md.from_big(&self.value);
        let minv = md.inv(md.from_big(&self.modulus));
        let t = md.mul(md.sub(r, cur), minv);
        self.value += &self.modulus * BigInt::from(t);
        self.modulus *= BigInt::from(md.p);
    }

    /// Representative in (−M/2, M/2].
    pub fn symmetric(&self) -> BigInt {
        let half: BigInt = &self.modulus >> 1;
        if self.value > half {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }
}

/// log2 of a bound for |tr(A^k)|, k ≤ kmax, summed with weights.
pub fn trace_bound_bits(blocks: &[(usize, u64, f64)], kmax: usize) -> u64 {
    // (weight, m, ‖A‖∞) per block
    let mut best = 0.0f64;
    for k in 0..=kmax {
        let mut tot = 0.0f64;
        for &(w, m, norm) in blocks {
            tot += (w as f64) * (m as f64) * norm.max(1.0).powi(k as i32);
        }
        best = best.max(tot.log2());
    }
    best.ceil() as u64 + 2
}

pub fn big_abs_bits(x: &BigInt) -> u64 {
    x.abs().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_and_power_sums_of_small_matrix() {
        let md = Modulus::new(2147483647);
        // [[2,1,0],[1,3,1],[0,1,4]] has trace 9, tr(A²) = 4+9+16+2+2 = 33
        let a: Vec<i64> = vec![2, 1, 0, 1, 3, 1, 0, 1, 4];
        let mut h: Vec<u64> = a.iter().map(|&x| md.from_i64(x)).collect();
        hessenberg(&md, &mut h, 3);
        let c = hessenberg_charpoly_top(&md, &h, 3, 3);
        let ps = power_sums(&md, &c, 3, 2);
        assert_eq!(ps[1], 9);
        assert_eq!(ps[2], 33);
        // det = 2·(12−1) − 1·(4) = 18 → c_3 = −18
        assert_eq!(c[3], md.p - 18);
    }

    #[test]
    fn hessenberg_preserves_charpoly_under_pivoting() {
        let md = Modulus::new(1_000_003);
        let a: Vec<i64> = vec![0, 0, 5, 1, 0, 0, 2, 0, 0, 1, 0, 3, 1, 2, 0, 0];
        let mut h: Vec<u64> = a.iter().map(|&x| md.from_i64(x)).collect();
        hessenberg(&md, &mut h, 4);
        let ps = power_sums(&md, &hessenberg_charpoly_top(&md, &h, 4, 4), 4, 2);
        // tr(A) = 0 + 0 + 0 + 0 = 0 ; tr(A²) = Σ a_ij a_ji
        let tr2: i64 = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).map(|(i, j)| a[i * 4 + j] * a[j * 4 + i]).sum();
        assert_eq!(ps[1], 0);
        assert_eq!(ps[2], md.from_i64(tr2));
    }

    #[test]
    fn crt_recovers_negative_values() {
        let ps = primes_for_bits(100);
        let x: BigInt = BigInt::from(-123456789012345678i64) * BigInt::from(1_000_000_007i64);
        let mut c = Crt::default();
        for md in &ps {
            c.push(md, md.from_big(&x));
        }
        assert_eq!(c.symmetric(), x);
    }
}
