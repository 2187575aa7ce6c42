//! Integral symplectic representation of the hyperelliptic mapping class group.
//!
//! Homology basis `a_1..a_g, b_1..b_g` with `<a_i, b_i> = 1`. The chain curves
//! are `c_{2i} = a_i` and `c_{2i-1} = b_i - b_{i-1}` (with `b_0 = b_{g+1} = 0`),
//! so consecutive curves meet once and the rest are disjoint. Each `ζ_i` acts
//! on column vectors by the transvection `v -> v + <v, c_i> c_i`, and a word
//! maps to the product of its letters' matrices in reading order.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::Genus;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl SymplecticMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigInt::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.dim + c]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .chunks(self.dim)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_minus_identity(&self) -> bool {
        let mut neg = Self::identity(self.dim);
        neg.entries.iter_mut().for_each(|e| *e = -e.clone());
        *self == neg
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut entries = vec![BigInt::zero(); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    entries[r * d + c] += a * other.get(k, c);
                }
            }
        }
        Self { dim: d, entries }
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                entries.push(self.get(c, r).clone());
            }
        }
        Self { dim: d, entries }
    }

    /// The standard form `J = [[0, I], [-I, 0]]`.
    pub fn standard_form(g: usize) -> Self {
        let d = 2 * g;
        let mut entries = vec![BigInt::zero(); d * d];
        for i in 0..g {
            entries[i * d + g + i] = BigInt::one();
            entries[(g + i) * d + i] = -BigInt::one();
        }
        Self { dim: d, entries }
    }

    pub fn preserves_form(&self) -> bool {
        let j = Self::standard_form(self.dim / 2);
        self.transpose().mul(&j).mul(self) == j
    }

    /// Right-multiplies by the transvection along `c` (or its inverse).
    fn apply_transvection(&mut self, c: &[i64], positive: bool) {
        // T = I + s * c (J c)^T-contracted: T v = v + s <v, c> c, <v, c> = v^T J c.
        let d = self.dim;
        let g = d / 2;
        // Row vector f with f . v = <v, c>: f = (J c)^T.
        let mut f = vec![0i64; d];
        for i in 0..g {
            f[i] = c[g + i];
            f[g + i] = -c[i];
        }
        let s: i64 = if positive { 1 } else { -1 };
        // M T = M + s (M c) f.
        for r in 0..d {
            let mc: BigInt = (0..d).map(|k| self.get(r, k) * c[k]).sum();
            if mc.is_zero() {
                continue;
            }
            for (col, &fc) in f.iter().enumerate().take(d) {
                if fc != 0 {
                    self.entries[r * d + col] += &mc * (s * fc);
                }
            }
        }
    }
}

/// Homology classes of the chain curves `c_1..c_{2g+1}`.
pub fn chain_vectors(g: Genus) -> Vec<Vec<i64>> {
    let g = g.get();
    let d = 2 * g;
    let a = |i: usize| {
        let mut v = vec![0; d];
        v[i - 1] = 1;
        v
    };
    let b = |i: usize| {
        let mut v = vec![0; d];
        if (1..=g).contains(&i) {
            v[g + i - 1] = 1;
        }
        v
    };
    let mut out = Vec::with_capacity(d + 1);
    for m in 1..=(2 * g + 1) {
        if m % 2 == 0 {
            out.push(a(m / 2));
        } else {
            let i = m.div_ceil(2);
            out.push(b(i).iter().zip(b(i - 1)).map(|(x, y)| x - y).collect());
        }
    }
    out
}

pub fn symplectic_rep(letters: &[i32], g: Genus) -> SymplecticMatrix {
    let chains = chain_vectors(g);
    let mut m = SymplecticMatrix::identity(2 * g.get());
    for &l in letters {
        m.apply_transvection(&chains[l.unsigned_abs() as usize - 1], l > 0);
    }
    m
}

/// The intersection pairing `<u, v> = u^T J v`.
pub fn pairing(u: &[i64], v: &[i64]) -> i64 {
    let g = u.len() / 2;
    (0..g).map(|i| u[i] * v[g + i] - u[g + i] * v[i]).sum()
}
