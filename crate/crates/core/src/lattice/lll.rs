//! Integral LLL on a Gram matrix (all quantities stay in Z).
//!
//! Only used to pick a well-conditioned basis before enumeration; the
//! enumeration itself is exact whatever basis it is handed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hnf::ZMat;

struct Lll {
    n: usize,
    g: ZMat,
    h: ZMat,
    /// d[0] = 1, d[i] = Gram determinant of the first i vectors
    d: Vec<BigInt>,
    /// lam[k][j] = d[j+1]·μ_kj for j < k
    lam: ZMat,
}

impl Lll {
    fn new(g: &ZMat) -> Self {
        let n = g.len();
        let h = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Lll { n, g: g.clone(), h, d: vec![BigInt::zero(); n + 1], lam: vec![vec![BigInt::zero(); n]; n] }
    }

    /// Gram–Schmidt data for vector `k` (0-indexed) from the first `k` ones.
    fn gso_row(&mut self, k: usize) {
        for j in 0..=k {
            let mut u = self.g[k][j].clone();
            for i in 0..j {
                u = (&self.d[i + 1] * &u - &self.lam[k][i] * &self.lam[j][i]) / &self.d[i];
            }
            if j < k {
                self.lam[k][j] = u;
            } else {
                assert!(u.is_positive(), "LLL input is not positive definite");
                self.d[k + 1] = u;
            }
        }
    }

    fn red(&mut self, k: usize, l: usize) {
        let two_lam: BigInt = &self.lam[k][l] * 2;
        if two_lam.abs() <= self.d[l + 1] {
            return;
        }
        // nearest integer to lam/d
        let q = (two_lam + &self.d[l + 1]).div_floor(&(&self.d[l + 1] * 2));
        self.sub_row(k, l, &q);
        self.lam[k][l] = &self.lam[k][l] - &q * &self.d[l + 1];
        for i in 0..l {
            let t = &q * &self.lam[l][i];
            self.lam[k][i] -= t;
        }
    }

    /// b_k ← b_k − q·b_l, in the Gram matrix and the transform.
    fn sub_row(&mut self, k: usize, l: usize, q: &BigInt) {
        for j in 0..self.n {
            let t = q * &self.h[l][j];
            self.h[k][j] -= t;
            let t = q * &self.g[l][j];
            self.g[k][j] -= t;
        }
        for i in 0..self.n {
            let t = q * &self.g[i][l];
            self.g[i][k] -= t;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        self.h.swap(k, k - 1);
        self.g.swap(k, k - 1);
        for row in self.g.iter_mut() {
            row.swap(k, k - 1);
        }
        for j in 0..k - 1 {
            let t = self.lam[k][j].clone();
            self.lam[k][j] = self.lam[k - 1][j].clone();
            self.lam[k - 1][j] = t;
        }
        let lam = self.lam[k][k - 1].clone();
        let b = (&self.d[k - 1] * &self.d[k + 1] + &lam * &lam) / &self.d[k];
        for i in k + 1..=kmax {
            let t = self.lam[i][k].clone();
            self.lam[i][k] = (&self.d[k + 1] * &self.lam[i][k - 1] - &lam * &t) / &self.d[k];
            self.lam[i][k - 1] = (&b * &t + &lam * &self.lam[i][k]) / &self.d[k + 1];
        }
        self.d[k] = b;
    }

    fn run(&mut self) {
        if self.n == 0 {
            return;
        }
        self.d[0] = BigInt::one();
        self.gso_row(0);
        let mut k = 1;
        let mut kmax = 0;
        while k < self.n {
            if k > kmax {
                kmax = k;
                self.gso_row(k);
            }
            self.red(k, k - 1);
            let lhs = &self.d[k + 1] * &self.d[k - 1] * 4;
            let rhs = &self.d[k] * &self.d[k] * 3 - &self.lam[k][k - 1] * &self.lam[k][k - 1] * 4;
            if lhs < rhs {
                self.swap(k, kmax);
                k = k.max(2) - 1;
            } else {
                for l in (0..k - 1).rev() {
                    self.red(k, l);
                }
                k += 1;
            }
        }
    }
}

/// LLL-reduce a positive definite integer Gram matrix. Returns the
/// unimodular `T` (new basis vector i = Σ_j T_ij·old_j) and the new Gram.
pub fn lll_gram(g: &ZMat) -> (ZMat, ZMat) {
    let mut s = Lll::new(g);
    s.run();
    (s.h, s.g)
}

/// Size-reduce the vectors after the first `head` ones against the head
/// (nearest-plane rounding), leaving them otherwise untouched. Returns the
/// transform and the new Gram.
pub fn size_reduce_tail(g: &ZMat, head: usize) -> (ZMat, ZMat) {
    let mut s = Lll::new(g);
    s.d[0] = BigInt::one();
    for k in 0..s.n {
        s.gso_row(k);
    }
    for k in head..s.n {
        for l in (0..head).rev() {
            s.red(k, l);
        }
    }
    (s.h, s.g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::hnf::{det, to_big};

    #[test]
    fn reduces_skewed_a2() {
        // basis (1,0), (100,1) of the A2 form [[2,-1],[-1,2]]
        let g = to_big(&[vec![2, 199], vec![199, 19802]]);
        let (t, g2) = lll_gram(&g);
        assert_eq!(det(&t).abs(), BigInt::one());
        assert!(g2[0][0] <= BigInt::from(2) && g2[1][1] <= BigInt::from(2));
    }
}
