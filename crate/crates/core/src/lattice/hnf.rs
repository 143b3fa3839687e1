//! Hermite normal form over Z, with the unimodular transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type ZMat = Vec<Vec<BigInt>>;

pub fn to_big(m: &[Vec<i64>]) -> ZMat {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn to_i64(m: &ZMat) -> Option<Vec<Vec<i64>>> {
    m.iter().map(|r| r.iter().map(|x| x.to_i64()).collect()).collect()
}

/// Row-style HNF `U·A = H`.
///
/// The first `rank` rows of `h` are the nonzero HNF rows (positive pivots,
/// entries above each pivot reduced into `[0, pivot)`); the remaining rows
/// are zero, and the matching rows of `u` span the integer left kernel of `A`.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: ZMat,
    pub u: ZMat,
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows: a Z-basis of the row lattice.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.h[..self.rank()]
    }

    /// Z-basis of `{y : yᵀA = 0}`.
    pub fn left_kernel(&self) -> &[Vec<BigInt>] {
        &self.u[self.rank()..]
    }

    /// Coefficients `y` over the HNF rows with `v = Σ y_r H_r`, or the first
    /// column where `v` leaves the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Vec<BigInt>, usize> {
        let mut w = v.to_vec();
        let mut y = vec![BigInt::zero(); self.rank()];
        let mut r = 0;
        for c in 0..w.len() {
            if r < self.rank() && self.pivots[r] == c {
                let (q, rem) = w[c].div_rem(&self.h[r][c]);
                if !rem.is_zero() {
                    return Err(c);
                }
                if !q.is_zero() {
                    for (wj, hj) in w.iter_mut().zip(&self.h[r]).skip(c) {
                        *wj -= &q * hj;
                    }
                }
                y[r] = q;
                r += 1;
            } else if !w[c].is_zero() {
                return Err(c);
            }
        }
        Ok(y)
    }

    /// Coefficients over the original generator rows.
    pub fn generator_coefficients(&self, v: &[BigInt]) -> Result<Vec<BigInt>, usize> {
        let y = self.coordinates(v)?;
        let n = self.u.len();
        let mut out = vec![BigInt::zero(); n];
        for (yr, ur) in y.iter().zip(&self.u) {
            if yr.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(ur) {
                *o += yr * x;
            }
        }
        Ok(out)
    }
}

fn row_sub(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

pub fn hnf(a: &ZMat) -> Hnf {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut h = a.clone();
    let mut u: ZMat = (0..rows)
        .map(|i| (0..rows).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()));
            let Some(b) = best else { break };
            h.swap(r, b);
            u.swap(r, b);
            let mut done = true;
            for i in r + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_sub(&mut h, i, r, &q);
                row_sub(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            row_sub(&mut h, i, r, &q);
            row_sub(&mut u, i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    Hnf { h, u, pivots }
}

/// Determinant of a square integer matrix (Bareiss).
pub fn det(m: &ZMat) -> BigInt {
    let n = m.len();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * prev
}

/// Rank of an integer matrix.
pub fn rank(m: &ZMat) -> usize {
    hnf(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_small_matrix() {
        let a = to_big(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let h = hnf(&a);
        assert_eq!(h.rank(), 3);
        // U·A = H
        for (ur, hr) in h.u.iter().zip(&h.h) {
            for c in 0..3 {
                let s: BigInt = ur.iter().zip(&a).map(|(x, row)| x * &row[c]).sum();
                assert_eq!(&s, &hr[c]);
            }
        }
        assert_eq!(det(&a).abs(), (0..3).map(|i| h.h[i][i].clone()).product::<BigInt>());
    }

    #[test]
    fn membership_and_kernel() {
        let a = to_big(&[vec![2, 0], vec![0, 3], vec![4, 3]]);
        let h = hnf(&a);
        assert_eq!(h.rank(), 2);
        assert_eq!(h.left_kernel().len(), 1);
        let v = to_big(&[vec![6, -9]]).remove(0);
        let y = h.generator_coefficients(&v).unwrap();
        let back: Vec<BigInt> = (0..2).map(|c| y.iter().zip(&a).map(|(k, r)| k * &r[c]).sum()).collect();
        assert_eq!(back, v);
        assert_eq!(h.coordinates(&to_big(&[vec![1, 0]])[0]), Err(0));
    }
}
