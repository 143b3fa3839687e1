//! Exhaustive enumeration of integer vectors of a given value under a
//! positive definite integral quadratic form.
//!
//! The form is decomposed fraction-free (Bareiss): with `D_k` the leading
//! principal minors and `R` the fraction-free echelon rows,
//!
//! ```text
//! xᵀGx = Σ_k (D_{k+1}·x_k + N_k)² / (D_k·D_{k+1}),   N_k = Σ_{j>k} R_kj·x_j
//! ```
//!
//! and the partial sums scaled by `D_k` stay integral, so every bound is an
//! exact integer comparison. No floating point is involved.

use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("quadratic form is not positive definite (leading minor {0} is {1})")]
    NotPositiveDefinite(usize, i128),
    #[error("arithmetic overflow while decomposing the form")]
    Overflow,
}

#[derive(Clone, Debug)]
pub struct IntForm {
    n: usize,
    /// d[k] = leading minor of size k; d[0] = 1
    d: Vec<i128>,
    /// fraction-free echelon rows; r[k][k] = d[k+1]
    r: Vec<Vec<i128>>,
}

fn ck(x: Option<i128>) -> i128 {
    x.expect("integer overflow in exact enumeration")
}

impl IntForm {
    pub fn new(g: &[Vec<i64>]) -> Result<Self, FormError> {
        let n = g.len();
        let mut m: Vec<Vec<i128>> = g.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut d = vec![1i128; n + 1];
        let mut r = vec![vec![0i128; n]; n];
        let mut prev = 1i128;
        for k in 0..n {
            let p = m[k][k];
            if p <= 0 {
                return Err(FormError::NotPositiveDefinite(k + 1, p));
            }
            d[k + 1] = p;
            r[k][k..n].copy_from_slice(&m[k][k..n]);
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = p.checked_mul(m[i][j]).ok_or(FormError::Overflow)?;
                    let b = m[i][k].checked_mul(m[k][j]).ok_or(FormError::Overflow)?;
                    m[i][j] = a.checked_sub(b).ok_or(FormError::Overflow)? / prev;
                }
            }
            prev = p;
        }
        Ok(IntForm { n, d, r })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn determinant(&self) -> i128 {
        self.d[self.n]
    }

    fn n_k(&self, k: usize, x: &[i64]) -> i128 {
        let row = &self.r[k];
        let mut s = 0i128;
        for j in k + 1..self.n {
            if x[j] != 0 {
                s = ck(s.checked_add(ck(row[j].checked_mul(x[j] as i128))));
            }
        }
        s
    }

    /// `E_k = (D_k·E_{k+1} + u²)/D_{k+1}`
    fn step(&self, k: usize, e_next: i128, u: i128) -> i128 {
        let num = ck(ck(self.d[k].checked_mul(e_next)).checked_add(ck(u.checked_mul(u))));
        debug_assert_eq!(num % self.d[k + 1], 0);
        num / self.d[k + 1]
    }

    /// Admissible range of `x_k` given the coordinates above it.
    fn range(&self, k: usize, target: i128, e_next: i128, nk: i128) -> Option<(i64, i64)> {
        // u² ≤ D_k·(D_{k+1}·T − E_{k+1})
        let slack = ck(ck(self.d[k + 1].checked_mul(target)).checked_sub(e_next));
        if slack < 0 {
            return None;
        }
        let bound = ck(self.d[k].checked_mul(slack));
        let rad = bound.isqrt();
        let dk = self.d[k + 1];
        let lo = (-rad - nk + dk - 1).div_euclid(dk);
        let hi = (rad - nk).div_euclid(dk);
        if lo > hi {
            None
        } else {
            Some((lo as i64, hi as i64))
        }
    }

    /// All `x` with `xᵀGx = target` (or `≤ target` when `exact` is false)
    /// whose last `tail.len()` coordinates equal `tail`. Sorted
    /// lexicographically.
    pub fn enumerate(&self, target: i128, tail: &[i64], exact: bool) -> Vec<Vec<i64>> {
        self.enumerate_limited(target, tail, exact, usize::MAX)
    }

    /// Map every solution through `f` (in parallel over the top free
    /// coordinate), keeping the `Some` results in search order.
    pub fn enumerate_map<T: Send>(
        &self,
        target: i128,
        tail: &[i64],
        exact: bool,
        f: impl Fn(&[i64]) -> Option<T> + Sync,
    ) -> Vec<T> {
        let Some((x, e, top, lo, hi)) = self.start(target, tail, exact) else {
            return vec![];
        };
        let Some(top) = top else {
            return f(&x).into_iter().collect();
        };
        (lo..=hi)
            .into_par_iter()
            .flat_map_iter(|v| {
                let mut x = x.clone();
                x[top] = v;
                let mut sols = Vec::new();
                self.descend(top, target, e, &mut x, exact, &mut sols, usize::MAX);
                sols.into_iter().filter_map(|s| f(&s)).collect::<Vec<_>>()
            })
            .collect()
    }

    /// Fix the tail; returns the partial state and the range of the top
    /// free coordinate (`None` for it when nothing is free).
    #[allow(clippy::type_complexity)]
    fn start(&self, target: i128, tail: &[i64], exact: bool) -> Option<(Vec<i64>, i128, Option<usize>, i64, i64)> {
        let n = self.n;
        assert!(tail.len() <= n);
        if target < 0 {
            return None;
        }
        let free = n - tail.len();
        let mut x = vec![0i64; n];
        x[free..].copy_from_slice(tail);
        let mut e = 0i128;
        for k in (free..n).rev() {
            let u = ck(ck(self.d[k + 1].checked_mul(x[k] as i128)).checked_add(self.n_k(k, &x)));
            e = self.step(k, e, u);
            if e > ck(self.d[k].checked_mul(target)) {
                return None;
            }
        }
        if free == 0 {
            let ok = if exact { e == target } else { e <= target };
            return ok.then_some((x, e, None, 0, 0));
        }
        let top = free - 1;
        let nk = self.n_k(top, &x);
        let (lo, hi) = self.range(top, target, e, nk)?;
        Some((x, e, Some(top), lo, hi))
    }

    /// As [`IntForm::enumerate`], stopping after `limit` solutions (then
    /// unsorted prefix of the search order, sorted).
    pub fn enumerate_limited(&self, target: i128, tail: &[i64], exact: bool, limit: usize) -> Vec<Vec<i64>> {
        let n = self.n;
        assert!(tail.len() <= n);
        if target < 0 {
            return vec![];
        }
        let free = n - tail.len();
        let mut x = vec![0i64; n];
        x[free..].copy_from_slice(tail);
        let mut e = 0i128;
        for k in (free..n).rev() {
            let u = ck(ck(self.d[k + 1].checked_mul(x[k] as i128)).checked_add(self.n_k(k, &x)));
            e = self.step(k, e, u);
            if e > ck(self.d[k].checked_mul(target)) {
                return vec![];
            }
        }
        if free == 0 {
            let ok = if exact { e == target } else { e <= target };
            return if ok { vec![x] } else { vec![] };
        }
        let top = free - 1;
        let nk = self.n_k(top, &x);
        let Some((lo, hi)) = self.range(top, target, e, nk) else {
            return vec![];
        };
        let mut out: Vec<Vec<i64>> = if limit == usize::MAX {
            (lo..=hi)
                .into_par_iter()
                .flat_map_iter(|v| {
                    let mut x = x.clone();
                    x[top] = v;
                    let mut out = Vec::new();
                    self.descend(top, target, e, &mut x, exact, &mut out, usize::MAX);
                    out
                })
                .collect()
        } else {
            let mut out = Vec::new();
            for v in lo..=hi {
                x[top] = v;
                self.descend(top, target, e, &mut x, exact, &mut out, limit);
                if out.len() >= limit {
                    break;
                }
            }
            out
        };
        out.sort_unstable();
        out
    }

    /// Count only; avoids materializing the list.
    pub fn count(&self, target: i128, tail: &[i64], exact: bool) -> usize {
        self.enumerate(target, tail, exact).len()
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        k: usize,
        target: i128,
        e_next: i128,
        x: &mut Vec<i64>,
        exact: bool,
        out: &mut Vec<Vec<i64>>,
        limit: usize,
    ) {
        let nk = self.n_k(k, x);
        let u = ck(ck(self.d[k + 1].checked_mul(x[k] as i128)).checked_add(nk));
        let e = self.step(k, e_next, u);
        if k == 0 {
            if (exact && e == target) || (!exact && e <= target) {
                out.push(x.clone());
            }
            return;
        }
        let nk1 = self.n_k(k - 1, x);
        let Some((lo, hi)) = self.range(k - 1, target, e, nk1) else {
            return;
        };
        for v in lo..=hi {
            x[k - 1] = v;
            self.descend(k - 1, target, e, x, exact, out, limit);
            if out.len() >= limit {
                break;
            }
        }
        x[k - 1] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &[Vec<i64>], target: i128, r: i64) -> usize {
        let n = g.len();
        let mut count = 0;
        let mut x = vec![-r; n];
        loop {
            let mut q = 0i128;
            for i in 0..n {
                for j in 0..n {
                    q += (g[i][j] * x[i] * x[j]) as i128;
                }
            }
            if q == target {
                count += 1;
            }
            let mut i = 0;
            while i < n && x[i] == r {
                x[i] = -r;
                i += 1;
            }
            if i == n {
                break;
            }
            x[i] += 1;
        }
        count
    }

    #[test]
    fn a2_shells() {
        let g = vec![vec![2, -1], vec![-1, 2]];
        let f = IntForm::new(&g).unwrap();
        assert_eq!(f.count(2, &[], true), 6);
        assert_eq!(f.count(6, &[], true), 6);
        assert_eq!(f.count(8, &[], true), 6);
        assert_eq!(f.count(0, &[], true), 1);
        assert_eq!(f.determinant(), 3);
    }

    #[test]
    fn matches_brute_force() {
        let g = vec![vec![4, 1, -1], vec![1, 3, 1], vec![-1, 1, 5]];
        let f = IntForm::new(&g).unwrap();
        for t in 0..30 {
            assert_eq!(f.count(t, &[], true), brute(&g, t as i128, 6), "target {t}");
        }
    }

    #[test]
    fn tail_is_respected() {
        let g = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        let f = IntForm::new(&g).unwrap();
        let all = f.enumerate(4, &[], true);
        let tailed = f.enumerate(4, &[1], true);
        let expect: Vec<_> = all.into_iter().filter(|x| x[2] == 1).collect();
        assert_eq!(tailed, expect);
    }

    #[test]
    fn rejects_indefinite() {
        assert!(IntForm::new(&[vec![1, 2], vec![2, 1]]).is_err());
    }
}
