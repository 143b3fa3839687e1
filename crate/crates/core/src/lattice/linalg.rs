//! Exact linear algebra over Q(i, √3).

use crate::exactnum::{CycElem, RealQuad};

/// Dense matrix, row-major.
pub type CMat = Vec<Vec<CycElem>>;

pub fn zeros(r: usize, c: usize) -> CMat {
    vec![vec![CycElem::zero(); c]; r]
}

pub fn identity(n: usize) -> CMat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = CycElem::one();
    }
    m
}

pub fn conj_transpose(m: &CMat) -> CMat {
    let r = m.len();
    let c = if r == 0 { 0 } else { m[0].len() };
    (0..c).map(|j| (0..r).map(|i| m[i][j].conj()).collect()).collect()
}

pub fn transpose(m: &CMat) -> CMat {
    let r = m.len();
    let c = if r == 0 { 0 } else { m[0].len() };
    (0..c).map(|j| (0..r).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn mat_mul(a: &CMat, b: &CMat) -> CMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][l] * &b[l][j]);
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &CMat, v: &[CycElem]) -> Vec<CycElem> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(CycElem::zero(), |acc, (x, y)| &acc + &(x * y))
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut CMat) -> Vec<usize> {
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
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                if !m[r][j].is_zero() {
                    m[i][j] = &m[i][j] - &(&f * &m[r][j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &CMat) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of `{x : m·x = 0}`.
pub fn kernel(m: &CMat) -> Vec<Vec<CycElem>> {
    let mut a = m.clone();
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycElem::zero(); cols];
            v[f] = CycElem::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[r][f];
            }
            v
        })
        .collect()
}

/// Solve `m·x = b` for square invertible `m`.
pub fn solve(m: &CMat, b: &[CycElem]) -> Option<Vec<CycElem>> {
    let n = m.len();
    let mut aug: CMat = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn inverse(m: &CMat) -> Option<CMat> {
    let n = m.len();
    let mut aug: CMat = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { CycElem::one() } else { CycElem::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &CMat) -> CycElem {
    let n = m.len();
    let mut a = m.clone();
    let mut det = CycElem::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return CycElem::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                if !a[c][j].is_zero() {
                    a[i][j] = &a[i][j] - &(&f * &a[c][j]);
                }
            }
        }
    }
    det
}

pub fn is_hermitian(m: &CMat) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n)
        && (0..n).all(|i| (i..n).all(|j| m[i][j] == m[j][i].conj()))
}

/// Inertia `(positive, negative, zero)` of a hermitian matrix, by
/// symmetric pivoting with exact signs in Q(√3).
pub fn inertia(m: &CMat) -> (usize, usize, usize) {
    assert!(is_hermitian(m), "inertia of a non-hermitian matrix");
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    loop {
        let n = a.len();
        if n == 0 {
            break;
        }
        let piv = (0..n).find(|&i| !a[i][i].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                // f_i = e_i + λe_j with λ = a_ij has norm 2|a_ij|² > 0
                let lam = a[i][j].clone();
                let lam_bar = lam.conj();
                for k in 0..n {
                    let t = &a[j][k] * &lam;
                    a[i][k] = &a[i][k] + &t;
                }
                for k in 0..n {
                    let t = &a[k][j] * &lam_bar;
                    a[k][i] = &a[k][i] + &t;
                }
                i
            }
        };
        let d = a[p][p].re.clone();
        match d.sign() {
            1 => pos += 1,
            -1 => neg += 1,
            _ => unreachable!(),
        }
        let dinv = CycElem::real(d.inv());
        let rest: Vec<usize> = (0..n).filter(|&k| k != p).collect();
        let next: CMat = rest
            .iter()
            .map(|&k| {
                let f = &a[k][p] * &dinv;
                rest.iter()
                    .map(|&l| {
                        if f.is_zero() || a[p][l].is_zero() {
                            a[k][l].clone()
                        } else {
                            &a[k][l] - &(&f * &a[p][l])
                        }
                    })
                    .collect()
            })
            .collect();
        a = next;
    }
    let zero = m.len() - pos - neg;
    (pos, neg, zero)
}

pub fn real_entry(x: &RealQuad) -> CycElem {
    CycElem::real(x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycElem {
        CycElem::int(n)
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![
            vec![c(2), CycElem::theta(), c(0)],
            vec![CycElem::omega(), c(1), CycElem::sqrt3()],
            vec![c(0), CycElem::i(), c(5)],
        ];
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(3));
        assert_eq!(&determinant(&m) * &determinant(&inv), CycElem::one());
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = vec![vec![c(1), c(2), c(3)], vec![c(2), c(4), c(6)]];
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(mat_vec(&m, &v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inertia_of_zero_diagonal_block() {
        let t = CycElem::theta();
        let m = vec![vec![c(0), t.clone()], vec![t.conj(), c(0)]];
        assert_eq!(inertia(&m), (1, 1, 0));
        let d = vec![vec![c(-1), c(0), c(0)], vec![c(0), c(0), c(0)], vec![c(0), c(0), c(3)]];
        assert_eq!(inertia(&d), (1, 1, 1));
    }
}
