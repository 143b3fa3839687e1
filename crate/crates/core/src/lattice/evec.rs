//! Vectors over the Eisenstein integers and their integral view.

use crate::exactnum::{CycElem, EisInt};

pub type EVec = Vec<EisInt>;

/// Diagonal hermitian form `Σ d_k x_k ȳ_k`.
pub fn herm_diag(x: &[EisInt], y: &[EisInt], diag: &[i64]) -> EisInt {
    let mut acc = EisInt::ZERO;
    for ((a, b), d) in x.iter().zip(y).zip(diag) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let p = *a * b.conj();
        acc = acc + EisInt::new(p.m * d, p.n * d);
    }
    acc
}

/// Hermitian form given by a Gram matrix: `Σ x_i G_ij ȳ_j`.
pub fn herm_gram(x: &[EisInt], y: &[EisInt], g: &[Vec<EisInt>]) -> EisInt {
    let mut acc = EisInt::ZERO;
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() || g[i][j].is_zero() {
                continue;
            }
            acc = acc + *a * g[i][j] * b.conj();
        }
    }
    acc
}

/// `(2/3)·Re(z)` for `z ∈ θE`; `None` if not an integer.
pub fn two_thirds_re(z: EisInt) -> Option<i64> {
    let t = 2 * z.m - z.n;
    (t % 3 == 0).then_some(t / 3)
}

/// Interleaved `(m, n)` integer coordinates.
pub fn to_z(x: &[EisInt]) -> Vec<i64> {
    x.iter().flat_map(|e| [e.m, e.n]).collect()
}

pub fn from_z(z: &[i64]) -> EVec {
    z.chunks(2).map(|c| EisInt::new(c[0], c[1])).collect()
}

pub fn scale(u: EisInt, x: &[EisInt]) -> EVec {
    x.iter().map(|a| u * *a).collect()
}

pub fn add(x: &[EisInt], y: &[EisInt]) -> EVec {
    x.iter().zip(y).map(|(a, b)| *a + *b).collect()
}

pub fn sub(x: &[EisInt], y: &[EisInt]) -> EVec {
    x.iter().zip(y).map(|(a, b)| *a - *b).collect()
}

pub fn is_zero(x: &[EisInt]) -> bool {
    x.iter().all(|a| a.is_zero())
}

/// Representative of the scalar class `{u·x : u a unit}`: the least of the
/// six associates in the canonical (lexicographic) order.
pub fn canonical_class(x: &[EisInt]) -> EVec {
    EisInt::units().iter().map(|&u| scale(u, x)).min().unwrap()
}

pub fn to_cyc(x: &[EisInt]) -> Vec<CycElem> {
    x.iter().map(|a| a.to_cyc()).collect()
}

pub fn from_cyc(x: &[CycElem]) -> Option<EVec> {
    x.iter().map(EisInt::from_cyc).collect()
}

pub fn lorentz_diag(n: usize) -> Vec<i64> {
    let mut d = vec![1; n];
    if n > 0 {
        d[0] = -1;
    }
    d
}

/// Basis of the E-span of `gens` by Euclidean row reduction over E (a
/// Euclidean domain). The result is upper triangular in echelon form.
pub fn eis_basis(gens: &[EVec]) -> Vec<EVec> {
    let mut rows: Vec<EVec> = gens.iter().filter(|g| !is_zero(g)).cloned().collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut piv = 0;
    for c in 0..cols {
        if piv == rows.len() {
            break;
        }
        loop {
            let Some(best) = (piv..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].norm())
            else {
                break;
            };
            rows.swap(piv, best);
            let mut clean = true;
            for i in piv + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_round(rows[piv][c]);
                let sub = scale(q, &rows[piv]);
                rows[i] = self::sub(&rows[i], &sub);
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if (piv..rows.len()).any(|i| !rows[i][c].is_zero()) {
            piv += 1;
        }
    }
    rows.truncate(piv);
    rows
}
