//! Finite permutations and the affine symmetric group in window notation.

use std::fmt;

use crate::isometries::word::Group;

/// Permutation of `0..n`, stored as the image list. Products compose like
/// matrices: `(p·q)(x) = p(q(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity_of(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// The transposition `(a b)` on `0..n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        Perm(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0.get(x).copied().unwrap_or(x)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }
}

/// Degree-agnostic: the empty list is the identity of every degree and
/// shorter permutations fix the points they do not mention.
impl Group for Perm {
    fn identity() -> Self {
        Perm(Vec::new())
    }

    fn compose(&self, o: &Self) -> Self {
        let n = self.degree().max(o.degree());
        Perm((0..n).map(|x| self.apply(o.apply(x))).collect())
    }

    fn invert(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }
}

pub const PERIOD: usize = 12;

/// Bijection `f: Z → Z` with `f(i+12) = f(i)+12` and `Σ (f(i) − i) = 0`
/// over a period, stored as the window `f(1), …, f(12)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    w: [i64; PERIOD],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WindowError {
    #[error("window residues are not a permutation of 1..12")]
    Residues,
    #[error("window displacement sums to {0}, not 0")]
    Sum(i64),
}

const N: i64 = PERIOD as i64;

impl AffinePermutation {
    pub fn from_window(w: [i64; PERIOD]) -> Result<Self, WindowError> {
        let mut seen = [false; PERIOD];
        for &x in &w {
            let r = x.rem_euclid(N) as usize;
            if seen[r] {
                return Err(WindowError::Residues);
            }
            seen[r] = true;
        }
        let s: i64 = w.iter().enumerate().map(|(i, &x)| x - (i as i64 + 1)).sum();
        if s != 0 {
            return Err(WindowError::Sum(s));
        }
        Ok(AffinePermutation { w })
    }

    pub fn window(&self) -> [i64; PERIOD] {
        self.w
    }

    /// `f(x)` for any integer `x`.
    pub fn apply(&self, x: i64) -> i64 {
        let k = (x - 1).div_euclid(N);
        let r = (x - 1).rem_euclid(N) as usize;
        self.w[r] + k * N
    }

    /// The reduction mod 12, as a permutation of `0..12` (point `i` stands
    /// for the residue class of `i+1`).
    pub fn finite_part(&self) -> Perm {
        Perm(self.w.iter().map(|&x| (x - 1).rem_euclid(N) as usize).collect())
    }

    /// Translation vector `t` with `f(i) = i + 12·t_i`, if the finite part is
    /// trivial.
    pub fn translation_part(&self) -> Option<[i64; PERIOD]> {
        let mut t = [0; PERIOD];
        for (i, &x) in self.w.iter().enumerate() {
            let d = x - (i as i64 + 1);
            if d.rem_euclid(N) != 0 {
                return None;
            }
            t[i] = d / N;
        }
        Some(t)
    }

    pub fn translation(t: [i64; PERIOD]) -> Result<Self, WindowError> {
        let mut w = [0; PERIOD];
        for i in 0..PERIOD {
            w[i] = i as i64 + 1 + N * t[i];
        }
        Self::from_window(w)
    }
}

/// The affine simple reflection swapping `i` and `i+1` in every period;
/// `cox_generator(0)` swaps `0 ↔ 1` (so `12 ↔ 13`).
pub fn cox_generator(i: usize) -> AffinePermutation {
    assert!(i < PERIOD, "generator index {i} out of range");
    let mut w: [i64; PERIOD] = std::array::from_fn(|k| k as i64 + 1);
    if i == 0 {
        w[0] = 0;
        w[PERIOD - 1] = N + 1;
    } else {
        w.swap(i - 1, i);
    }
    AffinePermutation { w }
}

impl Group for AffinePermutation {
    fn identity() -> Self {
        AffinePermutation { w: std::array::from_fn(|k| k as i64 + 1) }
    }

    fn compose(&self, o: &Self) -> Self {
        AffinePermutation { w: std::array::from_fn(|k| self.apply(o.w[k])) }
    }

    fn invert(&self) -> Self {
        let mut w = [0; PERIOD];
        for (i, &x) in self.w.iter().enumerate() {
            let r = (x - 1).rem_euclid(N) as usize;
            let k = (x - 1).div_euclid(N);
            // f(i+1) = x = (r+1) + 12k, so f⁻¹(r+1) = i+1 − 12k
            w[r] = i as i64 + 1 - k * N;
        }
        AffinePermutation { w }
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.w.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
