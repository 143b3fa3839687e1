//! Triflections, words in them, and exact identities among the resulting
//! isometries of `L`.
//!
//! Matrices act on column vectors and words multiply left to right, so the
//! word `S₁S₂` is the matrix product `S₁·S₂`.

pub mod checks;
pub mod word;

use std::sync::OnceLock;

use crate::exactnum::{CycElem, EisInt};
use crate::lattice::evec::{self, EVec};
use crate::lattice::linalg::{self, CMat};
use crate::model::{self, herm, Model, RootLabel, A4_ROOTS, TWELVE_GON};

pub use word::{parse_word, Group, Word, WordError};

const N: usize = model::DIM;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsometryError {
    #[error("matrix does not preserve the hermitian form")]
    NotIsometry,
    #[error("vector of norm {0} is not a root")]
    NotRoot(String),
    #[error("matrix does not preserve the lattice")]
    NotLattice,
}

/// 14×14 matrix over Q(i,√3) preserving `diag(−1,1,…,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    m: CMat,
}

impl Isometry {
    pub fn new(m: CMat) -> Result<Self, IsometryError> {
        if m.len() != N || m.iter().any(|r| r.len() != N) || !model::preserves_form(&m) {
            return Err(IsometryError::NotIsometry);
        }
        Ok(Isometry { m })
    }

    pub fn identity() -> Self {
        Isometry { m: linalg::identity(N) }
    }

    pub fn matrix(&self) -> &CMat {
        &self.m
    }

    pub fn mul(&self, o: &Isometry) -> Isometry {
        Isometry { m: linalg::mat_mul(&self.m, &o.m) }
    }

    /// `J M* J`
    pub fn inverse(&self) -> Isometry {
        let mut m = linalg::conj_transpose(&self.m);
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                if (i == 0) != (j == 0) {
                    *x = -&*x;
                }
            }
        }
        Isometry { m }
    }

    pub fn apply(&self, v: &[CycElem]) -> Vec<CycElem> {
        linalg::mat_vec(&self.m, v)
    }

    /// `λ` with `M = λI`.
    pub fn scalar(&self) -> Option<CycElem> {
        let l = self.m[0][0].clone();
        for (i, row) in self.m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if (i == j && *x != l) || (i != j && !x.is_zero()) {
                    return None;
                }
            }
        }
        Some(l)
    }
}

/// `x ↦ x − (1−ω)⟨x,s⟩/s²·s` for a norm 3 vector `s`.
pub fn triflection(s: &[CycElem]) -> Result<Isometry, IsometryError> {
    let n = model::norm(s);
    if n != CycElem::int(3) {
        return Err(IsometryError::NotRoot(n.to_compact()));
    }
    let f = &(&CycElem::one() - &CycElem::omega()) / &CycElem::int(3);
    let mut m = linalg::identity(N);
    for a in 0..N {
        for b in 0..N {
            let mut t = &(&f * &s[a]) * &s[b].conj();
            if b == 0 {
                t = -t;
            }
            m[a][b] = &m[a][b] - &t;
        }
    }
    Ok(Isometry { m })
}

/// An E-basis of `L` and the change of coordinates to the standard frame.
pub struct Frame {
    pub basis: Vec<EVec>,
    /// basis vectors as columns
    b: CMat,
    b_inv: CMat,
    gram: CMat,
    gram_inv: CMat,
}

impl Frame {
    pub fn get() -> &'static Frame {
        static F: OnceLock<Frame> = OnceLock::new();
        F.get_or_init(|| {
            let m = Model::get();
            let basis = evec::eis_basis(m.roots.all());
            assert_eq!(basis.len(), N);
            let cols: CMat = basis.iter().map(|v| evec::to_cyc(v)).collect();
            let b = linalg::transpose(&cols);
            let b_inv = linalg::inverse(&b).expect("basis of full rank");
            let gram: CMat = cols.iter().map(|x| cols.iter().map(|y| herm(y, x)).collect()).collect();
            let gram_inv = linalg::inverse(&gram).expect("nondegenerate");
            Frame { basis, b, b_inv, gram, gram_inv }
        })
    }

    /// Coordinates of a vector over the basis, if it lies in `L`.
    pub fn coords(&self, v: &[CycElem]) -> Option<EVec> {
        evec::from_cyc(&linalg::mat_vec(&self.b_inv, v))
    }

    pub fn coords_e(&self, v: &[EisInt]) -> Option<EVec> {
        self.coords(&evec::to_cyc(v))
    }

    pub fn vector(&self, c: &[EisInt]) -> Vec<CycElem> {
        linalg::mat_vec(&self.b, &evec::to_cyc(c))
    }
}

/// Isometry of `L` in basis coordinates: column `k` holds the coordinates
/// of the image of the `k`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeMap {
    e: Vec<[EisInt; N]>,
}

impl LatticeMap {
    pub fn identity() -> Self {
        let mut e = vec![[EisInt::ZERO; N]; N];
        for (i, r) in e.iter_mut().enumerate() {
            r[i] = EisInt::ONE;
        }
        LatticeMap { e }
    }

    pub fn scalar(u: EisInt) -> Self {
        let mut e = vec![[EisInt::ZERO; N]; N];
        for (i, r) in e.iter_mut().enumerate() {
            r[i] = u;
        }
        LatticeMap { e }
    }

    /// Triflection in a root of `L`, computed in integer arithmetic.
    pub fn triflection(s: &[EisInt]) -> Result<Self, IsometryError> {
        let n = model::herm_e(s, s);
        if n != EisInt::new(3, 0) {
            return Err(IsometryError::NotRoot(format!("{n:?}")));
        }
        let fr = Frame::get();
        let sc = fr.coords_e(s).ok_or(IsometryError::NotLattice)?;
        let f = EisInt::ONE - EisInt::OMEGA;
        let mut e = Self::identity().e;
        for (k, b) in fr.basis.iter().enumerate() {
            let h = f * model::herm_e(b, s);
            let c = EisInt::new(h.m / 3, h.n / 3);
            if c * EisInt::new(3, 0) != h {
                return Err(IsometryError::NotLattice);
            }
            for j in 0..N {
                e[j][k] = e[j][k] - c * sc[j];
            }
        }
        Ok(LatticeMap { e })
    }

    pub fn from_isometry(w: &Isometry) -> Result<Self, IsometryError> {
        let fr = Frame::get();
        let m = linalg::mat_mul(&fr.b_inv, &linalg::mat_mul(&w.m, &fr.b));
        let mut e = vec![[EisInt::ZERO; N]; N];
        for i in 0..N {
            for j in 0..N {
                e[i][j] = EisInt::from_cyc(&m[i][j]).ok_or(IsometryError::NotLattice)?;
            }
        }
        Ok(LatticeMap { e })
    }

    pub fn to_isometry(&self) -> Isometry {
        let fr = Frame::get();
        Isometry { m: linalg::mat_mul(&fr.b, &linalg::mat_mul(&self.to_cmat(), &fr.b_inv)) }
    }

    fn to_cmat(&self) -> CMat {
        self.e.iter().map(|r| r.iter().map(|x| x.to_cyc()).collect()).collect()
    }

    pub fn mul(&self, o: &LatticeMap) -> LatticeMap {
        let mut e = vec![[EisInt::ZERO; N]; N];
        for i in 0..N {
            for k in 0..N {
                let a = self.e[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..N {
                    e[i][j] = e[i][j] + a * o.e[k][j];
                }
            }
        }
        LatticeMap { e }
    }

    /// `G⁻¹ E* G` where `G` is the Gram matrix of the basis.
    pub fn inverse(&self) -> LatticeMap {
        let fr = Frame::get();
        let m = linalg::mat_mul(&fr.gram_inv, &linalg::mat_mul(&linalg::conj_transpose(&self.to_cmat()), &fr.gram));
        let mut e = vec![[EisInt::ZERO; N]; N];
        for i in 0..N {
            for j in 0..N {
                e[i][j] = EisInt::from_cyc(&m[i][j]).expect("inverse of a lattice isometry is integral");
            }
        }
        LatticeMap { e }
    }

    pub fn pow(&self, k: i64) -> LatticeMap {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Image of a lattice vector given in standard coordinates.
    pub fn apply(&self, v: &[EisInt]) -> EVec {
        let fr = Frame::get();
        let c = fr.coords_e(v).expect("lattice vector");
        let mut out = vec![EisInt::ZERO; N];
        for i in 0..N {
            for j in 0..N {
                out[i] = out[i] + self.e[i][j] * c[j];
            }
        }
        evec::from_cyc(&fr.vector(&out)).expect("image in E^14")
    }

    pub fn as_scalar(&self) -> Option<EisInt> {
        let u = self.e[0][0];
        (*self == Self::scalar(u)).then_some(u)
    }

    fn scaled(&self, u: EisInt) -> LatticeMap {
        LatticeMap { e: self.e.iter().map(|r| r.map(|x| u * x)).collect() }
    }

    /// Unit `u` with `self = u·other`.
    pub fn unit_multiple_of(&self, other: &LatticeMap) -> Option<EisInt> {
        EisInt::units().into_iter().find(|&u| other.scaled(u) == *self)
    }

    /// Representative of the class modulo the six unit scalars.
    pub fn projective_canonical(&self) -> LatticeMap {
        EisInt::units().into_iter().map(|u| self.scaled(u)).min().expect("six units")
    }

    /// Order modulo scalars, if at most `cap`.
    pub fn projective_order(&self, cap: u32) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.as_scalar().is_some() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

impl Group for LatticeMap {
    fn identity() -> Self {
        LatticeMap::identity()
    }
    fn compose(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn invert(&self) -> Self {
        self.inverse()
    }
}

/// `W` maps each of the 26 point and line roots into `L`.
pub fn preserves_lattice(w: &Isometry) -> bool {
    let fr = Frame::get();
    Model::get().roots.all().iter().all(|r| fr.coords(&w.apply(&evec::to_cyc(r))).is_some())
}

/// The sixteen named triflections.
pub struct Reflections {
    pub s: Vec<LatticeMap>,
    pub s_inv: Vec<LatticeMap>,
    pub a: Vec<LatticeMap>,
    pub a_inv: Vec<LatticeMap>,
}

impl Reflections {
    pub fn get() -> &'static Reflections {
        static R: OnceLock<Reflections> = OnceLock::new();
        R.get_or_init(|| {
            let m = Model::get();
            let build = |l: RootLabel| LatticeMap::triflection(m.roots.get(l)).expect("root of L");
            let s: Vec<LatticeMap> = TWELVE_GON.iter().map(|&l| build(l)).collect();
            let a: Vec<LatticeMap> = A4_ROOTS.iter().map(|&l| build(l)).collect();
            let inv = |v: &[LatticeMap]| v.iter().map(|x| x.mul(x)).collect();
            Reflections { s_inv: inv(&s), a_inv: inv(&a), s, a }
        })
    }

    /// Generator for a symbol `S0..S11`, `SA..SD` (or `g…`), `inverse`
    /// selecting `S⁻¹ = S²`.
    pub fn resolve(&self, name: &str) -> Option<LatticeMap> {
        let rest = name.strip_prefix('S').or_else(|| name.strip_prefix('g'))?;
        match rest {
            "A" | "B" | "C" | "D" => Some(self.a[(rest.as_bytes()[0] - b'A') as usize].clone()),
            _ => {
                let j: usize = rest.parse().ok()?;
                (j < 12).then(|| self.s[j].clone())
            }
        }
    }
}

/// Evaluate a word in the sixteen triflections.
pub fn eval_word(w: &Word) -> Result<LatticeMap, WordError> {
    let r = Reflections::get();
    w.eval(&|name| r.resolve(name))
}

pub fn eval_str(s: &str) -> Result<LatticeMap, WordError> {
    eval_word(&parse_word(s)?)
}

/// Action of `W` on the complex line through ρ and τ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneAction {
    pub alpha: CycElem,
    pub beta: CycElem,
    pub ratio: CycElem,
}

/// `Wρ = αρ` and `Wu = βu` for `u = τ − (⟨τ,ρ⟩/ρ²)ρ`; `None` when `W`
/// does not preserve the line of ρ and the plane of ρ, τ.
pub fn plane_action(w: &LatticeMap) -> Option<PlaneAction> {
    let m = Model::get();
    let iso = w.to_isometry();
    let alpha = model::scalar_multiple(&m.rho, &iso.apply(&m.rho))?;
    let c = &herm(&m.tau, &m.rho) / &model::norm(&m.rho);
    let u = model::axpy(&(-c), &m.rho, &m.tau);
    let beta = model::scalar_multiple(&u, &iso.apply(&u))?;
    let ratio = &beta / &alpha;
    Some(PlaneAction { alpha, beta, ratio })
}

/// `e^{iπ/3} = 1 + ω` as an Eisenstein unit.
pub const E_PI_I_3: EisInt = EisInt::new(1, 1);

#[cfg(test)]
mod tests;
