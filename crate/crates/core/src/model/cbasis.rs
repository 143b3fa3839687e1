//! The basis `c, s₀; s_A…s_D; s₅,s₄,s₃,s₂; s₇,s₈,s₉,s₁₀` adapted to the
//! center `c`, in which `L` splits as a rank-2 piece plus three copies of L₄.

use crate::exactnum::{CycElem, EisInt};
use crate::lattice::evec::{self, EVec};
use crate::lattice::linalg::{self, CMat};
use crate::lattice::{hnf_membership, ELattice, LatticeError, Membership};

use super::{herm, lorentz, AVec, RootLabel, RootTable, A4_ROOTS, TWELVE_GON};

/// The three A₄ blocks as 12-gon indices / A₄ roots.
pub fn block_labels() -> [[RootLabel; 4]; 3] {
    let s = |j: usize| TWELVE_GON[j];
    [A4_ROOTS, [s(5), s(4), s(3), s(2)], [s(7), s(8), s(9), s(10)]]
}

/// Components `[a/θ, b/θ; v₁; v₂; v₃]` with each `v_i` given by its
/// E-coordinates over the block roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CCoords {
    pub a: EisInt,
    pub b: EisInt,
    pub v: [[EisInt; 4]; 3],
}

#[derive(Clone, Debug)]
pub struct CBasis {
    /// basis vectors in standard coordinates
    pub vectors: Vec<AVec>,
    /// the same, as Eisenstein vectors
    pub evectors: Vec<EVec>,
    /// `c/θ`
    pub c0: EVec,
    /// inverse of the matrix whose columns are the basis vectors
    from_std: CMat,
}

impl CBasis {
    pub fn build(roots: &RootTable, c: &AVec) -> Self {
        let theta = CycElem::theta();
        let c0c: AVec = c.iter().map(|x| x / &theta).collect();
        let c0 = evec::from_cyc(&c0c).expect("c/θ is an Eisenstein vector");
        let mut evectors = vec![evec::scale(EisInt::THETA, &c0), roots.get(TWELVE_GON[0]).clone()];
        for block in block_labels() {
            for l in block {
                evectors.push(roots.get(l).clone());
            }
        }
        let vectors: Vec<AVec> = evectors.iter().map(|v| evec::to_cyc(v)).collect();
        let cols = linalg::transpose(&vectors);
        let from_std = linalg::inverse(&cols).expect("c-basis is a basis");
        CBasis { vectors, evectors, c0, from_std }
    }

    pub fn gram(&self) -> CMat {
        self.vectors.iter().map(|x| self.vectors.iter().map(|y| herm(x, y)).collect()).collect()
    }

    /// The displayed block Gram: `diag(−3,3) ⊕ A₄ ⊕ A₄ ⊕ A₄`.
    pub fn expected_gram() -> CMat {
        let mut g = linalg::zeros(14, 14);
        g[0][0] = CycElem::int(-3);
        g[1][1] = CycElem::int(3);
        let t = CycElem::theta();
        for b in 0..3 {
            let o = 2 + 4 * b;
            for k in 0..4 {
                g[o + k][o + k] = CycElem::int(3);
            }
            g[o][o + 1] = t.conj();
            g[o + 1][o] = t.clone();
            g[o + 1][o + 2] = t.clone();
            g[o + 2][o + 1] = t.conj();
            g[o + 2][o + 3] = t.conj();
            g[o + 3][o + 2] = t.clone();
        }
        g
    }

    /// Raw coordinates `x` with `v = Σ x_k·basis_k`.
    pub fn coords(&self, v: &[CycElem]) -> Vec<CycElem> {
        linalg::mat_vec(&self.from_std, v)
    }

    /// `[a/θ, b/θ; …]` if `a`, `b` and all block coordinates are Eisenstein.
    pub fn c_coords(&self, v: &[CycElem]) -> Option<CCoords> {
        let x = self.coords(v);
        let theta = CycElem::theta();
        let a = EisInt::from_cyc(&(&x[0] * &theta))?;
        let b = EisInt::from_cyc(&(&x[1] * &theta))?;
        let mut blocks = [[EisInt::ZERO; 4]; 3];
        for (bi, block) in blocks.iter_mut().enumerate() {
            for (k, e) in block.iter_mut().enumerate() {
                *e = EisInt::from_cyc(&x[2 + 4 * bi + k])?;
            }
        }
        Some(CCoords { a, b, v: blocks })
    }

    /// Standard coordinates of `[a/θ, b/θ; v₁; v₂; v₃]`, exactly in E.
    pub fn to_standard(&self, cc: &CCoords) -> EVec {
        let mut out = evec::scale(cc.a, &self.c0);
        out[TWELVE_GON[0].index() + 1] = out[TWELVE_GON[0].index() + 1] + cc.b;
        for (bi, block) in cc.v.iter().enumerate() {
            for (k, e) in block.iter().enumerate() {
                if !e.is_zero() {
                    out = evec::add(&out, &evec::scale(*e, &self.evectors[2 + 4 * bi + k]));
                }
            }
        }
        out
    }

    /// Generators of the lattice described by the characterization:
    /// `(c+s₀)/θ`, `c`, `s₀` and the twelve block roots.
    pub fn characterization_generators(&self) -> Vec<EVec> {
        let mut g = vec![self.to_standard(&CCoords { a: EisInt::ONE, b: EisInt::ONE, v: [[EisInt::ZERO; 4]; 3] })];
        g.extend(self.evectors.iter().cloned());
        g
    }

    /// Both containments between the characterization lattice and the
    /// E-span of the 26 roots, decided by HNF membership.
    pub fn containment(&self, roots: &RootTable) -> Result<ContainmentReport, LatticeError> {
        let gens = self.characterization_generators();
        let mut roots_in_char = Vec::new();
        for r in roots.all() {
            roots_in_char.push(hnf_membership(&gens, &evec::to_cyc(r))?);
        }
        let mut char_in_roots = Vec::new();
        for g in &gens {
            char_in_roots.push(hnf_membership(roots.all(), &evec::to_cyc(g))?);
        }
        Ok(ContainmentReport { roots_in_char, char_in_roots })
    }

    /// Sublattice `L_DM = L ∩ {s_A,…,s_D}⊥` as the span of `c`, `(c+s₀)/θ`
    /// and the last two blocks.
    pub fn l_dm_generators(&self) -> Vec<EVec> {
        let g = self.characterization_generators();
        [0, 1, 2].iter().map(|&i| g[i].clone()).chain(g[7..].iter().cloned()).collect()
    }

    pub fn l_dm(&self) -> ELattice {
        ELattice::new(&self.l_dm_generators(), lorentz())
    }
}

#[derive(Clone, Debug)]
pub struct ContainmentReport {
    pub roots_in_char: Vec<Membership>,
    pub char_in_roots: Vec<Membership>,
}

impl ContainmentReport {
    pub fn holds(&self) -> bool {
        self.roots_in_char.iter().chain(&self.char_in_roots).all(Membership::is_member)
    }
}
