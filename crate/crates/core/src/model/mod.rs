//! The concrete lattice L ⊂ C^{13,1}: point- and line-roots of P²(F₃),
//! special points, the 12-gon and A₄ roots, the c-basis and the
//! collineation symmetry.

mod cbasis;
mod collineation;

use std::fmt;
use std::sync::OnceLock;

use crate::exactnum::{CycElem, EisInt, Rat, RealQuad};
use crate::lattice::evec::{self, EVec};
use crate::lattice::{herm_cyc, ELattice};

pub use cbasis::{CBasis, CCoords};
pub use collineation::{preserves_form, scalar_multiple, Collineation, CollineationGroup, Lifter, D24};

pub const DIM: usize = 14;

/// Vector in C^{13,1}, coordinates `(x₀; x₁, …, x₁₃)`.
pub type AVec = Vec<CycElem>;

/// `⟨x,y⟩ = −x₀ȳ₀ + Σ x_k ȳ_k`
pub fn herm(x: &[CycElem], y: &[CycElem]) -> CycElem {
    herm_cyc(x, y, &lorentz())
}

pub fn norm(x: &[CycElem]) -> CycElem {
    herm(x, x)
}

pub fn lorentz() -> Vec<i64> {
    evec::lorentz_diag(DIM)
}

pub fn herm_e(x: &[EisInt], y: &[EisInt]) -> EisInt {
    evec::herm_diag(x, y, &lorentz())
}

pub fn axpy(a: &CycElem, x: &[CycElem], y: &[CycElem]) -> AVec {
    x.iter().zip(y).map(|(xi, yi)| &(a * xi) + yi).collect()
}

pub fn scale(a: &CycElem, x: &[CycElem]) -> AVec {
    x.iter().map(|xi| a * xi).collect()
}

pub fn add(x: &[CycElem], y: &[CycElem]) -> AVec {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[CycElem], y: &[CycElem]) -> AVec {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Label of a point- or line-root, 1-based as in `p₁…p₁₃`, `l₁…l₁₃`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RootLabel {
    P(u8),
    L(u8),
}

impl RootLabel {
    /// Index in the table order `p₁…p₁₃, l₁…l₁₃`.
    pub fn index(self) -> usize {
        match self {
            RootLabel::P(i) => i as usize - 1,
            RootLabel::L(j) => 12 + j as usize,
        }
    }

    pub fn from_index(k: usize) -> RootLabel {
        if k < 13 {
            RootLabel::P(k as u8 + 1)
        } else {
            RootLabel::L((k - 12) as u8)
        }
    }

    pub fn all() -> Vec<RootLabel> {
        (0..26).map(RootLabel::from_index).collect()
    }

    pub fn is_point(self) -> bool {
        matches!(self, RootLabel::P(_))
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLabel::P(i) => write!(f, "p{i}"),
            RootLabel::L(j) => write!(f, "l{j}"),
        }
    }
}

/// Point `p_i` lies on line `l_j` iff `i − j ∈ {0, 1, 3, 9}` mod 13.
pub fn incident(point: u8, line: u8) -> bool {
    let d = (point as i32 - line as i32).rem_euclid(13);
    matches!(d, 0 | 1 | 3 | 9)
}

/// The 26 point- and line-roots.
#[derive(Clone, Debug)]
pub struct RootTable {
    roots: Vec<EVec>,
}

impl RootTable {
    pub fn build() -> Self {
        let mut roots = Vec::with_capacity(26);
        for i in 1..=13 {
            let mut v = vec![EisInt::ZERO; DIM];
            v[i] = EisInt::THETA;
            roots.push(v);
        }
        for j in 1..=13u8 {
            let mut v = vec![EisInt::ZERO; DIM];
            v[0] = EisInt::ONE;
            for i in 1..=13u8 {
                if incident(i, j) {
                    v[i as usize] = EisInt::ONE;
                }
            }
            roots.push(v);
        }
        RootTable { roots }
    }

    pub fn get(&self, l: RootLabel) -> &EVec {
        &self.roots[l.index()]
    }

    pub fn cyc(&self, l: RootLabel) -> AVec {
        evec::to_cyc(self.get(l))
    }

    pub fn all(&self) -> &[EVec] {
        &self.roots
    }
}

/// A labelled point of the ball (or of its boundary).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPoint {
    pub label: String,
    pub vector: AVec,
    pub t: Option<Rat>,
}

/// 12-gon `s₀…s₁₁` in cyclic order.
pub const TWELVE_GON: [RootLabel; 12] = [
    RootLabel::P(6),
    RootLabel::L(10),
    RootLabel::P(13),
    RootLabel::L(4),
    RootLabel::P(7),
    RootLabel::L(11),
    RootLabel::P(12),
    RootLabel::L(9),
    RootLabel::P(9),
    RootLabel::L(8),
    RootLabel::P(8),
    RootLabel::L(5),
];

/// A₄ roots `s_A, s_B, s_C, s_D`.
pub const A4_ROOTS: [RootLabel; 4] = [RootLabel::L(1), RootLabel::P(2), RootLabel::L(2), RootLabel::P(3)];

pub const A4_NAMES: [&str; 4] = ["A", "B", "C", "D"];

/// Which polygon of the basepoint-change argument.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PolygonCase {
    /// triangle (τ, τ′, ρ) with τ′ the projection of τ to s_A⊥
    TriangleA,
    /// triangle (τ, τ′, ρ) with τ′ the projection of τ to s_B⊥
    TriangleB,
    /// quadrilateral (τ, τ′, ρ′, ρ) with τ′, ρ′ the projections to s₀⊥
    Quadrilateral,
}

impl PolygonCase {
    pub const ALL: [PolygonCase; 3] = [PolygonCase::TriangleA, PolygonCase::TriangleB, PolygonCase::Quadrilateral];

    pub fn name(self) -> &'static str {
        match self {
            PolygonCase::TriangleA => "triangle_sA",
            PolygonCase::TriangleB => "triangle_sB",
            PolygonCase::Quadrilateral => "quadrilateral_s0",
        }
    }

    /// The designated mirror of the case.
    pub fn mirror(self) -> RootLabel {
        match self {
            PolygonCase::TriangleA => A4_ROOTS[0],
            PolygonCase::TriangleB => A4_ROOTS[1],
            PolygonCase::Quadrilateral => TWELVE_GON[0],
        }
    }
}

/// Vertices of one case, with names.
#[derive(Clone, Debug)]
pub struct PolygonVertices {
    pub case: PolygonCase,
    pub names: Vec<&'static str>,
    pub vertices: Vec<AVec>,
    /// `m′`: midpoint of τ′ρ′ (quadrilateral) or τ′ρ (triangles)
    pub m_prime: AVec,
}

/// Every fixed object of the construction.
pub struct Model {
    pub roots: RootTable,
    pub lattice: ELattice,
    pub p_inf: AVec,
    pub l_inf: AVec,
    pub tau: AVec,
    pub rho: AVec,
    pub c: AVec,
    /// `c/θ`, an Eisenstein vector
    pub c0: EVec,
    /// `m = (τ+ρ)/2`
    pub m: AVec,
    pub cbasis: CBasis,
}

fn quad(p: i64, q: i64, r: i64, s: i64) -> CycElem {
    CycElem::real(RealQuad::frac(p, q, r, s))
}

impl Model {
    pub fn get() -> &'static Model {
        static M: OnceLock<Model> = OnceLock::new();
        M.get_or_init(Model::build)
    }

    fn build() -> Model {
        let roots = RootTable::build();
        let lattice = ELattice::new(roots.all(), lorentz());
        let theta = CycElem::theta();
        let mut p_inf = vec![CycElem::zero(); DIM];
        p_inf[0] = theta.conj();
        let mut l_inf = vec![CycElem::one(); DIM];
        l_inf[0] = CycElem::int(4);
        let tau = axpy(&CycElem::i(), &p_inf, &l_inf);
        let lam = quad(2, 1, 1, 1);
        let k = |n: i64| CycElem::int(n);
        let rho: AVec = vec![
            &lam * &k(6),
            &lam * &k(2),
            k(0),
            k(0),
            &lam * &k(2),
            &lam * &k(3),
            k(1),
            k(1),
            k(1),
            k(1),
            &lam * &k(2),
            &lam * &k(3),
            k(1),
            k(1),
        ];
        let c0: EVec = [4, 1, 0, 0, 2, 2, 0, 0, 0, 0, 1, 2, 1, 0].iter().map(|&x| EisInt::from_int(x)).collect();
        let c = scale(&theta, &evec::to_cyc(&c0));
        let half = CycElem::rat(Rat::new(1, 2));
        let m = scale(&half, &add(&tau, &rho));
        let cbasis = CBasis::build(&roots, &c);
        Model { roots, lattice, p_inf, l_inf, tau, rho, c, c0, m, cbasis }
    }

    pub fn root(&self, l: RootLabel) -> AVec {
        self.roots.cyc(l)
    }

    pub fn s(&self, j: usize) -> RootLabel {
        TWELVE_GON[j % 12]
    }

    pub fn twelve_gon(&self) -> Vec<AVec> {
        TWELVE_GON.iter().map(|&l| self.root(l)).collect()
    }

    pub fn a4(&self) -> Vec<AVec> {
        A4_ROOTS.iter().map(|&l| self.root(l)).collect()
    }

    /// The special points with their labels.
    pub fn special_points(&self) -> Vec<NamedPoint> {
        let np = |label: &str, v: &AVec| NamedPoint { label: label.into(), vector: v.clone(), t: None };
        vec![
            np("p_inf", &self.p_inf),
            np("l_inf", &self.l_inf),
            np("tau", &self.tau),
            np("rho", &self.rho),
            np("c", &self.c),
            np("m", &self.m),
        ]
    }

    pub fn polygon(&self, case: PolygonCase) -> PolygonVertices {
        let s = self.root(case.mirror());
        let tau_p = project_to_mirror(&self.tau, &s);
        let half = CycElem::rat(Rat::new(1, 2));
        match case {
            PolygonCase::TriangleA | PolygonCase::TriangleB => {
                let m_prime = scale(&half, &add(&tau_p, &self.rho));
                PolygonVertices {
                    case,
                    names: vec!["tau", "tau'", "rho"],
                    vertices: vec![self.tau.clone(), tau_p, self.rho.clone()],
                    m_prime,
                }
            }
            PolygonCase::Quadrilateral => {
                let rho_p = project_to_mirror(&self.rho, &s);
                let m_prime = scale(&half, &add(&tau_p, &rho_p));
                PolygonVertices {
                    case,
                    names: vec!["tau", "tau'", "rho'", "rho"],
                    vertices: vec![self.tau.clone(), tau_p, rho_p, self.rho.clone()],
                    m_prime,
                }
            }
        }
    }

    /// `σ_t = (1−t)ρ + tτ`, for `0 < t ≤ 1`.
    pub fn sigma_point(&self, t: &Rat) -> Result<NamedPoint, ModelError> {
        if t.signum() <= 0 || *t > 1 {
            return Err(ModelError::ParameterOutOfRange(t.to_string()));
        }
        let a = CycElem::rat(Rat::one() - t);
        let b = CycElem::rat(t.clone());
        let v = add(&scale(&a, &self.rho), &scale(&b, &self.tau));
        Ok(NamedPoint { label: format!("sigma_{t}"), vector: v, t: Some(t.clone()) })
    }

    /// Orthogonal projection of τ to span(s_A, …, s_D), solved exactly.
    pub fn project_to_l4(&self, v: &[CycElem]) -> AVec {
        let a4 = self.a4();
        let g: Vec<Vec<CycElem>> = a4.iter().map(|x| a4.iter().map(|y| herm(y, x)).collect()).collect();
        let rhs: Vec<CycElem> = a4.iter().map(|x| herm(v, x)).collect();
        // v_proj = Σ c_i a_i with ⟨v_proj, a_j⟩ = ⟨v, a_j⟩
        let coeffs = crate::lattice::linalg::solve(&g, &rhs).expect("A4 Gram is invertible");
        let mut out = vec![CycElem::zero(); DIM];
        for (ci, ai) in coeffs.iter().zip(&a4) {
            out = axpy(ci, ai, &out);
        }
        out
    }
}

/// `v − (⟨v,s⟩/⟨s,s⟩)·s`
pub fn project_to_mirror(v: &[CycElem], s: &[CycElem]) -> AVec {
    let f = &herm(v, s) / &norm(s);
    axpy(&(-f), s, v)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
}

#[cfg(test)]
mod tests;
