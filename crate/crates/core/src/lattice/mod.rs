//! Eisenstein lattices: graph Grams, rank and inertia, integral views,
//! θ-duality, HNF membership and short-vector enumeration.

pub mod cache;
pub mod enumerate;
pub mod evec;
mod graph;
pub mod hnf;
pub mod linalg;
pub mod lll;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::{CycElem, EisInt, Rat};
pub use enumerate::{FormError, IntForm};
pub use evec::EVec;
pub use graph::{gram_from_graph, DirectedGraph};
use hnf::{Hnf, ZMat};
use linalg::CMat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("lattice is degenerate (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error("form is not positive definite")]
    NotDefinite,
    #[error("non-integral value where an integral one was required: {0}")]
    NonIntegral(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0}")]
    Form(#[from] FormError),
}

/// Square hermitian matrix over Q(i, √3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianGram(CMat);

impl HermitianGram {
    pub fn new(m: CMat) -> Result<Self, LatticeError> {
        if linalg::is_hermitian(&m) {
            Ok(HermitianGram(m))
        } else {
            Err(LatticeError::NotHermitian)
        }
    }

    /// Gram matrix over E (entries must be Eisenstein integers).
    pub fn from_eis(m: &[Vec<EisInt>]) -> Result<Self, LatticeError> {
        Self::new(m.iter().map(|r| r.iter().map(|x| x.to_cyc()).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn matrix(&self) -> &CMat {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycElem {
        &self.0[i][j]
    }

    /// Entries as Eisenstein integers, if they all are.
    pub fn to_eis(&self) -> Option<Vec<Vec<EisInt>>> {
        self.0.iter().map(|r| r.iter().map(EisInt::from_cyc).collect()).collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &HermitianGram) -> HermitianGram {
        let (a, b) = (self.dim(), other.dim());
        let mut m = linalg::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                m[i][j] = self.0[i][j].clone();
            }
        }
        for i in 0..b {
            for j in 0..b {
                m[a + i][a + j] = other.0[i][j].clone();
            }
        }
        HermitianGram(m)
    }
}

/// Ambient coordinates of a lattice's generators, with the diagonal form
/// of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    pub vectors: Vec<Vec<CycElem>>,
    pub diag: Vec<i64>,
}

/// An Eisenstein lattice given by a Gram matrix on generators, optionally
/// with explicit ambient coordinates for the generators.
#[derive(Clone, Debug)]
pub struct GramLattice {
    pub gram: HermitianGram,
    pub ambient: Option<Ambient>,
}

impl GramLattice {
    pub fn from_gram(gram: HermitianGram) -> Self {
        GramLattice { gram, ambient: None }
    }

    /// Lattice spanned by ambient vectors; the Gram is computed.
    pub fn from_vectors(vectors: Vec<Vec<CycElem>>, diag: Vec<i64>) -> Self {
        let n = vectors.len();
        let m = (0..n)
            .map(|i| (0..n).map(|j| herm_cyc(&vectors[i], &vectors[j], &diag)).collect())
            .collect();
        GramLattice { gram: HermitianGram(m), ambient: Some(Ambient { vectors, diag }) }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self.gram.matrix())
    }

    /// The generators as Eisenstein vectors, if they are.
    fn eis_generators(&self) -> Option<(Vec<EVec>, Vec<i64>)> {
        let a = self.ambient.as_ref()?;
        let vs = a.vectors.iter().map(|v| evec::from_cyc(v)).collect::<Option<Vec<_>>>()?;
        Some((vs, a.diag.clone()))
    }
}

/// `Σ d_k x_k ȳ_k` over Q(i, √3).
pub fn herm_cyc(x: &[CycElem], y: &[CycElem], diag: &[i64]) -> CycElem {
    let mut acc = CycElem::zero();
    for ((a, b), d) in x.iter().zip(y).zip(diag) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let p = a * &b.conj();
        acc = if *d == 1 { &acc + &p } else { &acc + &p.scale(&Rat::int(*d)) };
    }
    acc
}

/// Exact rank and a basis of the radical `{x : ⟨x, ·⟩ = 0}`.
pub fn rank_and_radical(g: &HermitianGram) -> (usize, Vec<Vec<CycElem>>) {
    let t = linalg::transpose(g.matrix());
    let rad = linalg::kernel(&t);
    (g.dim() - rad.len(), rad)
}

/// Inertia `(positive, negative, zero)`.
pub fn signature(g: &HermitianGram) -> (usize, usize, usize) {
    linalg::inertia(g.matrix())
}

/// Integral view of a rank-n Eisenstein lattice: the symmetric form
/// `(2/3)·Re⟨x,y⟩` on a Z-basis of size 2n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZLatticeView {
    pub gram: Vec<Vec<i64>>,
}

impl ZLatticeView {
    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn determinant(&self) -> BigInt {
        hnf::det(&hnf::to_big(&self.gram))
    }

    pub fn is_even(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, r)| r[i] % 2 == 0)
    }

    pub fn signature(&self) -> (usize, usize, usize) {
        let m = self.gram.iter().map(|r| r.iter().map(|&x| CycElem::int(x)).collect()).collect();
        linalg::inertia(&m)
    }
}

fn two_thirds_re_cyc(z: &CycElem) -> Result<i64, LatticeError> {
    let v = z.re.scale(&Rat::new(2, 3));
    if !v.b.is_zero() {
        return Err(LatticeError::NonIntegral(z.to_compact()));
    }
    v.a.to_i64().ok_or_else(|| LatticeError::NonIntegral(z.to_compact()))
}

/// The integral view. With Eisenstein ambient coordinates the Z-basis is
/// computed by HNF (so dependent generators are fine); otherwise the Gram
/// must be nondegenerate and `{e_k, ω·e_k}` is used.
pub fn real_form(k: &GramLattice) -> Result<ZLatticeView, LatticeError> {
    if let Some((gens, diag)) = k.eis_generators() {
        let el = ELattice::new(&gens, diag);
        return Ok(ZLatticeView { gram: el.z_gram()? });
    }
    let n = k.gram.dim();
    let r = k.rank();
    if r < n {
        return Err(LatticeError::Degenerate { rank: r, dim: n });
    }
    let w = CycElem::omega();
    let scal = [CycElem::one(), w.clone()];
    let mut g = vec![vec![0i64; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            for (a, sa) in scal.iter().enumerate() {
                for (b, sb) in scal.iter().enumerate() {
                    let z = &(sa * &sb.conj()) * k.gram.entry(i, j);
                    g[2 * i + a][2 * j + b] = two_thirds_re_cyc(&z)?;
                }
            }
        }
    }
    Ok(ZLatticeView { gram: g })
}

/// Outcome of the θ-duality test, with its two ingredients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaDuality {
    /// Every generator product lies in θE, i.e. `K ⊆ θK*`.
    pub products_divisible: bool,
    /// Determinant of the integral view.
    pub z_determinant: BigInt,
    pub holds: bool,
}

/// Decide `θK* = K`.
///
/// The Z-dual of `K` for `(2/3)Re⟨,⟩` is exactly `θK*`, so equality holds iff
/// all products are in θE and the integral view is unimodular.
pub fn theta_dual_equals_self(k: &GramLattice) -> Result<ThetaDuality, LatticeError> {
    let n = k.gram.dim();
    let r = k.rank();
    if k.ambient.is_none() && r < n {
        return Err(LatticeError::Degenerate { rank: r, dim: n });
    }
    let products_divisible = match k.gram.to_eis() {
        Some(g) => g.iter().flatten().all(|x| x.divisible_by_theta()),
        None => false,
    };
    let view = real_form(k)?;
    let z_determinant = view.determinant();
    if z_determinant.is_zero() {
        return Err(LatticeError::Degenerate { rank: r, dim: n });
    }
    let holds = products_divisible && z_determinant.abs().is_one();
    Ok(ThetaDuality { products_divisible, z_determinant, holds })
}

/// Sublattice of `E^N` spanned by Eisenstein generators, with a Z-basis in
/// HNF for exact membership.
#[derive(Clone, Debug)]
pub struct ELattice {
    pub generators: Vec<EVec>,
    pub diag: Vec<i64>,
    hnf: Hnf,
}

impl ELattice {
    pub fn new(generators: &[EVec], diag: Vec<i64>) -> Self {
        let rows: Vec<Vec<i64>> = generators
            .iter()
            .flat_map(|g| [evec::to_z(g), evec::to_z(&evec::scale(EisInt::OMEGA, g))])
            .collect();
        let hnf = hnf::hnf(&hnf::to_big(&rows));
        ELattice { generators: generators.to_vec(), diag, hnf }
    }

    pub fn ambient_dim(&self) -> usize {
        self.diag.len()
    }

    /// Rank over Z (twice the E-rank).
    pub fn z_rank(&self) -> usize {
        self.hnf.rank()
    }

    /// Z-basis rows in interleaved integer coordinates.
    pub fn z_basis(&self) -> Vec<Vec<i64>> {
        hnf::to_i64(&self.hnf.basis().to_vec()).expect("Z-basis entries fit in i64")
    }

    pub fn z_basis_evecs(&self) -> Vec<EVec> {
        self.z_basis().iter().map(|r| evec::from_z(r)).collect()
    }

    pub fn contains(&self, v: &[EisInt]) -> bool {
        let z: Vec<BigInt> = evec::to_z(v).into_iter().map(BigInt::from).collect();
        self.hnf.coordinates(&z).is_ok()
    }

    /// Coordinates over the Z-basis.
    pub fn z_coordinates(&self, v: &[EisInt]) -> Option<Vec<i64>> {
        let z: Vec<BigInt> = evec::to_z(v).into_iter().map(BigInt::from).collect();
        let y = self.hnf.coordinates(&z).ok()?;
        y.iter().map(|x| x.to_i64()).collect()
    }

    /// E-coefficients over the generators, or the first failing integral
    /// coordinate.
    pub fn e_coefficients(&self, v: &[EisInt]) -> Result<Vec<EisInt>, usize> {
        let z: Vec<BigInt> = evec::to_z(v).into_iter().map(BigInt::from).collect();
        let c = self.hnf.generator_coefficients(&z)?;
        Ok(c.chunks(2)
            .map(|p| {
                let a = p[0].to_i64().expect("coefficient fits in i64");
                let b = p[1].to_i64().expect("coefficient fits in i64");
                EisInt::new(a, 0) + EisInt::new(0, b)
            })
            .collect())
    }

    pub fn herm(&self, x: &[EisInt], y: &[EisInt]) -> EisInt {
        evec::herm_diag(x, y, &self.diag)
    }

    /// `(2/3)Re⟨,⟩` on the Z-basis.
    pub fn z_gram(&self) -> Result<Vec<Vec<i64>>, LatticeError> {
        let b = self.z_basis_evecs();
        b.iter()
            .map(|x| {
                b.iter()
                    .map(|y| {
                        let z = self.herm(x, y);
                        evec::two_thirds_re(z).ok_or_else(|| LatticeError::NonIntegral(format!("{z}")))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Result of [`hnf_membership`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `v = Σ coeffs[i]·generators[i]`.
    Member { coeffs: Vec<EisInt> },
    /// Some ambient coordinate of `v` is not an Eisenstein integer, while
    /// the lattice lies in `E^N`.
    NotEisenstein { coordinate: usize },
    /// `v ∈ E^N` but outside the lattice; the integral coordinate where
    /// HNF reduction fails.
    OutsideLattice { z_coordinate: usize },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

/// Decide whether `v` lies in the E-span of `generators`.
pub fn hnf_membership(generators: &[EVec], v: &[CycElem]) -> Result<Membership, LatticeError> {
    let dim = generators.first().map_or(v.len(), |g| g.len());
    if v.len() != dim || generators.iter().any(|g| g.len() != dim) {
        return Err(LatticeError::DimensionMismatch { expected: dim, got: v.len() });
    }
    let mut ev = Vec::with_capacity(dim);
    for (i, x) in v.iter().enumerate() {
        match EisInt::from_cyc(x) {
            Some(e) => ev.push(e),
            None => return Ok(Membership::NotEisenstein { coordinate: i }),
        }
    }
    let lat = ELattice::new(generators, vec![1; dim]);
    Ok(match lat.e_coefficients(&ev) {
        Ok(coeffs) => Membership::Member { coeffs },
        Err(c) => Membership::OutsideLattice { z_coordinate: c },
    })
}

/// All vectors of the given norm in a positive definite Eisenstein lattice,
/// as E-coordinates over the Gram basis, in lexicographic order.
pub fn enumerate_by_norm(k: &GramLattice, target: &Rat) -> Result<Vec<EVec>, LatticeError> {
    let n = k.gram.dim();
    let (p, neg, z) = signature(&k.gram);
    if neg > 0 || z > 0 || p != n {
        return Err(LatticeError::NotDefinite);
    }
    if target.signum() < 0 {
        return Ok(vec![]);
    }
    // ⟨x,x⟩ = Σ x_i x_j Re⟨b_i,b_j⟩ over the Z-basis {e_k, ωe_k}, cleared of denominators
    let w = CycElem::omega();
    let scal = [CycElem::one(), w];
    let mut raw = vec![vec![Rat::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            for (a, sa) in scal.iter().enumerate() {
                for (b, sb) in scal.iter().enumerate() {
                    let z = &(sa * &sb.conj()) * k.gram.entry(i, j);
                    if !z.re.b.is_zero() {
                        return Err(LatticeError::NonIntegral(z.to_compact()));
                    }
                    raw[2 * i + a][2 * j + b] = z.re.a.clone();
                }
            }
        }
    }
    let den = raw
        .iter()
        .flatten()
        .chain(std::iter::once(target))
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scale = Rat::int(den);
    let g: Vec<Vec<i64>> = raw
        .iter()
        .map(|r| r.iter().map(|x| (x * &scale).to_i64().expect("scaled Gram fits in i64")).collect())
        .collect();
    let t = (target * &scale).to_i64().expect("scaled target fits in i64");
    let form = IntForm::new(&g)?;
    let found = form.enumerate(t as i128, &[], true);
    let mut out: Vec<EVec> = found.iter().map(|x| evec::from_z(x)).collect();
    out.sort();
    Ok(out)
}

/// Z-matrix helper re-exported for other modules.
pub fn big_matrix(m: &[Vec<i64>]) -> ZMat {
    hnf::to_big(m)
}

/// Gram of the A₄ lattice in the orientation used for the L₄ blocks:
/// edges 0→1, 2→1, 2→3, so the superdiagonal reads θ̄, θ, θ̄.
pub fn a4_graph() -> DirectedGraph {
    DirectedGraph::new(4, vec![(0, 1), (2, 1), (2, 3)]).unwrap()
}

/// Two null vectors with product θ.
pub fn hyperbolic_cell() -> HermitianGram {
    let t = CycElem::theta();
    HermitianGram::new(vec![vec![CycElem::zero(), t.clone()], vec![t.conj(), CycElem::zero()]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l4() -> GramLattice {
        GramLattice::from_gram(gram_from_graph(&a4_graph()))
    }

    #[test]
    fn a4_gram_shape() {
        let g = gram_from_graph(&DirectedGraph::path(4));
        for i in 0..4 {
            assert_eq!(g.entry(i, i), &CycElem::int(3));
        }
        assert_eq!(g.entry(1, 0), &CycElem::theta());
        assert_eq!(g.entry(0, 1), &CycElem::theta().conj());
        assert_eq!(g.entry(0, 2), &CycElem::zero());
        let single = gram_from_graph(&DirectedGraph::new(1, vec![]).unwrap());
        assert_eq!(single.matrix(), &vec![vec![CycElem::int(3)]]);
    }

    #[test]
    fn a4_orientations_are_congruent() {
        // flipping the orientation of one edge is absorbed by negating the
        // basis vectors on one side of it
        let a = gram_from_graph(&DirectedGraph::path(4));
        let b = gram_from_graph(&a4_graph());
        let signs = [1i64, 1, -1, -1];
        // path: 0→1→2→3, a4_graph: 0→1←2→3; the edge 1-2 differs
        let mut flipped = a.matrix().clone();
        for i in 0..4 {
            for j in 0..4 {
                if signs[i] * signs[j] < 0 {
                    flipped[i][j] = -&flipped[i][j];
                }
            }
        }
        // negation turns θ into −θ = θ̄ on the flipped edge
        assert_eq!(&flipped, b.matrix());
    }

    #[test]
    fn malformed_graphs_rejected() {
        assert!(DirectedGraph::new(2, vec![(0, 0)]).is_err());
        assert!(DirectedGraph::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(DirectedGraph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn plane_and_polygon_radicals() {
        let (r, rad) = rank_and_radical(&gram_from_graph(&DirectedGraph::projective_plane_f3()));
        assert_eq!((r, rad.len()), (14, 12));
        let (r, rad) = rank_and_radical(&gram_from_graph(&DirectedGraph::alternating_cycle(12)));
        assert_eq!((r, rad.len()), (10, 2));
        let three_i4 = HermitianGram::new(
            (0..4).map(|i| (0..4).map(|j| CycElem::int(if i == j { 3 } else { 0 })).collect()).collect(),
        )
        .unwrap();
        assert_eq!(rank_and_radical(&three_i4), (4, vec![]));
    }

    #[test]
    fn radical_vectors_are_orthogonal_to_everything() {
        let g = gram_from_graph(&DirectedGraph::alternating_cycle(12));
        let (_, rad) = rank_and_radical(&g);
        for v in rad {
            for j in 0..12 {
                let s = (0..12).fold(CycElem::zero(), |acc, i| &acc + &(&v[i] * g.entry(i, j)));
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&l4().gram), (4, 0, 0));
        assert_eq!(signature(&hyperbolic_cell()), (1, 1, 0));
        let p = gram_from_graph(&DirectedGraph::projective_plane_f3());
        assert_eq!(signature(&p), (13, 1, 12));
    }

    #[test]
    fn real_forms() {
        let e8 = real_form(&l4()).unwrap();
        assert_eq!(e8.dim(), 8);
        assert!(e8.is_even());
        assert_eq!(e8.determinant(), BigInt::one());
        assert_eq!(e8.signature(), (8, 0, 0));
        let a2 = real_form(&GramLattice::from_gram(HermitianGram::new(vec![vec![CycElem::int(3)]]).unwrap()))
            .unwrap();
        assert_eq!(a2.gram, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.determinant(), BigInt::from(3));
        let cell = real_form(&GramLattice::from_gram(hyperbolic_cell())).unwrap();
        assert_eq!(cell.signature(), (2, 2, 0));
        assert_eq!(cell.determinant(), BigInt::one());
    }

    #[test]
    fn theta_duality() {
        assert!(theta_dual_equals_self(&l4()).unwrap().holds);
        let cell = GramLattice::from_gram(hyperbolic_cell());
        assert!(theta_dual_equals_self(&cell).unwrap().holds);
        let three_i2 = GramLattice::from_gram(
            HermitianGram::new(vec![
                vec![CycElem::int(3), CycElem::zero()],
                vec![CycElem::zero(), CycElem::int(3)],
            ])
            .unwrap(),
        );
        let t = theta_dual_equals_self(&three_i2).unwrap();
        assert!(t.products_divisible && !t.holds);
        assert_eq!(t.z_determinant, BigInt::from(9));
        let g4 = gram_from_graph(&a4_graph());
        let big = hyperbolic_cell().direct_sum(&g4).direct_sum(&g4).direct_sum(&g4);
        assert!(theta_dual_equals_self(&GramLattice::from_gram(big)).unwrap().holds);
        let degenerate = GramLattice::from_gram(gram_from_graph(&DirectedGraph::alternating_cycle(12)));
        assert!(theta_dual_equals_self(&degenerate).is_err());
    }

    #[test]
    fn l4_shells() {
        let k = l4();
        let n3 = enumerate_by_norm(&k, &Rat::int(3)).unwrap();
        let n6 = enumerate_by_norm(&k, &Rat::int(6)).unwrap();
        assert_eq!(n3.len(), 240);
        assert_eq!(n6.len(), 2160);
        assert!(enumerate_by_norm(&k, &Rat::int(1)).unwrap().is_empty());
        let g = k.gram.to_eis().unwrap();
        for v in n3.iter().take(50) {
            assert_eq!(evec::herm_gram(v, v, &g), EisInt::from_int(3));
        }
        let mut sorted = n6.clone();
        sorted.sort();
        assert_eq!(sorted, n6);
        assert!(enumerate_by_norm(&GramLattice::from_gram(hyperbolic_cell()), &Rat::int(3)).is_err());
    }

    #[test]
    fn shells_are_closed_under_units() {
        let k = l4();
        let n3 = enumerate_by_norm(&k, &Rat::int(3)).unwrap();
        let set: std::collections::HashSet<_> = n3.iter().cloned().collect();
        for v in &n3 {
            for u in EisInt::units() {
                assert!(set.contains(&evec::scale(u, v)));
            }
        }
    }

    #[test]
    fn membership_basics() {
        let gens: Vec<EVec> = vec![
            vec![EisInt::THETA, EisInt::ZERO],
            vec![EisInt::ONE, EisInt::ONE],
        ];
        let first = evec::to_cyc(&gens[0]);
        match hnf_membership(&gens, &first).unwrap() {
            Membership::Member { coeffs } => assert_eq!(coeffs, vec![EisInt::ONE, EisInt::ZERO]),
            m => panic!("{m:?}"),
        }
        let e1 = evec::to_cyc(&[EisInt::ONE, EisInt::ZERO]);
        assert!(matches!(hnf_membership(&gens, &e1).unwrap(), Membership::OutsideLattice { .. }));
        let half = vec![CycElem::rat(Rat::new(1, 2)), CycElem::zero()];
        assert_eq!(hnf_membership(&gens, &half).unwrap(), Membership::NotEisenstein { coordinate: 0 });
        assert!(hnf_membership(&gens, &[CycElem::zero()]).is_err());
    }
}
