//! Where a mirror meets a totally real polygon.
//!
//! For vertices `v_k` with real negative products, the point `Σλ_k v_k`
//! (`λ ≥ 0`) lies on `s⊥` iff `Σλ_k z_k = 0` with `z_k = ⟨v_k, s⟩`. The
//! vertices that can carry positive weight in such a combination span the
//! smallest face of the polygon containing the intersection; vertex `k`
//! qualifies iff `−z_k` lies in the cone spanned by the other `z_i`.

use serde::Serialize;

use crate::exactnum::CycElem;
use crate::model::{herm, AVec};

use super::fast::{FastVec, Zc};
use super::GeometryError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum HitOutcome {
    Miss,
    VertexOnly(usize),
    EdgeSegment(usize, usize),
    InteriorCrossing,
    /// every `z_k` vanishes: the mirror contains the polygon
    WholePolygon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MirrorHit {
    pub outcome: HitOutcome,
    /// `{k : ⟨v_k, s⟩ = 0}`
    pub zeros: Vec<usize>,
}

impl MirrorHit {
    pub fn is_miss(&self) -> bool {
        self.outcome == HitOutcome::Miss
    }
}

/// Points of the plane with exact orientation predicates.
pub trait PlanePoint: Clone {
    fn is_origin(&self) -> bool;
    fn negated(&self) -> Self;
    /// sign of `Re(a)Im(b) − Im(a)Re(b)`
    fn cross_sign(&self, b: &Self) -> i32;
    /// sign of `Re(a)Re(b) + Im(a)Im(b)`
    fn dot_sign(&self, b: &Self) -> i32;
    /// signs of the Cramer numerators `cross(w,b)`, `cross(a,w)`
    fn cramer_signs(w: &Self, a: &Self, b: &Self) -> (i32, i32) {
        (w.cross_sign(b), a.cross_sign(w))
    }
}

impl PlanePoint for CycElem {
    fn is_origin(&self) -> bool {
        self.is_zero()
    }
    fn negated(&self) -> Self {
        -self
    }
    fn cross_sign(&self, b: &Self) -> i32 {
        (&(&self.re * &b.im) - &(&self.im * &b.re)).sign()
    }
    fn dot_sign(&self, b: &Self) -> i32 {
        (&(&self.re * &b.re) + &(&self.im * &b.im)).sign()
    }
}

impl PlanePoint for Zc {
    fn is_origin(&self) -> bool {
        self.is_zero()
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn cross_sign(&self, b: &Self) -> i32 {
        self.cross(*b).sign()
    }
    fn dot_sign(&self, b: &Self) -> i32 {
        self.dot(*b).sign()
    }
}

/// `−z_k` is in the cone of the other points.
fn in_support<P: PlanePoint>(zs: &[P], k: usize) -> bool {
    if zs[k].is_origin() {
        return true;
    }
    let w = zs[k].negated();
    let others: Vec<&P> = zs.iter().enumerate().filter(|&(i, z)| i != k && !z.is_origin()).map(|(_, z)| z).collect();
    for z in &others {
        if w.cross_sign(z) == 0 && w.dot_sign(z) > 0 {
            return true;
        }
    }
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            let (a, b) = (others[i], others[j]);
            let d = a.cross_sign(b);
            if d == 0 {
                continue;
            }
            let (sa, sb) = P::cramer_signs(&w, a, b);
            if sa * d >= 0 && sb * d >= 0 {
                return true;
            }
        }
    }
    false
}

/// Minimal-face analysis of the pairings `zs` for a polygon whose
/// vertices are in cyclic order.
pub fn classify_pairings<P: PlanePoint>(zs: &[P]) -> MirrorHit {
    let zeros: Vec<usize> = (0..zs.len()).filter(|&k| zs[k].is_origin()).collect();
    if zeros.len() == zs.len() {
        return MirrorHit { outcome: HitOutcome::WholePolygon, zeros };
    }
    let support: Vec<usize> = (0..zs.len()).filter(|&k| in_support(zs, k)).collect();
    let n = zs.len();
    let adjacent = |i: usize, j: usize| n == 3 || (j + n - i) % n == 1 || (i + n - j) % n == 1;
    let outcome = match support.as_slice() {
        [] => HitOutcome::Miss,
        [k] => HitOutcome::VertexOnly(*k),
        [i, j] if adjacent(*i, *j) => HitOutcome::EdgeSegment(*i, *j),
        _ => HitOutcome::InteriorCrossing,
    };
    MirrorHit { outcome, zeros }
}

/// Triangle or quadrilateral with vertices in cyclic order.
#[derive(Clone, Debug)]
pub struct Polygon {
    pub vertices: Vec<AVec>,
    fast: Option<Vec<FastVec>>,
}

impl Polygon {
    /// Checks negative norms and real negative pairwise products.
    pub fn new(vertices: Vec<AVec>) -> Result<Self, GeometryError> {
        for a in &vertices {
            for b in &vertices {
                let z = herm(a, b);
                if !z.is_real() || z.re.sign() >= 0 {
                    return Err(GeometryError::NotInBall(z.to_compact()));
                }
            }
        }
        let fast = vertices.iter().map(|v| FastVec::from_cyc(v).map(|(f, _)| f)).collect();
        Ok(Polygon { vertices, fast })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Classification against an Eisenstein root given as interleaved
    /// integers, through the integer path when available.
    pub fn classify_root(&self, s: &[i32]) -> MirrorHit {
        match &self.fast {
            Some(f) => {
                let zs: Vec<Zc> = f.iter().map(|v| v.pair2(s)).collect();
                classify_pairings(&zs)
            }
            None => {
                let ev: Vec<i64> = s.iter().map(|&x| x as i64).collect();
                mirror_polygon_classify(&crate::lattice::evec::to_cyc(&crate::lattice::evec::from_z(&ev)), self)
            }
        }
    }
}

/// Exact classification of `s⊥ ∩ P` over Q(i,√3).
pub fn mirror_polygon_classify(s: &[CycElem], p: &Polygon) -> MirrorHit {
    let zs: Vec<CycElem> = p.vertices.iter().map(|v| herm(v, s)).collect();
    classify_pairings(&zs)
}
