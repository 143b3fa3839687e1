//! Exact complex-hyperbolic predicates, batches of mirrors around a
//! center, and polygon–mirror intersection.
//!
//! Distances are never turned into floating point: only `cosh²` and
//! `sinh²` values in Q(√3) are compared.

pub mod batches;
pub mod classify;
pub mod fast;
pub mod claims;
pub mod oracle;

use crate::exactnum::{CycElem, Rat, RealQuad};
use crate::model::{herm, norm};

pub use batches::{
    enumerate_roots_bounded, enumerate_batch_table, l4_shell, BatchSpec, BoundedEnumerator, Root, RootList, BatchTableRow,
    PRINTED_ROW_COUNTS,
};
pub use classify::{mirror_polygon_classify, MirrorHit, Polygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SqKind {
    CoshSq,
    SinhSq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqDistance {
    pub kind: SqKind,
    pub value: RealQuad,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("vector of nonnegative norm {0} where a point of the ball is required")]
    NotInBall(String),
    #[error("mirror vector has norm {0}, expected positive")]
    NotPositive(String),
    #[error("center is not a primitive norm −3 lattice vector")]
    BadCenter,
}

fn negative_norm(v: &[CycElem]) -> Result<RealQuad, GeometryError> {
    let n = norm(v);
    if !n.is_real() || n.re.sign() >= 0 {
        return Err(GeometryError::NotInBall(n.to_compact()));
    }
    Ok(n.re)
}

/// `cosh² d = |⟨v,w⟩|² / (v²·w²)`
pub fn cosh_sq_dist(v: &[CycElem], w: &[CycElem]) -> Result<SqDistance, GeometryError> {
    let nv = negative_norm(v)?;
    let nw = negative_norm(w)?;
    let z = herm(v, w).norm_sq();
    Ok(SqDistance { kind: SqKind::CoshSq, value: &z / &(&nv * &nw) })
}

/// `sinh² d(v, s⊥) = −|⟨v,s⟩|² / (v²·s²)`
pub fn sinh_sq_dist_to_mirror(v: &[CycElem], s: &[CycElem]) -> Result<SqDistance, GeometryError> {
    let nv = negative_norm(v)?;
    let ns = norm(s);
    if !ns.is_real() || ns.re.sign() <= 0 {
        return Err(GeometryError::NotPositive(ns.to_compact()));
    }
    let z = herm(v, s).norm_sq();
    Ok(SqDistance { kind: SqKind::SinhSq, value: -(&z / &(&nv * &ns.re)) })
}

/// Whether `A + B < C` for `A, B, C ≥ 0` given `sinh²A`, `cosh²B` and
/// `sinh²C`, by the addition formula for sinh:
/// `sinh²(A+B) = αβ + (1+α)(β−1) + 2√(αβ(1+α)(β−1))`.
pub fn sinh_sum_less(sinh_sq_a: &RealQuad, cosh_sq_b: &RealQuad, sinh_sq_c: &RealQuad) -> bool {
    let one = RealQuad::one();
    let alpha = sinh_sq_a;
    let beta = cosh_sq_b;
    let r = sinh_sq_c - &(alpha * beta) - &(&(&one + alpha) * &(beta - &one));
    if r.sign() <= 0 {
        return false;
    }
    let p = &(&(alpha * beta) * &(&one + alpha)) * &(beta - &one);
    (&(&p * &RealQuad::int(4)) - &(&r * &r)).sign() < 0
}

/// Same test with both summands given as `sinh²`.
pub fn sinh_sum_less_ss(sinh_sq_a: &RealQuad, sinh_sq_b: &RealQuad, sinh_sq_c: &RealQuad) -> bool {
    sinh_sum_less(sinh_sq_a, &(sinh_sq_b + &RealQuad::one()), sinh_sq_c)
}

/// `sinh²` of the n-th critical radius around a norm −3 center: `|π|²/3`.
pub fn critical_sinh_sq(pi_norm: i64) -> RealQuad {
    RealQuad::rat(Rat::new(pi_norm, 3))
}
