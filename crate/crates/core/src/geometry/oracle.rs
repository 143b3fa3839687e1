//! Floating-point oracle for the polygon classifier on small triangles.
//!
//! The three pairings `⟨vᵢ, s⟩` are drawn as small Gaussian integers. A dense
//! barycentric grid is searched for points where the pairing vanishes; only
//! configurations where the grid hits zero exactly, or where the hull keeps
//! a visible margin from zero, are counted as conclusive.

use rand::Rng;

use crate::exactnum::{CycElem, RealQuad};

use super::classify::{classify_pairings, HitOutcome};

#[derive(Clone, Debug, Default)]
pub struct OracleTally {
    pub tries: usize,
    pub conclusive: usize,
    /// `(pairings, exact outcome, oracle outcome)`
    pub disagreements: Vec<(Vec<(i64, i64)>, HitOutcome, HitOutcome)>,
}

/// Draws random triangles until `want` conclusive samples are found or
/// `max_tries` is reached.
pub fn random_triangles(rng: &mut impl Rng, want: usize, max_tries: usize) -> OracleTally {
    let mut t = OracleTally::default();
    while t.conclusive < want && t.tries < max_tries {
        t.tries += 1;
        let zs: Vec<(i64, i64)> = (0..3).map(|_| (rng.gen_range(-4..=4), rng.gen_range(-4..=4))).collect();
        if zs.iter().all(|&z| z == (0, 0)) {
            continue;
        }
        let pts: Vec<CycElem> = zs.iter().map(|&(a, b)| CycElem::new(RealQuad::int(a), RealQuad::int(b))).collect();
        let got = classify_pairings(&pts).outcome;
        if let Some(e) = grid_outcome(&zs) {
            t.conclusive += 1;
            if got != e {
                t.disagreements.push((zs, got, e));
            }
        }
    }
    t
}

fn grid_outcome(zs: &[(i64, i64)]) -> Option<HitOutcome> {
    let f: Vec<(f64, f64)> = zs.iter().map(|&(a, b)| (a as f64, b as f64)).collect();
    let n = 120;
    let mut hit_vertices = [false; 3];
    let mut hit_any = false;
    let mut interior = false;
    for i in 0..=n {
        for j in 0..=(n - i) {
            let l = [i as f64 / n as f64, j as f64 / n as f64, (n - i - j) as f64 / n as f64];
            let x = l[0] * f[0].0 + l[1] * f[1].0 + l[2] * f[2].0;
            let y = l[0] * f[0].1 + l[1] * f[1].1 + l[2] * f[2].1;
            if x.abs() < 1e-12 && y.abs() < 1e-12 {
                hit_any = true;
                for k in 0..3 {
                    if l[k] > 0.0 {
                        hit_vertices[k] = true;
                    }
                }
                if l.iter().all(|&v| v > 0.0) {
                    interior = true;
                }
            }
        }
    }
    if !hit_any {
        // a grid miss only counts when the hull is clear of 0
        return (hull_distance(&f) > 0.05).then_some(HitOutcome::Miss);
    }
    if interior {
        return Some(HitOutcome::InteriorCrossing);
    }
    let ks: Vec<usize> = (0..3).filter(|&k| hit_vertices[k]).collect();
    Some(match ks.as_slice() {
        [k] => HitOutcome::VertexOnly(*k),
        [a, b] => HitOutcome::EdgeSegment(*a, *b),
        _ => HitOutcome::InteriorCrossing,
    })
}

/// Distance from the origin to the triangle hull, 0 if inside.
fn hull_distance(p: &[(f64, f64)]) -> f64 {
    let cross = |a: (f64, f64), b: (f64, f64)| a.0 * b.1 - a.1 * b.0;
    let s: Vec<f64> =
        (0..3).map(|k| cross((p[(k + 1) % 3].0 - p[k].0, p[(k + 1) % 3].1 - p[k].1), (-p[k].0, -p[k].1))).collect();
    if s.iter().all(|&v| v >= 0.0) || s.iter().all(|&v| v <= 0.0) {
        return 0.0;
    }
    let seg = |a: (f64, f64), b: (f64, f64)| {
        let d = (b.0 - a.0, b.1 - a.1);
        let l = d.0 * d.0 + d.1 * d.1;
        let t = if l == 0.0 { 0.0 } else { (-(a.0 * d.0 + a.1 * d.1) / l).clamp(0.0, 1.0) };
        ((a.0 + t * d.0).powi(2) + (a.1 + t * d.1).powi(2)).sqrt()
    };
    (0..3).map(|k| seg(p[k], p[(k + 1) % 3])).fold(f64::INFINITY, f64::min)
}
