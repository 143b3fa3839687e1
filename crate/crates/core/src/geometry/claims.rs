//! Drivers for the computer checks on distances, batches, polygons and
//! nearest mirrors. Each returns a [`SuiteReport`].

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde_json::json;

use crate::exactnum::{CycElem, EisInt, Rat, RealQuad};
use crate::lattice::evec::{self, EVec};
use crate::lattice::linalg;
use crate::model::{self, herm, AVec, Model, PolygonCase, A4_ROOTS, TWELVE_GON};
use crate::report::{Recorder, SuiteReport};

use super::batches::{self, canonical_root, root_from_evec, root_to_evec, BatchError, Root, RootList};
use super::classify::{HitOutcome, MirrorHit, Polygon};
use super::fast::{FastVec, Zq};
use super::{cosh_sq_dist, sinh_sq_dist_to_mirror, sinh_sum_less};

fn rq(p: i64, q: i64, r: i64, s: i64) -> RealQuad {
    RealQuad::frac(p, q, r, s)
}

/// All batch lists used by the checks, computed once.
pub struct BatchStore {
    pub c: Vec<RootList>,
    pub pinf: Vec<RootList>,
}

impl BatchStore {
    pub fn load(batch_max: u32, cache_dir: Option<&Path>) -> Result<BatchStore, BatchError> {
        let mut c = Vec::new();
        let mut pinf = Vec::new();
        for n in 0..=batch_max {
            c.push(batches::batch("c", n, cache_dir)?);
            pinf.push(batches::batch("pinf", n, cache_dir)?);
        }
        Ok(BatchStore { c, pinf })
    }

    /// Shared store through batch 3, without a cache.
    pub fn shared() -> &'static BatchStore {
        static S: OnceLock<BatchStore> = OnceLock::new();
        S.get_or_init(|| BatchStore::load(3, None).expect("batch enumeration"))
    }

    pub fn c_roots(&self) -> impl Iterator<Item = &Root> {
        self.c.iter().flat_map(|b| b.roots.iter())
    }

    pub fn pinf_roots(&self) -> impl Iterator<Item = &Root> {
        self.pinf.iter().flat_map(|b| b.roots.iter())
    }
}

fn canon_of(label: model::RootLabel) -> Root {
    canonical_root(&root_from_evec(Model::get().roots.get(label)))
}

/// Scalar classes of the 240 norm 3 vectors of the first L₄ block.
pub fn l4_first_block_classes() -> Vec<Root> {
    let cb = &Model::get().cbasis;
    let z = [EisInt::ZERO; 4];
    let mut out: Vec<Root> = batches::l4_shell(3)
        .iter()
        .map(|v| {
            let cc = model::CCoords { a: EisInt::ZERO, b: EisInt::ZERO, v: [*v, z, z] };
            canonical_root(&root_from_evec(&cb.to_standard(&cc)))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------- batch table

/// Batch-by-batch agreement of the block construction with the generic
/// enumerator around `c`.
pub fn verify_batch_table(store: &BatchStore) -> SuiteReport {
    verify_batch_table_parts(store).0
}

/// As [`verify_batch_table`], plus a separate non-gating report comparing the row
/// counts with the printed table.
pub fn verify_batch_table_parts(store: &BatchStore) -> (SuiteReport, SuiteReport) {
    let mut rec = Recorder::new("batch_table", "batches-around-c");
    let mut counts = Vec::new();
    let mut total = 0u64;
    for n in 0..4u32 {
        let rows = batches::enumerate_batch_table(n);
        let mut union: Vec<Root> = Vec::new();
        for (row, roots) in &rows {
            counts.push((row.label, roots.len() as u64));
            total += roots.len() as u64;
            union.extend(roots.iter().copied());
        }
        let row_sum: usize = rows.iter().map(|(_, r)| r.len()).sum();
        union.sort_unstable();
        union.dedup();
        rec.check(
            &format!("rows_disjoint_b{n}"),
            "batches-around-c",
            union.len() == row_sum,
            json!({"sum_of_rows": row_sum, "distinct": union.len()}),
        );
        if let Some(b) = store.c.get(n as usize) {
            let same = b.roots == union;
            let missing = b.roots.iter().filter(|r| union.binary_search(r).is_err()).count();
            let extra = union.iter().filter(|r| b.roots.binary_search(r).is_err()).count();
            rec.check(
                &format!("oracle_agreement_b{n}"),
                "batches-around-c",
                same,
                json!({"table": union.len(), "generic": b.roots.len(), "only_generic": missing, "only_table": extra}),
            );
        }
    }
    let mut printed_rec = Recorder::new("batch_table_printed", "batch-table-counts").non_gating();
    for (k, ((label, got), want)) in counts.iter().zip(batches::PRINTED_ROW_COUNTS).enumerate() {
        printed_rec.check(
            &format!("row_{k}_count"),
            "batch-table-counts",
            *got == want,
            json!({"row": label, "computed": got, "printed": want}),
        );
    }
    let printed: u64 = batches::PRINTED_ROW_COUNTS.iter().sum();
    printed_rec.check("total", "batch-table-counts", total == printed, json!({"computed": total, "printed": printed}));
    (rec.finish(), printed_rec.finish())
}

// ---------------------------------------------------------------- distances

/// Closed forms of the distance table; one entry per (case, pair).
fn distance_table() -> Vec<(&'static str, &'static str, AVec, AVec, RealQuad)> {
    let m = Model::get();
    let mut out = vec![
        ("all", "d(p_inf,tau)", m.p_inf.clone(), m.tau.clone(), rq(1, 2, 2, 3)),
        ("all", "d(p_inf,m)", m.p_inf.clone(), m.m.clone(), rq(1303, 1034, 1676, 1551)),
        ("all", "d(c,m)", m.c.clone(), m.m.clone(), rq(794, 517, 1376, 1551)),
        ("all", "d(c,rho)", m.c.clone(), m.rho.clone(), rq(5, 4, 13, 18)),
    ];
    let ta = m.polygon(PolygonCase::TriangleA);
    let tb = m.polygon(PolygonCase::TriangleB);
    let q = m.polygon(PolygonCase::Quadrilateral);
    out.push(("triangles", "d(c,m')", m.c.clone(), ta.m_prime.clone(), rq(1828, 1195, 1056, 1195)));
    out.push(("quadrilateral", "d(c,m')", m.c.clone(), q.m_prime.clone(), rq(1994, 1319, 1152, 1319)));
    out.push(("triangle_sA", "d(p_inf,tau')", m.p_inf.clone(), ta.vertices[1].clone(), rq(320, 429, 96, 143)));
    out.push(("triangle_sB+quadrilateral", "d(p_inf,tau')", m.p_inf.clone(), tb.vertices[1].clone(), rq(59, 143, 96, 143)));
    out.push(("triangle_sA", "d(p_inf,m')", m.p_inf.clone(), ta.m_prime.clone(), rq(4996, 3585, 256, 239)));
    out.push(("triangle_sB", "d(p_inf,m')", m.p_inf.clone(), tb.m_prime.clone(), rq(1483, 1195, 1296, 1195)));
    out.push(("quadrilateral", "d(p_inf,m')", m.p_inf.clone(), q.m_prime.clone(), rq(3103, 2638, 1452, 1319)));
    out.push(("quadrilateral", "d(c,rho')", m.c.clone(), q.vertices[2].clone(), rq(443, 359, 256, 359)));
    out
}

/// Every listed `cosh²` reproduced exactly; every relevant point within
/// the fourth critical ball of `p∞` or `c` (`cosh² < 10/3`).
pub fn verify_distance_table() -> SuiteReport {
    let mut rec = Recorder::new("distance_table", "critical-ball-cover");
    let m = Model::get();
    for (case, name, a, b, want) in distance_table() {
        let got = cosh_sq_dist(&a, &b).expect("points of the ball").value;
        rec.check(
            &format!("{name}[{case}]"),
            "critical-ball-cover",
            got == want,
            json!({"cosh_sq": got.to_string(), "expected": want.to_string()}),
        );
    }
    let bound = RealQuad::rat(Rat::new(10, 3));
    for case in PolygonCase::ALL {
        let poly = m.polygon(case);
        let tau_p = &poly.vertices[1];
        let checks: Vec<(&str, &AVec, &AVec)> = {
            let mut v = vec![
                ("p_inf~tau", &m.p_inf, &m.tau),
                ("p_inf~tau'", &m.p_inf, tau_p),
                ("p_inf~m", &m.p_inf, &m.m),
                ("p_inf~m'", &m.p_inf, &poly.m_prime),
                ("c~m", &m.c, &m.m),
                ("c~m'", &m.c, &poly.m_prime),
                ("c~rho", &m.c, &m.rho),
            ];
            if case == PolygonCase::Quadrilateral {
                v.push(("c~rho'", &m.c, &poly.vertices[2]));
            }
            v
        };
        for (name, a, b) in checks {
            let d = cosh_sq_dist(a, b).unwrap().value;
            rec.check(
                &format!("radicand[{}]{name}", case.name()),
                "critical-ball-cover",
                (&d - &bound).sign() < 0,
                json!({"cosh_sq": d.to_string(), "approx": d.approx()}),
            );
        }
    }
    rec.finish()
}

// ---------------------------------------------------------------- polygons

/// Expected non-Miss outcomes of one polygon, keyed by canonical class.
fn expected_hits(case: PolygonCase, l4: &[Root]) -> BTreeMap<Root, HitOutcome> {
    let mut out = BTreeMap::new();
    let own = canon_of(case.mirror());
    match case {
        PolygonCase::TriangleA | PolygonCase::TriangleB => {
            for r in l4 {
                out.insert(*r, HitOutcome::VertexOnly(2));
            }
            out.insert(own, HitOutcome::EdgeSegment(1, 2));
        }
        PolygonCase::Quadrilateral => {
            for r in l4 {
                out.insert(*r, HitOutcome::EdgeSegment(2, 3));
            }
            out.insert(own, HitOutcome::EdgeSegment(1, 2));
        }
    }
    out
}

fn polygon_of(case: PolygonCase) -> Polygon {
    Polygon::new(Model::get().polygon(case).vertices).expect("totally real polygon")
}

/// Non-Miss classifications over a list of roots, keyed by class.
fn hits(poly: &Polygon, roots: &[Root]) -> Vec<(Root, MirrorHit)> {
    roots
        .par_iter()
        .filter_map(|r| {
            let h = poly.classify_root(r);
            (!h.is_miss()).then(|| (canonical_root(r), h))
        })
        .collect()
}

/// Each polygon against every batch ≤ 3 mirror around `p∞` and `c`.
pub fn verify_polygon_mirrors(store: &BatchStore) -> SuiteReport {
    let mut rec = Recorder::new("polygon_mirrors", "polygons-miss-mirrors");
    let l4 = l4_first_block_classes();
    rec.check("l4_first_block_classes", "polygons-miss-mirrors", l4.len() == 40, json!({"classes": l4.len()}));
    let c_all: Vec<Root> = store.c_roots().copied().collect();
    let p_all: Vec<Root> = store.pinf_roots().copied().collect();
    for case in PolygonCase::ALL {
        let poly = polygon_of(case);
        let mut found: BTreeMap<Root, HitOutcome> = BTreeMap::new();
        let mut inconsistent = 0usize;
        for (r, h) in hits(&poly, &c_all).into_iter().chain(hits(&poly, &p_all)) {
            if let Some(prev) = found.insert(r, h.outcome.clone()) {
                if prev != h.outcome {
                    inconsistent += 1;
                }
            }
        }
        let want = expected_hits(case, &l4);
        let unexpected: Vec<String> = found
            .iter()
            .filter(|(r, o)| want.get(*r) != Some(o))
            .take(5)
            .map(|(r, o)| format!("{:?} {:?}", &r[..], o))
            .collect();
        let missing = want.keys().filter(|r| !found.contains_key(*r)).count();
        let name = case.name();
        rec.check(
            &format!("{name}_non_miss_count"),
            "polygons-miss-mirrors",
            found.len() == want.len(),
            json!({"found": found.len(), "expected": want.len(), "mirrors_scanned": c_all.len() + p_all.len()}),
        );
        rec.check(
            &format!("{name}_outcome_pattern"),
            "polygons-miss-mirrors",
            unexpected.is_empty() && missing == 0 && inconsistent == 0,
            json!({"unexpected": unexpected, "missing": missing, "inconsistent": inconsistent}),
        );
        let own = canon_of(case.mirror());
        rec.check(
            &format!("{name}_designated_mirror"),
            "polygons-miss-mirrors",
            found.get(&own) == Some(&HitOutcome::EdgeSegment(1, 2)),
            json!({"outcome": format!("{:?}", found.get(&own))}),
        );
    }
    rec.finish()
}

// ---------------------------------------------------------------- near ρ

fn fast(v: &AVec) -> (FastVec, i64) {
    FastVec::from_cyc(v).expect("integral after scaling")
}

/// `|2⟨v,s⟩|²` for every root in the list.
fn pairing_norms(v: &FastVec, roots: &[Root]) -> Vec<Zq> {
    roots.par_iter().map(|r| v.pair2(r).abs2()).collect()
}

/// Indices of the minimal nonzero entries, and that minimum.
fn min_nonzero(vals: &[Zq]) -> Option<(Zq, Vec<usize>)> {
    let mut best: Option<Zq> = None;
    for v in vals.iter().filter(|v| !v.is_zero()) {
        if best.is_none_or(|b| v.sub(b).sign() < 0) {
            best = Some(*v);
        }
    }
    let b = best?;
    let idx = (0..vals.len()).filter(|&i| vals[i] == b).collect();
    Some((b, idx))
}

/// Nearest mirrors to ρ not containing it, and the distance inequality
/// that makes batches ≤ 3 around `c` sufficient.
pub fn verify_nearest_rho(store: &BatchStore) -> SuiteReport {
    let mut rec = Recorder::new("nearest_to_rho", "mirrors-near-rho");
    let m = Model::get();
    let alpha = rq(-1, 12, 1, 18);
    let beta = rq(5, 4, 13, 18);
    let gamma = RealQuad::rat(Rat::new(7, 3));
    let s0 = m.root(TWELVE_GON[0]);
    let a_got = sinh_sq_dist_to_mirror(&m.rho, &s0).unwrap().value;
    let b_got = cosh_sq_dist(&m.c, &m.rho).unwrap().value;
    rec.check("sinh_sq_rho_s0", "mirrors-near-rho", a_got == alpha, json!(a_got.to_string()));
    rec.check("cosh_sq_c_rho", "mirrors-near-rho", b_got == beta, json!(b_got.to_string()));
    rec.check(
        "sinh_addition_inequality",
        "mirrors-near-rho",
        sinh_sum_less(&alpha, &beta, &gamma),
        json!({"sinh_sq_a": alpha.to_string(), "cosh_sq_b": beta.to_string(), "sinh_sq_c": gamma.to_string()}),
    );
    let roots: Vec<Root> = store.c_roots().copied().collect();
    let (rho, k) = fast(&m.rho);
    let vals = pairing_norms(&rho, &roots);
    let zero: Vec<Root> = (0..roots.len()).filter(|&i| vals[i].is_zero()).map(|i| canonical_root(&roots[i])).collect();
    let zero_set: BTreeSet<Root> = zero.iter().copied().collect();
    let l4: BTreeSet<Root> = l4_first_block_classes().into_iter().collect();
    rec.check(
        "mirrors_through_rho",
        "mirrors-near-rho",
        zero_set == l4 && zero.len() == 40,
        json!({"count": zero.len(), "equal_to_l4_mirrors": zero_set == l4}),
    );
    match min_nonzero(&vals) {
        Some((b, idx)) => {
            // sinh² = |⟨ρ,s⟩|² / (3·|ρ²|), with the pairing scaled by 2k
            let rho2 = -crate::model::norm(&m.rho).re;
            let pair = RealQuad::rat(Rat::new(b.x as i64, 4 * k * k)) + RealQuad::rat(Rat::new(b.y as i64, 4 * k * k)) * RealQuad::sqrt3();
            let sinh2 = &pair / &(&rho2 * &RealQuad::int(3));
            let achievers: BTreeSet<Root> = idx.iter().map(|&i| canonical_root(&roots[i])).collect();
            let gon: BTreeSet<Root> = TWELVE_GON.iter().map(|&l| canon_of(l)).collect();
            rec.check(
                "minimum_sinh_sq",
                "mirrors-near-rho",
                sinh2 == alpha,
                json!({"sinh_sq": sinh2.to_string()}),
            );
            rec.check(
                "achieved_by_twelve_gon",
                "mirrors-near-rho",
                achievers == gon,
                json!({"achievers": achievers.len()}),
            );
        }
        None => {
            rec.check("minimum_sinh_sq", "mirrors-near-rho", false, json!("no mirror misses rho"));
        }
    }
    rec.finish()
}

// ---------------------------------------------------------------- near τ

/// The 26 point- and line-mirrors are the strictly nearest to τ.
pub fn verify_nearest_tau(store: &BatchStore) -> SuiteReport {
    let mut rec = Recorder::new("nearest_to_tau", "mirrors-near-tau");
    let m = Model::get();
    let want = rq(-3, 78, 4, 78);
    let p1 = m.root(model::RootLabel::P(1));
    let l1 = m.root(model::RootLabel::L(1));
    let dp = sinh_sq_dist_to_mirror(&m.tau, &p1).unwrap().value;
    let dl = sinh_sq_dist_to_mirror(&m.tau, &l1).unwrap().value;
    rec.check("sinh_sq_tau_p1", "mirrors-near-tau", dp == want, json!(dp.to_string()));
    rec.check("point_and_line_equal", "mirrors-near-tau", dp == dl, json!(dl.to_string()));
    let beta = cosh_sq_dist(&m.p_inf, &m.tau).unwrap().value;
    let gamma = RealQuad::rat(Rat::new(4, 3));
    rec.check(
        "batches_0_to_2_suffice",
        "mirrors-near-tau",
        sinh_sum_less(&dp, &beta, &gamma),
        json!({"sinh_sq_a": dp.to_string(), "cosh_sq_b": beta.to_string(), "sinh_sq_c": gamma.to_string()}),
    );
    let roots: Vec<Root> = store.pinf.iter().take(3).flat_map(|b| b.roots.iter().copied()).collect();
    let (tau, _) = fast(&m.tau);
    let vals = pairing_norms(&tau, &roots);
    let through = vals.iter().filter(|v| v.is_zero()).count();
    rec.check("no_mirror_through_tau", "mirrors-near-tau", through == 0, json!({"scanned": roots.len(), "through": through}));
    if let Some((_, idx)) = min_nonzero(&vals) {
        let nearest: BTreeSet<Root> = idx.iter().map(|&i| canonical_root(&roots[i])).collect();
        let expected: BTreeSet<Root> = model::RootLabel::all().into_iter().map(canon_of).collect();
        let min_is_p1 = vals[roots.iter().position(|r| canonical_root(r) == canon_of(model::RootLabel::P(1))).unwrap()]
            == vals[idx[0]];
        rec.check(
            "nearest_are_the_26",
            "mirrors-near-tau",
            nearest == expected && min_is_p1,
            json!({"nearest": nearest.len()}),
        );
    }
    rec.finish()
}

// ---------------------------------------------------------------- σ

/// Triflection `x ↦ x − (1−u)⟨x,s⟩/⟨s,s⟩·s` with `u` a cube root of unity.
fn triflect(x: &[CycElem], s: &[CycElem], u: &CycElem) -> AVec {
    let f = &(&(&CycElem::one() - u) * &herm(x, s)) / &model::norm(s);
    model::axpy(&(-f), s, x)
}

/// Outcome of the two nearest-mirror criteria at one `t`.
#[derive(Clone, Debug)]
pub struct SigmaOutcome {
    pub t: Rat,
    pub nearest_four: bool,
    pub eight_images: bool,
    pub failing: Vec<usize>,
}

/// The 40 L₄ mirrors as vectors, the four simple ones first.
fn l4_roots_cyc() -> Vec<AVec> {
    let m = Model::get();
    let simple: Vec<Root> = A4_ROOTS.iter().map(|&l| canon_of(l)).collect();
    let mut out: Vec<AVec> = A4_ROOTS.iter().map(|&l| m.root(l)).collect();
    for r in l4_first_block_classes() {
        if !simple.contains(&r) {
            out.push(evec::to_cyc(&root_to_evec(&r)));
        }
    }
    out
}

pub fn sigma_criteria(t: &Rat) -> SigmaOutcome {
    let m = Model::get();
    let sigma = m.sigma_point(t).expect("0 < t ≤ 1").vector;
    let roots = l4_roots_cyc();
    // (a) depends on |⟨σ,r⟩|² = t²|⟨τ,r⟩|² only
    let vals: Vec<RealQuad> = roots.iter().map(|r| herm(&sigma, r).norm_sq()).collect();
    let min4 = vals[..4].iter().all(|v| *v == vals[0]);
    let nearest_four = min4 && vals[4..].iter().all(|v| (v - &vals[0]).sign() > 0);
    let w = CycElem::omega();
    let images: Vec<AVec> = roots[..4]
        .iter()
        .flat_map(|s| [triflect(&sigma, s, &w), triflect(&sigma, s, &w.conj())])
        .collect();
    let failing: Vec<usize> = (4..roots.len())
        .into_par_iter()
        .filter(|&i| {
            let p = model::project_to_mirror(&sigma, &roots[i]);
            let own = herm(&p, &sigma).norm_sq();
            !images.iter().any(|e| (&herm(&p, e).norm_sq() - &own).sign() < 0)
        })
        .collect();
    SigmaOutcome { t: t.clone(), nearest_four, eight_images: failing.is_empty() && images.len() == 8, failing }
}

/// First `t` in `start, start/2, start/4, …` passing both criteria.
pub fn sigma_search(start: &Rat, max_halvings: u32) -> Option<SigmaOutcome> {
    let mut t = start.clone();
    for _ in 0..=max_halvings {
        let o = sigma_criteria(&t);
        if o.nearest_four && o.eight_images {
            return Some(o);
        }
        t = &t / &Rat::int(2);
    }
    None
}

pub fn verify_sigma(start: &Rat) -> SuiteReport {
    let mut rec = Recorder::new("sigma_point", "mirrors-near-sigma");
    let first = sigma_criteria(start);
    rec.check(
        "criteria_at_start",
        "mirrors-near-sigma",
        true,
        json!({"t": start.to_string(), "nearest_four": first.nearest_four, "eight_images": first.eight_images, "failing": first.failing.len()}),
    );
    match sigma_search(start, 40) {
        Some(o) => {
            rec.check("found_t", "mirrors-near-sigma", true, json!({"t": o.t.to_string()}));
            rec.check("nearest_four_mirrors", "mirrors-near-sigma", o.nearest_four, json!({"t": o.t.to_string()}));
            rec.check("eight_images_closer", "mirrors-near-sigma", o.eight_images, json!({"image_count": 8, "t": o.t.to_string()}));
        }
        None => {
            rec.check("found_t", "mirrors-near-sigma", false, json!("no dyadic t down to start/2^40"));
        }
    }
    rec.finish()
}

// ---------------------------------------------------------------- L_DM

/// Exact data for deciding whether a mirror meets the sub-ball of
/// `L_DM ⊗ C`.
pub struct SubballTest {
    a4: Vec<EVec>,
    adj: Vec<Vec<EisInt>>,
    det: i64,
    ldm_basis: Vec<EVec>,
}

impl SubballTest {
    pub fn new() -> Self {
        let m = Model::get();
        let a4: Vec<EVec> = A4_ROOTS.iter().map(|&l| m.roots.get(l).clone()).collect();
        let g: linalg::CMat = a4.iter().map(|x| a4.iter().map(|y| evec::to_cyc(&[model::herm_e(x, y)])[0].clone()).collect()).collect();
        let det = linalg::determinant(&g);
        let inv = linalg::inverse(&g).expect("A4 Gram invertible");
        let adj: Vec<Vec<EisInt>> = inv
            .iter()
            .map(|r| r.iter().map(|x| EisInt::from_cyc(&(x * &det)).expect("adjugate in E")).collect())
            .collect();
        let det = EisInt::from_cyc(&det).expect("integral determinant");
        assert_eq!(det.n, 0);
        let ldm_basis = evec::eis_basis(&m.cbasis.l_dm_generators());
        SubballTest { a4, adj, det: det.m, ldm_basis }
    }

    /// `(v, det·s_V²)` with `v_X = ⟨s,s_X⟩`.
    fn parts(&self, s: &[EisInt]) -> ([EisInt; 4], i64) {
        let mut v = [EisInt::ZERO; 4];
        for (k, x) in self.a4.iter().enumerate() {
            v[k] = model::herm_e(s, x);
        }
        // s_W = Σ c_Y s_Y with cᵀG = vᵀ, so ⟨s_W,s_W⟩ = vᵀ G⁻¹ v̄
        let mut q = EisInt::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                q = q + v[i] * self.adj[i][j] * v[j].conj();
            }
        }
        assert_eq!(q.n, 0, "hermitian value is real");
        (v, 3 * self.det - q.m)
    }

    /// Whether the form on `s⊥ ∩ (L_DM ⊗ C)` has a negative vector.
    pub fn meets(&self, s: &[EisInt]) -> bool {
        let (_, sv2) = self.parts(s);
        (sv2 * self.det.signum()) > 0 || self.in_l4_span(s)
    }

    /// `s ∈ L₄ ⊗ C`, i.e. `s ⊥ L_DM`.
    pub fn in_l4_span(&self, s: &[EisInt]) -> bool {
        self.ldm_basis.iter().all(|b| model::herm_e(s, b).is_zero())
    }

    pub fn orthogonal_to_l4(&self, s: &[EisInt]) -> bool {
        self.parts(s).0.iter().all(|x| x.is_zero())
    }

    /// Independent decision from the inertia of the restricted Gram.
    pub fn meets_by_inertia(&self, s: &[EisInt]) -> bool {
        let sc = evec::to_cyc(s);
        let basis: Vec<AVec> = self.ldm_basis.iter().map(|b| evec::to_cyc(b)).collect();
        let row: linalg::CMat = vec![basis.iter().map(|b| herm(b, &sc)).collect()];
        let ker = linalg::kernel(&row);
        let vecs: Vec<AVec> = ker
            .iter()
            .map(|k| {
                let mut acc = vec![CycElem::zero(); 14];
                for (c, b) in k.iter().zip(&basis) {
                    acc = model::axpy(c, b, &acc);
                }
                acc
            })
            .collect();
        let g: linalg::CMat = vecs.iter().map(|x| vecs.iter().map(|y| herm(x, y)).collect()).collect();
        linalg::inertia(&g).1 > 0
    }
}

impl Default for SubballTest {
    fn default() -> Self {
        Self::new()
    }
}

pub fn mirror_meets_subball(s: &[EisInt]) -> bool {
    static T: OnceLock<SubballTest> = OnceLock::new();
    T.get_or_init(SubballTest::new).meets(s)
}

/// Over all batch ≤ 3 roots around `c`: a root whose mirror meets the
/// sub-ball is orthogonal to L₄ or lies in L₄ ⊗ C.
pub fn verify_subball_mirrors(store: &BatchStore, sample_stride: usize) -> SuiteReport {
    let mut rec = Recorder::new("subball_mirrors", "subball-mirrors");
    let t = SubballTest::new();
    let m = Model::get();
    let s0 = m.roots.get(TWELVE_GON[0]);
    let sa = m.roots.get(A4_ROOTS[0]);
    rec.check("s0_meets", "subball-mirrors", t.meets(s0), json!(null));
    rec.check("sA_contains_subball", "subball-mirrors", t.meets(sa) && t.in_l4_span(sa), json!(null));
    let roots: Vec<Root> = store.c_roots().copied().collect();
    let (meet, bad): (usize, Vec<Root>) = roots
        .par_iter()
        .map(|r| {
            let s = root_to_evec(r);
            if !t.meets(&s) {
                (0, vec![])
            } else if t.orthogonal_to_l4(&s) || t.in_l4_span(&s) {
                (1, vec![])
            } else {
                (1, vec![*r])
            }
        })
        .reduce(|| (0, vec![]), |a, b| (a.0 + b.0, [a.1, b.1].concat()));
    rec.check(
        "meeting_mirrors_are_ldm_or_l4",
        "subball-mirrors",
        bad.is_empty(),
        json!({"scanned": roots.len(), "meeting": meet, "exceptions": bad.len()}),
    );
    let stride = sample_stride.max(1);
    let sample: Vec<&Root> = roots.iter().step_by(stride).collect();
    let disagree = sample
        .par_iter()
        .filter(|r| {
            let s = root_to_evec(r);
            t.meets(&s) != t.meets_by_inertia(&s)
        })
        .count();
    rec.check(
        "inertia_cross_check",
        "subball-mirrors",
        disagree == 0,
        json!({"sampled": sample.len(), "disagreements": disagree}),
    );
    rec.finish()
}
