//! Named verification suites and the dependency-ordered runner.

use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coxbraid;
use crate::exactnum::{CycElem, EisInt, Rat, RealQuad};
use crate::geometry::claims::{self, BatchStore};
use crate::geometry::{cosh_sq_dist, oracle, sinh_sq_dist_to_mirror};
use crate::isometries::checks;
use crate::lattice::{
    self, a4_graph, enumerate_by_norm, evec, gram_from_graph, hyperbolic_cell, real_form, signature,
    theta_dual_equals_self, DirectedGraph, GramLattice,
};
use crate::model::{self, lorentz, CBasis, Model};
use crate::report::{Check, Recorder, Status, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Field,
    Lattice,
    Model,
    Batches,
    Geometry,
    Identities,
    Coxeter,
}

impl Suite {
    /// Dependency order.
    pub const ALL: [Suite; 7] =
        [Suite::Field, Suite::Lattice, Suite::Model, Suite::Batches, Suite::Geometry, Suite::Identities, Suite::Coxeter];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Field => "field",
            Suite::Lattice => "lattice",
            Suite::Model => "model",
            Suite::Batches => "batches",
            Suite::Geometry => "geometry",
            Suite::Identities => "identities",
            Suite::Coxeter => "coxeter",
        }
    }

    pub fn prerequisites(self) -> &'static [Suite] {
        match self {
            Suite::Field => &[],
            Suite::Lattice => &[Suite::Field],
            Suite::Model => &[Suite::Lattice],
            Suite::Batches => &[Suite::Model],
            Suite::Geometry => &[Suite::Batches],
            Suite::Identities => &[Suite::Model],
            Suite::Coxeter => &[Suite::Identities],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s}"))
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub suites: Vec<Suite>,
    pub cache_dir: Option<PathBuf>,
    pub threads: usize,
    /// 0..=3
    pub batch_max: u32,
    pub sigma_t: Rat,
    pub seed: u64,
    pub fail_fast: bool,
    /// randomized cases per property
    pub cases: usize,
    /// every k-th meeting root is cross-checked by inertia in the sub-ball check
    pub sample_stride: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            suites: Suite::ALL.to_vec(),
            cache_dir: None,
            threads: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            batch_max: 3,
            sigma_t: Rat::new(1, 2),
            seed: 0x5eed,
            fail_fast: false,
            cases: 1000,
            sample_stride: 997,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("batch depth {0} outside 0..=3")]
    BatchDepth(u32),
    #[error("worker count must be at least 1")]
    Threads,
    #[error("sigma start {0} outside (0, 1]")]
    SigmaT(String),
    #[error("could not start the worker pool: {0}")]
    Pool(String),
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.batch_max > 3 {
            return Err(ConfigError::BatchDepth(self.batch_max));
        }
        if self.threads == 0 {
            return Err(ConfigError::Threads);
        }
        if self.sigma_t <= Rat::zero() || self.sigma_t > Rat::one() {
            return Err(ConfigError::SigmaT(self.sigma_t.to_string()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteRun {
    pub suite: Suite,
    pub status: Status,
    pub reports: Vec<SuiteReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub seed: u64,
    pub batch_max: u32,
    pub sigma_t: String,
    pub suites: Vec<SuiteRun>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.status != Status::Fail)
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.suites.iter().flat_map(|s| s.reports.iter().flat_map(|r| r.checks.iter()))
    }

    /// Report content without timings, for determinism comparisons.
    pub fn content(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        if let Some(suites) = v["suites"].as_array_mut() {
            for s in suites {
                if let Some(reports) = s["reports"].as_array_mut() {
                    for r in reports {
                        r["elapsed_ms"] = json!(0);
                    }
                }
            }
        }
        v
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}  batch-max {}  sigma-t {}", self.seed, self.batch_max, self.sigma_t)?;
        for s in &self.suites {
            writeln!(f, "# suite {} : {:?}", s.suite, s.status)?;
            for r in &s.reports {
                write!(f, "{r}")?;
            }
        }
        let (p, fl, sk) = self.checks().fold((0, 0, 0), |(p, f, s), c| match c.status {
            Status::Pass => (p + 1, f, s),
            Status::Fail => (p, f + 1, s),
            Status::Skip => (p, f, s + 1),
        });
        writeln!(f, "overall: {}  ({p} pass, {fl} fail, {sk} skip)", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Runs the requested suites in dependency order on a pool of
/// `cfg.threads` workers. A suite whose prerequisite ran and failed a gating
/// check is skipped; failing only a comparison with a printed value does not
/// block dependents.
pub fn run(cfg: &Config) -> Result<RunReport, ConfigError> {
    cfg.validate()?;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build().map_err(|e| ConfigError::Pool(e.to_string()))?;
    Ok(pool.install(|| run_in_pool(cfg)))
}

fn run_in_pool(cfg: &Config) -> RunReport {
    let mut store: Option<Result<BatchStore, String>> = None;
    schedule(cfg, |s| run_suite(s, cfg, &mut store))
}

/// Dependency-ordered scheduling with the skip rules, over any suite runner.
fn schedule(cfg: &Config, mut run_one: impl FnMut(Suite) -> Vec<SuiteReport>) -> RunReport {
    let wanted: HashSet<Suite> = cfg.suites.iter().copied().collect();
    let mut failed: HashSet<Suite> = HashSet::new();
    let mut out = Vec::new();
    let mut stop = false;
    for s in Suite::ALL.into_iter().filter(|s| wanted.contains(s)) {
        let blocked = s.prerequisites().iter().find(|p| failed.contains(p));
        if stop || blocked.is_some() {
            let why = match blocked {
                Some(p) => format!("prerequisite suite {p} did not pass"),
                None => "stopped after the first failure".into(),
            };
            let mut rec = Recorder::new(s.name(), "skipped");
            rec.push(Check::skip(&format!("{}_skipped", s.name()), "skipped", &why));
            failed.insert(s);
            out.push(SuiteRun { suite: s, status: Status::Skip, reports: vec![rec.finish()] });
            continue;
        }
        let reports = run_one(s);
        let ok = reports.iter().all(SuiteReport::passed);
        if reports.iter().any(|r| r.gating && !r.passed()) {
            failed.insert(s);
        }
        stop = !ok && cfg.fail_fast;
        out.push(SuiteRun { suite: s, status: if ok { Status::Pass } else { Status::Fail }, reports });
    }
    RunReport { seed: cfg.seed, batch_max: cfg.batch_max, sigma_t: cfg.sigma_t.to_string(), suites: out }
}

fn load_store<'a>(cfg: &Config, store: &'a mut Option<Result<BatchStore, String>>) -> &'a Result<BatchStore, String> {
    store.get_or_insert_with(|| BatchStore::load(cfg.batch_max, cfg.cache_dir.as_deref()).map_err(|e| e.to_string()))
}

fn failed_report(suite: &str, anchor: &str, why: &str) -> SuiteReport {
    let mut rec = Recorder::new(suite, anchor);
    rec.check(&format!("{suite}_available"), anchor, false, json!(why));
    rec.finish()
}

pub fn run_suite(s: Suite, cfg: &Config, store: &mut Option<Result<BatchStore, String>>) -> Vec<SuiteReport> {
    match s {
        Suite::Field => vec![verify_field(cfg.seed, cfg.cases)],
        Suite::Lattice => vec![verify_lattice()],
        Suite::Model => vec![verify_model()],
        Suite::Batches => match load_store(cfg, store) {
            Ok(st) => {
                let (rows, printed) = claims::verify_batch_table_parts(st);
                vec![rows, printed, verify_batch_lists(st)]
            }
            Err(e) => vec![failed_report("batches", "batches-around-c", e)],
        },
        Suite::Geometry => match load_store(cfg, store) {
            Ok(st) => {
                let depth = cfg.batch_max;
                let needs = |report: &str, anchor: &str, need: u32, f: &dyn Fn() -> SuiteReport| {
                    if depth >= need {
                        return f();
                    }
                    let mut rec = Recorder::new(report, anchor);
                    rec.push(Check::skip(
                        &format!("{report}_needs_depth_{need}"),
                        anchor,
                        &format!("only batches 0..={depth} loaded"),
                    ));
                    rec.finish()
                };
                vec![
                    claims::verify_distance_table(),
                    needs("polygon_mirrors", "polygons-miss-mirrors", 3, &|| claims::verify_polygon_mirrors(st)),
                    needs("nearest_to_rho", "mirrors-near-rho", 3, &|| claims::verify_nearest_rho(st)),
                    needs("nearest_to_tau", "mirrors-near-tau", 2, &|| claims::verify_nearest_tau(st)),
                    claims::verify_sigma(&cfg.sigma_t),
                    needs("subball_mirrors", "subball-mirrors", 3, &|| claims::verify_subball_mirrors(st, cfg.sample_stride)),
                    verify_geometry_properties(cfg.seed, cfg.cases),
                ]
            }
            Err(e) => vec![failed_report("geometry", "critical-ball-cover", e)],
        },
        Suite::Identities => vec![
            checks::verify_special_words(),
            checks::verify_sigma_stabilizer(),
            checks::verify_conjugation_tables(),
            checks::verify_braid_relations(),
        ],
        Suite::Coxeter => vec![coxbraid::deflation_check(), coxbraid::verify_presentations()],
    }
}

// ---------------------------------------------------------------- field

fn rand_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=12))
}

fn rand_rq(rng: &mut ChaCha8Rng) -> RealQuad {
    RealQuad::new(rand_rat(rng), rand_rat(rng))
}

fn rand_cyc(rng: &mut ChaCha8Rng) -> CycElem {
    CycElem::new(rand_rq(rng), rand_rq(rng))
}

fn rand_eis(rng: &mut ChaCha8Rng) -> EisInt {
    EisInt::new(rng.gen_range(-50..=50), rng.gen_range(-50..=50))
}

/// Randomized field and ring axioms for `Q(√3)`, `Q(i,√3)` and `Z[ω]`,
/// plus fixed identities for the named constants.
pub fn verify_field(seed: u64, cases: usize) -> SuiteReport {
    let mut rec = Recorder::new("field", "field-axioms");
    let a = "field-axioms";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad: Vec<String> = Vec::new();
    for _ in 0..cases {
        let (x, y, z) = (rand_cyc(&mut rng), rand_cyc(&mut rng), rand_cyc(&mut rng));
        if &(&x * &y) * &z != &x * &(&y * &z) {
            bad.push(format!("assoc {x} {y} {z}"));
        }
        if &x * &(&y + &z) != &(&x * &y) + &(&x * &z) {
            bad.push(format!("distrib {x} {y} {z}"));
        }
        if &x * &y != &y * &x || &x + &y != &y + &x {
            bad.push(format!("commut {x} {y}"));
        }
        if (&x * &y).conj() != &x.conj() * &y.conj() {
            bad.push(format!("conj {x} {y}"));
        }
        if (&x * &y).norm_sq() != &x.norm_sq() * &y.norm_sq() {
            bad.push(format!("norm {x} {y}"));
        }
        if !x.is_zero() && &x * &x.inv() != CycElem::one() {
            bad.push(format!("inverse {x}"));
        }
        let r = rand_rq(&mut rng);
        if !r.is_zero() && &r * &r.inv() != RealQuad::one() {
            bad.push(format!("real inverse {r}"));
        }
        if (&r * &r.galois()).field_norm() != r.field_norm().pow(2) {
            bad.push(format!("galois {r}"));
        }
        let (u, v) = (rand_eis(&mut rng), rand_eis(&mut rng));
        if (u * v).to_cyc() != &u.to_cyc() * &v.to_cyc() || (u * v).norm() != u.norm() * v.norm() {
            bad.push(format!("eisenstein {u} {v}"));
        }
    }
    bad.truncate(10);
    rec.check("randomized_axioms", a, bad.is_empty(), json!({"seed": seed, "cases": cases, "violations": bad}));

    let w = CycElem::omega();
    let th = CycElem::theta();
    let consts = [
        ("omega_cubed", w.pow(3) == CycElem::one()),
        ("theta_squared_minus_3", &th * &th == CycElem::int(-3)),
        ("theta_is_omega_minus_conj", th == &w - &w.conj()),
        ("zeta12_squared_is_zeta6", &CycElem::zeta12() * &CycElem::zeta12() == CycElem::zeta6()),
        ("e_pi_i_3_is_one_plus_omega", CycElem::zeta6() == (EisInt::ONE + EisInt::OMEGA).to_cyc()),
        ("sqrt3_squared", &CycElem::sqrt3() * &CycElem::sqrt3() == CycElem::int(3)),
        ("six_units", EisInt::units().iter().all(|u| u.norm() == 1)),
    ];
    for (id, ok) in consts {
        rec.check(id, a, ok, serde_json::Value::Null);
    }
    // convergents of √3 from both sides
    let sign_ok = RealQuad::frac(-7, 4, 1, 1).sign() < 0
        && RealQuad::frac(1351, 780, -1, 1).sign() > 0
        && RealQuad::frac(265, 153, -1, 1).sign() < 0;
    rec.check("exact_signs", a, sign_ok, serde_json::Value::Null);
    rec.finish()
}

// ---------------------------------------------------------------- lattice

fn l4() -> GramLattice {
    GramLattice::from_gram(gram_from_graph(&a4_graph()))
}

/// Shell counts of `L₄`, θ-duality, real forms, signatures and radicals of
/// the diagram lattices.
pub fn verify_lattice() -> SuiteReport {
    let mut rec = Recorder::new("lattice", "lattice-structure");
    let k = l4();
    let n3 = enumerate_by_norm(&k, &Rat::int(3));
    let n6 = enumerate_by_norm(&k, &Rat::int(6));
    let (c3, c6) = (n3.as_ref().map(Vec::len).unwrap_or(0), n6.as_ref().map(Vec::len).unwrap_or(0));
    rec.check("l4_norm3_count_240", "l4-shells", c3 == 240, json!({"count": c3}));
    rec.check("l4_norm6_count_2160", "l4-shells", c6 == 2160, json!({"count": c6}));
    let closed = |shell: &Result<Vec<evec::EVec>, lattice::LatticeError>| {
        shell.as_ref().is_ok_and(|v| {
            let set: HashSet<&evec::EVec> = v.iter().collect();
            v.iter().all(|x| EisInt::units().iter().all(|&u| set.contains(&evec::scale(u, x))))
        })
    };
    rec.check("l4_shells_closed_under_units", "l4-shells", closed(&n3) && closed(&n6), serde_json::Value::Null);

    let theta = |g: &GramLattice| theta_dual_equals_self(g).map(|t| t.holds).unwrap_or(false);
    let g4 = gram_from_graph(&a4_graph());
    let big = hyperbolic_cell().direct_sum(&g4).direct_sum(&g4).direct_sum(&g4);
    rec.check("theta_dual_l4", "lattice-structure", theta(&k), serde_json::Value::Null);
    rec.check("theta_dual_hyperbolic_cell", "lattice-structure", theta(&GramLattice::from_gram(hyperbolic_cell())), serde_json::Value::Null);
    rec.check("theta_dual_cell_plus_three_l4", "lattice-structure", theta(&GramLattice::from_gram(big)), serde_json::Value::Null);

    let plane = gram_from_graph(&DirectedGraph::projective_plane_f3());
    let (r, rad) = lattice::rank_and_radical(&plane);
    rec.check(
        "plane_graph_radical_rank_12",
        "lattice-structure",
        (r, rad.len()) == (14, 12),
        json!({"rank": r, "radical": rad.len(), "signature": signature(&plane)}),
    );
    let gon = gram_from_graph(&DirectedGraph::alternating_cycle(12));
    let (r, rad) = lattice::rank_and_radical(&gon);
    rec.check(
        "twelve_gon_nullity_2",
        "lattice-structure",
        (r, rad.len()) == (10, 2),
        json!({"rank": r, "nullity": rad.len(), "signature": signature(&gon)}),
    );
    match real_form(&k) {
        Ok(e8) => {
            let ok = e8.dim() == 8 && e8.is_even() && e8.determinant() == 1.into() && e8.signature() == (8, 0, 0);
            rec.check(
                "l4_real_form_even_unimodular_rank_8",
                "lattice-structure",
                ok,
                json!({"dim": e8.dim(), "even": e8.is_even(), "det": e8.determinant().to_string()}),
            );
        }
        Err(e) => {
            rec.check("l4_real_form_even_unimodular_rank_8", "lattice-structure", false, json!(e.to_string()));
        }
    }
    rec.finish()
}

// ---------------------------------------------------------------- model

/// The c-basis Gram, the membership characterization, and the structure of
/// `L` and `L_DM`.
pub fn verify_model() -> SuiteReport {
    let mut rec = Recorder::new("model", "c-basis");
    let m = Model::get();
    rec.check("c_basis_gram_matches_block_matrix", "c-basis", m.cbasis.gram() == CBasis::expected_gram(), serde_json::Value::Null);
    match m.cbasis.containment(&m.roots) {
        Ok(rep) => {
            rec.check("characterization_two_sided_containment", "c-basis", rep.holds(), json!(format!("{rep:?}")));
        }
        Err(e) => {
            rec.check("characterization_two_sided_containment", "c-basis", false, json!(e.to_string()));
        }
    }
    let congruent = m.roots.all().iter().all(|r| {
        m.cbasis
            .c_coords(&evec::to_cyc(r))
            .is_some_and(|cc| crate::exactnum::eis_congruent_mod_theta(cc.a, cc.b) && &m.cbasis.to_standard(&cc) == r)
    });
    rec.check("generators_congruent_mod_theta", "c-basis", congruent, serde_json::Value::Null);

    let lattice_of = |gens: &[evec::EVec]| {
        let basis = evec::eis_basis(gens);
        GramLattice::from_vectors(basis.iter().map(|b| evec::to_cyc(b)).collect(), lorentz())
    };
    let l = lattice_of(m.roots.all());
    let ldm = lattice_of(&m.cbasis.l_dm_generators());
    for (name, k, sig) in [("l", &l, (13, 1, 0)), ("l_dm", &ldm, (9, 1, 0))] {
        let got = signature(&k.gram);
        rec.check(&format!("signature_{name}"), "lattice-structure", got == sig, json!({"signature": got}));
        let th = theta_dual_equals_self(k).map(|t| t.holds).unwrap_or(false);
        rec.check(&format!("theta_dual_{name}"), "lattice-structure", th, serde_json::Value::Null);
    }
    let gon = model::TWELVE_GON.iter().map(|&l| m.root(l)).collect::<Vec<_>>();
    let gram: Vec<Vec<CycElem>> = gon.iter().map(|x| gon.iter().map(|y| model::herm(x, y)).collect()).collect();
    let sig = lattice::linalg::inertia(&gram);
    rec.check("twelve_gon_gram_signature", "lattice-structure", sig == (9, 1, 2), json!({"signature": sig}));
    rec.finish()
}

// ---------------------------------------------------------------- batches

/// Every listed root has norm 3 and the lists hold one root per scalar
/// class, with no class repeated across batches.
pub fn verify_batch_lists(store: &BatchStore) -> SuiteReport {
    use rayon::prelude::*;

    use crate::geometry::batches::{canonical_root, root_to_evec};
    let mut rec = Recorder::new("batch_lists", "batches-around-c");
    for (center, lists) in [("c", &store.c), ("pinf", &store.pinf)] {
        let counts: Vec<usize> = lists.iter().map(|b| b.roots.len()).collect();
        let norm_ok = lists.iter().all(|b| {
            b.roots.par_iter().all(|r| {
                let v = root_to_evec(r);
                model::herm_e(&v, &v) == EisInt::new(3, 0)
            })
        });
        let mut classes: Vec<_> = lists.iter().flat_map(|b| b.roots.par_iter().map(canonical_root).collect::<Vec<_>>()).collect();
        let listed = classes.len();
        classes.par_sort_unstable();
        classes.dedup();
        rec.check(
            &format!("{center}_lists_one_root_per_class"),
            "batches-around-c",
            norm_ok && classes.len() == listed,
            json!({"counts": counts, "norm_3": norm_ok, "distinct_classes": classes.len()}),
        );
    }
    rec.finish()
}

// ---------------------------------------------------------------- properties

/// Distances are unchanged by nonzero scalars on either argument, and the
/// exact polygon classifier agrees with a float oracle on random triangles.
pub fn verify_geometry_properties(seed: u64, cases: usize) -> SuiteReport {
    let mut rec = Recorder::new("geometry_properties", "scalar-invariance");
    let m = Model::get();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let base_tr = cosh_sq_dist(&m.tau, &m.rho).expect("negative points");
    let roots: Vec<model::AVec> = m.roots.all().iter().map(|r| evec::to_cyc(r)).collect();
    let base_s: Vec<_> = roots.iter().map(|s| sinh_sq_dist_to_mirror(&m.tau, s).expect("positive root")).collect();
    let mut bad = 0usize;
    for _ in 0..cases {
        let nz = |rng: &mut ChaCha8Rng| loop {
            let c = CycElem::new(
                RealQuad::new(Rat::int(rng.gen_range(-5..=5)), Rat::int(rng.gen_range(-5..=5))),
                RealQuad::new(Rat::int(rng.gen_range(-5..=5)), Rat::int(rng.gen_range(-5..=5))),
            );
            if !c.is_zero() {
                return c;
            }
        };
        let (a, b) = (nz(&mut rng), nz(&mut rng));
        let k = rng.gen_range(0..roots.len());
        let tau2 = model::scale(&a, &m.tau);
        let rho2 = model::scale(&b, &m.rho);
        let s2 = model::scale(&b, &roots[k]);
        if cosh_sq_dist(&tau2, &rho2).ok().as_ref() != Some(&base_tr)
            || sinh_sq_dist_to_mirror(&tau2, &s2).ok().as_ref() != Some(&base_s[k])
        {
            bad += 1;
        }
    }
    rec.check("distances_ignore_scalars", "scalar-invariance", bad == 0, json!({"seed": seed, "cases": cases, "violations": bad}));

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7f4a_7c15);
    let t = oracle::random_triangles(&mut rng, 150, 20_000);
    rec.check(
        "classification_matches_float_oracle",
        "polygons-miss-mirrors",
        t.conclusive >= 100 && t.disagreements.is_empty(),
        json!({"seed": seed, "conclusive": t.conclusive, "tries": t.tries, "disagreements": t.disagreements.len()}),
    );
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn config_validation() {
        let mut c = Config::default();
        assert!(c.validate().is_ok());
        c.batch_max = 4;
        assert_eq!(c.validate(), Err(ConfigError::BatchDepth(4)));
        c.batch_max = 2;
        c.threads = 0;
        assert_eq!(c.validate(), Err(ConfigError::Threads));
        c.threads = 1;
        c.sigma_t = Rat::int(2);
        assert!(matches!(c.validate(), Err(ConfigError::SigmaT(_))));
    }

    #[test]
    fn field_suite_passes_and_is_seeded() {
        let a = verify_field(3, 200);
        assert!(a.passed(), "{a}");
        assert_eq!(a.check("randomized_axioms").unwrap().witness["seed"], 3);
    }

    #[test]
    fn shallow_batches_skip_deep_claims() {
        let cfg = Config { suites: vec![Suite::Geometry], batch_max: 0, cases: 20, ..Config::default() };
        let r = run(&cfg).unwrap();
        let skipped: Vec<&str> =
            r.checks().filter(|c| c.status == Status::Skip).map(|c| c.id.as_str()).collect();
        assert_eq!(
            skipped,
            [
                "polygon_mirrors_needs_depth_3",
                "nearest_to_rho_needs_depth_3",
                "nearest_to_tau_needs_depth_2",
                "subball_mirrors_needs_depth_3"
            ]
        );
        assert!(r.passed(), "{r}");
    }

    fn fake(s: Suite, fail: Option<(Suite, bool)>) -> Vec<SuiteReport> {
        let mut rec = Recorder::new(s.name(), "fake");
        let broken = fail.is_some_and(|(f, _)| f == s);
        if broken && !fail.unwrap().1 {
            rec = rec.non_gating();
        }
        rec.check("ran", "fake", !broken, serde_json::Value::Null);
        vec![rec.finish()]
    }

    fn statuses(r: &RunReport) -> Vec<(Suite, Status)> {
        r.suites.iter().map(|s| (s.suite, s.status)).collect()
    }

    #[test]
    fn dependents_of_a_failed_suite_are_skipped() {
        use Status::*;
        let cfg = Config::default();
        let r = schedule(&cfg, |s| fake(s, Some((Suite::Model, true))));
        assert_eq!(
            statuses(&r),
            [
                (Suite::Field, Pass),
                (Suite::Lattice, Pass),
                (Suite::Model, Fail),
                (Suite::Batches, Skip),
                (Suite::Geometry, Skip),
                (Suite::Identities, Skip),
                (Suite::Coxeter, Skip),
            ]
        );
        assert!(!r.passed());
        // a failing non-gating report does not block dependents
        let r = schedule(&cfg, |s| fake(s, Some((Suite::Batches, false))));
        assert_eq!(r.suites.iter().filter(|s| s.status == Skip).count(), 0);
        assert_eq!(r.suites[3].status, Fail);
        // an identities failure leaves the geometry branch alone
        let r = schedule(&cfg, |s| fake(s, Some((Suite::Identities, true))));
        assert_eq!(r.suites[4].status, Pass);
        assert_eq!(r.suites[6].status, Skip);
        // fail-fast skips everything after the first failure
        let ff = Config { fail_fast: true, ..Config::default() };
        let r = schedule(&ff, |s| fake(s, Some((Suite::Batches, false))));
        assert_eq!(r.suites.iter().filter(|s| s.status == Skip).count(), 3);
        // suites not requested are not run, and do not block
        let only = Config { suites: vec![Suite::Coxeter, Suite::Field], ..Config::default() };
        let r = schedule(&only, |s| fake(s, None));
        assert_eq!(statuses(&r), [(Suite::Field, Pass), (Suite::Coxeter, Pass)]);
    }

    #[test]
    fn identities_and_coxeter_pass_on_a_small_pool() {
        let cfg = Config { suites: vec![Suite::Identities, Suite::Coxeter], threads: 2, ..Config::default() };
        let r = run(&cfg).unwrap();
        assert_eq!(r.suites.len(), 2);
        assert!(r.passed(), "{r}");
        assert!(r.to_string().contains("overall: PASS"));
    }
}
