//! Roots of `L` by their pairing with a norm −3 center.
//!
//! Two independent constructions:
//!
//! * the block construction around `c`: roots `[a/θ, b/θ; v₁; v₂; v₃]`
//!   assembled from the norm 3 and 6 vectors of L₄;
//! * a generic bounded enumerator for any primitive norm −3 lattice vector
//!   `z`. With `π(x) = ⟨x,z⟩/θ ∈ E` the form
//!   `h(x) = ⟨x,x⟩ + (2/3)|⟨x,z⟩|²` is positive definite on `L`, and a root
//!   with given `π` has `h = 3 + 2|π|²`. The lattice is split as
//!   `ker π ⊕ (two preimages)`, the preimage coordinates are fixed by `π`,
//!   and the rest is a definite enumeration.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::exactnum::{EisInt, Rat, RealQuad};
use crate::lattice::cache::{self, CacheError, CacheKey};
use crate::lattice::evec::{self, EVec};
use crate::lattice::hnf::{self, to_big};
use crate::lattice::lll::{lll_gram, size_reduce_tail};
use crate::lattice::{a4_graph, enumerate_by_norm, gram_from_graph, GramLattice, IntForm};
use crate::model::{herm_e, Model};

use super::{critical_sinh_sq, GeometryError};

/// A root in interleaved integer coordinates `(m₀,n₀,…,m₁₃,n₁₃)`.
pub type Root = [i32; 28];

pub fn root_from_evec(v: &[EisInt]) -> Root {
    let mut out = [0i32; 28];
    for (k, e) in v.iter().enumerate() {
        out[2 * k] = i32::try_from(e.m).expect("root coordinate fits in i32");
        out[2 * k + 1] = i32::try_from(e.n).expect("root coordinate fits in i32");
    }
    out
}

pub fn root_to_evec(r: &Root) -> EVec {
    r.chunks(2).map(|c| EisInt::new(c[0] as i64, c[1] as i64)).collect()
}

/// Representative of the class `{u·s}`, as in [`evec::canonical_class`].
pub fn canonical_root(r: &Root) -> Root {
    root_from_evec(&evec::canonical_class(&root_to_evec(r)))
}

/// Norm 3 or 6 vectors of L₄ as coordinates over its four simple roots.
pub fn l4_shell(norm: i64) -> &'static [[EisInt; 4]] {
    static S3: OnceLock<Vec<[EisInt; 4]>> = OnceLock::new();
    static S6: OnceLock<Vec<[EisInt; 4]>> = OnceLock::new();
    let build = |n: i64| {
        let k = GramLattice::from_gram(gram_from_graph(&a4_graph()));
        enumerate_by_norm(&k, &Rat::int(n))
            .expect("L4 is definite")
            .into_iter()
            .map(|v| [v[0], v[1], v[2], v[3]])
            .collect()
    };
    match norm {
        3 => S3.get_or_init(|| build(3)),
        6 => S6.get_or_init(|| build(6)),
        0 => &[[EisInt::ZERO; 4]],
        _ => panic!("only the 0, 3 and 6 shells are tabulated"),
    }
}

/// One line of the batch table around `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchTableRow {
    pub batch: u32,
    pub a: EisInt,
    pub b: Vec<EisInt>,
    /// norms of `v₁, v₂, v₃` up to permutation
    pub norms: [i64; 3],
    pub label: &'static str,
}

/// Mirror counts as printed in the table.
pub const PRINTED_ROW_COUNTS: [u64; 11] = [120, 1, 2160, 3, 6480, 172800, 4320, 6480, 518400, 2160, 6];

fn units_times(x: EisInt) -> Vec<EisInt> {
    EisInt::units().iter().map(|&u| u * x).collect()
}

fn omega_powers(x: EisInt) -> Vec<EisInt> {
    let w = EisInt::OMEGA;
    vec![x, w * x, w * w * x]
}

pub fn batch_table_rows() -> Vec<BatchTableRow> {
    let t = EisInt::THETA;
    let one = EisInt::ONE;
    let two = EisInt::from_int(-2);
    let z = EisInt::ZERO;
    let mut seven = omega_powers(EisInt::new(3, 1));
    seven.extend(omega_powers(EisInt::new(3, 0) + EisInt::OMEGA.conj()));
    vec![
        BatchTableRow { batch: 0, a: z, b: vec![z], norms: [3, 0, 0], label: "a=0 b=0 (3,0,0)" },
        BatchTableRow { batch: 0, a: z, b: units_times(t), norms: [0, 0, 0], label: "a=0 b=±ω^jθ (0,0,0)" },
        BatchTableRow { batch: 1, a: one, b: omega_powers(one), norms: [3, 0, 0], label: "a=1 b=ω^j (3,0,0)" },
        BatchTableRow { batch: 1, a: one, b: omega_powers(two), norms: [0, 0, 0], label: "a=1 b=−2ω^j (0,0,0)" },
        BatchTableRow { batch: 2, a: t, b: vec![z], norms: [6, 0, 0], label: "a=θ b=0 (6,0,0)" },
        BatchTableRow { batch: 2, a: t, b: vec![z], norms: [3, 3, 0], label: "a=θ b=0 (3,3,0)" },
        BatchTableRow { batch: 2, a: t, b: units_times(t), norms: [3, 0, 0], label: "a=θ b=±ω^jθ (3,0,0)" },
        BatchTableRow { batch: 3, a: two, b: omega_powers(one), norms: [6, 0, 0], label: "a=−2 b=ω^j (6,0,0)" },
        BatchTableRow { batch: 3, a: two, b: omega_powers(one), norms: [3, 3, 0], label: "a=−2 b=ω^j (3,3,0)" },
        BatchTableRow { batch: 3, a: two, b: omega_powers(two), norms: [3, 0, 0], label: "a=−2 b=−2ω^j (3,0,0)" },
        BatchTableRow { batch: 3, a: two, b: seven, norms: [0, 0, 0], label: "a=−2 b=ω^j(3+ω or ω̄) (0,0,0)" },
    ]
}

/// Distinct orderings of a norm pattern over the three blocks.
fn placements(norms: [i64; 3]) -> Vec<[i64; 3]> {
    let mut out = BTreeSet::new();
    for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        out.insert([norms[p[0]], norms[p[1]], norms[p[2]]]);
    }
    out.into_iter().collect()
}

/// Roots of one row, one per scalar class, sorted.
pub fn batch_table_row_roots(row: &BatchTableRow) -> Vec<Root> {
    let cb = &Model::get().cbasis;
    let mut out: Vec<Root> = Vec::new();
    for &b in &row.b {
        for pl in placements(row.norms) {
            let (s0, s1, s2) = (l4_shell(pl[0]), l4_shell(pl[1]), l4_shell(pl[2]));
            let part: Vec<Root> = s0
                .par_iter()
                .flat_map_iter(|v1| {
                    let mut local = Vec::with_capacity(s1.len() * s2.len());
                    for v2 in s1 {
                        for v3 in s2 {
                            let cc = crate::model::CCoords { a: row.a, b, v: [*v1, *v2, *v3] };
                            local.push(root_from_evec(&cb.to_standard(&cc)));
                        }
                    }
                    local
                })
                .collect();
            out.extend(part);
        }
    }
    if row.a.is_zero() {
        out = out.par_iter().map(canonical_root).collect();
    }
    out.par_sort_unstable();
    out.dedup();
    out
}

/// All rows of batch `n` with their roots.
pub fn enumerate_batch_table(n: u32) -> Vec<(BatchTableRow, Vec<Root>)> {
    batch_table_rows().into_iter().filter(|r| r.batch == n).map(|r| {
        let roots = batch_table_row_roots(&r);
        (r, roots)
    }).collect()
}

/// Critical ball around a center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchSpec {
    pub center: String,
    pub batch: u32,
    /// `|π|²` with `π = ⟨s,center⟩/θ`
    pub pi_norm: i64,
    pub sinh_sq: RealQuad,
}

/// One representative per scalar class of the roots in a batch, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootList {
    pub spec: BatchSpec,
    pub roots: Vec<Root>,
}

/// Norms of Eisenstein integers, in increasing order, up to `bound`.
pub fn eisenstein_norms(bound: i64) -> Vec<i64> {
    let mut set = BTreeSet::new();
    let r = (bound as f64).sqrt() as i64 + 2;
    for m in -2 * r..=2 * r {
        for n in -2 * r..=2 * r {
            let v = EisInt::new(m, n).norm();
            if v <= bound {
                set.insert(v);
            }
        }
    }
    set.into_iter().collect()
}

/// One Eisenstein integer of norm `n` from each associate class.
pub fn associate_reps(n: i64) -> Vec<EisInt> {
    let mut set = BTreeSet::new();
    let r = (n as f64).sqrt() as i64 + 2;
    for m in -2 * r..=2 * r {
        for k in -2 * r..=2 * r {
            let v = EisInt::new(m, k);
            if v.norm() == n {
                set.insert(preferred_associate(v));
            }
        }
    }
    set.into_iter().collect()
}

/// Fixed representatives `0, 1, θ, −2, 3+ω, 2−ω` where they apply, else
/// the canonical associate.
fn preferred_associate(v: EisInt) -> EisInt {
    let prefs = [EisInt::ZERO, EisInt::ONE, EisInt::THETA, EisInt::from_int(-2), EisInt::new(3, 1), EisInt::new(2, -1)];
    for p in prefs {
        if units_times(p).contains(&v) {
            return p;
        }
    }
    v.canonical_associate()
}

/// Bounded enumeration of roots around a fixed center.
pub struct BoundedEnumerator {
    pub center: EVec,
    form: IntForm,
    /// reduced Z-basis rows, interleaved standard coordinates
    basis: Vec<Vec<i64>>,
    /// HNF of the image `π(L) ⊂ E ≅ Z²`; its two basis rows are the
    /// images of the two preimage rows of `basis`
    image: hnf::Hnf,
}

impl BoundedEnumerator {
    pub fn new(center: &EVec) -> Result<Self, GeometryError> {
        let m = Model::get();
        if herm_e(center, center) != EisInt::from_int(-3) || !m.lattice.contains(center) {
            return Err(GeometryError::BadCenter);
        }
        let zb = m.lattice.z_basis_evecs();
        let pi = |x: &EVec| herm_e(x, center).div_theta().expect("pairings in L are divisible by θ");
        let img: Vec<Vec<i64>> = zb.iter().map(|x| {
            let p = pi(x);
            vec![p.m, p.n]
        }).collect();
        let h = hnf::hnf(&to_big(&img));
        if h.rank() != 2 {
            return Err(GeometryError::BadCenter);
        }
        let combine = |coef: &[BigInt]| -> EVec {
            let mut acc = vec![EisInt::ZERO; zb[0].len()];
            for (c, x) in coef.iter().zip(&zb) {
                let c = c.to_i64().expect("transform entry fits in i64");
                if c != 0 {
                    acc = evec::add(&acc, &evec::scale(EisInt::from_int(c), x));
                }
            }
            acc
        };
        let kernel: Vec<EVec> = h.left_kernel().iter().map(|r| combine(r)).collect();
        let pre: Vec<EVec> = h.u[..2].iter().map(|r| combine(r)).collect();
        let gram = |vs: &[EVec]| -> Vec<Vec<BigInt>> {
            vs.iter().map(|x| vs.iter().map(|y| BigInt::from(majorant2(x, y, center))).collect()).collect()
        };
        // LLL on the kernel, then size-reduce the preimages against it
        let (t, _) = lll_gram(&gram(&kernel));
        let kernel: Vec<EVec> = t.iter().map(|row| lin_comb(row, &kernel)).collect();
        let mut all = kernel;
        all.extend(pre);
        let (t2, g2) = size_reduce_tail(&gram(&all), 26);
        let all: Vec<EVec> = t2.iter().map(|row| lin_comb(row, &all)).collect();
        let g: Vec<Vec<i64>> = g2.iter().map(|r| r.iter().map(|x| x.to_i64().expect("Gram fits in i64")).collect()).collect();
        let form = IntForm::new(&g).map_err(|_| GeometryError::BadCenter)?;
        let basis = all.iter().map(|v| evec::to_z(v)).collect();
        Ok(BoundedEnumerator { center: center.clone(), form, basis, image: h })
    }

    /// `π = ⟨s,center⟩/θ`
    pub fn pi(&self, s: &[EisInt]) -> EisInt {
        herm_e(s, &self.center).div_theta().expect("divisible by θ")
    }

    /// All roots `s` with `π(s) = pi` exactly (not reduced mod units).
    pub fn roots_with_pi(&self, pi: EisInt, limit: Option<usize>) -> Vec<Root> {
        let Ok(tail) = self.image.coordinates(&[BigInt::from(pi.m), BigInt::from(pi.n)]) else {
            return vec![];
        };
        let tail: Vec<i64> = tail.iter().map(|x| x.to_i64().unwrap()).collect();
        let target = 6 + 4 * pi.norm() as i128;
        let to_root = |y: &[i64]| -> Root {
            let mut acc = [0i64; 28];
            for (c, row) in y.iter().zip(&self.basis) {
                if *c != 0 {
                    for (a, b) in acc.iter_mut().zip(row) {
                        *a += c * b;
                    }
                }
            }
            acc.map(|x| i32::try_from(x).expect("root coordinate fits in i32"))
        };
        let mut out: Vec<Root> = match limit {
            None => self.form.enumerate_map(target, &tail, true, |y| Some(to_root(y))),
            Some(l) => self.form.enumerate_limited(target, &tail, true, l).iter().map(|y| to_root(y)).collect(),
        };
        out.par_sort_unstable();
        out
    }

    /// One representative per scalar class of the roots with `|π|² = n`.
    pub fn classes_with_pi_norm(&self, n: i64) -> Vec<Root> {
        let mut out = Vec::new();
        for rep in associate_reps(n) {
            let mut part = self.roots_with_pi(rep, None);
            if rep.is_zero() {
                part = part.par_iter().map(canonical_root).collect();
                part.par_sort_unstable();
                part.dedup();
            }
            out.extend(part);
        }
        out.par_sort_unstable();
        out
    }

    /// Whether some root has `|π|² = n`.
    pub fn realizes(&self, n: i64) -> bool {
        associate_reps(n).into_iter().any(|rep| !self.roots_with_pi(rep, Some(1)).is_empty())
    }

    /// The realized values of `|π|²` up to `bound`, in increasing order;
    /// batch `k` is the `k`-th of them.
    pub fn critical_norms(&self, bound: i64) -> Vec<i64> {
        eisenstein_norms(bound).into_iter().filter(|&n| self.realizes(n)).collect()
    }
}

fn lin_comb(row: &[BigInt], vs: &[EVec]) -> EVec {
    let mut acc = vec![EisInt::ZERO; vs[0].len()];
    for (c, x) in row.iter().zip(vs) {
        let c = c.to_i64().expect("transform entry fits in i64");
        if c != 0 {
            acc = evec::add(&acc, &evec::scale(EisInt::from_int(c), x));
        }
    }
    acc
}

/// `2·Re h(x,y)` with `h(x,y) = ⟨x,y⟩ + (2/3)⟨x,z⟩·conj⟨y,z⟩`; integral on `L`.
fn majorant2(x: &EVec, y: &EVec, z: &EVec) -> i64 {
    let xy = herm_e(x, y);
    let px = herm_e(x, z).div_theta().unwrap();
    let py = herm_e(y, z).div_theta().unwrap();
    let pp = px * py.conj();
    (2 * xy.m - xy.n) + 2 * (2 * pp.m - pp.n)
}

/// Every scalar class of roots with `|⟨s,center⟩|² ≤ max_pairing`.
pub fn enumerate_roots_bounded(center: &EVec, max_pairing: &Rat) -> Result<Vec<Root>, GeometryError> {
    let e = BoundedEnumerator::new(center)?;
    if max_pairing.signum() < 0 {
        return Ok(vec![]);
    }
    let bound = (max_pairing / &Rat::int(3)).floor().to_i64().unwrap_or(i64::MAX);
    let mut out = Vec::new();
    for n in eisenstein_norms(bound) {
        out.extend(e.classes_with_pi_norm(n));
    }
    out.par_sort_unstable();
    Ok(out)
}

/// Named centers with cache-friendly names.
pub fn named_center(name: &str) -> Option<EVec> {
    let m = Model::get();
    match name {
        "c" => evec::from_cyc(&m.c),
        "pinf" => evec::from_cyc(&m.p_inf),
        _ => None,
    }
}

/// Batch `n` around a named center through the generic enumerator,
/// reading and writing the cache when a directory is given.
pub fn batch(center: &str, n: u32, cache_dir: Option<&Path>) -> Result<RootList, BatchError> {
    let c = named_center(center).ok_or_else(|| BatchError::UnknownCenter(center.into()))?;
    let en = enumerator(center, &c)?;
    let norms = critical_norm_table(center, en);
    let pi_norm = *norms.get(n as usize).ok_or(BatchError::BatchTooDeep(n))?;
    let spec = BatchSpec { center: center.into(), batch: n, pi_norm, sinh_sq: critical_sinh_sq(pi_norm) };
    let key = CacheKey::new("L", center, n, 3);
    if let Some(dir) = cache_dir {
        match cache::read_list(dir, &key) {
            Ok(Some(rows)) => {
                let roots: Option<Vec<Root>> = rows.iter().map(|r| r.iter().map(|&x| i32::try_from(x).ok()).collect::<Option<Vec<_>>>().and_then(|v| v.try_into().ok())).collect();
                if let Some(roots) = roots {
                    return Ok(RootList { spec, roots });
                }
            }
            Ok(None) | Err(CacheError::Corrupt { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let roots = en.classes_with_pi_norm(pi_norm);
    if let Some(dir) = cache_dir {
        let rows: Vec<Vec<i64>> = roots.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        cache::write_list(dir, &key, &rows)?;
    }
    Ok(RootList { spec, roots })
}

fn enumerator(center: &str, c: &EVec) -> Result<&'static BoundedEnumerator, BatchError> {
    static C: OnceLock<BoundedEnumerator> = OnceLock::new();
    static P: OnceLock<BoundedEnumerator> = OnceLock::new();
    let cell = match center {
        "c" => &C,
        "pinf" => &P,
        _ => return Err(BatchError::UnknownCenter(center.into())),
    };
    if let Some(e) = cell.get() {
        return Ok(e);
    }
    let e = BoundedEnumerator::new(c)?;
    Ok(cell.get_or_init(|| e))
}

fn critical_norm_table(center: &str, en: &BoundedEnumerator) -> Vec<i64> {
    static C: OnceLock<Vec<i64>> = OnceLock::new();
    static P: OnceLock<Vec<i64>> = OnceLock::new();
    let cell = if center == "c" { &C } else { &P };
    cell.get_or_init(|| en.critical_norms(7)).clone()
}

#[derive(Debug, thiserror::Error)]
pub enum BatchError {
    #[error("unknown center {0}")]
    UnknownCenter(String),
    #[error("batch {0} is beyond the tabulated critical radii")]
    BatchTooDeep(u32),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Cache(#[from] CacheError),
}
