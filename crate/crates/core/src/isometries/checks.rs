//! Exact identities among words in the sixteen triflections.

use std::collections::{BTreeSet, VecDeque};

use serde_json::json;

use crate::exactnum::{CycElem, EisInt};
use crate::lattice::evec::{self, EVec};
use crate::model::{self, Model, A4_ROOTS, TWELVE_GON};
use crate::report::{Recorder, SuiteReport};

use super::word::Word;
use super::{eval_word, plane_action, IsometryError, LatticeMap, Reflections, E_PI_I_3};

pub const A4_NAMES: [&str; 4] = ["SA", "SB", "SC", "SD"];

pub fn s_name(j: i64) -> String {
    format!("S{}", j.rem_euclid(12))
}

/// `S_j S_{j+1} ⋯ S_{j+10}`
pub fn increasing(j: i64) -> Word {
    Word::syms(&(0..11).map(|k| s_name(j + k)).collect::<Vec<_>>())
}

/// `S_j S_{j−1} ⋯ S_{j−10}`
pub fn decreasing(j: i64) -> Word {
    Word::syms(&(0..11).map(|k| s_name(j - k)).collect::<Vec<_>>())
}

/// `S_a S_{a+1} ⋯ S_b` for `a ≤ b`, or decreasing for `a > b`.
pub fn run(a: i64, b: i64) -> Word {
    let idx: Vec<i64> = if a <= b { (a..=b).collect() } else { (b..=a).rev().collect() };
    Word::syms(&idx.iter().map(|&j| s_name(j)).collect::<Vec<_>>())
}

/// `S₁⋯S₁₀ S₁₁² S₁₀⋯S₁`
pub fn id_word() -> Word {
    run(1, 10).concat(&Word::sym("S11").pow(2)).concat(&run(10, 1))
}

pub fn delta_a4() -> Word {
    Word::delta(A4_NAMES.iter().map(|n| Word::sym(n)).collect())
}

pub fn delta_s1_s11() -> Word {
    Word::delta((1..=11).map(|j| Word::sym(&s_name(j))).collect())
}

/// `S₁⋯S₁₁ · Δ(S_A,…,S_D)⁻¹`
pub fn w1() -> Word {
    run(1, 11).concat(&delta_a4().inverse())
}

/// `(S₁⋯S₁₁)⁶ · Δ(S₁,…,S₁₁)⁻¹`
pub fn w2() -> Word {
    run(1, 11).pow(6).concat(&delta_s1_s11().inverse())
}

fn ev(w: &Word) -> LatticeMap {
    eval_word(w).expect("named triflections resolve")
}

/// How two maps agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Exact,
    UpToUnit(EisInt),
    Different,
}

impl Agreement {
    pub fn of(a: &LatticeMap, b: &LatticeMap) -> Agreement {
        if a == b {
            Agreement::Exact
        } else if let Some(u) = a.unit_multiple_of(b) {
            Agreement::UpToUnit(u)
        } else {
            Agreement::Different
        }
    }

    pub fn holds(self) -> bool {
        self != Agreement::Different
    }

    pub fn label(self) -> String {
        match self {
            Agreement::Exact => "exact".into(),
            Agreement::UpToUnit(u) => format!("up to scalar {u}"),
            Agreement::Different => "different".into(),
        }
    }
}

fn ratio_json(w: &LatticeMap) -> (Option<CycElem>, serde_json::Value) {
    match plane_action(w) {
        Some(p) => (Some(p.ratio.clone()), json!({"ratio": p.ratio.to_compact(), "approx": p.ratio.approx()})),
        None => (None, json!("does not preserve the plane of rho and tau")),
    }
}

/// Image of every basis vector of `L_DM` is itself; image of each simple
/// A₄ root is `u` times itself.
fn acts_as(w: &LatticeMap, on_ldm: EisInt, on_a4: EisInt) -> (bool, bool) {
    let m = Model::get();
    let ldm = evec::eis_basis(&m.cbasis.l_dm_generators());
    let fix = ldm.iter().all(|v| w.apply(v) == evec::scale(on_ldm, v));
    let a4 = A4_ROOTS.iter().all(|&l| {
        let v = m.roots.get(l);
        w.apply(v) == evec::scale(on_a4, v)
    });
    (fix, a4)
}

pub fn verify_special_words() -> SuiteReport {
    const A: &str = "special-words-in-triflections";
    let mut rec = Recorder::new("special_words", A);
    let z12 = CycElem::zeta12();

    for (name, f) in [("increasing", increasing as fn(i64) -> Word), ("decreasing", decreasing)] {
        let base = ev(&f(0));
        let levels: Vec<Agreement> = (0..12).map(|j| Agreement::of(&ev(&f(j)), &base)).collect();
        let all_exact = levels.iter().all(|&l| l == Agreement::Exact);
        rec.check(
            &format!("{name}_products_independent_of_j"),
            A,
            levels.iter().all(|l| l.holds()),
            json!({"level": if all_exact { "exact" } else { "projective" },
                   "per_j": levels.iter().map(|l| l.label()).collect::<Vec<_>>()}),
        );
        let (r, w) = ratio_json(&base);
        rec.check(&format!("{name}_rotation_pi_over_6"), A, r.as_ref() == Some(&z12), w);
    }
    let da4 = ev(&delta_a4());
    let (r, w) = ratio_json(&da4);
    rec.check("delta_a4_rotation_pi_over_6", A, r.as_ref() == Some(&z12), w);

    let id = ev(&id_word());
    let x = LatticeMap::scalar(E_PI_I_3).mul(&id);
    let (fix, a4) = acts_as(&x, EisInt::ONE, E_PI_I_3);
    rec.check("scaled_id_trivial_on_ldm", A, fix, json!(null));
    rec.check("scaled_id_scalar_on_complement", A, a4, json!({"scalar": "1+w"}));
    let d2 = da4.mul(&da4);
    let (fix2, a42) = acts_as(&d2, EisInt::ONE, E_PI_I_3);
    rec.check("delta_a4_squared_trivial_on_ldm", A, fix2, json!(null));
    rec.check("delta_a4_squared_scalar_on_complement", A, a42, json!({"scalar": "1+w"}));
    let m = Model::get();
    let gon_fixed = TWELVE_GON.iter().all(|&l| {
        let v = m.roots.get(l);
        d2.apply(v) == *v && x.apply(v) == *v
    });
    rec.check("twelve_gon_roots_fixed", A, gon_fixed, json!(null));
    rec.check(
        "delta_a4_squared_equals_scaled_id",
        A,
        d2 == x,
        json!({"relation": Agreement::of(&d2, &id).label()}),
    );

    let (r, w) = ratio_json(&ev(&delta_s1_s11()));
    rec.check("delta_s1_s11_rotation_pi", A, r == Some(CycElem::int(-1)), w);

    let i6 = ev(&run(1, 11).pow(6));
    let d6 = ev(&run(11, 1).pow(6));
    rec.check("sixth_powers_equal", A, i6 == d6, json!({"relation": Agreement::of(&i6, &d6).label()}));
    rec.finish()
}

/// Classes modulo scalars of the group generated by `gens`, up to `cap`.
pub fn projective_closure(gens: &[LatticeMap], cap: usize) -> usize {
    let mut seen: BTreeSet<LatticeMap> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = LatticeMap::identity().projective_canonical();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g).projective_canonical();
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return seen.len();
                }
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

pub fn verify_sigma_stabilizer() -> SuiteReport {
    const A: &str = "stabilizer-of-sigma";
    let mut rec = Recorder::new("sigma_stabilizer", A);
    let g1 = ev(&w1());
    let g2 = ev(&w2());
    let o1 = g1.projective_order(48);
    let o2 = g2.projective_order(48);
    rec.check("first_word_order_12", A, o1 == Some(12), json!({"order": o1}));
    rec.check("second_word_order_2", A, o2 == Some(2), json!({"order": o2}));
    let conj = g2.mul(&g1).mul(&g2.inverse());
    let inv = g1.inverse();
    let ag = Agreement::of(&conj, &inv);
    rec.check("conjugation_inverts", A, ag.holds(), json!({"relation": ag.label()}));
    for (name, g) in [("first", &g1), ("second", &g2)] {
        let ok = plane_action(g).is_some_and(|p| p.alpha == p.beta);
        rec.check(&format!("{name}_word_scalar_on_rho_tau_line"), A, ok, json!(null));
    }
    let order = projective_closure(&[g1, g2], 48);
    rec.check("dihedral_group_order_24", A, order == 24, json!({"order": order}));
    rec.finish()
}

/// `W X W⁻¹` for each of the sixteen triflections, compared with the
/// expected image.
fn conjugation_table(w: &LatticeMap, target: impl Fn(usize) -> usize) -> Vec<(usize, usize, bool)> {
    let r = Reflections::get();
    let all: Vec<&LatticeMap> = r.s.iter().chain(&r.a).collect();
    let winv = w.inverse();
    (0..16)
        .map(|k| {
            let c = w.mul(all[k]).mul(&winv);
            let t = target(k);
            (k, t, c == *all[t])
        })
        .collect()
}

fn node_name(k: usize) -> String {
    if k < 12 {
        format!("S{k}")
    } else {
        A4_NAMES[k - 12].to_string()
    }
}

pub fn verify_conjugation_tables() -> SuiteReport {
    const A: &str = "diagram-automorphisms";
    let mut rec = Recorder::new("conjugation_tables", A);
    let first = conjugation_table(&ev(&w1()), |k| if k < 12 { (k + 1) % 12 } else { 12 + (15 - k) });
    let second = conjugation_table(&ev(&w2()), |k| if k < 12 { (18 - k) % 12 } else { k });
    for (name, table) in [("first", first), ("second", second)] {
        for (k, t, ok) in table {
            rec.check(
                &format!("{name}_word_{}_to_{}", node_name(k), node_name(t)),
                A,
                ok,
                json!(null),
            );
        }
    }
    rec.finish()
}

/// Relation between the triflections in two roots with product 0 or ±θ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidKind {
    Commute,
    Braid,
}

pub fn braid_relation_check(a: &EVec, b: &EVec) -> Result<(BraidKind, bool), IsometryError> {
    let p = model::herm_e(a, b);
    let sa = LatticeMap::triflection(a)?;
    let sb = LatticeMap::triflection(b)?;
    if p.is_zero() {
        Ok((BraidKind::Commute, sa.mul(&sb) == sb.mul(&sa)))
    } else if p == EisInt::THETA || p == -EisInt::THETA {
        Ok((BraidKind::Braid, sa.mul(&sb).mul(&sa) == sb.mul(&sa).mul(&sb)))
    } else {
        Err(IsometryError::NotRoot(format!("pairing {p} is neither 0 nor ±θ")))
    }
}

/// Artin relations of the Ã₁₁A₄ diagram among the sixteen triflections.
pub fn verify_braid_relations() -> SuiteReport {
    const A: &str = "artin-relations";
    let mut rec = Recorder::new("braid_relations", A);
    let m = Model::get();
    let roots: Vec<&EVec> = TWELVE_GON.iter().chain(&A4_ROOTS).map(|&l| m.roots.get(l)).collect();
    let adjacent = |i: usize, j: usize| {
        if i < 12 && j < 12 {
            (i + 1) % 12 == j || (j + 1) % 12 == i
        } else if i >= 12 && j >= 12 {
            i.abs_diff(j) == 1
        } else {
            false
        }
    };
    let mut bad = Vec::new();
    for i in 0..16 {
        for j in i + 1..16 {
            let want = if adjacent(i, j) { BraidKind::Braid } else { BraidKind::Commute };
            match braid_relation_check(roots[i], roots[j]) {
                Ok((k, true)) if k == want => {}
                other => bad.push(format!("{}-{}: {:?}", node_name(i), node_name(j), other)),
            }
        }
    }
    rec.check("all_120_pairs", A, bad.is_empty(), json!({"failures": bad}));
    let r = Reflections::get();
    let order3 = r.s.iter().chain(&r.a).all(|x| x.pow(3) == LatticeMap::identity() && x.mul(x) != LatticeMap::identity());
    rec.check("triflections_of_order_3", A, order3, json!(null));
    rec.finish()
}
