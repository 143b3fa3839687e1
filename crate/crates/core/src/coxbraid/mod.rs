//! Presentations of braid and orbifold groups as relator data, checked in
//! concrete quotients: symmetric groups, the affine symmetric group and the
//! triflection matrices. Also the deflation computation in `Cox(Ã₁₁)`.

pub mod perm;

#[cfg(test)]
mod tests;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::exactnum::EisInt;
use crate::isometries::word::{parse_word, Group, Word, WordError};
use crate::isometries::{LatticeMap, Reflections, E_PI_I_3};
use crate::lattice::hnf;
use crate::report::{Recorder, SuiteReport};

pub use perm::{cox_generator, AffinePermutation, Perm, WindowError, PERIOD};

/// Which scalar a matrix target may realize for a relator. Permutation
/// targets ignore this and always require the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarClass {
    Any,
    Exactly(EisInt),
}

/// A relator `lhs · rhs⁻¹`, kept as the two sides for readability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub label: String,
    pub lhs: Word,
    pub rhs: Word,
    pub scalar: ScalarClass,
}

impl Relator {
    fn new(label: impl Into<String>, lhs: Word, rhs: Word) -> Relator {
        Relator { label: label.into(), lhs, rhs, scalar: ScalarClass::Any }
    }

    fn exact(mut self, u: EisInt) -> Relator {
        self.scalar = ScalarClass::Exactly(u);
        self
    }

    pub fn word(&self) -> Word {
        self.lhs.concat(&self.rhs.inverse())
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown relator suite {0}")]
    Unknown(String),
}

pub fn g(j: i64) -> String {
    format!("g{}", j.rem_euclid(12))
}

pub const A4_GENS: [&str; 4] = ["gA", "gB", "gC", "gD"];

fn gw(j: i64) -> Word {
    Word::sym(&g(j))
}

/// `g_j g_{j+1} ⋯ g_{j+len−1}`
pub fn increasing_run(j: i64, len: i64) -> Word {
    Word::syms(&(0..len).map(|k| g(j + k)).collect::<Vec<_>>())
}

/// `g_j g_{j−1} ⋯ g_{j−len+1}`
pub fn decreasing_run(j: i64, len: i64) -> Word {
    Word::syms(&(0..len).map(|k| g(j - k)).collect::<Vec<_>>())
}

/// `I_j`, with eleven letters.
pub fn i_word(j: i64) -> Word {
    increasing_run(j, 11)
}

/// `D_j`, with eleven letters.
pub fn d_word(j: i64) -> Word {
    decreasing_run(j, 11)
}

fn conj(w: &Word, x: &Word) -> Word {
    w.concat(x).concat(&w.inverse())
}

fn delta_of(names: &[String]) -> Word {
    Word::delta(names.iter().map(|n| Word::sym(n)).collect())
}

pub fn delta_a4() -> Word {
    delta_of(&A4_GENS.map(String::from))
}

pub fn delta_g1_g11() -> Word {
    delta_of(&(1..=11).map(g).collect::<Vec<_>>())
}

/// Artin relations on a diagram given by its edges.
fn artin(names: &[String], edge: impl Fn(usize, usize) -> bool) -> Vec<Relator> {
    let mut out = Vec::new();
    for a in 0..names.len() {
        for b in a + 1..names.len() {
            let (x, y) = (Word::sym(&names[a]), Word::sym(&names[b]));
            if edge(a, b) {
                out.push(Relator::new(
                    format!("braid {} {}", names[a], names[b]),
                    x.concat(&y).concat(&x),
                    y.concat(&x).concat(&y),
                ));
            } else {
                out.push(Relator::new(format!("commute {} {}", names[a], names[b]), x.concat(&y), y.concat(&x)));
            }
        }
    }
    out
}

fn cyclic_names() -> Vec<String> {
    (0..12).map(g).collect()
}

fn cyclic_edge(a: usize, b: usize) -> bool {
    let d = (b + 12 - a) % 12;
    d == 1 || d == 11
}

/// Artin relations of the 12-cycle `Ã₁₁`: 12 braid and 54 commuting.
pub fn artin_a11() -> Vec<Relator> {
    artin(&cyclic_names(), cyclic_edge)
}

/// Artin relations of `Ã₁₁ ⊔ A₄`.
pub fn artin_a11_a4() -> Vec<Relator> {
    let mut names = cyclic_names();
    names.extend(A4_GENS.iter().map(|s| s.to_string()));
    artin(&names, |a, b| {
        if b < 12 {
            cyclic_edge(a, b)
        } else {
            a >= 12 && b == a + 1
        }
    })
}

fn coxeter_squares(names: &[String]) -> Vec<Relator> {
    names.iter().map(|n| Relator::new(format!("square {n}"), Word::sym(n).pow(2), Word::default())).collect()
}

fn all_equal(prefix: &str, f: impl Fn(i64) -> Word) -> Vec<Relator> {
    (1..12).map(|j| Relator::new(format!("{prefix}0 = {prefix}{j}"), f(0), f(j))).collect()
}

/// Relators of the named suite, with `I_j`, `D_j`, `Δ` written out.
pub fn relator_suite(name: &str) -> Result<Vec<Relator>, SuiteError> {
    let mut out = Vec::new();
    match name {
        // Art(Ã₁₁)
        "artin_a11" => out = artin_a11(),
        // punctured plane with 0 filled in: all D_j coincide
        "decreasing_equal" => {
            out = artin_a11();
            out.extend(all_equal("D", d_word));
        }
        // with ∞ filled in: all I_j coincide
        "increasing_equal" => {
            out = artin_a11();
            out.extend(all_equal("I", i_word));
        }
        // braids on the sphere
        "sphere_braids" => {
            out = artin_a11();
            out.extend(all_equal("D", d_word));
            out.extend(all_equal("I", i_word));
            out.push(Relator::new("I D = 1", i_word(0).concat(&d_word(0)), Word::default()));
        }
        // orbifold group of 12 points on the sphere
        "moduli_space" => {
            out = relator_suite("sphere_braids")?;
            out.push(Relator::new("I^12 = 1", i_word(0).pow(12), Word::default()));
            out.push(Relator::new("D^12 = 1", d_word(0).pow(12), Word::default()));
            out.push(Relator::new("I^6 = D^6", i_word(0).pow(6), d_word(0).pow(6)));
        }
        // stabilizer of the base point near the Deligne–Mostow ball
        "stabilizer" => {
            out = artin_a11_a4();
            out.extend(all_equal("I", i_word));
            out.extend(all_equal("D", d_word));
            let id = i_word(1).concat(&d_word(11));
            out.push(Relator::new("Delta(gA..gD)^2 = I D", delta_a4().pow(2), id).exact(E_PI_I_3));
            out.push(Relator::new("D^6 = I^6", d_word(11).pow(6), i_word(1).pow(6)).exact(EisInt::ONE));
        }
        "stabilizer_conjugations" => {
            for k in 0..12 {
                out.push(Relator::new(format!("I g{k} I^-1 = {}", g(k + 1)), conj(&i_word(1), &gw(k)), gw(k + 1)));
            }
            for k in 0..12 {
                out.push(Relator::new(format!("D g{k} D^-1 = {}", g(k - 1)), conj(&d_word(11), &gw(k)), gw(k - 1)));
            }
            for k in 0..12 {
                out.push(Relator::new(
                    format!("Delta g{k} Delta^-1 = {}", g(12 - k)),
                    conj(&delta_g1_g11(), &gw(k)),
                    gw(12 - k),
                ));
            }
        }
        // the two words acting on the Ã₁₁A₄ diagram
        "diagram_automorphisms" => {
            let w1 = increasing_run(1, 11).concat(&delta_a4().inverse());
            let w2 = increasing_run(1, 11).pow(6).concat(&delta_g1_g11().inverse());
            for k in 0..12 {
                out.push(Relator::new(format!("W1 g{k} W1^-1 = {}", g(k + 1)), conj(&w1, &gw(k)), gw(k + 1)));
            }
            for (x, y) in A4_GENS.iter().zip(A4_GENS.iter().rev()) {
                out.push(Relator::new(format!("W1 {x} W1^-1 = {y}"), conj(&w1, &Word::sym(x)), Word::sym(y)));
            }
            for k in 0..12 {
                out.push(Relator::new(format!("W2 g{k} W2^-1 = {}", g(6 - k)), conj(&w2, &gw(k)), gw(6 - k)));
            }
            for x in A4_GENS {
                out.push(Relator::new(format!("W2 {x} W2^-1 = {x}"), conj(&w2, &Word::sym(x)), Word::sym(x)));
            }
        }
        // how I_j and D_j conjugate the generators away from j
        "increasing_decreasing" => {
            for j in 0..12i64 {
                for k in 0..12i64 {
                    if k != (j - 1).rem_euclid(12) && k != (j - 2).rem_euclid(12) {
                        out.push(Relator::new(
                            format!("I{j} g{k} I{j}^-1 = {}", g(k + 1)),
                            conj(&i_word(j), &gw(k)),
                            gw(k + 1),
                        ));
                    }
                    if k != (j + 1).rem_euclid(12) && k != (j + 2).rem_euclid(12) {
                        out.push(Relator::new(
                            format!("D{j} g{k} D{j}^-1 = {}", g(k - 1)),
                            conj(&d_word(j), &gw(k)),
                            gw(k - 1),
                        ));
                    }
                }
            }
        }
        // Cox(Ã₁₁): squares plus the Artin relations
        "coxeter_a11" => {
            out = coxeter_squares(&cyclic_names());
            out.extend(artin_a11());
        }
        _ => return Err(SuiteError::Unknown(name.into())),
    }
    Ok(out)
}

pub const SUITES: [&str; 10] = [
    "artin_a11",
    "decreasing_equal",
    "increasing_equal",
    "sphere_braids",
    "moduli_space",
    "stabilizer",
    "stabilizer_conjugations",
    "diagram_automorphisms",
    "increasing_decreasing",
    "coxeter_a11",
];

/// Text form: one relator word per line.
pub fn suite_text(rs: &[Relator]) -> String {
    rs.iter().map(|r| format!("{r}\n")).collect()
}

pub fn parse_suite_text(s: &str) -> Result<Vec<Word>, WordError> {
    s.lines().filter(|l| !l.trim().is_empty()).map(parse_word).collect()
}

/// Images of the abstract generators.
#[derive(Clone, Debug)]
pub enum Assignment {
    Permutations(BTreeMap<String, Perm>),
    Affine(BTreeMap<String, AffinePermutation>),
    /// `g_j ↦ S_j`, `g_X ↦ S_X`
    Triflections,
}

impl Assignment {
    /// `g_i ↦ (i, i+1 mod 12)` and, on the five extra points `12..17`,
    /// `g_A..g_D ↦ (12 13), (13 14), (14 15), (15 16)`: the quotient
    /// `S₁₂ × S₅`.
    pub fn transpositions() -> Assignment {
        let n = 17;
        let mut m = BTreeMap::new();
        for i in 0..12 {
            m.insert(g(i as i64), Perm::transposition(n, i, (i + 1) % 12));
        }
        for (k, x) in A4_GENS.iter().enumerate() {
            m.insert(x.to_string(), Perm::transposition(n, 12 + k, 13 + k));
        }
        Assignment::Permutations(m)
    }

    pub fn affine() -> Assignment {
        Assignment::Affine((0..12).map(|i| (g(i as i64), cox_generator(i))).collect())
    }

    pub fn name(&self) -> &'static str {
        match self {
            Assignment::Permutations(_) => "permutations",
            Assignment::Affine(_) => "affine",
            Assignment::Triflections => "triflections",
        }
    }

    fn covers(&self, w: &Word) -> bool {
        match self {
            Assignment::Permutations(m) => w.letters().iter().all(|(s, _)| m.contains_key(s)),
            Assignment::Affine(m) => w.letters().iter().all(|(s, _)| m.contains_key(s)),
            Assignment::Triflections => true,
        }
    }

    fn evaluate(&self, w: &Word) -> Result<Outcome, WordError> {
        Ok(match self {
            Assignment::Permutations(m) => {
                let p: Perm = w.eval(&|s| m.get(s).cloned())?;
                if p.is_identity() {
                    Outcome::Identity
                } else {
                    Outcome::Other
                }
            }
            Assignment::Affine(m) => {
                let p: AffinePermutation = w.eval(&|s| m.get(s).cloned())?;
                if p == AffinePermutation::identity() {
                    Outcome::Identity
                } else {
                    Outcome::Other
                }
            }
            Assignment::Triflections => {
                let r = Reflections::get();
                let p: LatticeMap = w.eval(&|s| r.resolve(s))?;
                match p.as_scalar() {
                    Some(u) if u == EisInt::ONE => Outcome::Identity,
                    Some(u) => Outcome::Scalar(u),
                    None => Outcome::Other,
                }
            }
        })
    }
}

/// Value of a relator word in a target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Identity,
    Scalar(EisInt),
    Other,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Identity => f.write_str("identity"),
            Outcome::Scalar(z) => write!(f, "scalar {z}"),
            Outcome::Other => f.write_str("not scalar"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelatorResult {
    pub label: String,
    pub outcome: Outcome,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct RelatorReport {
    pub results: Vec<RelatorResult>,
}

impl RelatorReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.ok)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.results.iter().filter(|r| !r.ok).map(|r| r.label.as_str()).collect()
    }

    pub fn get(&self, label: &str) -> Option<&RelatorResult> {
        self.results.iter().find(|r| r.label == label)
    }

    /// Relators whose image is a nontrivial scalar, with the scalar.
    pub fn scalars(&self) -> Vec<(String, EisInt)> {
        self.results
            .iter()
            .filter_map(|r| match r.outcome {
                Outcome::Scalar(u) => Some((r.label.clone(), u)),
                _ => None,
            })
            .collect()
    }

    pub fn witness(&self) -> serde_json::Value {
        let scalars: Vec<_> = self.scalars().into_iter().map(|(l, u)| json!({"relator": l, "scalar": u.to_string()})).collect();
        json!({"relators": self.results.len(), "failing": self.failing(), "scalars": scalars})
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("assignment does not cover relator {0}")]
    Uncovered(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// Evaluates every relator in the target, in parallel.
pub fn check_relators(rs: &[Relator], a: &Assignment) -> Result<RelatorReport, CheckError> {
    for r in rs {
        if !a.covers(&r.word()) {
            return Err(CheckError::Uncovered(r.label.clone()));
        }
    }
    let matrices = matches!(a, Assignment::Triflections);
    let results = rs
        .par_iter()
        .map(|r| {
            let outcome = a.evaluate(&r.word())?;
            let scalar = if matrices { r.scalar } else { ScalarClass::Any };
            let ok = match (outcome, scalar) {
                (Outcome::Identity, ScalarClass::Any) => true,
                (Outcome::Identity, ScalarClass::Exactly(u)) => u == EisInt::ONE,
                (Outcome::Scalar(_), ScalarClass::Any) => true,
                (Outcome::Scalar(v), ScalarClass::Exactly(u)) => u == v,
                (Outcome::Other, _) => false,
            };
            Ok(RelatorResult { label: r.label.clone(), outcome, ok })
        })
        .collect::<Result<Vec<_>, WordError>>()?;
    Ok(RelatorReport { results })
}

/// `δ = g₀g₁⋯g₁₀ (g₁g₂⋯g₁₁)⁻¹`
pub fn deflation_word() -> Word {
    increasing_run(0, 11).concat(&increasing_run(1, 11).inverse())
}

/// `δ` based at `k`: every index shifted by `k`.
pub fn deflation_word_at(k: i64) -> Word {
    increasing_run(k, 11).concat(&increasing_run(k + 1, 11).inverse())
}

fn affine_image(w: &Word) -> AffinePermutation {
    w.eval(&|s| s.strip_prefix('g').and_then(|i| i.parse::<usize>().ok()).filter(|&i| i < 12).map(cox_generator))
        .expect("affine generators resolve")
}

/// Z-span of the translation vectors of the normal closure of `t` in the
/// affine group, grown by conjugating a lattice basis with the generators
/// until the HNF no longer changes. Returns the HNF basis.
pub fn conjugate_translation_span(t: &AffinePermutation) -> Vec<Vec<BigInt>> {
    let gens: Vec<AffinePermutation> = (0..12).map(cox_generator).collect();
    let to_row = |p: &AffinePermutation| -> Vec<BigInt> {
        p.translation_part().expect("conjugate of a translation").iter().map(|&x| BigInt::from(x)).collect()
    };
    let mut basis: Vec<Vec<BigInt>> = hnf::hnf(&vec![to_row(t)]).basis().to_vec();
    loop {
        let mut rows = basis.clone();
        for b in &basis {
            let v: Vec<i64> = b.iter().map(|x| i64::try_from(x).expect("small translation")).collect();
            let tb = AffinePermutation::translation(v.try_into().expect("12 entries")).expect("sum zero");
            for s in &gens {
                rows.push(to_row(&s.compose(&tb).compose(&s.invert())));
            }
        }
        let next = hnf::hnf(&rows).basis().to_vec();
        if next == basis {
            return basis;
        }
        basis = next;
    }
}

/// Index of a full-rank sublattice of the sum-zero lattice `{v ∈ Z¹² : Σv = 0}`,
/// as the gcd of the maximal minors divided by that of the whole lattice.
fn index_in_sum_zero(basis: &[Vec<BigInt>]) -> Option<BigInt> {
    if basis.len() != PERIOD - 1 {
        return None;
    }
    // drop the last coordinate: the projection is an isomorphism of the
    // sum-zero lattice onto Z¹¹
    let sq: hnf::ZMat = basis.iter().map(|r| r[..PERIOD - 1].to_vec()).collect();
    Some(num_traits::Signed::abs(&hnf::det(&sq)))
}

/// Outcome of the three deflation claims.
pub fn deflation_check() -> SuiteReport {
    let mut rec = Recorder::new("deflation", "deflation");
    let a = "deflation";

    let delta = affine_image(&deflation_word());
    let t = delta.translation_part();
    let nontrivial = t.is_some_and(|v| v.iter().any(|&x| x != 0));
    rec.check("affine_image_is_nonidentity_translation", a, nontrivial, json!({"window": delta.window(), "translation": t}));

    let shifts_ok = (0..12).all(|k| {
        let tk = affine_image(&deflation_word_at(k)).translation_part();
        match (t, tk) {
            (Some(v), Some(w)) => (0..PERIOD).all(|i| w[(i + k as usize) % PERIOD] == v[i]),
            _ => false,
        }
    });
    rec.check("rotated_base_points_shift_translation", a, shifts_ok, serde_json::Value::Null);

    let span = if nontrivial { conjugate_translation_span(&delta) } else { Vec::new() };
    let index = index_in_sum_zero(&span);
    rec.check(
        "conjugate_translations_rank_11",
        a,
        span.len() == PERIOD - 1,
        json!({"rank": span.len(), "index_in_sum_zero_lattice": index.as_ref().map(|x| x.to_string())}),
    );
    rec.check(
        "normal_closure_is_translation_subgroup",
        a,
        index == Some(BigInt::from(1)),
        json!({"index": index.map(|x| x.to_string())}),
    );

    let s12 = Assignment::transpositions();
    let cox = check_relators(&relator_suite("coxeter_a11").expect("known suite"), &s12).expect("covered");
    rec.check("transpositions_satisfy_coxeter_relations", a, cox.all_pass(), cox.witness());
    let kill = s12.evaluate(&deflation_word()).expect("covered") == Outcome::Identity;
    rec.check("transpositions_kill_deflation_word", a, kill, serde_json::Value::Null);
    rec.finish()
}

/// The claim each relator suite supports.
pub fn suite_anchor(name: &str) -> &'static str {
    match name {
        "artin_a11" | "decreasing_equal" | "increasing_equal" | "sphere_braids" => "braid-group-presentations",
        "moduli_space" => "moduli-space-presentation",
        "stabilizer" | "stabilizer_conjugations" => "stabilizer-presentation",
        "diagram_automorphisms" => "new-relations-in-G",
        "increasing_decreasing" => "increasing-decreasing-conjugation",
        "coxeter_a11" => "affine-coxeter-model",
        _ => "unknown",
    }
}

/// Which (suite, target) pairs the presentations imply are homomorphisms.
pub fn planned_checks() -> Vec<(&'static str, Assignment)> {
    let mut out = Vec::new();
    for s in ["artin_a11", "decreasing_equal", "increasing_equal", "sphere_braids", "moduli_space"] {
        out.push((s, Assignment::transpositions()));
    }
    for s in ["stabilizer", "stabilizer_conjugations", "diagram_automorphisms", "increasing_decreasing"] {
        out.push((s, Assignment::transpositions()));
    }
    for s in ["artin_a11", "coxeter_a11", "increasing_decreasing"] {
        out.push((s, Assignment::affine()));
    }
    for s in ["artin_a11", "stabilizer", "stabilizer_conjugations", "diagram_automorphisms", "increasing_decreasing"] {
        out.push((s, Assignment::Triflections));
    }
    out
}

/// Every planned relator check, plus the literal twelve-letter reading of
/// the moduli-space products, which must fail in `S₁₂`.
pub fn verify_presentations() -> SuiteReport {
    let mut rec = Recorder::new("presentations", "stabilizer-presentation");
    for (s, a) in planned_checks() {
        let rs = relator_suite(s).expect("known suite");
        let id = format!("{s}_in_{}", a.name());
        match check_relators(&rs, &a) {
            Ok(r) => {
                rec.check(&id, suite_anchor(s), r.all_pass(), r.witness());
                if s == "stabilizer" && matches!(a, Assignment::Triflections) {
                    let four = r.get("Delta(gA..gD)^2 = I D").map(|x| x.outcome);
                    let five = r.get("D^6 = I^6").map(|x| x.outcome);
                    rec.check(
                        "product_relation_scalar_e_pi_i_3",
                        "stabilizer-presentation",
                        four == Some(Outcome::Scalar(E_PI_I_3)),
                        json!({"outcome": four.map_or("missing".into(), |o| o.to_string())}),
                    );
                    rec.check(
                        "sixth_power_relation_exact",
                        "stabilizer-presentation",
                        five == Some(Outcome::Identity),
                        json!({"outcome": five.map_or("missing".into(), |o| o.to_string())}),
                    );
                }
            }
            Err(e) => {
                rec.check(&id, suite_anchor(s), false, json!(e.to_string()));
            }
        }
    }

    // I_j with twelve letters: consecutive ones differ by a transposition
    let s12 = Assignment::transpositions();
    let literal: Vec<Relator> =
        (1..12).map(|j| Relator::new(format!("I0 = I{j} (12 letters)"), increasing_run(0, 12), increasing_run(j, 12))).collect();
    let r = check_relators(&literal, &s12).expect("covered");
    let failing = r.failing().len();
    rec.check(
        "twelve_letter_products_differ_in_s12",
        "moduli-space-presentation",
        failing == literal.len(),
        json!({"failing": failing, "of": literal.len()}),
    );
    rec.finish()
}
