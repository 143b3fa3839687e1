//! Collineations and correlations of P²(F₃) acting on the 26 root labels,
//! with their lifts to isometries of C^{13,1}.

use std::collections::{BTreeSet, HashSet};

use crate::exactnum::CycElem;
use crate::lattice::evec;
use crate::lattice::linalg::{self, CMat};

use super::{herm, incident, AVec, RootLabel, RootTable, TWELVE_GON};

/// A permutation of the 26 labels (indices as in [`RootLabel::index`]).
/// With `swap` set, points go to lines and lines to points; the lift then
/// sends `p ↦ l` and `l ↦ −p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Collineation {
    pub perm: [u8; 26],
    pub swap: bool,
}

impl Collineation {
    pub fn identity() -> Self {
        let mut perm = [0u8; 26];
        for (k, p) in perm.iter_mut().enumerate() {
            *p = k as u8;
        }
        Collineation { perm, swap: false }
    }

    /// From maps on 1-based point and line indices.
    fn from_maps(points: impl Fn(u8) -> u8, lines: impl Fn(u8) -> u8, swap: bool) -> Self {
        let mut perm = [0u8; 26];
        for i in 1..=13u8 {
            let (pi, li) = (points(i), lines(i));
            perm[RootLabel::P(i).index()] =
                if swap { RootLabel::L(pi) } else { RootLabel::P(pi) }.index() as u8;
            perm[RootLabel::L(i).index()] =
                if swap { RootLabel::P(li) } else { RootLabel::L(li) }.index() as u8;
        }
        Collineation { perm, swap }
    }

    /// `i ↦ i+1` on points and lines.
    pub fn shift() -> Self {
        Self::from_maps(|i| i % 13 + 1, |j| j % 13 + 1, false)
    }

    /// `i ↦ 3i` on points and lines (indices mod 13, with 13 for 0).
    pub fn triple() -> Self {
        let f = |i: u8| ((3 * i as u32 - 1) % 13 + 1) as u8;
        Self::from_maps(f, f, false)
    }

    /// `p_i ↦ l_{−i}`, `l_j ↦ −p_{−j}`.
    pub fn duality() -> Self {
        let f = |i: u8| ((26 - i as u32 - 1) % 13 + 1) as u8;
        Self::from_maps(f, f, true)
    }

    pub fn apply(&self, l: RootLabel) -> RootLabel {
        RootLabel::from_index(self.perm[l.index()] as usize)
    }

    /// Sign of the lift on the root `l`.
    pub fn sign(&self, l: RootLabel) -> i64 {
        if self.swap && !l.is_point() {
            -1
        } else {
            1
        }
    }

    /// `self ∘ other` on labels.
    pub fn compose(&self, other: &Collineation) -> Collineation {
        let mut perm = [0u8; 26];
        for k in 0..26 {
            perm[k] = self.perm[other.perm[k] as usize];
        }
        Collineation { perm, swap: self.swap ^ other.swap }
    }

    pub fn inverse(&self) -> Collineation {
        let mut perm = [0u8; 26];
        for k in 0..26 {
            perm[self.perm[k] as usize] = k as u8;
        }
        Collineation { perm, swap: self.swap }
    }

    /// Incidence is preserved (point-to-point) or transported (swap).
    pub fn preserves_incidence(&self) -> bool {
        for i in 1..=13u8 {
            for j in 1..=13u8 {
                let a = self.apply(RootLabel::P(i));
                let b = self.apply(RootLabel::L(j));
                let inc = match (a, b) {
                    (RootLabel::P(x), RootLabel::L(y)) | (RootLabel::L(y), RootLabel::P(x)) => incident(x, y),
                    _ => return false,
                };
                if inc != incident(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// The signed images of all roots have the Gram matrix of the roots,
    /// so a unique linear isometry realizing them exists.
    pub fn gram_compatible(&self, roots: &RootTable) -> bool {
        let lor = super::lorentz();
        let all = RootLabel::all();
        for &x in &all {
            for &y in &all {
                let gx = evec::scale(crate::exactnum::EisInt::from_int(self.sign(x)), roots.get(self.apply(x)));
                let gy = evec::scale(crate::exactnum::EisInt::from_int(self.sign(y)), roots.get(self.apply(y)));
                if evec::herm_diag(&gx, &gy, &lor) != evec::herm_diag(roots.get(x), roots.get(y), &lor) {
                    return false;
                }
            }
        }
        true
    }
}

/// L₃(3):2 on the root labels.
pub struct CollineationGroup {
    pub elements: Vec<Collineation>,
}

/// The line through two distinct points, 1-based.
fn join(a: u8, b: u8) -> u8 {
    (1..=13).find(|&l| incident(a, l) && incident(b, l)).unwrap()
}

impl CollineationGroup {
    /// All incidence-preserving permutations by backtracking over point
    /// images, then their composites with the duality.
    pub fn build() -> Self {
        let mut col = Vec::new();
        let mut img = [0u8; 14];
        let mut used = [false; 14];
        search(1, &mut img, &mut used, &mut col);
        let d = Collineation::duality();
        let swapped: Vec<Collineation> = col.iter().map(|g| g.compose(&d)).collect();
        let mut elements = col;
        elements.extend(swapped);
        elements.sort();
        CollineationGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Collineation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Closure of the elements under composition stays inside the set.
    pub fn is_closed_under(&self, gens: &[Collineation]) -> bool {
        self.elements.iter().all(|a| gens.iter().all(|g| self.contains(&a.compose(g))))
    }

    /// Closure of `gens` by breadth-first search.
    pub fn generated_by(gens: &[Collineation]) -> Vec<Collineation> {
        let mut seen: HashSet<Collineation> = HashSet::new();
        let id = Collineation::identity();
        seen.insert(id);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = g.compose(&x);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        let mut v: Vec<_> = seen.into_iter().collect();
        v.sort();
        v
    }

    /// Setwise stabilizer of the 12-gon labels.
    pub fn d24(&self) -> D24 {
        let gon: BTreeSet<RootLabel> = TWELVE_GON.iter().copied().collect();
        let elements = self
            .elements
            .iter()
            .filter(|g| TWELVE_GON.iter().all(|&l| gon.contains(&g.apply(l))))
            .copied()
            .collect();
        D24 { elements }
    }
}

fn search(i: u8, img: &mut [u8; 14], used: &mut [bool; 14], out: &mut Vec<Collineation>) {
    if i == 14 {
        let pts = *img;
        let lines = |l: u8| {
            let on: Vec<u8> = (1..=13).filter(|&p| incident(p, l)).collect();
            join(pts[on[0] as usize], pts[on[1] as usize])
        };
        out.push(Collineation::from_maps(|p| pts[p as usize], lines, false));
        return;
    }
    for cand in 1..=13u8 {
        if used[cand as usize] {
            continue;
        }
        img[i as usize] = cand;
        // every triple among the assigned points keeps its collinearity
        let ok = (1..i).all(|a| {
            (a + 1..i).all(|b| {
                let on = incident(i, join(a, b));
                on == incident(cand, join(img[a as usize], img[b as usize]))
            })
        });
        if ok {
            used[cand as usize] = true;
            search(i + 1, img, used, out);
            used[cand as usize] = false;
        }
    }
}

/// The dihedral stabilizer of the 12-gon.
pub struct D24 {
    pub elements: Vec<Collineation>,
}

impl D24 {
    /// Permutation of 12-gon positions induced by `g`.
    pub fn positions(g: &Collineation) -> [usize; 12] {
        let mut out = [0; 12];
        for (j, &l) in TWELVE_GON.iter().enumerate() {
            let im = g.apply(l);
            out[j] = TWELVE_GON.iter().position(|&x| x == im).expect("stabilizer element");
        }
        out
    }

    /// Every element maps consecutive vertices to consecutive vertices.
    pub fn acts_dihedrally(&self) -> bool {
        self.elements.iter().all(|g| {
            let p = Self::positions(g);
            (0..12).all(|j| {
                let d = (p[(j + 1) % 12] + 12 - p[j]) % 12;
                d == 1 || d == 11
            })
        })
    }

    pub fn faithful_and_transitive(&self) -> bool {
        let imgs: HashSet<[usize; 12]> = self.elements.iter().map(Self::positions).collect();
        let orbit: HashSet<usize> = self.elements.iter().map(|g| Self::positions(g)[0]).collect();
        imgs.len() == self.elements.len() && orbit.len() == 12
    }
}

/// Exact matrix lifts of label permutations.
pub struct Lifter {
    basis_labels: Vec<RootLabel>,
    inv: CMat,
}

impl Lifter {
    /// Picks 14 independent roots greedily and inverts their column matrix.
    pub fn new(roots: &RootTable) -> Self {
        let mut basis_labels = Vec::new();
        let mut cols: Vec<AVec> = Vec::new();
        for l in RootLabel::all() {
            let mut trial = cols.clone();
            trial.push(roots.cyc(l));
            if linalg::rank(&trial) == trial.len() {
                cols = trial;
                basis_labels.push(l);
            }
            if cols.len() == 14 {
                break;
            }
        }
        let inv = linalg::inverse(&linalg::transpose(&cols)).expect("independent roots");
        Lifter { basis_labels, inv }
    }

    /// `M` with `M·r = sign·g(r)` on the chosen basis roots.
    pub fn lift(&self, g: &Collineation, roots: &RootTable) -> CMat {
        let imgs: Vec<AVec> = self
            .basis_labels
            .iter()
            .map(|&l| {
                let s = CycElem::int(g.sign(l));
                roots.cyc(g.apply(l)).iter().map(|x| &s * x).collect()
            })
            .collect();
        linalg::mat_mul(&linalg::transpose(&imgs), &self.inv)
    }

    /// The lift maps every one of the 26 roots to its signed image.
    pub fn verify(&self, m: &CMat, g: &Collineation, roots: &RootTable) -> bool {
        RootLabel::all().iter().all(|&l| {
            let im = linalg::mat_vec(m, &roots.cyc(l));
            let want: AVec = roots.cyc(g.apply(l)).iter().map(|x| &CycElem::int(g.sign(l)) * x).collect();
            im == want
        })
    }
}

/// `v` and `w` span the same complex line; returns `λ` with `w = λv`.
pub fn scalar_multiple(v: &[CycElem], w: &[CycElem]) -> Option<CycElem> {
    let k = v.iter().position(|x| !x.is_zero())?;
    let lam = &w[k] / &v[k];
    v.iter().zip(w).all(|(a, b)| &(&lam * a) == b).then_some(lam)
}

/// Form check `⟨Mx,My⟩ = ⟨x,y⟩` on the standard basis.
pub fn preserves_form(m: &CMat) -> bool {
    let cols: Vec<AVec> = linalg::transpose(m);
    (0..14).all(|i| {
        (0..14).all(|j| {
            let want = if i != j { CycElem::zero() } else if i == 0 { CycElem::int(-1) } else { CycElem::one() };
            herm(&cols[i], &cols[j]) == want
        })
    })
}
