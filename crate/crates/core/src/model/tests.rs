use super::*;
use crate::lattice::linalg;
use crate::lattice::{signature, theta_dual_equals_self, GramLattice, HermitianGram};

fn m() -> &'static Model {
    Model::get()
}

fn q(p: i64, qd: i64, r: i64, s: i64) -> CycElem {
    CycElem::real(RealQuad::frac(p, qd, r, s))
}

#[test]
fn root_products() {
    let md = m();
    let theta = CycElem::theta();
    let p = |i| md.root(RootLabel::P(i));
    let l = |j| md.root(RootLabel::L(j));
    assert_eq!(herm(&p(2), &l(1)), theta);
    assert_eq!(herm(&p(2), &l(2)), theta);
    assert_eq!(herm(&p(3), &l(2)), theta);
    assert_eq!(herm(&l(1), &l(1)), CycElem::int(3));
    assert_eq!(herm(&p(5), &l(1)), CycElem::zero());
    for a in RootLabel::all() {
        for b in RootLabel::all() {
            let z = herm(&md.root(a), &md.root(b));
            let want = match (a, b) {
                _ if a == b => CycElem::int(3),
                (RootLabel::P(i), RootLabel::L(j)) if incident(i, j) => theta.clone(),
                (RootLabel::L(j), RootLabel::P(i)) if incident(i, j) => theta.conj(),
                _ => CycElem::zero(),
            };
            assert_eq!(z, want, "{a} {b}");
        }
    }
}

#[test]
fn incidence_plane() {
    for j in 1..=13u8 {
        assert_eq!((1..=13).filter(|&i| incident(i, j)).count(), 4);
        assert_eq!((1..=13).filter(|&k| incident(j, k)).count(), 4);
    }
    for a in 1..=13u8 {
        for b in a + 1..=13 {
            assert_eq!((1..=13).filter(|&l| incident(a, l) && incident(b, l)).count(), 1);
        }
    }
}

#[test]
fn special_point_norms() {
    let md = m();
    assert_eq!(norm(&md.p_inf), CycElem::int(-3));
    assert_eq!(norm(&md.l_inf), CycElem::int(-3));
    assert_eq!(norm(&md.tau), q(-6, 1, -8, 1));
    assert_eq!(norm(&md.rho), q(-36, 1, -24, 1));
    assert_eq!(herm(&md.rho, &md.tau), q(-36, 1, -24, 1));
    assert_eq!(norm(&md.c), CycElem::int(-3));
    let mut tau = vec![CycElem::one(); DIM];
    tau[0] = q(4, 1, 1, 1);
    assert_eq!(md.tau, tau);
    for i in 1..=13 {
        assert!(!herm(&md.p_inf, &md.root(RootLabel::L(i))).is_zero());
        assert!(herm(&md.p_inf, &md.root(RootLabel::P(i))).is_zero());
        assert!(herm(&md.l_inf, &md.root(RootLabel::L(i))).is_zero());
        assert_eq!(herm(&md.tau, &md.root(RootLabel::P(i))), -CycElem::theta());
        assert_eq!(herm(&md.tau, &md.root(RootLabel::L(i))), -CycElem::sqrt3());
    }
    assert!(md.lattice.contains(&evec::from_cyc(&md.p_inf).unwrap()));
    assert!(md.lattice.contains(&evec::from_cyc(&md.c).unwrap()));
}

#[test]
fn twelve_gon_and_a4() {
    let md = m();
    let s = md.twelve_gon();
    let a = md.a4();
    for x in &s {
        for y in &a {
            assert!(herm(x, y).is_zero());
        }
    }
    let theta = CycElem::theta();
    for i in 0..12 {
        for j in 0..12 {
            let z = herm(&s[i], &s[j]);
            let d = (j + 12 - i) % 12;
            if d == 0 {
                assert_eq!(z, CycElem::int(3));
            } else if d == 1 || d == 11 {
                assert!(z == theta || z == theta.conj());
            } else {
                assert!(z.is_zero());
            }
        }
    }
    assert_eq!(herm(&a[0], &a[1]), theta.conj());
    let g = HermitianGram::new(s.iter().map(|x| s.iter().map(|y| herm(x, y)).collect()).collect()).unwrap();
    assert_eq!(signature(&g), (9, 1, 2));
}

#[test]
fn projections() {
    let md = m();
    let sa = md.root(A4_ROOTS[0]);
    let tp = project_to_mirror(&md.tau, &sa);
    let inv_r3 = CycElem::real(RealQuad::new(Rat::zero(), Rat::new(1, 3)));
    assert_eq!(tp, axpy(&inv_r3, &sa, &md.tau));
    assert_eq!(norm(&tp), q(-7, 1, -8, 1));
    assert_eq!(herm(&tp, &md.tau), q(-7, 1, -8, 1));
    let s0 = md.root(TWELVE_GON[0]);
    let rp = project_to_mirror(&md.rho, &s0);
    assert_eq!(rp, axpy(&(&CycElem::i() * &inv_r3), &s0, &md.rho));
    let tq = project_to_mirror(&md.tau, &s0);
    let v = -q(37, 1, 24, 1);
    assert_eq!(norm(&rp), v);
    assert_eq!(herm(&rp, &md.rho), v);
    assert_eq!(herm(&rp, &md.tau), v);
    assert_eq!(herm(&rp, &tq), v);
    assert!(project_to_mirror(&sa, &sa).iter().all(CycElem::is_zero));
    // projection of τ to L₄ ⊗ C
    let p = |l| md.root(l);
    let i = CycElem::i();
    let comb1 = axpy(&i, &p(RootLabel::P(3)), &p(RootLabel::L(1)));
    let comb2 = axpy(&i, &p(RootLabel::P(2)), &p(RootLabel::L(2)));
    let want = add(&scale(&-q(3, 1, 2, 1), &comb1), &scale(&-q(5, 1, 3, 1), &comb2));
    assert_eq!(md.project_to_l4(&md.tau), want);
    assert_eq!(sub(&md.tau, &want), md.rho);
    for x in md.a4() {
        assert!(herm(&md.rho, &x).is_zero());
    }
}

#[test]
fn polygons_are_totally_real() {
    let md = m();
    for case in PolygonCase::ALL {
        let poly = md.polygon(case);
        for a in &poly.vertices {
            for b in &poly.vertices {
                let z = herm(a, b);
                assert!(z.is_real() && z.re.sign() < 0, "{case:?}");
            }
        }
    }
}

#[test]
fn sigma_points() {
    let md = m();
    assert_eq!(md.sigma_point(&Rat::one()).unwrap().vector, md.tau);
    assert!(md.sigma_point(&Rat::zero()).is_err());
    assert!(md.sigma_point(&Rat::new(3, 2)).is_err());
    let s = md.sigma_point(&Rat::new(1, 4)).unwrap().vector;
    // ‖σ‖² = (1−t)²ρ² + 2t(1−t)⟨ρ,τ⟩ + t²τ² with t = 1/4
    let want = &(&q(-36, 1, -24, 1) * &CycElem::rat(Rat::new(15, 16))) + &(&q(-6, 1, -8, 1) * &CycElem::rat(Rat::new(1, 16)));
    assert_eq!(norm(&s), want);
    let z = herm(&s, &md.rho);
    assert!(z.is_real() && z.re.sign() < 0);
}

#[test]
fn cbasis_gram_and_characterization() {
    let md = m();
    assert_eq!(md.cbasis.gram(), CBasis::expected_gram());
    let rep = md.cbasis.containment(&md.roots).unwrap();
    assert!(rep.holds());
    for r in md.roots.all() {
        let cc = md.cbasis.c_coords(&evec::to_cyc(r)).expect("Eisenstein c-coordinates");
        assert!(crate::exactnum::eis_congruent_mod_theta(cc.a, cc.b));
        assert_eq!(&md.cbasis.to_standard(&cc), r);
    }
    let p1 = md.root(RootLabel::P(1));
    let p1_theta: AVec = p1.iter().map(|x| x / &CycElem::theta()).collect();
    assert!(!hnf_member(&p1_theta));
    let sc: AVec = add(&md.root(TWELVE_GON[0]), &md.c).iter().map(|x| x / &CycElem::theta()).collect();
    assert!(hnf_member(&sc));
}

fn hnf_member(v: &AVec) -> bool {
    crate::lattice::hnf_membership(Model::get().roots.all(), v).unwrap().is_member()
}

#[test]
fn l_dm_structure() {
    let md = m();
    let ldm = md.cbasis.l_dm();
    assert_eq!(ldm.z_rank(), 20);
    for g in ldm.z_basis_evecs() {
        for x in md.a4() {
            assert!(herm(&evec::to_cyc(&g), &x).is_zero());
        }
    }
    let basis = evec::eis_basis(&md.cbasis.l_dm_generators());
    assert_eq!(basis.len(), 10);
    let k = GramLattice::from_vectors(basis.iter().map(|b| evec::to_cyc(b)).collect(), lorentz());
    assert_eq!(signature(&k.gram), (9, 1, 0));
    assert!(theta_dual_equals_self(&k).unwrap().holds);
    let lb = evec::eis_basis(md.roots.all());
    assert_eq!(lb.len(), 14);
    let kl = GramLattice::from_vectors(lb.iter().map(|b| evec::to_cyc(b)).collect(), lorentz());
    assert_eq!(signature(&kl.gram), (13, 1, 0));
    assert!(theta_dual_equals_self(&kl).unwrap().holds);
    let span = crate::lattice::ELattice::new(&lb, lorentz());
    for r in md.roots.all() {
        assert!(span.contains(r));
    }
    assert_eq!(span.z_basis(), md.lattice.z_basis());
}

#[test]
fn collineation_group_orders() {
    let md = m();
    let g = CollineationGroup::build();
    assert_eq!(g.order(), 11232);
    assert!(g.elements.iter().all(Collineation::preserves_incidence));
    assert!(Collineation::shift().preserves_incidence());
    assert!(Collineation::triple().preserves_incidence());
    assert!(Collineation::duality().preserves_incidence());
    let gens = [Collineation::shift(), Collineation::triple(), Collineation::duality()];
    assert!(g.is_closed_under(&gens));
    for x in g.elements.iter().step_by(97) {
        assert!(x.gram_compatible(&md.roots));
    }
    let d = g.d24();
    assert_eq!(d.elements.len(), 24);
    assert!(d.acts_dihedrally());
    assert!(d.faithful_and_transitive());
    let exch = d
        .elements
        .iter()
        .filter(|x| x.apply(A4_ROOTS[0]) == A4_ROOTS[3] && x.apply(A4_ROOTS[1]) == A4_ROOTS[2])
        .count();
    assert_eq!(exch, 12);
}

#[test]
fn collineation_lifts() {
    let md = m();
    let lifter = collineation::Lifter::new(&md.roots);
    let g = CollineationGroup::build();
    let mut samples = vec![Collineation::shift(), Collineation::triple(), Collineation::duality()];
    samples.extend(g.d24().elements);
    for x in &samples {
        let mtx = lifter.lift(x, &md.roots);
        assert!(lifter.verify(&mtx, x, &md.roots));
        assert!(collineation::preserves_form(&mtx));
        let t = linalg::mat_vec(&mtx, &md.tau);
        assert!(collineation::scalar_multiple(&md.tau, &t).is_some());
    }
    for x in g.d24().elements {
        let mtx = lifter.lift(&x, &md.roots);
        let r = linalg::mat_vec(&mtx, &md.rho);
        assert!(collineation::scalar_multiple(&md.rho, &r).is_some());
    }
}
