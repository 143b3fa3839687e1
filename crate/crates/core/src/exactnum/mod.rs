//! Exact arithmetic in Q(√3), Q(i, √3) and the Eisenstein integers.

mod cyc;
mod eis;
mod rat;
mod realquad;

pub use cyc::CycElem;
pub use eis::{eis_congruent_mod_theta, EisInt};
pub use rat::Rat;
pub use realquad::{real_sign, RealQuad};

/// Failure to parse a textual field element.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{msg}")]
pub struct ParseError {
    msg: String,
}

impl ParseError {
    pub fn new(msg: String) -> Self {
        ParseError { msg }
    }
}

/// `x·y` in Q(i, √3).
pub fn cyc_mul(x: &CycElem, y: &CycElem) -> CycElem {
    x * y
}

/// Complex conjugate.
pub fn cyc_conj(x: &CycElem) -> CycElem {
    x.conj()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, r: i64) -> Rat {
        Rat::new(p, r)
    }

    #[test]
    fn omega_times_conjugate_is_one() {
        let w = CycElem::omega();
        assert_eq!(cyc_mul(&w, &cyc_conj(&w)), CycElem::one());
    }

    #[test]
    fn theta_squared() {
        let t = CycElem::theta();
        assert_eq!(&t * &t, CycElem::int(-3));
        assert_eq!(CycElem::omega() - CycElem::omega().conj(), t);
    }

    #[test]
    fn four_plus_sqrt3_squared() {
        let x = CycElem::real(RealQuad::frac(4, 1, 1, 1));
        assert_eq!(&x * &x, CycElem::real(RealQuad::frac(19, 1, 8, 1)));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(cyc_conj(&CycElem::theta()), -CycElem::theta());
        let wbar = CycElem::int(-1) - CycElem::omega();
        assert_eq!(cyc_conj(&CycElem::omega()), wbar);
        assert_eq!(CycElem::zeta6().conj(), CycElem::one() - CycElem::zeta6());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(real_sign(&RealQuad::new(q(-1, 12), q(1, 18))), 1);
        assert_eq!(real_sign(&RealQuad::zero()), 0);
        assert_eq!(real_sign(&RealQuad::frac(2, 1, -1, 1)), 1);
        assert_eq!(real_sign(&RealQuad::frac(-2, 1, 1, 1)), -1);
        assert_eq!(real_sign(&RealQuad::frac(3, 1, -2, 1)), -1);
    }

    #[test]
    fn congruence_examples() {
        assert!(eis_congruent_mod_theta(EisInt::ZERO, EisInt::ZERO));
        assert!(eis_congruent_mod_theta(EisInt::ONE, EisInt::OMEGA));
        assert!(!eis_congruent_mod_theta(EisInt::ONE, EisInt::ZERO));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(CycElem::zeta12().pow(12), CycElem::one());
        assert_eq!(CycElem::zeta12().pow(2), CycElem::zeta6());
        assert_eq!(CycElem::zeta6().pow(2), CycElem::omega());
        assert_eq!(CycElem::omega().pow(-1), CycElem::omega().conj());
    }

    #[test]
    fn eisenstein_embedding() {
        assert_eq!(EisInt::THETA.to_cyc(), CycElem::theta());
        assert_eq!(EisInt::OMEGA.to_cyc(), CycElem::omega());
        let a = EisInt::new(3, -7);
        assert_eq!(EisInt::from_cyc(&a.to_cyc()), Some(a));
        assert_eq!(EisInt::from_cyc(&CycElem::sqrt3()), None);
        assert_eq!(EisInt::THETA.div_theta(), Some(EisInt::ONE));
        assert_eq!(EisInt::new(3, 0).div_theta(), Some(EisInt::new(-1, -2)));
        assert_eq!(EisInt::ONE.div_theta(), None);
    }

    #[test]
    fn canonical_text_round_trip() {
        let x = CycElem::from_coords([q(-1, 2), q(3, 7), Rat::zero(), q(-5, 1)]);
        assert_eq!(x.to_canonical(), "-1/2 + 3/7*sqrt3 + 0*i + -5*i*sqrt3");
        assert_eq!(x.to_canonical().parse::<CycElem>().unwrap(), x);
        assert!("1 + 2".parse::<CycElem>().is_err());
        assert!("1 + 2*sqrt3 + 3*i + 4*sqrt3".parse::<CycElem>().is_err());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..12).prop_map(|(p, r)| Rat::new(p, r))
    }

    fn cyc() -> impl Strategy<Value = CycElem> {
        (small_rat(), small_rat(), small_rat(), small_rat())
            .prop_map(|(a, b, c, d)| CycElem::from_coords([a, b, c, d]))
    }

    fn eis() -> impl Strategy<Value = EisInt> {
        (-50i64..50, -50i64..50).prop_map(|(m, n)| EisInt::new(m, n))
    }

    proptest! {
        #[test]
        fn field_axioms(x in cyc(), y in cyc(), z in cyc()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv(), CycElem::one());
            }
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        }

        #[test]
        fn norm_is_nonnegative_real(x in cyc()) {
            let n = &x * &x.conj();
            prop_assert!(n.is_real());
            let s = real_sign(&n.re);
            prop_assert!(s >= 0);
            prop_assert_eq!(s == 0, x.is_zero());
        }

        #[test]
        fn sign_agrees_with_approximation(a in small_rat(), b in small_rat()) {
            let x = RealQuad::new(a, b);
            let approx = x.approx();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(real_sign(&x), if approx > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn canonical_rendering_round_trips(x in cyc()) {
            prop_assert_eq!(x.to_canonical().parse::<CycElem>().unwrap(), x);
        }

        #[test]
        fn eisenstein_embedding_is_a_ring_map(a in eis(), b in eis()) {
            prop_assert_eq!((a * b).to_cyc(), &a.to_cyc() * &b.to_cyc());
            prop_assert_eq!((a + b).to_cyc(), &a.to_cyc() + &b.to_cyc());
            prop_assert_eq!(a.conj().to_cyc(), a.to_cyc().conj());
            prop_assert_eq!(Rat::int(a.norm()), a.to_cyc().norm_sq().a);
        }

        #[test]
        fn congruence_matches_division(a in eis(), b in eis()) {
            let d = &(&(a - b).to_cyc() * &CycElem::theta().conj()) * &CycElem::rat(Rat::new(1, 3));
            prop_assert_eq!(eis_congruent_mod_theta(a, b), EisInt::from_cyc(&d).is_some());
        }
    }
}
