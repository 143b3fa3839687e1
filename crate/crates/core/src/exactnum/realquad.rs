use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Rat;

/// An element `a + b√3` of the real quadratic field Q(√3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RealQuad {
    pub a: Rat,
    pub b: Rat,
}

impl RealQuad {
    pub fn new(a: Rat, b: Rat) -> Self {
        RealQuad { a, b }
    }

    pub fn rat(a: Rat) -> Self {
        RealQuad { a, b: Rat::zero() }
    }

    pub fn int(a: i64) -> Self {
        Self::rat(Rat::int(a))
    }

    /// `p/q + (r/s)√3`
    pub fn frac(p: i64, q: i64, r: i64, s: i64) -> Self {
        RealQuad::new(Rat::new(p, q), Rat::new(r, s))
    }

    pub fn zero() -> Self {
        RealQuad::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn sqrt3() -> Self {
        RealQuad::new(Rat::zero(), Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b√3`.
    pub fn galois(&self) -> RealQuad {
        RealQuad::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² - 3b²`.
    pub fn field_norm(&self) -> Rat {
        &self.a * &self.a - Rat::int(3) * &self.b * &self.b
    }

    pub fn inv(&self) -> RealQuad {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.field_norm();
        RealQuad::new(&self.a / &n, -(&self.b / &n))
    }

    pub fn scale(&self, r: &Rat) -> RealQuad {
        RealQuad::new(&self.a * r, &self.b * r)
    }

    /// Exact sign of `a + b√3` as a real number.
    pub fn sign(&self) -> i32 {
        real_sign(self)
    }

    pub fn approx(&self) -> f64 {
        self.a.to_f64() + self.b.to_f64() * 3f64.sqrt()
    }
}

/// Sign of `a + b√3`, decided by case analysis on the signs of `a`, `b`
/// and a comparison of `a²` with `3b²`.
pub fn real_sign(x: &RealQuad) -> i32 {
    let sa = x.a.signum();
    let sb = x.b.signum();
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // opposite signs: the larger of |a| and √3|b| wins
    let a2 = &x.a * &x.a;
    let b2 = Rat::int(3) * &x.b * &x.b;
    match a2.cmp(&b2) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

impl PartialOrd for RealQuad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealQuad {
    fn cmp(&self, other: &Self) -> Ordering {
        real_sign(&(self - other)).cmp(&0)
    }
}

impl fmt::Display for RealQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt3", self.a, self.b)
    }
}

impl fmt::Debug for RealQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&RealQuad> for &RealQuad {
    type Output = RealQuad;
    fn add(self, rhs: &RealQuad) -> RealQuad {
        RealQuad::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&RealQuad> for &RealQuad {
    type Output = RealQuad;
    fn sub(self, rhs: &RealQuad) -> RealQuad {
        RealQuad::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&RealQuad> for &RealQuad {
    type Output = RealQuad;
    fn mul(self, rhs: &RealQuad) -> RealQuad {
        let a = &self.a * &rhs.a + Rat::int(3) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        RealQuad::new(a, b)
    }
}

impl Div<&RealQuad> for &RealQuad {
    type Output = RealQuad;
    fn div(self, rhs: &RealQuad) -> RealQuad {
        self * &rhs.inv()
    }
}

impl Neg for &RealQuad {
    type Output = RealQuad;
    fn neg(self) -> RealQuad {
        RealQuad::new(-&self.a, -&self.b)
    }
}

macro_rules! owned_ops {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use owned_ops;

owned_ops!(RealQuad, Add add, Sub sub, Mul mul, Div div);

impl Neg for RealQuad {
    type Output = RealQuad;
    fn neg(self) -> RealQuad {
        -&self
    }
}
