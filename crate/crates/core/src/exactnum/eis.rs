use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CycElem, Rat, RealQuad};

/// An Eisenstein integer `m + nω`.
///
/// Ordered lexicographically on `(m, n)`; this is the canonical order used
/// for vectors throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EisInt {
    pub m: i64,
    pub n: i64,
}

impl EisInt {
    pub const ZERO: EisInt = EisInt { m: 0, n: 0 };
    pub const ONE: EisInt = EisInt { m: 1, n: 0 };
    pub const OMEGA: EisInt = EisInt { m: 0, n: 1 };
    /// θ = ω − ω̄ = 1 + 2ω
    pub const THETA: EisInt = EisInt { m: 1, n: 2 };

    pub const fn new(m: i64, n: i64) -> Self {
        EisInt { m, n }
    }

    pub fn from_int(m: i64) -> Self {
        EisInt { m, n: 0 }
    }

    /// The six units ±1, ±ω, ±ω², in a fixed order.
    pub fn units() -> [EisInt; 6] {
        [
            EisInt::new(1, 0),
            EisInt::new(0, 1),
            EisInt::new(-1, -1),
            EisInt::new(-1, 0),
            EisInt::new(0, -1),
            EisInt::new(1, 1),
        ]
    }

    pub fn is_zero(self) -> bool {
        self.m == 0 && self.n == 0
    }

    pub fn conj(self) -> EisInt {
        // ω̄ = −1 − ω
        EisInt::new(self.m - self.n, -self.n)
    }

    /// `|x|² = m² − mn + n²`
    pub fn norm(self) -> i64 {
        self.m * self.m - self.m * self.n + self.n * self.n
    }

    pub fn mul_omega(self) -> EisInt {
        EisInt::new(-self.n, self.m - self.n)
    }

    /// Residue in E/θE ≅ F₃ (ω ≡ 1 mod θ).
    pub fn residue_mod_theta(self) -> i64 {
        (self.m + self.n).rem_euclid(3)
    }

    pub fn divisible_by_theta(self) -> bool {
        self.residue_mod_theta() == 0
    }

    /// `x/θ` when θ divides `x`.
    pub fn div_theta(self) -> Option<EisInt> {
        // x/θ = x·θ̄/3 and x·θ̄ = (2n − m) + (n − 2m)ω
        let a = 2 * self.n - self.m;
        let b = self.n - 2 * self.m;
        if a % 3 == 0 && b % 3 == 0 {
            Some(EisInt::new(a / 3, b / 3))
        } else {
            None
        }
    }

    /// Exact quotient `self / d` in E, if it exists.
    pub fn div_exact(self, d: EisInt) -> Option<EisInt> {
        let nd = d.norm();
        if nd == 0 {
            return None;
        }
        let p = self * d.conj();
        if p.m % nd == 0 && p.n % nd == 0 {
            Some(EisInt::new(p.m / nd, p.n / nd))
        } else {
            None
        }
    }

    pub fn to_cyc(self) -> CycElem {
        // m + nω = (m − n/2) + i·(n/2)√3
        CycElem::new(
            RealQuad::new(Rat::int(self.m) - Rat::new(self.n, 2), Rat::zero()),
            RealQuad::new(Rat::zero(), Rat::new(self.n, 2)),
        )
    }

    /// Inverse of [`EisInt::to_cyc`]; `None` if `x` is not in E.
    pub fn from_cyc(x: &CycElem) -> Option<EisInt> {
        if !x.re.b.is_zero() || !x.im.a.is_zero() {
            return None;
        }
        let n = Rat::int(2) * &x.im.b;
        let m = &x.re.a + &x.im.b;
        Some(EisInt::new(m.to_i64()?, n.to_i64()?))
    }

    /// Nearest Eisenstein integer to `self / d`; the remainder
    /// `self − q·d` has norm at most `N(d)/3`.
    pub fn div_round(self, d: EisInt) -> EisInt {
        let nd = d.norm();
        assert!(nd != 0, "division by zero");
        let p = self * d.conj();
        let (fm, fn_) = (p.m.div_euclid(nd), p.n.div_euclid(nd));
        let mut best = EisInt::new(fm, fn_);
        let mut best_norm = (self - best * d).norm();
        for (a, b) in [(1, 0), (0, 1), (1, 1)] {
            let q = EisInt::new(fm + a, fn_ + b);
            let r = (self - q * d).norm();
            if r < best_norm {
                best = q;
                best_norm = r;
            }
        }
        best
    }

    /// Smallest associate under the canonical order.
    pub fn canonical_associate(self) -> EisInt {
        EisInt::units().iter().map(|u| *u * self).min().unwrap()
    }
}

/// True iff `(a − b)/θ ∈ E`.
pub fn eis_congruent_mod_theta(a: EisInt, b: EisInt) -> bool {
    (a - b).divisible_by_theta()
}

impl Add for EisInt {
    type Output = EisInt;
    fn add(self, rhs: EisInt) -> EisInt {
        EisInt::new(self.m + rhs.m, self.n + rhs.n)
    }
}

impl Sub for EisInt {
    type Output = EisInt;
    fn sub(self, rhs: EisInt) -> EisInt {
        EisInt::new(self.m - rhs.m, self.n - rhs.n)
    }
}

impl Mul for EisInt {
    type Output = EisInt;
    fn mul(self, rhs: EisInt) -> EisInt {
        // ω² = −1 − ω
        let (a, b, c, d) = (self.m, self.n, rhs.m, rhs.n);
        EisInt::new(a * c - b * d, a * d + b * c - b * d)
    }
}

impl Neg for EisInt {
    type Output = EisInt;
    fn neg(self) -> EisInt {
        EisInt::new(-self.m, -self.n)
    }
}

impl fmt::Display for EisInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.n) {
            (m, 0) => write!(f, "{m}"),
            (0, n) => write!(f, "{n}w"),
            (m, n) if n < 0 => write!(f, "{m}{n}w"),
            (m, n) => write!(f, "{m}+{n}w"),
        }
    }
}

impl fmt::Debug for EisInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
