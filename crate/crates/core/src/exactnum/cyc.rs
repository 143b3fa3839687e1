use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use super::realquad::owned_ops;
use super::{ParseError, Rat, RealQuad};

/// An element `re + i·im` of Q(i, √3) = Q(ω, √3), with `re, im ∈ Q(√3)`.
///
/// Coordinates are taken in the basis {1, √3, i, i√3}, so conjugation
/// and real-part extraction are componentwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycElem {
    pub re: RealQuad,
    pub im: RealQuad,
}

impl CycElem {
    pub fn new(re: RealQuad, im: RealQuad) -> Self {
        CycElem { re, im }
    }

    pub fn real(re: RealQuad) -> Self {
        CycElem { re, im: RealQuad::zero() }
    }

    pub fn rat(r: Rat) -> Self {
        Self::real(RealQuad::rat(r))
    }

    pub fn int(n: i64) -> Self {
        Self::rat(Rat::int(n))
    }

    pub fn zero() -> Self {
        CycElem::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    /// Build from the four rational coordinates on {1, √3, i, i√3}.
    pub fn from_coords(c: [Rat; 4]) -> Self {
        let [a, b, c, d] = c;
        CycElem::new(RealQuad::new(a, b), RealQuad::new(c, d))
    }

    pub fn coords(&self) -> [&Rat; 4] {
        [&self.re.a, &self.re.b, &self.im.a, &self.im.b]
    }

    pub fn i() -> Self {
        CycElem::new(RealQuad::zero(), RealQuad::one())
    }

    pub fn sqrt3() -> Self {
        Self::real(RealQuad::sqrt3())
    }

    /// ω = e^{2πi/3} = (−1 + i√3)/2
    pub fn omega() -> Self {
        CycElem::new(RealQuad::frac(-1, 2, 0, 1), RealQuad::frac(0, 1, 1, 2))
    }

    /// θ = ω − ω̄ = i√3
    pub fn theta() -> Self {
        CycElem::new(RealQuad::zero(), RealQuad::sqrt3())
    }

    /// e^{iπ/6} = (√3 + i)/2
    pub fn zeta12() -> Self {
        CycElem::new(RealQuad::frac(0, 1, 1, 2), RealQuad::frac(1, 2, 0, 1))
    }

    /// e^{iπ/3} = (1 + i√3)/2
    pub fn zeta6() -> Self {
        CycElem::new(RealQuad::frac(1, 2, 0, 1), RealQuad::frac(0, 1, 1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> CycElem {
        CycElem::new(self.re.clone(), -&self.im)
    }

    /// `|x|² = x·x̄`, a nonnegative element of Q(√3).
    pub fn norm_sq(&self) -> RealQuad {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> CycElem {
        let n = self.norm_sq().inv();
        CycElem::new(&self.re * &n, -(&self.im * &n))
    }

    pub fn scale(&self, r: &Rat) -> CycElem {
        CycElem::new(self.re.scale(r), self.im.scale(r))
    }

    pub fn scale_real(&self, r: &RealQuad) -> CycElem {
        CycElem::new(&self.re * r, &self.im * r)
    }

    pub fn pow(&self, e: i64) -> CycElem {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = CycElem::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical four-term rendering `a + b*sqrt3 + c*i + d*i*sqrt3`.
    pub fn to_canonical(&self) -> String {
        format!(
            "{} + {}*sqrt3 + {}*i + {}*i*sqrt3",
            self.re.a, self.re.b, self.im.a, self.im.b
        )
    }

    /// Compact rendering that drops zero terms; for reports.
    pub fn to_compact(&self) -> String {
        let parts = [
            (&self.re.a, ""),
            (&self.re.b, "√3"),
            (&self.im.a, "i"),
            (&self.im.b, "i√3"),
        ];
        let mut out = String::new();
        for (c, unit) in parts {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if unit.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(unit);
            } else {
                out.push_str(&format!("({mag}){unit}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn approx(&self) -> (f64, f64) {
        (self.re.approx(), self.im.approx())
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

impl FromStr for CycElem {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms: Vec<&str> = s.split(" + ").collect();
        let bad = || ParseError::new(format!("not a canonical field element: `{s}`"));
        if terms.len() != 4 {
            return Err(bad());
        }
        let suffixes = ["", "*sqrt3", "*i", "*i*sqrt3"];
        let mut coords = Vec::with_capacity(4);
        for (t, suf) in terms.iter().zip(suffixes) {
            let body = t.trim().strip_suffix(suf).ok_or_else(bad)?;
            if suf.is_empty() && body.contains('*') {
                return Err(bad());
            }
            coords.push(body.parse::<Rat>()?);
        }
        let [a, b, c, d]: [Rat; 4] = coords.try_into().map_err(|_| bad())?;
        Ok(CycElem::from_coords([a, b, c, d]))
    }
}

impl From<RealQuad> for CycElem {
    fn from(r: RealQuad) -> Self {
        CycElem::real(r)
    }
}

impl Add<&CycElem> for &CycElem {
    type Output = CycElem;
    fn add(self, rhs: &CycElem) -> CycElem {
        CycElem::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&CycElem> for &CycElem {
    type Output = CycElem;
    fn sub(self, rhs: &CycElem) -> CycElem {
        CycElem::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&CycElem> for &CycElem {
    type Output = CycElem;
    fn mul(self, rhs: &CycElem) -> CycElem {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        CycElem::new(re, im)
    }
}

impl Div<&CycElem> for &CycElem {
    type Output = CycElem;
    fn div(self, rhs: &CycElem) -> CycElem {
        assert!(!rhs.is_zero(), "division by zero");
        self * &rhs.inv()
    }
}

impl Neg for &CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        CycElem::new(-&self.re, -&self.im)
    }
}

impl Neg for CycElem {
    type Output = CycElem;
    fn neg(self) -> CycElem {
        -&self
    }
}

owned_ops!(CycElem, Add add, Sub sub, Mul mul, Div div);
