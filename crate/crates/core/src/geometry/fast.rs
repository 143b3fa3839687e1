//! Integer fast path: vectors with entries `(a+b√3) + i(c+d√3)`,
//! `a,b,c,d ∈ Z`, paired against Eisenstein roots. Every sign is decided
//! exactly in Z[√3] with i128.

use num_traits::ToPrimitive;

use crate::exactnum::{CycElem, RealQuad};

/// `x + y√3`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Zq {
    pub x: i128,
    pub y: i128,
}

impl Zq {
    pub const ZERO: Zq = Zq { x: 0, y: 0 };

    pub fn new(x: i128, y: i128) -> Self {
        Zq { x, y }
    }

    pub fn sign(self) -> i32 {
        let (sx, sy) = (self.x.signum() as i32, self.y.signum() as i32);
        if sy == 0 {
            return sx;
        }
        if sx == 0 || sx == sy {
            return sy;
        }
        let a2 = self.x * self.x;
        let b2 = 3 * self.y * self.y;
        match a2.cmp(&b2) {
            std::cmp::Ordering::Greater => sx,
            std::cmp::Ordering::Less => sy,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn add(self, o: Zq) -> Zq {
        Zq::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(self, o: Zq) -> Zq {
        Zq::new(self.x - o.x, self.y - o.y)
    }

    pub fn mul(self, o: Zq) -> Zq {
        Zq::new(self.x * o.x + 3 * self.y * o.y, self.x * o.y + self.y * o.x)
    }

    pub fn to_real(self) -> RealQuad {
        RealQuad::frac(self.x as i64, 1, self.y as i64, 1)
    }

    /// Compare `self/p` with `other/q` for positive `p`, `q`.
    pub fn cmp_ratio(self, p: Zq, other: Zq, q: Zq) -> std::cmp::Ordering {
        self.mul(q).sub(other.mul(p)).sign().cmp(&0)
    }
}

/// Complex number over Z[√3].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Zc {
    pub re: Zq,
    pub im: Zq,
}

impl Zc {
    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `|z|²`
    pub fn abs2(self) -> Zq {
        self.re.mul(self.re).add(self.im.mul(self.im))
    }

    /// `Re(u)Im(w) − Im(u)Re(w)`
    pub fn cross(self, w: Zc) -> Zq {
        self.re.mul(w.im).sub(self.im.mul(w.re))
    }

    pub fn dot(self, w: Zc) -> Zq {
        self.re.mul(w.re).add(self.im.mul(w.im))
    }

    pub fn neg(self) -> Zc {
        Zc { re: Zq::new(-self.re.x, -self.re.y), im: Zq::new(-self.im.x, -self.im.y) }
    }

    pub fn to_cyc(self) -> CycElem {
        CycElem::new(self.re.to_real(), self.im.to_real())
    }
}

/// A vector of C^{13,1} with coordinates in Z[√3] + iZ[√3].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastVec {
    /// per coordinate: `[a, b, c, d]` for `(a+b√3) + i(c+d√3)`
    pub coords: Vec<[i64; 4]>,
}

impl FastVec {
    /// Positive integer multiple of `v` with integral coordinates, and the
    /// multiplier. `None` if a coordinate is outside Q(√3)+iQ(√3) in a way
    /// that does not fit in i64.
    pub fn from_cyc(v: &[CycElem]) -> Option<(FastVec, i64)> {
        let mut den = num_bigint::BigInt::from(1);
        for x in v {
            for r in x.coords() {
                den = num_integer::Integer::lcm(&den, r.denom());
            }
        }
        let d = den.to_i64()?;
        let mut coords = Vec::with_capacity(v.len());
        for x in v {
            let c = x.coords();
            let mut out = [0i64; 4];
            // coords() order: 1, √3, i, i√3
            for k in 0..4 {
                out[k] = (c[k] * &crate::exactnum::Rat::int(d)).to_i64()?;
            }
            coords.push(out);
        }
        Some((FastVec { coords }, d))
    }

    /// `2⟨v,s⟩` for an Eisenstein vector `s` given as interleaved `(m,n)`.
    /// With `2s̄_k = p + q·i√3` (`p = 2m−n`, `q = −n`).
    pub fn pair2(&self, s: &[i32]) -> Zc {
        let (mut ra, mut rb, mut ia, mut ib) = (0i128, 0i128, 0i128, 0i128);
        for (k, v) in self.coords.iter().enumerate() {
            let (m, n) = (s[2 * k] as i128, s[2 * k + 1] as i128);
            if m == 0 && n == 0 {
                continue;
            }
            let (p, q) = (2 * m - n, -n);
            let [a, b, c, d] = v.map(|x| x as i128);
            let sg = if k == 0 { -1 } else { 1 };
            ra += sg * (a * p - 3 * d * q);
            rb += sg * (b * p - c * q);
            ia += sg * (c * p + 3 * b * q);
            ib += sg * (d * p + a * q);
        }
        Zc { re: Zq::new(ra, rb), im: Zq::new(ia, ib) }
    }

    /// Norm `⟨v,v⟩` as an element of Z[√3].
    pub fn norm(&self) -> Zq {
        let mut acc = Zq::ZERO;
        for (k, v) in self.coords.iter().enumerate() {
            let [a, b, c, d] = v.map(|x| x as i128);
            let t = Zq::new(a, b).mul(Zq::new(a, b)).add(Zq::new(c, d).mul(Zq::new(c, d)));
            acc = if k == 0 { acc.sub(t) } else { acc.add(t) };
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::EisInt;
    use crate::lattice::evec;
    use crate::model::{herm, Model};

    #[test]
    fn pairing_matches_exact() {
        let m = Model::get();
        let (tau, k) = FastVec::from_cyc(&m.tau).unwrap();
        assert_eq!(k, 1);
        let (rho, _) = FastVec::from_cyc(&m.rho).unwrap();
        for r in m.roots.all() {
            let mut s = evec::scale(EisInt::new(2, 1), r);
            s[0] = s[0] + EisInt::new(-1, 3);
            let z: Vec<i32> = evec::to_z(&s).iter().map(|&x| x as i32).collect();
            for (fv, v) in [(&tau, &m.tau), (&rho, &m.rho)] {
                let exact = herm(v, &evec::to_cyc(&s));
                let two = &exact * &CycElem::int(2);
                assert_eq!(fv.pair2(&z).to_cyc(), two);
            }
        }
        assert_eq!(tau.norm().to_real(), crate::model::norm(&m.tau).re);
    }

    #[test]
    fn zq_signs() {
        assert_eq!(Zq::new(-3, 2).sign(), 1);
        assert_eq!(Zq::new(-4, 2).sign(), -1);
        assert_eq!(Zq::new(0, 0).sign(), 0);
        assert_eq!(Zq::new(7, -4).sign(), 1);
    }
}
