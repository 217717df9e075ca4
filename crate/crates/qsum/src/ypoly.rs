//! Polynomials in y with coefficients in Q(x): the Euclidean domain used for
//! partial fractions and the q-difference equation solver.

use num_traits::Zero;

use crate::mpoly::MPoly;
use crate::rat::{QParam, Rat};
use crate::ratx::RatX;
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YPoly {
    coeffs: Vec<RatX>, // coeffs[k] multiplies y^k
}

impl YPoly {
    pub fn new(mut coeffs: Vec<RatX>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn zero() -> Self {
        YPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        YPoly {
            coeffs: vec![RatX::one()],
        }
    }

    pub fn constant(c: RatX) -> Self {
        YPoly::new(vec![c])
    }

    pub fn var() -> Self {
        YPoly {
            coeffs: vec![RatX::zero(), RatX::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeff(&self, k: usize) -> RatX {
        self.coeffs.get(k).cloned().unwrap_or_else(RatX::zero)
    }

    pub fn coeffs(&self) -> &[RatX] {
        &self.coeffs
    }

    pub fn lc(&self) -> RatX {
        self.coeffs.last().cloned().unwrap_or_else(RatX::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn neg(&self) -> Self {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        YPoly::new(
            (0..n)
                .map(|k| self.coeff(k).add(&o.coeff(k)))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return YPoly::zero();
        }
        let mut out = vec![RatX::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        YPoly::new(out)
    }

    pub fn scale(&self, c: &RatX) -> Self {
        YPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = YPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let mut q = YPoly::zero();
        let dd = d.deg();
        let dl = d.lc();
        while !r.is_zero() && r.deg() >= dd {
            let k = (r.deg() - dd) as usize;
            let c = r.lc().div(&dl);
            let mut t = vec![RatX::zero(); k + 1];
            t[k] = c;
            let t = YPoly::new(t);
            q = q.add(&t);
            r = r.sub(&t.mul(d));
        }
        (q, r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divmod(d).1
    }

    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let l = a.lc();
        a.scale(&l.recip())
    }

    /// Extended gcd: (g, s, t) with s*self + t*other = g, g monic or zero.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (YPoly::one(), YPoly::zero());
        let (mut t0, mut t1) = (YPoly::zero(), YPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let ns = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, ns);
            let nt = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, nt);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let l = r0.lc().recip();
        (r0.scale(&l), s0.scale(&l), t0.scale(&l))
    }

    /// Inverse of self modulo m; None when gcd(self, m) is not constant.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.ext_gcd(m);
        if g.deg() == 0 {
            Some(s.rem(m))
        } else {
            None
        }
    }

    /// Apply q^{v} τx^{ex} τy^{ey}: coefficient of y^k becomes
    /// q^{v + ey·k} · c(q^{ex} x).
    pub fn shift(&self, v: i64, ex: i64, ey: i64, q: &QParam) -> Self {
        YPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    c.shift_x(ex, q)
                        .scale(&q.pow(v + ey * k as i64))
                })
                .collect(),
        )
    }

    /// Convert from a bivariate polynomial (variables [x, y]).
    pub fn from_mpoly(p: &MPoly) -> Self {
        YPoly::new(
            p.coeffs_wrt_y()
                .into_iter()
                .map(RatX::from_poly)
                .collect(),
        )
    }

    /// Convert to (numerator MPoly, denominator UPoly): clears x-denominators.
    pub fn to_mpoly_frac(&self) -> (MPoly, UPoly) {
        let mut den = UPoly::one();
        for c in &self.coeffs {
            den = den.lcm(c.den());
        }
        let cleared: Vec<UPoly> = self
            .coeffs
            .iter()
            .map(|c| c.num().mul(&den.exact_div(c.den())))
            .collect();
        (MPoly::from_ycoeffs(&cleared), den)
    }

    /// Substitute a rational value for y, yielding an element of Q(x).
    pub fn eval_y(&self, y: &Rat) -> RatX {
        let mut out = RatX::zero();
        for c in self.coeffs.iter().rev() {
            out = out.scale(y).add(c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, QParam};

    fn poly_xy() -> YPoly {
        // y^2 + x y + 1
        YPoly::new(vec![
            RatX::one(),
            RatX::from_poly(UPoly::var()),
            RatX::one(),
        ])
    }

    #[test]
    fn divmod_roundtrip() {
        let a = poly_xy().mul(&YPoly::var()).add(&YPoly::one());
        let d = poly_xy();
        let (q, r) = a.divmod(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.deg() < d.deg());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = poly_xy();
        let b = YPoly::var().add(&YPoly::constant(RatX::from_poly(UPoly::var())));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        let inv = b.inv_mod(&a);
        if g.deg() == 0 {
            let i = inv.unwrap();
            assert_eq!(i.mul(&b).rem(&a), YPoly::one());
        }
    }

    #[test]
    fn shift_action() {
        let q = QParam::new(rat_int(2)).unwrap();
        // τy (y + x) = 2y + x
        let p = YPoly::var().add(&YPoly::constant(RatX::from_poly(UPoly::var())));
        let s = p.shift(0, 0, 1, &q);
        assert_eq!(s.coeff(1), RatX::constant(rat_int(2)));
        assert_eq!(s.coeff(0), RatX::from_poly(UPoly::var()));
    }

    #[test]
    fn mpoly_roundtrip() {
        let p = poly_xy();
        let (num, den) = p.to_mpoly_frac();
        assert!(den.is_one());
        assert_eq!(YPoly::from_mpoly(&num), p);
    }
}
