//! Dense univariate polynomials over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{pow_rat, Rat};

/// A univariate polynomial with exact rational coefficients; `coeffs[i]` is
/// the coefficient of the i-th power. No trailing zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    pub fn var() -> Self {
        UPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        UPoly::new(cs.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with deg(0) = -1.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Order: the lowest exponent with a nonzero coefficient (0 for the zero poly).
    pub fn ord(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^k.
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UPoly::new(out)
    }

    /// Divide by x^k; panics if not exactly divisible.
    pub fn div_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        assert!(self.ord() >= k, "not divisible by x^{}", k);
        UPoly::new(self.coeffs[k..].to_vec())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = UPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Euclidean division; panics when dividing by zero.
    pub fn divmod(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.deg() < d.deg() {
            return (UPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.deg() as usize;
        let lc = d.lc();
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd || (rem.len() == dd + 1 && dd == 0 && !rem.is_empty()) {
            if rem.len() < dd + 1 {
                break;
            }
            let k = rem.len() - dd - 1;
            let c = rem.last().unwrap() / &lc;
            quo[k] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let v = &c * dc;
                rem[k + j] -= v;
            }
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (UPoly::new(quo), UPoly::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divmod(d).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "inexact division");
        q
    }

    /// Exact division; None if the remainder is nonzero.
    pub fn try_exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divmod(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic gcd; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().1
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let g = self.gcd(other);
        self.mul(other).exact_div(&g).monic().1
    }

    /// Extended gcd: returns (g, s, t) with g monic and s*self + t*other = g.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let u = r0.lc();
        let ui = u.recip();
        (r0.scale(&ui), s0.scale(&ui), t0.scale(&ui))
    }

    /// (leading coefficient, monic polynomial).
    pub fn monic(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::one(), self.clone());
        }
        let u = self.lc();
        (u.clone(), self.scale(&u.recip()))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// p(c*x): each coefficient of x^i is scaled by c^i.
    pub fn scale_x(&self, c: &Rat) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a * pow_rat(c, i as i64))
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    /// p(x + c).
    pub fn translate(&self, c: &Rat) -> Self {
        // Horner on p viewed at x+c.
        let mut acc = UPoly::zero();
        let shift = UPoly::new(vec![c.clone(), Rat::one()]);
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&UPoly::constant(coeff.clone()));
        }
        acc
    }

    /// Clear denominators: returns (scale, integer coefficients) with
    /// scale * self having the given integer coefficients.
    pub fn to_zz(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::one(), vec![]);
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        // Remove integer content.
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        let ints: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (Rat::new(l, g), ints)
    }

    pub fn from_zz(cs: &[BigInt]) -> Self {
        UPoly::new(cs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn divmod_and_gcd() {
        let a = UPoly::from_i64(&[-1, 0, 1]); // x^2 - 1
        let b = UPoly::from_i64(&[1, 1]); // x + 1
        let (q, r) = a.divmod(&b);
        assert_eq!(q, UPoly::from_i64(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), b);
        let c = UPoly::from_i64(&[2, 1]);
        assert!(a.gcd(&c).is_one());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = UPoly::from_i64(&[1, 3, 1, 2]);
        let b = UPoly::from_i64(&[-2, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn translate_and_scale() {
        let p = UPoly::from_i64(&[0, 0, 1]); // x^2
        let t = p.translate(&rat_int(1)); // (x+1)^2
        assert_eq!(t, UPoly::from_i64(&[1, 2, 1]));
        let s = p.scale_x(&rat_int(3));
        assert_eq!(s, UPoly::from_i64(&[0, 0, 9]));
    }
}
