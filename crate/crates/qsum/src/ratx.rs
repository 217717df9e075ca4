//! Univariate rational functions in x over Q, kept in lowest terms with a
//! monic denominator.

use num_traits::{One, Zero};

use crate::rat::{pow_rat, QParam, Rat};
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatX {
    num: UPoly,
    den: UPoly,
}

impl RatX {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatX {
                num,
                den: UPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g);
        let mut den = den.exact_div(&g);
        let (u, d) = den.monic();
        den = d;
        num = num.scale(&u.recip());
        RatX { num, den }
    }

    pub fn zero() -> Self {
        RatX {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatX {
            num: UPoly::one(),
            den: UPoly::one(),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatX {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatX::from_poly(UPoly::constant(c))
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&UPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RatX {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatX::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatX::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        RatX::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatX::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatX::zero();
        }
        RatX {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.recip().pow(-e);
        }
        let mut out = RatX::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitute x -> q^k x.
    pub fn shift_x(&self, k: i64, q: &QParam) -> Self {
        let c = q.pow(k);
        // den stays monic after scale only up to a unit, so renormalize.
        RatX::new(self.num.scale_x(&c), self.den.scale_x(&c))
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

/// q^k as a Rat for convenience in this layer.
pub fn qpow(q: &QParam, k: i64) -> Rat {
    pow_rat(q.value(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn canonical_form() {
        // (2x+2)/(4x^2-4) = 1/(2x-2), denominator monic -> (1/2)/(x-1)
        let n = UPoly::new(vec![rat_int(2), rat_int(2)]);
        let d = UPoly::new(vec![rat_int(-4), rat_int(0), rat_int(4)]);
        let r = RatX::new(n, d);
        assert_eq!(r.num, UPoly::constant(rat(1, 2)));
        assert_eq!(r.den, UPoly::new(vec![rat_int(-1), rat_int(1)]));
    }

    #[test]
    fn field_ops() {
        let x = RatX::from_poly(UPoly::var());
        let one = RatX::one();
        // 1/x + 1/(x+1) = (2x+1)/(x^2+x)
        let a = one.div(&x);
        let b = one.div(&x.add(&one));
        let s = a.add(&b);
        assert_eq!(
            s.num,
            UPoly::new(vec![rat_int(1), rat_int(2)])
        );
        assert_eq!(s.den, UPoly::new(vec![rat_int(0), rat_int(1), rat_int(1)]));
        assert!(s.mul(&s.recip()).is_one());
    }

    #[test]
    fn shift_x_action() {
        let q = QParam::new(rat_int(2)).unwrap();
        let x = RatX::from_poly(UPoly::var());
        let f = RatX::one().div(&x.add(&RatX::one())); // 1/(x+1)
        let g = f.shift_x(1, &q); // 1/(2x+1) -> (1/2)/(x+1/2)
        assert_eq!(g.num, UPoly::constant(rat(1, 2)));
        assert_eq!(g.den, UPoly::new(vec![rat(1, 2), rat_int(1)]));
        assert_eq!(g.shift_x(-1, &q), f);
    }
}
