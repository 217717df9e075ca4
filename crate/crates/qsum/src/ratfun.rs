//! Bivariate rational functions over Q in canonical form: numerator and
//! denominator coprime, denominator monic in the lex order with x ≺ y.

use num_traits::{One, Zero};

use crate::mpoly::{apply_shift_mpoly, mpoly_gcd, MPoly, ShiftMonomial};
use crate::rat::{QParam, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: MPoly,
    den: MPoly,
}

impl RatFun {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.nvars(), den.nvars());
        if num.is_zero() {
            return RatFun {
                num,
                den: MPoly::one(den.nvars()),
            };
        }
        let g = mpoly_gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let (u, den) = den.monic_lex();
        RatFun {
            num: num.scale(&u.recip()),
            den,
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: MPoly::zero(2),
            den: MPoly::one(2),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(MPoly::one(2))
    }

    pub fn from_poly(p: MPoly) -> Self {
        let n = p.nvars();
        RatFun {
            num: p,
            den: MPoly::one(n),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFun::from_poly(MPoly::constant(2, c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatFun::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        RatFun::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        RatFun::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Apply q^{v} τ^{e} to the function. The scalar multiplies the value,
    /// so it acts on the numerator only.
    pub fn shift(&self, sigma: &ShiftMonomial, q: &QParam) -> Self {
        let num = apply_shift_mpoly(&self.num, sigma, q);
        let den = apply_shift_mpoly(
            &self.den,
            &ShiftMonomial::new(0, sigma.exps.clone()),
            q,
        );
        RatFun::new(num, den)
    }

    /// τx^a τy^b shorthand for the bivariate case.
    pub fn shift_xy(&self, a: i64, b: i64, q: &QParam) -> Self {
        self.shift(&ShiftMonomial::xy(0, a, b), q)
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Option<Rat> {
        let d = self
            .den
            .eval_var(0, x)
            .eval_var(1, y)
            .as_constant()
            .unwrap();
        if d.is_zero() {
            return None;
        }
        let n = self
            .num
            .eval_var(0, x)
            .eval_var(1, y)
            .as_constant()
            .unwrap();
        Some(n / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn xy() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    #[test]
    fn canonical_reduction() {
        let (x, y) = xy();
        // (2x+2y)(x+1) / (2(x+y)^2) = (x+1)/(x+y), monic den
        let num = x.add(&y).scale(&rat_int(2)).mul(&x.add(&MPoly::one(2)));
        let den = x.add(&y).pow(2).scale(&rat_int(2));
        let f = RatFun::new(num, den);
        assert_eq!(f.num, x.add(&MPoly::one(2)));
        assert_eq!(f.den, x.add(&y));
    }

    #[test]
    fn field_ops_and_eval() {
        let (x, y) = xy();
        let f = RatFun::new(MPoly::one(2), x.add(&y));
        let g = RatFun::new(y.clone(), x.clone());
        let s = f.add(&g);
        // 1/(x+y) + y/x = (x + y^2 + xy)/(x(x+y))
        let expect = RatFun::new(
            x.add(&y.pow(2)).add(&x.mul(&y)),
            x.mul(&x.add(&y)),
        );
        assert_eq!(s, expect);
        assert_eq!(
            s.eval(&rat_int(1), &rat_int(2)).unwrap(),
            rat(7, 3)
        );
        assert!(f.sub(&f).is_zero());
        assert_eq!(f.mul(&g).div(&g), f);
    }

    #[test]
    fn shift_acts_on_value() {
        let (x, y) = xy();
        let q = QParam::new(rat_int(2)).unwrap();
        let f = RatFun::new(y.clone(), x.add(&y));
        // τx f = y/(2x+y); check by evaluation
        let s = f.shift_xy(1, 0, &q);
        assert_eq!(
            s.eval(&rat_int(1), &rat_int(1)).unwrap(),
            f.eval(&rat_int(2), &rat_int(1)).unwrap()
        );
        // q^2 τy^{-1}: scalar multiplies the value
        let t = f.shift(&ShiftMonomial::xy(2, 0, -1), &q);
        assert_eq!(
            t.eval(&rat_int(1), &rat_int(2)).unwrap(),
            f.eval(&rat_int(1), &rat_int(1)).unwrap() * rat_int(4)
        );
    }
}
