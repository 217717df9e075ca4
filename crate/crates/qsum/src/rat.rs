//! Exact rational scalars and the fixed q parameter.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `base^e` for integer e (negative allowed; base must be nonzero then).
pub fn pow_rat(base: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    assert!(!base.is_zero() || e > 0, "negative power of zero");
    let k = e.unsigned_abs() as u32;
    let p = Rat::new(
        num_traits::Pow::pow(base.numer(), k),
        num_traits::Pow::pow(base.denom(), k),
    );
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// The q of the q-shift operators: a rational that is not 0, 1 or -1
/// (the only rational roots of unity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QParam {
    value: Rat,
}

impl QParam {
    pub fn new(value: Rat) -> Result<Self, Error> {
        if value.is_zero() || value.abs().is_one() {
            return Err(Error::InvalidQ);
        }
        Ok(QParam { value })
    }

    pub fn value(&self) -> &Rat {
        &self.value
    }

    /// q^e as an exact rational.
    pub fn pow(&self, e: i64) -> Rat {
        pow_rat(&self.value, e)
    }
}

/// The unique integer m with q^m = r, if one exists.
///
/// Exactness makes this decidable: |q| != 1, so repeated exact division by q
/// (or by 1/q) either reaches 1 or skips past it.
pub fn q_log(r: &Rat, q: &QParam) -> Result<Option<i64>, Error> {
    if r.is_zero() {
        return Err(Error::Domain("q_log of zero".into()));
    }
    if r.is_one() {
        return Ok(Some(0));
    }
    // Reduce to a base of absolute value > 1.
    let (base, invert) = if q.value().abs() > Rat::one() {
        (q.value().clone(), false)
    } else {
        (q.value().recip(), true)
    };
    let one = Rat::one();
    let mut cur = r.clone();
    let mut m: i64 = 0;
    if cur.abs() >= one {
        while cur.abs() > one {
            cur /= &base;
            m += 1;
        }
    } else {
        while cur.abs() < one {
            cur *= &base;
            m -= 1;
        }
    }
    if cur != one {
        return Ok(None);
    }
    Ok(Some(if invert { -m } else { m }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(n: i64, d: i64) -> QParam {
        QParam::new(rat(n, d)).unwrap()
    }

    #[test]
    fn qparam_rejects_roots_of_unity() {
        assert!(QParam::new(rat_int(0)).is_err());
        assert!(QParam::new(rat_int(1)).is_err());
        assert!(QParam::new(rat_int(-1)).is_err());
        assert!(QParam::new(rat(3, 2)).is_ok());
        assert!(QParam::new(rat_int(-2)).is_ok());
    }

    #[test]
    fn q_log_examples() {
        // (2/3)^2 = 4/9
        assert_eq!(q_log(&rat(4, 9), &qp(2, 3)).unwrap(), Some(2));
        // q^0 = 1
        assert_eq!(q_log(&rat_int(1), &qp(7, 2)).unwrap(), Some(0));
        // 5 is not a power of 2
        assert_eq!(q_log(&rat_int(5), &qp(2, 1)).unwrap(), None);
        assert!(q_log(&rat_int(0), &qp(2, 1)).is_err());
    }

    #[test]
    fn q_log_round_trips_exhaustively() {
        for q in [qp(2, 1), qp(3, 2), qp(-2, 1), qp(2, 3), qp(-5, 3)] {
            for m in -64..=64i64 {
                let r = q.pow(m);
                assert_eq!(q_log(&r, &q).unwrap(), Some(m), "q={:?} m={}", q, m);
            }
        }
    }

    #[test]
    fn q_log_negative_base() {
        let q = qp(-2, 1);
        assert_eq!(q_log(&rat_int(-8), &q).unwrap(), Some(3));
        assert_eq!(q_log(&rat_int(8), &q).unwrap(), None);
        assert_eq!(q_log(&rat_int(4), &q).unwrap(), Some(2));
        assert_eq!(q_log(&rat_int(-1), &q).unwrap(), None);
    }
}
