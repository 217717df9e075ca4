//! The m-fold q-Gosper representation of a rational function of x: write
//! b(x)/b(q^m x) = (A(x)/B(x)) · (C(q^m x)/C(x)) with
//! gcd(A(x), B(q^{hm} x)) = 1 for every integer h ≥ 0.

use num_traits::{One, Signed, Zero};

use crate::rat::{pow_rat, QParam, Rat};
use crate::upoly::UPoly;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperTriple {
    pub a: UPoly,
    pub b: UPoly,
    pub c: UPoly,
    pub m: u32,
}

/// All integers h ≥ 0 with gcd(f(x), g(q^{hm} x)) nontrivial.
///
/// A common root α of f(x) and g(q^{hm} x) pairs a root α of f with a root
/// q^{hm} α of g, so |q|^{hm} is a ratio of root magnitudes. Cauchy's bound
/// confines every nonzero root μ of a polynomial p to
/// lo(p) ≤ |μ| ≤ hi(p), which yields finitely many candidate h to test by a
/// direct gcd computation.
pub fn shift_gcd_spectrum(f: &UPoly, g: &UPoly, m: u32, q: &QParam) -> Result<Vec<i64>> {
    assert!(m >= 1);
    if f.is_constant() || g.is_constant() {
        return Ok(vec![]);
    }
    // Strip powers of x: x is fixed (up to scale) by the substitution, so a
    // common factor of x exists for every h. The caller never passes such
    // inputs; guard by handling it explicitly.
    let of = f.ord();
    let og = g.ord();
    let f = f.div_xk(of);
    let g = g.div_xk(og);
    let mut out: Vec<i64> = Vec::new();
    if of > 0 && og > 0 {
        // x divides both for all h — represent that by every candidate below
        // plus h=0; callers treating x-powers separately never hit this.
        out.push(0);
    }
    if f.is_constant() || g.is_constant() {
        out.sort_unstable();
        out.dedup();
        return Ok(out);
    }
    // Root-magnitude windows from Cauchy bounds (roots are nonzero now).
    let (lof, hif) = cauchy_bounds(&f);
    let (log, hig) = cauchy_bounds(&g);
    // gcd(f(x), g(q^{hm}x)) ≠ 1 needs a nonzero α with f(α)=0, g(q^{hm}α)=0:
    // lo(g) ≤ |q|^{hm} |α| ≤ hi(g) and lo(f) ≤ |α| ≤ hi(f), so
    // lo(g)/hi(f) ≤ |q|^{hm} ≤ hi(g)/lo(f).
    let qa = q.value().abs();
    let lo_ratio = &log / &hif;
    let hi_ratio = &hig / &lof;
    let (hmin, hmax) = exponent_window(&qa, &lo_ratio, &hi_ratio, m as i64)?;
    for h in hmin.max(0)..=hmax {
        let shifted = g.scale_x(&q.pow(h * m as i64));
        if f.gcd(&shifted).deg() > 0 {
            out.push(h);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// (lo, hi) with every (nonzero) root μ of p satisfying lo ≤ |μ| ≤ hi:
/// hi = 1 + max|c_i/c_n|, lo = 1/(1 + max|c_i/c_0|).
fn cauchy_bounds(p: &UPoly) -> (Rat, Rat) {
    let cs = p.coeffs();
    let lead = cs.last().unwrap().abs();
    let low = cs.first().unwrap().abs();
    let mut mx_hi = Rat::zero();
    let mut mx_lo = Rat::zero();
    for (i, c) in cs.iter().enumerate() {
        let a = c.abs();
        if i + 1 < cs.len() {
            let r = &a / &lead;
            if r > mx_hi {
                mx_hi = r;
            }
        }
        if i > 0 {
            let r = &a / &low;
            if r > mx_lo {
                mx_lo = r;
            }
        }
    }
    let one = Rat::one();
    (
        (&one + mx_lo).recip(),
        &one + mx_hi,
    )
}

/// Integer window [hmin, hmax] with lo ≤ |q|^{h·m} ≤ hi possible; |q| ≠ 1.
fn exponent_window(qabs: &Rat, lo: &Rat, hi: &Rat, m: i64) -> Result<(i64, i64)> {
    if lo > hi {
        return Ok((0, -1));
    }
    // Solve |q|^e ∈ [lo, hi] for integer e, then divide by m.
    let grows = *qabs > Rat::one();
    let mut emin = 0i64;
    let mut emax = 0i64;
    // Walk outward; the window is tiny in practice (spans of the coefficient
    // magnitudes), but cap the walk to keep termination obvious.
    let cap = 4096i64;
    // Smallest e with |q|^e >= lo.
    let mut e = 0i64;
    let mut val = Rat::one();
    if grows {
        while &val < lo && e < cap {
            val = val * qabs;
            e += 1;
        }
        emin = e;
        while &val <= hi && e < cap {
            val = val * qabs;
            e += 1;
        }
        emax = e - 1;
        if emin == 0 {
            // extend downward while still >= lo
            let mut v = Rat::one();
            let mut d = 0i64;
            loop {
                let nv = &v / qabs;
                if &nv < lo || d <= -cap {
                    break;
                }
                v = nv;
                d -= 1;
            }
            emin = d;
        }
    } else {
        // |q| < 1: |q|^e decreases in e; mirror via the reciprocal.
        let (a, b) = exponent_window(&qabs.recip(), lo, hi, 1)?;
        emin = -b;
        emax = -a;
    }
    if emax - emin > 2 * cap {
        return Err(Error::Internal("exponent window overflow".into()));
    }
    // h ranges over integers with hm in [emin, emax].
    let hmin = div_ceil(emin, m);
    let hmax = div_floor(emax, m);
    Ok((hmin, hmax))
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// The m-fold q-Gosper form of b: r(x) = b(x)/b(q^m x) = (A/B)·(C(q^m x)/C(x))
/// with gcd(A(x), B(q^{hm}x)) = 1 for all h ≥ 0. B and C are monic.
pub fn m_fold_gosper(b: &UPoly, m: u32, q: &QParam) -> Result<GosperTriple> {
    assert!(m >= 1);
    if b.is_zero() {
        return Err(Error::Domain("q-Gosper form of zero".into()));
    }
    // Split off the power of x: for b = x^k u, the ratio
    // x^k/(q^m x)^k = q^{-mk} is a unit absorbed into A.
    let k = b.ord();
    let u = b.div_xk(k);
    let unit = pow_rat(q.value(), -(m as i64) * k as i64);
    let mut a = u.clone();
    let mut bb = u.scale_x(&q.pow(m as i64));
    // Cancel the content so A, B start coprime as far as gcd goes later.
    let mut c = UPoly::one();
    // Peel candidate h ascending; after removing s_h the spectrum of the
    // remaining pair only shrinks.
    let spectrum = shift_gcd_spectrum(&a, &bb, m, q)?;
    for h in spectrum {
        let s = a.gcd(&bb.scale_x(&q.pow(h * m as i64)));
        if s.deg() <= 0 {
            continue;
        }
        a = a.exact_div(&s);
        bb = bb.exact_div(&s.scale_x(&q.pow(-h * m as i64)));
        for i in 1..=h {
            c = c.mul(&s.scale_x(&q.pow(-i * m as i64)));
        }
    }
    // Normalize: B and C monic, all units into A.
    let (ub, bb) = bb.monic();
    let (uc, c) = c.monic();
    // C appears as C(q^m x)/C(x): its unit cancels; B's unit divides A.
    let _ = uc;
    let a = a.scale(&(unit / ub));
    let triple = GosperTriple { a, b: bb, c, m };
    debug_assert!(verify_gosper(b, &triple, q));
    Ok(triple)
}

/// Check b(x)/b(q^m x) = (A/B)·(C(q^m x)/C(x)) and the gcd condition.
pub fn verify_gosper(b: &UPoly, t: &GosperTriple, q: &QParam) -> bool {
    let lhs_num = b.mul(&t.b).mul(&t.c);
    let rhs_num = b
        .scale_x(&q.pow(t.m as i64))
        .mul(&t.a)
        .mul(&t.c.scale_x(&q.pow(t.m as i64)));
    if lhs_num != rhs_num {
        return false;
    }
    match shift_gcd_spectrum(&t.a, &t.b, t.m, q) {
        Ok(sp) => sp.is_empty(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn q2() -> QParam {
        QParam::new(rat_int(2)).unwrap()
    }

    #[test]
    fn spectrum_direct() {
        let q = q2();
        // f = x - 2, g = x - 1: g(q^h x) has root 2^{-h}; common root with f at
        // 2 = 2^{-h}·? No: root of g(q^h x) is x = 1/2^h; equals 2 only for h = -1.
        let f = UPoly::new(vec![rat_int(-2), rat_int(1)]);
        let g = UPoly::new(vec![rat_int(-1), rat_int(1)]);
        assert_eq!(shift_gcd_spectrum(&f, &g, 1, &q).unwrap(), Vec::<i64>::new());
        // f = x - 1, g = x - 2: g(q^h x) root = 2^{1-h}; equals 1 at h = 1.
        assert_eq!(shift_gcd_spectrum(&g, &f, 1, &q).unwrap(), vec![1]);
        // h = 0 included: f = g = x - 1.
        assert_eq!(shift_gcd_spectrum(&g.clone(), &g, 1, &q).unwrap(), vec![0]);
        // m = 2: gcd(x-1, (x-4)(q^{2h}x)) nontrivial at h = 1 only.
        let g4 = UPoly::new(vec![rat_int(-4), rat_int(1)]);
        assert_eq!(shift_gcd_spectrum(&g, &g4, 2, &q).unwrap(), vec![1]);
    }

    #[test]
    fn gosper_of_x_plus_one() {
        let q = q2();
        // b = x + 1: b(x)/b(qx) = (x+1)/(2x+1); A = x+1, B = x+1/2 monic,
        // unit folded into A.
        let b = UPoly::new(vec![rat_int(1), rat_int(1)]);
        let t = m_fold_gosper(&b, 1, &q).unwrap();
        assert!(verify_gosper(&b, &t, &q));
        assert!(t.c.is_one());
        // A/B = (x+1)/(2x+1) as a rational function: cross-multiply.
        let lhs = t.a.mul(&UPoly::new(vec![rat_int(1), rat_int(2)]));
        let rhs = t.b.mul(&UPoly::new(vec![rat_int(1), rat_int(1)]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gosper_with_nontrivial_c() {
        let q = q2();
        // b = (x-1)(x-4): the ratio has a shift-gcd at h = 1, so C ≠ 1.
        let b = UPoly::new(vec![rat_int(4), rat_int(-5), rat_int(1)]);
        let t = m_fold_gosper(&b, 1, &q).unwrap();
        assert!(verify_gosper(&b, &t, &q));
        assert!(t.c.deg() >= 1);
    }

    #[test]
    fn gosper_monomial() {
        let q = q2();
        // b = x^3: ratio = q^{-3}, A = q^{-3}, B = C = 1.
        let b = UPoly::new(vec![rat_int(0), rat_int(0), rat_int(0), rat_int(1)]);
        let t = m_fold_gosper(&b, 1, &q).unwrap();
        assert!(verify_gosper(&b, &t, &q));
        assert!(t.b.is_one() && t.c.is_one());
        assert_eq!(t.a, UPoly::constant(rat(1, 8)));
    }

    #[test]
    fn gosper_m2() {
        let q = q2();
        let b = UPoly::new(vec![rat_int(1), rat_int(0), rat_int(1)]); // x^2+1
        let t = m_fold_gosper(&b, 2, &q).unwrap();
        assert!(verify_gosper(&b, &t, &q));
        assert_eq!(t.m, 2);
    }

    #[test]
    fn gosper_fractional_q() {
        let q = QParam::new(rat(3, 2)).unwrap();
        let b = UPoly::new(vec![rat_int(1), rat_int(1)]).mul(&UPoly::new(vec![
            rat(3, 2),
            rat_int(1),
        ]));
        let t = m_fold_gosper(&b, 1, &q).unwrap();
        assert!(verify_gosper(&b, &t, &q));
    }
}
