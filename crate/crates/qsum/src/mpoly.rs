//! Sparse multivariate polynomials over Q with the lex order x ≺ y,
//! the q-shift action, gcd and resultants.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rat::{pow_rat, QParam, Rat};
use crate::upoly::UPoly;
use crate::{Error, Result};

/// Variable indices for the bivariate case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
        }
    }

    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// A monomial exponent vector. Ordered lexicographically with the *last*
/// variable most significant, so with variables [x, y] this is the pure lex
/// order with x ≺ y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono(pub Vec<u32>);

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        for i in (0..self.0.len()).rev() {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The operator q^vpow · τ₁^{e₁}···τₙ^{eₙ}; composition adds componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftMonomial {
    pub vpow: i64,
    pub exps: Vec<i64>,
}

impl ShiftMonomial {
    pub fn identity(nvars: usize) -> Self {
        ShiftMonomial {
            vpow: 0,
            exps: vec![0; nvars],
        }
    }

    pub fn new(vpow: i64, exps: Vec<i64>) -> Self {
        ShiftMonomial { vpow, exps }
    }

    /// τx^{ex} τy^{ey} with scalar q^{vpow}, for the bivariate case.
    pub fn xy(vpow: i64, ex: i64, ey: i64) -> Self {
        ShiftMonomial {
            vpow,
            exps: vec![ex, ey],
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        ShiftMonomial {
            vpow: self.vpow + other.vpow,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        ShiftMonomial {
            vpow: -self.vpow,
            exps: self.exps.iter().map(|e| -e).collect(),
        }
    }
}

/// Sparse multivariate polynomial over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Mono, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; nvars]), c);
        }
        p
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0u32; nvars];
        exps[idx] = 1;
        MPoly::from_terms(nvars, vec![(exps, Rat::one())])
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, Rat)>) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Mono(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(m, c)| m.0.iter().all(|&e| e == 0) && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1
                && self.terms.keys().next().unwrap().0.iter().all(|&e| e == 0))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn deg(&self, var: usize) -> isize {
        self.terms
            .keys()
            .map(|m| m.0[var] as isize)
            .max()
            .unwrap_or(-1)
    }

    pub fn total_deg(&self) -> isize {
        self.terms
            .keys()
            .map(|m| m.0.iter().map(|&e| e as isize).sum())
            .max()
            .unwrap_or(-1)
    }

    /// Lowest exponent of `var` over all terms (0 for the zero polynomial).
    pub fn ord(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).min().unwrap_or(0)
    }

    /// Leading (monomial, coefficient) in lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn lc_lex(&self) -> Rat {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// True when the lex-leading coefficient is 1.
    pub fn is_monic_lex(&self) -> bool {
        self.leading().map_or(false, |(_, c)| c.is_one())
    }

    /// (unit, monic polynomial) with self = unit * monic.
    pub fn monic_lex(&self) -> (Rat, Self) {
        if self.is_zero() {
            return (Rat::one(), self.clone());
        }
        let u = self.lc_lex();
        (u.clone(), self.scale(&u.recip()))
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e: Vec<u32> = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Mono(e), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, exps: &[u32], c: &Rat) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    let e: Vec<u32> = m.0.iter().zip(exps).map(|(a, b)| a + b).collect();
                    (Mono(e), a * c)
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = MPoly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact multivariate division; None when not exactly divisible.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = MPoly::zero(self.nvars);
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            if rm.0.iter().zip(&dm.0).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = rm.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect();
            let c = &rc / &dc;
            rem = rem.sub(&d.mul_term(&e, &c));
            quo.add_term(Mono(e), c);
        }
        Some(quo)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.exact_div(self).is_some()
    }

    /// Coefficient of var^k, as a polynomial with the same variable list
    /// (the extracted variable appears with exponent 0).
    pub fn coeff_of(&self, var: usize, k: u32) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut e = m.0.clone();
                e[var] = 0;
                out.add_term(Mono(e), c.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to one variable.
    pub fn lc_of(&self, var: usize) -> Self {
        let d = self.deg(var);
        if d < 0 {
            return MPoly::zero(self.nvars);
        }
        self.coeff_of(var, d as u32)
    }

    /// Substitute a rational value for one variable.
    pub fn eval_var(&self, var: usize, x: &Rat) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var];
            e[var] = 0;
            out.add_term(Mono(e), c * pow_rat(x, k as i64));
        }
        out
    }

    /// Substitute var -> var + c.
    pub fn translate_var(&self, var: usize, c: &Rat) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (m, coeff) in &self.terms {
            let k = m.0[var];
            // (v + c)^k via binomials.
            let mut binom = Rat::one();
            for i in 0..=k {
                // binom = C(k, i) computed incrementally.
                let mut e = m.0.clone();
                e[var] = k - i;
                out.add_term(Mono(e), coeff * &binom * pow_rat(c, i as i64));
                if i < k {
                    binom = binom * Rat::from_integer(BigInt::from(k - i))
                        / Rat::from_integer(BigInt::from(i + 1));
                }
            }
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] = k - 1;
            out.add_term(Mono(e), c * Rat::from_integer(BigInt::from(k)));
        }
        out
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(i, j);
            out.add_term(Mono(e), c.clone());
        }
        out
    }

    /// Divide every exponent of `var` by removing var^k.
    pub fn div_var_pow(&self, var: usize, k: u32) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            assert!(m.0[var] >= k);
            let mut e = m.0.clone();
            e[var] -= k;
            out.add_term(Mono(e), c.clone());
        }
        out
    }

    /// Coefficients with respect to y as univariate polynomials in x
    /// (bivariate only).
    pub fn coeffs_wrt_y(&self) -> Vec<UPoly> {
        assert_eq!(self.nvars, 2);
        let dy = self.deg(1).max(-1);
        let mut out = vec![vec![]; (dy + 1).max(0) as usize];
        for (m, c) in &self.terms {
            let (ex, ey) = (m.0[0] as usize, m.0[1] as usize);
            let row = &mut out[ey];
            if row.len() <= ex {
                row.resize(ex + 1, Rat::zero());
            }
            row[ex] = c.clone();
        }
        out.into_iter().map(UPoly::new).collect()
    }

    pub fn from_ycoeffs(coeffs: &[UPoly]) -> Self {
        let mut p = MPoly::zero(2);
        for (ey, up) in coeffs.iter().enumerate() {
            for (ex, c) in up.coeffs().iter().enumerate() {
                p.add_term(Mono(vec![ex as u32, ey as u32]), c.clone());
            }
        }
        p
    }

    /// View as a univariate polynomial in `var`; None if any other variable occurs.
    pub fn as_upoly(&self, var: usize) -> Option<UPoly> {
        let mut cs = vec![Rat::zero(); (self.deg(var) + 1).max(0) as usize];
        for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if i != var && e != 0 {
                    return None;
                }
            }
            cs[m.0[var] as usize] = c.clone();
        }
        Some(UPoly::new(cs))
    }

    pub fn from_upoly(p: &UPoly, var: usize, nvars: usize) -> Self {
        let mut out = MPoly::zero(nvars);
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0u32; nvars];
            e[var] = i as u32;
            out.add_term(Mono(e), c.clone());
        }
        out
    }

    /// Total order used to pick canonical orbit representatives:
    /// total degree, then lex on the exponent support, then the coefficient
    /// sequence.
    pub fn canon_cmp(&self, other: &Self) -> Ordering {
        match self.total_deg().cmp(&other.total_deg()) {
            Ordering::Equal => {}
            o => return o,
        }
        let a: Vec<_> = self.terms.iter().collect();
        let b: Vec<_> = other.terms.iter().collect();
        match a.len().cmp(&b.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        for ((ma, _), (mb, _)) in a.iter().zip(&b) {
            match ma.cmp(mb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for ((_, ca), (_, cb)) in a.iter().zip(&b) {
            match ca.cmp(cb) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

/// Apply q^{vpow}·τ^{exps} to a polynomial: substitutes each variable v by
/// q^{e_v} v and multiplies by q^{vpow}.
pub fn apply_shift_mpoly(f: &MPoly, sigma: &ShiftMonomial, q: &QParam) -> MPoly {
    assert_eq!(f.nvars(), sigma.exps.len());
    let mut out = MPoly::zero(f.nvars());
    for (m, c) in f.terms() {
        let mut e: i64 = sigma.vpow;
        for (i, &exp) in m.0.iter().enumerate() {
            e += sigma.exps[i] * exp as i64;
        }
        out.add_term(m.clone(), c * q.pow(e));
    }
    out
}

/// Content of `f` with respect to `var`: the gcd of its coefficients, which
/// are polynomials in the remaining variables.
fn content_wrt(f: &MPoly, var: usize) -> MPoly {
    let d = f.deg(var);
    let mut g = MPoly::zero(f.nvars());
    for k in 0..=d.max(0) as u32 {
        let c = f.coeff_of(var, k);
        if !c.is_zero() {
            g = mpoly_gcd(&g, &c);
        }
        if g.is_one() {
            break;
        }
    }
    g
}

fn prim_wrt(f: &MPoly, var: usize) -> MPoly {
    if f.is_zero() {
        return f.clone();
    }
    let c = content_wrt(f, var);
    f.exact_div(&c).expect("content divides")
}

/// Pseudo-remainder of f by g with respect to var.
fn prem(f: &MPoly, g: &MPoly, var: usize) -> MPoly {
    let dg = g.deg(var);
    assert!(dg >= 0);
    let lcg = g.lc_of(var);
    let mut r = f.clone();
    while !r.is_zero() && r.deg(var) >= dg {
        let dr = r.deg(var);
        let lcr = r.lc_of(var);
        // r := lcg * r - lcr * var^{dr-dg} * g
        let mut shift = vec![0u32; f.nvars()];
        shift[var] = (dr - dg) as u32;
        r = r
            .mul(&lcg)
            .sub(&g.mul(&lcr).mul_term(&shift, &Rat::one()));
    }
    r
}

/// Monic gcd of multivariate polynomials; gcd(0,0) = 0.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic_lex().1;
    }
    if b.is_zero() {
        return a.monic_lex().1;
    }
    // Pick the highest variable actually present in either operand.
    let var = (0..a.nvars())
        .rev()
        .find(|&v| a.deg(v) > 0 || b.deg(v) > 0);
    let var = match var {
        None => return MPoly::one(a.nvars()), // both constants
        Some(v) => v,
    };
    if a.deg(var) <= 0 || b.deg(var) <= 0 {
        // One operand is free of `var`: gcd(content, other-content).
        let (ca, cb) = (content_wrt(a, var), content_wrt(b, var));
        return mpoly_gcd(&ca, &cb);
    }
    let (ca, cb) = (content_wrt(a, var), content_wrt(b, var));
    let cg = mpoly_gcd(&ca, &cb);
    let mut r0 = prim_wrt(a, var);
    let mut r1 = prim_wrt(b, var);
    if r0.deg(var) < r1.deg(var) {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let r = prem(&r0, &r1, var);
        r0 = r1;
        r1 = if r.is_zero() { r } else { prim_wrt(&r, var) };
    }
    cg.mul(&prim_wrt(&r0, var)).monic_lex().1
}

/// Resultant with respect to `var`, pinned to the Sylvester determinant sign
/// convention, computed by fraction-free (Bareiss) elimination.
pub fn resultant(a: &MPoly, b: &MPoly, var: usize) -> Result<MPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("resultant of zero polynomial".into()));
    }
    let n = a.deg(var);
    let m = b.deg(var);
    let nv = a.nvars();
    if n <= 0 && m <= 0 {
        return Ok(MPoly::one(nv));
    }
    if n < 0 || m < 0 {
        return Ok(MPoly::one(nv));
    }
    let n = n as usize;
    let m = m as usize;
    if n == 0 {
        // Res(a, b) = a^deg(b)
        return Ok(a.pow(m as u32));
    }
    if m == 0 {
        return Ok(b.pow(n as u32));
    }
    let size = n + m;
    let acoef: Vec<MPoly> = (0..=n).map(|k| a.coeff_of(var, k as u32)).collect();
    let bcoef: Vec<MPoly> = (0..=m).map(|k| b.coeff_of(var, k as u32)).collect();
    let mut mat = vec![vec![MPoly::zero(nv); size]; size];
    for i in 0..m {
        for k in 0..=n {
            mat[i][i + n - k] = acoef[k].clone();
        }
    }
    for i in 0..n {
        for k in 0..=m {
            mat[m + i][i + m - k] = bcoef[k].clone();
        }
    }
    // Bareiss fraction-free elimination.
    let mut sign = 1i32;
    let mut prev = MPoly::one(nv);
    for k in 0..size - 1 {
        if mat[k][k].is_zero() {
            let swap = (k + 1..size).find(|&i| !mat[i][k].is_zero());
            match swap {
                None => return Ok(MPoly::zero(nv)),
                Some(i) => {
                    mat.swap(k, i);
                    sign = -sign;
                }
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = mat[i][j]
                    .mul(&mat[k][k])
                    .sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss division is exact");
            }
            mat[i][k] = MPoly::zero(nv);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    Ok(if sign < 0 { det.neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, QParam};

    fn xy() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    #[test]
    fn lex_leading_is_y_major() {
        let (x, y) = xy();
        let p = x.pow(2).sub(&y.pow(2)); // x^2 - y^2
        let (m, c) = p.leading().unwrap();
        assert_eq!(m.0, vec![0, 2]);
        assert_eq!(*c, rat_int(-1));
    }

    #[test]
    fn gcd_examples() {
        let (x, y) = xy();
        let one = MPoly::one(2);
        // ((x+y)^2 (x+1), (x+y)(x-1)) -> x+y
        let a = x.add(&y).pow(2).mul(&x.add(&one));
        let b = x.add(&y).mul(&x.sub(&one));
        assert_eq!(mpoly_gcd(&a, &b), x.add(&y));
        // coprime
        let c = x.add(&y.scale(&rat_int(2)));
        assert!(mpoly_gcd(&x.add(&y), &c).is_one());
        // gcd with zero
        let d = x.pow(2).add(&y.pow(2));
        assert_eq!(mpoly_gcd(&MPoly::zero(2), &d), d);
    }

    #[test]
    fn gcd_divides_inputs() {
        let (x, y) = xy();
        let one = MPoly::one(2);
        let cases = vec![
            (x.add(&y).pow(3), x.add(&y).mul(&y.sub(&one))),
            (x.pow(2).add(&y.pow(2)).mul(&x.add(&y)), x.pow(2).add(&y.pow(2))),
        ];
        for (a, b) in cases {
            let g = mpoly_gcd(&a, &b);
            assert!(g.divides(&a));
            assert!(g.divides(&b));
        }
    }

    #[test]
    fn resultant_examples() {
        let (x, y) = xy();
        // Res_y(y+x, -y+x) = 2x
        let r = resultant(&y.add(&x), &y.neg().add(&x), 1).unwrap();
        assert_eq!(r, x.scale(&rat_int(2)));
        // Res_y(y-x, y-x) = 0
        let r = resultant(&y.sub(&x), &y.sub(&x), 1).unwrap();
        assert!(r.is_zero());
        // Res_x(x-1, x-2) = -1 with the Sylvester convention b(root of a)
        let one = MPoly::one(2);
        let r = resultant(&x.sub(&one), &x.sub(&one.scale(&rat_int(2))), 0).unwrap();
        assert_eq!(r, MPoly::constant(2, rat_int(-1)));
    }

    #[test]
    fn shift_examples() {
        let (x, y) = xy();
        let q = QParam::new(rat_int(2)).unwrap();
        // τx (x+y) with q=2 -> 2x+y
        let f = x.add(&y);
        let s = apply_shift_mpoly(&f, &ShiftMonomial::xy(0, 1, 0), &q);
        assert_eq!(s, x.scale(&rat_int(2)).add(&y));
        // τy y^2 -> q^2 y^2
        let s = apply_shift_mpoly(&y.pow(2), &ShiftMonomial::xy(0, 0, 1), &q);
        assert_eq!(s, y.pow(2).scale(&rat_int(4)));
        // q τx τy^{-1} (x^2+y^2) with q=2 -> 8x^2 + y^2/2
        let f = x.pow(2).add(&y.pow(2));
        let s = apply_shift_mpoly(&f, &ShiftMonomial::xy(1, 1, -1), &q);
        assert_eq!(
            s,
            x.pow(2).scale(&rat_int(8)).add(&y.pow(2).scale(&crate::rat::rat(1, 2)))
        );
    }

    #[test]
    fn shift_composition_is_group_action() {
        let (x, y) = xy();
        let q = QParam::new(crate::rat::rat(3, 2)).unwrap();
        let f = x.pow(2).mul(&y).add(&y.pow(3)).add(&MPoly::one(2));
        let s1 = ShiftMonomial::xy(1, 2, -1);
        let s2 = ShiftMonomial::xy(-2, -1, 3);
        let a = apply_shift_mpoly(&apply_shift_mpoly(&f, &s1, &q), &s2, &q);
        let b = apply_shift_mpoly(&f, &s1.compose(&s2), &q);
        assert_eq!(a, b);
    }

    #[test]
    fn translate_var_binomial() {
        let (x, y) = xy();
        let p = x.pow(2).mul(&y); // x^2 y
        let t = p.translate_var(0, &rat_int(1)); // (x+1)^2 y
        let expect = x.pow(2).add(&x.scale(&rat_int(2))).add(&MPoly::one(2)).mul(&y);
        assert_eq!(t, expect);
    }
}
