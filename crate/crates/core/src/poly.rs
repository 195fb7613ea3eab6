//! Dense univariate polynomials over Z and Q, lowest degree first.
//!
//! Everything here is exact: integer gcds go through primitive pseudo-remainder
//! sequences, and real-root counting uses Sturm chains with rational endpoints.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Integer polynomial; invariant: no trailing zero coefficient (zero = empty).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Rational polynomial; same coefficient order and normalization as `IntPoly`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// x^n
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        IntPoly::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Rat::from_bigint(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of all coefficients, carrying the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Divides out the content; result has positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self
            .to_rat_poly()
            .divrem(&d.to_rat_poly())
            .expect("nonzero divisor");
        assert!(r.is_zero(), "inexact integer polynomial division");
        let (qi, den) = q.clear_denominators();
        assert!(den.is_one(), "inexact integer polynomial division");
        qi
    }

    /// True if `d` divides `self` exactly over Z.
    pub fn divides_exactly(&self, d: &Self) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        match self.to_rat_poly().divrem(&d.to_rat_poly()) {
            Ok((q, r)) => {
                if !r.is_zero() {
                    return false;
                }
                let (_, den) = q.clear_denominators();
                den.is_one()
            }
            Err(_) => false,
        }
    }

    /// x^deg * p(1/x): coefficient order reversed, trailing zeros stripped.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// Self-reciprocal up to sign (palindromic or anti-palindromic).
    pub fn is_self_reciprocal(&self) -> bool {
        let r = self.reciprocal();
        r == *self || r == self.neg()
    }

    pub fn is_palindromic(&self) -> bool {
        self.reciprocal() == *self
    }

    /// p(x + shift) by repeated Horner expansion.
    pub fn compose_shift(&self, shift: &BigInt) -> Self {
        // Horner: p(x+s) accumulated from the top coefficient down.
        let mut acc = IntPoly::zero();
        let xs = IntPoly::new(vec![shift.clone(), BigInt::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&xs).add(&IntPoly::new(vec![c.clone()]));
        }
        acc
    }

    pub fn to_rat_poly(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rat::from_bigint(c.clone()))
                .collect(),
        )
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn neg(&self) -> Self {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rat::from_int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; errors on zero divisor.
    pub fn divrem(&self, d: &Self) -> Result<(RatPoly, RatPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let lead_inv = d.leading().recip()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quo = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            quo[i - dd] = q.clone();
            for j in 0..=dd {
                let t = &q * &d.coeff(j);
                rem[i - dd + j] -= &t;
            }
        }
        Ok((RatPoly::new(quo), RatPoly::new(rem)))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return RatPoly::zero();
        }
        self.scale(&self.leading().recip().expect("nonzero lead"))
    }

    /// Smallest integer multiple: returns (primitive-with-positive-lead poly scaled
    /// by denominators, common denominator used). `p == int_poly / den * content...`
    /// Precisely: `self * den` has integer coefficients equal to the first component.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let scaled = self.scale(&Rat::from_bigint(den.clone()));
        let ints = scaled
            .coeffs
            .iter()
            .map(|c| c.to_bigint().expect("cleared denominator"))
            .collect();
        (IntPoly::new(ints), den)
    }

    /// All coefficients integral?
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if !self.is_integer() {
            return None;
        }
        Some(IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.to_bigint().unwrap())
                .collect(),
        ))
    }
}

/// Primitive gcd over Z with positive leading coefficient, by a primitive
/// pseudo-remainder sequence. `gcd(p, 0)` is the primitive part of `p`.
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdUndefined);
    }
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    Ok(a.primitive_part())
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("nonzero divisor");
    let mut r = a.clone();
    let lb = b.leading();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let shift = dr - db;
        let lr = r.leading();
        // r <- lb * r - lr * x^shift * b
        let mut scaled = r.scale(&lb);
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(b.coeffs.iter().map(|c| c * &lr));
        scaled = scaled.sub(&IntPoly::new(sub));
        r = scaled;
    }
    r
}

/// Number of sign variations in a sequence, zeros skipped.
fn sign_variations(signs: &[i32]) -> usize {
    let mut count = 0;
    let mut last = 0;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm chain of `p`: p, p', then negated remainders, normalized to primitive
/// integer polynomials (positive scaling only, which preserves all signs).
fn sturm_chain(p: &RatPoly) -> Vec<IntPoly> {
    let (p0, _) = p.clear_denominators();
    let mut chain = vec![p0.clone()];
    let p1 = p0.derivative();
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let a = chain[n - 2].to_rat_poly();
        let b = chain[n - 1].to_rat_poly();
        let (_, r) = a.divrem(&b).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        let (mut ri, _) = r.neg().clear_denominators();
        // positive normalization only: divide by |content|
        let c = ri.content().abs();
        if !c.is_one() && !c.is_zero() {
            ri = IntPoly::new(ri.coeffs().iter().map(|x| x / &c).collect());
        }
        chain.push(ri);
    }
    chain
}

/// Exact count of distinct real roots of `p` in the open interval (lo, hi).
///
/// Endpoints must not be roots; callers deflate shared factors or nudge the
/// endpoint instead of this function guessing for them.
pub fn sturm_real_roots_in_interval(p: &RatPoly, lo: &Rat, hi: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::InvalidInterval);
    }
    if p.eval(lo).is_zero() || p.eval(hi).is_zero() {
        return Err(Error::EndpointIsRoot);
    }
    let chain = sturm_chain(p);
    let at = |x: &Rat| -> Vec<i32> { chain.iter().map(|q| q.eval_rat(x).signum()).collect() };
    let vlo = sign_variations(&at(lo));
    let vhi = sign_variations(&at(hi));
    Ok(vlo.saturating_sub(vhi))
}

/// For palindromic `q` of even degree 2m, the degree-m polynomial h with
/// q(x) = x^m h(x + 1/x). Roots of q on the unit circle (other than ±1)
/// correspond exactly to real roots of h in (-2, 2).
pub fn palindromic_halving(q: &IntPoly) -> Result<IntPoly> {
    if !q.is_palindromic() {
        return Err(Error::Schema("polynomial is not palindromic".into()));
    }
    let deg = q.degree().ok_or(Error::ZeroPolynomial)?;
    if deg % 2 != 0 {
        return Err(Error::OddSize);
    }
    let m = deg / 2;
    // x^j + x^{-j} = T_j(y) with T_0 = 2, T_1 = y, T_{j+1} = y T_j - T_{j-1}
    let mut t_prev = IntPoly::from_i64(&[2]);
    let mut t_cur = IntPoly::from_i64(&[0, 1]);
    let mut h = IntPoly::new(vec![q.coeff(m)]);
    for j in 1..=m {
        h = h.add(&t_cur.scale(&q.coeff(m + j)));
        let y = IntPoly::from_i64(&[0, 1]);
        let t_next = y.mul(&t_cur).sub(&t_prev);
        t_prev = t_cur;
        t_cur = t_next;
    }
    Ok(h)
}

fn fmt_poly<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[C],
    is_zero: impl Fn(&C) -> bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let s = c.to_string();
        let (sign, mag) = match s.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", s),
        };
        if first {
            if sign == "-" {
                write!(f, "-")?;
            }
            first = false;
        } else {
            write!(f, " {} ", sign)?;
        }
        match i {
            0 => write!(f, "{mag}")?,
            _ => {
                if mag != "1" {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, |c| c.is_zero())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, |c| c.is_zero())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratq};

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn gcd_common_linear_factor() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let g = poly_gcd(&ip(&[-1, 0, 1]), &ip(&[-1, 1])).unwrap();
        assert_eq!(g, ip(&[-1, 1]));
    }

    #[test]
    fn gcd_of_coprime_cubic_and_quadratic() {
        // gcd(x^3 - 3x + 1, x^2 - 3x + 1) = 1 (Euclidean algorithm by hand:
        // rem 1: x^3-3x+1 = (x+3)(x^2-3x+1) + (5x - 2); rem 2 is a nonzero constant)
        let g = poly_gcd(&ip(&[1, -3, 0, 1]), &ip(&[1, -3, 1])).unwrap();
        assert_eq!(g, ip(&[1]));
    }

    #[test]
    fn gcd_with_zero_is_primitive_part() {
        let g = poly_gcd(&ip(&[-4, 0, 2]), &IntPoly::zero()).unwrap();
        assert_eq!(g, ip(&[-2, 0, 1]));
        let g = poly_gcd(&IntPoly::zero(), &ip(&[0, -3])).unwrap();
        assert_eq!(g, ip(&[0, 1]));
        assert!(poly_gcd(&IntPoly::zero(), &IntPoly::zero()).is_err());
    }

    #[test]
    fn sturm_sqrt2_in_unit_window() {
        let p = RatPoly::from_i64(&[-2, 0, 1]);
        let n = sturm_real_roots_in_interval(&p, &rat(0), &rat(2)).unwrap();
        assert_eq!(n, 1);
    }

    #[test]
    fn sturm_three_roots_of_the_cubic() {
        // all roots of x^3 - 3x + 1 lie in (-2, 2); count checked against the
        // closed forms 2cos(2pi/9), 2cos(4pi/9), 2cos(8pi/9)
        let p = RatPoly::from_i64(&[1, -3, 0, 1]);
        assert_eq!(
            sturm_real_roots_in_interval(&p, &rat(-2), &rat(2)).unwrap(),
            3
        );
    }

    #[test]
    fn sturm_no_real_roots() {
        let p = RatPoly::from_i64(&[1, 0, 1]);
        assert_eq!(
            sturm_real_roots_in_interval(&p, &rat(-10), &rat(10)).unwrap(),
            0
        );
    }

    #[test]
    fn sturm_rejects_endpoint_root() {
        let p = RatPoly::from_i64(&[-1, 0, 1]);
        assert!(matches!(
            sturm_real_roots_in_interval(&p, &rat(1), &rat(3)),
            Err(Error::EndpointIsRoot)
        ));
    }

    #[test]
    fn sturm_multiple_roots_count_distinct() {
        // (x-1)^2 (x+2): distinct roots 1 and -2
        let p = ip(&[-1, 1]).mul(&ip(&[-1, 1])).mul(&ip(&[2, 1]));
        let n = sturm_real_roots_in_interval(&p.to_rat_poly(), &rat(-5), &rat(5)).unwrap();
        assert_eq!(n, 2);
    }

    #[test]
    fn sturm_rational_endpoints() {
        let p = RatPoly::from_i64(&[-2, 0, 1]);
        let n = sturm_real_roots_in_interval(&p, &ratq(7, 5), &ratq(3, 2)).unwrap();
        assert_eq!(n, 1); // sqrt(2) in (1.4, 1.5)
    }

    #[test]
    fn divrem_exactness() {
        let a = RatPoly::from_i64(&[-3, 10, -6, 1]); // x^3 - 6x^2 + 10x - 3
        let b = RatPoly::from_i64(&[-3, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, RatPoly::from_i64(&[1, -3, 1]));
    }

    #[test]
    fn reciprocal_and_palindromic() {
        let p = ip(&[1, -3, 0, 1]); // x^3 - 3x + 1
        assert_eq!(p.reciprocal(), ip(&[1, 0, -3, 1]));
        assert!(!p.is_palindromic());
        assert!(ip(&[1, -3, 1]).is_palindromic());
        assert!(ip(&[1, 1, 1]).is_palindromic());
    }

    #[test]
    fn halving_of_phi9() {
        // x^6 + x^3 + 1 -> y^3 - 3y + 1
        let h = palindromic_halving(&ip(&[1, 0, 0, 1, 0, 0, 1])).unwrap();
        assert_eq!(h, ip(&[1, -3, 0, 1]));
    }

    #[test]
    fn halving_of_quadratics() {
        assert_eq!(palindromic_halving(&ip(&[1, -3, 1])).unwrap(), ip(&[-3, 1]));
        assert_eq!(palindromic_halving(&ip(&[1, 1, 1])).unwrap(), ip(&[1, 1]));
    }

    #[test]
    fn compose_shift_basic() {
        // (x+1)^3 - 3(x+1) + 1 = x^3 + 3x^2 - 1
        let p = ip(&[1, -3, 0, 1]);
        assert_eq!(p.compose_shift(&BigInt::from(1)), ip(&[-1, 0, 3, 1]));
    }

    #[test]
    fn display_readable() {
        assert_eq!(ip(&[1, -3, 0, 1]).to_string(), "x^3 - 3x + 1");
        assert_eq!(ip(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
