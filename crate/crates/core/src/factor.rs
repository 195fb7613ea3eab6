//! Factorization of integer polynomials.
//!
//! The pipeline is squarefree reduction, factorization modulo a good small
//! prime (distinct-degree plus Cantor-Zassenhaus splitting), quadratic Hensel
//! lifting past a Landau-Mignotte bound, and subset recombination. Inputs here
//! are desk scale (degree <= 9 or so), so clarity wins over asymptotics.
//! A Kronecker interpolation fallback covers small-degree factors in case the
//! prime search is ever exhausted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, IntPoly, RatPoly};
use crate::scalar::Rat;

/// Result of [`factor_over_z`]: `p = content * prod factor_i ^ mult_i`,
/// each factor primitive and irreducible with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::new(vec![self.content.clone()]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Factors a nonzero integer polynomial into irreducibles over Z.
pub fn factor_over_z(p: &IntPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = p.content();
    let prim = p.primitive_part();
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();

    // strip powers of x first so every later stage sees a nonzero constant term
    let mut rest = prim;
    let x_mult = rest
        .coeffs()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    if x_mult > 0 {
        let shifted: Vec<BigInt> = rest.coeffs()[x_mult..].to_vec();
        rest = IntPoly::new(shifted);
        factors.push((IntPoly::monomial(1), x_mult as u32));
    }

    if rest.degree().unwrap_or(0) > 0 {
        let deriv = rest.derivative();
        let g = poly_gcd(&rest, &deriv)?;
        let squarefree = rest.div_exact(&g);
        for q in factor_squarefree(&squarefree)? {
            let mut mult = 0u32;
            let mut tmp = rest.clone();
            while tmp.degree() >= q.degree() && tmp.divides_exactly(&q) {
                tmp = tmp.div_exact(&q);
                mult += 1;
            }
            debug_assert!(mult >= 1);
            factors.push((q, mult));
        }
    }

    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let out = Factorization { content, factors };
    debug_assert_eq!(out.expand(), *p);
    Ok(out)
}

/// True iff `p` is irreducible over Q (a single factor of multiplicity one,
/// up to content). Degree must be at least 1.
pub fn is_irreducible_over_q(p: &IntPoly) -> Result<bool> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => {
            let f = factor_over_z(p)?;
            Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
        }
    }
}

/// Factors a primitive squarefree polynomial with positive leading coefficient.
fn factor_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(vec![]);
    }
    if deg == 1 {
        return Ok(vec![f.clone()]);
    }

    // monicize: fm(y) = lc^(n-1) f(y/lc) is monic with the same splitting shape
    let lc = f.leading();
    let fm = monicize(f, &lc);

    let monic_factors = match zassenhaus_monic(&fm) {
        Some(fs) => fs,
        None => kronecker_factor(&fm),
    };

    // map factors of fm back to factors of f
    let mut out = Vec::new();
    let mut residual = f.clone();
    for g in monic_factors {
        let mapped = unmonicize(&g, &lc);
        debug_assert!(residual.divides_exactly(&mapped));
        residual = residual.div_exact(&mapped);
        out.push(mapped);
    }
    debug_assert_eq!(residual.degree(), Some(0));
    Ok(out)
}

fn monicize(f: &IntPoly, lc: &BigInt) -> IntPoly {
    // fm(y) = lc^(n-1) f(y/lc): coefficient of y^i is a_i * lc^(n-1-i)
    let n = f.degree().unwrap();
    let mut scaled = vec![BigInt::zero(); n + 1];
    scaled[n] = BigInt::one();
    let mut pow = BigInt::one();
    for i in (0..n).rev() {
        scaled[i] = f.coeff(i) * &pow;
        pow *= lc;
    }
    IntPoly::new(scaled)
}

fn unmonicize(g: &IntPoly, lc: &BigInt) -> IntPoly {
    // g(lc * x), then primitive part with positive lead
    let mut coeffs = Vec::with_capacity(g.coeffs().len());
    let mut pow = BigInt::one();
    for c in g.coeffs() {
        coeffs.push(c * &pow);
        pow *= lc;
    }
    IntPoly::new(coeffs).primitive_part()
}

// ---------------------------------------------------------------------------
// arithmetic in Fp[x] for small odd primes
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct Fp {
    p: i64,
}

impl Fp {
    fn add(self, a: i64, b: i64) -> i64 {
        (a + b).rem_euclid(self.p)
    }
    fn sub(self, a: i64, b: i64) -> i64 {
        (a - b).rem_euclid(self.p)
    }
    fn mul(self, a: i64, b: i64) -> i64 {
        ((a as i128 * b as i128).rem_euclid(self.p as i128)) as i64
    }
    fn inv(self, a: i64) -> i64 {
        // Fermat
        self.pow(a, self.p - 2)
    }
    fn pow(self, mut base: i64, mut e: i64) -> i64 {
        let mut acc = 1i64;
        base = base.rem_euclid(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// Dense polynomial over Fp, lowest degree first, no trailing zeros.
type PPoly = Vec<i64>;

fn pp_trim(mut v: PPoly) -> PPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pp_deg(v: &PPoly) -> isize {
    v.len() as isize - 1
}

fn pp_from_int(f: &IntPoly, fp: Fp) -> PPoly {
    let p = BigInt::from(fp.p);
    pp_trim(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(&p);
                r.to_string().parse::<i64>().unwrap()
            })
            .collect(),
    )
}

fn pp_add(a: &PPoly, b: &PPoly, fp: Fp) -> PPoly {
    let n = a.len().max(b.len());
    pp_trim(
        (0..n)
            .map(|i| fp.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

fn pp_sub(a: &PPoly, b: &PPoly, fp: Fp) -> PPoly {
    let n = a.len().max(b.len());
    pp_trim(
        (0..n)
            .map(|i| fp.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

fn pp_mul(a: &PPoly, b: &PPoly, fp: Fp) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fp.add(out[i + j], fp.mul(x, y));
        }
    }
    pp_trim(out)
}

fn pp_divrem(a: &PPoly, b: &PPoly, fp: Fp) -> (PPoly, PPoly) {
    let db = pp_deg(b);
    assert!(db >= 0, "division by zero polynomial");
    let lead_inv = fp.inv(*b.last().unwrap());
    let mut rem = a.clone();
    if pp_deg(&rem) < db {
        return (vec![], rem);
    }
    let mut quo = vec![0i64; rem.len() - b.len() + 1];
    for i in (db as usize..rem.len()).rev() {
        let q = fp.mul(rem[i], lead_inv);
        if q == 0 {
            continue;
        }
        quo[i - db as usize] = q;
        for (j, &bc) in b.iter().enumerate() {
            let idx = i - db as usize + j;
            rem[idx] = fp.sub(rem[idx], fp.mul(q, bc));
        }
    }
    (pp_trim(quo), pp_trim(rem))
}

fn pp_rem(a: &PPoly, b: &PPoly, fp: Fp) -> PPoly {
    pp_divrem(a, b, fp).1
}

fn pp_monic(a: &PPoly, fp: Fp) -> PPoly {
    match a.last() {
        None => vec![],
        Some(&l) if l == 1 => a.clone(),
        Some(&l) => {
            let inv = fp.inv(l);
            a.iter().map(|&c| fp.mul(c, inv)).collect()
        }
    }
}

fn pp_gcd(a: &PPoly, b: &PPoly, fp: Fp) -> PPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = pp_rem(&x, &y, fp);
        x = y;
        y = r;
    }
    pp_monic(&x, fp)
}

/// Extended gcd for coprime monic inputs: returns (s, t) with s*g + t*h = 1.
fn pp_bezout(g: &PPoly, h: &PPoly, fp: Fp) -> (PPoly, PPoly) {
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1): (PPoly, PPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (PPoly, PPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = pp_divrem(&r0, &r1, fp);
        let s = pp_sub(&s0, &pp_mul(&q, &s1, fp), fp);
        let t = pp_sub(&t0, &pp_mul(&q, &t1, fp), fp);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(pp_deg(&r0), 0, "bezout of non-coprime polynomials");
    let inv = fp.inv(r0[0]);
    let scale = |v: &PPoly| v.iter().map(|&c| fp.mul(c, inv)).collect::<PPoly>();
    (scale(&s0), scale(&t0))
}

fn pp_pow_mod(base: &PPoly, e: &BigInt, modulus: &PPoly, fp: Fp) -> PPoly {
    let mut acc: PPoly = vec![1];
    let mut b = pp_rem(base, modulus, fp);
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = pp_rem(&pp_mul(&acc, &b, fp), modulus, fp);
        }
        if i + 1 < bits {
            b = pp_rem(&pp_mul(&b, &b, fp), modulus, fp);
        }
    }
    acc
}

/// Deterministic xorshift; good enough to drive Cantor-Zassenhaus retries.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Factors a monic squarefree polynomial mod p into monic irreducibles.
fn factor_mod_p(f: &PPoly, fp: Fp, rng: &mut XorShift) -> Vec<PPoly> {
    let mut out = Vec::new();
    // distinct-degree stage
    let mut h = f.clone();
    let x: PPoly = vec![0, 1];
    let mut w = x.clone();
    let mut d = 0usize;
    while pp_deg(&h) > 0 && 2 * (d + 1) <= pp_deg(&h) as usize {
        d += 1;
        w = pp_pow_mod(&w, &BigInt::from(fp.p), &h, fp);
        let g = pp_gcd(&pp_sub(&w, &x, fp), &h, fp);
        if pp_deg(&g) > 0 {
            equal_degree_split(&g, d, fp, rng, &mut out);
            h = pp_divrem(&h, &g, fp).0;
            w = pp_rem(&w, &h, fp);
        }
    }
    if pp_deg(&h) > 0 {
        out.push(pp_monic(&h, fp));
    }
    out
}

/// Cantor-Zassenhaus split of a product of degree-d irreducibles.
fn equal_degree_split(f: &PPoly, d: usize, fp: Fp, rng: &mut XorShift, out: &mut Vec<PPoly>) {
    let n = pp_deg(f) as usize;
    if n == d {
        out.push(pp_monic(f, fp));
        return;
    }
    let e = (BigInt::from(fp.p).pow(d as u32) - 1) / 2;
    loop {
        let r: PPoly = pp_trim(
            (0..n)
                .map(|_| (rng.next() % fp.p as u64) as i64)
                .collect(),
        );
        if pp_deg(&r) < 1 {
            continue;
        }
        let g0 = pp_gcd(&r, f, fp);
        let g = if pp_deg(&g0) > 0 && pp_deg(&g0) < pp_deg(f) {
            g0
        } else {
            let s = pp_pow_mod(&r, &e, f, fp);
            let s1 = pp_sub(&s, &vec![1], fp);
            let g1 = pp_gcd(&s1, f, fp);
            if pp_deg(&g1) <= 0 || pp_deg(&g1) >= pp_deg(f) {
                continue;
            }
            g1
        };
        let rest = pp_divrem(f, &g, fp).0;
        equal_degree_split(&g, d, fp, rng, out);
        equal_degree_split(&rest, d, fp, rng, out);
        return;
    }
}

// ---------------------------------------------------------------------------
// arithmetic in (Z/m)[x] with a big modulus, for Hensel lifting
// ---------------------------------------------------------------------------

type MPoly = Vec<BigInt>;

fn mp_trim(mut v: MPoly) -> MPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn mp_reduce(v: &[BigInt], m: &BigInt) -> MPoly {
    mp_trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn mp_add(a: &MPoly, b: &MPoly, m: &BigInt) -> MPoly {
    let n = a.len().max(b.len());
    mp_trim(
        (0..n)
            .map(|i| {
                let zero = BigInt::zero();
                (a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).mod_floor(m)
            })
            .collect(),
    )
}

fn mp_sub(a: &MPoly, b: &MPoly, m: &BigInt) -> MPoly {
    let n = a.len().max(b.len());
    mp_trim(
        (0..n)
            .map(|i| {
                let zero = BigInt::zero();
                (a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).mod_floor(m)
            })
            .collect(),
    )
}

fn mp_mul(a: &MPoly, b: &MPoly, m: &BigInt) -> MPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    mp_reduce(&out, m)
}

/// Division by a monic polynomial over Z/m.
fn mp_divrem_monic(a: &MPoly, b: &MPoly, m: &BigInt) -> (MPoly, MPoly) {
    assert!(b.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let db = b.len() - 1;
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quo = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let q = rem[i].mod_floor(m);
        if q.is_zero() {
            rem[i] = BigInt::zero();
            continue;
        }
        quo[i - db] = q.clone();
        for (j, bc) in b.iter().enumerate() {
            let idx = i - db + j;
            rem[idx] = (&rem[idx] - &q * bc).mod_floor(m);
        }
    }
    (mp_trim(quo), mp_trim(rem))
}

fn mp_from_pp(v: &PPoly) -> MPoly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn mp_from_int(f: &IntPoly, m: &BigInt) -> MPoly {
    mp_reduce(f.coeffs(), m)
}

/// Centers coefficients into (-m/2, m/2] and strips trailing zeros.
fn mp_symmetric(v: &MPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// One quadratic Hensel step: given monic f = g*h (mod m) with s*g + t*h = 1
/// (mod m), produces the corresponding data mod m^2.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &IntPoly,
    g: &MPoly,
    h: &MPoly,
    s: &MPoly,
    t: &MPoly,
    m: &BigInt,
) -> (MPoly, MPoly, MPoly, MPoly, BigInt) {
    let m2 = m * m;
    let fm = mp_from_int(f, &m2);
    let e = mp_sub(&fm, &mp_mul(g, h, &m2), &m2);
    let (q, r) = mp_divrem_monic(&mp_mul(s, &e, &m2), h, &m2);
    let g1 = mp_add(&mp_add(g, &mp_mul(t, &e, &m2), &m2), &mp_mul(&q, g, &m2), &m2);
    let h1 = mp_add(h, &r, &m2);
    // lift the Bezout pair as well
    let b = mp_sub(
        &mp_add(&mp_mul(s, &g1, &m2), &mp_mul(t, &h1, &m2), &m2),
        &vec![BigInt::one()],
        &m2,
    );
    let (c, d) = mp_divrem_monic(&mp_mul(s, &b, &m2), &h1, &m2);
    let s1 = mp_sub(s, &d, &m2);
    let t1 = mp_sub(
        &mp_sub(t, &mp_mul(t, &b, &m2), &m2),
        &mp_mul(&c, &g1, &m2),
        &m2,
    );
    (g1, h1, s1, t1, m2)
}

/// Lifts a coprime monic factorization of `f` modulo p to modulo at least
/// `target`, recursing over a balanced factor tree.
fn lift_tree(f: &IntPoly, factors: &[PPoly], fp: Fp, target: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let prod = |fs: &[PPoly]| -> PPoly {
        let mut acc: PPoly = vec![1];
        for q in fs {
            acc = pp_mul(&acc, q, fp);
        }
        acc
    };
    let g0 = prod(left);
    let h0 = prod(right);
    let (s0, t0) = pp_bezout(&g0, &h0, fp);
    let mut g = mp_from_pp(&g0);
    let mut h = mp_from_pp(&h0);
    let mut s = mp_from_pp(&s0);
    let mut t = mp_from_pp(&t0);
    let mut m = BigInt::from(fp.p);
    while &m < target {
        let (g1, h1, s1, t1, m2) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    let g_int = mp_symmetric(&g, &m);
    let h_int = mp_symmetric(&h, &m);
    let mut out = lift_tree(&g_int, left, fp, target);
    out.extend(lift_tree(&h_int, right, fp, target));
    out
}

/// 2^n * ceil(l2 norm): every monic factor of a monic f has coefficients
/// bounded by this (Landau-Mignotte).
fn mignotte_bound(f: &IntPoly) -> BigInt {
    let n = f.degree().unwrap() as u32;
    let sum_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = sum_sq.sqrt() + 1;
    norm * BigInt::from(2).pow(n)
}

/// Zassenhaus for a monic squarefree integer polynomial of degree >= 2.
/// Returns None if no usable prime is found (caller falls back to Kronecker).
fn zassenhaus_monic(f: &IntPoly) -> Option<Vec<IntPoly>> {
    let deg = f.degree().unwrap();
    debug_assert!(f.is_monic() && deg >= 2);
    let fp = choose_prime(f)?;
    let mut rng = XorShift(0x9e3779b97f4a7c15 ^ (fp.p as u64) << 7 ^ deg as u64);
    let fbar = pp_from_int(f, fp);
    let modular = factor_mod_p(&fbar, fp, &mut rng);
    if modular.len() == 1 {
        return Some(vec![f.clone()]);
    }
    let bound = mignotte_bound(f) * BigInt::from(2) + 1;
    let mut m = BigInt::from(fp.p);
    while m < bound {
        m = &m * &m;
    }
    let lifted = lift_tree(f, &modular, fp, &bound);
    debug_assert_eq!(
        lifted
            .iter()
            .fold(IntPoly::one(), |acc, q| {
                let prod = acc.mul(q);
                mp_symmetric(&mp_from_int(&prod, &m), &m)
            }),
        mp_symmetric(&mp_from_int(f, &m), &m)
    );
    Some(recombine(f, lifted, &m))
}

/// Searches odd primes where f stays squarefree; monic f never drops degree.
fn choose_prime(f: &IntPoly) -> Option<Fp> {
    for &p in SMALL_PRIMES {
        let fp = Fp { p };
        let fbar = pp_from_int(f, fp);
        if pp_deg(&fbar) != f.degree().unwrap() as isize {
            continue;
        }
        let deriv: PPoly = pp_trim(
            fbar.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| fp.mul(c, (i as i64).rem_euclid(fp.p)))
                .collect(),
        );
        if deriv.is_empty() {
            continue;
        }
        if pp_deg(&pp_gcd(&fbar, &deriv, fp)) == 0 {
            return Some(fp);
        }
    }
    None
}

const SMALL_PRIMES: &[i64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307,
    311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421,
    431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
];

/// Tries subsets of lifted modular factors in increasing size; every exact
/// divisor found is a true irreducible factor.
fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, m: &BigInt) -> Vec<IntPoly> {
    let mut remaining = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= lifted.len() {
        let idxs: Vec<usize> = (0..lifted.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod: MPoly = vec![BigInt::one()];
            for &i in &combo {
                prod = mp_mul(&prod, &mp_from_int(&lifted[i], m), m);
            }
            let candidate = mp_symmetric(&prod, m);
            if candidate.degree() == Some(0) {
                continue;
            }
            if remaining.divides_exactly(&candidate) {
                remaining = remaining.div_exact(&candidate);
                out.push(candidate);
                let keep: Vec<IntPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, q)| q.clone())
                    .collect();
                lifted = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if remaining.degree().unwrap_or(0) > 0 {
        out.push(remaining);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Kronecker fallback
// ---------------------------------------------------------------------------

/// Exhaustive Kronecker interpolation, looking for factors of degree <= 4.
/// Only reachable when every small prime fails; also exercised directly in
/// tests so the path stays honest.
fn kronecker_factor(f: &IntPoly) -> Vec<IntPoly> {
    let deg = match f.degree() {
        Some(d) if d >= 2 => d,
        _ => return vec![f.clone()],
    };
    let max_d = (deg / 2).min(4);
    for d in 1..=max_d {
        if let Some(g) = kronecker_find_factor(f, d) {
            let rest = f.div_exact(&g);
            let mut out = kronecker_factor(&g);
            out.extend(kronecker_factor(&rest));
            return out;
        }
    }
    vec![f.clone()]
}

fn kronecker_find_factor(f: &IntPoly, d: usize) -> Option<IntPoly> {
    // evaluation points 0, 1, -1, 2, -2, ... skipping roots handled upstream
    let mut points = Vec::new();
    let mut k = 0i64;
    while points.len() < d + 1 {
        let x = BigInt::from(k);
        let v = f.eval(&x);
        if !v.is_zero() {
            points.push((x, v));
        }
        k = if k >= 0 { -(k + 1) } else { -k };
        if k.abs() > 40 {
            return None;
        }
    }
    let divisor_sets: Vec<Vec<BigInt>> = points
        .iter()
        .map(|(_, v)| signed_divisors(v))
        .collect();
    let mut choice = vec![0usize; d + 1];
    loop {
        let samples: Vec<(Rat, Rat)> = points
            .iter()
            .zip(&choice)
            .enumerate()
            .map(|(i, ((x, _), &c))| {
                (
                    Rat::from_bigint(x.clone()),
                    Rat::from_bigint(divisor_sets[i][c].clone()),
                )
            })
            .collect();
        if let Some(g) = lagrange_int(&samples) {
            if g.degree() == Some(d) && f.divides_exactly(&g) {
                let gp = g.primitive_part();
                if gp.degree() == Some(d) {
                    return Some(gp);
                }
            }
        }
        // odometer over divisor choices
        let mut pos = 0;
        loop {
            if pos > d {
                return None;
            }
            choice[pos] += 1;
            if choice[pos] < divisor_sets[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn signed_divisors(v: &BigInt) -> Vec<BigInt> {
    let a = v.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= a {
        if (&a % &d).is_zero() {
            let e = &a / &d;
            out.push(d.clone());
            out.push(-d.clone());
            if e != d {
                out.push(e.clone());
                out.push(-e);
            }
        }
        d += 1;
    }
    out
}

/// Lagrange interpolation returning an integer polynomial when the
/// interpolant has integer coefficients.
fn lagrange_int(samples: &[(Rat, Rat)]) -> Option<IntPoly> {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut term = RatPoly::new(vec![yi.clone()]);
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = &(xi - xj).s_inv_checked()?;
            // (x - xj) / (xi - xj)
            let lin = RatPoly::new(vec![&(-xj) * denom, denom.clone()]);
            term = term.mul(&lin);
        }
        acc = acc.add(&term);
    }
    acc.to_int_poly()
}

trait RatInvExt {
    fn s_inv_checked(&self) -> Option<Rat>;
}

impl RatInvExt for Rat {
    fn s_inv_checked(&self) -> Option<Rat> {
        self.recip().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn splitting_example_cubic() {
        // x^3 - 6x^2 + 10x - 3 = (x^2 - 3x + 1)(x - 3)
        let f = factor_over_z(&ip(&[-3, 10, -6, 1])).unwrap();
        assert_eq!(f.content, BigInt::from(1));
        assert_eq!(
            f.factors,
            vec![(ip(&[-3, 1]), 1), (ip(&[1, -3, 1]), 1)]
        );
    }

    #[test]
    fn irreducible_cubic_stays_whole() {
        let f = factor_over_z(&ip(&[1, -3, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(ip(&[1, -3, 0, 1]), 1)]);
    }

    #[test]
    fn repeated_root() {
        // (x-1)^2
        let f = factor_over_z(&ip(&[1, -2, 1])).unwrap();
        assert_eq!(f.factors, vec![(ip(&[-1, 1]), 2)]);
    }

    #[test]
    fn irreducibility_predicate() {
        assert!(is_irreducible_over_q(&ip(&[1, -3, 0, 1])).unwrap());
        assert!(!is_irreducible_over_q(&ip(&[-3, 10, -6, 1])).unwrap());
        assert!(is_irreducible_over_q(&ip(&[1, 1, 1])).unwrap());
        assert!(is_irreducible_over_q(&ip(&[1, 0, 0, 1, 0, 0, 1])).unwrap()); // 9th cyclotomic
        assert!(matches!(
            is_irreducible_over_q(&ip(&[5])),
            Err(Error::ConstantPolynomial)
        ));
    }

    #[test]
    fn non_monic_and_content() {
        // 6x^2 - 6 = 6 (x-1)(x+1)
        let f = factor_over_z(&ip(&[-6, 0, 6])).unwrap();
        assert_eq!(f.content, BigInt::from(6));
        assert_eq!(f.factors, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]);
        // 2x^2 - 5x + 2 = (2x - 1)(x - 2)
        let f = factor_over_z(&ip(&[2, -5, 2])).unwrap();
        assert_eq!(f.factors, vec![(ip(&[-2, 1]), 1), (ip(&[-1, 2]), 1)]);
    }

    #[test]
    fn negative_leading_coefficient() {
        let f = factor_over_z(&ip(&[1, 0, -1])).unwrap();
        assert_eq!(f.content, BigInt::from(-1));
        assert_eq!(f.factors, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]);
        assert_eq!(f.expand(), ip(&[1, 0, -1]));
    }

    #[test]
    fn powers_of_x_stripped() {
        let f = factor_over_z(&ip(&[0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(ip(&[0, 1]), 3)]);
    }

    #[test]
    fn zero_rejected() {
        assert!(matches!(
            factor_over_z(&IntPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn bigger_products_roundtrip() {
        let parts = [
            ip(&[1, -3, 0, 1]),
            ip(&[1, -3, 1]),
            ip(&[-3, 1]),
            ip(&[1, 1, 1]),
            ip(&[7, 2]),
        ];
        let mut f = ip(&[2]);
        for p in &parts {
            f = f.mul(p);
        }
        f = f.mul(&ip(&[1, -3, 1])); // square one factor
        let fact = factor_over_z(&f).unwrap();
        assert_eq!(fact.expand(), f);
        assert_eq!(fact.factors.len(), 5);
        assert!(fact.factors.contains(&(ip(&[1, -3, 1]), 2)));
    }

    #[test]
    fn kronecker_direct() {
        // exercise the fallback directly on (x^2 - 3x + 1)(x - 3)
        let f = ip(&[-3, 10, -6, 1]);
        let fs = kronecker_factor(&f);
        let mut fs = fs;
        fs.sort_by_key(|g| g.degree());
        assert_eq!(fs, vec![ip(&[-3, 1]), ip(&[1, -3, 1])]);
    }

    #[test]
    fn kronecker_on_irreducible() {
        assert_eq!(kronecker_factor(&ip(&[1, -3, 0, 1])), vec![ip(&[1, -3, 0, 1])]);
    }

    #[test]
    fn hensel_step_invariant() {
        // x^2 - 1 = (x - 1)(x + 1) mod 3, lifted to mod 9 and mod 81
        let f = ip(&[-1, 0, 1]);
        let fp = Fp { p: 3 };
        let g: MPoly = vec![BigInt::from(2), BigInt::from(1)]; // x - 1 = x + 2 mod 3
        let h: MPoly = vec![BigInt::from(1), BigInt::from(1)];
        let (s, t) = pp_bezout(&vec![2, 1], &vec![1, 1], fp);
        let (mut g, mut h, mut s, mut t, mut m) = (
            g,
            h,
            mp_from_pp(&s),
            mp_from_pp(&t),
            BigInt::from(3),
        );
        for _ in 0..2 {
            let (g1, h1, s1, t1, m1) = hensel_step(&f, &g, &h, &s, &t, &m);
            g = g1;
            h = h1;
            s = s1;
            t = t1;
            m = m1;
            // f == g*h and s*g + t*h == 1 (mod m)
            let prod = mp_mul(&g, &h, &m);
            assert_eq!(prod, mp_from_int(&f, &m));
            let bez = mp_add(&mp_mul(&s, &g, &m), &mp_mul(&t, &h, &m), &m);
            assert_eq!(bez, vec![BigInt::one()]);
        }
        assert_eq!(m, BigInt::from(81));
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // (x^2-2)(x^2-3): irreducible factors pair up nontrivially mod many primes
        let f = ip(&[-2, 0, 1]).mul(&ip(&[-3, 0, 1]));
        let fact = factor_over_z(&f).unwrap();
        assert_eq!(
            fact.factors,
            vec![(ip(&[-2, 0, 1]), 1), (ip(&[-3, 0, 1]), 1)]
        );
    }
}
