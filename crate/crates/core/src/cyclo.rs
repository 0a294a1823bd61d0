//! Exact arithmetic in Z[zeta_d] and Q(zeta_d), with equality testing up to
//! the trivial units +/- zeta_d^m.
//!
//! Elements are stored in the power basis 1, zeta, ..., zeta^(phi(d)-1) after
//! reduction modulo the d-th cyclotomic polynomial, so ring equality is plain
//! coefficient comparison and no rounding can ever occur.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::laurent::MultiLaurent;

/// A sign, +1 or -1. Doubles as the sign part of a unit witness and as the
/// epsilon parameter of the torsion formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::BadSign(v)),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Witness for A = sign * zeta_d^m * B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitWitness {
    pub sign: Sign,
    pub m: u64,
}

/// Euler totient.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1, "euler_phi: d must be positive");
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Ascending divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

// Dense integer polynomials, constant coefficient first. Internal helpers for
// the cyclotomic-polynomial computation and basis reduction.

fn poly_trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().map(|c| c.is_zero()) == Some(true) {
        v.pop();
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.iter().all(Zero::is_zero) || b.iter().all(Zero::is_zero) {
        return vec![BigInt::zero()];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    poly_trim(&mut out);
    out
}

/// Division by a monic divisor; returns (quotient, remainder).
fn poly_divmod_monic(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(den.last().map(|c| c.is_one()) == Some(true), "divisor must be monic");
    let dd = den.len() - 1;
    let mut rem: Vec<BigInt> = num.to_vec();
    poly_trim(&mut rem);
    if rem.len() <= dd || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        quot[k] = lead.clone();
        for (j, c) in den.iter().enumerate() {
            rem[k + j] -= &lead * c;
        }
    }
    poly_trim(&mut rem);
    poly_trim(&mut quot);
    (quot, rem)
}

static PHI_CACHE: Lazy<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The d-th cyclotomic polynomial, dense coefficients with constant term
/// first. Computed by exact division of x^d - 1 by Phi_e over the proper
/// divisors e of d.
pub fn cyclotomic_polynomial(d: u64) -> Vec<BigInt> {
    assert!(d >= 1, "cyclotomic_polynomial: d must be positive");
    if let Some(hit) = PHI_CACHE.lock().unwrap().get(&d) {
        return hit.as_ref().clone();
    }
    let result = if d == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = BigInt::from(-1);
        num[d as usize] = BigInt::from(1);
        let mut acc = num;
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = cyclotomic_polynomial(e);
            let (q, r) = poly_divmod_monic(&acc, &phi_e);
            debug_assert!(r.len() == 1 && r[0].is_zero(), "cyclotomic division must be exact");
            acc = q;
        }
        acc
    };
    PHI_CACHE
        .lock()
        .unwrap()
        .insert(d, Arc::new(result.clone()));
    result
}

/// Element of Z[zeta_d] in the canonical power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloInt {
    d: u64,
    coeffs: Vec<BigInt>,
}

impl CycloInt {
    pub fn zero(d: u64) -> Self {
        assert!(d >= 1);
        CycloInt {
            d,
            coeffs: vec![BigInt::zero(); euler_phi(d) as usize],
        }
    }

    pub fn from_int<T: Into<BigInt>>(d: u64, v: T) -> Self {
        let mut out = Self::zero(d);
        out.coeffs[0] = v.into();
        out
    }

    pub fn one(d: u64) -> Self {
        Self::from_int(d, 1)
    }

    /// zeta_d^k for any integer k (negative exponents wrap around).
    pub fn root_power(d: u64, k: i64) -> Self {
        assert!(d >= 1);
        let e = k.rem_euclid(d as i64) as usize;
        let mut dense = vec![BigInt::zero(); e + 1];
        dense[e] = BigInt::one();
        Self::from_dense(d, dense)
    }

    /// zeta_d^k - 1, the recurring denominator factor.
    pub fn root_power_minus_one(d: u64, k: i64) -> Self {
        let mut v = Self::root_power(d, k);
        v.coeffs[0] -= 1;
        v
    }

    fn from_dense(d: u64, dense: Vec<BigInt>) -> Self {
        let phi = cyclotomic_polynomial(d);
        let (_, mut rem) = poly_divmod_monic(&dense, &phi);
        let width = euler_phi(d) as usize;
        rem.resize(width, BigInt::zero());
        CycloInt { d, coeffs: rem }
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::OrderMismatch(self.d, other.d));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloInt { d: self.d, coeffs })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloInt { d: self.d, coeffs })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let dense = poly_mul(&self.coeffs, &rhs.coeffs);
        Ok(Self::from_dense(self.d, dense))
    }

    pub fn negate(&self) -> Self {
        CycloInt {
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale<T: Into<BigInt>>(&self, k: T) -> Self {
        let k = k.into();
        CycloInt {
            d: self.d,
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    /// Multiply by zeta_d^k.
    pub fn mul_root(&self, k: i64) -> Self {
        let e = k.rem_euclid(self.d as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        let mut dense = vec![BigInt::zero(); e + self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i + e] = c.clone();
        }
        Self::from_dense(self.d, dense)
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(d={}, {})", self.d, self)
    }
}

/// Renders as an integer polynomial in `z`, highest power first.
impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{e}")?;
                }
            }
        }
        Ok(())
    }
}

macro_rules! cyclo_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &CycloInt {
            type Output = CycloInt;
            fn $method(self, rhs: &CycloInt) -> CycloInt {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl std::ops::$trait for CycloInt {
            type Output = CycloInt;
            fn $method(self, rhs: CycloInt) -> CycloInt {
                (&self).$method(&rhs)
            }
        }
    };
}

cyclo_binop!(Add, add, try_add);
cyclo_binop!(Sub, sub, try_sub);
cyclo_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        self.negate()
    }
}

impl std::ops::Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        self.negate()
    }
}

/// Element of Q(zeta_d) held as an unreduced fraction of cyclotomic integers.
/// Equality is always decided by cross multiplication, never by division.
#[derive(Clone, Debug)]
pub struct CycloNum {
    num: CycloInt,
    den: CycloInt,
}

impl CycloNum {
    pub fn new(num: CycloInt, den: CycloInt) -> Result<Self> {
        if num.order() != den.order() {
            return Err(Error::OrderMismatch(num.order(), den.order()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CycloNum { num, den })
    }

    pub fn integer(num: CycloInt) -> Self {
        let den = CycloInt::one(num.order());
        CycloNum { num, den }
    }

    pub fn from_int<T: Into<BigInt>>(d: u64, v: T) -> Self {
        Self::integer(CycloInt::from_int(d, v))
    }

    pub fn order(&self) -> u64 {
        self.num.order()
    }

    pub fn num(&self) -> &CycloInt {
        &self.num
    }

    pub fn den(&self) -> &CycloInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplicative inverse, by swapping numerator and denominator.
    pub fn invert(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CycloNum {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        CycloNum::new(self.num.try_mul(&rhs.num)?, self.den.try_mul(&rhs.den)?)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let num = self.num.try_mul(&rhs.den)?.try_add(&rhs.num.try_mul(&self.den)?)?;
        CycloNum::new(num, self.den.try_mul(&rhs.den)?)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        let num = self.num.try_mul(&rhs.den)?.try_sub(&rhs.num.try_mul(&self.den)?)?;
        CycloNum::new(num, self.den.try_mul(&rhs.den)?)
    }

    /// Exact equality a/b = c/e decided by a*e = c*b.
    pub fn eq_exact(&self, rhs: &Self) -> Result<bool> {
        let left = self.num.try_mul(&rhs.den)?;
        let right = rhs.num.try_mul(&self.den)?;
        Ok(left == right)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Decides A = sign * zeta^m * B by exhaustive search over the 2d trivial
/// units, returning the first witness found. Two zeros are witnessed by
/// (+1, 0); a single zero has no witness.
pub fn unit_equivalent(a: &CycloNum, b: &CycloNum) -> Result<Option<UnitWitness>> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let d = a.order();
    match (a.is_zero(), b.is_zero()) {
        (true, true) => {
            return Ok(Some(UnitWitness {
                sign: Sign::Plus,
                m: 0,
            }))
        }
        (true, false) | (false, true) => return Ok(None),
        _ => {}
    }
    let left = a.num.try_mul(&b.den)?;
    let right = b.num.try_mul(&a.den)?;
    let mut candidate = right;
    for m in 0..d {
        if left == candidate {
            return Ok(Some(UnitWitness { sign: Sign::Plus, m }));
        }
        if left == candidate.negate() {
            return Ok(Some(UnitWitness {
                sign: Sign::Minus,
                m,
            }));
        }
        candidate = candidate.mul_root(1);
    }
    Ok(None)
}

/// Evaluates a one-variable integer Laurent polynomial at zeta_d^a, mapping
/// negative exponents through zeta^-1 = zeta^(d-1).
pub fn eval_at_root(f: &MultiLaurent, a: i64, d: u64) -> Result<CycloInt> {
    if f.nvars() != 1 {
        return Err(Error::ArityMismatch(f.nvars(), 1));
    }
    assert!(d >= 2, "eval_at_root: d must be at least 2");
    let mut acc = CycloInt::zero(d);
    for (exps, coeff) in f.terms() {
        let e = (exps[0].rem_euclid(d as i64) * a.rem_euclid(d as i64)).rem_euclid(d as i64);
        acc = acc.try_add(&CycloInt::root_power(d, e).scale(coeff.clone()))?;
    }
    Ok(acc)
}
