//! Multivariable integer Laurent polynomials with exact arithmetic.
//!
//! Terms are kept in a sorted map from exponent vectors to nonzero
//! coefficients, so the representation is canonical and equality is
//! structural. The text grammar (`3*t1^2*t2^-1 - 1`) round-trips printing
//! bit-exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclo::Sign;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1, "polynomials need at least one variable");
        MultiLaurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<T: Into<BigInt>>(nvars: usize, c: T) -> Self {
        let mut out = Self::zero(nvars);
        out.insert_term(vec![0; nvars], c.into());
        out
    }

    /// The variable t_{index+1}.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut exps = vec![0i64; nvars];
        exps[index] = 1;
        Self::monomial(nvars, exps, 1)
    }

    pub fn monomial<T: Into<BigInt>>(nvars: usize, exps: Vec<i64>, coeff: T) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut out = Self::zero(nvars);
        out.insert_term(exps, coeff.into());
        out
    }

    fn insert_term(&mut self, exps: Vec<i64>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
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

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.insert_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_arity(rhs)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale<T: Into<BigInt>>(&self, k: T) -> Self {
        let k = k.into();
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * &k)).collect(),
        }
    }

    /// Replaces t_i by T^{exps[i]}, collecting into one variable.
    pub fn substitute_monomials(&self, exps: &[i64]) -> Result<Self> {
        if exps.len() != self.nvars {
            return Err(Error::ArityMismatch(exps.len(), self.nvars));
        }
        let mut out = Self::zero(1);
        for (e, c) in self.terms() {
            let total: i64 = e.iter().zip(exps).map(|(x, a)| x * a).sum();
            out.insert_term(vec![total], c.clone());
        }
        Ok(out)
    }

    /// Sets variable `index` to 1, dropping it from the variable list.
    pub fn set_var_one(&self, index: usize) -> Result<Self> {
        if index >= self.nvars {
            return Err(Error::ArityMismatch(index + 1, self.nvars));
        }
        if self.nvars == 1 {
            let c = self.eval_all_ones();
            return Ok(Self::constant(1, c));
        }
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in self.terms() {
            let mut reduced = e.clone();
            reduced.remove(index);
            out.insert_term(reduced, c.clone());
        }
        Ok(out)
    }

    /// Sum of all coefficients, i.e. the value at t_i = 1 for every i.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// t_i -> t_i^-1 for every variable.
    pub fn mirror(&self) -> Self {
        MultiLaurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// global_sign * t^monomial_exps * f(t^-1).
    pub fn duality_transform(&self, monomial_exps: &[i64], global_sign: Sign) -> Result<Self> {
        if monomial_exps.len() != self.nvars {
            return Err(Error::ArityMismatch(monomial_exps.len(), self.nvars));
        }
        let s = global_sign.value();
        let mut out = Self::zero(self.nvars);
        for (e, c) in self.terms() {
            let exps: Vec<i64> = monomial_exps.iter().zip(e).map(|(m, x)| m - x).collect();
            out.insert_term(exps, c * s);
        }
        Ok(out)
    }

    /// Exact quotient f/g in the one-variable Laurent ring. Both operands are
    /// shifted to ordinary polynomials, divided with a zero-remainder check,
    /// and the quotient is shifted back.
    pub fn divide_exact(&self, g: &Self) -> Result<Self> {
        self.check_arity(g)?;
        if self.nvars != 1 {
            return Err(Error::ArityMismatch(self.nvars, 1));
        }
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(1));
        }
        let min_f = *self.terms.keys().next().unwrap().first().unwrap();
        let min_g = *g.terms.keys().next().unwrap().first().unwrap();
        let dense_f = self.to_dense(min_f);
        let dense_g = g.to_dense(min_g);
        let quot = dense_divide_exact(&dense_f, &dense_g)
            .ok_or_else(|| Error::InexactDivision(format!("({self}) / ({g})")))?;
        let shift = min_f - min_g;
        let mut out = Self::zero(1);
        for (k, c) in quot.into_iter().enumerate() {
            out.insert_term(vec![k as i64 + shift], c);
        }
        Ok(out)
    }

    fn to_dense(&self, min_exp: i64) -> Vec<BigInt> {
        let max_exp = *self.terms.keys().next_back().unwrap().first().unwrap();
        let mut dense = vec![BigInt::zero(); (max_exp - min_exp) as usize + 1];
        for (e, c) in self.terms() {
            dense[(e[0] - min_exp) as usize] = c.clone();
        }
        dense
    }

    /// Largest absolute exponent over all variables and terms; 0 for the zero
    /// polynomial.
    pub fn abs_degree(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Decides f = sign * t^shift * g, returning the witness. Two zeros get
    /// the trivial witness.
    pub fn unit_monomial_equivalent(&self, g: &Self) -> Result<Option<(Sign, Vec<i64>)>> {
        self.check_arity(g)?;
        match (self.is_zero(), g.is_zero()) {
            (true, true) => return Ok(Some((Sign::Plus, vec![0; self.nvars]))),
            (true, false) | (false, true) => return Ok(None),
            _ => {}
        }
        if self.terms.len() != g.terms.len() {
            return Ok(None);
        }
        let (ef, cf) = self.terms.iter().next().unwrap();
        let (eg, cg) = g.terms.iter().next().unwrap();
        if cf.abs() != cg.abs() {
            return Ok(None);
        }
        let sign = if cf == cg { Sign::Plus } else { Sign::Minus };
        let shift: Vec<i64> = ef.iter().zip(eg).map(|(a, b)| a - b).collect();
        let mut shifted = Self::zero(self.nvars);
        for (e, c) in g.terms() {
            let exps: Vec<i64> = e.iter().zip(&shift).map(|(x, s)| x + s).collect();
            shifted.insert_term(exps, c * sign.value());
        }
        if &shifted == self {
            Ok(Some((sign, shift)))
        } else {
            Ok(None)
        }
    }

    /// Parses the fixed text grammar, e.g. `3*t1^2*t2^-1 - 1`. Variable
    /// indices are 1-based and must not exceed `nvars`.
    pub fn parse(input: &str, nvars: usize) -> Result<Self> {
        Parser::new(input, nvars).parse()
    }
}

fn dense_divide_exact(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = f.to_vec();
    while rem.len() > 1 && rem.last().unwrap().is_zero() {
        rem.pop();
    }
    let mut gt = g.to_vec();
    while gt.len() > 1 && gt.last().unwrap().is_zero() {
        gt.pop();
    }
    let lead = gt.last().unwrap().clone();
    if rem.len() < gt.len() {
        return None;
    }
    let mut quot = vec![BigInt::zero(); rem.len() - gt.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + gt.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        if (&top % &lead) != BigInt::zero() {
            return None;
        }
        let q = &top / &lead;
        for (j, c) in gt.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

macro_rules! laurent_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &MultiLaurent {
            type Output = MultiLaurent;
            fn $method(self, rhs: &MultiLaurent) -> MultiLaurent {
                self.$checked(rhs).expect("variable count mismatch")
            }
        }
        impl std::ops::$trait for MultiLaurent {
            type Output = MultiLaurent;
            fn $method(self, rhs: MultiLaurent) -> MultiLaurent {
                (&self).$method(&rhs)
            }
        }
    };
}

laurent_binop!(Add, add, try_add);
laurent_binop!(Sub, sub, try_sub);
laurent_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        self.negate()
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent({self})")
    }
}

/// Canonical printing: terms in descending lexicographic exponent order,
/// `*`-joined factors, exponent 1 and unit coefficients elided.
impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(mag.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(format!("t{}", i + 1));
                } else {
                    factors.push(format!("t{}^{}", i + 1, e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, nvars: usize) -> Self {
        Parser {
            chars: input.chars().peekable(),
            nvars,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().map(|c| c.is_whitespace()) == Some(true) {
            self.chars.next();
        }
    }

    fn parse(&mut self) -> Result<MultiLaurent> {
        let mut out = MultiLaurent::zero(self.nvars);
        let mut any = false;
        loop {
            self.skip_ws();
            let sign = match self.chars.peek() {
                None => break,
                Some('+') => {
                    self.chars.next();
                    1i64
                }
                Some('-') => {
                    self.chars.next();
                    -1i64
                }
                Some(_) if !any => 1i64,
                Some(c) => {
                    return Err(Error::Parse(format!("expected '+' or '-', found '{c}'")))
                }
            };
            let (exps, coeff) = self.parse_term()?;
            out.insert_term(exps, coeff * sign);
            any = true;
        }
        if !any {
            return Err(Error::Parse("empty polynomial text".into()));
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<(Vec<i64>, BigInt)> {
        let mut exps = vec![0i64; self.nvars];
        let mut coeff = BigInt::one();
        let mut first = true;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.parse_integer()?;
                    coeff *= n;
                }
                Some('t') => {
                    self.chars.next();
                    let idx = self.parse_integer()?;
                    if idx < 1 || idx as usize > self.nvars {
                        return Err(Error::Parse(format!(
                            "variable t{idx} out of range for {} variables",
                            self.nvars
                        )));
                    }
                    let mut exp = 1i64;
                    if self.chars.peek() == Some(&'^') {
                        self.chars.next();
                        exp = self.parse_signed_integer()?;
                    }
                    exps[idx as usize - 1] += exp;
                }
                other => {
                    if first {
                        return Err(Error::Parse(format!(
                            "expected coefficient or variable, found {other:?}"
                        )));
                    }
                    return Err(Error::Parse(format!("expected factor after '*', found {other:?}")));
                }
            }
            first = false;
            self.skip_ws();
            if self.chars.peek() == Some(&'*') {
                self.chars.next();
            } else {
                break;
            }
        }
        Ok((exps, coeff))
    }

    fn parse_integer(&mut self) -> Result<i64> {
        let mut digits = String::new();
        while self.chars.peek().map(|c| c.is_ascii_digit()) == Some(true) {
            digits.push(self.chars.next().unwrap());
        }
        if digits.is_empty() {
            return Err(Error::Parse("expected an integer".into()));
        }
        digits
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad integer '{digits}': {e}")))
    }

    fn parse_signed_integer(&mut self) -> Result<i64> {
        let neg = if self.chars.peek() == Some(&'-') {
            self.chars.next();
            true
        } else {
            false
        };
        let v = self.parse_integer()?;
        Ok(if neg { -v } else { v })
    }
}

/// Decides whether two symmetric Laurent polynomials bounded by degree
/// (ell-3)/2 are equal; with that bound, agreement at all ell-th roots of
/// unity is the same as literal equality, so the test reduces to F - G = 0.
/// The preconditions are validated because the conclusion is false without
/// them.
pub fn symmetric_agreement(f: &MultiLaurent, g: &MultiLaurent, ell: u64) -> Result<bool> {
    if !is_prime(ell) || ell < 5 {
        return Err(Error::NotOddPrime(ell));
    }
    if f.nvars() != 1 {
        return Err(Error::ArityMismatch(f.nvars(), 1));
    }
    if g.nvars() != 1 {
        return Err(Error::ArityMismatch(g.nvars(), 1));
    }
    let bound = ((ell - 3) / 2) as i64;
    for poly in [f, g] {
        if poly.mirror() != *poly {
            return Err(Error::Asymmetric);
        }
        let degree = poly.abs_degree();
        if degree > bound {
            return Err(Error::DegreeBound { degree, bound });
        }
    }
    Ok(f == g)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse2(s: &str) -> MultiLaurent {
        MultiLaurent::parse(s, 2).unwrap()
    }

    fn parse1(s: &str) -> MultiLaurent {
        MultiLaurent::parse(s, 1).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let t1m1 = parse2("t1 - 1");
        let t2m1 = parse2("t2 - 1");
        assert!(t1m1.try_mul(&MultiLaurent::zero(2)).unwrap().is_zero());
        assert_eq!(t1m1.try_mul(&t2m1).unwrap(), parse2("t1*t2 - t1 - t2 + 1"));
        assert_eq!(
            t1m1.try_mul(&t2m1).unwrap().scale(3),
            parse2("3*t1*t2 - 3*t1 - 3*t2 + 3")
        );
        assert!(matches!(
            t1m1.try_add(&MultiLaurent::zero(3)),
            Err(Error::ArityMismatch(2, 3))
        ));
    }

    #[test]
    fn substitution_examples() {
        let f = parse2("t1*t2");
        assert_eq!(f.substitute_monomials(&[1, -1]).unwrap(), parse1("1"));

        let g = parse2("t1 - 1").try_mul(&parse2("t2 - 1")).unwrap();
        assert_eq!(
            g.substitute_monomials(&[2, 3]).unwrap(),
            parse1("t1^5 - t1^3 - t1^2 + 1")
        );

        let h = MultiLaurent::var(1, 0);
        assert_eq!(h.substitute_monomials(&[0]).unwrap(), parse1("1"));
    }

    #[test]
    fn divide_exact_examples() {
        let f = parse1("t1^4 - 1");
        let g = parse1("t1^2 - 1");
        assert_eq!(f.divide_exact(&g).unwrap(), parse1("t1^2 + 1"));

        let f = parse1("t1^6 - 1");
        let g = parse1("t1 - 1");
        assert_eq!(
            f.divide_exact(&g).unwrap(),
            parse1("t1^5 + t1^4 + t1^3 + t1^2 + t1 + 1")
        );

        let f = parse1("t1^2 + 1");
        let g = parse1("t1 - 1");
        assert!(matches!(f.divide_exact(&g), Err(Error::InexactDivision(_))));

        // Laurent shifting: negative exponents divide exactly too.
        let f = parse1("t1^-2 - t1^-4");
        let g = parse1("t1^-1 - t1^-2");
        assert_eq!(f.divide_exact(&g).unwrap(), parse1("t1^-1 + t1^-2"));
    }

    #[test]
    fn duality_transform_examples() {
        let f = parse1("t1 - 1");
        assert_eq!(f.duality_transform(&[1], Sign::Minus).unwrap(), f);

        let g = parse2("t1 - 1")
            .try_mul(&parse2("t2 - 1"))
            .unwrap()
            .scale(4);
        assert_eq!(g.duality_transform(&[1, 1], Sign::Plus).unwrap(), g);

        let c = parse2("1");
        assert_eq!(c.duality_transform(&[0, 0], Sign::Plus).unwrap(), c);
    }

    #[test]
    fn symmetric_agreement_examples() {
        let f = parse1("t1 + 2 + t1^-1");
        assert!(symmetric_agreement(&f, &f, 7).unwrap());

        let a = parse1("1");
        let b = parse1("t1 + t1^-1");
        assert!(!symmetric_agreement(&a, &b, 5).unwrap());
        // oracle for the same pair: they differ at zeta_5
        let diff = a.try_sub(&b).unwrap();
        assert!(!crate::cyclo::eval_at_root(&diff, 1, 5).unwrap().is_zero());

        let z = MultiLaurent::zero(1);
        assert!(symmetric_agreement(&z, &z, 11).unwrap());

        // precondition failures
        assert!(matches!(
            symmetric_agreement(&parse1("t1^3 + t1^-3"), &z, 5),
            Err(Error::DegreeBound { .. })
        ));
        assert!(matches!(
            symmetric_agreement(&parse1("t1"), &z, 5),
            Err(Error::Asymmetric)
        ));
        assert!(matches!(
            symmetric_agreement(&z, &z, 9),
            Err(Error::NotOddPrime(9))
        ));
    }

    #[test]
    fn unit_monomial_equivalence() {
        let f = parse2("t1*t2 - t1");
        let g = parse2("t2 - 1");
        // f = t1 * g
        let (sign, shift) = f.unit_monomial_equivalent(&g).unwrap().unwrap();
        assert_eq!(sign, Sign::Plus);
        assert_eq!(shift, vec![1, 0]);

        let h = parse2("1 - t2");
        let (sign, shift) = h.unit_monomial_equivalent(&g).unwrap().unwrap();
        assert_eq!(sign, Sign::Minus);
        assert_eq!(shift, vec![0, 0]);

        assert!(f.unit_monomial_equivalent(&parse2("t2 + 1")).unwrap().is_none());
        assert!(MultiLaurent::zero(2)
            .unit_monomial_equivalent(&MultiLaurent::zero(2))
            .unwrap()
            .is_some());
    }

    #[test]
    fn grammar_round_trip_spec_string() {
        let text = "3*t1^2*t2^-1 - 1";
        let poly = MultiLaurent::parse(text, 2).unwrap();
        assert_eq!(poly.to_string(), text);
        assert_eq!(MultiLaurent::parse(&poly.to_string(), 2).unwrap(), poly);
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(MultiLaurent::parse("", 2).is_err());
        assert!(MultiLaurent::parse("t3", 2).is_err());
        assert!(MultiLaurent::parse("2 +", 2).is_err());
        assert!(MultiLaurent::parse("t1^", 2).is_err());
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = MultiLaurent> {
        proptest::collection::vec(
            (
                proptest::collection::vec(-4i64..=4, nvars),
                -9i64..=9,
            ),
            0..6,
        )
        .prop_map(move |terms| {
            let mut out = MultiLaurent::zero(nvars);
            for (exps, c) in terms {
                out.insert_term(exps, BigInt::from(c));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            let ab_c = (&(&a * &b) * &c).clone();
            let a_bc = (&a * &(&b * &c)).clone();
            prop_assert_eq!(ab_c, a_bc);
            let dist = &a * &(&b + &c);
            let expand = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(dist, expand);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn divide_recovers_factor(a in arb_poly(1), b in arb_poly(1)) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            let q = prod.divide_exact(&b).unwrap();
            prop_assert_eq!(q, a);
        }

        #[test]
        fn substitution_commutes_with_multiplication(
            a in arb_poly(2),
            b in arb_poly(2),
            e1 in -3i64..=3,
            e2 in -3i64..=3,
        ) {
            let exps = [e1, e2];
            let lhs = (&a * &b).substitute_monomials(&exps).unwrap();
            let rhs = &a.substitute_monomials(&exps).unwrap() * &b.substitute_monomials(&exps).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly(3)) {
            let text = a.to_string();
            let back = MultiLaurent::parse(&text, 3).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
