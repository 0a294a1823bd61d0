//! The constructive side: twist-move coefficient calculus, the lens formula
//! for surgeries along (2, 2s)-torus links, and the parameter tables that
//! reduce twist-one surgeries with an integer slope 1, 2 or 3 to a torus
//! knot or link.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lens::LensSpace;

/// A surgery coefficient: a reduced fraction, infinity (1/0), or the empty
/// filling (encoded 0/0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalCoeff {
    num: i64,
    den: i64,
}

impl RationalCoeff {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::InvalidSpec(
                "0/0 is reserved for the empty filling; use RationalCoeff::empty()".into(),
            ));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: i64, den: i64) -> Self {
        if num == 0 && den == 0 {
            return RationalCoeff { num: 0, den: 0 };
        }
        let g = num.gcd(&den).max(1);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if d == 0 {
            n = 1; // infinity is stored as 1/0
        }
        RationalCoeff { num: n, den: d }
    }

    pub fn integer(v: i64) -> Self {
        RationalCoeff { num: v, den: 1 }
    }

    pub fn infinity() -> Self {
        RationalCoeff { num: 1, den: 0 }
    }

    pub fn empty() -> Self {
        RationalCoeff { num: 0, den: 0 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_empty(&self) -> bool {
        self.num == 0 && self.den == 0
    }

    pub fn is_infinity(&self) -> bool {
        self.den == 0 && !self.is_empty()
    }

    /// 1/r with the conventions 1/0 = infinity and 1/infinity = 0. The empty
    /// filling passes through.
    pub fn reciprocal(&self) -> Self {
        if self.is_empty() {
            return *self;
        }
        Self::reduced(self.den, self.num)
    }

    pub fn add_integer(&self, u: i64) -> Self {
        if self.is_empty() || self.is_infinity() {
            return *self;
        }
        Self::reduced(self.num + u * self.den, self.den)
    }
}

impl std::fmt::Display for RationalCoeff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            write!(f, "empty")
        } else if self.is_infinity() {
            write!(f, "inf")
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Twist move along an unknotted component: u full twists send its own
/// coefficient r to 1/(u + 1/r) and shift every other coefficient by
/// u * lk^2. The caller is responsible for the component actually being
/// unknotted.
pub fn r1_twist(
    r_i: RationalCoeff,
    u: i64,
    others: &[(RationalCoeff, i64)],
) -> (RationalCoeff, Vec<RationalCoeff>) {
    let twisted = if r_i.is_empty() {
        r_i
    } else {
        r_i.reciprocal().add_integer(u).reciprocal()
    };
    let shifted = others
        .iter()
        .map(|(r_j, lk)| r_j.add_integer(u * lk * lk))
        .collect();
    (twisted, shifted)
}

/// Surgery along the (2, 2s)-torus link with coefficients alpha_i/beta_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusLinkSurgery {
    pub s: i64,
    pub alpha1: i64,
    pub beta1: i64,
    pub alpha2: i64,
    pub beta2: i64,
}

impl TorusLinkSurgery {
    pub fn new(s: i64, alpha1: i64, beta1: i64, alpha2: i64, beta2: i64) -> Result<Self> {
        if s.abs() < 2 {
            return Err(Error::InvalidSpec(format!(
                "torus link parameter |s| must be at least 2, got {s}"
            )));
        }
        for (a, b) in [(alpha1, beta1), (alpha2, beta2)] {
            if b < 0 || a.gcd(&b) != 1 {
                return Err(Error::InvalidSpec(format!(
                    "coefficient {a}/{b} must be reduced with nonnegative denominator"
                )));
            }
            if a - s * b == 0 {
                return Err(Error::InvalidSpec(format!(
                    "degenerate filling: alpha - s*beta = 0 for {a}/{b}"
                )));
            }
        }
        Ok(TorusLinkSurgery {
            s,
            alpha1,
            beta1,
            alpha2,
            beta2,
        })
    }

    pub fn swapped(&self) -> Self {
        TorusLinkSurgery {
            s: self.s,
            alpha1: self.alpha2,
            beta1: self.beta2,
            alpha2: self.alpha1,
            beta2: self.beta1,
        }
    }
}

/// The lens space produced by a (2, 2s)-torus link surgery: defined exactly
/// when one of |alpha_i - s beta_i| is 1, in which case
/// L(alpha1 alpha2 - s^2 beta1 beta2, (alpha1 - s beta1) beta2 + eps beta1)
/// with eps the unit side. Ok(None) when neither side is a unit; a distinct
/// error when the formula fires but the order degenerates below 2.
pub fn torus_link_lens(t: &TorusLinkSurgery) -> Result<Option<LensSpace>> {
    let e1 = t.alpha1 - t.s * t.beta1;
    let e2 = t.alpha2 - t.s * t.beta2;
    let (a1, b1, eps) = if e2.abs() == 1 {
        (t.alpha1, t.beta1, e2)
    } else if e1.abs() == 1 {
        (t.alpha2, t.beta2, e1)
    } else {
        return Ok(None);
    };
    debug_assert_eq!(eps.abs(), 1, "unit side must recompute to +-1");
    let b2 = if e2.abs() == 1 { t.beta2 } else { t.beta1 };
    let p = t.alpha1 * t.alpha2 - t.s * t.s * t.beta1 * t.beta2;
    if p.abs() < 2 {
        return Err(Error::DegenerateOrder(p));
    }
    let q = (a1 - t.s * b1) * b2 + eps * b1;
    Ok(Some(LensSpace::new(p, q)?))
}

/// Trefoil datum: p/q surgery along the (2, 3)-torus knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrefoilSurgery {
    pub p: i64,
    pub q: i64,
}

/// p/q surgery along the right-handed trefoil is a lens space exactly when
/// |p - 6q| = 1, and then it is L(p, 4q).
pub fn trefoil_surgery(p: i64, q: i64) -> Result<Option<LensSpace>> {
    if q < 1 || p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    if (p - 6 * q).abs() != 1 {
        return Ok(None);
    }
    Ok(Some(LensSpace::new(p, 4 * q)?))
}

/// Which integer slope sits on the first component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeCase {
    One,
    Two,
    Three,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedSurgery {
    Trefoil(TrefoilSurgery),
    Torus(TorusLinkSurgery),
}

/// Reduces (W_1; c/1, p2/q2) with c in {1, 2, 3} to the surgery description
/// read off the corresponding framed-link picture: slope 1 gives p2/q2
/// surgery on the trefoil, slope 2 a (2, 4)-torus link, slope 3 a
/// (2, -6)-torus link.
pub fn reduce_w1(case: SlopeCase, r: RationalCoeff) -> Result<ReducedSurgery> {
    if r.is_empty() || r.is_infinity() {
        return Err(Error::InvalidSpec(format!(
            "second coefficient must be a finite fraction, got {r}"
        )));
    }
    let (p2, q2) = (r.numerator(), r.denominator());
    match case {
        SlopeCase::One => Ok(ReducedSurgery::Trefoil(TrefoilSurgery { p: p2, q: q2 })),
        SlopeCase::Two => Ok(ReducedSurgery::Torus(TorusLinkSurgery::new(
            2,
            -2,
            1,
            p2 - 2 * q2,
            q2,
        )?)),
        SlopeCase::Three => Ok(ReducedSurgery::Torus(TorusLinkSurgery::new(
            -3,
            -3,
            2,
            p2 - 6 * q2,
            q2,
        )?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens::lens_equivalent;

    fn frac(p: i64, q: i64) -> RationalCoeff {
        RationalCoeff::new(p, q).unwrap()
    }

    #[test]
    fn twist_coefficient_examples() {
        let (r, _) = r1_twist(RationalCoeff::infinity(), 1, &[]);
        assert_eq!(r, RationalCoeff::integer(1));

        let (r, _) = r1_twist(frac(2, 1), -1, &[]);
        assert_eq!(r, RationalCoeff::integer(-2));

        let (_, others) = r1_twist(frac(2, 1), 3, &[(frac(5, 1), 2)]);
        assert_eq!(others, vec![RationalCoeff::integer(17)]);

        // empty fillings pass through unchanged
        let (r, others) = r1_twist(RationalCoeff::empty(), 4, &[(RationalCoeff::empty(), 3)]);
        assert!(r.is_empty());
        assert!(others[0].is_empty());
    }

    #[test]
    fn twist_round_trip() {
        let cases = [
            frac(2, 1),
            frac(-7, 3),
            frac(0, 1),
            RationalCoeff::infinity(),
            RationalCoeff::empty(),
        ];
        for r in cases {
            for u in [-3i64, -1, 1, 2, 5] {
                let others = [(frac(5, 2), 2), (RationalCoeff::infinity(), 1)];
                let (r1, o1) = r1_twist(r, u, &others);
                let paired: Vec<(RationalCoeff, i64)> =
                    o1.into_iter().zip([2, 1]).collect();
                let (r2, o2) = r1_twist(r1, -u, &paired);
                assert_eq!(r2, r, "twisting by {u} then {} must restore", -u);
                assert_eq!(o2, vec![frac(5, 2), RationalCoeff::infinity()]);
            }
        }
    }

    #[test]
    fn torus_link_lens_examples() {
        // slope-2 table at p2 = 3, q2 = 1: must match L(2 p2, 8 q2 - p2)
        let t = TorusLinkSurgery::new(2, -2, 1, 1, 1).unwrap();
        let space = torus_link_lens(&t).unwrap().unwrap();
        assert!(lens_equivalent(&space, &LensSpace::new(6, 5).unwrap()));

        // slope-3 table at p2 = 2, q2 = 1: must match L(3 p2, 3 q2 - 2 p2)
        let t = TorusLinkSurgery::new(-3, -3, 2, -4, 1).unwrap();
        let space = torus_link_lens(&t).unwrap().unwrap();
        assert!(lens_equivalent(&space, &LensSpace::new(6, -1).unwrap()));

        // degenerate order is flagged distinctly
        let t = TorusLinkSurgery::new(2, 0, 1, 1, 0).unwrap();
        assert!(matches!(torus_link_lens(&t), Err(Error::DegenerateOrder(0))));

        // no unit side: not a lens surgery
        let t = TorusLinkSurgery::new(2, 7, 1, 9, 1).unwrap();
        assert!(torus_link_lens(&t).unwrap().is_none());
    }

    #[test]
    fn torus_link_lens_is_symmetric() {
        let tuples = [
            (2, -2, 1, 1, 1),
            (2, -2, 1, 5, 1),
            (-3, -3, 2, -4, 1),
            (2, 3, 1, 7, 2),
            (-2, -1, 1, -7, 3),
            (3, 2, 1, 10, 3),
        ];
        for (s, a1, b1, a2, b2) in tuples {
            let t = match TorusLinkSurgery::new(s, a1, b1, a2, b2) {
                Ok(t) => t,
                Err(_) => continue,
            };
            let direct = torus_link_lens(&t);
            let swapped = torus_link_lens(&t.swapped());
            match (direct, swapped) {
                (Ok(Some(x)), Ok(Some(y))) => {
                    assert!(lens_equivalent(&x, &y), "swap must agree for {t:?}")
                }
                (Ok(None), Ok(None)) => {}
                (Err(_), Err(_)) => {}
                other => panic!("swap changed the outcome for {t:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn reduce_tables() {
        match reduce_w1(SlopeCase::Two, frac(3, 1)).unwrap() {
            ReducedSurgery::Torus(t) => {
                assert_eq!((t.s, t.alpha1, t.beta1, t.alpha2, t.beta2), (2, -2, 1, 1, 1))
            }
            other => panic!("expected torus link, got {other:?}"),
        }
        match reduce_w1(SlopeCase::Three, frac(2, 1)).unwrap() {
            ReducedSurgery::Torus(t) => {
                assert_eq!(
                    (t.s, t.alpha1, t.beta1, t.alpha2, t.beta2),
                    (-3, -3, 2, -4, 1)
                )
            }
            other => panic!("expected torus link, got {other:?}"),
        }
        match reduce_w1(SlopeCase::One, frac(7, 1)).unwrap() {
            ReducedSurgery::Trefoil(t) => assert_eq!((t.p, t.q), (7, 1)),
            other => panic!("expected trefoil, got {other:?}"),
        }
    }

    #[test]
    fn trefoil_examples() {
        let space = trefoil_surgery(7, 1).unwrap().unwrap();
        assert_eq!(space, LensSpace::new(7, 4).unwrap());
        let space = trefoil_surgery(5, 1).unwrap().unwrap();
        assert_eq!(space, LensSpace::new(5, 4).unwrap());
        assert!(trefoil_surgery(8, 1).unwrap().is_none());
        assert!(trefoil_surgery(4, 2).is_err());
    }
}
