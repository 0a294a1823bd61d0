//! The Alexander polynomial family of the twisted Whitehead links W_n and of
//! the 3-component extension obtained by adding a closing component that is
//! Hopf-linked with both others.
//!
//! The 2-variable polynomial is n(t1-1)(t2-1); the 3-variable one is
//!
//!   n(t1 t2 - 1)(t1 - 1)(t2 - 1) + (t3 - 1) g_n(t1, t2, t3)
//!
//! with g_n = -n(t1-1)(t2-1) - t1 t2. The Torres and duality checks validate
//! the hard-coded family symbolically.

use num_traits::{One, Signed};

use crate::cyclo::Sign;
use crate::error::{Error, Result};
use crate::laurent::MultiLaurent;

/// Twist parameter plus the sign entering the torsion closed form. For the
/// concrete W_n family the sign is computed from the polynomial family; the
/// generalized engine accepts it as a free input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkFamilyParams {
    pub n: u32,
    pub epsilon: Sign,
}

impl LinkFamilyParams {
    /// Parameters of the concrete twisted Whitehead link; epsilon comes out
    /// of the polynomial family itself.
    pub fn whitehead(n: u32) -> Self {
        let epsilon = epsilon_of_g(&g_poly(n)).expect("family polynomial has unit augmentation");
        LinkFamilyParams { n, epsilon }
    }

    /// Parameters of a generalized link with the same Alexander polynomials.
    pub fn generalized(n: u32, epsilon: Sign) -> Self {
        LinkFamilyParams { n, epsilon }
    }
}

/// n(t1-1)(t2-1) in two variables.
pub fn alexander_wn(n: u32) -> MultiLaurent {
    let t1m1 = MultiLaurent::var(2, 0) - MultiLaurent::constant(2, 1);
    let t2m1 = MultiLaurent::var(2, 1) - MultiLaurent::constant(2, 1);
    (t1m1 * t2m1).scale(i64::from(n))
}

/// g_n(t1, t2, t3) = -n(t1-1)(t2-1) - t1 t2 in three variables.
pub fn g_poly(n: u32) -> MultiLaurent {
    let t1m1 = MultiLaurent::var(3, 0) - MultiLaurent::constant(3, 1);
    let t2m1 = MultiLaurent::var(3, 1) - MultiLaurent::constant(3, 1);
    let t1t2 = MultiLaurent::monomial(3, vec![1, 1, 0], 1);
    (t1m1 * t2m1).scale(-i64::from(n)) - t1t2
}

/// n(t1 t2 - 1)(t1 - 1)(t2 - 1) + (t3 - 1) g_n.
pub fn alexander_wbar(n: u32) -> MultiLaurent {
    let t1m1 = MultiLaurent::var(3, 0) - MultiLaurent::constant(3, 1);
    let t2m1 = MultiLaurent::var(3, 1) - MultiLaurent::constant(3, 1);
    let t3m1 = MultiLaurent::var(3, 2) - MultiLaurent::constant(3, 1);
    let t1t2m1 = MultiLaurent::monomial(3, vec![1, 1, 0], 1) - MultiLaurent::constant(3, 1);
    (t1t2m1 * t1m1 * t2m1).scale(i64::from(n)) + t3m1 * g_poly(n)
}

/// The sign defined by -epsilon = g(1,1,1); errors when the augmentation is
/// not a unit, which signals a polynomial outside the family.
pub fn epsilon_of_g(g: &MultiLaurent) -> Result<Sign> {
    let aug = g.eval_all_ones();
    if !aug.abs().is_one() {
        return Err(Error::NotUnitAugmentation(aug));
    }
    Sign::from_value(i64::try_from(-aug).expect("augmentation is +-1"))
}

/// Verifies the two Torres specializations of the 3-component polynomial:
/// at t2 = 1 it collapses to a unit monomial times (t3 - 1), and at t3 = 1 it
/// equals (t1 t2 - 1) times the 2-variable polynomial up to a unit monomial.
pub fn torres_check(n: u32) -> bool {
    let wbar = alexander_wbar(n);

    // (a) t2 = 1: remaining variables are (t1, t3).
    let at_t2 = wbar.set_var_one(1).expect("valid index");
    let t3m1 = MultiLaurent::var(2, 1) - MultiLaurent::constant(2, 1);
    let ok_a = at_t2
        .unit_monomial_equivalent(&t3m1)
        .expect("same arity")
        .is_some();

    // (b) t3 = 1 against (t1 t2 - 1) * Delta_{W_n}.
    let at_t3 = wbar.set_var_one(2).expect("valid index");
    let t1t2m1 = MultiLaurent::monomial(2, vec![1, 1], 1) - MultiLaurent::constant(2, 1);
    let target = t1t2m1 * alexander_wn(n);
    let ok_b = at_t3
        .unit_monomial_equivalent(&target)
        .expect("same arity")
        .is_some();

    ok_a && ok_b
}

const DUALITY_WINDOW: std::ops::RangeInclusive<i64> = -2..=6;

/// Searches a small exponent window for (a, b, c) making
/// f = -t1^a t2^b t3^c f(1/t1, 1/t2, 1/t3) an exact identity. For n >= 1 the
/// match must occur at a = b = 2; the t3 exponent is left unconstrained.
pub fn duality_check(n: u32) -> bool {
    let wbar = alexander_wbar(n);
    for a in DUALITY_WINDOW {
        for b in DUALITY_WINDOW {
            for c in DUALITY_WINDOW {
                let transformed = wbar
                    .duality_transform(&[a, b, c], Sign::Minus)
                    .expect("matching arity");
                if transformed == wbar {
                    if n >= 1 && (a != 2 || b != 2) {
                        return false;
                    }
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{eval_at_root, CycloInt};

    fn p2(s: &str) -> MultiLaurent {
        MultiLaurent::parse(s, 2).unwrap()
    }

    fn p3(s: &str) -> MultiLaurent {
        MultiLaurent::parse(s, 3).unwrap()
    }

    #[test]
    fn two_variable_family() {
        assert!(alexander_wn(0).is_zero());
        assert_eq!(alexander_wn(1), p2("t1*t2 - t1 - t2 + 1"));
        assert_eq!(alexander_wn(4), p2("4*t1*t2 - 4*t1 - 4*t2 + 4"));
    }

    #[test]
    fn g_family() {
        assert_eq!(g_poly(1), p3("2*t1*t2 - t1 - t2 + 1").negate());
        assert_eq!(g_poly(0), p3("t1*t2").negate());
        // g_n(1, t2, 1) = -t2 for every n
        for n in 0..=8 {
            let restricted = g_poly(n)
                .set_var_one(0)
                .unwrap()
                .set_var_one(1) // former t3 after t1 is dropped
                .unwrap();
            assert_eq!(restricted, MultiLaurent::var(1, 0).negate(), "n={n}");
            // and consequently g_n(1, zeta_d, 1) = -zeta_d
            for d in [2u64, 3, 7] {
                let v = eval_at_root(&restricted, 1, d).unwrap();
                assert_eq!(v, CycloInt::root_power(d, 1).negate());
            }
        }
    }

    #[test]
    fn three_variable_family_specializations() {
        for n in 0..=6u32 {
            let wbar = alexander_wbar(n);
            // t3 = 1 kills the second summand
            let t1t2m1 = p2("t1*t2 - 1");
            assert_eq!(wbar.set_var_one(2).unwrap(), t1t2m1 * alexander_wn(n));
            // t2 = 1 leaves (t3 - 1) * (-t1); variables are (t1, t3)
            assert_eq!(wbar.set_var_one(1).unwrap(), p2("t1 - t1*t2"));
            // t1 = 1 leaves a unit monomial times (t3 - 1)
            let at_t1 = wbar.set_var_one(0).unwrap();
            assert!(at_t1
                .unit_monomial_equivalent(&p2("t2 - 1"))
                .unwrap()
                .is_some());
        }
        // augmentation vanishes
        assert_eq!(alexander_wbar(1).eval_all_ones(), 0.into());
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_of_g(&g_poly(1)).unwrap(), Sign::Plus);
        assert_eq!(epsilon_of_g(&g_poly(7)).unwrap(), Sign::Plus);
        let other = p3("t1 - 1 - t1*t2");
        assert_eq!(epsilon_of_g(&other).unwrap(), Sign::Plus);
        assert!(matches!(
            epsilon_of_g(&p3("2*t1")),
            Err(Error::NotUnitAugmentation(_))
        ));
    }

    #[test]
    fn torres_and_duality_hold_for_small_n() {
        for n in 0..=20 {
            assert!(torres_check(n), "torres n={n}");
            assert!(duality_check(n), "duality n={n}");
            assert_eq!(epsilon_of_g(&g_poly(n)).unwrap(), Sign::Plus, "epsilon n={n}");
        }
    }

    #[test]
    fn g_restricted_to_first_variable() {
        // g_n(t1, 1, 1) = -t1
        for n in 0..=10 {
            let restricted = g_poly(n).set_var_one(2).unwrap().set_var_one(1).unwrap();
            assert_eq!(restricted, MultiLaurent::var(1, 0).negate());
        }
    }

    #[test]
    fn whitehead_params_compute_epsilon() {
        for n in 0..=5 {
            assert_eq!(LinkFamilyParams::whitehead(n).epsilon, Sign::Plus);
        }
    }
}
