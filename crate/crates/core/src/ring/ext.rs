use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use super::{CycScalar, LaurentPoly1, LaurentPoly2, Ring, RingError};

/// `even + odd * Y` where `Y^2 = modulus`.
///
/// `Y` is a formal square root of an element of the base ring that has no
/// square root there. Products are always reduced, so `Y^2` never appears.
#[derive(Clone)]
pub struct ExtScalar<B> {
    pub even: B,
    pub odd: B,
    modulus: Arc<B>,
}

impl<B: Ring> ExtScalar<B> {
    pub fn new(even: B, odd: B, modulus: Arc<B>) -> Self {
        ExtScalar { even, odd, modulus }
    }

    pub fn from_base(even: B, modulus: Arc<B>) -> Self {
        let odd = even.zero_like();
        ExtScalar { even, odd, modulus }
    }

    /// The adjoined square root itself.
    pub fn y(modulus: Arc<B>) -> Self {
        let zero = modulus.zero_like();
        ExtScalar {
            even: zero.clone(),
            odd: zero.one_like(),
            modulus,
        }
    }

    pub fn zero(modulus: Arc<B>) -> Self {
        Self::from_base(modulus.zero_like(), modulus)
    }

    pub fn one(modulus: Arc<B>) -> Self {
        Self::from_base(modulus.one_like(), modulus)
    }

    pub fn modulus(&self) -> &Arc<B> {
        &self.modulus
    }

    pub fn is_y_free(&self) -> bool {
        self.odd.is_zero()
    }

    /// The automorphism `Y -> -Y`.
    pub fn conjugate(&self) -> Self {
        ExtScalar {
            even: self.even.clone(),
            odd: self.odd.neg_ref(),
            modulus: self.modulus.clone(),
        }
    }

    fn same_modulus(&self, rhs: &Self) -> bool {
        Arc::ptr_eq(&self.modulus, &rhs.modulus) || *self.modulus == *rhs.modulus
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, RingError> {
        if !self.same_modulus(rhs) {
            return Err(RingError::ModulusMismatch);
        }
        Ok(ExtScalar {
            even: self.even.add_ref(&rhs.even),
            odd: self.odd.add_ref(&rhs.odd),
            modulus: self.modulus.clone(),
        })
    }

    /// `(a + bY)(c + dY) = (ac + bd p) + (ad + bc) Y`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, RingError> {
        if !self.same_modulus(rhs) {
            return Err(RingError::ModulusMismatch);
        }
        let mut even = self.even.mul_ref(&rhs.even);
        if !self.odd.is_zero() && !rhs.odd.is_zero() {
            even.add_assign_ref(&self.odd.mul_ref(&rhs.odd).mul_ref(&self.modulus));
        }
        let mut odd = self.even.mul_ref(&rhs.odd);
        odd.add_mul_assign(&self.odd, &rhs.even);
        Ok(ExtScalar {
            even,
            odd,
            modulus: self.modulus.clone(),
        })
    }

    /// Maps the even and odd parts through a base-ring homomorphism `f`,
    /// sending `Y` to the `Y` of the target with modulus `f(p)`.
    pub fn map_base<C: Ring>(&self, target_modulus: Arc<C>, f: impl Fn(&B) -> C) -> ExtScalar<C> {
        ExtScalar {
            even: f(&self.even),
            odd: f(&self.odd),
            modulus: target_modulus,
        }
    }
}

impl<B: Ring> PartialEq for ExtScalar<B> {
    fn eq(&self, other: &Self) -> bool {
        self.even == other.even && self.odd == other.odd && self.same_modulus(other)
    }
}

impl<B: Ring> Ring for ExtScalar<B> {
    fn zero_like(&self) -> Self {
        Self::zero(self.modulus.clone())
    }
    fn one_like(&self) -> Self {
        Self::one(self.modulus.clone())
    }
    fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("Y-extension operands must share a modulus")
    }
    fn neg_ref(&self) -> Self {
        ExtScalar {
            even: self.even.neg_ref(),
            odd: self.odd.neg_ref(),
            modulus: self.modulus.clone(),
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("Y-extension operands must share a modulus")
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        debug_assert!(self.same_modulus(rhs));
        self.even.add_assign_ref(&rhs.even);
        self.odd.add_assign_ref(&rhs.odd);
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        debug_assert!(a.same_modulus(b) && self.same_modulus(a));
        if !a.even.is_zero() {
            self.even.add_mul_assign(&a.even, &b.even);
            self.odd.add_mul_assign(&a.even, &b.odd);
        }
        if !a.odd.is_zero() {
            self.odd.add_mul_assign(&a.odd, &b.even);
            if !b.odd.is_zero() {
                let bd = a.odd.mul_ref(&b.odd);
                self.even.add_mul_assign(&bd, &self.modulus);
            }
        }
    }
}

impl<B: Ring> fmt::Display for ExtScalar<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.odd.is_zero() {
            write!(f, "{}", self.even)
        } else if self.even.is_zero() {
            write!(f, "[{}]*Y", self.odd)
        } else {
            write!(f, "[{}] + [{}]*Y", self.even, self.odd)
        }
    }
}

impl<B: Ring> fmt::Debug for ExtScalar<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (Y^2 = {})", self.modulus)
    }
}

impl<'a, B: Ring> Add<&'a ExtScalar<B>> for &'a ExtScalar<B> {
    type Output = ExtScalar<B>;
    fn add(self, rhs: &'a ExtScalar<B>) -> ExtScalar<B> {
        self.add_ref(rhs)
    }
}

impl<'a, B: Ring> Sub<&'a ExtScalar<B>> for &'a ExtScalar<B> {
    type Output = ExtScalar<B>;
    fn sub(self, rhs: &'a ExtScalar<B>) -> ExtScalar<B> {
        self.sub_ref(rhs)
    }
}

impl<'a, B: Ring> Mul<&'a ExtScalar<B>> for &'a ExtScalar<B> {
    type Output = ExtScalar<B>;
    fn mul(self, rhs: &'a ExtScalar<B>) -> ExtScalar<B> {
        self.mul_ref(rhs)
    }
}

impl<B: Ring> Neg for &ExtScalar<B> {
    type Output = ExtScalar<B>;
    fn neg(self) -> ExtScalar<B> {
        self.neg_ref()
    }
}

/// `Y^2 = (t0 - 1)(1 - t1)` written in `s0 = sqrt(t0)`, `s1 = sqrt(t1)`.
pub fn generic_modulus() -> Arc<LaurentPoly2> {
    static CELL: OnceLock<Arc<LaurentPoly2>> = OnceLock::new();
    CELL.get_or_init(|| {
        let one = LaurentPoly2::one();
        Arc::new(&(&LaurentPoly2::x0(2) - &one) * &(&one - &LaurentPoly2::x1(2)))
    })
    .clone()
}

/// `Y^2` after `t0 -> t^2`, `t1 -> w^2 t^-2`, i.e. `t^2 - w + (w - 1) t^-2`.
pub fn specialized_modulus() -> Arc<LaurentPoly1> {
    static CELL: OnceLock<Arc<LaurentPoly1>> = OnceLock::new();
    CELL.get_or_init(|| Arc::new(specialize_base(&generic_modulus())))
        .clone()
}

/// `s0 -> t`, `s1 -> w t^-1`.
fn specialize_base(p: &LaurentPoly2) -> LaurentPoly1 {
    p.substitute(&CycScalar::one(), 1, &CycScalar::omega(), -1)
        .expect("1 and w are units")
}

/// The ring homomorphism `s0 -> t`, `s1 -> w/t`, `Y -> Y`; hence `t0 -> t^2`
/// and `t1 -> w^2 t^-2`.
pub fn specialize(x: &ExtScalar<LaurentPoly2>) -> ExtScalar<LaurentPoly1> {
    let target = if Arc::ptr_eq(x.modulus(), &generic_modulus()) {
        specialized_modulus()
    } else {
        Arc::new(specialize_base(x.modulus()))
    };
    x.map_base(target, specialize_base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Int;
    use proptest::prelude::*;

    fn gen(even: LaurentPoly2, odd: LaurentPoly2) -> ExtScalar<LaurentPoly2> {
        ExtScalar::new(even, odd, generic_modulus())
    }

    #[test]
    fn y_squared_is_modulus() {
        let y = ExtScalar::y(generic_modulus());
        let yy = &y * &y;
        assert_eq!(yy.even, *generic_modulus());
        assert!(yy.is_y_free());
    }

    #[test]
    fn difference_of_squares() {
        let one = ExtScalar::one(generic_modulus());
        let y = ExtScalar::y(generic_modulus());
        let p = &(&one + &y) * &(&one - &y);
        assert_eq!(p.even, &LaurentPoly2::one() - &*generic_modulus());
        assert!(p.is_y_free());
    }

    #[test]
    fn specialized_modulus_expansion() {
        let expect = LaurentPoly1::from_terms([
            (2, CycScalar::one()),
            (0, CycScalar::new(0, -1)),
            (-2, CycScalar::new(-1, 1)),
        ]);
        assert_eq!(*specialized_modulus(), expect);
        let y = ExtScalar::y(specialized_modulus());
        assert_eq!((&y * &y).even, expect);
    }

    #[test]
    fn specialize_variables() {
        let t0 = gen(LaurentPoly2::x0(2), LaurentPoly2::zero());
        let t1 = gen(LaurentPoly2::x1(2), LaurentPoly2::zero());
        let s0s1 = gen(LaurentPoly2::monomial(1, 1, 1), LaurentPoly2::zero());
        assert_eq!(specialize(&t0).even, LaurentPoly1::t_pow(2));
        assert_eq!(specialize(&t1).even, LaurentPoly1::monomial(CycScalar::new(-1, 1), -2));
        assert_eq!(specialize(&s0s1).even, LaurentPoly1::constant(CycScalar::omega()));
        assert!(Arc::ptr_eq(specialize(&t0).modulus(), &specialized_modulus()));
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = ExtScalar::y(generic_modulus());
        let b = ExtScalar::y(Arc::new(LaurentPoly2::x0(1)));
        assert_eq!(a.try_mul(&b), Err(RingError::ModulusMismatch));
        assert_eq!(a.try_add(&b), Err(RingError::ModulusMismatch));
        // equal by value is fine
        let c = ExtScalar::y(Arc::new((*generic_modulus()).clone()));
        assert!(a.try_mul(&c).is_ok());
    }

    fn arb_l2() -> impl Strategy<Value = LaurentPoly2> {
        prop::collection::vec((-3i32..3, -3i32..3, -5i64..5), 0..4)
            .prop_map(|v| LaurentPoly2::from_terms(v.into_iter().map(|(a, b, c)| ((a, b), Int::from(c)))))
    }

    fn arb_ext() -> impl Strategy<Value = ExtScalar<LaurentPoly2>> {
        (arb_l2(), arb_l2()).prop_map(|(e, o)| gen(e, o))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn conjugation_is_an_automorphism(x in arb_ext(), y in arb_ext()) {
            prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
            prop_assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
        }

        #[test]
        fn specialize_is_a_homomorphism(x in arb_ext(), y in arb_ext()) {
            prop_assert_eq!(specialize(&(&x * &y)), &specialize(&x) * &specialize(&y));
            prop_assert_eq!(specialize(&(&x + &y)), &specialize(&x) + &specialize(&y));
        }

        #[test]
        fn fused_multiply_add_matches(x in arb_ext(), y in arb_ext(), z in arb_ext()) {
            let mut acc = z.clone();
            acc.add_mul_assign(&x, &y);
            prop_assert_eq!(acc, &z + &(&x * &y));
        }
    }
}
