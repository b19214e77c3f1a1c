//! Exact coefficient rings.
//!
//! * [`CycScalar`]: the Eisenstein integers `Z[w]`, `w = exp(i*pi/3)`.
//! * [`LaurentPoly1`]: Laurent polynomials in `t` over `Z[w]`.
//! * [`LaurentPoly2`]: integer Laurent polynomials in `s0 = sqrt(t0)`, `s1 = sqrt(t1)`.
//! * [`ExtScalar`]: `even + odd * Y` with `Y^2` equal to a fixed modulus.
//!
//! Nothing here touches floating point.

mod cyc;
mod ext;
mod int;
mod laurent1;
mod laurent2;

pub use cyc::CycScalar;
pub use ext::{generic_modulus, specialize, specialized_modulus, ExtScalar};
pub use int::Int;
pub use laurent1::{LaurentPoly1, PolyParseError};
pub use laurent2::LaurentPoly2;

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands carry different Y^2 moduli")]
    ModulusMismatch,
    #[error("{0} is not a unit")]
    NotAUnit(String),
}

/// The operations the operator and invariant code needs from a coefficient
/// ring. Constants are produced from an existing element because some rings
/// (the `Y` extensions) carry runtime data.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.add_assign_ref(&a.mul_ref(b));
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

/// A ring whose units can be inverted exactly. Division by anything other
/// than a unit is never needed and always an error.
pub trait UnitRing: Ring {
    fn try_inverse(&self) -> Result<Self, RingError>;
}

impl UnitRing for CycScalar {
    fn try_inverse(&self) -> Result<Self, RingError> {
        self.inverse()
    }
}

impl UnitRing for LaurentPoly1 {
    fn try_inverse(&self) -> Result<Self, RingError> {
        self.inverse()
    }
}

impl UnitRing for LaurentPoly2 {
    fn try_inverse(&self) -> Result<Self, RingError> {
        self.inverse()
    }
}

impl<B: UnitRing> UnitRing for ExtScalar<B> {
    /// Only units of the base ring are inverted.
    fn try_inverse(&self) -> Result<Self, RingError> {
        if !self.is_y_free() {
            return Err(RingError::NotAUnit(self.to_string()));
        }
        Ok(ExtScalar::from_base(self.even.try_inverse()?, self.modulus().clone()))
    }
}

/// Implements the std arithmetic operators for a type that implements [`Ring`].
macro_rules! ring_ops {
    ($t:ty) => {
        impl<'a> ::std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                $crate::ring::Ring::add_ref(self, rhs)
            }
        }
        impl<'a> ::std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                $crate::ring::Ring::sub_ref(self, rhs)
            }
        }
        impl<'a> ::std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                $crate::ring::Ring::mul_ref(self, rhs)
            }
        }
        impl ::std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::neg_ref(self)
            }
        }
        impl ::std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::ring::Ring::add_ref(&self, &rhs)
            }
        }
        impl ::std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::ring::Ring::sub_ref(&self, &rhs)
            }
        }
        impl ::std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::ring::Ring::mul_ref(&self, &rhs)
            }
        }
        impl ::std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::ring::Ring::neg_ref(&self)
            }
        }
    };
}
pub(crate) use ring_ops;
