use std::fmt;
use std::str::FromStr;

use super::{ring_ops, Int, Ring, RingError};

/// `a + b*w` with `w^2 = w - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycScalar {
    pub a: Int,
    pub b: Int,
}

impl CycScalar {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>) -> Self {
        CycScalar {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        CycScalar::default()
    }

    pub fn one() -> Self {
        CycScalar::new(1, 0)
    }

    pub fn from_int(a: impl Into<Int>) -> Self {
        CycScalar::new(a, 0)
    }

    /// The primitive sixth root of unity `w`.
    pub fn omega() -> Self {
        CycScalar::new(0, 1)
    }

    /// `w^k` for any integer `k`; `w` has order 6.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(6) {
            0 => CycScalar::new(1, 0),
            1 => CycScalar::new(0, 1),
            2 => CycScalar::new(-1, 1),
            3 => CycScalar::new(-1, 0),
            4 => CycScalar::new(0, -1),
            _ => CycScalar::new(1, -1),
        }
    }

    /// `i*sqrt(3) = 2w - 1`.
    pub fn i_sqrt3() -> Self {
        CycScalar::new(-1, 2)
    }

    /// The complex conjugate `a + b*w^-1 = (a + b) - b*w`.
    pub fn conj(&self) -> Self {
        CycScalar {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Field norm `a^2 + ab + b^2`.
    pub fn norm(&self) -> Int {
        &(&(&self.a * &self.a) + &(&self.a * &self.b)) + &(&self.b * &self.b)
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn inverse(&self) -> Result<Self, RingError> {
        if self.is_unit() {
            Ok(self.conj())
        } else {
            Err(RingError::NotAUnit(self.to_string()))
        }
    }

    /// Exact quotient in `Z[w]`, `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let n = rhs.norm();
        let num = self.mul_ref(&rhs.conj());
        Some(CycScalar {
            a: num.a.div_exact(&n)?,
            b: num.b.div_exact(&n)?,
        })
    }

    /// Multiplication by `w`: `(a + b w) w = -b + (a + b) w`.
    pub fn mul_omega(&self) -> Self {
        CycScalar {
            a: -&self.b,
            b: &self.a + &self.b,
        }
    }

    /// Complex embedding with `w = (1 + i sqrt 3)/2`. Diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let a = self.a.to_big().to_string().parse::<f64>().unwrap_or(f64::NAN);
        let b = self.b.to_big().to_string().parse::<f64>().unwrap_or(f64::NAN);
        (a + 0.5 * b, b * 3f64.sqrt() / 2.0)
    }

    /// `self += x * y`, avoiding temporaries for machine-sized values.
    #[inline]
    pub fn add_mul_assign(&mut self, x: &Self, y: &Self) {
        // (a+bw)(c+dw) = (ac - bd) + (ad + bc + bd) w
        let bd = &x.b * &y.b;
        self.a.add_mul_assign(&x.a, &y.a);
        self.a.sub_assign_ref(&bd);
        self.b.add_mul_assign(&x.a, &y.b);
        self.b.add_mul_assign(&x.b, &y.a);
        self.b.add_assign_ref(&bd);
    }
}

impl Ring for CycScalar {
    fn zero_like(&self) -> Self {
        CycScalar::zero()
    }
    fn one_like(&self) -> Self {
        CycScalar::one()
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    #[inline]
    fn add_ref(&self, rhs: &Self) -> Self {
        CycScalar {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
    fn neg_ref(&self) -> Self {
        CycScalar {
            a: -&self.a,
            b: -&self.b,
        }
    }
    #[inline]
    fn sub_ref(&self, rhs: &Self) -> Self {
        CycScalar {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
    #[inline]
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = CycScalar::zero();
        out.add_mul_assign(self, rhs);
        out
    }
    #[inline]
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.a.add_assign_ref(&rhs.a);
        self.b.add_assign_ref(&rhs.b);
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        CycScalar::add_mul_assign(self, a, b);
    }
}

ring_ops!(CycScalar);

impl From<i64> for CycScalar {
    fn from(v: i64) -> Self {
        CycScalar::from_int(v)
    }
}

/// Renders as `a+b*w`, eliding zero parts; zero renders as `0`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*w", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}{}*w", self.a, self.b)
                } else {
                    write!(f, "{}+{}*w", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Z[w] scalar {0:?}")]
pub struct CycParseError(pub String);

impl FromStr for CycScalar {
    type Err = CycParseError;

    /// Accepts `a`, `b*w`, `a+b*w`, `a-b*w` (whitespace ignored).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CycParseError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let Some(body) = compact.strip_suffix("*w") else {
            return compact.parse::<Int>().map(CycScalar::from_int).map_err(|_| err());
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (a, b) = match split {
            Some(i) => {
                let a = body[..i].parse::<Int>().map_err(|_| err())?;
                let b_text = body[i..].trim_start_matches('+');
                (a, b_text.parse::<Int>().map_err(|_| err())?)
            }
            None => (Int::ZERO, body.parse::<Int>().map_err(|_| err())?),
        };
        Ok(CycScalar { a, b })
    }
}
