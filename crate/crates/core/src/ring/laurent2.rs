use std::fmt;

use super::{ring_ops, CycScalar, Int, LaurentPoly1, Ring, RingError};

/// An integer Laurent polynomial in two variables.
///
/// Inside the Links-Gould machinery the variables are `s0 = sqrt(t0)` and
/// `s1 = sqrt(t1)`; finished invariant values are re-expressed in `t0, t1`
/// with [`LaurentPoly2::halve_exponents`]. Terms are sorted
/// lexicographically by exponent pair and never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: Vec<((i32, i32), Int)>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Int::ONE, 0, 0)
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        Self::monomial(c.into(), 0, 0)
    }

    pub fn monomial(c: impl Into<Int>, e0: i32, e1: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly2 {
                terms: vec![((e0, e1), c)],
            }
        }
    }

    /// First variable to the power `e`.
    pub fn x0(e: i32) -> Self {
        Self::monomial(1, e, 0)
    }

    /// Second variable to the power `e`.
    pub fn x1(e: i32) -> Self {
        Self::monomial(1, 0, e)
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), Int)>>(terms: I) -> Self {
        let mut v: Vec<((i32, i32), Int)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<((i32, i32), Int)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => lc.add_assign_ref(&c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly2 { terms: out }
    }

    pub fn terms(&self) -> &[((i32, i32), Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e0: i32, e1: i32) -> Int {
        match self.terms.binary_search_by_key(&(e0, e1), |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_zero()) && self.terms.windows(2).all(|w| w[0].0 < w[1].0)
    }

    /// True iff every exponent pair is even, i.e. the element lies in
    /// `Z[t0^+-1, t1^+-1]` when the variables are `sqrt(t0), sqrt(t1)`.
    pub fn has_even_exponents(&self) -> bool {
        self.terms.iter().all(|((a, b), _)| a % 2 == 0 && b % 2 == 0)
    }

    /// Rewrites `s0^(2a) s1^(2b)` as `t0^a t1^b`; `None` if any exponent is odd.
    pub fn halve_exponents(&self) -> Option<Self> {
        if !self.has_even_exponents() {
            return None;
        }
        Some(LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a / 2, b / 2), c.clone()))
                .collect(),
        })
    }

    /// Inverse of [`halve_exponents`](Self::halve_exponents).
    pub fn double_exponents(&self) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a * 2, b * 2), c.clone()))
                .collect(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && (self.terms[0].1.is_one() || (-&self.terms[0].1).is_one())
    }

    pub fn inverse(&self) -> Result<Self, RingError> {
        if !self.is_unit() {
            return Err(RingError::NotAUnit(self.to_string()));
        }
        let ((a, b), c) = &self.terms[0];
        Ok(Self::monomial(c.clone(), -a, -b))
    }

    /// Substitutes `x0 := u0 t^k0`, `x1 := u1 t^k1` into `Z[w][t, 1/t]`.
    /// `u0`, `u1` must be units.
    pub fn substitute(&self, u0: &CycScalar, k0: i32, u1: &CycScalar, k1: i32) -> Result<LaurentPoly1, RingError> {
        let (i0, i1) = (u0.inverse()?, u1.inverse()?);
        let pow = |u: &CycScalar, inv: &CycScalar, e: i32| {
            if e < 0 {
                inv.pow(e.unsigned_abs())
            } else {
                u.pow(e as u32)
            }
        };
        Ok(LaurentPoly1::from_terms(self.terms.iter().map(|((a, b), c)| {
            let coeff = pow(u0, &i0, *a)
                .mul_ref(&pow(u1, &i1, *b))
                .mul_ref(&CycScalar::from_int(c.clone()));
            (a * k0 + b * k1, coeff)
        })))
    }

    /// Sets the second variable to 1, leaving an integer polynomial in the first.
    pub fn at_second_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, _), c)| ((*a, 0), c.clone())))
    }

    /// Sets the first variable to 1.
    pub fn at_first_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((_, b), c)| ((0, *b), c.clone())))
    }

    /// Renders with the given variable names, e.g. `["t0", "t1"]`.
    pub fn display_with(&self, names: [&str; 2]) -> String {
        if self.terms.is_empty() {
            return "(0)".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for ((a, b), c) in &self.terms {
            let mut s = format!("({c})");
            if *a != 0 {
                s.push_str(&format!("*{}^{a}", names[0]));
            }
            if *b != 0 {
                s.push_str(&format!("*{}^{b}", names[1]));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl Ring for LaurentPoly2 {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().flat_map(|((a0, a1), ca)| {
            rhs.terms
                .iter()
                .map(move |((b0, b1), cb)| ((a0 + b0, a1 + b1), ca * cb))
        }))
    }
}

ring_ops!(LaurentPoly2);

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(["s0", "s1"]))
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
