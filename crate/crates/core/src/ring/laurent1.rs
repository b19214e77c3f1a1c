use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{ring_ops, CycScalar, Ring, RingError};

/// A Laurent polynomial in `t` with coefficients in `Z[w]`.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly1 {
    terms: Vec<(i32, CycScalar)>,
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        LaurentPoly1 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(CycScalar::one())
    }

    pub fn constant(c: CycScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycScalar, exp: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly1 { terms: vec![(exp, c)] }
        }
    }

    /// `t^exp`.
    pub fn t_pow(exp: i32) -> Self {
        Self::monomial(CycScalar::one(), exp)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i32, CycScalar)>>(terms: I) -> Self {
        let mut v: Vec<(i32, CycScalar)> = terms.into_iter().collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, CycScalar)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => lc.add_assign_ref(&c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly1 { terms: out }
    }

    pub fn terms(&self) -> &[(i32, CycScalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn coefficient(&self, exp: i32) -> CycScalar {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => CycScalar::zero(),
        }
    }

    /// True when every stored coefficient is canonical (nonzero) and the
    /// exponents are strictly increasing.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_zero()) && self.terms.windows(2).all(|w| w[0].0 < w[1].0)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, x)| (*e, x.mul_ref(c))).collect();
        LaurentPoly1 { terms }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect();
        LaurentPoly1 { terms }
    }

    /// Units of `Z[w][t, 1/t]` are `u t^k` with `u` one of `+-w^j`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_unit()
    }

    pub fn inverse(&self) -> Result<Self, RingError> {
        if !self.is_unit() {
            return Err(RingError::NotAUnit(self.to_string()));
        }
        let (e, c) = &self.terms[0];
        Ok(Self::monomial(c.inverse()?, -e))
    }

    /// Division by a unit; any other divisor is an error.
    pub fn div_unit(&self, divisor: &Self) -> Result<Self, RingError> {
        Ok(self.mul_ref(&divisor.inverse()?))
    }

    /// Substitutes `t := v`. `v` must be a unit so that negative powers are exact.
    pub fn evaluate_at(&self, v: &CycScalar) -> Result<CycScalar, RingError> {
        let has_negative = self.min_exp().is_some_and(|e| e < 0);
        let v_inv = if has_negative { Some(v.inverse()?) } else { None };
        let mut acc = CycScalar::zero();
        for (e, c) in &self.terms {
            let base = if *e < 0 {
                v_inv.as_ref().expect("checked above")
            } else {
                v
            };
            acc.add_assign_ref(&c.mul_ref(&base.pow(e.unsigned_abs())));
        }
        Ok(acc)
    }

    /// Substitutes `t := u * t^k` for a unit `u`.
    pub fn substitute_monomial(&self, u: &CycScalar, k: i32) -> Result<Self, RingError> {
        let u_inv = u.inverse()?;
        Ok(Self::from_terms(self.terms.iter().map(|(e, c)| {
            let base = if *e < 0 { &u_inv } else { u };
            (e * k, c.mul_ref(&base.pow(e.unsigned_abs())))
        })))
    }

    fn add_scaled(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        let sign = |c: &CycScalar| if negate { c.neg_ref() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = if negate {
                        a[i].1.sub_ref(&b[j].1)
                    } else {
                        a[i].1.add_ref(&b[j].1)
                    };
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, sign(c))));
        LaurentPoly1 { terms: out }
    }

    fn mul_into_dense(&self, rhs: &Self, acc: &mut [CycScalar], lo: i32) {
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let slot = (ea + eb - lo) as usize;
                acc[slot].add_mul_assign(ca, cb);
            }
        }
    }
}

impl Ring for LaurentPoly1 {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, false)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, true)
    }
    fn neg_ref(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (*e, c.neg_ref())).collect();
        LaurentPoly1 { terms }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms[self.len() - 1].0 + rhs.terms[rhs.len() - 1].0;
        let span = (hi - lo + 1) as usize;
        if span <= 4 * self.len() * rhs.len() + 64 {
            let mut acc = vec![CycScalar::zero(); span];
            self.mul_into_dense(rhs, &mut acc, lo);
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect();
            LaurentPoly1 { terms }
        } else {
            Self::from_terms(
                self.terms
                    .iter()
                    .flat_map(|(ea, ca)| rhs.terms.iter().map(move |(eb, cb)| (ea + eb, ca.mul_ref(cb)))),
            )
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = a.mul_ref(b);
            return;
        }
        let lo = (a.terms[0].0 + b.terms[0].0).min(self.terms[0].0);
        let hi = (a.terms[a.len() - 1].0 + b.terms[b.len() - 1].0).max(self.terms[self.len() - 1].0);
        let span = (hi - lo + 1) as usize;
        if span > 4 * (a.len() * b.len() + self.len()) + 64 {
            *self = self.add_ref(&a.mul_ref(b));
            return;
        }
        let mut acc = vec![CycScalar::zero(); span];
        for (e, c) in self.terms.drain(..) {
            acc[(e - lo) as usize] = c;
        }
        a.mul_into_dense(b, &mut acc, lo);
        self.terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i32, c))
            .collect();
    }
}

ring_ops!(LaurentPoly1);

impl From<CycScalar> for LaurentPoly1 {
    fn from(c: CycScalar) -> Self {
        Self::constant(c)
    }
}

/// Canonical text form: `(c)*t^k` terms in ascending exponent joined by
/// `" + "`, the constant term without `*t^0`, and `(0)` for zero.
impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "(0)");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial parse error at byte {offset}: {message}")]
pub struct PolyParseError {
    pub offset: usize,
    pub message: String,
}

impl FromStr for LaurentPoly1 {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let err = |offset: usize, message: &str| PolyParseError {
            offset,
            message: message.to_string(),
        };
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let mut terms = Vec::new();
        loop {
            skip_ws(&mut pos);
            if bytes.get(pos) != Some(&b'(') {
                return Err(err(pos, "expected '('"));
            }
            let close = s[pos..]
                .find(')')
                .map(|i| pos + i)
                .ok_or_else(|| err(pos, "unclosed '('"))?;
            let coeff: CycScalar = s[pos + 1..close]
                .parse()
                .map_err(|_| err(pos + 1, "invalid coefficient"))?;
            pos = close + 1;
            skip_ws(&mut pos);
            let mut exp = 0;
            if s[pos..].starts_with("*t^") {
                pos += 3;
                let start = pos;
                if bytes.get(pos) == Some(&b'-') {
                    pos += 1;
                }
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                exp = s[start..pos].parse().map_err(|_| err(start, "invalid exponent"))?;
            }
            terms.push((exp, coeff));
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'+' {
                return Err(err(pos, "expected '+' between terms"));
            }
            pos += 1;
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> LaurentPoly1 {
        LaurentPoly1::t_pow(1)
    }
    fn c(a: i64, b: i64) -> LaurentPoly1 {
        LaurentPoly1::constant(CycScalar::new(a, b))
    }

    #[test]
    fn t_times_inverse() {
        assert_eq!(&t() * &LaurentPoly1::t_pow(-1), LaurentPoly1::one());
    }

    #[test]
    fn ado_entry_product() {
        // (t^2 - 1)(t^2 - w^2) = t^4 - w t^2 + (w - 1)
        let w2 = CycScalar::omega_pow(2);
        let lhs = &(&LaurentPoly1::t_pow(2) - &LaurentPoly1::one())
            * &(&LaurentPoly1::t_pow(2) - &LaurentPoly1::constant(w2));
        let rhs = LaurentPoly1::from_terms([
            (4, CycScalar::one()),
            (2, CycScalar::new(0, -1)),
            (0, CycScalar::new(-1, 1)),
        ]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation() {
        let p = &LaurentPoly1::t_pow(2) + &LaurentPoly1::t_pow(-2);
        assert_eq!(p.evaluate_at(&CycScalar::one()).unwrap(), CycScalar::from_int(2));
        let q = LaurentPoly1::t_pow(2);
        assert_eq!(q.evaluate_at(&CycScalar::omega()).unwrap(), CycScalar::new(-1, 1));
        assert!(p.evaluate_at(&CycScalar::from_int(2)).is_err());
        // nonnegative exponents need no inverse
        assert_eq!(q.evaluate_at(&CycScalar::from_int(2)).unwrap(), CycScalar::from_int(4));
    }

    #[test]
    fn unit_division_only() {
        let u = LaurentPoly1::monomial(CycScalar::omega_pow(2), 3);
        let inv = u.inverse().unwrap();
        assert_eq!(&u * &inv, LaurentPoly1::one());
        assert!((&t() + &LaurentPoly1::one()).inverse().is_err());
        assert!(LaurentPoly1::constant(CycScalar::from_int(3)).inverse().is_err());
    }

    #[test]
    fn text_format() {
        let p = LaurentPoly1::from_terms([(2, CycScalar::new(-1, 1)), (-2, CycScalar::one())]);
        assert_eq!(p.to_string(), "(1)*t^-2 + (-1+1*w)*t^2");
        assert_eq!(p.to_string().parse::<LaurentPoly1>().unwrap(), p);
        assert_eq!(LaurentPoly1::zero().to_string(), "(0)");
        assert_eq!("(0)".parse::<LaurentPoly1>().unwrap(), LaurentPoly1::zero());
        assert_eq!(LaurentPoly1::one().to_string(), "(1)");
        assert_eq!(
            " (1) + (2*w)*t^1 ".parse::<LaurentPoly1>().unwrap().to_string(),
            "(1) + (2*w)*t^1"
        );
        let e = "(1) + x".parse::<LaurentPoly1>().unwrap_err();
        assert_eq!(e.offset, 6);
        assert!("(1)*t^".parse::<LaurentPoly1>().is_err());
        assert!("(1+)".parse::<LaurentPoly1>().is_err());
    }

    #[test]
    fn substitution_reflects() {
        // t -> w/t sends t^2 + t^-2 to w^2 t^-2 + w^-2 t^2
        let p = &LaurentPoly1::t_pow(2) + &LaurentPoly1::t_pow(-2);
        let q = p.substitute_monomial(&CycScalar::omega(), -1).unwrap();
        let expect = LaurentPoly1::from_terms([(-2, CycScalar::omega_pow(2)), (2, CycScalar::omega_pow(-2))]);
        assert_eq!(q, expect);
        assert_ne!(q, p);
    }

    #[test]
    fn sparse_wide_product() {
        let a = &LaurentPoly1::t_pow(-500) + &c(1, 1);
        let b = &LaurentPoly1::t_pow(700) - &c(0, 1);
        let p = &a * &b;
        assert_eq!(p.len(), 4);
        assert!(p.is_canonical());
        let mut acc = c(5, 0);
        acc.add_mul_assign(&a, &b);
        assert_eq!(acc, &p + &c(5, 0));
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = LaurentPoly1> {
        prop::collection::vec((-6i32..6, -20i64..20, -20i64..20), 0..6)
            .prop_map(|v| LaurentPoly1::from_terms(v.into_iter().map(|(e, a, b)| (e, CycScalar::new(a, b)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            let pq = &p * &q;
            prop_assert!(pq.is_canonical());
            prop_assert_eq!(LaurentPoly1::from_terms(pq.terms().to_vec()), pq.clone());
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!(pq.max_exp(), Some(p.max_exp().unwrap() + q.max_exp().unwrap()));
                prop_assert_eq!(pq.min_exp(), Some(p.min_exp().unwrap() + q.min_exp().unwrap()));
            }
            let mut fused = r.clone();
            fused.add_mul_assign(&p, &q);
            prop_assert_eq!(fused, &r + &pq);
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly()) {
            for v in [CycScalar::one(), CycScalar::omega()] {
                let pv = p.evaluate_at(&v).unwrap();
                let qv = q.evaluate_at(&v).unwrap();
                prop_assert_eq!((&p * &q).evaluate_at(&v).unwrap(), &pv * &qv);
                prop_assert_eq!((&p + &q).evaluate_at(&v).unwrap(), &pv + &qv);
            }
        }

        #[test]
        fn text_roundtrip(p in arb_poly()) {
            prop_assert_eq!(p.to_string().parse::<LaurentPoly1>().unwrap(), p);
        }

        #[test]
        fn unit_products(j in 0i64..6, k in -5i32..5, sign in prop::bool::ANY) {
            let u = CycScalar::omega_pow(j);
            let u = if sign { u } else { -u };
            let m = LaurentPoly1::monomial(u, k);
            prop_assert_eq!(&m * &m.inverse().unwrap(), LaurentPoly1::one());
        }
    }
}
