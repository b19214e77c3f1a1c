//! Seeded property checks shared by the property tests and the acceptance
//! suite. Each returns the number of cases checked, or the first failure.

use adolg::invariant::{
    compute_ado3, compute_ado3_with, compute_lg, compute_lg_specialized, compute_lg_specialized_with, compute_lg_with,
    specialize_lg_value, OpenStrand, TraceOptions,
};
use adolg::ring::{LaurentPoly1, LaurentPoly2, Ring};
use adolg::BraidWord;

use super::{random_braid, rng};

/// All three invariants, LG specialized for comparison across them.
#[derive(Debug, PartialEq)]
pub struct Values {
    pub ado3: LaurentPoly1,
    pub lg: LaurentPoly2,
    pub lg_spec: LaurentPoly1,
}

pub fn values(b: &BraidWord) -> Result<Values, String> {
    let err = |e: adolg::invariant::InvariantError| format!("{b}: {e}");
    Ok(Values {
        ado3: compute_ado3(b).map_err(err)?.value,
        lg: compute_lg(b).map_err(err)?.value,
        lg_spec: compute_lg_specialized(b).map_err(err)?.value,
    })
}

fn same(a: &BraidWord, b: &BraidWord) -> Result<(), String> {
    let (x, y) = (values(a)?, values(b)?);
    if x == y {
        Ok(())
    } else {
        Err(format!("{a} and {b} differ: {x:?} vs {y:?}"))
    }
}

/// `b` and `g b g^-1`, strands <= 5, both words of length <= 12.
pub fn markov_one(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..cases {
        let b = random_braid(&mut r, 5, 12);
        let g = super::random_braid_on(&mut r, b.strands(), 12);
        same(&b, &b.conjugate(&g).unwrap())?;
    }
    Ok(cases)
}

/// `b` and its stabilizations by `s_n` and `s_n^-1`, strands <= 4.
pub fn markov_two(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    for i in 0..cases {
        let b = random_braid(&mut r, 4, 10);
        same(&b, &b.stabilize(i % 2 == 0))?;
    }
    Ok(cases)
}

/// A braid on `n` strands placed on `n + 1` strands has a split closure.
pub fn split_vanishing(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..cases {
        let b = random_braid(&mut r, 4, 10);
        let split = b.embed(b.strands() + 1).unwrap();
        let v = values(&split)?;
        if !(v.ado3.is_zero() && v.lg.is_zero() && v.lg_spec.is_zero()) {
            return Err(format!("{split}: {v:?}"));
        }
    }
    Ok(cases)
}

/// `compute_lg` rejects values containing `Y` or odd powers of `sqrt(t_i)`,
/// so success on a braid is the integrality statement.
pub fn lg_integrality(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..cases {
        let b = random_braid(&mut r, 4, 12);
        compute_lg(&b).map_err(|e| format!("{b}: {e}"))?;
    }
    Ok(cases)
}

/// Every column of the open-strand operator is checked.
pub fn proportionality(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let paranoid = TraceOptions {
        paranoid: true,
        ..Default::default()
    };
    for _ in 0..cases {
        let b = random_braid(&mut r, 4, 10);
        let err = |e: adolg::invariant::InvariantError| format!("{b}: {e}");
        compute_ado3_with(&b, paranoid).map_err(err)?;
        compute_lg_with(&b, paranoid).map_err(err)?;
        compute_lg_specialized_with(&b, paranoid).map_err(err)?;
    }
    Ok(cases)
}

/// `specialize(compute_lg(b)) = compute_lg_specialized(b)`.
pub fn specialization_consistency(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    for _ in 0..cases {
        let b = random_braid(&mut r, 4, 12);
        let v = values(&b)?;
        if specialize_lg_value(&v.lg) != v.lg_spec {
            return Err(format!("{b}: {} vs {}", specialize_lg_value(&v.lg), v.lg_spec));
        }
    }
    Ok(cases)
}

/// The strand-1-open scalar against the strand-n-open one.
pub fn open_strand_agreement(cases: usize, seed: u64) -> Result<usize, String> {
    let mut r = rng(seed);
    let last = TraceOptions {
        open: OpenStrand::Last,
        paranoid: true,
    };
    for _ in 0..cases {
        let b = random_braid(&mut r, 4, 10);
        let err = |e: adolg::invariant::InvariantError| format!("{b}: {e}");
        let first = (
            compute_ado3(&b).map_err(err)?.value,
            compute_lg_specialized(&b).map_err(err)?.value,
        );
        let other = (
            compute_ado3_with(&b, last).map_err(err)?.value,
            compute_lg_specialized_with(&b, last).map_err(err)?.value,
        );
        if first != other {
            return Err(format!("{b}: {first:?} vs {other:?}"));
        }
    }
    Ok(cases)
}
