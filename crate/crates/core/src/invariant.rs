//! Operator invariants of braid closures.
//!
//! For a braid `b` on `n` strands the invariant is the scalar `c` with
//! `trace_{2..n}((id ⊗ h^{⊗(n-1)}) ∘ phi(b)) = c id`, computed by evolving
//! basis states of `V^{⊗n}` through the crossings of `b`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::rep::{self, LocalOperator, Representation};
use crate::ring::{CycScalar, LaurentPoly1, LaurentPoly2, Ring, RingError, UnitRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("crossing position {position} out of range for {strands} strands")]
    PositionOutOfRange { position: usize, strands: usize },
    #[error("operator acts on dimension {op} but the state has dimension {state}")]
    DimensionMismatch { op: usize, state: usize },
    #[error("braid has {braid} strands but the state has {state}")]
    StrandMismatch { braid: usize, state: usize },
    #[error("partial trace is not scalar: entry ({row}, {col}) is {value}")]
    NotProportional { row: usize, col: usize, value: String },
    #[error("Links-Gould value still contains Y: {0}")]
    YContamination(String),
    #[error("Links-Gould value has odd powers of sqrt(t0) or sqrt(t1): {0}")]
    OddExponent(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Base-`d` multi-index over `n` strands; strand 0 is the most significant digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexLayout {
    pub strands: usize,
    pub dim: usize,
}

impl IndexLayout {
    pub fn new(strands: usize, dim: usize) -> Self {
        IndexLayout { strands, dim }
    }

    pub fn size(&self) -> u64 {
        (self.dim as u64).pow(self.strands as u32)
    }

    /// Weight of strand `p`'s digit.
    pub fn place(&self, p: usize) -> u64 {
        (self.dim as u64).pow((self.strands - 1 - p) as u32)
    }

    pub fn digit(&self, idx: u64, p: usize) -> usize {
        ((idx / self.place(p)) % self.dim as u64) as usize
    }

    pub fn digits(&self, idx: u64) -> Vec<usize> {
        (0..self.strands).map(|p| self.digit(idx, p)).collect()
    }

    pub fn index(&self, digits: &[usize]) -> u64 {
        digits.iter().fold(0u64, |acc, &x| acc * self.dim as u64 + x as u64)
    }

    /// Replaces the digit of strand `p`.
    pub fn with_digit(&self, idx: u64, p: usize, value: usize) -> u64 {
        let place = self.place(p);
        idx - self.digit(idx, p) as u64 * place + value as u64 * place
    }
}

/// A sparse vector in `V^{⊗n}`; zero amplitudes are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<S> {
    layout: IndexLayout,
    amps: BTreeMap<u64, S>,
}

impl<S: Ring> StateVector<S> {
    pub fn zero(strands: usize, dim: usize) -> Self {
        StateVector {
            layout: IndexLayout::new(strands, dim),
            amps: BTreeMap::new(),
        }
    }

    pub fn basis(strands: usize, dim: usize, idx: u64, one: S) -> Self {
        let mut s = Self::zero(strands, dim);
        s.amps.insert(idx, one);
        s
    }

    pub fn from_amplitudes(strands: usize, dim: usize, amps: impl IntoIterator<Item = (u64, S)>) -> Self {
        let mut s = Self::zero(strands, dim);
        for (k, v) in amps {
            if !v.is_zero() {
                s.amps.insert(k, v);
            }
        }
        s
    }

    pub fn layout(&self) -> IndexLayout {
        self.layout
    }

    pub fn strands(&self) -> usize {
        self.layout.strands
    }

    pub fn dim(&self) -> usize {
        self.layout.dim
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitude(&self, idx: u64) -> Option<&S> {
        self.amps.get(&idx)
    }

    /// `sum_i self[i] * other[i]`, no conjugation.
    pub fn dot(&self, other: &Self) -> Option<S> {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: Option<S> = None;
        for (k, a) in &small.amps {
            if let Some(b) = large.amps.get(k) {
                let (x, y) = if std::ptr::eq(small, self) { (a, b) } else { (b, a) };
                match &mut acc {
                    Some(s) => s.add_mul_assign(x, y),
                    None => acc = Some(x.mul_ref(y)),
                }
            }
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &S)> {
        self.amps.iter().map(|(k, v)| (*k, v))
    }
}

fn check_position<S: Ring>(
    state: &StateVector<S>,
    op: &LocalOperator<S>,
    position: usize,
) -> Result<(), InvariantError> {
    if op.dim() != state.dim() {
        return Err(InvariantError::DimensionMismatch {
            op: op.dim(),
            state: state.dim(),
        });
    }
    if position < 1 || position >= state.strands() {
        return Err(InvariantError::PositionOutOfRange {
            position,
            strands: state.strands(),
        });
    }
    Ok(())
}

fn apply_matrix<S: Ring>(
    state: &StateVector<S>,
    matrix: &rep::SparseMatrix<S>,
    d: usize,
    position: usize,
) -> StateVector<S> {
    let layout = state.layout;
    let (left, right) = (position - 1, position);
    let (pl, pr) = (layout.place(left), layout.place(right));
    let mut out: BTreeMap<u64, S> = BTreeMap::new();
    for (&idx, amp) in &state.amps {
        let x = layout.digit(idx, left);
        let y = layout.digit(idx, right);
        let base = idx - x as u64 * pl - y as u64 * pr;
        for (row, val) in matrix.column(d * x + y) {
            let target = base + (row / d) as u64 * pl + (row % d) as u64 * pr;
            match out.get_mut(&target) {
                Some(acc) => acc.add_mul_assign(amp, val),
                None => {
                    out.insert(target, amp.mul_ref(val));
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    StateVector { layout, amps: out }
}

/// Applies `id^{⊗(k-1)} ⊗ op ⊗ id^{⊗(n-k-1)}`, i.e. `op` on strands `k, k+1`
/// (1-based).
pub fn apply_local<S: Ring>(
    state: &StateVector<S>,
    op: &LocalOperator<S>,
    position: usize,
) -> Result<StateVector<S>, InvariantError> {
    check_position(state, op, position)?;
    Ok(apply_matrix(state, op.matrix(), op.dim(), position))
}

/// Row-vector action: returns `op^T` applied at `position`.
pub fn apply_local_transposed<S: Ring>(
    state: &StateVector<S>,
    op: &LocalOperator<S>,
    position: usize,
) -> Result<StateVector<S>, InvariantError> {
    check_position(state, op, position)?;
    Ok(apply_matrix(state, op.transposed(), op.dim(), position))
}

/// Applies the letters of `b` in order: `k > 0` is `R` at position `k`,
/// `k < 0` is `R^-1` at position `|k|`.
pub fn braid_action<S: Ring>(
    b: &BraidWord,
    state: &StateVector<S>,
    rep: &Representation<S>,
) -> Result<StateVector<S>, InvariantError> {
    if b.strands() != state.strands() {
        return Err(InvariantError::StrandMismatch {
            braid: b.strands(),
            state: state.strands(),
        });
    }
    let mut cur = state.clone();
    for &k in b.word() {
        let op = if k > 0 { &rep.r } else { &rep.r_inv };
        cur = apply_local(&cur, op, k.unsigned_abs() as usize)?;
    }
    Ok(cur)
}

/// The row-vector action of `b`: `phi(b)^T` applied to `state`, i.e. the
/// transposed letters in reverse order.
pub fn braid_action_transposed<S: Ring>(
    b: &BraidWord,
    state: &StateVector<S>,
    rep: &Representation<S>,
) -> Result<StateVector<S>, InvariantError> {
    if b.strands() != state.strands() {
        return Err(InvariantError::StrandMismatch {
            braid: b.strands(),
            state: state.strands(),
        });
    }
    let mut cur = state.clone();
    for &k in b.word().iter().rev() {
        let op = if k > 0 { &rep.r } else { &rep.r_inv };
        cur = apply_local_transposed(&cur, op, k.unsigned_abs() as usize)?;
    }
    Ok(cur)
}

/// Which strand stays open when the others are closed up with `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OpenStrand {
    /// Strand 1 open, strands `2..n` traced.
    #[default]
    First,
    /// Strand `n` open, strands `1..n-1` traced with `h^-1`, the left
    /// closure. Tracing them with `h` itself does not give a scalar.
    Last,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TraceOptions {
    pub open: OpenStrand,
    /// Compute every column of the open-strand operator and check it is
    /// `c id`, instead of only column 0.
    pub paranoid: bool,
}

impl OpenStrand {
    fn position(self, strands: usize) -> usize {
        match self {
            OpenStrand::First => 0,
            OpenStrand::Last => strands - 1,
        }
    }
}

/// Accumulates the `d x d` open-strand operator `O[a][b]` from evolved
/// columns.
pub(crate) struct OpenOperator<S> {
    pub(crate) entries: Vec<Vec<Option<S>>>,
}

impl<S: Ring> OpenOperator<S> {
    pub(crate) fn new(d: usize) -> Self {
        OpenOperator {
            entries: vec![vec![None; d]; d],
        }
    }

    /// Adds the contribution of one evolved basis column `(b, m)`.
    pub(crate) fn accumulate(
        &mut self,
        layout: IndexLayout,
        open: usize,
        input: u64,
        evolved: &StateVector<S>,
        weight: &S,
    ) {
        let b = layout.digit(input, open);
        for a in 0..layout.dim {
            let target = layout.with_digit(input, open, a);
            if let Some(amp) = evolved.amplitude(target) {
                let slot = &mut self.entries[a][b];
                match slot {
                    Some(acc) => acc.add_mul_assign(amp, weight),
                    None => *slot = Some(amp.mul_ref(weight)),
                }
            }
        }
    }

    /// Returns `c = O[0][0]` after checking that every computed column is
    /// `c` times the corresponding unit vector.
    pub(crate) fn scalar(&self, columns: &[usize], zero: &S) -> Result<S, InvariantError> {
        let get = |a: usize, b: usize| self.entries[a][b].clone().unwrap_or_else(|| zero.clone());
        let c = get(0, 0);
        for &b in columns {
            for a in 0..self.entries.len() {
                let v = get(a, b);
                let ok = if a == b { v == c } else { v.is_zero() };
                if !ok {
                    return Err(InvariantError::NotProportional {
                        row: a,
                        col: b,
                        value: v.to_string(),
                    });
                }
            }
        }
        Ok(c)
    }
}

/// `prod_j h[m_j]` over the traced strands of basis index `idx`.
pub fn trace_weight<S: Ring>(h: &[S], layout: IndexLayout, open: usize, idx: u64) -> S {
    let mut w = h[0].one_like();
    for p in (0..layout.strands).filter(|&p| p != open) {
        w = w.mul_ref(&h[layout.digit(idx, p)]);
    }
    w
}

/// The diagonal used on the traced strands: `h` for the right closure,
/// `h^-1` for the left one.
pub fn closure_weights<S: UnitRing>(rep: &Representation<S>, open: OpenStrand) -> Result<Vec<S>, InvariantError> {
    match open {
        OpenStrand::First => Ok(rep.h.values.clone()),
        OpenStrand::Last => rep
            .h
            .values
            .iter()
            .map(|v| v.try_inverse().map_err(InvariantError::from))
            .collect(),
    }
}

/// All basis indices whose open-strand digit is one of `columns`.
pub(crate) fn input_indices(layout: IndexLayout, open: usize, columns: &[usize]) -> Vec<u64> {
    (0..layout.size())
        .filter(|&idx| columns.contains(&layout.digit(idx, open)))
        .collect()
}

/// The scalar `c` of the closure of `b`. Only column 0 of the open-strand
/// operator is computed unless `options.paranoid`; in both cases the
/// computed columns must be those of `c id`.
pub fn partial_trace_scalar<S: UnitRing>(
    b: &BraidWord,
    rep: &Representation<S>,
    options: TraceOptions,
) -> Result<S, InvariantError> {
    let d = rep.dim();
    let layout = IndexLayout::new(b.strands(), d);
    let open = options.open.position(b.strands());
    let columns: Vec<usize> = if options.paranoid { (0..d).collect() } else { vec![0] };
    let one = rep.one();
    let weights = closure_weights(rep, options.open)?;
    let mut acc = OpenOperator::new(d);
    for idx in input_indices(layout, open, &columns) {
        let start = StateVector::basis(b.strands(), d, idx, one.clone());
        let evolved = braid_action(b, &start, rep)?;
        acc.accumulate(layout, open, idx, &evolved, &trace_weight(&weights, layout, open, idx));
    }
    acc.scalar(&columns, &one.zero_like())
}

/// A computed invariant together with the braid it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantValue<P> {
    pub value: P,
    pub braid: BraidWord,
    /// Whether the off-diagonal entries of the open-strand operator were
    /// checked to vanish.
    pub proportionality_checked: bool,
}

/// `ADO_3(closure(b); t)`, normalized to 1 on the unknot and framing-free.
pub fn compute_ado3(b: &BraidWord) -> Result<InvariantValue<LaurentPoly1>, InvariantError> {
    compute_ado3_with(b, TraceOptions::default())
}

pub fn compute_ado3_with(b: &BraidWord, options: TraceOptions) -> Result<InvariantValue<LaurentPoly1>, InvariantError> {
    let value = partial_trace_scalar(b, rep::ado3(), options)?;
    Ok(InvariantValue {
        value,
        braid: b.clone(),
        proportionality_checked: true,
    })
}

/// Converts a generic Links-Gould scalar to an element of `Z[t0^±1, t1^±1]`.
pub fn lg_scalar_to_t0t1(x: &rep::LgScalar) -> Result<LaurentPoly2, InvariantError> {
    if !x.is_y_free() {
        return Err(InvariantError::YContamination(x.to_string()));
    }
    x.even
        .halve_exponents()
        .ok_or_else(|| InvariantError::OddExponent(x.even.to_string()))
}

/// `LG(closure(b); t0, t1)` with exponents in `t0`, `t1`.
pub fn compute_lg(b: &BraidWord) -> Result<InvariantValue<LaurentPoly2>, InvariantError> {
    compute_lg_with(b, TraceOptions::default())
}

pub fn compute_lg_with(b: &BraidWord, options: TraceOptions) -> Result<InvariantValue<LaurentPoly2>, InvariantError> {
    let raw = partial_trace_scalar(b, rep::lg_generic(), options)?;
    Ok(InvariantValue {
        value: lg_scalar_to_t0t1(&raw)?,
        braid: b.clone(),
        proportionality_checked: true,
    })
}

/// Converts a specialized Links-Gould scalar to `Z[w][t^±1]`.
pub fn lg_spec_scalar_to_poly(x: &rep::LgSpecScalar) -> Result<LaurentPoly1, InvariantError> {
    if !x.is_y_free() {
        return Err(InvariantError::YContamination(x.to_string()));
    }
    Ok(x.even.clone())
}

/// `LG(closure(b); t^2, w^2 t^-2)`, evaluated directly in the specialized ring.
pub fn compute_lg_specialized(b: &BraidWord) -> Result<InvariantValue<LaurentPoly1>, InvariantError> {
    compute_lg_specialized_with(b, TraceOptions::default())
}

pub fn compute_lg_specialized_with(
    b: &BraidWord,
    options: TraceOptions,
) -> Result<InvariantValue<LaurentPoly1>, InvariantError> {
    let raw = partial_trace_scalar(b, rep::lg_specialized(), options)?;
    Ok(InvariantValue {
        value: lg_spec_scalar_to_poly(&raw)?,
        braid: b.clone(),
        proportionality_checked: true,
    })
}

/// `t0 -> t^2`, `t1 -> w^2 t^-2` on a Links-Gould value in `t0`, `t1`.
pub fn specialize_lg_value(p: &LaurentPoly2) -> LaurentPoly1 {
    p.substitute(&CycScalar::one(), 2, &CycScalar::omega_pow(2), -2)
        .expect("1 and w^2 are units")
}
