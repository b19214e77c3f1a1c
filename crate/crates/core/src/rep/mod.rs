//! R-matrices, closure operators `h`, and the three-strand `Q` operators for
//! the ADO-3 and Links-Gould invariants.
//!
//! Basis of `V ⊗ V` is ordered `v_i ⊗ v_j -> d*i + j`. Operators act on
//! column vectors: `R(v_c) = sum_r R[r][c] v_r`.

mod matrix;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

pub use matrix::SparseMatrix;

use crate::ring::{
    generic_modulus, specialize, specialized_modulus, CycScalar, ExtScalar, LaurentPoly1, LaurentPoly2, Ring,
    RingError, UnitRing,
};

/// Coefficients for Links-Gould: `ExtScalar` over `Z[s0^±1, s1^±1]`.
pub type LgScalar = ExtScalar<LaurentPoly2>;
/// Links-Gould after `t0 -> t^2, t1 -> w^2 t^-2`.
pub type LgSpecScalar = ExtScalar<LaurentPoly1>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("operator dimension {got} is not {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("R * R^-1 is not the identity; the R-matrix or its cubic relation is wrong")]
    InverseCheckFailed,
    #[error("q-Pochhammer length must be nonnegative, got {0}")]
    NegativeLength(i32),
}

/// A crossing operator on `V ⊗ V`, `dim V = d`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalOperator<S> {
    d: usize,
    matrix: SparseMatrix<S>,
    transposed: SparseMatrix<S>,
}

impl<S: Ring> LocalOperator<S> {
    pub fn new(d: usize, matrix: SparseMatrix<S>) -> Result<Self, RepError> {
        if matrix.dim() != d * d {
            return Err(RepError::Dimension {
                expected: d * d,
                got: matrix.dim(),
            });
        }
        let transposed = matrix.transpose();
        Ok(LocalOperator { d, matrix, transposed })
    }

    pub fn identity(d: usize, one: &S) -> Self {
        Self::new(d, SparseMatrix::identity(d * d, one)).expect("square by construction")
    }

    /// Single-strand dimension `d`.
    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn matrix(&self) -> &SparseMatrix<S> {
        &self.matrix
    }

    /// The matrix with rows and columns exchanged, kept for row-vector action.
    pub fn transposed(&self) -> &SparseMatrix<S> {
        &self.transposed
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&S> {
        self.matrix.get(row, col)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> LocalOperator<T> {
        LocalOperator::new(self.d, self.matrix.map(f)).expect("dimension unchanged")
    }

    pub fn dump(&self) -> String {
        self.matrix.dump()
    }
}

/// A diagonal single-strand operator; `h` in the closure of a braid.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalOperator<S> {
    pub values: Vec<S>,
}

impl<S: Ring> DiagonalOperator<S> {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn trace(&self) -> S {
        let mut acc = self.values[0].zero_like();
        for v in &self.values {
            acc.add_assign_ref(v);
        }
        acc
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> DiagonalOperator<T> {
        DiagonalOperator {
            values: self.values.iter().map(f).collect(),
        }
    }
}

/// `R^3 = c2 R^2 + c1 R + c0 Id`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cubic<S> {
    pub c2: S,
    pub c1: S,
    pub c0: S,
}

impl<S: Ring> Cubic<S> {
    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Cubic<T> {
        Cubic {
            c2: f(&self.c2),
            c1: f(&self.c1),
            c0: f(&self.c0),
        }
    }
}

fn w(k: i64) -> CycScalar {
    CycScalar::omega_pow(k)
}

fn mono(c: CycScalar, e: i32) -> LaurentPoly1 {
    LaurentPoly1::monomial(c, e)
}

/// `{mu*lambda + c} = q^x - q^-x` at `q = w`, `t = q^lambda`.
pub fn q_bracket(lambda_coeff: i32, shift: i64) -> LaurentPoly1 {
    &mono(w(shift), lambda_coeff) - &mono(w(-shift), -lambda_coeff)
}

/// `{x; n} = prod_{i=0}^{n-1} {x - i}` with `x = mu*lambda + c`; `{x; 0} = 1`.
pub fn q_pochhammer(lambda_coeff: i32, shift: i64, n: i32) -> Result<LaurentPoly1, RepError> {
    if n < 0 {
        return Err(RepError::NegativeLength(n));
    }
    let mut acc = LaurentPoly1::one();
    for i in 0..n as i64 {
        acc = &acc * &q_bracket(lambda_coeff, shift - i);
    }
    Ok(acc)
}

const ADO_N: usize = 3;

/// The framing-free ADO R-matrix at `N = 3`, `q = w`, `t = q^lambda`:
///
/// `R(v_i ⊗ v_j) = t^{2-i-j} sum_n w^{2(i+n)(j-n) + n(n-1)/2}
///   {i+n;n}{lambda-j+n;n}/{n;n} v_{j-n} ⊗ v_{i+n}`,
///
/// where `n` runs over the values keeping both output indices in range.
pub fn build_ado3_r() -> LocalOperator<LaurentPoly1> {
    let n_max = ADO_N as i64 - 1;
    let mut triplets = Vec::new();
    for i in 0..ADO_N as i64 {
        for j in 0..ADO_N as i64 {
            for n in 0..=j {
                if i + n > n_max {
                    continue;
                }
                let num = q_pochhammer(0, i + n, n as i32).expect("n >= 0");
                let den = q_pochhammer(0, n, n as i32).expect("n >= 0");
                let ratio = num
                    .coefficient(0)
                    .div_exact(&den.coefficient(0))
                    .expect("quantum binomials at N = 3 are integral");
                if ratio.is_zero() {
                    continue;
                }
                let phase = w(2 * (i + n) * (j - n) + n * (n - 1) / 2).mul_ref(&ratio);
                let color = q_pochhammer(1, n - j, n as i32).expect("n >= 0");
                let value = &mono(phase, (ADO_N as i64 - 1 - i - j) as i32) * &color;
                let row = (ADO_N as i64 * (j - n) + (i + n)) as usize;
                let col = (ADO_N as i64 * i + j) as usize;
                triplets.push((row, col, value));
            }
        }
    }
    LocalOperator::new(ADO_N, SparseMatrix::from_triplets(ADO_N * ADO_N, triplets)).expect("9x9")
}

fn half(p: LaurentPoly1) -> LaurentPoly1 {
    let two = CycScalar::from_int(2);
    LaurentPoly1::from_terms(
        p.terms()
            .iter()
            .map(|(e, c)| (*e, c.div_exact(&two).expect("printed entry has an even numerator"))),
    )
}

/// The 9x9 ADO-3 R-matrix as printed in the literature, transcribed entry by
/// entry with `i sqrt 3 = 2w - 1`. Used to cross-check [`build_ado3_r`].
pub fn ado3_r_printed() -> LocalOperator<LaurentPoly1> {
    let t = LaurentPoly1::t_pow;
    let one = LaurentPoly1::one();
    let c = |x: CycScalar| LaurentPoly1::constant(x);
    let isq = c(CycScalar::i_sqrt3());
    let t2m1 = &t(2) - &one;
    // (2t^2 - i sqrt3 + 1) / (2 t^2)
    let frac = half(&(&(&t(2).scale(&CycScalar::from_int(2)) - &isq) + &one) * &t(-2));
    let one_plus = &one + &isq; // 1 + i sqrt3
    let minus_one_plus = &isq - &one; // -1 + i sqrt3
    let entries: Vec<(usize, usize, LaurentPoly1)> = vec![
        (0, 0, t(2)),
        (1, 1, t2m1.clone()),
        (1, 3, t(1)),
        (2, 2, &t2m1 * &frac),
        (2, 4, &t(1) - &t(-1)),
        (2, 6, one.clone()),
        (3, 1, t(1)),
        (4, 2, &t(-1) + &half(&one_plus * &t(1))),
        (4, 4, half(minus_one_plus.clone())),
        (5, 5, -&frac),
        (5, 7, -&half(&one_plus * &t(-1))),
        (6, 2, one.clone()),
        (7, 5, -&half(&one_plus * &t(-1))),
        (8, 8, half(&minus_one_plus * &t(-2))),
    ];
    LocalOperator::new(3, SparseMatrix::from_triplets(9, entries)).expect("9x9")
}

/// `h = diag(t^2 w^{2i})`, from `cup(1) = sum_i q^{(N-1)lambda + 2i} v_i ⊗ v_i^*`.
pub fn build_ado3_h() -> DiagonalOperator<LaurentPoly1> {
    DiagonalOperator {
        values: (0..ADO_N as i64).map(|i| mono(w(2 * i), (ADO_N - 1) as i32)).collect(),
    }
}

/// `R^3 = -w^2 Id + (w^2/t^2 - 1 + t^2) R^2 + (w^2/t^2 - w^2 + t^2) R`.
pub fn ado3_cubic() -> Cubic<LaurentPoly1> {
    let w2_t2 = mono(w(2), -2);
    let t2 = LaurentPoly1::t_pow(2);
    Cubic {
        c2: &(&w2_t2 - &LaurentPoly1::one()) + &t2,
        c1: &(&w2_t2 - &LaurentPoly1::constant(w(2))) + &t2,
        c0: LaurentPoly1::constant(-w(2)),
    }
}

/// `(t0, t1) = (t^2, w^2 t^-2)`: the Links-Gould variables seen from ADO-3.
pub fn ado3_variables() -> (LaurentPoly1, LaurentPoly1) {
    (LaurentPoly1::t_pow(2), mono(w(2), -2))
}

fn lg_const(p: LaurentPoly2) -> LgScalar {
    ExtScalar::from_base(p, generic_modulus())
}

/// `(t0, t1) = (s0^2, s1^2)` as Links-Gould scalars.
pub fn lg_variables() -> (LgScalar, LgScalar) {
    (lg_const(LaurentPoly2::x0(2)), lg_const(LaurentPoly2::x1(2)))
}

/// The 16x16 Links-Gould R-matrix with `sqrt(t0) = s0`, `sqrt(t1) = s1`,
/// `sqrt(t0 t1) = s0 s1` and `Y = sqrt((t0 - 1)(1 - t1))` kept formal.
pub fn build_lg_r() -> LocalOperator<LgScalar> {
    let m = generic_modulus();
    let one = LaurentPoly2::one();
    let s0 = LaurentPoly2::x0(1);
    let s1 = LaurentPoly2::x1(1);
    let t0 = LaurentPoly2::x0(2);
    let t1 = LaurentPoly2::x1(2);
    let s0s1 = LaurentPoly2::monomial(1, 1, 1);
    let e = |p: LaurentPoly2| ExtScalar::from_base(p, m.clone());
    let y = |p: LaurentPoly2| ExtScalar::new(LaurentPoly2::zero(), p, m.clone());
    let y2 = ExtScalar::from_base((*m).clone(), m.clone());
    let entries: Vec<(usize, usize, LgScalar)> = vec![
        (0, 0, e(t0.clone())),
        (1, 4, e(s0.clone())),
        (2, 8, e(s0.clone())),
        (3, 12, e(one.clone())),
        (4, 1, e(s0.clone())),
        (4, 4, e(&t0 - &one)),
        (5, 5, e(-&one)),
        (6, 6, e(&(&t0 * &t1) - &one)),
        (6, 9, e(-&s0s1)),
        (6, 12, y(-&s0s1)),
        (7, 13, e(s1.clone())),
        (8, 2, e(s0.clone())),
        (8, 8, e(&t0 - &one)),
        (9, 6, e(-&s0s1)),
        (9, 12, y(one.clone())),
        (10, 10, e(-&one)),
        (11, 14, e(s1.clone())),
        (12, 3, e(one.clone())),
        (12, 6, y(-&s0s1)),
        (12, 9, y(one.clone())),
        (12, 12, y2),
        (13, 7, e(s1.clone())),
        (13, 13, e(&t1 - &one)),
        (14, 11, e(s1.clone())),
        (14, 14, e(&t1 - &one)),
        (15, 15, e(t1.clone())),
    ];
    LocalOperator::new(4, SparseMatrix::from_triplets(16, entries)).expect("16x16")
}

/// `h = diag(1/t0, -t1, -1/t0, t1)`.
pub fn build_lg_h() -> DiagonalOperator<LgScalar> {
    DiagonalOperator {
        values: vec![
            lg_const(LaurentPoly2::x0(-2)),
            lg_const(-LaurentPoly2::x1(2)),
            lg_const(-LaurentPoly2::x0(-2)),
            lg_const(LaurentPoly2::x1(2)),
        ],
    }
}

/// The Links-Gould skein relation
/// `R^3 + (1 - t0 - t1) R^2 + (t0 t1 - t0 - t1) R + t0 t1 Id = 0`
/// in the form `R^3 = c2 R^2 + c1 R + c0 Id`.
pub fn lg_cubic() -> Cubic<LgScalar> {
    lg_cubic_in(&lg_variables().0, &lg_variables().1)
}

/// The Links-Gould cubic written in arbitrary variables `t0`, `t1`.
pub fn lg_cubic_in<S: Ring>(t0: &S, t1: &S) -> Cubic<S> {
    let one = t0.one_like();
    let prod = t0.mul_ref(t1);
    let sum = t0.add_ref(t1);
    Cubic {
        c2: sum.sub_ref(&one),
        c1: sum.sub_ref(&prod),
        c0: prod.neg_ref(),
    }
}

/// `R^3 - c2 R^2 - c1 R - c0 Id`.
pub fn cubic_residual<S: Ring>(r: &SparseMatrix<S>, cubic: &Cubic<S>) -> SparseMatrix<S> {
    let one = cubic.c0.one_like();
    let r2 = r.compose(r);
    let r3 = r2.compose(r);
    let id = SparseMatrix::identity(r.dim(), &one);
    r3.sub(&r2.scale(&cubic.c2))
        .sub(&r.scale(&cubic.c1))
        .sub(&id.scale(&cubic.c0))
}

/// `R^-1 = c0^-1 (R^2 - c2 R - c1 Id)`, checked by `R R^-1 = Id`.
pub fn invert_r<S: UnitRing>(r: &LocalOperator<S>, cubic: &Cubic<S>) -> Result<LocalOperator<S>, RepError> {
    let c0_inv = cubic.c0.try_inverse()?;
    let one = cubic.c0.one_like();
    let m = r.matrix();
    let id = SparseMatrix::identity(m.dim(), &one);
    let inv = m
        .compose(m)
        .sub(&m.scale(&cubic.c2))
        .sub(&id.scale(&cubic.c1))
        .scale(&c0_inv);
    if m.compose(&inv) != id || inv.compose(m) != id {
        return Err(RepError::InverseCheckFailed);
    }
    LocalOperator::new(r.dim(), inv)
}

/// Ishii's operators with denominators cleared:
/// `q0 = (t0 - t1) Q0`, `q1 = (t1 - t0) Q1`.
#[derive(Clone, Debug)]
pub struct QOperators<S> {
    pub q0: SparseMatrix<S>,
    pub q0_denominator: S,
    pub q1: SparseMatrix<S>,
    pub q1_denominator: S,
}

/// `(t0 - t1) Q0 = t0 R + t0(1 - t1) Id - t0 t1 R^-1` and
/// `(t1 - t0) Q1 = t1 R + t1(1 - t0) Id - t0 t1 R^-1`.
pub fn build_q_operators<S: Ring>(r: &SparseMatrix<S>, r_inv: &SparseMatrix<S>, t0: &S, t1: &S) -> QOperators<S> {
    let one = t0.one_like();
    let id = SparseMatrix::identity(r.dim(), &one);
    let t01 = t0.mul_ref(t1);
    let build = |a: &S, b: &S| {
        r.scale(a)
            .add(&id.scale(&a.mul_ref(&one.sub_ref(b))))
            .sub(&r_inv.scale(&t01))
    };
    QOperators {
        q0: build(t0, t1),
        q0_denominator: t0.sub_ref(t1),
        q1: build(t1, t0),
        q1_denominator: t1.sub_ref(t0),
    }
}

/// Everything the invariant engine needs for one invariant.
#[derive(Clone, Debug)]
pub struct Representation<S> {
    pub name: &'static str,
    pub r: LocalOperator<S>,
    pub r_inv: LocalOperator<S>,
    pub h: DiagonalOperator<S>,
}

impl<S: Ring> Representation<S> {
    pub fn dim(&self) -> usize {
        self.r.dim()
    }

    pub fn one(&self) -> S {
        self.h.values[0].one_like()
    }
}

pub fn ado3() -> &'static Representation<LaurentPoly1> {
    static CELL: OnceLock<Representation<LaurentPoly1>> = OnceLock::new();
    CELL.get_or_init(|| {
        let r = build_ado3_r();
        let r_inv = invert_r(&r, &ado3_cubic()).expect("ADO-3 R-matrix satisfies its cubic");
        Representation {
            name: "ado3",
            r,
            r_inv,
            h: build_ado3_h(),
        }
    })
}

pub fn lg_generic() -> &'static Representation<LgScalar> {
    static CELL: OnceLock<Representation<LgScalar>> = OnceLock::new();
    CELL.get_or_init(|| {
        let r = build_lg_r();
        let r_inv = invert_r(&r, &lg_cubic()).expect("Links-Gould R-matrix satisfies its skein relation");
        Representation {
            name: "lg",
            r,
            r_inv,
            h: build_lg_h(),
        }
    })
}

/// Links-Gould with every entry of `R`, `R^-1` and `h` pushed through
/// [`specialize`].
pub fn lg_specialized() -> &'static Representation<LgSpecScalar> {
    static CELL: OnceLock<Representation<LgSpecScalar>> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = lg_generic();
        Representation {
            name: "lg-spec",
            r: g.r.map(specialize),
            r_inv: g.r_inv.map(specialize),
            h: g.h.map(specialize),
        }
    })
}

/// `(t0, t1)` for the specialized Links-Gould ring.
pub fn lg_specialized_variables() -> (LgSpecScalar, LgSpecScalar) {
    let (t0, t1) = ado3_variables();
    let m: Arc<LaurentPoly1> = specialized_modulus();
    (ExtScalar::from_base(t0, m.clone()), ExtScalar::from_base(t1, m))
}
