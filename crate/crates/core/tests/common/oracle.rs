//! Dense reference evaluation of ADO-3 from the unmodified R-matrix.
//!
//! The unmodified R-matrix contains `q^(lambda^2 / 2)`, which is not a
//! Laurent polynomial in `t = q^lambda`. Every entry of `R` carries exactly
//! one factor of it (and every entry of `R^-1` its inverse), so it is kept
//! as a separate integer exponent `u` per matrix. The framing factor
//! `q^(-lambda(lambda + 2 - 2N) f / 2) = u^-f t^((N-1) f)` must cancel it.
//!
//! Only the coefficient rings are shared with the crate.

use adolg::ring::{CycScalar, LaurentPoly1, Ring};

pub const N: usize = 3;

type Poly = LaurentPoly1;

fn q(k: i64) -> CycScalar {
    CycScalar::omega_pow(k)
}

/// `{a} = q^a - q^-a`.
fn br_int(a: i64) -> CycScalar {
    &q(a) - &q(-a)
}

/// `{lambda + c} = t q^c - t^-1 q^-c`.
fn br_lambda(c: i64) -> Poly {
    &Poly::monomial(q(c), 1) - &Poly::monomial(q(-c), -1)
}

/// `{i + n; n} / {n; n}`, an element of `Z[w]`.
fn q_binomial(i: i64, n: i64) -> CycScalar {
    let mut num = CycScalar::one();
    let mut den = CycScalar::one();
    for k in 0..n {
        num = &num * &br_int(i + n - k);
        den = &den * &br_int(n - k);
    }
    num.div_exact(&den).expect("quantum binomials are integral")
}

/// `{lambda - j + n; n}`.
fn lambda_pochhammer(j: i64, n: i64) -> Poly {
    let mut p = Poly::one();
    for k in 0..n {
        p = &p * &br_lambda(-j + n - k);
    }
    p
}

/// A dense square matrix times `u^u_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct UMatrix {
    pub u_exp: i64,
    pub rows: Vec<Vec<Poly>>,
}

impl UMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if r == c { Poly::one() } else { Poly::zero() })
                    .collect()
            })
            .collect();
        UMatrix { u_exp: 0, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, rhs: &UMatrix) -> UMatrix {
        let d = self.dim();
        let mut rows = vec![vec![Poly::zero(); d]; d];
        for (r, row) in rows.iter_mut().enumerate() {
            for k in 0..d {
                let a = &self.rows[r][k];
                if a.is_zero() {
                    continue;
                }
                for (c, slot) in row.iter_mut().enumerate() {
                    let b = &rhs.rows[k][c];
                    if !b.is_zero() {
                        slot.add_mul_assign(a, b);
                    }
                }
            }
        }
        UMatrix {
            u_exp: self.u_exp + rhs.u_exp,
            rows,
        }
    }

    /// `self ⊗ other`, first factor most significant.
    pub fn kron(&self, other: &UMatrix) -> UMatrix {
        let (a, b) = (self.dim(), other.dim());
        let mut rows = vec![vec![Poly::zero(); a * b]; a * b];
        for r1 in 0..a {
            for c1 in 0..a {
                let x = &self.rows[r1][c1];
                if x.is_zero() {
                    continue;
                }
                for r2 in 0..b {
                    for c2 in 0..b {
                        rows[r1 * b + r2][c1 * b + c2] = x * &other.rows[r2][c2];
                    }
                }
            }
        }
        UMatrix {
            u_exp: self.u_exp + other.u_exp,
            rows,
        }
    }
}

/// `R(v_i ⊗ v_j) = sum_n q^((lambda - 2i - 2n)(lambda - 2j + 2n) / 2 + n(n-1)/2)
///   {i+n; n} {lambda - j + n; n} / {n; n}  v_(j-n) ⊗ v_(i+n)`,
/// with `q^((lambda - 2i - 2n)(lambda - 2j + 2n) / 2) = u t^-(i+j) q^(2(i+n)(j-n))`.
pub fn murakami_r() -> UMatrix {
    let d = N;
    let mut m = UMatrix {
        u_exp: 1,
        rows: vec![vec![Poly::zero(); d * d]; d * d],
    };
    for i in 0..d as i64 {
        for j in 0..d as i64 {
            for n in 0..=j.min(d as i64 - 1 - i) {
                let coeff = &q(2 * (i + n) * (j - n) + n * (n - 1) / 2) * &q_binomial(i, n);
                let entry = lambda_pochhammer(j, n).scale(&coeff).shift(-(i + j) as i32);
                let row = ((j - n) * d as i64 + (i + n)) as usize;
                let col = (i * d as i64 + j) as usize;
                m.rows[row][col] = &m.rows[row][col] + &entry;
            }
        }
    }
    m
}

fn det(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero();
            for c in 0..n {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * &det(&minor);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Inverse by adjugate on each block of fixed `i + j`; each block
/// determinant must be a unit.
pub fn invert(m: &UMatrix) -> UMatrix {
    let d = N;
    let mut inv = vec![vec![Poly::zero(); d * d]; d * d];
    for s in 0..=2 * (d - 1) {
        let idx: Vec<usize> = (0..d * d).filter(|&k| k / d + k % d == s).collect();
        let block: Vec<Vec<Poly>> = idx
            .iter()
            .map(|&r| idx.iter().map(|&c| m.rows[r][c].clone()).collect())
            .collect();
        let det_inv = det(&block).inverse().expect("block determinants are units");
        let k = idx.len();
        for a in 0..k {
            for b in 0..k {
                // inverse[a][b] = (-1)^(a+b) det(minor without row b, column a) / det
                let minor: Vec<Vec<Poly>> = (0..k)
                    .filter(|&r| r != b)
                    .map(|r| (0..k).filter(|&c| c != a).map(|c| block[r][c].clone()).collect())
                    .collect();
                let cof = if minor.is_empty() { Poly::one() } else { det(&minor) };
                let v = &cof * &det_inv;
                inv[idx[a]][idx[b]] = if (a + b) % 2 == 0 { v } else { -&v };
            }
        }
    }
    UMatrix {
        u_exp: -m.u_exp,
        rows: inv,
    }
}

/// Dense evaluator for braids on a fixed number of strands.
pub struct Oracle {
    pub strands: usize,
    /// Generator matrices: index `k - 1` for `s_k`, then their inverses.
    gens: Vec<UMatrix>,
    inv_gens: Vec<UMatrix>,
}

impl Oracle {
    pub fn new(strands: usize) -> Self {
        let r = murakami_r();
        let r_inv = invert(&r);
        let id = UMatrix::identity(N);
        let embed = |x: &UMatrix, k: usize| {
            let mut m = UMatrix::identity(1);
            for _ in 0..k - 1 {
                m = m.kron(&id);
            }
            m = m.kron(x);
            for _ in k + 1..strands {
                m = m.kron(&id);
            }
            m
        };
        let gens = (1..strands).map(|k| embed(&r, k)).collect();
        let inv_gens = (1..strands).map(|k| embed(&r_inv, k)).collect();
        Oracle {
            strands,
            gens,
            inv_gens,
        }
    }

    pub fn r_and_inverse_are_inverse(&self) -> bool {
        let d = N.pow(self.strands as u32);
        self.gens
            .iter()
            .zip(&self.inv_gens)
            .all(|(g, h)| g.mul(h) == UMatrix::identity(d))
    }

    /// `phi(b)` after applying one more letter.
    pub fn push(&self, m: &UMatrix, letter: i32) -> UMatrix {
        let k = letter.unsigned_abs() as usize - 1;
        let g = if letter > 0 { &self.gens[k] } else { &self.inv_gens[k] };
        g.mul(m)
    }

    /// The framed invariant of `phi(b)` with writhe `f`, corrected by
    /// `u^-f t^(2f)`. Panics if the partial trace is not scalar or the `u`
    /// powers do not cancel.
    pub fn closure(&self, m: &UMatrix, writhe: i64) -> Poly {
        // u^-f from the framing factor cancels the u^f of the crossings
        assert_eq!(m.u_exp, writhe, "one u per crossing");
        let d = N;
        let rest = N.pow(self.strands as u32 - 1);
        let h = |idx: usize| {
            // cup weight q^((N-1) lambda + 2i) on each traced strand
            let mut w = Poly::one();
            let mut x = idx;
            for _ in 1..self.strands {
                w = &w * &Poly::monomial(q(2 * (x % d) as i64), (N - 1) as i32);
                x /= d;
            }
            w
        };
        let mut open = vec![vec![Poly::zero(); d]; d];
        for (a, row) in open.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                for mid in 0..rest {
                    let v = &m.rows[a * rest + mid][b * rest + mid];
                    if !v.is_zero() {
                        slot.add_mul_assign(v, &h(mid));
                    }
                }
            }
        }
        let c = open[0][0].clone();
        for (a, row) in open.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                assert!(
                    if a == b { *v == c } else { v.is_zero() },
                    "open operator not scalar at ({a}, {b})"
                );
            }
        }
        c.shift(((N as i64 - 1) * writhe) as i32)
    }

    pub fn evaluate(&self, word: &[i32]) -> Poly {
        let mut m = UMatrix::identity(N.pow(self.strands as u32));
        for &k in word {
            m = self.push(&m, k);
        }
        self.closure(&m, word.iter().map(|k| k.signum() as i64).sum())
    }

    /// Calls `visit(word, value)` for every word of length `<= max_len`,
    /// sharing prefixes.
    pub fn for_each_word(&self, max_len: usize, visit: &mut dyn FnMut(&[i32], &Poly)) {
        let letters: Vec<i32> = (1..self.strands as i32).flat_map(|k| [k, -k]).collect();
        let start = UMatrix::identity(N.pow(self.strands as u32));
        let mut word = Vec::new();
        self.walk(&start, &letters, max_len, &mut word, visit);
    }

    fn walk(
        &self,
        m: &UMatrix,
        letters: &[i32],
        left: usize,
        word: &mut Vec<i32>,
        visit: &mut dyn FnMut(&[i32], &Poly),
    ) {
        let writhe = word.iter().map(|k| k.signum() as i64).sum();
        visit(word, &self.closure(m, writhe));
        if left == 0 {
            return;
        }
        for &k in letters {
            let next = self.push(m, k);
            word.push(k);
            self.walk(&next, letters, left - 1, word, visit);
            word.pop();
        }
    }
}
