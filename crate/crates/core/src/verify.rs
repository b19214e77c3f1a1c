//! Checks of the matrix identities behind the two invariants, and the
//! equality sweeps over the Hecke check words.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::hecke::{CheckWord, Family};
use crate::invariant::{
    braid_action, braid_action_transposed, closure_weights, compute_lg, lg_spec_scalar_to_poly, specialize_lg_value,
    trace_weight, IndexLayout, InvariantError, OpenStrand, StateVector,
};
use crate::rep::{
    self, ado3_cubic, ado3_r_printed, ado3_variables, build_ado3_r, build_q_operators, cubic_residual, lg_cubic,
    lg_variables, Cubic, Representation, SparseMatrix,
};
use crate::ring::{specialize, specialized_modulus, CycScalar, ExtScalar, LaurentPoly1, Ring, UnitRing};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("words of family {0} do not share one fixed word")]
    MixedPrefix(Family),
    #[error("cached prefix action for {0} differs from a direct recomputation")]
    CacheMismatch(Family),
    #[error("bad value in report: {0}")]
    Report(String),
}

/// Outcome of one named check. `failures` lists what went wrong, one line
/// per failing item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn single(name: &str, failure: Option<String>) -> Self {
        CheckReport {
            name: name.to_string(),
            checked: 1,
            failures: failure.into_iter().collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn zero_matrix_report<S: Ring>(name: &str, residual: &SparseMatrix<S>) -> CheckReport {
    let failure = (!residual.is_zero()).then(|| {
        let (r, c, v) = residual.triplets()[0];
        format!("{} nonzero entries, first ({r}, {c}) = {v}", residual.nnz())
    });
    CheckReport::single(name, failure)
}

/// The summation formula for the ADO-3 R-matrix against its printed form.
pub fn check_formula_vs_print() -> CheckReport {
    let built = build_ado3_r();
    let printed = ado3_r_printed();
    let mut report = CheckReport::new("formula-vs-print");
    for r in 0..9 {
        for c in 0..9 {
            report.checked += 1;
            if built.entry(r, c) != printed.entry(r, c) {
                report.failures.push(format!(
                    "entry ({r}, {c}): {:?} vs {:?}",
                    built.entry(r, c),
                    printed.entry(r, c)
                ));
            }
        }
    }
    report
}

pub fn cubic_check<S: Ring>(name: &str, r: &SparseMatrix<S>, cubic: &Cubic<S>) -> CheckReport {
    zero_matrix_report(name, &cubic_residual(r, cubic))
}

pub fn check_cubic_ado() -> CheckReport {
    cubic_check("cubic-ado3", rep::ado3().r.matrix(), &ado3_cubic())
}

/// The Links-Gould relation in generic variables, and the specialized
/// Links-Gould matrix against the ADO-3 cubic.
pub fn check_skein_lg() -> Vec<CheckReport> {
    let spec_cubic = ado3_cubic().map(|p| ExtScalar::from_base(p.clone(), specialized_modulus()));
    vec![
        cubic_check("skein-lg", rep::lg_generic().r.matrix(), &lg_cubic()),
        cubic_check("skein-lg-specialized", rep::lg_specialized().r.matrix(), &spec_cubic),
    ]
}

/// The Links-Gould cubic coefficients at `t0 = t^2`, `t1 = w^2 t^-2` equal
/// the ADO-3 ones.
pub fn check_specialization_coefficients() -> CheckReport {
    let lg = lg_cubic().map(specialize);
    let ado = ado3_cubic();
    let mut report = CheckReport::new("cubic-coefficients");
    for (name, l, a) in [
        ("c2", &lg.c2, &ado.c2),
        ("c1", &lg.c1, &ado.c1),
        ("c0", &lg.c0, &ado.c0),
    ] {
        report.checked += 1;
        if !l.is_y_free() || l.even != *a {
            report.failures.push(format!("{name}: {l} vs {a}"));
        }
    }
    report
}

/// `(R ⊗ id)(id ⊗ R)(R ⊗ id) - (id ⊗ R)(R ⊗ id)(id ⊗ R)` on `V^{⊗3}`.
pub fn yang_baxter_residual<S: Ring>(r: &SparseMatrix<S>, d: usize, one: &S) -> SparseMatrix<S> {
    let a = r.kron_identity_right(d, one);
    let b = r.kron_identity_left(d, one);
    a.compose(&b).compose(&a).sub(&b.compose(&a).compose(&b))
}

pub fn check_yang_baxter<S: Ring>(name: &str, representation: &Representation<S>) -> CheckReport {
    let d = representation.dim();
    zero_matrix_report(
        name,
        &yang_baxter_residual(representation.r.matrix(), d, &representation.one()),
    )
}

/// `t0 (1 - t1) A0 A1 A2 + t1 (t0 - 1) B0 B1 B2` with `A0 = lhs[0] ⊗ id`,
/// `A1 = id ⊗ lhs[1]`, `A2 = lhs[2] ⊗ id` and likewise for `B`; composed
/// left to right as written.
pub fn ishii_residual<S: Ring>(
    lhs: [&SparseMatrix<S>; 3],
    rhs: [&SparseMatrix<S>; 3],
    t0: &S,
    t1: &S,
    d: usize,
) -> SparseMatrix<S> {
    let one = t0.one_like();
    let side = |q: [&SparseMatrix<S>; 3]| {
        q[0].kron_identity_right(d, &one)
            .compose(&q[1].kron_identity_left(d, &one))
            .compose(&q[2].kron_identity_right(d, &one))
    };
    let left_coeff = t0.mul_ref(&one.sub_ref(t1));
    let right_coeff = t1.mul_ref(&t0.sub_ref(&one));
    side(lhs).scale(&left_coeff).add(&side(rhs).scale(&right_coeff))
}

/// `(Q0 ⊗ id)(id ⊗ Q1)(Q1 ⊗ id) = t1(t0 - 1) / (t0(1 - t1)) (Q0 ⊗ id)(id ⊗ Q0)(Q1 ⊗ id)`
/// with the denominators of `Q0`, `Q1` and of the scalar cleared.
pub fn check_ishii_relation<S: Ring>(name: &str, representation: &Representation<S>, t0: &S, t1: &S) -> CheckReport {
    let q = build_q_operators(representation.r.matrix(), representation.r_inv.matrix(), t0, t1);
    let residual = ishii_residual(
        [&q.q0, &q.q1, &q.q1],
        [&q.q0, &q.q0, &q.q1],
        t0,
        t1,
        representation.dim(),
    );
    zero_matrix_report(name, &residual)
}

pub fn check_ishii_lg() -> CheckReport {
    let (t0, t1) = lg_variables();
    check_ishii_relation("ishii-lg", rep::lg_generic(), &t0, &t1)
}

pub fn check_ishii_ado() -> CheckReport {
    let (t0, t1) = ado3_variables();
    check_ishii_relation("ishii-ado3", rep::ado3(), &t0, &t1)
}

/// Every matrix identity, in a fixed order.
pub fn check_relations() -> Vec<CheckReport> {
    let mut out = vec![check_formula_vs_print(), check_cubic_ado()];
    out.extend(check_skein_lg());
    out.push(check_specialization_coefficients());
    out.push(check_yang_baxter("yang-baxter-ado3", rep::ado3()));
    out.push(check_yang_baxter("yang-baxter-lg", rep::lg_generic()));
    out.push(check_ishii_lg());
    out.push(check_ishii_ado());
    out
}

/// The action of a family's fixed word on every input basis state whose
/// open-strand digit is one of the requested columns.
#[derive(Clone, Debug)]
pub struct PrefixCache<S> {
    pub family: Family,
    prefix: BraidWord,
    layout: IndexLayout,
    columns: Vec<usize>,
    states: BTreeMap<u64, StateVector<S>>,
}

impl<S: UnitRing> PrefixCache<S> {
    pub fn build(
        family: Family,
        prefix: &BraidWord,
        representation: &Representation<S>,
        columns: Vec<usize>,
    ) -> Result<Self, InvariantError> {
        let d = representation.dim();
        let layout = IndexLayout::new(prefix.strands(), d);
        let one = representation.one();
        let mut states = BTreeMap::new();
        for idx in (0..layout.size()).filter(|&i| columns.contains(&layout.digit(i, 0))) {
            let start = StateVector::basis(prefix.strands(), d, idx, one.clone());
            states.insert(idx, braid_action(prefix, &start, representation)?);
        }
        Ok(PrefixCache {
            family,
            prefix: prefix.clone(),
            layout,
            columns,
            states,
        })
    }

    pub fn prefix(&self) -> &BraidWord {
        &self.prefix
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, input: u64) -> Option<&StateVector<S>> {
        self.states.get(&input)
    }

    /// Recomputes `samples` cached states, spread evenly over the inputs,
    /// from scratch and compares.
    pub fn spot_check(&self, representation: &Representation<S>, samples: usize) -> Result<bool, InvariantError> {
        let keys: Vec<u64> = self.states.keys().copied().collect();
        let step = (keys.len() / samples.max(1)).max(1);
        for &idx in keys.iter().step_by(step).take(samples) {
            let start = StateVector::basis(self.layout.strands, self.layout.dim, idx, representation.one());
            if braid_action(&self.prefix, &start, representation)? != self.states[&idx] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The closure scalar of `prefix · suffix`.
    ///
    /// Entry `(a, b)` of the open-strand operator is
    /// `sum_m h(m) <a m| phi(suffix) phi(prefix) |b m>`; the bra side is
    /// evolved through the transposed suffix, which keeps it sparse.
    pub fn evaluate(&self, suffix: &BraidWord, representation: &Representation<S>) -> Result<S, InvariantError> {
        if suffix.strands() != self.layout.strands {
            return Err(InvariantError::StrandMismatch {
                braid: suffix.strands(),
                state: self.layout.strands,
            });
        }
        let d = self.layout.dim;
        let weights = closure_weights(representation, OpenStrand::First)?;
        let zero = representation.one().zero_like();
        let mut entries: Vec<Vec<S>> = vec![vec![zero.clone(); d]; d];
        let traced = self.layout.place(0);
        for m in 0..traced {
            let weight = trace_weight(&weights, self.layout, 0, m);
            let columns: Vec<(usize, &StateVector<S>)> = self
                .columns
                .iter()
                .filter_map(|&b| self.states.get(&(b as u64 * traced + m)).map(|s| (b, s)))
                .collect();
            if columns.iter().all(|(_, s)| s.is_empty()) {
                continue;
            }
            for (a, row) in entries.iter_mut().enumerate() {
                let ket = StateVector::basis(self.layout.strands, d, a as u64 * traced + m, representation.one());
                let bra = braid_action_transposed(suffix, &ket, representation)?;
                for &(b, state) in &columns {
                    if let Some(v) = bra.dot(state) {
                        row[b].add_mul_assign(&v, &weight);
                    }
                }
            }
        }
        let c = entries[0][0].clone();
        for &b in &self.columns {
            for (a, row) in entries.iter().enumerate() {
                let ok = if a == b { row[b] == c } else { row[b].is_zero() };
                if !ok {
                    return Err(InvariantError::NotProportional {
                        row: a,
                        col: b,
                        value: row[b].to_string(),
                    });
                }
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Check every column of the open-strand operator, not only the first.
    pub paranoid: bool,
    /// Fraction of words additionally run through generic Links-Gould
    /// followed by specialization. Sampling is deterministic: every
    /// `round(1 / fraction)`-th word.
    pub audit_fraction: f64,
    /// Per-family progress lines on stderr.
    pub progress: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: None,
            paranoid: false,
            audit_fraction: 0.01,
            progress: false,
        }
    }
}

impl SweepOptions {
    fn audit_stride(&self) -> Option<usize> {
        (self.audit_fraction > 0.0).then(|| ((1.0 / self.audit_fraction).round() as usize).max(1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub family: Family,
    pub index: usize,
    pub braid: String,
    pub components: usize,
    pub ado3: String,
    pub lg_spec: String,
    pub equal: bool,
    /// `ado3 - lg_spec` when nonzero.
    pub diff: Option<String>,
    /// `Some(ok)` when generic Links-Gould was also computed for this word.
    pub audit: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub family: Family,
    pub total: usize,
    pub equal: usize,
    pub audited: usize,
    pub audit_failures: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub summary: Vec<FamilySummary>,
    pub paranoid: bool,
    pub seconds: f64,
}

impl SweepReport {
    pub fn total(&self) -> usize {
        self.entries.len()
    }

    pub fn equal_count(&self) -> usize {
        self.entries.iter().filter(|e| e.equal).count()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.equal && e.audit != Some(false))
    }

    pub fn failures(&self) -> Vec<&SweepEntry> {
        self.entries
            .iter()
            .filter(|e| !e.equal || e.audit == Some(false))
            .collect()
    }

    /// The ADO-3 values, parsed back from their text form.
    pub fn ado3_values(&self) -> Result<Vec<(BraidWord, LaurentPoly1)>, VerifyError> {
        self.entries
            .iter()
            .map(|e| {
                let b = e
                    .braid
                    .parse::<BraidWord>()
                    .map_err(|err| VerifyError::Report(err.to_string()))?;
                let p = e
                    .ado3
                    .parse::<LaurentPoly1>()
                    .map_err(|err| VerifyError::Report(err.to_string()))?;
                Ok((b, p))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without timing fields, for comparing runs.
    pub fn without_timing(&self) -> SweepReport {
        let mut r = self.clone();
        r.seconds = 0.0;
        for s in &mut r.summary {
            s.seconds = 0.0;
        }
        r
    }
}

fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, VerifyError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n.max(1));
    }
    builder.build().map_err(|e| VerifyError::ThreadPool(e.to_string()))
}

fn evaluate_word(
    word: &CheckWord,
    ado_cache: &PrefixCache<LaurentPoly1>,
    lg_cache: &PrefixCache<rep::LgSpecScalar>,
    audit: bool,
) -> Result<SweepEntry, VerifyError> {
    let ado3 = ado_cache.evaluate(&word.suffix, rep::ado3())?;
    let lg_spec = lg_spec_scalar_to_poly(&lg_cache.evaluate(&word.suffix, rep::lg_specialized())?)?;
    let equal = ado3 == lg_spec;
    let diff = (!equal).then(|| (&ado3 - &lg_spec).to_string());
    let audit = if audit {
        Some(specialize_lg_value(&compute_lg(&word.full)?.value) == lg_spec)
    } else {
        None
    };
    Ok(SweepEntry {
        family: word.family,
        index: word.index,
        braid: word.full.to_string(),
        components: word.full.closure_info().components,
        ado3: ado3.to_string(),
        lg_spec: lg_spec.to_string(),
        equal,
        diff,
        audit,
    })
}

/// Computes ADO-3 and specialized Links-Gould for every word and records
/// whether they agree. Words are processed family by family; each run of
/// consecutive words of one family shares one cached prefix action per
/// invariant. Entries come back in input order.
pub fn run_equality_sweep(words: &[CheckWord], options: &SweepOptions) -> Result<SweepReport, VerifyError> {
    let pool = thread_pool(options.jobs)?;
    let started = Instant::now();
    let stride = options.audit_stride();
    let mut entries = Vec::with_capacity(words.len());
    let mut summary = Vec::new();
    let mut offset = 0;
    for group in words.chunk_by(|a, b| a.family == b.family) {
        let family_started = Instant::now();
        let family = group[0].family;
        let prefix = &group[0].prefix;
        if group.iter().any(|w| w.prefix != *prefix) {
            return Err(VerifyError::MixedPrefix(family));
        }
        let columns = |d: usize| if options.paranoid { (0..d).collect() } else { vec![0] };
        let (ado_cache, lg_cache) = pool.install(|| {
            rayon::join(
                || PrefixCache::build(family, prefix, rep::ado3(), columns(3)),
                || PrefixCache::build(family, prefix, rep::lg_specialized(), columns(4)),
            )
        });
        let (ado_cache, lg_cache) = (ado_cache?, lg_cache?);
        if !ado_cache.spot_check(rep::ado3(), 5)? || !lg_cache.spot_check(rep::lg_specialized(), 5)? {
            return Err(VerifyError::CacheMismatch(family));
        }
        let results: Vec<SweepEntry> = pool.install(|| {
            group
                .par_iter()
                .enumerate()
                .map(|(i, w)| {
                    let audit = stride.is_some_and(|s| (offset + i) % s == 0);
                    evaluate_word(w, &ado_cache, &lg_cache, audit)
                })
                .collect::<Result<_, _>>()
        })?;
        offset += group.len();
        let s = FamilySummary {
            family,
            total: results.len(),
            equal: results.iter().filter(|e| e.equal).count(),
            audited: results.iter().filter(|e| e.audit.is_some()).count(),
            audit_failures: results.iter().filter(|e| e.audit == Some(false)).count(),
            seconds: family_started.elapsed().as_secs_f64(),
        };
        if options.progress {
            eprintln!(
                "{}: {}/{} equal, {} audited, {:.1}s",
                s.family, s.equal, s.total, s.audited, s.seconds
            );
        }
        summary.push(s);
        entries.extend(results);
    }
    Ok(SweepReport {
        entries,
        summary,
        paranoid: options.paranoid,
        seconds: started.elapsed().as_secs_f64(),
    })
}

/// A closure's ADO-3 value at `t = 1` and `t = w` is 1 for a knot and 0 for
/// a link with several components.
pub fn check_corollary(values: &[(BraidWord, LaurentPoly1)]) -> CheckReport {
    let mut report = CheckReport::new("corollary");
    for (b, p) in values {
        report.checked += 1;
        let expected = if b.closure_info().components == 1 {
            CycScalar::one()
        } else {
            CycScalar::zero()
        };
        for at in [CycScalar::one(), CycScalar::omega()] {
            match p.evaluate_at(&at) {
                Ok(v) if v == expected => {}
                Ok(v) => report.failures.push(format!("{b} at t={at}: {v}, expected {expected}")),
                Err(e) => report.failures.push(format!("{b} at t={at}: {e}")),
            }
        }
    }
    report
}

/// `P(t) = P(w / t)`.
pub fn is_almost_symmetric(p: &LaurentPoly1) -> bool {
    p.substitute_monomial(&CycScalar::omega(), -1).is_ok_and(|q| q == *p)
}

pub fn check_symmetry(values: &[(BraidWord, LaurentPoly1)]) -> CheckReport {
    let mut report = CheckReport::new("symmetry");
    for (b, p) in values {
        report.checked += 1;
        if !is_almost_symmetric(p) {
            report.failures.push(format!("{b}: {p}"));
        }
    }
    report
}
