//! Truncated Fock representations: floating ladder matrices, the exact
//! shared-radical action oracle, algebraic spectra, gaps, and the
//! partner-spectrum check.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{structure_function_value_unchecked, Generator, NormalForm};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::report::Report;

/// Which operator to materialize on the truncated space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Raise,
    Lower,
    Number,
    ProjectorEven,
    ProjectorOdd,
}

/// Dense real matrix on the states |0⟩..|D−1⟩.
#[derive(Clone, PartialEq)]
pub struct FockMatrix {
    dim: usize,
    label: String,
    data: Vec<f64>,
}

impl FockMatrix {
    pub fn zeros(dim: usize, label: impl Into<String>) -> Self {
        FockMatrix {
            dim,
            label: label.into(),
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = FockMatrix::zeros(dim, "I");
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn transpose(&self) -> FockMatrix {
        let mut out = FockMatrix::zeros(self.dim, format!("{}ᵀ", self.label));
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[j * self.dim + i] = self.data[i * self.dim + j];
            }
        }
        out
    }

    pub fn mul(&self, other: &FockMatrix) -> FockMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = FockMatrix::zeros(d, format!("{}·{}", self.label, other.label));
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FockMatrix) -> FockMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        out.label = format!("{}+{}", self.label, other.label);
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &FockMatrix) -> FockMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = self.clone();
        out.label = format!("{}-{}", self.label, other.label);
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: f64) -> FockMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn apply_complex(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| v[j] * self.get(i, j))
                    .sum::<Complex64>()
            })
            .collect()
    }

    pub fn max_abs_diff(&self, other: &FockMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for FockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockMatrix[{} dim {}]", self.label, self.dim)
    }
}

/// Builds one of the basic operators truncated to D states.
///
/// Ladder entries are √F₊: lowering has (n−1, n) = √F₊(n), raising is
/// its exact transpose. The ladder stops at the first vanishing F₊ on
/// an excited level, so at zero deformation the nonzero block is
/// confined to the two-state module generated from the vacuum.
pub fn build_operator(kind: OperatorKind, dim: usize, kappa0: &Rational) -> Result<FockMatrix> {
    if kappa0.is_negative() {
        return Err(Error::NegativeKappa(kappa0.to_string()));
    }
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim));
    }
    let matrix = match kind {
        OperatorKind::Lower | OperatorKind::Raise => {
            let mut lower = FockMatrix::zeros(dim, "f-");
            for n in 1..dim {
                let f = structure_function_value_unchecked(kappa0, n as u32);
                if f.is_zero() {
                    // states above n are unreachable from the vacuum
                    break;
                }
                lower.set(n - 1, n, f.to_f64().sqrt());
            }
            match kind {
                OperatorKind::Lower => lower,
                _ => {
                    let mut raise = lower.transpose();
                    raise.label = "f+".into();
                    raise
                }
            }
        }
        OperatorKind::Number => {
            let mut m = FockMatrix::zeros(dim, "N");
            for n in 0..dim {
                m.set(n, n, n as f64);
            }
            m
        }
        OperatorKind::ProjectorEven => {
            let mut m = FockMatrix::zeros(dim, "Pi0");
            for n in (0..dim).step_by(2) {
                m.set(n, n, 1.0);
            }
            m
        }
        OperatorKind::ProjectorOdd => {
            let mut m = FockMatrix::zeros(dim, "Pi1");
            for n in (1..dim).step_by(2) {
                m.set(n, n, 1.0);
            }
            m
        }
    };
    Ok(matrix)
}

/// Exact matrix element written as rational × √(Π F₊ over a level span).
///
/// Every ladder path from n to m shares the same leftover radical, the
/// product of F₊ over (min(n,m), max(n,m)]: paths overlap pairwise and
/// the paired factors fold into the rational part. Addition of
/// coefficients with one (n, m) pair therefore stays in this form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionCoefficient {
    rational: Rational,
    /// Half-open level interval (lo, hi] under the radical; empty when
    /// lo == hi (diagonal elements are purely rational).
    span: (u32, u32),
}

impl ActionCoefficient {
    pub fn new(rational: Rational, span: (u32, u32)) -> Self {
        debug_assert!(span.0 <= span.1);
        ActionCoefficient { rational, span }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn span(&self) -> (u32, u32) {
        self.span
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    /// Exact product of F₊ over the radical span.
    pub fn radicand(&self, kappa0: &Rational) -> Rational {
        let mut prod = Rational::one();
        for j in self.span.0 + 1..=self.span.1 {
            prod = prod * structure_function_value_unchecked(kappa0, j);
        }
        prod
    }

    pub fn to_f64(&self, kappa0: &Rational) -> f64 {
        self.rational.to_f64() * self.radicand(kappa0).to_f64().sqrt()
    }
}

/// Exact coefficients of nf|n⟩ in the Fock basis: a map m ↦ coefficient.
/// Terms annihilated by F₊(0) = 0 (or by a vanishing radical factor at
/// zero deformation) are dropped.
pub fn exact_action(
    nf: &NormalForm,
    n: u32,
    kappa0: &Rational,
) -> Result<BTreeMap<u32, ActionCoefficient>> {
    if kappa0.is_negative() {
        return Err(Error::NegativeKappa(kappa0.to_string()));
    }
    let mut out: BTreeMap<u32, ActionCoefficient> = BTreeMap::new();
    for (&(a, b), c) in nf.terms() {
        if b > n {
            continue;
        }
        let low = n - b;
        let m = low + a;
        let span = (n.min(m), n.max(m));
        // paired part of the path product: F₊ over (low, min(n,m)]
        let mut rational = c.eval(kappa0, low);
        for j in low + 1..=span.0 {
            rational = rational * structure_function_value_unchecked(kappa0, j);
        }
        if rational.is_zero() {
            continue;
        }
        // a vanishing factor under the radical annihilates the term
        let radical_zero =
            (span.0 + 1..=span.1).any(|j| structure_function_value_unchecked(kappa0, j).is_zero());
        if radical_zero {
            continue;
        }
        match out.remove(&m) {
            Some(existing) => {
                debug_assert_eq!(existing.span, span, "shared-radical invariant violated");
                let sum = existing.rational + rational;
                if !sum.is_zero() {
                    out.insert(m, ActionCoefficient::new(sum, span));
                }
            }
            None => {
                out.insert(m, ActionCoefficient::new(rational, span));
            }
        }
    }
    Ok(out)
}

/// Exact action of a raw generator word on |n⟩, computed by walking the
/// ladder one operator at a time (never through the rewriting engine).
/// Returns `None` when the word annihilates the state.
pub fn word_action(
    word: &[Generator],
    n: u32,
    kappa0: &Rational,
) -> Result<Option<(u32, ActionCoefficient)>> {
    if kappa0.is_negative() {
        return Err(Error::NegativeKappa(kappa0.to_string()));
    }
    let mut level = n;
    let mut factor_counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &g in word.iter().rev() {
        match g {
            Generator::Lower => {
                if level == 0 {
                    return Ok(None);
                }
                *factor_counts.entry(level).or_insert(0) += 1;
                level -= 1;
            }
            Generator::Raise => {
                *factor_counts.entry(level + 1).or_insert(0) += 1;
                level += 1;
            }
        }
    }
    let mut rational = Rational::one();
    let mut odd_levels = Vec::new();
    for (&j, &count) in &factor_counts {
        let f = structure_function_value_unchecked(kappa0, j);
        if f.is_zero() {
            return Ok(None);
        }
        rational = rational * f.pow(count / 2);
        if count % 2 == 1 {
            odd_levels.push(j);
        }
    }
    // unpaired factors always form the contiguous span between the
    // endpoints: each level boundary is crossed an odd number of times
    // exactly when it separates n from the final level
    let span = (n.min(level), n.max(level));
    debug_assert_eq!(
        odd_levels,
        (span.0 + 1..=span.1).collect::<Vec<_>>(),
        "path-overlap cancellation failed"
    );
    Ok(Some((level, ActionCoefficient::new(rational, span))))
}

/// Which diagonal ladder product to take the spectrum of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderProduct {
    /// f⁺f⁻, eigenvalues F₊(n).
    PlusMinus,
    /// f⁻f⁺, eigenvalues F₊(n+1).
    MinusPlus,
}

impl LadderProduct {
    pub fn as_str(&self) -> &'static str {
        match self {
            LadderProduct::PlusMinus => "f+f-",
            LadderProduct::MinusPlus => "f-f+",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "f+f-" => Ok(LadderProduct::PlusMinus),
            "f-f+" => Ok(LadderProduct::MinusPlus),
            other => Err(Error::Parse(format!(
                "unknown operator '{other}', expected f+f- or f-f+"
            ))),
        }
    }
}

/// Exact eigenvalues of the chosen ladder product, in Fock order.
pub fn algebraic_spectrum(
    which: LadderProduct,
    kappa0: &Rational,
    levels: u32,
) -> Result<Vec<Rational>> {
    if kappa0.is_negative() {
        return Err(Error::NegativeKappa(kappa0.to_string()));
    }
    if levels < 1 {
        return Err(Error::InvalidOrder(levels));
    }
    let offset = match which {
        LadderProduct::PlusMinus => 0,
        LadderProduct::MinusPlus => 1,
    };
    Ok((0..levels)
        .map(|n| structure_function_value_unchecked(kappa0, n + offset))
        .collect())
}

/// Consecutive differences of the spectrum after ascending sort.
pub fn gap_analysis(spectrum: &[Rational]) -> Vec<Rational> {
    let mut sorted = spectrum.to_vec();
    sorted.sort();
    sorted.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Partner-spectrum check: the f⁻f⁺ spectrum equals the f⁺f⁻ spectrum
/// with its single zero removed, compared level by level away from the
/// truncation edge. The zero-deformation case degenerates to a
/// two-state multiset comparison.
pub fn isospectral_check(kappa0: &Rational, dim: usize) -> Result<Report> {
    if kappa0.is_negative() {
        return Err(Error::NegativeKappa(kappa0.to_string()));
    }
    if dim < 2 || !dim.is_multiple_of(2) {
        return Err(Error::DimensionTooSmall(dim));
    }
    let mut report = Report::new(format!(
        "partner spectra at kappa = {kappa0}, truncation D = {dim}"
    ));
    if kappa0.is_zero() {
        // two-state fermion module: {0, 1} on both sides as multisets
        let mut pm: Vec<_> = (0..2u32)
            .map(|n| structure_function_value_unchecked(kappa0, n))
            .collect();
        let mut mp: Vec<_> = (0..2u32)
            .map(|n| structure_function_value_unchecked(kappa0, n + 1))
            .collect();
        pm.sort();
        mp.sort();
        report.push(
            "two-state-multiset",
            pm == mp,
            format!("f+f- gives {pm:?}, f-f+ gives {mp:?} on the fermion module"),
        );
        report.note("zero deformation: compared as multisets on the two-state module");
        return Ok(report);
    }
    let pm = algebraic_spectrum(LadderProduct::PlusMinus, kappa0, dim as u32)?;
    let mp = algebraic_spectrum(LadderProduct::MinusPlus, kappa0, dim as u32)?;
    let zero_count = pm.iter().filter(|v| v.is_zero()).count();
    report.push(
        "single-zero-mode",
        zero_count == 1,
        format!("f+f- spectrum carries {zero_count} zero(s)"),
    );
    let pm_nonzero: Vec<_> = pm.iter().filter(|v| !v.is_zero()).cloned().collect();
    let compare = dim - 2;
    let matches = pm_nonzero
        .iter()
        .take(compare)
        .zip(mp.iter().take(compare))
        .all(|(a, b)| a == b);
    report.push(
        "shifted-levels",
        matches,
        format!("first {compare} levels agree exactly after removing the zero mode"),
    );
    Ok(report)
}

/// JSON view of a spectrum with its gaps.
pub fn spectrum_to_json(
    kappa0: &Rational,
    which: LadderProduct,
    eigenvalues: &[Rational],
) -> Value {
    json!({
        "kappa": kappa0.to_string(),
        "operator": which.as_str(),
        "eigenvalues": eigenvalues.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "gaps": gap_analysis(eigenvalues).iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}
