//! The deformed fermion algebra: structure functions, exact normal-form
//! word calculus, reordering identities, parity projectors, and the
//! quadratic boson map built from squared ladder operators.
//!
//! Generators satisfy {f⁻, f⁺} = 1 + 2κN with [N, f±] = ±f±, so every
//! word reduces to a sum of monomials (f⁺)^a · c(N, σ, κ) · (f⁻)^b with
//! the coefficient placed between the ladder blocks (middle convention).

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{KPoly, NPoly, NSigmaPoly, Rational};
use crate::report::Report;

/// Ladder generators of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// f⁺, the creation operator.
    Raise,
    /// f⁻, the annihilation operator.
    Lower,
}

/// Fock-sector parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Structure function value F₊(n) at exact rational kappa.
///
/// F₊(0) = 0, F₊(n) = κn for even n, F₊(n) = 1 + κ(n−1) for odd n.
/// Rejects κ < 0: positivity of F₊ on excited levels needs κ ≥ 0.
pub fn structure_function_value(kappa0: &Rational, n: u32) -> Result<Rational> {
    if kappa0.is_negative() {
        return Err(Error::NegativeKappa(kappa0.to_string()));
    }
    Ok(structure_function_value_unchecked(kappa0, n))
}

pub(crate) fn structure_function_value_unchecked(kappa0: &Rational, n: u32) -> Rational {
    if n.is_multiple_of(2) {
        kappa0 * Rational::from_int(n as i64)
    } else {
        Rational::one() + kappa0 * Rational::from_int(n as i64 - 1)
    }
}

/// F₊ at a fixed level, symbolic in kappa (parity-split form).
pub fn structure_function_kpoly(n: u32) -> KPoly {
    if n.is_multiple_of(2) {
        KPoly::from_coeffs(vec![Rational::zero(), Rational::from_int(n as i64)])
    } else {
        KPoly::from_coeffs(vec![Rational::one(), Rational::from_int(n as i64 - 1)])
    }
}

/// F₊ at a fixed level via the single closed form
/// (1−(−1)^n)(1+κ(n−1))/2 + κn(1+(−1)^n)/2, symbolic in kappa.
pub fn structure_function_closed_form_kpoly(n: u32) -> KPoly {
    let s: i64 = if n.is_multiple_of(2) { 1 } else { -1 };
    let half = Rational::new(1, 2);
    // (1 - s)/2 * (1 + kappa (n-1))
    let odd_weight = (Rational::one() - Rational::from_int(s)) * &half;
    let odd_term = KPoly::from_coeffs(vec![Rational::one(), Rational::from_int(n as i64 - 1)])
        .scale(&odd_weight);
    // kappa n/2 * (1 + s)
    let even_weight =
        Rational::from_int(n as i64) * half * (Rational::one() + Rational::from_int(s));
    let even_term = KPoly::kappa().scale(&even_weight);
    odd_term.add(&even_term)
}

/// F₊ at a fixed level by alternating iteration of the recursion:
/// F₊(n) = (−1)^{n−1} Σ_{m<n} (−1)^m (1 + 2κm), symbolic in kappa.
pub fn structure_function_alternating_sum_kpoly(n: u32) -> KPoly {
    let mut acc = KPoly::zero();
    for m in 0..n {
        let g = KPoly::from_coeffs(vec![Rational::one(), Rational::from_int(2 * m as i64)]);
        acc = if m % 2 == 0 { acc.add(&g) } else { acc.sub(&g) };
    }
    if n.is_multiple_of(2) {
        acc.neg()
    } else {
        acc
    }
}

/// The structure function as a ring element: F₊(N) = κN + (1−κ)Π₁.
pub fn structure_function_poly() -> NSigmaPoly {
    let kn = NSigmaPoly::from_parts(NPoly::n().scale_kpoly(&KPoly::kappa()), NPoly::zero());
    let one_minus_kappa = KPoly::one().sub(&KPoly::kappa());
    kn.add(&projector(Parity::Odd).scale_kpoly(&one_minus_kappa))
}

/// Parity projectors Π₀ = (1+σ)/2, Π₁ = (1−σ)/2.
pub fn projector(parity: Parity) -> NSigmaPoly {
    let half = Rational::new(1, 2);
    match parity {
        Parity::Even => NSigmaPoly::one().add(&NSigmaPoly::sigma()).scale(&half),
        Parity::Odd => NSigmaPoly::one().sub(&NSigmaPoly::sigma()).scale(&half),
    }
}

/// Contraction coefficient for one crossing: f⁻f⁺ = F₊(N+1).
fn contraction() -> NSigmaPoly {
    structure_function_poly().shift(1)
}

/// Remainder coefficient of the order-n reordering identity:
/// (1−(−1)^n)/2 · (1 + κ + 2κN) + (−1)^n κn.
pub(crate) fn reorder_remainder(n: u32) -> NSigmaPoly {
    let sign: i64 = if n.is_multiple_of(2) { 1 } else { -1 };
    let odd_weight = Rational::new(1 - sign, 2);
    let body = NSigmaPoly::from_kpoly(KPoly::from_coeffs(vec![Rational::one(), Rational::one()]))
        .add(
            &NSigmaPoly::kappa()
                .mul(&NSigmaPoly::n_op())
                .scale(&Rational::from_int(2)),
        );
    let tail = NSigmaPoly::from_kpoly(KPoly::kappa().scale(&Rational::from_int(sign * n as i64)));
    body.scale(&odd_weight).add(&tail)
}

/// Canonical normal form: finite sum of (f⁺)^a c_{a,b}(N,σ,κ) (f⁻)^b,
/// keyed by (a, b), with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NormalForm {
    terms: BTreeMap<(u32, u32), NSigmaPoly>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    pub fn identity() -> Self {
        NormalForm::from_coefficient(NSigmaPoly::one())
    }

    /// A pure multiplication operator c(N, σ, κ).
    pub fn from_coefficient(c: NSigmaPoly) -> Self {
        NormalForm::monomial(0, c, 0)
    }

    pub fn monomial(raise: u32, coeff: NSigmaPoly, lower: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((raise, lower), coeff);
        }
        NormalForm { terms }
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Raise => NormalForm::monomial(1, NSigmaPoly::one(), 0),
            Generator::Lower => NormalForm::monomial(0, NSigmaPoly::one(), 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &NSigmaPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, raise: u32, lower: u32) -> Option<&NSigmaPoly> {
        self.terms.get(&(raise, lower))
    }

    fn insert(&mut self, key: (u32, u32), coeff: NSigmaPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(existing) => {
                let sum = existing.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (key, coeff) in &other.terms {
            out.insert(*key, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (key, coeff) in &other.terms {
            out.insert(*key, coeff.neg());
        }
        out
    }

    pub fn neg(&self) -> NormalForm {
        NormalForm {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> NormalForm {
        let mut out = NormalForm::zero();
        for (key, coeff) in &self.terms {
            out.insert(*key, coeff.scale(c));
        }
        out
    }

    /// Right-multiplies by a pure coefficient s(N, σ): the coefficient
    /// crosses the lowering block, picking up N -> N + b and a σ flip
    /// per crossing.
    pub fn mul_coefficient_right(&self, s: &NSigmaPoly) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(a, b), c) in &self.terms {
            out.insert((a, b), c.mul(&s.shift(b as i64)));
        }
        out
    }

    /// Left-multiplies by a pure coefficient s(N, σ): it crosses the
    /// raising block, picking up N -> N + a and a σ flip per crossing.
    pub fn mul_coefficient_left(&self, s: &NSigmaPoly) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(a, b), c) in &self.terms {
            out.insert((a, b), c.mul(&s.shift(a as i64)));
        }
        out
    }

    /// Right-multiplies by a single generator.
    pub fn mul_generator_right(&self, g: Generator) -> NormalForm {
        let mut out = NormalForm::zero();
        match g {
            Generator::Lower => {
                for (&(a, b), c) in &self.terms {
                    out.insert((a, b + 1), c.clone());
                }
            }
            Generator::Raise => {
                let cross = contraction();
                for (&(a, b), c) in &self.terms {
                    if b == 0 {
                        out.insert((a + 1, 0), c.shift(1));
                    } else {
                        // (f⁻)^b f⁺ = F₊(N+1) moved through the remaining
                        // b−1 lowering operators.
                        out.insert((a, b - 1), c.mul(&cross.shift(b as i64 - 1)));
                    }
                }
            }
        }
        out
    }

    /// Left-multiplies by a single generator.
    pub fn mul_generator_left(&self, g: Generator) -> NormalForm {
        let mut out = NormalForm::zero();
        match g {
            Generator::Raise => {
                for (&(a, b), c) in &self.terms {
                    out.insert((a + 1, b), c.clone());
                }
            }
            Generator::Lower => {
                let cross = contraction();
                for (&(a, b), c) in &self.terms {
                    if a == 0 {
                        out.insert((0, b + 1), c.shift(1));
                    } else {
                        out.insert((a - 1, b), cross.shift(a as i64 - 1).mul(c));
                    }
                }
            }
        }
        out
    }

    /// Rewrites every reducible monomial — min(a, b) > 0 — down to the
    /// basis where one ladder block is empty, folding each inner pair
    /// through f⁺f⁻ = F₊(N). Two normal forms represent the same
    /// operator exactly when their reductions are structurally equal,
    /// so this is the canonical form for identity checking.
    pub fn reduce(&self) -> NormalForm {
        let f_poly = structure_function_poly();
        let mut out = NormalForm::zero();
        for (&(a, b), c) in &self.terms {
            let m = a.min(b);
            let mut coeff = c.clone();
            for _ in 0..m {
                coeff = f_poly.mul(&coeff.shift(-1));
            }
            out.insert((a - m, b - m), coeff);
        }
        out
    }

    /// True when the represented operator is zero.
    pub fn is_operator_zero(&self) -> bool {
        self.reduce().is_zero()
    }

    /// Operator equality: structural equality of the reductions.
    pub fn operator_eq(&self, other: &NormalForm) -> bool {
        self.sub(other).is_operator_zero()
    }

    /// Normal form of the operator product self · other.
    pub fn normal_mul(&self, other: &NormalForm) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(a2, b2), c2) in &other.terms {
            let mut partial = self.clone();
            for _ in 0..a2 {
                partial = partial.mul_generator_right(Generator::Raise);
            }
            partial = partial.mul_coefficient_right(c2);
            for _ in 0..b2 {
                partial = partial.mul_generator_right(Generator::Lower);
            }
            out = out.add(&partial);
        }
        out
    }

    /// JSON encoding: `{"terms": [{"raise", "lower", "coeff"}]}` sorted
    /// by (raise, lower).
    pub fn to_json(&self) -> Value {
        json!({
            "terms": self.terms.iter().map(|(&(a, b), c)| json!({
                "raise": a,
                "lower": b,
                "coeff": c.to_json(),
            })).collect::<Vec<_>>()
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing 'terms' array".into()))?;
        let mut out = NormalForm::zero();
        for t in terms {
            let a = t
                .get("raise")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("missing 'raise'".into()))? as u32;
            let b = t
                .get("lower")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("missing 'lower'".into()))? as u32;
            let c = t
                .get("coeff")
                .ok_or_else(|| Error::Parse("missing 'coeff'".into()))?;
            out.insert((a, b), NSigmaPoly::from_json(c)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            if a > 0 {
                write!(f, "(f+)^{a} ")?;
            }
            write!(f, "[{c}]")?;
            if b > 0 {
                write!(f, " (f-)^{b}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Normalizes a word of generators, folding left to right. `word[0]`
/// is the leftmost operator, i.e. the last one applied to a ket.
pub fn word_normalize(word: &[Generator]) -> NormalForm {
    let mut nf = NormalForm::identity();
    for &g in word {
        nf = nf.mul_generator_right(g);
    }
    nf
}

/// Normalizes the same word folding right to left; used to exercise
/// confluence of the rewrite rules.
pub fn word_normalize_rtl(word: &[Generator]) -> NormalForm {
    let mut nf = NormalForm::identity();
    for &g in word.iter().rev() {
        nf = nf.mul_generator_left(g);
    }
    nf
}

/// Exact difference (left side − right side) of the two reordering
/// identities at order n, as normal forms. Both must vanish.
#[derive(Clone, Debug)]
pub struct ReorderCheck {
    pub order: u32,
    /// f⁻(f⁺)^n − [(−1)^n (f⁺)^n f⁻ + h_n(N) (f⁺)^{n−1}]
    pub lower_past_raises: NormalForm,
    /// (f⁻)^n f⁺ − [(−1)^n f⁺ (f⁻)^n + (f⁻)^{n−1} h_n(N)]
    pub raise_past_lowers: NormalForm,
}

impl ReorderCheck {
    pub fn holds(&self) -> bool {
        self.lower_past_raises.is_zero() && self.raise_past_lowers.is_zero()
    }

    pub fn to_report(&self) -> Report {
        let mut report = Report::new(format!("reordering identities at order {}", self.order));
        report.push(
            "lower-past-raises",
            self.lower_past_raises.is_zero(),
            format!("difference = {}", self.lower_past_raises),
        );
        report.push(
            "raise-past-lowers",
            self.raise_past_lowers.is_zero(),
            format!("difference = {}", self.raise_past_lowers),
        );
        report
    }
}

/// Verifies the order-n reordering identities by exact rewriting.
pub fn reorder_identity_check(n: u32) -> Result<ReorderCheck> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    let sign = if n.is_multiple_of(2) {
        Rational::one()
    } else {
        Rational::from_int(-1)
    };
    let remainder = reorder_remainder(n).shift(n as i64 - 1);

    // f⁻ (f⁺)^n
    let mut word = vec![Generator::Lower];
    word.extend(std::iter::repeat_n(Generator::Raise, n as usize));
    let lhs_a = word_normalize(&word);
    let rhs_a = NormalForm::monomial(n, NSigmaPoly::one(), 1)
        .scale(&sign)
        .add(&NormalForm::monomial(n - 1, remainder.clone(), 0));

    // (f⁻)^n f⁺
    let mut word = vec![Generator::Lower; n as usize];
    word.push(Generator::Raise);
    let lhs_b = word_normalize(&word);
    let rhs_b = NormalForm::monomial(1, NSigmaPoly::one(), n)
        .scale(&sign)
        .add(&NormalForm::monomial(0, remainder, n - 1));

    Ok(ReorderCheck {
        order: n,
        lower_past_raises: lhs_a.sub(&rhs_a).reduce(),
        raise_past_lowers: lhs_b.sub(&rhs_b).reduce(),
    })
}

/// Collapses a normal form with only diagonal terms (a = b) to a single
/// multiplication operator: Σ_k Π_{j<k} F₊(N−j) · c_k(N−k).
/// Returns `None` if any off-diagonal term is present.
pub fn diagonal_collapse(nf: &NormalForm) -> Option<NSigmaPoly> {
    let f = structure_function_poly();
    let mut out = NSigmaPoly::zero();
    for (&(a, b), c) in nf.terms() {
        if a != b {
            return None;
        }
        let mut term = c.shift(-(a as i64));
        for j in 0..a {
            term = term.mul(&f.shift(-(j as i64)));
        }
        out = out.add(&term);
    }
    Some(out)
}

/// The squared-ladder boson map and its exact structure data.
#[derive(Clone, Debug)]
pub struct Bosonization {
    /// X⁺ = (f⁺)² as a normal form.
    pub x_plus: NormalForm,
    /// X⁻ = (f⁻)² as a normal form.
    pub x_minus: NormalForm,
    /// Diagonal of X⁺X⁻, i.e. F₊(N)F₊(N−1).
    pub f_of_n: NSigmaPoly,
    /// Diagonal of [X⁻, X⁺]; equals 2κ(2κN + 1).
    pub commutator: NSigmaPoly,
}

/// Builds X± = (f±)² and collapses their products to diagonal form.
pub fn bosonize() -> Bosonization {
    let x_plus = word_normalize(&[Generator::Raise, Generator::Raise]);
    let x_minus = word_normalize(&[Generator::Lower, Generator::Lower]);
    let f_of_n =
        diagonal_collapse(&x_plus.normal_mul(&x_minus)).expect("X+X- is diagonal by construction");
    let reversed =
        diagonal_collapse(&x_minus.normal_mul(&x_plus)).expect("X-X+ is diagonal by construction");
    Bosonization {
        x_plus,
        x_minus,
        commutator: reversed.sub(&f_of_n),
        f_of_n,
    }
}

/// Exact product route for the bosonized structure function:
/// F₊(N)·F₊(N−1), independent of the rewriting engine.
pub fn bosonized_structure_product() -> NSigmaPoly {
    let f = structure_function_poly();
    f.mul(&f.shift(-1))
}

/// The published closed form of the bosonized structure function, which
/// disagrees with the exact product in the sign of its κ(κ−1) terms.
pub fn bosonized_structure_published() -> NSigmaPoly {
    // κ²N(N−1) + κ(κ−1)N − κ(κ−1)Π₁
    let kappa = NSigmaPoly::kappa();
    let n = NSigmaPoly::n_op();
    let k2 = kappa.mul(&kappa);
    let n_n_minus_1 = n.mul(&n.sub(&NSigmaPoly::one()));
    let k_k_minus_1 = kappa.mul(&kappa.sub(&NSigmaPoly::one()));
    k2.mul(&n_n_minus_1)
        .add(&k_k_minus_1.mul(&n))
        .sub(&k_k_minus_1.mul(&projector(Parity::Odd)))
}
