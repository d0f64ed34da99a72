//! Macaulay inverse systems under the contraction action.
//!
//! A module generated by forms `F_1, ..., F_t` of degree `e` in
//! `k[y_1, ..., y_r]` has Hilbert function
//! `h_i = rank(contraction_matrix(F, i))`: the span of all contractions of
//! the generators by monomials of degree `e - i`. That Hilbert function is
//! also the h-vector of the level algebra `R / ann(F_1, ..., F_t)`.
//!
//! Contraction is used in every characteristic. Powers of linear forms are
//! taken as divided powers, `L^[n] = sum_{|a| = n} l^a y^a`, which is the
//! object contraction acts on the way differentiation acts on `L^n` in
//! characteristic zero (`L^n = n! L^[n]`).

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{construct_family, ConstructError, FamilyKind, Parity};
use crate::exact::{
    mix_seed, sample_scalars, DenseMatrix, FieldError, FieldSpec, Scalar, PRNG_NAME,
};
use crate::seqcore::{binomial_u64, HVector, SeqError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvSysError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("operator of degree {op} cannot contract a form of degree {form}")]
    OperatorTooLarge { op: u32, form: u32 },
    #[error("generators must share one degree and one field")]
    MixedGenerators,
    #[error("generator list is empty or all zero")]
    NoGenerators,
    #[error("degree {i} is outside 0..={e}")]
    DegreeOutOfRange { i: u32, e: u32 },
    #[error("monomial {0} does not have degree {1}")]
    WrongDegree(Monomial, u32),
    #[error("{field} is below the genericity floor {floor}; verdict inconclusive by policy")]
    BelowGenericityFloor { field: FieldSpec, floor: u64 },
    #[error("at least one trial is required")]
    NoTrials,
    #[error("a sweep needs at least one characteristic")]
    NoCharacteristics,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

/// Exponent vector `y_1^{a_1} ... y_r^{a_r}`, also read as the operator
/// `x_1^{a_1} ... x_r^{a_r}` acting by contraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::new(vec![0; num_vars])
    }

    /// The single variable `y_index` (zero-based).
    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            match a {
                1 => write!(f, "y{}", k + 1)?,
                _ => write!(f, "y{}^{a}", k + 1)?,
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of one degree in a fixed number of variables, in
/// lexicographic order with `y_1` largest (`y_1^e` comes first).
///
/// This ordering indexes dense form coefficients and every row and column
/// of a contraction matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    num_vars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(num_vars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut current = vec![0u32; num_vars];
        if num_vars > 0 {
            fill_lex(&mut current, 0, degree, &mut monomials);
        } else if degree == 0 {
            monomials.push(Monomial::new(vec![]));
        }
        let index = monomials
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        Self {
            num_vars,
            degree,
            monomials,
            index,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn fill_lex(current: &mut Vec<u32>, var: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        return;
    }
    for a in (0..=remaining).rev() {
        current[var] = a;
        fill_lex(current, var + 1, remaining - a, out);
    }
    current[var] = 0;
}

/// Homogeneous form of fixed degree, stored densely over its
/// [`MonomialBasis`].
#[derive(Debug, Clone)]
pub struct Form {
    field: FieldSpec,
    basis: Arc<MonomialBasis>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Form {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.num_vars() == other.num_vars()
            && self.degree() == other.degree()
            && self.coeffs == other.coeffs
    }
}

impl Eq for Form {}

impl Form {
    pub fn zero(field: FieldSpec, num_vars: usize, degree: u32) -> Self {
        let basis = Arc::new(MonomialBasis::new(num_vars, degree));
        let coeffs = vec![field.zero(); basis.len()];
        Self {
            field,
            basis,
            coeffs,
        }
    }

    /// Sums the given terms; repeated monomials accumulate.
    pub fn from_terms<I>(
        field: FieldSpec,
        num_vars: usize,
        degree: u32,
        terms: I,
    ) -> Result<Self, InvSysError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut form = Self::zero(field, num_vars, degree);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(InvSysError::VariableMismatch(m.num_vars(), num_vars));
            }
            if !field.contains(&c) {
                return Err(FieldError::ForeignScalar(c.to_string(), field).into());
            }
            let k = form
                .basis
                .position(&m)
                .ok_or_else(|| InvSysError::WrongDegree(m.clone(), degree))?;
            form.coeffs[k] = field.add(&form.coeffs[k], &c);
        }
        Ok(form)
    }

    pub fn monomial(field: FieldSpec, m: Monomial) -> Self {
        let (n, deg) = (m.num_vars(), m.degree());
        Self::from_terms(field, n, deg, [(m, field.one())]).expect("monomial of its own degree")
    }

    /// The linear form `sum l_k y_k`.
    pub fn linear(field: FieldSpec, coefficients: &[Scalar]) -> Result<Self, InvSysError> {
        let n = coefficients.len();
        Self::from_terms(
            field,
            n,
            1,
            coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(n, k), c.clone())),
        )
    }

    /// Divided power `L^[n]` of the linear form with the given coefficients:
    /// the coefficient of `y^a` is `prod_k l_k^{a_k}`.
    pub fn divided_power(field: FieldSpec, linear: &[Scalar], n: u32) -> Self {
        let basis = Arc::new(MonomialBasis::new(linear.len(), n));
        // powers[k][a] = l_k^a
        let powers: Vec<Vec<Scalar>> = linear
            .iter()
            .map(|l| {
                let mut row = Vec::with_capacity(n as usize + 1);
                row.push(field.one());
                for a in 1..=n as usize {
                    row.push(field.mul(&row[a - 1], l));
                }
                row
            })
            .collect();
        let coeffs = basis
            .monomials()
            .iter()
            .map(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .fold(field.one(), |acc, (k, &a)| {
                        field.mul(&acc, &powers[k][a as usize])
                    })
            })
            .collect();
        Self {
            field,
            basis,
            coeffs,
        }
    }

    /// Dense random form: every coefficient drawn by
    /// [`sample_scalars`] from `seed`.
    pub fn random(field: FieldSpec, num_vars: usize, degree: u32, seed: u64) -> Self {
        let basis = Arc::new(MonomialBasis::new(num_vars, degree));
        let coeffs = sample_scalars(field, basis.len(), seed);
        Self {
            field,
            basis,
            coeffs,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.basis.num_vars()
    }

    pub fn degree(&self) -> u32 {
        self.basis.degree()
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.basis
            .position(m)
            .map_or_else(|| self.field.zero(), |k| self.coeffs[k].clone())
    }

    /// Dense coefficients in basis order.
    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.basis
            .monomials()
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !self.field.is_zero(c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    fn check_compatible(&self, other: &Form) -> Result<(), InvSysError> {
        if self.field != other.field || self.degree() != other.degree() {
            return Err(InvSysError::MixedGenerators);
        }
        if self.num_vars() != other.num_vars() {
            return Err(InvSysError::VariableMismatch(
                self.num_vars(),
                other.num_vars(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form, InvSysError> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Ok(Form {
            coeffs,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Form {
            coeffs,
            ..self.clone()
        }
    }

    /// `sum c_k F_k` over forms of one degree.
    pub fn combination(coefficients: &[Scalar], forms: &[Form]) -> Result<Form, InvSysError> {
        let first = forms.first().ok_or(InvSysError::NoGenerators)?;
        let mut acc = Form::zero(first.field, first.num_vars(), first.degree());
        for (c, f) in coefficients.iter().zip(forms) {
            acc = acc.add(&f.scale(c))?;
        }
        Ok(acc)
    }

    /// Re-embeds the form into `num_vars >= self.num_vars()` variables; the
    /// new variables come last.
    pub fn embed(&self, num_vars: usize) -> Result<Form, InvSysError> {
        if num_vars < self.num_vars() {
            return Err(InvSysError::VariableMismatch(self.num_vars(), num_vars));
        }
        let pad = num_vars - self.num_vars();
        Form::from_terms(
            self.field,
            num_vars,
            self.degree(),
            self.terms().map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps.extend(std::iter::repeat_n(0, pad));
                (Monomial::new(exps), c.clone())
            }),
        )
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (m, c) in self.terms() {
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            write!(f, "{c}*{m}")?;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `op ∘ f`: each term `y^a` goes to `y^{a - b}` when `b <= a`
/// componentwise and to zero otherwise.
pub fn contract(op: &Monomial, f: &Form) -> Result<Form, InvSysError> {
    if op.num_vars() != f.num_vars() {
        return Err(InvSysError::VariableMismatch(op.num_vars(), f.num_vars()));
    }
    if op.degree() > f.degree() {
        return Err(InvSysError::OperatorTooLarge {
            op: op.degree(),
            form: f.degree(),
        });
    }
    let mut out = Form::zero(f.field, f.num_vars(), f.degree() - op.degree());
    for (m, c) in f.terms() {
        if let Some(q) = m.checked_div(op) {
            let k = out
                .basis
                .position(&q)
                .expect("quotient has the target degree");
            out.coeffs[k] = c.clone();
        }
    }
    Ok(out)
}

fn check_generators(generators: &[Form]) -> Result<&Form, InvSysError> {
    let first = generators.first().ok_or(InvSysError::NoGenerators)?;
    for g in &generators[1..] {
        first.check_compatible(g)?;
    }
    Ok(first)
}

/// Rows: `(generator, operator monomial of degree e - i)`, generator-major.
/// Columns: monomials of degree `i`. Entry: coefficient of the column
/// monomial in `operator ∘ generator`.
pub fn contraction_matrix(generators: &[Form], i: u32) -> Result<DenseMatrix, InvSysError> {
    let first = check_generators(generators)?;
    let e = first.degree();
    if i > e {
        return Err(InvSysError::DegreeOutOfRange { i, e });
    }
    let field = first.field;
    let n = first.num_vars();
    let operators = MonomialBasis::new(n, e - i);
    let columns = MonomialBasis::new(n, i);
    let rows = generators.len() * operators.len();
    let mut entries = Vec::with_capacity(rows * columns.len());
    for g in generators {
        for op in operators.monomials() {
            for col in columns.monomials() {
                let k = g.basis.position(&op.mul(col)).expect("degree e monomial");
                entries.push(g.coeffs[k].clone());
            }
        }
    }
    Ok(DenseMatrix::new(field, rows, columns.len(), entries)?)
}

/// Hilbert function of the inverse-system module generated by forms of
/// one degree `e`, with wall time spent per degree.
pub fn hilbert_function_timed(
    generators: &[Form],
) -> Result<(HVector, Vec<Duration>), InvSysError> {
    let first = check_generators(generators)?;
    if generators.iter().all(Form::is_zero) {
        return Err(InvSysError::NoGenerators);
    }
    let mut entries = Vec::with_capacity(first.degree() as usize + 1);
    let mut times = Vec::with_capacity(entries.capacity());
    for i in 0..=first.degree() {
        let start = Instant::now();
        entries.push(contraction_matrix(generators, i)?.rank() as u64);
        times.push(start.elapsed());
    }
    Ok((HVector::new(entries)?, times))
}

pub fn hilbert_function(generators: &[Form]) -> Result<HVector, InvSysError> {
    hilbert_function_timed(generators).map(|(h, _)| h)
}

/// `min{C(r-1+i, i), t C(r-1+e-i, e-i)}` for `0 <= i <= e`: no module
/// generated by `t` forms of degree `e` in `r` variables exceeds this.
pub fn hilbert_upper_bound(r: u64, e: u64, t: u64) -> Vec<u64> {
    (0..=e)
        .map(|i| {
            let ambient = binomial_u64(r - 1 + i, i).unwrap_or(u64::MAX);
            let spanned = binomial_u64(r - 1 + e - i, e - i)
                .and_then(|c| c.checked_mul(t))
                .unwrap_or(u64::MAX);
            ambient.min(spanned)
        })
        .collect()
}

/// The monomials `y_1^a y_2^b` (`a + b = degree`) in `used_vars` of
/// `ambient_vars` variables: the inverse system of `k[y_1, ..., y_used]`
/// truncated after `degree`.
pub fn truncation_generators(
    ambient_vars: usize,
    used_vars: usize,
    degree: u32,
    field: FieldSpec,
) -> Vec<Form> {
    assert!(used_vars <= ambient_vars, "used variables exceed ambient");
    MonomialBasis::new(used_vars, degree)
        .monomials()
        .iter()
        .map(|m| {
            let mut exps = m.exponents().to_vec();
            exps.resize(ambient_vars, 0);
            Form::monomial(field, Monomial::new(exps))
        })
        .collect()
}

/// Linear forms dual to a point configuration `Z_1 ∪ Z_2` in the plane:
/// general points, plus general points on the line `y_1 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    pub field: FieldSpec,
    pub seed: u64,
    /// `C(d+1, 2)` general linear forms in `y_1, y_2, y_3`.
    pub general_forms: Vec<Form>,
    /// `d + 4` linear forms with no `y_1` term.
    pub line_forms: Vec<Form>,
}

/// Number of linear forms a codimension-five construction samples.
pub fn thm_r_linear_form_count(d: u64) -> u64 {
    d * (d + 1) / 2 + d + 4
}

/// Smallest prime accepted for verifying `kind` at `param`:
/// `2 N^2`, where `N` counts sampled linear forms (codimension-five
/// family) or generators (socle-degree family, `e + 1` of them).
/// Characteristic 0 is always accepted.
pub fn genericity_floor(kind: FamilyKind, param: u64) -> u64 {
    let n = match kind {
        FamilyKind::ThmE => param + 1,
        FamilyKind::ThmROdd | FamilyKind::ThmREven => thm_r_linear_form_count(param),
    };
    2 * n * n
}

fn check_floor(kind: FamilyKind, param: u64, field: FieldSpec) -> Result<(), InvSysError> {
    let floor = genericity_floor(kind, param);
    if !field.is_rational() && field.characteristic() < floor {
        return Err(InvSysError::BelowGenericityFloor { field, floor });
    }
    Ok(())
}

/// Degree of the generators in the codimension-five construction.
pub fn thm_r_form_degree(d: u64, parity: Parity) -> u32 {
    let e = match parity {
        Parity::Odd => 2 * d,
        Parity::Even => 2 * d - 1,
    };
    e as u32
}

/// The two generators `F_1, F_2` of the codimension-five level algebra:
/// independent random combinations of `L_i^[n]` and `M_i^[n]`, with
/// `n = 2d` (odd) or `2d - 1` (even).
///
/// All randomness comes from one [`sample_scalars`] stream, consumed as:
/// general form coefficients, line form coefficients, then the
/// coefficients of `F_1` and of `F_2`.
pub fn build_codim_five_forms(
    d: u64,
    parity: Parity,
    field: FieldSpec,
    seed: u64,
) -> Result<(PointConfiguration, Form, Form), InvSysError> {
    if d < crate::construct::MIN_THM_R_D {
        return Err(ConstructError::DTooSmall(d).into());
    }
    check_floor(FamilyKind::thm_r(parity), d, field)?;
    let n_general = (d * (d + 1) / 2) as usize;
    let n_line = (d + 4) as usize;
    let n_forms = n_general + n_line;
    let total = 3 * n_general + 2 * n_line + 2 * n_forms;
    let samples = sample_scalars(field, total, seed);
    let (general_coeffs, rest) = samples.split_at(3 * n_general);
    let (line_coeffs, combo) = rest.split_at(2 * n_line);

    let general_forms = general_coeffs
        .chunks(3)
        .map(|c| Form::linear(field, c))
        .collect::<Result<Vec<_>, _>>()?;
    let line_forms = line_coeffs
        .chunks(2)
        .map(|c| Form::linear(field, &[field.zero(), c[0].clone(), c[1].clone()]))
        .collect::<Result<Vec<_>, _>>()?;

    let degree = thm_r_form_degree(d, parity);
    let powers: Vec<Form> = general_forms
        .iter()
        .chain(&line_forms)
        .map(|l| Form::divided_power(field, l.coefficients(), degree))
        .collect();
    let (c1, c2) = combo.split_at(n_forms);
    let f1 = Form::combination(c1, &powers)?;
    let f2 = Form::combination(c2, &powers)?;
    let config = PointConfiguration {
        field,
        seed,
        general_forms,
        line_forms,
    };
    Ok((config, f1, f2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    /// The field is too small for random choices to be trusted as general.
    Inconclusive,
    /// The run could not be set up (e.g. a non-prime characteristic in a
    /// sweep); see the report note.
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Error => "error",
        })
    }
}

/// Outcome of checking a family's level h-vector against the Hilbert
/// function of explicitly constructed inverse systems.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: FamilyKind,
    pub parameter: u64,
    /// Field characteristic (0 for `Q`). Kept raw so sweeps can report an
    /// invalid one.
    pub characteristic: u64,
    pub prng: String,
    pub seed: u64,
    pub trials: u64,
    pub trial_seeds: Vec<u64>,
    pub target: HVector,
    /// Elementwise maximum over trials; absent when nothing was computed.
    pub computed: Option<HVector>,
    pub per_trial: Vec<HVector>,
    pub verdict: Verdict,
    pub note: Option<String>,
    /// Wall time per trial and degree. Not serialized: reports must be
    /// byte-identical across runs.
    #[serde(skip)]
    pub timings: Vec<Vec<Duration>>,
}

impl VerificationReport {
    fn empty(
        kind: FamilyKind,
        parameter: u64,
        characteristic: u64,
        seed: u64,
        trials: u64,
        target: HVector,
    ) -> Self {
        Self {
            kind,
            parameter,
            characteristic,
            prng: PRNG_NAME.to_string(),
            seed,
            trials,
            trial_seeds: Vec::new(),
            target,
            computed: None,
            per_trial: Vec::new(),
            verdict: Verdict::Inconclusive,
            note: None,
            timings: Vec::new(),
        }
    }

    /// Total wall time per degree, summed over trials.
    pub fn time_per_degree(&self) -> Vec<Duration> {
        let len = self.timings.iter().map(Vec::len).max().unwrap_or(0);
        (0..len)
            .map(|i| self.timings.iter().filter_map(|t| t.get(i)).sum())
            .collect()
    }
}

/// Generators for one trial of `kind` at `param`.
pub fn trial_generators(
    kind: FamilyKind,
    param: u64,
    field: FieldSpec,
    seed: u64,
) -> Result<Vec<Form>, InvSysError> {
    match kind {
        FamilyKind::ThmE => {
            let degree = (param - 1) as u32;
            let mut gens = truncation_generators(3, 2, degree, field);
            gens.push(Form::random(field, 3, degree, seed));
            Ok(gens)
        }
        FamilyKind::ThmROdd | FamilyKind::ThmREven => {
            let parity = kind.parity().expect("thm_r kinds have a parity");
            let (_, f1, f2) = build_codim_five_forms(param, parity, field, seed)?;
            Ok(vec![f1, f2])
        }
    }
}

/// Best-of-`trials` check that the family's level h-vector is the Hilbert
/// function of its inverse-system construction over `field`.
///
/// Trial `t` uses seed `mix_seed(seed, t)`. Trials run in parallel; the
/// report does not depend on scheduling.
pub fn verify_construction(
    kind: FamilyKind,
    param: u64,
    field: FieldSpec,
    seed: u64,
    trials: u64,
) -> Result<VerificationReport, InvSysError> {
    let family = construct_family(kind, param)?;
    if trials == 0 {
        return Err(InvSysError::NoTrials);
    }
    let target = family.level_hvector;
    let mut report =
        VerificationReport::empty(kind, param, field.characteristic(), seed, trials, target);
    if let Err(e) = check_floor(kind, param, field) {
        report.note = Some(e.to_string());
        return Ok(report);
    }
    report.trial_seeds = (0..trials).map(|t| mix_seed(seed, t)).collect();
    let results = report
        .trial_seeds
        .par_iter()
        .map(|&s| hilbert_function_timed(&trial_generators(kind, param, field, s)?))
        .collect::<Result<Vec<_>, InvSysError>>()?;

    let (per_trial, timings): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let best: Vec<u64> = (0..report.target.len())
        .map(|i| per_trial.iter().filter_map(|h| h.get(i)).max().unwrap_or(0))
        .collect();
    let best = HVector::new(best)?;
    report.verdict = if best == report.target {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };
    report.computed = Some(best);
    report.per_trial = per_trial;
    report.timings = timings;
    Ok(report)
}

/// One report per requested characteristic, in input order. A bad
/// characteristic yields an [`Verdict::Error`] report instead of aborting.
pub fn sweep_characteristics(
    kind: FamilyKind,
    param: u64,
    characteristics: &[u64],
    seed: u64,
    trials: u64,
) -> Result<Vec<VerificationReport>, InvSysError> {
    if characteristics.is_empty() {
        return Err(InvSysError::NoCharacteristics);
    }
    let target = construct_family(kind, param)?.level_hvector;
    if trials == 0 {
        return Err(InvSysError::NoTrials);
    }
    Ok(characteristics
        .iter()
        .map(|&c| {
            let outcome = FieldSpec::new(c)
                .map_err(InvSysError::from)
                .and_then(|field| verify_construction(kind, param, field, seed, trials));
            outcome.unwrap_or_else(|e| {
                let mut r = VerificationReport::empty(kind, param, c, seed, trials, target.clone());
                r.verdict = Verdict::Error;
                r.note = Some(e.to_string());
                r
            })
        })
        .collect())
}
