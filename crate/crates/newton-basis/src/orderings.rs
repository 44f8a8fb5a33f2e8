//! Monomial orderings: semigroup orderings, Newton weight functions, Newton
//! orderings refining the induced filtration, and the homogenised ordering
//! used during normal form computation.
//!
//! The comparison convention on exponent vectors is `Greater` = larger
//! monomial. A Newton ordering compares by weight first, with *larger weight
//! meaning smaller monomial*, and falls back to a semigroup tie-break.

use crate::arith::{ExpVec, HMon, HPolynomial, Polynomial, Rat, Term};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};
use std::cmp::Ordering as CmpOrd;

/// Linear form with rational coefficients, not identically zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LinearForm {
    coeffs: Vec<Rat>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::Internal("linear form must be nonzero".into()));
        }
        Ok(LinearForm { coeffs })
    }

    pub fn n_vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, m: &ExpVec) -> Rat {
        let mut acc = Rat::zero();
        for (c, e) in self.coeffs.iter().zip(&m.0) {
            if *e != 0 {
                acc += c * crate::arith::rat(*e as i64);
            }
        }
        acc
    }

    /// `l(m + delta)` for a rational shift vector.
    pub fn eval_shifted(&self, m: &ExpVec, delta: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for ((c, e), d) in self.coeffs.iter().zip(&m.0).zip(delta) {
            acc += c * (crate::arith::rat(*e as i64) + d);
        }
        acc
    }

    pub fn eval_point(&self, p: &[Rat]) -> Rat {
        self.coeffs.iter().zip(p).map(|(c, x)| c * x).sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn all_nonpositive(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_positive())
    }

    pub fn all_positive(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }
}

/// Total orderings on monomials compatible with multiplication.
///
/// `WeightedDeg` compares weighted degrees with larger weight meaning
/// *smaller* monomial, matching the Newton convention, so positive weights
/// give a local ordering and negative weights a global one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SemigroupOrdering {
    /// Lexicographic, global.
    Lex,
    /// Degree reverse lexicographic, global.
    DegRevLex,
    /// Negative degree reverse lexicographic, local.
    NegDegRevLex,
    WeightedDeg {
        weights: Vec<Rat>,
        tiebreak: Box<SemigroupOrdering>,
    },
}

/// Reverse-lexicographic tail comparison shared by the degree orderings:
/// the monomial whose last nonzero exponent difference is negative is larger.
fn revlex_tail(a: &ExpVec, b: &ExpVec) -> CmpOrd {
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        match x.cmp(y) {
            CmpOrd::Equal => continue,
            CmpOrd::Less => return CmpOrd::Greater,
            CmpOrd::Greater => return CmpOrd::Less,
        }
    }
    CmpOrd::Equal
}

impl SemigroupOrdering {
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> CmpOrd {
        match self {
            SemigroupOrdering::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    match x.cmp(y) {
                        CmpOrd::Equal => continue,
                        other => return other,
                    }
                }
                CmpOrd::Equal
            }
            SemigroupOrdering::DegRevLex => match a.degree().cmp(&b.degree()) {
                CmpOrd::Equal => revlex_tail(a, b),
                other => other,
            },
            SemigroupOrdering::NegDegRevLex => match b.degree().cmp(&a.degree()) {
                CmpOrd::Equal => revlex_tail(a, b),
                other => other,
            },
            SemigroupOrdering::WeightedDeg { weights, tiebreak } => {
                let wa: Rat = weights
                    .iter()
                    .zip(&a.0)
                    .map(|(w, e)| w * crate::arith::rat(*e as i64))
                    .sum();
                let wb: Rat = weights
                    .iter()
                    .zip(&b.0)
                    .map(|(w, e)| w * crate::arith::rat(*e as i64))
                    .sum();
                // larger weight = smaller monomial
                match wb.cmp(&wa) {
                    CmpOrd::Equal => tiebreak.cmp(a, b),
                    other => other,
                }
            }
        }
    }

    pub fn is_global(&self, n_vars: usize) -> bool {
        let zero = ExpVec::zero(n_vars);
        (0..n_vars).all(|i| self.cmp(&ExpVec::unit(n_vars, i), &zero) == CmpOrd::Greater)
    }

    pub fn is_local(&self, n_vars: usize) -> bool {
        let zero = ExpVec::zero(n_vars);
        (0..n_vars).all(|i| self.cmp(&ExpVec::unit(n_vars, i), &zero) == CmpOrd::Less)
    }
}

/// Sufficient conditions under which a Newton ordering is known to be normal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NormalityCertificate {
    AllFormsNonnegative,
    AllFormsNonpositive,
    ZeroShift,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OrderingClass {
    pub is_global: bool,
    pub is_local: bool,
    pub is_mixed: bool,
    pub certificate: NormalityCertificate,
}

impl OrderingClass {
    pub fn certified(&self) -> bool {
        self.certificate != NormalityCertificate::Unknown
    }
}

/// Ordering refining the filtration by `w(m) = min { l(m + delta) | l in L }`,
/// with ties broken by a semigroup ordering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonOrdering {
    forms: Vec<LinearForm>,
    shift: Vec<Rat>,
    tiebreak: SemigroupOrdering,
}

impl NewtonOrdering {
    pub fn new(
        forms: Vec<LinearForm>,
        shift: Vec<Rat>,
        tiebreak: SemigroupOrdering,
    ) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::Internal("a Newton ordering needs at least one form".into()));
        }
        let n = forms[0].n_vars();
        if forms.iter().any(|l| l.n_vars() != n) || shift.len() != n {
            return Err(Error::VariableMismatch {
                left: n,
                right: shift.len(),
            });
        }
        if shift.iter().any(|d| d.is_negative()) {
            return Err(Error::Internal("shift must be componentwise nonnegative".into()));
        }
        Ok(NewtonOrdering {
            forms,
            shift,
            tiebreak,
        })
    }

    /// Chooses the tie-break by weight classification: degrevlex-local when
    /// every variable has strictly positive weight, degrevlex-global otherwise.
    pub fn with_default_tiebreak(forms: Vec<LinearForm>, shift: Vec<Rat>) -> Result<Self> {
        let provisional = NewtonOrdering::new(forms, shift, SemigroupOrdering::NegDegRevLex)?;
        let n = provisional.n_vars();
        let w0 = provisional.weight(&ExpVec::zero(n));
        let local = (0..n).all(|i| provisional.weight(&ExpVec::unit(n, i)) > w0);
        if local {
            Ok(provisional)
        } else {
            Ok(NewtonOrdering {
                tiebreak: SemigroupOrdering::DegRevLex,
                ..provisional
            })
        }
    }

    /// Embeds a weight-representable semigroup ordering as a single-form
    /// Newton ordering with zero shift. Lexicographic orderings admit no
    /// rational weight vector and are rejected.
    pub fn from_semigroup(o: &SemigroupOrdering, n_vars: usize) -> Result<Self> {
        let one = crate::arith::rat(1);
        match o {
            SemigroupOrdering::Lex => Err(Error::WrongOrderingKind {
                needed: "weight-representable",
            }),
            SemigroupOrdering::DegRevLex => NewtonOrdering::new(
                vec![LinearForm::new(vec![-one.clone(); n_vars])?],
                vec![Rat::zero(); n_vars],
                SemigroupOrdering::DegRevLex,
            ),
            SemigroupOrdering::NegDegRevLex => NewtonOrdering::new(
                vec![LinearForm::new(vec![one; n_vars])?],
                vec![Rat::zero(); n_vars],
                SemigroupOrdering::NegDegRevLex,
            ),
            SemigroupOrdering::WeightedDeg { weights, tiebreak } => {
                if weights.len() != n_vars {
                    return Err(Error::VariableMismatch {
                        left: weights.len(),
                        right: n_vars,
                    });
                }
                NewtonOrdering::new(
                    vec![LinearForm::new(weights.clone())?],
                    vec![Rat::zero(); n_vars],
                    (**tiebreak).clone(),
                )
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.forms[0].n_vars()
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn shift(&self) -> &[Rat] {
        &self.shift
    }

    pub fn tiebreak(&self) -> &SemigroupOrdering {
        &self.tiebreak
    }

    /// With a single form the filtration level sets are affine hyperplanes and
    /// the ordering is a semigroup ordering (the shift only adds a constant).
    pub fn is_single_form(&self) -> bool {
        self.forms.len() == 1
    }

    pub fn all_forms_strictly_positive(&self) -> bool {
        self.forms.iter().all(|l| l.all_positive())
    }

    /// Value of the `idx`-th form at `m` (+ shift if `shifted`).
    pub fn form_value(&self, idx: usize, m: &ExpVec, shifted: bool) -> Rat {
        if shifted {
            self.forms[idx].eval_shifted(m, &self.shift)
        } else {
            self.forms[idx].eval(m)
        }
    }

    /// Newton weight `min { l(m + delta) | l in L }`.
    pub fn weight(&self, m: &ExpVec) -> Rat {
        self.forms
            .iter()
            .map(|l| l.eval_shifted(m, &self.shift))
            .min()
            .expect("forms nonempty")
    }

    /// Unshifted weight `min { l(m) | l in L }`.
    pub fn weight_unshifted(&self, m: &ExpVec) -> Rat {
        self.forms.iter().map(|l| l.eval(m)).min().expect("forms nonempty")
    }

    /// Minimum of the monomial weights of `f`; errors on zero.
    pub fn weight_poly(&self, f: &Polynomial) -> Result<Rat> {
        f.support()
            .map(|m| self.weight(m))
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Total order: larger weight means smaller monomial, ties fall through
    /// to the semigroup tie-break. `Equal` is returned only for `a == b`.
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> CmpOrd {
        if a == b {
            return CmpOrd::Equal;
        }
        match self.weight(b).cmp(&self.weight(a)) {
            CmpOrd::Equal => self.tiebreak.cmp(a, b),
            other => other,
        }
    }

    /// Global wellordering on `t`-monomials: by total degree `t + |x|` first,
    /// then by the Newton ordering on the x-parts.
    pub fn cmp_h(&self, a: &HMon, b: &HMon) -> CmpOrd {
        let da = a.0 as u64 + a.1.degree();
        let db = b.0 as u64 + b.1.degree();
        match da.cmp(&db) {
            CmpOrd::Equal => {
                if a.1 == b.1 {
                    CmpOrd::Equal
                } else {
                    self.cmp(&a.1, &b.1)
                }
            }
            other => other,
        }
    }

    /// Lead term of a nonzero polynomial.
    pub fn lead(&self, f: &Polynomial) -> Result<Term> {
        let mut best: Option<(&ExpVec, &Rat)> = None;
        for (m, c) in f.terms() {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if self.cmp(m, bm) == CmpOrd::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        let (m, c) = best.ok_or(Error::ZeroPolynomial)?;
        Ok(Term {
            coeff: c.clone(),
            monomial: m.clone(),
        })
    }

    /// Lead term of a nonzero `t`-polynomial under the homogenised ordering.
    pub fn lead_h(&self, f: &HPolynomial) -> Result<(HMon, Rat)> {
        let mut best: Option<(&HMon, &Rat)> = None;
        for (m, c) in f.terms() {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if self.cmp_h(m, bm) == CmpOrd::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        let (m, c) = best.ok_or(Error::ZeroPolynomial)?;
        Ok((m.clone(), c.clone()))
    }

    /// Global/local/mixed flags decided by comparing each variable with 1,
    /// plus the strongest applicable normality certificate.
    pub fn classify(&self) -> OrderingClass {
        let n = self.n_vars();
        let zero = ExpVec::zero(n);
        let mut above = 0;
        let mut below = 0;
        for i in 0..n {
            match self.cmp(&ExpVec::unit(n, i), &zero) {
                CmpOrd::Greater => above += 1,
                CmpOrd::Less => below += 1,
                CmpOrd::Equal => unreachable!("distinct monomials compare equal"),
            }
        }
        let is_global = above == n;
        let is_local = below == n;
        let certificate = if self.forms.iter().all(|l| l.all_nonnegative()) {
            NormalityCertificate::AllFormsNonnegative
        } else if self.forms.iter().all(|l| l.all_nonpositive()) {
            NormalityCertificate::AllFormsNonpositive
        } else if self.shift.iter().all(|d| d.is_zero()) {
            NormalityCertificate::ZeroShift
        } else {
            NormalityCertificate::Unknown
        };
        OrderingClass {
            is_global,
            is_local,
            is_mixed: !is_global && !is_local,
            certificate,
        }
    }
}
