//! Milnor numbers and singularity spectra of isolated hypersurface
//! singularities with nondegenerate principal part.
//!
//! The spectrum is computed as the multiset of Newton weights of the
//! staircase monomials of the Jacobian ideal under the ordering induced by
//! the Newton polyhedron (all-ones shift). The default pipeline computes a
//! standard basis for a semigroup ordering and converts it; the direct
//! pipeline runs the completion loop under the Newton ordering itself.

use crate::arith::{rat, ExpVec, Polynomial, Rat};
use crate::convert::{self, standard_basis_change};
use crate::engine::{standard_basis, BasisCandidate, EngineBudget, LeadMonomialSet};
use crate::error::{Error, Result};
use crate::orderings::{NewtonOrdering, SemigroupOrdering};
use crate::polytope::{
    convenientize, is_convenient, newton_polyhedron, nondegenerate, ordering_from_polyhedron,
    Nondegeneracy,
};
use num_traits::One;
use std::collections::BTreeMap;

/// Formal partial derivatives of a polynomial.
#[derive(Clone, Debug)]
pub struct JacobianIdeal {
    pub partials: Vec<Polynomial>,
}

/// Exact partials; errors on constant input.
pub fn jacobian(f: &Polynomial) -> Result<JacobianIdeal> {
    let nonconstant = f.support().any(|m| !m.is_zero());
    if !nonconstant {
        return Err(Error::InvalidGerm {
            reason: "constant polynomial".into(),
        });
    }
    Ok(JacobianIdeal {
        partials: (0..f.n_vars()).map(|i| f.derivative(i)).collect(),
    })
}

/// Spectrum of an isolated singularity: sorted spectral numbers with
/// multiplicities, the Milnor number and the geometric genus.
#[derive(Clone, Debug)]
pub struct SpectrumResult {
    pub entries: Vec<(Rat, u64)>,
    pub milnor: u64,
    pub geometric_genus: u64,
    pub ordering_used: NewtonOrdering,
    pub nondegenerate: Nondegeneracy,
    /// Set when pure powers had to be added to make the support convenient.
    pub convenientized: bool,
    /// Whether the multiset is symmetric about `n/2` shifted by 1; reported
    /// as a diagnostic, not enforced.
    pub symmetric: bool,
}

#[derive(Clone, Debug)]
pub struct SpectrumOptions {
    /// Run the completion loop directly under the Newton ordering instead of
    /// converting a semigroup-ordering basis.
    pub direct: bool,
    /// Skip the nondegeneracy check; the result is marked indeterminate.
    pub assume_nondegenerate: bool,
    pub budget: EngineBudget,
    /// Reduction-step cap per compact face in the nondegeneracy test.
    pub face_budget: u64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            direct: false,
            assume_nondegenerate: false,
            budget: EngineBudget::default(),
            face_budget: 2_000_000,
        }
    }
}

fn local_semigroup(n: usize) -> NewtonOrdering {
    NewtonOrdering::from_semigroup(&SemigroupOrdering::NegDegRevLex, n)
        .expect("degrevlex-local embeds")
}

fn jacobian_candidate(f: &Polynomial, o: &NewtonOrdering) -> Result<BasisCandidate> {
    let jac = jacobian(f)?;
    let nonzero: Vec<Polynomial> = jac
        .partials
        .into_iter()
        .filter(|p| !p.is_zero())
        .collect();
    if nonzero.len() < f.n_vars() {
        // a vanishing partial means f misses a variable entirely
        return Err(Error::NotZeroDimensional);
    }
    BasisCandidate::new(nonzero, o.clone())
}

/// Milnor number: the number of monomials outside the lead set of the
/// Jacobian ideal under any certified local ordering.
pub fn milnor_number(f: &Polynomial, o: &NewtonOrdering, budget: &EngineBudget) -> Result<u64> {
    if !o.classify().is_local {
        return Err(Error::WrongOrderingKind { needed: "local" });
    }
    let candidate = jacobian_candidate(f, o)?;
    let basis = standard_basis(&candidate, budget)?;
    let staircase = convert::staircase_complement(&basis.polys, o, budget)?;
    Ok(staircase.len() as u64)
}

/// Coefficient of `t^s` in the Poincare series of the graded quotient:
/// the number of staircase monomials of Newton weight exactly `s`.
pub fn poincare_coefficient(
    o: &NewtonOrdering,
    lead_set: &LeadMonomialSet,
    s: &Rat,
    budget: &EngineBudget,
) -> Result<u64> {
    let staircase =
        convert::staircase_complement(&lead_set.generators.polys, o, budget)?;
    Ok(staircase.iter().filter(|m| o.weight(m) == *s).count() as u64)
}

fn weight_multiset(o: &NewtonOrdering, staircase: &[ExpVec]) -> Vec<(Rat, u64)> {
    let mut map: BTreeMap<Rat, u64> = BTreeMap::new();
    for m in staircase {
        *map.entry(o.weight(m)).or_insert(0) += 1;
    }
    map.into_iter().collect()
}

fn is_symmetric(entries: &[(Rat, u64)], n_vars: usize) -> bool {
    let n = rat(n_vars as i64);
    entries.iter().all(|(s, c)| {
        let mirror = &n - s;
        entries
            .iter()
            .any(|(s2, c2)| *s2 == mirror && c2 == c)
    })
}

/// Multiplicity count of spectral numbers at most 1 (surface convention).
pub fn geometric_genus(s: &SpectrumResult) -> u64 {
    let one = Rat::one();
    s.entries
        .iter()
        .filter(|(v, _)| *v <= one)
        .map(|(_, c)| *c)
        .sum()
}

/// Computes the spectrum of an isolated hypersurface singularity at the
/// origin. Non-convenient inputs are made convenient first (the Milnor
/// number bounds the determinacy); the principal part is verified
/// nondegenerate unless explicitly assumed.
pub fn spectrum(f: &Polynomial, opts: &SpectrumOptions) -> Result<SpectrumResult> {
    let n = f.n_vars();
    if f.is_zero() || f.support().all(|m| m.is_zero()) {
        return Err(Error::InvalidGerm {
            reason: "constant polynomial".into(),
        });
    }
    if f.support().any(|m| m.is_zero()) {
        return Err(Error::InvalidGerm {
            reason: "nonzero value at the origin".into(),
        });
    }
    if f.support().any(|m| m.degree() == 1) {
        return Err(Error::InvalidGerm {
            reason: "the origin is not a critical point".into(),
        });
    }
    let local = local_semigroup(n);
    let mu = milnor_number(f, &local, &opts.budget)?;
    let base = newton_polyhedron(f)?;
    let (working, convenientized_flag) = if is_convenient(&base) {
        (f.clone(), false)
    } else {
        (convenientize(f, mu), true)
    };
    let polyhedron = newton_polyhedron(&working)?;
    let nondeg = if opts.assume_nondegenerate {
        Nondegeneracy::Indeterminate
    } else {
        nondegenerate(&working, &polyhedron, opts.face_budget)
    };
    if nondeg == Nondegeneracy::Degenerate {
        return Err(Error::DegeneratePrincipalPart);
    }
    let newton = ordering_from_polyhedron(&polyhedron)?;
    let staircase: Vec<ExpVec> = if opts.direct {
        let candidate = jacobian_candidate(&working, &newton)?;
        let basis = standard_basis(&candidate, &opts.budget)?;
        convert::staircase_complement(&basis.polys, &newton, &opts.budget)?
    } else {
        let candidate = jacobian_candidate(&working, &local)?;
        let basis = standard_basis(&candidate, &opts.budget)?;
        standard_basis_change(&basis, &newton, &opts.budget)?.staircase
    };
    if staircase.len() as u64 != mu {
        return Err(Error::Internal(format!(
            "staircase size {} disagrees with the Milnor number {}",
            staircase.len(),
            mu
        )));
    }
    let entries = weight_multiset(&newton, &staircase);
    let total: u64 = entries.iter().map(|(_, c)| c).sum();
    if total != mu {
        return Err(Error::Internal(
            "spectrum multiplicities do not sum to the Milnor number".into(),
        ));
    }
    let zero = Rat::from_integer(0.into());
    let n_rat = rat(n as i64);
    if entries
        .iter()
        .any(|(s, _)| *s <= zero || *s >= n_rat)
    {
        return Err(Error::Internal(
            "spectral number outside the open interval (0, n)".into(),
        ));
    }
    let symmetric = is_symmetric(&entries, n);
    let mut result = SpectrumResult {
        entries,
        milnor: mu,
        geometric_genus: 0,
        ordering_used: newton,
        nondegenerate: nondeg,
        convenientized: convenientized_flag,
        symmetric,
    };
    result.geometric_genus = geometric_genus(&result);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn ev(e: &[u32]) -> ExpVec {
        ExpVec::new(e.to_vec())
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(n, terms.iter().map(|(m, c)| (ev(m), rat(*c))))
    }

    #[test]
    fn jacobian_examples() {
        let j = jacobian(&poly(2, &[(&[2, 0], 1), (&[0, 3], 1)])).unwrap();
        assert_eq!(j.partials[0], poly(2, &[(&[1, 0], 2)]));
        assert_eq!(j.partials[1], poly(2, &[(&[0, 2], 3)]));
        let j = jacobian(&poly(2, &[(&[2, 0], 1), (&[0, 2], 1)])).unwrap();
        assert_eq!(j.partials[0], poly(2, &[(&[1, 0], 2)]));
        assert_eq!(j.partials[1], poly(2, &[(&[0, 1], 2)]));
        assert!(jacobian(&poly(2, &[(&[0, 0], 5)])).is_err());
    }

    #[test]
    fn milnor_examples() {
        let budget = EngineBudget::default();
        let o = local_semigroup(2);
        assert_eq!(
            milnor_number(&poly(2, &[(&[2, 0], 1), (&[0, 2], 1)]), &o, &budget).unwrap(),
            1
        );
        assert_eq!(
            milnor_number(&poly(2, &[(&[2, 0], 1), (&[0, 3], 1)]), &o, &budget).unwrap(),
            2
        );
        // non-isolated: x^2 y^2 has a singular locus through the origin
        assert!(milnor_number(&poly(2, &[(&[2, 2], 1)]), &o, &budget).is_err());
    }

    #[test]
    fn morse_spectrum() {
        let s = spectrum(
            &poly(2, &[(&[2, 0], 1), (&[0, 2], 1)]),
            &SpectrumOptions::default(),
        )
        .unwrap();
        assert_eq!(s.milnor, 1);
        assert_eq!(s.entries, vec![(rat(1), 1)]);
        assert_eq!(s.geometric_genus, 1);
        assert_eq!(s.nondegenerate, Nondegeneracy::Nondegenerate);
        assert!(s.symmetric);
    }

    #[test]
    fn cusp_spectrum_both_paths() {
        let f = poly(2, &[(&[2, 0], 1), (&[0, 3], 1)]);
        let converted = spectrum(&f, &SpectrumOptions::default()).unwrap();
        assert_eq!(converted.milnor, 2);
        assert_eq!(
            converted.entries,
            vec![(ratio(5, 6), 1), (ratio(7, 6), 1)]
        );
        assert_eq!(converted.geometric_genus, 1);
        let direct = spectrum(
            &f,
            &SpectrumOptions {
                direct: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(direct.entries, converted.entries);
    }

    #[test]
    fn poincare_coefficient_examples() {
        let budget = EngineBudget::default();
        let f = poly(2, &[(&[2, 0], 1), (&[0, 3], 1)]);
        let newton = ordering_from_polyhedron(&newton_polyhedron(&f).unwrap()).unwrap();
        let candidate = jacobian_candidate(&f, &newton).unwrap();
        let basis = standard_basis(&candidate, &budget).unwrap();
        let lead_set = LeadMonomialSet::new(&basis);
        // below the minimal weight
        assert_eq!(
            poincare_coefficient(&newton, &lead_set, &ratio(1, 6), &budget).unwrap(),
            0
        );
        assert_eq!(
            poincare_coefficient(&newton, &lead_set, &ratio(5, 6), &budget).unwrap(),
            1
        );
        assert_eq!(
            poincare_coefficient(&newton, &lead_set, &ratio(7, 6), &budget).unwrap(),
            1
        );
    }

    #[test]
    fn degenerate_input_is_rejected() {
        // (x + y)^2 + x^3 has a degenerate edge truncation
        let f = poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1), (&[3, 0], 1)]);
        match spectrum(&f, &SpectrumOptions::default()) {
            Err(Error::DegeneratePrincipalPart) => {}
            other => panic!("expected a degeneracy error, got {other:?}"),
        }
        // with the check skipped the result is marked indeterminate
        // (the staircase data itself is still computed exactly)
        let skipped = spectrum(
            &f,
            &SpectrumOptions {
                assume_nondegenerate: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(skipped.nondegenerate, Nondegeneracy::Indeterminate);
    }

    #[test]
    fn non_convenient_input_is_convenientized() {
        // x^2 y + y^3 (D4): mu = 4, spectrum {2/3, 1, 1, 4/3}
        let f = poly(2, &[(&[2, 1], 1), (&[0, 3], 1)]);
        let s = spectrum(&f, &SpectrumOptions::default()).unwrap();
        assert!(s.convenientized);
        assert_eq!(s.milnor, 4);
        assert_eq!(
            s.entries,
            vec![(ratio(2, 3), 1), (rat(1), 2), (ratio(4, 3), 1)]
        );
    }

    #[test]
    fn spectrum_is_permutation_equivariant() {
        let f = poly(2, &[(&[2, 0], 1), (&[0, 3], 1)]);
        let swapped = poly(2, &[(&[0, 2], 1), (&[3, 0], 1)]);
        let a = spectrum(&f, &SpectrumOptions::default()).unwrap();
        let b = spectrum(&swapped, &SpectrumOptions::default()).unwrap();
        assert_eq!(a.entries, b.entries);
    }

    #[test]
    fn invalid_germs_are_rejected() {
        assert!(spectrum(&poly(2, &[(&[0, 0], 1), (&[2, 0], 1)]), &SpectrumOptions::default())
            .is_err());
        assert!(spectrum(&poly(2, &[(&[1, 0], 1), (&[0, 2], 1)]), &SpectrumOptions::default())
            .is_err());
    }
}
