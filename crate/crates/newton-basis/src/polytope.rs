//! Newton polyhedron of a polynomial: the convex hull of the translated
//! positive orthants over its support, its compact facets with exact
//! normalised facet forms, convenience checking, the induced Newton ordering,
//! and the nondegeneracy test for the principal part.

use crate::arith::{rat, ExpVec, Polynomial, Rat};
use crate::error::{Error, Result};
use crate::orderings::{LinearForm, NewtonOrdering, SemigroupOrdering};
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// Compact facet: the unique linear form with value 1 on the facet, and the
/// support points lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub form: LinearForm,
    pub face_points: Vec<ExpVec>,
}

#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    pub n_vars: usize,
    pub support: Vec<ExpVec>,
    pub compact_facets: Vec<Facet>,
}

/// Per-facet truncations of a polynomial, aligned with `compact_facets`.
#[derive(Clone, Debug)]
pub struct PrincipalPart {
    pub facet_polynomials: Vec<Polynomial>,
}

/// Outcome of the principal part test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nondegeneracy {
    Nondegenerate,
    Degenerate,
    /// A face check ran out of budget; never silently treated as nondegenerate.
    Indeterminate,
}

/// Rank of a small rational matrix.
fn rank(mut rows: Vec<Vec<Rat>>, n_cols: usize) -> usize {
    let mut r = 0;
    for col in 0..n_cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for j in col..n_cols {
            rows[r][j] = &rows[r][j] * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..n_cols {
                    rows[i][j] = &rows[i][j] - &(&f * &rows[r][j]);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solves `points . l = 1` for `l`; `None` if the points are linearly
/// dependent as vectors (no unique hyperplane avoiding the origin).
fn hyperplane_through(points: &[&ExpVec], n: usize) -> Option<Vec<Rat>> {
    let a: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| p.0.iter().map(|&e| rat(e as i64)).collect())
        .collect();
    let b = vec![Rat::one(); n];
    crate::cones::solve_square(a, b)
}

/// Compact facets of the convex hull of `union of (a + R_{>=0}^n)` over the
/// support. Every compact facet is spanned by `n` affinely independent
/// support points, so candidate hyperplanes are exhausted by `n`-subsets of
/// the support; a candidate form is kept when it is strictly positive, all
/// support points lie on or above value 1, and the points at value 1 span a
/// hyperplane.
pub fn newton_polyhedron(f: &Polynomial) -> Result<NewtonPolyhedron> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.n_vars();
    let support: Vec<ExpVec> = f.support().cloned().collect();
    let mut facets: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let m = support.len();
    if m >= n {
        let mut subset: Vec<usize> = (0..n).collect();
        loop {
            let pts: Vec<&ExpVec> = subset.iter().map(|&i| &support[i]).collect();
            if let Some(l) = hyperplane_through(&pts, n) {
                if l.iter().all(|c| c > &Rat::zero()) {
                    let values: Vec<Rat> = support
                        .iter()
                        .map(|q| l.iter().zip(&q.0).map(|(c, &e)| c * rat(e as i64)).sum())
                        .collect();
                    if values.iter().all(|v| *v >= Rat::one()) {
                        let on_face: Vec<&ExpVec> = support
                            .iter()
                            .zip(&values)
                            .filter(|(_, v)| **v == Rat::one())
                            .map(|(q, _)| q)
                            .collect();
                        let base = on_face[0];
                        let diffs: Vec<Vec<Rat>> = on_face[1..]
                            .iter()
                            .map(|q| {
                                q.0.iter()
                                    .zip(&base.0)
                                    .map(|(&a, &b)| rat(a as i64) - rat(b as i64))
                                    .collect()
                            })
                            .collect();
                        if rank(diffs, n) == n - 1 {
                            facets.insert(l);
                        }
                    }
                }
            }
            let mut i = n;
            let mut done = false;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                if subset[i] != i + m - n {
                    subset[i] += 1;
                    for j in i + 1..n {
                        subset[j] = subset[j - 1] + 1;
                    }
                    break;
                }
            }
            if done {
                break;
            }
        }
    }
    let compact_facets: Vec<Facet> = facets
        .into_iter()
        .map(|l| {
            let form = LinearForm::new(l).expect("facet form is nonzero");
            let face_points: Vec<ExpVec> = support
                .iter()
                .filter(|q| form.eval(q) == Rat::one())
                .cloned()
                .collect();
            Facet { form, face_points }
        })
        .collect();
    Ok(NewtonPolyhedron {
        n_vars: n,
        support,
        compact_facets,
    })
}

/// True iff the support contains a pure power of every variable.
pub fn is_convenient(p: &NewtonPolyhedron) -> bool {
    (0..p.n_vars).all(|i| {
        p.support.iter().any(|m| {
            m.get(i) >= 1 && (0..p.n_vars).all(|j| j == i || m.get(j) == 0)
        })
    })
}

/// Adds `x_i^(mu_bound + 2)` for every axis the support misses. The exponent
/// exceeds the determinacy bound `mu + 1`, so the analytic type of an
/// isolated singularity with Milnor number at most `mu_bound` is unchanged.
pub fn convenientize(f: &Polynomial, mu_bound: u64) -> Polynomial {
    let n = f.n_vars();
    let mut out = f.clone();
    for i in 0..n {
        let has_axis_power = f
            .support()
            .any(|m| m.get(i) >= 1 && (0..n).all(|j| j == i || m.get(j) == 0));
        if !has_axis_power {
            let mut e = ExpVec::zero(n);
            e.0[i] = (mu_bound + 2) as u32;
            out = out
                .try_add(&Polynomial::term(n, e, Rat::one()))
                .expect("same variable count");
        }
    }
    out
}

/// Per-facet truncations `f_sigma`.
pub fn principal_part(f: &Polynomial, p: &NewtonPolyhedron) -> PrincipalPart {
    let facet_polynomials = p
        .compact_facets
        .iter()
        .map(|facet| {
            Polynomial::from_terms(
                f.n_vars(),
                f.terms()
                    .filter(|(m, _)| facet.face_points.contains(m))
                    .map(|(m, c)| (m.clone(), c.clone())),
            )
        })
        .collect();
    PrincipalPart { facet_polynomials }
}

/// Support sets of all compact faces of the polyhedron.
///
/// A coordinate section `Gamma ∩ {x_i = 0, i ∉ T}` is a face (the coordinate
/// hyperplanes support the polyhedron), and it equals the Newton polyhedron
/// of the terms supported in `T`. Every compact face lies in a compact facet
/// of one of these sections, and faces of faces are faces, so closing the
/// compact facet supports of all sections under pairwise intersection
/// enumerates exactly the compact faces.
fn compact_face_supports(f: &Polynomial) -> Result<Vec<Vec<ExpVec>>> {
    let n = f.n_vars();
    let mut faces: BTreeSet<Vec<ExpVec>> = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let section = Polynomial::from_terms(
            vars.len(),
            f.terms()
                .filter(|(m, _)| (0..n).all(|j| vars.contains(&j) || m.get(j) == 0))
                .map(|(m, c)| {
                    (
                        ExpVec::new(vars.iter().map(|&j| m.get(j)).collect()),
                        c.clone(),
                    )
                }),
        );
        if section.is_zero() {
            continue;
        }
        let poly = newton_polyhedron(&section)?;
        for facet in &poly.compact_facets {
            let lifted: Vec<ExpVec> = facet
                .face_points
                .iter()
                .map(|q| {
                    let mut full = vec![0u32; n];
                    for (k, &j) in vars.iter().enumerate() {
                        full[j] = q.get(k);
                    }
                    ExpVec::new(full)
                })
                .collect();
            let mut sorted = lifted;
            sorted.sort();
            faces.insert(sorted);
        }
    }
    // close under pairwise intersection
    let mut work: Vec<Vec<ExpVec>> = faces.iter().cloned().collect();
    while let Some(face) = work.pop() {
        let snapshot: Vec<Vec<ExpVec>> = faces.iter().cloned().collect();
        for other in snapshot {
            let inter: Vec<ExpVec> = face
                .iter()
                .filter(|m| other.contains(m))
                .cloned()
                .collect();
            if !inter.is_empty() && !faces.contains(&inter) {
                faces.insert(inter.clone());
                work.push(inter);
            }
        }
    }
    Ok(faces.into_iter().collect())
}

/// Tests whether the partials of every compact-face truncation of `f` are
/// free of common zeros in the torus. Each face is decided by a global
/// Groebner basis of the partials together with `x_1 ... x_n z - 1`;
/// `budget_steps` caps the reduction work per face.
pub fn nondegenerate(f: &Polynomial, p: &NewtonPolyhedron, budget_steps: u64) -> Nondegeneracy {
    let n = f.n_vars();
    debug_assert_eq!(n, p.n_vars);
    let faces = match compact_face_supports(f) {
        Ok(fs) => fs,
        Err(_) => return Nondegeneracy::Indeterminate,
    };
    let mut indeterminate = false;
    for face in faces {
        let f_sigma = Polynomial::from_terms(
            n,
            f.terms()
                .filter(|(m, _)| face.contains(m))
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        if f_sigma.num_terms() <= 1 {
            // a single term c x^a with a != 0 has some partial equal to a
            // nonvanishing monomial on the torus
            continue;
        }
        // ideal (partials, x_1 ... x_n z - 1) in n + 1 variables
        let lift = |q: &Polynomial| {
            Polynomial::from_terms(
                n + 1,
                q.terms().map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.push(0);
                    (ExpVec::new(e), c.clone())
                }),
            )
        };
        let mut gens: Vec<Polynomial> = (0..n)
            .map(|i| f_sigma.derivative(i))
            .filter(|d| !d.is_zero())
            .map(|d| lift(&d))
            .collect();
        let torus = {
            let mut all_ones = vec![1u32; n];
            all_ones.push(1);
            Polynomial::from_terms(
                n + 1,
                [
                    (ExpVec::new(all_ones), Rat::one()),
                    (ExpVec::zero(n + 1), -Rat::one()),
                ],
            )
        };
        gens.push(torus);
        match crate::oracles::classical_groebner(&gens, &SemigroupOrdering::DegRevLex, budget_steps)
        {
            Ok(basis) => {
                let contains_unit = basis
                    .iter()
                    .any(|g| g.num_terms() == 1 && g.support().next().unwrap().is_zero());
                if !contains_unit {
                    return Nondegeneracy::Degenerate;
                }
            }
            Err(_) => {
                indeterminate = true;
            }
        }
    }
    if indeterminate {
        Nondegeneracy::Indeterminate
    } else {
        Nondegeneracy::Nondegenerate
    }
}

/// Newton ordering induced by a convenient polyhedron: the facet forms with
/// shift `(1, ..., 1)` and a degrevlex-local tie-break.
pub fn ordering_from_polyhedron(p: &NewtonPolyhedron) -> Result<NewtonOrdering> {
    if !is_convenient(p) || p.compact_facets.is_empty() {
        return Err(Error::NotConvenient);
    }
    let forms: Vec<LinearForm> = p.compact_facets.iter().map(|f| f.form.clone()).collect();
    NewtonOrdering::new(
        forms,
        vec![Rat::one(); p.n_vars],
        SemigroupOrdering::NegDegRevLex,
    )
}
