//! Independent reference implementations used to cross-check the engine:
//! a textbook Buchberger algorithm for global semigroup orderings, the
//! classical tangent-cone (ecart) normal form for local semigroup orderings,
//! exhaustive staircase enumeration, the quasihomogeneous spectrum closed
//! form, and a brute-force semigroup decomposition test.
//!
//! None of these share reduction code with the engine.

use crate::arith::{ExpVec, Polynomial, Rat, Term};
use crate::error::{Error, Result};
use crate::orderings::{NewtonOrdering, SemigroupOrdering};
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};

/// Outcome of one oracle comparison; disagreements carry a replayable
/// counterexample description.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub check: String,
    pub inputs_digest: String,
    pub agree: bool,
    pub counterexample: Option<String>,
}

impl OracleReport {
    pub fn new(check: &str, digest_input: &impl std::fmt::Debug, agree: bool, cx: Option<String>) -> Self {
        let mut hasher = DefaultHasher::new();
        format!("{digest_input:?}").hash(&mut hasher);
        OracleReport {
            check: check.to_string(),
            inputs_digest: format!("{:016x}", hasher.finish()),
            agree,
            counterexample: cx,
        }
    }
}

fn lead(o: &SemigroupOrdering, f: &Polynomial) -> Term {
    let (m, c) = f
        .terms()
        .max_by(|(a, _), (b, _)| o.cmp(a, b))
        .expect("nonzero polynomial");
    Term {
        coeff: c.clone(),
        monomial: m.clone(),
    }
}

fn spoly(o: &SemigroupOrdering, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = lead(o, f);
    let lg = lead(o, g);
    let l = lf.monomial.lcm(&lg.monomial);
    let mf = l.checked_sub(&lf.monomial).expect("lcm divisible");
    let mg = l.checked_sub(&lg.monomial).expect("lcm divisible");
    let a = f.mul_term(&(Rat::from_integer(1.into()) / &lf.coeff), &mf);
    let b = g.mul_term(&(Rat::from_integer(1.into()) / &lg.coeff), &mg);
    a.try_sub(&b).expect("same variable count")
}

/// Plain lead-reduction against a list; terminates for global orderings.
fn reduce_global(
    o: &SemigroupOrdering,
    mut h: Polynomial,
    basis: &[Polynomial],
    steps: &mut u64,
    budget: u64,
) -> Result<Polynomial> {
    'outer: loop {
        if h.is_zero() {
            return Ok(h);
        }
        let lh = lead(o, &h);
        for g in basis {
            let lg = lead(o, g);
            if let Some(q) = lh.monomial.checked_sub(&lg.monomial) {
                *steps += 1;
                if *steps > budget {
                    return Err(Error::BudgetExceeded {
                        what: "global division".into(),
                    });
                }
                let factor = &lh.coeff / &lg.coeff;
                h = h
                    .try_sub(&g.mul_term(&factor, &q))
                    .expect("same variable count");
                continue 'outer;
            }
        }
        return Ok(h);
    }
}

/// Textbook Buchberger algorithm for a global semigroup ordering.
pub fn classical_groebner(
    gens: &[Polynomial],
    o: &SemigroupOrdering,
    budget: u64,
) -> Result<Vec<Polynomial>> {
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    let n = nonzero[0].n_vars();
    if !o.is_global(n) {
        return Err(Error::WrongOrderingKind {
            needed: "global semigroup",
        });
    }
    let mut basis = nonzero;
    let mut steps = 0u64;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let s = spoly(o, &basis[i], &basis[j]);
        if s.is_zero() {
            continue;
        }
        let r = reduce_global(o, s, &basis, &mut steps, budget)?;
        if !r.is_zero() {
            let lc = lead(o, &r).coeff;
            let monic = r.scale(&(Rat::from_integer(1.into()) / lc));
            basis.push(monic);
            let new = basis.len() - 1;
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }
    Ok(basis)
}

fn ecart(o: &SemigroupOrdering, f: &Polynomial) -> u64 {
    let deg = f.total_degree().expect("nonzero");
    deg - lead(o, f).monomial.degree()
}

/// Tangent-cone normal form: reduction with minimal-ecart selection; the
/// current remainder joins the reducer list whenever its ecart is exceeded.
fn reduce_mora(
    o: &SemigroupOrdering,
    mut h: Polynomial,
    basis: &[Polynomial],
    steps: &mut u64,
    budget: u64,
) -> Result<Polynomial> {
    let mut reducers: Vec<Polynomial> = basis.to_vec();
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        let lh = lead(o, &h);
        let candidate = reducers
            .iter()
            .filter(|g| lead(o, g).monomial.divides(&lh.monomial))
            .min_by_key(|g| ecart(o, g))
            .cloned();
        let Some(g) = candidate else {
            return Ok(h);
        };
        *steps += 1;
        if *steps > budget {
            return Err(Error::BudgetExceeded {
                what: "tangent-cone division".into(),
            });
        }
        if ecart(o, &g) > ecart(o, &h) {
            reducers.push(h.clone());
        }
        let lg = lead(o, &g);
        let q = lh.monomial.checked_sub(&lg.monomial).expect("divides");
        let factor = &lh.coeff / &lg.coeff;
        h = h
            .try_sub(&g.mul_term(&factor, &q))
            .expect("same variable count");
    }
}

/// Buchberger loop driven by the tangent-cone normal form; valid for local
/// semigroup orderings.
pub fn mora_basis(
    gens: &[Polynomial],
    o: &SemigroupOrdering,
    budget: u64,
) -> Result<Vec<Polynomial>> {
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    let n = nonzero[0].n_vars();
    if !o.is_local(n) {
        return Err(Error::WrongOrderingKind {
            needed: "local semigroup",
        });
    }
    let mut basis = nonzero;
    let mut steps = 0u64;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let s = spoly(o, &basis[i], &basis[j]);
        if s.is_zero() {
            continue;
        }
        let r = reduce_mora(o, s, &basis, &mut steps, budget)?;
        if !r.is_zero() {
            let lc = lead(o, &r).coeff;
            basis.push(r.scale(&(Rat::from_integer(1.into()) / lc)));
            let new = basis.len() - 1;
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }
    Ok(basis)
}

/// Exhaustive staircase scan: monomials of degree at most `bound` outside
/// the lead-monomial set of `basis`. Errors if a non-member sits on the
/// boundary shell, since the staircase may then extend past the bound.
pub fn staircase_enumerate(
    basis: &[Polynomial],
    o: &NewtonOrdering,
    bound: u32,
) -> Result<Vec<ExpVec>> {
    let n = o.n_vars();
    let mut out: Vec<ExpVec> = Vec::new();
    let mut open = false;
    let mut handle = |m: &ExpVec| {
        if !crate::engine::lm_set_member(basis, o, m) {
            if m.degree() == bound as u64 {
                open = true;
            }
            out.push(m.clone());
        }
    };
    crate::cones::for_each_up_to_degree(n, bound, &mut handle);
    if open {
        return Err(Error::BudgetExceeded {
            what: "staircase not closed at the requested bound".into(),
        });
    }
    Ok(out)
}

/// Quasihomogeneous spectrum closed form: the multiset
/// `{ sum_i w_i (a_i + 1) | a in staircase }`, sorted.
pub fn qh_spectrum(weights: &[Rat], staircase: &[ExpVec]) -> Vec<Rat> {
    let mut out: Vec<Rat> = staircase
        .iter()
        .map(|m| {
            weights
                .iter()
                .zip(&m.0)
                .map(|(w, &e)| w * crate::arith::rat(e as i64 + 1))
                .sum()
        })
        .collect();
    out.sort();
    out
}

/// Brute-force test that `p` is a nonnegative integer combination of `gens`,
/// by depth-first search over residual vectors with memoisation.
pub fn decomposes_over(p: &ExpVec, gens: &[ExpVec]) -> bool {
    fn rec(p: &ExpVec, gens: &[ExpVec], memo: &mut HashMap<ExpVec, bool>) -> bool {
        if p.is_zero() {
            return true;
        }
        if let Some(&hit) = memo.get(p) {
            return hit;
        }
        let ok = gens.iter().any(|g| {
            !g.is_zero()
                && p.checked_sub(g)
                    .map(|rest| rec(&rest, gens, memo))
                    .unwrap_or(false)
        });
        memo.insert(p.clone(), ok);
        ok
    }
    rec(p, gens, &mut HashMap::new())
}

/// Minimal generators of the monomial ideal spanned by the lead monomials of
/// a basis under a semigroup ordering; canonical for comparing lead sets.
pub fn minimal_lead_generators(basis: &[Polynomial], o: &SemigroupOrdering) -> Vec<ExpVec> {
    let leads: Vec<ExpVec> = basis.iter().map(|g| lead(o, g).monomial).collect();
    crate::arith::minimal_monomial_generators(&leads)
}

/// Compares two bases' lead-monomial ideals under a semigroup ordering.
pub fn lead_set_report(
    check: &str,
    engine_basis: &[Polynomial],
    oracle_basis: &[Polynomial],
    o: &SemigroupOrdering,
) -> OracleReport {
    let a = minimal_lead_generators(engine_basis, o);
    let b = minimal_lead_generators(oracle_basis, o);
    let agree = a == b;
    let cx = if agree {
        None
    } else {
        Some(format!("engine leads {a:?} vs oracle leads {b:?}"))
    };
    OracleReport::new(check, &(engine_basis, oracle_basis), agree, cx)
}

/// Multiset of Newton weights of a staircase; the Poincare-series data.
pub fn weight_multiset(o: &NewtonOrdering, staircase: &[ExpVec]) -> BTreeMap<Rat, u64> {
    let mut out: BTreeMap<Rat, u64> = BTreeMap::new();
    for m in staircase {
        *out.entry(o.weight(m)).or_insert(0) += 1;
    }
    out
}
