//! The standard-basis engine: lead-monomial-set membership, the homogenised
//! normal form, s-polynomial sets, reducing sets and the completion loop.
//!
//! All computations run against a [`NewtonOrdering`]; semigroup orderings
//! enter through their single-form embedding, which unlocks the classical
//! fast paths (lead terms are multiplicative, s-polynomial sets are
//! singletons and reducing sets collapse to `{1}`).

use crate::arith::{ExpVec, HPolynomial, Polynomial, Rat};
use crate::cones;
use crate::error::{Error, Result};
use crate::orderings::NewtonOrdering;
use num_traits::One;
use std::cmp::Ordering as CmpOrd;
use std::collections::BTreeSet;

/// Caps on the completion loop. The reduction-step budget counts individual
/// normal-form subtraction steps across the whole computation.
#[derive(Clone, Copy, Debug)]
pub struct EngineBudget {
    pub max_reduction_steps: u64,
    pub max_pairs: u64,
    pub max_staircase_degree: u32,
}

impl Default for EngineBudget {
    fn default() -> Self {
        EngineBudget {
            max_reduction_steps: 50_000_000,
            max_pairs: 200_000,
            max_staircase_degree: 64,
        }
    }
}

/// Mutable step counter shared across the reductions of one computation.
#[derive(Debug)]
pub struct BudgetTracker {
    used: u64,
    max: u64,
}

impl BudgetTracker {
    pub fn new(max: u64) -> Self {
        BudgetTracker { used: 0, max }
    }

    pub fn step(&mut self, what: &str) -> Result<()> {
        self.used += 1;
        if self.used > self.max {
            return Err(Error::BudgetExceeded { what: what.into() });
        }
        Ok(())
    }
}

/// Finite generating set paired with the ordering it is to be read under.
/// Construction refuses zero polynomials and uncertified orderings.
#[derive(Clone, Debug)]
pub struct BasisCandidate {
    pub polys: Vec<Polynomial>,
    pub ordering: NewtonOrdering,
}

impl BasisCandidate {
    pub fn new(polys: Vec<Polynomial>, ordering: NewtonOrdering) -> Result<Self> {
        if !ordering.classify().certified() {
            return Err(Error::UncertifiedOrdering);
        }
        for p in &polys {
            if p.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if p.n_vars() != ordering.n_vars() {
                return Err(Error::VariableMismatch {
                    left: p.n_vars(),
                    right: ordering.n_vars(),
                });
            }
        }
        Ok(BasisCandidate { polys, ordering })
    }
}

/// Lazily evaluated membership view of `L(G)`.
pub struct LeadMonomialSet<'a> {
    pub generators: &'a BasisCandidate,
}

impl<'a> LeadMonomialSet<'a> {
    pub fn new(generators: &'a BasisCandidate) -> Self {
        LeadMonomialSet { generators }
    }

    pub fn member(&self, m: &ExpVec) -> bool {
        lm_set_member(&self.generators.polys, &self.generators.ordering, m)
    }
}

/// Decides `m in L(G) = { LM(x^b g) }`. Any lead monomial of `x^b g` is
/// `x^b` times a support monomial of `g`, so it suffices to try the support
/// monomials of each `g` dividing `m` and test whether the corresponding
/// shift puts the lead at `m`.
pub fn lm_set_member(polys: &[Polynomial], o: &NewtonOrdering, m: &ExpVec) -> bool {
    lm_set_witness(polys, o, m).is_some()
}

/// As [`lm_set_member`], returning the first `(generator index, multiplier)`
/// with `LM(x^multiplier g) = m`.
pub fn lm_set_witness(
    polys: &[Polynomial],
    o: &NewtonOrdering,
    m: &ExpVec,
) -> Option<(usize, ExpVec)> {
    for (gi, g) in polys.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if o.is_single_form() {
            let lead = o.lead(g).expect("nonzero").monomial;
            if let Some(b) = m.checked_sub(&lead) {
                return Some((gi, b));
            }
            continue;
        }
        for gamma in g.support() {
            let Some(b) = m.checked_sub(gamma) else {
                continue;
            };
            let leads_at_gamma = g
                .support()
                .all(|other| other == gamma || o.cmp(&b.add(other), m) == CmpOrd::Less);
            if leads_at_gamma {
                return Some((gi, b));
            }
        }
    }
    None
}

struct Reducer {
    alpha: u32,
    t_exp: u32,
    x_part: ExpVec,
    term_coeff: Rat,
    from_history: bool,
    index: usize,
}

/// Cheapest reduction of `t^alpha h` by a term multiple of `f`, if any:
/// the candidate with minimal `alpha` among the support monomials of `f`
/// whose shift realises the lead of `h`. History elements additionally
/// require the multiplier's x-part to be at most 1 in the ordering.
fn best_reducer_for(
    f: &HPolynomial,
    lead_mon: &(u32, ExpVec),
    o: &NewtonOrdering,
    from_history: bool,
    index: usize,
) -> Option<Reducer> {
    let (h_t, h_x) = lead_mon;
    let zero = ExpVec::zero(h_x.len());
    let mut best: Option<(u32, u32, ExpVec, Rat)> = None;
    for ((g_t, g_x), coeff) in f.terms() {
        let Some(ex) = h_x.checked_sub(g_x) else {
            continue;
        };
        if from_history && o.cmp(&ex, &zero) == CmpOrd::Greater {
            continue;
        }
        let leads_here = f
            .terms()
            .all(|((_, other), _)| other == g_x || o.cmp(&ex.add(other), h_x) == CmpOrd::Less);
        if !leads_here {
            continue;
        }
        let (alpha, e0) = if *g_t > *h_t {
            (g_t - h_t, 0)
        } else {
            (0, h_t - g_t)
        };
        let better = match &best {
            None => true,
            Some((a, ..)) => alpha < *a,
        };
        if better {
            best = Some((alpha, e0, ex, coeff.clone()));
        }
    }
    best.map(|(alpha, t_exp, x_part, term_coeff)| Reducer {
        alpha,
        t_exp,
        x_part,
        term_coeff,
        from_history,
        index,
    })
}

/// Homogenised normal form.
///
/// Repeatedly rewrites `h := t^alpha h - eta f` where `f` ranges over the
/// basis and the previously stored remainders, `eta` is a term with
/// `LT(eta f) = LT(t^alpha h)`, and `alpha` is minimal over all candidates
/// (ties prefer basis elements over history, each in insertion order).
/// Whenever `alpha > 0` the current remainder is stored before rewriting,
/// and powers of `t` are stripped after every step.
pub fn normal_form(
    p: &HPolynomial,
    basis: &[HPolynomial],
    o: &NewtonOrdering,
    tracker: &mut BudgetTracker,
) -> Result<HPolynomial> {
    debug_assert!(p.is_homogeneous());
    let mut h = p.clone();
    let mut history: Vec<HPolynomial> = Vec::new();
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        let (lead_mon, lead_coeff) = o.lead_h(&h)?;
        let mut best: Option<Reducer> = None;
        for (i, f) in basis.iter().enumerate() {
            if let Some(r) = best_reducer_for(f, &lead_mon, o, false, i) {
                let replace = match &best {
                    None => true,
                    Some(b) => r.alpha < b.alpha,
                };
                if replace {
                    best = Some(r);
                }
            }
        }
        for (i, f) in history.iter().enumerate() {
            if let Some(r) = best_reducer_for(f, &lead_mon, o, true, i) {
                let replace = match &best {
                    None => true,
                    Some(b) => r.alpha < b.alpha,
                };
                if replace {
                    best = Some(r);
                }
            }
        }
        let Some(r) = best else {
            return Ok(h);
        };
        tracker.step("normal form reduction")?;
        let f = if r.from_history {
            &history[r.index]
        } else {
            &basis[r.index]
        };
        let eta_coeff = &lead_coeff / &r.term_coeff;
        let subtrahend = f.mul_hterm(&eta_coeff, r.t_exp, &r.x_part);
        if r.alpha > 0 {
            history.push(h.clone());
        }
        h = h.t_shift(r.alpha).try_sub(&subtrahend)?;
        if !h.is_zero() {
            h = h.strip_t_powers()?;
        }
    }
}

/// The s-polynomial of `f` and `g` at the support pair `(alpha, beta)`:
/// `(d_beta x^beta f - c_alpha x^alpha g) / gcd(x^alpha, x^beta)`.
pub fn spoly_at(
    f: &Polynomial,
    g: &Polynomial,
    alpha: &ExpVec,
    beta: &ExpVec,
) -> Polynomial {
    let c_alpha = f.coeff(alpha).expect("alpha in support of f").clone();
    let d_beta = g.coeff(beta).expect("beta in support of g").clone();
    let gcd = alpha.gcd(beta);
    let left = f.mul_term(&d_beta, &beta.checked_sub(&gcd).expect("gcd divides"));
    let right = g.mul_term(&c_alpha, &alpha.checked_sub(&gcd).expect("gcd divides"));
    left.try_sub(&right).expect("same variable count")
}

/// Searches for a monomial `x^gamma` realising `x^gamma lcm(x^alpha, x^beta)`
/// as the simultaneous lead of `x^gamma x^(beta-gcd) f` and
/// `x^gamma x^(alpha-gcd) g`, up to the given total degree. Such a witness
/// certifies that the pair `(alpha, beta)` belongs to the s-polynomial set.
pub fn spoly_pair_certificate(
    f: &Polynomial,
    g: &Polynomial,
    alpha: &ExpVec,
    beta: &ExpVec,
    o: &NewtonOrdering,
    degree_bound: u32,
) -> Option<ExpVec> {
    let gcd = alpha.gcd(beta);
    let u = beta.checked_sub(&gcd).expect("gcd divides");
    let v = alpha.checked_sub(&gcd).expect("gcd divides");
    let lambda = alpha.add(&u);
    let mut witness: Option<ExpVec> = None;
    let mut check = |gamma: &ExpVec| {
        if witness.is_some() {
            return;
        }
        let target = gamma.add(&lambda);
        let f_ok = f
            .support()
            .all(|a| *a == *alpha || o.cmp(&gamma.add(&u).add(a), &target) == CmpOrd::Less);
        if !f_ok {
            return;
        }
        let g_ok = g
            .support()
            .all(|b| *b == *beta || o.cmp(&gamma.add(&v).add(b), &target) == CmpOrd::Less);
        if g_ok {
            witness = Some(gamma.clone());
        }
    };
    cones::for_each_up_to_degree(f.n_vars(), degree_bound, &mut check);
    witness
}

/// The s-polynomial set of `f` and `g`.
///
/// Candidates run over all support pairs. A pair can only contribute when
/// some form of the ordering attains its minimum over the support of `f` at
/// `alpha` and over the support of `g` at `beta` simultaneously: any witness
/// monomial deep enough in a cone makes the weights linear, so pairs without
/// such a form provably admit no witness and are dropped. Remaining pairs
/// are kept (soundness over minimality), made monic and deduplicated.
pub fn spoly_set(f: &Polynomial, g: &Polynomial, o: &NewtonOrdering) -> Vec<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Vec::new();
    }
    let monic = |s: Polynomial| {
        let lc = o.lead(&s).expect("nonzero").coeff;
        s.scale(&(Rat::one() / lc))
    };
    if o.is_single_form() {
        let a = o.lead(f).expect("nonzero").monomial;
        let b = o.lead(g).expect("nonzero").monomial;
        let s = spoly_at(f, g, &a, &b);
        if s.is_zero() {
            return Vec::new();
        }
        return vec![monic(s)];
    }
    let supp_f: Vec<&ExpVec> = f.support().collect();
    let supp_g: Vec<&ExpVec> = g.support().collect();
    // per-form argmin index sets over each support
    let argmins = |supp: &[&ExpVec]| -> Vec<Vec<usize>> {
        o.forms()
            .iter()
            .map(|l| {
                let values: Vec<Rat> = supp.iter().map(|m| l.eval(m)).collect();
                let min = values.iter().min().cloned().expect("nonempty support");
                values
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v == min)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    };
    let arg_f = argmins(&supp_f);
    let arg_g = argmins(&supp_g);
    let mut out: BTreeSet<Polynomial> = BTreeSet::new();
    for (ai, alpha) in supp_f.iter().enumerate() {
        for (bi, beta) in supp_g.iter().enumerate() {
            let feasible = (0..o.forms().len())
                .any(|li| arg_f[li].contains(&ai) && arg_g[li].contains(&bi));
            if !feasible {
                continue;
            }
            let s = spoly_at(f, g, alpha, beta);
            if s.is_zero() {
                continue;
            }
            out.insert(monic(s));
        }
    }
    out.into_iter().collect()
}

/// Reducing set for `(f, basis)`: monomial multipliers whose normal forms
/// certify reduction of all monomial multiples of `f`.
///
/// For each form `l`, the lead monomials of `f` inside the shifted cone of
/// `l` span a finitely generated module over the cone semigroup; every
/// module generator `x^b` is realised as `LM(x^w f)` for a witness `w`, and
/// the union of the witnesses over all forms is the reducing set. Semigroup
/// (single-form) orderings always yield `{1}`.
pub fn reducing_set(
    f: &HPolynomial,
    _basis: &[HPolynomial],
    o: &NewtonOrdering,
) -> Vec<ExpVec> {
    let phi = f.dehomogenize();
    assert!(!phi.is_zero(), "reducing set of the zero polynomial");
    let n = o.n_vars();
    if o.is_single_form() {
        return vec![ExpVec::zero(n)];
    }
    let mut out: BTreeSet<ExpVec> = BTreeSet::new();
    for idx in 0..o.forms().len() {
        for (generator, lead_pos) in cones::restricted_module_generators(o, idx, &phi) {
            let witness = generator
                .checked_sub(&lead_pos)
                .expect("generator extends its lead position");
            out.insert(witness);
        }
    }
    out.into_iter().collect()
}

/// Working state of the completion loop: homogenised polynomials plus the
/// queue of unprocessed index pairs.
#[derive(Debug)]
pub struct HBasisState {
    pub polys: Vec<HPolynomial>,
    pub pair_queue: Vec<(usize, usize)>,
}

fn pair_key(state: &HBasisState, o: &NewtonOrdering, pair: (usize, usize)) -> u64 {
    let (a, _) = o.lead_h(&state.polys[pair.0]).expect("nonzero");
    let (b, _) = o.lead_h(&state.polys[pair.1]).expect("nonzero");
    let t = a.0.max(b.0) as u64;
    t + a.1.lcm(&b.1).degree()
}

/// Completion to a standard basis: enlarges `G` until all reducing-set
/// multiples of all s-polynomials reduce to zero, then interreduces.
///
/// Pairs (including self-pairs) are processed by increasing total degree of
/// the lcm of the homogenised lead terms, with a first-in tie-break. Nonzero
/// normal forms are stripped of `t`, dehomogenised, made monic and appended.
pub fn standard_basis(g: &BasisCandidate, budget: &EngineBudget) -> Result<BasisCandidate> {
    let o = &g.ordering;
    let mut polys: Vec<Polynomial> = g.polys.clone();
    let mut state = HBasisState {
        polys: polys
            .iter()
            .map(HPolynomial::homogenize)
            .collect::<Result<_>>()?,
        pair_queue: Vec::new(),
    };
    for i in 0..polys.len() {
        for j in i..polys.len() {
            state.pair_queue.push((i, j));
        }
    }
    let mut tracker = BudgetTracker::new(budget.max_reduction_steps);
    let mut processed: u64 = 0;
    while !state.pair_queue.is_empty() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExceeded {
                what: "pair queue processing".into(),
            });
        }
        let mut best = 0;
        let mut best_key = pair_key(&state, o, state.pair_queue[0]);
        for (idx, pair) in state.pair_queue.iter().enumerate().skip(1) {
            let key = pair_key(&state, o, *pair);
            if key < best_key {
                best = idx;
                best_key = key;
            }
        }
        let (i, j) = state.pair_queue.remove(best);
        for s in spoly_set(&polys[i], &polys[j], o) {
            let s_h = HPolynomial::homogenize(&s)?;
            for multiplier in reducing_set(&s_h, &state.polys, o) {
                let input = s_h.mul_hterm(&Rat::one(), 0, &multiplier);
                let reduced = normal_form(&input, &state.polys, o, &mut tracker)?;
                if reduced.is_zero() {
                    continue;
                }
                let q = reduced.dehomogenize();
                let lc = o.lead(&q)?.coeff;
                let q = q.scale(&(Rat::one() / lc));
                let q_h = HPolynomial::homogenize(&q)?;
                polys.push(q);
                state.polys.push(q_h);
                let new = polys.len() - 1;
                for k in 0..=new {
                    state.pair_queue.push((k, new));
                }
            }
        }
    }
    let completed = BasisCandidate::new(polys, o.clone())?;
    interreduce(&completed)
}

/// Deletes members whose lead-monomial set is contained in the lead set of
/// the rest. Containment is decided exactly: the lead set of a single
/// polynomial is generated, cone by cone, by finitely many monomials, and
/// cone closure makes membership of the generators sufficient.
pub fn interreduce(g: &BasisCandidate) -> Result<BasisCandidate> {
    let o = &g.ordering;
    let mut polys = g.polys.clone();
    'restart: loop {
        for idx in (0..polys.len()).rev() {
            if polys.len() == 1 {
                break;
            }
            let f = &polys[idx];
            let lead_generators: Vec<ExpVec> = if o.is_single_form() {
                vec![o.lead(f)?.monomial]
            } else {
                let mut gens: BTreeSet<ExpVec> = BTreeSet::new();
                for form_idx in 0..o.forms().len() {
                    for (generator, _) in cones::restricted_module_generators(o, form_idx, f) {
                        gens.insert(generator);
                    }
                }
                gens.into_iter().collect()
            };
            let rest: Vec<Polynomial> = polys
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, p)| p.clone())
                .collect();
            if lead_generators
                .iter()
                .all(|m| lm_set_member(&rest, o, m))
            {
                polys.remove(idx);
                continue 'restart;
            }
        }
        break;
    }
    BasisCandidate::new(polys, o.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::orderings::{LinearForm, SemigroupOrdering};

    fn ev(e: &[u32]) -> ExpVec {
        ExpVec::new(e.to_vec())
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(n, terms.iter().map(|(m, c)| (ev(m), rat(*c))))
    }

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::new(c.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    fn figure_one_ordering() -> NewtonOrdering {
        NewtonOrdering::new(
            vec![form(&[1, 2]), form(&[2, 1])],
            vec![rat(0), rat(0)],
            SemigroupOrdering::NegDegRevLex,
        )
        .unwrap()
    }

    fn ds(n: usize) -> NewtonOrdering {
        NewtonOrdering::from_semigroup(&SemigroupOrdering::NegDegRevLex, n).unwrap()
    }

    #[test]
    fn lm_set_membership_examples() {
        let o = figure_one_ordering();
        let g = vec![poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])]; // x + y
        // x^3 = LM(x^2 (x+y))
        assert!(lm_set_member(&g, &o, &ev(&[3, 0])));
        // x^2 y = LM(x y (x+y)): the weights of x^2 y and x y^2 tie at 4 and
        // the degrevlex-local tie-break picks x^2 y (brute-force check below)
        assert!(lm_set_member(&g, &o, &ev(&[2, 1])));
        let xyf = g[0].mul_monomial(&ev(&[1, 1]));
        assert_eq!(o.lead(&xyf).unwrap().monomial, ev(&[2, 1]));
        // monomial generator: x^k y^j is a lead multiple of x iff k >= 1
        let gm = vec![poly(2, &[(&[1, 0], 1)])];
        let local = ds(2);
        assert!(lm_set_member(&gm, &local, &ev(&[3, 2])));
        assert!(!lm_set_member(&gm, &local, &ev(&[0, 4])));
    }

    #[test]
    fn normal_form_examples() {
        let o = ds(2);
        let mut tracker = BudgetTracker::new(10_000);
        // self reduction
        let f = poly(2, &[(&[2, 0], 1), (&[0, 3], 1)]);
        let fh = HPolynomial::homogenize(&f).unwrap();
        let nf = normal_form(&fh, &[fh.clone()], &o, &mut tracker).unwrap();
        assert!(nf.is_zero());
        // x against x - x^2: zero in the local ring
        let o1 = ds(1);
        let g = poly(1, &[(&[1], 1), (&[2], -1)]);
        let gh = HPolynomial::homogenize(&g).unwrap();
        let xh = HPolynomial::homogenize(&poly(1, &[(&[1], 1)])).unwrap();
        let nf = normal_form(&xh, &[gh], &o1, &mut tracker).unwrap();
        assert!(nf.is_zero());
        // monomial ideal reduction
        let basis = vec![
            HPolynomial::homogenize(&poly(2, &[(&[1, 0], 1)])).unwrap(),
            HPolynomial::homogenize(&poly(2, &[(&[0, 1], 1)])).unwrap(),
        ];
        let p = HPolynomial::homogenize(&poly(2, &[(&[2, 1], 1), (&[1, 0], 1)])).unwrap();
        let nf = normal_form(&p, &basis, &o, &mut tracker).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn normal_form_contract_on_nonzero_results() {
        let o = ds(2);
        let mut tracker = BudgetTracker::new(10_000);
        // x + y^3 against x + y^2: the remainder's lead must avoid L(G)
        let g = poly(2, &[(&[1, 0], 1), (&[0, 2], 1)]);
        let basis = vec![HPolynomial::homogenize(&g).unwrap()];
        let p = HPolynomial::homogenize(&poly(2, &[(&[1, 0], 1), (&[0, 3], 1)])).unwrap();
        let nf = normal_form(&p, &basis, &o, &mut tracker).unwrap();
        assert!(!nf.is_zero());
        let lead = o.lead(&nf.dehomogenize()).unwrap().monomial;
        assert!(!lm_set_member(&[g], &o, &lead));
    }

    #[test]
    fn spoly_set_examples() {
        // single form: the classical s-polynomial, a singleton
        let o = ds(2);
        let f = poly(2, &[(&[2, 0], 1), (&[0, 1], 1)]);
        let g = poly(2, &[(&[1, 1], 1), (&[0, 3], 1)]);
        let s = spoly_set(&f, &g, &o);
        assert_eq!(s.len(), 1);
        // identical single terms cancel
        let t = poly(2, &[(&[2, 1], 3)]);
        assert!(spoly_set(&t, &t, &o).is_empty());
        // figure-one ordering, f = g = x + y: the diagonal pairs vanish and
        // the mixed pairs fail the cone feasibility test, so the set is empty
        let o2 = figure_one_ordering();
        let f2 = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(spoly_set(&f2, &f2, &o2).is_empty());
        // and indeed no witness monomial exists up to a generous bound
        assert!(spoly_pair_certificate(&f2, &f2, &ev(&[1, 0]), &ev(&[0, 1]), &o2, 12).is_none());
        // while the classical pair of lead positions is certified at once
        let cert = spoly_pair_certificate(&f, &g, &ev(&[0, 1]), &ev(&[1, 1]), &o, 8);
        assert!(cert.is_some());
    }

    #[test]
    fn reducing_set_examples() {
        // semigroup ordering: always {1}
        let o = ds(2);
        let f = HPolynomial::homogenize(&poly(2, &[(&[2, 0], 1), (&[0, 3], 5)])).unwrap();
        assert_eq!(reducing_set(&f, &[], &o), vec![ev(&[0, 0])]);
        // figure-one ordering, f = x + y: one witness per cone branch
        let o2 = figure_one_ordering();
        let f2 = HPolynomial::homogenize(&poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])).unwrap();
        assert_eq!(reducing_set(&f2, &[], &o2), vec![ev(&[0, 0]), ev(&[0, 1])]);
    }

    #[test]
    fn standard_basis_examples() {
        let budget = EngineBudget::default();
        // monomial generators stay untouched
        let o = ds(2);
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 1], 1)])],
            o.clone(),
        )
        .unwrap();
        let basis = standard_basis(&g, &budget).unwrap();
        assert_eq!(basis.polys, g.polys);
        // the cusp Jacobian {2x, 3y^2} is already standard under ds
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 2)]), poly(2, &[(&[0, 2], 3)])],
            o.clone(),
        )
        .unwrap();
        let basis = standard_basis(&g, &budget).unwrap();
        assert_eq!(basis.polys, g.polys);
        // same generators under the cusp's Newton ordering: staircase {1, y}
        let newton = crate::polytope::ordering_from_polyhedron(
            &crate::polytope::newton_polyhedron(&poly(2, &[(&[2, 0], 1), (&[0, 3], 1)])).unwrap(),
        )
        .unwrap();
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 2)]), poly(2, &[(&[0, 2], 3)])],
            newton.clone(),
        )
        .unwrap();
        let basis = standard_basis(&g, &budget).unwrap();
        let staircase = crate::oracles::staircase_enumerate(&basis.polys, &newton, 8).unwrap();
        assert_eq!(staircase, vec![ev(&[0, 0]), ev(&[0, 1])]);
    }

    #[test]
    fn interreduce_examples() {
        let o = ds(2);
        // {x, x^2} -> {x}
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[2, 0], 1)])],
            o.clone(),
        )
        .unwrap();
        let r = interreduce(&g).unwrap();
        assert_eq!(r.polys, vec![poly(2, &[(&[1, 0], 1)])]);
        // already interreduced stays put
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 2], 1)])],
            o.clone(),
        )
        .unwrap();
        let r = interreduce(&g).unwrap();
        assert_eq!(r.polys.len(), 2);
        // {x, x^2 + x y} under global degrevlex: the second member's lead
        // set sits inside L({x}), so it is removable (re-checked through
        // lm_set_member inside interreduce)
        let dp = NewtonOrdering::from_semigroup(&SemigroupOrdering::DegRevLex, 2).unwrap();
        let g = BasisCandidate::new(
            vec![
                poly(2, &[(&[1, 0], 1)]),
                poly(2, &[(&[2, 0], 1), (&[1, 1], 1)]),
            ],
            dp,
        )
        .unwrap();
        let r = interreduce(&g).unwrap();
        assert_eq!(r.polys, vec![poly(2, &[(&[1, 0], 1)])]);
    }

    #[test]
    fn engine_rejects_uncertified_orderings() {
        // mixed-sign forms with a nonzero shift: no certificate applies
        let o = NewtonOrdering::new(
            vec![form(&[1, -1]), form(&[-1, 1])],
            vec![rat(1), rat(1)],
            SemigroupOrdering::DegRevLex,
        )
        .unwrap();
        assert!(!o.classify().certified());
        assert!(BasisCandidate::new(vec![poly(2, &[(&[1, 0], 1)])], o).is_err());
    }
}
