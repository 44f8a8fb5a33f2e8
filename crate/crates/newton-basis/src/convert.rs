//! Zero-dimensional standard-basis conversion between local orderings:
//! a monomial-ideal floor below the highest corner, the staircase partition,
//! exact Gaussian elimination of the coefficient matrix with the columns
//! sorted under the target ordering, and reassembly of the target basis.

use crate::arith::{minimal_monomial_generators, ExpVec, HPolynomial, Int, Polynomial, Rat};
use crate::cones::{self, MonomialCone};
use crate::engine::{
    lm_set_member, lm_set_witness, normal_form, BasisCandidate, BudgetTracker, EngineBudget,
};
use crate::error::{Error, Result};
use crate::orderings::NewtonOrdering;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering as CmpOrd;
use std::collections::BTreeMap;

/// Monomial-ideal floor `Z` inside the ideal, together with the partition of
/// the finitely many monomials outside it into staircase (`N`, outside the
/// lead set) and lead monomials (`H`, inside it).
#[derive(Clone, Debug)]
pub struct StaircaseDecomposition {
    pub z_gen: Vec<ExpVec>,
    /// `N`: monomials outside `Z` and outside `L(I)`; its cardinality is the
    /// quotient dimension.
    pub staircase: Vec<ExpVec>,
    /// `H`: monomials outside `Z` but inside `L(I)`.
    pub lead_monomials: Vec<ExpVec>,
}

/// Coefficient matrix over a finite monomial list, sparse rows of rationals.
#[derive(Clone, Debug)]
pub struct EliminationMatrix {
    pub column_labels: Vec<ExpVec>,
    /// Sparse rows, each sorted by column index.
    pub rows: Vec<Vec<(usize, Rat)>>,
}

impl EliminationMatrix {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.column_labels.len()
    }

    /// Pivot (leftmost nonzero) column of each row.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().filter_map(|r| r.first().map(|e| e.0)).collect()
    }
}

/// Certified scan of the monomials outside `L(G)`.
///
/// Shells of increasing total degree are classified through lead-set
/// membership. With `K` the maximal degree of a cone semigroup generator and
/// `D0` the maximal degree of a shifted-cone module generator, any monomial
/// above a fully-member window of `K` consecutive degrees past `D0` peels
/// down, inside its cone, to a member in the window, so the scan may stop.
pub(crate) fn staircase_complement(
    polys: &[Polynomial],
    o: &NewtonOrdering,
    budget: &EngineBudget,
) -> Result<Vec<ExpVec>> {
    let n = o.n_vars();
    let (k_step, d_floor) = if o.is_single_form() {
        (1u32, 0u32)
    } else {
        let mut k = 1u64;
        let mut d0 = 0u64;
        for idx in 0..o.forms().len() {
            let hilbert = cones::algebra_generators(&MonomialCone::unshifted(o, idx));
            for g in &hilbert.generators {
                k = k.max(g.degree());
            }
            let module = cones::module_generators(&MonomialCone::shifted(o, idx));
            for g in &module.generators {
                d0 = d0.max(g.degree());
            }
        }
        (k as u32, d0 as u32)
    };
    let mut nonmembers: Vec<ExpVec> = Vec::new();
    let mut full_member_run = 0u32;
    for d in 0..=budget.max_staircase_degree {
        let mut all_member = true;
        let mut handle = |m: &ExpVec| {
            if !lm_set_member(polys, o, m) {
                nonmembers.push(m.clone());
                all_member = false;
            }
        };
        cones::for_each_of_degree(n, d, &mut handle);
        full_member_run = if all_member { full_member_run + 1 } else { 0 };
        if full_member_run >= k_step && d >= d_floor + k_step {
            return Ok(nonmembers);
        }
    }
    Err(Error::NotZeroDimensional)
}

/// Generators of the monomial ideal of all monomials below the highest
/// corner: `{ m | w(m) > w(tau) }` together with the equal-weight monomials
/// preceding `tau`, where `tau` is the smallest monomial outside `L(G)`.
/// Requires strictly positive forms so that the set is closed under
/// multiplication. For plain degree orderings the weight shells are degree
/// shells and this reproduces the corner-degree generating set.
pub fn compute_zgen(g: &BasisCandidate, budget: &EngineBudget) -> Result<Vec<ExpVec>> {
    Ok(staircase_partition(g, budget)?.z_gen)
}

/// Full floor-and-partition data for a standard basis of a zero-dimensional
/// ideal under a certified local ordering.
pub fn staircase_partition(
    g: &BasisCandidate,
    budget: &EngineBudget,
) -> Result<StaircaseDecomposition> {
    let o = &g.ordering;
    if !o.classify().is_local {
        return Err(Error::WrongOrderingKind { needed: "local" });
    }
    if !o.all_forms_strictly_positive() {
        return Err(Error::WrongOrderingKind {
            needed: "strictly positive local",
        });
    }
    let n = o.n_vars();
    let complement = staircase_complement(&g.polys, o, budget)?;
    if complement.is_empty() {
        // the ideal contains a unit: Z = (1), nothing outside it
        return Ok(StaircaseDecomposition {
            z_gen: vec![ExpVec::zero(n)],
            staircase: Vec::new(),
            lead_monomials: Vec::new(),
        });
    }
    let tau = complement
        .iter()
        .min_by(|a, b| o.cmp(a, b))
        .expect("nonempty")
        .clone();
    let corner_weight = o.weight(&tau);
    let in_z = |m: &ExpVec| -> bool {
        let w = o.weight(m);
        w > corner_weight || (w == corner_weight && o.cmp(m, &tau) == CmpOrd::Less)
    };
    // strictly positive forms make weights strictly increasing along every
    // variable, so once a whole degree shell lies in Z all later shells do
    let mut stop_degree = None;
    for d in 0..=budget.max_staircase_degree {
        let mut all_in = true;
        let mut handle = |m: &ExpVec| {
            if !in_z(m) {
                all_in = false;
            }
        };
        cones::for_each_of_degree(n, d, &mut handle);
        if all_in {
            stop_degree = Some(d);
            break;
        }
    }
    let stop = stop_degree.ok_or(Error::NotZeroDimensional)?;
    let mut z_gen: Vec<ExpVec> = Vec::new();
    let mut outside: Vec<ExpVec> = Vec::new();
    let mut handle = |m: &ExpVec| {
        if in_z(m) {
            let is_generator = (0..n).all(|i| {
                if m.get(i) == 0 {
                    return true;
                }
                let mut parent = m.clone();
                parent.0[i] -= 1;
                !in_z(&parent)
            });
            if is_generator {
                z_gen.push(m.clone());
            }
        } else {
            outside.push(m.clone());
        }
    };
    cones::for_each_up_to_degree(n, stop, &mut handle);
    let mut staircase: Vec<ExpVec> = Vec::new();
    let mut lead_monomials: Vec<ExpVec> = Vec::new();
    for m in outside {
        if lm_set_member(&g.polys, o, &m) {
            lead_monomials.push(m);
        } else {
            staircase.push(m);
        }
    }
    if staircase.len() != complement.len() {
        return Err(Error::Internal(
            "staircase does not match the lead-set complement".into(),
        ));
    }
    Ok(StaircaseDecomposition {
        z_gen,
        staircase,
        lead_monomials,
    })
}

// ---------------------------------------------------------------------------
// exact sparse reduced row echelon form over the rationals
// ---------------------------------------------------------------------------

/// Sparse integer row, sorted by column, kept content-free.
#[derive(Clone, Debug)]
struct IntRow(Vec<(usize, Int)>);

impl IntRow {
    fn normalize(&mut self) {
        let mut g = Int::zero();
        for (_, v) in &self.0 {
            g = g.gcd(v);
        }
        if !g.is_zero() && g > Int::one() {
            for (_, v) in &mut self.0 {
                *v = &*v / &g;
            }
        }
        // sign convention: leading entry positive
        if let Some((_, lead)) = self.0.first() {
            if lead.is_negative() {
                for (_, v) in &mut self.0 {
                    *v = -v.clone();
                }
            }
        }
    }

    fn coeff_at(&self, col: usize) -> Option<&Int> {
        self.0
            .binary_search_by_key(&col, |e| e.0)
            .ok()
            .map(|i| &self.0[i].1)
    }

    /// `self := pivot_coeff * self - own_coeff * pivot_row`, eliminating
    /// `col` from `self`.
    fn eliminate(&mut self, col: usize, pivot: &IntRow) {
        let own = self.coeff_at(col).expect("column present").clone();
        let pivot_coeff = pivot.coeff_at(col).expect("pivot column present").clone();
        let mut out: Vec<(usize, Int)> = Vec::with_capacity(self.0.len() + pivot.0.len());
        let mut a = self.0.iter().peekable();
        let mut b = pivot.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some((ca, va)), None) => {
                    out.push((*ca, &pivot_coeff * va));
                    a.next();
                }
                (None, Some((cb, vb))) => {
                    out.push((*cb, -(&own * vb)));
                    b.next();
                }
                (Some((ca, va)), Some((cb, vb))) => {
                    if ca < cb {
                        out.push((*ca, &pivot_coeff * va));
                        a.next();
                    } else if cb < ca {
                        out.push((*cb, -(&own * vb)));
                        b.next();
                    } else {
                        let v = &pivot_coeff * va - &own * vb;
                        if !v.is_zero() {
                            out.push((*ca, v));
                        }
                        a.next();
                        b.next();
                    }
                }
            }
        }
        self.0 = out;
        self.normalize();
    }
}

/// Exact reduced row echelon form. Rows are combined over the integers with
/// content stripping; the result has a leading 1 in each pivot column and
/// zeros elsewhere in those columns. Errors when a row is a combination of
/// the others.
pub fn gauss_eliminate(matrix: &EliminationMatrix) -> Result<EliminationMatrix> {
    let mut denom_cleared: Vec<IntRow> = Vec::new();
    for row in &matrix.rows {
        let mut l = Int::one();
        for (_, v) in row {
            l = l.lcm(v.denom());
        }
        let scale = Rat::from_integer(l);
        let mut ir = IntRow(
            row.iter()
                .map(|(c, v)| (*c, (v * &scale).to_integer()))
                .collect(),
        );
        ir.normalize();
        denom_cleared.push(ir);
    }
    // forward pass: reduce each row's leading entries against known pivots
    let mut pivot_of_col: BTreeMap<usize, usize> = BTreeMap::new();
    let mut reduced: Vec<IntRow> = Vec::new();
    for mut row in denom_cleared {
        loop {
            let Some(&(lead_col, _)) = row.0.first() else {
                return Err(Error::RankDeficient);
            };
            match pivot_of_col.get(&lead_col) {
                Some(&owner) => {
                    let pivot = reduced[owner].clone();
                    row.eliminate(lead_col, &pivot);
                }
                None => {
                    pivot_of_col.insert(lead_col, reduced.len());
                    reduced.push(row);
                    break;
                }
            }
        }
    }
    // backward pass: clear each pivot column from every other row, rightmost
    // pivot first so cleared columns are never reintroduced
    let pivot_cols: Vec<usize> = pivot_of_col.keys().rev().cloned().collect();
    for &col in &pivot_cols {
        let owner = pivot_of_col[&col];
        let pivot = reduced[owner].clone();
        for (i, row) in reduced.iter_mut().enumerate() {
            if i != owner && row.coeff_at(col).is_some() {
                row.eliminate(col, &pivot);
            }
        }
    }
    // order rows by pivot column and rescale pivots to 1
    let mut rows: Vec<Vec<(usize, Rat)>> = Vec::new();
    for (&_col, &owner) in &pivot_of_col {
        let row = &reduced[owner];
        let lead = row.0.first().expect("pivot row nonempty").1.clone();
        rows.push(
            row.0
                .iter()
                .map(|(c, v)| (*c, Rat::new(v.clone(), lead.clone())))
                .collect(),
        );
    }
    Ok(EliminationMatrix {
        column_labels: matrix.column_labels.clone(),
        rows,
    })
}

/// Result of a standard-basis conversion.
#[derive(Clone, Debug)]
pub struct ConversionResult {
    pub basis: BasisCandidate,
    /// Monomials outside the target lead set: the non-pivot column labels.
    pub staircase: Vec<ExpVec>,
    pub z_generators: Vec<ExpVec>,
    pub matrix_rows: usize,
    pub matrix_cols: usize,
}

/// Past this many matrix columns the floor is densified with normal-form
/// certified monomials before eliminating.
const AUGMENT_THRESHOLD: usize = 400;
const AUGMENT_NF_STEPS: u64 = 100_000;

/// Converts a standard basis of a zero-dimensional ideal between certified
/// local orderings using linear algebra only.
///
/// The coefficient rows of lead-monomial witnesses over the monomials
/// outside the floor `Z` are eliminated with the columns sorted decreasingly
/// under the target ordering; the pivot rows, together with the generators
/// of `Z`, form a standard basis for the target ordering, and the non-pivot
/// columns are exactly the target staircase.
pub fn standard_basis_change(
    g: &BasisCandidate,
    target: &NewtonOrdering,
    budget: &EngineBudget,
) -> Result<ConversionResult> {
    let o = &g.ordering;
    if !target.classify().is_local {
        return Err(Error::WrongOrderingKind { needed: "local" });
    }
    if !target.classify().certified() {
        return Err(Error::UncertifiedOrdering);
    }
    if o.n_vars() != target.n_vars() {
        return Err(Error::VariableMismatch {
            left: o.n_vars(),
            right: target.n_vars(),
        });
    }
    let decomposition = staircase_partition(g, budget)?;
    let mut z_gen = decomposition.z_gen;
    let staircase = decomposition.staircase;
    let mut lead_monomials = decomposition.lead_monomials;

    // Optional floor densification: a monomial of H that itself lies in the
    // ideal (its normal form vanishes) can move below the floor, shrinking
    // the matrix. Any monomial ideal inside the ideal containing a power of
    // the maximal ideal is a valid floor.
    if staircase.len() + lead_monomials.len() > AUGMENT_THRESHOLD {
        let basis_h: Vec<HPolynomial> = g
            .polys
            .iter()
            .map(HPolynomial::homogenize)
            .collect::<Result<_>>()?;
        let mut extra: Vec<ExpVec> = Vec::new();
        let mut by_degree = lead_monomials.clone();
        by_degree.sort_by_key(|m| (m.degree(), m.clone()));
        for m in by_degree {
            if extra.iter().any(|z| z.divides(&m)) {
                continue;
            }
            let mono = HPolynomial::homogenize(&Polynomial::term(
                o.n_vars(),
                m.clone(),
                Rat::one(),
            ))?;
            let mut tracker = BudgetTracker::new(AUGMENT_NF_STEPS);
            match normal_form(&mono, &basis_h, o, &mut tracker) {
                Ok(r) if r.is_zero() => extra.push(m),
                _ => {}
            }
        }
        if !extra.is_empty() {
            let mut all = z_gen.clone();
            all.extend(extra);
            z_gen = minimal_monomial_generators(&all);
            lead_monomials.retain(|m| !z_gen.iter().any(|z| z.divides(m)));
        }
    }

    // witness rows: for each lead monomial pick the first witness multiple,
    // normalise its lead coefficient to 1 and drop everything inside Z
    let reduce_mod_z = |p: &Polynomial, z: &[ExpVec]| -> Polynomial {
        Polynomial::from_terms(
            p.n_vars(),
            p.terms()
                .filter(|(m, _)| !z.iter().any(|g| g.divides(m)))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    };
    let mut rows_by_lead: BTreeMap<ExpVec, Polynomial> = BTreeMap::new();
    for alpha in &lead_monomials {
        let (gi, multiplier) = lm_set_witness(&g.polys, o, alpha)
            .ok_or_else(|| Error::Internal("lead monomial lost its witness".into()))?;
        let shifted = g.polys[gi].mul_monomial(&multiplier);
        let lc = shifted
            .coeff(alpha)
            .ok_or_else(|| Error::Internal("witness multiple misses its lead".into()))?
            .clone();
        let monic = shifted.scale(&(Rat::one() / lc));
        rows_by_lead.insert(alpha.clone(), reduce_mod_z(&monic, &z_gen));
    }
    // cosmetic normalisation: clear the other lead monomials from each row,
    // smallest lead first so referenced rows are already clean
    let mut order: Vec<ExpVec> = lead_monomials.clone();
    order.sort_by(|a, b| o.cmp(a, b));
    for idx in 0..order.len() {
        let alpha = order[idx].clone();
        let row = rows_by_lead[&alpha].clone();
        let mut cleaned = row.clone();
        for (m, c) in row.terms() {
            if *m != alpha && rows_by_lead.contains_key(m) {
                let other = rows_by_lead[m].clone();
                cleaned = cleaned.try_sub(&other.scale(c))?;
            }
        }
        rows_by_lead.insert(alpha, cleaned);
    }

    // columns: everything outside Z, sorted decreasingly under the target
    let mut columns: Vec<ExpVec> = staircase
        .iter()
        .chain(lead_monomials.iter())
        .cloned()
        .collect();
    columns.sort_by(|a, b| target.cmp(b, a));
    let col_index: BTreeMap<&ExpVec, usize> =
        columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<Vec<(usize, Rat)>> = order
        .iter()
        .map(|alpha| {
            let mut entries: Vec<(usize, Rat)> = rows_by_lead[alpha]
                .terms()
                .map(|(m, c)| (col_index[m], c.clone()))
                .collect();
            entries.sort_by_key(|e| e.0);
            entries
        })
        .collect();
    let matrix = EliminationMatrix {
        column_labels: columns,
        rows,
    };
    let eliminated = gauss_eliminate(&matrix)?;

    let pivot_set: Vec<usize> = eliminated.pivots();
    let target_staircase: Vec<ExpVec> = (0..eliminated.n_cols())
        .filter(|c| !pivot_set.contains(c))
        .map(|c| eliminated.column_labels[c].clone())
        .collect();
    if target_staircase.len() != staircase.len() {
        return Err(Error::Internal(
            "quotient dimension changed under conversion".into(),
        ));
    }
    let mut polys: Vec<Polynomial> = eliminated
        .rows
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                target.n_vars(),
                row.iter()
                    .map(|(c, v)| (eliminated.column_labels[*c].clone(), v.clone())),
            )
        })
        .collect();
    for z in &z_gen {
        polys.push(Polynomial::term(target.n_vars(), z.clone(), Rat::one()));
    }
    let matrix_rows = eliminated.n_rows();
    let matrix_cols = eliminated.n_cols();
    Ok(ConversionResult {
        basis: BasisCandidate::new(polys, target.clone())?,
        staircase: target_staircase,
        z_generators: z_gen,
        matrix_rows,
        matrix_cols,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::engine::standard_basis;
    use crate::orderings::SemigroupOrdering;

    fn ev(e: &[u32]) -> ExpVec {
        ExpVec::new(e.to_vec())
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(n, terms.iter().map(|(m, c)| (ev(m), rat(*c))))
    }

    fn ds(n: usize) -> NewtonOrdering {
        NewtonOrdering::from_semigroup(&SemigroupOrdering::NegDegRevLex, n).unwrap()
    }

    fn cusp_newton() -> NewtonOrdering {
        crate::polytope::ordering_from_polyhedron(
            &crate::polytope::newton_polyhedron(&poly(2, &[(&[2, 0], 1), (&[0, 3], 1)])).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn zgen_examples() {
        let budget = EngineBudget::default();
        // G = {x, y^2}: corner y, Z = (x^2, x y, y^2), N = {1, y}, H = {x}
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 1)]), poly(2, &[(&[0, 2], 1)])],
            ds(2),
        )
        .unwrap();
        let d = staircase_partition(&g, &budget).unwrap();
        assert_eq!(d.z_gen, vec![ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
        assert_eq!(d.staircase, vec![ev(&[0, 0]), ev(&[0, 1])]);
        assert_eq!(d.lead_monomials, vec![ev(&[1, 0])]);
        // G = all monomials of degree 2: Z is generated by that shell
        let g = BasisCandidate::new(
            vec![
                poly(2, &[(&[2, 0], 1)]),
                poly(2, &[(&[1, 1], 1)]),
                poly(2, &[(&[0, 2], 1)]),
            ],
            ds(2),
        )
        .unwrap();
        let d = staircase_partition(&g, &budget).unwrap();
        assert_eq!(d.z_gen, vec![ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
        assert_eq!(d.staircase.len() + d.lead_monomials.len(), 3);
    }

    #[test]
    fn gauss_examples() {
        // identity block stays put
        let m = EliminationMatrix {
            column_labels: vec![ev(&[1, 0]), ev(&[0, 1])],
            rows: vec![vec![(0, rat(1))], vec![(1, rat(1))]],
        };
        let r = gauss_eliminate(&m).unwrap();
        assert_eq!(r.rows, vec![vec![(0, rat(1))], vec![(1, rat(1))]]);
        // [[1,1],[0,1]] reduces to the identity
        let m = EliminationMatrix {
            column_labels: vec![ev(&[1, 0]), ev(&[0, 1])],
            rows: vec![vec![(0, rat(1)), (1, rat(1))], vec![(1, rat(1))]],
        };
        let r = gauss_eliminate(&m).unwrap();
        assert_eq!(r.rows, vec![vec![(0, rat(1))], vec![(1, rat(1))]]);
        // dependent rows are rejected
        let m = EliminationMatrix {
            column_labels: vec![ev(&[1, 0]), ev(&[0, 1])],
            rows: vec![
                vec![(0, rat(1)), (1, rat(2))],
                vec![(0, rat(2)), (1, rat(4))],
            ],
        };
        assert!(gauss_eliminate(&m).is_err());
    }

    #[test]
    fn gauss_preserves_row_space() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..50 {
            let k = rng.gen_range(1..4usize);
            let cols = k + rng.gen_range(1..4usize);
            let labels: Vec<ExpVec> = (0..cols).map(|i| ev(&[i as u32, 0])).collect();
            // random full-rank-ish rows; retry when rank drops
            let rows: Vec<Vec<(usize, Rat)>> = (0..k)
                .map(|i| {
                    let mut r: Vec<(usize, Rat)> = vec![(i, rat(1))];
                    for c in k..cols {
                        let v = rng.gen_range(-3..=3);
                        if v != 0 {
                            r.push((c, rat(v)));
                        }
                    }
                    r.sort_by_key(|e| e.0);
                    r
                })
                .collect();
            let m = EliminationMatrix {
                column_labels: labels,
                rows,
            };
            let r = gauss_eliminate(&m).unwrap();
            // mutual containment of row spaces via dense elimination
            let dense = |mat: &EliminationMatrix| -> Vec<Vec<Rat>> {
                mat.rows
                    .iter()
                    .map(|row| {
                        let mut d = vec![Rat::zero(); mat.n_cols()];
                        for (c, v) in row {
                            d[*c] = v.clone();
                        }
                        d
                    })
                    .collect()
            };
            let reduce_against = |mut v: Vec<Rat>, basis: &Vec<Vec<Rat>>| -> bool {
                for b in basis {
                    let lead = b.iter().position(|x| !x.is_zero()).unwrap();
                    if !v[lead].is_zero() {
                        let f = v[lead].clone() / b[lead].clone();
                        for i in 0..v.len() {
                            v[i] = &v[i] - &(&f * &b[i]);
                        }
                    }
                }
                v.iter().all(|x| x.is_zero())
            };
            let a = dense(&m);
            let b = dense(&r);
            for row in &a {
                assert!(reduce_against(row.clone(), &b));
            }
            for row in &b {
                assert!(reduce_against(row.clone(), &a));
            }
        }
    }

    #[test]
    fn conversion_is_idempotent_on_the_same_ordering() {
        let budget = EngineBudget::default();
        let o = ds(2);
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 2)]), poly(2, &[(&[0, 2], 3)])],
            o.clone(),
        )
        .unwrap();
        let basis = standard_basis(&g, &budget).unwrap();
        let conv = standard_basis_change(&basis, &o, &budget).unwrap();
        // same staircase, hence the same lead-monomial data
        assert_eq!(conv.staircase.len(), 2);
        let complement = staircase_complement(&conv.basis.polys, &o, &budget).unwrap();
        assert_eq!(complement.len(), 2);
    }

    #[test]
    fn cusp_jacobian_conversion() {
        let budget = EngineBudget::default();
        let g = BasisCandidate::new(
            vec![poly(2, &[(&[1, 0], 2)]), poly(2, &[(&[0, 2], 3)])],
            ds(2),
        )
        .unwrap();
        let basis = standard_basis(&g, &budget).unwrap();
        let newton = cusp_newton();
        let conv = standard_basis_change(&basis, &newton, &budget).unwrap();
        let mut staircase = conv.staircase.clone();
        staircase.sort();
        assert_eq!(staircase, vec![ev(&[0, 0]), ev(&[0, 1])]);
        // the converted set is a standard basis for the target ordering:
        // its lead set complement matches
        let complement =
            staircase_complement(&conv.basis.polys, &newton, &budget).unwrap();
        assert_eq!(complement.len(), 2);
    }

    #[test]
    fn round_trip_preserves_lead_sets() {
        let budget = EngineBudget::default();
        // D4-like jacobian {3x^2 + y^2, 2xy}
        let g = BasisCandidate::new(
            vec![
                poly(2, &[(&[2, 0], 3), (&[0, 2], 1)]),
                poly(2, &[(&[1, 1], 2)]),
            ],
            ds(2),
        )
        .unwrap();
        let basis = standard_basis(&g, &budget).unwrap();
        let newton = cusp_newton();
        let there = standard_basis_change(&basis, &newton, &budget).unwrap();
        let back = standard_basis_change(&there.basis, &ds(2), &budget).unwrap();
        let before = staircase_partition(&basis, &budget).unwrap();
        let after = staircase_partition(&back.basis, &budget).unwrap();
        let mut a = before.staircase.clone();
        let mut b = after.staircase.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
