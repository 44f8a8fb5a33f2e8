//! Rational polyhedral cone machinery attached to a Newton ordering: the
//! monomial cones of each linear form, generators of their affine semigroups,
//! and module generators of shifted cones, optionally restricted to the
//! lead-monomial set of a fixed polynomial.
//!
//! All generator computations are bounded lattice enumerations whose stop
//! bound is certified, not heuristic. For a pointed rational cone `C` with
//! primitive ray generators `r_1, ..., r_k`, every irreducible lattice point
//! lies in the ray zonotope `{ sum t_i r_i | 0 <= t_i <= 1 }`, so semigroup
//! generators have total degree at most `sum_i |r_i|`. A polyhedron `P` with
//! recession cone `C` decomposes as `P = conv(vertices) + C`, so any lattice
//! point of degree above `max_vertex_degree + sum_i |r_i|` exceeds the
//! zonotope part in some ray coordinate and splits off a semigroup generator;
//! minimal module generators therefore sit below that bound.

use crate::arith::{ExpVec, Int, Polynomial, Rat};
use crate::orderings::NewtonOrdering;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering as CmpOrd;
use std::collections::BTreeSet;

/// Cone of monomials on which one linear form of a Newton ordering attains
/// the weight minimum. `shifted` selects between `M(l)` (minimum of `l(m)`)
/// and `M_delta(l)` (minimum of `l(m + delta)`).
#[derive(Clone, Copy)]
pub struct MonomialCone<'a> {
    pub ordering: &'a NewtonOrdering,
    pub form_index: usize,
    pub shifted: bool,
}

impl<'a> MonomialCone<'a> {
    pub fn unshifted(ordering: &'a NewtonOrdering, form_index: usize) -> Self {
        MonomialCone {
            ordering,
            form_index,
            shifted: false,
        }
    }

    pub fn shifted(ordering: &'a NewtonOrdering, form_index: usize) -> Self {
        MonomialCone {
            ordering,
            form_index,
            shifted: true,
        }
    }

    /// Membership by attainment: ties put a monomial into several cones.
    pub fn contains(&self, m: &ExpVec) -> bool {
        let value = self.ordering.form_value(self.form_index, m, self.shifted);
        let weight = if self.shifted {
            self.ordering.weight(m)
        } else {
            self.ordering.weight_unshifted(m)
        };
        value == weight
    }
}

/// Generators of `M(l)` as an affine semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeAlgebraBasis {
    pub generators: Vec<ExpVec>,
}

/// Generators of a shifted cone (or a restriction of it) as a module over
/// the semigroup `M(l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeModuleBasis {
    pub generators: Vec<ExpVec>,
}

// ---------------------------------------------------------------------------
// exact linear algebra helpers (dimensions are tiny: n <= 4)
// ---------------------------------------------------------------------------

/// Unique solution of a square rational system, `None` if singular.
pub(crate) fn solve_square(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..n {
                    a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                }
                b[r] = &b[r] - &(&factor * &b[col]);
            }
        }
    }
    Some(b)
}

/// Basis vector of the kernel of `rows`, provided the kernel has dimension
/// exactly one.
fn kernel_vector(rows: &[Vec<Rat>], n: usize) -> Option<Vec<Rat>> {
    let mut mat: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][col].recip();
        for j in col..n {
            mat[r][j] = &mat[r][j] * &inv;
        }
        for i in 0..mat.len() {
            if i != r && !mat[i][col].is_zero() {
                let factor = mat[i][col].clone();
                for j in col..n {
                    mat[i][j] = &mat[i][j] - &(&factor * &mat[r][j]);
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    if n - pivot_cols.len() != 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![Rat::zero(); n];
    v[free] = Rat::one();
    for (row, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = -mat[row][free].clone();
    }
    Some(v)
}

/// Integer-primitive representative of a rational direction.
fn primitive_direction(v: &[Rat]) -> Vec<Int> {
    let mut denom_lcm = Int::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v
        .iter()
        .map(|x| (x * Rat::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut g = Int::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.iter().map(|x| x / &g).collect()
}

// ---------------------------------------------------------------------------
// integer polyhedra: rows mean  coeffs . x >= rhs
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub(crate) struct IntPolyhedron {
    n: usize,
    rows: Vec<(Vec<Int>, Int)>,
}

impl IntPolyhedron {
    fn new(n: usize) -> Self {
        IntPolyhedron { n, rows: Vec::new() }
    }

    /// Adds `coeffs . x >= rhs` (or `>` when strict), clearing denominators.
    /// Over integer points a strict inequality tightens to `>= floor(rhs)+1`,
    /// so membership tests stay exact.
    fn push_rational_row(&mut self, coeffs: &[Rat], rhs: &Rat, strict: bool) {
        let mut denom_lcm: Int = rhs.denom().clone();
        for c in coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let scale = Rat::from_integer(denom_lcm);
        let mut row: Vec<Int> = coeffs.iter().map(|c| (c * &scale).to_integer()).collect();
        let mut b = (rhs * &scale).to_integer();
        if strict {
            b += 1;
        }
        // primitive normal, rhs tightened to the lattice
        let mut g = Int::zero();
        for x in &row {
            g = g.gcd(x);
        }
        if !g.is_zero() && g > Int::one() {
            row = row.iter().map(|x| x / &g).collect();
            b = Rat::new(b, g).ceil().to_integer();
        }
        self.rows.push((row, b));
    }

    /// Drops duplicate normals, keeping the tightest right-hand side.
    fn dedupe(&mut self) {
        self.rows.sort();
        let mut out: Vec<(Vec<Int>, Int)> = Vec::new();
        for (row, b) in self.rows.drain(..) {
            match out.last_mut() {
                Some((prev, pb)) if *prev == row => {
                    if b > *pb {
                        *pb = b;
                    }
                }
                _ => out.push((row, b)),
            }
        }
        self.rows = out;
    }

    fn contains(&self, p: &ExpVec) -> bool {
        self.rows.iter().all(|(row, b)| {
            let mut acc = Int::zero();
            for (c, e) in row.iter().zip(&p.0) {
                if *e != 0 {
                    acc += c * Int::from(*e);
                }
            }
            acc >= *b
        })
    }

    fn feasible_point(&self, p: &[Rat]) -> bool {
        self.rows.iter().all(|(row, b)| {
            let acc: Rat = row
                .iter()
                .zip(p)
                .map(|(c, x)| Rat::from_integer(c.clone()) * x)
                .sum();
            acc >= Rat::from_integer(b.clone())
        })
    }

    /// All vertices, by exhausting size-n subsets of active constraints.
    fn vertices(&self) -> Vec<Vec<Rat>> {
        let n = self.n;
        let m = self.rows.len();
        let mut found: BTreeSet<Vec<Rat>> = BTreeSet::new();
        let mut subset: Vec<usize> = (0..n).collect();
        if m < n {
            return Vec::new();
        }
        loop {
            let a: Vec<Vec<Rat>> = subset
                .iter()
                .map(|&i| {
                    self.rows[i]
                        .0
                        .iter()
                        .map(|c| Rat::from_integer(c.clone()))
                        .collect()
                })
                .collect();
            let b: Vec<Rat> = subset
                .iter()
                .map(|&i| Rat::from_integer(self.rows[i].1.clone()))
                .collect();
            if let Some(x) = solve_square(a, b) {
                if self.feasible_point(&x) {
                    found.insert(x);
                }
            }
            // next combination
            let mut i = n;
            loop {
                if i == 0 {
                    return found.into_iter().collect();
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
        }
    }
}

/// Calls `f` on every exponent vector of total degree exactly `d`.
pub(crate) fn for_each_of_degree(n: usize, d: u32, f: &mut impl FnMut(&ExpVec)) {
    fn rec(buf: &mut Vec<u32>, pos: usize, rest: u32, f: &mut impl FnMut(&ExpVec)) {
        if pos + 1 == buf.len() {
            buf[pos] = rest;
            f(&ExpVec(buf.clone()));
            return;
        }
        for e in 0..=rest {
            buf[pos] = e;
            rec(buf, pos + 1, rest - e, f);
        }
    }
    let mut buf = vec![0u32; n];
    if n == 0 {
        return;
    }
    rec(&mut buf, 0, d, f);
}

/// Calls `f` on every exponent vector of total degree at most `bound`, in
/// increasing degree.
pub(crate) fn for_each_up_to_degree(n: usize, bound: u32, f: &mut impl FnMut(&ExpVec)) {
    for d in 0..=bound {
        for_each_of_degree(n, d, f);
    }
}

// ---------------------------------------------------------------------------
// rays and generators
// ---------------------------------------------------------------------------

/// Constraint normals of `C(l) = { x >= 0, (l' - l)(x) >= 0 }`.
fn cone_constraints(o: &NewtonOrdering, idx: usize) -> Vec<Vec<Rat>> {
    let n = o.n_vars();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        let mut r = vec![Rat::zero(); n];
        r[i] = Rat::one();
        rows.push(r);
    }
    let l = &o.forms()[idx];
    for (j, lp) in o.forms().iter().enumerate() {
        if j == idx {
            continue;
        }
        rows.push(
            lp.coeffs()
                .iter()
                .zip(l.coeffs())
                .map(|(a, b)| a - b)
                .collect(),
        );
    }
    rows
}

/// Primitive integer generators of the extreme rays of `C(l)`.
pub fn cone_rays(o: &NewtonOrdering, form_index: usize) -> Vec<ExpVec> {
    let n = o.n_vars();
    let rows = cone_constraints(o, form_index);
    let feasible = |v: &[Rat]| {
        rows.iter()
            .all(|r| r.iter().zip(v).map(|(c, x)| c * x).sum::<Rat>() >= Rat::zero())
    };
    let mut rays: BTreeSet<Vec<u32>> = BTreeSet::new();
    let k = n.saturating_sub(1);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let chosen: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].clone()).collect();
        if let Some(v) = kernel_vector(&chosen, n) {
            for cand in [v.clone(), v.iter().map(|x| -x.clone()).collect::<Vec<_>>()] {
                if cand.iter().all(|x| x.is_zero()) {
                    continue;
                }
                if feasible(&cand) {
                    let prim = primitive_direction(&cand);
                    if prim.iter().all(|x| !x.is_negative()) {
                        let as_u32: Vec<u32> = prim
                            .iter()
                            .map(|x| u32::try_from(x).expect("ray coordinate fits in u32"))
                            .collect();
                        if as_u32.iter().any(|&x| x != 0) {
                            rays.insert(as_u32);
                        }
                    }
                }
            }
        }
        if k == 0 {
            break;
        }
        let m = rows.len();
        let mut i = k;
        let mut done = false;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if subset[i] != i + m - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
        if done {
            break;
        }
    }
    rays.into_iter().map(ExpVec::new).collect()
}

/// Minimal generating set of the affine semigroup `M(l)`.
///
/// Enumerates cone lattice points in increasing degree up to the ray
/// zonotope bound and keeps the indecomposable ones.
pub fn algebra_generators(cone: &MonomialCone) -> ConeAlgebraBasis {
    assert!(!cone.shifted, "algebra generators live in the unshifted cone");
    let o = cone.ordering;
    let n = o.n_vars();
    let rays = cone_rays(o, cone.form_index);
    let bound: u64 = rays.iter().map(|r| r.degree()).sum();
    let mut gens: Vec<ExpVec> = Vec::new();
    let mut handle = |p: &ExpVec| {
        if p.is_zero() || !cone.contains(p) {
            return;
        }
        let decomposable = gens.iter().any(|g| {
            p.checked_sub(g)
                .map(|rest| rest.is_zero() || cone.contains(&rest))
                .unwrap_or(false)
        });
        if !decomposable {
            gens.push(p.clone());
        }
    };
    for_each_up_to_degree(n, bound as u32, &mut handle);
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    ConeAlgebraBasis { generators: gens }
}

/// Polyhedron of the shifted cone `M_delta(l)` in multiplier coordinates.
fn shifted_cone_polyhedron(o: &NewtonOrdering, idx: usize) -> IntPolyhedron {
    let n = o.n_vars();
    let mut p = IntPolyhedron::new(n);
    for i in 0..n {
        let mut r = vec![Rat::zero(); n];
        r[i] = Rat::one();
        p.push_rational_row(&r, &Rat::zero(), false);
    }
    let l = &o.forms()[idx];
    let l_delta = l.eval_point(o.shift());
    for (j, lp) in o.forms().iter().enumerate() {
        if j == idx {
            continue;
        }
        let coeffs: Vec<Rat> = lp
            .coeffs()
            .iter()
            .zip(l.coeffs())
            .map(|(a, b)| a - b)
            .collect();
        // l'(x + delta) - l(x + delta) >= 0
        let rhs = &l_delta - lp.eval_point(o.shift());
        p.push_rational_row(&coeffs, &rhs, false);
    }
    p.dedupe();
    p
}

/// Minimal lattice points of `poly` viewed as generators of the module it
/// spans over the semigroup generated by `hilbert`.
fn minimal_points(poly: &IntPolyhedron, hilbert: &[ExpVec], rays: &[ExpVec], n: usize) -> Vec<ExpVec> {
    let verts = poly.vertices();
    if verts.is_empty() {
        return Vec::new();
    }
    let vert_deg: u64 = verts
        .iter()
        .map(|v| {
            let s: Rat = v.iter().sum();
            let c = s.ceil().to_integer();
            u64::try_from(&c).unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    let bound = vert_deg + rays.iter().map(|r| r.degree()).sum::<u64>();
    let mut gens: Vec<ExpVec> = Vec::new();
    let mut handle = |p: &ExpVec| {
        if !poly.contains(p) {
            return;
        }
        let decomposable = hilbert.iter().any(|g| {
            p.checked_sub(g)
                .map(|rest| poly.contains(&rest))
                .unwrap_or(false)
        });
        if !decomposable {
            gens.push(p.clone());
        }
    };
    for_each_up_to_degree(n, bound as u32, &mut handle);
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens
}

/// Module generators of `M_delta(l)` over `M(l)`.
pub fn module_generators(cone: &MonomialCone) -> ConeModuleBasis {
    assert!(cone.shifted, "module generators live in the shifted cone");
    let o = cone.ordering;
    let rays = cone_rays(o, cone.form_index);
    let hilbert = algebra_generators(&MonomialCone::unshifted(o, cone.form_index)).generators;
    let poly = shifted_cone_polyhedron(o, cone.form_index);
    let gens = minimal_points(&poly, &hilbert, &rays, o.n_vars());
    ConeModuleBasis { generators: gens }
}

/// Module generators of `L({f}) ∩ M_delta(l)` over `M(l)`, returned together
/// with the support position of `f` at which each generator is the lead.
///
/// For a fixed lead position `a` of `f`, the multipliers `b` with
/// `LM(x^b f) = x^(b+a)` and `b + a` in the shifted cone form the lattice
/// points of one rational polyhedron: the tie-break between support
/// positions does not depend on `b`, so each competing position contributes
/// affine inequalities (strict where the tie-break loses). Each polyhedron
/// has recession cone `C(l)` and is enumerated with the certified bound.
pub fn restricted_module_generators(
    o: &NewtonOrdering,
    form_index: usize,
    f: &Polynomial,
) -> Vec<(ExpVec, ExpVec)> {
    assert!(!f.is_zero(), "lead-monomial set of the zero polynomial");
    let n = o.n_vars();
    let l = &o.forms()[form_index];
    let l_shift = l.eval_point(o.shift());
    let rays = cone_rays(o, form_index);
    let hilbert = algebra_generators(&MonomialCone::unshifted(o, form_index)).generators;
    let unshifted = MonomialCone::unshifted(o, form_index);

    let support: Vec<&ExpVec> = f.support().collect();
    let mut raw: Vec<(ExpVec, ExpVec)> = Vec::new();
    for a in &support {
        let mut poly = IntPolyhedron::new(n);
        for i in 0..n {
            let mut r = vec![Rat::zero(); n];
            r[i] = Rat::one();
            poly.push_rational_row(&r, &Rat::zero(), false);
        }
        let l_a = l.eval(a) + &l_shift;
        for (j, lp) in o.forms().iter().enumerate() {
            let coeffs: Vec<Rat> = lp
                .coeffs()
                .iter()
                .zip(l.coeffs())
                .map(|(c, d)| c - d)
                .collect();
            // membership of b + a in the shifted cone of l
            if j != form_index {
                let rhs = &l_a - (lp.eval(a) + lp.eval_point(o.shift()));
                poly.push_rational_row(&coeffs, &rhs, false);
            }
        }
        for a_prime in &support {
            if a_prime == a {
                continue;
            }
            // ties are resolved position-wise: x^(b+a') < x^(b+a) under the
            // tie-break iff x^a' < x^a
            let tie_ok = o.tiebreak().cmp(a_prime, a) == CmpOrd::Less;
            for lp in o.forms() {
                let coeffs: Vec<Rat> = lp
                    .coeffs()
                    .iter()
                    .zip(l.coeffs())
                    .map(|(c, d)| c - d)
                    .collect();
                // l'(b + a' + delta) >= l(b + a + delta), strict if the
                // tie-break would not favour position a
                let rhs = &l_a - (lp.eval(a_prime) + lp.eval_point(o.shift()));
                poly.push_rational_row(&coeffs, &rhs, !tie_ok);
            }
        }
        poly.dedupe();
        for b in minimal_points(&poly, &hilbert, &rays, n) {
            raw.push((b.add(a), (*a).clone()));
        }
    }

    // prune generators reachable from another one through M(l)
    raw.sort_by_key(|(g, _)| (g.degree(), g.clone()));
    let mut kept: Vec<(ExpVec, ExpVec)> = Vec::new();
    for (g, a) in raw {
        let dominated = kept.iter().any(|(h, _)| {
            g != *h
                && g.checked_sub(h)
                    .map(|rest| rest.is_zero() || unshifted.contains(&rest))
                    .unwrap_or(false)
        });
        let duplicate = kept.iter().any(|(h, _)| *h == g);
        if !dominated && !duplicate {
            kept.push((g, a));
        }
    }
    kept
}
